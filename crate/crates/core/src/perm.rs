//! Exact arithmetic on permutations of `{1..n}` with cycle-notation
//! parsing and printing.
//!
//! Composition convention, fixed repo-wide: `p.compose(&q)` applies `q`
//! first and `p` second, i.e. `p.compose(&q).apply(i) == p.apply(q.apply(i))`.
//! A written product like `ζα` therefore transcribes as
//! `zeta.compose(&alpha)`.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1..n}` onto itself. Points are 1-based in every public
/// interface. Immutable once constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// `images[i]` is the image of point `i + 1`.
    images: Vec<usize>,
}

impl Permutation {
    /// The identity permutation of degree `n` (degree 0 is the empty
    /// permutation).
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its one-line form: `images[i]` is the image
    /// of point `i + 1`. Rejects anything that is not a bijection of `{1..n}`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img < 1 || img > n {
                return Err(Error::domain(format!("image {img} out of range 1..={n}")));
            }
            if seen[img - 1] {
                return Err(Error::domain(format!("image {img} repeated")));
            }
            seen[img - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The n-cycle `ζ_n = (1 2 … n)`.
    pub fn n_cycle(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::domain("n-cycle requires n >= 1"));
        }
        let images = (1..=n).map(|i| i % n + 1).collect();
        Ok(Permutation { images })
    }

    /// The reflection `γ ∈ D_n` that interchanges sides 1 and n, i.e.
    /// `i ↦ n + 1 - i`. For `n = 1` this is the identity.
    pub fn reflection_gamma(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::domain("reflection requires n >= 1"));
        }
        let images = (1..=n).map(|i| n + 1 - i).collect();
        Ok(Permutation { images })
    }

    /// The cycle `ϑ = (i, i+1, …, m)` as a permutation of degree `m`,
    /// fixing the points below `i`.
    pub fn theta(i: usize, m: usize) -> Result<Self> {
        if i < 1 || i > m {
            return Err(Error::domain(format!(
                "theta position {i} out of range 1..={m}"
            )));
        }
        let images = (1..=m)
            .map(|p| {
                if p < i {
                    p
                } else if p == m {
                    i
                } else {
                    p + 1
                }
            })
            .collect();
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// One-line form: the slice `[p(1), p(2), …, p(n)]`. Lexicographic order
    /// on this slice is the canonical order used for orbit representatives.
    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img == i + 1)
    }

    pub fn is_involution(&self) -> bool {
        self.involution_witness().is_none()
    }

    /// A point `i` with `p(p(i)) != i`, if any.
    pub fn involution_witness(&self) -> Option<usize> {
        (1..=self.degree()).find(|&i| self.apply(self.apply(i)) != i)
    }

    pub fn inverse(&self) -> Self {
        let n = self.degree();
        let mut images = vec![0; n];
        for i in 1..=n {
            images[self.apply(i) - 1] = i;
        }
        Permutation { images }
    }

    /// `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let images = (1..=self.degree())
            .map(|i| self.apply(other.apply(i)))
            .collect();
        Ok(Permutation { images })
    }

    /// `g ∘ self ∘ g⁻¹`, the conjugate of `self` by `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Self> {
        g.compose(self)?.compose(&g.inverse())
    }

    /// `self^k`; `k` may be negative, `k = 0` gives the identity.
    pub fn power(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut exp = k.unsigned_abs();
        let mut result = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.compose(&base).expect("equal degrees");
            }
            base = base.compose(&base).expect("equal degrees");
            exp >>= 1;
        }
        result
    }

    /// Views `self` inside a larger symmetric group, fixing every point
    /// above the current degree.
    pub fn extended(&self, m: usize) -> Result<Self> {
        if m < self.degree() {
            return Err(Error::domain(format!(
                "cannot extend degree {} to smaller degree {m}",
                self.degree()
            )));
        }
        let mut images = self.images.clone();
        images.extend(self.degree() + 1..=m);
        Ok(Permutation { images })
    }

    /// Restricts to `{1..m}`; every point above `m` must be fixed.
    pub fn restricted(&self, m: usize) -> Result<Self> {
        for i in m + 1..=self.degree() {
            if self.apply(i) != i {
                return Err(Error::internal(format!(
                    "restriction to degree {m} drops the moved point {i}"
                )));
            }
        }
        let mut images = self.images.clone();
        images.truncate(m);
        if images.iter().any(|&img| img > m) {
            return Err(Error::internal(format!(
                "restriction to degree {m} is not closed"
            )));
        }
        Ok(Permutation { images })
    }

    /// The complete cycle decomposition, fixed points included, in canonical
    /// form: each cycle starts at its minimum, cycles sorted by minimum.
    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p - 1] {
                seen[p - 1] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            cycles.push(cycle);
        }
        CycleDecomposition { degree: n, cycles }
    }

    /// Builds a permutation of degree `n` from disjoint cycles; points not
    /// mentioned are fixed.
    pub fn from_cycles(cycles: &[Vec<usize>], n: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p < 1 || p > n {
                    return Err(Error::domain(format!("point {p} out of range 1..={n}")));
                }
                if seen[p - 1] {
                    return Err(Error::domain(format!("point {p} repeated across cycles")));
                }
                seen[p - 1] = true;
                images[p - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation (`"id"` or one or more `(a b c)` cycles with
    /// comma or whitespace separators) into a permutation of degree `n`.
    /// The degree is always supplied out of band, never inferred.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        Parser::new(text, n).run()
    }
}

/// Canonical cycle notation. 1-cycles are omitted; the identity prints as
/// `id`. `CycleDecomposition` keeps the 1-cycles, this display does not.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in &self.cycle_decomposition().cycles {
            if cycle.len() < 2 {
                continue;
            }
            write_cycle(f, cycle)?;
            wrote = true;
        }
        if !wrote {
            write!(f, "id")?;
        }
        Ok(())
    }
}

fn write_cycle(f: &mut fmt::Formatter<'_>, cycle: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (k, p) in cycle.iter().enumerate() {
        if k > 0 {
            write!(f, " ")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// A complete product of disjoint cycles: every point of `{1..n}` occurs in
/// exactly one cycle and fixed points appear as explicit 1-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleDecomposition {
    degree: usize,
    /// Canonical: each cycle rotated to begin with its minimum, cycles
    /// sorted ascending by that minimum.
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Multiplies the cycles back together (they are disjoint, so order is
    /// irrelevant).
    pub fn to_permutation(&self) -> Result<Permutation> {
        Permutation::from_cycles(&self.cycles, self.degree)
    }
}

/// Prints every cycle, 1-cycles included: `(1 3 4)(2)(5)`.
impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in &self.cycles {
            write_cycle(f, cycle)?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    degree: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, degree: usize) -> Self {
        Parser {
            text: text.as_bytes(),
            pos: 0,
            degree,
        }
    }

    fn run(mut self) -> Result<Permutation> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(b"id") {
            self.pos += 2;
            self.skip_ws();
            if self.pos != self.text.len() {
                return Err(Error::parse(self.pos, "trailing input after `id`"));
            }
            return Ok(Permutation::identity(self.degree));
        }
        let mut cycles = Vec::new();
        let mut seen = vec![false; self.degree];
        loop {
            self.skip_ws();
            if self.pos == self.text.len() {
                break;
            }
            cycles.push(self.cycle(&mut seen)?);
        }
        if cycles.is_empty() {
            return Err(Error::parse(
                self.pos,
                "expected `id` or at least one cycle",
            ));
        }
        Permutation::from_cycles(&cycles, self.degree)
    }

    fn cycle(&mut self, seen: &mut [bool]) -> Result<Vec<usize>> {
        if self.peek() != Some(b'(') {
            return Err(Error::parse(self.pos, "expected `(`"));
        }
        self.pos += 1;
        let mut points = Vec::new();
        loop {
            self.skip_separators();
            match self.peek() {
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                Some(c) if c.is_ascii_digit() => {
                    let at = self.pos;
                    let p = self.number()?;
                    if p < 1 || p > self.degree {
                        return Err(Error::parse(
                            at,
                            format!("point {p} out of range 1..={}", self.degree),
                        ));
                    }
                    if seen[p - 1] {
                        return Err(Error::parse(at, format!("point {p} repeated")));
                    }
                    seen[p - 1] = true;
                    points.push(p);
                }
                Some(c) if c.is_ascii() => {
                    return Err(Error::parse(
                        self.pos,
                        format!("unexpected character `{}`", c as char),
                    ));
                }
                Some(c) => {
                    return Err(Error::parse(self.pos, format!("unexpected byte 0x{c:02x}")));
                }
                None => return Err(Error::parse(self.pos, "unterminated cycle")),
            }
        }
        if points.is_empty() {
            return Err(Error::parse(self.pos, "empty cycle"));
        }
        Ok(points)
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| Error::parse(start, "number too large"))
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace() || c == b',') {
            self.pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // The written product ζ₄·(13)(24) from the worked four-point example.
        let zeta = Permutation::n_cycle(4).unwrap();
        let alpha = p("(1 3)(2 4)", 4);
        assert_eq!(zeta.compose(&alpha).unwrap(), p("(1 4 3 2)", 4));

        let zeta5 = Permutation::n_cycle(5).unwrap();
        assert_eq!(zeta5.compose(&p("(1 2)(4 5)", 5)).unwrap(), p("(1 3 4)", 5));
    }

    #[test]
    fn compose_with_identity() {
        let q = p("(1 5)(2 3)", 6);
        assert_eq!(q.compose(&Permutation::identity(6)).unwrap(), q);
        assert_eq!(Permutation::identity(6).compose(&q).unwrap(), q);
    }

    #[test]
    fn compose_degree_mismatch() {
        let err = Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn conjugation_matches_product_form() {
        let zeta5 = Permutation::n_cycle(5).unwrap();
        let alpha = p("(1 3)(2 4)", 5);
        let conj = alpha.conjugate_by(&zeta5).unwrap();
        assert_eq!(conj, p("(2 4)(3 5)", 5));
        let by_hand = zeta5
            .compose(&alpha)
            .unwrap()
            .compose(&zeta5.inverse())
            .unwrap();
        assert_eq!(conj, by_hand);
    }

    #[test]
    fn powers_and_inverses() {
        let zeta = Permutation::n_cycle(4).unwrap();
        assert!(zeta.power(4).is_identity());
        assert_eq!(zeta.power(-1), zeta.inverse());
        assert!(Permutation::identity(7).inverse().is_identity());
        assert_eq!(zeta.power(0), Permutation::identity(4));
    }

    #[test]
    fn generator_constructors() {
        assert_eq!(
            Permutation::reflection_gamma(4).unwrap(),
            p("(1 4)(2 3)", 4)
        );
        assert_eq!(
            Permutation::reflection_gamma(5).unwrap(),
            p("(1 5)(2 4)", 5)
        );
        assert!(Permutation::reflection_gamma(1).unwrap().is_identity());
        assert_eq!(Permutation::theta(2, 5).unwrap(), p("(2 3 4 5)", 5));
        assert!(Permutation::n_cycle(1).unwrap().is_identity());
        assert!(Permutation::n_cycle(0).is_err());
    }

    #[test]
    fn gamma_conjugates_zeta_to_its_inverse() {
        for n in 1..=9 {
            let zeta = Permutation::n_cycle(n).unwrap();
            let gamma = Permutation::reflection_gamma(n).unwrap();
            assert!(gamma.compose(&gamma).unwrap().is_identity());
            assert_eq!(zeta.conjugate_by(&gamma).unwrap(), zeta.inverse());
        }
    }

    #[test]
    fn cycle_decomposition_is_complete_and_canonical() {
        let q = p("(1 3 4)", 5);
        let dec = q.cycle_decomposition();
        let expected: &[Vec<usize>] = &[vec![1, 3, 4], vec![2], vec![5]];
        assert_eq!(dec.cycles(), expected);
        assert_eq!(dec.to_string(), "(1 3 4)(2)(5)");
        assert_eq!(dec.to_permutation().unwrap(), q);
    }

    #[test]
    fn parse_and_format() {
        assert!(p("id", 7).is_identity());
        assert_eq!(p("(2 4)(1 3)", 4).to_string(), "(1 3)(2 4)");
        assert_eq!(p("(2,4)(1,3)", 4), p("(2 4) (1 3)", 4));
        assert_eq!(Permutation::identity(5).to_string(), "id");
        assert_eq!(Permutation::parse("id", 0).unwrap().degree(), 0);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match Permutation::parse("(1 9)", 4) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match Permutation::parse("(1 2)(2 3)", 4) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(Permutation::parse("(1 2", 4).is_err());
        assert!(Permutation::parse("1 2", 4).is_err());
        assert!(Permutation::parse("()", 4).is_err());
        assert!(Permutation::parse("", 4).is_err());
        assert!(Permutation::parse("id junk", 4).is_err());
    }

    #[test]
    fn extend_and_restrict() {
        let q = p("(1 3)", 3);
        let ext = q.extended(5).unwrap();
        assert_eq!(ext.apply(4), 4);
        assert_eq!(ext.restricted(3).unwrap(), q);
        assert!(ext.restricted(2).is_err());
    }
}
