//! Generators over involutions and chord diagrams, predicate filters, and
//! the exact counting formulas with brute-force counterparts.
//!
//! Streams yield in lexicographic order of one-line notation so fixtures
//! are stable. All counting is exact integer arithmetic; no floating point.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::QuasiDiagram;
use crate::error::{Error, Result};
use crate::group;
use crate::homology;
use crate::perm::Permutation;

/// Backtracking generator over the involutions of degree `n` (optionally
/// fixed-point free), yielding in lexicographic one-line order.
pub struct Involutions {
    n: usize,
    allow_fixed: bool,
    /// `images[p - 1]` is 0 while `p` is unassigned.
    images: Vec<usize>,
    /// Pairing decisions `(p, q)` with `p <= q`; `p == q` is a fixed point.
    stack: Vec<(usize, usize)>,
    started: bool,
    done: bool,
}

impl Involutions {
    fn new(n: usize, allow_fixed: bool) -> Self {
        Involutions {
            n,
            allow_fixed,
            images: vec![0; n],
            stack: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn first_free(&self) -> Option<usize> {
        self.images.iter().position(|&img| img == 0).map(|k| k + 1)
    }

    fn assign(&mut self, p: usize, q: usize) {
        self.images[p - 1] = q;
        self.images[q - 1] = p;
        self.stack.push((p, q));
    }

    fn unassign(&mut self) -> Option<(usize, usize)> {
        let (p, q) = self.stack.pop()?;
        self.images[p - 1] = 0;
        self.images[q - 1] = 0;
        Some((p, q))
    }

    /// Smallest legal partner for `p` strictly above `current`.
    fn next_choice(&self, p: usize, current: usize) -> Option<usize> {
        let lower = if current < p && self.allow_fixed {
            // First choice overall: pair p with itself when allowed.
            return Some(p);
        } else {
            current.max(p) + 1
        };
        (lower..=self.n).find(|&q| self.images[q - 1] == 0)
    }

    /// Greedily assigns every remaining point its smallest partner.
    fn descend(&mut self) -> bool {
        while let Some(p) = self.first_free() {
            match self.next_choice(p, 0) {
                Some(q) => self.assign(p, q),
                None => return false,
            }
        }
        true
    }

    fn advance(&mut self) -> bool {
        while let Some((p, current)) = self.unassign() {
            if let Some(q) = self.next_choice(p, current) {
                self.assign(p, q);
                if self.descend() {
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for Involutions {
    type Item = QuasiDiagram;

    fn next(&mut self) -> Option<QuasiDiagram> {
        if self.done {
            return None;
        }
        let produced = if !self.started {
            self.started = true;
            self.descend() || self.advance()
        } else {
            self.advance()
        };
        if !produced {
            self.done = true;
            return None;
        }
        let alpha = Permutation::from_images(self.images.clone()).expect("bijection");
        Some(QuasiDiagram::new(alpha).expect("involution by construction"))
    }
}

/// All involutions of degree `n`; the stream length is the telephone number
/// `T(n)`.
pub fn involutions(n: usize) -> Involutions {
    Involutions::new(n, true)
}

/// All perfect matchings of degree `n` (`(n-1)!!` of them for even `n`,
/// nothing for odd `n`).
pub fn chord_diagrams(n: usize) -> Involutions {
    Involutions::new(n, false)
}

/// Telephone numbers by the recurrence `T(n) = T(n-1) + (n-1)·T(n-2)`.
pub fn telephone(n: usize) -> u64 {
    let (mut prev, mut here) = (1u64, 1u64);
    for k in 2..=n {
        let next = here + (k as u64 - 1) * prev;
        prev = here;
        here = next;
    }
    here
}

pub fn double_factorial_odd(n: usize) -> u64 {
    // (n-1)!! for even n.
    (1..n as u64).step_by(2).product()
}

/// `ε_g = (4g)! / (4^g (2g+1)!)`, the number of maximal chord diagrams of
/// degree `4g`; `ε_0 = 1`. Evaluated exactly in 128-bit arithmetic.
pub fn epsilon(g: usize) -> u64 {
    let numerator: u128 = (1..=4 * g as u128).product();
    let denominator: u128 = 4u128.pow(g as u32) * (1..=2 * g as u128 + 1).product::<u128>();
    debug_assert_eq!(numerator % denominator, 0);
    u64::try_from(numerator / denominator).expect("fits for the supported degrees")
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut value = 1u128;
    for j in 0..k.min(n - k) {
        value = value * (n - j) as u128 / (j + 1) as u128;
    }
    value
}

/// A closed-form count paired with its brute-force counterpart; the two are
/// asserted equal in tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountPair {
    pub formula: u64,
    pub brute: u64,
}

/// Maximal chord diagrams of degree `n`: `ε_{n/4}` when `4 | n`, else zero.
pub fn count_maximal_chord(n: usize) -> CountPair {
    let formula = if n.is_multiple_of(4) && n > 0 {
        epsilon(n / 4)
    } else {
        0
    };
    let brute = chord_diagrams(n).filter(|d| d.is_maximal()).count() as u64;
    CountPair { formula, brute }
}

/// Maximal quasi-diagrams of degree `n = 4t + q`: the binomial sum
/// `Σ C(n, 4i) ε_i` over `0 <= i <= t`.
pub fn count_maximal_quasi(n: usize) -> CountPair {
    let t = n / 4;
    let formula: u128 = (0..=t)
        .map(|i| binomial(n, 4 * i) * epsilon(i) as u128)
        .sum();
    let brute = involutions(n).filter(|d| d.is_maximal()).count() as u64;
    CountPair {
        formula: u64::try_from(formula).expect("fits for the supported degrees"),
        brute,
    }
}

/// Named diagram classes usable as stream filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    /// Every involution; the no-op filter.
    All,
    Chord,
    Maximal,
    Regular,
    #[serde(rename = "rotreg", alias = "rotatably-regular")]
    RotatablyRegular,
    MaximalChord,
    KoszulExists,
}

impl Predicate {
    pub fn matches(&self, d: &QuasiDiagram) -> bool {
        match self {
            Predicate::All => true,
            Predicate::Chord => d.is_chord_diagram(),
            Predicate::Maximal => d.is_maximal(),
            Predicate::Regular => homology::is_regular(d),
            Predicate::RotatablyRegular => group::is_rotatably_regular(d),
            Predicate::MaximalChord => d.is_chord_diagram() && d.is_maximal(),
            Predicate::KoszulExists => {
                homology::gldim(d) == homology::ExtendedNat::Finite(d.degree().saturating_sub(1))
                    && d.degree() >= 1
            }
        }
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Predicate::All),
            "chord" => Ok(Predicate::Chord),
            "maximal" => Ok(Predicate::Maximal),
            "regular" => Ok(Predicate::Regular),
            "rotreg" | "rotatably-regular" => Ok(Predicate::RotatablyRegular),
            "maximal-chord" => Ok(Predicate::MaximalChord),
            "koszul-exists" => Ok(Predicate::KoszulExists),
            other => Err(Error::domain(format!("unknown predicate `{other}`"))),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Predicate::All => "all",
            Predicate::Chord => "chord",
            Predicate::Maximal => "maximal",
            Predicate::Regular => "regular",
            Predicate::RotatablyRegular => "rotreg",
            Predicate::MaximalChord => "maximal-chord",
            Predicate::KoszulExists => "koszul-exists",
        };
        write!(f, "{name}")
    }
}

/// Filters a diagram stream by a named class.
pub fn filter<I: Iterator<Item = QuasiDiagram>>(
    stream: I,
    predicate: Predicate,
) -> impl Iterator<Item = QuasiDiagram> {
    stream.filter(move |d| predicate.matches(d))
}

/// Class sizes at one degree. `maximal_chord` is zero unless `4 | n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountsTable {
    pub n: usize,
    pub involutions: u64,
    pub chord: u64,
    pub maximal: u64,
    pub maximal_chord: u64,
    pub regular: u64,
    pub rotreg: u64,
}

impl CountsTable {
    pub const CSV_HEADER: &'static str = "n,involutions,chord,maximal,maximal_chord,regular,rotreg";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.involutions,
            self.chord,
            self.maximal,
            self.maximal_chord,
            self.regular,
            self.rotreg
        )
    }
}

/// Counts every class in one sweep over the involutions of degree `n`.
pub fn counts_table(n: usize) -> CountsTable {
    let mut table = CountsTable {
        n,
        involutions: 0,
        chord: 0,
        maximal: 0,
        maximal_chord: 0,
        regular: 0,
        rotreg: 0,
    };
    for d in involutions(n) {
        table.involutions += 1;
        let chord = d.is_chord_diagram();
        let maximal = d.is_maximal();
        if chord {
            table.chord += 1;
        }
        if maximal {
            table.maximal += 1;
        }
        if chord && maximal {
            table.maximal_chord += 1;
        }
        if homology::is_regular(&d) {
            table.regular += 1;
        }
        if group::is_rotatably_regular(&d) {
            table.rotreg += 1;
        }
    }
    table
}
