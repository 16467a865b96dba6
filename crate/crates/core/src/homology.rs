//! The homological calculus on quasi-diagrams: regularity, the global
//! dimension of the associated algebra, and existence/type of the Koszul
//! dual diagram.
//!
//! Global dimension is computed here from orbit walks of `ζα` and `αζ`
//! (the d/g exponents); the quiver side in [`crate::gentle`] recomputes it
//! from paths with full relations. The two routes are independent and are
//! cross-checked exhaustively in tests.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::QuasiDiagram;
use crate::error::{Error, Result};
use crate::gentle;
use crate::perm::Permutation;

/// A natural number extended with `Infinite` as the maximum element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtendedNat {
    Finite(usize),
    Infinite,
}

impl ExtendedNat {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            ExtendedNat::Finite(k) => Some(*k),
            ExtendedNat::Infinite => None,
        }
    }
}

impl Ord for ExtendedNat {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedNat::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtendedNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(k) => write!(f, "{k}"),
            ExtendedNat::Infinite => write!(f, "inf"),
        }
    }
}

/// JSON form: a plain integer, or the string `"inf"`.
impl Serialize for ExtendedNat {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(k) => serializer.serialize_u64(*k as u64),
            ExtendedNat::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedNat {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(k) => Ok(ExtendedNat::Finite(k as usize)),
            Raw::Str(s) if s == "inf" => Ok(ExtendedNat::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!(
                "expected an integer or \"inf\", got \"{s}\""
            ))),
        }
    }
}

/// Orbits of `ζα` containing no isolated point and not containing 1.
/// The diagram is regular exactly when this is empty.
pub fn script_a(d: &QuasiDiagram) -> Vec<Vec<usize>> {
    obstruction_orbits(d, zeta_alpha(d), 1)
}

/// Orbits of `αζ` containing no isolated point and not containing n.
pub fn script_b(d: &QuasiDiagram) -> Vec<Vec<usize>> {
    obstruction_orbits(d, alpha_zeta(d), d.degree())
}

fn zeta_alpha(d: &QuasiDiagram) -> Permutation {
    let n = d.degree();
    if n == 0 {
        return Permutation::identity(0);
    }
    let zeta = Permutation::n_cycle(n).expect("n >= 1");
    zeta.compose(d.alpha()).expect("equal degrees")
}

fn alpha_zeta(d: &QuasiDiagram) -> Permutation {
    let n = d.degree();
    if n == 0 {
        return Permutation::identity(0);
    }
    let zeta = Permutation::n_cycle(n).expect("n >= 1");
    d.alpha().compose(&zeta).expect("equal degrees")
}

/// Orbits of `walk` avoiding both `anchor` and every isolated point of `d`,
/// as canonical (min-rotated) cycles sorted by minimum.
fn obstruction_orbits(d: &QuasiDiagram, walk: Permutation, anchor: usize) -> Vec<Vec<usize>> {
    walk.cycle_decomposition()
        .cycles()
        .iter()
        .filter(|orbit| !orbit.contains(&anchor) && !orbit.iter().any(|&p| d.is_isolated(p)))
        .cloned()
        .collect()
}

/// Every `ζα`-orbit contains 1 or an isolated point (equivalently, every
/// `αζ`-orbit contains n or an isolated point).
pub fn is_regular(d: &QuasiDiagram) -> bool {
    script_a(d).is_empty()
}

/// Walks `step` from `start` until a point of the stopping set is reached,
/// returning the number of steps. Regularity guarantees termination within
/// `n` steps; the cap turns any violation into an internal error.
fn exponent(
    d: &QuasiDiagram,
    step: &Permutation,
    start: usize,
    extra_stop: usize,
) -> Result<usize> {
    let n = d.degree();
    let mut p = start;
    for k in 1..=n + 1 {
        p = step.apply(p);
        if p == extra_stop || d.is_isolated(p) {
            return Ok(k);
        }
    }
    Err(Error::internal(format!(
        "exponent walk from {start} did not terminate within {n} steps"
    )))
}

/// The exponents `d_i` for every point: `d_{α(n)} = 0`, and otherwise the
/// least `k >= 1` with `(ζα)^k(i)` isolated or equal to `α(n)`.
/// Only defined for regular diagrams.
pub fn d_values(d: &QuasiDiagram) -> Result<BTreeMap<usize, usize>> {
    if !is_regular(d) {
        return Err(Error::NotRegular);
    }
    let n = d.degree();
    let step = zeta_alpha(d);
    let stop = d.alpha().apply(n);
    let mut values = BTreeMap::new();
    for i in 1..=n {
        let v = if i == stop {
            0
        } else {
            exponent(d, &step, i, stop)?
        };
        values.insert(i, v);
    }
    Ok(values)
}

/// The exponents `g_j` for every point: `g_n = 0`, and otherwise the least
/// `k >= 1` with `(αζ)^k(j)` isolated or equal to `n`.
pub fn g_values(d: &QuasiDiagram) -> Result<BTreeMap<usize, usize>> {
    if !is_regular(d) {
        return Err(Error::NotRegular);
    }
    let n = d.degree();
    let step = alpha_zeta(d);
    let mut values = BTreeMap::new();
    for j in 1..=n {
        let v = if j == n { 0 } else { exponent(d, &step, j, n)? };
        values.insert(j, v);
    }
    Ok(values)
}

/// `max { g_j : j isolated or j = α(1) }`.
pub fn gldim_from_g(d: &QuasiDiagram) -> Result<usize> {
    let g = g_values(d)?;
    let anchor = d.alpha().apply(1);
    let max = g
        .iter()
        .filter(|&(&j, _)| j == anchor || d.is_isolated(j))
        .map(|(_, &v)| v)
        .max()
        .ok_or_else(|| Error::internal("empty g-domain"))?;
    Ok(max)
}

/// `max { d_i : i isolated or i = 1 }`.
pub fn gldim_from_d(d: &QuasiDiagram) -> Result<usize> {
    let dv = d_values(d)?;
    let max = dv
        .iter()
        .filter(|&(&i, _)| i == 1 || d.is_isolated(i))
        .map(|(_, &v)| v)
        .max()
        .ok_or_else(|| Error::internal("empty d-domain"))?;
    Ok(max)
}

/// The global dimension of the associated algebra: infinite exactly when the
/// diagram is not regular, otherwise the common value of the two exponent
/// formulas. Debug builds evaluate both and assert agreement.
pub fn gldim(d: &QuasiDiagram) -> ExtendedNat {
    if d.degree() == 0 || !is_regular(d) {
        return if d.degree() == 0 {
            ExtendedNat::Finite(0)
        } else {
            ExtendedNat::Infinite
        };
    }
    let via_g = gldim_from_g(d).expect("regular");
    debug_assert_eq!(
        via_g,
        gldim_from_d(d).expect("regular"),
        "the two exponent formulas disagree on {d}"
    );
    ExtendedNat::Finite(via_g)
}

/// The three shapes a diagram with `gldim = n - 1` can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KoszulType {
    A,
    B,
    C,
}

impl fmt::Display for KoszulType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KoszulType::A => write!(f, "A"),
            KoszulType::B => write!(f, "B"),
            KoszulType::C => write!(f, "C"),
        }
    }
}

/// Existence, type and value of the Koszul dual quasi-diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulInfo {
    pub exists: bool,
    #[serde(rename = "type")]
    pub koszul_type: Option<KoszulType>,
    pub dual: Option<QuasiDiagram>,
}

/// Classifies the shape of a diagram among the three dual-admitting types,
/// independent of any dimension computation.
fn classify(d: &QuasiDiagram) -> Option<KoszulType> {
    let n = d.degree();
    if n == 0 {
        return None;
    }
    let isolated = d.isolated_points();
    if d.is_maximal() {
        if isolated.is_empty() {
            return Some(KoszulType::A);
        }
        if isolated.iter().all(|&i| i == 1 || i == n) {
            return Some(KoszulType::B);
        }
        return None;
    }
    if n >= 2 && d.alpha().apply(1) == n && isolated.len() == 1 && d.face_count() == 2 {
        return Some(KoszulType::C);
    }
    None
}

/// The dual exists iff `gldim = n - 1`; in that case the structural type is
/// one of A/B/C and the dual diagram has the same type.
pub fn koszul_info(d: &QuasiDiagram) -> KoszulInfo {
    let n = d.degree();
    let exists = gldim(d) == ExtendedNat::Finite(n.saturating_sub(1)) && n >= 1;
    let koszul_type = classify(d);
    debug_assert_eq!(
        exists,
        koszul_type.is_some(),
        "type classification and gldim = n-1 disagree on {d}"
    );
    let dual =
        exists.then(|| gentle::koszul_dual_diagram(d).expect("gldim = n - 1 guarantees the dual"));
    KoszulInfo {
        exists,
        koszul_type,
        dual,
    }
}

/// Everything the homological calculus derives from one diagram, in the
/// shape of the published JSON report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub regular: bool,
    pub gldim: ExtendedNat,
    #[serde(rename = "scriptA")]
    pub script_a: Vec<Vec<usize>>,
    #[serde(rename = "scriptB")]
    pub script_b: Vec<Vec<usize>>,
    pub koszul: KoszulInfo,
    /// Exponent maps, present only for regular diagrams. Derived data, not
    /// part of the wire form.
    #[serde(skip)]
    pub d: Option<BTreeMap<usize, usize>>,
    #[serde(skip)]
    pub g: Option<BTreeMap<usize, usize>>,
}

pub fn homology_report(d: &QuasiDiagram) -> HomologyReport {
    let regular = is_regular(d);
    HomologyReport {
        regular,
        gldim: gldim(d),
        script_a: script_a(d),
        script_b: script_b(d),
        koszul: koszul_info(d),
        d: regular.then(|| d_values(d).expect("regular")),
        g: regular.then(|| g_values(d).expect("regular")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(text: &str, n: usize) -> QuasiDiagram {
        QuasiDiagram::parse(text, n).unwrap()
    }

    #[test]
    fn script_a_counts_from_the_four_point_example() {
        assert!(script_a(&d("(1 3)(2 4)", 4)).is_empty());
        let obstructions = script_a(&d("(1 2)", 4));
        assert_eq!(obstructions, vec![vec![2]]);
        assert!(script_a(&QuasiDiagram::trivial(6)).is_empty());
    }

    #[test]
    fn script_b_mirrors_script_a_through_alpha() {
        for (text, n) in [
            ("(1 2)", 4),
            ("(1 3)(2 4)", 4),
            ("(1 2)(4 5)", 5),
            ("id", 3),
        ] {
            let q = d(text, n);
            let a = script_a(&q);
            assert_eq!(a.len(), script_b(&q).len());
            let mut mapped: Vec<Vec<usize>> = a
                .iter()
                .map(|orbit| {
                    let mut img: Vec<usize> = orbit.iter().map(|&p| q.alpha().apply(p)).collect();
                    img.sort_unstable();
                    img
                })
                .collect();
            mapped.sort();
            let mut b: Vec<Vec<usize>> = script_b(&q)
                .iter()
                .map(|orbit| {
                    let mut o = orbit.clone();
                    o.sort_unstable();
                    o
                })
                .collect();
            b.sort();
            assert_eq!(mapped, b);
        }
    }

    #[test]
    fn regularity_fixtures() {
        assert!(is_regular(&d("(1 3)(2 4)", 4)));
        assert!(!is_regular(&d("(1 2)", 4)));
        assert!(is_regular(&d("(1 3)", 3)));
        assert!(!is_regular(&d("(1 2)", 2)));
    }

    #[test]
    fn exponents_match_hand_iteration() {
        let q = d("(1 3)(2 4)", 4);
        assert_eq!(d_values(&q).unwrap()[&1], 3);

        let r = d("(1 4)", 4);
        let dv = d_values(&r).unwrap();
        assert_eq!(dv[&1], 0);
        assert_eq!(dv[&2], 1);
        assert_eq!(dv[&3], 2);

        // g_n = 0 and d_{alpha(n)} = 0 by definition.
        for (text, n) in [("(1 3)(2 4)", 5), ("(1 4)", 4), ("id", 3)] {
            let q = d(text, n);
            assert_eq!(g_values(&q).unwrap()[&n], 0);
            assert_eq!(d_values(&q).unwrap()[&q.alpha().apply(n)], 0);
        }
    }

    #[test]
    fn d_and_g_require_regularity() {
        assert_eq!(d_values(&d("(1 2)", 4)).unwrap_err(), Error::NotRegular);
        assert_eq!(g_values(&d("(1 2)", 4)).unwrap_err(), Error::NotRegular);
    }

    #[test]
    fn gldim_fixtures() {
        assert_eq!(gldim(&d("(1 3)(2 4)", 4)), ExtendedNat::Finite(3));
        assert_eq!(gldim(&d("(1 2)", 4)), ExtendedNat::Infinite);
        assert_eq!(gldim(&d("(1 3)(2 8)(4 6)(5 7)", 8)), ExtendedNat::Finite(7));
        assert_eq!(gldim(&d("(1 3)(2 4)", 5)), ExtendedNat::Finite(4));
        assert_eq!(gldim(&d("(1 7)(2 4)(3 5)", 7)), ExtendedNat::Finite(6));
        assert_eq!(gldim(&QuasiDiagram::trivial(2)), ExtendedNat::Finite(1));
        assert_eq!(gldim(&QuasiDiagram::trivial(1)), ExtendedNat::Finite(0));
    }

    #[test]
    fn koszul_fixtures() {
        let a1 = d("(1 3)(2 8)(4 6)(5 7)", 8);
        let info = koszul_info(&a1);
        assert!(info.exists);
        assert_eq!(info.koszul_type, Some(KoszulType::A));
        assert_eq!(info.dual.as_ref(), Some(&a1));

        let a2 = d("(1 3)(2 4)", 5);
        let info = koszul_info(&a2);
        assert_eq!(info.koszul_type, Some(KoszulType::B));
        assert_eq!(info.dual.unwrap(), d("(2 4)(3 5)", 5));

        let info = koszul_info(&d("(1 2)", 4));
        assert!(!info.exists);
        assert_eq!(info.koszul_type, None);
        assert_eq!(info.dual, None);

        let id2 = QuasiDiagram::trivial(2);
        let info = koszul_info(&id2);
        assert_eq!(info.koszul_type, Some(KoszulType::B));
        assert_eq!(info.dual.unwrap(), id2);
    }

    #[test]
    fn extended_nat_order_and_json() {
        assert!(ExtendedNat::Finite(100) < ExtendedNat::Infinite);
        assert!(ExtendedNat::Finite(2) < ExtendedNat::Finite(3));
        assert_eq!(
            serde_json::to_string(&ExtendedNat::Infinite).unwrap(),
            "\"inf\""
        );
        assert_eq!(serde_json::to_string(&ExtendedNat::Finite(4)).unwrap(), "4");
        let back: ExtendedNat = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(back, ExtendedNat::Infinite);
    }

    #[test]
    fn report_serializes_to_the_published_shape() {
        let report = homology_report(&d("(1 2)", 4));
        let value = serde_json::to_value(&report).unwrap();
        assert_eq!(value["regular"], serde_json::json!(false));
        assert_eq!(value["gldim"], serde_json::json!("inf"));
        assert_eq!(value["scriptA"], serde_json::json!([[2]]));
        assert_eq!(value["koszul"]["exists"], serde_json::json!(false));
        assert_eq!(value["koszul"]["type"], serde_json::Value::Null);
        assert_eq!(value["koszul"]["dual"], serde_json::Value::Null);
    }
}
