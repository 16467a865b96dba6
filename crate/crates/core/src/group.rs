//! The dihedral group acting on quasi-diagrams by conjugation: rotations,
//! the reflection, rotatable regularity, orbit partitions and the
//! rotation/dual closure test.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::diagram::QuasiDiagram;
use crate::error::{Error, Result};
use crate::homology;
use crate::perm::Permutation;

/// Which symmetry group an orbit computation runs under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryGroup {
    Rotations,
    Dihedral,
}

impl SymmetryGroup {
    /// The group elements, deduplicated and sorted. Rotations are the `n`
    /// powers of `ζ_n`; the dihedral group adds `γ·ζ^l`.
    pub fn elements(&self, n: usize) -> Result<Vec<Permutation>> {
        if n < 1 {
            return Err(Error::domain("group action requires degree >= 1"));
        }
        let zeta = Permutation::n_cycle(n)?;
        let mut set = BTreeSet::new();
        let mut power = Permutation::identity(n);
        for _ in 0..n {
            if *self == SymmetryGroup::Dihedral {
                let gamma = Permutation::reflection_gamma(n)?;
                set.insert(gamma.compose(&power)?);
            }
            set.insert(power.clone());
            power = zeta.compose(&power)?;
        }
        Ok(set.into_iter().collect())
    }
}

/// Conjugation action `g · α = g α g⁻¹`. `g` must belong to the dihedral
/// group of the diagram's degree; conjugation by arbitrary permutations
/// lives on [`Permutation`] instead.
pub fn act(g: &Permutation, d: &QuasiDiagram) -> Result<QuasiDiagram> {
    if g.degree() != d.degree() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: d.degree(),
        });
    }
    let dihedral = SymmetryGroup::Dihedral.elements(d.degree())?;
    if !dihedral.contains(g) {
        return Err(Error::domain(format!(
            "{g} is not a rotation or reflection of degree {}",
            d.degree()
        )));
    }
    QuasiDiagram::new(d.alpha().conjugate_by(g)?)
}

/// The l-th rotation `ζ^l α ζ^{-l}`; `l` is reduced mod n and may be
/// negative.
pub fn rotation(d: &QuasiDiagram, l: i64) -> QuasiDiagram {
    let n = d.degree();
    if n == 0 {
        return d.clone();
    }
    let zeta = Permutation::n_cycle(n).expect("n >= 1");
    let alpha = d
        .alpha()
        .conjugate_by(&zeta.power(l.rem_euclid(n as i64)))
        .expect("equal degrees");
    QuasiDiagram::new(alpha).expect("conjugate of an involution")
}

/// Rotatable regularity by the structural criterion: the diagram is maximal,
/// or every face contains at least one isolated point.
pub fn is_rotatably_regular(d: &QuasiDiagram) -> bool {
    if d.is_maximal() {
        return true;
    }
    d.faces()
        .cycles()
        .iter()
        .all(|face| face.iter().any(|&p| d.is_isolated(p)))
}

/// Rotatable regularity by its definition: every rotation is regular.
/// Test-support routine; must agree with [`is_rotatably_regular`].
pub fn is_rotatably_regular_by_definition(d: &QuasiDiagram) -> bool {
    (0..d.degree() as i64).all(|l| homology::is_regular(&rotation(d, l)))
}

/// The orbit of `d` under the chosen group, sorted canonically.
pub fn orbit(d: &QuasiDiagram, group: SymmetryGroup) -> Result<Vec<QuasiDiagram>> {
    let mut set = BTreeSet::new();
    for g in group.elements(d.degree())? {
        set.insert(QuasiDiagram::new(d.alpha().conjugate_by(&g)?)?);
    }
    Ok(set.into_iter().collect())
}

/// A partition of a group-closed set of diagrams into orbits. Orbits are
/// listed by their lexicographically least element, which doubles as the
/// canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub group: SymmetryGroup,
    pub orbits: Vec<Vec<QuasiDiagram>>,
}

impl OrbitReport {
    pub fn representatives(&self) -> Vec<&QuasiDiagram> {
        self.orbits.iter().map(|o| &o[0]).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }
}

/// Partitions `diagrams` into orbits. The input must be of one degree and
/// closed under the action; a diagram whose orbit leaves the set is a
/// domain error.
pub fn orbit_partition(diagrams: &[QuasiDiagram], group: SymmetryGroup) -> Result<OrbitReport> {
    let input: BTreeSet<&QuasiDiagram> = diagrams.iter().collect();
    if let Some(first) = diagrams.first() {
        let n = first.degree();
        if diagrams.iter().any(|d| d.degree() != n) {
            return Err(Error::domain("orbit partition over mixed degrees"));
        }
    }
    let mut assigned: BTreeSet<&QuasiDiagram> = BTreeSet::new();
    let mut orbits = Vec::new();
    for d in &input {
        if assigned.contains(*d) {
            continue;
        }
        let orb = orbit(d, group)?;
        for member in &orb {
            match input.get(member) {
                Some(m) => {
                    assigned.insert(m);
                }
                None => {
                    return Err(Error::domain(format!(
                        "set is not closed under the action: {member} is missing"
                    )));
                }
            }
        }
        orbits.push(orb);
    }
    orbits.sort();
    Ok(OrbitReport { group, orbits })
}

/// Outcome of closing a singleton under rotations and Koszul duals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureResult {
    /// Every dual along the way exists; the closed set is returned sorted.
    Closed(Vec<QuasiDiagram>),
    /// The first diagram, in breadth-first order from the seed, whose dual
    /// does not exist.
    DualFails(QuasiDiagram),
}

/// Iteratively closes `{d}` under rotation-by-one and the Koszul dual.
/// Breadth-first from the seed, so the failure witness is reproducible.
pub fn closure_under_rot_dual(d: &QuasiDiagram) -> ClosureResult {
    let mut seen: BTreeSet<QuasiDiagram> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(d.clone());
    queue.push_back(d.clone());
    while let Some(current) = queue.pop_front() {
        let info = homology::koszul_info(&current);
        let Some(dual) = info.dual else {
            return ClosureResult::DualFails(current);
        };
        for next in [rotation(&current, 1), dual] {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    ClosureResult::Closed(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(text: &str, n: usize) -> QuasiDiagram {
        QuasiDiagram::parse(text, n).unwrap()
    }

    #[test]
    fn act_matches_the_degree_five_product() {
        let zeta5 = Permutation::n_cycle(5).unwrap();
        assert_eq!(
            act(&zeta5, &d("(1 3)(2 4)", 5)).unwrap(),
            d("(2 4)(3 5)", 5)
        );
        let q = d("(1 4)(2 6)", 6);
        assert_eq!(act(&Permutation::identity(6), &q).unwrap(), q);
        let gamma4 = Permutation::reflection_gamma(4).unwrap();
        assert_eq!(act(&gamma4, &d("(1 3)", 4)).unwrap(), d("(2 4)", 4));
    }

    #[test]
    fn act_rejects_non_dihedral_elements() {
        let g = Permutation::parse("(1 2)", 4).unwrap();
        let err = act(&g, &d("(1 3)", 4)).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        let err = act(&Permutation::identity(3), &d("(1 3)", 4)).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { .. }));
    }

    #[test]
    fn rotation_fixtures() {
        let c = d("(1 3)(2 4)", 4);
        assert_eq!(rotation(&c, 1), c);
        assert_eq!(rotation(&d("(1 3)", 4), 1), d("(2 4)", 4));
        let q = d("(1 5)(2 3)", 6);
        assert_eq!(rotation(&q, 0), q);
        assert_eq!(rotation(&q, 6), q);
        assert_eq!(rotation(&q, -1), rotation(&q, 5));
    }

    #[test]
    fn dihedral_elements_are_deduplicated() {
        assert_eq!(SymmetryGroup::Dihedral.elements(1).unwrap().len(), 1);
        assert_eq!(SymmetryGroup::Dihedral.elements(2).unwrap().len(), 2);
        assert_eq!(SymmetryGroup::Dihedral.elements(5).unwrap().len(), 10);
        assert_eq!(SymmetryGroup::Rotations.elements(5).unwrap().len(), 5);
    }

    #[test]
    fn rotatably_regular_set_of_degree_four() {
        let expected = ["id", "(2 4)", "(1 3)", "(1 3)(2 4)"];
        let mut found = Vec::new();
        for q in crate::enumerate::involutions(4) {
            if is_rotatably_regular(&q) {
                found.push(q.to_string());
            }
            assert_eq!(
                is_rotatably_regular(&q),
                is_rotatably_regular_by_definition(&q),
                "criterion vs definition on {q}"
            );
        }
        assert_eq!(found, expected);
    }

    #[test]
    fn orbits_of_degree_four_diagrams() {
        let orb = orbit(&d("(1 3)", 4), SymmetryGroup::Dihedral).unwrap();
        // Canonical order is lexicographic on one-line forms, so (2 4) first.
        assert_eq!(orb, vec![d("(2 4)", 4), d("(1 3)", 4)]);
        let orb = orbit(&d("(1 3)(2 4)", 4), SymmetryGroup::Dihedral).unwrap();
        assert_eq!(orb, vec![d("(1 3)(2 4)", 4)]);
    }

    #[test]
    fn orbit_partition_requires_closure() {
        let set = vec![d("(1 3)", 4)];
        assert!(orbit_partition(&set, SymmetryGroup::Dihedral).is_err());
        let set = vec![d("(1 3)", 4), d("(2 4)", 4)];
        let report = orbit_partition(&set, SymmetryGroup::Dihedral).unwrap();
        assert_eq!(report.sizes(), vec![2]);
        assert_eq!(report.representatives(), vec![&d("(2 4)", 4)]);
    }

    #[test]
    fn closure_fixtures() {
        assert_eq!(
            closure_under_rot_dual(&d("(1 3)(2 4)", 4)),
            ClosureResult::Closed(vec![d("(1 3)(2 4)", 4)])
        );
        assert_eq!(
            closure_under_rot_dual(&QuasiDiagram::trivial(2)),
            ClosureResult::Closed(vec![QuasiDiagram::trivial(2)])
        );
        match closure_under_rot_dual(&d("(1 3)(2 4)", 5)) {
            ClosureResult::DualFails(witness) => {
                assert_eq!(witness, d("(1 4)(3 5)", 5));
            }
            other => panic!("expected a dual failure, got {other:?}"),
        }
    }
}
