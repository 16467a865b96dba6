//! The quiver side of the correspondence: the glued presentation of the
//! associated algebra, an independent global-dimension oracle via paths with
//! full relations, the opposite-quiver dual presentation, and extraction of
//! the Koszul dual quasi-diagram.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::diagram::QuasiDiagram;
use crate::error::{Error, Result};
use crate::homology::ExtendedNat;

/// An arrow `a_i` of the glued quiver, running from the class of point `i`
/// to the class of point `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub i: usize,
    pub src: usize,
    pub tgt: usize,
}

/// The glued quiver with relations. Vertices are the classes of the
/// involution (size 1 or 2), arrows are `a_1..a_{n-1}`, and a relation pair
/// `(i, j)` records that the composite `a_i a_j` vanishes. All relations are
/// quadratic, so pairs of arrow indices are the whole story.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GentlePresentation {
    n: usize,
    /// Classes sorted by minimum element; each class ascending.
    classes: Vec<Vec<usize>>,
    /// `class_of[p - 1]` is the index into `classes` of point `p`.
    class_of: Vec<usize>,
    relations: BTreeSet<(usize, usize)>,
}

impl GentlePresentation {
    /// Builds the presentation of the algebra glued along `d`: classes are
    /// the orbits of the involution, and `a_i a_j` is a relation exactly
    /// when `j = α(i+1)`, `α(i+1) ≠ i+1` and `j <= n-1`.
    pub fn from_diagram(d: &QuasiDiagram) -> Result<Self> {
        let n = d.degree();
        let alpha = d.alpha();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![usize::MAX; n];
        for p in 1..=n {
            if class_of[p - 1] != usize::MAX {
                continue;
            }
            let q = alpha.apply(p);
            let class = if q == p { vec![p] } else { vec![p, q] };
            for &m in &class {
                class_of[m - 1] = classes.len();
            }
            classes.push(class);
        }
        let mut relations = BTreeSet::new();
        for i in 1..n {
            let j = alpha.apply(i + 1);
            if j != i + 1 && j < n {
                relations.insert((i, j));
            }
        }
        let p = GentlePresentation {
            n,
            classes,
            class_of,
            relations,
        };
        p.check_gentle()?;
        Ok(p)
    }

    /// Path length parameter: the quiver has `n - 1` arrows.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Class index of point `p`.
    pub fn class_of(&self, p: usize) -> usize {
        self.class_of[p - 1]
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        (1..self.n)
            .map(|i| Arrow {
                i,
                src: self.class_of(i),
                tgt: self.class_of(i + 1),
            })
            .collect()
    }

    pub fn relations(&self) -> &BTreeSet<(usize, usize)> {
        &self.relations
    }

    /// The arrow that continues a full-relations path after `a_i`, if any:
    /// the unique `j` with `a_i a_j` a relation.
    pub fn successor(&self, i: usize) -> Option<usize> {
        self.relations
            .range((i, 0)..(i + 1, 0))
            .next()
            .map(|&(_, j)| j)
    }

    /// Verifies the defining conditions of a gentle presentation: at most
    /// two arrows in and out of each vertex, and per arrow at most one
    /// relation partner and at most one non-relation partner on each side.
    fn check_gentle(&self) -> Result<()> {
        let t = self.classes.len();
        let mut indeg = vec![0usize; t];
        let mut outdeg = vec![0usize; t];
        for a in self.arrows() {
            outdeg[a.src] += 1;
            indeg[a.tgt] += 1;
        }
        if let Some(v) = (0..t).find(|&v| indeg[v] > 2 || outdeg[v] > 2) {
            return Err(Error::internal(format!(
                "vertex {v} has more than two arrows on one side"
            )));
        }
        for i in 1..self.n {
            let followers: Vec<usize> = self.composable_after(i);
            let rel: Vec<usize> = followers
                .iter()
                .copied()
                .filter(|&j| self.relations.contains(&(i, j)))
                .collect();
            let nonrel = followers.len() - rel.len();
            if rel.len() > 1 || nonrel > 1 {
                return Err(Error::internal(format!(
                    "arrow a{i} violates the unique-continuation conditions"
                )));
            }
        }
        Ok(())
    }

    /// Arrows `a_j` with `src(a_j) = tgt(a_i)`.
    fn composable_after(&self, i: usize) -> Vec<usize> {
        (1..self.n)
            .filter(|&j| self.class_of(j) == self.class_of(i + 1))
            .collect()
    }

    /// The longest path with full relations, or `None` when the successor
    /// map has a cycle (infinite global dimension). Lengths are counted in
    /// arrows, so a bare arrow is a path of length 1.
    pub fn maximal_full_relation_path(&self) -> Option<FullRelationPath> {
        let m = self.n.saturating_sub(1);
        // depth[i] = arrows on the longest full-relations path starting at a_i.
        let mut depth = vec![0usize; m + 1];
        let mut state = vec![0u8; m + 1]; // 0 new, 1 in progress, 2 done
        for start in 1..=m {
            if state[start] != 0 {
                continue;
            }
            let mut stack = vec![start];
            while let Some(&i) = stack.last() {
                match state[i] {
                    0 => {
                        state[i] = 1;
                        match self.successor(i) {
                            Some(j) if state[j] == 1 => return None,
                            Some(j) if state[j] == 0 => stack.push(j),
                            _ => {}
                        }
                    }
                    _ => {
                        depth[i] = 1 + self.successor(i).map_or(0, |j| depth[j]);
                        state[i] = 2;
                        stack.pop();
                    }
                }
            }
        }
        let best = (1..=m).max_by_key(|&i| depth[i]);
        let mut arrows = Vec::new();
        if let Some(mut i) = best {
            arrows.push(i);
            while let Some(j) = self.successor(i) {
                arrows.push(j);
                i = j;
            }
        }
        Some(FullRelationPath { arrows })
    }

    /// Global dimension read off the quiver: infinite iff the successor map
    /// has a cycle, else the maximal length of a path with full relations.
    /// This is the independent oracle the orbit-walk computation is checked
    /// against.
    pub fn oracle_gldim(&self) -> ExtendedNat {
        match self.maximal_full_relation_path() {
            None => ExtendedNat::Infinite,
            Some(path) => ExtendedNat::Finite(path.len()),
        }
    }

    /// The Koszul dual presentation: the opposite quiver, with relations
    /// complemented (the dual relation pairs are the opposites of the
    /// nonzero composites `a_i a_{i+1}`).
    pub fn dual(&self) -> DualPresentation {
        let relations = (1..self.n.saturating_sub(1)).map(|i| (i + 1, i)).collect();
        DualPresentation {
            n: self.n,
            classes: self.classes.clone(),
            class_of: self.class_of.clone(),
            relations,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PresentationWire::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: PresentationWire = serde_json::from_str(text)
            .map_err(|e| Error::parse(0, format!("invalid presentation JSON: {e}")))?;
        wire.try_into()
    }

    /// DOT rendering: solid arrows for the quiver, dotted arcs for relation
    /// pairs, in a fixed order.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph gentle {\n");
        out.push_str("  rankdir=LR;\n");
        for (idx, class) in self.classes.iter().enumerate() {
            let members: Vec<String> = class.iter().map(|p| p.to_string()).collect();
            let _ = writeln!(out, "  c{idx} [label=\"{{{}}}\"];", members.join(","));
        }
        for a in self.arrows() {
            let _ = writeln!(out, "  c{} -> c{} [label=\"a{}\"];", a.src, a.tgt, a.i);
        }
        for &(i, j) in &self.relations {
            let _ = writeln!(
                out,
                "  c{} -> c{} [label=\"a{} a{}\", style=dotted, constraint=false];",
                self.class_of(i),
                self.class_of(j + 1),
                i,
                j
            );
        }
        out.push_str("}\n");
        out
    }
}

/// A path whose every length-2 subpath is a relation; its length (in
/// arrows) realizes the global dimension when that is finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullRelationPath {
    arrows: Vec<usize>,
}

impl FullRelationPath {
    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// The opposite-quiver presentation of the Koszul dual. Arrows are the
/// reversed `a_i` (running from class `i + 1` to class `i`); a relation
/// pair `(j, i)` records that the composite of the reversed `a_j` followed
/// by the reversed `a_i` vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPresentation {
    n: usize,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    relations: BTreeSet<(usize, usize)>,
}

impl DualPresentation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn relations(&self) -> &BTreeSet<(usize, usize)> {
        &self.relations
    }

    /// Composable pairs of reversed arrows: `(u, v)` such that the reversed
    /// `a_u` can be followed by the reversed `a_v`.
    fn composable_pairs(&self) -> BTreeSet<(usize, usize)> {
        let m = self.n.saturating_sub(1);
        let mut pairs = BTreeSet::new();
        for u in 1..=m {
            for v in 1..=m {
                if self.class_of[u - 1] == self.class_of[v + 1 - 1] {
                    pairs.insert((u, v));
                }
            }
        }
        pairs
    }

    /// The nonzero length-2 composites of the dual: exactly the opposites
    /// of the base presentation's relations.
    pub fn nonzero_pairs(&self) -> BTreeSet<(usize, usize)> {
        self.composable_pairs()
            .difference(&self.relations)
            .copied()
            .collect()
    }

    /// Dualizing again complements the complement: the result presents the
    /// original algebra, with the original relation set.
    pub fn dual(&self) -> GentlePresentation {
        let relations = self
            .nonzero_pairs()
            .into_iter()
            .map(|(j, i)| (i, j))
            .collect();
        GentlePresentation {
            n: self.n,
            classes: self.classes.clone(),
            class_of: self.class_of.clone(),
            relations,
        }
    }
}

/// Extracts the Koszul dual quasi-diagram: reverse the unique maximal
/// full-relations path into the opposite quiver, read off the classes it
/// visits, and pair up the two visits of each size-2 class. Defined exactly
/// when the global dimension is `n - 1`.
pub fn koszul_dual_diagram(d: &QuasiDiagram) -> Result<QuasiDiagram> {
    let n = d.degree();
    if n == 0 {
        return Err(Error::NoKoszulDual { degree: 0 });
    }
    if n == 1 {
        // One vertex, no arrows; the dual algebra is the base field again.
        return Ok(QuasiDiagram::trivial(1));
    }
    let p = GentlePresentation::from_diagram(d)?;
    let chain = match p.maximal_full_relation_path() {
        Some(path) if path.len() == n - 1 => path,
        _ => return Err(Error::NoKoszulDual { degree: n }),
    };
    // The dual maximal path traverses the reversed arrows in reverse chain
    // order; its vertex visits are the classes below.
    let dual_order: Vec<usize> = chain.arrows().iter().rev().copied().collect();
    let mut visits = Vec::with_capacity(n);
    visits.push(p.class_of(dual_order[0] + 1));
    for &j in &dual_order {
        visits.push(p.class_of(j));
    }
    if visits.len() != n {
        return Err(Error::internal(format!(
            "dual path visits {} vertices, expected {n}",
            visits.len()
        )));
    }
    let mut images = vec![0usize; n];
    let mut first_visit: Vec<Option<usize>> = vec![None; p.classes().len()];
    for (idx, &class) in visits.iter().enumerate() {
        let u = idx + 1;
        match first_visit[class] {
            None => {
                first_visit[class] = Some(u);
                images[u - 1] = u;
            }
            Some(v) if images[v - 1] == v => {
                images[v - 1] = u;
                images[u - 1] = v;
            }
            Some(_) => {
                return Err(Error::internal(format!(
                    "class {class} visited more than twice along the dual path"
                )));
            }
        }
    }
    QuasiDiagram::new(crate::perm::Permutation::from_images(images)?)
}

/// Output formats for [`export_presentation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

pub fn export_presentation(p: &GentlePresentation, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => p.to_dot(),
        ExportFormat::Json => p.to_json(),
    }
}

/// JSON wire form of a presentation. Arrows and relations are stored
/// explicitly and revalidated against the classes on parse.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct PresentationWire {
    n: usize,
    classes: Vec<Vec<usize>>,
    arrows: Vec<Arrow>,
    relations: Vec<(usize, usize)>,
}

impl From<&GentlePresentation> for PresentationWire {
    fn from(p: &GentlePresentation) -> Self {
        PresentationWire {
            n: p.n,
            classes: p.classes.clone(),
            arrows: p.arrows(),
            relations: p.relations.iter().copied().collect(),
        }
    }
}

impl TryFrom<PresentationWire> for GentlePresentation {
    type Error = Error;

    fn try_from(wire: PresentationWire) -> Result<Self> {
        let n = wire.n;
        let mut class_of = vec![usize::MAX; n];
        for (idx, class) in wire.classes.iter().enumerate() {
            if class.is_empty() || class.len() > 2 {
                return Err(Error::domain(format!(
                    "class {idx} must contain one or two points"
                )));
            }
            for &p in class {
                if p < 1 || p > n {
                    return Err(Error::domain(format!("point {p} out of range 1..={n}")));
                }
                if class_of[p - 1] != usize::MAX {
                    return Err(Error::domain(format!("point {p} in two classes")));
                }
                class_of[p - 1] = idx;
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err(Error::domain("classes do not cover every point"));
        }
        let p = GentlePresentation {
            n,
            classes: wire.classes,
            class_of,
            relations: wire.relations.iter().copied().collect(),
        };
        // Arrows and relations are derivable; reject files that disagree.
        if wire.arrows != p.arrows() {
            return Err(Error::domain("arrow list inconsistent with classes"));
        }
        let rederived = GentlePresentation::from_diagram(&p.diagram()?)?;
        if rederived.relations != p.relations {
            return Err(Error::domain("relation list inconsistent with classes"));
        }
        p.check_gentle()?;
        Ok(p)
    }
}

impl GentlePresentation {
    /// The quasi-diagram whose gluing produced this presentation.
    pub fn diagram(&self) -> Result<QuasiDiagram> {
        let mut images = vec![0usize; self.n];
        for class in &self.classes {
            match class.as_slice() {
                [p] => images[p - 1] = *p,
                [p, q] => {
                    images[p - 1] = *q;
                    images[q - 1] = *p;
                }
                _ => return Err(Error::internal("class of illegal size")),
            }
        }
        QuasiDiagram::new(crate::perm::Permutation::from_images(images)?)
    }
}
