//! Expansion and contraction operators on quasi-diagrams, their face and
//! isolated-point transport laws, and decomposition of a diagram into an
//! iterated expansion of a chord diagram.

use serde::{Deserialize, Serialize};

use crate::diagram::QuasiDiagram;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// The i-expansion: conjugate by `ϑ = (i, i+1, …, n+1)` inside degree
/// `n + 1`. The new point `i` is isolated in the result and the face count
/// is unchanged.
pub fn expand(d: &QuasiDiagram, i: usize) -> Result<QuasiDiagram> {
    let n = d.degree();
    if i < 1 || i > n + 1 {
        return Err(Error::domain(format!(
            "expansion position {i} out of range 1..={}",
            n + 1
        )));
    }
    let theta = Permutation::theta(i, n + 1)?;
    let alpha = d.alpha().extended(n + 1)?.conjugate_by(&theta)?;
    QuasiDiagram::new(alpha)
}

/// The i-contraction at an isolated point `i`: conjugate by `ϑ⁻¹` with
/// `ϑ = (i, i+1, …, n)`, after which `n` is isolated and dropped.
pub fn contract(d: &QuasiDiagram, i: usize) -> Result<QuasiDiagram> {
    let n = d.degree();
    if n == 0 {
        return Err(Error::domain("cannot contract the empty diagram"));
    }
    if i < 1 || i > n {
        return Err(Error::domain(format!(
            "contraction position {i} out of range 1..={n}"
        )));
    }
    if !d.is_isolated(i) {
        return Err(Error::domain(format!(
            "contraction requires an isolated point, but {i} is on a chord"
        )));
    }
    let theta = Permutation::theta(i, n)?;
    let alpha = d.alpha().conjugate_by(&theta.inverse())?;
    QuasiDiagram::new(alpha.restricted(n - 1)?)
}

/// Faces of `expand(d, i)` predicted from the faces of `d` by the transport
/// law, without computing the expansion: the face through `i` gains the new
/// point, every other face has its entries shifted.
pub fn predicted_faces_after_expand(d: &QuasiDiagram, i: usize) -> Result<Vec<Vec<usize>>> {
    let n = d.degree();
    if i < 1 || i > n + 1 {
        return Err(Error::domain(format!(
            "expansion position {i} out of range 1..={}",
            n + 1
        )));
    }
    let theta = Permutation::theta(i, n + 1)?;
    let mut predicted = Vec::new();
    for face in d.faces().cycles() {
        let image = if i == n + 1 {
            if face.contains(&1) {
                // (1, n+1)·w appends the new point before closing to 1.
                let at = face.iter().position(|&p| p == 1).expect("contains 1");
                let mut cycle: Vec<usize> = face[at..].to_vec();
                cycle.extend_from_slice(&face[..at]);
                cycle.push(n + 1);
                cycle
            } else {
                face.clone()
            }
        } else if face.contains(&i) {
            let at = face.iter().position(|&p| p == i).expect("contains i");
            let mut cycle = vec![i];
            for k in 0..face.len() {
                cycle.push(theta.apply(face[(at + k) % face.len()]));
            }
            cycle
        } else {
            face.iter().map(|&p| theta.apply(p)).collect()
        };
        predicted.push(canonical_cycle(image));
    }
    predicted.sort();
    Ok(predicted)
}

/// Isolated points of `expand(d, i)` predicted by the transport law:
/// `i` itself plus the `ϑ`-images of the old ones.
pub fn predicted_isolated_after_expand(d: &QuasiDiagram, i: usize) -> Result<Vec<usize>> {
    let n = d.degree();
    let theta = Permutation::theta(i, n + 1)?;
    let mut isolated: Vec<usize> = d
        .isolated_points()
        .into_iter()
        .map(|j| theta.apply(j))
        .collect();
    isolated.push(i);
    isolated.sort_unstable();
    Ok(isolated)
}

/// Faces of `contract(d, i)` predicted from the faces of `d`: the face
/// through `i` loses a point, the rest shift down.
pub fn predicted_faces_after_contract(d: &QuasiDiagram, i: usize) -> Result<Vec<Vec<usize>>> {
    let n = d.degree();
    if n == 0 || !d.is_isolated(i) {
        return Err(Error::domain(format!("{i} is not an isolated point")));
    }
    let theta_inv = Permutation::theta(i, n)?.inverse();
    let mut predicted = Vec::new();
    for face in d.faces().cycles() {
        let image: Vec<usize> = if i == n {
            if face.contains(&1) {
                // (1, n)·w deletes n, which sits just before the closure to 1.
                let at = face.iter().position(|&p| p == 1).expect("contains 1");
                let mut cycle: Vec<usize> = face[at..].to_vec();
                cycle.extend_from_slice(&face[..at]);
                debug_assert_eq!(cycle.last(), Some(&n));
                cycle.pop();
                cycle
            } else {
                face.clone()
            }
        } else if face.contains(&i) {
            // The face through an isolated i reads (i, i+1, …); contraction
            // drops the leading i and pulls the rest back through ϑ⁻¹.
            let at = face.iter().position(|&p| p == i).expect("contains i");
            (1..face.len())
                .map(|k| theta_inv.apply(face[(at + k) % face.len()]))
                .collect()
        } else {
            face.iter().map(|&p| theta_inv.apply(p)).collect()
        };
        // The 1 -> 0 contraction erases the last face entirely.
        if !image.is_empty() {
            predicted.push(canonical_cycle(image));
        }
    }
    predicted.sort();
    Ok(predicted)
}

/// Isolated points of `contract(d, i)`: the `ϑ⁻¹`-images of the old ones,
/// with the dropped top point removed.
pub fn predicted_isolated_after_contract(d: &QuasiDiagram, i: usize) -> Result<Vec<usize>> {
    let n = d.degree();
    if n == 0 || !d.is_isolated(i) {
        return Err(Error::domain(format!("{i} is not an isolated point")));
    }
    let theta_inv = Permutation::theta(i, n)?.inverse();
    let mut isolated: Vec<usize> = d
        .isolated_points()
        .into_iter()
        .map(|j| theta_inv.apply(j))
        .filter(|&j| j != n)
        .collect();
    isolated.sort_unstable();
    Ok(isolated)
}

/// Checks the face transport law for one expansion: the predicted face list
/// must equal the directly computed one.
pub fn face_transport_check(d: &QuasiDiagram, i: usize) -> Result<bool> {
    let predicted = predicted_faces_after_expand(d, i)?;
    let expanded = expand(d, i)?;
    let mut actual: Vec<Vec<usize>> = expanded.faces().cycles().to_vec();
    actual.sort();
    Ok(predicted == actual)
}

fn canonical_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    if cycle.is_empty() {
        return cycle;
    }
    let at = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &p)| p)
        .map(|(k, _)| k)
        .expect("nonempty");
    cycle.rotate_left(at);
    cycle
}

/// A diagram written as an iterated expansion of a chord-diagram base (or
/// of the empty diagram, for the chain below the trivial diagram).
/// `positions[0]` is the first expansion applied to the base; folding
/// [`expand`] over `positions` reconstructs the original diagram exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionTrace {
    #[serde(with = "base_wire")]
    pub base: QuasiDiagram,
    pub positions: Vec<usize>,
}

impl ExpansionTrace {
    /// Replays the recorded expansions on the base.
    pub fn replay(&self) -> Result<QuasiDiagram> {
        let mut d = self.base.clone();
        for &i in &self.positions {
            d = expand(&d, i)?;
        }
        Ok(d)
    }
}

/// The degree-0 base is encoded as the string `"empty"`, every other base
/// as a diagram object.
mod base_wire {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Wire {
        Empty(String),
        Diagram(QuasiDiagram),
    }

    pub fn serialize<S: Serializer>(
        base: &QuasiDiagram,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        if base.degree() == 0 {
            serializer.serialize_str("empty")
        } else {
            base.serialize(serializer)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<QuasiDiagram, D::Error> {
        match Wire::deserialize(deserializer)? {
            Wire::Empty(s) if s == "empty" => Ok(QuasiDiagram::empty()),
            Wire::Empty(s) => Err(serde::de::Error::custom(format!(
                "expected \"empty\" or a diagram, got \"{s}\""
            ))),
            Wire::Diagram(d) => Ok(d),
        }
    }
}

/// Contracts at the least isolated point until none remain; the trivial
/// diagram bottoms out at the empty diagram. Contracting least-first makes
/// the trace canonical; replaying it reconstructs the input bit for bit.
pub fn decompose(d: &QuasiDiagram) -> Result<ExpansionTrace> {
    let mut current = d.clone();
    let mut reversed = Vec::new();
    loop {
        match current.isolated_points().first().copied() {
            None => break,
            Some(i) => {
                reversed.push(i);
                current = contract(&current, i)?;
            }
        }
    }
    reversed.reverse();
    let trace = ExpansionTrace {
        base: current,
        positions: reversed,
    };
    debug_assert_eq!(&trace.replay()?, d, "decomposition must round-trip");
    Ok(trace)
}
