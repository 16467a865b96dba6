//! Quasi-diagrams (involutions of `{1..n}`) and their derived combinatorial
//! data: chords, isolated points, faces and the surface invariants V/E/F and
//! genus.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{CycleDecomposition, Permutation};

/// An involution of `{1..n}`. Chords are its 2-cycles, isolated points its
/// fixed points. Degree 0 (the empty diagram) is a legal value; it only
/// arises as the base of an expansion trace.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuasiDiagram {
    alpha: Permutation,
}

impl QuasiDiagram {
    /// Wraps an involution; rejects anything else, naming a witness point.
    pub fn new(alpha: Permutation) -> Result<Self> {
        match alpha.involution_witness() {
            Some(point) => Err(Error::NotAnInvolution { point }),
            None => Ok(QuasiDiagram { alpha }),
        }
    }

    /// The trivial quasi-diagram of degree `n`.
    pub fn trivial(n: usize) -> Self {
        QuasiDiagram {
            alpha: Permutation::identity(n),
        }
    }

    /// The empty diagram (degree 0).
    pub fn empty() -> Self {
        Self::trivial(0)
    }

    /// Parses cycle notation into a diagram of degree `n`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        Self::new(Permutation::parse(text, n)?)
    }

    pub fn degree(&self) -> usize {
        self.alpha.degree()
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    /// The chords, as pairs `(a, b)` with `a < b`, sorted ascending.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        (1..=self.degree())
            .filter_map(|i| {
                let j = self.alpha.apply(i);
                (i < j).then_some((i, j))
            })
            .collect()
    }

    /// The isolated (fixed) points, ascending.
    pub fn isolated_points(&self) -> Vec<usize> {
        (1..=self.degree())
            .filter(|&i| self.alpha.apply(i) == i)
            .collect()
    }

    pub fn is_isolated(&self, i: usize) -> bool {
        self.alpha.apply(i) == i
    }

    /// The faces: the complete cycle decomposition of `ζ_n·α`, 1-cycles
    /// included. The degree-0 diagram has no faces.
    pub fn faces(&self) -> FaceDecomposition {
        let n = self.degree();
        if n == 0 {
            return FaceDecomposition {
                faces: Permutation::identity(0).cycle_decomposition(),
            };
        }
        let zeta = Permutation::n_cycle(n).expect("n >= 1");
        let product = zeta.compose(&self.alpha).expect("equal degrees");
        FaceDecomposition {
            faces: product.cycle_decomposition(),
        }
    }

    pub fn face_count(&self) -> usize {
        self.faces().count()
    }

    /// Isolated point free.
    pub fn is_chord_diagram(&self) -> bool {
        self.isolated_points().is_empty()
    }

    /// Exactly one face. The trivial diagram is maximal for every `n >= 1`
    /// since `ζ_n` is a single cycle; the degree-0 diagram is not (it has no
    /// faces at all).
    pub fn is_maximal(&self) -> bool {
        self.face_count() == 1
    }

    /// V/E/F, Euler characteristic and genus of the closed surface obtained
    /// from the diagram's polygon gluing.
    pub fn surface_invariants(&self) -> Result<SurfaceInvariants> {
        let chords = self.chords().len();
        let isolated = self.isolated_points().len();
        let faces = self.face_count();
        let vertices = isolated + 1;
        let edges = isolated + chords;
        let two_g = chords as i64 - faces as i64 + 1;
        if two_g < 0 || two_g % 2 != 0 {
            return Err(Error::internal(format!(
                "genus equation produced 2g = {two_g} for a degree-{} diagram",
                self.degree()
            )));
        }
        let genus = (two_g / 2) as usize;
        let euler_characteristic = vertices as i64 - edges as i64 + faces as i64;
        if euler_characteristic != 2 - two_g {
            return Err(Error::internal(format!(
                "Euler characteristic {euler_characteristic} disagrees with 2 - 2g = {}",
                2 - two_g
            )));
        }
        Ok(SurfaceInvariants {
            vertices,
            edges,
            faces,
            euler_characteristic,
            genus,
        })
    }

    pub fn genus(&self) -> Result<usize> {
        Ok(self.surface_invariants()?.genus)
    }

    /// Canonical wire form (`{"n", "chords", "isolated"}`).
    pub fn to_wire(&self) -> DiagramWire {
        DiagramWire {
            n: self.degree(),
            chords: self.chords(),
            isolated: self.isolated_points(),
        }
    }
}

impl fmt::Display for QuasiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.alpha.fmt(f)
    }
}

impl Serialize for QuasiDiagram {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuasiDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let wire = DiagramWire::deserialize(deserializer)?;
        QuasiDiagram::try_from(wire).map_err(serde::de::Error::custom)
    }
}

/// The canonical JSON encoding of a diagram:
/// `{"n": int, "chords": [[a,b],...], "isolated": [i,...]}` with `a < b` in
/// each pair and both lists sorted ascending. This is the wire form used by
/// every CLI command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramWire {
    pub n: usize,
    pub chords: Vec<(usize, usize)>,
    pub isolated: Vec<usize>,
}

impl TryFrom<DiagramWire> for QuasiDiagram {
    type Error = Error;

    fn try_from(wire: DiagramWire) -> Result<Self> {
        let mut images: Vec<usize> = vec![0; wire.n];
        let mut place = |p: usize, img: usize| -> Result<()> {
            if p < 1 || p > wire.n {
                return Err(Error::domain(format!(
                    "point {p} out of range 1..={}",
                    wire.n
                )));
            }
            if images[p - 1] != 0 {
                return Err(Error::domain(format!("point {p} mentioned twice")));
            }
            images[p - 1] = img;
            Ok(())
        };
        for &(a, b) in &wire.chords {
            if a == b {
                return Err(Error::domain(format!("chord ({a},{b}) is degenerate")));
            }
            place(a, b)?;
            place(b, a)?;
        }
        for &i in &wire.isolated {
            place(i, i)?;
        }
        if let Some(missing) = images.iter().position(|&img| img == 0) {
            return Err(Error::domain(format!(
                "point {} is neither on a chord nor isolated",
                missing + 1
            )));
        }
        QuasiDiagram::new(Permutation::from_images(images)?)
    }
}

/// The faces of a diagram, stored canonically (each cycle min-rotated,
/// cycles sorted by minimum) so face lists are comparable across runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceDecomposition {
    faces: CycleDecomposition,
}

impl FaceDecomposition {
    pub fn count(&self) -> usize {
        self.faces.len()
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        self.faces.cycles()
    }

    pub fn decomposition(&self) -> &CycleDecomposition {
        &self.faces
    }

    /// The face containing `point`, as a canonical cycle.
    pub fn face_of(&self, point: usize) -> Option<&[usize]> {
        self.cycles()
            .iter()
            .find(|c| c.contains(&point))
            .map(|c| c.as_slice())
    }
}

impl fmt::Display for FaceDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.faces.fmt(f)
    }
}

/// Euler data of the closed surface `V - E + F = χ = 2 - 2g`, with
/// `2g = #chords - #faces + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    #[serde(rename = "V")]
    pub vertices: usize,
    #[serde(rename = "E")]
    pub edges: usize,
    #[serde(rename = "F")]
    pub faces: usize,
    #[serde(skip)]
    pub euler_characteristic: i64,
    pub genus: usize,
}
