//! The Weyl-group lattices `P^ab`, `ℤΦ` and `P̄^ab`, their equivariant maps,
//! and exact checks of the structural lemmas relating them.
//!
//! Generator matrices use the column convention: column `x` of `s_i` is the
//! image of basis vector `x`.

mod characters;
mod commutant;
mod mapfrom;
mod nonsplit;
mod report;
mod ses;
mod splitting;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinDiagram;
use crate::error::{Error, Result};
use crate::exactla::{ExactMatrix, IntMatrix};
use crate::roots::{Root, RootSystem};

pub use characters::{an_decomposition, verify_an_decomposition, AnDecomposition, ClassRow};
pub use commutant::{equivariant_maps, equivariant_maps_dense, EquivariantMapSpace, Route};
pub use mapfrom::{build_from_simples, standard_simples, verify_map_from_pab, ValueTable};
pub use nonsplit::verify_nonsplit;
pub use report::{run_lemma, verify_positive_simple, verify_relations, Lemma, Status, VerificationReport};
pub use ses::{inclusion_matrix, projection_matrix, verify_ses};
pub use splitting::verify_splitting_lemma;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RepKind {
    Pab,
    ZPhi,
    PabBar,
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepKind::Pab => "Pab",
            RepKind::ZPhi => "ZPhi",
            RepKind::PabBar => "PabBar",
        })
    }
}

impl FromStr for RepKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pab" => Ok(RepKind::Pab),
            "zphi" => Ok(RepKind::ZPhi),
            "pabbar" => Ok(RepKind::PabBar),
            _ => Err(Error::InvalidParams(format!("unknown representation {s:?}"))),
        }
    }
}

/// A monomial matrix: basis `x` goes to `sign[x] · basis image[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPerm {
    pub image: Vec<u32>,
    pub sign: Vec<i8>,
}

impl SignedPerm {
    pub fn to_matrix(&self) -> IntMatrix {
        let n = self.image.len();
        let mut m = IntMatrix::zeros(n, n);
        for x in 0..n {
            m[(self.image[x] as usize, x)] = self.sign[x] as i64;
        }
        m
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (x, &c) in v.iter().enumerate() {
            out[self.image[x] as usize] += self.sign[x] as i64 * c;
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct WRepresentation {
    kind: RepKind,
    diagram: DynkinDiagram,
    labels: Vec<Root>,
    monomial: Vec<SignedPerm>,
    generators: Vec<IntMatrix>,
}

impl WRepresentation {
    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Basis labels: positive roots for `Pab`/`PabBar`, all roots for `ZPhi`.
    pub fn labels(&self) -> &[Root] {
        &self.labels
    }

    pub fn generator(&self, i: usize) -> &IntMatrix {
        &self.generators[i]
    }

    pub fn generators(&self) -> &[IntMatrix] {
        &self.generators
    }

    pub fn monomial(&self, i: usize) -> &SignedPerm {
        &self.monomial[i]
    }

    pub fn act(&self, i: usize, v: &[i64]) -> Vec<i64> {
        self.monomial[i].apply(v)
    }

    pub fn basis_vector(&self, x: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        v[x] = 1;
        v
    }

    /// Checks `s_i² = 1`, the braid relation on edges and commutation
    /// elsewhere as exact matrix identities.
    pub fn check_relations(&self) -> Result<()> {
        let n = self.rank();
        let id = IntMatrix::identity(self.dim());
        for i in 0..n {
            let s = &self.generators[i];
            if s.mul(s) != id {
                return Err(Error::RelationViolated(i, i));
            }
            for j in i + 1..n {
                let t = &self.generators[j];
                let ok = if self.diagram.adjacent(i, j) {
                    s.mul(t).mul(s) == t.mul(s).mul(t)
                } else {
                    s.mul(t) == t.mul(s)
                };
                if !ok {
                    return Err(Error::RelationViolated(i, j));
                }
            }
        }
        Ok(())
    }
}

pub fn build_rep(rs: &RootSystem, kind: RepKind) -> WRepresentation {
    let npos = rs.num_positive();
    let labels: Vec<Root> = match kind {
        RepKind::ZPhi => rs.roots().to_vec(),
        _ => rs.positive_roots().to_vec(),
    };
    let monomial: Vec<SignedPerm> = (0..rs.rank())
        .map(|i| {
            let mut image = Vec::with_capacity(labels.len());
            let mut sign = Vec::with_capacity(labels.len());
            for x in 0..labels.len() {
                let y = rs.reflect_index(i, x);
                match kind {
                    RepKind::ZPhi => {
                        image.push(y as u32);
                        sign.push(1);
                    }
                    RepKind::Pab => {
                        image.push(rs.positive_part(y) as u32);
                        sign.push(1);
                    }
                    RepKind::PabBar => {
                        image.push(rs.positive_part(y) as u32);
                        sign.push(if y < npos { 1 } else { -1 });
                    }
                }
            }
            SignedPerm { image, sign }
        })
        .collect();
    let generators = monomial.iter().map(SignedPerm::to_matrix).collect();
    WRepresentation { kind, diagram: rs.diagram().clone(), labels, monomial, generators }
}

fn same_diagram(dom: &WRepresentation, cod: &WRepresentation) -> Result<()> {
    if dom.diagram != cod.diagram {
        return Err(Error::DimensionMismatch { expected: dom.rank(), found: cod.rank() });
    }
    Ok(())
}

/// `cod(s_i) · f = f · dom(s_i)` for every generator, over ℤ.
pub fn is_equivariant(dom: &WRepresentation, cod: &WRepresentation, f: &IntMatrix) -> bool {
    if f.rows() != cod.dim() || f.cols() != dom.dim() || dom.diagram != cod.diagram {
        return false;
    }
    (0..dom.rank()).all(|i| cod.generator(i).mul(f) == f.mul(dom.generator(i)))
}

/// Rational version of [`is_equivariant`].
pub fn is_equivariant_rational(dom: &WRepresentation, cod: &WRepresentation, f: &ExactMatrix) -> bool {
    if f.rows() != cod.dim() || f.cols() != dom.dim() || dom.diagram != cod.diagram {
        return false;
    }
    (0..dom.rank()).all(|i| cod.generator(i).to_rational().mul(f) == f.mul(&dom.generator(i).to_rational()))
}
