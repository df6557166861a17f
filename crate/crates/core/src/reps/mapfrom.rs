//! Equivariant maps out of `P^ab` (and `ℤΦ`, `P̄^ab`) determined by the
//! images of the simple generators, built by induction on height.

use serde_json::{json, Value};

use super::{build_rep, same_diagram, Lemma, RepKind, VerificationReport, WRepresentation};
use crate::error::{Error, Result};
use crate::exactla::IntMatrix;
use crate::roots::{Root, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueTable {
    pub variant: RepKind,
    /// Source basis labels: positive roots, or all roots for `ZPhi`.
    pub labels: Vec<Root>,
    pub values: Vec<Vec<i64>>,
}

impl ValueTable {
    /// The map as a matrix whose column `x` is the value on basis `x`.
    pub fn to_matrix(&self) -> IntMatrix {
        let rows = self.values.first().map_or(0, Vec::len);
        IntMatrix::from_fn(rows, self.values.len(), |y, x| self.values[x][y])
    }
}

/// The simple basis vectors of `rep` itself: `t_{e_i}`, `T_{e_i}` or `t̄_{e_i}`.
pub fn standard_simples(rs: &RootSystem, rep: &WRepresentation) -> Vec<Vec<i64>> {
    (0..rs.rank()).map(|i| rep.basis_vector(rs.simple_index(i))).collect()
}

fn check_hypotheses(rs: &RootSystem, target: &WRepresentation, a: &[Vec<i64>], variant: RepKind) -> Result<()> {
    let d = rs.diagram();
    for i in 0..rs.rank() {
        for j in 0..rs.rank() {
            let si_aj = target.act(i, &a[j]);
            let ok = if i == j {
                match variant {
                    RepKind::Pab => si_aj == a[j],
                    RepKind::PabBar => si_aj.iter().zip(&a[j]).all(|(x, y)| *x == -y),
                    RepKind::ZPhi => true,
                }
            } else if d.adjacent(i, j) {
                si_aj == target.act(j, &a[i])
            } else {
                si_aj == a[j]
            };
            if !ok {
                return Err(Error::RelationViolated(i, j));
            }
        }
    }
    Ok(())
}

/// Height induction from `f(e_i) = a_i`. Every decomposition `α = β + e_j`
/// proposes `s_j · f(β)`; all proposals must agree.
pub fn build_from_simples(
    rs: &RootSystem,
    target: &WRepresentation,
    a: &[Vec<i64>],
    variant: RepKind,
) -> Result<ValueTable> {
    if target.diagram() != rs.diagram() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), found: target.rank() });
    }
    if a.len() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), found: a.len() });
    }
    if let Some(bad) = a.iter().find(|v| v.len() != target.dim()) {
        return Err(Error::DimensionMismatch { expected: target.dim(), found: bad.len() });
    }
    check_hypotheses(rs, target, a, variant)?;

    let npos = rs.num_positive();
    let size = if variant == RepKind::ZPhi { rs.len() } else { npos };
    let mut values: Vec<Option<Vec<i64>>> = vec![None; size];

    let propose = |values: &[Option<Vec<i64>>], k: usize, negative: bool| -> Result<Vec<i64>> {
        let mut agreed: Option<Vec<i64>> = None;
        for (beta, j) in rs.decompose_index(k)? {
            let src = if negative { rs.negate_index(beta) } else { beta };
            let prev = values[src].as_ref().expect("lower height filled first");
            let v = target.act(j, prev);
            match &agreed {
                None => agreed = Some(v),
                Some(w) if *w == v => {}
                Some(_) => return Err(Error::InconsistentDecomposition { root: rs.root(k).coeffs().to_vec() }),
            }
        }
        Ok(agreed.expect("non-simple roots decompose"))
    };

    // canonical order is by height, so each root's predecessors are ready
    for k in 0..npos {
        let alpha = rs.root(k);
        values[k] = Some(if alpha.height() == 1 {
            let i = alpha.coeffs().iter().position(|&c| c == 1).expect("simple root");
            a[i].clone()
        } else {
            propose(&values, k, false)?
        });
    }
    if variant == RepKind::ZPhi {
        for k in 0..npos {
            let alpha = rs.root(k);
            let v = if alpha.height() == 1 {
                let i = alpha.coeffs().iter().position(|&c| c == 1).expect("simple root");
                target.act(i, &a[i])
            } else {
                propose(&values, k, true)?
            };
            values[rs.negate_index(k)] = Some(v);
        }
    }
    let values: Vec<Vec<i64>> = values.into_iter().map(|v| v.expect("all roots visited")).collect();

    // exhaustive equivariance: f(s_i x) = s_i f(x)
    let source = build_rep(rs, variant);
    same_diagram(&source, target)?;
    for i in 0..rs.rank() {
        let m = source.monomial(i);
        for x in 0..size {
            let y = m.image[x] as usize;
            let lhs: Vec<i64> = values[y].iter().map(|c| c * m.sign[x] as i64).collect();
            if lhs != target.act(i, &values[x]) {
                return Err(Error::InconsistentDecomposition { root: source.labels()[x].coeffs().to_vec() });
            }
        }
    }
    Ok(ValueTable { variant, labels: source.labels().to_vec(), values })
}

/// Simple images `t_{e_i}` (resp. `T_{e_i}`, `t̄_{e_i}`) reproduce the identity.
pub fn verify_map_from_pab(rs: &RootSystem) -> VerificationReport {
    VerificationReport::timed(Lemma::MapFromPab, rs.diagram().to_string(), || {
        let mut ok = true;
        let mut w = serde_json::Map::new();
        for kind in [RepKind::Pab, RepKind::ZPhi, RepKind::PabBar] {
            let target = build_rep(rs, kind);
            let a = standard_simples(rs, &target);
            let entry: Value = match build_from_simples(rs, &target, &a, kind) {
                Ok(table) => {
                    let identity = table.to_matrix() == IntMatrix::identity(target.dim());
                    ok &= identity;
                    json!({"identity": identity, "inconsistent_decompositions": 0})
                }
                Err(e) => {
                    ok = false;
                    json!({"identity": false, "error": e.name(), "message": e.to_string()})
                }
            };
            w.insert(kind.to_string(), entry);
        }
        (ok, Value::Object(w))
    })
}
