//! No equivariant section of `ℤΦ → P^ab` over ℤ; one exists once 2 is
//! inverted.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use super::ses::projection_matrix;
use super::{build_rep, equivariant_maps, is_equivariant_rational, Lemma, RepKind, VerificationReport};
use crate::exactla::solve::rational_string;
use crate::exactla::{hermite_normal_form, integer_solve, BigMatrix, ExactMatrix, IntegerSolution};
use crate::roots::RootSystem;

/// `t_α ↦ ½(T_α + T_{−α})`.
pub fn half_section(rs: &RootSystem) -> ExactMatrix {
    let half = BigRational::new(1.into(), 2.into());
    let zero = BigRational::from_integer(0.into());
    ExactMatrix::from_fn(rs.len(), rs.num_positive(), |y, x| {
        if rs.positive_part(y) == x {
            half.clone()
        } else {
            zero.clone()
        }
    })
}

/// Integer system `M c = b` expressing `π ∘ (Σ c_k B_k) = Id` over the
/// commutant basis `B_k`, with duplicate equations removed.
fn section_system(rs: &RootSystem, basis: &[crate::exactla::IntMatrix]) -> (BigMatrix, Vec<BigInt>) {
    let npos = rs.num_positive();
    let mut rows: BTreeSet<(Vec<i64>, i64)> = BTreeSet::new();
    for a in 0..npos {
        for b in 0..npos {
            let coeffs: Vec<i64> = basis.iter().map(|m| m[(a, b)] + m[(rs.negate_index(a), b)]).collect();
            rows.insert((coeffs, i64::from(a == b)));
        }
    }
    let rows: Vec<_> = rows.into_iter().collect();
    let m = BigMatrix::from_fn(rows.len(), basis.len(), |i, k| BigInt::from(rows[i].0[k]));
    let b = rows.iter().map(|r| BigInt::from(r.1)).collect();
    (m, b)
}

pub fn verify_nonsplit(rs: &RootSystem) -> VerificationReport {
    VerificationReport::timed(Lemma::Nonsplit, rs.diagram().to_string(), || {
        let (pab, zphi) = (build_rep(rs, RepKind::Pab), build_rep(rs, RepKind::ZPhi));
        let space = equivariant_maps(&pab, &zphi).expect("same diagram");
        let basis = space.integer_basis();
        let (m, b) = section_system(rs, &basis);

        let (infeasible, certificate) = match integer_solve(&m, &b) {
            IntegerSolution::Solution(_) => (false, json!(null)),
            IntegerSolution::Infeasible(cert) => {
                let valid = cert.validate(&m, &b);
                let summary = json!({
                    "combination": cert.combination.iter().map(rational_string).collect::<Vec<_>>(),
                    "value_on_rhs": rational_string(&cert.value_on_rhs(&b)),
                    "obstruction": cert.obstruction,
                    "validated": valid,
                });
                (valid, summary)
            }
        };
        let hermite_agrees = hermite_normal_form(&m).solve(&b).is_none();

        let s = half_section(rs);
        let pi = projection_matrix(rs).to_rational();
        let half_equivariant = is_equivariant_rational(&pab, &zphi, &s);
        let half_splits = pi.mul(&s) == crate::exactla::IntMatrix::identity(rs.num_positive()).to_rational();

        let ok = infeasible && hermite_agrees && half_equivariant && half_splits;
        let witness = json!({
            "commutant_dim": space.dim(),
            "equations": m.rows(),
            "z_infeasibility": {
                "infeasible": infeasible,
                "certificate": certificate,
                "hermite_agrees": hermite_agrees,
            },
            "half_splitting": {
                "map": "t_a -> (T_a + T_-a)/2",
                "equivariant": half_equivariant,
                "splits": half_splits,
            },
        });
        (ok, witness)
    })
}
