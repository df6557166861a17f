//! The sequence `0 → P̄^ab → ℤΦ → P^ab → 0`.

use num_bigint::BigInt;
use num_traits::One;
use serde_json::json;

use super::{build_rep, is_equivariant, Lemma, RepKind, VerificationReport};
use crate::exactla::{smith_normal_form, IntMatrix};
use crate::roots::RootSystem;

/// `ι: t̄_α ↦ T_α − T_{−α}`, a `|Φ| × |Φ+|` matrix.
pub fn inclusion_matrix(rs: &RootSystem) -> IntMatrix {
    let npos = rs.num_positive();
    IntMatrix::from_fn(rs.len(), npos, |y, x| {
        if y == x {
            1
        } else if y == rs.negate_index(x) {
            -1
        } else {
            0
        }
    })
}

/// `π: T_α ↦ t_{|α|}`, a `|Φ+| × |Φ|` matrix.
pub fn projection_matrix(rs: &RootSystem) -> IntMatrix {
    IntMatrix::from_fn(rs.num_positive(), rs.len(), |y, x| i64::from(rs.positive_part(x) == y))
}

fn unimodular_of_rank(m: &IntMatrix, rank: usize) -> (bool, usize) {
    let snf = smith_normal_form(&m.to_big());
    let all_units = snf.invariant_factors.iter().all(|d| d == &BigInt::one());
    (all_units && snf.rank() == rank, snf.rank())
}

pub fn verify_ses(rs: &RootSystem) -> VerificationReport {
    VerificationReport::timed(Lemma::Ses, rs.diagram().to_string(), || {
        let npos = rs.num_positive();
        let (pab, zphi, bar) =
            (build_rep(rs, RepKind::Pab), build_rep(rs, RepKind::ZPhi), build_rep(rs, RepKind::PabBar));
        let iota = inclusion_matrix(rs);
        let pi = projection_matrix(rs);

        let iota_equivariant = is_equivariant(&bar, &zphi, &iota);
        let pi_equivariant = is_equivariant(&zphi, &pab, &pi);
        let composite_zero = pi.mul(&iota).is_zero();
        // ι saturated of rank |Φ+|, π onto; with π∘ι = 0 and rank ker π = |Φ+|
        // the saturated image must be all of ker π.
        let (iota_saturated, iota_rank) = unimodular_of_rank(&iota, npos);
        let (pi_surjective, pi_rank) = unimodular_of_rank(&pi, npos);
        let kernel_is_image = composite_zero && iota_saturated && pi_rank == npos && rs.len() - pi_rank == iota_rank;
        let section = IntMatrix::from_fn(rs.len(), npos, |y, x| i64::from(y == x));
        let abelian_split = pi.mul(&section) == IntMatrix::identity(npos);

        let ok = iota_equivariant && pi_equivariant && composite_zero && kernel_is_image && pi_surjective && abelian_split;
        let witness = json!({
            "dims": {"PabBar": npos, "ZPhi": rs.len(), "Pab": npos},
            "iota_equivariant": iota_equivariant,
            "pi_equivariant": pi_equivariant,
            "pi_after_iota_zero": composite_zero,
            "iota_saturated": iota_saturated,
            "kernel_equals_image": kernel_is_image,
            "pi_surjective": pi_surjective,
            "abelian_section": "t_a -> T_a",
            "abelian_split": abelian_split,
        });
        (ok, witness)
    })
}
