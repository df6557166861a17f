//! The permutation character of `S_{n+1}` on unordered pairs, computed from
//! cycle types, and its split into trivial, standard and `(n−1, 2)` parts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use serde_json::json;

use super::{build_rep, equivariant_maps, Lemma, RepKind, VerificationReport};
use crate::dynkin::{DynkinDiagram, Family};
use crate::error::{Error, Result};
use crate::roots::enumerate_roots;

#[derive(Clone, Debug, Serialize)]
pub struct ClassRow {
    pub cycle_type: Vec<usize>,
    pub size: u64,
    pub pairs_fixed: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnDecomposition {
    pub n: usize,
    pub dim: i64,
    pub classes: Vec<ClassRow>,
    pub norm: i64,
    pub trivial: i64,
    pub standard: i64,
    /// Multiplicity of the remaining irreducible, `None` when the remainder
    /// is not a single irreducible.
    pub remainder: Option<i64>,
    pub remainder_dim: i64,
    pub decomposition: String,
}

fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// `m! / ∏ k^{c_k} c_k!`.
fn class_size(m: usize, cycle_type: &[usize]) -> BigInt {
    let mut denom = BigInt::from(1);
    for k in 1..=m {
        let c = cycle_type.iter().filter(|&&p| p == k).count();
        denom *= BigInt::from(k).pow(c as u32) * factorial(c);
    }
    factorial(m) / denom
}

/// Hook-length dimension of the irreducible indexed by `shape`.
fn hook_dim(shape: &[usize]) -> BigInt {
    let m: usize = shape.iter().sum();
    let mut hooks = BigInt::from(1);
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            let below = shape[r + 1..].iter().filter(|&&l| l > c).count();
            hooks *= BigInt::from(len - c - 1 + below + 1);
        }
    }
    factorial(m) / hooks
}

fn exact_div(a: &BigInt, b: &BigInt) -> Option<i64> {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        q.to_i64()
    } else {
        None
    }
}

/// Character data for `S_{n+1}` acting on 2-subsets of `{1, …, n+1}`.
pub fn an_decomposition(n: usize) -> Result<AnDecomposition> {
    if !(1..=6).contains(&n) {
        return Err(Error::RankOutOfRange(n));
    }
    let m = n + 1;
    let order = factorial(m);
    let classes: Vec<ClassRow> = partitions(m)
        .into_iter()
        .map(|ct| {
            let fixed = ct.iter().filter(|&&p| p == 1).count() as i64;
            let two = ct.iter().filter(|&&p| p == 2).count() as i64;
            ClassRow {
                size: class_size(m, &ct).to_u64().expect("small group"),
                pairs_fixed: fixed * (fixed - 1) / 2 + two,
                cycle_type: ct,
            }
        })
        .collect();
    let inner = |f: &dyn Fn(&ClassRow) -> i64, g: &dyn Fn(&ClassRow) -> i64| -> Option<i64> {
        let s: BigInt = classes.iter().map(|c| BigInt::from(c.size) * f(c) * g(c)).sum();
        exact_div(&s, &order)
    };
    let chi = |c: &ClassRow| c.pairs_fixed;
    let triv = |_: &ClassRow| 1i64;
    let std = |c: &ClassRow| c.cycle_type.iter().filter(|&&p| p == 1).count() as i64 - 1;

    let dim = classes.iter().find(|c| c.cycle_type.iter().all(|&p| p == 1)).expect("identity class").pairs_fixed;
    let norm = inner(&chi, &chi).expect("integral norm");
    let trivial = inner(&chi, &triv).expect("integral multiplicity");
    let standard = inner(&chi, &std).expect("integral multiplicity");
    let rest = |c: &ClassRow| chi(c) - trivial * triv(c) - standard * std(c);
    let rest_norm = inner(&rest, &rest).expect("integral norm");
    let remainder_dim = rest(&classes[classes.len() - 1]);
    let remainder = match rest_norm {
        0 => Some(0),
        1 if n >= 3 && BigInt::from(remainder_dim) == hook_dim(&[n - 1, 2]) => Some(1),
        _ => None,
    };

    let mut parts = Vec::new();
    if trivial > 0 {
        parts.push(format!("({m})"));
    }
    if standard > 0 {
        parts.push(format!("({},1)", m - 1));
    }
    if remainder == Some(1) {
        parts.push(format!("({},2)", m - 2));
    }
    Ok(AnDecomposition {
        n,
        dim,
        classes,
        norm,
        trivial,
        standard,
        remainder,
        remainder_dim,
        decomposition: parts.join(" ⊕ "),
    })
}

/// Checks the decomposition pattern and cross-checks `⟨χ,χ⟩` against the
/// commutant dimension of `P^ab` over ℚ for `A_n`.
pub fn verify_an_decomposition(n: usize) -> Result<VerificationReport> {
    let dec = an_decomposition(n)?;
    let diagram = DynkinDiagram::new(Family::A, n)?;
    Ok(VerificationReport::timed(Lemma::AnDecomposition, diagram.to_string(), || {
        let rs = enumerate_roots(&diagram).expect("type A");
        let pab = build_rep(&rs, RepKind::Pab);
        let commutant = equivariant_maps(&pab, &pab).expect("same diagram").dim() as i64;
        let expected = match n {
            1 => (1, 1, 0, Some(0)),
            2 => (2, 1, 1, Some(0)),
            _ => (3, 1, 1, Some(1)),
        };
        let binom = ((n + 1) * n / 2) as i64;
        let ok = (dec.norm, dec.trivial, dec.standard, dec.remainder) == expected
            && dec.dim == binom
            && dec.dim == rs.num_positive() as i64
            && commutant == dec.norm;
        let witness = json!({
            "decomposition": dec.decomposition,
            "norm": dec.norm,
            "multiplicities": {"trivial": dec.trivial, "standard": dec.standard, "remainder": dec.remainder},
            "dim": dec.dim,
            "remainder_dim": dec.remainder_dim,
            "commutant_dim": commutant,
            "classes": dec.classes,
        });
        (ok, witness)
    }))
}
