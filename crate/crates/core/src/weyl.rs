//! Weyl group elements as paired (matrix, root permutation) data.
//!
//! Products compose as written: `apply_word(&[i, j])` is `s_i · s_j`, which
//! acts on a vector by applying `s_j` first.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::IntMatrix;
use crate::roots::RootSystem;

/// Default ceiling for explicit group enumeration.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    matrix: IntMatrix,
    perm: Vec<u32>,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement { matrix: IntMatrix::identity(rs.rank()), perm: (0..rs.len() as u32).collect() }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `perm()[k]` is the index of `w · root k`.
    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &p)| k == p as usize)
    }

    /// `self · other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            matrix: self.matrix.mul(&other.matrix),
            perm: other.perm.iter().map(|&k| self.perm[k as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut perm = vec![0u32; self.perm.len()];
        for (k, &p) in self.perm.iter().enumerate() {
            perm[p as usize] = k as u32;
        }
        WeylElement { matrix: invert_unimodular(&self.matrix), perm }
    }

    pub fn act(&self, v: &[i64]) -> Vec<i64> {
        self.matrix.apply(v)
    }

    pub fn act_index(&self, k: usize) -> usize {
        self.perm[k] as usize
    }

    /// `Mᵀ Q M = Q`.
    pub fn preserves_form(&self, rs: &RootSystem) -> bool {
        let q = &rs.form().matrix;
        self.matrix.transpose().mul(q).mul(&self.matrix) == *q
    }

    /// The matrix and permutation views agree on every root.
    pub fn is_consistent(&self, rs: &RootSystem) -> bool {
        rs.roots()
            .iter()
            .enumerate()
            .all(|(k, r)| self.act(r.coeffs()) == rs.root(self.act_index(k)).coeffs())
    }

    pub fn to_json(&self) -> WeylElementJson {
        WeylElementJson { matrix: self.matrix.to_rows() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylElementJson {
    pub matrix: Vec<Vec<i64>>,
}

// Gauss-Jordan over ℚ; integral because det = ±1.
fn invert_unimodular(m: &IntMatrix) -> IntMatrix {
    use crate::exactla::rational::rref;
    use crate::exactla::ExactMatrix;
    use num_traits::ToPrimitive;
    let n = m.rows();
    let q = m.to_rational();
    let aug = ExactMatrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            q[(i, j)].clone()
        } else if j - n == i {
            num_rational::BigRational::from_integer(1.into())
        } else {
            num_rational::BigRational::from_integer(0.into())
        }
    });
    let r = rref(&aug).reduced;
    IntMatrix::from_fn(n, n, |i, j| {
        let x = &r[(i, j + n)];
        assert!(x.is_integer(), "Weyl matrix inverse must be integral");
        x.to_integer().to_i64().expect("small entries")
    })
}

fn check_vertex(rs: &RootSystem, i: usize) -> Result<()> {
    if i >= rs.rank() {
        return Err(Error::GeneratorOutOfRange(i as i64 + 1, rs.rank()));
    }
    Ok(())
}

/// `s_i` with `s_i v = v + (v·e_i) e_i`.
pub fn simple_reflection(rs: &RootSystem, i: usize) -> Result<WeylElement> {
    check_vertex(rs, i)?;
    let n = rs.rank();
    let q = &rs.form().matrix;
    let mut m = IntMatrix::identity(n);
    for k in 0..n {
        m[(i, k)] += q[(k, i)];
    }
    Ok(WeylElement { matrix: m, perm: rs.reflection_perm(i).to_vec() })
}

/// `s_{i1} · s_{i2} · … · s_{ik}`.
pub fn apply_word(rs: &RootSystem, letters: &[usize]) -> Result<WeylElement> {
    let mut w = WeylElement::identity(rs);
    for &i in letters {
        w = w.compose(&simple_reflection(rs, i)?);
    }
    Ok(w)
}

/// All elements of `W` by breadth-first closure, deduplicated by permutation.
pub fn enumerate_group(rs: &RootSystem, cap: usize) -> Result<Vec<WeylElement>> {
    let gens: Vec<WeylElement> = (0..rs.rank()).map(|i| simple_reflection(rs, i)).collect::<Result<_>>()?;
    let id = WeylElement::identity(rs);
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(id.perm.clone());
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let next = w.compose(g);
            if seen.insert(next.perm.clone()) {
                if out.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

/// Group order by permutation-only closure; cheaper than [`enumerate_group`].
pub fn group_order(rs: &RootSystem, cap: usize) -> Result<usize> {
    let n = rs.len();
    let id: Vec<u32> = (0..n as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for i in 0..rs.rank() {
            let s = rs.reflection_perm(i);
            let next: Vec<u32> = s.iter().map(|&k| w[k as usize]).collect();
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len())
}

/// A word and vertex `j` with `apply_word(word) · e_j = α`, found by
/// descending through positive-plus-simple decompositions.
pub fn orbit_transport(rs: &RootSystem, alpha: &crate::roots::Root) -> Result<(Vec<usize>, usize)> {
    let k = rs
        .index_of(alpha)
        .filter(|&k| rs.is_positive_index(k))
        .ok_or_else(|| Error::NotPositiveRoot(alpha.coeffs().to_vec()))?;
    let mut word = Vec::new();
    let mut cur = k;
    loop {
        if rs.root(cur).height() == 1 {
            let j = rs.root(cur).coeffs().iter().position(|&c| c == 1).expect("simple root");
            return Ok((word, j));
        }
        let (beta, i) = rs.decompose_index(cur)?[0];
        // cur = s_i · beta
        word.push(i);
        cur = beta;
    }
}
