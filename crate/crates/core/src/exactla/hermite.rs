//! Column Hermite normal form: `input * transform = form`, with `form` in
//! lower column-echelon shape. Used as the second, Smith-independent route for
//! integer solvability and for ℤ-bases of integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::BigMatrix;

#[derive(Clone, Debug)]
pub struct HermiteForm {
    pub form: BigMatrix,
    pub transform: BigMatrix,
    /// `(row, column)` of each pivot, columns `0..rank` in order.
    pub pivots: Vec<(usize, usize)>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// ℤ-basis of `{x ∈ ℤ^n : input x = 0}`.
    pub fn integer_kernel(&self) -> Vec<Vec<BigInt>> {
        (self.rank()..self.transform.cols()).map(|j| self.transform.column(j)).collect()
    }

    /// Solves `input x = b` over ℤ by forward substitution on the echelon
    /// form. Returns `None` when no integral solution exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let h = &self.form;
        assert_eq!(h.rows(), b.len());
        let mut z = vec![BigInt::zero(); h.cols()];
        let mut next_pivot = 0;
        for r in 0..h.rows() {
            let partial: BigInt = (0..next_pivot).map(|k| &h[(r, k)] * &z[k]).sum();
            let residual = &b[r] - partial;
            if next_pivot < self.pivots.len() && self.pivots[next_pivot].0 == r {
                let p = &h[(r, next_pivot)];
                let (q, rem) = residual.div_rem(p);
                if !rem.is_zero() {
                    return None;
                }
                z[next_pivot] = q;
                next_pivot += 1;
            } else if !residual.is_zero() {
                return None;
            }
        }
        Some(self.transform.apply(&z))
    }
}

fn col_axpy(m: &mut BigMatrix, target: usize, source: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for i in 0..m.rows() {
        if m[(i, source)].is_zero() {
            continue;
        }
        let delta = factor * &m[(i, source)];
        m[(i, target)] -= delta;
    }
}

fn negate_col(m: &mut BigMatrix, c: usize) {
    for i in 0..m.rows() {
        let x = std::mem::take(&mut m[(i, c)]);
        m[(i, c)] = -x;
    }
}

pub fn hermite_normal_form(input: &BigMatrix) -> HermiteForm {
    let (rows, cols) = (input.rows(), input.cols());
    let mut h = input.clone();
    let mut v = BigMatrix::identity(cols);
    let mut pivots = Vec::new();
    let mut k = 0;
    for r in 0..rows {
        if k == cols {
            break;
        }
        // Euclid across columns k.. of row r until one nonzero remains.
        loop {
            let mut best: Option<usize> = None;
            for j in k..cols {
                if h[(r, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| h[(r, j)].abs() < h[(r, b)].abs()) {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            h.swap_cols(k, b);
            v.swap_cols(k, b);
            let mut done = true;
            for j in k + 1..cols {
                if h[(r, j)].is_zero() {
                    continue;
                }
                let q = h[(r, j)].div_floor(&h[(r, k)]);
                col_axpy(&mut h, j, k, &q);
                col_axpy(&mut v, j, k, &q);
                if !h[(r, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, k)].is_zero() {
            continue;
        }
        if h[(r, k)].is_negative() {
            negate_col(&mut h, k);
            negate_col(&mut v, k);
        }
        // Reduce earlier pivot columns modulo this pivot.
        for j in 0..k {
            let q = h[(r, j)].div_floor(&h[(r, k)]);
            col_axpy(&mut h, j, k, &q);
            col_axpy(&mut v, j, k, &q);
        }
        pivots.push((r, k));
        k += 1;
    }
    HermiteForm { form: h, transform: v, pivots }
}
