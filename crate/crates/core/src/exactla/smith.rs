//! Smith normal form over ℤ with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::BigMatrix;

/// `left * input * right = diagonal`, with `left` and `right` unimodular and
/// each invariant factor dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub left: BigMatrix,
    pub diagonal: BigMatrix,
    pub right: BigMatrix,
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Re-multiplies the decomposition and compares with `input`.
    pub fn verify(&self, input: &BigMatrix) -> bool {
        let d = self.left.mul(input).mul(&self.right);
        if d != self.diagonal {
            return false;
        }
        (0..d.rows()).all(|i| {
            (0..d.cols()).all(|j| {
                let x = &d[(i, j)];
                if i != j {
                    x.is_zero()
                } else if i < self.rank() {
                    *x == self.invariant_factors[i]
                } else {
                    x.is_zero()
                }
            })
        }) && self.invariant_factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }
}

fn row_axpy(m: &mut BigMatrix, target: usize, source: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for j in 0..m.cols() {
        if m[(source, j)].is_zero() {
            continue;
        }
        let delta = factor * &m[(source, j)];
        m[(target, j)] -= delta;
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

fn negate_row(m: &mut BigMatrix, r: usize) {
    for x in m.row_mut(r) {
        *x = -std::mem::take(x);
    }
}

fn min_abs_entry(a: &BigMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some((bi, bj)) => x.abs() < a[(bi, bj)].abs(),
            };
            if better {
                best = Some((i, j));
                if x.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

/// Computes the Smith normal form, pivoting on the entry of least absolute
/// value in the trailing block.
pub fn smith_normal_form(input: &BigMatrix) -> SmithForm {
    let (m, n) = (input.rows(), input.cols());
    let mut a = input.clone();
    let mut left = BigMatrix::identity(m);
    let mut right = BigMatrix::identity(n);
    let mut factors = Vec::new();

    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_abs_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut left, i, t, &q);
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut right, j, t, &q);
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // A smaller remainder appeared; move it to the pivot and retry.
                let (pi, pj) = min_abs_in_cross(&a, t);
                a.swap_rows(t, pi);
                left.swap_rows(t, pi);
                a.swap_cols(t, pj);
                right.swap_cols(t, pj);
                continue;
            }
            // Row and column cleared; enforce divisibility of the trailing block.
            let pivot = a[(t, t)].clone();
            let offender = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !(&a[(i, j)] % &pivot).is_zero())
            });
            match offender {
                Some(i) => {
                    row_axpy(&mut a, t, i, &BigInt::from(-1));
                    row_axpy(&mut left, t, i, &BigInt::from(-1));
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            negate_row(&mut a, t);
            negate_row(&mut left, t);
        }
        factors.push(a[(t, t)].clone());
    }

    SmithForm { left, diagonal: a, right, invariant_factors: factors }
}

fn min_abs_in_cross(a: &BigMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    for i in t..a.rows() {
        let x = &a[(i, t)];
        if !x.is_zero() && x.abs() < a[best].abs() {
            best = (i, t);
        }
    }
    for j in t..a.cols() {
        let x = &a[(t, j)];
        if !x.is_zero() && x.abs() < a[best].abs() {
            best = (t, j);
        }
    }
    best
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(input: &BigMatrix) -> BigInt {
    assert_eq!(input.rows(), input.cols(), "determinant of non-square matrix");
    let n = input.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = input.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * a[(n - 1, n - 1)].clone()
}
