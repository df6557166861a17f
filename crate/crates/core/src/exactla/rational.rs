use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::ExactMatrix;

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: ExactMatrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination over the rationals. Zero entries are skipped,
/// which keeps the sparse commuting-map systems cheap.
pub fn rref(m: &ExactMatrix) -> Echelon {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a[(r, c)].recip();
        for x in a.row_mut(r).iter_mut().skip(c) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row: Vec<(usize, BigRational)> = a
            .row(r)
            .iter()
            .enumerate()
            .skip(c)
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.clone()))
            .collect();
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            let row = a.row_mut(i);
            for (j, v) in &pivot_row {
                row[*j] -= &factor * v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { reduced: a, pivots }
}

/// Exact rational basis of the null space of `m`; empty iff `m` is injective.
pub fn kernel_basis(m: &ExactMatrix) -> Vec<Vec<BigRational>> {
    let ech = rref(m);
    kernel_from_echelon(&ech, m.cols())
}

fn kernel_from_echelon(ech: &Echelon, cols: usize) -> Vec<Vec<BigRational>> {
    let mut is_pivot = vec![false; cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (r, &p) in ech.pivots.iter().enumerate() {
                let x = &ech.reduced[(r, free)];
                if !x.is_zero() {
                    v[p] = -x.clone();
                }
            }
            v
        })
        .collect()
}

/// Affine solution set of `m x = b` over the rationals.
#[derive(Clone, Debug)]
pub struct AffineSolution {
    pub particular: Vec<BigRational>,
    pub kernel: Vec<Vec<BigRational>>,
}

/// Solves `m x = b` over ℚ; `None` when inconsistent.
pub fn solve_rational(m: &ExactMatrix, b: &[BigRational]) -> Option<AffineSolution> {
    assert_eq!(m.rows(), b.len());
    let cols = m.cols();
    let augmented = ExactMatrix::from_fn(m.rows(), cols + 1, |i, j| {
        if j < cols {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let ech = rref(&augmented);
    if ech.pivots.last() == Some(&cols) {
        return None;
    }
    let mut particular = vec![BigRational::zero(); cols];
    for (r, &p) in ech.pivots.iter().enumerate() {
        particular[p] = ech.reduced[(r, cols)].clone();
    }
    let kernel = kernel_from_echelon(&ech, cols);
    Some(AffineSolution { particular, kernel })
}
