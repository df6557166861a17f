use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::matrix::BigMatrix;
use super::smith::smith_normal_form;

/// Why an integer system has no solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// No rational solution at all.
    Rational,
    /// Rationally solvable, but an invariant factor fails to divide.
    Divisor { divisor: String },
}

/// A rational row combination `y` with `y·M` integral and `y·b` not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub combination: Vec<BigRational>,
    pub obstruction: Obstruction,
}

impl Certificate {
    /// Checks the certificate by direct multiplication, independently of the
    /// normal form that produced it.
    pub fn validate(&self, m: &BigMatrix, b: &[BigInt]) -> bool {
        if self.combination.len() != m.rows() || b.len() != m.rows() {
            return false;
        }
        let row_integral = (0..m.cols()).all(|j| {
            let s: BigRational = (0..m.rows())
                .filter(|&i| !m[(i, j)].is_zero())
                .map(|i| &self.combination[i] * BigRational::from_integer(m[(i, j)].clone()))
                .sum();
            s.is_integer()
        });
        let yb: BigRational = self
            .combination
            .iter()
            .zip(b)
            .map(|(y, x)| y * BigRational::from_integer(x.clone()))
            .sum();
        row_integral && !yb.is_integer()
    }

    pub fn value_on_rhs(&self, b: &[BigInt]) -> BigRational {
        self.combination.iter().zip(b).map(|(y, x)| y * BigRational::from_integer(x.clone())).sum()
    }
}

#[derive(Clone, Debug)]
pub enum IntegerSolution {
    Solution(Vec<BigInt>),
    Infeasible(Certificate),
}

impl IntegerSolution {
    pub fn is_feasible(&self) -> bool {
        matches!(self, IntegerSolution::Solution(_))
    }
}

/// Solves `m x = b` over ℤ via the Smith form `U m V = D`.
pub fn integer_solve(m: &BigMatrix, b: &[BigInt]) -> IntegerSolution {
    assert_eq!(m.rows(), b.len(), "right-hand side length");
    let smith = smith_normal_form(m);
    let c = smith.left.apply(b);
    let rank = smith.rank();
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < rank {
            let d = &smith.invariant_factors[i];
            let (q, r) = ci.div_rem(d);
            if !r.is_zero() {
                let scale = BigRational::new(BigInt::one(), d.clone());
                let combination = smith.left.row(i).iter().map(|u| BigRational::from_integer(u.clone()) * &scale).collect();
                return IntegerSolution::Infeasible(Certificate {
                    combination,
                    obstruction: Obstruction::Divisor { divisor: d.to_string() },
                });
            }
            y[i] = q;
        } else if !ci.is_zero() {
            // Row i of U annihilates m; rescale so y·b = 1/2.
            let scale = BigRational::new(BigInt::one(), BigInt::from(2) * ci);
            let combination = smith.left.row(i).iter().map(|u| BigRational::from_integer(u.clone()) * &scale).collect();
            return IntegerSolution::Infeasible(Certificate { combination, obstruction: Obstruction::Rational });
        }
    }
    let x = smith.right.apply(&y);
    debug_assert_eq!(&m.apply(&x), b);
    IntegerSolution::Solution(x)
}

/// Formats a rational as `p` or `p/q`.
pub fn rational_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_unit(x: &BigInt) -> bool {
    x.abs().is_one()
}
