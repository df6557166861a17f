//! Exact integer and rational linear algebra: kernels, normal forms and
//! integer solvability with checkable certificates. No floating point.

pub mod hermite;
pub mod matrix;
pub mod rational;
pub mod smith;
pub mod solve;

pub use hermite::{hermite_normal_form, HermiteForm};
pub use matrix::{BigMatrix, ExactMatrix, IntMatrix, Matrix};
pub use rational::{kernel_basis, rref, solve_rational, AffineSolution};
pub use smith::{determinant, smith_normal_form, SmithForm};
pub use solve::{integer_solve, Certificate, IntegerSolution, Obstruction};
