//! Numerical winding oracle: walks the literal loop of a pure word in the
//! complexified hyperplane complement and measures how often each root
//! functional winds around zero.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::braid::{is_pure, weyl_image, AbVector, BraidWord};
use crate::error::{Error, Result};
use crate::exactla::{solve_rational, IntMatrix};
use crate::roots::RootSystem;
use crate::weyl::{simple_reflection, WeylElement};

/// Rotation sense for a positive letter; fixed so that `"i i"` winds once
/// positively around the wall of `e_i`.
const POSITIVE_SENSE: f64 = 1.0;

#[derive(Clone, Debug, PartialEq)]
pub struct OracleParams {
    pub samples_per_segment: usize,
    /// Detour radius as a fraction of the segment length.
    pub detour_radius: Rational64,
    pub rounding_tolerance: f64,
    pub proximity_epsilon: f64,
}

impl Default for OracleParams {
    fn default() -> Self {
        OracleParams {
            samples_per_segment: 64,
            detour_radius: Rational64::new(1, 8),
            rounding_tolerance: 1e-6,
            proximity_epsilon: 1e-9,
        }
    }
}

impl OracleParams {
    pub fn validate(&self) -> Result<()> {
        let half = Rational64::new(1, 2);
        let zero = Rational64::new(0, 1);
        if self.samples_per_segment == 0 {
            return Err(Error::InvalidParams("samples_per_segment must be positive".into()));
        }
        if self.detour_radius <= zero || self.detour_radius >= half {
            return Err(Error::InvalidParams("detour_radius must lie in (0, 1/2)".into()));
        }
        if !(self.rounding_tolerance > 0.0) || !self.rounding_tolerance.is_finite() {
            return Err(Error::InvalidParams("rounding_tolerance must be positive".into()));
        }
        if !(self.proximity_epsilon > 0.0) || !self.proximity_epsilon.is_finite() {
            return Err(Error::InvalidParams("proximity_epsilon must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct OracleOutput {
    pub vector: AbVector,
    /// Raw winding `Δarg / 2π` per positive root.
    pub windings: Vec<f64>,
    /// Distance of each winding from its rounded value.
    pub residuals: Vec<f64>,
}

impl OracleOutput {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootResidual {
    pub root: Vec<i64>,
    pub winding: f64,
    pub residual: f64,
}

impl OracleOutput {
    pub fn residual_table(&self, rs: &RootSystem) -> Vec<RootResidual> {
        (0..rs.num_positive())
            .map(|k| RootResidual {
                root: rs.root(k).coeffs().to_vec(),
                winding: self.windings[k],
                residual: self.residuals[k],
            })
            .collect()
    }
}

/// Coefficients of the base point `x0` with `x0·e_i = −1` for every `i`.
pub fn base_point(rs: &RootSystem) -> Vec<f64> {
    let n = rs.rank();
    let q = rs.form().matrix.to_rational();
    let rhs: Vec<_> = (0..n).map(|_| num_rational::BigRational::from_integer((-1).into())).collect();
    let sol = solve_rational(&q, &rhs).expect("intersection form is nondegenerate");
    sol.particular.iter().map(|x| x.to_f64().expect("finite")).collect()
}

fn functional_rows(rs: &RootSystem) -> Vec<Vec<f64>> {
    let q = &rs.form().matrix;
    rs.positive_roots()
        .iter()
        .map(|r| {
            (0..rs.rank())
                .map(|j| r.coeffs().iter().enumerate().map(|(i, &c)| c * q[(i, j)]).sum::<i64>() as f64)
                .collect()
        })
        .collect()
}

fn mat_vec(m: &IntMatrix, v: &[f64]) -> Vec<f64> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)] as f64 * v[j]).sum()).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Parameter values `ζ ∈ [0,1]` along one letter's path, with semicircular
/// detours of radius `r` around each real crossing in `crossings`.
fn path_samples(crossings: &[f64], r: f64, sense: f64, samples: usize) -> Vec<Complex64> {
    let mut pts = vec![Complex64::new(0.0, 0.0)];
    let mut start = 0.0;
    let line = |pts: &mut Vec<Complex64>, a: f64, b: f64| {
        for k in 1..=samples {
            pts.push(Complex64::new(a + (b - a) * k as f64 / samples as f64, 0.0));
        }
    };
    for &c in crossings {
        line(&mut pts, start, c - r);
        for k in 1..=samples {
            let theta = PI * k as f64 / samples as f64;
            pts.push(Complex64::new(c, 0.0) - r * Complex64::from_polar(1.0, sense * theta));
        }
        start = c + r;
    }
    line(&mut pts, start, 1.0);
    pts
}

/// Distance from 0 to the segment `[p, q]` in ℂ.
fn chord_distance(p: Complex64, q: Complex64) -> f64 {
    let d = q - p;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return p.norm();
    }
    let t = (-(p.re * d.re + p.im * d.im) / len2).clamp(0.0, 1.0);
    (p + d * t).norm()
}

/// Linking numbers of the loop of `w` with each complexified root hyperplane.
pub fn numeric_linking(rs: &RootSystem, w: &BraidWord, p: &OracleParams) -> Result<OracleOutput> {
    p.validate()?;
    if !is_pure(rs, w) {
        let perm = weyl_image(rs, w);
        let moved = perm.perm().iter().enumerate().filter(|(k, &q)| *k != q as usize).map(|(k, _)| k).collect();
        return Err(Error::NotPure { moved });
    }
    let x0 = base_point(rs);
    let g = functional_rows(rs);
    let npos = rs.num_positive();
    let r = p.detour_radius.to_f64().expect("finite radius");
    let mut total = vec![0.0f64; npos];
    let mut u = WeylElement::identity(rs);

    for l in w.letters() {
        let s = simple_reflection(rs, l.vertex)?;
        let start = mat_vec(u.matrix(), &x0);
        let next = u.compose(&s);
        let end = mat_vec(next.matrix(), &x0);
        let dir: Vec<f64> = end.iter().zip(&start).map(|(e, s)| e - s).collect();
        let lin: Vec<(f64, f64)> = g.iter().map(|row| (dot(row, &start), dot(row, &dir))).collect();

        let mut crossings: Vec<f64> = lin
            .iter()
            .filter(|(a, b)| *b != 0.0 && a.signum() != (a + b).signum())
            .map(|(a, b)| -a / b)
            .collect();
        crossings.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        crossings.dedup_by(|a, b| (*a - *b).abs() < 1e-12);

        let sense = POSITIVE_SENSE * l.sign() as f64;
        let pts = path_samples(&crossings, r, sense, p.samples_per_segment);
        for (k, &(a, b)) in lin.iter().enumerate() {
            let mut prev = Complex64::new(a, 0.0) + pts[0] * b;
            for z in &pts[1..] {
                let f = Complex64::new(a, 0.0) + z * b;
                // the functional is affine along each chord, so the chord's
                // distance to 0 is the closest approach to the wall
                let distance = chord_distance(prev, f);
                if distance < p.proximity_epsilon {
                    return Err(Error::PathTooCloseToHyperplane { root: rs.root(k).coeffs().to_vec(), distance });
                }
                total[k] += (f / prev).arg();
                prev = f;
            }
        }
        u = next;
    }

    let windings: Vec<f64> = total.iter().map(|t| t / (2.0 * PI)).collect();
    let residuals: Vec<f64> = windings.iter().map(|x| (x - x.round()).abs()).collect();
    for (k, &res) in residuals.iter().enumerate() {
        if res > p.rounding_tolerance {
            return Err(Error::RoundingResidualTooLarge { root: rs.root(k).coeffs().to_vec(), residual: res });
        }
    }
    let coords = windings.iter().map(|x| x.round() as i64).collect();
    Ok(OracleOutput { vector: AbVector::from_coords(coords), windings, residuals })
}
