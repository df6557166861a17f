//! Spaces of equivariant maps between monomial representations.
//!
//! For monomial generators the relation `cod(s)·F = F·dom(s)` ties entry
//! `(y, x)` to entry `(τ'(y), τ(x))` up to sign, so the commutant is spanned
//! by signed orbit indicators on the index grid. Orbits that meet themselves
//! with opposite sign are forced to zero. The indicators have disjoint
//! supports and ±1 entries, so they form a ℤ-basis of the integral maps too.
//! A dense kernel computation on the stacked linear system is kept as an
//! independent route for small cases.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{same_diagram, WRepresentation};
use crate::error::Result;
use crate::exactla::{kernel_basis, ExactMatrix, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Signed orbit decomposition of the index grid.
    Orbits,
    /// Exact kernel of the stacked system over ℚ.
    DenseKernel,
}

#[derive(Clone, Debug)]
pub struct EquivariantMapSpace {
    pub route: Route,
    pub rows: usize,
    pub cols: usize,
    /// Rational basis; for [`Route::Orbits`] it is also a ℤ-basis of the
    /// integral equivariant maps.
    pub basis: Vec<ExactMatrix>,
}

impl EquivariantMapSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_integral_basis(&self) -> bool {
        self.route == Route::Orbits
    }

    /// Basis matrices with integer entries; panics on a non-integral basis.
    pub fn integer_basis(&self) -> Vec<IntMatrix> {
        self.basis
            .iter()
            .map(|b| {
                b.map(|x| {
                    assert!(x.is_integer(), "non-integral basis entry");
                    x.to_integer().to_i64().expect("small entry")
                })
            })
            .collect()
    }

    pub fn combine(&self, coeffs: &[BigRational]) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.rows, self.cols);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                for j in 0..self.cols {
                    if !b[(i, j)].is_zero() {
                        out[(i, j)] = &out[(i, j)] + c * &b[(i, j)];
                    }
                }
            }
        }
        out
    }

    /// Whether `f` lies in the rational span of the basis.
    pub fn contains(&self, f: &ExactMatrix) -> bool {
        if f.rows() != self.rows || f.cols() != self.cols {
            return false;
        }
        let cells = self.rows * self.cols;
        let m = ExactMatrix::from_fn(cells, self.dim(), |c, k| self.basis[k][(c / self.cols, c % self.cols)].clone());
        let b: Vec<BigRational> = (0..cells).map(|c| f[(c / self.cols, c % self.cols)].clone()).collect();
        crate::exactla::solve_rational(&m, &b).is_some()
    }
}

struct SignedUnionFind {
    parent: Vec<u32>,
    // sign of a node relative to its parent
    parity: Vec<bool>,
    broken: Vec<bool>,
}

impl SignedUnionFind {
    fn new(n: usize) -> Self {
        SignedUnionFind { parent: (0..n as u32).collect(), parity: vec![false; n], broken: vec![false; n] }
    }

    /// Root of `x` and the parity of `x` relative to it.
    fn find(&mut self, x: usize) -> (usize, bool) {
        let mut path = Vec::new();
        let mut cur = x;
        while self.parent[cur] as usize != cur {
            path.push(cur);
            cur = self.parent[cur] as usize;
        }
        let root = cur;
        // compress from the top down so parities accumulate correctly
        let mut acc = false;
        for &node in path.iter().rev() {
            acc ^= self.parity[node];
            self.parity[node] = acc;
            self.parent[node] = root as u32;
        }
        (root, if path.is_empty() { false } else { self.parity[x] })
    }

    /// Records `value(a) = (−1)^odd · value(b)`.
    fn union(&mut self, a: usize, b: usize, odd: bool) {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            if pa ^ pb != odd {
                self.broken[ra] = true;
            }
            return;
        }
        self.parent[ra] = rb as u32;
        self.parity[ra] = pa ^ pb ^ odd;
        self.broken[rb] |= self.broken[ra];
    }
}

/// The commutant `Hom_W(dom, cod)` by signed orbits.
pub fn equivariant_maps(dom: &WRepresentation, cod: &WRepresentation) -> Result<EquivariantMapSpace> {
    same_diagram(dom, cod)?;
    let (m, n) = (cod.dim(), dom.dim());
    let cell = |y: usize, x: usize| y * n + x;
    let mut uf = SignedUnionFind::new(m * n);
    for i in 0..dom.rank() {
        let (d, c) = (dom.monomial(i), cod.monomial(i));
        for y in 0..m {
            for x in 0..n {
                // F[τ'(y)][τ(x)] = σ'_y σ_x F[y][x]
                let odd = (c.sign[y] * d.sign[x]) < 0;
                uf.union(cell(c.image[y] as usize, d.image[x] as usize), cell(y, x), odd);
            }
        }
    }
    let mut slot = vec![usize::MAX; m * n];
    let mut basis: Vec<ExactMatrix> = Vec::new();
    let one = BigRational::from_integer(1.into());
    for y in 0..m {
        for x in 0..n {
            let (r, p) = uf.find(cell(y, x));
            if uf.broken[r] {
                continue;
            }
            if slot[r] == usize::MAX {
                slot[r] = basis.len();
                basis.push(ExactMatrix::zeros(m, n));
            }
            basis[slot[r]][(y, x)] = if p { -one.clone() } else { one.clone() };
        }
    }
    Ok(EquivariantMapSpace { route: Route::Orbits, rows: m, cols: n, basis })
}

/// The commutant as the exact rational kernel of the stacked system
/// `cod(s_i)·F − F·dom(s_i) = 0`. Cost grows with `(dim dom · dim cod)²`.
pub fn equivariant_maps_dense(dom: &WRepresentation, cod: &WRepresentation) -> Result<EquivariantMapSpace> {
    same_diagram(dom, cod)?;
    let (m, n) = (cod.dim(), dom.dim());
    let unknowns = m * n;
    let mut sys = ExactMatrix::zeros(dom.rank() * unknowns, unknowns);
    for i in 0..dom.rank() {
        let (a, b) = (cod.generator(i), dom.generator(i));
        for y in 0..m {
            for x in 0..n {
                let row = i * unknowns + y * n + x;
                // (A F)[y][x] = Σ_k A[y][k] F[k][x]
                for k in 0..m {
                    if a[(y, k)] != 0 {
                        let c = k * n + x;
                        sys[(row, c)] = &sys[(row, c)] + BigRational::from_integer(a[(y, k)].into());
                    }
                }
                // (F B)[y][x] = Σ_k F[y][k] B[k][x]
                for k in 0..n {
                    if b[(k, x)] != 0 {
                        let c = y * n + k;
                        sys[(row, c)] = &sys[(row, c)] - BigRational::from_integer(b[(k, x)].into());
                    }
                }
            }
        }
    }
    let basis = kernel_basis(&sys)
        .into_iter()
        .map(|v| ExactMatrix::from_fn(m, n, |y, x| v[y * n + x].clone()))
        .collect();
    Ok(EquivariantMapSpace { route: Route::DenseKernel, rows: m, cols: n, basis })
}
