//! The root system Φ of an ADE diagram: enumeration by reflection-orbit
//! closure, positivity, heights and the positive-plus-simple decomposition.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::{DiagramJson, DynkinDiagram, IntersectionForm};
use crate::error::{Error, Result};

/// Hard cap on the number of roots produced by orbit closure.
pub const CLOSURE_BUDGET: usize = 10_000;

/// A lattice vector written in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&k| k >= 0) && self.0.iter().any(|&k| k > 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|&k| -k).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "]")
    }
}

/// Enumerated roots in canonical order: positive roots by (height,
/// coefficients), then their negatives in the same order, so that root
/// `k + |Φ+|` is `−root k`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    diagram: DynkinDiagram,
    form: IntersectionForm,
    roots: Vec<Root>,
    num_positive: usize,
    simple: Vec<usize>,
    lookup: HashMap<Vec<i64>, usize>,
    /// `reflections[i][r]` is the index of `s_i · root r`.
    reflections: Vec<Vec<u32>>,
}

/// Applies `s_i v = v + (v·e_i) e_i`.
pub fn reflect(form: &IntersectionForm, i: usize, v: &[i64]) -> Vec<i64> {
    let n = form.rank();
    let dot: i64 = (0..n).map(|k| v[k] * form.matrix[(k, i)]).sum();
    let mut out = v.to_vec();
    out[i] += dot;
    out
}

/// Builds Φ as the closure of the simple roots under simple reflections.
pub fn enumerate_roots(diagram: &DynkinDiagram) -> Result<RootSystem> {
    enumerate_with_budget(diagram, CLOSURE_BUDGET)
}

pub(crate) fn enumerate_with_budget(diagram: &DynkinDiagram, budget: usize) -> Result<RootSystem> {
    let form = diagram.intersection_matrix();
    let n = diagram.rank();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let e = Root::simple(n, i).0;
        seen.insert(e.clone(), ());
        queue.push_back(e);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..n {
            let w = reflect(&form, i, &v);
            if !seen.contains_key(&w) {
                if seen.len() >= budget {
                    return Err(Error::ClosureBudgetExceeded(budget));
                }
                seen.insert(w.clone(), ());
                queue.push_back(w);
            }
        }
    }
    let mut positive: Vec<Root> = seen.into_keys().map(Root).filter(Root::is_positive).collect();
    positive.sort_by(|a, b| (a.height(), &a.0).cmp(&(b.height(), &b.0)));
    let mut roots = positive.clone();
    roots.extend(positive.iter().map(Root::neg));
    RootSystem::assemble(diagram.clone(), form, roots)
}

impl RootSystem {
    fn assemble(diagram: DynkinDiagram, form: IntersectionForm, roots: Vec<Root>) -> Result<Self> {
        let n = diagram.rank();
        let total = roots.len();
        let num_positive = total / 2;
        let lookup: HashMap<Vec<i64>, usize> = roots.iter().enumerate().map(|(k, r)| (r.0.clone(), k)).collect();
        let simple = (0..n)
            .map(|i| lookup.get(&Root::simple(n, i).0).copied().ok_or(Error::InvalidEdges(diagram.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let reflections = (0..n)
            .map(|i| {
                roots
                    .iter()
                    .map(|r| {
                        lookup
                            .get(&reflect(&form, i, &r.0))
                            .map(|&k| k as u32)
                            .ok_or(Error::ClosureBudgetExceeded(total))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RootSystem { diagram, form, roots, num_positive, simple, lookup, reflections })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn form(&self) -> &IntersectionForm {
        &self.form
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive]
    }

    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.lookup.get(&root.0).copied()
    }

    pub fn index_of_coeffs(&self, coeffs: &[i64]) -> Option<usize> {
        self.lookup.get(coeffs).copied()
    }

    /// Root index of the simple root `e_i`.
    pub fn simple_index(&self, i: usize) -> usize {
        self.simple[i]
    }

    pub fn is_positive_index(&self, k: usize) -> bool {
        k < self.num_positive
    }

    pub fn negate_index(&self, k: usize) -> usize {
        (k + self.num_positive) % self.roots.len()
    }

    /// Index of the positive representative `|α|` of `±α`.
    pub fn positive_part(&self, k: usize) -> usize {
        k % self.num_positive
    }

    /// Index of `s_i · root k`.
    pub fn reflect_index(&self, i: usize, k: usize) -> usize {
        self.reflections[i][k] as usize
    }

    pub fn reflection_perm(&self, i: usize) -> &[u32] {
        &self.reflections[i]
    }

    pub fn height_of_index(&self, k: usize) -> Result<i64> {
        if !self.is_positive_index(k) {
            return Err(Error::NotPositiveRoot(self.roots[k].0.clone()));
        }
        Ok(self.roots[k].height())
    }

    /// `Σ k_i` for a positive root.
    pub fn height(&self, alpha: &Root) -> Result<i64> {
        match self.index_of(alpha) {
            Some(k) if self.is_positive_index(k) => Ok(alpha.height()),
            _ => Err(Error::NotPositiveRoot(alpha.0.clone())),
        }
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.num_positive - 1]
    }

    /// Bilinear form value on arbitrary lattice vectors.
    pub fn pairing(&self, a: &Root, b: &Root) -> Result<i64> {
        let n = self.rank();
        for v in [a, b] {
            if v.0.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.0.len() });
            }
        }
        Ok(self.form.pairing(&a.0, &b.0))
    }

    pub fn pairing_index(&self, a: usize, b: usize) -> i64 {
        self.form.pairing(&self.roots[a].0, &self.roots[b].0)
    }

    /// All `(β, i)` with `α = β + e_i` and `β` positive; each satisfies
    /// `s_i · α = β`.
    pub fn decompose_positive(&self, alpha: &Root) -> Result<Vec<(Root, usize)>> {
        let k = self.index_of(alpha).filter(|&k| self.is_positive_index(k));
        let k = k.ok_or_else(|| Error::NotPositiveRoot(alpha.0.clone()))?;
        Ok(self
            .decompose_index(k)?
            .into_iter()
            .map(|(b, i)| (self.roots[b].clone(), i))
            .collect())
    }

    /// Index form of [`RootSystem::decompose_positive`].
    pub fn decompose_index(&self, k: usize) -> Result<Vec<(usize, usize)>> {
        if !self.is_positive_index(k) {
            return Err(Error::NotPositiveRoot(self.roots[k].0.clone()));
        }
        let alpha = &self.roots[k];
        if alpha.height() == 1 {
            return Err(Error::NotDecomposable(alpha.0.clone()));
        }
        let mut out = Vec::new();
        for i in 0..self.rank() {
            let mut beta = alpha.0.clone();
            beta[i] -= 1;
            if let Some(b) = self.index_of_coeffs(&beta) {
                if self.is_positive_index(b) {
                    out.push((b, i));
                }
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> RootSystemJson {
        RootSystemJson {
            diagram: self.diagram.to_json(),
            roots: self.roots.iter().map(|r| r.0.clone()).collect(),
            positive: (0..self.num_positive).collect(),
        }
    }

    /// Rebuilds a root system from JSON, re-checking every invariant:
    /// canonical order, norms, negation layout and closure under reflections.
    pub fn from_json(json: &RootSystemJson) -> Result<Self> {
        let diagram = DynkinDiagram::from_json(&json.diagram)?;
        let form = diagram.intersection_matrix();
        let n = diagram.rank();
        let label = diagram.to_string();
        let corrupt = || Error::InvalidEdges(format!("{label}: root table fails invariants"));
        if json.roots.len() % 2 != 0 || json.roots.iter().any(|r| r.len() != n) {
            return Err(corrupt());
        }
        let half = json.roots.len() / 2;
        if json.positive != (0..half).collect::<Vec<_>>() {
            return Err(corrupt());
        }
        let roots: Vec<Root> = json.roots.iter().cloned().map(Root).collect();
        for (k, r) in roots.iter().enumerate() {
            if form.pairing(&r.0, &r.0) != -2 {
                return Err(corrupt());
            }
            let positive = k < half;
            if positive != r.is_positive() {
                return Err(corrupt());
            }
            if !positive && roots[k - half] != r.neg() {
                return Err(corrupt());
            }
        }
        let sorted = roots[..half]
            .windows(2)
            .all(|w| (w[0].height(), &w[0].0) < (w[1].height(), &w[1].0));
        if !sorted {
            return Err(corrupt());
        }
        RootSystem::assemble(diagram, form, roots).map_err(|_| corrupt())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemJson {
    pub diagram: DiagramJson,
    pub roots: Vec<Vec<i64>>,
    pub positive: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{parse_diagram, Family};

    fn rs(spec: &str) -> RootSystem {
        enumerate_roots(&parse_diagram(spec).unwrap()).unwrap()
    }

    #[test]
    fn a1_roots() {
        let r = rs("A1");
        assert_eq!(r.roots(), &[Root(vec![1]), Root(vec![-1])]);
        assert_eq!(r.num_positive(), 1);
    }

    #[test]
    fn a2_roots_and_order() {
        let r = rs("A2");
        assert_eq!(r.len(), 6);
        assert_eq!(r.positive_roots(), &[Root(vec![0, 1]), Root(vec![1, 0]), Root(vec![1, 1])]);
        assert_eq!(r.simple_index(0), 1);
        assert_eq!(r.simple_index(1), 0);
    }

    #[test]
    fn heights() {
        let r = rs("A2");
        assert_eq!(r.height(&Root(vec![1, 0])).unwrap(), 1);
        assert_eq!(r.height(&Root(vec![1, 1])).unwrap(), 2);
        assert!(matches!(r.height(&Root(vec![-1, 0])), Err(Error::NotPositiveRoot(_))));
        assert_eq!(rs("E8").highest_root().height(), 29);
        assert_eq!(rs("E8").highest_root(), &Root(vec![2, 3, 4, 6, 5, 4, 3, 2]));
    }

    #[test]
    fn pairings() {
        let r = rs("A2");
        let e1 = Root(vec![1, 0]);
        let e2 = Root(vec![0, 1]);
        assert_eq!(r.pairing(&e1, &e1).unwrap(), -2);
        assert_eq!(r.pairing(&e1, &e2).unwrap(), 1);
        assert_eq!(r.pairing(&e1, &Root(vec![1, 1])).unwrap(), -1);
        assert!(matches!(r.pairing(&e1, &Root(vec![1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn decompositions() {
        let r = rs("A2");
        let mut d = r.decompose_positive(&Root(vec![1, 1])).unwrap();
        d.sort();
        assert_eq!(d, vec![(Root(vec![0, 1]), 0), (Root(vec![1, 0]), 1)]);
        assert!(matches!(r.decompose_positive(&Root(vec![1, 0])), Err(Error::NotDecomposable(_))));
        assert!(matches!(r.decompose_positive(&Root(vec![-1, -1])), Err(Error::NotPositiveRoot(_))));

        let d4 = rs("D4");
        let top = Root(vec![1, 2, 1, 1]);
        assert_eq!(d4.highest_root(), &top);
        let parts = d4.decompose_positive(&top).unwrap();
        assert!(!parts.is_empty());
        for (beta, i) in parts {
            assert_eq!(reflect(d4.form(), i, &top.0), beta.0);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let d = DynkinDiagram::new(Family::E, 8).unwrap();
        assert!(matches!(enumerate_with_budget(&d, 100), Err(Error::ClosureBudgetExceeded(100))));
    }

    #[test]
    fn json_roundtrip_and_tamper() {
        let r = rs("D5");
        let json = r.to_json();
        let back = RootSystem::from_json(&json).unwrap();
        assert_eq!(back.roots(), r.roots());
        let mut bad = json.clone();
        bad.roots.swap(0, 1);
        assert!(RootSystem::from_json(&bad).is_err());
        let mut bad = json;
        bad.roots[3][0] += 1;
        assert!(RootSystem::from_json(&bad).is_err());
    }
}
