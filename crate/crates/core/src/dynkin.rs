//! Simply-laced Dynkin diagrams with Bourbaki vertex numbering.
//!
//! Vertices are 0-based in the API; text and JSON use Bourbaki's 1-based
//! labels.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{determinant, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    family: Family,
    rank: usize,
    edges: Vec<(usize, usize)>,
}

fn bourbaki_edges(family: Family, rank: usize) -> Vec<(usize, usize)> {
    match family {
        Family::A => (1..rank).map(|i| (i - 1, i)).collect(),
        Family::D => {
            let mut e: Vec<_> = (1..rank - 2).map(|i| (i - 1, i)).collect();
            e.push((rank - 3, rank - 2));
            e.push((rank - 3, rank - 1));
            e
        }
        Family::E => {
            // 1-3-4-...-n with 2 attached to 4
            let mut e = vec![(0, 2)];
            e.extend((3..rank).map(|i| (i - 1, i)));
            e.push((1, 3));
            e
        }
    }
}

fn normalize(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    e.sort_unstable();
    e.dedup();
    e
}

impl DynkinDiagram {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::InvalidRank { family: family.letter(), rank });
        }
        Ok(DynkinDiagram { family, rank, edges: normalize(&bourbaki_edges(family, rank)) })
    }

    /// Rebuilds a diagram from serialized parts, rejecting any edge set that
    /// is not exactly the named Bourbaki diagram.
    pub fn from_parts(family: Family, rank: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let d = DynkinDiagram::new(family, rank)?;
        if normalize(edges) != d.edges {
            return Err(Error::InvalidEdges(d.to_string()));
        }
        Ok(d)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edges as sorted 0-based pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.edges.binary_search(&key).is_ok()
    }

    /// The intersection form: −2 on the diagonal, 1 on edges, 0 elsewhere.
    pub fn intersection_matrix(&self) -> IntersectionForm {
        let n = self.rank;
        IntersectionForm {
            matrix: IntMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    -2
                } else if self.adjacent(i, j) {
                    1
                } else {
                    0
                }
            }),
        }
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            family: self.family,
            rank: self.rank,
            edges: self.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
        }
    }

    pub fn from_json(json: &DiagramJson) -> Result<Self> {
        let edges: Vec<(usize, usize)> = json
            .edges
            .iter()
            .map(|&[a, b]| {
                if a == 0 || b == 0 {
                    Err(Error::InvalidEdges(format!("{}{}", json.family.letter(), json.rank)))
                } else {
                    Ok((a - 1, b - 1))
                }
            })
            .collect::<Result<_>>()?;
        DynkinDiagram::from_parts(json.family, json.rank, &edges)
    }
}

/// Parses a spec such as `"E8"`.
pub fn parse_diagram(spec: &str) -> Result<DynkinDiagram> {
    let bad = || Error::UnparsableSpec(spec.to_string());
    let mut chars = spec.chars();
    let family = match chars.next() {
        Some('A') => Family::A,
        Some('D') => Family::D,
        Some('E') => Family::E,
        _ => return Err(bad()),
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let rank: usize = digits.parse().map_err(|_| bad())?;
    DynkinDiagram::new(family, rank)
}

impl FromStr for DynkinDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_diagram(s)
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub family: Family,
    pub rank: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm {
    pub matrix: IntMatrix,
}

impl IntersectionForm {
    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.matrix[(i, j)] * b[j];
            }
        }
        s
    }

    /// Leading principal minors `det_1, …, det_n`, computed exactly.
    pub fn leading_minors(&self) -> Vec<BigInt> {
        let m = self.matrix.to_big();
        (1..=self.rank())
            .map(|k| determinant(&crate::exactla::BigMatrix::from_fn(k, k, |i, j| m[(i, j)].clone())))
            .collect()
    }

    /// Sylvester's criterion for negative-definiteness: `(−1)^k det_k > 0`.
    pub fn is_negative_definite(&self) -> bool {
        self.leading_minors().iter().enumerate().all(|(k, d)| {
            if d.is_zero() {
                return false;
            }
            let odd = (k + 1) % 2 == 1;
            if odd {
                d.is_negative()
            } else {
                d.is_positive()
            }
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_is_a_path() {
        let d = parse_diagram("A2").unwrap();
        assert_eq!(d.rank(), 2);
        assert_eq!(d.edges(), &[(0, 1)]);
    }

    #[test]
    fn e8_bourbaki_edges() {
        let d = parse_diagram("E8").unwrap();
        let json = d.to_json();
        let mut want = vec![[1, 3], [3, 4], [4, 5], [5, 6], [6, 7], [7, 8], [2, 4]];
        want.sort();
        assert_eq!(json.edges, want);
    }

    #[test]
    fn d4_intersection_form() {
        let q = parse_diagram("D4").unwrap().intersection_matrix();
        let want = IntMatrix::from_rows(vec![
            vec![-2, 1, 0, 0],
            vec![1, -2, 1, 1],
            vec![0, 1, -2, 0],
            vec![0, 1, 0, -2],
        ]);
        assert_eq!(q.matrix, want);
    }

    #[test]
    fn small_forms() {
        assert_eq!(parse_diagram("A1").unwrap().intersection_matrix().matrix, IntMatrix::from_rows(vec![vec![-2]]));
        assert_eq!(
            parse_diagram("A2").unwrap().intersection_matrix().matrix,
            IntMatrix::from_rows(vec![vec![-2, 1], vec![1, -2]])
        );
    }

    #[test]
    fn invalid_specs() {
        assert!(matches!(parse_diagram("D3"), Err(Error::InvalidRank { family: 'D', rank: 3 })));
        assert!(matches!(parse_diagram("E9"), Err(Error::InvalidRank { .. })));
        assert!(matches!(parse_diagram("A0"), Err(Error::InvalidRank { .. })));
        for bad in ["", "B2", "A", "a2", "A2x", "A-1", " A2", "E+8"] {
            assert!(matches!(parse_diagram(bad), Err(Error::UnparsableSpec(_))), "{bad}");
        }
    }

    #[test]
    fn rejects_foreign_edges() {
        assert!(DynkinDiagram::from_parts(Family::A, 3, &[(0, 1), (0, 2)]).is_err());
        assert!(DynkinDiagram::from_parts(Family::A, 3, &[(1, 0), (2, 1)]).is_ok());
        // disconnected
        assert!(DynkinDiagram::from_parts(Family::A, 3, &[(0, 1)]).is_err());
    }

    #[test]
    fn forms_are_negative_definite_up_to_rank_8() {
        for spec in ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"] {
            let q = parse_diagram(spec).unwrap().intersection_matrix();
            assert!(q.is_symmetric(), "{spec}");
            assert!(q.is_negative_definite(), "{spec}");
            assert!((0..q.rank()).all(|i| q.matrix[(i, i)] == -2));
        }
    }

    #[test]
    fn render_parse_roundtrip() {
        for spec in ["A1", "A12", "D4", "D10", "E6", "E7", "E8"] {
            let d = parse_diagram(spec).unwrap();
            assert_eq!(d.to_string(), spec);
            assert_eq!(DynkinDiagram::from_json(&d.to_json()).unwrap(), d);
        }
    }
}
