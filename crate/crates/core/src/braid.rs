//! Braid words, their Weyl images, and the wall-crossing abelianization of
//! pure words onto the free abelian group on positive roots.
//!
//! Letter `j` of a word, read after the prefix with Weyl image `u`, crosses
//! exactly the hyperplane of `u · e_{i_j}` and contributes one signed
//! half-turn to the linking number with it. For a pure word the half-turn
//! totals are even and halving them gives the abelianization.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::RootSystem;
use crate::weyl::{simple_reflection, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    /// 0-based vertex.
    pub vertex: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(vertex: usize, inverse: bool) -> Self {
        Letter { vertex, inverse }
    }

    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverted(self) -> Letter {
        Letter { vertex: self.vertex, inverse: !self.inverse }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BraidWord { letters }
    }

    pub fn empty() -> Self {
        BraidWord::default()
    }

    /// Builds a word from 1-based signed generators, as in the text grammar.
    pub fn from_signed(rs: &RootSystem, signed: &[i64]) -> Result<Self> {
        signed.iter().map(|&g| letter_from_signed(rs, g)).collect::<Result<Vec<_>>>().map(BraidWord::new)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    /// `self · w · self⁻¹`.
    pub fn conjugate(&self, w: &BraidWord) -> BraidWord {
        self.concat(w).concat(&self.inverse())
    }

    pub fn insert(&self, at: usize, w: &BraidWord) -> BraidWord {
        let mut letters = self.letters[..at].to_vec();
        letters.extend_from_slice(&w.letters);
        letters.extend_from_slice(&self.letters[at..]);
        BraidWord { letters }
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.sign() * (l.vertex as i64 + 1)).collect()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.to_signed().iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

fn letter_from_signed(rs: &RootSystem, g: i64) -> Result<Letter> {
    let v = g.unsigned_abs() as usize;
    if g == 0 || v > rs.rank() {
        return Err(Error::GeneratorOutOfRange(g, rs.rank()));
    }
    Ok(Letter::new(v - 1, g < 0))
}

/// Parses whitespace-separated nonzero signed integers, e.g. `"1 2 -1"`.
pub fn parse_word(rs: &RootSystem, text: &str) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let g: i64 = tok.parse().map_err(|_| Error::UnparsableWord(text.to_string()))?;
        if g == 0 {
            return Err(Error::UnparsableWord(text.to_string()));
        }
        letters.push(letter_from_signed(rs, g)?);
    }
    Ok(BraidWord { letters })
}

/// Image under `B → W`; exponents collapse because `s_i² = 1` in `W`.
pub fn weyl_image(rs: &RootSystem, w: &BraidWord) -> WeylElement {
    let mut u = WeylElement::identity(rs);
    for l in &w.letters {
        u = u.compose(&simple_reflection(rs, l.vertex).expect("letters are validated"));
    }
    u
}

pub fn is_pure(rs: &RootSystem, w: &BraidWord) -> bool {
    image_perm(rs, w).iter().enumerate().all(|(k, &p)| k == p as usize)
}

fn image_perm(rs: &RootSystem, w: &BraidWord) -> Vec<u32> {
    let mut u: Vec<u32> = (0..rs.len() as u32).collect();
    for l in &w.letters {
        let s = rs.reflection_perm(l.vertex);
        u = s.iter().map(|&k| u[k as usize]).collect();
    }
    u
}

/// Signed half-turn counts per positive root, defined for every word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfTurns(pub Vec<i64>);

/// Runs the wall-crossing walk and returns raw half-turn counts.
pub fn half_turns(rs: &RootSystem, w: &BraidWord) -> HalfTurns {
    let mut counts = vec![0i64; rs.num_positive()];
    let mut prefix: Vec<u32> = (0..rs.len() as u32).collect();
    for l in &w.letters {
        let crossed = prefix[rs.simple_index(l.vertex)] as usize;
        counts[rs.positive_part(crossed)] += l.sign();
        let s = rs.reflection_perm(l.vertex);
        prefix = s.iter().map(|&k| prefix[k as usize]).collect();
    }
    HalfTurns(counts)
}

/// Coordinates of an element of `P^ab` over `Φ+` in canonical root order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbVector {
    coords: Vec<i64>,
}

impl AbVector {
    pub fn zero(rs: &RootSystem) -> Self {
        AbVector { coords: vec![0; rs.num_positive()] }
    }

    pub fn from_coords(coords: Vec<i64>) -> Self {
        AbVector { coords }
    }

    /// The generator `t_α` for positive root index `k`.
    pub fn basis(rs: &RootSystem, k: usize) -> Self {
        let mut v = AbVector::zero(rs);
        v.coords[k] = 1;
        v
    }

    /// Halves even half-turn counts; any odd count is an internal failure.
    pub fn from_half_turns(rs: &RootSystem, h: &HalfTurns) -> Result<Self> {
        let coords = h
            .0
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                if c % 2 != 0 {
                    Err(Error::OddHalfUnits { root: rs.root(k).coeffs().to_vec(), count: c })
                } else {
                    Ok(c / 2)
                }
            })
            .collect::<Result<_>>()?;
        Ok(AbVector { coords })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &AbVector) -> AbVector {
        AbVector { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn neg(&self) -> AbVector {
        AbVector { coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn to_json(&self, rs: &RootSystem) -> AbVectorJson {
        AbVectorJson {
            r#type: rs.diagram().to_string(),
            coords: self
                .coords
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(k, &value)| RootValue { root: rs.root(k).coeffs().to_vec(), value })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootValue {
    pub root: Vec<i64>,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbVectorJson {
    pub r#type: String,
    pub coords: Vec<RootValue>,
}

fn require_pure(rs: &RootSystem, w: &BraidWord) -> Result<()> {
    let perm = image_perm(rs, w);
    let moved: Vec<usize> = perm.iter().enumerate().filter(|(k, &p)| *k != p as usize).map(|(k, _)| k).collect();
    if moved.is_empty() {
        Ok(())
    } else {
        Err(Error::NotPure { moved })
    }
}

/// The class of a pure word in `P^ab ≅ ⊕_{α∈Φ+} ℤ`, normalized so that
/// `abelianize("i i") = t_{e_i}`.
pub fn abelianize(rs: &RootSystem, w: &BraidWord) -> Result<AbVector> {
    require_pure(rs, w)?;
    AbVector::from_half_turns(rs, &half_turns(rs, w))
}

/// `s_i · v`: moves `t_α` to `t_{s_i α}` for `α ≠ e_i` and fixes `t_{e_i}`.
pub fn act_on_ab(rs: &RootSystem, i: usize, v: &AbVector) -> Result<AbVector> {
    if i >= rs.rank() {
        return Err(Error::GeneratorOutOfRange(i as i64 + 1, rs.rank()));
    }
    let mut out = vec![0; rs.num_positive()];
    for (k, &c) in v.coords.iter().enumerate() {
        if c != 0 {
            out[rs.positive_part(rs.reflect_index(i, k))] += c;
        }
    }
    Ok(AbVector { coords: out })
}

/// Action of the Weyl image of `g` on `v`, applying the last letter first.
pub fn act_word_on_ab(rs: &RootSystem, g: &BraidWord, v: &AbVector) -> AbVector {
    g.letters.iter().rev().fold(v.clone(), |acc, l| act_on_ab(rs, l.vertex, &acc).expect("validated letters"))
}

/// Defining relators of the braid group as words.
pub fn relators(rs: &RootSystem) -> Vec<BraidWord> {
    let n = rs.rank();
    let d = rs.diagram();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (Letter::new(i, false), Letter::new(j, false));
            let w = if d.adjacent(i, j) {
                vec![a, b, a, b.inverted(), a.inverted(), b.inverted()]
            } else {
                vec![a, b, a.inverted(), b.inverted()]
            };
            out.push(BraidWord::new(w));
        }
    }
    out
}

pub mod sample {
    //! Random words for property tests and the acceptance suite.

    use rand::Rng;

    use super::*;

    pub fn random_word<R: Rng + ?Sized>(rs: &RootSystem, rng: &mut R, len: usize) -> BraidWord {
        let letters = (0..len).map(|_| Letter::new(rng.random_range(0..rs.rank()), rng.random_bool(0.5))).collect();
        BraidWord::new(letters)
    }

    /// A random pure word of length at most `max_len`, built as a product of
    /// conjugated squares, conjugated relators and free cancellations.
    pub fn random_pure_word<R: Rng + ?Sized>(rs: &RootSystem, rng: &mut R, max_len: usize) -> BraidWord {
        let rels = relators(rs);
        let mut w = BraidWord::empty();
        let mut stalls = 0;
        while stalls < 8 {
            let conj_len = rng.random_range(0..=3);
            let g = random_word(rs, rng, conj_len);
            let core = match rng.random_range(0..4) {
                0 | 1 => {
                    let l = Letter::new(rng.random_range(0..rs.rank()), rng.random_bool(0.5));
                    BraidWord::new(vec![l, l])
                }
                2 if !rels.is_empty() => {
                    let r = &rels[rng.random_range(0..rels.len())];
                    if rng.random_bool(0.5) {
                        r.inverse()
                    } else {
                        r.clone()
                    }
                }
                _ => {
                    let l = Letter::new(rng.random_range(0..rs.rank()), rng.random_bool(0.5));
                    BraidWord::new(vec![l, l.inverted()])
                }
            };
            let piece = g.conjugate(&core);
            if w.len() + piece.len() > max_len {
                stalls += 1;
                continue;
            }
            w = w.concat(&piece);
            if rng.random_bool(0.15) {
                break;
            }
        }
        w
    }
}
