use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use super::{build_rep, verify_an_decomposition, verify_map_from_pab, verify_nonsplit, verify_ses};
use super::{verify_splitting_lemma, RepKind};
use crate::dynkin::Family;
use crate::error::{Error, Result};
use crate::roots::RootSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub lemma_id: String,
    pub diagram: String,
    pub status: Status,
    pub witness: Value,
    pub residuals: Value,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Runs `body`, timing it; `body` returns the verdict and witness.
    pub(crate) fn timed(lemma: Lemma, diagram: String, body: impl FnOnce() -> (bool, Value)) -> Self {
        let start = Instant::now();
        let (ok, witness) = body();
        VerificationReport {
            lemma_id: lemma.id().to_string(),
            diagram,
            status: Status::from_bool(ok),
            witness,
            residuals: Value::Null,
            runtime_ms: start.elapsed().as_millis() as u64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lemma {
    Relations,
    PositiveSimple,
    Ses,
    Nonsplit,
    SplittingPab,
    SplittingZPhi,
    MapFromPab,
    AnDecomposition,
}

impl Lemma {
    pub const ALL: [Lemma; 8] = [
        Lemma::Relations,
        Lemma::PositiveSimple,
        Lemma::Ses,
        Lemma::Nonsplit,
        Lemma::SplittingPab,
        Lemma::SplittingZPhi,
        Lemma::MapFromPab,
        Lemma::AnDecomposition,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Lemma::Relations => "relations",
            Lemma::PositiveSimple => "positive-simple",
            Lemma::Ses => "ses",
            Lemma::Nonsplit => "nonsplit",
            Lemma::SplittingPab => "splitting-pab",
            Lemma::SplittingZPhi => "splitting-zphi",
            Lemma::MapFromPab => "mapfrompab",
            Lemma::AnDecomposition => "an-decomp",
        }
    }

    /// Whether the lemma makes sense for this diagram.
    pub fn applies_to(self, rs: &RootSystem) -> bool {
        match self {
            Lemma::AnDecomposition => rs.diagram().family() == Family::A && rs.rank() <= 6,
            _ => true,
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Lemma {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.id() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown lemma {s:?}")))
    }
}

pub fn run_lemma(rs: &RootSystem, lemma: Lemma) -> Result<VerificationReport> {
    Ok(match lemma {
        Lemma::Relations => verify_relations(rs),
        Lemma::PositiveSimple => verify_positive_simple(rs),
        Lemma::Ses => verify_ses(rs),
        Lemma::Nonsplit => verify_nonsplit(rs),
        Lemma::SplittingPab => verify_splitting_lemma(rs, RepKind::Pab),
        Lemma::SplittingZPhi => verify_splitting_lemma(rs, RepKind::ZPhi),
        Lemma::MapFromPab => verify_map_from_pab(rs),
        Lemma::AnDecomposition => {
            if rs.diagram().family() != Family::A {
                return Err(Error::InvalidParams(format!("{} is not of type A", rs.diagram())));
            }
            verify_an_decomposition(rs.rank())?
        }
    })
}

/// Generator relations for all three representations.
pub fn verify_relations(rs: &RootSystem) -> VerificationReport {
    VerificationReport::timed(Lemma::Relations, rs.diagram().to_string(), || {
        let mut ok = true;
        let mut w = serde_json::Map::new();
        for kind in [RepKind::Pab, RepKind::ZPhi, RepKind::PabBar] {
            let res = build_rep(rs, kind).check_relations();
            ok &= res.is_ok();
            w.insert(kind.to_string(), json!(res.err().map(|e| e.to_string()).unwrap_or_else(|| "ok".into())));
        }
        (ok, Value::Object(w))
    })
}

/// Every non-simple positive root splits as `β + e_i` with `s_i α = β`.
pub fn verify_positive_simple(rs: &RootSystem) -> VerificationReport {
    VerificationReport::timed(Lemma::PositiveSimple, rs.diagram().to_string(), || {
        let mut checked = 0usize;
        let mut failures = Vec::new();
        for k in 0..rs.num_positive() {
            let alpha = rs.root(k);
            if alpha.height() == 1 {
                continue;
            }
            checked += 1;
            match rs.decompose_positive(alpha) {
                Ok(d) if !d.is_empty() => {
                    for (beta, i) in d {
                        let reflected = crate::roots::reflect(rs.form(), i, alpha.coeffs());
                        let sum: Vec<i64> =
                            beta.coeffs().iter().enumerate().map(|(j, &c)| c + i64::from(j == i)).collect();
                        if reflected != beta.coeffs() || sum != alpha.coeffs() {
                            failures.push(json!({"root": alpha.coeffs(), "vertex": i + 1}));
                        }
                    }
                }
                _ => failures.push(json!({"root": alpha.coeffs(), "vertex": Value::Null})),
            }
        }
        (failures.is_empty(), json!({"non_simple_roots": checked, "failures": failures}))
    })
}
