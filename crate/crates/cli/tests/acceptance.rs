//! Acceptance suite: nine criteria, one PASS/FAIL line each, with runtime
//! bounds. Runs without the libtest harness so the lines always print.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ade_cli::{exit, run};
use ade_core::braid::sample::{random_pure_word, random_word};
use ade_core::braid::{act_word_on_ab, relators, Letter};
use ade_core::exactla::IntMatrix;
use ade_core::oracle::{numeric_linking, OracleParams};
use ade_core::reps::*;
use ade_core::weyl::{enumerate_group, DEFAULT_GROUP_CAP};
use ade_core::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

const UP_TO_RANK_8: [&str; 16] =
    ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"];

fn system(spec: &str) -> RootSystem {
    enumerate_roots(&parse_diagram(spec).unwrap()).unwrap()
}

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn normalization() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let mut checked = 0;
    for spec in ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"] {
        let rs = system(spec);
        for i in 0..rs.rank() {
            let word = format!("{} {}", i + 1, i + 1);
            let out = run(["ade", "--cache-dir", cache, "ab", spec, &word]);
            let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
            let want = json!([{"root": Root::simple(rs.rank(), i).coeffs(), "value": 1}]);
            if out.code != exit::OK || v["coords"] != want {
                return verdict(false, format!("{spec} generator {}: {}", i + 1, out.stdout));
            }
            checked += 1;
        }
    }
    verdict(true, format!("{checked} squared generators map to t_(e_i)"))
}

fn oracle_equivalence() -> Verdict {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let params = OracleParams::default();
    let mut worst: f64 = 0.0;
    let mut nonzero = 0;
    for spec in ["A2", "A3", "D4"] {
        let rs = system(spec);
        for _ in 0..100 {
            let w = random_pure_word(&rs, &mut rng, 20);
            let combinatorial = abelianize(&rs, &w).unwrap();
            let numeric = match numeric_linking(&rs, &w, &params) {
                Ok(o) => o,
                Err(e) => return verdict(false, format!("{spec} [{w}]: {e}")),
            };
            if numeric.vector != combinatorial {
                return verdict(false, format!("{spec} [{w}]: winding disagrees"));
            }
            worst = worst.max(numeric.max_residual());
            nonzero += usize::from(!combinatorial.is_zero());
        }
    }
    verdict(worst < 1e-6, format!("300 words ({nonzero} with nonzero class), max residual {worst:.3e}"))
}

fn relator_suite() -> Verdict {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let types: Vec<RootSystem> = ["A2", "A3", "A4", "D4", "D5", "E6"].iter().map(|s| system(s)).collect();
    let (mut insertion, mut additivity, mut equivariance) = (0, 0, 0);
    for case in 0..1000 {
        let rs = &types[case % types.len()];
        let w = random_pure_word(rs, &mut rng, 20);
        let ab = abelianize(rs, &w).unwrap();

        let rels = relators(rs);
        let l = Letter::new(rng.random_range(0..rs.rank()), rng.random_bool(0.5));
        let r = if rels.is_empty() || rng.random_bool(0.25) {
            BraidWord::new(vec![l, l.inverted()])
        } else {
            rels[rng.random_range(0..rels.len())].clone()
        };
        let at = rng.random_range(0..=w.len());
        insertion += usize::from(abelianize(rs, &w.insert(at, &r)).unwrap() == ab);

        let v = random_pure_word(rs, &mut rng, 20);
        let sum = ab.add(&abelianize(rs, &v).unwrap());
        additivity += usize::from(abelianize(rs, &w.concat(&v)).unwrap() == sum);

        let g_len = rng.random_range(0..6);
        let g = random_word(rs, &mut rng, g_len);
        equivariance += usize::from(abelianize(rs, &g.conjugate(&w)).unwrap() == act_word_on_ab(rs, &g, &ab));
    }
    verdict(
        insertion == 1000 && additivity == 1000 && equivariance == 1000,
        format!("insertion {insertion}/1000, additivity {additivity}/1000, equivariance {equivariance}/1000"),
    )
}

fn all_reports(f: impl Fn(&RootSystem) -> Vec<VerificationReport>) -> Verdict {
    for spec in UP_TO_RANK_8 {
        for r in f(&system(spec)) {
            if !r.passed() {
                return verdict(false, format!("{spec} {}: {}", r.lemma_id, r.witness));
            }
        }
    }
    verdict(true, format!("{} types A1-A8, D4-D8, E6-E8", UP_TO_RANK_8.len()))
}

fn nonsplit() -> Verdict {
    all_reports(|rs| vec![verify_nonsplit(rs)])
}

fn splitting() -> Verdict {
    all_reports(|rs| vec![verify_splitting_lemma(rs, RepKind::Pab), verify_splitting_lemma(rs, RepKind::ZPhi)])
}

fn map_from_pab() -> Verdict {
    let identity = all_reports(|rs| vec![verify_map_from_pab(rs)]);
    if !identity.ok {
        return identity;
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let types: Vec<RootSystem> = ["A2", "A3", "A4", "D4", "D5", "E6"].iter().map(|s| system(s)).collect();
    for trial in 0..120 {
        let rs = &types[trial % types.len()];
        let z = build_rep(rs, RepKind::ZPhi);
        let space = equivariant_maps(&z, &z).unwrap();
        let mut f = IntMatrix::zeros(z.dim(), z.dim());
        for b in space.integer_basis() {
            let c: i64 = rng.random_range(-3..=3);
            for i in 0..z.dim() {
                for j in 0..z.dim() {
                    f[(i, j)] += c * b[(i, j)];
                }
            }
        }
        let a: Vec<Vec<i64>> = (0..rs.rank()).map(|i| f.column(rs.simple_index(i))).collect();
        match build_from_simples(rs, &z, &a, RepKind::ZPhi) {
            Ok(t) if t.to_matrix() == f => {}
            Ok(_) => return verdict(false, format!("{} trial {trial}: table differs", rs.diagram())),
            Err(e) => return verdict(false, format!("{} trial {trial}: {e}", rs.diagram())),
        }
    }
    verdict(true, format!("{}; 120 random ZPhi inputs consistent", identity.detail))
}

fn an_decomposition() -> Verdict {
    let mut parts = Vec::new();
    for n in 1..=6 {
        let r = verify_an_decomposition(n).unwrap();
        let norm = r.witness["norm"].as_i64().unwrap();
        let dim = r.witness["dim"].as_i64().unwrap() as usize;
        let want = if n <= 2 { n as i64 } else { 3 };
        if !r.passed() || norm != want || dim != (n + 1) * n / 2 {
            return verdict(false, format!("n = {n}: {}", r.witness));
        }
        parts.push(format!("n={n}: {}", r.witness["decomposition"].as_str().unwrap()));
    }
    verdict(true, parts.join("; "))
}

/// Vectors with `|v_i| ≤ 6` and self-pairing −2, by pruned search.
fn norm_two_vectors(q: &IntersectionForm) -> BTreeSet<Vec<i64>> {
    let n = q.rank();
    let mut c = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in 0..n {
            c[i][j] = -(q.matrix[(i, j)] as f64);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            c[j][i] = c[i][j];
            c[i][j] /= c[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                c[k][l] -= c[k][i] * c[i][l];
            }
        }
    }
    fn go(q: &IntersectionForm, c: &[Vec<f64>], level: usize, budget: f64, x: &mut Vec<i64>, out: &mut BTreeSet<Vec<i64>>) {
        if level == 0 {
            if q.pairing(x, x) == -2 {
                out.insert(x.clone());
            }
            return;
        }
        let i = level - 1;
        let centre: f64 = -(i + 1..x.len()).map(|j| c[i][j] * x[j] as f64).sum::<f64>();
        let w = (budget.max(0.0) / c[i][i]).sqrt() + 1e-9;
        for v in ((centre - w).ceil() as i64).max(-6)..=((centre + w).floor() as i64).min(6) {
            x[i] = v;
            go(q, c, i, budget - c[i][i] * (v as f64 - centre).powi(2), x, out);
        }
        x[i] = 0;
    }
    let mut out = BTreeSet::new();
    go(q, &c, n, 2.0, &mut vec![0; n], &mut out);
    out
}

fn structural_counts() -> Verdict {
    let mut parts = Vec::new();
    for (spec, count) in [("A1", 2), ("A2", 6), ("A3", 12), ("D4", 24), ("E6", 72), ("E7", 126), ("E8", 240)] {
        let rs = system(spec);
        let closure: BTreeSet<Vec<i64>> = rs.roots().iter().map(|r| r.coeffs().to_vec()).collect();
        let search = norm_two_vectors(rs.form());
        if rs.len() != count || closure != search {
            return verdict(false, format!("{spec}: closure {} vs search {}", closure.len(), search.len()));
        }
        parts.push(format!("{spec}={count}"));
    }
    for (spec, order) in [("A2", 6), ("A3", 24), ("D4", 192)] {
        let got = enumerate_group(&system(spec), DEFAULT_GROUP_CAP).unwrap().len();
        if got != order {
            return verdict(false, format!("|W({spec})| = {got}"));
        }
        parts.push(format!("|W({spec})|={order}"));
    }
    verdict(true, parts.join(" "))
}

fn positive_simple() -> Verdict {
    all_reports(|rs| vec![verify_positive_simple(rs)])
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, u64, fn() -> Verdict); 9] = [
        ("AC1", "normalization of squared generators", 1, normalization),
        ("AC2", "winding oracle equals wall-crossing abelianization", 60, oracle_equivalence),
        ("AC3", "relator, additivity and equivariance suite", 30, relator_suite),
        ("AC4", "no integral equivariant splitting, half-integral one exists", 120, nonsplit),
        ("AC5", "constrained equivariant endomorphisms are exactly +-Id", 300, splitting),
        ("AC6", "height induction from simple images", 120, map_from_pab),
        ("AC7", "pair character decomposition of S_(n+1)", 5, an_decomposition),
        ("AC8", "root counts and Weyl group orders", 60, structural_counts),
        ("AC9", "positive roots decompose as positive plus simple", 10, positive_simple),
    ];
    let mut failures = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let v = check();
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(limit);
        let ok = v.ok && in_time;
        failures += usize::from(!ok);
        let timing = if in_time { String::new() } else { format!(" (exceeded {limit}s)") };
        println!(
            "[{}] {id} {name}: {} [{:.3}s]{timing}",
            if ok { "PASS" } else { "FAIL" },
            v.detail,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
