use ade_core::reps::*;
use ade_core::*;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn system(spec: &str) -> RootSystem {
    enumerate_roots(&parse_diagram(spec).unwrap()).unwrap()
}

/// A random integral element of the commutant of `ℤΦ`.
fn random_endomorphism(rs: &RootSystem, rng: &mut StdRng) -> ade_core::exactla::IntMatrix {
    let z = build_rep(rs, RepKind::ZPhi);
    let space = equivariant_maps(&z, &z).unwrap();
    let mut f = ade_core::exactla::IntMatrix::zeros(z.dim(), z.dim());
    for b in space.integer_basis() {
        let c = rng.random_range(-3..=3);
        for i in 0..z.dim() {
            for j in 0..z.dim() {
                f[(i, j)] += c * b[(i, j)];
            }
        }
    }
    f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn zphi_induction_recovers_commuting_maps(spec in prop::sample::select(vec!["A2", "A3", "D4", "D5", "E6"]), seed in any::<u64>()) {
        let rs = system(spec);
        let mut rng = StdRng::seed_from_u64(seed);
        let f = random_endomorphism(&rs, &mut rng);
        let target = build_rep(&rs, RepKind::ZPhi);
        let a: Vec<Vec<i64>> = (0..rs.rank()).map(|i| f.column(rs.simple_index(i))).collect();
        let table = build_from_simples(&rs, &target, &a, RepKind::ZPhi).unwrap();
        prop_assert_eq!(table.to_matrix(), f);
    }
}

#[test]
fn ses_and_nonsplit_through_rank_eight() {
    for spec in ["A1", "A2", "A4", "A8", "D4", "D6", "D8", "E6", "E7", "E8"] {
        let rs = system(spec);
        let ses = verify_ses(&rs);
        assert!(ses.passed(), "{spec}: {}", ses.witness);
        let ns = verify_nonsplit(&rs);
        assert!(ns.passed(), "{spec}: {}", ns.witness);
    }
}

#[test]
fn splitting_through_rank_eight() {
    for spec in ["A5", "A8", "D5", "D8", "E7", "E8"] {
        let rs = system(spec);
        for v in [RepKind::Pab, RepKind::ZPhi] {
            let r = verify_splitting_lemma(&rs, v);
            assert!(r.passed(), "{spec} {v}: {}", r.witness);
        }
    }
}

#[test]
fn commutant_of_pab_in_type_a_is_three_dimensional() {
    for n in 3..=7 {
        let rs = system(&format!("A{n}"));
        let pab = build_rep(&rs, RepKind::Pab);
        assert_eq!(equivariant_maps(&pab, &pab).unwrap().dim(), 3);
    }
}

#[test]
fn dense_and_orbit_commutants_agree_on_d4() {
    let rs = system("D4");
    let (pab, bar) = (build_rep(&rs, RepKind::Pab), build_rep(&rs, RepKind::PabBar));
    for (d, c) in [(&pab, &pab), (&bar, &bar), (&pab, &bar)] {
        let orbit = equivariant_maps(d, c).unwrap();
        let dense = equivariant_maps_dense(d, c).unwrap();
        assert_eq!(orbit.dim(), dense.dim());
        assert!(orbit.basis.iter().all(|b| dense.contains(b)));
    }
}

#[test]
fn reports_serialize() {
    let rs = system("A2");
    let r = run_lemma(&rs, Lemma::Nonsplit).unwrap();
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    for key in ["lemma_id", "diagram", "status", "witness", "residuals", "runtime_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["status"], "pass");
    assert_eq!(v["lemma_id"], "nonsplit");
    assert!(matches!(run_lemma(&system("D4"), Lemma::AnDecomposition), Err(Error::InvalidParams(_))));
    assert!(matches!(run_lemma(&system("A7"), Lemma::AnDecomposition), Err(Error::RankOutOfRange(7))));
}
