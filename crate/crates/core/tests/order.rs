use serde_json::json;
use tracedcat::category::{fix_from_trace, trace_from_fix, Conway, Model, PairModel};
use tracedcat::eilenberg_moore::check_traced_monad;
use tracedcat::laws::{check_conway_axioms, check_monoidal_laws, check_snake, check_trace_axioms};
use tracedcat::model_order::*;
use tracedcat::monads::{check_bimonad_laws, check_hopf, check_monad_laws, idempotence_suite, trace_meta_check};
use tracedcat::CaseBudget;

#[test]
fn integers_pass_all_suites_exhaustively() {
    let m = int_poset_model();
    let b = CaseBudget::new(0).max_size(6).exhaustive();
    for r in [check_monoidal_laws(&m, &b), check_trace_axioms(&m, &b), check_snake(&m, &b)] {
        assert!(r.passed() && r.exhaustive, "{}: {:?}", r.suite, r.failures.first());
    }
}

#[test]
fn n_is_traced_idempotent_and_not_hopf() {
    let m = int_poset_model();
    let b = CaseBudget::new(0).max_size(6).exhaustive();
    let n = n_monad();
    assert!(check_monad_laws(&m, &n.monad, &b).passed());
    assert!(check_bimonad_laws(&m, &n, &b).passed());
    let traced = check_traced_monad(&m, &n, &b);
    assert!(traced.passed() && traced.exhaustive, "{:?}", traced.failures.first());

    let h = n_hopf_attempt();
    let hopf = check_hopf(&m, &h, &b);
    assert!(!hopf.passed());
    let first = hopf.failures_of("fusion inverse").next().unwrap();
    // size-ordered enumeration meets (−1, 1) before (−2, 1)
    assert_eq!(first.inputs["objects"], json!([-1, 1]));
    assert_eq!((&first.lhs, &first.rhs), (&json!(0), &json!(1)));
    let registered = hopf
        .failures_of("fusion inverse")
        .find(|f| f.inputs["objects"] == json!([-2, 1]))
        .unwrap();
    assert_eq!((&registered.lhs, &registered.rhs), (&json!(0), &json!(1)));

    let idem = idempotence_suite(&m, &n, Some(&h), &b);
    assert!(idem.passed(), "{:?}", idem.failures);
    assert_eq!(idem.fact("idempotent"), Some(true));
    assert!(trace_meta_check(&m, &n).unwrap().holds);
}

#[test]
fn lfp_and_gfp_traces_satisfy_the_axioms() {
    let b = CaseBudget::new(4).cases(150).max_size(4);
    let (lfp, gfp) = bounded_poset_two_traces();
    for m in [fincppo_model(), lfp, gfp] {
        for r in [check_monoidal_laws(&m, &b), check_trace_axioms(&m, &b), check_conway_axioms(&m, &b)] {
            assert!(r.passed(), "{} {}: {:?}", m.name(), r.suite, r.failures.first());
            assert!(r.cases_run >= 150);
        }
    }
}

#[test]
fn conway_and_trace_round_trip() {
    let m = fincppo_model();
    let b = CaseBudget::new(8);
    for i in 0..100 {
        let mut rng = b.rng(i);
        let (a, bb, x) = (m.sample_object(&mut rng, 4), m.sample_object(&mut rng, 4), m.sample_object(&mut rng, 4));
        let f = m.sample_morphism(&mut rng, &m.tensor_obj(&a, &x), &m.tensor_obj(&bb, &x)).unwrap();
        let via_fix = trace_from_fix(&m, &x, &a, &bb, &f).unwrap();
        assert_eq!(via_fix, m.trace(&x, &a, &bb, &f).unwrap());
        let g = m.sample_morphism(&mut rng, &m.tensor_obj(&a, &x), &x).unwrap();
        assert_eq!(fix_from_trace(&m, &x, &a, &g).unwrap(), m.fix(&x, &a, &g).unwrap());
    }
}

#[test]
fn sierpinski_meet_is_traced_without_antipode() {
    let m = fincppo_model();
    let b = CaseBudget::new(0).max_size(3).exhaustive();
    let r = sierpinski_meet(&m, &b).unwrap();
    assert!(r.bimonad.passed(), "{:?}", r.bimonad.failures.first());
    assert!(r.traced.passed() && r.traced.exhaustive, "{:?}", r.traced.failures.first());
    assert!(r.via_fix.passed() && r.via_fix.exhaustive, "{:?}", r.via_fix.failures.first());
    assert!(r.regular_module_ok);
    assert_eq!(r.antipode_candidates.len(), 3);
    assert!(!r.antipode_found());
    assert!(!r.monoid.passed());
}

#[test]
fn sierpinski_join_fixed_point_is_not_a_module_map() {
    let m = fincppo_model();
    let b = CaseBudget::new(0).max_size(3).exhaustive();
    let r = sierpinski_join(&m, &b).unwrap();
    assert!(r.bimonad.passed());
    assert!(!r.via_fix.passed());
    assert!(r.witness.projection_is_module_morphism);
    assert_eq!(r.witness.fixed_point.table, vec![BOT, BOT]);
    assert_eq!((r.witness.lhs.as_str(), r.witness.rhs.as_str()), ("⊥", "⊤"));
    assert!(r.witness_found_by_checker);
}

#[test]
fn two_traces_differ_and_diagonal_fails() {
    let (lo, hi) = distinctness_witness().unwrap();
    assert_eq!(lo.table, vec![BOT]);
    assert_eq!(hi.table, vec![TOP]);
    let b = CaseBudget::new(2).cases(150).max_size(4);
    let agree = check_traces_agree(&b);
    assert!(!agree.passed());
    assert_eq!(agree.failures[0].lhs["table"], json!([["∗", "⊥"]]));
    assert_eq!(agree.failures[0].rhs["table"], json!([["∗", "⊤"]]));
    let pair: PairModel<_, _> = pointwise_model();
    let r = check_trace_axioms(&pair, &b);
    assert!(r.passed(), "{:?}", r.failures.first());
    let diag = diagonal_preservation_check(&b);
    assert!(!diag.passed());
    assert_eq!(diag.failures[0].inputs["f"], serde_json::to_value(copy_witness()).unwrap());
}

#[test]
fn round_trip_suite_passes_on_fincppo() {
    let m = fincppo_model();
    let r = tracedcat::laws::check_conway_trace_round_trips(&m, &CaseBudget::new(3).cases(100).max_size(4));
    assert!(r.passed(), "{:?}", r.failures.first());
    assert!(r.cases_run >= 100);
}
