use tracedcat::category::{CoCartesian, Model};
use tracedcat::eilenberg_moore::{check_trace_coherence, check_traced_monad, cocartesian_corollary_check, crosscheck_detailed};
use tracedcat::laws::{check_monoidal_laws, check_trace_axioms};
use tracedcat::model_iter::*;
use tracedcat::monads::{check_bimonad_laws, check_hopf, check_monad_laws, idempotence_suite, HopfBundle};
use tracedcat::CaseBudget;

#[test]
fn iteration_trace_axioms() {
    let m = pfn_model();
    let exact = CaseBudget::new(0).max_size(3).exhaustive();
    let r = check_trace_axioms(&m, &exact);
    assert!(r.passed() && r.exhaustive, "{:?}", r.failures.first());
    let sampled = CaseBudget::new(3).cases(300).max_size(5);
    for r in [check_monoidal_laws(&m, &sampled), check_trace_axioms(&m, &sampled)] {
        assert!(r.passed(), "{}: {:?}", r.suite, r.failures.first());
    }
}

#[test]
fn copairing_is_the_unique_factorization() {
    let m = pfn_model();
    let sets: Vec<SetObj> = m.enumerate_objects(2).unwrap();
    for a in &sets {
        for b in &sets {
            for c in &sets {
                let ab = m.tensor_obj(a, b);
                for f in m.enumerate_homs(a, c).unwrap() {
                    for g in m.enumerate_homs(b, c).unwrap() {
                        let h = m.copair(&f, &g).unwrap();
                        assert_eq!(m.compose(&h, &m.inj0(a, b)).unwrap(), f);
                        assert_eq!(m.compose(&h, &m.inj1(a, b)).unwrap(), g);
                        let all: Vec<_> = m
                            .enumerate_homs(&ab, c)
                            .unwrap()
                            .into_iter()
                            .filter(|k| m.compose(k, &m.inj0(a, b)).unwrap() == f && m.compose(k, &m.inj1(a, b)).unwrap() == g)
                            .collect();
                        assert_eq!(all, vec![h]);
                    }
                }
            }
        }
        assert_eq!(m.enumerate_homs(&SetObj::empty(), a).unwrap(), vec![m.initial_map(a)]);
    }
}

#[test]
fn empty_exception_is_the_identity_monad() {
    let m = pfn_model();
    let b = CaseBudget::new(0).max_size(3).exhaustive();
    let h = exception_hopf(&SetObj::empty());
    assert!(check_monad_laws(&m, &h.bimonad.monad, &b).passed());
    assert!(check_bimonad_laws(&m, &h.bimonad, &b).passed());
    assert!(check_hopf(&m, &h, &b).passed());
    let idem = idempotence_suite(&m, &h.bimonad, Some(&h), &b);
    assert_eq!(idem.fact("idempotent"), Some(true));
    assert!(check_trace_coherence(&m, &h, &b).passed());
}

#[test]
fn single_error_exception() {
    let m = pfn_model();
    let b = CaseBudget::new(0).max_size(2).exhaustive();
    let h = exception_hopf(&SetObj::range(1));
    assert!(check_monad_laws(&m, &h.bimonad.monad, &b).passed());
    let bim = check_bimonad_laws(&m, &h.bimonad, &b);
    assert!(!bim.passed());
    // errors go to the left factor, so only the left counit and symmetry break
    let laws: std::collections::BTreeSet<&str> = bim.failures.iter().map(|f| f.law.as_str()).collect();
    assert_eq!(laws, ["counit (left)", "symmetry"].into_iter().collect());
    let idem = idempotence_suite(&m, &h.bimonad, Some(&h), &b);
    assert_eq!(idem.fact("idempotent"), Some(false));
    assert!(check_traced_monad(&m, &h.bimonad, &b).passed());
}

#[test]
fn corollary_on_every_bundle() {
    let m = pfn_model();
    let b = CaseBudget::new(0).max_size(2).exhaustive();
    let bundles: Vec<HopfBundle<PfnModel>> =
        vec![HopfBundle::identity(), exception_hopf(&SetObj::empty()), exception_hopf(&SetObj::range(1))];
    for h in &bundles {
        let r = cocartesian_corollary_check(&m, h, &b);
        assert!(r.passed(), "{}: {:?}", h.name(), r.failures);
        let c = crosscheck_detailed(&m, h, &b);
        assert!(c.summary.passed(), "{}", h.name());
    }
}
