use tracedcat::category::{compact_trace, Model};
use tracedcat::eilenberg_moore::{
    algebra_tensor, check_trace_coherence, check_traced_monad, crosscheck_detailed, enumerate_algebras, free_algebra,
    unit_algebra,
};
use tracedcat::group::GroupTable;
use tracedcat::hopf_monoid::{
    group_algebra, induced_hopf_monad, is_module_morphism, module_morphism_sides, module_tensor,
    validate_hopf_monoid, verify_representable_coherence,
};
use tracedcat::laws::{check_monoidal_laws, check_snake, check_trace_axioms};
use tracedcat::model_linear::{dual_algebra, partial_trace, q, Dim, Mat, RatMatrix, RepKind, RepresentationSource};
use tracedcat::monads::{
    check_bimonad_laws, check_hopf, check_monad_laws, fusion_left, idempotence_suite, trace_meta_check, HopfBundle,
};
use tracedcat::CaseBudget;

fn c2() -> HopfBundle<Mat> {
    let d = group_algebra("C2", &GroupTable::cyclic(2)).unwrap();
    induced_hopf_monad(&Mat::new(), &d).unwrap()
}

#[test]
fn monoidal_and_trace_axioms() {
    let m = Mat::new();
    let budget = CaseBudget::new(11).cases(200).max_size(4);
    let r = check_monoidal_laws(&m, &budget);
    assert!(r.passed(), "{:?}", r.failures.first());
    let r = check_trace_axioms(&m, &budget);
    assert!(r.passed(), "{:?}", r.failures.first());
    assert!(r.cases_run >= 200);
    let r = check_snake(&m, &CaseBudget::new(1).max_size(6));
    assert!(r.passed());
}

#[test]
fn index_sum_matches_composite_on_random_cases() {
    let m = Mat::new();
    let budget = CaseBudget::new(5);
    for i in 0..200 {
        let mut rng = budget.rng(i);
        let (x, a, b) = (m.sample_object(&mut rng, 4), m.sample_object(&mut rng, 4), m.sample_object(&mut rng, 4));
        let f = m
            .sample_morphism(&mut rng, &m.tensor_obj(&a, &x), &m.tensor_obj(&b, &x))
            .unwrap();
        assert_eq!(
            partial_trace(x.0, a.0, b.0, &f).unwrap(),
            compact_trace(&m, &x, &a, &b, &f).unwrap()
        );
    }
}

#[test]
fn group_algebra_suites() {
    let m = Mat::new();
    for (name, g) in [("C2", GroupTable::cyclic(2)), ("S3", GroupTable::symmetric3())] {
        let d = group_algebra(name, &g).unwrap();
        assert!(validate_hopf_monoid(&m, &d).passed());
        let h = induced_hopf_monad(&m, &d).unwrap();
        let budget = CaseBudget::new(3).cases(50).max_size(2);
        for r in [
            check_monad_laws(&m, &h.bimonad.monad, &budget),
            check_bimonad_laws(&m, &h.bimonad, &budget),
            check_hopf(&m, &h, &budget),
            check_trace_coherence(&m, &h, &budget),
            check_traced_monad(&m, &h.bimonad, &budget),
            verify_representable_coherence(&m, &d, &budget),
        ] {
            assert!(r.passed(), "{name} {}: {:?}", r.suite, r.failures.first());
            assert!(r.cases_run > 0, "{name} {}", r.suite);
        }
    }
}

#[test]
fn c2_fusion_is_sweedler_form() {
    // g⊗(a⊗(k⊗b)) ↦ (g⊗a)⊗(g·k⊗b) on basis vectors, A = B = 1
    let m = Mat::new();
    let h = c2();
    let hl = fusion_left(&m, &h.bimonad, &Dim(1), &Dim(1)).unwrap();
    let mut want = Vec::new();
    for g in 0..2 {
        for k in 0..2 {
            want.push((g * 2 + (g + k) % 2, g * 2 + k, q(1)));
        }
    }
    assert_eq!(hl, RatMatrix::from_triplets(4, 4, want));
}

#[test]
fn c2_is_not_idempotent_and_fails_trace_meta() {
    let m = Mat::new();
    let h = c2();
    let r = idempotence_suite(&m, &h.bimonad, Some(&h), &CaseBudget::new(2).cases(10).max_size(2));
    assert!(r.passed(), "{:?}", r.failures);
    assert_eq!(r.fact("idempotent"), Some(false));
    assert_eq!(r.fact("hopf"), Some(true));
    assert!(!trace_meta_check(&m, &h.bimonad).unwrap().holds);
}

#[test]
fn free_and_tensor_algebras() {
    let m = Mat::new();
    let h = c2();
    let t = &h.bimonad.monad;
    let free = free_algebra(&m, t, &Dim(1)).unwrap();
    assert_eq!(free.carrier, Dim(2));
    let src = RepresentationSource::new(GroupTable::cyclic(2));
    let sign = src.representation(&[RepKind::Sign]);
    let triv = src.representation(&[RepKind::Trivial]);
    assert_eq!(algebra_tensor(&m, &h.bimonad, &sign, &sign).unwrap(), triv);
    assert_eq!(unit_algebra(&m, &h.bimonad).unwrap(), triv);
    let algs = enumerate_algebras(&m, t, &Dim(2)).unwrap();
    assert!(algs.contains(&src.representation(&[RepKind::Regular])));
    assert!(algs.contains(&src.representation(&[RepKind::Sign, RepKind::Sign])));
}

#[test]
fn module_operations() {
    let m = Mat::new();
    let d = group_algebra("C2", &GroupTable::cyclic(2)).unwrap();
    let src = RepresentationSource::new(GroupTable::cyclic(2));
    let sign = src.representation(&[RepKind::Sign]);
    assert_eq!(module_tensor(&m, &d, &sign, &sign).unwrap(), src.representation(&[RepKind::Trivial]));
    let reg = src.representation(&[RepKind::Regular]);
    let tt = src.representation(&[RepKind::Trivial, RepKind::Trivial]);
    // the identity matrix between these modules is not equivariant
    let f = RatMatrix::from_ints(&[&[1, 0], &[0, 1]]);
    assert!(!is_module_morphism(&m, &d, &reg, &tt, &f).unwrap());
    let (l, r) = module_morphism_sides(&m, &d, &reg, &tt, &f).unwrap();
    let differing = (0..l.cols()).find(|&c| l.column_block(c, 1) != r.column_block(c, 1));
    assert_eq!(differing, Some(2)); // basis vector r1⊗e0
}

#[test]
fn dual_of_sign_and_regular() {
    let m = Mat::new();
    let h = c2();
    let src = RepresentationSource::new(GroupTable::cyclic(2));
    for parts in [vec![RepKind::Sign], vec![RepKind::Regular], vec![RepKind::Trivial, RepKind::Sign]] {
        let a = src.representation(&parts);
        let d = dual_algebra(&m, &h, &a).unwrap();
        // inverse transpose of a permutation/sign representation is itself
        assert_eq!(d, a, "{parts:?}");
    }
}

#[test]
fn mutated_fusion_inverse_flips_both_sides() {
    let m = Mat::new();
    let h = c2();
    let budget = CaseBudget::new(9).cases(30).max_size(2);
    let base = crosscheck_detailed(&m, &h, &budget);
    assert!(base.coherent_hopf() && base.traced_hopf());
    let broken = h.with_hl_inv_edit(|_, _, _, f| {
        if f.rows() == 0 {
            return f;
        }
        let mut d = f.to_dense();
        d[0][0] += q(1);
        RatMatrix::from_dense(f.rows(), f.cols(), &d)
    });
    let mutated = crosscheck_detailed(&m, &broken, &budget);
    assert!(!mutated.coherent_hopf());
    assert!(!mutated.traced_hopf());
    assert!(mutated.summary.passed());
}

#[test]
fn compact_trace_and_dual_suites_pass() {
    let m = Mat::new();
    let r = tracedcat::laws::check_compact_trace_agreement(&m, &CaseBudget::new(5).cases(200).max_size(4));
    assert!(r.passed() && r.cases_run >= 200, "{:?}", r.failures.first());
    let src = RepresentationSource::new(GroupTable::cyclic(2));
    let algs: Vec<_> = [vec![RepKind::Sign], vec![RepKind::Regular]].iter().map(|p| src.representation(p)).collect();
    let d = tracedcat::model_linear::check_dual_algebras(&m, &c2(), &algs);
    assert!(d.passed());
    assert_eq!(d.cases_run, 2);
}
