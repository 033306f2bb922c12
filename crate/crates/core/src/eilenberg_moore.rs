//! T-algebras, algebra morphisms and the checkers that quantify over them.

use rand::seq::SliceRandom;
use serde::Serialize;
use serde_json::{json, Value};

use crate::category::{CaseRng, CoCartesian, Conway, Model};
use crate::error::{Error, Result};
use crate::laws::{capability_report, drive, inputs_json, tuples, Law};
use crate::monads::{check_bimonad_laws, check_hopf, idempotence_suite, BimonadBundle, HopfBundle, MonadBundle};
use crate::report::{fact, finish, run_blocks, run_sampled, to_json, CaseBudget, CheckReport, Tally};

/// `(A, a: T(A) → A)`.
#[derive(Serialize)]
#[serde(bound(serialize = ""))]
pub struct TAlgebra<M: Model> {
    pub carrier: M::Obj,
    pub action: M::Mor,
}

impl<M: Model> Clone for TAlgebra<M> {
    fn clone(&self) -> Self {
        TAlgebra {
            carrier: self.carrier.clone(),
            action: self.action.clone(),
        }
    }
}

impl<M: Model> PartialEq for TAlgebra<M> {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.action == other.action
    }
}

impl<M: Model> Eq for TAlgebra<M> {}

impl<M: Model> std::fmt::Debug for TAlgebra<M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TAlgebra")
            .field("carrier", &self.carrier)
            .field("action", &self.action)
            .finish()
    }
}

#[derive(Serialize)]
#[serde(bound(serialize = ""))]
pub struct AlgebraMorphismWitness<M: Model> {
    pub source: TAlgebra<M>,
    pub target: TAlgebra<M>,
    pub map: M::Mor,
    /// `map∘a = b∘T(map)` was verified.
    pub checked: bool,
}

impl<M: Model> std::fmt::Debug for AlgebraMorphismWitness<M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AlgebraMorphismWitness")
            .field("source", &self.source)
            .field("target", &self.target)
            .field("map", &self.map)
            .field("checked", &self.checked)
            .finish()
    }
}

/// Validates `a∘η_A = 1_A` and `a∘μ_A = a∘T(a)`.
pub fn check_algebra<M: Model>(model: &M, monad: &MonadBundle<M>, alg: &TAlgebra<M>) -> Result<()> {
    let a = &alg.carrier;
    let ta = monad.t(model, a);
    let (d, c) = (model.dom(&alg.action), model.cod(&alg.action));
    if d != ta || &c != a {
        return Err(Error::type_mismatch("algebra action", format!("{ta:?} -> {a:?}"), format!("{d:?} -> {c:?}")));
    }
    let unit = model.compose(&alg.action, &monad.eta(model, a)?)?;
    if unit != model.identity(a) {
        return Err(Error::validation("algebra unit", format!("a∘η ≠ 1 on {a:?}")));
    }
    let l = model.compose(&alg.action, &monad.mu(model, a)?)?;
    let r = model.compose(&alg.action, &monad.t_mor(model, &alg.action)?)?;
    if l != r {
        return Err(Error::validation("algebra associativity", format!("a∘μ ≠ a∘T(a) on {a:?}")));
    }
    Ok(())
}

pub fn free_algebra<M: Model>(model: &M, monad: &MonadBundle<M>, a: &M::Obj) -> Result<TAlgebra<M>> {
    Ok(TAlgebra {
        carrier: monad.t(model, a),
        action: monad.mu(model, a)?,
    })
}

pub fn is_algebra_morphism<M: Model>(
    model: &M,
    monad: &MonadBundle<M>,
    src: &TAlgebra<M>,
    tgt: &TAlgebra<M>,
    f: &M::Mor,
) -> Result<bool> {
    let l = model.compose(f, &src.action)?;
    let r = model.compose(&tgt.action, &monad.t_mor(model, f)?)?;
    Ok(l == r)
}

/// `(A⊗B, (a⊗b)∘m_{A,B})`, validated.
pub fn algebra_tensor<M: Model>(
    model: &M,
    b: &BimonadBundle<M>,
    x: &TAlgebra<M>,
    y: &TAlgebra<M>,
) -> Result<TAlgebra<M>> {
    let alg = tensor_unchecked(model, b, x, y)?;
    check_algebra(model, &b.monad, &alg)?;
    Ok(alg)
}

fn tensor_unchecked<M: Model>(
    model: &M,
    b: &BimonadBundle<M>,
    x: &TAlgebra<M>,
    y: &TAlgebra<M>,
) -> Result<TAlgebra<M>> {
    let m = b.m(model, &x.carrier, &y.carrier)?;
    Ok(TAlgebra {
        carrier: model.tensor_obj(&x.carrier, &y.carrier),
        action: model.compose(&model.tensor(&x.action, &y.action), &m)?,
    })
}

/// `(I, m_I)`, validated.
pub fn unit_algebra<M: Model>(model: &M, b: &BimonadBundle<M>) -> Result<TAlgebra<M>> {
    let alg = TAlgebra {
        carrier: model.unit_object(),
        action: b.m_unit(model)?,
    };
    check_algebra(model, &b.monad, &alg)?;
    Ok(alg)
}

// ---------------------------------------------------------------------------
// where algebras come from

/// Supplies the algebras and algebra morphisms a checker quantifies over.
pub trait AlgebraSource<M: Model>: Send + Sync {
    /// All carriers worth considering up to `max_size`, when listable.
    fn carriers(&self, model: &M, max_size: usize) -> Option<Vec<M::Obj>>;

    fn sample_carrier(&self, model: &M, rng: &mut CaseRng, max_size: usize) -> M::Obj {
        model.sample_object(rng, max_size)
    }

    /// Algebras on `carrier`; complete when the source is exhaustive.
    fn algebras(&self, model: &M, monad: &MonadBundle<M>, carrier: &M::Obj) -> Result<Vec<TAlgebra<M>>>;

    /// Every algebra morphism `src → tgt`, when listable.
    fn morphisms(
        &self,
        model: &M,
        monad: &MonadBundle<M>,
        src: &TAlgebra<M>,
        tgt: &TAlgebra<M>,
    ) -> Option<Vec<M::Mor>>;

    fn sample_morphism(
        &self,
        model: &M,
        monad: &MonadBundle<M>,
        src: &TAlgebra<M>,
        tgt: &TAlgebra<M>,
        rng: &mut CaseRng,
    ) -> Option<M::Mor> {
        self.morphisms(model, monad, src, tgt)?.choose(rng).cloned()
    }
}

/// Algebras and their morphisms found by searching the model's hom-sets.
pub struct HomSearch;

impl<M: Model> AlgebraSource<M> for HomSearch {
    fn carriers(&self, model: &M, max_size: usize) -> Option<Vec<M::Obj>> {
        model.enumerate_objects(max_size)
    }

    fn algebras(&self, model: &M, monad: &MonadBundle<M>, carrier: &M::Obj) -> Result<Vec<TAlgebra<M>>> {
        let ta = monad.t(model, carrier);
        let eta = monad.eta(model, carrier)?;
        let mu = monad.mu(model, carrier)?;
        let id = model.identity(carrier);
        let keep = |a: &M::Mor| {
            model.agrees(&model.compose_unchecked(a, &eta), &id)
                && match monad.t_mor(model, a) {
                    Ok(t_a) => model.agrees(
                        &model.compose_unchecked(a, &mu),
                        &model.compose_unchecked(a, &t_a),
                    ),
                    Err(_) => false,
                }
        };
        let found = model
            .search_homs(&ta, carrier, &keep)
            .ok_or_else(|| Error::capability(model.name(), "hom-set enumeration"))?;
        Ok(found
            .into_iter()
            .map(|action| TAlgebra {
                carrier: carrier.clone(),
                action,
            })
            .collect())
    }

    fn morphisms(
        &self,
        model: &M,
        monad: &MonadBundle<M>,
        src: &TAlgebra<M>,
        tgt: &TAlgebra<M>,
    ) -> Option<Vec<M::Mor>> {
        let keep = |f: &M::Mor| match monad.t_mor(model, f) {
            Ok(tf) => model.agrees(
                &model.compose_unchecked(f, &src.action),
                &model.compose_unchecked(&tgt.action, &tf),
            ),
            Err(_) => false,
        };
        model.search_homs(&src.carrier, &tgt.carrier, &keep)
    }
}

fn with_source<M: Model, R>(
    model: &M,
    monad: &MonadBundle<M>,
    body: impl FnOnce(&dyn AlgebraSource<M>) -> R,
) -> Option<R> {
    match &monad.algebras {
        Some(src) => Some(body(src.as_ref())),
        None if model.has_enumerator() => Some(body(&HomSearch)),
        None => None,
    }
}

/// All algebras on `a` (complete on enumerable models), or those a
/// registered generator provides.
pub fn enumerate_algebras<M: Model>(model: &M, monad: &MonadBundle<M>, a: &M::Obj) -> Result<Vec<TAlgebra<M>>> {
    with_source(model, monad, |s| s.algebras(model, monad, a))
        .unwrap_or_else(|| Err(Error::capability(model.name(), "algebra enumeration")))
}

/// `count` sampled algebra morphisms `src → tgt`, each verified.
pub fn sample_algebra_morphisms<M: Model>(
    model: &M,
    monad: &MonadBundle<M>,
    src: &TAlgebra<M>,
    tgt: &TAlgebra<M>,
    budget: &CaseBudget,
) -> Result<Vec<AlgebraMorphismWitness<M>>> {
    with_source(model, monad, |s| {
        let mut out = Vec::new();
        for i in 0..budget.cases {
            let mut rng = budget.rng(i);
            if let Some(map) = s.sample_morphism(model, monad, src, tgt, &mut rng) {
                let checked = is_algebra_morphism(model, monad, src, tgt, &map)?;
                out.push(AlgebraMorphismWitness {
                    source: src.clone(),
                    target: tgt.clone(),
                    map,
                    checked,
                });
            }
        }
        Ok(out)
    })
    .unwrap_or_else(|| Err(Error::capability(model.name(), "algebra enumeration")))
}

/// Algebras on every carrier the source lists up to the bound, in carrier order.
fn all_algebras<M: Model>(
    model: &M,
    monad: &MonadBundle<M>,
    src: &dyn AlgebraSource<M>,
    max_size: usize,
) -> Option<Result<Vec<TAlgebra<M>>>> {
    let carriers = src.carriers(model, max_size)?;
    let mut out = Vec::new();
    for c in &carriers {
        match src.algebras(model, monad, c) {
            Ok(a) => out.extend(a),
            Err(e) => return Some(Err(e)),
        }
    }
    Some(Ok(out))
}

fn sample_algebra<M: Model>(
    model: &M,
    monad: &MonadBundle<M>,
    src: &dyn AlgebraSource<M>,
    rng: &mut CaseRng,
    max_size: usize,
) -> Option<TAlgebra<M>> {
    for _ in 0..16 {
        let c = src.sample_carrier(model, rng, max_size);
        if let Ok(algs) = src.algebras(model, monad, &c) {
            if let Some(a) = algs.choose(rng) {
                return Some(a.clone());
            }
        }
    }
    None
}

fn alg_json<M: Model>(a: &TAlgebra<M>) -> Value {
    to_json(a)
}

/// Quantifies `algebras^k` with one block per tuple, exhaustively when
/// the source lists everything, by sampling otherwise.
fn over_algebras<M: Model>(
    model: &M,
    monad: &MonadBundle<M>,
    src: &dyn AlgebraSource<M>,
    budget: &CaseBudget,
    k: usize,
    block: &(dyn Fn(&[TAlgebra<M>], Option<&mut CaseRng>, &mut Tally) -> bool + Sync),
) -> (Tally, bool) {
    if budget.exhaustive {
        if let Some(algs) = all_algebras(model, monad, src, budget.max_object_size) {
            let algs = match algs {
                Ok(a) => a,
                Err(e) => {
                    let mut t = Tally::default();
                    t.error("algebra enumeration", Value::Null, &e);
                    return (t, false);
                }
            };
            let complete = std::sync::atomic::AtomicBool::new(true);
            let idx: Vec<usize> = (0..algs.len()).collect();
            let tally = run_blocks(&tuples(&idx, k), |ix, tl| {
                let picked: Vec<TAlgebra<M>> = ix.iter().map(|&i| algs[i].clone()).collect();
                if !block(&picked, None, tl) {
                    complete.store(false, std::sync::atomic::Ordering::Relaxed);
                }
            });
            return (tally, complete.into_inner());
        }
    }
    let tally = run_sampled(budget, |rng, tl| {
        let picked: Option<Vec<TAlgebra<M>>> = (0..k)
            .map(|_| sample_algebra(model, monad, src, rng, budget.max_object_size))
            .collect();
        if let Some(p) = picked {
            block(&p, Some(rng), tl);
        }
    });
    (tally, false)
}

/// Algebra morphisms `s → t`: all of them without an rng, one sample with.
fn premise_maps<M: Model>(
    model: &M,
    monad: &MonadBundle<M>,
    src: &dyn AlgebraSource<M>,
    s: &TAlgebra<M>,
    t: &TAlgebra<M>,
    rng: Option<&mut CaseRng>,
) -> Option<Vec<M::Mor>> {
    match rng {
        None => src.morphisms(model, monad, s, t),
        Some(rng) => {
            let f = src.sample_morphism(model, monad, s, t, rng)?;
            // a generator that fails to meet the premise yields no instance
            match is_algebra_morphism(model, monad, s, t, &f) {
                Ok(true) => Some(vec![f]),
                _ => Some(vec![]),
            }
        }
    }
}

/// For algebras `(A,a)`, `(X,x)`, `(B,b)` and every algebra morphism
/// `f: (A,a)⊗(X,x) → (B,b)⊗(X,x)`, checks that `Tr^X_{A,B}(f)` is an
/// algebra morphism `(A,a) → (B,b)`.
pub fn check_traced_monad<M: Model>(model: &M, b: &BimonadBundle<M>, budget: &CaseBudget) -> CheckReport {
    const SUITE: &str = "traced monad";
    if !model.capabilities().traced {
        return capability_report(SUITE, model, "traced");
    }
    let monad = &b.monad;
    let run = with_source(model, monad, |src| {
        over_algebras(model, monad, src, budget, 3, &|algs, rng, tl| {
            let (a, x, bb) = (&algs[0], &algs[1], &algs[2]);
            let inputs = |f: &M::Mor| json!({ "A": alg_json(a), "X": alg_json(x), "B": alg_json(bb), "f": to_json(f) });
            let pair = tensor_unchecked(model, b, a, x).and_then(|s| Ok((s, tensor_unchecked(model, b, bb, x)?)));
            let (s, t) = match pair {
                Ok(p) => p,
                Err(e) => {
                    tl.error(SUITE, json!({ "A": alg_json(a), "X": alg_json(x), "B": alg_json(bb) }), &e);
                    return true;
                }
            };
            let Some(maps) = premise_maps(model, monad, src, &s, &t, rng) else {
                return false;
            };
            for f in &maps {
                let g = model.trace(&x.carrier, &a.carrier, &bb.carrier, f);
                let lhs = g.clone().and_then(|g| model.compose(&g, &a.action));
                let rhs = g.and_then(|g| model.compose(&bb.action, &monad.t_mor(model, &g)?));
                tl.equal(model, "trace is an algebra morphism", || inputs(f), lhs, rhs);
            }
            true
        })
    });
    match run {
        Some((tally, complete)) => finish(SUITE, model.name(), tally, complete, budget.exhaustive, vec![]),
        None => capability_report(SUITE, model, "algebra enumeration"),
    }
}

/// `T(Tr^{TX}_{A,B}(f)) = Tr^{TX}_{TA,TB}(h^l_{B,X}∘T(f)∘(h^l_{A,X})⁻¹)`
/// for `f: A⊗TX → B⊗TX`.
pub fn check_trace_coherence<M: Model>(model: &M, h: &HopfBundle<M>, budget: &CaseBudget) -> CheckReport {
    const SUITE: &str = "trace coherence";
    if !model.capabilities().traced {
        return capability_report(SUITE, model, "traced");
    }
    let b = &h.bimonad;
    let t = &b.monad;
    let law = Law::new(
        "trace coherence",
        3,
        |m: &M, o: &[M::Obj]| {
            let tx = t.t(m, &o[2]);
            vec![(m.tensor_obj(&o[0], &tx), m.tensor_obj(&o[1], &tx))]
        },
        |m: &M, o, f, tl| {
            let (a, bb, x) = (&o[0], &o[1], &o[2]);
            let tx = t.t(m, x);
            let lhs = m.trace(&tx, a, bb, &f[0]).and_then(|g| t.t_mor(m, &g));
            let rhs = (|| {
                let body = m.chain(&[
                    h.hl_inv(m, a, x)?,
                    t.t_mor(m, &f[0])?,
                    crate::monads::fusion_left(m, b, bb, x)?,
                ])?;
                m.trace(&tx, &t.t(m, a), &t.t(m, bb), &body)
            })();
            tl.equal(m, "trace coherence", || inputs_json::<M>(o, f), lhs, rhs);
        },
    );
    let (tally, complete) = drive(model, budget, &[law]);
    finish(SUITE, model.name(), tally, complete, budget.exhaustive, vec![])
}

/// The sub-reports behind [`crosscheck_main_theorem`].
#[derive(Clone, Debug, Serialize)]
pub struct Crosscheck {
    pub bimonad: CheckReport,
    pub hopf: CheckReport,
    pub coherence: CheckReport,
    pub traced: CheckReport,
    pub summary: CheckReport,
}

impl Crosscheck {
    pub fn hypothesis(&self) -> bool {
        self.bimonad.passed() && self.hopf.passed()
    }

    /// Verdict of the "trace-coherent Hopf monad" side.
    pub fn coherent_hopf(&self) -> bool {
        self.hypothesis() && self.coherence.passed()
    }

    /// Verdict of the "traced monad (under the Hopf hypothesis)" side.
    pub fn traced_hopf(&self) -> bool {
        self.hypothesis() && self.traced.passed()
    }
}

pub fn crosscheck_detailed<M: Model>(model: &M, h: &HopfBundle<M>, budget: &CaseBudget) -> Crosscheck {
    let (bimonad, hopf) = rayon::join(
        || check_bimonad_laws(model, &h.bimonad, budget),
        || check_hopf(model, h, budget),
    );
    let (coherence, traced) = rayon::join(
        || check_trace_coherence(model, h, budget),
        || check_traced_monad(model, &h.bimonad, budget),
    );
    let hyp = bimonad.passed() && hopf.passed();
    let mut tally = Tally::default();
    let left = hyp && coherence.passed();
    let right = hyp && traced.passed();
    tally.cases += 1;
    if left != right {
        tally.fail(
            "verdicts agree",
            json!({ "bundle": h.name() }),
            json!({ "trace coherence": left, "witness": to_json(&coherence.failures.first()) }),
            json!({ "traced monad": right, "witness": to_json(&traced.failures.first()) }),
        );
    }
    let facts = vec![
        fact("hopf hypothesis", hyp),
        fact("trace coherence", coherence.passed()),
        fact("traced monad", traced.passed()),
        fact("trace-coherent hopf", left),
        fact("traced hopf", right),
    ];
    let complete = coherence.exhaustive && traced.exhaustive;
    let summary = finish("main theorem crosscheck", model.name(), tally, complete, false, facts);
    Crosscheck {
        bimonad,
        hopf,
        coherence,
        traced,
        summary,
    }
}

/// Runs the trace-coherence and traced-monad checkers on one bundle. Each
/// side's verdict is its own check conjoined with the Hopf hypothesis; the
/// report fails iff the two verdicts disagree.
pub fn crosscheck_main_theorem<M: Model>(model: &M, h: &HopfBundle<M>, budget: &CaseBudget) -> CheckReport {
    crosscheck_detailed(model, h, budget).summary
}

/// `μ_X∘T(Fix^{TX}_A(f)) = Fix^{TX}_{TA}(μ_X∘T(f)∘(h^l_{A,X})⁻¹)` for
/// `f: A×TX → TX`; its verdict is compared with [`check_trace_coherence`].
pub fn check_fix_coherence<M: Conway>(model: &M, h: &HopfBundle<M>, budget: &CaseBudget) -> CheckReport {
    const SUITE: &str = "fix coherence";
    let t = &h.bimonad.monad;
    let law = Law::new(
        "fix coherence",
        2,
        |m: &M, o: &[M::Obj]| {
            let tx = t.t(m, &o[1]);
            vec![(m.tensor_obj(&o[0], &tx), tx)]
        },
        |m: &M, o, f, tl| {
            let (a, x) = (&o[0], &o[1]);
            let tx = t.t(m, x);
            let lhs = (|| m.compose(&t.mu(m, x)?, &t.t_mor(m, &m.fix(&tx, a, &f[0])?)?))();
            let rhs = (|| {
                let body = m.chain(&[h.hl_inv(m, a, x)?, t.t_mor(m, &f[0])?, t.mu(m, x)?])?;
                m.fix(&tx, &t.t(m, a), &body)
            })();
            tl.equal(m, "fix coherence", || inputs_json::<M>(o, f), lhs, rhs);
        },
    );
    let (mut tally, complete) = drive(model, budget, &[law]);
    let own = tally.total_failures == 0;
    let coherence = check_trace_coherence(model, h, budget);
    tally.holds("agrees with trace coherence", own == coherence.passed(), || {
        json!({ "fix coherence": own, "trace coherence": coherence.passed() })
    });
    let facts = vec![fact("fix coherence", own), fact("trace coherence", coherence.passed())];
    finish(SUITE, model.name(), tally, complete, budget.exhaustive, facts)
}

/// For algebras `(A,a)`, `(X,x)` and every algebra morphism
/// `f: (A,a)×(X,x) → (X,x)`, checks that `Fix^X_A(f)` is an algebra
/// morphism `(A,a) → (X,x)`; its verdict is compared with
/// [`check_traced_monad`].
pub fn check_traced_via_fix<M: Conway>(model: &M, b: &BimonadBundle<M>, budget: &CaseBudget) -> CheckReport {
    check_traced_via_fix_against(model, b, budget, &check_traced_monad(model, b, budget))
}

/// [`check_traced_via_fix`] compared against an existing traced-monad report.
pub fn check_traced_via_fix_against<M: Conway>(
    model: &M,
    b: &BimonadBundle<M>,
    budget: &CaseBudget,
    traced: &CheckReport,
) -> CheckReport {
    const SUITE: &str = "traced via fix";
    let monad = &b.monad;
    let run = with_source(model, monad, |src| {
        over_algebras(model, monad, src, budget, 2, &|algs, rng, tl| {
            let (a, x) = (&algs[0], &algs[1]);
            let s = match tensor_unchecked(model, b, a, x) {
                Ok(s) => s,
                Err(e) => {
                    tl.error(SUITE, json!({ "A": alg_json(a), "X": alg_json(x) }), &e);
                    return true;
                }
            };
            let Some(maps) = premise_maps(model, monad, src, &s, x, rng) else {
                return false;
            };
            for f in &maps {
                let g = model.fix(&x.carrier, &a.carrier, f);
                let lhs = g.clone().and_then(|g| model.compose(&g, &a.action));
                let rhs = g.and_then(|g| model.compose(&x.action, &monad.t_mor(model, &g)?));
                tl.equal(
                    model,
                    "fixed point is an algebra morphism",
                    || json!({ "A": alg_json(a), "X": alg_json(x), "f": to_json(f) }),
                    lhs,
                    rhs,
                );
            }
            true
        })
    });
    let Some((mut tally, complete)) = run else {
        return capability_report(SUITE, model, "algebra enumeration");
    };
    let own = tally.total_failures == 0;
    tally.holds("agrees with traced monad", own == traced.passed(), || {
        json!({ "via fix": own, "traced monad": traced.passed() })
    });
    let facts = vec![fact("via fix", own), fact("traced monad", traced.passed())];
    finish(SUITE, model.name(), tally, complete, budget.exhaustive, facts)
}

/// On a coCartesian traced model: whenever the bundle is a symmetric Hopf
/// monad, trace coherence holds iff the monad is idempotent.
pub fn cocartesian_corollary_check<M: CoCartesian>(model: &M, h: &HopfBundle<M>, budget: &CaseBudget) -> CheckReport {
    const SUITE: &str = "cocartesian corollary";
    if !model.capabilities().traced {
        return capability_report(SUITE, model, "traced");
    }
    let hyp = check_bimonad_laws(model, &h.bimonad, budget).passed() && check_hopf(model, h, budget).passed();
    let coherent = check_trace_coherence(model, h, budget);
    let idem = idempotence_suite(model, &h.bimonad, None, budget);
    let idempotent = idem.fact("idempotent").unwrap_or(false);
    let mut tally = Tally::default();
    if hyp {
        tally.holds("coherent iff idempotent", coherent.passed() == idempotent, || {
            json!({
                "trace coherence": coherent.passed(),
                "idempotent": idempotent,
                "witness": to_json(&coherent.failures.first()),
            })
        });
    }
    let facts = vec![
        fact("hopf hypothesis", hyp),
        fact("trace coherence", coherent.passed()),
        fact("idempotent", idempotent),
    ];
    finish(SUITE, model.name(), tally, coherent.exhaustive, budget.exhaustive, facts)
}
