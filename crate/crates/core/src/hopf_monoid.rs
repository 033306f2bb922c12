//! Cocommutative Hopf monoids, the Hopf monads `H⊗−` they induce, and
//! H-modules.

use std::sync::Arc;

use serde_json::json;

use crate::category::{rewire, Model, Wire};
use crate::eilenberg_moore::{check_traced_monad, check_trace_coherence, AlgebraSource, TAlgebra};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::laws::capability_report;
use crate::model_linear::{q, Dim, Mat, RatMatrix, RepresentationSource};
use crate::monads::{fusion_left, BimonadBundle, HopfBundle, MonadBundle};
use crate::report::{fact, finish, run_sampled, to_json, CaseBudget, CheckReport, Tally};

/// `(H, ∇, u, Δ, e, S)`.
pub struct HopfMonoidData<M: Model> {
    pub name: String,
    pub carrier: M::Obj,
    pub mult: M::Mor,
    pub unit: M::Mor,
    pub comult: M::Mor,
    pub counit: M::Mor,
    pub antipode: M::Mor,
    /// Generator of H-modules, used when the model cannot enumerate them.
    pub modules: Option<Arc<dyn AlgebraSource<M>>>,
}

impl<M: Model> Clone for HopfMonoidData<M> {
    fn clone(&self) -> Self {
        HopfMonoidData {
            name: self.name.clone(),
            carrier: self.carrier.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            modules: self.modules.clone(),
        }
    }
}

impl<M: Model> std::fmt::Debug for HopfMonoidData<M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HopfMonoidData")
            .field("name", &self.name)
            .field("carrier", &self.carrier)
            .finish_non_exhaustive()
    }
}

/// All structure maps are unitors on `I`.
pub fn trivial_hopf_monoid<M: Model>(model: &M) -> HopfMonoidData<M> {
    let i = model.unit_object();
    HopfMonoidData {
        name: "trivial".into(),
        carrier: i.clone(),
        mult: model.lunit(&i),
        unit: model.identity(&i),
        comult: model.lunit_inv(&i),
        counit: model.identity(&i),
        antipode: model.identity(&i),
        modules: None,
    }
}

fn rewired<M: Model>(model: &M, from: &Wire<M::Obj>, to: &Wire<M::Obj>) -> Result<M::Mor> {
    rewire(model, from, to)?.eval(model)
}

fn leaf<O: Clone>(l: u32, o: &O) -> Wire<O> {
    Wire::leaf(l, o.clone())
}

/// `(H⊗H)⊗(A⊗B) → (H⊗A)⊗(H⊗B)`.
fn middle_four<M: Model>(model: &M, h: &M::Obj, a: &M::Obj, b: &M::Obj) -> Result<M::Mor> {
    let from = Wire::pair(Wire::pair(leaf(0, h), leaf(1, h)), Wire::pair(leaf(2, a), leaf(3, b)));
    let to = Wire::pair(Wire::pair(leaf(0, h), leaf(2, a)), Wire::pair(leaf(1, h), leaf(3, b)));
    rewired(model, &from, &to)
}

fn expect_type<M: Model>(model: &M, what: &str, f: &M::Mor, dom: &M::Obj, cod: &M::Obj) -> Result<()> {
    let (d, c) = (model.dom(f), model.cod(f));
    if &d != dom || &c != cod {
        return Err(Error::type_mismatch(what, format!("{dom:?} -> {cod:?}"), format!("{d:?} -> {c:?}")));
    }
    Ok(())
}

fn check_types<M: Model>(model: &M, d: &HopfMonoidData<M>) -> Result<()> {
    let h = &d.carrier;
    let i = model.unit_object();
    let hh = model.tensor_obj(h, h);
    expect_type(model, "multiplication", &d.mult, &hh, h)?;
    expect_type(model, "unit", &d.unit, &i, h)?;
    expect_type(model, "comultiplication", &d.comult, h, &hh)?;
    expect_type(model, "counit", &d.counit, h, &i)?;
    expect_type(model, "antipode", &d.antipode, h, h)
}

/// Monoid, cocommutative comonoid, bimonoid and antipode laws, each
/// evaluated once.
pub fn validate_hopf_monoid<M: Model>(model: &M, d: &HopfMonoidData<M>) -> CheckReport {
    let mut t = Tally::default();
    if let Err(e) = check_types(model, d) {
        t.error("typing", json!({ "monoid": d.name }), &e);
        return finish("hopf monoid", model.name(), t, true, false, vec![]);
    }
    let h = &d.carrier;
    let i = model.unit_object();
    let id = model.identity(h);
    let inputs = || json!({ "monoid": d.name });
    let (mult, unit, comult, counit, s) = (&d.mult, &d.unit, &d.comult, &d.counit, &d.antipode);

    let lhs = model.chain(&[model.assoc(h, h, h), model.tensor(mult, &id), mult.clone()]);
    let rhs = model.compose(mult, &model.tensor(&id, mult));
    t.equal(model, "associativity", inputs, lhs, rhs);
    let l = model.chain(&[model.lunit_inv(h), model.tensor(unit, &id), mult.clone()]);
    t.equal(model, "left unit", inputs, l, Ok(id.clone()));
    let r = model.chain(&[model.runit_inv(h), model.tensor(&id, unit), mult.clone()]);
    t.equal(model, "right unit", inputs, r, Ok(id.clone()));

    let lhs = model.chain(&[comult.clone(), model.tensor(&id, comult), model.assoc(h, h, h)]);
    let rhs = model.compose(&model.tensor(comult, &id), comult);
    t.equal(model, "coassociativity", inputs, lhs, rhs);
    let l = model.chain(&[comult.clone(), model.tensor(counit, &id), model.lunit(h)]);
    t.equal(model, "left counit", inputs, l, Ok(id.clone()));
    let r = model.chain(&[comult.clone(), model.tensor(&id, counit), model.runit(h)]);
    t.equal(model, "right counit", inputs, r, Ok(id.clone()));
    t.equal(model, "cocommutativity", inputs, model.compose(&model.sym(h, h), comult), Ok(comult.clone()));

    let lhs = model.compose(comult, mult);
    let rhs = (|| {
        model.chain(&[
            model.tensor(comult, comult),
            middle_four(model, h, h, h)?,
            model.tensor(mult, mult),
        ])
    })();
    t.equal(model, "bimonoid (comultiplication)", inputs, lhs, rhs);
    let lhs = model.compose(comult, unit);
    let rhs = model.compose(&model.tensor(unit, unit), &model.lunit_inv(&i));
    t.equal(model, "bimonoid (unit)", inputs, lhs, rhs);
    let lhs = model.compose(counit, mult);
    let rhs = model.compose(&model.lunit(&i), &model.tensor(counit, counit));
    t.equal(model, "bimonoid (counit)", inputs, lhs, rhs);
    t.equal(model, "bimonoid (unit/counit)", inputs, model.compose(counit, unit), Ok(model.identity(&i)));

    let ue = model.compose(unit, counit);
    let l = model.chain(&[comult.clone(), model.tensor(s, &id), mult.clone()]);
    t.equal(model, "antipode (left)", inputs, l, ue.clone());
    let r = model.chain(&[comult.clone(), model.tensor(&id, s), mult.clone()]);
    t.equal(model, "antipode (right)", inputs, r, ue);
    finish("hopf monoid", model.name(), t, true, false, vec![])
}

/// `T = H⊗−`, `μ = (∇⊗1)∘α`, `η = (u⊗1)∘λ⁻¹`.
pub fn induced_monad<M: Model + 'static>(d: &HopfMonoidData<M>) -> MonadBundle<M> {
    let (h1, h2, h3) = (d.carrier.clone(), d.carrier.clone(), d.carrier.clone());
    let (mult, unit) = (d.mult.clone(), d.unit.clone());
    MonadBundle {
        name: format!("{}⊗−", d.name),
        on_obj: Arc::new(move |m, a| m.tensor_obj(&h1, a)),
        on_mor: Arc::new(move |m, f| Ok(m.tensor(&m.identity(&h2), f))),
        mu: Arc::new(move |m, a| m.compose(&m.tensor(&mult, &m.identity(a)), &m.assoc(&h3, &h3, a))),
        eta: Arc::new(move |m, a| m.compose(&m.tensor(&unit, &m.identity(a)), &m.lunit_inv(a))),
        algebras: d.modules.clone(),
    }
}

/// Adds `m_{A,B} = (middle four)∘(Δ⊗1)` and `m_I = λ_I∘(e⊗1)`.
pub fn induced_bimonad<M: Model + 'static>(d: &HopfMonoidData<M>) -> BimonadBundle<M> {
    let h = d.carrier.clone();
    let (comult, counit) = (d.comult.clone(), d.counit.clone());
    BimonadBundle {
        monad: induced_monad(d),
        m: Arc::new(move |m, a, b| {
            let split = m.tensor(&comult, &m.identity(&m.tensor_obj(a, b)));
            m.compose(&middle_four(m, &h, a, b)?, &split)
        }),
        m_unit: Arc::new(move |m| {
            let i = m.unit_object();
            m.compose(&m.lunit(&i), &m.tensor(&counit, &m.identity(&i)))
        }),
    }
}

/// `(h⊗a)⊗(k⊗b) ↦ h₍₁₎⊗(a⊗(S(h₍₂₎)k⊗b))`.
pub fn antipode_fusion_inverse<M: Model>(
    model: &M,
    d: &HopfMonoidData<M>,
    a: &M::Obj,
    b: &M::Obj,
) -> Result<M::Mor> {
    let h = &d.carrier;
    let split = model.tensor(
        &model.tensor(&d.comult, &model.identity(a)),
        &model.identity(&model.tensor_obj(h, b)),
    );
    let from = Wire::pair(
        Wire::pair(Wire::pair(leaf(0, h), leaf(1, h)), leaf(2, a)),
        Wire::pair(leaf(3, h), leaf(4, b)),
    );
    let to = Wire::pair(
        leaf(0, h),
        Wire::pair(leaf(2, a), Wire::pair(Wire::pair(leaf(1, h), leaf(3, h)), leaf(4, b))),
    );
    let act = model.compose(&d.mult, &model.tensor(&d.antipode, &model.identity(h)))?;
    let apply = model.tensor(
        &model.identity(h),
        &model.tensor(&model.identity(a), &model.tensor(&act, &model.identity(b))),
    );
    model.chain(&[split, rewired(model, &from, &to)?, apply])
}

/// The induced Hopf monad. The antipode-built inverse of `h^l` is verified
/// against `h^l` on `A, B ∈ {I, H}` before the bundle is returned.
pub fn induced_hopf_monad<M: Model + 'static>(model: &M, d: &HopfMonoidData<M>) -> Result<HopfBundle<M>> {
    check_types(model, d)?;
    let bimonad = induced_bimonad(d);
    let data = d.clone();
    let hopf = HopfBundle {
        bimonad,
        hl_inv: Arc::new(move |m, a, b| antipode_fusion_inverse(m, &data, a, b)),
    };
    let objs = [model.unit_object(), d.carrier.clone()];
    for a in &objs {
        for b in &objs {
            let hl = fusion_left(model, &hopf.bimonad, a, b)?;
            let inv = hopf.hl_inv(model, a, b)?;
            let one = model.compose(&hl, &inv)? == model.identity(&model.cod(&hl));
            let two = model.compose(&inv, &hl)? == model.identity(&model.dom(&hl));
            if !(one && two) {
                return Err(Error::validation(
                    "fusion round trip",
                    format!("antipode-built inverse fails at ({a:?}, {b:?})"),
                ));
            }
        }
    }
    Ok(hopf)
}

// ---------------------------------------------------------------------------
// modules

/// `(A, H⊗A → A)`.
pub type ModuleData<M> = TAlgebra<M>;

/// `act∘(u⊗1)∘λ⁻¹ = 1` and `act∘(∇⊗1) = act∘(1⊗act)∘α⁻¹`.
pub fn check_module<M: Model>(model: &M, d: &HopfMonoidData<M>, m: &ModuleData<M>) -> Result<()> {
    let (h, a) = (&d.carrier, &m.carrier);
    expect_type(model, "module action", &m.action, &model.tensor_obj(h, a), a)?;
    let unit = model.chain(&[model.lunit_inv(a), model.tensor(&d.unit, &model.identity(a)), m.action.clone()])?;
    if unit != model.identity(a) {
        return Err(Error::validation("module unit", format!("unit acts nontrivially on {a:?}")));
    }
    let l = model.compose(&m.action, &model.tensor(&d.mult, &model.identity(a)))?;
    let r = model.chain(&[
        model.assoc_inv(h, h, a),
        model.tensor(&model.identity(h), &m.action),
        m.action.clone(),
    ])?;
    if l != r {
        return Err(Error::validation("module multiplicativity", format!("on {a:?}")));
    }
    Ok(())
}

/// Both sides of `f∘act_A = act_B∘(1⊗f)`.
pub fn module_morphism_sides<M: Model>(
    model: &M,
    d: &HopfMonoidData<M>,
    src: &ModuleData<M>,
    tgt: &ModuleData<M>,
    f: &M::Mor,
) -> Result<(M::Mor, M::Mor)> {
    let l = model.compose(f, &src.action)?;
    let r = model.compose(&tgt.action, &model.tensor(&model.identity(&d.carrier), f))?;
    Ok((l, r))
}

pub fn is_module_morphism<M: Model>(
    model: &M,
    d: &HopfMonoidData<M>,
    src: &ModuleData<M>,
    tgt: &ModuleData<M>,
    f: &M::Mor,
) -> Result<bool> {
    let (l, r) = module_morphism_sides(model, d, src, tgt, f)?;
    Ok(l == r)
}

/// `(A⊗B, (act_A⊗act_B)∘(middle four)∘(Δ⊗1))`.
pub fn module_tensor<M: Model>(
    model: &M,
    d: &HopfMonoidData<M>,
    x: &ModuleData<M>,
    y: &ModuleData<M>,
) -> Result<ModuleData<M>> {
    let (a, b) = (&x.carrier, &y.carrier);
    let action = model.chain(&[
        model.tensor(&d.comult, &model.identity(&model.tensor_obj(a, b))),
        middle_four(model, &d.carrier, a, b)?,
        model.tensor(&x.action, &y.action),
    ])?;
    let m = ModuleData {
        carrier: model.tensor_obj(a, b),
        action,
    };
    check_module(model, d, &m)?;
    Ok(m)
}

/// The induced monad is trace-coherent and traced, and traces of module
/// morphisms between module tensors are module morphisms.
pub fn verify_representable_coherence<M: Model + 'static>(
    model: &M,
    d: &HopfMonoidData<M>,
    budget: &CaseBudget,
) -> CheckReport {
    const SUITE: &str = "representable coherence";
    if !model.capabilities().traced {
        return capability_report(SUITE, model, "traced");
    }
    let hopf = match induced_hopf_monad(model, d) {
        Ok(h) => h,
        Err(e) => {
            let mut t = Tally::default();
            t.error(SUITE, json!({ "monoid": d.name }), &e);
            return finish(SUITE, model.name(), t, false, false, vec![]);
        }
    };
    let coherence = check_trace_coherence(model, &hopf, budget);
    let traced = check_traced_monad(model, &hopf.bimonad, budget);
    let mut tally = Tally::default();
    tally.holds("trace coherence", coherence.passed(), || to_json(&coherence.failures.first()));
    tally.holds("traced monad", traced.passed(), || to_json(&traced.failures.first()));

    let modules_checked = match (&d.modules, &hopf.bimonad.monad) {
        (Some(src), monad) => {
            let t = run_sampled(budget, |rng, tl| {
                let mut pick = || {
                    let c = src.sample_carrier(model, rng, budget.max_object_size);
                    let algs = src.algebras(model, monad, &c).ok()?;
                    let i = rand::Rng::gen_range(rng, 0..algs.len().max(1));
                    algs.get(i).cloned()
                };
                let (Some(a), Some(x), Some(b)) = (pick(), pick(), pick()) else {
                    return;
                };
                let pair = module_tensor(model, d, &a, &x).and_then(|s| Ok((s, module_tensor(model, d, &b, &x)?)));
                let (s, t) = match pair {
                    Ok(p) => p,
                    Err(e) => return tl.error("module tensor", json!({}), &e),
                };
                let Some(f) = src.sample_morphism(model, monad, &s, &t, rng) else {
                    return;
                };
                if !matches!(is_module_morphism(model, d, &s, &t, &f), Ok(true)) {
                    return;
                }
                let traced = model.trace(&x.carrier, &a.carrier, &b.carrier, &f);
                let sides = traced.and_then(|g| module_morphism_sides(model, d, &a, &b, &g));
                let inputs = || json!({ "A": to_json(&a), "X": to_json(&x), "B": to_json(&b), "f": to_json(&f) });
                match sides {
                    Ok((l, r)) => {
                        tl.equal(model, "trace of module morphism", inputs, Ok(l), Ok(r));
                    }
                    Err(e) => tl.error("trace of module morphism", inputs(), &e),
                }
            });
            let ok = t.total_failures == 0;
            tally.absorb(t);
            Some(ok)
        }
        (None, _) => None,
    };
    let mut facts = vec![
        fact("trace coherence", coherence.passed()),
        fact("traced monad", traced.passed()),
    ];
    if let Some(ok) = modules_checked {
        facts.push(fact("module traces", ok));
    }
    finish(SUITE, model.name(), tally, false, false, facts)
}

/// Every `S: H → H` in the hom-set with whether it satisfies both antipode
/// equations.
pub fn antipode_search<M: Model>(model: &M, d: &HopfMonoidData<M>) -> Result<Vec<(M::Mor, bool)>> {
    let h = &d.carrier;
    let all = model
        .enumerate_homs(h, h)
        .ok_or_else(|| Error::capability(model.name(), "hom-set enumeration"))?;
    let id = model.identity(h);
    let ue = model.compose(&d.unit, &d.counit)?;
    all.into_iter()
        .map(|s| {
            let l = model.chain(&[d.comult.clone(), model.tensor(&s, &id), d.mult.clone()])?;
            let r = model.chain(&[d.comult.clone(), model.tensor(&id, &s), d.mult.clone()])?;
            let ok = l == ue && r == ue;
            Ok((s, ok))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// group algebras

/// `ℚ[G]` with `∇(g⊗h) = gh`, `Δ(g) = g⊗g`, `e(g) = 1`, `S(g) = g⁻¹`; its
/// modules are generated by [`RepresentationSource`].
pub fn group_algebra(name: &str, group: &GroupTable) -> Result<HopfMonoidData<Mat>> {
    group.validate()?;
    let n = group.order();
    let mult = RatMatrix::from_triplets(
        n,
        n * n,
        (0..n).flat_map(|g| (0..n).map(move |h| (g, h))).map(|(g, h)| (group.mul(g, h), g * n + h, q(1))),
    );
    let unit = RatMatrix::from_triplets(n, 1, [(group.identity(), 0, q(1))]);
    let comult = RatMatrix::from_triplets(n * n, n, (0..n).map(|g| (g * n + g, g, q(1))));
    let counit = RatMatrix::from_triplets(1, n, (0..n).map(|g| (0, g, q(1))));
    let antipode = RatMatrix::from_triplets(n, n, (0..n).map(|g| (group.inverse(g), g, q(1))));
    Ok(HopfMonoidData {
        name: format!("Q[{name}]"),
        carrier: Dim(n),
        mult,
        unit,
        comult,
        counit,
        antipode,
        modules: Some(Arc::new(RepresentationSource::new(group.clone()))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_algebra_validates() {
        let d = group_algebra("C2", &GroupTable::cyclic(2)).unwrap();
        let r = validate_hopf_monoid(&Mat::new(), &d);
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(d.antipode, RatMatrix::identity(2));
    }

    #[test]
    fn trivial_monoid_validates_and_induces_identity_like_bundle() {
        let m = Mat::new();
        let d = trivial_hopf_monoid(&m);
        assert!(validate_hopf_monoid(&m, &d).passed());
        let h = induced_hopf_monad(&m, &d).unwrap();
        assert_eq!(h.t(&m, &Dim(3)), Dim(3));
        assert_eq!(h.bimonad.monad.mu(&m, &Dim(3)).unwrap(), RatMatrix::identity(3));
    }

    #[test]
    fn c2_fusion_inverse_on_basis() {
        // (g⊗a)⊗(k⊗b) ↦ g⊗(a⊗(g⁻¹k⊗b)) with A = B = 1
        let m = Mat::new();
        let d = group_algebra("C2", &GroupTable::cyclic(2)).unwrap();
        let inv = antipode_fusion_inverse(&m, &d, &Dim(1), &Dim(1)).unwrap();
        for g in 0..2 {
            for k in 0..2 {
                let src = g * 2 + k;
                let dst = g * 2 + (g + k) % 2;
                assert_eq!(inv.get(dst, src), q(1));
            }
        }
    }
}
