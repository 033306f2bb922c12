//! Monad, bimonad and Hopf-monad bundles, their law checkers, fusion
//! operators and the idempotence toolkit.

use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::category::Model;
use crate::eilenberg_moore::{check_traced_monad, AlgebraSource};
use crate::error::{Error, Result};
use crate::laws::{inputs_json, run_laws, Law};
use crate::report::{fact, finish, run_blocks, run_sampled, side_json, to_json, CaseBudget, CheckReport, Tally};

pub type ObjMap<M> = Arc<dyn Fn(&M, &<M as Model>::Obj) -> <M as Model>::Obj + Send + Sync>;
pub type MorMap<M> =
    Arc<dyn Fn(&M, &<M as Model>::Mor) -> Result<<M as Model>::Mor> + Send + Sync>;
pub type Component<M> =
    Arc<dyn Fn(&M, &<M as Model>::Obj) -> Result<<M as Model>::Mor> + Send + Sync>;
pub type Component2<M> = Arc<
    dyn Fn(&M, &<M as Model>::Obj, &<M as Model>::Obj) -> Result<<M as Model>::Mor>
        + Send
        + Sync,
>;
pub type Constant<M> = Arc<dyn Fn(&M) -> Result<<M as Model>::Mor> + Send + Sync>;

/// `(T, μ, η)` given by closures.
pub struct MonadBundle<M: Model> {
    pub name: String,
    pub on_obj: ObjMap<M>,
    pub on_mor: MorMap<M>,
    pub mu: Component<M>,
    pub eta: Component<M>,
    /// Where algebras and algebra morphisms come from when the model
    /// cannot enumerate them itself.
    pub algebras: Option<Arc<dyn AlgebraSource<M>>>,
}

impl<M: Model> Clone for MonadBundle<M> {
    fn clone(&self) -> Self {
        MonadBundle {
            name: self.name.clone(),
            on_obj: self.on_obj.clone(),
            on_mor: self.on_mor.clone(),
            mu: self.mu.clone(),
            eta: self.eta.clone(),
            algebras: self.algebras.clone(),
        }
    }
}

fn expect_boundary<M: Model>(
    model: &M,
    component: &str,
    at: impl std::fmt::Debug,
    f: Result<M::Mor>,
    dom: &M::Obj,
    cod: &M::Obj,
) -> Result<M::Mor> {
    let f = f?;
    let (d, c) = (model.dom(&f), model.cod(&f));
    if &d != dom || &c != cod {
        return Err(Error::Bundle {
            component: component.to_string(),
            object: format!("{at:?}"),
            detail: format!("expected {dom:?} -> {cod:?}, got {d:?} -> {c:?}"),
        });
    }
    Ok(f)
}

impl<M: Model + 'static> MonadBundle<M> {
    pub fn identity() -> Self {
        MonadBundle {
            name: "identity".into(),
            on_obj: Arc::new(|_, a| a.clone()),
            on_mor: Arc::new(|_, f| Ok(f.clone())),
            mu: Arc::new(|m, a| Ok(m.identity(a))),
            eta: Arc::new(|m, a| Ok(m.identity(a))),
            algebras: None,
        }
    }
}

impl<M: Model> MonadBundle<M> {
    pub fn t(&self, model: &M, a: &M::Obj) -> M::Obj {
        (self.on_obj)(model, a)
    }

    pub fn t_mor(&self, model: &M, f: &M::Mor) -> Result<M::Mor> {
        let dom = self.t(model, &model.dom(f));
        let cod = self.t(model, &model.cod(f));
        expect_boundary(model, "T on morphisms", f, (self.on_mor)(model, f), &dom, &cod)
    }

    pub fn mu(&self, model: &M, a: &M::Obj) -> Result<M::Mor> {
        let ta = self.t(model, a);
        let tta = self.t(model, &ta);
        expect_boundary(model, "mu", a, (self.mu)(model, a), &tta, &ta)
    }

    pub fn eta(&self, model: &M, a: &M::Obj) -> Result<M::Mor> {
        let ta = self.t(model, a);
        expect_boundary(model, "eta", a, (self.eta)(model, a), a, &ta)
    }

    pub fn with_algebras(mut self, src: Arc<dyn AlgebraSource<M>>) -> Self {
        self.algebras = Some(src);
        self
    }
}

/// A monad with comonoidal structure `m_{A,B}: T(A⊗B) → TA⊗TB`, `m_I: T(I) → I`.
pub struct BimonadBundle<M: Model> {
    pub monad: MonadBundle<M>,
    pub m: Component2<M>,
    pub m_unit: Constant<M>,
}

impl<M: Model> Clone for BimonadBundle<M> {
    fn clone(&self) -> Self {
        BimonadBundle {
            monad: self.monad.clone(),
            m: self.m.clone(),
            m_unit: self.m_unit.clone(),
        }
    }
}

impl<M: Model + 'static> BimonadBundle<M> {
    pub fn identity() -> Self {
        BimonadBundle {
            monad: MonadBundle::identity(),
            m: Arc::new(|m, a, b| Ok(m.identity(&m.tensor_obj(a, b)))),
            m_unit: Arc::new(|m| Ok(m.identity(&m.unit_object()))),
        }
    }
}

impl<M: Model> BimonadBundle<M> {
    pub fn name(&self) -> &str {
        &self.monad.name
    }

    pub fn t(&self, model: &M, a: &M::Obj) -> M::Obj {
        self.monad.t(model, a)
    }

    pub fn m(&self, model: &M, a: &M::Obj, b: &M::Obj) -> Result<M::Mor> {
        let dom = self.t(model, &model.tensor_obj(a, b));
        let cod = model.tensor_obj(&self.t(model, a), &self.t(model, b));
        expect_boundary(model, "m", (a, b), (self.m)(model, a, b), &dom, &cod)
    }

    pub fn m_unit(&self, model: &M) -> Result<M::Mor> {
        let i = model.unit_object();
        let ti = self.t(model, &i);
        expect_boundary(model, "m_I", &i, (self.m_unit)(model), &ti, &i)
    }
}

/// A bimonad together with a supplied inverse of the left fusion operator.
pub struct HopfBundle<M: Model> {
    pub bimonad: BimonadBundle<M>,
    /// `hl_inv(A, B): TA⊗TB → T(A⊗TB)`.
    pub hl_inv: Component2<M>,
}

impl<M: Model> Clone for HopfBundle<M> {
    fn clone(&self) -> Self {
        HopfBundle {
            bimonad: self.bimonad.clone(),
            hl_inv: self.hl_inv.clone(),
        }
    }
}

impl<M: Model + 'static> HopfBundle<M> {
    pub fn identity() -> Self {
        HopfBundle {
            bimonad: BimonadBundle::identity(),
            hl_inv: Arc::new(|m, a, b| Ok(m.identity(&m.tensor_obj(a, b)))),
        }
    }

    /// Uses the model's inverse search on `h^l`; pairs where no inverse
    /// exists yield [`Error::NotInvertible`].
    pub fn from_fusion_search(bimonad: BimonadBundle<M>) -> Self {
        let b = bimonad.clone();
        HopfBundle {
            bimonad,
            hl_inv: Arc::new(move |m, x, y| {
                let h = fusion_left(m, &b, x, y)?;
                m.try_invert(&h).ok_or_else(|| Error::NotInvertible {
                    dom: format!("{:?}", m.dom(&h)),
                    cod: format!("{:?}", m.cod(&h)),
                })
            }),
        }
    }
}

impl<M: Model> HopfBundle<M> {
    pub fn name(&self) -> &str {
        self.bimonad.name()
    }

    pub fn t(&self, model: &M, a: &M::Obj) -> M::Obj {
        self.bimonad.t(model, a)
    }

    pub fn hl_inv(&self, model: &M, a: &M::Obj, b: &M::Obj) -> Result<M::Mor> {
        let t = |o: &M::Obj| self.t(model, o);
        let dom = model.tensor_obj(&t(a), &t(b));
        let cod = t(&model.tensor_obj(a, &t(b)));
        expect_boundary(model, "hl_inv", (a, b), (self.hl_inv)(model, a, b), &dom, &cod)
    }

    /// Same bundle with `hl_inv` post-processed by `edit` (mutation testing).
    pub fn with_hl_inv_edit(
        &self,
        edit: impl Fn(&M, &M::Obj, &M::Obj, M::Mor) -> M::Mor + Send + Sync + 'static,
    ) -> Self
    where
        M: 'static,
    {
        let orig = self.hl_inv.clone();
        HopfBundle {
            bimonad: self.bimonad.clone(),
            hl_inv: Arc::new(move |m, a, b| Ok(edit(m, a, b, orig(m, a, b)?))),
        }
    }
}

// ---------------------------------------------------------------------------
// fusion operators

/// `h^l_{A,B} = (1_{TA}⊗μ_B)∘m_{A,TB}: T(A⊗TB) → TA⊗TB`.
pub fn fusion_left<M: Model>(model: &M, b: &BimonadBundle<M>, x: &M::Obj, y: &M::Obj) -> Result<M::Mor> {
    let ty = b.t(model, y);
    let m = b.m(model, x, &ty)?;
    let tail = model.tensor(&model.identity(&b.t(model, x)), &b.monad.mu(model, y)?);
    model.compose(&tail, &m)
}

/// `h^r_{A,B} = (μ_A⊗1_{TB})∘m_{TA,B}: T(TA⊗B) → TA⊗TB`.
pub fn fusion_right<M: Model>(model: &M, b: &BimonadBundle<M>, x: &M::Obj, y: &M::Obj) -> Result<M::Mor> {
    let tx = b.t(model, x);
    let m = b.m(model, &tx, y)?;
    let tail = model.tensor(&b.monad.mu(model, x)?, &model.identity(&b.t(model, y)));
    model.compose(&tail, &m)
}

/// `h^r_{P,Q} = σ_{TQ,TP}∘h^l_{Q,P}∘T(σ_{TP,Q})`.
pub fn fusion_right_derived<M: Model>(
    model: &M,
    b: &BimonadBundle<M>,
    p: &M::Obj,
    q: &M::Obj,
) -> Result<M::Mor> {
    let (tp, tq) = (b.t(model, p), b.t(model, q));
    model.chain(&[
        b.monad.t_mor(model, &model.sym(&tp, q))?,
        fusion_left(model, b, q, p)?,
        model.sym(&tq, &tp),
    ])
}

/// `(h^r_{P,Q})⁻¹ = T(σ_{Q,TP})∘(h^l_{Q,P})⁻¹∘σ_{TP,TQ}`.
pub fn fusion_right_inv_derived<M: Model>(
    model: &M,
    h: &HopfBundle<M>,
    p: &M::Obj,
    q: &M::Obj,
) -> Result<M::Mor> {
    let b = &h.bimonad;
    let (tp, tq) = (b.t(model, p), b.t(model, q));
    model.chain(&[
        model.sym(&tp, &tq),
        h.hl_inv(model, q, p)?,
        b.monad.t_mor(model, &model.sym(q, &tp))?,
    ])
}

pub fn try_invert_fusion<M: Model>(
    model: &M,
    b: &BimonadBundle<M>,
    x: &M::Obj,
    y: &M::Obj,
) -> Result<Option<M::Mor>> {
    Ok(model.try_invert(&fusion_left(model, b, x, y)?))
}

// ---------------------------------------------------------------------------
// law suites

fn objs_only<M: Model>(_: &M, _: &[M::Obj]) -> Vec<(M::Obj, M::Obj)> {
    vec![]
}

pub fn monad_laws<'a, M: Model>(t: &'a MonadBundle<M>) -> Vec<Law<'a, M>> {
    vec![
        Law::new("monad unit (left)", 1, objs_only::<M>, move |m: &M, o, _, tl| {
            let a = &o[0];
            let lhs = t
                .eta(m, a)
                .and_then(|e| t.t_mor(m, &e))
                .and_then(|te| m.compose(&t.mu(m, a)?, &te));
            tl.equal(m, "monad unit (left)", || inputs_json::<M>(o, &[]), lhs, Ok(m.identity(&t.t(m, a))));
        }),
        Law::new("monad unit (right)", 1, objs_only::<M>, move |m: &M, o, _, tl| {
            let a = &o[0];
            let ta = t.t(m, a);
            let lhs = t.eta(m, &ta).and_then(|e| m.compose(&t.mu(m, a)?, &e));
            tl.equal(m, "monad unit (right)", || inputs_json::<M>(o, &[]), lhs, Ok(m.identity(&ta)));
        }),
        Law::new("monad associativity", 1, objs_only::<M>, move |m: &M, o, _, tl| {
            let a = &o[0];
            let ta = t.t(m, a);
            let lhs = t
                .mu(m, a)
                .and_then(|mu| m.compose(&mu, &t.t_mor(m, &mu)?));
            let rhs = t.mu(m, a).and_then(|mu| m.compose(&mu, &t.mu(m, &ta)?));
            tl.equal(m, "monad associativity", || inputs_json::<M>(o, &[]), lhs, rhs);
        }),
        Law::new(
            "eta naturality",
            2,
            |_: &M, o: &[M::Obj]| vec![(o[0].clone(), o[1].clone())],
            move |m: &M, o, f, tl| {
                let (a, b) = (&o[0], &o[1]);
                let lhs = t.t_mor(m, &f[0]).and_then(|tf| m.compose(&tf, &t.eta(m, a)?));
                let rhs = t.eta(m, b).and_then(|e| m.compose(&e, &f[0]));
                tl.equal(m, "eta naturality", || inputs_json::<M>(o, f), lhs, rhs);
            },
        ),
        Law::new(
            "mu naturality",
            2,
            |_: &M, o: &[M::Obj]| vec![(o[0].clone(), o[1].clone())],
            move |m: &M, o, f, tl| {
                let (a, b) = (&o[0], &o[1]);
                let lhs = t.t_mor(m, &f[0]).and_then(|tf| m.compose(&tf, &t.mu(m, a)?));
                let rhs = t
                    .t_mor(m, &f[0])
                    .and_then(|tf| t.t_mor(m, &tf))
                    .and_then(|ttf| m.compose(&t.mu(m, b)?, &ttf));
                tl.equal(m, "mu naturality", || inputs_json::<M>(o, f), lhs, rhs);
            },
        ),
        Law::new(
            "functoriality",
            3,
            |_: &M, o: &[M::Obj]| vec![(o[0].clone(), o[1].clone()), (o[1].clone(), o[2].clone())],
            move |m: &M, o, f, tl| {
                let lhs = m.compose(&f[1], &f[0]).and_then(|gf| t.t_mor(m, &gf));
                let rhs = t
                    .t_mor(m, &f[1])
                    .and_then(|tg| m.compose(&tg, &t.t_mor(m, &f[0])?));
                tl.equal(m, "functoriality", || inputs_json::<M>(o, f), lhs, rhs);
                let tid = t.t_mor(m, &m.identity(&o[0]));
                tl.equal(m, "functoriality", || inputs_json::<M>(o, f), tid, Ok(m.identity(&t.t(m, &o[0]))));
            },
        ),
    ]
}

pub fn check_monad_laws<M: Model>(model: &M, monad: &MonadBundle<M>, budget: &CaseBudget) -> CheckReport {
    run_laws(model, budget, "monad laws", &monad_laws(monad))
}

pub fn bimonad_laws<'a, M: Model>(b: &'a BimonadBundle<M>) -> Vec<Law<'a, M>> {
    let t = &b.monad;
    vec![
        Law::new("coassociativity", 3, objs_only::<M>, move |m: &M, o, _, tl| {
            let (x, y, z) = (&o[0], &o[1], &o[2]);
            let (tx, ty, tz) = (b.t(m, x), b.t(m, y), b.t(m, z));
            let lhs = (|| {
                m.chain(&[
                    b.m(m, x, &m.tensor_obj(y, z))?,
                    m.tensor(&m.identity(&tx), &b.m(m, y, z)?),
                    m.assoc(&tx, &ty, &tz),
                ])
            })();
            let rhs = (|| {
                m.chain(&[
                    t.t_mor(m, &m.assoc(x, y, z))?,
                    b.m(m, &m.tensor_obj(x, y), z)?,
                    m.tensor(&b.m(m, x, y)?, &m.identity(&tz)),
                ])
            })();
            tl.equal(m, "coassociativity", || inputs_json::<M>(o, &[]), lhs, rhs);
        }),
        Law::new("counit", 1, objs_only::<M>, move |m: &M, o, _, tl| {
            let a = &o[0];
            let i = m.unit_object();
            let ta = b.t(m, a);
            let left = (|| {
                m.chain(&[
                    t.t_mor(m, &m.lunit_inv(a))?,
                    b.m(m, &i, a)?,
                    m.tensor(&b.m_unit(m)?, &m.identity(&ta)),
                    m.lunit(&ta),
                ])
            })();
            let right = (|| {
                m.chain(&[
                    t.t_mor(m, &m.runit_inv(a))?,
                    b.m(m, a, &i)?,
                    m.tensor(&m.identity(&ta), &b.m_unit(m)?),
                    m.runit(&ta),
                ])
            })();
            tl.equal(m, "counit (left)", || inputs_json::<M>(o, &[]), left, Ok(m.identity(&ta)));
            tl.equal(m, "counit (right)", || inputs_json::<M>(o, &[]), right, Ok(m.identity(&ta)));
        }),
        Law::new(
            "m naturality",
            4,
            |_: &M, o: &[M::Obj]| vec![(o[0].clone(), o[1].clone()), (o[2].clone(), o[3].clone())],
            move |m: &M, o, f, tl| {
                let (a, a2, c, c2) = (&o[0], &o[1], &o[2], &o[3]);
                let lhs = (|| m.compose(&b.m(m, a2, c2)?, &t.t_mor(m, &m.tensor(&f[0], &f[1]))?))();
                let rhs = (|| {
                    m.compose(&m.tensor(&t.t_mor(m, &f[0])?, &t.t_mor(m, &f[1])?), &b.m(m, a, c)?)
                })();
                tl.equal(m, "m naturality", || inputs_json::<M>(o, f), lhs, rhs);
            },
        ),
        Law::new("mu comonoidal", 2, objs_only::<M>, move |m: &M, o, _, tl| {
            let (x, y) = (&o[0], &o[1]);
            let (tx, ty) = (b.t(m, x), b.t(m, y));
            let lhs = (|| m.compose(&b.m(m, x, y)?, &t.mu(m, &m.tensor_obj(x, y))?))();
            let rhs = (|| {
                m.chain(&[
                    t.t_mor(m, &b.m(m, x, y)?)?,
                    b.m(m, &tx, &ty)?,
                    m.tensor(&t.mu(m, x)?, &t.mu(m, y)?),
                ])
            })();
            tl.equal(m, "mu comonoidal", || inputs_json::<M>(o, &[]), lhs, rhs);
        }),
        Law::new("mu counital", 0, objs_only::<M>, move |m: &M, o, _, tl| {
            let i = m.unit_object();
            let lhs = (|| m.compose(&b.m_unit(m)?, &t.mu(m, &i)?))();
            let rhs = (|| m.compose(&b.m_unit(m)?, &t.t_mor(m, &b.m_unit(m)?)?))();
            tl.equal(m, "mu counital", || inputs_json::<M>(o, &[]), lhs, rhs);
        }),
        Law::new("eta comonoidal", 2, objs_only::<M>, move |m: &M, o, _, tl| {
            let (x, y) = (&o[0], &o[1]);
            let lhs = (|| m.compose(&b.m(m, x, y)?, &t.eta(m, &m.tensor_obj(x, y))?))();
            let rhs = (|| Ok(m.tensor(&t.eta(m, x)?, &t.eta(m, y)?)))();
            tl.equal(m, "eta comonoidal", || inputs_json::<M>(o, &[]), lhs, rhs);
        }),
        Law::new("eta counital", 0, objs_only::<M>, move |m: &M, o, _, tl| {
            let i = m.unit_object();
            let lhs = (|| m.compose(&b.m_unit(m)?, &t.eta(m, &i)?))();
            tl.equal(m, "eta counital", || inputs_json::<M>(o, &[]), lhs, Ok(m.identity(&i)));
        }),
        Law::new("symmetry", 2, objs_only::<M>, move |m: &M, o, _, tl| {
            let (x, y) = (&o[0], &o[1]);
            let lhs = (|| m.compose(&b.m(m, y, x)?, &t.t_mor(m, &m.sym(x, y))?))();
            let rhs = (|| m.compose(&m.sym(&b.t(m, x), &b.t(m, y)), &b.m(m, x, y)?))();
            tl.equal(m, "symmetry", || inputs_json::<M>(o, &[]), lhs, rhs);
        }),
    ]
}

/// Comonoidal functor and transformation laws plus the symmetry condition.
pub fn check_bimonad_laws<M: Model>(model: &M, b: &BimonadBundle<M>, budget: &CaseBudget) -> CheckReport {
    run_laws(model, budget, "bimonad laws", &bimonad_laws(b))
}

pub fn hopf_laws<'a, M: Model>(h: &'a HopfBundle<M>) -> Vec<Law<'a, M>> {
    let b = &h.bimonad;
    let t = &b.monad;
    vec![
        Law::new("fusion inverse", 2, objs_only::<M>, move |m: &M, o, _, tl| {
            let (x, y) = (&o[0], &o[1]);
            let hl = match fusion_left(m, b, x, y) {
                Ok(f) => f,
                Err(e) => return tl.error("fusion inverse", inputs_json::<M>(o, &[]), &e),
            };
            match h.hl_inv(m, x, y) {
                Ok(inv) => {
                    let (d, c) = (m.dom(&hl), m.cod(&hl));
                    tl.equal(m, "fusion inverse", || inputs_json::<M>(o, &[]), m.compose(&hl, &inv), Ok(m.identity(&c)));
                    tl.equal(m, "fusion inverse", || inputs_json::<M>(o, &[]), m.compose(&inv, &hl), Ok(m.identity(&d)));
                }
                Err(_) => {
                    // no inverse: the witness is the pair of boundary objects
                    tl.cases += 1;
                    tl.fail(
                        "fusion inverse",
                        inputs_json::<M>(o, &[]),
                        to_json(&m.dom(&hl)),
                        to_json(&m.cod(&hl)),
                    );
                }
            }
        }),
        Law::new("right fusion from left", 2, objs_only::<M>, move |m: &M, o, _, tl| {
            let (p, q) = (&o[0], &o[1]);
            let direct = fusion_right(m, b, p, q);
            let derived = fusion_right_derived(m, b, p, q);
            tl.equal(m, "right fusion from left", || inputs_json::<M>(o, &[]), derived, direct.clone());
            if let (Ok(hr), Ok(inv)) = (direct, fusion_right_inv_derived(m, h, p, q)) {
                let (d, c) = (m.dom(&hr), m.cod(&hr));
                tl.equal(m, "right fusion inverse", || inputs_json::<M>(o, &[]), m.compose(&hr, &inv), Ok(m.identity(&c)));
                tl.equal(m, "right fusion inverse", || inputs_json::<M>(o, &[]), m.compose(&inv, &hr), Ok(m.identity(&d)));
            }
        }),
        Law::new("fusion symmetry", 2, objs_only::<M>, move |m: &M, o, _, tl| {
            // σ_{TA,TB}∘h^l_{A,B} = h^r_{B,A}∘T(σ_{A,TB})
            let (x, y) = (&o[0], &o[1]);
            let (tx, ty) = (b.t(m, x), b.t(m, y));
            let lhs = (|| m.compose(&m.sym(&tx, &ty), &fusion_left(m, b, x, y)?))();
            let rhs = (|| m.compose(&fusion_right(m, b, y, x)?, &t.t_mor(m, &m.sym(x, &ty))?))();
            tl.equal(m, "fusion symmetry", || inputs_json::<M>(o, &[]), lhs, rhs);
        }),
        Law::new("h1", 2, objs_only::<M>, move |m: &M, o, _, tl| {
            let (y, x) = (&o[0], &o[1]);
            let lhs = (|| {
                m.compose(
                    &fusion_left(m, b, y, x)?,
                    &t.t_mor(m, &m.tensor(&m.identity(y), &t.eta(m, x)?))?,
                )
            })();
            tl.equal(m, "h1", || inputs_json::<M>(o, &[]), lhs, b.m(m, y, x));
        }),
        Law::new("h2", 2, objs_only::<M>, move |m: &M, o, _, tl| {
            let (y, x) = (&o[0], &o[1]);
            let tx = b.t(m, x);
            let lhs = (|| m.compose(&fusion_left(m, b, y, x)?, &t.eta(m, &m.tensor_obj(y, &tx))?))();
            let rhs = (|| Ok(m.tensor(&t.eta(m, y)?, &m.identity(&tx))))();
            tl.equal(m, "h2", || inputs_json::<M>(o, &[]), lhs, rhs);
        }),
        Law::new("h3", 2, objs_only::<M>, move |m: &M, o, _, tl| {
            let (a, x) = (&o[0], &o[1]);
            let (ta, tx) = (b.t(m, a), b.t(m, x));
            let lhs = (|| {
                m.compose(
                    &t.t_mor(m, &m.tensor(&m.identity(a), &t.mu(m, x)?))?,
                    &h.hl_inv(m, a, &tx)?,
                )
            })();
            let rhs = (|| {
                m.compose(&h.hl_inv(m, a, x)?, &m.tensor(&m.identity(&ta), &t.mu(m, x)?))
            })();
            tl.equal(m, "h3", || inputs_json::<M>(o, &[]), lhs, rhs);
        }),
        Law::new("h4", 2, objs_only::<M>, move |m: &M, o, _, tl| {
            let (a, x) = (&o[0], &o[1]);
            let tx = b.t(m, x);
            let lhs = t.eta(m, &m.tensor_obj(a, &tx));
            let rhs = (|| m.compose(&h.hl_inv(m, a, x)?, &m.tensor(&t.eta(m, a)?, &m.identity(&tx))))();
            tl.equal(m, "h4", || inputs_json::<M>(o, &[]), lhs, rhs);
        }),
        Law::new("fusion algebra morphisms", 2, objs_only::<M>, move |m: &M, o, _, tl| {
            // h^l: (T(A⊗TB), μ) → (TA, μ_A)⊗(TB, μ_B), and its inverse back
            let (x, y) = (&o[0], &o[1]);
            let (tx, ty) = (b.t(m, x), b.t(m, y));
            let src_obj = m.tensor_obj(x, &ty);
            let tensor_action = (|| m.compose(&m.tensor(&t.mu(m, x)?, &t.mu(m, y)?), &b.m(m, &tx, &ty)?))();
            let hl = fusion_left(m, b, x, y);
            let lhs = (|| m.compose(hl.as_ref().map_err(Clone::clone)?, &t.mu(m, &src_obj)?))();
            let rhs = (|| {
                m.compose(
                    tensor_action.as_ref().map_err(Clone::clone)?,
                    &t.t_mor(m, hl.as_ref().map_err(Clone::clone)?)?,
                )
            })();
            tl.equal(m, "fusion algebra morphisms", || inputs_json::<M>(o, &[]), lhs, rhs);
            if let Ok(inv) = h.hl_inv(m, x, y) {
                let lhs = (|| m.compose(&inv, tensor_action.as_ref().map_err(Clone::clone)?))();
                let rhs = (|| m.compose(&t.mu(m, &src_obj)?, &t.t_mor(m, &inv)?))();
                tl.equal(m, "fusion inverse algebra morphism", || inputs_json::<M>(o, &[]), lhs, rhs);
            }
        }),
    ]
}

/// Inverse laws for `h^l` and the derived `h^r`, the identities h1–h4,
/// the left/right symmetry relation, and the algebra-morphism property of
/// the fusion operators.
pub fn check_hopf<M: Model>(model: &M, h: &HopfBundle<M>, budget: &CaseBudget) -> CheckReport {
    run_laws(model, budget, "hopf", &hopf_laws(h))
}

// ---------------------------------------------------------------------------
// idempotence

/// Objects used by suites that only quantify over objects.
pub fn checked_objects<M: Model>(model: &M, budget: &CaseBudget) -> (Vec<M::Obj>, bool) {
    if budget.exhaustive && model.has_enumerator() {
        if let Some(objs) = model.enumerate_objects(budget.max_object_size) {
            return (objs, true);
        }
    }
    let objs = (0..budget.cases)
        .map(|i| model.sample_object(&mut budget.rng(i), budget.max_object_size))
        .collect();
    (objs, false)
}

/// Which idempotence criteria hold, and whether the implications between
/// them do.
///
/// Facts reported: `idempotent` (μ invertible at every checked object),
/// `unit iso` (η_I∘m_I = 1), `hopf` (when a Hopf bundle is given and passes
/// [`check_hopf`]), `traced` (when the bimonad is idempotent and the model
/// traced). Failures are violations of the implications.
pub fn idempotence_suite<M: Model>(
    model: &M,
    b: &BimonadBundle<M>,
    hopf: Option<&HopfBundle<M>>,
    budget: &CaseBudget,
) -> CheckReport {
    let t = &b.monad;
    let (objs, exhaustive) = checked_objects(model, budget);
    let idempotent = std::sync::atomic::AtomicBool::new(true);
    let mut tally = run_blocks(&objs, |a, tl| {
        let inputs = || json!({ "object": to_json(a) });
        let mu = match t.mu(model, a) {
            Ok(mu) => mu,
            Err(e) => return tl.error("mu", inputs(), &e),
        };
        match model.try_invert(&mu) {
            None => idempotent.store(false, std::sync::atomic::Ordering::Relaxed),
            Some(inv) => {
                let ta = t.t(model, a);
                tl.equal(model, "mu inverse is eta_T", inputs, Ok(inv.clone()), t.eta(model, &ta));
                tl.equal(
                    model,
                    "mu inverse is T(eta)",
                    inputs,
                    Ok(inv),
                    t.eta(model, a).and_then(|e| t.t_mor(model, &e)),
                );
            }
        }
    });
    let idempotent = idempotent.into_inner();

    let i = model.unit_object();
    let unit_iso_eval = (|| model.compose(&t.eta(model, &i)?, &b.m_unit(model)?))();
    let unit_iso = matches!(&unit_iso_eval, Ok(f) if *f == model.identity(&t.t(model, &i)));
    if idempotent {
        // an idempotent bimonad has η_I∘m_I = 1
        tally.equal(
            model,
            "idempotent implies unit iso",
            || json!({}),
            unit_iso_eval.clone(),
            Ok(model.identity(&t.t(model, &i))),
        );
        // η⁻¹ on tensors of free algebras
        let sample: Vec<_> = objs.iter().take(6).collect();
        for a in &sample {
            for c in &sample {
                let check = (|| -> Result<(M::Mor, M::Mor)> {
                    let (ta, tc) = (t.t(model, a), t.t(model, c));
                    let eta = t.eta(model, &model.tensor_obj(&ta, &tc))?;
                    let inv = model.try_invert(&eta).ok_or_else(|| Error::NotInvertible {
                        dom: format!("{:?}", model.dom(&eta)),
                        cod: format!("{:?}", model.cod(&eta)),
                    })?;
                    let rhs = model.compose(
                        &model.tensor(&t.mu(model, a)?, &t.mu(model, c)?),
                        &b.m(model, &ta, &tc)?,
                    )?;
                    Ok((inv, rhs))
                })();
                let inputs = || json!({ "objects": to_json(&[a, c]) });
                match check {
                    Ok((l, r)) => {
                        tally.equal(model, "eta inverse on tensors", inputs, Ok(l), Ok(r));
                    }
                    Err(e) => tally.error("eta inverse on tensors", inputs(), &e),
                }
            }
        }
    }

    let mut facts = vec![fact("idempotent", idempotent), fact("unit iso", unit_iso)];
    if let Some(h) = hopf {
        let hopf_ok = check_hopf(model, h, budget).passed();
        facts.push(fact("hopf", hopf_ok));
        if hopf_ok {
            tally.holds("hopf: idempotent iff unit iso", idempotent == unit_iso, || {
                json!({ "idempotent": idempotent, "unit iso": unit_iso })
            });
        }
    }
    let caps = model.capabilities();
    if idempotent && caps.traced && caps.symmetric {
        let traced = check_traced_monad(model, b, budget);
        facts.push(fact("traced", traced.passed()));
        tally.holds("idempotent implies traced", traced.passed(), || {
            json!({ "traced monad failures": to_json(&traced.failures) })
        });
    }
    finish("idempotence", model.name(), tally, exhaustive, budget.exhaustive, facts)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceMeta {
    pub holds: bool,
    pub lhs: Value,
    pub rhs: Value,
}

/// `Tr^{T(I)}_{I,T(I)}(m_{I,I}∘T(λ⁻¹_I)∘λ_{T(I)}) = η_I`.
pub fn trace_meta_check<M: Model>(model: &M, b: &BimonadBundle<M>) -> Result<TraceMeta> {
    let t = &b.monad;
    let i = model.unit_object();
    let ti = t.t(model, &i);
    let body = model.chain(&[
        model.lunit(&ti),
        t.t_mor(model, &model.lunit_inv(&i))?,
        b.m(model, &i, &i)?,
    ])?;
    let lhs = model.trace(&ti, &i, &ti, &body);
    let rhs = t.eta(model, &i);
    let holds = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r);
    Ok(TraceMeta {
        holds,
        lhs: side_json(&lhs),
        rhs: side_json(&rhs),
    })
}

/// [`trace_meta_check`] as a one-case report.
pub fn trace_meta_report<M: Model>(model: &M, b: &BimonadBundle<M>) -> CheckReport {
    let mut tally = Tally::default();
    match trace_meta_check(model, b) {
        Ok(tm) => {
            tally.cases += 1;
            if !tm.holds {
                tally.fail("trace meta", json!({ "bundle": b.name() }), tm.lhs, tm.rhs);
            }
        }
        Err(e) => tally.error("trace meta", json!({ "bundle": b.name() }), &e),
    }
    finish("trace meta", model.name(), tally, true, false, vec![])
}

/// Naturality-free sanity check used by constructors: evaluates every
/// component of `b` at a handful of sampled objects.
pub fn smoke_bundle<M: Model>(model: &M, b: &BimonadBundle<M>, budget: &CaseBudget) -> Result<()> {
    let errors = run_sampled(budget, |rng, tl| {
        let a = model.sample_object(rng, budget.max_object_size);
        let c = model.sample_object(rng, budget.max_object_size);
        for r in [b.monad.mu(model, &a), b.monad.eta(model, &a), b.m(model, &a, &c)] {
            if let Err(e) = r {
                tl.error("component", json!({}), &e);
            }
        }
    });
    match errors.failures.first() {
        None => Ok(()),
        Some(f) => Err(Error::validation("bundle components", f.lhs.to_string())),
    }
}
