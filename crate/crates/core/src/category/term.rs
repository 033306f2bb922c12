use std::fmt;

use super::{Model, Structural};
use crate::error::{Error, Result};

/// Morphism expressions over a model.
pub enum Term<M: Model + ?Sized> {
    Prim(M::Mor),
    Id(M::Obj),
    /// `Compose(g, f)` is `g∘f`.
    Compose(Box<Term<M>>, Box<Term<M>>),
    Tensor(Box<Term<M>>, Box<Term<M>>),
    Sym(M::Obj, M::Obj),
    Assoc(M::Obj, M::Obj, M::Obj),
    AssocInv(M::Obj, M::Obj, M::Obj),
    LUnit(M::Obj),
    LUnitInv(M::Obj),
    RUnit(M::Obj),
    RUnitInv(M::Obj),
    /// `Tr^x_{a,b}(body)`.
    Trace {
        x: M::Obj,
        a: M::Obj,
        b: M::Obj,
        body: Box<Term<M>>,
    },
}

impl<M: Model + ?Sized> Clone for Term<M> {
    fn clone(&self) -> Self {
        match self {
            Term::Prim(f) => Term::Prim(f.clone()),
            Term::Id(a) => Term::Id(a.clone()),
            Term::Compose(g, f) => Term::Compose(g.clone(), f.clone()),
            Term::Tensor(f, g) => Term::Tensor(f.clone(), g.clone()),
            Term::Sym(a, b) => Term::Sym(a.clone(), b.clone()),
            Term::Assoc(a, b, c) => Term::Assoc(a.clone(), b.clone(), c.clone()),
            Term::AssocInv(a, b, c) => Term::AssocInv(a.clone(), b.clone(), c.clone()),
            Term::LUnit(a) => Term::LUnit(a.clone()),
            Term::LUnitInv(a) => Term::LUnitInv(a.clone()),
            Term::RUnit(a) => Term::RUnit(a.clone()),
            Term::RUnitInv(a) => Term::RUnitInv(a.clone()),
            Term::Trace { x, a, b, body } => Term::Trace {
                x: x.clone(),
                a: a.clone(),
                b: b.clone(),
                body: body.clone(),
            },
        }
    }
}

impl<M: Model + ?Sized> fmt::Debug for Term<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Prim(_) => write!(f, "Prim"),
            Term::Id(a) => write!(f, "Id({a:?})"),
            Term::Compose(g, h) => write!(f, "({g:?} ∘ {h:?})"),
            Term::Tensor(g, h) => write!(f, "({g:?} ⊗ {h:?})"),
            Term::Sym(a, b) => write!(f, "Sym({a:?},{b:?})"),
            Term::Assoc(a, b, c) => write!(f, "Assoc({a:?},{b:?},{c:?})"),
            Term::AssocInv(a, b, c) => write!(f, "AssocInv({a:?},{b:?},{c:?})"),
            Term::LUnit(a) => write!(f, "LUnit({a:?})"),
            Term::LUnitInv(a) => write!(f, "LUnitInv({a:?})"),
            Term::RUnit(a) => write!(f, "RUnit({a:?})"),
            Term::RUnitInv(a) => write!(f, "RUnitInv({a:?})"),
            Term::Trace { x, body, .. } => write!(f, "Trace[{x:?}]({body:?})"),
        }
    }
}

impl<M: Model + ?Sized> Term<M> {
    pub fn compose(g: Term<M>, f: Term<M>) -> Self {
        Term::Compose(Box::new(g), Box::new(f))
    }

    pub fn tensor(f: Term<M>, g: Term<M>) -> Self {
        Term::Tensor(Box::new(f), Box::new(g))
    }

    /// Composite in diagrammatic order: `seq([f, g, h]) = h∘g∘f`.
    pub fn seq(terms: Vec<Term<M>>) -> Self {
        let mut it = terms.into_iter();
        let first = it.next().expect("seq of at least one term");
        it.fold(first, |acc, t| Term::compose(t, acc))
    }

    pub fn from_structural(s: Structural<M::Obj>) -> Self {
        match s {
            Structural::Assoc(a, b, c) => Term::Assoc(a, b, c),
            Structural::AssocInv(a, b, c) => Term::AssocInv(a, b, c),
            Structural::LUnit(a) => Term::LUnit(a),
            Structural::LUnitInv(a) => Term::LUnitInv(a),
            Structural::RUnit(a) => Term::RUnit(a),
            Structural::RUnitInv(a) => Term::RUnitInv(a),
            Structural::Sym(a, b) => Term::Sym(a, b),
        }
    }

    /// Domain and codomain, checking every boundary on the way up.
    pub fn boundary(&self, model: &M) -> Result<(M::Obj, M::Obj)> {
        let t = |a: &M::Obj, b: &M::Obj| model.tensor_obj(a, b);
        Ok(match self {
            Term::Prim(f) => (model.dom(f), model.cod(f)),
            Term::Id(a) => (a.clone(), a.clone()),
            Term::Compose(g, f) => {
                let (fd, fc) = f.boundary(model)?;
                let (gd, gc) = g.boundary(model)?;
                if fc != gd {
                    return Err(Error::type_mismatch(
                        format!("subterm {self:?}"),
                        &gd,
                        &fc,
                    ));
                }
                (fd, gc)
            }
            Term::Tensor(f, g) => {
                let (fd, fc) = f.boundary(model)?;
                let (gd, gc) = g.boundary(model)?;
                (t(&fd, &gd), t(&fc, &gc))
            }
            Term::Sym(a, b) => (t(a, b), t(b, a)),
            Term::Assoc(a, b, c) => (t(a, &t(b, c)), t(&t(a, b), c)),
            Term::AssocInv(a, b, c) => (t(&t(a, b), c), t(a, &t(b, c))),
            Term::LUnit(a) => (t(&model.unit_object(), a), a.clone()),
            Term::LUnitInv(a) => (a.clone(), t(&model.unit_object(), a)),
            Term::RUnit(a) => (t(a, &model.unit_object()), a.clone()),
            Term::RUnitInv(a) => (a.clone(), t(a, &model.unit_object())),
            Term::Trace { x, a, b, body } => {
                let (d, c) = body.boundary(model)?;
                if d != t(a, x) || c != t(b, x) {
                    return Err(Error::type_mismatch(
                        format!("subterm {self:?}"),
                        format!("{:?} -> {:?}", t(a, x), t(b, x)),
                        format!("{d:?} -> {c:?}"),
                    ));
                }
                (a.clone(), b.clone())
            }
        })
    }

    /// Type-checks, then evaluates by structural recursion.
    pub fn eval(&self, model: &M) -> Result<M::Mor> {
        self.boundary(model)?;
        self.eval_checked(model)
    }

    fn eval_checked(&self, model: &M) -> Result<M::Mor> {
        Ok(match self {
            Term::Prim(f) => f.clone(),
            Term::Id(a) => model.identity(a),
            Term::Compose(g, f) => {
                model.compose_unchecked(&g.eval_checked(model)?, &f.eval_checked(model)?)
            }
            Term::Tensor(f, g) => model.tensor(&f.eval_checked(model)?, &g.eval_checked(model)?),
            Term::Sym(a, b) => model.sym(a, b),
            Term::Assoc(a, b, c) => model.assoc(a, b, c),
            Term::AssocInv(a, b, c) => model.assoc_inv(a, b, c),
            Term::LUnit(a) => model.lunit(a),
            Term::LUnitInv(a) => model.lunit_inv(a),
            Term::RUnit(a) => model.runit(a),
            Term::RUnitInv(a) => model.runit_inv(a),
            Term::Trace { x, a, b, body } => model.trace(x, a, b, &body.eval_checked(model)?)?,
        })
    }
}

/// Evaluates `t` in `model`.
pub fn eval_term<M: Model + ?Sized>(model: &M, t: &Term<M>) -> Result<M::Mor> {
    t.eval(model)
}
