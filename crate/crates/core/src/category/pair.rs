//! The product of two models, with everything computed componentwise.

use super::{Capabilities, CaseRng, Model, Structural};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct PairModel<L, R> {
    pub left: L,
    pub right: R,
}

impl<L: Model, R: Model> PairModel<L, R> {
    pub fn new(left: L, right: R) -> Self {
        PairModel { left, right }
    }
}

fn map_structural<O, P>(s: &Structural<O>, f: impl Fn(&O) -> P) -> Structural<P> {
    match s {
        Structural::Assoc(a, b, c) => Structural::Assoc(f(a), f(b), f(c)),
        Structural::AssocInv(a, b, c) => Structural::AssocInv(f(a), f(b), f(c)),
        Structural::LUnit(a) => Structural::LUnit(f(a)),
        Structural::LUnitInv(a) => Structural::LUnitInv(f(a)),
        Structural::RUnit(a) => Structural::RUnit(f(a)),
        Structural::RUnitInv(a) => Structural::RUnitInv(f(a)),
        Structural::Sym(a, b) => Structural::Sym(f(a), f(b)),
    }
}

impl<L, R> Model for PairModel<L, R>
where
    L: Model,
    R: Model,
{
    type Obj = (L::Obj, R::Obj);
    type Mor = (L::Mor, R::Mor);

    fn name(&self) -> String {
        format!("{}×{}", self.left.name(), self.right.name())
    }

    fn capabilities(&self) -> Capabilities {
        let (l, r) = (self.left.capabilities(), self.right.capabilities());
        Capabilities {
            symmetric: l.symmetric && r.symmetric,
            traced: l.traced && r.traced,
            compact: false,
            cartesian: false,
            cocartesian: false,
        }
    }

    fn dom(&self, f: &Self::Mor) -> Self::Obj {
        (self.left.dom(&f.0), self.right.dom(&f.1))
    }

    fn cod(&self, f: &Self::Mor) -> Self::Obj {
        (self.left.cod(&f.0), self.right.cod(&f.1))
    }

    fn check_object(&self, a: &Self::Obj) -> Result<()> {
        self.left.check_object(&a.0)?;
        self.right.check_object(&a.1)
    }

    fn identity(&self, a: &Self::Obj) -> Self::Mor {
        (self.left.identity(&a.0), self.right.identity(&a.1))
    }

    fn compose_unchecked(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor {
        (self.left.compose_unchecked(&g.0, &f.0), self.right.compose_unchecked(&g.1, &f.1))
    }

    fn unit_object(&self) -> Self::Obj {
        (self.left.unit_object(), self.right.unit_object())
    }

    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj {
        (self.left.tensor_obj(&a.0, &b.0), self.right.tensor_obj(&a.1, &b.1))
    }

    fn tensor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        (self.left.tensor(&f.0, &g.0), self.right.tensor(&f.1, &g.1))
    }

    fn structural(&self, s: &Structural<Self::Obj>) -> Self::Mor {
        (
            self.left.structural(&map_structural(s, |p| p.0.clone())),
            self.right.structural(&map_structural(s, |p| p.1.clone())),
        )
    }

    fn trace(&self, x: &Self::Obj, a: &Self::Obj, b: &Self::Obj, f: &Self::Mor) -> Result<Self::Mor> {
        Ok((
            self.left.trace(&x.0, &a.0, &b.0, &f.0)?,
            self.right.trace(&x.1, &a.1, &b.1, &f.1)?,
        ))
    }

    fn try_invert(&self, f: &Self::Mor) -> Option<Self::Mor> {
        Some((self.left.try_invert(&f.0)?, self.right.try_invert(&f.1)?))
    }

    fn agrees(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        self.left.agrees(&f.0, &g.0) && self.right.agrees(&f.1, &g.1)
    }

    fn object_size(&self, a: &Self::Obj) -> usize {
        self.left.object_size(&a.0).max(self.right.object_size(&a.1))
    }

    fn sample_object(&self, rng: &mut CaseRng, max_size: usize) -> Self::Obj {
        (self.left.sample_object(rng, max_size), self.right.sample_object(rng, max_size))
    }

    fn sample_morphism(&self, rng: &mut CaseRng, dom: &Self::Obj, cod: &Self::Obj) -> Option<Self::Mor> {
        Some((
            self.left.sample_morphism(rng, &dom.0, &cod.0)?,
            self.right.sample_morphism(rng, &dom.1, &cod.1)?,
        ))
    }

    fn enumerate_objects(&self, max_size: usize) -> Option<Vec<Self::Obj>> {
        let l = self.left.enumerate_objects(max_size)?;
        let r = self.right.enumerate_objects(max_size)?;
        Some(l.iter().flat_map(|a| r.iter().map(move |b| (a.clone(), b.clone()))).collect())
    }

    fn enumerate_homs(&self, dom: &Self::Obj, cod: &Self::Obj) -> Option<Vec<Self::Mor>> {
        let l = self.left.enumerate_homs(&dom.0, &cod.0)?;
        let r = self.right.enumerate_homs(&dom.1, &cod.1)?;
        Some(l.iter().flat_map(|f| r.iter().map(move |g| (f.clone(), g.clone()))).collect())
    }

    fn within_exhaustive_bound(&self, a: &Self::Obj, max_size: usize) -> bool {
        self.left.within_exhaustive_bound(&a.0, max_size) && self.right.within_exhaustive_bound(&a.1, max_size)
    }

    fn has_enumerator(&self) -> bool {
        self.left.has_enumerator() && self.right.has_enumerator()
    }
}

/// `Δ(f) = (f, f)`.
pub fn diagonal_pair<T: Clone>(f: &T) -> (T, T) {
    (f.clone(), f.clone())
}
