//! The integer poset `ℤ≤`: `n → m` iff `n ≤ m`, `⊗ = +`, `n* = −n`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::category::{check_trace_shape, Capabilities, CaseRng, Compact, Model, Structural};
use crate::error::{Error, Result};
use crate::monads::{BimonadBundle, HopfBundle, MonadBundle};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntObj(pub BigInt);

impl IntObj {
    pub fn new(n: i64) -> Self {
        IntObj(BigInt::from(n))
    }
}

impl Serialize for IntObj {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

/// The unique arrow `dom ≤ cod`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IntArrow {
    pub dom: IntObj,
    pub cod: IntObj,
}

impl IntArrow {
    pub fn new(dom: IntObj, cod: IntObj) -> Result<Self> {
        if dom.0 > cod.0 {
            return Err(Error::type_mismatch("arrow in Z≤", "dom ≤ cod", format!("{} > {}", dom.0, cod.0)));
        }
        Ok(IntArrow { dom, cod })
    }

    fn forced(dom: &IntObj, cod: &IntObj) -> Result<Self> {
        IntArrow::new(dom.clone(), cod.clone())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct IntPoset;

pub fn int_poset_model() -> IntPoset {
    IntPoset
}

impl Model for IntPoset {
    type Obj = IntObj;
    type Mor = IntArrow;

    fn name(&self) -> String {
        "Z≤".into()
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities {
            symmetric: true,
            traced: true,
            compact: true,
            cartesian: false,
            cocartesian: false,
        }
    }

    fn dom(&self, f: &IntArrow) -> IntObj {
        f.dom.clone()
    }

    fn cod(&self, f: &IntArrow) -> IntObj {
        f.cod.clone()
    }

    fn identity(&self, a: &IntObj) -> IntArrow {
        IntArrow { dom: a.clone(), cod: a.clone() }
    }

    fn compose_unchecked(&self, g: &IntArrow, f: &IntArrow) -> IntArrow {
        IntArrow { dom: f.dom.clone(), cod: g.cod.clone() }
    }

    fn unit_object(&self) -> IntObj {
        IntObj(BigInt::zero())
    }

    fn tensor_obj(&self, a: &IntObj, b: &IntObj) -> IntObj {
        IntObj(&a.0 + &b.0)
    }

    fn tensor(&self, f: &IntArrow, g: &IntArrow) -> IntArrow {
        IntArrow {
            dom: self.tensor_obj(&f.dom, &g.dom),
            cod: self.tensor_obj(&f.cod, &g.cod),
        }
    }

    fn structural(&self, s: &Structural<IntObj>) -> IntArrow {
        let n = match s {
            Structural::Assoc(a, b, c) | Structural::AssocInv(a, b, c) => IntObj(&a.0 + &b.0 + &c.0),
            Structural::LUnit(a) | Structural::LUnitInv(a) | Structural::RUnit(a) | Structural::RUnitInv(a) => {
                a.clone()
            }
            Structural::Sym(a, b) => self.tensor_obj(a, b),
        };
        self.identity(&n)
    }

    /// `a + x ≤ b + x` gives `a ≤ b`.
    fn trace(&self, x: &IntObj, a: &IntObj, b: &IntObj, f: &IntArrow) -> Result<IntArrow> {
        check_trace_shape(self, x, a, b, f)?;
        IntArrow::forced(a, b)
    }

    fn try_invert(&self, f: &IntArrow) -> Option<IntArrow> {
        (f.dom == f.cod).then(|| f.clone())
    }

    fn object_size(&self, a: &IntObj) -> usize {
        a.0.abs().to_usize().unwrap_or(usize::MAX)
    }

    fn sample_object(&self, rng: &mut CaseRng, max_size: usize) -> IntObj {
        let m = max_size as i64;
        IntObj::new(rng.gen_range(-m..=m))
    }

    fn sample_morphism(&self, _rng: &mut CaseRng, dom: &IntObj, cod: &IntObj) -> Option<IntArrow> {
        IntArrow::forced(dom, cod).ok()
    }

    /// `0, −1, 1, −2, 2, …`
    fn enumerate_objects(&self, max_size: usize) -> Option<Vec<IntObj>> {
        let mut out = vec![IntObj::new(0)];
        for k in 1..=max_size as i64 {
            out.push(IntObj::new(-k));
            out.push(IntObj::new(k));
        }
        Some(out)
    }

    fn enumerate_homs(&self, dom: &IntObj, cod: &IntObj) -> Option<Vec<IntArrow>> {
        Some(IntArrow::forced(dom, cod).into_iter().collect())
    }

    /// Hom-sets are subsingletons, so any endpoints are cheap.
    fn within_exhaustive_bound(&self, _a: &IntObj, _max_size: usize) -> bool {
        true
    }

    fn has_enumerator(&self) -> bool {
        true
    }
}

impl Compact for IntPoset {
    fn dual(&self, a: &IntObj) -> IntObj {
        IntObj(-&a.0)
    }

    fn cup(&self, _a: &IntObj) -> IntArrow {
        self.identity(&self.unit_object())
    }

    fn cap(&self, _a: &IntObj) -> IntArrow {
        self.identity(&self.unit_object())
    }
}

/// `N(n) = max(n, 0)`.
pub fn clamp(a: &IntObj) -> IntObj {
    if a.0.is_negative() {
        IntObj(BigInt::zero())
    } else {
        a.clone()
    }
}

/// `N` with every component the forced arrow.
pub fn n_monad() -> BimonadBundle<IntPoset> {
    let monad = MonadBundle {
        name: "N".into(),
        on_obj: Arc::new(|_, a| clamp(a)),
        on_mor: Arc::new(|_, f: &IntArrow| IntArrow::forced(&clamp(&f.dom), &clamp(&f.cod))),
        mu: Arc::new(|_, a| IntArrow::forced(&clamp(a), &clamp(a))),
        eta: Arc::new(|_, a| IntArrow::forced(a, &clamp(a))),
        algebras: None,
    };
    BimonadBundle {
        monad,
        m: Arc::new(|m, a, b| IntArrow::forced(&clamp(&m.tensor_obj(a, b)), &m.tensor_obj(&clamp(a), &clamp(b)))),
        m_unit: Arc::new(|m| Ok(m.identity(&m.unit_object()))),
    }
}

/// `N` with `h^l` inverted wherever an inverse exists.
pub fn n_hopf_attempt() -> HopfBundle<IntPoset> {
    HopfBundle::from_fusion_search(n_monad())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monads::fusion_left;

    #[test]
    fn n_on_objects() {
        assert_eq!(clamp(&IntObj::new(5)), IntObj::new(5));
        assert_eq!(clamp(&IntObj::new(-3)), IntObj::new(0));
    }

    #[test]
    fn fusion_at_minus_two_one() {
        let m = IntPoset;
        let hl = fusion_left(&m, &n_monad(), &IntObj::new(-2), &IntObj::new(1)).unwrap();
        assert_eq!((hl.dom, hl.cod), (IntObj::new(0), IntObj::new(1)));
    }

    #[test]
    fn trace_cancels_feedback() {
        let m = IntPoset;
        let f = IntArrow::new(IntObj::new(1), IntObj::new(5)).unwrap();
        let t = m.trace(&IntObj::new(3), &IntObj::new(-2), &IntObj::new(2), &f).unwrap();
        assert_eq!(t, IntArrow::new(IntObj::new(-2), IntObj::new(2)).unwrap());
        assert!(IntArrow::new(IntObj::new(1), IntObj::new(0)).is_err());
    }
}
