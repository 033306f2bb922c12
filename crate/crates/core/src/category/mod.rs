//! The executable-category interface every model implements, plus the
//! term evaluator and the wiring helper the law checkers are written against.

mod pair;
mod rewire;
pub mod table;
mod term;

use std::fmt::Debug;
use std::hash::Hash;

use rand::SeedableRng;
use serde::Serialize;

use crate::error::{Error, Result};

pub use pair::{diagonal_pair, PairModel};
pub use rewire::{rewire, Wire};
pub use term::{eval_term, Term};

/// Seeded generator used by every sampler.
pub type CaseRng = rand_chacha::ChaCha8Rng;

/// Independent, reproducible stream for case `index` of a run seeded by `seed`.
pub fn case_rng(seed: u64, index: u64) -> CaseRng {
    let mut rng = CaseRng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Capabilities {
    pub symmetric: bool,
    pub traced: bool,
    pub compact: bool,
    pub cartesian: bool,
    pub cocartesian: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StructuralKind {
    Assoc,
    AssocInv,
    LUnit,
    LUnitInv,
    RUnit,
    RUnitInv,
    Sym,
}

impl StructuralKind {
    pub fn arity(self) -> usize {
        match self {
            StructuralKind::Assoc | StructuralKind::AssocInv => 3,
            StructuralKind::Sym => 2,
            _ => 1,
        }
    }
}

/// A coherence isomorphism with its object indices.
///
/// Conventions: `Assoc(a, b, c): a⊗(b⊗c) → (a⊗b)⊗c`, `LUnit(a): I⊗a → a`,
/// `RUnit(a): a⊗I → a`, `Sym(a, b): a⊗b → b⊗a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Structural<O> {
    Assoc(O, O, O),
    AssocInv(O, O, O),
    LUnit(O),
    LUnitInv(O),
    RUnit(O),
    RUnitInv(O),
    Sym(O, O),
}

impl<O: Clone + Debug> Structural<O> {
    pub fn from_kind(kind: StructuralKind, objects: &[O]) -> Result<Self> {
        if objects.len() != kind.arity() {
            return Err(Error::Usage(format!(
                "{kind:?} takes {} objects, got {}",
                kind.arity(),
                objects.len()
            )));
        }
        let o = |i: usize| objects[i].clone();
        Ok(match kind {
            StructuralKind::Assoc => Structural::Assoc(o(0), o(1), o(2)),
            StructuralKind::AssocInv => Structural::AssocInv(o(0), o(1), o(2)),
            StructuralKind::LUnit => Structural::LUnit(o(0)),
            StructuralKind::LUnitInv => Structural::LUnitInv(o(0)),
            StructuralKind::RUnit => Structural::RUnit(o(0)),
            StructuralKind::RUnitInv => Structural::RUnitInv(o(0)),
            StructuralKind::Sym => Structural::Sym(o(0), o(1)),
        })
    }

    pub fn kind(&self) -> StructuralKind {
        match self {
            Structural::Assoc(..) => StructuralKind::Assoc,
            Structural::AssocInv(..) => StructuralKind::AssocInv,
            Structural::LUnit(_) => StructuralKind::LUnit,
            Structural::LUnitInv(_) => StructuralKind::LUnitInv,
            Structural::RUnit(_) => StructuralKind::RUnit,
            Structural::RUnitInv(_) => StructuralKind::RUnitInv,
            Structural::Sym(..) => StructuralKind::Sym,
        }
    }

    /// The partner isomorphism.
    pub fn inverse(&self) -> Self {
        match self.clone() {
            Structural::Assoc(a, b, c) => Structural::AssocInv(a, b, c),
            Structural::AssocInv(a, b, c) => Structural::Assoc(a, b, c),
            Structural::LUnit(a) => Structural::LUnitInv(a),
            Structural::LUnitInv(a) => Structural::LUnit(a),
            Structural::RUnit(a) => Structural::RUnitInv(a),
            Structural::RUnitInv(a) => Structural::RUnit(a),
            Structural::Sym(a, b) => Structural::Sym(b, a),
        }
    }
}

/// An executable symmetric monoidal category.
///
/// Morphisms are immutable values. Hom-set enumeration and sampling are
/// optional; `search_homs` may hand partially determined morphisms to its
/// predicate (see [`table`]), so predicates must only use operations that
/// propagate unknown entries.
pub trait Model: Send + Sync {
    type Obj: Clone + Eq + Hash + Debug + Serialize + Send + Sync;
    type Mor: Clone + Eq + Debug + Serialize + Send + Sync;

    fn name(&self) -> String;
    fn capabilities(&self) -> Capabilities;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;

    /// Rejects objects this model cannot host.
    fn check_object(&self, _a: &Self::Obj) -> Result<()> {
        Ok(())
    }

    fn identity(&self, a: &Self::Obj) -> Self::Mor;
    /// `g∘f`, assuming `cod(f) = dom(g)`.
    fn compose_unchecked(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;
    fn unit_object(&self) -> Self::Obj;
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn tensor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn structural(&self, s: &Structural<Self::Obj>) -> Self::Mor;

    /// `Tr^X_{A,B}(f)` for `f: A⊗X → B⊗X`.
    fn trace(
        &self,
        _x: &Self::Obj,
        _a: &Self::Obj,
        _b: &Self::Obj,
        _f: &Self::Mor,
    ) -> Result<Self::Mor> {
        Err(Error::capability(self.name(), "traced"))
    }

    /// Two-sided inverse, when one exists.
    fn try_invert(&self, _f: &Self::Mor) -> Option<Self::Mor> {
        None
    }

    /// Equality that ignores entries still unknown during a search.
    fn agrees(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        f == g
    }

    fn object_size(&self, a: &Self::Obj) -> usize;
    fn sample_object(&self, rng: &mut CaseRng, max_size: usize) -> Self::Obj;
    /// `None` when the hom-set is empty.
    fn sample_morphism(
        &self,
        rng: &mut CaseRng,
        dom: &Self::Obj,
        cod: &Self::Obj,
    ) -> Option<Self::Mor>;

    /// Generating objects up to `max_size`, in increasing size.
    fn enumerate_objects(&self, _max_size: usize) -> Option<Vec<Self::Obj>> {
        None
    }

    fn enumerate_homs(&self, _dom: &Self::Obj, _cod: &Self::Obj) -> Option<Vec<Self::Mor>> {
        None
    }

    fn search_homs(
        &self,
        dom: &Self::Obj,
        cod: &Self::Obj,
        keep: &(dyn Fn(&Self::Mor) -> bool + Sync),
    ) -> Option<Vec<Self::Mor>> {
        self.enumerate_homs(dom, cod)
            .map(|all| all.into_iter().filter(|f| keep(f)).collect())
    }

    /// Whether an exhaustive run may quantify over morphisms living on `a`.
    fn within_exhaustive_bound(&self, a: &Self::Obj, max_size: usize) -> bool {
        self.object_size(a) <= max_size
    }

    fn has_enumerator(&self) -> bool {
        false
    }

    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        let (c, d) = (self.cod(f), self.dom(g));
        if c != d {
            return Err(Error::type_mismatch(
                format!(
                    "compose: f: {:?} -> {:?}, g: {:?} -> {:?}",
                    self.dom(f),
                    c,
                    d,
                    self.cod(g)
                ),
                &d,
                &c,
            ));
        }
        Ok(self.compose_unchecked(g, f))
    }

    /// Composite of `fs` in diagrammatic order: `chain([f, g, h]) = h∘g∘f`.
    fn chain(&self, fs: &[Self::Mor]) -> Result<Self::Mor> {
        let (first, rest) = fs
            .split_first()
            .ok_or_else(|| Error::Usage("empty composite".into()))?;
        rest.iter()
            .try_fold(first.clone(), |acc, g| self.compose(g, &acc))
    }

    fn structural_by_kind(&self, kind: StructuralKind, objects: &[Self::Obj]) -> Result<Self::Mor> {
        Ok(self.structural(&Structural::from_kind(kind, objects)?))
    }

    fn assoc(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor {
        self.structural(&Structural::Assoc(a.clone(), b.clone(), c.clone()))
    }
    fn assoc_inv(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor {
        self.structural(&Structural::AssocInv(a.clone(), b.clone(), c.clone()))
    }
    fn lunit(&self, a: &Self::Obj) -> Self::Mor {
        self.structural(&Structural::LUnit(a.clone()))
    }
    fn lunit_inv(&self, a: &Self::Obj) -> Self::Mor {
        self.structural(&Structural::LUnitInv(a.clone()))
    }
    fn runit(&self, a: &Self::Obj) -> Self::Mor {
        self.structural(&Structural::RUnit(a.clone()))
    }
    fn runit_inv(&self, a: &Self::Obj) -> Self::Mor {
        self.structural(&Structural::RUnitInv(a.clone()))
    }
    fn sym(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor {
        self.structural(&Structural::Sym(a.clone(), b.clone()))
    }

    fn require(&self, capability: &str, present: bool) -> Result<()> {
        if present {
            Ok(())
        } else {
            Err(Error::capability(self.name(), capability))
        }
    }
}

/// Models with chosen duals. `cup(a): a*⊗a → I`, `cap(a): I → a⊗a*`.
pub trait Compact: Model {
    fn dual(&self, a: &Self::Obj) -> Self::Obj;
    fn cup(&self, a: &Self::Obj) -> Self::Mor;
    fn cap(&self, a: &Self::Obj) -> Self::Mor;
}

/// Models whose tensor is the categorical product and whose unit is terminal.
pub trait Cartesian: Model {
    fn terminal_map(&self, a: &Self::Obj) -> Self::Mor;
    fn proj0(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    fn proj1(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    fn pair(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    fn diagonal(&self, a: &Self::Obj) -> Self::Mor {
        let id = self.identity(a);
        self.pair(&id, &id).expect("identities share a domain")
    }
}

/// A parametrized fixed-point operator `Fix^X_A: Hom(A×X, X) → Hom(A, X)`.
pub trait Conway: Cartesian {
    fn fix(&self, x: &Self::Obj, a: &Self::Obj, f: &Self::Mor) -> Result<Self::Mor>;
}

/// Models whose tensor is the coproduct and whose unit is initial.
pub trait CoCartesian: Model {
    fn initial_map(&self, a: &Self::Obj) -> Self::Mor;
    fn inj0(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    fn inj1(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    fn copair(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
}

/// Rejects `f` unless `f: A⊗X → B⊗X`.
pub fn check_trace_shape<M: Model + ?Sized>(
    model: &M,
    x: &M::Obj,
    a: &M::Obj,
    b: &M::Obj,
    f: &M::Mor,
) -> Result<()> {
    let want_dom = model.tensor_obj(a, x);
    let want_cod = model.tensor_obj(b, x);
    let (d, c) = (model.dom(f), model.cod(f));
    if d != want_dom || c != want_cod {
        return Err(Error::type_mismatch(
            "trace",
            format!("{want_dom:?} -> {want_cod:?}"),
            format!("{d:?} -> {c:?}"),
        ));
    }
    Ok(())
}

/// The canonical trace of a compact model: the cap/cup composite
/// `ρ_B∘(1⊗∪_X)∘(1⊗σ_{X,X*})∘α⁻¹∘(f⊗1)∘α∘(1⊗∩_X)∘ρ⁻¹_A`.
pub fn compact_trace<M: Compact + ?Sized>(
    model: &M,
    x: &M::Obj,
    a: &M::Obj,
    b: &M::Obj,
    f: &M::Mor,
) -> Result<M::Mor> {
    check_trace_shape(model, x, a, b, f)?;
    let xs = model.dual(x);
    model.chain(&[
        model.runit_inv(a),
        model.tensor(&model.identity(a), &model.cap(x)),
        model.assoc(a, x, &xs),
        model.tensor(f, &model.identity(&xs)),
        model.assoc_inv(b, x, &xs),
        model.tensor(&model.identity(b), &model.sym(x, &xs)),
        model.tensor(&model.identity(b), &model.cup(x)),
        model.runit(b),
    ])
}

/// The two snake composites `X → X` and `X* → X*`.
pub fn snake_composites<M: Compact + ?Sized>(
    model: &M,
    x: &M::Obj,
) -> Result<(M::Mor, M::Mor)> {
    let xs = model.dual(x);
    let ix = model.identity(x);
    let ixs = model.identity(&xs);
    let left = model.chain(&[
        model.lunit_inv(x),
        model.tensor(&model.cap(x), &ix),
        model.assoc_inv(x, &xs, x),
        model.tensor(&ix, &model.cup(x)),
        model.runit(x),
    ])?;
    let right = model.chain(&[
        model.runit_inv(&xs),
        model.tensor(&ixs, &model.cap(x)),
        model.assoc(&xs, x, &xs),
        model.tensor(&model.cup(x), &ixs),
        model.lunit(&xs),
    ])?;
    Ok((left, right))
}

/// Trace induced by a Conway operator: `π₀∘f∘⟨1_A, Fix^X_A(π₁∘f)⟩`.
pub fn trace_from_fix<M: Conway + ?Sized>(
    model: &M,
    x: &M::Obj,
    a: &M::Obj,
    b: &M::Obj,
    f: &M::Mor,
) -> Result<M::Mor> {
    check_trace_shape(model, x, a, b, f)?;
    let inner = model.compose(&model.proj1(b, x), f)?;
    let fixed = model.fix(x, a, &inner)?;
    let arg = model.pair(&model.identity(a), &fixed)?;
    model.chain(&[arg, f.clone(), model.proj0(b, x)])
}

/// Conway operator induced by a trace: `Fix^X_A(f) = Tr^X_{A,X}(⟨f, f⟩)`.
pub fn fix_from_trace<M: Cartesian + ?Sized>(
    model: &M,
    x: &M::Obj,
    a: &M::Obj,
    f: &M::Mor,
) -> Result<M::Mor> {
    let doubled = model.pair(f, f)?;
    model.trace(x, a, x, &doubled)
}
