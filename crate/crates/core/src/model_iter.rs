//! Finite sets and partial functions. `⊕` is disjoint union, the unit is
//! `∅`, and the trace iterates the feedback loop, diverging (undefined) on
//! a cycle.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::category::table::{compose_tables, is_value, search_tables, tables_agree, UNDEF, UNKNOWN};
use crate::category::{check_trace_shape, Capabilities, CaseRng, CoCartesian, Model, Structural};
use crate::error::{Error, Result};
use crate::monads::{BimonadBundle, HopfBundle, MonadBundle};

/// A named finite set of distinct labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FinLabelSet {
    pub name: String,
    pub labels: Vec<String>,
}

impl FinLabelSet {
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Result<Self> {
        let name = name.into();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::validation("label set", format!("{name}: label {l:?} repeated")));
            }
        }
        Ok(FinLabelSet { name, labels })
    }

    /// `{0, …, n−1}`.
    pub fn range(n: usize) -> Self {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        FinLabelSet {
            name: format!("{{{}}}", labels.join(",")),
            labels,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub enum SetShape {
    Empty,
    Base(Arc<FinLabelSet>),
    Sum(SetObj, SetObj),
}

struct Node {
    shape: SetShape,
    size: usize,
    digest: u64,
}

/// An object of the partial-function model; `A⊕B` lists `A` first.
#[derive(Clone)]
pub struct SetObj(Arc<Node>);

impl SetObj {
    fn build(shape: SetShape, size: usize) -> Self {
        let mut h = std::collections::hash_map::DefaultHasher::new();
        match &shape {
            SetShape::Empty => 0u8.hash(&mut h),
            SetShape::Base(s) => (1u8, s).hash(&mut h),
            SetShape::Sum(a, b) => (2u8, a.0.digest, b.0.digest).hash(&mut h),
        }
        SetObj(Arc::new(Node {
            digest: h.finish(),
            shape,
            size,
        }))
    }

    pub fn empty() -> Self {
        thread_local!(static EMPTY: SetObj = SetObj::build(SetShape::Empty, 0));
        EMPTY.with(|e| e.clone())
    }

    pub fn base(s: FinLabelSet) -> Self {
        let n = s.labels.len();
        SetObj::build(SetShape::Base(Arc::new(s)), n)
    }

    pub fn range(n: usize) -> Self {
        SetObj::base(FinLabelSet::range(n))
    }

    /// Sums are memoized per thread.
    pub fn sum(a: &SetObj, b: &SetObj) -> Self {
        const CAP: usize = 1 << 12;
        thread_local!(static SUMS: RefCell<HashMap<(SetObj, SetObj), SetObj>> = RefCell::new(HashMap::new()));
        let key = (a.clone(), b.clone());
        if let Some(s) = SUMS.with(|c| c.borrow().get(&key).cloned()) {
            return s;
        }
        let s = SetObj::build(SetShape::Sum(a.clone(), b.clone()), a.size() + b.size());
        SUMS.with(|c| {
            let mut c = c.borrow_mut();
            if c.len() >= CAP {
                c.clear();
            }
            c.insert(key, s.clone());
        });
        s
    }

    pub fn shape(&self) -> &SetShape {
        &self.0.shape
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    /// `l.x` and `r.y` for the two summands.
    pub fn label(&self, i: usize) -> String {
        match &self.0.shape {
            SetShape::Empty => unreachable!("the empty set has no elements"),
            SetShape::Base(s) => s.labels[i].clone(),
            SetShape::Sum(a, b) if i < a.size() => format!("l.{}", a.label(i)),
            SetShape::Sum(a, b) => format!("r.{}", b.label(i - a.size())),
        }
    }

    pub fn element(&self, label: &str) -> Option<usize> {
        match &self.0.shape {
            SetShape::Empty => None,
            SetShape::Base(s) => s.labels.iter().position(|l| l == label),
            SetShape::Sum(a, b) => {
                if let Some(x) = label.strip_prefix("l.") {
                    a.element(x)
                } else {
                    b.element(label.strip_prefix("r.")?).map(|y| a.size() + y)
                }
            }
        }
    }
}

impl PartialEq for SetObj {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.digest == other.0.digest && self.0.shape == other.0.shape)
    }
}

impl Eq for SetObj {}

impl Hash for SetObj {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.digest.hash(state)
    }
}

impl fmt::Debug for SetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.shape {
            SetShape::Empty => write!(f, "∅"),
            SetShape::Base(s) => write!(f, "{}", s.name),
            SetShape::Sum(a, b) => write!(f, "({a:?}⊕{b:?})"),
        }
    }
}

impl Serialize for SetObj {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{self:?}"))
    }
}

/// A partial function; [`UNDEF`] marks inputs where it is undefined.
#[derive(Clone, PartialEq, Eq)]
pub struct PartialFn {
    pub dom: SetObj,
    pub cod: SetObj,
    pub table: Vec<usize>,
}

impl PartialFn {
    pub fn new(dom: SetObj, cod: SetObj, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.size() {
            return Err(Error::validation(
                "partial function",
                format!("{} entries for a domain of {}", table.len(), dom.size()),
            ));
        }
        if let Some(&v) = table.iter().find(|&&v| v != UNDEF && v >= cod.size()) {
            return Err(Error::validation("partial function", format!("image {v} outside {cod:?}")));
        }
        Ok(PartialFn { dom, cod, table })
    }

    pub fn undefined(dom: &SetObj, cod: &SetObj) -> Self {
        PartialFn {
            dom: dom.clone(),
            cod: cod.clone(),
            table: vec![UNDEF; dom.size()],
        }
    }

    /// Builds from `(input, output)` label pairs; unlisted inputs are undefined.
    pub fn from_pairs(dom: &SetObj, cod: &SetObj, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut table = vec![UNDEF; dom.size()];
        for (x, y) in pairs {
            let i = dom.element(x).ok_or_else(|| Error::validation("partial function", format!("no {x} in {dom:?}")))?;
            let j = cod.element(y).ok_or_else(|| Error::validation("partial function", format!("no {y} in {cod:?}")))?;
            table[i] = j;
        }
        Ok(PartialFn {
            dom: dom.clone(),
            cod: cod.clone(),
            table,
        })
    }

    /// Image label of `x`; `None` when undefined there.
    pub fn at(&self, x: &str) -> Option<String> {
        let v = self.table[self.dom.element(x)?];
        is_value(v).then(|| self.cod.label(v))
    }

    fn entries(&self) -> Vec<(String, Option<String>)> {
        self.table
            .iter()
            .enumerate()
            .map(|(x, &v)| {
                let out = match v {
                    UNDEF => None,
                    UNKNOWN => Some("?".to_string()),
                    v => Some(self.cod.label(v)),
                };
                (self.dom.label(x), out)
            })
            .collect()
    }
}

impl fmt::Debug for PartialFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}⇀{:?}{{", self.dom, self.cod)?;
        for (i, (x, y)) in self.entries().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}↦{}", y.as_deref().unwrap_or("undef"))?;
        }
        write!(f, "}}")
    }
}

impl Serialize for PartialFn {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PartialFn", 3)?;
        st.serialize_field("dom", &self.dom)?;
        st.serialize_field("cod", &self.cod)?;
        st.serialize_field("table", &self.entries())?;
        st.end()
    }
}

#[derive(Clone, Debug)]
pub struct PfnModel {
    generators: Vec<SetObj>,
}

/// Generated by `{0}`, `{0,1}`, …, `{0,…,4}`.
pub fn pfn_model() -> PfnModel {
    PfnModel {
        generators: (1..=5).map(SetObj::range).collect(),
    }
}

impl PfnModel {
    pub fn with_set(mut self, s: FinLabelSet) -> Self {
        self.generators.push(SetObj::base(s));
        self.generators.sort_by_key(|g| g.size());
        self
    }

    pub fn generators(&self) -> &[SetObj] {
        &self.generators
    }
}

fn shift(v: usize, by: usize) -> usize {
    if is_value(v) {
        v + by
    } else {
        v
    }
}

impl Model for PfnModel {
    type Obj = SetObj;
    type Mor = PartialFn;

    fn name(&self) -> String {
        "Pfn".into()
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities {
            symmetric: true,
            traced: true,
            compact: false,
            cartesian: false,
            cocartesian: true,
        }
    }

    fn dom(&self, f: &PartialFn) -> SetObj {
        f.dom.clone()
    }

    fn cod(&self, f: &PartialFn) -> SetObj {
        f.cod.clone()
    }

    fn identity(&self, a: &SetObj) -> PartialFn {
        PartialFn {
            dom: a.clone(),
            cod: a.clone(),
            table: (0..a.size()).collect(),
        }
    }

    fn compose_unchecked(&self, g: &PartialFn, f: &PartialFn) -> PartialFn {
        PartialFn {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            table: compose_tables(&g.table, &f.table),
        }
    }

    fn unit_object(&self) -> SetObj {
        SetObj::empty()
    }

    fn tensor_obj(&self, a: &SetObj, b: &SetObj) -> SetObj {
        SetObj::sum(a, b)
    }

    fn tensor(&self, f: &PartialFn, g: &PartialFn) -> PartialFn {
        let off = f.cod.size();
        PartialFn {
            dom: SetObj::sum(&f.dom, &g.dom),
            cod: SetObj::sum(&f.cod, &g.cod),
            table: f.table.iter().copied().chain(g.table.iter().map(|&v| shift(v, off))).collect(),
        }
    }

    fn structural(&self, s: &Structural<SetObj>) -> PartialFn {
        let sum = SetObj::sum;
        // concatenated layout makes every structural map but σ the identity table
        let relabel = |dom: SetObj, cod: SetObj| PartialFn {
            table: (0..dom.size()).collect(),
            dom,
            cod,
        };
        let e = SetObj::empty();
        match s {
            Structural::Assoc(a, b, c) => relabel(sum(a, &sum(b, c)), sum(&sum(a, b), c)),
            Structural::AssocInv(a, b, c) => relabel(sum(&sum(a, b), c), sum(a, &sum(b, c))),
            Structural::LUnit(a) => relabel(sum(&e, a), a.clone()),
            Structural::LUnitInv(a) => relabel(a.clone(), sum(&e, a)),
            Structural::RUnit(a) => relabel(sum(a, &e), a.clone()),
            Structural::RUnitInv(a) => relabel(a.clone(), sum(a, &e)),
            Structural::Sym(a, b) => {
                let (na, nb) = (a.size(), b.size());
                PartialFn {
                    dom: sum(a, b),
                    cod: sum(b, a),
                    table: (0..na + nb).map(|i| if i < na { nb + i } else { i - na }).collect(),
                }
            }
        }
    }

    /// Follows `f` from `ι₀ a` until it leaves through `B`; a revisited
    /// feedback element means divergence.
    fn trace(&self, x: &SetObj, a: &SetObj, b: &SetObj, f: &PartialFn) -> Result<PartialFn> {
        check_trace_shape(self, x, a, b, f)?;
        let (na, nb) = (a.size(), b.size());
        let mut table = Vec::with_capacity(na);
        let mut seen = vec![false; x.size()];
        for i in 0..na {
            seen.iter_mut().for_each(|s| *s = false);
            let mut u = f.table[i];
            let out = loop {
                if !is_value(u) {
                    break u;
                }
                if u < nb {
                    break u;
                }
                let xi = u - nb;
                if seen[xi] {
                    break UNDEF;
                }
                seen[xi] = true;
                u = f.table[na + xi];
            };
            table.push(out);
        }
        Ok(PartialFn {
            dom: a.clone(),
            cod: b.clone(),
            table,
        })
    }

    fn try_invert(&self, f: &PartialFn) -> Option<PartialFn> {
        let n = f.cod.size();
        if f.dom.size() != n {
            return None;
        }
        let mut inv = vec![UNDEF; n];
        for (x, &y) in f.table.iter().enumerate() {
            if !is_value(y) || inv[y] != UNDEF {
                return None;
            }
            inv[y] = x;
        }
        Some(PartialFn {
            dom: f.cod.clone(),
            cod: f.dom.clone(),
            table: inv,
        })
    }

    fn agrees(&self, f: &PartialFn, g: &PartialFn) -> bool {
        tables_agree(&f.table, &g.table)
    }

    fn object_size(&self, a: &SetObj) -> usize {
        a.size()
    }

    fn sample_object(&self, rng: &mut CaseRng, max_size: usize) -> SetObj {
        let small: Vec<&SetObj> = self.generators.iter().filter(|g| g.size() <= max_size).collect();
        match rng.gen_range(0..8) {
            0 => SetObj::empty(),
            1 if max_size >= 2 => {
                let a = self.sample_object(rng, max_size - 1);
                let b = self.sample_object(rng, max_size - a.size());
                SetObj::sum(&a, &b)
            }
            _ => small.choose(rng).map(|g| (*g).clone()).unwrap_or_else(SetObj::empty),
        }
    }

    fn sample_morphism(&self, rng: &mut CaseRng, dom: &SetObj, cod: &SetObj) -> Option<PartialFn> {
        let n = cod.size();
        let table = (0..dom.size())
            .map(|_| {
                let v = rng.gen_range(0..=n);
                if v == n {
                    UNDEF
                } else {
                    v
                }
            })
            .collect();
        Some(PartialFn {
            dom: dom.clone(),
            cod: cod.clone(),
            table,
        })
    }

    fn enumerate_objects(&self, max_size: usize) -> Option<Vec<SetObj>> {
        let mut out = vec![SetObj::empty()];
        out.extend(self.generators.iter().filter(|g| g.size() <= max_size).cloned());
        Some(out)
    }

    fn enumerate_homs(&self, dom: &SetObj, cod: &SetObj) -> Option<Vec<PartialFn>> {
        self.search_homs(dom, cod, &|_| true)
    }

    fn search_homs(
        &self,
        dom: &SetObj,
        cod: &SetObj,
        keep: &(dyn Fn(&PartialFn) -> bool + Sync),
    ) -> Option<Vec<PartialFn>> {
        let wrap = |t: &[usize]| PartialFn {
            dom: dom.clone(),
            cod: cod.clone(),
            table: t.to_vec(),
        };
        let values: Vec<usize> = (0..cod.size()).chain([UNDEF]).collect();
        let order: Vec<usize> = (0..dom.size()).collect();
        let found = search_tables(dom.size(), &order, &|_, _| values.clone(), &|t| keep(&wrap(t)));
        Some(found.iter().map(|t| wrap(t)).collect())
    }

    fn has_enumerator(&self) -> bool {
        true
    }
}

impl CoCartesian for PfnModel {
    fn initial_map(&self, a: &SetObj) -> PartialFn {
        PartialFn {
            dom: SetObj::empty(),
            cod: a.clone(),
            table: vec![],
        }
    }

    fn inj0(&self, a: &SetObj, b: &SetObj) -> PartialFn {
        PartialFn {
            dom: a.clone(),
            cod: SetObj::sum(a, b),
            table: (0..a.size()).collect(),
        }
    }

    fn inj1(&self, a: &SetObj, b: &SetObj) -> PartialFn {
        PartialFn {
            dom: b.clone(),
            cod: SetObj::sum(a, b),
            table: (a.size()..a.size() + b.size()).collect(),
        }
    }

    fn copair(&self, f: &PartialFn, g: &PartialFn) -> Result<PartialFn> {
        if f.cod != g.cod {
            return Err(Error::type_mismatch("copair", format!("{:?}", f.cod), format!("{:?}", g.cod)));
        }
        Ok(PartialFn {
            dom: SetObj::sum(&f.dom, &g.dom),
            cod: f.cod.clone(),
            table: f.table.iter().chain(&g.table).copied().collect(),
        })
    }
}

/// `T(A) = A⊕E`: `μ` merges the two copies of `E`, `η = ι₀`, `m` sends
/// errors to the left factor, `m_I: ∅⊕E ⇀ ∅` is nowhere defined.
pub fn exception_bimonad(e: &SetObj) -> BimonadBundle<PfnModel> {
    let name = if e.size() == 0 { "exception(∅)".to_string() } else { format!("exception({e:?})") };
    let (e1, e2, e3, e4) = (e.clone(), e.clone(), e.clone(), e.clone());
    let monad = MonadBundle {
        name,
        on_obj: Arc::new(move |_, a| SetObj::sum(a, &e1)),
        on_mor: Arc::new(move |m: &PfnModel, f| Ok(m.tensor(f, &m.identity(&e2)))),
        mu: Arc::new(move |_, a| {
            let ta = SetObj::sum(a, &e3);
            let n = ta.size();
            let table = (0..n + e3.size()).map(|i| if i < n { i } else { i - e3.size() }).collect();
            PartialFn::new(SetObj::sum(&ta, &e3), ta, table)
        }),
        eta: Arc::new(move |m: &PfnModel, a| Ok(m.inj0(a, &e4))),
        algebras: None,
    };
    let (e6, e7) = (e.clone(), e.clone());
    BimonadBundle {
        monad,
        m: Arc::new(move |_, a, b| {
            let (na, nb, ne) = (a.size(), b.size(), e6.size());
            let dom = SetObj::sum(&SetObj::sum(a, b), &e6);
            let cod = SetObj::sum(&SetObj::sum(a, &e6), &SetObj::sum(b, &e6));
            let table = (0..na + nb + ne)
                .map(|i| match i {
                    i if i < na => i,
                    i if i < na + nb => ne + i,
                    i => i - nb,
                })
                .collect();
            PartialFn::new(dom, cod, table)
        }),
        m_unit: Arc::new(move |_| Ok(PartialFn::undefined(&SetObj::sum(&SetObj::empty(), &e7), &SetObj::empty()))),
    }
}

/// [`exception_bimonad`] with the fusion operator inverted where possible.
pub fn exception_hopf(e: &SetObj) -> HopfBundle<PfnModel> {
    HopfBundle::from_fusion_search(exception_bimonad(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Model;

    fn one() -> SetObj {
        SetObj::range(1)
    }

    #[test]
    fn yanking_on_a_point() {
        let m = pfn_model();
        let t = m.trace(&one(), &one(), &one(), &m.sym(&one(), &one())).unwrap();
        assert_eq!(t.table, vec![0]);
    }

    #[test]
    fn self_loop_diverges() {
        let m = pfn_model();
        let (a, x) = (one(), one());
        let ax = m.tensor_obj(&a, &x);
        let f = PartialFn::from_pairs(&ax, &ax, &[("l.0", "r.0"), ("r.0", "r.0")]).unwrap();
        assert_eq!(m.trace(&x, &a, &a, &f).unwrap().table, vec![UNDEF]);
    }

    #[test]
    fn undefined_stays_undefined() {
        let m = pfn_model();
        let (a, x) = (SetObj::range(2), SetObj::range(3));
        let f = PartialFn::undefined(&m.tensor_obj(&a, &x), &m.tensor_obj(&a, &x));
        assert_eq!(m.trace(&x, &a, &a, &f).unwrap(), PartialFn::undefined(&a, &a));
    }

    #[test]
    fn loop_exits_after_two_rounds() {
        let m = pfn_model();
        let (a, x) = (one(), SetObj::range(2));
        let ax = m.tensor_obj(&a, &x);
        let f = PartialFn::from_pairs(&ax, &ax, &[("l.0", "r.1"), ("r.1", "r.0"), ("r.0", "l.0")]).unwrap();
        assert_eq!(m.trace(&x, &a, &a, &f).unwrap().table, vec![0]);
    }

    #[test]
    fn labels_round_trip() {
        let s = SetObj::sum(&one(), &SetObj::sum(&SetObj::empty(), &SetObj::range(2)));
        for i in 0..s.size() {
            assert_eq!(s.element(&s.label(i)), Some(i));
        }
        assert_eq!(s.label(2), "r.r.1");
        assert!(FinLabelSet::new("bad", vec!["a".into(), "a".into()]).is_err());
    }

    #[test]
    fn fusion_of_exception_is_invertible() {
        let m = pfn_model();
        let h = exception_hopf(&one());
        let inv = h.hl_inv(&m, &one(), &SetObj::range(2)).unwrap();
        assert!(inv.table.iter().all(|&v| is_value(v)));
    }
}
