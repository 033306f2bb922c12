//! Finite posets and monotone maps, Cartesian monoidal, with a Kleene
//! fixed-point operator iterated from the bottom (lfp) or the top (gfp).

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::category::table::{compose_tables, is_value, search_tables, tables_agree, UNKNOWN};
use crate::category::{check_trace_shape, Capabilities, CaseRng, Cartesian, Conway, Model, Structural};
use crate::error::{Error, Result};

/// A finite partial order given by its full relation table.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FinPoset {
    pub name: String,
    pub labels: Vec<String>,
    #[serde(skip)]
    leq: Vec<Vec<bool>>,
    /// Pairs `x < y` with nothing strictly between.
    covers: Vec<(usize, usize)>,
    pub has_bottom: bool,
    pub has_top: bool,
}

impl fmt::Debug for FinPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl FinPoset {
    /// Validates reflexivity, antisymmetry and transitivity.
    pub fn new(name: impl Into<String>, labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = labels.len();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::validation("distinct labels", format!("{l} appears twice")));
            }
        }
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::validation("shape", format!("relation table is not {n}x{n}")));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::validation("reflexivity", format!("{} ≤ {} missing", labels[i], labels[i])));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::validation(
                        "antisymmetry",
                        format!("{} ≤ {} and {} ≤ {}", labels[i], labels[j], labels[j], labels[i]),
                    ));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(Error::validation(
                            "transitivity",
                            format!("{} ≤ {} ≤ {} but not {} ≤ {}", labels[i], labels[j], labels[k], labels[i], labels[k]),
                        ));
                    }
                }
            }
        }
        let least = |flip: bool| (0..n).any(|b| (0..n).all(|x| if flip { leq[x][b] } else { leq[b][x] }));
        let covers = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && leq[x][y] && !(0..n).any(|z| z != x && z != y && leq[x][z] && leq[z][y]))
            .collect();
        Ok(FinPoset {
            name: name.into(),
            has_bottom: least(false),
            has_top: least(true),
            labels,
            leq,
            covers,
        })
    }

    /// Reflexive-transitive closure of `pairs` (`x ≤ y`), then validated.
    pub fn from_relations(name: impl Into<String>, labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::validation("shape", format!("relation ({x}, {y}) outside {n} elements")));
            }
            leq[x][y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        FinPoset::new(name, labels, leq)
    }

    fn builtin(name: &str, labels: &[&str], pairs: &[(usize, usize)]) -> Self {
        FinPoset::from_relations(name, labels.iter().map(|s| s.to_string()).collect(), pairs)
            .expect("builtin posets are partial orders")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `Σ = {⊥ ≤ ⊤}`.
    pub fn sigma() -> Self {
        FinPoset::builtin("Σ", &["⊥", "⊤"], &[(0, 1)])
    }

    pub fn chain(n: usize) -> Self {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FinPoset::from_relations(format!("C{n}"), labels, &pairs).expect("chains are partial orders")
    }

    /// Every poset with a least element and 2 to 4 elements, up to isomorphism.
    pub fn pointed_catalogue() -> Vec<FinPoset> {
        vec![
            FinPoset::sigma(),
            FinPoset::chain(3),
            FinPoset::builtin("V", &["⊥", "a", "b"], &[(0, 1), (0, 2)]),
            FinPoset::chain(4),
            FinPoset::builtin("Y", &["⊥", "a", "b", "c"], &[(0, 1), (1, 2), (1, 3)]),
            FinPoset::builtin("◇", &["⊥", "a", "b", "⊤"], &[(0, 1), (0, 2), (1, 3), (2, 3)]),
            FinPoset::builtin("fork", &["⊥", "a", "b", "c"], &[(0, 1), (1, 2), (0, 3)]),
            FinPoset::builtin("claw", &["⊥", "a", "b", "c"], &[(0, 1), (0, 2), (0, 3)]),
        ]
    }

    /// Every poset with least and greatest elements and 2 to 4 elements.
    pub fn bounded_catalogue() -> Vec<FinPoset> {
        FinPoset::pointed_catalogue().into_iter().filter(|p| p.has_top).collect()
    }
}

/// Objects: the one-point unit, named finite posets, and their products.
#[derive(Clone)]
pub struct PosetObj(Arc<Node>);

struct Node {
    shape: Shape,
    size: usize,
    leq: Vec<bool>,
    bottom: Option<usize>,
    top: Option<usize>,
    /// A linear extension of the order.
    order: Vec<usize>,
    digest: u64,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Shape {
    Unit,
    Base(Arc<FinPoset>),
    Prod(PosetObj, PosetObj),
}

impl PosetObj {
    fn build(shape: Shape, size: usize, leq: impl Fn(usize, usize) -> bool) -> Self {
        let table: Vec<bool> = (0..size * size).map(|k| leq(k / size.max(1), k % size.max(1))).collect();
        let at = |x: usize, y: usize| table[x * size + y];
        let bottom = (0..size).find(|&b| (0..size).all(|x| at(b, x)));
        let top = (0..size).find(|&t| (0..size).all(|x| at(x, t)));
        let mut order: Vec<usize> = (0..size).collect();
        order.sort_by_key(|&x| (0..size).filter(|&y| at(y, x)).count());
        let mut h = std::collections::hash_map::DefaultHasher::new();
        match &shape {
            Shape::Unit => 0u8.hash(&mut h),
            Shape::Base(p) => (1u8, p).hash(&mut h),
            Shape::Prod(a, b) => (2u8, a.0.digest, b.0.digest).hash(&mut h),
        }
        PosetObj(Arc::new(Node {
            digest: h.finish(),
            shape,
            size,
            leq: table,
            bottom,
            top,
            order,
        }))
    }

    pub fn unit() -> Self {
        thread_local!(static UNIT: PosetObj = PosetObj::build(Shape::Unit, 1, |_, _| true));
        UNIT.with(|u| u.clone())
    }

    pub fn base(p: FinPoset) -> Self {
        let p = Arc::new(p);
        let q = p.clone();
        PosetObj::build(Shape::Base(p), q.size(), |x, y| q.leq(x, y))
    }

    pub fn sigma() -> Self {
        PosetObj::base(FinPoset::sigma())
    }

    /// Products are memoized per thread, so repeated tensors share one node.
    pub fn prod(a: &PosetObj, b: &PosetObj) -> Self {
        const CAP: usize = 1 << 12;
        thread_local!(static PRODUCTS: RefCell<HashMap<(PosetObj, PosetObj), PosetObj>> = RefCell::new(HashMap::new()));
        let key = (a.clone(), b.clone());
        if let Some(p) = PRODUCTS.with(|c| c.borrow().get(&key).cloned()) {
            return p;
        }
        let p = PosetObj::build_prod(a, b);
        PRODUCTS.with(|c| {
            let mut c = c.borrow_mut();
            if c.len() >= CAP {
                c.clear();
            }
            c.insert(key, p.clone());
        });
        p
    }

    fn build_prod(a: &PosetObj, b: &PosetObj) -> Self {
        let (a2, b2) = (a.clone(), b.clone());
        let nb = b.size();
        PosetObj::build(Shape::Prod(a.clone(), b.clone()), a.size() * nb, move |x, y| {
            a2.leq(x / nb, y / nb) && b2.leq(x % nb, y % nb)
        })
    }

    pub fn shape(&self) -> &Shape {
        &self.0.shape
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.0.leq[x * self.0.size + y]
    }

    pub fn bottom(&self) -> Option<usize> {
        self.0.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.0.top
    }

    pub fn label(&self, x: usize) -> String {
        match &self.0.shape {
            Shape::Unit => "∗".into(),
            Shape::Base(p) => p.labels[x].clone(),
            Shape::Prod(a, b) => format!("({},{})", a.label(x / b.size()), b.label(x % b.size())),
        }
    }

    /// Index of the element with the given label.
    pub fn element(&self, label: &str) -> Option<usize> {
        (0..self.size()).find(|&x| self.label(x) == label)
    }
}

impl PartialEq for PosetObj {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.digest == other.0.digest && self.0.shape == other.0.shape)
    }
}

impl Eq for PosetObj {}

impl Hash for PosetObj {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.digest.hash(state)
    }
}

impl fmt::Debug for PosetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.shape {
            Shape::Unit => write!(f, "I"),
            Shape::Base(p) => write!(f, "{}", p.name),
            Shape::Prod(a, b) => write!(f, "({a:?}×{b:?})"),
        }
    }
}

impl Serialize for PosetObj {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{self:?}"))
    }
}

/// An order-preserving map, as a table of element indices.
#[derive(Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    pub dom: PosetObj,
    pub cod: PosetObj,
    pub table: Vec<usize>,
}

impl MonotoneMap {
    /// Validates the range and monotonicity.
    pub fn new(dom: PosetObj, cod: PosetObj, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.size() {
            return Err(Error::validation("shape", format!("{} entries for {:?}", table.len(), dom)));
        }
        if let Some(x) = (0..table.len()).find(|&x| table[x] >= cod.size()) {
            return Err(Error::validation("range", format!("image of {} outside {:?}", dom.label(x), cod)));
        }
        for x in 0..dom.size() {
            for y in 0..dom.size() {
                if dom.leq(x, y) && !cod.leq(table[x], table[y]) {
                    return Err(Error::validation(
                        "monotone",
                        format!("{} ≤ {} but images are not ordered", dom.label(x), dom.label(y)),
                    ));
                }
            }
        }
        Ok(MonotoneMap { dom, cod, table })
    }

    pub fn from_fn(dom: &PosetObj, cod: &PosetObj, f: impl Fn(usize) -> usize) -> Result<Self> {
        MonotoneMap::new(dom.clone(), cod.clone(), (0..dom.size()).map(f).collect())
    }

    pub fn constant(dom: &PosetObj, cod: &PosetObj, c: usize) -> Self {
        MonotoneMap {
            dom: dom.clone(),
            cod: cod.clone(),
            table: vec![c; dom.size()],
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// Image label of the element labelled `x`.
    pub fn at(&self, x: &str) -> Option<String> {
        let v = self.table[self.dom.element(x)?];
        is_value(v).then(|| self.cod.label(v))
    }

    fn entries(&self) -> Vec<(String, String)> {
        self.table
            .iter()
            .enumerate()
            .map(|(x, &v)| (self.dom.label(x), if is_value(v) { self.cod.label(v) } else { "?".into() }))
            .collect()
    }
}

impl fmt::Debug for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}→{:?}{{", self.dom, self.cod)?;
        for (i, (x, y)) in self.entries().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}↦{y}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for MonotoneMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MonotoneMap", 3)?;
        st.serialize_field("dom", &self.dom)?;
        st.serialize_field("cod", &self.cod)?;
        st.serialize_field("table", &self.entries())?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FixMode {
    /// Kleene iteration from `⊥`.
    Lfp,
    /// Kleene iteration from `⊤`.
    Gfp,
}

/// Finite posets whose objects all have the element the chosen fixed-point
/// iteration starts from.
#[derive(Clone, Debug)]
pub struct PosetModel {
    name: String,
    mode: FixMode,
    generators: Vec<PosetObj>,
}

/// Pointed posets with the lfp trace.
pub fn fincppo_model() -> PosetModel {
    PosetModel::new("FinCppo", FixMode::Lfp, FinPoset::pointed_catalogue())
}

/// Bounded posets with the chosen trace.
pub fn bounded_poset_model(mode: FixMode) -> PosetModel {
    PosetModel::new("BoundedPoset", mode, FinPoset::bounded_catalogue())
}

impl PosetModel {
    pub fn new(name: &str, mode: FixMode, generators: Vec<FinPoset>) -> Self {
        let mut generators: Vec<PosetObj> = generators.into_iter().map(PosetObj::base).collect();
        generators.sort_by_key(|g| g.size());
        PosetModel {
            name: format!("{name}-{}", match mode {
                FixMode::Lfp => "lfp",
                FixMode::Gfp => "gfp",
            }),
            mode,
            generators,
        }
    }

    /// Adds a poset to the generating objects, rejecting one the fixed-point
    /// iteration cannot start on.
    pub fn with_poset(mut self, p: FinPoset) -> Result<Self> {
        let obj = PosetObj::base(p);
        self.check_object(&obj)?;
        if !self.generators.contains(&obj) {
            self.generators.push(obj);
            self.generators.sort_by_key(|g| g.size());
        }
        Ok(self)
    }

    pub fn mode(&self) -> FixMode {
        self.mode
    }

    pub fn generators(&self) -> &[PosetObj] {
        &self.generators
    }

    fn start(&self, x: &PosetObj) -> Result<usize> {
        let s = match self.mode {
            FixMode::Lfp => x.bottom(),
            FixMode::Gfp => x.top(),
        };
        s.ok_or_else(|| {
            Error::capability(
                self.name(),
                match self.mode {
                    FixMode::Lfp => format!("fixed points on {x:?}, which has no least element"),
                    FixMode::Gfp => format!("fixed points on {x:?}, which has no greatest element"),
                },
            )
        })
    }

    /// Kleene iteration of `step` from the start element; stabilizes within
    /// `|X|` steps for monotone `step`.
    fn iterate(&self, x: &PosetObj, step: impl Fn(usize) -> usize) -> Result<usize> {
        let mut v = self.start(x)?;
        for _ in 0..=x.size() {
            let w = step(v);
            if !is_value(w) || w == v {
                return Ok(w);
            }
            v = w;
        }
        Err(Error::validation("kleene iteration", format!("no fixed point reached on {x:?}")))
    }

    /// Monotone maps `dom → cod` consistent with `keep`, by depth-first
    /// search along a linear extension of `dom`.
    fn monotone_search(
        &self,
        dom: &PosetObj,
        cod: &PosetObj,
        keep: &(dyn Fn(&MonotoneMap) -> bool + Sync),
    ) -> Vec<MonotoneMap> {
        let wrap = |t: &[usize]| MonotoneMap {
            dom: dom.clone(),
            cod: cod.clone(),
            table: t.to_vec(),
        };
        let candidates = |t: &[usize], i: usize| monotone_candidates(dom, cod, t, i);
        search_tables(dom.size(), &dom.0.order, &candidates, &|t| keep(&wrap(t)))
            .into_iter()
            .map(|t| wrap(&t))
            .collect()
    }
}

/// Values for entry `i` compatible with the entries already assigned.
fn monotone_candidates(dom: &PosetObj, cod: &PosetObj, t: &[usize], i: usize) -> Vec<usize> {
    (0..cod.size())
        .filter(|&c| {
            (0..dom.size()).all(|j| {
                let v = t[j];
                !is_value(v) || j == i || ((!dom.leq(j, i) || cod.leq(v, c)) && (!dom.leq(i, j) || cod.leq(c, v)))
            })
        })
        .collect()
}

/// `(f×g)(i, j) = (f i, g j)`; unknown entries propagate.
fn product_table(f: &MonotoneMap, g: &MonotoneMap) -> Vec<usize> {
    let ng = g.cod.size();
    let mut out = Vec::with_capacity(f.table.len() * g.table.len());
    for &x in &f.table {
        for &y in &g.table {
            out.push(if is_value(x) && is_value(y) { x * ng + y } else { UNKNOWN });
        }
    }
    out
}

pub fn random_monotone(rng: &mut CaseRng, dom: &PosetObj, cod: &PosetObj) -> Option<MonotoneMap> {
    if cod.size() == 0 {
        return None;
    }
    'attempt: for _ in 0..8 {
        let mut t = vec![UNKNOWN; dom.size()];
        for &i in &dom.0.order {
            let c = monotone_candidates(dom, cod, &t, i);
            match c.choose(rng) {
                Some(&v) => t[i] = v,
                None => continue 'attempt,
            }
        }
        return Some(MonotoneMap {
            dom: dom.clone(),
            cod: cod.clone(),
            table: t,
        });
    }
    Some(MonotoneMap::constant(dom, cod, rng.gen_range(0..cod.size())))
}

impl Model for PosetModel {
    type Obj = PosetObj;
    type Mor = MonotoneMap;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities {
            symmetric: true,
            traced: true,
            compact: false,
            cartesian: true,
            cocartesian: false,
        }
    }

    fn dom(&self, f: &MonotoneMap) -> PosetObj {
        f.dom.clone()
    }

    fn cod(&self, f: &MonotoneMap) -> PosetObj {
        f.cod.clone()
    }

    fn check_object(&self, a: &PosetObj) -> Result<()> {
        self.start(a).map(|_| ())
    }

    fn identity(&self, a: &PosetObj) -> MonotoneMap {
        MonotoneMap {
            dom: a.clone(),
            cod: a.clone(),
            table: (0..a.size()).collect(),
        }
    }

    fn compose_unchecked(&self, g: &MonotoneMap, f: &MonotoneMap) -> MonotoneMap {
        MonotoneMap {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            table: compose_tables(&g.table, &f.table),
        }
    }

    fn unit_object(&self) -> PosetObj {
        PosetObj::unit()
    }

    fn tensor_obj(&self, a: &PosetObj, b: &PosetObj) -> PosetObj {
        PosetObj::prod(a, b)
    }

    fn tensor(&self, f: &MonotoneMap, g: &MonotoneMap) -> MonotoneMap {
        MonotoneMap {
            dom: PosetObj::prod(&f.dom, &g.dom),
            cod: PosetObj::prod(&f.cod, &g.cod),
            table: product_table(f, g),
        }
    }

    fn structural(&self, s: &Structural<PosetObj>) -> MonotoneMap {
        let p = PosetObj::prod;
        // row-major pairing makes every structural map but σ the identity table
        let relabel = |dom: PosetObj, cod: PosetObj| MonotoneMap {
            table: (0..dom.size()).collect(),
            dom,
            cod,
        };
        let unit = PosetObj::unit();
        match s {
            Structural::Assoc(a, b, c) => relabel(p(a, &p(b, c)), p(&p(a, b), c)),
            Structural::AssocInv(a, b, c) => relabel(p(&p(a, b), c), p(a, &p(b, c))),
            Structural::LUnit(a) => relabel(p(&unit, a), a.clone()),
            Structural::LUnitInv(a) => relabel(a.clone(), p(&unit, a)),
            Structural::RUnit(a) => relabel(p(a, &unit), a.clone()),
            Structural::RUnitInv(a) => relabel(a.clone(), p(a, &unit)),
            Structural::Sym(a, b) => {
                let (na, nb) = (a.size(), b.size());
                MonotoneMap {
                    dom: p(a, b),
                    cod: p(b, a),
                    table: (0..na * nb).map(|k| (k % nb) * na + k / nb).collect(),
                }
            }
        }
    }

    /// `Tr(h)(a) = h₀(a, fix(h₁(a, −)))`.
    fn trace(&self, x: &PosetObj, a: &PosetObj, b: &PosetObj, f: &MonotoneMap) -> Result<MonotoneMap> {
        check_trace_shape(self, x, a, b, f)?;
        let nx = x.size();
        let mut table = Vec::with_capacity(a.size());
        for i in 0..a.size() {
            let step = |v: usize| {
                let w = f.table[i * nx + v];
                if is_value(w) {
                    w % nx
                } else {
                    w
                }
            };
            let fixed = self.iterate(x, step)?;
            let w = if is_value(fixed) { f.table[i * nx + fixed] } else { fixed };
            table.push(if is_value(w) { w / nx } else { w });
        }
        Ok(MonotoneMap {
            dom: a.clone(),
            cod: b.clone(),
            table,
        })
    }

    fn try_invert(&self, f: &MonotoneMap) -> Option<MonotoneMap> {
        let n = f.cod.size();
        if f.dom.size() != n {
            return None;
        }
        let mut inv = vec![UNKNOWN; n];
        for (x, &y) in f.table.iter().enumerate() {
            if !is_value(y) || is_value(inv[y]) {
                return None;
            }
            inv[y] = x;
        }
        MonotoneMap::new(f.cod.clone(), f.dom.clone(), inv).ok()
    }

    fn agrees(&self, f: &MonotoneMap, g: &MonotoneMap) -> bool {
        tables_agree(&f.table, &g.table)
    }

    fn object_size(&self, a: &PosetObj) -> usize {
        a.size()
    }

    /// Mostly generators; sometimes the unit or a product within the bound.
    fn sample_object(&self, rng: &mut CaseRng, max_size: usize) -> PosetObj {
        let small: Vec<&PosetObj> = self.generators.iter().filter(|g| g.size() <= max_size).collect();
        let pick = |rng: &mut CaseRng| match small.choose(rng) {
            Some(g) if rng.gen_ratio(7, 8) => (*g).clone(),
            _ => PosetObj::unit(),
        };
        match rng.gen_range(0..6) {
            0 => PosetObj::unit(),
            1 => {
                let (a, b) = (pick(rng), pick(rng));
                if a.size() * b.size() <= max_size.max(1) {
                    PosetObj::prod(&a, &b)
                } else {
                    a
                }
            }
            _ => pick(rng),
        }
    }

    fn sample_morphism(&self, rng: &mut CaseRng, dom: &PosetObj, cod: &PosetObj) -> Option<MonotoneMap> {
        random_monotone(rng, dom, cod)
    }

    fn enumerate_objects(&self, max_size: usize) -> Option<Vec<PosetObj>> {
        let mut out = vec![PosetObj::unit()];
        out.extend(self.generators.iter().filter(|g| g.size() <= max_size).cloned());
        Some(out)
    }

    fn enumerate_homs(&self, dom: &PosetObj, cod: &PosetObj) -> Option<Vec<MonotoneMap>> {
        Some(self.monotone_search(dom, cod, &|_| true))
    }

    fn search_homs(
        &self,
        dom: &PosetObj,
        cod: &PosetObj,
        keep: &(dyn Fn(&MonotoneMap) -> bool + Sync),
    ) -> Option<Vec<MonotoneMap>> {
        Some(self.monotone_search(dom, cod, keep))
    }

    fn has_enumerator(&self) -> bool {
        true
    }
}

impl Cartesian for PosetModel {
    fn terminal_map(&self, a: &PosetObj) -> MonotoneMap {
        MonotoneMap::constant(a, &PosetObj::unit(), 0)
    }

    fn proj0(&self, a: &PosetObj, b: &PosetObj) -> MonotoneMap {
        let nb = b.size();
        MonotoneMap {
            dom: PosetObj::prod(a, b),
            cod: a.clone(),
            table: (0..a.size() * nb).map(|k| k / nb).collect(),
        }
    }

    fn proj1(&self, a: &PosetObj, b: &PosetObj) -> MonotoneMap {
        let nb = b.size();
        MonotoneMap {
            dom: PosetObj::prod(a, b),
            cod: b.clone(),
            table: (0..a.size() * nb).map(|k| k % nb).collect(),
        }
    }

    fn pair(&self, f: &MonotoneMap, g: &MonotoneMap) -> Result<MonotoneMap> {
        if f.dom != g.dom {
            return Err(Error::type_mismatch("pairing", &f.dom, &g.dom));
        }
        let ng = g.cod.size();
        let table = f
            .table
            .iter()
            .zip(&g.table)
            .map(|(&x, &y)| if is_value(x) && is_value(y) { x * ng + y } else { UNKNOWN })
            .collect();
        Ok(MonotoneMap {
            dom: f.dom.clone(),
            cod: PosetObj::prod(&f.cod, &g.cod),
            table,
        })
    }
}

impl Conway for PosetModel {
    /// `Fix(f)(a)` is the limit of `s, f(a, s), f(a, f(a, s)), …` from the
    /// start element `s`.
    fn fix(&self, x: &PosetObj, a: &PosetObj, f: &MonotoneMap) -> Result<MonotoneMap> {
        let dom = PosetObj::prod(a, x);
        if f.dom != dom || &f.cod != x {
            return Err(Error::type_mismatch("fixed point", format!("{dom:?} -> {x:?}"), format!("{:?} -> {:?}", f.dom, f.cod)));
        }
        let nx = x.size();
        let table = (0..a.size())
            .map(|i| self.iterate(x, |v| f.table[i * nx + v]))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonotoneMap {
            dom: a.clone(),
            cod: x.clone(),
            table,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_flags() {
        let cat = FinPoset::pointed_catalogue();
        assert_eq!(cat.len(), 8);
        assert!(cat.iter().all(|p| p.has_bottom));
        let bounded: Vec<String> = FinPoset::bounded_catalogue().into_iter().map(|p| p.name).collect();
        assert_eq!(bounded, vec!["Σ", "C3", "C4", "◇"]);
    }

    #[test]
    fn relation_errors_are_named() {
        let labels = vec!["x".to_string(), "y".to_string()];
        let err = FinPoset::from_relations("bad", labels, &[(0, 1), (1, 0)]).unwrap_err();
        assert!(err.to_string().contains("antisymmetry"), "{err}");
    }

    #[test]
    fn sigma_fixed_points() {
        let m = fincppo_model();
        let s = PosetObj::sigma();
        let one = PosetObj::unit();
        let dom = PosetObj::prod(&one, &s);
        let ident = MonotoneMap::from_fn(&dom, &s, |k| k % 2).unwrap();
        assert_eq!(m.fix(&s, &one, &ident).unwrap().table, vec![0]);
        let top = MonotoneMap::constant(&dom, &s, 1);
        assert_eq!(m.fix(&s, &one, &top).unwrap().table, vec![1]);
        let g = bounded_poset_model(FixMode::Gfp);
        assert_eq!(g.fix(&s, &one, &ident).unwrap().table, vec![1]);
        assert_eq!(g.fix(&s, &one, &top).unwrap().table, vec![1]);
    }

    #[test]
    fn monotone_maps_on_sigma() {
        let m = fincppo_model();
        let s = PosetObj::sigma();
        assert_eq!(m.enumerate_homs(&s, &s).unwrap().len(), 3);
        let v = PosetObj::base(FinPoset::pointed_catalogue()[2].clone());
        // monotone V → Σ: pick images of a, b above the image of ⊥
        assert_eq!(m.enumerate_homs(&v, &s).unwrap().len(), 5);
    }

    #[test]
    fn missing_bottom_is_a_capability_error() {
        let lambda = FinPoset::from_relations("Λ", vec!["a".into(), "b".into(), "⊤".into()], &[(0, 2), (1, 2)]).unwrap();
        assert!(fincppo_model().with_poset(lambda.clone()).is_err());
        assert!(bounded_poset_model(FixMode::Gfp).with_poset(lambda).is_ok());
    }

    #[test]
    fn labels_of_products() {
        let s = PosetObj::sigma();
        let ss = PosetObj::prod(&s, &s);
        assert_eq!(ss.label(3), "(⊤,⊤)");
        assert_eq!(ss.element("(⊥,⊤)"), Some(1));
        assert_eq!(ss.bottom(), Some(0));
        assert_eq!(ss.top(), Some(3));
    }
}
