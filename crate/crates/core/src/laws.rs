//! Generic checkers for the monoidal, trace, compact and Conway axioms.
//!
//! Every law is described by how many objects it quantifies over, which
//! hom-sets its morphism variables live in, and how to compare the two
//! sides. One driver then either enumerates all instances within the size
//! bound or draws seeded samples.

use serde_json::{json, Value};

use crate::category::{
    check_trace_shape, compact_trace, fix_from_trace, snake_composites, trace_from_fix, CaseRng, Compact, Conway, Model,
};
use crate::error::Result;
use crate::report::{self, finish, run_blocks, run_sampled, to_json, CaseBudget, CheckReport, Tally};

pub use crate::report::{Failure, Verdict};

type HomSpec<M> = Vec<(<M as Model>::Obj, <M as Model>::Obj)>;

/// One universally quantified equation family.
pub struct Law<'a, M: Model + ?Sized> {
    pub name: &'static str,
    pub arity: usize,
    pub homs: Box<dyn Fn(&M, &[M::Obj]) -> HomSpec<M> + Sync + 'a>,
    pub check: Box<dyn Fn(&M, &[M::Obj], &[M::Mor], &mut Tally) + Sync + 'a>,
}

impl<'a, M: Model + ?Sized> Law<'a, M> {
    pub fn new(
        name: &'static str,
        arity: usize,
        homs: impl Fn(&M, &[M::Obj]) -> HomSpec<M> + Sync + 'a,
        check: impl Fn(&M, &[M::Obj], &[M::Mor], &mut Tally) + Sync + 'a,
    ) -> Self {
        Law {
            name,
            arity,
            homs: Box::new(homs),
            check: Box::new(check),
        }
    }
}

pub fn inputs_json<M: Model + ?Sized>(objs: &[M::Obj], mors: &[M::Mor]) -> Value {
    json!({ "objects": to_json(objs), "morphisms": to_json(mors) })
}

pub(crate) fn tuples<T: Clone>(items: &[T], arity: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                items.iter().map(move |x| {
                    let mut t2 = t.clone();
                    t2.push(x.clone());
                    t2
                })
            })
            .collect();
    }
    out
}

/// Object tuples with more morphism instances than this are left out of
/// an exhaustive run, which then reports itself incomplete.
pub const MAX_INSTANCES_PER_TUPLE: usize = 1 << 16;

fn product<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for l in lists {
        let mut next = Vec::with_capacity(out.len() * l.len());
        for t in &out {
            for x in l {
                let mut t2 = t.clone();
                t2.push(x.clone());
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

/// Runs `laws` under `budget`. Returns the tally and whether every
/// quantifier was enumerated.
pub fn drive<M: Model + ?Sized>(model: &M, budget: &CaseBudget, laws: &[Law<'_, M>]) -> (Tally, bool) {
    drive_with(model, budget, laws, true)
}

/// Like [`drive`]; with `bound_homs = false` an exhaustive run enumerates
/// every hom-set built from the enumerated objects, however large.
pub fn drive_with<M: Model + ?Sized>(
    model: &M,
    budget: &CaseBudget,
    laws: &[Law<'_, M>],
    bound_homs: bool,
) -> (Tally, bool) {
    if budget.exhaustive && model.has_enumerator() {
        if let Some(objects) = model.enumerate_objects(budget.max_object_size) {
            return drive_exhaustive(model, budget, laws, &objects, bound_homs);
        }
    }
    (drive_sampled(model, budget, laws), false)
}

fn drive_exhaustive<M: Model + ?Sized>(
    model: &M,
    budget: &CaseBudget,
    laws: &[Law<'_, M>],
    objects: &[M::Obj],
    bound_homs: bool,
) -> (Tally, bool) {
    let mut all = Tally::default();
    let complete = std::sync::atomic::AtomicBool::new(true);
    for law in laws {
        let obj_tuples = tuples(objects, law.arity);
        let t = run_blocks(&obj_tuples, |objs, tally| {
            let specs = (law.homs)(model, objs);
            let in_bound = !bound_homs || specs.iter().all(|(d, c)| {
                model.within_exhaustive_bound(d, budget.max_object_size)
                    && model.within_exhaustive_bound(c, budget.max_object_size)
            });
            if !in_bound {
                return;
            }
            let mut lists = Vec::with_capacity(specs.len());
            for (d, c) in &specs {
                match model.enumerate_homs(d, c) {
                    Some(l) => lists.push(l),
                    None => {
                        complete.store(false, std::sync::atomic::Ordering::Relaxed);
                        return;
                    }
                }
            }
            let count = lists.iter().try_fold(1usize, |n, l| n.checked_mul(l.len()));
            if count.is_none_or(|n| n > MAX_INSTANCES_PER_TUPLE) {
                complete.store(false, std::sync::atomic::Ordering::Relaxed);
                return;
            }
            for mors in product(&lists) {
                (law.check)(model, objs, &mors, tally);
            }
        });
        all.absorb(t);
    }
    (all, complete.into_inner())
}

/// Draws objects, then morphisms in the required hom-sets; retries a few
/// times when a hom-set is empty.
pub fn sample_instance<M: Model + ?Sized>(
    model: &M,
    rng: &mut CaseRng,
    max_size: usize,
    arity: usize,
    homs: &dyn Fn(&M, &[M::Obj]) -> HomSpec<M>,
) -> Option<(Vec<M::Obj>, Vec<M::Mor>)> {
    'attempt: for _ in 0..16 {
        let objs: Vec<M::Obj> = (0..arity)
            .map(|_| model.sample_object(rng, max_size))
            .collect();
        let mut mors = Vec::new();
        for (d, c) in homs(model, &objs) {
            match model.sample_morphism(rng, &d, &c) {
                Some(f) => mors.push(f),
                None => continue 'attempt,
            }
        }
        return Some((objs, mors));
    }
    None
}

fn drive_sampled<M: Model + ?Sized>(model: &M, budget: &CaseBudget, laws: &[Law<'_, M>]) -> Tally {
    run_sampled(budget, |rng, tally| {
        for law in laws {
            if let Some((objs, mors)) =
                sample_instance(model, rng, budget.max_object_size, law.arity, &*law.homs)
            {
                (law.check)(model, &objs, &mors, tally);
            }
        }
    })
}

/// Runs `laws` and wraps the outcome as a report named `suite`.
pub fn run_laws<M: Model + ?Sized>(
    model: &M,
    budget: &CaseBudget,
    suite: &str,
    laws: &[Law<'_, M>],
) -> CheckReport {
    let (tally, exhaustive) = drive(model, budget, laws);
    finish(suite, model.name(), tally, exhaustive, budget.exhaustive, vec![])
}

fn no_homs<M: Model + ?Sized>(_: &M, _: &[M::Obj]) -> HomSpec<M> {
    vec![]
}

// ---------------------------------------------------------------------------
// monoidal structure

pub fn monoidal_laws<'a, M: Model + ?Sized + 'a>() -> Vec<Law<'a, M>> {
    vec![
        Law::new("pentagon", 4, no_homs::<M>, |m: &M, o, _, t| {
            let (a, b, c, d) = (&o[0], &o[1], &o[2], &o[3]);
            let ab = m.tensor_obj(a, b);
            let bc = m.tensor_obj(b, c);
            let cd = m.tensor_obj(c, d);
            let lhs = m.compose(&m.assoc(&ab, c, d), &m.assoc(a, b, &cd));
            let rhs = m.chain(&[
                m.tensor(&m.identity(a), &m.assoc(b, c, d)),
                m.assoc(a, &bc, d),
                m.tensor(&m.assoc(a, b, c), &m.identity(d)),
            ]);
            t.equal(m, "pentagon", || inputs_json::<M>(o, &[]), lhs, rhs);
        }),
        Law::new("triangle", 2, no_homs::<M>, |m: &M, o, _, t| {
            let (a, b) = (&o[0], &o[1]);
            let i = m.unit_object();
            let lhs = m.compose(
                &m.tensor(&m.runit(a), &m.identity(b)),
                &m.assoc(a, &i, b),
            );
            let rhs = Ok(m.tensor(&m.identity(a), &m.lunit(b)));
            t.equal(m, "triangle", || inputs_json::<M>(o, &[]), lhs, rhs);
        }),
        Law::new("unitor inverses", 1, no_homs::<M>, |m: &M, o, _, t| {
            let a = &o[0];
            let id = m.identity(a);
            let l = m.compose(&m.lunit(a), &m.lunit_inv(a));
            let r = m.compose(&m.runit(a), &m.runit_inv(a));
            t.equal(m, "unitor inverses", || inputs_json::<M>(o, &[]), l, Ok(id.clone()));
            t.equal(m, "unitor inverses", || inputs_json::<M>(o, &[]), r, Ok(id));
        }),
        Law::new("associator inverse", 3, no_homs::<M>, |m: &M, o, _, t| {
            let (a, b, c) = (&o[0], &o[1], &o[2]);
            let lhs = m.compose(&m.assoc_inv(a, b, c), &m.assoc(a, b, c));
            let id = m.identity(&m.tensor_obj(a, &m.tensor_obj(b, c)));
            t.equal(m, "associator inverse", || inputs_json::<M>(o, &[]), lhs, Ok(id));
        }),
        Law::new("symmetry involution", 2, no_homs::<M>, |m: &M, o, _, t| {
            let (a, b) = (&o[0], &o[1]);
            let lhs = m.compose(&m.sym(b, a), &m.sym(a, b));
            let id = m.identity(&m.tensor_obj(a, b));
            t.equal(m, "symmetry involution", || inputs_json::<M>(o, &[]), lhs, Ok(id));
        }),
        Law::new("hexagon", 3, no_homs::<M>, |m: &M, o, _, t| {
            let (a, b, c) = (&o[0], &o[1], &o[2]);
            let bc = m.tensor_obj(b, c);
            let lhs = m.chain(&[
                m.assoc_inv(a, b, c),
                m.sym(a, &bc),
                m.assoc_inv(b, c, a),
            ]);
            let rhs = m.chain(&[
                m.tensor(&m.sym(a, b), &m.identity(c)),
                m.assoc_inv(b, a, c),
                m.tensor(&m.identity(b), &m.sym(a, c)),
            ]);
            t.equal(m, "hexagon", || inputs_json::<M>(o, &[]), lhs, rhs);
        }),
        Law::new(
            "bifunctoriality",
            6,
            |_: &M, o: &[M::Obj]| {
                // h: A0 → A, f: A → B, k: C0 → C, g: C → D
                vec![
                    (o[0].clone(), o[1].clone()),
                    (o[1].clone(), o[2].clone()),
                    (o[3].clone(), o[4].clone()),
                    (o[4].clone(), o[5].clone()),
                ]
            },
            |m: &M, o, f, t| {
                let (h, ff, k, g) = (&f[0], &f[1], &f[2], &f[3]);
                let lhs = m.compose(&m.tensor(ff, g), &m.tensor(h, k));
                let rhs = m
                    .compose(ff, h)
                    .and_then(|fh| Ok(m.tensor(&fh, &m.compose(g, k)?)));
                t.equal(m, "bifunctoriality", || inputs_json::<M>(o, f), lhs, rhs);
            },
        ),
        Law::new(
            "symmetry naturality",
            4,
            |_: &M, o: &[M::Obj]| vec![(o[0].clone(), o[1].clone()), (o[2].clone(), o[3].clone())],
            |m: &M, o, f, t| {
                let (a, b, c, d) = (&o[0], &o[1], &o[2], &o[3]);
                let lhs = m.compose(&m.sym(b, d), &m.tensor(&f[0], &f[1]));
                let rhs = m.compose(&m.tensor(&f[1], &f[0]), &m.sym(a, c));
                t.equal(m, "symmetry naturality", || inputs_json::<M>(o, f), lhs, rhs);
            },
        ),
    ]
}

/// Pentagon, triangle, symmetry involution, hexagon, bifunctoriality and
/// naturality of the symmetry.
pub fn check_monoidal_laws<M: Model + ?Sized>(model: &M, budget: &CaseBudget) -> CheckReport {
    run_laws(model, budget, "monoidal", &monoidal_laws::<M>())
}

// ---------------------------------------------------------------------------
// trace

fn tr<M: Model + ?Sized>(m: &M, x: &M::Obj, a: &M::Obj, b: &M::Obj, f: &Result<M::Mor>) -> Result<M::Mor> {
    let f = f.as_ref().map_err(Clone::clone)?;
    check_trace_shape(m, x, a, b, f)?;
    m.trace(x, a, b, f)
}

pub fn trace_laws<'a, M: Model + ?Sized + 'a>() -> Vec<Law<'a, M>> {
    vec![
        // objects: A', A, B, X; f: A⊗X → B⊗X, g: A' → A
        Law::new(
            "tightening (precomposition)",
            4,
            |m: &M, o: &[M::Obj]| {
                vec![
                    (m.tensor_obj(&o[1], &o[3]), m.tensor_obj(&o[2], &o[3])),
                    (o[0].clone(), o[1].clone()),
                ]
            },
            |m: &M, o, f, t| {
                let (a2, a, b, x) = (&o[0], &o[1], &o[2], &o[3]);
                let pre = m.compose(&f[0], &m.tensor(&f[1], &m.identity(x)));
                let lhs = tr(m, x, a2, b, &pre);
                let rhs = tr(m, x, a, b, &Ok(f[0].clone())).and_then(|tf| m.compose(&tf, &f[1]));
                t.equal(m, "tightening (precomposition)", || inputs_json::<M>(o, f), lhs, rhs);
            },
        ),
        // objects: A, B, B', X; f: A⊗X → B⊗X, h: B → B'
        Law::new(
            "tightening (postcomposition)",
            4,
            |m: &M, o: &[M::Obj]| {
                vec![
                    (m.tensor_obj(&o[0], &o[3]), m.tensor_obj(&o[1], &o[3])),
                    (o[1].clone(), o[2].clone()),
                ]
            },
            |m: &M, o, f, t| {
                let (a, b, b2, x) = (&o[0], &o[1], &o[2], &o[3]);
                let post = m.compose(&m.tensor(&f[1], &m.identity(x)), &f[0]);
                let lhs = tr(m, x, a, b2, &post);
                let rhs = tr(m, x, a, b, &Ok(f[0].clone())).and_then(|tf| m.compose(&f[1], &tf));
                t.equal(m, "tightening (postcomposition)", || inputs_json::<M>(o, f), lhs, rhs);
            },
        ),
        // objects: A, B, X, X'; f: A⊗X → B⊗X', k: X' → X
        Law::new(
            "sliding",
            4,
            |m: &M, o: &[M::Obj]| {
                vec![
                    (m.tensor_obj(&o[0], &o[2]), m.tensor_obj(&o[1], &o[3])),
                    (o[3].clone(), o[2].clone()),
                ]
            },
            |m: &M, o, f, t| {
                let (a, b, x, x2) = (&o[0], &o[1], &o[2], &o[3]);
                let (ff, k) = (&f[0], &f[1]);
                let lhs = tr(m, x, a, b, &m.compose(&m.tensor(&m.identity(b), k), ff));
                let rhs = tr(m, x2, a, b, &m.compose(ff, &m.tensor(&m.identity(a), k)));
                t.equal(m, "sliding", || inputs_json::<M>(o, f), lhs, rhs);
            },
        ),
        // objects: A, B, X, Y; f: A⊗(X⊗Y) → B⊗(X⊗Y)
        Law::new(
            "vanishing",
            4,
            |m: &M, o: &[M::Obj]| {
                let xy = m.tensor_obj(&o[2], &o[3]);
                vec![(m.tensor_obj(&o[0], &xy), m.tensor_obj(&o[1], &xy))]
            },
            |m: &M, o, f, t| {
                let (a, b, x, y) = (&o[0], &o[1], &o[2], &o[3]);
                let xy = m.tensor_obj(x, y);
                let lhs = tr(m, &xy, a, b, &Ok(f[0].clone()));
                let conj = m.chain(&[m.assoc_inv(a, x, y), f[0].clone(), m.assoc(b, x, y)]);
                let inner = tr(m, y, &m.tensor_obj(a, x), &m.tensor_obj(b, x), &conj);
                let rhs = tr(m, x, a, b, &inner);
                t.equal(m, "vanishing", || inputs_json::<M>(o, f), lhs, rhs);
            },
        ),
        // objects: C, A, B, X; f: A⊗X → B⊗X
        Law::new(
            "superposing",
            4,
            |m: &M, o: &[M::Obj]| vec![(m.tensor_obj(&o[1], &o[3]), m.tensor_obj(&o[2], &o[3]))],
            |m: &M, o, f, t| {
                let (c, a, b, x) = (&o[0], &o[1], &o[2], &o[3]);
                let body = m.chain(&[
                    m.assoc_inv(c, a, x),
                    m.tensor(&m.identity(c), &f[0]),
                    m.assoc(c, b, x),
                ]);
                let lhs = tr(m, x, &m.tensor_obj(c, a), &m.tensor_obj(c, b), &body);
                let rhs = tr(m, x, a, b, &Ok(f[0].clone())).map(|tf| m.tensor(&m.identity(c), &tf));
                t.equal(m, "superposing", || inputs_json::<M>(o, f), lhs, rhs);
            },
        ),
        Law::new("yanking", 1, no_homs::<M>, |m: &M, o, _, t| {
            let x = &o[0];
            let lhs = tr(m, x, x, x, &Ok(m.sym(x, x)));
            t.equal(m, "yanking", || inputs_json::<M>(o, &[]), lhs, Ok(m.identity(x)));
        }),
    ]
}

/// Tightening (both sides), sliding, binary vanishing, superposing, yanking.
pub fn check_trace_axioms<M: Model + ?Sized>(model: &M, budget: &CaseBudget) -> CheckReport {
    if !model.capabilities().traced {
        return capability_report("trace axioms", model, "traced");
    }
    run_laws(model, budget, "trace axioms", &trace_laws::<M>())
}

/// `Tr^I_{A,B}(f) = ρ_B∘f∘ρ⁻¹_A`, a consequence of the checked axioms.
pub fn vanishing_unit_holds<M: Model + ?Sized>(
    model: &M,
    a: &M::Obj,
    b: &M::Obj,
    f: &M::Mor,
) -> Result<bool> {
    let i = model.unit_object();
    let lhs = model.trace(&i, a, b, f)?;
    let rhs = model.chain(&[model.runit_inv(a), f.clone(), model.runit(b)])?;
    Ok(lhs == rhs)
}

pub fn capability_report<M: Model + ?Sized>(suite: &str, model: &M, cap: &str) -> CheckReport {
    let mut t = Tally::default();
    t.error(
        suite,
        Value::Null,
        &crate::error::Error::capability(model.name(), cap),
    );
    finish(suite, model.name(), t, false, false, vec![])
}

// ---------------------------------------------------------------------------
// compact structure

/// Both snake equations for every object up to the size bound (or sampled).
pub fn check_snake<M: Compact + ?Sized>(model: &M, budget: &CaseBudget) -> CheckReport {
    let law = Law::new("snake", 1, no_homs::<M>, |m: &M, o, _, t| {
        let x = &o[0];
        match snake_composites(m, x) {
            Ok((l, r)) => {
                t.equal(m, "snake (object)", || inputs_json::<M>(o, &[]), Ok(l), Ok(m.identity(x)));
                let xs = m.dual(x);
                t.equal(m, "snake (dual)", || inputs_json::<M>(o, &[]), Ok(r), Ok(m.identity(&xs)));
            }
            Err(e) => t.error("snake", inputs_json::<M>(o, &[]), &e),
        }
    });
    // snakes need no hom enumeration: every listed object is checked
    if let Some(objs) = model.enumerate_objects(budget.max_object_size) {
        let tally = run_blocks(&objs, |x, t| (law.check)(model, std::slice::from_ref(x), &[], t));
        return finish("snake", model.name(), tally, true, budget.exhaustive, vec![]);
    }
    run_laws(model, budget, "snake", &[law])
}

// ---------------------------------------------------------------------------
// Conway operators

pub fn conway_laws<'a, M: Conway + ?Sized + 'a>() -> Vec<Law<'a, M>> {
    vec![
        // A, X; f: A×X → X
        Law::new(
            "parametrized fixed point",
            2,
            |m: &M, o: &[M::Obj]| vec![(m.tensor_obj(&o[0], &o[1]), o[1].clone())],
            |m: &M, o, f, t| {
                let (a, x) = (&o[0], &o[1]);
                let fix = m.fix(x, a, &f[0]);
                let rhs = fix
                    .clone()
                    .and_then(|fx| m.compose(&f[0], &m.pair(&m.identity(a), &fx)?));
                t.equal(m, "parametrized fixed point", || inputs_json::<M>(o, f), fix, rhs);
            },
        ),
        // A', A, X; f: A×X → X, g: A' → A
        Law::new(
            "naturality (parameter)",
            3,
            |m: &M, o: &[M::Obj]| {
                vec![
                    (m.tensor_obj(&o[1], &o[2]), o[2].clone()),
                    (o[0].clone(), o[1].clone()),
                ]
            },
            |m: &M, o, f, t| {
                let (a2, a, x) = (&o[0], &o[1], &o[2]);
                let lhs = m
                    .compose(&f[0], &m.tensor(&f[1], &m.identity(x)))
                    .and_then(|h| m.fix(x, a2, &h));
                let rhs = m.fix(x, a, &f[0]).and_then(|fx| m.compose(&fx, &f[1]));
                t.equal(m, "naturality (parameter)", || inputs_json::<M>(o, f), lhs, rhs);
            },
        ),
        // A, X, X'; f: A×X → X', k: X' → X
        Law::new(
            "naturality (dinatural)",
            3,
            |m: &M, o: &[M::Obj]| {
                vec![
                    (m.tensor_obj(&o[0], &o[1]), o[2].clone()),
                    (o[2].clone(), o[1].clone()),
                ]
            },
            |m: &M, o, f, t| {
                let (a, x, x2) = (&o[0], &o[1], &o[2]);
                let (ff, k) = (&f[0], &f[1]);
                let lhs = m.compose(k, ff).and_then(|h| m.fix(x, a, &h));
                let rhs = m
                    .compose(ff, &m.tensor(&m.identity(a), k))
                    .and_then(|h| m.fix(x2, a, &h))
                    .and_then(|fx| m.compose(k, &fx));
                t.equal(m, "naturality (dinatural)", || inputs_json::<M>(o, f), lhs, rhs);
            },
        ),
        // A, X, Y; f: A×(X×Y) → X, g: A×(X×Y) → Y
        Law::new(
            "bekic",
            3,
            |m: &M, o: &[M::Obj]| {
                let dom = m.tensor_obj(&o[0], &m.tensor_obj(&o[1], &o[2]));
                vec![(dom.clone(), o[1].clone()), (dom, o[2].clone())]
            },
            |m: &M, o, f, t| {
                let (a, x, y) = (&o[0], &o[1], &o[2]);
                let rhs = bekic_rhs(m, a, x, y, &f[0], &f[1]);
                let lhs = m
                    .pair(&f[0], &f[1])
                    .and_then(|fg| m.fix(&m.tensor_obj(x, y), a, &fg));
                t.equal(m, "bekic", || inputs_json::<M>(o, f), lhs, rhs);
            },
        ),
    ]
}

/// `⟨π₁, Fix^Y_{A×X}(g∘α⁻¹)⟩ ∘ ⟨1_A, Fix^X_A(f∘α⁻¹∘⟨1_{A×X}, Fix^Y_{A×X}(g∘α⁻¹)⟩)⟩`.
pub fn bekic_rhs<M: Conway + ?Sized>(
    m: &M,
    a: &M::Obj,
    x: &M::Obj,
    y: &M::Obj,
    f: &M::Mor,
    g: &M::Mor,
) -> Result<M::Mor> {
    let ax = m.tensor_obj(a, x);
    let inner_fix = m.fix(y, &ax, &m.compose(g, &m.assoc_inv(a, x, y))?)?;
    let to_axy = m.pair(&m.identity(&ax), &inner_fix)?;
    let f_body = m.chain(&[to_axy, m.assoc_inv(a, x, y), f.clone()])?;
    let outer = m.fix(x, a, &f_body)?;
    let first = m.pair(&m.identity(a), &outer)?;
    let second = m.pair(&m.proj1(a, x), &inner_fix)?;
    m.compose(&second, &first)
}

pub fn check_conway_axioms<M: Conway + ?Sized>(model: &M, budget: &CaseBudget) -> CheckReport {
    run_laws(model, budget, "conway axioms", &conway_laws::<M>())
}

/// `Tr → Fix → Tr` and `Fix → Tr → Fix`: the Conway operator induced by the
/// model's trace induces the trace back, and vice versa.
pub fn check_conway_trace_round_trips<M: Conway + ?Sized>(model: &M, budget: &CaseBudget) -> CheckReport {
    let laws: Vec<Law<'_, M>> = vec![
        // A, B, X; f: A×X → B×X
        Law::new(
            "trace, fix, trace",
            3,
            |m: &M, o: &[M::Obj]| vec![(m.tensor_obj(&o[0], &o[2]), m.tensor_obj(&o[1], &o[2]))],
            |m: &M, o, f, t| {
                let (a, b, x) = (&o[0], &o[1], &o[2]);
                let rhs = (|| {
                    let inner = m.compose(&m.proj1(b, x), &f[0])?;
                    let fixed = fix_from_trace(m, x, a, &inner)?;
                    m.chain(&[m.pair(&m.identity(a), &fixed)?, f[0].clone(), m.proj0(b, x)])
                })();
                t.equal(m, "trace, fix, trace", || inputs_json::<M>(o, f), m.trace(x, a, b, &f[0]), rhs);
            },
        ),
        // A, X; g: A×X → X
        Law::new(
            "fix, trace, fix",
            2,
            |m: &M, o: &[M::Obj]| vec![(m.tensor_obj(&o[0], &o[1]), o[1].clone())],
            |m: &M, o, f, t| {
                let (a, x) = (&o[0], &o[1]);
                let rhs = m.pair(&f[0], &f[0]).and_then(|d| trace_from_fix(m, x, a, x, &d));
                t.equal(m, "fix, trace, fix", || inputs_json::<M>(o, f), m.fix(x, a, &f[0]), rhs);
            },
        ),
    ];
    run_laws(model, budget, "conway round trips", &laws)
}

/// The model's trace against the cap/cup composite.
pub fn check_compact_trace_agreement<M: Compact + ?Sized>(model: &M, budget: &CaseBudget) -> CheckReport {
    let law = Law::new(
        "trace equals compact composite",
        3,
        |m: &M, o: &[M::Obj]| vec![(m.tensor_obj(&o[0], &o[2]), m.tensor_obj(&o[1], &o[2]))],
        |m: &M, o, f, t| {
            let (a, b, x) = (&o[0], &o[1], &o[2]);
            t.equal(
                m,
                "trace equals compact composite",
                || inputs_json::<M>(o, f),
                m.trace(x, a, b, &f[0]),
                compact_trace(m, x, a, b, &f[0]),
            );
        },
    );
    run_laws(model, budget, "compact trace", &[law])
}

pub use report::fact;
