use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use serde_json::{json, Value};

use tracedcat::category::Model;
use tracedcat::eilenberg_moore::{
    check_trace_coherence, check_traced_monad, cocartesian_corollary_check,
    crosscheck_detailed,
};
use tracedcat::group::GroupTable;
use tracedcat::hopf_monoid::{group_algebra, induced_hopf_monad, validate_hopf_monoid, verify_representable_coherence};
use tracedcat::laws::{
    check_compact_trace_agreement, check_conway_axioms, check_conway_trace_round_trips, check_monoidal_laws,
    check_snake, check_trace_axioms,
};
use tracedcat::model_iter::{exception_bimonad, exception_hopf, pfn_model, SetObj};
use tracedcat::model_linear::{check_dual_algebras, q, Mat, RatMatrix, RepKind, RepresentationSource};
use tracedcat::model_order::{
    bounded_poset_model, bounded_poset_two_traces, check_traces_agree, copy_witness, diagonal_preservation_check,
    distinctness_witness, fincppo_model, int_poset_model, n_hopf_attempt, n_monad, sierpinski_join, sierpinski_meet,
    sigma_bimonad, FixMode, PosetModel, SigmaOp,
};
use tracedcat::monads::{
    check_bimonad_laws, check_hopf, check_monad_laws, idempotence_suite, trace_meta_check, trace_meta_report,
    BimonadBundle, HopfBundle,
};
use tracedcat::report::to_json;
use tracedcat::{CaseBudget, CheckReport, Error, Result};

use crate::loaders::load_group;
use crate::plan::{claim, has_failure, Plan};
use crate::{ConfigEcho, Report, RunConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSource {
    Cyclic(usize),
    Symmetric3,
    File(PathBuf),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bundle {
    Identity,
    N,
    SigmaMeet,
    SigmaJoin,
    QC2,
    QS3,
    PfnException,
    PfnExceptionEmpty,
    QC2Mutated,
}

const BUNDLES: [(&str, Bundle); 9] = [
    ("identity", Bundle::Identity),
    ("n", Bundle::N),
    ("sigma-meet", Bundle::SigmaMeet),
    ("sigma-join", Bundle::SigmaJoin),
    ("qc2", Bundle::QC2),
    ("qs3", Bundle::QS3),
    ("pfn-exception", Bundle::PfnException),
    ("pfn-exception-empty", Bundle::PfnExceptionEmpty),
    ("qc2-mutated", Bundle::QC2Mutated),
];

const META_BUNDLES: [Bundle; 4] = [Bundle::Identity, Bundle::N, Bundle::QC2, Bundle::QS3];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawModel {
    Mat,
    Zle,
    FinCppo,
    BoundedLfp,
    BoundedGfp,
    Pointwise,
    Pfn,
}

const LAW_MODELS: [(&str, LawModel); 7] = [
    ("mat", LawModel::Mat),
    ("zle", LawModel::Zle),
    ("fincppo", LawModel::FinCppo),
    ("bounded-lfp", LawModel::BoundedLfp),
    ("bounded-gfp", LawModel::BoundedGfp),
    ("pointwise", LawModel::Pointwise),
    ("pfn", LawModel::Pfn),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scenario {
    ZNotHopf,
    SierpinskiMeet,
    SierpinskiJoin,
    GroupAlgebra(GroupSource),
    TwoTraces,
    DiagonalNonpreservation,
    PfnException,
    Crosscheck(Bundle),
    TraceMeta(Bundle),
    Laws(LawModel),
}

fn unknown(name: &str) -> Error {
    Error::Usage(format!("unknown scenario `{name}` (see `tracedcat list`)"))
}

fn lookup<T: Copy>(table: &[(&str, T)], key: &str) -> Option<T> {
    table.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
}

fn key_of<T: PartialEq>(table: &[(&'static str, T)], v: &T) -> &'static str {
    table.iter().find(|(_, x)| x == v).map(|(k, _)| *k).unwrap_or("?")
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(name: &str) -> Result<Self> {
        let simple = match name {
            "z-not-hopf" => Some(Scenario::ZNotHopf),
            "sierpinski-meet" => Some(Scenario::SierpinskiMeet),
            "sierpinski-join" => Some(Scenario::SierpinskiJoin),
            "two-traces" => Some(Scenario::TwoTraces),
            "diagonal-nonpreservation" => Some(Scenario::DiagonalNonpreservation),
            "pfn-exception" => Some(Scenario::PfnException),
            _ => None,
        };
        if let Some(s) = simple {
            return Ok(s);
        }
        let (head, arg) = name.split_once(':').ok_or_else(|| unknown(name))?;
        match head {
            "group-algebra" => parse_group_source(arg).map(Scenario::GroupAlgebra).ok_or_else(|| unknown(name)),
            "mainthm-crosscheck" => lookup(&BUNDLES, arg).map(Scenario::Crosscheck).ok_or_else(|| unknown(name)),
            "trace-meta" => lookup(&BUNDLES, arg)
                .filter(|b| META_BUNDLES.contains(b))
                .map(Scenario::TraceMeta)
                .ok_or_else(|| unknown(name)),
            "laws" => lookup(&LAW_MODELS, arg).map(Scenario::Laws).ok_or_else(|| unknown(name)),
            _ => Err(unknown(name)),
        }
    }
}

/// `cN` (1 ≤ N ≤ 8), `s3`, or a path to a group file.
fn parse_group_source(arg: &str) -> Option<GroupSource> {
    if arg == "s3" {
        return Some(GroupSource::Symmetric3);
    }
    if let Some(n) = arg.strip_prefix('c').and_then(|n| n.parse::<usize>().ok()) {
        return (1..=8).contains(&n).then_some(GroupSource::Cyclic(n));
    }
    (arg.contains('/') || arg.contains('.')).then(|| GroupSource::File(PathBuf::from(arg)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioInfo {
    pub name: String,
    pub note: String,
    pub cases: usize,
    pub max_size: usize,
}

/// Every concrete registered scenario name, in listing order.
pub fn catalogue() -> Vec<ScenarioInfo> {
    let mut names: Vec<String> = [
        "z-not-hopf",
        "sierpinski-meet",
        "sierpinski-join",
        "group-algebra:c2",
        "group-algebra:c3",
        "group-algebra:s3",
        "two-traces",
        "diagonal-nonpreservation",
        "pfn-exception",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    names.extend(BUNDLES.iter().map(|(k, _)| format!("mainthm-crosscheck:{k}")));
    names.extend(META_BUNDLES.iter().map(|b| format!("trace-meta:{}", key_of(&BUNDLES, b))));
    names.extend(LAW_MODELS.iter().map(|(k, _)| format!("laws:{k}")));
    names
        .into_iter()
        .map(|n| {
            let s: Scenario = n.parse().expect("registered name parses");
            let (cases, max_size) = s.defaults();
            ScenarioInfo {
                note: s.note(),
                name: n,
                cases,
                max_size,
            }
        })
        .collect()
}

fn bundle_note(b: Bundle) -> &'static str {
    match b {
        Bundle::Identity => "identity monad on matrices",
        Bundle::N => "clamp-at-zero monad on the integer poset",
        Bundle::SigmaMeet => "Sierpinski meet monad on pointed posets",
        Bundle::SigmaJoin => "Sierpinski join monad on pointed posets (not Hopf)",
        Bundle::QC2 => "group algebra of C2 on matrices",
        Bundle::QS3 => "group algebra of S3 on matrices",
        Bundle::PfnException => "exception monad with one error on partial functions",
        Bundle::PfnExceptionEmpty => "exception monad with no errors on partial functions",
        Bundle::QC2Mutated => "group algebra of C2 with one fusion-inverse entry perturbed",
    }
}

impl Scenario {
    pub fn name(&self) -> String {
        match self {
            Scenario::ZNotHopf => "z-not-hopf".into(),
            Scenario::SierpinskiMeet => "sierpinski-meet".into(),
            Scenario::SierpinskiJoin => "sierpinski-join".into(),
            Scenario::GroupAlgebra(g) => format!(
                "group-algebra:{}",
                match g {
                    GroupSource::Cyclic(n) => format!("c{n}"),
                    GroupSource::Symmetric3 => "s3".into(),
                    GroupSource::File(p) => p.display().to_string(),
                }
            ),
            Scenario::TwoTraces => "two-traces".into(),
            Scenario::DiagonalNonpreservation => "diagonal-nonpreservation".into(),
            Scenario::PfnException => "pfn-exception".into(),
            Scenario::Crosscheck(b) => format!("mainthm-crosscheck:{}", key_of(&BUNDLES, b)),
            Scenario::TraceMeta(b) => format!("trace-meta:{}", key_of(&BUNDLES, b)),
            Scenario::Laws(m) => format!("laws:{}", key_of(&LAW_MODELS, m)),
        }
    }

    pub fn note(&self) -> String {
        match self {
            Scenario::ZNotHopf => {
                "integer poset with the clamp-at-zero monad: traced and idempotent, but the fusion operator has no inverse".into()
            }
            Scenario::SierpinskiMeet => "Sierpinski meet monoid: traced monad with no antipode".into(),
            Scenario::SierpinskiJoin => {
                "Sierpinski join monoid: bimonad whose fixed point of the feedback projection is not a module map".into()
            }
            Scenario::GroupAlgebra(_) => {
                "group algebra Hopf monad on rational matrices: every Hopf, coherence and module-trace law".into()
            }
            Scenario::TwoTraces => "bounded posets carry distinct least and greatest fixed-point traces".into(),
            Scenario::DiagonalNonpreservation => {
                "pointwise trace on pairs of bounded posets: traced, but the diagonal does not preserve it".into()
            }
            Scenario::PfnException => "exception monad on partial functions with the iteration trace".into(),
            Scenario::Crosscheck(b) => format!("trace coherence and tracedness agree: {}", bundle_note(*b)),
            Scenario::TraceMeta(b) => format!("trace-meta equation against idempotence: {}", bundle_note(*b)),
            Scenario::Laws(m) => match m {
                LawModel::Mat => "rational matrices: monoidal, trace, snake, compact trace and dual-algebra checks",
                LawModel::Zle => "integer poset: monoidal, trace, snake and compact trace checks, exhaustive",
                LawModel::FinCppo => "finite pointed posets with the least fixed-point trace and Conway operator",
                LawModel::BoundedLfp => "finite bounded posets with the least fixed-point trace",
                LawModel::BoundedGfp => "finite bounded posets with the greatest fixed-point trace",
                LawModel::Pointwise => "pairs of bounded posets with the lfp/gfp pointwise trace",
                LawModel::Pfn => "finite sets and partial functions with the iteration trace",
            }
            .into(),
        }
    }

    /// Default `(cases, max_size)`.
    pub fn defaults(&self) -> (usize, usize) {
        match self {
            Scenario::ZNotHopf => (200, 6),
            Scenario::SierpinskiMeet | Scenario::SierpinskiJoin => (100, 3),
            Scenario::GroupAlgebra(_) => (50, 2),
            Scenario::TwoTraces | Scenario::DiagonalNonpreservation => (150, 4),
            Scenario::PfnException => (200, 2),
            Scenario::Crosscheck(b) | Scenario::TraceMeta(b) => match b {
                Bundle::N => (200, 6),
                Bundle::SigmaMeet | Bundle::SigmaJoin => (100, 3),
                Bundle::PfnException | Bundle::PfnExceptionEmpty => (200, 2),
                Bundle::Identity | Bundle::QC2 | Bundle::QS3 | Bundle::QC2Mutated => (50, 2),
            },
            Scenario::Laws(m) => match m {
                LawModel::Mat => (200, 4),
                LawModel::Zle => (200, 6),
                LawModel::Pfn => (300, 3),
                LawModel::FinCppo | LawModel::BoundedLfp | LawModel::BoundedGfp | LawModel::Pointwise => (150, 4),
            },
        }
    }

    pub fn run(&self, config: &RunConfig) -> Result<Report> {
        let (dc, ds) = self.defaults();
        let cases = config.cases.unwrap_or(dc);
        let max_size = config.max_size.unwrap_or(ds);
        let budget = CaseBudget::new(config.seed).cases(cases).max_size(max_size);
        let mut plan = Plan::default();
        match self {
            Scenario::ZNotHopf => z_not_hopf(&mut plan, &budget),
            Scenario::SierpinskiMeet => meet(&mut plan, &budget)?,
            Scenario::SierpinskiJoin => join(&mut plan, &budget)?,
            Scenario::GroupAlgebra(g) => group_scenario(&mut plan, g, &budget)?,
            Scenario::TwoTraces => two_traces(&mut plan, &budget)?,
            Scenario::DiagonalNonpreservation => diagonal(&mut plan, &budget),
            Scenario::PfnException => pfn_exception(&mut plan, &budget),
            Scenario::Crosscheck(b) => crosscheck_bundle(&mut plan, *b, &budget)?,
            Scenario::TraceMeta(b) => trace_meta(&mut plan, *b, &budget)?,
            Scenario::Laws(m) => laws(&mut plan, *m, &budget, config)?,
        }
        let expected_match = plan.suites.iter().all(|s| s.matched);
        Ok(Report {
            scenario: self.name(),
            note: self.note(),
            config: ConfigEcho {
                seed: config.seed,
                cases,
                max_size,
            },
            suites: plan.suites,
            expected_match,
        })
    }
}

// ---------------------------------------------------------------------------
// separating examples

fn z_not_hopf(plan: &mut Plan, budget: &CaseBudget) {
    let m = int_poset_model();
    let b = budget.clone().exhaustive();
    let n = n_monad();
    let h = n_hopf_attempt();
    plan.pass("monad laws", check_monad_laws(&m, &n.monad, &b));
    plan.pass("bimonad laws", check_bimonad_laws(&m, &n, &b));
    plan.pass("traced monad", check_traced_monad(&m, &n, &b));
    let hopf = check_hopf(&m, &h, &b);
    let minimal = hopf.failures_of("fusion inverse").next().map(|f| f.inputs["objects"].clone());
    plan.fail("hopf", hopf, "fusion inverse fails at objects (-2, 1) with 0 vs 1", |r| {
        has_failure(r, "fusion inverse", |i| i["objects"] == json!([-2, 1]), &json!(0), &json!(1))
    });
    plan.pass(
        "first fusion-inverse witness",
        claim("first fusion-inverse witness", &m.name(), true, json!({ "objects": minimal })),
    );
    plan.pass("idempotence", idempotence_suite(&m, &n, Some(&h), &b));
    plan.pass("trace meta", trace_meta_report(&m, &n));
}

fn meet(plan: &mut Plan, budget: &CaseBudget) -> Result<()> {
    let m = fincppo_model();
    let r = sierpinski_meet(&m, &budget.clone().exhaustive())?;
    plan.fail("hopf monoid validation", r.monoid, "antipode laws fail for the placeholder antipode", |r| {
        r.failures.iter().any(|f| f.law.contains("antipode"))
    });
    plan.pass("bimonad laws", r.bimonad);
    plan.pass("traced monad", r.traced);
    plan.pass("traced via fix", r.via_fix);
    plan.pass("regular module", claim("regular module", &m.name(), r.regular_module_ok, Value::Null));
    let found = r.antipode_candidates.iter().any(|(_, ok)| *ok);
    let searched = json!({
        "candidates": r.antipode_candidates.iter().map(|(s, ok)| json!({ "map": to_json(s), "antipode": ok })).collect::<Vec<_>>()
    });
    plan.fail(
        "antipode search",
        claim("antipode search", &m.name(), found, searched),
        "all monotone endomaps of the carrier searched, none is an antipode",
        |_| !r.antipode_candidates.is_empty(),
    );
    Ok(())
}

fn join(plan: &mut Plan, budget: &CaseBudget) -> Result<()> {
    let m = fincppo_model();
    let r = sierpinski_join(&m, &budget.clone().exhaustive())?;
    plan.pass("bimonad laws", r.bimonad);
    let w = &r.witness;
    let exact = w.projection_is_module_morphism && w.input == "(⊤,⊤)" && w.lhs == "⊥" && w.rhs == "⊤";
    let pinned = exact && r.witness_found_by_checker;
    let desc = "Fix of the feedback projection: ⊥ vs ⊤ at (⊤,⊤)";
    plan.fail("traced monad", r.traced, desc, |_| pinned);
    plan.fail("traced via fix", r.via_fix, desc, |_| pinned);
    plan.pass(
        "fixed-point witness",
        claim("fixed-point witness", &m.name(), exact, to_json(w)),
    );
    Ok(())
}

fn two_traces(plan: &mut Plan, budget: &CaseBudget) -> Result<()> {
    let (lfp, gfp) = bounded_poset_two_traces();
    for (label, m) in [("lfp", &lfp), ("gfp", &gfp)] {
        plan.pass(&format!("{label} monoidal laws"), check_monoidal_laws(m, budget));
        plan.pass(&format!("{label} trace axioms"), check_trace_axioms(m, budget));
        plan.pass(&format!("{label} conway axioms"), check_conway_axioms(m, budget));
    }
    let (lo, hi) = distinctness_witness()?;
    let (lo_v, hi_v) = (json!([["∗", "⊥"]]), json!([["∗", "⊤"]]));
    plan.fail(
        "lfp and gfp traces agree",
        check_traces_agree(budget),
        "f(∗, x) = (x, x) on Σ: ⊥-map vs ⊤-map",
        |r| {
            r.failures.first().is_some_and(|f| {
                f.inputs["morphisms"][0] == to_json(&copy_witness()) && f.lhs["table"] == lo_v && f.rhs["table"] == hi_v
            }) && to_json(&lo)["table"] == lo_v
                && to_json(&hi)["table"] == hi_v
        },
    );
    Ok(())
}

fn diagonal(plan: &mut Plan, budget: &CaseBudget) {
    let pair = tracedcat::model_order::pointwise_model();
    plan.pass("pointwise monoidal laws", check_monoidal_laws(&pair, budget));
    plan.pass("pointwise trace axioms", check_trace_axioms(&pair, budget));
    plan.fail(
        "diagonal preserves trace",
        diagonal_preservation_check(budget),
        "f(∗, x) = (x, x) on Σ",
        |r| r.failures.first().is_some_and(|f| f.inputs["f"] == to_json(&copy_witness())),
    );
}

const EXCEPTION_BIMONAD_FAILURES: [&str; 2] = ["counit (left)", "symmetry"];

fn pfn_exception(plan: &mut Plan, budget: &CaseBudget) {
    let m = pfn_model();
    let b = budget.clone().exhaustive();
    let e = SetObj::range(1);
    let bim = exception_bimonad(&e);
    let h = exception_hopf(&e);
    plan.pass("trace axioms", check_trace_axioms(&m, &b));
    plan.pass("monad laws", check_monad_laws(&m, &bim.monad, &b));
    plan.fail(
        "bimonad laws",
        check_bimonad_laws(&m, &bim, &b),
        "exactly the left counit and symmetry laws fail",
        |r| {
            let mut laws: Vec<&str> = r.failures.iter().map(|f| f.law.as_str()).collect();
            laws.sort_unstable();
            laws.dedup();
            laws == EXCEPTION_BIMONAD_FAILURES
        },
    );
    plan.pass("traced monad", check_traced_monad(&m, &bim, &b));
    plan.pass("idempotence", idempotence_suite(&m, &bim, Some(&h), &b));
    plan.pass("cocartesian corollary", cocartesian_corollary_check(&m, &h, &b));
}

fn group_source(g: &GroupSource) -> Result<(String, GroupTable)> {
    Ok(match g {
        GroupSource::Cyclic(n) => (format!("C{n}"), GroupTable::cyclic(*n)),
        GroupSource::Symmetric3 => ("S3".into(), GroupTable::symmetric3()),
        GroupSource::File(p) => {
            let name = p.file_stem().map_or_else(|| "G".into(), |s| s.to_string_lossy().into_owned());
            (name, load_group(p)?)
        }
    })
}

fn group_hopf(name: &str, g: &GroupTable) -> Result<HopfBundle<Mat>> {
    induced_hopf_monad(&Mat::new(), &group_algebra(name, g)?)
}

const DUAL_PROBES: [&[RepKind]; 4] =
    [&[RepKind::Trivial], &[RepKind::Sign], &[RepKind::Regular], &[RepKind::Trivial, RepKind::Sign]];

fn dual_report(h: &HopfBundle<Mat>, g: &GroupTable) -> CheckReport {
    let src = RepresentationSource::new(g.clone());
    let algs: Vec<_> = DUAL_PROBES.iter().map(|p| src.representation(p)).collect();
    check_dual_algebras(&Mat::new(), h, &algs)
}

fn group_scenario(plan: &mut Plan, g: &GroupSource, budget: &CaseBudget) -> Result<()> {
    let m = Mat::new();
    let (name, table) = group_source(g)?;
    let d = group_algebra(&name, &table)?;
    plan.pass("hopf monoid validation", validate_hopf_monoid(&m, &d));
    let h = induced_hopf_monad(&m, &d)?;
    plan.pass("monad laws", check_monad_laws(&m, &h.bimonad.monad, budget));
    plan.pass("bimonad laws", check_bimonad_laws(&m, &h.bimonad, budget));
    plan.pass("hopf", check_hopf(&m, &h, budget));
    plan.pass("trace coherence", check_trace_coherence(&m, &h, budget));
    plan.pass("traced monad", check_traced_monad(&m, &h.bimonad, budget));
    plan.pass("module traces", verify_representable_coherence(&m, &d, budget));
    plan.pass("dual algebras", dual_report(&h, &table));
    Ok(())
}

// ---------------------------------------------------------------------------
// crosscheck and trace-meta

/// Expected verdicts of the crosscheck's sub-suites, and of both sides.
struct Expect {
    bimonad: bool,
    hopf: bool,
    coherence: bool,
    traced: bool,
    sides: bool,
}

fn crosscheck<M: Model>(plan: &mut Plan, model: &M, h: &HopfBundle<M>, budget: &CaseBudget, e: Expect) {
    let c = crosscheck_detailed(model, h, budget);
    let sides = json!({ "trace-coherent hopf": c.coherent_hopf(), "traced hopf": c.traced_hopf() });
    let sides_ok = c.coherent_hopf() == e.sides && c.traced_hopf() == e.sides;
    plan.expect("bimonad laws", c.bimonad, e.bimonad);
    plan.expect("hopf", c.hopf, e.hopf);
    plan.expect("trace coherence", c.coherence, e.coherence);
    plan.expect("traced monad", c.traced, e.traced);
    plan.pass("verdicts agree", c.summary);
    plan.pass("registered verdicts", claim("registered verdicts", &model.name(), sides_ok, sides));
}

/// The identity monad on matrices. Its algebras are the identity actions,
/// i.e. the trivial-group representations.
fn mat_identity() -> HopfBundle<Mat> {
    let mut h = HopfBundle::identity();
    let src = RepresentationSource::new(GroupTable::cyclic(1));
    h.bimonad.monad = h.bimonad.monad.with_algebras(Arc::new(src));
    h
}

fn qc2_mutated() -> Result<HopfBundle<Mat>> {
    let h = group_hopf("C2", &GroupTable::cyclic(2))?;
    Ok(h.with_hl_inv_edit(|_, _, _, f| {
        if f.rows() == 0 {
            return f;
        }
        let mut d = f.to_dense();
        d[0][0] += q(1);
        RatMatrix::from_dense(f.rows(), f.cols(), &d)
    }))
}

fn crosscheck_bundle(plan: &mut Plan, b: Bundle, budget: &CaseBudget) -> Result<()> {
    let all = Expect {
        bimonad: true,
        hopf: true,
        coherence: true,
        traced: true,
        sides: true,
    };
    match b {
        Bundle::Identity => crosscheck(plan, &Mat::new(), &mat_identity(), budget, all),
        Bundle::QC2 => crosscheck(plan, &Mat::new(), &group_hopf("C2", &GroupTable::cyclic(2))?, budget, all),
        Bundle::QS3 => crosscheck(plan, &Mat::new(), &group_hopf("S3", &GroupTable::symmetric3())?, budget, all),
        Bundle::QC2Mutated => crosscheck(
            plan,
            &Mat::new(),
            &qc2_mutated()?,
            budget,
            Expect {
                hopf: false,
                coherence: false,
                sides: false,
                ..all
            },
        ),
        Bundle::N => crosscheck(
            plan,
            &int_poset_model(),
            &n_hopf_attempt(),
            &budget.clone().exhaustive(),
            Expect {
                hopf: false,
                coherence: false,
                sides: false,
                ..all
            },
        ),
        Bundle::SigmaMeet | Bundle::SigmaJoin => {
            let m = fincppo_model();
            let op = if b == Bundle::SigmaMeet { SigmaOp::Meet } else { SigmaOp::Join };
            let h = HopfBundle::from_fusion_search(sigma_bimonad(&m, op));
            crosscheck(
                plan,
                &m,
                &h,
                budget,
                Expect {
                    hopf: false,
                    coherence: false,
                    traced: b == Bundle::SigmaMeet,
                    sides: false,
                    ..all
                },
            );
        }
        Bundle::PfnException | Bundle::PfnExceptionEmpty => {
            let e = if b == Bundle::PfnException { SetObj::range(1) } else { SetObj::empty() };
            let m = pfn_model();
            let h = exception_hopf(&e);
            let hopf_ok = b == Bundle::PfnExceptionEmpty;
            let eb = budget.clone().exhaustive();
            crosscheck(
                plan,
                &m,
                &h,
                &eb,
                Expect {
                    bimonad: hopf_ok,
                    hopf: hopf_ok,
                    coherence: true,
                    traced: true,
                    sides: hopf_ok,
                },
            );
            plan.pass("cocartesian corollary", cocartesian_corollary_check(&m, &h, &eb));
        }
    }
    Ok(())
}

fn meta_suites<M: Model>(plan: &mut Plan, model: &M, b: &BimonadBundle<M>, h: Option<&HopfBundle<M>>, budget: &CaseBudget, holds: bool) -> Result<()> {
    let tm = trace_meta_check(model, b)?;
    plan.expect("trace meta", trace_meta_report(model, b), holds);
    let idem = idempotence_suite(model, b, h, budget);
    let idempotent = idem.fact("idempotent");
    plan.pass("idempotence", idem);
    let detail = json!({ "trace meta": tm.holds, "idempotent": idempotent });
    plan.pass(
        "trace meta iff idempotent",
        claim("trace meta iff idempotent", &model.name(), idempotent == Some(tm.holds), detail),
    );
    Ok(())
}

fn trace_meta(plan: &mut Plan, b: Bundle, budget: &CaseBudget) -> Result<()> {
    let mat = Mat::new();
    match b {
        Bundle::Identity => {
            let h = mat_identity();
            meta_suites(plan, &mat, &h.bimonad, Some(&h), budget, true)
        }
        Bundle::N => meta_suites(plan, &int_poset_model(), &n_monad(), Some(&n_hopf_attempt()), &budget.clone().exhaustive(), true),
        Bundle::QC2 => {
            let h = group_hopf("C2", &GroupTable::cyclic(2))?;
            meta_suites(plan, &mat, &h.bimonad, Some(&h), budget, false)
        }
        Bundle::QS3 => {
            let h = group_hopf("S3", &GroupTable::symmetric3())?;
            meta_suites(plan, &mat, &h.bimonad, Some(&h), budget, false)
        }
        _ => Err(unknown(&format!("trace-meta:{}", key_of(&BUNDLES, &b)))),
    }
}

// ---------------------------------------------------------------------------
// law suites

const SNAKE_DIMS: usize = 6;

fn with_posets(mut m: PosetModel, config: &RunConfig) -> Result<PosetModel> {
    for p in &config.posets {
        m = m.with_poset(p.clone())?;
    }
    Ok(m)
}

fn poset_laws(plan: &mut Plan, m: &PosetModel, budget: &CaseBudget) {
    plan.pass("monoidal laws", check_monoidal_laws(m, budget));
    plan.pass("trace axioms", check_trace_axioms(m, budget));
    plan.pass("conway axioms", check_conway_axioms(m, budget));
}

fn laws(plan: &mut Plan, lm: LawModel, budget: &CaseBudget, config: &RunConfig) -> Result<()> {
    match lm {
        LawModel::Mat => {
            let m = Mat::new();
            plan.pass("monoidal laws", check_monoidal_laws(&m, budget));
            plan.pass("trace axioms", check_trace_axioms(&m, budget));
            let snake_size = budget.max_object_size.max(SNAKE_DIMS);
            plan.pass("snake", check_snake(&m, &budget.clone().max_size(snake_size)));
            plan.pass("compact trace", check_compact_trace_agreement(&m, budget));
            for (name, g) in [("C2", GroupTable::cyclic(2)), ("S3", GroupTable::symmetric3())] {
                let h = group_hopf(name, &g)?;
                plan.pass(&format!("dual algebras {name}"), dual_report(&h, &g));
            }
        }
        LawModel::Zle => {
            let m = int_poset_model();
            let b = budget.clone().exhaustive();
            plan.pass("monoidal laws", check_monoidal_laws(&m, &b));
            plan.pass("trace axioms", check_trace_axioms(&m, &b));
            plan.pass("snake", check_snake(&m, &b));
            plan.pass("compact trace", check_compact_trace_agreement(&m, &b));
        }
        LawModel::FinCppo => {
            let m = with_posets(fincppo_model(), config)?;
            poset_laws(plan, &m, budget);
            plan.pass("conway round trips", check_conway_trace_round_trips(&m, budget));
        }
        LawModel::BoundedLfp => poset_laws(plan, &with_posets(bounded_poset_model(FixMode::Lfp), config)?, budget),
        LawModel::BoundedGfp => poset_laws(plan, &with_posets(bounded_poset_model(FixMode::Gfp), config)?, budget),
        LawModel::Pointwise => {
            let pair = tracedcat::model_order::pointwise_model();
            plan.pass("monoidal laws", check_monoidal_laws(&pair, budget));
            plan.pass("trace axioms", check_trace_axioms(&pair, budget));
        }
        LawModel::Pfn => {
            let m = pfn_model();
            plan.pass("monoidal laws", check_monoidal_laws(&m, budget));
            plan.pass("trace axioms", check_trace_axioms(&m, &budget.clone().exhaustive()));
        }
    }
    Ok(())
}
