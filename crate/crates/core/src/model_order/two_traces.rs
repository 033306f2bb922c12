//! Bounded posets carry a least and a greatest fixed-point trace; the
//! product category with the pointwise trace `Tr × T̄r` is traced, but the
//! diagonal functor into it does not preserve traces.

use serde_json::json;

use super::poset::{bounded_poset_model, FixMode, MonotoneMap, PosetModel, PosetObj};
use crate::category::{diagonal_pair, Model, PairModel};
use crate::laws::{drive, inputs_json, Law};
use crate::report::{finish, CaseBudget, CheckReport, Tally};
use crate::error::Result;

pub type PointwiseModel = PairModel<PosetModel, PosetModel>;

/// The lfp-traced and gfp-traced views of the same category.
pub fn bounded_poset_two_traces() -> (PosetModel, PosetModel) {
    (bounded_poset_model(FixMode::Lfp), bounded_poset_model(FixMode::Gfp))
}

/// `𝕏×𝕏` with `Tr` on the left factor and `T̄r` on the right.
pub fn pointwise_model() -> PointwiseModel {
    let (lfp, gfp) = bounded_poset_two_traces();
    PairModel::new(lfp, gfp)
}

/// `f: I×Σ → Σ×Σ`, `f(∗, x) = (x, x)`.
pub fn copy_witness() -> MonotoneMap {
    let s = PosetObj::sigma();
    MonotoneMap {
        dom: PosetObj::prod(&PosetObj::unit(), &s),
        cod: PosetObj::prod(&s, &s),
        table: vec![0, 3],
    }
}

/// `(Tr_lfp(f), Tr_gfp(f))` for [`copy_witness`].
pub fn distinctness_witness() -> Result<(MonotoneMap, MonotoneMap)> {
    let (lfp, gfp) = bounded_poset_two_traces();
    let f = copy_witness();
    let (a, s) = (PosetObj::unit(), PosetObj::sigma());
    Ok((lfp.trace(&s, &a, &s, &f)?, gfp.trace(&s, &a, &s, &f)?))
}

fn trace_instance(m: &PosetModel, o: &[PosetObj]) -> Vec<(PosetObj, PosetObj)> {
    vec![(m.tensor_obj(&o[0], &o[2]), m.tensor_obj(&o[1], &o[2]))]
}

fn with_pinned_case(
    name: &str,
    check: impl Fn(&[PosetObj], &MonotoneMap, &mut Tally) + Sync,
    budget: &CaseBudget,
) -> CheckReport {
    let lfp = bounded_poset_model(FixMode::Lfp);
    let pinned = [PosetObj::unit(), PosetObj::sigma(), PosetObj::sigma()];
    let mut tally = Tally::default();
    check(&pinned, &copy_witness(), &mut tally);
    let law = Law::new("sampled", 3, trace_instance, |_m: &PosetModel, o, f, tl| check(o, &f[0], tl));
    let (rest, exhaustive) = drive(&lfp, budget, &[law]);
    tally.absorb(rest);
    finish(name, lfp.name(), tally, exhaustive, budget.exhaustive, vec![])
}

/// Compares `Tr_lfp(f)` with `Tr_gfp(f)`, starting with [`copy_witness`]. A
/// failure is a witness that the two traces differ.
pub fn check_traces_agree(budget: &CaseBudget) -> CheckReport {
    let (lfp, gfp) = bounded_poset_two_traces();
    with_pinned_case(
        "lfp and gfp traces agree",
        |o, f, tl| {
            let (a, b, x) = (&o[0], &o[1], &o[2]);
            tl.equal(&lfp, "lfp and gfp traces agree", || inputs_json::<PosetModel>(o, std::slice::from_ref(f)), lfp.trace(x, a, b, f), gfp.trace(x, a, b, f));
        },
        budget,
    )
}

/// `(Tr × T̄r)(Δf) = Δ(Tr f)`, starting with [`copy_witness`].
pub fn diagonal_preservation_check(budget: &CaseBudget) -> CheckReport {
    let pair = pointwise_model();
    with_pinned_case(
        "diagonal preserves trace",
        |o, f, tl| {
            let (a, b, x) = (&o[0], &o[1], &o[2]);
            let lhs = pair.trace(&(x.clone(), x.clone()), &(a.clone(), a.clone()), &(b.clone(), b.clone()), &diagonal_pair(f));
            let rhs = pair.left.trace(x, a, b, f).map(|t| diagonal_pair(&t));
            tl.equal(&pair, "diagonal preserves trace", || json!({ "objects": [a, b, x], "f": f }), lhs, rhs);
        },
        budget,
    )
}
