//! The two bimonoid structures on `Σ = {⊥ ≤ ⊤}` and the monads `Σ×−`
//! they induce on pointed posets.

use serde::Serialize;

use super::canonical_cartesian_bimonad;
use super::poset::{MonotoneMap, PosetModel, PosetObj};
use crate::category::{Cartesian, Conway, Model};
use crate::eilenberg_moore::{algebra_tensor, check_traced_monad, check_traced_via_fix_against, is_algebra_morphism, TAlgebra};
use crate::error::{Error, Result};
use crate::hopf_monoid::{antipode_search, check_module, induced_monad, validate_hopf_monoid, HopfMonoidData};
use crate::monads::{check_bimonad_laws, BimonadBundle};
use crate::report::{to_json, CaseBudget, CheckReport};

pub const BOT: usize = 0;
pub const TOP: usize = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SigmaOp {
    /// `∧` with unit `⊤`.
    Meet,
    /// `∨` with unit `⊥`.
    Join,
}

impl SigmaOp {
    fn symbol(self) -> &'static str {
        match self {
            SigmaOp::Meet => "Σ∧",
            SigmaOp::Join => "Σ∨",
        }
    }
}

/// `Σ` with the chosen monoid and the diagonal comonoid. The antipode slot
/// holds the identity, which is only a candidate: neither structure has an
/// antipode.
pub fn sigma_monoid(model: &PosetModel, op: SigmaOp) -> HopfMonoidData<PosetModel> {
    let s = PosetObj::sigma();
    let ss = PosetObj::prod(&s, &s);
    let mult = MonotoneMap {
        dom: ss,
        cod: s.clone(),
        table: (0..4)
            .map(|k| match op {
                SigmaOp::Meet => (k / 2).min(k % 2),
                SigmaOp::Join => (k / 2).max(k % 2),
            })
            .collect(),
    };
    let unit_elem = match op {
        SigmaOp::Meet => TOP,
        SigmaOp::Join => BOT,
    };
    HopfMonoidData {
        name: op.symbol().into(),
        carrier: s.clone(),
        mult,
        unit: MonotoneMap::constant(&PosetObj::unit(), &s, unit_elem),
        comult: model.diagonal(&s),
        counit: model.terminal_map(&s),
        antipode: model.identity(&s),
        modules: None,
    }
}

/// `Σ×−` with the canonical Cartesian comonoidal structure.
pub fn sigma_bimonad(model: &PosetModel, op: SigmaOp) -> BimonadBundle<PosetModel> {
    let mut monad = induced_monad(&sigma_monoid(model, op));
    monad.name = format!("{}×−", op.symbol());
    canonical_cartesian_bimonad(monad)
}

/// `(Σ, ∧)` or `(Σ, ∨)` acting on itself.
pub fn regular_module(model: &PosetModel, op: SigmaOp) -> TAlgebra<PosetModel> {
    let d = sigma_monoid(model, op);
    TAlgebra {
        carrier: d.carrier,
        action: d.mult,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SierpinskiMeet {
    pub monoid: CheckReport,
    pub bimonad: CheckReport,
    pub traced: CheckReport,
    pub via_fix: CheckReport,
    pub regular_module_ok: bool,
    /// Every monotone `S: Σ → Σ` with whether it satisfies the antipode laws.
    pub antipode_candidates: Vec<(MonotoneMap, bool)>,
}

impl SierpinskiMeet {
    pub fn antipode_found(&self) -> bool {
        self.antipode_candidates.iter().any(|(_, ok)| *ok)
    }
}

pub fn sierpinski_meet(model: &PosetModel, budget: &CaseBudget) -> Result<SierpinskiMeet> {
    let d = sigma_monoid(model, SigmaOp::Meet);
    let b = sigma_bimonad(model, SigmaOp::Meet);
    let traced = check_traced_monad(model, &b, budget);
    let via_fix = check_traced_via_fix_against(model, &b, budget, &traced);
    Ok(SierpinskiMeet {
        monoid: validate_hopf_monoid(model, &d),
        bimonad: check_bimonad_laws(model, &b, budget),
        traced,
        via_fix,
        regular_module_ok: check_module(model, &d, &regular_module(model, SigmaOp::Meet)).is_ok(),
        antipode_candidates: antipode_search(model, &d)?,
    })
}

/// `Fix^Σ_Σ` of the projection `Σ×Σ → Σ` onto the fed-back factor, for the
/// regular `Σ∨`-module, evaluated on both sides of the module-morphism
/// equation at `(⊤, ⊤)`.
#[derive(Clone, Debug, Serialize)]
pub struct JoinWitness {
    pub projection: MonotoneMap,
    pub projection_is_module_morphism: bool,
    pub fixed_point: MonotoneMap,
    pub input: String,
    /// `Fix(π)(⊤ ∨ ⊤)`.
    pub lhs: String,
    /// `⊤ ∨ Fix(π)(⊤)`.
    pub rhs: String,
}

pub fn join_witness(model: &PosetModel) -> Result<JoinWitness> {
    let b = sigma_bimonad(model, SigmaOp::Join);
    let reg = regular_module(model, SigmaOp::Join);
    let s = &reg.carrier;
    let src = algebra_tensor(model, &b, &reg, &reg)?;
    let projection = model.proj1(s, s);
    let premise = is_algebra_morphism(model, &b.monad, &src, &reg, &projection)?;
    let fixed_point = model.fix(s, s, &projection)?;
    let lhs = model.compose(&fixed_point, &reg.action)?;
    let rhs = model.compose(&reg.action, &b.monad.t_mor(model, &fixed_point)?)?;
    let input = "(⊤,⊤)".to_string();
    let at = |f: &MonotoneMap| f.at(&input).ok_or_else(|| Error::validation("witness", "no element (⊤,⊤)"));
    Ok(JoinWitness {
        projection,
        projection_is_module_morphism: premise,
        fixed_point,
        lhs: at(&lhs)?,
        rhs: at(&rhs)?,
        input,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SierpinskiJoin {
    pub bimonad: CheckReport,
    pub traced: CheckReport,
    pub via_fix: CheckReport,
    pub witness: JoinWitness,
    /// The checker's own failure list contains the instance behind `witness`.
    pub witness_found_by_checker: bool,
}

pub fn sierpinski_join(model: &PosetModel, budget: &CaseBudget) -> Result<SierpinskiJoin> {
    let b = sigma_bimonad(model, SigmaOp::Join);
    let traced = check_traced_monad(model, &b, budget);
    let via_fix = check_traced_via_fix_against(model, &b, budget, &traced);
    let witness = join_witness(model)?;
    let reg = to_json(&regular_module(model, SigmaOp::Join));
    let f = to_json(&witness.projection);
    let found = via_fix.failures_of("fixed point is an algebra morphism").any(|fl| {
        fl.inputs.get("A") == Some(&reg) && fl.inputs.get("X") == Some(&reg) && fl.inputs.get("f") == Some(&f)
    });
    Ok(SierpinskiJoin {
        bimonad: check_bimonad_laws(model, &b, budget),
        traced,
        via_fix,
        witness,
        witness_found_by_checker: found,
    })
}
