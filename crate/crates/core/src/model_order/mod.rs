//! Order-theoretic models: `ℤ≤`, finite pointed posets with the
//! least-fixed-point trace, and finite bounded posets with two traces.

mod int;
mod poset;
mod sierpinski;
mod two_traces;

use std::sync::Arc;

use crate::category::Cartesian;
use crate::monads::{BimonadBundle, MonadBundle};

pub use int::{clamp, int_poset_model, n_hopf_attempt, n_monad, IntArrow, IntObj, IntPoset};
pub use poset::{
    bounded_poset_model, fincppo_model, random_monotone, FinPoset, FixMode, MonotoneMap, PosetModel, PosetObj, Shape,
};
pub use sierpinski::{
    join_witness, regular_module, sierpinski_join, sierpinski_meet, sigma_bimonad, sigma_monoid, JoinWitness,
    SierpinskiJoin, SierpinskiMeet, SigmaOp, BOT, TOP,
};
pub use two_traces::{
    bounded_poset_two_traces, check_traces_agree, copy_witness, diagonal_preservation_check, distinctness_witness,
    pointwise_model, PointwiseModel,
};

/// On a Cartesian model the comonoidal structure is forced:
/// `m_{A,B} = ⟨T(π₀), T(π₁)⟩`, `m_I = t_{T(I)}`.
pub fn canonical_cartesian_bimonad<M: Cartesian + 'static>(monad: MonadBundle<M>) -> BimonadBundle<M> {
    let (t0, t1) = (monad.clone(), monad.clone());
    BimonadBundle {
        monad,
        m: Arc::new(move |m, a, b| {
            let left = t0.t_mor(m, &m.proj0(a, b))?;
            let right = t0.t_mor(m, &m.proj1(a, b))?;
            m.pair(&left, &right)
        }),
        m_unit: Arc::new(move |m| Ok(m.terminal_map(&t1.t(m, &m.unit_object())))),
    }
}
