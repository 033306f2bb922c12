//! Executable traced symmetric monoidal categories, Hopf monads on them,
//! and law checkers with witness-carrying reports.

pub mod category;
pub mod eilenberg_moore;
pub mod error;
pub mod formats;
pub mod group;
pub mod hopf_monoid;
pub mod laws;
pub mod model_linear;
pub mod model_iter;
pub mod model_order;
pub mod monads;
pub mod report;

pub use error::{Error, Result};
pub use report::{CaseBudget, CheckReport, Verdict};
