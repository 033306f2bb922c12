//! Check budgets and witness-carrying reports.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::category::{case_rng, CaseRng, Model};
use crate::error::Result;

/// How many cases to run, from which seed, on objects of which size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseBudget {
    pub seed: u64,
    pub cases: usize,
    pub max_object_size: usize,
    /// Quantify over every object and morphism within the size bound.
    pub exhaustive: bool,
}

impl CaseBudget {
    pub fn new(seed: u64) -> Self {
        CaseBudget {
            seed,
            cases: 100,
            max_object_size: 4,
            exhaustive: false,
        }
    }

    pub fn cases(mut self, cases: usize) -> Self {
        self.cases = cases.max(1);
        self
    }

    pub fn max_size(mut self, size: usize) -> Self {
        self.max_object_size = size;
        self
    }

    pub fn exhaustive(mut self) -> Self {
        self.exhaustive = true;
        self
    }

    pub fn rng(&self, case: usize) -> CaseRng {
        case_rng(self.seed, case as u64)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub law: String,
    pub inputs: Value,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub model: String,
    pub cases_run: usize,
    pub verdict: Verdict,
    pub exhaustive: bool,
    /// At most [`MAX_STORED_FAILURES`] witnesses, in case order.
    pub failures: Vec<Failure>,
    pub failures_total: usize,
    pub facts: Vec<Fact>,
}

pub const MAX_STORED_FAILURES: usize = 64;

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn fact(&self, name: &str) -> Option<bool> {
        self.facts.iter().find(|f| f.name == name).map(|f| f.holds)
    }

    pub fn failures_of(&self, law: &str) -> impl Iterator<Item = &Failure> {
        let law = law.to_string();
        self.failures.iter().filter(move |f| f.law == law)
    }
}

/// Outcome of one case (or one block of exhaustive cases).
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub total_failures: usize,
}

impl Tally {
    pub fn absorb(&mut self, other: Tally) {
        self.cases += other.cases;
        self.total_failures += other.total_failures;
        for f in other.failures {
            if self.failures.len() < MAX_STORED_FAILURES {
                self.failures.push(f);
            }
        }
    }

    pub fn fail(&mut self, law: &str, inputs: Value, lhs: Value, rhs: Value) {
        self.total_failures += 1;
        if self.failures.len() < MAX_STORED_FAILURES {
            self.failures.push(Failure {
                law: law.to_string(),
                inputs,
                lhs,
                rhs,
            });
        }
    }

    /// Records one instance of `law`; fails when the sides differ or either
    /// side could not be evaluated.
    pub fn equal<M: Model + ?Sized>(
        &mut self,
        _model: &M,
        law: &str,
        inputs: impl FnOnce() -> Value,
        lhs: Result<M::Mor>,
        rhs: Result<M::Mor>,
    ) -> bool {
        self.cases += 1;
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l == r => true,
            (l, r) => {
                self.fail(law, inputs(), side_json(&l), side_json(&r));
                false
            }
        }
    }

    /// Records one instance of a boolean law.
    pub fn holds(&mut self, law: &str, ok: bool, inputs: impl FnOnce() -> Value) -> bool {
        self.cases += 1;
        if !ok {
            self.fail(law, inputs(), Value::Null, Value::Null);
        }
        ok
    }

    /// Records an evaluation error as a failure of `law`.
    pub fn error(&mut self, law: &str, inputs: Value, err: &crate::error::Error) {
        self.cases += 1;
        self.fail(law, inputs, json!({ "error": err.to_string() }), Value::Null);
    }
}

pub fn side_json<T: Serialize>(side: &Result<T>) -> Value {
    match side {
        Ok(v) => serde_json::to_value(v).unwrap_or(Value::Null),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

pub fn to_json<T: Serialize + ?Sized>(v: &T) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

/// Runs `cases` independent seeded cases in parallel and merges in case order.
pub fn run_sampled<F>(budget: &CaseBudget, case: F) -> Tally
where
    F: Fn(&mut CaseRng, &mut Tally) + Sync + Send,
{
    let parts: Vec<Tally> = (0..budget.cases)
        .into_par_iter()
        .map(|i| {
            let mut rng = budget.rng(i);
            let mut t = Tally::default();
            case(&mut rng, &mut t);
            t
        })
        .collect();
    merge(parts)
}

/// Runs one block per item in parallel and merges in item order.
pub fn run_blocks<T, F>(items: &[T], block: F) -> Tally
where
    T: Sync,
    F: Fn(&T, &mut Tally) + Sync + Send,
{
    let parts: Vec<Tally> = items
        .par_iter()
        .map(|it| {
            let mut t = Tally::default();
            block(it, &mut t);
            t
        })
        .collect();
    merge(parts)
}

pub fn merge(parts: Vec<Tally>) -> Tally {
    let mut all = Tally::default();
    for p in parts {
        all.absorb(p);
    }
    all
}

/// Assembles a report. `exhaustive` says whether the quantifiers were
/// fully enumerated; `wanted_exhaustive` whether that was requested.
pub fn finish(
    suite: &str,
    model: String,
    tally: Tally,
    exhaustive: bool,
    wanted_exhaustive: bool,
    facts: Vec<Fact>,
) -> CheckReport {
    let verdict = if tally.total_failures > 0 {
        Verdict::Fail
    } else if wanted_exhaustive && !exhaustive {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    CheckReport {
        suite: suite.to_string(),
        model,
        cases_run: tally.cases,
        verdict,
        exhaustive,
        failures: tally.failures,
        failures_total: tally.total_failures,
        facts,
    }
}

pub fn fact(name: &str, holds: bool) -> Fact {
    Fact {
        name: name.to_string(),
        holds,
    }
}
