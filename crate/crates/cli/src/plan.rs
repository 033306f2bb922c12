use serde::Serialize;
use serde_json::{json, Value};

use tracedcat::report::{finish, Fact, Tally};
use tracedcat::{CheckReport, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Pass,
    Fail,
}

impl Expectation {
    pub fn as_str(self) -> &'static str {
        match self {
            Expectation::Pass => "pass",
            Expectation::Fail => "fail",
        }
    }
}

/// A registered witness an expected failure must exhibit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pin {
    pub description: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessEntry {
    pub law: String,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub model: String,
    pub verdict: VerdictName,
    pub expected: Expectation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pin: Option<Pin>,
    pub matched: bool,
    pub cases_run: usize,
    pub exhaustive: bool,
    pub failures_total: usize,
    pub failures: Vec<WitnessEntry>,
    pub facts: Vec<Fact>,
}

impl SuiteOutcome {
    pub fn fact(&self, name: &str) -> Option<bool> {
        self.facts.iter().find(|f| f.name == name).map(|f| f.holds)
    }

    pub fn passed(&self) -> bool {
        self.verdict == VerdictName::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictName {
    Pass,
    Fail,
    Inconclusive,
}

impl VerdictName {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictName::Pass => "pass",
            VerdictName::Fail => "fail",
            VerdictName::Inconclusive => "inconclusive",
        }
    }
}

impl From<Verdict> for VerdictName {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Pass => VerdictName::Pass,
            Verdict::Fail => VerdictName::Fail,
            Verdict::Inconclusive => VerdictName::Inconclusive,
        }
    }
}

/// Collects suite outcomes in registration order.
#[derive(Default)]
pub(crate) struct Plan {
    pub suites: Vec<SuiteOutcome>,
}

impl Plan {
    fn push(&mut self, name: &str, r: CheckReport, expected: Expectation, pin: Option<Pin>) {
        let verdict = VerdictName::from(r.verdict);
        let matched = match expected {
            Expectation::Pass => verdict == VerdictName::Pass,
            Expectation::Fail => verdict == VerdictName::Fail && pin.as_ref().is_none_or(|p| p.holds),
        };
        let failures = r
            .failures
            .into_iter()
            .map(|f| WitnessEntry {
                law: f.law,
                witness: json!({ "inputs": f.inputs, "lhs": f.lhs, "rhs": f.rhs }),
            })
            .collect();
        self.suites.push(SuiteOutcome {
            name: name.to_string(),
            model: r.model,
            verdict,
            expected,
            pin,
            matched,
            cases_run: r.cases_run,
            exhaustive: r.exhaustive,
            failures_total: r.failures_total,
            failures,
            facts: r.facts,
        });
    }

    pub fn pass(&mut self, name: &str, r: CheckReport) {
        self.push(name, r, Expectation::Pass, None);
    }

    /// An expected failure whose witness `pin` must find in the report.
    pub fn fail(&mut self, name: &str, r: CheckReport, description: &str, pin: impl FnOnce(&CheckReport) -> bool) {
        let holds = pin(&r);
        let pin = Pin {
            description: description.to_string(),
            holds,
        };
        self.push(name, r, Expectation::Fail, Some(pin));
    }

    pub fn expect(&mut self, name: &str, r: CheckReport, pass: bool) {
        if pass {
            self.pass(name, r);
        } else {
            self.push(name, r, Expectation::Fail, None);
        }
    }
}

/// A one-case report for a computed proposition.
pub(crate) fn claim(suite: &str, model: &str, ok: bool, detail: Value) -> CheckReport {
    let mut t = Tally::default();
    t.cases += 1;
    if !ok {
        t.fail(suite, detail, Value::Null, Value::Null);
    }
    finish(suite, model.to_string(), t, true, false, vec![])
}

/// Any failure of `law` whose sides equal `lhs` and `rhs`.
pub(crate) fn has_failure(r: &CheckReport, law: &str, pred: impl Fn(&Value) -> bool, lhs: &Value, rhs: &Value) -> bool {
    r.failures_of(law).any(|f| pred(&f.inputs) && &f.lhs == lhs && &f.rhs == rhs)
}
