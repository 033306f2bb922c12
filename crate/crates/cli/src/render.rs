use std::fmt::Write;

use crate::Report;

/// Pretty JSON with a trailing newline. Maps are ordered, so the output is
/// a function of the report alone.
pub fn render_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

const SHOWN_FAILURES: usize = 3;

pub fn render_text(report: &Report) -> String {
    let mut s = String::new();
    let c = &report.config;
    let _ = writeln!(s, "scenario {}: {}", report.scenario, report.note);
    let _ = writeln!(s, "seed {}, cases {}, max size {}", c.seed, c.cases, c.max_size);
    for suite in &report.suites {
        let mark = if suite.matched { "ok  " } else { "MISS" };
        let scope = if suite.exhaustive { "exhaustive" } else { "sampled" };
        let _ = writeln!(
            s,
            "[{mark}] {}: {} (expected {}), {} cases, {scope}, model {}",
            suite.name,
            suite.verdict.as_str(),
            suite.expected.as_str(),
            suite.cases_run,
            suite.model
        );
        if let Some(p) = &suite.pin {
            let _ = writeln!(s, "       pinned: {} [{}]", p.description, if p.holds { "found" } else { "missing" });
        }
        for f in &suite.facts {
            let _ = writeln!(s, "       fact {}: {}", f.name, f.holds);
        }
        for f in suite.failures.iter().take(SHOWN_FAILURES) {
            let _ = writeln!(s, "       {}: {}", f.law, f.witness);
        }
        if suite.failures_total > SHOWN_FAILURES {
            let _ = writeln!(s, "       ... {} failures in total", suite.failures_total);
        }
    }
    let _ = writeln!(s, "expected_match: {}", report.expected_match);
    s
}
