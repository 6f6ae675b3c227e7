use std::fmt::Write;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::EngineStats;
use crate::poly::ProblemParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub params: ProblemParams,
    pub checks: Vec<Check>,
    pub engine: EngineSummary,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EngineSummary {
    pub pairs: usize,
    pub reductions: usize,
    pub max_degree: u32,
}

/// Result of one check body. A failure always carries a witness; a pass
/// may carry one too (for instance the nonzero normal form showing that a
/// polynomial is outside an ideal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub pass: bool,
    pub witness: Option<String>,
}

impl Finding {
    pub fn pass() -> Self {
        Finding { pass: true, witness: None }
    }

    pub fn pass_with(witness: String) -> Self {
        Finding { pass: true, witness: Some(witness) }
    }

    pub fn fail(witness: String) -> Self {
        Finding { pass: false, witness: Some(witness) }
    }

    /// Passes when `missing` is empty, otherwise fails listing it.
    pub fn expect_empty(missing: &[String]) -> Self {
        if missing.is_empty() {
            Finding::pass()
        } else {
            Finding::fail(missing.join("\n"))
        }
    }
}

pub type Outcome = Result<Finding>;

impl VerificationReport {
    pub fn new(params: ProblemParams) -> Self {
        VerificationReport {
            schema: 1,
            params,
            checks: Vec::new(),
            engine: EngineSummary::default(),
        }
    }

    pub fn absorb(&mut self, stats: &EngineStats) {
        self.engine.pairs += stats.pairs;
        self.engine.reductions += stats.reductions;
        self.engine.max_degree = self.engine.max_degree.max(stats.max_degree);
    }

    /// Runs `body` and records its verdict. A budget overrun is recorded as
    /// inconclusive; any other error is returned.
    pub fn run(&mut self, name: &str, body: impl FnOnce(&mut Self) -> Outcome) -> Result<Verdict> {
        let start = Instant::now();
        let (verdict, witness) = match body(self) {
            Ok(f) if f.pass => (Verdict::Pass, f.witness),
            Ok(f) => (Verdict::Fail, f.witness),
            Err(Error::BudgetExceeded) => (Verdict::Inconclusive, Some("inconclusive: budget".to_string())),
            Err(e) => return Err(e),
        };
        self.checks.push(Check {
            name: name.to_string(),
            verdict,
            witness,
            elapsed_ms: start.elapsed().as_millis(),
        });
        Ok(verdict)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Fail beats inconclusive beats pass.
    pub fn verdict(&self) -> Verdict {
        let vs: Vec<Verdict> = self.checks.iter().map(|c| c.verdict).collect();
        if vs.contains(&Verdict::Fail) {
            Verdict::Fail
        } else if vs.contains(&Verdict::Inconclusive) {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check, then the engine counters. Timings are left out
    /// so the text form is stable across runs.
    pub fn to_text(&self) -> String {
        let p = self.params;
        let mut out = format!(
            "params {},{},{},{},{},{}\n",
            p.m, p.n, p.s1, p.t1, p.s2, p.t2
        );
        for c in &self.checks {
            let v = match c.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Inconclusive => "inconclusive",
            };
            writeln!(out, "{v} {}", c.name).unwrap();
            if let Some(w) = &c.witness {
                for line in w.lines() {
                    writeln!(out, "    {line}").unwrap();
                }
            }
        }
        writeln!(
            out,
            "engine pairs={} reductions={} max_degree={}",
            self.engine.pairs, self.engine.reductions, self.engine.max_degree
        )
        .unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_json() {
        let r = VerificationReport::new(ProblemParams::new(2, 2, 2, 2, 2, 2).unwrap());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["checks"], serde_json::json!([]));
        assert_eq!(v["params"]["m"], 2);
        assert_eq!(r.verdict(), Verdict::Pass);
    }

    #[test]
    fn verdict_precedence() {
        let mut r = VerificationReport::new(ProblemParams::new(2, 2, 2, 2, 2, 2).unwrap());
        r.run("a", |_| Ok(Finding::pass())).unwrap();
        r.run("b", |_| Err(Error::BudgetExceeded)).unwrap();
        assert_eq!(r.verdict(), Verdict::Inconclusive);
        r.run("c", |_| Ok(Finding::fail("x[1,1]".into()))).unwrap();
        assert_eq!(r.verdict(), Verdict::Fail);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["checks"][2]["witness"], "x[1,1]");
        assert!(v["checks"][0].get("witness").is_none());
        assert!(r.run("d", |_| Err(Error::NotReduced)).is_err());
    }
}
