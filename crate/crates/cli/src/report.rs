use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use bkr_core::{Method, QueryStats, SignAssignment};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Quantifier {
    Forall,
    Exists,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum MethodChoice {
    #[default]
    Bkr,
    Naive,
    /// Run both methods and fail on any divergence.
    Both,
}

impl MethodChoice {
    pub fn methods(self) -> &'static [Method] {
        match self {
            MethodChoice::Bkr => &[Method::Bkr],
            MethodChoice::Naive => &[Method::Naive],
            MethodChoice::Both => &[Method::Bkr, Method::Naive],
        }
    }
}

pub fn method_name(method: Method) -> &'static str {
    match method {
        Method::Bkr => "bkr",
        Method::Naive => "naive",
    }
}

/// Summary of one command run. `tarski_queries` maps each method that ran
/// to its query count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub verdict: Option<bool>,
    pub quantifier: Option<Quantifier>,
    pub method: MethodChoice,
    pub consistent_sign_count: usize,
    pub tarski_queries: BTreeMap<String, u64>,
    pub factor_count: usize,
    pub max_factor_degree: usize,
    pub wall_time_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignments: Option<Vec<Vec<i8>>>,
    #[serde(skip)]
    pub details: BTreeMap<String, QueryStats>,
}

/// Assembles a report from the per-method statistics of a completed run.
/// Verdict, quantifier and the assignment listing are left for the caller.
pub fn report_stats(
    method: MethodChoice,
    runs: &[(Method, QueryStats)],
    factor_degrees: &[usize],
    assignments: &[SignAssignment],
    elapsed: Duration,
) -> RunReport {
    RunReport {
        verdict: None,
        quantifier: None,
        method,
        consistent_sign_count: assignments.len(),
        tarski_queries: runs
            .iter()
            .map(|(m, s)| (method_name(*m).to_string(), s.tarski_query_count))
            .collect(),
        factor_count: factor_degrees.len(),
        max_factor_degree: factor_degrees.iter().copied().max().unwrap_or(0),
        wall_time_ms: elapsed.as_millis() as u64,
        assignments: None,
        details: runs.iter().map(|(m, s)| (method_name(*m).to_string(), *s)).collect(),
    }
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self, stats: bool) -> String {
        let mut out = String::new();
        if let Some(verdict) = self.verdict {
            writeln!(out, "{verdict}").unwrap();
        }
        if let Some(assignments) = &self.assignments {
            for a in assignments {
                let signs: Vec<String> = a.iter().map(|&s| sign_text(s).to_string()).collect();
                writeln!(out, "({})", signs.join(", ")).unwrap();
            }
        }
        if stats {
            writeln!(out, "consistent sign assignments: {}", self.consistent_sign_count).unwrap();
            writeln!(out, "factors: {} (max degree {})", self.factor_count, self.max_factor_degree).unwrap();
            for (method, s) in &self.details {
                writeln!(
                    out,
                    "{method}: {} Tarski queries, max intermediate degree {}, max coefficient bits {}",
                    s.tarski_query_count, s.max_intermediate_degree, s.max_coefficient_bitsize
                )
                .unwrap();
            }
            writeln!(out, "time: {} ms", self.wall_time_ms).unwrap();
        }
        out
    }
}

fn sign_text(s: i8) -> &'static str {
    match s {
        1 => "+1",
        0 => "0",
        _ => "-1",
    }
}
