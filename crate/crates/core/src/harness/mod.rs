//! Executable hypothesis ⇒ conclusion checks over a generated corpus, with
//! vacuity accounting, and searches for counterexamples to naive
//! implications.

mod claims;
pub mod corpus;
mod report;
mod search;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub use claims::registry;
pub use corpus::{
    build_corpus, ring_ideals, Corpus, CorpusSpec, Family, ModuleEntry, ProductEntry,
};
pub use report::{render_machine, render_report_text, render_search_machine, render_search_text};
pub use search::{search_counterexample, search_targets, SearchResult, SearchTarget};

/// Violations kept per report; the full count is in `violation_count`.
pub const MAX_RECORDED_VIOLATIONS: usize = 20;

/// Tuples examined per module for claims that quantify over pairs or larger
/// tuples of submodules. Larger families are sampled at a fixed stride.
pub const TUPLE_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "VACUOUS")]
    Vacuous,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Vacuous => "VACUOUS",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub instance: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub instances: u64,
    pub hits: u64,
    /// Hits where the hypothesis only holds for a degenerate choice, such as
    /// the unit ideal standing in for a faithful multiplication ideal.
    pub trivial_hits: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    pub note: Option<String>,
}

impl CheckReport {
    pub fn nontrivial_hits(&self) -> u64 {
        self.hits - self.trivial_hits
    }
}

/// A registered claim.
pub struct Claim {
    pub id: &'static str,
    /// Verbatim fragment of the statement being checked.
    pub anchor: &'static str,
    /// The hypothesis filter as applied to finite instances.
    pub hypothesis: &'static str,
    /// Which objects an instance binds.
    pub shape: &'static str,
    /// Printed with every report of this claim.
    pub note: Option<&'static str>,
    pub(crate) run: fn(&Corpus, &mut Tally) -> Result<()>,
}

/// Counts instances and hypothesis hits and collects violations.
#[derive(Debug, Default)]
pub struct Tally {
    instances: u64,
    hits: u64,
    trivial: u64,
    violation_count: u64,
    violations: Vec<Violation>,
}

impl Tally {
    /// Records one instance. When `hypothesis` holds, `conclusion` runs and
    /// returns a description of the failure, if any.
    pub(crate) fn case(
        &mut self,
        hypothesis: bool,
        instance: impl FnOnce() -> String,
        conclusion: impl FnOnce() -> Result<Option<String>>,
    ) -> Result<()> {
        self.case_with(hypothesis, false, instance, conclusion)
    }

    pub(crate) fn case_with(
        &mut self,
        hypothesis: bool,
        trivial: bool,
        instance: impl FnOnce() -> String,
        conclusion: impl FnOnce() -> Result<Option<String>>,
    ) -> Result<()> {
        self.instances += 1;
        if !hypothesis {
            return Ok(());
        }
        self.hits += 1;
        if trivial {
            self.trivial += 1;
        }
        if let Some(witness) = conclusion()? {
            self.violation_count += 1;
            if self.violations.len() < MAX_RECORDED_VIOLATIONS {
                self.violations.push(Violation {
                    instance: instance(),
                    witness,
                });
            }
        }
        Ok(())
    }

    /// An equivalence instance: always a hit, violated when the sides differ.
    pub(crate) fn equiv(
        &mut self,
        instance: impl FnOnce() -> String,
        sides: &[(&str, bool)],
    ) -> Result<()> {
        self.case(true, instance, || {
            let first = sides[0].1;
            Ok(if sides.iter().all(|s| s.1 == first) {
                None
            } else {
                Some(
                    sides
                        .iter()
                        .map(|(name, v)| format!("{name}={v}"))
                        .collect::<Vec<_>>()
                        .join(", "),
                )
            })
        })
    }
}

pub fn find_claim(id: &str) -> Result<&'static Claim> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

fn evaluate(claim: &Claim, corpus: &Corpus) -> CheckReport {
    let mut tally = Tally::default();
    let outcome = (claim.run)(corpus, &mut tally);
    let mut notes: Vec<String> = claim.note.map(|n| n.to_string()).into_iter().collect();
    let status = match &outcome {
        Err(e) => {
            notes.push(format!("evaluation error: {e}"));
            Status::Fail
        }
        Ok(()) if tally.violation_count > 0 => Status::Fail,
        Ok(()) if tally.hits == tally.trivial => {
            if tally.hits > 0 {
                notes.push(format!("only {} trivial hits", tally.trivial));
            }
            Status::Vacuous
        }
        Ok(()) => Status::Pass,
    };
    CheckReport {
        id: claim.id.to_string(),
        anchor: claim.anchor.to_string(),
        status,
        instances: tally.instances,
        hits: tally.hits,
        trivial_hits: tally.trivial,
        violation_count: tally.violation_count,
        violations: tally.violations,
        note: if notes.is_empty() {
            None
        } else {
            Some(notes.join("; "))
        },
    }
}

pub fn check_claim(id: &str, corpus: &Corpus) -> Result<CheckReport> {
    Ok(evaluate(find_claim(id)?, corpus))
}

/// Runs the given claims in parallel; reports come back in the order of
/// `ids`.
pub fn check_claims(ids: &[&str], corpus: &Corpus) -> Result<Vec<CheckReport>> {
    let claims: Vec<&Claim> = ids.iter().map(|id| find_claim(id)).collect::<Result<_>>()?;
    Ok(claims.par_iter().map(|c| evaluate(c, corpus)).collect())
}

/// Every registered claim, in registry order.
pub fn run_all(corpus: &Corpus) -> Vec<CheckReport> {
    registry().par_iter().map(|c| evaluate(c, corpus)).collect()
}

/// Exit status of a run: nonzero iff some claim failed.
pub fn any_failed(reports: &[CheckReport]) -> bool {
    reports.iter().any(|r| r.status == Status::Fail)
}

/// Indices `0..total` thinned to at most `cap` at a fixed stride.
pub(crate) fn sample(total: usize, cap: usize) -> impl Iterator<Item = usize> {
    let take = total.min(cap);
    (0..take).map(move |i| if total <= cap { i } else { i * total / take })
}
