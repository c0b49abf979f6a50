//! Verification suites: each returns a flat list of checks with expected and
//! actual values rendered as strings.

use std::fmt::Display;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    /// Where the check is computed, as a module path.
    #[serde(rename = "ref")]
    pub loc: String,
}

impl Check {
    /// Passes iff the rendered values agree.
    pub fn eq(id: impl Into<String>, expected: impl Display, actual: impl Display, loc: &str) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        Self::cond(id, expected, actual, pass, loc)
    }

    pub fn cond(id: impl Into<String>, expected: impl Display, actual: impl Display, pass: bool, loc: &str) -> Self {
        Check {
            id: id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            expected: expected.to_string(),
            actual: actual.to_string(),
            loc: loc.to_string(),
        }
    }

    /// A check whose computation raised an error.
    pub fn error(id: impl Into<String>, expected: impl Display, err: impl Display, loc: &str) -> Self {
        Self::cond(id, expected, format!("error: {err}"), false, loc)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn line(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        format!("[{tag}] {} expected={} actual={} ({})", self.id, self.expected, self.actual, self.loc)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub duration_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

mod suites;

use std::str::FromStr;
use std::time::Instant;

use crate::error::{Error, Result};

/// Suites in their fixed report order.
pub const SUITES: [&str; 10] =
    ["golay", "leech", "embedding", "curves", "picard", "pencils", "weber", "walls", "generators", "reduce"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Golay,
    Leech,
    Embedding,
    Curves,
    Picard,
    Pencils,
    Weber,
    Walls,
    Generators,
    Reduce,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "golay" => Suite::Golay,
            "leech" => Suite::Leech,
            "embedding" => Suite::Embedding,
            "curves" => Suite::Curves,
            "picard" => Suite::Picard,
            "pencils" => Suite::Pencils,
            "weber" => Suite::Weber,
            "walls" => Suite::Walls,
            "generators" => Suite::Generators,
            "reduce" => Suite::Reduce,
            "all" => Suite::All,
            _ => return Err(Error::UnknownName(format!("suite {s}"))),
        })
    }
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            s => SUITES[s as usize],
        }
    }

    pub fn checks(self, seed: u64) -> Vec<Check> {
        match self {
            Suite::Golay => suites::golay(),
            Suite::Leech => suites::leech(seed),
            Suite::Embedding => suites::embedding(),
            Suite::Curves => suites::curves(),
            Suite::Picard => suites::picard_suite(),
            Suite::Pencils => suites::pencils_suite(),
            Suite::Weber => suites::weber_suite(),
            Suite::Walls => suites::walls_suite(),
            Suite::Generators => suites::generators_suite(),
            Suite::Reduce => suites::reduce_suite(seed),
            Suite::All => SUITES.iter().flat_map(|s| s.parse::<Suite>().expect("known suite").checks(seed)).collect(),
        }
    }
}

/// Runs a suite; `timing` false reports a duration of zero so that reports
/// are byte-identical across runs.
pub fn run(suite: Suite, seed: u64, timing: bool) -> Report {
    let start = Instant::now();
    let checks = suite.checks(seed);
    let duration_ms = if timing { start.elapsed().as_millis() as u64 } else { 0 };
    Report { suite: suite.name().to_string(), checks, duration_ms }
}
