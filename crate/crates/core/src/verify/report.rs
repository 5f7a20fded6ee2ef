//! Check reports and their JSON form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::Delta;
use crate::rep::{module_hash, RepModule};

/// Version of the JSON report layout.
pub const SCHEMA: u32 = 1;

/// The available checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckId {
    /// Restriction of the `GL_n × GL_n` functional to the `τ_{ℓ⁻}` copy.
    Disfin,
    /// `O(n) × O(n)`-distinguished `τ_l`.
    Diso,
    /// `GL_n × GL_n`-distinguished `F_μ`.
    Disgl,
    /// Multiplicity and size of the extremal `O(2n)`-type of `F_μ`.
    Extremal,
    /// `η_O`, the Gram pairing, and the `O(n) × O(n)` character of `∧^{p₀}(h/c)`.
    Jtau,
    /// Parity decomposition of the triple composition.
    Nonv,
    /// `φ ⊗ φ` on the invariant line of `τ ⊗ τ`.
    Distt,
    /// Functionals do not vanish on the highest-weight space.
    Highest0,
    /// Bottom-layer weights and the nonvanishing of the projected lowest vector.
    Nonvb,
}

impl CheckId {
    pub const ALL: [CheckId; 9] = [
        CheckId::Disfin,
        CheckId::Diso,
        CheckId::Disgl,
        CheckId::Extremal,
        CheckId::Jtau,
        CheckId::Nonv,
        CheckId::Distt,
        CheckId::Highest0,
        CheckId::Nonvb,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckId::Disfin => "disfin",
            CheckId::Diso => "diso",
            CheckId::Disgl => "disgl",
            CheckId::Extremal => "extremal",
            CheckId::Jtau => "jtau",
            CheckId::Nonv => "nonv",
            CheckId::Distt => "distt",
            CheckId::Highest0 => "highest0",
            CheckId::Nonvb => "nonvb",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<CheckId> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check '{s}'")))
    }
}

/// Parameters of one check invocation; unused fields are omitted from JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Instance {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w1: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w2: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps: Option<(u8, u8)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub delta: String,
}

pub fn delta_name(d: Delta) -> &'static str {
    match d {
        Delta::Last => "last",
        Delta::First => "first",
        Delta::Mid => "mid",
    }
}

/// One compared quantity. Claims with `asserted = false` are recorded data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub description: String,
    pub expected: String,
    pub computed: String,
    pub asserted: bool,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The hypotheses of the checked statement do not hold; nothing asserted
    /// beyond the oracle cross-checks.
    Exploratory,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub schema: u32,
    pub check_id: CheckId,
    pub instance: Instance,
    pub status: Status,
    /// `false` when the hypotheses of the checked statement are not met.
    pub hypotheses: bool,
    pub claims: Vec<Claim>,
    pub artifact_hashes: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl CheckReport {
    pub fn new(check_id: CheckId, instance: Instance) -> Self {
        CheckReport {
            schema: SCHEMA,
            check_id,
            instance,
            status: Status::Pass,
            hypotheses: true,
            claims: Vec::new(),
            artifact_hashes: BTreeMap::new(),
            timing_ms: None,
        }
    }

    /// Marks the statement's hypotheses as unmet: later [`Self::claim`]s are
    /// recorded without being asserted.
    pub fn set_hypotheses(&mut self, hold: bool) {
        self.hypotheses = hold;
        self.refresh();
    }

    fn push(&mut self, description: &str, expected: String, computed: String, asserted: bool) {
        let pass = expected == computed;
        self.claims.push(Claim { description: description.into(), expected, computed, asserted, pass });
        self.refresh();
    }

    /// A claim of the checked statement (asserted only under its hypotheses).
    pub fn claim(&mut self, description: &str, expected: impl fmt::Display, computed: impl fmt::Display) {
        let asserted = self.hypotheses;
        self.push(description, expected.to_string(), computed.to_string(), asserted);
    }

    /// A claim that holds unconditionally (oracle agreement, construction
    /// invariants).
    pub fn claim_always(&mut self, description: &str, expected: impl fmt::Display, computed: impl fmt::Display) {
        self.push(description, expected.to_string(), computed.to_string(), true);
    }

    /// Recorded data with no expectation.
    pub fn data(&mut self, description: &str, value: impl fmt::Display) {
        let v = value.to_string();
        self.claims.push(Claim { description: description.into(), expected: String::new(), computed: v, asserted: false, pass: true });
    }

    pub fn hash(&mut self, name: &str, m: &RepModule) {
        self.artifact_hashes.insert(name.into(), module_hash(m));
    }

    fn refresh(&mut self) {
        self.status = if self.claims.iter().any(|c| c.asserted && !c.pass) {
            Status::Fail
        } else if !self.hypotheses {
            Status::Exploratory
        } else {
            Status::Pass
        };
    }

    /// `true` unless an asserted claim failed.
    pub fn ok(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.asserted && !c.pass)
    }

    /// One line per report for terminal output.
    pub fn summary_line(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Exploratory => "DATA",
        };
        let inst = serde_json::to_string(&self.instance).expect("instance serializes");
        format!("{status} {} {inst}", self.check_id)
    }
}

/// Counts over a list of reports.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub cells: usize,
    pub pass: usize,
    pub fail: usize,
    pub exploratory: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Summary {
        let mut s = Summary { cells: reports.len(), ..Summary::default() };
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Exploratory => s.exploratory += 1,
            }
        }
        s
    }

    pub fn ok(&self) -> bool {
        self.fail == 0
    }
}

/// A batch of reports with its summary, as written by `verify all` and sweeps.
#[derive(Clone, Debug, Serialize)]
pub struct Batch {
    pub schema: u32,
    pub name: String,
    pub summary: Summary,
    pub reports: Vec<CheckReport>,
}

impl Batch {
    pub fn new(name: impl Into<String>, reports: Vec<CheckReport>) -> Batch {
        Batch { schema: SCHEMA, name: name.into(), summary: Summary::of(&reports), reports }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_asserted_claims() {
        let mut r = CheckReport::new(CheckId::Diso, Instance::default());
        r.claim("a", 1, 1);
        assert_eq!(r.status, Status::Pass);
        r.set_hypotheses(false);
        r.claim("b", 1, 0);
        assert_eq!(r.status, Status::Exploratory);
        r.claim_always("c", 1, 0);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn check_ids_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(c.name().parse::<CheckId>().unwrap(), c);
        }
        assert!("nope".parse::<CheckId>().is_err());
    }
}
