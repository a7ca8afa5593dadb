//! Pass/fail/skip records for checked identities.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skip,
}

impl ClaimStatus {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::Skip => "skip",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub status: ClaimStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub found: Option<Value>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Claim {
    pub fn new(id: &str, status: ClaimStatus) -> Self {
        Claim {
            id: id.to_string(),
            status,
            expected: None,
            found: None,
            detail: String::new(),
        }
    }

    pub fn check(id: &str, ok: bool) -> Self {
        Self::new(id, ClaimStatus::from_bool(ok))
    }

    pub fn skip(id: &str, reason: impl Into<String>) -> Self {
        Self::new(id, ClaimStatus::Skip).with_detail(reason)
    }

    pub fn with_values(mut self, expected: Value, found: Value) -> Self {
        self.expected = Some(expected);
        self.found = Some(found);
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

/// A mismatch between a recorded reference value and the computed one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub id: String,
    pub recorded: Value,
    pub computed: Value,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(rename = "N")]
    pub characteristic: u64,
    pub p: u64,
    pub claims: Vec<Claim>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub discrepancies: Vec<Discrepancy>,
}

impl VerificationReport {
    pub fn new(characteristic: u64, p: u64) -> Self {
        VerificationReport {
            characteristic,
            p,
            claims: Vec::new(),
            discrepancies: Vec::new(),
        }
    }

    pub fn push(&mut self, claim: Claim) {
        self.claims.push(claim);
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn status(&self, id: &str) -> Option<ClaimStatus> {
        self.claim(id).map(|c| c.status)
    }

    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != ClaimStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.status == ClaimStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("N = {}, p = {}\n", self.characteristic, self.p);
        for c in &self.claims {
            out.push_str(&format!("  {:<18} {}", c.id, c.status.as_str()));
            if let (Some(e), Some(f)) = (&c.expected, &c.found) {
                let (e, f) = (e.to_string(), f.to_string());
                if e == f && e.len() > 60 {
                    out.push_str(&format!("  expected = found ({} chars)", e.len()));
                } else {
                    out.push_str(&format!("  expected {e} found {f}"));
                }
            }
            if !c.detail.is_empty() {
                out.push_str(&format!("  ({})", c.detail));
            }
            out.push('\n');
        }
        for d in &self.discrepancies {
            out.push_str(&format!(
                "  discrepancy {}: recorded {} computed {}\n",
                d.id, d.recorded, d.computed
            ));
        }
        out
    }
}
