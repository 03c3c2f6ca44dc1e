//! Pass/fail certificates with witnesses, rendered as JSON as
//! `{"point" | "line" | "identity" | "claim": ..., "checks": [{name, status, witness}]}`.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, witness: Option<String>) -> Self {
        Self {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    Point(String),
    Line(String),
    Identity(String),
    Claim(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub subject: Subject,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn new(subject: Subject) -> Self {
        Self {
            subject,
            checks: Vec::new(),
        }
    }

    pub fn check(mut self, name: impl Into<String>, ok: bool, witness: Option<String>) -> Self {
        self.checks.push(Check::new(name, ok, witness));
        self
    }

    pub fn push(&mut self, name: impl Into<String>, ok: bool, witness: Option<String>) {
        self.checks.push(Check::new(name, ok, witness));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_subject_key_and_checks() {
        let c = Certificate::new(Subject::Point("(0,1,1,1)".into()))
            .check("F = 0", true, None)
            .check("F_x = 0", false, Some("3".into()));
        assert!(!c.passed());
        assert_eq!(c.failures().count(), 1);
        assert_eq!(
            c.to_json(),
            r#"{"point":"(0,1,1,1)","checks":[{"name":"F = 0","status":"pass","witness":null},{"name":"F_x = 0","status":"fail","witness":"3"}]}"#
        );
        let back: Certificate = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }
}
