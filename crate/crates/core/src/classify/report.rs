//! Serializable classification reports.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SCHEMA: &str = "parab-kit/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Confirmed,
    Eliminated,
}

/// One candidate and the check that decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub candidate: String,
    pub verdict: Verdict,
    pub reason: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checked_up_to: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus_bound: Option<String>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Environment {
    pub nmax: Option<u32>,
    pub precision: Option<u32>,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub schema: String,
    pub proposition: String,
    /// Final parameter set, ascending, as `p/q` strings.
    pub parameters: Vec<String>,
    pub orders: Vec<u64>,
    pub certificates: Vec<CertificateRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub environment: Environment,
}

impl ClassificationReport {
    pub fn new(proposition: &str) -> Self {
        ClassificationReport {
            schema: SCHEMA.to_string(),
            proposition: proposition.to_string(),
            parameters: Vec::new(),
            orders: Vec::new(),
            certificates: Vec::new(),
            notes: Vec::new(),
            environment: Environment::default(),
        }
    }

    pub fn eliminated(&self) -> impl Iterator<Item = &CertificateRecord> {
        self.certificates.iter().filter(|c| c.verdict == Verdict::Eliminated)
    }

    pub fn confirmed(&self) -> impl Iterator<Item = &CertificateRecord> {
        self.certificates.iter().filter(|c| c.verdict == Verdict::Confirmed)
    }

    pub fn certificate_for(&self, candidate: &str) -> Option<&CertificateRecord> {
        self.certificates.iter().find(|c| c.candidate == candidate)
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} : {{{}}}\n", self.proposition, self.parameters.join(", "));
        if !self.orders.is_empty() {
            let o: Vec<String> = self.orders.iter().map(u64::to_string).collect();
            s += &format!("orders: {{{}}}\n", o.join(", "));
        }
        for c in &self.certificates {
            let v = match c.verdict {
                Verdict::Confirmed => "confirmed ",
                Verdict::Eliminated => "eliminated",
            };
            s += &format!("  {v} {} [{}]", c.candidate, c.reason);
            if let Some(b) = &c.modulus_bound {
                s += &format!(" |λ| <= {b}");
            }
            if !c.detail.is_empty() {
                s += &format!(" {}", c.detail);
            }
            s.push('\n');
        }
        for n in &self.notes {
            s += &format!("note: {n}\n");
        }
        s += &format!("runtime: {} ms\n", self.environment.runtime_ms);
        s
    }
}

pub fn report_to_json(r: &ClassificationReport) -> String {
    serde_json::to_string_pretty(r).expect("report serializes")
}

pub fn report_from_json(s: &str) -> Result<ClassificationReport> {
    serde_json::from_str(s).map_err(|e| Error::InvalidParameter(format!("report json: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_shape() {
        let r = ClassificationReport::new("diagnostic");
        let v: serde_json::Value = serde_json::from_str(&report_to_json(&r)).unwrap();
        assert_eq!(v["parameters"], serde_json::json!([]));
        assert_eq!(v["schema"], "parab-kit/1");
        assert!(v["environment"].is_object());
        assert_eq!(report_from_json(&report_to_json(&r)).unwrap(), r);
    }

    #[test]
    fn optional_fields_omitted() {
        let rec = CertificateRecord {
            candidate: "-2".into(),
            verdict: Verdict::Eliminated,
            reason: "PreperiodicPCF".into(),
            checked_up_to: Some(5),
            modulus_bound: None,
            detail: String::new(),
        };
        let s = serde_json::to_string(&rec).unwrap();
        assert_eq!(
            s,
            r#"{"candidate":"-2","verdict":"eliminated","reason":"PreperiodicPCF","checked_up_to":5}"#
        );
    }
}
