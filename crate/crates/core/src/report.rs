//! JSON report records shared by the lemma checkers and the command line.
//!
//! Exact rationals are written as `"num/den"` strings and big integers as
//! plain decimal strings, since neither fits a JSON number.

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::{Serialize, Serializer};
use serde_json::Value;

/// `num/den`, always with an explicit denominator.
pub fn rat_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub(crate) fn ser_rat<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rat_string(r))
}

pub(crate) fn ser_nat<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

pub(crate) fn ser_nats<S: Serializer>(ns: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ns.iter().map(|n| n.to_string()))
}

/// One checked inequality (or equality) with both sides.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CaseRecord {
    pub lemma: String,
    pub params: Value,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl CaseRecord {
    pub fn new(lemma: &str, params: Value, lhs: impl ToString, rhs: impl ToString, pass: bool) -> Self {
        CaseRecord { lemma: lemma.to_string(), params, lhs: lhs.to_string(), rhs: rhs.to_string(), pass, witness: None }
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq, Default)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// A named collection of cases; `summary.failed == 0` iff every case passed.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(suite: &str, cases: Vec<CaseRecord>) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        let summary = Summary { total: cases.len(), passed, failed: cases.len() - passed };
        SuiteReport { suite: suite.to_string(), cases, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use serde_json::json;

    #[test]
    fn rationals_render_with_denominator() {
        let r = BigRational::new(BigInt::from(6), BigInt::from(4));
        assert_eq!(rat_string(&r), "3/2");
        assert_eq!(rat_string(&BigRational::from_integer(BigInt::from(5))), "5/1");
    }

    #[test]
    fn summary_counts_failures() {
        let cases = vec![
            CaseRecord::new("x", json!({"q": 2}), 1, 2, true),
            CaseRecord::new("x", json!({"q": 3}), 3, 2, false),
        ];
        let r = SuiteReport::new("demo", cases);
        assert_eq!(r.summary, Summary { total: 2, passed: 1, failed: 1 });
        assert!(!r.passed());
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"suite\":\"demo\""));
        assert!(!text.contains("witness"));
    }
}
