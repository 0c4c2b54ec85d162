//! JSON report shapes shared by the library and the command-line tool.
//!
//! Big integers are always written as decimal strings and rationals as a
//! reduced `{num, den}` pair of decimal strings, so no value ever passes
//! through floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

pub const SCHEMA_VERSION: u32 = 1;

pub fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalJson {
    fn from(r: &BigRational) -> Self {
        // BigRational is kept reduced with a positive denominator.
        RationalJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

/// Human-readable decimal rendering; never used in comparisons.
pub fn approx(r: &BigRational) -> String {
    match r.to_f64() {
        Some(f) if f.is_finite() => format!("{f:.6}"),
        _ => "inf".to_string(),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ResultEntry {
    pub quantity: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<RationalJson>,
    /// Set when `bound` is the square of the stated bound and the quantity
    /// was compared in squared form.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub squared: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub satisfied: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tight: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl ResultEntry {
    pub fn value(quantity: impl Into<String>, value: impl ToString) -> Self {
        ResultEntry {
            quantity: quantity.into(),
            value: value.to_string(),
            ..Default::default()
        }
    }

    pub fn predicate(quantity: impl Into<String>, holds: bool) -> Self {
        ResultEntry {
            quantity: quantity.into(),
            value: holds.to_string(),
            satisfied: Some(holds),
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub instance: String,
    pub results: Vec<ResultEntry>,
    pub runtime_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, instance: impl Into<String>) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            command: command.into(),
            instance: instance.into(),
            results: Vec::new(),
            runtime_ms: 0,
        }
    }

    /// False if any entry carries `satisfied: false`.
    pub fn all_satisfied(&self) -> bool {
        self.results.iter().all(|r| r.satisfied != Some(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_serialize_reduced() {
        let r = BigRational::new(BigInt::from(-6), BigInt::from(-4));
        let j = RationalJson::from(&r);
        assert_eq!(j, RationalJson { num: "3".into(), den: "2".into() });
    }

    #[test]
    fn optional_fields_are_omitted() {
        let e = ResultEntry::value("arb", 379);
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"{"quantity":"arb","value":"379"}"#);
    }
}
