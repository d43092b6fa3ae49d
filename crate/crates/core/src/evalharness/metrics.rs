use std::fmt;

use serde::{Serialize, Serializer};

use crate::textmodel::Assertion;

/// An exact non-negative ratio with a non-zero denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    /// `None` when `den` is zero.
    pub fn new(num: u64, den: u64) -> Option<Fraction> {
        (den != 0).then_some(Fraction { num, den })
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Thousandths, rounded half up.
    pub fn thousandths(self) -> u64 {
        let num = self.num as u128;
        let den = self.den as u128;
        ((2000 * num + den) / (2 * den)) as u64
    }

    pub fn rounded(self) -> f64 {
        self.thousandths() as f64 / 1000.0
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.thousandths();
        write!(f, "{}.{:03}", t / 1000, t % 1000)
    }
}

/// Renders an optional metric the way report tables show it.
pub fn show(value: Option<Fraction>) -> String {
    value.map_or_else(|| "n/a".to_string(), |v| v.to_string())
}

fn serialize_rounded<S: Serializer>(v: &Option<Fraction>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(f) => s.serialize_f64(f.rounded()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ConfusionCounts {
    pub tp: u64,
    pub tn: u64,
    pub fp: u64,
    #[serde(rename = "fn")]
    pub fn_: u64,
}

impl ConfusionCounts {
    pub fn new(tp: u64, tn: u64, fp: u64, fn_: u64) -> Self {
        ConfusionCounts { tp, tn, fp, fn_ }
    }

    /// Tallies one record; Negated is the positive class.
    pub fn record(&mut self, gold: Assertion, predicted: Assertion) {
        match (gold, predicted) {
            (Assertion::Negated, Assertion::Negated) => self.tp += 1,
            (Assertion::Affirmed, Assertion::Affirmed) => self.tn += 1,
            (Assertion::Affirmed, Assertion::Negated) => self.fp += 1,
            (Assertion::Negated, Assertion::Affirmed) => self.fn_ += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.tp + self.tn + self.fp + self.fn_
    }

    pub fn merge(self, other: ConfusionCounts) -> ConfusionCounts {
        ConfusionCounts {
            tp: self.tp + other.tp,
            tn: self.tn + other.tn,
            fp: self.fp + other.fp,
            fn_: self.fn_ + other.fn_,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Metrics {
    #[serde(serialize_with = "serialize_rounded")]
    pub accuracy: Option<Fraction>,
    #[serde(serialize_with = "serialize_rounded")]
    pub precision: Option<Fraction>,
    #[serde(serialize_with = "serialize_rounded")]
    pub recall: Option<Fraction>,
    #[serde(serialize_with = "serialize_rounded")]
    pub f1: Option<Fraction>,
}

/// Accuracy, precision, recall and F1 as exact fractions. A zero
/// denominator leaves the metric undefined; F1 is undefined unless both
/// precision and recall are defined and non-zero.
pub fn compute_metrics(c: ConfusionCounts) -> Metrics {
    let ConfusionCounts { tp, tn, fp, fn_ } = c;
    let f1 = if tp > 0 {
        Fraction::new(2 * tp, 2 * tp + fp + fn_)
    } else {
        None
    };
    Metrics {
        accuracy: Fraction::new(tp + tn, c.total()),
        precision: Fraction::new(tp, tp + fp),
        recall: Fraction::new(tp, tp + fn_),
        f1,
    }
}
