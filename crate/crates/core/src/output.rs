//! Serializable value encodings shared by tables, reports and the CLI.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::eta::ZetaExpr;
use crate::numeric::{format_fixed, format_sci_up, parse_rational, ApproxReal, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Markdown,
    Csv,
    Json,
}

/// `p/q`, with the denominator always present.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Exact value: `constant + Σ zeta[k] ζ(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicValue {
    pub constant: String,
    pub zeta: BTreeMap<u32, String>,
}

impl SymbolicValue {
    pub fn from_expr(e: &ZetaExpr) -> Self {
        Self {
            constant: rational_string(e.constant()),
            zeta: e.coeffs().iter().map(|(k, c)| (*k, rational_string(c))).collect(),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self { constant: rational_string(r), zeta: BTreeMap::new() }
    }

    pub fn to_expr(&self) -> Result<ZetaExpr> {
        let mut coeffs = Vec::with_capacity(self.zeta.len());
        for (k, c) in &self.zeta {
            coeffs.push((*k, parse_rational(c)?));
        }
        Ok(ZetaExpr::from_parts(parse_rational(&self.constant)?, coeffs))
    }
}

/// Numeric value rendered in decimal, with the bound rounded upward.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericValue {
    pub value: String,
    pub error_bound: String,
}

impl NumericValue {
    pub fn from_approx(x: &ApproxReal, digits: u32) -> Self {
        // rounding the midpoint to `digits` places moves it by up to half a unit
        let shift = Rational::new(1.into(), crate::numeric::pow10(digits) * 2);
        let bound = x.error_bound() + shift;
        Self { value: format_fixed(x.value(), digits), error_bound: format_sci_up(&bound, 3) }
    }
}

/// One indexed row, as emitted by `table ... --format json` and `rho`/`eta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexedValue {
    pub index: Vec<u32>,
    pub weight: u32,
    pub depth: usize,
    pub value: SymbolicValue,
}

impl IndexedValue {
    pub fn new(index: &[u32], value: SymbolicValue) -> Self {
        Self { index: index.to_vec(), weight: index.iter().sum(), depth: index.len(), value }
    }
}

/// Numeric counterpart of [`IndexedValue`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexedNumeric {
    pub index: Vec<u32>,
    pub weight: u32,
    pub depth: usize,
    pub value: String,
    pub error_bound: String,
}

impl IndexedNumeric {
    pub fn new(index: &[u32], value: NumericValue) -> Self {
        Self {
            index: index.to_vec(),
            weight: index.iter().sum(),
            depth: index.len(),
            value: value.value,
            error_bound: value.error_bound,
        }
    }
}

pub fn index_string(parts: &[u32]) -> String {
    let parts: Vec<String> = parts.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, ratio};

    #[test]
    fn symbolic_round_trip() {
        let e = ZetaExpr::from_parts(ratio(-29, 32), [(3, ratio(-3, 4)), (4, ratio(1, 2)), (10, int(7))]);
        let v = SymbolicValue::from_expr(&e);
        assert_eq!(v.constant, "-29/32");
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"constant":"-29/32","zeta":{"3":"-3/4","4":"1/2","10":"7/1"}}"#);
        let back: SymbolicValue = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_expr().unwrap(), e);
    }

    #[test]
    fn numeric_bound_covers_display_rounding() {
        let x = ApproxReal::exact(ratio(1, 3));
        let v = NumericValue::from_approx(&x, 4);
        assert_eq!(v.value, "0.3333");
        assert_eq!(v.error_bound, "5.00e-5");
    }
}
