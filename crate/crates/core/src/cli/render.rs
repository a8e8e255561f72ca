//! Value encodings shared by the JSON and CSV emitters.
//!
//! Rationals become `"a/b"` strings (`"a"` when the denominator is 1), phases
//! become `{"num", "p", "exp"}` objects and floats are rounded to 12
//! significant digits before they reach the serializer.

use std::fmt::Display;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::cyclotomic::Exact;
use crate::padic::Phase;

pub fn ratio<T: Clone + Integer + Display>(r: &Ratio<T>) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn phase(ph: &Phase) -> Value {
    let e = ph.exponent();
    json!({ "num": e.num(), "p": e.p(), "exp": e.exp() })
}

/// `e(a/p^n)` for tables.
pub fn phase_text(ph: &Phase) -> String {
    let e = ph.exponent();
    format!("e({}/{}^{})", e.num(), e.p(), e.exp())
}

pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::String(x.to_string());
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    // avoid "-0.0"
    json!(if rounded == 0.0 { 0.0 } else { rounded })
}

pub fn float_text(x: f64) -> String {
    match float(x) {
        Value::Number(n) => n.to_string(),
        other => other.as_str().unwrap_or_default().to_string(),
    }
}

/// The nonzero terms `c·ζ_{p^L}^a` of an exact value, with each `ζ^a` reduced
/// to lowest terms as a phase.
fn exact_terms(v: &Exact) -> Vec<(Ratio<i64>, Phase)> {
    let p = v.p();
    let level = v.level();
    v.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(a, c)| {
            let ph = Phase::from_parts(p, a as u64, level);
            (*c, ph)
        })
        .collect()
}

/// A rational as `"a/b"`; otherwise a list of `{"coeff", "phase"}` terms.
pub fn exact(v: &Exact) -> Value {
    if let Some(r) = v.as_scalar() {
        return Value::String(ratio(&r));
    }
    let terms: Vec<Value> = exact_terms(v)
        .iter()
        .map(|(c, ph)| json!({ "coeff": ratio(c), "phase": phase(ph) }))
        .collect();
    Value::Array(terms)
}

/// `a/b` for rationals, `c1*e(..) + c2*e(..)` otherwise.
pub fn exact_text(v: &Exact) -> String {
    if let Some(r) = v.as_scalar() {
        return ratio(&r);
    }
    exact_terms(v)
        .iter()
        .map(|(c, ph)| format!("{}*{}", ratio(c), phase_text(ph)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// A table for CSV output.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> csv::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}
