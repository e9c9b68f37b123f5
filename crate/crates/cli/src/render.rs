use serde_json::{json, Map, Value};
use tkmotive_core::{QPolynomial, StratumBreakdown};

/// A named polynomial in a listing.
pub struct Row {
    pub name: String,
    pub poly: QPolynomial,
}

impl Row {
    pub fn new(name: impl Into<String>, poly: QPolynomial) -> Self {
        Self {
            name: name.into(),
            poly,
        }
    }
}

/// Strata, then group totals prefixed `total-`.
pub fn breakdown_rows(b: &StratumBreakdown) -> (Vec<Row>, Vec<Row>) {
    let strata = b
        .entries()
        .iter()
        .map(|(label, p)| Row::new(label.as_str(), p.clone()))
        .collect();
    let totals = b
        .totals()
        .iter()
        .map(|(group, p)| Row::new(group.as_str(), p.clone()))
        .collect();
    (strata, totals)
}

pub fn rows_json(rows: &[Row]) -> Value {
    let map: Map<String, Value> = rows
        .iter()
        .map(|r| (r.name.clone(), r.poly.to_json()))
        .collect();
    Value::Object(map)
}

pub fn degree_json(p: &QPolynomial) -> Value {
    p.degree().map_or(Value::Null, |d| json!(d))
}

pub fn degree_field(p: &QPolynomial) -> String {
    p.degree().map(|d| d.to_string()).unwrap_or_default()
}

/// `name  poly` lines with the names padded to a common width.
pub fn human_table(rows: &[Row]) -> String {
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    rows.iter()
        .map(|r| format!("{:<width$}  {}\n", r.name, r.poly))
        .collect()
}

pub fn latex_aligned(rows: &[Row]) -> String {
    let body: Vec<String> = rows
        .iter()
        .map(|r| format!("  \\mathrm{{{}}} &= {}", r.name, r.poly.to_latex()))
        .collect();
    format!(
        "\\begin{{aligned}}\n{}\n\\end{{aligned}}\n",
        body.join(" \\\\\n")
    )
}
