//! Reference tables for weights 2 to 6 and table emission for any weight.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use crate::combinatorics::all_compositions;
use crate::error::{Error, Result};
use crate::eta::{eta_symbolic, EtaIndex, Render, ZetaExpr};
use crate::numeric::{parse_rational, Rational};
use crate::output::{index_string, IndexedValue, OutputFormat, SymbolicValue};
use crate::rho::{rho_exact, RhoIndex};

/// Weights covered by the shipped reference values.
pub const FIXTURE_WEIGHTS: RangeInclusive<u32> = 2..=6;

/// Weights accepted by the `table` command.
pub const TABLE_WEIGHTS: RangeInclusive<u32> = 2..=12;

const RHO_FIXTURE: &str = include_str!("../data/rho_table.txt");
const ETA_FIXTURE: &str = include_str!("../data/eta_table.txt");

#[derive(Clone, Debug, PartialEq)]
pub struct FixtureRow<V> {
    pub weight: u32,
    pub index: Vec<u32>,
    pub value: V,
}

fn parse_fixture<V>(src: &str, value: impl Fn(&str) -> Result<V>) -> Result<Vec<FixtureRow<V>>> {
    src.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let mut cols = line.split('\t');
            let (Some(w), Some(idx), Some(v), None) = (cols.next(), cols.next(), cols.next(), cols.next()) else {
                return Err(Error::Parse(format!("malformed fixture line {line:?}")));
            };
            let weight = w.trim().parse().map_err(|_| Error::Parse(format!("bad weight in {line:?}")))?;
            Ok(FixtureRow { weight, index: parse_index(idx)?, value: value(v.trim())? })
        })
        .collect()
}

/// Parses `2,1,3` (optionally parenthesized) into parts.
pub fn parse_index(s: &str) -> Result<Vec<u32>> {
    let body = s.trim().trim_start_matches('(').trim_end_matches(')');
    body.split(',').map(|p| p.trim().parse().map_err(|_| Error::Parse(format!("bad index {s:?}")))).collect()
}

pub fn rho_fixture() -> Vec<FixtureRow<Rational>> {
    parse_fixture(RHO_FIXTURE, parse_rational).expect("shipped fixture parses")
}

pub fn eta_fixture() -> Vec<FixtureRow<ZetaExpr>> {
    parse_fixture(ETA_FIXTURE, ZetaExpr::parse).expect("shipped fixture parses")
}

/// Admissible ρ-indices of weight `w`, depth ascending then lexicographic.
pub fn rho_indices(w: u32) -> Vec<RhoIndex> {
    all_compositions(w).filter_map(|c| RhoIndex::new(c.into_parts()).ok()).collect()
}

/// η-indices of weight `w`, depth ascending then lexicographic.
pub fn eta_indices(w: u32) -> Vec<EtaIndex> {
    all_compositions(w).filter_map(|c| EtaIndex::new(c.into_parts()).ok()).collect()
}

pub fn rho_rows(w: u32) -> Vec<(RhoIndex, Rational)> {
    rho_indices(w)
        .into_iter()
        .map(|i| {
            let v = rho_exact(&i);
            (i, v)
        })
        .collect()
}

pub fn eta_rows(w: u32) -> Vec<(EtaIndex, ZetaExpr)> {
    eta_indices(w)
        .into_iter()
        .map(|i| {
            let v = eta_symbolic(&i);
            (i, v)
        })
        .collect()
}

fn check_weight(w: u32) -> Result<()> {
    if TABLE_WEIGHTS.contains(&w) {
        Ok(())
    } else {
        Err(Error::Parse(format!("table weight {w} outside {}..={}", TABLE_WEIGHTS.start(), TABLE_WEIGHTS.end())))
    }
}

struct Row {
    index: Vec<u32>,
    display: String,
    json: SymbolicValue,
}

fn emit(rows: &[Row], format: OutputFormat, symbol: &str) -> Result<String> {
    let mut out = String::new();
    match format {
        OutputFormat::Markdown => {
            writeln!(out, "| weight | depth | index | {symbol} |").ok();
            writeln!(out, "|---:|---:|:---|:---|").ok();
            for r in rows {
                let w: u32 = r.index.iter().sum();
                writeln!(out, "| {w} | {} | {} | {} |", r.index.len(), index_string(&r.index), r.display).ok();
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["weight", "depth", "index", "value"]).map_err(|e| Error::Parse(e.to_string()))?;
            for r in rows {
                let weight: u32 = r.index.iter().sum();
                w.write_record([
                    weight.to_string(),
                    r.index.len().to_string(),
                    index_string(&r.index),
                    r.display.clone(),
                ])
                .map_err(|e| Error::Parse(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
            out = String::from_utf8(bytes).expect("csv output is utf-8");
        }
        OutputFormat::Json => {
            let values: Vec<IndexedValue> = rows.iter().map(|r| IndexedValue::new(&r.index, r.json.clone())).collect();
            out = serde_json::to_string_pretty(&values).expect("plain data serializes");
            out.push('\n');
        }
    }
    Ok(out)
}

pub fn render_rho_table(w: u32, format: OutputFormat) -> Result<String> {
    check_weight(w)?;
    let rows: Vec<Row> = rho_rows(w)
        .into_iter()
        .map(|(i, v)| Row { index: i.parts().to_vec(), display: v.to_string(), json: SymbolicValue::from_rational(&v) })
        .collect();
    emit(&rows, format, "rho")
}

pub fn render_eta_table(w: u32, format: OutputFormat, render: Render) -> Result<String> {
    check_weight(w)?;
    let rows: Vec<Row> = eta_rows(w)
        .into_iter()
        .map(|(i, v)| Row { index: i.parts().to_vec(), display: v.render(render), json: SymbolicValue::from_expr(&v) })
        .collect();
    emit(&rows, format, "eta")
}

/// Reads back the json form of either table.
pub fn parse_json_table(json: &str) -> Result<Vec<IndexedValue>> {
    serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
}
