//! JSON documents read and written by the command-line tool.
//!
//! Integers that fit in an `i64` are written as JSON numbers inside
//! configurations and matrices; counts that may grow large (tree counts,
//! group orders, odometers) are always decimal strings. Both forms are
//! accepted on input.

use std::path::Path;

use coeulerian::construct::ZeroSumLatticeBasis;
use coeulerian::{ChipConfig, DirectedMultigraph, IntMatrix, IntVector, Sandpile};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::CliError;

pub const FORMAT: u64 = 1;

pub fn read(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Json(path.display().to_string(), e))
}

fn schema(msg: impl Into<String>) -> CliError {
    CliError::Schema(msg.into())
}

fn check_format(doc: &Value) -> Result<(), CliError> {
    match doc.get("format") {
        None => Ok(()),
        Some(v) if v.as_u64() == Some(FORMAT) => Ok(()),
        Some(v) => Err(schema(format!("unsupported format {v}"))),
    }
}

fn field<'a>(doc: &'a Value, key: &str) -> Result<&'a Value, CliError> {
    doc.get(key).ok_or_else(|| schema(format!("missing field \"{key}\"")))
}

pub fn parse_int(v: &Value) -> Result<BigInt, CliError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(schema(format!("{n} is not an integer")))
            }
        }
        Value::String(s) => s.trim().parse().map_err(|_| schema(format!("\"{s}\" is not an integer"))),
        other => Err(schema(format!("{other} is not an integer"))),
    }
}

pub fn parse_vector(v: &Value) -> Result<IntVector, CliError> {
    v.as_array().ok_or_else(|| schema("expected an array of integers"))?.iter().map(parse_int).collect()
}

fn parse_count(v: &Value, key: &str) -> Result<usize, CliError> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| schema(format!("\"{key}\" must be a nonnegative integer")))
}

fn parse_matrix(v: &Value) -> Result<Vec<IntVector>, CliError> {
    v.as_array().ok_or_else(|| schema("expected an array of rows"))?.iter().map(parse_vector).collect()
}

/// Number when it fits in an `i64`, decimal string otherwise.
pub fn compact(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(i) => json!(i),
        None => json!(x.to_string()),
    }
}

pub fn compact_vec(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(compact).collect())
}

pub fn decimal(x: &BigInt) -> Value {
    json!(x.to_string())
}

pub fn decimal_vec(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(decimal).collect())
}

pub fn matrix_value(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| compact_vec(r)).collect())
}

pub fn parse_graph(doc: &Value) -> Result<DirectedMultigraph, CliError> {
    check_format(doc)?;
    let n = parse_count(field(doc, "n")?, "n")?;
    let rows = parse_matrix(field(doc, "adj")?)?;
    if rows.len() != n {
        return Err(schema(format!("\"adj\" has {} rows, expected {n}", rows.len())));
    }
    let adj = IntMatrix::from_rows(rows)?;
    Ok(DirectedMultigraph::from_adjacency(adj)?)
}

pub fn graph_value(g: &DirectedMultigraph) -> Value {
    json!({ "format": FORMAT, "n": g.n(), "adj": matrix_value(g.adjacency()) })
}

/// A total configuration, or a sandpile together with its sink.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigDoc {
    Chips(ChipConfig),
    Sand { sand: Sandpile, sink: usize },
}

pub fn parse_config(doc: &Value) -> Result<ConfigDoc, CliError> {
    if let Some(arr) = doc.as_array() {
        return Ok(ConfigDoc::Chips(ChipConfig(parse_vector(&Value::Array(arr.clone()))?)));
    }
    check_format(doc)?;
    match (doc.get("chips"), doc.get("sand")) {
        (Some(chips), None) => Ok(ConfigDoc::Chips(ChipConfig(parse_vector(chips)?))),
        (None, Some(sand)) => {
            let sink = parse_count(field(doc, "sink")?, "sink")?;
            Ok(ConfigDoc::Sand { sand: Sandpile(parse_vector(sand)?), sink })
        }
        _ => Err(schema("config needs exactly one of \"chips\" or \"sand\"")),
    }
}

pub fn chips_value(c: &ChipConfig) -> Value {
    json!({ "format": FORMAT, "chips": compact_vec(c) })
}

pub fn parse_lattice(doc: &Value) -> Result<ZeroSumLatticeBasis, CliError> {
    check_format(doc)?;
    let n = parse_count(field(doc, "n")?, "n")?;
    let cols = parse_matrix(field(doc, "basis")?)?;
    if let Some(bad) = cols.iter().find(|c| c.len() != n) {
        return Err(schema(format!("basis column has length {}, expected {n}", bad.len())));
    }
    if n == 0 {
        return Err(schema("\"n\" must be positive"));
    }
    let basis = if cols.is_empty() { IntMatrix::zeros(n, 0) } else { IntMatrix::from_columns(&cols)? };
    Ok(ZeroSumLatticeBasis::new(basis)?)
}

pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    map.insert("format".into(), json!(FORMAT));
    for (k, v) in pairs {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}
