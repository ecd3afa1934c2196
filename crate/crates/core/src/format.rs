//! JSON text formats.
//!
//! * rational: `"-3/4"` (integers are accepted on input, floats never)
//! * polynomial: coefficient list, low to high: `["1","0","0","1"]` is `1 + λ³`
//! * matrix: `{"rows": [["1","1/2"],["-2","1"]]}`

use serde_json::{json, Map, Value};

use crate::arith::{format_rational, parse_rational, Factorization};
use crate::solver::{ChainResult, SolveOutcome};
use crate::{CompanionJordanDecomposition, Error, NumberFieldElement, QMatrix, QPoly, Rational, Result};

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        other => Err(Error::Parse(format!(
            "expected a rational string or integer, got {other}"
        ))),
    }
}

fn locate(e: Error, at: String) -> Error {
    match e {
        Error::Parse(msg) => Error::Parse(format!("{at}: {msg}")),
        other => other,
    }
}

pub fn poly_to_json(p: &QPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

pub fn poly_from_json(v: &Value) -> Result<QPoly> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse("a polynomial is a list of coefficients, low to high".into()))?;
    let coeffs = items
        .iter()
        .enumerate()
        .map(|(i, c)| {
            rational_from_json(c).map_err(|e| locate(e, format!("coefficient {i}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QPoly::new(coeffs))
}

pub fn matrix_to_json(m: &QMatrix) -> Value {
    let rows: Vec<Value> = m
        .to_rows()
        .iter()
        .map(|r| Value::Array(r.iter().map(rational_to_json).collect()))
        .collect();
    json!({ "rows": rows })
}

/// Accepts `{"rows": [...]}` or a bare list of rows.
pub fn matrix_from_json(v: &Value) -> Result<QMatrix> {
    let rows = v.get("rows").unwrap_or(v);
    let rows = rows
        .as_array()
        .ok_or_else(|| Error::Parse("a matrix is {\"rows\": [[...], ...]}".into()))?;
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.as_array()
                .ok_or_else(|| Error::Parse(format!("row {i} is not a list")))?
                .iter()
                .enumerate()
                .map(|(j, x)| {
                    rational_from_json(x).map_err(|e| locate(e, format!("row {i}, column {j}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    QMatrix::from_rows(parsed)
}

pub fn parse_poly_text(text: &str) -> Result<QPoly> {
    poly_from_json(&parse_json(text)?)
}

pub fn parse_matrix_text(text: &str) -> Result<QMatrix> {
    matrix_from_json(&parse_json(text)?)
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))
}

pub fn element_to_json(e: &NumberFieldElement) -> Value {
    json!({
        "modulus": poly_to_json(e.field().modulus()),
        "coords": e.coords().iter().map(rational_to_json).collect::<Vec<_>>(),
    })
}

pub fn factorization_to_json(f: &Factorization) -> Value {
    json!({
        "unit": rational_to_json(&f.unit),
        "factors": f.factors.iter().map(|(g, m)| json!({
            "poly": poly_to_json(g),
            "multiplicity": m,
        })).collect::<Vec<_>>(),
    })
}

pub fn decomposition_to_json(cj: &CompanionJordanDecomposition) -> Value {
    json!({
        "blocks": cj.blocks.iter().map(|b| json!({ "g": poly_to_json(&b.g), "d": b.d })).collect::<Vec<_>>(),
        "T": matrix_to_json(&cj.t),
        "T_inv": matrix_to_json(&cj.t_inv),
    })
}

/// The solver report. Without `emit_all` only the first solution is listed;
/// `solution_count` is always the full count.
pub fn outcome_to_json(out: &SolveOutcome, emit_all: bool) -> Value {
    let shown = if emit_all { out.solutions.len() } else { out.solutions.len().min(1) };
    let blocks: Vec<Value> = out
        .blocks
        .iter()
        .map(|b| {
            let attempts: Vec<Value> = b
                .attempts
                .iter()
                .map(|a| {
                    let mut entry = Map::new();
                    entry.insert("root".into(), element_to_json(&a.root));
                    entry.insert("x1".into(), matrix_to_json(&a.x1));
                    entry.insert("delta_invertible".into(), a.delta_invertible.into());
                    match &a.result {
                        ChainResult::Complete(s) => {
                            entry.insert("result".into(), "complete".into());
                            entry.insert(
                                "chain".into(),
                                if s.uniqueness == crate::ChainKind::UniqueChain { "unique" } else { "affine" }.into(),
                            );
                            entry.insert(
                                "x_parts".into(),
                                s.x_parts.iter().map(matrix_to_json).collect::<Vec<_>>().into(),
                            );
                        }
                        ChainResult::Inconsistent { step, after_affine } => {
                            entry.insert("result".into(), "inconsistent".into());
                            entry.insert("failed_step".into(), (*step).into());
                            entry.insert("after_affine".into(), (*after_affine).into());
                        }
                    }
                    Value::Object(entry)
                })
                .collect();
            json!({ "g": poly_to_json(&b.block.g), "d": b.block.d, "roots": attempts })
        })
        .collect();
    json!({
        "status": out.status.as_str(),
        "solution_count": out.solutions.len(),
        "solutions": out.solutions[..shown].iter().map(matrix_to_json).collect::<Vec<_>>(),
        "infinite_family": out.infinite_family,
        "conclusive": out.conclusive,
        "nonderogatory": out.nonderogatory,
        "blocks": blocks,
        "diagnostics": out.diagnostics,
    })
}
