//! Input documents and command-line parameters.
//!
//! Vertex labels are 1-based outside and 0-based inside.

use std::str::FromStr;

use num_rational::BigRational;
use quiver_walls::{DimVector, Quiver, StabParam};
use serde_json::Value;
use thiserror::Error;

/// Malformed input. Every variant names the offending field.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("field `{field}`: label out of range: {label} not in 1..={vertices}")]
    LabelOutOfRange { field: String, label: i64, vertices: usize },
    #[error("field `{field}`: negative entry {value}")]
    Negative { field: String, value: i64 },
}

fn field(field: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Field { field: field.into(), message: message.into() }
}

fn integer(v: &Value, name: &str) -> Result<i64, InputError> {
    v.as_i64().ok_or_else(|| field(name, format!("expected an integer, found {v}")))
}

fn array<'a>(v: &'a Value, name: &str) -> Result<&'a Vec<Value>, InputError> {
    v.as_array().ok_or_else(|| field(name, format!("expected an array, found {v}")))
}

fn nonnegative(v: &Value, name: &str) -> Result<i64, InputError> {
    let x = integer(v, name)?;
    if x < 0 {
        return Err(InputError::Negative { field: name.into(), value: x });
    }
    Ok(x)
}

/// Parses `{"vertices": n, "arrows": [[s, t, m], ...], "dimension_vector": [...]}`.
pub fn parse_input(bytes: &[u8]) -> Result<(Quiver, DimVector), InputError> {
    let doc: Value = serde_json::from_slice(bytes)?;
    let doc = doc.as_object().ok_or_else(|| field("<root>", "expected an object"))?;
    let get = |name: &str| doc.get(name).ok_or_else(|| field(name, "missing"));

    let n = nonnegative(get("vertices")?, "vertices")?;
    if n == 0 {
        return Err(field("vertices", "a quiver needs at least one vertex"));
    }
    let n = n as usize;

    let mut arrows = Vec::new();
    for (i, a) in array(get("arrows")?, "arrows")?.iter().enumerate() {
        let name = format!("arrows[{i}]");
        let triple = array(a, &name)?;
        if triple.len() != 3 {
            return Err(field(&name, "expected [source, target, multiplicity]"));
        }
        let mut labels = [0usize; 2];
        for (slot, v) in labels.iter_mut().zip(triple) {
            let label = integer(v, &name)?;
            if label < 1 || label as usize > n {
                return Err(InputError::LabelOutOfRange { field: name, label, vertices: n });
            }
            *slot = label as usize - 1;
        }
        let m = nonnegative(&triple[2], &name)?;
        if m == 0 {
            return Err(field(&name, "multiplicity must be at least 1"));
        }
        arrows.push((labels[0], labels[1], m as u64));
    }

    let entries = array(get("dimension_vector")?, "dimension_vector")?;
    if entries.len() != n {
        return Err(field(
            "dimension_vector",
            format!("expected {n} entries, found {}", entries.len()),
        ));
    }
    let d = entries
        .iter()
        .map(|v| nonnegative(v, "dimension_vector"))
        .collect::<Result<Vec<_>, _>>()?;

    let quiver = Quiver::new(n, &arrows).map_err(|e| field("arrows", e.to_string()))?;
    let d = DimVector::new(d).map_err(|e| field("dimension_vector", e.to_string()))?;
    Ok((quiver, d))
}

/// Parses a comma-separated list of rationals `p` or `p/q`.
pub fn parse_stability(text: &str, flag: &str, n: usize) -> Result<StabParam, InputError> {
    let coords = text
        .split(',')
        .map(|x| {
            BigRational::from_str(x.trim())
                .map_err(|_| field(flag, format!("`{}` is not a rational number", x.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != n {
        return Err(field(flag, format!("expected {n} entries, found {}", coords.len())));
    }
    Ok(StabParam(coords))
}
