//! JSON and text renderings. Integers inside cones are emitted as decimal
//! strings so that no precision is lost; everything is canonically sorted.

use std::fmt::Write;

use num_bigint::BigInt;
use quiver_walls::polyhedral::linalg::IntVec;
use quiver_walls::{Cone, DimVector, Fan, WallTable};
use serde_json::{json, Value};

use crate::input::InputError;

fn int_vec(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn int_vecs(vs: &[IntVec]) -> Value {
    Value::Array(vs.iter().map(|v| int_vec(v)).collect())
}

pub fn dim_vector(d: &DimVector) -> Value {
    json!(d.coords())
}

pub fn dim_vectors(ds: &[DimVector]) -> Value {
    Value::Array(ds.iter().map(dim_vector).collect())
}

/// `{"equalities", "inequalities", "rays", "lineality", "dim"}`; the cone is
/// `{x : a . x = 0 for equalities, a . x <= 0 for inequalities}`.
pub fn cone(c: &Cone) -> Value {
    let h = c.hrep();
    json!({
        "equalities": int_vecs(&h.equalities),
        "inequalities": int_vecs(&h.inequalities),
        "rays": int_vecs(c.rays()),
        "lineality": int_vecs(c.lineality()),
        "dim": c.dim(),
    })
}

pub fn walls(table: &WallTable) -> Value {
    Value::Array(
        table
            .iter()
            .map(|(e, w)| json!({"e": dim_vector(e), "cone": cone(w)}))
            .collect(),
    )
}

pub fn fan(f: &Fan) -> Value {
    json!({
        "rays": int_vecs(f.rays()),
        "lineality": int_vecs(f.lineality()),
        "cones": f.cones().iter().map(|c| json!({"dim": c.dim, "ray_indices": c.ray_indices})).collect::<Vec<_>>(),
        "f_vector": f.f_vector(),
    })
}

fn parse_int_vecs(doc: &Value, name: &str) -> Result<Vec<IntVec>, InputError> {
    let bad = || InputError::Field { field: name.into(), message: "expected an array of integer arrays".into() };
    doc.get(name)
        .and_then(Value::as_array)
        .ok_or_else(bad)?
        .iter()
        .map(|v| {
            v.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| match x {
                    Value::String(s) => s.parse::<BigInt>().map_err(|_| bad()),
                    Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(bad),
                    _ => Err(bad()),
                })
                .collect()
        })
        .collect()
}

/// Reads a cone written by [`cone`] from its generators, cross-checked
/// against its inequality description.
pub fn parse_cone(doc: &Value, ambient_dim: usize) -> Result<Cone, InputError> {
    let wrap = |e: quiver_walls::Error| InputError::Field { field: "cone".into(), message: e.to_string() };
    let from_v = Cone::from_generators(
        ambient_dim,
        parse_int_vecs(doc, "rays")?,
        parse_int_vecs(doc, "lineality")?,
    )
    .map_err(wrap)?;
    let from_h = Cone::from_inequalities(
        ambient_dim,
        parse_int_vecs(doc, "equalities")?,
        parse_int_vecs(doc, "inequalities")?,
    )
    .map_err(wrap)?;
    if from_v != from_h {
        return Err(InputError::Field {
            field: "cone".into(),
            message: "generators and inequalities describe different cones".into(),
        });
    }
    Ok(from_v)
}

fn tuple(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(BigInt::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn cone_text(c: &Cone) -> String {
    let mut out = String::new();
    let h = c.hrep();
    writeln!(out, "dim {}", c.dim()).unwrap();
    for (label, rows) in [
        ("ray", c.rays()),
        ("lineality", c.lineality()),
        ("equality", &h.equalities[..]),
        ("inequality", &h.inequalities[..]),
    ] {
        for r in rows {
            writeln!(out, "{label} {}", tuple(r)).unwrap();
        }
    }
    out
}

pub fn walls_text(table: &WallTable) -> String {
    let mut out = String::new();
    for (e, w) in table.iter() {
        writeln!(out, "W_{e}").unwrap();
        for line in cone_text(w).lines() {
            writeln!(out, "  {line}").unwrap();
        }
    }
    out
}

pub fn fan_text(f: &Fan) -> String {
    let mut out = String::new();
    for (i, r) in f.rays().iter().enumerate() {
        writeln!(out, "ray {i} {}", tuple(r)).unwrap();
    }
    for l in f.lineality() {
        writeln!(out, "lineality {}", tuple(l)).unwrap();
    }
    for c in f.cones() {
        let idx: Vec<String> = c.ray_indices.iter().map(usize::to_string).collect();
        writeln!(out, "cone dim {} rays [{}]", c.dim, idx.join(",")).unwrap();
    }
    writeln!(out, "f-vector {:?}", f.f_vector()).unwrap();
    out
}
