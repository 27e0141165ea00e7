//! JSON file formats for algebras, geometries, and fusion tables.
//!
//! Scalars are always strings (`"a/b"` or `"a"`), fields are tagged `"Q"`
//! or `"Fp:<prime>"`. Product tables are keyed `"i,j"` with `i <= j`;
//! omitted pairs default to the zero product. Designated axes are either
//! basis indices or coordinate vectors.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::algebra::Algebra;
use crate::axial::FusionTable;
use crate::error::{Error, Result};
use crate::geometry::PartialTripleSystem;
use crate::scalar::{Field, Scalar};

fn bad(msg: impl Into<String>) -> Error {
    Error::FileFormat(msg.into())
}

fn scalar_list(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.render())).collect())
}

fn parse_scalar_list(v: &Value, field: Field, what: &str) -> Result<Vec<Scalar>> {
    let arr = v
        .as_array()
        .ok_or_else(|| bad(format!("{what} must be an array")))?;
    arr.iter()
        .map(|s| {
            let text = s
                .as_str()
                .ok_or_else(|| bad(format!("{what} entries must be scalar strings")))?;
            Scalar::parse(text, field)
        })
        .collect()
}

/// Serializes an algebra, optionally recording the eta its axes are meant
/// to be verified at. Zero products are omitted; axes that are basis
/// vectors are written as indices.
pub fn algebra_to_json(a: &Algebra, eta: Option<&Scalar>) -> Value {
    let mut products = Map::new();
    for i in 0..a.dim() {
        for j in i..a.dim() {
            let p = a.product_vector(i, j);
            if p.iter().any(|c| !c.is_zero()) {
                products.insert(format!("{i},{j}"), scalar_list(p));
            }
        }
    }
    let axes: Vec<Value> = (0..a.axis_count())
        .map(|k| {
            let coords = a.axis(k);
            let coords = coords.coords();
            let ones: Vec<usize> = coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, _)| i)
                .collect();
            if ones.len() == 1 && coords[ones[0]].is_one() {
                json!(ones[0])
            } else {
                scalar_list(coords)
            }
        })
        .collect();
    let mut out = Map::new();
    out.insert("field".into(), json!(a.field().to_string()));
    out.insert("basis".into(), json!(a.basis_names().to_vec()));
    out.insert("products".into(), Value::Object(products));
    out.insert("axes".into(), Value::Array(axes));
    if let Some(eta) = eta {
        out.insert("eta".into(), json!(eta.render()));
    }
    Value::Object(out)
}

/// Reads an algebra file; returns the algebra and the recorded eta, if any.
pub fn algebra_from_json(v: &Value) -> Result<(Algebra, Option<Scalar>)> {
    let obj = v
        .as_object()
        .ok_or_else(|| bad("algebra file must be an object"))?;
    let field_tag = obj
        .get("field")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing \"field\" tag"))?;
    let field = Field::parse(field_tag)?;
    let basis: Vec<String> = obj
        .get("basis")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"basis\" list"))?
        .iter()
        .map(|s| {
            s.as_str()
                .map(str::to_string)
                .ok_or_else(|| bad("basis names must be strings"))
        })
        .collect::<Result<_>>()?;
    let dim = basis.len();
    let mut products = BTreeMap::new();
    if let Some(table) = obj.get("products") {
        let table = table
            .as_object()
            .ok_or_else(|| bad("\"products\" must be an object keyed \"i,j\""))?;
        for (key, val) in table {
            let (i, j) = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| bad(format!("bad product key {key:?}")))?;
            if i > j || j >= dim {
                return Err(bad(format!(
                    "product key {key:?} out of range (dimension {dim})"
                )));
            }
            let vec = parse_scalar_list(val, field, &format!("product {key:?}"))?;
            if vec.len() != dim {
                return Err(bad(format!(
                    "product {key:?} has length {} != {dim}",
                    vec.len()
                )));
            }
            products.insert((i, j), vec);
        }
    }
    let mut axes = Vec::new();
    if let Some(axis_list) = obj.get("axes") {
        let axis_list = axis_list
            .as_array()
            .ok_or_else(|| bad("\"axes\" must be an array"))?;
        for entry in axis_list {
            match entry {
                Value::Number(n) => {
                    let k = n
                        .as_u64()
                        .ok_or_else(|| bad("axis indices must be nonnegative integers"))?
                        as usize;
                    if k >= dim {
                        return Err(bad(format!("axis index {k} out of range")));
                    }
                    let mut v = vec![Scalar::zero(field); dim];
                    v[k] = Scalar::one(field);
                    axes.push(v);
                }
                Value::Array(_) => {
                    let v = parse_scalar_list(entry, field, "axis vector")?;
                    if v.len() != dim {
                        return Err(bad("axis vector has the wrong length"));
                    }
                    axes.push(v);
                }
                _ => return Err(bad("axes must be indices or coordinate vectors")),
            }
        }
    }
    let eta = match obj.get("eta") {
        Some(Value::String(s)) => Some(Scalar::parse(s, field)?),
        Some(Value::Null) | None => None,
        Some(_) => return Err(bad("\"eta\" must be a scalar string")),
    };
    let algebra = Algebra::from_product_map(field, basis, &products, axes)?;
    Ok((algebra, eta))
}

pub fn geometry_to_json(space: &PartialTripleSystem) -> Value {
    let lines: Vec<Value> = space
        .lines()
        .iter()
        .map(|l| json!(l.map(|p| space.point_label(p).to_string())))
        .collect();
    json!({
        "points": space.points().to_vec(),
        "lines": lines,
    })
}

pub fn geometry_from_json(v: &Value) -> Result<PartialTripleSystem> {
    let obj = v
        .as_object()
        .ok_or_else(|| bad("geometry file must be an object"))?;
    let points: Vec<String> = obj
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"points\" list"))?
        .iter()
        .map(|s| {
            s.as_str()
                .map(str::to_string)
                .ok_or_else(|| bad("point labels must be strings"))
        })
        .collect::<Result<_>>()?;
    let mut lines = Vec::new();
    if let Some(raw) = obj.get("lines") {
        let raw = raw
            .as_array()
            .ok_or_else(|| bad("\"lines\" must be an array"))?;
        for line in raw {
            let line = line
                .as_array()
                .ok_or_else(|| bad("each line must be an array of point labels"))?;
            lines.push(
                line.iter()
                    .map(|s| {
                        s.as_str()
                            .map(str::to_string)
                            .ok_or_else(|| bad("point labels must be strings"))
                    })
                    .collect::<Result<Vec<_>>>()?,
            );
        }
    }
    PartialTripleSystem::new(points, lines)
}

/// Fusion tables serialize as the eigenvalue list plus a cell map keyed
/// `"lambda,mu"` by the rendered eigenvalues.
pub fn fusion_table_to_json(t: &FusionTable) -> Value {
    let eigen = t.eigenvalues();
    let mut cells = Map::new();
    for (&(i, j), cell) in t.cells() {
        let key = format!("{},{}", eigen[i].render(), eigen[j].render());
        let vals: Vec<Value> = cell
            .iter()
            .map(|&k| Value::String(eigen[k].render()))
            .collect();
        cells.insert(key, Value::Array(vals));
    }
    json!({
        "eigenvalues": scalar_list(eigen),
        "cells": Value::Object(cells),
    })
}

pub fn fusion_table_from_json(v: &Value, field: Field) -> Result<FusionTable> {
    let obj = v
        .as_object()
        .ok_or_else(|| bad("fusion table must be an object"))?;
    let eigenvalues = parse_scalar_list(
        obj.get("eigenvalues")
            .ok_or_else(|| bad("missing \"eigenvalues\""))?,
        field,
        "eigenvalues",
    )?;
    let index = |s: &Scalar| -> Result<usize> {
        eigenvalues
            .iter()
            .position(|e| e == s)
            .ok_or_else(|| bad(format!("cell refers to unknown eigenvalue {s}")))
    };
    let mut cells = BTreeMap::new();
    let raw = obj
        .get("cells")
        .and_then(Value::as_object)
        .ok_or_else(|| bad("missing \"cells\" object"))?;
    for (key, val) in raw {
        let (a, b) = key
            .split_once(',')
            .ok_or_else(|| bad(format!("bad cell key {key:?}")))?;
        let i = index(&Scalar::parse(a, field)?)?;
        let j = index(&Scalar::parse(b, field)?)?;
        let members = parse_scalar_list(val, field, &format!("cell {key:?}"))?;
        let members: Vec<usize> = members.iter().map(&index).collect::<Result<_>>()?;
        cells.insert((i.min(j), i.max(j)), members);
    }
    FusionTable::new(eigenvalues, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::{catalog, spin_factor_delta, CatalogName};
    use crate::geometry::{builtin_space, BuiltinSpace};

    const Q: Field = Field::Rationals;

    fn q(s: &str) -> Scalar {
        Scalar::parse(s, Q).unwrap()
    }

    #[test]
    fn algebra_round_trip() {
        let cat = catalog(&CatalogName::ThreeC(q("1/4")), Q).unwrap();
        let v = algebra_to_json(&cat.algebra, cat.eta.as_ref());
        let (back, eta) = algebra_from_json(&v).unwrap();
        assert_eq!(eta, Some(q("1/4")));
        assert_eq!(back.dim(), 3);
        for i in 0..3 {
            for j in i..3 {
                assert_eq!(back.product_vector(i, j), cat.algebra.product_vector(i, j));
            }
        }
        assert_eq!(back.axis_count(), 2);
    }

    #[test]
    fn axes_serialize_as_indices_or_vectors() {
        let spin = spin_factor_delta(Q, &q("1")).unwrap();
        let v = algebra_to_json(&spin.algebra, spin.eta.as_ref());
        let axes = v["axes"].as_array().unwrap();
        assert!(axes[0].is_array()); // (1/2, 1/2, 0) is not a basis vector

        let cat = catalog(&CatalogName::TwoB, Q).unwrap();
        let v = algebra_to_json(&cat.algebra, None);
        assert_eq!(v["axes"], serde_json::json!([0, 1]));
    }

    #[test]
    fn geometry_round_trip() {
        let fano = builtin_space(&BuiltinSpace::Fano).unwrap();
        let v = geometry_to_json(&fano);
        let back = geometry_from_json(&v).unwrap();
        assert_eq!(back, fano);
    }

    #[test]
    fn fusion_table_round_trip() {
        let t = FusionTable::jordan(&q("1/4")).unwrap();
        let v = fusion_table_to_json(&t);
        let back = fusion_table_from_json(&v, Q).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn four_eigenvalue_tables_are_representable() {
        // tables are generic in the eigenvalue set: a graded table on
        // {1, 0, 1/4, 1/32} round-trips like any other
        let v = serde_json::json!({
            "eigenvalues": ["1", "0", "1/4", "1/32"],
            "cells": {
                "1,1": ["1"], "1,0": [], "1,1/4": ["1/4"], "1,1/32": ["1/32"],
                "0,0": ["0"], "0,1/4": ["1/4"], "0,1/32": ["1/32"],
                "1/4,1/4": ["1", "0"], "1/4,1/32": ["1/32"],
                "1/32,1/32": ["1", "0", "1/4"]
            }
        });
        let t = fusion_table_from_json(&v, Q).unwrap();
        assert_eq!(t.eigenvalues().len(), 4);
        assert_eq!(t.cell(3, 3), &[0, 1, 2]);
        let back = fusion_table_from_json(&fusion_table_to_json(&t), Q).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn malformed_files_are_rejected() {
        assert!(algebra_from_json(&serde_json::json!({"field": "Q"})).is_err());
        assert!(algebra_from_json(&serde_json::json!({
            "field": "Q",
            "basis": ["a"],
            "products": {"0,1": ["1"]}
        }))
        .is_err());
        assert!(geometry_from_json(&serde_json::json!({"points": [1, 2]})).is_err());
    }

    #[test]
    fn prime_field_files_reduce_scalars() {
        let v = serde_json::json!({
            "field": "Fp:7",
            "basis": ["a"],
            "products": {"0,0": ["1/2"]},
            "axes": [0]
        });
        let (a, _) = algebra_from_json(&v).unwrap();
        let f7 = Field::prime(7).unwrap();
        assert_eq!(a.product_vector(0, 0), &[Scalar::from_int(4, f7)]);
    }
}
