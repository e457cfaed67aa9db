//! JSON complex files.
//!
//! ```json
//! {
//!   "name": "circle",
//!   "dimension": 1,
//!   "facets": [
//!     [0, 1],
//!     [0, 2],
//!     [1, 2]
//!   ],
//!   "labels": {"0": "a"},
//!   "stratification": [[[0]]],
//!   "orientation": {"0": 1, "1": -1, "2": 1}
//! }
//! ```
//!
//! `labels`, `stratification` and `orientation` are optional. The
//! stratification lists the skeleta `X^0, ..., X^{n-1}`, each as facets of a
//! subcomplex. Orientation signs are keyed by facet position. Vertex ids
//! that are not exactly `0..n` are renumbered in increasing order and the
//! old ids become labels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde_json::Value;

use super::complex::SimplicialComplex;
use super::simplex::Vertex;
use crate::error::{Error, Result};

/// A parsed complex file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexFile {
    pub complex: SimplicialComplex,
    pub stratification: Option<Vec<Vec<Vec<Vertex>>>>,
    pub orientation: Option<BTreeMap<usize, i8>>,
}

impl ComplexFile {
    pub fn new(complex: SimplicialComplex) -> Self {
        Self {
            complex,
            stratification: None,
            orientation: None,
        }
    }
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::ParseError(msg.into())
}

fn as_index(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| parse_err(format!("{what}: expected a non-negative integer, got {v}")))
}

fn parse_simplex_list(v: &Value, what: &str) -> Result<Vec<Vec<u64>>> {
    let arr = v.as_array().ok_or_else(|| parse_err(format!("{what}: expected a list")))?;
    arr.iter()
        .map(|f| {
            f.as_array()
                .ok_or_else(|| parse_err(format!("{what}: expected a list of integer lists")))?
                .iter()
                .map(|x| as_index(x, what))
                .collect()
        })
        .collect()
}

/// Parses a complex document.
pub fn parse_complex_file(text: &str) -> Result<ComplexFile> {
    let doc: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let obj = doc.as_object().ok_or_else(|| parse_err("top level must be an object"))?;
    for key in obj.keys() {
        if !["name", "dimension", "facets", "labels", "stratification", "orientation"].contains(&key.as_str()) {
            return Err(parse_err(format!("unknown field `{key}`")));
        }
    }
    let name = obj
        .get("name")
        .and_then(Value::as_str)
        .ok_or_else(|| parse_err("missing string field `name`"))?;
    let dimension = as_index(obj.get("dimension").ok_or_else(|| parse_err("missing field `dimension`"))?, "dimension")?;
    let raw = parse_simplex_list(obj.get("facets").ok_or_else(|| parse_err("missing field `facets`"))?, "facets")?;

    let ids: BTreeSet<u64> = raw.iter().flatten().copied().collect();
    let dense = ids.iter().copied().eq(0..ids.len() as u64);
    let renum: BTreeMap<u64, Vertex> = ids.iter().enumerate().map(|(i, &v)| (v, i as Vertex)).collect();
    let map_list = |list: &[Vec<u64>], what: &str| -> Result<Vec<Vec<Vertex>>> {
        list.iter()
            .map(|f| {
                f.iter()
                    .map(|v| renum.get(v).copied().ok_or_else(|| parse_err(format!("{what}: unknown vertex {v}"))))
                    .collect()
            })
            .collect()
    };
    let facets = map_list(&raw, "facets")?;
    let mut complex = SimplicialComplex::from_facets(name, facets)?;
    if complex.dim() as u64 != dimension {
        return Err(parse_err(format!(
            "declared dimension {dimension} but facets have dimension {}",
            complex.dim()
        )));
    }

    let mut labels: BTreeMap<Vertex, String> = BTreeMap::new();
    if !dense {
        for (&old, &new) in &renum {
            labels.insert(new, old.to_string());
        }
    }
    if let Some(l) = obj.get("labels") {
        let l = l.as_object().ok_or_else(|| parse_err("labels: expected an object"))?;
        for (k, v) in l {
            let old: u64 = k.parse().map_err(|_| parse_err(format!("labels: bad vertex key `{k}`")))?;
            let new = *renum.get(&old).ok_or_else(|| parse_err(format!("labels: unknown vertex {old}")))?;
            let text = v.as_str().ok_or_else(|| parse_err("labels: values must be strings"))?;
            labels.insert(new, text.to_string());
        }
    }
    complex.set_labels(labels);

    let stratification = match obj.get("stratification") {
        None => None,
        Some(s) => {
            let levels = s.as_array().ok_or_else(|| parse_err("stratification: expected a list of levels"))?;
            let mut out = Vec::new();
            for level in levels {
                out.push(map_list(&parse_simplex_list(level, "stratification")?, "stratification")?);
            }
            Some(out)
        }
    };

    let orientation = match obj.get("orientation") {
        None => None,
        Some(o) => {
            let o = o.as_object().ok_or_else(|| parse_err("orientation: expected an object"))?;
            let mut out = BTreeMap::new();
            for (k, v) in o {
                let idx: usize = k.parse().map_err(|_| parse_err(format!("orientation: bad facet key `{k}`")))?;
                if idx >= complex.facets().len() {
                    return Err(parse_err(format!("orientation: facet index {idx} out of range")));
                }
                let sign = match v.as_i64() {
                    Some(1) => 1,
                    Some(-1) => -1,
                    _ => return Err(parse_err("orientation: signs must be 1 or -1")),
                };
                out.insert(idx, sign);
            }
            Some(out)
        }
    };

    Ok(ComplexFile {
        complex,
        stratification,
        orientation,
    })
}

/// Loads just the complex.
pub fn load_complex(text: &str) -> Result<SimplicialComplex> {
    Ok(parse_complex_file(text)?.complex)
}

fn write_list(out: &mut String, s: &[Vertex]) {
    out.push('[');
    for (i, v) in s.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{v}");
    }
    out.push(']');
}

/// Canonical serialization; `parse` followed by `write` reproduces it byte
/// for byte.
pub fn write_complex_file(f: &ComplexFile) -> String {
    let k = &f.complex;
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"name\": {},", Value::String(k.name().to_string()));
    let _ = write!(out, "  \"dimension\": {}", k.dim());
    out.push_str(",\n  \"facets\": [\n");
    for (i, s) in k.facets().iter().enumerate() {
        out.push_str("    ");
        write_list(&mut out, s.vertices());
        out.push_str(if i + 1 < k.facets().len() { ",\n" } else { "\n" });
    }
    out.push_str("  ]");
    if !k.labels().is_empty() {
        out.push_str(",\n  \"labels\": {\n");
        let n = k.labels().len();
        for (i, (v, l)) in k.labels().iter().enumerate() {
            let _ = write!(out, "    \"{v}\": {}", Value::String(l.clone()));
            out.push_str(if i + 1 < n { ",\n" } else { "\n" });
        }
        out.push_str("  }");
    }
    if let Some(levels) = &f.stratification {
        out.push_str(",\n  \"stratification\": [\n");
        for (i, level) in levels.iter().enumerate() {
            out.push_str("    [");
            for (j, s) in level.iter().enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                write_list(&mut out, s);
            }
            out.push(']');
            out.push_str(if i + 1 < levels.len() { ",\n" } else { "\n" });
        }
        out.push_str("  ]");
    }
    if let Some(o) = &f.orientation {
        out.push_str(",\n  \"orientation\": {\n");
        for (i, (idx, s)) in o.iter().enumerate() {
            let _ = write!(out, "    \"{idx}\": {s}");
            out.push_str(if i + 1 < o.len() { ",\n" } else { "\n" });
        }
        out.push_str("  }");
    }
    out.push_str("\n}\n");
    out
}
