//! JSON algebra and morphism files.
//!
//! Algebra file:
//!
//! ```json
//! {
//!   "name": "one",
//!   "dim": 1,
//!   "basis": ["e0"],
//!   "mu": [[0, 0, 0, "1"]],
//!   "alpha": [[0, 0, "1"]]
//! }
//! ```
//!
//! `mu` entries `[i, j, k, c]` mean `μ(e_i, e_j)` contains `c·e_k`; `alpha`
//! entries `[i, j, c]` set row `i`, column `j`. Scalars are strings `"p"` or
//! `"p/q"`. A missing `alpha` means the identity. Unknown keys are rejected.
//!
//! Morphism file: `{"name": ..., "dim": ..., "alpha": [...]}` where only
//! `alpha` is required.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::algebra::{HomAlgebra, StructureTensor};
use crate::element::LinearMap;
use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    name: String,
    dim: usize,
    basis: Vec<String>,
    mu: Vec<(usize, usize, usize, String)>,
    #[serde(default)]
    alpha: Option<Vec<(usize, usize, String)>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismDoc {
    #[serde(default)]
    #[allow(dead_code)]
    name: Option<String>,
    #[serde(default)]
    dim: Option<usize>,
    alpha: Vec<(usize, usize, String)>,
}

pub fn parse_algebra(text: &str) -> Result<HomAlgebra> {
    parse_algebra_with(text, false)
}

/// As [`parse_algebra`]; with `skip_mult_check` a non-multiplicative twisting
/// map is accepted and flagged instead of rejected.
pub fn parse_algebra_with(text: &str, skip_mult_check: bool) -> Result<HomAlgebra> {
    let doc: AlgebraDoc = serde_json::from_str(text)?;
    if doc.dim == 0 {
        return Err(AlgebraError::Malformed("dim must be positive".into()));
    }
    if doc.basis.len() != doc.dim {
        return Err(AlgebraError::DimensionMismatch {
            expected: doc.dim,
            found: doc.basis.len(),
        });
    }
    let mut seen = BTreeSet::new();
    for label in &doc.basis {
        if !seen.insert(label.as_str()) {
            return Err(AlgebraError::Malformed(format!("duplicate basis label {label:?}")));
        }
    }
    let mut mu = StructureTensor::new(doc.dim);
    for (i, j, k, c) in doc.mu {
        mu.insert(i, j, k, c.parse()?)?;
    }
    let alpha = match doc.alpha {
        None => LinearMap::identity(doc.dim),
        Some(entries) => alpha_from_entries(doc.dim, entries)?,
    };
    HomAlgebra::with_options(doc.name, doc.basis, mu, alpha, skip_mult_check)
}

fn alpha_from_entries(dim: usize, entries: Vec<(usize, usize, String)>) -> Result<LinearMap> {
    let mut cells = vec![Scalar::zero(); dim * dim];
    let mut seen = BTreeSet::new();
    for (i, j, c) in entries {
        for index in [i, j] {
            if index >= dim {
                return Err(AlgebraError::IndexOutOfRange {
                    index,
                    dim,
                    context: "alpha entry",
                });
            }
        }
        if !seen.insert((i, j)) {
            return Err(AlgebraError::DuplicateAlphaEntry(i, j));
        }
        cells[i * dim + j] = c.parse()?;
    }
    LinearMap::from_entries(dim, cells)
}

/// Reads a morphism file for an algebra of dimension `dim`.
pub fn parse_morphism(text: &str, dim: usize) -> Result<LinearMap> {
    let doc: MorphismDoc = serde_json::from_str(text)?;
    if let Some(d) = doc.dim {
        if d != dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: dim,
                found: d,
            });
        }
    }
    alpha_from_entries(dim, doc.alpha)
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn write_alpha(out: &mut String, m: &LinearMap) {
    out.push_str("  \"alpha\": [");
    let entries: Vec<String> = m
        .nonzero_entries()
        .map(|(i, j, c)| format!("    [{i}, {j}, {}]", json_str(&c.to_string())))
        .collect();
    if entries.is_empty() {
        out.push(']');
    } else {
        out.push('\n');
        out.push_str(&entries.join(",\n"));
        out.push_str("\n  ]");
    }
}

/// Canonical text: fixed key order, entries in lexicographic order, `alpha`
/// omitted when it is the identity.
pub fn serialize_algebra(a: &HomAlgebra) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"name\": {},", json_str(a.name()));
    let _ = writeln!(out, "  \"dim\": {},", a.dim());
    let labels: Vec<String> = a.basis().iter().map(|b| json_str(b)).collect();
    let _ = writeln!(out, "  \"basis\": [{}],", labels.join(", "));
    out.push_str("  \"mu\": [");
    let entries: Vec<String> = a
        .mu()
        .entries()
        .map(|(i, j, k, c)| format!("    [{i}, {j}, {k}, {}]", json_str(&c.to_string())))
        .collect();
    if entries.is_empty() {
        out.push(']');
    } else {
        out.push('\n');
        out.push_str(&entries.join(",\n"));
        out.push_str("\n  ]");
    }
    if !a.alpha().is_identity() {
        out.push_str(",\n");
        write_alpha(&mut out, a.alpha());
    }
    out.push_str("\n}\n");
    out
}

pub fn serialize_morphism(name: &str, m: &LinearMap) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"name\": {},", json_str(name));
    let _ = writeln!(out, "  \"dim\": {},", m.dim());
    write_alpha(&mut out, m);
    out.push_str("\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn one_dimensional_file() {
        let a = parse_algebra(r#"{"name":"one","dim":1,"basis":["e0"],"mu":[[0,0,0,"1"]]}"#).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.alpha().is_identity());
        assert_eq!(a.multiply(&a.e(0), &a.e(0)).unwrap(), a.e(0));
    }

    #[test]
    fn rejects_bad_documents() {
        let cases = [
            r#"{"name":"x","dim":1,"basis":["e0"],"mu":[],"extra":1}"#,
            r#"{"name":"x","dim":1,"basis":["e0"],"mu":[[0,0,1,"1"]]}"#,
            r#"{"name":"x","dim":1,"basis":["e0"],"mu":[[0,0,0,"1"],[0,0,0,"2"]]}"#,
            r#"{"name":"x","dim":1,"basis":["e0"],"mu":[[0,0,0,"1/0"]]}"#,
            r#"{"name":"x","dim":1,"basis":["e0"],"mu":[[0,0,0,1]]}"#,
            r#"{"name":"x","dim":2,"basis":["e0"],"mu":[]}"#,
            r#"{"name":"x","dim":1,"basis":["e0"],"mu":[],"alpha":[[0,1,"1"]]}"#,
            r#"{"name":"x","dim":1,"basis":["e0"],"mu":[],"alpha":[[0,0,"1"],[0,0,"1"]]}"#,
            r#"{"name":"x","dim":1,"basis":["e0"],"mu":[[0,0,0,"1"]],"alpha":[[0,0,"2"]]}"#,
            r#"{"name":"x","dim":0,"basis":[],"mu":[]}"#,
            r#"{"name":"x","dim":2,"basis":["a","a"],"mu":[]}"#,
            "not json",
        ];
        for c in cases {
            assert!(parse_algebra(c).is_err(), "accepted {c}");
        }
    }

    #[test]
    fn skip_flag_accepts_non_multiplicative() {
        let text = r#"{"name":"x","dim":1,"basis":["e0"],"mu":[[0,0,0,"1"]],"alpha":[[0,0,"2"]]}"#;
        let a = parse_algebra_with(text, true).unwrap();
        assert!(!a.is_multiplicative());
    }

    #[test]
    fn zero_algebra_has_empty_mu() {
        let z = HomAlgebra::untwisted("z", vec!["a".into()], StructureTensor::new(1));
        let text = serialize_algebra(&z);
        assert!(text.contains("\"mu\": []"));
        assert_eq!(parse_algebra(&text).unwrap(), z);
    }

    #[test]
    fn octonion_round_trip() {
        for a in [catalog::octonions(), catalog::octonions_twisted()] {
            assert_eq!(parse_algebra(&serialize_algebra(&a)).unwrap(), a);
        }
    }

    #[test]
    fn morphism_files() {
        let m = catalog::octonion_automorphism();
        let text = serialize_morphism("octaut", &m);
        assert_eq!(parse_morphism(&text, 8).unwrap(), m);
        assert!(parse_morphism(&text, 4).is_err());
        assert!(parse_morphism(r#"{"alpha":[[0,0,"1"]],"mu":[]}"#, 1).is_err());
    }
}
