//! The JSON algebra file: field, dimension, basis names, the table of
//! structure constants and optional generators with declared types.

use serde::{Deserialize, Serialize};

use crate::algebra::{build_algebra, Algebra};
use crate::axes::{type_label, AxisType};
use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::linalg::Element;
use crate::scalars::{parse_scalar, Domain};

/// `"Q"`, `"Qt"`, `"GF:p"`, or the object form `{"GF": p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Tag(String),
    Prime {
        #[serde(rename = "GF")]
        p: u64,
    },
}

impl FieldSpec {
    pub fn domain(&self) -> Result<Domain> {
        match self {
            FieldSpec::Tag(t) => Domain::from_tag(t),
            FieldSpec::Prime { p } => Domain::prime_field(*p),
        }
    }
}

impl From<Domain> for FieldSpec {
    fn from(d: Domain) -> Self {
        FieldSpec::Tag(d.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    /// `table[i][j]` holds the coordinates of `e_i e_j`.
    pub table: Vec<Vec<Vec<String>>>,
    /// Basis names or coordinate tuples such as `"(1, 0, -1)"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    /// `[left, right]` per generator; `"any"` for an unconstrained side.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis_types: Option<Vec<[String; 2]>>,
}

/// Reading failures, kept apart so JSON errors keep their line numbers.
#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("malformed algebra file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid algebra file: {0}")]
    Invalid(#[from] Error),
}

impl AlgebraFile {
    pub fn parse(text: &str) -> std::result::Result<AlgebraFile, FileError> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        file.to_algebra()?;
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn domain(&self) -> Result<Domain> {
        self.field.domain()
    }

    pub fn to_algebra(&self) -> Result<Algebra> {
        let domain = self.domain()?;
        let n = self.dim;
        if self.table.len() != n || self.table.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("table must be {n}×{n}")));
        }
        let table = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        let coords = cell
                            .iter()
                            .map(|s| parse_scalar(s, domain))
                            .collect::<Result<Vec<_>>>()?;
                        if coords.len() != n {
                            return Err(Error::Shape(format!(
                                "table entry has {} coordinates, expected {n}",
                                coords.len()
                            )));
                        }
                        Element::new(coords)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let alg = build_algebra(domain, n, self.basis.clone(), table)?;
        if let Some(g) = &self.generators {
            for text in g {
                parse_element(&alg, text)?;
            }
        }
        self.declared_types(domain)?;
        Ok(alg)
    }

    /// The designated generators, or `None` when the file names none.
    pub fn generators(&self, alg: &Algebra) -> Result<Option<Vec<Element>>> {
        self.generators
            .as_ref()
            .map(|g| g.iter().map(|t| parse_element(alg, t)).collect())
            .transpose()
    }

    pub fn declared_types(&self, domain: Domain) -> Result<Option<Vec<(AxisType, AxisType)>>> {
        let parse = |s: &str| -> Result<AxisType> {
            if s.trim() == "any" {
                Ok(None)
            } else {
                parse_scalar(s, domain).map(Some)
            }
        };
        self.axis_types
            .as_ref()
            .map(|v| v.iter().map(|[l, r]| Ok((parse(l)?, parse(r)?))).collect())
            .transpose()
    }

    pub fn from_algebra(alg: &Algebra) -> AlgebraFile {
        AlgebraFile {
            field: alg.domain().into(),
            dim: alg.dim(),
            basis: alg.basis_names().to_vec(),
            table: alg
                .table()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| e.coords().iter().map(ToString::to_string).collect())
                        .collect()
                })
                .collect(),
            generators: None,
            axis_types: None,
        }
    }

    pub fn from_entry(entry: &CatalogEntry) -> AlgebraFile {
        let alg = &entry.algebra;
        AlgebraFile {
            generators: Some(
                entry
                    .generators
                    .iter()
                    .map(|g| format_element(alg, g))
                    .collect(),
            ),
            axis_types: Some(
                entry
                    .axis_types
                    .iter()
                    .map(|(l, r)| [type_label(l), type_label(r)])
                    .collect(),
            ),
            ..AlgebraFile::from_algebra(alg)
        }
    }
}

/// A basis name, or a coordinate list with optional parentheses.
pub fn parse_element(alg: &Algebra, text: &str) -> Result<Element> {
    let t = text.trim();
    if let Ok(e) = alg.element_by_name(t) {
        return Ok(e);
    }
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(t);
    let coords = inner
        .split(',')
        .map(|s| parse_scalar(s, alg.domain()))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != alg.dim() {
        return Err(Error::Shape(format!(
            "`{t}` has {} coordinates, expected {}",
            coords.len(),
            alg.dim()
        )));
    }
    Element::new(coords)
}

/// Generator lists such as `a,b` or `(1,0,0),(0,1,0)`: split at commas
/// outside parentheses, or at semicolons when present.
pub fn parse_element_list(alg: &Algebra, text: &str) -> Result<Vec<Element>> {
    if text.contains(';') {
        return text.split(';').map(|s| parse_element(alg, s)).collect();
    }
    let mut items = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                items.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    items.push(&text[start..]);
    items.into_iter().map(|s| parse_element(alg, s)).collect()
}

/// The basis name when `x` is a basis vector, else its coordinate tuple.
pub fn format_element(alg: &Algebra, x: &Element) -> String {
    match alg.basis().iter().position(|e| e == x) {
        Some(i) => alg.basis_names()[i].clone(),
        None => x.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_flex2, paper_catalog};

    #[test]
    fn catalog_entries_round_trip() {
        for entry in paper_catalog() {
            let file = AlgebraFile::from_entry(&entry);
            let back = AlgebraFile::parse(&file.to_json()).unwrap();
            assert_eq!(back, file);
            assert_eq!(back.to_algebra().unwrap(), entry.algebra);
            assert_eq!(
                back.generators(&entry.algebra).unwrap().unwrap(),
                entry.generators.to_vec()
            );
            assert_eq!(
                back.declared_types(entry.domain()).unwrap().unwrap(),
                entry.axis_types.to_vec()
            );
        }
    }

    #[test]
    fn object_field_form() {
        let text = r#"{"field": {"GF": 5}, "dim": 1, "basis": ["e"], "table": [[["1"]]]}"#;
        let f = AlgebraFile::parse(text).unwrap();
        assert_eq!(f.domain().unwrap(), Domain::prime_field(5).unwrap());
    }

    #[test]
    fn malformed_json_reports_line() {
        let err = AlgebraFile::parse("{\n\"field\": \"Q\",\n oops }").unwrap_err();
        assert!(matches!(err, FileError::Json(_)));
        assert!(err.to_string().contains("line 3"), "{err}");
    }

    #[test]
    fn bad_shapes_rejected() {
        let text = r#"{"field": "Q", "dim": 2, "basis": ["a","b"], "table": [[["1","0"]]]}"#;
        assert!(matches!(
            AlgebraFile::parse(text),
            Err(FileError::Invalid(Error::Shape(_)))
        ));
        let text = r#"{"field": "GF:4", "dim": 1, "basis": ["e"], "table": [[["1"]]]}"#;
        assert!(matches!(
            AlgebraFile::parse(text),
            Err(FileError::Invalid(Error::NotPrime(4)))
        ));
    }

    #[test]
    fn element_syntax() {
        let d = Domain::Rational;
        let e = make_flex2(d, &d.ratio(1, 3).unwrap()).unwrap();
        let alg = &e.algebra;
        assert_eq!(parse_element(alg, "x").unwrap(), alg.basis_element(2));
        assert_eq!(
            parse_element(alg, "(1, 1, -1)").unwrap(),
            Element::from_ints(d, &[1, 1, -1])
        );
        assert!(parse_element(alg, "1,2").is_err());
        assert_eq!(parse_element_list(alg, "a,b").unwrap().len(), 2);
        assert_eq!(parse_element_list(alg, "(1,0,0);(0,1,0)").unwrap().len(), 2);
        assert_eq!(
            parse_element_list(alg, "(1,0,0), (0,1,0)").unwrap().len(),
            2
        );
        assert_eq!(parse_element_list(alg, "(1,1,-1)").unwrap().len(), 1);
        assert_eq!(
            format_element(alg, &Element::from_ints(d, &[1, 1, -1])),
            "(1, 1, -1)"
        );
    }
}
