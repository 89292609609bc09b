//! Complex documents: JSON `{m, facets, name?, pairs?}` or whitespace text (`m`, then one facet per line).

use std::io::Read;

use polyprod::complex::corpus;
use polyprod::{PairClass, SimplicialComplex};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed document at line {line}, column {column}: {message}")]
    Malformed {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("vertex {vertex} out of range 1..={m} at {location}")]
    VertexOutOfRange {
        vertex: i64,
        m: usize,
        location: String,
    },
    #[error("invalid complex: {0}")]
    Complex(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("corpus: {0}")]
    Corpus(String),
}

/// The on-disk form of a complex with optional name and pair-class block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub m: usize,
    pub facets: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<PairClass>,
}

/// A parsed input: canonical complex plus pair class (moment-angle by default).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Input {
    pub name: Option<String>,
    pub complex: SimplicialComplex,
    pub pairs: PairClass,
}

impl Input {
    /// Canonical document: facets from the canonical complex, pairs omitted when moment-angle.
    pub fn document(&self) -> ComplexDocument {
        ComplexDocument {
            m: self.complex.m(),
            facets: self
                .complex
                .facet_lists()
                .into_iter()
                .map(|f| f.into_iter().map(|v| v as i64).collect())
                .collect(),
            name: self.name.clone(),
            pairs: (self.pairs != PairClass::moment_angle()).then(|| self.pairs.clone()),
        }
    }
}

fn build(doc: ComplexDocument, locations: &[Vec<String>]) -> Result<Input, ParseError> {
    for (fi, facet) in doc.facets.iter().enumerate() {
        for (vi, &v) in facet.iter().enumerate() {
            if v < 1 || v as u64 > doc.m as u64 {
                let location = locations
                    .get(fi)
                    .and_then(|l| l.get(vi))
                    .cloned()
                    .unwrap_or_else(|| format!("facet #{} (entry {})", fi + 1, vi + 1));
                return Err(ParseError::VertexOutOfRange {
                    vertex: v,
                    m: doc.m,
                    location,
                });
            }
        }
    }
    let facets: Vec<Vec<usize>> = doc
        .facets
        .iter()
        .map(|f| f.iter().map(|&v| v as usize).collect())
        .collect();
    let complex = SimplicialComplex::from_facets(doc.m, facets)
        .map_err(|e| ParseError::Complex(e.to_string()))?;
    let pairs = doc.pairs.unwrap_or_default();
    pairs
        .validate(complex.m())
        .map_err(|e| ParseError::Complex(e.to_string()))?;
    Ok(Input {
        name: doc.name,
        complex,
        pairs,
    })
}

fn parse_json(text: &str) -> Result<Input, ParseError> {
    let doc: ComplexDocument = serde_json::from_str(text).map_err(|e| ParseError::Malformed {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    build(doc, &[])
}

fn parse_text(text: &str) -> Result<Input, ParseError> {
    let mut m = None;
    let mut facets = Vec::new();
    let mut locations = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let mut facet = Vec::new();
        let mut locs = Vec::new();
        let mut offset = 0;
        for token in content.split_whitespace() {
            let column = content[offset..].find(token).expect("token in line") + offset + 1;
            offset = column - 1 + token.len();
            let value: i64 = token.parse().map_err(|_| ParseError::Malformed {
                line: ln + 1,
                column,
                message: format!("expected an integer, found `{token}`"),
            })?;
            facet.push(value);
            locs.push(format!("line {}, column {column}", ln + 1));
        }
        if m.is_none() {
            if facet.len() != 1 || facet[0] < 1 {
                return Err(ParseError::Malformed {
                    line: ln + 1,
                    column: 1,
                    message: "first line must be the vertex count m >= 1".into(),
                });
            }
            m = Some(facet[0] as usize);
        } else {
            facets.push(facet);
            locations.push(locs);
        }
    }
    let m = m.ok_or(ParseError::Malformed {
        line: 1,
        column: 1,
        message: "empty document".into(),
    })?;
    build(
        ComplexDocument {
            m,
            facets,
            name: None,
            pairs: None,
        },
        &locations,
    )
}

/// Parses document text (JSON when it starts with `{`, otherwise whitespace text).
pub fn parse_document(text: &str) -> Result<Input, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

/// `corpus:NAME[:p1,p2,…]`.
pub fn parse_corpus_spec(spec: &str) -> Result<Input, ParseError> {
    let mut parts = spec.splitn(2, ':');
    let name = parts.next().unwrap_or("");
    let params = match parts.next() {
        Some(p) if !p.is_empty() => p
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| ParseError::Corpus(format!("bad parameter `{x}`")))
            })
            .collect::<Result<Vec<_>, _>>()?,
        _ => Vec::new(),
    };
    let complex = corpus::generate(name, &params).map_err(|e| ParseError::Corpus(e.to_string()))?;
    let label = if params.is_empty() {
        name.to_string()
    } else {
        format!(
            "{name}({})",
            params
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    };
    Ok(Input {
        name: Some(label),
        complex,
        pairs: PairClass::moment_angle(),
    })
}

/// `parse_complex`: a path, `-` for stdin, or `corpus:NAME[:params]`.
pub fn parse_complex(source: &str) -> Result<Input, ParseError> {
    if let Some(spec) = source.strip_prefix("corpus:") {
        return parse_corpus_spec(spec);
    }
    let text = if source == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| ParseError::Io {
                path: "-".into(),
                message: e.to_string(),
            })?;
        s
    } else {
        std::fs::read_to_string(source).map_err(|e| ParseError::Io {
            path: source.into(),
            message: e.to_string(),
        })?
    };
    parse_document(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let k = parse_document("4\n1 2 3\n1 2 4\n1 3 4\n2 3 4").unwrap();
        assert_eq!(k.complex, corpus::simplex_boundary(3).unwrap());
        let oct = parse_document(
            r#"{"m":6,"facets":[[1,2,3],[1,2,6],[1,5,3],[1,5,6],[4,2,3],[4,2,6],[4,5,3],[4,5,6]]}"#,
        )
        .unwrap();
        assert_eq!(oct.complex, corpus::cross_polytope_boundary(3).unwrap());
        assert_eq!(oct.pairs, PairClass::moment_angle());
        match parse_document("3\n1 2\n0 3") {
            Err(ParseError::VertexOutOfRange {
                vertex: 0,
                location,
                ..
            }) => assert_eq!(location, "line 3, column 1"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_document(r#"{"m":3,"facets":[[0,1]]}"#),
            Err(ParseError::VertexOutOfRange { vertex: 0, .. })
        ));
        assert!(matches!(
            parse_document("3\n1 x"),
            Err(ParseError::Malformed {
                line: 2,
                column: 3,
                ..
            })
        ));
        assert!(matches!(
            parse_document("{\"m\": 3,"),
            Err(ParseError::Malformed { .. })
        ));
    }

    #[test]
    fn canonical_round_trip() {
        let k = parse_document("5\n# comment\n3 1 2\n1 2\n4 5\n").unwrap();
        let doc = serde_json::to_string(&k.document()).unwrap();
        assert_eq!(doc, r#"{"m":5,"facets":[[1,2,3],[4,5]]}"#);
        let again = parse_document(&doc).unwrap();
        assert_eq!(serde_json::to_string(&again.document()).unwrap(), doc);
        let c = parse_complex("corpus:cyclic_sphere:6,4").unwrap();
        assert_eq!(c.complex, corpus::cyclic_sphere(6, 4).unwrap());
    }
}
