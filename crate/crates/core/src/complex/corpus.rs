//! Named fixture complexes.

use itertools::Itertools;
use thiserror::Error;

use super::{SimplicialComplex, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("unknown corpus entry `{0}`")]
    UnknownName(String),
    #[error("`{name}` expects {expected} parameter(s), got {got}")]
    Arity {
        name: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("invalid parameters for `{name}`: {reason}")]
    InvalidParams { name: &'static str, reason: String },
}

/// Corpus entries with their parameter signatures.
pub const CATALOG: &[(&str, &str)] = &[
    (
        "simplex_boundary",
        "n: boundary of the n-simplex on n+1 vertices, n >= 1",
    ),
    ("polygon", "m: the m-cycle, m >= 3"),
    (
        "cross_polytope_boundary",
        "n: boundary of the n-dimensional cross-polytope on 2n vertices, antipodes (i, i+n)",
    ),
    (
        "cyclic_sphere",
        "m d: boundary of the cyclic d-polytope on m vertices via Gale evenness, 2 <= d < m",
    ),
    ("rp2_six", "(none): 6-vertex real projective plane"),
    ("torus_seven", "(none): 7-vertex torus"),
];

/// Looks up a corpus entry by name.
pub fn generate(name: &str, params: &[usize]) -> Result<SimplicialComplex, CorpusError> {
    fn arity(name: &'static str, expected: usize, params: &[usize]) -> Result<(), CorpusError> {
        if params.len() == expected {
            Ok(())
        } else {
            Err(CorpusError::Arity {
                name,
                expected,
                got: params.len(),
            })
        }
    }
    match name {
        "simplex_boundary" => {
            arity("simplex_boundary", 1, params)?;
            simplex_boundary(params[0])
        }
        "polygon" => {
            arity("polygon", 1, params)?;
            polygon(params[0])
        }
        "cross_polytope_boundary" => {
            arity("cross_polytope_boundary", 1, params)?;
            cross_polytope_boundary(params[0])
        }
        "cyclic_sphere" => {
            arity("cyclic_sphere", 2, params)?;
            cyclic_sphere(params[0], params[1])
        }
        "rp2_six" => {
            arity("rp2_six", 0, params)?;
            Ok(rp2_six())
        }
        "torus_seven" => {
            arity("torus_seven", 0, params)?;
            Ok(torus_seven())
        }
        other => Err(CorpusError::UnknownName(other.to_string())),
    }
}

fn invalid(name: &'static str, reason: impl Into<String>) -> CorpusError {
    CorpusError::InvalidParams {
        name,
        reason: reason.into(),
    }
}

/// `∂Δ^n` on `n + 1` vertices.
pub fn simplex_boundary(n: usize) -> Result<SimplicialComplex, CorpusError> {
    if n == 0 || n + 1 > MAX_VERTICES {
        return Err(invalid(
            "simplex_boundary",
            format!("need 1 <= n <= {}", MAX_VERTICES - 1),
        ));
    }
    let full = VertexSet::full(n + 1);
    Ok(SimplicialComplex::from_sets(n + 1, full.boundary_faces()))
}

pub fn polygon(m: usize) -> Result<SimplicialComplex, CorpusError> {
    if !(3..=MAX_VERTICES).contains(&m) {
        return Err(invalid("polygon", format!("need 3 <= m <= {MAX_VERTICES}")));
    }
    let edges = (1..=m).map(|i| VertexSet::from_vertices([i, i % m + 1]));
    Ok(SimplicialComplex::from_sets(m, edges))
}

/// Facets pick one vertex from each antipodal pair `(i, i + n)`.
pub fn cross_polytope_boundary(n: usize) -> Result<SimplicialComplex, CorpusError> {
    if n == 0 || 2 * n > MAX_VERTICES {
        return Err(invalid(
            "cross_polytope_boundary",
            format!("need 1 <= n <= {}", MAX_VERTICES / 2),
        ));
    }
    let facets = (0..n)
        .map(|i| [i + 1, i + 1 + n])
        .multi_cartesian_product()
        .map(VertexSet::from_vertices);
    Ok(SimplicialComplex::from_sets(2 * n, facets))
}

/// Boundary of the cyclic polytope `C(m, d)`: the `d`-subsets satisfying Gale's evenness condition.
pub fn cyclic_sphere(m: usize, d: usize) -> Result<SimplicialComplex, CorpusError> {
    if d < 2 || d >= m || m > MAX_VERTICES {
        return Err(invalid(
            "cyclic_sphere",
            format!("need 2 <= d < m <= {MAX_VERTICES}, got m={m}, d={d}"),
        ));
    }
    let facets = (1..=m)
        .combinations(d)
        .map(VertexSet::from_vertices)
        .filter(|s| gale_even(*s, m));
    Ok(SimplicialComplex::from_sets(m, facets))
}

/// Every pair of consecutive non-members encloses an even number of members.
fn gale_even(s: VertexSet, m: usize) -> bool {
    let outside: Vec<usize> = (1..=m).filter(|v| !s.contains(*v)).collect();
    outside.windows(2).all(|w| (w[1] - w[0] - 1) % 2 == 0)
}

/// The 6-vertex real projective plane (antipodal quotient of the icosahedron).
pub fn rp2_six() -> SimplicialComplex {
    let triangles: [[usize; 3]; 10] = [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 2, 6],
        [2, 3, 5],
        [2, 4, 5],
        [2, 4, 6],
        [3, 4, 6],
        [3, 5, 6],
    ];
    SimplicialComplex::from_sets(6, triangles.iter().map(|t| VertexSet::from_vertices(*t)))
}

/// Möbius' 7-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus_seven() -> SimplicialComplex {
    let label = |x: usize| x % 7 + 1;
    let triangles = (0..7).flat_map(|i| {
        [
            VertexSet::from_vertices([label(i), label(i + 1), label(i + 3)]),
            VertexSet::from_vertices([label(i), label(i + 2), label(i + 3)]),
        ]
    });
    SimplicialComplex::from_sets(7, triangles)
}
