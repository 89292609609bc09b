//! Simplicial complexes on `[m]` in canonical facet form.
//!
//! A complex is stored as the set of its inclusion-maximal faces, sorted
//! lexicographically. Vertices of `[m]` lying in no face are ghost vertices
//! and stay part of the ambient vertex count.
//!
//! Two degenerate values are kept apart: the *void* complex has no faces at
//! all, while the *empty-simplex* complex `{∅}` has exactly one face, the
//! empty simplex. Full subcomplexes on vertex sets that miss every face are
//! `{∅}`; the boundary of a closed pseudomanifold is void.

pub mod corpus;
mod vertex_set;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use vertex_set::{
    subsets_by_size, subsets_of_size, Simplex, VertexSet, Vertices, MAX_VERTICES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("vertex count must be at least 1")]
    NoVertices,
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} is outside 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },
    #[error("facet #{0} is empty")]
    EmptyFacet(usize),
    #[error("{0} is not a face of the complex")]
    NotAFace(Simplex),
    #[error("{0} is not a maximal face of the complex")]
    NotMaximal(Simplex),
}

/// A finite simplicial complex on the vertex set `[m]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    m: usize,
    facets: Vec<Simplex>,
}

/// A complex produced by re-indexing onto `1..=k`, together with the map back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub complex: SimplicialComplex,
    /// `vertex_map[j - 1]` is the original label of new vertex `j`.
    pub vertex_map: Vec<usize>,
}

impl Relabeled {
    pub fn original_vertices(&self) -> VertexSet {
        VertexSet::from_vertices(self.vertex_map.iter().copied())
    }

    /// Translates a face of the relabeled complex back to original labels.
    pub fn lift(&self, face: Simplex) -> Simplex {
        face.expand(self.original_vertices())
    }
}

/// Result of [`SimplicialComplex::neighbourliness`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Neighbourliness {
    /// Largest `k` such that every `(k+1)`-subset of `[m]` is a face (0 when ghosts exist).
    pub k: usize,
    pub ghost_vertices: bool,
    pub complete_one_skeleton: bool,
}

impl SimplicialComplex {
    /// Canonicalizes raw facet lists: drops faces contained in others and merges duplicates.
    pub fn from_facets<I, F>(m: usize, raw: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        check_vertex_count(m)?;
        let mut sets = Vec::new();
        for (idx, facet) in raw.into_iter().enumerate() {
            let mut set = VertexSet::EMPTY;
            for v in facet {
                if v == 0 || v > m {
                    return Err(ComplexError::VertexOutOfRange { vertex: v, m });
                }
                set = set.with(v);
            }
            if set.is_empty() {
                return Err(ComplexError::EmptyFacet(idx));
            }
            sets.push(set);
        }
        Ok(Self::from_sets(m, sets))
    }

    /// Like [`SimplicialComplex::from_facets`] but takes bitsets directly.
    pub fn from_vertex_sets<I>(m: usize, raw: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        check_vertex_count(m)?;
        let ambient = VertexSet::full(m);
        let mut sets = Vec::new();
        for (idx, set) in raw.into_iter().enumerate() {
            if set.is_empty() {
                return Err(ComplexError::EmptyFacet(idx));
            }
            if let Some(v) = set.difference(ambient).min_vertex() {
                return Err(ComplexError::VertexOutOfRange { vertex: v, m });
            }
            sets.push(set);
        }
        Ok(Self::from_sets(m, sets))
    }

    /// Internal constructor: canonicalizes without validation. The empty set is
    /// allowed and survives only when it is the sole generator.
    pub(crate) fn from_sets<I: IntoIterator<Item = VertexSet>>(m: usize, raw: I) -> Self {
        let mut sets: Vec<VertexSet> = raw.into_iter().collect();
        sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        sets.dedup();
        let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
        for s in sets {
            if !kept.iter().any(|k| s.is_subset(*k)) {
                kept.push(s);
            }
        }
        kept.sort();
        SimplicialComplex { m, facets: kept }
    }

    /// The complex with no faces at all.
    pub fn void(m: usize) -> Self {
        SimplicialComplex {
            m,
            facets: Vec::new(),
        }
    }

    /// The complex whose only face is the empty simplex.
    pub fn empty_simplex(m: usize) -> Self {
        SimplicialComplex {
            m,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex on `[m]`.
    pub fn simplex(m: usize) -> Self {
        SimplicialComplex {
            m,
            facets: vec![VertexSet::full(m)],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_simplex(&self) -> bool {
        self.facets == [VertexSet::EMPTY]
    }

    /// Vertices that lie in some face.
    pub fn vertex_set(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn ghost_vertices(&self) -> VertexSet {
        VertexSet::full(self.m).difference(self.vertex_set())
    }

    /// Dimension of the largest facet; `-1` for both `{∅}` and the void complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_face(&self, s: Simplex) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    pub fn is_facet(&self, s: Simplex) -> bool {
        self.facets.binary_search(&s).is_ok()
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => false,
            Some(first) => self.facets.iter().all(|f| f.len() == first.len()),
        }
    }

    /// Faces of dimension exactly `d`, in lexicographic order. `d = -1` yields the empty simplex.
    pub fn faces(&self, d: isize) -> Vec<Simplex> {
        if d < -1 || self.is_void() {
            return Vec::new();
        }
        let size = (d + 1) as usize;
        let mut seen = HashSet::new();
        for f in &self.facets {
            if f.len() < size {
                continue;
            }
            for s in f.subsets() {
                if s.len() == size {
                    seen.insert(s);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Every face grouped by dimension: entry `d + 1` holds the `d`-faces.
    pub fn faces_by_dimension(&self) -> Vec<Vec<Simplex>> {
        if self.is_void() {
            return Vec::new();
        }
        let top = self.dim();
        let mut buckets: Vec<HashSet<VertexSet>> = vec![HashSet::new(); (top + 2) as usize];
        for f in &self.facets {
            for s in f.subsets() {
                buckets[s.len()].insert(s);
            }
        }
        buckets
            .into_iter()
            .map(|b| {
                let mut v: Vec<_> = b.into_iter().collect();
                v.sort();
                v
            })
            .collect()
    }

    /// `(f_{-1}, f_0, f_1, ...)`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dimension().iter().map(Vec::len).collect()
    }

    /// Unreduced Euler characteristic `Σ_{d ≥ 0} (-1)^d f_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &f)| if i % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// The `t`-skeleton: faces of dimension at most `t`.
    pub fn skeleton(&self, t: usize) -> SimplicialComplex {
        if self.dim() <= t as isize {
            return self.clone();
        }
        let mut sets = Vec::new();
        for f in &self.facets {
            if f.len() <= t + 1 {
                sets.push(*f);
            } else {
                sets.extend(f.subsets().filter(|s| s.len() == t + 1));
            }
        }
        SimplicialComplex::from_sets(self.m, sets)
    }

    /// `K_I` kept on the ambient `[m]`: the faces of `K` inside `I`, vertices outside `I` become ghosts.
    pub fn restrict(&self, subset: VertexSet) -> SimplicialComplex {
        if self.is_void() {
            return self.clone();
        }
        SimplicialComplex::from_sets(self.m, self.facets.iter().map(|f| f.intersection(subset)))
    }

    /// The full subcomplex `K_I`, re-indexed onto `1..=|I|` in vertex order.
    ///
    /// For `I = ∅` this is the empty-simplex complex `{∅}` on zero vertices.
    pub fn full_subcomplex(&self, subset: VertexSet) -> Relabeled {
        let subset = subset.intersection(VertexSet::full(self.m));
        let restricted = self.restrict(subset);
        let complex = SimplicialComplex::from_sets(
            subset.len(),
            restricted.facets.iter().map(|f| f.compress(subset)),
        );
        Relabeled {
            complex,
            vertex_map: subset.to_vec(),
        }
    }

    /// `K ∖ i`: the full subcomplex on `[m] ∖ {i}`.
    pub fn delete_vertex(&self, i: usize) -> Result<Relabeled, ComplexError> {
        if i == 0 || i > self.m {
            return Err(ComplexError::VertexOutOfRange {
                vertex: i,
                m: self.m,
            });
        }
        Ok(self.full_subcomplex(VertexSet::full(self.m).without(i)))
    }

    /// Removes the interior of the maximal face `sigma`, keeping its boundary.
    pub fn remove_face(&self, sigma: Simplex) -> Result<SimplicialComplex, ComplexError> {
        if !self.is_face(sigma) {
            return Err(ComplexError::NotAFace(sigma));
        }
        if !self.is_facet(sigma) {
            return Err(ComplexError::NotMaximal(sigma));
        }
        let others = self.facets.iter().copied().filter(|f| *f != sigma);
        let boundary = sigma.iter().map(|v| sigma.without(v));
        if sigma.is_empty() {
            return Ok(SimplicialComplex::void(self.m));
        }
        Ok(SimplicialComplex::from_sets(self.m, others.chain(boundary)))
    }

    /// Inclusion-minimal subsets of `[m]` that are not faces, in lexicographic order.
    pub fn minimal_non_faces(&self) -> Vec<VertexSet> {
        let ambient = VertexSet::full(self.m);
        if self.is_void() {
            return vec![VertexSet::EMPTY];
        }
        let faces: HashSet<VertexSet> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        let mut out = HashSet::new();
        for &face in &faces {
            for v in ambient.difference(face).iter() {
                let candidate = face.with(v);
                if faces.contains(&candidate) {
                    continue;
                }
                if candidate
                    .iter()
                    .all(|u| faces.contains(&candidate.without(u)))
                {
                    out.insert(candidate);
                }
            }
        }
        let mut out: Vec<_> = out.into_iter().collect();
        out.sort();
        out
    }

    pub fn neighbourliness(&self) -> Neighbourliness {
        let smallest = self.minimal_non_faces().iter().map(|s| s.len()).min();
        match smallest {
            None => Neighbourliness {
                k: self.m.saturating_sub(1),
                ghost_vertices: false,
                complete_one_skeleton: true,
            },
            Some(0) | Some(1) => Neighbourliness {
                k: 0,
                ghost_vertices: true,
                complete_one_skeleton: false,
            },
            Some(s) => Neighbourliness {
                k: s - 2,
                ghost_vertices: false,
                complete_one_skeleton: s >= 3,
            },
        }
    }

    pub fn has_complete_one_skeleton(&self) -> bool {
        self.neighbourliness().complete_one_skeleton
    }

    /// True for `∂Δ^{m-1}` on all of `[m]` (no ghost vertices), `m ≥ 2`.
    pub fn is_simplex_boundary(&self) -> bool {
        self.m >= 2
            && self.facets.len() == self.m
            && self.facets.iter().all(|f| f.len() == self.m - 1)
    }

    /// True for the full simplex on all of `[m]`.
    pub fn is_full_simplex(&self) -> bool {
        self.m >= 1 && self.facets == [VertexSet::full(self.m)]
    }

    /// Link of vertex `v`, on the same ambient vertex set.
    pub fn link(&self, v: usize) -> SimplicialComplex {
        let sets: Vec<_> = self
            .facets
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| f.without(v))
            .collect();
        if sets.is_empty() {
            return SimplicialComplex::void(self.m);
        }
        SimplicialComplex::from_sets(self.m, sets)
    }

    /// Drops ghost vertices, re-indexing onto the vertices actually used.
    pub fn without_ghosts(&self) -> Relabeled {
        let used = self.vertex_set();
        let complex =
            SimplicialComplex::from_sets(used.len(), self.facets.iter().map(|f| f.compress(used)));
        Relabeled {
            complex,
            vertex_map: used.to_vec(),
        }
    }

    /// Facets as sorted vertex lists.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }
}

fn check_vertex_count(m: usize) -> Result<(), ComplexError> {
    if m == 0 {
        Err(ComplexError::NoVertices)
    } else if m > MAX_VERTICES {
        Err(ComplexError::TooManyVertices(m))
    } else {
        Ok(())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[m={}; ", self.m)?;
        for (i, s) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    m: usize,
    facets: Vec<Vec<usize>>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ComplexRepr {
            m: self.m,
            facets: self.facet_lists(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ComplexRepr::deserialize(deserializer)?;
        if repr.m > MAX_VERTICES {
            return Err(serde::de::Error::custom(ComplexError::TooManyVertices(
                repr.m,
            )));
        }
        let ambient = VertexSet::full(repr.m);
        let mut sets = Vec::with_capacity(repr.facets.len());
        for facet in repr.facets {
            let set = VertexSet::try_from_vertices(facet.iter().copied()).map_err(|v| {
                serde::de::Error::custom(ComplexError::VertexOutOfRange {
                    vertex: v,
                    m: repr.m,
                })
            })?;
            if let Some(v) = set.difference(ambient).min_vertex() {
                return Err(serde::de::Error::custom(ComplexError::VertexOutOfRange {
                    vertex: v,
                    m: repr.m,
                }));
            }
            sets.push(set);
        }
        Ok(SimplicialComplex::from_sets(repr.m, sets))
    }
}
