//! Dual graphs, pseudomanifold classification and the paper's removal machinery:
//! the Lemma "vertexremoval" ordering, the Lemma "Lexists" pair `(σ, τ)` and the
//! facet filtration of Theorem "maniwithboundretskel".

mod graph;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use graph::{
    check_removal_ordering, vertex_removal_ordering, Graph, OrderingError, ReplayError,
};

use crate::complex::{ComplexError, Simplex, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum PseudoError {
    #[error("complex is not pure")]
    NotPure,
    #[error("complex is not a weak pseudomanifold (with boundary): {0}")]
    NotWeakPseudomanifold(String),
    #[error("complex is not a pseudomanifold: {0}")]
    NotAPseudomanifold(String),
    #[error("{0} is not a face of the complex")]
    NotAFace(Simplex),
    #[error("{0} is not a maximal face")]
    NotMaximal(Simplex),
    #[error("removal pairs need dim σ >= 1, got {0}")]
    DimensionTooLow(isize),
    #[error("filtration hypothesis fails on the dual-graph component containing {component_min}: {reason}")]
    FiltrationHypothesis {
        component_min: Simplex,
        reason: String,
    },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("engine invariant violated: {0}")]
    Invariant(String),
}

impl From<ComplexError> for PseudoError {
    fn from(e: ComplexError) -> Self {
        match e {
            ComplexError::NotAFace(s) => PseudoError::NotAFace(s),
            ComplexError::NotMaximal(s) => PseudoError::NotMaximal(s),
            ComplexError::VertexOutOfRange { vertex, .. } => PseudoError::VertexOutOfRange(vertex),
            other => PseudoError::Invariant(other.to_string()),
        }
    }
}

/// `D(K)`: facets as nodes, adjacent when they share a codimension-one face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGraph {
    /// Node `i` is facet `facets[i]` (lexicographic order).
    pub facets: Vec<Simplex>,
    pub graph: Graph,
}

impl DualGraph {
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.facets.len())
            .map(|i| self.graph.degree(i))
            .collect()
    }

    /// Components as lists of node indices, ordered by smallest facet.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.graph.components()
    }

    pub fn node_of(&self, facet: Simplex) -> Option<usize> {
        self.facets.binary_search(&facet).ok()
    }
}

/// Dual graph of a pure complex.
pub fn dual_graph(k: &SimplicialComplex) -> Result<DualGraph, PseudoError> {
    if !k.is_pure() {
        return Err(PseudoError::NotPure);
    }
    let facets = k.facets().to_vec();
    let mut graph = Graph::new(facets.len());
    for owners in ridge_map(&facets).values() {
        for (a, &x) in owners.iter().enumerate() {
            for &y in &owners[a + 1..] {
                graph.add_edge(x, y);
            }
        }
    }
    Ok(DualGraph { facets, graph })
}

/// Codimension-one faces of the given facets, with the indices of the facets containing them.
fn ridge_map(facets: &[Simplex]) -> BTreeMap<Simplex, Vec<usize>> {
    let mut map: BTreeMap<Simplex, Vec<usize>> = BTreeMap::new();
    for (idx, f) in facets.iter().enumerate() {
        for r in f.boundary_faces() {
            map.entry(r).or_default().push(idx);
        }
    }
    map
}

/// Pseudomanifold classification flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoClass {
    pub pure: bool,
    /// Dimension of `K` (`-1` for the void and empty-simplex complexes).
    pub dimension: isize,
    /// Pure, and every codimension-one face lies in one or two facets.
    pub weak_pm_with_boundary: bool,
    /// Codimension-one faces in exactly one facet.
    pub boundary_faces: Vec<Simplex>,
    pub closed: bool,
    pub dual_connected: bool,
    /// Pure, closed weak pseudomanifold with connected dual graph.
    pub pseudomanifold: bool,
    /// Pure weak pseudomanifold with nonempty boundary and connected dual graph.
    pub pseudomanifold_with_boundary: bool,
}

pub fn classify(k: &SimplicialComplex) -> PseudoClass {
    let pure = k.is_pure();
    let dimension = k.dim();
    if !pure || dimension < 0 {
        return PseudoClass {
            pure,
            dimension,
            weak_pm_with_boundary: false,
            boundary_faces: Vec::new(),
            closed: false,
            dual_connected: false,
            pseudomanifold: false,
            pseudomanifold_with_boundary: false,
        };
    }
    let ridges = ridge_map(k.facets());
    let weak = ridges.values().all(|o| o.len() <= 2);
    let boundary_faces: Vec<Simplex> = ridges
        .iter()
        .filter(|(_, o)| o.len() == 1)
        .map(|(r, _)| *r)
        .collect();
    let closed = weak && boundary_faces.is_empty();
    let dual_connected = dual_graph(k)
        .map(|d| d.graph.is_connected())
        .unwrap_or(false);
    PseudoClass {
        pure,
        dimension,
        weak_pm_with_boundary: weak,
        closed,
        dual_connected,
        pseudomanifold: closed && dual_connected,
        pseudomanifold_with_boundary: weak && !boundary_faces.is_empty() && dual_connected,
        boundary_faces,
    }
}

/// The boundary complex: codimension-one faces lying in exactly one facet.
/// Returns the void complex when `K` is closed.
pub fn boundary_complex(k: &SimplicialComplex) -> Result<SimplicialComplex, PseudoError> {
    let class = classify(k);
    if !class.weak_pm_with_boundary {
        return Err(PseudoError::NotWeakPseudomanifold(
            "some codimension-one face lies in three or more facets, or K is not pure".into(),
        ));
    }
    if class.boundary_faces.is_empty() {
        return Ok(SimplicialComplex::void(k.m()));
    }
    Ok(SimplicialComplex::from_sets(k.m(), class.boundary_faces))
}

/// Lemma "Lexists": a facet `σ`, a codimension-one face `τ ⊂ σ` maximal in `K ∖ σ`,
/// and `L = K ∖ {σ, τ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalPair {
    pub sigma: Simplex,
    pub tau: Simplex,
    pub l: SimplicialComplex,
    /// Set when `dim σ = 1`: Theorem "faceinert" is stated for `dim σ >= 2`.
    pub low_dimension_flag: bool,
}

/// Lexicographically first `τ ∈ ∂σ` contained in no other facet, or `None` when
/// every codimension-one face of `σ` lies in a second facet.
pub fn find_removal_pair(
    k: &SimplicialComplex,
    sigma: Simplex,
) -> Result<Option<RemovalPair>, PseudoError> {
    if !k.is_face(sigma) {
        return Err(PseudoError::NotAFace(sigma));
    }
    if !k.is_facet(sigma) {
        return Err(PseudoError::NotMaximal(sigma));
    }
    if sigma.dim() < 1 {
        return Err(PseudoError::DimensionTooLow(sigma.dim()));
    }
    let tau = sigma
        .boundary_faces()
        .into_iter()
        .find(|t| k.facets().iter().all(|f| *f == sigma || !t.is_subset(*f)));
    let Some(tau) = tau else {
        return Ok(None);
    };
    let without_sigma = k.remove_face(sigma)?;
    let l = without_sigma.remove_face(tau)?;
    if l.is_face(tau) {
        return Err(PseudoError::Invariant(format!(
            "∂σ ∩ L = ∂σ for σ = {sigma}"
        )));
    }
    Ok(Some(RemovalPair {
        sigma,
        tau,
        l,
        low_dimension_flag: sigma.dim() == 1,
    }))
}

/// `K = K_0 ⊃ K_1 ⊃ ... ⊃ K_ℓ = K^{n-1}`, removing one facet per step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetFiltration {
    pub dimension: usize,
    /// `σ_1, ..., σ_ℓ`.
    pub facets: Vec<Simplex>,
    /// `K_0, ..., K_ℓ`.
    pub complexes: Vec<SimplicialComplex>,
    /// The Lemma "Lexists" witness for each step `K_{i-1} → K_i`.
    pub pairs: Vec<RemovalPair>,
    pub low_dimension_flag: bool,
}

/// Theorem "maniwithboundretskel": orders the facets of a pure weak pseudomanifold
/// with boundary so that each can be removed in turn.
pub fn facet_filtration(k: &SimplicialComplex) -> Result<FacetFiltration, PseudoError> {
    let class = classify(k);
    if !class.pure {
        return Err(PseudoError::NotPure);
    }
    if !class.weak_pm_with_boundary {
        return Err(PseudoError::NotWeakPseudomanifold(
            "some codimension-one face lies in three or more facets".into(),
        ));
    }
    if class.dimension < 1 {
        return Err(PseudoError::DimensionTooLow(class.dimension));
    }
    let n = class.dimension as usize;
    let dual = dual_graph(k)?;
    let mut order = Vec::with_capacity(dual.facets.len());
    for component in dual.components() {
        let sub = dual.graph.induced(&component);
        let local = vertex_removal_ordering(&sub, n + 1).map_err(|e| {
            PseudoError::FiltrationHypothesis {
                component_min: dual.facets[component[0]],
                reason: e.to_string(),
            }
        })?;
        order.extend(local.into_iter().map(|i| dual.facets[component[i]]));
    }
    let mut complexes = vec![k.clone()];
    let mut pairs = Vec::with_capacity(order.len());
    for &sigma in &order {
        let current = complexes.last().expect("nonempty");
        let pair = find_removal_pair(current, sigma)?.ok_or_else(|| {
            PseudoError::Invariant(format!(
                "no removal pair for {sigma} despite low dual degree"
            ))
        })?;
        pairs.push(pair);
        let next = current.remove_face(sigma)?;
        complexes.push(next);
    }
    let last = complexes.last().expect("nonempty");
    if *last != k.skeleton(n - 1) {
        return Err(PseudoError::Invariant(
            "filtration does not end at the (n-1)-skeleton".into(),
        ));
    }
    Ok(FacetFiltration {
        dimension: n,
        facets: order,
        complexes,
        pairs,
        low_dimension_flag: n == 1,
    })
}

/// Evidence for Lemma "restsathypo": `K ∖ i` satisfies Theorem "maniwithboundretskel".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionEvidence {
    pub vertex: usize,
    pub dimension: usize,
    pub pure_of_dimension_n: bool,
    pub weak_pm_with_nonempty_boundary: bool,
    /// Per dual-graph component of `K ∖ i`: (smallest facet, minimum degree).
    pub component_min_degrees: Vec<(Simplex, usize)>,
    pub components_have_low_degree: bool,
}

impl DeletionEvidence {
    pub fn holds(&self) -> bool {
        self.pure_of_dimension_n
            && self.weak_pm_with_nonempty_boundary
            && self.components_have_low_degree
    }
}

pub fn deletion_hypotheses(
    k: &SimplicialComplex,
    i: usize,
) -> Result<DeletionEvidence, PseudoError> {
    let class = classify(k);
    if !class.pseudomanifold {
        return Err(PseudoError::NotAPseudomanifold(
            "K must be a closed pseudomanifold".into(),
        ));
    }
    let n = class.dimension as usize;
    let deleted = k.delete_vertex(i)?.complex;
    let sub = classify(&deleted);
    let pure_of_dimension_n = sub.pure && sub.dimension == n as isize;
    let weak_pm_with_nonempty_boundary =
        sub.weak_pm_with_boundary && !sub.boundary_faces.is_empty();
    let mut component_min_degrees = Vec::new();
    if let Ok(dual) = dual_graph(&deleted) {
        for comp in dual.components() {
            let min_degree = comp
                .iter()
                .map(|&x| dual.graph.degree(x))
                .min()
                .unwrap_or(0);
            component_min_degrees.push((dual.facets[comp[0]], min_degree));
        }
    }
    let components_have_low_degree =
        !component_min_degrees.is_empty() && component_min_degrees.iter().all(|&(_, d)| d < n + 1);
    Ok(DeletionEvidence {
        vertex: i,
        dimension: n,
        pure_of_dimension_n,
        weak_pm_with_nonempty_boundary,
        component_min_degrees,
        components_have_low_degree,
    })
}

/// Vertices of `K`'s boundary faces, for reporting.
pub fn boundary_vertices(class: &PseudoClass) -> BTreeSet<usize> {
    class.boundary_faces.iter().flat_map(|f| f.iter()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{corpus, VertexSet};

    fn vs<const N: usize>(v: [usize; N]) -> VertexSet {
        VertexSet::from_vertices(v)
    }

    #[test]
    fn dual_graph_examples() {
        let bd = corpus::simplex_boundary(3).unwrap();
        let d = dual_graph(&bd).unwrap();
        assert_eq!(d.degrees(), vec![3; 4]);
        assert_eq!(d.graph.edge_count(), 6);
        let pent = dual_graph(&corpus::polygon(5).unwrap()).unwrap();
        assert_eq!(pent.degrees(), vec![2; 5]);
        assert!(pent.graph.is_connected());
        let single = dual_graph(&SimplicialComplex::simplex(3)).unwrap();
        assert_eq!(single.graph.edge_count(), 0);
    }

    #[test]
    fn classification_examples() {
        let oct = corpus::cross_polytope_boundary(3).unwrap();
        let c = classify(&oct);
        assert!(c.pseudomanifold && c.closed && c.dimension == 2);
        let minus = corpus::simplex_boundary(3)
            .unwrap()
            .remove_face(vs([1, 2, 3]))
            .unwrap();
        // remove_face leaves ∂σ; drop it by taking the 3 remaining triangles
        let k =
            SimplicialComplex::from_vertex_sets(4, [vs([1, 2, 4]), vs([1, 3, 4]), vs([2, 3, 4])])
                .unwrap();
        assert_eq!(minus, k);
        let c = classify(&k);
        assert!(c.pseudomanifold_with_boundary && !c.pseudomanifold);
        assert_eq!(c.boundary_faces, vec![vs([1, 2]), vs([1, 3]), vs([2, 3])]);
        let bowtie =
            SimplicialComplex::from_vertex_sets(5, [vs([1, 2, 3]), vs([3, 4, 5])]).unwrap();
        let c = classify(&bowtie);
        assert!(c.pure && c.weak_pm_with_boundary && !c.dual_connected && !c.pseudomanifold);
    }

    #[test]
    fn boundary_examples() {
        let oct = corpus::cross_polytope_boundary(3).unwrap();
        assert!(boundary_complex(&oct).unwrap().is_void());
        let star = oct.delete_vertex(1).unwrap();
        let b = boundary_complex(&star.complex).unwrap();
        // vertices 2,3,5,6 become 1,2,4,5 after deleting 1
        assert_eq!(b.facets().len(), 4);
        assert_eq!(star.lift(b.vertex_set()), vs([2, 3, 5, 6]));
    }

    #[test]
    fn removal_pair_examples() {
        let k =
            SimplicialComplex::from_vertex_sets(4, [vs([1, 2, 4]), vs([1, 3, 4]), vs([2, 3, 4])])
                .unwrap();
        let p = find_removal_pair(&k, vs([1, 2, 4])).unwrap().unwrap();
        assert_eq!(p.tau, vs([1, 2]));
        assert!(!p.l.is_face(vs([1, 2])));
        let oct = corpus::cross_polytope_boundary(3).unwrap();
        assert_eq!(find_removal_pair(&oct, oct.facets()[0]).unwrap(), None);
        let tri = SimplicialComplex::simplex(3);
        assert_eq!(
            find_removal_pair(&tri, vs([1, 2, 3])).unwrap().unwrap().tau,
            vs([1, 2])
        );
        assert_eq!(
            find_removal_pair(&tri, vs([1, 2])),
            Err(PseudoError::NotMaximal(vs([1, 2])))
        );
    }

    #[test]
    fn filtration_examples() {
        let k =
            SimplicialComplex::from_vertex_sets(4, [vs([1, 2, 4]), vs([1, 3, 4]), vs([2, 3, 4])])
                .unwrap();
        let f = facet_filtration(&k).unwrap();
        assert_eq!(f.facets.len(), 3);
        assert_eq!(
            f.complexes.last().unwrap(),
            &corpus::simplex_boundary(3).unwrap().skeleton(1)
        );
        let oct = corpus::cross_polytope_boundary(3).unwrap();
        let star = oct.delete_vertex(1).unwrap().complex;
        assert_eq!(facet_filtration(&star).unwrap().facets.len(), 4);
        assert!(matches!(
            facet_filtration(&oct),
            Err(PseudoError::FiltrationHypothesis { .. })
        ));
    }

    #[test]
    fn deletion_examples() {
        let oct = corpus::cross_polytope_boundary(3).unwrap();
        assert!(deletion_hypotheses(&oct, 1).unwrap().holds());
        assert!(
            deletion_hypotheses(&corpus::simplex_boundary(3).unwrap(), 1)
                .unwrap()
                .holds()
        );
        let c64 = corpus::cyclic_sphere(6, 4).unwrap();
        for i in 1..=6 {
            assert!(deletion_hypotheses(&c64, i).unwrap().holds());
        }
        let k = SimplicialComplex::from_vertex_sets(4, [vs([1, 2, 4]), vs([1, 3, 4])]).unwrap();
        assert!(deletion_hypotheses(&k, 1).is_err());
    }
}
