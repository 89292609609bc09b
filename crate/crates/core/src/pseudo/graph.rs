//! Simple undirected graphs and the vertex-removal ordering of Lemma "vertexremoval".

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Simple undirected graph on nodes `0..n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    adjacency: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(nodes: usize) -> Self {
        Graph {
            adjacency: vec![BTreeSet::new(); nodes],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(nodes: usize, edges: I) -> Self {
        let mut g = Graph::new(nodes);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Adds `{a, b}`; loops are ignored and duplicates merged.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adjacency[a].insert(b);
            self.adjacency[b].insert(a);
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(&b)
    }

    /// Edges `(a, b)` with `a < b`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.node_count())
            .flat_map(|a| self.adjacency[a].range(a + 1..).map(move |&b| (a, b)))
            .collect()
    }

    /// Degree of `v` counting only neighbours inside `alive`.
    fn degree_within(&self, v: usize, alive: &BTreeSet<usize>) -> usize {
        self.adjacency[v]
            .iter()
            .filter(|u| alive.contains(u))
            .count()
    }

    /// Connected components of the subgraph induced on `nodes`, each sorted,
    /// ordered by smallest member.
    pub fn components_within(&self, nodes: &BTreeSet<usize>) -> Vec<Vec<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in nodes {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.neighbours(v) {
                    if nodes.contains(&u) && seen.insert(u) {
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&(0..self.node_count()).collect())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The subgraph induced on `nodes` (sorted), re-indexed `0..nodes.len()`.
    pub fn induced(&self, nodes: &[usize]) -> Graph {
        let index = |v: usize| nodes.binary_search(&v).ok();
        let mut g = Graph::new(nodes.len());
        for (i, &v) in nodes.iter().enumerate() {
            for u in self.neighbours(v) {
                if let Some(j) = index(u) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// Hypothesis failures of Lemma "vertexremoval", each reported distinctly.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum OrderingError {
    #[error("node {node} has degree {degree} > {bound}")]
    DegreeTooHigh {
        node: usize,
        degree: usize,
        bound: usize,
    },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("every node has degree exactly {bound}; no node of degree < {bound}")]
    NoLowDegreeVertex { bound: usize },
}

/// Ordering `v_1, ..., v_k` of all nodes such that each `v_i` has degree `< n` in
/// `G ∖ {v_1, ..., v_{i-1}}` (Lemma "vertexremoval").
///
/// Follows the lemma's proof: remove the smallest node of degree `< n`, then recurse
/// on the components of what remains, smallest component first. Each such component
/// contains a former neighbour of the removed node, whose degree dropped below `n`.
pub fn vertex_removal_ordering(g: &Graph, n: usize) -> Result<Vec<usize>, OrderingError> {
    if g.node_count() == 0 {
        return Ok(Vec::new());
    }
    if let Some(node) = (0..g.node_count()).find(|&v| g.degree(v) > n) {
        return Err(OrderingError::DegreeTooHigh {
            node,
            degree: g.degree(node),
            bound: n,
        });
    }
    let components = g.components().len();
    if components > 1 {
        return Err(OrderingError::Disconnected { components });
    }
    if (0..g.node_count()).all(|v| g.degree(v) >= n) {
        return Err(OrderingError::NoLowDegreeVertex { bound: n });
    }
    let mut order = Vec::with_capacity(g.node_count());
    let mut stack: Vec<Vec<usize>> = vec![(0..g.node_count()).collect()];
    while let Some(component) = stack.pop() {
        if component.len() <= n {
            // every degree is below |component| <= n and only decreases
            order.extend(component);
            continue;
        }
        let alive: BTreeSet<usize> = component.iter().copied().collect();
        let v = *component
            .iter()
            .find(|&&v| g.degree_within(v, &alive) < n)
            .expect("Lemma vertexremoval: every component keeps a node of degree < n");
        order.push(v);
        let mut rest = alive;
        rest.remove(&v);
        let mut parts = g.components_within(&rest);
        parts.reverse();
        stack.extend(parts);
    }
    Ok(order)
}

/// Failure of [`check_removal_ordering`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("ordering is not a permutation of the nodes")]
    NotAPermutation,
    #[error("node {node} at position {position} has degree {degree} >= {bound}")]
    DegreeAtRemoval {
        position: usize,
        node: usize,
        degree: usize,
        bound: usize,
    },
}

/// Replays an ordering prefix by prefix, recomputing degrees in the remaining graph.
pub fn check_removal_ordering(g: &Graph, order: &[usize], n: usize) -> Result<(), ReplayError> {
    let mut alive: BTreeSet<usize> = (0..g.node_count()).collect();
    let distinct: BTreeSet<usize> = order.iter().copied().collect();
    if order.len() != g.node_count() || distinct != alive {
        return Err(ReplayError::NotAPermutation);
    }
    for (position, &node) in order.iter().enumerate() {
        let degree = g.degree_within(node, &alive);
        if degree >= n {
            return Err(ReplayError::DegreeAtRemoval {
                position,
                node,
                degree,
                bound: n,
            });
        }
        alive.remove(&node);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(k: usize) -> Graph {
        Graph::from_edges(k, (0..k - 1).map(|i| (i, i + 1)))
    }

    #[test]
    fn path_starts_at_endpoint() {
        let g = path(3);
        let order = vertex_removal_ordering(&g, 2).unwrap();
        assert!(order[0] == 0 || order[0] == 2);
        check_removal_ordering(&g, &order, 2).unwrap();
    }

    #[test]
    fn cycle_has_no_low_degree_vertex() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(
            vertex_removal_ordering(&c4, 2),
            Err(OrderingError::NoLowDegreeVertex { bound: 2 })
        );
    }

    #[test]
    fn star_begins_with_leaf() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        let order = vertex_removal_ordering(&star, 3).unwrap();
        assert_ne!(order[0], 0);
        check_removal_ordering(&star, &order, 3).unwrap();
    }

    #[test]
    fn distinct_errors() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        assert!(matches!(
            vertex_removal_ordering(&star, 2),
            Err(OrderingError::DegreeTooHigh { node: 0, .. })
        ));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert_eq!(
            vertex_removal_ordering(&two, 2),
            Err(OrderingError::Disconnected { components: 2 })
        );
    }

    #[test]
    fn replay_rejects_bad_orderings() {
        let g = path(3);
        assert!(matches!(
            check_removal_ordering(&g, &[1, 0, 2], 2),
            Err(ReplayError::DegreeAtRemoval { position: 0, .. })
        ));
        assert_eq!(
            check_removal_ordering(&g, &[0, 1], 2),
            Err(ReplayError::NotAPermutation)
        );
    }
}
