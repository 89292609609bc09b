//! Recognition of closed triangulated surfaces.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurfaceClass {
    Orientable { genus: usize, euler: i64 },
    NonOrientable { crosscaps: usize, euler: i64 },
    NotASurface(String),
}

impl SurfaceClass {
    pub fn is_sphere(&self) -> bool {
        matches!(self, SurfaceClass::Orientable { genus: 0, .. })
    }

    pub fn is_orientable(&self) -> bool {
        matches!(self, SurfaceClass::Orientable { .. })
    }
}

/// Classifies `K` as a connected closed surface: pure of dimension 2, each edge in
/// exactly two triangles, every vertex link a single cycle, connected dual graph.
/// Orientability is decided by propagating a coherent orientation across edges.
/// Ghost vertices are ignored.
pub fn surface_classify(k: &SimplicialComplex) -> SurfaceClass {
    let not = |reason: &str| SurfaceClass::NotASurface(reason.to_string());
    if k.dim() != 2 || !k.is_pure() {
        return not("not a pure 2-dimensional complex");
    }
    let triangles = k.facets();
    let mut edge_map: BTreeMap<Simplex, Vec<usize>> = BTreeMap::new();
    for (idx, t) in triangles.iter().enumerate() {
        for e in t.boundary_faces() {
            edge_map.entry(e).or_default().push(idx);
        }
    }
    if let Some((e, _)) = edge_map.iter().find(|(_, ts)| ts.len() != 2) {
        return SurfaceClass::NotASurface(format!("edge {e} is not in exactly two triangles"));
    }
    for v in k.vertex_set().iter() {
        if !is_single_cycle(&k.link(v)) {
            return SurfaceClass::NotASurface(format!("link of vertex {v} is not a single cycle"));
        }
    }
    // Orientation signs relative to the sorted vertex order; 0 = unvisited.
    let mut sign = vec![0i8; triangles.len()];
    let mut orientable = true;
    let mut queue = VecDeque::from([0usize]);
    sign[0] = 1;
    let mut visited = 1;
    while let Some(a) = queue.pop_front() {
        for e in triangles[a].boundary_faces() {
            let b = edge_map[&e]
                .iter()
                .copied()
                .find(|&x| x != a)
                .expect("two triangles");
            // induced orientation of e from a triangle t: sign(t) * (-1)^{position of omitted vertex}
            let induced = |t: usize| -> i8 {
                let omitted = triangles[t].difference(e).min_vertex().expect("one vertex");
                let pos = triangles[t].position(omitted);
                if pos.is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            };
            let required = -sign[a] * induced(a) * induced(b);
            if sign[b] == 0 {
                sign[b] = required;
                visited += 1;
                queue.push_back(b);
            } else if sign[b] != required {
                orientable = false;
            }
        }
    }
    if visited != triangles.len() {
        return not("dual graph is disconnected");
    }
    let euler = k.euler_characteristic();
    if orientable {
        SurfaceClass::Orientable {
            genus: ((2 - euler) / 2) as usize,
            euler,
        }
    } else {
        SurfaceClass::NonOrientable {
            crosscaps: (2 - euler) as usize,
            euler,
        }
    }
}

/// A 1-dimensional complex that is a single cycle: connected, every vertex of degree 2.
pub(crate) fn is_single_cycle(k: &SimplicialComplex) -> bool {
    if k.dim() != 1 || !k.is_pure() {
        return false;
    }
    let vertices = k.vertex_set();
    let edges = k.facets();
    if edges.len() != vertices.len() || edges.len() < 3 {
        return false;
    }
    if vertices
        .iter()
        .any(|v| edges.iter().filter(|e| e.contains(v)).count() != 2)
    {
        return false;
    }
    // connectivity by walking the cycle
    let start = vertices.min_vertex().expect("nonempty");
    let (mut prev, mut cur, mut steps) = (0usize, start, 0usize);
    loop {
        let next = edges
            .iter()
            .filter(|e| e.contains(cur))
            .map(|e| e.without(cur).min_vertex().expect("edge"))
            .find(|&w| w != prev)
            .expect("degree two");
        prev = cur;
        cur = next;
        steps += 1;
        if cur == start {
            break;
        }
    }
    steps == vertices.len()
}
