//! Exact integer simplicial homology and homology-level recognitions.

mod chain;
pub mod linalg;
mod profile;
mod surface;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use chain::ChainComplex;
pub use profile::{invariant_factors, AbelianGroup, HomologyProfile, KunnethError};
pub use surface::{surface_classify, SurfaceClass};

use crate::complex::{subsets_by_size, SimplicialComplex, VertexSet};

/// Default limit on `m` for commands that enumerate all `2^m` vertex subsets.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize, Deserialize)]
#[error("enumeration over 2^{m} subsets exceeds the cap m <= {cap}")]
pub struct CapExceeded {
    pub m: usize,
    pub cap: usize,
}

pub(crate) fn check_cap(m: usize, cap: usize) -> Result<(), CapExceeded> {
    if m > cap {
        Err(CapExceeded { m, cap })
    } else {
        Ok(())
    }
}

/// Reduced integer homology of `|K|`.
///
/// Smith normal form runs in checked `i64` and is redone over `BigInt` if any
/// intermediate entry overflows, so the result is exact either way.
/// `{∅}` has `H̃_{-1} = Z`; the void complex has trivial homology.
pub fn reduced_homology(k: &SimplicialComplex) -> HomologyProfile {
    match ChainComplex::<i64>::from_complex(k).reduced_homology() {
        Ok(profile) => profile,
        Err(_) => ChainComplex::<BigInt>::from_complex(k)
            .reduced_homology()
            .expect("BigInt elimination cannot overflow"),
    }
}

/// Reduced Betti numbers by Gaussian elimination over `Q`; an oracle independent of Smith normal form.
pub fn rational_betti_numbers(k: &SimplicialComplex) -> HomologyProfile {
    ChainComplex::<BigRational>::from_complex(k).reduced_betti()
}

/// Outcome of [`torsion_free_all_full_subcomplexes`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionScan {
    pub torsion_free: bool,
    /// Smallest (by size, then lexicographic) `I` with torsion in `H̃(K_I)`.
    pub witness: Option<VertexSet>,
    /// Torsion of the witness, as `(degree, coefficients)`.
    pub witness_torsion: Option<(isize, Vec<u64>)>,
    pub complete_one_skeleton_only: bool,
    pub subsets_checked: usize,
}

/// Checks that every nonempty full subcomplex `K_I` has torsion-free homology;
/// optionally only those `K_I` with complete 1-skeleton (Theorem "2diminP").
pub fn torsion_free_all_full_subcomplexes(
    k: &SimplicialComplex,
    restrict_complete_one_skeleton: bool,
    cap: usize,
) -> Result<TorsionScan, CapExceeded> {
    check_cap(k.m(), cap)?;
    let candidates: Vec<VertexSet> = subsets_by_size(k.m())
        .into_iter()
        .filter(|&i| !k.is_face(i))
        .filter(|&i| !restrict_complete_one_skeleton || complete_on(k, i))
        .collect();
    let witness = candidates.par_iter().find_map_first(|&i| {
        let sub = k.full_subcomplex(i).complex;
        reduced_homology(&sub).first_torsion().map(|t| (i, t))
    });
    Ok(TorsionScan {
        torsion_free: witness.is_none(),
        witness: witness.as_ref().map(|(i, _)| *i),
        witness_torsion: witness.map(|(_, t)| t),
        complete_one_skeleton_only: restrict_complete_one_skeleton,
        subsets_checked: candidates.len(),
    })
}

/// Every pair of vertices in `i` spans an edge of `k`.
fn complete_on(k: &SimplicialComplex, i: VertexSet) -> bool {
    let v: Vec<usize> = i.to_vec();
    v.iter().enumerate().all(|(a, &x)| {
        v[a + 1..]
            .iter()
            .all(|&y| k.is_face(VertexSet::from_vertices([x, y])))
    })
}

/// Result of [`wedge_recognition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WedgeRecognition {
    /// Sphere dimensions with multiplicity, ascending; empty means a point.
    Wedge(Vec<usize>),
    Unknown(String),
}

/// Lemma "homoldethomot": a simply-connected complex with cells in two consecutive
/// dimensions and torsion-free homology is a wedge of spheres. Both topological
/// hypotheses are attested by the caller; this function only checks the profile.
pub fn wedge_recognition(
    profile: &HomologyProfile,
    simply_connected: bool,
    cells_two_consecutive_dims: bool,
) -> WedgeRecognition {
    if !profile.is_torsion_free() {
        return WedgeRecognition::Unknown("homology has torsion".into());
    }
    if !simply_connected {
        return WedgeRecognition::Unknown("simple connectivity not attested".into());
    }
    if !cells_two_consecutive_dims {
        return WedgeRecognition::Unknown(
            "cells in two consecutive dimensions not attested".into(),
        );
    }
    let (lo, hi) = match (profile.min_degree(), profile.max_degree()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return WedgeRecognition::Wedge(Vec::new()),
    };
    if lo < 2 {
        return WedgeRecognition::Unknown(format!(
            "homology in degree {lo} contradicts simple connectivity"
        ));
    }
    if hi - lo > 1 {
        return WedgeRecognition::Unknown(format!(
            "homology in degrees {lo} and {hi} cannot come from cells in two consecutive dimensions"
        ));
    }
    let spheres = profile
        .iter()
        .flat_map(|(d, g)| std::iter::repeat_n(d as usize, g.rank))
        .collect();
    WedgeRecognition::Wedge(spheres)
}

/// Sufficient test for `π₁(|K|) = 1`: the edge-path group is generated by edges
/// outside a spanning tree, and a triangle with two trivial edges forces its third
/// edge trivial. Returns true when this closure reaches every edge (and `|K|` is
/// connected); false means "not shown", not "not simply connected".
pub fn edge_path_group_trivial(k: &SimplicialComplex) -> bool {
    let vertices = k.vertex_set();
    let Some(root) = vertices.min_vertex() else {
        return false;
    };
    let edges = k.faces(1);
    let mut trivial: std::collections::BTreeSet<VertexSet> = std::collections::BTreeSet::new();
    let mut reached = VertexSet::singleton(root);
    let mut frontier = vec![root];
    while let Some(v) = frontier.pop() {
        for e in edges.iter().filter(|e| e.contains(v)) {
            let w = e.without(v).min_vertex().expect("edge has two vertices");
            if !reached.contains(w) {
                reached = reached.with(w);
                trivial.insert(*e);
                frontier.push(w);
            }
        }
    }
    if reached != vertices {
        return false;
    }
    let triangles = k.faces(2);
    loop {
        let mut changed = false;
        for t in &triangles {
            let sides = t.boundary_faces();
            let known = sides.iter().filter(|e| trivial.contains(e)).count();
            if known == 2 {
                let missing = sides
                    .into_iter()
                    .find(|e| !trivial.contains(e))
                    .expect("one missing side");
                trivial.insert(missing);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    trivial.len() == edges.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::corpus;

    #[test]
    fn spec_examples() {
        let rp2 = reduced_homology(&corpus::rp2_six());
        assert_eq!(
            rp2,
            HomologyProfile::trivial().with(1, AbelianGroup::new(0, vec![2]))
        );
        assert_eq!(
            reduced_homology(&corpus::polygon(5).unwrap()),
            HomologyProfile::sphere(1)
        );
        let oct = corpus::cross_polytope_boundary(3).unwrap();
        assert_eq!(reduced_homology(&oct), HomologyProfile::sphere(2));
        let torus = reduced_homology(&corpus::torus_seven());
        assert_eq!(torus, HomologyProfile::from_ranks([(1, 2), (2, 1)]));
    }

    #[test]
    fn rational_oracle_agrees() {
        for k in [
            corpus::rp2_six(),
            corpus::torus_seven(),
            corpus::cyclic_sphere(7, 4).unwrap(),
        ] {
            let z = reduced_homology(&k);
            let q = rational_betti_numbers(&k);
            for d in -1..=k.dim() {
                assert_eq!(z.rank(d), q.rank(d));
            }
        }
    }

    #[test]
    fn torsion_scan() {
        let rp2 = torsion_free_all_full_subcomplexes(&corpus::rp2_six(), false, 20).unwrap();
        assert!(!rp2.torsion_free);
        assert_eq!(rp2.witness, Some(VertexSet::full(6)));
        assert_eq!(rp2.witness_torsion, Some((1, vec![2])));
        let oct = corpus::cross_polytope_boundary(3).unwrap();
        assert!(
            torsion_free_all_full_subcomplexes(&oct, false, 20)
                .unwrap()
                .torsion_free
        );
        assert!(
            torsion_free_all_full_subcomplexes(&oct, true, 20)
                .unwrap()
                .torsion_free
        );
        assert_eq!(
            torsion_free_all_full_subcomplexes(&oct, false, 5),
            Err(CapExceeded { m: 6, cap: 5 })
        );
    }

    #[test]
    fn edge_path_group() {
        assert!(edge_path_group_trivial(
            &corpus::cyclic_sphere(6, 4).unwrap()
        ));
        assert!(edge_path_group_trivial(
            &corpus::cross_polytope_boundary(3).unwrap()
        ));
        assert!(!edge_path_group_trivial(&corpus::polygon(5).unwrap()));
        assert!(!edge_path_group_trivial(&corpus::torus_seven()));
    }

    #[test]
    fn wedge_examples() {
        let p = HomologyProfile::from_ranks([(5, 3), (6, 1)]);
        assert_eq!(
            wedge_recognition(&p, true, true),
            WedgeRecognition::Wedge(vec![5, 5, 5, 6])
        );
        let t = HomologyProfile::trivial().with(4, AbelianGroup::new(0, vec![2]));
        assert!(matches!(
            wedge_recognition(&t, true, true),
            WedgeRecognition::Unknown(_)
        ));
        assert_eq!(
            wedge_recognition(&HomologyProfile::trivial(), true, true),
            WedgeRecognition::Wedge(vec![])
        );
    }
}
