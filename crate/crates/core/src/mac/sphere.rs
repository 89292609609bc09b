//! Decidable evidence that a complex triangulates `S^n`.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::homology::{
    edge_path_group_trivial, reduced_homology, surface_classify, HomologyProfile,
};
use crate::pseudo::classify;

/// Strength of the evidence. Ordered: `Fails < HomologyLevel < Verified`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SphereGrade {
    Fails,
    /// Closed pseudomanifold with the homology of `S^n` and recognized links;
    /// homeomorphism type not decided.
    HomologyLevel,
    /// Recognized as `S^n` (simplex boundary, cycle, or genus-0 surface).
    Verified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereEvidence {
    pub n: isize,
    pub grade: SphereGrade,
    /// Checks performed, in order, with their outcomes.
    pub checks: Vec<(String, bool)>,
}

impl SphereEvidence {
    pub fn is_positive(&self) -> bool {
        self.grade != SphereGrade::Fails
    }

    /// Name of the first failed check, if any.
    pub fn first_failure(&self) -> Option<&str> {
        self.checks
            .iter()
            .find(|(_, ok)| !ok)
            .map(|(c, _)| c.as_str())
    }
}

/// Gathers evidence that `K` triangulates `S^n`:
/// no ghost vertices; closed pseudomanifold of dimension `n`; `H̃(K) = H̃(S^n)`;
/// then full recognition for simplex boundaries and `n <= 2`, link checks for `n >= 3`
/// (all links `Verified` 2-spheres for `n = 3`, recursively positive for `n >= 4`).
/// For `n = 3` a closed 3-manifold whose edge-path group is shown trivial is `Verified`
/// (geometrization); otherwise link checks give `HomologyLevel`.
pub fn sphere_evidence(k: &SimplicialComplex, n: isize) -> SphereEvidence {
    let mut checks = Vec::new();
    let mut record = |name: String, ok: bool| {
        checks.push((name, ok));
        ok
    };
    let fails = |checks| SphereEvidence {
        n,
        grade: SphereGrade::Fails,
        checks,
    };

    if !record("no ghost vertices".into(), k.ghost_vertices().is_empty()) {
        return fails(checks);
    }
    let class = classify(k);
    if !record(
        format!("closed pseudomanifold of dimension {n}"),
        class.pseudomanifold && class.dimension == n,
    ) {
        return fails(checks);
    }
    if !record(
        format!("homology of S^{n}"),
        reduced_homology(k) == HomologyProfile::sphere(n),
    ) {
        return fails(checks);
    }
    let grade = if k.is_simplex_boundary() {
        record("boundary of a simplex".into(), true);
        SphereGrade::Verified
    } else if n <= 1 {
        // a closed 0- or 1-pseudomanifold with connected dual graph is two points or a cycle
        record(format!("recognized as S^{n}"), true);
        SphereGrade::Verified
    } else if n == 2 {
        if record("surface of genus 0".into(), surface_classify(k).is_sphere()) {
            SphereGrade::Verified
        } else {
            SphereGrade::Fails
        }
    } else {
        let required = if n == 3 {
            SphereGrade::Verified
        } else {
            SphereGrade::HomologyLevel
        };
        let links_ok = k.vertex_set().iter().all(|v| {
            let link = k.link(v).without_ghosts().complex;
            sphere_evidence(&link, n - 1).grade >= required
        });
        let label = if n == 3 {
            "every vertex link is a verified S^2".to_string()
        } else {
            format!("every vertex link has positive S^{} evidence", n - 1)
        };
        if !record(label, links_ok) {
            SphereGrade::Fails
        } else if n == 3
            && record(
                "edge-path group trivial (closed 3-manifold, Perelman)".into(),
                edge_path_group_trivial(k),
            )
        {
            // a simply connected closed 3-manifold is S^3
            SphereGrade::Verified
        } else {
            SphereGrade::HomologyLevel
        }
    };
    SphereEvidence { n, grade, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::corpus;

    #[test]
    fn spec_examples() {
        let oct = corpus::cross_polytope_boundary(3).unwrap();
        assert_eq!(sphere_evidence(&oct, 2).grade, SphereGrade::Verified);
        let c64 = corpus::cyclic_sphere(6, 4).unwrap();
        assert_eq!(sphere_evidence(&c64, 3).grade, SphereGrade::Verified);
        assert_eq!(
            sphere_evidence(&corpus::rp2_six(), 2).grade,
            SphereGrade::Fails
        );
        assert_eq!(
            sphere_evidence(&corpus::simplex_boundary(5).unwrap(), 4).grade,
            SphereGrade::Verified
        );
        assert_eq!(
            sphere_evidence(&corpus::cross_polytope_boundary(5).unwrap(), 4).grade,
            SphereGrade::HomologyLevel
        );
        assert_eq!(
            sphere_evidence(&corpus::torus_seven(), 2).grade,
            SphereGrade::Fails
        );
        assert_eq!(sphere_evidence(&oct, 3).grade, SphereGrade::Fails);
    }
}
