//! Moment-angle homology via the BBCG/Hochster subset sum, sphere evidence and Golodness.

mod golod;
mod sphere;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use golod::{
    desuspension_criterion, golod_status, torsion_transfer_check, DesuspensionVerdict, GolodStatus,
    GolodVerdict, InnerCheck, TorsionTransfer,
};
pub use sphere::{sphere_evidence, SphereEvidence, SphereGrade};

use crate::complex::{subsets_by_size, SimplicialComplex, VertexSet};
use crate::homology::{check_cap, reduced_homology, CapExceeded, HomologyProfile, KunnethError};
use crate::pairs::{PairClass, PairError, PairKind};
use crate::pseudo::PseudoError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacError {
    #[error(transparent)]
    Cap(#[from] CapExceeded),
    #[error("hypothesis failure: {0}")]
    Hypothesis(#[from] PseudoError),
    #[error(transparent)]
    Kunneth(#[from] KunnethError),
    #[error(transparent)]
    Pairs(#[from] PairError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MacVariant {
    /// `𝒵_K`, pairs `(D², S¹)`.
    MomentAngle,
    /// `ℝ𝒵_K`, pairs `(D¹, S⁰)`.
    Real,
    /// The skeleton `\overline{𝒵_K}`: the moment-angle sum without `I = [m]`.
    Skeleton,
    /// General pairs `(CA_i, A_i)`.
    Polyhedral,
}

/// The summand of one non-face `I`: `H̃_{j - shift}(K_I)` lands in degree `j`
/// (for general pairs, `profile` is already `H̃(|K_I| ∧ Â^I)` and shift is 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetContribution {
    pub subset: VertexSet,
    pub shift: isize,
    pub profile: HomologyProfile,
}

impl SubsetContribution {
    pub fn shifted_profile(&self) -> HomologyProfile {
        self.profile.shifted(self.shift)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacHomology {
    pub variant: MacVariant,
    pub m: usize,
    /// Reduced homology of the polyhedral product.
    pub total: HomologyProfile,
    /// Nonzero contributions, ordered by `(|I|, lex I)`.
    pub contributions: Vec<SubsetContribution>,
    /// Number of non-faces enumerated.
    pub non_faces: usize,
}

impl MacHomology {
    pub fn contribution(&self, subset: VertexSet) -> Option<&SubsetContribution> {
        self.contributions.iter().find(|c| c.subset == subset)
    }

    /// Contributions whose subset carries torsion, with the torsion degree in the total.
    pub fn torsion_contributions(&self) -> Vec<&SubsetContribution> {
        self.contributions
            .iter()
            .filter(|c| !c.profile.is_torsion_free())
            .collect()
    }
}

/// Non-faces of `K`, ordered by size and then lexicographically.
pub fn non_faces(k: &SimplicialComplex, include_full: bool) -> Vec<VertexSet> {
    let full = VertexSet::full(k.m());
    subsets_by_size(k.m())
        .into_iter()
        .filter(|&i| include_full || i != full)
        .filter(|&i| !k.is_face(i))
        .collect()
}

fn hochster_sum<F>(
    k: &SimplicialComplex,
    variant: MacVariant,
    cap: usize,
    contribution: F,
) -> Result<MacHomology, MacError>
where
    F: Fn(VertexSet) -> Result<SubsetContribution, MacError> + Sync,
{
    check_cap(k.m(), cap)?;
    let subsets = non_faces(k, variant != MacVariant::Skeleton);
    let parts: Vec<SubsetContribution> = subsets
        .par_iter()
        .map(|&i| contribution(i))
        .collect::<Result<_, _>>()?;
    let mut total = HomologyProfile::trivial();
    for c in &parts {
        total = total.direct_sum(&c.shifted_profile());
    }
    Ok(MacHomology {
        variant,
        m: k.m(),
        total,
        non_faces: subsets.len(),
        contributions: parts
            .into_iter()
            .filter(|c| !c.profile.is_trivial())
            .collect(),
    })
}

fn moment_angle_part(k: &SimplicialComplex, i: VertexSet) -> SubsetContribution {
    SubsetContribution {
        subset: i,
        shift: i.len() as isize + 1,
        profile: reduced_homology(&k.full_subcomplex(i).complex),
    }
}

/// `H̃_j(𝒵_K) = ⊕_{I ∉ K} H̃_{j-|I|-1}(K_I)`.
pub fn mac_homology(k: &SimplicialComplex, cap: usize) -> Result<MacHomology, MacError> {
    hochster_sum(k, MacVariant::MomentAngle, cap, |i| {
        Ok(moment_angle_part(k, i))
    })
}

/// The same sum without `I = [m]` (Prop "hmlyZkandskel").
pub fn skeleton_mac_homology(k: &SimplicialComplex, cap: usize) -> Result<MacHomology, MacError> {
    hochster_sum(k, MacVariant::Skeleton, cap, |i| {
        Ok(moment_angle_part(k, i))
    })
}

/// `H̃_j(ℝ𝒵_K) = ⊕_{I ∉ K} H̃_{j-1}(K_I)`.
pub fn rz_homology(k: &SimplicialComplex, cap: usize) -> Result<MacHomology, MacError> {
    hochster_sum(k, MacVariant::Real, cap, |i| {
        Ok(SubsetContribution {
            subset: i,
            shift: 1,
            profile: reduced_homology(&k.full_subcomplex(i).complex),
        })
    })
}

/// Reduced homology of `(CA, A)^K` via BBCG: `⊕_{I ∉ K} H̃(Σ|K_I| ∧ Â^I)`.
/// Moment-angle and real pair classes dispatch to the specialized sums.
pub fn polyhedral_homology(
    k: &SimplicialComplex,
    pairs: &PairClass,
    cap: usize,
) -> Result<MacHomology, MacError> {
    match pairs.kind {
        PairKind::MomentAngle => return mac_homology(k, cap),
        PairKind::Real => return rz_homology(k, cap),
        PairKind::General => pairs.validate(k.m())?,
    }
    hochster_sum(k, MacVariant::Polyhedral, cap, |i| {
        let mut profile = reduced_homology(&k.full_subcomplex(i).complex);
        for v in i.iter() {
            profile = profile.smash(&pairs.atom(v).homology)?;
        }
        Ok(SubsetContribution {
            subset: i,
            shift: 1,
            profile,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::corpus;
    use crate::homology::{AbelianGroup, DEFAULT_ENUMERATION_CAP as CAP};
    use crate::pairs::AtomSpec;

    #[test]
    fn golden_values() {
        for n in 1..=3 {
            let k = corpus::simplex_boundary(n + 1).unwrap();
            assert_eq!(
                mac_homology(&k, CAP).unwrap().total,
                HomologyProfile::sphere(2 * n as isize + 3)
            );
        }
        let square = corpus::polygon(4).unwrap();
        assert_eq!(
            mac_homology(&square, CAP)
                .unwrap()
                .total
                .poincare_polynomial(),
            "1 + 2t^3 + t^6"
        );
        let oct = corpus::cross_polytope_boundary(3).unwrap();
        assert_eq!(
            mac_homology(&oct, CAP).unwrap().total.poincare_polynomial(),
            "1 + 3t^3 + 3t^6 + t^9"
        );
        assert_eq!(
            skeleton_mac_homology(&oct, CAP)
                .unwrap()
                .total
                .poincare_polynomial(),
            "1 + 3t^3 + 3t^6"
        );
        assert!(
            skeleton_mac_homology(&corpus::simplex_boundary(3).unwrap(), CAP)
                .unwrap()
                .total
                .is_trivial()
        );
    }

    #[test]
    fn rp2_torsion_witness() {
        let mac = mac_homology(&corpus::rp2_six(), CAP).unwrap();
        let torsion: Vec<_> = mac.total.iter().filter(|(_, g)| !g.is_free()).collect();
        assert_eq!(torsion, vec![(8, &AbelianGroup::new(0, vec![2]))]);
        let witnesses = mac.torsion_contributions();
        assert_eq!(witnesses.len(), 1);
        assert_eq!(witnesses[0].subset, VertexSet::full(6));
    }

    #[test]
    fn real_moment_angle() {
        let square = corpus::polygon(4).unwrap();
        assert_eq!(
            rz_homology(&square, CAP)
                .unwrap()
                .total
                .poincare_polynomial(),
            "1 + 2t + t^2"
        );
        let bd = corpus::simplex_boundary(3).unwrap();
        assert_eq!(
            rz_homology(&bd, CAP).unwrap().total,
            HomologyProfile::sphere(3)
        );
        let c64 = rz_homology(&corpus::cyclic_sphere(6, 4).unwrap(), CAP)
            .unwrap()
            .total;
        // ℝ𝒵 of a neighbourly S^3 is a closed 4-manifold: degrees n+1 = 2 and 2n+2 = 4
        assert!(c64.degrees().iter().all(|d| [2, 4].contains(d)));
        assert_eq!(c64.rank(4), 1);
    }

    #[test]
    fn general_pairs_match_specialized_sums() {
        let oct = corpus::cross_polytope_boundary(3).unwrap();
        let circles = PairClass::general(vec![AtomSpec::sphere(1); 6]);
        assert_eq!(
            polyhedral_homology(&oct, &circles, CAP).unwrap().total,
            mac_homology(&oct, CAP).unwrap().total
        );
        let points = PairClass::general(vec![AtomSpec::sphere(0); 6]);
        assert_eq!(
            polyhedral_homology(&oct, &points, CAP).unwrap().total,
            rz_homology(&oct, CAP).unwrap().total
        );
        assert!(matches!(
            polyhedral_homology(&oct, &PairClass::general(vec![AtomSpec::sphere(1)]), CAP),
            Err(MacError::Pairs(_))
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let k = corpus::polygon(6).unwrap();
        assert!(matches!(
            mac_homology(&k, 5),
            Err(MacError::Cap(CapExceeded { m: 6, cap: 5 }))
        ));
    }
}
