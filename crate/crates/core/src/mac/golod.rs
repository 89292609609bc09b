//! Rule-based Golodness verdicts and the checks around Theorem "neighbourlupseudominnonGolod".

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sphere::{sphere_evidence, SphereEvidence, SphereGrade};
use super::{mac_homology, non_faces, MacError};
use crate::complex::{SimplicialComplex, VertexSet};
use crate::homology::{check_cap, reduced_homology, CapExceeded, HomologyProfile};
use crate::pseudo::{classify, facet_filtration};

pub const CITE_GOLOD_MAM: &str = "Lemma \"GolodMaM\"";
pub const CITE_DICHOTOMY: &str = "Theorem \"neighbourlupseudominnonGolod\"";
pub const CITE_NEIGHBOURLY_SPHERE: &str = "Theorem \"neighbourlytriofsphere\"";
pub const CITE_TORSION_TRANSFER: &str = "Prop \"torfreeret\"";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GolodVerdict {
    Golod,
    MinimallyNonGolod,
    NotGolod,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GolodStatus {
    pub verdict: GolodVerdict,
    /// Minimal non-Golodness: `Some(true)`/`Some(false)` when decided, `None` when unknown.
    pub minimally_non_golod: Option<bool>,
    /// Citations of the rules that produced the verdict.
    pub justification: Vec<String>,
    /// The Golod/minimally-non-Golod dichotomy applies (n-neighbourly (2n+1)-pseudomanifold).
    pub dichotomy: bool,
    /// Hypotheses that were only checked at homology level.
    pub conditions: Vec<String>,
    pub sphere_evidence: Option<SphereEvidence>,
}

impl GolodStatus {
    pub fn is_conditional(&self) -> bool {
        !self.conditions.is_empty()
    }
}

/// `n` with `dim K = 2n + 1` when `K` is an `n`-neighbourly odd-dimensional
/// pseudomanifold without ghost vertices, i.e. the hypothesis of the dichotomy.
fn dichotomy_degree(k: &SimplicialComplex) -> Option<usize> {
    let class = classify(k);
    if !class.pseudomanifold || class.dimension < 1 || class.dimension % 2 == 0 {
        return None;
    }
    let n = ((class.dimension - 1) / 2) as usize;
    let nb = k.neighbourliness();
    (!nb.ghost_vertices && nb.k >= n).then_some(n)
}

/// Decision tree of the spec: simplex boundary → Golod; neighbourly odd sphere →
/// minimally non-Golod; other sphere → not Golod; otherwise Unknown.
pub fn golod_status(k: &SimplicialComplex) -> GolodStatus {
    let dichotomy = dichotomy_degree(k).is_some();
    if k.is_simplex_boundary() {
        return GolodStatus {
            verdict: GolodVerdict::Golod,
            minimally_non_golod: Some(false),
            justification: vec![format!("{CITE_GOLOD_MAM}: K = ∂Δ^{} is Golod", k.m() - 1)],
            dichotomy,
            conditions: Vec::new(),
            sphere_evidence: Some(sphere_evidence(k, k.dim())),
        };
    }
    let evidence = (k.dim() >= 0).then(|| sphere_evidence(k, k.dim()));
    let positive = evidence.as_ref().is_some_and(SphereEvidence::is_positive);
    let conditions: Vec<String> = match &evidence {
        Some(e) if e.grade == SphereGrade::HomologyLevel => {
            vec![format!(
                "K triangulates S^{} (checked at homology level with link recognition)",
                e.n
            )]
        }
        _ => Vec::new(),
    };
    let not_golod_reason = format!(
        "{CITE_GOLOD_MAM}: K triangulates S^{} and K ≠ ∂Δ^{}, so 𝒵_K has a nontrivial cup product (Poincaré duality)",
        k.dim(),
        k.dim() + 1
    );
    if positive && dichotomy {
        return GolodStatus {
            verdict: GolodVerdict::MinimallyNonGolod,
            minimally_non_golod: Some(true),
            justification: vec![
                not_golod_reason,
                format!("{CITE_DICHOTOMY}: an n-neighbourly (2n+1)-dimensional pseudomanifold is either Golod or minimally non-Golod"),
                format!("{CITE_NEIGHBOURLY_SPHERE}: a neighbourly triangulation of S^(2n+1) other than ∂Δ^(2n+2) is minimally non-Golod"),
            ],
            dichotomy,
            conditions,
            sphere_evidence: evidence,
        };
    }
    if positive {
        return GolodStatus {
            verdict: GolodVerdict::NotGolod,
            minimally_non_golod: None,
            justification: vec![
                not_golod_reason,
                "minimal non-Golodness: no implemented criterion applies".to_string(),
            ],
            dichotomy,
            conditions,
            sphere_evidence: evidence,
        };
    }
    let mut justification = vec!["no implemented rule decides Golodness".to_string()];
    if dichotomy {
        justification.push(format!(
            "{CITE_DICHOTOMY}: K is either Golod or minimally non-Golod (which one is undecided without sphere evidence)"
        ));
    }
    GolodStatus {
        verdict: GolodVerdict::Unknown,
        minimally_non_golod: None,
        justification,
        dichotomy,
        conditions: Vec::new(),
        sphere_evidence: evidence,
    }
}

/// Inner check of Theorem "neighbourlytriofsphere": every proper full subcomplex
/// has homology free and concentrated in degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerCheck {
    pub degree: usize,
    pub passed: bool,
    /// Proper non-faces examined (faces give contractible `K_I`).
    pub subsets_checked: usize,
    /// Proper `K_I` with nonzero homology.
    pub nontrivial: usize,
    pub counterexample: Option<(VertexSet, HomologyProfile)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesuspensionVerdict {
    pub hypothesis_holds: bool,
    pub dimension: isize,
    /// `n` with `dim K = 2n + 1`, when the dimension is odd.
    pub n: Option<usize>,
    pub pseudomanifold: bool,
    pub neighbourliness: usize,
    pub failures: Vec<String>,
    /// Conclusion: the BBCG splitting of `Σ𝒵_{K∖i}` desuspends for all `i`.
    pub conclusion: Option<String>,
    pub inner_check: Option<InnerCheck>,
}

/// Checks the hypothesis of Theorem "neighbourlupseudominnonGolod" and runs the
/// inner check of Theorem "neighbourlytriofsphere" when it holds.
pub fn desuspension_criterion(
    k: &SimplicialComplex,
    cap: usize,
) -> Result<DesuspensionVerdict, CapExceeded> {
    let class = classify(k);
    let nb = k.neighbourliness();
    let dimension = class.dimension;
    let n = (dimension >= 1 && dimension % 2 == 1).then(|| ((dimension - 1) / 2) as usize);
    let mut failures = Vec::new();
    if !class.pseudomanifold {
        failures.push("K is not a closed pseudomanifold".to_string());
    }
    match n {
        None => failures.push(format!("dimension {dimension} is not of the form 2n+1")),
        Some(n) if nb.ghost_vertices || nb.k < n => failures.push(format!(
            "K is not {n}-neighbourly (neighbourliness {})",
            nb.k
        )),
        Some(_) => {}
    }
    if n.is_none() && !nb.complete_one_skeleton {
        let missing = k.minimal_non_faces().into_iter().find(|s| s.len() == 2);
        if let Some(pair) = missing {
            failures.push(format!("not 1-neighbourly: {pair} is not an edge"));
        }
    }
    let hypothesis_holds = failures.is_empty();
    let inner_check = match (hypothesis_holds, n) {
        (true, Some(n)) => Some(inner_check(k, n, cap)?),
        _ => None,
    };
    Ok(DesuspensionVerdict {
        hypothesis_holds,
        dimension,
        n,
        pseudomanifold: class.pseudomanifold,
        neighbourliness: nb.k,
        conclusion: hypothesis_holds.then(|| {
            format!("{CITE_DICHOTOMY}: the BBCG decomposition of Σ𝒵_(K∖i) desuspends for every vertex i")
        }),
        failures,
        inner_check,
    })
}

fn inner_check(k: &SimplicialComplex, n: usize, cap: usize) -> Result<InnerCheck, CapExceeded> {
    check_cap(k.m(), cap)?;
    let subsets = non_faces(k, false);
    let profiles: Vec<(VertexSet, HomologyProfile)> = subsets
        .par_iter()
        .map(|&i| (i, reduced_homology(&k.full_subcomplex(i).complex)))
        .collect();
    let counterexample = profiles
        .iter()
        .find(|(_, p)| !p.free_and_concentrated_in(n as isize))
        .cloned();
    Ok(InnerCheck {
        degree: n,
        passed: counterexample.is_none(),
        subsets_checked: subsets.len(),
        nontrivial: profiles.iter().filter(|(_, p)| !p.is_trivial()).count(),
        counterexample,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionTransfer {
    pub dimension: usize,
    pub mac_torsion_free: bool,
    pub skeleton_torsion_free: bool,
    /// `mac_torsion_free == skeleton_torsion_free`; a mismatch indicates an engine bug.
    pub agree: bool,
    pub mac_witness: Option<VertexSet>,
    pub skeleton_witness: Option<VertexSet>,
    pub citation: String,
}

/// Prop "torfreeret": `H_*(𝒵_K)` is torsion-free iff `H_*(𝒵_{K^{n-1}})` is, under the
/// hypotheses of Theorem "maniwithboundretskel" (checked via the facet filtration).
pub fn torsion_transfer_check(
    k: &SimplicialComplex,
    cap: usize,
) -> Result<TorsionTransfer, MacError> {
    let filtration = facet_filtration(k)?;
    let skeleton = k.skeleton(filtration.dimension - 1);
    let whole = mac_homology(k, cap)?;
    let skel = mac_homology(&skeleton, cap)?;
    let witness = |m: &super::MacHomology| m.torsion_contributions().first().map(|c| c.subset);
    let (a, b) = (whole.total.is_torsion_free(), skel.total.is_torsion_free());
    Ok(TorsionTransfer {
        dimension: filtration.dimension,
        mac_torsion_free: a,
        skeleton_torsion_free: b,
        agree: a == b,
        mac_witness: witness(&whole),
        skeleton_witness: witness(&skel),
        citation: format!(
            "{CITE_TORSION_TRANSFER}: H_*(𝒵_K) is torsion free iff H_*(𝒵_(K^(n-1))) is"
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::corpus;
    use crate::homology::DEFAULT_ENUMERATION_CAP as CAP;

    /// Cone over `rp2_six` with apex 7: a 3-pseudomanifold with boundary `RP²`.
    fn cone_over_rp2() -> SimplicialComplex {
        let facets = corpus::rp2_six()
            .facets()
            .iter()
            .map(|f| f.with(7))
            .collect::<Vec<_>>();
        SimplicialComplex::from_vertex_sets(7, facets).unwrap()
    }

    #[test]
    fn golod_examples() {
        for n in 1..=4 {
            let s = golod_status(&corpus::simplex_boundary(n).unwrap());
            assert_eq!(s.verdict, GolodVerdict::Golod);
            assert!(s.justification[0].contains("GolodMaM"));
        }
        let c64 = golod_status(&corpus::cyclic_sphere(6, 4).unwrap());
        assert_eq!(c64.verdict, GolodVerdict::MinimallyNonGolod);
        assert!(!c64.is_conditional());
        let c84 = golod_status(&corpus::cross_polytope_boundary(4).unwrap());
        assert_eq!(c84.verdict, GolodVerdict::NotGolod);
        assert!(c64
            .justification
            .iter()
            .any(|j| j.contains("neighbourlytriofsphere")));
        let oct = golod_status(&corpus::cross_polytope_boundary(3).unwrap());
        assert_eq!(oct.verdict, GolodVerdict::NotGolod);
        assert_eq!(oct.minimally_non_golod, None);
        assert!(!oct.is_conditional());
        assert_eq!(
            golod_status(&corpus::rp2_six()).verdict,
            GolodVerdict::Unknown
        );
        assert_eq!(
            golod_status(&corpus::polygon(5).unwrap()).verdict,
            GolodVerdict::MinimallyNonGolod
        );
    }

    #[test]
    fn desuspension_examples() {
        let c64 = desuspension_criterion(&corpus::cyclic_sphere(6, 4).unwrap(), CAP).unwrap();
        assert!(c64.hypothesis_holds);
        let inner = c64.inner_check.unwrap();
        assert!(inner.passed && inner.degree == 1 && inner.nontrivial > 0);
        let oct =
            desuspension_criterion(&corpus::cross_polytope_boundary(3).unwrap(), CAP).unwrap();
        assert!(!oct.hypothesis_holds);
        assert!(oct.failures.iter().any(|f| f.contains("{1,4}")));
        let bd = desuspension_criterion(&corpus::simplex_boundary(4).unwrap(), CAP).unwrap();
        assert!(bd.hypothesis_holds);
        assert_eq!(bd.inner_check.unwrap().nontrivial, 0);
    }

    #[test]
    fn torsion_transfer_examples() {
        let bd = corpus::simplex_boundary(3).unwrap();
        let minus = bd.remove_face(VertexSet::from_vertices([1, 2, 3])).unwrap();
        let t = torsion_transfer_check(&minus, CAP).unwrap();
        assert!(t.agree && t.mac_torsion_free);
        let star = corpus::cross_polytope_boundary(3)
            .unwrap()
            .delete_vertex(1)
            .unwrap()
            .complex;
        let t = torsion_transfer_check(&star, CAP).unwrap();
        assert!(t.agree && t.mac_torsion_free);
        let t = torsion_transfer_check(&cone_over_rp2(), CAP).unwrap();
        assert!(t.agree && !t.mac_torsion_free && !t.skeleton_torsion_free);
        assert_eq!(t.mac_witness, Some(VertexSet::full(6)));
        assert!(torsion_transfer_check(&corpus::cross_polytope_boundary(3).unwrap(), CAP).is_err());
    }
}
