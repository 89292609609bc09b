//! Derivation trees for 𝒫-membership and decomposition claims, with re-validation.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{Simplex, SimplicialComplex, VertexSet};
use crate::homology::{
    reduced_homology, surface_classify, torsion_free_all_full_subcomplexes, HomologyProfile,
    SurfaceClass, DEFAULT_ENUMERATION_CAP as CAP,
};
use crate::mac::{
    desuspension_criterion, mac_homology, skeleton_mac_homology, sphere_evidence, SphereGrade,
};
use crate::pairs::{PairClass, PairKind};
use crate::pseudo::{classify, deletion_hypotheses, facet_filtration, find_removal_pair};

/// What a certificate establishes, about which complex and pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Goal {
    pub statement: String,
    pub complex: SimplicialComplex,
    pub pairs: PairClass,
}

/// A recomputable claim about a complex. Every variant stores the value it asserts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "claim")]
pub enum Claim {
    Dimension {
        value: isize,
    },
    NoGhostVertices {
        value: bool,
    },
    ClosedPseudomanifold {
        value: bool,
        dimension: isize,
    },
    /// `None` when `K` is not an orientable closed surface.
    OrientableSurface {
        genus: Option<usize>,
    },
    CompleteOneSkeleton {
        value: bool,
    },
    Neighbourliness {
        k: usize,
    },
    TorsionFreeFullSubcomplexes {
        complete_one_skeleton_only: bool,
        torsion_free: bool,
        witness: Option<VertexSet>,
    },
    SphereEvidence {
        n: isize,
        grade: SphereGrade,
    },
    ReducedHomology {
        profile: HomologyProfile,
    },
    MacHomology {
        profile: HomologyProfile,
    },
    SkeletonMacHomology {
        profile: HomologyProfile,
    },
    /// Theorem "maniwithboundretskel" hypotheses hold; facets in removal order.
    FacetFiltration {
        facets: Vec<Simplex>,
        boundary_nonempty: bool,
    },
    RemovalPair {
        sigma: Simplex,
        tau: Simplex,
    },
    /// `skeleton` is the `t`-skeleton of the fact's complex.
    Skeleton {
        t: usize,
        skeleton: SimplicialComplex,
    },
    /// `result` is `K ∖ vertex`, re-indexed.
    VertexDeletion {
        vertex: usize,
        result: SimplicialComplex,
    },
    /// `K = K_{star} ∪_{K_{star ∖ v}} (K ∖ v)` with `star = v ∪ N(v) ≠ [m]`; `witness` is a
    /// vertex outside the star, so `K_{star}` is a full subcomplex of `K ∖ witness`.
    RestrictionPushout {
        vertex: usize,
        star: VertexSet,
        witness: usize,
    },
    /// Lemma "restsathypo" for `K ∖ vertex`.
    DeletionHypotheses {
        vertex: usize,
        holds: bool,
    },
    /// Theorem "neighbourlytriofsphere" inner check in degree `n`.
    DesuspensionInnerCheck {
        n: usize,
        passed: bool,
    },
    /// `ΣA_i ∈ 𝒲` for the standard pairs (`ΣS¹ = S²`); the complex is irrelevant.
    StandardPairs {
        kind: PairKind,
    },
}

impl Claim {
    /// Recomputes the claim's value on `k`, returning the same variant.
    pub fn recompute(&self, k: &SimplicialComplex) -> Result<Claim, String> {
        Ok(match self {
            Claim::Dimension { .. } => Claim::Dimension { value: k.dim() },
            Claim::NoGhostVertices { .. } => Claim::NoGhostVertices {
                value: k.ghost_vertices().is_empty(),
            },
            Claim::ClosedPseudomanifold { .. } => {
                let c = classify(k);
                Claim::ClosedPseudomanifold {
                    value: c.pseudomanifold,
                    dimension: c.dimension,
                }
            }
            Claim::OrientableSurface { .. } => Claim::OrientableSurface {
                genus: match surface_classify(k) {
                    SurfaceClass::Orientable { genus, .. } => Some(genus),
                    _ => None,
                },
            },
            Claim::CompleteOneSkeleton { .. } => Claim::CompleteOneSkeleton {
                value: k.has_complete_one_skeleton(),
            },
            Claim::Neighbourliness { .. } => Claim::Neighbourliness {
                k: k.neighbourliness().k,
            },
            Claim::TorsionFreeFullSubcomplexes {
                complete_one_skeleton_only,
                ..
            } => {
                let scan = torsion_free_all_full_subcomplexes(k, *complete_one_skeleton_only, CAP)
                    .map_err(|e| e.to_string())?;
                Claim::TorsionFreeFullSubcomplexes {
                    complete_one_skeleton_only: *complete_one_skeleton_only,
                    torsion_free: scan.torsion_free,
                    witness: scan.witness,
                }
            }
            Claim::SphereEvidence { n, .. } => Claim::SphereEvidence {
                n: *n,
                grade: sphere_evidence(k, *n).grade,
            },
            Claim::ReducedHomology { .. } => Claim::ReducedHomology {
                profile: reduced_homology(k),
            },
            Claim::MacHomology { .. } => Claim::MacHomology {
                profile: mac_homology(k, CAP).map_err(|e| e.to_string())?.total,
            },
            Claim::SkeletonMacHomology { .. } => Claim::SkeletonMacHomology {
                profile: skeleton_mac_homology(k, CAP)
                    .map_err(|e| e.to_string())?
                    .total,
            },
            Claim::FacetFiltration { .. } => {
                let f = facet_filtration(k).map_err(|e| e.to_string())?;
                Claim::FacetFiltration {
                    facets: f.facets,
                    boundary_nonempty: !classify(k).boundary_faces.is_empty(),
                }
            }
            Claim::RemovalPair { sigma, .. } => {
                let pair = find_removal_pair(k, *sigma)
                    .map_err(|e| e.to_string())?
                    .ok_or_else(|| format!("no removal pair for {sigma}"))?;
                Claim::RemovalPair {
                    sigma: pair.sigma,
                    tau: pair.tau,
                }
            }
            Claim::Skeleton { t, .. } => Claim::Skeleton {
                t: *t,
                skeleton: k.skeleton(*t),
            },
            Claim::VertexDeletion { vertex, .. } => Claim::VertexDeletion {
                vertex: *vertex,
                result: k.delete_vertex(*vertex).map_err(|e| e.to_string())?.complex,
            },
            Claim::RestrictionPushout {
                vertex,
                star,
                witness,
            } => {
                check_restriction_pushout(k, *vertex, *star, *witness)?;
                self.clone()
            }
            Claim::DeletionHypotheses { vertex, .. } => Claim::DeletionHypotheses {
                vertex: *vertex,
                holds: deletion_hypotheses(k, *vertex)
                    .map_err(|e| e.to_string())?
                    .holds(),
            },
            Claim::DesuspensionInnerCheck { n, .. } => {
                let verdict = desuspension_criterion(k, CAP).map_err(|e| e.to_string())?;
                let passed = verdict.hypothesis_holds
                    && verdict.n == Some(*n)
                    && verdict.inner_check.is_some_and(|c| c.passed);
                Claim::DesuspensionInnerCheck { n: *n, passed }
            }
            Claim::StandardPairs { kind } => {
                if *kind != PairKind::MomentAngle {
                    return Err(format!(
                        "{kind:?} pairs are not standard moment-angle pairs"
                    ));
                }
                self.clone()
            }
        })
    }
}

/// Closed neighbourhood `v ∪ N(v)` in the 1-skeleton.
pub fn closed_neighbourhood(k: &SimplicialComplex, v: usize) -> VertexSet {
    k.facets()
        .iter()
        .filter(|f| f.contains(v))
        .fold(VertexSet::singleton(v), |acc, f| acc.union(*f))
}

fn check_restriction_pushout(
    k: &SimplicialComplex,
    v: usize,
    star: VertexSet,
    w: usize,
) -> Result<(), String> {
    if closed_neighbourhood(k, v) != star {
        return Err(format!("{star} is not the closed neighbourhood of {v}"));
    }
    if star.contains(w) || !k.vertex_set().contains(w) {
        return Err(format!("vertex {w} is not a vertex outside {star}"));
    }
    // every facet lies in the star or avoids v, so K is the union of K_star and K∖v
    if let Some(f) = k
        .facets()
        .iter()
        .find(|f| f.contains(v) && !f.is_subset(star))
    {
        return Err(format!("facet {f} is in neither piece"));
    }
    Ok(())
}

/// A computed fact, re-checkable from the stored complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub complex: SimplicialComplex,
    pub claim: Claim,
    /// Engine module that produced the fact.
    pub provenance: String,
}

impl Fact {
    pub fn new(complex: &SimplicialComplex, claim: Claim, provenance: &str) -> Self {
        Fact {
            complex: complex.clone(),
            claim,
            provenance: provenance.to_string(),
        }
    }

    pub fn check(&self) -> Result<(), String> {
        let actual = self.claim.recompute(&self.complex)?;
        if actual == self.claim {
            Ok(())
        } else {
            Err(format!("stored {:?}, recomputed {:?}", self.claim, actual))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Premise {
    Derived(Box<Certificate>),
    Computed(Fact),
    /// A hypothesis the engine cannot decide, taken on trust.
    Attested {
        hypothesis: String,
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Grading {
    /// Every leaf is a recomputable fact.
    Proved,
    /// Depends on the listed attested hypotheses.
    Conditional { hypotheses: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub goal: Goal,
    /// Rule identifier, e.g. `orientable-surface`.
    pub rule: String,
    /// The spec's rule code (`R1`…`R10`) when the rule is a prover rule.
    pub code: Option<String>,
    /// Paper theorem citation.
    pub citation: String,
    pub premises: Vec<Premise>,
    pub grading: Grading,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("rule `{rule}`: computed fact ({provenance}) does not re-validate: {detail}")]
    FactMismatch {
        rule: String,
        provenance: String,
        detail: String,
    },
    #[error("rule `{rule}` fires without premises")]
    NoPremises { rule: String },
    #[error("rule `{rule}`: stored grading {stored:?} but premises imply {expected:?}")]
    Grading {
        rule: String,
        stored: Grading,
        expected: Grading,
    },
}

impl Certificate {
    /// Builds a certificate and derives its grading from the premises.
    pub fn new(
        goal: Goal,
        rule: &str,
        code: Option<&str>,
        citation: String,
        premises: Vec<Premise>,
    ) -> Self {
        let grading = grading_of(&premises);
        Certificate {
            goal,
            rule: rule.to_string(),
            code: code.map(str::to_string),
            citation,
            premises,
            grading,
        }
    }

    pub fn is_proved(&self) -> bool {
        self.grading == Grading::Proved
    }

    /// Rules used anywhere in the tree, in pre-order.
    pub fn rules(&self) -> Vec<String> {
        let mut out = vec![self.rule.clone()];
        for p in &self.premises {
            if let Premise::Derived(c) = p {
                out.extend(c.rules());
            }
        }
        out
    }

    /// Rule codes used anywhere in the tree.
    pub fn codes(&self) -> BTreeSet<String> {
        let mut out: BTreeSet<String> = self.code.iter().cloned().collect();
        for p in &self.premises {
            if let Premise::Derived(c) = p {
                out.extend(c.codes());
            }
        }
        out
    }

    /// Re-runs every computed fact and checks the grading.
    pub fn validate(&self) -> Result<(), CertificateError> {
        if self.premises.is_empty() {
            return Err(CertificateError::NoPremises {
                rule: self.rule.clone(),
            });
        }
        for p in &self.premises {
            match p {
                Premise::Derived(c) => c.validate()?,
                Premise::Computed(fact) => {
                    fact.check()
                        .map_err(|detail| CertificateError::FactMismatch {
                            rule: self.rule.clone(),
                            provenance: fact.provenance.clone(),
                            detail,
                        })?
                }
                Premise::Attested { .. } => {}
            }
        }
        let expected = grading_of(&self.premises);
        if expected != self.grading {
            return Err(CertificateError::Grading {
                rule: self.rule.clone(),
                stored: self.grading.clone(),
                expected,
            });
        }
        Ok(())
    }
}

fn grading_of(premises: &[Premise]) -> Grading {
    let mut hypotheses = BTreeSet::new();
    for p in premises {
        match p {
            Premise::Derived(c) => {
                if let Grading::Conditional { hypotheses: h } = &c.grading {
                    hypotheses.extend(h.iter().cloned());
                }
            }
            Premise::Attested { hypothesis, .. } => {
                hypotheses.insert(hypothesis.clone());
            }
            Premise::Computed(_) => {}
        }
    }
    if hypotheses.is_empty() {
        Grading::Proved
    } else {
        Grading::Conditional {
            hypotheses: hypotheses.into_iter().collect(),
        }
    }
}
