//! Symbolic decompositions, Hilton–Milnor loop expansions and the 𝒫-membership prover.

mod certificate;
mod expr;
mod hilton_milnor;
mod prover;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use certificate::{
    closed_neighbourhood, Certificate, CertificateError, Claim, Fact, Goal, Grading, Premise,
};
pub use expr::{
    atom_expr, expr_homology, normalize, restrict_pairs, restrict_pairs_to, AtomTerm, ExprError,
    SpaceExpr,
};
pub use hilton_milnor::{
    bracket_dimension, hilton_milnor, lyndon_words, necklace, HiltonMilnorError, LoopFactor,
};
pub use prover::{
    goal_statement, p_membership, FailureReport, Membership, Obstruction, RuleAttempt,
    CITE_OBSTRUCTION, RULE_ORDER,
};

use crate::complex::{corpus, Simplex, SimplicialComplex};
use crate::homology::{
    reduced_homology, wedge_recognition, CapExceeded, WedgeRecognition,
    DEFAULT_ENUMERATION_CAP as CAP,
};
use crate::mac::{
    desuspension_criterion, non_faces, skeleton_mac_homology, sphere_evidence, MacError,
    SphereEvidence, SphereGrade,
};
use crate::pairs::{PairClass, PairError};
use crate::pseudo::{classify, facet_filtration, find_removal_pair, PseudoError};

pub const CITE_FACEINERT: &str = "Theorem \"faceinert\" (\"$\\caa^{K\\backslash\\sigma}\\simeq\\bigg(\\caa^{\\partial\\sigma}\\rtimes\\prod_{i\\notin\\sigma} A_{i}\\bigg)\\vee\\caa^{K}$\"), fat-wedge identity and half-smash splitting (Prop \"torfreeret\" proof)";
pub const CITE_SKELETON: &str = "Theorem \"maniwithboundretskel\" (\"$\\caa^{K^{n-1}} \\simeq \\bigvee_{i=1}^\\ell (\\caa^{\\partial \\sigma_{i}} \\rtimes \\prod_{j \\notin \\sigma_{i}}A_j) \\vee \\caa^K$\")";
pub const CITE_SKELETON_WEDGE: &str = "Prop \"decompskelzk\" (\"$\\overline{\\zk} \\simeq \\bigvee_{I \\notin K,I \\neq [m]} \\Sigma^{1+|I|} |K_I|$\") with Theorem \"neighbourlupseudominnonGolod\"; summands with free homology in one degree are wedges of spheres (Theorem \"neighbourlytriofsphere\", Lemma \"homoldethomot\")";
pub const CITE_LOOP_RETRACTION: &str = "Theorem 1.2 proof (\"the inclusion $\\overline{\\zk} \\rightarrow \\zk$ has a right homotopy inverse after looping\"; §6 \"attaches the $(m+n+1)$-cell\") and the Hilton–Milnor theorem";
pub const CITE_LOOPM: &str = "Lemma \"loopM\" (\"homotopy equivalence $\\Omega M\\simeq T^{m-n}\\times\\Omega\\mathcal{Z}_{K}$\")";
pub const CITE_QUASITORIC: &str =
    "Prop \"quasitoric\" (\"quasitoric manifold of dimension $4$, $6$ or $8$\")";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error(transparent)]
    Pseudo(#[from] PseudoError),
    #[error("no removal pair: every codimension-one face of {0} lies in a second facet")]
    NoRemovalPair(Simplex),
    #[error("Theorem \"faceinert\" needs dim σ >= 2, got {0}")]
    DimensionTooLow(isize),
    #[error("hypotheses fail: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Cap(#[from] CapExceeded),
    #[error(transparent)]
    Mac(#[from] MacError),
    #[error(transparent)]
    Pairs(#[from] PairError),
    #[error(transparent)]
    HiltonMilnor(#[from] HiltonMilnorError),
}

/// A homotopy decomposition of the polyhedral product over `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    /// The complex whose polyhedral product the expression describes.
    pub target: SimplicialComplex,
    /// Expression as produced by the theorem, before rewriting.
    pub raw: SpaceExpr,
    /// Normalized expression.
    pub expr: SpaceExpr,
    pub certificate: Certificate,
}

fn goal(k: &SimplicialComplex, pairs: &PairClass, statement: String) -> Goal {
    Goal {
        statement,
        complex: k.clone(),
        pairs: pairs.clone(),
    }
}

fn computed(k: &SimplicialComplex, claim: Claim, provenance: &str) -> Premise {
    Premise::Computed(Fact::new(k, claim, provenance))
}

/// `(CA,A)^{∂σ} ⋊ ∏_{i ∉ σ} A_i`.
fn boundary_term(sigma: Simplex, m: usize, pairs: &PairClass) -> SpaceExpr {
    let boundary = corpus::simplex_boundary(sigma.len() - 1).expect("|σ| >= 3");
    let outside = (1..=m)
        .filter(|&i| !sigma.contains(i))
        .map(|i| atom_expr(pairs, i))
        .collect();
    SpaceExpr::half_smash(
        SpaceExpr::PolyProd(boundary, restrict_pairs_to(pairs, sigma)),
        SpaceExpr::Product(outside),
    )
}

fn facet_removal_step(
    k: &SimplicialComplex,
    sigma: Simplex,
    pairs: &PairClass,
) -> Result<(SpaceExpr, Certificate), DecompError> {
    pairs.validate(k.m())?;
    if !k.is_face(sigma) {
        return Err(PseudoError::NotAFace(sigma).into());
    }
    if sigma.dim() < 2 {
        return Err(DecompError::DimensionTooLow(sigma.dim()));
    }
    let pair = find_removal_pair(k, sigma)?.ok_or(DecompError::NoRemovalPair(sigma))?;
    let term = boundary_term(sigma, k.m(), pairs);
    let certificate = Certificate::new(
        goal(
            k,
            pairs,
            format!("(CA,A)^(K∖{sigma}) ≃ {} ∨ (CA,A)^K", normalize(&term)),
        ),
        "facet-removal",
        None,
        CITE_FACEINERT.into(),
        vec![computed(
            k,
            Claim::RemovalPair {
                sigma: pair.sigma,
                tau: pair.tau,
            },
            "pseudo::find_removal_pair",
        )],
    );
    Ok((term, certificate))
}

/// Theorem "faceinert": `(CA,A)^{K∖σ} ≃ ((CA,A)^{∂σ} ⋊ ∏_{i∉σ} A_i) ∨ (CA,A)^K`.
pub fn facet_removal_decomposition(
    k: &SimplicialComplex,
    sigma: Simplex,
    pairs: &PairClass,
) -> Result<Decomposition, DecompError> {
    let (term, certificate) = facet_removal_step(k, sigma, pairs)?;
    let raw = SpaceExpr::Wedge(vec![term, SpaceExpr::PolyProd(k.clone(), pairs.clone())]);
    Ok(Decomposition {
        target: k.remove_face(sigma).map_err(PseudoError::from)?,
        expr: normalize(&raw),
        raw,
        certificate,
    })
}

/// Theorem "maniwithboundretskel": `(CA,A)^{K^{n-1}}` as a wedge over the facet filtration plus `(CA,A)^K`.
pub fn skeleton_decomposition(
    k: &SimplicialComplex,
    pairs: &PairClass,
) -> Result<Decomposition, DecompError> {
    pairs.validate(k.m())?;
    let filtration = facet_filtration(k)?;
    let n = filtration.dimension;
    if n < 2 {
        return Err(DecompError::DimensionTooLow(n as isize));
    }
    let mut terms = Vec::new();
    let mut premises = vec![
        computed(
            k,
            Claim::FacetFiltration {
                facets: filtration.facets.clone(),
                boundary_nonempty: !classify(k).boundary_faces.is_empty(),
            },
            "pseudo::facet_filtration",
        ),
        computed(
            k,
            Claim::Skeleton {
                t: n - 1,
                skeleton: k.skeleton(n - 1),
            },
            "complex",
        ),
    ];
    for (step, &sigma) in filtration.facets.iter().enumerate() {
        let (term, cert) = facet_removal_step(&filtration.complexes[step], sigma, pairs)?;
        terms.push(term);
        premises.push(Premise::Derived(Box::new(cert)));
    }
    terms.push(SpaceExpr::PolyProd(k.clone(), pairs.clone()));
    let raw = SpaceExpr::Wedge(terms);
    let expr = normalize(&raw);
    let certificate = Certificate::new(
        goal(k, pairs, format!("(CA,A)^(K^{}) ≃ {expr}", n - 1)),
        "skeleton-retraction",
        None,
        CITE_SKELETON.into(),
        premises,
    );
    Ok(Decomposition {
        target: k.skeleton(n - 1),
        raw,
        expr,
        certificate,
    })
}

fn sphere_premises(k: &SimplicialComplex, evidence: &SphereEvidence) -> Vec<Premise> {
    let mut out = vec![computed(
        k,
        Claim::SphereEvidence {
            n: evidence.n,
            grade: evidence.grade,
        },
        "mac::sphere_evidence",
    )];
    if evidence.grade == SphereGrade::HomologyLevel {
        out.push(Premise::Attested {
            hypothesis: format!("K triangulates S^{}", evidence.n),
            reason: "homology-level sphere evidence only".into(),
        });
    }
    out
}

/// Prop "decompskelzk" for an `n`-neighbourly `(2n+1)`-sphere: `\overline{𝒵_K} ≃ ⋁_{I ∉ K, I ≠ [m]} Σ^{1+|I|}|K_I|`,
/// with each `K_I` replaced by a wedge of `S^n` (free homology concentrated in degree `n`).
pub fn skeleton_wedge_of_zk(k: &SimplicialComplex) -> Result<Decomposition, DecompError> {
    let verdict = desuspension_criterion(k, CAP)?;
    if !verdict.hypothesis_holds {
        return Err(DecompError::Hypothesis(verdict.failures.join("; ")));
    }
    let n = verdict.n.expect("hypothesis gives n");
    let inner = verdict
        .inner_check
        .expect("inner check runs when the hypothesis holds");
    if !inner.passed {
        let (i, p) = inner
            .counterexample
            .expect("failed check has a counterexample");
        return Err(DecompError::Hypothesis(format!(
            "H̃(K_I) for I = {i} is {p}, not free and concentrated in degree {n}"
        )));
    }
    let evidence = sphere_evidence(k, k.dim());
    if !evidence.is_positive() {
        return Err(DecompError::Hypothesis(format!(
            "sphere evidence for S^{} fails at \"{}\"",
            k.dim(),
            evidence.first_failure().unwrap_or("?")
        )));
    }
    let mut terms = Vec::new();
    for i in non_faces(k, false) {
        let profile = reduced_homology(&k.full_subcomplex(i).complex);
        if profile.is_trivial() {
            continue;
        }
        let atom = if profile.free_and_concentrated_in(n as isize) {
            SpaceExpr::Wedge(vec![SpaceExpr::Sphere(n); profile.rank(n as isize)])
        } else {
            SpaceExpr::Atom(AtomTerm::new(format!("K{i}"), profile, false))
        };
        terms.push(SpaceExpr::suspension(1 + i.len(), atom));
    }
    let raw = SpaceExpr::Wedge(terms);
    let expr = normalize(&raw);
    let mut premises = vec![
        computed(
            k,
            Claim::ClosedPseudomanifold {
                value: true,
                dimension: k.dim(),
            },
            "pseudo::classify",
        ),
        computed(
            k,
            Claim::Neighbourliness {
                k: verdict.neighbourliness,
            },
            "complex",
        ),
        computed(
            k,
            Claim::DesuspensionInnerCheck { n, passed: true },
            "mac::desuspension_criterion",
        ),
        computed(
            k,
            Claim::SkeletonMacHomology {
                profile: expr_homology(&expr).expect("wedge of spheres"),
            },
            "mac::skeleton_mac_homology",
        ),
    ];
    premises.extend(sphere_premises(k, &evidence));
    let certificate = Certificate::new(
        goal(
            k,
            &PairClass::moment_angle(),
            format!("\\overline{{𝒵_K}} ≃ {expr}"),
        ),
        "skeleton-wedge",
        None,
        CITE_SKELETON_WEDGE.into(),
        premises,
    );
    Ok(Decomposition {
        target: k.clone(),
        raw,
        expr,
        certificate,
    })
}

/// Ω𝒵_K as a retract of a Hilton–Milnor product (never claimed equal unless `𝒵_K` is a sphere).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopReport {
    pub complex: SimplicialComplex,
    pub sphere_evidence: SphereEvidence,
    /// `\overline{𝒵_K}` as an expression (a wedge of spheres or a point).
    pub skeleton: SpaceExpr,
    pub wedge_dimensions: Vec<usize>,
    pub cutoff: usize,
    pub factors: Vec<LoopFactor>,
    /// True only when `𝒵_K` is itself a sphere, so the factor list is exact.
    pub exact: bool,
    pub statement: String,
    pub tail: String,
    pub certificate: Certificate,
}

/// Unicode superscript digits.
pub fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).expect("digit") as usize])
        .collect()
}

fn factor_list(factors: &[LoopFactor]) -> String {
    factors
        .iter()
        .map(|f| {
            if f.multiplicity == 1 {
                format!("ΩS{}", superscript(f.sphere_dim))
            } else {
                format!("(ΩS{})^{}", superscript(f.sphere_dim), f.multiplicity)
            }
        })
        .collect::<Vec<_>>()
        .join(" × ")
}

/// Loop-space report for `K` a sphere triangulation (moment-angle pairs).
pub fn loop_report(
    k: &SimplicialComplex,
    cutoff: Option<usize>,
) -> Result<LoopReport, DecompError> {
    let n = k.dim();
    let evidence = sphere_evidence(k, n);
    if !evidence.is_positive() {
        return Err(DecompError::Hypothesis(format!(
            "sphere evidence for S^{n} fails at \"{}\"",
            evidence.first_failure().unwrap_or("?")
        )));
    }
    let ma = PairClass::moment_angle();
    let mut premises = sphere_premises(k, &evidence);
    let skeleton = match skeleton_wedge_of_zk(k) {
        Ok(d) => {
            premises.push(Premise::Derived(Box::new(d.certificate)));
            d.expr
        }
        Err(_) => {
            let profile = skeleton_mac_homology(k, CAP)?.total;
            match wedge_recognition(&profile, true, true) {
                WedgeRecognition::Wedge(dims) => {
                    premises.push(computed(
                        k,
                        Claim::SkeletonMacHomology { profile },
                        "mac::skeleton_mac_homology",
                    ));
                    premises.push(Premise::Attested {
                        hypothesis: "\\overline{𝒵_K} has cells in two consecutive dimensions (Lemma \"homoldethomot\")".into(),
                        reason: "inferred from the homology pattern; 𝒵_K is 2-connected (BP Prop 4.3.5)".into(),
                    });
                    normalize(&SpaceExpr::Wedge(
                        dims.into_iter().map(SpaceExpr::Sphere).collect(),
                    ))
                }
                WedgeRecognition::Unknown(reason) => {
                    return Err(DecompError::Hypothesis(format!(
                        "skeleton is not recognized as a wedge: {reason}"
                    )))
                }
            }
        }
    };
    let dims = skeleton.sphere_dimensions().ok_or_else(|| {
        DecompError::Hypothesis(format!("skeleton {skeleton} is not a wedge of spheres"))
    })?;
    let top = k.m() + n as usize + 1;
    let (exact, wedge, factors_dims) = if dims.is_empty() {
        (true, SpaceExpr::Sphere(top), vec![top])
    } else {
        (false, skeleton.clone(), dims.clone())
    };
    let cutoff = cutoff.unwrap_or(factors_dims.iter().max().copied().unwrap_or(top) + 4);
    let factors = hilton_milnor(&factors_dims, cutoff)?;
    let statement = if exact {
        format!(
            "Ω𝒵_K ≃ ΩS{} (the skeleton is a point, so 𝒵_K ≃ S{})",
            superscript(top),
            superscript(top)
        )
    } else {
        format!(
            "Ω𝒵_K retracts off Ω{wedge} ≃ {} × … (Hilton–Milnor, factors up to dimension {cutoff})",
            factor_list(&factors)
        )
    };
    let certificate = Certificate::new(
        goal(k, &ma, statement.clone()),
        "loop-retraction",
        None,
        CITE_LOOP_RETRACTION.into(),
        premises,
    );
    Ok(LoopReport {
        complex: k.clone(),
        sphere_evidence: evidence,
        skeleton,
        wedge_dimensions: dims,
        cutoff,
        exact,
        statement,
        tail: format!(
            "factors ΩS^d with d > {cutoff} omitted; over k generators of equal dimension the weight-w count is the necklace number M(k,w) = (1/w) Σ_(d|w) μ(d) k^(w/d)"
        ),
        factors,
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasitoricReport {
    pub m: usize,
    pub n: usize,
    /// `m − n` circle factors.
    pub circles: usize,
    pub expression: SpaceExpr,
    /// Human-readable form, e.g. `ΩM ≃ S¹ × ΩS⁵`.
    pub summary: String,
    pub sphere_evidence: SphereEvidence,
    /// Hilton–Milnor expansion of `Ω𝒵_K`, when the skeleton is recognized as a wedge of spheres.
    pub loop_report: Option<LoopReport>,
    pub citation: String,
    /// Certificate for `ΩM ∈ 𝒫` when `2n ∈ {4, 6, 8}`.
    pub p_verdict: Option<Certificate>,
    pub note: Option<String>,
}

/// Lemma "loopM" + Prop "quasitoric": `ΩM ≃ T^{m−n} × Ω𝒵_K` for `K = ∂P*` a triangulated `S^{n−1}`.
pub fn quasitoric_report(
    m: usize,
    n: usize,
    k: &SimplicialComplex,
    cutoff: Option<usize>,
) -> Result<QuasitoricReport, DecompError> {
    if k.m() != m {
        return Err(DecompError::Hypothesis(format!(
            "K has {} vertices but P has m = {m} facets",
            k.m()
        )));
    }
    if n < 1 || m <= n {
        return Err(DecompError::Hypothesis(format!(
            "need 1 <= n < m, got n = {n}, m = {m}"
        )));
    }
    if k.dim() != n as isize - 1 {
        return Err(DecompError::Hypothesis(format!(
            "K = ∂P* must have dimension n − 1 = {}",
            n - 1
        )));
    }
    let evidence = sphere_evidence(k, k.dim());
    if !evidence.is_positive() {
        return Err(DecompError::Hypothesis(format!(
            "sphere evidence for S^{} fails at \"{}\"",
            k.dim(),
            evidence.first_failure().unwrap_or("?")
        )));
    }
    let mut notes = Vec::new();
    let loops = match loop_report(k, cutoff) {
        Ok(r) => Some(r),
        Err(e) => {
            notes.push(format!("no Hilton–Milnor expansion of Ω𝒵_K: {e}"));
            None
        }
    };
    let circles = m - n;
    let loop_part = if let Some(loops) = loops.as_ref().filter(|l| l.exact) {
        let top = loops.factors[0].sphere_dim;
        (
            SpaceExpr::loop_of(SpaceExpr::Sphere(top)),
            format!("ΩS{}", superscript(top)),
        )
    } else {
        (
            SpaceExpr::loop_of(SpaceExpr::PolyProd(k.clone(), PairClass::moment_angle())),
            "Ω𝒵_K".to_string(),
        )
    };
    let torus = if circles == 1 {
        "S¹".to_string()
    } else {
        format!("T{}", superscript(circles))
    };
    let mut factors = vec![SpaceExpr::Sphere(1); circles];
    factors.push(loop_part.0);
    let summary = format!("ΩM ≃ {torus} × {}", loop_part.1);
    let (p_verdict, p_note) = if matches!(2 * n, 4 | 6 | 8) {
        match p_membership(k, &PairClass::moment_angle()) {
            Membership::Derived(cert) => {
                let premises = vec![
                    computed(
                        k,
                        Claim::SphereEvidence {
                            n: evidence.n,
                            grade: evidence.grade,
                        },
                        "mac::sphere_evidence",
                    ),
                    Premise::Derived(Box::new(cert)),
                ];
                let c = Certificate::new(
                    goal(
                        k,
                        &PairClass::moment_angle(),
                        format!("ΩM ∈ 𝒫 for the {}-dimensional quasitoric manifold M", 2 * n),
                    ),
                    "quasitoric",
                    None,
                    format!("{CITE_QUASITORIC}; {CITE_LOOPM}"),
                    premises,
                );
                (Some(c), None)
            }
            Membership::Failure(f) => (
                None,
                Some(format!("no derivation for Ω𝒵_K ∈ 𝒫: {}", f.summary())),
            ),
        }
    } else {
        (
            None,
            Some(format!(
                "dimension 2n = {} is outside {{4, 6, 8}}: no 𝒫 verdict",
                2 * n
            )),
        )
    };
    Ok(QuasitoricReport {
        m,
        n,
        circles,
        expression: SpaceExpr::Product(factors),
        summary,
        sphere_evidence: evidence,
        loop_report: loops,
        citation: CITE_LOOPM.into(),
        p_verdict,
        note: {
            notes.extend(p_note);
            (!notes.is_empty()).then(|| notes.join("; "))
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::VertexSet;
    use crate::mac::mac_homology;

    fn vs<const N: usize>(v: [usize; N]) -> VertexSet {
        VertexSet::from_vertices(v)
    }

    fn tetra_minus_facet() -> SimplicialComplex {
        corpus::simplex_boundary(3)
            .unwrap()
            .remove_face(vs([1, 2, 3]))
            .unwrap()
    }

    #[test]
    fn facet_removal_examples() {
        let ma = PairClass::moment_angle();
        let k = tetra_minus_facet();
        let d = facet_removal_decomposition(&k, vs([1, 2, 4]), &ma).unwrap();
        assert_eq!(
            d.expr,
            SpaceExpr::Wedge(vec![
                SpaceExpr::Sphere(5),
                SpaceExpr::Sphere(6),
                SpaceExpr::PolyProd(k.clone(), ma.clone())
            ])
        );
        assert_eq!(
            expr_homology(&d.expr).unwrap(),
            mac_homology(&d.target, CAP).unwrap().total
        );
        d.certificate.validate().unwrap();

        let full = SimplicialComplex::simplex(3);
        let d = facet_removal_decomposition(&full, vs([1, 2, 3]), &ma).unwrap();
        assert_eq!(d.expr, SpaceExpr::Sphere(5));
        assert_eq!(
            expr_homology(&d.expr).unwrap(),
            mac_homology(&d.target, CAP).unwrap().total
        );

        let oct = corpus::cross_polytope_boundary(3).unwrap();
        let facet = oct.facets()[0];
        assert_eq!(
            facet_removal_decomposition(&oct, facet, &ma),
            Err(DecompError::NoRemovalPair(facet))
        );
        let edge = corpus::polygon(4).unwrap();
        assert_eq!(
            facet_removal_decomposition(&edge, vs([1, 2]), &ma),
            Err(DecompError::DimensionTooLow(1))
        );
    }

    #[test]
    fn skeleton_examples() {
        let ma = PairClass::moment_angle();
        let disc = corpus::cross_polytope_boundary(3)
            .unwrap()
            .delete_vertex(1)
            .unwrap()
            .complex;
        let c64 = corpus::cyclic_sphere(6, 4)
            .unwrap()
            .delete_vertex(1)
            .unwrap()
            .complex;
        for k in [tetra_minus_facet(), disc, c64] {
            let d = skeleton_decomposition(&k, &ma).unwrap();
            let n = k.dim() as usize;
            assert_eq!(d.target, k.skeleton(n - 1));
            assert_eq!(
                expr_homology(&d.expr).unwrap(),
                mac_homology(&d.target, CAP).unwrap().total
            );
            assert_eq!(
                expr_homology(&d.raw).unwrap(),
                expr_homology(&d.expr).unwrap()
            );
            d.certificate.validate().unwrap();
        }
        let d = skeleton_decomposition(&tetra_minus_facet(), &ma).unwrap();
        assert_eq!(d.certificate.premises.len(), 2 + 3);
        assert!(matches!(
            skeleton_decomposition(&corpus::cross_polytope_boundary(3).unwrap(), &ma),
            Err(DecompError::Pseudo(_))
        ));
    }

    #[test]
    fn skeleton_wedge_examples() {
        assert_eq!(
            skeleton_wedge_of_zk(&corpus::simplex_boundary(4).unwrap())
                .unwrap()
                .expr,
            SpaceExpr::Point
        );
        let c64 = corpus::cyclic_sphere(6, 4).unwrap();
        let d = skeleton_wedge_of_zk(&c64).unwrap();
        assert!(d.expr.sphere_dimensions().is_some());
        assert_eq!(
            expr_homology(&d.expr).unwrap(),
            skeleton_mac_homology(&c64, CAP).unwrap().total
        );
        assert!(d.certificate.is_proved());
        d.certificate.validate().unwrap();
        assert!(matches!(
            skeleton_wedge_of_zk(&corpus::cross_polytope_boundary(4).unwrap()),
            Err(DecompError::Hypothesis(_))
        ));
    }

    #[test]
    fn loop_reports() {
        let r = loop_report(&corpus::simplex_boundary(4).unwrap(), None).unwrap();
        assert!(r.exact);
        assert_eq!(
            r.factors,
            vec![LoopFactor {
                weight: 1,
                sphere_dim: 9,
                multiplicity: 1
            }]
        );
        let square = loop_report(&corpus::polygon(4).unwrap(), Some(7)).unwrap();
        assert_eq!(square.wedge_dimensions, vec![3, 3]);
        assert_eq!(square.factors, hilton_milnor(&[3, 3], 7).unwrap());
        assert!(!square.exact && square.statement.contains("retracts off"));
        square.certificate.validate().unwrap();
        let c64 = loop_report(&corpus::cyclic_sphere(6, 4).unwrap(), Some(12)).unwrap();
        assert!(!c64.wedge_dimensions.is_empty());
        assert!(loop_report(&corpus::rp2_six(), None).is_err());
    }

    #[test]
    fn quasitoric_examples() {
        let tri = corpus::simplex_boundary(2).unwrap();
        let r = quasitoric_report(3, 2, &tri, None).unwrap();
        assert_eq!(r.summary, "ΩM ≃ S¹ × ΩS⁵");
        assert!(r
            .p_verdict
            .as_ref()
            .unwrap()
            .citation
            .contains("Prop \"quasitoric\""));
        let sq = quasitoric_report(4, 2, &corpus::polygon(4).unwrap(), None).unwrap();
        assert_eq!(sq.summary, "ΩM ≃ T² × Ω𝒵_K");
        assert_eq!(
            sq.loop_report.as_ref().unwrap().wedge_dimensions,
            vec![3, 3]
        );
        let t3 = quasitoric_report(4, 3, &corpus::simplex_boundary(3).unwrap(), None).unwrap();
        assert_eq!(t3.summary, "ΩM ≃ S¹ × ΩS⁷");
        t3.p_verdict.unwrap().validate().unwrap();
        let big =
            quasitoric_report(10, 5, &corpus::cross_polytope_boundary(5).unwrap(), None).unwrap();
        assert!(big.p_verdict.is_none() && big.note.is_some());
    }
}
