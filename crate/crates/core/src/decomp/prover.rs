//! Certificate-producing search for `Ω(CA, A)^K ∈ 𝒫`.
//!
//! Rules are tried in a fixed priority order (cheap structural hypotheses first):
//! `one-dimensional` (R1), `orientable-surface` (R7), `pseudomanifold-2-3` (R6),
//! `pm-with-boundary` (R10), `two-dimensional` (R2), `three-sphere` (R9) /
//! `neighbourly-sphere` (R8), then `vertex-deletion` (R5, with the R3/R4 pushout and
//! retraction plumbing), recursing over `K ∖ i` with memoization.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::certificate::{closed_neighbourhood, Certificate, Claim, Fact, Goal, Premise};
use super::expr::restrict_pairs;
use crate::complex::{SimplicialComplex, VertexSet};
use crate::homology::{
    surface_classify, torsion_free_all_full_subcomplexes, SurfaceClass, TorsionScan,
    DEFAULT_ENUMERATION_CAP as CAP,
};
use crate::mac::{desuspension_criterion, mac_homology, sphere_evidence, SphereGrade};
use crate::pairs::{PairClass, PairKind};
use crate::pseudo::{classify, facet_filtration};

pub const CITE_R1: &str =
    "R1: Theorem \"graphinP\" (\"Let $K$ be a $1$-dimensional simplicial complex\")";
pub const CITE_R2: &str =
    "R2: Theorem \"2diminP\" (\"torsion free for all full subcomplexes\" with complete 1-skeleton)";
pub const CITE_R5: &str = "R5: Theorem \"restinPimplyP\" (\"does not have a complete $1$-skeleton\"); pushout K = K_(v∪N(v)) ∪_(K_N(v)) K∖v via R3: Theorem \"pushoutofPisinP\"; K_(v∪N(v)) retracts via R4: Lemma \"DS\" + Theorem \"Pclosedunderret\"";
pub const CITE_R6: &str = "R6: Theorem \"23dimpseudoinP\" (\"either a $2$-dimensional pseudomanifold\" or a 3-dimensional one with torsion-free complete-1-skeleton full subcomplexes)";
pub const CITE_R7: &str =
    "R7: Theorem \"triangsurface\" (\"connected, orientable, closed surface\")";
pub const CITE_R8: &str = "R8: Theorem 1.3 (\"neighbourly triangulation of $S^{2n+1}$\"), via Theorem \"neighbourlytriofsphere\" and Hilton–Milnor";
pub const CITE_R9: &str = "R9: Theorem 1.2 via its proof split (\"If the $1$-skeleton is a complete graph\" then Theorem 1.3, else Theorem \"23dimpseudoinP\")";
pub const CITE_R10: &str = "R10: Theorem \"pseudowithbound2and3dim\" (\"If $n=1$, $n=2$, or $n=3$\"), via Theorem \"maniwithboundretskel\" and R4: Theorem \"Pclosedunderret\"";
pub const CITE_OBSTRUCTION: &str = "§6 Remark (6-vertex RP²): by Lemma \"DS\" a torsion summand Σ^{1+|I|}|K_I| retracts off 𝒵_K, and then H_*(Ω𝒵_K) \"contains $2$-torsion\", so Ω𝒵_K ∉ 𝒫";

/// The fixed rule priority: `(rule id, spec code)`.
pub const RULE_ORDER: &[(&str, &str)] = &[
    ("one-dimensional", "R1"),
    ("orientable-surface", "R7"),
    ("pseudomanifold-2-3", "R6"),
    ("pm-with-boundary", "R10"),
    ("two-dimensional", "R2"),
    ("three-sphere", "R9"),
    ("neighbourly-sphere", "R8"),
    ("vertex-deletion", "R5"),
];

/// One rule's hypothesis checks, in order; the last failed check ends the attempt.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleAttempt {
    pub rule: String,
    pub code: String,
    pub checks: Vec<(String, bool)>,
    /// The failing hypothesis concerns homology (torsion, sphere evidence) rather than structure.
    pub homological: bool,
    pub detail: Option<String>,
}

impl RuleAttempt {
    fn new(rule: &str, code: &str) -> Self {
        RuleAttempt {
            rule: rule.to_string(),
            code: code.to_string(),
            checks: Vec::new(),
            homological: false,
            detail: None,
        }
    }

    fn passed(&self) -> usize {
        self.checks.iter().filter(|(_, ok)| *ok).count()
    }

    pub fn failed_hypothesis(&self) -> Option<&str> {
        self.checks
            .iter()
            .find(|(_, ok)| !ok)
            .map(|(c, _)| c.as_str())
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) -> Result<(), ()> {
        self.checks.push((name.into(), ok));
        if ok {
            Ok(())
        } else {
            Err(())
        }
    }

    fn fail_homological(&mut self, name: impl Into<String>, detail: String) -> Result<(), ()> {
        self.homological = true;
        self.detail = Some(detail);
        self.check(name, false)
    }
}

/// A torsion summand of `H_*(𝒵_K)`: the paper's known obstruction to `Ω𝒵_K ∈ 𝒫`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub subset: VertexSet,
    /// Degree of the torsion in `H_*(𝒵_K)`.
    pub degree: isize,
    pub torsion: Vec<u64>,
    pub citation: String,
    /// Reported, not proved by the engine.
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureReport {
    pub goal: Goal,
    pub attempts: Vec<RuleAttempt>,
    /// Attempt with the most passed checks; homological failures outrank structural ones.
    pub deepest: Option<RuleAttempt>,
    pub obstruction: Option<Obstruction>,
}

impl FailureReport {
    pub fn summary(&self) -> String {
        let mut s = match &self.deepest {
            Some(a) => format!(
                "no rule applies; deepest failure: {} ({}) at \"{}\"",
                a.rule,
                a.code,
                a.failed_hypothesis().unwrap_or("?")
            ),
            None => "no rule applies".to_string(),
        };
        if let Some(d) = self.deepest.as_ref().and_then(|a| a.detail.as_ref()) {
            s.push_str(&format!(": {d}"));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    Derived(Certificate),
    Failure(FailureReport),
}

impl Membership {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Membership::Derived(c) => Some(c),
            Membership::Failure(_) => None,
        }
    }
}

pub fn goal_statement(pairs: &PairClass) -> String {
    match pairs.kind {
        PairKind::MomentAngle => "Ω𝒵_K ∈ 𝒫".to_string(),
        PairKind::Real => "Ωℝ𝒵_K ∈ 𝒫".to_string(),
        PairKind::General => "Ω(CA,A)^K ∈ 𝒫".to_string(),
    }
}

fn goal(k: &SimplicialComplex, pairs: &PairClass) -> Goal {
    Goal {
        statement: goal_statement(pairs),
        complex: k.clone(),
        pairs: pairs.clone(),
    }
}

/// The `ΣA_i ∈ 𝒲` hypothesis shared by every rule.
fn pairs_premise(k: &SimplicialComplex, pairs: &PairClass) -> Result<Premise, String> {
    match pairs.kind {
        PairKind::MomentAngle => Ok(Premise::Computed(Fact::new(
            k,
            Claim::StandardPairs {
                kind: PairKind::MomentAngle,
            },
            "pairs",
        ))),
        PairKind::Real => Err(
            "A_i = S⁰ is not path-connected; the paper's 𝒫 theorems are for connected A_i with ΣA_i ∈ 𝒲".into(),
        ),
        PairKind::General => {
            pairs.validate(k.m()).map_err(|e| e.to_string())?;
            match (1..=k.m()).find(|&i| !pairs.atom(i).suspension_in_w) {
                Some(i) => Err(format!("ΣA_{i} ∈ 𝒲 is not attested")),
                None => Ok(Premise::Attested {
                    hypothesis: "ΣA_i ∈ 𝒲 for all i".into(),
                    reason: "attested in the pair-class document".into(),
                }),
            }
        }
    }
}

fn computed(k: &SimplicialComplex, claim: Claim, provenance: &str) -> Premise {
    Premise::Computed(Fact::new(k, claim, provenance))
}

fn torsion_claim(scan: &TorsionScan) -> Claim {
    Claim::TorsionFreeFullSubcomplexes {
        complete_one_skeleton_only: scan.complete_one_skeleton_only,
        torsion_free: scan.torsion_free,
        witness: scan.witness,
    }
}

fn sphere_premises(k: &SimplicialComplex, n: isize, grade: SphereGrade) -> Vec<Premise> {
    let mut out = vec![computed(
        k,
        Claim::SphereEvidence { n, grade },
        "mac::sphere_evidence",
    )];
    if grade == SphereGrade::HomologyLevel {
        out.push(Premise::Attested {
            hypothesis: format!("K triangulates S^{n}"),
            reason: "closed pseudomanifold with the homology of S^n and recognized links; homeomorphism type undecided".into(),
        });
    }
    out
}

type Attempted = Result<Certificate, RuleAttempt>;

/// Searches for a derivation of `Ω(CA, A)^K ∈ 𝒫`.
pub fn p_membership(k: &SimplicialComplex, pairs: &PairClass) -> Membership {
    let mut prover = Prover::default();
    match prover.prove(k, pairs, k.m()) {
        Ok(c) => Membership::Derived(c),
        Err(mut report) => {
            report.obstruction = obstruction(k, pairs);
            Membership::Failure(report)
        }
    }
}

fn obstruction(k: &SimplicialComplex, pairs: &PairClass) -> Option<Obstruction> {
    if pairs.kind != PairKind::MomentAngle {
        return None;
    }
    let mac = mac_homology(k, CAP).ok()?;
    let c = mac.torsion_contributions().into_iter().next()?;
    let (degree, torsion) = c.shifted_profile().first_torsion()?;
    Some(Obstruction {
        subset: c.subset,
        degree,
        torsion,
        citation: CITE_OBSTRUCTION.to_string(),
        status: "reported known obstruction; non-membership is not proved by the engine".into(),
    })
}

#[derive(Default)]
struct Prover {
    memo: HashMap<(SimplicialComplex, PairClass), Result<Certificate, FailureReport>>,
}

impl Prover {
    #[allow(clippy::result_large_err)]
    fn prove(
        &mut self,
        k: &SimplicialComplex,
        pairs: &PairClass,
        depth: usize,
    ) -> Result<Certificate, FailureReport> {
        let key = (k.clone(), pairs.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let result = self.search(k, pairs, depth);
        self.memo.insert(key, result.clone());
        result
    }

    #[allow(clippy::result_large_err)]
    fn search(
        &mut self,
        k: &SimplicialComplex,
        pairs: &PairClass,
        depth: usize,
    ) -> Result<Certificate, FailureReport> {
        let fail = |attempts: Vec<RuleAttempt>| {
            let deepest = attempts
                .iter()
                .enumerate()
                .max_by_key(|(i, a)| (a.homological, a.passed(), std::cmp::Reverse(*i)))
                .map(|(_, a)| a.clone());
            FailureReport {
                goal: goal(k, pairs),
                attempts,
                deepest,
                obstruction: None,
            }
        };
        let mut pre = RuleAttempt::new("preconditions", "-");
        let base = pairs_premise(k, pairs);
        if pre.check("ΣA_i ∈ 𝒲 for all i", base.is_ok()).is_err()
            || pre
                .check("no ghost vertices", k.ghost_vertices().is_empty())
                .is_err()
        {
            pre.detail = base.err();
            return Err(fail(vec![pre]));
        }
        let base = base.expect("checked");
        let mut attempts = Vec::new();
        for &(rule, _) in RULE_ORDER {
            let outcome = match rule {
                "one-dimensional" => one_dimensional(k, pairs, &base),
                "orientable-surface" => orientable_surface(k, pairs, &base),
                "pseudomanifold-2-3" => pseudomanifold_2_3(k, pairs, &base),
                "pm-with-boundary" => pm_with_boundary(k, pairs, &base),
                "two-dimensional" => two_dimensional(k, pairs, &base),
                "three-sphere" => three_sphere(k, pairs, &base),
                "neighbourly-sphere" => neighbourly_sphere(k, pairs, &base),
                "vertex-deletion" => self.vertex_deletion(k, pairs, &base, depth),
                _ => unreachable!("unknown rule {rule}"),
            };
            match outcome {
                Ok(c) => return Ok(c),
                Err(a) => attempts.push(a),
            }
        }
        Err(fail(attempts))
    }

    fn vertex_deletion(
        &mut self,
        k: &SimplicialComplex,
        pairs: &PairClass,
        base: &Premise,
        depth: usize,
    ) -> Attempted {
        let mut a = RuleAttempt::new("vertex-deletion", "R5");
        let run = |a: &mut RuleAttempt, this: &mut Self| -> Result<Certificate, ()> {
            a.check("1-skeleton is not complete", !k.has_complete_one_skeleton())?;
            a.check("recursion depth available", depth > 0)?;
            let vertices = k.vertex_set();
            let (v, star) = vertices
                .iter()
                .map(|v| (v, closed_neighbourhood(k, v)))
                .find(|&(_, s)| s != vertices)
                .expect("an incomplete 1-skeleton has a vertex with a non-neighbour");
            let w = vertices
                .difference(star)
                .min_vertex()
                .expect("star is proper");
            let mut premises = vec![
                base.clone(),
                computed(k, Claim::CompleteOneSkeleton { value: false }, "complex"),
                computed(
                    k,
                    Claim::RestrictionPushout {
                        vertex: v,
                        star,
                        witness: w,
                    },
                    "complex",
                ),
            ];
            for i in vertices.iter() {
                let deleted = k.delete_vertex(i).expect("vertex of K");
                let sub_pairs = restrict_pairs(pairs, &deleted.vertex_map);
                match this.prove(&deleted.complex, &sub_pairs, depth - 1) {
                    Ok(cert) => {
                        a.check(format!("Ω(K∖{i}) ∈ 𝒫"), true)?;
                        premises.push(computed(
                            k,
                            Claim::VertexDeletion {
                                vertex: i,
                                result: deleted.complex.clone(),
                            },
                            "complex",
                        ));
                        premises.push(Premise::Derived(Box::new(cert)));
                    }
                    Err(report) => {
                        a.homological = report.deepest.as_ref().is_some_and(|d| d.homological);
                        a.detail = Some(format!("K∖{i}: {}", report.summary()));
                        a.check(format!("Ω(K∖{i}) ∈ 𝒫"), false)?;
                    }
                }
            }
            Ok(Certificate::new(
                goal(k, pairs),
                "vertex-deletion",
                Some("R5"),
                CITE_R5.into(),
                premises,
            ))
        };
        run(&mut a, self).map_err(|()| a.clone())
    }
}

fn attempt(
    rule: &str,
    code: &str,
    body: impl FnOnce(&mut RuleAttempt) -> Result<Certificate, ()>,
) -> Attempted {
    let mut a = RuleAttempt::new(rule, code);
    body(&mut a).map_err(|()| a)
}

fn one_dimensional(k: &SimplicialComplex, pairs: &PairClass, base: &Premise) -> Attempted {
    attempt("one-dimensional", "R1", |a| {
        a.check("dim K ≤ 1", k.dim() <= 1)?;
        let premises = vec![
            base.clone(),
            computed(k, Claim::Dimension { value: k.dim() }, "complex"),
        ];
        Ok(Certificate::new(
            goal(k, pairs),
            "one-dimensional",
            Some("R1"),
            CITE_R1.into(),
            premises,
        ))
    })
}

fn orientable_surface(k: &SimplicialComplex, pairs: &PairClass, base: &Premise) -> Attempted {
    attempt("orientable-surface", "R7", |a| {
        let class = classify(k);
        a.check(
            "closed 2-dimensional pseudomanifold",
            class.pseudomanifold && class.dimension == 2,
        )?;
        let genus = match surface_classify(k) {
            SurfaceClass::Orientable { genus, .. } => Some(genus),
            _ => None,
        };
        a.check("connected orientable closed surface", genus.is_some())?;
        let premises = vec![
            base.clone(),
            computed(
                k,
                Claim::ClosedPseudomanifold {
                    value: true,
                    dimension: 2,
                },
                "pseudo::classify",
            ),
            computed(
                k,
                Claim::OrientableSurface { genus },
                "homology::surface_classify",
            ),
        ];
        Ok(Certificate::new(
            goal(k, pairs),
            "orientable-surface",
            Some("R7"),
            CITE_R7.into(),
            premises,
        ))
    })
}

fn torsion_scan(a: &mut RuleAttempt, k: &SimplicialComplex) -> Result<TorsionScan, ()> {
    let name = "H_*(K_I) torsion free for full subcomplexes with complete 1-skeleton";
    match torsion_free_all_full_subcomplexes(k, true, CAP) {
        Err(e) => {
            a.detail = Some(e.to_string());
            a.check(name, false).map(|_| unreachable!())
        }
        Ok(scan) if !scan.torsion_free => {
            let (deg, t) = scan.witness_torsion.clone().unwrap_or_default();
            let witness = scan.witness.expect("witness");
            let detail = format!("torsion {t:?} in H_{deg}(K_I) at I = {witness}");
            a.fail_homological(name, detail).map(|_| unreachable!())
        }
        Ok(scan) => {
            a.check(name, true)?;
            Ok(scan)
        }
    }
}

fn pseudomanifold_2_3(k: &SimplicialComplex, pairs: &PairClass, base: &Premise) -> Attempted {
    attempt("pseudomanifold-2-3", "R6", |a| {
        let class = classify(k);
        a.check(
            "closed pseudomanifold of dimension 2 or 3",
            class.pseudomanifold && (class.dimension == 2 || class.dimension == 3),
        )?;
        a.check("1-skeleton is not complete", !k.has_complete_one_skeleton())?;
        let mut premises = vec![
            base.clone(),
            computed(
                k,
                Claim::ClosedPseudomanifold {
                    value: true,
                    dimension: class.dimension,
                },
                "pseudo::classify",
            ),
            computed(k, Claim::CompleteOneSkeleton { value: false }, "complex"),
        ];
        if class.dimension == 3 {
            let scan = torsion_scan(a, k)?;
            premises.push(computed(
                k,
                torsion_claim(&scan),
                "homology::torsion_free_all_full_subcomplexes",
            ));
        }
        Ok(Certificate::new(
            goal(k, pairs),
            "pseudomanifold-2-3",
            Some("R6"),
            CITE_R6.into(),
            premises,
        ))
    })
}

fn pm_with_boundary(k: &SimplicialComplex, pairs: &PairClass, base: &Premise) -> Attempted {
    attempt("pm-with-boundary", "R10", |a| {
        let class = classify(k);
        a.check(
            "pure weak pseudomanifold with nonempty boundary",
            class.weak_pm_with_boundary && !class.boundary_faces.is_empty(),
        )?;
        a.check(
            "dimension n ∈ {1, 2, 3}",
            (1..=3).contains(&class.dimension),
        )?;
        let filtration = facet_filtration(k);
        if let Err(e) = &filtration {
            a.detail = Some(e.to_string());
        }
        a.check(
            "each dual-graph component has a facet of degree < n+1",
            filtration.is_ok(),
        )?;
        let filtration = filtration.expect("checked");
        let n = filtration.dimension;
        let skeleton = k.skeleton(n - 1);
        let sub = if n <= 2 {
            one_dimensional(&skeleton, pairs, base)
        } else {
            two_dimensional(&skeleton, pairs, base)
        };
        let sub = match sub {
            Ok(c) => c,
            Err(inner) => {
                a.homological = inner.homological;
                a.detail = inner.detail.clone();
                let name = inner
                    .failed_hypothesis()
                    .unwrap_or("skeleton rule")
                    .to_string();
                return a
                    .check(format!("K^{}: {name}", n - 1), false)
                    .map(|_| unreachable!());
            }
        };
        a.check(format!("Ω(CA,A)^(K^{}) ∈ 𝒫", n - 1), true)?;
        let premises = vec![
            base.clone(),
            computed(
                k,
                Claim::FacetFiltration {
                    facets: filtration.facets,
                    boundary_nonempty: true,
                },
                "pseudo::facet_filtration",
            ),
            computed(
                k,
                Claim::Skeleton {
                    t: n - 1,
                    skeleton: skeleton.clone(),
                },
                "complex",
            ),
            Premise::Derived(Box::new(sub)),
        ];
        Ok(Certificate::new(
            goal(k, pairs),
            "pm-with-boundary",
            Some("R10"),
            CITE_R10.into(),
            premises,
        ))
    })
}

fn two_dimensional(k: &SimplicialComplex, pairs: &PairClass, base: &Premise) -> Attempted {
    attempt("two-dimensional", "R2", |a| {
        a.check("dim K ≤ 2", k.dim() <= 2)?;
        let scan = torsion_scan(a, k)?;
        let premises = vec![
            base.clone(),
            computed(k, Claim::Dimension { value: k.dim() }, "complex"),
            computed(
                k,
                torsion_claim(&scan),
                "homology::torsion_free_all_full_subcomplexes",
            ),
        ];
        Ok(Certificate::new(
            goal(k, pairs),
            "two-dimensional",
            Some("R2"),
            CITE_R2.into(),
            premises,
        ))
    })
}

fn sphere_check(a: &mut RuleAttempt, k: &SimplicialComplex, n: isize) -> Result<SphereGrade, ()> {
    let evidence = sphere_evidence(k, n);
    if evidence.is_positive() {
        a.check(
            format!("K triangulates S^{n} (evidence: {:?})", evidence.grade),
            true,
        )?;
        Ok(evidence.grade)
    } else {
        let detail = format!(
            "sphere evidence fails at \"{}\"",
            evidence.first_failure().unwrap_or("?")
        );
        a.fail_homological(format!("K triangulates S^{n}"), detail)
            .map(|_| unreachable!())
    }
}

fn neighbourly_sphere(k: &SimplicialComplex, pairs: &PairClass, base: &Premise) -> Attempted {
    attempt("neighbourly-sphere", "R8", |a| {
        let d = k.dim();
        a.check("dim K = 2n+1 with n ≥ 1", d >= 3 && d % 2 == 1)?;
        let n = ((d - 1) / 2) as usize;
        let nb = k.neighbourliness();
        a.check(
            format!("K is {n}-neighbourly"),
            !nb.ghost_vertices && nb.k >= n,
        )?;
        let grade = sphere_check(a, k, d)?;
        let inner = desuspension_criterion(k, CAP);
        let passed = inner
            .as_ref()
            .is_ok_and(|v| v.hypothesis_holds && v.inner_check.as_ref().is_some_and(|c| c.passed));
        if let Err(e) = &inner {
            a.detail = Some(e.to_string());
        }
        a.check(
            "proper K_I have free homology concentrated in degree n",
            passed,
        )?;
        let mut premises = vec![
            base.clone(),
            computed(k, Claim::Neighbourliness { k: nb.k }, "complex"),
        ];
        premises.extend(sphere_premises(k, d, grade));
        premises.push(computed(
            k,
            Claim::DesuspensionInnerCheck { n, passed: true },
            "mac::desuspension_criterion",
        ));
        Ok(Certificate::new(
            goal(k, pairs),
            "neighbourly-sphere",
            Some("R8"),
            CITE_R8.into(),
            premises,
        ))
    })
}

fn three_sphere(k: &SimplicialComplex, pairs: &PairClass, base: &Premise) -> Attempted {
    attempt("three-sphere", "R9", |a| {
        a.check("dim K = 3", k.dim() == 3)?;
        let grade = sphere_check(a, k, 3)?;
        let complete = k.has_complete_one_skeleton();
        let sub = if complete {
            neighbourly_sphere(k, pairs, base)
        } else {
            pseudomanifold_2_3(k, pairs, base)
        };
        let sub = match sub {
            Ok(c) => c,
            Err(inner) => {
                a.homological = inner.homological;
                a.detail = inner.detail.clone();
                return a
                    .check(format!("{} applies", inner.rule), false)
                    .map(|_| unreachable!());
            }
        };
        a.check(format!("{} applies", sub.rule), true)?;
        let mut premises = vec![
            base.clone(),
            computed(k, Claim::CompleteOneSkeleton { value: complete }, "complex"),
        ];
        premises.extend(sphere_premises(k, 3, grade));
        premises.push(Premise::Derived(Box::new(sub)));
        Ok(Certificate::new(
            goal(k, pairs),
            "three-sphere",
            Some("R9"),
            CITE_R9.into(),
            premises,
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::corpus;

    fn derived(k: &SimplicialComplex) -> Certificate {
        match p_membership(k, &PairClass::moment_angle()) {
            Membership::Derived(c) => c,
            Membership::Failure(f) => panic!("{}", f.summary()),
        }
    }

    #[test]
    fn spec_routes() {
        let c = derived(&corpus::polygon(5).unwrap());
        assert_eq!(c.code.as_deref(), Some("R1"));
        assert!(c.is_proved());
        assert_eq!(
            derived(&corpus::cross_polytope_boundary(3).unwrap())
                .code
                .as_deref(),
            Some("R7")
        );
        assert_eq!(derived(&corpus::torus_seven()).code.as_deref(), Some("R7"));
        let c84 = derived(&corpus::cross_polytope_boundary(4).unwrap());
        assert_eq!(c84.code.as_deref(), Some("R6"));
        let c64 = derived(&corpus::cyclic_sphere(6, 4).unwrap());
        assert_eq!(c64.code.as_deref(), Some("R9"));
        assert!(c64.codes().contains("R8"));
        for c in [c84, c64] {
            c.validate().unwrap();
        }
    }

    #[test]
    fn rp2_fails_with_torsion_witness() {
        let Membership::Failure(report) =
            p_membership(&corpus::rp2_six(), &PairClass::moment_angle())
        else {
            panic!("rp2_six must not be derived");
        };
        let deepest = report.deepest.as_ref().unwrap();
        assert!(deepest.homological);
        assert!(
            deepest.detail.as_ref().unwrap().contains("{1,2,3,4,5,6}"),
            "{}",
            report.summary()
        );
        let ob = report.obstruction.unwrap();
        assert_eq!(
            (ob.subset, ob.degree, ob.torsion),
            (VertexSet::full(6), 8, vec![2])
        );
        assert!(ob.citation.contains("contains $2$-torsion"));
    }

    #[test]
    fn recursion_through_vertex_deletion() {
        // three tetrahedra on a common triangle: not a weak pseudomanifold, 4 and 5 not adjacent
        let k =
            SimplicialComplex::from_facets(6, [[1, 2, 3, 4], [1, 2, 3, 5], [1, 2, 3, 6]]).unwrap();
        let c = derived(&k);
        assert_eq!(c.code.as_deref(), Some("R5"));
        assert!(c
            .codes()
            .is_superset(&["R2", "R10"].map(String::from).into()));
        c.validate().unwrap();
        // octahedron minus a vertex is a disc: R10 via its 1-skeleton
        let disc = corpus::cross_polytope_boundary(3)
            .unwrap()
            .delete_vertex(1)
            .unwrap()
            .complex;
        assert_eq!(derived(&disc).code.as_deref(), Some("R10"));
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let mut c = derived(&corpus::torus_seven());
        c.premises[2] = computed(
            &c.goal.complex,
            Claim::OrientableSurface { genus: Some(2) },
            "tampered",
        );
        assert!(c.validate().is_err());
    }
}
