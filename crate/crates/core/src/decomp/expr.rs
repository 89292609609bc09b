//! Symbolic homotopy types and their rewrite rules.

use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::homology::{HomologyProfile, KunnethError, DEFAULT_ENUMERATION_CAP};
use crate::mac::{polyhedral_homology, MacError};
use crate::pairs::{AtomSpec, PairClass, PairKind};

/// A space known through attested data: its reduced homology and a suspension flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AtomTerm {
    pub name: String,
    pub homology: HomologyProfile,
    /// Attested (or derived) that the space is a suspension.
    pub is_suspension: bool,
    /// Lowest and highest degree of nonzero reduced homology.
    pub dimension_range: Option<(isize, isize)>,
}

impl AtomTerm {
    pub fn new(name: impl Into<String>, homology: HomologyProfile, is_suspension: bool) -> Self {
        let dimension_range = homology.min_degree().zip(homology.max_degree());
        AtomTerm {
            name: name.into(),
            homology,
            is_suspension,
            dimension_range,
        }
    }
}

impl From<&AtomSpec> for AtomTerm {
    fn from(spec: &AtomSpec) -> Self {
        AtomTerm::new(spec.name.clone(), spec.homology.clone(), spec.is_suspension)
    }
}

/// Expression tree over atoms and the combinators `∨ × ∧ ⋊ Σ Ω` and polyhedral products.
/// `Sphere(0)` is `S⁰`, the unit for smash.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceExpr {
    Point,
    Sphere(usize),
    Atom(AtomTerm),
    Wedge(Vec<SpaceExpr>),
    Product(Vec<SpaceExpr>),
    Smash(Vec<SpaceExpr>),
    HalfSmash(Box<SpaceExpr>, Box<SpaceExpr>),
    Suspension(usize, Box<SpaceExpr>),
    Loop(Box<SpaceExpr>),
    PolyProd(SimplicialComplex, PairClass),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Kunneth(#[from] KunnethError),
    #[error("loop spaces have no finite stable homology answer; Loop subterms are rejected")]
    LoopTerm,
    #[error(transparent)]
    Mac(#[from] MacError),
}

impl SpaceExpr {
    pub fn wedge(terms: Vec<SpaceExpr>) -> Self {
        SpaceExpr::Wedge(terms)
    }

    pub fn suspension(count: usize, e: SpaceExpr) -> Self {
        SpaceExpr::Suspension(count, Box::new(e))
    }

    pub fn half_smash(left: SpaceExpr, right: SpaceExpr) -> Self {
        SpaceExpr::HalfSmash(Box::new(left), Box::new(right))
    }

    pub fn loop_of(e: SpaceExpr) -> Self {
        SpaceExpr::Loop(Box::new(e))
    }

    /// Carries a suspension structure: spheres of dimension ≥ 1, `Σ^k` with `k ≥ 1`,
    /// flagged atoms, nonempty wedges of suspensions, smashes with a suspension factor.
    pub fn is_suspension(&self) -> bool {
        match self {
            SpaceExpr::Point => true,
            SpaceExpr::Sphere(k) => *k >= 1,
            SpaceExpr::Suspension(k, e) => *k >= 1 || e.is_suspension(),
            SpaceExpr::Atom(a) => a.is_suspension,
            SpaceExpr::Wedge(xs) => !xs.is_empty() && xs.iter().all(SpaceExpr::is_suspension),
            SpaceExpr::Smash(xs) => xs.iter().any(SpaceExpr::is_suspension),
            _ => false,
        }
    }

    /// A wedge of spheres (including a point and a single sphere).
    pub fn sphere_dimensions(&self) -> Option<Vec<usize>> {
        match self {
            SpaceExpr::Point => Some(Vec::new()),
            SpaceExpr::Sphere(k) => Some(vec![*k]),
            SpaceExpr::Wedge(xs) => {
                let mut dims = Vec::new();
                for x in xs {
                    dims.extend(x.sphere_dimensions()?);
                }
                dims.sort_unstable();
                Some(dims)
            }
            _ => None,
        }
    }

    fn sort_key(&self) -> (u8, usize, String) {
        match self {
            SpaceExpr::Sphere(k) => (0, *k, String::new()),
            other => (1, 0, other.to_string()),
        }
    }
}

/// `A_i` of a pair class as an expression.
pub fn atom_expr(pairs: &PairClass, i: usize) -> SpaceExpr {
    match pairs.kind {
        PairKind::MomentAngle => SpaceExpr::Sphere(1),
        PairKind::Real => SpaceExpr::Sphere(0),
        PairKind::General => SpaceExpr::Atom(AtomTerm::from(&pairs.atom(i))),
    }
}

/// Restricts a pair class to the vertices listed in `vertex_map` (new vertex `j` is old `vertex_map[j-1]`).
pub fn restrict_pairs(pairs: &PairClass, vertex_map: &[usize]) -> PairClass {
    match pairs.kind {
        PairKind::General => {
            PairClass::general(vertex_map.iter().map(|&v| pairs.atom(v)).collect())
        }
        _ => pairs.clone(),
    }
}

/// Restricts a pair class to a vertex subset.
pub fn restrict_pairs_to(pairs: &PairClass, subset: VertexSet) -> PairClass {
    restrict_pairs(pairs, &subset.to_vec())
}

/// Rewrites to a fixpoint. Rules (bottom-up):
/// wedge/product/smash flattening and unit laws; `S^a ∧ S^b → S^{a+b}`;
/// `Σ^k S^a → S^{a+k}`; smash distributes over wedge; `A ⋊ B → A ∨ (A ∧ B)` when `A` is a
/// suspension; `Σ(X × Y) → ΣX ∨ ΣY ∨ Σ(X ∧ Y)` under a suspension or next to a suspension
/// smash factor; `PolyProd(∂Δ on all vertices) → Σ^{m-1}(A_1 ∧ … ∧ A_m)`; nothing under `Ω`.
pub fn normalize(e: &SpaceExpr) -> SpaceExpr {
    let mut current = e.clone();
    loop {
        let next = pass(&current);
        if next == current {
            return current;
        }
        current = next;
    }
}

fn pass(e: &SpaceExpr) -> SpaceExpr {
    let rebuilt = match e {
        SpaceExpr::Point | SpaceExpr::Sphere(_) | SpaceExpr::Atom(_) | SpaceExpr::Loop(_) => {
            return e.clone()
        }
        SpaceExpr::PolyProd(k, pairs) => return polyprod_rule(k, pairs),
        SpaceExpr::Wedge(xs) => SpaceExpr::Wedge(xs.iter().map(pass).collect()),
        SpaceExpr::Product(xs) => SpaceExpr::Product(xs.iter().map(pass).collect()),
        SpaceExpr::Smash(xs) => SpaceExpr::Smash(xs.iter().map(pass).collect()),
        SpaceExpr::HalfSmash(a, b) => SpaceExpr::half_smash(pass(a), pass(b)),
        SpaceExpr::Suspension(k, x) => SpaceExpr::suspension(*k, pass(x)),
    };
    local(rebuilt)
}

fn local(e: SpaceExpr) -> SpaceExpr {
    match e {
        SpaceExpr::Wedge(xs) => wedge_rule(xs),
        SpaceExpr::Product(xs) => product_rule(xs),
        SpaceExpr::Smash(xs) => smash_rule(xs),
        SpaceExpr::HalfSmash(a, b) => half_smash_rule(*a, *b),
        SpaceExpr::Suspension(k, x) => suspension_rule(k, *x),
        other => other,
    }
}

fn sorted(mut xs: Vec<SpaceExpr>) -> Vec<SpaceExpr> {
    xs.sort_by_cached_key(SpaceExpr::sort_key);
    xs
}

fn wedge_rule(xs: Vec<SpaceExpr>) -> SpaceExpr {
    let mut flat = Vec::new();
    for x in xs {
        match x {
            SpaceExpr::Wedge(inner) => flat.extend(inner),
            SpaceExpr::Point => {}
            other => flat.push(other),
        }
    }
    match flat.len() {
        0 => SpaceExpr::Point,
        1 => flat.pop().expect("one term"),
        _ => SpaceExpr::Wedge(sorted(flat)),
    }
}

fn product_rule(xs: Vec<SpaceExpr>) -> SpaceExpr {
    let mut flat = Vec::new();
    for x in xs {
        match x {
            SpaceExpr::Product(inner) => flat.extend(inner),
            SpaceExpr::Point => {}
            other => flat.push(other),
        }
    }
    match flat.len() {
        0 => SpaceExpr::Point,
        1 => flat.pop().expect("one factor"),
        _ => SpaceExpr::Product(sorted(flat)),
    }
}

/// `X_1 × … × X_k` after one suspension: the wedge of the smashes over nonempty subsets.
fn split_product(xs: &[SpaceExpr]) -> SpaceExpr {
    let terms = (1..=xs.len())
        .flat_map(|r| xs.iter().cloned().combinations(r))
        .map(|c| {
            if c.len() == 1 {
                c.into_iter().next().expect("one")
            } else {
                SpaceExpr::Smash(c)
            }
        })
        .collect();
    SpaceExpr::Wedge(terms)
}

fn smash_rule(xs: Vec<SpaceExpr>) -> SpaceExpr {
    let mut flat = Vec::new();
    for x in xs {
        match x {
            SpaceExpr::Smash(inner) => flat.extend(inner),
            SpaceExpr::Point => return SpaceExpr::Point,
            SpaceExpr::Sphere(0) => {}
            other => flat.push(other),
        }
    }
    // distribute over the first wedge factor
    if let Some(pos) = flat.iter().position(|x| matches!(x, SpaceExpr::Wedge(_))) {
        let SpaceExpr::Wedge(terms) = flat[pos].clone() else {
            unreachable!()
        };
        let distributed = terms
            .into_iter()
            .map(|t| {
                let mut factors = flat.clone();
                factors[pos] = t;
                SpaceExpr::Smash(factors)
            })
            .collect();
        return SpaceExpr::Wedge(distributed);
    }
    // pull spheres and suspension coordinates out front
    let mut shift = 0;
    let mut rest = Vec::new();
    for x in flat {
        match x {
            SpaceExpr::Sphere(k) => shift += k,
            SpaceExpr::Suspension(k, inner) => {
                shift += k;
                rest.push(*inner);
            }
            other => rest.push(other),
        }
    }
    if shift > 0 {
        return match rest.len() {
            0 => SpaceExpr::Sphere(shift),
            1 => SpaceExpr::suspension(shift, rest.pop().expect("one")),
            _ => SpaceExpr::suspension(shift, SpaceExpr::Smash(rest)),
        };
    }
    // a flagged atom absorbs one suspension coordinate, so products next to it split
    if rest.iter().any(SpaceExpr::is_suspension) {
        if let Some(pos) = rest.iter().position(|x| matches!(x, SpaceExpr::Product(_))) {
            let SpaceExpr::Product(ys) = rest[pos].clone() else {
                unreachable!()
            };
            rest[pos] = split_product(&ys);
            return SpaceExpr::Smash(rest);
        }
    }
    match rest.len() {
        0 => SpaceExpr::Sphere(0),
        1 => rest.pop().expect("one factor"),
        _ => SpaceExpr::Smash(sorted(rest)),
    }
}

fn half_smash_rule(a: SpaceExpr, b: SpaceExpr) -> SpaceExpr {
    match (&a, &b) {
        (SpaceExpr::Point, _) => SpaceExpr::Point,
        (_, SpaceExpr::Point) => a,
        _ if a.is_suspension() => SpaceExpr::Wedge(vec![a.clone(), SpaceExpr::Smash(vec![a, b])]),
        _ => SpaceExpr::half_smash(a, b),
    }
}

fn suspension_rule(k: usize, x: SpaceExpr) -> SpaceExpr {
    if k == 0 {
        return x;
    }
    match x {
        SpaceExpr::Point => SpaceExpr::Point,
        SpaceExpr::Sphere(a) => SpaceExpr::Sphere(a + k),
        SpaceExpr::Suspension(j, inner) => SpaceExpr::suspension(j + k, *inner),
        SpaceExpr::Wedge(xs) => SpaceExpr::Wedge(
            xs.into_iter()
                .map(|t| SpaceExpr::suspension(k, t))
                .collect(),
        ),
        SpaceExpr::Product(xs) => SpaceExpr::suspension(k, split_product(&xs)),
        SpaceExpr::Smash(mut xs) => {
            match xs.iter().position(|t| matches!(t, SpaceExpr::Product(_))) {
                Some(pos) => {
                    let SpaceExpr::Product(ys) = xs[pos].clone() else {
                        unreachable!()
                    };
                    xs[pos] = split_product(&ys);
                    SpaceExpr::suspension(k, SpaceExpr::Smash(xs))
                }
                None => SpaceExpr::suspension(k, SpaceExpr::Smash(xs)),
            }
        }
        other => SpaceExpr::suspension(k, other),
    }
}

/// Fat-wedge identity and ghost-vertex splitting for polyhedral products of cones.
fn polyprod_rule(k: &SimplicialComplex, pairs: &PairClass) -> SpaceExpr {
    if k.is_void() {
        return SpaceExpr::PolyProd(k.clone(), pairs.clone());
    }
    let ghosts = k.ghost_vertices();
    if !ghosts.is_empty() {
        let mut factors: Vec<SpaceExpr> = ghosts.iter().map(|i| atom_expr(pairs, i)).collect();
        if !k.vertex_set().is_empty() {
            let core = k.without_ghosts();
            factors.push(SpaceExpr::PolyProd(
                core.complex,
                restrict_pairs(pairs, &core.vertex_map),
            ));
        }
        return SpaceExpr::Product(factors);
    }
    if k.is_full_simplex() {
        return SpaceExpr::Point;
    }
    if k.is_simplex_boundary() {
        let atoms = (1..=k.m()).map(|i| atom_expr(pairs, i)).collect();
        return SpaceExpr::suspension(k.m() - 1, SpaceExpr::Smash(atoms));
    }
    SpaceExpr::PolyProd(k.clone(), pairs.clone())
}

/// Exact reduced homology of a closed expression.
pub fn expr_homology(e: &SpaceExpr) -> Result<HomologyProfile, ExprError> {
    match e {
        SpaceExpr::Point => Ok(HomologyProfile::trivial()),
        SpaceExpr::Sphere(k) => Ok(HomologyProfile::sphere(*k as isize)),
        SpaceExpr::Atom(a) => Ok(a.homology.clone()),
        SpaceExpr::Wedge(xs) => {
            let parts = xs
                .par_iter()
                .map(expr_homology)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(parts
                .iter()
                .fold(HomologyProfile::trivial(), |acc, p| acc.direct_sum(p)))
        }
        SpaceExpr::Product(xs) => {
            let parts = xs
                .par_iter()
                .map(expr_homology)
                .collect::<Result<Vec<_>, _>>()?;
            let mut acc = HomologyProfile::trivial();
            for p in &parts {
                acc = acc.product(p)?;
            }
            Ok(acc)
        }
        SpaceExpr::Smash(xs) => {
            let parts = xs
                .par_iter()
                .map(expr_homology)
                .collect::<Result<Vec<_>, _>>()?;
            let mut acc = HomologyProfile::sphere(0);
            for p in &parts {
                acc = acc.smash(p)?;
            }
            Ok(acc)
        }
        SpaceExpr::HalfSmash(a, b) => {
            let (ha, hb) = (expr_homology(a)?, expr_homology(b)?);
            Ok(ha.direct_sum(&ha.smash(&hb)?))
        }
        SpaceExpr::Suspension(k, x) => Ok(expr_homology(x)?.shifted(*k as isize)),
        SpaceExpr::Loop(_) => Err(ExprError::LoopTerm),
        SpaceExpr::PolyProd(k, pairs) => {
            Ok(polyhedral_homology(k, pairs, DEFAULT_ENUMERATION_CAP)?.total)
        }
    }
}

/// Prefix grammar: `pt`, `S<k>`, `atom:<name>`, `(wedge …)`, `(prod …)`, `(smash …)`,
/// `(half A B)`, `(susp k E)`, `(loop E)`, `(pp <kind> m=<m> [[…],…])`.
impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, head: &str, xs: &[SpaceExpr]| -> fmt::Result {
            write!(f, "({head}")?;
            for x in xs {
                write!(f, " {x}")?;
            }
            f.write_str(")")
        };
        match self {
            SpaceExpr::Point => f.write_str("pt"),
            SpaceExpr::Sphere(k) => write!(f, "S{k}"),
            SpaceExpr::Atom(a) => write!(f, "atom:{}", a.name),
            SpaceExpr::Wedge(xs) => list(f, "wedge", xs),
            SpaceExpr::Product(xs) => list(f, "prod", xs),
            SpaceExpr::Smash(xs) => list(f, "smash", xs),
            SpaceExpr::HalfSmash(a, b) => write!(f, "(half {a} {b})"),
            SpaceExpr::Suspension(k, x) => write!(f, "(susp {k} {x})"),
            SpaceExpr::Loop(x) => write!(f, "(loop {x})"),
            SpaceExpr::PolyProd(k, pairs) => {
                let facets = k
                    .facet_lists()
                    .iter()
                    .map(|fl| format!("[{}]", fl.iter().join(",")))
                    .join(",");
                write!(f, "(pp {} m={} [{facets}])", pairs.label(), k.m())
            }
        }
    }
}
