//! The ten acceptance criteria of the spec, each with an independent oracle where one applies.
//! Every test prints one `criterion N: … ok` line and asserts it ran in under 60 s.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use polyprod::complex::corpus;
use polyprod::decomp::{
    expr_homology, hilton_milnor, p_membership, quasitoric_report, skeleton_decomposition,
    Certificate, Membership,
};
use polyprod::homology::{reduced_homology, AbelianGroup, DEFAULT_ENUMERATION_CAP};
use polyprod::mac::{
    golod_status, mac_homology, rz_homology, torsion_transfer_check, GolodVerdict,
};
use polyprod::pseudo::{check_removal_ordering, vertex_removal_ordering, Graph, OrderingError};
use polyprod::{HomologyProfile, PairClass, SimplicialComplex, VertexSet};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const CAP: usize = DEFAULT_ENUMERATION_CAP;

fn timed(criterion: usize, label: &str, body: impl FnOnce()) {
    let start = Instant::now();
    body();
    let elapsed = start.elapsed();
    println!(
        "criterion {criterion}: {label} ok ({} ms)",
        elapsed.as_millis()
    );
    assert!(
        elapsed < Duration::from_secs(60),
        "criterion {criterion} took {elapsed:?}"
    );
}

// ---------- oracle: brute-force Hochster sum with exact rational ranks ----------

/// Rank over Q by fraction-free (Bareiss) elimination in i128.
fn rational_rank(mut a: Vec<Vec<i128>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let (mut rank, mut prev) = (0usize, 1i128);
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for cc in c + 1..cols {
                a[r][cc] = (a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Faces (as sorted vertex lists, including ∅) of the full subcomplex on `subset`.
fn faces_on(facets: &[Vec<usize>], subset: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << subset.len()) {
        let face: Vec<usize> = (0..subset.len())
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| subset[b])
            .collect();
        if face.is_empty() || facets.iter().any(|f| face.iter().all(|v| f.contains(v))) {
            out.push(face);
        }
    }
    out
}

/// Reduced rational Betti numbers `b̃_d` for `d >= -1`, keyed by `d`.
fn reduced_betti_q(facets: &[Vec<usize>], subset: &[usize]) -> BTreeMap<isize, usize> {
    let faces = faces_on(facets, subset);
    let by_dim = |d: isize| -> Vec<&Vec<usize>> {
        faces.iter().filter(|f| f.len() as isize - 1 == d).collect()
    };
    let top = faces
        .iter()
        .map(|f| f.len() as isize - 1)
        .max()
        .unwrap_or(-1);
    let boundary_rank = |d: isize| -> usize {
        // ∂_d: C_d → C_{d-1}, augmented (C_{-1} = Q·∅)
        let (src, dst) = (by_dim(d), by_dim(d - 1));
        if src.is_empty() || dst.is_empty() {
            return 0;
        }
        let matrix = dst
            .iter()
            .map(|t| {
                src.iter()
                    .map(|s| {
                        match (0..s.len()).find(|&i| {
                            let mut r = (*s).clone();
                            r.remove(i);
                            &r == *t
                        }) {
                            Some(i) => {
                                if i % 2 == 0 {
                                    1
                                } else {
                                    -1
                                }
                            }
                            None => 0,
                        }
                    })
                    .collect()
            })
            .collect();
        rational_rank(matrix)
    };
    let mut out = BTreeMap::new();
    for d in -1..=top {
        let b = by_dim(d).len() - boundary_rank(d) - boundary_rank(d + 1);
        if b > 0 {
            out.insert(d, b);
        }
    }
    out
}

/// Betti numbers of `𝒵_K` in positive degrees: `Σ_I b̃_{j-|I|-1}(K_I)` over all nonempty `I ⊆ [m]`.
fn hochster_oracle(k: &SimplicialComplex) -> BTreeMap<isize, usize> {
    let facets = k.facet_lists();
    let mut out = BTreeMap::new();
    for mask in 1u32..(1 << k.m()) {
        let subset: Vec<usize> = (1..=k.m()).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        for (d, b) in reduced_betti_q(&facets, &subset) {
            *out.entry(d + subset.len() as isize + 1).or_insert(0) += b;
        }
    }
    out
}

fn ranks(p: &HomologyProfile) -> BTreeMap<isize, usize> {
    p.iter()
        .filter(|(_, g)| g.rank > 0)
        .map(|(d, g)| (d, g.rank))
        .collect()
}

fn free(ranks: &[(isize, usize)]) -> HomologyProfile {
    HomologyProfile::from_ranks(ranks.iter().copied())
}

#[test]
fn criterion_01_hochster_golden_values() {
    timed(1, "Hochster golden values", || {
        let mut cases = Vec::new();
        for n in 1..=3usize {
            cases.push((
                corpus::simplex_boundary(n + 1).unwrap(),
                free(&[(2 * n as isize + 3, 1)]),
            ));
        }
        cases.push((corpus::polygon(4).unwrap(), free(&[(3, 2), (6, 1)])));
        cases.push((
            corpus::cross_polytope_boundary(3).unwrap(),
            free(&[(3, 3), (6, 3), (9, 1)]),
        ));
        for (k, expected) in cases {
            let h = mac_homology(&k, CAP).unwrap().total;
            assert_eq!(h, expected, "integral profile of {k:?}");
            assert_eq!(
                ranks(&h),
                hochster_oracle(&k),
                "brute-force oracle for {k:?}"
            );
        }
        let oct = mac_homology(&corpus::cross_polytope_boundary(3).unwrap(), CAP)
            .unwrap()
            .total;
        assert_eq!(oct.poincare_polynomial(), "1 + 3t^3 + 3t^6 + t^9");
        assert_eq!(
            mac_homology(&corpus::polygon(4).unwrap(), CAP)
                .unwrap()
                .total
                .poincare_polynomial(),
            "1 + 2t^3 + t^6"
        );
    });
}

#[test]
fn criterion_02_torsion_witness() {
    timed(2, "rp2_six torsion witness", || {
        let k = corpus::rp2_six();
        let h = mac_homology(&k, CAP).unwrap();
        let torsion: Vec<(isize, Vec<u64>)> = h
            .total
            .iter()
            .filter(|(_, g)| !g.is_free())
            .map(|(d, g)| (d, g.torsion.clone()))
            .collect();
        assert_eq!(torsion, vec![(8, vec![2])]);
        let witnesses = h.torsion_contributions();
        assert_eq!(witnesses.len(), 1);
        assert_eq!(witnesses[0].subset, VertexSet::full(6));
        assert_eq!(
            witnesses[0].profile,
            HomologyProfile::trivial().with(1, AbelianGroup::new(0, vec![2]))
        );
        assert_eq!(ranks(&h.total), hochster_oracle(&k));

        let out = polyprod_cli::run(["prove-p", "corpus:rp2_six"]);
        assert_eq!(out.code, 2);
        assert!(
            out.stdout.contains("torsion witness: I = {1,2,3,4,5,6}"),
            "{}",
            out.stdout
        );
        assert!(out.stdout.contains("§6 Remark"));
    });
}

fn consistency_cases() -> Vec<SimplicialComplex> {
    vec![
        corpus::simplex_boundary(3)
            .unwrap()
            .remove_face(VertexSet::from_vertices([1, 2, 3]))
            .unwrap(),
        corpus::cross_polytope_boundary(3)
            .unwrap()
            .delete_vertex(1)
            .unwrap()
            .complex,
        corpus::cyclic_sphere(6, 4)
            .unwrap()
            .delete_vertex(1)
            .unwrap()
            .complex,
    ]
}

#[test]
fn criterion_03_decomposition_homology_consistency() {
    timed(3, "skeleton decomposition vs Hochster sum", || {
        for k in consistency_cases() {
            let n = k.dim() as usize;
            let d = skeleton_decomposition(&k, &PairClass::moment_angle()).unwrap();
            let skeleton = k.skeleton(n - 1);
            let computed = mac_homology(&skeleton, CAP).unwrap().total;
            assert_eq!(expr_homology(&d.expr).unwrap(), computed, "{}", d.expr);
            assert!(computed.is_torsion_free());
            assert_eq!(ranks(&computed), hochster_oracle(&skeleton));
            d.certificate.validate().unwrap();
        }
    });
}

#[test]
fn criterion_04_torsion_transfer() {
    timed(4, "Prop \"torfreeret\" transfer", || {
        for k in consistency_cases() {
            let n = k.dim() as usize;
            let whole = mac_homology(&k, CAP).unwrap().total.is_torsion_free();
            let skeleton = mac_homology(&k.skeleton(n - 1), CAP)
                .unwrap()
                .total
                .is_torsion_free();
            assert_eq!(whole, skeleton);
            let t = torsion_transfer_check(&k, CAP).unwrap();
            assert!(
                t.agree
                    && t.mac_torsion_free == whole
                    && t.citation.contains("Prop \"torfreeret\"")
            );
        }
    });
}

/// Random connected graph on `nodes` nodes with max degree `<= n` and some node of degree `< n`.
fn random_hypothesis_graph(rng: &mut StdRng, nodes: usize, n: usize) -> Graph {
    loop {
        let mut degree = vec![0usize; nodes];
        let mut edges = Vec::new();
        for v in 1..nodes {
            let candidates: Vec<usize> = (0..v).filter(|&u| degree[u] < n).collect();
            let u = candidates[rng.gen_range(0..candidates.len())];
            edges.push((u, v));
            degree[u] += 1;
            degree[v] += 1;
        }
        for _ in 0..rng.gen_range(0..=2 * nodes) {
            let (a, b) = (rng.gen_range(0..nodes), rng.gen_range(0..nodes));
            if a != b
                && degree[a] < n
                && degree[b] < n
                && !edges.contains(&(a.min(b), a.max(b)))
                && !edges.contains(&(a.max(b), a.min(b)))
            {
                edges.push((a.min(b), a.max(b)));
                degree[a] += 1;
                degree[b] += 1;
            }
        }
        if degree.iter().any(|&d| d < n) {
            return Graph::from_edges(nodes, edges);
        }
    }
}

#[test]
fn criterion_05_vertex_removal_orderings() {
    timed(5, "Lemma 2.1 prefix replay on 1000 random graphs", || {
        let mut rng = StdRng::seed_from_u64(0x5eed_2024);
        for _ in 0..1000 {
            let nodes = rng.gen_range(1..=12);
            let n = rng.gen_range(2..=5);
            let g = random_hypothesis_graph(&mut rng, nodes, n);
            assert!(g.is_connected());
            let order = vertex_removal_ordering(&g, n).unwrap();
            check_removal_ordering(&g, &order, n).unwrap();
        }
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i)));
        assert!(matches!(
            vertex_removal_ordering(&star, 3),
            Err(OrderingError::DegreeTooHigh {
                node: 0,
                degree: 4,
                bound: 3
            })
        ));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert_eq!(
            vertex_removal_ordering(&split, 2),
            Err(OrderingError::Disconnected { components: 2 })
        );
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            vertex_removal_ordering(&k4, 3),
            Err(OrderingError::NoLowDegreeVertex { bound: 3 })
        );
    });
}

#[test]
fn criterion_06_golod_suite() {
    timed(6, "Golod verdicts", || {
        for n in 1..=3 {
            let g = golod_status(&corpus::simplex_boundary(n + 1).unwrap());
            assert_eq!(g.verdict, GolodVerdict::Golod);
            assert!(g.justification[0].starts_with("Lemma \"GolodMaM\""));
        }
        let c64 = golod_status(&corpus::cyclic_sphere(6, 4).unwrap());
        assert_eq!(c64.verdict, GolodVerdict::MinimallyNonGolod);
        assert_eq!(c64.minimally_non_golod, Some(true));
        assert!(c64
            .justification
            .iter()
            .any(|j| j.contains("Theorem \"neighbourlupseudominnonGolod\"")));
        assert!(c64
            .justification
            .iter()
            .any(|j| j.contains("Theorem \"neighbourlytriofsphere\"")));
        let criterion =
            polyprod::mac::desuspension_criterion(&corpus::cyclic_sphere(6, 4).unwrap(), CAP)
                .unwrap();
        let inner = criterion.inner_check.unwrap();
        assert!(inner.passed && inner.degree == 1);
        // independent inner check: every proper K_I has free homology concentrated in degree 1
        let k = corpus::cyclic_sphere(6, 4).unwrap();
        for mask in 1u64..(1 << 6) - 1 {
            let i = VertexSet::from_vertices((1..=6).filter(|v| mask & (1 << (v - 1)) != 0));
            let h = reduced_homology(&k.full_subcomplex(i).complex);
            assert!(
                h.is_trivial() || h.free_and_concentrated_in(1),
                "K_{i}: {h}"
            );
        }
        let oct = golod_status(&corpus::cross_polytope_boundary(3).unwrap());
        assert_eq!(oct.verdict, GolodVerdict::NotGolod);
        assert_eq!(oct.minimally_non_golod, None);
        assert!(oct.justification[0].starts_with("Lemma \"GolodMaM\""));
    });
}

fn revalidate(c: &Certificate) {
    let json = serde_json::to_string(c).unwrap();
    let back: Certificate = serde_json::from_str(&json).unwrap();
    assert_eq!(&back, c);
    back.validate().unwrap();
}

fn derived(k: &SimplicialComplex) -> Certificate {
    match p_membership(k, &PairClass::moment_angle()) {
        Membership::Derived(c) => c,
        Membership::Failure(f) => panic!("{}", f.summary()),
    }
}

#[test]
fn criterion_07_prover_routes() {
    timed(7, "prover routes and certificate re-validation", || {
        let cases: [(SimplicialComplex, &[&str]); 5] = [
            (corpus::polygon(5).unwrap(), &["R1"]),
            (corpus::cross_polytope_boundary(3).unwrap(), &["R7"]),
            (corpus::torus_seven(), &["R7"]),
            (corpus::cross_polytope_boundary(4).unwrap(), &["R5", "R6"]),
            (corpus::cyclic_sphere(6, 4).unwrap(), &["R8", "R9"]),
        ];
        for (k, allowed) in cases {
            let c = derived(&k);
            assert!(c.is_proved());
            assert!(
                allowed.contains(&c.code.as_deref().unwrap()),
                "{:?} via {:?}",
                k,
                c.code
            );
            revalidate(&c);
        }
        assert!(derived(&corpus::cyclic_sphere(6, 4).unwrap())
            .codes()
            .contains("R8"));
    });
}

fn is_lyndon(w: &[usize]) -> bool {
    (1..w.len()).all(|r| {
        let rotated: Vec<usize> = w[r..].iter().chain(&w[..r]).copied().collect();
        w < rotated.as_slice()
    })
}

fn mobius(n: usize) -> i64 {
    let mut primes = 0;
    let mut m = n;
    for p in 2..=n {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            primes += 1;
        }
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

fn necklace_oracle(k: usize, w: usize) -> usize {
    let s: i64 = (1..=w)
        .filter(|d| w.is_multiple_of(*d))
        .map(|d| mobius(d) * (k as i64).pow((w / d) as u32))
        .sum();
    (s / w as i64) as usize
}

#[test]
fn criterion_08_hilton_milnor_counts() {
    timed(
        8,
        "Hilton–Milnor vs Lyndon enumeration and necklaces",
        || {
            const CUTOFF: usize = 12;
            for dims in [vec![3usize, 3], vec![2, 2, 2]] {
                let k = dims.len();
                let mut brute: BTreeMap<(usize, usize), usize> = BTreeMap::new();
                for w in 1..=CUTOFF {
                    for code in 0..k.pow(w as u32) {
                        let word: Vec<usize> = (0..w)
                            .map(|i| code / k.pow((w - 1 - i) as u32) % k)
                            .collect();
                        let dim = 1 + word.iter().map(|&l| dims[l] - 1).sum::<usize>();
                        if dim <= CUTOFF && is_lyndon(&word) {
                            *brute.entry((w, dim)).or_default() += 1;
                        }
                    }
                }
                let engine: BTreeMap<(usize, usize), usize> = hilton_milnor(&dims, CUTOFF)
                    .unwrap()
                    .into_iter()
                    .map(|f| ((f.weight, f.sphere_dim), f.multiplicity))
                    .collect();
                assert_eq!(engine, brute, "{dims:?}");
                for (&(w, _), &count) in &engine {
                    assert_eq!(count, necklace_oracle(k, w));
                }
            }
        },
    );
}

#[test]
fn criterion_09_real_moment_angle() {
    timed(9, "real moment-angle homology", || {
        let square = rz_homology(&corpus::polygon(4).unwrap(), CAP)
            .unwrap()
            .total;
        assert_eq!(square, free(&[(1, 2), (2, 1)]));
        assert_eq!(square.poincare_polynomial(), "1 + 2t + t^2");
        // ledger item 3: the paper's "degrees n+1 and 2n+2" for n = 1 are 2 and 4
        let c64 = rz_homology(&corpus::cyclic_sphere(6, 4).unwrap(), CAP)
            .unwrap()
            .total;
        assert_eq!(c64.degrees(), vec![2, 4]);
        assert_eq!(c64.rank(4), 1);
        assert!(c64.is_torsion_free());
    });
}

#[test]
fn criterion_10_quasitoric_reports() {
    timed(10, "quasitoric reports", || {
        let tri = quasitoric_report(3, 2, &corpus::simplex_boundary(2).unwrap(), None).unwrap();
        assert_eq!(tri.summary, "ΩM ≃ S¹ × ΩS⁵");
        let square_k = corpus::polygon(4).unwrap();
        let sq = quasitoric_report(4, 2, &square_k, None).unwrap();
        assert_eq!(sq.summary, "ΩM ≃ T² × Ω𝒵_K");
        assert_eq!(
            sq.loop_report.as_ref().unwrap().wedge_dimensions,
            vec![3, 3]
        );
        // 𝒵 of the square has the homology of S³ × S³
        assert_eq!(
            mac_homology(&square_k, CAP).unwrap().total,
            free(&[(3, 2), (6, 1)])
        );
        let tet = quasitoric_report(4, 3, &corpus::simplex_boundary(3).unwrap(), None).unwrap();
        assert_eq!(tet.summary, "ΩM ≃ S¹ × ΩS⁷");
        for r in [&tri, &sq, &tet] {
            let c = r.p_verdict.as_ref().unwrap();
            assert!(c.citation.contains("Prop \"quasitoric\""));
            assert!(c.is_proved());
            revalidate(c);
        }
    });
}
