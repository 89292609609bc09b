//! Property tests: normalization is idempotent and homology-preserving; documents round-trip.

use polyprod::complex::corpus;
use polyprod::decomp::{expr_homology, normalize, AtomTerm, SpaceExpr};
use polyprod::homology::AbelianGroup;
use polyprod::mac::mac_homology;
use polyprod::{HomologyProfile, PairClass, SimplicialComplex};
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = SpaceExpr> {
    prop_oneof![
        Just(SpaceExpr::Point),
        (1usize..5).prop_map(SpaceExpr::Sphere),
        (1usize..4, any::<bool>()).prop_map(|(d, susp)| {
            let h = HomologyProfile::trivial().with(d as isize, AbelianGroup::new(0, vec![2]));
            SpaceExpr::Atom(AtomTerm::new(format!("M{d}"), h, susp))
        }),
        prop_oneof![
            Just(corpus::simplex_boundary(2).unwrap()),
            Just(corpus::polygon(4).unwrap()),
            Just(SimplicialComplex::simplex(2)),
            Just(SimplicialComplex::from_facets(3, [[1, 2]]).unwrap()),
        ]
        .prop_map(|k| SpaceExpr::PolyProd(k, PairClass::moment_angle())),
    ]
}

fn expr() -> impl Strategy<Value = SpaceExpr> {
    leaf().prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..3).prop_map(SpaceExpr::Wedge),
            prop::collection::vec(inner.clone(), 1..3).prop_map(SpaceExpr::Product),
            prop::collection::vec(inner.clone(), 1..3).prop_map(SpaceExpr::Smash),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| SpaceExpr::half_smash(a, b)),
            (1usize..3, inner).prop_map(|(k, e)| SpaceExpr::suspension(k, e)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn normalize_is_idempotent(e in expr()) {
        let once = normalize(&e);
        prop_assert_eq!(normalize(&once), once);
    }

    #[test]
    fn normalize_preserves_homology(e in expr()) {
        if let Ok(h) = expr_homology(&e) {
            prop_assert_eq!(expr_homology(&normalize(&e)).unwrap(), h);
        }
    }

    #[test]
    fn complexes_round_trip_through_serde(m in 3usize..8, raw in prop::collection::vec(prop::collection::btree_set(1usize..8, 1..4), 1..6)) {
        let facets: Vec<Vec<usize>> = raw.into_iter().map(|f| f.into_iter().filter(|&v| v <= m).collect::<Vec<_>>()).filter(|f| !f.is_empty()).collect();
        prop_assume!(!facets.is_empty());
        let k = SimplicialComplex::from_facets(m, facets).unwrap();
        let json = serde_json::to_string(&k).unwrap();
        let back: SimplicialComplex = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
        prop_assert_eq!(back, k);
    }

    #[test]
    fn polyprod_leaf_matches_hochster(m in 3usize..7) {
        let k = corpus::polygon(m).unwrap();
        let e = SpaceExpr::PolyProd(k.clone(), PairClass::moment_angle());
        prop_assert_eq!(expr_homology(&normalize(&e)).unwrap(), mac_homology(&k, 20).unwrap().total);
    }
}
