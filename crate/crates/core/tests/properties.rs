use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quadalg::classify::{are_isomorphic, canonical_form, random_quantum_binomial, theorem3_harness_set};
use quadalg::graphs::{build_graphs, monomial_algebra_check};
use quadalg::io::{emit_presentation, parse_presentation, Presentation};
use quadalg::orbits::{enumerate_orbits, monoid_dimension};
use quadalg::{QuadraticSet, RelationSet};

fn qb_set(n: usize, seed: u64) -> QuadraticSet {
    random_quantum_binomial(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    p
}

fn pairs(n: usize, mask: u64) -> Vec<(usize, usize)> {
    (0..n * n).filter(|c| mask >> c & 1 == 1).map(|c| (c / n, c % n)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonical_form_ignores_labels(n in 2usize..=5, seed: u64, perm_seed: u64) {
        let qs = qb_set(n, seed);
        let moved = qs.relabel(&permutation(n, perm_seed));
        let (a, b) = (canonical_form(&qs), canonical_form(&moved));
        prop_assert_eq!(a.rmap_codes(), b.rmap_codes());
        prop_assert!(are_isomorphic(&qs, &moved));
    }

    #[test]
    fn relabelling_preserves_orbits_and_dims(n in 2usize..=5, seed: u64, perm_seed: u64) {
        let qs = qb_set(n, seed);
        let sigma = permutation(n, perm_seed);
        let moved = qs.relabel(&sigma);
        let a = enumerate_orbits(&qs, 3).unwrap();
        let b = enumerate_orbits(&moved, 3).unwrap();
        prop_assert_eq!(a.len(), b.len());
        prop_assert_eq!(a.q(), b.q());
        for w in [[0, 1, 0], [1, 0, n - 1]] {
            let image: Vec<usize> = w.iter().map(|&x| sigma[x]).collect();
            let other: Vec<usize> = [n - 1, 0, 1].iter().map(|&x| sigma[x]).collect();
            prop_assert_eq!(a.same_orbit(&w, &[n - 1, 0, 1]), b.same_orbit(&image, &other));
        }
        prop_assert_eq!(
            RelationSet::from_set(&qs).unwrap().dim_a(3).unwrap(),
            RelationSet::from_set(&moved).unwrap().dim_a(3).unwrap()
        );
    }

    #[test]
    fn rank_and_orbit_dimensions_agree(n in 2usize..=4, seed: u64) {
        let qs = qb_set(n, seed);
        let rs = RelationSet::from_set(&qs).unwrap();
        for m in 0..=4 {
            prop_assert_eq!(rs.dim_a(m).unwrap(), monoid_dimension(&qs, m).unwrap());
        }
    }

    #[test]
    fn dual_dimension_formula(n in 2usize..=5, seed: u64) {
        let rs = RelationSet::from_set(&qb_set(n, seed)).unwrap();
        let n = n as i64;
        let formula = n * n * n - 2 * n * rs.dim_a(2).unwrap() as i64 + rs.dim_a(3).unwrap() as i64;
        prop_assert_eq!(rs.koszul_dual_relations().dim(3).unwrap() as i64, formula);
    }

    #[test]
    fn theorem3_matrix_is_constant(n in 2usize..=5, seed: u64) {
        let m = theorem3_harness_set(&qb_set(n, seed), 4).unwrap();
        prop_assert!(m.all_equal());
    }

    #[test]
    fn graphs_are_complements(n in 1usize..=5, mask: u64) {
        let w = pairs(n, mask);
        let (normal, obstruction) = build_graphs(n, &w);
        prop_assert_eq!(normal.edge_count() + obstruction.edge_count(), n * n);
        for a in 0..n {
            for b in 0..n {
                prop_assert_ne!(normal.has_edge(a, b), obstruction.has_edge(a, b));
                prop_assert_eq!(obstruction.has_edge(a, b), w.contains(&(a, b)));
            }
        }
    }

    #[test]
    fn monomial_verdicts_agree(n in 1usize..=4, mask: u64) {
        let v = monomial_algebra_check(n, &pairs(n, mask), 6).unwrap();
        prop_assert!(v.all_equal());
    }

    #[test]
    fn sets_round_trip_through_text(n in 1usize..=6, seed: u64) {
        let qs = qb_set(n, seed);
        let back = parse_presentation(&emit_presentation(&Presentation::Set(qs.clone()))).unwrap();
        let back = back.quadratic_set();
        prop_assert_eq!(back.rmap_codes(), qs.rmap_codes());
    }
}
