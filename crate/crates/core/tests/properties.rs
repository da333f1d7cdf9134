mod common;

use common::{brute_connectivity, brute_isomorphic, random_graph, random_permutation};
use pow2free::canon::{are_isomorphic, canonical_form};
use pow2free::embedding::{genus, trace_faces, RotationSystem};
use pow2free::format::{encode_graph6, format_edge_list, parse_edge_list, parse_graph6, read_graph};
use pow2free::structure::{is_connected, vertex_connectivity_at_least};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(n in 0usize..=30, p in 0.0f64..1.0, seed: u64) {
        let g = random_graph(n, p, &mut StdRng::seed_from_u64(seed));
        let text = encode_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g.clone());
        prop_assert_eq!(read_graph(&text).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn canonical_form_ignores_labels(n in 1usize..=14, p in 0.1f64..0.9, seed: u64) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_graph(n, p, &mut rng);
        let h = g.relabel(&random_permutation(n, &mut rng));
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn canonical_form_agrees_with_backtracking(n in 1usize..=8, p in 0.2f64..0.8, seed: u64) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_graph(n, p, &mut rng);
        let h = random_graph(n, p, &mut rng);
        prop_assert_eq!(are_isomorphic(&g, &h), brute_isomorphic(&g, &h));
    }

    #[test]
    fn connectivity_matches_vertex_removal(n in 2usize..=14, p in 0.2f64..0.9, seed: u64) {
        let g = random_graph(n, p, &mut StdRng::seed_from_u64(seed));
        let kappa = brute_connectivity(&g);
        prop_assert_eq!(is_connected(&g), kappa > 0 || n == 1);
        for k in 1..n {
            prop_assert_eq!(vertex_connectivity_at_least(&g, k).unwrap(), kappa >= k, "k={}", k);
        }
    }

    #[test]
    fn random_rotations_satisfy_euler(n in 3usize..=12, p in 0.3f64..0.9, seed: u64) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_graph(n, p, &mut rng);
        prop_assume!(is_connected(&g));
        let order = (0..n)
            .map(|v| {
                let mut nbrs = g.neighbors(v).to_vec();
                nbrs.shuffle(&mut rng);
                nbrs
            })
            .collect();
        let rot = RotationSystem::new(&g, order).unwrap();
        let faces = trace_faces(&g, &rot).unwrap();
        let dart_total: usize = faces.iter().map(|f| f.len()).sum();
        prop_assert_eq!(dart_total, 2 * g.size());
        let gen = genus(&g, &rot).unwrap();
        prop_assert_eq!(n as i64 - g.size() as i64 + faces.len() as i64, 2 - 2 * gen as i64);
        prop_assert_eq!(genus(&g, &rot.mirror()).unwrap(), gen);
    }
}
