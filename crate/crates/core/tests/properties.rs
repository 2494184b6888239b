mod common;

use common::arb_unicyclic;
use proptest::prelude::*;
use unikirch::graph::{identify_vertices, wiener_index};
use unikirch::oracle::resistance_brute;
use unikirch::resistance::{kirchhoff_vertex_sum, resistance_forest, ResistanceMatrix};
use unikirch::{kirchhoff_index, Rational};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn methods_agree_with_spanning_tree_oracle(g in arb_unicyclic(9)) {
        let fast = ResistanceMatrix::compute(&g).unwrap();
        let laplacian = ResistanceMatrix::laplacian(&g).unwrap();
        prop_assert_eq!(&fast, &laplacian);
        let n = g.vertex_count();
        for u in 0..n {
            for v in u + 1..n {
                let brute = resistance_brute(&g, u, v);
                prop_assert_eq!(fast.get(u, v), &brute);
                prop_assert_eq!(&resistance_forest(&g, u, v).unwrap(), &brute);
            }
        }
    }

    #[test]
    fn resistance_is_a_metric_below_hop_distance(g in arb_unicyclic(11)) {
        let r = ResistanceMatrix::compute(&g).unwrap();
        let n = g.vertex_count();
        for u in 0..n {
            prop_assert!(r.get(u, u).is_zero());
            let hops = g.distances(u);
            for v in 0..n {
                prop_assert_eq!(r.get(u, v), r.get(v, u));
                if u != v {
                    prop_assert!(!r.get(u, v).is_zero() && !r.get(u, v).is_negative());
                    prop_assert!(*r.get(u, v) <= Rational::from(hops[v].unwrap() as i64));
                }
                for w in 0..n {
                    prop_assert!(r.get(u, w) <= &(r.get(u, v) + r.get(v, w)));
                }
            }
        }
    }

    /// Edge resistances of a connected graph sum to n - 1.
    #[test]
    fn edge_resistances_sum_to_tree_size(g in arb_unicyclic(14)) {
        let r = ResistanceMatrix::compute(&g).unwrap();
        let total: Rational = g.edges().map(|(u, v)| r.get(u, v).clone()).sum();
        prop_assert_eq!(total, Rational::from(g.vertex_count() as i64 - 1));
    }

    #[test]
    fn vertex_sums_add_to_twice_the_index(g in arb_unicyclic(12)) {
        let total: Rational = (0..g.vertex_count()).map(|u| kirchhoff_vertex_sum(&g, u).unwrap()).sum();
        prop_assert_eq!(total, kirchhoff_index(&g).unwrap() * Rational::from(2));
    }

    /// Gluing at a cut vertex: Kf(G·H) = Kf(G) + Kf(H) + (|H|-1) Kf_G(u) + (|G|-1) Kf_H(w).
    #[test]
    fn merge_identity(g in arb_unicyclic(8), h in arb_unicyclic(8), u in any::<usize>(), w in any::<usize>()) {
        let u = u % g.vertex_count();
        let w = w % h.vertex_count();
        let merged = identify_vertices(&g, u, &h, w).unwrap();
        let gn = Rational::from(g.vertex_count() as i64 - 1);
        let hn = Rational::from(h.vertex_count() as i64 - 1);
        let predicted = kirchhoff_index(&g).unwrap()
            + kirchhoff_index(&h).unwrap()
            + hn * kirchhoff_vertex_sum(&g, u).unwrap()
            + gn * kirchhoff_vertex_sum(&h, w).unwrap();
        let direct = ResistanceMatrix::laplacian(&merged).unwrap().kirchhoff();
        prop_assert_eq!(predicted, direct);
    }

    #[test]
    fn kirchhoff_index_is_relabel_invariant(
        (g, perm) in arb_unicyclic(10).prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), common::arb_permutation(n))
        })
    ) {
        let h = g.relabel(&perm);
        prop_assert_eq!(kirchhoff_index(&g).unwrap(), kirchhoff_index(&h).unwrap());
        prop_assert_eq!(wiener_index(&g).unwrap(), wiener_index(&h).unwrap());
    }
}

#[test]
fn trees_have_equal_kirchhoff_and_wiener_indices() {
    for seq in [vec![], vec![0], vec![0, 0, 0], vec![1, 2, 3, 4], vec![5, 5, 0, 2, 2, 7]] {
        let t = common::prufer_tree(&seq);
        assert_eq!(kirchhoff_index(&t).unwrap(), wiener_index(&t).unwrap());
    }
}
