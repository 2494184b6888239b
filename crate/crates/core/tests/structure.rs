mod common;

use common::arb_unicyclic;
use proptest::prelude::*;
use unikirch::graph::{decompose_unicyclic, pendant_p2_fixpoint};
use unikirch::matching::{has_perfect_matching, matching_number, reduce_to_g0, reduce_to_g0_all_orders};
use unikirch::oracle::{are_isomorphic, matching_number_brute};
use unikirch::FamilySpec;

fn girth(g: &unikirch::Graph) -> usize {
    // Shortest cycle through each edge: remove it, measure the detour.
    g.edges()
        .filter_map(|(u, v)| {
            let mut h = g.clone();
            h.remove_edge(u, v);
            h.distances(u)[v].map(|d| d + 1)
        })
        .min()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn decomposition_reassembles_the_input(g in arb_unicyclic(14)) {
        let d = decompose_unicyclic(&g).unwrap();
        prop_assert_eq!(d.reassemble(), g.clone());
        prop_assert_eq!(d.cycle_length(), girth(&g));
        for v in 0..g.vertex_count() {
            let root = d.root_of(v);
            prop_assert!(d.on_cycle(root));
            prop_assert_eq!(g.distances(v)[root], Some(d.depth[v]));
        }
    }

    /// Each stripped pendent P2 removes exactly one matching edge.
    #[test]
    fn p2_stripping_lowers_matching_number_by_one_each(g in arb_unicyclic(12)) {
        let r = pendant_p2_fixpoint(&g);
        prop_assert_eq!(r.graph.vertex_count() + 2 * r.removed.len(), g.vertex_count());
        prop_assert!(unikirch::graph::find_pendant_p2(&r.graph).is_none());
        prop_assert_eq!(matching_number_brute(&g), matching_number_brute(&r.graph) + r.removed.len());
        for (a, b) in r.graph.edges() {
            prop_assert!(g.has_edge(r.kept[a], r.kept[b]));
        }
    }

    #[test]
    fn g0_has_a_perfect_matching_of_the_same_size(g in arb_unicyclic(11)) {
        let r = reduce_to_g0(&g).unwrap();
        let m = matching_number_brute(&g);
        prop_assert_eq!(r.matching_number, m);
        prop_assert_eq!(matching_number(&g).unwrap().size, m);
        prop_assert!(r.graph.is_unicyclic());
        if !g.is_cycle() {
            prop_assert_eq!(r.graph.vertex_count(), 2 * m);
        }
        prop_assert!(r.graph.is_cycle() || has_perfect_matching(&r.graph).unwrap());
        prop_assert_eq!(r.removed_count, g.vertex_count() - r.graph.vertex_count());
        for (a, b) in r.graph.edges() {
            prop_assert!(g.has_edge(r.kept[a], r.kept[b]));
        }
    }
}

#[test]
fn deterministic_g0_is_among_all_orders() {
    for spec in ["U(3,2,2,1)", "U(5,1,3,2)", "Unm(11,4)", "U(4,2,1,0)"] {
        let g = spec.parse::<FamilySpec>().unwrap().build().unwrap();
        let chosen = reduce_to_g0(&g).unwrap().graph;
        let all = reduce_to_g0_all_orders(&g).unwrap();
        assert!(all.iter().any(|h| are_isomorphic(h, &chosen)), "{spec}");
    }
}

#[test]
fn p2_fixpoint_of_family_members() {
    let g = "U(5,1,0,5)".parse::<FamilySpec>().unwrap().build().unwrap();
    let r = pendant_p2_fixpoint(&g);
    let expected = "U(5,1,0,0)".parse::<FamilySpec>().unwrap().build().unwrap();
    assert!(are_isomorphic(&r.graph, &expected));
    assert_eq!(r.removed.len(), 5);
}
