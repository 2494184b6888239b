mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use unikirch::enumeration::{collect_unicyclic, count_by_matching_number};
use unikirch::oracle::matching_number_brute;
use unikirch::{canonical_code, CanonicalCode, Graph};

/// Connected unicyclic graphs up to isomorphism, n = 3..=12 (OEIS A001429).
const CLASS_COUNTS: [usize; 10] = [1, 2, 5, 13, 33, 89, 240, 657, 1806, 5026];

fn codes(n: usize) -> BTreeSet<CanonicalCode> {
    collect_unicyclic(n, None).unwrap().into_iter().map(|c| c.code).collect()
}

#[test]
fn class_counts_match_the_published_sequence() {
    for (n, &expected) in (3..).zip(CLASS_COUNTS.iter()) {
        let classes = collect_unicyclic(n, None).unwrap();
        assert_eq!(classes.len(), expected, "n={n}");
        let distinct: BTreeSet<_> = classes.iter().map(|c| &c.code).collect();
        assert_eq!(distinct.len(), expected, "duplicate classes at n={n}");
        let by_m: usize = count_by_matching_number(n).unwrap().iter().sum();
        assert_eq!(by_m, expected, "n={n}");
    }
}

/// Every class on n+1 vertices is some class on n vertices with a pendant
/// added, except the cycle C_{n+1}; no pendant extension leaves the list.
#[test]
fn pendant_extension_reaches_exactly_the_next_size() {
    for n in 3..=10 {
        let mut reached = BTreeSet::new();
        for class in collect_unicyclic(n, None).unwrap() {
            for v in 0..n {
                let mut g = class.graph.clone();
                let x = g.add_vertex();
                g.add_edge(v, x).unwrap();
                reached.insert(canonical_code(&g).unwrap());
            }
        }
        let mut cycle = Graph::empty(n + 1);
        for v in 0..=n {
            cycle.add_edge(v, (v + 1) % (n + 1)).unwrap();
        }
        reached.insert(canonical_code(&cycle).unwrap());
        assert_eq!(reached, codes(n + 1), "n+1={}", n + 1);
    }
}

#[test]
fn matching_partition_agrees_with_brute_force() {
    for n in 3..=10 {
        for m in 1..=n / 2 {
            let classes = collect_unicyclic(n, Some(m)).unwrap();
            for class in &classes {
                assert_eq!(class.matching_number, m);
                assert_eq!(matching_number_brute(&class.graph), m);
                assert_eq!(canonical_code(&class.graph).unwrap(), class.code);
            }
            assert_eq!(classes.len(), count_by_matching_number(n).unwrap().get(m).copied().unwrap_or(0));
        }
    }
}

proptest! {
    #[test]
    fn canonical_code_ignores_labels(
        (g, perm) in common::arb_unicyclic(13).prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), common::arb_permutation(n))
        })
    ) {
        let code = canonical_code(&g).unwrap();
        prop_assert_eq!(&canonical_code(&g.relabel(&perm)).unwrap(), &code);
        prop_assert!(codes(g.vertex_count()).contains(&code));
    }
}
