use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use signed_join::coloring::{is_proper, Color, ColorSet, Coloration};
use signed_join::format::{parse_graph, print_graph};
use signed_join::graph::{all_negative_join, all_positive_join, Sign, SignedGraph};
use signed_join::recolor::{apply_simultaneous, remap_into_palette, Replacement};
use signed_join::solver::search::ColoringSearch;
use signed_join::solver::{chromatic_number, graph_stats};
use signed_join::theorem::{predicted_chromatic, SideStats};

fn graph(max_order: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_order).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(0u8..3, pairs).prop_map(move |codes| {
            let mut edges = Vec::new();
            let mut it = codes.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    match it.next().unwrap() {
                        1 => edges.push((u, v, Sign::Positive)),
                        2 => edges.push((u, v, Sign::Negative)),
                        _ => {}
                    }
                }
            }
            SignedGraph::new(n, edges).unwrap()
        })
    })
}

fn graph_with_subset(max_order: usize) -> impl Strategy<Value = (SignedGraph, BTreeSet<usize>)> {
    graph(max_order).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), prop::collection::vec(any::<bool>(), n)).prop_map(|(g, bits)| {
            let set = bits
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i)
                .collect();
            (g, set)
        })
    })
}

fn some_proper_coloring(g: &SignedGraph) -> Coloration {
    let chi = chromatic_number(g);
    ColoringSearch::new(g, ColorSet::new(chi).unwrap())
        .first()
        .unwrap()
}

proptest! {
    #[test]
    fn switching_twice_is_identity((g, set) in graph_with_subset(7)) {
        let once = g.switch(&set).unwrap();
        prop_assert_eq!(once.switch(&set).unwrap(), g.clone());
        prop_assert_eq!(g.switch(&BTreeSet::new()).unwrap(), g);
    }

    #[test]
    fn switching_carries_colorings((g, set) in graph_with_subset(6)) {
        let kappa = some_proper_coloring(&g);
        let switched = g.switch(&set).unwrap();
        prop_assert!(is_proper(&switched, &kappa.negate_on(&set)));
        prop_assert_eq!(chromatic_number(&switched), chromatic_number(&g));
    }

    #[test]
    fn graph_file_round_trip(g in graph(8)) {
        let text = print_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g.clone());
        prop_assert_eq!(SignedGraph::from_signature(&g.signature()).unwrap(), g);
    }

    #[test]
    fn join_sizes(a in graph(4), b in graph(4)) {
        for (j, sign) in [(all_positive_join(&a, &b), Sign::Positive), (all_negative_join(&a, &b), Sign::Negative)] {
            prop_assert_eq!(j.order(), a.order() + b.order());
            prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.order() * b.order());
            for v in 0..a.order() {
                for w in 0..b.order() {
                    prop_assert_eq!(j.sign(v, a.order() + w), Some(sign));
                }
            }
        }
    }

    #[test]
    fn negative_and_positive_joins_agree(a in graph(3), b in graph(3)) {
        prop_assert_eq!(
            chromatic_number(&all_negative_join(&a, &b)),
            chromatic_number(&all_positive_join(&a, &b))
        );
    }

    #[test]
    fn sign_respecting_bijection_keeps_properness(
        g in graph(6),
        perm in Just((1..=6).collect::<Vec<Color>>()).prop_shuffle(),
        flips in prop::collection::vec(any::<bool>(), 6),
    ) {
        let kappa = some_proper_coloring(&g);
        let f = |c: Color| {
            if c == 0 {
                return 0;
            }
            let i = c.unsigned_abs() as usize - 1;
            let s = if flips[i] { -c.signum() } else { c.signum() };
            s * perm[i]
        };
        let image = kappa.map_colors(f);
        prop_assert!(is_proper(&g, &image));
        prop_assert_eq!(image.used_count(), kappa.used_count());
    }

    #[test]
    fn remap_keeps_properness(
        g in graph(6),
        perm in Just((1..=8).collect::<Vec<Color>>()).prop_shuffle(),
        signs in prop::collection::vec(any::<bool>(), 8),
    ) {
        let kappa = some_proper_coloring(&g);
        // Remapping sends classes to distinct absolute values, so 0 cannot
        // be present on an edge afterwards either.
        let targets: Vec<Color> = perm.iter().zip(&signs).map(|(&p, &s)| if s { p } else { -p }).collect();
        let remapped = remap_into_palette(&kappa, &targets).unwrap();
        prop_assert!(is_proper(&g, &remapped));
        prop_assert_eq!(remapped.used_count(), kappa.used_count());
    }

    #[test]
    fn type3_on_every_pair_keeps_properness(g in graph(6), shift in 1..4i32) {
        let kappa = some_proper_coloring(&g);
        let image = kappa.image();
        let k = image.iter().map(|c| c.abs()).max().unwrap_or(0);
        let reps: Vec<Replacement> = (1..=k)
            .filter(|i| image.contains(i) && image.contains(&-i))
            .map(|i| Replacement::Type3 { from: i, to: i + k * shift })
            .collect();
        let out = apply_simultaneous(&kappa, &reps).unwrap();
        prop_assert!(is_proper(&g, &out));
    }

    #[test]
    fn stats_are_internally_consistent(g in graph(5)) {
        let s = graph_stats(&g);
        prop_assert!(s.max_def <= s.chi / 2);
        prop_assert_eq!(s.deficiency_set.len(), s.max_def);
        prop_assert!(!s.deficiency_set.contains(&0));
        let abs: BTreeSet<u32> = s.deficiency_set.iter().map(|c| c.unsigned_abs()).collect();
        prop_assert_eq!(abs.len(), s.max_def);
        prop_assert!(is_proper(&g, &s.min_coloration));
        prop_assert_eq!(s.min_coloration.used_count(), s.chi - s.max_def);
        prop_assert!(!s.exceptional || s.chi % 2 == 0);
    }

    #[test]
    fn prediction_bounds(
        c1 in 1usize..10, c2 in 1usize..10,
        d1 in 0usize..6, d2 in 0usize..6,
        e1 in any::<bool>(), e2 in any::<bool>(),
    ) {
        let m1 = d1.min(c1 / 2);
        let m2 = d2.min(c2 / 2);
        let a = SideStats::new(c1, m1, e1 && c1 % 2 == 0);
        let b = SideStats::new(c2, m2, e2 && c2 % 2 == 0);
        let p = predicted_chromatic(a, b).unwrap();
        prop_assert!(p.value as i64 >= p.lower_bound);
        let first = if m1 >= m2 { c1 } else { c2 };
        prop_assert!(p.value >= first);
        prop_assert_eq!(p, predicted_chromatic(b, a).unwrap());
        if p.exception_applied {
            prop_assert_eq!(p.value as i64, (p.lower_bound + 1).max(first as i64));
        }
    }
}

#[test]
fn switching_examples() {
    let pos = SignedGraph::complete(2, Sign::Positive);
    assert_eq!(
        pos.switch(&BTreeSet::from([0])).unwrap(),
        SignedGraph::complete(2, Sign::Negative)
    );
    let mut counts = BTreeMap::new();
    for e in SignedGraph::complete_with_negative_matching(8).edges() {
        *counts.entry(e.sign).or_insert(0) += 1;
    }
    assert_eq!(counts[&Sign::Negative], 4);
}
