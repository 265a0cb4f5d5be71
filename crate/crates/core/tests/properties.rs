mod common;

use clique_isolation::clique::{enumerate_k_cliques, find_k_clique, has_k_clique, CliqueQuery};
use clique_isolation::edgelist::{parse_edge_list, write_edge_list};
use clique_isolation::generators::{build_extremal, enumerate_connected, gen_random_connected};
use clique_isolation::isolation::{greedy_upper_bound, iota_oracle, iota_solve, verify_isolating};
use clique_isolation::{theorem1_set, Graph, VertexSet};
use common::*;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn dense_graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(0.6), pairs)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn subset_strategy(g: &Graph) -> impl Strategy<Value = VertexSet> {
    let n = g.n();
    proptest::collection::vec(any::<bool>(), n).prop_map(move |bits| {
        VertexSet::from_vertices(n, (0..n).filter(|&i| bits[i])).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn clique_engine_matches_naive(g in dense_graph_strategy(8), k in 1usize..6) {
        let m = matrix(&g);
        let expected = naive_cliques(&m, k);
        let got: Vec<Vec<usize>> = enumerate_k_cliques(&g, &CliqueQuery::new(k)).unwrap()
            .iter().map(VertexSet::to_vec).collect();
        prop_assert_eq!(&got, &expected);
        prop_assert_eq!(has_k_clique(&g, k).unwrap(), !expected.is_empty());
        prop_assert_eq!(find_k_clique(&g, k).unwrap().map(|c| c.to_vec()), expected.first().cloned());
        if has_k_clique(&g, k).unwrap() {
            for j in 1..k {
                prop_assert!(has_k_clique(&g, j).unwrap());
            }
        }
    }

    #[test]
    fn limited_enumeration_is_a_prefix(g in dense_graph_strategy(8), k in 1usize..5, limit in 0usize..6) {
        let all = enumerate_k_cliques(&g, &CliqueQuery::new(k)).unwrap();
        let some = enumerate_k_cliques(&g, &CliqueQuery::with_limit(k, limit)).unwrap();
        prop_assert_eq!(&some[..], &all[..limit.min(all.len())]);
    }

    #[test]
    fn delete_and_neighborhoods((g, s) in graph_strategy(9).prop_flat_map(|g| { let s = subset_strategy(&g); (Just(g), s) })) {
        let sub = g.delete(&s).unwrap();
        prop_assert_eq!(sub.labels.clone(), s.complement().to_vec());
        for (a, b) in sub.graph.edges() {
            prop_assert!(g.has_edge(sub.labels[a], sub.labels[b]));
        }
        prop_assert_eq!(sub.graph.edge_count(), g.edges().filter(|&(a, b)| !s.contains(a) && !s.contains(b)).count());

        let whole = g.closed_neighborhood(&s).unwrap();
        let mut union = VertexSet::new(g.n());
        for v in &s {
            union.union_with(&g.closed_neighborhood(&VertexSet::singleton(g.n(), v)).unwrap());
        }
        prop_assert_eq!(&whole, &union);
        prop_assert!(s.is_subset(&whole));
        if let Some(v) = s.first() {
            let mut smaller = s.clone();
            smaller.remove(v);
            prop_assert!(g.closed_neighborhood(&smaller).unwrap().is_subset(&whole));
        }
    }

    #[test]
    fn components_partition(g in graph_strategy(10)) {
        let comps = g.components();
        let mut seen = VertexSet::new(g.n());
        for c in &comps {
            prop_assert!(!c.intersects(&seen));
            seen.union_with(c);
            let sub = g.induced(c).unwrap();
            prop_assert!(sub.graph.is_connected());
            for v in c {
                prop_assert!(g.neighbors(v).is_subset(c));
            }
        }
        prop_assert_eq!(seen.len(), g.n());
        prop_assert_eq!(g.is_connected(), naive_connected(g.n(), &g.edges().collect::<Vec<_>>()));
    }

    #[test]
    fn superset_closure((g, d, extra) in graph_strategy(8).prop_flat_map(|g| {
        let a = subset_strategy(&g);
        let b = subset_strategy(&g);
        (Just(g), a, b)
    }), k in 1usize..4) {
        let cert = verify_isolating(&g, k, &d).unwrap();
        prop_assert_eq!(cert.valid, cert.witness.is_none());
        prop_assert_eq!(cert.valid, naive_isolates(&matrix(&g), k, d.iter().fold(0u32, |acc, v| acc | 1 << v)));
        if let Some(w) = &cert.witness {
            prop_assert_eq!(w.len(), k);
            prop_assert!(g.induced(w).unwrap().graph.is_complete());
            prop_assert!(!w.intersects(&g.closed_neighborhood(&d).unwrap()));
        }
        if cert.valid {
            prop_assert!(verify_isolating(&g, k, &d.union(&extra)).unwrap().valid);
        }
    }

    #[test]
    fn solver_agrees_with_oracles(g in graph_strategy(8), k in 1usize..4) {
        let m = matrix(&g);
        let expected = naive_iota(&m, k);
        let solved = iota_solve(&g, k).unwrap();
        let oracle = iota_oracle(&g, k).unwrap();
        prop_assert_eq!(solved.iota, expected);
        prop_assert_eq!(oracle.iota, expected);
        prop_assert_eq!(solved.optimal_set.len(), solved.iota);
        prop_assert!(verify_isolating(&g, k, &solved.optimal_set).unwrap().valid);
        prop_assert!(verify_isolating(&g, k, &oracle.optimal_set).unwrap().valid);
        prop_assert_eq!(solved.iota == 0, !has_k_clique(&g, k).unwrap());
        let greedy = greedy_upper_bound(&g, k).unwrap();
        prop_assert!(verify_isolating(&g, k, &greedy).unwrap().valid);
        prop_assert!(greedy.len() >= solved.iota);
    }

    #[test]
    fn solver_is_monotone_in_k(g in dense_graph_strategy(10), k in 2usize..5) {
        prop_assert!(iota_solve(&g, k).unwrap().iota <= iota_solve(&g, k - 1).unwrap().iota);
    }

    #[test]
    fn domination_at_k1(g in graph_strategy(8)) {
        prop_assert_eq!(iota_solve(&g, 1).unwrap().iota, naive_domination(&matrix(&g)));
    }

    #[test]
    fn one_vertex_then_the_rest(g in dense_graph_strategy(9), k in 1usize..4) {
        let iota = iota_solve(&g, k).unwrap().iota;
        for v in 0..g.n() {
            let rest = g.delete(&g.closed_neighbors(v)).unwrap();
            prop_assert!(iota <= 1 + iota_solve(&rest.graph, k).unwrap().iota);
        }
    }

    #[test]
    fn additive_over_components(a in graph_strategy(6), b in graph_strategy(6), c in graph_strategy(5), k in 1usize..4) {
        let u = a.disjoint_union(&b).disjoint_union(&c);
        let sum: usize = [&a, &b, &c].iter().map(|h| iota_solve(h, k).unwrap().iota).sum();
        prop_assert_eq!(iota_solve(&u, k).unwrap().iota, sum);
    }

    #[test]
    fn construction_is_sound_on_random_connected(n in 1usize..16, p in 0.05f64..0.95, seed in any::<u64>(), k in 1usize..5) {
        let g = gen_random_connected(n, p, seed).unwrap();
        prop_assert!(g.is_connected());
        if g.classify_exception(k).unwrap() == clique_isolation::ExceptionKind::None {
            let r = theorem1_set(&g, k).unwrap();
            prop_assert!(r.set.len() <= n / (k + 1));
            prop_assert!(verify_isolating(&g, k, &r.set).unwrap().valid);
            prop_assert!(iota_solve(&g, k).unwrap().iota <= r.set.len());
        }
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy(12)) {
        prop_assume!(g.n() > 0);
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_edge_list(&back), text);
    }
}

#[test]
fn connected_counts_match_independent_enumeration() {
    let known = [1u64, 1, 4, 38, 728, 26704];
    for n in 1..=6 {
        let independent = count_connected_labeled(n);
        assert_eq!(independent, known[n - 1], "brute-force count for n={n}");
        assert_eq!(enumerate_connected(n).unwrap().count() as u64, independent, "n={n}");
    }
}

#[test]
fn enumeration_is_duplicate_free_and_connected() {
    let graphs: Vec<Graph> = enumerate_connected(5).unwrap().collect();
    let unique: std::collections::HashSet<&Graph> = graphs.iter().collect();
    assert_eq!(unique.len(), graphs.len());
    assert!(graphs.iter().all(Graph::is_connected));
}

#[test]
fn extremal_examples_via_oracles() {
    // B(7,2) has a triangle: path vertex 0 with its block {3,4}
    let b72 = build_extremal(7, 2).unwrap();
    assert!(naive_cliques(&matrix(&b72), 3).contains(&vec![0, 3, 4]));
    assert_eq!(b72.edge_count(), 8);
    // B(5,4) is K_5: C(5,4) = 5 four-cliques
    assert_eq!(naive_cliques(&matrix(&build_extremal(5, 4).unwrap()), 4).len(), 5);
    // B(3,2) is K_3 and iota = 1
    assert_eq!(naive_iota(&matrix(&build_extremal(3, 2).unwrap()), 2), 1);
    // B(6,2): greedy lands on the optimum 2
    let b62 = build_extremal(6, 2).unwrap();
    assert_eq!(naive_iota(&matrix(&b62), 2), 2);
    assert!(greedy_upper_bound(&b62, 2).unwrap().len() <= 2);
    // B(7,2) with {0,1}
    let d = VertexSet::from_vertices(7, [0, 1]).unwrap();
    assert!(naive_isolates(&matrix(&b72), 2, 0b11));
    assert!(verify_isolating(&b72, 2, &d).unwrap().valid);
}

#[test]
fn small_examples_via_oracles() {
    // triangle plus pendant: only 3-clique is {0,1,2}
    let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
    assert_eq!(naive_cliques(&matrix(&g), 3), vec![vec![0, 1, 2]]);
    // P_4 domination number
    let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    assert_eq!(naive_domination(&matrix(&p4)), 2);
    // C_5 minus vertex 0 is P_4 on 1..4
    let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    let sub = c5.delete(&VertexSet::singleton(5, 0)).unwrap();
    assert_eq!(sub.graph, p4);
}
