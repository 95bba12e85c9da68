use proptest::prelude::*;
use vcover::bounds::greedy_approx;
use vcover::node::SearchNode;
use vcover::oracle::brute_force_mvc;
use vcover::reduce::{reduce_exact, reduce_fixpoint};
use vcover::{parse_dimacs, parse_edge_list, BaseGraph, SolveMode, Vertex};

fn graph(max_n: usize) -> impl Strategy<Value = BaseGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let max = n as Vertex;
        proptest::collection::vec((0..max, 0..max), 0..(3 * n)).prop_map(move |e| BaseGraph::from_edges(n, e))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn edge_list_round_trip(g in graph(20)) {
        // pin the id range so the parser sees vertex 0 and the last vertex
        let n = g.num_vertices();
        prop_assume!(n >= 2);
        let g = BaseGraph::from_edges(n, g.edges().chain([(0, n as Vertex - 1)]));
        let text = g.to_edge_list();
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(back.num_vertices(), n);
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        prop_assert_eq!(back.to_edge_list(), text);
    }

    #[test]
    fn dimacs_round_trip(g in graph(20)) {
        let text = g.to_dimacs();
        let back = parse_dimacs(&text).unwrap();
        prop_assert_eq!(back.num_vertices(), g.num_vertices());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        prop_assert_eq!(back.to_dimacs(), text);
    }

    #[test]
    fn complement_is_an_involution(g in graph(20)) {
        let n = g.num_vertices();
        let c = g.complement();
        prop_assert!(c.validate().is_ok());
        prop_assert_eq!(c.num_edges() + g.num_edges(), n * (n - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn node_counters_survive_removals(g in graph(16), picks in proptest::collection::vec((any::<bool>(), any::<u16>()), 0..12)) {
        let mut node = SearchNode::root(&g);
        let n = g.num_vertices();
        for (neighbors, pick) in picks {
            let v = (pick as usize % n) as Vertex;
            if !node.is_alive(v) {
                continue;
            }
            if neighbors {
                node.remove_neighbors_into_cover(&g, v);
                prop_assert_eq!(node.degree(v), Some(0));
            } else {
                node.remove_vertex_into_cover(&g, v);
            }
            prop_assert!(node.validate(&g).is_ok(), "{:?}", node.validate(&g));
            prop_assert_eq!(node.cover().len(), node.cover_count());
            prop_assert_eq!(node.residual_graph(&g).num_edges(), node.alive_edge_count());
        }
    }

    #[test]
    fn reductions_are_deterministic(g in graph(16), best in 0usize..20) {
        let mut a = SearchNode::root(&g);
        let mut b = a.clone();
        reduce_fixpoint(&mut a, &g, SolveMode::Mvc, &best);
        reduce_fixpoint(&mut b, &g, SolveMode::Mvc, &best);
        prop_assert_eq!(&a, &b);
        prop_assert!(a.validate(&g).is_ok());
        let mut c = a.clone();
        reduce_fixpoint(&mut c, &g, SolveMode::Mvc, &best);
        prop_assert_eq!(&a, &c, "a fixpoint is stable");
    }

    #[test]
    fn exact_reductions_preserve_cover_size(g in graph(14)) {
        let mut node = SearchNode::root(&g);
        reduce_exact(&mut node, &g);
        let residual = node.residual_graph(&g);
        prop_assert_eq!(brute_force_mvc(&g).unwrap(), node.cover_count() + brute_force_mvc(&residual).unwrap());
    }

    #[test]
    fn greedy_is_a_cover(g in graph(20)) {
        let greedy = greedy_approx(&g);
        prop_assert_eq!(greedy.size, greedy.cover.len());
        prop_assert!(g.is_vertex_cover(&greedy.cover));
        if g.num_vertices() <= 16 {
            prop_assert!(greedy.size >= brute_force_mvc(&g).unwrap());
        }
    }
}
