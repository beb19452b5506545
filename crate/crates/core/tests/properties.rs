mod common;

use common::*;
use fairvd::faireval::{shape_of, ShapeParams};
use fairvd::fairvc::{solve_bnb, solve_brute, solve_dp, Decision, FairTables};
use fairvd::kernel::{kernelize, twin_threshold};
use fairvd::modec::decompose;
use fairvd::params::{is_twin_edge, min_twin_cover};
use fairvd::{Formula, Graph, LabeledGraph, VertexSet};
use proptest::prelude::*;
use std::collections::HashMap;
use std::time::Duration;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, mask)| {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let edges: Vec<_> = pairs.enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, e)| e).collect();
        Graph::new(n, edges).unwrap()
    })
}

fn subset(g: &Graph, mask: u64) -> VertexSet {
    VertexSet::from_mask(mask & ((1u64 << g.n()) - 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fair_cost_is_monotone(g in graph(10), a in any::<u64>(), b in any::<u64>()) {
        let small = subset(&g, a & b);
        let big = subset(&g, a);
        prop_assert!(g.fair_cost(&small).unwrap() <= g.fair_cost(&big).unwrap());
    }

    #[test]
    fn decomposition_round_trips(g in graph(10)) {
        let tree = decompose(&g).unwrap();
        prop_assert_eq!(tree.expand(), g.clone());
        prop_assert_eq!(tree.binarize().expand(), g);
    }

    #[test]
    fn dp_equals_brute(g in graph(9)) {
        let dp = solve_dp(&g).unwrap();
        prop_assert_eq!(dp.cost, solve_brute(&g, 20).unwrap().cost);
        prop_assert!(g.is_vertex_cover(&dp.cover).unwrap());
        prop_assert_eq!(g.fair_cost(&dp.cover).unwrap(), dp.cost);
    }

    #[test]
    fn tables_never_increase(g in graph(9)) {
        let t = FairTables::build(decompose(&g).unwrap().binarize()).unwrap();
        for table in &t.tables {
            prop_assert!(table.windows(2).all(|w| w[1] <= w[0]));
        }
        let best = t.optimum();
        let cover = t.reconstruct(best).unwrap();
        prop_assert!(g.fair_cost(&cover).unwrap() <= best);
    }

    #[test]
    fn bnb_decides_like_dp(g in graph(9), slack in 0usize..3) {
        let opt = solve_dp(&g).unwrap().cost;
        for k in opt.saturating_sub(slack)..=opt + slack {
            match solve_bnb(&g, k, Duration::from_secs(10)) {
                Decision::Yes(w) => {
                    prop_assert!(k >= opt);
                    prop_assert!(g.is_vertex_cover(&w).unwrap() && g.fair_cost(&w).unwrap() <= k);
                }
                Decision::No => prop_assert!(k < opt),
                Decision::Unknown => prop_assert!(false, "timeout"),
            }
        }
    }

    #[test]
    fn twin_cover_leaves_twin_edges(g in graph(10)) {
        let cover = min_twin_cover(&g, g.n()).unwrap();
        for &(u, v) in g.edges() {
            if !cover.cover.contains(u) && !cover.cover.contains(v) {
                prop_assert!(is_twin_edge(&g, u, v).unwrap());
            }
        }
    }

    #[test]
    fn kernel_is_idempotent(seed in any::<u64>(), q_s in 0usize..2, q_v in 1usize..3) {
        let g = twin_rich(&mut rng(seed), 14);
        let r = twin_threshold(q_s, q_v);
        let once = kernelize(&LabeledGraph::unlabeled(g), q_s, q_v, r).unwrap();
        let twice = kernelize(&once.reduced, q_s, q_v, r).unwrap();
        prop_assert!(twice.removed.is_empty());
    }

    #[test]
    fn kernel_keeps_random_sentences(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = twin_rich(&mut r, 12);
        let f = random_formula(&mut r, 4, 1, 2, &[]);
        prop_assert_eq!(fairvd::kernel::model_check(&g, &f).unwrap().0, truth(&g, &f));
    }

    #[test]
    fn graph_text_round_trips(g in graph(10)) {
        prop_assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn formula_text_round_trips(seed in any::<u64>()) {
        let f = random_formula(&mut rng(seed), 5, 1, 2, &["X"]);
        let again = Formula::parse(&f.to_file_text()).unwrap();
        prop_assert_eq!(again.free_vars(), f.free_vars());
        prop_assert_eq!(again.root(), f.root());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn equal_shape_equal_truth(seed in any::<u64>(), which in 0usize..FORMULA_POOL.len()) {
        let g = twin_rich(&mut rng(seed), 8);
        let f = x_formula(FORMULA_POOL[which]);
        let cover = min_twin_cover(&g, g.n()).unwrap();
        let (q_s, q_v) = f.count_quantifiers();
        let p = ShapeParams::for_quantifiers(q_s, q_v);
        let mut seen = HashMap::new();
        for mask in 0u64..1 << g.n() {
            let w = VertexSet::from_mask(mask);
            let value = holds(&g, &f, &w);
            prop_assert_eq!(*seen.entry(shape_of(&cover, &w, &p)).or_insert(value), value);
        }
    }
}
