//! Cross-checks of the exact solvers and constructions against independent
//! brute force, on random small graphs.

use proptest::prelude::*;
use qkneser::exact::{elimination_decomposition, min_balanced_separator, mis_exact, treewidth_exact, SolveBudget};
use qkneser::graph::Graph;
use qkneser::treedec::{normalize_td, star_decomposition, validate_td, TreeDecomposition};

mod common;
use common::brute_treewidth;

/// `|V|` minus the smallest vertex cover, over all subsets.
fn brute_independence(n: usize, edges: &[(usize, usize)]) -> usize {
    (0u32..1 << n)
        .filter(|&mask| edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
        .map(|mask| n - mask.count_ones() as usize)
        .max()
        .unwrap()
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        (Just(n), proptest::collection::vec(any::<bool>(), len)).prop_map(move |(n, keep)| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e).collect();
            (n, edges)
        })
    })
}

fn greedy_independent(g: &Graph) -> Vec<usize> {
    let mut set = Vec::new();
    for v in 0..g.vertex_count() {
        if set.iter().all(|&u| !g.has_edge(u, v)) {
            set.push(v);
        }
    }
    set
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn treewidth_matches_all_orderings((n, edges) in graph_strategy(8)) {
        let g = Graph::from_edges(n, &edges);
        let r = treewidth_exact(&g, SolveBudget::TREEWIDTH).unwrap();
        prop_assert_eq!(r.treewidth, brute_treewidth(n, &edges));
        let v = validate_td(&g, &r.decomposition);
        prop_assert!(v.valid);
        prop_assert_eq!(v.width, Some(r.treewidth));
    }

    #[test]
    fn mis_matches_vertex_cover((n, edges) in graph_strategy(14)) {
        let g = Graph::from_edges(n, &edges);
        let r = mis_exact(&g, SolveBudget::MIS).unwrap();
        prop_assert!(g.is_independent(&r.witness));
        prop_assert_eq!(r.size, brute_independence(n, &edges));
    }

    #[test]
    fn separator_and_star_bracket_treewidth((n, edges) in graph_strategy(10)) {
        let g = Graph::from_edges(n, &edges);
        let tw = treewidth_exact(&g, SolveBudget::TREEWIDTH).unwrap().treewidth;
        let sep = min_balanced_separator(&g, SolveBudget::SEPARATOR).unwrap();
        prop_assert!(tw + 1 >= sep.size);
        let mis = mis_exact(&g, SolveBudget::MIS).unwrap();
        if mis.size < n {
            let td = star_decomposition(&g, &mis.witness).unwrap();
            prop_assert!(validate_td(&g, &td).valid);
            prop_assert!(tw <= td.width().unwrap());
        }
    }

    #[test]
    fn star_width_is_the_closed_form((n, edges) in graph_strategy(12)) {
        let g = Graph::from_edges(n, &edges);
        let a = greedy_independent(&g);
        prop_assume!(a.len() < n);
        let td = star_decomposition(&g, &a).unwrap();
        prop_assert!(validate_td(&g, &td).valid);
        let max_deg = a.iter().map(|&v| g.degree(v)).max().unwrap();
        prop_assert_eq!(td.width().unwrap(), (n - a.len() - 1).max(max_deg));
    }

    #[test]
    fn normalization_keeps_validity_and_width(
        (n, edges) in graph_strategy(12),
        seed in proptest::collection::vec(any::<u32>(), 40),
    ) {
        let g = Graph::from_edges(n, &edges);
        // a valid decomposition from a seeded ordering, then nested leaves and
        // subdivisions carrying intersections of adjacent bags
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            order.swap(i, seed[i] as usize % (i + 1));
        }
        let base = elimination_decomposition(&g, &order);
        let mut bags: Vec<Vec<usize>> = base.bags().to_vec();
        let mut tree: Vec<(usize, usize)> = base.edges();
        for (j, &s) in seed.iter().enumerate().take(10) {
            let x = s as usize % bags.len();
            if j % 2 == 0 {
                let sub: Vec<usize> = bags[x].iter().copied().filter(|v| (v + j) % 2 == 0).collect();
                bags.push(sub);
                tree.push((x, bags.len() - 1));
            } else if let Some(pos) = tree.iter().position(|&(a, b)| a == x || b == x) {
                let (a, b) = tree.remove(pos);
                let mid: Vec<usize> = bags[a].iter().copied().filter(|v| bags[b].contains(v)).collect();
                bags.push(mid);
                let m = bags.len() - 1;
                tree.push((a, m));
                tree.push((m, b));
            }
        }
        let td = TreeDecomposition::new(bags, &tree).unwrap();
        prop_assert!(validate_td(&g, &td).valid);
        let norm = normalize_td(&td);
        prop_assert!(validate_td(&g, &norm).valid);
        prop_assert_eq!(norm.width().unwrap(), td.width().unwrap());
        for (a, b) in norm.edges() {
            let (x, y) = (norm.bag(a), norm.bag(b));
            prop_assert!(!x.iter().all(|v| y.contains(v)));
            prop_assert!(!y.iter().all(|v| x.contains(v)));
        }
    }
}

#[test]
fn brute_force_agrees_on_named_graphs() {
    assert_eq!(brute_treewidth(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]), 2);
    let k4: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
    assert_eq!(brute_treewidth(4, &k4), 3);
    assert_eq!(brute_independence(4, &k4), 1);
}
