mod common;

use gpf_core::enumeration::{determinant, reduced_laplacian};
use gpf_core::{count_spanning_trees, enumerate_spanning_trees, Multigraph};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;

#[test]
fn matrix_tree_matches_enumeration_on_random_graphs() {
    let mut rng = common::rng(101);
    for k in 0..120 {
        let n = 1 + k % 5;
        let g = common::random_multigraph(&mut rng, n, 3, 0.4);
        let mut trees = enumerate_spanning_trees(&g);
        trees.sort();
        assert_eq!(count_spanning_trees(&g), BigInt::from(trees.len()), "graph\n{g}");
        assert_eq!(trees, common::brute_force_spanning_trees(&g), "graph\n{g}");
    }
}

#[test]
fn cayley_counts() {
    for n in 0..=7usize {
        let want = BigInt::from(n + 1).pow(n.saturating_sub(1) as u32);
        assert_eq!(count_spanning_trees(&Multigraph::complete(n)), want, "K_{}", n + 1);
    }
    for n in 1..=5 {
        assert_eq!(enumerate_spanning_trees(&Multigraph::complete(n)).len(), (n + 1).pow(n as u32 - 1));
    }
}

/// `g` with non-root vertex `v` renamed to `perm[v - 1]`.
fn relabel(g: &Multigraph, perm: &[usize]) -> Multigraph {
    let name = |v: usize| if v == 0 { 0 } else { perm[v - 1] };
    let mut rows = vec![vec![0; g.vertex_count()]; g.vertex_count()];
    for i in g.vertices() {
        for j in g.vertices() {
            rows[name(i)][name(j)] = g.multiplicity(i, j);
        }
    }
    Multigraph::from_multiplicities(&rows).unwrap()
}

proptest! {
    #[test]
    fn relabeling_keeps_the_count(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = common::rng(seed);
        let g = common::random_multigraph(&mut rng, n, 3, 0.5);
        let mut perm: Vec<usize> = (1..=n).collect();
        perm.shuffle(&mut rng);
        let h = relabel(&g, &perm);
        prop_assert_eq!(determinant(reduced_laplacian(&h)), determinant(reduced_laplacian(&g)));
    }
}
