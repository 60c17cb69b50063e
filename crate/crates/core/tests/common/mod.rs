#![allow(dead_code)]

use gpf_core::{EdgeRef, Multigraph, ParkingCandidate, RootedTree, TableOrder, Vertex};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random multigraph on `0..=n`: each ordered pair out of a non-root vertex
/// is present with probability `density`, with multiplicity `1..=max_mult`.
/// Edges out of the root appear with the same odds.
pub fn random_multigraph(rng: &mut impl Rng, n: usize, max_mult: usize, density: f64) -> Multigraph {
    let vc = n + 1;
    let mut rows = vec![vec![0; vc]; vc];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, m) in row.iter_mut().enumerate() {
            if i != j && rng.gen_bool(density) {
                *m = rng.gen_range(1..=max_mult);
            }
        }
    }
    Multigraph::from_multiplicities(&rows).unwrap()
}

/// Random symmetric simple graph on `0..=n`.
pub fn random_symmetric(rng: &mut impl Rng, n: usize, density: f64) -> Multigraph {
    let vc = n + 1;
    let mut rows = vec![vec![0; vc]; vc];
    let pairs: Vec<(usize, usize)> = (0..vc).flat_map(|i| (i + 1..vc).map(move |j| (i, j))).collect();
    for (i, j) in pairs {
        if rng.gen_bool(density) {
            rows[i][j] = 1;
            rows[j][i] = 1;
        }
    }
    Multigraph::from_multiplicities(&rows).unwrap()
}

/// Every simple symmetric graph on `0..=n`.
pub fn all_symmetric_graphs(n: usize) -> Vec<Multigraph> {
    let vc = n + 1;
    let pairs: Vec<(usize, usize)> = (0..vc).flat_map(|i| (i + 1..vc).map(move |j| (i, j))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let mut rows = vec![vec![0; vc]; vc];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    rows[i][j] = 1;
                    rows[j][i] = 1;
                }
            }
            Multigraph::from_multiplicities(&rows).unwrap()
        })
        .collect()
}

/// Every multigraph on `0..=n` with no edges out of the root and each
/// multiplicity in `0..=max_mult`.
pub fn all_rootless_multigraphs(n: usize, max_mult: usize) -> Vec<Multigraph> {
    let vc = n + 1;
    let slots: Vec<(usize, usize)> =
        (1..vc).flat_map(|i| (0..vc).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let base = max_mult + 1;
    let total = base.pow(slots.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut rows = vec![vec![0; vc]; vc];
            for &(i, j) in &slots {
                rows[i][j] = code % base;
                code /= base;
            }
            Multigraph::from_multiplicities(&rows).unwrap()
        })
        .collect()
}

/// Independent spanning-tree oracle: tries every choice of one out-edge per
/// non-root vertex and keeps the choices where every vertex reaches the
/// root.
pub fn brute_force_spanning_trees(g: &Multigraph) -> Vec<RootedTree> {
    let n = g.n();
    let choices: Vec<Vec<EdgeRef>> = (1..=n).map(|v| g.out_edges(v)).collect();
    if choices.iter().any(Vec::is_empty) {
        return if n == 0 { vec![RootedTree::singleton(1)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut idx = vec![0; n];
    loop {
        let pick: Vec<EdgeRef> = (0..n).map(|k| choices[k][idx[k]]).collect();
        let reaches = (1..=n).all(|start| {
            let mut v = start;
            for _ in 0..=n {
                if v == 0 {
                    return true;
                }
                v = pick[v - 1].head;
            }
            v == 0
        });
        if reaches {
            out.push(RootedTree::from_parent_edges(g, pick).unwrap());
        }
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return out;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Every vector with `0 <= b_j < d_j`.
pub fn box_candidates(g: &Multigraph) -> Vec<ParkingCandidate> {
    let bounds: Vec<usize> = (1..=g.n()).map(|v| g.out_degree(v)).collect();
    let mut out = vec![Vec::new()];
    for &b in &bounds {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| (0..b).map(move |x| [prefix.clone(), vec![x]].concat()))
            .collect();
    }
    out.into_iter().map(ParkingCandidate::new).collect()
}

pub fn pf(v: &[usize]) -> ParkingCandidate {
    ParkingCandidate::new(v.to_vec())
}

pub fn tree(g: &Multigraph, edges: &[(Vertex, Vertex, usize)]) -> RootedTree {
    RootedTree::from_parent_edges(g, edges.iter().map(|&(t, h, c)| EdgeRef::new(t, h, c))).unwrap()
}

/// A five-vertex graph on which `b = (0, 1, 0, 1)` under
/// breadth-first order grows the tree `(1,0) (3,1) (4,1) (2,3)`.
pub fn attach_graph() -> Multigraph {
    Multigraph::from_edges(5, [(1, 0), (2, 1), (2, 3), (3, 1), (4, 0), (4, 1), (0, 1), (1, 2), (1, 3), (1, 4), (3, 2)])
        .unwrap()
}

/// Graph and spanning tree of the seven-vertex order example.
pub fn seven_vertex() -> (Multigraph, RootedTree) {
    let mut edges = vec![(2, 0), (6, 0), (3, 2), (4, 2), (5, 3)];
    edges.extend([0, 2, 3, 4, 5, 6].map(|h| (1, h)));
    let g = Multigraph::from_edges(7, edges).unwrap();
    let t = tree(&g, &[(2, 0, 0), (6, 0, 0), (3, 2, 0), (4, 2, 0), (5, 3, 0), (1, 4, 0)]);
    (g, t)
}

/// Two doubled edges `3 -> 1` and `4 -> 2` hanging off `1 -> 0`, `2 -> 0`.
pub fn doubled_graph() -> Multigraph {
    Multigraph::from_edges(5, [(1, 0), (2, 0), (3, 1), (3, 1), (4, 2), (4, 2)]).unwrap()
}

/// On the spanning tree using copy `i` of `3 -> 1` and copy `j` of
/// `4 -> 2`: `3` before `4` when `i != j`, `4` before `3` when `i == j`.
pub fn doubled_table() -> TableOrder {
    let g = doubled_graph();
    let mut spanning = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let t = tree(&g, &[(1, 0, 0), (2, 0, 0), (3, 1, i), (4, 2, j)]);
            let order = if i != j { vec![0, 1, 2, 3, 4] } else { vec![0, 1, 2, 4, 3] };
            spanning.push((t, order));
        }
    }
    TableOrder::closed_under_restriction(spanning).unwrap()
}

/// Every permutation of `items`.
pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (k, &x) in items.iter().enumerate() {
        let rest: Vec<usize> = items.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &y)| y).collect();
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}
