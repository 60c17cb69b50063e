//! Exhaustive generators for rooted spanning trees and subtrees, and the
//! exact Matrix-Tree count.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::multigraph::{EdgeRef, Multigraph, Vertex, ROOT};
use crate::treeorder::RootedTree;

/// All spanning trees of `g` rooted at `0`, each once. Trees that differ only
/// in a parallel copy are distinct.
///
/// Trees come out in lexicographic order of their parent-edge choices
/// (vertex 1's edge varies slowest).
pub fn enumerate_spanning_trees(g: &Multigraph) -> Vec<RootedTree> {
    trees_on(g, &vec![true; g.vertex_count()])
}

/// All subtrees rooted at `0` with at most `max_size` vertices, including the
/// singleton root.
pub fn enumerate_subtrees(g: &Multigraph, max_size: usize) -> impl Iterator<Item = RootedTree> + '_ {
    let n = g.n();
    (0u64..1 << n).filter(move |mask| (mask.count_ones() as usize) < max_size).flat_map(move |mask| {
        let members: Vec<bool> = (0..=n).map(|v| v == ROOT || mask & (1 << (v - 1)) != 0).collect();
        trees_on(g, &members)
    })
}

/// Spanning trees of the member set `members` (which must include the root),
/// using only edges between members.
pub(crate) fn trees_on(g: &Multigraph, members: &[bool]) -> Vec<RootedTree> {
    let order: Vec<Vertex> = (1..g.vertex_count()).filter(|&v| members[v]).collect();
    let choices: Vec<Vec<EdgeRef>> =
        order.iter().map(|&v| g.out_edges(v).into_iter().filter(|e| members[e.head]).collect()).collect();
    let mut out = Vec::new();
    if choices.iter().any(Vec::is_empty) {
        return out;
    }
    let mut parent: Vec<Option<EdgeRef>> = vec![None; g.vertex_count()];
    backtrack(g, &order, &choices, 0, &mut parent, &mut out);
    out
}

fn backtrack(
    g: &Multigraph,
    order: &[Vertex],
    choices: &[Vec<EdgeRef>],
    depth: usize,
    parent: &mut Vec<Option<EdgeRef>>,
    out: &mut Vec<RootedTree>,
) {
    if depth == order.len() {
        let tree = RootedTree::from_parent_edges(g, parent.iter().flatten().copied())
            .expect("backtracking only produces acyclic parent maps");
        out.push(tree);
        return;
    }
    let v = order[depth];
    for &e in &choices[depth] {
        if closes_cycle(parent, v, e.head) {
            continue;
        }
        parent[v] = Some(e);
        backtrack(g, order, choices, depth + 1, parent, out);
        parent[v] = None;
    }
}

/// Whether hanging `v` from `head` closes a cycle among assigned vertices.
fn closes_cycle(parent: &[Option<EdgeRef>], v: Vertex, head: Vertex) -> bool {
    let mut cur = head;
    while cur != ROOT {
        if cur == v {
            return true;
        }
        match parent[cur] {
            Some(e) => cur = e.head,
            None => return false,
        }
    }
    false
}

/// The reduced out-degree Laplacian: rows and columns for vertices `1..=n`,
/// `L[j][j] = d_j` (edges to the root included) and `L[j][i] = -m(j,i)`.
pub fn reduced_laplacian(g: &Multigraph) -> Vec<Vec<BigInt>> {
    let n = g.n();
    (1..=n)
        .map(|j| {
            (1..=n)
                .map(|i| if i == j { BigInt::from(g.out_degree(j)) } else { -BigInt::from(g.multiplicity(j, i)) })
                .collect()
        })
        .collect()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let size = m.len();
    if size == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // Exact by Sylvester's identity.
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Number of spanning trees rooted at `0`, by the Matrix-Tree theorem.
pub fn count_spanning_trees(g: &Multigraph) -> BigInt {
    determinant(reduced_laplacian(g))
}
