//! Tree-order policies.
//!
//! A policy assigns every subtree `t` rooted at `0` a total order on its
//! vertices. It is *proper* when every child comes after its parent and the
//! order of a subtree is the restriction of the order of any tree containing
//! it. Every map in [`crate::bijection`] is parameterised by such a policy.

mod path;
mod table;
mod tree;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

pub use path::PathComparator;
pub use table::TableOrder;
pub use tree::{RootedTree, TreePath};

use crate::enumeration::{enumerate_spanning_trees, enumerate_subtrees};
use crate::error::{Error, Result};
use crate::multigraph::{EdgeRef, Multigraph, Vertex, ROOT};

/// Strategy producing a total order on the vertices of each subtree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderPolicy {
    /// By height, then by label.
    BreadthFirst,
    /// Preorder, children visited in increasing label order.
    DepthFirst,
    /// Preorder, children visited in decreasing label order.
    DepthFirstRtl,
    /// Repeatedly add the smallest vertex whose tree parent is already added.
    VertexAdding,
    /// Sort vertices by their root paths under a comparator.
    Path(PathComparator),
    /// Explicit per-tree orders.
    Table(TableOrder),
}

impl OrderPolicy {
    /// Every policy that needs no extra data.
    pub fn builtins() -> Vec<OrderPolicy> {
        let mut all = vec![
            OrderPolicy::BreadthFirst,
            OrderPolicy::DepthFirst,
            OrderPolicy::DepthFirstRtl,
            OrderPolicy::VertexAdding,
        ];
        all.extend(PathComparator::ALL.into_iter().map(OrderPolicy::Path));
        all
    }

    pub fn name(&self) -> String {
        match self {
            OrderPolicy::BreadthFirst => "bf".into(),
            OrderPolicy::DepthFirst => "df".into(),
            OrderPolicy::DepthFirstRtl => "df-rtl".into(),
            OrderPolicy::VertexAdding => "va".into(),
            OrderPolicy::Path(c) => format!("path:{c}"),
            OrderPolicy::Table(_) => "table".into(),
        }
    }

    /// The vertices of `t`, ascending in this policy's order for `t`.
    pub fn compute_order(&self, g: &Multigraph, t: &RootedTree) -> Result<Vec<Vertex>> {
        match self {
            OrderPolicy::BreadthFirst => {
                let mut members = t.members();
                members.sort_by_key(|&v| (t.height(v), v));
                Ok(members)
            }
            OrderPolicy::DepthFirst => Ok(preorder(t, false)),
            OrderPolicy::DepthFirstRtl => Ok(preorder(t, true)),
            OrderPolicy::VertexAdding => Ok(vertex_adding(t)),
            OrderPolicy::Path(c) => path_order(g, t, *c),
            OrderPolicy::Table(table) => {
                table.get(t).map(<[Vertex]>::to_vec).ok_or_else(|| Error::MissingTableEntry(t.compact()))
            }
        }
    }
}

impl fmt::Display for OrderPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for OrderPolicy {
    type Err = Error;

    /// Parses every built-in name; tables have to be loaded separately.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bf" => Ok(OrderPolicy::BreadthFirst),
            "df" => Ok(OrderPolicy::DepthFirst),
            "df-rtl" | "df_rtl" => Ok(OrderPolicy::DepthFirstRtl),
            "va" => Ok(OrderPolicy::VertexAdding),
            _ => match s.strip_prefix("path:") {
                Some(c) => Ok(OrderPolicy::Path(c.parse()?)),
                None => Err(Error::PolicyDefect(format!("unknown policy `{s}`"))),
            },
        }
    }
}

fn children_lists(t: &RootedTree) -> Vec<Vec<Vertex>> {
    let mut children = vec![Vec::new(); t.vertex_count()];
    for e in t.edges() {
        children[e.head].push(e.tail);
    }
    children
}

fn preorder(t: &RootedTree, right_to_left: bool) -> Vec<Vertex> {
    let children = children_lists(t);
    let mut out = Vec::with_capacity(t.size());
    let mut stack = vec![ROOT];
    while let Some(v) = stack.pop() {
        out.push(v);
        // The stack pops the last pushed child first.
        if right_to_left {
            stack.extend(children[v].iter().copied());
        } else {
            stack.extend(children[v].iter().rev().copied());
        }
    }
    out
}

fn vertex_adding(t: &RootedTree) -> Vec<Vertex> {
    let mut added = vec![false; t.vertex_count()];
    added[ROOT] = true;
    let mut out = vec![ROOT];
    let members = t.members();
    while out.len() < members.len() {
        let next = members
            .iter()
            .copied()
            .find(|&v| !added[v] && t.parent(v).is_some_and(|p| added[p]))
            .expect("some unadded member always hangs from an added one");
        added[next] = true;
        out.push(next);
    }
    out
}

fn path_order(g: &Multigraph, t: &RootedTree, c: PathComparator) -> Result<Vec<Vertex>> {
    let members = t.members();
    let paths: Vec<TreePath> = members.iter().map(|&v| t.tree_path(v)).collect::<Result<_>>()?;
    let mut rank = vec![0usize; members.len()];
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let ord = c.compare(g, &paths[i], &paths[j]);
            let back = c.compare(g, &paths[j], &paths[i]);
            match (ord, back) {
                (Some(Ordering::Less), Some(Ordering::Greater)) => rank[j] += 1,
                (Some(Ordering::Greater), Some(Ordering::Less)) => rank[i] += 1,
                _ => {
                    return Err(Error::PolicyDefect(format!(
                        "comparator {c} does not strictly order tree paths {} and {}",
                        paths[i], paths[j]
                    )))
                }
            }
        }
    }
    let mut out = vec![None; members.len()];
    for (idx, &r) in rank.iter().enumerate() {
        if out[r].replace(members[idx]).is_some() {
            return Err(Error::PolicyDefect(format!("comparator {c} is not transitive on tree [{}]", t.compact())));
        }
    }
    Ok(out.into_iter().flatten().collect())
}

/// Why a policy failed to be a proper set of tree orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProperSetViolation {
    Policy {
        tree: RootedTree,
        error: Error,
    },
    NotAPermutation {
        tree: RootedTree,
        order: Vec<Vertex>,
    },
    /// `edge` is a tree edge whose tail is not above its head.
    ChildBeforeParent {
        tree: RootedTree,
        edge: EdgeRef,
    },
    /// Removing `leaf` from `tree` changes the relative order of the rest.
    Inconsistent {
        tree: RootedTree,
        leaf: Vertex,
        restricted: Vec<Vertex>,
        sub_order: Vec<Vertex>,
    },
}

impl fmt::Display for ProperSetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProperSetViolation::Policy { tree, error } => write!(f, "tree [{}]: {error}", tree.compact()),
            ProperSetViolation::NotAPermutation { tree, order } => {
                write!(f, "tree [{}]: order {order:?} is not a permutation of its vertices", tree.compact())
            }
            ProperSetViolation::ChildBeforeParent { tree, edge } => {
                write!(f, "tree [{}]: edge {edge} has its tail ordered before its head", tree.compact())
            }
            ProperSetViolation::Inconsistent { tree, leaf, restricted, sub_order } => write!(
                f,
                "tree [{}]: removing leaf {leaf} gives order {sub_order:?}, restriction is {restricted:?}",
                tree.compact()
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperSetReport {
    pub subtrees_checked: usize,
    pub violation: Option<ProperSetViolation>,
}

impl ProperSetReport {
    pub fn is_proper(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks that `p` orders every subtree of `g` with at most
/// `max_subtree_size` vertices as a proper set: children above parents, and
/// each single-leaf removal ordered by restriction. Stops at the first
/// violation.
///
/// Leaf removals suffice because every subtree of `T` is reached from `T` by
/// removing leaves one at a time.
pub fn validate_proper_set(g: &Multigraph, p: &OrderPolicy, max_subtree_size: usize) -> ProperSetReport {
    let mut checked = 0;
    for tree in enumerate_subtrees(g, max_subtree_size) {
        checked += 1;
        if let Err(violation) = check_tree(g, p, &tree) {
            return ProperSetReport { subtrees_checked: checked, violation: Some(violation) };
        }
    }
    ProperSetReport { subtrees_checked: checked, violation: None }
}

fn check_tree(g: &Multigraph, p: &OrderPolicy, tree: &RootedTree) -> Result<(), ProperSetViolation> {
    let policy_err = |t: &RootedTree, error| ProperSetViolation::Policy { tree: t.clone(), error };
    let order = p.compute_order(g, tree).map_err(|e| policy_err(tree, e))?;
    let mut sorted = order.clone();
    sorted.sort_unstable();
    if sorted != tree.members() {
        return Err(ProperSetViolation::NotAPermutation { tree: tree.clone(), order });
    }
    let pos = positions(&order, tree.vertex_count());
    for edge in tree.edges() {
        if pos[edge.head] >= pos[edge.tail] {
            return Err(ProperSetViolation::ChildBeforeParent { tree: tree.clone(), edge });
        }
    }
    for leaf in tree.leaves() {
        let sub = tree.without_leaf(leaf);
        let sub_order = p.compute_order(g, &sub).map_err(|e| policy_err(&sub, e))?;
        let restricted: Vec<Vertex> = order.iter().copied().filter(|&v| v != leaf).collect();
        if sub_order != restricted {
            return Err(ProperSetViolation::Inconsistent { tree: tree.clone(), leaf, restricted, sub_order });
        }
    }
    Ok(())
}

/// `pos[v]` = index of `v` in `order`; `usize::MAX` for absent vertices.
pub(crate) fn positions(order: &[Vertex], vertex_count: usize) -> Vec<usize> {
    let mut pos = vec![usize::MAX; vertex_count];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Outcome of [`check_inducibility`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inducibility {
    /// The path constraints are acyclic. This is necessary, not sufficient,
    /// for the policy to come from a path order.
    NoContradiction { paths: usize, constraints: usize },
    /// A directed cycle `c[0] < c[1] < ... < c[k] < c[0]` of forced path
    /// relations, rotated to start at its smallest path.
    Contradiction(Vec<TreePath>),
}

impl fmt::Display for Inducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inducibility::NoContradiction { paths, constraints } => {
                write!(f, "no contradiction ({paths} paths, {constraints} constraints)")
            }
            Inducibility::Contradiction(cycle) => {
                write!(f, "contradiction:")?;
                for p in cycle.iter().chain(cycle.first()) {
                    write!(f, " {p}")?;
                }
                Ok(())
            }
        }
    }
}

/// Looks for a cycle among the path relations `A_T(i) < A_T(j)` forced by
/// `i < j` in the policy's order of every spanning tree `T`.
pub fn check_inducibility(g: &Multigraph, p: &OrderPolicy) -> Result<Inducibility> {
    let mut graph: BTreeMap<TreePath, BTreeSet<TreePath>> = BTreeMap::new();
    for tree in enumerate_spanning_trees(g) {
        let order = p.compute_order(g, &tree)?;
        let paths: Vec<TreePath> = order.iter().map(|&v| tree.tree_path(v)).collect::<Result<_>>()?;
        for (i, lo) in paths.iter().enumerate() {
            for hi in &paths[i + 1..] {
                graph.entry(lo.clone()).or_default().insert(hi.clone());
                graph.entry(hi.clone()).or_default();
            }
        }
    }
    let constraints = graph.values().map(BTreeSet::len).sum();
    match find_cycle(&graph) {
        Some(cycle) => Ok(Inducibility::Contradiction(cycle)),
        None => Ok(Inducibility::NoContradiction { paths: graph.len(), constraints }),
    }
}

fn find_cycle<N: Ord + Clone>(graph: &BTreeMap<N, BTreeSet<N>>) -> Option<Vec<N>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let nodes: Vec<&N> = graph.keys().collect();
    let index: BTreeMap<&N, usize> = nodes.iter().enumerate().map(|(i, n)| (*n, i)).collect();
    let succ: Vec<Vec<usize>> = nodes.iter().map(|n| graph[*n].iter().map(|m| index[m]).collect()).collect();
    let mut mark = vec![Mark::New; nodes.len()];

    for start in 0..nodes.len() {
        if mark[start] != Mark::New {
            continue;
        }
        // Iterative DFS; `stack` holds (node, next successor index).
        let mut stack = vec![(start, 0usize)];
        mark[start] = Mark::Active;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if let Some(&w) = succ[v].get(*next) {
                *next += 1;
                match mark[w] {
                    Mark::New => {
                        mark[w] = Mark::Active;
                        stack.push((w, 0));
                    }
                    Mark::Active => {
                        let from = stack.iter().position(|&(u, _)| u == w).expect("active node is on the stack");
                        let mut cycle: Vec<usize> = stack[from..].iter().map(|&(u, _)| u).collect();
                        let min_at = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
                        cycle.rotate_left(min_at);
                        return Some(cycle.into_iter().map(|i| nodes[i].clone()).collect());
                    }
                    Mark::Done => {}
                }
            } else {
                mark[v] = Mark::Done;
                stack.pop();
            }
        }
    }
    None
}
