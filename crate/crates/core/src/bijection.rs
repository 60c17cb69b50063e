//! The tree-to-parking-function map `theta` and its inverse `phi`, for any
//! proper tree-order policy.
//!
//! Both maps rank the out-edges of a vertex `j` that land in a tree `t` by
//! the position of their heads in the policy's order of `t`, parallel copies
//! by copy index.

use std::fmt;

use crate::enumeration::enumerate_spanning_trees;
use crate::error::{Error, Result};
use crate::multigraph::{EdgeRef, Multigraph, Vertex, ROOT};
use crate::parking::{enumerate_parking_functions, is_parking_burning, ParkingCandidate};
use crate::treeorder::{positions, OrderPolicy, RootedTree};

/// The policy's order of `t` as a position table, after checking that it
/// is a permutation of `t`'s vertices.
fn order_positions(g: &Multigraph, p: &OrderPolicy, t: &RootedTree) -> Result<Vec<usize>> {
    let order = p.compute_order(g, t)?;
    let mut sorted = order.clone();
    sorted.sort_unstable();
    if sorted != t.members() {
        return Err(Error::PolicyDefect(format!(
            "policy {p} returned {order:?} for tree [{}], not a permutation of its vertices",
            t.compact()
        )));
    }
    Ok(positions(&order, g.vertex_count()))
}

/// Out-edges of `j` whose heads lie in the tree with position table `pos`,
/// smallest first in the induced edge order.
fn ranked_edges_into(g: &Multigraph, j: Vertex, pos: &[usize]) -> Vec<EdgeRef> {
    let mut edges: Vec<EdgeRef> = g.out_edges(j).into_iter().filter(|e| pos[e.head] != usize::MAX).collect();
    edges.sort_by_key(|e| (pos[e.head], e.copy));
    edges
}

/// Maps a spanning tree to a parking function: `b_j` counts the out-edges
/// of `j` below `j`'s tree edge in the order induced by the policy's order of
/// `t`.
pub fn theta(g: &Multigraph, t: &RootedTree, p: &OrderPolicy) -> Result<ParkingCandidate> {
    if t.vertex_count() != g.vertex_count() || !t.is_spanning() {
        return Err(Error::NotSpanning);
    }
    if let Some(e) = t.edges().find(|&e| !g.contains(e)) {
        return Err(Error::NoSuchEdge(e));
    }
    let pos = order_positions(g, p, t)?;
    let values = (1..=g.n())
        .map(|j| {
            let tree_edge = t.parent_edge(j).expect("spanning tree has a parent for every non-root vertex");
            let key = (pos[tree_edge.head], tree_edge.copy);
            g.out_edges(j).into_iter().filter(|e| (pos[e.head], e.copy) < key).count()
        })
        .collect();
    Ok(ParkingCandidate::new(values))
}

/// One iteration of [`phi`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiStep {
    /// Iteration number, starting at 1.
    pub m: usize,
    /// Vertices not yet in the tree.
    pub unattached: Vec<Vertex>,
    /// Unattached vertices with more than `b_j` edges into the tree,
    /// ascending.
    pub ready: Vec<Vertex>,
    /// The edge each ready vertex would attach by, parallel to `ready`.
    pub candidates: Vec<EdgeRef>,
    /// The ready vertex attached at this step.
    pub chosen: Vertex,
    pub edge: EdgeRef,
}

impl fmt::Display for PhiStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cands: Vec<String> = self.candidates.iter().map(|e| format!("{}->{}#{}", e.tail, e.head, e.copy)).collect();
        write!(
            f,
            "step {}: unattached {:?} ready {:?} via [{}] attach {} via {}->{}#{}",
            self.m,
            self.unattached,
            self.ready,
            cands.join(", "),
            self.chosen,
            self.edge.tail,
            self.edge.head,
            self.edge.copy
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PhiTrace {
    pub steps: Vec<PhiStep>,
}

impl PhiTrace {
    /// `p_0 = 0, p_1, ..., p_n`: vertices in the order they were attached.
    pub fn attach_order(&self) -> Vec<Vertex> {
        std::iter::once(ROOT).chain(self.steps.iter().map(|s| s.chosen)).collect()
    }
}

/// Grows the tree for `b` one vertex at a time.
///
/// At step `m`, every unattached `j` with at least `b_j + 1` edges into the
/// current tree `t` is *ready*, with candidate edge the `(b_j + 1)`-th
/// smallest such edge under the order of `t`. All ready vertices are hung on
/// `t` at once; the one smallest in the order of that larger tree is kept.
///
/// Fails with [`Error::NotParkingFunction`] exactly when `b` is not a
/// G-parking function.
pub fn phi(g: &Multigraph, b: &ParkingCandidate, p: &OrderPolicy) -> Result<(RootedTree, PhiTrace)> {
    b.check_len(g)?;
    let mut tree = RootedTree::singleton(g.vertex_count());
    let mut trace = PhiTrace::default();
    for m in 1..=g.n() {
        let pos = order_positions(g, p, &tree)?;
        let unattached: Vec<Vertex> = g.vertices().filter(|&v| !tree.contains(v)).collect();
        let mut ready = Vec::new();
        let mut candidates = Vec::new();
        for &j in &unattached {
            if let Some(&e) = ranked_edges_into(g, j, &pos).get(b.get(j)) {
                ready.push(j);
                candidates.push(e);
            }
        }
        if ready.is_empty() {
            return Err(Error::NotParkingFunction { step: m, stuck: unattached });
        }
        let mut grown = tree.clone();
        for &e in &candidates {
            grown = grown.with_edge(e);
        }
        let grown_pos = order_positions(g, p, &grown)?;
        let pick = (0..ready.len()).min_by_key(|&i| grown_pos[ready[i]]).expect("ready is non-empty");
        let (chosen, edge) = (ready[pick], candidates[pick]);
        tree = tree.with_edge(edge);
        trace.steps.push(PhiStep { m, unattached, ready, candidates, chosen, edge });
    }
    Ok((tree, trace))
}

/// Exhaustive round-trip check of one policy on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub policy: String,
    pub trees: usize,
    pub parking_functions: usize,
    /// Parking functions where `theta(phi(b)) != b`, or `phi` failed.
    pub theta_phi_failures: Vec<ParkingCandidate>,
    /// Trees where `phi(theta(t)) != t`.
    pub phi_theta_failures: Vec<RootedTree>,
    /// Trees whose image under `theta` is not a parking function.
    pub theta_not_parking: Vec<RootedTree>,
    /// Parking functions whose attach order is not ascending in the final
    /// tree's order.
    pub order_failures: Vec<ParkingCandidate>,
    /// Set when the policy itself misbehaved; the other fields are then
    /// incomplete.
    pub policy_defect: Option<Error>,
}

impl BijectionReport {
    pub fn is_bijection(&self) -> bool {
        self.policy_defect.is_none()
            && self.trees == self.parking_functions
            && self.theta_phi_failures.is_empty()
            && self.phi_theta_failures.is_empty()
            && self.theta_not_parking.is_empty()
            && self.order_failures.is_empty()
    }
}

impl fmt::Display for BijectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "policy {}", self.policy)?;
        writeln!(f, "trees {}", self.trees)?;
        writeln!(f, "parking functions {}", self.parking_functions)?;
        if let Some(e) = &self.policy_defect {
            writeln!(f, "policy defect: {e}")?;
        }
        writeln!(f, "theta(phi(b)) != b: {}", self.theta_phi_failures.len())?;
        writeln!(f, "phi(theta(t)) != t: {}", self.phi_theta_failures.len())?;
        writeln!(f, "theta(t) not parking: {}", self.theta_not_parking.len())?;
        writeln!(f, "attach order not ascending: {}", self.order_failures.len())?;
        write!(f, "{}", if self.is_bijection() { "bijection ok" } else { "bijection FAILED" })
    }
}

/// Runs both round trips over every spanning tree and parking function.
pub fn verify_bijection(g: &Multigraph, p: &OrderPolicy) -> BijectionReport {
    let trees = enumerate_spanning_trees(g);
    let pfs = enumerate_parking_functions(g);
    let mut report = BijectionReport {
        policy: p.name(),
        trees: trees.len(),
        parking_functions: pfs.len(),
        theta_phi_failures: Vec::new(),
        phi_theta_failures: Vec::new(),
        theta_not_parking: Vec::new(),
        order_failures: Vec::new(),
        policy_defect: None,
    };
    if let Err(e) = run_checks(g, p, &trees, &pfs, &mut report) {
        report.policy_defect = Some(e);
    }
    report
}

fn run_checks(
    g: &Multigraph,
    p: &OrderPolicy,
    trees: &[RootedTree],
    pfs: &[ParkingCandidate],
    report: &mut BijectionReport,
) -> Result<()> {
    for b in pfs {
        let (tree, trace) = match phi(g, b, p) {
            Ok(out) => out,
            Err(Error::NotParkingFunction { .. }) => {
                report.theta_phi_failures.push(b.clone());
                continue;
            }
            Err(e) => return Err(e),
        };
        if theta(g, &tree, p)? != *b {
            report.theta_phi_failures.push(b.clone());
        }
        let pos = order_positions(g, p, &tree)?;
        if !trace.attach_order().windows(2).all(|w| pos[w[0]] < pos[w[1]]) {
            report.order_failures.push(b.clone());
        }
    }
    for t in trees {
        let b = theta(g, t, p)?;
        if !is_parking_burning(g, &b)?.accepted {
            report.theta_not_parking.push(t.clone());
            continue;
        }
        match phi(g, &b, p) {
            Ok((back, _)) if back == *t => {}
            Ok(_) | Err(Error::NotParkingFunction { .. }) => report.phi_theta_failures.push(t.clone()),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
