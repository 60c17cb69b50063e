//! Classical parking functions on `K_{n+1}`: the drivers-and-spots process,
//! the spot-rule tree, and the labeled Dyck path construction.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::multigraph::{EdgeRef, Multigraph, Vertex, ROOT};
use crate::parking::ParkingCandidate;
use crate::treeorder::{OrderPolicy, RootedTree};

/// Where each driver parked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParkOutcome {
    pub success: bool,
    /// `spot_of_driver[i - 1]` is driver `i`'s spot; empty on failure.
    pub spot_of_driver: Vec<usize>,
    /// First driver who found no free spot.
    pub failing_driver: Option<usize>,
}

/// Drivers `1..n` arrive in order; driver `i` takes the first free spot at
/// or after `b_i` among spots `0..n`.
pub fn park_simulate(b: &ParkingCandidate) -> ParkOutcome {
    let n = b.len();
    let mut occupied = vec![false; n];
    let mut spot_of_driver = Vec::with_capacity(n);
    for (idx, &fav) in b.values().iter().enumerate() {
        match (fav..n).find(|&s| !occupied[s]) {
            Some(s) => {
                occupied[s] = true;
                spot_of_driver.push(s);
            }
            None => {
                return ParkOutcome { success: false, spot_of_driver: Vec::new(), failing_driver: Some(idx + 1) };
            }
        }
    }
    ParkOutcome { success: true, spot_of_driver, failing_driver: None }
}

fn not_classical(b: &ParkingCandidate, failing_driver: usize) -> Error {
    let stuck = (failing_driver..=b.len()).collect();
    Error::NotParkingFunction { step: failing_driver, stuck }
}

/// The tree on `K_{n+1}` hanging driver `i` from the driver parked in spot
/// `b_i - 1`, or from the root when `b_i = 0`.
pub fn tree_from_spot_rule(b: &ParkingCandidate) -> Result<RootedTree> {
    let outcome = park_simulate(b);
    if let Some(d) = outcome.failing_driver {
        return Err(not_classical(b, d));
    }
    let n = b.len();
    let mut driver_at = vec![0; n];
    for (idx, &s) in outcome.spot_of_driver.iter().enumerate() {
        driver_at[s] = idx + 1;
    }
    let g = Multigraph::complete(n);
    let edges = (1..=n).map(|i| {
        let head = match b.get(i) {
            0 => ROOT,
            s => driver_at[s - 1],
        };
        EdgeRef::new(i, head, 0)
    });
    RootedTree::from_parent_edges(&g, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DyckStep {
    East(usize),
    North,
}

/// A labeled Dyck path in the `n x n` square.
///
/// Row `r` of the picture (counted from 0) is the run of east steps before
/// the `(r + 1)`-th north step and holds the drivers whose favourite spot is
/// `r`, in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledDyckPath {
    steps: Vec<DyckStep>,
}

impl LabeledDyckPath {
    /// Validates `steps`: `n` labeled east steps with labels `1..=n`, `n`
    /// north steps, at least `k` east steps before the `k`-th north step,
    /// and labels increasing along every run of east steps.
    pub fn new(steps: Vec<DyckStep>) -> Result<Self> {
        let n = steps.iter().filter(|s| matches!(s, DyckStep::North)).count();
        let mut seen = vec![false; n + 1];
        let mut easts = 0;
        let mut norths = 0;
        let mut prev_label = None;
        for step in &steps {
            match *step {
                DyckStep::East(label) => {
                    if label == 0 || label > n || seen[label] {
                        return Err(Error::MalformedDyck(format!("bad or repeated label {label}")));
                    }
                    if prev_label.is_some_and(|p| p > label) {
                        return Err(Error::MalformedDyck(format!("label {label} breaks an increasing run")));
                    }
                    seen[label] = true;
                    prev_label = Some(label);
                    easts += 1;
                }
                DyckStep::North => {
                    norths += 1;
                    if easts < norths {
                        return Err(Error::MalformedDyck(format!("crosses the diagonal at north step {norths}")));
                    }
                    prev_label = None;
                }
            }
        }
        if easts != n {
            return Err(Error::MalformedDyck(format!("{easts} east steps but {n} north steps")));
        }
        Ok(LabeledDyckPath { steps })
    }

    pub fn steps(&self) -> &[DyckStep] {
        &self.steps
    }

    /// Size of the square.
    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }

    /// The parking function read back off the rows.
    pub fn to_parking(&self) -> ParkingCandidate {
        let mut b = vec![0; self.n()];
        let mut row = 0;
        for step in &self.steps {
            match *step {
                DyckStep::East(label) => b[label - 1] = row,
                DyckStep::North => row += 1,
            }
        }
        ParkingCandidate::new(b)
    }
}

impl fmt::Display for LabeledDyckPath {
    /// Space-separated `E(label)` and `N` tokens.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self
            .steps
            .iter()
            .map(|s| match s {
                DyckStep::East(l) => format!("E({l})"),
                DyckStep::North => "N".to_string(),
            })
            .collect();
        f.write_str(&words.join(" "))
    }
}

impl FromStr for LabeledDyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .split_whitespace()
            .map(|tok| {
                if tok == "N" {
                    return Ok(DyckStep::North);
                }
                tok.strip_prefix("E(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|l| l.parse().ok())
                    .map(DyckStep::East)
                    .ok_or_else(|| Error::MalformedDyck(format!("bad token `{tok}`")))
            })
            .collect::<Result<_>>()?;
        LabeledDyckPath::new(steps)
    }
}

/// Writes driver `j` into row `b_j`, rows bottom-up, labels increasing
/// within a row, one north step closing each row.
pub fn parking_to_dyck(b: &ParkingCandidate) -> Result<LabeledDyckPath> {
    let outcome = park_simulate(b);
    if let Some(d) = outcome.failing_driver {
        return Err(not_classical(b, d));
    }
    let n = b.len();
    let mut steps = Vec::with_capacity(2 * n);
    for row in 0..n {
        steps.extend((1..=n).filter(|&j| b.get(j) == row).map(DyckStep::East));
        steps.push(DyckStep::North);
    }
    LabeledDyckPath::new(steps)
}

/// Builds a tree on `K_{n+1}` by walking the path with a current vertex,
/// starting at the root: an east step labeled `i` hangs `i` from the current
/// vertex, a north step moves the current vertex to its successor in the
/// right-to-left depth-first order of the tree built so far.
///
/// Steps are consumed in stored order, row 0 first.
pub fn tree_from_dyck(d: &LabeledDyckPath) -> Result<RootedTree> {
    let g = Multigraph::complete(d.n());
    let rtl = OrderPolicy::DepthFirstRtl;
    let mut tree = RootedTree::singleton(g.vertex_count());
    let mut current: Vertex = ROOT;
    for step in d.steps() {
        match *step {
            DyckStep::East(i) => tree = tree.with_edge(EdgeRef::new(i, current, 0)),
            DyckStep::North => {
                let order = rtl.compute_order(&g, &tree)?;
                let at = order.iter().position(|&v| v == current).expect("current vertex is in the tree");
                current = *order
                    .get(at + 1)
                    .ok_or_else(|| Error::MalformedDyck(format!("no successor of vertex {current}")))?;
            }
        }
    }
    Ok(tree)
}
