//! Orders on root paths that induce proper sets of tree orders.
//!
//! A comparator must make any two paths that meet only in a common prefix
//! comparable, and must place every proper prefix below its extensions. The
//! vertex order of a tree is then obtained by sorting the tree paths of its
//! vertices.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::multigraph::Multigraph;
use crate::treeorder::tree::TreePath;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathComparator {
    /// Lexicographic on `s_1, ..., s_l`. Induces the depth-first order.
    Lex,
    /// Shorter first, then by endpoint. Induces the breadth-first order.
    LengthThenEndpoint,
    /// Defined only when the paths meet in a common prefix: the one whose
    /// private part has the smaller maximum vertex is smaller. Induces the
    /// vertex-adding order.
    MaxOfDifference,
    /// Compares the vertex sets sorted increasingly, reading both from the
    /// largest element down.
    IncreasingRearrangement,
    /// Smaller vertex sum first, then by endpoint.
    SumThenEndpoint,
    /// Lexicographic on the global edge numbers of the path, root end first.
    EdgeLabelLex,
}

impl PathComparator {
    pub const ALL: [PathComparator; 6] = [
        PathComparator::Lex,
        PathComparator::LengthThenEndpoint,
        PathComparator::MaxOfDifference,
        PathComparator::IncreasingRearrangement,
        PathComparator::SumThenEndpoint,
        PathComparator::EdgeLabelLex,
    ];

    /// Short name used on the command line after `path:`.
    pub fn name(self) -> &'static str {
        match self {
            PathComparator::Lex => "lex",
            PathComparator::LengthThenEndpoint => "bf",
            PathComparator::MaxOfDifference => "va",
            PathComparator::IncreasingRearrangement => "incr",
            PathComparator::SumThenEndpoint => "sum",
            PathComparator::EdgeLabelLex => "edgelex",
        }
    }

    /// Compares two paths of `g`. `None` means incomparable.
    ///
    /// Paths are equal only when identical. Apart from
    /// [`PathComparator::MaxOfDifference`], every comparator is total: ties
    /// on the primary key fall back to the structural order of the edge
    /// sequences.
    pub fn compare(self, g: &Multigraph, a: &TreePath, b: &TreePath) -> Option<Ordering> {
        if a == b {
            return Some(Ordering::Equal);
        }
        let primary = match self {
            PathComparator::Lex => a.vertices().cmp(b.vertices()),
            PathComparator::LengthThenEndpoint => (a.len(), a.endpoint()).cmp(&(b.len(), b.endpoint())),
            PathComparator::MaxOfDifference => return max_of_difference(a, b),
            PathComparator::IncreasingRearrangement => {
                let mut sa: Vec<_> = a.vertices().collect();
                let mut sb: Vec<_> = b.vertices().collect();
                sa.sort_unstable();
                sb.sort_unstable();
                sa.iter().rev().cmp(sb.iter().rev())
            }
            PathComparator::SumThenEndpoint => {
                let sum_a: usize = a.vertices().sum();
                let sum_b: usize = b.vertices().sum();
                (sum_a, a.endpoint()).cmp(&(sum_b, b.endpoint()))
            }
            PathComparator::EdgeLabelLex => {
                let la: Option<Vec<_>> = a.edges().iter().map(|&e| g.edge_index(e)).collect();
                let lb: Option<Vec<_>> = b.edges().iter().map(|&e| g.edge_index(e)).collect();
                la?.cmp(&lb?)
            }
        };
        Some(primary.then_with(|| a.cmp(b)))
    }
}

fn max_of_difference(a: &TreePath, b: &TreePath) -> Option<Ordering> {
    let k = a.common_prefix(b);
    let rest_a: Vec<_> = a.vertices().skip(k).collect();
    let rest_b: Vec<_> = b.vertices().skip(k).collect();
    if rest_a.iter().any(|v| rest_b.contains(v)) {
        return None;
    }
    // An empty remainder has maximum "-1", below every vertex.
    let max_a = rest_a.iter().max().map(|&v| v as i64).unwrap_or(-1);
    let max_b = rest_b.iter().max().map(|&v| v as i64).unwrap_or(-1);
    Some(max_a.cmp(&max_b))
}

impl fmt::Display for PathComparator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PathComparator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PathComparator::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::PolicyDefect(format!("unknown path comparator `{s}`")))
    }
}
