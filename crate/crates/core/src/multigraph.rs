//! Directed multigraphs on the vertices `0..=n`, rooted at `0`.
//!
//! Parallel edges from one tail to one head are told apart by a copy index.
//! The copy order is the order in which the edges were supplied (file line
//! order when parsing), and it is the tie-break used by every induced edge
//! order in this crate.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// The distinguished root vertex.
pub const ROOT: Vertex = 0;

/// One copy of a directed edge `tail -> head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeRef {
    pub tail: Vertex,
    pub head: Vertex,
    pub copy: usize,
}

impl EdgeRef {
    pub fn new(tail: Vertex, head: Vertex, copy: usize) -> Self {
        EdgeRef { tail, head, copy }
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.tail, self.head, self.copy)
    }
}

/// An immutable loop-free directed multigraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    /// Row-major `vertex_count x vertex_count` multiplicity matrix.
    mult: Vec<usize>,
    out_degree: Vec<usize>,
    /// Global number of the first copy of each `(tail, head)` pair in
    /// canonical `(tail, head, copy)` order.
    offset: Vec<usize>,
}

impl Multigraph {
    /// Builds a graph from a list of `(tail, head)` pairs; each pair is one
    /// edge copy, numbered in list order.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut mult = vec![0; vertex_count * vertex_count];
        for (tail, head) in edges {
            check_pair(vertex_count, tail, head)?;
            mult[tail * vertex_count + head] += 1;
        }
        Ok(Self::from_matrix(vertex_count, mult))
    }

    /// Builds a graph from a full multiplicity matrix. Diagonal entries must
    /// be zero.
    pub fn from_multiplicities(rows: &[Vec<usize>]) -> Result<Self> {
        let vertex_count = rows.len();
        let mut mult = Vec::with_capacity(vertex_count * vertex_count);
        for (tail, row) in rows.iter().enumerate() {
            if row.len() != vertex_count {
                return Err(Error::LengthMismatch { expected: vertex_count, got: row.len() });
            }
            if row[tail] != 0 {
                return Err(Error::Loop(tail));
            }
            mult.extend_from_slice(row);
        }
        Ok(Self::from_matrix(vertex_count, mult))
    }

    fn from_matrix(vertex_count: usize, mult: Vec<usize>) -> Self {
        let out_degree = mult.chunks(vertex_count.max(1)).take(vertex_count).map(|r| r.iter().sum()).collect();
        let mut offset = Vec::with_capacity(mult.len());
        let mut acc = 0;
        for &m in &mult {
            offset.push(acc);
            acc += m;
        }
        Multigraph { vertex_count, mult, out_degree, offset }
    }

    /// The complete digraph `K_{n+1}`: one edge each way between every pair.
    pub fn complete(n: usize) -> Self {
        let vc = n + 1;
        let rows: Vec<Vec<usize>> = (0..vc).map(|i| (0..vc).map(|j| usize::from(i != j)).collect()).collect();
        Self::from_multiplicities(&rows).expect("complete graph is loop-free")
    }

    /// Number of vertices, `n + 1`.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of non-root vertices.
    pub fn n(&self) -> usize {
        self.vertex_count.saturating_sub(1)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count
    }

    pub fn multiplicity(&self, tail: Vertex, head: Vertex) -> usize {
        if tail >= self.vertex_count || head >= self.vertex_count {
            return 0;
        }
        self.mult[tail * self.vertex_count + head]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_degree.get(v).copied().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.out_degree.iter().sum()
    }

    pub fn contains(&self, e: EdgeRef) -> bool {
        e.tail != e.head && e.copy < self.multiplicity(e.tail, e.head)
    }

    /// Position of `e` in the canonical `(tail, head, copy)` enumeration of
    /// all edges.
    pub fn edge_index(&self, e: EdgeRef) -> Option<usize> {
        if !self.contains(e) {
            return None;
        }
        Some(self.offset[e.tail * self.vertex_count + e.head] + e.copy)
    }

    /// Out-edges of `v`, by head index and then copy index.
    pub fn out_edges(&self, v: Vertex) -> Vec<EdgeRef> {
        let mut out = Vec::with_capacity(self.out_degree(v));
        if v >= self.vertex_count {
            return out;
        }
        for head in 0..self.vertex_count {
            for copy in 0..self.multiplicity(v, head) {
                out.push(EdgeRef::new(v, head, copy));
            }
        }
        out
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        self.vertices().flat_map(move |v| self.out_edges(v))
    }

    /// `true` iff `m(i,j) = m(j,i)` for every pair.
    pub fn is_symmetric(&self) -> bool {
        (0..self.vertex_count)
            .all(|i| (i + 1..self.vertex_count).all(|j| self.multiplicity(i, j) == self.multiplicity(j, i)))
    }

    /// Parses the line-oriented graph format: `#` comments, a `vertices N`
    /// header, then one `edge TAIL HEAD` line per edge copy.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertex_count = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: line_no, msg };
            let mut words = line.split_whitespace();
            let keyword = words.next().unwrap_or_default();
            let nums: Vec<usize> = words
                .map(|w| w.parse::<usize>().map_err(|_| err(format!("expected a non-negative integer, got `{w}`"))))
                .collect::<Result<_>>()?;
            match (keyword, vertex_count) {
                ("vertices", None) => {
                    let [count] = nums[..] else {
                        return Err(err("expected `vertices N`".into()));
                    };
                    if count == 0 {
                        return Err(err("a graph needs at least the root vertex".into()));
                    }
                    vertex_count = Some(count);
                }
                ("vertices", Some(_)) => return Err(err("duplicate `vertices` header".into())),
                ("edge", None) => return Err(err("missing `vertices` header before first edge".into())),
                ("edge", Some(count)) => {
                    let [tail, head] = nums[..] else {
                        return Err(err("expected `edge TAIL HEAD`".into()));
                    };
                    check_pair(count, tail, head).map_err(|e| err(e.to_string()))?;
                    edges.push((tail, head));
                }
                (other, _) => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        let count = vertex_count.ok_or_else(|| Error::Parse {
            line: text.lines().count().max(1),
            msg: "missing `vertices` header".into(),
        })?;
        Self::from_edges(count, edges)
    }

    /// Canonical serialization: header, then edges sorted by
    /// `(tail, head, copy)`.
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

fn check_pair(vertex_count: usize, tail: Vertex, head: Vertex) -> Result<()> {
    for v in [tail, head] {
        if v >= vertex_count {
            return Err(Error::VertexOutOfRange(v));
        }
    }
    if tail == head {
        return Err(Error::Loop(tail));
    }
    Ok(())
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.vertex_count)?;
        for e in self.edges() {
            writeln!(f, "edge {} {}", e.tail, e.head)?;
        }
        Ok(())
    }
}

impl FromStr for Multigraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_single_edge() {
        let g = Multigraph::parse("vertices 2\nedge 1 0").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.multiplicity(1, 0), 1);
        assert_eq!(g.multiplicity(0, 1), 0);
    }

    #[test]
    fn parse_parallel_edges_in_line_order() {
        let g = Multigraph::parse("# two copies\nvertices 2\nedge 1 0\nedge 1 0\n").unwrap();
        assert_eq!(g.multiplicity(1, 0), 2);
        assert_eq!(g.out_edges(1), vec![EdgeRef::new(1, 0, 0), EdgeRef::new(1, 0, 1)]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let loop_err = Multigraph::parse("vertices 2\nedge 1 1").unwrap_err();
        assert!(matches!(loop_err, Error::Parse { line: 2, ref msg } if msg.contains("loop")));

        let range = Multigraph::parse("vertices 2\n\nedge 1 5").unwrap_err();
        assert!(matches!(range, Error::Parse { line: 3, .. }));

        let header = Multigraph::parse("edge 1 0").unwrap_err();
        assert!(matches!(header, Error::Parse { line: 1, ref msg } if msg.contains("vertices")));

        assert!(matches!(Multigraph::parse("# nothing\n"), Err(Error::Parse { .. })));
        assert!(matches!(Multigraph::parse("vertices 2\nedge 1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Multigraph::parse("vertices 2\nedgy 1 0"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Multigraph::parse("vertices x"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn serialize_header_only_and_edge_lines() {
        let g = Multigraph::parse("vertices 1").unwrap();
        assert_eq!(g.serialize(), "vertices 1\n");

        let k4 = Multigraph::complete(3);
        let text = k4.serialize();
        assert_eq!(text.lines().filter(|l| l.starts_with("edge")).count(), 12);
    }

    #[test]
    fn serialize_round_trip_keeps_copies() {
        let g = Multigraph::parse("vertices 3\nedge 2 0\nedge 1 0\nedge 2 0\nedge 1 2").unwrap();
        let back = Multigraph::parse(&g.serialize()).unwrap();
        assert_eq!(g, back);
        assert_eq!(back.out_edges(2), vec![EdgeRef::new(2, 0, 0), EdgeRef::new(2, 0, 1)]);
    }

    #[test]
    fn complete_graph_shape() {
        let k2 = Multigraph::complete(1);
        assert_eq!(k2.multiplicity(0, 1), 1);
        assert_eq!(k2.multiplicity(1, 0), 1);

        assert_eq!(Multigraph::complete(3).edge_count(), 12);

        let k3 = Multigraph::complete(2);
        assert_eq!((0..3).map(|v| k3.out_degree(v)).collect::<Vec<_>>(), vec![2, 2, 2]);

        for n in 1..=8 {
            assert!(Multigraph::complete(n).is_symmetric());
        }
    }

    #[test]
    fn out_edges_order() {
        let k4 = Multigraph::complete(3);
        assert_eq!(k4.out_edges(2), vec![EdgeRef::new(2, 0, 0), EdgeRef::new(2, 1, 0), EdgeRef::new(2, 3, 0)]);
        let isolated = Multigraph::from_edges(3, [(1, 0)]).unwrap();
        assert!(isolated.out_edges(2).is_empty());
        for v in k4.vertices() {
            assert_eq!(k4.out_edges(v).len(), k4.out_degree(v));
        }
    }

    #[test]
    fn symmetry() {
        assert!(Multigraph::complete(3).is_symmetric());
        assert!(!Multigraph::from_edges(2, [(1, 0)]).unwrap().is_symmetric());
        let g = Multigraph::from_edges(3, [(1, 2), (1, 2), (2, 1), (2, 1), (1, 0), (0, 1)]).unwrap();
        assert!(g.is_symmetric());
    }

    #[test]
    fn edge_index_is_canonical_rank() {
        let g = Multigraph::parse("vertices 3\nedge 2 0\nedge 1 0\nedge 2 0\nedge 1 2").unwrap();
        let ranks: Vec<_> = g.edges().map(|e| g.edge_index(e).unwrap()).collect();
        assert_eq!(ranks, (0..g.edge_count()).collect::<Vec<_>>());
        assert_eq!(g.edge_index(EdgeRef::new(2, 0, 1)), Some(3));
        assert_eq!(g.edge_index(EdgeRef::new(2, 0, 2)), None);
    }
}
