use std::fmt;

use crate::error::{Error, Result};
use crate::multigraph::{EdgeRef, Multigraph, Vertex, ROOT};

/// A subtree of a host graph rooted at `0`, stored as one parent edge per
/// non-root member.
///
/// Two trees are equal iff their parent-edge maps are equal, so trees that
/// differ only in which parallel copy they use are distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedTree {
    parent: Vec<Option<EdgeRef>>,
}

impl RootedTree {
    /// The tree consisting of the root alone.
    pub fn singleton(vertex_count: usize) -> Self {
        RootedTree { parent: vec![None; vertex_count.max(1)] }
    }

    /// Builds and validates a tree from its parent edges (tail = child).
    pub fn from_parent_edges<I>(g: &Multigraph, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = EdgeRef>,
    {
        let mut parent = vec![None; g.vertex_count()];
        for e in edges {
            if !g.contains(e) {
                return Err(Error::NoSuchEdge(e));
            }
            if e.tail == ROOT || parent[e.tail].is_some() {
                return Err(Error::BadParentEdge(e));
            }
            parent[e.tail] = Some(e);
        }
        let tree = RootedTree { parent };
        tree.check_shape()?;
        Ok(tree)
    }

    /// Every member must reach the root through members without repeating.
    fn check_shape(&self) -> Result<()> {
        for v in self.members() {
            let mut cur = v;
            let mut steps = 0;
            while cur != ROOT {
                let e = self.parent[cur].ok_or(Error::NotInTree(cur))?;
                cur = e.head;
                if cur != ROOT && self.parent[cur].is_none() {
                    return Err(Error::BadParentEdge(e));
                }
                steps += 1;
                if steps > self.parent.len() {
                    return Err(Error::Cycle(v));
                }
            }
        }
        Ok(())
    }

    /// Attaches the tail of `e` as a new leaf hanging from `e.head`.
    ///
    /// Panics if the tail is already a member or the head is not.
    pub fn with_edge(&self, e: EdgeRef) -> Self {
        assert!(!self.contains(e.tail), "vertex {} already in tree", e.tail);
        assert!(self.contains(e.head), "vertex {} not in tree", e.head);
        let mut next = self.clone();
        next.parent[e.tail] = Some(e);
        next
    }

    /// Removes leaf `v`. Panics if `v` is the root or has children.
    pub fn without_leaf(&self, v: Vertex) -> Self {
        assert!(v != ROOT && self.contains(v), "not a removable vertex: {v}");
        assert!(self.children(v).is_empty(), "vertex {v} is not a leaf");
        let mut next = self.clone();
        next.parent[v] = None;
        next
    }

    /// Number of vertices of the host graph.
    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v == ROOT || self.parent.get(v).is_some_and(Option::is_some)
    }

    /// Members in increasing label order, starting with the root.
    pub fn members(&self) -> Vec<Vertex> {
        (0..self.parent.len()).filter(|&v| self.contains(v)).collect()
    }

    pub fn size(&self) -> usize {
        1 + self.parent.iter().filter(|p| p.is_some()).count()
    }

    pub fn is_spanning(&self) -> bool {
        self.size() == self.parent.len()
    }

    pub fn parent_edge(&self, v: Vertex) -> Option<EdgeRef> {
        self.parent.get(v).copied().flatten()
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent_edge(v).map(|e| e.head)
    }

    /// Parent edges ordered by tail.
    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        self.parent.iter().flatten().copied()
    }

    /// Children of `v` in increasing label order.
    pub fn children(&self, v: Vertex) -> Vec<Vertex> {
        self.edges().filter(|e| e.head == v).map(|e| e.tail).collect()
    }

    /// Number of edges on the path from `v` to the root.
    pub fn height(&self, v: Vertex) -> Option<usize> {
        if !self.contains(v) {
            return None;
        }
        let mut h = 0;
        let mut cur = v;
        while let Some(p) = self.parent(cur) {
            cur = p;
            h += 1;
        }
        Some(h)
    }

    /// Non-root members without children.
    pub fn leaves(&self) -> Vec<Vertex> {
        let mut has_child = vec![false; self.parent.len()];
        for e in self.edges() {
            has_child[e.head] = true;
        }
        self.members().into_iter().filter(|&v| v != ROOT && !has_child[v]).collect()
    }

    /// The unique path from `v` down to the root, read from the root end.
    pub fn tree_path(&self, v: Vertex) -> Result<TreePath> {
        if !self.contains(v) {
            return Err(Error::NotInTree(v));
        }
        let mut edges = Vec::new();
        let mut cur = v;
        while let Some(e) = self.parent_edge(cur) {
            edges.push(e);
            cur = e.head;
        }
        edges.reverse();
        Ok(TreePath { edges })
    }

    /// Compact one-line form, e.g. `1:0.0 2:1.0` (`tail:head.copy`).
    pub fn compact(&self) -> String {
        self.edges().map(|e| format!("{}:{}.{}", e.tail, e.head, e.copy)).collect::<Vec<_>>().join(" ")
    }

    /// Parses `treeedge V HEAD COPY` lines (with `#` comments) against `g`.
    pub fn parse(g: &Multigraph, text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            edges.push(parse_tree_edge(idx + 1, line)?);
        }
        Self::from_parent_edges(g, edges)
    }
}

/// Parses one `treeedge V HEAD COPY` line.
pub(crate) fn parse_tree_edge(line_no: usize, line: &str) -> Result<EdgeRef> {
    let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
    let mut words = line.split_whitespace();
    if words.next() != Some("treeedge") {
        return Err(err("expected `treeedge V HEAD COPY`"));
    }
    let nums: Vec<usize> =
        words.map(|w| w.parse().map_err(|_| err("expected non-negative integers"))).collect::<Result<_>>()?;
    let [tail, head, copy] = nums[..] else {
        return Err(err("expected `treeedge V HEAD COPY`"));
    };
    Ok(EdgeRef::new(tail, head, copy))
}

impl fmt::Display for RootedTree {
    /// One `treeedge V HEAD COPY` line per non-root member, by `V`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.edges() {
            writeln!(f, "treeedge {} {} {}", e.tail, e.head, e.copy)?;
        }
        Ok(())
    }
}

/// A path `<s_1, ..., s_l>` ending at the root: edges `s_1 -> 0`,
/// `s_2 -> s_1`, ..., `s_l -> s_{l-1}`.
///
/// Edges are stored from the root end outwards so the path to a parent is a
/// prefix of the path to its child.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreePath {
    edges: Vec<EdgeRef>,
}

impl TreePath {
    /// The empty path `<>` at the root.
    pub fn root() -> Self {
        TreePath { edges: Vec::new() }
    }

    /// Builds a path from edges listed root end first, checking that they
    /// chain and visit distinct non-root vertices.
    pub fn from_edges(edges: Vec<EdgeRef>) -> Result<Self> {
        let mut seen = vec![ROOT];
        let mut prev = ROOT;
        for &e in &edges {
            if e.head != prev || seen.contains(&e.tail) {
                return Err(Error::BadParentEdge(e));
            }
            seen.push(e.tail);
            prev = e.tail;
        }
        Ok(TreePath { edges })
    }

    /// Builds the path through `vertices` using copy 0 of every edge.
    pub fn through(g: &Multigraph, vertices: &[Vertex]) -> Result<Self> {
        let mut prev = ROOT;
        let mut edges = Vec::with_capacity(vertices.len());
        for &v in vertices {
            let e = EdgeRef::new(v, prev, 0);
            if !g.contains(e) {
                return Err(Error::NoSuchEdge(e));
            }
            edges.push(e);
            prev = v;
        }
        Self::from_edges(edges)
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    /// `s_1, ..., s_l`.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.edges.iter().map(|e| e.tail)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `s_l`, or the root for the empty path.
    pub fn endpoint(&self) -> Vertex {
        self.edges.last().map_or(ROOT, |e| e.tail)
    }

    /// Length of the longest common prefix, compared edge by edge.
    pub fn common_prefix(&self, other: &TreePath) -> usize {
        self.edges.iter().zip(&other.edges).take_while(|(a, b)| a == b).count()
    }

    pub fn is_prefix_of(&self, other: &TreePath) -> bool {
        self.len() <= other.len() && self.common_prefix(other) == self.len()
    }

    /// A copy extended by one edge out of the current endpoint.
    pub fn extended(&self, e: EdgeRef) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push(e);
        Self::from_edges(edges)
    }
}

impl fmt::Display for TreePath {
    /// `<2,4,1>`; an edge using a copy other than 0 is marked `v#copy`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e.tail)?;
            if e.copy > 0 {
                write!(f, "#{}", e.copy)?;
            }
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seven_vertex() -> (Multigraph, RootedTree) {
        let tree_edges = [(2, 0), (6, 0), (3, 2), (4, 2), (5, 3), (1, 4)];
        let g = Multigraph::from_edges(7, tree_edges).unwrap();
        let t = RootedTree::from_parent_edges(&g, tree_edges.map(|(a, b)| EdgeRef::new(a, b, 0))).unwrap();
        (g, t)
    }

    #[test]
    fn tree_path_examples() {
        let (g, t) = seven_vertex();
        let p = t.tree_path(1).unwrap();
        assert_eq!(p.vertices().collect::<Vec<_>>(), vec![2, 4, 1]);
        assert_eq!(p.to_string(), "<2,4,1>");
        assert!(t.tree_path(0).unwrap().is_empty());

        let star = RootedTree::from_parent_edges(&g, [EdgeRef::new(2, 0, 0), EdgeRef::new(6, 0, 0)]).unwrap();
        assert_eq!(star.tree_path(6).unwrap().vertices().collect::<Vec<_>>(), vec![6]);
        assert_eq!(star.tree_path(3), Err(Error::NotInTree(3)));
    }

    #[test]
    fn heights_children_leaves() {
        let (_, t) = seven_vertex();
        let heights: Vec<_> = (0..7).map(|v| t.height(v).unwrap()).collect();
        assert_eq!(heights, vec![0, 3, 1, 2, 2, 3, 1]);
        assert_eq!(t.children(2), vec![3, 4]);
        assert_eq!(t.leaves(), vec![1, 5, 6]);
        assert!(t.is_spanning());
        assert_eq!(t.without_leaf(5).size(), 6);
    }

    #[test]
    fn rejects_bad_trees() {
        let g = Multigraph::complete(3);
        let cyc = RootedTree::from_parent_edges(&g, [EdgeRef::new(1, 2, 0), EdgeRef::new(2, 1, 0)]);
        assert!(matches!(cyc, Err(Error::BadParentEdge(_)) | Err(Error::Cycle(_))));

        let three = [EdgeRef::new(1, 2, 0), EdgeRef::new(2, 3, 0), EdgeRef::new(3, 1, 0)];
        assert!(RootedTree::from_parent_edges(&g, three).is_err());

        let dangling = RootedTree::from_parent_edges(&g, [EdgeRef::new(1, 2, 0)]);
        assert!(matches!(dangling, Err(Error::BadParentEdge(_))));

        let missing = RootedTree::from_parent_edges(&g, [EdgeRef::new(1, 0, 1)]);
        assert!(matches!(missing, Err(Error::NoSuchEdge(_))));

        let twice = RootedTree::from_parent_edges(&g, [EdgeRef::new(1, 0, 0), EdgeRef::new(1, 2, 0)]);
        assert!(matches!(twice, Err(Error::BadParentEdge(_))));
    }

    #[test]
    fn text_round_trip() {
        let (g, t) = seven_vertex();
        let text = t.to_string();
        assert!(text.starts_with("treeedge 1 4 0\n"));
        assert_eq!(RootedTree::parse(&g, &format!("# fig\n{text}")).unwrap(), t);
        assert!(matches!(RootedTree::parse(&g, "treeedge 1 4"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn path_construction_checks_chain() {
        let g = Multigraph::complete(3);
        let p = TreePath::through(&g, &[2, 3]).unwrap();
        assert_eq!(p.endpoint(), 3);
        assert!(TreePath::through(&g, &[2]).unwrap().is_prefix_of(&p));
        assert!(TreePath::through(&g, &[2, 2]).is_err());
        assert!(TreePath::from_edges(vec![EdgeRef::new(2, 1, 0)]).is_err());
    }
}
