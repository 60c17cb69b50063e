use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::multigraph::{Multigraph, Vertex, ROOT};
use crate::treeorder::tree::{parse_tree_edge, RootedTree};

/// An explicitly tabulated tree order: one vertex order per subtree.
///
/// Lookups of trees that are not in the table fail; there is no fallback.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TableOrder {
    entries: HashMap<RootedTree, Vec<Vertex>>,
}

impl TableOrder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds or replaces the order stored for `tree`.
    pub fn insert(&mut self, tree: RootedTree, order: Vec<Vertex>) -> Option<Vec<Vertex>> {
        self.entries.insert(tree, order)
    }

    pub fn get(&self, tree: &RootedTree) -> Option<&[Vertex]> {
        self.entries.get(tree).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Tabulates the given trees and every subtree of them, ordering each
    /// subtree by restriction. Fails if two given trees restrict to
    /// different orders on a common subtree.
    pub fn closed_under_restriction<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (RootedTree, Vec<Vertex>)>,
    {
        let mut table = TableOrder::new();
        for (tree, order) in entries {
            for sub in subtrees_of(&tree) {
                let restricted: Vec<Vertex> = order.iter().copied().filter(|&v| sub.contains(v)).collect();
                match table.entries.get(&sub) {
                    Some(existing) if *existing != restricted => {
                        return Err(Error::PolicyDefect(format!(
                            "conflicting orders {existing:?} and {restricted:?} for subtree [{}]",
                            sub.compact()
                        )));
                    }
                    Some(_) => {}
                    None => {
                        table.entries.insert(sub, restricted);
                    }
                }
            }
        }
        Ok(table)
    }

    /// Parses blocks of `treeedge V HEAD COPY` lines, each closed by an
    /// `order v0 v1 ... vk` line. A block with no tree edges is the
    /// singleton tree.
    pub fn parse(g: &Multigraph, text: &str) -> Result<Self> {
        let mut table = TableOrder::new();
        let mut pending = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("order") {
                let order: Vec<Vertex> = rest
                    .split_whitespace()
                    .map(|w| w.parse().map_err(|_| Error::Parse { line: line_no, msg: format!("bad vertex `{w}`") }))
                    .collect::<Result<_>>()?;
                let tree = RootedTree::from_parent_edges(g, pending.drain(..))
                    .map_err(|e| Error::Parse { line: line_no, msg: e.to_string() })?;
                if table.entries.contains_key(&tree) {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("duplicate entry for tree [{}]", tree.compact()),
                    });
                }
                table.entries.insert(tree, order);
            } else {
                pending.push(parse_tree_edge(line_no, line)?);
            }
        }
        if !pending.is_empty() {
            return Err(Error::Parse { line: last_line, msg: "tree block without an `order` line".into() });
        }
        Ok(table)
    }
}

impl fmt::Display for TableOrder {
    /// Blocks sorted by tree, separated by blank lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut trees: Vec<_> = self.entries.iter().collect();
        trees.sort();
        for (i, (tree, order)) in trees.into_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{tree}")?;
            let words: Vec<String> = order.iter().map(ToString::to_string).collect();
            writeln!(f, "order {}", words.join(" "))?;
        }
        Ok(())
    }
}

/// Every subtree of `tree` rooted at `0` (member sets closed under taking
/// parents), `tree` itself included.
pub(crate) fn subtrees_of(tree: &RootedTree) -> Vec<RootedTree> {
    let others: Vec<Vertex> = tree.members().into_iter().filter(|&v| v != ROOT).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << others.len() {
        let keep = |v: Vertex| v == ROOT || others.iter().position(|&o| o == v).is_some_and(|i| mask & (1 << i) != 0);
        let closed = others
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .all(|(_, &v)| tree.parent(v).is_some_and(keep));
        if closed {
            let mut sub = RootedTree::singleton(tree.vertex_count());
            // Parents precede children when attached in height order.
            let mut kept: Vec<Vertex> = others.iter().copied().filter(|&v| keep(v)).collect();
            kept.sort_by_key(|&v| tree.height(v));
            for v in kept {
                sub = sub.with_edge(tree.parent_edge(v).expect("non-root member has a parent"));
            }
            out.push(sub);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::EdgeRef;

    #[test]
    fn subtrees_of_a_path() {
        let g = Multigraph::complete(3);
        let path = RootedTree::from_parent_edges(&g, [EdgeRef::new(1, 0, 0), EdgeRef::new(2, 1, 0)]).unwrap();
        assert_eq!(subtrees_of(&path).len(), 3);
        let star = RootedTree::from_parent_edges(&g, [EdgeRef::new(1, 0, 0), EdgeRef::new(2, 0, 0)]).unwrap();
        assert_eq!(subtrees_of(&star).len(), 4);
    }

    #[test]
    fn parse_and_print() {
        let g = Multigraph::complete(2);
        let text = "# root alone\norder 0\n\ntreeedge 1 0 0\norder 0 1\n";
        let table = TableOrder::parse(&g, text).unwrap();
        assert_eq!(table.len(), 2);
        assert_eq!(table.get(&RootedTree::singleton(3)), Some(&[0][..]));
        let again = TableOrder::parse(&g, &table.to_string()).unwrap();
        assert_eq!(again, table);

        assert!(matches!(TableOrder::parse(&g, "treeedge 1 0 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(TableOrder::parse(&g, "order 0\norder 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(TableOrder::parse(&g, "treeedge 1 1 0\norder 0 1\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn restriction_conflicts_are_reported() {
        let g = Multigraph::complete(2);
        let a = RootedTree::from_parent_edges(&g, [EdgeRef::new(1, 0, 0), EdgeRef::new(2, 0, 0)]).unwrap();
        let b = RootedTree::from_parent_edges(&g, [EdgeRef::new(1, 0, 0), EdgeRef::new(2, 1, 0)]).unwrap();
        let ok = TableOrder::closed_under_restriction([(a.clone(), vec![0, 1, 2]), (b.clone(), vec![0, 1, 2])]);
        assert_eq!(ok.unwrap().len(), 5);
        // Both restrict to the subtree {0, 1}; the star also to {0, 2}.
        let bad = TableOrder::closed_under_restriction([(a, vec![0, 1, 2]), (b, vec![1, 0, 2])]);
        assert!(matches!(bad, Err(Error::PolicyDefect(_))));
    }
}
