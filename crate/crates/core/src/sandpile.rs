//! Sandpile-side views of parking functions on symmetric graphs: allowed
//! configurations, burning waves against breadth-first heights, external
//! activity, and the greedy-path separation experiment.

use std::collections::BTreeMap;
use std::fmt;

use crate::bijection::{phi, theta};
use crate::error::{Error, Result};
use crate::multigraph::{EdgeRef, Multigraph, Vertex, ROOT};
use crate::parking::{is_parking_burning, ParkingCandidate};
use crate::treeorder::{OrderPolicy, RootedTree};

/// Chip counts `u_1..u_n`, paired with a host graph by the caller.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SandpileConfig(pub Vec<i64>);

impl fmt::Display for SandpileConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&words.join(" "))
    }
}

/// `u_i = d_i - b_i`.
pub fn to_allowed_config(g: &Multigraph, b: &ParkingCandidate) -> Result<SandpileConfig> {
    b.check_len(g)?;
    Ok(SandpileConfig((1..=g.n()).map(|i| g.out_degree(i) as i64 - b.get(i) as i64).collect()))
}

/// `b_i = d_i - u_i`; fails when some `u_i > d_i`.
pub fn from_allowed_config(g: &Multigraph, u: &SandpileConfig) -> Result<ParkingCandidate> {
    if u.0.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), got: u.0.len() });
    }
    (1..=g.n())
        .map(|i| {
            let b = g.out_degree(i) as i64 - u.0[i - 1];
            usize::try_from(b).map_err(|_| Error::Config(format!("u_{i} = {} exceeds the out-degree", u.0[i - 1])))
        })
        .collect::<Result<Vec<_>>>()
        .map(ParkingCandidate::new)
}

/// Whether `u` is an allowed configuration, i.e. `d - u` is a parking
/// function.
pub fn is_allowed(g: &Multigraph, u: &SandpileConfig) -> Result<bool> {
    match from_allowed_config(g, u) {
        Ok(b) => Ok(is_parking_burning(g, &b)?.accepted),
        Err(Error::Config(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Burning waves next to the height classes of the breadth-first tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaveComparison {
    pub waves: Vec<Vec<Vertex>>,
    pub heights: Vec<Vec<Vertex>>,
}

impl WaveComparison {
    pub fn matches(&self) -> bool {
        self.waves == self.heights
    }
}

/// Computes the burning waves of `b` and the height classes of
/// `phi(g, b, bf)`.
pub fn compare_waves_and_heights(g: &Multigraph, b: &ParkingCandidate) -> Result<WaveComparison> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let burn = is_parking_burning(g, b)?;
    let (tree, _) = phi(g, b, &OrderPolicy::BreadthFirst)?;
    let mut heights: Vec<Vec<Vertex>> = Vec::new();
    for v in g.vertices() {
        let h = tree.height(v).expect("phi returns a spanning tree");
        if heights.len() <= h {
            heights.resize(h + 1, Vec::new());
        }
        heights[h].push(v);
    }
    Ok(WaveComparison { waves: burn.waves, heights })
}

/// `true` iff the `i`-th burning wave is exactly the height-`i` class of
/// `phi(g, b, bf)` for every `i`.
pub fn burning_waves_match_heights(g: &Multigraph, b: &ParkingCandidate) -> Result<bool> {
    compare_waves_and_heights(g, b).map(|c| c.matches())
}

/// A total order on the undirected edges `{i, j}` of a simple symmetric
/// graph, given by distinct ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedEdgeOrder {
    rank: BTreeMap<(Vertex, Vertex), u64>,
}

fn pair(i: Vertex, j: Vertex) -> (Vertex, Vertex) {
    (i.min(j), i.max(j))
}

fn adjacent_pairs(g: &Multigraph) -> Vec<(Vertex, Vertex)> {
    g.vertices()
        .flat_map(|i| (i + 1..g.vertex_count()).map(move |j| (i, j)))
        .filter(|&(i, j)| g.multiplicity(i, j) > 0)
        .collect()
}

/// Symmetric with no parallel edges.
fn check_simple_symmetric(g: &Multigraph) -> Result<()> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    match adjacent_pairs(g).into_iter().find(|&(i, j)| g.multiplicity(i, j) > 1) {
        Some((i, j)) => Err(Error::ParallelEdges(i, j)),
        None => Ok(()),
    }
}

impl UndirectedEdgeOrder {
    /// Pairs `{i < j}` ranked lexicographically: `0-1 < 0-2 < ... < 1-2 < ...`.
    pub fn lex(g: &Multigraph) -> Self {
        let rank = adjacent_pairs(g).into_iter().zip(0u64..).collect();
        UndirectedEdgeOrder { rank }
    }

    /// The reverse of [`UndirectedEdgeOrder::lex`].
    pub fn reverse_lex(g: &Multigraph) -> Self {
        let pairs = adjacent_pairs(g);
        let top = pairs.len() as u64;
        let rank = pairs.into_iter().zip(0u64..).map(|(p, r)| (p, top - 1 - r)).collect();
        UndirectedEdgeOrder { rank }
    }

    /// Checks that the ranks are distinct and cover exactly the adjacent
    /// pairs of `g`.
    pub fn from_ranks<I>(g: &Multigraph, ranks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, Vertex, Vertex)>,
    {
        let mut rank = BTreeMap::new();
        let mut used = std::collections::BTreeSet::new();
        for (r, i, j) in ranks {
            if i == j || g.multiplicity(i, j) == 0 {
                return Err(Error::EdgeOrder(format!("{i}-{j} is not an edge")));
            }
            if !used.insert(r) {
                return Err(Error::EdgeOrder(format!("rank {r} used twice")));
            }
            if rank.insert(pair(i, j), r).is_some() {
                return Err(Error::EdgeOrder(format!("edge {i}-{j} ranked twice")));
            }
        }
        if let Some((i, j)) = adjacent_pairs(g).into_iter().find(|p| !rank.contains_key(p)) {
            return Err(Error::EdgeOrder(format!("edge {i}-{j} has no rank")));
        }
        Ok(UndirectedEdgeOrder { rank })
    }

    /// Parses `rank R I J` lines, with `#` comments.
    pub fn parse(g: &Multigraph, text: &str) -> Result<Self> {
        let mut ranks = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = || Error::Parse { line: idx + 1, msg: "expected `rank R I J`".into() };
            let mut words = line.split_whitespace();
            if words.next() != Some("rank") {
                return Err(err());
            }
            let nums: Vec<u64> = words.map(|w| w.parse().map_err(|_| err())).collect::<Result<_>>()?;
            let [r, i, j] = nums[..] else { return Err(err()) };
            ranks.push((r, i as Vertex, j as Vertex));
        }
        Self::from_ranks(g, ranks)
    }

    pub fn rank(&self, i: Vertex, j: Vertex) -> Option<u64> {
        self.rank.get(&pair(i, j)).copied()
    }

    /// Edges from smallest to largest.
    pub fn sorted_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut edges: Vec<_> = self.rank.iter().map(|(&p, &r)| (r, p)).collect();
        edges.sort_unstable();
        edges.into_iter().map(|(_, p)| p).collect()
    }
}

impl fmt::Display for UndirectedEdgeOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in self.sorted_edges() {
            writeln!(f, "rank {} {i} {j}", self.rank[&(i, j)])?;
        }
        Ok(())
    }
}

/// Vertices from `v` up to the root, `v` first.
fn ancestors(t: &RootedTree, v: Vertex) -> Vec<Vertex> {
    let mut out = vec![v];
    let mut cur = v;
    while let Some(p) = t.parent(cur) {
        out.push(p);
        cur = p;
    }
    out
}

/// Number of non-tree edges that are the smallest edge on the unique cycle
/// they close with `t`. The graph is read as undirected.
pub fn external_activity(g: &Multigraph, t: &RootedTree, ord: &UndirectedEdgeOrder) -> Result<usize> {
    check_simple_symmetric(g)?;
    if t.vertex_count() != g.vertex_count() || !t.is_spanning() {
        return Err(Error::NotSpanning);
    }
    let in_tree = |i: Vertex, j: Vertex| t.parent(i) == Some(j) || t.parent(j) == Some(i);
    let mut active = 0;
    for (i, j) in adjacent_pairs(g) {
        if in_tree(i, j) {
            continue;
        }
        let rank = ord.rank(i, j).ok_or_else(|| Error::EdgeOrder(format!("edge {i}-{j} has no rank")))?;
        let up_i = ancestors(t, i);
        let up_j = ancestors(t, j);
        let meet = *up_i.iter().find(|v| up_j.contains(v)).expect("both paths end at the root");
        let mut cycle_min = u64::MAX;
        for side in [&up_i, &up_j] {
            for w in side.windows(2).take_while(|w| w[0] != meet) {
                cycle_min = cycle_min.min(ord.rank(w[0], w[1]).expect("tree edges are graph edges"));
            }
        }
        if rank < cycle_min {
            active += 1;
        }
    }
    Ok(active)
}

/// Grows a path from the root, each time extending the far end by its
/// smallest edge to an unvisited vertex.
pub fn greedy_min_path(g: &Multigraph, ord: &UndirectedEdgeOrder) -> Result<RootedTree> {
    check_simple_symmetric(g)?;
    let mut tree = RootedTree::singleton(g.vertex_count());
    let mut end = ROOT;
    while !tree.is_spanning() {
        let next = g
            .vertices()
            .filter(|&w| !tree.contains(w) && g.multiplicity(end, w) > 0)
            .min_by_key(|&w| ord.rank(end, w))
            .ok_or(Error::NoExtension(end))?;
        tree = tree.with_edge(EdgeRef::new(next, end, 0));
        end = next;
    }
    Ok(tree)
}

/// Spanning tree of `K_{n+1}` along the path `0 - seq[0] - seq[1] - ...`.
pub fn path_tree(g: &Multigraph, seq: &[Vertex]) -> Result<RootedTree> {
    let mut prev = ROOT;
    let mut edges = Vec::with_capacity(seq.len());
    for &v in seq {
        edges.push(EdgeRef::new(v, prev, 0));
        prev = v;
    }
    RootedTree::from_parent_edges(g, edges)
}

/// Outcome of [`separation_experiment`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    pub n: usize,
    pub hamiltonian_paths: usize,
    pub policies: Vec<String>,
    /// `(policy, path)` pairs where `theta` did not give a permutation of
    /// `0..n`.
    pub permutation_failures: Vec<(String, RootedTree)>,
    pub greedy_path: RootedTree,
    pub greedy_activity: usize,
    /// A Hamiltonian path with positive activity, and that activity.
    pub active_witness: Option<(RootedTree, usize)>,
}

impl SeparationReport {
    /// Every Hamiltonian path maps to a permutation, the greedy path has
    /// activity 0, and some other path has positive activity.
    pub fn holds(&self) -> bool {
        self.permutation_failures.is_empty() && self.greedy_activity == 0 && self.active_witness.is_some()
    }
}

impl fmt::Display for SeparationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        writeln!(f, "hamiltonian paths {}", self.hamiltonian_paths)?;
        writeln!(f, "policies {}", self.policies.join(" "))?;
        writeln!(f, "theta gives a permutation on every path: {}", self.permutation_failures.is_empty())?;
        for (p, t) in &self.permutation_failures {
            writeln!(f, "  failure {p}: [{}]", t.compact())?;
        }
        writeln!(f, "greedy path [{}] activity {}", self.greedy_path.compact(), self.greedy_activity)?;
        match &self.active_witness {
            Some((t, a)) => writeln!(f, "active path [{}] activity {a}", t.compact())?,
            None => writeln!(f, "no path with positive activity")?,
        }
        write!(f, "separation {}", if self.holds() { "holds" } else { "FAILS" })
    }
}

/// Rearranges `v` into its next lexicographic permutation; `false` after
/// the last one.
fn next_permutation(v: &mut [Vertex]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("v[i] qualifies");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// On `K_{n+1}` with the lexicographic edge order: checks that every
/// built-in policy sends every Hamiltonian path from the root to a
/// permutation of `0..n`, and contrasts the external activity of the greedy
/// path with that of the other paths.
pub fn separation_experiment(n: usize) -> Result<SeparationReport> {
    let g = Multigraph::complete(n);
    let ord = UndirectedEdgeOrder::lex(&g);
    let policies = OrderPolicy::builtins();
    let greedy_path = greedy_min_path(&g, &ord)?;
    let greedy_activity = external_activity(&g, &greedy_path, &ord)?;
    let identity: Vec<usize> = (0..n).collect();

    let mut report = SeparationReport {
        n,
        hamiltonian_paths: 0,
        policies: policies.iter().map(OrderPolicy::name).collect(),
        permutation_failures: Vec::new(),
        greedy_path,
        greedy_activity,
        active_witness: None,
    };
    let mut seq: Vec<Vertex> = (1..=n).collect();
    loop {
        let t = path_tree(&g, &seq)?;
        report.hamiltonian_paths += 1;
        for p in &policies {
            let mut b = theta(&g, &t, p)?.into_values();
            b.sort_unstable();
            if b != identity {
                report.permutation_failures.push((p.name(), t.clone()));
            }
        }
        if report.active_witness.is_none() {
            let a = external_activity(&g, &t, &ord)?;
            if a > 0 {
                report.active_witness = Some((t, a));
            }
        }
        if !next_permutation(&mut seq) {
            break;
        }
    }
    Ok(report)
}
