//! Recognition and enumeration of G-parking functions.
//!
//! A vector `b_1..b_n` is a G-parking function when every non-empty set `U`
//! of non-root vertices contains some `j` with more than `b_j` edges leaving
//! `U`. Two independent recognisers are provided: the subset definition
//! itself (exponential) and the burning algorithm.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::multigraph::{Multigraph, Vertex, ROOT};

/// A candidate `b_1..b_n`; `values()[j - 1]` belongs to vertex `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ParkingCandidate(Vec<usize>);

impl ParkingCandidate {
    pub fn new(values: Vec<usize>) -> Self {
        ParkingCandidate(values)
    }

    pub fn zeros(n: usize) -> Self {
        ParkingCandidate(vec![0; n])
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn into_values(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `b_j` for a non-root vertex `j`.
    pub fn get(&self, j: Vertex) -> usize {
        self.0[j - 1]
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub(crate) fn check_len(&self, g: &Multigraph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::LengthMismatch { expected: g.n(), got: self.len() });
        }
        Ok(())
    }
}

impl From<Vec<usize>> for ParkingCandidate {
    fn from(values: Vec<usize>) -> Self {
        ParkingCandidate(values)
    }
}

impl fmt::Display for ParkingCandidate {
    /// Space-separated values on one line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&words.join(" "))
    }
}

impl FromStr for ParkingCandidate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| Error::Parse { line: 1, msg: format!("expected a non-negative integer, got `{w}`") })
            })
            .collect::<Result<Vec<_>>>()
            .map(ParkingCandidate)
    }
}

/// Edges from `v` into the vertex set `inside`.
fn edges_into(g: &Multigraph, v: Vertex, inside: &[bool]) -> usize {
    g.vertices().filter(|&w| inside[w]).map(|w| g.multiplicity(v, w)).sum()
}

/// Checks the subset definition directly.
///
/// Returns `Ok(None)` for a parking function. Otherwise returns the largest
/// violating set: the union of all violating sets, which itself violates.
pub fn is_parking_definitional(g: &Multigraph, b: &ParkingCandidate) -> Result<Option<Vec<Vertex>>> {
    b.check_len(g)?;
    let n = g.n();
    let mut union = vec![false; n + 1];
    let mut found = false;
    let mut outside = vec![true; n + 1];
    for mask in 1u64..1 << n {
        for (v, out) in outside.iter_mut().enumerate().skip(1) {
            *out = mask & (1 << (v - 1)) == 0;
        }
        let some_leaves = (1..=n).filter(|&j| !outside[j]).any(|j| edges_into(g, j, &outside) > b.get(j));
        if !some_leaves {
            found = true;
            for v in 1..=n {
                union[v] |= !outside[v];
            }
        }
    }
    Ok(found.then(|| (1..=n).filter(|&v| union[v]).collect()))
}

/// Result of the burning algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnReport {
    pub accepted: bool,
    /// `waves[i]` is the set of vertices marked at iteration `i`, ascending;
    /// `waves[0] == [0]`.
    pub waves: Vec<Vec<Vertex>>,
    /// Vertices never marked; empty iff accepted.
    pub stuck: Vec<Vertex>,
}

impl BurnReport {
    /// Iteration at which each vertex burned, `None` for stuck vertices.
    pub fn wave_of(&self, vertex_count: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; vertex_count];
        for (i, wave) in self.waves.iter().enumerate() {
            for &v in wave {
                out[v] = Some(i);
            }
        }
        out
    }
}

/// Burning algorithm: starting from the root, repeatedly mark, all at once,
/// every unmarked `v` with more than `b_v` edges into the marked set.
pub fn is_parking_burning(g: &Multigraph, b: &ParkingCandidate) -> Result<BurnReport> {
    b.check_len(g)?;
    let mut marked = vec![false; g.vertex_count()];
    marked[ROOT] = true;
    let mut waves = vec![vec![ROOT]];
    loop {
        let wave: Vec<Vertex> =
            (1..g.vertex_count()).filter(|&v| !marked[v] && edges_into(g, v, &marked) > b.get(v)).collect();
        if wave.is_empty() {
            break;
        }
        for &v in &wave {
            marked[v] = true;
        }
        waves.push(wave);
    }
    let stuck: Vec<Vertex> = g.vertices().filter(|&v| !marked[v]).collect();
    Ok(BurnReport { accepted: stuck.is_empty(), waves, stuck })
}

/// Every candidate in the box `0 <= b_j < d_j`, in lexicographic order.
///
/// No parking function lies outside the box: the singleton `U = {j}` forces
/// `b_j < d_j`.
pub fn candidate_box(g: &Multigraph) -> impl Iterator<Item = ParkingCandidate> {
    let bounds: Vec<usize> = (1..=g.n()).map(|v| g.out_degree(v)).collect();
    let empty = bounds.contains(&0);
    let mut current = if empty { None } else { Some(vec![0; bounds.len()]) };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        // Odometer with the last coordinate varying fastest.
        let cur = current.as_mut().expect("checked above");
        let mut i = cur.len();
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < bounds[i] {
                break;
            }
            cur[i] = 0;
        }
        Some(ParkingCandidate(out))
    })
}

/// All G-parking functions of `g`, in lexicographic order.
pub fn enumerate_parking_functions(g: &Multigraph) -> Vec<ParkingCandidate> {
    candidate_box(g).filter(|b| is_parking_burning(g, b).map(|r| r.accepted).unwrap_or(false)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(v: &[usize]) -> ParkingCandidate {
        ParkingCandidate::new(v.to_vec())
    }

    #[test]
    fn definitional_examples() {
        let k4 = Multigraph::complete(3);
        assert_eq!(is_parking_definitional(&k4, &pf(&[0, 1, 2])).unwrap(), None);
        assert_eq!(is_parking_definitional(&k4, &pf(&[2, 2, 2])).unwrap(), Some(vec![1, 2, 3]));

        let two = Multigraph::from_edges(2, [(1, 0), (1, 0)]).unwrap();
        assert_eq!(is_parking_definitional(&two, &pf(&[1])).unwrap(), None);
        assert_eq!(is_parking_definitional(&two, &pf(&[2])).unwrap(), Some(vec![1]));

        assert_eq!(is_parking_definitional(&k4, &pf(&[0, 1])), Err(Error::LengthMismatch { expected: 3, got: 2 }));
    }

    #[test]
    fn burning_examples() {
        let tri = Multigraph::complete(2);
        let report = is_parking_burning(&tri, &pf(&[0, 1])).unwrap();
        assert!(report.accepted);
        assert_eq!(report.waves, vec![vec![0], vec![1], vec![2]]);

        let report = is_parking_burning(&tri, &pf(&[1, 1])).unwrap();
        assert!(!report.accepted);
        assert_eq!(report.stuck, vec![1, 2]);
        assert_eq!(report.waves, vec![vec![0]]);

        assert!(is_parking_burning(&tri, &pf(&[1])).is_err());
    }

    #[test]
    fn zero_vector_burns_iff_everything_reaches_root() {
        // 3 -> 2 -> 0, and 1 only points at 3.
        let g = Multigraph::from_edges(4, [(2, 0), (3, 2), (1, 3)]).unwrap();
        let r = is_parking_burning(&g, &ParkingCandidate::zeros(3)).unwrap();
        assert!(r.accepted);
        assert_eq!(r.waves, vec![vec![0], vec![2], vec![3], vec![1]]);

        let cut = Multigraph::from_edges(4, [(2, 0), (3, 2), (1, 3), (3, 1)]).unwrap();
        assert!(is_parking_burning(&cut, &ParkingCandidate::zeros(3)).unwrap().accepted);
        let sink = Multigraph::from_edges(4, [(2, 0), (3, 1), (1, 3)]).unwrap();
        let r = is_parking_burning(&sink, &ParkingCandidate::zeros(3)).unwrap();
        assert_eq!(r.stuck, vec![1, 3]);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_parking_functions(&Multigraph::complete(3)).len(), 16);
        assert_eq!(enumerate_parking_functions(&Multigraph::complete(2)).len(), 3);
        let two = Multigraph::from_edges(2, [(1, 0), (1, 0)]).unwrap();
        assert_eq!(enumerate_parking_functions(&two), vec![pf(&[0]), pf(&[1])]);
        let dead = Multigraph::from_edges(3, [(1, 0)]).unwrap();
        assert!(enumerate_parking_functions(&dead).is_empty());
        assert_eq!(enumerate_parking_functions(&Multigraph::parse("vertices 1").unwrap()), vec![pf(&[])]);
    }

    #[test]
    fn candidate_box_counts() {
        let k4 = Multigraph::complete(3);
        assert_eq!(candidate_box(&k4).count(), 27);
        let first: Vec<_> = candidate_box(&k4).take(4).map(|b| b.to_string()).collect();
        assert_eq!(first, vec!["0 0 0", "0 0 1", "0 0 2", "0 1 0"]);
    }

    #[test]
    fn text_form() {
        let b: ParkingCandidate = " 0 1\t2 ".parse().unwrap();
        assert_eq!(b, pf(&[0, 1, 2]));
        assert_eq!(b.to_string(), "0 1 2");
        assert!("0 -1".parse::<ParkingCandidate>().is_err());
    }
}
