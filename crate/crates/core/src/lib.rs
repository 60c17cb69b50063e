//! Parking functions on directed multigraphs and their bijections with
//! rooted spanning trees.
//!
//! Vertex `0` is the root. A [`Multigraph`] on vertices `0..=n` carries
//! candidate vectors `b_1..b_n` ([`ParkingCandidate`]); [`theta`] and [`phi`]
//! translate between spanning trees oriented toward the root and parking
//! functions, parametrised by an [`OrderPolicy`].

pub mod bijection;
pub mod classical;
pub mod enumeration;
pub mod error;
pub mod multigraph;
pub mod parking;
pub mod sandpile;
pub mod treeorder;

pub use bijection::{phi, theta, verify_bijection, BijectionReport, PhiStep, PhiTrace};
pub use enumeration::{count_spanning_trees, enumerate_spanning_trees, enumerate_subtrees};
pub use error::{Error, Result};
pub use multigraph::{EdgeRef, Multigraph, Vertex, ROOT};
pub use parking::{
    enumerate_parking_functions, is_parking_burning, is_parking_definitional, BurnReport, ParkingCandidate,
};
pub use treeorder::{OrderPolicy, PathComparator, RootedTree, TableOrder, TreePath};
