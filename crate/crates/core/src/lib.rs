//! Exact counting of arborescences, spanning trees and Eulerian tours of
//! directed multigraphs, the extremal orientations that bound them, and
//! exhaustive verification of those bounds on small instances.
//!
//! All arithmetic is exact: determinants run fraction-free over big
//! integers and bounds are compared as rationals (or squared rationals when
//! the bound involves a square root).

pub mod bounds;
pub mod construct;
pub mod counting;
pub mod error;
pub mod format;
pub mod graph;
pub mod iso;
pub mod linalg;
pub mod report;
pub mod search;

pub use bounds::{BoundId, BoundReport};
pub use counting::{CountResult, Method, Quantity};
pub use error::{Error, Result};
pub use format::GraphFile;
pub use graph::{DirectedMultigraph, UndirectedMultigraph};
pub use linalg::{IntMatrix, IntPolynomial};
pub use search::{Objective, Scope, SearchConfig, SearchResult, TheoremId, TheoremReport};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
