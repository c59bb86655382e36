//! Search and verification toolkit for Euclidean Gallai-Ramsey problems.

mod bits;
pub mod error;
pub mod euclid;
pub mod graph;
pub mod grid;
mod scalar;
pub mod sat;
pub mod search;

pub use error::{Error, Result};
pub use grid::{BipartiteColoring, GridColoring, GridRectangle, VerificationReport};
pub use search::{minimal_forcing_m, search_good_coloring, OutcomeKind, SearchOptions, SearchOutcome};
pub use graph::{EdgeColoring, SubgraphWitness, Target};
pub use sat::CnfDocument;
pub use scalar::Scalar;

/// Double-precision configurations, the default everywhere.
pub type Point = euclid::LabeledPoint<f64>;
pub type Config = euclid::Configuration<f64>;
pub type Point32 = euclid::LabeledPoint<f32>;
pub type Config32 = euclid::Configuration<f32>;
