//! Littlewood–Richardson coefficients of skew Schur functions, computed by
//! counting peelable tableaux on shuffle diagrams, with two independent
//! counting routes for cross-checking.

pub mod bk;
pub mod classical;
pub mod crystal;
pub mod enumerate;
pub mod error;
pub mod logconcave;
pub mod lr;
pub mod partition;
pub mod peelable;
pub mod perf;
pub mod shuffle;
pub mod tableau;
pub mod tl;
pub mod verify;

#[cfg(test)]
pub(crate) mod fixtures;

pub use error::Error;
pub use partition::{Partition, SkewShape};
pub use shuffle::{build_shuffle_diagram, ShuffleDiagram};
pub use tableau::{Cell, Content, Shape, ShapeKind, Tableau};
