//! Multiplicative approximation of graph partition functions on
//! bounded-degree graphs, via truncated Taylor expansion of the log.
//!
//! The pipeline: enumerate connected induced patterns of the input graph up
//! to a size bound, combine per-pattern weights into inverse power sums of
//! the partition function's roots, and evaluate the truncated log series at
//! the query point. Each supported partition function (independence
//! polynomial and variants, Tutte/Potts, spin systems, edge colorings)
//! plugs in as a weight model.

pub mod budget;
pub mod engine;
pub mod error;
pub mod graph;
pub mod models;
pub mod oracle;
pub mod series;

pub use budget::Budget;
pub use error::{Error, Result};
