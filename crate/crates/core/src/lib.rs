//! Fair vertex deletion toolkit.
//!
//! The fair cost of a vertex set `W` is the largest number of `W`-neighbours
//! any single vertex has. This crate provides:
//!
//! * [`graph`]: graphs, fair-cost objectives and the plain-text graph format,
//! * [`formula`]: an MSO₁ formula language with a brute-force evaluator,
//! * [`params`]: twin edges, minimum twin cover and neighbourhood diversity,
//! * [`modec`]: modular decomposition trees,
//! * [`fairvc`]: Fair Vertex Cover by dynamic programming over the modular
//!   decomposition, plus brute-force and branch-and-bound solvers,
//! * [`kernel`]: twin-cover kernelization and model checking,
//! * [`faireval`]: minimum fair-cost evaluation of one-free-variable formulas
//!   via shapes,
//! * [`reductions`]: generators for the multicolored-clique and bin-packing
//!   hardness constructions.

pub mod bits;
pub mod error;
pub mod faireval;
pub mod fairvc;
pub mod families;
pub mod formula;
pub mod graph;
pub mod kernel;
pub mod modec;
pub mod params;
pub mod reductions;

pub use error::{Error, Result};
pub use formula::{Formula, Interpretation};
pub use graph::{Graph, LabeledGraph, VertexSet};
