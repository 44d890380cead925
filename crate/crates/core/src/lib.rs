//! Red-blue separation in graphs.
//!
//! A set `S` of vertices red-blue separates a colored graph when every red
//! vertex has a code `N[v] ∩ S` different from every blue vertex. This crate
//! computes such sets exactly and approximately, builds them constructively on
//! restricted classes (triangle-free, bounded degree, trees), generates the
//! extremal families and hardness reductions around the problem, and checks
//! the known bounds between sep_RB, maxsep_RB, sep and γ.

pub mod approx;
pub mod bitset;
pub mod cli;
pub mod error;
pub mod exact;
pub mod experiment;
pub mod generators;
pub mod graph;
pub mod io;
pub mod report;
pub mod trees;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Color, Coloring, Graph, Verdict};
