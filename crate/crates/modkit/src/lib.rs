//! Exact algorithms around modular structure of small graphs: modular
//! decomposition, optimal cluster- and interval-modular partitions, the
//! thinness kernel and an exact thinness oracle, simultaneous interval
//! representations, and linear mim-width. Everything emits certificates
//! that re-verify against independent checkers.

pub mod bitset;
pub mod coloring;
pub mod covers;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod interval;
pub mod io;
pub mod mdtree;
pub mod mim_width;
pub mod modular_partition;
pub mod sim_interval;
pub mod thinness;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
