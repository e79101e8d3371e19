//! Covers of punctured spheres as glued standard blocks, and the move
//! groupoid acting on their presentations.

pub mod block;
pub mod graph;

pub use block::{block_iso, can_glue, StandardBlock};
pub use graph::{load_cover, load_moves, CanonMap, Cut, Endpoint, FusionTrace, GluingGraph, Move};
