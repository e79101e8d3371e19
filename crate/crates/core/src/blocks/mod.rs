//! Conformal-block spaces over category data: fusion-tree bases, the
//! structural isomorphisms between them, and the axiom checker.

pub mod axioms;
pub mod matrix;
pub mod ops;
pub mod space;

pub use axioms::check_ms_axioms;
pub use matrix::Matrix;
pub use ops::{
    action_map, braiding_map, braiding_map_rev, gen_commutativity, gen_commutativity_rev,
    glued_space, gluing_map, fused_commutativity, fused_commutativity_rev, rotation_map,
    rotation_power, BlockMap, GluedSpace, GluedSummand,
};
pub use space::{block_space, BlockSpace, Tree};
