//! Evaluation of labeled covers and the action of presentation moves on
//! the resulting spaces, with relation and path-independence checkers.

pub mod checks;
pub mod moves;
pub mod space;

pub use checks::{
    check_nondegeneracy, check_path_independence, check_relations, PathMoves, RelationBounds,
};
pub use moves::{move_map, path_map, t_action, TauMove};
pub use space::{
    block_labels, cut_channels, load_labeling, tau_dim, tau_space, CoverLabeling, TauKey, TauSpace,
};
