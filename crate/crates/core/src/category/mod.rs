//! Skeletal graded fusion data and its coherence checkers.

pub mod checks;
pub mod data;

pub use checks::{check_all, check_g_coherence, check_hexagon, check_pentagon, check_twist};
pub use data::{fusion_dim, CategoryData, LabelId, DEFAULT_CONDUCTOR_LIMIT};
