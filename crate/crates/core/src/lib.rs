//! gblocks: exact verification of group-graded fusion data and the block
//! isomorphisms it induces on genus-zero covers.
//!
//! The crate has three layers. `algebra` and `category` hold the raw data:
//! finite groups, cyclotomic scalars, and skeletal graded fusion data
//! (labels, fusion rules, F/R/U symbols, twists) with exhaustive coherence
//! checkers. `blocks` realizes the structural isomorphisms between
//! conformal-block spaces (rotation, braiding, gluing, group action) as
//! exact matrices in fusion-tree bases and verifies their axiom system.
//! `covers` and `tau` model principal covers of punctured spheres as glued
//! standard blocks, realize the five moves between presentations as block
//! maps, and check every move relation and path independence at small size.
//! `roundtrip` reconstructs the fusion data back from block dimensions and
//! maps, closing the loop.
//!
//! Everything is exact: scalars live in Q(ζ_N) and every axiom check is an
//! exact matrix identity; there is no floating point anywhere.

pub mod algebra;
pub mod blocks;
pub mod category;
pub mod covers;
pub mod error;
pub mod report;
pub mod roundtrip;
pub mod tau;

pub use algebra::{Cyclotomic, FiniteGroup, GElem};
pub use category::{CategoryData, LabelId};
pub use error::{DataError, OpError};
pub use report::CheckReport;
