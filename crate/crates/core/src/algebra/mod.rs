//! Finite-group and exact cyclotomic scalar arithmetic.

pub mod cyclo;
pub mod group;

pub use cyclo::{euler_phi, Cyclotomic};
pub use group::{FiniteGroup, GElem, GroupSpec};
