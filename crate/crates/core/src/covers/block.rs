//! Standard blocks: the distinguished covers of holed spheres.
//!
//! A block carries an ordered tuple of group elements g with trivial
//! product (the cut data of the cover) and a tuple h of marked-point
//! lifts, one per boundary circle. Boundaries are indexed from 0 in code;
//! the file format uses 1-based indices.

use crate::algebra::{FiniteGroup, GElem};
use crate::error::{DataError, DataResult, OpError, OpResult};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardBlock {
    pub g: Vec<GElem>,
    pub h: Vec<GElem>,
}

impl StandardBlock {
    pub fn new(grp: &FiniteGroup, g: Vec<GElem>, h: Vec<GElem>) -> DataResult<Self> {
        if g.len() != h.len() {
            return Err(DataError::Invariant("block g and h tuples differ in length".into()));
        }
        for &x in g.iter().chain(h.iter()) {
            if x >= grp.order() {
                return Err(DataError::Invariant("block element index out of range".into()));
            }
        }
        if grp.product(&g) != grp.identity() {
            return Err(DataError::Invariant(
                "block cut data must multiply to the identity".into(),
            ));
        }
        Ok(StandardBlock { g, h })
    }

    pub fn boundaries(&self) -> usize {
        self.g.len()
    }

    /// Monodromy around boundary i: h_i · g_i⁻¹ · h_i⁻¹.
    pub fn monodromy(&self, grp: &FiniteGroup, i: usize) -> OpResult<GElem> {
        if i >= self.g.len() {
            return Err(OpError::Index(format!(
                "boundary {i} of a block with {} boundaries",
                self.g.len()
            )));
        }
        Ok(grp.mul(grp.mul(self.h[i], grp.inv(self.g[i])), grp.inv(self.h[i])))
    }
}

/// Two boundaries can be glued exactly when their monodromies are inverse.
pub fn can_glue(
    grp: &FiniteGroup,
    b1: &StandardBlock,
    i: usize,
    b2: &StandardBlock,
    j: usize,
) -> OpResult<bool> {
    let m1 = b1.monodromy(grp, i)?;
    let m2 = b2.monodromy(grp, j)?;
    Ok(grp.mul(m1, m2) == grp.identity())
}

/// The unique relabeling x with x·g·x⁻¹ and h·x⁻¹ matching the second
/// block, if one exists. Nonempty blocks force x from the first marked
/// lift; empty blocks are related by the identity.
pub fn block_iso(grp: &FiniteGroup, b1: &StandardBlock, b2: &StandardBlock) -> Option<GElem> {
    if b1.boundaries() != b2.boundaries() {
        return None;
    }
    if b1.boundaries() == 0 {
        return Some(grp.identity());
    }
    // h'_1 = h_1 x⁻¹ forces x = h'_1⁻¹ h_1.
    let x = grp.mul(grp.inv(b2.h[0]), b1.h[0]);
    for i in 0..b1.boundaries() {
        if grp.conj(x, b1.g[i]) != b2.g[i] {
            return None;
        }
        if grp.mul(b1.h[i], grp.inv(x)) != b2.h[i] {
            return None;
        }
    }
    Some(x)
}
