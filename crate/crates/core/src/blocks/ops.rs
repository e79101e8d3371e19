//! The structural isomorphisms between block spaces, as exact matrices.
//!
//! All maps are expressed in the canonical fusion-tree bases of
//! `block_space`. Matrix entries are indexed target-row by source-column,
//! so composing maps is plain matrix multiplication.

use crate::algebra::Cyclotomic;
use crate::category::{CategoryData, LabelId};
use crate::error::{OpError, OpResult};

use super::matrix::Matrix;
use super::space::{block_space, BlockSpace, Tree};

/// An invertible map between two block spaces in their canonical bases.
#[derive(Debug, Clone)]
pub struct BlockMap {
    pub source: BlockSpace,
    pub target: BlockSpace,
    pub matrix: Matrix,
}

impl BlockMap {
    /// Composes `self` after `first` (so `first` applies first).
    pub fn after(&self, first: &BlockMap) -> BlockMap {
        assert_eq!(
            first.target.labels, self.source.labels,
            "composition of block maps with mismatched spaces"
        );
        BlockMap {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix),
        }
    }

    pub fn inverse(&self) -> OpResult<BlockMap> {
        Ok(BlockMap {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix: self.matrix.inverse()?,
        })
    }

    pub fn identity(cat: &CategoryData, space: &BlockSpace) -> BlockMap {
        BlockMap {
            source: space.clone(),
            target: space.clone(),
            matrix: Matrix::identity(space.dim(), cat.conductor),
        }
    }
}

fn rotated(labels: &[LabelId]) -> Vec<LabelId> {
    if labels.is_empty() {
        return Vec::new();
    }
    let n = labels.len();
    let mut out = Vec::with_capacity(n);
    out.push(labels[n - 1]);
    out.extend_from_slice(&labels[..n - 1]);
    out
}

/// Rotation: moves the last label to the front. The matrix entry for a
/// source tree u and a target tree w is the bending scalar of the moved
/// label times a chain of inverse F coefficients re-combing the tree.
pub fn rotation_map(cat: &CategoryData, labels: &[LabelId]) -> BlockMap {
    (*rotation_map_shared(cat, labels)).clone()
}

/// Memoized rotation; hot paths keep the Arc.
pub fn rotation_map_shared(cat: &CategoryData, labels: &[LabelId]) -> std::sync::Arc<BlockMap> {
    if let Some(m) = cat.caches().rotations.read().unwrap().get(labels) {
        return m.clone();
    }
    let built = std::sync::Arc::new(build_rotation(cat, labels));
    cat.caches()
        .rotations
        .write()
        .unwrap()
        .entry(labels.to_vec())
        .or_insert(built)
        .clone()
}

fn build_rotation(cat: &CategoryData, labels: &[LabelId]) -> BlockMap {
    let source = block_space(cat, labels);
    let target = block_space(cat, &rotated(labels));
    let n = labels.len();
    let mut matrix = Matrix::zero(target.dim(), source.dim(), cat.conductor);
    if n == 0 {
        matrix = Matrix::identity(1, cat.conductor);
        return BlockMap { source, target, matrix };
    }
    let last = labels[n - 1];
    let bend = cat.pivot(last);
    for (si, u) in source.trees.iter().enumerate() {
        for (ti, w) in target.trees.iter().enumerate() {
            let mut coeff = bend.clone();
            for k in 2..n {
                let factor = cat.f_inv(last, u[k - 2], labels[k - 1], w[k], u[k - 1], w[k - 1]);
                if factor.is_zero() {
                    coeff = Cyclotomic::zero(cat.conductor);
                    break;
                }
                coeff = coeff.mul(&factor);
            }
            if !coeff.is_zero() {
                matrix.set(ti, si, coeff);
            }
        }
    }
    BlockMap { source, target, matrix }
}

/// k-fold rotation.
pub fn rotation_power(cat: &CategoryData, labels: &[LabelId], k: usize) -> BlockMap {
    let mut map = BlockMap::identity(cat, &block_space(cat, labels));
    let mut current = labels.to_vec();
    for _ in 0..k {
        let step = rotation_map(cat, &current);
        current = step.target.labels.clone();
        map = step.after(&map);
    }
    map
}

/// Braiding of the last two labels of a three-label space:
/// (x, a, b) → (x, deg(a)·b, a). Fuse the pair, braid the channel, unfuse.
pub fn braiding_map(cat: &CategoryData, labels: &[LabelId]) -> OpResult<BlockMap> {
    if labels.len() != 3 {
        return Err(OpError::Arity(format!(
            "braiding needs exactly three labels, got {}",
            labels.len()
        )));
    }
    let (x, a, b) = (labels[0], labels[1], labels[2]);
    let tb = cat.act(cat.deg(a), b);
    let target_labels = vec![x, tb, a];
    let source = block_space(cat, labels);
    let target = block_space(cat, &target_labels);
    let mut matrix = Matrix::zero(target.dim(), source.dim(), cat.conductor);
    let channel = cat.dual(x);
    for (si, u) in source.trees.iter().enumerate() {
        for (ti, w) in target.trees.iter().enumerate() {
            let coeff = cat
                .f(x, a, b, cat.unit(), u[1], channel)
                .mul(&cat.r(a, b, channel))
                .mul(&cat.f_inv(x, tb, a, cat.unit(), channel, w[1]));
            if !coeff.is_zero() {
                matrix.set(ti, si, coeff);
            }
        }
    }
    Ok(BlockMap { source, target, matrix })
}

/// Reverse braiding of the last two labels: (x, a, b) → (x, b, q̄·a) with
/// q̄ the inverse degree of b; the inverse of the forward braid that would
/// send the target back to the source.
pub fn braiding_map_rev(cat: &CategoryData, labels: &[LabelId]) -> OpResult<BlockMap> {
    if labels.len() != 3 {
        return Err(OpError::Arity(format!(
            "braiding needs exactly three labels, got {}",
            labels.len()
        )));
    }
    let (x, a, b) = (labels[0], labels[1], labels[2]);
    let qa = cat.act(cat.group.inv(cat.deg(b)), a);
    let forward = braiding_map(cat, &[x, b, qa])?;
    debug_assert_eq!(forward.target.labels, labels);
    forward.inverse()
}

/// Group action on a block space: applies g to every label and every
/// intermediate, scaling each tree by the product of vertex coefficients.
pub fn action_map(cat: &CategoryData, labels: &[LabelId], g: crate::algebra::GElem) -> BlockMap {
    let source = block_space(cat, labels);
    let target_labels: Vec<LabelId> = labels.iter().map(|&a| cat.act(g, a)).collect();
    let target = block_space(cat, &target_labels);
    let n = labels.len();
    let mut matrix = Matrix::zero(target.dim(), source.dim(), cat.conductor);
    for (si, u) in source.trees.iter().enumerate() {
        let moved: Tree = u.iter().map(|&l| cat.act(g, l)).collect();
        let ti = target.tree_index(&moved).expect("action permutes fusion trees");
        let mut coeff = Cyclotomic::one(cat.conductor);
        if !cat.action_coefficients_trivial() {
            for i in 1..n {
                coeff = coeff.mul(&cat.u(g, u[i - 1], labels[i], u[i]));
            }
        }
        matrix.set(ti, si, coeff);
    }
    if n == 0 {
        matrix = Matrix::identity(1, cat.conductor);
    }
    BlockMap { source, target, matrix }
}

/// One summand of a glued space: a channel label V with the two factor
/// spaces it pairs, ⟨A…, V*, C…⟩ and ⟨V, B…⟩.
#[derive(Debug, Clone)]
pub struct GluedSummand {
    pub channel: LabelId,
    pub left: BlockSpace,
    pub right: BlockSpace,
}

/// Direct sum over channels of tensor products of two block spaces; the
/// source of a gluing map. Basis order: channel ascending, then left tree
/// major, right tree minor.
#[derive(Debug, Clone)]
pub struct GluedSpace {
    pub a_labels: Vec<LabelId>,
    pub b_labels: Vec<LabelId>,
    pub c_labels: Vec<LabelId>,
    pub summands: Vec<GluedSummand>,
}

impl GluedSpace {
    pub fn dim(&self) -> usize {
        self.summands.iter().map(|s| s.left.dim() * s.right.dim()).sum()
    }

    /// Flat basis index of (summand, left tree, right tree).
    pub fn index(&self, summand: usize, li: usize, ri: usize) -> usize {
        let mut base = 0;
        for s in &self.summands[..summand] {
            base += s.left.dim() * s.right.dim();
        }
        base + li * self.summands[summand].right.dim() + ri
    }

    pub fn summand_by_channel(&self, v: LabelId) -> Option<usize> {
        self.summands.iter().position(|s| s.channel == v)
    }
}

/// Builds the glued space ⊕_V ⟨A…, V*, C…⟩ ⊗ ⟨V, B…⟩, keeping only
/// channels where both factors are nonzero. The grading forces the
/// channel degree, so only labels in one degree class are scanned.
pub fn glued_space(cat: &CategoryData, a: &[LabelId], b: &[LabelId], c: &[LabelId]) -> GluedSpace {
    let grp = &cat.group;
    let prod = |ls: &[LabelId]| ls.iter().fold(grp.identity(), |acc, &l| grp.mul(acc, cat.deg(l)));
    let want_right = grp.inv(prod(b));
    let want_left = grp.mul(prod(c), prod(a));
    let mut summands = Vec::new();
    if want_right != want_left {
        return GluedSpace {
            a_labels: a.to_vec(),
            b_labels: b.to_vec(),
            c_labels: c.to_vec(),
            summands,
        };
    }
    for v in cat.labels() {
        if cat.deg(v) != want_right {
            continue;
        }
        let mut left_labels = a.to_vec();
        left_labels.push(cat.dual(v));
        left_labels.extend_from_slice(c);
        let left = block_space(cat, &left_labels);
        if left.dim() == 0 {
            continue;
        }
        let mut right_labels = vec![v];
        right_labels.extend_from_slice(b);
        let right = block_space(cat, &right_labels);
        if right.dim() == 0 {
            continue;
        }
        summands.push(GluedSummand { channel: v, left, right });
    }
    GluedSpace {
        a_labels: a.to_vec(),
        b_labels: b.to_vec(),
        c_labels: c.to_vec(),
        summands,
    }
}

/// The gluing isomorphism ⊕_V ⟨A…, V*, C…⟩ ⊗ ⟨V, B…⟩ → ⟨A…, B…, C…⟩.
///
/// With no suffix the map is tree concatenation along the channel; a
/// nonempty suffix is handled by conjugating with rotations that carry the
/// suffix out of the way and back.
pub fn gluing_map(
    cat: &CategoryData,
    a: &[LabelId],
    b: &[LabelId],
    c: &[LabelId],
) -> (GluedSpace, BlockSpace, Matrix) {
    let shared = gluing_map_shared(cat, a, b, c);
    (shared.0.clone(), shared.1.clone(), shared.2.clone())
}

/// Memoized gluing; hot paths keep the Arc.
pub fn gluing_map_shared(
    cat: &CategoryData,
    a: &[LabelId],
    b: &[LabelId],
    c: &[LabelId],
) -> std::sync::Arc<(GluedSpace, BlockSpace, Matrix)> {
    let key = (a.to_vec(), b.to_vec(), c.to_vec());
    if let Some(m) = cat.caches().gluings.read().unwrap().get(&key) {
        return m.clone();
    }
    let built = std::sync::Arc::new(build_gluing(cat, a, b, c));
    cat.caches().gluings.write().unwrap().entry(key).or_insert(built).clone()
}

fn build_gluing(
    cat: &CategoryData,
    a: &[LabelId],
    b: &[LabelId],
    c: &[LabelId],
) -> (GluedSpace, BlockSpace, Matrix) {
    let source = glued_space(cat, a, b, c);
    let mut full = a.to_vec();
    full.extend_from_slice(b);
    full.extend_from_slice(c);
    let target = block_space(cat, &full);

    if c.is_empty() {
        let tindex = target.index_map();
        let mut matrix = Matrix::zero(target.dim(), source.dim(), cat.conductor);
        let k = a.len();
        for (sidx, summand) in source.summands.iter().enumerate() {
            for (li, t1) in summand.left.trees.iter().enumerate() {
                for (ri, t2) in summand.right.trees.iter().enumerate() {
                    let mut w: Tree = t1[..k].to_vec();
                    w.extend_from_slice(&t2[1..]);
                    let ti = *tindex.get(&w).expect("concatenated tree is admissible");
                    matrix.set(ti, source.index(sidx, li, ri), Cyclotomic::one(cat.conductor));
                }
            }
        }
        return (source, target, matrix);
    }

    let m = c.len();
    // Step 1: rotate the suffix of every left factor to the front.
    let mut ca = c.to_vec();
    ca.extend_from_slice(a);
    let inner = glued_space(cat, &ca, b, &[]);
    let mut step1 = Matrix::zero(inner.dim(), source.dim(), cat.conductor);
    for (sidx, summand) in source.summands.iter().enumerate() {
        let iidx = inner.summand_by_channel(summand.channel).expect("rotation preserves channels");
        let rot = rotation_power(cat, &summand.left.labels, m);
        debug_assert_eq!(rot.target.labels, inner.summands[iidx].left.labels);
        for li in 0..summand.left.dim() {
            for ri in 0..summand.right.dim() {
                let src = source.index(sidx, li, ri);
                for lt in 0..rot.target.dim() {
                    let v = rot.matrix.get(lt, li);
                    if v.is_zero() {
                        continue;
                    }
                    step1.set(inner.index(iidx, lt, ri), src, v.clone());
                }
            }
        }
    }
    // Step 2: plain concatenation on ⟨C, A, V*⟩ ⊗ ⟨V, B⟩.
    let (_, mid_target, step2) = gluing_map(cat, &ca, b, &[]);
    // Step 3: undo the rotation on the full space: the inverse of the
    // m-fold rotation ⟨A,B,C⟩ → ⟨C,A,B⟩.
    let rot_full = rotation_power(cat, &full, m);
    debug_assert_eq!(rot_full.target.labels, mid_target.labels);
    let step3 = rot_full.matrix.inverse().expect("rotation is invertible");
    let matrix = step3.mul(&step2).mul(&step1);
    (source, target, matrix)
}

/// Generalized commutativity: swaps the adjacent pair at `pos`, twisting
/// the right label by the degree of the left one. Defined by cutting the
/// pair out, braiding it inside a three-label space, and gluing back.
pub fn gen_commutativity(cat: &CategoryData, labels: &[LabelId], pos: usize) -> OpResult<BlockMap> {
    commutativity_impl(cat, labels, pos, false)
}

/// Reverse generalized commutativity: swaps the pair at `pos` using the
/// inverse braiding, twisting the left label by the inverse degree of the
/// right one.
pub fn gen_commutativity_rev(cat: &CategoryData, labels: &[LabelId], pos: usize) -> OpResult<BlockMap> {
    commutativity_impl(cat, labels, pos, true)
}

fn commutativity_impl(
    cat: &CategoryData,
    labels: &[LabelId],
    pos: usize,
    reverse: bool,
) -> OpResult<BlockMap> {
    if pos + 1 >= labels.len() {
        return Err(OpError::Index(format!(
            "no adjacent pair at position {pos} in a {}-label space",
            labels.len()
        )));
    }
    let x = labels[pos];
    let y = labels[pos + 1];
    let a = &labels[..pos];
    let c = &labels[pos + 2..];
    let source_space = block_space(cat, labels);

    let (glued_src, target_of_g1, g1) = gluing_map(cat, a, &[x, y], c);
    debug_assert_eq!(target_of_g1.labels, labels);
    let g1_inv = g1.inverse().map_err(|_| OpError::Other("gluing map not invertible".into()))?;

    // Braid inside each summand's right factor ⟨V, x, y⟩.
    let (tx, ty) = if reverse {
        (y, cat.act(cat.group.inv(cat.deg(y)), x))
    } else {
        (cat.act(cat.deg(x), y), x)
    };
    let glued_dst = glued_space(cat, a, &[tx, ty], c);
    let mut braid = Matrix::zero(glued_dst.dim(), glued_src.dim(), cat.conductor);
    for (sidx, summand) in glued_src.summands.iter().enumerate() {
        let didx = match glued_dst.summand_by_channel(summand.channel) {
            Some(i) => i,
            None => continue,
        };
        let inner = if reverse {
            braiding_map_rev(cat, &summand.right.labels)?
        } else {
            braiding_map(cat, &summand.right.labels)?
        };
        debug_assert_eq!(inner.target.labels, glued_dst.summands[didx].right.labels);
        for li in 0..summand.left.dim() {
            for ri in 0..summand.right.dim() {
                let src = glued_src.index(sidx, li, ri);
                for rt in 0..inner.target.dim() {
                    let v = inner.matrix.get(rt, ri);
                    if v.is_zero() {
                        continue;
                    }
                    braid.set(glued_dst.index(didx, li, rt), src, v.clone());
                }
            }
        }
    }

    let (_, target_space, g2) = gluing_map(cat, a, &[tx, ty], c);
    let matrix = g2.mul(&braid).mul(&g1_inv);
    let mut target_labels = a.to_vec();
    target_labels.push(tx);
    target_labels.push(ty);
    target_labels.extend_from_slice(c);
    debug_assert_eq!(target_space.labels, target_labels);
    Ok(BlockMap { source: source_space, target: target_space, matrix })
}

/// Commutativity of one label past a fused adjacent pair:
/// ⟨x, a, b, c⟩ → ⟨x, p·b, p·c, a⟩ with p the degree of a. The pair (b, c)
/// is cut out as a single channel, the channel is braided past a, the
/// twisted channel is re-expressed, and the pair is glued back.
pub fn fused_commutativity(cat: &CategoryData, labels: &[LabelId]) -> OpResult<BlockMap> {
    if labels.len() != 4 {
        return Err(OpError::Arity("fused commutativity needs four labels".into()));
    }
    let (x, a, b, c) = (labels[0], labels[1], labels[2], labels[3]);
    let p = cat.deg(a);
    let source_space = block_space(cat, labels);

    let (glued_src, tgt, g1) = gluing_map(cat, &[x, a], &[b, c], &[]);
    debug_assert_eq!(tgt.labels, labels);
    let g1_inv = g1.inverse().map_err(|_| OpError::Other("gluing map not invertible".into()))?;

    // Per summand: braid (a, V*) inside ⟨x, a, V*⟩, reindex the channel to
    // W = p·V, and act with p on the right factor ⟨V, b, c⟩ = ⟨p̄·W, b, c⟩.
    let (pb, pc) = (cat.act(p, b), cat.act(p, c));
    let glued_dst = glued_space(cat, &[x], &[pb, pc], &[a]);
    let mut middle = Matrix::zero(glued_dst.dim(), glued_src.dim(), cat.conductor);
    for (sidx, summand) in glued_src.summands.iter().enumerate() {
        let w = cat.act(p, summand.channel);
        let didx = match glued_dst.summand_by_channel(w) {
            Some(i) => i,
            None => continue,
        };
        let braid = braiding_map(cat, &summand.left.labels)?;
        debug_assert_eq!(braid.target.labels, glued_dst.summands[didx].left.labels);
        let act = action_map(cat, &summand.right.labels, p);
        debug_assert_eq!(act.target.labels, glued_dst.summands[didx].right.labels);
        for li in 0..summand.left.dim() {
            for ri in 0..summand.right.dim() {
                let src = glued_src.index(sidx, li, ri);
                for lt in 0..braid.target.dim() {
                    let bval = braid.matrix.get(lt, li);
                    if bval.is_zero() {
                        continue;
                    }
                    for rt in 0..act.target.dim() {
                        let aval = act.matrix.get(rt, ri);
                        if aval.is_zero() {
                            continue;
                        }
                        middle.set(glued_dst.index(didx, lt, rt), src, bval.mul(aval));
                    }
                }
            }
        }
    }

    let (_, target_space, g2) = gluing_map(cat, &[x], &[pb, pc], &[a]);
    let matrix = g2.mul(&middle).mul(&g1_inv);
    Ok(BlockMap { source: source_space, target: target_space, matrix })
}

/// Reverse form of `fused_commutativity`: ⟨x, a, b, c⟩ → ⟨x, b, c, ū·a⟩
/// with u the product of the degrees of b and c.
pub fn fused_commutativity_rev(cat: &CategoryData, labels: &[LabelId]) -> OpResult<BlockMap> {
    if labels.len() != 4 {
        return Err(OpError::Arity("fused commutativity needs four labels".into()));
    }
    let (x, a, b, c) = (labels[0], labels[1], labels[2], labels[3]);
    let u = cat.group.mul(cat.deg(b), cat.deg(c));
    let ua = cat.act(cat.group.inv(u), a);
    let source_space = block_space(cat, labels);

    let (glued_src, tgt, g1) = gluing_map(cat, &[x, a], &[b, c], &[]);
    debug_assert_eq!(tgt.labels, labels);
    let g1_inv = g1.inverse().map_err(|_| OpError::Other("gluing map not invertible".into()))?;

    // The reverse braid of (a, V*) twists a by deg(V*)⁻¹ = u⁻¹ and leaves
    // the channel alone, so no reindexing or action is needed.
    let glued_dst = glued_space(cat, &[x], &[b, c], &[ua]);
    let mut middle = Matrix::zero(glued_dst.dim(), glued_src.dim(), cat.conductor);
    for (sidx, summand) in glued_src.summands.iter().enumerate() {
        let didx = match glued_dst.summand_by_channel(summand.channel) {
            Some(i) => i,
            None => continue,
        };
        let braid = braiding_map_rev(cat, &summand.left.labels)?;
        debug_assert_eq!(braid.target.labels, glued_dst.summands[didx].left.labels);
        for li in 0..summand.left.dim() {
            for ri in 0..summand.right.dim() {
                let src = glued_src.index(sidx, li, ri);
                for lt in 0..braid.target.dim() {
                    let v = braid.matrix.get(lt, li);
                    if v.is_zero() {
                        continue;
                    }
                    middle.set(glued_dst.index(didx, lt, ri), src, v.clone());
                }
            }
        }
    }

    let (_, target_space, g2) = gluing_map(cat, &[x], &[b, c], &[ua]);
    let matrix = g2.mul(&middle).mul(&g1_inv);
    Ok(BlockMap { source: source_space, target: target_space, matrix })
}
