//! Covers presented as gluings of standard blocks, and the five moves
//! between presentations.
//!
//! Graphs are kept in a canonical form (blocks sorted by data, cuts
//! oriented and sorted) so that equality is decidable and search states
//! hash consistently. Cut labels are marked-point lifts stored in the
//! sheet coordinates of the cut's `from` block; reorienting a cut rewrites
//! the label through the gluing identification.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Deserialize;

use crate::algebra::{FiniteGroup, GElem};
use crate::error::{DataError, DataResult, OpError, OpResult};

use super::block::StandardBlock;

/// A boundary of a specific block, 0-based.
pub type Endpoint = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cut {
    pub from: Endpoint,
    pub to: Endpoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GluingGraph {
    pub blocks: Vec<StandardBlock>,
    pub cuts: Vec<Cut>,
    /// The unglued boundaries, in labeling order.
    pub free: Vec<Endpoint>,
}

/// One of the five presentation moves.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Move {
    /// Rotate a block: last boundary becomes first.
    Z { block: usize },
    /// Braid the last two boundaries of a three-holed block.
    B { block: usize },
    /// Fuse the two blocks joined by a cut.
    F { cut: usize },
    /// Relabel one block's parameterization by a group element.
    P { block: usize, x: GElem },
    /// Move the marked-point lift of a cut: the h-data at both glued
    /// boundaries shifts to z on the from side, preserving the gluing
    /// transition.
    T { cut: usize, z: GElem },
}

/// Correspondence data from the literal result of a move to its canonical
/// form: where each block and cut went, and which cuts were reoriented.
#[derive(Debug, Clone)]
pub struct CanonMap {
    pub block_perm: Vec<usize>,
    pub cut_perm: Vec<usize>,
    pub cut_flipped: Vec<bool>,
}

impl GluingGraph {
    /// Validates and canonicalizes a graph.
    pub fn new(
        grp: &FiniteGroup,
        blocks: Vec<StandardBlock>,
        cuts: Vec<Cut>,
        free: Vec<Endpoint>,
    ) -> DataResult<Self> {
        let raw = GluingGraph { blocks, cuts, free };
        raw.validate(grp)?;
        let (canon, _) = raw.canonicalize(grp);
        Ok(canon)
    }

    fn validate(&self, grp: &FiniteGroup) -> DataResult<()> {
        let check_endpoint = |(b, i): Endpoint| -> DataResult<()> {
            if b >= self.blocks.len() || i >= self.blocks[b].boundaries() {
                return Err(DataError::Invariant(format!("endpoint ({b}, {i}) out of range")));
            }
            Ok(())
        };
        let mut seen: HashSet<Endpoint> = HashSet::new();
        for cut in &self.cuts {
            check_endpoint(cut.from)?;
            check_endpoint(cut.to)?;
            if cut.from.0 == cut.to.0 {
                return Err(DataError::Invariant(
                    "cut glues a block to itself; only distinct blocks may be glued".into(),
                ));
            }
            for ep in [cut.from, cut.to] {
                if !seen.insert(ep) {
                    return Err(DataError::Invariant(format!(
                        "boundary ({}, {}) used twice",
                        ep.0, ep.1
                    )));
                }
            }
            let ma = self.blocks[cut.from.0].monodromy(grp, cut.from.1).unwrap();
            let mb = self.blocks[cut.to.0].monodromy(grp, cut.to.1).unwrap();
            if grp.mul(ma, mb) != grp.identity() {
                return Err(DataError::Invariant(format!(
                    "cut ({:?}, {:?}) violates the monodromy gluing condition",
                    cut.from, cut.to
                )));
            }
        }
        for &ep in &self.free {
            check_endpoint(ep)?;
            if !seen.insert(ep) {
                return Err(DataError::Invariant(format!(
                    "boundary ({}, {}) used twice",
                    ep.0, ep.1
                )));
            }
        }
        let total: usize = self.blocks.iter().map(|b| b.boundaries()).sum();
        if seen.len() != total {
            return Err(DataError::Invariant(
                "every boundary must be either cut or free".into(),
            ));
        }
        // The cut graph on blocks must be a forest.
        let mut parent: Vec<usize> = (0..self.blocks.len()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for cut in &self.cuts {
            let (a, b) = (find(&mut parent, cut.from.0), find(&mut parent, cut.to.0));
            if a == b {
                return Err(DataError::Invariant(
                    "cuts close a cycle; the underlying surface must have genus zero".into(),
                ));
            }
            parent[a] = b;
        }
        Ok(())
    }

    /// Canonical form plus the correspondence from the input indices.
    pub fn canonicalize(&self, _grp: &FiniteGroup) -> (GluingGraph, CanonMap) {
        // Sort blocks by their data, breaking ties between equal blocks by
        // their first appearance in the free list so that relabeling the
        // block list of a symmetric cover does not change the presentation.
        let anchor = |b: usize| -> usize {
            self.free.iter().position(|&(bi, _)| bi == b).unwrap_or(usize::MAX)
        };
        let mut order: Vec<usize> = (0..self.blocks.len()).collect();
        order.sort_by(|&a, &b| {
            self.blocks[a]
                .cmp(&self.blocks[b])
                .then(anchor(a).cmp(&anchor(b)))
                .then(a.cmp(&b))
        });
        let mut block_perm = vec![0usize; self.blocks.len()];
        for (new, &old) in order.iter().enumerate() {
            block_perm[old] = new;
        }
        let blocks: Vec<StandardBlock> = order.iter().map(|&i| self.blocks[i].clone()).collect();

        // Reorient cuts so the lexicographically smaller endpoint is `from`.
        let mut cut_entries: Vec<(Cut, usize, bool)> = Vec::new();
        for (idx, cut) in self.cuts.iter().enumerate() {
            let from = (block_perm[cut.from.0], cut.from.1);
            let to = (block_perm[cut.to.0], cut.to.1);
            if from <= to {
                cut_entries.push((Cut { from, to }, idx, false));
            } else {
                cut_entries.push((Cut { from: to, to: from }, idx, true));
            }
        }
        cut_entries.sort_by(|a, b| a.0.cmp(&b.0));
        let mut cut_perm = vec![0usize; self.cuts.len()];
        let mut cut_flipped = vec![false; self.cuts.len()];
        let mut cuts = Vec::with_capacity(cut_entries.len());
        for (new, (cut, old, flipped)) in cut_entries.into_iter().enumerate() {
            cut_perm[old] = new;
            cut_flipped[old] = flipped;
            cuts.push(cut);
        }

        let free: Vec<Endpoint> =
            self.free.iter().map(|&(b, i)| (block_perm[b], i)).collect();
        (GluingGraph { blocks, cuts, free }, CanonMap { block_perm, cut_perm, cut_flipped })
    }

    /// Applies a move and canonicalizes; errors if the move is not
    /// applicable. Returns the new graph only.
    pub fn apply_move(&self, grp: &FiniteGroup, mv: &Move) -> OpResult<GluingGraph> {
        let (raw, _) = self.apply_move_raw(grp, mv)?;
        let (canon, _) = raw.canonicalize(grp);
        Ok(canon)
    }

    /// Applies a move literally, without canonicalizing: block and cut
    /// list positions stay aligned with the source so callers can track
    /// basis data through the move. Also returns, for a fusion move, the
    /// indices (kept block, removed block, removed cut).
    pub fn apply_move_raw(
        &self,
        grp: &FiniteGroup,
        mv: &Move,
    ) -> OpResult<(GluingGraph, Option<FusionTrace>)> {
        match *mv {
            Move::Z { block } => {
                let b = self.block_checked(block)?;
                let n = b.boundaries();
                if n == 0 {
                    return Err(OpError::Inapplicable("cannot rotate a closed block".into()));
                }
                let mut g = vec![b.g[n - 1]];
                g.extend_from_slice(&b.g[..n - 1]);
                let mut h = vec![b.h[n - 1]];
                h.extend_from_slice(&b.h[..n - 1]);
                let remap = |(bi, k): Endpoint| -> Endpoint {
                    if bi == block {
                        (bi, (k + 1) % n)
                    } else {
                        (bi, k)
                    }
                };
                let mut out = self.clone();
                out.blocks[block] = StandardBlock { g, h };
                for cut in out.cuts.iter_mut() {
                    cut.from = remap(cut.from);
                    cut.to = remap(cut.to);
                }
                for ep in out.free.iter_mut() {
                    *ep = remap(*ep);
                }
                Ok((out, None))
            }
            Move::B { block } => {
                let b = self.block_checked(block)?;
                if b.boundaries() != 3 {
                    return Err(OpError::Inapplicable(format!(
                        "braid move needs a three-holed block, found {} boundaries",
                        b.boundaries()
                    )));
                }
                let g1 = b.g[1];
                let g = vec![b.g[0], grp.conj(g1, b.g[2]), g1];
                let h = vec![b.h[0], grp.mul(b.h[2], grp.inv(g1)), b.h[1]];
                let remap = |(bi, k): Endpoint| -> Endpoint {
                    if bi == block {
                        (bi, [0usize, 2, 1][k])
                    } else {
                        (bi, k)
                    }
                };
                let mut out = self.clone();
                out.blocks[block] = StandardBlock { g, h };
                for cut in out.cuts.iter_mut() {
                    cut.from = remap(cut.from);
                    cut.to = remap(cut.to);
                }
                for ep in out.free.iter_mut() {
                    *ep = remap(*ep);
                }
                Ok((out, None))
            }
            Move::P { block, x } => {
                self.block_checked(block)?;
                if x >= grp.order() {
                    return Err(OpError::Index("relabeling element out of range".into()));
                }
                let mut out = self.clone();
                let b = &mut out.blocks[block];
                for gi in b.g.iter_mut() {
                    *gi = grp.conj(x, *gi);
                }
                for hi in b.h.iter_mut() {
                    *hi = grp.mul(*hi, grp.inv(x));
                }
                Ok((out, None))
            }
            Move::T { cut, z } => {
                if cut >= self.cuts.len() {
                    return Err(OpError::Index(format!("no cut {cut}")));
                }
                if z >= grp.order() {
                    return Err(OpError::Index("lift label out of range".into()));
                }
                let c = self.cuts[cut].clone();
                let h_from = self.blocks[c.from.0].h[c.from.1];
                let h_to = self.blocks[c.to.0].h[c.to.1];
                // Shift the lift to z, carrying the to-side through the
                // fixed gluing transition h_from⁻¹·h_to.
                let transition = grp.mul(grp.inv(h_from), h_to);
                let mut out = self.clone();
                out.blocks[c.from.0].h[c.from.1] = z;
                out.blocks[c.to.0].h[c.to.1] = grp.mul(z, transition);
                Ok((out, None))
            }
            Move::F { cut } => {
                if cut >= self.cuts.len() {
                    return Err(OpError::Index(format!("no cut {cut}")));
                }
                let c = self.cuts[cut].clone();
                // Identify which side is the last boundary of its block and
                // which is the first of the other.
                let last_of = |ep: Endpoint| ep.1 + 1 == self.blocks[ep.0].boundaries();
                let (pa, pb) = if last_of(c.from) && c.to.1 == 0 {
                    (c.from, c.to)
                } else if last_of(c.to) && c.from.1 == 0 {
                    (c.to, c.from)
                } else {
                    return Err(OpError::Inapplicable(
                        "fusion needs the cut to join the last boundary of one block to the first of the other"
                            .into(),
                    ));
                };
                let (ba, bb) = (pa.0, pb.0);
                let (a, b) = (&self.blocks[ba], &self.blocks[bb]);
                if a.h[pa.1] != b.h[0] {
                    return Err(OpError::Inapplicable(
                        "fusion needs matching marked lifts at the glued boundaries".into(),
                    ));
                }
                let ka = a.boundaries() - 1;
                let mut g = a.g[..ka].to_vec();
                g.extend_from_slice(&b.g[1..]);
                let mut h = a.h[..ka].to_vec();
                h.extend_from_slice(&b.h[1..]);
                let merged = StandardBlock { g, h };

                // Renumber: merged block sits at ba's slot; bb disappears.
                let ba_new = if ba > bb { ba - 1 } else { ba };
                let block_of = move |old: usize| -> usize {
                    if old == bb {
                        ba_new
                    } else if old > bb {
                        old - 1
                    } else {
                        old
                    }
                };
                let remap = |(bi, k): Endpoint| -> Endpoint {
                    if bi == ba {
                        (block_of(bi), k)
                    } else if bi == bb {
                        (block_of(bi), ka + k - 1)
                    } else {
                        (block_of(bi), k)
                    }
                };
                let mut blocks = Vec::with_capacity(self.blocks.len() - 1);
                for (i, blk) in self.blocks.iter().enumerate() {
                    if i == ba {
                        blocks.push(merged.clone());
                    } else if i != bb {
                        blocks.push(blk.clone());
                    }
                }
                let mut cuts = Vec::with_capacity(self.cuts.len() - 1);
                for (i, other) in self.cuts.iter().enumerate() {
                    if i == cut {
                        continue;
                    }
                    cuts.push(Cut { from: remap(other.from), to: remap(other.to) });
                }
                let free: Vec<Endpoint> = self.free.iter().map(|&ep| remap(ep)).collect();
                Ok((
                    GluingGraph { blocks, cuts, free },
                    Some(FusionTrace { kept: ba, removed: bb, merged_at: ba_new, cut }),
                ))
            }
        }
    }

    fn block_checked(&self, block: usize) -> OpResult<&StandardBlock> {
        self.blocks.get(block).ok_or_else(|| OpError::Index(format!("no block {block}")))
    }

    /// All applicable moves in canonical order: rotations, braids, fusions,
    /// relabelings over the whole group, lift changes over the whole group.
    pub fn enumerate_moves(&self, grp: &FiniteGroup) -> Vec<Move> {
        let mut out = Vec::new();
        for (i, b) in self.blocks.iter().enumerate() {
            if b.boundaries() >= 1 {
                out.push(Move::Z { block: i });
            }
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if b.boundaries() == 3 {
                out.push(Move::B { block: i });
            }
        }
        for (i, cut) in self.cuts.iter().enumerate() {
            let last_of = |ep: Endpoint| ep.1 + 1 == self.blocks[ep.0].boundaries();
            let oriented = (last_of(cut.from) && cut.to.1 == 0) || (last_of(cut.to) && cut.from.1 == 0);
            if !oriented {
                continue;
            }
            let (pa, pb) = if last_of(cut.from) && cut.to.1 == 0 {
                (cut.from, cut.to)
            } else {
                (cut.to, cut.from)
            };
            if self.blocks[pa.0].h[pa.1] == self.blocks[pb.0].h[0] {
                out.push(Move::F { cut: i });
            }
        }
        for i in 0..self.blocks.len() {
            for x in grp.elements() {
                out.push(Move::P { block: i, x });
            }
        }
        for i in 0..self.cuts.len() {
            for z in grp.elements() {
                out.push(Move::T { cut: i, z });
            }
        }
        out
    }

    /// Breadth-first shortest move sequence from `self` to `goal`, up to
    /// the depth bound; ties break on enumeration order.
    pub fn find_path(
        &self,
        grp: &FiniteGroup,
        goal: &GluingGraph,
        max_depth: usize,
    ) -> Option<Vec<Move>> {
        if self == goal {
            return Some(Vec::new());
        }
        let mut seen: HashMap<GluingGraph, (GluingGraph, Move)> = HashMap::new();
        let mut queue: VecDeque<(GluingGraph, usize)> = VecDeque::new();
        queue.push_back((self.clone(), 0));
        let mut visited: HashSet<GluingGraph> = HashSet::new();
        visited.insert(self.clone());
        while let Some((state, depth)) = queue.pop_front() {
            if depth >= max_depth {
                continue;
            }
            for mv in state.enumerate_moves(grp) {
                let next = match state.apply_move(grp, &mv) {
                    Ok(n) => n,
                    Err(_) => continue,
                };
                if visited.contains(&next) {
                    continue;
                }
                visited.insert(next.clone());
                seen.insert(next.clone(), (state.clone(), mv.clone()));
                if next == *goal {
                    // Reconstruct the path backwards.
                    let mut path = Vec::new();
                    let mut cur = next;
                    while cur != *self {
                        let (prev, m) = seen.get(&cur).unwrap().clone();
                        path.push(m);
                        cur = prev;
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back((next, depth + 1));
            }
        }
        None
    }
}

/// Bookkeeping for a fusion move: which literal block positions merged.
#[derive(Debug, Clone)]
pub struct FusionTrace {
    /// The block (source index) that keeps its position.
    pub kept: usize,
    /// The block (source index) that is absorbed.
    pub removed: usize,
    /// Index of the merged block in the literal result.
    pub merged_at: usize,
    /// Index of the consumed cut in the source.
    pub cut: usize,
}

// ---------------------------------------------------------------------
// File formats

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBlock {
    g: Vec<String>,
    h: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCut {
    from: [usize; 2],
    to: [usize; 2],
    #[serde(default)]
    label: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCover {
    blocks: Vec<RawBlock>,
    cuts: Vec<RawCut>,
    free: Vec<[usize; 2]>,
}

/// Loads a cover file. Boundary indices in the file are 1-based.
pub fn load_cover(grp: &FiniteGroup, text: &str) -> DataResult<GluingGraph> {
    let raw: RawCover = serde_json::from_str(text)?;
    let mut blocks = Vec::with_capacity(raw.blocks.len());
    for rb in &raw.blocks {
        let g = rb.g.iter().map(|n| grp.by_name(n)).collect::<DataResult<Vec<_>>>()?;
        let h = rb.h.iter().map(|n| grp.by_name(n)).collect::<DataResult<Vec<_>>>()?;
        blocks.push(StandardBlock::new(grp, g, h)?);
    }
    let fix = |pair: [usize; 2]| -> DataResult<Endpoint> {
        if pair[1] == 0 {
            return Err(DataError::Schema(
                "boundary indices in cover files are 1-based".into(),
            ));
        }
        Ok((pair[0], pair[1] - 1))
    };
    let mut cuts = Vec::with_capacity(raw.cuts.len());
    for rc in &raw.cuts {
        let from = fix(rc.from)?;
        let to = fix(rc.to)?;
        if let Some(n) = &rc.label {
            // The lift of a cut's marked point is the h-datum of its from
            // boundary; an explicit label must agree with it.
            let label = grp.by_name(n)?;
            let b = blocks.get(from.0).ok_or_else(|| {
                DataError::Invariant(format!("cut references missing block {}", from.0))
            })?;
            let h = *b.h.get(from.1).ok_or_else(|| {
                DataError::Invariant(format!("cut references missing boundary {}", from.1))
            })?;
            if label != h {
                return Err(DataError::Invariant(format!(
                    "cut label {n:?} disagrees with the marked lift of boundary ({}, {})",
                    from.0,
                    from.1 + 1
                )));
            }
        }
        cuts.push(Cut { from, to });
    }
    let free = raw.free.iter().map(|&p| fix(p)).collect::<DataResult<Vec<_>>>()?;
    GluingGraph::new(grp, blocks, cuts, free)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMove {
    kind: String,
    #[serde(default)]
    block: Option<usize>,
    #[serde(default)]
    cut: Option<usize>,
    #[serde(default)]
    x: Option<String>,
    #[serde(default)]
    z: Option<String>,
}

/// Loads an ordered move script.
pub fn load_moves(grp: &FiniteGroup, text: &str) -> DataResult<Vec<Move>> {
    let raw: Vec<RawMove> = serde_json::from_str(text)?;
    let mut out = Vec::with_capacity(raw.len());
    for rm in &raw {
        let need_block = || {
            rm.block.ok_or_else(|| DataError::Schema(format!("move {:?} needs a block", rm.kind)))
        };
        let need_cut = || {
            rm.cut.ok_or_else(|| DataError::Schema(format!("move {:?} needs a cut", rm.kind)))
        };
        let mv = match rm.kind.as_str() {
            "Z" => Move::Z { block: need_block()? },
            "B" => Move::B { block: need_block()? },
            "F" => Move::F { cut: need_cut()? },
            "P" => {
                let x = rm
                    .x
                    .as_ref()
                    .ok_or_else(|| DataError::Schema("P move needs an element x".into()))?;
                Move::P { block: need_block()?, x: grp.by_name(x)? }
            }
            "T" => {
                let z = rm
                    .z
                    .as_ref()
                    .ok_or_else(|| DataError::Schema("T move needs an element z".into()))?;
                Move::T { cut: need_cut()?, z: grp.by_name(z)? }
            }
            other => return Err(DataError::Schema(format!("unknown move kind {other:?}"))),
        };
        out.push(mv);
    }
    Ok(out)
}
