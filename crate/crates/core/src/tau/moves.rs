//! The five presentation moves realized as exact matrices between cover
//! evaluations, and the marked-point action on free boundaries.

use crate::algebra::{Cyclotomic, GElem};
use crate::blocks::matrix::Matrix;
use crate::blocks::ops::{action_map, braiding_map, rotation_map_shared};
use crate::blocks::space::Tree;
use crate::category::{CategoryData, LabelId};
use crate::covers::{CanonMap, GluingGraph, Move};
use crate::error::{OpError, OpResult};

use super::space::{block_labels, tau_space, CoverLabeling, TauKey, TauSpace};

/// A move realized on evaluations: the target presentation and the matrix
/// from the source basis to the target basis.
#[derive(Debug, Clone)]
pub struct TauMove {
    pub graph: GluingGraph,
    pub source: TauSpace,
    pub target: TauSpace,
    pub matrix: Matrix,
}

fn reindex_key(cat: &CategoryData, cmap: &CanonMap, assignment: &[LabelId], trees: Vec<Tree>) -> TauKey {
    let mut asg = vec![0usize; assignment.len()];
    for (i, &v) in assignment.iter().enumerate() {
        asg[cmap.cut_perm[i]] = if cmap.cut_flipped[i] { cat.dual(v) } else { v };
    }
    let mut moved = vec![Tree::new(); trees.len()];
    for (b, t) in trees.into_iter().enumerate() {
        moved[cmap.block_perm[b]] = t;
    }
    TauKey { assignment: asg, trees: moved }
}

/// Realizes one move. The labeling is carried along unchanged: free
/// boundaries keep their objects and their order through every move.
pub fn move_map(
    cat: &CategoryData,
    graph: &GluingGraph,
    labeling: &CoverLabeling,
    mv: &Move,
) -> OpResult<TauMove> {
    let grp = &cat.group;
    let source = tau_space(cat, graph, labeling);
    let (raw, fusion) = graph.apply_move_raw(grp, mv)?;
    let (canon, cmap) = raw.canonicalize(grp);
    let target = tau_space(cat, &canon, labeling);
    let mut matrix = Matrix::zero(target.dim(), source.dim(), cat.conductor);

    for (si, key) in source.basis.iter().enumerate() {
        match *mv {
            Move::Z { block } | Move::B { block } | Move::P { block, .. } => {
                let labels = block_labels(cat, graph, labeling, &key.assignment);
                let factor = match *mv {
                    Move::Z { .. } => (*rotation_map_shared(cat, &labels[block])).clone(),
                    Move::B { .. } => braiding_map(cat, &labels[block])?,
                    Move::P { x, .. } => action_map(cat, &labels[block], x),
                    _ => unreachable!(),
                };
                let ti_src = factor
                    .source
                    .tree_index(&key.trees[block])
                    .expect("basis tree lives in the factor space");
                for (tt, ttree) in factor.target.trees.iter().enumerate() {
                    let coeff = factor.matrix.get(tt, ti_src);
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut trees = key.trees.clone();
                    trees[block] = ttree.clone();
                    let tkey = reindex_key(cat, &cmap, &key.assignment, trees);
                    let ti = target
                        .index_of(&tkey)
                        .expect("move image lies in the target basis");
                    matrix.add_to(ti, si, coeff);
                }
            }
            Move::T { cut, z } => {
                let c = &graph.cuts[cut];
                let old = graph.blocks[c.from.0].h[c.from.1];
                let shift = grp.mul(z, grp.inv(old));
                let mut assignment = key.assignment.clone();
                assignment[cut] = cat.act(shift, assignment[cut]);
                let tkey = reindex_key(cat, &cmap, &assignment, key.trees.clone());
                let ti = target.index_of(&tkey).expect("lift change permutes the basis");
                matrix.add_to(ti, si, &Cyclotomic::one(cat.conductor));
            }
            Move::F { cut } => {
                let trace = fusion.as_ref().expect("fusion move returns its trace");
                let (ba, bb) = (trace.kept, trace.removed);
                let ta = &key.trees[ba];
                let tb = &key.trees[bb];
                debug_assert_eq!(ta[ta.len() - 2], tb[0], "glued channels must match");
                let mut merged: Tree = ta[..ta.len() - 1].to_vec();
                merged.extend_from_slice(&tb[1..]);
                let mut trees: Vec<Tree> = Vec::with_capacity(key.trees.len() - 1);
                for (b, t) in key.trees.iter().enumerate() {
                    if b == ba {
                        trees.push(merged.clone());
                    } else if b != bb {
                        trees.push(t.clone());
                    }
                }
                let mut assignment = key.assignment.clone();
                assignment.remove(cut);
                let tkey = reindex_key(cat, &cmap, &assignment, trees);
                let ti = target.index_of(&tkey).expect("fusion image lies in the target basis");
                matrix.add_to(ti, si, &Cyclotomic::one(cat.conductor));
            }
        }
    }
    Ok(TauMove { graph: canon, source, target, matrix })
}

/// Composes a move script left to right.
pub fn path_map(
    cat: &CategoryData,
    graph: &GluingGraph,
    labeling: &CoverLabeling,
    moves: &[Move],
) -> OpResult<TauMove> {
    let mut current = graph.clone();
    let source = tau_space(cat, graph, labeling);
    let mut matrix = Matrix::identity(source.dim(), cat.conductor);
    let mut target = source.clone();
    for mv in moves {
        let step = move_map(cat, &current, labeling, mv)?;
        matrix = step.matrix.mul(&matrix);
        current = step.graph;
        target = step.target;
    }
    Ok(TauMove { graph: current, source, target, matrix })
}

/// The marked-point action: shifts the lift of each free boundary by its
/// group element and twists the boundary object accordingly. The induced
/// map is a basis correspondence: the twisted-back labels are unchanged.
pub fn t_action(
    cat: &CategoryData,
    graph: &GluingGraph,
    labeling: &CoverLabeling,
    shifts: &[GElem],
) -> OpResult<(GluingGraph, CoverLabeling, TauMove)> {
    let grp = &cat.group;
    if shifts.len() != graph.free.len() {
        return Err(OpError::Arity(format!(
            "{} shifts for {} free boundaries",
            shifts.len(),
            graph.free.len()
        )));
    }
    let source = tau_space(cat, graph, labeling);
    let mut raw = graph.clone();
    for (&x, &(b, i)) in shifts.iter().zip(graph.free.iter()) {
        raw.blocks[b].h[i] = grp.mul(x, raw.blocks[b].h[i]);
    }
    let (canon, cmap) = raw.canonicalize(grp);
    let new_labels: Vec<LabelId> = labeling
        .labels
        .iter()
        .zip(shifts.iter())
        .map(|(&w, &x)| cat.act(x, w))
        .collect();
    let new_labeling = CoverLabeling { labels: new_labels };
    let target = tau_space(cat, &canon, &new_labeling);
    let mut matrix = Matrix::zero(target.dim(), source.dim(), cat.conductor);
    for (si, key) in source.basis.iter().enumerate() {
        let tkey = reindex_key(cat, &cmap, &key.assignment, key.trees.clone());
        let ti = target.index_of(&tkey).expect("lift shifts preserve the basis");
        matrix.add_to(ti, si, &Cyclotomic::one(cat.conductor));
    }
    let mv = TauMove { graph: canon.clone(), source, target, matrix };
    Ok((canon, new_labeling, mv))
}
