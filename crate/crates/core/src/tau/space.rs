//! Evaluation of labeled covers: the direct sum, over simple labels on
//! the cuts, of tensor products of per-block spaces.
//!
//! Each boundary of a block contributes the label of the object sitting
//! at its marked lift, twisted back by the lift: X = h⁻¹·(object). Free
//! boundaries carry the objects of the labeling; a cut carries a simple
//! label on its from side and the dual label on its to side.

use std::collections::{BTreeMap, HashMap};

use serde::Deserialize;

use crate::blocks::space::{block_space_shared, Tree};
use crate::category::{CategoryData, LabelId};
use crate::covers::GluingGraph;
use crate::error::{DataError, DataResult};

/// Objects on the free boundaries, in free-list order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverLabeling {
    pub labels: Vec<LabelId>,
}

impl CoverLabeling {
    /// Validates the grading constraint: each label must live in the
    /// inverse-monodromy degree of its boundary.
    pub fn new(cat: &CategoryData, graph: &GluingGraph, labels: Vec<LabelId>) -> DataResult<Self> {
        if labels.len() != graph.free.len() {
            return Err(DataError::Invariant(format!(
                "labeling has {} entries for {} free boundaries",
                labels.len(),
                graph.free.len()
            )));
        }
        for (p, (&label, &(b, i))) in labels.iter().zip(graph.free.iter()).enumerate() {
            let m = graph.blocks[b].monodromy(&cat.group, i).expect("validated endpoint");
            if cat.deg(label) != cat.group.inv(m) {
                return Err(DataError::Invariant(format!(
                    "label {} at free boundary {p} must have the inverse monodromy degree",
                    cat.label_name(label)
                )));
            }
        }
        Ok(CoverLabeling { labels })
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLabeling {
    boundary_labels: BTreeMap<String, String>,
}

/// Loads a labeling file: boundary positions (as decimal strings) to label
/// names.
pub fn load_labeling(
    cat: &CategoryData,
    graph: &GluingGraph,
    text: &str,
) -> DataResult<CoverLabeling> {
    let raw: RawLabeling = serde_json::from_str(text)?;
    let mut labels = vec![None; graph.free.len()];
    for (key, name) in &raw.boundary_labels {
        let idx: usize = key
            .parse()
            .map_err(|_| DataError::Schema(format!("bad boundary index {key:?}")))?;
        if idx >= labels.len() {
            return Err(DataError::Schema(format!(
                "boundary index {idx} out of range for {} free boundaries",
                labels.len()
            )));
        }
        labels[idx] = Some(cat.label_by_name(name)?);
    }
    let labels: Vec<LabelId> = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or_else(|| DataError::Schema(format!("boundary {i} unlabeled"))))
        .collect::<DataResult<Vec<_>>>()?;
    CoverLabeling::new(cat, graph, labels)
}

/// One basis element: a simple label per cut plus a fusion tree per block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TauKey {
    pub assignment: Vec<LabelId>,
    pub trees: Vec<Tree>,
}

#[derive(Debug, Clone)]
pub struct TauSpace {
    pub basis: Vec<TauKey>,
    index: HashMap<TauKey, usize>,
}

impl TauSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, key: &TauKey) -> Option<usize> {
        self.index.get(key).copied()
    }
}

/// Labels admissible on a cut: the degree class of the inverse monodromy
/// of the from boundary.
pub fn cut_channels(cat: &CategoryData, graph: &GluingGraph, cut: usize) -> Vec<LabelId> {
    let c = &graph.cuts[cut];
    let m = graph.blocks[c.from.0]
        .monodromy(&cat.group, c.from.1)
        .expect("validated endpoint");
    let want = cat.group.inv(m);
    cat.labels().filter(|&v| cat.deg(v) == want).collect()
}

/// The per-block label tuples induced by a labeling and a cut assignment.
pub fn block_labels(
    cat: &CategoryData,
    graph: &GluingGraph,
    labeling: &CoverLabeling,
    assignment: &[LabelId],
) -> Vec<Vec<LabelId>> {
    let mut object: HashMap<(usize, usize), LabelId> = HashMap::new();
    for (p, &(b, i)) in graph.free.iter().enumerate() {
        object.insert((b, i), labeling.labels[p]);
    }
    for (ci, cut) in graph.cuts.iter().enumerate() {
        object.insert(cut.from, assignment[ci]);
        object.insert(cut.to, cat.dual(assignment[ci]));
    }
    graph
        .blocks
        .iter()
        .enumerate()
        .map(|(b, block)| {
            (0..block.boundaries())
                .map(|i| {
                    let w = *object.get(&(b, i)).expect("boundary is cut or free");
                    cat.act(cat.group.inv(block.h[i]), w)
                })
                .collect()
        })
        .collect()
}

/// Builds the canonical basis: assignments in lexicographic order, then
/// per-block trees in lexicographic order.
pub fn tau_space(cat: &CategoryData, graph: &GluingGraph, labeling: &CoverLabeling) -> TauSpace {
    let mut basis = Vec::new();
    let channel_lists: Vec<Vec<LabelId>> =
        (0..graph.cuts.len()).map(|c| cut_channels(cat, graph, c)).collect();
    let mut assignment: Vec<usize> = vec![0; graph.cuts.len()];
    'outer: loop {
        if channel_lists.iter().any(|l| l.is_empty()) {
            break;
        }
        let labels: Vec<LabelId> =
            assignment.iter().zip(&channel_lists).map(|(&i, l)| l[i]).collect();
        let spaces: Vec<_> = block_labels(cat, graph, labeling, &labels)
            .iter()
            .map(|ls| block_space_shared(cat, ls))
            .collect();
        if spaces.iter().all(|s| s.dim() > 0) {
            // Odometer over per-block trees.
            let mut tree_idx = vec![0usize; spaces.len()];
            loop {
                let trees: Vec<Tree> = tree_idx
                    .iter()
                    .zip(&spaces)
                    .map(|(&i, s)| s.trees[i].clone())
                    .collect();
                basis.push(TauKey { assignment: labels.clone(), trees });
                let mut k = spaces.len();
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    tree_idx[k] += 1;
                    if tree_idx[k] < spaces[k].dim() {
                        break;
                    }
                    tree_idx[k] = 0;
                }
                if spaces.is_empty() || (k == 0 && tree_idx[0] == 0) {
                    break;
                }
            }
        }
        // Advance the assignment odometer.
        let mut k = graph.cuts.len();
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            assignment[k] += 1;
            if assignment[k] < channel_lists[k].len() {
                break;
            }
            assignment[k] = 0;
        }
        if graph.cuts.is_empty() {
            break;
        }
    }
    let index = basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    TauSpace { basis, index }
}

/// Dimension of the evaluation: the sum over cut assignments of the
/// product of block dimensions.
pub fn tau_dim(cat: &CategoryData, graph: &GluingGraph, labeling: &CoverLabeling) -> u64 {
    tau_space(cat, graph, labeling).dim() as u64
}
