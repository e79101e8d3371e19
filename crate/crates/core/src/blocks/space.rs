//! Fusion-tree bases of invariant spaces.
//!
//! The space of an ordered label list (a_1, ..., a_n) has one basis vector
//! per left-combed fusion tree: a sequence of intermediate labels
//! u_1 = a_1, u_k admissible in u_{k-1} ⊗ a_k, ending at the unit. The
//! empty list has the one-element basis of the empty tree.

use std::collections::HashMap;

use crate::category::{fusion_dim, CategoryData, LabelId};

/// A fusion tree: the intermediate labels u_1..u_n (u_n is the unit).
pub type Tree = Vec<LabelId>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSpace {
    pub labels: Vec<LabelId>,
    pub trees: Vec<Tree>,
}

impl BlockSpace {
    pub fn dim(&self) -> usize {
        self.trees.len()
    }

    pub fn tree_index(&self, tree: &[LabelId]) -> Option<usize> {
        self.trees.iter().position(|t| t == tree)
    }

    pub fn index_map(&self) -> HashMap<Tree, usize> {
        self.trees.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect()
    }
}

/// Canonical basis in lexicographic intermediate-label order, memoized
/// per category.
pub fn block_space(cat: &CategoryData, labels: &[LabelId]) -> BlockSpace {
    (*block_space_shared(cat, labels)).clone()
}

/// Shared handle to the memoized space; hot paths keep the Arc.
pub fn block_space_shared(cat: &CategoryData, labels: &[LabelId]) -> std::sync::Arc<BlockSpace> {
    if let Some(sp) = cat.caches().spaces.read().unwrap().get(labels) {
        return sp.clone();
    }
    let built = std::sync::Arc::new(build_space(cat, labels));
    cat.caches()
        .spaces
        .write()
        .unwrap()
        .entry(labels.to_vec())
        .or_insert(built)
        .clone()
}

fn build_space(cat: &CategoryData, labels: &[LabelId]) -> BlockSpace {
    let n = labels.len();
    if n == 0 {
        return BlockSpace { labels: Vec::new(), trees: vec![Vec::new()] };
    }
    let mut trees = Vec::new();
    let mut stack: Vec<Tree> = vec![vec![labels[0]]];
    while let Some(partial) = stack.pop() {
        let k = partial.len();
        if k == n {
            if *partial.last().unwrap() == cat.unit() {
                trees.push(partial);
            }
            continue;
        }
        let prev = partial[k - 1];
        // Push in reverse so the stack pops in ascending label order.
        for &next in cat.fusion_products(prev, labels[k]).iter().rev() {
            let mut t = partial.clone();
            t.push(next);
            stack.push(t);
        }
    }
    // Depth-first emission above is already lexicographic, but sort to make
    // the canonical order independent of the search strategy.
    trees.sort();
    debug_assert_eq!(trees.len() as u64, fusion_dim(cat, labels));
    BlockSpace { labels: labels.to_vec(), trees }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_z2() -> CategoryData {
        let text = r#"{
            "group": {"preset": "cyclic", "n": 2},
            "conductor": 1,
            "labels": [
                {"name": "u0", "degree": "e", "dual": "u0"},
                {"name": "u1", "degree": "x", "dual": "u1"}
            ],
            "fusion": [
                ["u0","u0","u0"], ["u0","u1","u1"], ["u1","u0","u1"], ["u1","u1","u0"]
            ]
        }"#;
        CategoryData::from_json_str(text, 64).unwrap()
    }

    #[test]
    fn empty_list_has_one_empty_tree() {
        let cat = vec_z2();
        let sp = block_space(&cat, &[]);
        assert_eq!(sp.dim(), 1);
        assert!(sp.trees[0].is_empty());
    }

    #[test]
    fn single_label_space_is_unit_only() {
        let cat = vec_z2();
        let u0 = cat.label_by_name("u0").unwrap();
        let u1 = cat.label_by_name("u1").unwrap();
        assert_eq!(block_space(&cat, &[u0]).dim(), 1);
        assert_eq!(block_space(&cat, &[u1]).dim(), 0);
    }

    #[test]
    fn pair_space_matches_duality() {
        let cat = vec_z2();
        let u1 = cat.label_by_name("u1").unwrap();
        let sp = block_space(&cat, &[u1, u1]);
        assert_eq!(sp.dim(), 1);
        assert_eq!(sp.trees[0], vec![u1, cat.unit()]);
    }
}
