//! The axiom system for the block-space isomorphisms, checked by exact
//! matrix identity over every label tuple within a size bound.

use crate::category::{fusion_dim, CategoryData, LabelId};
use crate::report::CheckReport;

use super::matrix::Matrix;
use super::ops::{
    action_map, braiding_map, gen_commutativity, gen_commutativity_rev, glued_space,
    gluing_map_shared, fused_commutativity, fused_commutativity_rev, rotation_map,
    rotation_map_shared, rotation_power,
};
use super::space::block_space;

/// Calls `f` on every label tuple of the given length.
fn for_each_tuple(nl: usize, len: usize, mut f: impl FnMut(&[LabelId])) {
    let mut tuple = vec![0usize; len];
    loop {
        f(&tuple);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < nl {
                break;
            }
            tuple[i] = 0;
        }
        if len == 0 {
            return;
        }
    }
}

fn concat(a: &[LabelId], b: &[LabelId]) -> Vec<LabelId> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

/// Empty-tuple space is one-dimensional and all structure maps on it are 1.
pub fn check_normalization(cat: &CategoryData) -> CheckReport {
    let mut report = CheckReport::new("normalization");
    report.tick();
    let empty = block_space(cat, &[]);
    if empty.dim() != 1 {
        report.fail("empty tuple", format!("dimension {} instead of 1", empty.dim()));
    }
    let z = rotation_map(cat, &[]);
    if !z.matrix.is_identity() {
        report.fail("empty tuple", "rotation is not the identity");
    }
    for g in cat.group.elements() {
        report.tick();
        let m = action_map(cat, &[], g);
        if !m.matrix.is_identity() {
            report.fail(format!("action of {}", cat.group.name(g)), "not the identity on the empty space");
        }
    }
    report
}

/// Every label pairs nontrivially with its dual.
pub fn check_nondegeneracy_pairing(cat: &CategoryData) -> CheckReport {
    let mut report = CheckReport::new("nondegeneracy");
    for a in cat.labels() {
        report.tick();
        let d = fusion_dim(cat, &[a, cat.dual(a)]);
        if d == 0 {
            report.fail(
                cat.label_name(a).to_string(),
                "no label pairs nontrivially with it",
            );
        }
    }
    report
}

/// n-fold rotation is the identity on every tuple within the bound.
pub fn check_rotation(cat: &CategoryData, bound: usize) -> CheckReport {
    let mut report = CheckReport::new("rotation");
    let nl = cat.label_count();
    for len in 1..=bound {
        for_each_tuple(nl, len, |tuple| {
            report.tick();
            if fusion_dim(cat, tuple) == 0 {
                return;
            }
            let full = rotation_power(cat, tuple, len);
            if !full.matrix.is_identity() {
                report.fail(
                    cat.names(tuple),
                    format!("{len}-fold rotation is {}", full.matrix.render()),
                );
            }
        });
    }
    report
}

/// The action maps compose like the group: the map of a product equals the
/// map of the left factor on the transported tuple after the right factor.
pub fn check_action_multiplicativity(cat: &CategoryData, bound: usize) -> CheckReport {
    let mut report = CheckReport::new("action-multiplicativity");
    let nl = cat.label_count();
    let cap = bound.min(3);
    for len in 1..=cap {
        for_each_tuple(nl, len, |tuple| {
            if fusion_dim(cat, tuple) == 0 {
                return;
            }
            let e_map = action_map(cat, tuple, cat.group.identity());
            report.tick();
            if !e_map.matrix.is_identity() {
                report.fail(cat.names(tuple), "identity element acts nontrivially");
            }
            for g in cat.group.elements() {
                for h in cat.group.elements() {
                    report.tick();
                    let gh = cat.group.mul(g, h);
                    let mh = action_map(cat, tuple, h);
                    let mg = action_map(cat, &mh.target.labels, g);
                    let direct = action_map(cat, tuple, gh);
                    let composed = mg.after(&mh);
                    if direct.matrix != composed.matrix {
                        report.fail(
                            format!("({}, {}) on {}", cat.group.name(g), cat.group.name(h), cat.names(tuple)),
                            format!(
                                "product map {} differs from composite {}",
                                direct.matrix.render(),
                                composed.matrix.render()
                            ),
                        );
                    }
                }
            }
        });
    }
    report
}

/// Both orders of gluing a three-segment tuple agree. Gluing is tree
/// concatenation in the canonical bases, so the two composites are
/// compared key by key on the full double sum.
pub fn check_gluing_associativity(cat: &CategoryData, bound: usize) -> CheckReport {
    let mut report = CheckReport::new("gluing-associativity");
    let nl = cat.label_count();
    for len in 0..=bound {
        for_each_tuple(nl, len, |tuple| {
            if fusion_dim(cat, tuple) == 0 {
                report.tick();
                return;
            }
            let grp = &cat.group;
            let prod = |ls: &[LabelId]| {
                ls.iter().fold(grp.identity(), |acc, &l| grp.mul(acc, cat.deg(l)))
            };
            for i in 0..=len {
                for j in i..=len {
                    report.tick();
                    let (a, b, c) = (&tuple[..i], &tuple[i..j], &tuple[j..]);
                    // The grading forces both cut channels' degrees.
                    let want_vi = prod(a);
                    let want_vj = grp.inv(prod(c));
                    for vi in cat.labels().filter(|&v| cat.deg(v) == want_vi) {
                        for vj in cat.labels().filter(|&v| cat.deg(v) == want_vj) {
                            let s1 = block_space(cat, &concat(a, &[cat.dual(vi)]));
                            let s2 = block_space(cat, &concat(&concat(&[vi], b), &[cat.dual(vj)]));
                            let s3 = block_space(cat, &concat(&[vj], c));
                            if s1.dim() == 0 || s2.dim() == 0 || s3.dim() == 0 {
                                continue;
                            }
                            for t1 in &s1.trees {
                                for t2 in &s2.trees {
                                    for t3 in &s3.trees {
                                        let glue =
                                            |x: &[LabelId], y: &[LabelId]| -> Vec<LabelId> {
                                                let mut w = x[..x.len() - 1].to_vec();
                                                w.extend_from_slice(&y[1..]);
                                                w
                                            };
                                        let r1 = glue(&glue(t1, t2), t3);
                                        let r2 = glue(t1, &glue(t2, t3));
                                        if r1 != r2 {
                                            report.fail(
                                                format!(
                                                    "{} split ({i}, {j}) channels ({}, {})",
                                                    cat.names(tuple),
                                                    cat.label_name(vi),
                                                    cat.label_name(vj)
                                                ),
                                                "gluing orders disagree",
                                            );
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        });
    }
    report
}

/// Symmetry of gluing: gluing then rotating the second segment to the
/// front equals rotating inside both factors, swapping them (dualizing the
/// channel), and gluing the other way.
pub fn check_gluing_symmetry(cat: &CategoryData, bound: usize) -> CheckReport {
    let mut report = CheckReport::new("gluing-symmetry");
    let nl = cat.label_count();
    for len in 0..=bound {
        for_each_tuple(nl, len, |tuple| {
            if fusion_dim(cat, tuple) == 0 {
                report.tick();
                return;
            }
            // Rotation powers of the full tuple, computed incrementally.
            let mut rot_powers: Vec<Matrix> = Vec::with_capacity(len + 1);
            {
                let dim = block_space(cat, tuple).dim();
                rot_powers.push(Matrix::identity(dim, cat.conductor));
                let mut current = tuple.to_vec();
                for _ in 0..len {
                    let step = rotation_map(cat, &current);
                    rot_powers.push(step.matrix.mul(rot_powers.last().unwrap()));
                    current = step.target.labels;
                }
            }
            for split in 0..=len {
                report.tick();
                let (a, b) = (&tuple[..split], &tuple[split..]);
                let l = b.len();
                let g1 = gluing_map_shared(cat, a, b, &[]);
                let (src, m1) = (&g1.0, &g1.2);
                let route1 = rot_powers[l].mul(m1);

                let dst = glued_space(cat, b, a, &[]);
                let mut swap = Matrix::zero(dst.dim(), src.dim(), cat.conductor);
                for (sidx, summand) in src.summands.iter().enumerate() {
                    let w = cat.dual(summand.channel);
                    let didx = match dst.summand_by_channel(w) {
                        Some(i) => i,
                        None => continue,
                    };
                    let z_left = rotation_map_shared(cat, &summand.left.labels);
                    debug_assert_eq!(z_left.target.labels, dst.summands[didx].right.labels);
                    let z_right_fwd = rotation_map_shared(cat, &dst.summands[didx].left.labels);
                    debug_assert_eq!(z_right_fwd.target.labels, summand.right.labels);
                    let z_right_inv =
                        z_right_fwd.matrix.inverse().expect("rotation is invertible");
                    for li in 0..summand.left.dim() {
                        for ri in 0..summand.right.dim() {
                            let sflat = src.index(sidx, li, ri);
                            for s1 in 0..dst.summands[didx].left.dim() {
                                let v1 = z_right_inv.get(s1, ri);
                                if v1.is_zero() {
                                    continue;
                                }
                                for s2 in 0..dst.summands[didx].right.dim() {
                                    let v2 = z_left.matrix.get(s2, li);
                                    if v2.is_zero() {
                                        continue;
                                    }
                                    swap.set(dst.index(didx, s1, s2), sflat, v1.mul(v2));
                                }
                            }
                        }
                    }
                }
                let g2 = gluing_map_shared(cat, b, a, &[]);
                let route2 = g2.2.mul(&swap);
                if route1 != route2 {
                    report.fail(
                        format!("{} split {split}", cat.names(tuple)),
                        format!("{} vs {}", route1.render(), route2.render()),
                    );
                }
            }
        });
    }
    report
}

/// The action commutes with rotation.
pub fn check_action_rotation(cat: &CategoryData, bound: usize) -> CheckReport {
    let mut report = CheckReport::new("action-rotation-compat");
    let nl = cat.label_count();
    for len in 1..=bound {
        for_each_tuple(nl, len, |tuple| {
            if fusion_dim(cat, tuple) == 0 {
                report.tick();
                return;
            }
            let z = rotation_map(cat, tuple);
            for g in cat.group.elements() {
                report.tick();
                let act_then = action_map(cat, &z.target.labels, g).after(&z);
                let act = action_map(cat, tuple, g);
                let then_z = rotation_map(cat, &act.target.labels).after(&act);
                if act_then.matrix != then_z.matrix {
                    report.fail(
                        format!("{} under {}", cat.names(tuple), cat.group.name(g)),
                        format!("{} vs {}", act_then.matrix.render(), then_z.matrix.render()),
                    );
                }
            }
        });
    }
    report
}

/// Product of the vertex coefficients of g along a fusion tree, together
/// with the transported tree.
fn tree_action(
    cat: &CategoryData,
    labels: &[LabelId],
    tree: &[LabelId],
    g: crate::algebra::GElem,
) -> (Vec<LabelId>, crate::algebra::Cyclotomic) {
    let moved: Vec<LabelId> = tree.iter().map(|&l| cat.act(g, l)).collect();
    let mut coeff = crate::algebra::Cyclotomic::one(cat.conductor);
    if !cat.action_coefficients_trivial() {
        for i in 1..labels.len() {
            coeff = coeff.mul(&cat.u(g, tree[i - 1], labels[i], tree[i]));
        }
    }
    (moved, coeff)
}

/// The action commutes with gluing, after transporting the cut channel.
pub fn check_action_gluing(cat: &CategoryData, bound: usize) -> CheckReport {
    let mut report = CheckReport::new("action-gluing-compat");
    let nl = cat.label_count();
    for len in 0..=bound {
        for_each_tuple(nl, len, |tuple| {
            if fusion_dim(cat, tuple) == 0 {
                report.tick();
                return;
            }
            let acted: Vec<_> = cat.group.elements().map(|g| action_map(cat, tuple, g)).collect();
            for split in 0..=len {
                let (a, b) = (&tuple[..split], &tuple[split..]);
                let glue_src = gluing_map_shared(cat, a, b, &[]);
                let (src, m1) = (&glue_src.0, &glue_src.2);
                for g in cat.group.elements() {
                    report.tick();
                    let route1 = acted[g].matrix.mul(m1);

                    let ga: Vec<LabelId> = a.iter().map(|&l| cat.act(g, l)).collect();
                    let gb: Vec<LabelId> = b.iter().map(|&l| cat.act(g, l)).collect();
                    let glue_dst = gluing_map_shared(cat, &ga, &gb, &[]);
                    let (dst, m2) = (&glue_dst.0, &glue_dst.2);
                    let mut moved = Matrix::zero(dst.dim(), src.dim(), cat.conductor);
                    for (sidx, summand) in src.summands.iter().enumerate() {
                        let w = cat.act(g, summand.channel);
                        let didx = match dst.summand_by_channel(w) {
                            Some(i) => i,
                            None => continue,
                        };
                        let dleft = &dst.summands[didx].left;
                        let dright = &dst.summands[didx].right;
                        for (li, ltree) in summand.left.trees.iter().enumerate() {
                            let (lmoved, lc) = tree_action(cat, &summand.left.labels, ltree, g);
                            let lt = dleft.tree_index(&lmoved).expect("action permutes trees");
                            for (ri, rtree) in summand.right.trees.iter().enumerate() {
                                let (rmoved, rc) =
                                    tree_action(cat, &summand.right.labels, rtree, g);
                                let rt =
                                    dright.tree_index(&rmoved).expect("action permutes trees");
                                moved.set(
                                    dst.index(didx, lt, rt),
                                    src.index(sidx, li, ri),
                                    lc.mul(&rc),
                                );
                            }
                        }
                    }
                    let route2 = m2.mul(&moved);
                    if route1 != route2 {
                        report.fail(
                            format!(
                                "{} split {split} under {}",
                                cat.names(tuple),
                                cat.group.name(g)
                            ),
                            format!("{} vs {}", route1.render(), route2.render()),
                        );
                    }
                }
            }
        });
    }
    report
}

/// The action commutes with the braiding.
pub fn check_action_braiding(cat: &CategoryData) -> CheckReport {
    let mut report = CheckReport::new("action-braiding-compat");
    let nl = cat.label_count();
    for_each_tuple(nl, 3, |tuple| {
        if fusion_dim(cat, tuple) == 0 {
            report.tick();
            return;
        }
        for g in cat.group.elements() {
            report.tick();
            let braid = braiding_map(cat, tuple).expect("arity 3");
            let route1 = action_map(cat, &braid.target.labels, g).after(&braid);
            let act = action_map(cat, tuple, g);
            let braid_g = braiding_map(cat, &act.target.labels).expect("arity 3");
            let route2 = braid_g.after(&act);
            if route1.target.labels != route2.target.labels || route1.matrix != route2.matrix {
                report.fail(
                    format!("{} under {}", cat.names(tuple), cat.group.name(g)),
                    format!("{} vs {}", route1.matrix.render(), route2.matrix.render()),
                );
            }
        }
    });
    report
}

/// Hexagon: commuting one label past a fused pair equals the two single
/// swaps in sequence, for the braiding and for its inverse.
pub fn check_hexagon_blocks(cat: &CategoryData) -> CheckReport {
    let mut report = CheckReport::new("hexagon-blocks");
    let nl = cat.label_count();
    for_each_tuple(nl, 4, |tuple| {
        if fusion_dim(cat, tuple) == 0 {
            report.tick();
            return;
        }
        report.tick();
        let fused = fused_commutativity(cat, tuple).expect("arity 4");
        let s1 = gen_commutativity(cat, tuple, 1).expect("pos 1");
        let s2 = gen_commutativity(cat, &s1.target.labels, 2).expect("pos 2");
        let steps = s2.after(&s1);
        if fused.target.labels != steps.target.labels || fused.matrix != steps.matrix {
            report.fail(
                format!("forward {}", cat.names(tuple)),
                format!("fused {} vs steps {}", fused.matrix.render(), steps.matrix.render()),
            );
        }

        report.tick();
        let fused_rev = fused_commutativity_rev(cat, tuple).expect("arity 4");
        let r1 = gen_commutativity_rev(cat, tuple, 1).expect("pos 1");
        let r2 = gen_commutativity_rev(cat, &r1.target.labels, 2).expect("pos 2");
        let steps_rev = r2.after(&r1);
        if fused_rev.target.labels != steps_rev.target.labels
            || fused_rev.matrix != steps_rev.matrix
        {
            report.fail(
                format!("reverse {}", cat.names(tuple)),
                format!(
                    "fused {} vs steps {}",
                    fused_rev.matrix.render(),
                    steps_rev.matrix.render()
                ),
            );
        }
    });
    report
}

/// Dehn twist: braiding then rotation equals rotation, braiding, and the
/// group-invariance map, on every dual pair.
pub fn check_dehn_twist(cat: &CategoryData) -> CheckReport {
    let mut report = CheckReport::new("dehn-twist");
    report.note(
        "closing arrow interpreted as the invariance map of the degree of the first label"
            .to_string(),
    );
    let nl = cat.label_count();
    for_each_tuple(nl, 2, |tuple| {
        report.tick();
        if fusion_dim(cat, tuple) == 0 {
            return;
        }
        let p = cat.deg(tuple[0]);
        let sigma = gen_commutativity(cat, tuple, 0).expect("pos 0");
        let route1 = rotation_map(cat, &sigma.target.labels).after(&sigma);

        let z = rotation_map(cat, tuple);
        let sigma2 = gen_commutativity(cat, &z.target.labels, 0).expect("pos 0");
        let phi = action_map(cat, &sigma2.target.labels, p);
        let route2 = phi.after(&sigma2.after(&z));
        if route1.target.labels != route2.target.labels || route1.matrix != route2.matrix {
            report.fail(
                cat.names(tuple),
                format!("{} vs {}", route1.matrix.render(), route2.matrix.render()),
            );
        }
    });
    report
}

/// Runs the whole axiom battery at the given tuple-size bound.
pub fn check_ms_axioms(cat: &CategoryData, bound: usize) -> Vec<CheckReport> {
    vec![
        check_normalization(cat),
        check_nondegeneracy_pairing(cat),
        check_rotation(cat, bound),
        check_action_multiplicativity(cat, bound),
        check_gluing_associativity(cat, bound),
        check_gluing_symmetry(cat, bound),
        check_action_rotation(cat, bound),
        check_action_gluing(cat, bound),
        check_action_braiding(cat),
        check_hexagon_blocks(cat),
        check_dehn_twist(cat),
    ]
}
