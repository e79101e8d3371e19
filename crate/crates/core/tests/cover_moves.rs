//! Move calculus on gluing graphs: the worked examples and the
//! combinatorial move relations.

use gblocks::algebra::FiniteGroup;
use gblocks::covers::{Cut, GluingGraph, Move, StandardBlock};

fn z2() -> FiniteGroup {
    FiniteGroup::cyclic(2).unwrap()
}

fn s3() -> FiniteGroup {
    FiniteGroup::symmetric3().unwrap()
}

fn one_block(grp: &FiniteGroup, g: Vec<usize>, h: Vec<usize>) -> GluingGraph {
    let n = g.len();
    let block = StandardBlock::new(grp, g, h).unwrap();
    GluingGraph::new(grp, vec![block], vec![], (0..n).map(|i| (0, i)).collect()).unwrap()
}

#[test]
fn rotation_cycles_the_block_data() {
    let grp = s3();
    let a = grp.by_name("(12)").unwrap();
    let b = grp.by_name("(13)").unwrap();
    let c = grp.inv(grp.mul(a, b));
    let p = one_block(&grp, vec![a, b, c], vec![0, 0, 0]);
    let q = p.apply_move(&grp, &Move::Z { block: 0 }).unwrap();
    assert_eq!(q.blocks[0].g, vec![c, a, b]);
    // Rotating n times returns to the start.
    let mut r = p.clone();
    for _ in 0..3 {
        r = r.apply_move(&grp, &Move::Z { block: 0 }).unwrap();
    }
    assert_eq!(r, p);
}

#[test]
fn rotation_preserves_free_boundary_order_and_monodromy() {
    let grp = s3();
    let a = grp.by_name("(123)").unwrap();
    let b = grp.by_name("(23)").unwrap();
    let c = grp.inv(grp.mul(a, b));
    let h = grp.by_name("(12)").unwrap();
    let p = one_block(&grp, vec![a, b, c], vec![h, 0, 0]);
    let before: Vec<usize> = p
        .free
        .iter()
        .map(|&(bi, k)| p.blocks[bi].monodromy(&grp, k).unwrap())
        .collect();
    for mv in [Move::Z { block: 0 }, Move::P { block: 0, x: b }] {
        let q = p.apply_move(&grp, &mv).unwrap();
        assert_eq!(q.free.len(), p.free.len());
        let after: Vec<usize> = q
            .free
            .iter()
            .map(|&(bi, k)| q.blocks[bi].monodromy(&grp, k).unwrap())
            .collect();
        assert_eq!(before, after, "{mv:?} must preserve free monodromies in order");
    }
}

#[test]
fn relabeling_by_identity_is_trivial() {
    let grp = z2();
    let p = one_block(&grp, vec![1, 1], vec![0, 0]);
    let q = p.apply_move(&grp, &Move::P { block: 0, x: 0 }).unwrap();
    assert_eq!(p, q);
}

#[test]
fn relabelings_compose_through_the_group() {
    let grp = s3();
    let a = grp.by_name("(123)").unwrap();
    let p = one_block(&grp, vec![a, grp.inv(a)], vec![0, 0]);
    for x in grp.elements() {
        for y in grp.elements() {
            let via_two = p
                .apply_move(&grp, &Move::P { block: 0, x: y })
                .unwrap()
                .apply_move(&grp, &Move::P { block: 0, x })
                .unwrap();
            let direct = p.apply_move(&grp, &Move::P { block: 0, x: grp.mul(x, y) }).unwrap();
            assert_eq!(via_two, direct);
        }
    }
}

#[test]
fn fusion_concatenates_blocks() {
    let grp = s3();
    let a = grp.by_name("(12)").unwrap();
    let b = grp.by_name("(123)").unwrap();
    let x = grp.inv(grp.mul(a, b));
    let c = grp.by_name("(23)").unwrap();
    let d = grp.inv(grp.mul(grp.inv(x), c));
    let b1 = StandardBlock::new(&grp, vec![a, b, x], vec![0, 0, 0]).unwrap();
    let b2 = StandardBlock::new(&grp, vec![grp.inv(x), c, d], vec![0, 0, 0]).unwrap();
    let p = GluingGraph::new(
        &grp,
        vec![b1, b2],
        vec![Cut { from: (0, 2), to: (1, 0) }],
        vec![(0, 0), (0, 1), (1, 1), (1, 2)],
    )
    .unwrap();
    let mv = p
        .enumerate_moves(&grp)
        .into_iter()
        .find(|m| matches!(m, Move::F { .. }))
        .expect("the cut is fusable");
    let q = p.apply_move(&grp, &mv).unwrap();
    assert_eq!(q.blocks.len(), 1);
    assert_eq!(q.blocks[0].g, vec![a, b, c, d]);
    assert!(q.cuts.is_empty());
    assert_eq!(q.free.len(), 4);
}

#[test]
fn move_enumeration_matches_the_catalog() {
    let grp = z2();
    // Single two-holed block: one rotation and two relabelings only.
    let p = one_block(&grp, vec![1, 1], vec![0, 0]);
    let moves = p.enumerate_moves(&grp);
    assert_eq!(
        moves,
        vec![Move::Z { block: 0 }, Move::P { block: 0, x: 0 }, Move::P { block: 0, x: 1 }]
    );

    // Two three-holed blocks with one cut: exactly one fusion and two lift
    // changes appear, along with rotations, braids, and relabelings.
    let b1 = StandardBlock::new(&grp, vec![1, 1, 0], vec![0, 0, 0]).unwrap();
    let b2 = StandardBlock::new(&grp, vec![0, 1, 1], vec![0, 0, 0]).unwrap();
    let q = GluingGraph::new(
        &grp,
        vec![b1, b2],
        vec![Cut { from: (0, 2), to: (1, 0) }],
        vec![(0, 0), (0, 1), (1, 1), (1, 2)],
    )
    .unwrap();
    let moves = q.enumerate_moves(&grp);
    let count = |pred: fn(&Move) -> bool| moves.iter().filter(|m| pred(m)).count();
    assert_eq!(count(|m| matches!(m, Move::F { .. })), 1);
    assert_eq!(count(|m| matches!(m, Move::T { .. })), 2);
    assert_eq!(count(|m| matches!(m, Move::Z { .. })), 2);
    assert_eq!(count(|m| matches!(m, Move::B { .. })), 2);
    assert_eq!(count(|m| matches!(m, Move::P { .. })), 4);

    // The empty graph admits no moves.
    let empty = GluingGraph::new(&grp, vec![], vec![], vec![]).unwrap();
    assert!(empty.enumerate_moves(&grp).is_empty());
}

#[test]
fn braid_move_needs_three_boundaries() {
    let grp = z2();
    let p = one_block(&grp, vec![1, 1], vec![0, 0]);
    assert!(p.apply_move(&grp, &Move::B { block: 0 }).is_err());
}

#[test]
fn braid_move_transforms_like_the_generator() {
    let grp = s3();
    let g1 = grp.by_name("(12)").unwrap();
    let g2 = grp.by_name("(123)").unwrap();
    let g3 = grp.inv(grp.mul(g1, g2));
    let p = one_block(&grp, vec![g1, g2, g3], vec![0, 0, 0]);
    let q = p.apply_move(&grp, &Move::B { block: 0 }).unwrap();
    assert_eq!(q.blocks[0].g, vec![g1, grp.conj(g2, g3), g2]);
    assert_eq!(q.blocks[0].h, vec![0, grp.inv(g2), 0]);
    // Free boundaries keep their monodromies in order.
    let before: Vec<usize> =
        p.free.iter().map(|&(b, k)| p.blocks[b].monodromy(&grp, k).unwrap()).collect();
    let after: Vec<usize> =
        q.free.iter().map(|&(b, k)| q.blocks[b].monodromy(&grp, k).unwrap()).collect();
    assert_eq!(before, after);
}

#[test]
fn find_path_recovers_single_moves() {
    let grp = s3();
    let a = grp.by_name("(123)").unwrap();
    let b = grp.by_name("(13)").unwrap();
    let c = grp.inv(grp.mul(a, b));
    let p = one_block(&grp, vec![a, b, c], vec![0, 0, 0]);
    let q = p.apply_move(&grp, &Move::Z { block: 0 }).unwrap();
    assert_eq!(p.find_path(&grp, &q, 3), Some(vec![Move::Z { block: 0 }]));

    let x = grp.by_name("(23)").unwrap();
    let r = p
        .apply_move(&grp, &Move::P { block: 0, x })
        .unwrap()
        .apply_move(&grp, &Move::Z { block: 0 })
        .unwrap();
    let path = p.find_path(&grp, &r, 2).expect("reachable in two moves");
    assert!(path.len() <= 2);
    // Replaying the path lands on the goal.
    let mut cur = p.clone();
    for mv in &path {
        cur = cur.apply_move(&grp, mv).unwrap();
    }
    assert_eq!(cur, r);
}

#[test]
fn find_path_fails_across_boundary_counts() {
    let grp = z2();
    let p = one_block(&grp, vec![1, 1], vec![0, 0]);
    let q = one_block(&grp, vec![1, 1, 0], vec![0, 0, 0]);
    assert_eq!(p.find_path(&grp, &q, 4), None);
}

#[test]
fn self_gluing_and_cycles_are_rejected() {
    let grp = z2();
    let b1 = StandardBlock::new(&grp, vec![1, 1], vec![0, 0]).unwrap();
    let err = GluingGraph::new(
        &grp,
        vec![b1.clone()],
        vec![Cut { from: (0, 0), to: (0, 1) }],
        vec![],
    )
    .unwrap_err();
    assert!(err.to_string().contains("itself"));

    let b2 = b1.clone();
    let err = GluingGraph::new(
        &grp,
        vec![b1, b2],
        vec![
            Cut { from: (0, 0), to: (1, 0) },
            Cut { from: (0, 1), to: (1, 1) },
        ],
        vec![],
    )
    .unwrap_err();
    assert!(err.to_string().contains("genus"));
}

#[test]
fn cut_orientation_is_normalized_with_label_transport() {
    let grp = s3();
    let a = grp.by_name("(123)").unwrap();
    let h1 = grp.by_name("(12)").unwrap();
    let h2 = grp.by_name("(13)").unwrap();
    // Same cover written with the cut in both orientations.
    let mk = |from, to| {
        let b1 = StandardBlock::new(&grp, vec![a, grp.inv(a)], vec![0, h1]).unwrap();
        // Monodromy of b1 at boundary 1 is h1·a·h1⁻¹; the glued boundary of
        // b2 needs the inverse monodromy h2·g₀⁻¹·h2⁻¹.
        let g0 = grp.conj(grp.inv(h2), grp.conj(h1, a));
        let b2 = StandardBlock::new(&grp, vec![g0, grp.inv(g0)], vec![h2, 0]).unwrap();
        GluingGraph::new(&grp, vec![b1, b2], vec![Cut { from, to }], vec![(0, 0), (1, 1)])
    };
    // The same cover written with the cut in either orientation
    // canonicalizes identically.
    let p = mk((0, 1), (1, 0)).unwrap();
    let q = mk((1, 0), (0, 1)).unwrap();
    assert_eq!(p, q);
}
