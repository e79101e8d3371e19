//! Evaluation of shipped covers, move maps, relations, and path
//! independence.

use std::path::PathBuf;

use gblocks::category::CategoryData;
use gblocks::covers::{load_cover, GluingGraph, Move};
use gblocks::tau::{
    check_path_independence, check_relations, load_labeling, move_map, path_map, t_action,
    tau_dim, tau_space, CoverLabeling, RelationBounds,
};

fn data_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn load_cat(rel: &str) -> CategoryData {
    CategoryData::load_path(&data_path(rel), 64).expect("shipped file loads")
}

fn load_cover_file(cat: &CategoryData, rel: &str) -> GluingGraph {
    let text = std::fs::read_to_string(data_path(rel)).unwrap();
    load_cover(&cat.group, &text).expect("shipped cover loads")
}

fn load_labeling_file(cat: &CategoryData, graph: &GluingGraph, rel: &str) -> CoverLabeling {
    let text = std::fs::read_to_string(data_path(rel)).unwrap();
    load_labeling(cat, graph, &text).expect("shipped labeling loads")
}

#[test]
fn empty_cover_has_dimension_one() {
    let cat = load_cat("categories/ising_z2.json");
    let graph = GluingGraph::new(&cat.group, vec![], vec![], vec![]).unwrap();
    let labeling = CoverLabeling::new(&cat, &graph, vec![]).unwrap();
    assert_eq!(tau_dim(&cat, &graph, &labeling), 1);
}

#[test]
fn four_sigma_cover_has_dimension_two() {
    let cat = load_cat("categories/ising_z2.json");
    let graph = load_cover_file(&cat, "covers/ising_four_sigma.json");
    let labeling = load_labeling_file(&cat, &graph, "labels/sigma4.json");
    assert_eq!(tau_dim(&cat, &graph, &labeling), 2);
}

#[test]
fn factorization_over_the_cut_matches_the_component_product() {
    // For each shipped one-cut cover the total equals the sum over cut
    // channels of the product of the component dimensions.
    for (cat_file, cover_file, label_file) in [
        ("categories/ising_z2.json", "covers/ising_four_sigma.json", "labels/sigma4.json"),
        ("categories/vec_s3.json", "covers/vec_s3_two_block.json", "labels/vec_s3_two_block.json"),
        ("categories/fibonacci.json", "covers/fib_two_block.json", "labels/fib_tau4.json"),
    ] {
        let cat = load_cat(cat_file);
        let graph = load_cover_file(&cat, cover_file);
        let labeling = load_labeling_file(&cat, &graph, label_file);
        assert_eq!(graph.cuts.len(), 1, "{cover_file} must have one cut");
        let total = tau_dim(&cat, &graph, &labeling);
        let mut by_channels = 0;
        for v in gblocks::tau::cut_channels(&cat, &graph, 0) {
            let per_block = gblocks::tau::block_labels(&cat, &graph, &labeling, &[v]);
            let product: u64 = per_block
                .iter()
                .map(|ls| gblocks::category::fusion_dim(&cat, ls))
                .product();
            by_channels += product;
        }
        assert_eq!(total, by_channels, "{cover_file}");
        assert!(total > 0, "{cover_file} evaluates nontrivially");
    }
}

#[test]
fn vec_s3_one_block_cover_evaluates_to_one() {
    let cat = load_cat("categories/vec_s3.json");
    let graph = load_cover_file(&cat, "covers/vec_s3_one_block.json");
    let labeling = load_labeling_file(&cat, &graph, "labels/vec_s3_one_block.json");
    assert_eq!(tau_dim(&cat, &graph, &labeling), 1);
}

#[test]
fn fusion_move_map_matches_the_gluing_factorization() {
    let cat = load_cat("categories/ising_z2.json");
    let graph = load_cover_file(&cat, "covers/ising_four_sigma.json");
    let labeling = load_labeling_file(&cat, &graph, "labels/sigma4.json");
    let fused = move_map(&cat, &graph, &labeling, &Move::F { cut: 0 }).unwrap();
    assert_eq!(fused.source.dim(), 2);
    assert_eq!(fused.target.dim(), 2);
    assert!(fused.matrix.is_invertible());
    // The merged presentation is a single four-holed block.
    assert_eq!(fused.graph.blocks.len(), 1);
    assert_eq!(fused.graph.blocks[0].boundaries(), 4);
}

#[test]
fn empty_path_is_the_identity() {
    let cat = load_cat("categories/ising_z2.json");
    let graph = load_cover_file(&cat, "covers/ising_four_sigma.json");
    let labeling = load_labeling_file(&cat, &graph, "labels/sigma4.json");
    let map = path_map(&cat, &graph, &labeling, &[]).unwrap();
    assert!(map.matrix.is_identity());
}

#[test]
fn rotation_moves_compose_to_the_identity_on_tau() {
    let cat = load_cat("categories/vec_s3.json");
    let graph = load_cover_file(&cat, "covers/vec_s3_one_block.json");
    let labeling = load_labeling_file(&cat, &graph, "labels/vec_s3_one_block.json");
    let loop3 = path_map(
        &cat,
        &graph,
        &labeling,
        &[Move::Z { block: 0 }, Move::Z { block: 0 }, Move::Z { block: 0 }],
    )
    .unwrap();
    assert_eq!(loop3.graph, graph);
    assert!(loop3.matrix.is_identity());
}

#[test]
fn relabeling_moves_compose_through_the_group_on_tau() {
    let cat = load_cat("categories/vec_s3.json");
    let graph = load_cover_file(&cat, "covers/vec_s3_one_block.json");
    let labeling = load_labeling_file(&cat, &graph, "labels/vec_s3_one_block.json");
    let x = cat.group.by_name("(12)").unwrap();
    let y = cat.group.by_name("(123)").unwrap();
    let via_two = path_map(
        &cat,
        &graph,
        &labeling,
        &[Move::P { block: 0, x: y }, Move::P { block: 0, x }],
    )
    .unwrap();
    let direct = path_map(
        &cat,
        &graph,
        &labeling,
        &[Move::P { block: 0, x: cat.group.mul(x, y) }],
    )
    .unwrap();
    assert_eq!(via_two.graph, direct.graph);
    assert_eq!(via_two.matrix, direct.matrix);
}

#[test]
fn identity_lift_shift_is_the_identity() {
    let cat = load_cat("categories/ising_z2.json");
    let graph = load_cover_file(&cat, "covers/ising_four_sigma.json");
    let labeling = load_labeling_file(&cat, &graph, "labels/sigma4.json");
    let e = cat.group.identity();
    let (g2, lab2, map) = t_action(&cat, &graph, &labeling, &[e, e, e, e]).unwrap();
    assert_eq!(g2, graph);
    assert_eq!(lab2, labeling);
    assert!(map.matrix.is_identity());
}

#[test]
fn lift_shifts_compose_pointwise() {
    let cat = load_cat("categories/ising_z2.json");
    let graph = load_cover_file(&cat, "covers/ising_four_sigma.json");
    let labeling = load_labeling_file(&cat, &graph, "labels/sigma4.json");
    let x = 1usize;
    let (g1, lab1, m1) = t_action(&cat, &graph, &labeling, &[x, 0, x, 0]).unwrap();
    let (g2, _lab2, m2) = t_action(&cat, &g1, &lab1, &[0, x, 0, x]).unwrap();
    let (g12, _lab12, m12) = t_action(&cat, &graph, &labeling, &[x, x, x, x]).unwrap();
    assert_eq!(g2, g12);
    assert_eq!(m2.matrix.mul(&m1.matrix), m12.matrix);
}

#[test]
fn vec_s3_relations_pass() {
    let cat = load_cat("categories/vec_s3.json");
    for report in check_relations(&cat, RelationBounds::default()) {
        assert!(report.passed(), "{}", report.summary());
    }
}

#[test]
fn ising_relations_pass() {
    let cat = load_cat("categories/ising_z2.json");
    for report in check_relations(&cat, RelationBounds::default()) {
        assert!(report.passed(), "{}", report.summary());
    }
}

#[test]
fn ising_path_independence_at_depth_six() {
    let cat = load_cat("categories/ising_z2.json");
    let graph = load_cover_file(&cat, "covers/ising_four_sigma.json");
    let labeling = load_labeling_file(&cat, &graph, "labels/sigma4.json");
    let fused = graph.apply_move(&cat.group, &Move::F { cut: 0 }).unwrap();
    let report = check_path_independence(&cat, &graph, &fused, &labeling, 6, gblocks::tau::PathMoves::BraidFree);
    assert!(report.passed(), "{}", report.summary());
    assert!(report.notes.iter().any(|n| n.contains("target reached")), "{:?}", report.notes);
}

#[test]
fn single_move_path_is_recovered() {
    let cat = load_cat("categories/vec_s3.json");
    let graph = load_cover_file(&cat, "covers/vec_s3_one_block.json");
    let q = graph.apply_move(&cat.group, &Move::Z { block: 0 }).unwrap();
    assert_eq!(graph.find_path(&cat.group, &q, 2), Some(vec![Move::Z { block: 0 }]));
}

#[test]
fn mutated_ising_theta_breaks_a_relation() {
    let path = data_path("categories/ising_z2.json");
    let mut value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    value["theta"]["sigma"] = serde_json::json!([[1, 1, 3]]);
    let cat = CategoryData::from_json_str(&value.to_string(), 64).unwrap();
    let reports = check_relations(&cat, RelationBounds::default());
    let failed: Vec<&str> =
        reports.iter().filter(|r| !r.passed()).map(|r| r.name.as_str()).collect();
    assert!(
        failed.contains(&"dehn-twist") || failed.contains(&"rotation-loop"),
        "perturbed twist must break a twist-sensitive relation, failed: {failed:?}"
    );
}

#[test]
fn tau_dim_is_invariant_under_every_move() {
    let cat = load_cat("categories/ising_z2.json");
    let graph = load_cover_file(&cat, "covers/ising_four_sigma.json");
    let labeling = load_labeling_file(&cat, &graph, "labels/sigma4.json");
    let d = tau_dim(&cat, &graph, &labeling);
    for mv in graph.enumerate_moves(&cat.group) {
        if let Ok(step) = move_map(&cat, &graph, &labeling, &mv) {
            assert_eq!(step.target.dim() as u64, d, "{mv:?}");
            assert!(step.matrix.is_invertible(), "{mv:?}");
        }
    }
    let space = tau_space(&cat, &graph, &labeling);
    assert_eq!(space.dim() as u64, d);
}

#[test]
fn braid_loops_report_the_framing_discrepancy() {
    // A braid loop that restores the block data acts by boundary twists,
    // which the block data cannot see; with braids enabled the checker
    // reports the discrepancy honestly rather than forcing it green.
    let cat = load_cat("categories/ising_z2.json");
    let graph = load_cover_file(&cat, "covers/ising_four_sigma.json");
    let labeling = load_labeling_file(&cat, &graph, "labels/sigma4.json");
    let fused = graph.apply_move(&cat.group, &Move::F { cut: 0 }).unwrap();
    let full = check_path_independence(&cat, &graph, &fused, &labeling, 4, gblocks::tau::PathMoves::All);
    assert!(!full.passed(), "braid loops differ by twist scalars at data level");
    let free = check_path_independence(&cat, &graph, &fused, &labeling, 4, gblocks::tau::PathMoves::BraidFree);
    assert!(free.passed(), "{}", free.summary());
}

#[test]
fn lift_shift_commutes_with_fusion() {
    // Shifting all marked points then fusing equals fusing then shifting
    // the surviving free boundaries.
    let cat = load_cat("categories/ising_z2.json");
    let graph = load_cover_file(&cat, "covers/ising_four_sigma.json");
    let labeling = load_labeling_file(&cat, &graph, "labels/sigma4.json");
    let x = 1usize;
    let (shifted, lab_shifted, act) = t_action(&cat, &graph, &labeling, &[x; 4]).unwrap();
    let fuse_after = move_map(&cat, &shifted, &lab_shifted, &Move::F { cut: 0 }).unwrap();
    let route1 = fuse_after.matrix.mul(&act.matrix);

    let fuse_first = move_map(&cat, &graph, &labeling, &Move::F { cut: 0 }).unwrap();
    let (merged_shifted, _lab2, act2) =
        t_action(&cat, &fuse_first.graph, &labeling, &[x; 4]).unwrap();
    let route2 = act2.matrix.mul(&fuse_first.matrix);

    assert_eq!(fuse_after.graph, merged_shifted);
    assert_eq!(route1, route2);
}
