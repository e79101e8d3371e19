//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Every tolerance here is exact: integer equality for dimensions
//! and exact cyclotomic equality for matrices.

use std::path::PathBuf;
use std::time::Instant;

use gblocks::algebra::Cyclotomic;
use gblocks::blocks::{action_map, block_space, check_ms_axioms, rotation_power};
use gblocks::category::{check_all, fusion_dim, CategoryData, LabelId};
use gblocks::covers::{load_cover, GluingGraph, Move};
use gblocks::roundtrip::roundtrip_check;
use gblocks::tau::{
    check_path_independence, check_relations, load_labeling, path_map, tau_dim, CoverLabeling,
    PathMoves, RelationBounds,
};

fn data_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn load(rel: &str) -> CategoryData {
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

fn verdict(name: &str, pass: bool) {
    println!("criterion {name}: {}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {name} failed");
}

/// Criterion 1: the point-label data over the symmetric group passes every
/// check with every block map a 1×1 identity, in under five seconds.
#[test]
fn criterion_1_vec_s3_full_suite() {
    let start = Instant::now();
    let cat = load("categories/vec_s3.json");
    let mut pass = true;
    for report in check_all(&cat) {
        pass &= report.passed();
    }
    for report in check_ms_axioms(&cat, 5) {
        pass &= report.passed();
    }
    for report in check_relations(&cat, RelationBounds::default()) {
        pass &= report.passed();
    }
    pass &= roundtrip_check(&cat).passed();
    // Every structure map on nonzero tuples is the 1×1 identity.
    let nl = cat.label_count();
    for a in 0..nl {
        for b in 0..nl {
            for c in 0..nl {
                let labels = [a, b, c];
                if fusion_dim(&cat, &labels) == 0 {
                    continue;
                }
                let z = gblocks::blocks::rotation_map(&cat, &labels);
                pass &= z.matrix.rows() == 1 && z.matrix.get(0, 0).is_one();
                let s = gblocks::blocks::braiding_map(&cat, &labels).unwrap();
                pass &= s.matrix.rows() == 1 && s.matrix.get(0, 0).is_one();
                for g in cat.group.elements() {
                    let m = action_map(&cat, &labels, g);
                    pass &= m.matrix.rows() == 1 && m.matrix.get(0, 0).is_one();
                }
            }
        }
    }
    let elapsed = start.elapsed();
    println!("vec_s3 suite completed in {elapsed:?}");
    pass &= elapsed.as_secs_f64() < 5.0;
    verdict("1 (vec_s3 full suite, < 5 s)", pass);
}

/// Criterion 2: the graded spin data passes every check, including
/// braid-free path independence at depth six on the two-block cover, in
/// under sixty seconds.
#[test]
fn criterion_2_ising_full_suite() {
    let start = Instant::now();
    let cat = load("categories/ising_z2.json");
    let mut pass = true;
    for report in check_all(&cat) {
        pass &= report.passed();
    }
    for report in check_ms_axioms(&cat, 4) {
        pass &= report.passed();
    }
    for report in check_relations(&cat, RelationBounds::default()) {
        pass &= report.passed();
    }
    let graph = load_cover_file(&cat, "covers/ising_four_sigma.json");
    let labeling = load_labeling_file(&cat, &graph, "labels/sigma4.json");
    let fused = graph.apply_move(&cat.group, &Move::F { cut: 0 }).unwrap();
    let paths =
        check_path_independence(&cat, &graph, &fused, &labeling, 6, PathMoves::BraidFree);
    pass &= paths.passed();
    pass &= paths.notes.iter().any(|n| n.contains("target reached"));
    pass &= roundtrip_check(&cat).passed();
    let elapsed = start.elapsed();
    println!("ising suite completed in {elapsed:?}");
    pass &= elapsed.as_secs_f64() < 60.0;
    verdict("2 (ising full suite, < 60 s)", pass);
}

/// Criterion 3: exact dimension values against the brute-force tree
/// enumeration oracle.
#[test]
fn criterion_3_exact_dimensions() {
    fn oracle(cat: &CategoryData, labels: &[LabelId]) -> u64 {
        fn go(cat: &CategoryData, labels: &[LabelId], prefix: &mut Vec<LabelId>) -> u64 {
            let k = prefix.len();
            if k == labels.len() {
                return u64::from(prefix.last().copied().unwrap_or(cat.unit()) == cat.unit());
            }
            let mut total = 0;
            for u in cat.labels() {
                let ok = if k == 0 { u == labels[0] } else { cat.n(prefix[k - 1], labels[k], u) };
                if ok {
                    prefix.push(u);
                    total += go(cat, labels, prefix);
                    prefix.pop();
                }
            }
            total
        }
        go(cat, labels, &mut Vec::new())
    }

    let mut pass = true;
    let ising = load("categories/ising_z2.json");
    let sigma = ising.label_by_name("sigma").unwrap();
    for (n, expected) in [(1usize, 1u64), (2, 2), (3, 4)] {
        let labels = vec![sigma; 2 * n];
        pass &= fusion_dim(&ising, &labels) == expected;
        pass &= oracle(&ising, &labels) == expected;
    }
    let fib = load("categories/fibonacci.json");
    let tau = fib.label_by_name("tau").unwrap();
    for (n, expected) in [(3usize, 1u64), (4, 2), (5, 3), (6, 5)] {
        let labels = vec![tau; n];
        pass &= fusion_dim(&fib, &labels) == expected;
        pass &= oracle(&fib, &labels) == expected;
    }
    let vec_s3 = load("categories/vec_s3.json");
    for a in vec_s3.labels() {
        for b in vec_s3.labels() {
            for c in vec_s3.labels() {
                let product = vec_s3
                    .group
                    .mul(vec_s3.group.mul(vec_s3.deg(a), vec_s3.deg(b)), vec_s3.deg(c));
                let expected = u64::from(product == vec_s3.group.identity());
                pass &= fusion_dim(&vec_s3, &[a, b, c]) == expected;
            }
        }
    }
    verdict("3 (exact dimensions vs oracle)", pass);
}

/// Criterion 4: for every shipped one-cut cover, the evaluation equals the
/// sum over cut channels of products of component dimensions.
#[test]
fn criterion_4_factorization() {
    let mut pass = true;
    for (cat_file, cover_file, label_file) in [
        ("categories/ising_z2.json", "covers/ising_four_sigma.json", "labels/sigma4.json"),
        ("categories/vec_s3.json", "covers/vec_s3_two_block.json", "labels/vec_s3_two_block.json"),
        ("categories/fibonacci.json", "covers/fib_two_block.json", "labels/fib_tau4.json"),
    ] {
        let cat = load(cat_file);
        let graph = load_cover_file(&cat, cover_file);
        let labeling = load_labeling_file(&cat, &graph, label_file);
        assert_eq!(graph.cuts.len(), 1);
        let total = tau_dim(&cat, &graph, &labeling);
        let mut factored = 0;
        for v in gblocks::tau::cut_channels(&cat, &graph, 0) {
            let per_block = gblocks::tau::block_labels(&cat, &graph, &labeling, &[v]);
            factored += per_block
                .iter()
                .map(|ls| fusion_dim(&cat, ls))
                .product::<u64>();
        }
        pass &= total == factored && total > 0;
    }
    verdict("4 (gluing factorization, exact)", pass);
}

/// Criterion 5: six single-entry mutations of the graded spin data, each
/// caught by at least one checker (or rejected at load).
#[test]
fn criterion_5_mutation_sensitivity() {
    let source =
        std::fs::read_to_string(data_path("categories/ising_z2.json")).expect("file reads");
    let base: serde_json::Value = serde_json::from_str(&source).unwrap();

    let mutations: Vec<(&str, Box<dyn Fn(&mut serde_json::Value)>)> = vec![
        ("F symbol sign", Box::new(|v| {
            v["F"]["psi,sigma,psi;sigma;sigma,sigma"] = serde_json::json!(1);
        })),
        ("R symbol flattened", Box::new(|v| {
            v["R"]["sigma,sigma;1"] = serde_json::json!(1);
        })),
        ("U coefficient sign", Box::new(|v| {
            v["U"] = serde_json::json!({
                "x;psi,psi;1": -1,
                "x;psi,sigma;sigma": 1,
                "x;sigma,psi;sigma": 1,
                "x;sigma,sigma;1": 1,
                "x;sigma,sigma;psi": 1
            });
        })),
        ("twist trivialized", Box::new(|v| {
            v["theta"]["sigma"] = serde_json::json!(1);
        })),
        ("fusion channel removed", Box::new(|v| {
            let fusion = v["fusion"].as_array_mut().unwrap();
            fusion.retain(|t| t != &serde_json::json!(["sigma", "sigma", "psi"]));
        })),
        ("grading entry changed", Box::new(|v| {
            v["labels"][1]["degree"] = serde_json::json!("x");
        })),
    ];

    let mut pass = true;
    for (name, mutate) in &mutations {
        let mut value = base.clone();
        mutate(&mut value);
        let caught = match CategoryData::from_json_str(&value.to_string(), 64) {
            Err(_) => true, // rejected at load with a named invariant
            Ok(cat) => {
                let mut failed = check_all(&cat).iter().any(|r| !r.passed());
                if !failed {
                    failed = check_ms_axioms(&cat, 4).iter().any(|r| !r.passed());
                }
                if !failed {
                    failed =
                        check_relations(&cat, RelationBounds::default()).iter().any(|r| !r.passed());
                }
                if !failed {
                    failed = !roundtrip_check(&cat).passed();
                }
                failed
            }
        };
        println!("  mutation {name}: {}", if caught { "caught" } else { "MISSED" });
        pass &= caught;
    }
    verdict("5 (mutation sensitivity, 6 mutations)", pass);
}

/// Criterion 6: the exact matrix identities, at exact cyclotomic equality.
#[test]
fn criterion_6_exact_matrix_identities() {
    let mut pass = true;
    for (file, bound) in [
        ("categories/vec_s3.json", 5usize),
        ("categories/ising_z2.json", 5),
        ("categories/fibonacci.json", 5),
    ] {
        let cat = load(file);
        let nl = cat.label_count();
        // Full rotations are the identity on every tuple within the bound.
        let mut tuple_ok = true;
        for len in 1..=bound {
            let mut tuple = vec![0usize; len];
            loop {
                if fusion_dim(&cat, &tuple) > 0 {
                    tuple_ok &= rotation_power(&cat, &tuple, len).matrix.is_identity();
                }
                let mut i = len;
                let mut done = false;
                loop {
                    if i == 0 {
                        done = true;
                        break;
                    }
                    i -= 1;
                    tuple[i] += 1;
                    if tuple[i] < nl {
                        break;
                    }
                    tuple[i] = 0;
                }
                if done {
                    break;
                }
            }
        }
        pass &= tuple_ok;

        // Action maps compose through the group on 3-tuples.
        let mut act_ok = true;
        for a in 0..nl {
            for b in 0..nl {
                for c in 0..nl {
                    let labels = [a, b, c];
                    if fusion_dim(&cat, &labels) == 0 {
                        continue;
                    }
                    for g in cat.group.elements() {
                        for h in cat.group.elements() {
                            let mh = action_map(&cat, &labels, h);
                            let mg = action_map(&cat, &mh.target.labels, g);
                            let direct = action_map(&cat, &labels, cat.group.mul(g, h));
                            act_ok &= direct.matrix == mg.matrix.mul(&mh.matrix);
                        }
                    }
                }
            }
        }
        pass &= act_ok;
    }

    // Relabeling paths compose through the group as cover maps.
    let cat = load("categories/vec_s3.json");
    let graph = load_cover_file(&cat, "covers/vec_s3_one_block.json");
    let labeling = load_labeling_file(&cat, &graph, "labels/vec_s3_one_block.json");
    let mut p_ok = true;
    for x in cat.group.elements() {
        for y in cat.group.elements() {
            let two = path_map(
                &cat,
                &graph,
                &labeling,
                &[Move::P { block: 0, x: y }, Move::P { block: 0, x }],
            )
            .unwrap();
            let one = path_map(
                &cat,
                &graph,
                &labeling,
                &[Move::P { block: 0, x: cat.group.mul(x, y) }],
            )
            .unwrap();
            p_ok &= two.graph == one.graph && two.matrix == one.matrix;
        }
    }
    pass &= p_ok;

    // The twist pentagon and the lift-gluing square are relation entries.
    for file in ["categories/vec_s3.json", "categories/ising_z2.json", "categories/fibonacci.json"]
    {
        let cat = load(file);
        for report in check_relations(&cat, RelationBounds::default()) {
            if report.name == "dehn-twist" || report.name == "t-gluing" {
                pass &= report.passed();
            }
        }
    }
    verdict("6 (exact matrix identities)", pass);
}

/// Criterion 7: the reconstruction returns the input data exactly for all
/// three shipped examples.
#[test]
fn criterion_7_roundtrip() {
    let mut pass = true;
    for file in ["categories/vec_s3.json", "categories/ising_z2.json", "categories/fibonacci.json"]
    {
        let cat = load(file);
        let report = roundtrip_check(&cat);
        pass &= report.passed();
    }
    verdict("7 (roundtrip, exact)", pass);
}

/// The empty cover evaluates to the one-dimensional space and block spaces
/// on shipped covers match their stated sizes.
#[test]
fn normalization_and_shipped_sizes() {
    let cat = load("categories/ising_z2.json");
    let empty = GluingGraph::new(&cat.group, vec![], vec![], vec![]).unwrap();
    let labeling = CoverLabeling::new(&cat, &empty, vec![]).unwrap();
    assert_eq!(tau_dim(&cat, &empty, &labeling), 1);
    let sigma = cat.label_by_name("sigma").unwrap();
    assert_eq!(block_space(&cat, &[sigma, sigma]).dim(), 1);
    assert_eq!(block_space(&cat, &[sigma; 4]).dim(), 2);
    let one = Cyclotomic::one(16);
    assert!(one.is_one());
}
