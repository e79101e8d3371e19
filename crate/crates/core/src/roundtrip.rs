//! Reconstruction of the fusion data from block dimensions and maps, and
//! the comparison against the input.
//!
//! The pair spaces recover the duality, the unit is the label whose pair
//! dimensions represent the one-point dimensions, triple spaces recover
//! the fusion rules, and the twist of a label is the scalar by which the
//! inverse braiding followed by rotation acts on its pairing space. Only
//! the basis-independent data (fusion rules, duality, unit, twists) are
//! reconstructed; F and R symbols are gauge-dependent and out of scope.

use std::collections::HashSet;

use crate::algebra::Cyclotomic;
use crate::blocks::ops::{gen_commutativity, rotation_map};
use crate::category::{fusion_dim, CategoryData, LabelId};
use crate::error::{OpError, OpResult};
use crate::report::CheckReport;

/// Fusion data recovered from the block spaces.
#[derive(Debug, Clone)]
pub struct ReconstructedFusion {
    pub dual: Vec<LabelId>,
    pub unit: LabelId,
    pub fusion: HashSet<(LabelId, LabelId, LabelId)>,
    pub theta: Vec<Cyclotomic>,
}

/// Recovers duality, unit, and fusion rules from pair and triple
/// dimensions.
pub fn reconstruct_fusion(cat: &CategoryData) -> OpResult<ReconstructedFusion> {
    let nl = cat.label_count();
    // Duality: the unique partner with a nonzero pair space.
    let mut dual = Vec::with_capacity(nl);
    for a in cat.labels() {
        let partners: Vec<LabelId> =
            cat.labels().filter(|&b| fusion_dim(cat, &[a, b]) != 0).collect();
        if partners.len() != 1 {
            return Err(OpError::Other(format!(
                "label {} pairs with {} partners; expected exactly one",
                cat.label_name(a),
                partners.len()
            )));
        }
        dual.push(partners[0]);
    }
    // Unit: the unique label whose pair dimensions match the one-point
    // dimensions of every label.
    let mut unit = None;
    for u in cat.labels() {
        if cat.labels().all(|x| fusion_dim(cat, &[u, x]) == fusion_dim(cat, &[x])) {
            if unit.is_some() {
                return Err(OpError::Other("unit label is not unique".into()));
            }
            unit = Some(u);
        }
    }
    let unit = unit.ok_or_else(|| OpError::Other("no label represents the unit".into()))?;
    // Fusion rules from triple dimensions: the partner of c pairs the
    // channel space of a ⊗ b.
    let mut fusion = HashSet::new();
    for a in cat.labels() {
        for b in cat.labels() {
            for c in cat.labels() {
                if fusion_dim(cat, &[dual[c], a, b]) != 0 {
                    fusion.insert((a, b, c));
                }
            }
        }
    }
    let theta = reconstruct_twist(cat, &dual)?;
    Ok(ReconstructedFusion { dual, unit, fusion, theta })
}

/// The twist of each label: the scalar by which the inverse commutativity
/// followed by rotation acts on the pairing space with its dual partner.
pub fn reconstruct_twist(cat: &CategoryData, dual: &[LabelId]) -> OpResult<Vec<Cyclotomic>> {
    let mut out = Vec::with_capacity(cat.label_count());
    for a in cat.labels() {
        let x = dual[a];
        // ⟨a, x⟩ → ⟨x, g·a⟩ by the inverse commutativity, then the
        // rotation back to ⟨g·a, x⟩ = ⟨a, x⟩.
        let sigma = gen_commutativity(cat, &[x, cat.act(cat.deg(a), a)], 0)?;
        if sigma.target.labels != vec![a, x] {
            return Err(OpError::Other(format!(
                "commutativity on the pairing space of {} has unexpected target",
                cat.label_name(a)
            )));
        }
        let sigma_inv = sigma.inverse()?;
        let z = rotation_map(cat, &sigma_inv.target.labels);
        let composite = z.matrix.mul(&sigma_inv.matrix);
        if composite.rows() != 1 || composite.cols() != 1 {
            return Err(OpError::Other(format!(
                "twist composite of {} is not a scalar",
                cat.label_name(a)
            )));
        }
        out.push(composite.get(0, 0).clone());
    }
    Ok(out)
}

/// Compares the reconstruction against the input data.
pub fn roundtrip_check(cat: &CategoryData) -> CheckReport {
    let mut report = CheckReport::new("roundtrip");
    let rec = match reconstruct_fusion(cat) {
        Ok(r) => r,
        Err(e) => {
            report.fail("reconstruction", e.to_string());
            return report;
        }
    };
    for a in cat.labels() {
        report.tick();
        if rec.dual[a] != cat.dual(a) {
            report.fail(
                cat.label_name(a).to_string(),
                format!(
                    "reconstructed dual {} differs from {}",
                    cat.label_name(rec.dual[a]),
                    cat.label_name(cat.dual(a))
                ),
            );
        }
    }
    report.tick();
    if rec.unit != cat.unit() {
        report.fail(
            "unit".to_string(),
            format!(
                "reconstructed unit {} differs from {}",
                cat.label_name(rec.unit),
                cat.label_name(cat.unit())
            ),
        );
    }
    for a in cat.labels() {
        for b in cat.labels() {
            for c in cat.labels() {
                report.tick();
                let have = rec.fusion.contains(&(a, b, c));
                if have != cat.n(a, b, c) {
                    report.fail(
                        cat.names(&[a, b, c]),
                        format!("reconstructed multiplicity {} differs", u8::from(have)),
                    );
                }
            }
        }
    }
    for a in cat.labels() {
        report.tick();
        if rec.theta[a] != *cat.theta(a) {
            report.fail(
                cat.label_name(a).to_string(),
                format!("reconstructed twist {} differs from {}", rec.theta[a], cat.theta(a)),
            );
        }
    }
    report
}
