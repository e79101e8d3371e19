//! Exhaustive coherence checks on loaded category data.
//!
//! Each checker walks every admissible index tuple and compares both sides
//! of the identity exactly; failures are report content, never panics.

use crate::algebra::Cyclotomic;
use crate::report::CheckReport;

use super::data::CategoryData;

/// Pentagon identity for the F symbols, over all admissible 5-tuples.
///
/// For source tree channels (e, g) and target channels (k, l) of the same
/// total w on leaves (a, b, c, d):
///   F[e,c,d; w](g,l) · F[a,b,l; w](e,k) = Σ_f F[a,b,c; g](e,f) · F[a,f,d; w](g,k) · F[b,c,d; k](f,l)
pub fn check_pentagon(cat: &CategoryData) -> CheckReport {
    let mut report = CheckReport::new("pentagon");
    for a in cat.labels() {
        for b in cat.labels() {
            for &e in cat.fusion_products(a, b) {
                for c in cat.labels() {
                    for &g in cat.fusion_products(e, c) {
                        for d in cat.labels() {
                            for &w in cat.fusion_products(g, d) {
                                for &l in cat.fusion_products(c, d) {
                                    for &k in cat.fusion_products(b, l) {
                                        if !cat.n(a, k, w) {
                                            continue;
                                        }
                                        report.tick();
                                        let lhs = cat.f(e, c, d, w, g, l).mul(&cat.f(a, b, l, w, e, k));
                                        let mut rhs = Cyclotomic::zero(cat.conductor);
                                        for &f in cat.fusion_products(b, c) {
                                            let t = cat
                                                .f(a, b, c, g, e, f)
                                                .mul(&cat.f(a, f, d, w, g, k))
                                                .mul(&cat.f(b, c, d, k, f, l));
                                            rhs = rhs.add(&t);
                                        }
                                        if lhs != rhs {
                                            report.fail(
                                                format!(
                                                    "labels {} trees (e={}, g={}) -> (k={}, l={}) total {}",
                                                    cat.names(&[a, b, c, d]),
                                                    cat.label_name(e),
                                                    cat.label_name(g),
                                                    cat.label_name(k),
                                                    cat.label_name(l),
                                                    cat.label_name(w)
                                                ),
                                                format!("lhs = {lhs}, rhs = {rhs}"),
                                            );
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// Both hexagon families: the braiding against the associator, and the
/// same diagram built from the inverse braiding.
///
/// With p = deg(a) and the braid sending the channel e of a⊗b to the same
/// channel of (p·b)⊗a, the first family reads
///   R[a,b;e] · F[p·b,a,c; d](e,f) · R[a,c;f]
///     = Σ_k F[a,b,c; d](e,k) · R[a,k;d] · U[p](b,c;k) · F[p·b,p·c,a; d](p·k,f)
/// and the second family is the same shape for the reverse braiding
/// R'[a,b;c] = R[b, p̄·a; c]⁻¹ with p̄ = deg(b)⁻¹.
pub fn check_hexagon(cat: &CategoryData) -> CheckReport {
    let mut report = CheckReport::new("hexagon");
    let grp = &cat.group;

    // Forward family.
    for a in cat.labels() {
        let p = cat.deg(a);
        for b in cat.labels() {
            let pb = cat.act(p, b);
            for &e in cat.fusion_products(a, b) {
                for c in cat.labels() {
                    let pc = cat.act(p, c);
                    for &d in cat.fusion_products(e, c) {
                        for &f in cat.fusion_products(a, c) {
                            if !cat.n(pb, f, d) {
                                continue;
                            }
                            report.tick();
                            let lhs = cat
                                .r(a, b, e)
                                .mul(&cat.f(pb, a, c, d, e, f))
                                .mul(&cat.r(a, c, f));
                            let mut rhs = Cyclotomic::zero(cat.conductor);
                            for &k in cat.fusion_products(b, c) {
                                let pk = cat.act(p, k);
                                let t = cat
                                    .f(a, b, c, d, e, k)
                                    .mul(&cat.r(a, k, d))
                                    .mul(&cat.u(p, b, c, k))
                                    .mul(&cat.f(pb, pc, a, d, pk, f));
                                rhs = rhs.add(&t);
                            }
                            if lhs != rhs {
                                report.fail(
                                    format!(
                                        "forward: labels {} channels (e={}, d={}, f={})",
                                        cat.names(&[a, b, c]),
                                        cat.label_name(e),
                                        cat.label_name(d),
                                        cat.label_name(f)
                                    ),
                                    format!("lhs = {lhs}, rhs = {rhs}"),
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    // Reverse family. r_rev(a,b;c) braids a under b, twisting a by the
    // inverse degree of b.
    let r_rev = |a: usize, b: usize, c: usize| -> Option<Cyclotomic> {
        let qb = grp.inv(cat.deg(b));
        let ta = cat.act(qb, a);
        let v = cat.r(b, ta, c);
        if v.is_zero() {
            return None;
        }
        Some(v.inv().expect("nonzero braiding scalar"))
    };
    for a in cat.labels() {
        for b in cat.labels() {
            let qinv = grp.inv(cat.deg(b));
            let a_q = cat.act(qinv, a);
            for &e in cat.fusion_products(a, b) {
                for c in cat.labels() {
                    let rinv = grp.inv(cat.deg(c));
                    let a_qr = cat.act(rinv, a_q);
                    for &d in cat.fusion_products(e, c) {
                        for &f in cat.fusion_products(a_q, c) {
                            report.tick();
                            let r1 = r_rev(a, b, e);
                            let r2 = r_rev(a_q, c, f);
                            let lhs = match (r1, r2) {
                                (Some(x), Some(y)) => {
                                    x.mul(&cat.f(b, a_q, c, d, e, f)).mul(&y)
                                }
                                _ => Cyclotomic::zero(cat.conductor),
                            };
                            let mut rhs = Cyclotomic::zero(cat.conductor);
                            for &k in cat.fusion_products(b, c) {
                                if let Some(rk) = r_rev(a, k, d) {
                                    let t = cat
                                        .f(a, b, c, d, e, k)
                                        .mul(&rk)
                                        .mul(&cat.f(b, c, a_qr, d, k, f));
                                    rhs = rhs.add(&t);
                                }
                            }
                            if lhs != rhs {
                                report.fail(
                                    format!(
                                        "reverse: labels {} channels (e={}, d={}, f={})",
                                        cat.names(&[a, b, c]),
                                        cat.label_name(e),
                                        cat.label_name(d),
                                        cat.label_name(f)
                                    ),
                                    format!("lhs = {lhs}, rhs = {rhs}"),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// Coherence of the group action: composition and unit laws, invariance of
/// degrees, duals and fusion rules, and the two scalar-level conditions on
/// the action coefficients (compatibility with F, and multiplicativity).
pub fn check_g_coherence(cat: &CategoryData) -> CheckReport {
    let mut report = CheckReport::new("g-coherence");
    let grp = &cat.group;
    let e = grp.identity();

    for a in cat.labels() {
        report.tick();
        if cat.act(e, a) != a {
            report.fail(cat.label_name(a).to_string(), "identity element moves the label");
        }
    }
    for g in grp.elements() {
        for h in grp.elements() {
            let gh = grp.mul(g, h);
            for a in cat.labels() {
                report.tick();
                if cat.act(gh, a) != cat.act(g, cat.act(h, a)) {
                    report.fail(
                        format!("({}, {}, {})", grp.name(g), grp.name(h), cat.label_name(a)),
                        "action composition fails",
                    );
                }
            }
        }
    }
    for g in grp.elements() {
        report.tick();
        if cat.act(g, cat.unit()) != cat.unit() {
            report.fail(grp.name(g).to_string(), "unit label is moved by the action");
        }
        for a in cat.labels() {
            report.tick();
            if cat.deg(cat.act(g, a)) != grp.conj(g, cat.deg(a)) {
                report.fail(
                    format!("({}, {})", grp.name(g), cat.label_name(a)),
                    "degree is not conjugated by the action",
                );
            }
            if cat.act(g, cat.dual(a)) != cat.dual(cat.act(g, a)) {
                report.fail(
                    format!("({}, {})", grp.name(g), cat.label_name(a)),
                    "dual is not preserved by the action",
                );
            }
        }
        for &(a, b, c) in cat.fusion_triples() {
            report.tick();
            if !cat.n(cat.act(g, a), cat.act(g, b), cat.act(g, c)) {
                report.fail(
                    format!("({}; {})", grp.name(g), cat.names(&[a, b, c])),
                    "fusion rules are not action-invariant",
                );
            }
        }
    }

    // Dual vertex coefficients: applying g to the unit-channel vertex of
    // (a*, a) must match the bending data of the image label, so that the
    // canonical identification of g·(a*) with (g·a)* is the identity scalar.
    for g in grp.elements() {
        for a in cat.labels() {
            report.tick();
            let ga = cat.act(g, a);
            let lhs = cat.u(g, cat.dual(a), a, cat.unit());
            let fa = cat.f(a, cat.dual(a), a, a, cat.unit(), cat.unit());
            let fga = cat.f(ga, cat.dual(ga), ga, ga, cat.unit(), cat.unit());
            let rhs = fga.div(&fa).expect("bending scalars are invertible");
            if lhs != rhs {
                report.fail(
                    format!("({}, {})", grp.name(g), cat.label_name(a)),
                    format!("dual-vertex coefficient {lhs} differs from bending ratio {rhs}"),
                );
            }
        }
    }

    // Compatibility of the action coefficients with F:
    //   U[g](a,b;e) · U[g](e,c;d) · F[ga,gb,gc; gd](ge,gf) = F[a,b,c; d](e,f) · U[g](b,c;f) · U[g](a,f;d)
    for g in grp.elements() {
        for &(a, b, ee) in cat.fusion_triples() {
            for c in cat.labels() {
                for &d in cat.fusion_products(ee, c) {
                    for &f in cat.fusion_products(b, c) {
                        if !cat.n(a, f, d) {
                            continue;
                        }
                        report.tick();
                        let (ga, gb, gc, gd, ge, gf) = (
                            cat.act(g, a),
                            cat.act(g, b),
                            cat.act(g, c),
                            cat.act(g, d),
                            cat.act(g, ee),
                            cat.act(g, f),
                        );
                        let lhs = cat
                            .u(g, a, b, ee)
                            .mul(&cat.u(g, ee, c, d))
                            .mul(&cat.f(ga, gb, gc, gd, ge, gf));
                        let rhs = cat
                            .f(a, b, c, d, ee, f)
                            .mul(&cat.u(g, b, c, f))
                            .mul(&cat.u(g, a, f, d));
                        if lhs != rhs {
                            report.fail(
                                format!(
                                    "({}; {}; e={}, f={}, d={})",
                                    grp.name(g),
                                    cat.names(&[a, b, c]),
                                    cat.label_name(ee),
                                    cat.label_name(f),
                                    cat.label_name(d)
                                ),
                                format!("action does not preserve F: lhs = {lhs}, rhs = {rhs}"),
                            );
                        }
                    }
                }
            }
        }
    }

    // Multiplicativity of the action coefficients:
    //   U[gh](a,b;c) = U[g](h·a, h·b; h·c) · U[h](a,b;c)
    for g in grp.elements() {
        for h in grp.elements() {
            let gh = grp.mul(g, h);
            for &(a, b, c) in cat.fusion_triples() {
                report.tick();
                let lhs = cat.u(gh, a, b, c);
                let rhs = cat
                    .u(g, cat.act(h, a), cat.act(h, b), cat.act(h, c))
                    .mul(&cat.u(h, a, b, c));
                if lhs != rhs {
                    report.fail(
                        format!("({}, {}; {})", grp.name(g), grp.name(h), cat.names(&[a, b, c])),
                        format!("action coefficients not multiplicative: {lhs} vs {rhs}"),
                    );
                }
            }
        }
    }
    report
}

/// The four twist identities, stated scalar-wise on fusion channels:
/// unit normalization, the balancing identity on every channel, duality
/// invariance, and action invariance.
pub fn check_twist(cat: &CategoryData) -> CheckReport {
    let mut report = CheckReport::new("twist");
    let grp = &cat.group;

    report.tick();
    if !cat.theta(cat.unit()).is_one() {
        report.fail(cat.label_name(cat.unit()).to_string(), "unit twist differs from 1");
    }

    // Balancing on each channel c of a⊗b:
    //   θ_c · U[deg(a)·deg(b)](a,b;c) = R[h·b, a; c] · R[a,b;c] · θ_a · θ_b
    for &(a, b, c) in cat.fusion_triples() {
        report.tick();
        let h = cat.deg(a);
        let hg = grp.mul(h, cat.deg(b));
        let hb = cat.act(h, b);
        let lhs = cat.theta(c).mul(&cat.u(hg, a, b, c));
        let rhs = cat
            .r(hb, a, c)
            .mul(&cat.r(a, b, c))
            .mul(cat.theta(a))
            .mul(cat.theta(b));
        if lhs != rhs {
            report.fail(
                format!("channel {} of {}", cat.label_name(c), cat.names(&[a, b])),
                format!("balancing fails: lhs = {lhs}, rhs = {rhs}"),
            );
        }
    }

    for a in cat.labels() {
        report.tick();
        if cat.theta(cat.dual(a)) != cat.theta(a) {
            report.fail(
                cat.label_name(a).to_string(),
                format!(
                    "twist of the dual differs: {} vs {}",
                    cat.theta(cat.dual(a)),
                    cat.theta(a)
                ),
            );
        }
        for g in grp.elements() {
            report.tick();
            if cat.theta(cat.act(g, a)) != cat.theta(a) {
                report.fail(
                    format!("({}, {})", grp.name(g), cat.label_name(a)),
                    "twist is not action-invariant",
                );
            }
        }
    }
    report
}

/// Runs the four category-level checkers in order.
pub fn check_all(cat: &CategoryData) -> Vec<CheckReport> {
    vec![check_pentagon(cat), check_hexagon(cat), check_g_coherence(cat), check_twist(cat)]
}
