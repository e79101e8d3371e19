//! Skeletal data of a group-graded fusion category.
//!
//! Labels are simple objects carrying a group degree, a dual partner, and
//! a group action; fusion is multiplicity-free at the symbol level, so the
//! F, R, and U data are scalars indexed by admissible label tuples.
//! Loading validates every structural invariant and rejects a file with
//! the first violated invariant named.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, RwLock};

use serde::Deserialize;

use crate::algebra::{euler_phi, Cyclotomic, FiniteGroup, GElem, GroupSpec};
use crate::error::{DataError, DataResult};

pub type LabelId = usize;

pub const DEFAULT_CONDUCTOR_LIMIT: u64 = 64;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLabel {
    name: String,
    degree: String,
    dual: String,
    #[serde(default)]
    action: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCategory {
    group: GroupSpec,
    conductor: u64,
    labels: Vec<RawLabel>,
    fusion: Vec<Vec<String>>,
    #[serde(default, rename = "F")]
    f_symbols: Option<BTreeMap<String, serde_json::Value>>,
    #[serde(default, rename = "R")]
    r_symbols: Option<BTreeMap<String, serde_json::Value>>,
    #[serde(default, rename = "U")]
    u_symbols: Option<BTreeMap<String, serde_json::Value>>,
    #[serde(default)]
    theta: Option<BTreeMap<String, serde_json::Value>>,
}

/// Skeletal graded fusion data over an exact cyclotomic coefficient field.
#[derive(Debug, Clone)]
pub struct CategoryData {
    pub group: FiniteGroup,
    pub conductor: u64,
    label_names: Vec<String>,
    deg: Vec<GElem>,
    dual: Vec<LabelId>,
    unit: LabelId,
    /// action[g][a] = g·a
    action: Vec<Vec<LabelId>>,
    fusion: HashSet<(LabelId, LabelId, LabelId)>,
    products: HashMap<(LabelId, LabelId), Vec<LabelId>>,
    f_symbols: HashMap<(LabelId, LabelId, LabelId, LabelId, LabelId, LabelId), Cyclotomic>,
    /// Entries of the inverse F blocks, keyed by (a,b,c,d,f,e); built at load.
    f_inverse: HashMap<(LabelId, LabelId, LabelId, LabelId, LabelId, LabelId), Cyclotomic>,
    r_symbols: HashMap<(LabelId, LabelId, LabelId), Cyclotomic>,
    u_symbols: HashMap<(GElem, LabelId, LabelId, LabelId), Cyclotomic>,
    theta: Vec<Cyclotomic>,
    /// True when every stored action coefficient is 1; lets the action
    /// maps skip scalar products entirely.
    u_trivial: bool,
    /// Memo tables for derived block-space data; the category itself is
    /// immutable after load, so sharing these across clones is sound.
    caches: Arc<Caches>,
}

#[derive(Debug, Default)]
pub(crate) struct Caches {
    pub(crate) spaces: RwLock<HashMap<Vec<LabelId>, Arc<crate::blocks::space::BlockSpace>>>,
    pub(crate) rotations: RwLock<HashMap<Vec<LabelId>, Arc<crate::blocks::ops::BlockMap>>>,
    #[allow(clippy::type_complexity)]
    pub(crate) gluings: RwLock<
        HashMap<
            (Vec<LabelId>, Vec<LabelId>, Vec<LabelId>),
            Arc<(
                crate::blocks::ops::GluedSpace,
                crate::blocks::space::BlockSpace,
                crate::blocks::matrix::Matrix,
            )>,
        >,
    >,
}

impl CategoryData {
    pub fn load_path(path: &std::path::Path, conductor_limit: u64) -> DataResult<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json_str(&text, conductor_limit)
    }

    pub fn from_json_str(text: &str, conductor_limit: u64) -> DataResult<Self> {
        let raw: RawCategory = serde_json::from_str(text)?;
        Self::from_raw(raw, conductor_limit)
    }

    fn from_raw(raw: RawCategory, conductor_limit: u64) -> DataResult<Self> {
        let group = FiniteGroup::parse(&raw.group)?;
        if raw.conductor == 0 {
            return Err(DataError::Invariant("conductor must be positive".into()));
        }
        if raw.conductor > conductor_limit {
            return Err(DataError::Invariant(format!(
                "conductor {} exceeds the configured bound {}",
                raw.conductor, conductor_limit
            )));
        }
        let conductor = raw.conductor;
        let _ = euler_phi(conductor);

        // Labels: unique names without key-separator characters.
        if raw.labels.is_empty() {
            return Err(DataError::Invariant("category needs at least one label".into()));
        }
        let label_names: Vec<String> = raw.labels.iter().map(|l| l.name.clone()).collect();
        {
            let mut sorted = label_names.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != label_names.len() {
                return Err(DataError::Invariant("duplicate label names".into()));
            }
        }
        for n in &label_names {
            if n.contains(',') || n.contains(';') {
                return Err(DataError::Invariant(format!("label name {n:?} contains ',' or ';'")));
            }
        }
        let by_name: HashMap<&str, LabelId> =
            label_names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let nl = label_names.len();
        let lookup = |name: &str| -> DataResult<LabelId> {
            by_name
                .get(name)
                .copied()
                .ok_or_else(|| DataError::Schema(format!("unknown label {name:?}")))
        };

        let mut deg = Vec::with_capacity(nl);
        let mut dual = Vec::with_capacity(nl);
        for l in &raw.labels {
            deg.push(group.by_name(&l.degree)?);
            dual.push(lookup(&l.dual)?);
        }
        for a in 0..nl {
            if dual[dual[a]] != a {
                return Err(DataError::Invariant(format!(
                    "dual map is not an involution at label {}",
                    label_names[a]
                )));
            }
        }

        // Group action, defaulting unmentioned elements to fixed points.
        let mut action = vec![vec![0; nl]; group.order()];
        for g in group.elements() {
            for a in 0..nl {
                action[g][a] = a;
            }
        }
        for (a, l) in raw.labels.iter().enumerate() {
            if let Some(map) = &l.action {
                for (gname, target) in map {
                    let g = group.by_name(gname)?;
                    action[g][a] = lookup(target)?;
                }
            }
        }
        for g in group.elements() {
            let mut seen = vec![false; nl];
            for a in 0..nl {
                if seen[action[g][a]] {
                    return Err(DataError::Invariant(format!(
                        "action of {} is not a permutation of labels",
                        group.name(g)
                    )));
                }
                seen[action[g][a]] = true;
            }
        }
        for a in 0..nl {
            if action[group.identity()][a] != a {
                return Err(DataError::Invariant("identity group element must act trivially".into()));
            }
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                for a in 0..nl {
                    if action[gh][a] != action[g][action[h][a]] {
                        return Err(DataError::Invariant(format!(
                            "action is not multiplicative: ({}·{})·{} differs from {}·({}·{})",
                            group.name(g),
                            group.name(h),
                            label_names[a],
                            group.name(g),
                            group.name(h),
                            label_names[a]
                        )));
                    }
                }
            }
        }

        // Fusion triples.
        let mut fusion = HashSet::new();
        for t in &raw.fusion {
            if t.len() != 3 {
                return Err(DataError::Schema(format!("fusion entry {t:?} is not a triple")));
            }
            let a = lookup(&t[0])?;
            let b = lookup(&t[1])?;
            let c = lookup(&t[2])?;
            if !fusion.insert((a, b, c)) {
                return Err(DataError::Schema(format!("duplicate fusion triple {t:?}")));
            }
        }

        // Locate the unit from the fusion rules.
        let mut unit = None;
        'cand: for u in 0..nl {
            for a in 0..nl {
                for b in 0..nl {
                    let left = fusion.contains(&(u, a, b));
                    let right = fusion.contains(&(a, u, b));
                    if (a == b) != left || (a == b) != right {
                        continue 'cand;
                    }
                }
            }
            if unit.is_some() {
                return Err(DataError::Invariant("fusion rules admit more than one unit label".into()));
            }
            unit = Some(u);
        }
        let unit = unit.ok_or_else(|| {
            DataError::Invariant("no unit label: need u with N(u,a,b) = N(a,u,b) = [a = b]".into())
        })?;
        if deg[unit] != group.identity() {
            return Err(DataError::Invariant("unit label must have identity degree".into()));
        }
        if dual[unit] != unit {
            return Err(DataError::Invariant("unit label must be self-dual".into()));
        }

        // Grading of fusion.
        for &(a, b, c) in &fusion {
            if group.mul(deg[a], deg[b]) != deg[c] {
                return Err(DataError::Invariant(format!(
                    "fusion {} ⊗ {} → {} violates the degree grading",
                    label_names[a], label_names[b], label_names[c]
                )));
            }
        }
        // Dual grading.
        for a in 0..nl {
            if deg[dual[a]] != group.inv(deg[a]) {
                return Err(DataError::Invariant(format!(
                    "degree of the dual of {} is not the inverse degree",
                    label_names[a]
                )));
            }
        }
        // Dual normalization: N(a,b,unit) = 1 exactly when b is the dual of a.
        for a in 0..nl {
            for b in 0..nl {
                let have = fusion.contains(&(a, b, unit));
                if have != (b == dual[a]) {
                    return Err(DataError::Invariant(format!(
                        "dual normalization fails at ({}, {}): N(a,b,1) must be [b = a*]",
                        label_names[a], label_names[b]
                    )));
                }
            }
        }
        // Action invariance of structure.
        for g in group.elements() {
            for a in 0..nl {
                if deg[action[g][a]] != group.conj(g, deg[a]) {
                    return Err(DataError::Invariant(format!(
                        "degree of {}·{} is not the conjugated degree",
                        group.name(g),
                        label_names[a]
                    )));
                }
                if action[g][dual[a]] != dual[action[g][a]] {
                    return Err(DataError::Invariant(format!(
                        "action of {} does not commute with duals at {}",
                        group.name(g),
                        label_names[a]
                    )));
                }
            }
            if action[g][unit] != unit {
                return Err(DataError::Invariant(format!(
                    "action of {} moves the unit label",
                    group.name(g)
                )));
            }
            for &(a, b, c) in &fusion {
                if !fusion.contains(&(action[g][a], action[g][b], action[g][c])) {
                    return Err(DataError::Invariant(format!(
                        "fusion rules are not invariant under the action of {} at ({}, {}, {})",
                        group.name(g),
                        label_names[a],
                        label_names[b],
                        label_names[c]
                    )));
                }
            }
        }
        // Each label must be fixed by its own degree for the twist data to
        // be scalar-valued.
        for a in 0..nl {
            if action[deg[a]][a] != a {
                return Err(DataError::Invariant(format!(
                    "label {} is not fixed by the action of its own degree; scalar twists need this",
                    label_names[a]
                )));
            }
        }

        let mut products: HashMap<(LabelId, LabelId), Vec<LabelId>> = HashMap::new();
        for a in 0..nl {
            for b in 0..nl {
                let mut cs: Vec<LabelId> =
                    (0..nl).filter(|&c| fusion.contains(&(a, b, c))).collect();
                cs.sort_unstable();
                products.insert((a, b), cs);
            }
        }

        let mut cat = CategoryData {
            group,
            conductor,
            label_names,
            deg,
            dual,
            unit,
            action,
            fusion,
            products,
            f_symbols: HashMap::new(),
            f_inverse: HashMap::new(),
            r_symbols: HashMap::new(),
            u_symbols: HashMap::new(),
            theta: Vec::new(),
            u_trivial: true,
            caches: Arc::new(Caches::default()),
        };

        cat.load_f_symbols(raw.f_symbols.as_ref())?;
        cat.load_r_symbols(raw.r_symbols.as_ref())?;
        cat.load_u_symbols(raw.u_symbols.as_ref())?;
        cat.load_theta(raw.theta.as_ref())?;
        cat.build_f_inverses()?;
        cat.u_trivial = cat.u_symbols.values().all(|v| v.is_one());
        Ok(cat)
    }

    fn parse_key<'k>(key: &'k str, shape: &[usize]) -> DataResult<Vec<Vec<&'k str>>> {
        let groups: Vec<&str> = key.split(';').collect();
        if groups.len() != shape.len() {
            return Err(DataError::Schema(format!("bad symbol key {key:?}")));
        }
        let mut out = Vec::with_capacity(groups.len());
        for (grp, &want) in groups.iter().zip(shape) {
            let parts: Vec<&str> = grp.split(',').map(|s| s.trim()).collect();
            if parts.len() != want {
                return Err(DataError::Schema(format!("bad symbol key {key:?}")));
            }
            out.push(parts);
        }
        Ok(out)
    }

    fn load_f_symbols(&mut self, raw: Option<&BTreeMap<String, serde_json::Value>>) -> DataResult<()> {
        // Required domain: admissible (a,b,c;d;e,f) with a,b,c all non-unit.
        let mut required: HashSet<(LabelId, LabelId, LabelId, LabelId, LabelId, LabelId)> =
            HashSet::new();
        let nl = self.label_names.len();
        for a in 0..nl {
            for b in 0..nl {
                for c in 0..nl {
                    if a == self.unit || b == self.unit || c == self.unit {
                        continue;
                    }
                    for &e in self.fusion_products(a, b) {
                        for &d in self.fusion_products(e, c) {
                            for &f in self.fusion_products(b, c) {
                                if self.n(a, f, d) {
                                    required.insert((a, b, c, d, e, f));
                                }
                            }
                        }
                    }
                }
            }
        }
        match raw {
            None => {
                for key in required {
                    self.f_symbols.insert(key, Cyclotomic::one(self.conductor));
                }
            }
            Some(map) => {
                for (key, value) in map {
                    let parts = Self::parse_key(key, &[3, 1, 2])?;
                    let a = self.label_by_name(parts[0][0])?;
                    let b = self.label_by_name(parts[0][1])?;
                    let c = self.label_by_name(parts[0][2])?;
                    let d = self.label_by_name(parts[1][0])?;
                    let e = self.label_by_name(parts[2][0])?;
                    let f = self.label_by_name(parts[2][1])?;
                    if !required.contains(&(a, b, c, d, e, f)) {
                        return Err(DataError::Schema(format!(
                            "F entry {key:?} is not an admissible non-unit index"
                        )));
                    }
                    let v = Cyclotomic::parse_json(self.conductor, value)?;
                    self.f_symbols.insert((a, b, c, d, e, f), v);
                }
                for key in &required {
                    if !self.f_symbols.contains_key(key) {
                        let (a, b, c, d, e, f) = *key;
                        return Err(DataError::Schema(format!(
                            "missing F entry {},{},{};{};{},{}",
                            self.label_names[a],
                            self.label_names[b],
                            self.label_names[c],
                            self.label_names[d],
                            self.label_names[e],
                            self.label_names[f]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn load_r_symbols(&mut self, raw: Option<&BTreeMap<String, serde_json::Value>>) -> DataResult<()> {
        let nl = self.label_names.len();
        let mut required: HashSet<(LabelId, LabelId, LabelId)> = HashSet::new();
        for a in 0..nl {
            for b in 0..nl {
                if a == self.unit || b == self.unit {
                    continue;
                }
                for &c in self.fusion_products(a, b) {
                    required.insert((a, b, c));
                }
            }
        }
        match raw {
            None => {
                for key in required.iter() {
                    self.r_symbols.insert(*key, Cyclotomic::one(self.conductor));
                }
            }
            Some(map) => {
                for (key, value) in map {
                    let parts = Self::parse_key(key, &[2, 1])?;
                    let a = self.label_by_name(parts[0][0])?;
                    let b = self.label_by_name(parts[0][1])?;
                    let c = self.label_by_name(parts[1][0])?;
                    if !required.contains(&(a, b, c)) {
                        return Err(DataError::Schema(format!(
                            "R entry {key:?} is not an admissible non-unit index"
                        )));
                    }
                    let v = Cyclotomic::parse_json(self.conductor, value)?;
                    self.r_symbols.insert((a, b, c), v);
                }
                for key in &required {
                    if !self.r_symbols.contains_key(key) {
                        let (a, b, c) = *key;
                        return Err(DataError::Schema(format!(
                            "missing R entry {},{};{}",
                            self.label_names[a], self.label_names[b], self.label_names[c]
                        )));
                    }
                }
            }
        }
        // Braiding target channels must exist: the braid sends the channel c
        // of a⊗b to the channel c of (deg(a)·b)⊗a.
        for &(a, b, c) in &required.clone() {
            let tb = self.act(self.deg(a), b);
            if !self.n(tb, a, c) {
                return Err(DataError::Invariant(format!(
                    "braiding channel ({}, {}) → {} has no matching channel after the twist",
                    self.label_names[a], self.label_names[b], self.label_names[c]
                )));
            }
        }
        Ok(())
    }

    fn load_u_symbols(&mut self, raw: Option<&BTreeMap<String, serde_json::Value>>) -> DataResult<()> {
        let nl = self.label_names.len();
        let e = self.group.identity();
        let mut required: HashSet<(GElem, LabelId, LabelId, LabelId)> = HashSet::new();
        for g in self.group.elements() {
            if g == e {
                continue;
            }
            for a in 0..nl {
                for b in 0..nl {
                    if a == self.unit || b == self.unit {
                        continue;
                    }
                    for &c in self.fusion_products(a, b) {
                        required.insert((g, a, b, c));
                    }
                }
            }
        }
        match raw {
            None => {
                for key in required.iter() {
                    self.u_symbols.insert(*key, Cyclotomic::one(self.conductor));
                }
            }
            Some(map) => {
                for (key, value) in map {
                    let parts = Self::parse_key(key, &[1, 2, 1])?;
                    let g = self.group.by_name(parts[0][0])?;
                    let a = self.label_by_name(parts[1][0])?;
                    let b = self.label_by_name(parts[1][1])?;
                    let c = self.label_by_name(parts[2][0])?;
                    if !required.contains(&(g, a, b, c)) {
                        return Err(DataError::Schema(format!(
                            "U entry {key:?} is not an admissible index (identity element and unit labels are implicit)"
                        )));
                    }
                    let v = Cyclotomic::parse_json(self.conductor, value)?;
                    self.u_symbols.insert((g, a, b, c), v);
                }
                for key in &required {
                    if !self.u_symbols.contains_key(key) {
                        let (g, a, b, c) = *key;
                        return Err(DataError::Schema(format!(
                            "missing U entry {};{},{};{}",
                            self.group.name(g),
                            self.label_names[a],
                            self.label_names[b],
                            self.label_names[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn load_theta(&mut self, raw: Option<&BTreeMap<String, serde_json::Value>>) -> DataResult<()> {
        let nl = self.label_names.len();
        self.theta = vec![Cyclotomic::one(self.conductor); nl];
        if let Some(map) = raw {
            for (key, value) in map {
                let a = self.label_by_name(key)?;
                self.theta[a] = Cyclotomic::parse_json(self.conductor, value)?;
            }
        }
        if !self.theta[self.unit].is_one() {
            return Err(DataError::Invariant("twist of the unit label must be 1".into()));
        }
        for (a, t) in self.theta.iter().enumerate() {
            if t.is_zero() {
                return Err(DataError::Invariant(format!(
                    "twist of {} must be invertible",
                    self.label_names[a]
                )));
            }
        }
        Ok(())
    }

    /// Checks every F block is square (fusion associativity) and invertible,
    /// and caches the inverse entries for the reverse basis changes.
    fn build_f_inverses(&mut self) -> DataResult<()> {
        let nl = self.label_names.len();
        let mut entries = Vec::new();
        for a in 0..nl {
            for b in 0..nl {
                for c in 0..nl {
                    for d in 0..nl {
                        let (es, fs, m) = self.f_block(a, b, c, d);
                        if es.len() != fs.len() {
                            return Err(DataError::Invariant(format!(
                                "fusion is not associative at ({}, {}, {}; {}): {} left trees vs {} right trees",
                                self.label_names[a],
                                self.label_names[b],
                                self.label_names[c],
                                self.label_names[d],
                                es.len(),
                                fs.len()
                            )));
                        }
                        if es.is_empty() {
                            continue;
                        }
                        let inv = m.inverse().map_err(|_| {
                            DataError::Invariant(format!(
                                "F block at ({}, {}, {}; {}) is singular",
                                self.label_names[a],
                                self.label_names[b],
                                self.label_names[c],
                                self.label_names[d]
                            ))
                        })?;
                        for (fi, &f) in fs.iter().enumerate() {
                            for (ei, &e) in es.iter().enumerate() {
                                entries.push(((a, b, c, d, f, e), inv.get(fi, ei).clone()));
                            }
                        }
                    }
                }
            }
        }
        self.f_inverse = entries.into_iter().collect();
        Ok(())
    }

    // ------------------------------------------------------------------
    // Accessors

    pub fn label_count(&self) -> usize {
        self.label_names.len()
    }

    pub fn labels(&self) -> impl Iterator<Item = LabelId> {
        0..self.label_names.len()
    }

    pub fn label_name(&self, a: LabelId) -> &str {
        &self.label_names[a]
    }

    pub fn label_by_name(&self, name: &str) -> DataResult<LabelId> {
        self.label_names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| DataError::Schema(format!("unknown label {name:?}")))
    }

    pub fn unit(&self) -> LabelId {
        self.unit
    }

    pub fn deg(&self, a: LabelId) -> GElem {
        self.deg[a]
    }

    pub fn dual(&self, a: LabelId) -> LabelId {
        self.dual[a]
    }

    pub fn act(&self, g: GElem, a: LabelId) -> LabelId {
        self.action[g][a]
    }

    pub fn theta(&self, a: LabelId) -> &Cyclotomic {
        &self.theta[a]
    }

    /// Fusion admissibility N(a,b;c) ∈ {0,1} as a boolean.
    pub fn n(&self, a: LabelId, b: LabelId, c: LabelId) -> bool {
        self.fusion.contains(&(a, b, c))
    }

    pub fn fusion_products(&self, a: LabelId, b: LabelId) -> &[LabelId] {
        self.products.get(&(a, b)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn fusion_triples(&self) -> impl Iterator<Item = &(LabelId, LabelId, LabelId)> {
        self.fusion.iter()
    }

    /// F symbol [F^{abc}_d]_{ef}; unit entries are structurally 1 and
    /// non-admissible indices are 0.
    pub fn f(&self, a: LabelId, b: LabelId, c: LabelId, d: LabelId, e: LabelId, f: LabelId) -> Cyclotomic {
        let admissible =
            self.n(a, b, e) && self.n(e, c, d) && self.n(b, c, f) && self.n(a, f, d);
        if !admissible {
            return Cyclotomic::zero(self.conductor);
        }
        if a == self.unit || b == self.unit || c == self.unit {
            return Cyclotomic::one(self.conductor);
        }
        self.f_symbols
            .get(&(a, b, c, d, e, f))
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.conductor))
    }

    /// R symbol for the channel c of a⊗b; unit entries are 1.
    pub fn r(&self, a: LabelId, b: LabelId, c: LabelId) -> Cyclotomic {
        if !self.n(a, b, c) {
            return Cyclotomic::zero(self.conductor);
        }
        if a == self.unit || b == self.unit {
            return Cyclotomic::one(self.conductor);
        }
        self.r_symbols
            .get(&(a, b, c))
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.conductor))
    }

    /// Action coefficient of g on the fusion vertex (a,b;c).
    pub fn u(&self, g: GElem, a: LabelId, b: LabelId, c: LabelId) -> Cyclotomic {
        if !self.n(a, b, c) {
            return Cyclotomic::zero(self.conductor);
        }
        if g == self.group.identity() || a == self.unit || b == self.unit {
            return Cyclotomic::one(self.conductor);
        }
        self.u_symbols
            .get(&(g, a, b, c))
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.conductor))
    }

    /// The F block for (a,b,c;d): left-tree channels, right-tree channels,
    /// and the change-of-basis matrix between them.
    pub fn f_block(
        &self,
        a: LabelId,
        b: LabelId,
        c: LabelId,
        d: LabelId,
    ) -> (Vec<LabelId>, Vec<LabelId>, crate::blocks::matrix::Matrix) {
        let es: Vec<LabelId> = self
            .fusion_products(a, b)
            .iter()
            .copied()
            .filter(|&e| self.n(e, c, d))
            .collect();
        let fs: Vec<LabelId> = self
            .fusion_products(b, c)
            .iter()
            .copied()
            .filter(|&f| self.n(a, f, d))
            .collect();
        let mut m = crate::blocks::matrix::Matrix::zero(es.len(), fs.len(), self.conductor);
        for (i, &e) in es.iter().enumerate() {
            for (j, &f) in fs.iter().enumerate() {
                m.set(i, j, self.f(a, b, c, d, e, f));
            }
        }
        (es, fs, m)
    }

    /// Entry of the inverse F block, i.e. the coefficient of the left tree
    /// through e in the expansion of the right tree through f.
    pub fn f_inv(&self, a: LabelId, b: LabelId, c: LabelId, d: LabelId, f: LabelId, e: LabelId) -> Cyclotomic {
        self.f_inverse
            .get(&(a, b, c, d, f, e))
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.conductor))
    }

    /// Pivotal coefficient of a label, fixed by the twist and the braiding
    /// with the dual on the unit channel. This is the bending scalar the
    /// rotation isomorphism uses.
    pub fn pivot(&self, a: LabelId) -> Cyclotomic {
        self.theta[a].mul(&self.r(self.dual[a], a, self.unit))
    }

    /// Names joined for report witnesses.
    pub fn names(&self, labels: &[LabelId]) -> String {
        let parts: Vec<&str> = labels.iter().map(|&l| self.label_name(l)).collect();
        format!("({})", parts.join(", "))
    }

    pub(crate) fn caches(&self) -> &Caches {
        &self.caches
    }

    /// True when every action coefficient is 1.
    pub fn action_coefficients_trivial(&self) -> bool {
        self.u_trivial
    }
}

/// Dimension of the invariant space of an ordered label list, by iterated
/// contraction of the fusion rules; 1 for the empty list.
pub fn fusion_dim(cat: &CategoryData, labels: &[LabelId]) -> u64 {
    // Grading obstruction short-circuit.
    let total = labels.iter().fold(cat.group.identity(), |acc, &a| cat.group.mul(acc, cat.deg(a)));
    if total != cat.group.identity() {
        return 0;
    }
    let nl = cat.label_count();
    let mut weights = vec![0u64; nl];
    weights[cat.unit()] = 1;
    for &a in labels {
        let mut next = vec![0u64; nl];
        for x in 0..nl {
            if weights[x] == 0 {
                continue;
            }
            for &c in cat.fusion_products(x, a) {
                next[c] += weights[x];
            }
        }
        weights = next;
    }
    weights[cat.unit()]
}
