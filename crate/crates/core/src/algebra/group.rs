//! Finite groups as dense multiplication tables.
//!
//! Elements are indices `0..order` into the table; index lookups make all
//! downstream code branch-free. Presets cover the groups the shipped data
//! files use; arbitrary groups load from an explicit table.

use serde::Deserialize;

use crate::error::{DataError, DataResult};

/// A group element index. Valid only together with the `FiniteGroup` that
/// issued it.
pub type GElem = usize;

/// Multiplication-table model of a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul_table: Vec<Vec<GElem>>,
    identity: GElem,
    inv_table: Vec<GElem>,
    names: Vec<String>,
}

/// Group description accepted in data files: either a named preset or an
/// explicit table with optional element names.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    pub preset: Option<String>,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub names: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Builds and fully validates a group from a raw table.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> DataResult<Self> {
        let order = table.len();
        if order == 0 {
            return Err(DataError::Group("empty multiplication table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(DataError::Group(format!("row {i} has length {} != order {order}", row.len())));
            }
            for &v in row {
                if v >= order {
                    return Err(DataError::Group(format!("entry {v} out of range in row {i}")));
                }
            }
        }
        // Latin square: every row and column is a permutation.
        for i in 0..order {
            let mut seen_row = vec![false; order];
            let mut seen_col = vec![false; order];
            for j in 0..order {
                if seen_row[table[i][j]] {
                    return Err(DataError::Group(format!("row {i} is not a permutation")));
                }
                seen_row[table[i][j]] = true;
                if seen_col[table[j][i]] {
                    return Err(DataError::Group(format!("column {i} is not a permutation")));
                }
                seen_col[table[j][i]] = true;
            }
        }
        // Two-sided identity.
        let mut identity = None;
        for e in 0..order {
            if (0..order).all(|a| table[e][a] == a && table[a][e] == a) {
                identity = Some(e);
                break;
            }
        }
        let identity = identity.ok_or_else(|| DataError::Group("no two-sided identity".into()))?;
        // Two-sided inverses.
        let mut inv_table = vec![0; order];
        for a in 0..order {
            let inv = (0..order).find(|&b| table[a][b] == identity && table[b][a] == identity);
            match inv {
                Some(b) => inv_table[a] = b,
                None => return Err(DataError::Group(format!("element {a} has no two-sided inverse"))),
            }
        }
        // Associativity on all triples; order is tiny so the cube is cheap.
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(DataError::Group(format!(
                            "non-associative triple ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let names = match names {
            Some(ns) => {
                if ns.len() != order {
                    return Err(DataError::Group("names length != order".into()));
                }
                let mut sorted = ns.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != order {
                    return Err(DataError::Group("duplicate element names".into()));
                }
                for n in &ns {
                    if n.contains(',') || n.contains(';') {
                        return Err(DataError::Group(format!("element name {n:?} contains ',' or ';'")));
                    }
                }
                ns
            }
            None => (0..order).map(|i| format!("g{i}")).collect(),
        };
        Ok(FiniteGroup { order, mul_table: table, identity, inv_table, names })
    }

    /// Cyclic group of order `n`, elements named `e, x, x2, ...`.
    pub fn cyclic(n: usize) -> DataResult<Self> {
        if n == 0 {
            return Err(DataError::Group("cyclic group order must be positive".into()));
        }
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "x".to_string(),
                _ => format!("x{i}"),
            })
            .collect();
        Self::from_table(table, Some(names))
    }

    /// Dihedral group of order `2n`: rotations `r^i` and reflections `s r^i`.
    pub fn dihedral(n: usize) -> DataResult<Self> {
        if n == 0 {
            return Err(DataError::Group("dihedral parameter must be positive".into()));
        }
        let order = 2 * n;
        // Encode r^i as i, s r^i as n + i, with s r^i s r^j = r^{j-i}.
        let idx = |refl: bool, i: usize| if refl { n + i } else { i };
        let mut table = vec![vec![0; order]; order];
        for a in 0..order {
            for b in 0..order {
                let (ra, ia) = (a >= n, a % n);
                let (rb, ib) = (b >= n, b % n);
                let (rc, ic) = if !ra && !rb {
                    (false, (ia + ib) % n)
                } else if !ra && rb {
                    // r^i s r^j = s r^{j-i}
                    (true, (ib + n - ia) % n)
                } else if ra && !rb {
                    (true, (ia + ib) % n)
                } else {
                    (false, (ib + n - ia) % n)
                };
                table[a][b] = idx(rc, ic);
            }
        }
        let mut names = Vec::with_capacity(order);
        for i in 0..n {
            names.push(match i {
                0 => "e".to_string(),
                1 => "r".to_string(),
                _ => format!("r{i}"),
            });
        }
        for i in 0..n {
            names.push(match i {
                0 => "s".to_string(),
                1 => "sr".to_string(),
                _ => format!("sr{i}"),
            });
        }
        Self::from_table(table, Some(names))
    }

    /// Symmetric group on three letters, built from permutation composition.
    pub fn symmetric3() -> DataResult<Self> {
        // Permutations of {0,1,2} in a fixed order; composition acts left-to-right
        // on points: (p*q)(i) = q(p(i)).
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];
        let find = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mut table = vec![vec![0; 6]; 6];
        for a in 0..6 {
            for b in 0..6 {
                let composed = [perms[b][perms[a][0]], perms[b][perms[a][1]], perms[b][perms[a][2]]];
                table[a][b] = find(composed);
            }
        }
        Self::from_table(table, Some(names.iter().map(|s| s.to_string()).collect()))
    }

    /// Parses a group description (preset or explicit table).
    pub fn parse(spec: &GroupSpec) -> DataResult<Self> {
        match (&spec.preset, &spec.table) {
            (Some(p), None) => match p.as_str() {
                "cyclic" => Self::cyclic(spec.n.ok_or_else(|| DataError::Group("cyclic preset needs n".into()))?),
                "dihedral" => Self::dihedral(spec.n.ok_or_else(|| DataError::Group("dihedral preset needs n".into()))?),
                "symmetric" => {
                    let n = spec.n.unwrap_or(3);
                    if n != 3 {
                        return Err(DataError::Group("only symmetric 3 is shipped".into()));
                    }
                    Self::symmetric3()
                }
                other => Err(DataError::Group(format!("unknown preset {other:?}"))),
            },
            (None, Some(t)) => Self::from_table(t.clone(), spec.names.clone()),
            _ => Err(DataError::Group("group spec needs exactly one of preset/table".into())),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GElem {
        self.identity
    }

    pub fn mul(&self, a: GElem, b: GElem) -> GElem {
        self.mul_table[a][b]
    }

    pub fn inv(&self, a: GElem) -> GElem {
        self.inv_table[a]
    }

    /// Conjugation x · g · x⁻¹.
    pub fn conj(&self, x: GElem, g: GElem) -> GElem {
        self.mul(self.mul(x, g), self.inv(x))
    }

    /// Product of a slice of elements, identity for the empty slice.
    pub fn product(&self, xs: &[GElem]) -> GElem {
        xs.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    /// Multiplicative order of an element.
    pub fn elem_order(&self, a: GElem) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn name(&self, a: GElem) -> &str {
        &self.names[a]
    }

    pub fn by_name(&self, name: &str) -> DataResult<GElem> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| DataError::Group(format!("unknown group element {name:?}")))
    }

    pub fn elements(&self) -> impl Iterator<Item = GElem> {
        0..self.order
    }
}
