//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! A value is a rational polynomial in ζ_N reduced modulo the N-th
//! cyclotomic polynomial, stored on the canonical basis ζ^0..ζ^{φ(N)-1}.
//! Equality of values is equality of coefficient vectors at a common
//! conductor, so every comparison the checkers make is exact.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use std::sync::Mutex;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::error::{DataError, DataResult, OpError, OpResult};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Euler totient, by trial division; conductors are small.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Dense polynomial over Q, lowest degree first, no trailing zeros enforced
/// by callers where it matters.
type Poly = Vec<BigRational>;

fn poly_trim(p: &mut Poly) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    out
}

/// Quotient of `a` by monic-leading `b`; remainder discarded must be zero
/// when used for cyclotomic polynomial construction.
fn poly_divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut rem = a.clone();
    poly_trim(&mut rem);
    let mut bb = b.clone();
    poly_trim(&mut bb);
    let db = bb.len() - 1;
    let lead = bb[db].clone();
    if rem.len() <= db {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db || (rem.len() == db + 1 && !rem[db].is_zero()) {
        let dr = rem.len() - 1;
        if dr < db {
            break;
        }
        let c = &rem[dr] / &lead;
        if c.is_zero() {
            rem.pop();
            continue;
        }
        quot[dr - db] = c.clone();
        for i in 0..=db {
            let t = &bb[i] * &c;
            rem[dr - db + i] -= t;
        }
        poly_trim(&mut rem);
        if rem.len() == 1 && rem[0].is_zero() {
            break;
        }
    }
    (quot, rem)
}

/// Per-conductor context: the cyclotomic polynomial and precomputed
/// reductions of ζ^j for j up to what products and conjugation need.
struct Modulus {
    phi: usize,
    /// Reduction of x^j modulo Φ_N on the canonical basis, for j = 0..n.
    power_rows: Vec<Vec<BigRational>>,
}

impl Modulus {
    fn build(n: u64) -> Modulus {
        let cyc = cyclotomic_poly(n);
        let phi = cyc.len() - 1;
        let max_pow = std::cmp::max(n as usize, 2 * phi);
        let mut power_rows: Vec<Vec<BigRational>> = Vec::with_capacity(max_pow + 1);
        for j in 0..=max_pow {
            if j < phi {
                let mut row = vec![BigRational::zero(); phi];
                row[j] = BigRational::one();
                power_rows.push(row);
            } else {
                // x^j = x * x^{j-1}, then substitute the top power via Φ.
                let prev = &power_rows[j - 1];
                let mut shifted = vec![BigRational::zero(); phi + 1];
                for (i, c) in prev.iter().enumerate() {
                    shifted[i + 1] = c.clone();
                }
                let top = shifted[phi].clone();
                let mut row: Vec<BigRational> = shifted[..phi].to_vec();
                if !top.is_zero() {
                    // x^phi = -(c_0 + c_1 x + ...)/c_phi with c_phi = 1.
                    for (i, c) in cyc[..phi].iter().enumerate() {
                        row[i] -= &top * c;
                    }
                }
                power_rows.push(row);
            }
        }
        Modulus { phi, power_rows }
    }
}

fn cyclotomic_poly(n: u64) -> Poly {
    // Φ_n = (x^n - 1) / Π_{d|n, d<n} Φ_d, computed by exact division.
    if n == 1 {
        return vec![q(-1, 1), q(1, 1)];
    }
    let mut num = vec![BigRational::zero(); n as usize + 1];
    num[0] = q(-1, 1);
    num[n as usize] = q(1, 1);
    let mut result = num;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d);
            let (quot, rem) = poly_divmod(&result, &phi_d);
            debug_assert!(rem.iter().all(|c| c.is_zero()));
            result = quot;
        }
    }
    result
}

static MODULI: Lazy<Mutex<HashMap<u64, Arc<Modulus>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn modulus(n: u64) -> Arc<Modulus> {
    let mut cache = MODULI.lock().unwrap();
    cache.entry(n).or_insert_with(|| Arc::new(Modulus::build(n))).clone()
}

/// Exact element of Q(ζ_N).
#[derive(Debug, Clone)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(conductor: u64) -> Self {
        let phi = euler_phi(conductor) as usize;
        Cyclotomic { conductor, coeffs: vec![BigRational::zero(); phi] }
    }

    pub fn one(conductor: u64) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = BigRational::one();
        z
    }

    pub fn from_rational(conductor: u64, num: i64, den: i64) -> OpResult<Self> {
        if den == 0 {
            return Err(OpError::DivisionByZero);
        }
        let mut z = Self::zero(conductor);
        z.coeffs[0] = q(num, den);
        Ok(z)
    }

    pub fn from_int(conductor: u64, v: i64) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = q(v, 1);
        z
    }

    /// ζ_N^k, any integer k.
    pub fn root(conductor: u64, k: i64) -> Self {
        let n = conductor as i64;
        let k = k.rem_euclid(n) as usize;
        let m = modulus(conductor);
        Cyclotomic { conductor, coeffs: m.power_rows[k].clone() }
    }

    /// A rational multiple of ζ_N^k.
    pub fn term(conductor: u64, num: i64, den: i64, pow: i64) -> OpResult<Self> {
        if den == 0 {
            return Err(OpError::DivisionByZero);
        }
        let mut z = Self::root(conductor, pow);
        let c = q(num, den);
        for co in z.coeffs.iter_mut() {
            *co *= &c;
        }
        Ok(z)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Re-expresses the value in Q(ζ_M) for a multiple M of the conductor.
    pub fn embed(&self, m: u64) -> OpResult<Self> {
        if m == self.conductor {
            return Ok(self.clone());
        }
        if !m.is_multiple_of(self.conductor) {
            return Err(OpError::Other(format!(
                "cannot embed conductor {} into {}",
                self.conductor, m
            )));
        }
        let stride = (m / self.conductor) as usize;
        let md = modulus(m);
        let mut out = Cyclotomic::zero(m);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &md.power_rows[k * stride];
            for (i, r) in row.iter().enumerate() {
                out.coeffs[i] += c * r;
            }
        }
        Ok(out)
    }

    fn lift_pair(a: &Self, b: &Self) -> OpResult<(Self, Self)> {
        if a.conductor == b.conductor {
            return Ok((a.clone(), b.clone()));
        }
        let l = num::integer::lcm(a.conductor, b.conductor);
        Ok((a.embed(l)?, b.embed(l)?))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = Self::lift_pair(self, other).expect("lcm embedding");
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = Self::lift_pair(self, other).expect("lcm embedding");
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Self {
        let mut z = self.clone();
        for c in z.coeffs.iter_mut() {
            *c = -c.clone();
        }
        z
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::lift_pair(self, other).expect("lcm embedding");
        let md = modulus(a.conductor);
        let phi = md.phi;
        let raw = poly_mul(&a.coeffs, &b.coeffs);
        let mut out = Cyclotomic::zero(a.conductor);
        for (j, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j < phi {
                out.coeffs[j] += c;
            } else {
                let row = &md.power_rows[j];
                for (i, r) in row.iter().enumerate() {
                    out.coeffs[i] += c * r;
                }
            }
        }
        out
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    /// modulo the (irreducible) cyclotomic polynomial.
    pub fn inv(&self) -> OpResult<Self> {
        if self.is_zero() {
            return Err(OpError::DivisionByZero);
        }
        let cyc = cyclotomic_poly(self.conductor);
        // Extended gcd of (coeffs, Φ): r0 = f, r1 = Φ; track s with r = s*f mod Φ.
        let mut r0: Poly = self.coeffs.clone();
        poly_trim(&mut r0);
        let mut r1: Poly = cyc;
        let mut s0: Poly = vec![BigRational::one()];
        let mut s1: Poly = vec![BigRational::zero()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (quot, rem) = poly_divmod(&r0, &r1);
            let qs = poly_mul(&quot, &s1);
            let mut s2 = s0.clone();
            s2.resize(std::cmp::max(s2.len(), qs.len()), BigRational::zero());
            for (i, c) in qs.iter().enumerate() {
                s2[i] -= c;
            }
            poly_trim(&mut s2);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // r0 = gcd (a nonzero constant, since Φ is irreducible and f ≠ 0).
        if r0.len() != 1 || r0[0].is_zero() {
            return Err(OpError::Other("inverse failed: gcd not a nonzero constant".into()));
        }
        let scale = r0[0].clone();
        let md = modulus(self.conductor);
        let phi = md.phi;
        let mut out = Cyclotomic::zero(self.conductor);
        for (j, c) in s0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c / &scale;
            if j < phi {
                out.coeffs[j] += &v;
            } else {
                let row = &md.power_rows[j];
                for (i, r) in row.iter().enumerate() {
                    out.coeffs[i] += &v * r;
                }
            }
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> OpResult<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Complex conjugation ζ ↦ ζ⁻¹, an involutive field automorphism
    /// fixing the rationals.
    pub fn conj(&self) -> Self {
        let n = self.conductor;
        let md = modulus(n);
        let mut out = Cyclotomic::zero(n);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let j = ((n as usize) - k) % (n as usize);
            let row = &md.power_rows[j];
            for (i, r) in row.iter().enumerate() {
                out.coeffs[i] += c * r;
            }
        }
        out
    }

    pub fn pow(&self, e: i64) -> OpResult<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Cyclotomic::one(self.conductor);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Exact rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Parses the data-file scalar form: an integer, or a list of
    /// `[numerator, denominator, power]` terms meaning Σ (n/d)·ζ^p.
    pub fn parse_json(conductor: u64, v: &serde_json::Value) -> DataResult<Self> {
        match v {
            serde_json::Value::Number(n) => {
                let i = n
                    .as_i64()
                    .ok_or_else(|| DataError::Scalar(format!("non-integer numeric scalar {n}")))?;
                Ok(Self::from_int(conductor, i))
            }
            serde_json::Value::Array(terms) => {
                let mut acc = Self::zero(conductor);
                for t in terms {
                    let triple = t
                        .as_array()
                        .filter(|a| a.len() == 3)
                        .ok_or_else(|| DataError::Scalar(format!("scalar term {t} is not [num, den, pow]")))?;
                    let num = triple[0]
                        .as_i64()
                        .ok_or_else(|| DataError::Scalar("term numerator must be an integer".into()))?;
                    let den = triple[1]
                        .as_i64()
                        .ok_or_else(|| DataError::Scalar("term denominator must be an integer".into()))?;
                    let pow = triple[2]
                        .as_i64()
                        .ok_or_else(|| DataError::Scalar("term power must be an integer".into()))?;
                    if den == 0 {
                        return Err(DataError::Scalar("term denominator is zero".into()));
                    }
                    let term = Self::term(conductor, num, den, pow)
                        .map_err(|e| DataError::Scalar(e.to_string()))?;
                    acc = acc.add(&term);
                }
                Ok(acc)
            }
            other => Err(DataError::Scalar(format!("scalar must be integer or term list, got {other}"))),
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::lift_pair(self, other).expect("lcm embedding");
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() && k > 0 {
                String::new()
            } else if (-c.clone()).is_one() && k > 0 {
                "-".to_string()
            } else {
                format!("{c}")
            };
            let base = match k {
                0 => {
                    parts.push(format!("{c}"));
                    continue;
                }
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{k}", self.conductor),
            };
            if coeff.is_empty() || coeff == "-" {
                parts.push(format!("{coeff}{base}"));
            } else {
                parts.push(format!("{coeff}*{base}"));
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            if let Some(stripped) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(stripped);
            } else {
                s.push_str(" + ");
                s.push_str(p);
            }
        }
        write!(f, "{s}")
    }
}

impl Cyclotomic {
    /// Serializes back to the data-file term-list form, deterministically.
    pub fn to_json(&self) -> serde_json::Value {
        if let Some(r) = self.as_rational() {
            if r.is_integer() && r.numer().abs() < BigInt::from(i64::MAX) {
                let i: i64 = r.numer().to_string().parse().unwrap();
                return serde_json::json!(i);
            }
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let num: i64 = c.numer().to_string().parse().unwrap_or(0);
            let den: i64 = c.denom().to_string().parse().unwrap_or(1);
            terms.push(serde_json::json!([num, den, k]));
        }
        serde_json::Value::Array(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourth_root_squares_to_minus_one() {
        let i = Cyclotomic::root(4, 1);
        let sq = i.mul(&i);
        assert_eq!(sq, Cyclotomic::from_int(4, -1));
    }

    #[test]
    fn sqrt2_from_eighth_roots() {
        let s = Cyclotomic::root(8, 1).add(&Cyclotomic::root(8, 7));
        let two = s.mul(&s);
        assert_eq!(two, Cyclotomic::from_int(8, 2));
        assert_eq!(two, Cyclotomic::from_int(1, 2));
    }

    #[test]
    fn inverse_roundtrip_at_conductor_three() {
        let x = Cyclotomic::one(3).add(&Cyclotomic::root(3, 1));
        let prod = x.mul(&x.inv().unwrap());
        assert!(prod.is_one());
    }

    #[test]
    fn zeta_n_to_the_n_is_one() {
        for n in [1u64, 2, 3, 4, 5, 8, 12, 16] {
            let z = Cyclotomic::root(n, 1);
            assert!(z.pow(n as i64).unwrap().is_one(), "conductor {n}");
        }
    }

    #[test]
    fn conjugation_is_involutive_and_fixes_rationals() {
        let x = Cyclotomic::term(16, 3, 7, 5).unwrap().add(&Cyclotomic::from_int(16, 2));
        assert_eq!(x.conj().conj(), x);
        let r = Cyclotomic::from_rational(16, -5, 3).unwrap();
        assert_eq!(r.conj(), r);
    }

    #[test]
    fn conjugation_is_a_field_automorphism() {
        let a = Cyclotomic::root(12, 5).add(&Cyclotomic::from_int(12, 1));
        let b = Cyclotomic::term(12, 1, 2, 7).unwrap();
        assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let z = Cyclotomic::zero(4);
        assert!(z.inv().is_err());
    }

    #[test]
    fn mixed_conductor_arithmetic_embeds_into_lcm() {
        let a = Cyclotomic::root(4, 1); // i
        let b = Cyclotomic::root(3, 1);
        let p = a.mul(&b);
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, Cyclotomic::root(12, 7));
    }

    #[test]
    fn golden_ratio_arithmetic_at_conductor_five() {
        // φ = (1 + √5)/2 with √5 = 2ζ₅ + 2ζ₅⁴ + 1.
        let sqrt5 = Cyclotomic::term(5, 2, 1, 1)
            .unwrap()
            .add(&Cyclotomic::term(5, 2, 1, 4).unwrap())
            .add(&Cyclotomic::from_int(5, 1));
        assert_eq!(sqrt5.mul(&sqrt5), Cyclotomic::from_int(5, 5));
        let phi = sqrt5.add(&Cyclotomic::one(5)).mul(&Cyclotomic::from_rational(5, 1, 2).unwrap());
        // φ² = φ + 1.
        assert_eq!(phi.mul(&phi), phi.add(&Cyclotomic::one(5)));
    }
}
