//! Sparse homogeneous multivariate polynomials over exact scalars.
//!
//! Terms are kept in descending graded-lexicographic order with no zero
//! coefficients, so equality is structural and serialization is byte-stable.
//! Multiplication takes an integer fast path (cleared denominators, i128
//! accumulation over packed exponent keys) whenever the coefficients allow
//! it, falling back to general exact arithmetic otherwise.

use crate::scalar::{rat_int, Rational, Scalar};
use num::bigint::BigInt;
use num::{Integer, One, ToPrimitive, Zero};
use smallvec::SmallVec;
use std::collections::HashMap;
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("point length {0} does not match variable count {1}")]
    PointLength(usize, usize),
    #[error("mixed extension discriminants in evaluation")]
    MixedExtensions,
    #[error("vector length mismatch")]
    LengthMismatch,
    #[error("sphere variable groups overlap or are empty")]
    BadGroups,
}

/// Exponent vector of a single monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub SmallVec<[u8; 16]>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0u8, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::unit(nvars);
        m.0[i] = 1;
        m
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; `terms` sorted descending in graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    pub nvars: usize,
    pub terms: Vec<(Monomial, Scalar)>,
}

// Cheap mixing hasher for packed exponent keys; the keys are already
// high-entropy so SipHash would be wasted work in the hot loop.
#[derive(Default)]
struct KeyMix(u64);

impl Hasher for KeyMix {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0 ^ b as u64).wrapping_mul(0x100_0000_01b3);
        }
    }
    fn write_u128(&mut self, v: u128) {
        let x = (v as u64) ^ ((v >> 64) as u64).rotate_left(31);
        let x = x.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        self.0 = x ^ (x >> 29);
    }
}

type KeyMap<V> = HashMap<u128, V, BuildHasherDefault<KeyMix>>;

fn pack_bits(nvars: usize) -> Option<u32> {
    match nvars {
        1..=16 => Some(8),
        17..=21 => Some(6),
        22..=25 => Some(5),
        26..=32 => Some(4),
        _ => None,
    }
}

fn pack(m: &Monomial, bits: u32) -> u128 {
    let mut k = 0u128;
    for &e in m.0.iter() {
        k = (k << bits) | e as u128;
    }
    k
}

fn unpack(mut k: u128, bits: u32, nvars: usize) -> Monomial {
    let mask = (1u128 << bits) - 1;
    let mut v = SmallVec::from_elem(0u8, nvars);
    for i in (0..nvars).rev() {
        v[i] = (k & mask) as u8;
        k >>= bits;
    }
    Monomial(v)
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.push((Monomial::unit(nvars), c));
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        Polynomial {
            nvars,
            terms: vec![(Monomial::var(nvars, i), Scalar::one())],
        }
    }

    pub fn monomial(nvars: usize, exps: &[u8], c: Scalar) -> Self {
        assert_eq!(exps.len(), nvars);
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(Monomial(SmallVec::from_slice(exps)), c)],
        }
    }

    /// Sum of squares of all variables.
    pub fn radius_sq(nvars: usize) -> Self {
        let mut terms = Vec::with_capacity(nvars);
        for i in 0..nvars {
            let mut m = Monomial::unit(nvars);
            m.0[i] = 2;
            terms.push((m, Scalar::one()));
        }
        let mut p = Polynomial { nvars, terms };
        p.normalize();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree of every term when the polynomial is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    fn normalize(&mut self) {
        self.terms.retain(|(_, c)| !c.is_zero());
        self.terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        // merge equal monomials after sort
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = last.1.add(&c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        self.terms = out;
    }

    pub fn from_terms(nvars: usize, terms: Vec<(Monomial, Scalar)>) -> Self {
        let mut p = Polynomial { nvars, terms };
        p.normalize();
        p
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        // merge two descending-sorted term lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match other.terms[j].0.cmp(&self.terms[i].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = self.terms[i].1.add(&other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { nvars: self.nvars, terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.scale(c))).collect(),
        }
    }

    pub fn scale_scalar(&self, c: &Scalar) -> Polynomial {
        let mut p = Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        };
        p.normalize();
        p
    }

    fn int_cleared(&self) -> Option<(Vec<i128>, BigInt)> {
        let mut lcm = BigInt::one();
        for (_, c) in &self.terms {
            let r = c.as_rational()?;
            lcm = lcm.lcm(r.denom());
        }
        let mut nums = Vec::with_capacity(self.terms.len());
        for (_, c) in &self.terms {
            let r = c.as_rational().unwrap();
            let v = r.numer() * (&lcm / r.denom());
            nums.push(v.to_i128()?);
        }
        Some((nums, lcm))
    }

    fn max_exps(&self) -> Vec<u8> {
        let mut mx = vec![0u8; self.nvars];
        for (m, _) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                mx[i] = mx[i].max(e);
            }
        }
        mx
    }

    fn mul_fast(&self, other: &Polynomial) -> Option<Polynomial> {
        let bits = pack_bits(self.nvars)?;
        let (an, ad) = self.int_cleared()?;
        let (bn, bd) = other.int_cleared()?;
        let max_a = an.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
        let max_b = bn.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
        let collisions = an.len().min(bn.len()) as u128;
        let bound = max_a
            .checked_mul(max_b)
            .and_then(|x| x.checked_mul(collisions))?;
        if bound > (i128::MAX / 4) as u128 {
            return None;
        }
        let (ae, be) = (self.max_exps(), other.max_exps());
        let cap = (1u16 << bits) - 1;
        if ae.iter().zip(be.iter()).any(|(&x, &y)| x as u16 + y as u16 > cap) {
            return None;
        }
        let akeys: Vec<u128> = self.terms.iter().map(|(m, _)| pack(m, bits)).collect();
        let bkeys: Vec<u128> = other.terms.iter().map(|(m, _)| pack(m, bits)).collect();
        let mut acc: KeyMap<i128> = KeyMap::with_capacity_and_hasher(
            self.terms.len() * other.terms.len() / 2 + 8,
            Default::default(),
        );
        for (ka, va) in akeys.iter().zip(an.iter()) {
            for (kb, vb) in bkeys.iter().zip(bn.iter()) {
                *acc.entry(ka + kb).or_insert(0) += va * vb;
            }
        }
        Some(Self::from_int_acc(acc, bits, self.nvars, ad * bd))
    }

    fn from_int_acc(acc: KeyMap<i128>, bits: u32, nvars: usize, den: BigInt) -> Polynomial {
        let mut terms: Vec<(Monomial, Scalar)> = acc
            .into_iter()
            .filter(|(_, v)| *v != 0)
            .map(|(k, v)| {
                let c = Rational::new(BigInt::from(v), den.clone());
                (unpack(k, bits, nvars), Scalar::Rat(c))
            })
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { nvars, terms }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        if let Some(p) = self.mul_fast(other) {
            return p;
        }
        let mut acc: HashMap<Monomial, Scalar> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 8);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get().add(&c);
                        *e.get_mut() = s;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Scalar)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { nvars: self.nvars, terms }
    }

    fn square_fast(&self) -> Option<Polynomial> {
        let bits = pack_bits(self.nvars)?;
        let (an, ad) = self.int_cleared()?;
        let max_a = an.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
        let bound = max_a
            .checked_mul(max_a)
            .and_then(|x| x.checked_mul(2 * an.len() as u128))?;
        if bound > (i128::MAX / 4) as u128 {
            return None;
        }
        let ae = self.max_exps();
        let cap = (1u16 << bits) - 1;
        if ae.iter().any(|&x| 2 * x as u16 > cap) {
            return None;
        }
        let keys: Vec<u128> = self.terms.iter().map(|(m, _)| pack(m, bits)).collect();
        let mut acc: KeyMap<i128> = KeyMap::with_capacity_and_hasher(
            self.terms.len() * self.terms.len() / 2 + 8,
            Default::default(),
        );
        for i in 0..keys.len() {
            let (ki, vi) = (keys[i], an[i]);
            *acc.entry(ki + ki).or_insert(0) += vi * vi;
            for j in (i + 1)..keys.len() {
                *acc.entry(ki + keys[j]).or_insert(0) += 2 * vi * an[j];
            }
        }
        Some(Self::from_int_acc(acc, bits, self.nvars, &ad * &ad))
    }

    pub fn square(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        if let Some(p) = self.square_fast() {
            return p;
        }
        self.mul(self)
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        match e {
            0 => Polynomial::one(self.nvars),
            1 => self.clone(),
            _ => {
                let h = self.pow(e / 2);
                let h2 = h.square();
                if e % 2 == 0 {
                    h2
                } else {
                    h2.mul(self)
                }
            }
        }
    }

    pub fn partial(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[i] > 0)
            .map(|(m, c)| {
                let mut m2 = m.clone();
                let e = m2.0[i];
                m2.0[i] = e - 1;
                (m2, c.scale(&rat_int(e as i64)))
            })
            .collect();
        let mut p = Polynomial { nvars: self.nvars, terms };
        p.terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        p
    }

    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    pub fn laplacian(&self) -> Polynomial {
        let mut acc = Polynomial::zero(self.nvars);
        for i in 0..self.nvars {
            acc = acc.add(&self.partial(i).partial(i));
        }
        acc
    }

    /// Exact evaluation; the point may be rational or lie in a single Q(sqrt d).
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::PointLength(point.len(), self.nvars));
        }
        let mut d: Option<u32> = None;
        for s in point.iter().chain(self.terms.iter().map(|(_, c)| c)) {
            if let Some(sd) = s.ext_d() {
                match d {
                    None => d = Some(sd),
                    Some(prev) if prev == sd => {}
                    Some(_) => return Err(PolyError::MixedExtensions),
                }
            }
        }
        // per-variable power tables
        let max = self.max_exps();
        let powers: Vec<Vec<Scalar>> = (0..self.nvars)
            .map(|i| {
                let mut v = Vec::with_capacity(max[i] as usize + 1);
                v.push(Scalar::one());
                for e in 1..=max[i] as usize {
                    let last = v[e - 1].mul(&point[i]);
                    v.push(last);
                }
                v
            })
            .collect();
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[i][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Inner product of two equal-length polynomial vectors.
    pub fn dot(a: &[Polynomial], b: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if a.len() != b.len() {
            return Err(PolyError::LengthMismatch);
        }
        let nvars = a.first().map(|p| p.nvars).unwrap_or(0);
        let mut acc = Polynomial::zero(nvars);
        for (p, q) in a.iter().zip(b.iter()) {
            acc = acc.add(&p.mul(q));
        }
        Ok(acc)
    }

    /// Substitutes zero for the listed variables and drops them, keeping the
    /// remaining variables in order.
    pub fn restrict_to_zero(&self, vars: &[usize]) -> Polynomial {
        let keep: Vec<usize> = (0..self.nvars).filter(|i| !vars.contains(i)).collect();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| vars.iter().all(|&i| m.0[i] == 0))
            .map(|(m, c)| {
                let v: SmallVec<[u8; 16]> = keep.iter().map(|&i| m.0[i]).collect();
                (Monomial(v), c.clone())
            })
            .collect();
        Polynomial::from_terms(keep.len(), terms)
    }

    /// Composition p(q_1, ..., q_n): every variable replaced by a polynomial
    /// in a common ambient ring.
    pub fn compose(&self, subs: &[Polynomial]) -> Polynomial {
        assert_eq!(subs.len(), self.nvars);
        let nvars = subs.first().map(|p| p.nvars).unwrap_or(0);
        // power table per variable, built lazily to the needed degree
        let max = self.max_exps();
        let powers: Vec<Vec<Polynomial>> = (0..self.nvars)
            .map(|i| {
                let mut v = Vec::with_capacity(max[i] as usize + 1);
                v.push(Polynomial::one(nvars));
                for e in 1..=max[i] as usize {
                    let next = v[e - 1].mul(&subs[i]);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(nvars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[i][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

/// |a wedge b|^2 = sum over i<j of (a_i b_j - a_j b_i)^2.
pub fn wedge_norm_sq(a: &[Polynomial], b: &[Polynomial]) -> Result<Polynomial, PolyError> {
    if a.len() != b.len() {
        return Err(PolyError::LengthMismatch);
    }
    let nvars = a.first().map(|p| p.nvars).unwrap_or(0);
    let mut acc = Polynomial::zero(nvars);
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            let w = a[i].mul(&b[j]).sub(&a[j].mul(&b[i]));
            acc = acc.add(&w.square());
        }
    }
    Ok(acc)
}

/// Normal form of `p` modulo the relations sum_{i in group} x_i^2 = 1.
///
/// For each group the square of its first variable is rewritten as
/// 1 - (sum of the other squares) until that variable appears with exponent
/// at most 1.
pub fn reduce_mod_spheres(p: &Polynomial, groups: &[Vec<usize>]) -> Result<Polynomial, PolyError> {
    let mut seen = vec![false; p.nvars];
    for g in groups {
        if g.is_empty() {
            return Err(PolyError::BadGroups);
        }
        for &i in g {
            if i >= p.nvars || seen[i] {
                return Err(PolyError::BadGroups);
            }
            seen[i] = true;
        }
    }
    let mut out = p.clone();
    for g in groups {
        let lead = g[0];
        // 1 - sum of remaining squares in the group
        let mut rel = Polynomial::one(p.nvars);
        for &i in &g[1..] {
            let mut m = Monomial::unit(p.nvars);
            m.0[i] = 2;
            rel = rel.add(&Polynomial {
                nvars: p.nvars,
                terms: vec![(m, Scalar::one().neg())],
            });
        }
        loop {
            let (high, low): (Vec<_>, Vec<_>) =
                out.terms.iter().cloned().partition(|(m, _)| m.0[lead] >= 2);
            if high.is_empty() {
                break;
            }
            let quotient = Polynomial::from_terms(
                p.nvars,
                high.into_iter()
                    .map(|(mut m, c)| {
                        m.0[lead] -= 2;
                        (m, c)
                    })
                    .collect(),
            );
            out = Polynomial::from_terms(p.nvars, low).add(&quotient.mul(&rel));
        }
    }
    Ok(out)
}

// --- JSON interchange -------------------------------------------------------

fn bigint_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) => serde_json::Value::from(x),
        None => serde_json::Value::from(v.to_string()),
    }
}

fn bigint_from_json(v: &serde_json::Value) -> Option<BigInt> {
    if let Some(x) = v.as_i64() {
        return Some(BigInt::from(x));
    }
    v.as_str().and_then(|s| s.parse().ok())
}

pub fn scalar_json(c: &Scalar) -> Vec<serde_json::Value> {
    match c {
        Scalar::Rat(r) => vec![bigint_json(r.numer()), bigint_json(r.denom())],
        Scalar::Ext(e) => vec![
            bigint_json(e.a.numer()),
            bigint_json(e.a.denom()),
            bigint_json(e.b.numer()),
            bigint_json(e.b.denom()),
            serde_json::Value::from(e.d),
        ],
    }
}

pub fn scalar_from_json(parts: &[serde_json::Value]) -> Option<Scalar> {
    match parts.len() {
        2 => {
            let n = bigint_from_json(&parts[0])?;
            let d = bigint_from_json(&parts[1])?;
            Some(Scalar::Rat(Rational::new(n, d)))
        }
        5 => {
            let na = bigint_from_json(&parts[0])?;
            let da = bigint_from_json(&parts[1])?;
            let nb = bigint_from_json(&parts[2])?;
            let db = bigint_from_json(&parts[3])?;
            let d = parts[4].as_u64()? as u32;
            Some(Scalar::ext(Rational::new(na, da), Rational::new(nb, db), d))
        }
        _ => None,
    }
}

impl Polynomial {
    pub fn to_json(&self, vars: Option<&[String]>) -> serde_json::Value {
        let names: Vec<String> = match vars {
            Some(v) => v.to_vec(),
            None => (1..=self.nvars).map(|i| format!("x{}", i)).collect(),
        };
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let exps: Vec<serde_json::Value> =
                    m.0.iter().map(|&e| serde_json::Value::from(e)).collect();
                let mut row = scalar_json(c);
                row.push(serde_json::Value::from(exps));
                serde_json::Value::from(row)
            })
            .collect();
        serde_json::json!({
            "nvars": self.nvars,
            "vars": names,
            "terms": terms,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Polynomial> {
        let nvars = v.get("nvars")?.as_u64()? as usize;
        let mut terms = Vec::new();
        for row in v.get("terms")?.as_array()? {
            let row = row.as_array()?;
            let (coef_parts, exps) = row.split_at(row.len() - 1);
            let c = scalar_from_json(coef_parts)?;
            let exps = exps[0].as_array()?;
            if exps.len() != nvars {
                return None;
            }
            let m: SmallVec<[u8; 16]> = exps
                .iter()
                .map(|e| e.as_u64().map(|x| x as u8))
                .collect::<Option<_>>()?;
            terms.push((Monomial(m), c));
        }
        Some(Polynomial::from_terms(nvars, terms))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{}", i + 1, e)
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    format!("{}", c)
                } else {
                    format!("{}*{}", c, vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
