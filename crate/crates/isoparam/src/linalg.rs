//! Exact dense linear algebra over the rationals: rank, kernel bases, and
//! an LDL^T-based positive-semidefiniteness check.
//!
//! The kernel routine uses fraction-free (Bareiss) elimination. Two exact
//! shortcuts keep large instances inside their time budgets: full column
//! rank modulo a prime certifies a trivial kernel (rank can only drop under
//! reduction), and for large matrices with small kernels the basis is
//! lifted from several primes by CRT plus rational reconstruction, then
//! re-verified over Q.

use crate::scalar::Rational;
use num::bigint::{BigInt, Sign};
use num::{Integer, One, Signed, Zero};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch")]
    Dimension,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        ExactMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from(BigInt::from(v))).collect())
                .collect(),
        )
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn matmul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = ExactMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += a * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn scale(&self, c: &Rational) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Gauss-Jordan inverse; None when singular.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = ExactMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let t = a.get(pivot, j).clone();
                    a.set(pivot, j, a.get(col, j).clone());
                    a.set(col, j, t);
                    let t = inv.get(pivot, j).clone();
                    inv.set(pivot, j, inv.get(col, j).clone());
                    inv.set(col, j, t);
                }
            }
            let d = a.get(col, col).clone();
            for j in 0..n {
                a.set(col, j, a.get(col, j) / &d);
                inv.set(col, j, inv.get(col, j) / &d);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let v = a.get(r, j) - &f * a.get(col, j);
                    a.set(r, j, v);
                    let v = inv.get(r, j) - &f * inv.get(col, j);
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }

    /// Integer matrix with each row scaled by the lcm of its denominators.
    fn rows_cleared(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let mut lcm = BigInt::one();
                for j in 0..self.cols {
                    lcm = lcm.lcm(self.get(i, j).denom());
                }
                (0..self.cols)
                    .map(|j| {
                        let r = self.get(i, j);
                        r.numer() * (&lcm / r.denom())
                    })
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        bareiss_echelon(&mut self.rows_cleared()).len()
    }

    /// Exact basis of the right null space.
    ///
    /// Empty matrices (no rows) return the full standard basis.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        if self.cols == 0 {
            return Vec::new();
        }
        if self.rows == 0 {
            return (0..self.cols)
                .map(|j| {
                    let mut v = vec![Rational::zero(); self.cols];
                    v[j] = Rational::one();
                    v
                })
                .collect();
        }
        // A full-column-rank reduction modulo any prime proves the rational
        // kernel is trivial.
        for p in first_primes(3) {
            if let Some(r) = self.modp_rank(p) {
                if r == self.cols {
                    return Vec::new();
                }
                break;
            }
        }
        if self.cols <= 200 || self.rows * self.cols <= 40_000 {
            self.kernel_bareiss()
        } else {
            self.kernel_crt().unwrap_or_else(|| self.kernel_bareiss())
        }
    }

    fn kernel_bareiss(&self) -> Vec<Vec<Rational>> {
        let mut m = self.rows_cleared();
        let pivots = bareiss_echelon(&mut m);
        kernel_from_echelon(&m, &pivots, self.cols)
    }

    pub fn modp_rank(&self, p: u64) -> Option<usize> {
        let m = self.modp_matrix(p)?;
        Some(modp_echelon(m, self.cols, p).0.len())
    }

    fn modp_matrix(&self, p: u64) -> Option<Vec<Vec<u64>>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| rational_mod_p(self.get(i, j), p))
                    .collect::<Option<Vec<u64>>>()
            })
            .collect()
    }

    /// Kernel basis reconstructed from several primes and verified exactly.
    fn kernel_crt(&self) -> Option<Vec<Vec<Rational>>> {
        let primes = first_primes(24);
        let mut iter = primes.iter();
        let p0 = *iter.next()?;
        let m0 = self.modp_matrix(p0)?;
        let (pivots, rref) = modp_echelon(m0, self.cols, p0);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return Some(Vec::new());
        }
        // residues[v][coord] accumulated via CRT
        let mut modulus = BigInt::from(p0);
        let mut residues: Vec<Vec<BigInt>> = free
            .iter()
            .map(|&f| kernel_vector_mod_p(&rref, &pivots, f, self.cols, p0))
            .map(|v| v.into_iter().map(BigInt::from).collect())
            .collect();
        loop {
            // attempt rational reconstruction and exact verification
            if let Some(basis) = self.try_reconstruct(&residues, &modulus) {
                return Some(basis);
            }
            let p = *iter.next()?;
            let m = self.modp_matrix(p)?;
            let (piv_p, rref_p) = modp_echelon(m, self.cols, p);
            if piv_p != pivots {
                continue; // unlucky prime
            }
            for (vi, &f) in free.iter().enumerate() {
                let vp = kernel_vector_mod_p(&rref_p, &pivots, f, self.cols, p);
                for (ci, &r) in vp.iter().enumerate() {
                    residues[vi][ci] =
                        crt_pair(&residues[vi][ci], &modulus, &BigInt::from(r), &BigInt::from(p));
                }
            }
            modulus *= BigInt::from(p);
        }
    }

    fn try_reconstruct(
        &self,
        residues: &[Vec<BigInt>],
        modulus: &BigInt,
    ) -> Option<Vec<Vec<Rational>>> {
        let mut basis = Vec::with_capacity(residues.len());
        for res in residues {
            let v: Vec<Rational> = res
                .iter()
                .map(|r| rational_reconstruct(r, modulus))
                .collect::<Option<_>>()?;
            if self.mul_vec(&v).iter().any(|x| !x.is_zero()) {
                return None;
            }
            basis.push(primitive_vector(v));
        }
        Some(basis)
    }
}

/// Fraction-free row echelon; returns pivot column indices.
fn bareiss_echelon(m: &mut Vec<Vec<BigInt>>) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows > 0 { m[0].len() } else { 0 };
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..cols {
        // smallest nonzero pivot keeps intermediate growth down
        let pick = (row..rows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].magnitude().bits());
        let Some(pr) = pick else { continue };
        m.swap(row, pr);
        for r in (row + 1)..rows {
            if m[r][col].is_zero() && m[row][col].is_one() {
                // fast path: nothing to eliminate but still rescale is a no-op
            }
            for c in (col + 1)..cols {
                let v = (&m[row][col] * &m[r][c] - &m[r][col] * &m[row][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    pivots
}

fn kernel_from_echelon(m: &[Vec<BigInt>], pivots: &[usize], cols: usize) -> Vec<Vec<Rational>> {
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (ri, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = Rational::zero();
            for c in (pc + 1)..cols {
                if !v[c].is_zero() && !m[ri][c].is_zero() {
                    acc += Rational::from(m[ri][c].clone()) * &v[c];
                }
            }
            v[pc] = -acc / Rational::from(m[ri][pc].clone());
        }
        basis.push(primitive_vector(v));
    }
    basis
}

/// Scales a rational vector to a primitive integer vector with positive
/// leading entry, for deterministic output.
pub fn primitive_vector(v: Vec<Rational>) -> Vec<Rational> {
    let mut lcm = BigInt::one();
    for x in &v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v;
    }
    let sign = ints
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.sign())
        .unwrap_or(Sign::Plus);
    let g = if sign == Sign::Minus { -g } else { g };
    ints.into_iter().map(|x| Rational::from(x / &g)).collect()
}

// --- modular helpers ---------------------------------------------------------

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn bigint_mod_p(v: &BigInt, p: u64) -> u64 {
    let m = (v.magnitude() % p).to_u64_digits();
    let r = m.first().copied().unwrap_or(0);
    if v.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

fn rational_mod_p(v: &Rational, p: u64) -> Option<u64> {
    let d = bigint_mod_p(v.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mulmod(bigint_mod_p(v.numer(), p), invmod(d, p), p))
}

/// Reduced row echelon mod p; returns (pivot columns, reduced rows).
fn modp_echelon(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> (Vec<usize>, Vec<Vec<u64>>) {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, pr);
        let inv = invmod(m[row][col], p);
        for c in col..cols {
            m[row][c] = mulmod(m[row][c], inv, p);
        }
        for r in 0..rows {
            if r != row && m[r][col] != 0 {
                let f = m[r][col];
                for c in col..cols {
                    let sub = mulmod(f, m[row][c], p);
                    m[r][c] = (m[r][c] + p - sub) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    m.truncate(row);
    (pivots, m)
}

/// Kernel vector mod p for one free column of an rref matrix.
fn kernel_vector_mod_p(
    rref: &[Vec<u64>],
    pivots: &[usize],
    free_col: usize,
    cols: usize,
    p: u64,
) -> Vec<u64> {
    let mut v = vec![0u64; cols];
    v[free_col] = 1;
    for (ri, &pc) in pivots.iter().enumerate() {
        let coef = rref[ri][free_col];
        if coef != 0 {
            v[pc] = p - coef;
        }
    }
    v
}

fn crt_pair(a: &BigInt, m: &BigInt, b: &BigInt, p: &BigInt) -> BigInt {
    // x = a mod m, x = b mod p; m and p coprime
    let e = m.extended_gcd(p);
    let inv_m_mod_p = e.x.mod_floor(p); // m * x ≡ 1 (mod p)
    let diff = (b - a).mod_floor(p);
    a + m * ((diff * inv_m_mod_p).mod_floor(p))
}

fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let mut r0 = m.clone();
    let mut r1 = a.mod_floor(m);
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() {
        return None;
    }
    if t1.is_negative() {
        r1 = -r1;
        t1 = -t1;
    }
    if t1 > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Deterministic descending sequence of 62-bit primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = (1u64 << 62) - 1;
    while out.len() < count {
        if is_prime_u64(candidate) {
            out.push(candidate);
        }
        candidate -= 2;
    }
    out
}

// --- LDL^T psd check ---------------------------------------------------------

/// Successful factorization S = W^T D W with nonnegative diagonal D.
///
/// `pivots[k]` is (original index, pivot value); `rows[k]` is the matching
/// row of W in original coordinates, so S = sum_k d_k rows_k^T rows_k.
#[derive(Clone, Debug)]
pub struct LdlFactor {
    pub pivots: Vec<(usize, Rational)>,
    pub rows: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug)]
pub enum PsdVerdict {
    Psd(LdlFactor),
    NotPsd {
        witness: Vec<Rational>,
        value: Rational,
    },
}

impl PsdVerdict {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdVerdict::Psd(_))
    }
}

/// Exact LDL^T positive-semidefiniteness decision with symmetric pivoting.
///
/// On failure returns a witness v with v^T S v < 0, exactly.
pub fn ldl_psd_check(s: &ExactMatrix) -> Result<PsdVerdict, LinAlgError> {
    if !s.is_symmetric() {
        return Err(LinAlgError::NotSymmetric);
    }
    let n = s.rows;
    let mut a = s.clone();
    // v and w track the congruence: a = v^T s v and s = w^T diag(a) w
    let mut v = ExactMatrix::identity(n);
    let mut w = ExactMatrix::identity(n);
    let mut active: Vec<usize> = (0..n).collect();
    let mut pivots: Vec<(usize, Rational)> = Vec::new();
    while !active.is_empty() {
        // negative diagonal: immediate witness
        if let Some(&i) = active.iter().find(|&&i| a.get(i, i).is_negative()) {
            let witness: Vec<Rational> = (0..n).map(|r| v.get(r, i).clone()).collect();
            let value = a.get(i, i).clone();
            return Ok(PsdVerdict::NotPsd { witness, value });
        }
        // choose the largest positive diagonal as pivot
        let pivot = active
            .iter()
            .copied()
            .filter(|&i| !a.get(i, i).is_zero())
            .max_by(|&x, &y| a.get(x, x).cmp(a.get(y, y)));
        match pivot {
            Some(i) => {
                let d = a.get(i, i).clone();
                for &j in active.iter().filter(|&&j| j != i) {
                    let f = a.get(j, i) / &d;
                    if f.is_zero() {
                        continue;
                    }
                    // symmetric elimination of row/col j against pivot i
                    for &c in &active {
                        let val = a.get(j, c) - &f * a.get(i, c);
                        a.set(j, c, val);
                    }
                    for &r in &active {
                        let val = a.get(r, j) - &f * a.get(r, i);
                        a.set(r, j, val);
                    }
                    for r in 0..n {
                        let val = v.get(r, j) - &f * v.get(r, i);
                        v.set(r, j, val);
                    }
                    for c in 0..n {
                        let val = w.get(i, c) + &f * w.get(j, c);
                        w.set(i, c, val);
                    }
                }
                pivots.push((i, d));
                active.retain(|&x| x != i);
            }
            None => {
                // all remaining diagonals are zero: PSD forces the whole
                // active block to vanish
                let mut bad = None;
                'scan: for (ai, &i) in active.iter().enumerate() {
                    for &j in &active[ai + 1..] {
                        if !a.get(i, j).is_zero() {
                            bad = Some((i, j));
                            break 'scan;
                        }
                    }
                }
                match bad {
                    None => {
                        for &i in &active {
                            pivots.push((i, Rational::zero()));
                        }
                        break;
                    }
                    Some((i, j)) => {
                        // w = e_i + t e_j with value 2 t a_ij < 0
                        let t = if a.get(i, j).is_negative() {
                            Rational::one()
                        } else {
                            -Rational::one()
                        };
                        let witness: Vec<Rational> = (0..n)
                            .map(|r| v.get(r, i) + &t * v.get(r, j))
                            .collect();
                        let value = a.get(i, j) * &t * Rational::from(BigInt::from(2));
                        return Ok(PsdVerdict::NotPsd { witness, value });
                    }
                }
            }
        }
    }
    Ok(PsdVerdict::Psd(LdlFactor {
        rows: w_rows(&w, &pivots),
        pivots,
    }))
}

fn w_rows(w: &ExactMatrix, pivots: &[(usize, Rational)]) -> Vec<Vec<Rational>> {
    pivots
        .iter()
        .map(|(i, _)| (0..w.cols).map(|c| w.get(*i, c).clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn quad_form(s: &ExactMatrix, v: &[Rational]) -> Rational {
        let sv = s.mul_vec(v);
        v.iter()
            .zip(sv.iter())
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    #[test]
    fn kernel_examples() {
        // identity has trivial kernel
        let id = ExactMatrix::identity(2);
        assert!(id.kernel_basis().is_empty());
        // single relation in two unknowns
        let m = ExactMatrix::from_i64(&[vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![rat_int(1), rat_int(-1)]);
        // zero map
        let z = ExactMatrix::zero(2, 3);
        assert_eq!(z.kernel_basis().len(), 3);
    }

    #[test]
    fn rank_nullity_random() {
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..200 {
            let rows = rng.gen_range(1..7);
            let cols = rng.gen_range(1..7);
            let m = ExactMatrix::from_rows(
                (0..rows)
                    .map(|_| {
                        (0..cols)
                            .map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
                            .collect()
                    })
                    .collect(),
            );
            let kernel = m.kernel_basis();
            assert_eq!(m.rank() + kernel.len(), cols);
            for v in &kernel {
                assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn crt_kernel_matches_bareiss() {
        let mut rng = StdRng::seed_from_u64(37);
        for _ in 0..20 {
            let rows = rng.gen_range(3..8);
            let cols = rng.gen_range(3..8);
            let m = ExactMatrix::from_rows(
                (0..rows)
                    .map(|_| (0..cols).map(|_| rat_int(rng.gen_range(-9..=9))).collect())
                    .collect(),
            );
            let direct = m.kernel_bareiss();
            if let Some(crt) = m.kernel_crt() {
                assert_eq!(direct.len(), crt.len());
                for v in &crt {
                    assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
                }
            }
        }
    }

    #[test]
    fn psd_examples() {
        // identity
        let verdict = ldl_psd_check(&ExactMatrix::identity(3)).unwrap();
        match verdict {
            PsdVerdict::Psd(f) => {
                assert_eq!(f.pivots.len(), 3);
                assert!(f.pivots.iter().all(|(_, d)| d.is_one()));
            }
            _ => panic!("identity must be psd"),
        }
        // indefinite with eigenvalue -1
        let s = ExactMatrix::from_i64(&[vec![1, 2], vec![2, 1]]);
        match ldl_psd_check(&s).unwrap() {
            PsdVerdict::NotPsd { witness, value } => {
                assert!(value.is_negative());
                assert_eq!(quad_form(&s, &witness), value);
            }
            _ => panic!("must not be psd"),
        }
        // zero matrix: psd with zero pivots
        match ldl_psd_check(&ExactMatrix::zero(2, 2)).unwrap() {
            PsdVerdict::Psd(f) => assert!(f.pivots.iter().all(|(_, d)| d.is_zero())),
            _ => panic!("zero matrix is psd"),
        }
        // non-symmetric rejected
        let ns = ExactMatrix::from_i64(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(ldl_psd_check(&ns).unwrap_err(), LinAlgError::NotSymmetric);
    }

    // brute-force oracle: symmetric S is psd iff all principal minors are >= 0
    fn psd_by_minors(s: &ExactMatrix) -> bool {
        let n = s.rows;
        for mask in 1u32..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if det_on(s, &idx, &idx).is_negative() {
                return false;
            }
        }
        true
    }

    fn det_on(s: &ExactMatrix, rows: &[usize], cols: &[usize]) -> Rational {
        if rows.len() == 1 {
            return s.get(rows[0], cols[0]).clone();
        }
        let mut acc = Rational::zero();
        let mut sign = Rational::one();
        for (c, &j) in cols.iter().enumerate() {
            let sub_cols: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != c)
                .map(|(_, &v)| v)
                .collect();
            acc += &sign * s.get(rows[0], j) * det_on(s, &rows[1..], &sub_cols);
            sign = -sign;
        }
        acc
    }

    #[test]
    fn psd_agrees_with_principal_minors() {
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..200 {
            let n = rng.gen_range(1..=5);
            // random symmetric with small entries; bias towards psd by
            // sometimes squaring a random matrix
            let mut s = ExactMatrix::zero(n, n);
            if rng.gen_bool(0.5) {
                let b = ExactMatrix::from_rows(
                    (0..n)
                        .map(|_| (0..n).map(|_| rat_int(rng.gen_range(-3..=3))).collect())
                        .collect(),
                );
                s = b.transpose().matmul(&b);
            } else {
                for i in 0..n {
                    for j in 0..=i {
                        let v = rat(rng.gen_range(-4..=4), rng.gen_range(1..=2));
                        s.set(i, j, v.clone());
                        s.set(j, i, v);
                    }
                }
            }
            let expected = psd_by_minors(&s);
            match ldl_psd_check(&s).unwrap() {
                PsdVerdict::Psd(f) => {
                    assert!(expected, "ldl says psd, minors disagree");
                    // reconstruction: S = sum_k d_k rows_k^T rows_k
                    let mut recon = ExactMatrix::zero(n, n);
                    for ((_, d), row) in f.pivots.iter().zip(f.rows.iter()) {
                        for i in 0..n {
                            for j in 0..n {
                                let v = recon.get(i, j) + d * &row[i] * &row[j];
                                recon.set(i, j, v);
                            }
                        }
                    }
                    assert_eq!(recon, s);
                }
                PsdVerdict::NotPsd { witness, value } => {
                    assert!(!expected, "ldl says not psd, minors disagree");
                    assert!(value.is_negative());
                    assert_eq!(quad_form(&s, &witness), value);
                }
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let mut rng = StdRng::seed_from_u64(47);
        for _ in 0..50 {
            let n = rng.gen_range(1..=5);
            let m = ExactMatrix::from_rows(
                (0..n)
                    .map(|_| (0..n).map(|_| rat_int(rng.gen_range(-5..=5))).collect())
                    .collect(),
            );
            if let Some(inv) = m.inverse() {
                assert_eq!(m.matmul(&inv), ExactMatrix::identity(n));
            }
        }
    }
}
