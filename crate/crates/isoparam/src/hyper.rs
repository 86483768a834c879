//! Quaternion and octonion arithmetic with polynomial components.
//!
//! Multiplication follows the Cayley-Dickson doubling with conjugation on
//! the right factor: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)). The
//! octonion basis is e0 = 1, e1 = i, e2 = j, e3 = k, e4 = (0,1), e5 = (0,i),
//! e6 = (0,j), e7 = (0,k); real parts of triple products associate either
//! way, and the left association Re((a b) c) is used throughout.

use crate::poly::{PolyError, Polynomial};
use crate::scalar::Scalar;

/// Number with 1, 2, 4, or 8 polynomial components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperNumber {
    pub components: Vec<Polynomial>,
}

/// Vector with entries in a fixed hypercomplex algebra.
pub type HVector = Vec<HyperNumber>;

impl HyperNumber {
    pub fn new(components: Vec<Polynomial>) -> Self {
        assert!(
            matches!(components.len(), 1 | 2 | 4 | 8),
            "dimension must be 1, 2, 4, or 8"
        );
        HyperNumber { components }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn nvars(&self) -> usize {
        self.components[0].nvars
    }

    pub fn zero(dim: usize, nvars: usize) -> Self {
        Self::new(vec![Polynomial::zero(nvars); dim])
    }

    /// Basis element e_k as a constant.
    pub fn basis(dim: usize, nvars: usize, k: usize) -> Self {
        let mut h = Self::zero(dim, nvars);
        h.components[k] = Polynomial::one(nvars);
        h
    }

    /// Scalar constant embedded in the real slot.
    pub fn from_scalars(dim: usize, nvars: usize, values: &[Scalar]) -> Self {
        assert_eq!(values.len(), dim);
        Self::new(
            values
                .iter()
                .map(|v| Polynomial::constant(nvars, v.clone()))
                .collect(),
        )
    }

    /// Consecutive ambient variables var_base..var_base+dim as components.
    pub fn from_vars(dim: usize, nvars: usize, var_base: usize) -> Self {
        Self::new(
            (0..dim)
                .map(|i| Polynomial::var(nvars, var_base + i))
                .collect(),
        )
    }

    pub fn re(&self) -> &Polynomial {
        &self.components[0]
    }

    pub fn conj(&self) -> Self {
        let mut c = self.clone();
        for p in c.components.iter_mut().skip(1) {
            *p = p.neg();
        }
        c
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        Self::new(
            self.components
                .iter()
                .zip(other.components.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.components.iter().map(|p| p.neg()).collect())
    }

    pub fn scale_poly(&self, p: &Polynomial) -> Self {
        Self::new(self.components.iter().map(|c| c.mul(p)).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.components.iter().map(|c| c.scale_scalar(s)).collect())
    }

    pub fn norm_sq(&self) -> Polynomial {
        let mut acc = Polynomial::zero(self.nvars());
        for c in &self.components {
            acc = acc.add(&c.square());
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }
}

fn cd_mul(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    if a.len() == 1 {
        return vec![a[0].mul(&b[0])];
    }
    let h = a.len() / 2;
    let (a1, a2) = a.split_at(h);
    let (b1, b2) = b.split_at(h);
    let conj = |v: &[Polynomial]| -> Vec<Polynomial> {
        v.iter()
            .enumerate()
            .map(|(i, p)| if i == 0 { p.clone() } else { p.neg() })
            .collect()
    };
    let sub2 = |x: Vec<Polynomial>, y: Vec<Polynomial>| -> Vec<Polynomial> {
        x.iter().zip(y.iter()).map(|(p, q)| p.sub(q)).collect()
    };
    let add2 = |x: Vec<Polynomial>, y: Vec<Polynomial>| -> Vec<Polynomial> {
        x.iter().zip(y.iter()).map(|(p, q)| p.add(q)).collect()
    };
    let first = sub2(cd_mul(a1, b1), cd_mul(&conj(b2), a2));
    let second = add2(cd_mul(b2, a1), cd_mul(a2, &conj(b1)));
    let mut out = first;
    out.extend(second);
    out
}

/// Product under the fixed Cayley-Dickson table.
pub fn hyper_mul(a: &HyperNumber, b: &HyperNumber) -> HyperNumber {
    assert_eq!(a.dim(), b.dim(), "dimension mismatch");
    HyperNumber::new(cd_mul(&a.components, &b.components))
}

/// Real part of the left-associated triple product (a b) c.
pub fn re_triple(a: &HyperNumber, b: &HyperNumber, c: &HyperNumber) -> Polynomial {
    hyper_mul(&hyper_mul(a, b), c).re().clone()
}

/// Hopf fibration component map (u, v) -> (|v|^2 - |u|^2, 2 u conj(v)).
pub fn hopf_map(u: &HyperNumber, v: &HyperNumber) -> Vec<Polynomial> {
    assert_eq!(u.dim(), 4);
    assert_eq!(v.dim(), 4);
    let first = v.norm_sq().sub(&u.norm_sq());
    let two = Scalar::from_int(2);
    let prod = hyper_mul(u, &v.conj()).scale(&two);
    let mut out = vec![first];
    out.extend(prod.components);
    out
}

/// Quaternion-valued Hermitian inner product sum_i X_i conj(Y_i).
pub fn quat_hermitian_inner(x: &[HyperNumber], y: &[HyperNumber]) -> Result<HyperNumber, PolyError> {
    if x.len() != y.len() {
        return Err(PolyError::LengthMismatch);
    }
    assert!(!x.is_empty());
    let mut acc = HyperNumber::zero(4, x[0].nvars());
    for (a, b) in x.iter().zip(y.iter()) {
        assert_eq!(a.dim(), 4, "dimension mismatch");
        assert_eq!(b.dim(), 4, "dimension mismatch");
        acc = acc.add(&hyper_mul(a, &b.conj()));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use crate::scalar::{rat, Scalar};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn basis_const(dim: usize, k: usize) -> HyperNumber {
        HyperNumber::basis(dim, 0, k)
    }

    #[test]
    fn quaternion_table() {
        let i = basis_const(4, 1);
        let j = basis_const(4, 2);
        let k = basis_const(4, 3);
        assert_eq!(hyper_mul(&i, &j), k);
        assert_eq!(hyper_mul(&j, &i), k.neg());
        assert_eq!(hyper_mul(&i, &i), basis_const(4, 0).neg());
    }

    #[test]
    fn octonion_table_e1_e2() {
        let e1 = basis_const(8, 1);
        let e2 = basis_const(8, 2);
        let e3 = basis_const(8, 3);
        assert_eq!(hyper_mul(&e1, &e2), e3);
        // norm rule on the table: e_a e_b has unit norm and e_a^2 = -1
        for a in 1..8 {
            let ea = basis_const(8, a);
            assert_eq!(hyper_mul(&ea, &ea), basis_const(8, 0).neg());
        }
    }

    #[test]
    fn conj_gives_norm() {
        for dim in [2usize, 4, 8] {
            let a = HyperNumber::from_vars(dim, dim, 0);
            let prod = hyper_mul(&a, &a.conj());
            assert_eq!(prod.components[0], a.norm_sq());
            for c in &prod.components[1..] {
                assert!(c.is_zero());
            }
        }
    }

    #[test]
    fn norm_multiplicative_symbolic() {
        for dim in [2usize, 4, 8] {
            let a = HyperNumber::from_vars(dim, 2 * dim, 0);
            let b = HyperNumber::from_vars(dim, 2 * dim, dim);
            let lhs = hyper_mul(&a, &b).norm_sq();
            let rhs = a.norm_sq().mul(&b.norm_sq());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn octonion_alternative() {
        let mut rng = StdRng::seed_from_u64(53);
        for _ in 0..200 {
            let mk = |rng: &mut StdRng| {
                HyperNumber::from_scalars(
                    8,
                    0,
                    &(0..8)
                        .map(|_| Scalar::from_rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
                        .collect::<Vec<_>>(),
                )
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            // a(ab) = (aa)b
            let lhs = hyper_mul(&a, &hyper_mul(&a, &b));
            let rhs = hyper_mul(&hyper_mul(&a, &a), &b);
            assert_eq!(lhs, rhs);
            // real part of a triple product associates
            let c = mk(&mut rng);
            let left = hyper_mul(&hyper_mul(&a, &b), &c);
            let right = hyper_mul(&a, &hyper_mul(&b, &c));
            assert_eq!(left.re(), right.re());
        }
    }

    #[test]
    fn hopf_map_identities() {
        let n = 8;
        let u = HyperNumber::from_vars(4, n, 0);
        let v = HyperNumber::from_vars(4, n, 4);
        let pi = hopf_map(&u, &v);
        assert_eq!(pi.len(), 5);
        // |pi|^2 = (|u|^2 + |v|^2)^2
        let mut lhs = Polynomial::zero(n);
        for p in &pi {
            lhs = lhs.add(&p.square());
        }
        let rhs = u.norm_sq().add(&v.norm_sq()).square();
        assert_eq!(lhs, rhs);
        // u = 0 sends to (|v|^2, 0, 0, 0, 0)
        let zero = HyperNumber::zero(4, n);
        let pi0 = hopf_map(&zero, &v);
        assert_eq!(pi0[0], v.norm_sq());
        assert!(pi0[1..].iter().all(|p| p.is_zero()));
        let pi1 = hopf_map(&u, &zero);
        assert_eq!(pi1[0], u.norm_sq().neg());
        assert!(pi1[1..].iter().all(|p| p.is_zero()));
    }

    #[test]
    fn hopf_sphere_to_sphere() {
        let mut rng = StdRng::seed_from_u64(59);
        let u = HyperNumber::from_vars(4, 8, 0);
        let v = HyperNumber::from_vars(4, 8, 4);
        let pi = hopf_map(&u, &v);
        for _ in 0..50 {
            // rational point on S^7
            let w: Vec<crate::scalar::Rational> = (0..7)
                .map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
                .collect();
            let norm: crate::scalar::Rational =
                w.iter().map(|x| x * x).fold(rat(0, 1), |a, b| a + b);
            let den = rat(1, 1) + &norm;
            let mut pt = vec![Scalar::Rat((rat(1, 1) - &norm) / &den)];
            pt.extend(w.iter().map(|x| Scalar::Rat(rat(2, 1) * x / &den)));
            let img: Vec<Scalar> = pi.iter().map(|p| p.evaluate(&pt).unwrap()).collect();
            let mut s = Scalar::zero();
            for c in &img {
                s = s.add(&c.mul(c));
            }
            assert!(s.is_one());
        }
    }

    #[test]
    fn hermitian_inner_examples() {
        let one = basis_const(4, 0);
        let i = basis_const(4, 1);
        let zero = HyperNumber::zero(4, 0);
        // <(1,0),(1,0)> = 1
        let r = quat_hermitian_inner(&[one.clone(), zero.clone()], &[one.clone(), zero.clone()])
            .unwrap();
        assert_eq!(r, basis_const(4, 0));
        // <(1,0),(i,0)> = -i, so its squared norm is 1
        let r = quat_hermitian_inner(&[one.clone(), zero.clone()], &[i.clone(), zero.clone()])
            .unwrap();
        assert_eq!(r, i.neg());
        assert_eq!(r.norm_sq(), Polynomial::one(0));
    }

    // |<X,Y>_H|^2 expands into the four bilinear squares <E_a u, v>^2 where
    // E_a is left multiplication by 1, i, j, k on the realified coordinates.
    #[test]
    fn hermitian_norm_expansion() {
        let k = 2;
        let n = 8 * k;
        let xs: Vec<HyperNumber> = (0..k).map(|t| HyperNumber::from_vars(4, n, 4 * t)).collect();
        let ys: Vec<HyperNumber> = (0..k)
            .map(|t| HyperNumber::from_vars(4, n, 4 * k + 4 * t))
            .collect();
        let inner = quat_hermitian_inner(&xs, &ys).unwrap();
        let lhs = inner.norm_sq();
        let mut rhs = Polynomial::zero(n);
        for alpha in 0..4 {
            let e = basis_const(4, alpha);
            let e = HyperNumber::from_scalars(
                4,
                n,
                &e.components
                    .iter()
                    .map(|p| {
                        if p.is_zero() {
                            Scalar::zero()
                        } else {
                            Scalar::one()
                        }
                    })
                    .collect::<Vec<_>>(),
            );
            // <E_alpha u, v> = sum_i <e_alpha X_i, Y_i> over real coordinates
            let mut form = Polynomial::zero(n);
            for (x, y) in xs.iter().zip(ys.iter()) {
                let ex = hyper_mul(&e, x);
                for (c, d) in ex.components.iter().zip(y.components.iter()) {
                    form = form.add(&c.mul(d));
                }
            }
            rhs = rhs.add(&form.square());
        }
        assert_eq!(lhs, rhs);
    }
}
