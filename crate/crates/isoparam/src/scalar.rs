//! Exact scalars: arbitrary-precision rationals and elements of a real
//! quadratic extension field Q(sqrt d).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::fmt;

pub type Rational = BigRational;

/// Builds an exact rational from a pair of machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rational {
    Rational::from(BigInt::from(num))
}

/// Element a + b*sqrt(d) of a real quadratic field.
///
/// `d` must be a squarefree positive integer; only d = 2 and d = 3 are used
/// by the built-in generators, but the arithmetic is generic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QExt {
    pub a: Rational,
    pub b: Rational,
    pub d: u32,
}

impl QExt {
    pub fn new(a: Rational, b: Rational, d: u32) -> Self {
        debug_assert!(squarefree(d), "d must be squarefree and positive");
        QExt { a, b, d }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * (self.d as f64).sqrt()
    }
}

fn squarefree(d: u32) -> bool {
    if d == 0 {
        return false;
    }
    let mut k = 2u32;
    while k * k <= d {
        if d % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// A coefficient or point coordinate: rational, or in Q(sqrt d).
///
/// Canonical form: an extension element whose sqrt-part is zero is stored
/// as `Rat`, so zero- and equality-tests never need field promotion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Ext(QExt),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(rat_int(n))
    }

    pub fn from_rat(num: i64, den: i64) -> Self {
        Scalar::Rat(rat(num, den))
    }

    /// a + b*sqrt(d), normalized to `Rat` when b = 0.
    pub fn ext(a: Rational, b: Rational, d: u32) -> Self {
        if b.is_zero() {
            Scalar::Rat(a)
        } else {
            Scalar::Ext(QExt::new(a, b, d))
        }
    }

    /// Rational multiple of sqrt(d).
    pub fn sqrt_mult(b: Rational, d: u32) -> Self {
        Scalar::ext(Rational::zero(), b, d)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Ext(e) => e.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    /// Discriminant of the extension the value lives in, if any.
    pub fn ext_d(&self) -> Option<u32> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Ext(e) => Some(e.d),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Ext(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rat(r) => rational_to_f64(r),
            Scalar::Ext(e) => e.to_f64(),
        }
    }

    fn parts(&self, d: u32) -> (Rational, Rational) {
        match self {
            Scalar::Rat(r) => (r.clone(), Rational::zero()),
            Scalar::Ext(e) => {
                assert_eq!(e.d, d, "mixed extension discriminants");
                (e.a.clone(), e.b.clone())
            }
        }
    }

    fn common_d(&self, other: &Scalar) -> Option<u32> {
        match (self.ext_d(), other.ext_d()) {
            (None, None) => None,
            (Some(d), None) | (None, Some(d)) => Some(d),
            (Some(d1), Some(d2)) => {
                assert_eq!(d1, d2, "mixed extension discriminants");
                Some(d1)
            }
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match self.common_d(other) {
            None => Scalar::Rat(self.as_rational().unwrap() + other.as_rational().unwrap()),
            Some(d) => {
                let (a1, b1) = self.parts(d);
                let (a2, b2) = other.parts(d);
                Scalar::ext(a1 + a2, b1 + b2, d)
            }
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match self.common_d(other) {
            None => Scalar::Rat(self.as_rational().unwrap() * other.as_rational().unwrap()),
            Some(d) => {
                let (a1, b1) = self.parts(d);
                let (a2, b2) = other.parts(d);
                let dd = rat_int(d as i64);
                Scalar::ext(&a1 * &a2 + &dd * &b1 * &b2, &a1 * &b2 + &b1 * &a2, d)
            }
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Ext(e) => Scalar::Ext(QExt::new(-&e.a, -&e.b, e.d)),
        }
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r * c),
            Scalar::Ext(e) => Scalar::ext(&e.a * c, &e.b * c, e.d),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => {
                assert!(!r.is_zero(), "division by zero");
                Scalar::Rat(r.recip())
            }
            Scalar::Ext(e) => {
                // 1/(a+b sqrt d) = (a - b sqrt d)/(a^2 - d b^2)
                let dd = rat_int(e.d as i64);
                let norm = &e.a * &e.a - &dd * &e.b * &e.b;
                assert!(!norm.is_zero(), "division by zero");
                Scalar::ext(&e.a / &norm, -(&e.b / &norm), e.d)
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Ext(_) => self.to_f64() < 0.0,
        }
    }
}

/// Splits `value = 0` over Q(sqrt d) into two rational conditions.
///
/// Returns (a, b) with value = a + b*sqrt(d); the value vanishes iff both
/// components do, since sqrt(d) is irrational.
pub fn split_extension_constraint(value: &Scalar) -> (Rational, Rational) {
    match value {
        Scalar::Rat(r) => (r.clone(), Rational::zero()),
        Scalar::Ext(e) => (e.a.clone(), e.b.clone()),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", r),
            Scalar::Ext(e) => write!(f, "({}+{}*sqrt{})", e.a, e.b, e.d),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rand_scalar(rng: &mut StdRng, d: u32) -> Scalar {
        let a = rat(rng.gen_range(-20..=20), rng.gen_range(1..=9));
        let b = rat(rng.gen_range(-20..=20), rng.gen_range(1..=9));
        Scalar::ext(a, b, d)
    }

    #[test]
    fn split_examples() {
        let half = Scalar::ext(rat(1, 2), rat_int(0), 2);
        assert_eq!(split_extension_constraint(&half), (rat(1, 2), rat_int(0)));
        let s3 = Scalar::ext(rat_int(0), rat_int(3), 3);
        assert_eq!(split_extension_constraint(&s3), (rat_int(0), rat_int(3)));
        assert_eq!(
            split_extension_constraint(&Scalar::zero()),
            (rat_int(0), rat_int(0))
        );
    }

    #[test]
    fn ext_zero_normalizes_to_rational() {
        let s = Scalar::ext(rat(3, 4), rat_int(0), 2);
        assert!(matches!(s, Scalar::Rat(_)));
        let z = Scalar::ext(rat_int(0), rat_int(0), 3);
        assert!(z.is_zero());
    }

    #[test]
    fn ext_inverse() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..100 {
            let s = rand_scalar(&mut rng, 2);
            if s.is_zero() {
                continue;
            }
            assert!(s.mul(&s.inv()).is_one());
        }
    }

    // Mapping sqrt(d) to a float approximation must be a ring homomorphism
    // up to rounding: results agree within 1e-9 on bounded random inputs.
    #[test]
    fn float_homomorphism() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let d = if rng.gen_bool(0.5) { 2 } else { 3 };
            let x = rand_scalar(&mut rng, d);
            let y = rand_scalar(&mut rng, d);
            let sum = x.add(&y);
            let prod = x.mul(&y);
            assert!((sum.to_f64() - (x.to_f64() + y.to_f64())).abs() < 1e-9);
            assert!((prod.to_f64() - (x.to_f64() * y.to_f64())).abs() < 1e-9);
        }
    }

    #[test]
    #[should_panic(expected = "mixed extension discriminants")]
    fn mixed_discriminants_rejected() {
        let x = Scalar::sqrt_mult(rat_int(1), 2);
        let y = Scalar::sqrt_mult(rat_int(1), 3);
        let _ = x.add(&y);
    }
}
