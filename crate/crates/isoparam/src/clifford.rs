//! Symmetric Clifford systems (P_0, ..., P_m) on R^{2l} and the skew
//! generator sets (E_1, ..., E_{m-1}) on R^l behind them.
//!
//! Irreducible generator sets come from left multiplication by imaginary
//! units of C, H, O on R^2, R^4, R^8, and from a doubling of the octonion
//! set on R^16; higher multiplicity takes block-diagonal copies. All
//! entries stay in {-1, 0, 1}. For the classes admitting both definite and
//! indefinite systems, the irreducible volume element is normalized to +I
//! and the indefinite pattern flips the sign of the last generator on
//! trailing blocks.

use crate::hyper::{hyper_mul, HyperNumber};
use crate::linalg::ExactMatrix;
use crate::poly::{Monomial, Polynomial};
use crate::scalar::{rat_int, Rational, Scalar};
use num::{One, Signed, Zero};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CliffordError {
    #[error("m must be at least 1")]
    ZeroM,
    #[error("generator construction supports m up to 9")]
    UnsupportedM,
    #[error("class specification is only meaningful for m = 0 mod 4")]
    ClassNotApplicable,
    #[error("a definite/indefinite class must be chosen when m = 0 mod 4")]
    ClassRequired,
    #[error("indefinite block split r0 = {0} out of range for multiplicity {1}")]
    BadSplit(usize, usize),
    #[error("no hypersurface: l - m - 1 < 1 for l = {0}, m = {1}")]
    NoHypersurface(usize, usize),
    #[error("invariant defined only for m = 0 mod 4")]
    InvariantUndefined,
}

/// Geometric class of a system when m = 0 mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassSpec {
    /// The unique class when m is not divisible by 4.
    Single,
    Definite,
    /// Indefinite with the volume element +I on blocks r <= r0 and -I after.
    Indefinite(usize),
}

impl std::fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassSpec::Single => write!(f, "single"),
            ClassSpec::Definite => write!(f, "definite"),
            ClassSpec::Indefinite(r0) => write!(f, "indefinite(r0={})", r0),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CliffordAlgebraRep {
    pub generator_count: usize,
    pub l: usize,
    pub generators: Vec<ExactMatrix>,
    pub class: ClassSpec,
}

#[derive(Clone, Debug)]
pub struct CliffordSystem {
    pub m: usize,
    pub l: usize,
    pub matrices: Vec<ExactMatrix>,
    pub class: ClassSpec,
}

impl CliffordSystem {
    pub fn ambient_dim(&self) -> usize {
        2 * self.l
    }

    /// Multiplicity pair (m, l - m - 1).
    pub fn multiplicities(&self) -> (usize, usize) {
        (self.m, self.l - self.m - 1)
    }
}

/// Dimension of the irreducible representation: 1, 2, 4, 4, 8, 8, 8, 8 for
/// m = 1..8, extended by delta(m + 8) = 16 delta(m).
pub fn delta(m: usize) -> Result<usize, CliffordError> {
    if m == 0 {
        return Err(CliffordError::ZeroM);
    }
    const TABLE: [usize; 8] = [1, 2, 4, 4, 8, 8, 8, 8];
    let mut factor = 1usize;
    let mut mm = m;
    while mm > 8 {
        factor *= 16;
        mm -= 8;
    }
    Ok(factor * TABLE[mm - 1])
}

/// Left-multiplication matrices by the imaginary basis units of the
/// dimension-`dim` algebra (dim in {2, 4, 8}).
fn left_mult_generators(dim: usize) -> Vec<ExactMatrix> {
    (1..dim)
        .map(|a| {
            let ea = HyperNumber::basis(dim, 0, a);
            let mut mat = ExactMatrix::zero(dim, dim);
            for b in 0..dim {
                let col = hyper_mul(&ea, &HyperNumber::basis(dim, 0, b));
                for (r, comp) in col.components.iter().enumerate() {
                    if let Some(c) = comp.terms.first() {
                        mat.set(r, b, c.1.as_rational().unwrap().clone());
                    }
                }
            }
            mat
        })
        .collect()
}

fn block_embed(dest: &mut ExactMatrix, src: &ExactMatrix, row: usize, col: usize, negate: bool) {
    for i in 0..src.rows {
        for j in 0..src.cols {
            let v = src.get(i, j);
            if !v.is_zero() {
                dest.set(row + i, col + j, if negate { -v } else { v.clone() });
            }
        }
    }
}

fn product_of(mats: &[ExactMatrix]) -> ExactMatrix {
    let n = mats[0].rows;
    let mut acc = ExactMatrix::identity(n);
    for m in mats {
        acc = acc.matmul(m);
    }
    acc
}

fn is_identity_times(m: &ExactMatrix, sign: i64) -> bool {
    let n = m.rows;
    let s = rat_int(sign);
    (0..n).all(|i| (0..n).all(|j| *m.get(i, j) == if i == j { s.clone() } else { Rational::zero() }))
}

/// Irreducible generator prefix on R^{delta(m)}, volume-normalized to +I
/// when m = 0 mod 4.
fn irreducible_generators(m: usize) -> Result<Vec<ExactMatrix>, CliffordError> {
    let d = delta(m)?;
    let mut gens: Vec<ExactMatrix> = match d {
        1 => Vec::new(),
        2 | 4 | 8 => left_mult_generators(d).into_iter().take(m - 1).collect(),
        16 => doubled_octonion_generators()
            .into_iter()
            .take(m - 1)
            .collect(),
        _ => return Err(CliffordError::UnsupportedM),
    };
    if m % 4 == 0 && !gens.is_empty() {
        let vol = product_of(&gens);
        if is_identity_times(&vol, -1) {
            gens[0] = gens[0].scale(&rat_int(-1));
        } else {
            debug_assert!(is_identity_times(&vol, 1), "volume must be +-I");
        }
    }
    Ok(gens)
}

/// Eight anticommuting skew generators on R^16 built over the octonion set.
fn doubled_octonion_generators() -> Vec<ExactMatrix> {
    let base = left_mult_generators(8);
    let mut out = Vec::with_capacity(8);
    for e in &base {
        let mut a = ExactMatrix::zero(16, 16);
        block_embed(&mut a, e, 0, 8, false);
        block_embed(&mut a, e, 8, 0, false);
        out.push(a);
    }
    let mut last = ExactMatrix::zero(16, 16);
    block_embed(&mut last, &ExactMatrix::identity(8), 0, 8, false);
    block_embed(&mut last, &ExactMatrix::identity(8), 8, 0, true);
    out.push(last);
    out
}

fn validate_class(m: usize, k: usize, class: ClassSpec) -> Result<(), CliffordError> {
    if m % 4 == 0 {
        match class {
            ClassSpec::Single => Err(CliffordError::ClassRequired),
            ClassSpec::Definite => Ok(()),
            ClassSpec::Indefinite(r0) => {
                if (k + 1) / 2 <= r0 && r0 < k {
                    Ok(())
                } else {
                    Err(CliffordError::BadSplit(r0, k))
                }
            }
        }
    } else {
        match class {
            ClassSpec::Single => Ok(()),
            _ => Err(CliffordError::ClassNotApplicable),
        }
    }
}

/// (E_1, ..., E_{m-1}) on R^{k delta(m)}.
pub fn build_algebra(
    m_minus_1: usize,
    k: usize,
    class: ClassSpec,
) -> Result<CliffordAlgebraRep, CliffordError> {
    let m = m_minus_1 + 1;
    assert!(k >= 1, "multiplicity must be positive");
    validate_class(m, k, class)?;
    let irr = irreducible_generators(m)?;
    let d = delta(m)?;
    let l = k * d;
    let flip_from = match class {
        ClassSpec::Indefinite(r0) => r0,
        _ => usize::MAX,
    };
    let generators: Vec<ExactMatrix> = (0..m_minus_1)
        .map(|gi| {
            let mut big = ExactMatrix::zero(l, l);
            for r in 0..k {
                let negate = gi == m_minus_1 - 1 && r >= flip_from;
                block_embed(&mut big, &irr[gi], r * d, r * d, negate);
            }
            big
        })
        .collect();
    Ok(CliffordAlgebraRep {
        generator_count: m_minus_1,
        l,
        generators,
        class,
    })
}

fn system_from_generators(
    m: usize,
    l: usize,
    gens: &[ExactMatrix],
    class: ClassSpec,
) -> CliffordSystem {
    let n = 2 * l;
    let id = ExactMatrix::identity(l);
    let mut p0 = ExactMatrix::zero(n, n);
    block_embed(&mut p0, &id, 0, 0, false);
    block_embed(&mut p0, &id, l, l, true);
    let mut p1 = ExactMatrix::zero(n, n);
    block_embed(&mut p1, &id, 0, l, false);
    block_embed(&mut p1, &id, l, 0, false);
    let mut matrices = vec![p0, p1];
    for e in gens {
        let mut p = ExactMatrix::zero(n, n);
        block_embed(&mut p, e, 0, l, false);
        block_embed(&mut p, e, l, 0, true);
        matrices.push(p);
    }
    CliffordSystem { m, l, matrices, class }
}

/// Symmetric Clifford system (P_0, ..., P_m) on R^{2 k delta(m)}.
pub fn build_system(m: usize, k: usize, class: ClassSpec) -> Result<CliffordSystem, CliffordError> {
    if m == 0 {
        return Err(CliffordError::ZeroM);
    }
    let alg = build_algebra(m - 1, k, class)?;
    if alg.l < m + 2 {
        return Err(CliffordError::NoHypersurface(alg.l, m));
    }
    Ok(system_from_generators(m, alg.l, &alg.generators, class))
}

/// The nine-element system (P_0, ..., P_8) on R^16 over the full octonion
/// generator set; its quadratic forms satisfy
/// sum_a <P_a x, x>^2 = |x|^4 identically.
pub fn nine_element_system() -> CliffordSystem {
    let gens = left_mult_generators(8);
    system_from_generators(8, 8, &gens, ClassSpec::Definite)
}

/// Prefix (P_0, ..., P_m) of the nine-element system.
pub fn nine_element_prefix(m: usize) -> CliffordSystem {
    assert!((1..=8).contains(&m));
    let full = nine_element_system();
    let class = match m {
        4 => ClassSpec::Indefinite(1),
        8 => ClassSpec::Definite,
        _ => ClassSpec::Single,
    };
    CliffordSystem {
        m,
        l: 8,
        matrices: full.matrices.into_iter().take(m + 1).collect(),
        class,
    }
}

/// |trace(P_0 ... P_m)|, the congruence-class invariant for m = 0 mod 4.
pub fn classify_invariant(sys: &CliffordSystem) -> Result<Rational, CliffordError> {
    if sys.m % 4 != 0 {
        return Err(CliffordError::InvariantUndefined);
    }
    let tr = product_of(&sys.matrices).trace();
    Ok(tr.abs())
}

/// Quadratic form <P x, x> as a polynomial in the matrix dimension.
pub fn quadratic_form(p: &ExactMatrix) -> Polynomial {
    let n = p.rows;
    let mut terms = Vec::new();
    for i in 0..n {
        for j in i..n {
            let c = if i == j {
                p.get(i, i).clone()
            } else {
                p.get(i, j) + p.get(j, i)
            };
            if !c.is_zero() {
                let mut m = Monomial::unit(n);
                m.0[i] += 1;
                m.0[j] += 1;
                terms.push((m, Scalar::Rat(c)));
            }
        }
    }
    Polynomial::from_terms(n, terms)
}

/// All quadratic forms <P_a x, x> of a system.
pub fn system_quadratic_forms(sys: &CliffordSystem) -> Vec<Polynomial> {
    sys.matrices.iter().map(quadratic_form).collect()
}
