//! Generators for the isoparametric polynomial families, verification of
//! their defining differential identities, and the psd forms they induce.
//!
//! Families: coordinate (degree 1), Clifford torus (degree 2), the four
//! Cartan cubics over R, C, H, O, the degree-4 family built from symmetric
//! Clifford systems, the two exceptional degree-4 polynomials on R^10 and
//! R^20, and the two degree-6 polynomials on R^8 and R^14. The degree-6
//! generators on R^8 come in two forms: a composition with the Hopf map
//! and a matrix-trace formula; both are verified independently.

use crate::clifford::{self, ClassSpec, CliffordSystem};
use crate::hyper::{hopf_map, hyper_mul, re_triple, HyperNumber};
use crate::poly::{reduce_mod_spheres, Polynomial};
use crate::scalar::{rat, rat_int, Rational, Scalar};
use num::Zero;

#[derive(Debug, thiserror::Error)]
pub enum IsoError {
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error(transparent)]
    Clifford(#[from] clifford::CliffordError),
    #[error("G+ / G- are defined for even degree only (g = {0})")]
    OddDegreeG(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// F = x_1 on R^n.
    Coordinate { n: usize },
    /// F = sum_{i<=k} x_i^2 - sum_{i>k} x_i^2 on R^n.
    CliffordTorus { k: usize, n: usize },
    /// Cartan cubic over the division algebra of dimension m in {1,2,4,8}.
    CartanCubic { m: usize },
    /// Degree-4 polynomial of a symmetric Clifford system.
    Otfkm { m: usize, k: usize, class: ClassSpec },
    /// Degree-4 exceptional polynomial with multiplicities (2,2) on R^10.
    Exceptional22,
    /// Degree-4 exceptional polynomial with multiplicities (5,4) on R^20.
    Exceptional54,
    /// Degree-6, multiplicities (1,1) on R^8: cubic composed with Hopf map.
    G6Hopf,
    /// Degree-6, multiplicities (1,1) on R^8: matrix trace form.
    G6Trace1,
    /// Degree-6, multiplicities (2,2) on R^14: matrix trace form.
    G6Trace2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoparametricSpec {
    pub family: Family,
    /// Replace F by -F, swapping the multiplicity pair.
    pub negate: bool,
}

impl IsoparametricSpec {
    pub fn new(family: Family) -> Self {
        IsoparametricSpec { family, negate: false }
    }

    pub fn g(&self) -> usize {
        match self.family {
            Family::Coordinate { .. } => 1,
            Family::CliffordTorus { .. } => 2,
            Family::CartanCubic { .. } => 3,
            Family::Otfkm { .. } | Family::Exceptional22 | Family::Exceptional54 => 4,
            Family::G6Hopf | Family::G6Trace1 | Family::G6Trace2 => 6,
        }
    }

    pub fn nvars(&self) -> usize {
        match &self.family {
            Family::Coordinate { n } => *n,
            Family::CliffordTorus { n, .. } => *n,
            Family::CartanCubic { m } => 3 * m + 2,
            Family::Otfkm { m, k, .. } => 2 * k * clifford::delta(*m).unwrap_or(0),
            Family::Exceptional22 => 10,
            Family::Exceptional54 => 20,
            Family::G6Hopf | Family::G6Trace1 => 8,
            Family::G6Trace2 => 14,
        }
    }

    pub fn multiplicities(&self) -> (usize, usize) {
        let (mp, mm) = match &self.family {
            Family::Coordinate { n } => (n - 2, n - 2),
            Family::CliffordTorus { k, n } => (n - k - 1, k - 1),
            Family::CartanCubic { m } => (*m, *m),
            Family::Otfkm { m, k, .. } => {
                let l = k * clifford::delta(*m).unwrap_or(0);
                (*m, l - m - 1)
            }
            Family::Exceptional22 => (2, 2),
            Family::Exceptional54 => (5, 4),
            Family::G6Hopf | Family::G6Trace1 => (1, 1),
            Family::G6Trace2 => (2, 2),
        };
        if self.negate {
            (mm, mp)
        } else {
            (mp, mm)
        }
    }

    pub fn validate(&self) -> Result<(), IsoError> {
        match &self.family {
            Family::Coordinate { n } => {
                if *n < 2 {
                    return Err(IsoError::InvalidFamily("coordinate needs n >= 2".into()));
                }
            }
            Family::CliffordTorus { k, n } => {
                if *k < 1 || *k >= *n {
                    return Err(IsoError::InvalidFamily(format!(
                        "torus needs 1 <= k < n, got k={k}, n={n}"
                    )));
                }
            }
            Family::CartanCubic { m } => {
                if ![1, 2, 4, 8].contains(m) {
                    return Err(IsoError::InvalidFamily(format!(
                        "cartan cubic needs m in {{1,2,4,8}}, got {m}"
                    )));
                }
            }
            Family::Otfkm { m, k, class } => {
                otfkm_system(*m, *k, *class)?;
            }
            _ => {}
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (name, params) = match &self.family {
            Family::Coordinate { n } => ("coordinate", serde_json::json!({ "n": n })),
            Family::CliffordTorus { k, n } => ("torus", serde_json::json!({ "k": k, "n": n })),
            Family::CartanCubic { m } => ("cartan", serde_json::json!({ "m": m })),
            Family::Otfkm { m, k, class } => (
                "otfkm",
                serde_json::json!({ "m": m, "k": k, "class": class.to_string() }),
            ),
            Family::Exceptional22 => ("exceptional22", serde_json::json!({})),
            Family::Exceptional54 => ("exceptional54", serde_json::json!({})),
            Family::G6Hopf => ("g6m1", serde_json::json!({})),
            Family::G6Trace1 => ("g6m1-trace", serde_json::json!({})),
            Family::G6Trace2 => ("g6m2", serde_json::json!({})),
        };
        serde_json::json!({
            "g": self.g(),
            "family": name,
            "params": params,
            "negate": self.negate,
            "nvars": self.nvars(),
            "multiplicities": [self.multiplicities().0, self.multiplicities().1],
        })
    }
}

/// Clifford system used by the degree-4 generator.
///
/// Two parameter sets on R^16 are served by prefixes of the nine-element
/// system rather than the block-diagonal construction, so that the
/// polynomial agrees term-for-term with its known sos expression through
/// the remaining quadratic forms of that system.
pub fn otfkm_system(m: usize, k: usize, class: ClassSpec) -> Result<CliffordSystem, IsoError> {
    match (m, k, class) {
        (3, 2, ClassSpec::Single) => Ok(clifford::nine_element_prefix(3)),
        (4, 2, ClassSpec::Indefinite(1)) => Ok(clifford::nine_element_prefix(4)),
        _ => Ok(clifford::build_system(m, k, class)?),
    }
}

pub fn otfkm_polynomial(sys: &CliffordSystem) -> Polynomial {
    let n = sys.ambient_dim();
    let r4 = Polynomial::radius_sq(n).square();
    let mut acc = Polynomial::zero(n);
    for form in clifford::system_quadratic_forms(sys) {
        acc = acc.add(&form.square());
    }
    r4.sub(&acc.scale(&rat_int(2)))
}

fn sqrt3(c: Rational) -> Scalar {
    Scalar::sqrt_mult(c, 3)
}

/// Cartan cubic on R^{3m+2}; coordinates (x0, x1, X2, X3, X4) with the
/// algebra components of X2, X3, X4 laid out consecutively.
pub fn cartan_cubic(m: usize) -> Polynomial {
    let n = 3 * m + 2;
    let x0 = Polynomial::var(n, 0);
    let x1 = Polynomial::var(n, 1);
    let x2 = HyperNumber::from_vars(m, n, 2);
    let x3 = HyperNumber::from_vars(m, n, 2 + m);
    let x4 = HyperNumber::from_vars(m, n, 2 + 2 * m);
    let n2 = x2.norm_sq();
    let n3 = x3.norm_sq();
    let n4 = x4.norm_sq();
    // x0^3 + (3/2) x0 (|X2|^2 + |X3|^2 - 2|X4|^2 - 2 x1^2)
    let mut f = x0.pow(3);
    let bracket = n2
        .add(&n3)
        .sub(&n4.scale(&rat_int(2)))
        .sub(&x1.square().scale(&rat_int(2)));
    f = f.add(&x0.mul(&bracket).scale(&rat(3, 2)));
    // (3 sqrt3 / 2) x1 (|X2|^2 - |X3|^2)
    f = f.add(&x1.mul(&n2.sub(&n3)).scale_scalar(&sqrt3(rat(3, 2))));
    // 3 sqrt3 Re(X2 X3 X4)
    f = f.add(&re_triple(&x2, &x3, &x4).scale_scalar(&sqrt3(rat_int(3))));
    f
}

/// 3x3 symmetric-matrix determinant form of the cubic on R^5, times
/// 3 sqrt3 / 2; used as an independent check of the cubic's coefficients.
pub fn cartan_cubic_det_form() -> Polynomial {
    let n = 5;
    let y0 = Polynomial::var(n, 0);
    let y1 = Polynomial::var(n, 1);
    let y2 = Polynomial::var(n, 2);
    let y3 = Polynomial::var(n, 3);
    let y4 = Polynomial::var(n, 4);
    let third = sqrt3(rat(1, 3)); // 1/sqrt3 = sqrt3/3
    let a11 = y1.sub(&y0.scale_scalar(&third));
    let a22 = y0.scale_scalar(&sqrt3(rat(2, 3)));
    let a33 = y0.scale_scalar(&third).neg().sub(&y1);
    let det = a11
        .mul(&a22.mul(&a33).sub(&y3.square()))
        .sub(&y2.mul(&y2.mul(&a33).sub(&y3.mul(&y4))))
        .add(&y4.mul(&y2.mul(&y3).sub(&a22.mul(&y4))));
    det.scale_scalar(&sqrt3(rat(3, 2)))
}

fn complex_quadrics_22(n: usize, base_re: usize, base_im: Option<usize>) -> Vec<(Polynomial, Polynomial)> {
    // index triples (a, b, sign) per component of the halved wedge square map
    const PATTERN: [[(usize, usize, i64); 3]; 5] = [
        [(4, 9, 1), (5, 8, -1), (6, 7, 1)],
        [(1, 9, -1), (2, 8, 1), (3, 7, -1)],
        [(0, 9, 1), (2, 6, -1), (3, 5, 1)],
        [(0, 8, -1), (1, 6, 1), (3, 4, -1)],
        [(0, 7, 1), (1, 5, -1), (2, 4, 1)],
    ];
    PATTERN
        .iter()
        .map(|row| {
            let mut re = Polynomial::zero(n);
            let mut im = Polynomial::zero(n);
            for &(a, b, s) in row {
                let (xa, xb) = (Polynomial::var(n, base_re + a), Polynomial::var(n, base_re + b));
                match base_im {
                    None => {
                        re = re.add(&xa.mul(&xb).scale(&rat_int(s)));
                    }
                    Some(bi) => {
                        let (ya, yb) = (Polynomial::var(n, bi + a), Polynomial::var(n, bi + b));
                        // z_a z_b = (x_a x_b - y_a y_b) + i (x_a y_b + x_b y_a)
                        re = re.add(&xa.mul(&xb).sub(&ya.mul(&yb)).scale(&rat_int(s)));
                        im = im.add(&xa.mul(&yb).add(&xb.mul(&ya)).scale(&rat_int(s)));
                    }
                }
            }
            (re, im)
        })
        .collect()
}

/// Exceptional degree-4 polynomial with multiplicities (2,2) on R^10.
pub fn exceptional_22() -> Polynomial {
    let n = 10;
    let mut sq = Polynomial::zero(n);
    for (re, _) in complex_quadrics_22(n, 0, None) {
        sq = sq.add(&re.square());
    }
    Polynomial::radius_sq(n).square().sub(&sq.scale(&rat_int(8)))
}

/// Exceptional degree-4 polynomial with multiplicities (5,4) on R^20; the
/// coordinates are the real parts x_1..x_10 followed by imaginary parts
/// y_1..y_10.
pub fn exceptional_54() -> Polynomial {
    let n = 20;
    let mut sq = Polynomial::zero(n);
    for (re, im) in complex_quadrics_22(n, 0, Some(10)) {
        sq = sq.add(&re.square()).add(&im.square());
    }
    Polynomial::radius_sq(n).square().sub(&sq.scale(&rat_int(8)))
}

/// Quadrics of the wedge-square map on R^10, scaled so that the (2,2)
/// polynomial is |x|^4 - 8 * sum of their squares.
pub fn wedge_quadrics_22() -> Vec<Polynomial> {
    complex_quadrics_22(10, 0, None).into_iter().map(|(re, _)| re).collect()
}

/// Real and imaginary parts of the complex quadrics on R^20.
pub fn wedge_quadrics_54() -> Vec<Polynomial> {
    complex_quadrics_22(20, 0, Some(10))
        .into_iter()
        .flat_map(|(re, im)| [re, im])
        .collect()
}

/// Degree-6 polynomial on R^8 as the Cartan cubic pulled back through the
/// Hopf map; coordinates (u, v) in H + H.
pub fn g6_hopf() -> Polynomial {
    let n = 8;
    let u = HyperNumber::from_vars(4, n, 0);
    let v = HyperNumber::from_vars(4, n, 4);
    let pi = hopf_map(&u, &v);
    cartan_cubic(1).compose(&pi)
}

// --- matrix trace generators for degree 6 ------------------------------------

/// Polynomial with components over 1, sqrt2, sqrt3, sqrt6; closed under
/// multiplication, used only while expanding the trace generators.
#[derive(Clone, Debug)]
struct SurdPoly {
    q: Polynomial,
    r2: Polynomial,
    r3: Polynomial,
    r6: Polynomial,
}

impl SurdPoly {
    fn zero(n: usize) -> Self {
        SurdPoly {
            q: Polynomial::zero(n),
            r2: Polynomial::zero(n),
            r3: Polynomial::zero(n),
            r6: Polynomial::zero(n),
        }
    }

    fn rational(p: Polynomial) -> Self {
        let n = p.nvars;
        SurdPoly { q: p, ..Self::zero(n) }
    }

    fn add(&self, o: &Self) -> Self {
        SurdPoly {
            q: self.q.add(&o.q),
            r2: self.r2.add(&o.r2),
            r3: self.r3.add(&o.r3),
            r6: self.r6.add(&o.r6),
        }
    }

    fn neg(&self) -> Self {
        SurdPoly {
            q: self.q.neg(),
            r2: self.r2.neg(),
            r3: self.r3.neg(),
            r6: self.r6.neg(),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2
        let two = rat_int(2);
        let three = rat_int(3);
        let six = rat_int(6);
        let q = self
            .q
            .mul(&o.q)
            .add(&self.r2.mul(&o.r2).scale(&two))
            .add(&self.r3.mul(&o.r3).scale(&three))
            .add(&self.r6.mul(&o.r6).scale(&six));
        let r2 = self
            .q
            .mul(&o.r2)
            .add(&self.r2.mul(&o.q))
            .add(&self.r3.mul(&o.r6).scale(&three))
            .add(&self.r6.mul(&o.r3).scale(&three));
        let r3 = self
            .q
            .mul(&o.r3)
            .add(&self.r3.mul(&o.q))
            .add(&self.r2.mul(&o.r6).scale(&two))
            .add(&self.r6.mul(&o.r2).scale(&two));
        let r6 = self
            .q
            .mul(&o.r6)
            .add(&self.r6.mul(&o.q))
            .add(&self.r2.mul(&o.r3))
            .add(&self.r3.mul(&o.r2));
        SurdPoly { q, r2, r3, r6 }
    }

    fn is_rational(&self) -> bool {
        self.r2.is_zero() && self.r3.is_zero() && self.r6.is_zero()
    }
}

/// Complex number with SurdPoly parts.
#[derive(Clone, Debug)]
struct CSurd {
    re: SurdPoly,
    im: SurdPoly,
}

impl CSurd {
    fn zero(n: usize) -> Self {
        CSurd { re: SurdPoly::zero(n), im: SurdPoly::zero(n) }
    }

    fn add(&self, o: &Self) -> Self {
        CSurd { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    fn mul(&self, o: &Self) -> Self {
        CSurd {
            re: self.re.mul(&o.re).add(&self.im.mul(&o.im).neg()),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }
}

type SurdMatrix = Vec<Vec<CSurd>>;

fn matmul_surd(a: &SurdMatrix, b: &SurdMatrix) -> SurdMatrix {
    let n = a.len();
    let nv = a[0][0].re.q.nvars;
    let mut out = vec![vec![CSurd::zero(nv); n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i][k];
            if aik.re.q.is_zero()
                && aik.re.r2.is_zero()
                && aik.re.r3.is_zero()
                && aik.re.r6.is_zero()
                && aik.im.q.is_zero()
                && aik.im.r2.is_zero()
                && aik.im.r3.is_zero()
                && aik.im.r6.is_zero()
            {
                continue;
            }
            for j in 0..n {
                let prod = aik.mul(&b[k][j]);
                out[i][j] = out[i][j].add(&prod);
            }
        }
    }
    out
}

fn trace_of_product(a: &SurdMatrix, b: &SurdMatrix) -> CSurd {
    let n = a.len();
    let nv = a[0][0].re.q.nvars;
    let mut acc = CSurd::zero(nv);
    for i in 0..n {
        for j in 0..n {
            acc = acc.add(&a[i][j].mul(&b[j][i]));
        }
    }
    acc
}

/// Symmetric 7x7 matrix of the real slice; variables y1..y6 at `ybase`,
/// trace-plane coordinates (a, b) at `tbase`.
fn symmetric_slice(n: usize, ybase: usize, tbase: usize) -> Vec<Vec<SurdPoly>> {
    let zero = || SurdPoly::zero(n);
    let mut x = vec![vec![zero(); 7]; 7];
    let y = |i: usize| Polynomial::var(n, ybase + i); // y1..y6 as 0..5
    let a = Polynomial::var(n, tbase);
    let b = Polynomial::var(n, tbase + 1);
    // top row block: (y1, y2, y3)/sqrt3 and its negative
    for i in 0..3 {
        let mut e = zero();
        e.r3 = y(i).scale(&rat(1, 3)); // 1/sqrt3 = sqrt3/3
        x[0][1 + i] = e.clone();
        x[1 + i][0] = e.clone();
        e.r3 = e.r3.neg();
        x[0][4 + i] = e.clone();
        x[4 + i][0] = e;
    }
    // traceless diagonal: t1, t2, t3 from the orthonormal plane coordinates
    // t1 = a/sqrt2 + b/sqrt6, t2 = -a/sqrt2 + b/sqrt6, t3 = -2b/sqrt6
    let mut t = vec![zero(), zero(), zero()];
    t[0].r2 = a.scale(&rat(1, 2));
    t[0].r6 = b.scale(&rat(1, 6));
    t[1].r2 = a.scale(&rat(-1, 2));
    t[1].r6 = b.scale(&rat(1, 6));
    t[2].r6 = b.scale(&rat(-1, 3));
    for i in 0..3 {
        x[1 + i][1 + i] = t[i].clone();
        x[4 + i][4 + i] = t[i].neg();
    }
    // symmetric off-diagonal of T: y4, y5, y6 over sqrt2
    let pairs = [(0usize, 1usize, 3usize), (0, 2, 4), (1, 2, 5)];
    for &(r, c, yi) in &pairs {
        let mut e = zero();
        e.r2 = y(yi).scale(&rat(1, 2));
        x[1 + r][1 + c] = e.clone();
        x[1 + c][1 + r] = e.clone();
        e.r2 = e.r2.neg();
        x[4 + r][4 + c] = e.clone();
        x[4 + c][4 + r] = e;
    }
    // skew block S = (0, -y3, y2; y3, 0, -y1; -y2, y1, 0)/sqrt6 at (T, -T) corner
    let s_entries = [(0usize, 1usize, 2usize, -1i64), (0, 2, 1, 1), (1, 2, 0, -1)];
    for &(r, c, yi, sg) in &s_entries {
        let mut e = zero();
        e.r6 = y(yi).scale(&rat(sg, 6));
        x[1 + r][4 + c] = e.clone();
        x[4 + c][1 + r] = e.clone();
        e.r6 = e.r6.neg();
        x[1 + c][4 + r] = e.clone();
        x[4 + r][1 + c] = e;
    }
    x
}

/// Real skew 7x7 matrix of the other slice; variables u1..u6 at `ubase`.
fn skew_slice(n: usize, ubase: usize) -> Vec<Vec<SurdPoly>> {
    let zero = || SurdPoly::zero(n);
    let mut k = vec![vec![zero(); 7]; 7];
    let u = |i: usize| Polynomial::var(n, ubase + i);
    // top row: (u1,u2,u3)/sqrt3 in both blocks, negated below
    for i in 0..3 {
        let mut e = zero();
        e.r3 = u(i).scale(&rat(1, 3));
        k[0][1 + i] = e.clone();
        k[0][4 + i] = e.clone();
        e.r3 = e.r3.neg();
        k[1 + i][0] = e.clone();
        k[4 + i][0] = e;
    }
    // U = (0, u4, u5; -u4, 0, u6; -u5, -u6, 0)/sqrt2 on both diagonal blocks
    let u_entries = [(0usize, 1usize, 3usize), (0, 2, 4), (1, 2, 5)];
    for &(r, c, ui) in &u_entries {
        for base in [1usize, 4] {
            let mut e = zero();
            e.r2 = u(ui).scale(&rat(1, 2));
            k[base + r][base + c] = e.clone();
            e.r2 = e.r2.neg();
            k[base + c][base + r] = e;
        }
    }
    // V = (0, -u3, u2; u3, 0, -u1; -u2, u1, 0)/sqrt6 on both corners
    let v_entries = [(0usize, 1usize, 2usize, -1i64), (0, 2, 1, 1), (1, 2, 0, -1)];
    for &(r, c, ui, sg) in &v_entries {
        let mut e = zero();
        e.r6 = u(ui).scale(&rat(sg, 6));
        k[1 + r][4 + c] = e.clone();
        k[4 + r][1 + c] = e.clone();
        e.r6 = e.r6.neg();
        k[1 + c][4 + r] = e.clone();
        k[4 + c][1 + r] = e;
    }
    k
}

fn trace_polynomial(x: &SurdMatrix) -> (Polynomial, Polynomial) {
    // returns (tr X^2, tr X^6), both necessarily rational
    let x2 = matmul_surd(x, x);
    let x3 = matmul_surd(&x2, x);
    let tr2 = trace_of_product(x, x);
    let tr6 = trace_of_product(&x3, &x3);
    for t in [&tr2, &tr6] {
        assert!(t.re.is_rational(), "trace must be rational");
        assert!(
            t.im.q.is_zero() && t.im.is_rational() && t.im.q.is_zero(),
            "trace must be real"
        );
        assert!(t.im.r2.is_zero() && t.im.r3.is_zero() && t.im.r6.is_zero());
    }
    (tr2.re.q.clone(), tr6.re.q.clone())
}

fn trace_form(tr2: &Polynomial, tr6: &Polynomial) -> Polynomial {
    // 18 tr X^6 - (5/4) (tr X^2)^3
    tr6.scale(&rat_int(18)).sub(&tr2.pow(3).scale(&rat(5, 4)))
}

/// Prints the surd components of tr x^2 for the symmetric slice; temporary
/// diagnostic.
pub fn debug_trace_m1() {
    let n = 8;
    let x = symmetric_slice(n, 0, 6);
    let xc: SurdMatrix = x
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| CSurd { re: e, im: SurdPoly::zero(n) })
                .collect()
        })
        .collect();
    let tr2 = trace_of_product(&xc, &xc);
    println!("tr2.q  = {}", tr2.re.q);
    println!("tr2.r2 = {}", tr2.re.r2);
    println!("tr2.r3 = {}", tr2.re.r3);
    println!("tr2.r6 = {}", tr2.re.r6);
    let x2 = matmul_surd(&xc, &xc);
    let x3 = matmul_surd(&x2, &xc);
    let tr6 = trace_of_product(&x3, &x3);
    println!("tr6.r2 terms = {}", tr6.re.r2.nterms());
    println!("tr6.r3 terms = {}", tr6.re.r3.nterms());
    println!("tr6.r6 terms = {}", tr6.re.r6.nterms());
    let tr3 = trace_of_product(&x2, &xc);
    println!("tr3.q = {}", tr3.re.q);
    println!("tr3.r2 terms = {}", tr3.re.r2.nterms());
    println!("tr3.r6 terms = {}", tr3.re.r6.nterms());
    if tr6.re.r3.nterms() > 0 {
        let p = &tr6.re.r3;
        for (m, c) in p.terms.iter().take(12) {
            println!("  r3 term: {:?} coeff {}", m.0, c);
        }
    }
    // evaluate q + sqrt3 r3 at y=(1,0,0,0,0,0), a=1, b=1
    let pt: Vec<Scalar> = vec![
        Scalar::one(),
        Scalar::zero(),
        Scalar::zero(),
        Scalar::zero(),
        Scalar::zero(),
        Scalar::zero(),
        Scalar::one(),
        Scalar::one(),
    ];
    let q = tr6.re.q.evaluate(&pt).unwrap().to_f64();
    let r3 = tr6.re.r3.evaluate(&pt).unwrap().to_f64();
    println!("symbolic tr6 = {} + sqrt3 * {} = {}", q, r3, q + 3f64.sqrt() * r3);
}

/// Degree-6 polynomial on R^8 via traces of the symmetric matrix slice.
pub fn g6_trace_m1() -> Polynomial {
    let n = 8;
    let x = symmetric_slice(n, 0, 6);
    let xc: SurdMatrix = x
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| CSurd { re: e, im: SurdPoly::zero(n) })
                .collect()
        })
        .collect();
    let (tr2, tr6) = trace_polynomial(&xc);
    trace_form(&tr2, &tr6)
}

/// Degree-6 polynomial on R^14 via traces of the skew-Hermitian matrix;
/// variables ordered (y1..y6, a, b, u1..u6) so the first eight give the
/// R^8 slice.
pub fn g6_trace_m2() -> Polynomial {
    let n = 14;
    let sym = symmetric_slice(n, 0, 6);
    let skew = skew_slice(n, 8);
    let x: SurdMatrix = (0..7)
        .map(|i| {
            (0..7)
                .map(|j| CSurd {
                    re: skew[i][j].clone(),
                    im: sym[i][j].clone(),
                })
                .collect()
        })
        .collect();
    let (tr2, tr6) = trace_polynomial(&x);
    trace_form(&tr2, &tr6)
}

/// Generates the isoparametric polynomial of a family.
pub fn generate(spec: &IsoparametricSpec) -> Result<Polynomial, IsoError> {
    spec.validate()?;
    let f = match &spec.family {
        Family::Coordinate { n } => Polynomial::var(*n, 0),
        Family::CliffordTorus { k, n } => {
            let mut f = Polynomial::zero(*n);
            for i in 0..*n {
                let sq = Polynomial::var(*n, i).square();
                f = if i < *k { f.add(&sq) } else { f.sub(&sq) };
            }
            f
        }
        Family::CartanCubic { m } => cartan_cubic(*m),
        Family::Otfkm { m, k, class } => otfkm_polynomial(&otfkm_system(*m, *k, *class)?),
        Family::Exceptional22 => exceptional_22(),
        Family::Exceptional54 => exceptional_54(),
        Family::G6Hopf => g6_hopf(),
        Family::G6Trace1 => g6_trace_m1(),
        Family::G6Trace2 => g6_trace_m2(),
    };
    Ok(if spec.negate { f.neg() } else { f })
}

/// Outcome of checking the two defining differential identities.
#[derive(Clone, Debug)]
pub struct CmReport {
    pub grad_ok: bool,
    pub lap_ok: bool,
    pub grad_residual: Polynomial,
    pub lap_residual: Polynomial,
}

impl CmReport {
    pub fn ok(&self) -> bool {
        self.grad_ok && self.lap_ok
    }
}

/// Exact check of |grad F|^2 = g^2 |x|^{2g-2} and
/// Delta F = (g^2 / 2)(m_- - m_+) |x|^{g-2}.
pub fn verify_cartan_munzner(f: &Polynomial, g: usize, mults: (usize, usize)) -> CmReport {
    let n = f.nvars;
    let grads = f.gradient();
    let mut grad_sq = Polynomial::zero(n);
    for p in &grads {
        grad_sq = grad_sq.add(&p.square());
    }
    let r2 = Polynomial::radius_sq(n);
    let grad_residual = grad_sq.sub(&r2.pow(g - 1).scale(&rat_int((g * g) as i64)));
    let (mp, mm) = mults;
    let lap = f.laplacian();
    let lap_residual = if mm == mp {
        lap
    } else {
        // g - 2 is even and nonnegative whenever the multiplicities differ
        let coef = rat_int((g * g) as i64) * rat(mm as i64 - mp as i64, 2);
        lap.sub(&r2.pow((g - 2) / 2).scale(&coef))
    };
    CmReport {
        grad_ok: grad_residual.is_zero(),
        lap_ok: lap_residual.is_zero(),
        grad_residual,
        lap_residual,
    }
}

/// The psd forms G^+ = |x|^g + F, G^- = |x|^g - F (even g), H = |x|^{2g} - F^2.
#[derive(Clone, Debug)]
pub struct PsdTriple {
    pub gplus: Option<Polynomial>,
    pub gminus: Option<Polynomial>,
    pub h: Polynomial,
}

pub fn psd_triple(f: &Polynomial, g: usize) -> PsdTriple {
    let n = f.nvars;
    let r2 = Polynomial::radius_sq(n);
    let h = r2.pow(g).sub(&f.square());
    if g % 2 == 0 {
        let rg = r2.pow(g / 2);
        PsdTriple {
            gplus: Some(rg.add(f)),
            gminus: Some(rg.sub(f)),
            h,
        }
    } else {
        PsdTriple { gplus: None, gminus: None, h }
    }
}

/// The pair (G^+, G^-) or an error for odd degree.
pub fn psd_pair(f: &Polynomial, g: usize) -> Result<(Polynomial, Polynomial), IsoError> {
    if g % 2 != 0 {
        return Err(IsoError::OddDegreeG(g));
    }
    let t = psd_triple(f, g);
    Ok((t.gplus.unwrap(), t.gminus.unwrap()))
}

/// Image of the degree-6 parameterization of the level set F = 1 on R^8,
/// as polynomials in (t0, t1, t2, q0, q1, q2, q3).
pub fn g6m1_plus_parameterization() -> Vec<Polynomial> {
    let n = 7;
    let t0 = Polynomial::var(n, 0);
    let t1 = Polynomial::var(n, 1);
    let t2 = Polynomial::var(n, 2);
    let q = HyperNumber::from_vars(4, n, 3);
    let i = HyperNumber::basis(4, n, 1);
    let j = HyperNumber::basis(4, n, 2);
    let half = rat(1, 2);
    // u = (sqrt3/2)(t1 i + t2 j) q
    let dir = i.scale_poly(&t1).add(&j.scale_poly(&t2));
    let u = hyper_mul(&dir, &q).scale(&Scalar::sqrt_mult(half.clone(), 3));
    // v = (t0 + (1/2) t1 i - (1/2) t2 j) q
    let head = HyperNumber::new(vec![
        t0,
        Polynomial::var(n, 1).scale(&half),
        Polynomial::var(n, 2).scale(&-half),
        Polynomial::zero(n),
    ]);
    let v = hyper_mul(&head, &q);
    let mut out = u.components;
    out.extend(v.components);
    out
}

/// Parameterization of the opposite level set F = -1 on R^8, in variables
/// (c_phi, s_phi, c_th, s_th, w0, w1, w2, w3) subject to two circle
/// relations and |w| = 1.
pub fn g6m1_minus_parameterization() -> Vec<Polynomial> {
    let n = 8;
    let c_phi = Polynomial::var(n, 0);
    let s_phi = Polynomial::var(n, 1);
    let c_th = Polynomial::var(n, 2);
    let s_th = Polynomial::var(n, 3);
    let w = HyperNumber::from_vars(4, n, 4);
    let i = HyperNumber::basis(4, n, 1);
    let j = HyperNumber::basis(4, n, 2);
    let k = HyperNumber::basis(4, n, 3);
    let one = HyperNumber::basis(4, n, 0);
    // u = s_phi (c_th i + s_th j) w + (1/2) c_phi e^{2 theta k} w
    let dir = i.scale_poly(&c_th).add(&j.scale_poly(&s_th));
    let c2 = c_th.square().sub(&s_th.square());
    let s2 = c_th.mul(&s_th).scale(&rat_int(2));
    let rot = one.scale_poly(&c2).add(&k.scale_poly(&s2));
    let u = hyper_mul(&dir, &w)
        .scale_poly(&s_phi)
        .add(&hyper_mul(&rot, &w).scale_poly(&c_phi).scale(&Scalar::from_rat(1, 2)));
    // v = -(sqrt3/2) c_phi w
    let v = w.scale_poly(&c_phi).scale(&Scalar::sqrt_mult(rat(-1, 2), 3));
    let mut out = u.components;
    out.extend(v.components);
    out
}

/// Composition onto the 5 base coordinates: pi o V(t, q), which only
/// depends on t.
pub fn g6m1_base_veronese() -> Vec<Polynomial> {
    let v = g6m1_plus_parameterization();
    let u = HyperNumber::new(v[0..4].to_vec());
    let w = HyperNumber::new(v[4..8].to_vec());
    hopf_map(&u, &w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use smallvec::SmallVec;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn cartan_cubic_m1_literal() {
        // x0^3 + (3/2)x0(x2^2 + x3^2 - 2x4^2 - 2x1^2)
        //   + (3 sqrt3 / 2) x1 (x2^2 - x3^2) + 3 sqrt3 x2 x3 x4
        let n = 5;
        let f = cartan_cubic(1);
        let mut expect = x(n, 0).pow(3);
        let bracket = x(n, 2)
            .square()
            .add(&x(n, 3).square())
            .sub(&x(n, 4).square().scale(&rat_int(2)))
            .sub(&x(n, 1).square().scale(&rat_int(2)));
        expect = expect.add(&x(n, 0).mul(&bracket).scale(&rat(3, 2)));
        expect = expect.add(
            &x(n, 1)
                .mul(&x(n, 2).square().sub(&x(n, 3).square()))
                .scale_scalar(&Scalar::sqrt_mult(rat(3, 2), 3)),
        );
        expect = expect.add(
            &x(n, 2)
                .mul(&x(n, 3))
                .mul(&x(n, 4))
                .scale_scalar(&Scalar::sqrt_mult(rat_int(3), 3)),
        );
        assert_eq!(f, expect);
    }

    #[test]
    fn cartan_cubic_det_identity() {
        assert_eq!(cartan_cubic(1), cartan_cubic_det_form());
    }

    #[test]
    fn cartan_cubics_satisfy_cm() {
        for m in [1usize, 2, 4] {
            let spec = IsoparametricSpec::new(Family::CartanCubic { m });
            let f = generate(&spec).unwrap();
            let rep = verify_cartan_munzner(&f, 3, spec.multiplicities());
            assert!(rep.ok(), "cartan cubic m={} failed", m);
        }
    }

    #[test]
    fn torus_and_coordinate_cm() {
        let spec = IsoparametricSpec::new(Family::Coordinate { n: 4 });
        let f = generate(&spec).unwrap();
        assert!(verify_cartan_munzner(&f, 1, spec.multiplicities()).ok());
        for (k, n) in [(1usize, 2usize), (1, 4), (2, 5), (3, 6)] {
            let spec = IsoparametricSpec::new(Family::CliffordTorus { k, n });
            let f = generate(&spec).unwrap();
            assert!(verify_cartan_munzner(&f, 2, spec.multiplicities()).ok());
        }
    }

    #[test]
    fn otfkm_small_cm() {
        let spec = IsoparametricSpec::new(Family::Otfkm {
            m: 1,
            k: 3,
            class: ClassSpec::Single,
        });
        let f = generate(&spec).unwrap();
        assert_eq!(spec.multiplicities(), (1, 1));
        assert!(verify_cartan_munzner(&f, 4, spec.multiplicities()).ok());
        // negation swaps multiplicities and stays isoparametric
        let neg = IsoparametricSpec { negate: true, ..spec };
        let g = generate(&neg).unwrap();
        assert_eq!(g, f.neg());
        assert!(verify_cartan_munzner(&g, 4, neg.multiplicities()).ok());
    }

    #[test]
    fn exceptional_22_restrictions_give_squares_form() {
        // restricting to the two index sets recovers the five-variable
        // quartic h(x^2) built from the cyclic quadratic form
        let g = {
            let f = exceptional_22();
            Polynomial::radius_sq(10).square().add(&f).scale(&rat(1, 2))
        };
        // variables x2,x6,x9,x3,x7 live at indices 1,5,8,2,6
        let keep: [usize; 5] = [1, 5, 8, 2, 6];
        let kill: Vec<usize> = (0..10).filter(|i| !keep.contains(i)).collect();
        let res = g.restrict_to_zero(&kill);
        // expected: H(z1..z5) = h(z^2) with the cyclic Horn pattern, where the
        // restricted variable order is x2, x3, x6, x7, x9 -> z1, z4, z2, z5, z3
        let n = 5;
        let perm = [0usize, 3, 1, 4, 2]; // z_j at restricted slot
        let z = |j: usize| x(n, perm[j]);
        let sum: Polynomial = (0..5).fold(Polynomial::zero(n), |acc, j| acc.add(&z(j).square()));
        let mut cyc = Polynomial::zero(n);
        for j in 0..5 {
            cyc = cyc.add(&z(j).square().mul(&z((j + 1) % 5).square()));
        }
        let expect = sum.square().sub(&cyc.scale(&rat_int(4)));
        assert_eq!(res, expect);
    }

    #[test]
    fn g6_trace_m1_cm() {
        let f = g6_trace_m1();
        assert_eq!(f.homogeneous_degree(), Some(6));
        let rep = verify_cartan_munzner(&f, 6, (1, 1));
        assert!(rep.ok());
    }

    #[test]
    fn g6_hopf_cm_and_veronese() {
        let f = g6_hopf();
        assert_eq!(f.nvars, 8);
        assert_eq!(f.homogeneous_degree(), Some(6));
        assert!(verify_cartan_munzner(&f, 6, (1, 1)).ok());
        // base composition: pi o V equals the displayed quadratic map in t
        let base = g6m1_base_veronese();
        let n = 7;
        let (t0, t1, t2) = (x(n, 0), x(n, 1), x(n, 2));
        let q_norm = (3..7).fold(Polynomial::zero(n), |acc, i| acc.add(&x(n, i).square()));
        let expect: Vec<Polynomial> = vec![
            // (2 t0^2 - t1^2 - t2^2) / 2
            t0.square()
                .scale(&rat_int(2))
                .sub(&t1.square())
                .sub(&t2.square())
                .scale(&rat(1, 2)),
            // (sqrt3/2)(t1^2 - t2^2)
            t1.square()
                .sub(&t2.square())
                .scale_scalar(&Scalar::sqrt_mult(rat(1, 2), 3)),
            t0.mul(&t1).scale_scalar(&Scalar::sqrt_mult(rat_int(1), 3)),
            t0.mul(&t2).scale_scalar(&Scalar::sqrt_mult(rat_int(1), 3)),
            t1.mul(&t2).scale_scalar(&Scalar::sqrt_mult(rat_int(1), 3)),
        ];
        for (got, want) in base.iter().zip(expect.iter()) {
            // the parameterization is only fixed on |q| = 1
            let d = reduce_mod_spheres(&got.sub(&want.mul(&q_norm)), &[vec![3, 4, 5, 6]]).unwrap();
            assert!(d.is_zero(), "veronese component mismatch");
        }
    }

    #[test]
    fn g6m1_parameterizations_land_on_levels() {
        let f = g6_hopf();
        let plus = g6m1_plus_parameterization();
        let groups_plus = vec![vec![0, 1, 2], vec![3, 4, 5, 6]];
        let fv = f.compose(&plus);
        let r = reduce_mod_spheres(&fv, &groups_plus).unwrap();
        assert_eq!(r, Polynomial::one(7), "F o V must be 1 on the product of spheres");
        let minus = g6m1_minus_parameterization();
        let groups_minus = vec![vec![0, 1], vec![2, 3], vec![4, 5, 6, 7]];
        let fv = f.compose(&minus);
        let r = reduce_mod_spheres(&fv, &groups_minus).unwrap();
        assert_eq!(
            r,
            Polynomial::one(8).neg(),
            "F o V_minus must be -1 on the parameter domain"
        );
    }

    #[test]
    fn trace_forms_are_restrictions_of_each_other() {
        let f1 = g6_trace_m1();
        let f2 = g6_trace_m2();
        assert_eq!(f2.homogeneous_degree(), Some(6));
        // setting the skew part to zero gives -F1 on the shared coordinates
        let restricted = f2.restrict_to_zero(&[8, 9, 10, 11, 12, 13]);
        assert_eq!(restricted, f1.neg());
    }

    #[test]
    fn psd_triple_identities() {
        let spec = IsoparametricSpec::new(Family::Otfkm {
            m: 1,
            k: 3,
            class: ClassSpec::Single,
        });
        let f = generate(&spec).unwrap();
        let t = psd_triple(&f, 4);
        let (gp, gm) = (t.gplus.unwrap(), t.gminus.unwrap());
        assert_eq!(gp.mul(&gm), t.h);
        // G- / 2 = sum of the system's quadratic forms squared
        let sys = otfkm_system(1, 3, ClassSpec::Single).unwrap();
        let mut acc = Polynomial::zero(6);
        for q in clifford::system_quadratic_forms(&sys) {
            acc = acc.add(&q.square());
        }
        assert_eq!(gm.scale(&rat(1, 2)), acc);
        // odd degree has no G pair
        let c = cartan_cubic(1);
        assert!(psd_pair(&c, 3).is_err());
        assert!(psd_triple(&c, 3).gplus.is_none());
    }

    #[test]
    fn torus_psd_examples() {
        // g = 2, k: G+ = 2 sum_{i<=k} x_i^2
        let spec = IsoparametricSpec::new(Family::CliffordTorus { k: 2, n: 4 });
        let f = generate(&spec).unwrap();
        let (gp, _) = psd_pair(&f, 2).unwrap();
        let expect = x(4, 0).square().add(&x(4, 1).square()).scale(&rat_int(2));
        assert_eq!(gp, expect);
    }

    #[test]
    fn spec_json_round_trip_smoke() {
        let spec = IsoparametricSpec::new(Family::Otfkm {
            m: 4,
            k: 2,
            class: ClassSpec::Indefinite(1),
        });
        let v = spec.to_json();
        assert_eq!(v["g"], 4);
        assert_eq!(v["nvars"], 16);
        assert_eq!(v["multiplicities"][0], 4);
        assert_eq!(v["multiplicities"][1], 3);
    }

    #[test]
    fn evaluate_horn_example_monomial() {
        // quick check that Monomial construction used in tests is sane
        let m = Monomial(SmallVec::from_slice(&[2u8, 0, 1]));
        assert_eq!(m.degree(), 3);
    }
}
