//! Homogeneous trivariate polynomials, the Hermitian-pencil determinant and
//! conic dualization via the adjugate.
//!
//! The boundary-generating polynomial of an n×n matrix is
//! det(H₁u + H₂v + I·w), a degree-n homogeneous polynomial in (u,v,w) with
//! real coefficients. For n = 2 it is a conic, and the dual curve (the point
//! equation of the boundary) is obtained exactly by the 3×3 adjugate.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::HermitianPair;
use crate::scalar::{lit, Scalar};

/// Exponent triple (i,j,k) for the monomial u^i v^j w^k.
pub type Exponents = (u32, u32, u32);

/// A homogeneous polynomial in (u,v,w) with real coefficients.
///
/// The zero polynomial is represented by an empty coefficient map.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousTrivariatePoly<T> {
    degree: u32,
    coeffs: BTreeMap<Exponents, T>,
}

impl<T: Scalar> HomogeneousTrivariatePoly<T> {
    pub fn new(degree: u32, coeffs: BTreeMap<Exponents, T>) -> Result<Self> {
        for (&(i, j, k), c) in &coeffs {
            if i + j + k != degree {
                return Err(Error::Degree(format!(
                    "exponent ({i},{j},{k}) does not sum to degree {degree}"
                )));
            }
            if !c.is_finite() {
                return Err(Error::Domain("coefficients must be finite".into()));
            }
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self { degree, coeffs })
    }

    pub fn from_terms(degree: u32, terms: &[(Exponents, T)]) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for &(e, c) in terms {
            *coeffs.entry(e).or_insert_with(T::zero) += c;
        }
        Self::new(degree, coeffs)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: Exponents) -> T {
        self.coeffs.get(&e).copied().unwrap_or_else(T::zero)
    }

    /// Coefficients in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, T)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    /// Largest coefficient magnitude; 0 for the zero polynomial.
    pub fn coeff_scale(&self) -> T {
        self.coeffs
            .values()
            .map(|c| c.abs())
            .fold(T::zero(), |a, b| a.max(b))
    }
}

/// Exact monomial-sum evaluation at (u,v,w).
pub fn evaluate<T: Scalar>(p: &HomogeneousTrivariatePoly<T>, u: T, v: T, w: T) -> T {
    p.terms()
        .map(|((i, j, k), c)| c * u.powi(i as i32) * v.powi(j as i32) * w.powi(k as i32))
        .fold(T::zero(), |a, b| a + b)
}

// sparse complex trivariate polynomial, the intermediate of the pencil
// determinant expansion
type CPoly<T> = BTreeMap<Exponents, Complex<T>>;

fn cpoly_mul<T: Scalar>(a: &CPoly<T>, b: &CPoly<T>) -> CPoly<T> {
    let mut out: CPoly<T> = BTreeMap::new();
    for (&(i1, j1, k1), &ca) in a {
        for (&(i2, j2, k2), &cb) in b {
            let e = (i1 + i2, j1 + j2, k1 + k2);
            let entry = out.entry(e).or_insert_with(Complex::zero);
            *entry = *entry + ca * cb;
        }
    }
    out
}

fn cpoly_add_scaled<T: Scalar>(acc: &mut CPoly<T>, p: &CPoly<T>, sign: T) {
    let s = Complex::new(sign, T::zero());
    for (&e, &c) in p {
        let entry = acc.entry(e).or_insert_with(Complex::zero);
        *entry = *entry + c * s;
    }
}

// Laplace expansion along the first row; entries indexed row-major into `rows`
fn det_cpoly<T: Scalar>(mat: &[CPoly<T>], n: usize) -> CPoly<T> {
    if n == 1 {
        return mat[0].clone();
    }
    let mut acc: CPoly<T> = BTreeMap::new();
    for col in 0..n {
        if mat[col].is_empty() {
            continue;
        }
        let mut minor: Vec<CPoly<T>> = Vec::with_capacity((n - 1) * (n - 1));
        for i in 1..n {
            for j in 0..n {
                if j != col {
                    minor.push(mat[i * n + j].clone());
                }
            }
        }
        let sub = det_cpoly(&minor, n - 1);
        let term = cpoly_mul(&mat[col], &sub);
        let sign = if col % 2 == 0 { T::one() } else { -T::one() };
        cpoly_add_scaled(&mut acc, &term, sign);
    }
    acc
}

/// The boundary-generating polynomial det(H₁u + H₂v + I·w), expanded by
/// cofactors over degree-1 entries and coerced to real coefficients.
///
/// Fails if the imaginary residue of any coefficient exceeds the residue
/// tolerance relative to the largest coefficient, which signals a
/// non-Hermitian pair.
pub fn pencil_determinant<T: Scalar>(
    pair: &HermitianPair<T>,
) -> Result<HomogeneousTrivariatePoly<T>> {
    let n = pair.dim();
    // entry (i,j) = h1[i][j]·u + h2[i][j]·v + δ_ij·w
    let mut mat: Vec<CPoly<T>> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut p: CPoly<T> = BTreeMap::new();
            let a = pair.h1.get(i, j);
            let b = pair.h2.get(i, j);
            if !a.is_zero() {
                p.insert((1, 0, 0), a);
            }
            if !b.is_zero() {
                p.insert((0, 1, 0), b);
            }
            if i == j {
                p.insert((0, 0, 1), Complex::new(T::one(), T::zero()));
            }
            mat.push(p);
        }
    }
    let det = det_cpoly(&mat, n);

    let scale = det
        .values()
        .map(|c| c.norm())
        .fold(T::zero(), |a, b| a.max(b));
    let mut coeffs = BTreeMap::new();
    for (e, c) in det {
        if c.im.abs() > T::residue_tol() * scale {
            return Err(Error::NumericalInconsistency(format!(
                "imaginary residue {} in pencil determinant coefficient; pair is not Hermitian",
                c.im
            )));
        }
        if !c.re.is_zero() {
            coeffs.insert(e, c.re);
        }
    }
    HomogeneousTrivariatePoly::new(n as u32, coeffs)
}

/// A 3×3 real symmetric matrix M representing the conic (u,v,w)·M·(u,v,w)ᵀ = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct ConicMatrix<T> {
    m: [[T; 3]; 3],
}

impl<T: Scalar> ConicMatrix<T> {
    pub fn new(m: [[T; 3]; 3]) -> Result<Self> {
        let mut any = false;
        for i in 0..3 {
            for j in 0..3 {
                if !m[i][j].is_finite() {
                    return Err(Error::Domain("conic entries must be finite".into()));
                }
                if m[i][j] != m[j][i] {
                    return Err(Error::Domain("conic matrix must be symmetric".into()));
                }
                any = any || !m[i][j].is_zero();
            }
        }
        if !any {
            return Err(Error::Domain("conic matrix must be nonzero".into()));
        }
        Ok(Self { m })
    }

    pub fn entries(&self) -> &[[T; 3]; 3] {
        &self.m
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.m[i][j]
    }

    pub fn det(&self) -> T {
        det3(&self.m)
    }

    /// Largest entry magnitude.
    pub fn scale(&self) -> T {
        self.m
            .iter()
            .flatten()
            .map(|x| x.abs())
            .fold(T::zero(), |a, b| a.max(b))
    }

    /// The quadratic form as a degree-2 polynomial.
    pub fn to_poly(&self) -> HomogeneousTrivariatePoly<T> {
        let two = lit::<T>(2.0);
        let m = &self.m;
        HomogeneousTrivariatePoly::from_terms(
            2,
            &[
                ((2, 0, 0), m[0][0]),
                ((0, 2, 0), m[1][1]),
                ((0, 0, 2), m[2][2]),
                ((1, 1, 0), two * m[0][1]),
                ((1, 0, 1), two * m[0][2]),
                ((0, 1, 1), two * m[1][2]),
            ],
        )
        .expect("exponents sum to 2")
    }
}

fn det3<T: Scalar>(m: &[[T; 3]; 3]) -> T {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn adj3<T: Scalar>(m: &[[T; 3]; 3]) -> [[T; 3]; 3] {
    let mut out = [[T::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            // cofactor of (j,i), giving the transpose directly
            let mut sub = [[T::zero(); 2]; 2];
            let (mut r, mut c);
            r = 0;
            for ii in 0..3 {
                if ii == j {
                    continue;
                }
                c = 0;
                for jj in 0..3 {
                    if jj == i {
                        continue;
                    }
                    sub[r][c] = m[ii][jj];
                    c += 1;
                }
                r += 1;
            }
            let minor = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0];
            let sign = if (i + j) % 2 == 0 { T::one() } else { -T::one() };
            out[i][j] = sign * minor;
        }
    }
    out
}

/// Extracts the symmetric matrix of a degree-2 polynomial: diagonal entries
/// are the square coefficients, off-diagonals half the mixed coefficients.
pub fn conic_of<T: Scalar>(p: &HomogeneousTrivariatePoly<T>) -> Result<ConicMatrix<T>> {
    if p.degree() != 2 {
        return Err(Error::Degree(format!(
            "conic extraction needs degree 2, got {}",
            p.degree()
        )));
    }
    let half = lit::<T>(0.5);
    let m12 = half * p.coeff((1, 1, 0));
    let m13 = half * p.coeff((1, 0, 1));
    let m23 = half * p.coeff((0, 1, 1));
    ConicMatrix::new([
        [p.coeff((2, 0, 0)), m12, m13],
        [m12, p.coeff((0, 2, 0)), m23],
        [m13, m23, p.coeff((0, 0, 2))],
    ])
}

/// The adjugate of a nonsingular conic: the point equation of the curve whose
/// tangential equation is C, and vice versa.
pub fn adjugate_dual<T: Scalar>(c: &ConicMatrix<T>) -> Result<ConicMatrix<T>> {
    let scale = c.scale();
    if c.det().abs() <= T::singular_tol() * scale * scale * scale {
        return Err(Error::Degenerate(
            "singular conic: the dual is not a conic".into(),
        ));
    }
    ConicMatrix::new(adj3(c.entries()))
}

/// Unchecked adjugate, for biduality checks on possibly-singular input.
pub fn adjugate<T: Scalar>(c: &ConicMatrix<T>) -> [[T; 3]; 3] {
    adj3(c.entries())
}

/// Scales a conic so its largest-magnitude entry is 1 and the first nonzero
/// entry in row-major order is positive. Idempotent.
pub fn normalize_conic<T: Scalar>(c: &ConicMatrix<T>) -> Result<ConicMatrix<T>> {
    let scale = c.scale();
    if scale.is_zero() {
        return Err(Error::Domain("cannot normalize the zero conic".into()));
    }
    let mut factor = T::one() / scale;
    let first = c
        .entries()
        .iter()
        .flatten()
        .find(|x| !x.is_zero())
        .copied()
        .expect("nonzero conic");
    if first < T::zero() {
        factor = -factor;
    }
    let mut m = *c.entries();
    for row in &mut m {
        for x in row.iter_mut() {
            *x = *x * factor;
        }
    }
    ConicMatrix::new(m)
}

pub mod json {
    //! Polynomial JSON: a list of {"exp": [i,j,k], "coef": number}, sorted
    //! lexicographically by exponent.

    use super::*;
    use serde_json::{json, Value};

    pub fn to_json<T: Scalar>(p: &HomogeneousTrivariatePoly<T>) -> Value {
        Value::Array(
            p.terms()
                .map(|((i, j, k), c)| json!({"exp": [i, j, k], "coef": c.to_f64().unwrap()}))
                .collect(),
        )
    }

    pub fn from_json<T: Scalar>(v: &Value, degree: u32) -> Result<HomogeneousTrivariatePoly<T>> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial JSON must be an array".into()))?;
        let mut coeffs = BTreeMap::new();
        for term in arr {
            let exp = term
                .get("exp")
                .and_then(Value::as_array)
                .filter(|e| e.len() == 3)
                .ok_or_else(|| Error::Parse("term missing [i,j,k] \"exp\"".into()))?;
            let e = (
                exp[0].as_u64().ok_or_else(bad_exp)? as u32,
                exp[1].as_u64().ok_or_else(bad_exp)? as u32,
                exp[2].as_u64().ok_or_else(bad_exp)? as u32,
            );
            let c = term
                .get("coef")
                .and_then(Value::as_f64)
                .ok_or_else(|| Error::Parse("term missing numeric \"coef\"".into()))?;
            coeffs.insert(e, lit::<T>(c));
        }
        HomogeneousTrivariatePoly::new(degree, coeffs)
    }

    fn bad_exp() -> Error {
        Error::Parse("exponents must be nonnegative integers".into())
    }
}
