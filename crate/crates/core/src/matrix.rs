//! Complex matrix arithmetic for small n: Hermitian decomposition, eigenvalue
//! solvers and Rayleigh quotients.
//!
//! Matrices are dense, row-major and immutable after construction. Dimensions
//! are capped at [`MAX_DIM`]; the pencil-determinant expansion downstream is
//! factorial in n, so this crate targets desk-scale operators.

use num_complex::Complex;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};

use crate::error::{Error, Result};
use crate::scalar::{lit, Scalar};

/// Hard cap on matrix dimension.
pub const MAX_DIM: usize = 16;

/// An n×n matrix of complex numbers, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareComplexMatrix<T> {
    n: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Scalar> SquareComplexMatrix<T> {
    /// Builds a matrix from a row-major entry vector of length n².
    pub fn new(n: usize, entries: Vec<Complex<T>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension("dimension must be positive".into()));
        }
        if n > MAX_DIM {
            return Err(Error::Dimension(format!(
                "dimension {n} exceeds cap {MAX_DIM}"
            )));
        }
        if entries.len() != n * n {
            return Err(Error::Dimension(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Domain("matrix entries must be finite".into()));
        }
        Ok(Self { n, entries })
    }

    /// Builds a matrix from nested rows.
    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("rows must all have length n".into()));
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from (re, im) pairs.
    pub fn from_parts(rows: &[&[(T, T)]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(re, im)| Complex::new(re, im)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut entries = vec![Complex::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Complex::new(T::one(), T::zero());
        }
        Self::new(n, entries)
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(n, vec![Complex::zero(); n * n])
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    /// Conjugate transpose A*.
    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut entries = vec![Complex::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.get(i, j).conj();
            }
        }
        Self { n, entries }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension("dimension mismatch in product".into()));
        }
        let n = self.n;
        let mut entries = vec![Complex::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                for j in 0..n {
                    entries[i * n + j] = entries[i * n + j] + aik * other.get(k, j);
                }
            }
        }
        Ok(Self { n, entries })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension("dimension mismatch in sum".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { n: self.n, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension("dimension mismatch in difference".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { n: self.n, entries })
    }

    pub fn scale(&self, alpha: Complex<T>) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|a| a * alpha).collect(),
        }
    }

    /// A + β·I.
    pub fn shift(&self, beta: Complex<T>) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            m.entries[i * self.n + i] = m.entries[i * self.n + i] + beta;
        }
        m
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.n)
            .map(|i| self.get(i, i))
            .fold(Complex::zero(), |a, b| a + b)
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Matrix-vector product A·x.
    pub fn apply(&self, x: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        if x.len() != self.n {
            return Err(Error::Dimension("vector length mismatch".into()));
        }
        Ok((0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j) * x[j])
                    .fold(Complex::zero(), |a, b| a + b)
            })
            .collect())
    }
}

/// The Hermitian decomposition A = H₁ + i·H₂.
#[derive(Debug, Clone)]
pub struct HermitianPair<T> {
    pub h1: SquareComplexMatrix<T>,
    pub h2: SquareComplexMatrix<T>,
}

impl<T: Scalar> HermitianPair<T> {
    pub fn dim(&self) -> usize {
        self.h1.dim()
    }

    /// cos(θ)·H₁ + sin(θ)·H₂, the Hermitian pencil along a unit direction.
    pub fn rotate(&self, theta: T) -> SquareComplexMatrix<T> {
        let c = Complex::new(theta.cos(), T::zero());
        let s = Complex::new(theta.sin(), T::zero());
        self.h1
            .scale(c)
            .add(&self.h2.scale(s))
            .expect("dimensions agree by construction")
    }
}

/// An eigenvalue together with a unit-norm eigenvector.
#[derive(Debug, Clone)]
pub struct EigenPair<T> {
    pub value: T,
    pub vector: Vec<Complex<T>>,
}

/// Splits A into Hermitian parts: h1 = (A+A*)/2, h2 = (A−A*)/(2i).
pub fn hermitian_parts<T: Scalar>(a: &SquareComplexMatrix<T>) -> HermitianPair<T> {
    let adj = a.adjoint();
    let half = Complex::new(lit::<T>(0.5), T::zero());
    // 1/(2i) = -i/2
    let half_over_i = Complex::new(T::zero(), -lit::<T>(0.5));
    let h1 = a.add(&adj).unwrap().scale(half);
    let h2 = a.sub(&adj).unwrap().scale(half_over_i);
    HermitianPair { h1, h2 }
}

/// trace(A*A) = Σ|a_ij|², the squared Frobenius norm.
pub fn gram_trace<T: Scalar>(a: &SquareComplexMatrix<T>) -> T {
    a.entries()
        .iter()
        .map(|z| z.norm_sqr())
        .fold(T::zero(), |acc, x| acc + x)
}

/// Both roots of z² − tr(A)z + det(A) for a 2×2 matrix.
///
/// The larger-magnitude root comes from the quadratic formula with the
/// discriminant's square-root sign chosen to avoid cancellation; the other
/// root is det/λ₁.
pub fn eigenvalues_2x2<T: Scalar>(
    a: &SquareComplexMatrix<T>,
) -> Result<(Complex<T>, Complex<T>)> {
    if a.dim() != 2 {
        return Err(Error::Dimension(format!(
            "eigenvalues_2x2 needs n = 2, got {}",
            a.dim()
        )));
    }
    let tr = a.trace();
    let det = a.get(0, 0) * a.get(1, 1) - a.get(0, 1) * a.get(1, 0);
    let half = Complex::new(lit::<T>(0.5), T::zero());
    let half_tr = tr * half;
    let disc = half_tr * half_tr - det;
    let mut root = disc.sqrt();
    // align the root with tr/2 so |λ₁| = |tr/2| + |root| without cancellation
    if (half_tr.conj() * root).re < T::zero() {
        root = -root;
    }
    let l1 = half_tr + root;
    let l2 = if l1.norm() > T::zero() {
        det / l1
    } else {
        Complex::zero()
    };
    Ok((l1, l2))
}

/// Eigen-decomposition of a Hermitian matrix by cyclic Jacobi with complex
/// plane rotations. Returns EigenPairs sorted descending by eigenvalue.
pub fn hermitian_eigen<T: Scalar>(h: &SquareComplexMatrix<T>) -> Result<Vec<EigenPair<T>>> {
    let n = h.dim();
    let fro = h.frobenius_norm();
    let herm_dev = h
        .sub(&h.adjoint())
        .unwrap()
        .frobenius_norm();
    if herm_dev > T::hermitian_tol() * fro {
        return Err(Error::Precondition(format!(
            "matrix not Hermitian: ‖H − H*‖_F = {herm_dev} exceeds tolerance"
        )));
    }

    let mut a: Vec<Complex<T>> = h.entries().to_vec();
    // symmetrize exactly so the residue below tolerance cannot drift
    for p in 0..n {
        for q in 0..n {
            if p < q {
                let avg = (a[p * n + q] + a[q * n + p].conj())
                    * Complex::new(lit::<T>(0.5), T::zero());
                a[p * n + q] = avg;
                a[q * n + p] = avg.conj();
            } else if p == q {
                a[p * n + p] = Complex::new(a[p * n + p].re, T::zero());
            }
        }
    }
    let mut v: Vec<Complex<T>> = vec![Complex::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = Complex::new(T::one(), T::zero());
    }

    let thresh = T::jacobi_off_tol() * fro;
    const MAX_SWEEPS: usize = 30;
    for _ in 0..MAX_SWEEPS {
        let mut max_off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                max_off = max_off.max(a[p * n + q].norm());
            }
        }
        if max_off <= thresh {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let absb = apq.norm();
                if absb <= thresh * lit::<T>(0.01) {
                    continue;
                }
                let phi = apq.arg();
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let tau = (aqq - app) / (absb + absb);
                let t = tau.signum() / (tau.abs() + (tau * tau + T::one()).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = Complex::from_polar(t * c, phi);
                let cr = Complex::new(c, T::zero());

                // rows p,q: A ← G*·A
                for j in 0..n {
                    let arp = a[p * n + j];
                    let arq = a[q * n + j];
                    a[p * n + j] = cr * arp - s * arq;
                    a[q * n + j] = s.conj() * arp + cr * arq;
                }
                // columns p,q: A ← A·G, V ← V·G
                for i in 0..n {
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    a[i * n + p] = cr * aip - s.conj() * aiq;
                    a[i * n + q] = s * aip + cr * aiq;
                    let vip = v[i * n + p];
                    let viq = v[i * n + q];
                    v[i * n + p] = cr * vip - s.conj() * viq;
                    v[i * n + q] = s * vip + cr * viq;
                }
                a[p * n + q] = Complex::zero();
                a[q * n + p] = Complex::zero();
                a[p * n + p] = Complex::new(a[p * n + p].re, T::zero());
                a[q * n + q] = Complex::new(a[q * n + q].re, T::zero());
            }
        }
    }

    let mut pairs: Vec<EigenPair<T>> = (0..n)
        .map(|k| EigenPair {
            value: a[k * n + k].re,
            vector: (0..n).map(|i| v[i * n + k]).collect(),
        })
        .collect();
    pairs.sort_by(|x, y| y.value.partial_cmp(&x.value).expect("finite eigenvalues"));
    Ok(pairs)
}

/// Rayleigh quotient x*Ax / x*x; x need not be normalized.
pub fn rayleigh<T: Scalar>(
    a: &SquareComplexMatrix<T>,
    x: &[Complex<T>],
) -> Result<Complex<T>> {
    let nrm2 = x.iter().map(|z| z.norm_sqr()).fold(T::zero(), |s, t| s + t);
    if nrm2 <= T::zero() {
        return Err(Error::Domain("rayleigh quotient of the zero vector".into()));
    }
    let ax = a.apply(x)?;
    let num = x
        .iter()
        .zip(&ax)
        .map(|(xi, yi)| xi.conj() * yi)
        .fold(Complex::<T>::zero(), |s, t| s + t);
    Ok(num / Complex::new(nrm2, T::zero()))
}

/// Normality test: ‖A*A − AA*‖_F ≤ tol · ‖A‖_F².
pub fn is_normal<T: Scalar>(a: &SquareComplexMatrix<T>, tol: T) -> bool {
    let adj = a.adjoint();
    let lhs = adj.mul(a).unwrap();
    let rhs = a.mul(&adj).unwrap();
    let dev = lhs.sub(&rhs).unwrap().frobenius_norm();
    let scale = a.frobenius_norm();
    dev <= tol * scale * scale
}

/// Default relative tolerance for [`is_normal`].
pub fn default_normal_tol<T: Scalar>() -> T {
    lit(1e-10)
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sample_normal<T: Scalar>(rng: &mut ChaCha8Rng) -> T {
    let x: f64 = StandardNormal.sample(rng);
    lit(x)
}

/// Seeded unit vector with rotation-invariant direction (complex standard
/// normal entries, then normalized).
pub fn random_unit_vector<T: Scalar>(n: usize, seed: u64) -> Result<Vec<Complex<T>>> {
    if n == 0 {
        return Err(Error::Dimension("dimension must be positive".into()));
    }
    let mut rng = rng_for(seed);
    random_unit_vector_with(n, &mut rng)
}

/// Same as [`random_unit_vector`] but drawing from a caller-owned stream,
/// for bulk sampling.
pub fn random_unit_vector_with<T: Scalar>(
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Complex<T>>> {
    if n == 0 {
        return Err(Error::Dimension("dimension must be positive".into()));
    }
    loop {
        let x: Vec<Complex<T>> = (0..n)
            .map(|_| Complex::new(sample_normal(rng), sample_normal(rng)))
            .collect();
        let nrm = x
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |s, t| s + t)
            .sqrt();
        if nrm > lit(1e-6) {
            let inv = Complex::new(T::one() / nrm, T::zero());
            return Ok(x.iter().map(|z| z * inv).collect());
        }
    }
}

/// Seeded Haar-ish random unitary: Gram–Schmidt orthonormalization of a
/// complex Gaussian matrix.
pub fn random_unitary<T: Scalar>(n: usize, seed: u64) -> Result<SquareComplexMatrix<T>> {
    if n == 0 {
        return Err(Error::Dimension("dimension must be positive".into()));
    }
    let mut rng = rng_for(seed);
    let mut cols: Vec<Vec<Complex<T>>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut x: Vec<Complex<T>> = (0..n)
            .map(|_| Complex::new(sample_normal(&mut rng), sample_normal(&mut rng)))
            .collect();
        // two passes of classical Gram-Schmidt for orthogonality to 1e-12
        for _ in 0..2 {
            for c in &cols {
                let proj = c
                    .iter()
                    .zip(&x)
                    .map(|(ci, xi)| ci.conj() * xi)
                    .fold(Complex::<T>::zero(), |s, t| s + t);
                for (xi, ci) in x.iter_mut().zip(c.iter()) {
                    *xi = *xi - proj * *ci;
                }
            }
        }
        let nrm = x
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |s, t| s + t)
            .sqrt();
        if nrm <= lit(1e-6) {
            continue; // degenerate draw, resample
        }
        let inv = Complex::new(T::one() / nrm, T::zero());
        cols.push(x.iter().map(|z| z * inv).collect());
    }
    let mut entries = vec![Complex::zero(); n * n];
    for (j, c) in cols.iter().enumerate() {
        for i in 0..n {
            entries[i * n + j] = c[i];
        }
    }
    SquareComplexMatrix::new(n, entries)
}

/// Seeded random matrix with entries' real and imaginary parts uniform on
/// [−1, 1]; the test-suite distribution.
pub fn random_matrix<T: Scalar>(n: usize, seed: u64) -> Result<SquareComplexMatrix<T>> {
    let mut rng = rng_for(seed);
    let u = Uniform::new_inclusive(-1.0f64, 1.0);
    let entries = (0..n * n)
        .map(|_| Complex::new(lit(u.sample(&mut rng)), lit(u.sample(&mut rng))))
        .collect();
    SquareComplexMatrix::new(n, entries)
}

/// All eigenvalues of a general square matrix: characteristic polynomial by
/// Faddeev–LeVerrier, roots by Durand–Kerner. Adequate for the desk-scale
/// dimensions this crate caps at.
pub fn eigenvalues<T: Scalar>(a: &SquareComplexMatrix<T>) -> Result<Vec<Complex<T>>> {
    let n = a.dim();
    if n == 1 {
        return Ok(vec![a.get(0, 0)]);
    }
    if n == 2 {
        let (l1, l2) = eigenvalues_2x2(a)?;
        return Ok(vec![l1, l2]);
    }
    // p(z) = z^n + c[0] z^{n-1} + ... + c[n-1]
    let mut coeffs: Vec<Complex<T>> = Vec::with_capacity(n);
    let mut m = a.clone();
    let mut ck = -m.trace();
    coeffs.push(ck);
    for k in 2..=n {
        m = a.mul(&m.shift(ck))?;
        ck = -m.trace() / Complex::new(T::from_usize(k).unwrap(), T::zero());
        coeffs.push(ck);
    }

    let scale = T::one()
        + coeffs
            .iter()
            .map(|c| c.norm())
            .fold(T::zero(), |s, t| s.max(t));
    let mut roots: Vec<Complex<T>> = (0..n)
        .map(|k| {
            Complex::from_polar(
                scale * lit::<T>(0.7),
                lit::<T>(0.9) + T::from_usize(k).unwrap() * T::TAU() / T::from_usize(n).unwrap(),
            )
        })
        .collect();
    let eval = |z: Complex<T>| {
        let mut p = Complex::new(T::one(), T::zero());
        for c in &coeffs {
            p = p * z + c;
        }
        p
    };
    let tol = lit::<T>(1e-14) * scale;
    for _ in 0..500 {
        let mut max_step = T::zero();
        for i in 0..n {
            let zi = roots[i];
            let mut denom = Complex::new(T::one(), T::zero());
            for j in 0..n {
                if j != i {
                    denom = denom * (zi - roots[j]);
                }
            }
            if denom.norm() == T::zero() {
                continue;
            }
            let step = eval(zi) / denom;
            roots[i] = zi - step;
            max_step = max_step.max(step.norm());
        }
        if max_step <= tol {
            break;
        }
    }
    Ok(roots)
}

pub mod json {
    //! Matrix JSON: {"n": 2, "entries": [[[re,im],...],...]} row-major.

    use super::*;
    use serde_json::{json, Value};

    pub fn to_json<T: Scalar>(m: &SquareComplexMatrix<T>) -> Value {
        let n = m.dim();
        let rows: Vec<Value> = (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| {
                            let z = m.get(i, j);
                            json!([z.re.to_f64().unwrap(), z.im.to_f64().unwrap()])
                        })
                        .collect(),
                )
            })
            .collect();
        json!({"n": n, "entries": rows})
    }

    pub fn from_json<T: Scalar>(v: &Value) -> Result<SquareComplexMatrix<T>> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("matrix JSON must be an object".into()))?;
        let n = obj
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing positive integer field \"n\"".into()))?
            as usize;
        let rows = obj
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing array field \"entries\"".into()))?;
        if rows.len() != n {
            return Err(Error::Parse(format!("expected {n} rows, got {}", rows.len())));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Parse("each row must be an array".into()))?;
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "expected {n} entries per row, got {}",
                    row.len()
                )));
            }
            for e in row {
                let pair = e
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| Error::Parse("each entry must be a [re,im] pair".into()))?;
                let re = pair[0]
                    .as_f64()
                    .ok_or_else(|| Error::Parse("entry parts must be numbers".into()))?;
                let im = pair[1]
                    .as_f64()
                    .ok_or_else(|| Error::Parse("entry parts must be numbers".into()))?;
                entries.push(Complex::new(lit::<T>(re), lit::<T>(im)));
            }
        }
        SquareComplexMatrix::new(n, entries)
    }

    pub fn parse<T: Scalar>(s: &str) -> Result<SquareComplexMatrix<T>> {
        let v: Value =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        from_json(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = SquareComplexMatrix<f64>;
    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    fn shifted_nilpotent() -> M {
        // [[0,1],[0,0]]
        M::from_parts(&[&[(0., 0.), (1., 0.)], &[(0., 0.), (0., 0.)]]).unwrap()
    }

    fn case_ii(b: f64) -> M {
        // [[1,b],[0,-1]]
        M::from_parts(&[&[(1., 0.), (b, 0.)], &[(0., 0.), (-1., 0.)]]).unwrap()
    }

    #[test]
    fn hermitian_parts_nilpotent() {
        let pair = hermitian_parts(&shifted_nilpotent());
        assert_eq!(pair.h1.get(0, 1), c(0.5, 0.0));
        assert_eq!(pair.h1.get(1, 0), c(0.5, 0.0));
        assert_eq!(pair.h1.get(0, 0), c(0.0, 0.0));
        assert_eq!(pair.h2.get(0, 1), c(0.0, -0.5));
        assert_eq!(pair.h2.get(1, 0), c(0.0, 0.5));
    }

    #[test]
    fn hermitian_parts_case_ii() {
        let pair = hermitian_parts(&case_ii(2.0));
        assert_eq!(pair.h1.get(0, 0), c(1.0, 0.0));
        assert_eq!(pair.h1.get(0, 1), c(1.0, 0.0));
        assert_eq!(pair.h1.get(1, 1), c(-1.0, 0.0));
        assert_eq!(pair.h2.get(0, 1), c(0.0, -1.0));
        assert_eq!(pair.h2.get(1, 0), c(0.0, 1.0));
    }

    #[test]
    fn hermitian_input_has_zero_h2() {
        let h = M::from_parts(&[&[(2., 0.), (1., 1.)], &[(1., -1.), (3., 0.)]]).unwrap();
        let pair = hermitian_parts(&h);
        assert!(pair.h2.frobenius_norm() < 1e-15);
        assert!(pair.h1.sub(&h).unwrap().frobenius_norm() < 1e-15);
    }

    #[test]
    fn hermitian_parts_reconstruct() {
        for seed in 0..20 {
            let a = random_matrix::<f64>(4, seed).unwrap();
            let pair = hermitian_parts(&a);
            let i = c(0.0, 1.0);
            let rec = pair.h1.add(&pair.h2.scale(i)).unwrap();
            assert!(rec.sub(&a).unwrap().frobenius_norm() <= 1e-14 * a.frobenius_norm());
        }
    }

    #[test]
    fn gram_trace_values() {
        assert_eq!(gram_trace(&shifted_nilpotent()), 1.0);
        assert_eq!(gram_trace(&M::identity(2).unwrap()), 2.0);
        let a = case_ii(2.0);
        assert_eq!(gram_trace(&a), 6.0);
        // independent route: trace(A*A)
        let g = a.adjoint().mul(&a).unwrap().trace();
        assert!((g.re - 6.0).abs() < 1e-12 && g.im.abs() < 1e-15);
    }

    #[test]
    fn eigenvalues_2x2_cases() {
        let (l1, l2) = eigenvalues_2x2(&shifted_nilpotent()).unwrap();
        assert_eq!(l1, c(0., 0.));
        assert_eq!(l2, c(0., 0.));

        for b in [0.5, 1.0, 2.0, 5.0] {
            let (l1, l2) = eigenvalues_2x2(&case_ii(b)).unwrap();
            assert!((l1 - c(1., 0.)).norm() < 1e-14);
            assert!((l2 - c(-1., 0.)).norm() < 1e-14);
        }

        let d = M::from_parts(&[&[(2., 0.), (0., 0.)], &[(0., 0.), (3., 0.)]]).unwrap();
        let (l1, l2) = eigenvalues_2x2(&d).unwrap();
        assert!((l1 - c(3., 0.)).norm() < 1e-14);
        assert!((l2 - c(2., 0.)).norm() < 1e-14);
    }

    #[test]
    fn eigenvalues_2x2_trace_det_property() {
        for seed in 0..200 {
            let a = random_matrix::<f64>(2, seed).unwrap();
            let (l1, l2) = eigenvalues_2x2(&a).unwrap();
            let tr = a.trace();
            let det = a.get(0, 0) * a.get(1, 1) - a.get(0, 1) * a.get(1, 0);
            let scale = 1.0 + tr.norm() + det.norm();
            assert!((l1 + l2 - tr).norm() <= 1e-12 * scale);
            assert!((l1 * l2 - det).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn eigenvalues_2x2_rejects_other_dims() {
        let a = M::identity(3).unwrap();
        assert!(matches!(eigenvalues_2x2(&a), Err(Error::Dimension(_))));
    }

    #[test]
    fn hermitian_eigen_2x2_offdiagonal() {
        let h = M::from_parts(&[&[(0., 0.), (0.5, 0.)], &[(0.5, 0.), (0., 0.)]]).unwrap();
        let pairs = hermitian_eigen(&h).unwrap();
        assert!((pairs[0].value - 0.5).abs() < 1e-14);
        assert!((pairs[1].value + 0.5).abs() < 1e-14);
    }

    #[test]
    fn hermitian_eigen_identity() {
        let pairs = hermitian_eigen(&M::identity(3).unwrap()).unwrap();
        for p in &pairs {
            assert!((p.value - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn hermitian_eigen_complex_2x2() {
        // [[2, 1+i],[1-i, 3]]: roots of z² − 5z + (6 − |1+i|²) = z² − 5z + 4,
        // i.e. 4 and 1; cross-checked against the 2x2 closed form below
        let h = M::from_parts(&[&[(2., 0.), (1., 1.)], &[(1., -1.), (3., 0.)]]).unwrap();
        let pairs = hermitian_eigen(&h).unwrap();
        assert!((pairs[0].value - 4.0).abs() < 1e-13);
        assert!((pairs[1].value - 1.0).abs() < 1e-13);
        let (l1, l2) = eigenvalues_2x2(&h).unwrap();
        assert!((l1 - c(4., 0.)).norm() < 1e-13 && l1.im.abs() < 1e-13);
        assert!((l2 - c(1., 0.)).norm() < 1e-13);
    }

    #[test]
    fn hermitian_eigen_residuals_and_orthogonality() {
        for seed in 0..30 {
            let a = random_matrix::<f64>(5, seed).unwrap();
            let h = hermitian_parts(&a).h1;
            let fro = h.frobenius_norm();
            let pairs = hermitian_eigen(&h).unwrap();
            let tr: f64 = h.trace().re;
            let sum: f64 = pairs.iter().map(|p| p.value).sum();
            assert!((sum - tr).abs() <= 1e-11 * fro);
            for p in &pairs {
                let nrm: f64 = p.vector.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                assert!((nrm - 1.0).abs() <= 1e-13);
                let hx = h.apply(&p.vector).unwrap();
                let res: f64 = hx
                    .iter()
                    .zip(&p.vector)
                    .map(|(y, x)| (y - x * c(p.value, 0.0)).norm_sqr())
                    .sum::<f64>()
                    .sqrt();
                assert!(res <= 1e-11 * fro, "residual {res} too large");
            }
            for i in 0..pairs.len() {
                for j in (i + 1)..pairs.len() {
                    let dot: C = pairs[i]
                        .vector
                        .iter()
                        .zip(&pairs[j].vector)
                        .map(|(x, y)| x.conj() * y)
                        .fold(C::new(0., 0.), |s, t| s + t);
                    assert!(dot.norm() <= 1e-10);
                }
            }
        }
    }

    #[test]
    fn hermitian_eigen_rejects_non_hermitian() {
        let a = shifted_nilpotent();
        assert!(matches!(hermitian_eigen(&a), Err(Error::Precondition(_))));
    }

    #[test]
    fn rayleigh_values() {
        let a = shifted_nilpotent();
        let s = 1.0 / 2f64.sqrt();
        let r = rayleigh(&a, &[c(s, 0.), c(s, 0.)]).unwrap();
        assert!((r - c(0.5, 0.)).norm() < 1e-15);

        let i2 = M::identity(2).unwrap();
        let x = random_unit_vector::<f64>(2, 3).unwrap();
        assert!((rayleigh(&i2, &x).unwrap() - c(1., 0.)).norm() < 1e-14);

        let d = M::from_parts(&[&[(0., 0.), (0., 0.)], &[(0., 0.), (1., 0.)]]).unwrap();
        let e1 = [c(1., 0.), c(0., 0.)];
        assert_eq!(rayleigh(&d, &e1).unwrap(), c(0., 0.));
    }

    #[test]
    fn rayleigh_unnormalized_and_zero() {
        let a = shifted_nilpotent();
        let r = rayleigh(&a, &[c(5., 0.), c(5., 0.)]).unwrap();
        assert!((r - c(0.5, 0.)).norm() < 1e-15);
        assert!(matches!(
            rayleigh(&a, &[c(0., 0.), c(0., 0.)]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rayleigh_of_hermitian_is_real() {
        for seed in 0..20 {
            let h = hermitian_parts(&random_matrix::<f64>(4, seed).unwrap()).h1;
            let x = random_unit_vector::<f64>(4, seed + 1000).unwrap();
            let r = rayleigh(&h, &x).unwrap();
            assert!(r.im.abs() <= 1e-13 * h.frobenius_norm());
        }
    }

    #[test]
    fn normality_checks() {
        assert!(!is_normal(&shifted_nilpotent(), 1e-12));
        let d = M::from_parts(&[&[(3., 1.), (0., 0.)], &[(0., 0.), (-2., 7.)]]).unwrap();
        assert!(is_normal(&d, 1e-12));
        let u = M::from_parts(&[&[(0., 0.), (1., 0.)], &[(-1., 0.), (0., 0.)]]).unwrap();
        assert!(is_normal(&u, 1e-12));
    }

    #[test]
    fn random_unit_vector_contracts() {
        let x1 = random_unit_vector::<f64>(2, 42).unwrap();
        let x2 = random_unit_vector::<f64>(2, 42).unwrap();
        assert_eq!(x1, x2);
        let nrm: f64 = x1.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert!((nrm - 1.0).abs() <= 1e-14);
        assert!(random_unit_vector::<f64>(0, 1).is_err());
    }

    #[test]
    fn random_unit_vector_rotation_invariance() {
        // E[x* diag(0,1) x] = 1/2 over rotation-invariant unit vectors
        let d = M::from_parts(&[&[(0., 0.), (0., 0.)], &[(0., 0.), (1., 0.)]]).unwrap();
        let mut rng = rng_for(7);
        let samples = 100_000;
        let mut acc = 0.0;
        for _ in 0..samples {
            let x = random_unit_vector_with::<f64>(2, &mut rng).unwrap();
            acc += rayleigh(&d, &x).unwrap().re;
        }
        let mean = acc / samples as f64;
        assert!((mean - 0.5).abs() < 0.01, "mean {mean}");
    }

    #[test]
    fn random_unitary_contracts() {
        for n in [1usize, 2, 4] {
            let u = random_unitary::<f64>(n, 11).unwrap();
            let gram = u.adjoint().mul(&u).unwrap();
            let dev = gram.sub(&M::identity(n).unwrap()).unwrap().frobenius_norm();
            assert!(dev <= 1e-12, "n={n} dev={dev}");
        }
        let u1 = random_unitary::<f64>(1, 5).unwrap();
        assert!((u1.get(0, 0).norm() - 1.0).abs() < 1e-14);
        let a = random_unitary::<f64>(3, 9).unwrap();
        let b = random_unitary::<f64>(3, 9).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn general_eigenvalues_match_known_cases() {
        let a = case_ii(2.0);
        let mut ev = eigenvalues(&a).unwrap();
        ev.sort_by(|x, y| y.re.partial_cmp(&x.re).unwrap());
        assert!((ev[0] - c(1., 0.)).norm() < 1e-12);
        assert!((ev[1] + c(1., 0.)).norm() < 1e-12);

        // diag(1, 2i, -3) embedded as 3x3
        let d = M::from_parts(&[
            &[(1., 0.), (0., 0.), (0., 0.)],
            &[(0., 0.), (0., 2.), (0., 0.)],
            &[(0., 0.), (0., 0.), (-3., 0.)],
        ])
        .unwrap();
        let ev = eigenvalues(&d).unwrap();
        for target in [c(1., 0.), c(0., 2.), c(-3., 0.)] {
            assert!(
                ev.iter().any(|z| (z - target).norm() < 1e-10),
                "missing {target}"
            );
        }
    }

    #[test]
    fn construction_errors() {
        assert!(SquareComplexMatrix::<f64>::new(0, vec![]).is_err());
        assert!(SquareComplexMatrix::<f64>::new(2, vec![C::new(0., 0.); 3]).is_err());
        assert!(SquareComplexMatrix::<f64>::new(17, vec![C::new(0., 0.); 17 * 17]).is_err());
        assert!(SquareComplexMatrix::<f64>::new(1, vec![C::new(f64::NAN, 0.)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = random_matrix::<f64>(3, 13).unwrap();
        let v = json::to_json(&a);
        let b = json::from_json::<f64>(&v).unwrap();
        assert!(a.sub(&b).unwrap().frobenius_norm() < 1e-15);
        assert!(json::parse::<f64>("{\"n\":2}").is_err());
        assert!(json::parse::<f64>("not json").is_err());
    }
}
