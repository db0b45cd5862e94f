//! Runnable verification oracles with structured reports.
//!
//! Each check pits a closed-form construction against an independent route:
//! brute-force Rayleigh sampling, the Hermitian-pencil support function, the
//! tangential-root identity, or the adjugate identity adj(M)·M = det(M)·I.

use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ellipse::{affine_image, ellipse_support, elliptical_range};
use crate::error::{Error, Result};
use crate::matrix::{
    hermitian_parts, hermitian_eigen, random_unit_vector_with, random_unitary, rayleigh,
    SquareComplexMatrix,
};
use crate::poly::{adjugate, evaluate, pencil_determinant, ConicMatrix};
use crate::scalar::Scalar;

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct CheckReport<T> {
    pub name: String,
    pub passed: bool,
    pub max_deviation: T,
    pub tolerance: T,
    pub samples: usize,
    pub details: String,
}

impl<T: Scalar> CheckReport<T> {
    pub fn new(
        name: impl Into<String>,
        max_deviation: T,
        tolerance: T,
        samples: usize,
        details: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            passed: max_deviation <= tolerance,
            max_deviation,
            tolerance,
            samples,
            details: details.into(),
        }
    }
}

fn grid<T: Scalar>(m: usize) -> impl Iterator<Item = T> {
    let step = T::TAU() / T::from_usize(m).unwrap();
    (0..m).map(move |j| step * T::from_usize(j).unwrap())
}

fn sorted_foci<T: Scalar>(f1: Complex<T>, f2: Complex<T>) -> [Complex<T>; 2] {
    if (f1.re, f1.im) <= (f2.re, f2.im) {
        [f1, f2]
    } else {
        [f2, f1]
    }
}

/// Brute-force containment: random Rayleigh quotients against the focal-sum
/// membership criterion of the closed-form disk.
pub fn check_containment<T: Scalar>(
    a: &SquareComplexMatrix<T>,
    num_samples: usize,
    seed: u64,
    tol: T,
) -> Result<CheckReport<T>> {
    let e = elliptical_range(a)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = T::zero();
    let two_a = e.semi_major + e.semi_major;
    for _ in 0..num_samples {
        let x = random_unit_vector_with::<T>(a.dim(), &mut rng)?;
        let z = rayleigh(a, &x)?;
        let excess = (z - e.focus1).norm() + (z - e.focus2).norm() - two_a;
        worst = worst.max(excess);
    }
    Ok(CheckReport::new(
        "containment",
        worst,
        tol,
        num_samples,
        "max focal-sum excess of random Rayleigh quotients over 2a",
    ))
}

/// Closed-form disk support versus the Hermitian-pencil support function,
/// over a uniform angle grid.
pub fn check_support_match<T: Scalar>(
    a: &SquareComplexMatrix<T>,
    m: usize,
    tol: T,
) -> Result<CheckReport<T>> {
    let e = elliptical_range(a)?;
    let pair = hermitian_parts(a);
    let mut worst = T::zero();
    for theta in grid::<T>(m) {
        let lhs = ellipse_support(&e, theta);
        let rhs = hermitian_eigen(&pair.rotate(theta))?[0].value;
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(CheckReport::new(
        "support_match",
        worst,
        tol,
        m,
        "max |ellipse support − pencil support| over the angle grid",
    ))
}

/// Every eigenvalue of the rotated Hermitian part is a root of the
/// boundary-generating polynomial along its direction.
pub fn check_tangential_roots<T: Scalar>(
    a: &SquareComplexMatrix<T>,
    m: usize,
    tol: T,
) -> Result<CheckReport<T>> {
    if a.dim() > 8 {
        return Err(Error::Dimension(format!(
            "tangential-root check capped at n = 8, got {}",
            a.dim()
        )));
    }
    let pair = hermitian_parts(a);
    let p = pencil_determinant(&pair)?;
    let scale = p.coeff_scale();
    let mut worst = T::zero();
    let mut samples = 0;
    for theta in grid::<T>(m) {
        for ep in hermitian_eigen(&pair.rotate(theta))? {
            let val = evaluate(&p, theta.cos(), theta.sin(), -ep.value);
            worst = worst.max(val.abs() / scale);
            samples += 1;
        }
    }
    Ok(CheckReport::new(
        "tangential_roots",
        worst,
        tol,
        samples,
        "max |P(cosθ, sinθ, −h)| over grid angles and branches, relative to coefficient scale",
    ))
}

/// F(αA + βI) = αF(A) + β, compared field-by-field on the closed-form disks.
pub fn check_affine_covariance<T: Scalar>(
    a: &SquareComplexMatrix<T>,
    alpha: Complex<T>,
    beta: Complex<T>,
    tol: T,
) -> Result<CheckReport<T>> {
    let direct = elliptical_range(&a.scale(alpha).shift(beta))?;
    let mapped = affine_image(&elliptical_range(a)?, alpha, beta);
    let fd = sorted_foci(direct.focus1, direct.focus2);
    let fm = sorted_foci(mapped.focus1, mapped.focus2);
    let mut worst = (direct.center - mapped.center).norm();
    worst = worst
        .max((fd[0] - fm[0]).norm())
        .max((fd[1] - fm[1]).norm())
        .max((direct.semi_major - mapped.semi_major).abs())
        .max((direct.semi_minor - mapped.semi_minor).abs());
    Ok(CheckReport::new(
        "affine_covariance",
        worst,
        tol,
        1,
        "field deviation between the disk of αA+βI and the affine image of the disk of A",
    ))
}

/// F(U*AU) = F(A) for a seeded random unitary U.
pub fn check_unitary_invariance<T: Scalar>(
    a: &SquareComplexMatrix<T>,
    seed: u64,
    tol: T,
) -> Result<CheckReport<T>> {
    let u = random_unitary::<T>(a.dim(), seed)?;
    let b = u.adjoint().mul(a)?.mul(&u)?;
    let ea = elliptical_range(a)?;
    let eb = elliptical_range(&b)?;
    let fa = sorted_foci(ea.focus1, ea.focus2);
    let fb = sorted_foci(eb.focus1, eb.focus2);
    let mut worst = (ea.center - eb.center).norm();
    worst = worst
        .max((fa[0] - fb[0]).norm())
        .max((fa[1] - fb[1]).norm())
        .max((ea.semi_major - eb.semi_major).abs())
        .max((ea.semi_minor - eb.semi_minor).abs());
    Ok(CheckReport::new(
        "unitary_invariance",
        worst,
        tol,
        1,
        "field deviation between the disks of A and U*AU",
    ))
}

/// adj(adj(C)) = det(C)·C, the conic form of biduality.
pub fn check_biduality<T: Scalar>(c: &ConicMatrix<T>, tol: T) -> Result<CheckReport<T>> {
    let det = c.det();
    let scale = c.scale();
    if det.abs() <= T::singular_tol() * scale * scale * scale {
        return Err(Error::Degenerate("biduality check needs a nonsingular conic".into()));
    }
    let inner = ConicMatrix::new(adjugate(c))?;
    let outer = adjugate(&inner);
    let denom = det.abs() * scale;
    let mut worst = T::zero();
    for i in 0..3 {
        for j in 0..3 {
            let dev = (outer[i][j] - det * c.get(i, j)).abs() / denom;
            worst = worst.max(dev);
        }
    }
    Ok(CheckReport::new(
        "biduality",
        worst,
        tol,
        9,
        "entrywise relative deviation of adj(adj(C)) from det(C)·C",
    ))
}

/// The standard suite the CLI runs on one input matrix.
pub fn default_suite<T: Scalar>(
    a: &SquareComplexMatrix<T>,
    grid: usize,
    seed: u64,
    tol: T,
) -> Result<Vec<CheckReport<T>>> {
    let mut reports = Vec::new();
    let scale = T::one() + a.frobenius_norm();
    reports.push(check_tangential_roots(a, grid.min(360), tol)?);
    if a.dim() == 2 {
        reports.push(check_support_match(a, grid, tol * scale)?);
        reports.push(check_containment(a, 10_000, seed, tol * scale)?);
        reports.push(check_affine_covariance(
            a,
            Complex::new(T::from_f64(2.0).unwrap(), T::one()),
            Complex::new(-T::one(), T::from_f64(0.5).unwrap()),
            tol * scale,
        )?);
        reports.push(check_unitary_invariance(a, seed, tol * scale)?);
        let pair = hermitian_parts(a);
        let p = pencil_determinant(&pair)?;
        let conic = crate::poly::conic_of(&p)?;
        match check_biduality(&conic, tol) {
            Ok(r) => reports.push(r),
            Err(Error::Degenerate(_)) => {} // normal matrices have a singular pencil conic
            Err(e) => return Err(e),
        }
    }
    Ok(reports)
}

pub mod json {
    //! Report JSON: one object per check; a suite is a JSON array.

    use super::*;
    use serde_json::{json, Value};

    pub fn to_json<T: Scalar>(r: &CheckReport<T>) -> Value {
        json!({
            "name": r.name,
            "passed": r.passed,
            "max_deviation": r.max_deviation.to_f64().unwrap(),
            "tolerance": r.tolerance.to_f64().unwrap(),
            "samples": r.samples,
            "details": r.details,
        })
    }

    pub fn suite_to_json<T: Scalar>(reports: &[CheckReport<T>]) -> Value {
        Value::Array(reports.iter().map(to_json).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::random_matrix;

    type M = SquareComplexMatrix<f64>;
    type C = Complex<f64>;

    fn nilpotent() -> M {
        M::from_parts(&[&[(0., 0.), (1., 0.)], &[(0., 0.), (0., 0.)]]).unwrap()
    }

    fn shifted(b: f64) -> M {
        M::from_parts(&[&[(0., 0.), (b, 0.)], &[(0., 0.), (0., 0.)]]).unwrap()
    }

    fn involution(lambda: f64) -> M {
        M::from_parts(&[&[(lambda, 0.), (1., 0.)], &[(0., 0.), (-lambda, 0.)]]).unwrap()
    }

    #[test]
    fn containment_golden() {
        let r = check_containment(&nilpotent(), 10_000, 1, 1e-9).unwrap();
        assert!(r.passed);
        assert!(r.max_deviation <= 1e-12);

        let r = check_containment(&M::identity(2).unwrap(), 100, 3, 1e-12).unwrap();
        assert!(r.passed);

        let d = M::from_parts(&[&[(0., 0.), (0., 0.)], &[(0., 0.), (1., 0.)]]).unwrap();
        let r = check_containment(&d, 10_000, 9, 1e-9).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn support_match_golden() {
        for (a, name) in [
            (nilpotent(), "case i"),
            (
                M::from_parts(&[&[(1., 0.), (2., 0.)], &[(0., 0.), (-1., 0.)]]).unwrap(),
                "case ii",
            ),
            (
                M::from_parts(&[&[(0., 0.), (0., 0.)], &[(0., 0.), (1., 0.)]]).unwrap(),
                "segment",
            ),
        ] {
            let r = check_support_match(&a, 720, 1e-9).unwrap();
            assert!(r.passed, "{name}: deviation {}", r.max_deviation);
        }
    }

    #[test]
    fn tangential_roots_cases() {
        let r = check_tangential_roots(&nilpotent(), 360, 1e-9).unwrap();
        assert!(r.passed);
        assert_eq!(r.samples, 720);

        let a = random_matrix::<f64>(3, 77).unwrap();
        let r = check_tangential_roots(&a, 360, 1e-8).unwrap();
        assert!(r.passed, "deviation {}", r.max_deviation);

        let r = check_tangential_roots(&M::identity(2).unwrap(), 4, 1e-12).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn tangential_roots_normal_and_nonnormal_up_to_5() {
        for n in 2..=5usize {
            let a = random_matrix::<f64>(n, 1234 + n as u64).unwrap();
            let r = check_tangential_roots(&a, 90, 1e-8).unwrap();
            assert!(r.passed, "n={n} deviation {}", r.max_deviation);
        }
    }

    #[test]
    fn affine_covariance_reduction_steps() {
        // rescaling by 1/b for the shifted nilpotent
        let b = 3.0;
        let r = check_affine_covariance(
            &shifted(b),
            C::new(1.0 / b, 0.0),
            C::new(0.0, 0.0),
            1e-10,
        )
        .unwrap();
        assert!(r.passed);

        // rescaling by 1/λ for the trace-zero triangular matrix
        let lambda = 2.0;
        let r = check_affine_covariance(
            &involution(lambda),
            C::new(1.0 / lambda, 0.0),
            C::new(0.0, 0.0),
            1e-10,
        )
        .unwrap();
        assert!(r.passed);

        // trace-zero reduction recenters the disk at the origin
        let a = random_matrix::<f64>(2, 55).unwrap();
        let half_tr = a.trace() * C::new(0.5, 0.0);
        let r = check_affine_covariance(&a, C::new(1.0, 0.0), -half_tr, 1e-10).unwrap();
        assert!(r.passed);
        let e = elliptical_range(&a.shift(-half_tr)).unwrap();
        assert!(e.center.norm() < 1e-12);
    }

    #[test]
    fn unitary_invariance_cases() {
        let r = check_unitary_invariance(&nilpotent(), 7, 1e-9).unwrap();
        assert!(r.passed);

        let normal = M::from_parts(&[&[(1., 0.), (0., 0.)], &[(0., 0.), (0., 1.)]]).unwrap();
        let r = check_unitary_invariance(&normal, 11, 1e-9).unwrap();
        assert!(r.passed);

        // determinism
        let a = random_matrix::<f64>(2, 21).unwrap();
        let r1 = check_unitary_invariance(&a, 5, 1e-9).unwrap();
        let r2 = check_unitary_invariance(&a, 5, 1e-9).unwrap();
        assert_eq!(r1.max_deviation, r2.max_deviation);
    }

    #[test]
    fn biduality_cases() {
        let c = ConicMatrix::new([[-0.25, 0.0, 0.0], [0.0, -0.25, 0.0], [0.0, 0.0, 1.0]])
            .unwrap();
        assert!(check_biduality(&c, 1e-12).unwrap().passed);

        let i = ConicMatrix::new([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]).unwrap();
        let r = check_biduality(&i, 1e-15).unwrap();
        assert!(r.passed);
        assert_eq!(r.max_deviation, 0.0);

        let s = ConicMatrix::new([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 0.0]]).unwrap();
        assert!(matches!(check_biduality(&s, 1e-11), Err(Error::Degenerate(_))));
    }

    #[test]
    fn report_pass_consistency() {
        let r = CheckReport::new("x", 2.0, 1.0, 1, "");
        assert!(!r.passed);
        let r = CheckReport::new("x", 0.5, 1.0, 1, "");
        assert!(r.passed);
    }

    #[test]
    fn suite_json_shape() {
        let reports = default_suite(&nilpotent(), 90, 0, 1e-9).unwrap();
        assert!(reports.iter().all(|r| r.passed));
        let v = json::suite_to_json(&reports);
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), reports.len());
        assert!(arr[0]["name"].is_string());
        assert!(arr[0]["passed"].as_bool().unwrap());
    }
}
