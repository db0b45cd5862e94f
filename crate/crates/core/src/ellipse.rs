//! The numerical range of a 2×2 matrix in closed form: an elliptical disk
//! with foci at the eigenvalues and minor axis √(tr(A*A) − |λ₁|² − |λ₂|²).

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::{eigenvalues_2x2, gram_trace, SquareComplexMatrix};
use crate::scalar::{lit, Scalar};

/// Degeneracy classification of an elliptical disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllipseKind {
    Point,
    Segment,
    Circle,
    Ellipse,
}

impl EllipseKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EllipseKind::Point => "point",
            EllipseKind::Segment => "segment",
            EllipseKind::Circle => "circle",
            EllipseKind::Ellipse => "ellipse",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "point" => Ok(EllipseKind::Point),
            "segment" => Ok(EllipseKind::Segment),
            "circle" => Ok(EllipseKind::Circle),
            "ellipse" => Ok(EllipseKind::Ellipse),
            other => Err(Error::Parse(format!("unknown ellipse kind {other:?}"))),
        }
    }
}

/// A filled ellipse in the complex plane, possibly degenerate.
#[derive(Debug, Clone)]
pub struct EllipseDisk<T> {
    pub center: Complex<T>,
    pub focus1: Complex<T>,
    pub focus2: Complex<T>,
    pub semi_major: T,
    pub semi_minor: T,
    /// Major-axis direction in [0, π); 0 when the foci coincide.
    pub rotation: T,
    pub kind: EllipseKind,
}

fn mod_pi<T: Scalar>(angle: T) -> T {
    let pi = T::PI();
    let mut a = angle % pi;
    if a < T::zero() {
        a = a + pi;
    }
    // map values that round up to π back to 0
    if (pi - a).abs() <= lit(1e-15) {
        a = T::zero();
    }
    a
}

// Classifies and canonicalizes the disk. The threshold is half-precision
// relative to the scale: semi axes and focal splits come out of square roots
// of rounded radicands, so eps-level input noise surfaces as √eps-level
// degeneracy noise, and the canonical representative (exact zeros, coincident
// foci) is the stable value.
fn build<T: Scalar>(
    focus1: Complex<T>,
    focus2: Complex<T>,
    semi_major: T,
    semi_minor: T,
    rotation: T,
    scale: T,
) -> EllipseDisk<T> {
    let tol = T::degenerate_tol() * (T::one() + scale);
    let half = Complex::new(lit::<T>(0.5), T::zero());
    let center = (focus1 + focus2) * half;
    let focal = (focus1 - focus2).norm();

    if semi_major <= tol {
        return EllipseDisk {
            center,
            focus1: center,
            focus2: center,
            semi_major: T::zero(),
            semi_minor: T::zero(),
            rotation: T::zero(),
            kind: EllipseKind::Point,
        };
    }
    if semi_minor <= tol {
        return EllipseDisk {
            center,
            focus1,
            focus2,
            semi_major: focal * lit::<T>(0.5),
            semi_minor: T::zero(),
            rotation: mod_pi(rotation),
            kind: EllipseKind::Segment,
        };
    }
    if focal <= tol {
        let r = (semi_major + semi_minor) * lit::<T>(0.5);
        return EllipseDisk {
            center,
            focus1: center,
            focus2: center,
            semi_major: r,
            semi_minor: r,
            rotation: T::zero(),
            kind: EllipseKind::Circle,
        };
    }
    EllipseDisk {
        center,
        focus1,
        focus2,
        semi_major,
        semi_minor,
        rotation: mod_pi(rotation),
        kind: EllipseKind::Ellipse,
    }
}

/// The numerical range of a 2×2 matrix as an elliptical disk.
///
/// The minor-axis radicand tr(A*A) − |λ₁|² − |λ₂|² is nonnegative in exact
/// arithmetic (it is the squared Frobenius norm of the strictly upper Schur
/// part); small floating-point negatives are clamped to zero, larger ones
/// are reported as inconsistencies.
pub fn elliptical_range<T: Scalar>(a: &SquareComplexMatrix<T>) -> Result<EllipseDisk<T>> {
    if a.dim() != 2 {
        return Err(Error::Dimension(format!(
            "elliptical range needs n = 2, got {}",
            a.dim()
        )));
    }
    let (l1, l2) = eigenvalues_2x2(a)?;
    let gram = gram_trace(a);
    let mut radicand = gram - l1.norm_sqr() - l2.norm_sqr();
    if radicand < T::zero() {
        if radicand >= -T::clamp_tol() * gram {
            radicand = T::zero();
        } else {
            return Err(Error::NumericalInconsistency(format!(
                "minor-axis radicand {radicand} below clamp window"
            )));
        }
    }
    let minor_axis = radicand.sqrt();
    let semi_minor = minor_axis * lit::<T>(0.5);
    let focal_half = (l1 - l2).norm() * lit::<T>(0.5);
    let semi_major = (semi_minor * semi_minor + focal_half * focal_half).sqrt();
    let rotation = (l1 - l2).arg();
    Ok(build(
        l1,
        l2,
        semi_major,
        semi_minor,
        rotation,
        a.frobenius_norm(),
    ))
}

/// Focal-sum membership: |z − f₁| + |z − f₂| ≤ 2·semi_major + tol. Covers the
/// degenerate kinds automatically.
pub fn contains<T: Scalar>(e: &EllipseDisk<T>, z: Complex<T>, tol: T) -> bool {
    let s = (z - e.focus1).norm() + (z - e.focus2).norm();
    s <= e.semi_major + e.semi_major + tol
}

/// Closed-form support function of the disk:
/// Re(e^{−iθ}c) + √(a²cos²(θ−r) + b²sin²(θ−r)).
pub fn ellipse_support<T: Scalar>(e: &EllipseDisk<T>, theta: T) -> T {
    let c = (e.center * Complex::from_polar(T::one(), -theta)).re;
    let phi = theta - e.rotation;
    let (s, co) = phi.sin_cos();
    c + (e.semi_major * e.semi_major * co * co + e.semi_minor * e.semi_minor * s * s).sqrt()
}

/// The disk of αA + βI: foci map affinely, axes scale by |α|, the rotation
/// shifts by arg(α). α = 0 collapses to a point.
pub fn affine_image<T: Scalar>(
    e: &EllipseDisk<T>,
    alpha: Complex<T>,
    beta: Complex<T>,
) -> EllipseDisk<T> {
    let f1 = alpha * e.focus1 + beta;
    let f2 = alpha * e.focus2 + beta;
    let scale = alpha.norm();
    let semi_major = e.semi_major * scale;
    let semi_minor = e.semi_minor * scale;
    let rotation = e.rotation + alpha.arg();
    // classification scale follows the transformed disk
    let scale = f1.norm() + f2.norm() + semi_major;
    build(f1, f2, semi_major, semi_minor, rotation, scale)
}

pub mod json {
    //! Ellipse JSON: {"center":[re,im], "foci":[[re,im],[re,im]],
    //! "semi_major":x, "semi_minor":y, "rotation":r, "kind":"ellipse"}.

    use super::*;
    use serde_json::{json, Value};

    fn pair<T: Scalar>(z: Complex<T>) -> Value {
        json!([z.re.to_f64().unwrap(), z.im.to_f64().unwrap()])
    }

    pub fn to_json<T: Scalar>(e: &EllipseDisk<T>) -> Value {
        json!({
            "center": pair(e.center),
            "foci": [pair(e.focus1), pair(e.focus2)],
            "semi_major": e.semi_major.to_f64().unwrap(),
            "semi_minor": e.semi_minor.to_f64().unwrap(),
            "rotation": e.rotation.to_f64().unwrap(),
            "kind": e.kind.as_str(),
        })
    }
}
