//! Scalar abstraction: the real field underlying all complex arithmetic.
//!
//! Everything in this crate is generic over `Scalar` so the same code runs
//! in f32 and f64. Tolerances are scale-free constants tied to the precision
//! of the scalar type, so they live here as associated functions rather than
//! as free consts.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar type for matrix entries, polynomial coefficients and geometry.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
    /// Jacobi sweep convergence: largest off-diagonal magnitude relative to ‖H‖_F.
    fn jacobi_off_tol() -> Self;
    /// Hermitian precondition check, relative to ‖H‖_F.
    fn hermitian_tol() -> Self;
    /// Imaginary residue allowed when coercing a complex coefficient to real,
    /// relative to the largest coefficient magnitude.
    fn residue_tol() -> Self;
    /// Degeneracy classification (ellipse kind, hull collinearity), relative.
    fn classify_tol() -> Self;
    /// Clamp window for radicands that are nonnegative in exact arithmetic.
    fn clamp_tol() -> Self;
    /// Singularity threshold for conic dualization, relative to entry scale cubed.
    fn singular_tol() -> Self;
    /// Degeneracy threshold for quantities obtained through a square root of
    /// a rounded radicand (half the precision of the scalar type).
    fn degenerate_tol() -> Self;
}

impl Scalar for f64 {
    fn jacobi_off_tol() -> Self {
        1e-13
    }
    fn hermitian_tol() -> Self {
        1e-12
    }
    fn residue_tol() -> Self {
        1e-10
    }
    fn classify_tol() -> Self {
        1e-12
    }
    fn clamp_tol() -> Self {
        1e-10
    }
    fn singular_tol() -> Self {
        1e-12
    }
    fn degenerate_tol() -> Self {
        1e-6
    }
}

impl Scalar for f32 {
    fn jacobi_off_tol() -> Self {
        1e-6
    }
    fn hermitian_tol() -> Self {
        1e-5
    }
    fn residue_tol() -> Self {
        1e-4
    }
    fn classify_tol() -> Self {
        1e-5
    }
    fn clamp_tol() -> Self {
        1e-4
    }
    fn singular_tol() -> Self {
        1e-6
    }
    fn degenerate_tol() -> Self {
        1e-3
    }
}

/// Shorthand for pulling an f64 literal into the scalar type.
#[inline]
pub fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in scalar type")
}
