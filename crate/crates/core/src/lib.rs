//! Numerical ranges of complex matrices.
//!
//! This crate computes the field of values F(A) = { x*Ax : ‖x‖ = 1 } of a
//! small complex matrix three independent ways and checks them against each
//! other:
//!
//! * [`ellipse`] — the closed form for 2×2 matrices: an elliptical disk with
//!   foci at the eigenvalues and minor axis √(tr(A*A) − |λ₁|² − |λ₂|²).
//! * [`kippenhahn`] — the boundary-generating curve for any small n: sweep
//!   directions θ, diagonalize cos(θ)H₁ + sin(θ)H₂, and hull the Rayleigh
//!   points of the eigenvectors.
//! * [`poly`] — the pencil determinant det(H₁u + H₂v + I·w) as an explicit
//!   homogeneous polynomial, with exact conic dualization by the adjugate
//!   when n = 2.
//!
//! [`verify`] packages the cross-checks as structured reports, and the
//! `numrange` binary exposes everything on the command line.
//!
//! All numerics are generic over the real scalar via [`scalar::Scalar`];
//! the `*64` aliases below fix f64, which the tolerances are calibrated for.

pub mod ellipse;
pub mod error;
pub mod kippenhahn;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod svg;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// f64 complex number.
pub type Complex64 = num_complex::Complex<f64>;
/// f64 matrix.
pub type Matrix64 = matrix::SquareComplexMatrix<f64>;
/// f64 Hermitian decomposition.
pub type HermitianPair64 = matrix::HermitianPair<f64>;
/// f64 homogeneous trivariate polynomial.
pub type Poly64 = poly::HomogeneousTrivariatePoly<f64>;
/// f64 conic.
pub type ConicMatrix64 = poly::ConicMatrix<f64>;
/// f64 elliptical disk.
pub type EllipseDisk64 = ellipse::EllipseDisk<f64>;
/// f64 boundary sample.
pub type BoundarySample64 = kippenhahn::BoundarySample<f64>;
/// f64 convex polygon.
pub type ConvexPolygon64 = kippenhahn::ConvexPolygon<f64>;
/// f64 check report.
pub type CheckReport64 = verify::CheckReport<f64>;
