//! Boundary-generating curve samples and the convex hull that equals the
//! numerical range.
//!
//! For each direction θ the rotated Hermitian part cos(θ)H₁ + sin(θ)H₂ is
//! diagonalized; each eigenpair contributes one point x*Ax of the real
//! boundary-generating curve, and the largest eigenvalue is the support
//! function of F(A). The convex hull of the branch-0 samples traces ∂F(A).

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::{hermitian_parts, hermitian_eigen, rayleigh, SquareComplexMatrix};
use crate::scalar::{lit, Scalar};

/// One sample of the boundary-generating curve.
#[derive(Debug, Clone)]
pub struct BoundarySample<T> {
    /// Sweep angle in [0, 2π).
    pub theta: T,
    /// Eigenvalue branch, 0 = largest.
    pub branch: usize,
    /// The curve point x*Ax.
    pub point: Complex<T>,
    /// The eigenvalue h_branch(θ); for branch 0 this is the support function.
    pub support: T,
}

/// A convex polygon with counterclockwise vertices. One- and two-vertex
/// polygons are legal degenerate values (point and segment).
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon<T> {
    vertices: Vec<Complex<T>>,
    degenerate: bool,
}

impl<T: Scalar> ConvexPolygon<T> {
    pub fn vertices(&self) -> &[Complex<T>] {
        &self.vertices
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// How far outside the polygon a point lies: 0 when inside, otherwise the
    /// largest violation of a supporting edge (a lower bound on the distance
    /// to the polygon for true polygons, the exact distance for degenerate
    /// ones).
    pub fn outward_deviation(&self, p: Complex<T>) -> T {
        match self.vertices.len() {
            1 => (p - self.vertices[0]).norm(),
            2 => segment_distance(self.vertices[0], self.vertices[1], p),
            _ => {
                if self.contains_fast(p) {
                    T::zero()
                } else {
                    let m = self.vertices.len();
                    let mut worst = T::zero();
                    for i in 0..m {
                        let a = self.vertices[i];
                        let b = self.vertices[(i + 1) % m];
                        let e = b - a;
                        let len = e.norm();
                        if len.is_zero() {
                            continue;
                        }
                        let violation = -cross(e, p - a) / len;
                        worst = worst.max(violation);
                    }
                    worst
                }
            }
        }
    }

    // O(log m) membership by wedge binary search from vertex 0
    fn contains_fast(&self, p: Complex<T>) -> bool {
        let v = &self.vertices;
        let m = v.len();
        let d = p - v[0];
        if cross(v[1] - v[0], d) < T::zero() || cross(v[m - 1] - v[0], d) > T::zero() {
            return false;
        }
        let mut lo = 1;
        let mut hi = m - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if cross(v[mid] - v[0], d) >= T::zero() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        cross(v[hi] - v[lo], p - v[lo]) >= T::zero()
    }
}

#[inline]
fn cross<T: Scalar>(a: Complex<T>, b: Complex<T>) -> T {
    a.re * b.im - a.im * b.re
}

fn segment_distance<T: Scalar>(a: Complex<T>, b: Complex<T>, p: Complex<T>) -> T {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2.is_zero() {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    let t = t.max(T::zero()).min(T::one());
    (p - (a + ab * Complex::new(t, T::zero()))).norm()
}

/// Support function of F(A) in direction θ: the largest eigenvalue of
/// cos(θ)H₁ + sin(θ)H₂, which equals max over F(A) of Re(e^{−iθ}z).
pub fn support_function<T: Scalar>(a: &SquareComplexMatrix<T>, theta: T) -> Result<T> {
    let pair = hermitian_parts(a);
    let pairs = hermitian_eigen(&pair.rotate(theta))?;
    Ok(pairs[0].value)
}

/// Samples the full real boundary-generating curve on the uniform grid
/// θ_j = 2πj/m, all eigenvalue branches. Emits exactly n·m samples ordered
/// by (θ index, branch).
pub fn kippenhahn_points<T: Scalar>(
    a: &SquareComplexMatrix<T>,
    m: usize,
) -> Result<Vec<BoundarySample<T>>> {
    if m < 3 {
        return Err(Error::Domain(format!("sample count {m} < 3")));
    }
    let pair = hermitian_parts(a);
    let mut out = Vec::with_capacity(a.dim() * m);
    let step = T::TAU() / T::from_usize(m).unwrap();
    for j in 0..m {
        let theta = step * T::from_usize(j).unwrap();
        let eig = hermitian_eigen(&pair.rotate(theta))?;
        for (branch, ep) in eig.iter().enumerate() {
            let point = rayleigh(a, &ep.vector)?;
            out.push(BoundarySample {
                theta,
                branch,
                point,
                support: ep.value,
            });
        }
    }
    Ok(out)
}

/// The branch-0 subsequence of [`kippenhahn_points`]: m samples tracing
/// ∂F(A) counterclockwise.
pub fn fov_boundary<T: Scalar>(
    a: &SquareComplexMatrix<T>,
    m: usize,
) -> Result<Vec<BoundarySample<T>>> {
    Ok(kippenhahn_points(a, m)?
        .into_iter()
        .filter(|s| s.branch == 0)
        .collect())
}

/// Monotone-chain convex hull. Collinear boundary points are dropped;
/// all-equal and all-collinear inputs yield degenerate 1- or 2-vertex
/// polygons.
pub fn convex_hull<T: Scalar>(points: &[Complex<T>]) -> Result<ConvexPolygon<T>> {
    if points.is_empty() {
        return Err(Error::Domain("convex hull of no points".into()));
    }
    let mut pts: Vec<Complex<T>> = points.to_vec();
    pts.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    pts.dedup_by(|a, b| a == b);

    let scale = pts
        .iter()
        .map(|p| p.norm())
        .fold(T::zero(), |s, t| s.max(t))
        + T::one();
    let tol = T::classify_tol() * scale * scale;

    if pts.len() == 1 {
        return Ok(ConvexPolygon {
            vertices: pts,
            degenerate: true,
        });
    }

    let build = |iter: &mut dyn Iterator<Item = Complex<T>>| {
        let mut chain: Vec<Complex<T>> = Vec::new();
        for p in iter {
            while chain.len() >= 2 {
                let a = chain[chain.len() - 2];
                let b = chain[chain.len() - 1];
                if cross(b - a, p - a) <= tol {
                    chain.pop();
                } else {
                    break;
                }
            }
            chain.push(p);
        }
        chain
    };
    let lower = build(&mut pts.iter().copied());
    let upper = build(&mut pts.iter().rev().copied());

    let mut vertices = lower;
    vertices.pop();
    vertices.extend(upper.iter().take(upper.len().saturating_sub(1)).copied());

    if vertices.len() <= 1 {
        // all points collinear: keep the two extremes
        let first = *pts.first().unwrap();
        let last = *pts.last().unwrap();
        return Ok(ConvexPolygon {
            vertices: vec![first, last],
            degenerate: true,
        });
    }
    let degenerate = vertices.len() < 3;
    Ok(ConvexPolygon {
        vertices,
        degenerate,
    })
}

pub mod csv {
    //! Boundary CSV: header "theta,branch,re,im,support", one row per sample,
    //! numbers with 12 significant digits.

    use super::*;

    pub fn to_csv<T: Scalar>(samples: &[BoundarySample<T>]) -> String {
        let mut out = String::from("theta,branch,re,im,support\n");
        for s in samples {
            out.push_str(&format!(
                "{:.11e},{},{:.11e},{:.11e},{:.11e}\n",
                s.theta.to_f64().unwrap(),
                s.branch,
                s.point.re.to_f64().unwrap(),
                s.point.im.to_f64().unwrap(),
                s.support.to_f64().unwrap()
            ));
        }
        out
    }

    pub fn from_csv<T: Scalar>(text: &str) -> Result<Vec<BoundarySample<T>>> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty CSV".into()))?;
        if header.trim() != "theta,branch,re,im,support" {
            return Err(Error::Parse(format!("unexpected CSV header: {header}")));
        }
        let mut samples = Vec::new();
        for (lineno, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 5 {
                return Err(Error::Parse(format!(
                    "line {}: expected 5 fields, got {}",
                    lineno + 2,
                    fields.len()
                )));
            }
            let num = |s: &str| -> Result<T> {
                s.trim()
                    .parse::<f64>()
                    .map(lit::<T>)
                    .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 2)))
            };
            let branch = fields[1]
                .trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 2)))?;
            samples.push(BoundarySample {
                theta: num(fields[0])?,
                branch,
                point: Complex::new(num(fields[2])?, num(fields[3])?),
                support: num(fields[4])?,
            });
        }
        Ok(samples)
    }
}
