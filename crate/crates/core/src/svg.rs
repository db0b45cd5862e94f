//! Static SVG rendering of a numerical range: hull polygon, boundary
//! samples, and eigenvalue/focus markers.
//!
//! The y-axis is flipped so mathematical orientation matches the picture,
//! and the viewport is padded 10% beyond the hull bounding box.

use num_complex::Complex;

use crate::kippenhahn::{BoundarySample, ConvexPolygon};
use crate::scalar::Scalar;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 640.0;

struct Frame {
    min_x: f64,
    min_y: f64,
    scale: f64,
}

impl Frame {
    fn fit(points: impl Iterator<Item = (f64, f64)>) -> Frame {
        let mut min_x = f64::INFINITY;
        let mut max_x = f64::NEG_INFINITY;
        let mut min_y = f64::INFINITY;
        let mut max_y = f64::NEG_INFINITY;
        for (x, y) in points {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        if !min_x.is_finite() {
            (min_x, max_x, min_y, max_y) = (-1.0, 1.0, -1.0, 1.0);
        }
        let span_x = (max_x - min_x).max(1e-9);
        let span_y = (max_y - min_y).max(1e-9);
        let pad = 0.1 * span_x.max(span_y);
        min_x -= pad;
        max_x += pad;
        min_y -= pad;
        max_y += pad;
        let scale = (WIDTH / (max_x - min_x)).min(HEIGHT / (max_y - min_y));
        Frame { min_x, min_y, scale }
    }

    fn map(&self, z: (f64, f64)) -> (f64, f64) {
        let x = (z.0 - self.min_x) * self.scale;
        // flip y
        let y = HEIGHT - (z.1 - self.min_y) * self.scale;
        (x, y)
    }
}

fn to_xy<T: Scalar>(z: Complex<T>) -> (f64, f64) {
    (z.re.to_f64().unwrap(), z.im.to_f64().unwrap())
}

/// Renders the field-of-values picture. One `<circle class="sample">` per
/// boundary sample, exactly one `<path class="hull">`, and one
/// `<circle class="eig">` per marker.
pub fn render<T: Scalar>(
    samples: &[BoundarySample<T>],
    hull: &ConvexPolygon<T>,
    markers: &[Complex<T>],
) -> String {
    let frame = Frame::fit(
        samples
            .iter()
            .map(|s| to_xy(s.point))
            .chain(hull.vertices().iter().map(|&v| to_xy(v)))
            .chain(markers.iter().map(|&m| to_xy(m))),
    );

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // hull path, closed
    let mut d = String::new();
    for (i, &v) in hull.vertices().iter().enumerate() {
        let (x, y) = frame.map(to_xy(v));
        d.push_str(&format!("{}{x:.3} {y:.3} ", if i == 0 { "M" } else { "L" }));
    }
    d.push('Z');
    out.push_str(&format!(
        "<path class=\"hull\" d=\"{d}\" fill=\"#cfe2ff\" fill-opacity=\"0.5\" \
         stroke=\"#1d4ed8\" stroke-width=\"1.5\"/>\n"
    ));

    for s in samples {
        let (x, y) = frame.map(to_xy(s.point));
        out.push_str(&format!(
            "<circle class=\"sample\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"1.5\" fill=\"#1d4ed8\"/>\n"
        ));
    }
    for &m in markers {
        let (x, y) = frame.map(to_xy(m));
        out.push_str(&format!(
            "<circle class=\"eig\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\" fill=\"#dc2626\"/>\n"
        ));
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kippenhahn::{convex_hull, fov_boundary};
    use crate::matrix::{eigenvalues, SquareComplexMatrix};

    #[test]
    fn marker_and_path_counts() {
        let a = SquareComplexMatrix::<f64>::from_parts(&[
            &[(0., 0.), (1., 0.)],
            &[(0., 0.), (0., 0.)],
        ])
        .unwrap();
        let m = 90;
        let boundary = fov_boundary(&a, m).unwrap();
        let pts: Vec<_> = boundary.iter().map(|s| s.point).collect();
        let hull = convex_hull(&pts).unwrap();
        let eigs = eigenvalues(&a).unwrap();
        let svg = render(&boundary, &hull, &eigs);
        assert_eq!(svg.matches("class=\"sample\"").count(), m);
        assert_eq!(svg.matches("class=\"hull\"").count(), 1);
        assert_eq!(svg.matches("class=\"eig\"").count(), 2);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
