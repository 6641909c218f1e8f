//! SVG rendering of cross-section polygons.
//!
//! Display only: the drawing projects the polygon into a Euclidean 2D chart
//! of its plane (Gram-Schmidt basis, floats at 6 decimals). No metric
//! computation ever reads these coordinates back. Output is byte-identical
//! for identical inputs.

use crate::metric::{scalar_to_string, PointN};
use crate::plane::{section_edge_lengths, Plane, SectionPolygon};

const SIZE: f64 = 640.0;
const MARGIN: f64 = 90.0;

fn to_f64(x: &crate::metric::Scalar) -> f64 {
    let numer = x.numer().to_string().parse::<f64>().unwrap_or(0.0);
    let denom = x.denom().to_string().parse::<f64>().unwrap_or(1.0);
    numer / denom
}

fn normalize(v: [f64; 3]) -> [f64; 3] {
    let len = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    [v[0] / len, v[1] / len, v[2] / len]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// An orthonormal in-plane basis for drawing, built from the normal.
fn plane_basis(plane: &Plane) -> ([f64; 3], [f64; 3]) {
    let n: Vec<f64> = plane
        .normal()
        .iter()
        .map(to_f64)
        .collect();
    let n = [n[0], n[1], n[2]];
    let seed = if n[0].abs() > 1e-12 || n[1].abs() > 1e-12 {
        [-n[1], n[0], 0.0]
    } else {
        [1.0, 0.0, 0.0]
    };
    let u = normalize(seed);
    let v = normalize(cross(n, u));
    (u, v)
}

fn project(p: &PointN, u: [f64; 3], v: [f64; 3]) -> (f64, f64) {
    let c: Vec<f64> = p.coords().iter().map(to_f64).collect();
    (
        c[0] * u[0] + c[1] * u[1] + c[2] * u[2],
        c[0] * v[0] + c[1] * v[1] + c[2] * v[2],
    )
}

/// Renders a cross-section polygon with vertex coordinates and max-metric
/// edge lengths, in the style of a hand-drawn disc figure.
pub fn section_svg(plane: &Plane, section: &SectionPolygon) -> String {
    let (u, v) = plane_basis(plane);
    let flat: Vec<(f64, f64)> = section
        .vertices()
        .iter()
        .map(|p| project(p, u, v))
        .collect();

    let max_abs = flat
        .iter()
        .flat_map(|(x, y)| [x.abs(), y.abs()])
        .fold(1e-9, f64::max);
    let scale = (SIZE / 2.0 - MARGIN) / max_abs;
    let place = |(x, y): (f64, f64)| (SIZE / 2.0 + x * scale, SIZE / 2.0 - y * scale);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" \
         viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    ));
    out.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    out.push_str(&format!(
        "  <text x=\"{:.6}\" y=\"28\" text-anchor=\"middle\" font-family=\"serif\" \
         font-size=\"18\">{} , radius {}</text>\n",
        SIZE / 2.0,
        plane,
        scalar_to_string(section.radius())
    ));

    let points: Vec<String> = flat
        .iter()
        .map(|&p| {
            let (x, y) = place(p);
            format!("{x:.6},{y:.6}")
        })
        .collect();
    out.push_str(&format!(
        "  <polygon points=\"{}\" fill=\"#d9d9d9\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
        points.join(" ")
    ));

    // Center mark.
    let (cx, cy) = place((0.0, 0.0));
    out.push_str(&format!(
        "  <circle cx=\"{cx:.6}\" cy=\"{cy:.6}\" r=\"3\" fill=\"black\"/>\n"
    ));
    out.push_str(&format!(
        "  <text x=\"{:.6}\" y=\"{:.6}\" font-family=\"serif\" font-size=\"16\">O</text>\n",
        cx + 8.0,
        cy + 16.0
    ));

    // Vertex dots and exact coordinate labels, pushed outward.
    for (vertex, &(x, y)) in section.vertices().iter().zip(&flat) {
        let (px, py) = place((x, y));
        out.push_str(&format!(
            "  <circle cx=\"{px:.6}\" cy=\"{py:.6}\" r=\"4\" fill=\"black\"/>\n"
        ));
        let (lx, ly) = place((x * 1.14, y * 1.14));
        out.push_str(&format!(
            "  <text x=\"{lx:.6}\" y=\"{ly:.6}\" text-anchor=\"middle\" font-family=\"serif\" \
             font-size=\"14\">{vertex}</text>\n"
        ));
    }

    // Edge length annotations at outward-shifted midpoints.
    let lengths = section_edge_lengths(section);
    let n = flat.len();
    for (i, len) in lengths.iter().enumerate() {
        let (x1, y1) = flat[i];
        let (x2, y2) = flat[(i + 1) % n];
        let mid = ((x1 + x2) / 2.0 * 1.05, (y1 + y2) / 2.0 * 1.05);
        let (mx, my) = place(mid);
        out.push_str(&format!(
            "  <text x=\"{mx:.6}\" y=\"{my:.6}\" text-anchor=\"middle\" font-family=\"serif\" \
             font-size=\"15\" font-style=\"italic\">{}</text>\n",
            scalar_to_string(len)
        ));
    }

    out.push_str("</svg>\n");
    out
}
