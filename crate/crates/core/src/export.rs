//! Display-only exporters: SVG for line arrangements, a plain text scene
//! format for plane arrangements. Exact values are rounded for drawing;
//! nothing here feeds back into any decision.

use num::ToPrimitive;

use crate::error::{Error, Result};
use crate::geometry::{Rat, RationalArrangement};

fn approx(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

/// Bounding box (half-width) that contains all vertices of the arrangement
/// plus a margin.
fn view_radius(a: &RationalArrangement) -> Result<f64> {
    let faces = a.faces()?;
    let mut radius: f64 = 2.0;
    for f in faces.iter().filter(|f| f.dimension == 0) {
        for c in &f.witness {
            radius = radius.max(approx(c).abs() + 1.0);
        }
    }
    Ok(radius.ceil())
}

/// An SVG drawing of a line arrangement (d = 2).
pub fn to_svg(a: &RationalArrangement) -> Result<String> {
    if a.dim() != 2 {
        return Err(Error::Domain(format!(
            "svg export expects d=2, got d={}",
            a.dim()
        )));
    }
    let r = view_radius(a)?;
    let size = 480.0;
    let scale = size / (2.0 * r);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" \
         viewBox=\"0 0 {size} {size}\">\n"
    ));
    out.push_str(&format!(
        "  <rect width=\"{size}\" height=\"{size}\" fill=\"white\"/>\n"
    ));
    for (i, h) in a.hyperplanes().iter().enumerate() {
        let (ax, ay) = (approx(&h.normal()[0]), approx(&h.normal()[1]));
        let b = approx(h.offset());
        // clip the line a·x = b to the box [-r, r]^2
        let mut pts: Vec<(f64, f64)> = Vec::new();
        if ay.abs() > 1e-12 {
            for x in [-r, r] {
                let y = (b - ax * x) / ay;
                if y.abs() <= r + 1e-9 {
                    pts.push((x, y));
                }
            }
        }
        if ax.abs() > 1e-12 {
            for y in [-r, r] {
                let x = (b - ay * y) / ax;
                if x.abs() <= r + 1e-9 {
                    pts.push((x, y));
                }
            }
        }
        pts.dedup_by(|p, q| (p.0 - q.0).abs() < 1e-9 && (p.1 - q.1).abs() < 1e-9);
        if pts.len() >= 2 {
            let to_px = |p: (f64, f64)| ((p.0 + r) * scale, (r - p.1) * scale);
            let (x1, y1) = to_px(pts[0]);
            let (x2, y2) = to_px(pts[1]);
            out.push_str(&format!(
                "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" \
                 stroke=\"black\" stroke-width=\"1.5\"/>\n"
            ));
            out.push_str(&format!(
                "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\">{}</text>\n",
                (x1 + x2) / 2.0 + 4.0,
                (y1 + y2) / 2.0 - 4.0,
                i + 1
            ));
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// A minimal text scene for a plane arrangement (d = 3): one `plane` record
/// per hyperplane with a quad clipped to the view cube, plus the vertices.
pub fn to_scene(a: &RationalArrangement) -> Result<String> {
    if a.dim() != 3 {
        return Err(Error::Domain(format!(
            "scene export expects d=3, got d={}",
            a.dim()
        )));
    }
    let r = view_radius(a)?;
    let mut out = String::new();
    out.push_str(&format!("scene cube {r}\n"));
    for (i, h) in a.hyperplanes().iter().enumerate() {
        let n: Vec<f64> = h.normal().iter().map(approx).collect();
        let b = approx(h.offset());
        // orthonormal-ish frame in the plane
        let axis = if n[0].abs() < 0.9 {
            [1.0, 0.0, 0.0]
        } else {
            [0.0, 1.0, 0.0]
        };
        let cross = |u: [f64; 3], v: [f64; 3]| {
            [
                u[1] * v[2] - u[2] * v[1],
                u[2] * v[0] - u[0] * v[2],
                u[0] * v[1] - u[1] * v[0],
            ]
        };
        let norm = |v: [f64; 3]| (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        let nn = norm([n[0], n[1], n[2]]);
        let unit = [n[0] / nn, n[1] / nn, n[2] / nn];
        let mut u = cross(unit, axis);
        let un = norm(u);
        u = [u[0] / un, u[1] / un, u[2] / un];
        let v = cross(unit, u);
        let p0 = [unit[0] * b / nn, unit[1] * b / nn, unit[2] * b / nn];
        out.push_str(&format!("plane {}", i + 1));
        for (su, sv) in [(-r, -r), (r, -r), (r, r), (-r, r)] {
            let q = [
                p0[0] + su * u[0] + sv * v[0],
                p0[1] + su * u[1] + sv * v[1],
                p0[2] + su * u[2] + sv * v[2],
            ];
            out.push_str(&format!(" {:.3},{:.3},{:.3}", q[0], q[1], q[2]));
        }
        out.push('\n');
    }
    for f in a.faces()?.iter().filter(|f| f.dimension == 0) {
        let w: Vec<String> = f
            .witness
            .iter()
            .map(|c| format!("{:.3}", approx(c)))
            .collect();
        out.push_str(&format!("vertex {}\n", w.join(",")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svg_smoke() {
        let a = RationalArrangement::general_position(3, 2).unwrap();
        let svg = to_svg(&a).unwrap();
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<line").count(), 3);
    }

    #[test]
    fn scene_smoke() {
        let a = RationalArrangement::general_position(4, 3).unwrap();
        let scene = to_scene(&a).unwrap();
        assert!(scene.starts_with("scene"));
        assert_eq!(scene.matches("plane").count(), 4);
        assert!(scene.contains("vertex"));
    }

    #[test]
    fn dimension_guards() {
        let a = RationalArrangement::general_position(3, 2).unwrap();
        assert!(to_scene(&a).is_err());
        let b = RationalArrangement::general_position(4, 3).unwrap();
        assert!(to_svg(&b).is_err());
    }
}
