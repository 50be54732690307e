//! SVG pictures of proximity models: one disk of diameter 1 per vertex and a
//! segment per edge, in 1/20 units with y pointing up.

use std::fmt::Write;

use crate::geometry::SCALE;
use crate::model::ProximityModel;
use crate::reduction::{Provenance, Role};

/// Disk radius in internal units (diameter one mesh unit).
pub const DISK_RADIUS: i64 = SCALE / 2;

fn color(p: Option<&Provenance>) -> &'static str {
    match p {
        None => "#4a6fa5",
        Some(p) => match (p.role, p.origin.crossing.is_some()) {
            (Role::Original, _) => "#111111",
            (Role::Subdivision, false) => "#8c8c8c",
            (Role::Subdivision, true) => "#e08a1e",
            (Role::GadgetW, _) => "#c62828",
            (Role::DetourApex, _) => "#2e7d32",
        },
    }
}

/// Renders `m`; with provenance, disks are coloured by role and crossing
/// sites stand out.
pub fn render_svg(m: &ProximityModel, provenance: Option<&[Provenance]>) -> String {
    let pts = m.points();
    let pad = 2 * DISK_RADIUS;
    let (x0, x1, y0, y1) = if pts.is_empty() {
        (0, 0, 0, 0)
    } else {
        (
            pts.iter().map(|p| p.x).min().unwrap(),
            pts.iter().map(|p| p.x).max().unwrap(),
            pts.iter().map(|p| p.y).min().unwrap(),
            pts.iter().map(|p| p.y).max().unwrap(),
        )
    };
    // y is flipped, so the top of the picture is -y1.
    let (left, top) = (x0 - pad, -y1 - pad);
    let (width, height) = (x1 - x0 + 2 * pad, y1 - y0 + 2 * pad);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{left} {top} {width} {height}" width="{width}" height="{height}">"#
    )
    .unwrap();
    writeln!(out, r##"<g stroke="#333333" stroke-width="1">"##).unwrap();
    for (u, v) in m.graph().edges() {
        let (a, b) = (pts[u], pts[v]);
        writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, a.x, -a.y, b.x, -b.y).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r#"<g fill-opacity="0.35" stroke-width="0.5">"#).unwrap();
    for (v, p) in pts.iter().enumerate() {
        let c = color(provenance.and_then(|pr| pr.get(v)));
        writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="{DISK_RADIUS}" fill="{c}" stroke="{c}"><title>{v}</title></circle>"#,
            p.x, -p.y
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadget::h_model;
    use crate::geometry::Point;
    use crate::graph::Graph;

    #[test]
    fn gadget_picture_counts() {
        let svg = render_svg(&h_model(Point::origin()), None);
        assert_eq!(svg.matches("<circle").count(), 8);
        assert_eq!(svg.matches("<line").count(), 14);
        assert!(svg.contains(r#"r="10""#));
    }

    #[test]
    fn empty_model_is_a_valid_canvas() {
        let m = ProximityModel::new(Graph::empty(0), vec![]).unwrap();
        let svg = render_svg(&m, None);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<circle").count(), 0);
    }

    #[test]
    fn y_axis_points_up() {
        let m = ProximityModel::from_points(vec![Point::new(0, 40)]).unwrap();
        assert!(render_svg(&m, None).contains(r#"cy="-40""#));
    }
}
