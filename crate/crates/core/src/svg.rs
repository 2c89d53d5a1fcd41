//! Static SVG rendering of a constructed scene: the deformed 0-handle,
//! the remaining guide arcs, the 1-handle bands with labeled feet, and the
//! vanishing cycles.

use crate::construct::Palf;
use std::fmt::Write;

const SCALE: i64 = 18;
const MARGIN: i64 = 30;

const CYCLE_COLORS: &[&str] = &[
    "#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085", "#7f8c8d", "#2c3e50",
];

pub fn render(palf: &Palf) -> String {
    let scene = &palf.scene;
    let size = scene.size() as i64;
    let px = |v: i64| MARGIN + v * SCALE;
    // Flip y so larger scene coordinates are drawn higher.
    let py = |v: i64| MARGIN + (size + 1 - v) * SCALE;
    let wh = 2 * MARGIN + (size + 1) * SCALE;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{wh}" height="{wh}" viewBox="0 0 {wh} {wh}">"##
    );
    let _ = writeln!(s, r#"<rect width="{wh}" height="{wh}" fill="white"/>"#);

    // 0-handle region.
    for (a, b) in scene.region_cells() {
        let _ = writeln!(
            s,
            r##"<rect x="{}" y="{}" width="{SCALE}" height="{SCALE}" fill="#d9d9d9"/>"##,
            px(a as i64),
            py(b as i64 + 1),
        );
    }
    for (a, b) in scene.hole_cells() {
        let _ = writeln!(
            s,
            r##"<rect x="{}" y="{}" width="{SCALE}" height="{SCALE}" fill="white" stroke="black"/>"##,
            px(*a as i64),
            py(*b as i64 + 1),
        );
    }

    // Remaining guide arcs.
    for (x1, y1, x2, y2) in scene.arcs() {
        let _ = writeln!(
            s,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#555555" stroke-width="2"/>"##,
            px(x1),
            py(y1),
            px(x2),
            py(y2)
        );
    }

    // Bands.
    for band in scene.bands() {
        if band.col == 0 {
            continue;
        }
        let x = crate::scene::col_x(band.col);
        let _ = writeln!(
            s,
            r##"<rect x="{}" y="{}" width="{}" height="{}" fill="#f3c26b" fill-opacity="0.8" stroke="#a97822"/>"##,
            px(x - 1),
            py(band.yhi),
            2 * SCALE,
            (band.yhi - band.ylo) * SCALE,
        );
    }

    // Feet labels: each handle label appears at both of its feet.
    for foot in scene.feet() {
        let x = px(foot.a as i64) + SCALE / 2;
        let y = py(foot.y) + 4;
        let _ = writeln!(
            s,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="3"/>"##,
            px(foot.a as i64),
            py(foot.y),
            px(foot.a as i64 + 1),
            py(foot.y)
        );
        let _ = writeln!(
            s,
            r##"<text x="{x}" y="{y}" font-size="11" text-anchor="middle">{}</text>"##,
            foot.label
        );
    }

    // Vanishing cycles: the canceling cycles as loops over their bands,
    // the guide cycles along their stored paths.
    for (i, curve) in palf.cycles.iter().enumerate() {
        let color = if curve.name.starts_with("C0") {
            "black"
        } else {
            CYCLE_COLORS[i % CYCLE_COLORS.len()]
        };
        if let Some(emb) = &curve.embedding {
            if emb.path.len() >= 2 {
                let pts: Vec<String> = emb
                    .path
                    .iter()
                    .map(|&(x, y)| format!("{},{}", px(x), py(y)))
                    .collect();
                let _ = writeln!(
                    s,
                    r##"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5" stroke-dasharray="{}"/>"##,
                    pts.join(" "),
                    if curve.name.starts_with("C0") { "none" } else { "4 2" },
                );
            }
        }
    }

    let _ = writeln!(s, "</svg>");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{construct_palf, fixtures, Strategy};

    // Minimal well-formedness check: tags balance and every handle label
    // appears at exactly two feet.
    #[test]
    fn svg_is_well_formed() {
        let palf = construct_palf(&fixtures::trefoil5(), Strategy::Flex, true).unwrap();
        let svg = render(&palf);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        let opens = svg.matches("<svg").count();
        let closes = svg.matches("</svg>").count();
        assert_eq!(opens, closes);
        for &col in &palf.lifts {
            let needle = format!(">{col}</text>");
            assert_eq!(svg.matches(&needle).count(), 2, "label {col}");
        }
    }
}
