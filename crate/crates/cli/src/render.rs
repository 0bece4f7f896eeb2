//! Static SVG of a benzenoid with its cut segments overlaid.

use std::fmt::Write as _;

use hexcut::boundary::BoundaryCycle;
use hexcut::lattice::{hex_vertices, EdgeClass, HexCoord};
use hexcut::quotient::{sweep_with_cuts, QuotientError};

const SCALE: f64 = 24.0;
const MARGIN: f64 = 24.0;
const SQRT3_2: f64 = 0.866_025_403_784_438_6;

fn colour(class: EdgeClass) -> &'static str {
    match class {
        EdgeClass::D1 => "#c0392b",
        EdgeClass::D2 => "#2471a3",
        EdgeClass::D3 => "#1e8449",
    }
}

/// Doubled-frame vertex coordinates to SVG user units (y grows downward).
fn to_svg(x: f64, y: f64) -> (f64, f64) {
    (x / 2.0 * SCALE, -y * SQRT3_2 * SCALE)
}

pub fn render_svg(
    z: &BoundaryCycle,
    hexagons: &[HexCoord],
    classes: &[EdgeClass],
) -> Result<String, QuotientError> {
    let pts: Vec<(f64, f64)> = z.vertices().iter().map(|v| to_svg(v.x as f64, v.y as f64)).collect();
    let (min_x, max_x) = pts.iter().fold((f64::MAX, f64::MIN), |(a, b), p| (a.min(p.0), b.max(p.0)));
    let (min_y, max_y) = pts.iter().fold((f64::MAX, f64::MIN), |(a, b), p| (a.min(p.1), b.max(p.1)));
    let (ox, oy) = (MARGIN - min_x, MARGIN - min_y);
    let width = max_x - min_x + 2.0 * MARGIN;
    let height = max_y - min_y + 2.0 * MARGIN;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(s, r##"<g class="hexagons" fill="#f4f1ea" stroke="#999999" stroke-width="1">"##);
    let mut sorted = hexagons.to_vec();
    sorted.sort_unstable();
    for h in sorted {
        let corners: Vec<String> = hex_vertices(h)
            .iter()
            .map(|v| {
                let (x, y) = to_svg(v.x as f64, v.y as f64);
                format!("{:.2},{:.2}", x + ox, y + oy)
            })
            .collect();
        let _ = writeln!(s, r#"<polygon points="{}"/>"#, corners.join(" "));
    }
    let _ = writeln!(s, "</g>");
    let outline: Vec<String> = pts.iter().map(|(x, y)| format!("{:.2},{:.2}", x + ox, y + oy)).collect();
    let _ = writeln!(
        s,
        r##"<polygon class="boundary" points="{}" fill="none" stroke="#222222" stroke-width="2.5"/>"##,
        outline.join(" ")
    );

    for &class in classes {
        let sweep = sweep_with_cuts(z, class)?;
        let name = format!("{class}").to_lowercase();
        let _ = writeln!(s, r#"<g class="cuts {name}" stroke="{}" fill="{}">"#, colour(class), colour(class));
        for cut in &sweep.cuts {
            // chord endpoints come back with doubled doubled-frame coordinates
            let [a, b] = cut.chord_endpoints().map(|(x, y)| {
                let (x, y) = to_svg(x as f64 / 2.0, y as f64 / 2.0);
                (x + ox, y + oy)
            });
            let _ = writeln!(
                s,
                r#"<line class="cut {name}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke-width="2" stroke-dasharray="5,3"/>"#,
                a.0, a.1, b.0, b.1
            );
            let (mx, my) = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
            let _ = writeln!(
                s,
                r#"<text class="weight {name}" x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" stroke="none">{}</text>"#,
                mx + 3.0,
                my - 3.0,
                cut.multiplicity
            );
        }
        let _ = writeln!(s, "</g>");
    }
    let _ = writeln!(s, "</svg>");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use hexcut::boundary::from_hexagons;

    fn system(list: &[(i64, i64)]) -> (BoundaryCycle, Vec<HexCoord>) {
        let hs: Vec<HexCoord> = list.iter().map(|&(q, r)| HexCoord::new(q, r)).collect();
        let set: HashSet<HexCoord> = hs.iter().copied().collect();
        (from_hexagons(&set).unwrap(), hs)
    }

    #[test]
    fn benzene_single_chord() {
        let (z, hs) = system(&[(0, 0)]);
        let svg = render_svg(&z, &hs, &[EdgeClass::D1]).unwrap();
        assert_eq!(svg.matches(r#"<line class="cut d1""#).count(), 1);
        assert!(svg.contains(">2</text>"));
    }

    #[test]
    fn naphthalene_all_directions() {
        let (z, hs) = system(&[(0, 0), (1, 0)]);
        let svg = render_svg(&z, &hs, &EdgeClass::ALL).unwrap();
        assert_eq!(svg.matches("<line ").count(), 5);
        assert_eq!(svg, render_svg(&z, &hs, &EdgeClass::ALL).unwrap());
    }
}
