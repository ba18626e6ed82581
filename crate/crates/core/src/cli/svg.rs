//! Static SVG drawing of a weighted polar decomposition in the plane.
//!
//! One panel shows the polytope with its weights at lattice points; one panel
//! per vertex shows the polarized cone, its sign and its weights. One lattice
//! unit is 40 px; the y axis points up.

use std::fmt::Write as _;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::latticegen::{to_rational, LatticeBox};
use crate::polarize::{polarize_cones, PolarizedCone, PolarizingVector};
use crate::polytope::Polytope;
use crate::weights::{cone_weight, polytope_weight, WeightParam};

const UNIT: f64 = 40.0;
const MARGIN: f64 = 30.0;
const GAP: f64 = 50.0;

struct Panel {
    lo: [i64; 2],
    hi: [i64; 2],
    left: f64,
}

impl Panel {
    fn width(&self) -> f64 {
        (self.hi[0] - self.lo[0]) as f64 * UNIT
    }

    fn height(&self) -> f64 {
        (self.hi[1] - self.lo[1]) as f64 * UNIT
    }

    fn px(&self, x: f64, y: f64) -> (f64, f64) {
        (
            self.left + (x - self.lo[0] as f64) * UNIT,
            MARGIN + (self.hi[1] as f64 - y) * UNIT,
        )
    }
}

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

pub fn render_svg(p: &Polytope, xi: &PolarizingVector, y: &WeightParam) -> Result<String> {
    if p.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: p.dim(),
        });
    }
    let cones = polarize_cones(p, xi)?;
    let region = LatticeBox::around(p).inflate(2);
    let lattice = region.points();
    let panel_at = |i: usize| {
        let w = (region.hi[0] - region.lo[0]) as f64 * UNIT;
        Panel {
            lo: [region.lo[0], region.lo[1]],
            hi: [region.hi[0], region.hi[1]],
            left: MARGIN + i as f64 * (w + GAP),
        }
    };
    let first = panel_at(0);
    let total_w = 2.0 * MARGIN + (cones.len() + 1) as f64 * (first.width() + GAP) - GAP;
    let total_h = 2.0 * MARGIN + first.height() + 20.0;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{total_w:.0}" height="{total_h:.0}" viewBox="0 0 {total_w:.0} {total_h:.0}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, "<title>weighted polar decomposition, y = {}</title>", y.y());

    // polytope panel
    let panel = panel_at(0);
    frame(&mut s, &panel, "clip0");
    let poly: Vec<String> = polygon_order(p)
        .iter()
        .map(|v| {
            let (a, b) = panel.px(f(&v[0]), f(&v[1]));
            format!("{a:.1},{b:.1}")
        })
        .collect();
    let _ = writeln!(
        s,
        r##"<polygon points="{}" fill="#9ecae1" fill-opacity="0.6" stroke="#08519c" stroke-width="2"/>"##,
        poly.join(" ")
    );
    for q in &lattice {
        let x = to_rational(q);
        let w = polytope_weight(p, &x, y);
        label_point(&mut s, &panel, q, &w);
    }
    let (cx, _) = panel.px(panel.lo[0] as f64, 0.0);
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}">polytope</text>"#,
        cx,
        total_h - 10.0
    );

    for (i, cone) in cones.iter().enumerate() {
        let panel = panel_at(i + 1);
        let id = format!("clip{}", i + 1);
        frame(&mut s, &panel, &id);
        draw_cone(&mut s, &panel, cone, &id);
        for q in &lattice {
            let w = cone_weight(cone, &to_rational(q), y);
            label_point(&mut s, &panel, q, &w);
        }
        let (ax, ay) = panel.px(f(&cone.apex[0]), f(&cone.apex[1]));
        let sign = if cone.sign() > 0 { "+" } else { "\u{2212}" };
        let _ = writeln!(
            s,
            r##"<text x="{:.1}" y="{:.1}" font-size="20" fill="#a50f15">{sign}</text>"##,
            ax + 6.0,
            ay - 6.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}">{sign} cone at v{} ({} flipped)</text>"#,
            panel.left,
            total_h - 10.0,
            cone.vertex,
            cone.flip_count
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn frame(s: &mut String, panel: &Panel, id: &str) {
    let _ = writeln!(
        s,
        r##"<clipPath id="{id}"><rect x="{:.1}" y="{:.1}" width="{:.1}" height="{:.1}"/></clipPath>
<rect x="{:.1}" y="{:.1}" width="{:.1}" height="{:.1}" fill="none" stroke="#bbbbbb"/>"##,
        panel.left,
        MARGIN,
        panel.width(),
        panel.height(),
        panel.left,
        MARGIN,
        panel.width(),
        panel.height()
    );
}

fn draw_cone(s: &mut String, panel: &Panel, cone: &PolarizedCone, clip: &str) {
    let reach = 4.0 * (panel.width() + panel.height()) / UNIT;
    let apex = [f(&cone.apex[0]), f(&cone.apex[1])];
    let g: Vec<[f64; 2]> = cone
        .generators
        .iter()
        .map(|v| {
            let (a, b) = (f(&v[0]), f(&v[1]));
            let n = (a * a + b * b).sqrt();
            [a / n, b / n]
        })
        .collect();
    let corners = [
        apex,
        [apex[0] + reach * g[0][0], apex[1] + reach * g[0][1]],
        [
            apex[0] + reach * (g[0][0] + g[1][0]),
            apex[1] + reach * (g[0][1] + g[1][1]),
        ],
        [apex[0] + reach * g[1][0], apex[1] + reach * g[1][1]],
    ];
    let pts: Vec<String> = corners
        .iter()
        .map(|c| {
            let (a, b) = panel.px(c[0], c[1]);
            format!("{a:.1},{b:.1}")
        })
        .collect();
    let _ = writeln!(
        s,
        r##"<polygon points="{}" clip-path="url(#{clip})" fill="#fdae6b" fill-opacity="0.5" stroke="none"/>"##,
        pts.join(" ")
    );
    for (k, gen) in g.iter().enumerate() {
        let (x0, y0) = panel.px(apex[0], apex[1]);
        let (x1, y1) = panel.px(apex[0] + reach * gen[0], apex[1] + reach * gen[1]);
        // flipped generators are dashed: their facets carry weight y/(1+y)
        let dash = if cone.flipped[k] { r#" stroke-dasharray="6,4""# } else { "" };
        let _ = writeln!(
            s,
            r##"<line x1="{x0:.1}" y1="{y0:.1}" x2="{x1:.1}" y2="{y1:.1}" clip-path="url(#{clip})" stroke="#d94801" stroke-width="2"{dash}/>"##
        );
    }
}

fn label_point(s: &mut String, panel: &Panel, q: &[i64], w: &Rational) {
    let (x, y) = panel.px(q[0] as f64, q[1] as f64);
    let fill = if w.is_zero() { "#cccccc" } else { "#000000" };
    let _ = writeln!(s, r#"<circle cx="{x:.1}" cy="{y:.1}" r="2.5" fill="{fill}"/>"#);
    if !w.is_zero() {
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}">{w}</text>"#,
            x + 4.0,
            y + 13.0
        );
    }
}

/// Vertices in counterclockwise order around the barycenter.
fn polygon_order(p: &Polytope) -> Vec<Vec<Rational>> {
    let n = p.vertices().len() as f64;
    let cx = p.vertices().iter().map(|v| f(&v.point[0])).sum::<f64>() / n;
    let cy = p.vertices().iter().map(|v| f(&v.point[1])).sum::<f64>() / n;
    let mut pts: Vec<Vec<Rational>> = p.vertices().iter().map(|v| v.point.clone()).collect();
    pts.sort_by(|a, b| {
        let ta = (f(&a[1]) - cy).atan2(f(&a[0]) - cx);
        let tb = (f(&b[1]) - cy).atan2(f(&b[0]) - cx);
        ta.total_cmp(&tb)
    });
    pts
}
