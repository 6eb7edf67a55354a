//! SVG drawing of chord arrangements.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::divide_map::{compute_faces, Sign};
use crate::error::Result;
use crate::generators::{from_chords, ChordSet};

const SIZE: f64 = 400.0;
const RADIUS: f64 = 180.0;

fn screen(p: &(f64, f64)) -> (f64, f64) {
    (SIZE / 2.0 + RADIUS * p.0, SIZE / 2.0 - RADIUS * p.1)
}

fn fmt_xy(p: (f64, f64)) -> String {
    format!("{:.3} {:.3}", p.0, p.1)
}

/// Unit disk with the chords, each crossing marked, and inside faces filled by sign.
pub fn render_svg(set: &ChordSet) -> Result<String> {
    let map = from_chords(set)?;
    let faces = compute_faces(&map)?;
    let points: Vec<(f64, f64)> = set
        .vertex_points()
        .iter()
        .map(|(x, y)| (x.to_f64().unwrap_or(0.0), y.to_f64().unwrap_or(0.0)))
        .collect();
    let angle = |v: usize| points[v].1.atan2(points[v].0);

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    )
    .unwrap();
    writeln!(out, "<g class=\"faces\">").unwrap();
    for face in &faces.faces {
        let start = map.origin(face.walk[0]);
        let mut d = format!("M {}", fmt_xy(screen(&points[start])));
        for &dart in &face.walk {
            let from = map.origin(dart);
            let to = map.origin(map.twin(dart));
            let end = fmt_xy(screen(&points[to]));
            if map.is_arc(dart) {
                // even arc darts run counterclockwise
                let ccw = (dart - map.divide_dart_count()) % 2 == 0;
                let mut sweep = angle(to) - angle(from);
                if !ccw {
                    sweep = -sweep;
                }
                let sweep = sweep.rem_euclid(2.0 * PI);
                let large = u8::from(sweep > PI);
                // the y axis points down on screen, so counterclockwise is sweep flag 0
                write!(d, " A {RADIUS} {RADIUS} 0 {large} {} {end}", u8::from(!ccw)).unwrap();
            } else {
                write!(d, " L {end}").unwrap();
            }
        }
        d.push_str(" Z");
        let (class, fill) = match face.sign {
            Sign::Minus => ("minus", "#9ecae1"),
            Sign::Plus => ("plus", "#fdae6b"),
        };
        writeln!(out, "<path class=\"{class}\" d=\"{d}\" fill=\"{fill}\" stroke=\"none\"/>").unwrap();
    }
    writeln!(out, "</g>").unwrap();
    let c = SIZE / 2.0;
    writeln!(out, "<circle class=\"disk\" cx=\"{c}\" cy=\"{c}\" r=\"{RADIUS}\" fill=\"none\" stroke=\"black\"/>").unwrap();
    writeln!(out, "<g class=\"chords\" stroke=\"black\" stroke-width=\"2\">").unwrap();
    for chord in set.chords() {
        let to_f = |p: &crate::generators::Point| (p.0.to_f64().unwrap_or(0.0), p.1.to_f64().unwrap_or(0.0));
        let a = screen(&to_f(&chord.s.point()));
        let b = screen(&to_f(&chord.t.point()));
        writeln!(out, "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\"/>", a.0, a.1, b.0, b.1).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "<g class=\"crossings\">").unwrap();
    for v in map.endpoint_count()..map.vertex_count() {
        let p = screen(&points[v]);
        writeln!(
            out,
            "<circle class=\"crossing\" cx=\"{:.3}\" cy=\"{:.3}\" r=\"4\" fill=\"red\"><title>{}</title></circle>",
            p.0,
            p.1,
            map.label(v)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}
