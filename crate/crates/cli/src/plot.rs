//! SVG wall diagrams for two-dimensional stability spaces.
//!
//! Points of `C(d)` are drawn in the two coordinates left after dropping
//! the projected vertex, which is injective on `C(d)` when that vertex has
//! nonzero dimension. Geometry is exact up to this point; the drawing
//! itself uses floating point.

use std::collections::BTreeSet;
use std::f64::consts::TAU;
use std::fmt::Write;

use num_traits::ToPrimitive;
use quiver_walls::polyhedral::linalg::IntVec;
use quiver_walls::{project_along, subdim_vectors, Cone, DimVector, Session};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PlotError {
    #[error(transparent)]
    Core(#[from] quiver_walls::Error),
    #[error("vertex {0} has dimension zero, so dropping it does not embed C(d) in the plane")]
    DegenerateProjection(usize),
}

const SIZE: f64 = 480.0;
const RADIUS: f64 = 190.0;

/// Primitive planar generators of a cone, lineality in both directions.
fn planar_generators(c: &Cone, vertex: usize) -> BTreeSet<IntVec> {
    let negated = c.lineality().iter().map(|l| l.iter().map(|x| -x).collect::<IntVec>());
    c.rays()
        .iter()
        .cloned()
        .chain(c.lineality().iter().cloned())
        .chain(negated)
        .map(|g| project_along(&g, vertex))
        .collect()
}

fn angle(v: &[num_bigint::BigInt]) -> f64 {
    let x = v[0].to_f64().unwrap_or(0.0);
    let y = v[1].to_f64().unwrap_or(0.0);
    y.atan2(x).rem_euclid(TAU)
}

/// Screen coordinates of the point at `angle` and `scale * RADIUS`.
fn at(angle: f64, scale: f64) -> (f64, f64) {
    let c = SIZE / 2.0;
    (c + scale * RADIUS * angle.cos(), c - scale * RADIUS * angle.sin())
}

fn label(v: &[num_bigint::BigInt]) -> String {
    format!("{},{}", v[0], v[1])
}

/// The shaded region of a two-dimensional cone as an SVG element.
fn sector(gens: &BTreeSet<IntVec>) -> String {
    let mut angles: Vec<f64> = gens.iter().map(|g| angle(g)).collect();
    angles.sort_by(f64::total_cmp);
    // a convex planar cone is the complement of the largest angular gap
    // between its generators; with a full circle of generators it is the plane
    let mut start = angles[0];
    let mut gap = angles[0] + TAU - angles[angles.len() - 1];
    for w in angles.windows(2) {
        if w[1] - w[0] > gap {
            gap = w[1] - w[0];
            start = w[1];
        }
    }
    let span = TAU - gap;
    if span >= TAU - 1e-9 || gap < std::f64::consts::PI - 1e-9 {
        let c = SIZE / 2.0;
        return format!(r#"<circle class="sigma" cx="{c}" cy="{c}" r="{RADIUS}"/>"#);
    }
    let steps = ((span / TAU) * 180.0).ceil().max(1.0) as usize;
    let mut points = format!("{0},{0}", SIZE / 2.0);
    for k in 0..=steps {
        let (x, y) = at(start + span * k as f64 / steps as f64, 1.0);
        write!(points, " {x:.3},{y:.3}").unwrap();
    }
    format!(r#"<polygon class="sigma" points="{points}"/>"#)
}

fn segment(class: &str, g: &[num_bigint::BigInt], extra: &str) -> String {
    let (x0, y0) = at(0.0, 0.0);
    let (x1, y1) = at(angle(g), 1.0);
    format!(r#"<line class="{class}"{extra} x1="{x0:.3}" y1="{y0:.3}" x2="{x1:.3}" y2="{y1:.3}"/>"#)
}

/// Draws `Sigma(d)` shaded, the hyperplanes `H_e` of the walls in light
/// stroke, the walls in heavy stroke and labels every drawn ray with its
/// primitive planar coordinates. `vertex` is 0-based.
pub fn plot_2d(session: &Session, d: &DimVector, vertex: usize) -> Result<String, PlotError> {
    let c_d = session.stability_space(d)?;
    if c_d.dim() != 2 {
        return Err(quiver_walls::Error::WrongStabilityDimension { expected: 2, found: c_d.dim() }.into());
    }
    if d[vertex] == 0 {
        return Err(PlotError::DegenerateProjection(vertex + 1));
    }
    let sigma = session.sst_cone(d)?;

    let mut body = Vec::new();
    let mut labelled: BTreeSet<IntVec> = BTreeSet::new();
    if sigma.is_zero() {
        let c = SIZE / 2.0;
        body.push(format!(r#"<circle class="origin" cx="{c}" cy="{c}" r="4"/>"#));
    } else {
        let gens = planar_generators(&sigma, vertex);
        if sigma.dim() == 2 {
            body.push(sector(&gens));
        } else {
            body.extend(gens.iter().map(|g| segment("sigma-ray", g, "")));
        }
        labelled.extend(gens);

        // hyperplanes of the proper subdimension vectors that cut C(d) in a line
        let mut lines: BTreeSet<IntVec> = BTreeSet::new();
        for e in subdim_vectors(d, true, true) {
            let h = session.hyperplane(d, &e)?;
            if h.dim() == 1 {
                lines.extend(planar_generators(&h, vertex));
            }
        }
        body.extend(lines.iter().map(|g| segment("hyperplane", g, "")));

        let walls = session.all_walls(d)?;
        let mut heavy: BTreeSet<IntVec> = BTreeSet::new();
        for (_, w) in walls.iter() {
            heavy.extend(planar_generators(w, vertex));
        }
        for g in &heavy {
            body.push(segment("wall", g, &format!(r#" data-ray="{}""#, label(g))));
        }
        labelled.extend(heavy);
    }
    for g in &labelled {
        let (x, y) = at(angle(g), 1.12);
        body.push(format!(
            r#"<text x="{x:.3}" y="{y:.3}" text-anchor="middle" dominant-baseline="middle">({})</text>"#,
            label(g)
        ));
    }

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(
        svg,
        "<style>.sigma{{fill:#9ecae1;fill-opacity:0.5;stroke:none}} .sigma-ray{{stroke:#9ecae1;stroke-width:6}} \
         .hyperplane{{stroke:#bbbbbb;stroke-width:1}} .wall{{stroke:#000000;stroke-width:3}} \
         .origin{{fill:#000000}} text{{font-family:sans-serif;font-size:12px}}</style>"
    )
    .unwrap();
    for element in body {
        writeln!(svg, "{element}").unwrap();
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
