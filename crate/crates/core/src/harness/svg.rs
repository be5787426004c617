//! SVG drawings of planar partitions: one color per part, hulls filled at
//! fixed opacity, points labeled by index.

use super::HarnessError;
use crate::cyclebuild::Projection;
use crate::exactgeom::planar::convex_hull_ccw;
use crate::exactgeom::rational::to_f64;
use crate::exactgeom::PointSet;
use crate::nervecalc::Partition;
use std::path::Path;
use svg::node::element::{Circle, Line, Polygon, Rectangle, Text};
use svg::Document;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
];
const SIZE: f64 = 600.0;
const MARGIN: f64 = 30.0;

fn r2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

pub fn render_svg(ps: &PointSet, p: &Partition, projection: Option<&Projection>) -> Result<String, HarnessError> {
    if ps.is_empty() || p.n_parts() == 0 {
        return Err(HarnessError::Schema("nothing to draw".into()));
    }
    if p.len() != ps.len() {
        return Err(HarnessError::Schema(format!(
            "partition covers {} points, set has {}",
            p.len(),
            ps.len()
        )));
    }
    let planar = match (ps.dim(), projection) {
        (2, None) => ps.clone(),
        (_, Some(proj)) => PointSet::new(2, ps.iter().map(|x| proj.apply(x)).collect())?,
        (d, None) => return Err(HarnessError::Schema(format!("dimension {d} needs a projection"))),
    };
    let xy: Vec<(f64, f64)> = planar.iter().map(|q| (to_f64(q.coord(0)), to_f64(q.coord(1)))).collect();
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &xy {
        lo_x = lo_x.min(x);
        hi_x = hi_x.max(x);
        lo_y = lo_y.min(y);
        hi_y = hi_y.max(y);
    }
    let span = (hi_x - lo_x).max(hi_y - lo_y).max(f64::MIN_POSITIVE);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let at = |i: usize| -> (f64, f64) {
        let (x, y) = xy[i];
        (r2(MARGIN + (x - lo_x) * scale), r2(SIZE - MARGIN - (y - lo_y) * scale))
    };

    let mut doc = Document::new()
        .set("viewBox", (0, 0, SIZE, SIZE))
        .set("width", SIZE)
        .set("height", SIZE)
        .add(Rectangle::new().set("width", SIZE).set("height", SIZE).set("fill", "white"));
    for (c, part) in p.parts().iter().enumerate() {
        let color = PALETTE[c % PALETTE.len()];
        let hull = convex_hull_ccw(&planar, part);
        match hull.len() {
            0 | 1 => {}
            2 => {
                let (a, b) = (at(hull[0]), at(hull[1]));
                doc = doc.add(
                    Line::new()
                        .set("x1", a.0)
                        .set("y1", a.1)
                        .set("x2", b.0)
                        .set("y2", b.1)
                        .set("stroke", color)
                        .set("stroke-width", 3),
                );
            }
            _ => {
                let pts: Vec<String> = hull
                    .iter()
                    .map(|&i| {
                        let (x, y) = at(i);
                        format!("{x},{y}")
                    })
                    .collect();
                doc = doc.add(
                    Polygon::new()
                        .set("points", pts.join(" "))
                        .set("fill", color)
                        .set("fill-opacity", 0.25)
                        .set("stroke", color)
                        .set("stroke-width", 2),
                );
            }
        }
    }
    for i in 0..planar.len() {
        let (x, y) = at(i);
        let color = PALETTE[p.part_of(i) % PALETTE.len()];
        doc = doc
            .add(Circle::new().set("cx", x).set("cy", y).set("r", 4).set("fill", color))
            .add(
                Text::new(i.to_string())
                    .set("x", r2(x + 6.0))
                    .set("y", r2(y - 6.0))
                    .set("font-size", 12)
                    .set("font-family", "monospace"),
            );
    }
    Ok(doc.to_string())
}

pub fn emit_svg(
    ps: &PointSet,
    p: &Partition,
    projection: Option<&Projection>,
    path: impl AsRef<Path>,
) -> Result<(), HarnessError> {
    let text = render_svg(ps, p, projection)?;
    let path = path.as_ref();
    std::fs::write(path, text).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_diagonals() {
        let ps = PointSet::from_ints(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]).unwrap();
        let p = Partition::new(2, vec![0, 1, 0, 1]).unwrap();
        let s = render_svg(&ps, &p, None).unwrap();
        assert_eq!(s.matches("<line").count(), 2);
        assert_eq!(s, render_svg(&ps, &p, None).unwrap());
    }

    #[test]
    fn empty_partition_rejected() {
        let ps = PointSet::new(2, vec![]).unwrap();
        let p = Partition::new(0, vec![]).unwrap();
        assert!(render_svg(&ps, &p, None).is_err());
    }
}
