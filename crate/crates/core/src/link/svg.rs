use std::fmt::Write as _;

use super::{LinkDiagram, Point};

const SCALE: f64 = 48.0;
const MARGIN: f64 = 1.5;

fn catmull_rom(points: &[Point], out: &mut String) {
    let p = |i: isize| points[i.clamp(0, points.len() as isize - 1) as usize];
    for i in 0..points.len() as isize - 1 {
        let (p0, p1, p2, p3) = (p(i - 1), p(i), p(i + 1), p(i + 2));
        let c1 = (p1.0 + (p2.0 - p0.0) / 6.0, p1.1 + (p2.1 - p0.1) / 6.0);
        let c2 = (p2.0 - (p3.0 - p1.0) / 6.0, p2.1 - (p3.1 - p1.1) / 6.0);
        let _ = write!(
            out,
            " C {:.2} {:.2} {:.2} {:.2} {:.2} {:.2}",
            c1.0 * SCALE,
            -c1.1 * SCALE,
            c2.0 * SCALE,
            -c2.1 * SCALE,
            p2.0 * SCALE,
            -p2.1 * SCALE
        );
    }
}

/// Static SVG drawing. Edges are smooth curves through the layout
/// waypoints; at each crossing the over strand is redrawn on a white halo.
/// Oriented diagrams get an arrowhead in the middle of every edge.
pub fn render_svg(l: &LinkDiagram) -> String {
    let empty = super::Layout::default();
    let layout = l.layout().unwrap_or(&empty);
    let n = l.crossing_count();
    let pos = |c: usize| layout.crossings.get(c).copied().unwrap_or((c as f64 * 2.0, 0.0));
    let via = |d: usize| layout.via.get(d).cloned().unwrap_or_default();

    let mut paths = Vec::new();
    for d in l.edges() {
        let t = l.twin(d);
        let forward = l.orientation().is_none_or(|o| o[d]);
        let (a, b) = if forward { (d, t) } else { (t, d) };
        let mut pts = vec![pos(a / 4)];
        pts.extend(via(a));
        pts.push(pos(b / 4));
        if pts.len() == 2 {
            let m = ((pts[0].0 + pts[1].0) / 2.0, (pts[0].1 + pts[1].1) / 2.0);
            pts.insert(1, m);
        }
        if a / 4 == b / 4 && pts.len() == 3 {
            // A kink with no hints: loop out to the right.
            let (x, y) = pts[0];
            pts = vec![(x, y), (x + 0.6, y + 0.4), (x + 0.6, y - 0.4), (x, y)];
        }
        paths.push(pts);
    }

    let loops_x0 = paths.iter().flatten().chain(&layout.crossings).map(|p| p.0).fold(0.0, f64::max) + 1.5;
    let circles: Vec<Point> = (0..l.free_loops()).map(|i| (loops_x0 + 1.5 * i as f64, 0.0)).collect();

    let all = paths.iter().flatten().chain(&layout.crossings).chain(&circles);
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for p in all {
        x0 = x0.min(p.0);
        x1 = x1.max(p.0);
        y0 = y0.min(-p.1);
        y1 = y1.max(-p.1);
    }
    let (x0, y0) = ((x0 - MARGIN) * SCALE, (y0 - MARGIN) * SCALE);
    let (w, h) = ((x1 - x0 / SCALE + MARGIN) * SCALE, (y1 - y0 / SCALE + MARGIN) * SCALE);

    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{x0:.2} {y0:.2} {w:.2} {h:.2}\">"
    );
    if l.is_oriented() {
        s.push_str(
            "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"6\" \
             markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"black\"/></marker></defs>\n",
        );
    }
    s.push_str("<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n");
    for pts in &paths {
        let mut d = format!("M {:.2} {:.2}", pts[0].0 * SCALE, -pts[0].1 * SCALE);
        catmull_rom(pts, &mut d);
        let marker = if l.is_oriented() { " marker-mid=\"url(#arrow)\"" } else { "" };
        let _ = writeln!(s, "<path d=\"{d}\"{marker}/>");
    }
    for p in &circles {
        let _ = writeln!(s, "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{:.2}\"/>", p.0 * SCALE, -p.1 * SCALE, 0.5 * SCALE);
    }
    // Over strands: a short stroke from slot 1 through the centre to slot 3.
    for c in 0..n {
        let centre = pos(c);
        let toward = |slot: usize| -> Point {
            let d = 4 * c + slot;
            let next = via(d).first().copied().unwrap_or_else(|| pos(l.twin(d) / 4));
            let (dx, dy) = (next.0 - centre.0, next.1 - centre.1);
            let len = (dx * dx + dy * dy).sqrt().max(1e-9);
            (centre.0 + 0.25 * dx / len, centre.1 + 0.25 * dy / len)
        };
        let (a, b) = (toward(1), toward(3));
        let seg = format!(
            "M {:.2} {:.2} Q {:.2} {:.2} {:.2} {:.2}",
            a.0 * SCALE,
            -a.1 * SCALE,
            centre.0 * SCALE,
            -centre.1 * SCALE,
            b.0 * SCALE,
            -b.1 * SCALE
        );
        let _ = writeln!(s, "<path d=\"{seg}\" stroke=\"white\" stroke-width=\"8\"/>");
        let _ = writeln!(s, "<path d=\"{seg}\"/>");
    }
    s.push_str("</g>\n</svg>\n");
    s
}
