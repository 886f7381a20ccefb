//! SVG drawings of instances, graphs and traces.

use std::fmt::Write;

use crate::instance::{Instance, VertexId};
use crate::router::{Phase, Trace};
use crate::visibility::Adjacency;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    /// Canvas size in pixels, margins included.
    pub width: f64,
    pub height: f64,
    /// Scale both axes alike. When false each axis fills the canvas, which
    /// is the only way to see the zig-zag's rows at large ρ.
    pub keep_aspect: bool,
    pub labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width: 800.0,
            height: 800.0,
            keep_aspect: true,
            labels: false,
        }
    }
}

const MARGIN: f64 = 20.0;

pub fn phase_color(p: Phase) -> &'static str {
    match p {
        Phase::Theta => "#1f77b4",
        Phase::Avoid => "#d62728",
        Phase::Opposite => "#2ca02c",
    }
}

/// Each undirected edge of `g` once, smaller id first.
pub fn edge_list(g: &impl Adjacency, n: usize) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for u in 0..n {
        for (v, _) in g.adjacent(u) {
            if u < v {
                out.push((u, v));
            }
        }
    }
    out
}

struct Map {
    min_x: f64,
    max_y: f64,
    sx: f64,
    sy: f64,
}

impl Map {
    fn new(inst: &Instance, opts: &RenderOptions) -> Map {
        let pts = inst.points();
        let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        if let Some(p) = pts.first() {
            (x0, x1, y0, y1) = (p.x as f64, p.x as f64, p.y as f64, p.y as f64);
        }
        for p in pts {
            x0 = x0.min(p.x as f64);
            x1 = x1.max(p.x as f64);
            y0 = y0.min(p.y as f64);
            y1 = y1.max(p.y as f64);
        }
        let w = (opts.width - 2.0 * MARGIN).max(1.0);
        let h = (opts.height - 2.0 * MARGIN).max(1.0);
        let mut sx = w / (x1 - x0).max(1.0);
        let mut sy = h / (y1 - y0).max(1.0);
        if opts.keep_aspect {
            sx = sx.min(sy);
            sy = sx;
        }
        Map {
            min_x: x0,
            max_y: y1,
            sx,
            sy,
        }
    }

    fn at(&self, inst: &Instance, v: VertexId) -> (f64, f64) {
        let p = inst.point(v);
        (
            MARGIN + (p.x as f64 - self.min_x) * self.sx,
            MARGIN + (self.max_y - p.y as f64) * self.sy,
        )
    }
}

/// Draws points, constraints (thick), the non-constraint `edges` (thin) and
/// an optional trace, one colour per phase. Source and destination of the
/// trace are ringed.
pub fn render_svg(
    inst: &Instance,
    edges: &[(VertexId, VertexId)],
    trace: Option<&Trace>,
    opts: &RenderOptions,
) -> String {
    let m = Map::new(inst, opts);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = opts.width,
        h = opts.height
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);

    let line = |s: &mut String, a: VertexId, b: VertexId, attrs: &str| {
        let (x1, y1) = m.at(inst, a);
        let (x2, y2) = m.at(inst, b);
        let _ = writeln!(
            s,
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" {attrs}/>"#
        );
    };

    let _ = writeln!(s, r##"<g id="edges" stroke="#999999" stroke-width="0.6">"##);
    for &(u, v) in edges {
        if !inst.is_constraint(u, v) {
            line(&mut s, u, v, "");
        }
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(
        s,
        r##"<g id="constraints" stroke="#000000" stroke-width="3" stroke-linecap="round">"##
    );
    for &(u, v) in inst.constraints() {
        line(&mut s, u, v, "");
    }
    let _ = writeln!(s, "</g>");

    if let Some(tr) = trace {
        let _ = writeln!(s, r#"<g id="trace" stroke-width="2.5" fill="none">"#);
        for w in tr.steps.windows(2) {
            let attrs = format!(r#"stroke="{}""#, phase_color(w[1].phase));
            line(&mut s, w[0].vertex, w[1].vertex, &attrs);
        }
        let _ = writeln!(s, "</g>");
    }

    let _ = writeln!(s, r##"<g id="points" fill="#000000">"##);
    for v in 0..inst.len() {
        let (x, y) = m.at(inst, v);
        let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="2.5"/>"#);
    }
    let _ = writeln!(s, "</g>");

    if let Some(tr) = trace {
        let _ = writeln!(
            s,
            r##"<g id="endpoints" fill="none" stroke="#ff7f0e" stroke-width="1.5">"##
        );
        for v in [tr.source, tr.dest] {
            let (x, y) = m.at(inst, v);
            let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="6"/>"#);
        }
        let _ = writeln!(s, "</g>");
    }

    if opts.labels {
        let _ = writeln!(
            s,
            r#"<g id="labels" font-family="monospace" font-size="10">"#
        );
        for v in 0..inst.len() {
            let (x, y) = m.at(inst, v);
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}">{v}</text>"#,
                x + 4.0,
                y - 4.0
            );
        }
        let _ = writeln!(s, "</g>");
    }
    s.push_str("</svg>\n");
    s
}
