//! The adversarial constructions behind the lower bounds, and the
//! measurements taken on them.

mod grid;
mod paths;
mod zigzag;

use serde::Serialize;
use thiserror::Error;

use crate::geom::{properly_intersects, Frame, GeomError, Segment};
use crate::instance::{Instance, VertexId};
use crate::router::{route, Mode, Outcome};
use crate::theta6::build_theta6;
use crate::visibility::{build_visibility_graph, VisibilityGraph};

pub use grid::{column_touches, gen_grid, same_view, trim, Grid, Trimmed};
pub use paths::{
    cmp_sqrt_sum_to, cmp_sqrt_sums, edge_lengths_sq, shortest_path, Metric, NoPath, ShortestPath,
};
pub use zigzag::{default_eps, gen_zigzag, Check, Zigzag, ZIGZAG_UNIT};

/// Subgraph of `g` induced by `s`, `t` and the endpoints of the edges that
/// properly cross segment `st`. Ids are unchanged.
pub fn induced_crossing_subgraph(
    inst: &Instance,
    g: &VisibilityGraph,
    s: VertexId,
    t: VertexId,
) -> VisibilityGraph {
    let st = Segment::new(inst.point(s), inst.point(t));
    let mut keep = vec![false; inst.len()];
    keep[s] = true;
    keep[t] = true;
    for (u, v, _) in g.edges() {
        if properly_intersects(Segment::new(inst.point(u), inst.point(v)), st) {
            keep[u] = true;
            keep[v] = true;
        }
    }
    g.induced(&keep)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error(transparent)]
    NoPath(#[from] NoPath),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps: Option<[u64; 2]>,
    /// Coordinate units per length unit of the report.
    pub scale: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathSummary {
    pub hops: usize,
    /// In units of `params.scale`.
    pub length: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ratios {
    pub routed_hops: Option<f64>,
    pub routed_length: Option<f64>,
    pub restricted_hops: Option<f64>,
    pub restricted_length: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioReport {
    pub construction: String,
    /// Size parameter of the construction; the point count for plain
    /// instances.
    pub n: usize,
    pub points: usize,
    pub source: VertexId,
    pub dest: VertexId,
    pub mode: Mode,
    pub params: Params,
    pub outcome: Outcome,
    pub routed: Option<PathSummary>,
    /// Hop-shortest and length-shortest paths in the whole graph.
    pub shortest: PathSummary,
    /// The same in the subgraph induced by the edges crossing `st`; `None`
    /// when it has no `s`–`t` path.
    pub restricted: Option<PathSummary>,
    pub ratios: Ratios,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    /// Squared edge lengths of the length-shortest paths, full and
    /// restricted, for exact checks.
    #[serde(skip)]
    pub shortest_sq: (Vec<u128>, Vec<u128>),
}

impl RatioReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

fn summary(
    inst: &Instance,
    g: &VisibilityGraph,
    s: VertexId,
    t: VertexId,
    scale: f64,
) -> Result<(PathSummary, Vec<u128>), NoPath> {
    let hops = shortest_path(inst, g, s, t, Metric::Hops)?.hops;
    let p = shortest_path(inst, g, s, t, Metric::Euclidean)?;
    Ok((
        PathSummary {
            hops,
            length: p.length / scale,
        },
        p.edge_lengths_sq,
    ))
}

/// Routes from `s` to `t` in `mode` and measures the route against the
/// shortest paths of the visibility graph and of its induced crossing
/// subgraph.
pub fn ratio_report(
    inst: &Instance,
    s: VertexId,
    t: VertexId,
    mode: Mode,
    frame: Frame,
    construction: &str,
    params: Params,
) -> Result<RatioReport, ReportError> {
    let g = build_visibility_graph(inst);
    let trace = match mode {
        Mode::Vis => route(inst, &g, s, t, mode, frame, None),
        Mode::Theta6 => route(
            inst,
            &build_theta6(inst, &g, frame)?,
            s,
            t,
            mode,
            frame,
            None,
        ),
    };
    let scale = params.scale as f64;
    let (shortest, free_sq) = summary(inst, &g, s, t, scale)?;
    let sub = induced_crossing_subgraph(inst, &g, s, t);
    let (restricted, restricted_sq) = match summary(inst, &sub, s, t, scale) {
        Ok((p, sq)) => (Some(p), sq),
        Err(_) => (None, Vec::new()),
    };
    let routed = (trace.outcome == Outcome::Reached).then(|| {
        let sq = edge_lengths_sq(inst, &trace.vertices());
        PathSummary {
            hops: trace.step_count,
            length: sq.iter().map(|&d| (d as f64).sqrt()).sum::<f64>() / scale,
        }
    });
    let div = |a: f64, b: f64| (b > 0.0).then(|| a / b);
    let ratios = Ratios {
        routed_hops: routed
            .as_ref()
            .and_then(|r| div(r.hops as f64, shortest.hops as f64)),
        routed_length: routed.as_ref().and_then(|r| div(r.length, shortest.length)),
        restricted_hops: restricted
            .as_ref()
            .and_then(|r| div(r.hops as f64, shortest.hops as f64)),
        restricted_length: restricted
            .as_ref()
            .and_then(|r| div(r.length, shortest.length)),
    };
    Ok(RatioReport {
        construction: construction.into(),
        n: inst.len(),
        points: inst.len(),
        source: s,
        dest: t,
        mode,
        params,
        outcome: trace.outcome,
        routed,
        shortest,
        restricted,
        ratios,
        checks: Vec::new(),
        shortest_sq: (free_sq, restricted_sq),
    })
}

/// [`ratio_report`] on a zig-zag instance, with its two path-length
/// inequalities attached.
pub fn zigzag_report(z: &Zigzag, mode: Mode) -> Result<RatioReport, ReportError> {
    let mut rep = ratio_report(
        &z.inst,
        z.s,
        z.t,
        mode,
        Frame::canonical(),
        "zigzag",
        Params {
            rho: Some(z.rho),
            eps: Some([z.eps.0, z.eps.1]),
            scale: z.unit,
        },
    )?;
    rep.n = 3 * z.rows;
    rep.checks = z.checks(&rep.shortest_sq.0, &rep.shortest_sq.1);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    #[test]
    fn nothing_crosses_st() {
        let inst = Instance::new(
            vec![Point::new(0, 0), Point::new(1, 10), Point::new(30, 7)],
            vec![],
        )
        .unwrap();
        let g = build_visibility_graph(&inst);
        let sub = induced_crossing_subgraph(&inst, &g, 0, 1);
        assert_eq!(sub.neighbors(0), &[(1, false)]);
        assert!(sub.neighbors(2).is_empty());
    }
}
