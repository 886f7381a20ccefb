//! The constrained Θ₆-graph: global construction and the local edge test.

mod blocked;
mod oracle;

use rayon::prelude::*;
use serde::Serialize;

use crate::geom::{ConeIndex, Frame, GeomError, Sign};
use crate::instance::{Instance, VertexId};
use crate::visibility::{local_view, Adjacency, LocalView, VisibilityGraph};

pub use blocked::{blocking_constraints, count_fully_blocked_cones};
pub use oracle::local_edge_oracle;

/// Outgoing edge slot of one subcone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubconeEdge {
    pub cone: usize,
    pub subcone: usize,
    pub target: Option<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theta6Graph {
    frame: Frame,
    out: Vec<Vec<SubconeEdge>>,
    adj: Vec<Vec<(VertexId, bool)>>,
}

/// Visible vertex of `view` with the smallest bisector projection in
/// subcone `j` of `cone`, if any.
pub fn subcone_minimum(
    view: &LocalView,
    frame: &Frame,
    cone: ConeIndex,
    j: usize,
) -> Result<Option<VertexId>, GeomError> {
    let u = view.current;
    let mut best: Option<(VertexId, crate::geom::Point)> = None;
    for nb in &view.neighbors {
        let sc = frame.subcone_of(u, nb.point, &view.incident_constraints)?;
        if sc.cone != cone || !sc.contains(j) {
            continue;
        }
        best = match best {
            None => Some((nb.id, nb.point)),
            Some((bid, bp)) => match frame.projection(nb.point - bp, cone).sign() {
                Sign::Negative => Some((nb.id, nb.point)),
                Sign::Positive => Some((bid, bp)),
                Sign::Zero => {
                    return Err(GeomError::GeneralPosition(format!(
                        "{:?} and {:?} tie on the {cone:?} bisector of {u:?}",
                        nb.point, bp
                    )))
                }
            },
        };
    }
    Ok(best.map(|(id, _)| id))
}

/// All subcone slots of the vertex seen through `view`, cone by cone.
pub fn outgoing_edges(view: &LocalView, frame: &Frame) -> Result<Vec<SubconeEdge>, GeomError> {
    let mut out = Vec::new();
    for cone in ConeIndex::all() {
        for j in 0..frame.subcone_count(view.current, cone, &view.incident_constraints) {
            out.push(SubconeEdge {
                cone: cone.index(),
                subcone: j,
                target: subcone_minimum(view, frame, cone, j)?,
            });
        }
    }
    Ok(out)
}

/// For every vertex and subcone, an edge to the visible vertex closest by
/// bisector projection.
pub fn build_theta6(
    inst: &Instance,
    g: &VisibilityGraph,
    frame: Frame,
) -> Result<Theta6Graph, GeomError> {
    let out: Vec<Vec<SubconeEdge>> = (0..inst.len())
        .into_par_iter()
        .map(|u| outgoing_edges(&local_view(inst, g, u), &frame))
        .collect::<Result<_, _>>()?;
    let mut adj: Vec<Vec<(VertexId, bool)>> = vec![Vec::new(); inst.len()];
    for (u, slots) in out.iter().enumerate() {
        for v in slots.iter().filter_map(|e| e.target) {
            let c = inst.is_constraint(u, v);
            adj[u].push((v, c));
            adj[v].push((u, c));
        }
    }
    for row in &mut adj {
        row.sort_unstable();
        row.dedup();
    }
    Ok(Theta6Graph { frame, out, adj })
}

#[derive(Serialize)]
struct ExportEdge {
    from: VertexId,
    to: VertexId,
    cone: usize,
    subcone: usize,
}

#[derive(Serialize)]
struct Export {
    frame: [i64; 2],
    n: usize,
    edges: Vec<ExportEdge>,
    adjacency: Vec<Vec<VertexId>>,
}

impl Theta6Graph {
    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Subcone slots of `u`.
    pub fn outgoing(&self, u: VertexId) -> &[SubconeEdge] {
        &self.out[u]
    }

    pub fn edge(&self, u: VertexId, cone: ConeIndex, subcone: usize) -> Option<VertexId> {
        self.out[u]
            .iter()
            .find(|e| e.cone == cone.index() && e.subcone == subcone)
            .and_then(|e| e.target)
    }

    pub fn neighbors(&self, u: VertexId) -> &[(VertexId, bool)] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search_by_key(&v, |&(w, _)| w).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// JSON adjacency: frame, directed subcone edges, undirected lists.
    pub fn to_json(&self) -> String {
        let d = self.frame.direction();
        let edges = self
            .out
            .iter()
            .enumerate()
            .flat_map(|(u, slots)| {
                slots.iter().filter_map(move |e| {
                    e.target.map(|to| ExportEdge {
                        from: u,
                        to,
                        cone: e.cone,
                        subcone: e.subcone,
                    })
                })
            })
            .collect();
        let export = Export {
            frame: [d.x, d.y],
            n: self.len(),
            edges,
            adjacency: self
                .adj
                .iter()
                .map(|row| row.iter().map(|&(v, _)| v).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&export).expect("plain data serializes")
    }
}

impl Adjacency for Theta6Graph {
    fn adjacent(&self, u: VertexId) -> Vec<(VertexId, bool)> {
        self.adj[u].clone()
    }
}

/// Visible pairs `(u, v)`, `u < v`, on which the local edge test and `t6`
/// disagree. The test is run from both ends, since either end alone decides.
pub fn oracle_mismatches(
    inst: &Instance,
    g: &VisibilityGraph,
    t6: &Theta6Graph,
) -> Vec<(VertexId, VertexId)> {
    let frame = t6.frame();
    let views: Vec<LocalView> = (0..inst.len())
        .into_par_iter()
        .map(|u| local_view(inst, g, u))
        .collect();
    let mut out: Vec<(VertexId, VertexId)> = g
        .edges()
        .par_bridge()
        .filter(|&(u, v, _)| {
            let local = local_edge_oracle(&views[u], v, &frame);
            local != local_edge_oracle(&views[v], u, &frame) || local != t6.has_edge(u, v)
        })
        .map(|(u, v, _)| (u, v))
        .collect();
    out.sort_unstable();
    out
}
