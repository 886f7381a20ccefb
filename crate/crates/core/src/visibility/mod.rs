//! The visibility graph `Vis(P,S)` and the 1-local views routers consume.

mod sweep;

use rayon::prelude::*;
use serde::Serialize;

use crate::geom::{properly_intersects, Point, Segment};
use crate::instance::{Instance, VertexId};

pub use sweep::visible_from;

/// Undirected adjacency with a constraint flag per edge. Neighbour lists
/// are sorted by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisibilityGraph {
    adj: Vec<Vec<(VertexId, bool)>>,
}

/// How [`build_visibility_graph_with`] finds edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Builder {
    /// Test every pair against every constraint.
    BruteForce,
    /// Angular sweep around each vertex.
    #[default]
    Sweep,
}

/// True iff `u` and `v` see each other: `uv` is a constraint, or crosses
/// none.
pub fn is_visible(inst: &Instance, u: VertexId, v: VertexId) -> bool {
    assert_ne!(u, v, "visibility query on a single vertex");
    if inst.is_constraint(u, v) {
        return true;
    }
    let s = Segment::new(inst.point(u), inst.point(v));
    !inst
        .segments()
        .into_iter()
        .any(|c| properly_intersects(s, c))
}

pub fn build_visibility_graph(inst: &Instance) -> VisibilityGraph {
    build_visibility_graph_with(inst, Builder::default())
}

pub fn build_visibility_graph_with(inst: &Instance, builder: Builder) -> VisibilityGraph {
    let n = inst.len();
    let rows: Vec<Vec<VertexId>> = match builder {
        Builder::BruteForce => {
            let segs = inst.segments();
            (0..n)
                .into_par_iter()
                .map(|u| {
                    (0..n)
                        .filter(|&v| v != u)
                        .filter(|&v| {
                            inst.is_constraint(u, v) || {
                                let s = Segment::new(inst.point(u), inst.point(v));
                                !segs.iter().any(|&c| properly_intersects(s, c))
                            }
                        })
                        .collect()
                })
                .collect()
        }
        Builder::Sweep => (0..n)
            .into_par_iter()
            .map(|u| {
                let mut row = visible_from(inst, u);
                row.sort_unstable();
                row
            })
            .collect(),
    };
    let adj = rows
        .into_iter()
        .enumerate()
        .map(|(u, row)| {
            row.into_iter()
                .map(|v| (v, inst.is_constraint(u, v)))
                .collect()
        })
        .collect();
    VisibilityGraph { adj }
}

impl VisibilityGraph {
    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, u: VertexId) -> &[(VertexId, bool)] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search_by_key(&v, |&(w, _)| w).is_ok()
    }

    /// Each undirected edge once, as `(u, v, is_constraint)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, bool)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| {
            row.iter()
                .filter(move |&&(v, _)| u < v)
                .map(move |&(v, c)| (u, v, c))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Subgraph induced by the vertices with `keep[v]`. Ids are unchanged;
    /// dropped vertices keep empty neighbour lists.
    pub fn induced(&self, keep: &[bool]) -> VisibilityGraph {
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, row)| {
                if !keep[u] {
                    return Vec::new();
                }
                row.iter().copied().filter(|&(v, _)| keep[v]).collect()
            })
            .collect();
        VisibilityGraph { adj }
    }

    /// JSON adjacency: undirected edges with constraint flags, and the
    /// neighbour lists.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Edge {
            u: VertexId,
            v: VertexId,
            constraint: bool,
        }
        #[derive(Serialize)]
        struct Export {
            n: usize,
            edges: Vec<Edge>,
            adjacency: Vec<Vec<VertexId>>,
        }
        let export = Export {
            n: self.adj.len(),
            edges: self
                .edges()
                .map(|(u, v, constraint)| Edge { u, v, constraint })
                .collect(),
            adjacency: self
                .adj
                .iter()
                .map(|row| row.iter().map(|&(v, _)| v).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&export).expect("plain data serializes")
    }
}

/// Anything a [`LocalView`] can be cut from.
pub trait Adjacency {
    /// Neighbours of `u` with constraint flags.
    fn adjacent(&self, u: VertexId) -> Vec<(VertexId, bool)>;
}

impl Adjacency for VisibilityGraph {
    fn adjacent(&self, u: VertexId) -> Vec<(VertexId, bool)> {
        self.adj[u].clone()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Neighbor {
    pub id: VertexId,
    pub point: Point,
    pub is_constraint: bool,
}

/// Everything a router may know about its position: the current vertex,
/// its neighbours, and the constraints incident to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalView {
    pub id: VertexId,
    pub current: Point,
    pub neighbors: Vec<Neighbor>,
    pub incident_constraints: Vec<Segment>,
    /// Far endpoint id of each entry of `incident_constraints`.
    pub incident_ids: Vec<VertexId>,
}

impl LocalView {
    pub fn neighbor(&self, id: VertexId) -> Option<&Neighbor> {
        self.neighbors.iter().find(|n| n.id == id)
    }

    pub fn has_constraint_to(&self, id: VertexId) -> bool {
        self.incident_ids.contains(&id)
    }
}

pub fn local_view(inst: &Instance, g: &impl Adjacency, u: VertexId) -> LocalView {
    let neighbors = g
        .adjacent(u)
        .into_iter()
        .map(|(id, is_constraint)| Neighbor {
            id,
            point: inst.point(id),
            is_constraint,
        })
        .collect();
    let incident_ids: Vec<VertexId> = inst
        .incident(u)
        .iter()
        .map(|&k| inst.constraint_other(k, u))
        .collect();
    let incident_constraints = incident_ids
        .iter()
        .map(|&z| Segment::new(inst.point(u), inst.point(z)))
        .collect();
    LocalView {
        id: u,
        current: inst.point(u),
        neighbors,
        incident_constraints,
        incident_ids,
    }
}
