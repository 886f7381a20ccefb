//! Convex chains of visibility edges inside a triangle, found globally (the
//! oracle) or one hop at a time from a [`LocalView`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{orient_sign, strictly_inside_triangle, Point, Sign};
use crate::instance::{Instance, VertexId};
use crate::visibility::{LocalView, VisibilityGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("chain precondition violated: {0}")]
    Precondition(String),
    #[error("no neighbour of {0} on the turn side")]
    Stuck(VertexId),
}

/// Rotation sense used when picking the next chain edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Turn {
    Cw,
    Ccw,
}

impl Turn {
    /// Sense in which the chain from `u` to `v` bends away from `w`: the
    /// first edge is found by rotating from `u→w` toward `v`.
    pub fn for_triangle(u: Point, v: Point, w: Point) -> Turn {
        if orient_sign(u, v, w) == Sign::Positive {
            Turn::Cw
        } else {
            Turn::Ccw
        }
    }

    fn side(self) -> Sign {
        match self {
            Turn::Cw => Sign::Negative,
            Turn::Ccw => Sign::Positive,
        }
    }
}

/// Chain memory carried in the message.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainState {
    pub predecessor: VertexId,
    pub turn: Turn,
}

/// Neighbour of `view` reached first when the ray from the current vertex
/// along `dir` rotates in the `turn` sense. Only neighbours strictly on the
/// turn side of the ray's line qualify.
pub fn rotate_from(view: &LocalView, dir: Point, turn: Turn) -> Result<VertexId, ChainError> {
    let side = turn.side();
    let m = view.current;
    let mut best: Option<(VertexId, Point)> = None;
    for nb in &view.neighbors {
        let w = nb.point - m;
        if Sign::of(dir.cross(w)) != side {
            continue;
        }
        // Within the open half-plane, `w` beats `b` iff `b` lies further in
        // the turn sense.
        best = match best {
            Some((_, b)) if Sign::of(w.cross(b)) != side => best,
            _ => Some((nb.id, w)),
        };
    }
    best.map(|(id, _)| id).ok_or(ChainError::Stuck(view.id))
}

/// Next vertex on a chain, continuing from `st.predecessor` through the
/// current vertex.
pub fn chain_step(view: &LocalView, st: &ChainState) -> Result<VertexId, ChainError> {
    let pred = view.neighbor(st.predecessor).ok_or_else(|| {
        ChainError::Precondition(format!(
            "predecessor {} is not a neighbour of {}",
            st.predecessor, view.id
        ))
    })?;
    rotate_from(view, view.current - pred.point, st.turn)
}

/// First chain vertex from the current vertex, rotating away from the ray
/// toward `toward`.
pub fn chain_first_step(
    view: &LocalView,
    toward: Point,
    turn: Turn,
) -> Result<VertexId, ChainError> {
    rotate_from(view, toward - view.current, turn)
}

fn convex_hull_ccw(pts: &mut [(Point, VertexId)]) -> Vec<(Point, VertexId)> {
    pts.sort_by_key(|&(p, _)| (p.x, p.y));
    let mut hull: Vec<(Point, VertexId)> = Vec::with_capacity(pts.len() + 1);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(Point, VertexId)>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &q in iter {
            while hull.len() >= start + 2
                && orient_sign(hull[hull.len() - 2].0, hull[hull.len() - 1].0, q.0)
                    != Sign::Positive
            {
                hull.pop();
            }
            hull.push(q);
        }
        hull.pop();
    }
    hull
}

/// The convex chain from `u` to `v` inside triangle `uvw`: the side of the
/// convex hull of `u`, `v` and the points strictly inside the triangle that
/// faces `w`.
pub fn convex_chain_oracle(
    inst: &Instance,
    g: &VisibilityGraph,
    u: VertexId,
    v: VertexId,
    w: VertexId,
) -> Result<Vec<VertexId>, ChainError> {
    if u == v || u == w || v == w {
        return Err(ChainError::Precondition("u, v, w must be distinct".into()));
    }
    if !g.has_edge(u, w) || !g.has_edge(v, w) {
        return Err(ChainError::Precondition(format!(
            "{u}-{w} and {v}-{w} must be visibility edges"
        )));
    }
    let (up, vp, wp) = (inst.point(u), inst.point(v), inst.point(w));
    let o = orient_sign(up, vp, wp);
    if o == Sign::Zero {
        return Err(ChainError::Precondition("degenerate triangle".into()));
    }
    for &k in inst.incident(w) {
        let z = inst.point(inst.constraint_other(k, w));
        if orient_sign(wp, up, z) == orient_sign(wp, up, vp)
            && orient_sign(wp, vp, z) == orient_sign(wp, vp, up)
        {
            return Err(ChainError::Precondition(format!(
                "{w} is the endpoint of a constraint entering triangle {u} {v} {w}"
            )));
        }
    }

    let mut pts: Vec<(Point, VertexId)> = (0..inst.len())
        .filter(|&x| strictly_inside_triangle(inst.point(x), up, vp, wp))
        .map(|x| (inst.point(x), x))
        .collect();
    pts.push((up, u));
    pts.push((vp, v));
    let hull = convex_hull_ccw(&mut pts);
    let n = hull.len();
    let iu = hull.iter().position(|h| h.1 == u).expect("u is extreme");
    // Counter-clockwise from u the hull reaches v directly when w is on the
    // right of u→v; otherwise the walk from u to v passes the chain.
    let ids: Vec<VertexId> = (0..n).map(|k| hull[(iu + k) % n].1).collect();
    let iv = ids.iter().position(|&x| x == v).expect("v is extreme");
    let chain: Vec<VertexId> = if o == Sign::Negative {
        ids[..=iv].to_vec()
    } else {
        let mut back: Vec<VertexId> = ids[iv..].to_vec();
        back.push(u);
        back.reverse();
        back
    };
    for e in chain.windows(2) {
        if !g.has_edge(e[0], e[1]) {
            return Err(ChainError::Precondition(format!(
                "chain edge {}-{} is not a visibility edge",
                e[0], e[1]
            )));
        }
    }
    Ok(chain)
}
