//! Per-phase decision rules. Each sees only the current [`LocalView`] and
//! the message.

use crate::chains::{chain_first_step, chain_step, ChainState, Turn};
use crate::geom::{
    closer_along_ray, orient_sign, properly_intersects, smaller_angle_to, ConeIndex, GeomError,
    Point, Segment, Sign,
};
use crate::instance::VertexId;
use crate::theta6::subcone_minimum;
use crate::visibility::LocalView;

use super::{Endpoint, MessageState, Mode, RouteError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaOutcome {
    Move(VertexId),
    Blocked,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AvoidOutcome {
    Move(VertexId),
    /// The current vertex ends the phase; see [`phase_end_resolution`].
    PhaseEnd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    /// Current vertex is the endpoint of `Q` nearer the destination.
    Theta,
    /// Head for the other endpoint first.
    Opposite(Endpoint),
}

fn gp(e: GeomError) -> RouteError {
    RouteError::GeneralPosition(e.to_string())
}

/// Is `x` a valid Θ-routing hop toward `t`: `t` itself, or strictly inside
/// the canonical triangle of the current vertex toward `t`.
fn valid_hop(
    view: &LocalView,
    st: &MessageState,
    to: Endpoint,
    x: VertexId,
) -> Result<bool, RouteError> {
    if x == to.id {
        return Ok(true);
    }
    let f = &st.frame;
    let u = view.current;
    let cone = f.cone_of(u, to.point).map_err(gp)?;
    let depth = f.projection(to.point - u, cone);
    let xp = view.neighbor(x).expect("candidate is a neighbour").point;
    f.in_cone_triangle(u, cone, depth, xp).map_err(gp)
}

/// Θ-routing hop toward `to`: the closest vertex in the subcone holding
/// `to`, if it lies in the canonical triangle.
pub(crate) fn theta_step_toward(
    view: &LocalView,
    st: &MessageState,
    to: Endpoint,
) -> Result<ThetaOutcome, RouteError> {
    let f = &st.frame;
    let u = view.current;
    // Both modes take the closest vertex in the subcone holding `to`; in
    // the visibility graph that is exactly the Θ₆ edge of that subcone.
    let sc = f
        .subcone_of(u, to.point, &view.incident_constraints)
        .map_err(gp)?;
    let mut candidates: Vec<VertexId> = Vec::new();
    for j in sc.indices() {
        candidates.extend(subcone_minimum(view, f, sc.cone, j).map_err(gp)?);
    }
    let mut chosen: Option<VertexId> = None;
    for x in candidates {
        if !valid_hop(view, st, to, x)? {
            continue;
        }
        chosen = match chosen {
            Some(c) if c == x => Some(c),
            Some(c) => {
                let cone = f.cone_of(u, to.point).map_err(gp)?;
                let (cp, xp) = (
                    view.neighbor(c).unwrap().point,
                    view.neighbor(x).unwrap().point,
                );
                if f.projection(xp - cp, cone).sign() == Sign::Negative {
                    Some(x)
                } else {
                    Some(c)
                }
            }
            None => Some(x),
        };
    }
    Ok(chosen.map_or(ThetaOutcome::Blocked, ThetaOutcome::Move))
}

/// Θ-routing hop toward the destination.
pub fn theta_step(view: &LocalView, st: &MessageState) -> Result<ThetaOutcome, RouteError> {
    theta_step_toward(view, st, st.dest)
}

/// Constraints at the current vertex properly crossing the stored segment
/// from the avoidance origin to the destination, as far endpoints.
fn crossing_constraints(view: &LocalView, st: &MessageState) -> Vec<(Segment, Endpoint)> {
    let Some(origin) = st.avoid_origin else {
        return Vec::new();
    };
    let ut = Segment::new(origin.point, st.dest.point);
    view.incident_constraints
        .iter()
        .zip(&view.incident_ids)
        .filter(|(s, _)| properly_intersects(**s, ut))
        .map(|(s, &id)| {
            (
                *s,
                Endpoint {
                    id,
                    point: s.other(view.current),
                },
            )
        })
        .collect()
}

/// At an endpoint of a constraint crossing `(avoid_origin, t)`: pick the
/// crossing nearest the origin and compare its endpoints' distances to `t`.
/// `None` when the current vertex is no such endpoint.
pub fn phase_end_resolution(
    view: &LocalView,
    st: &MessageState,
) -> Result<Option<Resolution>, RouteError> {
    let crossing = crossing_constraints(view, st);
    let Some(origin) = st.avoid_origin else {
        return Ok(None);
    };
    let Some(&(_, other)) = crossing.iter().reduce(|a, b| {
        if closer_along_ray(origin.point, b.0, a.0) {
            b
        } else {
            a
        }
    }) else {
        return Ok(None);
    };
    let t = st.dest.point;
    let here = view.current.dist2(t);
    let there = other.point.dist2(t);
    match here.cmp(&there) {
        std::cmp::Ordering::Less => Ok(Some(Resolution::Theta)),
        std::cmp::Ordering::Greater => Ok(Some(Resolution::Opposite(other))),
        std::cmp::Ordering::Equal => Err(RouteError::GeneralPosition(format!(
            "both endpoints of the blocking constraint at {} are equidistant from the destination",
            view.id
        ))),
    }
}

/// Does a constraint at the current vertex `m` enter the open triangle
/// `m a b`?
fn constraint_enters(view: &LocalView, a: Point, b: Point) -> bool {
    let m = view.current;
    view.incident_constraints.iter().any(|s| {
        let z = s.other(m);
        orient_sign(m, a, z) == orient_sign(m, a, b) && orient_sign(m, b, z) == orient_sign(m, b, a)
    })
}

/// The two avoidance candidates for reference cone `k`.
fn avoid_candidates(
    view: &LocalView,
    st: &MessageState,
    k: ConeIndex,
) -> Result<(Option<VertexId>, Option<VertexId>), RouteError> {
    let f = &st.frame;
    let m = view.current;
    let v = subcone_minimum(view, f, k.offset(2), 0).map_err(gp)?;
    let c1 = k.offset(1);
    let mut w: Option<(VertexId, Point)> = None;
    for nb in &view.neighbors {
        if f.cone_of(m, nb.point).map_err(gp)? != c1 {
            continue;
        }
        // Smallest angle with the boundary shared with the reference cone:
        // the most counter-clockwise neighbour of the cone.
        if w.is_none_or(|(_, b)| (nb.point - m).cross(b - m) < 0) {
            w = Some((nb.id, nb.point));
        }
    }
    Ok((v, w.map(|x| x.0)))
}

/// One avoidance hop in the Θ₆-graph. May move the reference cone one step
/// clockwise when neither candidate exists.
pub fn avoid_step_theta6(view: &LocalView, st: &mut MessageState) -> Result<VertexId, RouteError> {
    let f = st.frame;
    let mut k = st
        .avoid_ref_cone
        .ok_or_else(|| RouteError::Rule("avoidance without a reference cone".into()))?;
    let origin = st
        .avoid_origin
        .ok_or_else(|| RouteError::Rule("avoidance without an origin".into()))?;
    // The reference cone may move on once per phase.
    let shifted = f.cone_of(origin.point, st.dest.point).map_err(gp)? != k;
    for attempt in 0..(if shifted { 1 } else { 2 }) {
        let (v, w) = avoid_candidates(view, st, k)?;
        let pick = match (v, w) {
            (Some(v), None) => Some(v),
            (None, Some(w)) => Some(w),
            (Some(v), Some(w)) => {
                let vp = view.neighbor(v).unwrap().point;
                let wp = view.neighbor(w).unwrap().point;
                let in_c4 = f.cone_of(wp, vp).map_err(gp)? == k.offset(4);
                Some(if in_c4 && !constraint_enters(view, vp, wp) {
                    v
                } else {
                    w
                })
            }
            (None, None) => None,
        };
        if let Some(next) = pick {
            st.avoid_ref_cone = Some(k);
            return Ok(next);
        }
        if attempt == 0 {
            k = k.offset(1);
        }
    }
    Err(RouteError::Rule(format!(
        "no avoidance candidate at {} (reference cone {k:?})",
        view.id
    )))
}

/// One hop along the convex chain in the visibility graph.
pub fn avoid_step_vis(view: &LocalView, st: &mut MessageState) -> Result<VertexId, RouteError> {
    let next = match st.chain {
        None => chain_first_step(view, st.dest.point, Turn::Cw),
        Some(c) => chain_step(view, &c),
    }
    .map_err(|e| RouteError::Rule(e.to_string()))?;
    st.chain = Some(ChainState {
        predecessor: view.id,
        turn: Turn::Cw,
    });
    Ok(next)
}

/// One hop of the opposite-endpoint phase.
///
/// In the visibility graph the blocking constraint is an edge, so this is
/// a single hop. In the Θ₆-graph: go straight to the target if adjacent,
/// else take the Θ-routing hop toward it, else the neighbour closer to the
/// target making the smallest angle with the segment to it.
pub fn opposite_step(view: &LocalView, st: &MessageState) -> Result<VertexId, RouteError> {
    let target = st
        .opposite_target
        .ok_or_else(|| RouteError::Rule("opposite phase without a target".into()))?;
    if view.neighbor(target.id).is_some() {
        return Ok(target.id);
    }
    if st.mode == Mode::Vis {
        return Err(RouteError::Rule(format!(
            "blocking constraint endpoint {} is not adjacent to {}",
            target.id, view.id
        )));
    }
    if let ThetaOutcome::Move(x) = theta_step_toward(view, st, target)? {
        return Ok(x);
    }
    let here = view.current.dist2(target.point);
    let dir = target.point - view.current;
    view.neighbors
        .iter()
        .filter(|nb| nb.point.dist2(target.point) < here)
        .map(|nb| (nb.id, nb.point - view.current))
        .reduce(|a, b| {
            if smaller_angle_to(dir, b.1, a.1) {
                b
            } else {
                a
            }
        })
        .map(|a| a.0)
        .ok_or_else(|| {
            RouteError::Substitute(format!(
                "no neighbour of {} is closer to opposite endpoint {}",
                view.id, target.id
            ))
        })
}
