use crate::geom::{orient_sign, Frame, Sign};
use crate::instance::VertexId;
use crate::visibility::LocalView;

use super::subcone_minimum;

fn expect_gp<T>(r: Result<T, crate::geom::GeomError>) -> T {
    r.unwrap_or_else(|e| panic!("local edge test on a degenerate input: {e}"))
}

/// Decides from `u`'s visibility neighbourhood alone whether `uv` is an
/// edge of the constrained Θ₆-graph.
///
/// `uv` is an edge when `v` is `u`'s closest vertex in a subcone, or when
/// no neighbour of `u` lies in the canonical triangle of `v` toward `u`
/// after clipping by the constraints at `u` that leave through its sides.
///
/// Panics if `v` is not a neighbour in `view` or the input violates general
/// position.
pub fn local_edge_oracle(view: &LocalView, v: VertexId, frame: &Frame) -> bool {
    let u = view.current;
    let vp = view
        .neighbor(v)
        .unwrap_or_else(|| panic!("{v} is not visible from {}", view.id))
        .point;

    let sc = expect_gp(frame.subcone_of(u, vp, &view.incident_constraints));
    for j in sc.indices() {
        if expect_gp(subcone_minimum(view, frame, sc.cone, j)) == Some(v) {
            return true;
        }
    }

    // Canonical triangle of v containing u.
    let cone = expect_gp(frame.cone_of(vp, u));
    let depth = frame.projection(u - vp, cone);

    // Constraints at u that exit the triangle through a side hide everything
    // on their far side from v.
    let clips: Vec<_> = view
        .incident_constraints
        .iter()
        .zip(&view.incident_ids)
        .filter(|&(_, &z)| z != v)
        .map(|(s, _)| s.other(u))
        .filter(|&z| {
            let below = (depth - frame.projection(z - vp, cone)).sign() == Sign::Positive;
            below && !expect_gp(frame.in_cone_triangle(vp, cone, depth, z))
        })
        .collect();

    let inside: Vec<_> = view
        .neighbors
        .iter()
        .filter(|x| {
            x.id != v
                && expect_gp(frame.in_cone_triangle(vp, cone, depth, x.point))
                && clips
                    .iter()
                    .all(|&z| orient_sign(u, z, x.point) == orient_sign(u, z, vp))
        })
        .collect();
    if view.has_constraint_to(v) {
        // uv splits the cone of v and u sits in the subcones on both sides;
        // one empty side suffices.
        let side = |s: Sign| inside.iter().all(|x| orient_sign(u, vp, x.point) != s);
        return side(Sign::Positive) || side(Sign::Negative);
    }
    inside.is_empty()
}
