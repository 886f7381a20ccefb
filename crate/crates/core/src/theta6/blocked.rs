use crate::geom::{closer_along_ray, properly_intersects, ConeIndex, Frame, Segment};
use crate::instance::{Instance, VertexId};
use crate::visibility::VisibilityGraph;

/// Cones of `u` that contain points of `P` but no visible vertex, each with
/// the constraint hiding it (the first one met along any ray into the cone).
pub fn blocking_constraints(
    inst: &Instance,
    g: &VisibilityGraph,
    u: VertexId,
    frame: &Frame,
) -> Vec<(ConeIndex, usize)> {
    let up = inst.point(u);
    let mut witness: [Option<VertexId>; 6] = [None; 6];
    let mut seen = [false; 6];
    for p in (0..inst.len()).filter(|&p| p != u) {
        let c = frame
            .cone_of(up, inst.point(p))
            .expect("validated instance")
            .index();
        if g.has_edge(u, p) {
            seen[c] = true;
        } else if witness[c].is_none() {
            witness[c] = Some(p);
        }
    }
    let mut out = Vec::new();
    for c in ConeIndex::all() {
        let (false, Some(p)) = (seen[c.index()], witness[c.index()]) else {
            continue;
        };
        let ray = Segment::new(up, inst.point(p));
        let nearest = (0..inst.constraints().len())
            .filter(|&k| properly_intersects(ray, inst.segment(k)))
            .reduce(|a, b| {
                if closer_along_ray(up, inst.segment(b), inst.segment(a)) {
                    b
                } else {
                    a
                }
            })
            .expect("an invisible point lies behind some constraint");
        out.push((c, nearest));
    }
    out
}

/// Number of cones of `u` that contain points but no visible vertex.
pub fn count_fully_blocked_cones(
    inst: &Instance,
    g: &VisibilityGraph,
    u: VertexId,
    frame: &Frame,
) -> usize {
    blocking_constraints(inst, g, u, frame).len()
}
