use std::collections::HashMap;
use std::fmt;

use crate::geom::{properly_intersects, reduce_direction, Frame, Point, Sign, HARD_COORD_LIMIT};

use super::{Instance, VertexId};

/// A reason an instance is unusable under a given frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OutOfRange {
        id: VertexId,
    },
    DuplicatePoint {
        a: VertexId,
        b: VertexId,
    },
    DuplicateConstraint {
        a: usize,
        b: usize,
    },
    ConstraintsCross {
        a: usize,
        b: usize,
    },
    Collinear {
        a: VertexId,
        b: VertexId,
        c: VertexId,
    },
    /// Two points on a line parallel to a cone boundary; `perp_cone` is the
    /// cone whose bisector that line is perpendicular to.
    Aligned {
        a: VertexId,
        b: VertexId,
        perp_cone: usize,
    },
    /// A point on the perpendicular bisector of a constraint: routing to it
    /// could not tell the constraint's nearer endpoint.
    EquidistantEndpoints {
        point: VertexId,
        constraint: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange { id } => write!(f, "point {id} outside the coordinate bound"),
            Violation::DuplicatePoint { a, b } => write!(f, "points {a} and {b} coincide"),
            Violation::DuplicateConstraint { a, b } => {
                write!(f, "constraints {a} and {b} are duplicates")
            }
            Violation::ConstraintsCross { a, b } => write!(f, "constraints cross: {a} and {b}"),
            Violation::Collinear { a, b, c } => {
                write!(f, "three collinear points: {a}, {b}, {c}")
            }
            Violation::Aligned { a, b, perp_cone } => write!(
                f,
                "points {a} and {b} aligned along a cone boundary direction \
                 (perpendicular to C{perp_cone} bisector)"
            ),
            Violation::EquidistantEndpoints { point, constraint } => write!(
                f,
                "point {point} is equidistant from both endpoints of constraint {constraint}"
            ),
        }
    }
}

/// Boundary-line directions modulo 180°, as `ANGLE30` indices, paired with
/// the cone whose bisector each is perpendicular to.
const ALIGNMENT_DIRECTIONS: [(usize, usize); 3] = [(3, 0), (5, 1), (1, 2)];

/// A point other than `a` and `b` at equal distance from both.
pub(crate) fn equidistant_point(pts: &[Point], a: VertexId, b: VertexId) -> Option<VertexId> {
    (0..pts.len()).find(|&p| p != a && p != b && pts[p].dist2(pts[a]) == pts[p].dist2(pts[b]))
}

/// All structural and frame-relative general-position violations.
pub fn validate(inst: &Instance, frame: &Frame) -> Vec<Violation> {
    let mut out = Vec::new();
    let pts = inst.points();

    for (id, p) in pts.iter().enumerate() {
        if !p.in_range(HARD_COORD_LIMIT) {
            out.push(Violation::OutOfRange { id });
        }
    }

    let mut seen: HashMap<Point, VertexId> = HashMap::new();
    for (id, &p) in pts.iter().enumerate() {
        if let Some(&first) = seen.get(&p) {
            out.push(Violation::DuplicatePoint { a: first, b: id });
        } else {
            seen.insert(p, id);
        }
    }
    if out
        .iter()
        .any(|v| matches!(v, Violation::DuplicatePoint { .. }))
    {
        // Direction-based tests below assume distinct points.
        return out;
    }

    let mut seen_c: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for (k, &c) in inst.constraints().iter().enumerate() {
        if let Some(&first) = seen_c.get(&c) {
            out.push(Violation::DuplicateConstraint { a: first, b: k });
        } else {
            seen_c.insert(c, k);
        }
    }

    let segs = inst.segments();
    for a in 0..segs.len() {
        for b in a + 1..segs.len() {
            if properly_intersects(segs[a], segs[b]) {
                out.push(Violation::ConstraintsCross { a, b });
            }
        }
    }

    // Collinear triples: two other points in the same (undirected) direction
    // from some point.
    let mut reported = std::collections::HashSet::new();
    for (i, &p) in pts.iter().enumerate() {
        let mut dirs: HashMap<Point, VertexId> = HashMap::new();
        for (j, &q) in pts.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut d = reduce_direction(q - p);
            if d.x < 0 || (d.x == 0 && d.y < 0) {
                d = -d;
            }
            if let Some(&k) = dirs.get(&d) {
                let mut t = [i, j, k];
                t.sort_unstable();
                if reported.insert(t) {
                    out.push(Violation::Collinear {
                        a: t[0],
                        b: t[1],
                        c: t[2],
                    });
                }
            } else {
                dirs.insert(d, j);
            }
        }
    }

    for (constraint, &(a, b)) in inst.constraints().iter().enumerate() {
        for p in 0..pts.len() {
            if p != a && p != b && pts[p].dist2(pts[a]) == pts[p].dist2(pts[b]) {
                out.push(Violation::EquidistantEndpoints {
                    point: p,
                    constraint,
                });
            }
        }
    }

    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            let w = pts[b] - pts[a];
            for &(m, perp_cone) in &ALIGNMENT_DIRECTIONS {
                if frame.side_of_angle(w, m).sign() == Sign::Zero {
                    out.push(Violation::Aligned { a, b, perp_cone });
                }
            }
        }
    }
    out
}
