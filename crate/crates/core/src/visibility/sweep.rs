//! Rotational sweep: the vertices one vertex sees, in `O((n + m) log n)`
//! comparisons plus vector shifts.

use std::cmp::Ordering;

use crate::geom::{closer_along_ray, properly_intersects, Point, Segment};
use crate::instance::{Instance, VertexId};

fn half(v: Point) -> u8 {
    if v.y > 0 || (v.y == 0 && v.x > 0) {
        0
    } else {
        1
    }
}

/// Counter-clockwise angular order of directions from the positive x-axis.
fn angle_cmp(a: Point, b: Point) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&a.cross(b)))
}

/// Ids of the vertices visible from `u`, in sweep order.
pub fn visible_from(inst: &Instance, u: VertexId) -> Vec<VertexId> {
    let apex = inst.point(u);
    let mut order: Vec<VertexId> = (0..inst.len()).filter(|&v| v != u).collect();
    if order.is_empty() {
        return order;
    }
    order.sort_by(|&a, &b| angle_cmp(inst.point(a) - apex, inst.point(b) - apex));

    // Constraints away from u, oriented so the sweep meets `start` first.
    // `starts[v]`/`ends[v]` list the constraints beginning/ending at v.
    let mut starts = vec![Vec::new(); inst.len()];
    let mut ends = vec![Vec::new(); inst.len()];
    let mut oriented = Vec::with_capacity(inst.constraints().len());
    for (k, &(i, j)) in inst.constraints().iter().enumerate() {
        if i == u || j == u {
            oriented.push(None);
            continue;
        }
        let (s, e) = if (inst.point(i) - apex).cross(inst.point(j) - apex) > 0 {
            (i, j)
        } else {
            (j, i)
        };
        starts[s].push(k);
        ends[e].push(k);
        oriented.push(Some(Segment::new(inst.point(s), inst.point(e))));
    }

    // Initial ray: strictly inside the angular gap from the last vertex
    // round to the first one.
    let first = inst.point(order[0]) - apex;
    let last = inst.point(*order.last().unwrap()) - apex;
    let c = last.cross(first);
    let r0 = if order.len() == 1 {
        -first
    } else if c > 0 {
        last + first
    } else if c < 0 {
        -(last + first)
    } else {
        Point::new(-last.y, last.x)
    };

    let mut status: Vec<usize> = oriented
        .iter()
        .enumerate()
        .filter_map(|(k, s)| {
            let s = (*s)?;
            ((s.a - apex).cross(r0) > 0 && r0.cross(s.b - apex) > 0).then_some(k)
        })
        .collect();
    status.sort_by(|&a, &b| order_at(apex, oriented[a].unwrap(), oriented[b].unwrap()));

    let mut out = Vec::new();
    for &p in &order {
        for k in &ends[p] {
            if let Some(pos) = status.iter().position(|x| x == k) {
                status.remove(pos);
            }
        }
        let up = Segment::new(apex, inst.point(p));
        let blocked = status
            .first()
            .is_some_and(|&k| properly_intersects(up, oriented[k].unwrap()));
        if !blocked || inst.is_constraint(u, p) {
            out.push(p);
        }
        for &k in &starts[p] {
            let s = oriented[k].unwrap();
            let pos = status
                .partition_point(|&x| order_at(apex, oriented[x].unwrap(), s) == Ordering::Less);
            status.insert(pos, k);
        }
    }
    out
}

fn order_at(apex: Point, a: Segment, b: Segment) -> Ordering {
    if a == b {
        Ordering::Equal
    } else if closer_along_ray(apex, a, b) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}
