//! Instance builders and independent geometric checks shared by the
//! integration tests.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use visroute::geom::{properly_intersects, Frame, Point, Segment};
use visroute::instance::{fits_general_position, validate, Instance, VertexId};

/// A source whose cone toward `t` is closed off by one long constraint.
pub struct Blocked {
    pub inst: Instance,
    pub u: VertexId,
    pub t: VertexId,
    /// The wall, as ids of its left and right endpoint seen from `u`.
    pub wall: (VertexId, VertexId),
}

/// `true` iff `p` lies in the open upward cone of half-angle 30° at `apex`.
pub fn in_upward_cone(apex: Point, p: Point) -> bool {
    let d = p - apex;
    d.y > 0 && 3 * (d.x as i128) * (d.x as i128) < (d.y as i128) * (d.y as i128)
}

fn side(a: Point, b: Point, p: Point) -> i128 {
    (b - a).cross(p - a).signum()
}

/// Builds a fully-blocked instance: `u` at the origin, `t` well above it in
/// the upward cone, a wall crossing both sides of that cone in between,
/// scattered points everywhere except the part of the cone below the wall,
/// and a few short constraints that stay clear of segment `ut`.
pub fn blocked_instance(seed: u64) -> Blocked {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let frame = Frame::canonical();
    loop {
        let h: i64 = rng.gen_range(200..600);
        let u = Point::new(0, 0);
        let t = Point::new(rng.gen_range(-h / 3..h / 3), rng.gen_range(2 * h..3 * h));
        let a = Point::new(-rng.gen_range(h..2 * h), h + rng.gen_range(-h / 4..h / 4));
        let b = Point::new(rng.gen_range(h..2 * h), h + rng.gen_range(-h / 4..h / 4));
        let mut pts = vec![u];
        if ![t, a, b].iter().all(|&q| {
            let ok = fits_general_position(&pts, q, &frame);
            pts.push(q);
            ok
        }) {
            continue;
        }
        let extra = rng.gen_range(12..36);
        let mut tries = 0;
        while pts.len() < 4 + extra && tries < 10_000 {
            tries += 1;
            let q = Point::new(rng.gen_range(-3 * h..3 * h), rng.gen_range(-h..4 * h));
            let hidden_in_cone = in_upward_cone(u, q) && side(a, b, q) != side(a, b, u);
            if in_upward_cone(u, q) && !hidden_in_cone {
                continue;
            }
            if fits_general_position(&pts, q, &frame) {
                pts.push(q);
            }
        }

        let ut = Segment::new(u, t);
        let mut cons: Vec<(VertexId, VertexId)> = vec![(2, 3)];
        let want = rng.gen_range(0..6);
        for _ in 0..200 {
            if cons.len() > want {
                break;
            }
            let i = rng.gen_range(4..pts.len());
            let j = rng.gen_range(4..pts.len());
            if i == j || pts[i].dist2(pts[j]) > (h as i128) * (h as i128) {
                continue;
            }
            let s = Segment::new(pts[i], pts[j]);
            let clear = !properly_intersects(s, ut)
                && cons.iter().all(|&(x, y)| {
                    (x, y) != (i, j)
                        && (x, y) != (j, i)
                        && !properly_intersects(s, Segment::new(pts[x], pts[y]))
                });
            if clear {
                cons.push((i, j));
            }
        }
        let inst = match Instance::new(pts, cons) {
            Ok(i) => i,
            Err(_) => continue,
        };
        if !validate(&inst, &frame).is_empty() {
            continue;
        }
        return Blocked {
            inst,
            u: 0,
            t: 1,
            wall: (2, 3),
        };
    }
}

/// The constraint properly crossing `ut` nearest to `u`, by the parameter
/// of the crossing along `ut`; `None` if nothing crosses.
pub fn closest_crossing(inst: &Instance, u: VertexId, t: VertexId) -> Option<(VertexId, VertexId)> {
    let (p, q) = (inst.point(u), inst.point(t));
    let ut = Segment::new(p, q);
    let mut best: Option<(f64, (VertexId, VertexId))> = None;
    for &(a, b) in inst.constraints() {
        let (pa, pb) = (inst.point(a), inst.point(b));
        if !properly_intersects(Segment::new(pa, pb), ut) {
            continue;
        }
        // p + λ(q − p) on line ab.
        let d = q - p;
        let e = pb - pa;
        let lambda = (pa - p).cross(e) as f64 / d.cross(e) as f64;
        if best.is_none_or(|(l, _)| lambda < l) {
            best = Some((lambda, (a, b)));
        }
    }
    best.map(|(_, c)| c)
}

/// Endpoint of `(a, b)` strictly right of the directed line `u → t`.
pub fn right_endpoint(
    inst: &Instance,
    u: VertexId,
    t: VertexId,
    (a, b): (VertexId, VertexId),
) -> VertexId {
    let (p, q) = (inst.point(u), inst.point(t));
    if (q - p).cross(inst.point(a) - p) < 0 {
        a
    } else {
        b
    }
}

/// Where the ray from `m` along the right boundary of its upward cone
/// (direction `(1, √3)`) meets the line through `a` and `b`, as the
/// parameter `μ` of `a + μ(b − a)`. Floating point, independent of the
/// library's exact kernel.
pub fn right_boundary_hit(m: Point, a: Point, b: Point) -> f64 {
    let (dx, dy) = (1.0, 3f64.sqrt());
    let (ex, ey) = ((b.x - a.x) as f64, (b.y - a.y) as f64);
    let (wx, wy) = ((a.x - m.x) as f64, (a.y - m.y) as f64);
    // m + λd = a + μe  ⇒  μ = (w × d) / (d × e)
    let cross = |x1: f64, y1: f64, x2: f64, y2: f64| x1 * y2 - y1 * x2;
    cross(wx, wy, dx, dy) / cross(dx, dy, ex, ey)
}

/// `true` iff `sub` appears in `seq` in order.
pub fn is_subsequence(sub: &[VertexId], seq: &[VertexId]) -> bool {
    let mut it = seq.iter();
    sub.iter().all(|x| it.any(|y| y == x))
}
