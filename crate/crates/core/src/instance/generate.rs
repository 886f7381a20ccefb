use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spade::{DelaunayTriangulation, Point2, Triangulation};

use crate::geom::{
    properly_intersects, reduce_direction, strictly_on_segment, Frame, Point, Segment, Sign,
};

use super::validate::equidistant_point;
use super::{Instance, InstanceError, VertexId};

/// Side length of the sampling box per requested point.
pub const RANDOM_BOX_PER_POINT: i64 = 16;

const MAX_ATTEMPTS_PER_POINT: usize = 2000;

fn undirected(d: Point) -> Point {
    let d = reduce_direction(d);
    if d.x < 0 || (d.x == 0 && d.y < 0) {
        -d
    } else {
        d
    }
}

/// True iff `q` can join `pts` without breaking general position under
/// `frame`: distinct, no collinear triple, no boundary alignment.
pub fn fits_general_position(pts: &[Point], q: Point, frame: &Frame) -> bool {
    let mut dirs = HashSet::with_capacity(pts.len());
    for &p in pts {
        if p == q {
            return false;
        }
        let w = q - p;
        if [1, 3, 5]
            .iter()
            .any(|&m| frame.side_of_angle(w, m).sign() == Sign::Zero)
        {
            return false;
        }
        if !dirs.insert(undirected(w)) {
            return false;
        }
    }
    true
}

/// Random instance with `n` points in general position for the canonical
/// frame, and about `density·(3n − 6)` constraints drawn from a Delaunay
/// triangulation of the points. Deterministic in `seed`.
pub fn gen_random(n: usize, seed: u64, density: f64) -> Result<Instance, InstanceError> {
    gen_random_in_box(n, seed, density, RANDOM_BOX_PER_POINT * n as i64 + 64)
}

pub(crate) fn gen_random_in_box(
    n: usize,
    seed: u64,
    density: f64,
    side: i64,
) -> Result<Instance, InstanceError> {
    if n < 2 {
        return Err(InstanceError::Generation(format!("need n >= 2, got {n}")));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(InstanceError::Generation(format!(
            "density {density} outside [0, 1]"
        )));
    }
    let frame = Frame::canonical();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Point> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut placed = false;
        for _ in 0..MAX_ATTEMPTS_PER_POINT {
            let q = Point::new(rng.gen_range(0..side), rng.gen_range(0..side));
            if fits_general_position(&points, q, &frame) {
                points.push(q);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(InstanceError::Generation(format!(
                "box of side {side} too small for {n} points in general position"
            )));
        }
    }

    let budget = (density * (3 * n).saturating_sub(6) as f64).round() as usize;
    let mut edges = delaunay_edges(&points);
    edges.retain(|&(a, b)| equidistant_point(&points, a, b).is_none());
    edges.sort_unstable();
    edges.shuffle(&mut rng);
    edges.truncate(budget);
    Instance::new(points, edges)
}

/// Edges of the Delaunay triangulation of `points`, as `(min, max)` ids.
pub fn delaunay_edges(points: &[Point]) -> Vec<(VertexId, VertexId)> {
    let mut dt: DelaunayTriangulation<Point2<f64>> = DelaunayTriangulation::new();
    let mut id_of_handle = vec![usize::MAX; points.len()];
    for (id, p) in points.iter().enumerate() {
        let h = dt
            .insert(Point2::new(p.x as f64, p.y as f64))
            .expect("finite coordinates");
        if h.index() >= id_of_handle.len() {
            id_of_handle.resize(h.index() + 1, usize::MAX);
        }
        id_of_handle[h.index()] = id;
    }
    dt.undirected_edges()
        .map(|e| {
            let [a, b] = e.vertices();
            let (i, j) = (id_of_handle[a.fix().index()], id_of_handle[b.fix().index()]);
            (i.min(j), i.max(j))
        })
        .collect()
}

/// Greedy triangulation extending `fixed`: candidate pairs are added
/// shortest first whenever they cross no accepted edge and pass through no
/// point. The result is a maximal plane straight-line graph containing
/// `fixed`.
pub fn greedy_triangulation(
    points: &[Point],
    fixed: &[(VertexId, VertexId)],
) -> Vec<(VertexId, VertexId)> {
    let all: Vec<VertexId> = (0..points.len()).collect();
    greedy_complete(points, fixed, &all)
}

/// [`greedy_triangulation`] with new edges drawn only between vertices of
/// `candidates`.
pub(crate) fn greedy_complete(
    points: &[Point],
    fixed: &[(VertexId, VertexId)],
    candidates: &[VertexId],
) -> Vec<(VertexId, VertexId)> {
    let mut accepted: Vec<(VertexId, VertexId)> =
        fixed.iter().map(|&(i, j)| (i.min(j), i.max(j))).collect();
    let mut present: HashSet<(VertexId, VertexId)> = accepted.iter().copied().collect();
    let mut segs: Vec<Segment> = accepted
        .iter()
        .map(|&(i, j)| Segment::new(points[i], points[j]))
        .collect();
    let mut pairs: Vec<(i128, VertexId, VertexId)> = candidates
        .iter()
        .enumerate()
        .flat_map(|(a, &i)| {
            candidates[a + 1..]
                .iter()
                .map(move |&j| (i.min(j), i.max(j)))
        })
        .map(|(i, j)| (points[i].dist2(points[j]), i, j))
        .collect();
    pairs.sort_unstable();
    for (_, i, j) in pairs {
        if present.contains(&(i, j)) {
            continue;
        }
        let s = Segment::new(points[i], points[j]);
        if segs.iter().any(|&o| properly_intersects(s, o)) {
            continue;
        }
        if points.iter().any(|&p| strictly_on_segment(p, s)) {
            continue;
        }
        accepted.push((i, j));
        present.insert((i, j));
        segs.push(s);
    }
    accepted
}
