use visroute::geom::{ConeIndex, Frame, Point};
use visroute::instance::{gen_random, Instance};
use visroute::theta6::{build_theta6, count_fully_blocked_cones, local_edge_oracle};
use visroute::visibility::{build_visibility_graph, is_visible, local_view};

/// Clockwise angle of `w` from `d`, in degrees within `[0, 360)`.
fn cw_angle(d: Point, w: Point) -> f64 {
    let along = (w.x * d.x + w.y * d.y) as f64;
    let right = (w.x * d.y - w.y * d.x) as f64;
    right.atan2(along).to_degrees().rem_euclid(360.0)
}

/// Naive constrained Θ₆ out-edges of `u`: `(cone, subcone, target)`.
fn reference_out(inst: &Instance, u: usize, d: Point) -> Vec<(usize, usize, usize)> {
    let up = inst.point(u);
    let offset = |w: Point| (cw_angle(d, w) + 30.0).rem_euclid(360.0);
    let cone = |w: Point| (offset(w) / 60.0) as usize;
    let within = |w: Point| offset(w) % 60.0;
    let fars: Vec<Point> = inst
        .incident(u)
        .iter()
        .map(|&k| inst.point(inst.constraint_other(k, u)) - up)
        .collect();
    let mut best: Vec<((usize, usize), f64, usize)> = Vec::new();
    for v in (0..inst.len()).filter(|&v| v != u && is_visible(inst, u, v)) {
        let w = inst.point(v) - up;
        let c = cone(w);
        let before = fars
            .iter()
            .filter(|&&z| z != w && cone(z) == c && within(z) < within(w))
            .count();
        let mut slots = vec![before];
        if fars.contains(&w) {
            slots.push(before + 1);
        }
        let len = ((w.x * w.x + w.y * w.y) as f64).sqrt();
        let proj = len * (within(w) - 30.0).to_radians().cos();
        for j in slots {
            match best.iter_mut().find(|b| b.0 == (c, j)) {
                Some(b) if proj < b.1 => *b = ((c, j), proj, v),
                Some(_) => {}
                None => best.push(((c, j), proj, v)),
            }
        }
    }
    let mut out: Vec<_> = best.into_iter().map(|((c, j), _, v)| (c, j, v)).collect();
    out.sort_unstable();
    out
}

#[test]
fn global_build_matches_naive_construction() {
    for seed in 0..40u64 {
        let density = [0.0, 0.3, 0.7][seed as usize % 3];
        let inst = gen_random(10 + seed as usize % 31, seed, density).unwrap();
        let frame = Frame::canonical();
        let g = build_visibility_graph(&inst);
        let t = build_theta6(&inst, &g, frame).unwrap();
        for u in 0..inst.len() {
            let mut got: Vec<_> = t
                .outgoing(u)
                .iter()
                .filter_map(|e| e.target.map(|v| (e.cone, e.subcone, v)))
                .collect();
            got.sort_unstable();
            assert_eq!(
                got,
                reference_out(&inst, u, frame.direction()),
                "seed {seed} u {u}"
            );
        }
    }
}

#[test]
fn oracle_matches_global_membership() {
    for seed in 0..150u64 {
        let density = [0.0, 0.3, 0.7][seed as usize % 3];
        let inst = gen_random(5 + seed as usize % 56, 1000 + seed, density).unwrap();
        let frame = Frame::canonical();
        let g = build_visibility_graph(&inst);
        let t = build_theta6(&inst, &g, frame).unwrap();
        for u in 0..inst.len() {
            let view = local_view(&inst, &g, u);
            for nb in &view.neighbors {
                assert_eq!(
                    local_edge_oracle(&view, nb.id, &frame),
                    t.has_edge(u, nb.id),
                    "seed {seed} u {u} v {}",
                    nb.id
                );
            }
        }
    }
}

#[test]
fn point_inside_triangle_removes_edge() {
    // (1,20) sits in the canonical triangle of (0,40) toward the origin, so
    // the origin is not the nearest vertex seen from (0,40) in that cone,
    // and (0,40) is not the nearest from the origin either.
    let inst = Instance::new(
        vec![Point::new(0, 0), Point::new(-3, 40), Point::new(1, 20)],
        vec![],
    )
    .unwrap();
    let frame = Frame::canonical();
    let g = build_visibility_graph(&inst);
    let t = build_theta6(&inst, &g, frame).unwrap();
    let view = local_view(&inst, &g, 0);
    assert!(!local_edge_oracle(&view, 1, &frame));
    assert!(!t.has_edge(0, 1));
    assert!(local_edge_oracle(&view, 2, &frame));
}

#[test]
fn one_constraint_blocks_two_cones() {
    // Endpoints in C5 and C2 of the origin; the constraint spans C0 and C1.
    let inst = Instance::new(
        vec![
            Point::new(0, 0),
            Point::new(-30, 8),
            Point::new(40, -9),
            Point::new(2, 50),
            Point::new(60, 20),
        ],
        vec![(1, 2)],
    )
    .unwrap();
    let frame = Frame::canonical();
    assert_eq!(
        frame.cone_of(Point::new(0, 0), Point::new(-30, 8)).unwrap(),
        ConeIndex::new(5)
    );
    assert_eq!(
        frame.cone_of(Point::new(0, 0), Point::new(40, -9)).unwrap(),
        ConeIndex::new(2)
    );
    let g = build_visibility_graph(&inst);
    assert_eq!(count_fully_blocked_cones(&inst, &g, 0, &frame), 2);
    let empty = Instance::new(inst.points().to_vec(), vec![]).unwrap();
    let g = build_visibility_graph(&empty);
    assert_eq!(count_fully_blocked_cones(&empty, &g, 0, &frame), 0);
}
