//! Walk a convex chain inside a triangle using only local views, and compare
//! it with the hull computed globally.
//!
//!     cargo run --example convex_chain

use visroute::chains::{chain_first_step, chain_step, convex_chain_oracle, ChainState, Turn};
use visroute::geom::Point;
use visroute::instance::Instance;
use visroute::visibility::{build_visibility_graph, local_view};

fn main() {
    // u, v, w, then points inside the triangle.
    let pts = [
        (0, 0),
        (100, 0),
        (50, 90),
        (30, 20),
        (52, 31),
        (70, 17),
        (45, 8),
    ]
    .map(|(x, y)| Point::new(x, y))
    .to_vec();
    let (u, v, w) = (0, 1, 2);
    let inst = Instance::new(pts, vec![(u, w), (v, w)]).unwrap();
    let g = build_visibility_graph(&inst);

    let want = convex_chain_oracle(&inst, &g, u, v, w).unwrap();
    let turn = Turn::for_triangle(inst.point(u), inst.point(v), inst.point(w));
    let mut walk = vec![u];
    let mut next = chain_first_step(&local_view(&inst, &g, u), inst.point(w), turn).unwrap();
    while next != v {
        let pred = *walk.last().unwrap();
        walk.push(next);
        let st = ChainState {
            predecessor: pred,
            turn,
        };
        next = chain_step(&local_view(&inst, &g, next), &st).unwrap();
    }
    walk.push(v);
    println!("hull  {want:?}");
    println!("local {walk:?}");
}
