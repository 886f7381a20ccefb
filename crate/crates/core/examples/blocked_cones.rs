//! Count, per vertex, the cones that hold points but no visible vertex, and
//! the distinct constraints responsible.
//!
//!     cargo run --example blocked_cones

use std::collections::BTreeSet;

use visroute::geom::Frame;
use visroute::instance::gen_random;
use visroute::theta6::blocking_constraints;
use visroute::visibility::build_visibility_graph;

fn main() {
    let f = Frame::canonical();
    let inst = gen_random(80, 21, 0.9).unwrap();
    let g = build_visibility_graph(&inst);
    let mut hist = [0usize; 7];
    let mut worst = 0;
    for u in 0..inst.len() {
        let b = blocking_constraints(&inst, &g, u, &f);
        hist[b.len()] += 1;
        worst = worst.max(b.iter().map(|&(_, k)| k).collect::<BTreeSet<_>>().len());
    }
    println!("vertices by number of fully blocked cones: {hist:?}");
    println!("most distinct blocking constraints at one vertex: {worst}");
}
