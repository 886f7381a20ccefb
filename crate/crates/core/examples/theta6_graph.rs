//! Build the constrained Θ6 graph and confirm every edge is decided the same
//! way by the local test run from one endpoint's view.
//!
//!     cargo run --release --example theta6_graph

use visroute::geom::Frame;
use visroute::instance::gen_random;
use visroute::theta6::{build_theta6, oracle_mismatches};
use visroute::visibility::build_visibility_graph;

fn main() {
    let inst = gen_random(120, 11, 0.4).unwrap();
    let g = build_visibility_graph(&inst);
    let t6 = build_theta6(&inst, &g, Frame::canonical()).unwrap();
    let max_out = (0..inst.len()).map(|u| t6.outgoing(u).len()).max().unwrap();
    println!(
        "n={} vis_edges={} theta6_edges={} max_out={max_out}",
        inst.len(),
        g.edge_count(),
        t6.edge_count()
    );
    let bad = oracle_mismatches(&inst, &g, &t6);
    println!("local test mismatches: {}", bad.len());
}
