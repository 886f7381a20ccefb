//! Build the visibility graph with the angular sweep and check it against
//! the quadratic brute force.
//!
//!     cargo run --release --example visibility_graph

use std::time::Instant;

use visroute::instance::gen_random;
use visroute::visibility::{build_visibility_graph_with, Builder};

fn main() {
    for n in [50, 200, 400] {
        let inst = gen_random(n, 7, 0.5).unwrap();
        let t = Instant::now();
        let sweep = build_visibility_graph_with(&inst, Builder::Sweep);
        let ts = t.elapsed();
        let t = Instant::now();
        let brute = build_visibility_graph_with(&inst, Builder::BruteForce);
        let tb = t.elapsed();
        let same = sweep.edges().eq(brute.edges());
        println!(
            "n={n} edges={} sweep={ts:.1?} brute={tb:.1?} identical={same}",
            sweep.edge_count()
        );
    }
}
