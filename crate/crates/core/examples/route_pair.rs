//! Route one pair in both modes and print the hops with their phases.
//!
//!     cargo run --example route_pair

use visroute::geom::Frame;
use visroute::instance::gen_random;
use visroute::router::{route, Mode};
use visroute::theta6::build_theta6;
use visroute::visibility::build_visibility_graph;

fn main() {
    let f = Frame::canonical();
    let inst = gen_random(40, 5, 0.6).unwrap();
    let g = build_visibility_graph(&inst);
    let t6 = build_theta6(&inst, &g, f).unwrap();
    let (s, t) = (0, 39);
    for tr in [
        route(&inst, &g, s, t, Mode::Vis, f, None),
        route(&inst, &t6, s, t, Mode::Theta6, f, None),
    ] {
        println!("{:?}: {:?} in {} steps", tr.mode, tr.outcome, tr.step_count);
        for st in &tr.steps {
            println!("  {:>3} {:?} {}", st.vertex, st.phase, st.note);
        }
    }
}
