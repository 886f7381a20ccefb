//! Route on the grid construction, then drop every vertex the route never
//! saw and route again on what is left.
//!
//!     cargo run --release --example grid_trim

use visroute::geom::Frame;
use visroute::lowerbounds::{gen_grid, trim};
use visroute::router::{route, Mode};
use visroute::visibility::build_visibility_graph;

fn main() {
    let f = Frame::canonical();
    for n in [10, 20] {
        let grid = gen_grid(n).unwrap();
        let g = build_visibility_graph(&grid.inst);
        let tr = route(&grid.inst, &g, grid.s, grid.t, Mode::Vis, f, None);
        let tm = trim(&grid.inst, &g, &tr.vertices(), grid.t);
        let (s2, t2) = (tm.map[grid.s].unwrap(), tm.map[grid.t].unwrap());
        let again = route(&tm.inst, &tm.graph, s2, t2, Mode::Vis, f, None);
        println!(
            "n={n} points={} hops={} kept={} hops_after_trim={}",
            grid.inst.len(),
            tr.step_count,
            tm.keep.len(),
            again.step_count
        );
    }
}
