//! Draw an instance, its Θ6 graph and one route as SVG.
//!
//!     cargo run --example render_svg > route.svg

use visroute::geom::Frame;
use visroute::instance::gen_random;
use visroute::render::{edge_list, render_svg, RenderOptions};
use visroute::router::{route, Mode};
use visroute::theta6::build_theta6;
use visroute::visibility::build_visibility_graph;

fn main() {
    let f = Frame::canonical();
    let inst = gen_random(30, 8, 0.5).unwrap();
    let g = build_visibility_graph(&inst);
    let t6 = build_theta6(&inst, &g, f).unwrap();
    let tr = route(&inst, &t6, 0, 29, Mode::Theta6, f, None);
    let opts = RenderOptions {
        labels: true,
        ..Default::default()
    };
    print!(
        "{}",
        render_svg(&inst, &edge_list(&t6, inst.len()), Some(&tr), &opts)
    );
}
