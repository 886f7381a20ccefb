//! Route every ordered pair in parallel and summarise steps per pair.
//!
//!     cargo run --release --example all_pairs

use rayon::prelude::*;
use visroute::geom::Frame;
use visroute::instance::gen_random;
use visroute::router::{route, Mode, Outcome};
use visroute::theta6::build_theta6;
use visroute::visibility::build_visibility_graph;

fn main() {
    let f = Frame::canonical();
    let inst = gen_random(60, 3, 0.5).unwrap();
    let n = inst.len();
    let g = build_visibility_graph(&inst);
    let t6 = build_theta6(&inst, &g, f).unwrap();
    let pairs: Vec<_> = (0..n)
        .flat_map(|s| (0..n).map(move |t| (s, t)))
        .filter(|(s, t)| s != t)
        .collect();
    for mode in [Mode::Vis, Mode::Theta6] {
        let steps: Vec<Option<usize>> = pairs
            .par_iter()
            .map(|&(s, t)| {
                let tr = match mode {
                    Mode::Vis => route(&inst, &g, s, t, mode, f, None),
                    Mode::Theta6 => route(&inst, &t6, s, t, mode, f, None),
                };
                (tr.outcome == Outcome::Reached).then_some(tr.step_count)
            })
            .collect();
        let ok: Vec<usize> = steps.iter().flatten().copied().collect();
        let mean = ok.iter().sum::<usize>() as f64 / ok.len().max(1) as f64;
        println!(
            "{mode:?}: pairs={} reached={} mean_steps={mean:.2} max_steps={}",
            pairs.len(),
            ok.len(),
            ok.iter().max().unwrap_or(&0)
        );
    }
}
