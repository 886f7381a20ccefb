//! Generate seeded random instances at a few constraint densities and write
//! one back out in the text format.
//!
//!     cargo run --example generate_random

use visroute::geom::Frame;
use visroute::instance::{gen_random, serialize, validate};

fn main() {
    for density in [0.0, 0.3, 0.7] {
        let inst = gen_random(50, 42, density).unwrap();
        assert!(validate(&inst, &Frame::canonical()).is_empty());
        println!(
            "density={density} n={} constraints={}",
            inst.len(),
            inst.constraints().len()
        );
    }
    let small = gen_random(6, 1, 0.5).unwrap();
    print!("{}", String::from_utf8(serialize(&small)).unwrap());
}
