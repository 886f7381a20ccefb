//! Parse an instance from text and list its general-position violations.
//!
//!     cargo run --example validate_instance

use visroute::geom::Frame;
use visroute::instance::{parse, validate};

fn main() {
    let good = "# a triangle with one wall\n3 1\n0 0\n10 3\n4 9\n0 1\n";
    let bad = "3 0\n0 0\n5 5\n10 10\n";
    for (name, text) in [("good", good), ("bad", bad)] {
        let inst = parse(text.as_bytes()).expect("well-formed");
        let v = validate(&inst, &Frame::canonical());
        println!(
            "{name}: n={} constraints={} violations={}",
            inst.len(),
            inst.constraints().len(),
            v.len()
        );
        for x in v {
            println!("  {x}");
        }
    }
}
