//! Build the zig-zag instance and compare routed, free and restricted path
//! lengths.
//!
//!     cargo run --release --example zigzag_bounds

use visroute::lowerbounds::{default_eps, gen_zigzag, zigzag_report};
use visroute::router::Mode;

fn main() {
    let rho = 1_000_000;
    for n in [12, 30, 60] {
        let z = gen_zigzag(n, rho, default_eps(rho)).unwrap();
        let rep = zigzag_report(&z, Mode::Vis).unwrap();
        let restricted = rep.restricted.as_ref().map_or(f64::NAN, |p| p.length);
        println!(
            "n={n} points={} free={:.1} restricted={:.1} ratio={:.2}",
            rep.points,
            rep.shortest.length,
            restricted,
            restricted / rep.shortest.length
        );
        for c in &rep.checks {
            println!(
                "  {} = {:.1} {} {:.1}: {}",
                c.name, c.value, c.relation, c.bound, c.holds
            );
        }
    }
}
