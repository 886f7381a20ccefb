//! Local routing on visibility graphs of points with non-crossing line
//! segment constraints.
//!
//! Coordinates are integers and every predicate is exact. The crate builds
//! the visibility graph and the constrained Θ₆-graph, routes a message using
//! only the current vertex's neighbourhood plus a fixed-size header, and
//! provides the adversarial instances used to measure how far such routes
//! can stray from shortest paths.
//!
//! ```
//! use visroute::geom::Frame;
//! use visroute::instance::gen_random;
//! use visroute::router::{route, Mode, Outcome};
//! use visroute::visibility::build_visibility_graph;
//!
//! let inst = gen_random(20, 1, 0.5).unwrap();
//! let g = build_visibility_graph(&inst);
//! let tr = route(&inst, &g, 0, 19, Mode::Vis, Frame::canonical(), None);
//! assert_eq!(tr.outcome, Outcome::Reached);
//! ```

pub mod chains;
pub mod cli;
pub mod geom;
pub mod instance;
pub mod lowerbounds;
pub mod render;
pub mod router;
pub mod theta6;
pub mod visibility;
