//! Serialise each routing message to bytes and replay the route hop by hop
//! from the decoded message and the current vertex's view alone.
//!
//!     cargo run --example message_replay

use visroute::geom::Frame;
use visroute::instance::gen_random;
use visroute::router::{route, step, MessageState, Mode, MESSAGE_BYTES};
use visroute::visibility::{build_visibility_graph, local_view};

fn main() {
    let f = Frame::canonical();
    let inst = gen_random(60, 13, 0.7).unwrap();
    let g = build_visibility_graph(&inst);
    let tr = route(&inst, &g, 4, 55, Mode::Vis, f, None);
    let mut at = tr.source;
    let mut msg = MessageState::from_bytes(&tr.messages[0].to_bytes()).unwrap();
    let mut hops = vec![at];
    while at != tr.dest {
        let d = step(&local_view(&inst, &g, at), &msg).unwrap();
        let bytes = d.state.to_bytes();
        assert_eq!(bytes.len(), MESSAGE_BYTES);
        msg = MessageState::from_bytes(&bytes).unwrap();
        at = d.next;
        hops.push(at);
    }
    println!("message size {MESSAGE_BYTES} bytes");
    println!("traced   {:?}", tr.vertices());
    println!("replayed {hops:?}");
    assert_eq!(hops, tr.vertices());
}
