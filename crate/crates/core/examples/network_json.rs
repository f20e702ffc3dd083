//! Parses a network document and prints its canonical form along with a
//! short summary.
//!
//!     cargo run --example network_json -- path/to/network.json

use std::{env, fs, process};

use qnetcap::{parse_network, serialize_network};

const REFERENCE: &str = r#"{ "points": ["a","p1","p2","b"],
  "alice": "a", "bob": "b",
  "edges": [ {"id":"e1","u":"a","v":"p1","channel":{"kind":"lossy","eta":0.5}},
             {"id":"e2","u":"a","v":"p2","channel":{"kind":"erasure","p":0.1,"dim":2}},
             {"id":"e3","u":"p1","v":"p2","channel":{"kind":"dephasing","probs":[0.9,0.1]}},
             {"id":"e4","u":"p1","v":"b","channel":{"kind":"amplifier","gain":1.5}},
             {"id":"e5","u":"p2","v":"b","channel":{"kind":"multiband_lossy","eta":0.5,"bands":3}} ] }"#;

fn main() {
    let text = match env::args().nth(1) {
        Some(path) => fs::read_to_string(&path).unwrap_or_else(|e| {
            eprintln!("{path}: {e}");
            process::exit(2);
        }),
        None => REFERENCE.to_owned(),
    };
    let net = match parse_network(&text) {
        Ok(net) => net,
        Err(e) => {
            eprintln!("{e}");
            process::exit(2);
        }
    };

    print!("{}", serialize_network(&net));
    eprintln!(
        "{} points, {} edges, alice={} bob={} connected={}",
        net.point_count(),
        net.edge_count(),
        net.alice(),
        net.bob(),
        net.is_connected()
    );
    for edge in net.edges() {
        let capacity = net.edge_capacity(&edge.id).expect("edge exists");
        eprintln!("  {:>4} {:>3} - {:<3} {:<16} {:.6} bits", edge.id, edge.u, edge.v, edge.channel.kind_name(), capacity.bits());
    }
}
