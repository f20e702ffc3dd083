//! Multi-path capacity of a random mixed network: the directed flow network,
//! the optimal per-edge rates, and the minimum cut that certifies them.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qnetcap::flow::{build_flow_network, max_flow};
use qnetcap::{fixtures, oracle, report, single_path};

fn main() -> qnetcap::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let net = loop {
        let net = fixtures::random_network(&mut rng, 8, 0.5, fixtures::random_channel);
        if net.is_connected() {
            break net;
        }
    };

    let directed = build_flow_network(&net);
    println!("{} undirected edges -> {} arcs", net.edge_count(), directed.arcs.len());
    for arc in &directed.arcs {
        println!("  {:>4}: {} -> {} ({:.6})", arc.edge, arc.from, arc.to, arc.capacity.bits());
    }

    let flow = max_flow(&net);
    println!();
    print!("{}", report::flow_text(&flow));
    println!(
        "min cut value {:.9}, brute force {:.9}, single-path {:.9}",
        flow.min_cut.multi_edge_value(&net).bits(),
        oracle::brute_multi_path_capacity(&net)?.bits(),
        single_path::widest_path(&net)?.capacity.bits()
    );
    Ok(())
}
