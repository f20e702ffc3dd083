//! The optimal single route found three ways: modified Dijkstra, the path
//! inside a maximum spanning tree, and the dual minimum single-edge cut.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qnetcap::single_path::{max_spanning_tree, min_single_edge_cut, tree_route_capacity, widest_path};
use qnetcap::{fixtures, oracle, report};

fn main() -> qnetcap::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let net = loop {
        let net = fixtures::random_network(&mut rng, 7, 0.5, fixtures::random_channel);
        if net.is_connected() {
            break net;
        }
    };
    println!("{}", qnetcap::serialize_network(&net));

    let dijkstra = widest_path(&net)?;
    println!("modified Dijkstra:");
    print!("{}", report::route_text(&dijkstra));

    let tree = max_spanning_tree(&net)?;
    let kruskal = tree_route_capacity(&net, &tree)?;
    println!();
    println!("maximum spanning tree [{}]:", tree.join(", "));
    print!("{}", report::route_text(&kruskal));

    let cut = min_single_edge_cut(&net)?;
    println!();
    println!(
        "minimum single-edge cut: {} -> {:.9}",
        report::cut_line(&cut),
        cut.single_edge_value(&net).expect("connected").bits()
    );

    let brute = oracle::brute_single_path_capacity(&net)?;
    println!(
        "brute force: routes {:.9}, cuts {:.9}",
        brute.by_routes.bits(),
        brute.by_cuts.bits()
    );
    Ok(())
}
