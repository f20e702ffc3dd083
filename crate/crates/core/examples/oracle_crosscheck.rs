//! Runs the fast algorithms against brute-force enumeration on a seeded
//! suite of random networks and reports the largest discrepancies.

use std::time::Instant;

use qnetcap::fixtures::RandomSuite;
use qnetcap::single_path::{max_spanning_tree, min_single_edge_cut, tree_route_capacity, widest_path};
use qnetcap::{flow, oracle};

fn main() -> qnetcap::Result<()> {
    let suite = RandomSuite {
        seed: 1,
        count: 300,
        min_points: 3,
        max_points: 9,
        edge_probability: 0.5,
    };
    let start = Instant::now();
    let networks = suite.generate();

    let mut single_mismatches = 0;
    let mut worst_flow_gap: f64 = 0.0;
    for net in &networks {
        let dijkstra = widest_path(net)?.capacity;
        let kruskal = tree_route_capacity(net, &max_spanning_tree(net)?)?.capacity;
        let cut = min_single_edge_cut(net)?.single_edge_value(net).expect("connected");
        let brute = oracle::brute_single_path_capacity(net)?;
        if [kruskal, cut, brute.by_routes, brute.by_cuts].iter().any(|&c| c != dijkstra) {
            single_mismatches += 1;
        }
        let flow = flow::max_flow(net).value.bits();
        let brute_multi = oracle::brute_multi_path_capacity(net)?.bits();
        worst_flow_gap = worst_flow_gap.max((flow - brute_multi).abs());
    }

    println!("{} networks checked in {:?}", networks.len(), start.elapsed());
    println!("single-path disagreements: {single_mismatches}");
    println!("largest |max flow - min cut|: {worst_flow_gap:.3e}");
    Ok(())
}
