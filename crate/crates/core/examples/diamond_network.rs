//! Single-path routing against multi-path flooding on the four-point diamond.
//! Flooding uses both relays at once and doubles the rate.

use qnetcap::{fixtures, flow, oracle, report, single_path, ChannelSpec};

fn main() -> qnetcap::Result<()> {
    for eta in [0.1, 0.5, 0.9] {
        let net = fixtures::diamond(ChannelSpec::lossy(eta));
        let single = single_path::widest_path(&net)?;
        let multi = flow::max_flow(&net);
        println!(
            "eta = {eta}: single-path {:.9}, multi-path {:.9}, ratio {:.6}",
            single.capacity.bits(),
            multi.value.bits(),
            multi.value.bits() / single.capacity.bits()
        );
    }

    let net = fixtures::diamond(ChannelSpec::lossy(0.5));
    println!();
    println!("single-path report:");
    print!("{}", report::route_text(&single_path::widest_path(&net)?));
    println!();
    println!("multi-path report:");
    print!("{}", report::flow_text(&flow::max_flow(&net)));
    println!();
    println!("simple routes:");
    for route in oracle::enumerate_simple_routes(&net)? {
        println!("  {}", route.points.join(" - "));
    }
    Ok(())
}
