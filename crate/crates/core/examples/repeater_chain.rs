//! Repeater chains: weakest-link capacity, the equidistant lossy optimum, its
//! two asymptotic regimes and multiband chains.

use qnetcap::chain::{
    asymptotic_loss_dominant, asymptotic_repeater_dominant, chain_capacity, equidistant_lossy_capacity,
    multiband_chain_capacity, ChainSpec, MultibandChainSpec, MultibandLink,
};
use qnetcap::ChannelSpec;

fn main() -> qnetcap::Result<()> {
    let chain = ChainSpec::new(vec![
        ChannelSpec::lossy(0.9),
        ChannelSpec::erasure(0.2),
        ChannelSpec::dephasing(0.11),
        ChannelSpec::amplifier(2.0),
    ])?;
    let result = chain_capacity(&chain)?;
    println!(
        "{} repeaters, capacity {:.9} bits/use, limited by link {} ({})",
        chain.repeaters(),
        result.capacity.bits(),
        result.bottleneck,
        chain.links()[result.bottleneck].kind_name()
    );

    println!();
    println!("equidistant lossy line at 20 dB:");
    for n in [0, 1, 2, 5, 10, 100] {
        println!("  N = {n:>3}: {:.9} bits/use", equidistant_lossy_capacity(0.01, n)?.bits());
    }

    println!();
    let exact = equidistant_lossy_capacity(0.1, 1000)?.bits();
    let approx = asymptotic_repeater_dominant(0.1, 1000)?;
    println!("many repeaters (eta=0.1, N=1000): exact {exact:.6}, log2 N - log2 ln(1/eta) = {approx:.6}");
    let exact = equidistant_lossy_capacity(1e-12, 2)?.bits();
    let approx = asymptotic_loss_dominant(1e-12, 2)?;
    println!("high loss (eta=1e-12, N=2):       exact {exact:.6e}, eta^(1/3)/ln 2 = {approx:.6e}");

    println!();
    let multiband = MultibandChainSpec::new(vec![
        MultibandLink { eta: 0.5, bands: 10 },
        MultibandLink { eta: 0.9, bands: 2 },
    ])?;
    let c = multiband_chain_capacity(&multiband)?;
    println!(
        "multiband chain: {:.9} bits/use (-log2 theta_max = {:.9})",
        c.bits(),
        -multiband.theta_max().log2()
    );
    Ok(())
}
