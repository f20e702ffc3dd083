//! Two-way capacities of each distillable channel family.

use qnetcap::channel::{binary_entropy, db_to_transmissivity};
use qnetcap::ChannelSpec;

fn main() -> qnetcap::Result<()> {
    let channels = [
        ("pure loss, eta = 0.5", ChannelSpec::lossy(0.5)),
        ("pure loss, 20 dB", ChannelSpec::lossy(db_to_transmissivity(20.0)?)),
        ("amplifier, g = 1.5", ChannelSpec::amplifier(1.5)),
        ("qubit dephasing, p = 0.11", ChannelSpec::dephasing(0.11)),
        (
            "qutrit dephasing",
            ChannelSpec::Dephasing {
                probs: vec![0.8, 0.1, 0.1],
            },
        ),
        ("qubit erasure, p = 0.2", ChannelSpec::erasure(0.2)),
        ("ququart erasure, p = 0.25", ChannelSpec::Erasure { p: 0.25, dim: 4 }),
        ("10-band loss, eta = 0.5", ChannelSpec::multiband_lossy(0.5, 10)),
        ("dephasing, p = 0.7", ChannelSpec::dephasing(0.7)),
    ];

    for (label, spec) in &channels {
        let capacity = spec.capacity()?;
        print!("{label:<28} {:>12.9} bits/use", capacity.bits());
        for warning in spec.warnings() {
            print!("  (warning: {warning})");
        }
        println!();
    }

    println!();
    println!("H2(0.11) = {:.12}", binary_entropy(0.11)?);
    match ChannelSpec::lossy(1.0).capacity() {
        Err(e) => println!("eta = 1 is rejected: {e}"),
        Ok(c) => println!("unexpected capacity {c}"),
    }
    Ok(())
}
