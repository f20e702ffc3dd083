//! Capacity of an optimally spaced lossy repeater line versus its total
//! loss, for several repeater counts, as CSV on standard output.

use std::io;

use qnetcap::sweep::{sweep, LossRange, SweepSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = SweepSpec {
        loss_db: LossRange::new(0.0, 50.0, 1.0)?,
        repeater_counts: vec![0, 1, 2, 10, 100],
    };
    sweep(&spec)?.write_csv(io::stdout().lock())?;
    Ok(())
}
