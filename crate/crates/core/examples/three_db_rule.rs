//! How much loss a link can have while still carrying one bit per use, and
//! how many equidistant repeaters a long line needs for that rate.

use qnetcap::chain::{equidistant_lossy_capacity, max_link_loss_for_rate, min_repeaters_for_rate};
use qnetcap::channel::{db_to_transmissivity, fiber_length_km, FIBER_DB_PER_KM};

fn main() -> qnetcap::Result<()> {
    let db = max_link_loss_for_rate(1.0)?;
    let km = fiber_length_km(db, FIBER_DB_PER_KM)?;
    println!("1 bit/use per link tolerates {db:.4} dB, i.e. {km:.2} km of fiber at {FIBER_DB_PER_KM} dB/km");

    for target in [0.1, 0.5, 2.0, 4.0] {
        println!("  {target:>4} bits/use -> {:.4} dB per link", max_link_loss_for_rate(target)?);
    }

    println!();
    println!("repeaters needed for 1 bit/use over a lossy line:");
    for total_db in [3.0, 10.0, 30.0, 60.0, 120.0] {
        let eta = db_to_transmissivity(total_db)?;
        let n = min_repeaters_for_rate(eta, 1.0)?;
        println!(
            "  {total_db:>5} dB ({:>5.0} km): N = {n:>2}, capacity {:.6}",
            fiber_length_km(total_db, FIBER_DB_PER_KM)?,
            equidistant_lossy_capacity(eta, n)?.bits()
        );
    }
    Ok(())
}
