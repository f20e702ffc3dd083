//! Parallel bands add capacity but keep the repeaterless loss scaling;
//! repeaters change the scaling. Prints where two repeaters overtake a
//! 100-band line.

use qnetcap::sweep::{compare_multiband, LossRange, MultibandComparison};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = compare_multiband(&MultibandComparison {
        loss_db: LossRange::new(0.0, 200.0, 1.0)?,
        bands: vec![1, 10, 100],
        repeater_counts: vec![0, 1, 2],
    })?;

    let m100 = table.column("M=100").expect("column");
    let n2 = table.column("N=2").expect("column");
    let crossover = table
        .rows
        .iter()
        .find(|row| matches!((row[n2], row[m100]), (Some(r), Some(m)) if r > m));
    match crossover {
        Some(row) => println!(
            "N=2 overtakes M=100 at {} dB ({} km)",
            row[0].expect("loss"),
            row[1].expect("distance")
        ),
        None => println!("no crossover below 200 dB"),
    }

    println!();
    let csv = table.to_csv();
    let mut lines = csv.lines();
    println!("{}", lines.next().expect("header"));
    for line in lines.step_by(20) {
        println!("{line}");
    }
    Ok(())
}
