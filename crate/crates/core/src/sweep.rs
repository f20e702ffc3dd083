//! Capacity-versus-loss tables for plotting.
//!
//! Cells are written with nine significant digits, `.` as decimal separator
//! and LF line endings. A line with zero loss has unbounded capacity and is
//! written as `inf`.

use std::io::{self, Write};

use crate::chain::equidistant_lossy_capacity;
use crate::channel::{self, CapacityBits, ChannelSpec, FIBER_DB_PER_KM};
use crate::error::{Error, Result};

pub const SIGNIFICANT_DIGITS: usize = 9;

/// Evenly spaced loss values in dB, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossRange {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl LossRange {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self> {
        if !(start.is_finite() && start >= 0.0) {
            return Err(Error::invalid("start", format!("must be finite and >= 0, got {start}")));
        }
        if !(stop.is_finite() && stop >= start) {
            return Err(Error::invalid("stop", format!("must be finite and >= start, got {stop}")));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::invalid("step", format!("must be finite and > 0, got {step}")));
        }
        Ok(LossRange { start, stop, step })
    }

    /// Grid values `start + i * step`; a stop within 1e-9 steps of a grid
    /// point is included.
    pub fn values(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..count).map(|i| self.start + i as f64 * self.step).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub loss_db: LossRange,
    pub repeater_counts: Vec<u32>,
}

/// Capacity of a lossy line, `None` when the loss is zero and the capacity
/// unbounded.
fn line_capacity(loss_db: f64, n_repeaters: u32) -> Result<Option<CapacityBits>> {
    let eta = channel::db_to_transmissivity(loss_db)?;
    if eta >= 1.0 {
        return Ok(None);
    }
    equidistant_lossy_capacity(eta, n_repeaters).map(Some)
}

fn multiband_capacity(loss_db: f64, bands: u32) -> Result<Option<CapacityBits>> {
    let eta = channel::db_to_transmissivity(loss_db)?;
    if eta >= 1.0 {
        return Ok(None);
    }
    ChannelSpec::multiband_lossy(eta, bands).capacity().map(Some)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Option<f64>>>,
}

impl Table {
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{}", self.header.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| c.map_or_else(|| "inf".to_owned(), format_significant))
                .collect();
            writeln!(out, "{}", cells.join(","))?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is ascii")
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }
}

/// Equidistant-repeater capacity versus total line loss. The `N=0` column is
/// the repeaterless bound.
pub fn sweep(spec: &SweepSpec) -> Result<Table> {
    let mut header = vec!["loss_db".to_owned()];
    header.extend(spec.repeater_counts.iter().map(|n| format!("N={n}")));
    let mut rows = Vec::new();
    for db in spec.loss_db.values() {
        let mut row = vec![Some(db)];
        for &n in &spec.repeater_counts {
            row.push(line_capacity(db, n)?.map(CapacityBits::bits));
        }
        rows.push(row);
    }
    Ok(Table { header, rows })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultibandComparison {
    pub loss_db: LossRange,
    pub bands: Vec<u32>,
    pub repeater_counts: Vec<u32>,
}

/// Multiband repeaterless lines against single-band repeater chains over the
/// same loss axis. Distance assumes 0.2 dB/km fiber.
pub fn compare_multiband(spec: &MultibandComparison) -> Result<Table> {
    let mut header = vec!["loss_db".to_owned(), "distance_km".to_owned()];
    header.extend(spec.bands.iter().map(|m| format!("M={m}")));
    header.extend(spec.repeater_counts.iter().map(|n| format!("N={n}")));
    let mut rows = Vec::new();
    for db in spec.loss_db.values() {
        let mut row = vec![Some(db), Some(channel::fiber_length_km(db, FIBER_DB_PER_KM)?)];
        for &m in &spec.bands {
            row.push(multiband_capacity(db, m)?.map(CapacityBits::bits));
        }
        for &n in &spec.repeater_counts {
            row.push(line_capacity(db, n)?.map(CapacityBits::bits));
        }
        rows.push(row);
    }
    Ok(Table { header, rows })
}

/// Formats with [`SIGNIFICANT_DIGITS`] significant digits: fixed notation for
/// magnitudes in `[1e-5, 1e9)`, scientific otherwise.
pub fn format_significant(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let exponent: i32 = sci[sci.find('e').expect("exponent") + 1..]
        .parse()
        .expect("integer exponent");
    if (-5..9).contains(&exponent) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exponent) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(0.152_003_093_445_05), "0.152003093");
        assert_eq!(format_significant(1.0), "1.00000000");
        assert_eq!(format_significant(50.0), "50.0000000");
        assert_eq!(format_significant(1.442_702_254_412_258e-5), "0.0000144270225");
        assert_eq!(format_significant(1.4427e-7), "1.44270000e-7");
        assert_eq!(format_significant(9.999_999_999_9), "10.0000000");
        assert_eq!(format_significant(0.0), "0");
    }

    #[test]
    fn ranges() {
        assert_eq!(LossRange::new(0.0, 50.0, 1.0).unwrap().values().len(), 51);
        assert_eq!(LossRange::new(5.0, 5.0, 1.0).unwrap().values(), vec![5.0]);
        assert_eq!(LossRange::new(0.0, 1.0, 0.1).unwrap().values().len(), 11);
        assert!(LossRange::new(-1.0, 5.0, 1.0).is_err());
        assert!(LossRange::new(2.0, 1.0, 1.0).is_err());
        assert!(LossRange::new(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn zero_loss_is_unbounded() {
        let table = sweep(&SweepSpec {
            loss_db: LossRange::new(0.0, 1.0, 1.0).unwrap(),
            repeater_counts: vec![0, 1],
        })
        .unwrap();
        assert_eq!(table.rows[0], vec![Some(0.0), None, None]);
        assert!(table.to_csv().starts_with("loss_db,N=0,N=1\n0,inf,inf\n"));
    }

    #[test]
    fn multiband_columns() {
        let half = 10.0 * 2f64.log10();
        let table = compare_multiband(&MultibandComparison {
            loss_db: LossRange::new(half, half, 1.0).unwrap(),
            bands: vec![1, 10],
            repeater_counts: vec![0],
        })
        .unwrap();
        let row = &table.rows[0];
        assert!((row[1].unwrap() - half / 0.2).abs() < 1e-12);
        assert!((row[3].unwrap() - 10.0).abs() < 1e-9);
        assert_eq!(row[2], row[4]);
    }
}
