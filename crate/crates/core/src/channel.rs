//! Two-way capacities of distillable point-to-point channels.
//!
//! For every family handled here the quantum, entanglement and secret-key
//! two-way capacities coincide, so a single number in bits per channel use
//! describes the link.

use std::cmp::Ordering;
use std::f64::consts::LN_2;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on the normalization of a probability vector.
pub const PROB_SUM_TOLERANCE: f64 = 1e-12;

/// Absolute tolerance used when comparing capacities across algorithms.
pub const CAPACITY_TOLERANCE: f64 = 1e-9;

/// Default fiber attenuation in dB per kilometre.
pub const FIBER_DB_PER_KM: f64 = 0.2;

/// A capacity in target bits per use. Always finite and non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
#[serde(transparent)]
pub struct CapacityBits(f64);

impl CapacityBits {
    pub const ZERO: CapacityBits = CapacityBits(0.0);

    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::invalid(
                "capacity",
                format!("must be finite and non-negative, got {value}"),
            ));
        }
        // Normalize -0.0.
        Ok(CapacityBits(value + 0.0))
    }

    #[inline]
    pub fn bits(self) -> f64 {
        self.0
    }

    pub(crate) fn from_raw(value: f64) -> Self {
        debug_assert!(value.is_finite() && value >= 0.0, "bad capacity {value}");
        CapacityBits(value.max(0.0))
    }
}

impl Eq for CapacityBits {}

impl PartialOrd for CapacityBits {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CapacityBits {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for CapacityBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// One distillable channel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ChannelDoc", into = "ChannelDoc")]
pub enum ChannelSpec {
    /// Pure-loss bosonic channel with transmissivity `eta` in (0, 1).
    Lossy { eta: f64 },
    /// Quantum-limited amplifier with gain `gain` > 1.
    Amplifier { gain: f64 },
    /// Qudit dephasing channel; `probs[k]` is the probability of the k-th
    /// phase flip, so the dimension is `probs.len()`.
    Dephasing { probs: Vec<f64> },
    /// Qudit erasure channel.
    Erasure { p: f64, dim: u32 },
    /// `bands` parallel lossy channels sharing one transmissivity.
    MultibandLossy { eta: f64, bands: u32 },
}

/// Non-fatal observations about an otherwise valid channel.
#[derive(Debug, Clone, PartialEq)]
pub enum ChannelWarning {
    /// Total phase-flip probability above 1/2. The capacity formula is still
    /// evaluated; the usual convention relabels the flip so that p <= 1/2.
    DephasingAboveHalf { error_probability: f64 },
    /// Erasure probability above 1/2.
    ErasureAboveHalf { p: f64 },
}

impl fmt::Display for ChannelWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChannelWarning::DephasingAboveHalf { error_probability } => write!(
                f,
                "dephasing error probability {error_probability} exceeds 1/2"
            ),
            ChannelWarning::ErasureAboveHalf { p } => {
                write!(f, "erasure probability {p} exceeds 1/2")
            }
        }
    }
}

impl ChannelSpec {
    pub fn lossy(eta: f64) -> Self {
        ChannelSpec::Lossy { eta }
    }

    pub fn amplifier(gain: f64) -> Self {
        ChannelSpec::Amplifier { gain }
    }

    /// Qubit dephasing with flip probability `p`.
    pub fn dephasing(p: f64) -> Self {
        ChannelSpec::Dephasing {
            probs: vec![1.0 - p, p],
        }
    }

    /// Qubit erasure with erasure probability `p`.
    pub fn erasure(p: f64) -> Self {
        ChannelSpec::Erasure { p, dim: 2 }
    }

    pub fn multiband_lossy(eta: f64, bands: u32) -> Self {
        ChannelSpec::MultibandLossy { eta, bands }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            ChannelSpec::Lossy { .. } => "lossy",
            ChannelSpec::Amplifier { .. } => "amplifier",
            ChannelSpec::Dephasing { .. } => "dephasing",
            ChannelSpec::Erasure { .. } => "erasure",
            ChannelSpec::MultibandLossy { .. } => "multiband_lossy",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ChannelSpec::Lossy { eta } => check_transmissivity("eta", *eta),
            ChannelSpec::Amplifier { gain } => {
                if gain.is_finite() && *gain > 1.0 {
                    Ok(())
                } else {
                    Err(Error::invalid("gain", format!("must be > 1, got {gain}")))
                }
            }
            ChannelSpec::Dephasing { probs } => {
                if probs.len() < 2 {
                    return Err(Error::invalid(
                        "probs",
                        format!("dimension must be >= 2, got {}", probs.len()),
                    ));
                }
                check_distribution(probs)
            }
            ChannelSpec::Erasure { p, dim } => {
                check_probability("p", *p)?;
                check_dim(*dim)
            }
            ChannelSpec::MultibandLossy { eta, bands } => {
                check_transmissivity("eta", *eta)?;
                if *bands == 0 {
                    return Err(Error::invalid("bands", "must be >= 1"));
                }
                Ok(())
            }
        }
    }

    pub fn warnings(&self) -> Vec<ChannelWarning> {
        match self {
            ChannelSpec::Dephasing { probs } => {
                let error_probability: f64 = probs.iter().skip(1).sum();
                if error_probability > 0.5 {
                    vec![ChannelWarning::DephasingAboveHalf { error_probability }]
                } else {
                    Vec::new()
                }
            }
            ChannelSpec::Erasure { p, .. } if *p > 0.5 => {
                vec![ChannelWarning::ErasureAboveHalf { p: *p }]
            }
            _ => Vec::new(),
        }
    }

    /// Two-way capacity in bits per use.
    pub fn capacity(&self) -> Result<CapacityBits> {
        self.validate()?;
        let bits = match self {
            ChannelSpec::Lossy { eta } => plob(*eta),
            ChannelSpec::Amplifier { gain } => -(-gain.recip()).ln_1p() / LN_2,
            ChannelSpec::Dephasing { probs } => {
                (probs.len() as f64).log2() - shannon_entropy(probs)?
            }
            ChannelSpec::Erasure { p, dim } => (1.0 - p) * f64::from(*dim).log2(),
            ChannelSpec::MultibandLossy { eta, bands } => f64::from(*bands) * plob(*eta),
        };
        // log2 d - H can round to a hair below zero at the uniform distribution.
        Ok(CapacityBits::from_raw(bits.max(0.0)))
    }
}

/// Free-function form of [`ChannelSpec::capacity`].
pub fn capacity(spec: &ChannelSpec) -> Result<CapacityBits> {
    spec.capacity()
}

/// Repeaterless bound of a pure-loss channel, `-log2(1 - eta)`.
#[inline]
pub(crate) fn plob(eta: f64) -> f64 {
    -(-eta).ln_1p() / LN_2
}

fn check_transmissivity(field: &'static str, eta: f64) -> Result<()> {
    if eta > 0.0 && eta < 1.0 {
        Ok(())
    } else {
        Err(Error::invalid(
            field,
            format!("transmissivity must lie in (0, 1), got {eta}"),
        ))
    }
}

fn check_probability(field: &'static str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::invalid(
            field,
            format!("probability must lie in [0, 1], got {p}"),
        ))
    }
}

fn check_dim(dim: u32) -> Result<()> {
    if dim >= 2 {
        Ok(())
    } else {
        Err(Error::invalid("dim", format!("must be >= 2, got {dim}")))
    }
}

fn check_distribution(probs: &[f64]) -> Result<()> {
    for &p in probs {
        check_probability("probs", p)?;
    }
    let total: f64 = probs.iter().sum();
    if (total - 1.0).abs() > PROB_SUM_TOLERANCE {
        return Err(Error::invalid(
            "probs",
            format!("must sum to 1, got {total}"),
        ));
    }
    Ok(())
}

/// Binary Shannon entropy in bits, with `H2(0) = H2(1) = 0`.
pub fn binary_entropy(p: f64) -> Result<f64> {
    check_probability("p", p)?;
    Ok(xlog2x(p) + xlog2x(1.0 - p))
}

/// Shannon entropy in bits of a probability vector.
pub fn shannon_entropy(probs: &[f64]) -> Result<f64> {
    check_distribution(probs)?;
    Ok(probs.iter().map(|&p| xlog2x(p)).sum())
}

#[inline]
fn xlog2x(p: f64) -> f64 {
    if p == 0.0 {
        0.0
    } else {
        -p * p.log2()
    }
}

/// `eta = 10^(-dB/10)`.
pub fn db_to_transmissivity(loss_db: f64) -> Result<f64> {
    if !(loss_db.is_finite() && loss_db >= 0.0) {
        return Err(Error::invalid(
            "loss_db",
            format!("must be finite and >= 0, got {loss_db}"),
        ));
    }
    Ok(10f64.powf(-loss_db / 10.0))
}

/// Loss in dB of a transmissivity in (0, 1].
pub fn transmissivity_to_db(eta: f64) -> Result<f64> {
    if !(eta > 0.0 && eta <= 1.0) {
        return Err(Error::invalid(
            "eta",
            format!("transmissivity must lie in (0, 1], got {eta}"),
        ));
    }
    Ok(-10.0 * eta.log10() + 0.0)
}

pub fn fiber_transmissivity(length_km: f64, rate_db_per_km: f64) -> Result<f64> {
    check_fiber_rate(rate_db_per_km)?;
    if !(length_km.is_finite() && length_km >= 0.0) {
        return Err(Error::invalid(
            "length_km",
            format!("must be finite and >= 0, got {length_km}"),
        ));
    }
    db_to_transmissivity(length_km * rate_db_per_km)
}

/// Fiber length that produces `loss_db` of attenuation.
pub fn fiber_length_km(loss_db: f64, rate_db_per_km: f64) -> Result<f64> {
    check_fiber_rate(rate_db_per_km)?;
    if !(loss_db.is_finite() && loss_db >= 0.0) {
        return Err(Error::invalid(
            "loss_db",
            format!("must be finite and >= 0, got {loss_db}"),
        ));
    }
    Ok(loss_db / rate_db_per_km)
}

fn check_fiber_rate(rate_db_per_km: f64) -> Result<()> {
    if rate_db_per_km.is_finite() && rate_db_per_km > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(
            "rate_db_per_km",
            format!("must be > 0, got {rate_db_per_km}"),
        ))
    }
}

/// Wire form of a channel as it appears in network and chain documents.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum ChannelDoc {
    Lossy {
        eta: f64,
    },
    Amplifier {
        gain: f64,
    },
    Dephasing {
        probs: Vec<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dim: Option<u32>,
    },
    Erasure {
        p: f64,
        #[serde(default = "default_dim")]
        dim: u32,
    },
    MultibandLossy {
        eta: f64,
        bands: u32,
    },
}

fn default_dim() -> u32 {
    2
}

impl TryFrom<ChannelDoc> for ChannelSpec {
    type Error = Error;

    fn try_from(doc: ChannelDoc) -> Result<Self> {
        let spec = match doc {
            ChannelDoc::Lossy { eta } => ChannelSpec::Lossy { eta },
            ChannelDoc::Amplifier { gain } => ChannelSpec::Amplifier { gain },
            ChannelDoc::Dephasing { probs, dim } => {
                if let Some(dim) = dim {
                    if dim as usize != probs.len() {
                        return Err(Error::invalid(
                            "dim",
                            format!("{dim} does not match {} probabilities", probs.len()),
                        ));
                    }
                }
                ChannelSpec::Dephasing { probs }
            }
            ChannelDoc::Erasure { p, dim } => ChannelSpec::Erasure { p, dim },
            ChannelDoc::MultibandLossy { eta, bands } => ChannelSpec::MultibandLossy { eta, bands },
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl From<ChannelSpec> for ChannelDoc {
    fn from(spec: ChannelSpec) -> Self {
        match spec {
            ChannelSpec::Lossy { eta } => ChannelDoc::Lossy { eta },
            ChannelSpec::Amplifier { gain } => ChannelDoc::Amplifier { gain },
            ChannelSpec::Dephasing { probs } => ChannelDoc::Dephasing { probs, dim: None },
            ChannelSpec::Erasure { p, dim } => ChannelDoc::Erasure { p, dim },
            ChannelSpec::MultibandLossy { eta, bands } => ChannelDoc::MultibandLossy { eta, bands },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cap(spec: ChannelSpec) -> f64 {
        spec.capacity().unwrap().bits()
    }

    #[test]
    fn table_values() {
        assert!((cap(ChannelSpec::lossy(0.5)) - 1.0).abs() < 1e-12);
        assert_eq!(cap(ChannelSpec::Dephasing { probs: vec![0.5, 0.5] }), 0.0);
        assert_eq!(cap(ChannelSpec::erasure(0.0)), 1.0);
        assert_eq!(cap(ChannelSpec::Erasure { p: 0.25, dim: 4 }), 1.5);
        assert!((cap(ChannelSpec::multiband_lossy(0.5, 10)) - 10.0).abs() < 1e-12);
        // -log2(1/3)
        assert!((cap(ChannelSpec::amplifier(1.5)) - 1.584_962_500_721_156_2).abs() < 1e-12);
    }

    #[test]
    fn entropies() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        // 50-digit evaluation: 0.499915958164527995640...
        assert!((binary_entropy(0.11).unwrap() - 0.499_915_958_164_528).abs() < 1e-13);
        assert_eq!(shannon_entropy(&[1.0, 0.0, 0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(shannon_entropy(&[0.25; 4]).unwrap(), 2.0);
        assert_eq!(shannon_entropy(&[0.5, 0.25, 0.25]).unwrap(), 1.5);
        assert!(binary_entropy(1.2).is_err());
        assert!(shannon_entropy(&[0.5, 0.6]).is_err());
        assert!(shannon_entropy(&[1.5, -0.5]).is_err());
    }

    #[test]
    fn rejects_out_of_range_fields() {
        let field = |spec: ChannelSpec| match spec.capacity() {
            Err(Error::InvalidParameter { field, .. }) => field,
            other => panic!("expected InvalidParameter, got {other:?}"),
        };
        assert_eq!(field(ChannelSpec::lossy(0.0)), "eta");
        assert_eq!(field(ChannelSpec::lossy(1.0)), "eta");
        assert_eq!(field(ChannelSpec::lossy(f64::NAN)), "eta");
        assert_eq!(field(ChannelSpec::amplifier(1.0)), "gain");
        assert_eq!(field(ChannelSpec::amplifier(f64::INFINITY)), "gain");
        assert_eq!(field(ChannelSpec::Dephasing { probs: vec![1.0] }), "probs");
        assert_eq!(field(ChannelSpec::Dephasing { probs: vec![0.7, 0.7] }), "probs");
        assert_eq!(field(ChannelSpec::Erasure { p: -0.1, dim: 2 }), "p");
        assert_eq!(field(ChannelSpec::Erasure { p: 0.1, dim: 1 }), "dim");
        assert_eq!(field(ChannelSpec::multiband_lossy(0.5, 0)), "bands");
    }

    #[test]
    fn qubit_dephasing_matches_binary_formula() {
        for i in 0..=100 {
            let p = f64::from(i) / 100.0;
            let qudit = cap(ChannelSpec::dephasing(p));
            let binary = 1.0 - binary_entropy(p).unwrap();
            assert!((qudit - binary).abs() < 1e-12, "p={p}");
        }
    }

    #[test]
    fn warnings_flag_probabilities_above_half() {
        assert!(ChannelSpec::dephasing(0.1).warnings().is_empty());
        assert_eq!(ChannelSpec::dephasing(0.7).warnings().len(), 1);
        assert_eq!(ChannelSpec::erasure(0.6).warnings().len(), 1);
        assert!(ChannelSpec::lossy(0.5).warnings().is_empty());
        // Entropy is symmetric, so the flagged input still evaluates.
        assert!((cap(ChannelSpec::dephasing(0.7)) - cap(ChannelSpec::dephasing(0.3))).abs() < 1e-15);
    }

    #[test]
    fn decibel_conversions() {
        assert!((db_to_transmissivity(3.0103).unwrap() - 0.5).abs() < 1e-4);
        assert_eq!(db_to_transmissivity(0.0).unwrap(), 1.0);
        let fiber = fiber_transmissivity(15.0, FIBER_DB_PER_KM).unwrap();
        assert!((fiber - 0.501_187_233_627_272_3).abs() < 1e-12);
        assert!((transmissivity_to_db(fiber).unwrap() - 3.0).abs() < 1e-12);
        assert_eq!(transmissivity_to_db(1.0).unwrap(), 0.0);
        assert!(db_to_transmissivity(-1.0).is_err());
        assert!(fiber_transmissivity(-1.0, 0.2).is_err());
        assert!(fiber_transmissivity(1.0, 0.0).is_err());
        assert!(transmissivity_to_db(0.0).is_err());
        assert_eq!(fiber_length_km(3.0, 0.2).unwrap(), 15.0);
    }

    #[test]
    fn limits() {
        assert!(cap(ChannelSpec::lossy(1e-300)) < 1e-290);
        assert!(cap(ChannelSpec::amplifier(1e7)) < 1e-6);
    }

    #[test]
    fn wire_format() {
        let spec: ChannelSpec = serde_json::from_str(r#"{"kind":"dephasing","probs":[0.9,0.1]}"#).unwrap();
        assert_eq!(spec, ChannelSpec::dephasing(0.1));
        let spec: ChannelSpec = serde_json::from_str(r#"{"kind":"erasure","p":0.1}"#).unwrap();
        assert_eq!(spec, ChannelSpec::erasure(0.1));
        assert!(serde_json::from_str::<ChannelSpec>(r#"{"kind":"thermal","eta":0.5}"#).is_err());
        assert!(serde_json::from_str::<ChannelSpec>(r#"{"kind":"lossy","eta":0.5,"x":1}"#).is_err());
        assert!(serde_json::from_str::<ChannelSpec>(r#"{"kind":"lossy","eta":1.5}"#).is_err());
        assert!(serde_json::from_str::<ChannelSpec>(r#"{"kind":"dephasing","probs":[0.5,0.5],"dim":3}"#).is_err());
        assert_eq!(
            serde_json::to_string(&ChannelSpec::multiband_lossy(0.5, 3)).unwrap(),
            r#"{"kind":"multiband_lossy","eta":0.5,"bands":3}"#
        );
    }
}
