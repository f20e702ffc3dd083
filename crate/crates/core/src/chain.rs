//! Repeater chains.
//!
//! A chain of N repeaters joins alice to bob with N+1 links. With distillable
//! links its capacity is the weakest link's capacity.

use std::f64::consts::LN_2;

use crate::channel::{self, plob, CapacityBits, ChannelSpec};
use crate::error::{Error, Result};

/// Search bound for [`min_repeaters_for_rate`].
pub const MAX_REPEATER_SEARCH: u32 = 1 << 20;

#[derive(Debug, Clone, PartialEq)]
pub struct ChainSpec {
    links: Vec<ChannelSpec>,
}

impl ChainSpec {
    pub fn new(links: Vec<ChannelSpec>) -> Result<Self> {
        if links.is_empty() {
            return Err(Error::invalid("links", "a chain needs at least one link"));
        }
        for link in &links {
            link.validate()?;
        }
        Ok(ChainSpec { links })
    }

    pub fn links(&self) -> &[ChannelSpec] {
        &self.links
    }

    pub fn repeaters(&self) -> usize {
        self.links.len() - 1
    }
}

/// Capacity of a chain together with the index of its weakest link.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainCapacity {
    pub capacity: CapacityBits,
    /// Lowest index among the links attaining the minimum.
    pub bottleneck: usize,
}

pub fn chain_capacity(chain: &ChainSpec) -> Result<ChainCapacity> {
    let mut best: Option<ChainCapacity> = None;
    for (i, link) in chain.links.iter().enumerate() {
        let capacity = link.capacity()?;
        if best.is_none_or(|b| capacity < b.capacity) {
            best = Some(ChainCapacity {
                capacity,
                bottleneck: i,
            });
        }
    }
    Ok(best.expect("chain is non-empty"))
}

fn check_total(eta_total: f64) -> Result<()> {
    if eta_total > 0.0 && eta_total < 1.0 {
        Ok(())
    } else {
        Err(Error::invalid(
            "eta_total",
            format!("transmissivity must lie in (0, 1), got {eta_total}"),
        ))
    }
}

/// Transmissivity of each link when `n_repeaters` split a line of total
/// transmissivity `eta_total` into equal segments.
pub fn equidistant_link_transmissivity(eta_total: f64, n_repeaters: u32) -> Result<f64> {
    check_total(eta_total)?;
    Ok(eta_total.powf(1.0 / (f64::from(n_repeaters) + 1.0)))
}

/// Optimal lossy-chain capacity, reached by equidistant repeaters:
/// `-log2(1 - eta_total^(1/(N+1)))`.
pub fn equidistant_lossy_capacity(eta_total: f64, n_repeaters: u32) -> Result<CapacityBits> {
    let eta_link = equidistant_link_transmissivity(eta_total, n_repeaters)?;
    if eta_link >= 1.0 {
        // eta_total so close to 1 that its (N+1)-th root rounds to 1.
        return Err(Error::invalid(
            "eta_total",
            format!("per-link transmissivity of {eta_total} over {n_repeaters} repeaters rounds to 1"),
        ));
    }
    Ok(CapacityBits::from_raw(plob(eta_link)))
}

fn check_target(target_bits: f64) -> Result<()> {
    if target_bits.is_finite() && target_bits > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(
            "target_bits",
            format!("must be finite and > 0, got {target_bits}"),
        ))
    }
}

/// Largest per-link loss in dB whose lossy capacity still reaches
/// `target_bits`. One bit gives the familiar 3 dB.
pub fn max_link_loss_for_rate(target_bits: f64) -> Result<f64> {
    check_target(target_bits)?;
    // -log2(1 - eta) = t  <=>  eta = 1 - 2^-t
    let eta = -(-target_bits * LN_2).exp_m1();
    channel::transmissivity_to_db(eta)
}

/// Smallest number of equidistant repeaters for which the chain capacity
/// reaches `target_bits`.
pub fn min_repeaters_for_rate(eta_total: f64, target_bits: f64) -> Result<u32> {
    check_total(eta_total)?;
    check_target(target_bits)?;
    for n in 0..=MAX_REPEATER_SEARCH {
        if equidistant_lossy_capacity(eta_total, n)?.bits() >= target_bits {
            return Ok(n);
        }
    }
    Err(Error::invalid(
        "target_bits",
        format!("{target_bits} bits needs more than {MAX_REPEATER_SEARCH} repeaters"),
    ))
}

/// Many-repeater approximation `log2 N - log2 ln(1/eta)`.
///
/// An approximation, not a capacity: it is negative for small N.
pub fn asymptotic_repeater_dominant(eta_total: f64, n_repeaters: u32) -> Result<f64> {
    check_total(eta_total)?;
    if n_repeaters == 0 {
        return Err(Error::invalid("n_repeaters", "approximation needs N >= 1"));
    }
    Ok(f64::from(n_repeaters).log2() - (-eta_total.ln()).log2())
}

/// High-loss approximation `eta^(1/(N+1)) / ln 2`.
pub fn asymptotic_loss_dominant(eta_total: f64, n_repeaters: u32) -> Result<f64> {
    Ok(equidistant_link_transmissivity(eta_total, n_repeaters)? / LN_2)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultibandLink {
    pub eta: f64,
    pub bands: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultibandChainSpec {
    links: Vec<MultibandLink>,
}

impl MultibandChainSpec {
    pub fn new(links: Vec<MultibandLink>) -> Result<Self> {
        if links.is_empty() {
            return Err(Error::invalid("links", "a chain needs at least one link"));
        }
        for link in &links {
            ChannelSpec::multiband_lossy(link.eta, link.bands).validate()?;
        }
        Ok(MultibandChainSpec { links })
    }

    pub fn links(&self) -> &[MultibandLink] {
        &self.links
    }

    /// `max_i (1 - eta_i)^M_i`, the largest residual loss factor.
    pub fn theta_max(&self) -> f64 {
        self.links
            .iter()
            .map(|l| (1.0 - l.eta).powi(l.bands as i32))
            .fold(0.0, f64::max)
    }
}

/// `min_i [-M_i log2(1 - eta_i)]`.
pub fn multiband_chain_capacity(chain: &MultibandChainSpec) -> Result<CapacityBits> {
    let links = chain
        .links
        .iter()
        .map(|l| ChannelSpec::multiband_lossy(l.eta, l.bands))
        .collect();
    Ok(chain_capacity(&ChainSpec::new(links)?)?.capacity)
}
