//! End-to-end capacities of quantum repeater chains and quantum networks
//! whose links are distillable channels (pure loss, quantum-limited
//! amplifiers, dephasing, erasure and multiband loss).
//!
//! - [`channel`]: point-to-point capacities and dB/fiber conversions.
//! - [`chain`]: repeater chains, the equidistant optimum and its asymptotics.
//! - [`network`]: the multigraph model and its JSON format.
//! - [`single_path`]: widest-path routing and its minimum single-edge cut.
//! - [`flow`]: multi-path (flooding) capacity via max-flow min-cut.
//! - [`oracle`]: brute-force enumeration of routes and cuts on small graphs.
//! - [`sweep`]: CSV tables of capacity versus loss.

pub mod chain;
pub mod channel;
mod error;
pub mod fixtures;
pub mod flow;
pub mod network;
pub mod oracle;
pub mod report;
pub mod single_path;
pub mod sweep;

pub use channel::{capacity, CapacityBits, ChannelSpec, ChannelWarning};
pub use error::{Error, Result};
pub use network::{parse_network, serialize_network, Cut, Edge, QNetwork, Route};
