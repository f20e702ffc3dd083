//! Plain-text rendering of analysis results.

use std::fmt::Write;

use crate::chain::ChainCapacity;
use crate::channel::CapacityBits;
use crate::flow::FlowReport;
use crate::network::Cut;
use crate::single_path::RouteReport;

/// `"1.000000000 bits/use"`.
pub fn capacity_line(capacity: CapacityBits) -> String {
    format!("{:.9} bits/use", capacity.bits())
}

pub fn cut_line(cut: &Cut) -> String {
    format!(
        "{{{}}} | {{{}}} crossing [{}]",
        cut.side_a.join(", "),
        cut.side_b.join(", "),
        cut.cut_set.join(", ")
    )
}

pub fn chain_text(result: &ChainCapacity) -> String {
    format!(
        "capacity: {}\nbottleneck link: {}\n",
        capacity_line(result.capacity),
        result.bottleneck
    )
}

pub fn route_text(report: &RouteReport) -> String {
    let mut out = String::new();
    writeln!(out, "capacity: {}", capacity_line(report.capacity)).unwrap();
    writeln!(out, "route: {}", report.route.points.join(" -> ")).unwrap();
    writeln!(out, "edges: {}", report.route.edges.join(", ")).unwrap();
    writeln!(out, "bottleneck edge: {}", report.bottleneck_edge).unwrap();
    writeln!(out, "dual cut: {}", cut_line(&report.dual_cut)).unwrap();
    out
}

pub fn flow_text(report: &FlowReport) -> String {
    let mut out = String::new();
    writeln!(out, "capacity: {}", capacity_line(report.value)).unwrap();
    writeln!(out, "rates:").unwrap();
    for (edge, rate) in &report.effective_rates {
        writeln!(out, "  {edge}: {rate:+.9}").unwrap();
    }
    writeln!(out, "orientation:").unwrap();
    for o in &report.orientation {
        writeln!(out, "  {}: {} -> {}", o.edge, o.from, o.to).unwrap();
    }
    writeln!(out, "min cut: {}", cut_line(&report.min_cut)).unwrap();
    out
}
