//! Multi-path (flooding) capacity.
//!
//! Every edge is used once per network use, so the end-to-end rate is a flow
//! from alice to bob bounded by the edge capacities. Undirected edges are
//! turned into arcs: alice's edges point away from her, bob's point towards
//! him, and interior edges get one arc in each direction. Dinic's
//! blocking-flow algorithm then gives the maximum flow, and residual
//! reachability from alice gives the matching minimum cut.

use std::collections::VecDeque;

use serde::Serialize;

use crate::channel::CapacityBits;
use crate::network::{Cut, QNetwork};

/// Residual capacities at or below this are treated as saturated.
pub const RESIDUAL_EPSILON: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Arc {
    pub from: String,
    pub to: String,
    pub capacity: CapacityBits,
    /// Id of the undirected edge this arc comes from.
    pub edge: String,
}

/// Directed form of a network.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowNetwork {
    pub points: Vec<String>,
    pub arcs: Vec<Arc>,
    /// For each network edge, in edge order, the indices of its arcs.
    pub mapping: Vec<Vec<usize>>,
}

/// Arc endpoints as point indices, one or two per edge.
fn arc_endpoints(net: &QNetwork) -> Vec<Vec<(usize, usize)>> {
    let (alice, bob) = (net.alice_index(), net.bob_index());
    (0..net.edge_count())
        .map(|e| {
            let (u, v) = net.endpoints(e);
            if u == alice || v == bob {
                vec![(u, v)]
            } else if v == alice || u == bob {
                vec![(v, u)]
            } else {
                vec![(u, v), (v, u)]
            }
        })
        .collect()
}

pub fn build_flow_network(net: &QNetwork) -> FlowNetwork {
    let mut arcs = Vec::new();
    let mut mapping = Vec::with_capacity(net.edge_count());
    for (e, ends) in arc_endpoints(net).into_iter().enumerate() {
        let mut ids = Vec::with_capacity(ends.len());
        for (from, to) in ends {
            ids.push(arcs.len());
            arcs.push(Arc {
                from: net.name(from).to_owned(),
                to: net.name(to).to_owned(),
                capacity: net.capacity_at(e),
                edge: net.edges()[e].id.clone(),
            });
        }
        mapping.push(ids);
    }
    FlowNetwork {
        points: net.points().to_vec(),
        arcs,
        mapping,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Orientation {
    pub edge: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlowReport {
    pub value: CapacityBits,
    /// Net rate on each edge, in edge order. Positive means the edge is used
    /// from its `u` end to its `v` end.
    pub effective_rates: Vec<(String, f64)>,
    /// Direction of every edge carrying a non-zero rate.
    pub orientation: Vec<Orientation>,
    /// Cut whose summed crossing capacity equals `value`.
    pub min_cut: Cut,
}

impl FlowReport {
    pub fn rate(&self, edge: &str) -> Option<f64> {
        self.effective_rates
            .iter()
            .find(|(id, _)| id == edge)
            .map(|&(_, r)| r)
    }
}

struct Residual {
    head: Vec<usize>,
    cap: Vec<f64>,
    adjacency: Vec<Vec<usize>>,
}

impl Residual {
    fn new(n: usize) -> Self {
        Residual {
            head: Vec::new(),
            cap: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Adds `from -> to` and its zero-capacity reverse; returns the forward
    /// slot. The reverse slot is always `slot ^ 1`.
    fn add(&mut self, from: usize, to: usize, capacity: f64) -> usize {
        let slot = self.head.len();
        self.head.push(to);
        self.cap.push(capacity);
        self.adjacency[from].push(slot);
        self.head.push(from);
        self.cap.push(0.0);
        self.adjacency[to].push(slot + 1);
        slot
    }

    fn levels(&self, source: usize) -> Vec<Option<usize>> {
        let mut level = vec![None; self.adjacency.len()];
        level[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let next = level[x].map(|l| l + 1);
            for &slot in &self.adjacency[x] {
                let y = self.head[slot];
                if level[y].is_none() && self.cap[slot] > RESIDUAL_EPSILON {
                    level[y] = next;
                    queue.push_back(y);
                }
            }
        }
        level
    }

    fn augment(
        &mut self,
        x: usize,
        sink: usize,
        limit: f64,
        level: &[Option<usize>],
        cursor: &mut [usize],
    ) -> f64 {
        if x == sink {
            return limit;
        }
        while cursor[x] < self.adjacency[x].len() {
            let slot = self.adjacency[x][cursor[x]];
            let y = self.head[slot];
            let admissible = self.cap[slot] > RESIDUAL_EPSILON
                && matches!((level[x], level[y]), (Some(lx), Some(ly)) if ly == lx + 1);
            if admissible {
                let pushed = self.augment(y, sink, limit.min(self.cap[slot]), level, cursor);
                if pushed > 0.0 {
                    self.cap[slot] -= pushed;
                    self.cap[slot ^ 1] += pushed;
                    return pushed;
                }
            }
            cursor[x] += 1;
        }
        0.0
    }

    /// Dinic's algorithm; returns the total flow pushed.
    fn max_flow(&mut self, source: usize, sink: usize) -> f64 {
        let mut total = 0.0;
        loop {
            let level = self.levels(source);
            if level[sink].is_none() {
                return total;
            }
            let mut cursor = vec![0; self.adjacency.len()];
            loop {
                let pushed = self.augment(source, sink, f64::INFINITY, &level, &mut cursor);
                if pushed <= 0.0 {
                    break;
                }
                total += pushed;
            }
        }
    }
}

/// Maximum alice-bob flow with per-edge rates, orientation and a certifying
/// minimum cut. A disconnected network yields zero flow.
pub fn max_flow(net: &QNetwork) -> FlowReport {
    let n = net.point_count();
    let (alice, bob) = (net.alice_index(), net.bob_index());
    let mut residual = Residual::new(n);
    let slots: Vec<Vec<(usize, usize, usize)>> = arc_endpoints(net)
        .into_iter()
        .enumerate()
        .map(|(e, ends)| {
            ends.into_iter()
                .map(|(from, to)| (from, to, residual.add(from, to, net.capacity_at(e).bits())))
                .collect()
        })
        .collect();

    let total = residual.max_flow(alice, bob);

    let mut effective_rates = Vec::with_capacity(net.edge_count());
    let mut orientation = Vec::new();
    for (e, arcs) in slots.iter().enumerate() {
        let (u, _) = net.endpoints(e);
        let mut rate = 0.0;
        for &(from, _, slot) in arcs {
            // Flow on an arc is what its reverse slot has accumulated.
            let flow = residual.cap[slot ^ 1];
            rate += if from == u { flow } else { -flow };
        }
        if rate.abs() <= RESIDUAL_EPSILON {
            rate = 0.0;
        }
        let edge = &net.edges()[e];
        if rate > 0.0 {
            orientation.push(Orientation {
                edge: edge.id.clone(),
                from: edge.u.clone(),
                to: edge.v.clone(),
            });
        } else if rate < 0.0 {
            orientation.push(Orientation {
                edge: edge.id.clone(),
                from: edge.v.clone(),
                to: edge.u.clone(),
            });
        }
        effective_rates.push((edge.id.clone(), rate));
    }

    let side_a: Vec<bool> = residual.levels(alice).iter().map(Option::is_some).collect();
    let min_cut = Cut::from_mask(net, &side_a);

    FlowReport {
        value: CapacityBits::from_raw(total),
        effective_rates,
        orientation,
        min_cut,
    }
}

pub fn multi_path_capacity(net: &QNetwork) -> CapacityBits {
    max_flow(net).value
}
