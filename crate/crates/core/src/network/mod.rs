//! Undirected multigraph model of a quantum network.
//!
//! Points are opaque names. Every edge carries a distillable channel and a
//! unique id; parallel edges are allowed, self-loops are not. Two points are
//! designated as the end-users, alice and bob.

mod json;

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::channel::{CapacityBits, ChannelSpec};
use crate::error::{Error, Result};

pub use json::{parse_network, serialize_network};

#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub id: String,
    pub u: String,
    pub v: String,
    pub channel: ChannelSpec,
}

impl Edge {
    pub fn new(
        id: impl Into<String>,
        u: impl Into<String>,
        v: impl Into<String>,
        channel: ChannelSpec,
    ) -> Self {
        Edge {
            id: id.into(),
            u: u.into(),
            v: v.into(),
            channel,
        }
    }
}

/// A validated network. Immutable after construction.
#[derive(Debug, Clone)]
pub struct QNetwork {
    points: Vec<String>,
    alice: usize,
    bob: usize,
    edges: Vec<Edge>,
    endpoints: Vec<(usize, usize)>,
    capacities: Vec<CapacityBits>,
    point_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl PartialEq for QNetwork {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
            && self.alice == other.alice
            && self.bob == other.bob
            && self.edges == other.edges
    }
}

impl QNetwork {
    pub fn new(
        points: impl IntoIterator<Item = impl Into<String>>,
        alice: impl Into<String>,
        bob: impl Into<String>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        let alice = alice.into();
        let bob = bob.into();
        let edges: Vec<Edge> = edges.into_iter().collect();

        let mut point_index = HashMap::with_capacity(points.len());
        for (i, name) in points.iter().enumerate() {
            if point_index.insert(name.clone(), i).is_some() {
                return Err(Error::Validation(format!("duplicate point `{name}`")));
            }
        }
        let lookup = |name: &str, role: &str| {
            point_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Validation(format!("{role} `{name}` is not a point")))
        };
        let alice_idx = lookup(&alice, "alice")?;
        let bob_idx = lookup(&bob, "bob")?;
        if alice_idx == bob_idx {
            return Err(Error::Validation(format!(
                "alice and bob must differ, both are `{alice}`"
            )));
        }

        let mut edge_index = HashMap::with_capacity(edges.len());
        let mut endpoints = Vec::with_capacity(edges.len());
        let mut capacities = Vec::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); points.len()];
        for (i, edge) in edges.iter().enumerate() {
            if edge_index.insert(edge.id.clone(), i).is_some() {
                return Err(Error::Validation(format!("duplicate edge id `{}`", edge.id)));
            }
            let u = lookup(&edge.u, &format!("endpoint of edge `{}`", edge.id))?;
            let v = lookup(&edge.v, &format!("endpoint of edge `{}`", edge.id))?;
            if u == v {
                return Err(Error::Validation(format!(
                    "edge `{}` is a self-loop on `{}`",
                    edge.id, edge.u
                )));
            }
            let capacity = edge
                .channel
                .capacity()
                .map_err(|e| Error::Validation(format!("edge `{}`: {e}", edge.id)))?;
            endpoints.push((u, v));
            capacities.push(capacity);
            adjacency[u].push((v, i));
            adjacency[v].push((u, i));
        }

        Ok(QNetwork {
            points,
            alice: alice_idx,
            bob: bob_idx,
            edges,
            endpoints,
            capacities,
            point_index,
            edge_index,
            adjacency,
        })
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn alice(&self) -> &str {
        &self.points[self.alice]
    }

    pub fn bob(&self) -> &str {
        &self.points[self.bob]
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: &str) -> Result<&Edge> {
        self.edge_position(id).map(|i| &self.edges[i])
    }

    pub fn edge_capacity(&self, id: &str) -> Result<CapacityBits> {
        self.edge_position(id).map(|i| self.capacities[i])
    }

    /// True iff alice and bob lie in the same connected component.
    pub fn is_connected(&self) -> bool {
        self.reachable_from_alice(|_| true)[self.bob]
    }

    // Index-level accessors used by the algorithms.

    pub(crate) fn alice_index(&self) -> usize {
        self.alice
    }

    pub(crate) fn bob_index(&self) -> usize {
        self.bob
    }

    pub(crate) fn point_position(&self, name: &str) -> Option<usize> {
        self.point_index.get(name).copied()
    }

    pub(crate) fn edge_position(&self, id: &str) -> Result<usize> {
        self.edge_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(id.to_owned()))
    }

    pub(crate) fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.endpoints[edge]
    }

    pub(crate) fn capacity_at(&self, edge: usize) -> CapacityBits {
        self.capacities[edge]
    }

    /// `(neighbor, edge)` pairs incident to `point`, in edge order.
    pub(crate) fn incident(&self, point: usize) -> &[(usize, usize)] {
        &self.adjacency[point]
    }

    pub(crate) fn name(&self, point: usize) -> &str {
        &self.points[point]
    }

    /// Points reachable from alice using only edges accepted by `keep`.
    pub(crate) fn reachable_from_alice(&self, keep: impl Fn(usize) -> bool) -> Vec<bool> {
        let mut seen = vec![false; self.points.len()];
        let mut queue = VecDeque::from([self.alice]);
        seen[self.alice] = true;
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &self.adjacency[x] {
                if !seen[y] && keep(e) {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

/// An alice/bob bipartition of the points together with its cut-set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cut {
    /// Points on alice's side, sorted lexicographically.
    pub side_a: Vec<String>,
    /// Points on bob's side, sorted lexicographically.
    pub side_b: Vec<String>,
    /// Ids of the crossing edges, in network edge order.
    pub cut_set: Vec<String>,
}

impl Cut {
    /// Builds the cut whose alice side is `in_a`. Panics if the mask puts
    /// alice on bob's side or vice versa.
    pub(crate) fn from_mask(net: &QNetwork, in_a: &[bool]) -> Cut {
        assert!(in_a[net.alice] && !in_a[net.bob], "mask must separate alice from bob");
        let mut side_a = Vec::new();
        let mut side_b = Vec::new();
        for (name, &a) in net.points.iter().zip(in_a) {
            if a {
                side_a.push(name.clone());
            } else {
                side_b.push(name.clone());
            }
        }
        side_a.sort();
        side_b.sort();
        let cut_set = net
            .endpoints
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| in_a[u] != in_a[v])
            .map(|(i, _)| net.edges[i].id.clone())
            .collect();
        Cut {
            side_a,
            side_b,
            cut_set,
        }
    }

    /// Builds and validates a cut from the names on alice's side.
    pub fn from_side_a<S: AsRef<str>>(net: &QNetwork, side_a: &[S]) -> Result<Cut> {
        let mut mask = vec![false; net.point_count()];
        for name in side_a {
            let name = name.as_ref();
            let i = net
                .point_position(name)
                .ok_or_else(|| Error::Validation(format!("`{name}` is not a point")))?;
            mask[i] = true;
        }
        if !mask[net.alice] || mask[net.bob] {
            return Err(Error::Validation(
                "cut must put alice and bob on opposite sides".into(),
            ));
        }
        Ok(Cut::from_mask(net, &mask))
    }

    fn crossing_capacities<'a>(
        &'a self,
        net: &'a QNetwork,
    ) -> impl Iterator<Item = CapacityBits> + 'a {
        self.cut_set
            .iter()
            .map(move |id| net.edge_capacity(id).expect("cut-set edge belongs to the network"))
    }

    /// Largest crossing-edge capacity; `None` for an empty cut-set.
    pub fn single_edge_value(&self, net: &QNetwork) -> Option<CapacityBits> {
        self.crossing_capacities(net).max()
    }

    /// Sum of crossing-edge capacities.
    pub fn multi_edge_value(&self, net: &QNetwork) -> CapacityBits {
        CapacityBits::from_raw(self.crossing_capacities(net).map(CapacityBits::bits).sum())
    }

    /// True iff deleting the cut-set leaves alice and bob disconnected and
    /// the cut-set is exactly the set of crossing edges.
    pub fn is_valid_for(&self, net: &QNetwork) -> bool {
        let Ok(rebuilt) = Cut::from_side_a(net, &self.side_a) else {
            return false;
        };
        if rebuilt != *self {
            return false;
        }
        let removed: HashSet<&str> = self.cut_set.iter().map(String::as_str).collect();
        !net.reachable_from_alice(|e| !removed.contains(net.edges[e].id.as_str()))[net.bob]
    }
}

/// A simple alice-to-bob path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Route {
    pub points: Vec<String>,
    pub edges: Vec<String>,
}

impl Route {
    pub(crate) fn from_indices(net: &QNetwork, points: &[usize], edges: &[usize]) -> Route {
        Route {
            points: points.iter().map(|&p| net.points[p].clone()).collect(),
            edges: edges.iter().map(|&e| net.edges[e].id.clone()).collect(),
        }
    }

    /// Checks that the route is a simple alice-bob path through the named
    /// edges.
    pub fn validate(&self, net: &QNetwork) -> Result<()> {
        let bad = |msg: String| Err(Error::Validation(msg));
        if self.points.first().map(String::as_str) != Some(net.alice())
            || self.points.last().map(String::as_str) != Some(net.bob())
        {
            return bad("route must run from alice to bob".into());
        }
        if self.edges.len() + 1 != self.points.len() {
            return bad("route needs exactly one edge per hop".into());
        }
        let distinct: HashSet<&String> = self.points.iter().collect();
        if distinct.len() != self.points.len() {
            return bad("route revisits a point".into());
        }
        for (hop, id) in self.points.windows(2).zip(&self.edges) {
            let edge = net.edge(id)?;
            let joins = (edge.u == hop[0] && edge.v == hop[1]) || (edge.u == hop[1] && edge.v == hop[0]);
            if !joins {
                return bad(format!("edge `{id}` does not join `{}` and `{}`", hop[0], hop[1]));
            }
        }
        Ok(())
    }

    /// Weakest edge of the route: its capacity and the first edge attaining it.
    pub fn bottleneck(&self, net: &QNetwork) -> Result<(CapacityBits, String)> {
        let mut best: Option<(CapacityBits, &String)> = None;
        for id in &self.edges {
            let c = net.edge_capacity(id)?;
            if best.is_none_or(|(b, _)| c < b) {
                best = Some((c, id));
            }
        }
        best.map(|(c, id)| (c, id.clone()))
            .ok_or_else(|| Error::Validation("route has no edges".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> QNetwork {
        let ch = ChannelSpec::lossy(0.5);
        QNetwork::new(
            ["a", "p1", "p2", "b"],
            "a",
            "b",
            [
                Edge::new("e1", "a", "p1", ch.clone()),
                Edge::new("e2", "a", "p2", ch.clone()),
                Edge::new("e3", "p1", "p2", ch.clone()),
                Edge::new("e4", "p1", "b", ch.clone()),
                Edge::new("e5", "p2", "b", ch),
            ],
        )
        .unwrap()
    }

    #[test]
    fn validation_errors() {
        let ch = ChannelSpec::lossy(0.5);
        let err = |r: Result<QNetwork>| matches!(r, Err(Error::Validation(_)));
        assert!(err(QNetwork::new(["a", "b"], "a", "a", [])));
        assert!(err(QNetwork::new(["a", "b"], "a", "c", [])));
        assert!(err(QNetwork::new(["a", "a", "b"], "a", "b", [])));
        assert!(err(QNetwork::new(["a", "b"], "a", "b", [Edge::new("e", "a", "x", ch.clone())])));
        assert!(err(QNetwork::new(["a", "b"], "a", "b", [Edge::new("e", "a", "a", ch.clone())])));
        assert!(err(QNetwork::new(
            ["a", "b"],
            "a",
            "b",
            [Edge::new("e", "a", "b", ch.clone()), Edge::new("e", "b", "a", ch)]
        )));
        assert!(err(QNetwork::new(["a", "b"], "a", "b", [Edge::new("e", "a", "b", ChannelSpec::lossy(1.0))])));
    }

    #[test]
    fn connectivity_and_capacities() {
        let net = diamond();
        assert!(net.is_connected());
        assert!((net.edge_capacity("e1").unwrap().bits() - 1.0).abs() < 1e-12);
        assert_eq!(net.edge_capacity("nope"), Err(Error::UnknownEdge("nope".into())));

        let empty = QNetwork::new(["a", "b"], "a", "b", []).unwrap();
        assert!(!empty.is_connected());
    }

    #[test]
    fn cut_values_and_validity() {
        let net = diamond();
        let cut = Cut::from_side_a(&net, &["a"]).unwrap();
        assert_eq!(cut.side_b, vec!["b", "p1", "p2"]);
        assert_eq!(cut.cut_set, vec!["e1", "e2"]);
        assert!((cut.multi_edge_value(&net).bits() - 2.0).abs() < 1e-12);
        assert!((cut.single_edge_value(&net).unwrap().bits() - 1.0).abs() < 1e-12);
        assert!(cut.is_valid_for(&net));

        let mut forged = cut.clone();
        forged.cut_set.pop();
        assert!(!forged.is_valid_for(&net));
        assert!(Cut::from_side_a(&net, &["a", "b"]).is_err());
    }

    #[test]
    fn route_checks() {
        let net = diamond();
        let route = Route {
            points: vec!["a".into(), "p1".into(), "b".into()],
            edges: vec!["e1".into(), "e4".into()],
        };
        route.validate(&net).unwrap();
        assert_eq!(route.bottleneck(&net).unwrap().1, "e1");

        let wrong = Route {
            points: vec!["a".into(), "p1".into(), "b".into()],
            edges: vec!["e1".into(), "e5".into()],
        };
        assert!(wrong.validate(&net).is_err());
        let looping = Route {
            points: vec!["a".into(), "p1".into(), "a".into(), "p1".into(), "b".into()],
            edges: vec!["e1".into(), "e1".into(), "e1".into(), "e4".into()],
        };
        assert!(looping.validate(&net).is_err());
    }
}
