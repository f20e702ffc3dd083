//! Single-path capacity: the widest alice-bob route.
//!
//! The capacity of a network used one route at a time is the largest
//! bottleneck capacity over all routes, which equals the smallest
//! largest-crossing-edge capacity over all alice/bob cuts. Three independent
//! constructions are provided: a modified Dijkstra search, route extraction
//! from a maximum spanning tree (Kruskal), and a threshold sweep for the cut.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap, VecDeque};

use serde::Serialize;

use crate::channel::CapacityBits;
use crate::error::{Error, Result};
use crate::network::{Cut, QNetwork, Route};

/// Widest route, its weakest edge and a cut certifying optimality.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RouteReport {
    pub capacity: CapacityBits,
    pub route: Route,
    pub bottleneck_edge: String,
    /// Cut whose largest crossing-edge capacity equals `capacity`.
    pub dual_cut: Cut,
}

#[derive(Debug)]
struct Candidate<'a> {
    width: f64,
    name: &'a str,
    point: usize,
}

impl PartialEq for Candidate<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Candidate<'_> {}

impl PartialOrd for Candidate<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Candidate<'_> {
    // Max-heap on width; among equal widths the lexicographically smallest
    // name pops first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.width
            .total_cmp(&other.width)
            .then_with(|| other.name.cmp(self.name))
    }
}

/// For every bundle of parallel edges, the edge with the largest capacity
/// (smallest id on ties). Returned in edge order.
fn strongest_parallel_edges(net: &QNetwork) -> Vec<usize> {
    let mut best: HashMap<(usize, usize), usize> = HashMap::new();
    for e in 0..net.edge_count() {
        let (u, v) = net.endpoints(e);
        let key = (u.min(v), u.max(v));
        best.entry(key)
            .and_modify(|kept| {
                let stronger = net
                    .capacity_at(e)
                    .cmp(&net.capacity_at(*kept))
                    .then_with(|| net.edges()[*kept].id.cmp(&net.edges()[e].id));
                if stronger == Ordering::Greater {
                    *kept = e;
                }
            })
            .or_insert(e);
    }
    let mut kept: Vec<usize> = best.into_values().collect();
    kept.sort_unstable();
    kept
}

/// Widest alice-bob route by the modified Dijkstra algorithm.
///
/// Points join the search tree in order of decreasing bottleneck width from
/// alice; a neighbour's width is the best `min(width(q), capacity(q, p))` over
/// tree points `q`. Runs in `O(|E| log |P|)`.
pub fn widest_path(net: &QNetwork) -> Result<RouteReport> {
    let n = net.point_count();
    let mut adjacency = vec![Vec::new(); n];
    for e in strongest_parallel_edges(net) {
        let (u, v) = net.endpoints(e);
        adjacency[u].push((v, e));
        adjacency[v].push((u, e));
    }

    let alice = net.alice_index();
    let bob = net.bob_index();
    let mut width = vec![f64::NEG_INFINITY; n];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut in_tree = vec![false; n];
    let mut order = Vec::new();
    let mut heap = BinaryHeap::new();

    width[alice] = f64::INFINITY;
    heap.push(Candidate {
        width: f64::INFINITY,
        name: net.name(alice),
        point: alice,
    });
    while let Some(Candidate { width: w, point: q, .. }) = heap.pop() {
        if in_tree[q] || w < width[q] {
            continue;
        }
        in_tree[q] = true;
        order.push(q);
        if q == bob {
            break;
        }
        for &(p, e) in &adjacency[q] {
            if in_tree[p] {
                continue;
            }
            let through = w.min(net.capacity_at(e).bits());
            if through > width[p] {
                width[p] = through;
                parent[p] = Some((q, e));
                heap.push(Candidate {
                    width: through,
                    name: net.name(p),
                    point: p,
                });
            }
        }
    }
    if !in_tree[bob] {
        return Err(Error::NoRoute);
    }

    let mut points = vec![bob];
    let mut edges = Vec::new();
    let mut at = bob;
    while let Some((prev, e)) = parent[at] {
        edges.push(e);
        points.push(prev);
        at = prev;
    }
    points.reverse();
    edges.reverse();

    let route = Route::from_indices(net, &points, &edges);
    let (capacity, bottleneck_edge) = route.bottleneck(net)?;
    debug_assert_eq!(capacity.bits(), width[bob]);

    // Tree points strictly wider than the route: everything reachable from
    // alice through edges above the bottleneck capacity.
    let mut side_a = vec![false; n];
    for &p in &order {
        if width[p] > capacity.bits() {
            side_a[p] = true;
        }
    }
    let dual_cut = Cut::from_mask(net, &side_a);

    Ok(RouteReport {
        capacity,
        route,
        bottleneck_edge,
        dual_cut,
    })
}

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            Ordering::Less => self.parent[ra] = rb,
            Ordering::Greater => self.parent[rb] = ra,
            Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Edges by decreasing capacity, ties by id.
fn kruskal_order(net: &QNetwork) -> Vec<usize> {
    let mut order: Vec<usize> = (0..net.edge_count()).collect();
    order.sort_by(|&x, &y| {
        net.capacity_at(y)
            .cmp(&net.capacity_at(x))
            .then_with(|| net.edges()[x].id.cmp(&net.edges()[y].id))
    });
    order
}

/// Maximum spanning forest by Kruskal's algorithm, as edge ids in the order
/// they were selected.
pub fn max_spanning_tree(net: &QNetwork) -> Result<Vec<String>> {
    let mut sets = DisjointSets::new(net.point_count());
    let mut tree = Vec::new();
    for e in kruskal_order(net) {
        let (u, v) = net.endpoints(e);
        if sets.union(u, v) {
            tree.push(net.edges()[e].id.clone());
        }
    }
    if sets.find(net.alice_index()) != sets.find(net.bob_index()) {
        return Err(Error::NoRoute);
    }
    Ok(tree)
}

/// Follows the unique alice-bob path through `tree` and reports its
/// bottleneck. The dual cut removes the bottleneck edge from the tree; it
/// certifies optimality when `tree` is a maximum spanning forest.
pub fn tree_route_capacity(net: &QNetwork, tree: &[String]) -> Result<RouteReport> {
    let n = net.point_count();
    let mut sets = DisjointSets::new(n);
    let mut adjacency = vec![Vec::new(); n];
    for id in tree {
        let e = net.edge_position(id)?;
        let (u, v) = net.endpoints(e);
        if !sets.union(u, v) {
            return Err(Error::Validation(format!("tree edge `{id}` closes a cycle")));
        }
        adjacency[u].push((v, e));
        adjacency[v].push((u, e));
    }

    let alice = net.alice_index();
    let bob = net.bob_index();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[alice] = true;
    let mut queue = VecDeque::from([alice]);
    while let Some(x) = queue.pop_front() {
        for &(y, e) in &adjacency[x] {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, e));
                queue.push_back(y);
            }
        }
    }
    if !seen[bob] {
        return Err(Error::NoRoute);
    }

    let mut points = vec![bob];
    let mut edges = Vec::new();
    let mut at = bob;
    while let Some((prev, e)) = parent[at] {
        edges.push(e);
        points.push(prev);
        at = prev;
    }
    points.reverse();
    edges.reverse();
    let route = Route::from_indices(net, &points, &edges);
    let (capacity, bottleneck_edge) = route.bottleneck(net)?;
    let cut_edge = net.edge_position(&bottleneck_edge)?;

    let mut side_a = vec![false; n];
    side_a[alice] = true;
    let mut queue = VecDeque::from([alice]);
    while let Some(x) = queue.pop_front() {
        for &(y, e) in &adjacency[x] {
            if e != cut_edge && !side_a[y] {
                side_a[y] = true;
                queue.push_back(y);
            }
        }
    }
    let dual_cut = Cut::from_mask(net, &side_a);

    Ok(RouteReport {
        capacity,
        route,
        bottleneck_edge,
        dual_cut,
    })
}

/// Cut minimizing the largest crossing-edge capacity.
///
/// Edges are merged in decreasing capacity until alice and bob meet at some
/// capacity `c`; alice's side is then everything she reaches through edges
/// strictly stronger than `c`.
pub fn min_single_edge_cut(net: &QNetwork) -> Result<Cut> {
    let mut sets = DisjointSets::new(net.point_count());
    let (alice, bob) = (net.alice_index(), net.bob_index());
    for e in kruskal_order(net) {
        let (u, v) = net.endpoints(e);
        sets.union(u, v);
        if sets.find(alice) == sets.find(bob) {
            let threshold = net.capacity_at(e);
            let side_a = net.reachable_from_alice(|f| net.capacity_at(f) > threshold);
            return Ok(Cut::from_mask(net, &side_a));
        }
    }
    Err(Error::NoRoute)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::ChannelSpec;
    use crate::fixtures;
    use crate::network::Edge;

    #[test]
    fn diamond_prefers_lexicographic_route() {
        let net = fixtures::diamond(ChannelSpec::lossy(0.5));
        let report = widest_path(&net).unwrap();
        assert!((report.capacity.bits() - 1.0).abs() < 1e-12);
        assert_eq!(report.route.points, vec!["a", "p1", "b"]);
        assert_eq!(report.route.edges, vec!["e1", "e4"]);
        assert_eq!(report.bottleneck_edge, "e1");
        assert_eq!(report.dual_cut.side_a, vec!["a"]);
        assert!(report.dual_cut.is_valid_for(&net));

        let cut = min_single_edge_cut(&net).unwrap();
        assert_eq!(cut.single_edge_value(&net), Some(report.capacity));
    }

    #[test]
    fn path_graph_matches_chain() {
        let channels = [ChannelSpec::lossy(0.9), ChannelSpec::lossy(0.4), ChannelSpec::erasure(0.1)];
        let net = fixtures::path(&channels);
        let report = widest_path(&net).unwrap();
        assert_eq!(report.capacity, ChannelSpec::lossy(0.4).capacity().unwrap());
        assert_eq!(report.bottleneck_edge, "e2");
        let cut = min_single_edge_cut(&net).unwrap();
        assert_eq!(cut.cut_set, vec!["e2"]);
    }

    #[test]
    fn parallel_edges_keep_the_strongest() {
        let net = QNetwork::new(
            ["a", "b"],
            "a",
            "b",
            [
                Edge::new("weak", "a", "b", ChannelSpec::lossy(0.2)),
                Edge::new("strong", "b", "a", ChannelSpec::lossy(0.7)),
                Edge::new("twin", "a", "b", ChannelSpec::lossy(0.7)),
            ],
        )
        .unwrap();
        let report = widest_path(&net).unwrap();
        assert_eq!(report.route.edges, vec!["strong"]);
        assert_eq!(report.dual_cut.cut_set.len(), 3);
    }

    #[test]
    fn disconnected_is_no_route() {
        let net = QNetwork::new(["a", "x", "b"], "a", "b", [Edge::new("e", "a", "x", ChannelSpec::lossy(0.5))]).unwrap();
        assert_eq!(widest_path(&net), Err(Error::NoRoute));
        assert_eq!(max_spanning_tree(&net), Err(Error::NoRoute));
        assert_eq!(min_single_edge_cut(&net), Err(Error::NoRoute));
    }

    #[test]
    fn unique_widest_route_found_by_both_algorithms() {
        // a-x-y-b (weakest 0.8) beats a-z-b (0.6), the direct edge (0.2)
        // and both routes through x-z (0.3).
        let net = QNetwork::new(
            ["a", "x", "y", "z", "b"],
            "a",
            "b",
            [
                Edge::new("ab", "a", "b", ChannelSpec::lossy(0.2)),
                Edge::new("ax", "a", "x", ChannelSpec::lossy(0.9)),
                Edge::new("xy", "x", "y", ChannelSpec::lossy(0.8)),
                Edge::new("yb", "y", "b", ChannelSpec::lossy(0.85)),
                Edge::new("az", "a", "z", ChannelSpec::lossy(0.95)),
                Edge::new("zb", "z", "b", ChannelSpec::lossy(0.6)),
                Edge::new("xz", "x", "z", ChannelSpec::lossy(0.3)),
            ],
        )
        .unwrap();
        let dijkstra = widest_path(&net).unwrap();
        let tree = max_spanning_tree(&net).unwrap();
        let kruskal = tree_route_capacity(&net, &tree).unwrap();
        assert_eq!(dijkstra.route.points, vec!["a", "x", "y", "b"]);
        assert_eq!(kruskal.route, dijkstra.route);
        assert_eq!(kruskal.capacity, dijkstra.capacity);
        assert_eq!(dijkstra.bottleneck_edge, "xy");
        assert!(kruskal.dual_cut.is_valid_for(&net));
        assert_eq!(kruskal.dual_cut.single_edge_value(&net), Some(dijkstra.capacity));
    }

    #[test]
    fn tree_route_rejects_cycles_and_unknown_edges() {
        let net = fixtures::diamond(ChannelSpec::lossy(0.5));
        let cycle: Vec<String> = ["e1", "e3", "e2"].iter().map(|s| s.to_string()).collect();
        assert!(matches!(tree_route_capacity(&net, &cycle), Err(Error::Validation(_))));
        assert_eq!(
            tree_route_capacity(&net, &["zz".to_string()]),
            Err(Error::UnknownEdge("zz".into()))
        );
        let partial: Vec<String> = vec!["e1".into()];
        assert_eq!(tree_route_capacity(&net, &partial), Err(Error::NoRoute));
    }

    #[test]
    fn all_equal_capacities_any_tree_works() {
        let net = fixtures::diamond(ChannelSpec::lossy(0.5));
        let tree = max_spanning_tree(&net).unwrap();
        assert_eq!(tree.len(), 3);
        let report = tree_route_capacity(&net, &tree).unwrap();
        assert!((report.capacity.bits() - 1.0).abs() < 1e-12);
    }
}
