//! Brute-force ground truth for small networks.
//!
//! Everything here is plain enumeration: every alice/bob bipartition and
//! every simple route. No graph algorithm from the rest of the crate is
//! used, so agreement with [`crate::single_path`] and [`crate::flow`] is a
//! genuine cross-check.

use crate::channel::CapacityBits;
use crate::error::{Error, Result};
use crate::network::{Cut, QNetwork, Route};

/// Largest network the oracle will enumerate.
pub const MAX_ORACLE_POINTS: usize = 12;

fn check_size(net: &QNetwork) -> Result<()> {
    if net.point_count() > MAX_ORACLE_POINTS {
        Err(Error::TooLarge {
            points: net.point_count(),
            max: MAX_ORACLE_POINTS,
        })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnumeratedCut {
    pub cut: Cut,
    /// Largest crossing capacity, `None` when nothing crosses.
    pub single_edge_value: Option<CapacityBits>,
    /// Sum of crossing capacities.
    pub multi_edge_value: CapacityBits,
}

/// All `2^(|P|-2)` alice/bob bipartitions.
#[derive(Debug, Clone, PartialEq)]
pub struct CutEnumeration {
    pub cuts: Vec<EnumeratedCut>,
}

pub fn enumerate_cuts(net: &QNetwork) -> Result<CutEnumeration> {
    check_size(net)?;
    let n = net.point_count();
    let (alice, bob) = (net.alice_index(), net.bob_index());
    let free: Vec<usize> = (0..n).filter(|&p| p != alice && p != bob).collect();
    let mut cuts = Vec::with_capacity(1 << free.len());
    for bits in 0u32..(1 << free.len()) {
        let mut in_a = vec![false; n];
        in_a[alice] = true;
        for (k, &p) in free.iter().enumerate() {
            in_a[p] = bits & (1 << k) != 0;
        }
        let mut single: Option<CapacityBits> = None;
        let mut multi = 0.0;
        for e in 0..net.edge_count() {
            let (u, v) = net.endpoints(e);
            if in_a[u] != in_a[v] {
                let c = net.capacity_at(e);
                single = Some(single.map_or(c, |s| s.max(c)));
                multi += c.bits();
            }
        }
        cuts.push(EnumeratedCut {
            cut: Cut::from_mask(net, &in_a),
            single_edge_value: single,
            multi_edge_value: CapacityBits::from_raw(multi),
        });
    }
    Ok(CutEnumeration { cuts })
}

/// Depth-first walk over every simple alice-bob path. Neighbours are tried
/// in lexicographic order of point name, then edge id.
fn for_each_route(net: &QNetwork, mut visit: impl FnMut(&[usize], &[usize])) {
    let n = net.point_count();
    let mut neighbours: Vec<Vec<(usize, usize)>> = (0..n).map(|p| net.incident(p).to_vec()).collect();
    for list in &mut neighbours {
        list.sort_by(|&(x, e), &(y, f)| {
            net.name(x)
                .cmp(net.name(y))
                .then_with(|| net.edges()[e].id.cmp(&net.edges()[f].id))
        });
    }

    struct Walk<'a> {
        neighbours: &'a [Vec<(usize, usize)>],
        bob: usize,
        on_path: Vec<bool>,
        points: Vec<usize>,
        edges: Vec<usize>,
    }

    fn descend(w: &mut Walk<'_>, visit: &mut dyn FnMut(&[usize], &[usize])) {
        let here = *w.points.last().expect("walk starts at alice");
        if here == w.bob {
            visit(&w.points, &w.edges);
            return;
        }
        for &(next, e) in &w.neighbours[here] {
            if w.on_path[next] {
                continue;
            }
            w.on_path[next] = true;
            w.points.push(next);
            w.edges.push(e);
            descend(w, visit);
            w.edges.pop();
            w.points.pop();
            w.on_path[next] = false;
        }
    }

    let alice = net.alice_index();
    let mut walk = Walk {
        neighbours: &neighbours,
        bob: net.bob_index(),
        on_path: vec![false; n],
        points: vec![alice],
        edges: Vec::new(),
    };
    walk.on_path[alice] = true;
    descend(&mut walk, &mut visit);
}

/// Every simple alice-bob route exactly once, in lexicographic DFS order.
/// Parallel edges give distinct routes.
pub fn enumerate_simple_routes(net: &QNetwork) -> Result<Vec<Route>> {
    check_size(net)?;
    let mut routes = Vec::new();
    for_each_route(net, |points, edges| {
        routes.push(Route::from_indices(net, points, edges));
    });
    Ok(routes)
}

/// Single-path capacity computed twice, from both sides of the duality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SinglePathOracle {
    /// Max over simple routes of the weakest edge.
    pub by_routes: CapacityBits,
    /// Min over cuts of the strongest crossing edge.
    pub by_cuts: CapacityBits,
}

pub fn brute_single_path_capacity(net: &QNetwork) -> Result<SinglePathOracle> {
    check_size(net)?;
    let mut by_routes: Option<CapacityBits> = None;
    for_each_route(net, |_, edges| {
        let weakest = edges
            .iter()
            .map(|&e| net.capacity_at(e))
            .min()
            .expect("a route has at least one edge");
        by_routes = Some(by_routes.map_or(weakest, |b| b.max(weakest)));
    });

    let mut by_cuts: Option<CapacityBits> = None;
    for cut in enumerate_cuts(net)?.cuts {
        // An empty cut-set means alice and bob are disconnected.
        let value = cut.single_edge_value.ok_or(Error::NoRoute)?;
        by_cuts = Some(by_cuts.map_or(value, |b| b.min(value)));
    }

    match (by_routes, by_cuts) {
        (Some(by_routes), Some(by_cuts)) => Ok(SinglePathOracle { by_routes, by_cuts }),
        _ => Err(Error::NoRoute),
    }
}

/// Min over cuts of the summed crossing capacity; zero when disconnected.
pub fn brute_multi_path_capacity(net: &QNetwork) -> Result<CapacityBits> {
    Ok(enumerate_cuts(net)?
        .cuts
        .into_iter()
        .map(|c| c.multi_edge_value)
        .min()
        .expect("at least one cut exists"))
}
