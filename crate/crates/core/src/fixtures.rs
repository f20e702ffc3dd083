//! Reference topologies and seeded random networks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::channel::ChannelSpec;
use crate::network::{Edge, QNetwork};

/// Four points `a, p1, p2, b`; `a` and `b` each join both relays, which are
/// joined to each other. Every edge carries `channel`.
pub fn diamond(channel: ChannelSpec) -> QNetwork {
    diamond_with([
        channel.clone(),
        channel.clone(),
        channel.clone(),
        channel.clone(),
        channel,
    ])
}

/// Diamond with edges `e1: a-p1, e2: a-p2, e3: p1-p2, e4: p1-b, e5: p2-b`.
pub fn diamond_with(channels: [ChannelSpec; 5]) -> QNetwork {
    let ends = [("a", "p1"), ("a", "p2"), ("p1", "p2"), ("p1", "b"), ("p2", "b")];
    let edges = ends
        .iter()
        .zip(channels)
        .enumerate()
        .map(|(i, (&(u, v), ch))| Edge::new(format!("e{}", i + 1), u, v, ch));
    QNetwork::new(["a", "p1", "p2", "b"], "a", "b", edges).expect("diamond is valid")
}

/// Linear network `a - r1 - ... - b` with one edge per channel, named
/// `e1, e2, ...` from alice's end.
pub fn path(channels: &[ChannelSpec]) -> QNetwork {
    assert!(!channels.is_empty(), "a path needs at least one link");
    let mut points = vec!["a".to_string()];
    points.extend((1..channels.len()).map(|i| format!("r{i}")));
    points.push("b".to_string());
    let edges = channels
        .iter()
        .enumerate()
        .map(|(i, ch)| Edge::new(format!("e{}", i + 1), points[i].clone(), points[i + 1].clone(), ch.clone()));
    QNetwork::new(points.clone(), "a", "b", edges).expect("path is valid")
}

/// Samples a channel of a random kind with parameters spread over the valid
/// ranges.
pub fn random_channel<R: Rng + ?Sized>(rng: &mut R) -> ChannelSpec {
    match rng.gen_range(0..5) {
        0 => ChannelSpec::lossy(open_unit(rng)),
        1 => ChannelSpec::amplifier(1.0 + 10.0 * open_unit(rng)),
        2 => {
            let dim = rng.gen_range(2..=4);
            let raw: Vec<f64> = (0..dim).map(|_| rng.gen::<f64>()).collect();
            ChannelSpec::Dephasing {
                probs: normalized(raw),
            }
        }
        3 => ChannelSpec::Erasure {
            p: rng.gen_range(0.0..=1.0),
            dim: rng.gen_range(2..=4),
        },
        _ => ChannelSpec::multiband_lossy(open_unit(rng), rng.gen_range(1..=5)),
    }
}

fn open_unit<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    loop {
        let x: f64 = rng.gen();
        if x > 0.0 {
            return x;
        }
    }
}

/// Rescales non-negative weights to a distribution that sums to one within
/// rounding.
fn normalized(mut raw: Vec<f64>) -> Vec<f64> {
    let total: f64 = raw.iter().sum();
    if total == 0.0 {
        raw.iter_mut().for_each(|p| *p = 0.0);
        raw[0] = 1.0;
        return raw;
    }
    raw.iter_mut().for_each(|p| *p /= total);
    // Absorb the rounding residue into the largest entry.
    let residue = 1.0 - raw.iter().sum::<f64>();
    let largest = (0..raw.len())
        .max_by(|&i, &j| raw[i].total_cmp(&raw[j]))
        .expect("non-empty");
    raw[largest] += residue;
    raw
}

/// Erdős–Rényi network on `n_points` points (alice `a`, bob `b`, relays
/// `p1..`), each pair joined with probability `edge_probability`. Alice and
/// bob are forced to have at least one edge each, and an occasional parallel
/// edge is added. Channels come from `sample`.
pub fn random_network<R, F>(rng: &mut R, n_points: usize, edge_probability: f64, mut sample: F) -> QNetwork
where
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> ChannelSpec,
{
    assert!(n_points >= 2, "need alice and bob");
    let mut points = vec!["a".to_string(), "b".to_string()];
    points.extend((1..n_points - 1).map(|i| format!("p{i}")));

    let mut pairs = Vec::new();
    for i in 0..n_points {
        for j in i + 1..n_points {
            if rng.gen_bool(edge_probability) {
                pairs.push((i, j));
            }
        }
    }
    for end in [0, 1] {
        if !pairs.iter().any(|&(i, j)| i == end || j == end) {
            let other = loop {
                let k = rng.gen_range(0..n_points);
                if k != end {
                    break k;
                }
            };
            pairs.push((end.min(other), end.max(other)));
        }
    }
    if !pairs.is_empty() && rng.gen_bool(0.2) {
        let dup = *pairs.choose(rng).expect("non-empty");
        pairs.push(dup);
    }

    let edges: Vec<Edge> = pairs
        .into_iter()
        .enumerate()
        .map(|(k, (i, j))| {
            let (u, v) = if rng.gen_bool(0.5) { (i, j) } else { (j, i) };
            Edge::new(format!("e{k}"), points[u].clone(), points[v].clone(), sample(rng))
        })
        .collect();
    QNetwork::new(points, "a", "b", edges).expect("generated network is valid")
}

/// Parameters of a reproducible suite of random connected networks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomSuite {
    pub seed: u64,
    pub count: usize,
    pub min_points: usize,
    pub max_points: usize,
    pub edge_probability: f64,
}

impl RandomSuite {
    /// `count` connected networks with mixed channel kinds. Disconnected
    /// draws are discarded.
    pub fn generate(&self) -> Vec<QNetwork> {
        self.generate_with(random_channel)
    }

    pub fn generate_with<F>(&self, mut sample: F) -> Vec<QNetwork>
    where
        F: FnMut(&mut ChaCha8Rng) -> ChannelSpec,
    {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut out = Vec::with_capacity(self.count);
        while out.len() < self.count {
            let n = rng.gen_range(self.min_points..=self.max_points);
            let net = random_network(&mut rng, n, self.edge_probability, &mut sample);
            if net.is_connected() {
                out.push(net);
            }
        }
        out
    }
}
