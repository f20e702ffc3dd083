//! Invariants of the capacity formulas and graph algorithms.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qnetcap::chain::{
    chain_capacity, equidistant_lossy_capacity, multiband_chain_capacity, ChainSpec, MultibandChainSpec,
    MultibandLink,
};
use qnetcap::network::Edge;
use qnetcap::{fixtures, flow, oracle, single_path, ChannelSpec, QNetwork};

fn cap(spec: ChannelSpec) -> f64 {
    spec.capacity().unwrap().bits()
}

fn lossy_network(seed: u64, n: usize) -> QNetwork {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let net = fixtures::random_network(&mut rng, n, 0.5, |r| {
            ChannelSpec::lossy(rand::Rng::gen_range(r, 0.01..0.99))
        });
        if net.is_connected() {
            return net;
        }
    }
}

fn replace_channel(net: &QNetwork, id: &str, channel: ChannelSpec) -> QNetwork {
    let edges = net.edges().iter().map(|e| {
        if e.id == id {
            Edge::new(e.id.clone(), e.u.clone(), e.v.clone(), channel.clone())
        } else {
            e.clone()
        }
    });
    QNetwork::new(net.points().to_vec(), net.alice(), net.bob(), edges).unwrap()
}

proptest! {
    #[test]
    fn lossy_capacity_increases_with_transmissivity(a in 1e-6f64..0.999, b in 1e-6f64..0.999) {
        prop_assume!(a < b);
        prop_assert!(cap(ChannelSpec::lossy(a)) < cap(ChannelSpec::lossy(b)));
    }

    #[test]
    fn amplifier_capacity_decreases_with_gain(a in 1.0001f64..1e5, b in 1.0001f64..1e5) {
        prop_assume!(a < b);
        prop_assert!(cap(ChannelSpec::amplifier(a)) > cap(ChannelSpec::amplifier(b)));
    }

    #[test]
    fn erasure_capacity_decreases_with_probability(a in 0.0f64..=1.0, b in 0.0f64..=1.0, dim in 2u32..9) {
        prop_assume!(a < b);
        let (ca, cb) = (cap(ChannelSpec::Erasure { p: a, dim }), cap(ChannelSpec::Erasure { p: b, dim }));
        prop_assert!(ca > cb);
    }

    #[test]
    fn dephasing_capacity_falls_towards_uniform(dim in 2usize..7, s in 0.0f64..0.999, t in 0.0f64..0.999) {
        prop_assume!(s + 1e-6 < t);
        // Segment from the point mass on k = 0 to the uniform distribution.
        let at = |x: f64| {
            let u = 1.0 / dim as f64;
            let mut probs = vec![x * u; dim];
            probs[0] = 1.0 - (dim - 1) as f64 * x * u;
            ChannelSpec::Dephasing { probs }
        };
        prop_assert!(cap(at(s)) > cap(at(t)));
    }

    #[test]
    fn multiband_is_additive(eta in 1e-6f64..0.999, bands in 1u32..200) {
        prop_assert_eq!(
            cap(ChannelSpec::multiband_lossy(eta, bands)),
            f64::from(bands) * cap(ChannelSpec::lossy(eta))
        );
    }

    #[test]
    fn chain_is_bounded_by_every_link(etas in prop::collection::vec(0.01f64..0.99, 1..8), extra in 0.01f64..0.99) {
        let links: Vec<ChannelSpec> = etas.iter().map(|&e| ChannelSpec::lossy(e)).collect();
        let c = chain_capacity(&ChainSpec::new(links.clone()).unwrap()).unwrap().capacity;
        for link in &links {
            prop_assert!(c <= link.capacity().unwrap());
        }
        let mut longer = links;
        longer.push(ChannelSpec::lossy(extra));
        prop_assert!(chain_capacity(&ChainSpec::new(longer).unwrap()).unwrap().capacity <= c);
    }

    #[test]
    fn equidistant_matches_generic_chain(eta in 1e-9f64..0.999, n in 0u32..200) {
        let c = equidistant_lossy_capacity(eta, n).unwrap().bits();
        let next = equidistant_lossy_capacity(eta, n + 1).unwrap().bits();
        prop_assert!(next > c);
        let link = eta.powf(1.0 / (f64::from(n) + 1.0));
        let chain = ChainSpec::new(vec![ChannelSpec::lossy(link); n as usize + 1]).unwrap();
        prop_assert!((chain_capacity(&chain).unwrap().capacity.bits() - c).abs() < 1e-12);
    }

    #[test]
    fn multiband_chain_forms_agree(links in prop::collection::vec((0.01f64..0.99, 1u32..20), 1..6)) {
        let spec = MultibandChainSpec::new(
            links.iter().map(|&(eta, bands)| MultibandLink { eta, bands }).collect(),
        ).unwrap();
        let c = multiband_chain_capacity(&spec).unwrap().bits();
        prop_assert!((c + spec.theta_max().log2()).abs() < 1e-12 * c.max(1.0));
    }

    #[test]
    fn unit_bandwidth_reduces_to_plain_chain(etas in prop::collection::vec(0.01f64..0.99, 1..6)) {
        let spec = MultibandChainSpec::new(etas.iter().map(|&eta| MultibandLink { eta, bands: 1 }).collect()).unwrap();
        let plain = ChainSpec::new(etas.iter().map(|&e| ChannelSpec::lossy(e)).collect()).unwrap();
        prop_assert_eq!(multiband_chain_capacity(&spec).unwrap(), chain_capacity(&plain).unwrap().capacity);
    }

    #[test]
    fn widening_an_edge_never_hurts(seed in any::<u64>(), n in 3usize..8, pick in any::<prop::sample::Index>(), boost in 0.0f64..1.0) {
        let net = lossy_network(seed, n);
        let edge = &net.edges()[pick.index(net.edge_count())];
        let qnetcap::ChannelSpec::Lossy { eta } = edge.channel else { unreachable!() };
        let wider = replace_channel(&net, &edge.id, ChannelSpec::lossy(eta + (0.999 - eta) * boost));
        prop_assert!(
            single_path::widest_path(&wider).unwrap().capacity >= single_path::widest_path(&net).unwrap().capacity
        );
    }

    #[test]
    fn parallel_copy_changes_cuts_additively(seed in any::<u64>(), n in 3usize..7, pick in any::<prop::sample::Index>()) {
        let net = lossy_network(seed, n);
        let edge = net.edges()[pick.index(net.edge_count())].clone();
        let mut edges = net.edges().to_vec();
        edges.push(Edge::new("copy", edge.u.clone(), edge.v.clone(), edge.channel.clone()));
        let doubled = QNetwork::new(net.points().to_vec(), net.alice(), net.bob(), edges).unwrap();

        prop_assert_eq!(
            single_path::widest_path(&doubled).unwrap().capacity,
            single_path::widest_path(&net).unwrap().capacity
        );
        let c = net.edge_capacity(&edge.id).unwrap().bits();
        let before = oracle::enumerate_cuts(&net).unwrap().cuts;
        let after = oracle::enumerate_cuts(&doubled).unwrap().cuts;
        for (x, y) in before.iter().zip(&after) {
            prop_assert_eq!(&x.cut.side_a, &y.cut.side_a);
            let crosses = x.cut.cut_set.contains(&edge.id);
            let expected = x.multi_edge_value.bits() + if crosses { c } else { 0.0 };
            prop_assert!((y.multi_edge_value.bits() - expected).abs() < 1e-9);
        }
    }

    #[test]
    fn multi_path_dominates_single_path(seed in any::<u64>(), n in 3usize..9) {
        let net = lossy_network(seed, n);
        let single = single_path::widest_path(&net).unwrap().capacity.bits();
        prop_assert!(flow::multi_path_capacity(&net).bits() >= single - 1e-9);
    }
}

#[test]
fn equidistant_spacing_is_optimal_for_one_repeater() {
    for &eta in &[1e-6, 1e-3, 0.01, 0.1, 0.5, 0.9] {
        let best = equidistant_lossy_capacity(eta, 1).unwrap().bits();
        let sqrt = eta.sqrt();
        for i in 1..200 {
            // First-link transmissivity sweeps (eta, 1) on a log grid.
            let first = eta.powf(f64::from(i) / 200.0);
            let second = eta / first;
            let chain = ChainSpec::new(vec![ChannelSpec::lossy(first), ChannelSpec::lossy(second)]).unwrap();
            let split = chain_capacity(&chain).unwrap().capacity.bits();
            assert!(split <= best + 1e-12, "eta={eta} first={first}");
            if (first - sqrt).abs() > 1e-9 {
                assert!(split < best, "eta={eta} first={first}");
            } else {
                assert!((split - best).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn capacity_limits() {
    assert!(cap(ChannelSpec::lossy(1e-12)) < 1e-11);
    assert!(cap(ChannelSpec::amplifier(1e7)) < 1e-6);
}
