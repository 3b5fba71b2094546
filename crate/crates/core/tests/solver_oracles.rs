//! Cross-validation of the separator/PMC solver against its independent
//! oracles: the chordal-supergraph enumeration, the elimination-order
//! treewidth DP, and brute-force separator/PMC scans.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tdp_core::graph::Graph;
use tdp_core::solve::{self, brute, elim, minsep, pmc, Limits};
use tdp_core::td::BagMeasure;

fn probability(rng: &mut ChaCha8Rng) -> f64 {
    [0.2, 0.5, 0.8][rng.gen_range(0..3)]
}

#[test]
fn tree_parameters_match_chordal_supergraph_oracle() {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for sample in 0..60 {
        let n = 1 + sample % 7;
        let g = Graph::erdos_renyi(n, probability(&mut rng), &mut rng);
        for measure in [BagMeasure::Alpha, BagMeasure::Chi, BagMeasure::Size, BagMeasure::Tw] {
            let dp = solve::tree_parameter(&g, measure, &limits).unwrap().value;
            let oracle = brute::brute_force_tree_parameter(&g, measure, &limits).unwrap();
            assert_eq!(dp, oracle, "sample {} measure {:?} graph {:?}", sample, measure, g);
        }
    }
}

#[test]
fn treewidth_matches_elimination_dp_up_to_14() {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for sample in 0..30 {
        let n = 2 + sample % 13; // up to 14
        let g = Graph::erdos_renyi(n, probability(&mut rng), &mut rng);
        let a = solve::treewidth(&g, &limits).unwrap().value as u32;
        let b = elim::elimination_treewidth(&g, &limits).unwrap();
        assert_eq!(a, b, "sample {} graph {:?}", sample, g);
    }
}

#[test]
fn pmc_and_separator_enumeration_match_brute_force_n8_n9() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    let mut tested = 0;
    while tested < 40 {
        let n = 8 + tested % 2;
        let g = Graph::erdos_renyi(n, probability(&mut rng), &mut rng);
        if !g.is_connected() {
            continue;
        }
        let seps = minsep::minimal_separators(&g);
        assert_eq!(seps, minsep::brute_minimal_separators(&g), "separators of {:?}", g);
        assert_eq!(pmc::enumerate_pmcs(&g, &seps), pmc::brute_pmcs(&g), "pmcs of {:?}", g);
        tested += 1;
    }
}

#[test]
fn domain_instances_match_brute_force() {
    // the shapes the constructions actually produce
    let limits = Limits::default();
    let c6 = tdp_core::construct::one_completion(&Graph::empty_graph(3).unwrap()).graph;
    for measure in [BagMeasure::Alpha, BagMeasure::Chi, BagMeasure::Size] {
        let dp = solve::tree_parameter(&c6, measure, &limits).unwrap().value;
        let oracle = brute::brute_force_tree_parameter(&c6, measure, &limits).unwrap();
        assert_eq!(dp, oracle, "measure {:?} on the hexagon completion", measure);
    }
    let g3 = tdp_core::construct::burling(3).unwrap().graph;
    let seps = minsep::minimal_separators(&g3);
    // G_3 is disconnected: enumerate per component and compare
    for comp in g3.components() {
        let sub = g3.induced_subgraph(&comp).unwrap();
        let s = minsep::minimal_separators(&sub);
        assert_eq!(s, minsep::brute_minimal_separators(&sub));
        assert_eq!(pmc::enumerate_pmcs(&sub, &s), pmc::brute_pmcs(&sub));
    }
    drop(seps);
}

#[test]
fn chi_at_most_treewidth_plus_one_up_to_10() {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(59);
    for sample in 0..40 {
        let n = 1 + sample % 10;
        let g = Graph::erdos_renyi(n, probability(&mut rng), &mut rng);
        let chi = solve::color::chromatic_number(&g).0 as u64;
        let tw = solve::treewidth(&g, &limits).unwrap().value;
        assert!(chi <= tw + 1, "sample {} graph {:?}", sample, g);
    }
}

#[test]
fn witnesses_certify_their_values() {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for sample in 0..30 {
        let n = 1 + sample % 8;
        let g = Graph::erdos_renyi(n, probability(&mut rng), &mut rng);
        // stable-set witness
        let alpha = solve::max_stable_set(&g, None);
        let solve::Witness::StableSet(s) = &alpha.witness else { panic!("alpha witness kind") };
        assert!(g.is_stable_set(s).unwrap());
        assert_eq!(s.len() as u64, alpha.value);
        // coloring witness
        let chi = solve::chromatic_number(&g);
        let solve::Witness::Coloring(c) = &chi.witness else { panic!("chi witness kind") };
        assert!(solve::color::is_proper(&g, c));
        if n > 0 {
            assert_eq!(c.iter().max().map(|m| m + 1).unwrap_or(0) as u64, chi.value);
        }
        // decomposition witness achieves the treewidth
        let tw = solve::treewidth(&g, &limits).unwrap();
        let solve::Witness::Decomposition(td) = &tw.witness else { panic!("tw witness kind") };
        assert!(td.validate(&g).is_valid());
        assert_eq!(td.max_bag_size() as u64, tw.value + 1);
    }
}
