//! Exact maximum (weighted) stable sets by branch and bound.
//!
//! Candidates are pruned with a greedy clique-cover upper bound; connected
//! components are solved independently and summed.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::weights::WeightFunction;

/// Maximum-cardinality stable set: `(size, witness)`.
pub fn max_stable_set(g: &Graph) -> (u64, VertexSet) {
    max_weighted_stable_set(g, &WeightFunction::uniform(g.n(), 1))
}

/// Maximum-weight stable set under non-negative weights: `(weight, witness)`.
/// Zero-weight vertices never enter the witness.
pub fn max_weighted_stable_set(g: &Graph, w: &WeightFunction) -> (u64, VertexSet) {
    assert_eq!(w.len(), g.n(), "weight function must cover all vertices");
    let mut total = 0u64;
    let mut witness = VertexSet::new();
    let positive: VertexSet = (0..g.n()).filter(|&v| w.get(v) > 0).collect();
    for comp in g.components_within(&positive) {
        let mut solver = Solver { g, w, best: 0, best_set: VertexSet::new() };
        solver.search(comp, 0, VertexSet::new());
        total += solver.best;
        witness.union_with(&solver.best_set);
    }
    (total, witness)
}

struct Solver<'a> {
    g: &'a Graph,
    w: &'a WeightFunction,
    best: u64,
    best_set: VertexSet,
}

impl Solver<'_> {
    /// Greedy clique cover of `p`; the sum of per-clique maxima bounds any
    /// stable set inside `p`.
    fn clique_cover_bound(&self, p: &VertexSet) -> u64 {
        let mut cliques: Vec<(VertexSet, u64)> = Vec::new();
        for v in p.iter() {
            let wv = self.w.get(v);
            match cliques.iter_mut().find(|(c, _)| c.is_subset(self.g.neighbors(v))) {
                Some((c, m)) => {
                    c.insert(v);
                    *m = (*m).max(wv);
                }
                None => cliques.push((VertexSet::singleton(v), wv)),
            }
        }
        cliques.iter().map(|(_, m)| m).sum()
    }

    fn search(&mut self, mut p: VertexSet, mut current: u64, mut chosen: VertexSet) {
        // vertices isolated within p are always taken
        loop {
            let isolated: Vec<usize> =
                p.iter().filter(|&v| self.g.neighbors(v).is_disjoint(&p)).collect();
            if isolated.is_empty() {
                break;
            }
            for v in isolated {
                current += self.w.get(v);
                chosen.insert(v);
                p.remove(v);
            }
        }
        if p.is_empty() {
            if current > self.best {
                self.best = current;
                self.best_set = chosen;
            }
            return;
        }
        if current + self.clique_cover_bound(&p) <= self.best {
            return;
        }
        // branch on the heaviest vertex, ties by degree within p, then index
        let v = p
            .iter()
            .max_by_key(|&v| {
                (self.w.get(v), self.g.neighbors(v).intersection(&p).len(), std::cmp::Reverse(v))
            })
            .expect("p is non-empty");
        // include v
        let mut p_in = p.difference(self.g.neighbors(v));
        p_in.remove(v);
        let mut chosen_in = chosen.clone();
        chosen_in.insert(v);
        self.search(p_in, current + self.w.get(v), chosen_in);
        // exclude v
        p.remove(v);
        self.search(p, current, chosen);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive reference for small graphs.
    fn brute(g: &Graph, w: &WeightFunction) -> u64 {
        let n = g.n();
        assert!(n <= 20);
        let mut best = 0;
        for mask in 0u32..1 << n {
            let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if g.is_stable_set(&s).unwrap() {
                best = best.max(w.eval(&s));
            }
        }
        best
    }

    #[test]
    fn pentagon_alpha_two() {
        let c5 = Graph::cycle(5).unwrap();
        let (v, s) = max_stable_set(&c5);
        assert_eq!(v, 2);
        assert_eq!(s.len(), 2);
        assert!(c5.is_stable_set(&s).unwrap());
    }

    #[test]
    fn weighted_path() {
        let p4 = Graph::path(4).unwrap();
        let w = WeightFunction::from_vec(vec![1, 10, 10, 1]);
        let (v, s) = max_weighted_stable_set(&p4, &w);
        assert_eq!(v, 11);
        assert!(p4.is_stable_set(&s).unwrap());
        assert_eq!(w.eval(&s), 11);
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..60 {
            let n = 2 + trial % 9;
            let p = [0.2, 0.5, 0.8][trial % 3];
            let g = Graph::erdos_renyi(n, p, &mut rng);
            let w = WeightFunction::from_vec((0..n).map(|_| rng.gen_range(0..5)).collect());
            let (v, s) = max_weighted_stable_set(&g, &w);
            assert!(g.is_stable_set(&s).unwrap());
            assert_eq!(w.eval(&s), v);
            assert_eq!(v, brute(&g, &w), "graph {:?} weights {:?}", g, w);
            let (u, us) = max_stable_set(&g);
            assert_eq!(u, brute(&g, &WeightFunction::uniform(n, 1)));
            assert_eq!(us.len() as u64, u);
        }
    }

    #[test]
    fn zero_weights_never_in_witness() {
        let p3 = Graph::path(3).unwrap();
        let w = WeightFunction::from_vec(vec![0, 3, 0]);
        let (v, s) = max_weighted_stable_set(&p3, &w);
        assert_eq!(v, 3);
        assert_eq!(s.to_vec(), vec![1]);
    }
}
