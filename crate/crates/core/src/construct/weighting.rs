//! Integer vertex weightings with bounded stable-set weight.
//!
//! `find_weighting(G, B, W)` searches for non-negative integer weights
//! summing to exactly W whose maximum-weight stable set is at most B, or
//! certifies that none exist. The search is a cutting-plane loop: solve
//! the weight problem against the stable sets discovered so far by branch
//! and bound, then call the exact weighted-MIS solver as a separation
//! oracle and add any violated stable set as a new cut.
//!
//! Stable sets split over connected components, so the problem decomposes:
//! for each component the cutting-plane loop computes the maximum total
//! weight achievable under each per-component bound m <= B, and an exact
//! knapsack over these curves picks the split of B. Any witness found is
//! re-verified against the weighted-MIS solver before being returned.

use super::ConstructError;
use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::solve::mis;
use crate::weights::WeightFunction;
use std::time::Instant;

#[derive(Clone, Debug)]
pub enum WeightingOutcome {
    Feasible(WeightFunction),
    Infeasible,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub wall_ms: u64,
    pub ip_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { wall_ms: 600_000, ip_nodes: 200_000_000 }
    }
}

struct Deadline {
    start: Instant,
    budget: SearchBudget,
    nodes: u64,
}

impl Deadline {
    fn check(&self) -> Result<(), ConstructError> {
        if self.start.elapsed().as_millis() as u64 > self.budget.wall_ms {
            return Err(ConstructError::Budget(format!(
                "weighting search exceeded {} ms",
                self.budget.wall_ms
            )));
        }
        if self.nodes > self.budget.ip_nodes {
            return Err(ConstructError::Budget(format!(
                "weighting search exceeded {} branch-and-bound nodes",
                self.budget.ip_nodes
            )));
        }
        Ok(())
    }
}

/// Per-IP-call node cap during the fast phase. Capped solves return their
/// best incumbent, which stays sound (every curve entry is confirmed by
/// the separation oracle); only optimality is at stake, so a second,
/// uncapped phase runs before declaring infeasibility.
const FAST_IP_NODES: u64 = 50_000;

pub fn find_weighting(
    g: &Graph,
    bound: u64,
    target: u64,
    budget: SearchBudget,
) -> Result<WeightingOutcome, ConstructError> {
    if bound < 1 || target < 1 {
        return Err(ConstructError::Domain("bound and target must be >= 1".into()));
    }
    if bound > 16_384 {
        return Err(ConstructError::Budget(format!(
            "bound {} exceeds the curve table limit 16384",
            bound
        )));
    }
    let mut deadline = Deadline { start: Instant::now(), budget, nodes: 0 };
    match attempt(g, bound, target, Some(FAST_IP_NODES), &mut deadline)? {
        WeightingOutcome::Feasible(w) => Ok(WeightingOutcome::Feasible(w)),
        // the fast phase proves nothing negative; certify with exact solves
        WeightingOutcome::Infeasible => attempt(g, bound, target, None, &mut deadline),
    }
}

fn attempt(
    g: &Graph,
    bound: u64,
    target: u64,
    ip_node_cap: Option<u64>,
    deadline: &mut Deadline,
) -> Result<WeightingOutcome, ConstructError> {
    let comps = g.components();
    let comp_verts: Vec<Vec<usize>> = comps.iter().map(|c| c.to_vec()).collect();
    let comp_graphs: Vec<Graph> = comps
        .iter()
        .map(|c| g.induced_subgraph(c).expect("component in range"))
        .collect();

    // curves[c][m]: max total weight on component c when its stable sets
    // may weigh at most m, with a witness per entry. Structurally equal
    // components share one computation.
    let mut curves: Vec<Vec<(u64, Vec<u64>)>> = Vec::new();
    let mut seen: Vec<(usize, Vec<(usize, usize)>, usize)> = Vec::new(); // (n, edges, index)
    for gc in &comp_graphs {
        let key_edges: Vec<(usize, usize)> = gc.edges().collect();
        if let Some(&(_, _, idx)) = seen
            .iter()
            .find(|(n, e, _)| *n == gc.n() && *e == key_edges)
        {
            curves.push(curves[idx].clone());
            continue;
        }
        let curve = component_curve(gc, bound, ip_node_cap, deadline)?;
        seen.push((gc.n(), key_edges, curves.len()));
        curves.push(curve);
    }

    // knapsack over components: best[b] = max total with the per-component
    // bounds summing to at most b
    let b = bound as usize;
    let mut best = vec![0u64; b + 1];
    let mut choice: Vec<Vec<usize>> = Vec::new(); // per comp, chosen m per b
    for curve in &curves {
        let mut next = vec![0u64; b + 1];
        let mut pick = vec![0usize; b + 1];
        for total_b in 0..=b {
            for m in 0..=total_b {
                let cand = best[total_b - m] + curve[m].0;
                if cand > next[total_b] {
                    next[total_b] = cand;
                    pick[total_b] = m;
                }
            }
        }
        best = next;
        choice.push(pick);
    }
    if best[b] < target {
        return Ok(WeightingOutcome::Infeasible);
    }

    // reconstruct the allocation achieving best[b]
    let mut alloc = vec![0usize; curves.len()];
    let mut rem = b;
    for c in (0..curves.len()).rev() {
        alloc[c] = choice[c][rem];
        rem -= alloc[c];
    }

    let mut weights = WeightFunction::uniform(g.n(), 0);
    for (c, verts) in comp_verts.iter().enumerate() {
        let (_, ref local) = curves[c][alloc[c]];
        for (i, &v) in verts.iter().enumerate() {
            weights.set(v, local[i]);
        }
    }

    // shave the surplus down to the exact target
    let mut excess = weights.total() - target;
    for v in 0..g.n() {
        if excess == 0 {
            break;
        }
        let cut = excess.min(weights.get(v));
        weights.set(v, weights.get(v) - cut);
        excess -= cut;
    }
    debug_assert_eq!(weights.total(), target);

    // mandatory re-verification with the exact weighted-MIS solver
    let (mis_value, _) = mis::max_weighted_stable_set(g, &weights);
    assert!(
        mis_value <= bound && weights.total() == target,
        "weighting witness failed re-verification (mis {}, total {})",
        mis_value,
        weights.total()
    );
    Ok(WeightingOutcome::Feasible(weights))
}

/// Verifies both defining properties of a weighting against the exact
/// weighted-MIS solver. Returns the maximum stable-set weight found.
pub fn verify_weighting(g: &Graph, w: &WeightFunction, bound: u64, target: u64) -> Result<u64, String> {
    if w.len() != g.n() {
        return Err(format!("weighting covers {} of {} vertices", w.len(), g.n()));
    }
    if w.total() != target {
        return Err(format!("total {} != target {}", w.total(), target));
    }
    if let Some(v) = (0..g.n()).find(|&v| w.get(v) > bound) {
        return Err(format!("vertex {} carries weight {} > bound {}", v, w.get(v), bound));
    }
    let (value, set) = mis::max_weighted_stable_set(g, w);
    if value > bound {
        return Err(format!("stable set {:?} weighs {} > bound {}", set, value, bound));
    }
    Ok(value)
}

/// Cutting-plane curve for one connected component: entry m holds the
/// maximum achievable total when stable sets may weigh at most m. The cut
/// pool starts empty, grows only by separation, and is shared across all
/// m; each cap warm-starts from the previous verified solution (feasible
/// again because caps only loosen).
fn component_curve(
    gc: &Graph,
    bound: u64,
    ip_node_cap: Option<u64>,
    deadline: &mut Deadline,
) -> Result<Vec<(u64, Vec<u64>)>, ConstructError> {
    let n = gc.n();
    let mut pool: Vec<VertexSet> = Vec::new();
    let mut curve: Vec<(u64, Vec<u64>)> = Vec::with_capacity(bound as usize + 1);
    curve.push((0u64, vec![0u64; n]));
    for m in 1..=bound as usize {
        // superadditive warm start: pointwise sums of verified weightings
        // for caps a and m-a are feasible at cap m
        let mut warm = curve[m - 1].1.clone();
        let mut warm_total = curve[m - 1].0;
        for a in 1..=m / 2 {
            let combined = curve[a].0 + curve[m - a].0;
            if combined > warm_total {
                warm_total = combined;
                warm = curve[a].1.iter().zip(&curve[m - a].1).map(|(x, y)| x + y).collect();
            }
        }
        loop {
            deadline.check()?;
            let w = max_total_under_cuts(gc, &pool, m as u64, &warm, ip_node_cap, deadline)?;
            let wf = WeightFunction::from_vec(w.clone());
            let (value, stable) = mis::max_weighted_stable_set(gc, &wf);
            if value <= m as u64 {
                curve.push((wf.total(), w));
                break;
            }
            debug_assert!(!pool.contains(&stable));
            pool.push(stable);
        }
    }
    Ok(curve)
}

/// Exact maximum of the total weight subject to w(I) <= cap for every cut
/// I in the pool and w(v) <= cap per vertex. Branch and bound over the
/// constrained vertices (most-constrained first, values descending from
/// the residual cap); vertices in no cut are fixed at the cap. `warm`
/// must be a feasible solution and primes the incumbent.
fn max_total_under_cuts(
    gc: &Graph,
    pool: &[VertexSet],
    cap: u64,
    warm: &[u64],
    ip_node_cap: Option<u64>,
    deadline: &mut Deadline,
) -> Result<Vec<u64>, ConstructError> {
    let n = gc.n();
    let cuts_of: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..pool.len()).filter(|&j| pool[j].contains(v)).collect())
        .collect();
    let mut constrained: Vec<usize> = (0..n).filter(|&v| !cuts_of[v].is_empty()).collect();
    constrained.sort_by_key(|&v| (std::cmp::Reverse(cuts_of[v].len()), v));
    let free: Vec<usize> = (0..n).filter(|&v| cuts_of[v].is_empty()).collect();

    struct State<'a> {
        order: &'a [usize],
        cuts_of: &'a [Vec<usize>],
        cap: u64,
        slack: Vec<u64>,
        w: Vec<u64>,
        best: u64,
        best_w: Vec<u64>,
        nodes_left: u64,
        /// per suffix position: cuts of a static greedy cover, then the
        /// vertices the cover misses
        cover_cuts: Vec<Vec<usize>>,
        cover_rest: Vec<Vec<usize>>,
    }

    fn residual_cap(st: &State, v: usize) -> u64 {
        let mut c = st.cap;
        for &j in &st.cuts_of[v] {
            c = c.min(st.slack[j]);
        }
        c
    }

    /// Upper bound on what the suffix can still contribute, based on the
    /// static cover: covered vertices jointly add at most the current
    /// slack of their cover cuts, the rest their individual caps.
    fn suffix_bound(st: &State, idx: usize) -> u64 {
        let mut bound: u64 = st.cover_cuts[idx].iter().map(|&j| st.slack[j]).sum();
        for &v in &st.cover_rest[idx] {
            bound += residual_cap(st, v);
        }
        bound
    }

    fn dfs(st: &mut State, idx: usize, total: u64, deadline: &mut Deadline) -> Result<(), ConstructError> {
        deadline.nodes += 1;
        if deadline.nodes % 65536 == 0 {
            deadline.check()?;
        }
        if st.nodes_left == 0 {
            return Ok(()); // capped: keep the incumbent, skip the rest
        }
        st.nodes_left -= 1;
        if idx == st.order.len() {
            if total > st.best {
                st.best = total;
                st.best_w = st.w.clone();
            }
            return Ok(());
        }
        if total + suffix_bound(st, idx) <= st.best {
            return Ok(());
        }
        let v = st.order[idx];
        let cap_v = residual_cap(st, v);
        let mut val = cap_v;
        loop {
            st.w[v] = val;
            for &j in &st.cuts_of[v] {
                st.slack[j] -= val;
            }
            dfs(st, idx + 1, total + val, deadline)?;
            for &j in &st.cuts_of[v] {
                st.slack[j] += val;
            }
            st.w[v] = 0;
            if val == 0 || st.nodes_left == 0 {
                break;
            }
            val -= 1;
        }
        Ok(())
    }

    // static greedy covers per suffix position: prefer cuts covering many
    // suffix vertices; leftover vertices are bounded individually
    let mut cover_cuts: Vec<Vec<usize>> = Vec::with_capacity(constrained.len() + 1);
    let mut cover_rest: Vec<Vec<usize>> = Vec::with_capacity(constrained.len() + 1);
    for idx in 0..=constrained.len() {
        let mut remaining: VertexSet = constrained[idx..].iter().copied().collect();
        let mut cuts = Vec::new();
        loop {
            let pick = (0..pool.len())
                .map(|j| (pool[j].intersection(&remaining).len(), std::cmp::Reverse(j)))
                .max()
                .filter(|&(covered, _)| covered >= 2);
            match pick {
                Some((_, std::cmp::Reverse(j))) => {
                    cuts.push(j);
                    remaining.difference_with(&pool[j]);
                }
                None => break,
            }
        }
        cover_cuts.push(cuts);
        cover_rest.push(remaining.to_vec());
    }

    let warm_constrained: u64 = constrained.iter().map(|&v| warm[v]).sum();
    let mut warm_w = vec![0u64; n];
    for &v in &constrained {
        warm_w[v] = warm[v];
    }
    let mut st = State {
        order: &constrained,
        cuts_of: &cuts_of,
        cap,
        slack: vec![cap; pool.len()],
        w: vec![0; n],
        best: warm_constrained,
        best_w: warm_w,
        nodes_left: ip_node_cap.unwrap_or(u64::MAX),
        cover_cuts,
        cover_rest,
    };
    // warm solution must respect the pool at this cap
    debug_assert!(pool.iter().all(|cut| cut.iter().map(|v| warm[v]).sum::<u64>() <= cap));
    dfs(&mut st, 0, 0, deadline)?;
    let mut w = st.best_w;
    for &v in &free {
        w[v] = cap;
    }
    Ok(w)
}
