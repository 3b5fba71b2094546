//! Exact tree-parameters (tree-alpha, tree-chi, tree-tw, and treewidth via
//! the size measure) by dynamic programming over full blocks (S, C) with
//! potential maximal cliques as bags.
//!
//! Any tree-decomposition refines to the clique tree of a minimal
//! triangulation without increasing a monotone bag measure, so minimizing
//! over PMC-bag decompositions is exact; the reduction is cross-checked
//! against the chordal-supergraph oracle in tests. An unrealizable block
//! would mean the PMC catalog is incomplete and aborts the solve instead
//! of returning a possibly wrong value.

use super::{bag_measure_value, Limits, ParamName, ParameterValue, PmcCatalog, SolverError, Witness};
use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::td::{BagMeasure, TreeDecomposition};
use std::collections::HashMap;

/// Result of a tree-parameter computation: the optimum value of the bag
/// measure and a decomposition achieving it.
#[derive(Clone, Debug)]
pub struct TreeParamResult {
    pub value: u32,
    pub witness: TreeDecomposition,
}

fn guard(p: BagMeasure, limits: &Limits) -> (&'static str, usize) {
    match p {
        BagMeasure::Size => ("tree_parameter(size)", limits.tree_size_max_n),
        BagMeasure::Alpha => ("tree_parameter(alpha)", limits.tree_measure_max_n),
        BagMeasure::Chi => ("tree_parameter(chi)", limits.tree_measure_max_n),
        BagMeasure::Tw => ("tree_parameter(tw)", limits.tree_measure_max_n),
    }
}

/// Exact tree-p: the minimum over all tree-decompositions of the maximum
/// bag measure. For `Size` the value is the maximum bag size (width + 1).
pub fn tree_parameter(
    g: &Graph,
    p: BagMeasure,
    limits: &Limits,
) -> Result<TreeParamResult, SolverError> {
    let (op, max) = guard(p, limits);
    if g.n() > max {
        return Err(SolverError::Budget { op, n: g.n(), max });
    }
    if g.n() == 0 {
        return Ok(TreeParamResult { value: 0, witness: TreeDecomposition::single_bag(VertexSet::new()) });
    }

    let mut value = 0u32;
    let mut bags: Vec<VertexSet> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut prev_root: Option<usize> = None;
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp).expect("component in range");
        let verts = comp.to_vec();
        let solved = solve_connected(&sub, p)?;
        value = value.max(solved.value);
        let offset = bags.len();
        for bag in solved.witness.bags() {
            bags.push(bag.iter().map(|v| verts[v]).collect());
        }
        for &(a, b) in solved.witness.edges() {
            edges.push((a + offset, b + offset));
        }
        if let Some(r) = prev_root {
            edges.push((r, offset));
        }
        prev_root = Some(offset);
    }
    let witness = TreeDecomposition::new(bags, edges).simplify();

    let report = witness.validate(g);
    assert!(report.is_valid(), "tree_parameter witness invalid: {}", report.violations[0]);
    let (achieved, _) = witness.bag_parameter(g, p).expect("validated witness");
    assert_eq!(achieved, value, "tree_parameter witness does not achieve the claimed value");
    Ok(TreeParamResult { value, witness })
}

/// Exact treewidth: tree-parameter with the size measure, minus one.
pub fn treewidth(g: &Graph, limits: &Limits) -> Result<ParameterValue, SolverError> {
    let r = tree_parameter(g, BagMeasure::Size, limits)?;
    Ok(ParameterValue {
        name: ParamName::Tw,
        value: (r.value as u64).saturating_sub(1),
        witness: Witness::Decomposition(r.witness),
    })
}

/// Tree-alpha / tree-chi / tree-tw as `ParameterValue`s.
pub fn tree_parameter_value(
    g: &Graph,
    name: ParamName,
    limits: &Limits,
) -> Result<ParameterValue, SolverError> {
    let measure = name.bag_measure().expect("tree parameter name");
    if name == ParamName::Tw {
        return treewidth(g, limits);
    }
    let r = tree_parameter(g, measure, limits)?;
    Ok(ParameterValue {
        name,
        value: r.value as u64,
        witness: Witness::Decomposition(r.witness),
    })
}

struct Block {
    sep: VertexSet,
    comp: VertexSet,
    cost: u32,
    choice: usize,
}

fn solve_connected(g: &Graph, p: BagMeasure) -> Result<TreeParamResult, SolverError> {
    let full = g.vertex_set();
    let catalog = PmcCatalog::assemble(g);
    let mut memo: HashMap<VertexSet, u32> = HashMap::new();
    let measure = |omega: &VertexSet, memo: &mut HashMap<VertexSet, u32>| -> u32 {
        bag_measure_value(g, omega, p, memo)
    };

    // full blocks (S, C): component C of G - S seeing all of S
    let mut blocks: Vec<Block> = Vec::new();
    {
        let mut seen: std::collections::HashSet<VertexSet> = std::collections::HashSet::new();
        for s in &catalog.separators {
            for c in g.components_within(&full.difference(s)) {
                if g.neighborhood_of_set(&c) == *s && seen.insert(c.clone()) {
                    blocks.push(Block { sep: s.clone(), comp: c, cost: u32::MAX, choice: usize::MAX });
                }
            }
        }
    }
    blocks.sort_by(|a, b| (a.comp.len(), &a.comp).cmp(&(b.comp.len(), &b.comp)));
    let index: HashMap<VertexSet, usize> =
        blocks.iter().enumerate().map(|(i, b)| (b.comp.clone(), i)).collect();

    let incomplete = SolverError::CatalogIncomplete;

    for i in 0..blocks.len() {
        let sep = blocks[i].sep.clone();
        let comp = blocks[i].comp.clone();
        let sep_comp = sep.union(&comp);
        let mut best: Option<(u32, usize)> = None;
        for (oi, omega) in catalog.pmcs.iter().enumerate() {
            if !(sep.is_subset(omega) && *omega != sep && omega.is_subset(&sep_comp)) {
                continue;
            }
            let mut val = measure(omega, &mut memo);
            if best.map_or(false, |(b, _)| val >= b) {
                continue;
            }
            let mut feasible = true;
            for c2 in g.components_within(&comp.difference(omega)) {
                let Some(&j) = index.get(&c2) else {
                    return Err(incomplete(format!("no block for sub-component {:?}", c2)));
                };
                let cost = blocks[j].cost;
                if cost == u32::MAX {
                    feasible = false;
                    break;
                }
                val = val.max(cost);
            }
            if feasible && best.map_or(true, |(b, _)| val < b) {
                best = Some((val, oi));
            }
        }
        let Some((cost, choice)) = best else {
            return Err(incomplete(format!("block ({:?}, {:?}) has no realization", sep, comp)));
        };
        blocks[i].cost = cost;
        blocks[i].choice = choice;
    }

    // root choice over all pmcs
    let mut best: Option<(u32, usize)> = None;
    for (oi, omega) in catalog.pmcs.iter().enumerate() {
        let mut val = measure(omega, &mut memo);
        if best.map_or(false, |(b, _)| val >= b) {
            continue;
        }
        let mut feasible = true;
        for c in g.components_within(&full.difference(omega)) {
            let Some(&j) = index.get(&c) else {
                return Err(incomplete(format!("no block for component {:?}", c)));
            };
            if blocks[j].cost == u32::MAX {
                feasible = false;
                break;
            }
            val = val.max(blocks[j].cost);
        }
        if feasible && best.map_or(true, |(b, _)| val < b) {
            best = Some((val, oi));
        }
    }
    let Some((value, root_choice)) = best else {
        return Err(incomplete("no realizable root pmc".into()));
    };

    // reconstruct the clique tree from the recorded choices
    let mut bags: Vec<VertexSet> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let root_bag = catalog.pmcs[root_choice].clone();
    bags.push(root_bag.clone());
    let mut stack: Vec<(usize, VertexSet)> = g
        .components_within(&full.difference(&root_bag))
        .into_iter()
        .map(|c| (0usize, c))
        .collect();
    while let Some((parent, comp)) = stack.pop() {
        let j = index[&comp];
        let omega = catalog.pmcs[blocks[j].choice].clone();
        let node = bags.len();
        bags.push(omega.clone());
        edges.push((parent, node));
        for c2 in g.components_within(&comp.difference(&omega)) {
            stack.push((node, c2));
        }
    }

    Ok(TreeParamResult { value, witness: TreeDecomposition::new(bags, edges) })
}
