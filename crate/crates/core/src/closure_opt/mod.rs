//! Maximum-weight filters by minimum cut, and maximum-weight feasible sets
//! of a split-graph shelling antimatroid.
//!
//! Every feasible set is either a filter of `(V, ≺)` or, for exactly one
//! `i ∈ I`, the union of `fos(i)` with a filter `H` of `(ufs(i), ≺)` meeting
//! `K`. One closure problem per class therefore covers all feasible sets.

mod flow;
mod weights;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::feasibility::{fos, ufs, FeasibleClass};
use crate::poset::{Filter, Poset};
use crate::split_graph::SplitGraph;
use crate::vertex::{VertexId, VertexSet};

pub use flow::{cut_capacity, max_flow, Arc, Capacity, FlowNetwork, MaxFlow};
pub use weights::WeightFn;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sense {
    #[default]
    Max,
    Min,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptResult {
    pub best_set: VertexSet,
    pub best_weight: f64,
    pub class: FeasibleClass,
}

/// Maximum-weight filter of `p` containing `forced`. Among optimal filters
/// the inclusion-minimal one is returned, which is also the unique smallest.
pub fn max_closure(p: &Poset, w: &WeightFn, forced: &VertexSet) -> Result<(Filter, f64)> {
    if let Some(v) = forced.iter().find(|v| !p.ground().contains(*v)) {
        return Err(Error::ForcedNotClosed(v));
    }
    let elems: Vec<VertexId> = p.ground().iter().collect();
    let set = solve_closure(&elems, p.covers().iter().copied(), w, forced);
    let weight = w.total(&set);
    Ok((Filter::new_unchecked(set), weight))
}

/// Picard's reduction. Positive elements hang off the source, negative ones
/// feed the sink, and `u ≺ v` becomes an uncuttable arc `u → v`, so the
/// source side of a minimum cut is upward closed. The residual-reachable
/// side is the smallest minimum cut, hence the smallest optimal closure.
fn solve_closure<C>(elems: &[VertexId], covers: C, w: &WeightFn, forced: &VertexSet) -> VertexSet
where
    C: IntoIterator<Item = (VertexId, VertexId)>,
{
    let n = elems.len();
    let (s, t) = (n, n + 1);
    let index = |v: VertexId| elems.binary_search(&v).expect("cover outside ground");
    let mut net = FlowNetwork::new(n + 2, s, t).expect("distinct terminals");
    for (x, &v) in elems.iter().enumerate() {
        let wv = w.get(v);
        if wv > 0.0 {
            net.add_arc(s, x, Capacity::Finite(wv)).expect("valid arc");
        } else if wv < 0.0 {
            net.add_arc(x, t, Capacity::Finite(-wv)).expect("valid arc");
        }
        if forced.contains(v) {
            net.add_arc(s, x, Capacity::Infinite).expect("valid arc");
        }
    }
    for (u, v) in covers {
        net.add_arc(index(u), index(v), Capacity::Infinite).expect("valid arc");
    }
    max_flow(&net)
        .source_side
        .into_iter()
        .filter(|&x| x < n)
        .map(|x| elems[x])
        .collect()
}

struct Best {
    set: VertexSet,
    weight: f64,
    tol: f64,
}

impl Best {
    fn new(set: VertexSet, w: &WeightFn, tol: f64) -> Self {
        let weight = w.total(&set);
        Best { set, weight, tol }
    }

    /// Replaces the incumbent on higher weight, then smaller size, then
    /// lexicographically smaller members.
    fn offer(&mut self, set: VertexSet, w: &WeightFn) -> bool {
        let weight = w.total(&set);
        let better = weight > self.weight + self.tol
            || ((weight - self.weight).abs() <= self.tol && set < self.set);
        if better {
            self.set = set;
            self.weight = weight;
        }
        better
    }
}

/// Optimal feasible set under `sense`, ties broken by smaller size and then
/// lexicographic order.
pub fn max_weight_feasible(g: &SplitGraph, w: &WeightFn, sense: Sense) -> Result<OptResult> {
    let original = w;
    let w = match sense {
        Sense::Max => w.clone(),
        Sense::Min => w.negated(),
    };
    let tol = 1e-9 * (1.0 + w.iter().map(|(_, x)| x.abs()).sum::<f64>());

    let elems: Vec<VertexId> = g.vertex_set().iter().collect();
    let star = solve_closure(&elems, g.cross_edges().iter().copied(), &w, &VertexSet::new());
    let mut best = Best::new(star, &w, tol);
    let mut class = FeasibleClass::Star;

    for &i in g.independent() {
        let ni = g.cross_neighbors(i)?;
        if ni.is_empty() {
            continue;
        }
        let forced = fos(g, i)?;
        let Some(h) = best_unforced_part(g, i, &w, &forced, &best)? else {
            continue;
        };
        if best.offer(forced.union(&h), &w) {
            class = FeasibleClass::IFeasible(i);
        }
    }

    Ok(OptResult {
        best_weight: original.total(&best.set),
        best_set: best.set,
        class,
    })
}

/// Best filter `H` of `(ufs(i), ≺)` with `H ∩ K ≠ ∅`, or `None` when no such
/// `H` can beat `incumbent`. The unconstrained optimum is tried first; only
/// when it misses `K` is each `k ∈ N(i)` forced in turn, since any valid `H`
/// contains one of them.
fn best_unforced_part(
    g: &SplitGraph,
    i: VertexId,
    w: &WeightFn,
    forced: &VertexSet,
    incumbent: &Best,
) -> Result<Option<VertexSet>> {
    let ni = g.cross_neighbors(i)?;
    let u = ufs(g, i)?;
    let elems: Vec<VertexId> = u.iter().collect();
    // Every `j ∈ ufs(i) ∩ I` has `N(j) ⊆ N(i) ⊆ ufs(i)`.
    let mut covers = Vec::new();
    for j in u.iter().filter(|&j| g.in_independent(j)) {
        for &k in g.cross_neighbors(j)? {
            covers.push((k, j));
        }
    }

    let h = solve_closure(&elems, covers.iter().copied(), w, &VertexSet::new());
    if h.iter().any(|v| g.in_clique(v)) {
        return Ok(Some(h));
    }
    // With no `K` vertex, `fos(i) ∪ h` is itself *-feasible, so it weighs no
    // more than the incumbent and a forced part weighs no more than `h`. A
    // forced candidate can then only win a tie, by being no larger.
    let ceiling = w.total(forced) + w.total(&h);
    if ceiling < incumbent.weight - incumbent.tol || forced.len() + 1 > incumbent.set.len() {
        return Ok(None);
    }
    let mut best: Option<Best> = None;
    for &k in ni {
        let hk = solve_closure(&elems, covers.iter().copied(), w, &VertexSet::singleton(k));
        match best.as_mut() {
            None => best = Some(Best::new(hk, w, incumbent.tol)),
            Some(b) => {
                b.offer(hk, w);
            }
        }
    }
    Ok(best.map(|b| b.set))
}
