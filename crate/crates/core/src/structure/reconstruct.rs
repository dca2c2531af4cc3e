use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{AxiomViolation, SetFamily};
use crate::feasibility::{enumerate_feasible_with, verify_antimatroid};
use crate::limits::BruteLimits;
use crate::split_graph::SplitGraph;
use crate::vertex::{VertexId, VertexSet};

/// Recovers the split graph whose shelling antimatroid is `fam`.
///
/// A vertex `v` is isolated iff `{v} ∈ fam` and `V ∖ {v, u} ∈ fam` for every
/// other `u`; two non-isolated vertices are adjacent iff removing both from
/// `V` leaves a feasible set. The partition into `K` and `I` is then read off
/// the degree sequence and normalized.
///
/// The power set is realized by every graph whose non-isolated part is a
/// clique, so it is refused unless `force_canonical` asks for the edgeless
/// graph.
pub fn reconstruct_graph(fam: &SetFamily, force_canonical: bool) -> Result<SplitGraph> {
    verify_antimatroid(fam).map_err(Error::NotAnAntimatroid)?;
    if fam.is_power_set() {
        return canonical(fam, force_canonical);
    }
    let edges = candidate_edges(fam);
    split_partition(fam.ground(), &edges)
}

fn canonical(fam: &SetFamily, force_canonical: bool) -> Result<SplitGraph> {
    if !force_canonical {
        return Err(Error::FullPowerSet);
    }
    let ground: Vec<VertexId> = fam.ground().iter().collect();
    Ok(SplitGraph::new(Vec::<VertexId>::new(), ground, Vec::<(VertexId, VertexId)>::new())
        .expect("edgeless graph is split"))
}

fn candidate_edges(fam: &SetFamily) -> Vec<(VertexId, VertexId)> {
    let ground = fam.ground();
    let without_pair = |a: VertexId, b: VertexId| fam.contains(&ground.without(a).without(b));
    let isolated: BTreeSet<VertexId> = ground
        .iter()
        .filter(|&v| fam.contains(&VertexSet::singleton(v)) && ground.iter().all(|u| u == v || without_pair(v, u)))
        .collect();
    let live: Vec<VertexId> = ground.iter().filter(|v| !isolated.contains(v)).collect();
    let mut edges = Vec::new();
    for (n, &a) in live.iter().enumerate() {
        for &b in &live[n + 1..] {
            if without_pair(a, b) {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// Hammer–Simeone: order vertices by non-increasing degree, take the longest
/// prefix whose `j`-th vertex has degree at least `j − 1` as `K`, and accept
/// iff the degree sums balance.
fn split_partition(ground: &VertexSet, edges: &[(VertexId, VertexId)]) -> Result<SplitGraph> {
    let mut degree: std::collections::BTreeMap<VertexId, usize> = ground.iter().map(|v| (v, 0)).collect();
    for &(a, b) in edges {
        *degree.get_mut(&a).expect("edge inside ground") += 1;
        *degree.get_mut(&b).expect("edge inside ground") += 1;
    }
    let mut order: Vec<(VertexId, usize)> = degree.into_iter().collect();
    order.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
    let m = order
        .iter()
        .enumerate()
        .filter(|(j, &(_, d))| d >= *j)
        .map(|(j, _)| j + 1)
        .max()
        .unwrap_or(0);
    let head: usize = order[..m].iter().map(|&(_, d)| d).sum();
    let tail: usize = order[m..].iter().map(|&(_, d)| d).sum();
    if head != m * m.saturating_sub(1) + tail {
        return Err(Error::NotSplitShelling(
            "the recovered edge set admits no clique/independent partition".into(),
        ));
    }
    let clique: BTreeSet<VertexId> = order[..m].iter().map(|&(v, _)| v).collect();
    let independent: Vec<VertexId> = order[m..].iter().map(|&(v, _)| v).collect();
    let cross: Vec<(VertexId, VertexId)> = edges
        .iter()
        .filter_map(|&(a, b)| match (clique.contains(&a), clique.contains(&b)) {
            (true, false) => Some((a, b)),
            (false, true) => Some((b, a)),
            _ => None,
        })
        .collect();
    let g = SplitGraph::new(clique.into_iter().collect::<Vec<_>>(), independent, cross)?;
    Ok(g.normalize())
}

/// Why a family is not the shelling antimatroid of a split graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Witness {
    NotAnAntimatroid { violation: AxiomViolation },
    /// The edges recovered from the family do not form a split graph.
    NotSplit { edges: Vec<(VertexId, VertexId)> },
    /// `set` is feasible in exactly one of the family and the candidate
    /// graph's antimatroid.
    Mismatch {
        set: VertexSet,
        in_family: bool,
        candidate: SplitGraph,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Recognition {
    Split { graph: SplitGraph },
    NotSplitShelling { witness: Witness },
}

/// Decides whether `fam` is a split-graph shelling antimatroid by rebuilding
/// the candidate graph and comparing its feasible family with `fam`.
pub fn recognize(fam: &SetFamily, force_canonical: bool, limits: &BruteLimits) -> Result<Recognition> {
    if let Err(violation) = verify_antimatroid(fam) {
        return Ok(Recognition::NotSplitShelling {
            witness: Witness::NotAnAntimatroid { violation },
        });
    }
    if fam.is_power_set() {
        return canonical(fam, force_canonical).map(|graph| Recognition::Split { graph });
    }
    let edges = candidate_edges(fam);
    let graph = match split_partition(fam.ground(), &edges) {
        Ok(g) => g,
        Err(Error::NotSplitShelling(_)) => {
            return Ok(Recognition::NotSplitShelling {
                witness: Witness::NotSplit { edges },
            })
        }
        Err(e) => return Err(e),
    };
    let produced = enumerate_feasible_with(&graph, limits)?;
    match first_difference(fam, &produced) {
        None => Ok(Recognition::Split { graph }),
        Some((set, in_family)) => Ok(Recognition::NotSplitShelling {
            witness: Witness::Mismatch {
                set,
                in_family,
                candidate: graph,
            },
        }),
    }
}

/// Smallest set in the symmetric difference, flagged with whether it
/// belongs to `a`.
fn first_difference(a: &SetFamily, b: &SetFamily) -> Option<(VertexSet, bool)> {
    let only_a = a.iter().find(|s| !b.contains(s));
    let only_b = b.iter().find(|s| !a.contains(s));
    match (only_a, only_b) {
        (Some(x), Some(y)) if y < x => Some((y.clone(), false)),
        (Some(x), _) => Some((x.clone(), true)),
        (None, Some(y)) => Some((y.clone(), false)),
        (None, None) => None,
    }
}
