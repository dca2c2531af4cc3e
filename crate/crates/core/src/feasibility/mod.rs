//! Feasible sets of the vertex-shelling antimatroid of a split graph.
//!
//! A set `F` is feasible iff its neighborhood `N(F)` induces a clique. The
//! feasible sets split into `*`-feasible sets (`N(F) ⊆ K`) and, for each
//! `i ∈ I`, the `i`-feasible sets (`N(F) ∩ I = {i}`).

mod axioms;
mod convexity;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::limits::BruteLimits;
use crate::split_graph::SplitGraph;
use crate::vertex::{Indexer, VertexId, VertexSet};

pub use axioms::verify_antimatroid;
pub use convexity::{is_m_convex, is_m_convex_in, is_m_convex_in_with, is_m_convex_with};

/// True iff `N(f)` induces a clique in `g`.
pub fn is_feasible(g: &SplitGraph, f: &VertexSet) -> Result<bool> {
    let n = g.neighbors(f)?;
    Ok(g.induces_clique(&n))
}

/// A simplicial elimination order of a feasible set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Shelling(Vec<VertexId>);

impl Shelling {
    pub fn order(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn members(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    /// Checks that each vertex is simplicial once its predecessors are
    /// deleted from `g`.
    pub fn is_simplicial_in(&self, g: &SplitGraph) -> bool {
        let mut removed = VertexSet::new();
        for &v in &self.0 {
            if !g.contains(v) || removed.contains(v) {
                return false;
            }
            let live: VertexSet = g
                .vertices()
                .filter(|w| !removed.contains(*w) && g.adjacent(v, *w))
                .collect();
            if !g.induces_clique(&live) {
                return false;
            }
            removed = removed.with(v);
        }
        true
    }
}

impl fmt::Display for Shelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&ids.join(" "))
    }
}

/// Shelling of a feasible set built from the blocks `F ∩ I`, then
/// `(F ∩ K) ∖ N(I ∖ F)`, then `(F ∩ K) ∩ N(I ∖ F)`, each in increasing id order.
pub fn shelling(g: &SplitGraph, f: &VertexSet) -> Result<Shelling> {
    if !is_feasible(g, f)? {
        return Err(Error::NotFeasible(f.clone()));
    }
    let mut first = Vec::new();
    let mut second = Vec::new();
    let mut third = Vec::new();
    for v in f {
        if g.in_independent(v) {
            first.push(v);
            continue;
        }
        let sees_outside_i = g.cross_neighbors(v)?.iter().any(|i| !f.contains(*i));
        if sees_outside_i {
            third.push(v);
        } else {
            second.push(v);
        }
    }
    first.extend(second);
    first.extend(third);
    Ok(Shelling(first))
}

fn require_independent(g: &SplitGraph, i: VertexId) -> Result<()> {
    if !g.contains(i) {
        Err(Error::UnknownVertex(i))
    } else if !g.in_independent(i) {
        Err(Error::NotIndependentVertex(i))
    } else {
        Ok(())
    }
}

/// Forced set of `i ∈ I`: the clique vertices not adjacent to `i`, plus the
/// independent vertices whose neighborhood is not inside `N(i)`. Every
/// `i`-feasible set contains it.
pub fn fos(g: &SplitGraph, i: VertexId) -> Result<VertexSet> {
    require_independent(g, i)?;
    let ni = g.cross_neighbors(i)?;
    let mut out: Vec<VertexId> = g.clique().iter().copied().filter(|k| !ni.contains(k)).collect();
    for &j in g.independent() {
        if !g.cross_neighbors(j)?.is_subset(ni) {
            out.push(j);
        }
    }
    Ok(out.into_iter().collect())
}

/// Unforced set of `i ∈ I`: everything except `i` and `fos(i)`.
pub fn ufs(g: &SplitGraph, i: VertexId) -> Result<VertexSet> {
    require_independent(g, i)?;
    let ni = g.cross_neighbors(i)?;
    let mut out: Vec<VertexId> = ni.iter().copied().collect();
    for &j in g.independent() {
        if j != i && g.cross_neighbors(j)?.is_subset(ni) {
            out.push(j);
        }
    }
    Ok(out.into_iter().collect())
}

/// Which block of the feasible-set decomposition a set belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "i", rename_all = "snake_case")]
pub enum FeasibleClass {
    /// `N(F) ⊆ K`.
    Star,
    /// `N(F) ∩ I = {i}`.
    IFeasible(VertexId),
}

impl fmt::Display for FeasibleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FeasibleClass::Star => f.write_str("Star"),
            FeasibleClass::IFeasible(i) => write!(f, "IFeasible({i})"),
        }
    }
}

pub fn classify(g: &SplitGraph, f: &VertexSet) -> Result<FeasibleClass> {
    let n = g.neighbors(f)?;
    if !g.induces_clique(&n) {
        return Err(Error::NotFeasible(f.clone()));
    }
    let class = match n.iter().find(|v| g.in_independent(*v)) {
        Some(i) => FeasibleClass::IFeasible(i),
        None => FeasibleClass::Star,
    };
    Ok(class)
}

/// All feasible sets, by brute force over `2^V` with the default bound.
pub fn enumerate_feasible(g: &SplitGraph) -> Result<SetFamily> {
    enumerate_feasible_with(g, &BruteLimits::default())
}

pub fn enumerate_feasible_with(g: &SplitGraph, limits: &BruteLimits) -> Result<SetFamily> {
    limits.check_enumeration(g.order())?;
    let ground = g.vertex_set();
    let ix = Indexer::new(&ground);
    let adj = g.adjacency_masks(&ix);
    let mut sets: Vec<VertexSet> = (0..=ix.full())
        .filter(|&m| feasible_mask(&adj, m))
        .map(|m| ix.set(m))
        .collect();
    sets.sort();
    Ok(SetFamily::from_sorted_unchecked(ground, sets))
}

/// The `N(F)`-is-a-clique test on bitmasks.
pub(crate) fn feasible_mask(adj: &[u64], f: u64) -> bool {
    let mut n = 0u64;
    let mut rest = f;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        n |= adj[v];
        rest &= rest - 1;
    }
    n &= !f;
    let mut rest = n;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        if n & !(adj[u] | 1 << u) != 0 {
            return false;
        }
        rest &= rest - 1;
    }
    true
}
