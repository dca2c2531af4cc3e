//! Monophonic convexity: a set is m-convex when every chordless path
//! joining two of its members stays inside it.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::limits::BruteLimits;
use crate::simple_graph::SimpleGraph;
use crate::split_graph::SplitGraph;
use crate::vertex::{Indexer, VertexSet};

pub fn is_m_convex(g: &SplitGraph, c: &VertexSet) -> Result<bool> {
    is_m_convex_with(g, c, &BruteLimits::default())
}

pub fn is_m_convex_with(g: &SplitGraph, c: &VertexSet, limits: &BruteLimits) -> Result<bool> {
    g.check_subset(c)?;
    limits.check_chordless(g.order())?;
    let ix = Indexer::new(&g.vertex_set());
    let adj = g.adjacency_masks(&ix);
    Ok(m_convex_masks(&adj, ix.mask(c).expect("checked subset")))
}

/// Same test on an arbitrary graph, `c` given as vertex indices.
pub fn is_m_convex_in(g: &SimpleGraph, c: &BTreeSet<usize>) -> Result<bool> {
    is_m_convex_in_with(g, c, &BruteLimits::default())
}

pub fn is_m_convex_in_with(g: &SimpleGraph, c: &BTreeSet<usize>, limits: &BruteLimits) -> Result<bool> {
    limits.check_chordless(g.order())?;
    if let Some(&v) = c.iter().find(|&&v| v >= g.order()) {
        return Err(Error::UnknownElement(v.to_string()));
    }
    let mask = c.iter().fold(0u64, |m, &v| m | 1 << v);
    Ok(m_convex_masks(&g.adjacency_masks(), mask))
}

/// Searches for a chordless path `u, x1, .., xm, v` with `u, v ∈ c`, `m ≥ 1`
/// and every `xj ∉ c`. Any chordless path between members of `c` that leaves
/// `c` contains such a segment, so paths never need to continue through `c`.
fn m_convex_masks(adj: &[u64], c: u64) -> bool {
    let mut rest = c;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        if escapes(adj, c, u, 1 << u, 0, false) {
            return false;
        }
        rest &= rest - 1;
    }
    true
}

/// `blocked` holds the closed neighborhoods of every path vertex before
/// `last`; a next vertex there would create a chord.
fn escapes(adj: &[u64], c: u64, last: usize, on: u64, blocked: u64, left_c: bool) -> bool {
    let mut cands = adj[last] & !on & !blocked;
    while cands != 0 {
        let w = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        if c >> w & 1 == 1 {
            if left_c {
                return true;
            }
            continue;
        }
        let next_blocked = blocked | adj[last] | 1 << last;
        if escapes(adj, c, w, on | 1 << w, next_blocked, true) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> SplitGraph {
        SplitGraph::new([1u32, 2, 3], [4, 5, 6], [(1, 4), (1, 5), (2, 5), (2, 6), (3, 6)]).unwrap()
    }

    #[test]
    fn trivial_sets_are_convex() {
        let g = example();
        assert!(is_m_convex(&g, &g.vertex_set()).unwrap());
        assert!(is_m_convex(&g, &VertexSet::new()).unwrap());
        for v in g.vertices() {
            assert!(is_m_convex(&g, &VertexSet::singleton(v)).unwrap());
        }
    }

    #[test]
    fn complement_of_feasible_set_is_convex() {
        let g = example();
        assert!(is_m_convex(&g, &VertexSet::from([1, 4, 5])).unwrap());
    }

    #[test]
    fn detects_escaping_path() {
        // 4 - 1 - 2 - 6 is chordless and leaves {4, 6}.
        let g = example();
        assert!(!is_m_convex(&g, &VertexSet::from([4, 6])).unwrap());
        assert!(is_m_convex(&g, &VertexSet::from([7])).is_err());
    }

    #[test]
    fn path_graph() {
        let p = SimpleGraph::with_vertices(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!is_m_convex_in(&p, &BTreeSet::from([0, 3])).unwrap());
        assert!(is_m_convex_in(&p, &BTreeSet::from([0, 1, 2, 3])).unwrap());
        assert!(is_m_convex_in(&p, &BTreeSet::from([1, 2])).unwrap());
        assert!(is_m_convex_in(&p, &BTreeSet::from([9])).is_err());
    }

    #[test]
    fn chorded_cycle() {
        // Square 0-1-2-3 with chord 0-2: path 1-0-3 is chordless, 1-2-3 too.
        let g = SimpleGraph::with_vertices(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(!is_m_convex_in(&g, &BTreeSet::from([1, 3, 0])).unwrap());
        assert!(is_m_convex_in(&g, &BTreeSet::from([0, 1, 2])).unwrap());
    }

    #[test]
    fn limit_is_enforced() {
        let g = example();
        let err = is_m_convex_with(&g, &VertexSet::new(), &BruteLimits::uniform(3)).unwrap_err();
        assert_eq!(err, Error::GroundSetTooLarge { size: 6, limit: 3 });
    }
}
