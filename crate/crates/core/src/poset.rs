//! Height-two posets and their filters.
//!
//! The relation is stored as explicit pairs `u ≺ v`. Because no element is
//! both below and above something, the pairs are already the full strict
//! order and filter checks need no transitive closure.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::limits::BruteLimits;
use crate::split_graph::SplitGraph;
use crate::vertex::{Indexer, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poset {
    ground: VertexSet,
    covers: BTreeSet<(VertexId, VertexId)>,
}

/// An upward-closed subset of a poset.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Filter(VertexSet);

impl Filter {
    pub(crate) fn new_unchecked(members: VertexSet) -> Self {
        Filter(members)
    }

    pub fn members(&self) -> &VertexSet {
        &self.0
    }

    pub fn into_members(self) -> VertexSet {
        self.0
    }
}

impl Poset {
    /// Validates that every pair lies in `ground`, the relation is
    /// irreflexive, and no element is both below and above another.
    pub fn new<I>(ground: VertexSet, covers: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let covers: BTreeSet<_> = covers.into_iter().collect();
        let lower: BTreeSet<_> = covers.iter().map(|&(u, _)| u).collect();
        for &(u, v) in &covers {
            for w in [u, v] {
                if !ground.contains(w) {
                    return Err(Error::UnknownVertex(w));
                }
            }
            if u == v || lower.contains(&v) {
                return Err(Error::InvalidRelation(u, v));
            }
        }
        Ok(Poset { ground, covers })
    }

    pub fn ground(&self) -> &VertexSet {
        &self.ground
    }

    pub fn covers(&self) -> &BTreeSet<(VertexId, VertexId)> {
        &self.covers
    }

    pub fn precedes(&self, u: VertexId, v: VertexId) -> bool {
        self.covers.contains(&(u, v))
    }

    fn check_subset(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|v| !self.ground.contains(*v)) {
            Some(v) => Err(Error::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    /// Elements strictly above `u`.
    pub fn up_set(&self, u: VertexId) -> VertexSet {
        self.covers
            .range((u, VertexId(0))..=(u, VertexId(u32::MAX)))
            .map(|&(_, v)| v)
            .collect()
    }

    /// The smallest filter containing `s`.
    pub fn upward_closure(&self, s: &VertexSet) -> Result<Filter> {
        self.check_subset(s)?;
        let mut out = s.clone();
        for u in s {
            out = out.union(&self.up_set(u));
        }
        Ok(Filter(out))
    }

    /// Induced subposet on `s`.
    pub fn restrict(&self, s: &VertexSet) -> Result<Poset> {
        self.check_subset(s)?;
        let covers = self
            .covers
            .iter()
            .filter(|(u, v)| s.contains(*u) && s.contains(*v))
            .copied()
            .collect();
        Ok(Poset {
            ground: s.clone(),
            covers,
        })
    }

    pub fn is_filter(&self, s: &VertexSet) -> Result<bool> {
        self.check_subset(s)?;
        Ok(self
            .covers
            .iter()
            .all(|&(u, v)| !s.contains(u) || s.contains(v)))
    }

    /// Wraps `s` as a [`Filter`] after checking it.
    pub fn filter(&self, s: VertexSet) -> Result<Option<Filter>> {
        Ok(self.is_filter(&s)?.then_some(Filter(s)))
    }

    /// All filters in canonical order, with the default brute-force bound.
    pub fn enumerate_filters(&self) -> Result<SetFamily> {
        self.enumerate_filters_with(&BruteLimits::default())
    }

    /// Scans every subset `T` of the non-lower elements, then every subset
    /// of the lower elements whose up-sets lie inside `T`.
    pub fn enumerate_filters_with(&self, limits: &BruteLimits) -> Result<SetFamily> {
        limits.check_enumeration(self.ground.len())?;
        let ix = Indexer::new(&self.ground);
        let mut up: BTreeMap<VertexId, u64> = BTreeMap::new();
        for &(u, v) in &self.covers {
            *up.entry(u).or_default() |= ix.bit(v).expect("validated");
        }
        let lower: Vec<(u64, u64)> = up
            .iter()
            .map(|(&u, &above)| (ix.bit(u).expect("validated"), above))
            .collect();
        let lower_mask = lower.iter().fold(0u64, |m, &(b, _)| m | b);
        let upper_mask = ix.full() & !lower_mask;

        let mut sets = Vec::new();
        for_each_submask(upper_mask, |top| {
            let allowed = lower
                .iter()
                .filter(|&&(_, above)| above & !top == 0)
                .fold(0u64, |m, &(b, _)| m | b);
            for_each_submask(allowed, |bottom| sets.push(ix.set(top | bottom)));
        });
        sets.sort();
        Ok(SetFamily::from_sorted_unchecked(self.ground.clone(), sets))
    }
}

fn for_each_submask(mask: u64, mut f: impl FnMut(u64)) {
    let mut sub = mask;
    loop {
        f(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
}

/// `k ≺ i` iff `k ∈ K`, `i ∈ I` and `k ∼ i`: the cross edges oriented from
/// `K` to `I`.
pub fn build_prec(g: &SplitGraph) -> Poset {
    Poset {
        ground: g.vertex_set(),
        covers: g.cross_edges().iter().copied().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> SplitGraph {
        SplitGraph::new([1u32, 2, 3], [4, 5, 6], [(1, 4), (1, 5), (2, 5), (2, 6), (3, 6)]).unwrap()
    }

    fn set<const N: usize>(ids: [u32; N]) -> VertexSet {
        VertexSet::from(ids)
    }

    fn pair(a: u32, b: u32) -> (VertexId, VertexId) {
        (VertexId(a), VertexId(b))
    }

    fn brute_force_filters(p: &Poset) -> Vec<VertexSet> {
        let ix = Indexer::new(p.ground());
        let mut out: Vec<_> = (0..=ix.full())
            .map(|m| ix.set(m))
            .filter(|s| p.is_filter(s).unwrap())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn build_prec_examples() {
        let p = build_prec(&example());
        let expected: BTreeSet<_> = [pair(1, 4), pair(1, 5), pair(2, 5), pair(2, 6), pair(3, 6)].into();
        assert_eq!(p.covers(), &expected);

        let antichain = build_prec(&SplitGraph::new([1u32], [2], Vec::<(u32, u32)>::new()).unwrap());
        assert!(antichain.covers().is_empty());

        let single = build_prec(&SplitGraph::new([1u32], [2], [(1, 2)]).unwrap());
        assert_eq!(single.covers(), &BTreeSet::from([pair(1, 2)]));
    }

    #[test]
    fn restrict_examples() {
        let p = build_prec(&example());
        let r = p.restrict(&set([1, 2, 4])).unwrap();
        assert_eq!(r.covers(), &BTreeSet::from([pair(1, 4)]));
        assert!(p.restrict(&VertexSet::new()).unwrap().covers().is_empty());
        assert_eq!(p.restrict(p.ground()).unwrap(), p);
        assert_eq!(p.restrict(&set([9])).unwrap_err(), Error::UnknownVertex(VertexId(9)));
    }

    #[test]
    fn filter_examples() {
        let p = build_prec(&example());
        assert!(p.is_filter(&set([4, 5, 6])).unwrap());
        assert!(!p.is_filter(&set([1])).unwrap());
        assert!(p.is_filter(&VertexSet::new()).unwrap());
        assert_eq!(p.upward_closure(&set([1])).unwrap().members(), &set([1, 4, 5]));
    }

    #[test]
    fn enumerate_examples() {
        let p = build_prec(&example());
        let filters = p.enumerate_filters().unwrap();
        assert_eq!(filters.len(), 21);
        assert_eq!(filters.sets(), brute_force_filters(&p).as_slice());

        let antichain = Poset::new(set([1, 2, 3, 4]), []).unwrap();
        assert_eq!(antichain.enumerate_filters().unwrap().len(), 16);

        let chain = Poset::new(set([1, 2]), [pair(1, 2)]).unwrap();
        assert_eq!(
            chain.enumerate_filters().unwrap().sets(),
            &[VertexSet::new(), set([2]), set([1, 2])]
        );
    }

    #[test]
    fn rejects_invalid_relations() {
        assert_eq!(
            Poset::new(set([1]), [pair(1, 1)]).unwrap_err(),
            Error::InvalidRelation(VertexId(1), VertexId(1))
        );
        assert_eq!(
            Poset::new(set([1, 2, 3]), [pair(1, 2), pair(2, 3)]).unwrap_err(),
            Error::InvalidRelation(VertexId(1), VertexId(2))
        );
        assert_eq!(
            Poset::new(set([1]), [pair(1, 5)]).unwrap_err(),
            Error::UnknownVertex(VertexId(5))
        );
    }
}
