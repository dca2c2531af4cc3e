use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Externally supplied vertex label. Ids are never renumbered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

impl FromStr for VertexId {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse().map(VertexId)
    }
}

/// An immutable set of vertices.
///
/// The total order on sets is the canonical output order used everywhere in
/// the crate: first by cardinality, then lexicographically on the increasing
/// id sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet(BTreeSet::from([v]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = VertexId> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn as_btree(&self) -> &BTreeSet<VertexId> {
        &self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn with(&self, v: VertexId) -> VertexSet {
        let mut s = self.0.clone();
        s.insert(v);
        VertexSet(s)
    }

    pub fn without(&self, v: VertexId) -> VertexSet {
        let mut s = self.0.clone();
        s.remove(&v);
        VertexSet(s)
    }

    pub fn first(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    /// Space separated ids, `-` for the empty set.
    pub fn to_tokens(&self) -> String {
        if self.is_empty() {
            return "-".to_string();
        }
        self.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    }

    /// Inverse of [`VertexSet::to_tokens`].
    pub fn parse_tokens<'a, I>(tokens: I) -> Result<VertexSet, String>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let tokens: Vec<&str> = tokens.into_iter().collect();
        if tokens == ["-"] {
            return Ok(VertexSet::new());
        }
        let mut set = BTreeSet::new();
        for t in tokens {
            let v: VertexId = t.parse().map_err(|_| format!("invalid vertex id `{t}`"))?;
            if !set.insert(v) {
                return Err(format!("vertex {v} repeated"));
            }
        }
        Ok(VertexSet(set))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, v) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        VertexSet(iter.into_iter().map(VertexId).collect())
    }
}

impl<const N: usize> From<[u32; N]> for VertexSet {
    fn from(ids: [u32; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl From<BTreeSet<VertexId>> for VertexSet {
    fn from(s: BTreeSet<VertexId>) -> Self {
        VertexSet(s)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, VertexId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Dense bit positions for a small ground set, used by the brute-force
/// enumerators. Bit `n` stands for the `n`-th smallest id.
#[derive(Clone, Debug)]
pub(crate) struct Indexer {
    ids: Vec<VertexId>,
}

impl Indexer {
    pub(crate) const MAX_BITS: usize = 64;

    pub(crate) fn new(ground: &VertexSet) -> Self {
        debug_assert!(ground.len() <= Self::MAX_BITS);
        Indexer {
            ids: ground.iter().collect(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.ids.len()
    }

    pub(crate) fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub(crate) fn bit(&self, v: VertexId) -> Option<u64> {
        self.ids.binary_search(&v).ok().map(|n| 1u64 << n)
    }

    pub(crate) fn mask(&self, s: &VertexSet) -> Option<u64> {
        s.iter().try_fold(0u64, |m, v| self.bit(v).map(|b| m | b))
    }

    pub(crate) fn set(&self, mut mask: u64) -> VertexSet {
        let mut s = BTreeSet::new();
        while mask != 0 {
            let n = mask.trailing_zeros() as usize;
            s.insert(self.ids[n]);
            mask &= mask - 1;
        }
        VertexSet(s)
    }

    pub(crate) fn full(&self) -> u64 {
        full_mask(self.ids.len())
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
