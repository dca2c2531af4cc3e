//! Set families over a common ground set and their text format.
//!
//! The text format holds one set per line with space separated ids; the empty
//! set is spelled `-`. Blank lines and `#` comments are ignored. The ground set
//! is not written: a parsed family takes the union of its members as ground,
//! which is exact for antimatroids since they contain their ground set.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex::{Indexer, VertexSet};

/// A duplicate-free family of vertex sets, kept in canonical (size, lex) order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFamily")]
pub struct SetFamily {
    ground: VertexSet,
    sets: Vec<VertexSet>,
}

#[derive(Deserialize)]
struct RawFamily {
    ground: VertexSet,
    sets: Vec<VertexSet>,
}

impl TryFrom<RawFamily> for SetFamily {
    type Error = Error;

    fn try_from(raw: RawFamily) -> Result<Self> {
        SetFamily::new(raw.ground, raw.sets)
    }
}

impl SetFamily {
    /// Builds a family over an explicit ground set. Members are deduplicated
    /// and sorted; a member leaving the ground set is an error.
    pub fn new<I>(ground: VertexSet, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let mut sets: Vec<VertexSet> = sets.into_iter().collect();
        for s in &sets {
            if let Some(v) = s.iter().find(|v| !ground.contains(*v)) {
                return Err(Error::UnknownVertex(v));
            }
        }
        sets.sort();
        sets.dedup();
        Ok(SetFamily { ground, sets })
    }

    /// Builds a family whose ground set is the union of its members.
    pub fn from_sets<I>(sets: I) -> Self
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let sets: Vec<VertexSet> = sets.into_iter().collect();
        let ground = sets
            .iter()
            .flat_map(|s| s.iter())
            .collect::<VertexSet>();
        SetFamily::new(ground, sets).expect("members lie in their union")
    }

    pub(crate) fn from_sorted_unchecked(ground: VertexSet, sets: Vec<VertexSet>) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        SetFamily { ground, sets }
    }

    /// The full power set of `ground`.
    pub fn power_set(ground: &VertexSet) -> Result<Self> {
        if ground.len() >= Indexer::MAX_BITS {
            return Err(Error::GroundSetTooLarge {
                size: ground.len(),
                limit: Indexer::MAX_BITS - 1,
            });
        }
        let ix = Indexer::new(ground);
        let mut sets: Vec<VertexSet> = (0..=ix.full()).map(|m| ix.set(m)).collect();
        sets.sort();
        Ok(SetFamily::from_sorted_unchecked(ground.clone(), sets))
    }

    pub fn ground(&self) -> &VertexSet {
        &self.ground
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.sets.iter()
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.sets.binary_search(s).is_ok()
    }

    /// True when the family is all of `2^ground`.
    pub fn is_power_set(&self) -> bool {
        self.ground.len() < Indexer::MAX_BITS && self.sets.len() as u128 == 1u128 << self.ground.len()
    }

    /// Members encoded as bitmasks over the ground set, when it is small enough.
    pub(crate) fn masks(&self) -> Option<(Indexer, Vec<u64>)> {
        if self.ground.len() > Indexer::MAX_BITS {
            return None;
        }
        let ix = Indexer::new(&self.ground);
        let masks = self
            .sets
            .iter()
            .map(|s| ix.mask(s).expect("members lie in the ground set"))
            .collect();
        Some((ix, masks))
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sets {
            writeln!(f, "{}", s.to_tokens())?;
        }
        Ok(())
    }
}

impl FromStr for SetFamily {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut sets = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let set = VertexSet::parse_tokens(line.split_whitespace())
                .map_err(|m| Error::parse(n + 1, m))?;
            sets.push(set);
        }
        Ok(SetFamily::from_sets(sets))
    }
}

/// First antimatroid axiom found violated, with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// AM0: the ground set is not a member.
    MissingGround { ground: VertexSet },
    /// AM1: the union of two members is missing.
    NotUnionClosed { left: VertexSet, right: VertexSet },
    /// AM2: a nonempty member has no element whose removal stays feasible.
    NotAccessible { set: VertexSet },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::MissingGround { ground } => {
                write!(f, "AM0 violated: ground set {ground} is not a member")
            }
            AxiomViolation::NotUnionClosed { left, right } => {
                write!(f, "AM1 violated: union of {left} and {right} is not a member")
            }
            AxiomViolation::NotAccessible { set } => {
                write!(f, "AM2 violated: no element of {set} can be removed")
            }
        }
    }
}
