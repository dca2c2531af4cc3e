use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::split_graph::SplitGraph;
use crate::vertex::{VertexId, VertexSet};

/// Vertex weights. Vertices without an entry weigh 0.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<VertexId, f64>", into = "BTreeMap<VertexId, f64>")]
pub struct WeightFn(BTreeMap<VertexId, f64>);

impl WeightFn {
    pub fn new(weights: BTreeMap<VertexId, f64>) -> Result<Self> {
        if let Some((&v, _)) = weights.iter().find(|(_, w)| !w.is_finite()) {
            return Err(Error::InvalidWeight(v));
        }
        Ok(WeightFn(weights))
    }

    pub fn from_pairs<V, I>(pairs: I) -> Result<Self>
    where
        V: Into<VertexId>,
        I: IntoIterator<Item = (V, f64)>,
    {
        Self::new(pairs.into_iter().map(|(v, w)| (v.into(), w)).collect())
    }

    pub fn get(&self, v: VertexId) -> f64 {
        self.0.get(&v).copied().unwrap_or(0.0)
    }

    /// `w(s)`, summed in increasing vertex order. The empty sum is `+0`.
    pub fn total(&self, s: &VertexSet) -> f64 {
        s.iter().map(|v| self.get(v)).fold(0.0, |acc, x| acc + x)
    }

    pub fn negated(&self) -> WeightFn {
        WeightFn(self.0.iter().map(|(&v, &w)| (v, -w)).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, f64)> + '_ {
        self.0.iter().map(|(&v, &w)| (v, w))
    }

    /// Checks every weighted vertex belongs to `g` and returns the vertices
    /// of `g` that have no entry.
    pub fn missing_in(&self, g: &SplitGraph) -> Result<Vec<VertexId>> {
        if let Some(&v) = self.0.keys().find(|v| !g.contains(**v)) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(g.vertices().filter(|v| !self.0.contains_key(v)).collect())
    }
}

impl TryFrom<BTreeMap<VertexId, f64>> for WeightFn {
    type Error = Error;

    fn try_from(map: BTreeMap<VertexId, f64>) -> Result<Self> {
        Self::new(map)
    }
}

impl From<WeightFn> for BTreeMap<VertexId, f64> {
    fn from(w: WeightFn) -> Self {
        w.0
    }
}

/// One `vertex weight` pair per line; `#` starts a comment.
impl FromStr for WeightFn {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut weights = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let [v, w] = tokens[..] else {
                return Err(Error::parse(n + 1, "expected `vertex weight`"));
            };
            let v: VertexId = v
                .parse()
                .map_err(|_| Error::parse(n + 1, format!("invalid vertex id `{v}`")))?;
            let w: f64 = w
                .parse()
                .ok()
                .filter(|w: &f64| w.is_finite())
                .ok_or_else(|| Error::parse(n + 1, format!("invalid weight `{w}`")))?;
            if weights.insert(v, w).is_some() {
                return Err(Error::parse(n + 1, format!("vertex {v} is weighted twice")));
            }
        }
        Ok(WeightFn(weights))
    }
}

impl fmt::Display for WeightFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, w) in &self.0 {
            writeln!(f, "{v} {w}")?;
        }
        Ok(())
    }
}
