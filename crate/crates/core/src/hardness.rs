//! The edge-cover antimatroid used to transfer independent-set hardness to
//! maximum-weight feasible sets.
//!
//! For a graph `G = (V, E)` the ground set is `A = V ⊎ E` and `F ⊆ A` is
//! feasible iff every edge in `F` has an endpoint in `F`. Vertices weigh
//! `δ − d(v)` and edges weigh 1, so an optimal set has weight `δ · α(G)`.

use std::collections::BTreeSet;

use num_rational::Ratio;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::limits::BruteLimits;
use crate::simple_graph::SimpleGraph;
use crate::vertex::{full_mask, VertexId};

pub type Rational = Ratio<i64>;

/// An element of `V ⊎ E`, indexing the source graph's vertices and its
/// sorted edge list. Vertices order before edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Element {
    Vertex(usize),
    Edge(usize),
}

pub type ElementSet = BTreeSet<Element>;

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionInstance {
    graph: SimpleGraph,
    delta: Rational,
}

/// Parses `delta` from a decimal (`0.1`) or fraction (`1/10`) without
/// rounding.
pub fn parse_delta(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidDelta(text.to_string());
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let (negative, digits) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty()
        || !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
        || frac.len() > 15
    {
        return Err(bad());
    }
    let scale = 10i64.pow(frac.len() as u32);
    let whole: i64 = if whole.is_empty() { 0 } else { whole.parse().map_err(|_| bad())? };
    let frac: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    let value = whole
        .checked_mul(scale)
        .and_then(|w| w.checked_add(frac))
        .ok_or_else(bad)?;
    let value = Rational::new(value, scale);
    Ok(if negative { -value } else { value })
}

/// Exact decimal when the denominator divides a power of ten, else `p/q`.
pub fn format_rational(r: &Rational) -> String {
    let mut den = *r.denom();
    let mut digits = 0u32;
    for p in [2, 5] {
        while den % p == 0 {
            den /= p;
        }
    }
    if den != 1 {
        return r.to_string();
    }
    while 10i64.pow(digits) % r.denom() != 0 {
        digits += 1;
    }
    if digits == 0 {
        return r.numer().to_string();
    }
    let scaled = r.numer() * (10i64.pow(digits) / r.denom());
    let sign = if scaled < 0 { "-" } else { "" };
    let abs = scaled.abs();
    let unit = 10i64.pow(digits);
    let frac = format!("{:0width$}", abs % unit, width = digits as usize);
    format!("{sign}{}.{}", abs / unit, frac.trim_end_matches('0'))
}

pub fn default_delta() -> Rational {
    Rational::new(1, 10)
}

pub fn build_reduction(graph: &SimpleGraph, delta: Rational) -> Result<ReductionInstance> {
    if !delta.is_positive() || delta >= Rational::from_integer(1) {
        return Err(Error::InvalidDelta(format_rational(&delta)));
    }
    Ok(ReductionInstance {
        graph: graph.clone(),
        delta,
    })
}

impl ReductionInstance {
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn delta(&self) -> Rational {
        self.delta
    }

    pub fn len(&self) -> usize {
        self.graph.order() + self.graph.size()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ground(&self) -> ElementSet {
        (0..self.graph.order())
            .map(Element::Vertex)
            .chain((0..self.graph.size()).map(Element::Edge))
            .collect()
    }

    pub fn contains(&self, e: Element) -> bool {
        match e {
            Element::Vertex(v) => v < self.graph.order(),
            Element::Edge(x) => x < self.graph.size(),
        }
    }

    fn check(&self, f: &ElementSet) -> Result<()> {
        match f.iter().find(|e| !self.contains(**e)) {
            Some(e) => Err(Error::UnknownElement(format!("{e:?}"))),
            None => Ok(()),
        }
    }

    pub fn weight(&self, e: Element) -> Rational {
        match e {
            Element::Vertex(v) => self.delta - Rational::from_integer(self.graph.degree(v) as i64),
            Element::Edge(_) => Rational::from_integer(1),
        }
    }

    pub fn total(&self, f: &ElementSet) -> Rational {
        f.iter().map(|&e| self.weight(e)).sum()
    }

    /// `a` for a vertex, `a-b` for an edge.
    pub fn label(&self, e: Element) -> String {
        match e {
            Element::Vertex(v) => self.graph.label(v).to_string(),
            Element::Edge(x) => {
                let (a, b) = self.graph.edges()[x];
                format!("{}-{}", self.graph.label(a), self.graph.label(b))
            }
        }
    }

    /// Inverse of [`label`](Self::label); an edge may be written either way round.
    pub fn element(&self, label: &str) -> Result<Element> {
        if let Some(v) = self.graph.index_of(label) {
            return Ok(Element::Vertex(v));
        }
        let unknown = || Error::UnknownElement(label.to_string());
        let (a, b) = label.split_once('-').ok_or_else(unknown)?;
        let a = self.graph.index_of(a).ok_or_else(unknown)?;
        let b = self.graph.index_of(b).ok_or_else(unknown)?;
        let key = (a.min(b), a.max(b));
        self.graph
            .edges()
            .binary_search(&key)
            .map(Element::Edge)
            .map_err(|_| unknown())
    }

    pub fn format_set(&self, f: &ElementSet) -> String {
        let labels: Vec<String> = f.iter().map(|&e| self.label(e)).collect();
        format!("{{{}}}", labels.join(", "))
    }

    /// Stable id of an element inside [`family`](Self::family): vertices
    /// keep their index, edge `x` becomes `|V| + x`.
    pub fn element_id(&self, e: Element) -> VertexId {
        match e {
            Element::Vertex(v) => VertexId(v as u32),
            Element::Edge(x) => VertexId((self.graph.order() + x) as u32),
        }
    }

    pub fn element_of_id(&self, id: VertexId) -> Element {
        let n = self.graph.order();
        let id = id.0 as usize;
        if id < n {
            Element::Vertex(id)
        } else {
            Element::Edge(id - n)
        }
    }

    /// All feasible sets, over element ids, by brute force.
    pub fn family(&self, limits: &BruteLimits) -> Result<SetFamily> {
        limits.check_enumeration(self.len())?;
        let n = self.graph.order();
        let edges = self.graph.edges();
        let mut sets = Vec::new();
        for mask in 0..=full_mask(self.len()) {
            let ok = edges.iter().enumerate().all(|(x, &(a, b))| {
                mask >> (n + x) & 1 == 0 || mask >> a & 1 == 1 || mask >> b & 1 == 1
            });
            if ok {
                sets.push((0..self.len()).filter(|&b| mask >> b & 1 == 1).map(|b| VertexId(b as u32)).collect());
            }
        }
        SetFamily::new((0..self.len() as u32).collect(), sets)
    }
}

pub fn is_feasible_reduction(inst: &ReductionInstance, f: &ElementSet) -> Result<bool> {
    inst.check(f)?;
    let edges = inst.graph.edges();
    Ok(f.iter().all(|&e| match e {
        Element::Vertex(_) => true,
        Element::Edge(x) => {
            let (a, b) = edges[x];
            f.contains(&Element::Vertex(a)) || f.contains(&Element::Vertex(b))
        }
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub f_prime: ElementSet,
    /// Vertex indices of `V ∩ F'`.
    pub indep: BTreeSet<usize>,
}

/// Repeatedly takes the smallest adjacent pair `(u, v)` inside `F`, drops
/// `u` and the edges at `u` left uncovered, until `V ∩ F` is independent.
/// Each step loses `δ − d(u)` and at most `d(u)` edge weight, so
/// `w(F) ≤ w(F') ≤ δ |V ∩ F'|`.
pub fn extract_independent_set(inst: &ReductionInstance, f: &ElementSet) -> Result<Extraction> {
    if !is_feasible_reduction(inst, f)? {
        return Err(Error::NotFeasibleReduction(inst.format_set(f)));
    }
    let edges = inst.graph.edges();
    let mut current = f.clone();
    while let Some(&(u, _)) = edges
        .iter()
        .find(|&&(a, b)| current.contains(&Element::Vertex(a)) && current.contains(&Element::Vertex(b)))
    {
        current.remove(&Element::Vertex(u));
        for (x, &(a, b)) in edges.iter().enumerate() {
            if a != u && b != u {
                continue;
            }
            let other = if a == u { b } else { a };
            if !current.contains(&Element::Vertex(other)) {
                current.remove(&Element::Edge(x));
            }
        }
    }
    let indep = current
        .iter()
        .filter_map(|e| match e {
            Element::Vertex(v) => Some(*v),
            Element::Edge(_) => None,
        })
        .collect();
    Ok(Extraction { f_prime: current, indep })
}

/// `{v}` for every vertex and `{v, e}` for every edge `e` at `v`.
pub fn reduction_path_poset(inst: &ReductionInstance) -> Vec<ElementSet> {
    let mut paths: Vec<ElementSet> = (0..inst.graph.order())
        .map(|v| ElementSet::from([Element::Vertex(v)]))
        .collect();
    for (x, &(a, b)) in inst.graph.edges().iter().enumerate() {
        for v in [a, b] {
            paths.push(ElementSet::from([Element::Vertex(v), Element::Edge(x)]));
        }
    }
    paths
}

#[derive(Clone, Debug, PartialEq)]
pub struct Optimum {
    pub set: ElementSet,
    pub weight: Rational,
}

/// Exact maximum-weight feasible set. Once the vertex part `S` is fixed,
/// adding every edge with an endpoint in `S` is optimal because edges weigh
/// 1, so only `2^|V|` candidates are scanned. Ties go to the smaller set.
pub fn max_feasible_weight(inst: &ReductionInstance, limits: &BruteLimits) -> Result<Optimum> {
    let n = inst.graph.order();
    limits.check_enumeration(n)?;
    let edges = inst.graph.edges();
    let mut best: Option<Optimum> = None;
    for mask in 0..=full_mask(n) {
        let set: ElementSet = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(Element::Vertex)
            .chain(
                edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b))| mask >> a & 1 == 1 || mask >> b & 1 == 1)
                    .map(|(x, _)| Element::Edge(x)),
            )
            .collect();
        let weight = inst.total(&set);
        let better = match &best {
            None => true,
            Some(b) => weight > b.weight || (weight == b.weight && (set.len(), &set) < (b.set.len(), &b.set)),
        };
        if better {
            best = Some(Optimum { set, weight });
        }
    }
    Ok(best.expect("the empty set is always a candidate"))
}

/// Checks `δ |indep| ≥ w(F)` for an extraction from `f`.
pub fn bound_holds(inst: &ReductionInstance, f: &ElementSet, ex: &Extraction) -> bool {
    let lhs = inst.delta * Rational::from_integer(ex.indep.len() as i64);
    let rhs = inst.total(f);
    lhs >= rhs
}
