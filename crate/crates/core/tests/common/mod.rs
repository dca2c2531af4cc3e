//! Independent oracles and instance generators shared by the integration
//! tests and the acceptance suite. Nothing here calls the library's own
//! feasibility or structure code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use antikit::structure::CircuitClass;
use antikit::{SplitGraph, VertexId, VertexSet};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn example() -> SplitGraph {
    SplitGraph::new([1u32, 2, 3], [4, 5, 6], [(1, 4), (1, 5), (2, 5), (2, 6), (3, 6)]).unwrap()
}

pub fn set<const N: usize>(ids: [u32; N]) -> VertexSet {
    VertexSet::from(ids)
}

/// Split graph on `1..=n` with `n` uniform in `1..=max_n`, a random side
/// for each vertex, shuffled ids, and cross edges drawn with a random
/// density.
pub fn random_split_graph(rng: &mut ChaCha8Rng, max_n: usize) -> SplitGraph {
    let n = rng.gen_range(1..=max_n);
    let mut ids: Vec<u32> = (1..=n as u32).collect();
    ids.shuffle(rng);
    let k = rng.gen_range(0..=n);
    let (clique, independent) = ids.split_at(k);
    let density: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for &a in clique {
        for &b in independent {
            if rng.gen_bool(density) {
                edges.push((a, b));
            }
        }
    }
    SplitGraph::new(clique.to_vec(), independent.to_vec(), edges).unwrap()
}

pub fn random_normalized_split_graph(rng: &mut ChaCha8Rng, max_n: usize) -> SplitGraph {
    random_split_graph(rng, max_n).normalize()
}

/// Proptest strategy: `K = 1..=k`, `I = k+1..=k+i`, any cross-edge subset.
pub fn split_graph_strategy(max_k: usize, max_i: usize) -> impl Strategy<Value = SplitGraph> {
    (0..=max_k, 0..=max_i)
        .prop_filter("nonempty", |(k, i)| k + i > 0)
        .prop_flat_map(|(k, i)| (Just(k), Just(i), proptest::collection::vec(any::<bool>(), k * i)))
        .prop_map(|(k, i, bits)| {
            let clique: Vec<u32> = (1..=k as u32).collect();
            let independent: Vec<u32> = (k as u32 + 1..=(k + i) as u32).collect();
            let mut edges = Vec::new();
            for (a, &kv) in clique.iter().enumerate() {
                for (b, &iv) in independent.iter().enumerate() {
                    if bits[a * i + b] {
                        edges.push((kv, iv));
                    }
                }
            }
            SplitGraph::new(clique, independent, edges).unwrap()
        })
}

/// Bitmask view of a split graph built from its edge list.
pub struct Masks {
    pub ids: Vec<VertexId>,
    pub adj: Vec<u64>,
    pub clique: u64,
}

impl Masks {
    pub fn new(g: &SplitGraph) -> Self {
        let ids: Vec<VertexId> = g.vertex_set().iter().collect();
        let pos: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(p, &v)| (v, p)).collect();
        let mut adj = vec![0u64; ids.len()];
        for (a, b) in g.edges() {
            adj[pos[&a]] |= 1 << pos[&b];
            adj[pos[&b]] |= 1 << pos[&a];
        }
        let clique = g.clique().iter().fold(0, |m, k| m | 1 << pos[k]);
        Masks { ids, adj, clique }
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn full(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1 << self.n()) - 1
        }
    }

    pub fn set(&self, mask: u64) -> VertexSet {
        (0..self.n()).filter(|&b| mask >> b & 1 == 1).map(|b| self.ids[b]).collect()
    }

    pub fn mask(&self, s: &VertexSet) -> u64 {
        s.iter()
            .map(|v| 1u64 << self.ids.binary_search(&v).unwrap())
            .fold(0, |m, b| m | b)
    }

    pub fn neighborhood(&self, f: u64) -> u64 {
        let mut n = 0;
        for b in 0..self.n() {
            if f >> b & 1 == 1 {
                n |= self.adj[b];
            }
        }
        n & !f
    }

    pub fn is_clique(&self, s: u64) -> bool {
        (0..self.n())
            .filter(|&b| s >> b & 1 == 1)
            .all(|b| s & !(1 << b) & !self.adj[b] == 0)
    }

    /// `N(F)` induces a clique.
    pub fn feasible(&self, f: u64) -> bool {
        self.is_clique(self.neighborhood(f))
    }

    pub fn feasible_masks(&self) -> Vec<u64> {
        (0..=self.full()).filter(|&m| self.feasible(m)).collect()
    }

    /// `None` for Star sets, else the unique independent vertex of `N(F)`.
    pub fn class_of(&self, f: u64) -> Option<VertexId> {
        let outside = self.neighborhood(f) & !self.clique;
        (outside != 0).then(|| self.ids[outside.trailing_zeros() as usize])
    }

    pub fn is_isolated(&self, b: usize) -> bool {
        self.adj[b] == 0
    }
}

/// Feasible family in canonical (size, lexicographic) order.
pub fn oracle_family(g: &SplitGraph) -> Vec<VertexSet> {
    let m = Masks::new(g);
    let mut sets: Vec<VertexSet> = m.feasible_masks().into_iter().map(|f| m.set(f)).collect();
    sets.sort();
    sets
}

/// Each vertex, once its predecessors are deleted, has a clique
/// neighborhood.
pub fn is_shelling(g: &SplitGraph, order: &[VertexId]) -> bool {
    let m = Masks::new(g);
    let mut alive = m.full();
    let mut seen = BTreeSet::new();
    for v in order {
        let Ok(b) = m.ids.binary_search(v) else { return false };
        if !seen.insert(b) {
            return false;
        }
        if !m.is_clique(m.adj[b] & alive) {
            return false;
        }
        alive &= !(1 << b);
    }
    true
}

/// Nonempty feasible sets that are not the union of two proper feasible
/// subsets. In a union-closed family that holds exactly when the proper
/// feasible subsets do not already cover the set.
pub fn oracle_paths(g: &SplitGraph) -> Vec<VertexSet> {
    let m = Masks::new(g);
    let feasible: BTreeSet<u64> = m.feasible_masks().into_iter().collect();
    let mut out = Vec::new();
    for &f in &feasible {
        if f == 0 {
            continue;
        }
        let mut covered = 0;
        let mut sub = (f - 1) & f;
        loop {
            if feasible.contains(&sub) {
                covered |= sub;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & f;
        }
        if covered != f {
            out.push(m.set(f));
        }
    }
    out.sort();
    out
}

/// Distinct traces `F ∩ x` over the feasible family, as masks.
pub struct TraceCounter {
    family: Vec<u64>,
    stamp: Vec<u32>,
    round: u32,
}

impl TraceCounter {
    pub fn new(m: &Masks) -> Self {
        TraceCounter {
            family: m.feasible_masks(),
            stamp: vec![0; 1 << m.n()],
            round: 0,
        }
    }

    /// Number of distinct traces on `x`, and which singletons of `x` occur.
    pub fn trace(&mut self, x: u64) -> (usize, u64) {
        self.round += 1;
        let mut count = 0;
        let mut singletons = 0;
        for &f in &self.family {
            let t = f & x;
            if self.stamp[t as usize] != self.round {
                self.stamp[t as usize] = self.round;
                count += 1;
                if t.count_ones() == 1 {
                    singletons |= t;
                }
            }
        }
        (count, singletons)
    }

    pub fn is_free(&mut self, x: u64) -> bool {
        self.trace(x).0 == 1 << x.count_ones()
    }

    /// Root of `x` when the trace is `2^x ∖ {{r}}`.
    pub fn circuit_root(&mut self, x: u64) -> Option<u64> {
        let (count, singletons) = self.trace(x);
        let missing = x & !singletons;
        (count + 1 == 1 << x.count_ones() && missing.count_ones() == 1).then_some(missing)
    }
}

/// Every rooted circuit `(C ∖ {r}, r)` from the trace characterization.
pub fn oracle_circuits(g: &SplitGraph) -> BTreeSet<(VertexId, VertexSet)> {
    let m = Masks::new(g);
    let mut tc = TraceCounter::new(&m);
    let mut out = BTreeSet::new();
    for c in 1..=m.full() {
        if let Some(r) = tc.circuit_root(c) {
            let root = m.ids[r.trailing_zeros() as usize];
            out.insert((root, m.set(c & !r)));
        }
    }
    out
}

/// Lowest circuit class whose defining condition holds for `(support, root)`.
pub fn expected_class(g: &SplitGraph, support: &VertexSet, root: VertexId) -> Option<CircuitClass> {
    if !g.in_clique(root) {
        return None;
    }
    let nk = g.neighbors_of(root).unwrap();
    let k = g.clique_set();
    let v: Vec<VertexId> = support.iter().collect();
    let (a, b) = (v[0], v[1]);
    let in_ni = |x: VertexId| g.in_independent(x) && nk.contains(x);
    let mut classes = Vec::new();
    if in_ni(a) && in_ni(b) {
        classes.push(CircuitClass::C1);
    }
    for (i, other) in [(a, b), (b, a)] {
        if !in_ni(i) {
            continue;
        }
        let ni = g.neighbors_of(i).unwrap();
        if g.in_clique(other) && other != root && !ni.contains(other) {
            classes.push(CircuitClass::C2);
        }
        if g.in_independent(other) && !nk.contains(other) {
            let no = g.neighbors_of(other).unwrap();
            if k.iter().any(|m| no.contains(m) && !ni.contains(m)) {
                classes.push(CircuitClass::C3);
            }
        }
    }
    classes.into_iter().min()
}

/// Every chordless path with both ends in `c` stays inside `c`. Paths are
/// enumerated in full rather than cut at their first exit.
pub fn m_convex_oracle(adj: &[u64], c: u64) -> bool {
    fn walk(adj: &[u64], c: u64, path: &mut Vec<usize>, on: u64) -> bool {
        let last = *path.last().unwrap();
        if path.len() > 1 && c >> path[0] & 1 == 1 && c >> last & 1 == 1 && on & !c != 0 {
            return false;
        }
        let earlier = on & !(1 << last);
        let mut next = adj[last] & !on;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            if adj[w] & earlier != 0 {
                continue;
            }
            path.push(w);
            let ok = walk(adj, c, path, on | 1 << w);
            path.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    (0..adj.len()).all(|u| walk(adj, c, &mut vec![u], 1 << u))
}

/// Chordal iff simplicial vertices can be peeled off until nothing is left.
pub fn is_chordal(adj: &[u64]) -> bool {
    let mut alive: u64 = if adj.len() == 64 { u64::MAX } else { (1 << adj.len()) - 1 };
    while alive != 0 {
        let simplicial = (0..adj.len()).find(|&v| {
            alive >> v & 1 == 1 && {
                let nb = adj[v] & alive;
                (0..adj.len()).filter(|&u| nb >> u & 1 == 1).all(|u| nb & !(1 << u) & !adj[u] == 0)
            }
        });
        match simplicial {
            Some(v) => alive &= !(1 << v),
            None => return false,
        }
    }
    true
}

/// Simple graph on `0..n` as adjacency masks.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmallGraph {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl SmallGraph {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.adj[a] >> b & 1 == 1 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_isolated(&self) -> bool {
        self.adj.iter().any(|&a| a == 0)
    }

    pub fn with_isolated(&self, extra: usize) -> SmallGraph {
        let mut adj = self.adj.clone();
        adj.extend(std::iter::repeat(0).take(extra));
        SmallGraph { n: self.n + extra, adj }
    }

    pub fn to_simple(&self) -> antikit::SimpleGraph {
        antikit::SimpleGraph::with_vertices(self.n, self.edges()).unwrap()
    }

    pub fn independence_number(&self) -> usize {
        (0u64..1 << self.n)
            .filter(|&s| (0..self.n).all(|v| s >> v & 1 == 0 || self.adj[v] & s == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn induced(&self, keep: &[usize]) -> SmallGraph {
        let adj = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|(_, &w)| self.adj[v] >> w & 1 == 1)
                    .fold(0u64, |m, (p, _)| m | 1 << p)
            })
            .collect();
        SmallGraph { n: keep.len(), adj }
    }

    fn complement(&self) -> SmallGraph {
        let full = (1u64 << self.n) - 1;
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !(1 << v)).collect();
        SmallGraph { n: self.n, adj }
    }
}

/// Complete isomorphism invariant. Isolated and universal vertices are
/// peeled off first (recording how many at each round), and the remaining
/// core is labeled by individualization and refinement, keeping the
/// smallest adjacency code over all leaves.
pub fn canonical_key(g: &SmallGraph) -> (Vec<usize>, usize, u64) {
    let mut peel = Vec::new();
    let mut core = g.clone();
    loop {
        let isolated: Vec<usize> = (0..core.n).filter(|&v| core.adj[v] == 0).collect();
        let keep: Vec<usize> = (0..core.n).filter(|&v| core.adj[v] != 0).collect();
        peel.push(isolated.len());
        core = core.induced(&keep);
        let comp = core.complement();
        let universal = (0..comp.n).filter(|&v| comp.adj[v] == 0).count();
        let keep: Vec<usize> = (0..comp.n).filter(|&v| comp.adj[v] != 0).collect();
        peel.push(universal);
        core = core.induced(&keep);
        if isolated.is_empty() && universal == 0 {
            break;
        }
    }
    let mut best = u64::MAX;
    let cells = vec![(0..core.n).collect::<Vec<_>>()];
    search(&core, cells, &mut best);
    (peel, core.n, if core.n == 0 { 0 } else { best })
}

fn refine(g: &SmallGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut cell_of = vec![0; g.n];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let signature = |v: usize| -> Vec<u32> {
            let mut counts = vec![0u32; cells.len()];
            for w in 0..g.n {
                if g.adj[v] >> w & 1 == 1 {
                    counts[cell_of[w]] += 1;
                }
            }
            counts
        };
        let mut next = Vec::new();
        for cell in &cells {
            let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                groups.entry(signature(v)).or_default().push(v);
            }
            next.extend(groups.into_values());
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &SmallGraph, cells: Vec<Vec<usize>>, best: &mut u64) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                if g.adj[order[i]] >> order[j] & 1 == 1 {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        *best = (*best).min(code);
        return;
    };
    for &v in &cells[target] {
        let mut next = cells.clone();
        let rest: Vec<usize> = next[target].iter().copied().filter(|&w| w != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(g, next, best);
    }
}

/// One representative per isomorphism class of graphs on `0..=max_n`
/// vertices, grouped by order. Graphs on `n` vertices come from graphs on
/// `n − 1` by adding a vertex of minimum degree.
pub fn graph_classes(max_n: usize) -> Vec<Vec<SmallGraph>> {
    let mut levels = vec![vec![SmallGraph { n: 0, adj: vec![] }]];
    for n in 1..=max_n {
        let mut seen = BTreeSet::new();
        let mut level = Vec::new();
        for g in &levels[n - 1] {
            let old = n - 1;
            for s in 0u64..1 << old {
                let d = s.count_ones();
                let ok = (0..old).all(|v| g.adj[v].count_ones() + (s >> v & 1) as u32 >= d);
                if !ok {
                    continue;
                }
                let mut adj = g.adj.clone();
                for (v, a) in adj.iter_mut().enumerate() {
                    if s >> v & 1 == 1 {
                        *a |= 1 << old;
                    }
                }
                adj.push(s);
                let h = SmallGraph { n, adj };
                if seen.insert(canonical_key(&h)) {
                    level.push(h);
                }
            }
        }
        levels.push(level);
    }
    levels
}

/// Classes with `|V| + |E| ≤ budget`: isolated-vertex-free cores on at
/// most `max_core` vertices, padded with isolated vertices. A graph with no
/// isolated vertex has `|V| ≤ 2|E|`, so `budget ≤ 12` needs cores of at
/// most 8 vertices.
pub fn classes_within(levels: &[Vec<SmallGraph>], budget: usize) -> Vec<SmallGraph> {
    let mut out = Vec::new();
    for level in levels {
        for core in level.iter().filter(|g| !g.has_isolated()) {
            let used = core.n + core.size();
            if used > budget {
                continue;
            }
            for extra in 0..=budget - used {
                out.push(core.with_isolated(extra));
            }
        }
    }
    out
}
