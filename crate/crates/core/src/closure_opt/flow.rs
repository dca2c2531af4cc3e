//! Dinic maximum flow on real capacities.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Capacity {
    Finite(f64),
    Infinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: Capacity,
}

/// Nodes are `0..nodes`; exactly one source and one sink.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<Arc>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= nodes || sink >= nodes || source == sink {
            return Err(Error::InvalidNetwork(format!(
                "source {source} and sink {sink} must be distinct nodes below {nodes}"
            )));
        }
        Ok(FlowNetwork {
            nodes,
            source,
            sink,
            arcs: Vec::new(),
        })
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: Capacity) -> Result<()> {
        if from >= self.nodes || to >= self.nodes || from == to {
            return Err(Error::InvalidNetwork(format!("arc {from}->{to} is out of range or a loop")));
        }
        if to == self.source || from == self.sink {
            return Err(Error::InvalidNetwork(format!(
                "arc {from}->{to} enters the source or leaves the sink"
            )));
        }
        if let Capacity::Finite(c) = capacity {
            if !(c.is_finite() && c >= 0.0) {
                return Err(Error::InvalidNetwork(format!("arc {from}->{to} has capacity {c}")));
            }
        }
        self.arcs.push(Arc { from, to, capacity });
        Ok(())
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    fn finite_total(&self) -> f64 {
        self.arcs
            .iter()
            .filter_map(|a| match a.capacity {
                Capacity::Finite(c) => Some(c),
                Capacity::Infinite => None,
            })
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MaxFlow {
    /// `f64::INFINITY` when every cut crosses an infinite arc.
    pub value: f64,
    /// Source side of the inclusion-minimal minimum cut, sorted.
    pub source_side: Vec<usize>,
}

/// Total capacity of arcs leaving `side`.
pub fn cut_capacity(net: &FlowNetwork, side: &[usize]) -> f64 {
    let mut inside = vec![false; net.nodes];
    for &v in side {
        inside[v] = true;
    }
    net.arcs
        .iter()
        .filter(|a| inside[a.from] && !inside[a.to])
        .map(|a| match a.capacity {
            Capacity::Finite(c) => c,
            Capacity::Infinite => f64::INFINITY,
        })
        .sum()
}

pub fn max_flow(net: &FlowNetwork) -> MaxFlow {
    let finite = net.finite_total();
    // Larger than any cut made only of finite arcs.
    let sentinel = finite + 1.0;
    let eps = 1e-10 * (1.0 + finite);
    let mut d = Dinic::new(net.nodes, eps);
    for a in &net.arcs {
        let cap = match a.capacity {
            Capacity::Finite(c) => c,
            Capacity::Infinite => sentinel,
        };
        d.add(a.from, a.to, cap);
    }
    let value = d.run(net.source, net.sink);
    let source_side = d.reachable(net.source);
    let value = if value > finite + 0.5 { f64::INFINITY } else { value };
    MaxFlow { value, source_side }
}

struct Dinic {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<f64>,
    level: Vec<i64>,
    next: Vec<usize>,
    eps: f64,
}

impl Dinic {
    fn new(n: usize, eps: f64) -> Self {
        Dinic {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
            level: vec![-1; n],
            next: vec![0; n],
            eps,
        }
    }

    fn add(&mut self, u: usize, v: usize, c: f64) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0.0);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.level[v] < 0 && self.cap[e] > self.eps {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: f64) -> f64 {
        if u == t {
            return pushed;
        }
        while self.next[u] < self.head[u].len() {
            let e = self.head[u][self.next[u]];
            let v = self.to[e];
            if self.level[v] == self.level[u] + 1 && self.cap[e] > self.eps {
                let got = self.dfs(v, t, pushed.min(self.cap[e]));
                if got > 0.0 {
                    self.cap[e] -= got;
                    self.cap[e ^ 1] += got;
                    return got;
                }
            }
            self.next[u] += 1;
        }
        0.0
    }

    fn run(&mut self, s: usize, t: usize) -> f64 {
        let mut total = 0.0;
        while self.bfs(s, t) {
            self.next.iter_mut().for_each(|n| *n = 0);
            loop {
                let got = self.dfs(s, t, f64::INFINITY);
                if got <= 0.0 {
                    break;
                }
                total += got;
            }
        }
        total
    }

    fn reachable(&self, s: usize) -> Vec<usize> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if !seen[v] && self.cap[e] > self.eps {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        (0..seen.len()).filter(|&v| seen[v]).collect()
    }
}
