//! Node/edge multigraphs shared by finite and affine diagrams.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};

pub type NodeId = usize;

/// A bond between two simple roots.
///
/// `short_end` is the endpoint carrying the shorter root; it is `None` for
/// simple bonds and for the symmetric quadruple bond of `A_1^(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub a: NodeId,
    pub b: NodeId,
    pub mult: u8,
    pub short_end: Option<NodeId>,
}

impl Edge {
    pub fn simple(a: NodeId, b: NodeId) -> Edge {
        Edge::new(a, b, 1, None)
    }

    pub fn new(a: NodeId, b: NodeId, mult: u8, short_end: Option<NodeId>) -> Edge {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Edge { a, b, mult, short_end }
    }

    /// Builds the edge from the Cartan pair `(a_ij, a_ji)`.
    pub fn from_cartan(i: NodeId, j: NodeId, a_ij: i32, a_ji: i32) -> Edge {
        let mult = (a_ij * a_ji) as u8;
        let short = if a_ij == a_ji {
            None
        } else if a_ij == -1 {
            Some(i)
        } else {
            Some(j)
        };
        Edge::new(i, j, mult, short)
    }

    pub fn other(&self, v: NodeId) -> NodeId {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    pub fn touches(&self, v: NodeId) -> bool {
        self.a == v || self.b == v
    }

    /// Cartan entry `a_ij = <alpha_i, alpha_j^vee>` with `i` an endpoint.
    pub fn cartan_from(&self, i: NodeId) -> i32 {
        match self.short_end {
            None if self.mult == 1 => -1,
            None => -2,
            Some(s) if s == i => -1,
            Some(_) => -(self.mult as i32),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    nodes: Vec<NodeId>,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new(nodes: impl IntoIterator<Item = NodeId>, edges: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        let nodes: BTreeSet<NodeId> = nodes.into_iter().collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for e in edges {
            if !nodes.contains(&e.a) {
                return Err(Error::NodeNotInDiagram(e.a));
            }
            if !nodes.contains(&e.b) {
                return Err(Error::NodeNotInDiagram(e.b));
            }
            if e.a == e.b || !(1..=4).contains(&e.mult) {
                return Err(Error::Malformed(format!("bad edge {}-{}", e.a, e.b)));
            }
            let directed = e.short_end.is_some();
            if (e.mult == 1 && directed) || (e.mult == 2 || e.mult == 3) && !directed {
                return Err(Error::Malformed(format!(
                    "edge {}-{} has wrong direction data",
                    e.a, e.b
                )));
            }
            if let Some(s) = e.short_end {
                if !e.touches(s) {
                    return Err(Error::Malformed(format!("short end {s} not on edge")));
                }
            }
            if !seen.insert((e.a, e.b)) {
                return Err(Error::Malformed(format!("duplicate edge {}-{}", e.a, e.b)));
            }
            out.push(e);
        }
        out.sort();
        Ok(Graph {
            nodes: nodes.into_iter().collect(),
            edges: out,
        })
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.nodes.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edge(&self, i: NodeId, j: NodeId) -> Option<&Edge> {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        self.edges.iter().find(|e| e.a == a && e.b == b)
    }

    pub fn neighbors(&self, v: NodeId) -> Vec<NodeId> {
        let mut out: Vec<NodeId> = self.edges.iter().filter(|e| e.touches(v)).map(|e| e.other(v)).collect();
        out.sort();
        out
    }

    pub fn cartan(&self, i: NodeId, j: NodeId) -> i32 {
        if i == j {
            return 2;
        }
        self.edge(i, j).map_or(0, |e| e.cartan_from(i))
    }

    /// Subgraph with the given nodes removed.
    pub fn without(&self, removed: &BTreeSet<NodeId>) -> Graph {
        Graph {
            nodes: self.nodes.iter().copied().filter(|v| !removed.contains(v)).collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !removed.contains(&e.a) && !removed.contains(&e.b))
                .collect(),
        }
    }

    pub fn induced(&self, keep: &BTreeSet<NodeId>) -> Graph {
        let removed = self.nodes.iter().copied().filter(|v| !keep.contains(v)).collect();
        self.without(&removed)
    }

    /// Connected components, each sorted, ordered by smallest node id.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let mut adj: BTreeMap<NodeId, Vec<NodeId>> = self.nodes.iter().map(|&v| (v, Vec::new())).collect();
        for e in &self.edges {
            adj.get_mut(&e.a).unwrap().push(e.b);
            adj.get_mut(&e.b).unwrap().push(e.a);
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &v in &self.nodes {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = vec![];
            let mut stack = vec![v];
            seen.insert(v);
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &adj[&u] {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// Relabels nodes through `f`.
    pub fn map_nodes(&self, f: impl Fn(NodeId) -> NodeId) -> Graph {
        let mut g = Graph {
            nodes: self.nodes.iter().map(|&v| f(v)).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge::new(f(e.a), f(e.b), e.mult, e.short_end.map(&f)))
                .collect(),
        };
        g.nodes.sort();
        g.edges.sort();
        g
    }
}

/// Embeddings of `pattern` onto `target` preserving Cartan entries, as
/// sequences `phi[k] = target node for pattern.nodes()[k]`.
///
/// Candidates are tried in increasing node order, so the first result is the
/// lexicographically smallest one.
pub fn isomorphisms(
    pattern: &Graph,
    target: &Graph,
    compatible: &dyn Fn(NodeId, NodeId) -> bool,
    limit: usize,
) -> Vec<Vec<NodeId>> {
    let mut out = Vec::new();
    if pattern.len() != target.len() || pattern.edges.len() != target.edges.len() {
        return out;
    }
    let degrees = |g: &Graph| {
        let mut d: Vec<(usize, u32)> = g
            .nodes
            .iter()
            .map(|&v| {
                let es = g.edges.iter().filter(|e| e.touches(v));
                (es.clone().count(), es.map(|e| e.mult as u32).sum())
            })
            .collect();
        d.sort();
        d
    };
    if degrees(pattern) != degrees(target) {
        return out;
    }
    let search = Search {
        p: dense(pattern),
        t: dense(target),
        pn: pattern.nodes(),
        tn: target.nodes(),
        compatible,
        limit,
    };
    let mut phi = Vec::with_capacity(pattern.len());
    let mut used = vec![false; target.len()];
    search.run(&mut phi, &mut used, &mut out);
    out
}

fn dense(g: &Graph) -> Vec<Vec<i32>> {
    let idx = |v: NodeId| g.nodes.binary_search(&v).unwrap();
    let n = g.len();
    let mut m = vec![vec![0; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for e in &g.edges {
        m[idx(e.a)][idx(e.b)] = e.cartan_from(e.a);
        m[idx(e.b)][idx(e.a)] = e.cartan_from(e.b);
    }
    m
}

struct Search<'a> {
    p: Vec<Vec<i32>>,
    t: Vec<Vec<i32>>,
    pn: &'a [NodeId],
    tn: &'a [NodeId],
    compatible: &'a dyn Fn(NodeId, NodeId) -> bool,
    limit: usize,
}

impl Search<'_> {
    fn run(&self, phi: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<NodeId>>) {
        let k = phi.len();
        if k == self.pn.len() {
            out.push(phi.iter().map(|&i| self.tn[i]).collect());
            return;
        }
        let anchor = (0..k).find(|&j| self.p[k][j] != 0).map(|j| phi[j]);
        for t in 0..self.tn.len() {
            if used[t] || anchor.is_some_and(|a| self.t[a][t] == 0) || !(self.compatible)(self.pn[k], self.tn[t]) {
                continue;
            }
            if !(0..k).all(|j| self.p[k][j] == self.t[t][phi[j]] && self.p[j][k] == self.t[phi[j]][t]) {
                continue;
            }
            phi.push(t);
            used[t] = true;
            self.run(phi, used, out);
            phi.pop();
            used[t] = false;
            if out.len() >= self.limit {
                return;
            }
        }
    }
}
