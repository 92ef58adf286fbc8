//! Simple undirected graphs on `0..n` with bitset adjacency.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A fixed-width bitset over `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    w: Vec<u64>,
}

impl Bits {
    pub fn new(n: usize) -> Self {
        Bits { w: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut b = Bits::new(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    pub fn insert(&mut self, i: usize) {
        self.w[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.w[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.w[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.w.iter().map(|x| x.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.w.iter().all(|&x| x == 0)
    }

    pub fn and(&self, o: &Bits) -> Bits {
        Bits { w: self.w.iter().zip(&o.w).map(|(a, b)| a & b).collect() }
    }

    pub fn and_not(&self, o: &Bits) -> Bits {
        Bits { w: self.w.iter().zip(&o.w).map(|(a, b)| a & !b).collect() }
    }

    pub fn and_count(&self, o: &Bits) -> usize {
        self.w.iter().zip(&o.w).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.w
            .iter()
            .enumerate()
            .find(|(_, &x)| x != 0)
            .map(|(i, x)| i * 64 + x.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.w.iter().enumerate().flat_map(|(i, &word)| {
            let mut x = word;
            std::iter::from_fn(move || {
                if x == 0 {
                    return None;
                }
                let t = x.trailing_zeros() as usize;
                x &= x - 1;
                Some(i * 64 + t)
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Bits>,
}

impl Graph {
    /// Builds a graph from an edge list; loops and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Bits::new(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::GraphParams(format!("edge ({u},{v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::GraphParams(format!("loop at {u}")));
            }
            if adj[u].contains(v) {
                return Err(Error::GraphParams(format!("repeated edge ({u},{v})")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from a symmetric adjacency predicate.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut adj = vec![Bits::new(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if f(u, v) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &Bits {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// The common valency, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Bits::len);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bits::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// BFS distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut d = vec![usize::MAX; self.n()];
        d[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for w in self.adj[u].iter() {
                if d[w] == usize::MAX {
                    d[w] = d[u] + 1;
                    q.push_back(w);
                }
            }
        }
        d
    }

    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>> {
        let m: Vec<Vec<usize>> = (0..self.n()).map(|s| self.distances_from(s)).collect();
        if m.iter().any(|row| row.contains(&usize::MAX)) {
            return Err(Error::Disconnected);
        }
        Ok(m)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || !self.distances_from(0).contains(&usize::MAX)
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n(), |u, v| !self.adjacent(u, v))
    }

    /// Induced subgraph on `vs`; vertex `i` of the result is `vs[i]`.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        Graph::from_fn(vs.len(), |i, j| self.adjacent(vs[i], vs[j]))
    }

    /// Distance-`d` graph.
    pub fn distance_graph(&self, d: usize) -> Result<Graph> {
        let m = self.distance_matrix()?;
        Ok(Graph::from_fn(self.n(), |u, v| m[u][v] == d))
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    /// Parses `u v` lines (0-based); `#` starts a comment. The vertex count
    /// is one more than the largest label unless `n` is given.
    pub fn from_edge_list(text: &str, n: Option<usize>) -> Result<Graph> {
        let mut edges = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Syntax(format!("line {}: bad vertex {s:?}", no + 1)))
            };
            if parts.len() != 2 {
                return Err(Error::Syntax(format!("line {}: expected two vertices", no + 1)));
            }
            edges.push((parse(parts[0])?, parse(parts[1])?));
        }
        let max = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        let n = n.unwrap_or(max);
        Graph::from_edges(n, &edges)
    }
}

/// JSON wrapper for exported graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub schema: String,
    pub family: Option<String>,
    pub params: Vec<i64>,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

pub const GRAPH_SCHEMA: &str = "drg-graph/1";

impl GraphFile {
    pub fn new(g: &Graph, family: Option<String>, params: Vec<i64>) -> Self {
        GraphFile { schema: GRAPH_SCHEMA.into(), family, params, n: g.n(), edges: g.edges() }
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, &self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits() {
        let mut b = Bits::new(130);
        for i in [0, 63, 64, 129] {
            b.insert(i);
        }
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(b.len(), 4);
        b.remove(63);
        assert_eq!(b.first(), Some(0));
        assert!(!b.contains(63));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_fn(6, |u, v| (v - u) % 6 == 1 || (u == 0 && v == 5));
        let h = Graph::from_edge_list(&g.to_edge_list(), None).unwrap();
        assert_eq!(g, h);
        assert_eq!(g.distances_from(0), vec![0, 1, 2, 3, 2, 1]);
        assert!(Graph::from_edge_list("0 0\n", None).is_err());
        assert!(Graph::from_edge_list("0 x\n", None).is_err());
    }
}
