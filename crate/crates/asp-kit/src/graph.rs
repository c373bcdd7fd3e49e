//! Simple undirected graph with stable vertex identities.
//!
//! Vertices are opaque `u32` ids; they need not be contiguous. All iteration
//! orders are deterministic (sorted by id), which the rest of the crate relies
//! on for reproducible output.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub type Vertex = u32;

/// An unordered vertex pair, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair(pub Vertex, pub Vertex);

impl Pair {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Pair(a, b)
        } else {
            Pair(b, a)
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn other(&self, v: Vertex) -> Vertex {
        debug_assert!(self.contains(v));
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// Simple undirected graph: no loops, no parallel edges.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(n: u32, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = Graph::new();
        for v in 0..n {
            g.add_vertex(v);
        }
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    /// Inserts an edge, declaring endpoints as needed. Panics on a loop.
    pub fn add_edge(&mut self, a: Vertex, b: Vertex) {
        assert_ne!(a, b, "self-loop {a}");
        self.adj.entry(a).or_default().insert(b);
        self.adj.entry(b).or_default().insert(a);
    }

    pub fn remove_edge(&mut self, a: Vertex, b: Vertex) {
        if let Some(s) = self.adj.get_mut(&a) {
            s.remove(&b);
        }
        if let Some(s) = self.adj.get_mut(&b) {
            s.remove(&a);
        }
    }

    pub fn remove_vertex(&mut self, v: Vertex) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for u in nbrs {
                self.adj.get_mut(&u).unwrap().remove(&v);
            }
        }
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adj.get(&a).is_some_and(|s| s.contains(&b))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, |s| s.len())
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn edges(&self) -> Vec<Pair> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (&v, nbrs) in &self.adj {
            for &u in nbrs.range(v + 1..) {
                out.push(Pair(v, u));
            }
        }
        out
    }

    /// Smallest id not currently used as a vertex.
    pub fn fresh_vertex(&self) -> Vertex {
        self.adj.keys().next_back().map_or(0, |&m| m + 1)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.values().map(|s| s.len()).min().unwrap_or(0)
    }

    /// Subgraph induced by `keep`.
    pub fn induced<I: IntoIterator<Item = Vertex>>(&self, keep: I) -> Graph {
        let keep: BTreeSet<Vertex> = keep.into_iter().collect();
        let mut g = Graph::new();
        for &v in &keep {
            if self.has_vertex(v) {
                g.add_vertex(v);
            }
        }
        for &v in &keep {
            for u in self.neighbors(v) {
                if u > v && keep.contains(&u) {
                    g.add_edge(v, u);
                }
            }
        }
        g
    }

    /// Relabels vertices through `f`; `f` must be injective on the vertex set.
    pub fn map_vertices<F: Fn(Vertex) -> Vertex>(&self, f: F) -> Graph {
        let mut g = Graph::new();
        for v in self.vertices() {
            g.add_vertex(f(v));
        }
        for Pair(a, b) in self.edges() {
            g.add_edge(f(a), f(b));
        }
        assert_eq!(g.vertex_count(), self.vertex_count(), "relabeling not injective");
        g
    }

    /// Merges `b` into `a`: neighbors of `b` become neighbors of `a`.
    pub fn identify(&mut self, a: Vertex, b: Vertex) {
        assert_ne!(a, b);
        let nbrs: Vec<Vertex> = self.neighbors(b).collect();
        self.remove_vertex(b);
        for u in nbrs {
            if u != a {
                self.add_edge(a, u);
            }
        }
    }

    /// Replaces edge `a`–`b` by the path `a`–w1–…–wk–`b` over fresh vertices.
    /// Returns the interior ids.
    pub fn subdivide_edge(&mut self, a: Vertex, b: Vertex, interior_len: usize) -> Vec<Vertex> {
        assert!(self.has_edge(a, b));
        if interior_len == 0 {
            return Vec::new();
        }
        self.remove_edge(a, b);
        let mut prev = a;
        let mut interior = Vec::with_capacity(interior_len);
        for _ in 0..interior_len {
            let w = self.fresh_vertex();
            self.add_vertex(w);
            self.add_edge(prev, w);
            interior.push(w);
            prev = w;
        }
        self.add_edge(prev, b);
        interior
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        let mut comps = Vec::new();
        for start in self.vertices() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if seen.insert(u) {
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Connectivity ignoring a set of removed vertices.
    pub fn components_avoiding(&self, avoid: &BTreeSet<Vertex>) -> Vec<Vec<Vertex>> {
        let keep: Vec<Vertex> = self.vertices().filter(|v| !avoid.contains(v)).collect();
        self.induced(keep).components()
    }

    /// Largest clique size, by branch and bound. Intended for gadget-scale graphs.
    pub fn max_clique(&self) -> usize {
        let verts: Vec<Vertex> = self.vertices().collect();
        let mut best = 0;
        let mut current = Vec::new();
        self.clique_extend(&verts, &mut current, &mut best);
        best
    }

    fn clique_extend(&self, cands: &[Vertex], current: &mut Vec<Vertex>, best: &mut usize) {
        if current.len() > *best {
            *best = current.len();
        }
        for (i, &v) in cands.iter().enumerate() {
            if current.len() + (cands.len() - i) <= *best {
                return;
            }
            let next: Vec<Vertex> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&u| self.has_edge(v, u))
                .collect();
            current.push(v);
            self.clique_extend(&next, current, best);
            current.pop();
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=", self.vertex_count(), self.edge_count())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_construction() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(0), 2);
        assert!(g.has_edge(0, 3));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn idempotent_edges() {
        let mut g = Graph::new();
        g.add_edge(0, 1);
        g.add_edge(1, 0);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn induced_subgraph() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]);
        let h = g.induced([0, 1, 2]);
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn subdivision() {
        let mut g = Graph::from_edges(2, &[(0, 1)]);
        let interior = g.subdivide_edge(0, 1, 3);
        assert_eq!(interior.len(), 3);
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 4);
        assert!(!g.has_edge(0, 1));
    }

    #[test]
    fn components_split() {
        let mut g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(g.components().len(), 2);
        g.add_edge(1, 2);
        assert!(g.is_connected());
    }

    #[test]
    fn clique_sizes() {
        let k5 = crate::generators::complete(5);
        assert_eq!(k5.max_clique(), 5);
        let c5 = crate::generators::circuit(5);
        assert_eq!(c5.max_clique(), 2);
    }
}
