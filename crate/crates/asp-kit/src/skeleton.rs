//! Skeleton view: the subgraph spanned by vertices of degree at least 3,
//! together with the threads (maximal degree-2 chains) joining them.

use crate::graph::{Graph, Pair, Vertex};
use std::collections::{BTreeMap, BTreeSet};

/// A maximal path whose interior vertices all have degree 2 and whose ends are
/// skeleton vertices. The interior is nonempty: a bare edge between skeleton
/// vertices is a skeleton edge, not a thread.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thread {
    /// End vertices. They may coincide when a degree-2 chain leaves and
    /// re-enters the same skeleton vertex; such a pair is not a window.
    pub endpoints: (Vertex, Vertex),
    /// Interior vertices in order from `endpoints.0` to `endpoints.1`, where
    /// `endpoints.0` is the lexicographically smaller end.
    pub interior: Vec<Vertex>,
}

impl Thread {
    pub fn window(&self) -> Option<Pair> {
        (self.endpoints.0 != self.endpoints.1)
            .then(|| Pair::new(self.endpoints.0, self.endpoints.1))
    }
}

/// Derived view of a graph: V*, E*, threads, windows, and the neighbor
/// classifications N¹ (skeleton-edge neighbors) and N² (window partners).
#[derive(Debug, Clone)]
pub struct SkeletonView {
    pub skeleton_vertices: BTreeSet<Vertex>,
    pub skeleton_edges: BTreeSet<Pair>,
    pub threads: Vec<Thread>,
    pub windows: BTreeSet<Pair>,
    pub star_degree: BTreeMap<Vertex, usize>,
    pub n1: BTreeMap<Vertex, BTreeSet<Vertex>>,
    pub n2: BTreeMap<Vertex, BTreeSet<Vertex>>,
    /// Components that are bare circuits: every vertex 2-valent, so they carry
    /// no skeleton vertex and no thread.
    pub bare_circuits: Vec<Vec<Vertex>>,
}

impl SkeletonView {
    /// G* as a graph (skeleton vertices and skeleton edges).
    pub fn skeleton_graph(&self) -> Graph {
        let mut g = Graph::new();
        for &v in &self.skeleton_vertices {
            g.add_vertex(v);
        }
        for &Pair(a, b) in &self.skeleton_edges {
            g.add_edge(a, b);
        }
        g
    }

    /// |N(v)| where neighbors are understood through links: N¹(v) ∪ N²(v).
    pub fn link_neighbor_count(&self, v: Vertex) -> usize {
        let empty = BTreeSet::new();
        let n1 = self.n1.get(&v).unwrap_or(&empty);
        let n2 = self.n2.get(&v).unwrap_or(&empty);
        n1.union(n2).count()
    }
}

/// Computes the skeleton view of a simple graph.
pub fn skeleton_view(g: &Graph) -> SkeletonView {
    let skeleton_vertices: BTreeSet<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let mut skeleton_edges = BTreeSet::new();
    for Pair(a, b) in g.edges() {
        if skeleton_vertices.contains(&a) && skeleton_vertices.contains(&b) {
            skeleton_edges.insert(Pair(a, b));
        }
    }

    // Walk maximal degree-2 chains out of each skeleton vertex. Each thread is
    // discovered from both ends; keep one copy per interior.
    let mut threads = Vec::new();
    let mut claimed: BTreeSet<Vertex> = BTreeSet::new();
    for &v in &skeleton_vertices {
        for u in g.neighbors(v) {
            if g.degree(u) != 2 || claimed.contains(&u) {
                continue;
            }
            let mut interior = vec![u];
            let mut prev = v;
            let mut cur = u;
            let end = loop {
                let next = g.neighbors(cur).find(|&w| w != prev).expect("degree-2 chain");
                if g.degree(next) == 2 {
                    prev = cur;
                    cur = next;
                    interior.push(next);
                } else {
                    break next;
                }
            };
            for &w in &interior {
                claimed.insert(w);
            }
            if !skeleton_vertices.contains(&end) {
                // Chain ends in a leaf; not a thread.
                continue;
            }
            // Orient the interior from the lexicographically smaller end.
            let endpoints = if v <= end { (v, end) } else { (end, v) };
            if endpoints.0 != v {
                interior.reverse();
            } else if v == end {
                // Chain closing back on v: orient to start at the smaller
                // interior neighbor for determinism.
                if interior.first() > interior.last() {
                    interior.reverse();
                }
            }
            threads.push(Thread { endpoints, interior });
        }
    }
    threads.sort_by(|a, b| (a.endpoints, &a.interior).cmp(&(b.endpoints, &b.interior)));

    // Remaining degree-2 vertices either sit on bare circuit components or on
    // path components; only the former are flagged.
    let mut bare_circuits = Vec::new();
    let mut seen: BTreeSet<Vertex> = BTreeSet::new();
    for start in g.vertices() {
        if g.degree(start) != 2 || claimed.contains(&start) || seen.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        let mut circuit = true;
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(v) = stack.pop() {
            if g.degree(v) != 2 {
                circuit = false;
            }
            for u in g.neighbors(v) {
                if seen.insert(u) {
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        if circuit {
            comp.sort_unstable();
            bare_circuits.push(comp);
        }
    }
    bare_circuits.sort();

    let windows: BTreeSet<Pair> = threads.iter().filter_map(|t| t.window()).collect();

    let mut n1: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
    let mut n2: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
    for &v in &skeleton_vertices {
        n1.insert(v, BTreeSet::new());
        n2.insert(v, BTreeSet::new());
    }
    for &Pair(a, b) in &skeleton_edges {
        n1.get_mut(&a).unwrap().insert(b);
        n1.get_mut(&b).unwrap().insert(a);
    }
    for &Pair(a, b) in &windows {
        n2.get_mut(&a).unwrap().insert(b);
        n2.get_mut(&b).unwrap().insert(a);
    }
    let star_degree: BTreeMap<Vertex, usize> =
        n1.iter().map(|(&v, s)| (v, s.len())).collect();

    SkeletonView {
        skeleton_vertices,
        skeleton_edges,
        threads,
        windows,
        star_degree,
        n1,
        n2,
        bare_circuits,
    }
}

/// Record of one shortened thread, enough to lift paths in the normalized
/// graph back to the original graph.
#[derive(Debug, Clone)]
pub struct ThreadContraction {
    pub endpoints: (Vertex, Vertex),
    /// Sole interior vertex in the normalized graph.
    pub kept: Vertex,
    /// Original interior, oriented from `endpoints.0` to `endpoints.1`.
    pub original_interior: Vec<Vertex>,
}

/// Replaces every thread of interior length ≥ 2 by a thread of interior length
/// exactly 1. Interior vertices are 2-valent and can never serve as branch
/// vertices, and a thread can never realize an unsubdivided edge, so the set
/// of achievable K₄-subdivision skeleton shapes is unchanged.
pub fn normalize_threads(g: &Graph) -> Graph {
    normalize_threads_with_map(g).0
}

/// As [`normalize_threads`], also returning the contraction records.
pub fn normalize_threads_with_map(g: &Graph) -> (Graph, Vec<ThreadContraction>) {
    let view = skeleton_view(g);
    let mut out = g.clone();
    let mut contractions = Vec::new();
    for t in &view.threads {
        if t.interior.len() < 2 {
            continue;
        }
        let kept = t.interior[0];
        for &w in &t.interior[1..] {
            out.remove_vertex(w);
        }
        out.add_edge(kept, t.endpoints.1);
        contractions.push(ThreadContraction {
            endpoints: t.endpoints,
            kept,
            original_interior: t.interior.clone(),
        });
    }
    (out, contractions)
}
