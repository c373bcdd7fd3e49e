//! Constructors for the named graph families and the edge-replacement
//! gadgets.
//!
//! Conventions: wheels put the hub at 0 and the rim on 1..=r; the bipartite
//! families put the 3-part on {0,1,2}. Fresh vertices (thread interiors,
//! gadget interiors) are allocated above all existing ids, in a fixed order,
//! so every generator is deterministic.

use crate::error::Error;
use crate::graph::{Graph, Pair, Vertex};

pub fn complete(n: u32) -> Graph {
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
        for u in 0..v {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn circuit(n: u32) -> Graph {
    assert!(n >= 3);
    let mut g = Graph::new();
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    g
}

pub fn path(n: u32) -> Graph {
    let mut g = Graph::new();
    g.add_vertex(0);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// Two hub vertices 0, 1 joined by three internally disjoint paths with the
/// given interior lengths. At most one length may be zero.
pub fn theta(a: usize, b: usize, c: usize) -> Graph {
    assert!([a, b, c].iter().filter(|&&x| x == 0).count() <= 1);
    let mut g = Graph::new();
    g.add_vertex(0);
    g.add_vertex(1);
    let mut next = 2;
    for len in [a, b, c] {
        if len == 0 {
            g.add_edge(0, 1);
            continue;
        }
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        g.add_edge(prev, 1);
    }
    g
}

/// Triangular prism: two triangles 0-1-2 and 3-4-5 joined by a matching.
pub fn prism() -> Graph {
    Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
}

pub fn petersen() -> Graph {
    let mut g = Graph::new();
    for v in 0..5 {
        g.add_edge(v, (v + 1) % 5); // outer cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5); // pentagram
        g.add_edge(v, 5 + v);
    }
    g
}

/// Wheel Wᵣ: hub 0 joined to the rim circuit 1..=r.
pub fn wheel(r: u32) -> Graph {
    assert!(r >= 3);
    let mut g = Graph::new();
    for v in 1..=r {
        g.add_edge(0, v);
        g.add_edge(v, v % r + 1);
    }
    g
}

/// Rim edge `i` of a wheel: the edge joining rim vertices i+1 and i+2 (indices
/// mod r).
fn rim_edge(r: u32, i: usize) -> (Vertex, Vertex) {
    let i = i as u32;
    assert!(i < r);
    (i + 1, (i + 1) % r + 1)
}

/// Wᵣ plus a unit-interior thread parallel to each selected rim edge; selecting
/// all of them yields W̃ᵣ.
pub fn wheel_mod(r: u32, thread_subset: &[usize]) -> Graph {
    let mut g = wheel(r);
    for &i in thread_subset {
        let (a, b) = rim_edge(r, i);
        let w = g.fresh_vertex();
        g.add_edge(a, w);
        g.add_edge(w, b);
    }
    g
}

/// Subdivided wheel with the spokes preserved: rim edge `i` is replaced by a
/// path with `lens[i]` interior vertices (0 keeps the edge). Sᵣ is
/// `spoked(r, all 1)`.
pub fn spoked(r: u32, lens: &[usize]) -> Graph {
    assert_eq!(lens.len(), r as usize);
    let mut g = wheel(r);
    for (i, &len) in lens.iter().enumerate() {
        let (a, b) = rim_edge(r, i);
        g.subdivide_edge(a, b, len);
    }
    g
}

/// Complete bipartite K₃,ᵣ with the 3-part on {0,1,2}.
pub fn k3r(r: u32) -> Graph {
    assert!(r >= 1);
    let mut g = Graph::new();
    for v in 3..3 + r {
        for u in 0..3 {
            g.add_edge(u, v);
        }
    }
    g
}

/// Dᵣ = K₃,ᵣ plus a triangle spanned by the 3-part.
pub fn d_graph(r: u32) -> Graph {
    let mut g = k3r(r);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g
}

/// D̃ᵣ = Dᵣ plus a unit-interior thread parallel to each triangle edge.
pub fn d_mod(r: u32) -> Graph {
    let mut g = d_graph(r);
    for (a, b) in [(0, 1), (1, 2), (0, 2)] {
        let w = g.fresh_vertex();
        g.add_edge(a, w);
        g.add_edge(w, b);
    }
    g
}

/// Replaces each vertex of a cubic graph by a triangle; the triangle corners
/// inherit the original edges.
pub fn truncate_cubic(g: &Graph) -> Result<Graph, Error> {
    if g.vertices().any(|v| g.degree(v) != 3) {
        return Err(Error::NotCubic);
    }
    // corner(v, u) = id of the corner of v's triangle facing neighbor u
    let corner = |v: Vertex, u: Vertex| -> Vertex {
        let rank = g.neighbors(v).position(|w| w == u).unwrap() as u32;
        let vpos = g.vertices().position(|w| w == v).unwrap() as u32;
        3 * vpos + rank
    };
    let mut out = Graph::new();
    for v in g.vertices() {
        let corners: Vec<Vertex> = g.neighbors(v).map(|u| corner(v, u)).collect();
        for (i, &a) in corners.iter().enumerate() {
            for &b in &corners[..i] {
                out.add_edge(a, b);
            }
        }
    }
    for Pair(a, b) in g.edges() {
        out.add_edge(corner(a, b), corner(b, a));
    }
    Ok(out)
}

/// Edge-replacement gadget. Each gadget is a small graph with two designated
/// terminals; replacement glues the terminals onto the ends of the replaced
/// edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gadget {
    /// K₅ minus an edge; terminals are the nonadjacent pair.
    K5Minus,
    /// Two K₅⁻ copies with nonadjacent pairs (x₁,y₁), (x₂,y₂), joined by the
    /// edge x₁x₂; terminals are (y₁, y₂).
    Y,
    /// Wᵣ with one rim edge removed; terminals are the ends of that edge.
    WheelMinus(u32),
}

impl Gadget {
    /// The gadget on ids 0.., with its terminal pair.
    pub fn build(self) -> (Graph, (Vertex, Vertex)) {
        match self {
            Gadget::K5Minus => {
                let mut g = complete(5);
                g.remove_edge(3, 4);
                (g, (3, 4))
            }
            Gadget::Y => {
                let mut g = Graph::new();
                for base in [0, 5] {
                    for v in 0..5 {
                        for u in 0..v {
                            if (u, v) != (0, 1) {
                                g.add_edge(base + u, base + v);
                            }
                        }
                    }
                }
                g.add_edge(0, 5); // x₁x₂
                (g, (1, 6)) // (y₁, y₂)
            }
            Gadget::WheelMinus(r) => {
                assert!(r >= 3);
                let mut g = wheel(r);
                g.remove_edge(1, r);
                (g, (1, r))
            }
        }
    }
}

/// Replaces every edge of `j` (except `skip`, when given) by a fresh copy of
/// the gadget, its terminals identified with the edge's ends.
pub fn replace_edges(j: &Graph, gadget: Gadget, skip: Option<(Vertex, Vertex)>) -> Result<Graph, Error> {
    if !crate::connect::is_two_connected(j) {
        return Err(Error::NotTwoConnected);
    }
    let skip = skip.map(|(a, b)| {
        assert!(j.has_edge(a, b), "skip edge not in graph");
        Pair::new(a, b)
    });
    let (proto, (t1, t2)) = gadget.build();
    let mut out = Graph::new();
    for v in j.vertices() {
        out.add_vertex(v);
    }
    let mut next = j.fresh_vertex();
    for e in j.edges() {
        if Some(e) == skip {
            out.add_edge(e.0, e.1);
            continue;
        }
        // relabel: terminals to the edge ends, interiors to fresh ids
        let mut ids = std::collections::BTreeMap::new();
        ids.insert(t1, e.0);
        ids.insert(t2, e.1);
        for v in proto.vertices() {
            ids.entry(v).or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
        }
        for Pair(a, b) in proto.edges() {
            out.add_edge(ids[&a], ids[&b]);
        }
    }
    Ok(out)
}
