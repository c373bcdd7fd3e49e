//! Brute-force ground truth: enumeration of K₄ subdivisions classified by
//! skeleton shape, and the membership tests built on it.
//!
//! The skeleton of a subdivision is the set of branch edges left unsubdivided;
//! for K₄ this is a subset of its 6 edges, falling into 11 isomorphism
//! classes. A graph is ASP when no subdivision has skeleton P₃ or P₄, ASP-P
//! when C₄ is excluded as well, and series-parallel when no K₄ subdivision
//! exists at all.

use crate::embed;
use crate::error::Error;
use crate::graph::{Graph, Pair, Vertex};
use std::collections::{BTreeMap, BTreeSet};

/// Isomorphism class of a subset of E(K₄).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SkeletonShape {
    Empty,
    OneEdge,
    TwoMatching,
    P3,
    P4,
    Triangle,
    Claw,
    C4,
    Paw,
    Diamond,
    K4,
}

/// Forbidden sets for the three membership notions.
pub const ASP_FORBIDDEN: &[SkeletonShape] = &[SkeletonShape::P3, SkeletonShape::P4];
pub const ASPP_FORBIDDEN: &[SkeletonShape] =
    &[SkeletonShape::P3, SkeletonShape::P4, SkeletonShape::C4];

/// The 6 path slots of a K₄ subdivision, as index pairs into the branch
/// quadruple, in fixed order.
pub const K4_SLOTS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// One embedded K₄ subdivision.
#[derive(Debug, Clone)]
pub struct ForbiddenWitness {
    pub branch_vertices: [Vertex; 4],
    /// One path per slot of [`K4_SLOTS`], endpoints included.
    pub branch_paths: Vec<Vec<Vertex>>,
    pub shape: SkeletonShape,
}

/// Classifies a subset of K₄'s edge slots by isomorphism type.
pub fn shape_of_slot_subset(unsubdivided: &[usize]) -> SkeletonShape {
    use SkeletonShape::*;
    let mut deg = [0u8; 4];
    for &s in unsubdivided {
        let (i, j) = K4_SLOTS[s];
        deg[i] += 1;
        deg[j] += 1;
    }
    let mut ds = deg;
    ds.sort_unstable();
    match unsubdivided.len() {
        0 => Empty,
        1 => OneEdge,
        2 => {
            if ds == [1, 1, 1, 1] {
                TwoMatching
            } else {
                P3
            }
        }
        3 => match ds {
            [0, 2, 2, 2] => Triangle,
            [1, 1, 1, 3] => Claw,
            _ => P4,
        },
        4 => {
            if ds == [2, 2, 2, 2] {
                C4
            } else {
                Paw
            }
        }
        5 => Diamond,
        6 => K4,
        _ => unreachable!(),
    }
}

fn shape_of_paths(paths: &[Vec<Vertex>]) -> SkeletonShape {
    let unsub: Vec<usize> = (0..6).filter(|&s| paths[s].len() == 2).collect();
    shape_of_slot_subset(&unsub)
}

/// Recomputes the shape of a witness: the unsubdivided slots are exactly the
/// length-1 branch paths, since interior vertices are 2-valent in the witness
/// subgraph while branch vertices are 3-valent.
pub fn skeleton_shape_of(w: &ForbiddenWitness) -> SkeletonShape {
    shape_of_paths(&w.branch_paths)
}

fn oracle_limit() -> usize {
    std::env::var("ASP_KIT_ORACLE_LIMIT")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(40)
}

fn check_limit(g: &Graph) -> Result<(), Error> {
    let limit = oracle_limit();
    if g.vertex_count() > limit {
        return Err(Error::SizeLimitExceeded { size: g.vertex_count(), limit });
    }
    Ok(())
}

/// Streams every K₄ subdivision of `g`, one witness per embedded subgraph.
/// Branch quadruples are visited in sorted order and path systems shortest
/// first. The visitor returns `true` to stop; the overall return is `true`
/// iff a visit stopped the stream.
pub fn for_each_k4_subdivision(
    g: &Graph,
    visit: &mut impl FnMut(&ForbiddenWitness) -> bool,
) -> Result<bool, Error> {
    check_limit(g)?;
    let cands: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let k = cands.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    let branch = [cands[a], cands[b], cands[c], cands[d]];
                    let stopped = embed::for_each_embedding(g, &branch, &K4_SLOTS, &mut |paths| {
                        let w = ForbiddenWitness {
                            branch_vertices: branch,
                            branch_paths: paths.to_vec(),
                            shape: shape_of_paths(paths),
                        };
                        visit(&w)
                    });
                    if stopped {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// All witnesses, collected. Intended for small graphs only.
pub fn enumerate_k4_subdivisions(g: &Graph) -> Result<Vec<ForbiddenWitness>, Error> {
    let mut out = Vec::new();
    for_each_k4_subdivision(g, &mut |w| {
        out.push(w.clone());
        false
    })?;
    Ok(out)
}

/// First witness whose shape lies in `forbidden`, if any.
pub fn find_forbidden(
    g: &Graph,
    forbidden: &[SkeletonShape],
) -> Result<Option<ForbiddenWitness>, Error> {
    let mut found = None;
    for_each_k4_subdivision(g, &mut |w| {
        if forbidden.contains(&w.shape) {
            found = Some(w.clone());
            true
        } else {
            false
        }
    })?;
    Ok(found)
}

pub fn is_asp(g: &Graph) -> Result<bool, Error> {
    Ok(find_forbidden(g, ASP_FORBIDDEN)?.is_none())
}

pub fn is_asp_p(g: &Graph) -> Result<bool, Error> {
    Ok(find_forbidden(g, ASPP_FORBIDDEN)?.is_none())
}

/// Independent witness validator used by tests: endpoint correctness, edge
/// existence, internal disjointness, and shape recomputation.
pub fn validate_witness(g: &Graph, w: &ForbiddenWitness) -> Result<(), String> {
    let b = w.branch_vertices;
    let bset: BTreeSet<Vertex> = b.iter().copied().collect();
    if bset.len() != 4 {
        return Err(format!("branch vertices repeat: {b:?}"));
    }
    if w.branch_paths.len() != 6 {
        return Err(format!("expected 6 paths, got {}", w.branch_paths.len()));
    }
    let mut interiors: BTreeSet<Vertex> = BTreeSet::new();
    for (s, p) in w.branch_paths.iter().enumerate() {
        let (i, j) = K4_SLOTS[s];
        if p.first() != Some(&b[i]) || p.last() != Some(&b[j]) {
            return Err(format!("slot {s} endpoints wrong: {p:?}"));
        }
        for win in p.windows(2) {
            if !g.has_edge(win[0], win[1]) {
                return Err(format!("missing edge {}-{}", win[0], win[1]));
            }
        }
        for &v in &p[1..p.len() - 1] {
            if bset.contains(&v) {
                return Err(format!("interior {v} is a branch vertex"));
            }
            if !interiors.insert(v) {
                return Err(format!("interior {v} shared between paths"));
            }
        }
    }
    if skeleton_shape_of(w) != w.shape {
        return Err(format!("shape mismatch: stored {:?}", w.shape));
    }
    Ok(())
}

/// Series-parallel test by reduction: each block must collapse to a single
/// edge under series suppression and parallel merging. Agrees with
/// "no K₄ subdivision", which tests cross-check against the enumerator.
pub fn is_sp(g: &Graph) -> bool {
    crate::connect::blocks(g)
        .into_iter()
        .all(|b| block_is_sp(&b.graph))
}

fn block_is_sp(g: &Graph) -> bool {
    if g.edge_count() <= 1 {
        return true;
    }
    // multigraph as edge multiplicities
    let mut mult: BTreeMap<Pair, usize> = g.edges().into_iter().map(|e| (e, 1)).collect();
    loop {
        let mut changed = false;
        // parallel merges
        for (_, m) in mult.iter_mut() {
            if *m > 1 {
                *m = 1;
                changed = true;
            }
        }
        // series suppression of a 2-valent vertex
        let mut deg: BTreeMap<Vertex, Vec<Pair>> = BTreeMap::new();
        for (&e, &m) in &mult {
            for v in [e.0, e.1] {
                for _ in 0..m {
                    deg.entry(v).or_default().push(e);
                }
            }
        }
        let suppressible = deg
            .iter()
            .find(|(_, es)| es.len() == 2 && es[0] != es[1])
            .map(|(&v, es)| (v, es.clone()));
        if let Some((v, es)) = suppressible {
            let u = es[0].other(v);
            let w = es[1].other(v);
            *mult.get_mut(&es[0]).unwrap() -= 1;
            *mult.get_mut(&es[1]).unwrap() -= 1;
            mult.retain(|_, m| *m > 0);
            *mult.entry(Pair::new(u, w)).or_insert(0) += 1;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    mult.len() == 1 && mult.values().all(|&m| m == 1)
}

/// A link of the skeleton structure: either a skeleton edge or a window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Link {
    Edge(Pair),
    Window(Pair),
}

/// A link is red when attaching a parallel link of the opposite kind creates a
/// forbidden (P₃- or P₄-skeleton) subdivision. Input must be ASP.
pub fn is_red_link(g: &Graph, link: Link) -> Result<bool, Error> {
    if !is_asp(g)? {
        return Err(Error::NotAspInput);
    }
    let mut h = g.clone();
    match link {
        Link::Edge(Pair(a, b)) => {
            assert!(h.has_edge(a, b), "not an edge of the graph");
            let w = h.fresh_vertex();
            h.add_edge(a, w);
            h.add_edge(w, b);
        }
        Link::Window(Pair(a, b)) => {
            assert!(!h.has_edge(a, b), "window already carries a parallel edge");
            h.add_edge(a, b);
        }
    }
    Ok(find_forbidden(&h, ASP_FORBIDDEN)?.is_some())
}
