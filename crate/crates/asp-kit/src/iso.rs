//! Isomorphism testing for small graphs, plus a canonical code used for
//! isomorph rejection during exhaustive enumeration.

use crate::error::Error;
use crate::graph::{Graph, Vertex};
use std::collections::BTreeMap;

const ISO_LIMIT: usize = 12;

/// Refined vertex color: degree signature iterated to a fixed point. Two
/// vertices mapped onto each other by an isomorphism always share a color.
fn refine_colors(g: &Graph) -> BTreeMap<Vertex, u64> {
    let mut color: BTreeMap<Vertex, u64> = g.vertices().map(|v| (v, g.degree(v) as u64)).collect();
    for _ in 0..g.vertex_count() {
        let mut sigs: Vec<(Vec<u64>, Vertex)> = g
            .vertices()
            .map(|v| {
                let mut s: Vec<u64> = g.neighbors(v).map(|u| color[&u]).collect();
                s.sort_unstable();
                s.insert(0, color[&v]);
                (s, v)
            })
            .collect();
        sigs.sort();
        let mut next: BTreeMap<Vertex, u64> = BTreeMap::new();
        let mut c = 0;
        for (i, (sig, v)) in sigs.iter().enumerate() {
            if i > 0 && *sig != sigs[i - 1].0 {
                c += 1;
            }
            next.insert(*v, c);
        }
        if next.values().collect::<std::collections::BTreeSet<_>>().len()
            == color.values().collect::<std::collections::BTreeSet<_>>().len()
        {
            color = next;
            break;
        }
        color = next;
    }
    color
}

/// Exact isomorphism by color-refined backtracking. Errors above 12 vertices.
pub fn is_isomorphic_small(g: &Graph, h: &Graph) -> Result<bool, Error> {
    let n = g.vertex_count();
    if n.max(h.vertex_count()) > ISO_LIMIT {
        return Err(Error::SizeLimitExceeded {
            size: n.max(h.vertex_count()),
            limit: ISO_LIMIT,
        });
    }
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let cg = refine_colors(g);
    let ch = refine_colors(h);
    let mut hist_g: BTreeMap<u64, usize> = BTreeMap::new();
    let mut hist_h: BTreeMap<u64, usize> = BTreeMap::new();
    for c in cg.values() {
        *hist_g.entry(*c).or_default() += 1;
    }
    for c in ch.values() {
        *hist_h.entry(*c).or_default() += 1;
    }
    if hist_g != hist_h {
        return Ok(false);
    }

    // Map g's vertices one at a time, most-constrained (rarest color) first.
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|v| (hist_g[&cg[v]], cg[v], *v));
    let mut mapping: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut used: Vec<Vertex> = Vec::new();
    Ok(extend(g, h, &cg, &ch, &order, &mut mapping, &mut used))
}

fn extend(
    g: &Graph,
    h: &Graph,
    cg: &BTreeMap<Vertex, u64>,
    ch: &BTreeMap<Vertex, u64>,
    order: &[Vertex],
    mapping: &mut BTreeMap<Vertex, Vertex>,
    used: &mut Vec<Vertex>,
) -> bool {
    let Some(&v) = order.get(mapping.len()) else {
        return true;
    };
    for w in h.vertices() {
        if used.contains(&w) || ch[&w] != cg[&v] {
            continue;
        }
        let consistent = mapping
            .iter()
            .all(|(&a, &b)| g.has_edge(v, a) == h.has_edge(w, b));
        if !consistent {
            continue;
        }
        mapping.insert(v, w);
        used.push(w);
        if extend(g, h, cg, ch, order, mapping, used) {
            return true;
        }
        used.pop();
        mapping.remove(&v);
    }
    false
}

/// Canonical adjacency code: the lexicographically smallest upper-triangular
/// bit encoding over all relabelings consistent with color refinement. Equal
/// codes ⟺ isomorphic. Only intended for enumeration-scale graphs (n ≤ 11).
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= 11, "canonical code limited to 11 vertices");
    let color = refine_colors(g);
    let verts: Vec<Vertex> = g.vertices().collect();
    let mut perm: Vec<Vertex> = Vec::with_capacity(n);
    let mut best = u64::MAX;
    search_code(g, &color, &verts, &mut perm, &mut best);
    best
}

fn code_of(g: &Graph, perm: &[Vertex]) -> u64 {
    let mut code = 0u64;
    let mut bit = 0;
    for (i, &v) in perm.iter().enumerate() {
        for &u in &perm[..i] {
            if g.has_edge(u, v) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

fn search_code(
    g: &Graph,
    color: &BTreeMap<Vertex, u64>,
    verts: &[Vertex],
    perm: &mut Vec<Vertex>,
    best: &mut u64,
) {
    if perm.len() == verts.len() {
        *best = (*best).min(code_of(g, perm));
        return;
    }
    // Next position must take a vertex of the smallest color still available;
    // colors are isomorphism-invariant, so this prunes without losing the
    // canonical representative.
    let min_color = verts
        .iter()
        .filter(|v| !perm.contains(v))
        .map(|v| color[v])
        .min()
        .unwrap();
    for &v in verts {
        if color[&v] == min_color && !perm.contains(&v) {
            perm.push(v);
            search_code(g, color, verts, perm, best);
            perm.pop();
        }
    }
}
