//! Exhaustive search for internally disjoint path systems joining prescribed
//! branch vertices. This is the workhorse behind both the subdivision oracle
//! and the circuit finder: no structural pruning, so it can serve as ground
//! truth for cleverer code paths.

use crate::graph::{Graph, Vertex};
use std::collections::BTreeSet;

/// Enumerates systems of pairwise internally disjoint paths, one per slot
/// `(i, j)` connecting `branch[i]` to `branch[j]`, with interiors avoiding all
/// branch vertices. Paths for each slot are tried shortest first, neighbors in
/// ascending id order. The visitor returns `true` to stop; the function
/// returns `true` iff some visit stopped the search.
pub fn for_each_embedding(
    g: &Graph,
    branch: &[Vertex],
    slots: &[(usize, usize)],
    visit: &mut impl FnMut(&[Vec<Vertex>]) -> bool,
) -> bool {
    debug_assert!(branch.iter().all(|&v| g.has_vertex(v)));
    let mut used: BTreeSet<Vertex> = branch.iter().copied().collect();
    debug_assert_eq!(used.len(), branch.len(), "branch vertices repeat");
    let mut paths: Vec<Vec<Vertex>> = Vec::with_capacity(slots.len());
    fill_slot(g, branch, slots, &mut used, &mut paths, visit)
}

/// First embedding found, if any.
pub fn find_embedding(
    g: &Graph,
    branch: &[Vertex],
    slots: &[(usize, usize)],
) -> Option<Vec<Vec<Vertex>>> {
    let mut found = None;
    for_each_embedding(g, branch, slots, &mut |paths| {
        found = Some(paths.to_vec());
        true
    });
    found
}

fn fill_slot(
    g: &Graph,
    branch: &[Vertex],
    slots: &[(usize, usize)],
    used: &mut BTreeSet<Vertex>,
    paths: &mut Vec<Vec<Vertex>>,
    visit: &mut impl FnMut(&[Vec<Vertex>]) -> bool,
) -> bool {
    let Some(&(i, j)) = slots.get(paths.len()) else {
        return visit(paths);
    };
    let (a, b) = (branch[i], branch[j]);
    // Iterative deepening: all simple a–b paths of length exactly len, in
    // increasing len, so shorter realizations come first deterministically.
    let spare = g.vertex_count() - used.len();
    for len in 1..=spare + 1 {
        let mut prefix = vec![a];
        if extend_path(g, b, len, &mut prefix, used, |path, used| {
            paths.push(path.to_vec());
            let stop = fill_slot(g, branch, slots, used, paths, visit);
            paths.pop();
            stop
        }) {
            return true;
        }
    }
    false
}

/// Depth-first over simple paths from the prefix tip to `b` with exactly
/// `budget` more edges, interiors disjoint from `used`.
fn extend_path(
    g: &Graph,
    b: Vertex,
    budget: usize,
    prefix: &mut Vec<Vertex>,
    used: &mut BTreeSet<Vertex>,
    mut f: impl FnMut(&[Vertex], &mut BTreeSet<Vertex>) -> bool,
) -> bool {
    fn rec(
        g: &Graph,
        b: Vertex,
        budget: usize,
        prefix: &mut Vec<Vertex>,
        used: &mut BTreeSet<Vertex>,
        f: &mut impl FnMut(&[Vertex], &mut BTreeSet<Vertex>) -> bool,
    ) -> bool {
        let tip = *prefix.last().unwrap();
        if budget == 1 {
            if !g.has_edge(tip, b) {
                return false;
            }
            prefix.push(b);
            let stop = f(prefix, used);
            prefix.pop();
            return stop;
        }
        for u in g.neighbors(tip) {
            if used.contains(&u) {
                continue;
            }
            prefix.push(u);
            used.insert(u);
            let stop = rec(g, b, budget - 1, prefix, used, f);
            used.remove(&u);
            prefix.pop();
            if stop {
                return true;
            }
        }
        false
    }
    rec(g, b, budget, prefix, used, &mut f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{circuit, complete};

    #[test]
    fn single_edge_slot() {
        let g = complete(3);
        let paths = find_embedding(&g, &[0, 1], &[(0, 1)]).unwrap();
        assert_eq!(paths, vec![vec![0, 1]]);
    }

    #[test]
    fn circuit_splits_into_two_arcs() {
        let g = circuit(6);
        let paths = find_embedding(&g, &[0, 3], &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(paths.len(), 2);
        let all: BTreeSet<Vertex> = paths.iter().flatten().copied().collect();
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn counts_triangle_systems_in_k4() {
        // K₄ holds a circuit through any 3 vertices via 0 or 1 detours: the
        // plain triangle plus the three where one side routes through vertex 3.
        let g = complete(4);
        let mut count = 0;
        for_each_embedding(&g, &[0, 1, 2], &[(0, 1), (1, 2), (2, 0)], &mut |_| {
            count += 1;
            false
        });
        assert_eq!(count, 4);
    }

    #[test]
    fn shortest_first() {
        let mut g = complete(4);
        g.subdivide_edge(0, 1, 2);
        let p = find_embedding(&g, &[0, 1], &[(0, 1)]).unwrap();
        assert_eq!(p[0].len(), 3); // via vertex 2 or 3, not the long chain
    }

    #[test]
    fn infeasible_system() {
        // C₅ holds no K₄ subdivision.
        let g = circuit(5);
        let slots = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert!(find_embedding(&g, &[0, 1, 2, 3], &slots).is_none());
    }

    #[test]
    fn direct_edge_serves_two_slots() {
        // Internal disjointness does not forbid reusing a bare edge.
        let g = circuit(5);
        let paths =
            find_embedding(&g, &[0, 1, 2], &[(0, 1), (1, 2), (2, 0), (0, 1)]).unwrap();
        assert_eq!(paths[0], vec![0, 1]);
        assert_eq!(paths[3], vec![0, 1]);
    }
}
