//! Property-based checks: verdict invariance under thread-length changes,
//! subdivision invariance of series-parallelness, and the wheel sandwich
//! family.

use asp_kit::classify::{classify, FamilyTag};
use asp_kit::graph::{Graph, Pair, Vertex};
use asp_kit::oracle::{find_forbidden, is_sp, ASPP_FORBIDDEN, ASP_FORBIDDEN};
use asp_kit::skeleton::normalize_threads;
use proptest::prelude::*;

/// Random connected graph on up to `max_n` vertices (spanning tree + extras).
fn connected_graph(max_n: u32) -> impl Strategy<Value = Graph> {
    (3..=max_n)
        .prop_flat_map(|n| {
            let tree = proptest::collection::vec(any::<u32>(), (n - 1) as usize);
            let extra = proptest::collection::vec((0..n, 0..n), 0..=(n as usize));
            (Just(n), tree, extra)
        })
        .prop_map(|(n, tree, extra)| {
            let mut g = Graph::new();
            g.add_vertex(0);
            for v in 1..n {
                g.add_edge(v, tree[(v - 1) as usize] % v);
            }
            for (a, b) in extra {
                if a != b {
                    g.add_edge(a, b);
                }
            }
            g
        })
}

fn verdicts(g: &Graph) -> (bool, bool, bool) {
    (
        find_forbidden(g, ASP_FORBIDDEN).unwrap().is_none(),
        find_forbidden(g, ASPP_FORBIDDEN).unwrap().is_none(),
        is_sp(g),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Stretching a thread (subdividing an edge with a 2-valent endpoint)
    /// never changes any oracle verdict.
    #[test]
    fn thread_length_is_invisible(g in connected_graph(8), picks in proptest::collection::vec(any::<u64>(), 1..5)) {
        let before = verdicts(&g);
        let mut h = g.clone();
        for p in picks {
            let candidates: Vec<Pair> = h
                .edges()
                .into_iter()
                .filter(|&Pair(a, b)| h.degree(a) == 2 || h.degree(b) == 2)
                .collect();
            if candidates.is_empty() {
                break;
            }
            let Pair(a, b) = candidates[(p as usize) % candidates.len()];
            h.subdivide_edge(a, b, 1);
        }
        prop_assert_eq!(verdicts(&h), before);
        prop_assert_eq!(verdicts(&normalize_threads(&h)), before);
    }

    /// Series-parallelness is a topological property: subdividing any edge,
    /// thread or not, never changes it.
    #[test]
    fn sp_is_subdivision_invariant(g in connected_graph(8), picks in proptest::collection::vec(any::<u64>(), 1..4)) {
        let before = is_sp(&g);
        let mut h = g.clone();
        for p in picks {
            let edges = h.edges();
            let Pair(a, b) = edges[(p as usize) % edges.len()];
            h.subdivide_edge(a, b, 1);
        }
        prop_assert_eq!(is_sp(&h), before);
    }

    /// Every graph between Sᵣ and W̃ᵣ — each rim edge kept bare, replaced by
    /// a thread, or doubled with a parallel thread — lands in the SrWr family.
    #[test]
    fn wheel_sandwich_family(r in 6u32..=10, choices in proptest::collection::vec(0u8..3, 10), lens in proptest::collection::vec(1usize..4, 10)) {
        let hub: Vertex = 0;
        let mut g = Graph::new();
        for i in 0..r {
            g.add_edge(hub, i + 1);
        }
        let mut next = r + 1;
        for i in 0..r {
            let (a, b) = (i + 1, (i + 1) % r + 1);
            let choice = choices[i as usize];
            let len = lens[i as usize];
            if choice != 1 {
                g.add_edge(a, b);
            }
            if choice != 0 {
                // parallel (or replacing) thread of the chosen length
                let mut prev = a;
                for _ in 0..len {
                    g.add_edge(prev, next);
                    prev = next;
                    next += 1;
                }
                g.add_edge(prev, b);
            }
        }
        let c = classify(&g).unwrap();
        prop_assert_eq!(c.family, FamilyTag::SrWr(r));
        prop_assert!(c.verdict.is_asp_p());
    }
}
