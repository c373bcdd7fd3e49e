//! Seeded random corpora: samples from the classification families with
//! random parameters and thread subsets, compositions glued along windows,
//! fishpond batches, and arbitrary small random graphs for normalization
//! checks. Everything is deterministic in the seed (ChaCha8).

use crate::classify::Verdict;
use crate::generators::{complete, petersen, prism, spoked, truncate_cubic, wheel, wheel_mod};
use crate::generators::{d_graph, d_mod};
use crate::graph::{Graph, Pair, Vertex};
use crate::skeleton::skeleton_view;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::ops::RangeInclusive;

/// A generated graph with the verdict its construction guarantees.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
    pub expected: Verdict,
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Subdivides every edge once. For a 3-connected input the result is a
/// fishpond: the skeleton has no edges, so every fishpond condition is
/// vacuous, and virtual 3-connectivity is inherited.
pub fn total_subdivision(g: &Graph) -> Graph {
    let mut out = g.clone();
    for Pair(a, b) in g.edges() {
        out.subdivide_edge(a, b, 1);
    }
    out
}

/// Stretches threads by subdividing edges with a 2-valent endpoint until the
/// graph reaches `target` vertices (or no such edge exists). Thread interior
/// lengths never affect the classification, so labels survive inflation.
fn inflate_threads(g: &mut Graph, target: usize, rng: &mut ChaCha8Rng) {
    while g.vertex_count() < target {
        let candidates: Vec<Pair> =
            g.edges().into_iter().filter(|&Pair(a, b)| g.degree(a) == 2 || g.degree(b) == 2).collect();
        let Some(&Pair(a, b)) = candidates.choose(rng) else { return };
        let room = target - g.vertex_count();
        g.subdivide_edge(a, b, rng.gen_range(1..=room.min(8)));
    }
}

/// Random 2-terminal series-parallel graph on roughly `target` vertices:
/// repeated series subdivisions and parallel 2-paths starting from one edge.
fn random_sp(target: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::from_edges(2, &[(0, 1)]);
    while g.vertex_count() < target {
        let Pair(a, b) = *g.edges().choose(rng).expect("sp graph has an edge");
        if rng.gen_bool(0.5) {
            g.subdivide_edge(a, b, 1);
        } else {
            // parallel branch of length 2 keeps the graph simple
            let mid = g.fresh_vertex();
            g.add_edge(a, mid);
            g.add_edge(mid, b);
        }
    }
    g
}

/// Cubic 3-connected ladders: circular (prism graph) or Möbius.
fn ladder(m: u32, moebius: bool) -> Graph {
    let mut g = Graph::new();
    for i in 0..m {
        g.add_edge(i, (i + 1) % m);
        g.add_edge(m + i, m + (i + 1) % m);
        g.add_edge(i, m + i);
    }
    if moebius {
        g.remove_edge(m - 1, 0);
        g.remove_edge(2 * m - 1, m);
        g.add_edge(m - 1, m);
        g.add_edge(2 * m - 1, 0);
    }
    g
}

/// Identifies a window of `a` with a window of `b` (disjointly relabeled).
/// Both receptacles keep their own structure — the partner's thread lands in
/// a degenerate polygon — so the combined verdict is the max of the parts.
fn glue_at_windows(a: &Graph, wa: Pair, b: &Graph, wb: Pair) -> Graph {
    let offset = a.fresh_vertex();
    let mut g = a.clone();
    let shifted = b.map_vertices(|v| v + offset);
    for v in shifted.vertices() {
        g.add_vertex(v);
    }
    for Pair(x, y) in shifted.edges() {
        g.add_edge(x, y);
    }
    g.identify(wa.0, wb.0 + offset);
    g.identify(wa.1, wb.1 + offset);
    g
}

fn random_window(g: &Graph, rng: &mut ChaCha8Rng) -> Option<Pair> {
    let view = skeleton_view(g);
    let ws: Vec<Pair> = view.windows.iter().copied().collect();
    ws.choose(rng).copied()
}

/// One sample from the structural classification families, sized to land in
/// `size_range`.
fn sample_family(rng: &mut ChaCha8Rng, size_range: &RangeInclusive<usize>, aspp_only: bool) -> CorpusEntry {
    let target = rng.gen_range(size_range.clone());
    let lo = *size_range.start();
    let kinds = if aspp_only { 0..6 } else { 0..8 };
    let kind = rng.gen_range(kinds);
    let (name, mut graph, expected) = match kind {
        0 => {
            // W̃ᵣ-sandwich: wheel plus threads parallel to a random rim subset
            let r = rng.gen_range(6..=(target.saturating_sub(2).max(7) as u32).min(80));
            let subset: Vec<usize> = (0..r as usize).filter(|_| rng.gen_bool(0.5)).collect();
            (format!("wheel_mod({r})"), wheel_mod(r, &subset), Verdict::AspP)
        }
        1 => {
            // Sᵣ-sandwich: subdivided wheel with random spoke/rim lengths
            let r = rng.gen_range(6..=40u32);
            let lens: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=4)).collect();
            (format!("spoked({r})"), spoked(r, &lens), Verdict::AspP)
        }
        2 => {
            let r = rng.gen_range(6..=(target.max(8) as u32 - 1).min(400));
            (format!("wheel({r})"), wheel(r), Verdict::AspP)
        }
        3 => {
            // truncated cubic graphs from cubic 3-connected stock
            let pick = rng.gen_range(0..3);
            let (n, base) = match pick {
                0 => {
                    let m = rng.gen_range(3..=(target / 6).max(4) as u32);
                    (format!("ladder({m})"), ladder(m, false))
                }
                1 => {
                    let m = rng.gen_range(3..=(target / 6).max(4) as u32);
                    (format!("moebius({m})"), ladder(m, true))
                }
                _ => ("petersen".into(), petersen()),
            };
            (format!("truncated({n})"), truncate_cubic(&base).expect("stock graph is cubic"), Verdict::AspP)
        }
        4 => {
            // fishponds: total subdivisions of 3-connected graphs
            let pick = rng.gen_range(0..4);
            let (n, base) = match pick {
                0 => {
                    let r = rng.gen_range(3..=(target / 3).max(4) as u32);
                    (format!("wheel({r})"), wheel(r))
                }
                1 => {
                    let k = rng.gen_range(4..=((target as f64).sqrt() as u32).max(5));
                    (format!("complete({k})"), complete(k))
                }
                2 => ("prism".into(), prism()),
                _ => {
                    let m = rng.gen_range(3..=(target / 6).max(4) as u32);
                    (format!("ladder({m})"), ladder(m, false))
                }
            };
            (format!("totalsub({n})"), total_subdivision(&base), Verdict::AspP)
        }
        5 => {
            let t = target.max(lo).max(4);
            ("sp".into(), random_sp(t, rng), Verdict::Sp)
        }
        6 => {
            let r = rng.gen_range(4..=(target.max(11) as u32 - 7).min(300));
            (format!("d_mod({r})"), d_mod(r), Verdict::Asp)
        }
        _ => {
            let r = rng.gen_range(4..=(target.max(11) as u32 - 7).min(300));
            (format!("d_graph({r})"), d_graph(r), Verdict::Asp)
        }
    };
    inflate_threads(&mut graph, target, rng);
    CorpusEntry { name, graph, expected }
}

fn random_corpus(seed: u64, count: usize, size_range: RangeInclusive<usize>, aspp_only: bool) -> Vec<CorpusEntry> {
    let mut rng = rng_for(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        // every fourth entry is a composition glued along windows
        if out.len() % 4 == 3 {
            let a = sample_family(&mut rng, &size_range, aspp_only);
            let b = sample_family(&mut rng, &size_range, aspp_only);
            if let (Some(wa), Some(wb)) = (random_window(&a.graph, &mut rng), random_window(&b.graph, &mut rng)) {
                let graph = glue_at_windows(&a.graph, wa, &b.graph, wb);
                if graph.vertex_count() <= *size_range.end() {
                    out.push(CorpusEntry {
                        name: format!("glue({},{})", a.name, b.name),
                        graph,
                        expected: a.expected.max(b.expected),
                    });
                    continue;
                }
            }
            out.push(a);
        } else {
            out.push(sample_family(&mut rng, &size_range, aspp_only));
        }
    }
    out
}

/// `count` ASP graphs with vertex counts in `size_range`, labels recorded
/// from the construction. Deterministic in `seed`.
pub fn random_asp_corpus(seed: u64, count: usize, size_range: RangeInclusive<usize>) -> Vec<CorpusEntry> {
    random_corpus(seed, count, size_range, false)
}

/// Like [`random_asp_corpus`] but restricted to ASP-P families.
pub fn random_aspp_corpus(seed: u64, count: usize, size_range: RangeInclusive<usize>) -> Vec<CorpusEntry> {
    random_corpus(seed, count, size_range, true)
}

/// `count` fishponds: total subdivisions of 3-connected graphs and truncated
/// cubic graphs, with randomly stretched threads.
pub fn random_fishponds(seed: u64, count: usize) -> Vec<Graph> {
    let mut rng = rng_for(seed);
    (0..count)
        .map(|i| {
            let mut g = if i % 2 == 0 {
                let base = match rng.gen_range(0..4) {
                    0 => wheel(rng.gen_range(3..=10)),
                    1 => complete(rng.gen_range(4..=7)),
                    2 => prism(),
                    _ => ladder(rng.gen_range(3..=8), rng.gen_bool(0.5)),
                };
                total_subdivision(&base)
            } else {
                let base = match rng.gen_range(0..3) {
                    0 => ladder(rng.gen_range(3..=8), false),
                    1 => ladder(rng.gen_range(3..=8), true),
                    _ => petersen(),
                };
                truncate_cubic(&base).expect("stock graph is cubic")
            };
            let target = g.vertex_count() + rng.gen_range(0..10);
            inflate_threads(&mut g, target, &mut rng);
            g
        })
        .collect()
}

/// `count` connected random graphs on at most `max_n` vertices, with some
/// edges subdivided so that thread normalization has work to do.
pub fn random_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = rng_for(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(4..=max_n.saturating_sub(3).max(5)) as Vertex;
            let mut g = Graph::new();
            g.add_vertex(0);
            // random spanning tree, then extra edges
            for v in 1..n {
                g.add_edge(v, rng.gen_range(0..v));
            }
            let extra = rng.gen_range(0..=n + n / 2);
            for _ in 0..extra {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                if a != b {
                    g.add_edge(a, b);
                }
            }
            while g.vertex_count() < max_n && rng.gen_bool(0.6) {
                let Pair(a, b) = *g.edges().choose(&mut rng).expect("tree has an edge");
                g.subdivide_edge(a, b, 1);
            }
            g
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::classify::is_fishpond;
    use crate::oracle::is_asp;

    #[test]
    fn corpora_are_deterministic() {
        let a = random_asp_corpus(7, 10, 10..=60);
        let b = random_asp_corpus(7, 10, 10..=60);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.graph, y.graph);
        }
        assert_ne!(
            random_graphs(1, 5, 14),
            random_graphs(2, 5, 14),
            "different seeds should differ"
        );
    }

    #[test]
    fn labels_match_classifier() {
        for e in random_asp_corpus(3, 40, 8..=80) {
            let c = classify(&e.graph).unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert_eq!(c.verdict, e.expected, "{}", e.name);
        }
        for e in random_aspp_corpus(4, 40, 8..=80) {
            assert!(e.expected.is_asp_p(), "{}", e.name);
            let c = classify(&e.graph).unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert_eq!(c.verdict, e.expected, "{}", e.name);
        }
    }

    #[test]
    fn small_entries_agree_with_oracle() {
        for e in random_asp_corpus(11, 60, 8..=40) {
            if e.graph.vertex_count() <= 14 {
                assert!(is_asp(&e.graph).unwrap(), "{}", e.name);
            }
        }
    }

    #[test]
    fn fishponds_are_fishponds() {
        for g in random_fishponds(0, 20) {
            assert!(is_fishpond(&g).unwrap());
        }
    }

    #[test]
    fn sizes_respected() {
        for e in random_asp_corpus(9, 30, 50..=500) {
            assert!(e.graph.vertex_count() <= 500, "{}", e.name);
        }
        for g in random_graphs(5, 50, 14) {
            assert!(g.vertex_count() <= 14);
            assert!(g.is_connected());
        }
    }
}
