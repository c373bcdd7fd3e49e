//! Receptacle decomposition: blocks, and within each 2-connected block the
//! triconnected components with their marked (virtual) edges subdivided into
//! unit threads.
//!
//! The block is first condensed to a link multigraph on its branch vertices
//! (links are bare edges or threads). Splitting at parallel classes and
//! separation pairs, then merging adjacent polygons, adjacent bonds, and
//! dissolving 2-link bonds, yields the canonical triconnected components.
//! Rigid and bond components realize as receptacles; polygons, bare circuits,
//! and bridges are degenerate (series-parallel by construction).

use crate::connect::{blocks, separation_pairs, Block};
use crate::error::Error;
use crate::graph::{Graph, Pair, Vertex};
use crate::oracle::{find_forbidden, SkeletonShape};
use crate::skeleton::{normalize_threads, skeleton_view};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq)]
enum LinkKind {
    Edge,
    /// Real thread; interior ordered from the smaller end.
    Thread(Vec<Vertex>),
    /// Marker edge created by a split; the id pairs the two twin copies.
    Virtual(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Link {
    ends: Pair,
    kind: LinkKind,
}

#[derive(Debug, Clone)]
struct Comp {
    links: Vec<Link>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CompClass {
    Bond,
    Polygon,
    Rigid,
}

impl Comp {
    fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.links.iter().flat_map(|l| [l.ends.0, l.ends.1]).collect()
    }

    fn simple_graph(&self) -> Graph {
        let mut g = Graph::new();
        for l in &self.links {
            g.add_edge(l.ends.0, l.ends.1);
        }
        g
    }

    fn class(&self) -> CompClass {
        if self.vertex_set().len() == 2 {
            return CompClass::Bond;
        }
        let mut deg: BTreeMap<Vertex, usize> = BTreeMap::new();
        for l in &self.links {
            *deg.entry(l.ends.0).or_default() += 1;
            *deg.entry(l.ends.1).or_default() += 1;
        }
        if deg.values().all(|&d| d == 2) {
            CompClass::Polygon
        } else {
            CompClass::Rigid
        }
    }
}

/// One receptacle of the decomposition.
#[derive(Debug, Clone)]
pub struct Receptacle {
    pub block_index: usize,
    /// Realized graph: real edges and threads plus a unit thread per virtual
    /// link.
    pub graph: Graph,
    /// Pairs of the receptacle's skeleton that disconnect the block.
    pub windows: BTreeSet<Pair>,
    pub extreme: bool,
    /// Polygons, bare circuits, bridges: series-parallel by construction and
    /// excluded from structural claims about receptacles.
    pub degenerate: bool,
    /// Interior vertices standing in for virtual links; not part of the host.
    pub virtual_interiors: BTreeSet<Vertex>,
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub host: Graph,
    pub blocks: Vec<Block>,
    pub receptacles: Vec<Receptacle>,
    /// Window pair → indices of receptacles carrying it.
    pub shared_windows: BTreeMap<Pair, Vec<usize>>,
}

/// Splits one component at parallel classes and separation pairs until only
/// bonds, polygons, and 3-connected (rigid) pieces remain.
fn split_phase(initial: Comp, next_id: &mut u32) -> Vec<Comp> {
    let mut stack = vec![initial];
    let mut done = Vec::new();
    while let Some(comp) = stack.pop() {
        let vset = comp.vertex_set();
        if vset.len() == 2 {
            done.push(comp);
            continue;
        }
        // parallel class split
        let mut classes: BTreeMap<Pair, Vec<usize>> = BTreeMap::new();
        for (i, l) in comp.links.iter().enumerate() {
            classes.entry(l.ends).or_default().push(i);
        }
        if let Some((&pair, idxs)) = classes.iter().find(|(_, v)| v.len() >= 2) {
            let id = *next_id;
            *next_id += 1;
            let mut bond = Comp {
                links: idxs.iter().map(|&i| comp.links[i].clone()).collect(),
            };
            bond.links.push(Link { ends: pair, kind: LinkKind::Virtual(id) });
            let mut rest = Comp {
                links: comp
                    .links
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !idxs.contains(i))
                    .map(|(_, l)| l.clone())
                    .collect(),
            };
            rest.links.push(Link { ends: pair, kind: LinkKind::Virtual(id) });
            stack.push(bond);
            stack.push(rest);
            continue;
        }
        // separation pair split
        let simple = comp.simple_graph();
        let Some(&sep) = separation_pairs(&simple).iter().next() else {
            done.push(comp);
            continue;
        };
        let avoid = BTreeSet::from([sep.0, sep.1]);
        let parts = simple.components_avoiding(&avoid);
        let mut bond_links = Vec::new();
        let mut part_comps: Vec<Comp> = parts.iter().map(|_| Comp { links: Vec::new() }).collect();
        for l in &comp.links {
            if l.ends == sep {
                bond_links.push(l.clone());
                continue;
            }
            let anchor = if avoid.contains(&l.ends.0) { l.ends.1 } else { l.ends.0 };
            let pi = parts.iter().position(|p| p.contains(&anchor)).unwrap();
            part_comps[pi].links.push(l.clone());
        }
        for pc in &mut part_comps {
            let id = *next_id;
            *next_id += 1;
            pc.links.push(Link { ends: sep, kind: LinkKind::Virtual(id) });
            bond_links.push(Link { ends: sep, kind: LinkKind::Virtual(id) });
        }
        stack.extend(part_comps);
        stack.push(Comp { links: bond_links });
    }
    done
}

/// Canonicalizes split output: dissolves 2-link pure-virtual bonds, merges
/// adjacent bonds and adjacent polygons across their shared virtual pair.
fn merge_phase(mut comps: Vec<Comp>) -> Vec<Comp> {
    loop {
        // locate each virtual id's two occurrences
        let mut occ: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (ci, c) in comps.iter().enumerate() {
            for l in &c.links {
                if let LinkKind::Virtual(id) = l.kind {
                    occ.entry(id).or_default().push(ci);
                }
            }
        }
        debug_assert!(occ.values().all(|v| v.len() == 2));

        // dissolve a bond that is nothing but two twin markers
        let dissolve = comps.iter().position(|c| {
            c.links.len() == 2 && c.links.iter().all(|l| matches!(l.kind, LinkKind::Virtual(_)))
        });
        if let Some(ci) = dissolve {
            let ids: Vec<u32> = comps[ci]
                .links
                .iter()
                .map(|l| match l.kind {
                    LinkKind::Virtual(id) => id,
                    _ => unreachable!(),
                })
                .collect();
            let (keep, drop) = (ids[0], ids[1]);
            let other = *occ[&drop].iter().find(|&&x| x != ci).unwrap();
            for l in &mut comps[other].links {
                if l.kind == LinkKind::Virtual(drop) {
                    l.kind = LinkKind::Virtual(keep);
                }
            }
            comps.remove(ci);
            continue;
        }

        // merge same-class neighbors
        let mut merge = None;
        'outer: for (&id, where_) in &occ {
            let (a, b) = (where_[0], where_[1]);
            if a != b && comps[a].class() == comps[b].class() && comps[a].class() != CompClass::Rigid
            {
                merge = Some((id, a, b));
                break 'outer;
            }
        }
        let Some((id, a, b)) = merge else {
            return comps;
        };
        let (lo, hi) = (a.min(b), a.max(b));
        let mut taken = comps.remove(hi);
        taken.links.retain(|l| l.kind != LinkKind::Virtual(id));
        comps[lo].links.retain(|l| l.kind != LinkKind::Virtual(id));
        comps[lo].links.append(&mut taken.links);
    }
}

/// Decomposes a graph into blocks and each block into receptacles.
pub fn receptacles(host: &Graph) -> Decomposition {
    let bls = blocks(host);
    let mut recs: Vec<Receptacle> = Vec::new();
    let mut fresh = host.fresh_vertex();
    let mut next_id = 0u32;

    for (bi, b) in bls.iter().enumerate() {
        let view = skeleton_view(&b.graph);
        if view.skeleton_vertices.is_empty() {
            // circuit, bridge, or isolated vertex
            recs.push(Receptacle {
                block_index: bi,
                graph: b.graph.clone(),
                windows: BTreeSet::new(),
                extreme: false,
                degenerate: true,
                virtual_interiors: BTreeSet::new(),
            });
            continue;
        }
        let mut links: Vec<Link> = view
            .skeleton_edges
            .iter()
            .map(|&e| Link { ends: e, kind: LinkKind::Edge })
            .collect();
        for t in &view.threads {
            assert_ne!(t.endpoints.0, t.endpoints.1, "closed thread in a 2-connected block");
            links.push(Link {
                ends: Pair::new(t.endpoints.0, t.endpoints.1),
                kind: LinkKind::Thread(t.interior.clone()),
            });
        }
        let comps = merge_phase(split_phase(Comp { links }, &mut next_id));
        for comp in comps {
            let class = comp.class();
            let mut g = Graph::new();
            let mut windows = BTreeSet::new();
            let mut virtual_interiors = BTreeSet::new();
            for l in &comp.links {
                match &l.kind {
                    LinkKind::Edge => g.add_edge(l.ends.0, l.ends.1),
                    LinkKind::Thread(interior) => {
                        let mut prev = l.ends.0;
                        for &w in interior {
                            g.add_edge(prev, w);
                            prev = w;
                        }
                        g.add_edge(prev, l.ends.1);
                        windows.insert(l.ends);
                    }
                    LinkKind::Virtual(_) => {
                        let w = fresh;
                        fresh += 1;
                        g.add_edge(l.ends.0, w);
                        g.add_edge(w, l.ends.1);
                        virtual_interiors.insert(w);
                        windows.insert(l.ends);
                    }
                }
            }
            let degenerate = class == CompClass::Polygon;
            if degenerate {
                windows.clear();
            } else {
                // A host edge lying parallel to a window belongs to this
                // receptacle as well (two receptacles may share an edge): a
                // forbidden structure can use it as a bare branch-path, which
                // the window thread alone cannot represent.
                for w in &windows {
                    if host.has_edge(w.0, w.1) {
                        g.add_edge(w.0, w.1);
                    }
                }
            }
            recs.push(Receptacle {
                block_index: bi,
                extreme: !degenerate && windows.len() == 1,
                graph: g,
                windows,
                degenerate,
                virtual_interiors,
            });
        }
    }

    let mut shared: BTreeMap<Pair, Vec<usize>> = BTreeMap::new();
    for (i, r) in recs.iter().enumerate() {
        for &w in &r.windows {
            shared.entry(w).or_default().push(i);
        }
    }
    Decomposition {
        host: host.clone(),
        blocks: bls,
        receptacles: recs,
        shared_windows: shared,
    }
}

/// Per-receptacle verdicts for a forbidden shape set, plus their conjunction.
#[derive(Debug, Clone)]
pub struct ReceptacleCheck {
    pub member: bool,
    pub verdicts: Vec<bool>,
}

/// Membership through the decomposition rule: the graph avoids the forbidden
/// shapes iff every receptacle does. Receptacle graphs are thread-normalized
/// before the exhaustive check.
pub fn is_asp_via_receptacles(
    g: &Graph,
    forbidden: &[SkeletonShape],
) -> Result<ReceptacleCheck, Error> {
    let d = receptacles(g);
    let mut verdicts = Vec::with_capacity(d.receptacles.len());
    let mut member = true;
    for r in &d.receptacles {
        let ok = r.degenerate
            || find_forbidden(&normalize_threads(&r.graph), forbidden)?.is_none();
        member &= ok;
        verdicts.push(ok);
    }
    Ok(ReceptacleCheck { member, verdicts })
}
