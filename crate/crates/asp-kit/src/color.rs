//! Vertex coloring: an exact branch-and-bound solver, constructive bounded
//! colorings for ASP (≤ 5 colors) and ASP-P (≤ 4 colors) graphs, Brooks
//! 3-coloring for subcubic graphs, direct family colorings, and the
//! boundary-pattern enumeration used by the hardness gadgets.

use crate::classify::{is_wheel, match_family_ke3r, match_family_srwr, FamilyTag};
use crate::connect::{cut_vertices, separation_pairs};
use crate::error::Error;
use crate::graph::{Graph, Pair, Vertex};
use crate::skeleton::skeleton_view;
use std::collections::{BTreeMap, BTreeSet};

/// A total proper vertex coloring with a declared palette size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    /// vertex → color index in `0..palette_size`
    pub assignment: BTreeMap<Vertex, u32>,
    pub palette_size: u32,
}

impl Coloring {
    pub fn from_assignment(assignment: BTreeMap<Vertex, u32>) -> Self {
        let palette_size = assignment.values().max().map_or(0, |&c| c + 1);
        Coloring { assignment, palette_size }
    }

    /// Total on the vertices of `g` and no monochromatic edge.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        g.vertices().all(|v| self.assignment.contains_key(&v))
            && g.edges().iter().all(|e| self.assignment[&e.0] != self.assignment[&e.1])
            && self.assignment.values().all(|&c| c < self.palette_size)
    }

    /// Renames colors into first-use order over ascending vertex ids, so
    /// equal graphs produce identical output regardless of the producing
    /// algorithm's internal choices.
    pub fn canonicalize(&mut self) {
        let mut rename: BTreeMap<u32, u32> = BTreeMap::new();
        for (_, c) in self.assignment.iter_mut() {
            let next = rename.len() as u32;
            let new = *rename.entry(*c).or_insert(next);
            *c = new;
        }
        self.palette_size = rename.len() as u32;
    }
}

/// Default size cap for the exact solver.
pub const EXACT_LIMIT: usize = 60;

/// Solver vertex order: descending degree, ties by identifier.
fn solver_order(g: &Graph) -> Vec<Vertex> {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
    order
}

/// Finds a proper coloring with at most `k` colors, or proves none exists.
/// Backtracking with a DSATUR-style dynamic vertex choice (max saturation,
/// then max degree, then min identifier) and first-use color symmetry
/// breaking.
pub fn is_k_colorable(g: &Graph, k: u32) -> Option<Coloring> {
    let verts: Vec<Vertex> = g.vertices().collect();
    let n = verts.len();
    if n == 0 {
        return Some(Coloring { assignment: BTreeMap::new(), palette_size: 0 });
    }
    if k == 0 {
        return None;
    }
    let index: BTreeMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj: Vec<Vec<usize>> =
        verts.iter().map(|&v| g.neighbors(v).map(|u| index[&u]).collect()).collect();
    let mut colors = vec![u32::MAX; n];
    // per-depth: which vertex was chosen, and the next candidate color for it
    let mut chosen = vec![usize::MAX; n];
    let mut next = vec![0u32; n];
    let mut pos = 0usize;
    loop {
        if chosen[pos] == usize::MAX {
            // most saturated uncolored vertex, ties by degree then identifier
            let pick = (0..n)
                .filter(|&i| colors[i] == u32::MAX)
                .max_by_key(|&i| {
                    let sat: BTreeSet<u32> =
                        adj[i].iter().map(|&j| colors[j]).filter(|&c| c != u32::MAX).collect();
                    (sat.len(), adj[i].len(), std::cmp::Reverse(verts[i]))
                })
                .expect("an uncolored vertex remains");
            chosen[pos] = pick;
            next[pos] = 0;
        }
        let i = chosen[pos];
        // max color used so far, for symmetry breaking
        let used = colors.iter().copied().filter(|&c| c != u32::MAX).max();
        let used = used.map_or(1, |c| c + 2).min(k);
        let mut c = next[pos];
        let found = loop {
            if c >= used {
                break None;
            }
            if adj[i].iter().all(|&j| colors[j] != c) {
                break Some(c);
            }
            c += 1;
        };
        match found {
            Some(c) => {
                colors[i] = c;
                next[pos] = c + 1;
                pos += 1;
                if pos == n {
                    let assignment =
                        verts.iter().copied().zip(colors.iter().copied()).collect();
                    let mut col = Coloring { assignment, palette_size: k };
                    col.canonicalize();
                    col.palette_size = col.palette_size.max(1);
                    return Some(col);
                }
            }
            None => {
                chosen[pos] = usize::MAX;
                if pos == 0 {
                    return None;
                }
                pos -= 1;
                colors[chosen[pos]] = u32::MAX;
            }
        }
    }
}

/// Greedy coloring along the solver order; an upper bound for χ.
fn greedy_bound(g: &Graph) -> u32 {
    let mut assignment: BTreeMap<Vertex, u32> = BTreeMap::new();
    let mut max = 0;
    for v in solver_order(g) {
        let taken: BTreeSet<u32> =
            g.neighbors(v).filter_map(|u| assignment.get(&u).copied()).collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        max = max.max(c + 1);
        assignment.insert(v, c);
    }
    max
}

/// Exact chromatic number by iterating the k-colorability test upward from
/// the clique lower bound.
pub fn chromatic_number_exact(g: &Graph, limit: usize) -> Result<u32, Error> {
    if g.vertex_count() > limit {
        return Err(Error::SizeLimitExceeded { size: g.vertex_count(), limit });
    }
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    let lb = g.max_clique() as u32;
    let ub = greedy_bound(g);
    for k in lb..ub {
        if is_k_colorable(g, k).is_some() {
            return Ok(k);
        }
    }
    Ok(ub)
}

/// Outcome of the bounded constructive colorings: either a coloring within
/// the theorem bound, or the single complete-graph exception (K₆ for ASP,
/// K₅ for ASP-P) together with its full coloring.
#[derive(Debug, Clone)]
pub enum ColorOutcome {
    Colored(Coloring),
    Exception(Coloring),
}

impl ColorOutcome {
    pub fn coloring(&self) -> &Coloring {
        match self {
            ColorOutcome::Colored(c) | ColorOutcome::Exception(c) => c,
        }
    }
}

fn is_complete(g: &Graph) -> bool {
    let n = g.vertex_count();
    2 * g.edge_count() == n * n.saturating_sub(1)
}

/// 5-colors an ASP graph other than K₆:
/// peel vertices of degree ≤ 4, split the residual δ ≥ 5 core at cut vertices
/// and separation pairs, and reject anything that survives all of that —
/// a 3-connected δ ≥ 5 non-K₆ core cannot occur in an ASP graph.
pub fn color_asp(g: &Graph) -> Result<ColorOutcome, Error> {
    let (assignment, exception) = color_bounded(g, 5)?;
    let mut c = Coloring::from_assignment(assignment);
    c.canonicalize();
    Ok(if exception { ColorOutcome::Exception(c) } else { ColorOutcome::Colored(c) })
}

/// 4-colors an ASP-P graph other than K₅: same skeleton as
/// [`color_asp`] with every threshold lowered by one.
pub fn color_aspp(g: &Graph) -> Result<ColorOutcome, Error> {
    let (assignment, exception) = color_bounded(g, 4).map_err(|e| match e {
        Error::NotAspInput => Error::NotAsppInput,
        other => other,
    })?;
    let mut c = Coloring::from_assignment(assignment);
    c.canonicalize();
    Ok(if exception { ColorOutcome::Exception(c) } else { ColorOutcome::Colored(c) })
}

/// Colors `g` with at most `k` colors — or `k + 1` when a complete core on
/// `k + 1` vertices turns up (the theorem exception, reported through the
/// boolean). Errors with `NotAspInput` when any other 3-connected core with
/// δ ≥ k survives.
fn color_bounded(g: &Graph, k: u32) -> Result<(BTreeMap<Vertex, u32>, bool), Error> {
    // peel low-degree vertices; they always have a free color on reinsertion
    let mut work = g.clone();
    let mut peeled: Vec<Vertex> = Vec::new();
    loop {
        let low = work.vertices().find(|&v| work.degree(v) <= (k - 1) as usize);
        match low {
            Some(v) => {
                work.remove_vertex(v);
                peeled.push(v);
            }
            None => break,
        }
    }
    let mut assignment: BTreeMap<Vertex, u32> = BTreeMap::new();
    let mut exception = false;
    for comp in work.components() {
        let core = work.induced(comp.iter().copied());
        let (sub, flag) = color_core(&core, k)?;
        exception |= flag;
        assignment.extend(sub);
    }
    for &v in peeled.iter().rev() {
        let taken: BTreeSet<u32> =
            g.neighbors(v).filter_map(|u| assignment.get(&u).copied()).collect();
        let c = (0..k).find(|c| !taken.contains(c)).expect("peeled vertex has a free color");
        assignment.insert(v, c);
    }
    Ok((assignment, exception))
}

/// Applies the color permutation sending `fixed` pairs (old → new) to a side
/// assignment, extending to a bijection on `0..k`.
fn permute_colors(map: &mut BTreeMap<Vertex, u32>, k: u32, fixed: &[(u32, u32)]) {
    let mut perm: BTreeMap<u32, u32> = fixed.iter().copied().collect();
    let used: BTreeSet<u32> = perm.values().copied().collect();
    let mut free = (0..k).filter(|c| !used.contains(c));
    for c in 0..k {
        if !perm.contains_key(&c) {
            let target = free.next().expect("permutation fills the palette");
            perm.insert(c, target);
        }
    }
    for (_, c) in map.iter_mut() {
        *c = perm[c];
    }
}

/// Connected core with δ ≥ k: the complete exception on k + 1 vertices, or
/// split at a cut vertex or separation pair.
fn color_core(g: &Graph, k: u32) -> Result<(BTreeMap<Vertex, u32>, bool), Error> {
    if is_complete(g) && g.vertex_count() == (k + 1) as usize {
        return Ok((g.vertices().zip(0..).collect(), true));
    }
    if let Some(&v) = cut_vertices(g).iter().next() {
        let mut rest = g.clone();
        rest.remove_vertex(v);
        let mut assignment: BTreeMap<Vertex, u32> = BTreeMap::new();
        let mut exception = false;
        for comp in rest.components() {
            let side = g.induced(comp.iter().copied().chain([v]));
            let (mut sub, flag) = color_bounded(&side, k)?;
            exception |= flag;
            let old = sub[&v];
            let anchor = *assignment.get(&v).unwrap_or(&old);
            permute_colors(&mut sub, k + flag as u32, &[(old, anchor)]);
            assignment.extend(sub);
        }
        return Ok((assignment, exception));
    }
    let Some(&Pair(x, y)) = separation_pairs(g).iter().next() else {
        // 3-connected with δ ≥ k and not the complete exception: by the
        // structure theorems no such graph is in the class
        return Err(Error::NotAspInput);
    };
    let mut rest = g.clone();
    rest.remove_vertex(x);
    rest.remove_vertex(y);
    let sides: Vec<Graph> = rest
        .components()
        .iter()
        .map(|comp| g.induced(comp.iter().copied().chain([x, y])))
        .collect();

    // pattern "different": each side with the x–y edge forced in
    let different: Option<Vec<(BTreeMap<Vertex, u32>, bool)>> = sides
        .iter()
        .map(|side| {
            let mut h = side.clone();
            h.add_edge(x, y);
            color_bounded(&h, k).ok()
        })
        .collect();
    if let Some(subs) = different {
        let mut assignment = BTreeMap::new();
        let mut exception = false;
        for (mut sub, flag) in subs {
            exception |= flag;
            let (ox, oy) = (sub[&x], sub[&y]);
            permute_colors(&mut sub, k + flag as u32, &[(ox, 0), (oy, 1)]);
            assignment.extend(sub);
        }
        return Ok((assignment, exception));
    }
    // pattern "same": identify x and y on each side
    if !g.has_edge(x, y) {
        let same: Option<Vec<(BTreeMap<Vertex, u32>, bool)>> = sides
            .iter()
            .map(|side| {
                let mut h = side.clone();
                h.identify(x, y);
                color_bounded(&h, k).ok()
            })
            .collect();
        if let Some(subs) = same {
            let mut assignment = BTreeMap::new();
            let mut exception = false;
            for (mut sub, flag) in subs {
                exception |= flag;
                let ox = sub[&x];
                permute_colors(&mut sub, k + flag as u32, &[(ox, 0)]);
                sub.insert(y, 0);
                assignment.extend(sub);
            }
            return Ok((assignment, exception));
        }
    }
    Err(Error::NotAspInput)
}

/// Brooks coloring for connected subcubic graphs other than K₄: three colors
/// always suffice.
pub fn brooks_color3(g: &Graph) -> Result<Coloring, Error> {
    if !g.is_connected() || g.vertex_count() == 0 {
        return Err(Error::Unsupported("brooks_color3 requires a connected graph".into()));
    }
    if g.max_degree() != 3 {
        return Err(Error::Unsupported("brooks_color3 requires maximum degree 3".into()));
    }
    if g.vertex_count() == 4 && is_complete(g) {
        return Err(Error::Unsupported("K4 is the Brooks exception at degree 3".into()));
    }
    let mut c = Coloring::from_assignment(brooks_rec(g)?);
    c.palette_size = c.palette_size.max(3).min(3);
    debug_assert!(c.is_proper_for(g));
    c.canonicalize();
    Ok(c)
}

fn brooks_rec(g: &Graph) -> Result<BTreeMap<Vertex, u32>, Error> {
    // non-regular: greedy on reverse BFS order from a low-degree root
    if let Some(root) = g.vertices().find(|&v| g.degree(v) < 3) {
        return Ok(greedy_from_root(g, g, root, &BTreeMap::new()));
    }
    // cubic with a cut vertex: both sides see the cut vertex at degree < 3
    if let Some(&v) = cut_vertices(g).iter().next() {
        let mut rest = g.clone();
        rest.remove_vertex(v);
        let mut assignment: BTreeMap<Vertex, u32> = BTreeMap::new();
        for comp in rest.components() {
            let side = g.induced(comp.iter().copied().chain([v]));
            let mut sub = brooks_rec(&side)?;
            let old = sub[&v];
            let anchor = *assignment.get(&v).unwrap_or(&old);
            permute_colors(&mut sub, 3, &[(old, anchor)]);
            assignment.extend(sub);
        }
        return Ok(assignment);
    }
    // 2-connected cubic, not K4: find v with nonadjacent neighbors a, b such
    // that g − {a,b} stays connected; color a and b alike, then greedy
    // towards v
    for v in g.vertices() {
        let nbrs: Vec<Vertex> = g.neighbors(v).collect();
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                let (a, b) = (nbrs[i], nbrs[j]);
                if g.has_edge(a, b) {
                    continue;
                }
                let mut h = g.clone();
                h.remove_vertex(a);
                h.remove_vertex(b);
                if !h.is_connected() {
                    continue;
                }
                let seed: BTreeMap<Vertex, u32> = [(a, 0), (b, 0)].into();
                let mut assignment = greedy_from_root(&h, g, v, &seed);
                assignment.insert(a, 0);
                assignment.insert(b, 0);
                return Ok(assignment);
            }
        }
    }
    Err(Error::Unsupported("no Brooks splitter found in a 2-connected cubic graph".into()))
}

/// Greedy 3-coloring of the vertices of `walk` in order of decreasing BFS
/// distance from `root`, so every vertex except the root keeps an uncolored
/// neighbor (its BFS parent) while being colored. Conflicts are checked
/// against `full`, whose extra vertices carry their colors in `seed`.
fn greedy_from_root(
    walk: &Graph,
    full: &Graph,
    root: Vertex,
    seed: &BTreeMap<Vertex, u32>,
) -> BTreeMap<Vertex, u32> {
    let mut order = vec![root];
    let mut seen: BTreeSet<Vertex> = [root].into();
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for u in walk.neighbors(v) {
            if seen.insert(u) {
                order.push(u);
            }
        }
    }
    let mut assignment: BTreeMap<Vertex, u32> = seed.clone();
    let mut result: BTreeMap<Vertex, u32> = BTreeMap::new();
    for &v in order.iter().rev() {
        let taken: BTreeSet<u32> =
            full.neighbors(v).filter_map(|u| assignment.get(&u).copied()).collect();
        let c = (0..3).find(|c| !taken.contains(c)).expect("Brooks greedy ran out of colors");
        assignment.insert(v, c);
        result.insert(v, c);
    }
    result
}

/// Direct colorings for the structural families, as certified by a
/// [`FamilyTag`] from classification.
pub fn color_family(g: &Graph, tag: FamilyTag) -> Result<Coloring, Error> {
    let mut coloring = match tag {
        FamilyTag::Sp => color_sp(g)?,
        FamilyTag::SmallCase => color_small_case(g)?,
        FamilyTag::Wheel(_) => color_wheel(g)?,
        FamilyTag::KE3rDr(_) | FamilyTag::K3rDr3conn(_) => color_ke3r(g)?,
        FamilyTag::SrWr(_) => color_srwr(g)?,
        FamilyTag::Fishpond | FamilyTag::TruncatedCubic => color_fishpond(g)?,
        FamilyTag::NonAsp => {
            return Err(Error::TagMismatch("NonAsp carries no coloring scheme".into()))
        }
    };
    coloring.canonicalize();
    if !coloring.is_proper_for(g) {
        return Err(Error::TagMismatch("family pattern produced an improper coloring".into()));
    }
    Ok(coloring)
}

/// Series-parallel graphs are 2-degenerate: peel and greedily reinsert.
fn color_sp(g: &Graph) -> Result<Coloring, Error> {
    let mut work = g.clone();
    let mut peeled = Vec::new();
    loop {
        let low = {
            let w = &work;
            w.vertices().find(|&v| w.degree(v) <= 2)
        };
        let Some(v) = low else { break };
        work.remove_vertex(v);
        peeled.push(v);
    }
    if work.vertex_count() > 0 {
        return Err(Error::TagMismatch("graph is not 2-degenerate".into()));
    }
    let mut assignment: BTreeMap<Vertex, u32> = BTreeMap::new();
    for &v in peeled.iter().rev() {
        let taken: BTreeSet<u32> =
            g.neighbors(v).filter_map(|u| assignment.get(&u).copied()).collect();
        let c = (0..3).find(|c| !taken.contains(c)).unwrap();
        assignment.insert(v, c);
    }
    Ok(Coloring::from_assignment(assignment))
}

/// Small skeleton: peel thread interiors (degree ≤ 2), exactly color the
/// residual core, reinsert greedily.
fn color_small_case(g: &Graph) -> Result<Coloring, Error> {
    let mut work = g.clone();
    let mut peeled = Vec::new();
    loop {
        let low = {
            let w = &work;
            w.vertices().find(|&v| w.degree(v) <= 2)
        };
        let Some(v) = low else { break };
        work.remove_vertex(v);
        peeled.push(v);
    }
    let chi = chromatic_number_exact(&work, EXACT_LIMIT)?;
    let core = is_k_colorable(&work, chi).expect("χ-coloring exists");
    let mut assignment = core.assignment;
    let palette = chi.max(3);
    for &v in peeled.iter().rev() {
        let taken: BTreeSet<u32> =
            g.neighbors(v).filter_map(|u| assignment.get(&u).copied()).collect();
        let c = (0..palette).find(|c| !taken.contains(c)).unwrap();
        assignment.insert(v, c);
    }
    Ok(Coloring::from_assignment(assignment))
}

/// Wheel: rim alternates two colors (three on an odd rim), hub takes the
/// next one.
fn color_wheel(g: &Graph) -> Result<Coloring, Error> {
    let Some(r) = is_wheel(g) else {
        return Err(Error::TagMismatch("not a wheel".into()));
    };
    let n = g.vertex_count();
    let hub = g.vertices().find(|&v| g.degree(v) == n - 1).unwrap();
    // walk the rim circuit
    let start = g.vertices().find(|&v| v != hub).unwrap();
    let mut cycle = vec![start];
    loop {
        let cur = *cycle.last().unwrap();
        match g.neighbors(cur).find(|&u| u != hub && !cycle.contains(&u)) {
            Some(u) => cycle.push(u),
            None => break,
        }
    }
    if cycle.len() != r as usize || !g.has_edge(*cycle.last().unwrap(), start) {
        return Err(Error::TagMismatch("rim is not a single circuit".into()));
    }
    let mut assignment: BTreeMap<Vertex, u32> = BTreeMap::new();
    for (i, &v) in cycle.iter().enumerate() {
        let c = if i + 1 == cycle.len() && i % 2 == 0 { 2 } else { (i % 2) as u32 };
        assignment.insert(v, c);
    }
    let hub_color = if r % 2 == 0 { 2 } else { 3 };
    assignment.insert(hub, hub_color);
    Ok(Coloring::from_assignment(assignment))
}

/// K₃,ᵣ ⊆ G ⊆ D̃ᵣ: the 3-part gets colors 0,1,2, the r-part color 3, thread
/// interiors greedily.
fn color_ke3r(g: &Graph) -> Result<Coloring, Error> {
    let view = skeleton_view(g);
    if match_family_ke3r(&view).is_none() {
        return Err(Error::TagMismatch("not in the K₃,ᵣ…D̃ᵣ family".into()));
    }
    let mut assignment: BTreeMap<Vertex, u32> = BTreeMap::new();
    let mut triangle_color = 0;
    for &v in &view.skeleton_vertices {
        if view.star_degree[&v] >= 4 {
            assignment.insert(v, triangle_color);
            triangle_color += 1;
        } else {
            assignment.insert(v, 3);
        }
    }
    color_thread_interiors(g, &view, &mut assignment, 4);
    Ok(Coloring::from_assignment(assignment))
}

/// Sᵣ ⊆ G ⊆ W̃ᵣ: rim alternates along the link circuit, hub on top, thread
/// interiors greedily.
fn color_srwr(g: &Graph) -> Result<Coloring, Error> {
    let view = skeleton_view(g);
    if match_family_srwr(&view).is_none() {
        return Err(Error::TagMismatch("not in the Sᵣ…W̃ᵣ family".into()));
    }
    let n = view.skeleton_vertices.len();
    let hub = *view
        .skeleton_vertices
        .iter()
        .find(|v| view.star_degree[v] == n - 1)
        .unwrap();
    // rim circuit over links (edges and windows)
    let mut rim = Graph::new();
    for &v in view.skeleton_vertices.iter().filter(|&&v| v != hub) {
        rim.add_vertex(v);
    }
    for &Pair(x, y) in view.skeleton_edges.iter().chain(&view.windows) {
        if x != hub && y != hub {
            rim.add_edge(x, y);
        }
    }
    let start = rim.vertices().next().unwrap();
    let mut cycle = vec![start];
    loop {
        let cur = *cycle.last().unwrap();
        match rim.neighbors(cur).find(|&u| !cycle.contains(&u)) {
            Some(u) => cycle.push(u),
            None => break,
        }
    }
    let mut assignment: BTreeMap<Vertex, u32> = BTreeMap::new();
    for (i, &v) in cycle.iter().enumerate() {
        let c = if i + 1 == cycle.len() && i % 2 == 0 { 2 } else { (i % 2) as u32 };
        assignment.insert(v, c);
    }
    assignment.insert(hub, if cycle.len() % 2 == 0 { 2 } else { 3 });
    color_thread_interiors(g, &view, &mut assignment, 4);
    Ok(Coloring::from_assignment(assignment))
}

/// Fishponds and truncated cubic graphs: Brooks (or a direct pattern) per
/// skeleton component, threads greedily.
fn color_fishpond(g: &Graph) -> Result<Coloring, Error> {
    let view = skeleton_view(g);
    let skel = view.skeleton_graph();
    let mut assignment: BTreeMap<Vertex, u32> = BTreeMap::new();
    for comp in skel.components() {
        let j = skel.induced(comp.iter().copied());
        if j.vertex_count() <= 3 {
            for (i, &v) in comp.iter().enumerate() {
                assignment.insert(v, i as u32);
            }
        } else if j.max_degree() == 3 {
            if is_complete(&j) {
                return Err(Error::TagMismatch("skeleton component is K4".into()));
            }
            let sub = brooks_color3(&j)?;
            assignment.extend(sub.assignment);
        } else {
            // bowtie: 4-valent center, two triangles
            let center = j.vertices().find(|&v| j.degree(v) == 4).ok_or_else(|| {
                Error::TagMismatch("skeleton component is neither subcubic nor a bowtie".into())
            })?;
            assignment.insert(center, 0);
            let mut wing_color = 1;
            let mut seen: BTreeSet<Vertex> = [center].into();
            for v in j.neighbors(center) {
                if seen.insert(v) {
                    assignment.insert(v, wing_color);
                    let partner = j
                        .neighbors(v)
                        .find(|&u| u != center && j.has_edge(u, center))
                        .ok_or_else(|| Error::TagMismatch("bowtie wing has no partner".into()))?;
                    seen.insert(partner);
                    assignment.insert(partner, wing_color + 1);
                    wing_color = 1;
                }
            }
        }
    }
    color_thread_interiors(g, &view, &mut assignment, 4);
    if !g.vertices().all(|v| assignment.contains_key(&v)) {
        return Err(Error::TagMismatch("unreached vertices outside skeleton and threads".into()));
    }
    Ok(Coloring::from_assignment(assignment))
}

/// Greedily colors thread interiors against their already-colored endpoints.
fn color_thread_interiors(
    g: &Graph,
    view: &crate::skeleton::SkeletonView,
    assignment: &mut BTreeMap<Vertex, u32>,
    palette: u32,
) {
    for t in &view.threads {
        for &v in &t.interior {
            let taken: BTreeSet<u32> =
                g.neighbors(v).filter_map(|u| assignment.get(&u).copied()).collect();
            let c = (0..palette).find(|c| !taken.contains(c)).unwrap();
            assignment.insert(v, c);
        }
    }
}

/// Feasible color relations for a boundary pair under proper k-coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BoundaryPattern {
    Same,
    Different,
}

/// Which of {same, different} boundary colorings extend to proper
/// k-colorings of `g`. Exact; the gadget-forcing primitive.
pub fn enumerate_colorings_boundary(
    g: &Graph,
    boundary: Pair,
    k: u32,
) -> Result<BTreeSet<BoundaryPattern>, Error> {
    const LIMIT: usize = 30;
    if g.vertex_count() > LIMIT {
        return Err(Error::SizeLimitExceeded { size: g.vertex_count(), limit: LIMIT });
    }
    let Pair(x, y) = boundary;
    let mut out = BTreeSet::new();
    let mut forced_diff = g.clone();
    forced_diff.add_edge(x, y);
    if is_k_colorable(&forced_diff, k).is_some() {
        out.insert(BoundaryPattern::Different);
    }
    if !g.has_edge(x, y) {
        let mut merged = g.clone();
        merged.identify(x, y);
        if is_k_colorable(&merged, k).is_some() {
            out.insert(BoundaryPattern::Same);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        circuit, complete, d_graph, d_mod, petersen, prism, replace_edges, spoked, truncate_cubic,
        wheel, wheel_mod, Gadget,
    };

    #[test]
    fn exact_spot_values() {
        assert_eq!(chromatic_number_exact(&complete(6), EXACT_LIMIT).unwrap(), 6);
        assert_eq!(chromatic_number_exact(&complete(5), EXACT_LIMIT).unwrap(), 5);
        assert_eq!(chromatic_number_exact(&prism(), EXACT_LIMIT).unwrap(), 3);
        assert_eq!(chromatic_number_exact(&wheel(6), EXACT_LIMIT).unwrap(), 3);
        assert_eq!(chromatic_number_exact(&wheel(7), EXACT_LIMIT).unwrap(), 4);
        assert_eq!(chromatic_number_exact(&d_graph(4), EXACT_LIMIT).unwrap(), 4);
        assert_eq!(chromatic_number_exact(&petersen(), EXACT_LIMIT).unwrap(), 3);
    }

    #[test]
    fn exact_edge_cases() {
        assert_eq!(chromatic_number_exact(&Graph::new(), EXACT_LIMIT).unwrap(), 0);
        let mut single = Graph::new();
        single.add_vertex(0);
        assert_eq!(chromatic_number_exact(&single, EXACT_LIMIT).unwrap(), 1);
        assert_eq!(chromatic_number_exact(&circuit(5), EXACT_LIMIT).unwrap(), 3);
        assert_eq!(chromatic_number_exact(&circuit(6), EXACT_LIMIT).unwrap(), 2);
        assert!(matches!(
            chromatic_number_exact(&complete(6), 5),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn colorings_are_proper_and_canonical() {
        let g = prism();
        let c = is_k_colorable(&g, 3).unwrap();
        assert!(c.is_proper_for(&g));
        // canonical: first-use order over vertex ids
        assert_eq!(c.assignment[&0], 0);
    }

    #[test]
    fn color_asp_basics() {
        match color_asp(&complete(6)).unwrap() {
            ColorOutcome::Exception(c) => assert_eq!(c.palette_size, 6),
            _ => panic!("K6 must be the exception"),
        }
        let g = prism();
        let out = color_asp(&g).unwrap();
        let ColorOutcome::Colored(c) = out else { panic!("prism is no exception") };
        assert!(c.is_proper_for(&g));
        assert!(c.palette_size <= 5);
    }

    #[test]
    fn color_asp_section7_construction() {
        // K₅⁻ on two of the three triangle edges: ASP and 5-chromatic
        let j = replace_edges(&circuit(3), Gadget::K5Minus, Some((1, 2))).unwrap();
        let out = color_asp(&j).unwrap();
        let ColorOutcome::Colored(c) = out else { panic!("not K6") };
        assert!(c.is_proper_for(&j));
        assert!(c.palette_size <= 5);
        assert_eq!(chromatic_number_exact(&j, EXACT_LIMIT).unwrap(), 5);
    }

    #[test]
    fn color_aspp_basics() {
        match color_aspp(&complete(5)).unwrap() {
            ColorOutcome::Exception(c) => assert_eq!(c.palette_size, 5),
            _ => panic!("K5 must be the exception"),
        }
        let c5 = circuit(5);
        let ColorOutcome::Colored(c) = color_aspp(&c5).unwrap() else { panic!() };
        assert!(c.is_proper_for(&c5));
        assert_eq!(c.palette_size, 3);
    }

    #[test]
    fn color_aspp_planar_section7() {
        // W₅⁻ (odd rim) on two triangle edges: planar, ASP-P, 4-chromatic
        let j = replace_edges(&circuit(3), Gadget::WheelMinus(5), Some((1, 2))).unwrap();
        let ColorOutcome::Colored(c) = color_aspp(&j).unwrap() else { panic!() };
        assert!(c.is_proper_for(&j));
        assert!(c.palette_size <= 4);
        assert_eq!(chromatic_number_exact(&j, EXACT_LIMIT).unwrap(), 4);
    }

    #[test]
    fn brooks_subcubic() {
        for g in [prism(), petersen(), truncate_cubic(&complete(4)).unwrap()] {
            let c = brooks_color3(&g).unwrap();
            assert!(c.is_proper_for(&g));
            assert!(c.palette_size <= 3);
        }
        assert!(brooks_color3(&complete(4)).is_err());
        assert!(brooks_color3(&wheel(5)).is_err());
    }

    #[test]
    fn brooks_with_cut_vertex() {
        // two triangles sharing a vertex via a path: cubic nowhere, still fine
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]);
        let c = brooks_color3(&g).unwrap();
        assert!(c.is_proper_for(&g));
        assert!(c.palette_size <= 3);
    }

    #[test]
    fn family_colorings() {
        let w6 = wheel(6);
        let c = color_family(&w6, FamilyTag::Wheel(6)).unwrap();
        assert!(c.is_proper_for(&w6));
        assert_eq!(c.palette_size, 3);

        let w7 = wheel(7);
        let c = color_family(&w7, FamilyTag::Wheel(7)).unwrap();
        assert!(c.is_proper_for(&w7));
        assert_eq!(c.palette_size, 4);

        let dm = d_mod(4);
        let c = color_family(&dm, FamilyTag::KE3rDr(4)).unwrap();
        assert!(c.is_proper_for(&dm));
        assert_eq!(c.palette_size, 4);

        let sp8 = spoked(8, &(0..8).collect::<Vec<_>>());
        let c = color_family(&sp8, FamilyTag::SrWr(8)).unwrap();
        assert!(c.is_proper_for(&sp8));
        assert!(c.palette_size <= 4);

        let wm = wheel_mod(6, &[0, 1, 2, 3, 4, 5]);
        let c = color_family(&wm, FamilyTag::SrWr(6)).unwrap();
        assert!(c.is_proper_for(&wm));
        assert!(c.palette_size <= 4);

        let tc = truncate_cubic(&prism()).unwrap();
        let c = color_family(&tc, FamilyTag::TruncatedCubic).unwrap();
        assert!(c.is_proper_for(&tc));
        assert!(c.palette_size <= 3);

        let theta = crate::generators::theta(2, 3, 4);
        let c = color_family(&theta, FamilyTag::Sp).unwrap();
        assert!(c.is_proper_for(&theta));
        assert!(c.palette_size <= 3);

        let k6 = complete(6);
        let c = color_family(&k6, FamilyTag::SmallCase).unwrap();
        assert!(c.is_proper_for(&k6));
        assert_eq!(c.palette_size, 6);

        assert!(color_family(&petersen(), FamilyTag::NonAsp).is_err());
        assert!(color_family(&petersen(), FamilyTag::Wheel(9)).is_err());
    }

    #[test]
    fn fishpond_family_coloring() {
        // total subdivision of W₆ is a fishpond
        let mut g = wheel(6);
        for e in g.edges() {
            g.subdivide_edge(e.0, e.1, 1);
        }
        let c = color_family(&g, FamilyTag::Fishpond).unwrap();
        assert!(c.is_proper_for(&g));
        assert!(c.palette_size <= 4);
    }

    #[test]
    fn boundary_patterns_k5_minus() {
        let (g, (x, y)) = Gadget::K5Minus.build();
        let pats = enumerate_colorings_boundary(&g, Pair::new(x, y), 4).unwrap();
        assert_eq!(pats, BTreeSet::from([BoundaryPattern::Same]));
    }

    #[test]
    fn boundary_patterns_y() {
        let (g, (x, y)) = Gadget::Y.build();
        let pats = enumerate_colorings_boundary(&g, Pair::new(x, y), 4).unwrap();
        assert_eq!(pats, BTreeSet::from([BoundaryPattern::Different]));
    }

    #[test]
    fn boundary_patterns_wheel_minus() {
        for r in [3u32, 5, 7] {
            let (g, (x, y)) = Gadget::WheelMinus(r).build();
            let pats = enumerate_colorings_boundary(&g, Pair::new(x, y), 3).unwrap();
            assert_eq!(pats, BTreeSet::from([BoundaryPattern::Same]), "r = {r}");
        }
        for r in [4u32, 6, 8] {
            let (g, (x, y)) = Gadget::WheelMinus(r).build();
            let pats = enumerate_colorings_boundary(&g, Pair::new(x, y), 3).unwrap();
            assert_eq!(pats, BTreeSet::from([BoundaryPattern::Different]), "r = {r}");
        }
    }

    #[test]
    fn boundary_size_limit() {
        let g = circuit(31);
        assert!(enumerate_colorings_boundary(&g, Pair::new(0, 2), 3).is_err());
    }

    #[test]
    fn exhaustive_small_color_bounds() {
        use crate::oracle::{find_forbidden, ASPP_FORBIDDEN, ASP_FORBIDDEN};
        for n in 1..=6 {
            for g in crate::enumerate::enumerate_small_graphs(n).unwrap() {
                if find_forbidden(&g, ASP_FORBIDDEN).unwrap().is_none() {
                    let out = color_asp(&g).unwrap();
                    assert!(out.coloring().is_proper_for(&g), "{g:?}");
                    match out {
                        ColorOutcome::Colored(c) => assert!(c.palette_size <= 5, "{g:?}"),
                        ColorOutcome::Exception(c) => {
                            assert_eq!(c.palette_size, 6, "{g:?}");
                            assert_eq!(g.max_clique(), 6, "{g:?}");
                        }
                    }
                }
                if find_forbidden(&g, ASPP_FORBIDDEN).unwrap().is_none() {
                    let out = color_aspp(&g).unwrap();
                    assert!(out.coloring().is_proper_for(&g), "{g:?}");
                    match out {
                        ColorOutcome::Colored(c) => assert!(c.palette_size <= 4, "{g:?}"),
                        ColorOutcome::Exception(c) => {
                            assert_eq!(c.palette_size, 5, "{g:?}");
                            assert_eq!(g.max_clique(), 5, "{g:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reduction_equivalence_y() {
        for seed in [circuit(3), circuit(5), complete(4)] {
            let j2 = replace_edges(&seed, Gadget::Y, None).unwrap();
            let lhs = chromatic_number_exact(&seed, EXACT_LIMIT).unwrap() <= 4;
            let rhs = chromatic_number_exact(&j2, EXACT_LIMIT).unwrap() <= 4;
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn reduction_equivalence_even_wheel() {
        for seed in [circuit(3), complete(4)] {
            let j2 = replace_edges(&seed, Gadget::WheelMinus(4), None).unwrap();
            let lhs = chromatic_number_exact(&seed, EXACT_LIMIT).unwrap() <= 3;
            let rhs = chromatic_number_exact(&j2, EXACT_LIMIT).unwrap() <= 3;
            assert_eq!(lhs, rhs, "seed χ = {}", chromatic_number_exact(&seed, EXACT_LIMIT).unwrap());
        }
    }
}
