//! Structural recognition of ASP and ASP-P graphs.
//!
//! The pipeline decomposes the input into receptacles and classifies each
//! virtually 3-connected receptacle. Skeletons with more than 6 vertices are
//! matched against the three structural families (K₃,ᵣ ⊆ G ⊆ D̃ᵣ;
//! Sᵣ ⊆ G ⊆ W̃ᵣ; fishponds); smaller skeletons go to the exhaustive oracle on
//! the thread-normalized graph. A graph in the D̃ᵣ family contains a
//! C₄-skeleton subdivision and is therefore ASP but not ASP-P; the other two
//! families are ASP-P.

use crate::connect::{is_triconnected, is_virtually_3connected};
use crate::error::Error;
use crate::graph::{Graph, Pair, Vertex};
use crate::oracle::{find_forbidden, ForbiddenWitness, ASPP_FORBIDDEN, ASP_FORBIDDEN};
use crate::receptacle::receptacles;
use crate::skeleton::{
    normalize_threads_with_map, skeleton_view, SkeletonView, ThreadContraction,
};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Sp,
    AspP,
    /// ASP but not ASP-P.
    Asp,
    NonAsp,
}

impl Verdict {
    /// Membership in the (weaker) ASP class.
    pub fn is_asp(self) -> bool {
        self != Verdict::NonAsp
    }

    pub fn is_asp_p(self) -> bool {
        matches!(self, Verdict::Sp | Verdict::AspP)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyTag {
    /// Skeleton of ≤ 6 vertices, decided by the oracle.
    SmallCase,
    /// K₃,ᵣ ⊆ G ⊆ D̃ᵣ, r ≥ 4.
    KE3rDr(u32),
    /// Sᵣ ⊆ G ⊆ W̃ᵣ, r ≥ 6.
    SrWr(u32),
    Fishpond,
    TruncatedCubic,
    /// G ≅ Wᵣ, r ≥ 6.
    Wheel(u32),
    /// K₃,ᵣ ⊆ G ⊆ Dᵣ in the 3-connected setting, r ≥ 4.
    K3rDr3conn(u32),
    Sp,
    NonAsp,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub verdict: Verdict,
    pub family: FamilyTag,
    /// Present for NonAsp verdicts whenever the normalized graph fits the
    /// oracle bound.
    pub witness: Option<ForbiddenWitness>,
    /// One entry per receptacle when classified through the pipeline.
    pub per_receptacle: Vec<Classification>,
}

impl Classification {
    fn leaf(verdict: Verdict, family: FamilyTag, witness: Option<ForbiddenWitness>) -> Self {
        Classification { verdict, family, witness, per_receptacle: Vec::new() }
    }
}

/// Splices normalized thread interiors back to their original length.
pub fn lift_witness(w: &ForbiddenWitness, contractions: &[ThreadContraction]) -> ForbiddenWitness {
    let mut out = w.clone();
    for path in &mut out.branch_paths {
        let mut lifted: Vec<Vertex> = Vec::with_capacity(path.len());
        for (i, &v) in path.iter().enumerate() {
            if let Some(c) = contractions.iter().find(|c| c.kept == v) {
                // kept vertices are 2-valent, so they are never path ends
                let prev = path[i - 1];
                if prev == c.endpoints.0 {
                    lifted.extend(&c.original_interior);
                } else {
                    debug_assert_eq!(prev, c.endpoints.1);
                    lifted.extend(c.original_interior.iter().rev());
                }
            } else {
                lifted.push(v);
            }
        }
        *path = lifted;
    }
    out
}

/// Oracle-backed classification of a thread-normalized graph; witness lifted
/// back to the original.
fn classify_by_oracle(g: &Graph, family: FamilyTag) -> Result<Classification, Error> {
    let (n, contractions) = normalize_threads_with_map(g);
    if let Some(w) = find_forbidden(&n, ASP_FORBIDDEN)? {
        let lifted = lift_witness(&w, &contractions);
        return Ok(Classification::leaf(Verdict::NonAsp, FamilyTag::NonAsp, Some(lifted)));
    }
    let verdict = if crate::oracle::is_sp(g) {
        Verdict::Sp
    } else if find_forbidden(&n, ASPP_FORBIDDEN)?.is_none() {
        Verdict::AspP
    } else {
        Verdict::Asp
    };
    let family = if verdict == Verdict::Sp { FamilyTag::Sp } else { family };
    Ok(Classification::leaf(verdict, family, None))
}

/// Matches K₃,ᵣ ⊆ G ⊆ D̃ᵣ, r ≥ 4: a 3-part of high skeleton degree joined
/// completely to an independent r-part, surplus edges and threads confined to
/// the 3-part triangle.
pub fn match_family_ke3r(view: &SkeletonView) -> Option<u32> {
    let a: BTreeSet<Vertex> = view
        .skeleton_vertices
        .iter()
        .copied()
        .filter(|v| view.star_degree[v] >= 4)
        .collect();
    if a.len() != 3 {
        return None;
    }
    let b: Vec<Vertex> = view.skeleton_vertices.difference(&a).copied().collect();
    let r = b.len() as u32;
    if r < 4 {
        return None;
    }
    for &v in &b {
        if view.star_degree[&v] != 3 || view.n1[&v] != a {
            return None;
        }
    }
    // threads only parallel to 3-part pairs, at most one each
    if view.threads.len() != view.windows.len() {
        return None;
    }
    if !view.windows.iter().all(|w| a.contains(&w.0) && a.contains(&w.1)) {
        return None;
    }
    Some(r)
}

/// Matches Sᵣ ⊆ G ⊆ W̃ᵣ, r ≥ 6: a hub with edge spokes to every other
/// skeleton vertex, the rest joined into a single circuit of links, threads
/// only along that circuit.
pub fn match_family_srwr(view: &SkeletonView) -> Option<u32> {
    let n = view.skeleton_vertices.len();
    let hub = view
        .skeleton_vertices
        .iter()
        .copied()
        .find(|v| view.star_degree[v] == n - 1)?;
    let r = (n - 1) as u32;
    if r < 6 {
        return None;
    }
    if !view.windows.iter().all(|w| !w.contains(hub)) {
        return None;
    }
    if view.threads.len() != view.windows.len() {
        return None;
    }
    // rim link graph: skeleton edges plus windows among the rim
    let mut rim = Graph::new();
    for &v in view.skeleton_vertices.iter().filter(|&&v| v != hub) {
        rim.add_vertex(v);
    }
    for &Pair(x, y) in view.skeleton_edges.iter().chain(&view.windows) {
        if x != hub && y != hub {
            rim.add_edge(x, y);
        }
    }
    let is_single_circuit = rim.vertex_count() >= 3
        && rim.is_connected()
        && rim.vertices().all(|v| rim.degree(v) == 2);
    is_single_circuit.then_some(r)
}

/// All skeleton triangles, as sorted vertex triples.
fn skeleton_triangles(view: &SkeletonView) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for &Pair(a, b) in &view.skeleton_edges {
        for &c in view.n1[&a].intersection(&view.n1[&b]) {
            if c > b {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Checks the fishpond conditions; `None` means fishpond, otherwise the
/// first violated condition. The numbering used in the diagnostics: the
/// skeleton must have maximum degree ≤ 4; (A.1) every vertex with star
/// degree ≥ 2 lies in a skeleton triangle; (A.2) no triangle edge carries a
/// parallel thread, each triangle has at least two vertices with |N(v)| = 3,
/// and a triangle with a higher-degree vertex satisfies the star-degree
/// pattern (2, 2, {2,4}); (A.3) every skeleton component has at most three
/// vertices, or maximum degree 3, or is a bowtie.
pub fn fishpond_violation(g: &Graph) -> Result<Option<String>, Error> {
    if !is_virtually_3connected(g) {
        return Err(Error::NotVirtuallyThreeConnected);
    }
    let view = skeleton_view(g);
    if view.star_degree.values().any(|&d| d > 4) {
        return Ok(Some("skeleton maximum degree exceeds 4".into()));
    }
    let triangles = skeleton_triangles(&view);
    // (A.1)
    for &v in &view.skeleton_vertices {
        if view.star_degree[&v] >= 2 && !triangles.iter().any(|t| t.contains(&v)) {
            return Ok(Some(format!("(A.1): vertex {v} with d* >= 2 outside all triangles")));
        }
    }
    // (A.2)
    for t in &triangles {
        let pairs = [
            Pair::new(t[0], t[1]),
            Pair::new(t[0], t[2]),
            Pair::new(t[1], t[2]),
        ];
        if let Some(p) = pairs.iter().find(|p| view.windows.contains(p)) {
            return Ok(Some(format!("(A.2): triangle edge {p} carries a parallel thread")));
        }
        // The two vertices of smallest neighborhood must have |N(v)| = 3, and
        // when the third exceeds 3 the triangle must be thread-heavy: the two
        // small vertices contribute nothing to the skeleton beyond the
        // triangle, and the big one is 2- or 4-valent there.
        let mut by_nbhd: Vec<Vertex> = t.to_vec();
        by_nbhd.sort_by_key(|&v| g.degree(v));
        let [x, y, z] = [by_nbhd[0], by_nbhd[1], by_nbhd[2]];
        if g.degree(x) != 3 || g.degree(y) != 3 {
            return Ok(Some(format!("(A.2): triangle {t:?} has fewer than two |N(v)|=3 vertices")));
        }
        if g.degree(z) > 3
            && (view.star_degree[&x] != 2
                || view.star_degree[&y] != 2
                || !matches!(view.star_degree[&z], 2 | 4))
        {
            return Ok(Some(format!(
                "(A.2): triangle {t:?} has |N({z})| > 3 but irregular skeleton degrees"
            )));
        }
    }
    // (A.3)
    let skel = view.skeleton_graph();
    for comp in skel.components() {
        if comp.len() <= 3 {
            continue;
        }
        let j = skel.induced(comp.iter().copied());
        if j.max_degree() == 3 {
            continue;
        }
        if is_bowtie(&j) {
            continue;
        }
        return Ok(Some(format!("(A.3): skeleton component {comp:?} has no admissible form")));
    }
    Ok(None)
}

/// Two edge-disjoint triangles sharing exactly one vertex.
fn is_bowtie(j: &Graph) -> bool {
    if j.vertex_count() != 5 || j.edge_count() != 6 {
        return false;
    }
    let mut degs: Vec<usize> = j.vertices().map(|v| j.degree(v)).collect();
    degs.sort_unstable();
    if degs != [2, 2, 2, 2, 4] {
        return false;
    }
    let center = j.vertices().find(|&v| j.degree(v) == 4).unwrap();
    let nbrs: Vec<Vertex> = j.neighbors(center).collect();
    // the four 2-valent vertices must pair into two triangle edges
    nbrs.iter()
        .map(|&u| j.neighbors(u).filter(|&w| w != center && nbrs.contains(&w)).count())
        .all(|c| c == 1)
}

pub fn is_fishpond(g: &Graph) -> Result<bool, Error> {
    Ok(fishpond_violation(g)?.is_none())
}

pub fn is_truncated_cubic(g: &Graph) -> bool {
    if g.vertex_count() == 0 || g.vertices().any(|v| g.degree(v) != 3) {
        return false;
    }
    g.vertices().all(|v| {
        let nbrs: Vec<Vertex> = g.neighbors(v).collect();
        let triangles = nbrs
            .iter()
            .enumerate()
            .flat_map(|(i, &x)| nbrs[..i].iter().map(move |&y| (x, y)))
            .filter(|&(x, y)| g.has_edge(x, y))
            .count();
        triangles == 1
    })
}

pub fn is_wheel(g: &Graph) -> Option<u32> {
    let n = g.vertex_count();
    if n < 4 {
        return None;
    }
    let hub = g.vertices().find(|&v| g.degree(v) == n - 1)?;
    let rim: Vec<Vertex> = g.vertices().filter(|&v| v != hub).collect();
    let rim_ok = rim
        .iter()
        .all(|&v| g.degree(v) == 3 && g.neighbors(v).filter(|u| rim.contains(u)).count() == 2)
        && g.induced(rim.iter().copied()).is_connected();
    rim_ok.then_some((n - 1) as u32)
}

/// Classifies a virtually 3-connected graph (structural families for
/// |V*| > 6, oracle
/// for small skeletons).
pub fn classify_v3c(g: &Graph) -> Result<Classification, Error> {
    if !is_virtually_3connected(g) {
        return Err(Error::NotVirtuallyThreeConnected);
    }
    let view = skeleton_view(g);
    if view.skeleton_vertices.is_empty() {
        // bare circuit (or a single edge)
        return Ok(Classification::leaf(Verdict::Sp, FamilyTag::Sp, None));
    }
    if view.skeleton_vertices.len() <= 6 {
        return classify_by_oracle(g, FamilyTag::SmallCase);
    }
    // extended simplicity: no parallel threads in the large-skeleton case
    let window_count = view.windows.len();
    let distinct_pairs: BTreeSet<Pair> = view
        .threads
        .iter()
        .filter_map(|t| t.window())
        .collect();
    if view.threads.len() != window_count || distinct_pairs.len() != window_count {
        return Err(Error::Unsupported(
            "parallel threads between the same skeleton pair are not supported here".into(),
        ));
    }
    if let Some(r) = match_family_ke3r(&view) {
        // contains a C₄-skeleton subdivision, hence not ASP-P
        return Ok(Classification::leaf(Verdict::Asp, FamilyTag::KE3rDr(r), None));
    }
    if let Some(r) = match_family_srwr(&view) {
        return Ok(Classification::leaf(Verdict::AspP, FamilyTag::SrWr(r), None));
    }
    if fishpond_violation(g)?.is_none() {
        return Ok(Classification::leaf(Verdict::AspP, FamilyTag::Fishpond, None));
    }
    let witness = oracle_witness(g)?;
    Ok(Classification::leaf(Verdict::NonAsp, FamilyTag::NonAsp, witness))
}

/// Witness from the normalized graph, or `None` past the oracle bound.
fn oracle_witness(g: &Graph) -> Result<Option<ForbiddenWitness>, Error> {
    let (n, contractions) = normalize_threads_with_map(g);
    match find_forbidden(&n, ASP_FORBIDDEN) {
        Ok(w) => Ok(w.map(|w| lift_witness(&w, &contractions))),
        Err(Error::SizeLimitExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Structural classification of a 3-connected graph.
pub fn classify_3connected(g: &Graph) -> Result<Classification, Error> {
    if !is_triconnected(g) {
        return Err(Error::NotTriconnected);
    }
    // Truncated cubics are ASP-P at every size (a 3-connected fishpond is a
    // truncated cubic graph), so the family tag takes precedence over the
    // small-case route.
    if is_truncated_cubic(g) {
        return Ok(Classification::leaf(Verdict::AspP, FamilyTag::TruncatedCubic, None));
    }
    if g.vertex_count() <= 6 {
        return classify_by_oracle(g, FamilyTag::SmallCase);
    }
    let view = skeleton_view(g);
    if let Some(r) = match_family_ke3r(&view) {
        return Ok(Classification::leaf(Verdict::Asp, FamilyTag::K3rDr3conn(r), None));
    }
    if let Some(r) = is_wheel(g) {
        if r >= 6 {
            return Ok(Classification::leaf(Verdict::AspP, FamilyTag::Wheel(r), None));
        }
    }
    let witness = oracle_witness(g)?;
    Ok(Classification::leaf(Verdict::NonAsp, FamilyTag::NonAsp, witness))
}

/// Full pipeline: receptacle decomposition, per-receptacle classification,
/// verdict combined across receptacles.
pub fn classify(g: &Graph) -> Result<Classification, Error> {
    let d = receptacles(g);
    let mut per = Vec::with_capacity(d.receptacles.len());
    let mut verdict = Verdict::Sp;
    for r in &d.receptacles {
        let c = if r.degenerate {
            Classification::leaf(Verdict::Sp, FamilyTag::Sp, None)
        } else {
            classify_v3c(&r.graph)?
        };
        verdict = verdict.max(c.verdict);
        per.push(c);
    }
    let family = match verdict {
        Verdict::Sp => FamilyTag::Sp,
        Verdict::NonAsp => FamilyTag::NonAsp,
        _ => per
            .iter()
            .find(|c| c.verdict == verdict)
            .map(|c| c.family.clone())
            .unwrap_or(FamilyTag::Sp),
    };
    let witness = if verdict == Verdict::NonAsp { oracle_witness(g)? } else { None };
    Ok(Classification { verdict, family, witness, per_receptacle: per })
}
