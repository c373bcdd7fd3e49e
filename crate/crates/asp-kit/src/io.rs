//! Graph file format and structured reports.
//!
//! A graph file starts with a header line `n m`, followed by `m` edge lines
//! `u v` with 0-based vertex indices. Lines starting with `#` are comments.
//! Output is ASCII with LF line endings.

use crate::classify::{Classification, FamilyTag, Verdict};
use crate::error::Error;
use crate::graph::{Graph, Vertex};
use crate::oracle::ForbiddenWitness;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Parses the graph file format. Errors carry 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<Graph, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    let parse_two = |line: usize, s: &str| -> Result<(u32, u32), Error> {
        let mut it = s.split_whitespace();
        let mut next = || {
            it.next()
                .ok_or(Error::Parse { line, msg: "expected two integers".into() })?
                .parse::<u32>()
                .map_err(|e| Error::Parse { line, msg: e.to_string() })
        };
        let pair = (next()?, next()?);
        if it.next().is_some() {
            return Err(Error::Parse { line, msg: "trailing tokens".into() });
        }
        Ok(pair)
    };
    let (n, m) = parse_two(line, header)?;
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    let mut count = 0usize;
    for (line, l) in lines {
        let (u, v) = parse_two(line, l)?;
        if u >= n || v >= n {
            return Err(Error::Parse { line, msg: format!("vertex out of range (n = {n})") });
        }
        if u == v {
            return Err(Error::Parse { line, msg: format!("loop at vertex {u}") });
        }
        if g.has_edge(u, v) {
            return Err(Error::Parse { line, msg: format!("duplicate edge {u} {v}") });
        }
        g.add_edge(u, v);
        count += 1;
    }
    if count != m as usize {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("header announced {m} edges, found {count}"),
        });
    }
    Ok(g)
}

/// Writes the graph file format. Vertices are renumbered to 0..n in sorted
/// order when the identifiers are not already contiguous, so
/// `parse(write(g))` round-trips exactly for any parsed file.
pub fn write_graph(g: &Graph) -> String {
    let verts: Vec<Vertex> = g.vertices().collect();
    let index: BTreeMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut out = format!("{} {}\n", verts.len(), g.edge_count());
    for e in g.edges() {
        let (a, b) = (index[&e.0], index[&e.1]);
        let _ = writeln!(out, "{} {}", a.min(b), a.max(b));
    }
    out
}

/// Witness in report form: the four branch vertices and one path per slot.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub shape: String,
    pub branch_vertices: [Vertex; 4],
    pub branch_paths: Vec<Vec<Vertex>>,
}

impl From<&ForbiddenWitness> for WitnessReport {
    fn from(w: &ForbiddenWitness) -> Self {
        WitnessReport {
            shape: format!("{:?}", w.shape),
            branch_vertices: w.branch_vertices,
            branch_paths: w.branch_paths.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReceptacleReport {
    pub verdict: String,
    pub family: String,
}

/// Flat, schema-stable record for one graph.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub verdict: String,
    pub family: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub receptacles: Vec<ReceptacleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<BTreeMap<Vertex, u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub palette_size: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exception: Option<bool>,
    pub elapsed_ms: u128,
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Sp => "SP",
        Verdict::AspP => "ASP-P",
        Verdict::Asp => "ASP",
        Verdict::NonAsp => "NonASP",
    }
}

pub fn family_name(f: &FamilyTag) -> String {
    match f {
        FamilyTag::SmallCase => "SmallCase".into(),
        FamilyTag::KE3rDr(r) => format!("KE3rDr({r})"),
        FamilyTag::SrWr(r) => format!("SrWr({r})"),
        FamilyTag::Fishpond => "Fishpond".into(),
        FamilyTag::TruncatedCubic => "TruncatedCubic".into(),
        FamilyTag::Wheel(r) => format!("Wheel({r})"),
        FamilyTag::K3rDr3conn(r) => format!("K3rDr3conn({r})"),
        FamilyTag::Sp => "SP".into(),
        FamilyTag::NonAsp => "NonASP".into(),
    }
}

impl Report {
    pub fn from_classification(c: &Classification, elapsed_ms: u128) -> Self {
        Report {
            verdict: verdict_name(c.verdict).into(),
            family: family_name(&c.family),
            receptacles: c
                .per_receptacle
                .iter()
                .map(|r| ReceptacleReport {
                    verdict: verdict_name(r.verdict).into(),
                    family: family_name(&r.family),
                })
                .collect(),
            witness: c.witness.as_ref().map(WitnessReport::from),
            coloring: None,
            palette_size: None,
            exception: None,
            elapsed_ms,
        }
    }
}

/// DOT rendering of a graph, highlighting witness paths when present.
pub fn to_dot(g: &Graph, witness: Option<&ForbiddenWitness>) -> String {
    let mut out = String::from("graph {\n");
    let branch: Vec<Vertex> =
        witness.map(|w| w.branch_vertices.to_vec()).unwrap_or_default();
    let mut hot: Vec<(Vertex, Vertex)> = Vec::new();
    if let Some(w) = witness {
        for p in &w.branch_paths {
            for win in p.windows(2) {
                hot.push((win[0].min(win[1]), win[0].max(win[1])));
            }
        }
    }
    for v in g.vertices() {
        if branch.contains(&v) {
            let _ = writeln!(out, "  {v} [shape=doublecircle];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for e in g.edges() {
        let key = (e.0.min(e.1), e.0.max(e.1));
        if hot.contains(&key) {
            let _ = writeln!(out, "  {} -- {} [penwidth=2];", e.0, e.1);
        } else {
            let _ = writeln!(out, "  {} -- {};", e.0, e.1);
        }
    }
    out.push_str("}\n");
    out
}
