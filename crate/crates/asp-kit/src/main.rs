//! Command-line front end: classify, color, generate, verify.
//!
//! Exit codes for `classify`: 0 = in class, 1 = not in class, 2 = error.
//! `color` additionally uses 3 for the complete-graph exception.

use asp_kit::classify::{classify, Verdict};
use asp_kit::color::{brooks_color3, color_asp, color_aspp, is_k_colorable, ColorOutcome, Coloring};
use asp_kit::corpus::{random_asp_corpus, random_fishponds};
use asp_kit::enumerate::enumerate_small_graphs;
use asp_kit::error::Error;
use asp_kit::generators::{
    circuit, complete, d_graph, d_mod, petersen, prism, replace_edges, spoked, theta, wheel,
    wheel_mod, Gadget,
};
use asp_kit::graph::Graph;
use asp_kit::io::{parse_graph, to_dot, verdict_name, write_graph, Report};
use asp_kit::oracle::{find_forbidden, is_asp, is_asp_p, ASPP_FORBIDDEN, ASP_FORBIDDEN};
use asp_kit::skeleton::normalize_threads;
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "asp-kit", about = "Recognition, decomposition, and coloring of almost-series-parallel graphs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph file as SP / ASP-P / ASP / NonASP.
    Classify {
        input: PathBuf,
        /// Force the brute-force subdivision oracle instead of the pipeline.
        #[arg(long)]
        oracle: bool,
        /// Judge membership in ASP-P instead of ASP for the exit code.
        #[arg(long)]
        aspp: bool,
        /// Emit the report as one JSON record.
        #[arg(long)]
        json: bool,
        /// Write a DOT rendering (with witness highlighted) to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Color a graph file with the constructive algorithms or the exact solver.
    Color {
        input: PathBuf,
        /// Palette size: 3 (Brooks), 4 (ASP-P), 5 (ASP).
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=5))]
        k: u32,
        /// Run the exact solver for the given k instead.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        json: bool,
    },
    /// Write a named graph (or corpus) to graph files.
    Generate {
        /// Family: wheel R | wheel-mod R | spoked R | d R | d-mod R | complete N |
        /// circuit N | theta A B C | petersen | prism | gadget-y SEED |
        /// gadget-k5minus SEED | gadget-wheelminus-R SEED | corpus | fishponds
        /// (SEED among: c3, c5, k4).
        family: String,
        /// Numeric or seed-graph arguments, family dependent.
        args: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Exhaustively compare classifier, oracle, and normalization on small graphs.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Worker threads (0 = rayon default).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Classify { input, oracle, aspp, json, dot } => {
            let g = parse_graph(&std::fs::read_to_string(&input)?)?;
            let start = Instant::now();
            let c = if oracle {
                classify_by_oracle_only(&g)?
            } else {
                classify(&g)?
            };
            let elapsed = start.elapsed().as_millis();
            let report = Report::from_classification(&c, elapsed);
            if json {
                println!("{}", serde_json::to_string(&report).expect("report serializes"));
            } else {
                println!("verdict: {}", report.verdict);
                println!("family: {}", report.family);
                for (i, r) in report.receptacles.iter().enumerate() {
                    println!("receptacle {i}: {} ({})", r.verdict, r.family);
                }
                if let Some(w) = &report.witness {
                    println!("witness shape: {}", w.shape);
                    println!("witness branch vertices: {:?}", w.branch_vertices);
                    for p in &w.branch_paths {
                        println!("witness path: {p:?}");
                    }
                }
            }
            if let Some(path) = dot {
                std::fs::write(&path, to_dot(&g, c.witness.as_ref()))?;
            }
            let member = if aspp { c.verdict.is_asp_p() } else { c.verdict.is_asp() };
            Ok(ExitCode::from(u8::from(!member)))
        }
        Command::Color { input, k, exact, json } => {
            let g = parse_graph(&std::fs::read_to_string(&input)?)?;
            let (coloring, exception) = if exact {
                match is_k_colorable(&g, k) {
                    Some(c) => (c, false),
                    None => {
                        eprintln!("not {k}-colorable");
                        return Ok(ExitCode::from(1));
                    }
                }
            } else {
                match k {
                    3 => (brooks_color3(&g)?, false),
                    4 | 5 => {
                        let out = if k == 4 { color_aspp(&g)? } else { color_asp(&g)? };
                        let exception = matches!(out, ColorOutcome::Exception(_));
                        (out.coloring().clone(), exception)
                    }
                    _ => unreachable!("clap bounds k"),
                }
            };
            print_coloring(&coloring, exception, k, json);
            Ok(ExitCode::from(if exception { 3 } else { 0 }))
        }
        Command::Generate { family, args, seed, count, out } => {
            generate(&family, &args, seed, count, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max_n, jobs } => {
            if jobs > 0 {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build_global()
                    .map_err(|e| Error::Unsupported(e.to_string()))?;
            }
            verify(max_n)
        }
    }
}

/// Oracle-only classification of the normalized graph.
fn classify_by_oracle_only(g: &Graph) -> Result<asp_kit::classify::Classification, Error> {
    use asp_kit::classify::{Classification, FamilyTag};
    use asp_kit::oracle::is_sp;
    let n = normalize_threads(g);
    let witness = find_forbidden(&n, ASP_FORBIDDEN)?;
    let verdict = if witness.is_some() {
        Verdict::NonAsp
    } else if is_sp(&n) {
        Verdict::Sp
    } else if find_forbidden(&n, ASPP_FORBIDDEN)?.is_none() {
        Verdict::AspP
    } else {
        Verdict::Asp
    };
    let family = match verdict {
        Verdict::Sp => FamilyTag::Sp,
        Verdict::NonAsp => FamilyTag::NonAsp,
        _ => FamilyTag::SmallCase,
    };
    Ok(Classification { verdict, family, witness, per_receptacle: Vec::new() })
}

fn print_coloring(c: &Coloring, exception: bool, k: u32, json: bool) {
    if json {
        let record = serde_json::json!({
            "k": k,
            "palette_size": c.palette_size,
            "exception": exception,
            "coloring": c.assignment,
        });
        println!("{record}");
        return;
    }
    if exception {
        println!("exception: K{} requires {} colors", k + 1, k + 1);
    }
    for (v, col) in &c.assignment {
        println!("{v}:{col}");
    }
}

fn seed_graph(name: &str) -> Result<Graph, Error> {
    match name {
        "c3" => Ok(circuit(3)),
        "c5" => Ok(circuit(5)),
        "k4" => Ok(complete(4)),
        other => Err(Error::Unsupported(format!("unknown seed graph '{other}'"))),
    }
}

fn arg_num(args: &[String], i: usize) -> Result<u32, Error> {
    args.get(i)
        .ok_or_else(|| Error::Unsupported("missing numeric argument".into()))?
        .parse()
        .map_err(|_| Error::Unsupported(format!("bad numeric argument '{}'", args[i])))
}

fn generate(family: &str, args: &[String], seed: u64, count: usize, out: &std::path::Path) -> Result<(), Error> {
    std::fs::create_dir_all(out)?;
    let emit = |name: String, g: &Graph| -> Result<(), Error> {
        let path = out.join(format!("{name}.graph"));
        std::fs::write(&path, write_graph(g))?;
        println!("{}", path.display());
        Ok(())
    };
    match family {
        "wheel" => {
            let r = arg_num(args, 0)?;
            emit(format!("wheel-{r}"), &wheel(r))
        }
        "wheel-mod" => {
            let r = arg_num(args, 0)?;
            let subset: Vec<usize> = (0..r as usize).collect();
            emit(format!("wheel-mod-{r}"), &wheel_mod(r, &subset))
        }
        "spoked" => {
            let r = arg_num(args, 0)?;
            emit(format!("spoked-{r}"), &spoked(r, &vec![1; r as usize]))
        }
        "d" => {
            let r = arg_num(args, 0)?;
            emit(format!("d-{r}"), &d_graph(r))
        }
        "d-mod" => {
            let r = arg_num(args, 0)?;
            emit(format!("d-mod-{r}"), &d_mod(r))
        }
        "complete" => {
            let n = arg_num(args, 0)?;
            emit(format!("complete-{n}"), &complete(n))
        }
        "circuit" => {
            let n = arg_num(args, 0)?;
            emit(format!("circuit-{n}"), &circuit(n))
        }
        "theta" => {
            let (a, b, c) = (arg_num(args, 0)?, arg_num(args, 1)?, arg_num(args, 2)?);
            emit(format!("theta-{a}-{b}-{c}"), &theta(a as usize, b as usize, c as usize))
        }
        "petersen" => emit("petersen".into(), &petersen()),
        "prism" => emit("prism".into(), &prism()),
        "gadget-y" => {
            let name = args.first().map(String::as_str).unwrap_or("c3");
            let j = seed_graph(name)?;
            emit(format!("gadget-y-{name}"), &replace_edges(&j, Gadget::Y, None)?)
        }
        "gadget-k5minus" => {
            let name = args.first().map(String::as_str).unwrap_or("c3");
            let j = seed_graph(name)?;
            let skip = j.edges().first().copied().map(|e| (e.0, e.1));
            emit(format!("gadget-k5minus-{name}"), &replace_edges(&j, Gadget::K5Minus, skip)?)
        }
        f if f.starts_with("gadget-wheelminus-") => {
            let r: u32 = f["gadget-wheelminus-".len()..]
                .parse()
                .map_err(|_| Error::Unsupported(format!("bad wheel size in '{f}'")))?;
            let name = args.first().map(String::as_str).unwrap_or("k4");
            let j = seed_graph(name)?;
            emit(
                format!("gadget-wheelminus-{r}-{name}"),
                &replace_edges(&j, Gadget::WheelMinus(r), None)?,
            )
        }
        "corpus" => {
            let entries = random_asp_corpus(seed, count, 10..=200);
            let mut manifest = String::new();
            for (i, e) in entries.iter().enumerate() {
                let name = format!("corpus-{seed}-{i:04}");
                emit(name.clone(), &e.graph)?;
                manifest.push_str(&format!(
                    "{name} {} {}\n",
                    verdict_name(e.expected),
                    e.name
                ));
            }
            let path = out.join(format!("corpus-{seed}-labels.txt"));
            std::fs::write(&path, manifest)?;
            println!("{}", path.display());
            Ok(())
        }
        "fishponds" => {
            for (i, g) in random_fishponds(seed, count).iter().enumerate() {
                emit(format!("fishpond-{seed}-{i:04}"), g)?;
            }
            Ok(())
        }
        other => Err(Error::Unsupported(format!("unknown family '{other}'"))),
    }
}

fn verify(max_n: usize) -> Result<ExitCode, Error> {
    use rayon::prelude::*;
    let mut checked = 0usize;
    let mut mismatches = 0usize;
    for n in 1..=max_n {
        let graphs = enumerate_small_graphs(n)?;
        let bad: Vec<String> = graphs
            .par_iter()
            .filter_map(|g| {
                let c = match classify(g) {
                    Ok(c) => c,
                    Err(e) => return Some(format!("classify error on {g:?}: {e}")),
                };
                let oa = is_asp(g).ok()?;
                let op = is_asp_p(g).ok()?;
                if c.verdict.is_asp() != oa || c.verdict.is_asp_p() != op {
                    return Some(format!("verdict mismatch on {g:?}: pipeline {:?}", c.verdict));
                }
                let norm = normalize_threads(g);
                if is_asp(&norm).ok()? != oa || is_asp_p(&norm).ok()? != op {
                    return Some(format!("normalization changed the verdict on {g:?}"));
                }
                if c.verdict.is_asp() {
                    let out = match color_asp(g) {
                        Ok(o) => o,
                        Err(e) => return Some(format!("color error on {g:?}: {e}")),
                    };
                    let limit = if matches!(out, ColorOutcome::Exception(_)) { 6 } else { 5 };
                    let col = out.coloring();
                    if !col.is_proper_for(g) || col.palette_size > limit {
                        return Some(format!("bad coloring on {g:?}"));
                    }
                }
                None
            })
            .collect();
        checked += graphs.len();
        mismatches += bad.len();
        for b in bad.iter().take(5) {
            eprintln!("{b}");
        }
        println!("n = {n}: {} graphs checked, {} mismatches", graphs.len(), bad.len());
    }
    println!("total: {checked} graphs, {mismatches} mismatches");
    Ok(ExitCode::from(u8::from(mismatches > 0)))
}
