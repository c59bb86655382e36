//! `egr`: searches, certificates and geometric checks from the command line.
//!
//! Exit codes: 0 when the check passes or the search decides the instance,
//! 1 when a property is violated, a counterexample turns up, or a budget
//! runs out, 2 on usage and format errors.

mod real;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use egr_core::euclid::{
    falsify_strip, grid_lattice_embedding, rainbow_segment, segment_iteration_bound, simplex_midpoint_embedding,
    t_gadget, verify_t_gadget_with, write_configuration, ColoringOracle, HalfPlane, StripColoring,
};
use egr_core::graph::{parse_edge_certificate, search_good_edge_coloring, write_edge_certificate};
use egr_core::grid::parse_grid_certificate;
use egr_core::sat::{check_model_against_cnf, decode_model, encode_grid_cnf, parse_dimacs, parse_model, write_dimacs};
use egr_core::search::{parse_search_certificate, write_search_certificate};
use egr_core::{search_good_coloring, GridColoring, OutcomeKind, SearchOptions, Target};

use real::parse_real;

#[derive(Parser, Debug)]
#[command(name = "egr", version, about = "Gallai-Ramsey style searches and Euclidean checks", propagate_version = true)]
struct Cli {
    /// Worker threads for the search engines; never changes a verdict.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1024))]
    workers: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Search for an r-coloring of the n x m grid with no monochromatic and no rainbow rectangle.
    GridSearch {
        n: usize,
        m: usize,
        r: u32,
        /// Stop after this many search nodes.
        #[arg(long)]
        budget: Option<u64>,
        /// Write the outcome certificate here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a grid certificate, or an outcome certificate (exhausted claims are re-searched).
    GridVerify { file: PathBuf },
    /// Write the CNF encoding of the grid problem in DIMACS form.
    SatExport {
        n: usize,
        m: usize,
        r: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a solver model (or UNSAT answer) against a DIMACS file.
    SatCheck {
        file: PathBuf,
        #[arg(long)]
        model: PathBuf,
    },
    /// Least t such that every r-coloring of K_t has a rainbow triangle or a monochromatic target.
    GrSearch {
        target: Target,
        r: u32,
        #[arg(long, default_value_t = 10)]
        tmax: usize,
        #[arg(long)]
        budget: Option<u64>,
        /// Write the largest good coloring found as an edge certificate.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check an edge-coloring certificate for rainbow triangles and a monochromatic target.
    GraphVerify { file: PathBuf, target: Target },
    /// Build and check one of the explicit embeddings.
    Embed {
        #[command(subcommand)]
        kind: EmbedKind,
    },
    /// Exhaustively check the nine-point T-triangle gadget.
    GadgetVerify {
        /// List the T-congruent triples.
        #[arg(long)]
        verbose: bool,
    },
    /// Sample random placements of an a x b rectangle against the r-strip coloring.
    StripFalsify {
        r: u32,
        #[arg(value_parser = parse_real)]
        a: f64,
        #[arg(value_parser = parse_real)]
        b: f64,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Turn a two-colored pair C, D into a two-colored pair at distance d.
    RainbowSegment {
        #[arg(long, value_parser = parse_real)]
        d: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        cx: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        cy: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        dx: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        dy: f64,
        #[arg(long, value_enum, default_value_t = OracleKind::Halfplane)]
        oracle: OracleKind,
        /// Half-plane normal and offset: color 1 where nx*x + ny*y < offset.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real, default_value = "1")]
        nx: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real, default_value = "0")]
        ny: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real, default_value = "0")]
        offset: f64,
        /// Strip count and width for the strip oracle.
        #[arg(long, default_value_t = 3)]
        strips: u32,
        #[arg(long, value_parser = parse_real, default_value = "1")]
        width: f64,
        #[arg(long)]
        max_iter: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum EmbedKind {
    /// The (2r+5) x (11r+1) rectangle lattice.
    Lattice {
        r: usize,
        #[arg(value_parser = parse_real)]
        a: f64,
        #[arg(value_parser = parse_real)]
        b: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Edge midpoints of the regular simplex, standing for the edges of K_t.
    Simplex {
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OracleKind {
    Halfplane,
    Strip,
}

/// How a command ended.
enum Status {
    Pass,
    Fail,
}

type Outcome = Result<Status, String>;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn fail_on<T>(r: egr_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn options(workers: u64, budget: Option<u64>) -> Result<SearchOptions, String> {
    let mut opts = SearchOptions::default().with_workers(workers as usize);
    if let Some(b) = budget {
        if b == 0 {
            return Err("--budget must be positive".into());
        }
        opts = opts.with_budget(b);
    }
    Ok(opts)
}

fn report_grid(g: &GridColoring) -> Status {
    let rep = g.verify_good();
    if rep.is_good {
        println!("good n={} m={} r={}", g.rows(), g.cols(), g.colors());
        return Status::Pass;
    }
    let mut line = format!("bad n={} m={} r={}", g.rows(), g.cols(), g.colors());
    if let Some(w) = rep.mono_witness {
        let _ = write!(line, "; monochromatic rectangle {w} color {}", g.get(w.i, w.j));
    }
    if let Some(w) = rep.rainbow_witness {
        let _ = write!(line, "; rainbow rectangle {w}");
    }
    println!("{line}");
    Status::Fail
}

fn grid_search(workers: u64, n: usize, m: usize, r: u32, budget: Option<u64>, out: Option<PathBuf>) -> Outcome {
    if n == 0 || m == 0 || r == 0 {
        return Err("n, m and r must be positive".into());
    }
    let res = search_good_coloring(n, m, r, &options(workers, budget)?);
    println!("outcome {} n={n} m={m} r={r} nodes={}", res.kind, res.nodes_visited);
    if let Some(path) = out {
        write(&path, &write_search_certificate(n, m, r, &res))?;
    }
    Ok(match res.kind {
        OutcomeKind::BudgetExceeded => Status::Fail,
        _ => Status::Pass,
    })
}

fn grid_verify(workers: u64, file: &Path) -> Outcome {
    let text = read(file)?;
    let first = text.split_whitespace().next().unwrap_or("");
    match first {
        "grid" => Ok(report_grid(&fail_on(parse_grid_certificate(&text))?)),
        "outcome" => {
            let cert = fail_on(parse_search_certificate(&text))?;
            let (n, m, r) = (cert.n, cert.m, cert.r);
            match cert.kind {
                OutcomeKind::Found => Ok(report_grid(cert.witness.as_ref().expect("found certificates carry a grid"))),
                OutcomeKind::Exhausted => {
                    let res = search_good_coloring(n, m, r, &options(workers, None)?);
                    if res.is_exhausted() {
                        println!("exhausted confirmed n={n} m={m} r={r} nodes={}", res.nodes_visited);
                        Ok(Status::Pass)
                    } else {
                        println!("exhausted claim refuted n={n} m={m} r={r}: a good coloring exists");
                        Ok(Status::Fail)
                    }
                }
                OutcomeKind::BudgetExceeded => {
                    println!("undecided n={n} m={m} r={r}: certificate records an exceeded budget");
                    Ok(Status::Fail)
                }
            }
        }
        other => Err(format!("{}: expected a `grid` or `outcome` header, found {other:?}", file.display())),
    }
}

fn sat_export(n: usize, m: usize, r: u32, out: &Path) -> Outcome {
    let cnf = fail_on(encode_grid_cnf(n, m, r))?;
    write(out, &write_dimacs(&cnf))?;
    println!("cnf n={n} m={m} r={r} vars={} clauses={}", cnf.num_vars(), cnf.clauses().len());
    Ok(Status::Pass)
}

fn sat_check(workers: u64, file: &Path, model: &Path) -> Outcome {
    let cnf = fail_on(parse_dimacs(&read(file)?))?;
    let model_text = read(model)?;
    if model_text.lines().any(|l| l.trim() == "s UNSATISFIABLE") {
        let Some((n, m, r)) = cnf.grid_instance() else {
            println!("unsat answer; no grid instance recorded, nothing to compare");
            return Ok(Status::Pass);
        };
        let res = search_good_coloring(n, m, r, &options(workers, None)?);
        println!("unsat answer; engine outcome {} n={n} m={m} r={r}", res.kind);
        return Ok(if res.is_exhausted() { Status::Pass } else { Status::Fail });
    }
    let assignment = fail_on(parse_model(&model_text, cnf.num_vars()))?;
    if !fail_on(check_model_against_cnf(&cnf, &assignment))? {
        println!("model violates the formula");
        return Ok(Status::Fail);
    }
    match cnf.grid_instance() {
        None => println!("model satisfies all {} clauses", cnf.clauses().len()),
        Some((n, m, r)) => match decode_model(n, m, r, &assignment) {
            Ok(_) => println!("model satisfies all {} clauses; decoded coloring is good n={n} m={m} r={r}", cnf.clauses().len()),
            Err(e) => {
                println!("model satisfies the formula but decoding failed: {e}");
                return Ok(Status::Fail);
            }
        },
    }
    Ok(Status::Pass)
}

fn gr_search(workers: u64, target: Target, r: u32, tmax: usize, budget: Option<u64>, out: Option<PathBuf>) -> Outcome {
    if r == 0 || !(3..=64).contains(&tmax) {
        return Err("need r >= 1 and 3 <= --tmax <= 64".into());
    }
    let opts = options(workers, budget)?;
    let mut best = None;
    for t in 3..=tmax {
        let res = search_good_edge_coloring(t, r, target, &opts);
        match res.kind {
            OutcomeKind::Found => best = res.witness,
            OutcomeKind::Exhausted => {
                println!("gr={t}");
                if let (Some(path), Some(w)) = (out, &best) {
                    write(&path, &write_edge_certificate(w))?;
                }
                return Ok(Status::Pass);
            }
            OutcomeKind::BudgetExceeded => {
                println!("undecided at t={t}: node budget exhausted");
                return Ok(Status::Fail);
            }
        }
    }
    println!("gr>{tmax}");
    Ok(Status::Fail)
}

fn graph_verify(file: &Path, target: Target) -> Outcome {
    let ec = fail_on(parse_edge_certificate(&read(file)?))?;
    let mut line = format!("K{} r={}", ec.vertices(), ec.colors());
    let mut bad = false;
    if let Some(w) = ec.find_rainbow_triangle() {
        bad = true;
        let _ = write!(line, "; rainbow triangle {:?} colors {:?}", w.vertices, w.colors);
    }
    if ec.vertices() >= 4 {
        if let Some(w) = fail_on(ec.find_mono_subgraph(target))? {
            bad = true;
            let _ = write!(line, "; monochromatic {target} {:?} color {}", w.vertices, w.colors[0]);
        }
    }
    println!("{} {line}", if bad { "bad" } else { "good" });
    Ok(if bad { Status::Fail } else { Status::Pass })
}

fn embed(kind: EmbedKind) -> Outcome {
    match kind {
        EmbedKind::Lattice { r, a, b, out } => {
            let l = fail_on(grid_lattice_embedding(r, a, b))?;
            let rank = l.affine_rank(1e-6);
            let check = fail_on(l.check_rectangles(a, b, 1e-9))?;
            let mut line = format!("lattice r={r} rows={} cols={} dim={} affine_rank={rank}", l.rows(), l.cols(), l.dim());
            let ok = match check {
                Ok(count) => {
                    let _ = write!(line, " rectangles={count} congruent=true");
                    rank == 13 * r + 4
                }
                Err([i, i2, j, j2]) => {
                    let _ = write!(line, " congruent=false at rows {i},{i2} cols {j},{j2}");
                    false
                }
            };
            println!("{line}");
            if let Some(path) = out {
                write(&path, &write_configuration(&fail_on(l.configuration())?))?;
            }
            Ok(if ok { Status::Pass } else { Status::Fail })
        }
        EmbedKind::Simplex { t, out } => {
            let s = fail_on(simplex_midpoint_embedding::<f64>(t))?;
            let pts = s.configuration().points();
            let mut worst = 0f64;
            for x in 0..pts.len() {
                for y in x + 1..pts.len() {
                    let ((i, j), (k, l)) = (s.psi(x), s.psi(y));
                    let want = if i == k || i == l || j == k || j == l { 1.0 } else { 2f64.sqrt() };
                    let d = fail_on(egr_core::euclid::distance(&pts[x], &pts[y]))?;
                    worst = worst.max((d - want).abs());
                }
            }
            let ok = worst <= 1e-9;
            println!("midpoints t={t} points={} dim={} distances_ok={ok}", pts.len(), t);
            if let Some(path) = out {
                write(&path, &write_configuration(s.configuration()))?;
            }
            Ok(if ok { Status::Pass } else { Status::Fail })
        }
    }
}

fn gadget_verify(workers: u64, verbose: bool) -> Outcome {
    let g = t_gadget();
    if verbose {
        for &t in &g.triples {
            println!("triple {}", g.labels(t).join(" "));
        }
    }
    let rep = verify_t_gadget_with(workers as usize);
    println!(
        "gadget points={} triples={} colorings={} failures={} holds={}",
        g.config.len(),
        g.triples.len(),
        rep.colorings,
        rep.failure_count,
        rep.holds()
    );
    for f in &rep.failures {
        println!("uncovered coloring {f:?}");
    }
    Ok(if rep.holds() { Status::Pass } else { Status::Fail })
}

fn strip(r: u32, a: f64, b: f64, trials: u64, seed: u64) -> Outcome {
    let rep = fail_on(falsify_strip(r, a, b, trials, seed))?;
    println!(
        "strip r={r} a={a} b={b} trials={} seed={seed} mono={} rainbow={}",
        rep.trials, rep.mono_hits, rep.rainbow_hits
    );
    match rep.first_counterexample {
        None => Ok(Status::Pass),
        Some(p) => {
            println!("first counterexample center=({}, {}) angle={}", p.center[0], p.center[1], p.angle);
            Ok(Status::Fail)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn segment(
    d: f64,
    c: [f64; 2],
    dd: [f64; 2],
    oracle: OracleKind,
    normal: [f64; 2],
    offset: f64,
    strips: u32,
    width: f64,
    max_iter: Option<usize>,
) -> Outcome {
    let oracle: Box<dyn ColoringOracle<f64>> = match oracle {
        OracleKind::Halfplane => {
            if normal == [0.0, 0.0] {
                return Err("half-plane normal must be nonzero".into());
            }
            Box::new(HalfPlane { normal, offset })
        }
        OracleKind::Strip => {
            if strips == 0 || width <= 0.0 {
                return Err("strip oracle needs --strips >= 1 and --width > 0".into());
            }
            Box::new(StripColoring { r: strips, a: width })
        }
    };
    if !d.is_finite() || d <= 0.0 {
        return Err("--d must be positive".into());
    }
    let limit = max_iter.unwrap_or_else(|| segment_iteration_bound(d, c, dd));
    let s = fail_on(rainbow_segment(oracle.as_ref(), d, c, dd, limit))?;
    let len = (s.p[0] - s.q[0]).hypot(s.p[1] - s.q[1]);
    println!(
        "P=({}, {}) Q=({}, {}) colors={},{} length={len} iterations={}",
        s.p[0],
        s.p[1],
        s.q[0],
        s.q[1],
        oracle.color(s.p),
        oracle.color(s.q),
        s.iterations
    );
    Ok(Status::Pass)
}

fn run(cli: Cli) -> Outcome {
    let w = cli.workers;
    match cli.command {
        Command::GridSearch { n, m, r, budget, out } => grid_search(w, n, m, r, budget, out),
        Command::GridVerify { file } => grid_verify(w, &file),
        Command::SatExport { n, m, r, out } => sat_export(n, m, r, &out),
        Command::SatCheck { file, model } => sat_check(w, &file, &model),
        Command::GrSearch {
            target,
            r,
            tmax,
            budget,
            out,
        } => gr_search(w, target, r, tmax, budget, out),
        Command::GraphVerify { file, target } => graph_verify(&file, target),
        Command::Embed { kind } => embed(kind),
        Command::GadgetVerify { verbose } => gadget_verify(w, verbose),
        Command::StripFalsify { r, a, b, trials, seed } => strip(r, a, b, trials, seed),
        Command::RainbowSegment {
            d,
            cx,
            cy,
            dx,
            dy,
            oracle,
            nx,
            ny,
            offset,
            strips,
            width,
            max_iter,
        } => segment(d, [cx, cy], [dx, dy], oracle, [nx, ny], offset, strips, width, max_iter),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
