//! `hexcut`: benzenoid topological indices from the boundary cycle.
//!
//! Exit codes: 0 success, 1 `check` found a mismatch, 2 bad input or usage,
//! 3 oracle size bound exceeded, 4 integer overflow.

mod bench;
mod render;
mod report;

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hexcut::boundary::{from_hexagons, BoundaryCycle};
use hexcut::formats::{parse_hexbound, parse_hexlist, write_hexbound, write_hexlist};
use hexcut::generators::{generate, standard_corpus, FamilySpec};
use hexcut::indices::{compute_all_with, IndexValues, Method, Options, Timings};
use hexcut::lattice::{EdgeClass, HexCoord};
use hexcut::oracle::{build_graph, oracle_values, DEFAULT_BOUND};
use hexcut::quotient::interior_hexagons;

use report::{InputInfo, ReportDocument};

#[derive(Parser)]
#[command(name = "hexcut", version, about = "Distance-based indices of benzenoid systems from their boundary cycle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Hexlist,
    Hexbound,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Fast,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every index and write a JSON report.
    Compute {
        #[arg(long)]
        input: PathBuf,
        /// Input format; detected from the header line when omitted.
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long, value_enum, default_value = "fast")]
        method: MethodArg,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest graph (in vertices) the oracle will accept.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        oracle_bound: usize,
        /// Build the three quotient trees on separate threads.
        #[arg(long)]
        parallel: bool,
    },
    /// Run the fast path and the oracle and compare every index.
    Check {
        #[arg(long, conflicts_with = "corpus", required_unless_present = "corpus")]
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Family specs such as `circumcoronene:3` or `random:30,7`, or `standard`.
        #[arg(long, num_args = 1..)]
        corpus: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        oracle_bound: usize,
        /// Perturb the fast result before comparing (harness self-test).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Generate a benzenoid family member as HEXLIST.
    Gen {
        #[arg(long)]
        family: String,
        /// Comma-separated family parameters.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the boundary as HEXBOUND to this path.
        #[arg(long)]
        boundary: Option<PathBuf>,
    },
    /// Time the fast path over a family and write CSV.
    Bench {
        #[arg(long, default_value = "circumcoronene")]
        family: String,
        #[arg(long, value_delimiter = ',', default_value = "16,32,64,128,256")]
        k_list: Vec<u32>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        parallel: bool,
    },
    /// Draw the system with its cut segments as SVG.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long, value_parser = ["1", "2", "3", "all"], default_value = "all")]
        direction: String,
        #[arg(long)]
        out: PathBuf,
    },
}

struct Loaded {
    format: Format,
    hexagons: Option<HashSet<HexCoord>>,
    cycle: BoundaryCycle,
}

impl Loaded {
    fn hexagon_set(&self) -> Result<HashSet<HexCoord>> {
        match &self.hexagons {
            Some(hs) => Ok(hs.clone()),
            None => Ok(interior_hexagons(&self.cycle)?.into_iter().collect()),
        }
    }

    fn info(&self) -> InputInfo {
        InputInfo {
            format: match self.format {
                Format::Hexlist => "hexlist",
                Format::Hexbound => "hexbound",
            }
            .into(),
            hexagons: self.hexagons.as_ref().map(|h| h.len() as u64),
            boundary_length: self.cycle.len() as u64,
        }
    }
}

fn sniff(text: &str) -> Result<Format> {
    match text.lines().next() {
        Some(l) if l.starts_with("HEXLIST") => Ok(Format::Hexlist),
        Some(l) if l.starts_with("HEXBOUND") => Ok(Format::Hexbound),
        _ => bail!("ParseError: unrecognised header; pass --format"),
    }
}

fn load(path: &Path, format: Option<Format>) -> Result<Loaded> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let format = match format {
        Some(f) => f,
        None => sniff(&text)?,
    };
    match format {
        Format::Hexlist => {
            let hs: HashSet<HexCoord> = parse_hexlist(&text).map_err(hexcut::Error::from)?.into_iter().collect();
            let cycle = from_hexagons(&hs).map_err(hexcut::Error::from)?;
            Ok(Loaded { format, hexagons: Some(hs), cycle })
        }
        Format::Hexbound => {
            let cycle = parse_hexbound(&text).map_err(hexcut::Error::from)?;
            Ok(Loaded { format, hexagons: None, cycle })
        }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn oracle_for(hs: &HashSet<HexCoord>, bound: usize) -> Result<IndexValues> {
    let g = build_graph(hs).map_err(hexcut::Error::from)?;
    Ok(oracle_values(&g, bound).map_err(hexcut::Error::from)?)
}

fn fast_for(z: &BoundaryCycle) -> Result<IndexValues> {
    Ok(compute_all_with(z, Options::default()).map_err(hexcut::Error::from)?.values)
}

fn cmd_compute(
    input: &Path,
    format: Option<Format>,
    method: MethodArg,
    out: Option<&Path>,
    oracle_bound: usize,
    parallel: bool,
) -> Result<()> {
    let start = Instant::now();
    let loaded = load(input, format)?;
    let parse_us = start.elapsed().as_micros() as u64;
    let (values, method, timings) = match method {
        MethodArg::Fast => {
            let r = compute_all_with(&loaded.cycle, Options { parallel }).map_err(hexcut::Error::from)?;
            (r.values, Method::Fast, Timings { parse_us, ..r.timings })
        }
        MethodArg::Oracle => {
            let t0 = Instant::now();
            let values = oracle_for(&loaded.hexagon_set()?, oracle_bound)?;
            let indices_us = t0.elapsed().as_micros() as u64;
            (values, Method::Oracle, Timings { parse_us, trees_us: 0, indices_us, total_us: 0 })
        }
    };
    let timings = Timings { total_us: start.elapsed().as_micros() as u64, ..timings };
    let doc = ReportDocument::new(loaded.info(), &values, method, timings);
    let mut text = serde_json::to_string_pretty(&doc)?;
    text.push('\n');
    write_out(out, &text)
}

/// Names and values of the six headline indices.
fn headline(v: &IndexValues) -> [(&'static str, u128); 6] {
    [
        ("wiener", v.wiener),
        ("edge_wiener", v.edge_wiener),
        ("szeged", v.szeged),
        ("edge_szeged", v.edge_szeged),
        ("pi", v.pi),
        ("vertex_pi", v.vertex_pi),
    ]
}

/// Prints the comparison for one system; returns whether everything agreed.
fn report_check(label: &str, fast: &IndexValues, oracle: &IndexValues) -> bool {
    let (f, o) = (headline(fast), headline(oracle));
    let agree = f.iter().zip(&o).filter(|(a, b)| a.1 == b.1).count();
    let counts_ok = (fast.vertices, fast.edges) == (oracle.vertices, oracle.edges)
        && fast.edge_wiener_hat == oracle.edge_wiener_hat;
    if agree == f.len() && counts_ok {
        println!("OK {agree}/{} indices agree{label}", f.len());
        return true;
    }
    println!("MISMATCH {agree}/{} indices agree{label}", f.len());
    println!("  {:<16} {:>24} {:>24}", "index", "fast", "oracle");
    let rows = [
        ("vertices", fast.vertices as u128, oracle.vertices as u128),
        ("edges", fast.edges as u128, oracle.edges as u128),
        ("edge_wiener_hat", fast.edge_wiener_hat, oracle.edge_wiener_hat),
    ];
    let all = f.iter().zip(&o).map(|(a, b)| (a.0, a.1, b.1)).chain(rows);
    for (name, a, b) in all.filter(|r| r.1 != r.2) {
        println!("  {name:<16} {a:>24} {b:>24}");
    }
    false
}

fn corpus_specs(args: &[String]) -> Result<Vec<FamilySpec>> {
    let mut out = Vec::new();
    for a in args {
        if a == "standard" {
            out.extend(standard_corpus());
        } else {
            out.push(a.parse::<FamilySpec>().map_err(hexcut::Error::from)?);
        }
    }
    Ok(out)
}

fn cmd_check(
    input: Option<&Path>,
    format: Option<Format>,
    corpus: &[String],
    oracle_bound: usize,
    inject_fault: bool,
) -> Result<bool> {
    let mut systems: Vec<(String, HashSet<HexCoord>, BoundaryCycle)> = Vec::new();
    if let Some(path) = input {
        let loaded = load(path, format)?;
        systems.push((String::new(), loaded.hexagon_set()?, loaded.cycle));
    }
    for spec in corpus_specs(corpus)? {
        let hs = generate(&spec).map_err(hexcut::Error::from)?;
        let z = from_hexagons(&hs).map_err(hexcut::Error::from)?;
        systems.push((format!(" ({spec})"), hs, z));
    }
    let mut ok = 0;
    for (label, hs, z) in &systems {
        let mut fast = fast_for(z)?;
        if inject_fault {
            fast.szeged += 1;
        }
        let oracle = oracle_for(hs, oracle_bound)?;
        ok += usize::from(report_check(label, &fast, &oracle));
    }
    if systems.len() > 1 {
        println!("{ok}/{} systems agree", systems.len());
    }
    Ok(ok == systems.len())
}

fn cmd_gen(family: &str, params: &str, seed: u64, out: Option<&Path>, boundary: Option<&Path>) -> Result<()> {
    let params = params
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<u64>().with_context(|| format!("InvalidParameter: {p:?}")))
        .collect::<Result<Vec<_>>>()?;
    let spec = FamilySpec::from_parts(family, &params, seed).map_err(hexcut::Error::from)?;
    let hs = generate(&spec).map_err(hexcut::Error::from)?;
    if let Some(path) = boundary {
        let z = from_hexagons(&hs).map_err(hexcut::Error::from)?;
        fs::write(path, write_hexbound(&z)).with_context(|| format!("writing {}", path.display()))?;
    }
    write_out(out, &write_hexlist(&hs))
}

fn cmd_bench(family: &str, ks: &[u32], reps: usize, csv: Option<&Path>, parallel: bool) -> Result<()> {
    let rows = bench::run(family, ks, reps, parallel)?;
    write_out(csv, &bench::to_csv(&rows))?;
    for &k in ks {
        let totals: Vec<f64> = rows.iter().filter(|r| r.k == k && r.phase == "total").map(|r| r.us).collect();
        let sample = rows.iter().find(|r| r.k == k);
        if let Some(r) = sample {
            eprintln!(
                "k={k:<5} vertices={:<9} boundary={:<6} median total {:.1} us",
                r.vertices,
                r.boundary,
                bench::median(totals)
            );
        }
    }
    Ok(())
}

fn cmd_render(input: &Path, format: Option<Format>, direction: &str, out: &Path) -> Result<()> {
    let loaded = load(input, format)?;
    let classes: Vec<EdgeClass> = match direction {
        "1" => vec![EdgeClass::D1],
        "2" => vec![EdgeClass::D2],
        "3" => vec![EdgeClass::D3],
        _ => EdgeClass::ALL.to_vec(),
    };
    let hexagons: Vec<HexCoord> = loaded.hexagon_set()?.into_iter().collect();
    let svg = render::render_svg(&loaded.cycle, &hexagons, &classes).map_err(hexcut::Error::from)?;
    fs::write(out, svg).with_context(|| format!("writing {}", out.display()))
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<hexcut::Error>() {
        Some(e) if e.is_bound_exceeded() => 3,
        Some(e) if e.is_overflow() => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute { input, format, method, out, oracle_bound, parallel } => {
            cmd_compute(input, *format, *method, out.as_deref(), *oracle_bound, *parallel).map(|_| true)
        }
        Command::Check { input, format, corpus, oracle_bound, inject_fault } => {
            cmd_check(input.as_deref(), *format, corpus, *oracle_bound, *inject_fault)
        }
        Command::Gen { family, params, seed, out, boundary } => {
            cmd_gen(family, params, *seed, out.as_deref(), boundary.as_deref()).map(|_| true)
        }
        Command::Bench { family, k_list, reps, csv, parallel } => {
            cmd_bench(family, k_list, *reps, csv.as_deref(), *parallel).map(|_| true)
        }
        Command::Render { input, format, direction, out } => {
            cmd_render(input, *format, direction, out).map(|_| true)
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
