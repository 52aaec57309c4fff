//! `tollhull`: toll hull numbers, intervals, atoms and minimum hull sets
//! from the command line.

mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tollhull::graph::{generate, to_edge_list, to_graph6, InputFormat, Model};
use tollhull::oracles::{
    bf_all_min_hull_sets, bf_atoms, bf_hull_number, bf_is_extreme, bf_toll_interval, ENUMERATION_LIMIT, HULL_LIMIT,
};
use tollhull::{atoms, enumerate_min_hull_sets, solve, toll_hull, Graph, MinHullSets, TollIntervals};

use crate::input::{load, vertex, vertex_list, Input};
use crate::report::*;

#[derive(Parser)]
#[command(name = "tollhull", version, about = "Toll convexity toolkit: hull number, intervals, atoms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include the solver trace.
    #[arg(long, global = true)]
    trace: bool,
    /// Include wall-clock timing (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    /// Input graph format.
    #[arg(long, global = true, value_enum, default_value_t = GraphFormat::EdgeList)]
    input_format: GraphFormat,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    EdgeList,
    Graph6,
}

impl From<GraphFormat> for InputFormat {
    fn from(f: GraphFormat) -> Self {
        match f {
            GraphFormat::EdgeList => InputFormat::EdgeList,
            GraphFormat::Graph6 => InputFormat::Graph6,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GenModel {
    Gnp,
    Tree,
    Complete,
    Cycle,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum toll hull set, hull number and characteristic family.
    Hull { file: String },
    /// Clique-separator decomposition with extremal flags.
    Atoms { file: String },
    /// Toll interval of two vertices.
    Interval {
        file: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Interval and toll hull of a vertex set.
    Closure {
        file: String,
        /// Comma-separated labels.
        #[arg(long)]
        set: String,
    },
    /// Toll extreme vertices.
    Extreme { file: String },
    /// Stream minimum toll hull sets in lexicographic order.
    Enumerate {
        file: String,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Cross-check the solver against brute force (exit 3 on mismatch).
    Verify { file: String },
    /// Generate a random or structured graph.
    Gen {
        #[arg(long, value_enum)]
        model: GenModel,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<String>,
        /// Encoding of the generated graph.
        #[arg(long, value_enum, default_value_t = GraphFormat::EdgeList)]
        encoding: GraphFormat,
    },
}

#[derive(Debug)]
pub struct CliError {
    code: u8,
    msg: String,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError { code: 1, msg: msg.into() }
    }
}

impl From<tollhull::Error> for CliError {
    fn from(e: tollhull::Error) -> Self {
        CliError { code: if e.is_internal() { 2 } else { 1 }, msg: e.to_string() }
    }
}

struct Ctx {
    format: Format,
    trace: bool,
    timing: bool,
    started: Instant,
}

impl Ctx {
    fn emit<T: Serialize>(&self, command: &'static str, input: &Input, result: T, text: String, trace: Option<Vec<TraceEntry>>) {
        let trace = trace.filter(|_| self.trace);
        match self.format {
            Format::Json => {
                let env = Envelope {
                    command,
                    input: InputDigest {
                        source: input.source.clone(),
                        order: input.graph.order(),
                        size: input.graph.size(),
                        sha256: input.sha256.clone(),
                    },
                    result,
                    timing_ms: self.timing.then(|| self.started.elapsed().as_secs_f64() * 1e3),
                    trace,
                };
                println!("{}", serde_json::to_string_pretty(&env).expect("payloads serialize"));
            }
            Format::Text => {
                print!("{text}");
                for t in trace.iter().flatten() {
                    println!("{}", t.text());
                }
                if self.timing {
                    println!("time_ms {:.3}", self.started.elapsed().as_secs_f64() * 1e3);
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let ctx = Ctx { format: cli.format, trace: cli.trace, timing: cli.timing, started: Instant::now() };
    let fmt = InputFormat::from(cli.input_format);
    let connected = |file: &str| -> Result<Input, CliError> {
        let input = load(file, fmt)?;
        input.graph.require_connected()?;
        Ok(input)
    };
    match cli.command {
        Command::Hull { file } => {
            let input = connected(&file)?;
            let g = &input.graph;
            let r = solve(g)?;
            let payload = HullPayload::new(g, &r);
            let text = payload.text();
            let trace = r.trace.iter().map(|t| TraceEntry::new(g, t)).collect();
            ctx.emit("hull", &input, payload, text, Some(trace));
        }
        Command::Atoms { file } => {
            let input = connected(&file)?;
            let payload = AtomsPayload::new(&input.graph, &atoms(&input.graph)?);
            let text = payload.text();
            ctx.emit("atoms", &input, payload, text, None);
        }
        Command::Interval { file, x, y } => {
            let input = connected(&file)?;
            let g = &input.graph;
            let iv = tollhull::toll_interval(g, vertex(g, &x)?, vertex(g, &y)?)?;
            let text = format!("interval {}\n", labels(g, &iv).join(" "));
            ctx.emit("interval", &input, IntervalPayload { x, y, interval: labels(g, &iv) }, text, None);
        }
        Command::Closure { file, set } => {
            let input = connected(&file)?;
            let g = &input.graph;
            let s = g.set_of(vertex_list(g, &set)?);
            let ti = TollIntervals::new(g);
            let payload = ClosurePayload {
                set: labels(g, &s),
                interval: labels(g, &ti.interval_of_set(&s)?),
                hull: labels(g, &ti.hull(&s)?),
                convex: ti.is_convex(&s),
                concave: ti.is_concave(&s),
            };
            let text = format!(
                "set {}\ninterval {}\nhull {}\nconvex {}\nconcave {}\n",
                payload.set.join(" "),
                payload.interval.join(" "),
                payload.hull.join(" "),
                payload.convex,
                payload.concave
            );
            ctx.emit("closure", &input, payload, text, None);
        }
        Command::Extreme { file } => {
            let input = connected(&file)?;
            let ext = tollhull::extreme_vertices(&input.graph);
            let text = format!("extreme {}\n", words(&labels(&input.graph, &ext)));
            ctx.emit("extreme", &input, ExtremePayload { extreme: labels(&input.graph, &ext) }, text, None);
        }
        Command::Enumerate { file, limit } => {
            let input = connected(&file)?;
            enumerate(&ctx, &input, limit)?;
        }
        Command::Verify { file } => {
            let input = connected(&file)?;
            let payload = verify(&input.graph)?;
            let code = if payload.agree { 0 } else { 3 };
            let text = payload.text();
            ctx.emit("verify", &input, payload, text, None);
            return Ok(code);
        }
        Command::Gen { model, n, p, seed, out, encoding } => {
            let model = match model {
                GenModel::Gnp => Model::Gnp,
                GenModel::Tree => Model::RandomTree,
                GenModel::Complete => Model::Complete,
                GenModel::Cycle => Model::Cycle,
            };
            let g = generate(model, n, p, seed)?;
            let body = match encoding {
                GraphFormat::EdgeList => to_edge_list(&g),
                GraphFormat::Graph6 => format!("{}\n", to_graph6(&g)),
            };
            if let Some(path) = &out {
                std::fs::write(path, &body).map_err(|e| CliError::usage(format!("{path}: {e}")))?;
            }
            let input = Input {
                source: "generated".into(),
                sha256: {
                    use sha2::{Digest, Sha256};
                    Sha256::digest(body.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
                },
                graph: g,
            };
            let payload = GenPayload {
                model: format!("{model:?}").to_lowercase(),
                seed,
                order: input.graph.order(),
                size: input.graph.size(),
                graph6: to_graph6(&input.graph),
                written_to: out.clone(),
            };
            let text = if out.is_some() {
                format!("wrote {} vertices, {} edges\n", payload.order, payload.size)
            } else {
                body
            };
            ctx.emit("gen", &input, payload, text, None);
        }
    }
    Ok(0)
}

fn enumerate(ctx: &Ctx, input: &Input, limit: Option<usize>) -> Result<(), CliError> {
    let g = &input.graph;
    let r = solve(g)?;
    let stream = MinHullSets::new(g, &r, limit);
    match ctx.format {
        Format::Text => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for s in stream {
                let line = serde_json::to_string(&labels(g, &s?)).expect("labels serialize");
                if writeln!(out, "{line}").and_then(|_| out.flush()).is_err() {
                    // downstream closed the pipe
                    return Ok(());
                }
            }
            if ctx.timing {
                let _ = writeln!(out, "time_ms {:.3}", ctx.started.elapsed().as_secs_f64() * 1e3);
            }
        }
        Format::Json => {
            let sets = stream.map(|s| s.map(|s| labels(g, &s))).collect::<tollhull::Result<Vec<_>>>()?;
            let payload = EnumeratePayload { hull_number: r.hull_number, count: sets.len(), sets };
            ctx.emit("enumerate", input, payload, String::new(), None);
        }
    }
    Ok(())
}

fn verify(g: &Graph) -> Result<VerifyPayload, CliError> {
    let r = solve(g)?;
    let mut checks = Vec::new();
    let mut warnings = Vec::new();
    let mut check = |name, ok: bool, detail: String| {
        checks.push(Check { name, status: if ok { "ok" } else { "FAIL" }, detail });
        ok
    };
    let n = g.order();
    let closes = toll_hull(g, &r.hull_set)? == g.all();
    let mut agree = check("closure", closes, format!("hull of {} vertices", r.hull_number));
    let mut oracle = None;
    if n <= HULL_LIMIT {
        let bf = bf_hull_number(g)?;
        oracle = Some(bf);
        agree &= check("hull_number", bf == r.hull_number, format!("solver {} oracle {bf}", r.hull_number));
        let ti = TollIntervals::new(g);
        let mut bad = 0;
        for x in g.vertices() {
            for y in x + 1..n {
                bad += usize::from(ti.interval(x, y)? != bf_toll_interval(g, x, y)?);
            }
        }
        agree &= check("intervals", bad == 0, format!("{bad} of {} pairs differ", n * (n - 1) / 2));
        let mut ext_bad = 0;
        for v in g.vertices() {
            ext_bad += usize::from(r.extreme.contains(v) != bf_is_extreme(g, v)?);
        }
        agree &= check("extreme", ext_bad == 0, format!("{ext_bad} vertices differ"));
    } else {
        warnings.push(format!("hull oracle skipped: {n} vertices exceeds {HULL_LIMIT}"));
    }
    if n <= ENUMERATION_LIMIT {
        let mut got: Vec<_> = atoms(g)?.atoms.into_iter().map(|a| a.vertices).collect();
        got.sort();
        let mut want = bf_atoms(g)?;
        want.sort();
        agree &= check("atoms", got == want, format!("{} atoms", got.len()));
        let all = bf_all_min_hull_sets(g)?;
        let emitted = enumerate_min_hull_sets(g, None)?.collect::<tollhull::Result<Vec<_>>>()?;
        let valid = emitted.iter().all(|s| all.contains(s));
        agree &= check(
            "enumeration",
            valid,
            format!("{} of {} minimum hull sets emitted", emitted.len(), all.len()),
        );
    } else {
        warnings.push(format!("enumeration oracle skipped: {n} vertices exceeds {ENUMERATION_LIMIT}"));
    }
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    Ok(VerifyPayload { solver: r.hull_number, oracle, agree, checks, warnings })
}
