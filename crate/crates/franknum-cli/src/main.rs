//! Command-line front end for the orientation toolkit.
//!
//! Every subcommand reads a graph (graph6 or edge list), runs part of the
//! pipeline, and emits compact JSON followed by a newline. Exit codes:
//! 0 success, 1 usage or parse error, 2 precondition failure (connectivity,
//! size bounds, a certificate that does not validate), 3 internal invariant
//! violation.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use franknum::certify::{
    build_certificate_with, validate_certificate, BuildOptions, Certificate, CertifyError,
};
use franknum::circuits::build_reference_orientations;
use franknum::connectivity::{edge_connectivity, min_edge_cut};
use franknum::format::{parse_edge_list, parse_graph6};
use franknum::nzflow::jaeger_flow;
use franknum::oracle::{exact_frank_number, OracleError, DEFAULT_EDGE_BOUND, DEFAULT_K_MAX};
use franknum::superpose::{is_admissible, ValueSchedule};
use franknum::Graph;

#[derive(Parser)]
#[command(name = "franknum", version, about = "Strongly connected orientations with deletable edges", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input format for graph files
    #[arg(long, global = true, value_enum, default_value_t = Format::Graph6)]
    format: Format,

    /// Write the JSON output to this file instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Accepted for scripting compatibility; every command is deterministic
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// One graph6 line
    Graph6,
    /// "n m" header followed by one "u v" pair per line
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Build at most five strongly connected orientations so that every
    /// edge is deletable in at least one, and say which one
    Certify {
        /// Graph file, or - for standard input
        input: PathBuf,
        /// Replace the standard five schedules; repeatable: v1,v2,v3[,r1r2r3]
        #[arg(long, value_name = "SPEC", action = ArgAction::Append)]
        schedule: Vec<String>,
        /// Keep one orientation per schedule instead of dropping redundant ones
        #[arg(long)]
        no_shrink: bool,
        /// Accept 4-edge-connected inputs and report their Frank number of 1
        #[arg(long)]
        allow_4ec: bool,
    },
    /// Check a certificate against its graph and print the validation report
    Verify {
        /// Graph file, or - for standard input
        graph: PathBuf,
        /// Certificate JSON as produced by certify
        certificate: PathBuf,
    },
    /// Exhaustive Frank number by orientation enumeration and exact cover
    Exact {
        /// Graph file, or - for standard input
        input: PathBuf,
        /// Refuse graphs with more edges than this
        #[arg(long, value_name = "M", default_value_t = DEFAULT_EDGE_BOUND)]
        max_edges: usize,
        /// Stop searching for covers larger than this
        #[arg(long, value_name = "K", default_value_t = DEFAULT_K_MAX)]
        k_max: usize,
    },
    /// Print the nowhere-zero group flow the certificate is built from
    Flow {
        /// Graph file, or - for standard input
        input: PathBuf,
        /// Also list each coordinate's circuits as closed vertex walks
        #[arg(long)]
        dump_circuits: bool,
    },
    /// Print the global edge connectivity
    Econn {
        /// Graph file, or - for standard input
        input: PathBuf,
    },
    /// Certify every graph6 line of the input, one JSON line per input line
    Batch {
        /// File of graph6 lines, or - for standard input
        input: PathBuf,
        /// Replace the standard five schedules; repeatable: v1,v2,v3[,r1r2r3]
        #[arg(long, value_name = "SPEC", action = ArgAction::Append)]
        schedule: Vec<String>,
        /// Keep one orientation per schedule instead of dropping redundant ones
        #[arg(long)]
        no_shrink: bool,
        /// Accept 4-edge-connected inputs and report their Frank number of 1
        #[arg(long)]
        allow_4ec: bool,
    },
}

/// One failure per exit code beyond success.
enum Failure {
    Usage(String),
    Precondition(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Precondition(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Precondition(m) | Failure::Internal(m) => m,
        }
    }
}

/// JSON to emit plus the exit code once it is written.
struct Output {
    json: String,
    exit: i32,
    note: Option<String>,
}

impl Output {
    fn ok(json: String) -> Self {
        Output { json, exit: 0, note: None }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version land on stdout with status 0; real usage
            // errors go to stderr with status 1
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            process::exit(code);
        }
    };

    match run(&cli) {
        Ok(out) => {
            if let Err(e) = write_output(cli.out.as_deref(), &out.json) {
                eprintln!("error: {e}");
                process::exit(1);
            }
            if let Some(note) = &out.note {
                eprintln!("error: {note}");
            }
            process::exit(out.exit);
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            process::exit(f.code());
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Certify { input, schedule, no_shrink, allow_4ec } => {
            let g = read_graph(input, cli.format)?;
            let opts = build_options(schedule, *no_shrink)?;
            certify_one(&g, &opts, *allow_4ec).map(Output::ok)
        }
        Command::Verify { graph, certificate } => {
            let g = read_graph(graph, cli.format)?;
            let text = read_input(certificate)?;
            let cert: Certificate = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("bad certificate JSON: {e}")))?;
            let report = validate_certificate(&g, &cert);
            let json = to_json(&report)?;
            if report.pass {
                Ok(Output::ok(json))
            } else {
                Ok(Output {
                    json,
                    exit: 2,
                    note: Some("certificate does not validate".to_string()),
                })
            }
        }
        Command::Exact { input, max_edges, k_max } => {
            let g = read_graph(input, cli.format)?;
            let result = exact_frank_number(&g, *k_max, *max_edges).map_err(map_oracle)?;
            Ok(Output::ok(to_json(&result)?))
        }
        Command::Flow { input, dump_circuits } => {
            let g = read_graph(input, cli.format)?;
            require_lambda_at_least_3(&g)?;
            let flow = jaeger_flow(&g).map_err(|e| Failure::Internal(e.to_string()))?;
            let circuits = if *dump_circuits {
                Some(circuit_walks(&g, &flow)?)
            } else {
                None
            };
            #[derive(Serialize)]
            struct FlowOut {
                values: Vec<u8>,
                #[serde(skip_serializing_if = "Option::is_none")]
                circuits: Option<[Vec<Vec<usize>>; 3]>,
            }
            Ok(Output::ok(to_json(&FlowOut { values: flow.values, circuits })?))
        }
        Command::Econn { input } => {
            let g = read_graph(input, cli.format)?;
            let lambda =
                edge_connectivity(&g).map_err(|e| Failure::Internal(e.to_string()))?;
            Ok(Output::ok(format!("{{\"lambda\":{lambda}}}")))
        }
        Command::Batch { input, schedule, no_shrink, allow_4ec } => {
            if cli.format == Format::Edgelist {
                return Err(Failure::Usage(
                    "edge-list input is multi-line; batch reads one graph6 graph per line"
                        .to_string(),
                ));
            }
            let opts = build_options(schedule, *no_shrink)?;
            let text = read_input(input)?;
            // a bad line becomes an error object on its own output line, so
            // line counts always match
            let lines: Vec<String> = text
                .lines()
                .map(|line| match batch_line(line, &opts, *allow_4ec) {
                    Ok(json) => json,
                    Err(f) => format!(
                        "{{\"error\":{}}}",
                        serde_json::Value::String(f.message().to_string())
                    ),
                })
                .collect();
            Ok(Output::ok(lines.join("\n")))
        }
    }
}

fn batch_line(line: &str, opts: &BuildOptions, allow_4ec: bool) -> Result<String, Failure> {
    let line = line.trim();
    if line.is_empty() {
        return Err(Failure::Usage("empty line".to_string()));
    }
    let g = parse_graph6(line).map_err(|e| Failure::Usage(e.to_string()))?;
    certify_one(&g, opts, allow_4ec)
}

/// Runs the certificate pipeline behind `certify` and `batch`. Inputs with
/// λ ≥ 4 have Frank number 1; with `allow_4ec` only that verdict is emitted.
fn certify_one(g: &Graph, opts: &BuildOptions, allow_4ec: bool) -> Result<String, Failure> {
    let lambda = edge_connectivity(g).map_err(|e| Failure::Internal(e.to_string()))?;
    if lambda < 3 {
        let cut = min_edge_cut(g).map_err(|e| Failure::Internal(e.to_string()))?;
        return Err(Failure::Precondition(format!(
            "graph is {lambda}-edge-connected, not 3; removing the cut {cut:?} disconnects it"
        )));
    }
    if lambda > 3 {
        if allow_4ec {
            return Ok("{\"frank_number\":1}".to_string());
        }
        return Err(Failure::Precondition(format!(
            "graph is {lambda}-edge-connected; its Frank number is 1 (pass --allow-4ec for the verdict)"
        )));
    }
    let cert = build_certificate_with(g, opts).map_err(map_certify)?;
    to_json(&cert)
}

fn build_options(specs: &[String], no_shrink: bool) -> Result<BuildOptions, Failure> {
    let mut opts = BuildOptions { shrink: !no_shrink, ..Default::default() };
    if !specs.is_empty() {
        opts.schedules = specs
            .iter()
            .enumerate()
            .map(|(i, spec)| parse_schedule(spec, i))
            .collect::<Result<_, _>>()?;
    }
    Ok(opts)
}

/// Parses `v1,v2,v3` or `v1,v2,v3,r1r2r3` where each rᵢ is 0 or 1.
fn parse_schedule(spec: &str, index: usize) -> Result<ValueSchedule, Failure> {
    let bad = |why: &str| Failure::Usage(format!("schedule '{spec}': {why}"));
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 3 && parts.len() != 4 {
        return Err(bad("expected v1,v2,v3 or v1,v2,v3,r1r2r3"));
    }
    let mut values = [0u32; 3];
    for (slot, part) in values.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| bad("values must be positive integers"))?;
    }
    let mut reversed = [false; 3];
    if let Some(flags) = parts.get(3) {
        let flags = flags.trim();
        if flags.len() != 3 || !flags.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(bad("reversal flags must be three 0/1 digits"));
        }
        for (slot, b) in reversed.iter_mut().zip(flags.bytes()) {
            *slot = b == b'1';
        }
    }
    let s = ValueSchedule::new(values, reversed, &format!("custom{}", index + 1));
    if !is_admissible(&s) {
        return Err(bad("not admissible: a signed combination of the values cancels"));
    }
    Ok(s)
}

fn require_lambda_at_least_3(g: &Graph) -> Result<(), Failure> {
    let lambda = edge_connectivity(g).map_err(|e| Failure::Internal(e.to_string()))?;
    if lambda < 3 {
        let cut = min_edge_cut(g).map_err(|e| Failure::Internal(e.to_string()))?;
        return Err(Failure::Precondition(format!(
            "graph is {lambda}-edge-connected, not 3; removing the cut {cut:?} disconnects it"
        )));
    }
    Ok(())
}

/// Closed vertex walks of the circuits of each coordinate subgraph, in the
/// deterministic order the decomposition produces them.
fn circuit_walks(g: &Graph, flow: &franknum::GroupFlow) -> Result<[Vec<Vec<usize>>; 3], Failure> {
    let co = build_reference_orientations(g, flow)
        .map_err(|e| Failure::Internal(e.to_string()))?;
    let mut out: [Vec<Vec<usize>>; 3] = Default::default();
    for (i, walks) in out.iter_mut().enumerate() {
        for circuit in &co.coord(i + 1).circuits {
            let mut walk: Vec<usize> = circuit
                .steps
                .iter()
                .map(|&(e, forward)| {
                    let (u, v) = g.endpoints(e);
                    if forward {
                        u
                    } else {
                        v
                    }
                })
                .collect();
            if let Some(&first) = walk.first() {
                walk.push(first);
            }
            walks.push(walk);
        }
    }
    Ok(out)
}

fn map_certify(e: CertifyError) -> Failure {
    match e {
        CertifyError::NotThreeEdgeConnected { .. } => Failure::Precondition(e.to_string()),
        CertifyError::UnwitnessedEdge { .. } => Failure::Precondition(format!(
            "{e}; the schedule family does not cover every edge"
        )),
        CertifyError::Graph(_) | CertifyError::InadmissibleSchedule { .. } => {
            Failure::Usage(e.to_string())
        }
        CertifyError::NotStronglyConnected | CertifyError::Internal(_) => {
            Failure::Internal(e.to_string())
        }
    }
}

fn map_oracle(e: OracleError) -> Failure {
    match e {
        OracleError::TooManyEdges { .. }
        | OracleError::NotThreeEdgeConnected { .. }
        | OracleError::NoCoverWithin { .. } => Failure::Precondition(e.to_string()),
        OracleError::Graph(_) => Failure::Usage(e.to_string()),
        _ => Failure::Internal(e.to_string()),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string(value).map_err(|e| Failure::Internal(e.to_string()))
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        return io::read_to_string(io::stdin())
            .map_err(|e| Failure::Usage(format!("standard input: {e}")));
    }
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path, format: Format) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    match format {
        Format::Graph6 => {
            let mut lines = text.lines().filter(|l| !l.trim().is_empty());
            let first = lines
                .next()
                .ok_or_else(|| Failure::Usage(format!("{}: no graph6 line", path.display())))?;
            if lines.next().is_some() {
                return Err(Failure::Usage(format!(
                    "{}: more than one graph6 line; use batch",
                    path.display()
                )));
            }
            parse_graph6(first.trim()).map_err(|e| Failure::Usage(e.to_string()))
        }
        Format::Edgelist => {
            parse_edge_list(&text).map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn write_output(out: Option<&Path>, json: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{json}\n")),
        None => {
            let stdout = io::stdout();
            let mut handle = stdout.lock();
            writeln!(handle, "{json}")
        }
    }
}
