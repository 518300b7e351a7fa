use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use gracelab::caterpillar::{build_caterpillar, CaterpillarSpec};
use gracelab::constructions::{
    fixtures, label_caterpillar, label_g1mnk, label_spider_1k2, label_star_with_apex, Side,
};
use gracelab::search::{construct_cell, survey, SurveyRequest, TableFormat};
use gracelab::{
    attach_pendants, cycle_edge_delete, delete_apex, enumerate_labelings, exists_labeling, four_partite_swap,
    union_labeling, verify, ExistenceTable, Family, Graph, Label, LabeledGraph, SearchConfig, SearchStatus,
    TotalLabeling, TransformError,
};

#[derive(Parser)]
#[command(name = "gracelab", version, about = "Construct, verify, transform and search k-super graceful labelings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a labeled graph from a known construction.
    Construct(ConstructArgs),
    /// Check a labeling; exit 0 when valid, 1 when not, 2 on malformed input.
    Verify {
        /// Graph JSON file or family descriptor such as `cycle:8`.
        graph: String,
        labeling: PathBuf,
        /// Also require this smallest label.
        #[arg(long)]
        k: Option<Label>,
    },
    /// Apply one labeling-preserving surgery.
    Transform {
        #[command(subcommand)]
        op: TransformOp,
    },
    /// Exhaustive search; exit 3 when a limit stops it early.
    Search(SearchArgs),
    /// Fill an existence table; reruns only compute missing rows.
    Survey {
        spec: PathBuf,
        /// Output table; `.json` selects JSON, anything else CSV.
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// List, check or export the registry of hand-listed labelings.
    Fixtures {
        #[arg(long)]
        check: bool,
        #[arg(long, value_name = "PATH")]
        export: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ConstructArgs {
    /// path, cycle, star, kmn, k11r, tadpole, g1mnk, spider12, star-apex or caterpillar.
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    d: Option<Label>,
    #[arg(long)]
    k: Option<Label>,
    /// Caterpillar a-spine degrees, comma separated.
    #[arg(long, value_delimiter = ',')]
    a: Vec<usize>,
    /// Caterpillar b-spine degrees, comma separated.
    #[arg(long, value_delimiter = ',')]
    b: Vec<usize>,
    /// Caterpillar spine of odd length.
    #[arg(long)]
    odd: bool,
    #[arg(long, value_enum, default_value = "a")]
    side: SideArg,
    /// Also write the labeled graph in DOT format.
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    A,
    B,
}

#[derive(Subcommand)]
enum TransformOp {
    /// Attach pendants at the vertices labeled p+q-1+2i.
    Attach {
        graph: String,
        labeling: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Delete a vertex carrying the largest label.
    Delete {
        graph: String,
        labeling: PathBuf,
        #[arg(long)]
        vertex: usize,
    },
    /// Super graceful labeling of a disjoint union.
    Union {
        g: String,
        g_labeling: PathBuf,
        h: String,
        h_labeling: PathBuf,
    },
    /// Remove the cycle edge labeled k.
    CycleEdge { graph: String, labeling: PathBuf },
    /// Edge swap on G(1,m,n-k) giving a 4-partite graph.
    Swap {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Label,
        #[arg(long)]
        i: usize,
    },
}

#[derive(Args)]
struct LimitArgs {
    #[arg(long)]
    node_limit: Option<u64>,
    /// Wall-clock cap such as `30s`, `500ms` or `10` (seconds).
    #[arg(long, value_parser = parse_duration)]
    time_limit: Option<Duration>,
    #[arg(long, env = "GRACELAB_WORKERS", default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    no_alpha_gate: bool,
}

#[derive(Args)]
struct SearchArgs {
    graph: String,
    #[arg(long)]
    k: Label,
    /// List labelings instead of deciding; an optional count caps the list.
    #[arg(long, num_args = 0..=1, default_missing_value = "0", value_name = "N")]
    enumerate: Option<usize>,
    #[command(flatten)]
    limits: LimitArgs,
}

fn parse_duration(s: &str) -> Result<Duration, String> {
    let s = s.trim();
    let (num, unit) = match s.strip_suffix("ms") {
        Some(n) => (n, 1),
        None => (s.strip_suffix('s').unwrap_or(s), 1000),
    };
    let n: u64 = num.parse().map_err(|_| format!("not a duration: `{s}`"))?;
    Ok(Duration::from_millis(n * unit))
}

/// Failures, split by exit code.
enum Fail {
    /// Exit 1: well-formed input that fails a check or has no construction.
    Rejected(String),
    /// Exit 2: unreadable or malformed input.
    Malformed(String),
}

type Outcome = Result<ExitCode, Fail>;

fn malformed(e: impl std::fmt::Display) -> Fail {
    Fail::Malformed(e.to_string())
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail::Malformed(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Fail> {
    // write then rename so an interrupted run never leaves half a file
    let tmp = path.with_extension("partial");
    fs::write(&tmp, text)
        .and_then(|_| fs::rename(&tmp, path))
        .map_err(|e| Fail::Malformed(format!("{}: {e}", path.display())))
}

fn load_graph(arg: &str) -> Result<Graph, Fail> {
    let path = Path::new(arg);
    if path.exists() {
        let text = read(path)?;
        return serde_json::from_str(&text).map_err(|e| Fail::Malformed(format!("{arg}: {e}")));
    }
    let family: Family = arg.parse().map_err(|_| Fail::Malformed(format!("no such file or family: `{arg}`")))?;
    family.build().map_err(malformed)
}

/// Accepts a bare labeling or the output of `construct`.
fn load_labeling(path: &Path) -> Result<TotalLabeling, Fail> {
    let text = read(path)?;
    if let Ok(f) = serde_json::from_str::<TotalLabeling>(&text) {
        return Ok(f);
    }
    serde_json::from_str::<LabeledGraph>(&text)
        .map(|lg| lg.labeling)
        .map_err(|e| Fail::Malformed(format!("{}: {e}", path.display())))
}

fn print_json<T: Serialize>(value: &T) {
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = writeln!(io::stdout(), "{}", serde_json::to_string_pretty(value).expect("plain data"));
}

fn construct(args: ConstructArgs) -> Outcome {
    let need = |name: &str, v: Option<usize>| v.ok_or_else(|| Fail::Malformed(format!("--{name} is required")));
    let k = || args.k.ok_or_else(|| Fail::Malformed("--k is required".into()));
    let rejected = |e: gracelab::ConstructionError| Fail::Rejected(e.to_string());
    let lg = match args.family.as_str() {
        "g1mnk" => label_g1mnk(need("m", args.m)?, need("n", args.n)?, k()?).map_err(rejected)?,
        "spider12" => label_spider_1k2(k()?).map_err(rejected)?,
        "star-apex" => {
            let d = args.d.ok_or_else(|| Fail::Malformed("--d is required".into()))?;
            label_star_with_apex(k()?, d).map_err(rejected)?
        }
        "caterpillar" => {
            let spec = if args.odd {
                CaterpillarSpec::odd(args.a.clone(), args.b.clone())
            } else {
                CaterpillarSpec::even(args.a.clone(), args.b.clone())
            };
            let ct = build_caterpillar(&spec).map_err(malformed)?;
            let side = match args.side {
                SideArg::A => Side::A,
                SideArg::B => Side::B,
            };
            let lg = label_caterpillar(&ct, side).map_err(rejected)?;
            if let Some(k) = args.k {
                if k != lg.k {
                    return Err(Fail::Rejected(format!("side {:?} gives k = {}, not {k}", side, lg.k)));
                }
            }
            lg
        }
        name => {
            let mut params = BTreeMap::new();
            for (key, v) in [("n", args.n), ("m", args.m), ("t", args.t), ("r", args.r)] {
                if let Some(v) = v {
                    params.insert(key.to_string(), v);
                }
            }
            let family = Family::from_params(name, &params).map_err(malformed)?;
            family.build().map_err(malformed)?;
            let k = k()?;
            construct_cell(&family, k)
                .ok_or_else(|| Fail::Rejected(format!("no known construction for {family} with k = {k}")))?
        }
    };
    if let Some(path) = &args.dot {
        write(path, &lg.labeling.to_dot(&lg.graph))?;
    }
    print_json(&lg);
    Ok(ExitCode::SUCCESS)
}

fn run_verify(graph: &str, labeling: &Path, k: Option<Label>) -> Outcome {
    let g = load_graph(graph)?;
    let f = load_labeling(labeling)?;
    let verdict = verify(&g, &f).map_err(malformed)?;
    print_json(&verdict);
    let ok = match k {
        Some(k) => verdict.is_valid_with(k),
        None => verdict.valid,
    };
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn transform(op: TransformOp) -> Outcome {
    let result = match op {
        TransformOp::Attach { graph, labeling, t } => attach_pendants(&load_graph(&graph)?, &load_labeling(&labeling)?, t),
        TransformOp::Delete { graph, labeling, vertex } => {
            delete_apex(&load_graph(&graph)?, &load_labeling(&labeling)?, vertex)
        }
        TransformOp::Union { g, g_labeling, h, h_labeling } => union_labeling(
            &load_graph(&g)?,
            &load_labeling(&g_labeling)?,
            &load_graph(&h)?,
            &load_labeling(&h_labeling)?,
        ),
        TransformOp::CycleEdge { graph, labeling } => cycle_edge_delete(&load_graph(&graph)?, &load_labeling(&labeling)?),
        TransformOp::Swap { m, n, k, i } => four_partite_swap(m, n, k, i),
    };
    match result {
        Ok(r) => {
            print_json(&r);
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ TransformError::Labeling(_)) | Err(e @ TransformError::Graph(_)) => Err(malformed(e)),
        Err(e) => Err(Fail::Rejected(e.to_string())),
    }
}

fn config(k: Label, limits: &LimitArgs) -> SearchConfig {
    SearchConfig {
        node_limit: limits.node_limit,
        time_limit: limits.time_limit,
        workers: limits.workers,
        use_alpha_gate: !limits.no_alpha_gate,
        ..SearchConfig::new(k)
    }
}

fn search(args: SearchArgs) -> Outcome {
    let g = load_graph(&args.graph)?;
    let cfg = config(args.k, &args.limits);
    let limited = match args.enumerate {
        Some(n) => {
            let cfg = cfg.enumerate(if n == 0 { None } else { Some(n) });
            let out = enumerate_labelings(&g, &cfg).map_err(malformed)?;
            print_json(&out);
            out.limit.is_some()
        }
        None => {
            let out = exists_labeling(&g, &cfg).map_err(malformed)?;
            print_json(&out);
            matches!(out.status, SearchStatus::Inconclusive { .. })
        }
    };
    Ok(if limited { ExitCode::from(3) } else { ExitCode::SUCCESS })
}

/// Survey spec: a list of requests, or an object with requests and limits.
#[derive(Deserialize)]
#[serde(untagged)]
enum SurveySpec {
    List(Vec<SurveyRequest>),
    Full {
        requests: Vec<SurveyRequest>,
        #[serde(default)]
        node_limit: Option<u64>,
        #[serde(default)]
        time_limit_ms: Option<u64>,
    },
}

fn run_survey(spec: &Path, out: &Path, limits: LimitArgs) -> Outcome {
    let spec: SurveySpec = serde_json::from_str(&read(spec)?).map_err(|e| Fail::Malformed(format!("{}: {e}", spec.display())))?;
    let mut cfg = config(1, &limits);
    let requests = match spec {
        SurveySpec::List(r) => r,
        SurveySpec::Full {
            requests,
            node_limit,
            time_limit_ms,
        } => {
            cfg.node_limit = cfg.node_limit.or(node_limit);
            cfg.time_limit = cfg.time_limit.or(time_limit_ms.map(Duration::from_millis));
            requests
        }
    };
    let format = TableFormat::from_path(out);
    let mut table = if out.exists() {
        ExistenceTable::parse(&read(out)?, format).map_err(malformed)?
    } else {
        ExistenceTable::new()
    };
    let before = table.len();
    let mut write_error = None;
    let added = survey(&requests, &cfg, &mut table, |t| {
        if let Err(Fail::Malformed(e) | Fail::Rejected(e)) = write(out, &t.render(format)) {
            write_error = Some(e.clone());
            return Err(gracelab::SearchError::Survey(e));
        }
        Ok(())
    });
    if let Some(e) = write_error {
        return Err(Fail::Malformed(e));
    }
    added.map_err(malformed)?;
    write(out, &table.render(format))?;
    eprintln!("{} rows kept, {} computed, table at {}", before, table.len() - before, out.display());
    Ok(ExitCode::SUCCESS)
}

fn run_fixtures(check: bool, export: Option<PathBuf>) -> Outcome {
    let all = fixtures();
    if let Some(path) = &export {
        write(path, &(serde_json::to_string_pretty(&all).expect("plain data") + "\n"))?;
    }
    let mut bad = 0;
    for e in &all {
        if check {
            let verdict = verify(&e.graph, &e.labeling).map_err(malformed)?;
            let ok = verdict.is_valid_with(e.expected_k);
            bad += usize::from(!ok);
            let _ = writeln!(io::stdout(), "{:<10} k={} {}", e.name, e.expected_k, if ok { "ok" } else { "INVALID" });
        } else if export.is_none() {
            let _ = writeln!(io::stdout(), "{:<10} k={} {}", e.name, e.expected_k, e.graph.name());
        }
    }
    Ok(if bad == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(args) => construct(args),
        Command::Verify { graph, labeling, k } => run_verify(&graph, &labeling, k),
        Command::Transform { op } => transform(op),
        Command::Search(args) => search(args),
        Command::Survey { spec, out, limits } => run_survey(&spec, &out, limits),
        Command::Fixtures { check, export } => run_fixtures(check, export),
    };
    match result {
        Ok(code) => code,
        Err(Fail::Rejected(msg)) => {
            eprintln!("gracelab: {msg}");
            ExitCode::from(1)
        }
        Err(Fail::Malformed(msg)) => {
            eprintln!("gracelab: {msg}");
            ExitCode::from(2)
        }
    }
}
