use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eop_core::conditions::condition_report;
use eop_core::eop::{eop_number_by_components, injective_coloring, star_decomposition, DEFAULT_EDGE_GUARD};
use eop_core::families::{
    audit_family, predict_extremal_class_with, FamilyId, FamilyInstance, ParamBox, Readings,
};
use eop_core::graph::{parse_graph6, write_graph6, Graph};
use eop_core::harness::{builtin_corpus, parse_theorems, read_corpus, scan, ScanOptions, ScanVerdict, Theorem};

#[derive(Parser)]
#[command(name = "eop", version, about = "Edge open packing number toolkit")]
struct Cli {
    /// Output layout; `edges` also switches graph input to edge lists.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    /// Worker threads for scans and audits (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Largest edge count the brute-force oracle and colouring accept.
    #[arg(long = "guard-m", global = true, default_value_t = DEFAULT_EDGE_GUARD)]
    guard_m: usize,
    /// Construction for an ambiguous family, e.g. `R11=apex:path2`.
    #[arg(long, global = true)]
    reading: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Exact edge open packing number with a maximum set.
    Rho {
        /// graph6 string, edge list "n; u v; ...", a file, or `-` for stdin.
        input: Option<String>,
    },
    /// Verdicts of the four window conditions for target `t`.
    Conditions {
        #[arg(long)]
        t: usize,
        input: Option<String>,
    },
    /// Extremal class from structure and from the exact solver.
    Classify { input: Option<String> },
    /// Builds a family member, e.g. `generate R1 s=4`.
    Generate {
        family: String,
        params: Vec<String>,
    },
    /// Checks theorem predictions over a corpus.
    Scan {
        /// Built-in corpus of connected graphs up to this order.
        #[arg(long = "max-n", default_value_t = 7, conflicts_with = "corpus")]
        max_n: usize,
        /// graph6 corpus file, one graph per line.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// e.g. `t-window(2,3),m3,invariants`.
        #[arg(long)]
        theorems: Option<String>,
    },
    /// Sweeps a family over a parameter box.
    Audit {
        family: String,
        /// Upper bound for every parameter.
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// Injective chromatic index with an optimal colouring.
    ChiInj { input: Option<String> },
}

/// Exit status 1: bad usage or input.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// 0 when nothing contradicted a prediction, 2 otherwise.
type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let mut readings = Readings::default();
    for r in &cli.reading {
        readings.apply(r)?;
    }
    match &cli.command {
        Command::Rho { input } => rho(cli, &load(cli, input.as_deref())?),
        Command::Conditions { t, input } => conditions(cli, &load(cli, input.as_deref())?, *t),
        Command::Classify { input } => classify(cli, &load(cli, input.as_deref())?, &readings),
        Command::Generate { family, params } => generate(cli, family, params, &readings),
        Command::Scan { max_n, corpus, theorems } => {
            let graphs = match corpus {
                Some(path) => read_corpus(&fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?)?,
                None => builtin_corpus(*max_n)?,
            };
            let theorems = match theorems {
                Some(list) => parse_theorems(list)?,
                None => Theorem::defaults(),
            };
            let options = ScanOptions { theorems, readings, jobs: cli.jobs, guard: cli.guard_m };
            let report = scan(&graphs, &options)?;
            match cli.format {
                Format::Records => print!("{}", report.to_records()),
                _ => print!("{}", report.to_text()),
            }
            Ok(report.summary.mismatches() == 0)
        }
        Command::Audit { family, max } => {
            let family = family.parse::<FamilyId>()?;
            let report = with_pool(cli.jobs, || audit_family(family, ParamBox::new(*max)?, &readings))??;
            match cli.format {
                Format::Records => report.records().iter().for_each(|l| println!("{l}")),
                _ => print!("{report}"),
            }
            Ok(report.all_pass())
        }
        Command::ChiInj { input } => {
            let g = load(cli, input.as_deref())?;
            let coloring = injective_coloring(&g, cli.guard_m)?;
            println!("chi_inj={}", coloring.count);
            for (c, class) in coloring.classes().iter().enumerate() {
                println!("colour {c}: {}", edge_names(&g, class, " "));
            }
            Ok(true)
        }
    }
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    Ok(pool.install(f))
}

fn load(cli: &Cli, input: Option<&str>) -> Result<Graph, Failure> {
    let text = match input {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
        Some(arg) if Path::new(arg).is_file() => fs::read_to_string(arg)?,
        Some(arg) => arg.to_string(),
    };
    let lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect::<Vec<_>>();
    if lines.is_empty() {
        return Err(Failure("no graph given".into()));
    }
    if cli.format == Format::Edges || lines.iter().any(|l| l.contains(';')) {
        return Ok(Graph::parse_edge_list(&lines.join(";"))?);
    }
    if lines.len() > 1 {
        return Err(Failure(format!("expected one graph6 record, found {}", lines.len())));
    }
    Ok(parse_graph6(lines[0])?)
}

fn edge_names(g: &Graph, ids: &[usize], sep: &str) -> String {
    if ids.is_empty() {
        return "-".into();
    }
    ids.iter()
        .map(|&id| {
            let e = g.edge(id);
            format!("{}-{}", e.u, e.v)
        })
        .collect::<Vec<_>>()
        .join(sep)
}

fn rho(cli: &Cli, g: &Graph) -> Outcome {
    let (rho, witness) = eop_number_by_components(g);
    let shape = match star_decomposition(g, &witness) {
        Ok(d) => d.shape().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(","),
        Err(_) => "-".into(),
    };
    let components = g.components().len();
    if cli.format == Format::Records {
        println!(
            "{}\tn={}\tm={}\trho={rho}\twitness={}\tstars={shape}",
            write_graph6(g)?,
            g.order(),
            g.size(),
            edge_names(g, &witness, ",")
        );
        return Ok(true);
    }
    if components > 1 {
        println!("note: graph has {components} components; rho is the sum over them");
    }
    println!("rho={rho}");
    println!("witness: {}", edge_names(g, &witness, " "));
    println!("star leaf counts: {shape}");
    Ok(true)
}

/// Prints the record a corpus scan would produce for `g` alone.
fn single_record(cli: &Cli, g: &Graph, theorem: Theorem, readings: &Readings) -> Outcome {
    let options = ScanOptions { theorems: vec![theorem], readings: readings.clone(), jobs: cli.jobs, guard: cli.guard_m };
    let report = scan(std::slice::from_ref(g), &options)?;
    let mut clean = true;
    for r in &report.records {
        println!("{r}");
        clean &= r.verdict != ScanVerdict::Mismatch;
    }
    Ok(clean)
}

fn conditions(cli: &Cli, g: &Graph, t: usize) -> Outcome {
    let report = condition_report(g, t)?;
    if cli.format != Format::Records {
        for (i, v) in report.verdicts().iter().enumerate() {
            println!("C{}: {v}", i + 1);
        }
        println!("window 2 <= rho <= {t}: {}", if report.window() { "predicted" } else { "excluded" });
    }
    single_record(cli, g, Theorem::Window(t), &Readings::default())
}

fn classify(cli: &Cli, g: &Graph, readings: &Readings) -> Outcome {
    let prediction = predict_extremal_class_with(g, readings)?;
    if cli.format != Format::Records {
        println!("class: {}", prediction.class);
        if prediction.matched.len() > 1 {
            let all = prediction.matched.iter().map(|c| c.tag()).collect::<Vec<_>>();
            println!("also matches: {}", all.join(", "));
        }
        for f in &prediction.families {
            println!("family: {f}");
        }
    }
    single_record(cli, g, Theorem::Classes, readings)
}

fn generate(cli: &Cli, family: &str, params: &[String], readings: &Readings) -> Outcome {
    let family = family.parse::<FamilyId>()?;
    let mut instance = FamilyInstance::from_assignments(family, params)?;
    if let Some(r) = readings.reading(family).filter(|_| family.is_ambiguous()) {
        instance = instance.with_reading(r)?;
    }
    let g = instance.generate()?;
    match cli.format {
        Format::Edges => println!("{}", g.to_edge_list()),
        _ => println!("{}", write_graph6(&g)?),
    }
    Ok(true)
}
