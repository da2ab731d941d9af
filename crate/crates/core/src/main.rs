use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use storient::census::run_census;
use storient::constructions::{alternation_graph, odd_girth_blowup, product, ProductKind, Word};
use storient::transforms::{add_to_complete, delete_to_empty, lift_to_matching, validate_trace};
use storient::{
    generate, parse_graph6, write_graph6, Error, Family, Graph, Mode, SolveVerdict, Solver, Status,
};

#[derive(Parser)]
#[command(
    name = "storient",
    version,
    about = "Semi-transitive orientation toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide orientability of each graph6 line; prints JSON lines.
    Check {
        #[arg(long, value_enum, default_value_t = CheckMode::SemiTransitive)]
        mode: CheckMode,
        /// Input files; standard input when none are given.
        files: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a semi-transitive orientation of each graph6 line.
    Orient {
        files: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an edit pipeline from a found orientation; prints the trace as JSON.
    Transform {
        #[arg(long, value_enum)]
        mode: TransformMode,
        /// graph6 string or graph name; first line of standard input if absent.
        graph: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count non-orientable graphs on n vertices.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected_only: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Product of two graphs.
    Product {
        #[arg(long, value_enum)]
        kind: KindArg,
        g: String,
        h: String,
        /// Also print a JSON verdict line.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Join all pairs at the ends of a simple 3-edge path.
    Blowup {
        graph: String,
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Alternation graph of a word; vertices are the sorted letters.
    Word {
        word: String,
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckMode {
    SemiTransitive,
    Transitive,
}

// variant names become the CLI values to-empty, to-complete, to-matching
#[allow(clippy::enum_variant_names)]
#[derive(Clone, Copy, ValueEnum)]
enum TransformMode {
    ToEmpty,
    ToComplete,
    ToMatching,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Cartesian,
    Tensor,
    Lexicographic,
    Strong,
}

impl From<KindArg> for ProductKind {
    fn from(k: KindArg) -> ProductKind {
        match k {
            KindArg::Cartesian => ProductKind::Cartesian,
            KindArg::Tensor => ProductKind::Tensor,
            KindArg::Lexicographic => ProductKind::Lexicographic,
            KindArg::Strong => ProductKind::Strong,
        }
    }
}

enum Failure {
    /// Bad arguments or unreadable input; exit code 2.
    Usage(String),
    /// The command ran but something it processed failed; exit code 1.
    Record(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn usage_or_record(e: Error) -> Failure {
    match e {
        Error::Argument(_) | Error::UnsupportedSize(_) | Error::Format { .. } => {
            Failure::Usage(e.to_string())
        }
        _ => Failure::Record(e.to_string()),
    }
}

#[derive(Serialize)]
struct CheckRecord {
    source: String,
    line: usize,
    input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    st_orientable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    transitive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    filtered_vertex: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    offset: Option<usize>,
}

impl CheckRecord {
    fn new(source: &str, line: usize, input: &str) -> CheckRecord {
        CheckRecord {
            source: source.to_string(),
            line,
            input: input.to_string(),
            st_orientable: None,
            transitive: None,
            filtered_vertex: None,
            witness: None,
            nodes: None,
            error: None,
            offset: None,
        }
    }

    fn fail(mut self, e: &Error) -> CheckRecord {
        self.error = Some(e.to_string());
        if let Error::Format { offset, .. } = e {
            self.offset = Some(*offset);
        }
        self
    }

    fn to_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes") + "\n"
    }

    /// Decides `g` and fills the verdict fields, or the error fields.
    fn decide(mut self, g: &Graph, mode: Mode, solver: &Solver) -> (CheckRecord, bool) {
        match solver.decide(g, mode) {
            Ok(verdict) => {
                self.fill(verdict, mode);
                (self, true)
            }
            Err(e) => (self.fail(&e), false),
        }
    }

    fn fill(&mut self, verdict: SolveVerdict, mode: Mode) {
        let orientable = verdict.is_orientable();
        match mode {
            Mode::SemiTransitive => self.st_orientable = Some(orientable),
            Mode::Transitive => self.transitive = Some(orientable),
        }
        match verdict.status {
            Status::Orientable(o) => self.witness = Some(o.to_digraph_text()),
            Status::Filtered(v) => self.filtered_vertex = Some(v),
            Status::NotOrientable => {}
        }
        self.nodes = Some(verdict.stats.nodes);
    }
}

/// Named graph (`W5`, `K2,3`, ...) or graph6; `g6:` forces graph6.
fn graph_arg(s: &str) -> Result<Graph, Failure> {
    let s = s.trim();
    if let Some(code) = s.strip_prefix("g6:") {
        return parse_graph6(code).map_err(usage_or_record);
    }
    match s.parse::<Family>() {
        Ok(f) => generate(f).map_err(usage_or_record),
        Err(_) => parse_graph6(s)
            .map_err(|e| Failure::Usage(format!("`{s}` is neither a graph name nor graph6: {e}"))),
    }
}

/// (source name, contents) for each input; standard input when none given.
fn read_inputs(files: &[PathBuf]) -> Result<Vec<(String, String)>, Failure> {
    if files.is_empty() {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(vec![("-".to_string(), text)]);
    }
    files
        .iter()
        .map(|p| {
            if p.as_os_str() == "-" {
                let mut text = String::new();
                io::stdin().read_to_string(&mut text)?;
                return Ok(("-".to_string(), text));
            }
            let text = fs::read_to_string(p)
                .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            Ok((p.display().to_string(), text))
        })
        .collect()
}

fn open_out(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(p) => Box::new(io::BufWriter::new(
            fs::File::create(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn emit_graph(g: &Graph, check: bool, label: &str, out: &Option<PathBuf>) -> Result<bool, Failure> {
    let code = write_graph6(g).map_err(usage_or_record)?;
    let mut w = open_out(out)?;
    writeln!(w, "{code}")?;
    let mut ok = true;
    if check {
        let (rec, decided) =
            CheckRecord::new(label, 1, &code).decide(g, Mode::SemiTransitive, &Solver::from_env());
        ok = decided;
        w.write_all(rec.to_line().as_bytes())?;
    }
    w.flush()?;
    Ok(ok)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let solver = Solver::from_env();
    match cli.command {
        Command::Check { mode, files, out } => {
            let mode = match mode {
                CheckMode::SemiTransitive => Mode::SemiTransitive,
                CheckMode::Transitive => Mode::Transitive,
            };
            let inputs = read_inputs(&files)?;
            let mut w = open_out(&out)?;
            let mut all_ok = true;
            for (source, text) in &inputs {
                for (i, line) in text.lines().enumerate() {
                    let input = line.trim_end_matches('\r');
                    if input.trim().is_empty() {
                        continue;
                    }
                    let rec = CheckRecord::new(source, i + 1, input);
                    let (rec, ok) = match parse_graph6(input) {
                        Ok(g) => rec.decide(&g, mode, &solver),
                        Err(e) => (rec.fail(&e), false),
                    };
                    all_ok &= ok;
                    w.write_all(rec.to_line().as_bytes())?;
                }
            }
            w.flush()?;
            Ok(all_ok)
        }
        Command::Orient { files, out } => {
            let inputs = read_inputs(&files)?;
            let mut w = open_out(&out)?;
            let mut all_ok = true;
            let mut first = true;
            for (source, text) in &inputs {
                for (i, line) in text.lines().enumerate() {
                    let input = line.trim();
                    if input.is_empty() {
                        continue;
                    }
                    let found = parse_graph6(input)
                        .and_then(|g| solver.find_semi_transitive_orientation(&g));
                    match found {
                        Ok(Some(o)) => {
                            if !first {
                                writeln!(w)?;
                            }
                            first = false;
                            w.write_all(o.to_digraph_text().as_bytes())?;
                        }
                        Ok(None) => {
                            all_ok = false;
                            eprintln!(
                                "{source}:{}: `{input}` has no semi-transitive orientation",
                                i + 1
                            );
                        }
                        Err(e) => {
                            all_ok = false;
                            eprintln!("{source}:{}: {e}", i + 1);
                        }
                    }
                }
            }
            w.flush()?;
            Ok(all_ok)
        }
        Command::Transform { mode, graph, out } => {
            let arg = match graph {
                Some(s) => s,
                None => {
                    let mut text = String::new();
                    io::stdin().read_to_string(&mut text)?;
                    text.lines()
                        .map(str::trim)
                        .find(|l| !l.is_empty())
                        .ok_or_else(|| Failure::Usage("no graph on standard input".into()))?
                        .to_string()
                }
            };
            let g = graph_arg(&arg)?;
            let verdict = solver
                .decide(&g, Mode::SemiTransitive)
                .map_err(usage_or_record)?;
            let o = match verdict.status {
                Status::Orientable(o) => o,
                Status::Filtered(v) => {
                    return Err(Failure::Record(format!(
                        "graph is not semi-transitively orientable: the neighbourhood of \
                         vertex {v} has no transitive orientation"
                    )))
                }
                Status::NotOrientable => return Err(Failure::Record(format!(
                    "graph is not semi-transitively orientable: search exhausted after {} nodes",
                    verdict.stats.nodes
                ))),
            };
            let trace = match mode {
                TransformMode::ToEmpty => delete_to_empty(&o),
                TransformMode::ToComplete => add_to_complete(&o),
                TransformMode::ToMatching => lift_to_matching(&o),
            }
            .map_err(usage_or_record)?;
            if !validate_trace(&trace) {
                return Err(Failure::Record("produced trace failed validation".into()));
            }
            let mut w = open_out(&out)?;
            w.write_all(trace.to_json().map_err(usage_or_record)?.as_bytes())?;
            w.flush()?;
            Ok(true)
        }
        Command::Census {
            n,
            connected_only,
            workers,
            out,
        } => {
            let report =
                run_census(n, connected_only, workers, &solver).map_err(usage_or_record)?;
            let mut w = open_out(&out)?;
            w.write_all(report.to_json().as_bytes())?;
            w.flush()?;
            eprintln!(
                "n={n}: {} non-orientable classes ({} connected), {:.2?}",
                report.class_count(),
                report.non_orientable_connected_classes,
                report.elapsed
            );
            Ok(true)
        }
        Command::Product {
            kind,
            g,
            h,
            check,
            out,
        } => {
            let p =
                product(&graph_arg(&g)?, &graph_arg(&h)?, kind.into()).map_err(usage_or_record)?;
            emit_graph(&p, check, "product", &out)
        }
        Command::Blowup { graph, check, out } => {
            let b = odd_girth_blowup(&graph_arg(&graph)?);
            emit_graph(&b, check, "blowup", &out)
        }
        Command::Word { word, check, out } => {
            let w: Word = word.parse().map_err(usage_or_record)?;
            emit_graph(&alternation_graph(&w), check, "word", &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Record(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
