//! Command-line front end: construct groups, emit their power graphs, run
//! the line-graph classification, and execute verification sweeps.
//!
//! Exit codes: 0 success/agreement, 1 theorem-oracle disagreement, 2 usage
//! error, 3 resource cap exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use pgline::classify::{self, CatalogEntry, SweepOptions};
use pgline::group::{self, Family, FiniteGroup};
use pgline::line;
use pgline::power;
use pgline::SimpleGraph;
use serde_json::json;
use std::fs;
use std::io::Write as _;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_DISAGREE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "pgline",
    version,
    about = "Power graphs of finite groups and their line-graph classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    /// The full power graph P(G).
    Power,
    /// P*(G): the identity vertex removed.
    Deleted,
    /// P**(G): all dominating vertices removed.
    Proper,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Edges,
    Json,
}

#[derive(Parser)]
struct FamilyArgs {
    /// Group family: cyclic, dihedral, quaternion, heisenberg, modular,
    /// product, custom.
    #[arg(long)]
    family: String,
    /// Parameter n (cyclic order; dihedral rotations; quaternion exponent, order 2^n).
    #[arg(long)]
    n: Option<usize>,
    /// Odd prime p for the heisenberg and modular families.
    #[arg(long)]
    p: Option<usize>,
    /// Abelian product spec, e.g. "2x4x3" for Z_2 x Z_4 x Z_3.
    #[arg(long)]
    spec: Option<String>,
    /// Path of a group JSON document for --family custom.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a group and emit it as JSON.
    Group {
        #[command(flatten)]
        family: FamilyArgs,
        /// Output path; stdout when omitted.
        #[arg(long)]
        output: Option<String>,
    },
    /// Emit a power graph of a group.
    Graph {
        #[command(flatten)]
        family: FamilyArgs,
        /// Which graph to emit.
        #[arg(long, value_enum, default_value = "power")]
        kind: GraphKind,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
        #[arg(long)]
        output: Option<String>,
    },
    /// Run both line-graph oracles and all applicable theorem predictions.
    Classify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "proper")]
        kind: GraphKind,
        /// Vertex cap for the forbidden-pattern oracle.
        #[arg(long)]
        pattern_cap: Option<usize>,
        #[arg(long)]
        output: Option<String>,
    },
    /// Sweep a catalog of groups and verify every classification statement.
    Verify {
        /// Largest group order to include.
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        /// Restrict the catalog to one family (cyclic, abelian, dihedral,
        /// quaternion, heisenberg, modular, product).
        #[arg(long)]
        only: Option<String>,
        /// Upper bound for the family parameter n under --only.
        #[arg(long)]
        max_n: Option<usize>,
        /// Vertex cap for the forbidden-pattern oracle.
        #[arg(long)]
        pattern_cap: Option<usize>,
        /// Worker threads for the sweep; defaults to the available cores.
        #[arg(long)]
        jobs: Option<usize>,
        /// Path for the JSON-lines report; stdout when "-", skipped when omitted.
        #[arg(long)]
        output: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn cap(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_CAP,
            message: message.into(),
        }
    }
}

fn env_usize(name: &str) -> Option<usize> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

/// PGLINE_MAX_ORDER overrides the group-order ceiling; PGLINE_PATTERN_CAP
/// overrides the forbidden-search vertex ceiling.
fn order_cap() -> usize {
    env_usize("PGLINE_MAX_ORDER").unwrap_or(group::DEFAULT_ORDER_CAP)
}

fn pattern_cap(flag: Option<usize>) -> usize {
    flag.or_else(|| env_usize("PGLINE_PATTERN_CAP"))
        .unwrap_or(line::DEFAULT_PATTERN_CAP)
}

fn build_group(args: &FamilyArgs) -> Result<FiniteGroup, CliError> {
    let need_n = || {
        args.n
            .ok_or_else(|| CliError::usage(format!("--family {} needs --n", args.family)))
    };
    let need_p = || {
        args.p
            .ok_or_else(|| CliError::usage(format!("--family {} needs --p", args.family)))
    };
    let group = match args.family.as_str() {
        "cyclic" => group::make_cyclic(need_n()?),
        "dihedral" => group::make_dihedral(need_n()?),
        "quaternion" => group::make_generalized_quaternion(need_n()?),
        "heisenberg" => group::make_heisenberg(need_p()?),
        "modular" => group::make_modular_maximal_cyclic(need_p()?),
        "product" => {
            let spec = args
                .spec
                .as_deref()
                .ok_or_else(|| CliError::usage("--family product needs --spec, e.g. 2x4"))?;
            let moduli = parse_product_spec(spec)?;
            group::make_abelian(&moduli)
        }
        "custom" => {
            let path = args
                .input
                .as_deref()
                .ok_or_else(|| CliError::usage("--family custom needs --input GROUP.json"))?;
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))?;
            let doc: group::GroupDocument = serde_json::from_str(&text)
                .map_err(|e| CliError::usage(format!("bad group document {path}: {e}")))?;
            FiniteGroup::from_document(doc, order_cap())
        }
        other => return Err(CliError::usage(format!("unknown family {other:?}"))),
    };
    let group = group.map_err(|e| match e {
        pgline::GroupError::OrderCapExceeded { .. } => CliError::cap(e.to_string()),
        _ => CliError::usage(e.to_string()),
    })?;
    if group.order() > order_cap() {
        return Err(CliError::cap(format!(
            "group order {} exceeds cap {}",
            group.order(),
            order_cap()
        )));
    }
    Ok(group)
}

fn parse_product_spec(spec: &str) -> Result<Vec<usize>, CliError> {
    spec.split(['x', 'X'])
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| CliError::usage(format!("bad product spec component {tok:?}")))
        })
        .collect()
}

fn graph_of_kind(g: &FiniteGroup, kind: GraphKind) -> SimpleGraph {
    match kind {
        GraphKind::Power => power::power_graph(g),
        GraphKind::Deleted => power::deleted_power_graph(g),
        GraphKind::Proper => power::proper_power_graph(g).proper,
    }
}

fn emit(text: &str, output: Option<&str>) -> Result<(), CliError> {
    match output {
        None | Some("-") => {
            print!("{text}");
            std::io::stdout().flush().ok();
            Ok(())
        }
        Some(path) => fs::write(path, text).map_err(|e| CliError {
            code: EXIT_USAGE,
            message: format!("cannot write {path}: {e}"),
        }),
    }
}

fn render_graph(graph: &SimpleGraph, format: Format, name: &str) -> String {
    match format {
        Format::Edges => graph.to_edge_list(),
        Format::Dot => graph.to_dot(name),
        Format::Json => {
            let doc = json!({
                "n": graph.n(),
                "labels": graph.labels(),
                "edges": graph.edges(),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
    }
}

fn kind_name(kind: GraphKind) -> &'static str {
    match kind {
        GraphKind::Power => "power",
        GraphKind::Deleted => "deleted",
        GraphKind::Proper => "proper",
    }
}

fn family_kind(family: &Family) -> &'static str {
    match family {
        Family::Cyclic(_) => "cyclic",
        Family::Dihedral(_) => "dihedral",
        Family::Quaternion(_) => "quaternion",
        Family::Heisenberg(_) => "heisenberg",
        Family::Modular(_) => "modular",
        Family::Product(_) => "product",
        Family::Custom => "custom",
    }
}

fn family_parameter(family: &Family) -> Option<usize> {
    match family {
        Family::Cyclic(n) | Family::Dihedral(n) | Family::Quaternion(n) => Some(*n),
        Family::Heisenberg(p) | Family::Modular(p) => Some(*p),
        _ => None,
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Group { family, output } => {
            let g = build_group(&family)?;
            let doc = g.to_document();
            let text = format!("{}\n", serde_json::to_string_pretty(&doc).unwrap());
            emit(&text, output.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Graph {
            family,
            kind,
            format,
            output,
        } => {
            let g = build_group(&family)?;
            let graph = graph_of_kind(&g, kind);
            let name = format!("{}_{}", kind_name(kind), family_kind(g.family()));
            let text = render_graph(&graph, format, &name);
            emit(&text, output.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Classify {
            family,
            kind,
            pattern_cap: cap_flag,
            output,
        } => {
            let g = build_group(&family)?;
            let graph = graph_of_kind(&g, kind);
            let cap = pattern_cap(cap_flag);
            let forbidden = line::is_line_graph_forbidden(&graph, cap).ok();
            let partition = line::krausz_recognize(&graph);
            let krausz_line = partition.is_some();
            if let Some(f) = &forbidden {
                if f.is_line != krausz_line {
                    eprintln!("oracle split on {}:\n{}", g.family(), graph.to_edge_list());
                    return Ok(EXIT_DISAGREE);
                }
            }
            // the classification statements speak about P and P**; none
            // applies to the deleted graph
            let predictions: Vec<_> = match kind {
                GraphKind::Power => vec![classify::predict_power_line(&g)],
                GraphKind::Proper => classify::proper_predictions(&g),
                GraphKind::Deleted => Vec::new(),
            };
            let applicable: Vec<&classify::TheoremPrediction> =
                predictions.iter().filter(|p| p.applicable).collect();
            let agree = applicable
                .iter()
                .all(|p| p.predicted_line == Some(krausz_line));
            let witness = forbidden
                .as_ref()
                .and_then(|f| f.witness.as_ref())
                .map(|w| {
                    json!({
                        "pattern": w.pattern,
                        "vertices": w.vertices.iter().map(|&v| graph.label(v)).collect::<Vec<_>>(),
                    })
                });
            let record = json!({
                "family": g.family().to_string(),
                "order": g.order(),
                "kind": kind_name(kind),
                "vertices": graph.n(),
                "edges": graph.edge_count(),
                "is_line": krausz_line,
                "forbidden_ran": forbidden.is_some(),
                "witness": witness,
                "predictions": predictions.iter().map(|p| json!({
                    "theorem": p.theorem.as_str(),
                    "applicable": p.applicable,
                    "predicted": p.predicted_line,
                    "matched_case": p.matched_case,
                })).collect::<Vec<_>>(),
                "agree": agree,
            });
            let text = format!("{}\n", serde_json::to_string_pretty(&record).unwrap());
            emit(&text, output.as_deref())?;
            Ok(if agree { EXIT_OK } else { EXIT_DISAGREE })
        }
        Command::Verify {
            max_order,
            only,
            max_n,
            pattern_cap: cap_flag,
            jobs,
            output,
        } => {
            let max_order = max_order.min(order_cap());
            let mut catalog = classify::default_catalog(max_order);
            if let Some(filter) = &only {
                if filter == "abelian" {
                    catalog.retain(|e| e.group.is_abelian());
                } else {
                    catalog.retain(|e| family_kind(e.group.family()) == filter);
                }
                if catalog.is_empty() {
                    return Err(CliError::usage(format!("no catalog family {filter:?}")));
                }
            }
            if let Some(limit) = max_n {
                catalog.retain(|e| family_parameter(e.group.family()).is_none_or(|n| n <= limit));
            }
            let opts = SweepOptions {
                pattern_cap: pattern_cap(cap_flag),
                jobs: jobs.unwrap_or_else(|| {
                    std::thread::available_parallelism()
                        .map(|n| n.get())
                        .unwrap_or(1)
                }),
            };
            let report = run_sweep(&catalog, &opts)?;
            if let Some(path) = output.as_deref() {
                if path == "-" {
                    print!("{}", report.to_jsonl());
                    eprint!("{}", report.summary_table());
                } else {
                    emit(&report.to_jsonl(), Some(path))?;
                    print!("{}", report.summary_table());
                }
            } else {
                print!("{}", report.summary_table());
            }
            Ok(if report.all_agree {
                EXIT_OK
            } else {
                EXIT_DISAGREE
            })
        }
    }
}

fn run_sweep(
    catalog: &[CatalogEntry],
    opts: &SweepOptions,
) -> Result<classify::SweepReport, CliError> {
    classify::verify_sweep(catalog, opts).map_err(|split| CliError {
        code: EXIT_DISAGREE,
        message: split.to_string(),
    })
}
