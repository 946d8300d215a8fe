//! Command-line front end: generate families, compute Borsuk and chromatic
//! numbers with certificates, inspect matroid properties, run the claim
//! verification suite, and search for counterexamples.
//!
//! Exit codes: 0 success / all PASS, 1 usage or input errors, 2 FAIL
//! findings, 3 INCONCLUSIVE results.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use borsukoid::coloring::{borsuk_number, chromatic_number};
use borsukoid::dsatur::Budget;
use borsukoid::families::{
    catalan, catalan_minus, fano, graphic, non_pappus, sbip_gadget, sbip_graphic_example, theta,
    uniform, v_line, SimpleGraph,
};
use borsukoid::graphs::{kneser_graph, ConflictGraph};
use borsukoid::json::{
    matroid_from_str, read_json, sniff_kind, write_json, BorsukDoc, ChromaticDoc,
    ConflictGraphDoc, GraphDoc, MatroidDoc, PathSpecDoc, PropsDoc,
};
use borsukoid::matroid::Matroid;
use borsukoid::verify::claims::{check_all_claims, check_claim, claim_ids};
use borsukoid::verify::{
    check_hedetniemi_instance, has_bip, has_strong_bip, has_two_disjoint_bases, SearchSource,
    Status, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "borsukoid",
    version,
    about = "Exact Borsuk numbers and Kneser-graph chromatic numbers of matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Input path ("-" for stdin); `product` takes the flag twice
    #[arg(long = "in")]
    input: Vec<String>,
    /// Output path (stdout when omitted)
    #[arg(long = "out")]
    output: Option<String>,
    /// Wall-clock budget per exact solve, in milliseconds
    /// (BORSUKOID_BUDGET_MS overrides the default)
    #[arg(long = "budget-ms")]
    budget_ms: Option<u64>,
    /// Seed for randomized sources
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Deterministic mode (the solver is always deterministic; accepted for
    /// interface stability)
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    deterministic: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named family as a matroid or graph JSON document
    Gen {
        #[command(flatten)]
        common: CommonArgs,
        /// One of: uniform, theta, fano, non-pappus, v-line, catalan,
        /// catalan-minus, lattice-path, graphic, sbip-graph, sbip-gadget;
        /// kneser-graph and diameter-graph export the edge list of the
        /// derived graph of a matroid given via --in
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        h: Option<usize>,
    },
    /// Exact Borsuk number of a matroid JSON, with certificate
    Borsuk {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exact chromatic number: of the Kneser graph for a matroid input, of
    /// the graph itself for an edge-list input
    Chroma {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Rank, loops, coloops, components, intersection properties, diameter
    Props {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the registered claim suite (or one claim) and emit JSONL reports
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Claim id, e.g. prop:pappus (all claims when omitted)
        #[arg(long)]
        claim: Option<String>,
    },
    /// Search for Borsuk-property violations over a source of matroids
    Search {
        #[command(flatten)]
        common: CommonArgs,
        /// Source: catalog (default), enum, or random
        #[arg(long, default_value = "catalog")]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Sample count for the random source
        #[arg(long)]
        m: Option<usize>,
    },
    /// Compare f(M (+) M') against min(f(M), f(M')) for two matroid JSONs
    Product {
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // usage errors exit 1; --help/--version print and exit 0
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn effective_budget(common: &CommonArgs) -> Result<Budget, String> {
    if common.budget_ms == Some(0) {
        return Err("--budget-ms must be positive".into());
    }
    let default_ms = std::env::var("BORSUKOID_BUDGET_MS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(60_000);
    Ok(Budget::from_ms(common.budget_ms.unwrap_or(default_ms)))
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn single_input(common: &CommonArgs) -> Result<String, String> {
    match common.input.as_slice() {
        [path] => read_input(path),
        [] => Err("missing --in PATH".into()),
        _ => Err("expected exactly one --in PATH".into()),
    }
}

fn emit<T: serde::Serialize>(common: &CommonArgs, value: &T) -> Result<(), String> {
    match &common.output {
        None => write_json(&mut io::stdout().lock(), value).map_err(|e| e.to_string()),
        Some(path) => {
            let mut file = fs::File::create(path).map_err(|e| format!("creating {path}: {e}"))?;
            write_json(&mut file, value).map_err(|e| e.to_string())
        }
    }
}

fn emit_reports(common: &CommonArgs, reports: &[VerificationReport]) -> Result<ExitCode, String> {
    let mut lines = String::new();
    for report in reports {
        lines.push_str(&serde_json::to_string(report).map_err(|e| e.to_string())?);
        lines.push('\n');
    }
    match &common.output {
        None => print!("{lines}"),
        Some(path) => fs::write(path, &lines).map_err(|e| format!("writing {path}: {e}"))?,
    }
    // summary table on stderr so stdout stays machine-readable
    let mut pass = 0usize;
    let mut fail = 0usize;
    let mut inconclusive = 0usize;
    let mut skipped = 0usize;
    for report in reports {
        match report.status {
            Status::Pass => pass += 1,
            Status::Fail => fail += 1,
            Status::Inconclusive => inconclusive += 1,
            Status::Skipped => skipped += 1,
        }
    }
    eprintln!("claim                instance                                   status");
    eprintln!("-------------------- ------------------------------------------ ------");
    for report in reports {
        eprintln!(
            "{:<20} {:<42} {:?}",
            report.claim_id,
            truncate(&report.instance, 42),
            report.status
        );
    }
    eprintln!("summary: {pass} pass, {fail} fail, {inconclusive} inconclusive, {skipped} skipped");
    Ok(if fail > 0 {
        ExitCode::from(2)
    } else if inconclusive > 0 {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}

fn truncate(text: &str, width: usize) -> String {
    if text.len() <= width {
        text.to_owned()
    } else {
        format!("{}...", &text[..width - 3])
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Gen {
            common,
            family,
            n,
            r,
            m,
            h,
        } => run_gen(&common, &family, n, r, m, h),
        Command::Borsuk { common } => {
            let text = single_input(&common)?;
            let matroid = matroid_from_str(&text, "matroid input").map_err(|e| e.to_string())?;
            let result =
                borsuk_number(&matroid, &effective_budget(&common)?).map_err(|e| e.to_string())?;
            emit(&common, &BorsukDoc::from_result(&result))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Chroma { common } => run_chroma(&common),
        Command::Props { common } => {
            let text = single_input(&common)?;
            let matroid = matroid_from_str(&text, "matroid input").map_err(|e| e.to_string())?;
            emit(&common, &props_of(&matroid))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { common, claim } => {
            let budget = effective_budget(&common)?;
            let reports = match claim {
                Some(id) => check_claim(&id, None, &budget).map_err(|e| {
                    format!("{e}; known claims: {}", claim_ids().join(", "))
                })?,
                None => check_all_claims(&budget).map_err(|e| e.to_string())?,
            };
            emit_reports(&common, &reports)
        }
        Command::Search {
            common,
            family,
            n,
            r,
            m,
        } => run_search(&common, &family, n, r, m),
        Command::Product { common } => {
            if common.input.len() != 2 {
                return Err("product needs --in LEFT --in RIGHT".into());
            }
            let left = matroid_from_str(&read_input(&common.input[0])?, "left matroid")
                .map_err(|e| e.to_string())?;
            let right = matroid_from_str(&read_input(&common.input[1])?, "right matroid")
                .map_err(|e| e.to_string())?;
            let report = check_hedetniemi_instance(&left, &right, &effective_budget(&common)?);
            emit_reports(&common, &[report])
        }
    }
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, String> {
    value.ok_or_else(|| format!("family {family} needs --{flag} INT"))
}

fn run_gen(
    common: &CommonArgs,
    family: &str,
    n: Option<usize>,
    r: Option<usize>,
    m: Option<usize>,
    h: Option<usize>,
) -> Result<ExitCode, String> {
    enum Generated {
        Matroid(String, Matroid),
        Graph(SimpleGraph),
        Conflict(ConflictGraph),
    }
    let generated = match family {
        "uniform" => {
            let (r, n) = (need(r, "r", family)?, need(n, "n", family)?);
            Generated::Matroid(
                format!("uniform({r},{n})"),
                uniform(r, n).map_err(|e| e.to_string())?,
            )
        }
        "theta" => {
            let n = need(n, "n", family)?;
            Generated::Matroid(format!("theta({n})"), theta(n).map_err(|e| e.to_string())?)
        }
        "fano" => Generated::Matroid("fano".into(), fano()),
        "non-pappus" => Generated::Matroid("non-pappus".into(), non_pappus()),
        "v-line" => {
            let h = need(h, "h", family)?;
            Generated::Matroid(
                format!("v_line({h})"),
                v_line(h).map_err(|e| e.to_string())?,
            )
        }
        "catalan" => {
            let (r, m) = (need(r, "r", family)?, need(m, "m", family)?);
            Generated::Matroid(
                format!("catalan({r},{m})"),
                catalan(r, m).map_err(|e| e.to_string())?,
            )
        }
        "catalan-minus" => {
            let (r, m) = (need(r, "r", family)?, need(m, "m", family)?);
            Generated::Matroid(
                format!("catalan_minus({r},{m})"),
                catalan_minus(r, m).map_err(|e| e.to_string())?,
            )
        }
        "lattice-path" => {
            let doc: PathSpecDoc = read_json(&single_input(common)?, "path spec")
                .map_err(|e| e.to_string())?;
            let spec = doc.into_spec().map_err(|e| e.to_string())?;
            Generated::Matroid(
                "lattice_path".into(),
                borsukoid::families::lattice_path(&spec).map_err(|e| e.to_string())?,
            )
        }
        "graphic" => {
            let doc: GraphDoc =
                read_json(&single_input(common)?, "graph input").map_err(|e| e.to_string())?;
            let graph = doc.into_graph().map_err(|e| e.to_string())?;
            Generated::Matroid(
                "graphic".into(),
                graphic(&graph).map_err(|e| e.to_string())?,
            )
        }
        "sbip-graph" => Generated::Graph(sbip_graphic_example()),
        "sbip-gadget" => Generated::Graph(sbip_gadget()),
        "kneser-graph" => {
            let matroid = matroid_from_str(&single_input(common)?, "matroid input")
                .map_err(|e| e.to_string())?;
            Generated::Conflict(kneser_graph(&matroid).map_err(|e| e.to_string())?)
        }
        "diameter-graph" => {
            let matroid = matroid_from_str(&single_input(common)?, "matroid input")
                .map_err(|e| e.to_string())?;
            Generated::Conflict(
                borsukoid::graphs::diameter_graph(&matroid).map_err(|e| e.to_string())?,
            )
        }
        other => {
            return Err(format!(
                "unknown family {other:?}; known: uniform, theta, fano, non-pappus, v-line, \
                 catalan, catalan-minus, lattice-path, graphic, sbip-graph, sbip-gadget, \
                 kneser-graph, diameter-graph"
            ))
        }
    };
    match generated {
        Generated::Matroid(name, matroid) => {
            emit(common, &MatroidDoc::from_matroid(Some(name), &matroid))?
        }
        Generated::Graph(graph) => emit(common, &GraphDoc::from_graph(&graph))?,
        Generated::Conflict(graph) => emit(common, &ConflictGraphDoc::from_conflict(&graph))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn run_chroma(common: &CommonArgs) -> Result<ExitCode, String> {
    let text = single_input(common)?;
    let budget = effective_budget(common)?;
    let graph = match sniff_kind(&text) {
        Some("matroid") => {
            let matroid = matroid_from_str(&text, "matroid input").map_err(|e| e.to_string())?;
            kneser_graph(&matroid).map_err(|e| e.to_string())?
        }
        Some("graph") => {
            let doc: ConflictGraphDoc =
                read_json(&text, "graph input").map_err(|e| e.to_string())?;
            let mut g = ConflictGraph::new(doc.vertices).map_err(|e| e.to_string())?;
            for (u, v) in doc.edges {
                if u >= doc.vertices || v >= doc.vertices || u == v {
                    return Err(format!("bad edge ({u}, {v})"));
                }
                g.add_edge(u, v);
            }
            g
        }
        _ => return Err("input is neither a matroid nor a graph document".into()),
    };
    let (k, coloring) = chromatic_number(&graph, &budget).map_err(|e| e.to_string())?;
    emit(common, &ChromaticDoc::new(k, &coloring))?;
    Ok(ExitCode::SUCCESS)
}

fn props_of(m: &Matroid) -> PropsDoc {
    let label_list = |set: borsukoid::set::ElementSet| {
        set.iter().map(|i| m.label(i).clone()).collect::<Vec<_>>()
    };
    PropsDoc {
        loops: label_list(m.loops()),
        coloops: label_list(m.coloops()),
        rank: m.rank(),
        components: m.connected_components().count(),
        bip: has_bip(m),
        strong_bip: has_strong_bip(m),
        two_disjoint_bases: has_two_disjoint_bases(m),
        diameter: m.diameter(),
    }
}

fn run_search(
    common: &CommonArgs,
    family: &str,
    n: Option<usize>,
    r: Option<usize>,
    m: Option<usize>,
) -> Result<ExitCode, String> {
    let source = match family {
        "catalog" => SearchSource::Catalog,
        "enum" => SearchSource::Enumeration {
            n: need(n, "n", "enum")?,
            r: need(r, "r", "enum")?,
        },
        "random" => SearchSource::Random {
            n: need(n, "n", "random")?,
            r: need(r, "r", "random")?,
            count: m.unwrap_or(100),
            seed: common.seed,
        },
        other => return Err(format!("unknown search source {other:?}; known: catalog, enum, random")),
    };
    let summary = borsukoid::verify::search_counterexamples(&source, &effective_budget(common)?)
        .map_err(|e| e.to_string())?;
    let has_violations = !summary.violations.is_empty();
    let inconclusive = summary.inconclusive > 0;
    emit(common, &summary)?;
    Ok(if has_violations {
        ExitCode::from(2)
    } else if inconclusive {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}
