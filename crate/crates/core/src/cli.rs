//! The `rainbowsat` command-line front end.
//!
//! Exit codes: 0 on success (and for `check`/`verify-paper`, when the
//! decided property holds), 1 when a decided property fails or a recipe is
//! infeasible, 2 for usage, file, or parse errors.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::claims::{claim_catalog, glob_match, known_discrepancies, verify_claims, Verdict};
use crate::construct::{
    assemble_theorem_graph, build_g_star, build_h, build_rainbow_clique, ConstructError,
};
use crate::graph::{parse_ecg, write_ecg, EdgeColoredGraph};
use crate::rainbow::find_rainbow_path;
use crate::saturation::{blocked_pendant_colors, is_rainbow_free, saturation_defects, Blocked};
use crate::search::{bounds_table, min_saturated_size, SearchBudget};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "rainbowsat",
    version,
    about = "Rainbow-path saturation toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit graphs of the block family in ECG format
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Decide rainbow-freeness or saturation of an ECG file
    Check {
        #[command(subcommand)]
        what: CheckCmd,
    },
    /// Blocked-color queries
    Colors {
        #[command(subcommand)]
        what: ColorsCmd,
    },
    /// Exhaustive searches
    Search {
        #[command(subcommand)]
        what: SearchCmd,
    },
    /// Compare the two closed-form upper bounds
    Bounds {
        #[arg(long = "ell-from")]
        ell_from: u32,
        #[arg(long = "ell-to")]
        ell_to: u32,
        #[arg(long = "n-multiplier", default_value_t = 10)]
        n_multiplier: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the bundled claims catalog and emit a verification report
    #[command(name = "verify-paper")]
    VerifyPaper {
        #[arg(long = "ell-max", default_value_t = 9)]
        ell_max: u32,
        /// Only run claims whose id matches this glob
        #[arg(long)]
        filter: Option<String>,
        /// Write the JSON report to this file
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Args)]
struct OutputFile {
    /// Write to this file instead of standard output
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// The block H on ell vertices
    #[command(name = "H")]
    Block {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        out: OutputFile,
    },
    /// k disjoint copies of H
    Gstar {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        out: OutputFile,
    },
    /// The residue-case witness graph for given n
    Case {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        out: OutputFile,
    },
    /// A rainbow complete graph on a vertices
    #[command(name = "rainbowK")]
    RainbowK {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        out: OutputFile,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Is the graph free of rainbow paths on ell vertices?
    #[command(name = "rainbow-free")]
    RainbowFree {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        json: bool,
        file: PathBuf,
    },
    /// Is the graph rainbow-P_ell-saturated over palette [t]?
    Saturated {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        jobs: Option<usize>,
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum ColorsCmd {
    /// Colors blocked for pendant extension at a vertex
    Blocked {
        #[arg(long)]
        vertex: u32,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        json: bool,
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Least edge count of a saturated t-colored graph on n vertices
    Min {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        jobs: Option<usize>,
        /// Time budget in seconds
        #[arg(long)]
        time: Option<u64>,
    },
}

/// Entry point. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

/// Default search budget, honoring the RS_LAB_BUDGET_SECS override.
fn budget_from_env() -> SearchBudget {
    let mut budget = SearchBudget::default();
    if let Ok(raw) = std::env::var("RS_LAB_BUDGET_SECS") {
        if let Ok(secs) = raw.trim().parse::<u64>() {
            budget.time_limit = Duration::from_secs(secs);
        }
    }
    budget
}

fn with_pool<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R, String> {
    match jobs {
        None => Ok(f()),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| e.to_string()),
    }
}

fn emit(out: &OutputFile, content: &str) -> Result<(), String> {
    match &out.output {
        Some(path) => {
            fs::write(path, content).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<EdgeColoredGraph, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_ecg(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Construct { what } => construct(what),
        Command::Check { what } => check(what),
        Command::Colors { what } => colors(what),
        Command::Search { what } => search(what),
        Command::Bounds {
            ell_from,
            ell_to,
            n_multiplier,
            json,
        } => bounds(ell_from, ell_to, n_multiplier, json),
        Command::VerifyPaper {
            ell_max,
            filter,
            json,
            jobs,
        } => verify_paper(ell_max, filter.as_deref(), json.as_deref(), jobs),
    }
}

fn emit_graph(
    out: &OutputFile,
    command: &str,
    g: &EdgeColoredGraph,
    json: bool,
) -> Result<(), String> {
    if json {
        let payload = json!({
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "n": g.n(),
            "t": g.t(),
            "edges": g.edge_count(),
            "ecg": write_ecg(g),
        });
        emit(out, &format!("{payload:#}\n"))
    } else {
        emit(out, &write_ecg(g))
    }
}

fn construct(cmd: ConstructCmd) -> Result<i32, String> {
    match cmd {
        ConstructCmd::Block { ell, json, out } => {
            let g = build_h(ell).map_err(|e| e.to_string())?;
            emit_graph(&out, "construct.H", &g, json)?;
            Ok(0)
        }
        ConstructCmd::Gstar { ell, k, json, out } => {
            let g = build_g_star(k, ell).map_err(|e| e.to_string())?;
            emit_graph(&out, "construct.gstar", &g, json)?;
            Ok(0)
        }
        ConstructCmd::RainbowK { a, t, json, out } => {
            let g = build_rainbow_clique(a, t).map_err(|e| e.to_string())?;
            emit_graph(&out, "construct.rainbowK", &g, json)?;
            Ok(0)
        }
        ConstructCmd::Case { n, ell, json, out } => match assemble_theorem_graph(n, ell) {
            Ok(assembly) => {
                if json {
                    let payload = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": "construct.case",
                        "n": n,
                        "ell": ell,
                        "feasible": true,
                        "palette": assembly.palette,
                        "palette_note": assembly.palette_note,
                        "block_copies": assembly.block_copies,
                        "expected_edges": assembly.expected_edges,
                        "ecg": write_ecg(&assembly.graph),
                    });
                    emit(&out, &format!("{payload:#}\n"))?;
                } else {
                    let mut text = String::new();
                    if let Some(note) = &assembly.palette_note {
                        text.push_str(&format!("# {note}\n"));
                    }
                    text.push_str(&write_ecg(&assembly.graph));
                    emit(&out, &text)?;
                }
                Ok(0)
            }
            Err(e @ ConstructError::InfeasibleRecipe { .. }) => {
                if json {
                    let payload = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": "construct.case",
                        "n": n,
                        "ell": ell,
                        "feasible": false,
                        "reason": e.to_string(),
                    });
                    emit(&out, &format!("{payload:#}\n"))?;
                } else {
                    println!("INFEASIBLE: {e}");
                }
                Ok(1)
            }
            Err(e) => Err(e.to_string()),
        },
    }
}

fn check(cmd: CheckCmd) -> Result<i32, String> {
    match cmd {
        CheckCmd::RainbowFree { ell, json, file } => {
            let g = load_graph(&file)?;
            let witness = find_rainbow_path(&g, ell, None).map_err(|e| e.to_string())?;
            let free = witness.is_none();
            if json {
                let payload = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "check.rainbow-free",
                    "ell": ell,
                    "n": g.n(),
                    "edges": g.edge_count(),
                    "rainbow_free": free,
                    "witness": witness.as_ref().map(|w| json!({
                        "vertices": w.vertices,
                        "colors": w.colors,
                    })),
                });
                println!("{payload:#}");
            } else if let Some(w) = &witness {
                println!(
                    "NOT RAINBOW-FREE: path {:?} with colors {:?}",
                    w.vertices, w.colors
                );
            } else {
                println!("RAINBOW-FREE");
            }
            Ok(if free { 0 } else { 1 })
        }
        CheckCmd::Saturated {
            ell,
            t,
            json,
            jobs,
            file,
        } => {
            let g = load_graph(&file)?;
            if t != g.t() {
                return Err(format!(
                    "palette mismatch: file declares t = {}, flag asks t = {t}",
                    g.t()
                ));
            }
            if !is_rainbow_free(&g, ell) {
                let w = find_rainbow_path(&g, ell, None)
                    .map_err(|e| e.to_string())?
                    .expect("just decided non-free");
                if json {
                    let payload = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": "check.saturated",
                        "ell": ell,
                        "t": t,
                        "n": g.n(),
                        "edges": g.edge_count(),
                        "rainbow_free": false,
                        "saturated": false,
                        "witness": { "vertices": w.vertices, "colors": w.colors },
                        "defects": [],
                    });
                    println!("{payload:#}");
                } else {
                    println!(
                        "NOT SATURATED: contains rainbow path {:?} with colors {:?}",
                        w.vertices, w.colors
                    );
                }
                return Ok(1);
            }
            let defects =
                with_pool(jobs, || saturation_defects(&g, ell, t))?.map_err(|e| e.to_string())?;
            let saturated = defects.is_empty();
            if json {
                let payload = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "check.saturated",
                    "ell": ell,
                    "t": t,
                    "n": g.n(),
                    "edges": g.edge_count(),
                    "rainbow_free": true,
                    "saturated": saturated,
                    "defects": defects,
                });
                println!("{payload:#}");
            } else if saturated {
                println!("SATURATED, 0 defects");
            } else {
                println!("NOT SATURATED, {} defects", defects.len());
                for d in &defects {
                    println!("{} {} {}", d.u, d.v, d.color);
                }
            }
            Ok(if saturated { 0 } else { 1 })
        }
    }
}

fn colors(cmd: ColorsCmd) -> Result<i32, String> {
    let ColorsCmd::Blocked {
        vertex,
        order,
        json,
        file,
    } = cmd;
    let g = load_graph(&file)?;
    let blocked = blocked_pendant_colors(&g, vertex, order).map_err(|e| e.to_string())?;
    if json {
        let payload = json!({
            "schema_version": SCHEMA_VERSION,
            "command": "colors.blocked",
            "vertex": vertex,
            "order": order,
            "blocked": match blocked {
                Blocked::All => json!("ALL"),
                Blocked::Colors(s) => json!(s.iter().collect::<Vec<u32>>()),
            },
        });
        println!("{payload:#}");
    } else {
        println!("{blocked}");
    }
    Ok(0)
}

fn search(cmd: SearchCmd) -> Result<i32, String> {
    let SearchCmd::Min {
        n,
        ell,
        t,
        jobs,
        time,
    } = cmd;
    let mut budget = budget_from_env();
    if let Some(secs) = time {
        budget.time_limit = Duration::from_secs(secs);
    }
    let outcome =
        with_pool(jobs, || min_saturated_size(n, ell, t, &budget))?.map_err(|e| e.to_string())?;
    let payload = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "search.min",
        "n": n,
        "ell": ell,
        "t": t,
        "minimum": outcome.minimum,
        "exhausted": outcome.exhausted,
        "witness_ecg": outcome.witness.as_ref().map(write_ecg),
        "nodes_explored": outcome.colorings_tested,
        "wall_ms": outcome.wall.as_millis() as u64,
    });
    println!("{payload:#}");
    Ok(0)
}

fn bounds(ell_from: u32, ell_to: u32, multiplier: usize, json: bool) -> Result<i32, String> {
    if ell_from < 5 || ell_to < ell_from {
        return Err(format!(
            "need 5 <= ell-from <= ell-to, got {ell_from}..{ell_to}"
        ));
    }
    let rows = bounds_table(ell_from, ell_to, multiplier);
    if json {
        let payload = json!({
            "schema_version": SCHEMA_VERSION,
            "command": "bounds",
            "rows": rows,
        });
        println!("{payload:#}");
    } else {
        println!(
            "{:>4} {:>6} {:>8} {:>8}  improved",
            "ell", "n", "old", "new"
        );
        for row in &rows {
            println!(
                "{:>4} {:>6} {:>8} {:>8}  {}",
                row.ell, row.n, row.old, row.new, row.improved
            );
        }
    }
    Ok(0)
}

fn verify_paper(
    ell_max: u32,
    filter: Option<&str>,
    json_path: Option<&std::path::Path>,
    jobs: Option<usize>,
) -> Result<i32, String> {
    let catalog = claim_catalog(ell_max).map_err(|e| e.to_string())?;
    let claims: Vec<_> = match filter {
        Some(pattern) => catalog
            .into_iter()
            .filter(|c| glob_match(pattern, &c.id))
            .collect(),
        None => catalog,
    };
    let budget = budget_from_env();
    let report = with_pool(jobs, || verify_claims(&claims, &budget))?;

    let whitelist: Vec<&str> = known_discrepancies().iter().map(|(id, _)| *id).collect();
    for r in &report.claims {
        let mut line = format!("{:<10} {:<26} [{}]", verdict_str(r.verdict), r.id, r.source);
        if r.verdict != Verdict::Pass {
            line.push_str(&format!(" computed={}", r.computed));
        }
        if let Some(note) = &r.note {
            line.push_str(&format!(" ({note})"));
        }
        println!("{line}");
    }
    println!(
        "summary: pass={} fail={} infeasible={} skipped={}",
        report.summary.pass, report.summary.fail, report.summary.infeasible, report.summary.skipped
    );
    let mut regression = false;
    for r in &report.claims {
        if matches!(r.verdict, Verdict::Fail | Verdict::Infeasible) {
            if whitelist.contains(&r.id.as_str()) {
                let reason = known_discrepancies()
                    .iter()
                    .find(|(id, _)| *id == r.id)
                    .map(|(_, why)| *why)
                    .unwrap_or_default();
                println!("known discrepancy: {} ({reason})", r.id);
            } else {
                println!("REGRESSION: {}", r.id);
                regression = true;
            }
        }
    }
    if let Some(path) = json_path {
        let body = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
        fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(if regression { 1 } else { 0 })
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Infeasible => "INFEASIBLE",
        Verdict::Skipped => "SKIPPED",
    }
}
