//! Command-line front end: verification suites, single geodesic
//! computations, convergence sweeps, splitting and unzipping words, and the
//! quantum dilogarithm evaluators.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! or parse errors.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;
use teich_lab::format::{parse_fatgraph, GeodesicRequest, GeodesicResponse};
use teich_lab::report::RunReport;
use teich_lab::suites::run_suite;

#[derive(Parser)]
#[command(name = "teich-lab", version, about = "Teichmüller workbench")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite and emit a JSON report.
    Verify(VerifyArgs),
    /// Trace and proper length of a closed path at a shear point.
    Geodesic(GeodesicArgs),
    /// Proper-length/graph-length convergence along a continued fraction.
    Converge(ConvergeArgs),
    /// Foliation and continued-fraction operations.
    Thurston {
        #[command(subcommand)]
        cmd: ThurstonCmd,
    },
    /// Quantum dilogarithm evaluations.
    Dilog {
        #[command(subcommand)]
        cmd: DilogCmd,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// classical | quantum | dilog | thurston | all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// json | csv
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct GeodesicArgs {
    /// Graph file in `fatgraph v1` format (defaults to the torus spine).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Shear values, comma separated, in edge order.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    shear: Vec<f64>,
    /// Slope `p/q` on the torus spine.
    #[arg(long)]
    slope: Option<String>,
    /// Path as comma-separated `label:L` / `label:R` steps.
    #[arg(long)]
    path: Option<String>,
    /// JSON request file ({"graph", "shear", "path"}); `-` for stdin.
    #[arg(long)]
    json: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConvergeArgs {
    /// Shear values `a,b,c` on the torus spine.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [0.0, 0.0, 0.0])]
    shear: Vec<f64>,
    /// Partial quotients, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    cf: Vec<u32>,
    #[arg(long, default_value_t = 15)]
    depth: usize,
    /// Edge weights `w_X,w_Y,w_Z` for the graph length.
    #[arg(long, value_delimiter = ',', default_values_t = [1.0, 1.0, 1.0])]
    weights: Vec<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ThurstonCmd {
    /// Same as the top-level `converge`.
    Converge(ConvergeArgs),
    /// Splitting sequence of the torus track with measures (a, b).
    Split {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long, default_value_t = 60)]
        max_steps: usize,
    },
    /// Unzip a coprime multicurve triple (m1, m2, m1+m2) to a generator.
    Unzip {
        #[arg(long)]
        m1: u64,
        #[arg(long)]
        m2: u64,
    },
}

#[derive(Subcommand)]
enum DilogCmd {
    /// Evaluate phi^hbar(z).
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        z: f64,
        #[arg(long)]
        hbar: f64,
    },
    /// Finite pentagon deviation at rational coupling m/n.
    Pentagon {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1.0)]
        u: f64,
        #[arg(long, default_value_t = 1.0)]
        v: f64,
    },
    /// CSV sweep of the functional-relation residuals over a z grid.
    Sweep {
        #[arg(long)]
        hbar: f64,
        #[arg(long, default_value_t = 41)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => {
            let mut h = std::io::stdout().lock();
            h.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Verify(a) => {
            let start = Instant::now();
            let checks =
                run_suite(&a.suite, a.seed).ok_or_else(|| anyhow!("unknown suite {}", a.suite))?;
            let report =
                RunReport::new(&a.suite, a.seed, start.elapsed().as_millis() as u64, checks);
            let text = match a.format.as_str() {
                "json" => serde_json::to_string_pretty(&report)? + "\n",
                "csv" => {
                    let mut t = String::from("id,relation,status,residual\n");
                    for c in &report.checks {
                        t.push_str(&format!(
                            "{},\"{}\",{},{}\n",
                            c.id,
                            c.relation,
                            c.status,
                            c.residual.map(|r| format!("{r:e}")).unwrap_or_default()
                        ));
                    }
                    t
                }
                other => bail!("unknown format {other}"),
            };
            emit(&a.out, &text)?;
            Ok(if report.passed { 0 } else { 1 })
        }
        Cmd::Geodesic(a) => {
            let (g, s, p) = if let Some(src) = &a.json {
                let text = if src == "-" {
                    std::io::read_to_string(std::io::stdin())?
                } else {
                    std::fs::read_to_string(src).with_context(|| format!("reading {src}"))?
                };
                let req: GeodesicRequest = serde_json::from_str(&text)?;
                req.resolve()?
            } else {
                let g = match &a.graph {
                    Some(f) => {
                        let text = std::fs::read_to_string(f)
                            .with_context(|| format!("reading {}", f.display()))?;
                        parse_fatgraph(&text)?
                    }
                    None => teich_core::fatgraph::torus_spine(),
                };
                if a.shear.len() != g.edge_count() {
                    bail!("expected {} shear values, got {}", g.edge_count(), a.shear.len());
                }
                let s = teich_core::shear::ShearPoint::new(a.shear.clone());
                let p = if let Some(sl) = &a.slope {
                    let (p, q) = parse_slope(sl)?;
                    teich_core::path::slope_path(&g, p, q).map_err(|e| anyhow!("{e}"))?
                } else if let Some(spec) = &a.path {
                    parse_path(&g, spec)?
                } else {
                    bail!("need --slope, --path, or --json");
                };
                (g, s, p)
            };
            let trace = teich_core::shear::geodesic_trace(&g, &p, &s).map_err(|e| anyhow!("{e}"))?;
            let pl = teich_core::shear::proper_length_classical(trace)
                .map_err(|e| anyhow!("{e}"))?;
            let resp = GeodesicResponse { trace, length: 2.0 * pl, proper_length: pl };
            emit(&a.out, &(serde_json::to_string_pretty(&resp)? + "\n"))?;
            Ok(0)
        }
        Cmd::Converge(a) | Cmd::Thurston { cmd: ThurstonCmd::Converge(a) } => {
            if a.shear.len() != 3 || a.weights.len() != 3 {
                bail!("torus sweep needs three shear values and three weights");
            }
            let g = teich_core::fatgraph::torus_spine();
            let s = teich_core::shear::ShearPoint::new(a.shear.clone());
            let rows = teich_core::thurston::converge_ratio(
                &g,
                &s,
                &a.cf,
                a.depth,
                [a.weights[0], a.weights[1], a.weights[2]],
            )
            .map_err(|e| anyhow!("{e}"))?;
            let mut text = String::from("depth,m1,m2,trace_log,pl,gl,ratio,gap\n");
            let mut prev: Option<f64> = None;
            for r in &rows {
                let gap = prev.map(|p| format!("{:e}", (r.ratio - p).abs())).unwrap_or_default();
                text.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    r.depth, r.m1, r.m2, r.log_trace, r.proper_length, r.graph_length, r.ratio, gap
                ));
                prev = Some(r.ratio);
            }
            emit(&a.out, &text)?;
            Ok(0)
        }
        Cmd::Thurston { cmd: ThurstonCmd::Split { a, b, max_steps } } => {
            let (word, collision) = teich_core::thurston::splitting_sequence(a, b, max_steps);
            let runs = teich_core::thurston::run_lengths(&word);
            let word_str: String = word
                .iter()
                .map(|s| match s {
                    teich_core::thurston::Split::Left => 'L',
                    teich_core::thurston::Split::Right => 'R',
                })
                .collect();
            let out = serde_json::json!({
                "word": word_str,
                "runs": runs,
                "collision": collision,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(0)
        }
        Cmd::Thurston { cmd: ThurstonCmd::Unzip { m1, m2 } } => {
            let t = teich_core::thurston::MeasureTriple::new(m1, m2, m1 + m2)
                .map_err(|e| anyhow!("{e}"))?;
            let (runs, terminal) =
                teich_core::thurston::unzip_sequence(&t).map_err(|e| anyhow!("{e}"))?;
            let word: Vec<serde_json::Value> = runs
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "twist": match r.gen {
                            teich_core::qgeo::TwistGen::X => "DX^-1",
                            teich_core::qgeo::TwistGen::Y => "DY^-1",
                        },
                        "count": r.count,
                    })
                })
                .collect();
            let out = serde_json::json!({
                "word": word,
                "terminal": [terminal.mx, terminal.my, terminal.mz],
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(0)
        }
        Cmd::Dilog { cmd: DilogCmd::Eval { z, hbar } } => {
            let p = teich_core::dilog::DilogParams::new(hbar).map_err(|e| anyhow!("{e}"))?;
            let v = teich_core::dilog::phi_hbar(z, &p).map_err(|e| anyhow!("{e}"))?;
            println!("{}", serde_json::json!({ "z": z, "hbar": hbar, "phi": v }));
            Ok(0)
        }
        Cmd::Dilog { cmd: DilogCmd::Pentagon { m, n, u, v } } => {
            let rep = teich_core::dilog::CyclicRep::new(m, n).map_err(|e| anyhow!("{e}"))?;
            let r = teich_core::dilog::pentagon_finite(u, v, &rep).map_err(|e| anyhow!("{e}"))?;
            let out = serde_json::json!({
                "m": m, "n": n, "u": u, "v": v,
                "deviation_from_scalar": r.deviation_scalar,
                "constant": [r.constant.re, r.constant.im],
                "deviation_from_recorded": r.deviation_recorded,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(0)
        }
        Cmd::Dilog { cmd: DilogCmd::Sweep { hbar, points, out } } => {
            let p = teich_core::dilog::DilogParams::new(hbar).map_err(|e| anyhow!("{e}"))?;
            let mut text = String::from("z,phi,odd_part_residual\n");
            for i in 0..points {
                let z = -10.0 + 20.0 * i as f64 / (points.max(2) - 1) as f64;
                let a = teich_core::dilog::phi_hbar(z, &p).map_err(|e| anyhow!("{e}"))?;
                let b = teich_core::dilog::phi_hbar(-z, &p).map_err(|e| anyhow!("{e}"))?;
                text.push_str(&format!("{z},{a},{:e}\n", (a - b - z).abs()));
            }
            emit(&out, &text)?;
            Ok(0)
        }
    }
}

fn parse_slope(s: &str) -> Result<(u64, u64)> {
    let (p, q) = s.split_once('/').ok_or_else(|| anyhow!("slope must be p/q"))?;
    Ok((p.trim().parse()?, q.trim().parse()?))
}

fn parse_path(g: &teich_core::fatgraph::FatGraph, spec: &str) -> Result<teich_core::path::EdgePath> {
    let mut steps = Vec::new();
    for part in spec.split(',') {
        let (label, turn) =
            part.split_once(':').ok_or_else(|| anyhow!("path steps are label:L or label:R"))?;
        let e = g.edge_by_label(label.trim()).map_err(|e| anyhow!("{e}"))?;
        let t = match turn.trim() {
            "L" => teich_core::path::Turn::Left,
            "R" => teich_core::path::Turn::Right,
            other => bail!("turn must be L or R, got {other}"),
        };
        steps.push(teich_core::path::Step { edge: e, turn: t });
    }
    teich_core::path::EdgePath::new(steps).map_err(|e| anyhow!("{e}"))
}
