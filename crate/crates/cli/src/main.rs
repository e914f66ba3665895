use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use interval_completion::io::{detect_format, parse_graph, Format};
use interval_completion::obstruction::{minimal_hole_fills, Hole};
use interval_completion::oracle::{brute_min_completion, full_oracle};
use interval_completion::report::{certify, edge_list, Certificate, SolveReport};
use interval_completion::solver::{minimum_completion_with, solve_with, SolverConfig};
use interval_completion::Graph;

mod bench;

#[derive(Parser)]
#[command(
    name = "intcomp",
    version,
    about = "Minimum interval completion: solver, certificates and brute-force oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether at most k edges make the graph interval, or find the minimum with --min.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, required_unless_present = "min", conflicts_with = "min")]
        k: Option<usize>,
        #[arg(long)]
        min: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Exit 0 when the graph is interval, 1 otherwise.
    Recognize {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print an interval model or an obstruction with its branching edges.
    Certify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Minimum completion by exhaustive search over edge subsets.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        /// Give up beyond this many insertions.
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        no_timing: bool,
    },
    /// List the minimal fills of the hole on vertices 0..len.
    Fills {
        #[arg(long)]
        len: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run a generator family through solver and oracle, printing CSV.
    Bench(bench::BenchArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, or "-" for standard input.
    #[arg(default_value = "-")]
    input: PathBuf,
    /// graph6 or edge-list; guessed from the content when omitted.
    #[arg(long)]
    format: Option<Format>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    parallel: bool,
    #[arg(long)]
    json: bool,
    /// Leave wall-clock times out so output is reproducible.
    #[arg(long)]
    no_timing: bool,
}

impl InputArgs {
    fn read(&self) -> Result<Graph> {
        let text = if self.input.as_os_str() == "-" {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading standard input")?;
            s
        } else {
            std::fs::read_to_string(&self.input)
                .with_context(|| format!("reading {}", self.input.display()))?
        };
        let format = self.format.unwrap_or_else(|| detect_format(&text));
        parse_graph(&text, format).with_context(|| format!("parsing {}", self.input.display()))
    }
}

/// What the process should report: 0 for yes, 1 for no.
enum Answer {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(Answer::Yes) => ExitCode::SUCCESS,
        Ok(Answer::No) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<io::Error>())
        .any(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

fn print_json(out: &mut impl Write, value: &impl serde::Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn print_edges(out: &mut impl Write, edges: &[[usize; 2]]) -> io::Result<()> {
    for [u, v] in edges {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

fn run(command: Command, out: &mut impl Write) -> Result<Answer> {
    match command {
        Command::Solve { input, k, min, run } => {
            let g = input.read()?;
            let cfg = SolverConfig {
                parallel: run.parallel,
                ..SolverConfig::default()
            };
            let report = if min {
                SolveReport::from_minimum(&minimum_completion_with(&g, &cfg)?, !run.no_timing)
            } else {
                let k = k.expect("clap requires --k without --min");
                SolveReport::from_outcome(&solve_with(&g, k, &cfg)?, !run.no_timing)
            };
            if run.json {
                print_json(out, &report)?;
            } else {
                match report.k_used {
                    Some(k) => println!("yes: {k} edge(s)"),
                    None => println!("no"),
                }
                print_edges(out, &report.inserted_edges)?;
                writeln!(
                    out,
                    "nodes {} leaves {} depth {}",
                    report.stats.nodes, report.stats.leaves, report.stats.depth
                )?;
            }
            Ok(if report.k_used.is_some() {
                Answer::Yes
            } else {
                Answer::No
            })
        }
        Command::Recognize { input, json } => {
            let g = input.read()?;
            let yes = interval_completion::interval::is_interval(&g);
            if json {
                print_json(out, &serde_json::json!({ "interval": yes }))?;
            } else {
                writeln!(out, "{}", if yes { "interval" } else { "not interval" })?;
            }
            Ok(if yes { Answer::Yes } else { Answer::No })
        }
        Command::Certify { input, json } => {
            let g = input.read()?;
            let cert = certify(&g);
            if json {
                print_json(out, &cert)?;
            } else {
                print_certificate(out, &cert)?;
            }
            Ok(match cert {
                Certificate::Model { .. } => Answer::Yes,
                _ => Answer::No,
            })
        }
        Command::Oracle {
            input,
            kmax,
            json,
            no_timing,
        } => {
            let g = input.read()?;
            let start = Instant::now();
            let found = brute_min_completion(&g, kmax)?;
            let mut all = full_oracle(&g);
            debug_assert_eq!(all.min_size, found.min_size);
            all.one_witness = found.one_witness;
            let ms = (!no_timing).then(|| start.elapsed().as_secs_f64() * 1000.0);
            let report = SolveReport::from_oracle(&all, ms);
            if json {
                print_json(out, &report)?;
            } else {
                writeln!(
                    out,
                    "minimum {} ({} minimum supergraph(s))",
                    found.min_size,
                    report.all_minimum.unwrap_or(0)
                )?;
                print_edges(out, &report.inserted_edges)?;
            }
            Ok(Answer::Yes)
        }
        Command::Fills { len, json } => {
            if len < 4 {
                bail!("a hole has at least 4 vertices, got {len}");
            }
            let fills = minimal_hole_fills(&Hole::standard(len));
            if json {
                let lists: Vec<Vec<[usize; 2]>> = fills.iter().map(edge_list).collect();
                print_json(
                    out,
                    &serde_json::json!({ "len": len, "count": fills.len(), "fills": lists }),
                )?;
            } else {
                writeln!(out, "{} minimal fill(s) of C{len}", fills.len())?;
                for f in &fills {
                    let line: Vec<String> = edge_list(f).iter().map(|[u, v]| format!("{u}-{v}")).collect();
                    writeln!(out, "{}", line.join(" "))?;
                }
            }
            Ok(Answer::Yes)
        }
        Command::Bench(args) => bench::run(&args, out),
    }
}

fn print_certificate(out: &mut impl Write, cert: &Certificate) -> io::Result<()> {
    match cert {
        Certificate::Model { intervals } => {
            for (v, [l, r]) in intervals.iter().enumerate() {
                writeln!(out, "{v} {l} {r}")?;
            }
        }
        Certificate::Hole {
            vertices,
            minimal_fills,
        } => {
            writeln!(out, "hole {vertices:?}, {minimal_fills} minimal fill(s)")?;
        }
        Certificate::Aw {
            kind,
            roles,
            branch_edges,
            ..
        } => {
            let roles: Vec<String> = roles.0.iter().map(|(name, v)| format!("{name}={v}")).collect();
            writeln!(out, "{} {}", kind.name(), roles.join(" "))?;
            let edges: Vec<String> = branch_edges.iter().map(|[u, v]| format!("{u}-{v}")).collect();
            writeln!(out, "branch on {}", edges.join(" "))?;
        }
    }
    Ok(())
}
