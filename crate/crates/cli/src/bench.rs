use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::Args;
use interval_completion::generate::Family;
use interval_completion::oracle::brute_min_completion;
use interval_completion::solver::{minimum_completion_with, SolverConfig};

use crate::Answer;

pub const HEADER: &str = "instance,n,m,k_min,nodes,leaves,ms,oracle_ms";

#[derive(Args)]
pub struct BenchArgs {
    /// cycle, small-aw, long-aw, random-interval-plus-e-edges or random-interval-minus-e-edges.
    #[arg(long)]
    family: Family,
    /// Sizes as a range `4..10` (inclusive) or a list `5,7,9`.
    #[arg(long, default_value = "4..8")]
    sizes: Sizes,
    /// Edges added or removed by the random families.
    #[arg(long, default_value_t = 2)]
    edits: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Skip the oracle above this many vertices.
    #[arg(long, default_value_t = 10)]
    oracle_max_n: usize,
    #[arg(long)]
    parallel: bool,
    /// Print `-` in the time columns.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sizes(pub Vec<usize>);

impl FromStr for Sizes {
    type Err = String;

    fn from_str(s: &str) -> Result<Sizes, String> {
        let bad = |_| format!("bad size list `{s}`");
        if let Some((a, b)) = s.split_once("..") {
            let (a, b): (usize, usize) = (a.trim().parse().map_err(bad)?, b.trim().parse().map_err(bad)?);
            if a > b {
                return Err(format!("empty range `{s}`"));
            }
            Ok(Sizes((a..=b).collect()))
        } else {
            s.split(',')
                .map(|x| x.trim().parse().map_err(bad))
                .collect::<Result<_, _>>()
                .map(Sizes)
        }
    }
}

fn fmt_ms(ms: f64, hidden: bool) -> String {
    if hidden {
        "-".into()
    } else {
        format!("{ms:.3}")
    }
}

pub fn run(args: &BenchArgs, out: &mut impl Write) -> Result<Answer> {
    let cfg = SolverConfig {
        parallel: args.parallel,
        ..SolverConfig::default()
    };
    writeln!(out, "{HEADER}")?;
    for (name, g) in args.family.instances(&args.sizes.0, args.edits, args.seed) {
        let start = Instant::now();
        let min = minimum_completion_with(&g, &cfg).with_context(|| format!("solving {name}"))?;
        let ms = start.elapsed().as_secs_f64() * 1000.0;
        let k = min.completion.edges.len();
        let bound = 6u64.saturating_pow(k as u32);
        if min.last.leaves > bound {
            bail!("{name}: {} leaves exceed 6^{k}", min.last.leaves);
        }
        let oracle_ms = if g.n() <= args.oracle_max_n {
            let start = Instant::now();
            let o = brute_min_completion(&g, k).with_context(|| format!("oracle on {name}"))?;
            if o.min_size != k {
                bail!("{name}: solver found {k} but the oracle found {}", o.min_size);
            }
            Some(start.elapsed().as_secs_f64() * 1000.0)
        } else {
            None
        };
        let (ms, oracle_ms) = match (args.no_timing, oracle_ms) {
            (_, None) => (fmt_ms(ms, args.no_timing), "skipped".to_string()),
            (no_timing, Some(o)) => (fmt_ms(ms, no_timing), fmt_ms(o, no_timing)),
        };
        writeln!(
            out,
            "{name},{},{},{k},{},{},{ms},{oracle_ms}",
            g.n(),
            g.m(),
            min.last.nodes,
            min.last.leaves
        )?;
    }
    Ok(Answer::Yes)
}
