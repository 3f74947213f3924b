//! `sgjoin`: stats, joins, constructive join colorings, verification
//! sweeps and DOT export for signed graphs stored as `sg` files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand};

use signed_join::coloring::{deficiency_labels, Coloration};
use signed_join::format::{
    export_dot, parse_coloring, parse_graph, print_coloring, print_graph, write_report,
};
use signed_join::graph::{all_negative_join, all_positive_join, SignedGraph};
use signed_join::recolor::{color_positive_join, JoinPart};
use signed_join::solver::{find_avoidable_color_witness, graph_stats};
use signed_join::theorem::verify::{exhaustive_sweep, random_sweep, PairSizes};

#[derive(Parser)]
#[command(name = "sgjoin", version, about = "Signed graph joins and colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number, maximum deficiency, deficiency set and exceptionality.
    Stats { file: PathBuf },
    /// Print the join of two graphs; the second graph's vertices follow the first's.
    Join {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
    },
    /// Constructively color the all-positive join and print the case trace.
    ColorJoin { file1: PathBuf, file2: PathBuf },
    /// Compare the join formula with brute force and print a report.
    #[command(group(ArgGroup::new("mode").required(true).args(["exhaustive", "random"])))]
    Verify {
        /// All pairs of graphs on exactly N1 and N2 vertices.
        #[arg(long, num_args = 2, value_names = ["N1", "N2"])]
        exhaustive: Option<Vec<usize>>,
        /// COUNT seeded random pairs.
        #[arg(long, value_name = "COUNT", requires = "seed")]
        random: Option<usize>,
        /// Fixed side orders for random pairs.
        #[arg(long, num_args = 2, value_names = ["N1", "N2"], conflicts_with = "total")]
        size: Option<Vec<usize>>,
        /// Total order range for random pairs, each side at least 1.
        #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
        total: Option<Vec<usize>>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Graphviz text with solid positive and dashed negative edges.
    ExportDot {
        file: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
}

fn read_graph(path: &Path) -> Result<SignedGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_coloring(path: &Path) -> Result<Coloration> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_coloring(&text).with_context(|| format!("parsing {}", path.display()))
}

fn braces(colors: &[i32]) -> String {
    let inner: Vec<String> = colors.iter().map(|c| c.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Output and exit status of a successful command.
struct Done {
    out: String,
    status: u8,
}

fn ok(out: String) -> Result<Done> {
    Ok(Done { out, status: 0 })
}

fn run(cli: Cli) -> Result<Done> {
    match cli.command {
        Command::Stats { file } => {
            let g = read_graph(&file)?;
            let s = graph_stats(&g);
            let exc = match (s.exceptionality_defined(), s.exceptional) {
                (false, _) => "n/a",
                (true, true) => "yes",
                (true, false) => "no",
            };
            let labels = deficiency_labels(&s.min_coloration, s.color_set());
            ok(format!(
                "chi={} M={} exceptional={exc}\ndeficiency_set={}\ncoloration={}\n",
                s.chi,
                s.max_def,
                braces(&labels),
                s.min_coloration
            ))
        }
        Command::Join { file1, file2, sign } => {
            let (g1, g2) = (read_graph(&file1)?, read_graph(&file2)?);
            let j = match sign.as_str() {
                "+" => all_positive_join(&g1, &g2),
                "-" => all_negative_join(&g1, &g2),
                _ => bail!("--sign must be + or -, got {sign:?}"),
            };
            ok(print_graph(&j))
        }
        Command::ColorJoin { file1, file2 } => {
            let (g1, g2) = (read_graph(&file1)?, read_graph(&file2)?);
            let (s1, s2) = (graph_stats(&g1), graph_stats(&g2));
            let w1 = find_avoidable_color_witness(&g1, &s1);
            let w2 = find_avoidable_color_witness(&g2, &s2);
            let result = color_positive_join(
                JoinPart::new(&g1, &s1, w1.as_ref()),
                JoinPart::new(&g2, &s2, w2.as_ref()),
            );
            let out = match result {
                Ok(out) => out,
                Err(e) => {
                    if let Some(t) = e.trace() {
                        for line in t.to_string().lines() {
                            eprintln!("# {line}");
                        }
                    }
                    bail!("constructive coloring failed: {e}");
                }
            };
            let mut text = String::new();
            for line in out.trace.to_string().lines() {
                text.push_str("# ");
                text.push_str(line);
                text.push('\n');
            }
            text.push_str(&print_coloring(&out.coloration));
            ok(text)
        }
        Command::Verify {
            exhaustive,
            random,
            size,
            total,
            seed,
        } => {
            let report = if let Some(n) = exhaustive {
                exhaustive_sweep(n[0], n[1])?
            } else {
                let count = random.expect("mode group is required");
                let sizes = match (size, total) {
                    (Some(s), _) => PairSizes::Fixed(s[0], s[1]),
                    (None, Some(t)) => PairSizes::TotalBetween(t[0], t[1]),
                    (None, None) => bail!("--random needs --size <N1> <N2> or --total <LO> <HI>"),
                };
                random_sweep(count, sizes, seed.expect("clap requires --seed"))?
            };
            Ok(Done {
                out: write_report(&report),
                status: if report.has_theorem_mismatch() { 2 } else { 0 },
            })
        }
        Command::ExportDot { file, coloring } => {
            let g = read_graph(&file)?;
            let kappa = coloring.as_deref().map(read_coloring).transpose()?;
            if let Some(k) = &kappa {
                if k.len() != g.order() {
                    bail!(
                        "coloring has {} entries for {} vertices",
                        k.len(),
                        g.order()
                    );
                }
            }
            ok(export_dot(&g, kappa.as_ref()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(done) => {
            print!("{}", done.out);
            ExitCode::from(done.status)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
