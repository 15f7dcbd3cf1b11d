use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use quintic_core::critical::{self, scan, RuleRegistry, ScanProgress, StrategyRegistry};
use quintic_core::poly::{self, cover};
use quintic_core::{invariants, luna, sl2, stability, Rational};

mod report;

use report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "quintic", version, about = "GIT stability computations for surfaces in P^3")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Default output format.
    #[arg(long, global = true, value_enum, env = "QUINTIC_FORMAT", default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the critical one-parameter subgroups of a degree.
    Critical {
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value = critical::DEFAULT_RULE)]
        tie_rule: String,
    },
    /// Check that every bounded normalized subgroup is dominated by a critical one.
    VerifyCompleteness {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        bound: i64,
        #[arg(long, default_value = scan::DEFAULT_STRATEGY)]
        strategy: String,
        /// Worker threads for the parallel strategy (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value = critical::DEFAULT_RULE)]
        tie_rule: String,
        /// Suppress progress on standard error.
        #[arg(long)]
        quiet: bool,
    },
    /// Torus stability report for a form in x0..x3 read from a file.
    Classify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = critical::DEFAULT_RULE)]
        tie_rule: String,
    },
    /// Luna slice weights and dimension estimates at the boundary subgroups.
    Boundary {
        #[arg(long)]
        degree: u32,
        /// 1-based position in the critical list (default: every boundary subgroup).
        #[arg(long)]
        lambda: Option<usize>,
        #[arg(long, default_value_t = luna::DEFAULT_SEED)]
        seed: u64,
    },
    /// Decompose the normal space at the closed orbit with SL2 stabilizer.
    Sl2Slice,
    /// Geometric genus of the quasihomogeneous singularity by lattice count.
    Genus {
        #[arg(long)]
        degree: u32,
    },
    /// Geometric genus of a smooth hypersurface of the given degree.
    Pg {
        #[arg(long)]
        degree: u32,
    },
    /// Log canonical threshold bound from weights.
    Lct {
        /// Comma separated positive rationals.
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<String>,
        /// Weighted degree.
        #[arg(long)]
        degree: String,
    },
    /// Depressed triple cover form and its discriminant.
    Cover {
        #[arg(long)]
        g2: PathBuf,
        #[arg(long)]
        f4: PathBuf,
        #[arg(long)]
        f5: PathBuf,
    },
    /// Branch octic f3*f5 - f4^2.
    Branch {
        #[arg(long)]
        f3: PathBuf,
        #[arg(long)]
        f4: PathBuf,
        #[arg(long)]
        f5: PathBuf,
    },
}

fn read_poly(path: &Path, vars: &[&str]) -> Result<poly::SparsePolynomial> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    poly::parse(text.trim(), vars).with_context(|| format!("parsing {}", path.display()))
}

fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: i64 = n.trim().parse().with_context(|| format!("invalid rational `{s}`"))?;
    let d: i64 = d.trim().parse().with_context(|| format!("invalid rational `{s}`"))?;
    if d == 0 {
        bail!("invalid rational `{s}`: zero denominator");
    }
    Ok(Rational::new(n.into(), d.into()))
}

fn progress_printer(quiet: bool) -> impl Fn(ScanProgress) + Sync {
    let last = AtomicU64::new(u64::MAX);
    move |p: ScanProgress| {
        if quiet || p.total == 0 {
            return;
        }
        let pct = p.done * 100 / p.total;
        if last.swap(pct, Ordering::Relaxed) != pct {
            eprintln!("progress: {pct:>3}% ({} of {} slices, {} subgroups scanned)", p.done, p.total, p.scanned);
        }
    }
}

fn run(cli: Cli) -> Result<Box<dyn Report>> {
    let rules = RuleRegistry::default();
    Ok(match cli.command {
        Command::Critical { degree, tie_rule } => {
            let rule = rules.get(&tie_rule)?;
            let records = critical::enumerate_critical_with(degree, rule)?;
            Box::new(report::CriticalReport::new(degree, rule.name(), &records))
        }
        Command::VerifyCompleteness { degree, bound, strategy, threads, tie_rule, quiet } => {
            let records = critical::enumerate_critical_with(degree, rules.get(&tie_rule)?)?;
            let strategies = StrategyRegistry::default();
            let strategy = strategies.get(&strategy)?;
            let progress = progress_printer(quiet);
            let start = Instant::now();
            let scan = match threads {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .context("building thread pool")?
                    .install(|| critical::verify_completeness(&records, bound, strategy, &progress))?,
                None => critical::verify_completeness(&records, bound, strategy, &progress)?,
            };
            if !quiet {
                eprintln!("elapsed: {:.2?}", start.elapsed());
            }
            Box::new(report::ScanView::new(&scan, records.len()))
        }
        Command::Classify { input, tie_rule } => {
            let f = read_poly(&input, &["x0", "x1", "x2", "x3"])?;
            let support = f.support()?;
            let records = critical::enumerate_critical_with(support.degree().max(2), rules.get(&tie_rule)?)?;
            let records = if support.degree() >= 2 { records } else { Vec::new() };
            let rep = stability::stability_report(&support, &records)?;
            Box::new(report::ClassifyReport::new(&f, &support, &rep))
        }
        Command::Boundary { degree, lambda, seed } => {
            let records = critical::enumerate_critical(degree)?;
            let chosen: Vec<_> = match lambda {
                Some(k) => match records.get(k.wrapping_sub(1)) {
                    Some(r) => vec![r.lambda],
                    None => bail!("--lambda {k} out of range: degree {degree} has {} critical subgroups", records.len()),
                },
                None => records
                    .iter()
                    .filter(|r| r.kind == critical::CriticalKind::MinimalOrbitBoundary)
                    .map(|r| r.lambda)
                    .collect(),
            };
            let reports =
                chosen.iter().map(|l| luna::boundary_report(l, degree, seed)).collect::<quintic_core::Result<Vec<_>>>()?;
            Box::new(report::BoundaryView(reports))
        }
        Command::Sl2Slice => Box::new(report::SliceView(sl2::slice_report()?)),
        Command::Genus { degree } => Box::new(report::GenusView {
            degree,
            genus: invariants::genus_count(degree)?,
            closed_form: invariants::genus_closed_form(degree)?,
            binomial_sum: invariants::genus_binomial_sum(degree)?,
        }),
        Command::Pg { degree } => Box::new(report::PgView { degree, pg: invariants::hypersurface_pg(degree)? }),
        Command::Lct { weights, degree } => {
            let ws = weights.iter().map(|w| parse_rational(w)).collect::<Result<Vec<_>>>()?;
            let system = invariants::WeightSystem::new(ws, parse_rational(&degree)?)?;
            let lct = invariants::lct_weight_bound(&system);
            let verdict = invariants::lct_verdict(&lct)?;
            Box::new(report::LctView::new(&system, &lct, verdict))
        }
        Command::Cover { g2, f4, f5 } => {
            let v = cover::PLANE_VARS;
            let (g2, f4, f5) = (read_poly(&g2, &v)?, read_poly(&f4, &v)?, read_poly(&f5, &v)?);
            let (h4, h6) = cover::triple_cover_form(&g2, &f4, &f5)?;
            let disc = cover::cover_discriminant(&h4, &h6)?;
            Box::new(report::CoverView { h4: h4.to_string(), h6: h6.to_string(), discriminant: disc.to_string() })
        }
        Command::Branch { f3, f4, f5 } => {
            let v = cover::PLANE_VARS;
            let octic = cover::branch_octic(&read_poly(&f3, &v)?, &read_poly(&f4, &v)?, &read_poly(&f5, &v)?)?;
            Box::new(report::BranchView { octic: octic.to_string() })
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json || cli.format == Format::Json;
    match run(cli) {
        Ok(rep) => {
            let out = if json { rep.json() + "\n" } else { rep.text() };
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: writing output: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
