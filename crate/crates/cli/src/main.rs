use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use mldr_core::bounds::{best_bound, code_level_bounds, rank_level_bounds};
use mldr_core::report::{
    compare_figure, compare_table2, figure_golden, figure_series, figure_spec, render_bounds, render_figure,
    render_table2, run_suite, table2_golden, table2_rows, Format, ReportRow, Suite, TABLE2_COLUMNS,
};
use mldr_core::search::{
    certify_mldr_with, phi_oracle, PhiOutcome, SweepSpec, DEFAULT_SWEEP_CODEWORD_BUDGET, DEFAULT_TOTAL_CODE_BUDGET,
};
use mldr_core::{Error, GeneratorMatrix, LinearCode, RankParams};

/// Lee-metric bounds, exact analysis and exhaustive search for linear
/// codes over Z_{p^t}.
#[derive(Parser)]
#[command(name = "mldr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every bound on Phi(n, K, q) with its exact value and the best one.
    Bounds {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Rank profile, distances, defect and code-level bounds of a code file.
    Analyze {
        #[arg(long)]
        code: PathBuf,
        /// Largest code whose codewords may be enumerated.
        #[arg(long, default_value_t = mldr_core::code::DEFAULT_CODEWORD_BUDGET)]
        budget: u64,
    },
    /// Exact Phi(n, K, q) by exhaustive search.
    Phi {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Decide whether a code attains Phi(n, K, q).
    Certify {
        #[arg(long)]
        code: PathBuf,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Recompute the comparison table and check it against the golden copy.
    Table2 {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Recompute one figure's series and check them against the golden copy.
    Figure {
        #[arg(long)]
        id: u8,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a self-check suite: ring, code, bounds, sweeps or all.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    n: usize,
    #[arg(long = "K")]
    k: usize,
    #[arg(long)]
    q: u64,
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest number of candidate generator matrices to examine.
    #[arg(long, default_value_t = DEFAULT_TOTAL_CODE_BUDGET)]
    budget: u64,
    /// Largest code whose codewords may be enumerated.
    #[arg(long, default_value_t = DEFAULT_SWEEP_CODEWORD_BUDGET)]
    codeword_budget: u64,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, default_value = "csv")]
    format: String,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl OutputArgs {
    fn format(&self) -> Result<Format, Error> {
        self.format.parse()
    }

    fn emit(&self, text: &str) -> anyhow::Result<()> {
        match &self.out {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_code(path: &Path) -> anyhow::Result<LinearCode> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let g = GeneratorMatrix::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(LinearCode::new(g)?)
}

fn run(command: Command) -> anyhow::Result<Status> {
    match command {
        Command::Bounds { params, output } => {
            let format = output.format()?;
            let params = RankParams::from_order(params.n, params.k, params.q)?;
            let mut text = render_bounds(&rank_level_bounds(&params), &best_bound(&params), format);
            if format == Format::Markdown {
                let row = ReportRow::compute(params);
                let names: Vec<&str> = TABLE2_COLUMNS.iter().map(|b| b.name()).collect();
                let cells: Vec<String> =
                    row.cells.iter().map(|c| c.map_or_else(|| "-".to_string(), |v| v.to_string())).collect();
                text.push_str(&format!("table columns ({}): {}\n", names.join(", "), cells.join(" ")));
            }
            output.emit(&text)?;
            Ok(Status::Ok)
        }
        Command::Analyze { code, budget } => analyze(&code, budget),
        Command::Phi { params, budgets } => {
            let params = RankParams::from_order(params.n, params.k, params.q)?;
            let spec = SweepSpec::new(params).with_budgets(budgets.codeword_budget, budgets.budget)?;
            match phi_oracle(&spec)? {
                PhiOutcome::Exact(rec) => {
                    println!("Phi{} = {}", rec.params, rec.phi);
                    println!("codes examined: {}", rec.codes_examined);
                    println!("witness:");
                    print!("{}", rec.witness.generators().to_text());
                }
                PhiOutcome::Unknown(partial) => {
                    println!("Phi{}: unknown", partial.params);
                    println!("certified lower bound: {}", partial.lower_bound);
                    println!("codes examined: {}", partial.codes_examined);
                    println!("reason: {}", partial.reason);
                    if let Some(w) = partial.witness {
                        println!("best code found:");
                        print!("{}", w.generators().to_text());
                    }
                }
            }
            Ok(Status::Ok)
        }
        Command::Certify { code, budgets } => {
            let code = load_code(&code)?;
            let cert = certify_mldr_with(&code, budgets.codeword_budget, budgets.budget)?;
            println!("verdict: {}", cert.verdict);
            println!("d_L: {}", cert.d_lee);
            println!(
                "best bound: {} = {}",
                cert.best_bound.id,
                cert.best_bound.floor_value().expect("best bound applies")
            );
            println!("evidence: {}", cert.evidence);
            Ok(Status::Ok)
        }
        Command::Table2 { output } => {
            let rows = table2_rows();
            output.emit(&render_table2(&rows, output.format()?))?;
            report_mismatches(compare_table2(&rows, &table2_golden()))
        }
        Command::Figure { id, output } => {
            let format = output.format()?;
            figure_spec(id)?;
            let series = figure_series(id)?;
            output.emit(&render_figure(&series, format))?;
            report_mismatches(compare_figure(&series, &figure_golden(id)?))
        }
        Command::Check { suite } => {
            let suite: Suite = suite.parse()?;
            let lines = run_suite(suite)?;
            for l in &lines {
                println!("{l}");
            }
            Ok(if lines.iter().all(|l| l.passed) { Status::Ok } else { Status::Mismatch })
        }
    }
}

fn report_mismatches(diff: Vec<mldr_core::report::Mismatch>) -> anyhow::Result<Status> {
    if diff.is_empty() {
        return Ok(Status::Ok);
    }
    for m in &diff {
        eprintln!("mismatch: {m}");
    }
    Ok(Status::Mismatch)
}

fn analyze(path: &Path, budget: u64) -> anyhow::Result<Status> {
    let code = load_code(path)?;
    let d = code.distances_with_budget(budget)?;
    let n = code.n();
    let defect = n as i64 - code.rank() as i64 + 1 - d.hamming as i64;
    println!("ring: {}", code.modulus());
    println!("n: {n}");
    println!("rank profile: {}", code.profile());
    println!("K: {}", code.rank());
    println!("free rank: {}", code.free_rank());
    println!("kappa: {}", code.kappa());
    println!("|C|: {}", code.size());
    println!("d_H: {}", d.hamming);
    println!("d_L: {}", d.lee);
    println!("defect: {defect}");
    println!("MDR: {}", if defect == 0 { "yes" } else { "no" });
    println!("code-level bounds:");
    let mut violated = false;
    for b in code_level_bounds(&code)? {
        match b.floor_value() {
            Some(f) if d.lee as i64 <= f => println!("  {:<20} {:>8}  d_L <= {f}", b.id, f),
            Some(f) => {
                violated = true;
                println!("  {:<20} {:>8}  VIOLATION: d_L = {} > {f}", b.id, f, d.lee);
            }
            None => println!("  {:<20} {:>8}  ({})", b.id, "-", b.condition_note),
        }
    }
    Ok(if violated { Status::Mismatch } else { Status::Ok })
}
