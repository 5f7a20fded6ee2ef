//! `distrep`: run the verification checks, parameter sweeps and parameter
//! calculations from the command line.
//!
//! Exit status is 0 when every asserted claim passes, 1 when one fails or a
//! computation errors, and 2 on usage errors (bad arguments, invalid
//! parameters, resource-guard refusals).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use distrep::label::{weyl_dim_gl, OLabel};
use distrep::lie::Delta;
use distrep::params::{self, SpectralParams};
use distrep::verify::{
    self, disgl_pairs, run_cells, sweep_cells, Batch, Cell, CheckId, Config, Ranges, RunOptions,
};
use distrep::Error;

#[derive(Parser)]
#[command(name = "distrep", version, about = "Exact verification of branching and distinction statements for GL(2n) and O(2n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one check (`all` runs the default suite). Omitted character data
    /// is expanded over every admissible value.
    Verify {
        /// A check id or `all`.
        check: String,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run a check over a range of parameters.
    Sweep {
        check: String,
        /// Ranks to sweep, e.g. `1,2`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        n: Option<Vec<i64>>,
        /// Bound on the leading entry of spectral parameters and labels.
        #[arg(long, allow_hyphen_values = true)]
        l1_max: Option<i64>,
        /// Values of `w`, e.g. `0,2`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        w: Option<Vec<i64>>,
        /// Bound `μ₁ ≤ M`, `μ_{2n} ≥ −M` on `GL(2n)` weights.
        #[arg(long, allow_hyphen_values = true)]
        mu_max: Option<i64>,
        /// `key = value` file with default ranges.
        #[arg(long)]
        config: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Evaluate a parameter function and print JSON.
    Params {
        #[arg(value_enum)]
        function: ParamFn,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Args, Default)]
struct ParamArgs {
    /// Rank.
    #[arg(long)]
    n: Option<usize>,
    /// Spectral parameter `ℓ`, e.g. `5,3`.
    #[arg(long, value_delimiter = ',')]
    l: Option<Vec<i64>>,
    #[arg(long, allow_hyphen_values = true)]
    w: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    w1: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    w2: Option<i64>,
    /// Character parities `E1,E2`.
    #[arg(long, value_delimiter = ',')]
    eps: Option<Vec<u8>>,
    /// `GL(2n)` highest weight, e.g. `2,1,-1,-2`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    mu: Option<Vec<i64>>,
    /// `O(2n)` label, e.g. `2,-1/2`.
    #[arg(long, allow_hyphen_values = true)]
    label: Option<String>,
}

#[derive(Args)]
struct RunArgs {
    /// Write the JSON report here (`-` for standard output).
    #[arg(long)]
    json: Option<PathBuf>,
    /// Number of concurrent cells.
    #[arg(long)]
    workers: Option<usize>,
    /// Run cells beyond the resource guard.
    #[arg(long)]
    force: bool,
    /// Reflection used to generate `O(2n)` together with `SO(2n)`.
    #[arg(long, value_enum, default_value_t = DeltaArg::Last)]
    delta: DeltaArg,
    /// Record per-cell wall time (makes reports non-reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum DeltaArg {
    Last,
    First,
    Mid,
}

impl From<DeltaArg> for Delta {
    fn from(d: DeltaArg) -> Delta {
        match d {
            DeltaArg::Last => Delta::Last,
            DeltaArg::First => Delta::First,
            DeltaArg::Mid => Delta::Mid,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum ParamFn {
    MuOf,
    LambdaOf,
    LPlus,
    LMinus,
    LMu,
    #[value(name = "l_o")]
    LO,
    P0,
    SDegree,
    CriticalRange,
    CriticalPairs,
    Epsilon0,
    CartanHelgasonO,
    CartanHelgasonGl,
    BalancedWeight,
    Section4Weights,
    WeylDimGl,
    ODim,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_)
            | Error::InvalidLabel(_)
            | Error::InvalidParams(_)
            | Error::NonDominant(_)
            | Error::Parity(_)
            | Error::ResourceGuard(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Verify { check, params, run } => {
            let opts = run_options(&run, None);
            let batch = if check == "all" {
                verify::run_all(&opts)?
            } else {
                let id: CheckId = check.parse()?;
                let cells = verify_cells(id, &params)?;
                Batch::new(id.name(), run_cells(&cells, &opts)?)
            };
            emit(&batch, run.json.as_deref())
        }
        Command::Sweep { check, n, l1_max, w, mu_max, config, run } => {
            let id: CheckId = check.parse()?;
            let config = match &config {
                Some(path) => Config::load(path)?,
                None => Config::default(),
            };
            let mut ranges = Ranges::from_config(id, &config)?;
            if let Some(ns) = n {
                if ns.iter().any(|x| *x <= 0) {
                    return Err(usage("ranks must be positive"));
                }
                ranges.ns = ns.into_iter().map(|x| x as usize).collect();
            }
            if let Some(x) = l1_max {
                ranges.l1_max = x;
            }
            if let Some(ws) = w {
                ranges.ws = ws;
            }
            if let Some(x) = mu_max {
                ranges.mu_max = x;
            }
            let workers = config.get_int(Some(id), "workers")?.map(|x| x.max(1) as usize);
            let opts = run_options(&run, workers);
            let cells = sweep_cells(id, &ranges);
            emit(&Batch::new(format!("sweep {id}"), run_cells(&cells, &opts)?), run.json.as_deref())
        }
        Command::Params { function, params } => {
            let value = eval_param(function, &params)?;
            println!("{}", serde_json::to_string_pretty(&value).expect("values serialize"));
            Ok(true)
        }
    }
}

fn run_options(run: &RunArgs, config_workers: Option<usize>) -> RunOptions {
    RunOptions {
        delta: run.delta.into(),
        workers: run.workers.or(config_workers).unwrap_or(1).max(1),
        force: run.force,
        timing: run.timing,
    }
}

/// Prints one line per report and the summary; writes JSON if asked.
fn emit(batch: &Batch, json: Option<&Path>) -> Result<bool, Failure> {
    let to_stdout = json.is_some_and(|p| p.as_os_str() == "-");
    let text = |line: String| {
        if to_stdout {
            eprintln!("{line}");
        } else {
            println!("{line}");
        }
    };
    for r in &batch.reports {
        text(r.summary_line());
        for c in r.failures() {
            text(format!("  failed: {}: expected {}, computed {}", c.description, c.expected, c.computed));
        }
    }
    let s = &batch.summary;
    text(format!("{} cells: {} pass, {} fail, {} exploratory", s.cells, s.pass, s.fail, s.exploratory));
    match json {
        Some(_) if to_stdout => println!("{}", batch.to_json()),
        Some(p) => std::fs::write(p, batch.to_json() + "\n")
            .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", p.display())))?,
        None => {}
    }
    Ok(s.ok())
}

const ALL_EPS: [(u8, u8); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

fn eps_of(p: &ParamArgs) -> Result<Option<(u8, u8)>, Failure> {
    match p.eps.as_deref() {
        None => Ok(None),
        Some([a, b]) if *a <= 1 && *b <= 1 => Ok(Some((*a, *b))),
        Some(_) => Err(usage("--eps takes two parities E1,E2 in {0,1}")),
    }
}

fn label_of(p: &ParamArgs) -> Result<OLabel, Failure> {
    let s = p.label.as_deref().ok_or_else(|| usage("--label is required"))?;
    let label: OLabel = s.parse()?;
    check_rank(p, label.n())?;
    Ok(label)
}

fn mu_of(p: &ParamArgs) -> Result<Vec<i64>, Failure> {
    let mu = p.mu.clone().ok_or_else(|| usage("--mu is required"))?;
    if mu.is_empty() || mu.len() % 2 != 0 {
        return Err(usage("--mu must have even length 2n"));
    }
    check_rank(p, mu.len() / 2)?;
    Ok(mu)
}

fn spectral_of(p: &ParamArgs) -> Result<SpectralParams, Failure> {
    let l = p.l.clone().ok_or_else(|| usage("--l is required"))?;
    let w = p.w.ok_or_else(|| usage("--w is required"))?;
    check_rank(p, l.len())?;
    Ok(SpectralParams::new(l, w)?)
}

fn check_rank(p: &ParamArgs, n: usize) -> Result<(), Failure> {
    match p.n {
        Some(m) if m != n => Err(usage(format!("--n {m} does not match the rank {n} of the other parameters"))),
        _ => Ok(()),
    }
}

/// `(w1, w2)` if both are given, otherwise `None`; one alone is an error.
fn pair_of(p: &ParamArgs) -> Result<Option<(i64, i64)>, Failure> {
    match (p.w1, p.w2) {
        (Some(a), Some(b)) => Ok(Some((a, b))),
        (None, None) => Ok(None),
        _ => Err(usage("--w1 and --w2 must be given together")),
    }
}

fn verify_cells(id: CheckId, p: &ParamArgs) -> Result<Vec<Cell>, Failure> {
    let eps = eps_of(p)?;
    let eps_list = || eps.map_or(ALL_EPS.to_vec(), |e| vec![e]);
    let cells = match id {
        CheckId::Disfin | CheckId::Nonv => {
            let sp = spectral_of(p)?;
            let pairs = pair_of(p)?.map_or_else(|| params::critical_pairs(&sp), |x| vec![x]);
            let (n, l, w) = (sp.n(), sp.l().to_vec(), sp.w());
            let mut cells = Vec::new();
            for (w1, w2) in pairs {
                if id == CheckId::Disfin {
                    cells.push(Cell::Disfin { n, l: l.clone(), w, w1, w2 });
                    continue;
                }
                for e in eps_list() {
                    let consistent = (e.0 as i64 + w1 - e.1 as i64 - w2).rem_euclid(2) == 0;
                    if consistent || eps.is_some() {
                        cells.push(Cell::Nonv { n, l: l.clone(), w, w1, w2, eps: e });
                    }
                }
            }
            cells
        }
        CheckId::Nonvb => {
            let sp = spectral_of(p)?;
            eps_list()
                .into_iter()
                .filter(|e| eps.is_some() || (e.0 as i64 + e.1 as i64 - sp.w()).rem_euclid(2) == 0)
                .map(|e| Cell::Nonvb { n: sp.n(), l: sp.l().to_vec(), w: sp.w(), eps: e })
                .collect()
        }
        CheckId::Diso | CheckId::Highest0 if p.label.is_some() => {
            let label = label_of(p)?;
            eps_list()
                .into_iter()
                .map(|e| match id {
                    CheckId::Diso => Cell::Diso { label: label.clone(), eps: e },
                    _ => Cell::Highest0O { label: label.clone(), eps: e },
                })
                .collect()
        }
        CheckId::Diso => return Err(usage("--label is required")),
        CheckId::Highest0 => {
            let mu = mu_of(p)?;
            let pairs = pair_of(p)?.map_or_else(|| disgl_pairs(&mu), |x| vec![x]);
            pairs.into_iter().map(|(w1, w2)| Cell::Highest0Gl { mu: mu.clone(), w1, w2 }).collect()
        }
        CheckId::Disgl => vec![Cell::Disgl { mu: mu_of(p)?, pairs: pair_of(p)?.map(|x| vec![x]) }],
        CheckId::Extremal => vec![Cell::Extremal { mu: mu_of(p)? }],
        CheckId::Distt => vec![Cell::Distt { label: label_of(p)? }],
        CheckId::Jtau => vec![Cell::Jtau { n: p.n.ok_or_else(|| usage("--n is required"))? }],
    };
    Ok(cells)
}

fn eval_param(f: ParamFn, p: &ParamArgs) -> Result<Value, Failure> {
    let n = || p.n.filter(|n| *n > 0).ok_or_else(|| usage("--n is required and must be positive"));
    let value = match f {
        ParamFn::MuOf => json!(params::mu_of(&spectral_of(p)?)?),
        ParamFn::LambdaOf => json!(params::lambda_of(&spectral_of(p)?).to_string()),
        ParamFn::LPlus => json!(params::l_plus(&spectral_of(p)?).to_string()),
        ParamFn::LMinus => json!(params::l_minus(&spectral_of(p)?)?.to_string()),
        ParamFn::LMu => json!(params::l_mu(&mu_of(p)?)?.to_string()),
        ParamFn::LO => json!(params::l_o(n()?).to_string()),
        ParamFn::P0 => json!(params::p0(n()?)),
        ParamFn::SDegree => json!(params::s_degree(n()?)),
        ParamFn::CriticalRange => json!(params::critical_range(&spectral_of(p)?)),
        ParamFn::CriticalPairs => json!(params::critical_pairs(&spectral_of(p)?)),
        ParamFn::Epsilon0 => {
            let (e1, e2) = eps_of(p)?.ok_or_else(|| usage("--eps is required"))?;
            let (w1, w2) = pair_of(p)?.ok_or_else(|| usage("--w1 and --w2 are required"))?;
            json!(params::epsilon0(n()?, e1 as i64, w1, e2 as i64, w2)?)
        }
        ParamFn::CartanHelgasonO => {
            let label = label_of(p)?;
            let (e1, e2) = eps_of(p)?.ok_or_else(|| usage("--eps is required"))?;
            let cond = params::cartan_helgason_o_condition(&label, e1 as i64, e2 as i64);
            json!({ "holds": cond.is_some(), "condition": cond.map(String::from) })
        }
        ParamFn::CartanHelgasonGl => {
            let (w1, w2) = pair_of(p)?.ok_or_else(|| usage("--w1 and --w2 are required"))?;
            json!(params::cartan_helgason_gl(&mu_of(p)?, w1, w2))
        }
        ParamFn::BalancedWeight => json!(params::balanced_weight(&mu_of(p)?)),
        ParamFn::Section4Weights => json!(params::section4_weights(&spectral_of(p)?)?),
        ParamFn::WeylDimGl => json!(weyl_dim_gl(&mu_of(p)?)),
        ParamFn::ODim => json!(label_of(p)?.dim()),
    };
    Ok(value)
}
