//! Verification harness: checks, the default suite, parameter sweeps and
//! deterministic JSON reports.

mod checks;
pub mod config;
mod report;
pub mod sweep;

use std::time::Instant;

use rayon::prelude::*;

pub use checks::{
    check_diso, check_disfin, check_disgl, check_distt, check_extremal, check_highest0_gl, check_highest0_o, check_jtau,
    check_nonv, check_nonvb, disgl_pairs,
};
pub use config::Config;
pub use report::{delta_name, Batch, CheckId, CheckReport, Claim, Instance, Status, Summary, SCHEMA};
pub use sweep::{sweep_cells, Ranges};

use crate::error::{Error, Result};
use crate::label::OLabel;
use crate::lie::Delta;

/// Default resource guard: rank at most 2 and leading label entry at most 6.
pub const MAX_N: usize = 2;
pub const MAX_L1: i64 = 6;

/// One concrete check invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Disfin { n: usize, l: Vec<i64>, w: i64, w1: i64, w2: i64 },
    Diso { label: OLabel, eps: (u8, u8) },
    Disgl { mu: Vec<i64>, pairs: Option<Vec<(i64, i64)>> },
    Extremal { mu: Vec<i64> },
    Jtau { n: usize },
    Nonv { n: usize, l: Vec<i64>, w: i64, w1: i64, w2: i64, eps: (u8, u8) },
    Distt { label: OLabel },
    Highest0Gl { mu: Vec<i64>, w1: i64, w2: i64 },
    Highest0O { label: OLabel, eps: (u8, u8) },
    Nonvb { n: usize, l: Vec<i64>, w: i64, eps: (u8, u8) },
}

impl Cell {
    pub fn check_id(&self) -> CheckId {
        match self {
            Cell::Disfin { .. } => CheckId::Disfin,
            Cell::Diso { .. } => CheckId::Diso,
            Cell::Disgl { .. } => CheckId::Disgl,
            Cell::Extremal { .. } => CheckId::Extremal,
            Cell::Jtau { .. } => CheckId::Jtau,
            Cell::Nonv { .. } => CheckId::Nonv,
            Cell::Distt { .. } => CheckId::Distt,
            Cell::Highest0Gl { .. } | Cell::Highest0O { .. } => CheckId::Highest0,
            Cell::Nonvb { .. } => CheckId::Nonvb,
        }
    }

    /// Rank and the size parameter compared against the resource guard
    /// (`l₁` for spectral and `O(2n)` labels, `μ₁ − μ_{2n}` for `GL(2n)`
    /// weights, `l₁ + 1` where `τ_{ℓ⁺}` is built).
    fn size(&self) -> (usize, i64) {
        let spread = |mu: &[i64]| mu.first().copied().unwrap_or(0) - mu.last().copied().unwrap_or(0);
        let lead = |l: &[i64]| l.first().copied().unwrap_or(0);
        match self {
            Cell::Disfin { n, l, .. } => (*n, lead(l)),
            Cell::Nonv { n, l, .. } | Cell::Nonvb { n, l, .. } => (*n, lead(l) + 1),
            Cell::Diso { label, .. } | Cell::Distt { label } | Cell::Highest0O { label, .. } => {
                (label.n(), label.parts()[0])
            }
            Cell::Disgl { mu, .. } | Cell::Extremal { mu } | Cell::Highest0Gl { mu, .. } => (mu.len() / 2, spread(mu)),
            Cell::Jtau { n } => (*n, 2 * *n as i64),
        }
    }

    /// Refuses cells beyond the default size limits unless `force` is set.
    pub fn guard(&self, force: bool) -> Result<()> {
        let (n, size) = self.size();
        if n == 0 {
            return Err(Error::InvalidParams("rank must be positive".into()));
        }
        if !force && (n > MAX_N || size > MAX_L1) {
            return Err(Error::ResourceGuard(format!(
                "{} with rank {n} and size {size} exceeds 2n <= {} and l1 <= {MAX_L1}; pass --force to run it",
                self.check_id(),
                2 * MAX_N
            )));
        }
        Ok(())
    }

    pub fn run(&self, delta: Delta) -> Result<CheckReport> {
        match self {
            Cell::Disfin { n, l, w, w1, w2 } => check_disfin(*n, l, *w, *w1, *w2, delta),
            Cell::Diso { label, eps } => check_diso(label, eps.0, eps.1, delta),
            Cell::Disgl { mu, pairs } => check_disgl(mu, pairs.as_deref(), delta),
            Cell::Extremal { mu } => check_extremal(mu, delta),
            Cell::Jtau { n } => check_jtau(*n, delta),
            Cell::Nonv { n, l, w, w1, w2, eps } => check_nonv(*n, l, *w, *w1, *w2, *eps, delta),
            Cell::Distt { label } => check_distt(label, delta),
            Cell::Highest0Gl { mu, w1, w2 } => check_highest0_gl(mu, *w1, *w2, delta),
            Cell::Highest0O { label, eps } => check_highest0_o(label, eps.0, eps.1, delta),
            Cell::Nonvb { n, l, w, eps } => check_nonvb(*n, l, *w, *eps, delta),
        }
    }
}

/// Options shared by every run.
#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub delta: Delta,
    pub workers: usize,
    pub force: bool,
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { delta: Delta::Last, workers: 1, force: false, timing: false }
    }
}

/// Runs cells (concurrently up to `workers`), keeping input order.
pub fn run_cells(cells: &[Cell], opts: &RunOptions) -> Result<Vec<CheckReport>> {
    for c in cells {
        c.guard(opts.force)?;
    }
    let one = |c: &Cell| -> Result<CheckReport> {
        let start = Instant::now();
        let mut r = c.run(opts.delta)?;
        if opts.timing {
            r.timing_ms = Some(start.elapsed().as_millis() as u64);
        }
        Ok(r)
    };
    if opts.workers <= 1 {
        return cells.iter().map(one).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::InvalidParams(format!("cannot start {} workers: {e}", opts.workers)))?;
    pool.install(|| cells.par_iter().map(one).collect())
}

fn label(s: &str) -> OLabel {
    s.parse().expect("suite labels are valid")
}

/// The default suite: the worked instances of every check, including the
/// rank-two instances with `ℓ = (5, 3)`.
pub fn default_suite() -> Vec<Cell> {
    let mut cells = vec![
        Cell::Disfin { n: 1, l: vec![3], w: 0, w1: 0, w2: 0 },
        Cell::Disfin { n: 1, l: vec![3], w: 0, w1: 1, w2: -1 },
        Cell::Disfin { n: 1, l: vec![1], w: 0, w1: 0, w2: 0 },
        Cell::Disfin { n: 2, l: vec![3, 1], w: 0, w1: 0, w2: 0 },
        Cell::Disfin { n: 2, l: vec![5, 3], w: 2, w1: -1, w2: -1 },
    ];
    for (l, eps) in [("2", (0, 0)), ("2", (1, 0)), ("-1/2", (1, 1)), ("1", (1, 0)), ("2,-1/2", (1, 1)), ("2,2", (0, 0)), ("3,1", (1, 0))] {
        cells.push(Cell::Diso { label: label(l), eps });
    }
    for mu in [vec![1, -1], vec![1, 0, 0, -1], vec![2, 1, -1, -2]] {
        cells.push(Cell::Disgl { mu, pairs: None });
    }
    for mu in [vec![1, -1], vec![0, 0, 0, 0], vec![2, 1, -1, -2]] {
        cells.push(Cell::Extremal { mu });
    }
    cells.push(Cell::Jtau { n: 1 });
    cells.push(Cell::Jtau { n: 2 });
    cells.extend([
        Cell::Nonv { n: 1, l: vec![1], w: 0, w1: 0, w2: 0, eps: (0, 0) },
        Cell::Nonv { n: 1, l: vec![3], w: 0, w1: 1, w2: -1, eps: (0, 0) },
        Cell::Nonv { n: 2, l: vec![3, 1], w: 0, w1: 0, w2: 0, eps: (0, 0) },
        Cell::Nonv { n: 2, l: vec![5, 3], w: 2, w1: -1, w2: -1, eps: (0, 0) },
    ]);
    for l in ["2", "1,1"] {
        cells.push(Cell::Distt { label: label(l) });
    }
    cells.extend([
        Cell::Highest0Gl { mu: vec![1, -1], w1: 0, w2: 0 },
        Cell::Highest0Gl { mu: vec![1, 0, 0, -1], w1: 0, w2: 0 },
        Cell::Highest0O { label: label("2"), eps: (0, 0) },
        Cell::Highest0O { label: label("2,2"), eps: (0, 0) },
    ]);
    cells.extend([
        Cell::Nonvb { n: 1, l: vec![3], w: 0, eps: (0, 0) },
        Cell::Nonvb { n: 2, l: vec![5, 3], w: 2, eps: (0, 0) },
    ]);
    cells
}

/// Runs the default suite.
pub fn run_all(opts: &RunOptions) -> Result<Batch> {
    Ok(Batch::new("all", run_cells(&default_suite(), opts)?))
}
