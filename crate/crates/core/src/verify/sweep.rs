//! Parameter ranges and the cells a sweep runs over.

use serde::Serialize;

use crate::error::Result;
use crate::label::OLabel;
use crate::params::{balanced_weight, critical_pairs, SpectralParams};

use super::config::Config;
use super::report::CheckId;
use super::{disgl_pairs, Cell};

/// Ranges of a sweep. `l1_max` bounds spectral parameters and `O(2n)`
/// labels; `mu_max` bounds `GL(2n)` weights by `μ₁ ≤ mu_max` and
/// `μ_{2n} ≥ −mu_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ranges {
    pub ns: Vec<usize>,
    pub l1_max: i64,
    pub ws: Vec<i64>,
    pub mu_max: i64,
}

impl Ranges {
    /// Built-in defaults for each check.
    pub fn default_for(check: CheckId) -> Ranges {
        let (l1_max, mu_max) = match check {
            CheckId::Disfin | CheckId::Nonvb => (5, 0),
            CheckId::Diso => (4, 0),
            CheckId::Disgl => (0, 3),
            CheckId::Extremal => (0, 2),
            CheckId::Nonv | CheckId::Distt => (3, 0),
            CheckId::Highest0 => (3, 2),
            CheckId::Jtau => (0, 0),
        };
        Ranges { ns: vec![1, 2], l1_max, ws: vec![0, 2], mu_max }
    }

    /// Defaults overridden by `config` (keys `n`, `l1_max`, `w`, `mu_max`).
    pub fn from_config(check: CheckId, config: &Config) -> Result<Ranges> {
        let mut r = Ranges::default_for(check);
        if let Some(ns) = config.get_list(Some(check), "n")? {
            r.ns = ns.into_iter().map(|x| x.max(0) as usize).collect();
        }
        if let Some(x) = config.get_int(Some(check), "l1_max")? {
            r.l1_max = x;
        }
        if let Some(ws) = config.get_list(Some(check), "w")? {
            r.ws = ws;
        }
        if let Some(x) = config.get_int(Some(check), "mu_max")? {
            r.mu_max = x;
        }
        Ok(r)
    }
}

/// Strictly decreasing positive tuples of length `n` with `l₁ ≤ max` and
/// every entry `≡ w + 1 (mod 2)`.
pub fn spectral_params(n: usize, max: i64, w: i64) -> Vec<SpectralParams> {
    fn rec(n: usize, upper: i64, parity: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in (1..=upper).rev() {
            if x.rem_euclid(2) == parity {
                prefix.push(x);
                rec(n, x - 1, parity, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, max, (w + 1).rem_euclid(2), &mut Vec::new(), &mut out);
    out.sort();
    out.into_iter().filter_map(|l| SpectralParams::new(l, w).ok()).collect()
}

/// `O(2n)` labels with `l₁ ≤ max`: non-increasing non-negative tuples, and
/// the same heads followed by `−1/2`.
pub fn o_labels(n: usize, max: i64) -> Vec<OLabel> {
    if max < 0 {
        return Vec::new();
    }
    fn rec(len: usize, upper: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for x in 0..=upper {
            prefix.push(x);
            rec(len, x, prefix, out);
            prefix.pop();
        }
    }
    let mut full = Vec::new();
    rec(n, max, &mut Vec::new(), &mut full);
    let mut heads = Vec::new();
    rec(n - 1, max, &mut Vec::new(), &mut heads);
    let mut out: Vec<OLabel> = full.into_iter().filter_map(|p| OLabel::new(p).ok()).collect();
    out.extend(heads.into_iter().filter_map(|h| OLabel::with_minus_half(h).ok()));
    out.sort();
    out
}

/// Dominant integer weights of length `2n` with `μ₁ ≤ max` and `μ_{2n} ≥ −max`.
pub fn dominant_weights(n: usize, max: i64) -> Vec<Vec<i64>> {
    if max < 0 {
        return Vec::new();
    }
    fn rec(len: usize, upper: i64, lower: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for x in (lower..=upper).rev() {
            prefix.push(x);
            rec(len, x, lower, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(2 * n, max, -max, &mut Vec::new(), &mut out);
    out
}

const EPS: [(u8, u8); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

/// The cells of a sweep of `check` over `ranges`.
pub fn sweep_cells(check: CheckId, ranges: &Ranges) -> Vec<Cell> {
    let mut cells = Vec::new();
    for &n in &ranges.ns {
        if n == 0 {
            continue;
        }
        let spectral = || ranges.ws.iter().flat_map(move |&w| spectral_params(n, ranges.l1_max, w));
        match check {
            CheckId::Disfin => {
                for p in spectral() {
                    for (w1, w2) in critical_pairs(&p) {
                        cells.push(Cell::Disfin { n, l: p.l().to_vec(), w: p.w(), w1, w2 });
                    }
                }
            }
            CheckId::Nonv => {
                for p in spectral() {
                    for (w1, w2) in critical_pairs(&p) {
                        for eps in EPS {
                            if (eps.0 as i64 + w1 - eps.1 as i64 - w2).rem_euclid(2) == 0 {
                                cells.push(Cell::Nonv { n, l: p.l().to_vec(), w: p.w(), w1, w2, eps });
                            }
                        }
                    }
                }
            }
            CheckId::Nonvb => {
                for p in spectral() {
                    for eps in EPS {
                        if (eps.0 as i64 + eps.1 as i64 - p.w()).rem_euclid(2) == 0 {
                            cells.push(Cell::Nonvb { n, l: p.l().to_vec(), w: p.w(), eps });
                        }
                    }
                }
            }
            CheckId::Diso => {
                for label in o_labels(n, ranges.l1_max) {
                    for eps in EPS {
                        cells.push(Cell::Diso { label: label.clone(), eps });
                    }
                }
            }
            CheckId::Distt => {
                for label in o_labels(n, ranges.l1_max) {
                    cells.push(Cell::Distt { label });
                }
            }
            CheckId::Disgl => {
                for mu in dominant_weights(n, ranges.mu_max) {
                    if balanced_weight(&mu).is_some() {
                        cells.push(Cell::Disgl { mu, pairs: None });
                    }
                }
            }
            CheckId::Extremal => {
                for mu in dominant_weights(n, ranges.mu_max) {
                    cells.push(Cell::Extremal { mu });
                }
            }
            CheckId::Highest0 => {
                for mu in dominant_weights(n, ranges.mu_max) {
                    if balanced_weight(&mu).is_some() {
                        for (w1, w2) in disgl_pairs(&mu) {
                            cells.push(Cell::Highest0Gl { mu: mu.clone(), w1, w2 });
                        }
                    }
                }
                for label in o_labels(n, ranges.l1_max) {
                    for eps in EPS {
                        cells.push(Cell::Highest0O { label: label.clone(), eps });
                    }
                }
            }
            CheckId::Jtau => cells.push(Cell::Jtau { n }),
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerations() {
        let ls: Vec<Vec<i64>> = spectral_params(2, 5, 0).iter().map(|p| p.l().to_vec()).collect();
        assert_eq!(ls, vec![vec![3, 1], vec![5, 1], vec![5, 3]]);
        let labels: Vec<String> = o_labels(1, 2).iter().map(|l| l.to_string()).collect();
        assert_eq!(labels.len(), 4);
        assert!(labels.contains(&"(-1/2)".to_string()));
        assert_eq!(o_labels(2, 1).len(), 3 + 2);
        assert_eq!(dominant_weights(1, 1).len(), 6);
        assert!(sweep_cells(CheckId::Diso, &Ranges { ns: vec![], l1_max: 4, ws: vec![], mu_max: 0 }).is_empty());
    }
}
