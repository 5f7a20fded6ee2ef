//! Independent oracles used to cross-check the library: plain dense
//! elimination, tableau counting, Freudenthal's recursion, the
//! `so(4) = sl(2) × sl(2)` dimension formula and a brute-force character
//! average over `O(1) × O(1)`.
//!
//! None of these call into the code they check, apart from reading matrix
//! entries.

#![allow(dead_code)]

use std::collections::BTreeMap;

use distrep::label::OLabel;
use distrep::lie::GroupElt;
use distrep::linalg::{GaussRat, SparseMat};
use distrep::rep::RepModule;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A Gaussian rational as a pair of rationals.
#[derive(Clone, Debug, PartialEq)]
struct C(BigRational, BigRational);

impl C {
    fn of(x: &GaussRat) -> C {
        C(x.re().clone(), x.im().clone())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero() && self.1.is_zero()
    }
    fn mul(&self, o: &C) -> C {
        C(&self.0 * &o.0 - &self.1 * &o.1, &self.0 * &o.1 + &self.1 * &o.0)
    }
    fn sub(&self, o: &C) -> C {
        C(&self.0 - &o.0, &self.1 - &o.1)
    }
    fn inv(&self) -> C {
        let d = &self.0 * &self.0 + &self.1 * &self.1;
        C(&self.0 / &d, -&self.1 / &d)
    }
}

/// Rank by textbook Gaussian elimination on a dense copy.
pub fn dense_rank(m: &SparseMat) -> usize {
    let mut rows: Vec<Vec<C>> =
        m.to_dense().iter().map(|r| r.iter().map(C::of).collect()).collect();
    let cols = m.ncols();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].mul(&inv);
                for k in c..cols {
                    let t = f.mul(&rows[rank][k]);
                    rows[r][k] = rows[r][k].sub(&t);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Number of semistandard tableaux of shape `μ − μ_last` with entries in
/// `1..=len(μ)`, i.e. the dimension of the `GL`-irrep of highest weight `μ`.
pub fn ssyt_count(mu: &[i64]) -> usize {
    let m = mu.len();
    let shape: Vec<usize> = mu.iter().map(|x| (x - mu[m - 1]) as usize).collect();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    fn fill(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, m: usize) -> usize {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=m {
            grid[r][c] = v;
            total += fill(k + 1, cells, grid, m);
        }
        total
    }
    fill(0, &cells, &mut grid, m)
}

/// Weight multiplicities of the `GL(m)`-irrep of highest weight `lambda`
/// by Freudenthal's recursion, with all inner products doubled to stay
/// integral.
pub fn freudenthal(lambda: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let m = lambda.len();
    let rho2: Vec<i64> = (0..m).map(|i| m as i64 - 1 - 2 * i as i64).collect();
    let norm2 = |v: &[i64]| -> i64 { v.iter().zip(&rho2).map(|(a, r)| (2 * a + r) * (2 * a + r)).sum() };
    let (lo, hi) = (lambda[m - 1], lambda[0]);
    let total: i64 = lambda.iter().sum();
    // Candidates below lambda in dominance order, sorted by depth.
    let mut cands: Vec<(i64, Vec<i64>)> = Vec::new();
    let mut cur = vec![lo; m];
    loop {
        if cur.iter().sum::<i64>() == total {
            let mut partial = 0;
            let mut depth = 0;
            let mut below = true;
            for i in 0..m {
                partial += lambda[i] - cur[i];
                below &= partial >= 0;
                depth += partial;
            }
            if below {
                cands.push((depth, cur.clone()));
            }
        }
        let mut i = 0;
        while i < m && cur[i] == hi {
            cur[i] = lo;
            i += 1;
        }
        if i == m {
            break;
        }
        cur[i] += 1;
    }
    cands.sort();
    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    let top = norm2(lambda);
    for (depth, mu) in cands {
        if depth == 0 {
            mult.insert(mu, 1);
            continue;
        }
        let mut num: i64 = 0;
        for i in 0..m {
            for j in i + 1..m {
                let mut k = 1;
                loop {
                    let mut nu = mu.clone();
                    nu[i] += k;
                    nu[j] -= k;
                    if nu[i] > hi || nu[j] < lo {
                        break;
                    }
                    if let Some(&c) = mult.get(&nu) {
                        num += 8 * c as i64 * (nu[i] - nu[j]);
                    }
                    k += 1;
                }
            }
        }
        let den = top - norm2(&mu);
        if den == 0 {
            assert_eq!(num, 0, "Freudenthal recursion is inconsistent at {mu:?}");
            continue;
        }
        assert_eq!(num % den, 0, "non-integral multiplicity at {mu:?}");
        let c = num / den;
        assert!(c >= 0);
        if c > 0 {
            mult.insert(mu, c as u64);
        }
    }
    mult
}

/// Weight multiset of a graded module.
pub fn weight_multiset(m: &RepModule) -> BTreeMap<Vec<i64>, u64> {
    let mut out = BTreeMap::new();
    for w in &m.grading().expect("graded module").weights {
        *out.entry(w.clone()).or_insert(0) += 1;
    }
    out
}

/// `dim τ_l` for `O(2)` and `O(4)`: an `SO(2n)`-irrep of highest weight
/// `(a, b)` restricts from `sl(2) × sl(2)` with dimension
/// `(a + b + 1)(a − b + 1)`, and `τ_l` is one or two such pieces.
pub fn o_dim_small(label: &OLabel) -> usize {
    let p = label.parts();
    match (label.n(), label.minus_half()) {
        (1, true) => 1,
        (1, false) => if p[0] == 0 { 1 } else { 2 },
        (2, true) => ((p[0] + 1) * (p[0] + 1)) as usize,
        (2, false) => {
            let so4 = |a: i64, b: i64| ((a + b + 1) * (a - b + 1)) as usize;
            if p[1] == 0 { so4(p[0], 0) } else { so4(p[0], p[1]) + so4(p[0], -p[1]) }
        }
        _ => panic!("only ranks 1 and 2"),
    }
}

/// `dim Hom_{O(1)×O(1)}(τ, det^{e1,e2})` for a rank-one module, as the
/// average of `χ(g) tr(g)` over the four diagonal sign matrices.
pub fn o1xo1_functionals(tau: &RepModule, e1: u8, e2: u8) -> usize {
    assert_eq!(tau.n(), 1);
    let r1 = tau.element(GroupElt::Refl(1));
    let r2 = tau.element(GroupElt::Refl(2));
    let id = SparseMat::identity(tau.dim());
    let mut sum = BigRational::zero();
    for (s1, s2) in [(0u8, 0u8), (0, 1), (1, 0), (1, 1)] {
        let a = if s1 == 1 { r1.clone() } else { id.clone() };
        let b = if s2 == 1 { r2.clone() } else { id.clone() };
        let tr = a.mul(&b).trace();
        assert!(tr.im().is_zero());
        let sign = if (e1 * s1 + e2 * s2).is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
        sum += sign * tr.re();
    }
    let avg = sum / BigRational::from_integer(BigInt::from(4));
    assert!(avg.is_integer());
    avg.to_integer().try_into().unwrap()
}

/// All dominant weights of length `2n` with entries in `[−max, max]`.
pub fn dominant_weights(n: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(len: usize, upper: i64, lower: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in lower..=upper {
            cur.push(x);
            rec(len, x, lower, cur, out);
            cur.pop();
        }
    }
    rec(2 * n, max, -max, &mut cur, &mut out);
    out
}
