//! Parameter calculus for cohomological representations of `GL(2n)` and the
//! finite-dimensional data attached to them.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::label::OLabel;
use crate::lie::{rho, Torus, Weight};

/// Validated parameters `(ℓ, w)`: `l_1 > … > l_n > 0` with every
/// `l_j ≡ w + 1 (mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralParams {
    l: Vec<i64>,
    w: i64,
}

impl SpectralParams {
    pub fn new(l: Vec<i64>, w: i64) -> Result<Self> {
        if l.is_empty() {
            return Err(Error::InvalidParams("ℓ must be non-empty".into()));
        }
        if l.windows(2).any(|p| p[0] <= p[1]) || *l.last().unwrap() <= 0 {
            return Err(Error::InvalidParams(format!("ℓ = {l:?} must be strictly decreasing and positive")));
        }
        if let Some(bad) = l.iter().find(|x| (*x - w - 1).rem_euclid(2) != 0) {
            return Err(Error::InvalidParams(format!("l_j = {bad} is not congruent to w + 1 = {} mod 2", w + 1)));
        }
        Ok(SpectralParams { l, w })
    }

    pub fn n(&self) -> usize {
        self.l.len()
    }

    pub fn l(&self) -> &[i64] {
        &self.l
    }

    pub fn w(&self) -> i64 {
        self.w
    }

    /// `true` for odd `w`, where the case split defining `ℓ⁻` degenerates.
    pub fn odd_w(&self) -> bool {
        self.w % 2 != 0
    }
}

/// `λ_ℓ = (l_1/2, …, l_n/2, −l_n/2, …, −l_1/2)` on the γ-torus.
pub fn lambda_of(p: &SpectralParams) -> Weight {
    let mut doubled: Vec<i64> = p.l.clone();
    doubled.extend(p.l.iter().rev().map(|x| -x));
    Weight::from_halves(Torus::Gamma(2 * p.n()), &doubled).expect("length 2n")
}

/// `μ = λ_ℓ − ρ_{2n} − (w/2, …, w/2)`, asserted integral and dominant.
pub fn mu_of(p: &SpectralParams) -> Result<Vec<i64>> {
    let half_w = BigRational::new(BigInt::from(-p.w), BigInt::from(2));
    let mu = lambda_of(p).sub(&rho(p.n()))?.shift(&half_w);
    let ints = mu.to_ints().ok_or_else(|| Error::Inconsistent(format!("μ = {mu} is not integral")))?;
    if ints.windows(2).any(|x| x[0] < x[1]) {
        return Err(Error::Inconsistent(format!("μ = {mu} is not dominant")));
    }
    Ok(ints)
}

/// `ℓ⁺ = (l_1 + 1, …, l_n + 1)`.
pub fn l_plus(p: &SpectralParams) -> OLabel {
    OLabel::new(p.l.iter().map(|x| x + 1).collect()).expect("ℓ⁺ is a valid label")
}

/// `ℓ⁻ = ℓ − (2n−1, …, 3, 1)`, with the last entry lowered by a further
/// `1/2` when `l_n = 1` and `w/2` is odd. For odd `w` the second condition
/// cannot hold, and the plain formula is used.
pub fn l_minus(p: &SpectralParams) -> Result<OLabel> {
    let n = p.n() as i64;
    let parts: Vec<i64> = p.l.iter().enumerate().map(|(j, x)| x - (2 * (n - j as i64) - 1)).collect();
    let half_odd = !p.odd_w() && (p.w / 2).rem_euclid(2) == 1;
    if p.l[p.n() - 1] == 1 && half_odd {
        OLabel::with_minus_half(parts[..p.n() - 1].to_vec())
    } else {
        OLabel::new(parts)
    }
}

/// `ℓ_μ = (μ_1 − μ_{2n}, …, μ_n − μ_{n+1})`, with the last entry lowered by
/// `1/2` when `μ_n = μ_{n+1}` is odd.
pub fn l_mu(mu: &[i64]) -> Result<OLabel> {
    let m = mu.len();
    if m == 0 || !m.is_multiple_of(2) || mu.windows(2).any(|x| x[0] < x[1]) {
        return Err(Error::NonDominant(format!("{mu:?}")));
    }
    let n = m / 2;
    let parts: Vec<i64> = (0..n).map(|k| mu[k] - mu[m - 1 - k]).collect();
    if mu[n - 1] == mu[n] && mu[n - 1].rem_euclid(2) == 1 {
        OLabel::with_minus_half(parts[..n - 1].to_vec())
    } else {
        OLabel::new(parts)
    }
}

/// `ℓ_O = (2n, 2n − 2, …, 2)`.
pub fn l_o(n: usize) -> OLabel {
    OLabel::new((0..n).map(|k| 2 * (n - k) as i64).collect()).expect("valid label")
}

/// `p₀ = n² + n − 1`.
pub fn p0(n: usize) -> usize {
    n * n + n - 1
}

/// `S = n² − n`.
pub fn s_degree(n: usize) -> usize {
    n * n - n
}

/// The integers in `[(1 − l_n − w)/2, (l_n − 1 − w)/2]`.
pub fn critical_range(p: &SpectralParams) -> Vec<i64> {
    let ln = p.l[p.n() - 1];
    let lo = (1 - ln - p.w + 1).div_euclid(2);
    let hi = (ln - 1 - p.w).div_euclid(2);
    (lo..=hi).collect()
}

/// Pairs `(w_1, w_2)` in the critical range with `w_1 + w_2 = −w`.
pub fn critical_pairs(p: &SpectralParams) -> Vec<(i64, i64)> {
    let range = critical_range(p);
    range.iter().filter(|w1| range.contains(&(-p.w - **w1))).map(|w1| (*w1, -p.w - w1)).collect()
}

/// `ε₀ = n − 1 + ε_{χ₁} + w₁ = n − 1 + ε_{χ₂} + w₂ (mod 2)`; the two
/// expressions must agree.
pub fn epsilon0(n: usize, eps_chi1: i64, w1: i64, eps_chi2: i64, w2: i64) -> Result<u8> {
    let a = (n as i64 - 1 + eps_chi1 + w1).rem_euclid(2);
    let b = (n as i64 - 1 + eps_chi2 + w2).rem_euclid(2);
    if a != b {
        return Err(Error::Parity(format!(
            "n − 1 + ε_χ1 + w1 = {a} but n − 1 + ε_χ2 + w2 = {b} (mod 2)"
        )));
    }
    Ok(a as u8)
}

/// Which of the three sufficient conditions for an `O(n) × O(n)`-distinguished
/// `τ_l` holds for `det^{ε₁,ε₂}`, if any.
pub fn cartan_helgason_o_condition(l: &OLabel, e1: i64, e2: i64) -> Option<char> {
    let (e1, e2) = (e1.rem_euclid(2), e2.rem_euclid(2));
    let head = &l.parts()[..l.n() - 1];
    let all_even = head.iter().all(|x| x % 2 == 0);
    if l.minus_half() {
        (all_even && e1 == 1 && e2 == 1).then_some('c')
    } else if l.last() == 0 {
        (all_even && e1 == 0 && e2 == 0).then_some('b')
    } else {
        l.parts().iter().all(|x| (x - e1 - e2).rem_euclid(2) == 0).then_some('a')
    }
}

pub fn cartan_helgason_o(l: &OLabel, e1: i64, e2: i64) -> bool {
    cartan_helgason_o_condition(l, e1, e2).is_some()
}

/// `w_μ` when `μ_1 + μ_{2n} = μ_2 + μ_{2n−1} = … = μ_n + μ_{n+1}`.
pub fn balanced_weight(mu: &[i64]) -> Option<i64> {
    let m = mu.len();
    if m == 0 || !m.is_multiple_of(2) {
        return None;
    }
    let w = mu[0] + mu[m - 1];
    (0..m / 2).all(|k| mu[k] + mu[m - 1 - k] == w).then_some(w)
}

/// `μ` balanced, `w₁, w₂ ∈ [μ_{n+1}, μ_n]` and `w₁ + w₂ = w_μ`.
pub fn cartan_helgason_gl(mu: &[i64], w1: i64, w2: i64) -> bool {
    let Some(wmu) = balanced_weight(mu) else {
        return false;
    };
    if mu.windows(2).any(|x| x[0] < x[1]) {
        return false;
    }
    let n = mu.len() / 2;
    let inside = |x: i64| mu[n] <= x && x <= mu[n - 1];
    inside(w1) && inside(w2) && w1 + w2 == wmu
}

/// Weights on `(S¹)^n` used in the bottom-layer construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section4Weights {
    /// `(l_1 + 2n − 1, l_2 + 2n − 3, …, l_n + 1)`.
    pub f_prime: Vec<i64>,
    /// `(2n − 2, 2n − 4, …, 0)`.
    pub wedge_nc: Vec<i64>,
    /// `(−l_1 − 1, …, −l_n − 1)`.
    pub v_fstar: Vec<i64>,
    /// The two lowest weights of `τ_{ℓ⁺}*`: `v_fstar` and the same with the
    /// last sign flipped.
    pub lowest: [Vec<i64>; 2],
}

/// The weights above, with the identity `f_prime = wedge_nc − v_fstar` asserted.
pub fn section4_weights(p: &SpectralParams) -> Result<Section4Weights> {
    let n = p.n() as i64;
    let f_prime: Vec<i64> = p.l.iter().enumerate().map(|(j, x)| x + 2 * (n - j as i64) - 1).collect();
    let wedge_nc: Vec<i64> = (0..n).map(|j| 2 * (n - 1 - j)).collect();
    let v_fstar: Vec<i64> = p.l.iter().map(|x| -x - 1).collect();
    let mut other = v_fstar.clone();
    let last = other.len() - 1;
    other[last] = -other[last];
    let diff: Vec<i64> = wedge_nc.iter().zip(&v_fstar).map(|(a, b)| a - b).collect();
    if diff != f_prime {
        return Err(Error::Inconsistent(format!("F' weight {f_prime:?} differs from {diff:?}")));
    }
    Ok(Section4Weights { f_prime, wedge_nc, lowest: [v_fstar.clone(), other], v_fstar })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(l: &[i64], w: i64) -> SpectralParams {
        SpectralParams::new(l.to_vec(), w).unwrap()
    }

    #[test]
    fn validation() {
        assert!(SpectralParams::new(vec![3, 3], 0).is_err());
        assert!(SpectralParams::new(vec![2], 0).is_err());
        assert!(SpectralParams::new(vec![0], 1).is_err());
        assert!(SpectralParams::new(vec![4, 2], 1).is_ok());
    }

    #[test]
    fn weights() {
        assert_eq!(lambda_of(&sp(&[3], 0)).to_string(), "3/2,-3/2");
        assert_eq!(lambda_of(&sp(&[5, 3], 0)).to_string(), "5/2,3/2,-3/2,-5/2");
        assert_eq!(mu_of(&sp(&[1], 0)).unwrap(), vec![0, 0]);
        assert_eq!(mu_of(&sp(&[3], 0)).unwrap(), vec![1, -1]);
        assert_eq!(mu_of(&sp(&[5, 3], 2)).unwrap(), vec![0, 0, -2, -2]);
    }

    #[test]
    fn labels() {
        assert_eq!(l_plus(&sp(&[3, 1], 0)).to_string(), "(4,2)");
        assert_eq!(l_minus(&sp(&[3, 1], 0)).unwrap().to_string(), "(0,0)");
        assert_eq!(l_minus(&sp(&[3, 1], 2)).unwrap().to_string(), "(0,-1/2)");
        assert_eq!(l_minus(&sp(&[1], 0)).unwrap().to_string(), "(0)");
        assert_eq!(l_mu(&[1, -1]).unwrap().to_string(), "(2)");
        assert_eq!(l_mu(&[1, 1]).unwrap().to_string(), "(-1/2)");
        assert_eq!(l_mu(&[0, 0, -2, -2]).unwrap().to_string(), "(2,2)");
        assert_eq!(l_o(2).to_string(), "(4,2)");
        assert_eq!((p0(1), s_degree(1), p0(2), s_degree(2)), (1, 0, 5, 2));
    }

    #[test]
    fn ranges_and_parities() {
        assert_eq!(critical_range(&sp(&[3], 0)), vec![-1, 0, 1]);
        assert_eq!(critical_range(&sp(&[1], 0)), vec![0]);
        assert_eq!(critical_range(&sp(&[5, 3], 2)), vec![-2, -1, 0]);
        assert_eq!(critical_pairs(&sp(&[3], 0)), vec![(-1, 1), (0, 0), (1, -1)]);
        assert_eq!(epsilon0(1, 0, 0, 0, 0).unwrap(), 0);
        assert_eq!(epsilon0(2, 1, 0, 1, 0).unwrap(), 0);
        assert_eq!(epsilon0(2, 0, 1, 0, 1).unwrap(), 0);
        assert!(epsilon0(1, 0, 0, 1, 0).is_err());
    }

    #[test]
    fn distinction_predicates() {
        assert!(cartan_helgason_o(&"2".parse().unwrap(), 0, 0));
        assert_eq!(cartan_helgason_o_condition(&"2,-1/2".parse().unwrap(), 1, 1), Some('c'));
        assert!(!cartan_helgason_gl(&[1, 0, 0, -1], 2, -2));
        assert!(cartan_helgason_gl(&[1, 0, 0, -1], 0, 0));
    }

    #[test]
    fn bottom_layer_weights() {
        let s = section4_weights(&sp(&[3], 0)).unwrap();
        assert_eq!((s.f_prime, s.wedge_nc, s.v_fstar), (vec![4], vec![0], vec![-4]));
        let s = section4_weights(&sp(&[5, 3], 2)).unwrap();
        assert_eq!((s.f_prime, s.wedge_nc, s.v_fstar), (vec![8, 4], vec![2, 0], vec![-6, -4]));
        assert_eq!(s.lowest[1], vec![-6, 4]);
    }
}
