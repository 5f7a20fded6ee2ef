//! Labels of irreducible representations and their dimension formulas.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::size_squared;

/// A label `(l_1 ≥ … ≥ l_n)` of an irreducible representation of `O(2n)`.
///
/// `l_1, …, l_{n−1}` are non-negative integers and `l_n ∈ {−1/2, 0, 1, 2, …}`.
/// The value `−1/2` is stored as `minus_half = true` with last part 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OLabel {
    parts: Vec<i64>,
    minus_half: bool,
}

impl OLabel {
    /// Label with integer entries.
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        OLabel::build(parts, false)
    }

    /// Label `(l_1, …, l_{n−1}, −1/2)` from the leading entries.
    pub fn with_minus_half(head: Vec<i64>) -> Result<Self> {
        let mut parts = head;
        parts.push(0);
        OLabel::build(parts, true)
    }

    fn build(parts: Vec<i64>, minus_half: bool) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidLabel("empty label".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidLabel(format!("{parts:?} is not weakly decreasing")));
        }
        if *parts.last().unwrap() < 0 {
            return Err(Error::InvalidLabel(format!("{parts:?}: last entry must be -1/2 or a non-negative integer")));
        }
        Ok(OLabel { parts, minus_half })
    }

    /// The trivial label `(0, …, 0)`.
    pub fn trivial(n: usize) -> Self {
        OLabel { parts: vec![0; n], minus_half: false }
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    /// Integer parts; the last is 0 when the label ends in −1/2.
    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn minus_half(&self) -> bool {
        self.minus_half
    }

    pub fn last(&self) -> i64 {
        *self.parts.last().unwrap()
    }

    /// Entries doubled, so `−1/2` becomes `−1`.
    pub fn doubled(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.parts.iter().map(|x| 2 * x).collect();
        if self.minus_half {
            *d.last_mut().unwrap() = -1;
        }
        d
    }

    /// The label with the last entry replaced by 0 (drops the determinant twist).
    pub fn untwisted(&self) -> OLabel {
        OLabel { parts: self.parts.clone(), minus_half: false }
    }

    /// The T_O highest weight of the corresponding `SO(2n)` constituent(s).
    pub fn highest_weight(&self) -> Vec<i64> {
        self.parts.clone()
    }

    /// `Σ_j (l_j + 2n − 2j)²`.
    pub fn size_squared(&self) -> BigRational {
        size_squared(&self.doubled())
    }

    /// Dimension of the representation.
    pub fn dim(&self) -> usize {
        let so = weyl_dim_so(&self.parts);
        if self.last() > 0 {
            2 * so
        } else {
            so
        }
    }
}

impl fmt::Display for OLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        if self.minus_half {
            *s.last_mut().unwrap() = "-1/2".into();
        }
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for OLabel {
    type Err = Error;

    /// Parses `5,3` or `(2,-1/2)`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let tokens: Vec<&str> = body.split(',').map(str::trim).collect();
        let (last, head) = tokens.split_last().ok_or_else(|| Error::Parse("empty label".into()))?;
        let parse_int = |t: &str| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad label entry '{t}'")));
        let head: Vec<i64> = head.iter().map(|t| parse_int(t)).collect::<Result<_>>()?;
        if *last == "-1/2" {
            OLabel::with_minus_half(head)
        } else {
            let mut parts = head;
            parts.push(parse_int(last)?);
            OLabel::new(parts)
        }
    }
}

/// Which irreducible representation a module realizes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IrrepLabel {
    /// `F_μ` for `GL(2n)`.
    Gl(Vec<i64>),
    /// `τ_l` for `O(2n)`.
    O(OLabel),
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Gl(mu) => write!(f, "F{mu:?}"),
            IrrepLabel::O(l) => write!(f, "tau{l}"),
        }
    }
}

fn exact_usize(x: BigRational) -> usize {
    assert!(x.is_integer(), "dimension formula produced a non-integer");
    x.to_integer().to_usize().expect("dimension fits in usize")
}

/// Weyl dimension formula for `GL(m)`: `Π_{i<j} (μ_i − μ_j + j − i)/(j − i)`.
pub fn weyl_dim_gl(mu: &[i64]) -> usize {
    let mut acc = BigRational::from_integer(BigInt::from(1));
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            let d = (j - i) as i64;
            acc *= BigRational::new(BigInt::from(mu[i] - mu[j] + d), BigInt::from(d));
        }
    }
    exact_usize(acc)
}

/// Weyl dimension formula for `SO(2n)` with highest weight `λ` (type `D_n`;
/// for `n = 1` every weight has dimension 1).
pub fn weyl_dim_so(lambda: &[i64]) -> usize {
    let n = lambda.len();
    let mut acc = BigRational::from_integer(BigInt::from(1));
    for i in 0..n {
        for j in i + 1..n {
            let ri = (n - 1 - i) as i64;
            let rj = (n - 1 - j) as i64;
            let (a, b) = (lambda[i] + ri, lambda[j] + rj);
            let num = (a - b) * (a + b);
            let den = (ri - rj) * (ri + rj);
            acc *= BigRational::new(BigInt::from(num), BigInt::from(den));
        }
    }
    if acc.is_zero() {
        return 0;
    }
    exact_usize(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let l: OLabel = "2,-1/2".parse().unwrap();
        assert!(l.minus_half());
        assert_eq!(l.to_string(), "(2,-1/2)");
        assert_eq!("(5,3)".parse::<OLabel>().unwrap().parts(), &[5, 3]);
        assert!("1,2".parse::<OLabel>().is_err());
        assert!("-1,-1/2".parse::<OLabel>().is_err());
        assert!("3,-1".parse::<OLabel>().is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(weyl_dim_gl(&[1, -1]), 3);
        assert_eq!(weyl_dim_gl(&[0, 0, -2, -2]), 20);
        assert_eq!(OLabel::new(vec![2, 2]).unwrap().dim(), 10);
        assert_eq!(OLabel::new(vec![6, 4]).unwrap().dim(), 66);
        assert_eq!(OLabel::new(vec![4, 2]).unwrap().dim(), 42);
        assert_eq!(OLabel::new(vec![1]).unwrap().dim(), 2);
        assert_eq!(OLabel::with_minus_half(vec![]).unwrap().dim(), 1);
        assert_eq!(OLabel::with_minus_half(vec![2]).unwrap().dim(), 9);
    }
}
