//! One-dimensional characters of the groups in the catalog.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{catalog, lie_basis, Frame, GroupElt, GroupKind, Matrix};
use crate::linalg::{GaussRat, SparseMat};
use crate::rep::RepModule;

/// A character of one of the groups in the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CharSpec {
    /// `det(a)^{w1} det(b)^{w2}` on `GL_n × GL_n`.
    GlnGln(i64, i64),
    /// `det(a)^{ε1} det(b)^{ε2}` on `O_n × O_n` (exponents mod 2).
    OnOn(u8, u8),
    /// `diag(a_1, …, a_n, a_n, …, a_1) ↦ Π a_k^w` on the split torus `H′`.
    Hprime(i64),
    /// A weight of the torus `T_O`.
    TO(Vec<i64>),
    /// `det^ε` on `O(2n)`.
    O2nDet(u8),
    /// `det^k` on `GL(2n)`.
    Gl2nDet(i64),
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl CharSpec {
    /// The trivial character of `kind` (rank `n` only matters for `TO`).
    pub fn trivial(kind: GroupKind, n: usize) -> Result<CharSpec> {
        Ok(match kind {
            GroupKind::Gl2n => CharSpec::Gl2nDet(0),
            GroupKind::O2n => CharSpec::O2nDet(0),
            GroupKind::GlnGln => CharSpec::GlnGln(0, 0),
            GroupKind::OnOn => CharSpec::OnOn(0, 0),
            GroupKind::Hprime => CharSpec::Hprime(0),
            GroupKind::TO => CharSpec::TO(vec![0; n]),
            GroupKind::StandardDiag => {
                return Err(Error::InvalidParams("no character family is attached to StandardDiag".into()))
            }
        })
    }

    pub fn group(&self) -> GroupKind {
        match self {
            CharSpec::GlnGln(..) => GroupKind::GlnGln,
            CharSpec::OnOn(..) => GroupKind::OnOn,
            CharSpec::Hprime(_) => GroupKind::Hprime,
            CharSpec::TO(_) => GroupKind::TO,
            CharSpec::O2nDet(_) => GroupKind::O2n,
            CharSpec::Gl2nDet(_) => GroupKind::Gl2n,
        }
    }

    pub fn inverse(&self) -> CharSpec {
        match self {
            CharSpec::GlnGln(a, b) => CharSpec::GlnGln(-a, -b),
            CharSpec::Hprime(w) => CharSpec::Hprime(-w),
            CharSpec::TO(l) => CharSpec::TO(l.iter().map(|x| -x).collect()),
            CharSpec::Gl2nDet(k) => CharSpec::Gl2nDet(-k),
            other => other.clone(),
        }
    }

    fn check_rank(&self, n: usize) -> Result<()> {
        match self {
            CharSpec::TO(l) if l.len() != n => Err(Error::DimensionMismatch { expected: n, got: l.len() }),
            _ => Ok(()),
        }
    }

    /// Value of the differential on a Lie algebra element given in frame
    /// coordinates (assumed to lie in the Lie algebra of `self.group()`).
    pub fn lie_value(&self, n: usize, x_frame: &Matrix) -> GaussRat {
        let std = || Frame::new(n).to_std(x_frame);
        let block_trace = |x: &Matrix, r: std::ops::Range<usize>| {
            r.fold(GaussRat::zero(), |acc, k| &acc + x.get(k, k))
        };
        match self {
            CharSpec::GlnGln(w1, w2) => {
                let s = std();
                &(&block_trace(&s, 0..n) * &GaussRat::from_int(*w1))
                    + &(&block_trace(&s, n..2 * n) * &GaussRat::from_int(*w2))
            }
            CharSpec::Hprime(w) => &x_frame.trace() * &GaussRat::from_ratio(*w, 2),
            CharSpec::TO(l) => {
                l.iter().enumerate().fold(GaussRat::zero(), |acc, (k, w)| &acc + &(x_frame.get(k, k) * &GaussRat::from_int(*w)))
            }
            CharSpec::Gl2nDet(k) => &x_frame.trace() * &GaussRat::from_int(*k),
            CharSpec::OnOn(..) | CharSpec::O2nDet(_) => GaussRat::zero(),
        }
    }

    /// Value (`±1`) on a catalog element. Elements outside the group (for the
    /// tori) get the value of the natural extension through the block
    /// determinants, or 1.
    pub fn element_value(&self, n: usize, g: GroupElt) -> i64 {
        let (d1, d2) = g.block_dets(n);
        let pow = |d: i64, e: i64| if d == -1 { sign(e) } else { 1 };
        match self {
            CharSpec::GlnGln(w1, w2) => pow(d1, *w1) * pow(d2, *w2),
            CharSpec::OnOn(e1, e2) => pow(d1, *e1 as i64) * pow(d2, *e2 as i64),
            CharSpec::Hprime(w) => pow(d1, *w) * pow(d2, *w),
            CharSpec::TO(_) => 1,
            CharSpec::O2nDet(e) => pow(g.det(n), *e as i64),
            CharSpec::Gl2nDet(k) => pow(g.det(n), *k),
        }
    }

    /// The character as a one-dimensional module of `self.group()`.
    pub fn module(&self, n: usize) -> Result<RepModule> {
        self.check_rank(n)?;
        let kind = self.group();
        let lie = lie_basis(kind, n)
            .iter()
            .map(|g| SparseMat::scalar(1, &self.lie_value(n, &g.frame)))
            .collect();
        let elements: BTreeMap<GroupElt, SparseMat> = catalog(n)
            .into_iter()
            .map(|g| (g, SparseMat::scalar(1, &GaussRat::from_int(self.element_value(n, g)))))
            .collect();
        RepModule::assemble(self.to_string(), n, kind, 1, lie, elements, None, "character".into())
    }
}

impl fmt::Display for CharSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharSpec::GlnGln(a, b) => write!(f, "det^({a},{b})"),
            CharSpec::OnOn(a, b) => write!(f, "det^({a},{b})|OnxOn"),
            CharSpec::Hprime(w) => write!(f, "Hprime^{w}"),
            CharSpec::TO(l) => write!(f, "TO{l:?}"),
            CharSpec::O2nDet(e) => write!(f, "det^{e}|O2n"),
            CharSpec::Gl2nDet(k) => write!(f, "det^{k}|GL2n"),
        }
    }
}
