//! Concrete matrix realizations of `gl(2n)`, `so(2n)` and the subalgebras
//! and tori used throughout.
//!
//! Two coordinate systems coexist. *Standard* coordinates are the usual basis
//! `e_1, …, e_{2n}` of `ℂ^{2n}`; the symmetric form is `xᵀy`, so `O(2n)` is the
//! group of orthogonal matrices and `GL_n × GL_n` is block diagonal.
//! The *frame* coordinates use the eigenbasis of the γ-torus:
//!
//! ```text
//! f_k = e_k + i·e_k̄,   f_k̄ = e_k − i·e_k̄,   k ≤ n,  k̄ = 2n + 1 − k,
//! ```
//!
//! in which the γ-torus is diagonal, `b_{2n}` is upper triangular and every
//! element of the [`GroupElt`] catalog is a signed permutation. Indices in code
//! are 0-based (`bar(k) = 2n − 1 − k`); labels shown to users are 1-based.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{determinant, GaussRat, SparseMat, SparseVec};

/// A small dense square matrix over `ℚ(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    data: Vec<GaussRat>,
}

impl Matrix {
    pub fn zero(dim: usize) -> Self {
        Matrix { dim, data: vec![GaussRat::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zero(dim);
        for k in 0..dim {
            m.set(k, k, GaussRat::one());
        }
        m
    }

    /// The matrix unit `E_ab`.
    pub fn unit(dim: usize, a: usize, b: usize) -> Self {
        let mut m = Matrix::zero(dim);
        m.set(a, b, GaussRat::one());
        m
    }

    pub fn diagonal(entries: &[GaussRat]) -> Self {
        let mut m = Matrix::zero(entries.len());
        for (k, v) in entries.iter().enumerate() {
            m.set(k, k, v.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussRat>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Matrix { dim, data: rows.into_iter().flatten().collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussRat {
        &self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussRat) {
        self.data[r * self.dim + c] = v;
    }

    pub fn rows(&self) -> Vec<Vec<GaussRat>> {
        self.data.chunks(self.dim).map(|c| c.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.dim, o.dim);
        Matrix { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.dim, o.dim);
        Matrix { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, a: &GaussRat) -> Matrix {
        Matrix { dim: self.dim, data: self.data.iter().map(|x| x * a).collect() }
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.dim, o.dim);
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> GaussRat {
        let mut acc = GaussRat::zero();
        for k in 0..self.dim {
            acc += self.get(k, k);
        }
        acc
    }

    pub fn det(&self) -> GaussRat {
        determinant(&self.rows())
    }

    pub fn commutator(&self, o: &Matrix) -> Matrix {
        self.mul(o).sub(&o.mul(self))
    }

    /// Inverse by Gauss–Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.dim;
        let mut aug: Vec<Vec<GaussRat>> = (0..n)
            .map(|i| {
                let mut row: Vec<GaussRat> = (0..n).map(|j| self.get(i, j).clone()).collect();
                row.extend((0..n).map(|j| if i == j { GaussRat::one() } else { GaussRat::zero() }));
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !aug[r][c].is_zero())?;
            aug.swap(c, p);
            let inv = aug[c][c].inv().unwrap();
            for x in aug[c].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot = aug[c].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r != c && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x -= &(y * &f);
                    }
                }
            }
        }
        Some(Matrix { dim: n, data: aug.into_iter().flat_map(|r| r[n..].to_vec()).collect() })
    }

    /// Row-major flattening, used to solve for coordinates in a Lie basis.
    pub fn flatten(&self) -> SparseVec {
        SparseVec::from_dense(&self.data)
    }

    pub fn to_sparse(&self) -> SparseMat {
        SparseMat::from_dense(&self.rows())
    }

    /// Sparse columns; column `k` is the image of the k-th basis vector.
    pub fn columns(&self) -> Vec<Vec<(usize, GaussRat)>> {
        (0..self.dim)
            .map(|c| (0..self.dim).filter_map(|r| { let v = self.get(r, c); (!v.is_zero()).then(|| (r, v.clone())) }).collect())
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .data
            .chunks(self.dim)
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// `2n − 1 − k`: the index paired with `k` by the γ-torus.
pub fn bar(n: usize, k: usize) -> usize {
    2 * n - 1 - k
}

/// Change of basis between standard and frame coordinates for a fixed `n`.
#[derive(Clone, Debug)]
pub struct Frame {
    n: usize,
    p: Matrix,
    p_inv: Matrix,
}

impl Frame {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        let m = 2 * n;
        let mut p = Matrix::zero(m);
        for k in 0..n {
            let kb = bar(n, k);
            // f_k = e_k + i e_k̄
            p.set(k, k, GaussRat::one());
            p.set(kb, k, GaussRat::i());
            // f_k̄ = e_k − i e_k̄
            p.set(k, kb, GaussRat::one());
            p.set(kb, kb, -GaussRat::i());
        }
        let p_inv = p.inverse().expect("frame matrix is invertible");
        Frame { n, p, p_inv }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Matrix whose columns are the frame vectors in standard coordinates.
    pub fn p(&self) -> &Matrix {
        &self.p
    }

    /// Standard-coordinate matrix expressed in frame coordinates: `P⁻¹XP`.
    pub fn to_frame(&self, x_std: &Matrix) -> Matrix {
        self.p_inv.mul(x_std).mul(&self.p)
    }

    /// Frame-coordinate matrix expressed in standard coordinates: `PXP⁻¹`.
    pub fn to_std(&self, x_f: &Matrix) -> Matrix {
        self.p.mul(x_f).mul(&self.p_inv)
    }
}

/// The derivatives `dγ(e_k)` of the torus embedding, in standard coordinates.
///
/// In frame coordinates these are the matrix units `E_kk`.
pub fn gamma_embedding(n: usize) -> Vec<Matrix> {
    let frame = Frame::new(n);
    (0..2 * n).map(|k| frame.to_std(&Matrix::unit(2 * n, k, k))).collect()
}

/// `γ(a_1, …, a_{2n})` in standard coordinates.
pub fn gamma_element(n: usize, a: &[GaussRat]) -> Matrix {
    assert_eq!(a.len(), 2 * n);
    Frame::new(n).to_std(&Matrix::diagonal(a))
}

/// The torus a weight is measured against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Torus {
    /// Diagonal matrices in standard coordinates of `GL(m)`.
    StandardDiag(usize),
    /// The image of γ in `GL(2n)`, indexed by `2n`.
    Gamma(usize),
    /// The maximal torus `T_O = γ⁻¹(O(2n))`, indexed by `n`.
    TO(usize),
    /// Diagonal torus of `GL_n × GL_n`, indexed by `n`.
    HBlock(usize),
}

impl Torus {
    pub fn rank(&self) -> usize {
        match *self {
            Torus::StandardDiag(m) | Torus::Gamma(m) | Torus::TO(m) => m,
            Torus::HBlock(n) => 2 * n,
        }
    }

    pub fn tag(&self) -> String {
        match self {
            Torus::StandardDiag(m) => format!("diag{m}"),
            Torus::Gamma(m) => format!("gamma{m}"),
            Torus::TO(n) => format!("TO{n}"),
            Torus::HBlock(n) => format!("hblock{n}"),
        }
    }
}

/// A rational weight tagged with its torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    torus: Torus,
    entries: Vec<BigRational>,
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl Weight {
    pub fn new(torus: Torus, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != torus.rank() {
            return Err(Error::DimensionMismatch { expected: torus.rank(), got: entries.len() });
        }
        Ok(Weight { torus, entries })
    }

    pub fn from_ints(torus: Torus, entries: &[i64]) -> Result<Self> {
        Weight::new(torus, entries.iter().map(|x| rat(*x, 1)).collect())
    }

    /// Builds from doubled entries, so `[3, 1]` is `(3/2, 1/2)`.
    pub fn from_halves(torus: Torus, doubled: &[i64]) -> Result<Self> {
        Weight::new(torus, doubled.iter().map(|x| rat(*x, 2)).collect())
    }

    pub fn torus(&self) -> Torus {
        self.torus
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    fn check_same(&self, o: &Weight) -> Result<()> {
        if self.torus != o.torus {
            return Err(Error::TorusMismatch(self.torus.tag(), o.torus.tag()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Weight) -> Result<Weight> {
        self.check_same(o)?;
        Ok(Weight { torus: self.torus, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, o: &Weight) -> Result<Weight> {
        self.check_same(o)?;
        Ok(Weight { torus: self.torus, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect() })
    }

    /// Adds the same rational to every entry.
    pub fn shift(&self, c: &BigRational) -> Weight {
        Weight { torus: self.torus, entries: self.entries.iter().map(|a| a + c).collect() }
    }

    /// `true` when `self − o` is a non-negative combination of the simple
    /// roots `e_i − e_{i+1}` of a general linear torus.
    pub fn dominates(&self, o: &Weight) -> Result<bool> {
        self.check_same(o)?;
        let d: Vec<BigRational> = self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect();
        let mut partial = BigRational::zero();
        for x in &d[..d.len().saturating_sub(1)] {
            partial += x;
            if partial.is_negative() || !partial.is_integer() {
                return Ok(false);
            }
        }
        Ok((partial + d.last().cloned().unwrap_or_default()).is_zero())
    }

    /// Integer entries, when every entry is an integer.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.entries.iter().map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None }).collect()
    }

    pub fn is_dominant_gl(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|x| if x.is_integer() { x.numer().to_string() } else { format!("{}/{}", x.numer(), x.denom()) })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses comma-separated rationals such as `3/2,1/2,-1/2,-3/2`.
pub fn parse_rationals(s: &str) -> Result<Vec<BigRational>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let bad = || Error::Parse(format!("bad rational '{t}'"));
            match t.split_once('/') {
                Some((a, b)) => {
                    let a: BigInt = a.trim().parse().map_err(|_| bad())?;
                    let b: BigInt = b.trim().parse().map_err(|_| bad())?;
                    if b.is_zero() {
                        return Err(bad());
                    }
                    Ok(BigRational::new(a, b))
                }
                None => Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?)),
            }
        })
        .collect()
}

impl Weight {
    pub fn parse(torus: Torus, s: &str) -> Result<Weight> {
        Weight::new(torus, parse_rationals(s)?)
    }
}

/// `ρ_{2n} = ((2n−1)/2, (2n−3)/2, …, (1−2n)/2)` on the γ-torus.
pub fn rho(n: usize) -> Weight {
    let m = 2 * n as i64;
    let doubled: Vec<i64> = (0..m).map(|j| m - 1 - 2 * j).collect();
    Weight::from_halves(Torus::Gamma(2 * n), &doubled).unwrap()
}

/// Which algebra a positive system belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    Gl,
    So,
}

/// A root with a matching root vector.
#[derive(Clone, Debug)]
pub struct Root {
    /// On the γ-torus for `gl(2n)`, on `T_O` for `so(2n)`.
    pub weight: Vec<i64>,
    pub label: String,
    /// Root vector in frame coordinates.
    pub vector: Matrix,
}

/// T_O-weight of the frame vector `f_k`.
pub fn frame_to_weight(n: usize, k: usize) -> Vec<i64> {
    let mut w = vec![0; n];
    if k < n {
        w[k] = 1;
    } else {
        w[bar(n, k)] = -1;
    }
    w
}

/// Positive roots with root vectors (frame coordinates).
///
/// `gl(2n)`: `e_i − e_j`, `i < j`, root vector `E_ij`.
/// `so(2n)`: `e_i − e_j` with `E_ij − E_j̄ī`, and `e_i + e_j` with
/// `E_{i j̄} − E_{j ī}`, for `i < j ≤ n`.
pub fn positive_system(algebra: Algebra, n: usize) -> Vec<Root> {
    let m = 2 * n;
    let mut out = Vec::new();
    match algebra {
        Algebra::Gl => {
            for i in 0..m {
                for j in i + 1..m {
                    let mut w = vec![0; m];
                    w[i] = 1;
                    w[j] = -1;
                    out.push(Root { weight: w, label: format!("e{}-e{}", i + 1, j + 1), vector: Matrix::unit(m, i, j) });
                }
            }
        }
        Algebra::So => {
            for i in 0..n {
                for j in i + 1..n {
                    let mut w = vec![0; n];
                    w[i] = 1;
                    w[j] = -1;
                    let v = Matrix::unit(m, i, j).sub(&Matrix::unit(m, bar(n, j), bar(n, i)));
                    out.push(Root { weight: w, label: format!("e{}-e{}", i + 1, j + 1), vector: v });
                    let mut w = vec![0; n];
                    w[i] = 1;
                    w[j] = 1;
                    let v = Matrix::unit(m, i, bar(n, j)).sub(&Matrix::unit(m, j, bar(n, i)));
                    out.push(Root { weight: w, label: format!("e{}+e{}", i + 1, j + 1), vector: v });
                }
            }
        }
    }
    out
}

/// Negative root vectors: transposes of the positive ones (frame coordinates).
pub fn negative_system(algebra: Algebra, n: usize) -> Vec<Root> {
    positive_system(algebra, n)
        .into_iter()
        .map(|r| Root {
            weight: r.weight.iter().map(|x| -x).collect(),
            label: format!("-({})", r.label),
            vector: r.vector.transpose(),
        })
        .collect()
}

/// Distinguished elements of `O(2n) ⊂ GL(2n)` acting on every module.
///
/// `Refl(k)` negates the standard coordinate `k` (1-based); `Sigma` is
/// `diag(I_n, −I_n)`. All are involutions and signed permutations in frame
/// coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupElt {
    Sigma,
    Refl(usize),
}

impl GroupElt {
    pub fn label(&self) -> String {
        match self {
            GroupElt::Sigma => "sigma".into(),
            GroupElt::Refl(k) => format!("refl{k}"),
        }
    }

    pub fn std_matrix(&self, n: usize) -> Matrix {
        let m = 2 * n;
        let mut d = vec![GaussRat::one(); m];
        match *self {
            GroupElt::Sigma => {
                for x in d.iter_mut().skip(n) {
                    *x = GaussRat::from_int(-1);
                }
            }
            GroupElt::Refl(k) => {
                assert!(k >= 1 && k <= m, "reflection index out of range");
                d[k - 1] = GaussRat::from_int(-1);
            }
        }
        Matrix::diagonal(&d)
    }

    pub fn frame_matrix(&self, n: usize) -> Matrix {
        Frame::new(n).to_frame(&self.std_matrix(n))
    }

    pub fn det(&self, n: usize) -> i64 {
        match self {
            GroupElt::Sigma => if n.is_multiple_of(2) { 1 } else { -1 },
            GroupElt::Refl(_) => -1,
        }
    }

    /// Determinants of the two diagonal `n × n` blocks.
    pub fn block_dets(&self, n: usize) -> (i64, i64) {
        match *self {
            GroupElt::Sigma => (1, if n.is_multiple_of(2) { 1 } else { -1 }),
            GroupElt::Refl(k) if k <= n => (-1, 1),
            GroupElt::Refl(_) => (1, -1),
        }
    }

    pub fn inverse(&self) -> GroupElt {
        *self
    }
}

/// The full set of catalog elements carried by every module of rank `n`.
pub fn catalog(n: usize) -> Vec<GroupElt> {
    let mut v = vec![GroupElt::Sigma, GroupElt::Refl(1), GroupElt::Refl(n + 1), GroupElt::Refl(2 * n)];
    v.sort();
    v.dedup();
    v
}

/// The reflection used as the representative of `O(2n) ∖ SO(2n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Delta {
    /// `diag(1, …, 1, −1)`.
    #[default]
    Last,
    /// `diag(−1, 1, …, 1)`.
    First,
    /// Negates coordinate `n + 1`; it normalizes `b_o`.
    Mid,
}

impl Delta {
    pub fn elt(&self, n: usize) -> GroupElt {
        match self {
            Delta::Last => GroupElt::Refl(2 * n),
            Delta::First => GroupElt::Refl(1),
            Delta::Mid => GroupElt::Refl(n + 1),
        }
    }
}

impl FromStr for Delta {
    type Err = Error;
    fn from_str(s: &str) -> Result<Delta> {
        match s {
            "last" => Ok(Delta::Last),
            "first" => Ok(Delta::First),
            "mid" => Ok(Delta::Mid),
            _ => Err(Error::Parse(format!("unknown reflection '{s}' (expected last, first or mid)"))),
        }
    }
}

/// The groups modules and characters can be attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    Gl2n,
    O2n,
    GlnGln,
    OnOn,
    StandardDiag,
    TO,
    /// The split torus `{diag(a_1, …, a_n, a_n, …, a_1)}` of `GL_n × GL_n`.
    Hprime,
}

impl GroupKind {
    pub fn name(&self) -> &'static str {
        match self {
            GroupKind::Gl2n => "GL2n",
            GroupKind::O2n => "O2n",
            GroupKind::GlnGln => "GLnxGLn",
            GroupKind::OnOn => "OnxOn",
            GroupKind::StandardDiag => "StandardDiag",
            GroupKind::TO => "TO",
            GroupKind::Hprime => "Hprime",
        }
    }

    /// Component representatives imposed as constraints for this group.
    pub fn elements(&self, n: usize, delta: Delta) -> Vec<GroupElt> {
        match self {
            GroupKind::O2n => vec![delta.elt(n)],
            GroupKind::OnOn => vec![GroupElt::Refl(1), GroupElt::Refl(n + 1)],
            _ => Vec::new(),
        }
    }

    /// The torus whose weights grade modules of this kind, if any.
    pub fn grading_torus(&self, n: usize) -> Option<Torus> {
        match self {
            GroupKind::Gl2n => Some(Torus::Gamma(2 * n)),
            GroupKind::O2n | GroupKind::TO => Some(Torus::TO(n)),
            _ => None,
        }
    }

    /// `true` when `self` is a subgroup of `other` (as used by restriction).
    pub fn is_subgroup_of(&self, other: GroupKind) -> bool {
        use GroupKind::*;
        match other {
            Gl2n => true,
            O2n => matches!(self, O2n | OnOn | TO),
            GlnGln => matches!(self, GlnGln | OnOn | StandardDiag | Hprime),
            OnOn => matches!(self, OnOn),
            StandardDiag => matches!(self, StandardDiag | Hprime),
            TO => matches!(self, TO),
            Hprime => matches!(self, Hprime),
        }
    }
}

impl FromStr for GroupKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<GroupKind> {
        use GroupKind::*;
        [Gl2n, O2n, GlnGln, OnOn, StandardDiag, TO, Hprime]
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown group '{s}'")))
    }
}

/// A named Lie-algebra generator, stored in both coordinate systems.
#[derive(Clone, Debug)]
pub struct LieGen {
    pub label: String,
    pub frame: Matrix,
    pub std: Matrix,
}

/// Basis of the Lie algebra of `kind` at rank `n`.
pub fn lie_basis(kind: GroupKind, n: usize) -> Vec<LieGen> {
    let m = 2 * n;
    let frame = Frame::new(n);
    let from_frame = |label: String, f: Matrix| LieGen { std: frame.to_std(&f), frame: f, label };
    let from_std = |label: String, s: Matrix| LieGen { frame: frame.to_frame(&s), std: s, label };
    let mut out = Vec::new();
    match kind {
        GroupKind::Gl2n => {
            for a in 0..m {
                for b in 0..m {
                    out.push(from_frame(format!("E[{},{}]", a + 1, b + 1), Matrix::unit(m, a, b)));
                }
            }
        }
        GroupKind::O2n => {
            for a in 0..m {
                for b in 0..m {
                    if a == bar(n, b) {
                        continue;
                    }
                    let partner = (bar(n, b), bar(n, a));
                    if (a, b) > partner {
                        continue;
                    }
                    let x = Matrix::unit(m, a, b).sub(&Matrix::unit(m, partner.0, partner.1));
                    out.push(from_frame(format!("A[{},{}]", a + 1, b + 1), x));
                }
            }
        }
        GroupKind::GlnGln => {
            for block in [0..n, n..m] {
                for a in block.clone() {
                    for b in block.clone() {
                        if a != b {
                            out.push(from_std(format!("E[{},{}]", a + 1, b + 1), Matrix::unit(m, a, b)));
                        }
                    }
                }
            }
            for k in 0..n {
                let plus = Matrix::unit(m, k, k).add(&Matrix::unit(m, bar(n, k), bar(n, k)));
                out.push(from_std(format!("H+[{}]", k + 1), plus));
            }
            for k in 0..n {
                let minus = Matrix::unit(m, k, k).sub(&Matrix::unit(m, bar(n, k), bar(n, k)));
                out.push(from_std(format!("H-[{}]", k + 1), minus));
            }
        }
        GroupKind::OnOn => {
            for block in [0..n, n..m] {
                for a in block.clone() {
                    for b in block.clone() {
                        if a < b {
                            let x = Matrix::unit(m, a, b).sub(&Matrix::unit(m, b, a));
                            out.push(from_std(format!("F[{},{}]", a + 1, b + 1), x));
                        }
                    }
                }
            }
        }
        GroupKind::StandardDiag => {
            for k in 0..m {
                out.push(from_std(format!("D[{}]", k + 1), Matrix::unit(m, k, k)));
            }
        }
        GroupKind::TO => {
            for k in 0..n {
                let x = Matrix::unit(m, k, k).sub(&Matrix::unit(m, bar(n, k), bar(n, k)));
                out.push(from_frame(format!("H[{}]", k + 1), x));
            }
        }
        GroupKind::Hprime => {
            for k in 0..n {
                let x = Matrix::unit(m, k, k).add(&Matrix::unit(m, bar(n, k), bar(n, k)));
                out.push(from_std(format!("H+[{}]", k + 1), x));
            }
        }
    }
    out
}

/// The T_O-weight of a γ-torus weight: `(a_k − a_k̄)_{k ≤ n}`.
pub fn gamma_to_to(n: usize, a: &[i64]) -> Vec<i64> {
    (0..n).map(|k| a[k] - a[bar(n, k)]).collect()
}

/// Involutions of `gl(2n)` in standard coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    /// Conjugation by `diag(I_n, −I_n)`.
    Sigma,
    /// `X ↦ −Xᵀ`, the differential of inverse transpose.
    Theta,
}

impl Involution {
    pub fn apply(&self, n: usize, x_std: &Matrix) -> Matrix {
        match self {
            Involution::Sigma => {
                let s = GroupElt::Sigma.std_matrix(n);
                s.mul(x_std).mul(&s)
            }
            Involution::Theta => x_std.transpose().scale(&GaussRat::from_int(-1)),
        }
    }
}

/// Squared Vogan-type size `Σ_j (l_j + 2n − 2j)²` of an orthogonal label.
pub fn size_squared(parts_doubled: &[i64]) -> BigRational {
    let n = parts_doubled.len() as i64;
    let mut acc = BigRational::zero();
    for (j, l2) in parts_doubled.iter().enumerate() {
        let t = rat(*l2 + 2 * (2 * n - 2 * (j as i64 + 1)), 2);
        acc += &t * &t;
    }
    acc
}

/// Is the rational a (possibly negative) half-integer?
pub fn is_half_integer(x: &BigRational) -> bool {
    (x * rat(2, 1)).is_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> GaussRat {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_n1_matches_closed_form() {
        let g = gamma_embedding(1);
        let expected = Matrix::from_rows(vec![vec![q("1/2"), q("-1/2i")], vec![q("1/2i"), q("1/2")]]);
        assert_eq!(g[0], expected);
        assert_eq!(g[0].add(&g[1]), Matrix::identity(2));
    }

    #[test]
    fn gamma_n2_matches_differentiated_entries() {
        // d/da_k of the displayed matrix at the identity
        let n = 2;
        let g = gamma_embedding(n);
        for k in 0..4 {
            let kb = bar(n, k);
            let lo = k.min(kb);
            let hi = k.max(kb);
            let sign = if k < n { GaussRat::one() } else { GaussRat::from_int(-1) };
            let mut m = Matrix::zero(4);
            m.set(lo, lo, q("1/2"));
            m.set(hi, hi, q("1/2"));
            // (a_lo − a_hi)/(2i) at (lo, hi), (a_hi − a_lo)/(2i) at (hi, lo)
            let half_over_i = q("-1/2i");
            m.set(lo, hi, &sign * &half_over_i);
            m.set(hi, lo, -(&sign * &half_over_i));
            assert_eq!(g[k], m, "k = {k}");
            assert_eq!(g[k].trace(), GaussRat::one());
        }
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(1).to_string(), "1/2,-1/2");
        assert_eq!(rho(2).to_string(), "3/2,1/2,-1/2,-3/2");
    }

    #[test]
    fn positive_systems_are_root_vectors() {
        for n in 1..=3 {
            let gl = positive_system(Algebra::Gl, n);
            assert_eq!(gl.len(), n * (2 * n - 1));
            for r in &gl {
                for k in 0..2 * n {
                    let h = Matrix::unit(2 * n, k, k);
                    assert_eq!(h.commutator(&r.vector), r.vector.scale(&GaussRat::from_int(r.weight[k])));
                }
            }
            let so = positive_system(Algebra::So, n);
            assert_eq!(so.len(), n * (n - 1));
            for r in &so {
                for k in 0..n {
                    let h = Matrix::unit(2 * n, k, k).sub(&Matrix::unit(2 * n, bar(n, k), bar(n, k)));
                    assert_eq!(h.commutator(&r.vector), r.vector.scale(&GaussRat::from_int(r.weight[k])));
                }
            }
        }
    }

    #[test]
    fn so_basis_is_orthogonal_in_std_coordinates() {
        for n in 1..=3 {
            let basis = lie_basis(GroupKind::O2n, n);
            assert_eq!(basis.len(), n * (2 * n - 1));
            for g in &basis {
                assert!(g.std.add(&g.std.transpose()).is_zero(), "{}", g.label);
            }
        }
    }

    #[test]
    fn catalog_elements_are_signed_permutations_in_frame() {
        for n in 1..=3 {
            for e in catalog(n) {
                let f = e.frame_matrix(n);
                for col in f.columns() {
                    assert_eq!(col.len(), 1);
                }
                assert_eq!(f.mul(&f), Matrix::identity(2 * n));
                assert_eq!(f.det(), GaussRat::from_int(e.det(n)));
            }
        }
    }

    #[test]
    fn sigma_maps_positive_roots_to_negative_roots() {
        for n in 1..=3 {
            let frame = Frame::new(n);
            let neg = negative_system(Algebra::Gl, n);
            for r in positive_system(Algebra::Gl, n) {
                let img = frame.to_frame(&Involution::Sigma.apply(n, &frame.to_std(&r.vector)));
                let flat = img.flatten();
                assert_eq!(flat.nnz(), 1);
                let (idx, _) = flat.leading().unwrap();
                let (a, b) = (idx / (2 * n), idx % (2 * n));
                assert!(a > b, "image must be lower triangular");
                assert!(neg.iter().any(|s| s.vector.get(a, b).is_one()));
            }
        }
    }

    #[test]
    fn involutions_square_to_identity() {
        let n = 2;
        for g in lie_basis(GroupKind::Gl2n, n) {
            for inv in [Involution::Sigma, Involution::Theta] {
                assert_eq!(inv.apply(n, &inv.apply(n, &g.std)), g.std);
            }
        }
    }

    #[test]
    fn weight_torus_tags_must_match() {
        let a = Weight::from_ints(Torus::Gamma(2), &[1, -1]).unwrap();
        let b = Weight::from_ints(Torus::TO(2), &[1, -1]).unwrap();
        assert!(a.add(&b).is_err());
        assert!(a.dominates(&Weight::from_ints(Torus::Gamma(2), &[0, 0]).unwrap()).unwrap());
        assert!(Weight::parse(Torus::Gamma(4), "3/2,1/2,-1/2,-3/2").unwrap() == rho(2));
    }

    #[test]
    fn size_squared_examples() {
        assert_eq!(size_squared(&[4]), rat(4, 1));
        assert_eq!(size_squared(&[8, 4]), rat(40, 1));
        assert_eq!(size_squared(&[0, 0]), rat(4, 1));
    }
}
