//! The symmetric traceless model `s_{2n}` of `gl(2n)/(o(2n) ⊕ ℂ)`, its trace
//! form, and the distinguished subspaces `h/c` and `b/b_k`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lie::{bar, catalog, frame_to_weight, lie_basis, Frame, GroupKind, Matrix, Torus};
use crate::linalg::{determinant, Echelon, GaussRat, SparseMat, SparseVec};

use super::module::{Grading, RepModule};

/// `s_{2n}` together with its basis in standard coordinates.
#[derive(Clone, Debug)]
pub struct SymModel {
    n: usize,
    basis: Vec<Matrix>,
    coords: Echelon,
    module: RepModule,
}

fn sym_pair(frame: &Frame, a: usize, b: usize) -> Matrix {
    // (f_a f_bᵀ + f_b f_aᵀ)/2 in standard coordinates
    let p = frame.p();
    let m = p.dim();
    let mut s = Matrix::zero(m);
    let half = GaussRat::from_ratio(1, 2);
    for r in 0..m {
        for c in 0..m {
            let v = &(&(p.get(r, a) * p.get(c, b)) + &(p.get(r, b) * p.get(c, a))) * &half;
            s.set(r, c, v);
        }
    }
    s
}

/// Projection `X ↦ (X + Xᵀ)/2 − tr(X)/(2n)·I` of `gl(2n)` onto `s_{2n}`
/// along `o(2n) ⊕ ℂ` (standard coordinates).
pub fn project_to_s(x_std: &Matrix) -> Matrix {
    let m = x_std.dim();
    let sym = x_std.add(&x_std.transpose()).scale(&GaussRat::from_ratio(1, 2));
    let t = &x_std.trace() * &GaussRat::from_ratio(1, m as i64);
    sym.sub(&Matrix::identity(m).scale(&t))
}

/// `tr(xy)`.
pub fn trace_pairing(x: &Matrix, y: &Matrix) -> GaussRat {
    x.mul(y).trace()
}

/// The pairing `⟨a_1 ∧ … ∧ a_p, b_1 ∧ … ∧ b_p⟩ = det(tr(a_i b_j))`.
pub fn wedge_pairing(a: &[Matrix], b: &[Matrix]) -> Result<GaussRat> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), got: b.len() });
    }
    let gram: Vec<Vec<GaussRat>> = a.iter().map(|x| b.iter().map(|y| trace_pairing(x, y)).collect()).collect();
    Ok(determinant(&gram))
}

impl SymModel {
    /// Builds `s_{2n}` as an `O(2n)`-module.
    ///
    /// Basis: `S_ab = (f_a f_bᵀ + f_b f_aᵀ)/2` for `a ≤ b` with `b ≠ ā`
    /// (T_O-weight `wt(f_a) + wt(f_b)`), followed by the zero-weight vectors
    /// `S_{kk̄} − S_{k+1,(k+1)¯}`.
    pub fn new(n: usize) -> Result<SymModel> {
        let m = 2 * n;
        let frame = Frame::new(n);
        let mut basis = Vec::new();
        let mut weights = Vec::new();
        for a in 0..m {
            for b in a..m {
                if b == bar(n, a) {
                    continue;
                }
                basis.push(sym_pair(&frame, a, b));
                let (wa, wb) = (frame_to_weight(n, a), frame_to_weight(n, b));
                weights.push(wa.iter().zip(&wb).map(|(x, y)| x + y).collect::<Vec<i64>>());
            }
        }
        for k in 0..n.saturating_sub(1) {
            basis.push(sym_pair(&frame, k, bar(n, k)).sub(&sym_pair(&frame, k + 1, bar(n, k + 1))));
            weights.push(vec![0; n]);
        }
        let mut coords = Echelon::with_tracking(m * m);
        for s in &basis {
            if !coords.insert(&s.flatten()) {
                return Err(Error::Inconsistent("symmetric basis is dependent".into()));
            }
        }
        let dim = basis.len();
        let express = |x: &Matrix| -> Result<SparseVec> {
            coords.express(&x.flatten()).ok_or(Error::NotInSpan)
        };
        let gens = lie_basis(GroupKind::O2n, n);
        let mut lie = Vec::with_capacity(gens.len());
        for g in &gens {
            let cols: Vec<SparseVec> = basis.iter().map(|s| express(&g.std.commutator(s))).collect::<Result<_>>()?;
            lie.push(SparseMat::from_columns(dim, &cols));
        }
        let mut elements = BTreeMap::new();
        for e in catalog(n) {
            let g = e.std_matrix(n);
            let cols: Vec<SparseVec> =
                basis.iter().map(|s| express(&g.mul(s).mul(&g.transpose()))).collect::<Result<_>>()?;
            elements.insert(e, SparseMat::from_columns(dim, &cols));
        }
        let module = RepModule::assemble(
            format!("s{m}"),
            n,
            GroupKind::O2n,
            dim,
            lie,
            elements,
            Some(Grading { torus: Torus::TO(n), weights }),
            format!("symmetric traceless {m}x{m} matrices"),
        )?;
        Ok(SymModel { n, basis, coords, module })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn module(&self) -> &RepModule {
        &self.module
    }

    /// Basis matrices in standard coordinates.
    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// Coordinates of a symmetric traceless matrix.
    pub fn coordinates(&self, x_std: &Matrix) -> Result<SparseVec> {
        self.coords
            .express(&x_std.flatten())
            .ok_or(Error::NotInSpan)
    }

    /// The matrix with the given coordinates.
    pub fn matrix(&self, v: &SparseVec) -> Matrix {
        let mut acc = Matrix::zero(2 * self.n);
        for (k, c) in v.iter() {
            acc = acc.add(&self.basis[k].scale(c));
        }
        acc
    }

    fn subspace(&self, spanning: impl IntoIterator<Item = Matrix>) -> Result<Vec<SparseVec>> {
        let mut e = Echelon::new(self.module.dim());
        for x in spanning {
            e.insert(&self.coordinates(&project_to_s(&x))?);
        }
        Ok(e.rows().to_vec())
    }

    /// `h_{2n}/c_{2n}`: the block-diagonal part of `s_{2n}` (image of `j_{2n}`),
    /// in coordinates.
    pub fn h_mod_c(&self) -> Result<Vec<SparseVec>> {
        let (n, m) = (self.n, 2 * self.n);
        let mut spanning = Vec::new();
        for block in [0..n, n..m] {
            for a in block.clone() {
                for b in block.clone() {
                    if a <= b {
                        spanning.push(Matrix::unit(m, a, b));
                    }
                }
            }
        }
        self.subspace(spanning)
    }

    /// `b_{2n}/b_k`: the image of the upper-triangular (frame) Borel in `s_{2n}`.
    pub fn b_mod_bk(&self) -> Result<Vec<SparseVec>> {
        let m = 2 * self.n;
        let frame = Frame::new(self.n);
        let mut spanning = Vec::new();
        for a in 0..m {
            for b in a..m {
                spanning.push(frame.to_std(&Matrix::unit(m, a, b)));
            }
        }
        self.subspace(spanning)
    }

    /// `σ_{2n}` applied to a vector of `s_{2n}` (coordinates).
    pub fn sigma(&self, v: &SparseVec) -> SparseVec {
        self.module.element(crate::lie::GroupElt::Sigma).mul_vec(v)
    }
}

/// Coordinates of `u_1 ∧ … ∧ u_p` in the basis of `∧^p` of a `dim`-dimensional
/// module: the coefficient of `v_I` is the `I`-minor of `[u_1 … u_p]`.
pub fn top_wedge(dim: usize, vectors: &[SparseVec]) -> SparseVec {
    let p = vectors.len();
    let dense: Vec<Vec<GaussRat>> = vectors.iter().map(|v| v.to_dense()).collect();
    let mut entries = Vec::new();
    for (k, set) in super::functors::subsets(dim, p).into_iter().enumerate() {
        let minor: Vec<Vec<GaussRat>> = set.iter().map(|&r| (0..p).map(|j| dense[j][r].clone()).collect()).collect();
        let d = determinant(&minor);
        if !d.is_zero() {
            entries.push((k, d));
        }
    }
    SparseVec::from_pairs(binomial(dim, p), entries)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::GroupElt;
    use crate::rep::exterior_power;

    #[test]
    fn dimensions_and_module_axioms() {
        for (n, dim, p0) in [(1, 2, 1), (2, 9, 5)] {
            let s = SymModel::new(n).unwrap();
            assert_eq!(s.module().dim(), dim);
            s.module().check_brackets(usize::MAX).unwrap();
            s.module().check_group_compatibility().unwrap();
            s.module().check_grading().unwrap();
            assert_eq!(s.h_mod_c().unwrap().len(), p0);
            assert_eq!(s.b_mod_bk().unwrap().len(), p0);
        }
    }

    #[test]
    fn trace_form_examples() {
        let d = Matrix::diagonal(&[GaussRat::from_int(1), GaussRat::from_int(-1)]);
        let off = Matrix::unit(2, 0, 1).add(&Matrix::unit(2, 1, 0));
        assert_eq!(trace_pairing(&d, &d), GaussRat::from_int(2));
        assert!(trace_pairing(&d, &off).is_zero());
        assert!(wedge_pairing(std::slice::from_ref(&d), &[d.clone(), off]).is_err());
    }

    #[test]
    fn gram_form_is_nondegenerate() {
        for n in [1, 2] {
            let s = SymModel::new(n).unwrap();
            let gram: Vec<Vec<GaussRat>> =
                s.basis().iter().map(|x| s.basis().iter().map(|y| trace_pairing(x, y)).collect()).collect();
            assert!(!determinant(&gram).is_zero());
        }
    }

    #[test]
    fn h_mod_c_commutes_with_sigma() {
        let s = SymModel::new(2).unwrap();
        for v in s.h_mod_c().unwrap() {
            assert_eq!(s.sigma(&v), v);
        }
    }

    #[test]
    fn top_wedge_matches_exterior_action() {
        // Λ^p of a line spanned by h/c transforms by the determinant of the
        // action restricted to it; checked through σ, which fixes h/c.
        let s = SymModel::new(2).unwrap();
        let h = s.h_mod_c().unwrap();
        let w = top_wedge(9, &h);
        let ext = exterior_power(s.module(), 5).unwrap();
        assert_eq!(ext.element(GroupElt::Sigma).mul_vec(&w), w);
    }
}
