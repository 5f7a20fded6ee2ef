//! The [`RepModule`] type: an explicit finite-dimensional module.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::label::IrrepLabel;
use crate::lie::{catalog, lie_basis, Delta, GroupElt, GroupKind, LieGen, Matrix, Torus};
use crate::linalg::{Echelon, GaussRat, SparseMat, SparseVec};

/// Per-basis-vector weights for one torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub torus: Torus,
    pub weights: Vec<Vec<i64>>,
}

impl Grading {
    /// Basis indices grouped by weight.
    pub fn spaces(&self) -> BTreeMap<Vec<i64>, Vec<usize>> {
        let mut out: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (k, w) in self.weights.iter().enumerate() {
            out.entry(w.clone()).or_default().push(k);
        }
        out
    }
}

/// Solves for coordinates of a matrix in the span of a list of generators.
#[derive(Clone, Debug)]
pub(crate) struct GenSolver {
    echelon: Echelon,
    count: usize,
}

impl GenSolver {
    pub(crate) fn new(n: usize, gens: &[LieGen]) -> Self {
        let mut echelon = Echelon::with_tracking(4 * n * n);
        for g in gens {
            let independent = echelon.insert(&g.frame.flatten());
            assert!(independent, "generator {} is linearly dependent", g.label);
        }
        GenSolver { echelon, count: gens.len() }
    }

    pub(crate) fn coordinates(&self, x_frame: &Matrix) -> Option<SparseVec> {
        let c = self.echelon.express(&x_frame.flatten())?;
        debug_assert_eq!(c.len(), self.count);
        Some(c)
    }
}

/// A concrete module: sparse action matrices for a basis of the Lie algebra of
/// its group and for every catalog element of `O(2n)`.
///
/// Matrices act on column vectors: entry `(i, j)` of `ρ(X)` is the coefficient
/// of basis vector `i` in `X·b_j`.
#[derive(Clone, Debug)]
pub struct RepModule {
    pub(crate) name: String,
    pub(crate) n: usize,
    pub(crate) kind: GroupKind,
    pub(crate) dim: usize,
    pub(crate) gens: Arc<Vec<LieGen>>,
    pub(crate) solver: Arc<GenSolver>,
    pub(crate) lie: Vec<SparseMat>,
    pub(crate) elements: BTreeMap<GroupElt, SparseMat>,
    pub(crate) det_twist: i64,
    pub(crate) grading: Option<Grading>,
    pub(crate) irreducible: Option<IrrepLabel>,
    pub(crate) ambient: String,
}

impl RepModule {
    /// Assembles a module from action matrices for the standard Lie basis of
    /// `kind` and all catalog elements. Shapes are validated.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        name: String,
        n: usize,
        kind: GroupKind,
        dim: usize,
        lie: Vec<SparseMat>,
        elements: BTreeMap<GroupElt, SparseMat>,
        grading: Option<Grading>,
        ambient: String,
    ) -> Result<Self> {
        let gens = lie_basis(kind, n);
        RepModule::assemble_with(name, n, kind, dim, Arc::new(gens), lie, elements, grading, ambient)
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble_with(
        name: String,
        n: usize,
        kind: GroupKind,
        dim: usize,
        gens: Arc<Vec<LieGen>>,
        lie: Vec<SparseMat>,
        elements: BTreeMap<GroupElt, SparseMat>,
        grading: Option<Grading>,
        ambient: String,
    ) -> Result<Self> {
        if lie.len() != gens.len() {
            return Err(Error::DimensionMismatch { expected: gens.len(), got: lie.len() });
        }
        for m in lie.iter().chain(elements.values()) {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: m.nrows() });
            }
        }
        for e in catalog(n) {
            if !elements.contains_key(&e) {
                return Err(Error::ActionMismatch(format!("missing action of {}", e.label())));
            }
        }
        if let Some(g) = &grading {
            if g.weights.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: g.weights.len() });
            }
        }
        let solver = Arc::new(GenSolver::new(n, &gens));
        Ok(RepModule {
            name,
            n,
            kind,
            dim,
            gens,
            solver,
            lie,
            elements,
            det_twist: 0,
            grading,
            irreducible: None,
            ambient,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn det_twist(&self) -> i64 {
        self.det_twist
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    pub fn irreducible(&self) -> Option<&IrrepLabel> {
        self.irreducible.as_ref()
    }

    pub fn ambient(&self) -> &str {
        &self.ambient
    }

    pub fn generators(&self) -> &[LieGen] {
        &self.gens
    }

    pub fn lie_actions(&self) -> &[SparseMat] {
        &self.lie
    }

    pub fn elements(&self) -> &BTreeMap<GroupElt, SparseMat> {
        &self.elements
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub(crate) fn with_irreducible(mut self, label: Option<IrrepLabel>) -> Self {
        self.irreducible = label;
        self
    }

    /// Action of a catalog element.
    pub fn element(&self, g: GroupElt) -> &SparseMat {
        &self.elements[&g]
    }

    /// Action matrix of a generator by label.
    pub fn lie_action(&self, label: &str) -> Option<&SparseMat> {
        self.gens.iter().position(|g| g.label == label).map(|k| &self.lie[k])
    }

    /// Action of an arbitrary element of the Lie algebra, given in frame
    /// coordinates.
    pub fn act(&self, x_frame: &Matrix) -> Result<SparseMat> {
        let c = self
            .solver
            .coordinates(x_frame)
            .ok_or_else(|| Error::ActionMismatch(format!("matrix is not in the Lie algebra of {}", self.kind.name())))?;
        let mut acc = SparseMat::zero(self.dim, self.dim);
        for (k, a) in c.iter() {
            acc = acc.add(&self.lie[k].scale(a));
        }
        Ok(acc)
    }

    /// Component representatives that constrain equivariant maps.
    pub fn constraint_elements(&self, delta: Delta) -> Vec<GroupElt> {
        self.kind.elements(self.n, delta)
    }

    /// Basis indices grouped by weight, when a grading is present.
    pub fn weight_spaces(&self) -> Option<BTreeMap<Vec<i64>, Vec<usize>>> {
        self.grading.as_ref().map(|g| g.spaces())
    }

    /// Checks `ρ([X,Y]) = [ρ(X), ρ(Y)]` on all pairs of generators whose
    /// bracket lies in the algebra, up to `limit` pairs.
    pub fn check_brackets(&self, limit: usize) -> Result<()> {
        let mut checked = 0;
        for (i, x) in self.gens.iter().enumerate() {
            for (j, y) in self.gens.iter().enumerate().skip(i + 1) {
                if checked >= limit {
                    return Ok(());
                }
                let br = x.frame.commutator(&y.frame);
                let lhs = self.act(&br)?;
                let rhs = self.lie[i].commutator(&self.lie[j]);
                if lhs != rhs {
                    return Err(Error::Inconsistent(format!("bracket of {} and {} not respected in {}", x.label, y.label, self.name)));
                }
                checked += 1;
            }
        }
        Ok(())
    }

    /// Checks `ρ(g)ρ(X)ρ(g)⁻¹ = ρ(Ad_g X)` for every catalog element whose
    /// adjoint action preserves the Lie algebra, and `ρ(g)² = 1`.
    pub fn check_group_compatibility(&self) -> Result<()> {
        for (g, rg) in &self.elements {
            if rg.mul(rg) != SparseMat::identity(self.dim) {
                return Err(Error::Inconsistent(format!("{} does not act as an involution on {}", g.label(), self.name)));
            }
            let gf = g.frame_matrix(self.n);
            for (k, x) in self.gens.iter().enumerate() {
                let ad = gf.mul(&x.frame).mul(&gf);
                let Ok(expected) = self.act(&ad) else {
                    // the element does not normalize this subgroup
                    continue;
                };
                if rg.mul(&self.lie[k]).mul(rg) != expected {
                    return Err(Error::Inconsistent(format!("{} does not normalize {} on {}", g.label(), x.label, self.name)));
                }
            }
        }
        Ok(())
    }

    /// Checks that every basis vector is a weight vector for the grading torus.
    pub fn check_grading(&self) -> Result<()> {
        let Some(grading) = &self.grading else {
            return Ok(());
        };
        let torus_gens = torus_generators(self.n, grading.torus)?;
        for (t, h) in torus_gens.iter().enumerate() {
            let m = self.act(h)?;
            for (j, w) in grading.weights.iter().enumerate() {
                let col_expected = SparseVec::from_pairs(self.dim, [(j, GaussRat::from_int(w[t]))]);
                let col = m.transpose().row(j).clone();
                if col != col_expected {
                    return Err(Error::Inconsistent(format!("basis vector {j} of {} is not a weight vector", self.name)));
                }
            }
        }
        Ok(())
    }
}

/// Frame-coordinate generators of a torus, in the order of weight entries.
pub fn torus_generators(n: usize, torus: Torus) -> Result<Vec<Matrix>> {
    let m = 2 * n;
    match torus {
        Torus::Gamma(k) if k == m => Ok((0..m).map(|a| Matrix::unit(m, a, a)).collect()),
        Torus::TO(k) if k == n => Ok((0..n)
            .map(|a| Matrix::unit(m, a, a).sub(&Matrix::unit(m, crate::lie::bar(n, a), crate::lie::bar(n, a))))
            .collect()),
        other => Err(Error::TorusMismatch(other.tag(), format!("rank {n}"))),
    }
}
