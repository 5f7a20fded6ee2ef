//! Composite constructions: the projection `η_O`, restriction checks for
//! isotypic copies, and the parity decomposition of the triple composition.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::label::OLabel;
use crate::lie::{Algebra, Delta, GroupKind};
use crate::linalg::{GaussRat, SparseMat, SparseVec};
use crate::params::{l_o, p0};
use crate::rep::{
    build_o_irrep, exterior_power, highest_vectors, restrict, submodule, tensor, top_wedge, RepModule, SymModel,
};

use super::{equivariant_homs, functionals, tensor_functional, CharSpec, HomMethod};

/// The `O(2n)`-projection `η_O: ∧^{p₀}(s_{2n}) → τ_{ℓ_O}` and the vectors
/// it is evaluated on.
#[derive(Clone, Debug)]
pub struct EtaO {
    pub sym: SymModel,
    pub wedge: RepModule,
    pub tau: RepModule,
    pub label: OLabel,
    /// Dimension of `Hom_{O(2n)}(∧^{p₀}(s_{2n}), τ_{ℓ_O})`.
    pub hom_dim: usize,
    pub map: SparseMat,
    /// `∧^{p₀}` of the basis of `h/c`.
    pub hc_wedge: SparseVec,
    /// `∧^{p₀}` of the basis of `b/b_k`.
    pub borel_wedge: SparseVec,
}

impl EtaO {
    /// `η_O` applied to the top wedge of `h/c`.
    pub fn image_of_hc(&self) -> SparseVec {
        self.map.mul_vec(&self.hc_wedge)
    }

    /// `true` when the top wedge of `b/b_k` is a `b_o`-highest vector of
    /// weight `ℓ_O`.
    pub fn borel_wedge_is_highest(&self) -> Result<bool> {
        let hv = highest_vectors(&self.wedge, Algebra::So)?;
        let Some(space) = hv.get(&self.label.highest_weight()) else {
            return Ok(false);
        };
        let mut e = crate::linalg::Echelon::new(self.wedge.dim());
        for v in space {
            e.insert(v);
        }
        Ok(!self.borel_wedge.is_zero() && !e.insert(&self.borel_wedge))
    }
}

/// Builds `η_O` for rank `n`. The Hom space must be one-dimensional.
pub fn eta_o(n: usize, delta: Delta) -> Result<EtaO> {
    let sym = SymModel::new(n)?;
    let p = p0(n);
    let wedge = exterior_power(sym.module(), p)?;
    let label = l_o(n);
    let tau = build_o_irrep(&label, delta)?;
    let h = equivariant_homs(&wedge, &tau, &CharSpec::O2nDet(0), delta, HomMethod::Auto)?;
    let hom_dim = h.dim();
    if hom_dim != 1 {
        return Err(Error::Inconsistent(format!("expected one copy of tau{label} in the top wedge, found {hom_dim}")));
    }
    let map = h.maps.into_iter().next().expect("one map");
    let dim = sym.module().dim();
    let hc_wedge = top_wedge(dim, &sym.h_mod_c()?);
    let borel_wedge = top_wedge(dim, &sym.b_mod_bk()?);
    Ok(EtaO { sym, wedge, tau, label, hom_dim, map, hc_wedge, borel_wedge })
}

/// Result of restricting `Hom_{GL_n × GL_n}(F, det^{w₁,w₂})` to an
/// `O(2n)`-stable copy inside `F`.
#[derive(Clone, Debug, Serialize)]
pub struct RestrictionCheck {
    pub ambient_dim: usize,
    pub copy_dim: usize,
    /// `dim Hom_{GL_n × GL_n}(F, det^{w₁,w₂})`.
    pub ambient_functionals: usize,
    /// `dim Hom_{O_n × O_n}(copy, det^{w₁,w₂})`.
    pub copy_functionals: usize,
    /// Some ambient functional is nonzero on the copy.
    pub nonzero_on_copy: bool,
}

/// Compares functionals on a `GL(2n)`-module `m` with those on the
/// `O(2n)`-submodule spanned by `copy`. `chi` must be a `GL_n × GL_n`
/// character; on the copy its restriction to `O_n × O_n` is used.
pub fn restriction_isomorphism_check(
    m: &RepModule,
    copy: &[SparseVec],
    chi: &CharSpec,
    delta: Delta,
) -> Result<RestrictionCheck> {
    let CharSpec::GlnGln(w1, w2) = *chi else {
        return Err(Error::ActionMismatch(format!("{chi} is not a GLn x GLn character")));
    };
    let big = functionals(m, chi, delta)?;
    let on_o = restrict(m, GroupKind::O2n)?;
    let sub = submodule(&on_o, copy, format!("{}-copy", m.name()))?;
    let parity = |w: i64| w.rem_euclid(2) as u8;
    let small = functionals(&sub, &CharSpec::OnOn(parity(w1), parity(w2)), delta)?;
    let nonzero_on_copy = copy.iter().any(|v| big.values_on(v).iter().any(|x| !x.is_zero()));
    Ok(RestrictionCheck {
        ambient_dim: m.dim(),
        copy_dim: copy.len(),
        ambient_functionals: big.dim(),
        copy_functionals: small.dim(),
        nonzero_on_copy,
    })
}

/// One parity component of the triple composition.
#[derive(Clone, Debug, Serialize)]
pub struct NTripleComponent {
    pub eps: u8,
    pub hom_dim: usize,
    /// `(φ_+ ⊗ φ_−)(f(x))` for each basis map `f`.
    pub values: Vec<String>,
    pub nonzero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct NTripleReport {
    pub components: Vec<NTripleComponent>,
}

impl NTripleReport {
    pub fn component(&self, eps: u8) -> &NTripleComponent {
        &self.components[eps as usize]
    }
}

/// For `ε ∈ {0, 1}`, computes `Hom_{O(2n)}(τ_O, det^ε ⊗ τ⁺ ⊗ τ⁻)` and the
/// values `(φ_+ ⊗ φ_−)(f(x))` of its basis maps on `x ∈ τ_O`.
pub fn ntriple_composition(
    tau_o: &RepModule,
    x: &SparseVec,
    tau_plus: &RepModule,
    phi_plus: &SparseVec,
    tau_minus: &RepModule,
    phi_minus: &SparseVec,
    delta: Delta,
) -> Result<NTripleReport> {
    let target = tensor(tau_plus, tau_minus)?;
    let phi = tensor_functional(phi_plus, phi_minus);
    let mut components = Vec::new();
    for eps in 0..2u8 {
        let h = equivariant_homs(tau_o, &target, &CharSpec::O2nDet(eps), delta, HomMethod::Auto)?;
        let values: Vec<GaussRat> = h.maps.iter().map(|f| phi.dot(&f.mul_vec(x))).collect();
        components.push(NTripleComponent {
            eps,
            hom_dim: h.dim(),
            nonzero: values.iter().any(|v| !v.is_zero()),
            values: values.iter().map(|v| v.to_string()).collect(),
        });
    }
    Ok(NTripleReport { components })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_o_rank_one() {
        let e = eta_o(1, Delta::Last).unwrap();
        assert_eq!(e.hom_dim, 1);
        assert!(!e.image_of_hc().is_zero());
        assert!(e.borel_wedge_is_highest().unwrap());
    }

    #[test]
    fn eta_o_rank_two() {
        let e = eta_o(2, Delta::Last).unwrap();
        assert_eq!(e.wedge.dim(), 126);
        assert_eq!(e.tau.dim(), 42);
        assert!(!e.image_of_hc().is_zero());
        assert!(e.borel_wedge_is_highest().unwrap());
    }
}
