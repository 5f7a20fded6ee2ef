//! One function per check. Each builds its modules from scratch, so checks
//! are independent of each other and deterministic.

use crate::error::{Error, Result};
use crate::hom::{
    eta_o, fixed_vectors, functionals, invariants, isotypic_nonvanishing, ntriple_composition,
    restriction_isomorphism_check, tensor_functional, CharSpec,
};
use crate::label::{weyl_dim_gl, OLabel};
use crate::lie::{gamma_to_to, lie_basis, negative_system, Algebra, Delta, GroupElt, GroupKind, Matrix};
use crate::linalg::{joint_kernel, rref, GaussRat, SparseMat, SparseVec};
use crate::params::{
    cartan_helgason_gl, cartan_helgason_o, cartan_helgason_o_condition, critical_pairs, epsilon0, l_minus, l_mu,
    l_plus, mu_of, p0, section4_weights, SpectralParams,
};
use crate::rep::{
    build_gl_irrep, build_o_irrep, dual, generated_submodule, highest_of_weight, highest_vectors,
    multiplicity_decomposition, restrict, submodule, tensor, wedge_pairing, Decomposition, RepModule,
};

use super::report::{delta_name, CheckId, CheckReport, Instance};

fn parity(x: i64) -> u8 {
    x.rem_euclid(2) as u8
}

fn spectral(n: usize, l: &[i64], w: i64) -> Result<SpectralParams> {
    let p = SpectralParams::new(l.to_vec(), w)?;
    if p.n() != n {
        return Err(Error::InvalidParams(format!("n = {n} but l has {} entries", p.n())));
    }
    Ok(p)
}

fn parts_string(d: &Decomposition) -> String {
    d.parts.iter().map(|(l, m)| format!("{l}x{m}")).collect::<Vec<_>>().join(" + ")
}

/// `dim Hom_H(m, χ)` against the `χ⁻¹`-fixed vectors of the dual.
fn dual_oracle(r: &mut CheckReport, m: &RepModule, chi: &CharSpec, delta: Delta, dim: usize) -> Result<()> {
    let inv = fixed_vectors(&dual(m), &chi.inverse(), delta)?.len();
    r.claim_always(&format!("dim Hom({}, {chi}) equals the dual-formulation count", m.name()), inv, dim);
    Ok(())
}

/// Rank of the evaluation pairing between a basis of functionals and a set
/// of vectors.
fn evaluation_rank(functionals: &[SparseMat], vectors: &[SparseVec]) -> usize {
    if functionals.is_empty() || vectors.is_empty() {
        return 0;
    }
    let rows: Vec<SparseVec> = functionals
        .iter()
        .map(|f| SparseVec::from_dense(&vectors.iter().map(|v| f.row(0).dot(v)).collect::<Vec<_>>()))
        .collect();
    rref(&SparseMat::from_rows(vectors.len(), rows)).rank
}

fn instance(n: usize, delta: Delta) -> Instance {
    Instance { n: Some(n), delta: delta_name(delta).into(), ..Instance::default() }
}

/// Restriction of the `GL_n × GL_n`-functional on `F_{ℓ,−w}` to the
/// `τ_{ℓ⁻}`-copy generated by the highest vector.
pub fn check_disfin(n: usize, l: &[i64], w: i64, w1: i64, w2: i64, delta: Delta) -> Result<CheckReport> {
    let p = spectral(n, l, w)?;
    let mut r = CheckReport::new(
        CheckId::Disfin,
        Instance { l: Some(l.to_vec()), w: Some(w), w1: Some(w1), w2: Some(w2), ..instance(n, delta) },
    );
    r.set_hypotheses(critical_pairs(&p).contains(&(w1, w2)));
    let mu = mu_of(&p)?;
    let f = build_gl_irrep(&mu)?;
    r.hash("F", &f);
    r.claim_always("dim F equals the Weyl dimension", weyl_dim_gl(&mu), f.dim());
    let lm = l_minus(&p)?;
    r.data("l-", &lm);
    let vplus = highest_of_weight(&f, Algebra::Gl, &mu)?;
    r.claim_always("dim of the b_2n-highest space of F", 1, vplus.len());
    let on_o = restrict(&f, GroupKind::O2n)?;
    let copy = generated_submodule(&on_o, &vplus, delta);
    let sub = submodule(&on_o, &copy, "copy")?;
    r.hash("copy", &sub);
    let dec = multiplicity_decomposition(&sub, delta)?;
    r.claim_always("O(2n)-span of the highest vector", format!("{lm}x1"), parts_string(&dec));
    let chi = CharSpec::GlnGln(w1, w2);
    let rc = restriction_isomorphism_check(&f, &copy, &chi, delta)?;
    r.claim("dim Hom_{GLn x GLn}(F, det^{w1,w2})", 1, rc.ambient_functionals);
    r.claim("dim Hom_{On x On}(tau_{l-}, det^{w1,w2})", 1, rc.copy_functionals);
    r.claim("restriction to the tau_{l-} copy is nonzero", true, rc.nonzero_on_copy);
    dual_oracle(&mut r, &f, &chi, delta, rc.ambient_functionals)?;
    dual_oracle(&mut r, &sub, &CharSpec::OnOn(parity(w1), parity(w2)), delta, rc.copy_functionals)?;
    Ok(r)
}

/// `dim Hom_{O_n × O_n}(τ_l, det^{ε₁,ε₂})`, asserted to be 1 under the
/// sufficient conditions.
pub fn check_diso(label: &OLabel, e1: u8, e2: u8, delta: Delta) -> Result<CheckReport> {
    let n = label.n();
    let mut r = CheckReport::new(
        CheckId::Diso,
        Instance { label: Some(label.to_string()), eps: Some((e1, e2)), ..instance(n, delta) },
    );
    let cond = cartan_helgason_o_condition(label, e1 as i64, e2 as i64);
    r.set_hypotheses(cond.is_some());
    if let Some(c) = cond {
        r.data("condition", c);
    }
    let tau = build_o_irrep(label, delta)?;
    r.hash("tau", &tau);
    r.claim_always("dim tau equals the Weyl dimension", label.dim(), tau.dim());
    let chi = CharSpec::OnOn(e1, e2);
    let h = functionals(&tau, &chi, delta)?;
    r.claim("dim Hom_{On x On}(tau, det^{e1,e2})", 1, h.dim());
    dual_oracle(&mut r, &tau, &chi, delta, h.dim())?;
    Ok(r)
}

/// The `(w₁, w₂)` pairs examined for `F_μ`: every pair with `w₁ + w₂ = w_μ`
/// and `w₁ ∈ [μ_{n+1} − 1, μ_n + 1]` (the interval and one step beyond).
pub fn disgl_pairs(mu: &[i64]) -> Vec<(i64, i64)> {
    let n = mu.len() / 2;
    let wmu = mu[0] + mu[mu.len() - 1];
    (mu[n] - 1..=mu[n - 1] + 1).map(|w1| (w1, wmu - w1)).collect()
}

/// `dim Hom_{GL_n × GL_n}(F_μ, det^{w₁,w₂})` for the given pairs (default:
/// [`disgl_pairs`]); asserted to be 1 for balanced `μ` with both in
/// `[μ_{n+1}, μ_n]`.
pub fn check_disgl(mu: &[i64], pairs: Option<&[(i64, i64)]>, delta: Delta) -> Result<CheckReport> {
    if !mu.len().is_multiple_of(2) || mu.is_empty() {
        return Err(Error::InvalidParams(format!("mu = {mu:?} must have even length")));
    }
    let n = mu.len() / 2;
    let default_pairs;
    let pairs = match pairs {
        Some(p) => p,
        None => {
            default_pairs = disgl_pairs(mu);
            &default_pairs
        }
    };
    let mut inst = Instance { mu: Some(mu.to_vec()), ..instance(n, delta) };
    if let [(w1, w2)] = pairs {
        inst.w1 = Some(*w1);
        inst.w2 = Some(*w2);
    }
    let mut r = CheckReport::new(CheckId::Disgl, inst);
    let f = build_gl_irrep(mu)?;
    r.hash("F", &f);
    r.claim_always("dim F equals the Weyl dimension", weyl_dim_gl(mu), f.dim());
    let mut any = false;
    for &(w1, w2) in pairs {
        let hyp = cartan_helgason_gl(mu, w1, w2);
        any |= hyp;
        let chi = CharSpec::GlnGln(w1, w2);
        let h = functionals(&f, &chi, delta)?;
        let desc = format!("dim Hom_{{GLn x GLn}}(F, det^({w1},{w2}))");
        if hyp {
            r.claim_always(&desc, 1, h.dim());
        } else {
            r.data(&desc, h.dim());
        }
        dual_oracle(&mut r, &f, &chi, delta, h.dim())?;
    }
    r.set_hypotheses(any);
    Ok(r)
}

/// Multiplicity one and strict maximality of `τ_{ℓ_μ}` in `F_μ|O(2n)`, with
/// the decomposition computed for all three reflection choices.
pub fn check_extremal(mu: &[i64], delta: Delta) -> Result<CheckReport> {
    let n = mu.len() / 2;
    let mut r = CheckReport::new(CheckId::Extremal, Instance { mu: Some(mu.to_vec()), ..instance(n, delta) });
    let f = build_gl_irrep(mu)?;
    r.hash("F", &f);
    r.claim_always("dim F equals the Weyl dimension", weyl_dim_gl(mu), f.dim());
    let dec = multiplicity_decomposition(&f, delta)?;
    r.data("decomposition", parts_string(&dec));
    for other in [Delta::Last, Delta::First, Delta::Mid] {
        if other != delta {
            let d = multiplicity_decomposition(&f, other)?;
            r.claim_always(&format!("decomposition with reflection {}", delta_name(other)), parts_string(&dec), parts_string(&d));
        }
    }
    let total: usize = dec.parts.iter().map(|(l, m)| l.dim() * m).sum();
    r.claim_always("sum of constituent dimensions", f.dim(), total);
    let lm = l_mu(mu)?;
    r.data("l_mu", &lm);
    r.claim("multiplicity of tau_{l_mu}", 1, dec.multiplicity(&lm));
    let top = lm.size_squared();
    let strictly_max = dec.parts.iter().all(|(l, _)| *l == lm || l.size_squared() < top);
    r.claim("tau_{l_mu} has strictly maximal size", true, strictly_max);
    Ok(r)
}

/// Multiplicity one of `τ_{ℓ_O}` in `∧^{p₀}(s_{2n})`, nonvanishing of
/// `η_O ∘ ∧^{p₀} j` (direct and through the trace-form Gram determinant),
/// and the `O(n) × O(n)` character of `∧^{p₀}(h/c)`.
pub fn check_jtau(n: usize, delta: Delta) -> Result<CheckReport> {
    let mut r = CheckReport::new(CheckId::Jtau, instance(n, delta));
    let e = eta_o(n, delta)?;
    r.hash("wedge", &e.wedge);
    r.hash("tau_O", &e.tau);
    r.data("l_O", &e.label);
    r.data("p0", p0(n));
    r.claim_always("dim Hom_O(2n)(wedge^p0 s, tau_{l_O})", 1, e.hom_dim);
    let dec = multiplicity_decomposition(&e.wedge, delta)?;
    r.claim_always("multiplicity of tau_{l_O} in wedge^p0 s", 1, dec.multiplicity(&e.label));
    r.claim_always("eta_O of the h/c top wedge is nonzero", true, !e.image_of_hc().is_zero());
    let hc: Vec<Matrix> = e.sym.h_mod_c()?.iter().map(|v| e.sym.matrix(v)).collect();
    let bk: Vec<Matrix> = e.sym.b_mod_bk()?.iter().map(|v| e.sym.matrix(v)).collect();
    let gram = wedge_pairing(&hc, &bk)?;
    r.claim_always("Gram pairing of the h/c and b/b_k top wedges is nonzero", true, !gram.is_zero());
    r.claim_always("b/b_k top wedge is b_o-highest of weight l_O", true, e.borel_wedge_is_highest()?);
    let mut annihilated = true;
    for g in lie_basis(GroupKind::OnOn, n) {
        annihilated &= e.wedge.act(&g.frame)?.mul_vec(&e.hc_wedge).is_zero();
    }
    r.claim_always("so(n) x so(n) acts by zero on wedge^p0(h/c)", true, annihilated);
    let expected = if (n - 1).is_multiple_of(2) { 1 } else { -1 };
    for (name, g) in [("delta1", GroupElt::Refl(1)), ("delta2", GroupElt::Refl(n + 1))] {
        let image = e.wedge.element(g).mul_vec(&e.hc_wedge);
        let eig = if image == e.hc_wedge {
            "1".to_string()
        } else if image == e.hc_wedge.neg() {
            "-1".to_string()
        } else {
            "not an eigenvector".to_string()
        };
        r.claim_always(&format!("{name} eigenvalue on wedge^p0(h/c)"), expected, eig);
    }
    Ok(r)
}

/// The parity decomposition of `Hom(τ_{ℓ_O}, τ_{ℓ⁺} ⊗ τ_{ℓ⁻})` and the value
/// of `(φ_+ ⊗ φ_−) ∘ f ∘ η_O ∘ ∧^{p₀} j` on each component.
#[allow(clippy::too_many_arguments)]
pub fn check_nonv(
    n: usize,
    l: &[i64],
    w: i64,
    w1: i64,
    w2: i64,
    eps_chi: (u8, u8),
    delta: Delta,
) -> Result<CheckReport> {
    let p = spectral(n, l, w)?;
    let (e1, e2) = (parity(eps_chi.0 as i64), parity(eps_chi.1 as i64));
    let eps0 = epsilon0(n, e1 as i64, w1, e2 as i64, w2)?;
    let mut r = CheckReport::new(
        CheckId::Nonv,
        Instance {
            l: Some(l.to_vec()),
            w: Some(w),
            w1: Some(w1),
            w2: Some(w2),
            eps: Some((e1, e2)),
            ..instance(n, delta)
        },
    );
    r.set_hypotheses(critical_pairs(&p).contains(&(w1, w2)));
    r.data("eps0", eps0);
    let (lp, lm) = (l_plus(&p), l_minus(&p)?);
    r.data("l+", &lp);
    r.data("l-", &lm);
    let tau_plus = build_o_irrep(&lp, delta)?;
    let tau_minus = build_o_irrep(&lm, delta)?;
    r.hash("tau_plus", &tau_plus);
    r.hash("tau_minus", &tau_minus);
    let phi_plus = functionals(&tau_plus, &CharSpec::OnOn(e1, e2), delta)?;
    let phi_minus = functionals(&tau_minus, &CharSpec::OnOn(parity(w1), parity(w2)), delta)?;
    r.claim("dim Hom_{On x On}(tau_{l+}, det^{eps_chi})", 1, phi_plus.dim());
    r.claim("dim Hom_{On x On}(tau_{l-}, det^{w1,w2})", 1, phi_minus.dim());
    dual_oracle(&mut r, &tau_plus, &CharSpec::OnOn(e1, e2), delta, phi_plus.dim())?;
    dual_oracle(&mut r, &tau_minus, &CharSpec::OnOn(parity(w1), parity(w2)), delta, phi_minus.dim())?;
    let e = eta_o(n, delta)?;
    r.hash("tau_O", &e.tau);
    let x = e.image_of_hc();
    r.claim_always("eta_O of the h/c top wedge is nonzero", true, !x.is_zero());
    let (Some(fp), Some(fm)) = (phi_plus.maps.first(), phi_minus.maps.first()) else {
        return Ok(r);
    };
    let report = ntriple_composition(&e.tau, &x, &tau_plus, fp.row(0), &tau_minus, fm.row(0), delta)?;
    for c in &report.components {
        let tag = if c.eps == eps0 { "eps0" } else { "eps0+1" };
        r.claim(&format!("dim of the det^{} component ({tag})", c.eps), 1, c.hom_dim);
        r.data(&format!("values on the det^{} component", c.eps), c.values.join(","));
        r.claim(&format!("composition on the det^{} component ({tag}) is nonzero", c.eps), c.eps == eps0, c.nonzero);
    }
    // linearity: the zero functional gives zero everywhere
    let zero = SparseVec::zero(tau_plus.dim());
    let z = ntriple_composition(&e.tau, &x, &tau_plus, &zero, &tau_minus, fm.row(0), delta)?;
    r.claim_always("composition with phi_+ = 0 vanishes", false, z.components.iter().any(|c| c.nonzero));
    Ok(r)
}

/// `(τ ⊗ τ)^{O(2n)}` is a line on which `φ ⊗ φ` does not vanish for every
/// `O_n × O_n`-equivariant `φ`.
pub fn check_distt(label: &OLabel, delta: Delta) -> Result<CheckReport> {
    let n = label.n();
    let mut r = CheckReport::new(CheckId::Distt, Instance { label: Some(label.to_string()), ..instance(n, delta) });
    let tau = build_o_irrep(label, delta)?;
    r.hash("tau", &tau);
    let tt = tensor(&tau, &tau)?;
    let inv = invariants(&tt, GroupKind::O2n, delta)?;
    r.claim_always("dim (tau x tau)^O(2n)", 1, inv.len());
    dual_oracle(&mut r, &tt, &CharSpec::O2nDet(0), delta, inv.len())?;
    let Some(line) = inv.first() else {
        return Ok(r);
    };
    for (e1, e2) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let h = functionals(&tau, &CharSpec::OnOn(e1, e2), delta)?;
        for (k, f) in h.maps.iter().enumerate() {
            let phi = tensor_functional(f.row(0), f.row(0));
            let v = phi.dot(line);
            r.claim_always(&format!("phi x phi on the invariant line, det^({e1},{e2}) functional {k}"), true, !v.is_zero());
        }
    }
    Ok(r)
}

/// Every nonzero functional in `Hom_{GL_n × GL_n}(F_μ, det^{w₁,w₂})` is
/// nonzero on the `b_{2n}`-highest space.
pub fn check_highest0_gl(mu: &[i64], w1: i64, w2: i64, delta: Delta) -> Result<CheckReport> {
    let n = mu.len() / 2;
    let mut r = CheckReport::new(
        CheckId::Highest0,
        Instance { mu: Some(mu.to_vec()), w1: Some(w1), w2: Some(w2), ..instance(n, delta) },
    );
    let f = build_gl_irrep(mu)?;
    r.hash("F", &f);
    let h = functionals(&f, &CharSpec::GlnGln(w1, w2), delta)?;
    r.set_hypotheses(h.dim() > 0);
    r.data("dim Hom", h.dim());
    dual_oracle(&mut r, &f, &CharSpec::GlnGln(w1, w2), delta, h.dim())?;
    let top: Vec<SparseVec> = highest_vectors(&f, Algebra::Gl)?.into_values().flatten().collect();
    r.claim("evaluation on the highest space is injective", h.dim(), evaluation_rank(&h.maps, &top));
    Ok(r)
}

/// Every nonzero functional in `Hom_{O_n × O_n}(τ_l, det^{ε₁,ε₂})` is
/// nonzero on the `b_o`-highest space.
pub fn check_highest0_o(label: &OLabel, e1: u8, e2: u8, delta: Delta) -> Result<CheckReport> {
    let n = label.n();
    let mut r = CheckReport::new(
        CheckId::Highest0,
        Instance { label: Some(label.to_string()), eps: Some((e1, e2)), ..instance(n, delta) },
    );
    let tau = build_o_irrep(label, delta)?;
    r.hash("tau", &tau);
    let h = functionals(&tau, &CharSpec::OnOn(e1, e2), delta)?;
    r.set_hypotheses(h.dim() > 0);
    r.data("dim Hom", h.dim());
    r.data("sufficient condition holds", cartan_helgason_o(label, e1 as i64, e2 as i64));
    dual_oracle(&mut r, &tau, &CharSpec::OnOn(e1, e2), delta, h.dim())?;
    let top: Vec<SparseVec> = highest_vectors(&tau, Algebra::So)?.into_values().flatten().collect();
    r.claim("evaluation on the highest space is injective", h.dim(), evaluation_rank(&h.maps, &top));
    Ok(r)
}

/// Lowest-weight vectors (joint kernel of the negative `so(2n)` root
/// vectors), split by `T_O`-weight.
fn lowest_vectors(m: &RepModule) -> Result<Vec<(Vec<i64>, SparseVec)>> {
    let lowering: Vec<SparseMat> =
        negative_system(Algebra::So, m.n()).iter().map(|r| m.act(&r.vector)).collect::<Result<_>>()?;
    let spaces = m
        .weight_spaces()
        .ok_or_else(|| Error::TorusMismatch("TO".into(), format!("{} carries no grading", m.name())))?;
    let all: Vec<usize> = (0..m.dim()).collect();
    let mut out = Vec::new();
    for (w, idx) in spaces {
        let blocks: Vec<SparseMat> = lowering.iter().map(|x| x.submatrix(&all, &idx)).collect();
        for v in joint_kernel(idx.len(), &blocks) {
            out.push((w.clone(), SparseVec::from_pairs(m.dim(), v.iter().map(|(k, c)| (idx[k], c.clone())))));
        }
    }
    Ok(out)
}

/// The finite-dimensional data of the bottom-layer argument: the weights of
/// `F′`, `∧^S n_c` and `v_{F*}`, the two-dimensional lowest space of
/// `F* = τ_{ℓ⁺}*`, the projection of `v_{F*}` to the `χ`-isotypic part, and
/// the `H′`-isomorphism `E′ ≅ χ`.
pub fn check_nonvb(n: usize, l: &[i64], w: i64, eps_chi: (u8, u8), delta: Delta) -> Result<CheckReport> {
    let p = spectral(n, l, w)?;
    let (e1, e2) = (parity(eps_chi.0 as i64), parity(eps_chi.1 as i64));
    if (e1 as i64 + e2 as i64 - w).rem_euclid(2) != 0 {
        return Err(Error::Parity(format!("eps_chi1 + eps_chi2 = {} is not congruent to w = {w}", e1 + e2)));
    }
    let mut r = CheckReport::new(
        CheckId::Nonvb,
        Instance { l: Some(l.to_vec()), w: Some(w), eps: Some((e1, e2)), ..instance(n, delta) },
    );
    let s4 = section4_weights(&p)?;
    r.claim_always("F' weight equals wedge^S n_c weight minus v_F* weight", format!("{:?}", s4.f_prime), {
        let d: Vec<i64> = s4.wedge_nc.iter().zip(&s4.v_fstar).map(|(a, b)| a - b).collect();
        format!("{d:?}")
    });
    let tau = build_o_irrep(&l_plus(&p), delta)?;
    let fstar = dual(&tau);
    r.hash("F*", &fstar);
    let lowest = lowest_vectors(&fstar)?;
    r.claim_always("dim of the lowest space of F*", 2, lowest.len());
    let mut got: Vec<Vec<i64>> = lowest.iter().map(|(w, _)| w.clone()).collect();
    got.sort();
    let mut want = s4.lowest.to_vec();
    want.sort();
    r.claim_always("weights of the lowest space of F*", format!("{want:?}"), format!("{got:?}"));
    let v = lowest.iter().find(|(w, _)| *w == s4.v_fstar).map(|(_, v)| v.clone());
    r.claim_always("v_F* exists", true, v.is_some());
    if let Some(v) = v {
        let chi = CharSpec::OnOn(e1, e2);
        r.claim_always("v_F* has nonzero chi-isotypic projection", true, isotypic_nonvanishing(&fstar, &chi, delta, &v)?);
        r.claim_always("zero vector has zero projection", false, isotypic_nonvanishing(&fstar, &chi, delta, &SparseVec::zero(fstar.dim()))?);
    }
    let (gamma, e_prime) = e_prime_module(&p)?;
    r.claim_always("T_O-weight of E' equals the F' weight", format!("{:?}", s4.f_prime), format!("{:?}", gamma_to_to(n, &gamma)));
    let h = functionals(&e_prime, &CharSpec::Hprime(w), delta)?;
    r.claim_always("dim Hom_H'(E', (a_1...a_n)^w)", 1, h.dim());
    dual_oracle(&mut r, &e_prime, &CharSpec::Hprime(w), delta, h.dim())?;
    Ok(r)
}

/// The one-dimensional `H′`-module `E′` of γ-weight `λ_ℓ + ρ_{2n} + w/2`.
fn e_prime_module(p: &SpectralParams) -> Result<(Vec<i64>, RepModule)> {
    let n = p.n();
    // doubled entries of λ_ℓ + ρ + w/2 are integers with even sum per pair
    let m = 2 * n;
    let doubled: Vec<i64> = (0..m)
        .map(|k| {
            let lam = if k < n { p.l()[k] } else { -p.l()[m - 1 - k] };
            let rho = m as i64 - 1 - 2 * k as i64;
            lam + rho + p.w()
        })
        .collect();
    if doubled.iter().any(|x| x % 2 != 0) {
        return Err(Error::Inconsistent("E' weight is not integral".into()));
    }
    let weight: Vec<i64> = doubled.iter().map(|x| x / 2).collect();
    let value = |x: &Matrix| {
        (0..m).fold(GaussRat::zero(), |acc, k| &acc + &(x.get(k, k) * &GaussRat::from_int(weight[k])))
    };
    let gens = crate::lie::lie_basis(GroupKind::Hprime, n);
    let lie = gens.iter().map(|g| SparseMat::scalar(1, &value(&g.frame))).collect();
    let elements = crate::lie::catalog(n)
        .into_iter()
        .map(|g| (g, SparseMat::scalar(1, &GaussRat::from_int(CharSpec::Hprime(p.w()).element_value(n, g)))))
        .collect();
    let m = RepModule::assemble("E'".into(), n, GroupKind::Hprime, 1, lie, elements, None, "character".into())?;
    Ok((weight, m))
}
