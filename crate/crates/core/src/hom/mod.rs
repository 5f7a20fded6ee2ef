//! Spaces of equivariant maps: functionals to characters, invariants, and
//! homomorphisms between modules.
//!
//! The convention throughout is `f ∘ ρ_S(g) = χ(g) · ρ_T(g) ∘ f` for a map
//! `f: S → T` twisted by a character `χ`; for Lie generators this reads
//! `f ρ_S(X) = (ρ_T(X) + χ(X)) f`.

mod character;
pub mod compose;

use std::collections::BTreeMap;

use serde::Serialize;

pub use character::CharSpec;
pub use compose::{eta_o, ntriple_composition, restriction_isomorphism_check, EtaO, NTripleReport, RestrictionCheck};

use crate::error::{Error, Result};
use crate::lie::{Algebra, Delta, GroupElt, GroupKind};
use crate::linalg::{joint_kernel, null_space, Accumulator, Echelon, GaussRat, SparseMat, SparseVec};
use crate::rep::{functors::tensor_vec, highest_of_weight, highest_vectors, restrict, torus_generators, RepModule};

/// Upper bound on the number of unknowns of a brute-force Hom system.
pub const FULL_SYSTEM_LIMIT: usize = 40_000;

/// How a Hom space was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HomMethod {
    /// Solve the linear system on all matrix entries allowed by the weights.
    Full,
    /// Parametrize maps by the image of a highest vector of an irreducible
    /// source.
    Seed,
    /// Apply `Seed` to the transposed problem `T* → S*`.
    DualSeed,
    /// Pick `Seed`, then `DualSeed`, then `Full`.
    Auto,
}

/// A basis of a Hom space, each map stored as a sparse `dim T × dim S`
/// matrix and normalized so its first nonzero entry (row-major) is 1.
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub source: String,
    pub target: String,
    pub method: HomMethod,
    pub maps: Vec<SparseMat>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    /// Images of `v` under every basis map.
    pub fn evaluate_on(&self, v: &SparseVec) -> Vec<SparseVec> {
        self.maps.iter().map(|f| f.mul_vec(v)).collect()
    }

    /// For maps to a character: the scalar values on `v`.
    pub fn values_on(&self, v: &SparseVec) -> Vec<GaussRat> {
        self.maps.iter().map(|f| f.row(0).dot(v)).collect()
    }
}

fn normalize(m: SparseMat) -> SparseMat {
    let lead = m.triplets().next().map(|(_, _, v)| v.clone());
    match lead {
        Some(lead) if !lead.is_one() => m.scale(&lead.inv().expect("nonzero lead")),
        _ => m,
    }
}

fn normalize_vec(v: SparseVec) -> SparseVec {
    v.normalized()
}

/// The module restricted to the group of `chi` (no-op when they agree).
fn on_group(m: &RepModule, kind: GroupKind) -> Result<RepModule> {
    if m.kind() == kind {
        Ok(m.clone())
    } else {
        restrict(m, kind)
    }
}

/// Diagonal entries of `a` when it is diagonal.
fn diagonal(a: &SparseMat) -> Option<Vec<GaussRat>> {
    let mut d = vec![GaussRat::zero(); a.nrows()];
    for (r, c, v) in a.triplets() {
        if r != c {
            return None;
        }
        d[r] = v.clone();
    }
    Some(d)
}

struct Constraints {
    lie: Vec<(SparseMat, GaussRat)>,
    elements: Vec<(SparseMat, GaussRat)>,
}

fn constraints(m: &RepModule, chi: &CharSpec, delta: Delta) -> Constraints {
    let n = m.n();
    let lie = m.generators().iter().zip(m.lie_actions()).map(|(g, a)| (a.clone(), chi.lie_value(n, &g.frame))).collect();
    let elements = m
        .constraint_elements(delta)
        .into_iter()
        .map(|g| (m.element(g).clone(), GaussRat::from_int(chi.element_value(n, g))))
        .collect();
    Constraints { lie, elements }
}

fn lift(len: usize, idx: &[usize], v: &SparseVec) -> SparseVec {
    SparseVec::from_pairs(len, v.iter().map(|(k, c)| (idx[k], c.clone())))
}

/// Vectors `v` with `ρ(X)v = χ(X)v` and `ρ(g)v = χ(g)v` for the generators
/// and component representatives of `chi.group()`. Computed as a plain joint
/// kernel without any weight prefilter.
pub fn fixed_vectors(m: &RepModule, chi: &CharSpec, delta: Delta) -> Result<Vec<SparseVec>> {
    let r = on_group(m, chi.group())?;
    let c = constraints(&r, chi, delta);
    let mats: Vec<SparseMat> = c.lie.iter().chain(&c.elements).map(|(a, x)| a.add_scalar(&-x)).collect();
    Ok(joint_kernel(r.dim(), &mats).into_iter().map(normalize_vec).collect())
}

/// Invariant vectors of `m` under `kind` (with component representative `delta`).
pub fn invariants(m: &RepModule, kind: GroupKind, delta: Delta) -> Result<Vec<SparseVec>> {
    fixed_vectors(m, &CharSpec::trivial(kind, m.n())?, delta)
}

/// Basis of `Hom_H(m, χ)`, `H = chi.group()`, as row vectors.
///
/// Generators acting diagonally in the basis of `m` cut the unknowns down to
/// the coordinates where their eigenvalue matches `χ` before the remaining
/// constraints `ρ(X)ᵀ − χ(X)` and `ρ(g)ᵀ − χ(g)` are solved.
pub fn functionals(m: &RepModule, chi: &CharSpec, delta: Delta) -> Result<HomBasis> {
    let r = on_group(m, chi.group())?;
    let c = constraints(&r, chi, delta);
    let mut allowed: Vec<bool> = vec![true; r.dim()];
    let mut rest = Vec::new();
    for (a, x) in &c.lie {
        match diagonal(a) {
            Some(d) => {
                for (k, v) in d.iter().enumerate() {
                    if v != x {
                        allowed[k] = false;
                    }
                }
            }
            None => rest.push(a.transpose().add_scalar(&-x)),
        }
    }
    for (a, x) in &c.elements {
        rest.push(a.transpose().add_scalar(&-x));
    }
    let idx: Vec<usize> = (0..r.dim()).filter(|k| allowed[*k]).collect();
    let all: Vec<usize> = (0..r.dim()).collect();
    let restricted: Vec<SparseMat> = rest.iter().map(|a| a.submatrix(&all, &idx)).collect();
    let kernel = if idx.is_empty() { Vec::new() } else { joint_kernel(idx.len(), &restricted) };
    let maps = kernel
        .iter()
        .map(|v| normalize(SparseMat::from_rows(r.dim(), vec![lift(r.dim(), &idx, v)])))
        .collect();
    Ok(HomBasis { source: m.name().to_string(), target: chi.to_string(), method: HomMethod::Full, maps })
}

/// `true` when some functional in `Hom_H(m, χ)` is nonzero on `v`.
pub fn isotypic_nonvanishing(m: &RepModule, chi: &CharSpec, delta: Delta, v: &SparseVec) -> Result<bool> {
    Ok(functionals(m, chi, delta)?.values_on(v).iter().any(|x| !x.is_zero()))
}

/// Basis of `Hom(s, t)` twisted by `chi`, where `chi` is a character of the
/// common group of `s` and `t`.
pub fn equivariant_homs(
    s: &RepModule,
    t: &RepModule,
    chi: &CharSpec,
    delta: Delta,
    method: HomMethod,
) -> Result<HomBasis> {
    if s.kind() != t.kind() || s.n() != t.n() {
        return Err(Error::ActionMismatch(format!("{} and {} are modules of different groups", s.name(), t.name())));
    }
    if chi.group() != s.kind() {
        return Err(Error::ActionMismatch(format!("{chi} is not a character of {}", s.kind().name())));
    }
    let seedable = |m: &RepModule| m.irreducible().is_some() && matches!(m.kind(), GroupKind::O2n | GroupKind::Gl2n);
    let method = match method {
        HomMethod::Auto if seedable(s) => HomMethod::Seed,
        HomMethod::Auto if seedable(t) => HomMethod::DualSeed,
        HomMethod::Auto => HomMethod::Full,
        m => m,
    };
    let maps = match method {
        HomMethod::Full => full_homs(s, t, chi, delta)?,
        HomMethod::Seed => seed_homs(s, t, chi, delta)?,
        HomMethod::DualSeed => {
            let (sd, td) = (crate::rep::dual(s), crate::rep::dual(t));
            seed_homs(&td, &sd, chi, delta)?.iter().map(|f| f.transpose()).collect()
        }
        HomMethod::Auto => unreachable!(),
    };
    let maps = canonical(maps, t.dim(), s.dim());
    Ok(HomBasis { source: s.name().to_string(), target: t.name().to_string(), method, maps })
}

/// Reduced canonical basis of a span of maps, each normalized.
fn canonical(maps: Vec<SparseMat>, rows: usize, cols: usize) -> Vec<SparseMat> {
    let flat: Vec<SparseVec> = maps.iter().map(flatten).collect();
    crate::linalg::span_basis(rows * cols, &flat).iter().map(|v| normalize(unflatten(v, rows, cols))).collect()
}

fn flatten(f: &SparseMat) -> SparseVec {
    let cols = f.ncols();
    SparseVec::from_pairs(f.nrows() * cols, f.triplets().map(|(r, c, v)| (r * cols + c, v.clone())))
}

fn unflatten(v: &SparseVec, rows: usize, cols: usize) -> SparseMat {
    SparseMat::from_triplets(rows, cols, v.iter().map(|(k, x)| (k / cols, k % cols, x.clone())))
}

fn full_homs(s: &RepModule, t: &RepModule, chi: &CharSpec, delta: Delta) -> Result<Vec<SparseMat>> {
    let cs = constraints(s, chi, delta);
    let ct = constraints(t, &CharSpec::trivial(t.kind(), t.n())?, delta);
    let (ds, dt) = (s.dim(), t.dim());
    // weight prefilter from generators diagonal on both sides
    let mut allowed = vec![true; ds * dt];
    for ((a, x), (b, _)) in cs.lie.iter().zip(&ct.lie) {
        if let (Some(da), Some(db)) = (diagonal(a), diagonal(b)) {
            for tt in 0..dt {
                let shifted = &db[tt] + x;
                for ss in 0..ds {
                    if da[ss] != shifted {
                        allowed[tt * ds + ss] = false;
                    }
                }
            }
        }
    }
    let unknowns: Vec<usize> = (0..ds * dt).filter(|k| allowed[*k]).collect();
    if unknowns.len() > FULL_SYSTEM_LIMIT {
        return Err(Error::ResourceGuard(format!(
            "Hom system with {} unknowns exceeds the limit of {FULL_SYSTEM_LIMIT}",
            unknowns.len()
        )));
    }
    if unknowns.is_empty() {
        return Ok(Vec::new());
    }
    let position: BTreeMap<usize, usize> = unknowns.iter().enumerate().map(|(u, k)| (*k, u)).collect();
    // equations f A − c·B f = 0 (Lie: B shifted by χ; elements: c = χ(g))
    let mut systems = Vec::new();
    let lie_pairs = cs.lie.iter().zip(&ct.lie).map(|((a, x), (b, _))| (a, b.add_scalar(x), GaussRat::one()));
    let elt_pairs = cs.elements.iter().zip(&ct.elements).map(|((a, x), (b, _))| (a, b.clone(), x.clone()));
    for (a, b, c) in lie_pairs.chain(elt_pairs) {
        let bt = b.transpose();
        let mut rows: BTreeMap<usize, Accumulator> = BTreeMap::new();
        for (&k, &u) in &position {
            let (tt, ss) = (k / ds, k % ds);
            // f_{tt,ss} A_{ss,s'} contributes to equation (tt, s')
            for (s2, v) in a.row(ss).iter() {
                rows.entry(tt * ds + s2).or_insert_with(|| Accumulator::new(unknowns.len())).add_entry(u, v);
            }
            // −c B_{t',tt} f_{tt,ss} contributes to equation (t', ss)
            for (t2, v) in bt.row(tt).iter() {
                let w = -&(v * &c);
                rows.entry(t2 * ds + ss).or_insert_with(|| Accumulator::new(unknowns.len())).add_entry(u, &w);
            }
        }
        let eqs: Vec<SparseVec> = rows.into_values().map(|a| a.finish()).filter(|r| !r.is_zero()).collect();
        if !eqs.is_empty() {
            systems.push(SparseMat::from_rows(unknowns.len(), eqs));
        }
    }
    let kernel = joint_kernel(unknowns.len(), &systems);
    Ok(kernel.iter().map(|v| unflatten(&lift(ds * dt, &unknowns, v), dt, ds)).collect())
}

fn algebra_of(kind: GroupKind) -> Result<Algebra> {
    match kind {
        GroupKind::O2n => Ok(Algebra::So),
        GroupKind::Gl2n => Ok(Algebra::Gl),
        other => Err(Error::ActionMismatch(format!("no highest-weight theory for {}", other.name()))),
    }
}

fn seed_homs(s: &RepModule, t: &RepModule, chi: &CharSpec, delta: Delta) -> Result<Vec<SparseMat>> {
    if s.irreducible().is_none() {
        return Err(Error::ActionMismatch(format!("{} is not marked irreducible", s.name())));
    }
    let n = s.n();
    let algebra = algebra_of(s.kind())?;
    let (weight, seed) = highest_vectors(s, algebra)?
        .into_iter()
        .next_back()
        .map(|(w, v)| (w, v[0].clone()))
        .ok_or_else(|| Error::Inconsistent(format!("{} has no highest vector", s.name())))?;
    let torus = s.kind().grading_torus(n).expect("seedable groups carry a grading");
    let shifts = torus_generators(n, torus)?;
    let target_weight: Vec<i64> = weight
        .iter()
        .zip(&shifts)
        .map(|(w, h)| {
            chi.lie_value(n, h)
                .to_i64()
                .map(|x| w - x)
                .ok_or_else(|| Error::Inconsistent(format!("{chi} is not integral on the torus")))
        })
        .collect::<Result<_>>()?;
    let candidates = highest_of_weight(t, algebra, &target_weight)?;
    if candidates.is_empty() {
        return Ok(Vec::new());
    }
    let cs = constraints(s, chi, delta);
    let ct = constraints(t, &CharSpec::trivial(t.kind(), n)?, delta);
    // operators on S and the matching twisted operators on T
    let mut ops: Vec<(&SparseMat, SparseMat)> = Vec::new();
    for ((a, x), (b, _)) in cs.lie.iter().zip(&ct.lie) {
        ops.push((a, b.add_scalar(x)));
    }
    for ((a, x), (b, _)) in cs.elements.iter().zip(&ct.elements) {
        ops.push((a, b.scale(x)));
    }
    // spanning words from the seed: (parent, operator) per inserted vector
    let mut span = Echelon::with_tracking(s.dim());
    let mut words: Vec<Option<(usize, usize)>> = Vec::new();
    let mut vectors = Vec::new();
    span.insert(&seed);
    words.push(None);
    vectors.push(seed);
    // tracked coordinates are indexed by insertion attempt
    let mut attempt_to_word = vec![Some(0usize)];
    let mut head = 0;
    while head < vectors.len() && !span.is_full() {
        for (k, (a, _)) in ops.iter().enumerate() {
            let img = a.mul_vec(&vectors[head]);
            if span.insert(&img) {
                attempt_to_word.push(Some(words.len()));
                words.push(Some((head, k)));
                vectors.push(img);
            } else {
                attempt_to_word.push(None);
            }
        }
        head += 1;
    }
    if !span.is_full() {
        return Err(Error::Inconsistent(format!("{} is not generated by its highest vector", s.name())));
    }
    let coords: Vec<SparseVec> =
        (0..s.dim()).map(|j| span.express(&SparseVec::unit(s.dim(), j)).expect("full span")).collect();
    let mut candidate_maps = Vec::new();
    for c in &candidates {
        let mut images: Vec<SparseVec> = Vec::with_capacity(words.len());
        for w in &words {
            let img = match w {
                None => c.clone(),
                Some((parent, k)) => ops[*k].1.mul_vec(&images[*parent]),
            };
            images.push(img);
        }
        let cols: Vec<SparseVec> = coords
            .iter()
            .map(|x| {
                let mut acc = Accumulator::new(t.dim());
                for (j, a) in x.iter() {
                    let w = attempt_to_word[j].expect("dependent attempts have zero coefficient");
                    acc.add_scaled(a, &images[w]);
                }
                acc.finish()
            })
            .collect();
        candidate_maps.push(SparseMat::from_columns(t.dim(), &cols));
    }
    // residuals f A − B' f over all operators, stacked; solve for combinations
    let residual = |f: &SparseMat| -> SparseVec {
        let parts: Vec<SparseVec> = ops.iter().map(|(a, b)| flatten(&f.mul(a).sub(&b.mul(f)))).collect();
        concat(&parts)
    };
    let res: Vec<SparseVec> = candidate_maps.iter().map(residual).collect();
    let len = res[0].len();
    let combos = null_space(&SparseMat::from_columns(len, &res));
    Ok(combos
        .iter()
        .map(|x| {
            let mut acc = SparseMat::zero(t.dim(), s.dim());
            for (k, a) in x.iter() {
                acc = acc.add(&candidate_maps[k].scale(a));
            }
            acc
        })
        .collect())
}

fn concat(parts: &[SparseVec]) -> SparseVec {
    let len = parts.iter().map(|p| p.len()).sum();
    let mut entries = Vec::new();
    let mut offset = 0;
    for p in parts {
        entries.extend(p.iter().map(|(k, v)| (k + offset, v.clone())));
        offset += p.len();
    }
    SparseVec::from_pairs(len, entries)
}

/// The functional `φ_1 ⊗ φ_2` on a tensor product, in the basis order used by
/// [`crate::rep::tensor`].
pub fn tensor_functional(a: &SparseVec, b: &SparseVec) -> SparseVec {
    tensor_vec(a, b)
}

/// Applies a catalog element to a vector (convenience for reports).
pub fn apply_element(m: &RepModule, g: GroupElt, v: &SparseVec) -> SparseVec {
    m.element(g).mul_vec(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{build_gl_irrep, build_o_irrep, dual, tensor};

    fn tau(s: &str) -> RepModule {
        build_o_irrep(&s.parse().unwrap(), Delta::Last).unwrap()
    }

    #[test]
    fn functionals_of_small_gl_module() {
        let f = build_gl_irrep(&[1, -1]).unwrap();
        assert_eq!(functionals(&f, &CharSpec::GlnGln(0, 0), Delta::Last).unwrap().dim(), 1);
        assert_eq!(functionals(&f, &CharSpec::GlnGln(1, -1), Delta::Last).unwrap().dim(), 1);
        assert_eq!(functionals(&f, &CharSpec::GlnGln(1, 0), Delta::Last).unwrap().dim(), 0);
    }

    #[test]
    fn functionals_on_rank_one_orthogonal() {
        let t = tau("2");
        assert_eq!(functionals(&t, &CharSpec::OnOn(1, 0), Delta::Last).unwrap().dim(), 0);
        assert_eq!(functionals(&t, &CharSpec::OnOn(0, 0), Delta::Last).unwrap().dim(), 1);
        assert_eq!(functionals(&t, &CharSpec::OnOn(1, 1), Delta::Last).unwrap().dim(), 1);
    }

    #[test]
    fn invariants_of_tensor_square() {
        let t = tau("2");
        let tt = tensor(&t, &t).unwrap();
        assert_eq!(invariants(&tt, GroupKind::O2n, Delta::Last).unwrap().len(), 1);
    }

    #[test]
    fn dual_formulation_agrees() {
        let f = build_gl_irrep(&[2, 0, 0, -2]).unwrap();
        for chi in [CharSpec::GlnGln(0, 0), CharSpec::GlnGln(1, -1), CharSpec::GlnGln(2, -2), CharSpec::GlnGln(1, 0)] {
            let a = functionals(&f, &chi, Delta::Last).unwrap().dim();
            let b = fixed_vectors(&dual(&f), &chi.inverse(), Delta::Last).unwrap().len();
            assert_eq!(a, b, "{chi}");
        }
    }

    #[test]
    fn hom_methods_agree() {
        let t = tau("2,0");
        let s = crate::rep::SymModel::new(2).unwrap();
        let sm = s.module().clone();
        for chi in [CharSpec::O2nDet(0), CharSpec::O2nDet(1)] {
            let full = equivariant_homs(&sm, &t, &chi, Delta::Last, HomMethod::Full).unwrap();
            let dual_seed = equivariant_homs(&sm, &t, &chi, Delta::Last, HomMethod::DualSeed).unwrap();
            let seed = equivariant_homs(&t, &sm, &chi, Delta::Last, HomMethod::Seed).unwrap();
            let back = equivariant_homs(&t, &sm, &chi, Delta::Last, HomMethod::Full).unwrap();
            assert_eq!(full.maps, dual_seed.maps, "{chi}");
            assert_eq!(seed.maps, back.maps, "{chi}");
            let expected = usize::from(chi == CharSpec::O2nDet(0));
            assert_eq!(full.dim(), expected);
        }
    }

    #[test]
    fn homs_are_equivariant() {
        let t = tau("1,1");
        let tt = tensor(&t, &tau("1,0")).unwrap();
        let h = equivariant_homs(&t, &tt, &CharSpec::O2nDet(1), Delta::Last, HomMethod::Auto).unwrap();
        for f in &h.maps {
            for (a, b) in t.lie_actions().iter().zip(tt.lie_actions()) {
                assert_eq!(f.mul(a), b.mul(f));
            }
            for g in crate::lie::catalog(2) {
                assert_eq!(f.mul(t.element(g)), tt.element(g).mul(f).scale(&GaussRat::from_int(g.det(2))));
            }
        }
    }
}
