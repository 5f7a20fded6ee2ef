//! Irreducible modules built by cyclic closure inside a polynomial ambient.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::label::{weyl_dim_gl, IrrepLabel, OLabel};
use crate::lie::{catalog, lie_basis, negative_system, Algebra, Delta, GroupKind, Matrix, Torus};
use crate::linalg::{Echelon, GaussRat, SparseMat, SparseVec};

use super::ambient::Ambient;
use super::functors::twist_by_det;
use super::module::{Grading, RepModule};

/// Which torus groups the ambient monomials during closure.
#[derive(Clone, Copy)]
enum WeightKind {
    Gamma,
    To,
}

/// A subspace of an ambient space spanned by weight vectors, kept in reduced
/// form per weight.
struct WeightedSpan<'a> {
    amb: &'a Ambient,
    kind: WeightKind,
    spaces: BTreeMap<Vec<i64>, Echelon>,
    total: usize,
}

impl<'a> WeightedSpan<'a> {
    fn new(amb: &'a Ambient, kind: WeightKind) -> Self {
        WeightedSpan { amb, kind, spaces: BTreeMap::new(), total: 0 }
    }

    fn weight_of_index(&self, k: usize) -> Vec<i64> {
        match self.kind {
            WeightKind::Gamma => self.amb.gamma_weight(k),
            WeightKind::To => self.amb.to_weight(k),
        }
    }

    /// Splits a vector into its weight components.
    fn split(&self, v: &SparseVec) -> BTreeMap<Vec<i64>, SparseVec> {
        let mut parts: BTreeMap<Vec<i64>, Vec<(usize, GaussRat)>> = BTreeMap::new();
        for (k, x) in v.iter() {
            parts.entry(self.weight_of_index(k)).or_default().push((k, x.clone()));
        }
        parts.into_iter().map(|(w, p)| (w, SparseVec::from_pairs(v.len(), p))).collect()
    }

    /// Inserts every weight component; returns the components that were new.
    fn insert(&mut self, v: &SparseVec) -> Vec<SparseVec> {
        let mut fresh = Vec::new();
        for (w, part) in self.split(v) {
            let e = self.spaces.entry(w).or_insert_with(|| Echelon::new(self.amb.dim()));
            if e.insert(&part) {
                self.total += 1;
                fresh.push(part);
            }
        }
        fresh
    }
}

/// The closure of `seed` under `lie_ops` (derivations) and `group_ops`,
/// aborting once the dimension exceeds `bound`.
fn cyclic_closure<'a>(
    amb: &'a Ambient,
    kind: WeightKind,
    seed: SparseVec,
    lie_ops: &[Matrix],
    group_ops: &[Matrix],
    bound: usize,
) -> Result<WeightedSpan<'a>> {
    let mut span = WeightedSpan::new(amb, kind);
    let mut queue: VecDeque<SparseVec> = span.insert(&seed).into();
    while let Some(v) = queue.pop_front() {
        let images = lie_ops.iter().map(|x| amb.apply_lie(x, &v)).chain(group_ops.iter().map(|g| amb.apply_group(g, &v)));
        for img in images {
            if img.is_zero() {
                continue;
            }
            for fresh in span.insert(&img) {
                if span.total > bound {
                    return Err(Error::Inconsistent(format!("cyclic closure exceeded the expected dimension {bound}")));
                }
                queue.push_back(fresh);
            }
        }
    }
    Ok(span)
}

/// A module basis extracted from a closed span, ordered by pivot monomial.
struct Realized {
    basis: Vec<SparseVec>,
    weights: Vec<Vec<i64>>,
    /// `(weight, pivot monomial) → basis index`.
    locate: BTreeMap<Vec<i64>, Vec<(usize, usize)>>,
    span_rows: BTreeMap<Vec<i64>, Echelon>,
}

impl Realized {
    fn from_span(span: WeightedSpan<'_>) -> Self {
        let mut items: Vec<(usize, Vec<i64>, SparseVec)> = Vec::new();
        for (w, e) in &span.spaces {
            for (row, piv) in e.rows().iter().zip(e.pivots()) {
                items.push((*piv, w.clone(), row.clone()));
            }
        }
        items.sort_by_key(|(p, _, _)| *p);
        let mut locate: BTreeMap<Vec<i64>, Vec<(usize, usize)>> = BTreeMap::new();
        for (k, (p, w, _)) in items.iter().enumerate() {
            locate.entry(w.clone()).or_default().push((*p, k));
        }
        Realized {
            weights: items.iter().map(|(_, w, _)| w.clone()).collect(),
            basis: items.into_iter().map(|(_, _, v)| v).collect(),
            locate,
            span_rows: span.spaces,
        }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of an ambient vector in the module basis.
    fn coordinates(&self, amb: &Ambient, kind: WeightKind, v: &SparseVec) -> Result<SparseVec> {
        let helper = WeightedSpan { amb, kind, spaces: BTreeMap::new(), total: 0 };
        let mut out = Vec::new();
        for (w, part) in helper.split(v) {
            let (Some(e), Some(loc)) = (self.span_rows.get(&w), self.locate.get(&w)) else {
                return Err(Error::Inconsistent("vector leaves the module".into()));
            };
            if !e.reduce(&part).is_zero() {
                return Err(Error::Inconsistent("vector leaves the module".into()));
            }
            for (piv, idx) in loc {
                if let Some(c) = part.get_ref(*piv) {
                    out.push((*idx, c.clone()));
                }
            }
        }
        Ok(SparseVec::from_pairs(self.dim(), out))
    }

    fn matrix_of(&self, amb: &Ambient, kind: WeightKind, f: impl Fn(&SparseVec) -> SparseVec) -> Result<SparseMat> {
        let cols: Vec<SparseVec> =
            self.basis.iter().map(|b| self.coordinates(amb, kind, &f(b))).collect::<Result<_>>()?;
        Ok(SparseMat::from_columns(self.dim(), &cols))
    }
}

fn shape_of(partition: &[i64]) -> Vec<usize> {
    let mut shape = Vec::new();
    for k in 0..partition.len() {
        let next = partition.get(k + 1).copied().unwrap_or(0);
        shape.push((partition[k] - next) as usize);
    }
    while shape.last() == Some(&0) {
        shape.pop();
    }
    shape
}

/// The irreducible `GL(2n)`-module `F_μ` of highest weight `μ`, realized on
/// the γ-torus weight basis.
pub fn build_gl_irrep(mu: &[i64]) -> Result<RepModule> {
    let m = mu.len();
    if m == 0 || !m.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("weight {mu:?} must have even positive length")));
    }
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NonDominant(format!("{mu:?}")));
    }
    let n = m / 2;
    let k = mu[m - 1];
    let partition: Vec<i64> = mu.iter().map(|x| x - k).collect();
    let amb = Ambient::new(n, &shape_of(&partition));
    let lowering: Vec<Matrix> = (0..m - 1).map(|j| Matrix::unit(m, j + 1, j)).collect();
    let bound = weyl_dim_gl(mu);
    let span = cyclic_closure(&amb, WeightKind::Gamma, amb.highest_monomial(), &lowering, &[], bound)?;
    let real = Realized::from_span(span);
    if real.dim() != bound {
        return Err(Error::Inconsistent(format!("F{mu:?} has dimension {} instead of {bound}", real.dim())));
    }
    let gens = lie_basis(GroupKind::Gl2n, n);
    let mut lie = Vec::with_capacity(gens.len());
    for g in &gens {
        let mut a = real.matrix_of(&amb, WeightKind::Gamma, |v| amb.apply_lie(&g.frame, v))?;
        if k != 0 {
            a = a.add_scalar(&(&g.frame.trace() * &GaussRat::from_int(k)));
        }
        lie.push(a);
    }
    let mut elements = BTreeMap::new();
    for e in catalog(n) {
        let gf = e.frame_matrix(n);
        let mut a = real.matrix_of(&amb, WeightKind::Gamma, |v| amb.apply_group(&gf, v))?;
        if k % 2 != 0 {
            a = a.scale(&GaussRat::from_int(e.det(n)));
        }
        elements.insert(e, a);
    }
    let weights: Vec<Vec<i64>> = real.weights.iter().map(|w| w.iter().map(|x| x + k).collect()).collect();
    let grading = Some(Grading { torus: Torus::Gamma(m), weights });
    let mut module = RepModule::assemble(
        format!("F{mu:?}"),
        n,
        GroupKind::Gl2n,
        real.dim(),
        lie,
        elements,
        grading,
        format!("{} ⊗ det^{k}", amb.describe()),
    )?;
    module.det_twist = k;
    Ok(module.with_irreducible(Some(IrrepLabel::Gl(mu.to_vec()))))
}

/// Ambient vectors of the module basis of `F_μ`, for callers that need the
/// explicit realization (e.g. the highest weight vector).
pub fn gl_irrep_ambient_dim(mu: &[i64]) -> usize {
    let k = *mu.last().unwrap_or(&0);
    let partition: Vec<i64> = mu.iter().map(|x| x - k).collect();
    Ambient::new(mu.len() / 2, &shape_of(&partition)).dim()
}

/// The irreducible `O(2n)`-module `τ_l`.
///
/// For `l_n ≥ 0` this is the cyclic span, under `so(2n)` and the reflection
/// `delta`, of the highest weight vector of `F_{(l, 0, …, 0)}`. A label ending
/// in `−1/2` is realized as `det ⊗ τ_{(l_1, …, l_{n−1}, 0)}`.
pub fn build_o_irrep(label: &OLabel, delta: Delta) -> Result<RepModule> {
    if label.minus_half() {
        let base = build_o_irrep(&label.untwisted(), delta)?;
        return Ok(twist_by_det(&base, 1)
            .with_name(format!("tau{label}"))
            .with_irreducible(Some(IrrepLabel::O(label.clone()))));
    }
    let n = label.n();
    let m = 2 * n;
    let amb = Ambient::new(n, &shape_of(label.parts()));
    let lowering: Vec<Matrix> = negative_system(Algebra::So, n).into_iter().map(|r| r.vector).collect();
    let group_ops = vec![delta.elt(n).frame_matrix(n)];
    let bound = label.dim();
    let span = cyclic_closure(&amb, WeightKind::To, amb.highest_monomial(), &lowering, &group_ops, bound)?;
    let real = Realized::from_span(span);
    if real.dim() != bound {
        return Err(Error::Inconsistent(format!("tau{label} has dimension {} instead of {bound}", real.dim())));
    }
    let gens = lie_basis(GroupKind::O2n, n);
    let lie: Vec<SparseMat> = gens
        .iter()
        .map(|g| real.matrix_of(&amb, WeightKind::To, |v| amb.apply_lie(&g.frame, v)))
        .collect::<Result<_>>()?;
    let mut elements = BTreeMap::new();
    for e in catalog(n) {
        let gf = e.frame_matrix(n);
        elements.insert(e, real.matrix_of(&amb, WeightKind::To, |v| amb.apply_group(&gf, v))?);
    }
    let grading = Some(Grading { torus: Torus::TO(n), weights: real.weights.clone() });
    debug_assert_eq!(m, 2 * n);
    let module = RepModule::assemble(
        format!("tau{label}"),
        n,
        GroupKind::O2n,
        real.dim(),
        lie,
        elements,
        grading,
        amb.describe(),
    )?;
    Ok(module.with_irreducible(Some(IrrepLabel::O(label.clone()))))
}

/// The one-dimensional module `det^k` of `GL(2n)`.
pub fn det_character_module(n: usize, k: i64) -> Result<RepModule> {
    let gens = lie_basis(GroupKind::Gl2n, n);
    let lie = gens.iter().map(|g| SparseMat::scalar(1, &(&g.frame.trace() * &GaussRat::from_int(k)))).collect();
    let elements = catalog(n)
        .into_iter()
        .map(|e| (e, SparseMat::scalar(1, &GaussRat::from_int(if k % 2 == 0 { 1 } else { e.det(n) }))))
        .collect();
    let grading = Some(Grading { torus: Torus::Gamma(2 * n), weights: vec![vec![k; 2 * n]] });
    let mut module =
        RepModule::assemble(format!("det^{k}"), n, GroupKind::Gl2n, 1, lie, elements, grading, "C".into())?;
    module.det_twist = k;
    Ok(module.with_irreducible(Some(IrrepLabel::Gl(vec![k; 2 * n]))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_gl_irreps() {
        let triv = build_gl_irrep(&[0, 0]).unwrap();
        assert_eq!(triv.dim(), 1);
        let adj = build_gl_irrep(&[1, -1]).unwrap();
        assert_eq!(adj.dim(), 3);
        adj.check_brackets(usize::MAX).unwrap();
        adj.check_group_compatibility().unwrap();
        adj.check_grading().unwrap();
        let f = build_gl_irrep(&[0, 0, -2, -2]).unwrap();
        assert_eq!(f.dim(), 20);
        f.check_brackets(40).unwrap();
        f.check_grading().unwrap();
        assert!(build_gl_irrep(&[0, 1]).is_err());
    }

    #[test]
    #[ignore]
    fn timing_large() {
        let t = std::time::Instant::now();
        let f = build_gl_irrep(&[3, 2, -2, -3]).unwrap();
        eprintln!("F dim {} in {:?}", f.dim(), t.elapsed());
        let t = std::time::Instant::now();
        let o = build_o_irrep(&"6,4".parse().unwrap(), Delta::Last).unwrap();
        eprintln!("tau dim {} in {:?}", o.dim(), t.elapsed());
    }

    #[test]
    fn small_o_irreps() {
        let t1 = build_o_irrep(&"1".parse().unwrap(), Delta::Last).unwrap();
        assert_eq!(t1.dim(), 2);
        let mut ws: Vec<Vec<i64>> = t1.grading().unwrap().weights.clone();
        ws.sort();
        assert_eq!(ws, vec![vec![-1], vec![1]]);
        let det = build_o_irrep(&"-1/2".parse().unwrap(), Delta::Last).unwrap();
        assert_eq!(det.dim(), 1);
        let t22 = build_o_irrep(&"2,2".parse().unwrap(), Delta::Last).unwrap();
        assert_eq!(t22.dim(), 10);
        t22.check_brackets(usize::MAX).unwrap();
        t22.check_group_compatibility().unwrap();
        t22.check_grading().unwrap();
    }
}
