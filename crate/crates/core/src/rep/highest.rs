//! Highest-weight vectors, cyclic submodules and submodule extraction.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::lie::{gamma_to_to, positive_system, Algebra, Delta, GroupKind, Torus};
use crate::linalg::{null_space, Echelon, SparseMat, SparseVec};

use super::module::{Grading, RepModule};

/// The grading of `m` for `torus`, converting γ-weights to T_O-weights when
/// needed.
pub fn grading_on(m: &RepModule, torus: Torus) -> Option<Grading> {
    let g = m.grading()?;
    if g.torus == torus {
        return Some(g.clone());
    }
    match (g.torus, torus) {
        (Torus::Gamma(k), Torus::TO(n)) if k == 2 * n => {
            Some(Grading { torus, weights: g.weights.iter().map(|w| gamma_to_to(n, w)).collect() })
        }
        _ => None,
    }
}

fn borel_torus(m: &RepModule, algebra: Algebra) -> Torus {
    match algebra {
        Algebra::Gl => Torus::Gamma(2 * m.n()),
        Algebra::So => Torus::TO(m.n()),
    }
}

/// Joint kernel of the positive root vectors of `b_{2n}` (`Algebra::Gl`) or
/// `b_o` (`Algebra::So`), split by torus weight.
pub fn highest_vectors(m: &RepModule, algebra: Algebra) -> Result<BTreeMap<Vec<i64>, Vec<SparseVec>>> {
    let torus = borel_torus(m, algebra);
    let grading = grading_on(m, torus)
        .ok_or_else(|| Error::TorusMismatch(torus.tag(), format!("{} carries no compatible grading", m.name())))?;
    let raising: Vec<SparseMat> =
        positive_system(algebra, m.n()).iter().map(|r| m.act(&r.vector)).collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for (w, idx) in grading.spaces() {
        let kernel = if raising.is_empty() {
            (0..idx.len()).map(|k| SparseVec::unit(idx.len(), k)).collect()
        } else {
            let blocks: Vec<SparseMat> = raising.iter().map(|r| r.submatrix(&(0..m.dim()).collect::<Vec<_>>(), &idx)).collect();
            null_space(&SparseMat::vstack(&blocks))
        };
        if kernel.is_empty() {
            continue;
        }
        let lifted = kernel
            .iter()
            .map(|v| SparseVec::from_pairs(m.dim(), v.iter().map(|(k, c)| (idx[k], c.clone()))))
            .collect();
        out.insert(w, lifted);
    }
    Ok(out)
}

/// Highest vectors of a single weight (empty when the weight does not occur).
pub fn highest_of_weight(m: &RepModule, algebra: Algebra, weight: &[i64]) -> Result<Vec<SparseVec>> {
    Ok(highest_vectors(m, algebra)?.remove(weight).unwrap_or_default())
}

/// The smallest subspace containing `seeds` and stable under the Lie
/// generators of `m` and the component representatives its group imposes.
/// Returned in reduced echelon form.
pub fn generated_submodule(m: &RepModule, seeds: &[SparseVec], delta: Delta) -> Vec<SparseVec> {
    let mut ops: Vec<&SparseMat> = m.lie_actions().iter().collect();
    for g in m.constraint_elements(delta) {
        ops.push(m.element(g));
    }
    let mut span = Echelon::new(m.dim());
    let mut queue = VecDeque::new();
    for s in seeds {
        if span.insert(s) {
            queue.push_back(s.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for op in &ops {
            let img = op.mul_vec(&v);
            if span.insert(&img) {
                queue.push_back(img);
            }
        }
    }
    span.rows().to_vec()
}

/// A torus weight basis of `span(basis)` with its grading, or `basis`
/// unchanged when `m` has no grading for the torus of its group.
fn weight_adapted(m: &RepModule, basis: &[SparseVec]) -> Result<(Vec<SparseVec>, Option<Grading>)> {
    let torus = match m.kind() {
        GroupKind::Gl2n => Torus::Gamma(2 * m.n()),
        GroupKind::O2n => Torus::TO(m.n()),
        _ => return Ok((basis.to_vec(), None)),
    };
    let Some(grading) = grading_on(m, torus) else {
        return Ok((basis.to_vec(), None));
    };
    let mut out = Vec::new();
    let mut weights = Vec::new();
    for (w, idx) in grading.spaces() {
        let mut e = Echelon::new(m.dim());
        for b in basis {
            let part = SparseVec::from_pairs(m.dim(), b.iter().filter(|(k, _)| idx.binary_search(k).is_ok()).map(|(k, c)| (k, c.clone())));
            e.insert(&part);
        }
        for row in e.rows() {
            out.push(row.clone());
            weights.push(w.clone());
        }
    }
    if out.len() != basis.len() {
        return Err(Error::Inconsistent("subspace is not stable under the torus".into()));
    }
    Ok((out, Some(Grading { torus, weights })))
}

/// The module structure on an invariant subspace spanned by `basis`.
///
/// When `m` carries a grading for the maximal torus of its own group, the
/// span is rebased onto torus weight vectors and the submodule keeps that
/// grading; the returned basis then differs from `basis`.
pub fn submodule(m: &RepModule, basis: &[SparseVec], name: impl Into<String>) -> Result<RepModule> {
    let (basis, grading) = weight_adapted(m, basis)?;
    let basis = &basis[..];
    let mut e = Echelon::with_tracking(m.dim());
    for b in basis {
        if !e.insert(b) {
            return Err(Error::Inconsistent("submodule basis is dependent".into()));
        }
    }
    let dim = basis.len();
    let restrict = |a: &SparseMat| -> Result<SparseMat> {
        let cols: Vec<SparseVec> = basis
            .iter()
            .map(|b| e.express(&a.mul_vec(b)).ok_or_else(|| Error::Inconsistent("subspace is not invariant".into())))
            .collect::<Result<_>>()?;
        Ok(SparseMat::from_columns(dim, &cols))
    };
    let lie = m.lie_actions().iter().map(restrict).collect::<Result<Vec<_>>>()?;
    let elements = m.elements().iter().map(|(g, a)| Ok((*g, restrict(a)?))).collect::<Result<BTreeMap<_, _>>>()?;
    let mut out = RepModule::assemble_with(
        name.into(),
        m.n(),
        m.kind(),
        dim,
        std::sync::Arc::clone(&m.gens),
        lie,
        elements,
        grading,
        format!("subspace of {}", m.ambient()),
    )?;
    out.det_twist = m.det_twist();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::GaussRat;
    use crate::rep::{build_gl_irrep, build_o_irrep, restrict, tensor};

    #[test]
    fn gl_highest_vector_is_unique() {
        let f = build_gl_irrep(&[1, -1]).unwrap();
        let hv = highest_vectors(&f, Algebra::Gl).unwrap();
        assert_eq!(hv.len(), 1);
        assert_eq!(hv[&vec![1, -1]].len(), 1);
    }

    #[test]
    fn tensor_square_top_weight() {
        let t = build_o_irrep(&"2".parse().unwrap(), Delta::Last).unwrap();
        let tt = tensor(&t, &t).unwrap();
        let hv = highest_vectors(&tt, Algebra::So).unwrap();
        assert_eq!(hv[&vec![4]].len(), 1);
    }

    #[test]
    fn cyclic_submodule_and_extraction() {
        let f = build_gl_irrep(&[1, 0, 0, -1]).unwrap();
        let r = restrict(&f, GroupKind::O2n).unwrap();
        let hv = highest_of_weight(&r, Algebra::So, &[2, 0]).unwrap();
        let span = generated_submodule(&r, &hv, Delta::Last);
        assert_eq!(span.len(), 9);
        let sub = submodule(&r, &span, "copy").unwrap();
        sub.check_brackets(usize::MAX).unwrap();
        sub.check_group_compatibility().unwrap();
        let bogus = vec![SparseVec::unit(15, 0).scale(&GaussRat::from_int(1))];
        assert!(submodule(&r, &bogus, "bogus").is_err());
    }
}
