//! Tensor products, exterior powers, duals, determinant twists and restriction.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::label::IrrepLabel;
use crate::lie::{gamma_to_to, lie_basis, GroupKind, Torus};
use crate::linalg::{Accumulator, GaussRat, SparseMat, SparseVec};

use super::module::{Grading, RepModule};

fn same_group(a: &RepModule, b: &RepModule) -> Result<()> {
    if a.n != b.n || a.kind != b.kind {
        return Err(Error::ActionMismatch(format!(
            "cannot combine a {} module of rank {} with a {} module of rank {}",
            a.kind.name(),
            a.n,
            b.kind.name(),
            b.n
        )));
    }
    Ok(())
}

fn combine_gradings(a: &RepModule, b: &RepModule) -> Option<Grading> {
    let (ga, gb) = (a.grading.as_ref()?, b.grading.as_ref()?);
    if ga.torus != gb.torus {
        return None;
    }
    let mut weights = Vec::with_capacity(a.dim * b.dim);
    for wa in &ga.weights {
        for wb in &gb.weights {
            weights.push(wa.iter().zip(wb).map(|(x, y)| x + y).collect());
        }
    }
    Some(Grading { torus: ga.torus, weights })
}

/// `a ⊗ b` in the basis order of [`tensor`] (index `i·dim b + j`).
pub fn tensor_vec(a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut entries = Vec::new();
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            entries.push((i * b.len() + j, x * y));
        }
    }
    SparseVec::from_pairs(a.len() * b.len(), entries)
}

/// `a ⊗ b` with basis `a_i ⊗ b_j` at index `i·dim(b) + j`.
pub fn tensor(a: &RepModule, b: &RepModule) -> Result<RepModule> {
    same_group(a, b)?;
    let ia = SparseMat::identity(a.dim);
    let ib = SparseMat::identity(b.dim);
    let lie = a.lie.iter().zip(&b.lie).map(|(x, y)| x.kron(&ib).add(&ia.kron(y))).collect();
    let elements = a.elements.iter().map(|(g, x)| (*g, x.kron(&b.elements[g]))).collect();
    let mut out = RepModule::assemble_with(
        format!("{} ⊗ {}", a.name, b.name),
        a.n,
        a.kind,
        a.dim * b.dim,
        Arc::clone(&a.gens),
        lie,
        elements,
        combine_gradings(a, b),
        format!("({}) ⊗ ({})", a.ambient, b.ambient),
    )?;
    out.det_twist = a.det_twist + b.det_twist;
    Ok(out)
}

/// Sorted `p`-subsets of `0..dim` in lexicographic order.
pub(crate) fn subsets(dim: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, dim: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for k in start..dim {
            if dim - k < p - cur.len() {
                break;
            }
            cur.push(k);
            go(k + 1, dim, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, dim, p, &mut Vec::new(), &mut out);
    out
}

/// Inserts `j` into the sorted set `set`, returning the new set and the sign
/// of moving `v_j` from the far right into position.
fn wedge_right(set: &[usize], j: usize) -> Option<(Vec<usize>, bool)> {
    let pos = match set.binary_search(&j) {
        Ok(_) => return None,
        Err(p) => p,
    };
    let mut out = set.to_vec();
    out.insert(pos, j);
    Some((out, (set.len() - pos) % 2 == 1))
}

struct Wedge<'a> {
    dim: usize,
    sets: &'a [Vec<usize>],
    index: HashMap<&'a [usize], usize>,
}

impl<'a> Wedge<'a> {
    fn new(sets: &'a [Vec<usize>]) -> Self {
        let index = sets.iter().enumerate().map(|(k, s)| (s.as_slice(), k)).collect();
        Wedge { dim: sets.len(), sets, index }
    }

    /// Derivation action of `x` on `∧^p`.
    fn lie(&self, x: &SparseMat) -> SparseMat {
        let xt = x.transpose();
        let mut cols = Vec::with_capacity(self.dim);
        for s in self.sets {
            let mut acc = Accumulator::new(self.dim);
            for (r, &j) in s.iter().enumerate() {
                for (k, c) in xt.row(j).iter() {
                    if k == j {
                        acc.add_entry(self.index[s.as_slice()], c);
                        continue;
                    }
                    let mut rest: Vec<usize> = s.clone();
                    rest.remove(r);
                    // v_k takes the place of v_j at position r; count the
                    // entries it must pass to reach its sorted position.
                    let Err(pos) = rest.binary_search(&k) else {
                        continue;
                    };
                    let moves = pos.abs_diff(r);
                    rest.insert(pos, k);
                    let val = if moves % 2 == 1 { -c.clone() } else { c.clone() };
                    acc.add_entry(self.index[rest.as_slice()], &val);
                }
            }
            cols.push(acc.finish());
        }
        SparseMat::from_columns(self.dim, &cols)
    }

    /// `∧^p g`: column `S` is `Σ_T det(g[T, S]) v_T`.
    fn group(&self, g: &SparseMat) -> SparseMat {
        let gt = g.transpose();
        let mut cols = Vec::with_capacity(self.dim);
        for s in self.sets {
            let mut terms: BTreeMap<Vec<usize>, GaussRat> = BTreeMap::new();
            terms.insert(Vec::new(), GaussRat::one());
            for &a in s {
                let mut next: BTreeMap<Vec<usize>, GaussRat> = BTreeMap::new();
                for (set, c) in &terms {
                    for (j, gj) in gt.row(a).iter() {
                        if let Some((ns, neg)) = wedge_right(set, j) {
                            let v = c * gj;
                            *next.entry(ns).or_default() += &if neg { -v } else { v };
                        }
                    }
                }
                terms = next.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            }
            cols.push(SparseVec::from_pairs(self.dim, terms.into_iter().map(|(t, c)| (self.index[t.as_slice()], c))));
        }
        SparseMat::from_columns(self.dim, &cols)
    }
}

/// `∧^p M` with basis `v_S = v_{s_1} ∧ … ∧ v_{s_p}` over sorted `S` in
/// lexicographic order.
pub fn exterior_power(m: &RepModule, p: usize) -> Result<RepModule> {
    if p > m.dim {
        return Err(Error::DegreeOutOfRange { p, dim: m.dim });
    }
    let sets = subsets(m.dim, p);
    let w = Wedge::new(&sets);
    let lie = m.lie.iter().map(|x| w.lie(x)).collect();
    let elements = m.elements.iter().map(|(g, x)| (*g, w.group(x))).collect();
    let grading = m.grading.as_ref().map(|g| Grading {
        torus: g.torus,
        weights: sets
            .iter()
            .map(|s| {
                let mut acc = vec![0i64; g.torus.rank()];
                for &k in s {
                    for (a, x) in acc.iter_mut().zip(&g.weights[k]) {
                        *a += x;
                    }
                }
                acc
            })
            .collect(),
    });
    let mut out = RepModule::assemble_with(
        format!("Λ^{p}({})", m.name),
        m.n,
        m.kind,
        sets.len(),
        Arc::clone(&m.gens),
        lie,
        elements,
        grading,
        format!("Λ^{p}({})", m.ambient),
    )?;
    out.det_twist = m.det_twist * p as i64;
    Ok(out)
}

/// The contragredient module on the dual basis.
pub fn dual(m: &RepModule) -> RepModule {
    let minus = GaussRat::from_int(-1);
    let lie = m.lie.iter().map(|x| x.transpose().scale(&minus)).collect();
    let elements = m.elements.keys().map(|g| (*g, m.elements[&g.inverse()].transpose())).collect();
    let grading = m.grading.as_ref().map(|g| Grading {
        torus: g.torus,
        weights: g.weights.iter().map(|w| w.iter().map(|x| -x).collect()).collect(),
    });
    let irreducible = m.irreducible.as_ref().map(|l| match l {
        IrrepLabel::Gl(mu) => IrrepLabel::Gl(mu.iter().rev().map(|x| -x).collect()),
        IrrepLabel::O(l) => IrrepLabel::O(l.clone()),
    });
    let mut out = RepModule::assemble_with(
        format!("({})*", m.name),
        m.n,
        m.kind,
        m.dim,
        Arc::clone(&m.gens),
        lie,
        elements,
        grading,
        format!("({})*", m.ambient),
    )
    .expect("dual preserves shapes");
    out.det_twist = -m.det_twist;
    out.irreducible = irreducible;
    out
}

/// `M ⊗ det^k`, where `det` is the determinant of the defining `2n`-dimensional
/// representation.
pub fn twist_by_det(m: &RepModule, k: i64) -> RepModule {
    let kk = GaussRat::from_int(k);
    let lie = m.gens.iter().zip(&m.lie).map(|(g, x)| x.add_scalar(&(&g.frame.trace() * &kk))).collect();
    let elements = m
        .elements
        .iter()
        .map(|(g, x)| (*g, if k % 2 == 0 { x.clone() } else { x.scale(&GaussRat::from_int(g.det(m.n))) }))
        .collect();
    let grading = m.grading.as_ref().map(|g| match g.torus {
        Torus::Gamma(_) => Grading { torus: g.torus, weights: g.weights.iter().map(|w| w.iter().map(|x| x + k).collect()).collect() },
        _ => g.clone(),
    });
    let mut out = RepModule::assemble_with(
        format!("{} ⊗ det^{k}", m.name),
        m.n,
        m.kind,
        m.dim,
        Arc::clone(&m.gens),
        lie,
        elements,
        grading,
        format!("{} ⊗ det^{k}", m.ambient),
    )
    .expect("twist preserves shapes");
    out.det_twist = m.det_twist + k;
    out.irreducible = match &m.irreducible {
        Some(IrrepLabel::Gl(mu)) => Some(IrrepLabel::Gl(mu.iter().map(|x| x + k).collect())),
        _ => None,
    };
    out
}

/// Restriction to a subgroup. Weights are carried over when the subgroup's
/// torus is determined by the parent grading.
pub fn restrict(m: &RepModule, sub: GroupKind) -> Result<RepModule> {
    if !sub.is_subgroup_of(m.kind) {
        return Err(Error::ActionMismatch(format!("{} is not a subgroup of {}", sub.name(), m.kind.name())));
    }
    let gens = lie_basis(sub, m.n);
    let lie = gens.iter().map(|g| m.act(&g.frame)).collect::<Result<Vec<_>>>()?;
    let grading = match (m.grading.as_ref(), sub.grading_torus(m.n)) {
        (Some(g), Some(t)) if g.torus == t => Some(g.clone()),
        (Some(g), Some(Torus::TO(n))) if g.torus == Torus::Gamma(2 * n) => {
            Some(Grading { torus: Torus::TO(n), weights: g.weights.iter().map(|w| gamma_to_to(n, w)).collect() })
        }
        _ => None,
    };
    let mut out = RepModule::assemble_with(
        format!("{}|{}", m.name, sub.name()),
        m.n,
        sub,
        m.dim,
        Arc::new(gens),
        lie,
        m.elements.clone(),
        grading,
        m.ambient.clone(),
    )?;
    out.det_twist = m.det_twist;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Delta;
    use crate::rep::build::{build_gl_irrep, build_o_irrep};

    #[test]
    fn exterior_square_of_standard() {
        let v = build_gl_irrep(&[1, 0, 0, 0]).unwrap();
        let w = exterior_power(&v, 2).unwrap();
        assert_eq!(w.dim(), 6);
        w.check_brackets(usize::MAX).unwrap();
        w.check_group_compatibility().unwrap();
        w.check_grading().unwrap();
        let top = exterior_power(&v, 4).unwrap();
        // Λ⁴ of the standard representation is det
        for (g, x) in &top.elements {
            assert_eq!(x.get(0, 0), GaussRat::from_int(g.det(2)));
        }
    }

    #[test]
    fn tensor_and_dual_are_modules() {
        let t = build_o_irrep(&"1".parse().unwrap(), Delta::Last).unwrap();
        let tt = tensor(&t, &dual(&t)).unwrap();
        assert_eq!(tt.dim(), 4);
        tt.check_brackets(usize::MAX).unwrap();
        tt.check_group_compatibility().unwrap();
        tt.check_grading().unwrap();
    }

    #[test]
    fn restriction_carries_weights() {
        let f = build_gl_irrep(&[1, 0, 0, -1]).unwrap();
        let r = restrict(&f, GroupKind::O2n).unwrap();
        r.check_brackets(usize::MAX).unwrap();
        r.check_grading().unwrap();
        let g = restrict(&f, GroupKind::GlnGln).unwrap();
        g.check_brackets(usize::MAX).unwrap();
        g.check_group_compatibility().unwrap();
        let tw = twist_by_det(&f, 2);
        tw.check_brackets(usize::MAX).unwrap();
        tw.check_grading().unwrap();
    }
}
