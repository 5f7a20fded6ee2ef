//! Isotypic decomposition of `O(2n)`-modules.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::label::OLabel;
use crate::lie::{Algebra, Delta, GroupKind};
use crate::linalg::{null_space, Echelon, GaussRat, SparseMat, SparseVec};

use super::build::build_o_irrep;
use super::functors::restrict;
use super::highest::{generated_submodule, highest_vectors};
use super::module::RepModule;

/// The decomposition of a module over `O(2n)`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// `(label, multiplicity)`, sorted by label.
    pub parts: Vec<(OLabel, usize)>,
    /// `b_o`-highest vectors spanning each isotypic component's highest space.
    pub highest: BTreeMap<OLabel, Vec<SparseVec>>,
}

impl Decomposition {
    pub fn multiplicity(&self, label: &OLabel) -> usize {
        self.parts.iter().find(|(l, _)| l == label).map_or(0, |(_, k)| *k)
    }
}

fn is_dominant_so(w: &[i64]) -> bool {
    let n = w.len();
    w.windows(2).all(|p| p[0] >= p[1]) && (n < 2 || w[n - 2] >= w[n - 1].abs())
}

/// Matrix of `op` on the span of `vectors`, which must be `op`-stable.
fn restricted_matrix(op: &SparseMat, vectors: &[SparseVec]) -> Result<SparseMat> {
    let dim = vectors.first().map_or(0, |v| v.len());
    let mut e = Echelon::with_tracking(dim);
    for v in vectors {
        e.insert(v);
    }
    let cols: Vec<SparseVec> = vectors
        .iter()
        .map(|v| e.express(&op.mul_vec(v)).ok_or_else(|| Error::Inconsistent("subspace is not stable".into())))
        .collect::<Result<_>>()?;
    Ok(SparseMat::from_columns(vectors.len(), &cols))
}

fn combine(vectors: &[SparseVec], coeffs: &SparseVec) -> SparseVec {
    let dim = vectors[0].len();
    let mut acc = crate::linalg::Accumulator::new(dim);
    for (k, c) in coeffs.iter() {
        acc.add_scaled(c, &vectors[k]);
    }
    acc.finish()
}

/// Splits the highest space of a weight `(l', 0)` into the `(l', 0)` and
/// `(l', −1/2)` parts using the reflection negating coordinate `n + 1`, which
/// normalizes `b_o` and acts by `+1` resp. `−1` on the highest line.
fn split_by_mid_reflection(m: &RepModule, hv: &[SparseVec]) -> Result<(Vec<SparseVec>, Vec<SparseVec>)> {
    let d = restricted_matrix(m.element(Delta::Mid.elt(m.n())), hv)?;
    let one = GaussRat::one();
    let plus = null_space(&d.add_scalar(&-one.clone()));
    let minus = null_space(&d.add_scalar(&one));
    if plus.len() + minus.len() != hv.len() {
        return Err(Error::Inconsistent("reflection is not diagonalizable on the highest space".into()));
    }
    Ok((plus.iter().map(|c| combine(hv, c)).collect(), minus.iter().map(|c| combine(hv, c)).collect()))
}

/// `(#(l',0), #(l',−1/2))` from the trace of a reflection on the
/// `SO(2n)`-isotypic component generated by `hv`.
fn split_by_trace(m: &RepModule, hv: &[SparseVec], label: &OLabel, refl: Delta) -> Result<(usize, usize)> {
    let g = refl.elt(m.n());
    let span = {
        let mut e = Echelon::new(m.dim());
        let mut queue: std::collections::VecDeque<SparseVec> = Default::default();
        for v in hv {
            if e.insert(v) {
                queue.push_back(v.clone());
            }
        }
        while let Some(v) = queue.pop_front() {
            for x in m.lie_actions() {
                let img = x.mul_vec(&v);
                if e.insert(&img) {
                    queue.push_back(img);
                }
            }
        }
        e.rows().to_vec()
    };
    let tr_w = restricted_matrix(m.element(g), &span)?.trace();
    let tau = build_o_irrep(label, Delta::Last)?;
    let tr_tau = tau.element(g).trace();
    if tr_tau.is_zero() {
        return Err(Error::Inconsistent(format!("{} has trace zero on tau{label}; use the mid reflection", g.label())));
    }
    let diff = (&tr_w * &tr_tau.inv().expect("nonzero"))
        .to_i64()
        .ok_or_else(|| Error::Inconsistent("reflection trace ratio is not an integer".into()))?;
    let total = hv.len() as i64;
    if (total + diff) % 2 != 0 || diff.abs() > total {
        return Err(Error::Inconsistent("reflection trace is incompatible with the highest space".into()));
    }
    Ok((((total + diff) / 2) as usize, ((total - diff) / 2) as usize))
}

/// Complete isotypic decomposition of `m` restricted to `O(2n)`.
///
/// Labels with `l_n > 0` are read off `b_o`-highest weight spaces (the pair
/// `(…, ±l_n)` must have equal dimension). For `l_n = 0` the two labels
/// `(l', 0)` and `(l', −1/2)` are separated with the reflection `method`:
/// `Delta::Mid` diagonalizes it on the highest space; the other reflections
/// use its trace on the `SO(2n)`-isotypic component.
pub fn multiplicity_decomposition(m: &RepModule, method: Delta) -> Result<Decomposition> {
    let restricted;
    let m = match m.kind() {
        GroupKind::O2n => m,
        GroupKind::Gl2n => {
            restricted = restrict(m, GroupKind::O2n)?;
            &restricted
        }
        other => return Err(Error::ActionMismatch(format!("cannot decompose a {} module over O(2n)", other.name()))),
    };
    let n = m.n();
    let hv = highest_vectors(m, Algebra::So)?;
    let mut parts = BTreeMap::new();
    let mut highest = BTreeMap::new();
    for (w, vs) in &hv {
        if !is_dominant_so(w) && !(n == 1 && w[0] < 0) {
            return Err(Error::Inconsistent(format!("highest vector of non-dominant weight {w:?}")));
        }
        let last = w[n - 1];
        if last < 0 {
            continue;
        }
        if last > 0 {
            let mut partner = w.clone();
            partner[n - 1] = -last;
            let k = hv.get(&partner).map_or(0, |p| p.len());
            if k != vs.len() {
                return Err(Error::Inconsistent(format!("highest spaces of {w:?} and {partner:?} differ in dimension")));
            }
            let label = OLabel::new(w.clone())?;
            parts.insert(label.clone(), vs.len());
            highest.insert(label, vs.clone());
            continue;
        }
        let plain = OLabel::new(w.clone())?;
        let twisted = OLabel::with_minus_half(w[..n - 1].to_vec())?;
        let (plus, minus) = split_by_mid_reflection(m, vs)?;
        let (a, b) = match method {
            Delta::Mid => (plus.len(), minus.len()),
            other => split_by_trace(m, vs, &plain, other)?,
        };
        for (label, count, vecs) in [(plain, a, plus), (twisted, b, minus)] {
            if count > 0 {
                parts.insert(label.clone(), count);
                highest.insert(label, vecs);
            }
        }
    }
    let total: usize = parts.iter().map(|(l, k)| l.dim() * k).sum();
    if total != m.dim() {
        return Err(Error::Inconsistent(format!("decomposition accounts for {total} of {} dimensions", m.dim())));
    }
    Ok(Decomposition { parts: parts.into_iter().collect(), highest })
}

/// Basis of the `τ_label`-isotypic component.
pub fn isotypic_component(m: &RepModule, d: &Decomposition, label: &OLabel) -> Vec<SparseVec> {
    match d.highest.get(label) {
        Some(hv) => generated_submodule(m, hv, Delta::Mid),
        None => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{build_gl_irrep, SymModel};

    fn labels(d: &Decomposition) -> Vec<(String, usize)> {
        d.parts.iter().map(|(l, k)| (l.to_string(), *k)).collect()
    }

    #[test]
    fn adjoint_of_gl2() {
        let f = build_gl_irrep(&[1, -1]).unwrap();
        for method in [Delta::Mid, Delta::Last, Delta::First] {
            let d = multiplicity_decomposition(&f, method).unwrap();
            assert_eq!(labels(&d), vec![("(-1/2)".to_string(), 1), ("(2)".to_string(), 1)]);
        }
    }

    #[test]
    fn s4_and_trivial() {
        let s = SymModel::new(2).unwrap();
        let d = multiplicity_decomposition(s.module(), Delta::Mid).unwrap();
        assert_eq!(labels(&d), vec![("(2,0)".to_string(), 1)]);
        let t = build_gl_irrep(&[0, 0, 0, 0]).unwrap();
        let d = multiplicity_decomposition(&t, Delta::Last).unwrap();
        assert_eq!(labels(&d), vec![("(0,0)".to_string(), 1)]);
    }

    #[test]
    fn descent_signs_of_built_irreps() {
        for s in ["0,0", "0,-1/2", "2,0", "2,-1/2", "1,1", "3,-1/2"] {
            let l: OLabel = s.parse().unwrap();
            let t = build_o_irrep(&l, Delta::Last).unwrap();
            for method in [Delta::Mid, Delta::Last, Delta::First] {
                let d = multiplicity_decomposition(&t, method).unwrap();
                assert_eq!(d.parts, vec![(l.clone(), 1)], "{s} via {method:?}");
            }
        }
    }
}
