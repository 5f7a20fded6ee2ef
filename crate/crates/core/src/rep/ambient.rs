//! Polynomial ambient spaces `⊗_k Sym^{m_k}(∧^k ℂ^{2n})` in frame coordinates.
//!
//! A basis element is a monomial in the wedges `f_S = f_{s_1} ∧ … ∧ f_{s_k}`
//! (`s_1 < … < s_k`), stored as the sorted list of subset bitmasks. The
//! irreducible `GL(2n)`-module with highest weight `μ⁺` sits inside the ambient
//! with `m_k = μ⁺_k − μ⁺_{k+1}`, generated by `Π_k (f_1 ∧ … ∧ f_k)^{m_k}`.

use std::collections::{BTreeMap, HashMap};

use crate::lie::{bar, Matrix};
use crate::linalg::{Accumulator, GaussRat, SparseVec};

pub(crate) type Monomial = Vec<u32>;

/// Index of all monomials of a fixed shape.
#[derive(Clone, Debug)]
pub(crate) struct Ambient {
    n: usize,
    shape: Vec<usize>,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

fn subsets_of_size(m: usize, k: usize) -> Vec<u32> {
    (0u32..(1u32 << m)).filter(|s| s.count_ones() as usize == k).collect()
}

/// All multisets of size `count` drawn from `items`, as sorted vectors.
fn multisets(items: &[u32], count: usize) -> Vec<Vec<u32>> {
    fn go(items: &[u32], start: usize, count: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if count == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, i, count - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, count, &mut Vec::new(), &mut out);
    out
}

impl Ambient {
    /// `shape[k−1] = m_k`, the multiplicity of `∧^k`.
    pub(crate) fn new(n: usize, shape: &[usize]) -> Self {
        let m = 2 * n;
        assert!(shape.len() <= m, "shape longer than the rank");
        let mut monomials: Vec<Monomial> = vec![Vec::new()];
        for (k, mult) in shape.iter().enumerate() {
            if *mult == 0 {
                continue;
            }
            let subs = subsets_of_size(m, k + 1);
            let parts = multisets(&subs, *mult);
            let mut next = Vec::with_capacity(monomials.len() * parts.len());
            for mono in &monomials {
                for p in &parts {
                    let mut v = mono.clone();
                    v.extend_from_slice(p);
                    next.push(v);
                }
            }
            monomials = next;
        }
        for mono in monomials.iter_mut() {
            mono.sort_unstable();
        }
        monomials.sort();
        let index = monomials.iter().enumerate().map(|(k, mono)| (mono.clone(), k)).collect();
        Ambient { n, shape: shape.to_vec(), monomials, index }
    }

    pub(crate) fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub(crate) fn describe(&self) -> String {
        let parts: Vec<String> = self
            .shape
            .iter()
            .enumerate()
            .filter(|(_, m)| **m > 0)
            .map(|(k, m)| format!("Sym^{}(Λ^{} V)", m, k + 1))
            .collect();
        if parts.is_empty() {
            "C".into()
        } else {
            parts.join(" ⊗ ")
        }
    }

    pub(crate) fn index_of(&self, mono: &Monomial) -> usize {
        *self.index.get(mono).expect("monomial of the right shape")
    }

    /// The vector `Π_k (f_1 ∧ … ∧ f_k)^{m_k}`.
    pub(crate) fn highest_monomial(&self) -> SparseVec {
        let mut mono = Vec::new();
        for (k, mult) in self.shape.iter().enumerate() {
            let mask = (1u32 << (k + 1)) - 1;
            mono.extend(std::iter::repeat_n(mask, *mult));
        }
        mono.sort_unstable();
        SparseVec::unit(self.dim(), self.index_of(&mono))
    }

    /// γ-torus weight of a monomial: occurrences of each frame index.
    pub(crate) fn gamma_weight(&self, k: usize) -> Vec<i64> {
        let mut w = vec![0i64; 2 * self.n];
        for mask in &self.monomials[k] {
            for (a, x) in w.iter_mut().enumerate() {
                if mask & (1 << a) != 0 {
                    *x += 1;
                }
            }
        }
        w
    }

    /// T_O weight of a monomial.
    pub(crate) fn to_weight(&self, k: usize) -> Vec<i64> {
        let g = self.gamma_weight(k);
        (0..self.n).map(|a| g[a] - g[bar(self.n, a)]).collect()
    }

    /// Derivation action of a frame-coordinate matrix.
    pub(crate) fn apply_lie(&self, x: &Matrix, v: &SparseVec) -> SparseVec {
        let cols = x.columns();
        let mut acc: BTreeMap<usize, GaussRat> = BTreeMap::new();
        for (idx, coef) in v.iter() {
            let mono = &self.monomials[idx];
            for p in 0..mono.len() {
                let s = mono[p];
                for a in 0..2 * self.n {
                    if s & (1 << a) == 0 {
                        continue;
                    }
                    for (b, xba) in &cols[a] {
                        let b = *b;
                        let new_mask = if b == a {
                            s
                        } else if s & (1 << b) != 0 {
                            continue;
                        } else {
                            (s & !(1 << a)) | (1 << b)
                        };
                        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                        let between = if hi > lo + 1 { (s >> (lo + 1)) & ((1u32 << (hi - lo - 1)) - 1) } else { 0 };
                        let sign_neg = b != a && between.count_ones() % 2 == 1;
                        let mut new_mono = mono.clone();
                        new_mono[p] = new_mask;
                        new_mono.sort_unstable();
                        let target = self.index_of(&new_mono);
                        let mut c = coef * xba;
                        if sign_neg {
                            c = -c;
                        }
                        *acc.entry(target).or_default() += &c;
                    }
                }
            }
        }
        SparseVec::from_pairs(self.dim(), acc)
    }

    /// Image of `f_S` under `∧^k g`: `Σ_T det(g[T, S]) f_T`.
    fn wedge_image(&self, cols: &[Vec<(usize, GaussRat)>], s: u32) -> Vec<(u32, GaussRat)> {
        let mut terms: Vec<(u32, GaussRat)> = vec![(0, GaussRat::one())];
        for a in 0..2 * self.n {
            if s & (1 << a) == 0 {
                continue;
            }
            let mut next: BTreeMap<u32, GaussRat> = BTreeMap::new();
            for (mask, c) in &terms {
                for (j, gj) in &cols[a] {
                    if mask & (1 << j) != 0 {
                        continue;
                    }
                    // wedge on the right: move f_j past the larger indices already present
                    let greater = (mask >> (j + 1)).count_ones();
                    let mut val = c * gj;
                    if greater % 2 == 1 {
                        val = -val;
                    }
                    *next.entry(mask | (1 << j)).or_default() += &val;
                }
            }
            terms = next.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        terms
    }

    /// Action of a group element given in frame coordinates.
    pub(crate) fn apply_group(&self, g: &Matrix, v: &SparseVec) -> SparseVec {
        let cols = g.columns();
        let mut cache: HashMap<u32, Vec<(u32, GaussRat)>> = HashMap::new();
        let mut acc = Accumulator::new(self.dim());
        for (idx, coef) in v.iter() {
            let mono = &self.monomials[idx];
            let mut terms: Vec<(Vec<u32>, GaussRat)> = vec![(Vec::new(), coef.clone())];
            for s in mono {
                let img = cache.entry(*s).or_insert_with(|| self.wedge_image(&cols, *s)).clone();
                let mut next = Vec::with_capacity(terms.len() * img.len());
                for (m, c) in &terms {
                    for (t, d) in &img {
                        let mut mm = m.clone();
                        mm.push(*t);
                        next.push((mm, c * d));
                    }
                }
                terms = next;
            }
            for (mut m, c) in terms {
                m.sort_unstable();
                acc.add_entry(self.index_of(&m), &c);
            }
        }
        acc.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ambient_dimensions() {
        // V ⊗ Sym²(Λ²V) ⊗ Λ³V for 2n = 4
        assert_eq!(Ambient::new(2, &[1, 2, 1]).dim(), 4 * 21 * 4);
        assert_eq!(Ambient::new(1, &[]).dim(), 1);
        assert_eq!(Ambient::new(1, &[2]).dim(), 3);
    }

    #[test]
    fn lie_action_on_wedge_has_signs() {
        // Λ²: E_{3,1} (0-based: row 2, col 0) sends f_0∧f_1 to f_2∧f_1 = −f_1∧f_2
        let amb = Ambient::new(2, &[0, 1]);
        let v = amb.highest_monomial();
        let x = Matrix::unit(4, 2, 0);
        let out = amb.apply_lie(&x, &v);
        let target = amb.index_of(&vec![0b110]);
        assert_eq!(out, SparseVec::from_pairs(amb.dim(), [(target, GaussRat::from_int(-1))]));
    }

    #[test]
    fn group_action_matches_exponential_of_nilpotent() {
        // g = I + E_{2,0} is unipotent; on Sym²(V) the action must equal
        // exp of the derivation, i.e. 1 + X + X²/2.
        let amb = Ambient::new(2, &[2]);
        let x = Matrix::unit(4, 2, 0);
        let g = Matrix::identity(4).add(&x);
        for k in 0..amb.dim() {
            let v = SparseVec::unit(amb.dim(), k);
            let xv = amb.apply_lie(&x, &v);
            let xxv = amb.apply_lie(&x, &xv);
            let expected = v.add(&xv).add(&xxv.scale(&GaussRat::from_ratio(1, 2)));
            assert_eq!(amb.apply_group(&g, &v), expected);
        }
    }
}
