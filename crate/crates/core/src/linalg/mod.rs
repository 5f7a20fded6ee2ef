//! Exact linear algebra over the Gaussian rationals.
//!
//! Everything is deterministic: pivots are the first nonzero entry in column
//! order, and null-space bases are read off the reduced row-echelon form with
//! each free variable set to 1 in turn.

mod dense;
mod echelon;
mod gauss;
mod sparse;

pub use dense::determinant;
pub use echelon::Echelon;
pub use gauss::GaussRat;
pub use sparse::{Accumulator, SparseMat, SparseVec};

/// Output of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// The nonzero reduced rows, one per pivot, as a `rank × cols` matrix.
    pub reduced: SparseMat,
}

/// Fraction of nonzero entries above which elimination switches to dense storage.
const DENSE_THRESHOLD: f64 = 0.5;

/// Reduced row-echelon form.
pub fn rref(m: &SparseMat) -> Rref {
    let cells = m.nrows() * m.ncols();
    if cells > 0 && m.nnz() as f64 > DENSE_THRESHOLD * cells as f64 {
        rref_dense(m)
    } else {
        rref_sparse(m)
    }
}

/// Sparse elimination path of [`rref`]; exposed so both paths can be compared.
pub fn rref_sparse(m: &SparseMat) -> Rref {
    let mut e = Echelon::new(m.ncols());
    for row in m.rows() {
        e.insert(row);
        if e.is_full() {
            break;
        }
    }
    Rref { rank: e.rank(), pivots: e.pivots().to_vec(), reduced: SparseMat::from_rows(m.ncols(), e.rows().to_vec()) }
}

/// Dense elimination path of [`rref`].
pub fn rref_dense(m: &SparseMat) -> Rref {
    let mut d = m.to_dense();
    let pivots = dense::rref_in_place(&mut d);
    d.truncate(pivots.len());
    let reduced = SparseMat::from_rows(m.ncols(), d.iter().map(|r| SparseVec::from_dense(r)).collect());
    Rref { rank: pivots.len(), pivots, reduced }
}

fn null_space_from_rows(cols: usize, rows: &[SparseVec], pivots: &[usize]) -> Vec<SparseVec> {
    let mut is_pivot = vec![false; cols];
    for p in pivots {
        is_pivot[*p] = true;
    }
    // column-wise view of the reduced rows restricted to free columns
    let mut free_entries: Vec<Vec<(usize, GaussRat)>> = vec![Vec::new(); cols];
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row.iter() {
            if !is_pivot[c] {
                free_entries[c].push((pivots[r], -v));
            }
        }
    }
    (0..cols)
        .filter(|c| !is_pivot[*c])
        .map(|f| {
            let mut pairs = std::mem::take(&mut free_entries[f]);
            pairs.push((f, GaussRat::one()));
            SparseVec::from_pairs(cols, pairs)
        })
        .collect()
}

/// Basis of `{v : m·v = 0}`: one vector per free column, that column set to 1.
pub fn null_space(m: &SparseMat) -> Vec<SparseVec> {
    let r = rref(m);
    null_space_from_rows(m.ncols(), r.reduced.rows(), &r.pivots)
}

/// Canonical basis (reduced rows) of the span of `vs`.
pub fn span_basis(len: usize, vs: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new(len);
    for v in vs {
        e.insert(v);
        if e.is_full() {
            break;
        }
    }
    e.rows().to_vec()
}

/// Basis of `span(a) ∩ span(b)`, in canonical reduced form.
pub fn intersect(len: usize, a: &[SparseVec], b: &[SparseVec]) -> Vec<SparseVec> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut cols: Vec<SparseVec> = a.to_vec();
    cols.extend(b.iter().map(|v| v.neg()));
    let m = SparseMat::from_columns(len, &cols);
    let mut out = Vec::new();
    for x in null_space(&m) {
        let mut acc = Accumulator::new(len);
        for (k, c) in x.iter().filter(|(k, _)| *k < a.len()) {
            acc.add_scaled(c, &a[k]);
        }
        out.push(acc.finish());
    }
    span_basis(len, &out)
}

/// Basis of the joint kernel of several square-or-rectangular matrices with
/// a common column count, in canonical reduced form.
///
/// Constraints are applied one at a time to the current solution space, so
/// the systems shrink as the kernel does.
pub fn joint_kernel<'a>(cols: usize, constraints: impl IntoIterator<Item = &'a SparseMat>) -> Vec<SparseVec> {
    // None stands for the whole space
    let mut basis: Option<Vec<SparseVec>> = None;
    for c in constraints {
        assert_eq!(c.ncols(), cols, "constraint width mismatch");
        match &basis {
            None => basis = Some(null_space(c)),
            Some(b) => {
                if b.is_empty() {
                    return Vec::new();
                }
                let images: Vec<SparseVec> = b.iter().map(|v| c.mul_vec(v)).collect();
                if images.iter().all(|v| v.is_zero()) {
                    continue;
                }
                let sys = SparseMat::from_columns(c.nrows(), &images);
                let combos = null_space(&sys);
                basis = Some(
                    combos
                        .iter()
                        .map(|x| {
                            let mut acc = Accumulator::new(cols);
                            for (k, a) in x.iter() {
                                acc.add_scaled(a, &b[k]);
                            }
                            acc.finish()
                        })
                        .collect(),
                );
            }
        }
    }
    match basis {
        None => (0..cols).map(|k| SparseVec::unit(cols, k)).collect(),
        Some(b) => span_basis(cols, &b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: i64) -> GaussRat {
        GaussRat::from_int(v)
    }

    #[test]
    fn identity_rref() {
        let r = rref(&SparseMat::identity(2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn i_squared_dependence() {
        let i = GaussRat::i();
        let m = SparseMat::from_dense(&[vec![g(1), i.clone()], vec![i.clone(), g(-1)]]);
        assert_eq!(rref(&m).rank, 1);
        assert_eq!(rref_sparse(&m), rref_dense(&m));
    }

    #[test]
    fn null_space_examples() {
        assert!(null_space(&SparseMat::identity(3)).is_empty());
        let z = null_space(&SparseMat::zero(2, 3));
        assert_eq!(z.len(), 3);
        assert_eq!(z[1], SparseVec::unit(3, 1));
    }

    #[test]
    fn intersect_examples() {
        let e1 = SparseVec::unit(2, 0);
        let e2 = SparseVec::unit(2, 1);
        assert_eq!(intersect(2, std::slice::from_ref(&e1), std::slice::from_ref(&e1)), vec![e1.clone()]);
        assert!(intersect(2, std::slice::from_ref(&e1), std::slice::from_ref(&e2)).is_empty());
        assert_eq!(intersect(2, &[e1.add(&e2), e2.clone()], std::slice::from_ref(&e1)), vec![e1]);
    }

    #[test]
    fn joint_kernel_shrinks() {
        let a = SparseMat::from_dense(&[vec![g(1), g(-1), g(0)]]);
        let b = SparseMat::from_dense(&[vec![g(0), g(1), g(-1)]]);
        let k = joint_kernel(3, [&a, &b]);
        assert_eq!(k, vec![SparseVec::from_dense(&[g(1), g(1), g(1)])]);
        assert_eq!(joint_kernel(2, std::iter::empty()).len(), 2);
    }
}
