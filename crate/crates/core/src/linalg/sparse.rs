//! Sparse vectors and row-major sparse matrices over `ℚ(i)`.

use std::collections::BTreeMap;

use super::GaussRat;

/// A sparse vector: entries sorted by index, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec {
    len: usize,
    entries: Vec<(usize, GaussRat)>,
}

impl SparseVec {
    pub fn zero(len: usize) -> Self {
        SparseVec { len, entries: Vec::new() }
    }

    pub fn unit(len: usize, k: usize) -> Self {
        assert!(k < len);
        SparseVec { len, entries: vec![(k, GaussRat::one())] }
    }

    /// Builds from arbitrary (index, value) pairs; duplicates are summed.
    pub fn from_pairs(len: usize, pairs: impl IntoIterator<Item = (usize, GaussRat)>) -> Self {
        let mut acc: BTreeMap<usize, GaussRat> = BTreeMap::new();
        for (k, v) in pairs {
            assert!(k < len, "index {k} out of range {len}");
            *acc.entry(k).or_default() += &v;
        }
        SparseVec { len, entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    /// Builds from entries already sorted by strictly increasing index.
    pub(crate) fn from_sorted(len: usize, entries: Vec<(usize, GaussRat)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(k, v)| *k < len && !v.is_zero()));
        SparseVec { len, entries }
    }

    pub fn from_dense(v: &[GaussRat]) -> Self {
        SparseVec {
            len: v.len(),
            entries: v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<GaussRat> {
        let mut out = vec![GaussRat::zero(); self.len];
        for (k, v) in &self.entries {
            out[*k] = v.clone();
        }
        out
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, GaussRat)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &GaussRat)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn get(&self, k: usize) -> GaussRat {
        match self.entries.binary_search_by_key(&k, |e| e.0) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => GaussRat::zero(),
        }
    }

    pub fn get_ref(&self, k: usize) -> Option<&GaussRat> {
        self.entries.binary_search_by_key(&k, |e| e.0).ok().map(|p| &self.entries[p].1)
    }

    pub fn leading(&self) -> Option<(usize, &GaussRat)> {
        self.entries.first().map(|(k, v)| (*k, v))
    }

    pub fn scale(&self, a: &GaussRat) -> SparseVec {
        if a.is_zero() {
            return SparseVec::zero(self.len);
        }
        SparseVec { len: self.len, entries: self.entries.iter().map(|(k, v)| (*k, v * a)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { len: self.len, entries: self.entries.iter().map(|(k, v)| (*k, -v)).collect() }
    }

    /// `self + a·other`.
    pub fn axpy(&self, a: &GaussRat, other: &SparseVec) -> SparseVec {
        assert_eq!(self.len, other.len, "length mismatch in axpy");
        if a.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.entries, &other.entries);
        while i < x.len() || j < y.len() {
            if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
                out.push(x[i].clone());
                i += 1;
            } else if i == x.len() || y[j].0 < x[i].0 {
                out.push((y[j].0, &y[j].1 * a));
                j += 1;
            } else {
                let v = &x[i].1 + &(&y[j].1 * a);
                if !v.is_zero() {
                    out.push((x[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { len: self.len, entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&GaussRat::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&GaussRat::from_int(-1), other)
    }

    pub fn dot(&self, other: &SparseVec) -> GaussRat {
        assert_eq!(self.len, other.len);
        let mut acc = GaussRat::zero();
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.entries, &other.entries);
        while i < x.len() && j < y.len() {
            match x[i].0.cmp(&y[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += &(&x[i].1 * &y[j].1);
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Rescales so that the first nonzero entry is 1.
    pub fn normalized(&self) -> SparseVec {
        match self.leading() {
            Some((_, lead)) if !lead.is_one() => self.scale(&lead.inv().unwrap()),
            _ => self.clone(),
        }
    }

    /// Keeps only the listed coordinates, renumbered in list order.
    pub fn restrict_to(&self, coords: &[usize]) -> SparseVec {
        SparseVec::from_pairs(
            coords.len(),
            coords.iter().enumerate().filter_map(|(new, old)| self.get_ref(*old).map(|v| (new, v.clone()))),
        )
    }
}

/// Accumulates a linear combination of sparse vectors.
pub struct Accumulator {
    len: usize,
    acc: BTreeMap<usize, GaussRat>,
}

impl Accumulator {
    pub fn new(len: usize) -> Self {
        Accumulator { len, acc: BTreeMap::new() }
    }

    pub fn add_scaled(&mut self, a: &GaussRat, v: &SparseVec) {
        if a.is_zero() {
            return;
        }
        for (k, x) in v.iter() {
            *self.acc.entry(k).or_default() += &(x * a);
        }
    }

    pub fn add_entry(&mut self, k: usize, v: &GaussRat) {
        *self.acc.entry(k).or_default() += v;
    }

    pub fn finish(self) -> SparseVec {
        SparseVec::from_sorted(self.len, self.acc.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }
}

/// A sparse matrix stored as sparse rows. Iteration is row-major by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols, data: vec![SparseVec::zero(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat { rows: n, cols: n, data: (0..n).map(|k| SparseVec::unit(n, k)).collect() }
    }

    pub fn scalar(n: usize, a: &GaussRat) -> Self {
        if a.is_zero() {
            return SparseMat::zero(n, n);
        }
        SparseMat {
            rows: n,
            cols: n,
            data: (0..n).map(|k| SparseVec::from_sorted(n, vec![(k, a.clone())])).collect(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        SparseMat { rows: rows.len(), cols, data: rows }
    }

    /// Matrix whose k-th column is `columns[k]`.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut trip = Vec::new();
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter() {
                trip.push((r, c, v.clone()));
            }
        }
        SparseMat::from_triplets(rows, columns.len(), trip)
    }

    pub fn from_triplets(rows: usize, cols: usize, trip: impl IntoIterator<Item = (usize, usize, GaussRat)>) -> Self {
        let mut per_row: Vec<Vec<(usize, GaussRat)>> = vec![Vec::new(); rows];
        for (r, c, v) in trip {
            assert!(r < rows && c < cols, "triplet ({r},{c}) out of range");
            per_row[r].push((c, v));
        }
        SparseMat { rows, cols, data: per_row.into_iter().map(|p| SparseVec::from_pairs(cols, p)).collect() }
    }

    pub fn from_dense(rows: &[Vec<GaussRat>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        SparseMat::from_rows(cols, rows.iter().map(|r| SparseVec::from_dense(r)).collect())
    }

    pub fn to_dense(&self) -> Vec<Vec<GaussRat>> {
        self.data.iter().map(|r| r.to_dense()).collect()
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.nnz()).sum()
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> GaussRat {
        self.data[r].get(c)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    /// Row-major (row, col, value) triplets.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &GaussRat)> {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, c, v)))
    }

    pub fn transpose(&self) -> SparseMat {
        let mut per_row: Vec<Vec<(usize, GaussRat)>> = vec![Vec::new(); self.cols];
        for (r, c, v) in self.triplets() {
            per_row[c].push((r, v.clone()));
        }
        SparseMat {
            rows: self.cols,
            cols: self.rows,
            data: per_row.into_iter().map(|p| SparseVec::from_sorted(self.rows, p)).collect(),
        }
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        let entries: Vec<(usize, GaussRat)> = self
            .data
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                let x = row.dot(v);
                (!x.is_zero()).then_some((r, x))
            })
            .collect();
        SparseVec::from_sorted(self.rows, entries)
    }

    /// Row vector times matrix: `vᵀ·self`.
    pub fn vec_mul(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(self.rows, v.len(), "shape mismatch in vec_mul");
        let mut acc = Accumulator::new(self.cols);
        for (r, a) in v.iter() {
            acc.add_scaled(a, &self.data[r]);
        }
        acc.finish()
    }

    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        SparseMat { rows: self.rows, cols: other.cols, data: self.data.iter().map(|r| other.vec_mul(r)).collect() }
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        SparseMat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &SparseMat) -> SparseMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        SparseMat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, a: &GaussRat) -> SparseMat {
        SparseMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|r| r.scale(a)).collect() }
    }

    /// `self + a·I`.
    pub fn add_scalar(&self, a: &GaussRat) -> SparseMat {
        assert_eq!(self.rows, self.cols);
        if a.is_zero() {
            return self.clone();
        }
        self.add(&SparseMat::scalar(self.rows, a))
    }

    pub fn commutator(&self, other: &SparseMat) -> SparseMat {
        self.mul(other).sub(&other.mul(self))
    }

    /// Kronecker product; index `(i, j)` maps to `i·other.dim + j`.
    pub fn kron(&self, other: &SparseMat) -> SparseMat {
        let cols = self.cols * other.cols;
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for ra in &self.data {
            for rb in &other.data {
                let mut entries = Vec::with_capacity(ra.nnz() * rb.nnz());
                for (ca, va) in ra.iter() {
                    for (cb, vb) in rb.iter() {
                        entries.push((ca * other.cols + cb, va * vb));
                    }
                }
                data.push(SparseVec::from_sorted(cols, entries));
            }
        }
        SparseMat { rows: self.rows * other.rows, cols, data }
    }

    pub fn trace(&self) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (r, row) in self.data.iter().enumerate() {
            if let Some(v) = row.get_ref(r) {
                acc += v;
            }
        }
        acc
    }

    /// Selects a sub-block by row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SparseMat {
        SparseMat::from_rows(cols.len(), rows.iter().map(|r| self.data[*r].restrict_to(cols)).collect())
    }

    /// Stacks matrices with equal column counts vertically.
    pub fn vstack(parts: &[SparseMat]) -> SparseMat {
        let cols = parts.first().map_or(0, |p| p.cols);
        let mut data = Vec::new();
        for p in parts {
            assert_eq!(p.cols, cols);
            data.extend(p.data.iter().cloned());
        }
        SparseMat { rows: data.len(), cols, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: i64) -> GaussRat {
        GaussRat::from_int(v)
    }

    #[test]
    fn axpy_cancels_to_no_stored_zeros() {
        let a = SparseVec::from_pairs(4, vec![(0, g(1)), (2, g(3))]);
        let b = SparseVec::from_pairs(4, vec![(2, g(1)), (3, g(5))]);
        let c = a.axpy(&g(-3), &b);
        assert_eq!(c.entries(), &[(0, g(1)), (3, g(-15))]);
    }

    #[test]
    fn mul_and_transpose_agree_with_dense() {
        let m = SparseMat::from_triplets(2, 3, vec![(0, 0, g(1)), (0, 2, g(2)), (1, 1, GaussRat::i())]);
        let t = m.transpose();
        assert_eq!(t.get(2, 0), g(2));
        let p = m.mul(&t);
        assert_eq!(p.get(0, 0), g(5));
        assert_eq!(p.get(1, 1), g(-1));
        assert_eq!(p.get(0, 1), g(0));
    }

    #[test]
    fn kron_indexing() {
        let a = SparseMat::from_triplets(2, 2, vec![(0, 1, g(2))]);
        let b = SparseMat::identity(3);
        let k = a.kron(&b);
        // row (0, 2), column (1, 2) in a-major order
        assert_eq!(k.get(2, 5), g(2));
        assert_eq!(k.nnz(), 3);
    }
}
