//! Incremental fully reduced row-echelon form.
//!
//! Rows are kept normalized (pivot entry 1) and every pivot column is zero
//! in every other row, so reducing a vector only touches the pivots that
//! already occur in its support.

use super::sparse::{Accumulator, SparseVec};
use super::GaussRat;

/// A growing set of rows in reduced row-echelon form.
///
/// With tracking enabled, each row also records the combination of inserted
/// vectors that produced it, so vectors in the span can be expressed in terms
/// of the original inputs.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    track: Option<Vec<SparseVec>>,
    inserted: usize,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Echelon { len, rows: Vec::new(), pivots: Vec::new(), track: None, inserted: 0 }
    }

    pub fn with_tracking(len: usize) -> Self {
        Echelon { track: Some(Vec::new()), ..Echelon::new(len) }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    fn pivot_row(&self, col: usize) -> Option<usize> {
        self.pivots.binary_search(&col).ok()
    }

    /// Coefficients `(row index, coefficient)` with `v − Σ c·row` free of pivots.
    fn coefficients(&self, v: &SparseVec) -> Vec<(usize, GaussRat)> {
        v.iter().filter_map(|(k, x)| self.pivot_row(k).map(|r| (r, x.clone()))).collect()
    }

    /// The residual of `v` after elimination against all rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.len(), self.len, "echelon length mismatch");
        let coeffs = self.coefficients(v);
        if coeffs.is_empty() {
            return v.clone();
        }
        let mut acc = Accumulator::new(self.len);
        acc.add_scaled(&GaussRat::one(), v);
        for (r, c) in &coeffs {
            acc.add_scaled(&-c, &self.rows[*r]);
        }
        acc.finish()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns `true` when it was independent of the current rows.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        assert_eq!(v.len(), self.len, "echelon length mismatch");
        let input_index = self.inserted;
        self.inserted += 1;
        let coeffs = self.coefficients(v);
        let mut acc = Accumulator::new(self.len);
        acc.add_scaled(&GaussRat::one(), v);
        for (r, c) in &coeffs {
            acc.add_scaled(&-c, &self.rows[*r]);
        }
        let residual = acc.finish();
        let Some((pivot, lead)) = residual.leading() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero leading entry");
        let row = residual.scale(&inv);
        let mut comb = None;
        if let Some(track) = &self.track {
            let mut t = Accumulator::new(input_index + 1);
            t.add_entry(input_index, &GaussRat::one());
            for (r, c) in &coeffs {
                t.add_scaled(&-c, &track[*r]);
            }
            comb = Some(t.finish().scale(&inv));
        }
        // clear the new pivot column from existing rows
        for r in 0..self.rows.len() {
            if let Some(x) = self.rows[r].get_ref(pivot).cloned() {
                let neg = -x;
                self.rows[r] = self.rows[r].axpy(&neg, &row);
                if let (Some(track), Some(comb)) = (self.track.as_mut(), comb.as_ref()) {
                    track[r] = widen(&track[r], input_index + 1).axpy(&neg, comb);
                }
            }
        }
        let pos = self.pivots.partition_point(|p| *p < pivot);
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, row);
        if let (Some(track), Some(comb)) = (self.track.as_mut(), comb) {
            track.insert(pos, comb);
        }
        true
    }

    /// Expresses `v` as a combination of the inserted vectors (tracking
    /// required). Returns `None` when `v` is outside the span.
    ///
    /// The result has length `inserted()`; dependent inputs get coefficient 0.
    pub fn express(&self, v: &SparseVec) -> Option<SparseVec> {
        let track = self.track.as_ref().expect("express requires a tracking echelon");
        if !self.reduce(v).is_zero() {
            return None;
        }
        let mut acc = Accumulator::new(self.inserted);
        for (r, c) in self.coefficients(v) {
            acc.add_scaled(&c, &widen(&track[r], self.inserted));
        }
        Some(acc.finish())
    }

    /// Coordinates of `v` with respect to the current reduced rows.
    pub fn row_coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.reduce(v).is_zero() {
            return None;
        }
        Some(SparseVec::from_pairs(self.rows.len(), self.coefficients(v)))
    }
}

fn widen(v: &SparseVec, len: usize) -> SparseVec {
    if v.len() == len {
        v.clone()
    } else {
        SparseVec::from_sorted(len, v.entries().to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(v: &[i64]) -> SparseVec {
        SparseVec::from_dense(&v.iter().map(|x| GaussRat::from_int(*x)).collect::<Vec<_>>())
    }

    #[test]
    fn insert_detects_dependence() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&sv(&[1, 2, 3])));
        assert!(e.insert(&sv(&[0, 1, 1])));
        assert!(!e.insert(&sv(&[2, 5, 7])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots(), &[0, 1]);
        assert_eq!(e.rows()[0], sv(&[1, 0, 1]));
    }

    #[test]
    fn express_recovers_combination() {
        let mut e = Echelon::with_tracking(3);
        let a = sv(&[1, 1, 0]);
        let b = sv(&[0, 1, 1]);
        let c = sv(&[1, 2, 1]);
        e.insert(&a);
        e.insert(&b);
        e.insert(&c);
        let target = sv(&[2, 5, 3]);
        let x = e.express(&target).unwrap();
        let rebuilt = a.scale(&x.get(0)).add(&b.scale(&x.get(1))).add(&c.scale(&x.get(2)));
        assert_eq!(rebuilt, target);
        assert!(e.express(&sv(&[1, 0, 0])).is_none());
    }
}
