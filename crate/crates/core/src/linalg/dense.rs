//! Dense Gaussian elimination, used when a sparse system has filled in.

use super::GaussRat;

/// Reduced row-echelon form of a dense matrix, in place.
///
/// Pivots are chosen as the first nonzero entry in column order. Returns the
/// pivot columns; the first `pivots.len()` rows of `m` hold the reduced rows
/// and the remaining rows are zero.
pub fn rref_in_place(m: &mut [Vec<GaussRat>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for x in m[r][c..].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !y.is_zero() {
                    *x -= &(y * &f);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Determinant by elimination.
pub fn determinant(m: &[Vec<GaussRat>]) -> GaussRat {
    let n = m.len();
    let mut a: Vec<Vec<GaussRat>> = m.to_vec();
    let mut det = GaussRat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return GaussRat::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = &det * &a[c][c];
        let inv = a[c][c].inv().unwrap();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            let (top, bottom) = a.split_at_mut(i);
            for (x, y) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                if !y.is_zero() {
                    *x -= &(y * &f);
                }
            }
        }
    }
    det
}
