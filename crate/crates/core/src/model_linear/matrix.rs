//! Exact rational matrices in compressed-row form.
//!
//! Rows index the codomain, columns the domain. Stored entries are nonzero
//! and sorted by column within each row, so structural equality is matrix
//! equality.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn fmt_q(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    vals: Vec<Q>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            row_ptr: vec![0; rows + 1],
            col_idx: Vec::new(),
            vals: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_row_entries(n, n, (0..n).map(|i| vec![(i, Q::one())]))
    }

    /// Permutation matrix sending basis vector `i` to `p[i]`.
    pub fn permutation(p: &[usize]) -> Self {
        let n = p.len();
        let mut rows = vec![Vec::new(); n];
        for (i, &j) in p.iter().enumerate() {
            rows[j].push((i, Q::one()));
        }
        Self::from_row_entries(n, n, rows)
    }

    /// Builds from per-row `(column, value)` lists in any order; zeros and
    /// duplicate columns are merged away.
    pub fn from_row_entries<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = Vec<(usize, Q)>>,
    {
        let mut m = RatMatrix::zeros(rows, 0);
        m.cols = cols;
        m.row_ptr.truncate(1);
        for mut row in entries {
            row.sort_by_key(|e| e.0);
            let mut merged: Vec<(usize, Q)> = Vec::with_capacity(row.len());
            for (c, v) in row {
                assert!(c < cols, "column {c} out of range {cols}");
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv += v,
                    _ => merged.push((c, v)),
                }
            }
            for (c, v) in merged {
                if !v.is_zero() {
                    m.col_idx.push(c);
                    m.vals.push(v);
                }
            }
            m.row_ptr.push(m.col_idx.len());
        }
        assert_eq!(m.row_ptr.len(), rows + 1, "row count mismatch");
        m
    }

    pub fn from_triplets(rows: usize, cols: usize, trip: impl IntoIterator<Item = (usize, usize, Q)>) -> Self {
        let mut per_row = vec![Vec::new(); rows];
        for (r, c, v) in trip {
            per_row[r].push((c, v));
        }
        Self::from_row_entries(rows, cols, per_row)
    }

    pub fn from_dense(rows: usize, cols: usize, dense: &[Vec<Q>]) -> Self {
        assert_eq!(dense.len(), rows);
        Self::from_row_entries(
            rows,
            cols,
            dense.iter().map(|r| {
                assert_eq!(r.len(), cols);
                r.iter().cloned().enumerate().collect::<Vec<_>>()
            }),
        )
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let dense: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
        Self::from_dense(rows.len(), cols, &dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &Q)> {
        let (s, e) = (self.row_ptr[i], self.row_ptr[i + 1]);
        self.col_idx[s..e].iter().copied().zip(&self.vals[s..e])
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        let (s, e) = (self.row_ptr[i], self.row_ptr[i + 1]);
        match self.col_idx[s..e].binary_search(&j) {
            Ok(k) => self.vals[s + k].clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut d = vec![vec![Q::zero(); self.cols]; self.rows];
        for (i, row) in d.iter_mut().enumerate() {
            for (j, v) in self.row(i) {
                row[j] = v.clone();
            }
        }
        d
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut acc: Vec<Q> = vec![Q::zero(); rhs.cols];
        let mut touched = vec![false; rhs.cols];
        let mut used = Vec::new();
        let mut out_rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            for (k, a) in self.row(i) {
                for (j, b) in rhs.row(k) {
                    if !touched[j] {
                        touched[j] = true;
                        used.push(j);
                    }
                    acc[j] += a * b;
                }
            }
            let mut row = Vec::with_capacity(used.len());
            for &j in &used {
                touched[j] = false;
                let v = std::mem::replace(&mut acc[j], Q::zero());
                row.push((j, v));
            }
            used.clear();
            out_rows.push(row);
        }
        RatMatrix::from_row_entries(self.rows, rhs.cols, out_rows)
    }

    /// Kronecker product; entry `(i·r₂+k, j·c₂+l)` is `self[i,j]·rhs[k,l]`.
    pub fn kron(&self, rhs: &RatMatrix) -> RatMatrix {
        let mut out_rows = Vec::with_capacity(self.rows * rhs.rows);
        for i in 0..self.rows {
            for k in 0..rhs.rows {
                let mut row = Vec::new();
                for (j, a) in self.row(i) {
                    for (l, b) in rhs.row(k) {
                        row.push((j * rhs.cols + l, a * b));
                    }
                }
                out_rows.push(row);
            }
        }
        RatMatrix::from_row_entries(self.rows * rhs.rows, self.cols * rhs.cols, out_rows)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut rows = vec![Vec::new(); self.cols];
        for i in 0..self.rows {
            for (j, v) in self.row(i) {
                rows[j].push((i, v.clone()));
            }
        }
        RatMatrix::from_row_entries(self.cols, self.rows, rows)
    }

    pub fn add(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape");
        RatMatrix::from_row_entries(
            self.rows,
            self.cols,
            (0..self.rows).map(|i| {
                self.row(i)
                    .chain(rhs.row(i))
                    .map(|(j, v)| (j, v.clone()))
                    .collect::<Vec<_>>()
            }),
        )
    }

    pub fn scale(&self, s: &Q) -> RatMatrix {
        let mut m = self.clone();
        if s.is_zero() {
            return RatMatrix::zeros(self.rows, self.cols);
        }
        for v in &mut m.vals {
            *v *= s;
        }
        m
    }

    /// Columns `start..start+len` as a matrix.
    pub fn column_block(&self, start: usize, len: usize) -> RatMatrix {
        RatMatrix::from_row_entries(
            self.rows,
            len,
            (0..self.rows).map(|i| {
                self.row(i)
                    .filter(|(j, _)| *j >= start && *j < start + len)
                    .map(|(j, v)| (j - start, v.clone()))
                    .collect::<Vec<_>>()
            }),
        )
    }

    /// Two-sided inverse by Gauss–Jordan elimination; `None` when not
    /// square or singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.to_dense();
        let mut inv: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            if !p.is_one() {
                let pinv = p.recip();
                for v in a[col].iter_mut().chain(inv[col].iter_mut()) {
                    if !v.is_zero() {
                        *v *= &pinv;
                    }
                }
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    if !a[col][c].is_zero() {
                        let d = &factor * &a[col][c];
                        a[r][c] -= d;
                    }
                    if !inv[col][c].is_zero() {
                        let d = &factor * &inv[col][c];
                        inv[r][c] -= d;
                    }
                }
            }
        }
        Some(RatMatrix::from_dense(n, n, &inv))
    }

    pub fn max_abs_entry(&self) -> Q {
        self.vals.iter().map(|v| v.abs()).max().unwrap_or_else(Q::zero)
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", fmt_q(&self.get(i, j)))?;
            }
        }
        write!(f, "]")
    }
}

/// Small matrices serialize as dense rows of `"p/q"` strings, larger ones
/// as `[row, col, value]` triples.
impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RatMatrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        if self.rows * self.cols <= 64 {
            let dense: Vec<Vec<String>> = (0..self.rows)
                .map(|i| (0..self.cols).map(|j| fmt_q(&self.get(i, j))).collect())
                .collect();
            st.serialize_field("entries", &dense)?;
        } else {
            let trip: Vec<(usize, usize, String)> = (0..self.rows)
                .flat_map(|i| self.row(i).map(move |(j, v)| (i, j, fmt_q(v))))
                .collect();
            st.serialize_field("nonzero", &trip)?;
        }
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_inverse_of_shear() {
        let m = RatMatrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(m.inverse(), Some(RatMatrix::from_ints(&[&[1, -1], &[0, 1]])));
        assert_eq!(RatMatrix::from_ints(&[&[1, 2], &[2, 4]]).inverse(), None);
        assert_eq!(RatMatrix::zeros(2, 3).inverse(), None);
    }

    #[test]
    fn kron_index_pairing() {
        let a = RatMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = RatMatrix::from_ints(&[&[0, 5], &[6, 7]]);
        let k = a.kron(&b);
        let ix = |j: usize, l: usize| j * 2 + l;
        assert_eq!(k.get(ix(1, 0), ix(0, 1)), q(3 * 5));
        assert_eq!(k.get(ix(0, 1), ix(1, 1)), q(2 * 7));
    }

    #[test]
    fn products_and_zero_entries() {
        let a = RatMatrix::from_ints(&[&[1, -1], &[1, 1]]);
        let b = RatMatrix::from_ints(&[&[1, 1], &[1, 1]]);
        let p = a.mul(&b);
        assert_eq!(p, RatMatrix::from_ints(&[&[0, 0], &[2, 2]]));
        assert_eq!(p.nnz(), 2);
        assert_eq!(a.add(&a.scale(&q(-1))), RatMatrix::zeros(2, 2));
    }

    #[test]
    fn rational_entries_print_as_fractions() {
        let m = RatMatrix::from_dense(1, 2, &[vec![q_frac(1, 2), q(-3)]]);
        assert_eq!(format!("{m:?}"), "1x2[1/2 -3]");
        let j = serde_json::to_value(&m).unwrap();
        assert_eq!(j["entries"][0][0], "1/2");
    }
}
