//! Dense exact linear algebra over [`Scalar`]: row reduction, nullspaces,
//! and an incrementally maintained reduced row-echelon basis.

use std::fmt;

use crate::scalar::{Characteristic, Scalar};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    ch: Characteristic,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(ch: Characteristic, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, ch, data: vec![Scalar::zero(ch); rows * cols] }
    }

    pub fn identity(ch: Characteristic, n: usize) -> Matrix {
        let mut m = Matrix::zeros(ch, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(ch));
        }
        m
    }

    /// Builds from rows; all rows must have equal length.
    pub fn from_rows(ch: Characteristic, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, ch, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(ch: Characteristic, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, ch, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn characteristic(&self) -> Characteristic {
        self.ch
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Entries in row-major order.
    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.ch, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, ch: self.ch, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, ch: self.ch, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, ch: self.ch, data }
    }

    /// Ordinary matrix product `self * other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = Matrix::zeros(self.ch, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.entry_mut(i, j) += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Scalar::zero(self.ch); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    /// Reduced row-echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv().unwrap();
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let sub = &f * self.get(r, j);
                    if !sub.is_zero() {
                        *self.entry_mut(i, j) -= &sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column, in
    /// ascending order of the free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(self.ch); self.cols];
            v[free] = Scalar::one(self.ch);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m.get(r, free);
            }
            out.push(v);
        }
        out
    }

    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = Scalar::one(self.ch);
        for c in 0..self.cols {
            let Some(p) = (c..self.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Scalar::zero(self.ch);
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= &pivot;
            let inv = pivot.inv().unwrap();
            for i in c + 1..self.rows {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let sub = &f * m.get(c, j);
                    *m.entry_mut(i, j) -= &sub;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::from_fn(self.ch, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Scalar::one(self.ch)
            } else {
                Scalar::zero(self.ch)
            }
        });
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(self.ch, n, n, |i, j| aug.get(i, n + j).clone()))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// A subspace of `F^len` kept in reduced row-echelon form. Two bases of the
/// same subspace produce identical `EchelonBasis` values, so equality is exact
/// subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EchelonBasis {
    ch: Characteristic,
    len: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(ch: Characteristic, len: usize) -> EchelonBasis {
        EchelonBasis { ch, len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<Scalar>>>(ch: Characteristic, len: usize, vs: I) -> EchelonBasis {
        let mut b = EchelonBasis::new(ch, len);
        for v in vs {
            b.insert(v);
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn characteristic(&self) -> Characteristic {
        self.ch
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    /// Subtracts the projection onto the pivot columns; the result is zero
    /// exactly when `v` lies in the span.
    pub fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.len, "vector length does not match ambient dimension");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for x in v.iter_mut().skip(p) {
            *x *= &inv;
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Coordinates of `v` with respect to [`rows`](Self::rows), or `None` if
    /// `v` is outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(c * r);
                }
            }
        }
        w.iter().all(Scalar::is_zero).then_some(coords)
    }

    pub fn contains_all(&self, other: &EchelonBasis) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn intersection(&self, other: &EchelonBasis) -> EchelonBasis {
        // Solve sum a_i u_i = sum b_j w_j.
        let (m, k) = (self.dim(), other.dim());
        if m == 0 || k == 0 {
            return EchelonBasis::new(self.ch, self.len);
        }
        let sys = Matrix::from_fn(self.ch, self.len, m + k, |r, c| {
            if c < m {
                self.rows[c][r].clone()
            } else {
                -&other.rows[c - m][r]
            }
        });
        let vs = sys.nullspace().into_iter().map(|sol| {
            let mut v = vec![Scalar::zero(self.ch); self.len];
            for (a, row) in sol.iter().take(m).zip(&self.rows) {
                for (x, r) in v.iter_mut().zip(row) {
                    *x += &(a * r);
                }
            }
            v
        });
        EchelonBasis::from_vectors(self.ch, self.len, vs.collect::<Vec<_>>())
    }

    pub fn sum(&self, other: &EchelonBasis) -> EchelonBasis {
        let mut out = self.clone();
        for r in &other.rows {
            out.insert(r.clone());
        }
        out
    }
}
