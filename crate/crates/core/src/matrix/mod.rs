//! Dense matrices over a field context and Gauss-Jordan linear algebra.

pub mod charpoly;
pub mod eigen;
pub mod transform;

pub use charpoly::char_poly;
pub use eigen::{eigen_over_extension, Eigen};
pub use transform::{
    companion_matrix, combine_inputs, phi, phi_inv, phi_t, phi_t_inv, psi, psi_inv,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElem};

/// Row-major dense matrix whose entries all live in one field.
///
/// Zero-width matrices are allowed: the second-source precoder at `m = 1`
/// has no columns.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// From packed element values, one inner vector per row.
    pub fn from_values(field: &Field, rows: &[Vec<u32>]) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data: Vec<u32> = rows.iter().flatten().copied().collect();
        if data.iter().any(|&v| v >= field.order()) {
            return Err(Error::Parse(format!(
                "entry out of range for field of order {}",
                field.order()
            )));
        }
        Ok(Matrix { field: field.clone(), rows: r, cols: c, data })
    }

    pub fn from_elems(field: &Field, rows: &[Vec<FieldElem>]) -> Result<Matrix> {
        let mut raw = Vec::with_capacity(rows.len());
        for row in rows {
            let mut out = Vec::with_capacity(row.len());
            for e in row {
                if e.field() != field {
                    return Err(Error::FieldMismatch);
                }
                out.push(e.index());
            }
            raw.push(out);
        }
        Matrix::from_values(field, &raw)
    }

    /// Column vector from packed values.
    pub fn column_vector(field: &Field, values: &[u32]) -> Result<Matrix> {
        let rows: Vec<Vec<u32>> = values.iter().map(|&v| vec![v]).collect();
        let mut m = Matrix::from_values(field, &rows)?;
        m.cols = 1;
        Ok(m)
    }

    pub fn column_of(elems: &[FieldElem]) -> Result<Matrix> {
        let field = elems
            .first()
            .map(|e| e.field().clone())
            .ok_or_else(|| Error::DimensionMismatch("empty vector".into()))?;
        let rows: Vec<Vec<FieldElem>> = elems.iter().map(|e| vec![e.clone()]).collect();
        Matrix::from_elems(&field, &rows)
    }

    /// Diagonal matrix from packed values.
    pub fn diagonal(field: &Field, values: &[u32]) -> Matrix {
        let n = values.len();
        let mut m = Matrix::zeros(field, n, n);
        for (i, &v) in values.iter().enumerate() {
            m.data[i * n + i] = v;
        }
        m
    }

    pub(crate) fn from_raw(field: &Field, rows: usize, cols: usize, data: Vec<u32>) -> Matrix {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.field.elem_raw(self.value(i, j))
    }

    /// Packed value of entry `(i, j)`.
    pub fn value(&self, i: usize, j: usize) -> u32 {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: &FieldElem) -> Result<()> {
        if v.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        self.set_value(i, j, v.index());
        Ok(())
    }

    pub(crate) fn set_value(&mut self, i: usize, j: usize, v: u32) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.data[i * self.cols + j] = v;
    }

    /// Packed values, one vector per row.
    pub fn to_values(&self) -> Vec<Vec<u32>> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    /// Packed values of a single column.
    pub fn column_values(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.value(i, j)).collect()
    }

    pub fn column(&self, j: usize) -> Matrix {
        Matrix::from_raw(&self.field, self.rows, 1, self.column_values(j))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch(format!(
                "{:?} + {:?}",
                self.shape(),
                other.shape()
            )));
        }
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add_raw(a, b)).collect();
        Ok(Matrix::from_raw(f, self.rows, self.cols, data))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|&a| self.field.neg_raw(a)).collect();
        Matrix::from_raw(&self.field, self.rows, self.cols, data)
    }

    pub fn scale(&self, s: &FieldElem) -> Result<Matrix> {
        if s.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let data = self.data.iter().map(|&a| self.field.mul_raw(a, s.index())).collect();
        Ok(Matrix::from_raw(&self.field, self.rows, self.cols, data))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{:?} * {:?}",
                self.shape(),
                other.shape()
            )));
        }
        let f = &self.field;
        let mut data = vec![0u32; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.data[k * other.cols + j];
                    let cell = &mut data[i * other.cols + j];
                    *cell = f.add_raw(*cell, f.mul_raw(a, b));
                }
            }
        }
        Ok(Matrix::from_raw(f, self.rows, other.cols, data))
    }

    /// Matrix-vector product on packed values; panics on length mismatch.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length");
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &x)| f.add_raw(acc, f.mul_raw(a, x)))
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut acc = Matrix::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = vec![0u32; self.data.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        Matrix::from_raw(&self.field, self.cols, self.rows, data)
    }

    /// Horizontal concatenation.
    pub fn hstack(parts: &[&Matrix]) -> Result<Matrix> {
        let first = parts.first().ok_or_else(|| Error::DimensionMismatch("nothing to stack".into()))?;
        let rows = first.rows;
        let mut out = Matrix::zeros(&first.field, rows, parts.iter().map(|m| m.cols).sum());
        let mut off = 0;
        for m in parts {
            first.same_field(m)?;
            if m.rows != rows {
                return Err(Error::DimensionMismatch("hstack row counts differ".into()));
            }
            for i in 0..rows {
                for j in 0..m.cols {
                    out.data[i * out.cols + off + j] = m.data[i * m.cols + j];
                }
            }
            off += m.cols;
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(parts: &[&Matrix]) -> Result<Matrix> {
        let first = parts.first().ok_or_else(|| Error::DimensionMismatch("nothing to stack".into()))?;
        let cols = first.cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            first.same_field(m)?;
            if m.cols != cols {
                return Err(Error::DimensionMismatch("vstack column counts differ".into()));
            }
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Ok(Matrix::from_raw(&first.field, rows, cols, data))
    }

    /// Sub-block of `nr x nc` entries starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Matrix {
        assert!(r0 + nr <= self.rows && c0 + nc <= self.cols, "block out of bounds");
        let mut data = Vec::with_capacity(nr * nc);
        for i in r0..r0 + nr {
            data.extend_from_slice(&self.data[i * self.cols + c0..i * self.cols + c0 + nc]);
        }
        Matrix::from_raw(&self.field, nr, nc, data)
    }

    /// Embeds a prime-field matrix entrywise into an extension field.
    pub fn lift(&self, ext: &Field) -> Result<Matrix> {
        if &self.field == ext {
            return Ok(self.clone());
        }
        if self.field.m() != 1 || !ext.has_ground(&self.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Matrix::from_raw(ext, self.rows, self.cols, self.data.clone()))
    }

    /// Reduced row echelon form in place, pivoting only among the first
    /// `pivot_cols` columns. Returns the pivot columns and the sign of the
    /// row permutation (as a +-1 determinant factor).
    fn rref_in_place(&mut self, pivot_cols: usize) -> (Vec<usize>, bool) {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut odd_swaps = false;
        let mut r = 0;
        for c in 0..pivot_cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
                odd_swaps = !odd_swaps;
            }
            let inv = f.inv_raw(self.data[r * cols + c]).expect("pivot is nonzero");
            for j in 0..cols {
                let v = &mut self.data[r * cols + j];
                *v = f.mul_raw(*v, inv);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in 0..cols {
                    let t = f.mul_raw(factor, self.data[r * cols + j]);
                    let v = &mut self.data[i * cols + j];
                    *v = f.sub_raw(*v, t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (pivots, odd_swaps)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let (piv, _) = m.rref_in_place(self.cols);
        (m, piv)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Result<FieldElem> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let f = &self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = 1u32;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| a[i * n + c] != 0) else {
                return Ok(f.zero());
            };
            if pr != c {
                for j in 0..n {
                    a.swap(pr * n + j, c * n + j);
                }
                det = f.neg_raw(det);
            }
            let piv = a[c * n + c];
            det = f.mul_raw(det, piv);
            let inv = f.inv_raw(piv)?;
            for i in c + 1..n {
                let factor = f.mul_raw(a[i * n + c], inv);
                if factor == 0 {
                    continue;
                }
                for j in c..n {
                    let t = f.mul_raw(factor, a[c * n + j]);
                    a[i * n + j] = f.sub_raw(a[i * n + j], t);
                }
            }
        }
        Ok(f.elem_raw(det))
    }

    pub fn inv(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Matrix::hstack(&[self, &Matrix::identity(&self.field, n)])?;
        let mut aug = aug;
        let (piv, _) = aug.rref_in_place(n);
        if piv.len() < n {
            return Err(Error::Singular);
        }
        Ok(aug.block(0, n, n, n))
    }

    /// Unique `x` with `self * x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &Matrix) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("solve needs a square matrix".into()));
        }
        let x = self.solve_consistent(b)?;
        Ok(x)
    }

    /// Solves `self * x = b` for a matrix of full column rank (square or tall)
    /// by Gauss-Jordan on `[self | b]`. Errors with `Singular` when the columns
    /// are dependent and `InconsistentSystem` when `b` leaves the column space.
    pub fn solve_consistent(&self, b: &Matrix) -> Result<Matrix> {
        self.same_field(b)?;
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve {:?} against {:?}",
                self.shape(),
                b.shape()
            )));
        }
        let k = self.cols;
        let mut aug = Matrix::hstack(&[self, b])?;
        let (piv, _) = aug.rref_in_place(k);
        if piv.len() < k {
            return Err(Error::Singular);
        }
        if (k..aug.rows).any(|i| (0..b.cols).any(|j| aug.value(i, k + j) != 0)) {
            return Err(Error::InconsistentSystem);
        }
        Ok(aug.block(0, k, k, b.cols))
    }

    /// Basis of the right null space, one column per free variable, each
    /// scaled so its lowest-index nonzero entry is 1.
    pub fn null_space(&self) -> Matrix {
        let (r, piv) = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        let mut out = Matrix::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set_value(fc, k, 1);
            for (row, &pc) in piv.iter().enumerate() {
                out.set_value(pc, k, f.neg_raw(r.value(row, fc)));
            }
            let lead = (0..self.cols).map(|i| out.value(i, k)).find(|&v| v != 0).unwrap();
            let inv = f.inv_raw(lead).unwrap();
            for i in 0..self.cols {
                let v = out.value(i, k);
                out.set_value(i, k, f.mul_raw(v, inv));
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                if self.field.m() == 1 {
                    write!(f, "{}", self.value(i, j))?;
                } else {
                    write!(f, "{:?}", self.get(i, j).coeffs())?;
                }
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
