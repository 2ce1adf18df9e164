//! Dense matrices over `F_p` and incremental row reduction.

use std::fmt;

use crate::algebra::Element;
use crate::error::{usage, Result};
use crate::scalars::PrimeField;

/// Row-major dense matrix with reduced entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Square matrix of a linear operator on an algebra's carrier. Column `i`
/// is the image of basis vector `e_i`.
pub type OperatorMatrix = Matrix;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(usage("ragged matrix rows"));
        }
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&v| field.reduce(v)))
            .collect();
        Ok(Matrix { rows: r, cols: c, data })
    }

    /// Builds a square matrix whose `i`-th column is `cols[i]`.
    pub fn from_columns(n: usize, columns: &[Element]) -> Self {
        let mut m = Matrix::zeros(n, columns.len());
        for (i, col) in columns.iter().enumerate() {
            for (k, &v) in col.iter().enumerate() {
                m.set(k, i, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub(crate) fn add_at(&mut self, r: usize, c: usize, v: u32, field: PrimeField) {
        let idx = r * self.cols + c;
        self.data[idx] = field.add(self.data[idx], v);
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Element {
        Element::from((0..self.rows).map(|r| self.get(r, c)).collect::<Vec<_>>())
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &Matrix, field: PrimeField) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        let p = field.p() as u64;
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for (c, &b) in other.row(k).iter().enumerate() {
                    if b != 0 {
                        acc[c] = (acc[c] + a * b as u64) % p;
                    }
                }
            }
            for (c, &a) in acc.iter().enumerate() {
                out.set(r, c, a as u32);
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix, field: PrimeField) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| field.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix, field: PrimeField) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| field.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: u32, field: PrimeField) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| field.mul(a, s)).collect(),
        }
    }

    pub fn apply(&self, v: &Element, field: PrimeField) -> Element {
        assert_eq!(self.cols, v.len());
        let p = field.p() as u64;
        let out: Vec<u32> = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v.iter())
                    .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p) as u32
            })
            .collect();
        Element::from(out)
    }

    /// `self^n` by square-and-multiply. `n = 0` gives the identity.
    pub fn pow(&self, mut n: u64, field: PrimeField) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, field);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base, field);
            }
        }
        acc
    }
}

/// Exact power of an operator; `n` must be positive.
pub fn operator_power(m: &OperatorMatrix, n: u64, field: PrimeField) -> Result<OperatorMatrix> {
    if n == 0 {
        return Err(usage("operator power needs a positive exponent"));
    }
    if !m.is_square() {
        return Err(usage("operator power of a non-square matrix"));
    }
    Ok(m.pow(n, field))
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon basis of a growing subspace of `F_p^n`.
///
/// The pivot of a row is its highest nonzero column, so reduction rewrites
/// later coordinates in terms of earlier ones. Every stored row is monic at
/// its pivot and zero in every other pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    width: usize,
    rows: Vec<Vec<u32>>,
    /// `pivot_row[c]` is the row whose pivot is column `c`.
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: PrimeField, width: usize) -> Self {
        Echelon {
            field,
            width,
            rows: Vec::new(),
            pivot_row: vec![None; width],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Subtracts stored rows until no pivot column is nonzero.
    pub fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        for c in (0..self.width).rev() {
            let a = v[c];
            if a == 0 {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let row = &self.rows[r];
                for (k, &b) in row.iter().enumerate().take(c + 1) {
                    if b != 0 {
                        v[k] = f.sub(v[k], f.mul(a, b));
                    }
                }
            }
        }
    }

    /// Inserts `v` if it is independent of the stored rows. Returns the
    /// reduced, normalized row that was added.
    pub fn insert(&mut self, mut v: Vec<u32>) -> Option<Vec<u32>> {
        assert_eq!(v.len(), self.width);
        self.reduce(&mut v);
        let pivot = v.iter().rposition(|&a| a != 0)?;
        let f = self.field;
        let inv = f.inv(v[pivot]).expect("pivot is nonzero");
        v.iter_mut().for_each(|a| *a = f.mul(*a, inv));
        // Clear the new pivot column from the existing rows.
        for row in &mut self.rows {
            let a = row[pivot];
            if a != 0 {
                for (k, &b) in v.iter().enumerate().take(pivot + 1) {
                    if b != 0 {
                        row[k] = f.sub(row[k], f.mul(a, b));
                    }
                }
            }
        }
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(v.clone());
        Some(v)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }
}
