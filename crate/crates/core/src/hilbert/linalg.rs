//! Dense complex vectors and matrices.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

fn check_finite<T: Real>(entries: &[Complex<T>]) -> Result<()> {
    match entries.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
        Some(i) => Err(Error::NonFinite(i)),
        None => Ok(()),
    }
}

/// Column vector in `C^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector<T: Real> {
    entries: Vec<Complex<T>>,
}

impl<T: Real> ComplexVector<T> {
    pub fn new(entries: Vec<Complex<T>>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("vector dimension must be positive".into()));
        }
        check_finite(&entries)?;
        Ok(Self { entries })
    }

    /// Builds a vector from real entries.
    pub fn from_real(entries: &[T]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| Complex::new(x, T::zero())).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Self { entries: vec![Complex::zero(); dim] }
    }

    /// The standard basis vector `e_index` of `C^dim` (zero-based index).
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[index] = Complex::one();
        v
    }

    pub(crate) fn from_raw(entries: Vec<Complex<T>>) -> Self {
        Self { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Complex<T>> {
        self.entries
    }

    /// Inner product `<self, other>`, conjugate-linear in `self`.
    pub fn dot(&self, other: &Self) -> Complex<T> {
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(Complex::zero(), |acc, (a, b)| acc + a.conj() * b)
    }

    pub fn norm_sqr(&self) -> T {
        self.entries.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr())
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self::from_raw(self.entries.iter().map(|&z| z * factor).collect())
    }

    pub fn scale_real(&self, factor: T) -> Self {
        Self::from_raw(self.entries.iter().map(|&z| z * factor).collect())
    }

    /// `self += factor * other`.
    pub fn axpy(&mut self, factor: Complex<T>, other: &Self) {
        for (a, &b) in self.entries.iter_mut().zip(&other.entries) {
            *a = *a + factor * b;
        }
    }

    /// Returns the unit vector in the direction of `self`.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == T::zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self.scale_real(T::one() / n))
    }

    /// Multiplies by the global phase that makes the first entry of
    /// non-negligible magnitude real and positive.
    pub fn canonical_phase(&self) -> Self {
        let cutoff = T::lit(T::EPS_RANK) * self.norm();
        match self.entries.iter().find(|z| z.norm() > cutoff) {
            Some(z) => self.scale(z.conj() / z.norm()),
            None => self.clone(),
        }
    }

    pub fn distance(&self, other: &Self) -> T {
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(T::zero(), |acc, (a, b)| acc + (a - b).norm_sqr())
            .sqrt()
    }
}

impl<T: Real> Add for &ComplexVector<T> {
    type Output = ComplexVector<T>;

    fn add(self, rhs: Self) -> ComplexVector<T> {
        assert_eq!(self.dim(), rhs.dim(), "vector dimensions differ");
        ComplexVector::from_raw(self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect())
    }
}

impl<T: Real> Sub for &ComplexVector<T> {
    type Output = ComplexVector<T>;

    fn sub(self, rhs: Self) -> ComplexVector<T> {
        assert_eq!(self.dim(), rhs.dim(), "vector dimensions differ");
        ComplexVector::from_raw(self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect())
    }
}

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T: Real> {
    rows: usize,
    cols: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex<T>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument("matrix shape must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        check_finite(&entries)?;
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Complex::zero(); rows * cols] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self { rows, cols, entries }
    }

    /// Real diagonal matrix.
    pub fn diagonal(values: &[T]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex::new(v, T::zero());
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[ComplexVector<T>]) -> Result<Self> {
        let rows = columns.first().map(ComplexVector::dim).ok_or_else(|| {
            Error::InvalidArgument("at least one column required".into())
        })?;
        if let Some(bad) = columns.iter().find(|c| c.dim() != rows) {
            return Err(Error::DimensionMismatch { expected: rows, found: bad.dim() });
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| columns[j].entries()[i]))
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

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> ComplexVector<T> {
        ComplexVector::from_raw((0..self.rows).map(|i| self[(i, j)]).collect())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.rows.min(self.cols)).fold(Complex::zero(), |acc, i| acc + self[(i, i)])
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt()
    }

    pub fn scale(&self, factor: T) -> Self {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|&z| z * factor).collect() }
    }

    pub fn mul_vec(&self, v: &ComplexVector<T>) -> ComplexVector<T> {
        assert_eq!(self.cols, v.dim(), "matrix-vector dimensions differ");
        ComplexVector::from_raw(
            (0..self.rows)
                .map(|i| {
                    let row = &self.entries[i * self.cols..(i + 1) * self.cols];
                    row.iter().zip(v.entries()).fold(Complex::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        )
    }

    /// `‖self - other‖_F`.
    pub fn distance(&self, other: &Self) -> T {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shapes differ");
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(T::zero(), |acc, (a, b)| acc + (a - b).norm_sqr())
            .sqrt()
    }

    /// `‖A - A†‖_F`.
    pub fn hermiticity_defect(&self) -> T {
        self.distance(&self.adjoint())
    }

    /// `‖A² - A‖_F`.
    pub fn idempotency_defect(&self) -> T {
        (self * self).distance(self)
    }

    /// `‖AB - BA‖_F`.
    pub fn commutator_norm(&self, other: &Self) -> T {
        (self * other).distance(&(other * self))
    }
}

impl<T: Real> std::ops::Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.entries[i * self.cols + j]
    }
}

impl<T: Real> std::ops::IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.entries[i * self.cols + j]
    }
}

impl<T: Real> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimensions differ");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = out[(i, j)] + a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl<T: Real> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn add(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shapes differ");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<T: Real> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn sub(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shapes differ");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}
