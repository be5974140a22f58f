//! JSON matrix file format: `{"rows": r, "cols": c, "re": [...], "im": [...]}`,
//! row-major with `r * c` entries in each array.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::linalg::{ComplexMatrix, ComplexVector};
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl MatrixFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MatrixFile(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix file serializes")
    }

    pub fn to_matrix<T: Real>(&self) -> Result<ComplexMatrix<T>> {
        let n = self.rows * self.cols;
        if self.re.len() != n || self.im.len() != n {
            return Err(Error::MatrixFile(format!(
                "expected {n} real and imaginary parts, found {} and {}",
                self.re.len(),
                self.im.len()
            )));
        }
        let entries = self.re.iter().zip(&self.im).map(|(&re, &im)| Complex::new(T::lit(re), T::lit(im))).collect();
        ComplexMatrix::new(self.rows, self.cols, entries)
    }

    pub fn from_matrix<T: Real>(m: &ComplexMatrix<T>) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            re: m.entries().iter().map(|z| z.re.as_f64()).collect(),
            im: m.entries().iter().map(|z| z.im.as_f64()).collect(),
        }
    }

    /// A vector is written as a single column.
    pub fn from_vector<T: Real>(v: &ComplexVector<T>) -> Self {
        Self {
            rows: v.dim(),
            cols: 1,
            re: v.entries().iter().map(|z| z.re.as_f64()).collect(),
            im: v.entries().iter().map(|z| z.im.as_f64()).collect(),
        }
    }
}
