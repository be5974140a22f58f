use crate::error::{Error, Result};
use crate::scalar::Real;

/// Numerical cutoffs used for rank, equality and probability decisions.
///
/// Matrix comparisons scale `eps_eq` by the ambient dimension (see
/// [`Tolerance::matrix_eq`]); vector comparisons use it unscaled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T: Real> {
    pub eps_rank: T,
    pub eps_eq: T,
    pub eps_prob: T,
}

impl<T: Real> Tolerance<T> {
    /// Every cutoff must lie strictly inside `(0, 1e-3)`.
    pub fn new(eps_rank: T, eps_eq: T, eps_prob: T) -> Result<Self> {
        let upper = T::lit(1e-3);
        for (name, v) in [("eps_rank", eps_rank), ("eps_eq", eps_eq), ("eps_prob", eps_prob)] {
            if !(v > T::zero() && v < upper) {
                return Err(Error::InvalidTolerance(format!("{name} = {v} outside (0, 1e-3)")));
            }
        }
        Ok(Self { eps_rank, eps_eq, eps_prob })
    }

    /// Same tolerance with `eps_eq` replaced.
    pub fn with_eps_eq(self, eps_eq: T) -> Result<Self> {
        Self::new(self.eps_rank, eps_eq, self.eps_prob)
    }

    /// Frobenius-norm cutoff for matrices acting on `C^dim`.
    pub fn matrix_eq(&self, dim: usize) -> T {
        self.eps_eq * T::lit(dim.max(1) as f64)
    }

    /// Eigenvalue window for rank decisions on `dim x dim` operators.
    pub fn eigen_window(&self, dim: usize) -> T {
        self.eps_rank * T::lit(dim.max(1) as f64)
    }
}

impl<T: Real> Default for Tolerance<T> {
    fn default() -> Self {
        Self { eps_rank: T::lit(T::EPS_RANK), eps_eq: T::lit(T::EPS_EQ), eps_prob: T::lit(T::EPS_PROB) }
    }
}
