use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::eigen::HermitianEigen;
use super::linalg::{ComplexMatrix, ComplexVector};
use super::tolerance::Tolerance;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Closed subspace of `C^d`, stored as an orthonormal basis.
///
/// An empty basis is the zero subspace `{0}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<T: Real> {
    ambient_dim: usize,
    basis: Vec<ComplexVector<T>>,
}

impl<T: Real> Subspace<T> {
    /// Wraps a basis that is already orthonormal, checking the Gram matrix
    /// against the identity within `eps_eq`.
    pub fn from_orthonormal(
        ambient_dim: usize,
        basis: Vec<ComplexVector<T>>,
        tol: &Tolerance<T>,
    ) -> Result<Self> {
        check_ambient(ambient_dim)?;
        if basis.len() > ambient_dim {
            return Err(Error::InvalidArgument(format!(
                "{} basis vectors exceed ambient dimension {ambient_dim}",
                basis.len()
            )));
        }
        if let Some(bad) = basis.iter().find(|b| b.dim() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: bad.dim() });
        }
        let k = basis.len();
        let mut defect = T::zero();
        for i in 0..k {
            for j in 0..k {
                let expected = if i == j { T::one() } else { T::zero() };
                defect = defect + (basis[i].dot(&basis[j]) - Complex::new(expected, T::zero())).norm_sqr();
            }
        }
        if defect.sqrt() > tol.eps_eq {
            return Err(Error::InvalidArgument(format!("basis is not orthonormal (Gram defect {})", defect.sqrt())));
        }
        Ok(Self { ambient_dim, basis })
    }

    pub(crate) fn from_raw(ambient_dim: usize, basis: Vec<ComplexVector<T>>) -> Self {
        Self { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_raw(ambient_dim, (0..ambient_dim).map(|i| ComplexVector::basis(ambient_dim, i)).collect())
    }

    /// Span of the standard basis vectors with the given zero-based indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Result<Self> {
        check_ambient(ambient_dim)?;
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        if let Some(&bad) = sorted.iter().find(|&&i| i >= ambient_dim) {
            return Err(Error::InvalidArgument(format!("index {bad} out of range for dimension {ambient_dim}")));
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("duplicate coordinate index".into()));
        }
        Ok(Self::from_raw(ambient_dim, sorted.into_iter().map(|i| ComplexVector::basis(ambient_dim, i)).collect()))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[ComplexVector<T>] {
        &self.basis
    }

    /// Orthogonal projector `P = sum_i b_i b_i†`.
    pub fn projector(&self) -> ComplexMatrix<T> {
        projector(self)
    }

    /// `P v`, computed from the basis without forming `P`.
    pub fn project(&self, v: &ComplexVector<T>) -> ComplexVector<T> {
        let mut out = ComplexVector::zeros(self.ambient_dim);
        for b in &self.basis {
            out.axpy(b.dot(v), b);
        }
        out
    }

    /// Whether `v` lies in the subspace, i.e. `‖P v - v‖ ≤ eps_eq`.
    pub fn contains(&self, v: &ComplexVector<T>, tol: &Tolerance<T>) -> bool {
        self.project(v).distance(v) <= tol.eps_eq
    }

    /// Projector equality within the dimension-scaled `eps_eq`.
    pub fn approx_eq(&self, other: &Self, tol: &Tolerance<T>) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.projector().distance(&other.projector()) <= tol.matrix_eq(self.ambient_dim)
    }
}

fn check_ambient(ambient_dim: usize) -> Result<()> {
    if ambient_dim == 0 {
        return Err(Error::InvalidArgument("ambient dimension must be positive".into()));
    }
    Ok(())
}

/// Orthonormal basis of the span of `vectors`.
///
/// Modified Gram-Schmidt with one re-orthogonalization pass. A vector whose
/// residual after both passes has norm `≤ eps_rank` is dropped.
pub fn orthonormalize<T: Real>(
    ambient_dim: usize,
    vectors: &[ComplexVector<T>],
    tol: &Tolerance<T>,
) -> Result<Subspace<T>> {
    check_ambient(ambient_dim)?;
    if let Some(bad) = vectors.iter().find(|v| v.dim() != ambient_dim) {
        return Err(Error::DimensionMismatch { expected: ambient_dim, found: bad.dim() });
    }
    let mut basis: Vec<ComplexVector<T>> = Vec::with_capacity(ambient_dim);
    for v in vectors {
        if basis.len() == ambient_dim {
            break;
        }
        let mut r = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let coeff = b.dot(&r);
                r.axpy(-coeff, b);
            }
        }
        let norm = r.norm();
        if norm > tol.eps_rank {
            basis.push(r.scale_real(T::one() / norm));
        }
    }
    Ok(Subspace::from_raw(ambient_dim, basis))
}

pub fn projector<T: Real>(s: &Subspace<T>) -> ComplexMatrix<T> {
    let d = s.ambient_dim;
    let mut p = ComplexMatrix::zeros(d, d);
    for b in &s.basis {
        let e = b.entries();
        for i in 0..d {
            for j in 0..d {
                p[(i, j)] = p[(i, j)] + e[i] * e[j].conj();
            }
        }
    }
    p
}

/// Recovers the range of an orthogonal projector.
///
/// `p` must be Hermitian and idempotent within the dimension-scaled `eps_eq`;
/// the basis is the eigenvectors of `p` with eigenvalue near 1.
pub fn subspace_from_projector<T: Real>(p: &ComplexMatrix<T>, tol: &Tolerance<T>) -> Result<Subspace<T>> {
    if !p.is_square() {
        return Err(Error::InvalidProjector(format!("shape {}x{} is not square", p.rows(), p.cols())));
    }
    let d = p.rows();
    let cutoff = tol.matrix_eq(d);
    let herm = p.hermiticity_defect();
    if herm > cutoff {
        return Err(Error::InvalidProjector(format!("not Hermitian (‖P - P†‖ = {herm:e})")));
    }
    let idem = p.idempotency_defect();
    if idem > cutoff {
        return Err(Error::InvalidProjector(format!("not idempotent (‖P² - P‖ = {idem:e})")));
    }
    Ok(eigenspace_above_half(p))
}

/// Range of an operator whose spectrum is known to cluster at 0 and 1.
pub(crate) fn eigenspace_above_half<T: Real>(p: &ComplexMatrix<T>) -> Subspace<T> {
    let half = T::lit(0.5);
    let basis = HermitianEigen::new(p).select(|lambda| lambda > half);
    Subspace::from_raw(p.rows(), basis)
}

fn gaussian_vector<T: Real>(dim: usize, rng: &mut ChaCha8Rng) -> ComplexVector<T> {
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let entries = (0..dim)
        .map(|_| {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            Complex::new(T::lit(re * scale), T::lit(im * scale))
        })
        .collect();
    ComplexVector::from_raw(entries)
}

/// Seeded random subspace: the span of `dim` complex Gaussian vectors.
pub fn random_subspace<T: Real>(ambient_dim: usize, dim: usize, seed: u64) -> Result<Subspace<T>> {
    check_ambient(ambient_dim)?;
    if dim > ambient_dim {
        return Err(Error::InvalidArgument(format!("subspace dimension {dim} exceeds ambient dimension {ambient_dim}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tol = Tolerance::default();
    // Gaussian vectors are independent almost surely; redraw in the
    // measure-zero case that one is rejected.
    let mut vectors: Vec<ComplexVector<T>> = Vec::with_capacity(dim);
    loop {
        while vectors.len() < dim {
            vectors.push(gaussian_vector(ambient_dim, &mut rng));
        }
        let s = orthonormalize(ambient_dim, &vectors, &tol)?;
        if s.dim() == dim {
            return Ok(s);
        }
        vectors = s.basis;
    }
}

/// Seeded random unitary on `C^dim` (orthonormalized Gaussian columns).
pub fn random_unitary<T: Real>(dim: usize, seed: u64) -> Result<ComplexMatrix<T>> {
    let s = random_subspace::<T>(dim, dim, seed)?;
    ComplexMatrix::from_columns(&s.basis)
}

/// Image of `s` under the unitary `u`.
pub fn transform<T: Real>(u: &ComplexMatrix<T>, s: &Subspace<T>) -> Result<Subspace<T>> {
    if u.rows() != s.ambient_dim || u.cols() != s.ambient_dim {
        return Err(Error::DimensionMismatch { expected: s.ambient_dim, found: u.rows() });
    }
    Ok(Subspace::from_raw(s.ambient_dim, s.basis.iter().map(|b| u.mul_vec(b)).collect()))
}

impl<T: Real> Subspace<T> {
    pub(crate) fn first(&self) -> Option<&ComplexVector<T>> {
        self.basis.first()
    }
}
