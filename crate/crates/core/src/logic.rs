//! Propositions as closed subspaces, the lattice connectives, and truth.
//!
//! A proposition is true in a state exactly when the state vector lies in its
//! subspace. "Not true" is weaker than "the negation is true": a state may
//! make neither `a` nor `¬a` true, and `a ∨ b` may be true while neither
//! `a` nor `b` is.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{
    eigenspace_above_half, orthonormalize, subspace_from_projector, ComplexMatrix, ComplexVector, HermitianEigen,
    Subspace, Tolerance,
};
use crate::scalar::Real;

/// A yes-no proposition, represented by its closed subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct Proposition<T: Real> {
    label: String,
    subspace: Subspace<T>,
}

impl<T: Real> Proposition<T> {
    pub fn new(label: impl Into<String>, subspace: Subspace<T>) -> Self {
        Self { label: label.into(), subspace }
    }

    /// Span of the standard basis vectors `e_i`, `i` in `indices` (zero-based).
    pub fn coordinate(label: impl Into<String>, ambient_dim: usize, indices: &[usize]) -> Result<Self> {
        Ok(Self::new(label, Subspace::coordinate(ambient_dim, indices)?))
    }

    pub fn from_projector(label: impl Into<String>, p: &ComplexMatrix<T>, tol: &Tolerance<T>) -> Result<Self> {
        Ok(Self::new(label, subspace_from_projector(p, tol)?))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn subspace(&self) -> &Subspace<T> {
        &self.subspace
    }

    pub fn ambient_dim(&self) -> usize {
        self.subspace.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn projector(&self) -> ComplexMatrix<T> {
        self.subspace.projector()
    }

    pub fn relabel(self, label: impl Into<String>) -> Self {
        Self { label: label.into(), ..self }
    }

    /// Equality as lattice elements: projectors agree within tolerance.
    pub fn equivalent(&self, other: &Self, tol: &Tolerance<T>) -> bool {
        self.subspace.approx_eq(&other.subspace, tol)
    }
}

/// A pure state, the unit vector `v_p`.
#[derive(Debug, Clone, PartialEq)]
pub struct State<T: Real> {
    vector: ComplexVector<T>,
}

impl<T: Real> State<T> {
    /// Accepts `vector` if its norm is 1 within `eps_eq`.
    pub fn new(vector: ComplexVector<T>, tol: &Tolerance<T>) -> Result<Self> {
        let norm = vector.norm();
        if (norm - T::one()).abs() > tol.eps_eq {
            return Err(Error::NotUnit(norm.as_f64()));
        }
        Ok(Self { vector })
    }

    /// Normalizes a nonzero vector into a state.
    pub fn normalize(vector: &ComplexVector<T>) -> Result<Self> {
        Ok(Self { vector: vector.normalized()? })
    }

    /// Uniform superposition `(v_1 + ... + v_n) / ‖v_1 + ... + v_n‖`.
    pub fn superposition(vectors: &[ComplexVector<T>]) -> Result<Self> {
        let first = vectors.first().ok_or(Error::ZeroVector)?;
        let mut sum = ComplexVector::zeros(first.dim());
        for v in vectors {
            if v.dim() != first.dim() {
                return Err(Error::DimensionMismatch { expected: first.dim(), found: v.dim() });
            }
            sum.axpy(Complex::new(T::one(), T::zero()), v);
        }
        Self::normalize(&sum)
    }

    pub fn vector(&self) -> &ComplexVector<T> {
        &self.vector
    }

    pub fn dim(&self) -> usize {
        self.vector.dim()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TruthStatus {
    True,
    NotTrue,
}

impl TruthStatus {
    pub fn from_bool(b: bool) -> Self {
        if b {
            TruthStatus::True
        } else {
            TruthStatus::NotTrue
        }
    }

    pub fn is_true(self) -> bool {
        self == TruthStatus::True
    }
}

impl std::fmt::Display for TruthStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TruthStatus::True => f.write_str("True"),
            TruthStatus::NotTrue => f.write_str("NotTrue"),
        }
    }
}

fn same_dim<T: Real>(a: &Proposition<T>, b: &Proposition<T>) -> Result<usize> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: a.ambient_dim(), found: b.ambient_dim() });
    }
    Ok(a.ambient_dim())
}

/// `a ↦ b`, i.e. `M_a ⊆ M_b`, tested as `‖P_b P_a - P_a‖_F` small.
pub fn implies<T: Real>(a: &Proposition<T>, b: &Proposition<T>, tol: &Tolerance<T>) -> Result<bool> {
    let d = same_dim(a, b)?;
    let pa = a.projector();
    Ok((&b.projector() * &pa).distance(&pa) <= tol.matrix_eq(d))
}

/// `a ∧ b`: the intersection `M_a ∩ M_b`, computed as the eigenvalue-2
/// eigenspace of `P_a + P_b`.
pub fn meet<T: Real>(a: &Proposition<T>, b: &Proposition<T>, tol: &Tolerance<T>) -> Result<Proposition<T>> {
    let d = same_dim(a, b)?;
    let label = format!("({} ∧ {})", a.label, b.label);
    // trivial cases keep the exact basis
    if a.subspace.is_zero() || b.subspace.is_zero() {
        return Ok(Proposition::new(label, Subspace::zero(d)));
    }
    let sum = &a.projector() + &b.projector();
    let two = T::lit(2.0);
    let window = tol.eigen_window(d);
    let basis = HermitianEigen::new(&sum).select(|lambda| (lambda - two).abs() <= window);
    Ok(Proposition::new(label, orthonormalize(d, &basis, tol)?))
}

/// `a ∨ b`: the span of `M_a ∪ M_b`.
pub fn join<T: Real>(a: &Proposition<T>, b: &Proposition<T>, tol: &Tolerance<T>) -> Result<Proposition<T>> {
    let d = same_dim(a, b)?;
    let vectors: Vec<_> = a.subspace.basis().iter().chain(b.subspace.basis()).cloned().collect();
    Ok(Proposition::new(format!("({} ∨ {})", a.label, b.label), orthonormalize(d, &vectors, tol)?))
}

/// `¬a`: the orthogonal complement `M_a^⊥`.
pub fn complement<T: Real>(a: &Proposition<T>) -> Proposition<T> {
    let d = a.ambient_dim();
    let label = format!("¬{}", a.label);
    if a.subspace.is_zero() {
        return Proposition::new(label, Subspace::full(d));
    }
    if a.subspace.is_full() {
        return Proposition::new(label, Subspace::zero(d));
    }
    let rest = &ComplexMatrix::identity(d) - &a.projector();
    Proposition::new(label, eigenspace_above_half(&rest))
}

/// `a` is true in `p` iff `P_a v_p = v_p` within `eps_eq`.
pub fn is_true<T: Real>(a: &Proposition<T>, p: &State<T>, tol: &Tolerance<T>) -> Result<TruthStatus> {
    if a.ambient_dim() != p.dim() {
        return Err(Error::DimensionMismatch { expected: a.ambient_dim(), found: p.dim() });
    }
    Ok(TruthStatus::from_bool(a.subspace.contains(&p.vector, tol)))
}

/// `‖P_a P_b - P_b P_a‖_F` small.
pub fn is_compatible<T: Real>(a: &Proposition<T>, b: &Proposition<T>, tol: &Tolerance<T>) -> Result<bool> {
    let d = same_dim(a, b)?;
    Ok(commutator_norm(a, b) <= tol.matrix_eq(d))
}

pub(crate) fn commutator_norm<T: Real>(a: &Proposition<T>, b: &Proposition<T>) -> T {
    a.projector().commutator_norm(&b.projector())
}

/// A state making `a ∨ b` true while neither `a` nor `b` is true.
///
/// With `c = a ∧ b`, takes the first basis vector `x` of `a ∧ ¬c` and `y` of
/// `b ∧ ¬c` and returns `(x + y) / ‖x + y‖`. Returns `None` when one
/// proposition implies the other.
pub fn disjunction_witness<T: Real>(
    a: &Proposition<T>,
    b: &Proposition<T>,
    tol: &Tolerance<T>,
) -> Result<Option<State<T>>> {
    if implies(a, b, tol)? || implies(b, a, tol)? {
        return Ok(None);
    }
    let not_common = complement(&meet(a, b, tol)?);
    let a_rest = meet(a, &not_common, tol)?;
    let b_rest = meet(b, &not_common, tol)?;
    match (a_rest.subspace.first(), b_rest.subspace.first()) {
        (Some(x), Some(y)) => Ok(Some(State::normalize(&(x + y))?)),
        // unreachable for exact arithmetic once neither implication holds
        _ => Ok(None),
    }
}

/// A state in which neither `a` nor `¬a` is true: `(u + w)/√2` with `u` the
/// first basis vector of `M_a` and `w` that of `M_a^⊥`. `None` for the zero
/// and full subspaces.
pub fn negation_witness<T: Real>(a: &Proposition<T>, _tol: &Tolerance<T>) -> Option<State<T>> {
    let not_a = complement(a);
    let u = a.subspace.first()?;
    let w = not_a.subspace.first()?;
    State::normalize(&(u + w)).ok()
}
