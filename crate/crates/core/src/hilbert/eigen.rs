//! Cyclic Jacobi eigensolver for small dense Hermitian matrices.

use num_complex::Complex;
use num_traits::Zero;

use super::linalg::{ComplexMatrix, ComplexVector};
use crate::scalar::Real;

const MAX_SWEEPS: usize = 64;

/// Eigen-decomposition `A = V diag(values) V†` of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T: Real> {
    /// Eigenvalues in ascending order.
    pub values: Vec<T>,
    /// Unitary matrix whose `k`-th column belongs to `values[k]`.
    pub vectors: ComplexMatrix<T>,
}

impl<T: Real> HermitianEigen<T> {
    /// Decomposes `a`, which must be square. Only the Hermitian part
    /// `(A + A†)/2` is used.
    pub fn new(a: &ComplexMatrix<T>) -> Self {
        assert!(a.is_square(), "eigen-decomposition needs a square matrix");
        let n = a.rows();
        let half = T::lit(0.5);
        let mut m = ComplexMatrix::from_fn(n, n, |i, j| (a[(i, j)] + a[(j, i)].conj()) * half);
        for i in 0..n {
            m[(i, i)] = Complex::new(m[(i, i)].re, T::zero());
        }
        let mut v = ComplexMatrix::identity(n);

        let scale = m.frobenius_norm();
        let threshold = T::epsilon() * T::epsilon() * scale * scale;
        for _ in 0..MAX_SWEEPS {
            if off_diagonal_sqr(&m) <= threshold {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    rotate(&mut m, &mut v, p, q);
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| m[(i, i)].re.partial_cmp(&m[(j, j)].re).expect("finite eigenvalues"));
        let values = order.iter().map(|&k| m[(k, k)].re).collect();
        let vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
        Self { values, vectors }
    }

    /// Eigenvectors whose eigenvalue satisfies `keep`, with canonical phase.
    pub fn select(&self, mut keep: impl FnMut(T) -> bool) -> Vec<ComplexVector<T>> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &lambda)| keep(lambda))
            .map(|(k, _)| self.vectors.column(k).canonical_phase())
            .collect()
    }
}

fn off_diagonal_sqr<T: Real>(m: &ComplexMatrix<T>) -> T {
    let n = m.rows();
    let mut acc = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc = acc + m[(i, j)].norm_sqr();
            }
        }
    }
    acc
}

/// One Jacobi rotation annihilating `m[(p, q)]`.
///
/// The unitary is `G = D R` where `D = diag(1, e^{-i phi})` on (p, q) makes the
/// pivot real and `R` is the classical real rotation.
fn rotate<T: Real>(m: &mut ComplexMatrix<T>, v: &mut ComplexMatrix<T>, p: usize, q: usize) {
    let apq = m[(p, q)];
    let mag = apq.norm();
    if mag.is_zero() {
        return;
    }
    let n = m.rows();
    let phase = apq / mag;
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let two = T::lit(2.0);

    let theta = (aqq - app) / (two * mag);
    let t = if theta.is_infinite() {
        T::zero()
    } else {
        let sign = if theta < T::zero() { -T::one() } else { T::one() };
        sign / (theta.abs() + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;

    // G[p][p] = c, G[p][q] = s, G[q][p] = -s conj(phase), G[q][q] = c conj(phase)
    let g_pp = Complex::new(c, T::zero());
    let g_pq = Complex::new(s, T::zero());
    let g_qp = phase.conj() * (-s);
    let g_qq = phase.conj() * c;

    // m <- m G (columns)
    for i in 0..n {
        let mip = m[(i, p)];
        let miq = m[(i, q)];
        m[(i, p)] = mip * g_pp + miq * g_qp;
        m[(i, q)] = mip * g_pq + miq * g_qq;
    }
    // m <- G† m (rows)
    for j in 0..n {
        let mpj = m[(p, j)];
        let mqj = m[(q, j)];
        m[(p, j)] = g_pp.conj() * mpj + g_qp.conj() * mqj;
        m[(q, j)] = g_pq.conj() * mpj + g_qq.conj() * mqj;
    }
    m[(p, q)] = Complex::zero();
    m[(q, p)] = Complex::zero();
    m[(p, p)] = Complex::new(m[(p, p)].re, T::zero());
    m[(q, q)] = Complex::new(m[(q, q)].re, T::zero());

    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * g_pp + viq * g_qp;
        v[(i, q)] = vip * g_pq + viq * g_qq;
    }
}
