//! The joint yes-no experiment on a compatible pair of propositions.
//!
//! For commuting `P_a`, `P_b` the four product projectors `P_a P_b`,
//! `P_a (1 - P_b)`, `(1 - P_a) P_b`, `(1 - P_a)(1 - P_b)` resolve the identity,
//! and outcome probabilities follow the Born rule.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{EprSide, Error, Result};
use crate::hilbert::{eigenspace_above_half, ComplexMatrix, Tolerance};
use crate::logic::{commutator_norm, Proposition, State, TruthStatus};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum JointOutcome {
    YY,
    YN,
    NY,
    NN,
}

impl JointOutcome {
    pub const ALL: [JointOutcome; 4] = [JointOutcome::YY, JointOutcome::YN, JointOutcome::NY, JointOutcome::NN];

    pub fn from_answers(a: bool, b: bool) -> Self {
        match (a, b) {
            (true, true) => JointOutcome::YY,
            (true, false) => JointOutcome::YN,
            (false, true) => JointOutcome::NY,
            (false, false) => JointOutcome::NN,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Probabilities of (yes,yes), (yes,no), (no,yes), (no,no).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OutcomeDistribution<T: Real> {
    #[serde(rename = "yy")]
    pub p_yy: T,
    #[serde(rename = "yn")]
    pub p_yn: T,
    #[serde(rename = "ny")]
    pub p_ny: T,
    #[serde(rename = "nn")]
    pub p_nn: T,
}

impl<T: Real> OutcomeDistribution<T> {
    /// Validates each cell in `[0, 1]` and the total against 1, within `eps_prob`.
    pub fn new(p_yy: T, p_yn: T, p_ny: T, p_nn: T, tol: &Tolerance<T>) -> Result<Self> {
        let d = Self { p_yy, p_yn, p_ny, p_nn };
        let eps = tol.eps_prob;
        if d.as_array().iter().any(|&p| !(p >= -eps && p <= T::one() + eps)) {
            return Err(Error::InvalidArgument(format!("probability outside [0, 1]: {:?}", d.as_array())));
        }
        if (d.total() - T::one()).abs() > eps {
            return Err(Error::InvalidArgument(format!("probabilities sum to {}", d.total())));
        }
        Ok(d)
    }

    pub fn as_array(&self) -> [T; 4] {
        [self.p_yy, self.p_yn, self.p_ny, self.p_nn]
    }

    pub fn get(&self, outcome: JointOutcome) -> T {
        self.as_array()[outcome.index()]
    }

    pub fn total(&self) -> T {
        self.p_yy + self.p_yn + self.p_ny + self.p_nn
    }

    /// Inverse-transform draw from `u` in `[0, 1)`.
    pub fn invert(&self, u: T) -> JointOutcome {
        let mut cumulative = T::zero();
        for outcome in &JointOutcome::ALL[..3] {
            cumulative = cumulative + self.get(*outcome);
            if u < cumulative {
                return *outcome;
            }
        }
        JointOutcome::NN
    }
}

/// Default outcome eigenvalues `λ = (1, 2, 3, 4)`.
pub fn default_eigenvalues<T: Real>() -> [T; 4] {
    [T::lit(1.0), T::lit(2.0), T::lit(3.0), T::lit(4.0)]
}

/// The experiment `α ∧ β` testing a compatible pair `(a, b)` together.
#[derive(Debug, Clone)]
pub struct JointMeasurement<T: Real> {
    a: Proposition<T>,
    b: Proposition<T>,
    eigenvalues: [T; 4],
    // P_a P_b, P_a (1 - P_b), (1 - P_a) P_b, (1 - P_a)(1 - P_b)
    products: [ComplexMatrix<T>; 4],
}

impl<T: Real> JointMeasurement<T> {
    /// Fails with [`Error::Incompatible`] if the projectors do not commute and
    /// with [`Error::DegenerateEigenvalues`] unless the `λ_k` are distinct.
    pub fn new(a: Proposition<T>, b: Proposition<T>, eigenvalues: [T; 4], tol: &Tolerance<T>) -> Result<Self> {
        if a.ambient_dim() != b.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: a.ambient_dim(), found: b.ambient_dim() });
        }
        for i in 0..4 {
            if !eigenvalues[i].is_finite() {
                return Err(Error::NonFinite(i));
            }
            for j in i + 1..4 {
                if eigenvalues[i] == eigenvalues[j] {
                    return Err(Error::DegenerateEigenvalues);
                }
            }
        }
        let d = a.ambient_dim();
        let comm = commutator_norm(&a, &b);
        if comm > tol.matrix_eq(d) {
            return Err(Error::Incompatible(comm.as_f64()));
        }
        let id = ComplexMatrix::identity(d);
        let pa = a.projector();
        let pb = b.projector();
        let qa = &id - &pa;
        let qb = &id - &pb;
        let products = [&pa * &pb, &pa * &qb, &qa * &pb, &qa * &qb];
        Ok(Self { a, b, eigenvalues, products })
    }

    pub fn with_default_eigenvalues(a: Proposition<T>, b: Proposition<T>, tol: &Tolerance<T>) -> Result<Self> {
        Self::new(a, b, default_eigenvalues(), tol)
    }

    pub fn a(&self) -> &Proposition<T> {
        &self.a
    }

    pub fn b(&self) -> &Proposition<T> {
        &self.b
    }

    pub fn eigenvalues(&self) -> [T; 4] {
        self.eigenvalues
    }

    pub fn ambient_dim(&self) -> usize {
        self.a.ambient_dim()
    }

    /// The product projector for one outcome.
    pub fn product_projector(&self, outcome: JointOutcome) -> &ComplexMatrix<T> {
        &self.products[outcome.index()]
    }

    /// `H = Σ_k λ_k Q_k` over the four product projectors `Q_k`.
    pub fn joint_operator(&self) -> ComplexMatrix<T> {
        let d = self.ambient_dim();
        self.products
            .iter()
            .zip(self.eigenvalues)
            .fold(ComplexMatrix::zeros(d, d), |acc, (q, lambda)| &acc + &q.scale(lambda))
    }

    /// Born-rule probabilities `‖Q_k v‖²`.
    pub fn outcome_distribution(&self, p: &State<T>) -> Result<OutcomeDistribution<T>> {
        if p.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim(), found: p.dim() });
        }
        let [yy, yn, ny, nn] = std::array::from_fn(|k| self.products[k].mul_vec(p.vector()).norm_sqr());
        Ok(OutcomeDistribution { p_yy: yy, p_yn: yn, p_ny: ny, p_nn: nn })
    }

    /// Only (yes,no) and (no,yes) occur, both with nonzero probability.
    pub fn is_epr_correlated(&self, p: &State<T>, tol: &Tolerance<T>) -> Result<bool> {
        let d = self.outcome_distribution(p)?;
        let eps = tol.eps_prob;
        Ok(d.p_yy <= eps && d.p_nn <= eps && d.p_yn > eps && d.p_ny > eps)
    }

    /// One seeded draw of the experiment.
    pub fn sample_outcome(&self, p: &State<T>, seed: u64) -> Result<JointOutcome> {
        let d = self.outcome_distribution(p)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(draw(&d, &mut rng))
    }

    /// `n` draws from one seeded stream.
    pub fn sample_run(&self, p: &State<T>, n: u64, seed: u64) -> Result<SampleRun> {
        let d = self.outcome_distribution(p)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut counts = OutcomeCounts::default();
        for _ in 0..n {
            counts.record(draw(&d, &mut rng));
        }
        Ok(SampleRun { counts, n, seed })
    }
}

fn draw<T: Real, R: Rng>(d: &OutcomeDistribution<T>, rng: &mut R) -> JointOutcome {
    let u: f64 = rng.random();
    d.invert(T::lit(u))
}

/// Free-function form of [`JointMeasurement::joint_operator`].
pub fn joint_operator<T: Real>(m: &JointMeasurement<T>) -> ComplexMatrix<T> {
    m.joint_operator()
}

pub fn outcome_distribution<T: Real>(m: &JointMeasurement<T>, p: &State<T>) -> Result<OutcomeDistribution<T>> {
    m.outcome_distribution(p)
}

pub fn is_epr_correlated<T: Real>(m: &JointMeasurement<T>, p: &State<T>, tol: &Tolerance<T>) -> Result<bool> {
    m.is_epr_correlated(p, tol)
}

pub fn sample_outcome<T: Real>(m: &JointMeasurement<T>, p: &State<T>, seed: u64) -> Result<JointOutcome> {
    m.sample_outcome(p, seed)
}

/// Outcome tallies; merge batches by adding.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeCounts {
    pub yy: u64,
    pub yn: u64,
    pub ny: u64,
    pub nn: u64,
}

impl OutcomeCounts {
    pub fn record(&mut self, outcome: JointOutcome) {
        match outcome {
            JointOutcome::YY => self.yy += 1,
            JointOutcome::YN => self.yn += 1,
            JointOutcome::NY => self.ny += 1,
            JointOutcome::NN => self.nn += 1,
        }
    }

    pub fn get(&self, outcome: JointOutcome) -> u64 {
        match outcome {
            JointOutcome::YY => self.yy,
            JointOutcome::YN => self.yn,
            JointOutcome::NY => self.ny,
            JointOutcome::NN => self.nn,
        }
    }

    pub fn total(&self) -> u64 {
        self.yy + self.yn + self.ny + self.nn
    }

    pub fn merge(self, other: Self) -> Self {
        Self { yy: self.yy + other.yy, yn: self.yn + other.yn, ny: self.ny + other.ny, nn: self.nn + other.nn }
    }

    /// Relative frequencies. Panics on an empty tally.
    pub fn frequencies<T: Real>(&self) -> OutcomeDistribution<T> {
        let n = self.total();
        assert!(n > 0, "no outcomes recorded");
        let f = |c: u64| T::lit(c as f64 / n as f64);
        OutcomeDistribution { p_yy: f(self.yy), p_yn: f(self.yn), p_ny: f(self.ny), p_nn: f(self.nn) }
    }
}

/// Serialized as `{"counts": {...}, "n": n, "seed": s}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRun {
    pub counts: OutcomeCounts,
    pub n: u64,
    pub seed: u64,
}

/// The state `(x + y)/√2` with `x` the first basis vector of the range of
/// `P_a (1 - P_b)` and `y` that of `(1 - P_a) P_b`.
pub fn epr_state<T: Real>(a: &Proposition<T>, b: &Proposition<T>, tol: &Tolerance<T>) -> Result<State<T>> {
    let m = JointMeasurement::with_default_eigenvalues(a.clone(), b.clone(), tol)?;
    epr_state_for(&m)
}

pub(crate) fn epr_state_for<T: Real>(m: &JointMeasurement<T>) -> Result<State<T>> {
    let yes_no = eigenspace_above_half(m.product_projector(JointOutcome::YN));
    let no_yes = eigenspace_above_half(m.product_projector(JointOutcome::NY));
    let x = yes_no.basis().first().ok_or(Error::NoEprState(EprSide::YesNo))?;
    let y = no_yes.basis().first().ok_or(Error::NoEprState(EprSide::NoYes))?;
    let v = (x + y).scale_real(T::lit(std::f64::consts::FRAC_1_SQRT_2));
    // x ⊥ y, so v is a unit vector up to rounding
    State::normalize(&v)
}

/// Truth of the conjunction and disjunction read off a joint distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectiveTruth {
    pub conjunction: TruthStatus,
    pub disjunction: TruthStatus,
}

/// Conjunction is true iff (yes,yes) is certain; disjunction iff (no,no)
/// is impossible.
pub fn truth_from_distribution<T: Real>(d: &OutcomeDistribution<T>, tol: &Tolerance<T>) -> ConnectiveTruth {
    ConnectiveTruth {
        conjunction: TruthStatus::from_bool(d.p_yy >= T::one() - tol.eps_prob),
        disjunction: TruthStatus::from_bool(d.p_nn <= tol.eps_prob),
    }
}
