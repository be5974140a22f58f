//! Connected vessels of water: a classical system whose joint measurement
//! shows the same correlations as an EPR-like quantum state.
//!
//! Pouring out both sides at once splits the total volume at a fraction `f`
//! drawn uniformly from `(0, 1)`. Proposition `a` is "more than `t` liters on
//! the left", `b` is "more than `t` liters on the right".

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Open01};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::Tolerance;
use crate::measurement::{truth_from_distribution, JointOutcome, OutcomeCounts, OutcomeDistribution};
use crate::logic::TruthStatus;
use crate::scalar::Real;

/// Default threshold, in liters.
pub const DEFAULT_THRESHOLD: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VesselState<T: Real> {
    total_volume: T,
}

impl<T: Real> VesselState<T> {
    pub fn new(total_volume: T) -> Result<Self> {
        if !(total_volume.is_finite() && total_volume >= T::zero()) {
            return Err(Error::InvalidArgument(format!("volume must be finite and non-negative, got {total_volume}")));
        }
        Ok(Self { total_volume })
    }

    pub fn total_volume(&self) -> T {
        self.total_volume
    }
}

/// Liters collected on each side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitOutcome<T: Real> {
    pub left: T,
    pub right: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// "There is more than `threshold` liters at `side`."
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VesselProposition<T: Real> {
    pub side: Side,
    pub threshold: T,
}

impl<T: Real> VesselProposition<T> {
    pub fn new(side: Side, threshold: T) -> Result<Self> {
        check_threshold(threshold)?;
        Ok(Self { side, threshold })
    }

    pub fn holds(&self, o: &SplitOutcome<T>) -> bool {
        let amount = match self.side {
            Side::Left => o.left,
            Side::Right => o.right,
        };
        amount > self.threshold
    }
}

fn check_threshold<T: Real>(threshold: T) -> Result<()> {
    if !(threshold.is_finite() && threshold >= T::zero()) {
        return Err(Error::InvalidArgument(format!("threshold must be finite and non-negative, got {threshold}")));
    }
    Ok(())
}

fn split<T: Real>(s: &VesselState<T>, rng: &mut ChaCha8Rng) -> SplitOutcome<T> {
    let f: f64 = Open01.sample(rng);
    let left = T::lit(f) * s.total_volume;
    SplitOutcome { left, right: s.total_volume - left }
}

/// One seeded pour.
pub fn pour<T: Real>(s: &VesselState<T>, seed: u64) -> SplitOutcome<T> {
    split(s, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Classifies a split against both propositions, with strict inequalities.
pub fn classify<T: Real>(o: &SplitOutcome<T>, threshold: T) -> JointOutcome {
    JointOutcome::from_answers(o.left > threshold, o.right > threshold)
}

/// Tallies of `n` pours drawn from one seeded stream.
pub fn pour_counts<T: Real>(s: &VesselState<T>, threshold: T, n: u64, seed: u64) -> Result<OutcomeCounts> {
    check_threshold(threshold)?;
    if n == 0 {
        return Err(Error::InvalidArgument("sample count must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = OutcomeCounts::default();
    for _ in 0..n {
        counts.record(classify(&split(s, &mut rng), threshold));
    }
    Ok(counts)
}

pub fn empirical_distribution<T: Real>(
    s: &VesselState<T>,
    threshold: T,
    n: u64,
    seed: u64,
) -> Result<OutcomeDistribution<T>> {
    Ok(pour_counts(s, threshold, n, seed)?.frequencies())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VesselTruth {
    pub a: TruthStatus,
    pub b: TruthStatus,
    #[serde(rename = "and")]
    pub conjunction: TruthStatus,
    #[serde(rename = "or")]
    pub disjunction: TruthStatus,
}

/// Serialized as `{"volume", "threshold", "n", "distribution", "truth"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VesselReport<T: Real> {
    pub volume: T,
    pub threshold: T,
    pub n: u64,
    pub distribution: OutcomeDistribution<T>,
    pub truth: VesselTruth,
}

/// Truth requires certainty over every sampled pour: `a` is true iff
/// `p_yy + p_yn = 1`, and likewise for `b`.
pub fn vessel_truth<T: Real>(
    s: &VesselState<T>,
    threshold: T,
    n: u64,
    seed: u64,
    tol: &Tolerance<T>,
) -> Result<VesselReport<T>> {
    let distribution = empirical_distribution(s, threshold, n, seed)?;
    let certain = |p: T| (p - T::one()).abs() <= tol.eps_prob;
    let connectives = truth_from_distribution(&distribution, tol);
    let truth = VesselTruth {
        a: TruthStatus::from_bool(certain(distribution.p_yy + distribution.p_yn)),
        b: TruthStatus::from_bool(certain(distribution.p_yy + distribution.p_ny)),
        conjunction: connectives.conjunction,
        disjunction: connectives.disjunction,
    };
    Ok(VesselReport { volume: s.total_volume, threshold, n, distribution, truth })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vessel(v: f64) -> VesselState<f64> {
        VesselState::new(v).unwrap()
    }

    #[test]
    fn invalid_inputs() {
        assert!(VesselState::new(-1.0).is_err());
        assert!(VesselState::new(f64::NAN).is_err());
        assert!(VesselProposition::new(Side::Left, -0.5).is_err());
        assert!(empirical_distribution(&vessel(20.0), 10.0, 0, 1).is_err());
        assert!(vessel_truth(&vessel(20.0), 10.0, 0, 1, &Tolerance::default()).is_err());
    }

    #[test]
    fn pour_examples() {
        for seed in 0..20 {
            assert_eq!(pour(&vessel(0.0), seed), SplitOutcome { left: 0.0, right: 0.0 });
        }
        assert_eq!(pour(&vessel(20.0), 5), pour(&vessel(20.0), 5));
        let o = pour(&vessel(20.0), 5);
        assert!(o.left > 0.0 && o.right > 0.0);
        assert_eq!(o.left + o.right, 20.0);
    }

    #[test]
    fn mean_left_is_half_the_volume() {
        let s = vessel(20.0);
        let n = 100_000;
        let mean = (0..n).map(|seed| pour(&s, seed).left).sum::<f64>() / n as f64;
        // sd of the mean: 20 / sqrt(12 n) ≈ 0.018
        assert!((mean - 10.0).abs() <= 0.1, "mean {mean}");
    }

    #[test]
    fn classify_examples() {
        let o = |left, right| SplitOutcome { left, right };
        assert_eq!(classify(&o(15.0, 5.0), 10.0), JointOutcome::YN);
        assert_eq!(classify(&o(10.0, 10.0), 10.0), JointOutcome::NN);
        assert_eq!(classify(&o(12.0, 18.0), 10.0), JointOutcome::YY);
        assert_eq!(classify(&o(3.0, 17.0), 10.0), JointOutcome::NY);
        let a = VesselProposition::new(Side::Left, 10.0).unwrap();
        let b = VesselProposition::new(Side::Right, 10.0).unwrap();
        assert!(a.holds(&o(15.0, 5.0)) && !b.holds(&o(15.0, 5.0)));
    }

    #[test]
    fn empirical_distribution_examples() {
        let d = empirical_distribution(&vessel(20.0), 10.0, 100_000, 1).unwrap();
        assert_eq!(d.p_yy, 0.0);
        assert_eq!(d.p_nn, 0.0);
        assert!((d.p_yn - 0.5).abs() <= 0.01 && (d.p_ny - 0.5).abs() <= 0.01);

        let d = empirical_distribution(&vessel(0.0), 10.0, 37, 1).unwrap();
        assert_eq!(d.p_nn, 1.0);

        let d = empirical_distribution(&vessel(30.0), 10.0, 100_000, 1).unwrap();
        assert!((d.p_yy - 1.0 / 3.0).abs() <= 0.02, "p_yy {}", d.p_yy);
    }

    #[test]
    fn truth_examples() {
        let tol = Tolerance::default();
        let t = vessel_truth(&vessel(20.0), 10.0, 100_000, 2, &tol).unwrap().truth;
        assert_eq!(
            [t.a, t.b, t.conjunction, t.disjunction],
            [TruthStatus::NotTrue, TruthStatus::NotTrue, TruthStatus::NotTrue, TruthStatus::True]
        );
        let t = vessel_truth(&vessel(0.0), 10.0, 1000, 2, &tol).unwrap().truth;
        assert!([t.a, t.b, t.conjunction, t.disjunction].iter().all(|s| !s.is_true()));
        // P(left > 10) = 0.9 for V = 100: high probability is still not truth
        let t = vessel_truth(&vessel(100.0), 10.0, 100_000, 2, &tol).unwrap().truth;
        assert_eq!(
            [t.a, t.b, t.conjunction, t.disjunction],
            [TruthStatus::NotTrue, TruthStatus::NotTrue, TruthStatus::NotTrue, TruthStatus::True]
        );
    }

    #[test]
    fn report_json_shape() {
        let r = vessel_truth(&vessel(20.0), 10.0, 10, 0, &Tolerance::default()).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["distribution", "n", "threshold", "truth", "volume"]);
        assert_eq!(v["truth"]["or"], "True");
        assert_eq!(v["truth"]["and"], "NotTrue");
        assert!(v["distribution"]["yy"].is_number());
    }
}
