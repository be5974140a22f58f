//! Randomized invariant suites for the logic, measurement and vessels layers.
//!
//! Each property is evaluated on seeded trials; a failure records the
//! property name and the trial seed so it can be replayed.

use serde::Serialize;

use crate::error::Result;
use crate::generate::{
    mix_seed, random_compatible_pair, random_epr_pair, random_proposition, random_state, random_state_in,
    random_subproposition,
};
use crate::hilbert::{ComplexMatrix, Tolerance};
use crate::logic::{
    complement, disjunction_witness, implies, is_true, join, meet, Proposition, State, TruthStatus,
};
use crate::measurement::{epr_state, truth_from_distribution, JointMeasurement, JointOutcome};
use crate::scalar::Real;
use crate::vessels::{empirical_distribution, pour, pour_counts, vessel_truth, VesselState};

/// Ambient dimensions exercised by the lattice suites.
pub const DIMENSIONS: [usize; 5] = [2, 3, 4, 6, 8];

#[derive(Debug, Clone, Copy)]
pub struct CheckConfig {
    /// Trials per property and dimension.
    pub trials: usize,
    pub seed: u64,
    /// Draws per sampling-soundness trial.
    pub samples: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self { trials: 100, seed: 0, samples: 100_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyFailure {
    pub property: String,
    pub seed: u64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub failures: Vec<PropertyFailure>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        Self { suite: suite.into(), checked: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, property: &str, seed: u64, outcome: Result<std::result::Result<(), String>>) {
        self.checked += 1;
        let detail = match outcome {
            Ok(Ok(())) => return,
            Ok(Err(detail)) => detail,
            Err(e) => format!("error: {e}"),
        };
        self.failures.push(PropertyFailure { property: property.into(), seed, detail });
    }
}

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn same_projector<T: Real>(x: &ComplexMatrix<T>, y: &ComplexMatrix<T>, tol: &Tolerance<T>) -> Check {
    let dist = x.distance(y);
    ensure(dist <= tol.matrix_eq(x.rows()), || format!("projector distance {dist}"))
}

/// A state biased towards interesting subspaces so truth checks are not
/// vacuous: uniform, or inside one of `a`, `b`, `a ∧ b`, `a ∨ b`.
fn probe_state<T: Real>(a: &Proposition<T>, b: &Proposition<T>, seed: u64, tol: &Tolerance<T>) -> Result<State<T>> {
    let d = a.ambient_dim();
    let pick = mix_seed(seed, 77) % 5;
    let inside = match pick {
        1 => random_state_in(a.subspace(), seed)?,
        2 => random_state_in(b.subspace(), seed)?,
        3 => random_state_in(meet(a, b, tol)?.subspace(), seed)?,
        4 => random_state_in(join(a, b, tol)?.subspace(), seed)?,
        _ => None,
    };
    match inside {
        Some(s) => Ok(s),
        None => random_state(d, seed),
    }
}

/// Lattice and truth properties of the connectives.
pub fn logic_suite<T: Real>(config: &CheckConfig, tol: &Tolerance<T>) -> SuiteReport {
    let mut report = SuiteReport::new("logic");
    for d in DIMENSIONS {
        for trial in 0..config.trials {
            let seed = mix_seed(config.seed, (d as u64) << 32 | trial as u64);
            let pair = || -> Result<(Proposition<T>, Proposition<T>)> {
                Ok((random_proposition("a", d, mix_seed(seed, 1))?, random_proposition("b", d, mix_seed(seed, 2))?))
            };

            report.record("dimension formula", seed, pair().and_then(|(a, b)| {
                let (j, m) = (join(&a, &b, tol)?, meet(&a, &b, tol)?);
                Ok(ensure(j.dim() + m.dim() == a.dim() + b.dim(), || {
                    format!("dim join {} + dim meet {} != {} + {}", j.dim(), m.dim(), a.dim(), b.dim())
                }))
            }));

            report.record("de morgan", seed, pair().and_then(|(a, b)| {
                let lhs = complement(&join(&a, &b, tol)?).projector();
                let rhs = meet(&complement(&a), &complement(&b), tol)?.projector();
                Ok(same_projector(&lhs, &rhs, tol))
            }));

            report.record("double complement", seed, pair().map(|(a, _)| {
                same_projector(&complement(&complement(&a)).projector(), &a.projector(), tol)
            }));

            report.record("orthomodularity", seed, (|| {
                let b = random_proposition::<T>("b", d, mix_seed(seed, 3))?;
                let a = random_subproposition("a", b.subspace(), mix_seed(seed, 4))?;
                if !implies(&a, &b, tol)? {
                    return Ok(Err("generated a does not imply b".to_string()));
                }
                let rebuilt = join(&a, &meet(&b, &complement(&a), tol)?, tol)?;
                Ok(same_projector(&rebuilt.projector(), &b.projector(), tol))
            })());

            report.record("conjunction is classical", seed, pair().and_then(|(a, b)| {
                let p = probe_state(&a, &b, mix_seed(seed, 5), tol)?;
                let both = is_true(&a, &p, tol)?.is_true() && is_true(&b, &p, tol)?.is_true();
                let m = is_true(&meet(&a, &b, tol)?, &p, tol)?.is_true();
                Ok(ensure(both == m, || format!("a∧b true = {m}, a and b true = {both}")))
            }));

            report.record("implication is classical", seed, (|| {
                let b = random_proposition::<T>("b", d, mix_seed(seed, 6))?;
                let a = random_subproposition("a", b.subspace(), mix_seed(seed, 7))?;
                let p = probe_state(&a, &b, mix_seed(seed, 8), tol)?;
                let ok = !is_true(&a, &p, tol)?.is_true() || is_true(&b, &p, tol)?.is_true();
                Ok(ensure(implies(&a, &b, tol)? && ok, || "a true but b not true although a ↦ b".to_string()))
            })());

            report.record("disjunction one-way", seed, pair().and_then(|(a, b)| {
                let p = probe_state(&a, &b, mix_seed(seed, 9), tol)?;
                let j = join(&a, &b, tol)?;
                if (is_true(&a, &p, tol)?.is_true() || is_true(&b, &p, tol)?.is_true())
                    && !is_true(&j, &p, tol)?.is_true()
                {
                    return Ok(Err("a or b true but a∨b not true".to_string()));
                }
                let comparable = implies(&a, &b, tol)? || implies(&b, &a, tol)?;
                match disjunction_witness(&a, &b, tol)? {
                    None if comparable => Ok(Ok(())),
                    None => Ok(Err("no witness for an incomparable pair".to_string())),
                    Some(_) if comparable => Ok(Err("witness for a comparable pair".to_string())),
                    Some(w) => Ok(ensure(
                        is_true(&j, &w, tol)?.is_true()
                            && !is_true(&a, &w, tol)?.is_true()
                            && !is_true(&b, &w, tol)?.is_true(),
                        || "witness does not refute the converse".to_string(),
                    )),
                }
            }));

            report.record("negation one-way", seed, pair().and_then(|(a, _)| {
                let p = probe_state(&a, &complement(&a), mix_seed(seed, 10), tol)?;
                let not_a = is_true(&complement(&a), &p, tol)?;
                let a_true = is_true(&a, &p, tol)?;
                Ok(ensure(!(not_a.is_true() && a_true.is_true()), || "both a and ¬a true".to_string()))
            }));

            report.record("compatible meet and join", seed, (|| {
                let (a, b) = random_compatible_pair::<T>(d, mix_seed(seed, 11))?;
                let (pa, pb) = (a.projector(), b.projector());
                let prod = &pa * &pb;
                let sum = &(&pa + &pb) - &prod;
                if let Err(e) = same_projector(&meet(&a, &b, tol)?.projector(), &prod, tol) {
                    return Ok(Err(format!("meet: {e}")));
                }
                Ok(same_projector(&join(&a, &b, tol)?.projector(), &sum, tol).map_err(|e| format!("join: {e}")))
            })());
        }
    }
    report
}

/// Spectral and operational properties of the joint experiment.
pub fn measurement_suite<T: Real>(config: &CheckConfig, tol: &Tolerance<T>) -> SuiteReport {
    let mut report = SuiteReport::new("measurement");
    let eps_prob = tol.eps_prob;
    for trial in 0..config.trials {
        let seed = mix_seed(config.seed ^ 0x6d65_6173, trial as u64);
        let d = DIMENSIONS[trial % DIMENSIONS.len()];
        let measurement = || -> Result<JointMeasurement<T>> {
            let (a, b) = random_compatible_pair(d, seed)?;
            JointMeasurement::with_default_eigenvalues(a, b, tol)
        };

        report.record("product projectors resolve the identity", seed, measurement().map(|m| {
            let id = ComplexMatrix::identity(d);
            let qs: Vec<_> = JointOutcome::ALL.iter().map(|&o| m.product_projector(o).clone()).collect();
            let total = qs.iter().fold(ComplexMatrix::zeros(d, d), |acc, q| &acc + q);
            same_projector(&total, &id, tol)?;
            for (i, qi) in qs.iter().enumerate() {
                same_projector(&(qi * qi), qi, tol).map_err(|e| format!("Q{i} idempotent: {e}"))?;
                for (j, qj) in qs.iter().enumerate().skip(i + 1) {
                    let prod = (qi * qj).frobenius_norm();
                    ensure(prod <= tol.matrix_eq(d), || format!("Q{i} Q{j} norm {prod}"))?;
                }
            }
            Ok(())
        }));

        report.record("spectral consistency", seed, measurement().map(|m| {
            let h = m.joint_operator();
            for (k, (&outcome, lambda)) in JointOutcome::ALL.iter().zip(m.eigenvalues()).enumerate() {
                let range = crate::hilbert::eigenspace_above_half(m.product_projector(outcome));
                for v in range.basis() {
                    let err = h.mul_vec(v).distance(&v.scale_real(lambda));
                    if err > tol.matrix_eq(d) {
                        return Err(format!("H v != λ{} v (error {err})", k + 1));
                    }
                }
            }
            Ok(())
        }));

        report.record("truth-table equivalence", seed, measurement().and_then(|m| {
            let p = probe_state(m.a(), m.b(), mix_seed(seed, 1), tol)?;
            let t = truth_from_distribution(&m.outcome_distribution(&p)?, tol);
            let conj = is_true(&meet(m.a(), m.b(), tol)?, &p, tol)?;
            let disj = is_true(&join(m.a(), m.b(), tol)?, &p, tol)?;
            Ok(ensure(t.conjunction == conj && t.disjunction == disj, || {
                format!("distribution ({}, {}) vs lattice ({conj}, {disj})", t.conjunction, t.disjunction)
            }))
        }));

        report.record("epr state", seed, (|| {
            let (a, b) = random_epr_pair::<T>(d, seed)?;
            let v = epr_state(&a, &b, tol)?;
            let m = JointMeasurement::with_default_eigenvalues(a.clone(), b.clone(), tol)?;
            let dist = m.outcome_distribution(&v)?;
            let half = T::lit(0.5);
            let exact = (dist.p_yy).abs() <= eps_prob
                && (dist.p_yn - half).abs() <= eps_prob
                && (dist.p_ny - half).abs() <= eps_prob
                && (dist.p_nn).abs() <= eps_prob;
            Ok(ensure(
                exact
                    && m.is_epr_correlated(&v, tol)?
                    && is_true(&join(&a, &b, tol)?, &v, tol)? == TruthStatus::True
                    && is_true(&a, &v, tol)? == TruthStatus::NotTrue
                    && is_true(&b, &v, tol)? == TruthStatus::NotTrue,
                || format!("distribution {:?}", dist.as_array()),
            ))
        })());
    }

    // sampling is costly; a handful of trials suffices
    for trial in 0..config.trials.min(5) {
        let seed = mix_seed(config.seed ^ 0x7361_6d70, trial as u64);
        let d = DIMENSIONS[trial % DIMENSIONS.len()];
        report.record("sampling soundness", seed, (|| {
            let (a, b) = random_compatible_pair::<T>(d, seed)?;
            let m = JointMeasurement::with_default_eigenvalues(a, b, tol)?;
            let p = random_state(d, mix_seed(seed, 1))?;
            let dist = m.outcome_distribution(&p)?;
            let run = m.sample_run(&p, config.samples, seed)?;
            let n = config.samples as f64;
            for o in JointOutcome::ALL {
                let prob = dist.get(o).as_f64();
                let freq = run.counts.get(o) as f64 / n;
                let sigma = (prob * (1.0 - prob) / n).sqrt();
                if (freq - prob).abs() > 5.0 * sigma + 1e-12 {
                    return Ok(Err(format!("{o:?}: frequency {freq} vs probability {prob}")));
                }
            }
            Ok(Ok(()))
        })());
    }
    report
}

/// Properties of the connected-vessels model.
pub fn vessels_suite<T: Real>(config: &CheckConfig, tol: &Tolerance<T>) -> SuiteReport {
    let mut report = SuiteReport::new("vessels");
    let threshold = T::lit(10.0);
    for trial in 0..config.trials {
        let seed = mix_seed(config.seed ^ 0x7665_7373, trial as u64);
        let fraction = (mix_seed(seed, 1) >> 11) as f64 / (1u64 << 53) as f64;

        report.record("conservation", seed, (|| {
            let s = VesselState::new(T::lit(100.0 * fraction))?;
            let o = pour(&s, seed);
            let err = (o.left + o.right - s.total_volume()).abs();
            Ok(ensure(o.left >= T::zero() && o.right >= T::zero() && err <= T::epsilon() * s.total_volume(), || {
                format!("split ({}, {}) of {}", o.left, o.right, s.total_volume())
            }))
        })());

        // below 2t both sides cannot exceed t; above 2t both cannot stay at or below it
        report.record("excluded outcomes", seed, (|| {
            let below = T::lit(10.0 + 10.0 * fraction.clamp(1e-3, 1.0 - 1e-3));
            let c = pour_counts(&VesselState::new(below)?, threshold, 1000, seed)?;
            if c.yy != 0 || c.yn == 0 || c.ny == 0 {
                return Ok(Err(format!("V = {below}: counts {c:?}")));
            }
            let above = T::lit(20.0 + 80.0 * fraction.max(1e-3));
            let c = pour_counts(&VesselState::new(above)?, threshold, 1000, seed)?;
            Ok(ensure(c.nn == 0 && c.yn + c.ny + c.yy == 1000, || format!("V = {above}: counts {c:?}")))
        })());

        report.record("boundary volume", seed, (|| {
            let c = pour_counts(&VesselState::new(T::lit(20.0))?, threshold, 1000, seed)?;
            Ok(ensure(c.yy == 0 && c.nn == 0, || format!("counts {c:?}")))
        })());
    }

    let n = config.samples;
    report.record("monotone yes-yes", config.seed, (|| {
        let mut previous = T::zero();
        for v in [20.0, 25.0, 30.0, 40.0] {
            let p = empirical_distribution(&VesselState::new(T::lit(v))?, threshold, n, config.seed)?.p_yy;
            if p < previous {
                return Ok(Err(format!("P(YY) decreased to {p} at V = {v}")));
            }
            previous = p;
        }
        Ok(Ok(()))
    })());

    report.record("parallel with epr state", config.seed, (|| {
        let t = vessel_truth(&VesselState::new(T::lit(20.0))?, threshold, n, config.seed, tol)?.truth;
        let (a, b) = (Proposition::<T>::coordinate("a", 4, &[0, 1])?, Proposition::coordinate("b", 4, &[0, 2])?);
        let m = JointMeasurement::with_default_eigenvalues(a.clone(), b.clone(), tol)?;
        let v = epr_state(&a, &b, tol)?;
        let q = truth_from_distribution(&m.outcome_distribution(&v)?, tol);
        let quantum = [is_true(&a, &v, tol)?, is_true(&b, &v, tol)?, q.conjunction, q.disjunction];
        let classical = [t.a, t.b, t.conjunction, t.disjunction];
        Ok(ensure(quantum == classical, || format!("vessels {classical:?} vs quantum {quantum:?}")))
    })());
    report
}

/// All suites, sorted by suite name.
pub fn run_all<T: Real>(config: &CheckConfig, tol: &Tolerance<T>) -> Vec<SuiteReport> {
    let mut reports = vec![logic_suite(config, tol), measurement_suite(config, tol), vessels_suite(config, tol)];
    reports.sort_by(|x, y| x.suite.cmp(&y.suite));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let config = CheckConfig { trials: 5, seed: 42, samples: 2000 };
        for report in run_all::<f64>(&config, &Tolerance::default()) {
            assert!(report.passed(), "{report:#?}");
            assert!(report.checked > 0);
        }
    }

    #[test]
    fn failures_carry_seed() {
        let mut r = SuiteReport::new("x");
        r.record("p", 9, Ok(Err("bad".into())));
        r.record("q", 10, Ok(Ok(())));
        assert_eq!(r.checked, 2);
        assert_eq!(r.failures, vec![PropertyFailure { property: "p".into(), seed: 9, detail: "bad".into() }]);
    }
}
