use std::fmt::Write as _;
use std::path::Path;

use qlor::hilbert::MatrixFile;
use qlor::invariants::{run_all, CheckConfig};
use qlor::logic::{complement, disjunction_witness, is_true, join, meet, negation_witness};
use qlor::measurement::{epr_state, truth_from_distribution};
use qlor::vessels::vessel_truth;
use qlor::{ComplexVector, Error, JointMeasurement, Proposition, State, Tolerance, TruthStatus, VesselState};
use serde::Serialize;

use crate::report::{
    CheckReport, ConceptReport, EprReport, NegationReport, NegationTruth, PairTruth, PropositionJson, VectorJson,
    WitnessReport,
};
use crate::PairArgs;

pub const EPS_ENV: &str = "QLOR_EPS";

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, files or preconditions.
    Invalid(String),
    /// A computed result failed its own postcondition.
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Numerical(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(m) => f.write_str(m),
            CliError::Numerical(m) => write!(f, "numerical failure: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

pub struct Outcome {
    pub json: String,
    pub summary: String,
    pub code: u8,
}

fn emit(report: &impl Serialize, summary: String) -> Result<Outcome, CliError> {
    let json = serde_json::to_string(report).map_err(|e| CliError::Numerical(e.to_string()))?;
    Ok(Outcome { json, summary, code: 0 })
}

/// Default tolerance, with `eps_eq` taken from `QLOR_EPS` when set.
pub fn tolerance_from_env() -> Result<Tolerance, CliError> {
    let tol = Tolerance::default();
    match std::env::var(EPS_ENV) {
        Ok(raw) => {
            let eps: f64 = raw.trim().parse().map_err(|_| CliError::Invalid(format!("{EPS_ENV}={raw:?} is not a number")))?;
            Ok(tol.with_eps_eq(eps)?)
        }
        Err(_) => Ok(tol),
    }
}

fn load_projector(label: &str, path: &Path, tol: &Tolerance) -> Result<Proposition, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let matrix = MatrixFile::from_json(&text)?.to_matrix()?;
    Ok(Proposition::from_projector(label, &matrix, tol)?)
}

fn proposition(
    label: &str,
    dim: Option<usize>,
    indices: &Option<Vec<usize>>,
    file: &Option<std::path::PathBuf>,
    tol: &Tolerance,
) -> Result<Proposition, CliError> {
    let p = match (indices, file) {
        (_, Some(path)) => load_projector(label, path, tol)?,
        (Some(idx), None) => {
            let d = dim.ok_or_else(|| CliError::Invalid(format!("--dim is required with --{label}")))?;
            Proposition::coordinate(label, d, idx)?
        }
        (None, None) => return Err(CliError::Invalid(format!("proposition {label} needs --{label} or --{label}-file"))),
    };
    if let Some(d) = dim {
        if d != p.ambient_dim() {
            return Err(CliError::Invalid(format!(
                "--dim {d} does not match proposition {label} of dimension {}",
                p.ambient_dim()
            )));
        }
    }
    Ok(p)
}

fn pair(args: &PairArgs, tol: &Tolerance) -> Result<(Proposition, Proposition), CliError> {
    let a = proposition("a", args.dim, &args.a, &args.a_file, tol)?;
    let b = proposition("b", args.dim, &args.b, &args.b_file, tol)?;
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: a.ambient_dim(), found: b.ambient_dim() }.into());
    }
    Ok((a, b))
}

fn describe(p: &Proposition) -> PropositionJson {
    PropositionJson { label: p.label().to_string(), dim: p.dim() }
}

fn pair_truth(a: &Proposition, b: &Proposition, s: &State, tol: &Tolerance) -> Result<PairTruth, CliError> {
    Ok(PairTruth {
        a: is_true(a, s, tol)?,
        b: is_true(b, s, tol)?,
        conjunction: is_true(&meet(a, b, tol)?, s, tol)?,
        disjunction: is_true(&join(a, b, tol)?, s, tol)?,
    })
}

pub fn epr(args: &PairArgs, eigenvalues: &[f64], samples: u64, seed: u64, tol: &Tolerance) -> Result<Outcome, CliError> {
    let eigenvalues: [f64; 4] = eigenvalues
        .try_into()
        .map_err(|_| CliError::Invalid(format!("--eigenvalues needs 4 values, got {}", eigenvalues.len())))?;
    let (a, b) = pair(args, tol)?;
    let m = JointMeasurement::new(a.clone(), b.clone(), eigenvalues, tol)?;
    let state = epr_state(&a, &b, tol)?;
    let distribution = m.outcome_distribution(&state)?;
    let correlated = m.is_epr_correlated(&state, tol)?;
    if !correlated {
        return Err(CliError::Numerical(format!("state is not EPR-correlated: {:?}", distribution.as_array())));
    }
    let truth = pair_truth(&a, &b, &state, tol)?;
    let operational = truth_from_distribution(&distribution, tol);
    if operational.conjunction != truth.conjunction || operational.disjunction != truth.disjunction {
        return Err(CliError::Numerical("distribution truth disagrees with lattice truth".into()));
    }
    let run = (samples > 0).then(|| m.sample_run(&state, samples, seed)).transpose()?;

    let mut summary = format!(
        "EPR state: μ(yes,yes)={:.3e} μ(yes,no)={:.6} μ(no,yes)={:.6} μ(no,no)={:.3e}; a {}, b {}, a∨b {}",
        distribution.p_yy, distribution.p_yn, distribution.p_ny, distribution.p_nn, truth.a, truth.b, truth.disjunction
    );
    if let Some(r) = &run {
        let _ = write!(summary, "\nsampled {} draws: {:?}", r.n, r.counts);
    }
    let report = EprReport {
        command: "epr",
        dim: a.ambient_dim(),
        a: describe(&a),
        b: describe(&b),
        eigenvalues,
        state: VectorJson::from(&state),
        distribution,
        epr_correlated: correlated,
        truth,
        samples: run,
    };
    emit(&report, summary)
}

pub fn witness(args: &PairArgs, tol: &Tolerance) -> Result<Outcome, CliError> {
    let (a, b) = pair(args, tol)?;
    let w = disjunction_witness(&a, &b, tol)?;
    let truth = w.as_ref().map(|s| pair_truth(&a, &b, s, tol)).transpose()?;
    let summary = match &truth {
        Some(t) => {
            if !(t.disjunction.is_true() && !t.a.is_true() && !t.b.is_true()) {
                return Err(CliError::Numerical("witness does not separate a∨b from a, b".into()));
            }
            format!("witness found: a∨b {}, a {}, b {}", t.disjunction, t.a, t.b)
        }
        None => "no witness: one proposition implies the other".to_string(),
    };
    let report = WitnessReport {
        command: "witness",
        dim: a.ambient_dim(),
        a: describe(&a),
        b: describe(&b),
        witness: w.as_ref().map(VectorJson::from),
        truth,
    };
    emit(&report, summary)
}

pub fn negation(args: &PairArgs, tol: &Tolerance) -> Result<Outcome, CliError> {
    let a = proposition("a", args.dim, &args.a, &args.a_file, tol)?;
    let not_a = complement(&a);
    let w = negation_witness(&a, tol);
    let truth = w
        .as_ref()
        .map(|s| -> Result<_, CliError> { Ok(NegationTruth { a: is_true(&a, s, tol)?, not_a: is_true(&not_a, s, tol)? }) })
        .transpose()?;
    let summary = match &truth {
        Some(t) => {
            if t.a.is_true() || t.not_a.is_true() {
                return Err(CliError::Numerical("negation witness makes a or ¬a true".into()));
            }
            format!("witness found: a {}, ¬a {}", t.a, t.not_a)
        }
        None => "no witness: a is the zero or the full subspace".to_string(),
    };
    let report = NegationReport {
        command: "negation",
        dim: a.ambient_dim(),
        a: describe(&a),
        witness: w.as_ref().map(VectorJson::from),
        truth,
    };
    emit(&report, summary)
}

pub fn vessels(volume: f64, threshold: f64, samples: u64, seed: u64, tol: &Tolerance) -> Result<Outcome, CliError> {
    if !(threshold.is_finite() && threshold >= 0.0) {
        return Err(CliError::Invalid(format!("threshold must be finite and non-negative, got {threshold}")));
    }
    let report = vessel_truth(&VesselState::new(volume)?, threshold, samples, seed, tol)?;
    let d = &report.distribution;
    let t = &report.truth;
    let summary = format!(
        "vessels V={volume} t={threshold} n={samples}: yy={} yn={} ny={} nn={}; a {}, b {}, a∧b {}, a∨b {}",
        d.p_yy, d.p_yn, d.p_ny, d.p_nn, t.a, t.b, t.conjunction, t.disjunction
    );
    emit(&report, summary)
}

pub fn concept(instances: usize, tol: &Tolerance) -> Result<Outcome, CliError> {
    if instances == 0 {
        return Err(CliError::Invalid("--instances must be at least 1".into()));
    }
    let props = (0..instances)
        .map(|i| Proposition::coordinate(format!("a{}", i + 1), instances, &[i]))
        .collect::<Result<Vec<_>, _>>()?;
    let basis: Vec<_> = (0..instances).map(|i| ComplexVector::basis(instances, i)).collect();
    let state = State::superposition(&basis)?;
    let instance_truth = props.iter().map(|p| is_true(p, &state, tol)).collect::<Result<Vec<_>, _>>()?;
    let mut disjunction = props[0].clone();
    for p in &props[1..] {
        disjunction = join(&disjunction, p, tol)?;
    }
    let disjunction = is_true(&disjunction, &state, tol)?;
    if !disjunction.is_true() {
        return Err(CliError::Numerical("the n-fold disjunction is not true in the superposition".into()));
    }
    let not_true = instance_truth.iter().filter(|t| **t == TruthStatus::NotTrue).count();
    let summary = format!("concept with {instances} instances: {not_true} instance propositions not true, disjunction {disjunction}");
    let report =
        ConceptReport { command: "concept", instances, state: VectorJson::from(&state), instance_truth, disjunction };
    emit(&report, summary)
}

pub fn check(trials: usize, samples: u64, seed: u64, tol: &Tolerance) -> Result<Outcome, CliError> {
    if trials == 0 || samples == 0 {
        return Err(CliError::Invalid("--trials and --samples must be positive".into()));
    }
    let config = CheckConfig { trials, seed, samples };
    let suites = run_all(&config, tol);
    let passed = suites.iter().all(|s| s.passed());
    let mut summary = String::new();
    for s in &suites {
        let _ = writeln!(summary, "{}: {} checks, {} failures", s.suite, s.checked, s.failures.len());
        for f in &s.failures {
            let _ = writeln!(summary, "  FAIL {} (seed {}): {}", f.property, f.seed, f.detail);
        }
    }
    summary.push_str(if passed { "all suites passed" } else { "some suites failed" });
    let report = CheckReport { command: "check", trials, samples, seed, passed, suites };
    let mut outcome = emit(&report, summary)?;
    outcome.code = if passed { 0 } else { 1 };
    Ok(outcome)
}
