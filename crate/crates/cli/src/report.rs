//! JSON report shapes. Field order is the serialization order.

use qlor::invariants::SuiteReport;
use qlor::{OutcomeDistribution, SampleRun, State, TruthStatus};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct VectorJson {
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl From<&State> for VectorJson {
    fn from(s: &State) -> Self {
        let v = s.vector().canonical_phase();
        Self {
            re: v.entries().iter().map(|z| tidy(z.re)).collect(),
            im: v.entries().iter().map(|z| tidy(z.im)).collect(),
        }
    }
}

/// Flushes rounding residue (and negative zero) to 0.
fn tidy(x: f64) -> f64 {
    if x.abs() < 1e-15 {
        0.0
    } else {
        x
    }
}

#[derive(Debug, Serialize)]
pub struct PropositionJson {
    pub label: String,
    pub dim: usize,
}

#[derive(Debug, Serialize)]
pub struct PairTruth {
    pub a: TruthStatus,
    pub b: TruthStatus,
    #[serde(rename = "and")]
    pub conjunction: TruthStatus,
    #[serde(rename = "or")]
    pub disjunction: TruthStatus,
}

#[derive(Debug, Serialize)]
pub struct EprReport {
    pub command: &'static str,
    pub dim: usize,
    pub a: PropositionJson,
    pub b: PropositionJson,
    pub eigenvalues: [f64; 4],
    pub state: VectorJson,
    pub distribution: OutcomeDistribution,
    pub epr_correlated: bool,
    pub truth: PairTruth,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<SampleRun>,
}

#[derive(Debug, Serialize)]
pub struct WitnessReport {
    pub command: &'static str,
    pub dim: usize,
    pub a: PropositionJson,
    pub b: PropositionJson,
    pub witness: Option<VectorJson>,
    pub truth: Option<PairTruth>,
}

#[derive(Debug, Serialize)]
pub struct NegationTruth {
    pub a: TruthStatus,
    pub not_a: TruthStatus,
}

#[derive(Debug, Serialize)]
pub struct NegationReport {
    pub command: &'static str,
    pub dim: usize,
    pub a: PropositionJson,
    pub witness: Option<VectorJson>,
    pub truth: Option<NegationTruth>,
}

#[derive(Debug, Serialize)]
pub struct ConceptReport {
    pub command: &'static str,
    pub instances: usize,
    pub state: VectorJson,
    pub instance_truth: Vec<TruthStatus>,
    pub disjunction: TruthStatus,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub command: &'static str,
    pub trials: usize,
    pub samples: u64,
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}
