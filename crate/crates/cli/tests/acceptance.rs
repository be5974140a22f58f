//! Acceptance criteria. Runs as a plain binary (no libtest harness) so that
//! every criterion prints exactly one PASS/FAIL line; exits non-zero if any
//! criterion fails.

use std::process::Command;

use qlor::generate::{mix_seed, random_proposition, random_proper_proposition, random_state, random_state_in};
use qlor::hilbert::{random_unitary, transform};
use qlor::logic::{complement, disjunction_witness, implies, is_true, join, meet, negation_witness};
use qlor::measurement::{epr_state, truth_from_distribution};
use qlor::vessels::{empirical_distribution, pour_counts, vessel_truth};
use qlor::{ComplexMatrix, ComplexVector, JointMeasurement, JointOutcome, Proposition, State, Subspace, Tolerance, VesselState};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Tolerance for the exact EPR distribution.
const EPR_TOL: f64 = 1e-10;
/// Frobenius tolerance for the lattice identities.
const LATTICE_TOL: f64 = 1e-9;
const LATTICE_DIMS: [usize; 5] = [2, 3, 4, 6, 8];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tol() -> Tolerance {
    Tolerance::default()
}

/// Coordinate spans with some coordinate in a only and some in b only,
/// conjugated by a random unitary. Built here rather than through the
/// library generators.
fn conjugated_pair(d: usize, seed: u64) -> (Proposition, Proposition) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ia = vec![0];
    let mut ib = vec![1];
    for c in 2..d {
        match rng.random_range(0..4) {
            0 => ia.push(c),
            1 => ib.push(c),
            2 => {
                ia.push(c);
                ib.push(c);
            }
            _ => {}
        }
    }
    let u = random_unitary(d, mix_seed(seed, 99)).unwrap();
    let a = transform(&u, &Subspace::coordinate(d, &ia).unwrap()).unwrap();
    let b = transform(&u, &Subspace::coordinate(d, &ib).unwrap()).unwrap();
    (Proposition::new("a", a), Proposition::new("b", b))
}

/// Coordinate spans of arbitrary (possibly empty) index sets, conjugated.
fn compatible_pair(d: usize, seed: u64) -> (Proposition, Proposition) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ia: Vec<usize> = (0..d).filter(|_| rng.random_bool(0.5)).collect();
    let ib: Vec<usize> = (0..d).filter(|_| rng.random_bool(0.5)).collect();
    let u = random_unitary(d, mix_seed(seed, 98)).unwrap();
    let a = transform(&u, &Subspace::coordinate(d, &ia).unwrap()).unwrap();
    let b = transform(&u, &Subspace::coordinate(d, &ib).unwrap()).unwrap();
    (Proposition::new("a", a), Proposition::new("b", b))
}

/// Born probabilities computed directly from the projector products.
fn direct_distribution(a: &Proposition, b: &Proposition, v: &State) -> [f64; 4] {
    let d = a.ambient_dim();
    let id = ComplexMatrix::identity(d);
    let (pa, pb) = (a.projector(), b.projector());
    let (qa, qb) = (&id - &pa, &id - &pb);
    [&pa * &pb, &pa * &qb, &qa * &pb, &qa * &qb].map(|q| q.mul_vec(v.vector()).norm_sqr())
}

/// A state inside one of the interesting subspaces, or uniform.
fn probe(a: &Proposition, b: &Proposition, seed: u64) -> State {
    let t = tol();
    let choice = seed % 5;
    let inside = match choice {
        0 => random_state_in(a.subspace(), seed).unwrap(),
        1 => random_state_in(b.subspace(), seed).unwrap(),
        2 => random_state_in(meet(a, b, &t).unwrap().subspace(), seed).unwrap(),
        3 => random_state_in(join(a, b, &t).unwrap().subspace(), seed).unwrap(),
        _ => None,
    };
    inside.unwrap_or_else(|| random_state(a.ambient_dim(), seed).unwrap())
}

fn ac1_epr_distribution() -> Outcome {
    let t = tol();
    let target = [0.0, 0.5, 0.5, 0.0];
    let mut worst: f64 = 0.0;
    let mut pairs = vec![(
        Proposition::coordinate("a", 4, &[0, 1]).unwrap(),
        Proposition::coordinate("b", 4, &[0, 2]).unwrap(),
    )];
    for i in 0..50u64 {
        let d = 2 + (i as usize % 7);
        pairs.push(conjugated_pair(d, 1000 + i));
    }
    for (k, (a, b)) in pairs.iter().enumerate() {
        let v = epr_state(a, b, &t).map_err(|e| format!("pair {k}: {e}"))?;
        let m = JointMeasurement::with_default_eigenvalues(a.clone(), b.clone(), &t).unwrap();
        let lib = m.outcome_distribution(&v).unwrap().as_array();
        let direct = direct_distribution(a, b, &v);
        for i in 0..4 {
            worst = worst.max((lib[i] - target[i]).abs()).max((direct[i] - target[i]).abs());
        }
    }
    check(worst <= EPR_TOL, || format!("max deviation {worst:e}"))?;
    Ok(format!("51 pairs, max deviation from (0, 1/2, 1/2, 0) = {worst:.1e}"))
}

fn ac2_disjunction_witness() -> Outcome {
    let t = tol();
    let mut found = 0;
    let mut seed = 0u64;
    while found < 100 {
        seed += 1;
        let d = 2 + (seed as usize % 7);
        let a = random_proposition("a", d, mix_seed(seed, 1)).unwrap();
        let b = random_proposition("b", d, mix_seed(seed, 2)).unwrap();
        if implies(&a, &b, &t).unwrap() || implies(&b, &a, &t).unwrap() {
            continue;
        }
        found += 1;
        let w = disjunction_witness(&a, &b, &t).unwrap().ok_or_else(|| format!("seed {seed}: no witness"))?;
        let j = join(&a, &b, &t).unwrap();
        check(
            is_true(&j, &w, &t).unwrap().is_true()
                && !is_true(&a, &w, &t).unwrap().is_true()
                && !is_true(&b, &w, &t).unwrap().is_true(),
            || format!("seed {seed}: witness fails"),
        )?;
    }
    Ok("100 incomparable pairs: a∨b True, a NotTrue, b NotTrue".into())
}

fn ac3_negation_witness() -> Outcome {
    let t = tol();
    for seed in 0..100u64 {
        let d = 2 + (seed as usize % 7);
        let a = random_proper_proposition("a", d, seed).unwrap();
        let w = negation_witness(&a, &t).ok_or_else(|| format!("seed {seed}: no witness"))?;
        check(
            !is_true(&a, &w, &t).unwrap().is_true() && !is_true(&complement(&a), &w, &t).unwrap().is_true(),
            || format!("seed {seed}: a or ¬a true"),
        )?;
    }
    Ok("100 propositions: a NotTrue, ¬a NotTrue".into())
}

fn ac4_classical_implication_conjunction() -> Outcome {
    let t = tol();
    let (mut meet_true, mut implied_true) = (0, 0);
    for trial in 0..1000u64 {
        let d = 2 + (trial as usize % 7);
        let a = random_proposition("a", d, mix_seed(trial, 1)).unwrap();
        let b = random_proposition("b", d, mix_seed(trial, 2)).unwrap();
        let p = probe(&a, &b, mix_seed(trial, 3));
        let both = is_true(&a, &p, &t).unwrap().is_true() && is_true(&b, &p, &t).unwrap().is_true();
        let m = is_true(&meet(&a, &b, &t).unwrap(), &p, &t).unwrap().is_true();
        check(both == m, || format!("trial {trial}: meet {m}, both {both}"))?;
        meet_true += usize::from(m);

        // a ⊆ c by construction: a = span of random vectors of c
        let c = random_proposition("c", d, mix_seed(trial, 4)).unwrap();
        let a = qlor::generate::random_subproposition("a", c.subspace(), mix_seed(trial, 5)).unwrap();
        check(implies(&a, &c, &t).unwrap(), || format!("trial {trial}: a does not imply c"))?;
        let p = probe(&a, &c, mix_seed(trial, 6));
        if is_true(&a, &p, &t).unwrap().is_true() {
            implied_true += 1;
            check(is_true(&c, &p, &t).unwrap().is_true(), || format!("trial {trial}: implication lost truth"))?;
        }
    }
    check(meet_true > 50 && implied_true > 50, || format!("too few non-vacuous trials ({meet_true}, {implied_true})"))?;
    Ok(format!("1000 trials, no counterexample ({meet_true} with a∧b true, {implied_true} with a true and a ↦ c)"))
}

fn ac5_lattice_suite() -> Outcome {
    let t = tol();
    let mut worst: f64 = 0.0;
    let mut count = 0;
    let mut track = |x: &ComplexMatrix, y: &ComplexMatrix, what: &str, seed: u64| -> Result<(), String> {
        let dist = x.distance(y);
        worst = worst.max(dist);
        check(dist <= LATTICE_TOL, || format!("{what} seed {seed}: distance {dist:e}"))
    };
    for d in LATTICE_DIMS {
        for trial in 0..100u64 {
            let seed = mix_seed(d as u64, trial);
            let a = random_proposition("a", d, mix_seed(seed, 1)).unwrap();
            let b = random_proposition("b", d, mix_seed(seed, 2)).unwrap();
            let (j, m) = (join(&a, &b, &t).unwrap(), meet(&a, &b, &t).unwrap());
            check(j.dim() + m.dim() == a.dim() + b.dim(), || format!("dimension formula seed {seed}"))?;

            let lhs = complement(&j).projector();
            let rhs = meet(&complement(&a), &complement(&b), &t).unwrap().projector();
            track(&lhs, &rhs, "De Morgan", seed)?;
            track(&complement(&complement(&a)).projector(), &a.projector(), "double complement", seed)?;

            let outer = random_proposition("b", d, mix_seed(seed, 3)).unwrap();
            let inner = qlor::generate::random_subproposition("a", outer.subspace(), mix_seed(seed, 4)).unwrap();
            let rebuilt = join(&inner, &meet(&outer, &complement(&inner), &t).unwrap(), &t).unwrap();
            track(&rebuilt.projector(), &outer.projector(), "orthomodularity", seed)?;

            let (ca, cb) = compatible_pair(d, mix_seed(seed, 5));
            let (pa, pb) = (ca.projector(), cb.projector());
            let prod = &pa * &pb;
            track(&meet(&ca, &cb, &t).unwrap().projector(), &prod, "P_{a∧b} = P_a P_b", seed)?;
            let sum = &(&pa + &pb) - &prod;
            track(&join(&ca, &cb, &t).unwrap().projector(), &sum, "P_{a∨b} = P_a + P_b - P_a P_b", seed)?;
            count += 1;
        }
    }
    Ok(format!("{count} trials over d ∈ {{2,3,4,6,8}}, max Frobenius deviation {worst:.1e}"))
}

fn ac6_truth_table_equivalence() -> Outcome {
    let t = tol();
    let mut disj_true = 0;
    for trial in 0..100u64 {
        let d = 2 + (trial as usize % 7);
        let (a, b) = compatible_pair(d, mix_seed(trial, 60));
        let p = probe(&a, &b, mix_seed(trial, 61));
        let m = JointMeasurement::with_default_eigenvalues(a.clone(), b.clone(), &t).unwrap();
        let op = truth_from_distribution(&m.outcome_distribution(&p).unwrap(), &t);
        let conj = is_true(&meet(&a, &b, &t).unwrap(), &p, &t).unwrap();
        let disj = is_true(&join(&a, &b, &t).unwrap(), &p, &t).unwrap();
        check(op.conjunction == conj && op.disjunction == disj, || {
            format!("trial {trial}: distribution ({}, {}) vs lattice ({conj}, {disj})", op.conjunction, op.disjunction)
        })?;
        disj_true += usize::from(disj.is_true());
    }
    Ok(format!("100 compatible pairs agree ({disj_true} with a∨b true)"))
}

/// Fraction of a midpoint grid of split fractions for which both sides
/// exceed `threshold`; discretized check of the analytic value.
fn grid_yes_yes(volume: f64, threshold: f64) -> f64 {
    let m = 1_000_000;
    let hits = (0..m)
        .filter(|&k| {
            let left = (k as f64 + 0.5) / m as f64 * volume;
            left > threshold && volume - left > threshold
        })
        .count();
    hits as f64 / m as f64
}

fn ac7_vessels() -> Outcome {
    let t = tol();
    let n = 100_000;
    for seed in [0u64, 1, 7, 12345] {
        let c = pour_counts(&VesselState::new(20.0).unwrap(), 10.0, n, seed).unwrap();
        check(c.yy == 0 && c.nn == 0, || format!("seed {seed}: counts {c:?}"))?;
        let (fyn, fny) = (c.yn as f64 / n as f64, c.ny as f64 / n as f64);
        check((fyn - 0.5).abs() <= 0.01 && (fny - 0.5).abs() <= 0.01, || format!("seed {seed}: {fyn}, {fny}"))?;
        let r = vessel_truth(&VesselState::new(20.0).unwrap(), 10.0, n, seed, &t).unwrap().truth;
        let pattern = [r.a.is_true(), r.b.is_true(), r.conjunction.is_true(), r.disjunction.is_true()];
        check(pattern == [false, false, false, true], || format!("seed {seed}: truth {pattern:?}"))?;
    }
    // analytic: P(10 < 30 f and 30 (1 - f) > 10) = P(1/3 < f < 2/3) = 1/3
    let analytic = 1.0 / 3.0;
    let grid = grid_yes_yes(30.0, 10.0);
    check((grid - analytic).abs() < 1e-5, || format!("grid oracle {grid}"))?;
    let p = empirical_distribution(&VesselState::new(30.0).unwrap(), 10.0, n, 3).unwrap().p_yy;
    check((p - analytic).abs() <= 0.02, || format!("V=30 p_yy {p}"))?;
    Ok(format!("V=20: no YY/NN, truth (NotTrue, NotTrue, NotTrue, True); V=30: P(YY)={p:.4} vs 1/3"))
}

fn ac8_concept() -> Outcome {
    let t = tol();
    let n = 5;
    let props: Vec<_> = (0..n).map(|i| Proposition::coordinate(format!("a{i}"), n, &[i]).unwrap()).collect();
    let basis: Vec<_> = (0..n).map(|i| ComplexVector::basis(n, i)).collect();
    let s = State::superposition(&basis).unwrap();
    for p in &props {
        check(!is_true(p, &s, &t).unwrap().is_true(), || format!("{} is true", p.label()))?;
    }
    let all = props[1..].iter().fold(props[0].clone(), |acc, p| join(&acc, p, &t).unwrap());
    check(is_true(&all, &s, &t).unwrap().is_true(), || "5-fold disjunction not true".into())?;

    let out = run_cli(&["concept", "--instances", "5"])?;
    let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    check(v["instance_truth"].as_array().map(|a| a.iter().all(|x| x == "NotTrue")) == Some(true), || out.clone())?;
    check(v["disjunction"] == "True", || out.clone())?;
    Ok("each a_i NotTrue, a_1 ∨ … ∨ a_5 True (library and CLI)".into())
}

fn ac9_sampling() -> Outcome {
    let t = tol();
    let a = Proposition::coordinate("a", 4, &[0, 1]).unwrap();
    let b = Proposition::coordinate("b", 4, &[0, 2]).unwrap();
    let v = epr_state(&a, &b, &t).unwrap();
    let m = JointMeasurement::with_default_eigenvalues(a, b, &t).unwrap();
    let n = 100_000u64;
    let run = m.sample_run(&v, n, 2024).unwrap();
    let c = run.counts;
    check(c.yy == 0 && c.nn == 0, || format!("counts {c:?}"))?;
    let sigma = (0.25 / n as f64).sqrt();
    let z = (c.yn as f64 / n as f64 - 0.5) / sigma;
    check(z.abs() <= 5.0, || format!("YN z-score {z}"))?;

    // per-seed sampling agrees too
    let mut tally = qlor::OutcomeCounts::default();
    for seed in 0..20_000u64 {
        tally.record(m.sample_outcome(&v, seed).unwrap());
    }
    check(tally.get(JointOutcome::YY) == 0 && tally.get(JointOutcome::NN) == 0, || format!("{tally:?}"))?;
    Ok(format!("{n} draws: YY=0 NN=0, YN={} (z = {z:+.2})", c.yn))
}

fn run_cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_qlor"))
        .args(args)
        .env_remove("QLOR_EPS")
        .output()
        .map_err(|e| e.to_string())?;
    check(out.status.success(), || format!("{args:?} exited with {:?}", out.status.code()))?;
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn ac10_determinism() -> Outcome {
    let commands: [&[&str]; 6] = [
        &["epr", "--dim", "4", "--a", "0,1", "--b", "0,2", "--seed", "1", "--samples", "1000"],
        &["witness", "--dim", "4", "--a", "0,1", "--b", "0,2"],
        &["negation", "--dim", "3", "--a", "0"],
        &["vessels", "--volume", "20", "--threshold", "10", "--samples", "100000", "--seed", "1"],
        &["concept", "--instances", "5"],
        &["check", "--trials", "3", "--samples", "2000", "--seed", "5"],
    ];
    for args in commands {
        let first = run_cli(args)?;
        let second = run_cli(args)?;
        check(first == second, || format!("{args:?} differs between runs"))?;
    }
    let epr = run_cli(commands[0])?;
    let v: serde_json::Value = serde_json::from_str(&epr).map_err(|e| e.to_string())?;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let re: Vec<f64> = v["state"]["re"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    check(re.iter().zip([0.0, r, r, 0.0]).all(|(x, y)| (x - y).abs() < 1e-12), || format!("state {re:?}"))?;
    let dist = &v["distribution"];
    check(
        ["yy", "yn", "ny", "nn"].iter().zip([0.0, 0.5, 0.5, 0.0]).all(|(k, e)| (dist[k].as_f64().unwrap() - e).abs() < 1e-12),
        || format!("distribution {dist}"),
    )?;
    Ok("6 commands byte-identical across runs".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("AC1 EPR distribution is (0, 1/2, 1/2, 0)", ac1_epr_distribution),
        ("AC2 nonclassical disjunction witness", ac2_disjunction_witness),
        ("AC3 nonclassical negation witness", ac3_negation_witness),
        ("AC4 implication and conjunction are classical", ac4_classical_implication_conjunction),
        ("AC5 lattice property suite", ac5_lattice_suite),
        ("AC6 truth-table equivalence", ac6_truth_table_equivalence),
        ("AC7 vessels reproduction", ac7_vessels),
        ("AC8 concept demo", ac8_concept),
        ("AC9 sampling soundness", ac9_sampling),
        ("AC10 CLI determinism", ac10_determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match std::panic::catch_unwind(run) {
            Ok(Ok(detail)) => println!("PASS  {name}: {detail}"),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
            Err(_) => {
                failed += 1;
                println!("FAIL  {name}: panicked");
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
