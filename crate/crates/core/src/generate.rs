//! Seeded generators for propositions, states and compatible pairs.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::Result;
use crate::hilbert::{random_subspace, random_unitary, transform, ComplexVector, Subspace};
use crate::logic::{Proposition, State};
use crate::scalar::Real;

/// SplitMix64 finalizer; derives independent child seeds.
pub fn mix_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Random proposition with a dimension drawn uniformly from `0..=ambient_dim`.
pub fn random_proposition<T: Real>(label: &str, ambient_dim: usize, seed: u64) -> Result<Proposition<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = rng.random_range(0..=ambient_dim);
    Ok(Proposition::new(label, random_subspace(ambient_dim, dim, mix_seed(seed, 1))?))
}

/// Random proposition with `0 < dim < ambient_dim`. Needs `ambient_dim ≥ 2`.
pub fn random_proper_proposition<T: Real>(label: &str, ambient_dim: usize, seed: u64) -> Result<Proposition<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = rng.random_range(1..ambient_dim);
    Ok(Proposition::new(label, random_subspace(ambient_dim, dim, mix_seed(seed, 1))?))
}

/// Random subspace of `outer` (possibly zero or all of it).
pub fn random_subproposition<T: Real>(label: &str, outer: &Subspace<T>, seed: u64) -> Result<Proposition<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(0..=outer.dim());
    let vectors: Vec<_> = (0..k).map(|_| combination(outer.basis(), &mut rng)).collect();
    let s = crate::hilbert::orthonormalize(outer.ambient_dim(), &vectors, &Default::default())?;
    Ok(Proposition::new(label, s))
}

fn gaussian<T: Real>(rng: &mut ChaCha8Rng) -> Complex<T> {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex::new(T::lit(re), T::lit(im))
}

fn combination<T: Real>(basis: &[ComplexVector<T>], rng: &mut ChaCha8Rng) -> ComplexVector<T> {
    let mut v = ComplexVector::zeros(basis[0].dim());
    for b in basis {
        v.axpy(gaussian(rng), b);
    }
    v
}

/// Random unit vector in `C^ambient_dim`.
pub fn random_state<T: Real>(ambient_dim: usize, seed: u64) -> Result<State<T>> {
    random_state_in(&Subspace::full(ambient_dim), seed).map(|s| s.expect("full space is nonzero"))
}

/// Random unit vector inside `s`, or `None` for the zero subspace.
pub fn random_state_in<T: Real>(s: &Subspace<T>, seed: u64) -> Result<Option<State<T>>> {
    if s.is_zero() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Some(State::normalize(&combination(s.basis(), &mut rng))?))
}

/// A compatible pair: spans of random coordinate sets, conjugated by one
/// shared random unitary.
pub fn random_compatible_pair<T: Real>(ambient_dim: usize, seed: u64) -> Result<(Proposition<T>, Proposition<T>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pick = || -> Vec<usize> { (0..ambient_dim).filter(|_| rng.random_bool(0.5)).collect() };
    let (ia, ib) = (pick(), pick());
    compatible_pair_from_coordinates(ambient_dim, &ia, &ib, mix_seed(seed, 2))
}

/// Coordinate spans `ia`, `ib` conjugated by a seeded random unitary.
pub fn compatible_pair_from_coordinates<T: Real>(
    ambient_dim: usize,
    ia: &[usize],
    ib: &[usize],
    seed: u64,
) -> Result<(Proposition<T>, Proposition<T>)> {
    let u = random_unitary(ambient_dim, seed)?;
    let a = transform(&u, &Subspace::coordinate(ambient_dim, ia)?)?;
    let b = transform(&u, &Subspace::coordinate(ambient_dim, ib)?)?;
    Ok((Proposition::new("a", a), Proposition::new("b", b)))
}

/// A compatible pair admitting an EPR-like state: some coordinate lies in
/// `a` only and some in `b` only. Needs `ambient_dim ≥ 2`.
pub fn random_epr_pair<T: Real>(ambient_dim: usize, seed: u64) -> Result<(Proposition<T>, Proposition<T>)> {
    assert!(ambient_dim >= 2, "EPR pair needs at least two dimensions");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coords: Vec<usize> = (0..ambient_dim).collect();
    // Fisher-Yates, then reserve the first two coordinates for a-only and b-only
    for i in (1..coords.len()).rev() {
        let j = rng.random_range(0..=i);
        coords.swap(i, j);
    }
    let mut ia = vec![coords[0]];
    let mut ib = vec![coords[1]];
    for &c in &coords[2..] {
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
    compatible_pair_from_coordinates(ambient_dim, &ia, &ib, mix_seed(seed, 3))
}
