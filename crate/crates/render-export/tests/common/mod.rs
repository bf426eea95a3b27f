#![allow(dead_code)]

use quantum_core::{CVector, DensityOperator, PureState, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian(rng: &mut impl Rng) -> f64 {
    let u1: f64 = rng.gen::<f64>().max(1e-300);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

pub fn random_state(rng: &mut impl Rng, n: usize) -> PureState {
    let v = CVector::from_fn(1 << n, |_, _| C64::new(gaussian(rng), gaussian(rng)));
    PureState::normalized(v).unwrap()
}

pub fn random_density(rng: &mut impl Rng, n: usize) -> DensityOperator {
    let k = 1 << n;
    let states: Vec<DensityOperator> = (0..k).map(|_| random_state(rng, n).density()).collect();
    let raw: Vec<f64> = (0..k).map(|_| rng.gen::<f64>() + 0.01).collect();
    let total: f64 = raw.iter().sum();
    let weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
    DensityOperator::mixture(&weights, &states).unwrap()
}

/// Partially entangled, asymmetric two-qubit state used to compare display variants.
pub fn asymmetric_pair() -> PureState {
    let a = [
        C64::new(-0.099893, 0.207263),
        C64::new(0.664132, -0.077408),
        C64::new(-0.015899, -0.323055),
        C64::new(0.616169, -0.125371),
    ];
    PureState::normalized(CVector::from_column_slice(&a)).unwrap()
}

pub fn norm3(p: [f64; 3]) -> f64 {
    (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt()
}
