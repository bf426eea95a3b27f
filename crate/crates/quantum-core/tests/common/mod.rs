#![allow(dead_code)]

use quantum_core::linalg::{CMatrix, C64};
use quantum_core::{CVector, PureState};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn mat(rows: usize, data: &[C64]) -> CMatrix {
    CMatrix::from_row_slice(rows, rows, data)
}

pub fn ket(amps: &[C64]) -> PureState {
    PureState::normalized(CVector::from_column_slice(amps)).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Haar-like random state from Gaussian amplitudes (Box–Muller).
pub fn random_state(rng: &mut impl Rng, n: usize) -> PureState {
    let dim = 1 << n;
    let v: Vec<C64> = (0..dim)
        .map(|_| {
            let (u1, u2): (f64, f64) = (rng.gen::<f64>().max(1e-300), rng.gen());
            let (u3, u4): (f64, f64) = (rng.gen::<f64>().max(1e-300), rng.gen());
            let a = (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos();
            let b = (-2.0 * u3.ln()).sqrt() * (std::f64::consts::TAU * u4).cos();
            c(a, b)
        })
        .collect();
    ket(&v)
}

pub fn approx_state_eq(a: &PureState, b: &PureState, tol: f64) -> bool {
    (a.fidelity(b) - 1.0).abs() < tol
}
