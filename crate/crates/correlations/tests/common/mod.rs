#![allow(dead_code)]

use beads_map::SphericalDirection;
use quantum_core::linalg::{expm_hermitian, kron_all};
use quantum_core::{CMatrix, CVector, DensityOperator, Pauli, PureState, C64};
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

pub fn random_product_state(rng: &mut impl Rng, n: usize) -> PureState {
    let factors: Vec<PureState> = (0..n).map(|_| random_state(rng, 1)).collect();
    PureState::product(&factors).unwrap()
}

pub fn random_direction(rng: &mut impl Rng) -> SphericalDirection {
    let z: f64 = rng.gen_range(-1.0..1.0);
    SphericalDirection::new(z.acos(), rng.gen_range(0.0..std::f64::consts::TAU)).unwrap()
}

/// `⊗_k exp(−iφσz/2) exp(−iθσy/2)`, rotating +z onto `(θ, φ)` on every qubit.
pub fn global_rotation(n: usize, dir: SphericalDirection) -> CMatrix {
    let rz = expm_hermitian(&Pauli::Z.matrix().scale(0.5), dir.phi);
    let ry = expm_hermitian(&Pauli::Y.matrix().scale(0.5), dir.theta);
    let one = rz * ry;
    kron_all(std::iter::repeat_n(&one, n))
}

/// Permutation-symmetric normalization of `|a⟩|b⟩|c⟩…`.
pub fn symmetrized(dirs: &[SphericalDirection]) -> PureState {
    let n = dirs.len();
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (0..n)
                    .filter(|i| !p.contains(i))
                    .map(|i| {
                        let mut q = p.clone();
                        q.push(i);
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    let mut acc = CVector::zeros(1 << n);
    for p in perms {
        let factors: Vec<PureState> = p
            .iter()
            .map(|&i| PureState::spin_up(dirs[i].to_vector()).unwrap())
            .collect();
        acc += PureState::product(&factors).unwrap().amplitudes();
    }
    PureState::normalized(acc).unwrap()
}
