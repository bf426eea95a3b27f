//! Projective single-qubit measurement with branch tracking.
//!
//! Outcome bit 0 is the eigenvalue +1 of `r·σ`, bit 1 the eigenvalue −1.

use rand::distributions::{Bernoulli, Distribution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{CoreError, Result};
use crate::linalg::{embed_operator, CMatrix, CVector};
use crate::pauli::sigma_dir;
use crate::state::{check_index, DensityOperator, PureState, NORM_TOL};

/// Probabilities below this are treated as exactly zero when forming post-states.
const ZERO_PROB: f64 = 1e-14;

/// Recorded result of one measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Outcome {
    pub qubit: usize,
    pub direction: [f64; 3],
    pub bit: u8,
}

impl Outcome {
    /// Eigenvalue `+1` for bit 0, `-1` for bit 1.
    pub fn eigenvalue(&self) -> f64 {
        if self.bit == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

/// One measurement branch: the classical record, its probability and the post-state.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementBranch<S = PureState> {
    pub outcomes: Vec<Outcome>,
    pub probability: f64,
    pub post_state: S,
}

impl<S> MeasurementBranch<S> {
    /// Classical bit recorded for the most recent measurement of `qubit`.
    pub fn bit(&self, qubit: usize) -> Option<u8> {
        self.outcomes
            .iter()
            .rev()
            .find(|o| o.qubit == qubit)
            .map(|o| o.bit)
    }
}

/// Validate that `r` is a unit vector.
pub fn check_direction(r: [f64; 3]) -> Result<()> {
    let len = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
    if (len - 1.0).abs() > NORM_TOL {
        Err(CoreError::InvalidDirection(len))
    } else {
        Ok(())
    }
}

/// Projectors onto the +1 and −1 eigenspaces of `r·σ` and the transfer
/// operators mapping one eigenvector to the other.
struct Projectors {
    proj: [CMatrix; 2],
    transfer: [CMatrix; 2],
}

fn projectors(r: [f64; 3], qubit: usize, n: usize) -> Projectors {
    let s = sigma_dir(r);
    let id = CMatrix::identity(2, 2);
    let p0 = (&id + &s).scale(0.5);
    let p1 = (&id - &s).scale(0.5);
    let e0 = PureState::spin_up(r).expect("unit direction");
    let e1 = PureState::spin_up([-r[0], -r[1], -r[2]]).expect("unit direction");
    let up: &CVector = e0.amplitudes();
    let down: &CVector = e1.amplitudes();
    // transfer[b] maps the other eigenvector onto eigenvector b.
    let t0 = up * down.adjoint();
    let t1 = down * up.adjoint();
    let lift = |m: &CMatrix| embed_operator(m, &[qubit], n);
    Projectors {
        proj: [lift(&p0), lift(&p1)],
        transfer: [lift(&t0), lift(&t1)],
    }
}

/// Both branches of measuring `qubit` along `direction`. A zero-probability
/// branch is kept with its post-state set to the other branch's post-state with
/// the measured qubit flipped to the unobserved eigenvector.
pub fn measure_qubit(
    state: &PureState,
    qubit: usize,
    direction: [f64; 3],
) -> Result<Vec<MeasurementBranch<PureState>>> {
    measure_with_history(state, &[], qubit, direction)
}

/// As [`measure_qubit`], prepending an existing classical record to each branch.
pub fn measure_with_history(
    state: &PureState,
    history: &[Outcome],
    qubit: usize,
    direction: [f64; 3],
) -> Result<Vec<MeasurementBranch<PureState>>> {
    let n = state.qubit_count();
    check_index(qubit, n)?;
    check_direction(direction)?;
    let pr = projectors(direction, qubit, n);
    let psi = state.amplitudes();
    let projected: Vec<CVector> = pr.proj.iter().map(|p| p * psi).collect();
    let probs: Vec<f64> = projected.iter().map(|v| v.norm_squared()).collect();
    let mut posts: Vec<Option<PureState>> = projected
        .iter()
        .zip(&probs)
        .map(|(v, &p)| {
            if p > ZERO_PROB {
                PureState::normalized(v.clone()).ok()
            } else {
                None
            }
        })
        .collect();
    for b in 0..2 {
        if posts[b].is_none() {
            let other = posts[1 - b].clone().expect("one branch has support");
            posts[b] = Some(PureState::normalized(&pr.transfer[b] * other.amplitudes())?);
        }
    }
    let total: f64 = probs.iter().sum();
    Ok(posts
        .into_iter()
        .enumerate()
        .map(|(b, post)| {
            let mut outcomes = history.to_vec();
            outcomes.push(Outcome {
                qubit,
                direction,
                bit: b as u8,
            });
            MeasurementBranch {
                outcomes,
                probability: probs[b] / total,
                post_state: post.expect("filled above"),
            }
        })
        .collect())
}

/// Measurement of a density operator; post-states are `P ρ P / p`.
pub fn measure_density(
    rho: &DensityOperator,
    qubit: usize,
    direction: [f64; 3],
) -> Result<Vec<MeasurementBranch<DensityOperator>>> {
    let n = rho.qubit_count();
    check_index(qubit, n)?;
    check_direction(direction)?;
    let pr = projectors(direction, qubit, n);
    let m = rho.matrix();
    let blocks: Vec<CMatrix> = pr.proj.iter().map(|p| p * m * p).collect();
    let probs: Vec<f64> = blocks.iter().map(|b| b.trace().re.max(0.0)).collect();
    let mut posts: Vec<Option<CMatrix>> = blocks
        .iter()
        .zip(&probs)
        .map(|(b, &p)| (p > ZERO_PROB).then(|| b.unscale(p)))
        .collect();
    for b in 0..2 {
        if posts[b].is_none() {
            let other = posts[1 - b].clone().expect("one branch has support");
            let k = &pr.transfer[b];
            posts[b] = Some(k * other * k.adjoint());
        }
    }
    let total: f64 = probs.iter().sum();
    posts
        .into_iter()
        .enumerate()
        .map(|(b, post)| {
            Ok(MeasurementBranch {
                outcomes: vec![Outcome {
                    qubit,
                    direction,
                    bit: b as u8,
                }],
                probability: probs[b] / total,
                post_state: DensityOperator::new(post.expect("filled above"))?,
            })
        })
        .collect()
}

/// Probability of outcome bit 1 when measuring `qubit` along `direction`.
pub fn prob_one(state: &PureState, qubit: usize, direction: [f64; 3]) -> Result<f64> {
    Ok(measure_qubit(state, qubit, direction)?[1].probability)
}

/// Independent single-shot outcomes, reproducible for a fixed seed.
pub fn sample_outcomes(
    state: &PureState,
    qubit: usize,
    direction: [f64; 3],
    shots: usize,
    seed: u64,
) -> Result<Vec<u8>> {
    if shots == 0 {
        return Err(CoreError::NoShots);
    }
    let p1 = prob_one(state, qubit, direction)?.clamp(0.0, 1.0);
    let dist = Bernoulli::new(p1).expect("probability in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..shots).map(|_| dist.sample(&mut rng) as u8).collect())
}

/// `Σ p_k |ψ_k⟩⟨ψ_k|`.
pub fn mix_branches(branches: &[MeasurementBranch<PureState>]) -> Result<DensityOperator> {
    let first = branches.first().ok_or(CoreError::EmptyBranches)?;
    let total: f64 = branches.iter().map(|b| b.probability).sum();
    if (total - 1.0).abs() > NORM_TOL {
        return Err(CoreError::BranchProbabilities(total));
    }
    let dim = first.post_state.dim();
    let mut m = CMatrix::zeros(dim, dim);
    for b in branches {
        if b.post_state.dim() != dim {
            return Err(CoreError::DimensionMismatch {
                expected: dim,
                found: b.post_state.dim(),
            });
        }
        m += b.post_state.density().matrix().scale(b.probability);
    }
    DensityOperator::new(m)
}
