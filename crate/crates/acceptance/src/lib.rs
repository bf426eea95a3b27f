//! Reporting and random fixtures for the acceptance run.
//!
//! A criterion is a list of checks. Each check compares a measured deviation
//! with its tolerance. A check may carry a documented deviation: the measured
//! result is still printed as FAIL, but the run does not count it as a
//! regression.

use std::fmt;

use quantum_core::{CVector, DensityOperator, PureState, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct Check {
    pub what: String,
    /// Measured deviation from the expected value.
    pub deviation: f64,
    pub tolerance: f64,
    /// Reason an expected failure is accepted, if any.
    pub documented: Option<&'static str>,
}

impl Check {
    pub fn within(what: impl Into<String>, deviation: f64, tolerance: f64) -> Self {
        Check {
            what: what.into(),
            deviation,
            tolerance,
            documented: None,
        }
    }

    /// How far `got` is from `expected`.
    pub fn close(what: impl Into<String>, got: f64, expected: f64, tolerance: f64) -> Self {
        Check::within(what, (got - expected).abs(), tolerance)
    }

    /// A yes/no condition, reported as deviation 0 or 1.
    pub fn holds(what: impl Into<String>, ok: bool) -> Self {
        Check::within(what, if ok { 0.0 } else { 1.0 }, 0.5)
    }

    pub fn documented(mut self, reason: &'static str) -> Self {
        self.documented = Some(reason);
        self
    }

    pub fn passed(&self) -> bool {
        self.deviation.is_finite() && self.deviation <= self.tolerance
    }
}

#[derive(Debug, Clone)]
pub struct Criterion {
    pub id: u32,
    pub title: &'static str,
    pub checks: Vec<Check>,
    /// Error raised while evaluating the criterion.
    pub error: Option<String>,
}

impl Criterion {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(Check::passed)
    }

    /// Failed without every failing check being a documented deviation.
    pub fn regressed(&self) -> bool {
        self.error.is_some()
            || self
                .checks
                .iter()
                .any(|c| !c.passed() && c.documented.is_none())
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let worst = self
            .checks
            .iter()
            .filter(|c| c.tolerance < 0.5)
            .map(|c| c.deviation)
            .fold(0.0f64, f64::max);
        write!(
            f,
            "{status} {:>2} {} ({} checks, worst deviation {worst:.1e})",
            self.id,
            self.title,
            self.checks.len()
        )?;
        if let Some(e) = &self.error {
            write!(f, "\n       error: {e}")?;
        }
        for c in self.checks.iter().filter(|c| !c.passed()) {
            write!(
                f,
                "\n       {}: deviation {:.3e} > tolerance {:.0e}",
                c.what, c.deviation, c.tolerance
            )?;
            if let Some(reason) = c.documented {
                write!(f, "\n       documented deviation: {reason}")?;
            }
        }
        Ok(())
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian(rng: &mut impl Rng) -> f64 {
    let u1: f64 = rng.gen::<f64>().max(1e-300);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Haar-distributed pure state of `n` qubits.
pub fn random_state(rng: &mut impl Rng, n: usize) -> PureState {
    let v = CVector::from_fn(1 << n, |_, _| C64::new(gaussian(rng), gaussian(rng)));
    PureState::normalized(v).expect("nonzero gaussian vector")
}

/// Full-rank mixture of `2^n` random pure states.
pub fn random_density(rng: &mut impl Rng, n: usize) -> DensityOperator {
    let k = 1 << n;
    let states: Vec<DensityOperator> = (0..k).map(|_| random_state(rng, n).density()).collect();
    let raw: Vec<f64> = (0..k).map(|_| rng.gen::<f64>() + 0.01).collect();
    let total: f64 = raw.iter().sum();
    let weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
    DensityOperator::mixture(&weights, &states).expect("convex weights")
}

pub fn random_product_state(rng: &mut impl Rng, n: usize) -> PureState {
    let factors: Vec<PureState> = (0..n).map(|_| random_state(rng, 1)).collect();
    PureState::product(&factors).expect("one to three factors")
}

/// Random permutation-symmetric state, as a superposition of Dicke states.
pub fn random_symmetric_state(rng: &mut impl Rng, n: usize) -> PureState {
    let weights: Vec<C64> = (0..=n).map(|_| C64::new(gaussian(rng), gaussian(rng))).collect();
    let binomial = |k: usize| (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64);
    let v = CVector::from_fn(1 << n, |i, _| {
        let k = (i as u32).count_ones() as usize;
        weights[k] / binomial(k).sqrt()
    });
    PureState::normalized(v).expect("nonzero gaussian vector")
}

/// Uniformly distributed unit vector.
pub fn random_unit_vector(rng: &mut impl Rng) -> [f64; 3] {
    let z: f64 = rng.gen_range(-1.0..1.0);
    let phi = rng.gen_range(0.0..std::f64::consts::TAU);
    let s = (1.0 - z * z).sqrt();
    [s * phi.cos(), s * phi.sin(), z]
}

/// Print every criterion and return whether the run is free of regressions.
pub fn report(criteria: &[Criterion]) -> bool {
    for c in criteria {
        println!("{c}");
    }
    let passed = criteria.iter().filter(|c| c.passed()).count();
    let regressed = criteria.iter().filter(|c| c.regressed()).count();
    let documented = criteria.len() - passed - regressed;
    println!(
        "acceptance: {passed} passed, {} failed ({documented} with documented deviations only)",
        criteria.len() - passed
    );
    regressed == 0
}
