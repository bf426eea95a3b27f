//! Ursell (joint cumulant) separation of correlation functions.
//!
//! For local observables `σ_{k r_k}` on distinct qubits the connected part of a
//! g-point correlation is the joint cumulant
//! `E_G = Σ_π (−1)^{|π|−1} (|π|−1)! Π_{B∈π} T_B`, summed over set partitions
//! `π` of `G`. For two qubits this is `T_12 − ⟨σ_1⟩⟨σ_2⟩`; for three it is
//! `T_123 − Σ ⟨σ_k⟩ T_lm + 2 ⟨σ_1⟩⟨σ_2⟩⟨σ_3⟩`.

use quantum_core::{spin_correlation, DensityOperator};

use crate::error::{CorrelationError, Result};

/// Purity below `1 − PURITY_TOL` counts as mixed.
pub const PURITY_TOL: f64 = 1e-6;

/// All set partitions of `items`.
pub(crate) fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    match items.split_first() {
        None => vec![vec![]],
        Some((&first, rest)) => {
            let mut out = Vec::new();
            for partition in set_partitions(rest) {
                for i in 0..partition.len() {
                    let mut p = partition.clone();
                    p[i].insert(0, first);
                    out.push(p);
                }
                let mut p = partition;
                p.insert(0, vec![first]);
                out.push(p);
            }
            out
        }
    }
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Joint cumulant of `items` given the moment of every nonempty subset.
pub(crate) fn cumulant(items: &[usize], moment: &mut impl FnMut(&[usize]) -> f64) -> f64 {
    set_partitions(items)
        .iter()
        .map(|p| {
            let k = p.len();
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            sign * factorial(k - 1) * p.iter().map(|b| moment(b)).product::<f64>()
        })
        .sum()
}

pub(crate) fn require_pure(rho: &DensityOperator) -> Result<()> {
    let p = rho.purity();
    if p < 1.0 - PURITY_TOL {
        return Err(CorrelationError::MixedState(p));
    }
    Ok(())
}

fn check_dirs(subset: &[usize], dirs: &[[f64; 3]]) -> Result<()> {
    if subset.len() != dirs.len() {
        return Err(CorrelationError::DirectionCount {
            qubits: subset.len(),
            directions: dirs.len(),
        });
    }
    Ok(())
}

/// `T_G = ⟨Π_{k∈G} σ_{k r_k}⟩`.
pub fn total_corr(rho: &DensityOperator, subset: &[usize], dirs: &[[f64; 3]]) -> Result<f64> {
    check_dirs(subset, dirs)?;
    Ok(spin_correlation(rho, subset, dirs)?)
}

/// Connected correlation `E_G` of a pure state for `|G| ∈ {2, 3}`.
pub fn connected_corr(rho: &DensityOperator, subset: &[usize], dirs: &[[f64; 3]]) -> Result<f64> {
    check_dirs(subset, dirs)?;
    if !(2..=3).contains(&subset.len()) {
        return Err(CorrelationError::SubsetSize(subset.len()));
    }
    require_pure(rho)?;
    let positions: Vec<usize> = (0..subset.len()).collect();
    let mut failure = None;
    let e = cumulant(&positions, &mut |block: &[usize]| {
        let qubits: Vec<usize> = block.iter().map(|&i| subset[i]).collect();
        let ds: Vec<[f64; 3]> = block.iter().map(|&i| dirs[i]).collect();
        spin_correlation(rho, &qubits, &ds).unwrap_or_else(|err| {
            failure = Some(err);
            0.0
        })
    });
    match failure {
        Some(err) => Err(err.into()),
        None => Ok(e),
    }
}

/// Compound correlation `C_G = T_G − E_G`.
pub fn compound_corr(rho: &DensityOperator, subset: &[usize], dirs: &[[f64; 3]]) -> Result<f64> {
    Ok(total_corr(rho, subset, dirs)? - connected_corr(rho, subset, dirs)?)
}
