//! Bead tomography: every rank of every bead is the expectation of a rotated,
//! scaled axial tensor operator, so measuring those expectations along enough
//! directions and fitting spherical harmonics rebuilds the bead set.

use std::collections::BTreeMap;

use beads_map::{eta, scale_factor, BeadFunction, BeadSet, ScalingMode, SphericalDirection};
use lisa_basis::{lisa_operator, BeadLabel, LisaBasis};
use quantum_core::linalg::{eigh, trace_product};
use quantum_core::{CMatrix, DensityOperator};
use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::asym::fit_bead;
use crate::error::{AnalysisError, Result};
use crate::rotation::global_rotation;

/// Scaled axial operator `T̃_{j,0} = (s_j/η_j) T_{j,0}` of one label, optionally
/// rotated to a direction. In bead scaling `s_j/η_j = ζ ξ_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct TomographyOperator {
    pub label: BeadLabel,
    pub rank: usize,
    pub matrix: CMatrix,
    pub rotation: Option<SphericalDirection>,
}

impl TomographyOperator {
    /// `R T̃ R†` with `R = ⊗ Rz(φ) Ry(θ)`; its expectation is the rank-`j`
    /// part of the bead at `dir`.
    pub fn rotated(&self, dir: SphericalDirection) -> TomographyOperator {
        let n = self.matrix.nrows().trailing_zeros() as usize;
        let r = global_rotation(n, dir);
        TomographyOperator {
            label: self.label.clone(),
            rank: self.rank,
            matrix: &r * &self.matrix * r.adjoint(),
            rotation: Some(dir),
        }
    }
}

/// `T̃_{j,0}` in bead scaling.
pub fn tomo_axial_operator(n: usize, label: &BeadLabel, j: usize) -> Result<TomographyOperator> {
    tomo_axial_operator_with(n, label, j, ScalingMode::Beads)
}

/// `T̃_{j,0}` for any scaling mode.
pub fn tomo_axial_operator_with(
    n: usize,
    label: &BeadLabel,
    j: usize,
    mode: ScalingMode,
) -> Result<TomographyOperator> {
    let t = lisa_operator(n, label, j, 0)?;
    let factor = scale_factor(label, j, n, mode)? / eta(j);
    Ok(TomographyOperator {
        label: label.clone(),
        rank: j,
        matrix: t.matrix.scale(factor),
        rotation: None,
    })
}

/// Noiseless oracle `M ↦ Tr(ρ M)`.
pub fn exact_oracle(rho: &DensityOperator) -> impl FnMut(&CMatrix) -> f64 + '_ {
    move |m| trace_product(rho.matrix(), m).re
}

/// Oracle that estimates `⟨M⟩` from `shots` projective measurements in the
/// eigenbasis of `M`.
pub fn shot_noise_oracle(rho: &DensityOperator, shots: usize, seed: u64) -> impl FnMut(&CMatrix) -> f64 + '_ {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    move |m| {
        let (values, vectors) = eigh(m);
        let weights: Vec<f64> = (0..values.len())
            .map(|i| {
                let v = vectors.column(i);
                (v.adjoint() * rho.matrix() * v)[(0, 0)].re.max(0.0)
            })
            .collect();
        let dist = WeightedIndex::new(&weights).expect("a density operator has positive weight");
        let sum: f64 = (0..shots).map(|_| values[dist.sample(&mut rng)]).sum();
        sum / shots as f64
    }
}

/// Rebuild the bead set of an `n`-qubit state from oracle expectations of
/// `R_d T̃_{j,0} R_d†` at every direction `d`. Each rank is fitted by least
/// squares on its `2j+1` harmonics.
pub fn tomo_reconstruct(
    n: usize,
    mode: ScalingMode,
    mut oracle: impl FnMut(&CMatrix) -> f64,
    directions: &[SphericalDirection],
) -> Result<BeadSet> {
    if directions.is_empty() {
        return Err(AnalysisError::Invalid("no tomography directions".into()));
    }
    let mut beads = Vec::new();
    let mut norms = Vec::new();
    for label in LisaBasis::get(n)?.labels() {
        let mut coefficients = BTreeMap::new();
        let mut norm2 = 0.0;
        for &j in label.ranks() {
            let axial = tomo_axial_operator_with(n, &label, j, mode)?;
            let dirs: &[SphericalDirection] = if j == 0 { &directions[..1] } else { directions };
            let values: Vec<f64> = dirs.iter().map(|&d| oracle(&axial.rotated(d).matrix)).collect();
            let s = scale_factor(&label, j, n, mode)?;
            for (key, c) in fit_bead(&label, &[j], dirs, &values)? {
                norm2 += (c / s) * (c / s);
                coefficients.insert(key, c);
            }
        }
        norms.push(norm2.sqrt());
        beads.push(BeadFunction { label, coefficients });
    }
    Ok(BeadSet {
        qubit_count: n,
        mode,
        beads,
        norms,
    })
}
