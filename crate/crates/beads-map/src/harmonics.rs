//! Real spherical harmonics up to rank 3.
//!
//! Orthonormal on the unit sphere with positive axial values and no
//! Condon–Shortley phase: `Y_{1,1} ∝ x`, `Y_{1,-1} ∝ y`, `Y_{2,-2} ∝ xy`,
//! `Y_{2,2} ∝ x² − y²`, and so on. This is the convention under which a rotated
//! axial LISA operator expands as `√(4π/(2j+1)) Σ_m Y_{j,m} T_{j,m}`.

use std::f64::consts::PI;

use crate::direction::SphericalDirection;
use crate::error::{BeadsError, Result};

pub const MAX_RANK: usize = 3;

/// `Y_{j,m}` at a Cartesian unit vector.
pub fn real_sph_harmonic_xyz(j: usize, m: i32, r: [f64; 3]) -> Result<f64> {
    let [x, y, z] = r;
    let v = match (j, m) {
        (0, 0) => 0.5 / PI.sqrt(),
        (1, -1) => (3.0 / (4.0 * PI)).sqrt() * y,
        (1, 0) => (3.0 / (4.0 * PI)).sqrt() * z,
        (1, 1) => (3.0 / (4.0 * PI)).sqrt() * x,
        (2, -2) => 0.5 * (15.0 / PI).sqrt() * x * y,
        (2, -1) => 0.5 * (15.0 / PI).sqrt() * y * z,
        (2, 0) => 0.25 * (5.0 / PI).sqrt() * (3.0 * z * z - 1.0),
        (2, 1) => 0.5 * (15.0 / PI).sqrt() * x * z,
        (2, 2) => 0.25 * (15.0 / PI).sqrt() * (x * x - y * y),
        (3, -3) => 0.25 * (35.0 / (2.0 * PI)).sqrt() * y * (3.0 * x * x - y * y),
        (3, -2) => 0.5 * (105.0 / PI).sqrt() * x * y * z,
        (3, -1) => 0.25 * (21.0 / (2.0 * PI)).sqrt() * y * (5.0 * z * z - 1.0),
        (3, 0) => 0.25 * (7.0 / PI).sqrt() * z * (5.0 * z * z - 3.0),
        (3, 1) => 0.25 * (21.0 / (2.0 * PI)).sqrt() * x * (5.0 * z * z - 1.0),
        (3, 2) => 0.25 * (105.0 / PI).sqrt() * z * (x * x - y * y),
        (3, 3) => 0.25 * (35.0 / (2.0 * PI)).sqrt() * x * (x * x - 3.0 * y * y),
        _ => return Err(BeadsError::Harmonic { j, m }),
    };
    Ok(v)
}

/// `Y_{j,m}(θ, φ)`.
pub fn real_sph_harmonic(j: usize, m: i32, dir: SphericalDirection) -> Result<f64> {
    real_sph_harmonic_xyz(j, m, dir.to_vector())
}
