//! Directions on the unit sphere.

use serde::{Deserialize, Serialize};

use crate::error::{BeadsError, Result};

/// Polar angle θ from +z and azimuth φ from +x toward +y, in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphericalDirection {
    pub theta: f64,
    pub phi: f64,
}

impl SphericalDirection {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(BeadsError::PolarAngle(theta));
        }
        Ok(SphericalDirection { theta, phi })
    }

    /// Angles given in degrees.
    pub fn degrees(theta: f64, phi: f64) -> Result<Self> {
        Self::new(theta.to_radians(), phi.to_radians())
    }

    pub fn north() -> Self {
        SphericalDirection { theta: 0.0, phi: 0.0 }
    }

    pub fn south() -> Self {
        SphericalDirection {
            theta: std::f64::consts::PI,
            phi: 0.0,
        }
    }

    /// `(sin θ cos φ, sin θ sin φ, cos θ)`.
    pub fn to_vector(self) -> [f64; 3] {
        quantum_core::direction(self.theta, self.phi)
    }

    /// Direction of a nonzero vector; the azimuth of a pole is 0.
    pub fn from_vector(r: [f64; 3]) -> Self {
        let len = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
        let theta = (r[2] / len).clamp(-1.0, 1.0).acos();
        let rho = (r[0] * r[0] + r[1] * r[1]).sqrt();
        let phi = if rho <= 1e-15 * len { 0.0 } else { r[1].atan2(r[0]) };
        SphericalDirection { theta, phi }
    }

    /// Point reflection `r → −r`, i.e. `(π − θ, φ + π)`.
    pub fn antipode(self) -> Self {
        SphericalDirection {
            theta: std::f64::consts::PI - self.theta,
            phi: self.phi + std::f64::consts::PI,
        }
    }

    /// Great-circle angle to another direction.
    pub fn angle_to(self, other: SphericalDirection) -> f64 {
        let a = self.to_vector();
        let b = other.to_vector();
        let dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        dot.clamp(-1.0, 1.0).acos()
    }
}

/// `count` nearly uniform directions on a Fibonacci spiral.
pub fn fibonacci_directions(count: usize) -> Vec<SphericalDirection> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|i| {
            let z = 1.0 - 2.0 * (i as f64 + 0.5) / count as f64;
            SphericalDirection {
                theta: z.clamp(-1.0, 1.0).acos(),
                phi: (golden * i as f64).rem_euclid(std::f64::consts::TAU),
            }
        })
        .collect()
}
