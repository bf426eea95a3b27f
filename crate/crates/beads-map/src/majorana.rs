//! Majorana stars of permutation-symmetric pure states.
//!
//! A symmetric state with amplitude `a_l` on every basis state with `l` zeros
//! has the polynomial `P(z) = Σ_l (−1)^l C(N,l) a_l z^l`. A coherent state
//! `|r⟩^⊗N` gives `P(z) ∝ (e^{iφ} sin(θ/2) − cos(θ/2) z)^N`, so each root maps
//! to the star `z = tan(θ/2) e^{iφ}` (stereographic projection from the south
//! pole). Roots at `z = 0` are north-pole stars; a polynomial of degree below
//! `N` has the missing roots at infinity, which are south-pole stars.

use quantum_core::{PureState, C64};
use serde::{Deserialize, Serialize};

use crate::direction::SphericalDirection;
use crate::error::{BeadsError, Result};

/// Coefficients below this fraction of the largest one count as zero.
const COEFF_TOL: f64 = 1e-12;
/// Relative discriminant scale below which roots are treated as coincident.
const DEGENERACY_TOL: f64 = 1e-10;
/// Stars closer than this angle are merged.
pub const CLUSTER_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MajoranaStar {
    pub direction: SphericalDirection,
    pub multiplicity: usize,
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Majorana polynomial coefficients `[p_0, …, p_N]`.
pub fn majorana_polynomial(psi: &PureState) -> Result<Vec<C64>> {
    if !psi.is_permutation_symmetric(1e-9) {
        return Err(BeadsError::NotSymmetric);
    }
    let n = psi.qubit_count();
    let amps = psi.amplitudes();
    Ok((0..=n)
        .map(|l| {
            // N − l leading ones followed by l zeros.
            let index = ((1usize << (n - l)) - 1) << l;
            let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
            amps[index] * (sign * binomial(n, l))
        })
        .collect())
}

fn newton_polish(p: &[C64], mut z: C64) -> C64 {
    for _ in 0..4 {
        let (mut f, mut df) = (C64::new(0.0, 0.0), C64::new(0.0, 0.0));
        for &c in p.iter().rev() {
            df = df * z + f;
            f = f * z + c;
        }
        if df.norm() < 1e-300 {
            break;
        }
        let step = f / df;
        z -= step;
        if step.norm() <= 1e-16 * z.norm().max(1.0) {
            break;
        }
    }
    z
}

/// Roots with multiplicity of a polynomial of degree 1..=3 with nonzero constant term.
/// Coefficients are in ascending order.
fn roots(p: &[C64]) -> Vec<(C64, usize)> {
    let deg = p.len() - 1;
    let lead = p[deg];
    let c: Vec<C64> = p.iter().map(|&x| x / lead).collect();
    match deg {
        1 => vec![(-c[0], 1)],
        2 => {
            let (b, cc) = (c[1], c[0]);
            let disc = b * b - cc * 4.0;
            let scale = b.norm_sqr().max(cc.norm());
            if disc.norm() <= DEGENERACY_TOL * scale {
                return vec![(-b / 2.0, 2)];
            }
            let s = disc.sqrt();
            let q = if (b + s).norm() >= (b - s).norm() { -(b + s) / 2.0 } else { -(b - s) / 2.0 };
            vec![(newton_polish(p, q), 1), (newton_polish(p, cc / q), 1)]
        }
        3 => {
            let (b, cc, d) = (c[2], c[1], c[0]);
            let scale = b.norm().max(cc.norm().sqrt()).max(d.norm().cbrt());
            let d0 = b * b - cc * 3.0;
            let d1 = b * b * b * 2.0 - b * cc * 9.0 + d * 27.0;
            if d0.norm() <= DEGENERACY_TOL * scale.powi(2) && d1.norm() <= DEGENERACY_TOL * scale.powi(3) {
                return vec![(-b / 3.0, 3)];
            }
            let disc = (d0 * d0 * d0 * 4.0 - d1 * d1) / 27.0;
            if disc.norm() <= DEGENERACY_TOL * scale.powi(6) {
                let double = (d * 9.0 - b * cc) / (d0 * 2.0);
                let simple = (b * cc * 4.0 - d * 9.0 - b * b * b) / d0;
                return vec![(double, 2), (newton_polish(p, simple), 1)];
            }
            let s = (d1 * d1 - d0 * d0 * d0 * 4.0).sqrt();
            let inner = if (d1 + s).norm() >= (d1 - s).norm() { d1 + s } else { d1 - s };
            let big_c = (inner / 2.0).powf(1.0 / 3.0);
            let omega = C64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
            (0..3)
                .map(|k| {
                    let ck = big_c * omega.powu(k);
                    let z = -(b + ck + d0 / ck) / 3.0;
                    (newton_polish(p, z), 1)
                })
                .collect()
        }
        _ => vec![],
    }
}

fn star_direction(z: C64) -> SphericalDirection {
    SphericalDirection {
        theta: 2.0 * z.norm().atan(),
        phi: if z.norm() == 0.0 { 0.0 } else { z.arg().rem_euclid(std::f64::consts::TAU) },
    }
}

/// Stars with multiplicities, sorted by polar angle then azimuth.
pub fn majorana_stars(psi: &PureState) -> Result<Vec<MajoranaStar>> {
    let p = majorana_polynomial(psi)?;
    let n = p.len() - 1;
    let biggest = p.iter().fold(0.0f64, |m, c| m.max(c.norm()));
    let nonzero: Vec<usize> = (0..=n).filter(|&l| p[l].norm() > COEFF_TOL * biggest).collect();
    let low = nonzero[0];
    let high = *nonzero.last().expect("normalized state has a nonzero coefficient");
    let mut stars: Vec<MajoranaStar> = Vec::new();
    let mut push = |direction: SphericalDirection, multiplicity: usize| {
        if multiplicity == 0 {
            return;
        }
        if let Some(s) = stars
            .iter_mut()
            .find(|s| s.direction.angle_to(direction) < CLUSTER_TOL)
        {
            s.multiplicity += multiplicity;
        } else {
            stars.push(MajoranaStar {
                direction,
                multiplicity,
            });
        }
    };
    push(SphericalDirection::north(), low);
    push(SphericalDirection::south(), n - high);
    if high > low {
        for (z, k) in roots(&p[low..=high]) {
            push(star_direction(z), k);
        }
    }
    stars.sort_by(|a, b| {
        a.direction
            .theta
            .total_cmp(&b.direction.theta)
            .then(a.direction.phi.total_cmp(&b.direction.phi))
    });
    Ok(stars)
}
