//! Bell tests: the CHSH combination computed three ways, and the GHZ–Mermin
//! product.

use beads_map::{bead_coefficients, BeadSet, ScalingMode, SphericalDirection};
use lisa_basis::{BeadLabel, Parity};
use quantum_core::{measure_density, spin_correlation, DensityOperator};

use crate::asym::{asym_corr_2q, EvenPairReadout};
use crate::error::{AnalysisError, Result};
use crate::rotation::local_alignment;

fn deg(theta: f64, phi: f64) -> SphericalDirection {
    SphericalDirection::degrees(theta, phi).expect("fixed direction")
}

/// Measurement settings `(r₁, r̃₁)` for qubit 1 and `(r₂, r̃₂)` for qubit 2.
pub fn chsh_directions() -> ([SphericalDirection; 2], [SphericalDirection; 2]) {
    ([deg(0.0, 0.0), deg(90.0, 0.0)], [deg(45.0, 0.0), deg(135.0, 0.0)])
}

/// `S = C(r₁,r₂) + C(r̃₁,r₂) + C(r̃₁,r̃₂) − C(r₁,r̃₂)` from a correlation function.
pub fn chsh_combination(mut corr: impl FnMut(SphericalDirection, SphericalDirection) -> Result<f64>) -> Result<f64> {
    let ([r1, r1t], [r2, r2t]) = chsh_directions();
    Ok(corr(r1, r2)? + corr(r1t, r2)? + corr(r1t, r2t)? - corr(r1, r2t)?)
}

fn require(rho: &DensityOperator, n: usize) -> Result<()> {
    if rho.qubit_count() != n {
        return Err(AnalysisError::QubitCount {
            expected: n,
            found: rho.qubit_count(),
        });
    }
    Ok(())
}

fn t_beads(rho: &DensityOperator) -> Result<BeadSet> {
    Ok(bead_coefficients(rho.matrix(), ScalingMode::Beads)?)
}

/// Correlation by rotating each qubit so that its direction becomes z and
/// reading the symmetric bilinear bead along z.
pub fn corr_by_rotation(rho: &DensityOperator, a: SphericalDirection, b: SphericalDirection) -> Result<f64> {
    require(rho, 2)?;
    let rotated = rho.evolve(&local_alignment(&[a, b]))?;
    let beads = t_beads(&rotated)?;
    Ok(beads.value(&BeadLabel::pair(0, 1, Parity::Even), SphericalDirection::north())?)
}

/// Correlation by measuring qubit 1 along `a` and reading qubit 2's Q-Bead
/// along `b` in every post-measurement branch.
pub fn corr_by_measurement(rho: &DensityOperator, a: SphericalDirection, b: SphericalDirection) -> Result<f64> {
    require(rho, 2)?;
    let mut total = 0.0;
    for branch in measure_density(rho, 0, a.to_vector())? {
        if branch.probability == 0.0 {
            continue;
        }
        let beads = t_beads(&branch.post_state)?;
        let q2 = beads.value(&BeadLabel::single(1), b)?;
        total += branch.probability * branch.outcomes[0].eigenvalue() * q2;
    }
    Ok(total)
}

/// Scaled rank-1 components `(⟨T′_{1,-1}⟩, ⟨T′_{1,0}⟩, ⟨T′_{1,1}⟩)` of `{k,l}odd`,
/// read along y, z and x.
pub fn odd_pair_readout(beads: &BeadSet, k: usize, l: usize) -> Result<[f64; 3]> {
    let label = BeadLabel::pair(k, l, Parity::Odd);
    let bead = beads
        .get(&label)
        .ok_or_else(|| AnalysisError::IncompleteBeads(label.to_string()))?;
    Ok([
        bead.value(deg(90.0, 90.0)),
        bead.value(deg(0.0, 0.0)),
        bead.value(deg(90.0, 0.0)),
    ])
}

/// Closed-form two-qubit correlation for arbitrary directions in terms of
/// the scaled component read-outs of `{k,l}even` and `{k,l}odd`.
pub fn master_formula_2q(
    even: &EvenPairReadout,
    odd: [f64; 3],
    a: SphericalDirection,
    b: SphericalDirection,
) -> f64 {
    let (dt, st) = (a.theta - b.theta, a.theta + b.theta);
    let (dp, sp) = (a.phi - b.phi, a.phi + b.phi);
    let (cdt, sdt, cst, sst) = (dt.cos(), dt.sin(), st.cos(), st.sin());
    let (ch, sh) = ((dp / 2.0).cos(), (dp / 2.0).sin());
    let (cs, ss) = ((sp / 2.0).cos(), (sp / 2.0).sin());
    let [t1m1, t10, t11] = odd;
    even.t00 * (cdt * ch * ch + cst * sh * sh)
        + t1m1 * (sst * sh * ss - sdt * ch * cs)
        + t10 * (dp.sin() / 2.0 * (cst - cdt))
        + t11 * (sdt * ss * ch + sst * sh * cs)
        + even.t2m2 * (sp.sin() / 2.0 * (cdt - cst))
        + even.t2m1 * (sdt * sh * cs + sst * ss * ch)
        + even.t20 * (cdt / 2.0 * (1.0 - dp.cos() / 2.0) + cst / 2.0 * (1.0 + dp.cos() / 2.0))
        + even.t21 * (-sdt * sh * ss + sst * ch * cs)
        + even.t22 * (sp.cos() / 2.0 * (cdt - cst))
}

/// The same formula restricted to the xz-half plane `φ₁ = φ₂ = 0`.
pub fn xz_plane_formula(even: &EvenPairReadout, t1m1: f64, theta1: f64, theta2: f64) -> f64 {
    let (dt, st) = (theta1 - theta2, theta1 + theta2);
    dt.cos() * (even.t00 + even.t20 / 4.0 + even.t22 / 2.0)
        + st.cos() * (3.0 * even.t20 / 4.0 - even.t22 / 2.0)
        + st.sin() * even.t21
        - dt.sin() * t1m1
}

/// Correlation in the xz-half plane from bead read-outs at fixed directions.
pub fn corr_by_readout(beads: &BeadSet, a: SphericalDirection, b: SphericalDirection) -> Result<f64> {
    let even = EvenPairReadout::read(beads, 0, 1)?;
    let odd = odd_pair_readout(beads, 0, 1)?;
    Ok(master_formula_2q(&even, odd, a, b))
}

/// `S` evaluated by each method and by direct expectation values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChshReport {
    /// Local rotations onto z, then the symmetric bead along z.
    pub rotation: f64,
    /// Measure qubit 1, then read qubit 2's Q-Bead.
    pub measurement: f64,
    /// Closed-form combination of bead read-outs.
    pub readout: f64,
    /// Component extraction from all bilinear beads.
    pub extraction: f64,
    /// `Tr(ρ σσ)` directly.
    pub direct: f64,
}

impl ChshReport {
    /// Largest pairwise difference between the methods.
    pub fn spread(&self) -> f64 {
        let v = [self.rotation, self.measurement, self.readout, self.extraction, self.direct];
        let max = v.iter().cloned().fold(f64::MIN, f64::max);
        let min = v.iter().cloned().fold(f64::MAX, f64::min);
        max - min
    }
}

pub fn chsh_report(rho: &DensityOperator) -> Result<ChshReport> {
    require(rho, 2)?;
    let beads = t_beads(rho)?;
    Ok(ChshReport {
        rotation: chsh_combination(|a, b| corr_by_rotation(rho, a, b))?,
        measurement: chsh_combination(|a, b| corr_by_measurement(rho, a, b))?,
        readout: chsh_combination(|a, b| corr_by_readout(&beads, a, b))?,
        extraction: chsh_combination(|a, b| asym_corr_2q(&beads, a, b))?,
        direct: chsh_combination(|a, b| {
            Ok(spin_correlation(rho, &[0, 1], &[a.to_vector(), b.to_vector()])?)
        })?,
    })
}

/// The CHSH value `S` of a two-qubit state.
pub fn chsh_s(rho: &DensityOperator) -> Result<f64> {
    Ok(chsh_report(rho)?.rotation)
}

/// `⟨XXX⟩, ⟨XYY⟩, ⟨YXY⟩, ⟨YYX⟩` and their product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MerminProduct {
    pub xxx: f64,
    pub xyy: f64,
    pub yxy: f64,
    pub yyx: f64,
    pub product: f64,
}

pub fn ghz_mermin_product(rho: &DensityOperator) -> Result<MerminProduct> {
    require(rho, 3)?;
    let x = [1.0, 0.0, 0.0];
    let y = [0.0, 1.0, 0.0];
    let c = |d: [[f64; 3]; 3]| spin_correlation(rho, &[0, 1, 2], &d);
    let xxx = c([x, x, x])?;
    let xyy = c([x, y, y])?;
    let yxy = c([y, x, y])?;
    let yyx = c([y, y, x])?;
    Ok(MerminProduct {
        xxx,
        xyy,
        yxy,
        yyx,
        product: xxx * xyy * yxy * yyx,
    })
}
