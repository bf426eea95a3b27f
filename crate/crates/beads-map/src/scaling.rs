//! Rank-specific scaling factors `s_j = ζ(N) · ξ_j · η_j` that turn LISA
//! coefficients into bead coefficients.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use lisa_basis::{lisa_operator, BeadLabel, LisaBasis, Parity, Tau};
use quantum_core::linalg::eigh;
use quantum_core::CMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{BeadsError, Result};

/// How LISA coefficients are scaled into bead coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalingMode {
    /// `ζ ξ η` with canonical ξ for fully symmetric labels and GUB ξ otherwise.
    #[default]
    Beads,
    /// No scaling (`s = 1`): the raw Wigner-type droplet expansion `Σ c Y`.
    Drops,
    /// As `Beads`, but the global unitary bound is left out of ξ for non-canonical labels.
    Natural,
}

impl ScalingMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ScalingMode::Beads => "beads",
            ScalingMode::Drops => "drops",
            ScalingMode::Natural => "natural",
        }
    }
}

impl fmt::Display for ScalingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ScalingMode {
    type Err = BeadsError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "beads" => Ok(ScalingMode::Beads),
            "drops" => Ok(ScalingMode::Drops),
            "natural" => Ok(ScalingMode::Natural),
            other => Err(BeadsError::UnknownMode(other.to_string())),
        }
    }
}

/// `ζ(N) = √2^N`.
pub fn zeta(n: usize) -> f64 {
    2f64.powf(n as f64 / 2.0)
}

/// `η_j = √(4π/(2j+1))`, the axial value of `Y_{j,0}` inverted.
pub fn eta(j: usize) -> f64 {
    (4.0 * std::f64::consts::PI / (2 * j + 1) as f64).sqrt()
}

/// True for labels scaled by the canonical Pauli-z weights rather than by a global
/// unitary bound: the identity, single-qubit labels and the fully symmetric ones.
pub fn is_canonical(label: &BeadLabel) -> bool {
    label.linearity() <= 1 || label.is_fully_symmetric()
}

/// Canonical ξ for fully symmetric labels; `None` for GUB-scaled labels.
pub fn canonical_xi(label: &BeadLabel, j: usize) -> Option<f64> {
    match (label.linearity(), label.tau(), label.parity(), j) {
        (0, _, _, 0) | (1, _, _, 1) => Some(1.0),
        (2, None, Parity::Even, 0) => Some((1.0f64 / 3.0).sqrt()),
        (2, None, Parity::Even, 2) => Some((2.0f64 / 3.0).sqrt()),
        (3, Some(Tau::T1), Parity::Odd, 1) => Some((3.0f64 / 5.0).sqrt()),
        (3, Some(Tau::T1), Parity::Odd, 3) => Some((2.0f64 / 5.0).sqrt()),
        _ => None,
    }
}

/// Largest `|eigenvalue|` of a Hermitian operator: the maximal overlap of any
/// unitarily transformed pure state with it.
pub fn global_unitary_bound(t: &CMatrix) -> f64 {
    let (values, _) = eigh(t);
    values.iter().fold(0.0, |m, v| m.max(v.abs()))
}

#[derive(Debug, Clone)]
struct Entry {
    label: BeadLabel,
    j: usize,
    xi_beads: f64,
    xi_natural: f64,
}

static TABLES: [OnceLock<Vec<Entry>>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];

fn table(n: usize) -> Result<&'static [Entry]> {
    let basis = LisaBasis::get(n)?;
    Ok(TABLES[n - 1].get_or_init(|| {
        let mut out = Vec::new();
        for label in basis.labels() {
            for &j in label.ranks() {
                let (xi_beads, xi_natural) = match canonical_xi(&label, j) {
                    Some(x) => (x, x),
                    None => {
                        let t = lisa_operator(n, &label, j, 0).expect("axial operator exists");
                        let u = global_unitary_bound(&t.matrix);
                        (1.0 / (zeta(n) * u), 1.0 / zeta(n))
                    }
                };
                out.push(Entry {
                    label: label.clone(),
                    j,
                    xi_beads,
                    xi_natural,
                });
            }
        }
        out
    }))
}

fn entry(label: &BeadLabel, j: usize, n: usize) -> Result<&'static Entry> {
    label.validate_for(n)?;
    table(n)?
        .iter()
        .find(|e| &e.label == label && e.j == j)
        .ok_or_else(|| {
            BeadsError::Lisa(lisa_basis::LisaError::InvalidComponent {
                label: label.to_string(),
                j,
                m: 0,
            })
        })
}

/// ξ for a label and rank in an `n`-qubit register.
pub fn xi(label: &BeadLabel, j: usize, n: usize, mode: ScalingMode) -> Result<f64> {
    let e = entry(label, j, n)?;
    Ok(match mode {
        ScalingMode::Beads => e.xi_beads,
        ScalingMode::Natural => e.xi_natural,
        ScalingMode::Drops => 1.0,
    })
}

/// `s_j = ζ(N) ξ_j η_j`, or 1 in drops mode.
pub fn scale_factor(label: &BeadLabel, j: usize, n: usize, mode: ScalingMode) -> Result<f64> {
    let x = xi(label, j, n, mode)?;
    Ok(match mode {
        ScalingMode::Drops => 1.0,
        _ => zeta(n) * x * eta(j),
    })
}
