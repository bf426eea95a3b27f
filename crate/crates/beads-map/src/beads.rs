//! Bead functions: scaled coefficient tables evaluated as real spherical functions.

use std::collections::BTreeMap;

use lisa_basis::{decompose, reconstruct, BasisKey, BeadLabel, LisaBasis, LisaDecomposition};
use quantum_core::CMatrix;
use serde::{Deserialize, Serialize};

use crate::direction::SphericalDirection;
use crate::error::{BeadsError, Result};
use crate::harmonics::real_sph_harmonic_xyz;
use crate::scaling::{scale_factor, ScalingMode};

/// Scaled coefficients `c′_{j,m}` of one label.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BeadFunction {
    pub label: BeadLabel,
    #[serde(with = "coefficient_list")]
    pub coefficients: BTreeMap<(usize, i32), f64>,
}

/// Serializes the `(j, m) → c′` table as a list of `{j, m, value}` records.
mod coefficient_list {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Record {
        j: usize,
        m: i32,
        value: f64,
    }

    pub fn serialize<S: Serializer>(map: &BTreeMap<(usize, i32), f64>, s: S) -> Result<S::Ok, S::Error> {
        let records: Vec<Record> = map
            .iter()
            .map(|(&(j, m), &value)| Record { j, m, value })
            .collect();
        records.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, i32), f64>, D::Error> {
        let records = Vec::<Record>::deserialize(d)?;
        Ok(records.into_iter().map(|r| ((r.j, r.m), r.value)).collect())
    }
}

impl BeadFunction {
    /// `Σ c′_{j,m} Y_{j,m}(r)` at a Cartesian unit vector.
    pub fn value_at(&self, r: [f64; 3]) -> f64 {
        self.coefficients
            .iter()
            .map(|(&(j, m), &c)| c * real_sph_harmonic_xyz(j, m, r).expect("stored ranks are valid"))
            .sum()
    }

    /// `b(θ, φ)`.
    pub fn value(&self, dir: SphericalDirection) -> f64 {
        self.value_at(dir.to_vector())
    }

    /// Only the rank-`j` part `Σ_m c′_{j,m} Y_{j,m}`.
    pub fn rank_value(&self, j: usize, dir: SphericalDirection) -> f64 {
        let r = dir.to_vector();
        self.coefficients
            .iter()
            .filter(|(&(jj, _), _)| jj == j)
            .map(|(&(jj, m), &c)| c * real_sph_harmonic_xyz(jj, m, r).expect("stored ranks are valid"))
            .sum()
    }

    /// Values over many directions.
    pub fn values(&self, dirs: &[SphericalDirection]) -> Vec<f64> {
        dirs.iter().map(|&d| self.value(d)).collect()
    }

    /// `√Σ c′²`.
    pub fn coefficient_norm(&self) -> f64 {
        self.coefficients.values().map(|c| c * c).sum::<f64>().sqrt()
    }
}

/// Beads of one operator, with the Frobenius norm `‖A^{(ℓ′)}‖` of every label's
/// unscaled component.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BeadSet {
    pub qubit_count: usize,
    pub mode: ScalingMode,
    pub beads: Vec<BeadFunction>,
    pub norms: Vec<f64>,
}

impl BeadSet {
    /// Scale a decomposition into beads.
    pub fn from_decomposition(d: &LisaDecomposition, mode: ScalingMode) -> Result<Self> {
        let n = d.qubit_count();
        let labels = LisaBasis::get(n)?.labels();
        let mut beads = Vec::with_capacity(labels.len());
        let mut norms = Vec::with_capacity(labels.len());
        for label in labels {
            let mut coefficients = BTreeMap::new();
            for ((j, m), c) in d.label_components(&label) {
                coefficients.insert((j, m), c * scale_factor(&label, j, n, mode)?);
            }
            norms.push(d.label_norm(&label));
            beads.push(BeadFunction { label, coefficients });
        }
        Ok(BeadSet {
            qubit_count: n,
            mode,
            beads,
            norms,
        })
    }

    pub fn labels(&self) -> impl Iterator<Item = &BeadLabel> {
        self.beads.iter().map(|b| &b.label)
    }

    pub fn get(&self, label: &BeadLabel) -> Option<&BeadFunction> {
        self.beads.iter().find(|b| &b.label == label)
    }

    /// `‖A^{(ℓ′)}‖` of a label.
    pub fn norm(&self, label: &BeadLabel) -> Option<f64> {
        self.beads
            .iter()
            .position(|b| &b.label == label)
            .map(|i| self.norms[i])
    }

    /// Bead value of one label, or an error if the label is absent.
    pub fn value(&self, label: &BeadLabel, dir: SphericalDirection) -> Result<f64> {
        self.get(label)
            .map(|b| b.value(dir))
            .ok_or_else(|| BeadsError::MissingLabel(label.to_string()))
    }

    /// Undo the scaling. Labels absent from the set count as zero.
    pub fn to_decomposition(&self) -> Result<LisaDecomposition> {
        let n = self.qubit_count;
        let mut d = LisaDecomposition::zeros(n)?;
        for b in &self.beads {
            for (&(j, m), &c) in &b.coefficients {
                let key = BasisKey {
                    label: b.label.clone(),
                    j,
                    m,
                };
                d.set(&key, c / scale_factor(&b.label, j, n, self.mode)?)?;
            }
        }
        Ok(d)
    }

    /// The same operator in another scaling mode.
    pub fn rescaled(&self, mode: ScalingMode) -> Result<Self> {
        if mode == self.mode {
            return Ok(self.clone());
        }
        let d = self.to_decomposition()?;
        let mut out = BeadSet::from_decomposition(&d, mode)?;
        out.beads.retain(|b| self.get(&b.label).is_some());
        out.norms = out
            .beads
            .iter()
            .map(|b| self.norm(&b.label).expect("retained labels exist"))
            .collect();
        Ok(out)
    }

    /// Keep only labels accepted by `keep`.
    pub fn filtered(&self, keep: impl Fn(&BeadLabel) -> bool) -> Self {
        let (beads, norms) = self
            .beads
            .iter()
            .zip(&self.norms)
            .filter(|(b, _)| keep(&b.label))
            .map(|(b, n)| (b.clone(), *n))
            .unzip();
        BeadSet {
            qubit_count: self.qubit_count,
            mode: self.mode,
            beads,
            norms,
        }
    }
}

/// Beads of any Hermitian operator (usually a density operator).
pub fn bead_coefficients(a: &CMatrix, mode: ScalingMode) -> Result<BeadSet> {
    BeadSet::from_decomposition(&decompose(a)?, mode)
}

/// Rebuild the operator from a complete bead set.
pub fn beads_to_operator(beads: &BeadSet) -> Result<CMatrix> {
    for label in LisaBasis::get(beads.qubit_count)?.labels() {
        if beads.get(&label).is_none() {
            return Err(BeadsError::MissingLabel(label.to_string()));
        }
    }
    Ok(reconstruct(&beads.to_decomposition()?))
}

/// Value of one bead computed directly from an operator.
pub fn bead_value(bead: &BeadFunction, dir: SphericalDirection) -> f64 {
    bead.value(dir)
}
