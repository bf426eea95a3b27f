//! State files for the `state` command.
//!
//! A state file is a JSON object holding either `amplitudes` (a normalized
//! state vector) or `density` (a density matrix as rows). Entries are plain
//! reals or `[re, im]` pairs, in big-endian basis order.

use quantum_core::{CMatrix, CVector, DensityOperator, PureState};
use serde::{Deserialize, Serialize};

use crate::document::ComplexValue;
use crate::error::{CliError, Result};

pub const STATE_FORMAT: &str = "beads-state";
pub const STATE_VERSION: u32 = 1;

fn default_format() -> String {
    STATE_FORMAT.to_string()
}

fn default_version() -> u32 {
    STATE_VERSION
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    #[serde(default = "default_format")]
    pub format: String,
    #[serde(default = "default_version")]
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitudes: Option<Vec<ComplexValue>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub density: Option<Vec<Vec<ComplexValue>>>,
}

impl StateFile {
    pub fn from_pure(psi: &PureState) -> Self {
        StateFile {
            format: default_format(),
            version: STATE_VERSION,
            amplitudes: Some(psi.amplitudes().iter().map(|&z| ComplexValue::from_c64(z)).collect()),
            density: None,
        }
    }

    pub fn from_density(rho: &DensityOperator) -> Self {
        let m = rho.matrix();
        StateFile {
            format: default_format(),
            version: STATE_VERSION,
            amplitudes: None,
            density: Some(
                (0..m.nrows())
                    .map(|i| (0..m.ncols()).map(|j| ComplexValue::from_c64(m[(i, j)])).collect())
                    .collect(),
            ),
        }
    }

    /// The validated density operator.
    pub fn to_density(&self) -> Result<DensityOperator> {
        if self.format != STATE_FORMAT || self.version != STATE_VERSION {
            return Err(CliError::Input(format!(
                "unsupported state document {} v{}",
                self.format, self.version
            )));
        }
        match (&self.amplitudes, &self.density) {
            (Some(a), None) => {
                let v = CVector::from_iterator(a.len(), a.iter().map(|z| z.to_c64()));
                Ok(PureState::new(v)?.density())
            }
            (None, Some(rows)) => {
                let dim = rows.len();
                if rows.iter().any(|r| r.len() != dim) {
                    return Err(CliError::Input("density matrix must be square".into()));
                }
                Ok(DensityOperator::new(CMatrix::from_fn(dim, dim, |i, j| rows[i][j].to_c64()))?)
            }
            _ => Err(CliError::Input(
                "a state file needs exactly one of amplitudes or density".into(),
            )),
        }
    }
}

/// Parse a state file, reporting the position of JSON errors.
pub fn parse_state(text: &str) -> Result<DensityOperator> {
    let file: StateFile = serde_json::from_str(text).map_err(|e| CliError::parse(&e))?;
    file.to_density()
}
