//! Procedures built on beads: correlations of asymmetric measurements, Bell
//! tests, Grover success probabilities, graph-state transformations and bead
//! tomography.

pub mod asym;
pub mod bell;
pub mod error;
pub mod graph;
pub mod grover;
pub mod rotation;
pub mod tomography;

pub use asym::{asym_corr, asym_corr_2q, asym_corr_3q, extract_components, sampling_directions, EvenPairReadout};
pub use bell::{
    chsh_directions, chsh_report, chsh_s, corr_by_measurement, corr_by_readout, corr_by_rotation,
    ghz_mermin_product, master_formula_2q, xz_plane_formula, ChshReport, MerminProduct,
};
pub use error::{AnalysisError, Result};
pub use graph::{
    graph_state, local_complementation, local_complementation_gates, measurement_rule, GraphMeasurement,
    GraphState,
};
pub use grover::{grover_circuit, grover_success_prob, GroverCircuit};
pub use rotation::{global_rotation, local_alignment, rotation_from, rotation_to};
pub use tomography::{
    exact_oracle, shot_noise_oracle, tomo_axial_operator, tomo_axial_operator_with, tomo_reconstruct,
    TomographyOperator,
};
