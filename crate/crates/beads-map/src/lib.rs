//! Spherical-function beads of multi-qubit operators.
//!
//! Each LISA label ℓ′ becomes a real spherical function
//! `b(θ, φ) = Σ_{j,m} c′_{j,m} Y_{j,m}(θ, φ)` with `c′ = s_j c`. In the default
//! scaling the single-qubit and fully symmetric beads read directly as
//! expectation values of identical local spin measurements along `(θ, φ)`.

pub mod beads;
pub mod direction;
pub mod error;
pub mod gub_states;
pub mod harmonics;
pub mod husimi;
pub mod majorana;
pub mod scaling;

pub use beads::{bead_coefficients, bead_value, beads_to_operator, BeadFunction, BeadSet};
pub use direction::{fibonacci_directions, SphericalDirection};
pub use error::{BeadsError, Result};
pub use harmonics::{real_sph_harmonic, real_sph_harmonic_xyz};
pub use gub_states::{gub_labels, gub_state};
pub use husimi::{coherent_state, husimi, husimi_from_beads, symmetric_label};
pub use majorana::{majorana_polynomial, majorana_stars, MajoranaStar};
pub use scaling::{
    canonical_xi, eta, global_unitary_bound, is_canonical, scale_factor, xi, zeta, ScalingMode,
};
