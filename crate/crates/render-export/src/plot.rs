//! Plot variants and bead coloring on sphere meshes.

use std::fmt;
use std::str::FromStr;

use beads_map::BeadFunction;
use colorspace::{blend_total_with, scheme_color, ColorScheme, Rgb};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{RenderError, Result};
use crate::mesh::{sphere_mesh, Mesh, DEFAULT_RINGS, DEFAULT_SEGMENTS};

/// How a bead function is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlotVariant {
    /// Colored sphere of constant size.
    #[default]
    Sphere,
    /// Vertex radius equals `|b|` in that direction.
    RadialMagnitude,
    /// Values normalized to a maximum of 1; sphere radius `‖ρ^{(ℓ′)}‖`.
    NormRadius,
    /// Values normalized to a maximum of 1; sphere volume `‖ρ^{(ℓ′)}‖`.
    NormVolume,
}

impl PlotVariant {
    pub const ALL: [PlotVariant; 4] = [
        PlotVariant::Sphere,
        PlotVariant::RadialMagnitude,
        PlotVariant::NormRadius,
        PlotVariant::NormVolume,
    ];

    pub fn id(self) -> &'static str {
        match self {
            PlotVariant::Sphere => "sphere",
            PlotVariant::RadialMagnitude => "radial-magnitude",
            PlotVariant::NormRadius => "norm-radius",
            PlotVariant::NormVolume => "norm-volume",
        }
    }

    /// Sphere radius for a component of norm `norm`.
    pub fn base_radius(self, norm: f64) -> f64 {
        match self {
            PlotVariant::Sphere | PlotVariant::RadialMagnitude => 1.0,
            PlotVariant::NormRadius => norm,
            PlotVariant::NormVolume => (3.0 * norm / (4.0 * std::f64::consts::PI)).cbrt(),
        }
    }

    /// True when values are rescaled to a maximum absolute value of 1 before coloring.
    pub fn normalizes(self) -> bool {
        matches!(self, PlotVariant::NormRadius | PlotVariant::NormVolume)
    }
}

impl fmt::Display for PlotVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for PlotVariant {
    type Err = RenderError;
    fn from_str(s: &str) -> Result<Self> {
        PlotVariant::ALL
            .iter()
            .copied()
            .find(|p| p.id() == s)
            .ok_or_else(|| RenderError::UnknownPlot(s.to_string()))
    }
}

/// Color rule for one bead.
#[derive(Debug, Clone, PartialEq)]
pub enum BeadColoring {
    /// The bead value read on one scheme.
    Scheme(ColorScheme),
    /// Total-correlation wheel: the connected and compound parts of the same
    /// label(s), each read on its own scheme and blended by their ratio.
    TotalBlend {
        connected: BeadFunction,
        compound: BeadFunction,
        compound_scheme: ColorScheme,
        connected_scheme: ColorScheme,
    },
}

/// Resolution and scaling of a bead mesh.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshOptions {
    pub plot: PlotVariant,
    pub rings: usize,
    pub segments: usize,
    /// Values are divided by this before coloring. It is 1 for ordinary beads
    /// and the number of merged labels for combined-symmetry beads.
    pub value_bound: f64,
}

impl Default for MeshOptions {
    fn default() -> Self {
        MeshOptions {
            plot: PlotVariant::Sphere,
            rings: DEFAULT_RINGS,
            segments: DEFAULT_SEGMENTS,
            value_bound: 1.0,
        }
    }
}

/// Colored mesh of one bead at the default export resolution.
pub fn bead_mesh(bead: &BeadFunction, norm: f64, scheme: ColorScheme, plot: PlotVariant) -> Result<Mesh> {
    bead_mesh_with(
        bead,
        norm,
        &BeadColoring::Scheme(scheme),
        &MeshOptions {
            plot,
            ..MeshOptions::default()
        },
    )
}

/// Colored mesh of one bead. `norm` is the unscaled component norm `‖ρ^{(ℓ′)}‖`
/// used by the norm-radius and norm-volume variants.
pub fn bead_mesh_with(bead: &BeadFunction, norm: f64, coloring: &BeadColoring, opts: &MeshOptions) -> Result<Mesh> {
    let mut mesh = sphere_mesh(opts.rings, opts.segments)?;
    let values: Vec<f64> = mesh.directions.par_iter().map(|&r| bead.value_at(r)).collect();
    let bound = if opts.plot.normalizes() {
        let max = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if max > 0.0 {
            max
        } else {
            1.0
        }
    } else {
        opts.value_bound
    };
    mesh.colors = match coloring {
        BeadColoring::Scheme(scheme) => values.par_iter().map(|&v| scheme_color(v / bound, *scheme)).collect(),
        BeadColoring::TotalBlend {
            connected,
            compound,
            compound_scheme,
            connected_scheme,
        } => mesh
            .directions
            .par_iter()
            .map(|&r| {
                let e = connected.value_at(r) / bound;
                let c = compound.value_at(r) / bound;
                blend_total_with(e, c, *compound_scheme, *connected_scheme)
            })
            .collect::<Vec<Rgb>>(),
    };
    let base = opts.plot.base_radius(norm);
    mesh.positions = mesh
        .directions
        .iter()
        .zip(&values)
        .map(|(d, v)| {
            let r = match opts.plot {
                PlotVariant::RadialMagnitude => v.abs(),
                _ => base,
            };
            [d[0] * r, d[1] * r, d[2] * r]
        })
        .collect();
    Ok(mesh)
}
