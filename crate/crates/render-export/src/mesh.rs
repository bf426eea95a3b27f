//! UV-sphere geometry with per-vertex colors.

use colorspace::Rgb;

use crate::error::{RenderError, Result};

pub const MIN_RINGS: usize = 8;
pub const MIN_SEGMENTS: usize = 16;
/// Resolution used for file exports.
pub const DEFAULT_RINGS: usize = 64;
pub const DEFAULT_SEGMENTS: usize = 128;

/// Triangle mesh over a UV sphere. `directions` holds the unit vector each
/// vertex samples; `positions` the (possibly scaled) vertex coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub rings: usize,
    pub segments: usize,
    pub directions: Vec<[f64; 3]>,
    pub positions: Vec<[f64; 3]>,
    pub triangles: Vec<[u32; 3]>,
    pub colors: Vec<Rgb>,
}

/// Polar angle of ring `i` and azimuth of segment `k`.
pub fn grid_angles(rings: usize, segments: usize, i: usize, k: usize) -> (f64, f64) {
    let theta = std::f64::consts::PI * i as f64 / rings as f64;
    let phi = std::f64::consts::TAU * k as f64 / segments as f64;
    (theta, phi)
}

fn check_resolution(rings: usize, segments: usize) -> Result<()> {
    if rings < MIN_RINGS || segments < MIN_SEGMENTS {
        return Err(RenderError::Resolution { rings, segments });
    }
    Ok(())
}

/// Unit directions of the `(rings+1)(segments+1)` grid, ring-major from the
/// north pole (θ = 0) to the south pole (θ = π). The seam column φ = 2π
/// repeats φ = 0 so texture-style consumers get a closed strip.
pub fn sphere_directions(rings: usize, segments: usize) -> Result<Vec<[f64; 3]>> {
    check_resolution(rings, segments)?;
    let mut out = Vec::with_capacity((rings + 1) * (segments + 1));
    for i in 0..=rings {
        for k in 0..=segments {
            let (theta, phi) = grid_angles(rings, segments, i, k);
            let mut v = quantum_core::direction(theta, phi);
            if i == 0 || i == rings {
                // Exact poles, independent of φ.
                v = [0.0, 0.0, theta.cos().signum()];
            }
            out.push(v);
        }
    }
    Ok(out)
}

/// Uncolored (black) unit sphere. Triangles are wound counter-clockwise seen
/// from outside; the degenerate triangles at the poles are left out.
pub fn sphere_mesh(rings: usize, segments: usize) -> Result<Mesh> {
    let directions = sphere_directions(rings, segments)?;
    let idx = |i: usize, k: usize| (i * (segments + 1) + k) as u32;
    let mut triangles = Vec::with_capacity(2 * rings * segments);
    for i in 0..rings {
        for k in 0..segments {
            let (a, b, c, d) = (idx(i, k), idx(i + 1, k), idx(i + 1, k + 1), idx(i, k + 1));
            if i + 1 < rings {
                triangles.push([a, b, c]);
            }
            if i > 0 {
                triangles.push([a, c, d]);
            }
        }
    }
    Ok(Mesh {
        rings,
        segments,
        positions: directions.clone(),
        colors: vec![Rgb::BLACK; directions.len()],
        directions,
        triangles,
    })
}

impl Mesh {
    pub fn vertex_count(&self) -> usize {
        self.positions.len()
    }

    /// Scale every position by `scale` and then shift it by `offset`.
    pub fn transformed(&self, offset: [f64; 3], scale: f64) -> Mesh {
        let mut out = self.clone();
        for p in &mut out.positions {
            for a in 0..3 {
                p[a] = p[a] * scale + offset[a];
            }
        }
        out
    }

    /// Concatenate meshes into one vertex and triangle list.
    pub fn merged(meshes: &[Mesh]) -> Mesh {
        let mut out = Mesh {
            rings: meshes.first().map_or(0, |m| m.rings),
            segments: meshes.first().map_or(0, |m| m.segments),
            directions: vec![],
            positions: vec![],
            triangles: vec![],
            colors: vec![],
        };
        for m in meshes {
            let base = out.positions.len() as u32;
            out.directions.extend_from_slice(&m.directions);
            out.positions.extend_from_slice(&m.positions);
            out.colors.extend_from_slice(&m.colors);
            out.triangles
                .extend(m.triangles.iter().map(|t| [t[0] + base, t[1] + base, t[2] + base]));
        }
        out
    }

    /// 8-bit vertex colors.
    pub fn colors_u8(&self) -> Vec<[u8; 3]> {
        self.colors.iter().map(|c| c.to_u8()).collect()
    }
}
