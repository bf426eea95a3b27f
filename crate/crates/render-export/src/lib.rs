//! Colored geometry and scene documents for beads.
//!
//! Bead functions are drawn on UV-sphere meshes with per-vertex colors. A
//! display variant (A–J) selects which beads of a state appear, how they are
//! colored and whether symmetry components are merged. Scenes carry the bead
//! coefficients, evaluated vertex colors and a layout with entanglement arcs,
//! and serialize to a versioned JSON document. Meshes export as binary PLY.

pub mod error;
pub mod layout;
pub mod mesh;
pub mod ply;
pub mod plot;
pub mod scene;
pub mod variant;

pub use error::{RenderError, Result};
pub use layout::{LayoutConfig, LayoutItem};
pub use mesh::{sphere_directions, sphere_mesh, Mesh, DEFAULT_RINGS, DEFAULT_SEGMENTS, MIN_RINGS, MIN_SEGMENTS};
pub use ply::{export_ply, import_ply, read_ply, write_ply, PlyMesh};
pub use plot::{bead_mesh, bead_mesh_with, BeadColoring, MeshOptions, PlotVariant};
pub use scene::{
    scene, scene_meshes, snapshot_scenes, ArcRecord, BeadPlacement, BranchInfo, SceneCoefficient, SceneColors, SceneConfig,
    SceneLabel, SceneLayout, SceneMeta, SceneSnapshot, OMIT_THRESHOLD, SCENE_FORMAT, SCENE_RINGS, SCENE_SEGMENTS,
    SCENE_VERSION,
};
pub use variant::{BeadKind, ColorStyle, DisplayVariant, SymmetryDisplay};

/// Scene document as compact JSON.
pub fn export_scene(snapshot: &SceneSnapshot) -> Result<String> {
    snapshot.to_json()
}

/// Parse a scene document and check its format tag and version.
pub fn import_scene(json: &str) -> Result<SceneSnapshot> {
    let s = SceneSnapshot::from_json(json)?;
    if s.meta.format != SCENE_FORMAT || s.meta.version != SCENE_VERSION {
        return Err(RenderError::Scene(format!(
            "unsupported document {} v{}",
            s.meta.format, s.meta.version
        )));
    }
    Ok(s)
}
