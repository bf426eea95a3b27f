//! Scenes: the beads of one state selected by a display variant, colored,
//! laid out and packaged as a versioned document.

use std::collections::BTreeMap;

use beads_map::{bead_coefficients, scale_factor, BeadFunction, BeadSet, ScalingMode};
use colorspace::ColorScheme;
use correlations::{correlation_beads, CorrelationDecomposition, CorrelationError};
use lisa_basis::{reconstruct, BasisKey, BeadLabel, LisaBasis, LisaDecomposition};
use quantum_core::{CMatrix, DensityOperator, Snapshot};
use serde::{Deserialize, Serialize};

use crate::error::{RenderError, Result};
use crate::layout::{LayoutConfig, LayoutItem};
use crate::mesh::Mesh;
use crate::plot::{bead_mesh_with, BeadColoring, MeshOptions, PlotVariant};
use crate::variant::{BeadKind, ColorStyle, DisplayVariant, SymmetryDisplay};

pub const SCENE_FORMAT: &str = "beads-scene";
pub const SCENE_VERSION: u32 = 1;
/// Default per-bead resolution of scene colors.
pub const SCENE_RINGS: usize = 16;
pub const SCENE_SEGMENTS: usize = 32;
/// Correlation beads and arcs whose component norm is below this are omitted.
pub const OMIT_THRESHOLD: f64 = correlations::OMIT_THRESHOLD;

/// Everything that selects and styles a scene.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneConfig {
    pub variant: DisplayVariant,
    /// Scheme for Q-Beads, compound and total correlations.
    pub scheme: ColorScheme,
    /// Scheme for connected correlations; defaults to the partner of `scheme`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connected_scheme: Option<ColorScheme>,
    pub mode: ScalingMode,
    pub plot: PlotVariant,
    pub rings: usize,
    pub segments: usize,
    pub include_identity: bool,
    pub omit_threshold: f64,
    pub layout: LayoutConfig,
}

impl Default for SceneConfig {
    fn default() -> Self {
        SceneConfig {
            variant: DisplayVariant::A,
            scheme: ColorScheme::RedGreenDiscontinuous,
            connected_scheme: None,
            mode: ScalingMode::Beads,
            plot: PlotVariant::Sphere,
            rings: SCENE_RINGS,
            segments: SCENE_SEGMENTS,
            include_identity: false,
            omit_threshold: OMIT_THRESHOLD,
            layout: LayoutConfig::default(),
        }
    }
}

impl SceneConfig {
    pub fn with_variant(variant: DisplayVariant) -> Self {
        SceneConfig {
            variant,
            ..SceneConfig::default()
        }
    }

    pub fn connected(&self) -> ColorScheme {
        self.connected_scheme.unwrap_or(self.scheme.connected_partner())
    }
}

/// Classical record of the branch a scene shows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BranchInfo {
    pub qubits: Vec<usize>,
    pub bits: Vec<u8>,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneMeta {
    pub format: String,
    pub version: u32,
    pub qubit_count: usize,
    pub variant: DisplayVariant,
    pub colors: ColorStyle,
    pub symmetry: SymmetryDisplay,
    pub scheme: ColorScheme,
    pub connected_scheme: ColorScheme,
    pub mode: ScalingMode,
    pub plot: PlotVariant,
    pub rings: usize,
    pub segments: usize,
    pub purity: f64,
    /// False for mixed states, whose correlations are shown as T-Beads only.
    pub correlation_split: bool,
    pub complete: bool,
    pub extended_scale: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<BranchInfo>,
}

/// One displayed bead.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneLabel {
    pub id: String,
    pub kind: BeadKind,
    /// LISA labels summed into this bead (one unless symmetries are merged).
    pub components: Vec<BeadLabel>,
    pub subsystem: Vec<usize>,
    /// Unscaled component norm `‖ρ^{(ℓ′)}‖`.
    pub norm: f64,
    /// Largest `|b|` the color scale covers.
    pub value_bound: f64,
    pub omitted: bool,
}

/// Scaled coefficient `c′_{j,m}` of one component of one bead.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneCoefficient {
    pub bead: String,
    pub label: BeadLabel,
    pub j: usize,
    pub m: i32,
    pub value: f64,
}

/// Vertex colors of one bead in sphere-mesh vertex order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneColors {
    pub bead: String,
    pub rgb: Vec<[u8; 3]>,
    /// Per-vertex radii for the radial-magnitude plot.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radii: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BeadPlacement {
    pub bead: String,
    pub position: [f64; 3],
    pub radius: f64,
}

/// Entanglement indicator over a subsystem; thickness is proportional to the
/// norm of its connected components.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArcRecord {
    pub subsystem: Vec<usize>,
    pub points: Vec<[f64; 3]>,
    pub norm: f64,
    pub thickness: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneLayout {
    pub beads: Vec<BeadPlacement>,
    pub arcs: Vec<ArcRecord>,
}

/// Self-contained scene document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneSnapshot {
    pub meta: SceneMeta,
    pub labels: Vec<SceneLabel>,
    pub coefficients: Vec<SceneCoefficient>,
    pub colors: Vec<SceneColors>,
    pub layout: SceneLayout,
}

/// Bead selected for display before coloring.
struct Entry {
    kind: BeadKind,
    components: Vec<BeadLabel>,
    merged: bool,
}

impl Entry {
    fn subsystem(&self) -> Vec<usize> {
        self.components[0].subsystem().to_vec()
    }

    fn id(&self) -> String {
        let first = self.components[0].to_string();
        let name = if self.merged || self.components[0].is_single_qubit() {
            first.trim_end_matches("even").trim_end_matches("odd").to_string()
        } else {
            first
        };
        format!("{}{}", self.kind.prefix(), name)
    }
}

fn combined_key(label: &BeadLabel) -> (Vec<usize>, usize) {
    (label.subsystem().to_vec(), label.tau().map_or(0, |t| t.index()))
}

fn select_entries(labels: &[BeadLabel], variant: DisplayVariant, split: bool, include_identity: bool) -> Vec<Entry> {
    let mut out = Vec::new();
    for l in labels {
        if l.is_identity() && include_identity {
            out.push(Entry {
                kind: BeadKind::Identity,
                components: vec![l.clone()],
                merged: false,
            });
        } else if l.is_single_qubit() {
            out.push(Entry {
                kind: BeadKind::Q,
                components: vec![l.clone()],
                merged: false,
            });
        }
    }
    let kinds: Vec<BeadKind> = if split || variant.correlation_kinds().is_empty() {
        variant.correlation_kinds().to_vec()
    } else {
        vec![BeadKind::T]
    };
    let multilinear: Vec<&BeadLabel> = labels
        .iter()
        .filter(|l| l.is_multilinear())
        .filter(|l| match variant.symmetry() {
            SymmetryDisplay::FullySymmetric => l.is_fully_symmetric(),
            SymmetryDisplay::QubitsOnly => false,
            _ => true,
        })
        .collect();
    for &kind in &kinds {
        if variant.symmetry() == SymmetryDisplay::Combined {
            let mut groups: Vec<((Vec<usize>, usize), Vec<BeadLabel>)> = Vec::new();
            for l in &multilinear {
                let key = combined_key(l);
                match groups.iter_mut().find(|(k, _)| *k == key) {
                    Some((_, g)) => g.push((*l).clone()),
                    None => groups.push((key, vec![(*l).clone()])),
                }
            }
            out.extend(groups.into_iter().map(|(_, components)| Entry {
                kind,
                components,
                merged: true,
            }));
        } else {
            out.extend(multilinear.iter().map(|l| Entry {
                kind,
                components: vec![(*l).clone()],
                merged: false,
            }));
        }
    }
    out
}

/// Sum of the bead functions of `labels` in `set`.
fn merged_function(set: &BeadSet, labels: &[BeadLabel]) -> Result<(BeadFunction, f64)> {
    let mut coefficients = BTreeMap::new();
    let mut norm_sq = 0.0;
    for l in labels {
        let b = set
            .get(l)
            .ok_or_else(|| RenderError::Scene(format!("bead {l} missing from bead set")))?;
        for (&k, &c) in &b.coefficients {
            *coefficients.entry(k).or_insert(0.0) += c;
        }
        let n = set.norm(l).unwrap_or(0.0);
        norm_sq += n * n;
    }
    Ok((
        BeadFunction {
            label: labels[0].clone(),
            coefficients,
        },
        norm_sq.sqrt(),
    ))
}

struct Sources {
    t: BeadSet,
    split: Option<CorrelationDecomposition>,
}

impl Sources {
    fn set(&self, kind: BeadKind) -> &BeadSet {
        match (kind, &self.split) {
            (BeadKind::E, Some(d)) => &d.e_beads,
            (BeadKind::C, Some(d)) => &d.c_beads,
            _ => &self.t,
        }
    }
}

fn sources(rho: &DensityOperator, config: &SceneConfig) -> Result<(Sources, Vec<Entry>)> {
    let t = bead_coefficients(rho.matrix(), config.mode)?;
    let split = if config.variant.needs_split() {
        match correlation_beads(rho, config.mode) {
            Ok(d) => Some(d),
            Err(CorrelationError::MixedState(_)) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    let sources = Sources { t, split };
    let labels = LisaBasis::get(rho.qubit_count())?.labels();
    let entries = select_entries(&labels, config.variant, sources.split.is_some(), config.include_identity);
    Ok((sources, entries))
}

/// Bead function, unscaled norm and color rule of one displayed bead.
fn render_parts(entry: &Entry, sources: &Sources, config: &SceneConfig) -> Result<(BeadFunction, f64, BeadColoring)> {
    let (function, norm) = merged_function(sources.set(entry.kind), &entry.components)?;
    let (compound, connected) = (config.scheme, config.connected());
    let coloring = match (config.variant.colors(), entry.kind, &sources.split) {
        (ColorStyle::TotalBlend, BeadKind::T, Some(d)) => BeadColoring::TotalBlend {
            connected: merged_function(&d.e_beads, &entry.components)?.0,
            compound: merged_function(&d.c_beads, &entry.components)?.0,
            compound_scheme: compound,
            connected_scheme: connected,
        },
        (ColorStyle::Separate, BeadKind::E, _) => BeadColoring::Scheme(connected),
        _ => BeadColoring::Scheme(compound),
    };
    Ok((function, norm, coloring))
}

/// Colored meshes of the drawn beads of a scene at the given resolution, keyed
/// by bead id in scene order.
pub fn scene_meshes(
    rho: &DensityOperator,
    config: &SceneConfig,
    rings: usize,
    segments: usize,
) -> Result<Vec<(String, Mesh)>> {
    let (sources, entries) = sources(rho, config)?;
    let mut out = Vec::new();
    for entry in &entries {
        let (function, norm, coloring) = render_parts(entry, &sources, config)?;
        if entry.components[0].is_multilinear() && norm < config.omit_threshold {
            continue;
        }
        let opts = MeshOptions {
            plot: config.plot,
            rings,
            segments,
            value_bound: entry.components.len() as f64,
        };
        out.push((entry.id(), bead_mesh_with(&function, norm, &coloring, &opts)?));
    }
    Ok(out)
}

/// Scene of a density operator.
pub fn scene(rho: &DensityOperator, config: &SceneConfig) -> Result<SceneSnapshot> {
    let n = rho.qubit_count();
    let variant = config.variant;
    let (sources, entries) = sources(rho, config)?;
    let compound = config.scheme;
    let connected = config.connected();

    let mut scene_labels = Vec::with_capacity(entries.len());
    let mut coefficients = Vec::new();
    let mut colors = Vec::with_capacity(entries.len());
    let mut placements = Vec::with_capacity(entries.len());
    let items: Vec<LayoutItem> = entries
        .iter()
        .map(|e| LayoutItem {
            kind: e.kind,
            subsystem: e.subsystem(),
        })
        .collect();
    let positions = config.layout.place(&items);

    for (entry, position) in entries.iter().zip(positions) {
        let id = entry.id();
        let set = sources.set(entry.kind);
        let (function, norm, coloring) = render_parts(entry, &sources, config)?;
        let multilinear = entry.components[0].is_multilinear();
        let omitted = multilinear && norm < config.omit_threshold;
        let value_bound = entry.components.len() as f64;
        for l in &entry.components {
            for (&(j, m), &value) in &set.get(l).expect("checked by merged_function").coefficients {
                coefficients.push(SceneCoefficient {
                    bead: id.clone(),
                    label: l.clone(),
                    j,
                    m,
                    value,
                });
            }
        }
        let (rgb, radii) = if omitted {
            (vec![], None)
        } else {
            let mesh = bead_mesh_with(
                &function,
                norm,
                &coloring,
                &MeshOptions {
                    plot: config.plot,
                    rings: config.rings,
                    segments: config.segments,
                    value_bound,
                },
            )?;
            let radii = (config.plot == PlotVariant::RadialMagnitude).then(|| {
                mesh.positions
                    .iter()
                    .map(|p| (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt() * config.layout.bead_radius)
                    .collect()
            });
            (mesh.colors_u8(), radii)
        };
        colors.push(SceneColors {
            bead: id.clone(),
            rgb,
            radii,
        });
        placements.push(BeadPlacement {
            bead: id.clone(),
            position,
            radius: config.layout.bead_radius * config.plot.base_radius(norm),
        });
        scene_labels.push(SceneLabel {
            id,
            kind: entry.kind,
            components: entry.components.clone(),
            subsystem: entry.subsystem(),
            norm,
            value_bound,
            omitted,
        });
    }

    let arcs = match (&sources.split, variant.has_arcs()) {
        (Some(d), true) => arcs(d, config),
        _ => vec![],
    };

    Ok(SceneSnapshot {
        meta: SceneMeta {
            format: SCENE_FORMAT.to_string(),
            version: SCENE_VERSION,
            qubit_count: n,
            variant,
            colors: variant.colors(),
            symmetry: variant.symmetry(),
            scheme: compound,
            connected_scheme: connected,
            mode: config.mode,
            plot: config.plot,
            rings: config.rings,
            segments: config.segments,
            purity: rho.purity(),
            correlation_split: sources.split.is_some(),
            complete: variant.is_complete(),
            extended_scale: variant.extended_scale(),
            branch: None,
        },
        labels: scene_labels,
        coefficients,
        colors,
        layout: SceneLayout { beads: placements, arcs },
    })
}

fn arcs(d: &CorrelationDecomposition, config: &SceneConfig) -> Vec<ArcRecord> {
    let mut by_subsystem: Vec<(Vec<usize>, f64)> = Vec::new();
    for (label, norm) in &d.entanglement.per_label {
        let s = label.subsystem().to_vec();
        match by_subsystem.iter_mut().find(|(k, _)| *k == s) {
            Some((_, sq)) => *sq += norm * norm,
            None => by_subsystem.push((s, norm * norm)),
        }
    }
    by_subsystem
        .into_iter()
        .map(|(s, sq)| (s, sq.sqrt()))
        .filter(|(_, norm)| *norm >= config.omit_threshold)
        .map(|(subsystem, norm)| ArcRecord {
            points: config.layout.arc_points(&subsystem),
            subsystem,
            norm,
            thickness: config.layout.arc_width * norm,
        })
        .collect()
}

/// One scene per branch of a circuit snapshot, or a single scene of the
/// mixture once branches have been mixed.
pub fn snapshot_scenes(snapshot: &Snapshot, config: &SceneConfig) -> Result<Vec<SceneSnapshot>> {
    if snapshot.mixed {
        return Ok(vec![scene(&snapshot.density(), config)?]);
    }
    snapshot
        .branches
        .iter()
        .map(|b| {
            let mut s = scene(&b.post_state.density(), config)?;
            if !b.outcomes.is_empty() {
                s.meta.branch = Some(BranchInfo {
                    qubits: b.outcomes.iter().map(|o| o.qubit).collect(),
                    bits: b.outcomes.iter().map(|o| o.bit).collect(),
                    probability: b.probability,
                });
            }
            Ok(s)
        })
        .collect()
}

impl SceneSnapshot {
    pub fn label(&self, id: &str) -> Option<&SceneLabel> {
        self.labels.iter().find(|l| l.id == id)
    }

    /// Beads that are drawn (not omitted).
    pub fn visible(&self) -> impl Iterator<Item = &SceneLabel> {
        self.labels.iter().filter(|l| !l.omitted)
    }

    pub fn visible_of_kind(&self, kind: BeadKind) -> Vec<&SceneLabel> {
        self.visible().filter(|l| l.kind == kind).collect()
    }

    pub fn colors_of(&self, id: &str) -> Option<&[[u8; 3]]> {
        self.colors.iter().find(|c| c.bead == id).map(|c| c.rgb.as_slice())
    }

    /// Bead function of a displayed bead rebuilt from the exported coefficients.
    pub fn function(&self, id: &str) -> Option<BeadFunction> {
        let label = self.label(id)?;
        let mut coefficients = BTreeMap::new();
        for c in self.coefficients.iter().filter(|c| c.bead == id) {
            *coefficients.entry((c.j, c.m)).or_insert(0.0) += c.value;
        }
        Some(BeadFunction {
            label: label.components[0].clone(),
            coefficients,
        })
    }

    /// Density operator rebuilt from the exported coefficients. Fails for
    /// incomplete variants.
    pub fn reconstruct_density(&self) -> Result<CMatrix> {
        if !self.meta.complete {
            return Err(RenderError::Incomplete(self.meta.variant.to_string()));
        }
        let n = self.meta.qubit_count;
        let kinds: Vec<BeadKind> = self.labels.iter().map(|l| l.kind).collect();
        let has = |k: BeadKind| kinds.contains(&k);
        let connected_only = has(BeadKind::E) && !has(BeadKind::C) && !has(BeadKind::T);
        let mut d = LisaDecomposition::zeros(n)?;
        let identity = BeadLabel::identity();
        d.set(
            &BasisKey {
                label: identity,
                j: 0,
                m: 0,
            },
            1.0 / ((1u64 << n) as f64).sqrt(),
        )?;
        let mut acc: BTreeMap<BasisKey, f64> = BTreeMap::new();
        for c in &self.coefficients {
            let kind = self
                .label(&c.bead)
                .ok_or_else(|| RenderError::Scene(format!("coefficient for unknown bead {}", c.bead)))?
                .kind;
            if kind == BeadKind::Identity {
                continue;
            }
            let unscaled = c.value / scale_factor(&c.label, c.j, n, self.meta.mode)?;
            *acc.entry(BasisKey {
                label: c.label.clone(),
                j: c.j,
                m: c.m,
            })
            .or_insert(0.0) += unscaled;
        }
        for (key, v) in &acc {
            d.set(key, *v)?;
        }
        let op = reconstruct(&d);
        if connected_only {
            Ok(correlations::operator_from_connected(&op)?)
        } else {
            Ok(op)
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}
