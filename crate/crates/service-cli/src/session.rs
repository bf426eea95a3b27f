//! The session protocol: one JSON request per line in, one JSON response per
//! line out, answered strictly in order.
//!
//! A request is `{"id": …, "method": "…", "params": {…}}`; `id` is echoed
//! back and `params` may be omitted for methods without parameters. A
//! response is `{"version": 1, "id": …, "result": …}` or
//! `{"version": 1, "id": …, "error": {"code": "…", "message": "…"}}`.
//!
//! Methods: `list_presets`, `load_circuit`, `step_to`, `seek`,
//! `select_branch`, `set_display`, `snapshot`, `edit_circuit`,
//! `measure_now` and `export`.

use std::fs;
use std::path::Path;

use beads_map::ScalingMode;
use colorspace::ColorScheme;
use quantum_core::{Circuit, Snapshot};
use render_export::{export_ply, scene_meshes, snapshot_scenes, DisplayVariant, PlotVariant, SceneConfig, SceneSnapshot};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::document::{CircuitDocument, InitialState, StepRecord};
use crate::error::CliError;
use crate::presets::{list_presets, preset, PresetParams};
use crate::run::{branch_rows, Position};

pub const SESSION_VERSION: u32 = 1;

/// Structured protocol error.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProtocolError {
    pub code: String,
    pub message: String,
}

impl ProtocolError {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        ProtocolError {
            code: code.to_string(),
            message: message.into(),
        }
    }
}

impl From<CliError> for ProtocolError {
    fn from(e: CliError) -> Self {
        let code = match &e {
            CliError::Parse { .. } => "parse_error",
            CliError::Input(_) => "invalid_input",
            CliError::UnknownPreset(_) => "unknown_preset",
            CliError::Render(_) => "render_error",
            CliError::Io(_) => "io_error",
            CliError::Runtime(_) => "runtime_error",
        };
        ProtocolError::new(code, e.to_string())
    }
}

type Reply = std::result::Result<Value, ProtocolError>;

#[derive(Debug, Deserialize)]
struct Request {
    #[serde(default)]
    id: Value,
    method: String,
    #[serde(default)]
    params: Value,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LoadParams {
    #[serde(default)]
    preset: Option<String>,
    #[serde(default)]
    params: PresetParams,
    #[serde(default)]
    document: Option<CircuitDocument>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StepParams {
    k: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeekParams {
    k: usize,
    t: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BranchParams {
    /// Bit record to show, or null for every branch.
    bits: Option<Vec<u8>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DisplayParams {
    variant: Option<DisplayVariant>,
    scheme: Option<ColorScheme>,
    #[serde(default, with = "double_option")]
    connected_scheme: Option<Option<ColorScheme>>,
    mode: Option<ScalingMode>,
    plot: Option<PlotVariant>,
    rings: Option<usize>,
    segments: Option<usize>,
    include_identity: Option<bool>,
}

/// Distinguishes an absent field from an explicit `null`.
mod double_option {
    use serde::{Deserialize, Deserializer};

    pub fn deserialize<'de, T, D>(d: D) -> Result<Option<Option<T>>, D::Error>
    where
        T: Deserialize<'de>,
        D: Deserializer<'de>,
    {
        Option::<T>::deserialize(d).map(Some)
    }
}

/// Circuit patch operation with a 0-based step index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum PatchOp {
    Insert { index: usize, step: StepRecord },
    Remove { index: usize },
    Replace { index: usize, step: StepRecord },
    SetInitial { initial: Option<InitialState> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EditParams {
    ops: Vec<PatchOp>,
}

fn z_axis() -> [f64; 3] {
    [0.0, 0.0, 1.0]
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MeasureParams {
    qubit: usize,
    #[serde(default = "z_axis")]
    direction: [f64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum ExportKind {
    /// The current scenes as a JSON array.
    #[default]
    Scenes,
    /// The loaded circuit document.
    Circuit,
    /// One PLY file per drawn bead of the viewed scene, into a directory.
    Ply,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExportParams {
    path: String,
    #[serde(default)]
    kind: ExportKind,
    rings: Option<usize>,
    segments: Option<usize>,
}

struct Loaded {
    document: CircuitDocument,
    circuit: Circuit,
}

/// Protocol state: the loaded circuit, the position in it, the branch
/// selection and the display settings.
pub struct Session {
    loaded: Option<Loaded>,
    position: Position,
    selection: Option<Vec<u8>>,
    display: SceneConfig,
}

impl Default for Session {
    fn default() -> Self {
        Self::new()
    }
}

fn params<T: for<'de> Deserialize<'de>>(v: Value) -> std::result::Result<T, ProtocolError> {
    let v = if v.is_null() { json!({}) } else { v };
    serde_json::from_value(v).map_err(|e| ProtocolError::new("invalid_params", e.to_string()))
}

fn out_of_range(msg: impl Into<String>) -> ProtocolError {
    ProtocolError::new("out_of_range", msg)
}

/// True when one record is a prefix of the other.
fn compatible(a: &[u8], b: &[u8]) -> bool {
    a.iter().zip(b).all(|(x, y)| x == y)
}

/// File name of a bead mesh: the bead id with braces and separators replaced.
pub fn ply_file_name(index: usize, id: &str) -> String {
    let name: String = id
        .chars()
        .filter_map(|c| match c {
            '{' | '}' => None,
            ',' | ' ' => Some('_'),
            c => Some(c),
        })
        .collect();
    let name = if name.is_empty() { "identity".to_string() } else { name };
    format!("{index:02}_{name}.ply")
}

impl Session {
    pub fn new() -> Self {
        Session {
            loaded: None,
            position: Position::after(0),
            selection: None,
            display: SceneConfig::default(),
        }
    }

    pub fn display(&self) -> &SceneConfig {
        &self.display
    }

    pub fn position(&self) -> Position {
        self.position
    }

    /// Handle one request line and return the response line.
    pub fn handle_line(&mut self, line: &str) -> String {
        let (id, reply) = match serde_json::from_str::<Value>(line) {
            Err(e) => (Value::Null, Err(CliError::parse(&e).into())),
            Ok(v) => {
                let id = v.get("id").cloned().unwrap_or(Value::Null);
                match serde_json::from_value::<Request>(v) {
                    Err(e) => (id, Err(ProtocolError::new("invalid_request", e.to_string()))),
                    Ok(req) => (req.id.clone(), self.dispatch(&req.method, req.params)),
                }
            }
        };
        let response = match reply {
            Ok(result) => json!({"version": SESSION_VERSION, "id": id, "result": result}),
            Err(error) => json!({"version": SESSION_VERSION, "id": id, "error": error}),
        };
        response.to_string()
    }

    /// Run one method.
    pub fn dispatch(&mut self, method: &str, p: Value) -> Reply {
        match method {
            "list_presets" => Ok(json!({ "presets": list_presets() })),
            "load_circuit" => self.load_circuit(params(p)?),
            "step_to" => {
                let StepParams { k } = params(p)?;
                self.step_to(k)
            }
            "seek" => {
                let SeekParams { k, t } = params(p)?;
                self.seek(k, t)
            }
            "select_branch" => self.select_branch(params(p)?),
            "set_display" => self.set_display(params(p)?),
            "snapshot" => self.snapshot(),
            "edit_circuit" => self.edit_circuit(params(p)?),
            "measure_now" => self.measure_now(params(p)?),
            "export" => self.export(params(p)?),
            other => Err(ProtocolError::new("unknown_method", format!("unknown method {other:?}"))),
        }
    }

    fn loaded(&self) -> std::result::Result<&Loaded, ProtocolError> {
        self.loaded
            .as_ref()
            .ok_or_else(|| ProtocolError::new("no_circuit", "no circuit is loaded"))
    }

    fn current(&self) -> std::result::Result<Snapshot, ProtocolError> {
        Ok(self.position.snapshot(&self.loaded()?.circuit)?)
    }

    fn summary(&self) -> Reply {
        let loaded = self.loaded()?;
        let snap = self.current()?;
        Ok(json!({
            "position": self.position,
            "step_count": loaded.document.steps.len(),
            "mixed": snap.mixed,
            "branches": branch_rows(self.position.step, &snap),
            "selected": self.selection,
        }))
    }

    fn install(&mut self, document: CircuitDocument) -> std::result::Result<(), ProtocolError> {
        let circuit = document
            .to_circuit()
            .map_err(|e| ProtocolError::new("invalid_circuit", e.to_string()))?;
        self.loaded = Some(Loaded { document, circuit });
        Ok(())
    }

    fn load_circuit(&mut self, p: LoadParams) -> Reply {
        let document = match (p.preset, p.document) {
            (Some(name), None) => preset(&name, &p.params)?,
            (None, Some(doc)) => doc,
            _ => {
                return Err(ProtocolError::new(
                    "invalid_params",
                    "load_circuit needs exactly one of preset or document",
                ))
            }
        };
        self.install(document)?;
        self.position = Position::after(0);
        self.selection = None;
        let loaded = self.loaded()?;
        Ok(json!({
            "qubit_count": loaded.document.qubit_count,
            "steps": loaded.document.steps.iter().map(StepRecord::describe).collect::<Vec<_>>(),
            "metadata": loaded.document.metadata,
            "document": loaded.document,
            "position": self.position,
        }))
    }

    fn step_to(&mut self, k: usize) -> Reply {
        let len = self.loaded()?.document.steps.len();
        if k > len {
            return Err(out_of_range(format!("step {k} exceeds circuit length {len}")));
        }
        self.position = Position::after(k);
        self.summary()
    }

    fn seek(&mut self, k: usize, t: f64) -> Reply {
        let len = self.loaded()?.document.steps.len();
        if k >= len {
            return Err(out_of_range(format!("no step {k} in a circuit of length {len}")));
        }
        if !(0.0..=1.0).contains(&t) {
            return Err(out_of_range(format!("t = {t} is outside [0, 1]")));
        }
        self.position = Position { step: k, t: Some(t) };
        self.summary()
    }

    fn select_branch(&mut self, p: BranchParams) -> Reply {
        if let Some(bits) = &p.bits {
            let snap = self.current()?;
            let known = snap.branches.iter().any(|b| {
                let record: Vec<u8> = b.outcomes.iter().map(|o| o.bit).collect();
                record == *bits
            });
            if !known {
                return Err(ProtocolError::new(
                    "unknown_branch",
                    format!("no branch with outcome bits {bits:?} at this position"),
                ));
            }
        }
        self.selection = p.bits;
        self.summary()
    }

    fn set_display(&mut self, p: DisplayParams) -> Reply {
        let mut d = self.display.clone();
        if let Some(v) = p.variant {
            d.variant = v;
        }
        if let Some(s) = p.scheme {
            d.scheme = s;
        }
        if let Some(c) = p.connected_scheme {
            d.connected_scheme = c;
        }
        if let Some(m) = p.mode {
            d.mode = m;
        }
        if let Some(pl) = p.plot {
            d.plot = pl;
        }
        if let Some(r) = p.rings {
            d.rings = r;
        }
        if let Some(s) = p.segments {
            d.segments = s;
        }
        if let Some(i) = p.include_identity {
            d.include_identity = i;
        }
        if d.rings < render_export::MIN_RINGS || d.segments < render_export::MIN_SEGMENTS {
            return Err(out_of_range(format!(
                "resolution {}×{} is below the minimum {}×{}",
                d.rings,
                d.segments,
                render_export::MIN_RINGS,
                render_export::MIN_SEGMENTS
            )));
        }
        self.display = d;
        Ok(json!({ "display": self.display }))
    }

    /// Scenes of the viewed branches: the selected branch (and its
    /// descendants or ancestor), or all branches without a selection.
    pub fn scenes(&self) -> std::result::Result<Vec<SceneSnapshot>, ProtocolError> {
        let snap = self.current()?;
        let scenes = snapshot_scenes(&snap, &self.display).map_err(CliError::from)?;
        if snap.mixed {
            return Ok(scenes);
        }
        Ok(match &self.selection {
            None => scenes,
            Some(sel) => scenes
                .into_iter()
                .filter(|s| s.meta.branch.as_ref().is_none_or(|b| compatible(&b.bits, sel)))
                .collect(),
        })
    }

    fn snapshot(&self) -> Reply {
        let mut out = self.summary()?;
        out["scenes"] = serde_json::to_value(self.scenes()?).expect("scenes serialize");
        Ok(out)
    }

    fn edit_circuit(&mut self, p: EditParams) -> Reply {
        let mut doc = self.loaded()?.document.clone();
        for (i, op) in p.ops.iter().enumerate() {
            let len = doc.steps.len();
            let bad = |index: usize| out_of_range(format!("op {i}: index {index} is out of range for {len} steps"));
            match op {
                PatchOp::Insert { index, step } => {
                    if *index > len {
                        return Err(bad(*index));
                    }
                    doc.steps.insert(*index, step.clone());
                }
                PatchOp::Remove { index } => {
                    if *index >= len {
                        return Err(bad(*index));
                    }
                    doc.steps.remove(*index);
                }
                PatchOp::Replace { index, step } => {
                    if *index >= len {
                        return Err(bad(*index));
                    }
                    doc.steps[*index] = step.clone();
                }
                PatchOp::SetInitial { initial } => doc.initial = initial.clone(),
            }
        }
        self.install(doc)?;
        let len = self.loaded()?.document.steps.len();
        if self.position.step > len || (self.position.t.is_some() && self.position.step == len) {
            self.position = Position::after(len);
        }
        self.selection = None;
        let loaded = self.loaded()?;
        Ok(json!({
            "steps": loaded.document.steps.iter().map(StepRecord::describe).collect::<Vec<_>>(),
            "document": loaded.document,
            "position": self.position,
        }))
    }

    /// Insert a measurement right after the current position and move past it.
    fn measure_now(&mut self, p: MeasureParams) -> Reply {
        let index = self.position.step + usize::from(self.position.t.is_some());
        self.edit_circuit(EditParams {
            ops: vec![PatchOp::Insert {
                index,
                step: StepRecord::Measure {
                    qubit: p.qubit,
                    direction: p.direction,
                },
            }],
        })?;
        self.position = Position::after(index + 1);
        self.snapshot()
    }

    fn export(&self, p: ExportParams) -> Reply {
        let io = |e: std::io::Error| ProtocolError::from(CliError::Io(e));
        match p.kind {
            ExportKind::Circuit => {
                fs::write(&p.path, self.loaded()?.document.to_json()).map_err(io)?;
                Ok(json!({ "written": [p.path] }))
            }
            ExportKind::Scenes => {
                let text = serde_json::to_string(&self.scenes()?).expect("scenes serialize");
                fs::write(&p.path, text).map_err(io)?;
                Ok(json!({ "written": [p.path] }))
            }
            ExportKind::Ply => {
                let snap = self.current()?;
                let rho = match (&self.selection, snap.mixed, snap.branches.len()) {
                    (_, true, _) | (_, false, 1) => snap.density(),
                    (Some(sel), false, _) => snap
                        .branch(sel)
                        .ok_or_else(|| ProtocolError::new("unknown_branch", "selected branch is not present"))?
                        .post_state
                        .density(),
                    (None, false, _) => {
                        return Err(ProtocolError::new(
                            "ambiguous_branch",
                            "select a branch before exporting meshes",
                        ))
                    }
                };
                let rings = p.rings.unwrap_or(render_export::DEFAULT_RINGS);
                let segments = p.segments.unwrap_or(render_export::DEFAULT_SEGMENTS);
                let meshes = scene_meshes(&rho, &self.display, rings, segments).map_err(CliError::from)?;
                let dir = Path::new(&p.path);
                fs::create_dir_all(dir).map_err(io)?;
                let mut written = Vec::new();
                for (i, (id, mesh)) in meshes.iter().enumerate() {
                    let path = dir.join(ply_file_name(i, id));
                    export_ply(mesh, &path).map_err(CliError::from)?;
                    written.push(path.to_string_lossy().into_owned());
                }
                Ok(json!({ "written": written }))
            }
        }
    }
}

