use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use beads_map::ScalingMode;
use clap::{Args, Parser, Subcommand};
use colorspace::ColorScheme;
use render_export::{export_ply, scene, scene_meshes, DisplayVariant, PlotVariant, SceneConfig};
use service_cli::{
    final_state, list_presets, parse_state, ply_file_name, preset, run_circuit, CircuitDocument, CliError,
    PresetParams, Result, RunOptions, Session, SnapshotMode,
};

/// Bead visualizations of one- to three-qubit states and circuits.
#[derive(Parser)]
#[command(name = "beads", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scene of a single state read from a state file or taken from a preset.
    State {
        /// State file with `amplitudes` or `density`.
        file: Option<PathBuf>,
        #[command(flatten)]
        preset: PresetArgs,
        #[command(flatten)]
        display: DisplayArgs,
        /// Scene output file (standard output if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory for one binary PLY mesh per drawn bead.
        #[arg(long)]
        ply_dir: Option<PathBuf>,
        #[arg(long, default_value_t = render_export::DEFAULT_RINGS)]
        ply_rings: usize,
        #[arg(long, default_value_t = render_export::DEFAULT_SEGMENTS)]
        ply_segments: usize,
    },
    /// Circuit documents and presets.
    Circuit {
        #[command(subcommand)]
        command: CircuitCommand,
    },
    /// Run the session protocol on standard input and output.
    Serve,
}

#[derive(Subcommand)]
enum CircuitCommand {
    /// Scene sequence and branch table of a circuit.
    Run {
        /// Circuit document (JSON).
        file: Option<PathBuf>,
        #[command(flatten)]
        preset: PresetArgs,
        #[command(flatten)]
        display: DisplayArgs,
        #[arg(long, value_enum, default_value = "per-step")]
        snapshots: SnapshotArg,
        /// Intervals of the intra-gate time grid in dense mode.
        #[arg(long, default_value_t = 4)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the preset library.
    Presets,
    /// Print the circuit document of a preset.
    Show {
        #[command(flatten)]
        preset: PresetArgs,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum SnapshotArg {
    PerStep,
    Dense,
}

#[derive(Args)]
struct PresetArgs {
    /// Preset name (see `beads circuit presets`).
    #[arg(long)]
    preset: Option<String>,
    /// Angle parameter of presets that take one, in radians.
    #[arg(long)]
    theta: Option<f64>,
    /// Marked item of the Grover preset.
    #[arg(long)]
    solution: Option<usize>,
    /// Number of Grover iterations.
    #[arg(long)]
    iterations: Option<usize>,
    /// Bead label of the `gub` preset, e.g. "{1,2,3 tau2}odd".
    #[arg(long)]
    label: Option<String>,
    /// Use the state with bead value −1 along z for the `gub` preset.
    #[arg(long)]
    negative: bool,
}

impl PresetArgs {
    fn document(&self) -> Option<Result<CircuitDocument>> {
        let name = self.preset.as_ref()?;
        let params = PresetParams {
            theta: self.theta,
            solution: self.solution,
            iterations: self.iterations,
            label: self.label.clone(),
            positive: self.negative.then_some(false),
        };
        Some(preset(name, &params))
    }
}

#[derive(Args)]
struct DisplayArgs {
    /// Display variant A–J.
    #[arg(long, default_value = "A")]
    variant: DisplayVariant,
    /// Color scheme of the bead values.
    #[arg(long, default_value = "red-green-discontinuous")]
    scheme: ColorScheme,
    /// Scheme of connected correlations (partner of --scheme if omitted).
    #[arg(long)]
    connected_scheme: Option<ColorScheme>,
    /// Radius scaling of the beads.
    #[arg(long, default_value = "beads")]
    mode: ScalingMode,
    /// Surface each bead is drawn on.
    #[arg(long, default_value = "sphere")]
    plot: PlotVariant,
    /// Latitude rings of every bead grid.
    #[arg(long, default_value_t = render_export::SCENE_RINGS)]
    rings: usize,
    /// Longitude segments of every bead grid.
    #[arg(long, default_value_t = render_export::SCENE_SEGMENTS)]
    segments: usize,
    /// Include the identity bead.
    #[arg(long)]
    identity: bool,
}

impl DisplayArgs {
    fn config(&self) -> SceneConfig {
        SceneConfig {
            variant: self.variant,
            scheme: self.scheme,
            connected_scheme: self.connected_scheme,
            mode: self.mode,
            plot: self.plot,
            rings: self.rings,
            segments: self.segments,
            include_identity: self.identity,
            ..SceneConfig::default()
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.write_all(b"\n")?;
        }
    }
    Ok(())
}

fn circuit_input(file: Option<&Path>, preset: &PresetArgs) -> Result<CircuitDocument> {
    match (file, preset.document()) {
        (Some(f), None) => CircuitDocument::from_json(&read(f)?),
        (None, Some(doc)) => doc,
        _ => Err(CliError::Input("give either a circuit file or --preset".into())),
    }
}

fn state_command(
    file: Option<&Path>,
    preset: &PresetArgs,
    display: &DisplayArgs,
    out: Option<&Path>,
    ply: Option<(&Path, usize, usize)>,
) -> Result<()> {
    let rho = match (file, preset.document()) {
        (Some(f), None) => parse_state(&read(f)?)?,
        (None, Some(doc)) => final_state(&doc?)?,
        _ => return Err(CliError::Input("give either a state file or --preset".into())),
    };
    let config = display.config();
    let s = scene(&rho, &config)?;
    if let Some((dir, rings, segments)) = ply {
        fs::create_dir_all(dir)?;
        for (i, (id, mesh)) in scene_meshes(&rho, &config, rings, segments)?.iter().enumerate() {
            export_ply(mesh, dir.join(ply_file_name(i, id)))?;
        }
    }
    emit(&s.to_json()?, out)
}

fn serve() -> Result<()> {
    let mut session = Session::new();
    let stdin = io::stdin();
    let mut stdout = io::stdout().lock();
    for line in stdin.lock().lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        writeln!(stdout, "{}", session.handle_line(&line))?;
        stdout.flush()?;
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::State {
            file,
            preset,
            display,
            out,
            ply_dir,
            ply_rings,
            ply_segments,
        } => state_command(
            file.as_deref(),
            &preset,
            &display,
            out.as_deref(),
            ply_dir.as_deref().map(|d| (d, ply_rings, ply_segments)),
        ),
        Command::Circuit { command } => match command {
            CircuitCommand::Run {
                file,
                preset,
                display,
                snapshots,
                samples,
                seed,
                out,
            } => {
                if samples == 0 {
                    return Err(CliError::Input("--samples must be at least 1".into()));
                }
                let doc = circuit_input(file.as_deref(), &preset)?;
                let options = RunOptions {
                    snapshots: match snapshots {
                        SnapshotArg::PerStep => SnapshotMode::PerStep,
                        SnapshotArg::Dense => SnapshotMode::Dense,
                    },
                    samples,
                    seed,
                    display: display.config(),
                };
                emit(&run_circuit(&doc, &options)?.to_json(), out.as_deref())
            }
            CircuitCommand::Presets => {
                let text = serde_json::to_string_pretty(&list_presets()).expect("presets serialize");
                emit(&text, None)
            }
            CircuitCommand::Show { preset } => {
                let doc = preset
                    .document()
                    .ok_or_else(|| CliError::Input("--preset is required".into()))??;
                emit(&doc.to_json(), None)
            }
        },
        Command::Serve => serve(),
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("beads: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
