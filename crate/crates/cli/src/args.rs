use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "dentcurve", version, about = "Count indentations on binary blob boundaries")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Curvature-based indentation analysis of every blob in the input.
    Analyze(AnalyzeArgs),
    /// Convex-hull gap counting baseline.
    Baseline(BaselineArgs),
    /// Write a synthetic test shape.
    Synth(SynthArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct SeverityArgs {
    /// Curvature threshold in 1/pixel.
    #[arg(long, conflicts_with = "rho_sigma")]
    pub sigma: Option<f64>,
    /// Radius-of-curvature cutoff in pixels (sigma = 1/rho).
    #[arg(long)]
    pub rho_sigma: Option<f64>,
}

#[derive(Debug, Args)]
pub struct PipelineArgs {
    /// Keep only this many boundary harmonics before differentiating.
    #[arg(long)]
    pub lowpass: Option<usize>,
    /// Resample each boundary to this many evenly spaced points first.
    #[arg(long)]
    pub resample: Option<usize>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub severity: SeverityArgs,
    #[command(flatten)]
    pub pipeline: PipelineArgs,
    /// Include the full curvature series for each blob.
    #[arg(long)]
    pub emit_curvature: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BaselineArgs {
    pub input: PathBuf,
    /// Smallest hull gap, in pixels, that is counted.
    #[arg(long, default_value_t = dentcurve::hull::DEFAULT_MIN_GAP_AREA)]
    pub min_gap_area: usize,
    /// Also run the curvature analysis and report both counts.
    #[arg(long)]
    pub compare: bool,
    #[command(flatten)]
    pub severity: SeverityArgs,
    #[command(flatten)]
    pub pipeline: PipelineArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShapeKind {
    Circle,
    Rose,
    Pacman,
    Nested,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SynthFormat {
    Pgm,
    Pbm,
    Csv,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long, value_enum)]
    pub shape: ShapeKind,
    /// Base radius; defaults to 100 (circle, rose), 120 (pacman) or 150 (nested).
    #[arg(long)]
    pub radius: Option<f64>,
    /// Lobe amplitude for `rose`.
    #[arg(long, default_value_t = 20.0)]
    pub amplitude: f64,
    /// Lobe count for `rose`.
    #[arg(long, default_value_t = 5)]
    pub lobes: u32,
    /// Boundary samples for analytic shapes.
    #[arg(long, default_value_t = 1024)]
    pub samples: usize,
    /// Half-angle of the `pacman` mouth, radians.
    #[arg(long, default_value_t = 0.5)]
    pub mouth: f64,
    #[arg(long, default_value_t = 512)]
    pub width: usize,
    #[arg(long, default_value_t = 512)]
    pub height: usize,
    /// Output format; inferred from the output extension when omitted.
    #[arg(long, value_enum)]
    pub format: Option<SynthFormat>,
    #[arg(long)]
    pub output: PathBuf,
}
