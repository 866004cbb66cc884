//! Command implementations behind the `dentcurve` binary.

pub mod args;
pub mod error;
pub mod input;
pub mod report;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use dentcurve::hull::component_hull_gaps;
use dentcurve::raster::{encode_pbm, encode_pgm, trace_component};
use dentcurve::synth::{self, NestedNotchSpec, PolarShapeSpec};
use dentcurve::{
    count_indentations, curvature_profile, label_components, radius_at, resample_uniform, segment_regions,
    total_turning, BinaryMask, BoundaryTrace, Component, CurvatureProfile, IndentationReport, Point, Severity,
};

use args::{AnalyzeArgs, BaselineArgs, Cli, Command, PipelineArgs, ReportFormat, SeverityArgs, ShapeKind, SynthArgs, SynthFormat};
use error::CliError;
use input::Input;
use report::*;

/// Validated analysis settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisConfig {
    pub severity: Severity,
    pub lowpass: Option<usize>,
    pub resample: Option<usize>,
}

impl AnalysisConfig {
    pub fn from_args(severity: &SeverityArgs, pipeline: &PipelineArgs) -> Result<Self, CliError> {
        let severity = resolve_severity(severity)?
            .ok_or_else(|| CliError::Usage("one of --sigma or --rho-sigma is required".into()))?;
        if pipeline.resample.is_some_and(|n| n < 8) {
            return Err(CliError::Usage("--resample needs at least 8 points".into()));
        }
        Ok(Self {
            severity,
            lowpass: pipeline.lowpass,
            resample: pipeline.resample,
        })
    }
}

fn resolve_severity(args: &SeverityArgs) -> Result<Option<Severity>, CliError> {
    let severity = match (args.sigma, args.rho_sigma) {
        (Some(_), Some(_)) => return Err(CliError::Usage("--sigma and --rho-sigma are mutually exclusive".into())),
        (Some(s), None) => Severity::new(s),
        (None, Some(r)) => Severity::from_radius(r),
        (None, None) => return Ok(None),
    };
    severity.map(Some).map_err(|e| CliError::Usage(e.to_string()))
}

/// Where a command's output goes.
pub struct Output {
    pub bytes: Vec<u8>,
    pub path: Option<PathBuf>,
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Analyze(args) => run_analyze(&args),
        Command::Baseline(args) => run_baseline(&args),
        Command::Synth(args) => run_synth(&args),
    }
}

/// One analysed boundary.
pub struct BlobAnalysis {
    pub component: Option<usize>,
    pub area: Option<usize>,
    pub profile: CurvatureProfile,
    pub report: IndentationReport,
}

pub fn analyze_trace(trace: &BoundaryTrace, config: &AnalysisConfig) -> Result<(CurvatureProfile, IndentationReport), CliError> {
    let resampled;
    let trace = match config.resample {
        Some(n) => {
            resampled = resample_uniform(trace, n)?;
            &resampled
        }
        None => trace,
    };
    let profile = curvature_profile(trace, config.lowpass)?;
    let report = count_indentations(&profile, config.severity);
    Ok((profile, report))
}

enum Traced<'a> {
    Ok(&'a Component, BoundaryTrace),
    Skipped(usize, String),
}

fn trace_all<'a>(mask: &BinaryMask, components: &'a [Component]) -> Vec<Traced<'a>> {
    components
        .par_iter()
        .map(|c| match trace_component(mask, c) {
            Ok(trace) => Traced::Ok(c, trace),
            Err(e) => Traced::Skipped(c.id, e.to_string()),
        })
        .collect()
}

/// Runs the curvature pipeline on every blob. Output order follows
/// component ids regardless of scheduling.
pub fn analyze_input(input: &Input, config: &AnalysisConfig) -> Result<(Vec<BlobAnalysis>, Vec<SkippedDoc>), CliError> {
    match input {
        Input::Points(trace) => {
            let (profile, report) = analyze_trace(trace, config)?;
            Ok((
                vec![BlobAnalysis {
                    component: None,
                    area: None,
                    profile,
                    report,
                }],
                Vec::new(),
            ))
        }
        Input::Mask(mask) => {
            let components = label_components(mask);
            let mut skipped = Vec::new();
            let mut traced = Vec::new();
            for t in trace_all(mask, &components) {
                match t {
                    Traced::Ok(c, trace) => traced.push((c, trace)),
                    Traced::Skipped(component, reason) => skipped.push(SkippedDoc { component, reason }),
                }
            }
            if traced.is_empty() {
                return Err(CliError::Degenerate(format!(
                    "no traceable components ({} found)",
                    components.len()
                )));
            }
            let blobs = traced
                .par_iter()
                .map(|(c, trace)| {
                    analyze_trace(trace, config)
                        .map(|(profile, report)| BlobAnalysis {
                            component: Some(c.id),
                            area: Some(c.area()),
                            profile,
                            report,
                        })
                        .map_err(|e| match e {
                            CliError::Degenerate(msg) => CliError::Degenerate(format!("component {}: {msg}", c.id)),
                            other => other,
                        })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((blobs, skipped))
        }
    }
}

fn blob_doc(blob: &BlobAnalysis, emit_curvature: bool) -> BlobDoc {
    let profile = &blob.profile;
    let n = profile.len();
    let segmentation = segment_regions(profile);
    let mut sign = vec![1i8; n];
    for region in &segmentation.regions {
        for i in region.indices(n) {
            sign[i] = region.sign.as_i8();
        }
    }
    let mut indentation = vec![None; n];
    for (k, region) in blob.report.regions.iter().enumerate() {
        for i in region.indices(n) {
            indentation[i] = Some(k);
        }
    }
    let indentations = blob
        .report
        .regions
        .iter()
        .map(|r| RegionDoc {
            start: r.start,
            end: r.end,
            len: r.len,
            mean_kappa: F9(r.mean_kappa),
            peak_abs_kappa: F9(r.peak_abs_kappa),
            peak_index: r.peak_index,
            rho_at_peak: radius_at(profile, r.peak_index).ok().and_then(|rho| rho.pixels()).map(F9),
        })
        .collect();
    let boundary = profile
        .trace()
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| BoundaryPointDoc {
            x: F9(p.x),
            y: F9(p.y),
            sign: sign[i],
            indentation: indentation[i],
        })
        .collect();
    BlobDoc {
        component: blob.component,
        area: blob.area,
        n,
        count: blob.report.count,
        total_turning: F9(total_turning(profile)),
        indentations,
        boundary,
        kappa: emit_curvature.then(|| profile.kappa().iter().map(|&k| F9(k)).collect()),
    }
}

fn curvature_csv(blobs: &[BlobDoc], kappas: &[&CurvatureProfile]) -> Vec<u8> {
    let mut out = String::from("blob,component,index,x,y,kappa,sign,indentation\n");
    for (b, (doc, profile)) in blobs.iter().zip(kappas).enumerate() {
        let component = doc.component.map(|c| c.to_string()).unwrap_or_default();
        for (i, (pt, k)) in doc.boundary.iter().zip(profile.kappa()).enumerate() {
            let ind = pt.indentation.map(|v| v.to_string()).unwrap_or_default();
            let _ = writeln!(out, "{b},{component},{i},{},{},{},{},{ind}", pt.x, pt.y, F9(*k), pt.sign);
        }
    }
    out.into_bytes()
}

pub fn run_analyze(args: &AnalyzeArgs) -> Result<Output, CliError> {
    let config = AnalysisConfig::from_args(&args.severity, &args.pipeline)?;
    let input = input::load(&args.input)?;
    let (blobs, skipped) = analyze_input(&input, &config)?;
    for s in &skipped {
        eprintln!("skipping component {}: {}", s.component, s.reason);
    }
    let docs: Vec<BlobDoc> = blobs.iter().map(|b| blob_doc(b, args.emit_curvature)).collect();
    let bytes = match args.output.format {
        ReportFormat::Json => to_json(&AnalyzeReport {
            schema: SCHEMA_VERSION,
            command: "analyze",
            input: args.input.display().to_string(),
            config: AnalyzeConfigDoc {
                sigma: F9(config.severity.sigma()),
                rho_sigma: F9(config.severity.rho_sigma()),
                lowpass: config.lowpass,
                resample: config.resample,
            },
            blobs: docs,
            skipped,
        }),
        ReportFormat::Csv => {
            let profiles: Vec<&CurvatureProfile> = blobs.iter().map(|b| &b.profile).collect();
            curvature_csv(&docs, &profiles)
        }
    };
    Ok(Output {
        bytes,
        path: args.output.output.clone(),
    })
}

/// Rasterises a point-list boundary onto a canvas with a 2 pixel margin.
fn mask_from_points(trace: &BoundaryTrace) -> Result<BinaryMask, CliError> {
    let pts = trace.points();
    let (x0, y0) = pts.iter().fold((f64::INFINITY, f64::INFINITY), |(x, y), p| (x.min(p.x), y.min(p.y)));
    let shifted: Vec<Point> = pts.iter().map(|p| Point::new(p.x - x0 + 2.0, p.y - y0 + 2.0)).collect();
    let (x1, y1) = shifted.iter().fold((0.0f64, 0.0f64), |(x, y), p| (x.max(p.x), y.max(p.y)));
    let (w, h) = (x1.ceil() as usize + 3, y1.ceil() as usize + 3);
    if w.saturating_mul(h) > 1 << 28 {
        return Err(CliError::Input("point list too large to rasterise".into()));
    }
    Ok(synth::rasterize(&shifted, w, h)?)
}

pub fn run_baseline(args: &BaselineArgs) -> Result<Output, CliError> {
    let severity = resolve_severity(&args.severity)?;
    let config = if args.compare {
        Some(AnalysisConfig::from_args(&args.severity, &args.pipeline)?)
    } else {
        None
    };
    let input = input::load(&args.input)?;
    let mask = match &input {
        Input::Mask(mask) => mask.clone(),
        Input::Points(trace) => mask_from_points(trace)?,
    };
    let curvature = match &config {
        Some(config) => Some(analyze_input(&input, config)?.0),
        None => None,
    };

    let components = label_components(&mask);
    let mut skipped = Vec::new();
    let mut blobs = Vec::new();
    let results: Vec<_> = components
        .par_iter()
        .map(|c| (c, component_hull_gaps(&mask, c, args.min_gap_area)))
        .collect();
    for (c, result) in results {
        match result {
            Ok(report) => {
                let indentations = curvature.as_ref().and_then(|blobs| match &input {
                    Input::Points(_) => blobs.first().map(|b| b.report.count),
                    Input::Mask(_) => blobs.iter().find(|b| b.component == Some(c.id)).map(|b| b.report.count),
                });
                blobs.push(HullBlobDoc {
                    component: c.id,
                    area: c.area(),
                    gap_count: report.gap_count,
                    gap_areas: report.gap_areas,
                    hull_vertices: report.hull_vertices.iter().map(|p| PointDoc { x: F9(p.x), y: F9(p.y) }).collect(),
                    indentations,
                });
            }
            Err(e) => skipped.push(SkippedDoc {
                component: c.id,
                reason: e.to_string(),
            }),
        }
    }
    for s in &skipped {
        eprintln!("skipping component {}: {}", s.component, s.reason);
    }
    if blobs.is_empty() {
        return Err(CliError::Degenerate("no component has a non-degenerate hull".into()));
    }

    let bytes = match args.output.format {
        ReportFormat::Json => to_json(&BaselineReport {
            schema: SCHEMA_VERSION,
            command: "baseline",
            input: args.input.display().to_string(),
            config: BaselineConfigDoc {
                min_gap_area: args.min_gap_area,
                sigma: config.as_ref().and(severity).map(|s| F9(s.sigma())),
                lowpass: config.as_ref().and_then(|c| c.lowpass),
            },
            blobs,
            skipped,
        }),
        ReportFormat::Csv => {
            let mut out = String::from(if args.compare {
                "component,area,hull_gaps,indentations\n"
            } else {
                "component,area,hull_gaps\n"
            });
            for b in &blobs {
                let _ = write!(out, "{},{},{}", b.component, b.area, b.gap_count);
                if args.compare {
                    let _ = write!(out, ",{}", b.indentations.map(|v| v.to_string()).unwrap_or_default());
                }
                out.push('\n');
            }
            out.into_bytes()
        }
    };
    Ok(Output {
        bytes,
        path: args.output.output.clone(),
    })
}

fn synth_format(args: &SynthArgs) -> Result<SynthFormat, CliError> {
    if let Some(f) = args.format {
        return Ok(f);
    }
    match args.output.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
        Some("pgm") => Ok(SynthFormat::Pgm),
        Some("pbm") => Ok(SynthFormat::Pbm),
        Some("csv") => Ok(SynthFormat::Csv),
        _ => Err(CliError::Usage("cannot infer --format from the output extension".into())),
    }
}

fn points_csv(trace: &BoundaryTrace) -> Vec<u8> {
    let mut out = String::from("x,y\n");
    for p in trace.points() {
        let _ = writeln!(out, "{},{}", F9(p.x), F9(p.y));
    }
    out.into_bytes()
}

fn grid_csv(mask: &BinaryMask) -> Vec<u8> {
    let mut out = String::new();
    for y in 0..mask.height() {
        let row: Vec<&str> = (0..mask.width()).map(|x| if mask.get(x, y) { "1" } else { "0" }).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out.into_bytes()
}

pub fn run_synth(args: &SynthArgs) -> Result<Output, CliError> {
    let format = synth_format(args)?;
    if args.width == 0 || args.height == 0 {
        return Err(CliError::Usage("canvas dimensions must be positive".into()));
    }
    let center = Point::new(args.width as f64 / 2.0, args.height as f64 / 2.0);
    let radius = args.radius.unwrap_or(match args.shape {
        ShapeKind::Circle | ShapeKind::Rose => 100.0,
        ShapeKind::Pacman => 120.0,
        ShapeKind::Nested => 150.0,
    });
    let trace = match args.shape {
        ShapeKind::Circle => Some(synth::polar_trace(&PolarShapeSpec::new(radius, 0.0, 0, args.samples, center)?)?),
        ShapeKind::Rose => Some(synth::polar_trace(&PolarShapeSpec::new(
            radius,
            args.amplitude,
            args.lobes,
            args.samples,
            center,
        )?)?),
        ShapeKind::Nested => {
            let standard = NestedNotchSpec::standard(args.samples, center);
            let scale = radius / standard.radius;
            let spec = NestedNotchSpec {
                radius,
                bay_depth: standard.bay_depth * scale,
                ridge_height: standard.ridge_height * scale,
                ..standard
            };
            Some(spec.trace()?)
        }
        ShapeKind::Pacman => None,
    };
    let bytes = match (format, &trace) {
        (SynthFormat::Csv, Some(trace)) => points_csv(trace),
        _ => {
            let mask = match &trace {
                Some(trace) => synth::rasterize(trace.points(), args.width, args.height)?,
                None => synth::pacman_mask(args.width, args.height, center, radius, args.mouth)?,
            };
            match format {
                SynthFormat::Pgm => encode_pgm(&mask),
                SynthFormat::Pbm => encode_pbm(&mask),
                SynthFormat::Csv => grid_csv(&mask),
            }
        }
    };
    Ok(Output {
        bytes,
        path: Some(args.output.clone()),
    })
}

/// Writes `output` to its destination, or stdout.
pub fn emit(output: &Output) -> Result<(), CliError> {
    use std::io::Write;
    match &output.path {
        Some(path) => write_file(path, &output.bytes),
        None => std::io::stdout()
            .write_all(&output.bytes)
            .map_err(|e| CliError::Input(format!("stdout: {e}"))),
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}
