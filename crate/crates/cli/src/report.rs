//! Report documents. Field order is fixed by declaration order and every
//! float is rounded to 9 significant digits, so identical inputs give
//! byte-identical output.

use serde::{Serialize, Serializer};

pub const SCHEMA_VERSION: u32 = 1;

/// Float serialised with 9 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F9(pub f64);

pub fn round_sig9(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.8e}").parse().unwrap_or(v)
}

impl Serialize for F9 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(round_sig9(self.0))
    }
}

impl std::fmt::Display for F9 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", round_sig9(self.0))
    }
}

#[derive(Debug, Serialize)]
pub struct AnalyzeConfigDoc {
    pub sigma: F9,
    pub rho_sigma: F9,
    pub lowpass: Option<usize>,
    pub resample: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct RegionDoc {
    pub start: usize,
    pub end: usize,
    pub len: usize,
    pub mean_kappa: F9,
    pub peak_abs_kappa: F9,
    pub peak_index: usize,
    pub rho_at_peak: Option<F9>,
}

#[derive(Debug, Serialize)]
pub struct BoundaryPointDoc {
    pub x: F9,
    pub y: F9,
    /// Curvature sign of the region containing the point, +1 or -1.
    pub sign: i8,
    /// Position of the containing indentation in `indentations`, if any.
    pub indentation: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct BlobDoc {
    pub component: Option<usize>,
    pub area: Option<usize>,
    pub n: usize,
    pub count: usize,
    pub total_turning: F9,
    pub indentations: Vec<RegionDoc>,
    pub boundary: Vec<BoundaryPointDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<Vec<F9>>,
}

#[derive(Debug, Serialize)]
pub struct SkippedDoc {
    pub component: usize,
    pub reason: String,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub schema: u32,
    pub command: &'static str,
    pub input: String,
    pub config: AnalyzeConfigDoc,
    pub blobs: Vec<BlobDoc>,
    pub skipped: Vec<SkippedDoc>,
}

#[derive(Debug, Serialize)]
pub struct BaselineConfigDoc {
    pub min_gap_area: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<F9>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lowpass: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct PointDoc {
    pub x: F9,
    pub y: F9,
}

#[derive(Debug, Serialize)]
pub struct HullBlobDoc {
    pub component: usize,
    pub area: usize,
    pub gap_count: usize,
    pub gap_areas: Vec<usize>,
    pub hull_vertices: Vec<PointDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub indentations: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct BaselineReport {
    pub schema: u32,
    pub command: &'static str,
    pub input: String,
    pub config: BaselineConfigDoc,
    pub blobs: Vec<HullBlobDoc>,
    pub skipped: Vec<SkippedDoc>,
}

pub fn to_json<T: Serialize>(doc: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(doc).expect("report documents always serialise");
    out.push(b'\n');
    out
}
