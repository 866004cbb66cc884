//! Curvature-sign regions and the severity rule for indentations.
//!
//! A profile is cut at its sign changes into regions of constant sign. The
//! profile is treated as cyclic: a run that straddles the start of the
//! trace forms a single region. A region counts as an indentation when its
//! mean curvature is negative and its peak `|κ|` exceeds the severity `σ`,
//! i.e. its tightest bend has a radius below `ρσ = 1/σ`.

use serde::Serialize;

use crate::curvature::CurvatureProfile;
use crate::error::{Error, Result};

/// Curvature threshold `σ` in 1/pixel.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct Severity(f64);

impl Severity {
    pub fn new(sigma: f64) -> Result<Self> {
        if sigma.is_finite() && sigma > 0.0 {
            Ok(Self(sigma))
        } else {
            Err(Error::InvalidSeverity(sigma))
        }
    }

    /// Severity whose radius of curvature cutoff is `rho_sigma` pixels.
    pub fn from_radius(rho_sigma: f64) -> Result<Self> {
        if rho_sigma.is_finite() && rho_sigma > 0.0 {
            Self::new(1.0 / rho_sigma)
        } else {
            Err(Error::InvalidSeverity(rho_sigma))
        }
    }

    pub fn sigma(self) -> f64 {
        self.0
    }

    pub fn rho_sigma(self) -> f64 {
        1.0 / self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Self::Positive => 1,
            Self::Negative => -1,
        }
    }
}

/// A maximal cyclic run of same-sign curvature. `start..=end` may wrap past
/// the end of the profile; indices refer to the original trace.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvatureRegion {
    pub start: usize,
    pub end: usize,
    pub len: usize,
    pub sign: Sign,
    pub mean_kappa: f64,
    pub peak_abs_kappa: f64,
    /// Sample index where `|κ|` peaks.
    pub peak_index: usize,
}

impl CurvatureRegion {
    pub fn indices(&self, n: usize) -> impl Iterator<Item = usize> {
        let start = self.start;
        (0..self.len).map(move |i| (start + i) % n)
    }

    pub fn contains(&self, index: usize, n: usize) -> bool {
        (index + n - self.start) % n < self.len
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Segmentation {
    pub regions: Vec<CurvatureRegion>,
    /// Set when every sample is exactly zero; a single positive region is
    /// returned by convention.
    pub degenerate: bool,
}

/// Resolves each sample to a sign. Exact zeros take the sign of the previous
/// non-zero sample; leading zeros take the first non-zero sign.
pub fn sample_signs(kappa: &[f64]) -> Option<Vec<Sign>> {
    let sign_of = |k: f64| if k < 0.0 { Sign::Negative } else { Sign::Positive };
    let first = kappa.iter().copied().find(|&k| k != 0.0)?;
    let mut current = sign_of(first);
    Some(
        kappa
            .iter()
            .map(|&k| {
                if k != 0.0 {
                    current = sign_of(k);
                }
                current
            })
            .collect(),
    )
}

pub fn segment_regions(profile: &CurvatureProfile) -> Segmentation {
    let kappa = profile.kappa();
    let n = kappa.len();
    let Some(signs) = sample_signs(kappa) else {
        let region = CurvatureRegion {
            start: 0,
            end: n.saturating_sub(1),
            len: n,
            sign: Sign::Positive,
            mean_kappa: 0.0,
            peak_abs_kappa: 0.0,
            peak_index: 0,
        };
        return Segmentation {
            regions: vec![region],
            degenerate: true,
        };
    };

    // First index whose sign differs from its cyclic predecessor.
    let origin = (0..n).find(|&i| signs[i] != signs[(i + n - 1) % n]);
    let Some(origin) = origin else {
        return Segmentation {
            regions: vec![summarize(kappa, 0, n, signs[0])],
            degenerate: false,
        };
    };

    let mut regions = Vec::new();
    let mut run_start = origin;
    let mut run_len = 0;
    for offset in 0..n {
        let i = (origin + offset) % n;
        if run_len > 0 && signs[i] != signs[run_start] {
            regions.push(summarize(kappa, run_start, run_len, signs[run_start]));
            run_start = i;
            run_len = 0;
        }
        run_len += 1;
    }
    regions.push(summarize(kappa, run_start, run_len, signs[run_start]));
    Segmentation {
        regions,
        degenerate: false,
    }
}

fn summarize(kappa: &[f64], start: usize, len: usize, sign: Sign) -> CurvatureRegion {
    let n = kappa.len();
    let mut sum = 0.0;
    let mut peak_abs_kappa = f64::NEG_INFINITY;
    let mut peak_index = start;
    for i in (0..len).map(|o| (start + o) % n) {
        sum += kappa[i];
        if kappa[i].abs() > peak_abs_kappa {
            peak_abs_kappa = kappa[i].abs();
            peak_index = i;
        }
    }
    CurvatureRegion {
        start,
        end: (start + len - 1) % n,
        len,
        sign,
        mean_kappa: sum / len as f64,
        peak_abs_kappa,
        peak_index,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndentationReport {
    pub count: usize,
    pub regions: Vec<CurvatureRegion>,
    pub sigma: f64,
    pub n: usize,
}

/// Regions with negative mean curvature whose peak `|κ|` exceeds `σ`.
pub fn count_indentations(profile: &CurvatureProfile, severity: Severity) -> IndentationReport {
    let sigma = severity.sigma();
    let regions: Vec<CurvatureRegion> = segment_regions(profile)
        .regions
        .into_iter()
        .filter(|r| r.mean_kappa < 0.0 && r.peak_abs_kappa > sigma)
        .collect();
    IndentationReport {
        count: regions.len(),
        regions,
        sigma,
        n: profile.len(),
    }
}
