//! Signed curvature of a closed trace from spectral derivatives.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geom::BoundaryTrace;
use crate::spectral::{apply_lowpass, forward, reconstruct_derivative, DerivativeOperator};

/// Squared speed below which the parameterisation is treated as degenerate.
pub const MIN_SPEED_SQ: f64 = 1e-12;

/// Curvature magnitude below which the radius is reported as unbounded.
pub const FLAT_KAPPA: f64 = 1e-12;

/// Per-sample signed curvature in 1/pixel. Positive where a
/// counter-clockwise boundary bends toward the interior.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureProfile {
    kappa: Vec<f64>,
    speed: Vec<f64>,
    trace: BoundaryTrace,
    lowpass: Option<usize>,
}

impl CurvatureProfile {
    pub fn kappa(&self) -> &[f64] {
        &self.kappa
    }

    /// |(x', y')| per sample, with unit spacing in the sample index.
    pub fn speed(&self) -> &[f64] {
        &self.speed
    }

    pub fn trace(&self) -> &BoundaryTrace {
        &self.trace
    }

    pub fn lowpass(&self) -> Option<usize> {
        self.lowpass
    }

    pub fn len(&self) -> usize {
        self.kappa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kappa.is_empty()
    }

    /// Builds a profile from precomputed values; used for testing the
    /// region logic in isolation. Speeds are set to 1.
    pub fn from_values(trace: BoundaryTrace, kappa: Vec<f64>) -> Result<Self> {
        if kappa.len() != trace.len() {
            return Err(Error::LengthMismatch {
                expected: trace.len(),
                found: kappa.len(),
            });
        }
        if let Some(index) = kappa.iter().position(|k| !k.is_finite()) {
            return Err(Error::NonFiniteCurvature { index });
        }
        let speed = vec![1.0; kappa.len()];
        Ok(Self {
            kappa,
            speed,
            trace,
            lowpass: None,
        })
    }
}

/// Computes `κ = (x'·y'' − y'·x'') / (x'² + y'²)^{3/2}` at every sample,
/// optionally after keeping only the first `lowpass` harmonics of both
/// coordinate channels.
pub fn curvature_profile(trace: &BoundaryTrace, lowpass: Option<usize>) -> Result<CurvatureProfile> {
    let n = trace.len();
    let mut curve = forward(trace);
    if let Some(keep) = lowpass {
        curve = apply_lowpass(&curve, keep)?;
    }
    let (dx, dy) = reconstruct_derivative(&curve, &DerivativeOperator::new(n, 1)?)?;
    let (ddx, ddy) = reconstruct_derivative(&curve, &DerivativeOperator::new(n, 2)?)?;

    let mut kappa = Vec::with_capacity(n);
    let mut speed = Vec::with_capacity(n);
    for i in 0..n {
        let speed_sq = dx[i] * dx[i] + dy[i] * dy[i];
        if speed_sq.is_nan() || speed_sq < MIN_SPEED_SQ {
            return Err(Error::DegenerateSpeed { index: i, speed_sq });
        }
        let k = (dx[i] * ddy[i] - dy[i] * ddx[i]) / (speed_sq * speed_sq.sqrt());
        if !k.is_finite() {
            return Err(Error::NonFiniteCurvature { index: i });
        }
        kappa.push(k);
        speed.push(speed_sq.sqrt());
    }
    Ok(CurvatureProfile {
        kappa,
        speed,
        trace: trace.clone(),
        lowpass,
    })
}

/// Radius of the osculating circle, `1/|κ|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadiusOfCurvature {
    Finite(f64),
    /// `|κ|` below [`FLAT_KAPPA`].
    Unbounded,
}

impl RadiusOfCurvature {
    pub fn from_kappa(kappa: f64) -> Self {
        if kappa.abs() < FLAT_KAPPA {
            Self::Unbounded
        } else {
            Self::Finite(1.0 / kappa.abs())
        }
    }

    pub fn pixels(self) -> Option<f64> {
        match self {
            Self::Finite(r) => Some(r),
            Self::Unbounded => None,
        }
    }
}

pub fn radius_at(profile: &CurvatureProfile, index: usize) -> Result<RadiusOfCurvature> {
    profile
        .kappa
        .get(index)
        .map(|&k| RadiusOfCurvature::from_kappa(k))
        .ok_or(Error::IndexOutOfRange {
            index,
            len: profile.len(),
        })
}

/// Speed-weighted curvature sum divided by 2π. Close to +1 for a simple
/// counter-clockwise curve.
pub fn total_turning(profile: &CurvatureProfile) -> f64 {
    profile
        .kappa
        .iter()
        .zip(&profile.speed)
        .map(|(k, s)| k * s)
        .sum::<f64>()
        / (2.0 * PI)
}
