//! Synthetic shapes with known curvature.
//!
//! Star-shaped curves `r(θ)` sampled at `θ_t = 2πt/n` give analytic traces;
//! [`rasterize`] turns any closed trace into a mask for the raster pipeline.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::geom::{BoundaryTrace, Point};
use crate::raster::BinaryMask;

fn sample_angle(t: usize, n: usize) -> f64 {
    TAU * t as f64 / n as f64
}

/// Samples the star-shaped curve `center + r(θ)·(cos θ, sin θ)` at `n`
/// evenly spaced angles, counter-clockwise.
pub fn radial_trace(center: Point, n: usize, r: impl Fn(f64) -> f64) -> Result<BoundaryTrace> {
    BoundaryTrace::new(
        (0..n)
            .map(|t| {
                let th = sample_angle(t, n);
                let rho = r(th);
                Point::new(center.x + rho * th.cos(), center.y + rho * th.sin())
            })
            .collect(),
    )
}

/// Rose-like curve `r(θ) = R + a·cos(mθ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarShapeSpec {
    pub radius: f64,
    pub amplitude: f64,
    pub lobes: u32,
    pub samples: usize,
    pub center: Point,
}

impl PolarShapeSpec {
    pub fn new(radius: f64, amplitude: f64, lobes: u32, samples: usize, center: Point) -> Result<Self> {
        let spec = Self {
            radius,
            amplitude,
            lobes,
            samples,
            center,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.amplitude >= 0.0 && self.radius > self.amplitude && self.radius.is_finite()) {
            return Err(Error::InvalidShape(format!(
                "need radius > amplitude >= 0, got radius {} amplitude {}",
                self.radius, self.amplitude
            )));
        }
        if self.samples < 8 {
            return Err(Error::InvalidShape(format!("need at least 8 samples, got {}", self.samples)));
        }
        Ok(())
    }

    pub fn r(&self, theta: f64) -> f64 {
        self.radius + self.amplitude * (self.lobes as f64 * theta).cos()
    }

    fn dr(&self, theta: f64) -> f64 {
        let m = self.lobes as f64;
        -self.amplitude * m * (m * theta).sin()
    }

    fn ddr(&self, theta: f64) -> f64 {
        let m = self.lobes as f64;
        -self.amplitude * m * m * (m * theta).cos()
    }

    /// Analytic curvature at angle `theta`.
    pub fn curvature_at(&self, theta: f64) -> f64 {
        let (r, dr, ddr) = (self.r(theta), self.dr(theta), self.ddr(theta));
        (r * r + 2.0 * dr * dr - r * ddr) / (r * r + dr * dr).powf(1.5)
    }
}

pub fn polar_trace(spec: &PolarShapeSpec) -> Result<BoundaryTrace> {
    spec.validate()?;
    radial_trace(spec.center, spec.samples, |th| spec.r(th))
}

/// `κ(θ_t) = (r² + 2r'² − r·r'') / (r² + r'²)^{3/2}` at every sample angle.
pub fn polar_curvature_oracle(spec: &PolarShapeSpec) -> Vec<f64> {
    (0..spec.samples)
        .map(|t| spec.curvature_at(sample_angle(t, spec.samples)))
        .collect()
}

/// `r(θ) = R + Σ (a_k cos kθ + b_k sin kθ)`, a smooth star-shaped blob.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialHarmonics {
    pub radius: f64,
    /// `(k, a_k, b_k)` triples.
    pub terms: Vec<(u32, f64, f64)>,
    pub samples: usize,
    pub center: Point,
}

impl RadialHarmonics {
    pub fn r(&self, theta: f64) -> f64 {
        self.radius
            + self
                .terms
                .iter()
                .map(|&(k, a, b)| a * (k as f64 * theta).cos() + b * (k as f64 * theta).sin())
                .sum::<f64>()
    }

    pub fn trace(&self) -> Result<BoundaryTrace> {
        let total: f64 = self.terms.iter().map(|&(_, a, b)| a.abs() + b.abs()).sum();
        if self.radius.is_nan() || total.is_nan() || self.radius <= total {
            return Err(Error::InvalidShape(format!(
                "harmonic amplitudes {total} reach the base radius {}",
                self.radius
            )));
        }
        radial_trace(self.center, self.samples, |th| self.r(th))
    }
}

/// A disk with one wide bay whose floor is split by a low ridge into two
/// dents. The ridge stays inside the convex hull, so the hull sees one gap
/// where the curvature sees two indentations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NestedNotchSpec {
    pub radius: f64,
    pub bay_depth: f64,
    /// Gaussian width of the bay, radians.
    pub bay_width: f64,
    pub ridge_height: f64,
    /// Gaussian width of the ridge, radians.
    pub ridge_width: f64,
    /// Direction the bay opens toward, radians.
    pub facing: f64,
    pub samples: usize,
    pub center: Point,
}

impl NestedNotchSpec {
    /// Parameters used by the demos and tests, sized for a 512×512 canvas.
    pub fn standard(samples: usize, center: Point) -> Self {
        Self {
            radius: 150.0,
            bay_depth: 70.0,
            bay_width: 0.35,
            ridge_height: 22.0,
            ridge_width: 0.12,
            facing: 0.0,
            samples,
            center,
        }
    }

    pub fn r(&self, theta: f64) -> f64 {
        // angular distance to the bay axis, wrapped to (-π, π]
        let mut u = (theta - self.facing).rem_euclid(TAU);
        if u > PI {
            u -= TAU;
        }
        let g = |w: f64| (-(u * u) / (2.0 * w * w)).exp();
        self.radius - self.bay_depth * g(self.bay_width) + self.ridge_height * g(self.ridge_width)
    }

    pub fn trace(&self) -> Result<BoundaryTrace> {
        if !(self.radius > self.bay_depth && self.bay_depth > self.ridge_height && self.ridge_height >= 0.0) {
            return Err(Error::InvalidShape(
                "need radius > bay depth > ridge height >= 0".to_string(),
            ));
        }
        radial_trace(self.center, self.samples, |th| self.r(th))
    }
}

/// Filled disk with a wedge of half-angle `mouth` removed, opening toward +x.
pub fn pacman_mask(width: usize, height: usize, center: Point, radius: f64, mouth: f64) -> Result<BinaryMask> {
    check_canvas(
        center.x - radius,
        center.x + radius,
        center.y - radius,
        center.y + radius,
        width,
        height,
    )?;
    Ok(BinaryMask::from_fn(width, height, |x, y| {
        let (dx, dy) = (x as f64 - center.x, y as f64 - center.y);
        dx * dx + dy * dy <= radius * radius && dy.atan2(dx).abs() > mouth
    }))
}

fn check_canvas(x0: f64, x1: f64, y0: f64, y1: f64, width: usize, height: usize) -> Result<()> {
    if x0 < 0.0 || y0 < 0.0 || x1 > (width as f64 - 1.0) || y1 > (height as f64 - 1.0) {
        return Err(Error::OutOfCanvas { width, height });
    }
    Ok(())
}

/// Marks every pixel whose centre lies inside the closed polygon through
/// `points` (even-odd rule). Pixel `(x, y)` has its centre at `(x, y)`.
pub fn rasterize(points: &[Point], width: usize, height: usize) -> Result<BinaryMask> {
    if points.len() < 3 || width == 0 || height == 0 {
        return Err(Error::OutOfCanvas { width, height });
    }
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in points {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(p.y);
        y1 = y1.max(p.y);
    }
    check_canvas(x0, x1, y0, y1, width, height)?;

    let mut mask = BinaryMask::empty(width, height);
    let n = points.len();
    let mut crossings = Vec::new();
    for y in (y0.ceil() as usize)..=(y1.floor() as usize) {
        let yc = y as f64;
        crossings.clear();
        for i in 0..n {
            let (a, b) = (points[i], points[(i + 1) % n]);
            // half-open in y so shared vertices are counted once
            if (a.y <= yc) != (b.y <= yc) {
                crossings.push(a.x + (yc - a.y) / (b.y - a.y) * (b.x - a.x));
            }
        }
        crossings.sort_by(f64::total_cmp);
        for pair in crossings.chunks_exact(2) {
            let start = pair[0].ceil().max(0.0) as usize;
            let end = pair[1].min(width as f64 - 1.0);
            if end < start as f64 {
                continue;
            }
            for x in start..=end.floor() as usize {
                // strict interior at the right edge
                if (x as f64) < pair[1] {
                    mask.set(x, y, true);
                }
            }
        }
    }
    Ok(mask)
}
