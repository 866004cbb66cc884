//! Frequency-domain representation of a closed curve and spectral
//! differentiation.
//!
//! The curve is parameterised by sample index `t` in `[0, n)`. Derivatives
//! are taken by multiplying each bin by `(i·ω)^order` with `ω = 2πk/n` and
//! transforming back. Bins `k` and `n - k` carry the positive and negative
//! frequency of harmonic `k`; for even `n` the Nyquist bin `n/2` is zeroed in
//! both derivative operators.

use std::f64::consts::PI;

use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::geom::{BoundaryTrace, Point};

/// DFT coefficients of the x and y coordinate channels.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralCurve {
    n: usize,
    fx: Vec<Complex64>,
    fy: Vec<Complex64>,
}

impl SpectralCurve {
    /// Transforms two equally long real channels.
    pub fn from_channels(xs: &[f64], ys: &[f64]) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::LengthMismatch {
                expected: xs.len(),
                found: ys.len(),
            });
        }
        Ok(Self {
            n: xs.len(),
            fx: dft(xs),
            fy: dft(ys),
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn fx(&self) -> &[Complex64] {
        &self.fx
    }

    pub fn fy(&self) -> &[Complex64] {
        &self.fy
    }

    /// Inverse transform of both channels, real parts only.
    pub fn channels(&self) -> (Vec<f64>, Vec<f64>) {
        (idft_real(&self.fx), idft_real(&self.fy))
    }
}

pub fn forward(trace: &BoundaryTrace) -> SpectralCurve {
    SpectralCurve::from_channels(&trace.xs(), &trace.ys()).expect("trace channels have equal length")
}

/// Reconstructs the sampled curve.
pub fn inverse(curve: &SpectralCurve) -> Vec<Point> {
    let (xs, ys) = curve.channels();
    xs.into_iter().zip(ys).map(|(x, y)| Point::new(x, y)).collect()
}

/// Harmonic number carried by bin `k` of an `n`-point transform.
pub fn harmonic_of_bin(k: usize, n: usize) -> usize {
    k.min(n - k)
}

/// Multipliers implementing `d^order/dt^order` on an `n`-bin spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeOperator {
    order: u8,
    coefficients: Vec<Complex64>,
}

impl DerivativeOperator {
    pub fn new(n: usize, order: u8) -> Result<Self> {
        if !(1..=2).contains(&order) {
            return Err(Error::UnsupportedOrder(order));
        }
        if n < 2 {
            return Err(Error::TraceTooShort { len: n });
        }
        let mut coefficients = vec![Complex64::new(0.0, 0.0); n];
        let step = 2.0 * PI / n as f64;
        // harmonics 1..=ceil(n/2)-1; DC and (for even n) Nyquist stay zero
        let highest = n.div_ceil(2) - 1;
        for k in 1..=highest {
            let omega = step * k as f64;
            let (pos, neg) = match order {
                1 => (Complex64::new(0.0, omega), Complex64::new(0.0, -omega)),
                _ => (Complex64::new(-omega * omega, 0.0), Complex64::new(-omega * omega, 0.0)),
            };
            coefficients[k] = pos;
            coefficients[n - k] = neg;
        }
        Ok(Self { order, coefficients })
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

/// Ideal low-pass: zeroes every bin whose harmonic number exceeds `keep`.
/// DC is always kept and conjugate pairs are treated together, so the
/// filtered curve stays real.
pub fn apply_lowpass(curve: &SpectralCurve, keep: usize) -> Result<SpectralCurve> {
    let n = curve.n;
    if keep > n / 2 {
        return Err(Error::LowpassOutOfRange { keep, max: n / 2 });
    }
    let mut out = curve.clone();
    for k in 0..n {
        if harmonic_of_bin(k, n) > keep {
            out.fx[k] = Complex64::new(0.0, 0.0);
            out.fy[k] = Complex64::new(0.0, 0.0);
        }
    }
    Ok(out)
}

/// Applies `op` bin-wise to both channels and returns the real parts of the
/// inverse transforms.
pub fn reconstruct_derivative(curve: &SpectralCurve, op: &DerivativeOperator) -> Result<(Vec<f64>, Vec<f64>)> {
    if op.len() != curve.n {
        return Err(Error::LengthMismatch {
            expected: curve.n,
            found: op.len(),
        });
    }
    let apply = |spectrum: &[Complex64]| -> Vec<f64> {
        let product: Vec<Complex64> = spectrum
            .iter()
            .zip(&op.coefficients)
            .map(|(a, b)| a * b)
            .collect();
        idft_real(&product)
    };
    Ok((apply(&curve.fx), apply(&curve.fy)))
}

/// Resamples a closed trace to `n` points evenly spaced in chord length
/// along its polygon, using linear interpolation. The first point is kept.
pub fn resample_uniform(trace: &BoundaryTrace, n: usize) -> Result<BoundaryTrace> {
    let pts = trace.points();
    let m = pts.len();
    let seg_len: Vec<f64> = (0..m)
        .map(|i| {
            let (a, b) = (pts[i], pts[(i + 1) % m]);
            (b.x - a.x).hypot(b.y - a.y)
        })
        .collect();
    let total: f64 = seg_len.iter().sum();
    let mut out = Vec::with_capacity(n);
    let mut seg = 0;
    let mut seg_start = 0.0;
    for j in 0..n {
        let target = total * j as f64 / n as f64;
        while seg + 1 < m && seg_start + seg_len[seg] <= target {
            seg_start += seg_len[seg];
            seg += 1;
        }
        let (a, b) = (pts[seg], pts[(seg + 1) % m]);
        let u = if seg_len[seg] > 0.0 {
            ((target - seg_start) / seg_len[seg]).clamp(0.0, 1.0)
        } else {
            0.0
        };
        out.push(Point::new(a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)));
    }
    BoundaryTrace::new(out)
}

fn dft(values: &[f64]) -> Vec<Complex64> {
    let mut buf: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    if !buf.is_empty() {
        FftPlanner::new().plan_fft_forward(buf.len()).process(&mut buf);
    }
    buf
}

fn idft_real(spectrum: &[Complex64]) -> Vec<f64> {
    let n = spectrum.len();
    let mut buf = spectrum.to_vec();
    if n > 0 {
        FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
    }
    let scale = 1.0 / n as f64;
    buf.into_iter().map(|c| c.re * scale).collect()
}
