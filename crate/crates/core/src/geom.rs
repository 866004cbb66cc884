//! Points and closed boundary traces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shortest trace accepted for spectral analysis.
pub const MIN_TRACE_LEN: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

/// Twice the signed area of the closed polygon through `points`.
/// Positive for counter-clockwise loops.
pub fn doubled_signed_area(points: &[Point]) -> f64 {
    let n = points.len();
    (0..n)
        .map(|i| {
            let p = points[i];
            let q = points[(i + 1) % n];
            p.x * q.y - q.x * p.y
        })
        .sum()
}

/// An ordered closed loop of boundary samples.
///
/// Construction removes consecutive duplicates (including a repeated
/// closing point), rejects loops shorter than [`MIN_TRACE_LEN`] and
/// reverses clockwise input so the shoelace area is always positive. The
/// first point is kept in place when reversing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryTrace {
    points: Vec<Point>,
}

impl BoundaryTrace {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let mut points = points;
        points.dedup();
        while points.len() > 1 && points.first() == points.last() {
            points.pop();
        }
        if points.len() < MIN_TRACE_LEN {
            return Err(Error::TraceTooShort { len: points.len() });
        }
        let area = doubled_signed_area(&points);
        if area == 0.0 || area.is_nan() {
            return Err(Error::ZeroArea);
        }
        if area < 0.0 {
            points[1..].reverse();
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Shoelace area; always positive.
    pub fn signed_area(&self) -> f64 {
        0.5 * doubled_signed_area(&self.points)
    }

    pub fn xs(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.x).collect()
    }

    pub fn ys(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.y).collect()
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }
}
