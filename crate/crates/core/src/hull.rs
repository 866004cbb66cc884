//! Convex-hull gap counting, the baseline that treats every region between
//! a blob and its convex hull as an indentation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::raster::{label_components, BinaryMask, Component};

/// Default area (pixels) below which hull gaps are treated as
/// rasterisation slivers.
pub const DEFAULT_MIN_GAP_AREA: usize = 4;

fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Andrew's monotone chain. Returns the hull counter-clockwise (positive
/// shoelace area) without collinear vertices, starting at the lowest-x,
/// lowest-y point.
pub fn convex_hull(points: &[Point]) -> Result<Vec<Point>> {
    if points.len() < 3 {
        return Err(Error::DegenerateHull);
    }
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();

    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    if hull.len() < 3 {
        return Err(Error::DegenerateHull);
    }
    Ok(hull)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HullGapReport {
    pub gap_count: usize,
    pub gap_areas: Vec<usize>,
    pub hull_vertices: Vec<Point>,
}

/// Counts 8-connected regions of hull-minus-blob pixels with at least
/// `min_gap_area` pixels, for component `id` of `mask`.
pub fn hull_gap_count(mask: &BinaryMask, id: usize, min_gap_area: usize) -> Result<HullGapReport> {
    let components = label_components(mask);
    let component = components.get(id).ok_or(Error::UnknownComponent(id))?;
    component_hull_gaps(mask, component, min_gap_area)
}

pub fn component_hull_gaps(mask: &BinaryMask, component: &Component, min_gap_area: usize) -> Result<HullGapReport> {
    let (w, h) = (mask.width(), mask.height());
    let pixels: Vec<Point> = component
        .pixels
        .iter()
        .map(|&(x, y)| Point::new(x as f64, y as f64))
        .collect();
    let hull = convex_hull(&pixels)?;

    let mut blob = vec![false; w * h];
    for &(x, y) in &component.pixels {
        blob[y * w + x] = true;
    }
    let filled = fill_convex_polygon(&hull, w, h);
    let gaps = BinaryMask::from_fn(w, h, |x, y| filled.get(x, y) && !blob[y * w + x]);

    let gap_areas: Vec<usize> = label_components(&gaps)
        .iter()
        .map(Component::area)
        .filter(|&a| a >= min_gap_area)
        .collect();
    Ok(HullGapReport {
        gap_count: gap_areas.len(),
        gap_areas,
        hull_vertices: hull,
    })
}

/// Scanline fill of a convex polygon given in pixel-centre coordinates.
/// A pixel is set when its centre lies inside or on the polygon, so
/// every vertex and edge pixel of the source blob is covered.
pub fn fill_convex_polygon(hull: &[Point], width: usize, height: usize) -> BinaryMask {
    const EPS: f64 = 1e-9;
    let mut mask = BinaryMask::empty(width, height);
    let m = hull.len();
    let (ymin, ymax) = hull
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p.y), hi.max(p.y)));
    let y0 = ((ymin - EPS).ceil() as i64).max(0);
    let y1 = ((ymax + EPS).floor() as i64).min(height as i64 - 1);
    for y in y0..=y1 {
        let yf = y as f64;
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..m {
            let (a, b) = (hull[i], hull[(i + 1) % m]);
            let (ya, yb) = (a.y.min(b.y), a.y.max(b.y));
            if yf < ya - EPS || yf > yb + EPS {
                continue;
            }
            if (b.y - a.y).abs() < EPS {
                lo = lo.min(a.x.min(b.x));
                hi = hi.max(a.x.max(b.x));
            } else {
                let t = ((yf - a.y) / (b.y - a.y)).clamp(0.0, 1.0);
                let x = a.x + t * (b.x - a.x);
                lo = lo.min(x);
                hi = hi.max(x);
            }
        }
        if lo > hi {
            continue;
        }
        let x0 = ((lo - EPS).ceil() as i64).max(0);
        let x1 = ((hi + EPS).floor() as i64).min(width as i64 - 1);
        for x in x0..=x1 {
            mask.set(x as usize, y as usize, true);
        }
    }
    mask
}
