//! Moore-neighbour contour following with Jacob's stopping criterion.

use std::collections::HashSet;

use super::{label_components, BinaryMask, Component};
use crate::error::{Error, Result};
use crate::geom::{BoundaryTrace, Point};

/// Moore neighbourhood, clockwise on screen (y pointing down), starting west.
const MOORE: [(i64, i64); 8] = [
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
];

fn direction_of(dx: i64, dy: i64) -> usize {
    MOORE
        .iter()
        .position(|&d| d == (dx, dy))
        .expect("backtrack pixel is always an 8-neighbour")
}

/// Traces the outer boundary of component `id` (as numbered by
/// [`label_components`]).
pub fn trace_boundary(mask: &BinaryMask, id: usize) -> Result<BoundaryTrace> {
    let components = label_components(mask);
    let component = components.get(id).ok_or(Error::UnknownComponent(id))?;
    trace_component(mask, component)
}

/// Traces the outer boundary of an already labelled component. Holes are
/// never visited. Pixel coordinates are used as the curve samples.
pub fn trace_component(mask: &BinaryMask, component: &Component) -> Result<BoundaryTrace> {
    let &(sx, sy) = component
        .pixels
        .first()
        .ok_or(Error::TraceTooShort { len: 0 })?;
    let start = (sx as i64, sy as i64);
    // The raster-first pixel always has background to its west.
    let initial = (start, 0usize);

    let mut points = vec![start];
    let mut seen = HashSet::new();
    seen.insert(initial);
    let (mut p, mut back) = initial;
    // an isolated pixel has no foreground neighbour
    while let Some(step) = (1..8)
        .map(|i| (back + i) % 8)
        .find(|&d| mask.get_signed(p.0 + MOORE[d].0, p.1 + MOORE[d].1))
    {
        let next = (p.0 + MOORE[step].0, p.1 + MOORE[step].1);
        let prev = MOORE[(step + 7) % 8];
        let back_pixel = (p.0 + prev.0, p.1 + prev.1);
        let state = (next, direction_of(back_pixel.0 - next.0, back_pixel.1 - next.1));
        if !seen.insert(state) {
            break;
        }
        points.push(next);
        (p, back) = state;
    }

    BoundaryTrace::new(
        points
            .into_iter()
            .map(|(x, y)| Point::new(x as f64, y as f64))
            .collect(),
    )
}
