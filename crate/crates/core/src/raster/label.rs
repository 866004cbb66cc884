use std::collections::VecDeque;

use super::BinaryMask;

/// One 8-connected foreground blob. `pixels` are sorted in raster order,
/// so `pixels[0]` is the topmost-leftmost pixel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub id: usize,
    pub pixels: Vec<(usize, usize)>,
}

impl Component {
    pub fn area(&self) -> usize {
        self.pixels.len()
    }
}

pub(crate) const NEIGHBORS_8: [(i64, i64); 8] = [
    (-1, -1),
    (0, -1),
    (1, -1),
    (-1, 0),
    (1, 0),
    (-1, 1),
    (0, 1),
    (1, 1),
];

/// Labels 8-connected foreground components. Ids follow raster-scan
/// discovery order starting at 0.
pub fn label_components(mask: &BinaryMask) -> Vec<Component> {
    let (w, h) = (mask.width(), mask.height());
    let mut seen = vec![false; w * h];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();

    for y in 0..h {
        for x in 0..w {
            if !mask.get(x, y) || seen[y * w + x] {
                continue;
            }
            let mut pixels = Vec::new();
            seen[y * w + x] = true;
            queue.push_back((x, y));
            while let Some((px, py)) = queue.pop_front() {
                pixels.push((px, py));
                for (dx, dy) in NEIGHBORS_8 {
                    let (nx, ny) = (px as i64 + dx, py as i64 + dy);
                    if mask.get_signed(nx, ny) {
                        let idx = ny as usize * w + nx as usize;
                        if !seen[idx] {
                            seen[idx] = true;
                            queue.push_back((nx as usize, ny as usize));
                        }
                    }
                }
            }
            pixels.sort_unstable_by_key(|&(px, py)| (py, px));
            components.push(Component {
                id: components.len(),
                pixels,
            });
        }
    }
    components
}
