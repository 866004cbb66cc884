//! Binary masks: decoding, connected-component labelling and outer
//! boundary tracing.

mod decode;
mod label;
mod trace;

pub use decode::{decode_mask, encode_pbm, encode_pgm, MaskFormat};
pub use label::{label_components, Component};
pub use trace::{trace_boundary, trace_component};

use crate::error::{DecodeError, Result};

/// Rectangular foreground/background bitmap stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMask {
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

impl BinaryMask {
    pub fn new(width: usize, height: usize, bits: Vec<bool>) -> Result<Self, DecodeError> {
        if width == 0 || height == 0 {
            return Err(DecodeError::new(0, format!("zero mask dimension {width}x{height}")));
        }
        if bits.len() != width * height {
            return Err(DecodeError::new(
                0,
                format!("expected {} pixels, got {}", width * height, bits.len()),
            ));
        }
        Ok(Self { width, height, bits })
    }

    /// All-background mask. Panics on a zero dimension.
    pub fn empty(width: usize, height: usize) -> Self {
        assert!(width > 0 && height > 0, "mask dimensions must be positive");
        Self {
            width,
            height,
            bits: vec![false; width * height],
        }
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut mask = Self::empty(width, height);
        for y in 0..height {
            for x in 0..width {
                mask.bits[y * width + x] = f(x, y);
            }
        }
        mask
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.width + x]
    }

    /// Like [`get`](Self::get) but treats everything outside the image as background.
    pub fn get_signed(&self, x: i64, y: i64) -> bool {
        x >= 0
            && y >= 0
            && (x as usize) < self.width
            && (y as usize) < self.height
            && self.get(x as usize, y as usize)
    }

    pub fn set(&mut self, x: usize, y: usize, value: bool) {
        self.bits[y * self.width + x] = value;
    }

    pub fn foreground_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}
