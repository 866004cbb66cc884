//! Netpbm (P1/P2/P4/P5) and 0/1 CSV grid decoding.

use super::BinaryMask;
use crate::error::DecodeError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaskFormat {
    /// Plain or raw PBM/PGM; the magic number selects the variant.
    Netpbm,
    /// Comma separated rows of `0`/`1`.
    CsvGrid,
}

impl MaskFormat {
    /// Guess the format from the leading bytes.
    pub fn detect(bytes: &[u8]) -> Self {
        match bytes {
            [b'P', b'1' | b'2' | b'4' | b'5', ..] => Self::Netpbm,
            _ => Self::CsvGrid,
        }
    }
}

pub fn decode_mask(bytes: &[u8], format: MaskFormat) -> Result<BinaryMask, DecodeError> {
    match format {
        MaskFormat::Netpbm => decode_netpbm(bytes),
        MaskFormat::CsvGrid => decode_csv_grid(bytes),
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        Self { bytes, pos: 0 }
    }

    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    /// Reads an unsigned decimal integer after optional whitespace/comments.
    fn uint(&mut self, what: &str) -> Result<(usize, u64), DecodeError> {
        self.skip_space_and_comments();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(b - b'0')))
                .ok_or_else(|| DecodeError::new(start, format!("{what} overflows")))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(match self.bytes.get(self.pos) {
                None => DecodeError::new(self.pos, format!("truncated input, expected {what}")),
                Some(_) => DecodeError::new(self.pos, format!("expected {what}")),
            });
        }
        Ok((start, value))
    }

    fn dimension(&mut self, what: &str) -> Result<usize, DecodeError> {
        let (offset, value) = self.uint(what)?;
        if value == 0 {
            return Err(DecodeError::new(offset, format!("zero {what}")));
        }
        usize::try_from(value)
            .ok()
            .filter(|&v| v <= 1 << 20)
            .ok_or_else(|| DecodeError::new(offset, format!("{what} {value} too large")))
    }
}

fn decode_netpbm(bytes: &[u8]) -> Result<BinaryMask, DecodeError> {
    let kind = match bytes {
        [b'P', k @ (b'1' | b'2' | b'4' | b'5'), ..] => *k,
        _ => return Err(DecodeError::new(0, "expected magic P1, P2, P4 or P5")),
    };
    let mut cur = Cursor::new(bytes);
    cur.pos = 2;
    let width = cur.dimension("width")?;
    let height = cur.dimension("height")?;
    let maxval = if matches!(kind, b'2' | b'5') {
        let (offset, v) = cur.uint("maxval")?;
        if v == 0 || v > 65535 {
            return Err(DecodeError::new(offset, format!("maxval {v} out of range 1..=65535")));
        }
        v
    } else {
        1
    };
    let count = width * height;
    let mut bits = Vec::with_capacity(count);

    match kind {
        b'1' => {
            while bits.len() < count {
                cur.skip_space_and_comments();
                match bytes.get(cur.pos) {
                    Some(b'0') => bits.push(false),
                    Some(b'1') => bits.push(true),
                    Some(_) => return Err(DecodeError::new(cur.pos, "expected PBM bit 0 or 1")),
                    None => return Err(DecodeError::new(cur.pos, "truncated PBM payload")),
                }
                cur.pos += 1;
            }
        }
        b'2' => {
            while bits.len() < count {
                let (offset, v) = cur.uint("gray value")?;
                if v > maxval {
                    return Err(DecodeError::new(offset, format!("gray value {v} exceeds maxval {maxval}")));
                }
                bits.push(v > 0);
            }
        }
        b'4' | b'5' => {
            // exactly one whitespace byte separates the header from raw data
            match bytes.get(cur.pos) {
                Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
                Some(_) => return Err(DecodeError::new(cur.pos, "expected whitespace after header")),
                None => return Err(DecodeError::new(cur.pos, "truncated header")),
            }
            let payload = &bytes[cur.pos..];
            if kind == b'4' {
                let stride = width.div_ceil(8);
                if payload.len() < stride * height {
                    return Err(DecodeError::new(bytes.len(), "truncated PBM raster"));
                }
                for y in 0..height {
                    let row = &payload[y * stride..(y + 1) * stride];
                    bits.extend((0..width).map(|x| row[x / 8] & (0x80 >> (x % 8)) != 0));
                }
            } else {
                let sample = if maxval < 256 { 1 } else { 2 };
                if payload.len() < count * sample {
                    return Err(DecodeError::new(bytes.len(), "truncated PGM raster"));
                }
                if sample == 1 {
                    bits.extend(payload[..count].iter().map(|&v| v > 0));
                } else {
                    bits.extend(payload[..2 * count].chunks_exact(2).map(|c| c[0] != 0 || c[1] != 0));
                }
            }
        }
        _ => unreachable!(),
    }
    BinaryMask::new(width, height, bits)
}

fn decode_csv_grid(bytes: &[u8]) -> Result<BinaryMask, DecodeError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| DecodeError::new(e.valid_up_to(), "CSV grid is not valid UTF-8"))?;
    let mut width = 0;
    let mut height = 0;
    let mut bits = Vec::new();
    let mut line_start = 0;
    for line in text.split_inclusive('\n') {
        let offset = line_start;
        line_start += line.len();
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut row_len = 0;
        let mut field_start = offset;
        for field in line.trim_end_matches(['\n', '\r']).split(',') {
            let lead = field.len() - field.trim_start().len();
            match field.trim() {
                "0" => bits.push(false),
                "1" => bits.push(true),
                _ => return Err(DecodeError::new(field_start + lead, "expected 0 or 1 in CSV grid")),
            }
            row_len += 1;
            field_start += field.len() + 1;
        }
        if height == 0 {
            width = row_len;
        } else if row_len != width {
            return Err(DecodeError::new(
                offset,
                format!("row {height} has {row_len} columns, expected {width}"),
            ));
        }
        height += 1;
    }
    if height == 0 {
        return Err(DecodeError::new(0, "empty CSV grid"));
    }
    BinaryMask::new(width, height, bits)
}

/// Raw PGM (P5) with foreground written as 255.
pub fn encode_pgm(mask: &BinaryMask) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", mask.width(), mask.height()).into_bytes();
    out.extend(mask.bits().iter().map(|&b| if b { 255u8 } else { 0 }));
    out
}

/// Raw PBM (P4), rows padded to whole bytes.
pub fn encode_pbm(mask: &BinaryMask) -> Vec<u8> {
    let mut out = format!("P4\n{} {}\n", mask.width(), mask.height()).into_bytes();
    let stride = mask.width().div_ceil(8);
    for y in 0..mask.height() {
        let mut row = vec![0u8; stride];
        for x in 0..mask.width() {
            if mask.get(x, y) {
                row[x / 8] |= 0x80 >> (x % 8);
            }
        }
        out.extend(row);
    }
    out
}
