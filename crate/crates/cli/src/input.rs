//! Input autodetection: Netpbm masks, 0/1 CSV grids and `x,y` point lists.

use std::path::Path;

use dentcurve::{decode_mask, BinaryMask, BoundaryTrace, MaskFormat, Point};

use crate::error::CliError;

#[derive(Debug)]
pub enum Input {
    Mask(BinaryMask),
    Points(BoundaryTrace),
}

pub fn load(path: &Path) -> Result<Input, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse(&bytes, path).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse(bytes: &[u8], path: &Path) -> Result<Input, CliError> {
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    let format = match ext.as_deref() {
        Some("pbm" | "pgm") => MaskFormat::Netpbm,
        Some("csv") => MaskFormat::CsvGrid,
        _ => MaskFormat::detect(bytes),
    };
    if format == MaskFormat::CsvGrid && is_point_list(bytes) {
        return parse_points(bytes).map(Input::Points);
    }
    decode_mask(bytes, format)
        .map(Input::Mask)
        .map_err(|e| CliError::Input(e.to_string()))
}

fn first_line(bytes: &[u8]) -> Option<String> {
    let text = String::from_utf8_lossy(bytes);
    text.lines()
        .map(|l| l.chars().filter(|c| !c.is_whitespace()).collect::<String>())
        .find(|l| !l.is_empty())
}

fn is_point_list(bytes: &[u8]) -> bool {
    first_line(bytes).is_some_and(|l| l.eq_ignore_ascii_case("x,y"))
}

fn parse_points(bytes: &[u8]) -> Result<BoundaryTrace, CliError> {
    let text = std::str::from_utf8(bytes).map_err(|_| CliError::Input("point list is not UTF-8".into()))?;
    let mut points = Vec::new();
    for (lineno, line) in text.lines().enumerate().skip_while(|(_, l)| l.trim().is_empty()).skip(1) {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = || CliError::Input(format!("line {}: expected \"x,y\", got {line:?}", lineno + 1));
        let (x, y) = line.split_once(',').ok_or_else(bad)?;
        let x: f64 = x.trim().parse().map_err(|_| bad())?;
        let y: f64 = y.trim().parse().map_err(|_| bad())?;
        if !(x.is_finite() && y.is_finite()) {
            return Err(bad());
        }
        points.push(Point::new(x, y));
    }
    BoundaryTrace::new(points).map_err(CliError::from)
}
