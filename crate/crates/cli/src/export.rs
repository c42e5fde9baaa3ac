//! CSV, binary PPM (P6) and peak-list writers.
//!
//! All numbers are written through Rust's own float formatting, which is
//! locale-independent, so identical maps give identical bytes.

use std::io::{self, BufRead, Write};

use sgcloc_core::{GridSpec, LocalizationMap, PeakKind, PeakSet, Quadrant, QuadrantSummary};
use thiserror::Error;

pub const CSV_HEADER: &str = "x,y,im_chi";

/// Nine significant digits in scientific notation.
fn sig9(v: f64) -> String {
    format!("{v:.8e}")
}

/// Writes `x,y,im_chi` rows with `y` in the outer loop, starting at
/// `(x_min, y_min)`.
pub fn write_csv<W: Write>(map: &LocalizationMap, mut sink: W) -> io::Result<()> {
    let g = &map.grid;
    let mut buf = String::with_capacity(48 * (g.nx * g.ny + 1));
    buf.push_str(CSV_HEADER);
    buf.push('\n');
    for j in 0..g.ny {
        let y = sig9(g.y(j));
        for i in 0..g.nx {
            buf.push_str(&sig9(g.x(i)));
            buf.push(',');
            buf.push_str(&y);
            buf.push(',');
            buf.push_str(&sig9(map.value(i, j)));
            buf.push('\n');
        }
    }
    sink.write_all(buf.as_bytes())?;
    sink.flush()
}

#[derive(Debug, Error)]
pub enum CsvError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CsvRow {
    pub x: f64,
    pub y: f64,
    pub value: f64,
}

pub fn read_csv<R: BufRead>(source: R) -> Result<Vec<CsvRow>, CsvError> {
    let mut rows = Vec::new();
    for (n, line) in source.lines().enumerate() {
        let line = line?;
        let lineno = n + 1;
        if lineno == 1 {
            if line.trim() != CSV_HEADER {
                return Err(CsvError::Format { line: 1, message: format!("expected header `{CSV_HEADER}`") });
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(CsvError::Format { line: lineno, message: format!("expected 3 fields, found {}", fields.len()) });
        }
        let num = |s: &str| {
            s.trim().parse::<f64>().map_err(|_| CsvError::Format { line: lineno, message: format!("invalid number `{s}`") })
        };
        rows.push(CsvRow { x: num(fields[0])?, y: num(fields[1])?, value: num(fields[2])? });
    }
    Ok(rows)
}

/// Rebuilds the grid extent and values from rows in the documented order.
pub fn map_from_rows(rows: &[CsvRow]) -> Option<(GridSpec, Vec<f64>)> {
    let first = rows.first()?;
    let nx = rows.iter().take_while(|r| r.y == first.y).count();
    if nx == 0 || !rows.len().is_multiple_of(nx) {
        return None;
    }
    let ny = rows.len() / nx;
    let last = rows.last()?;
    let grid = GridSpec { x_min: first.x, x_max: last.x, y_min: first.y, y_max: last.y, nx, ny };
    Some((grid, rows.iter().map(|r| r.value).collect()))
}

/// Diverging blue–white–red colour for `v` on a ramp spanning `[-scale, scale]`.
pub fn ramp(v: f64, scale: f64) -> [u8; 3] {
    if !(scale > 0.0) {
        return [255, 255, 255];
    }
    let t = (v / scale).clamp(-1.0, 1.0);
    let fade = |u: f64| (255.0 * (1.0 - u)).round() as u8;
    if t < 0.0 {
        let c = fade(-t);
        [c, c, 255]
    } else {
        let c = fade(t);
        [255, c, c]
    }
}

/// Writes an `nx × ny` P6 image with the top row at `y_max`.
///
/// The ramp is symmetric, `[-s, s]` with `s` = max |value|, so white is
/// exactly zero. The signed min and max are recorded in a comment line
/// just before the maxval.
pub fn write_heatmap<W: Write>(map: &LocalizationMap, mut sink: W) -> io::Result<()> {
    let (nx, ny) = (map.grid.nx, map.grid.ny);
    let min = map.values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = map.values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (min, max) = if map.values.is_empty() { (0.0, 0.0) } else { (min, max) };
    let scale = min.abs().max(max.abs());

    let mut out = format!("P6\n{nx} {ny}\n# im_chi min={} max={}\n255\n", sig9(min), sig9(max)).into_bytes();
    out.reserve(3 * nx * ny);
    for j in (0..ny).rev() {
        for i in 0..nx {
            out.extend_from_slice(&ramp(map.value(i, j), scale));
        }
    }
    sink.write_all(&out)?;
    sink.flush()
}

/// Peak list and quadrant table as plain text.
pub fn write_peaks<W: Write>(peaks: &PeakSet, summary: &QuadrantSummary, mut sink: W) -> io::Result<()> {
    writeln!(sink, "# threshold {}", sig9(peaks.threshold))?;
    writeln!(sink, "kind,x,y,value,quadrant")?;
    for p in &peaks.peaks {
        let kind = match p.kind {
            PeakKind::Max => "max",
            PeakKind::Min => "min",
        };
        let q = p.quadrant().map_or_else(|| "-".to_string(), |q| q.to_string());
        writeln!(sink, "{kind},{},{},{},{q}", sig9(p.x), sig9(p.y), sig9(p.value))?;
    }
    writeln!(sink)?;
    writeln!(sink, "quadrant,mass,top_decile_fraction,max_abs")?;
    for q in Quadrant::ALL {
        let k = q.index();
        writeln!(
            sink,
            "{q},{},{},{}",
            sig9(summary.mass[k]),
            sig9(summary.top_decile_fraction[k]),
            sig9(summary.max_abs[k])
        )?;
    }
    sink.flush()
}
