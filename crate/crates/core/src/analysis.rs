//! Peak, quadrant and symmetry statistics of a localization map.
//!
//! Quadrants follow the usual convention: I = (+,+), II = (−,+), III = (−,−),
//! IV = (+,−). Nodes on either axis belong to no quadrant.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::field::LocalizationMap;

/// Default peak threshold as a fraction of the global max |value|.
pub const DEFAULT_PROMINENCE_FRACTION: f64 = 0.05;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("quadrant {0} has no non-zero node")]
    EmptyQuadrant(Quadrant),
    #[error("grid is not reflection-symmetric: {0}")]
    GridNotSymmetric(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quadrant {
    I,
    II,
    III,
    IV,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::I, Quadrant::II, Quadrant::III, Quadrant::IV];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn of(x: f64, y: f64) -> Option<Quadrant> {
        match (x.partial_cmp(&0.0)?, y.partial_cmp(&0.0)?) {
            (std::cmp::Ordering::Greater, std::cmp::Ordering::Greater) => Some(Quadrant::I),
            (std::cmp::Ordering::Less, std::cmp::Ordering::Greater) => Some(Quadrant::II),
            (std::cmp::Ordering::Less, std::cmp::Ordering::Less) => Some(Quadrant::III),
            (std::cmp::Ordering::Greater, std::cmp::Ordering::Less) => Some(Quadrant::IV),
            _ => None,
        }
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Quadrant::I => "I",
            Quadrant::II => "II",
            Quadrant::III => "III",
            Quadrant::IV => "IV",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeakKind {
    Max,
    Min,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Peak {
    pub i: usize,
    pub j: usize,
    pub x: f64,
    pub y: f64,
    pub value: f64,
    pub kind: PeakKind,
}

impl Peak {
    pub fn quadrant(&self) -> Option<Quadrant> {
        Quadrant::of(self.x, self.y)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PeakSet {
    pub peaks: Vec<Peak>,
    pub threshold: f64,
}

/// Finds the peaks of the signed field.
///
/// A peak is an interior node (all 8 neighbours present) that is a strict
/// local maximum with value ≥ `prominence`, or a strict local minimum with
/// value ≤ −`prominence`; that is, an extremum pointing away from zero. A
/// plateau of exactly equal values counts once if it touches no border node
/// and every node around it is strictly on the same side; it is reported at
/// its first node in storage order (smallest `j`, then smallest `i`).
pub fn find_extrema(map: &LocalizationMap, prominence: f64) -> PeakSet {
    let nx = map.grid.nx;
    let ny = map.grid.ny;
    let mut visited = vec![false; nx * ny];
    let mut peaks = Vec::new();

    for j in 1..ny.saturating_sub(1) {
        for i in 1..nx.saturating_sub(1) {
            let k = j * nx + i;
            if visited[k] {
                continue;
            }
            let v = map.values[k];
            let kind = if v >= prominence && v > 0.0 {
                PeakKind::Max
            } else if v <= -prominence && v < 0.0 {
                PeakKind::Min
            } else {
                continue;
            };
            let beyond = |w: f64| match kind {
                PeakKind::Max => w < v,
                PeakKind::Min => w > v,
            };
            // flood the equal-valued component containing (i, j)
            let mut queue = VecDeque::from([(i, j)]);
            visited[k] = true;
            let mut is_peak = true;
            while let Some((ci, cj)) = queue.pop_front() {
                if ci == 0 || cj == 0 || ci + 1 == nx || cj + 1 == ny {
                    is_peak = false;
                    continue;
                }
                for dj in -1isize..=1 {
                    for di in -1isize..=1 {
                        if di == 0 && dj == 0 {
                            continue;
                        }
                        let ni = (ci as isize + di) as usize;
                        let nj = (cj as isize + dj) as usize;
                        let nk = nj * nx + ni;
                        let w = map.values[nk];
                        if w == v {
                            if !visited[nk] {
                                visited[nk] = true;
                                queue.push_back((ni, nj));
                            }
                        } else if !beyond(w) {
                            is_peak = false;
                        }
                    }
                }
            }
            if is_peak {
                peaks.push(Peak {
                    i,
                    j,
                    x: map.grid.x(i),
                    y: map.grid.y(j),
                    value: v,
                    kind,
                });
            }
        }
    }
    PeakSet { peaks, threshold: prominence }
}

/// [`find_extrema`] at `fraction` × global max |value|.
pub fn find_extrema_relative(map: &LocalizationMap, fraction: f64) -> PeakSet {
    find_extrema(map, fraction * map.max_abs())
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadrantSummary {
    /// Σ|value| over the nodes strictly inside each quadrant.
    pub mass: [f64; 4],
    /// Share of the top-decile |value| nodes lying in each quadrant.
    pub top_decile_fraction: [f64; 4],
    pub max_abs: [f64; 4],
}

impl QuadrantSummary {
    pub fn get_max(&self, q: Quadrant) -> f64 {
        self.max_abs[q.index()]
    }
}

/// Per-quadrant statistics of |value|.
///
/// The top decile is the ⌈N/10⌉ nodes of largest |value| over the whole
/// grid, ties broken by storage order.
pub fn quadrant_distribution(map: &LocalizationMap) -> QuadrantSummary {
    let nx = map.grid.nx;
    let quadrant_of = |k: usize| Quadrant::of(map.grid.x(k % nx), map.grid.y(k / nx));
    let mut mass = [0.0; 4];
    let mut max_abs = [0.0f64; 4];
    for (k, v) in map.values.iter().enumerate() {
        if let Some(q) = quadrant_of(k) {
            mass[q.index()] += v.abs();
            max_abs[q.index()] = max_abs[q.index()].max(v.abs());
        }
    }

    let n = map.values.len();
    let top = n.div_ceil(10);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| map.values[b].abs().total_cmp(&map.values[a].abs()).then(a.cmp(&b)));
    let mut counts = [0usize; 4];
    for &k in order.iter().take(top) {
        if let Some(q) = quadrant_of(k) {
            counts[q.index()] += 1;
        }
    }
    let top_decile_fraction = if top == 0 {
        [0.0; 4]
    } else {
        counts.map(|c| c as f64 / top as f64)
    };
    QuadrantSummary { mass, top_decile_fraction, max_abs }
}

/// max|value| in `q_num` over max|value| in `q_den`.
pub fn peak_ratio(map: &LocalizationMap, q_num: Quadrant, q_den: Quadrant) -> Result<f64, AnalysisError> {
    let s = quadrant_distribution(map);
    let den = s.get_max(q_den);
    if !(den > 0.0) {
        return Err(AnalysisError::EmptyQuadrant(q_den));
    }
    Ok(s.get_max(q_num) / den)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryMetrics {
    /// max |map(x, y) − map(y, x)|
    pub swap_error: f64,
    /// max |map(x, y) − map(−x, −y)|
    pub point_error: f64,
}

/// Requires a square grid symmetric about both axes.
pub fn symmetry_metrics(map: &LocalizationMap) -> Result<SymmetryMetrics, AnalysisError> {
    let g = &map.grid;
    let tol = 1e-12 * (g.x_max - g.x_min).abs().max(1.0);
    if (g.x_min + g.x_max).abs() > tol || (g.y_min + g.y_max).abs() > tol {
        return Err(AnalysisError::GridNotSymmetric("range not centred on the origin"));
    }
    if g.nx != g.ny || (g.x_min - g.y_min).abs() > tol || (g.x_max - g.y_max).abs() > tol {
        return Err(AnalysisError::GridNotSymmetric("x and y axes differ"));
    }
    let n = g.nx;
    let mut swap_error: f64 = 0.0;
    let mut point_error: f64 = 0.0;
    for j in 0..n {
        for i in 0..n {
            let v = map.value(i, j);
            swap_error = swap_error.max((v - map.value(j, i)).abs());
            point_error = point_error.max((v - map.value(n - 1 - i, n - 1 - j)).abs());
        }
    }
    Ok(SymmetryMetrics { swap_error, point_error })
}
