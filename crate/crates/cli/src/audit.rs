//! Audit of the printed closed-form ρ₁₃ against the numeric linear-response
//! oracle, plus a consistency check of the printed zero-order coherences.

use std::fmt::Write as _;

use num_complex::Complex64;
use sgcloc_core::perturbative::ZeroOrderCoherences;
use sgcloc_core::{
    build_liouvillian, compare_analytic_numeric, standing_wave_rabi, steady_state, zero_order_coherences,
    GridSpec, PerturbativeComparison, StandingWaveSpec, SystemParams,
};

use crate::preset::FigurePreset;

/// Zero-order deviations above this are flagged in the report.
pub const ZERO_ORDER_FLAG: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct AuditPoint {
    pub label: String,
    pub params: SystemParams,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditRow {
    pub point: AuditPoint,
    pub comparison: Result<PerturbativeComparison, String>,
    /// max |printed − solved| over ρ₁₂, ρ₁₃, ρ₂₃ at Ω_p = 0.
    pub zero_order_dev: Result<f64, String>,
}

impl AuditRow {
    pub fn flagged(&self) -> bool {
        self.zero_order_dev.as_ref().map_or(true, |&d| !(d <= ZERO_ORDER_FLAG))
    }
}

/// `n` cell-centred positions across `[min, max]`: for n = 5 on [−½, ½],
/// −0.4 … 0.4.
pub fn sample_positions(min: f64, max: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| min + (max - min) * (k as f64 + 0.5) / n as f64).collect()
}

/// An `n × n` cell-centred sub-grid of `grid`, each point with its local Ω_c.
pub fn sample_points(
    label: &str,
    base: &SystemParams,
    wave: &StandingWaveSpec,
    grid: &GridSpec,
    n: usize,
) -> Vec<AuditPoint> {
    let xs = sample_positions(grid.x_min, grid.x_max, n);
    let ys = sample_positions(grid.y_min, grid.y_max, n);
    let mut out = Vec::with_capacity(n * n);
    for &y in &ys {
        for &x in &xs {
            out.push(AuditPoint {
                label: format!("{label}[x={x} y={y}]"),
                params: base.with_omega_c(standing_wave_rabi(x, y, wave)),
            });
        }
    }
    out
}

/// [`sample_points`] over the preset's default domain.
pub fn preset_points(preset: &FigurePreset, n: usize) -> Vec<AuditPoint> {
    sample_points(preset.name, &preset.params(), &preset.wave(), &GridSpec::default(), n)
}

/// Ω_c = 0, p = 0 at a few probe detunings; both routes must coincide here.
pub fn two_level_points() -> Vec<AuditPoint> {
    [0.0, 1.0, -5.0, 20.0, 40.0]
        .into_iter()
        .map(|delta_p| AuditPoint {
            label: format!("two-level(dp={delta_p})"),
            params: SystemParams { delta_p, omega_c: 0.0, ..Default::default() },
        })
        .collect()
}

fn zero_order_deviation(params: &SystemParams) -> Result<f64, String> {
    let unprobed = params.with_omega_p(0.0);
    let ZeroOrderCoherences { rho12_0, rho13_0, rho23_0 } =
        zero_order_coherences(&unprobed).map_err(|e| e.to_string())?;
    let rho = steady_state(&build_liouvillian(&unprobed)).map_err(|e| e.to_string())?.rho;
    let d = |a: Complex64, b: Complex64| (a - b).norm();
    Ok(d(rho12_0, rho.get(0, 1)).max(d(rho13_0, rho.get(0, 2))).max(d(rho23_0, rho.get(1, 2))))
}

pub fn audit_rows(points: &[AuditPoint]) -> Vec<AuditRow> {
    points
        .iter()
        .map(|point| AuditRow {
            comparison: compare_analytic_numeric(&point.params).map_err(|e| e.to_string()),
            zero_order_dev: zero_order_deviation(&point.params),
            point: point.clone(),
        })
        .collect()
}

/// Largest finite rel_error and the row it came from.
pub fn max_rel_error(rows: &[AuditRow]) -> Option<(f64, &AuditRow)> {
    rows.iter()
        .filter_map(|r| r.comparison.as_ref().ok().map(|c| (c.rel_error, r)))
        .filter(|(e, _)| e.is_finite())
        .max_by(|a, b| a.0.total_cmp(&b.0))
}

const HEADER: &str = "\
# first-order rho13: printed closed form (analytic) vs linear-response solve (numeric)
# zero_order_dev: max |printed - solved| of rho12, rho13, rho23 at omega_p = 0; FLAG above 1e-8
label,delta_p,delta_c,theta,omega_c,analytic_re,analytic_im,numeric_re,numeric_im,abs_error,rel_error,zero_order_dev,flag
";

/// The audit table. An empty point list gives the header alone.
pub fn export_audit(points: &[AuditPoint]) -> String {
    render(&audit_rows(points))
}

pub fn render(rows: &[AuditRow]) -> String {
    let mut s = String::from(HEADER);
    if rows.is_empty() {
        return s;
    }
    let e = |v: f64| format!("{v:.6e}");
    for r in rows {
        let p = &r.point.params;
        write!(s, "{},{},{},{},{}", r.point.label, e(p.delta_p), e(p.delta_c), e(p.theta), e(p.omega_c)).unwrap();
        match &r.comparison {
            Ok(c) => write!(
                s,
                ",{},{},{},{},{},{}",
                e(c.analytic.re),
                e(c.analytic.im),
                e(c.numeric.re),
                e(c.numeric.im),
                e(c.abs_error),
                e(c.rel_error)
            )
            .unwrap(),
            Err(msg) => write!(s, ",error: {},,,,,", msg.replace(',', ";")).unwrap(),
        }
        match &r.zero_order_dev {
            Ok(d) => write!(s, ",{}", e(*d)).unwrap(),
            Err(msg) => write!(s, ",error: {}", msg.replace(',', ";")).unwrap(),
        }
        s.push_str(if r.flagged() { ",FLAG\n" } else { ",\n" });
    }
    let flagged = rows.iter().filter(|r| r.flagged()).count();
    match max_rel_error(rows) {
        Some((m, r)) => writeln!(s, "# max rel_error = {} at {}", e(m), r.point.label).unwrap(),
        None => writeln!(s, "# max rel_error = n/a").unwrap(),
    }
    writeln!(s, "# zero-order flags: {flagged} of {}", rows.len()).unwrap();
    s
}
