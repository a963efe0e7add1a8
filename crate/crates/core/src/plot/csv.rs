//! CSV tables. Numbers use Rust's shortest round-trip formatting, so
//! parsing a cell gives back the exact `f64` and identical inputs give
//! identical bytes.

use std::fmt::Write as _;

use crate::darboux::DistortionProfile;
use crate::spiral::{SampledCurve, SpiralPoint};

pub const SPIRAL_HEADER: &str = "z,x,y,modulus_sq";
pub const DISTORTION_HEADER: &str = "z,delta,break";
pub const COMPARISON_HEADER: &str =
    "z,partner_x,partner_y,deformed_x,deformed_y,standard_x,standard_y,deviation";
pub const RESIDUAL_HEADER: &str = "equation,z,residual";

pub fn spiral_csv(curve: &SampledCurve) -> String {
    let mut out = String::with_capacity(64 * curve.points.len());
    out.push_str(SPIRAL_HEADER);
    out.push('\n');
    for p in &curve.points {
        let _ = writeln!(out, "{},{},{},{}", p.arclength, p.x, p.y, p.modulus_sq);
    }
    out
}

/// Unclipped `Δ` values; `break = 1` marks a row that starts a new branch
/// (a pole lies between it and the previous row).
pub fn distortion_csv(profile: &DistortionProfile) -> String {
    let mut out = String::with_capacity(48 * profile.samples.len());
    out.push_str(DISTORTION_HEADER);
    out.push('\n');
    for (&(z, delta), flag) in profile.samples.iter().zip(profile.break_flags()) {
        let _ = writeln!(out, "{},{},{}", z, delta, u8::from(flag));
    }
    out
}

/// Row-aligned partner, deformed and standard curves; `deviation` is the
/// sup-norm distance `max(|Δx|, |Δy|)` between deformed and standard.
pub fn comparison_csv(
    partner: &[SpiralPoint],
    deformed: &[SpiralPoint],
    standard: &[SpiralPoint],
) -> String {
    let mut out = String::with_capacity(160 * standard.len());
    out.push_str(COMPARISON_HEADER);
    out.push('\n');
    for ((p, d), s) in partner.iter().zip(deformed).zip(standard) {
        let deviation = (d.x - s.x).abs().max((d.y - s.y).abs());
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            s.arclength, p.x, p.y, d.x, d.y, s.x, s.y, deviation
        );
    }
    out
}

pub fn residual_csv(reports: &[crate::darboux::ResidualReport]) -> String {
    let mut out = String::new();
    out.push_str(RESIDUAL_HEADER);
    out.push('\n');
    for report in reports {
        for &(z, r) in &report.samples {
            let _ = writeln!(out, "{},{},{}", report.equation.label(), z, r);
        }
    }
    out
}

/// Parse a numeric table written by this module; the header is returned
/// separately.
pub fn parse_numeric(text: &str) -> Result<(Vec<String>, Vec<Vec<f64>>), String> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| "empty table".to_string())?
        .split(',')
        .map(str::to_string)
        .collect::<Vec<_>>();
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let row = line
            .split(',')
            .map(|cell| {
                cell.parse::<f64>()
                    .map_err(|e| format!("row {}: {cell:?}: {e}", i + 1))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != header.len() {
            return Err(format!(
                "row {} has {} cells, expected {}",
                i + 1,
                row.len(),
                header.len()
            ));
        }
        rows.push(row);
    }
    Ok((header, rows))
}
