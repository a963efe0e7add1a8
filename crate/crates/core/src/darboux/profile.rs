//! Sampled distortion profiles with explicit pole breaks.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::spiral::sample_grid;

use super::{darboux_distortion, POLE_GUARD};

/// `Δ(z; φ)` on a grid, split into branches at the poles of
/// `tan(πz²/2 + φ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistortionProfile {
    pub phase: f64,
    /// Retained `(z, Δ)` pairs in increasing `z`.
    pub samples: Vec<(f64, f64)>,
    /// Excluded `z` intervals around each pole inside the sampled range.
    pub pole_breaks: Vec<(f64, f64)>,
}

/// Index of the tangent branch containing `z`: poles sit where
/// `z² + 2φ/π` is an odd integer.
fn branch_index(z: f64, phi: f64) -> f64 {
    ((z * z + 2.0 * phi / PI - 1.0) / 2.0).floor()
}

/// Pole positions in `[z_min, z_max]` with the guard-band half width in `z`:
/// `|cos u| < g` ⇔ `|u − u_k| < asin g`, and `du/dz = πz`.
fn poles(phi: f64, z_min: f64, z_max: f64) -> Vec<(f64, f64)> {
    let shift = 2.0 * phi / PI;
    let first = branch_index(z_min, phi) + 1.0;
    let last = branch_index(z_max, phi);
    let mut out = Vec::new();
    let mut k = first;
    while k <= last {
        let square = 2.0 * k + 1.0 - shift;
        if square > 0.0 {
            let zp = square.sqrt();
            let half = POLE_GUARD.asin() / (PI * zp);
            out.push((zp - half, zp + half));
        }
        k += 1.0;
    }
    out
}

/// Sample `Δ(z; φ)` at `count` uniform points of `[z_min, z_max]`,
/// `z_min > 0`. Points in a pole guard band are dropped.
pub fn sample_distortion(
    phi: f64,
    z_min: f64,
    z_max: f64,
    count: usize,
) -> Result<DistortionProfile> {
    if !(z_min > 0.0) {
        return Err(Error::Argument(format!(
            "distortion profiles need z_min > 0, got {z_min}"
        )));
    }
    if !phi.is_finite() {
        return Err(Error::Argument(format!("phase must be finite, got {phi}")));
    }
    let grid = sample_grid(z_min, z_max, count)?;
    let pole_breaks = poles(phi, z_min, z_max);
    let mut samples = Vec::with_capacity(grid.len());
    for z in grid {
        if pole_breaks.iter().any(|&(lo, hi)| lo < z && z < hi) {
            continue;
        }
        match darboux_distortion(z, phi) {
            Ok(delta) if delta.is_finite() => samples.push((z, delta)),
            Ok(_) | Err(Error::Pole { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(DistortionProfile {
        phase: phi,
        samples,
        pole_breaks,
    })
}

impl DistortionProfile {
    /// `true` for every sample that starts a new branch, i.e. a pole lies
    /// between it and its predecessor. The first sample is not a break.
    pub fn break_flags(&self) -> Vec<bool> {
        let mut flags = Vec::with_capacity(self.samples.len());
        let mut previous = None;
        for &(z, _) in &self.samples {
            let b = branch_index(z, self.phase);
            flags.push(previous.is_some_and(|p| p != b));
            previous = Some(b);
        }
        flags
    }

    /// Contiguous runs of samples between poles.
    pub fn branches(&self) -> Vec<&[(f64, f64)]> {
        let flags = self.break_flags();
        let mut out = Vec::new();
        let mut start = 0;
        for (i, &flag) in flags.iter().enumerate() {
            if flag {
                out.push(&self.samples[start..i]);
                start = i;
            }
        }
        if start < self.samples.len() {
            out.push(&self.samples[start..]);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_zero_excludes_odd_squares() {
        // grid step 0.001 hits z = 1 exactly
        let profile = sample_distortion(0.0, 0.001, 2.9, 2900).unwrap();
        for &(z, d) in &profile.samples {
            let sq = z * z;
            let nearest_odd = 2.0 * ((sq - 1.0) / 2.0).round() + 1.0;
            assert!((sq - nearest_odd).abs() > 1e-11, "z = {z}");
            assert!(d.is_finite());
        }
        assert!(!profile.samples.iter().any(|&(z, _)| z == 1.0));
        // poles at √1, √3, √5, √7 in (0, 2.9]
        assert_eq!(profile.pole_breaks.len(), 4);
        assert_eq!(profile.branches().len(), 5);
    }

    #[test]
    fn no_sample_inside_a_break() {
        let profile = sample_distortion(PI / 4.0, 0.05, 4.0, 2000).unwrap();
        for &(z, _) in &profile.samples {
            assert!(profile
                .pole_breaks
                .iter()
                .all(|&(lo, hi)| z <= lo || z >= hi));
        }
    }

    #[test]
    fn break_flags_line_up_with_poles() {
        let profile = sample_distortion(-PI / 2.0, 0.1, 3.0, 500).unwrap();
        let flags = profile.break_flags();
        assert_eq!(
            flags.iter().filter(|&&f| f).count(),
            profile.pole_breaks.len()
        );
        for (i, &f) in flags.iter().enumerate() {
            if f {
                let (lo, hi) = (profile.samples[i - 1].0, profile.samples[i].0);
                assert!(profile.pole_breaks.iter().any(|&(a, b)| lo <= a && b <= hi));
            }
        }
    }

    #[test]
    fn rejects_origin() {
        assert!(sample_distortion(0.0, 0.0, 1.0, 10).is_err());
    }
}
