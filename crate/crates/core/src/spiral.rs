//! Deformed Cornu spirals in the Argand plane.
//!
//! For `θ = a + ib` and amplitude `R`:
//!
//! ```text
//! x(z) = R[(a + 1)C(z) − bS(z)]
//! y(z) = R[bC(z) + (a − 1)S(z)]
//! ```
//!
//! i.e. the constant matrix `R·[[a+1, −b], [b, a−1]]` applied to `(C, S)`.
//! `θ = 0` gives the standard spiral reflected in the real axis and
//! `a → ∞` recovers the standard spiral.

use std::f64::consts::PI;

use crate::error::{ensure_finite, Error, Result};
use crate::fresnel::{self, FresnelPair};
use crate::phase;
use crate::riccati::DeformationParameter;

/// Minimum speed `|(x', y')|` for curvature to be defined.
pub const MIN_SPEED: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpiralPoint {
    /// Curve parameter `z` (arclength of the standard spiral).
    pub arclength: f64,
    pub x: f64,
    pub y: f64,
    /// `x² + y²`, the diffraction intensity of the standard spiral.
    pub modulus_sq: f64,
}

impl SpiralPoint {
    fn new(arclength: f64, x: f64, y: f64) -> Self {
        Self {
            arclength,
            x,
            y,
            modulus_sq: x * x + y * y,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    pub points: Vec<SpiralPoint>,
    pub parameter: DeformationParameter,
}

/// The 2×2 map `R·[[a+1, −b], [b, a−1]]` taking `(C, S)` to `(x, y)`.
pub fn deformation_matrix(param: &DeformationParameter) -> [[f64; 2]; 2] {
    let DeformationParameter { a, b, scale } = *param;
    [
        [scale * (a + 1.0), -scale * b],
        [scale * b, scale * (a - 1.0)],
    ]
}

fn apply(m: &[[f64; 2]; 2], c: f64, s: f64) -> (f64, f64) {
    (m[0][0] * c + m[0][1] * s, m[1][0] * c + m[1][1] * s)
}

pub fn deformed_point(z: f64, param: &DeformationParameter) -> Result<SpiralPoint> {
    let FresnelPair { c, s } = fresnel::fresnel(z)?;
    let (x, y) = apply(&deformation_matrix(param), c, s);
    Ok(SpiralPoint::new(z, x, y))
}

/// The undeformed spiral `(C(z), S(z))`.
pub fn standard_point(z: f64) -> Result<SpiralPoint> {
    let FresnelPair { c, s } = fresnel::fresnel(z)?;
    Ok(SpiralPoint::new(z, c, s))
}

/// `count` samples at `z_i = (z_min·(n−1−i) + z_max·i)/(n−1)`.
///
/// The weighted form hits both endpoints exactly and makes a symmetric range
/// produce exactly negated abscissae.
pub fn sample_grid(z_min: f64, z_max: f64, count: usize) -> Result<Vec<f64>> {
    ensure_finite("z_min", z_min)?;
    ensure_finite("z_max", z_max)?;
    if count < 2 {
        return Err(Error::Argument(format!(
            "need at least 2 samples, got {count}"
        )));
    }
    if z_min >= z_max {
        return Err(Error::Argument(format!("empty range [{z_min}, {z_max}]")));
    }
    let n = (count - 1) as f64;
    let grid: Vec<f64> = (0..count)
        .map(|i| {
            let i = i as f64;
            (z_min * (n - i) + z_max * i) / n
        })
        .collect();
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Argument(format!(
            "{count} samples do not resolve [{z_min}, {z_max}]"
        )));
    }
    Ok(grid)
}

pub fn sample_spiral(
    param: &DeformationParameter,
    z_min: f64,
    z_max: f64,
    count: usize,
) -> Result<SampledCurve> {
    let points = sample_grid(z_min, z_max, count)?
        .into_iter()
        .map(|z| deformed_point(z, param))
        .collect::<Result<Vec<_>>>()?;
    Ok(SampledCurve {
        points,
        parameter: *param,
    })
}

/// Signed curvature `κ = (x'y'' − y'x'')/(x'² + y'²)^{3/2}`.
///
/// Derivatives come from `C' = cos(πz²/2)`, `S' = sin(πz²/2)`,
/// `C'' = −πz sin(πz²/2)`, `S'' = πz cos(πz²/2)`. For the standard spiral
/// `κ = πz`, so `ρ·s = 1/π`.
pub fn curvature(param: &DeformationParameter, z: f64) -> Result<f64> {
    ensure_finite("z", z)?;
    let (sin, cos) = phase::half_pi_sq(z, 0.0).sin_cos();
    let m = deformation_matrix(param);
    let (dx, dy) = apply(&m, cos, sin);
    let (ddx, ddy) = apply(&m, -PI * z * sin, PI * z * cos);
    let speed = dx.hypot(dy);
    if speed <= MIN_SPEED {
        return Err(Error::DegenerateCurve { z });
    }
    Ok((dx * ddy - dy * ddx) / (speed * speed * speed))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arm {
    /// `z → +∞`
    Positive,
    /// `z → −∞`
    Negative,
}

/// Limit point of the spiral: `±R((a + 1 − b)/2, (a − 1 + b)/2)`, the image of
/// `(C, S) → ±(½, ½)`.
pub fn asymptotic_focus(param: &DeformationParameter, arm: Arm) -> (f64, f64) {
    let (x, y) = apply(&deformation_matrix(param), 0.5, 0.5);
    match arm {
        Arm::Positive => (x, y),
        Arm::Negative => (-x, -y),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_at_theta_zero() {
        let p = DeformationParameter::new(0.0, 0.0);
        for z in [-2.0, 0.4, 1.7] {
            let d = deformed_point(z, &p).unwrap();
            let s = standard_point(z).unwrap();
            assert_eq!(d.x, s.x);
            assert_eq!(d.y, -s.y);
        }
    }

    #[test]
    fn large_a_scaling() {
        let p = DeformationParameter::new(10.0, 0.0);
        assert!((p.scale - 0.1).abs() < 1e-16);
        let z = 1.3;
        let d = deformed_point(z, &p).unwrap();
        let s = standard_point(z).unwrap();
        assert!((d.x - 1.1 * s.x).abs() < 1e-15);
        assert!((d.y - 0.9 * s.y).abs() < 1e-15);
    }

    #[test]
    fn unscaled_unit_theta_is_a_segment() {
        let p = DeformationParameter::new(1.0, 0.0).with_scale(1.0);
        let d = deformed_point(0.8, &p).unwrap();
        assert_eq!(d.y, 0.0);
        assert_eq!(d.x, 2.0 * fresnel::fresnel_c(0.8).unwrap());
    }

    #[test]
    fn modulus_is_consistent() {
        let p = DeformationParameter::new(-0.7, 1.9);
        let d = deformed_point(2.2, &p).unwrap();
        assert!((d.modulus_sq - (d.x * d.x + d.y * d.y)).abs() < 1e-14);
    }

    #[test]
    fn sampling_contract() {
        let p = DeformationParameter::new(0.3, -0.2);
        let curve = sample_spiral(&p, -5.0, 5.0, 1001).unwrap();
        assert_eq!(curve.points.len(), 1001);
        let mid = curve.points[500];
        assert_eq!((mid.arclength, mid.x, mid.y), (0.0, 0.0, 0.0));
        assert_eq!(curve.points[0].arclength, -5.0);
        assert_eq!(curve.points[1000].arclength, 5.0);
        for (lo, hi) in curve.points.iter().zip(curve.points.iter().rev()) {
            assert_eq!(lo.arclength, -hi.arclength);
            assert!((lo.x + hi.x).abs() < 1e-12 && (lo.y + hi.y).abs() < 1e-12);
        }
    }

    #[test]
    fn sampling_rejects_bad_input() {
        let p = DeformationParameter::new(1.0, 1.0);
        assert!(matches!(
            sample_spiral(&p, 0.0, 1.0, 1),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            sample_spiral(&p, 1.0, 0.0, 10),
            Err(Error::Argument(_))
        ));
        assert!(sample_spiral(&p, 0.0, f64::NAN, 10).is_err());
    }

    #[test]
    fn curvature_of_standard_limit() {
        let p = DeformationParameter::standard_limit();
        assert!((curvature(&p, 1.0).unwrap() - PI).abs() < 1e-6);
        assert_eq!(curvature(&p, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn curvature_of_reflected_spiral() {
        // Oracle: central differences of (C, −S), h = 1e-5.
        let z = 0.7;
        let h = 1e-5;
        let pt = |z: f64| {
            let s = standard_point(z).unwrap();
            (s.x, -s.y)
        };
        let (xm, ym) = pt(z - h);
        let (x0, y0) = pt(z);
        let (xp, yp) = pt(z + h);
        let (dx, dy) = ((xp - xm) / (2.0 * h), (yp - ym) / (2.0 * h));
        let (ddx, ddy) = (
            (xp - 2.0 * x0 + xm) / (h * h),
            (yp - 2.0 * y0 + ym) / (h * h),
        );
        let fd = (dx * ddy - dy * ddx) / (dx * dx + dy * dy).powf(1.5);
        assert!((fd + PI * z).abs() < 1e-4, "fd curvature {fd}");

        let k = curvature(&DeformationParameter::new(0.0, 0.0), z).unwrap();
        assert!((k + PI * z).abs() < 1e-12);
    }

    #[test]
    fn curvature_of_degenerate_segment() {
        // (1, 0) unscaled: (2C, 0) stalls where cos(πz²/2) = 0, i.e. z = 1
        let p = DeformationParameter::new(1.0, 0.0).with_scale(1.0);
        assert_eq!(curvature(&p, 1.0), Err(Error::DegenerateCurve { z: 1.0 }));
        assert_eq!(curvature(&p, 0.5).unwrap(), 0.0);
    }

    #[test]
    fn foci() {
        let (x, y) = asymptotic_focus(&DeformationParameter::standard_limit(), Arm::Positive);
        assert!((x - 0.5).abs() < 1e-11 && (y - 0.5).abs() < 1e-11);
        let (x, y) = asymptotic_focus(&DeformationParameter::new(0.0, 0.0), Arm::Positive);
        assert_eq!((x, y), (0.5, -0.5));
        let p = DeformationParameter::new(1.0, 1.0);
        let (fx, fy) = asymptotic_focus(&p, Arm::Positive);
        let far = deformed_point(200.0, &p).unwrap();
        assert!((far.x - fx).hypot(far.y - fy) < 0.002);
        let (nx, ny) = asymptotic_focus(&p, Arm::Negative);
        assert_eq!((nx, ny), (-fx, -fy));
    }
}
