//! Factorization of `v'' − v'/z + π²z² v = 0` and its parametric partners.
//!
//! With `u = πz²/2 + φ` and `T = tan u`,
//!
//! ```text
//! A⁺f = f'/√z + π√z T f
//! A⁻g = (g/√z)' − π√z T g
//! ```
//!
//! `A⁻A⁺ = z⁻¹ (d² − z⁻¹ d + π²z²)`, so `A⁻A⁺` annihilates every solution of
//! the reduced equation. The reversed product is
//! `A⁺A⁻ = z⁻¹ (d² − z⁻¹ d + π²z² + Δ(z; φ))` with the Darboux distortion
//!
//! ```text
//! Δ(z; φ) = −2π²z² + 3/(4z²) − π T − 2π²z² T²
//! ```
//!
//! Its kernel is spanned by `Ψ̃`, built from `A⁻Ψ̃ = Φ̃ = b₁ cos u`.

pub mod profile;
pub mod residual;

use std::f64::consts::{PI, SQRT_2};

use crate::error::{Error, Result};
use crate::fresnel;
use crate::phase;

pub use profile::{sample_distortion, DistortionProfile};
pub use residual::{
    ode_residual, pole_avoiding_grid, standard_reports, theta_grid, Differentiable, Equation,
    FiniteDifference, FresnelCombination, Jet, JetFn, Oscillation, ResidualReport,
};

/// Guard on `|cos(πz²/2 + φ)|` below which a tangent pole is reported.
pub const POLE_GUARD: f64 = 1e-10;

/// Guard on the denominators of the simplified distortion forms.
pub const SPECIAL_POLE_GUARD: f64 = 1e-12;

/// `(√z, tan u, cos u)` after the domain and pole checks shared by every
/// operator.
fn frame(z: f64, phi: f64) -> Result<(f64, f64, f64)> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain {
            name: "z",
            value: z,
            reason: "operators are defined for z > 0",
        });
    }
    let (s, c) = phase::half_pi_sq(z, phi).sin_cos();
    if c.abs() < POLE_GUARD {
        return Err(Error::Pole { z });
    }
    Ok((z.sqrt(), s / c, c))
}

/// `A⁺f = f'/√z + π√z tan(πz²/2 + φ) f`.
pub fn apply_a_plus<F: Differentiable + ?Sized>(f: &F, z: f64, phi: f64) -> Result<f64> {
    let (rz, t, _) = frame(z, phi)?;
    let j = f.jet(z)?;
    Ok(j.d(1)? / rz + PI * rz * t * j.d(0)?)
}

/// `A⁻g = (g/√z)' − π√z tan(πz²/2 + φ) g`.
pub fn apply_a_minus<F: Differentiable + ?Sized>(g: &F, z: f64, phi: f64) -> Result<f64> {
    let (rz, t, _) = frame(z, phi)?;
    let j = g.jet(z)?;
    Ok(j.d(1)? / rz - j.d(0)? / (2.0 * z * rz) - PI * rz * t * j.d(0)?)
}

/// `A⁺f` as a function, so operators compose: its jet carries one order
/// fewer than `f`'s (at most first order).
#[derive(Debug, Clone, Copy)]
pub struct APlus<F> {
    pub inner: F,
    pub phi: f64,
}

impl<F: Differentiable> Differentiable for APlus<F> {
    fn jet(&self, z: f64) -> Result<Jet> {
        let (rz, t, _) = frame(z, self.phi)?;
        let j = self.inner.jet(z)?;
        let (f, df) = (j.d(0)?, j.d(1)?);
        let value = df / rz + PI * rz * t * f;
        if j.order() < 2 {
            return Ok(Jet::new(&[value]));
        }
        let ddf = j.d(2)?;
        let dt = PI * z * (1.0 + t * t);
        let derivative =
            ddf / rz - df / (2.0 * z * rz) + PI / (2.0 * rz) * t * f + PI * rz * (dt * f + t * df);
        Ok(Jet::new(&[value, derivative]))
    }
}

/// `A⁻g` as a function; see [`APlus`].
#[derive(Debug, Clone, Copy)]
pub struct AMinus<F> {
    pub inner: F,
    pub phi: f64,
}

impl<F: Differentiable> Differentiable for AMinus<F> {
    fn jet(&self, z: f64) -> Result<Jet> {
        let (rz, t, _) = frame(z, self.phi)?;
        let j = self.inner.jet(z)?;
        let (g, dg) = (j.d(0)?, j.d(1)?);
        let z32 = z * rz;
        let value = dg / rz - g / (2.0 * z32) - PI * rz * t * g;
        if j.order() < 2 {
            return Ok(Jet::new(&[value]));
        }
        let ddg = j.d(2)?;
        let dt = PI * z * (1.0 + t * t);
        let derivative = ddg / rz - dg / z32 + 3.0 * g / (4.0 * z * z32)
            - PI / (2.0 * rz) * t * g
            - PI * rz * (dt * g + t * dg);
        Ok(Jet::new(&[value, derivative]))
    }
}

/// `√z sec(πz²/2 + φ)`, the kernel of `A⁻`.
#[derive(Debug, Clone, Copy)]
pub struct SecantKernel {
    pub phi: f64,
}

impl Differentiable for SecantKernel {
    fn jet(&self, z: f64) -> Result<Jet> {
        let (rz, t, c) = frame(z, self.phi)?;
        let sec = 1.0 / c;
        // (√z)' = 1/(2√z), (√z)'' = −1/(4 z√z); sec' = πz sec tan
        let dsec = PI * z * sec * t;
        let ddsec = PI * sec * t + PI * PI * z * z * (sec * t * t + sec * sec * sec);
        let (p, dp, ddp) = (rz, 0.5 / rz, -0.25 / (z * rz));
        Ok(Jet::new(&[
            p * sec,
            dp * sec + p * dsec,
            ddp * sec + 2.0 * dp * dsec + p * ddsec,
        ]))
    }
}

/// `Δ(z; φ) = −2π²z² + 3/(4z²) − π tan u − 2π²z² tan² u`, `u = πz²/2 + φ`.
pub fn darboux_distortion(z: f64, phi: f64) -> Result<f64> {
    let (_, t, _) = frame(z, phi)?;
    let z2 = z * z;
    Ok(-2.0 * PI * PI * z2 + 0.75 / z2 - PI * t - 2.0 * PI * PI * z2 * t * t)
}

/// Phases at which the distortion has a closed trigonometric form in `πz²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialPhase {
    Zero,
    PlusQuarterPi,
    MinusQuarterPi,
    PlusHalfPi,
    MinusHalfPi,
}

impl SpecialPhase {
    pub const ALL: [SpecialPhase; 5] = [
        SpecialPhase::Zero,
        SpecialPhase::PlusQuarterPi,
        SpecialPhase::MinusQuarterPi,
        SpecialPhase::PlusHalfPi,
        SpecialPhase::MinusHalfPi,
    ];

    pub fn phi(self) -> f64 {
        match self {
            SpecialPhase::Zero => 0.0,
            SpecialPhase::PlusQuarterPi => PI / 4.0,
            SpecialPhase::MinusQuarterPi => -PI / 4.0,
            SpecialPhase::PlusHalfPi => PI / 2.0,
            SpecialPhase::MinusHalfPi => -PI / 2.0,
        }
    }
}

/// Simplified distortion at `φ ∈ {0, ±π/4, ±π/2}`, with `w = πz²`:
///
/// ```text
/// φ = 0     3/(4z²) − π(sin w + 4πz²)/(cos w + 1)
/// φ = ±π/4  3/(4z²) + π(cos w ± 4πz²)/(sin w ∓ 1)
/// φ = ±π/2  3/(4z²) − π(sin w − 4πz²)/(cos w − 1)
/// ```
pub fn darboux_distortion_special(z: f64, case: SpecialPhase) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain {
            name: "z",
            value: z,
            reason: "operators are defined for z > 0",
        });
    }
    let (s, c) = phase::pi_sq(z, 0.0).sin_cos();
    let z2 = z * z;
    let (numerator, denominator, sign) = match case {
        SpecialPhase::Zero => (s + 4.0 * PI * z2, c + 1.0, -1.0),
        SpecialPhase::PlusQuarterPi => (c + 4.0 * PI * z2, s - 1.0, 1.0),
        SpecialPhase::MinusQuarterPi => (c - 4.0 * PI * z2, s + 1.0, 1.0),
        SpecialPhase::PlusHalfPi | SpecialPhase::MinusHalfPi => (s - 4.0 * PI * z2, c - 1.0, -1.0),
    };
    if denominator.abs() < SPECIAL_POLE_GUARD {
        return Err(Error::Pole { z });
    }
    Ok(0.75 / z2 + sign * PI * numerator / denominator)
}

/// `Φ̃(z; φ) = b₁ cos(πz²/2 + φ)`, the kernel of `A⁺`.
pub fn partner_phi(z: f64, phi: f64, amplitude: f64) -> f64 {
    amplitude * phase::half_pi_sq(z, phi).cos()
}

/// `(b₂ + 2b₁z + √2 b₁[cos 2φ C(√2z) − sin 2φ S(√2z)])/4`, whose derivative
/// is `b₁ cos²(πz²/2 + φ)`.
fn partner_numerator(z: f64, phi: f64, b1: f64, b2: f64) -> Result<f64> {
    let pair = fresnel::fresnel(SQRT_2 * z)?;
    let (sin2, cos2) = (2.0 * phi).sin_cos();
    Ok((b2 + 2.0 * b1 * z + SQRT_2 * b1 * (cos2 * pair.c - sin2 * pair.s)) / 4.0)
}

/// General solution of the partner equation,
/// `Ψ̃ = √z N(z) / cos(πz²/2 + φ)` with `N` from [`partner_numerator`].
pub fn partner_psi(z: f64, phi: f64, b1: f64, b2: f64) -> Result<f64> {
    let (rz, _, c) = frame(z, phi)?;
    Ok(rz * partner_numerator(z, phi, b1, b2)? / c)
}

/// `(b₁, b₂) = (2, 0)` case written with the shifted integral:
/// `Ψ̃ = √z (z + C̃(z; φ)) / cos(πz²/2 + φ)`.
pub fn partner_psi_compact(z: f64, phi: f64) -> Result<f64> {
    let (rz, _, c) = frame(z, phi)?;
    Ok(rz * (z + fresnel::fresnel_shifted(z, phi)?) / c)
}

/// [`partner_psi`] with its first two derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartnerPsi {
    pub phi: f64,
    pub b1: f64,
    pub b2: f64,
}

impl Differentiable for PartnerPsi {
    fn jet(&self, z: f64) -> Result<Jet> {
        let (rz, t, c) = frame(z, self.phi)?;
        let s = t * c;
        let n = partner_numerator(z, self.phi, self.b1, self.b2)?;
        let dn = self.b1 * c * c;
        let ddn = -2.0 * self.b1 * c * s * PI * z;
        let sec = 1.0 / c;
        let dsec = PI * z * sec * t;
        let ddsec = PI * sec * t + PI * PI * z * z * (sec * t * t + sec * sec * sec);
        let (q, dq, ddq) = (
            n * sec,
            dn * sec + n * dsec,
            ddn * sec + 2.0 * dn * dsec + n * ddsec,
        );
        let (p, dp, ddp) = (rz, 0.5 / rz, -0.25 / (z * rz));
        Ok(Jet::new(&[
            p * q,
            dp * q + p * dq,
            ddp * q + 2.0 * dp * dq + p * ddq,
        ]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::darboux::residual::FiniteDifference;

    const FRAC_PI_4: f64 = PI / 4.0;
    const FRAC_PI_2: f64 = PI / 2.0;

    #[test]
    fn cosine_is_in_the_kernel_of_a_plus() {
        for phi in [0.0, 0.3, -1.2, FRAC_PI_4] {
            let r = apply_a_plus(&Oscillation::cos(phi), 0.8, phi).unwrap();
            assert!(r.abs() < 1e-14, "phi = {phi}: {r}");
        }
    }

    #[test]
    fn a_plus_of_sine() {
        // A⁺ sin(πz²/2) = π√z sec(πz²/2); oracle: finite-difference jet
        let z: f64 = 0.6;
        let expected = PI * z.sqrt() / (FRAC_PI_2 * z * z).cos();
        let fd = FiniteDifference(|z: f64| Ok((FRAC_PI_2 * z * z).sin()));
        assert!((apply_a_plus(&fd, z, 0.0).unwrap() - expected).abs() < 1e-6);
        assert!((apply_a_plus(&Oscillation::sin(0.0), z, 0.0).unwrap() - expected).abs() < 1e-13);
    }

    #[test]
    fn operators_reject_non_positive_z() {
        assert!(matches!(
            apply_a_plus(&Oscillation::cos(0.0), -1.0, 0.0),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            apply_a_minus(&Oscillation::cos(0.0), 0.0, 0.0),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn operators_report_poles() {
        assert_eq!(
            apply_a_plus(&Oscillation::cos(0.0), 1.0, 0.0),
            Err(Error::Pole { z: 1.0 })
        );
        assert_eq!(
            darboux_distortion(3f64.sqrt(), 0.0),
            Err(Error::Pole { z: 3f64.sqrt() })
        );
    }

    #[test]
    fn secant_is_in_the_kernel_of_a_minus() {
        let r = apply_a_minus(&SecantKernel { phi: 0.0 }, 0.6, 0.0).unwrap();
        assert!(r.abs() < 1e-13);
    }

    #[test]
    fn a_minus_of_root() {
        let z: f64 = 0.5;
        let root = JetFn(|z: f64| Ok(Jet::new(&[z.sqrt(), 0.5 / z.sqrt()])));
        let expected = -PI * z * (FRAC_PI_2 * z * z).tan();
        assert!((apply_a_minus(&root, z, 0.0).unwrap() - expected).abs() < 1e-14);
    }

    #[test]
    fn a_minus_a_plus_annihilates_sine() {
        let composite = APlus {
            inner: Oscillation::sin(0.0),
            phi: 0.0,
        };
        assert!(apply_a_minus(&composite, 0.7, 0.0).unwrap().abs() < 1e-9);
    }

    #[test]
    fn composite_jets_match_finite_differences() {
        let phi = 0.4;
        let plus = APlus {
            inner: Oscillation {
                c1: 0.3,
                c2: 1.0,
                phi: 0.0,
            },
            phi,
        };
        let fd = FiniteDifference(|z| plus.jet(z).map(|j| j.value()));
        let minus = AMinus {
            inner: PartnerPsi {
                phi,
                b1: 1.0,
                b2: 0.5,
            },
            phi,
        };
        let fd_minus = FiniteDifference(|z| minus.jet(z).map(|j| j.value()));
        for z in [0.3, 0.9, 1.6] {
            let (a, b) = (plus.jet(z).unwrap(), fd.jet(z).unwrap());
            assert!(
                (a.d(1).unwrap() - b.d(1).unwrap()).abs() < 1e-5 * (1.0 + a.d(1).unwrap().abs())
            );
            let (a, b) = (minus.jet(z).unwrap(), fd_minus.jet(z).unwrap());
            assert!(
                (a.d(1).unwrap() - b.d(1).unwrap()).abs() < 1e-5 * (1.0 + a.d(1).unwrap().abs())
            );
        }
    }

    #[test]
    fn distortion_values() {
        let z = 2f64.sqrt();
        let d = darboux_distortion(z, 0.0).unwrap();
        assert!((d - (-4.0 * PI * PI + 3.0 / 8.0)).abs() < 1e-12);
        // z = 1 is a pole at φ = 0
        for z in [0.5, 1.2, 1.5] {
            let t = (FRAC_PI_2 * z * z).tan();
            let direct = -2.0 * PI * PI * z * z + 3.0 / (4.0 * z * z)
                - PI * t
                - 2.0 * PI * PI * z * z * t * t;
            assert!((darboux_distortion(z, 0.0).unwrap() - direct).abs() < 1e-12);
        }
        let z: f64 = 0.5;
        let w = PI * z * z;
        let third = 3.0 / (4.0 * z * z) - PI * (w.sin() - 4.0 * PI * z * z) / (w.cos() - 1.0);
        assert!((darboux_distortion(z, FRAC_PI_2).unwrap() - third).abs() < 1e-12);
    }

    #[test]
    fn special_forms() {
        let z: f64 = 0.5;
        let w = PI * z * z;
        let phi0 = 3.0 / (4.0 * z * z) - PI * (w.sin() + 4.0 * PI * z * z) / (w.cos() + 1.0);
        assert!((darboux_distortion_special(z, SpecialPhase::Zero).unwrap() - phi0).abs() < 1e-13);
        let z: f64 = 0.7;
        let w = PI * z * z;
        let quarter = 3.0 / (4.0 * z * z) + PI * (w.cos() + 4.0 * PI * z * z) / (w.sin() - 1.0);
        let v = darboux_distortion_special(z, SpecialPhase::PlusQuarterPi).unwrap();
        assert!((v - quarter).abs() < 1e-9 * quarter.abs());
        for case in SpecialPhase::ALL {
            for z in [0.3, 0.55, 1.3, 2.1] {
                let a = darboux_distortion_special(z, case).unwrap();
                let b = darboux_distortion(z, case.phi()).unwrap();
                assert!(
                    (a - b).abs() < 1e-10 * b.abs().max(1.0),
                    "{case:?} z = {z}: {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn special_form_pole() {
        // cos(πz²) + 1 = 0 at z = 1
        assert_eq!(
            darboux_distortion_special(1.0, SpecialPhase::Zero),
            Err(Error::Pole { z: 1.0 })
        );
    }

    #[test]
    fn partner_phi_values() {
        assert_eq!(partner_phi(0.0, 0.0, 1.0), 1.0);
        assert!(partner_phi(1.0, 0.0, 3.0).abs() < 1e-15);
        let r = apply_a_plus(
            &Oscillation {
                c1: 1.0,
                c2: 0.0,
                phi: FRAC_PI_4,
            },
            0.9,
            FRAC_PI_4,
        )
        .unwrap();
        assert!(r.abs() < 1e-14);
    }

    #[test]
    fn partner_psi_forms() {
        let (z, phi) = (0.8, 0.0);
        let full = partner_psi(z, phi, 2.0, 0.0).unwrap();
        let compact = partner_psi_compact(z, phi).unwrap();
        assert!((full - compact).abs() < 1e-11);
        assert_eq!(partner_psi(1.0, 0.0, 0.0, 1.0), Err(Error::Pole { z: 1.0 }));
        let psi = PartnerPsi {
            phi: FRAC_PI_4,
            b1: 2.0,
            b2: 0.0,
        };
        assert!(ode_residual(Equation::Partner, &psi, 0.7, FRAC_PI_4).unwrap() < 1e-8);
    }

    #[test]
    fn a_minus_maps_psi_to_phi() {
        let (phi, b1) = (0.35, 1.7);
        let psi = PartnerPsi { phi, b1, b2: -0.4 };
        for z in [0.2, 0.9, 1.5] {
            let image = apply_a_minus(&psi, z, phi).unwrap();
            assert!((image - partner_phi(z, phi, b1)).abs() < 1e-12);
        }
    }
}
