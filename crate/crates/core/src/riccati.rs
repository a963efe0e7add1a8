//! The Riccati equation `y' + y² = y/z − π²z²` and its solutions.
//!
//! The equation is the logarithmic-derivative form (`y = v'/v`) of
//! `v'' − v'/z + π²z² v = 0`. Starting from the particular solution
//! `y_p = iπz`, the substitution `y = y_p + 1/u` linearises it to
//! `u' + (1/z − 2iπz)u = 1`, whose integrating factor is
//! `μ(z) = z e^{−iπz²}`. With the integration constant written as
//! `γ = i(θ + 1)/(2π)`, the general solution reads
//!
//! ```text
//! y_g(z; θ) = iπz (θ e^{iπz²} − 1) / (θ e^{iπz²} + 1)
//! ```
//!
//! and `v_g = R(e^{−iπz²/2} + θ e^{iπz²/2})`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{ensure_finite, Error, Result};
use crate::phase;

/// Complex scalar used for `y`, `v`, `u`, `μ`, `γ` and `θ`.
pub type ComplexValue = Complex64;

/// `|θ|` at or above which `θ` is treated as infinite.
pub const THETA_INFINITY: f64 = 1e10;

/// Denominator modulus below which `y_g` reports a pole.
pub const POLE_TOLERANCE: f64 = 1e-13;

/// Guard on `|cos|` for the real tangent form.
pub const TRIG_POLE_GUARD: f64 = 1e-10;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn cis(angle: f64) -> Complex64 {
    let (s, c) = angle.sin_cos();
    Complex64::new(c, s)
}

/// `e^{iπz²}`
fn chirp(z: f64) -> Complex64 {
    cis(phase::pi_sq(z, 0.0))
}

/// `e^{iπz²/2}`
fn half_chirp(z: f64) -> Complex64 {
    cis(phase::half_pi_sq(z, 0.0))
}

/// The deformation parameter `θ = a + ib` together with the amplitude `R`.
///
/// By default `R = 1/√(a² + b²)`, except at `θ = 0` where `R = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationParameter {
    pub a: f64,
    pub b: f64,
    pub scale: f64,
}

impl DeformationParameter {
    pub fn new(a: f64, b: f64) -> Self {
        Self {
            a,
            b,
            scale: Self::default_scale(a, b),
        }
    }

    /// Same `θ` with an explicit amplitude `R`.
    pub fn with_scale(self, scale: f64) -> Self {
        Self { scale, ..self }
    }

    /// `θ = (1/R) e^{iφ}`, the trigonometric parametrisation.
    pub fn from_polar(modulus: f64, phase: f64) -> Self {
        let theta = Complex64::from_polar(modulus, phase);
        Self::new(theta.re, theta.im)
    }

    /// Large-`a` stand-in for the undeformed spiral (`a = 10¹²`, `b = 0`).
    pub fn standard_limit() -> Self {
        Self::new(1e12, 0.0)
    }

    pub fn default_scale(a: f64, b: f64) -> f64 {
        if a == 0.0 && b == 0.0 {
            1.0
        } else {
            1.0 / a.hypot(b)
        }
    }

    pub fn theta(&self) -> ComplexValue {
        Complex64::new(self.a, self.b)
    }

    /// `φ = arg θ`.
    pub fn phase(&self) -> f64 {
        self.b.atan2(self.a)
    }
}

/// `y_p(z) = iπz`.
pub fn riccati_particular(z: f64) -> ComplexValue {
    Complex64::new(0.0, PI * z)
}

/// `μ(z) = z e^{−iπz²}`.
pub fn integrating_factor(z: f64) -> ComplexValue {
    z * chirp(z).conj()
}

/// `∫₀ᶻ μ(s) ds = (1 − e^{−iπz²}) / (2iπ)`.
pub fn integrating_factor_integral(z: f64) -> ComplexValue {
    (Complex64::new(1.0, 0.0) - chirp(z).conj()) / (2.0 * PI * I)
}

/// `γ = i(θ + 1)/(2π)`.
pub fn gamma_from_theta(theta: ComplexValue) -> ComplexValue {
    I * (theta + 1.0) / (2.0 * PI)
}

/// `θ = −2πiγ − 1`.
pub fn theta_from_gamma(gamma: ComplexValue) -> ComplexValue {
    -2.0 * PI * I * gamma - 1.0
}

/// `u(z) = (γ + ∫₀ᶻ μ) / μ(z)`, the solution of `u' + (1/z − 2iπz)u = 1`.
///
/// `μ(0) = 0`, so the origin is a [`Error::Singular`] point. A vanishing
/// `u` is reported as [`Error::Pole`] since `y = y_p + 1/u` blows up there.
pub fn linear_u_solution(z: f64, gamma: ComplexValue) -> Result<ComplexValue> {
    ensure_finite("z", z)?;
    if z == 0.0 {
        return Err(Error::Singular { z });
    }
    let u = (gamma + integrating_factor_integral(z)) / integrating_factor(z);
    if u.norm() < POLE_TOLERANCE {
        return Err(Error::Pole { z });
    }
    Ok(u)
}

/// `u'` from the linear equation itself: `u' = 1 − (1/z − 2iπz)u`.
pub fn linear_u_derivative(z: f64, gamma: ComplexValue) -> Result<ComplexValue> {
    let u = linear_u_solution(z, gamma)?;
    Ok(1.0 - (1.0 / z - 2.0 * I * PI * z) * u)
}

/// `y_g` in terms of `γ`: `πz (i + 2/(i + (2πγ − i) e^{iπz²}))`.
pub fn riccati_general_gamma(z: f64, gamma: ComplexValue) -> Result<ComplexValue> {
    ensure_finite("z", z)?;
    let den = I + (2.0 * PI * gamma - I) * chirp(z);
    if den.norm() < POLE_TOLERANCE {
        return Err(Error::Pole { z });
    }
    Ok(PI * z * (I + 2.0 / den))
}

/// `y_g(z; θ) = iπz (θe^{iπz²} − 1)/(θe^{iπz²} + 1)`.
///
/// `|θ| ≥ 10¹⁰` returns the `θ → ∞` limit `iπz`.
pub fn riccati_general(z: f64, theta: ComplexValue) -> Result<ComplexValue> {
    ensure_finite("z", z)?;
    if theta.norm() >= THETA_INFINITY {
        return Ok(riccati_particular(z));
    }
    let e = theta * chirp(z);
    let den = e + 1.0;
    if den.norm() < POLE_TOLERANCE {
        return Err(Error::Pole { z });
    }
    Ok(I * PI * z * (e - 1.0) / den)
}

/// `y_g'`, differentiating the closed form: with `q = (e − 1)/(e + 1)` and
/// `e' = 2iπz e`, `y' = iπ q + iπz · 2e'/(e + 1)²`.
pub fn riccati_general_derivative(z: f64, theta: ComplexValue) -> Result<ComplexValue> {
    ensure_finite("z", z)?;
    if theta.norm() >= THETA_INFINITY {
        return Ok(I * PI);
    }
    let e = theta * chirp(z);
    let den = e + 1.0;
    if den.norm() < POLE_TOLERANCE {
        return Err(Error::Pole { z });
    }
    let q = (e - 1.0) / den;
    let de = 2.0 * I * PI * z * e;
    Ok(I * PI * q + I * PI * z * 2.0 * de / (den * den))
}

/// `y_g = −πz tan(πz²/2 + φ)`; equal to [`riccati_general`] only for
/// unimodular `θ = e^{iφ}`.
pub fn riccati_general_trig(z: f64, phi: f64) -> Result<ComplexValue> {
    ensure_finite("z", z)?;
    let (s, c) = phase::half_pi_sq(z, phi).sin_cos();
    if c.abs() < TRIG_POLE_GUARD {
        return Err(Error::Pole { z });
    }
    Ok(Complex64::new(-PI * z * s / c, 0.0))
}

/// `d/dz[−πz tan(πz²/2 + φ)] = −π tan − π²z² sec²`.
pub fn riccati_general_trig_derivative(z: f64, phi: f64) -> Result<ComplexValue> {
    ensure_finite("z", z)?;
    let (s, c) = phase::half_pi_sq(z, phi).sin_cos();
    if c.abs() < TRIG_POLE_GUARD {
        return Err(Error::Pole { z });
    }
    let t = s / c;
    Ok(Complex64::new(-PI * t - PI * PI * z * z / (c * c), 0.0))
}

/// A complex-valued function of `z` that may know its own derivative.
pub trait ComplexFunction {
    fn value(&self, z: f64) -> Result<ComplexValue>;

    /// Analytic derivative, if available.
    fn derivative(&self, _z: f64) -> Option<Result<ComplexValue>> {
        None
    }
}

/// `y_p = iπz`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParticularSolution;

impl ComplexFunction for ParticularSolution {
    fn value(&self, z: f64) -> Result<ComplexValue> {
        Ok(riccati_particular(z))
    }

    fn derivative(&self, _z: f64) -> Option<Result<ComplexValue>> {
        Some(Ok(I * PI))
    }
}

/// `y_g(·; θ)`.
#[derive(Debug, Clone, Copy)]
pub struct GeneralSolution {
    pub theta: ComplexValue,
}

impl ComplexFunction for GeneralSolution {
    fn value(&self, z: f64) -> Result<ComplexValue> {
        riccati_general(z, self.theta)
    }

    fn derivative(&self, z: f64) -> Option<Result<ComplexValue>> {
        Some(riccati_general_derivative(z, self.theta))
    }
}

/// `−πz tan(πz²/2 + φ)`.
#[derive(Debug, Clone, Copy)]
pub struct TrigSolution {
    pub phi: f64,
}

impl ComplexFunction for TrigSolution {
    fn value(&self, z: f64) -> Result<ComplexValue> {
        riccati_general_trig(z, self.phi)
    }

    fn derivative(&self, z: f64) -> Option<Result<ComplexValue>> {
        Some(riccati_general_trig_derivative(z, self.phi))
    }
}

/// A closure without a known derivative; residuals fall back to finite
/// differences.
pub struct ValueOnly<F>(pub F);

impl<F: Fn(f64) -> Result<ComplexValue>> ComplexFunction for ValueOnly<F> {
    fn value(&self, z: f64) -> Result<ComplexValue> {
        (self.0)(z)
    }
}

/// Central-difference step used when no analytic derivative is supplied.
pub fn fallback_step(z: f64) -> f64 {
    1e-6f64.max(1e-6 * z.abs())
}

/// `|y' + y² − y/z + π²z²|`.
pub fn riccati_residual<F: ComplexFunction + ?Sized>(solution: &F, z: f64) -> Result<f64> {
    if z == 0.0 {
        return Err(Error::Singular { z });
    }
    let y = solution.value(z)?;
    let dy = match solution.derivative(z) {
        Some(d) => d?,
        None => {
            let h = fallback_step(z);
            (solution.value(z + h)? - solution.value(z - h)?) / (2.0 * h)
        }
    };
    Ok((dy + y * y - y / z + PI * PI * z * z).norm())
}

/// `v_g = R(e^{−iπz²/2} + θ e^{iπz²/2})`; `amplitude` is `R` and should be
/// positive.
pub fn v_general(z: f64, theta: ComplexValue, amplitude: f64) -> ComplexValue {
    let e = half_chirp(z);
    amplitude * (e.conj() + theta * e)
}

/// `(v_g, v_g', v_g'')`.
///
/// With `E = e^{iπz²/2}`: `v' = iπzR(θE − E⁻¹)` and
/// `v'' = iπR(θE − E⁻¹) − π²z²R(θE + E⁻¹)`.
pub fn v_general_jet(z: f64, theta: ComplexValue, amplitude: f64) -> [ComplexValue; 3] {
    let e = half_chirp(z);
    let (plus, minus) = (theta * e + e.conj(), theta * e - e.conj());
    [
        amplitude * plus,
        amplitude * I * PI * z * minus,
        amplitude * (I * PI * minus - PI * PI * z * z * plus),
    ]
}

/// `|v'' − v'/z + π²z² v|` for `v = v_g`.
pub fn v_general_residual(z: f64, theta: ComplexValue, amplitude: f64) -> Result<f64> {
    if z == 0.0 {
        return Err(Error::Singular { z });
    }
    let [v, dv, ddv] = v_general_jet(z, theta, amplitude);
    Ok((ddv - dv / z + PI * PI * z * z * v).norm())
}
