//! Derivative jets, test functions with closed-form derivatives and the ODE
//! residual engine.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::fresnel;
use crate::phase;

/// Value and derivatives `f, f', f'', f'''` at a point, up to `order`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    derivs: [f64; 4],
    order: usize,
}

impl Jet {
    /// `values[k]` is the k-th derivative; at most four entries.
    pub fn new(values: &[f64]) -> Self {
        assert!(
            !values.is_empty() && values.len() <= 4,
            "a jet carries 1 to 4 entries, got {}",
            values.len()
        );
        let mut derivs = [f64::NAN; 4];
        derivs[..values.len()].copy_from_slice(values);
        Self {
            derivs,
            order: values.len() - 1,
        }
    }

    pub fn value(&self) -> f64 {
        self.derivs[0]
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn d(&self, k: usize) -> Result<f64> {
        if k > self.order {
            Err(Error::MissingDerivative { order: k })
        } else {
            Ok(self.derivs[k])
        }
    }
}

/// A real function that reports its own derivatives.
pub trait Differentiable {
    fn jet(&self, z: f64) -> Result<Jet>;
}

impl<T: Differentiable + ?Sized> Differentiable for &T {
    fn jet(&self, z: f64) -> Result<Jet> {
        (**self).jet(z)
    }
}

/// Adapter for closures returning a [`Jet`].
pub struct JetFn<F>(pub F);

impl<F: Fn(f64) -> Result<Jet>> Differentiable for JetFn<F> {
    fn jet(&self, z: f64) -> Result<Jet> {
        (self.0)(z)
    }
}

/// Central-difference jet (orders 0..=2) of a plain function, step
/// `h = 1e-5·max(1, |z|)`. Only meant for cross-checking analytic jets.
pub struct FiniteDifference<F>(pub F);

impl<F: Fn(f64) -> Result<f64>> Differentiable for FiniteDifference<F> {
    fn jet(&self, z: f64) -> Result<Jet> {
        let h = 1e-5 * z.abs().max(1.0);
        let f = &self.0;
        let (m, c, p) = (f(z - h)?, f(z)?, f(z + h)?);
        Ok(Jet::new(&[
            c,
            (p - m) / (2.0 * h),
            (p - 2.0 * c + m) / (h * h),
        ]))
    }
}

/// `c₁ cos(πz²/2 + φ) + c₂ sin(πz²/2 + φ)`: the solutions of
/// `v'' − v'/z + π²z² v = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Oscillation {
    pub c1: f64,
    pub c2: f64,
    pub phi: f64,
}

impl Oscillation {
    pub fn cos(phi: f64) -> Self {
        Self {
            c1: 1.0,
            c2: 0.0,
            phi,
        }
    }

    pub fn sin(phi: f64) -> Self {
        Self {
            c1: 0.0,
            c2: 1.0,
            phi,
        }
    }
}

impl Differentiable for Oscillation {
    fn jet(&self, z: f64) -> Result<Jet> {
        // u = πz²/2 + φ, u' = πz, u'' = π; f_u = g, g_u = −f
        let (s, c) = phase::half_pi_sq(z, self.phi).sin_cos();
        let f = self.c1 * c + self.c2 * s;
        let g = -self.c1 * s + self.c2 * c;
        let (du, ddu) = (PI * z, PI);
        Ok(Jet::new(&[
            f,
            g * du,
            -f * du * du + g * ddu,
            -g * du * du * du - 3.0 * f * du * ddu,
        ]))
    }
}

/// `c₁C(z) + c₂S(z) + w₀`: the solutions of `z w''' − w'' + π²z³ w' = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FresnelCombination {
    pub c1: f64,
    pub c2: f64,
    pub offset: f64,
}

impl Differentiable for FresnelCombination {
    fn jet(&self, z: f64) -> Result<Jet> {
        let pair = fresnel::fresnel(z)?;
        let value = self.c1 * pair.c + self.c2 * pair.s + self.offset;
        let derivative = Oscillation {
            c1: self.c1,
            c2: self.c2,
            phi: 0.0,
        }
        .jet(z)?;
        Ok(Jet::new(&[
            value,
            derivative.d(0)?,
            derivative.d(1)?,
            derivative.d(2)?,
        ]))
    }
}

/// Second-order tolerance: 1e-5 steps need looser bounds than analytic jets.
pub const FD_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Equation {
    /// `z w''' − w'' + π²z³ w' = 0`
    ThirdOrder,
    /// `v'' − v'/z + π²z² v = 0`
    Reduced,
    /// `y' + y² − y/z + π²z² = 0`
    Riccati,
    /// `Ψ'' − Ψ'/z + [π²z² + Δ(z; φ)]Ψ = 0`
    Partner,
}

impl Equation {
    pub fn label(self) -> &'static str {
        match self {
            Equation::ThirdOrder => "ode3",
            Equation::Reduced => "ode2",
            Equation::Riccati => "riccati",
            Equation::Partner => "partner",
        }
    }
}

/// `|residual|` of `solution` in `equation` at `z`; `phi` only enters the
/// partner equation.
pub fn ode_residual<F: Differentiable + ?Sized>(
    equation: Equation,
    solution: &F,
    z: f64,
    phi: f64,
) -> Result<f64> {
    if z == 0.0 || !z.is_finite() {
        return Err(Error::Domain {
            name: "z",
            value: z,
            reason: "singular point of the equation",
        });
    }
    let j = solution.jet(z)?;
    let r = match equation {
        Equation::ThirdOrder => z * j.d(3)? - j.d(2)? + PI * PI * z * z * z * j.d(1)?,
        Equation::Reduced => j.d(2)? - j.d(1)? / z + PI * PI * z * z * j.d(0)?,
        Equation::Riccati => {
            let y = j.d(0)?;
            j.d(1)? + y * y - y / z + PI * PI * z * z
        }
        Equation::Partner => {
            let delta = super::darboux_distortion(z, phi)?;
            j.d(2)? - j.d(1)? / z + (PI * PI * z * z + delta) * j.d(0)?
        }
    };
    Ok(r.abs())
}

/// Residual magnitudes of one equation over a set of points.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub equation: Equation,
    pub samples: Vec<(f64, f64)>,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl ResidualReport {
    pub fn from_samples(equation: Equation, samples: Vec<(f64, f64)>, tolerance: f64) -> Self {
        // NaN residuals must fail, so fold with a NaN-propagating max
        let max_residual = samples.iter().fold(0.0f64, |m, &(_, r)| {
            if m.is_nan() || r.is_nan() {
                f64::NAN
            } else {
                m.max(r)
            }
        });
        Self {
            equation,
            samples,
            max_residual,
            tolerance,
            pass: max_residual <= tolerance,
        }
    }

    pub fn evaluate<F: Differentiable + ?Sized>(
        equation: Equation,
        solution: &F,
        points: &[f64],
        phi: f64,
        tolerance: f64,
    ) -> Result<Self> {
        let samples = points
            .iter()
            .map(|&z| ode_residual(equation, solution, z, phi).map(|r| (z, r)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_samples(equation, samples, tolerance))
    }

    /// Merge reports of the same equation, keeping the tighter tolerance.
    pub fn merge(mut self, other: ResidualReport) -> Self {
        debug_assert_eq!(self.equation, other.equation);
        self.samples.extend(other.samples);
        let tolerance = self.tolerance.min(other.tolerance);
        Self::from_samples(self.equation, self.samples, tolerance)
    }
}

/// Shared `z` grid for the built-in reports: `z ∈ [0.1, 3]`, with points
/// closer than `margin` (in `|cos|`) to a pole of `tan(πz²/2 + φ)` removed.
pub fn pole_avoiding_grid(phi: f64, count: usize, margin: f64) -> Vec<f64> {
    (0..count)
        .map(|k| 0.1 + 2.9 * k as f64 / (count - 1) as f64)
        .filter(|&z| phase::half_pi_sq(z, phi).cos().abs() > margin)
        .collect()
}

/// The built-in verification suite behind `cornu verify`: Fresnel
/// combinations in the third-order equation, oscillations and `v_g` in the
/// reduced equation, `y_g` in the Riccati equation and `Ψ̃` in the partner
/// equation.
pub fn standard_reports() -> Result<Vec<ResidualReport>> {
    use crate::riccati::{self, GeneralSolution};

    let grid = pole_avoiding_grid(0.0, 30, 0.0);

    let mut ode3 = ResidualReport::from_samples(Equation::ThirdOrder, Vec::new(), 1e-10);
    for (c1, c2) in [(1.0, 0.0), (0.0, 1.0), (0.7, -1.3)] {
        let w = FresnelCombination {
            c1,
            c2,
            offset: 0.25,
        };
        ode3 = ode3.merge(ResidualReport::evaluate(
            Equation::ThirdOrder,
            &w,
            &grid,
            0.0,
            1e-10,
        )?);
    }

    let mut ode2 = ResidualReport::from_samples(Equation::Reduced, Vec::new(), 1e-10);
    for phi in [0.0, 0.4, -1.1] {
        for v in [Oscillation::cos(phi), Oscillation::sin(phi)] {
            ode2 = ode2.merge(ResidualReport::evaluate(
                Equation::Reduced,
                &v,
                &grid,
                0.0,
                1e-10,
            )?);
        }
    }
    let thetas = theta_grid();
    let mut v_samples = Vec::new();
    for theta in &thetas {
        for &z in &grid {
            let scale = if theta.norm() == 0.0 {
                1.0
            } else {
                1.0 / theta.norm()
            };
            v_samples.push((z, riccati::v_general_residual(z, *theta, scale)?));
        }
    }
    ode2 = ode2.merge(ResidualReport::from_samples(
        Equation::Reduced,
        v_samples,
        1e-10,
    ));

    let mut y_samples = Vec::new();
    for theta in &thetas {
        let y = GeneralSolution { theta: *theta };
        for &z in &grid {
            match riccati::riccati_residual(&y, z) {
                Ok(r) => y_samples.push((z, r)),
                Err(Error::Pole { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    let riccati_report = ResidualReport::from_samples(Equation::Riccati, y_samples, 1e-10);

    let mut partner = ResidualReport::from_samples(Equation::Partner, Vec::new(), 1e-8);
    for phi in [0.0, PI / 4.0, -PI / 4.0, PI / 2.0, -PI / 2.0] {
        let psi = super::PartnerPsi {
            phi,
            b1: 2.0,
            b2: 0.0,
        };
        let points = pole_avoiding_grid(phi, 30, 0.05);
        partner = partner.merge(ResidualReport::evaluate(
            Equation::Partner,
            &psi,
            &points,
            phi,
            1e-8,
        )?);
    }

    Ok(vec![ode3, ode2, riccati_report, partner])
}

/// Nine deformation parameters spanning small, unimodular and large `|θ|`.
pub fn theta_grid() -> Vec<num_complex::Complex64> {
    use num_complex::Complex64;
    vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.5, 0.5),
        Complex64::new(0.0, 1.0),
        Complex64::new(1.0, 1.0),
        Complex64::new(-2.0, 0.7),
        Complex64::new(3.0, -4.0),
        Complex64::new(10.0, 0.0),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jet_reports_missing_orders() {
        let j = Jet::new(&[1.0, 2.0]);
        assert_eq!(j.d(1).unwrap(), 2.0);
        assert_eq!(j.d(2), Err(Error::MissingDerivative { order: 2 }));
    }

    #[test]
    fn fresnel_c_solves_third_order() {
        let w = FresnelCombination {
            c1: 1.0,
            c2: 0.0,
            offset: 0.0,
        };
        assert!(ode_residual(Equation::ThirdOrder, &w, 1.1, 0.0).unwrap() < 1e-10);
    }

    #[test]
    fn identity_in_third_order() {
        let w = JetFn(|z: f64| Ok(Jet::new(&[z, 1.0, 0.0, 0.0])));
        let r = ode_residual(Equation::ThirdOrder, &w, 1.0, 0.0).unwrap();
        assert!((r - PI * PI).abs() < 1e-14);
    }

    #[test]
    fn cosine_solves_reduced() {
        assert!(ode_residual(Equation::Reduced, &Oscillation::cos(0.0), 0.8, 0.0).unwrap() < 1e-12);
    }

    #[test]
    fn oscillation_jet_matches_finite_differences() {
        let osc = Oscillation {
            c1: 0.3,
            c2: -1.2,
            phi: 0.7,
        };
        let fd = FiniteDifference(|z| osc.jet(z).map(|j| j.value()));
        for z in [0.4, 1.3, 2.1] {
            let (a, b) = (osc.jet(z).unwrap(), fd.jet(z).unwrap());
            assert!((a.d(1).unwrap() - b.d(1).unwrap()).abs() < FD_TOLERANCE);
            assert!((a.d(2).unwrap() - b.d(2).unwrap()).abs() < FD_TOLERANCE * 10.0);
        }
    }

    #[test]
    fn singular_point_is_a_domain_error() {
        let r = ode_residual(Equation::Reduced, &Oscillation::cos(0.0), 0.0, 0.0);
        assert!(matches!(r, Err(Error::Domain { .. })));
    }

    #[test]
    fn report_verdict() {
        let rep = ResidualReport::from_samples(
            Equation::Reduced,
            vec![(1.0, 1e-12), (2.0, 3e-11)],
            1e-11,
        );
        assert_eq!(rep.max_residual, 3e-11);
        assert!(!rep.pass);
        let nan = ResidualReport::from_samples(Equation::Reduced, vec![(1.0, f64::NAN)], 1.0);
        assert!(!nan.pass);
    }

    #[test]
    fn built_in_suite_passes() {
        for report in standard_reports().unwrap() {
            assert!(
                report.pass,
                "{}: max {} > {}",
                report.equation.label(),
                report.max_residual,
                report.tolerance
            );
            assert!(!report.samples.is_empty());
        }
    }
}
