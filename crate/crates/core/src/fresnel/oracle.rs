//! Independent quadrature for the Fresnel-type integrands.
//!
//! Adaptive composite Simpson with interval bisection; a panel is accepted
//! when the Richardson estimate `|S₂ − S₁|/15` is within its share of the
//! tolerance. Integrands are evaluated with plain `cos`/`sin` calls and
//! nothing here touches the series or continued-fraction code.

use crate::error::{Error, Result};

/// Recursion depth at which bisection gives up.
pub const MAX_DEPTH: u32 = 60;

/// Budget of integrand evaluations per call.
pub const MAX_EVALUATIONS: usize = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Integrand {
    /// `cos(πs²/2)`
    CosHalfPiSq,
    /// `sin(πs²/2)`
    SinHalfPiSq,
    /// `cos(πs² + 2φ)`
    CosPiSqShifted { phase: f64 },
}

impl Integrand {
    fn eval(self, s: f64) -> f64 {
        use std::f64::consts::PI;
        match self {
            Integrand::CosHalfPiSq => (0.5 * PI * s * s).cos(),
            Integrand::SinHalfPiSq => (0.5 * PI * s * s).sin(),
            Integrand::CosPiSqShifted { phase } => (PI * s * s + 2.0 * phase).cos(),
        }
    }
}

/// `∫₀^upper integrand(s) ds` to absolute tolerance `abs_tol`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub integrand: Integrand,
    pub upper: f64,
    pub abs_tol: f64,
}

impl QuadratureSpec {
    pub fn new(integrand: Integrand, upper: f64, abs_tol: f64) -> Self {
        Self {
            integrand,
            upper,
            abs_tol,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !self.abs_tol.is_finite() {
            return Err(Error::Argument(format!(
                "quadrature tolerance must be positive, got {}",
                self.abs_tol
            )));
        }
        if !self.upper.is_finite() {
            return Err(Error::Argument(format!(
                "quadrature upper limit must be finite, got {}",
                self.upper
            )));
        }
        if let Integrand::CosPiSqShifted { phase } = self.integrand {
            if !phase.is_finite() {
                return Err(Error::Argument(format!(
                    "phase must be finite, got {phase}"
                )));
            }
        }
        Ok(())
    }
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// Returns the integral, or [`Error::Convergence`] carrying the best
/// estimate if a panel hits [`MAX_DEPTH`] unresolved or the evaluation
/// budget runs out.
pub fn quadrature_oracle(spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    if spec.upper == 0.0 {
        return Ok(0.0);
    }
    let f = |s: f64| spec.integrand.eval(s);
    let (a, b) = (0.0, spec.upper);
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let root = Panel {
        a,
        b,
        fa,
        fm,
        fb,
        whole: simpson(a, b, fa, fm, fb),
    };
    let mut budget = Budget {
        remaining: MAX_EVALUATIONS - 3,
        converged: true,
    };
    let value = refine(&f, root, spec.abs_tol, 0, &mut budget);
    if budget.converged {
        Ok(value)
    } else {
        Err(Error::Convergence { estimate: value })
    }
}

struct Budget {
    remaining: usize,
    converged: bool,
}

fn refine<F: Fn(f64) -> f64>(f: &F, p: Panel, tol: f64, depth: u32, budget: &mut Budget) -> f64 {
    let m = 0.5 * (p.a + p.b);
    let (lm, rm) = (0.5 * (p.a + m), 0.5 * (m + p.b));
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(p.a, m, p.fa, flm, p.fm);
    let right = simpson(m, p.b, p.fm, frm, p.fb);
    let delta = left + right - p.whole;
    if delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    budget.remaining = budget.remaining.saturating_sub(2);
    if depth >= MAX_DEPTH || budget.remaining == 0 {
        budget.converged = false;
        return left + right + delta / 15.0;
    }
    let l = Panel {
        a: p.a,
        b: m,
        fa: p.fa,
        fm: flm,
        fb: p.fm,
        whole: left,
    };
    let r = Panel {
        a: m,
        b: p.b,
        fa: p.fm,
        fm: frm,
        fb: p.fb,
        whole: right,
    };
    refine(f, l, 0.5 * tol, depth + 1, budget) + refine(f, r, 0.5 * tol, depth + 1, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_interval_is_zero() {
        let spec = QuadratureSpec::new(Integrand::CosHalfPiSq, 0.0, 1e-13);
        assert_eq!(quadrature_oracle(&spec).unwrap(), 0.0);
    }

    #[test]
    fn odd_integral_for_negative_limit() {
        let pos =
            quadrature_oracle(&QuadratureSpec::new(Integrand::SinHalfPiSq, 1.0, 1e-13)).unwrap();
        let neg =
            quadrature_oracle(&QuadratureSpec::new(Integrand::SinHalfPiSq, -1.0, 1e-13)).unwrap();
        assert!((pos + neg).abs() < 1e-15);
    }

    #[test]
    fn polynomial_sanity() {
        // cos(πs² + 2φ) with φ = π/4 is −sin(πs²); integrate to a tiny upper
        // limit where the integrand ≈ −πs², ∫ = −π u³/3.
        let u = 1e-3;
        let spec = QuadratureSpec::new(
            Integrand::CosPiSqShifted {
                phase: std::f64::consts::FRAC_PI_4,
            },
            u,
            1e-18,
        );
        let v = quadrature_oracle(&spec).unwrap();
        assert!((v + std::f64::consts::PI * u.powi(3) / 3.0).abs() < 1e-18);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(quadrature_oracle(&QuadratureSpec::new(Integrand::CosHalfPiSq, 1.0, 0.0)).is_err());
        assert!(quadrature_oracle(&QuadratureSpec::new(
            Integrand::CosHalfPiSq,
            f64::NAN,
            1e-10
        ))
        .is_err());
    }

    #[test]
    fn depth_budget_is_reported() {
        // A tolerance below rounding noise exhausts the budget.
        let spec = QuadratureSpec::new(Integrand::CosHalfPiSq, 3.0, 1e-40);
        match quadrature_oracle(&spec) {
            Err(Error::Convergence { estimate }) => {
                assert!((estimate - 0.6057207892976856).abs() < 0.1)
            }
            other => panic!("expected convergence error, got {other:?}"),
        }
    }
}
