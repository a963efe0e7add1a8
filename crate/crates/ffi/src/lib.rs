//! C ABI for `cornu`.
//!
//! Every fallible function returns a [`CornuStatus`] and writes results
//! through out-pointers; out-pointers are left untouched on failure. The
//! message of the most recent failure on the calling thread is available
//! from [`cornu_last_error_message`].
//!
//! Sampled curves and distortion profiles are opaque handles owned by the
//! caller and released with the matching `*_free` function.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cornu::darboux;
use cornu::fresnel;
use cornu::riccati::{self, ComplexValue, DeformationParameter, GeneralSolution};
use cornu::spiral::{self, Arm, SpiralPoint};
use cornu::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CornuStatus {
    Ok = 0,
    /// Argument outside the domain (non-finite input, z ≤ 0 for operators).
    Domain = 1,
    /// Evaluation point inside a pole guard band.
    Pole = 2,
    /// Singular point of an equation (z = 0).
    Singular = 3,
    Convergence = 4,
    /// Curve speed vanishes.
    Degenerate = 5,
    InvalidArgument = 6,
    NullPointer = 7,
    IndexOutOfRange = 8,
    /// A Rust panic was caught at the boundary.
    Internal = 9,
}

impl From<&Error> for CornuStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Domain { .. } => CornuStatus::Domain,
            Error::Pole { .. } => CornuStatus::Pole,
            Error::Singular { .. } => CornuStatus::Singular,
            Error::Convergence { .. } => CornuStatus::Convergence,
            Error::DegenerateCurve { .. } => CornuStatus::Degenerate,
            Error::MissingDerivative { .. } | Error::Argument(_) => CornuStatus::InvalidArgument,
        }
    }
}

/// `re + i·im`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornuComplex {
    pub re: f64,
    pub im: f64,
}

impl From<CornuComplex> for ComplexValue {
    fn from(c: CornuComplex) -> Self {
        ComplexValue::new(c.re, c.im)
    }
}

impl From<ComplexValue> for CornuComplex {
    fn from(c: ComplexValue) -> Self {
        CornuComplex { re: c.re, im: c.im }
    }
}

/// `θ = a + ib` with amplitude `scale` (R).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornuParameter {
    pub a: f64,
    pub b: f64,
    pub scale: f64,
}

impl From<CornuParameter> for DeformationParameter {
    fn from(p: CornuParameter) -> Self {
        DeformationParameter::new(p.a, p.b).with_scale(p.scale)
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornuPoint {
    pub arclength: f64,
    pub x: f64,
    pub y: f64,
    pub modulus_sq: f64,
}

impl From<SpiralPoint> for CornuPoint {
    fn from(p: SpiralPoint) -> Self {
        CornuPoint {
            arclength: p.arclength,
            x: p.x,
            y: p.y,
            modulus_sq: p.modulus_sq,
        }
    }
}

/// Opaque sampled spiral.
pub struct CornuCurve {
    points: Vec<CornuPoint>,
}

/// Opaque distortion profile.
pub struct CornuProfile {
    samples: Vec<(f64, f64)>,
    breaks: Vec<bool>,
    pole_breaks: Vec<(f64, f64)>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

/// Runs `body`, converting errors and panics into status codes.
fn guard<F: FnOnce() -> Result<(), Error>>(body: F) -> CornuStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CornuStatus::Ok,
        Ok(Err(e)) => {
            set_last_error(e.to_string());
            CornuStatus::from(&e)
        }
        Err(_) => {
            set_last_error("panic inside cornu".into());
            CornuStatus::Internal
        }
    }
}

macro_rules! require {
    ($($ptr:ident),+) => {
        $(if $ptr.is_null() {
            set_last_error(format!("`{}` is NULL", stringify!($ptr)));
            return CornuStatus::NullPointer;
        })+
    };
}

/// Static description of a status code; never NULL, never freed.
#[no_mangle]
pub extern "C" fn cornu_status_message(status: CornuStatus) -> *const c_char {
    let text: &'static [u8] = match status {
        CornuStatus::Ok => b"ok\0",
        CornuStatus::Domain => b"argument outside the domain\0",
        CornuStatus::Pole => b"pole\0",
        CornuStatus::Singular => b"singular point\0",
        CornuStatus::Convergence => b"no convergence\0",
        CornuStatus::Degenerate => b"degenerate curve\0",
        CornuStatus::InvalidArgument => b"invalid argument\0",
        CornuStatus::NullPointer => b"null pointer\0",
        CornuStatus::IndexOutOfRange => b"index out of range\0",
        CornuStatus::Internal => b"internal error\0",
    };
    text.as_ptr().cast()
}

/// Message of the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cornu_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// `θ = a + ib` with the default amplitude `1/|θ|` (1 at `θ = 0`).
#[no_mangle]
pub extern "C" fn cornu_parameter_new(a: f64, b: f64) -> CornuParameter {
    let p = DeformationParameter::new(a, b);
    CornuParameter {
        a: p.a,
        b: p.b,
        scale: p.scale,
    }
}

/// Fresnel integrals `C(z)`, `S(z)`.
#[no_mangle]
pub unsafe extern "C" fn cornu_fresnel(z: f64, out_c: *mut f64, out_s: *mut f64) -> CornuStatus {
    require!(out_c, out_s);
    guard(|| {
        let pair = fresnel::fresnel(z)?;
        *out_c = pair.c;
        *out_s = pair.s;
        Ok(())
    })
}

/// `C̃(z; φ) = ∫₀ᶻ cos(πs² + 2φ) ds`.
#[no_mangle]
pub unsafe extern "C" fn cornu_fresnel_shifted(z: f64, phi: f64, out: *mut f64) -> CornuStatus {
    require!(out);
    guard(|| {
        *out = fresnel::fresnel_shifted(z, phi)?;
        Ok(())
    })
}

/// General Riccati solution `y_g(z; θ)`.
#[no_mangle]
pub unsafe extern "C" fn cornu_riccati_general(
    z: f64,
    theta: CornuComplex,
    out: *mut CornuComplex,
) -> CornuStatus {
    require!(out);
    guard(|| {
        *out = riccati::riccati_general(z, theta.into())?.into();
        Ok(())
    })
}

/// `|y' + y² − y/z + π²z²|` for `y = y_g(·; θ)`.
#[no_mangle]
pub unsafe extern "C" fn cornu_riccati_residual(
    z: f64,
    theta: CornuComplex,
    out: *mut f64,
) -> CornuStatus {
    require!(out);
    guard(|| {
        *out = riccati::riccati_residual(
            &GeneralSolution {
                theta: theta.into(),
            },
            z,
        )?;
        Ok(())
    })
}

/// `v_g(z) = R(e^{−iπz²/2} + θ e^{iπz²/2})`.
#[no_mangle]
pub unsafe extern "C" fn cornu_v_general(
    z: f64,
    theta: CornuComplex,
    amplitude: f64,
    out: *mut CornuComplex,
) -> CornuStatus {
    require!(out);
    guard(|| {
        if !z.is_finite() {
            return Err(Error::Domain {
                name: "z",
                value: z,
                reason: "must be finite",
            });
        }
        *out = riccati::v_general(z, theta.into(), amplitude).into();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cornu_deformed_point(
    z: f64,
    param: CornuParameter,
    out: *mut CornuPoint,
) -> CornuStatus {
    require!(out);
    guard(|| {
        *out = spiral::deformed_point(z, &param.into())?.into();
        Ok(())
    })
}

/// Signed curvature of the deformed spiral at `z`.
#[no_mangle]
pub unsafe extern "C" fn cornu_curvature(
    param: CornuParameter,
    z: f64,
    out: *mut f64,
) -> CornuStatus {
    require!(out);
    guard(|| {
        *out = spiral::curvature(&param.into(), z)?;
        Ok(())
    })
}

/// Limit point for `z → +∞` (`positive = true`) or `z → −∞`.
#[no_mangle]
pub unsafe extern "C" fn cornu_asymptotic_focus(
    param: CornuParameter,
    positive: bool,
    out_x: *mut f64,
    out_y: *mut f64,
) -> CornuStatus {
    require!(out_x, out_y);
    guard(|| {
        let arm = if positive {
            Arm::Positive
        } else {
            Arm::Negative
        };
        let (x, y) = spiral::asymptotic_focus(&param.into(), arm);
        *out_x = x;
        *out_y = y;
        Ok(())
    })
}

/// Sample `count` points on `[z_min, z_max]`. On success `*out` owns a new
/// handle to release with [`cornu_curve_free`].
#[no_mangle]
pub unsafe extern "C" fn cornu_curve_sample(
    param: CornuParameter,
    z_min: f64,
    z_max: f64,
    count: usize,
    out: *mut *mut CornuCurve,
) -> CornuStatus {
    require!(out);
    guard(|| {
        let curve = spiral::sample_spiral(&param.into(), z_min, z_max, count)?;
        let handle = CornuCurve {
            points: curve.points.into_iter().map(CornuPoint::from).collect(),
        };
        *out = Box::into_raw(Box::new(handle));
        Ok(())
    })
}

/// Number of points; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn cornu_curve_len(curve: *const CornuCurve) -> usize {
    curve.as_ref().map_or(0, |c| c.points.len())
}

/// Borrowed pointer to the contiguous point array, valid until the handle is
/// freed; NULL for a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn cornu_curve_points(curve: *const CornuCurve) -> *const CornuPoint {
    curve.as_ref().map_or(ptr::null(), |c| c.points.as_ptr())
}

#[no_mangle]
pub unsafe extern "C" fn cornu_curve_get(
    curve: *const CornuCurve,
    index: usize,
    out: *mut CornuPoint,
) -> CornuStatus {
    require!(curve, out);
    match (&*curve).points.get(index) {
        Some(p) => {
            *out = *p;
            CornuStatus::Ok
        }
        None => {
            set_last_error(format!("index {index} out of range"));
            CornuStatus::IndexOutOfRange
        }
    }
}

#[no_mangle]
pub unsafe extern "C" fn cornu_curve_free(curve: *mut CornuCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// `Δ(z; φ)`.
#[no_mangle]
pub unsafe extern "C" fn cornu_darboux_distortion(z: f64, phi: f64, out: *mut f64) -> CornuStatus {
    require!(out);
    guard(|| {
        *out = darboux::darboux_distortion(z, phi)?;
        Ok(())
    })
}

/// Partner solution `Ψ̃(z; φ)` with constants `b1`, `b2`.
#[no_mangle]
pub unsafe extern "C" fn cornu_partner_psi(
    z: f64,
    phi: f64,
    b1: f64,
    b2: f64,
    out: *mut f64,
) -> CornuStatus {
    require!(out);
    guard(|| {
        *out = darboux::partner_psi(z, phi, b1, b2)?;
        Ok(())
    })
}

/// Sample `Δ(z; φ)`; pole guard bands are dropped. On success `*out` owns a
/// new handle to release with [`cornu_profile_free`].
#[no_mangle]
pub unsafe extern "C" fn cornu_profile_sample(
    phi: f64,
    z_min: f64,
    z_max: f64,
    count: usize,
    out: *mut *mut CornuProfile,
) -> CornuStatus {
    require!(out);
    guard(|| {
        let profile = darboux::sample_distortion(phi, z_min, z_max, count)?;
        let handle = CornuProfile {
            breaks: profile.break_flags(),
            samples: profile.samples,
            pole_breaks: profile.pole_breaks,
        };
        *out = Box::into_raw(Box::new(handle));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cornu_profile_len(profile: *const CornuProfile) -> usize {
    profile.as_ref().map_or(0, |p| p.samples.len())
}

/// Sample `index`: `z`, `Δ`, and whether a pole separates it from the
/// previous sample.
#[no_mangle]
pub unsafe extern "C" fn cornu_profile_get(
    profile: *const CornuProfile,
    index: usize,
    out_z: *mut f64,
    out_delta: *mut f64,
    out_break: *mut bool,
) -> CornuStatus {
    require!(profile, out_z, out_delta, out_break);
    let p = &*profile;
    match p.samples.get(index) {
        Some(&(z, d)) => {
            *out_z = z;
            *out_delta = d;
            *out_break = p.breaks[index];
            CornuStatus::Ok
        }
        None => {
            set_last_error(format!("index {index} out of range"));
            CornuStatus::IndexOutOfRange
        }
    }
}

/// Number of excluded pole intervals inside the sampled range.
#[no_mangle]
pub unsafe extern "C" fn cornu_profile_pole_count(profile: *const CornuProfile) -> usize {
    profile.as_ref().map_or(0, |p| p.pole_breaks.len())
}

#[no_mangle]
pub unsafe extern "C" fn cornu_profile_pole(
    profile: *const CornuProfile,
    index: usize,
    out_lo: *mut f64,
    out_hi: *mut f64,
) -> CornuStatus {
    require!(profile, out_lo, out_hi);
    match (&*profile).pole_breaks.get(index) {
        Some(&(lo, hi)) => {
            *out_lo = lo;
            *out_hi = hi;
            CornuStatus::Ok
        }
        None => {
            set_last_error(format!("index {index} out of range"));
            CornuStatus::IndexOutOfRange
        }
    }
}

#[no_mangle]
pub unsafe extern "C" fn cornu_profile_free(profile: *mut CornuProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}
