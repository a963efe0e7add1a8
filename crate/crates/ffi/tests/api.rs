use std::ffi::CStr;
use std::ptr;

use cornu_ffi::*;

#[test]
fn fresnel_matches_core() {
    let (mut c, mut s) = (0.0, 0.0);
    let status = unsafe { cornu_fresnel(1.0, &mut c, &mut s) };
    assert_eq!(status, CornuStatus::Ok);
    let pair = cornu::fresnel::fresnel(1.0).unwrap();
    assert_eq!((c, s), (pair.c, pair.s));
}

#[test]
fn null_output_is_reported() {
    let status = unsafe { cornu_fresnel(1.0, ptr::null_mut(), ptr::null_mut()) };
    assert_eq!(status, CornuStatus::NullPointer);
}

#[test]
fn errors_set_last_message() {
    let mut out = CornuComplex { re: 0.0, im: 0.0 };
    let status =
        unsafe { cornu_riccati_general(f64::NAN, CornuComplex { re: 1.0, im: 0.0 }, &mut out) };
    assert_eq!(status, CornuStatus::Domain);
    let message = unsafe { CStr::from_ptr(cornu_last_error_message()) };
    assert!(!message.to_bytes().is_empty());
    let text = unsafe { CStr::from_ptr(cornu_status_message(CornuStatus::Pole)) };
    assert_eq!(text.to_str().unwrap(), "pole");
}

#[test]
fn pole_status() {
    let mut out = 0.0;
    assert_eq!(
        unsafe { cornu_darboux_distortion(1.0, 0.0, &mut out) },
        CornuStatus::Pole
    );
    assert_eq!(
        unsafe { cornu_darboux_distortion(0.5, 0.0, &mut out) },
        CornuStatus::Ok
    );
    assert_eq!(out, cornu::darboux::darboux_distortion(0.5, 0.0).unwrap());
}

#[test]
fn curve_handle_lifecycle() {
    let param = cornu_parameter_new(0.0, 0.0);
    assert_eq!(param.scale, 1.0);
    let mut curve = ptr::null_mut();
    let status = unsafe { cornu_curve_sample(param, -1.0, 1.0, 5, &mut curve) };
    assert_eq!(status, CornuStatus::Ok);
    unsafe {
        assert_eq!(cornu_curve_len(curve), 5);
        let points = std::slice::from_raw_parts(cornu_curve_points(curve), 5);
        assert_eq!(points[2].x, 0.0);
        let mut p = CornuPoint {
            arclength: 0.0,
            x: 0.0,
            y: 0.0,
            modulus_sq: 0.0,
        };
        assert_eq!(cornu_curve_get(curve, 4, &mut p), CornuStatus::Ok);
        assert_eq!(p.arclength, 1.0);
        assert_eq!(
            cornu_curve_get(curve, 5, &mut p),
            CornuStatus::IndexOutOfRange
        );
        cornu_curve_free(curve);
        cornu_curve_free(ptr::null_mut());
        assert_eq!(cornu_curve_len(ptr::null()), 0);
    }
}

#[test]
fn bad_sample_count() {
    let mut curve = ptr::null_mut();
    let status =
        unsafe { cornu_curve_sample(cornu_parameter_new(1.0, 0.0), 0.0, 1.0, 1, &mut curve) };
    assert_eq!(status, CornuStatus::InvalidArgument);
    assert!(curve.is_null());
}

#[test]
fn profile_handle_reports_breaks() {
    let mut profile = ptr::null_mut();
    unsafe {
        assert_eq!(
            cornu_profile_sample(0.0, 0.1, 2.0, 400, &mut profile),
            CornuStatus::Ok
        );
        assert_eq!(cornu_profile_pole_count(profile), 2);
        let (mut lo, mut hi) = (0.0, 0.0);
        assert_eq!(
            cornu_profile_pole(profile, 0, &mut lo, &mut hi),
            CornuStatus::Ok
        );
        assert!(lo < 1.0 && 1.0 < hi);
        let mut breaks = 0;
        for i in 0..cornu_profile_len(profile) {
            let (mut z, mut d, mut b) = (0.0, 0.0, false);
            assert_eq!(
                cornu_profile_get(profile, i, &mut z, &mut d, &mut b),
                CornuStatus::Ok
            );
            breaks += b as usize;
        }
        assert_eq!(breaks, 2);
        cornu_profile_free(profile);
    }
}

#[test]
fn focus_and_curvature() {
    let param = cornu_parameter_new(1e12, 0.0);
    let (mut x, mut y, mut k) = (0.0, 0.0, 0.0);
    unsafe {
        assert_eq!(
            cornu_asymptotic_focus(param, true, &mut x, &mut y),
            CornuStatus::Ok
        );
        assert_eq!(cornu_curvature(param, 1.0, &mut k), CornuStatus::Ok);
    }
    assert!((x - 0.5).abs() < 1e-9 && (y - 0.5).abs() < 1e-9);
    assert!((k / std::f64::consts::PI - 1.0).abs() < 1e-6);
}

#[test]
fn header_declares_api() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/cornu.h")).unwrap();
    for name in [
        "cornu_fresnel",
        "cornu_curve_free",
        "cornu_profile_get",
        "CORNU_STATUS_POLE",
        "CornuCurve",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
