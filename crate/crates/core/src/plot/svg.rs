//! Minimal SVG writer for Argand plots and distortion profiles.
//!
//! Presentation only: coordinates are printed with five decimals. Every
//! curve, and every pole-separated branch of a profile, is its own `<path>`.

use std::fmt::Write as _;

use crate::darboux::DistortionProfile;
use crate::spiral::SpiralPoint;

/// Half-width of the square Argand viewport.
pub const ARGAND_EXTENT: f64 = 1.2;

const PANEL: f64 = 320.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

pub struct Curve<'a> {
    pub points: &'a [SpiralPoint],
    pub label: String,
}

fn open(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#
    );
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn path_data<I: IntoIterator<Item = (f64, f64)>>(points: I) -> String {
    let mut d = String::new();
    for (i, (x, y)) in points.into_iter().enumerate() {
        let _ = write!(d, "{}{:.5},{:.5}", if i == 0 { "M" } else { " L" }, x, y);
    }
    d
}

/// One square Argand panel at pixel offset `(x0, y0)`; the nested viewport
/// spans `[−1.2, 1.2]²` with `y` pointing up.
fn argand_panel(out: &mut String, x0: f64, y0: f64, title: &str, curves: &[Curve<'_>]) {
    let e = ARGAND_EXTENT;
    let _ = writeln!(
        out,
        r#"<svg x="{x0}" y="{y0}" width="{PANEL}" height="{PANEL}" viewBox="{} {} {} {}">"#,
        -e,
        -e,
        2.0 * e,
        2.0 * e
    );
    let _ = writeln!(
        out,
        r##"<line x1="{}" y1="0" x2="{e}" y2="0" stroke="#bbbbbb" stroke-width="0.004"/>"##,
        -e
    );
    let _ = writeln!(
        out,
        r##"<line x1="0" y1="{}" x2="0" y2="{e}" stroke="#bbbbbb" stroke-width="0.004"/>"##,
        -e
    );
    let _ = writeln!(out, r#"<g transform="scale(1,-1)">"#);
    for (i, curve) in curves.iter().enumerate() {
        let d = path_data(curve.points.iter().map(|p| (p.x, p.y)));
        let _ = writeln!(
            out,
            r#"<path d="{d}" fill="none" stroke="{}" stroke-width="0.008"><title>{}</title></path>"#,
            PALETTE[i % PALETTE.len()],
            escape(&curve.label)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" font-size="0.11" font-family="sans-serif">{}</text>"#,
        -e + 0.05,
        -e + 0.15,
        escape(title)
    );
    let _ = writeln!(out, "</svg>");
}

/// Single Argand plot with any number of overlaid curves.
pub fn argand_svg(title: &str, curves: &[Curve<'_>]) -> String {
    let mut out = String::new();
    open(&mut out, PANEL, PANEL);
    argand_panel(&mut out, 0.0, 0.0, title, curves);
    out.push_str("</svg>\n");
    out
}

/// Panels laid out row-major in `columns` columns.
pub fn argand_grid_svg(panels: &[(String, Curve<'_>)], columns: usize) -> String {
    let columns = columns.max(1);
    let rows = panels.len().div_ceil(columns);
    let mut out = String::new();
    open(&mut out, PANEL * columns as f64, PANEL * rows as f64);
    for (i, (title, curve)) in panels.iter().enumerate() {
        let (r, c) = (i / columns, i % columns);
        argand_panel(
            &mut out,
            PANEL * c as f64,
            PANEL * r as f64,
            title,
            std::slice::from_ref(curve),
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Branches of `profile` in data coordinates with `Δ` clamped to
/// `[−clip, clip]`; this is exactly what [`distortion_svg`] draws.
pub fn display_branches(profile: &DistortionProfile, clip: f64) -> Vec<Vec<(f64, f64)>> {
    profile
        .branches()
        .into_iter()
        .map(|b| b.iter().map(|&(z, d)| (z, d.clamp(-clip, clip))).collect())
        .collect()
}

/// Distortion profiles stacked vertically, one panel each, ordinates clipped
/// to `[−clip, clip]`.
pub fn distortion_svg(
    profiles: &[(String, &DistortionProfile)],
    z_range: (f64, f64),
    clip: f64,
) -> String {
    let (width, height, margin) = (2.0 * PANEL, PANEL * 0.75, 24.0);
    let mut out = String::new();
    open(&mut out, width, height * profiles.len().max(1) as f64);
    let (z_min, z_max) = z_range;
    for (i, (title, profile)) in profiles.iter().enumerate() {
        let top = height * i as f64;
        let sx = |z: f64| margin + (z - z_min) / (z_max - z_min) * (width - 2.0 * margin);
        let sy = |d: f64| top + margin + (clip - d) / (2.0 * clip) * (height - 2.0 * margin);
        let _ = writeln!(
            out,
            r##"<line x1="{:.5}" y1="{:.5}" x2="{:.5}" y2="{:.5}" stroke="#bbbbbb"/>"##,
            sx(z_min),
            sy(0.0),
            sx(z_max),
            sy(0.0)
        );
        for branch in display_branches(profile, clip) {
            let d = path_data(branch.iter().map(|&(z, delta)| (sx(z), sy(delta))));
            let _ = writeln!(
                out,
                r#"<path d="{d}" fill="none" stroke="{}" stroke-width="1.2"/>"#,
                PALETTE[i % PALETTE.len()]
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="13" font-family="sans-serif">{}</text>"#,
            margin,
            top + margin - 6.0,
            escape(title)
        );
    }
    out.push_str("</svg>\n");
    out
}
