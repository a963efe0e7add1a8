//! Argument reduction for the chirp phases `πz²/2` and `πz²`.
//!
//! Large arguments are reduced modulo a full turn before the trigonometric
//! call: `z²` is split into an exact double-double with a fused multiply-add,
//! the high part is reduced modulo 4 quarter turns (exact in binary), and only
//! then multiplied by `π/2`. This keeps `cos(πz²/2)` accurate to a few ulps
//! even at `z = 200`, and puts the zeros of `cos(πz²/2)` exactly where `z²`
//! is an odd integer.

use std::f64::consts::FRAC_PI_2;

/// `multiplier · z²` reduced to `[0, 4)` quarter turns.
fn quarter_turns(z: f64, multiplier: f64) -> f64 {
    let hi = z * z;
    let lo = z.mul_add(z, -hi);
    let (hi, lo) = (hi * multiplier, lo * multiplier);
    let reduced = hi - 4.0 * (hi / 4.0).floor();
    reduced + lo
}

/// `πz²/2 + shift`, reduced.
pub fn half_pi_sq(z: f64, shift: f64) -> f64 {
    FRAC_PI_2 * quarter_turns(z, 1.0) + shift
}

/// `πz² + shift`, reduced.
pub fn pi_sq(z: f64, shift: f64) -> f64 {
    FRAC_PI_2 * quarter_turns(z, 2.0) + shift
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn reduction_matches_direct_for_small_arguments() {
        for &z in &[0.0, 0.3, -0.9, 1.7, 2.2] {
            let direct = PI * z * z / 2.0;
            assert!((half_pi_sq(z, 0.0).sin() - direct.sin()).abs() < 1e-15);
            assert!((pi_sq(z, 0.25).cos() - (2.0 * direct + 0.25).cos()).abs() < 1e-14);
        }
    }

    #[test]
    fn odd_square_lands_on_cosine_zero() {
        for k in [1.0f64, 3.0, 5.0, 101.0] {
            let z = k.sqrt();
            // √k is rounded, so z² misses k by a few ulps
            assert!(half_pi_sq(z, 0.0).cos().abs() < 1e-15 * k, "z² = {k}");
        }
        // 200² = 40000 quarter turns: a whole number of turns
        assert_eq!(half_pi_sq(200.0, 0.0), 0.0);
    }
}
