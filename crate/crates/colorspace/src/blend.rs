//! Total-correlation colors blended from compound and connected scales.

use std::f64::consts::{FRAC_PI_2, TAU};

use crate::rgb::Rgb;
use crate::scheme::{scheme_color, ColorScheme};

/// `φ_corr`: the four-quadrant angle of the point `(C, E)` in `[0, 2π)`; 0 at the origin.
pub fn correlation_angle(e: f64, c: f64) -> f64 {
    if e == 0.0 && c == 0.0 {
        return 0.0;
    }
    e.atan2(c).rem_euclid(TAU)
}

/// T-Bead color with the default schemes (red-green for C, yellow-blue for E).
pub fn blend_total(e: f64, c: f64) -> Rgb {
    blend_total_with(e, c, ColorScheme::RedGreenDiscontinuous, ColorScheme::YellowBlueDiscontinuous)
}

/// Read `Γ_C` at `sgn(C)|T|` and `Γ_E` at `sgn(E)|T|`, then blend with weight
/// `2ϑ/π`, `ϑ = atan(|E|/|C|)`.
pub fn blend_total_with(e: f64, c: f64, compound: ColorScheme, connected: ColorScheme) -> Rgb {
    let t = (e + c).abs();
    let sign = |x: f64| if x < 0.0 { -1.0 } else { 1.0 };
    let gamma_c = scheme_color(sign(c) * t, compound);
    let gamma_e = scheme_color(sign(e) * t, connected);
    let theta = if e == 0.0 && c == 0.0 { 0.0 } else { e.abs().atan2(c.abs()) };
    gamma_c.lerp(gamma_e, theta / FRAC_PI_2)
}
