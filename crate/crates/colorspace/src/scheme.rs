use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rgb::Rgb;

/// Width of one band in discontinuous schemes.
pub const BAND_WIDTH: f64 = 0.1;
/// Bands per sign.
pub const BAND_COUNT: usize = 10;
/// `|v|` above this uses the terminal color.
pub const TERMINAL_THRESHOLD: f64 = 0.995;
/// High-contrast schemes show `|v|` at or below this as "zero".
const HIGH_CONTRAST_ZERO: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("unknown color scheme {0}")]
    UnknownScheme(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColorScheme {
    /// Default for Q-Beads and compound correlations.
    RedGreenDiscontinuous,
    /// Default for connected correlations.
    YellowBlueDiscontinuous,
    RedGreenContinuous,
    YellowBlueContinuous,
    /// Linear red–black–green interpolation.
    DropsLinear,
    /// Linear yellow–black–blue interpolation, the connected partner of `DropsLinear`.
    DropsLinearYellowBlue,
    RedBlueDiscontinuous,
    YellowGreenDiscontinuous,
    /// White for positive, black for negative, grey near zero.
    BlackWhiteHighContrast,
    RedGreenHighContrast,
    YellowBlueHighContrast,
    RedBlueHighContrast,
    YellowGreenHighContrast,
    /// Experimental: red–green bands with edges at `sin(9° k)`, so that a pure
    /// Q-Bead shows bands at equal angular spacing from its pole.
    RedGreenEquiangular,
}

#[derive(Clone, Copy)]
enum Style {
    Discontinuous,
    Continuous,
    Linear,
    HighContrast,
    Equiangular,
}

impl ColorScheme {
    pub const ALL: [ColorScheme; 14] = [
        ColorScheme::RedGreenDiscontinuous,
        ColorScheme::YellowBlueDiscontinuous,
        ColorScheme::RedGreenContinuous,
        ColorScheme::YellowBlueContinuous,
        ColorScheme::DropsLinear,
        ColorScheme::DropsLinearYellowBlue,
        ColorScheme::RedBlueDiscontinuous,
        ColorScheme::YellowGreenDiscontinuous,
        ColorScheme::BlackWhiteHighContrast,
        ColorScheme::RedGreenHighContrast,
        ColorScheme::YellowBlueHighContrast,
        ColorScheme::RedBlueHighContrast,
        ColorScheme::YellowGreenHighContrast,
        ColorScheme::RedGreenEquiangular,
    ];

    /// Stable identifier used in CLI flags and the session protocol.
    pub fn id(self) -> &'static str {
        match self {
            ColorScheme::RedGreenDiscontinuous => "red-green-discontinuous",
            ColorScheme::YellowBlueDiscontinuous => "yellow-blue-discontinuous",
            ColorScheme::RedGreenContinuous => "red-green-continuous",
            ColorScheme::YellowBlueContinuous => "yellow-blue-continuous",
            ColorScheme::DropsLinear => "drops-linear",
            ColorScheme::DropsLinearYellowBlue => "drops-linear-yellow-blue",
            ColorScheme::RedBlueDiscontinuous => "red-blue-discontinuous",
            ColorScheme::YellowGreenDiscontinuous => "yellow-green-discontinuous",
            ColorScheme::BlackWhiteHighContrast => "black-white-high-contrast",
            ColorScheme::RedGreenHighContrast => "red-green-high-contrast",
            ColorScheme::YellowBlueHighContrast => "yellow-blue-high-contrast",
            ColorScheme::RedBlueHighContrast => "red-blue-high-contrast",
            ColorScheme::YellowGreenHighContrast => "yellow-green-high-contrast",
            ColorScheme::RedGreenEquiangular => "red-green-equiangular",
        }
    }

    /// `(positive hue, negative hue)`.
    pub fn hues(self) -> (Rgb, Rgb) {
        use ColorScheme::*;
        match self {
            RedGreenDiscontinuous | RedGreenContinuous | DropsLinear | RedGreenHighContrast | RedGreenEquiangular => {
                (Rgb::RED, Rgb::GREEN)
            }
            YellowBlueDiscontinuous | YellowBlueContinuous | DropsLinearYellowBlue | YellowBlueHighContrast => {
                (Rgb::YELLOW, Rgb::BLUE)
            }
            RedBlueDiscontinuous | RedBlueHighContrast => (Rgb::RED, Rgb::BLUE),
            YellowGreenDiscontinuous | YellowGreenHighContrast => (Rgb::YELLOW, Rgb::GREEN),
            BlackWhiteHighContrast => (Rgb::WHITE, Rgb::BLACK),
        }
    }

    fn style(self) -> Style {
        use ColorScheme::*;
        match self {
            RedGreenDiscontinuous | YellowBlueDiscontinuous | RedBlueDiscontinuous | YellowGreenDiscontinuous => {
                Style::Discontinuous
            }
            RedGreenContinuous | YellowBlueContinuous => Style::Continuous,
            DropsLinear | DropsLinearYellowBlue => Style::Linear,
            BlackWhiteHighContrast | RedGreenHighContrast | YellowBlueHighContrast | RedBlueHighContrast
            | YellowGreenHighContrast => Style::HighContrast,
            RedGreenEquiangular => Style::Equiangular,
        }
    }

    pub fn is_discontinuous(self) -> bool {
        matches!(self.style(), Style::Discontinuous | Style::Equiangular)
    }

    pub fn is_experimental(self) -> bool {
        matches!(self, ColorScheme::RedGreenEquiangular)
    }

    /// The scheme used for connected correlations alongside this one.
    pub fn connected_partner(self) -> ColorScheme {
        use ColorScheme::*;
        match self {
            RedGreenDiscontinuous | RedGreenEquiangular => YellowBlueDiscontinuous,
            RedGreenContinuous => YellowBlueContinuous,
            DropsLinear => DropsLinearYellowBlue,
            RedBlueDiscontinuous => YellowGreenDiscontinuous,
            RedGreenHighContrast => YellowBlueHighContrast,
            RedBlueHighContrast => YellowGreenHighContrast,
            other => other,
        }
    }
}

impl fmt::Display for ColorScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ColorScheme {
    type Err = ColorError;
    fn from_str(s: &str) -> Result<Self, ColorError> {
        ColorScheme::ALL
            .iter()
            .copied()
            .find(|c| c.id() == s)
            .ok_or_else(|| ColorError::UnknownScheme(s.to_string()))
    }
}

/// Bit parity probability `p = (1 − v)/2`, clamped to `[0, 1]`.
pub fn parity_probability(v: f64) -> f64 {
    ((1.0 - v.clamp(-1.0, 1.0)) / 2.0).clamp(0.0, 1.0)
}

fn equiangular_edge(k: usize) -> f64 {
    (9.0 * k as f64).to_radians().sin()
}

/// Band of `|v|` in a discontinuous scheme: 0 for exactly zero, 1..=10 for the
/// regular bands, 11 for the terminal color. `None` for continuous schemes.
pub fn band_index(v: f64, scheme: ColorScheme) -> Option<usize> {
    let a = v.clamp(-1.0, 1.0).abs();
    let band = match scheme.style() {
        Style::Discontinuous => {
            if a > TERMINAL_THRESHOLD {
                BAND_COUNT + 1
            } else {
                ((a / BAND_WIDTH - 1e-12).ceil().max(0.0) as usize).min(BAND_COUNT)
            }
        }
        Style::Equiangular => {
            if a > TERMINAL_THRESHOLD {
                BAND_COUNT + 1
            } else if a == 0.0 {
                0
            } else {
                (1..=BAND_COUNT)
                    .find(|&k| a <= equiangular_edge(k) + 1e-12)
                    .unwrap_or(BAND_COUNT)
            }
        }
        _ => return None,
    };
    Some(band)
}

fn terminal(hue: Rgb) -> Rgb {
    hue.lerp(Rgb::WHITE, 0.25)
}

fn band_color(hue: Rgb, band: usize) -> Rgb {
    match band {
        0 => Rgb::BLACK,
        b if b > BAND_COUNT => terminal(hue),
        b => hue.scale(0.9 * b as f64 / BAND_COUNT as f64),
    }
}

/// Color of value `v` (clamped to `[−1, 1]`).
pub fn scheme_color(v: f64, scheme: ColorScheme) -> Rgb {
    let v = if v.is_nan() { 0.0 } else { v.clamp(-1.0, 1.0) };
    let (pos, neg) = scheme.hues();
    let hue = if v >= 0.0 { pos } else { neg };
    let a = v.abs();
    match scheme.style() {
        Style::Discontinuous | Style::Equiangular => {
            band_color(hue, band_index(v, scheme).expect("banded scheme"))
        }
        Style::Continuous => hue.scale(a.sqrt()),
        Style::Linear => hue.scale(a),
        Style::HighContrast => {
            if a <= HIGH_CONTRAST_ZERO {
                if scheme == ColorScheme::BlackWhiteHighContrast {
                    Rgb::GREY
                } else {
                    Rgb::BLACK
                }
            } else {
                hue
            }
        }
    }
}
