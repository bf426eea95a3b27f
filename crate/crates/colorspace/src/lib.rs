//! Mapping from bead values (expectation values in `[−1, 1]`) to colors.
//!
//! Every diverging scheme is black at 0 and reaches its positive hue at +1
//! and its negative hue at −1. Discontinuous schemes quantize `|v|` into ten
//! bands of width 0.1 and switch to a brighter terminal color for
//! `|v| > 0.995`. The anchor table is fixed here and pinned by golden tests:
//! band `k ∈ 1..=10` is the hue scaled by `0.9 k / 10`, and the terminal color
//! is the hue with 25% white added.

mod blend;
mod rgb;
mod scheme;

pub use blend::{blend_total, blend_total_with, correlation_angle};
pub use rgb::Rgb;
pub use scheme::{
    band_index, parity_probability, scheme_color, ColorError, ColorScheme, BAND_COUNT, BAND_WIDTH,
    TERMINAL_THRESHOLD,
};
