use serde::{Deserialize, Serialize};

/// Linear RGB with components in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rgb {
    pub r: f64,
    pub g: f64,
    pub b: f64,
}

impl Rgb {
    pub const BLACK: Rgb = Rgb::new(0.0, 0.0, 0.0);
    pub const WHITE: Rgb = Rgb::new(1.0, 1.0, 1.0);
    pub const GREY: Rgb = Rgb::new(0.5, 0.5, 0.5);
    pub const RED: Rgb = Rgb::new(1.0, 0.0, 0.0);
    pub const GREEN: Rgb = Rgb::new(0.0, 1.0, 0.0);
    pub const YELLOW: Rgb = Rgb::new(1.0, 1.0, 0.0);
    pub const BLUE: Rgb = Rgb::new(0.0, 0.0, 1.0);

    pub const fn new(r: f64, g: f64, b: f64) -> Self {
        Rgb { r, g, b }
    }

    pub fn scale(self, s: f64) -> Self {
        Rgb::new(self.r * s, self.g * s, self.b * s)
    }

    /// `self + t (other − self)`.
    pub fn lerp(self, other: Rgb, t: f64) -> Self {
        Rgb::new(
            self.r + t * (other.r - self.r),
            self.g + t * (other.g - self.g),
            self.b + t * (other.b - self.b),
        )
    }

    pub fn clamped(self) -> Self {
        Rgb::new(self.r.clamp(0.0, 1.0), self.g.clamp(0.0, 1.0), self.b.clamp(0.0, 1.0))
    }

    /// 8-bit channels, rounded.
    pub fn to_u8(self) -> [u8; 3] {
        let c = self.clamped();
        [c.r, c.g, c.b].map(|x| (x * 255.0).round() as u8)
    }

    pub fn from_u8(c: [u8; 3]) -> Self {
        Rgb::new(c[0] as f64 / 255.0, c[1] as f64 / 255.0, c[2] as f64 / 255.0)
    }

    /// `#rrggbb`.
    pub fn to_hex(self) -> String {
        let [r, g, b] = self.to_u8();
        format!("#{r:02x}{g:02x}{b:02x}")
    }

    pub fn max_diff(self, other: Rgb) -> f64 {
        (self.r - other.r).abs().max((self.g - other.g).abs()).max((self.b - other.b).abs())
    }
}
