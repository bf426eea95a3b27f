//! Display variants A–J: which beads, colors, symmetries and arcs a scene shows.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{RenderError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub enum DisplayVariant {
    /// Q- and T-Beads, separated symmetries, total-correlation color wheel.
    #[default]
    A,
    /// As A with a single red-green scheme.
    B,
    /// As A with even/odd and symmetric/antisymmetric parts merged.
    C,
    /// Q-, E- and C-Beads, separated symmetries.
    D,
    /// Q-, E- and C-Beads, merged symmetries.
    E,
    /// Q- and E-Beads, separated symmetries.
    F,
    /// Q- and E-Beads, merged symmetries.
    G,
    /// Q-Beads and fully permutation symmetric E-Beads.
    H,
    /// Q-Beads with entanglement arcs.
    I,
    /// Q-Beads only.
    J,
}

/// Kind of a displayed bead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BeadKind {
    /// The identity bead `{∅}`.
    #[serde(rename = "identity")]
    Identity,
    /// Single-qubit bead.
    Q,
    /// Total correlation.
    T,
    /// Connected correlation.
    E,
    /// Compound correlation.
    C,
}

impl BeadKind {
    pub fn prefix(self) -> &'static str {
        match self {
            BeadKind::Identity => "",
            BeadKind::Q => "Q",
            BeadKind::T => "T",
            BeadKind::E => "E",
            BeadKind::C => "C",
        }
    }
}

/// Color legend of a variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColorStyle {
    /// Total-correlation color wheel on T-Beads.
    TotalBlend,
    /// One scheme for every bead.
    Single,
    /// Q- and C-Beads on the primary scheme, E-Beads on its connected partner.
    Separate,
}

/// Which symmetry components are shown and how.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryDisplay {
    /// Every label as its own bead.
    Separated,
    /// Labels with the same subsystem and τ merged into one bead.
    Combined,
    /// Fully permutation symmetric multilinear labels only.
    FullySymmetric,
    /// No multilinear beads.
    QubitsOnly,
}

impl DisplayVariant {
    pub const ALL: [DisplayVariant; 10] = [
        DisplayVariant::A,
        DisplayVariant::B,
        DisplayVariant::C,
        DisplayVariant::D,
        DisplayVariant::E,
        DisplayVariant::F,
        DisplayVariant::G,
        DisplayVariant::H,
        DisplayVariant::I,
        DisplayVariant::J,
    ];

    pub fn letter(self) -> &'static str {
        use DisplayVariant::*;
        match self {
            A => "A",
            B => "B",
            C => "C",
            D => "D",
            E => "E",
            F => "F",
            G => "G",
            H => "H",
            I => "I",
            J => "J",
        }
    }

    /// Multilinear bead kinds in display order.
    pub fn correlation_kinds(self) -> &'static [BeadKind] {
        use DisplayVariant::*;
        match self {
            A | B | C => &[BeadKind::T],
            D | E => &[BeadKind::E, BeadKind::C],
            F | G | H => &[BeadKind::E],
            I | J => &[],
        }
    }

    pub fn has_arcs(self) -> bool {
        !matches!(self, DisplayVariant::J)
    }

    pub fn colors(self) -> ColorStyle {
        use DisplayVariant::*;
        match self {
            A | C => ColorStyle::TotalBlend,
            B | I | J => ColorStyle::Single,
            D | E | F | G | H => ColorStyle::Separate,
        }
    }

    pub fn symmetry(self) -> SymmetryDisplay {
        use DisplayVariant::*;
        match self {
            A | B | D | F => SymmetryDisplay::Separated,
            C | E | G => SymmetryDisplay::Combined,
            H => SymmetryDisplay::FullySymmetric,
            I | J => SymmetryDisplay::QubitsOnly,
        }
    }

    /// True when the exported beads determine the density operator.
    pub fn is_complete(self) -> bool {
        !matches!(self, DisplayVariant::H | DisplayVariant::I | DisplayVariant::J)
    }

    /// Merged beads may exceed `|b| ≤ 1` and need the extended color scale.
    pub fn extended_scale(self) -> bool {
        self.symmetry() == SymmetryDisplay::Combined
    }

    /// True when the variant needs the connected/compound split.
    pub fn needs_split(self) -> bool {
        self.colors() == ColorStyle::TotalBlend
            || self.has_arcs()
            || self.correlation_kinds().iter().any(|k| matches!(k, BeadKind::E | BeadKind::C))
    }
}

impl fmt::Display for DisplayVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for DisplayVariant {
    type Err = RenderError;
    fn from_str(s: &str) -> Result<Self> {
        DisplayVariant::ALL
            .iter()
            .copied()
            .find(|v| v.letter().eq_ignore_ascii_case(s))
            .ok_or_else(|| RenderError::UnknownVariant(s.to_string()))
    }
}
