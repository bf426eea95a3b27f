//! Bead labels: subsystem, trilinear permutation class and point parity.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{LisaError, Result};

/// Trilinear permutation-symmetry class. `T1` is fully symmetric, `T4` fully antisymmetric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tau {
    T1,
    T2,
    T3,
    T4,
}

impl Tau {
    pub fn index(self) -> usize {
        match self {
            Tau::T1 => 1,
            Tau::T2 => 2,
            Tau::T3 => 3,
            Tau::T4 => 4,
        }
    }
}

/// Behaviour of the bead's spherical function under inversion `r → -r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// `+1` for even, `-1` for odd.
    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }

    pub fn of_rank(j: usize) -> Parity {
        if j.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// Symmetry-adapted label ℓ′ of a group of LISA operators.
///
/// Qubit indices are 0-based; the display form uses 1-based numbers, e.g.
/// `{1,2}even` or `{1,2,3 tau1}odd`. The empty subsystem prints as `{}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BeadLabel {
    subsystem: Vec<usize>,
    tau: Option<Tau>,
    parity: Parity,
}

impl BeadLabel {
    /// Validating constructor.
    pub fn new(mut subsystem: Vec<usize>, tau: Option<Tau>, parity: Parity) -> Result<Self> {
        subsystem.sort_unstable();
        subsystem.dedup();
        let label = BeadLabel {
            subsystem,
            tau,
            parity,
        };
        let ok = match (label.subsystem.len(), tau, parity) {
            (0, None, Parity::Even) | (1, None, Parity::Odd) | (2, None, _) => true,
            (3, Some(Tau::T1), Parity::Odd) => true,
            (3, Some(Tau::T2 | Tau::T3), _) => true,
            (3, Some(Tau::T4), Parity::Even) => true,
            _ => false,
        };
        if ok {
            Ok(label)
        } else {
            Err(LisaError::InvalidLabel(format!("{label}")))
        }
    }

    pub fn identity() -> Self {
        BeadLabel {
            subsystem: vec![],
            tau: None,
            parity: Parity::Even,
        }
    }

    pub fn single(k: usize) -> Self {
        BeadLabel {
            subsystem: vec![k],
            tau: None,
            parity: Parity::Odd,
        }
    }

    pub fn pair(k: usize, l: usize, parity: Parity) -> Self {
        BeadLabel::new(vec![k, l], None, parity).expect("pair label")
    }

    pub fn triple(tau: Tau, parity: Parity) -> Result<Self> {
        BeadLabel::new(vec![0, 1, 2], Some(tau), parity)
    }

    pub fn subsystem(&self) -> &[usize] {
        &self.subsystem
    }

    pub fn tau(&self) -> Option<Tau> {
        self.tau
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Number of qubits the label's operators act on nontrivially.
    pub fn linearity(&self) -> usize {
        self.subsystem.len()
    }

    /// Ranks `j` carried by the label.
    pub fn ranks(&self) -> &'static [usize] {
        match (self.subsystem.len(), self.tau, self.parity) {
            (0, _, _) => &[0],
            (1, _, _) => &[1],
            (2, _, Parity::Even) => &[0, 2],
            (2, _, Parity::Odd) => &[1],
            (3, Some(Tau::T1), _) => &[1, 3],
            (3, Some(Tau::T2 | Tau::T3), Parity::Odd) => &[1],
            (3, Some(Tau::T2 | Tau::T3), Parity::Even) => &[2],
            (3, Some(Tau::T4), _) => &[0],
            _ => unreachable!("validated label"),
        }
    }

    /// True for the beads whose value along a direction is a product expectation
    /// of identical local spin measurements: `{k,l}even` and `{k,l,m τ1}odd`.
    pub fn is_fully_symmetric(&self) -> bool {
        matches!(
            (self.subsystem.len(), self.tau, self.parity),
            (2, None, Parity::Even) | (3, Some(Tau::T1), Parity::Odd)
        )
    }

    /// Q-Bead label (a single qubit).
    pub fn is_single_qubit(&self) -> bool {
        self.subsystem.len() == 1
    }

    pub fn is_identity(&self) -> bool {
        self.subsystem.is_empty()
    }

    /// Correlation label (two or more qubits).
    pub fn is_multilinear(&self) -> bool {
        self.subsystem.len() >= 2
    }

    /// Check that every qubit index fits an `n`-qubit register.
    pub fn validate_for(&self, n: usize) -> Result<()> {
        if self.subsystem.iter().any(|&q| q >= n) || (self.linearity() == 3 && n != 3) {
            return Err(LisaError::InvalidLabel(format!("{self} for {n} qubits")));
        }
        Ok(())
    }

    fn sort_key(&self) -> (usize, &[usize], usize, Parity) {
        (
            self.subsystem.len(),
            &self.subsystem,
            self.tau.map_or(0, Tau::index),
            self.parity,
        )
    }
}

impl PartialOrd for BeadLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BeadLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for BeadLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let qubits: Vec<String> = self.subsystem.iter().map(|q| (q + 1).to_string()).collect();
        write!(f, "{{{}", qubits.join(","))?;
        if let Some(t) = self.tau {
            write!(f, " tau{}", t.index())?;
        }
        write!(f, "}}")?;
        if self.subsystem.len() >= 2 {
            write!(f, "{}", self.parity.as_str())?;
        }
        Ok(())
    }
}

impl FromStr for BeadLabel {
    type Err = LisaError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || LisaError::InvalidLabel(s.to_string());
        let s = s.trim();
        if matches!(s, "{}" | "{∅}" | "empty") {
            return Ok(BeadLabel::identity());
        }
        let open = s.strip_prefix('{').ok_or_else(bad)?;
        let close = open.find('}').ok_or_else(bad)?;
        let (inner, suffix) = (&open[..close], &open[close + 1..]);
        let (qubit_part, tau) = match inner.split_once(' ') {
            Some((q, t)) => {
                let t = t.trim().trim_start_matches("tau").trim_start_matches('τ');
                let tau = match t {
                    "1" => Tau::T1,
                    "2" => Tau::T2,
                    "3" => Tau::T3,
                    "4" => Tau::T4,
                    _ => return Err(bad()),
                };
                (q, Some(tau))
            }
            None => (inner, None),
        };
        let subsystem = qubit_part
            .split(',')
            .map(|q| q.trim().parse::<usize>().ok().filter(|&q| q >= 1).map(|q| q - 1))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(bad)?;
        let parity = match (suffix, subsystem.len()) {
            ("", 1) => Parity::Odd,
            ("even", n) if n >= 2 => Parity::Even,
            ("odd", n) if n >= 2 => Parity::Odd,
            _ => return Err(bad()),
        };
        let label = BeadLabel::new(subsystem, tau, parity).map_err(|_| bad())?;
        if label.to_string() != s.replace('τ', "tau") {
            return Err(bad());
        }
        Ok(label)
    }
}

impl Serialize for BeadLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BeadLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
