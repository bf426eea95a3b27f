//! Bead placement and entanglement arcs.
//!
//! Q-Beads sit in a row in qubit order. Bilinear beads hang below the midpoint
//! of the segment joining their two qubits, stacked downward when several
//! beads share a pair. Trilinear beads fill the rows below, one row per bead
//! kind, spread horizontally around the centroid of the qubits.

use serde::{Deserialize, Serialize};

use crate::variant::BeadKind;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayoutConfig {
    /// Distance between neighbouring bead centers.
    pub spacing: f64,
    /// Radius of a bead drawn with the sphere plot.
    pub bead_radius: f64,
    /// Arc thickness per unit component norm.
    pub arc_width: f64,
    /// Optional qubit positions replacing the default row, e.g. graph-shaped layouts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qubit_positions: Option<Vec<[f64; 3]>>,
}

impl Default for LayoutConfig {
    fn default() -> Self {
        LayoutConfig {
            spacing: 3.0,
            bead_radius: 1.0,
            arc_width: 0.25,
            qubit_positions: None,
        }
    }
}

/// What the layout needs to know about a bead.
#[derive(Debug, Clone, PartialEq)]
pub struct LayoutItem {
    pub kind: BeadKind,
    pub subsystem: Vec<usize>,
}

impl LayoutConfig {
    pub fn qubit_position(&self, q: usize) -> [f64; 3] {
        match &self.qubit_positions {
            Some(p) if q < p.len() => p[q],
            _ => [q as f64 * self.spacing, 0.0, 0.0],
        }
    }

    fn centroid(&self, qubits: &[usize]) -> [f64; 3] {
        let mut c = [0.0; 3];
        for &q in qubits {
            let p = self.qubit_position(q);
            for a in 0..3 {
                c[a] += p[a] / qubits.len() as f64;
            }
        }
        c
    }

    /// Center of each item, in input order.
    pub fn place(&self, items: &[LayoutItem]) -> Vec<[f64; 3]> {
        let d = self.spacing;
        let mut pair_stack: Vec<(Vec<usize>, usize)> = Vec::new();
        let mut out = vec![[0.0; 3]; items.len()];
        // Identity, Q and bilinear beads first.
        for (i, item) in items.iter().enumerate() {
            out[i] = match item.subsystem.len() {
                0 => {
                    let p = self.qubit_position(0);
                    [p[0] - d, p[1], p[2]]
                }
                1 => self.qubit_position(item.subsystem[0]),
                2 => {
                    let slot = match pair_stack.iter_mut().find(|(s, _)| *s == item.subsystem) {
                        Some((_, count)) => {
                            *count += 1;
                            *count - 1
                        }
                        None => {
                            pair_stack.push((item.subsystem.clone(), 1));
                            0
                        }
                    };
                    let c = self.centroid(&item.subsystem);
                    [c[0], c[1] - d * (1.0 + slot as f64), c[2]]
                }
                _ => continue,
            };
        }
        let top = 1 + pair_stack.iter().map(|(_, n)| *n).max().unwrap_or(0);
        let mut kinds: Vec<BeadKind> = Vec::new();
        for item in items.iter().filter(|it| it.subsystem.len() >= 3) {
            if !kinds.contains(&item.kind) {
                kinds.push(item.kind);
            }
        }
        for (row, kind) in kinds.iter().enumerate() {
            let members: Vec<usize> = (0..items.len())
                .filter(|&i| items[i].subsystem.len() >= 3 && items[i].kind == *kind)
                .collect();
            let count = members.len() as f64;
            for (slot, &i) in members.iter().enumerate() {
                let c = self.centroid(&items[i].subsystem);
                out[i] = [
                    c[0] + (slot as f64 - (count - 1.0) / 2.0) * d,
                    c[1] - d * (top + row) as f64,
                    c[2],
                ];
            }
        }
        out
    }

    /// Polyline of an arc over `subsystem`: the segment between two qubits, or
    /// the closed loop through three.
    pub fn arc_points(&self, subsystem: &[usize]) -> Vec<[f64; 3]> {
        let mut pts: Vec<[f64; 3]> = subsystem.iter().map(|&q| self.qubit_position(q)).collect();
        if subsystem.len() > 2 {
            pts.push(pts[0]);
        }
        pts
    }
}
