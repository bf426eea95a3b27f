//! Grover search: the closed-form success probability and the equivalent
//! gate-level circuit for two and three qubits.

use quantum_core::{Circuit, GateKind, GateSpec, Step};

use crate::error::{AnalysisError, Result};

/// `[sin((2t+1)·asin√(s/D)) / √s]²` for `s` solutions among `D` items after
/// `t` iterations.
pub fn grover_success_prob(solutions: u64, size: u64, iterations: u32) -> Result<f64> {
    if solutions == 0 || solutions > size {
        return Err(AnalysisError::InvalidSearch { solutions, size });
    }
    let s = solutions as f64;
    let angle = (s / size as f64).sqrt().asin();
    let amp = ((2.0 * iterations as f64 + 1.0) * angle).sin() / s.sqrt();
    Ok(amp * amp)
}

/// A Grover circuit together with the step index at which each iteration ends.
#[derive(Debug, Clone)]
pub struct GroverCircuit {
    pub circuit: Circuit,
    pub solution: usize,
    /// `iteration_ends[t]` is the number of steps after `t` iterations.
    pub iteration_ends: Vec<usize>,
}

fn multi_controlled_z(n: usize) -> Vec<Step> {
    match n {
        2 => vec![Step::Gate(GateSpec::cz(0, 1))],
        3 => vec![
            Step::Gate(GateSpec::single(GateKind::H, 2)),
            Step::Gate(GateSpec::toffoli(0, 1, 2)),
            Step::Gate(GateSpec::single(GateKind::H, 2)),
        ],
        _ => unreachable!("checked by the caller"),
    }
}

fn layer(kind: GateKind, qubits: impl IntoIterator<Item = usize>) -> Vec<Step> {
    qubits
        .into_iter()
        .map(|q| Step::Gate(GateSpec::single(kind.clone(), q)))
        .collect()
}

/// Phase oracle `1 − 2|w⟩⟨w|` followed by the diffusion `2|s⟩⟨s| − 1` (up to
/// a global sign), repeated `iterations` times after a Hadamard layer.
pub fn grover_circuit(n: usize, solution: usize, iterations: usize) -> Result<GroverCircuit> {
    if !(2..=3).contains(&n) {
        return Err(AnalysisError::Invalid(format!(
            "Grover circuits are built for 2 or 3 qubits, got {n}"
        )));
    }
    if solution >= 1 << n {
        return Err(AnalysisError::InvalidSearch {
            solutions: solution as u64,
            size: 1 << n,
        });
    }
    let zeros: Vec<usize> = (0..n).filter(|&q| (solution >> (n - 1 - q)) & 1 == 0).collect();
    let mut steps = layer(GateKind::H, 0..n);
    let mut ends = vec![steps.len()];
    for _ in 0..iterations {
        steps.extend(layer(GateKind::X, zeros.iter().copied()));
        steps.extend(multi_controlled_z(n));
        steps.extend(layer(GateKind::X, zeros.iter().copied()));
        steps.extend(layer(GateKind::H, 0..n));
        steps.extend(layer(GateKind::X, 0..n));
        steps.extend(multi_controlled_z(n));
        steps.extend(layer(GateKind::X, 0..n));
        steps.extend(layer(GateKind::H, 0..n));
        ends.push(steps.len());
    }
    Ok(GroverCircuit {
        circuit: Circuit::new(n, steps)?,
        solution,
        iteration_ends: ends,
    })
}

impl GroverCircuit {
    /// Probability of reading the solution after `0, 1, …` iterations.
    pub fn success_curve(&self) -> Result<Vec<f64>> {
        let snaps = self.circuit.run()?;
        Ok(self
            .iteration_ends
            .iter()
            .map(|&k| {
                let psi = snaps[k].pure().expect("no measurements in a Grover circuit");
                psi.amplitudes()[self.solution].norm_sqr()
            })
            .collect())
    }
}
