//! Graph states `∏_{(k,l)∈E} CZ_{kl} |+⟩^⊗N`, local complementation and the
//! Pauli measurement rules that map graph states onto smaller graphs.

use std::collections::BTreeSet;

use quantum_core::{states, CMatrix, GateKind, GateSpec, PureState, MAX_QUBITS};

use crate::error::{AnalysisError, Result};

/// Undirected simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphState {
    pub vertex_count: usize,
    /// Edges stored as `(min, max)`.
    pub edges: BTreeSet<(usize, usize)>,
}

impl GraphState {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count == 0 || vertex_count > MAX_QUBITS {
            return Err(quantum_core::CoreError::QubitCount(vertex_count).into());
        }
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a == b || a >= vertex_count || b >= vertex_count {
                return Err(AnalysisError::InvalidEdge(a, b));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(GraphState {
            vertex_count,
            edges: set,
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count {
            Err(AnalysisError::InvalidVertex {
                vertex: v,
                count: self.vertex_count,
            })
        } else {
            Ok(())
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.vertex_count)
            .filter(|&k| k != v && self.has_edge(k, v))
            .collect()
    }

    /// The CZ gates that realize the edges, in edge order.
    pub fn preparation_gates(&self) -> Vec<GateSpec> {
        let mut gates: Vec<GateSpec> = (0..self.vertex_count)
            .map(|q| GateSpec::single(GateKind::H, q))
            .collect();
        gates.extend(self.edges.iter().map(|&(a, b)| GateSpec::cz(a, b)));
        gates
    }

    /// The realized state vector.
    pub fn state(&self) -> Result<PureState> {
        let n = self.vertex_count;
        let plus: Vec<PureState> = (0..n).map(|_| states::plus()).collect();
        let mut psi = PureState::product(&plus)?;
        for &(a, b) in &self.edges {
            psi = psi.evolve(&GateSpec::cz(a, b).unitary(n)?)?;
        }
        Ok(psi)
    }

    /// Toggle every edge between neighbors of `v`.
    pub fn complemented(&self, v: usize) -> Result<GraphState> {
        self.check_vertex(v)?;
        let nb = self.neighbors(v);
        let mut edges = self.edges.clone();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                let e = (a.min(b), a.max(b));
                if !edges.remove(&e) {
                    edges.insert(e);
                }
            }
        }
        Ok(GraphState {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// Remove all edges incident to `v`, leaving it isolated.
    pub fn isolated(&self, v: usize) -> Result<GraphState> {
        self.check_vertex(v)?;
        Ok(GraphState {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().copied().filter(|&(a, b)| a != v && b != v).collect(),
        })
    }
}

/// `|G⟩` for a vertex count and edge list.
pub fn graph_state(vertex_count: usize, edges: &[(usize, usize)]) -> Result<PureState> {
    GraphState::new(vertex_count, edges)?.state()
}

/// Gates of `√S_v = e^{−iπ/4 σ_vx} ∏_{k∈N_v} e^{iπ/4 σ_kz}`: √X on `v` and
/// inverse √Z on its neighbors.
pub fn local_complementation_gates(graph: &GraphState, v: usize) -> Result<Vec<GateSpec>> {
    graph.check_vertex(v)?;
    let mut gates = vec![GateSpec::single(GateKind::SqrtX, v)];
    gates.extend(
        graph
            .neighbors(v)
            .into_iter()
            .map(|k| GateSpec::single(GateKind::SqrtZInv, k)),
    );
    Ok(gates)
}

fn product_unitary(n: usize, gates: &[GateSpec]) -> Result<CMatrix> {
    let mut u = CMatrix::identity(1 << n, 1 << n);
    for g in gates {
        u = g.unitary(n)? * u;
    }
    Ok(u)
}

/// The local-complementation unitary at `v` and the complemented graph.
pub fn local_complementation(graph: &GraphState, v: usize) -> Result<(CMatrix, GraphState)> {
    let gates = local_complementation_gates(graph, v)?;
    Ok((product_unitary(graph.vertex_count, &gates)?, graph.complemented(v)?))
}

/// Pauli basis of a graph-state measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphMeasurement {
    Z,
    Y,
}

impl GraphMeasurement {
    pub fn direction(self) -> [f64; 3] {
        match self {
            GraphMeasurement::Z => [0.0, 0.0, 1.0],
            GraphMeasurement::Y => [0.0, 1.0, 0.0],
        }
    }
}

/// Corrections after measuring vertex `v`, and the graph they produce.
///
/// A z-measurement with outcome bit 1 needs Z on every neighbor; a
/// y-measurement needs inverse √Z on the neighbors for bit 0 (`|R⟩`) and √Z
/// for bit 1 (`|L⟩`). The measured qubit is rotated back to `|+⟩` (√Y or its
/// inverse after z, inverse √Z or √Z after y), so the result is the graph
/// state of the reduced graph with `v` isolated. After y the neighborhood of
/// `v` is also complemented.
pub fn measurement_rule(
    graph: &GraphState,
    v: usize,
    basis: GraphMeasurement,
    bit: u8,
) -> Result<(Vec<GateSpec>, GraphState)> {
    graph.check_vertex(v)?;
    let nb = graph.neighbors(v);
    let (own, neighbor, target) = match (basis, bit) {
        (GraphMeasurement::Z, 0) => (GateKind::SqrtY, None, graph.isolated(v)?),
        (GraphMeasurement::Z, _) => (GateKind::SqrtYInv, Some(GateKind::Z), graph.isolated(v)?),
        (GraphMeasurement::Y, 0) => (
            GateKind::SqrtZInv,
            Some(GateKind::SqrtZInv),
            graph.complemented(v)?.isolated(v)?,
        ),
        (GraphMeasurement::Y, _) => (
            GateKind::SqrtZ,
            Some(GateKind::SqrtZ),
            graph.complemented(v)?.isolated(v)?,
        ),
    };
    let mut gates = vec![GateSpec::single(own, v)];
    if let Some(kind) = neighbor {
        gates.extend(nb.into_iter().map(|k| GateSpec::single(kind.clone(), k)));
    }
    Ok((gates, target))
}
