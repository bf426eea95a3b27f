//! Three-qubit pure states that reach the global unitary bound of a
//! non-fully-symmetric bead along +z (`ψ+`, bead value +1) or −z (`ψ−`, −1).
//!
//! Degenerate bounds admit a one-parameter family
//! `cos θ |a⟩ + sin θ |b⟩`; `theta` selects the member (0 for the simplest).

use std::f64::consts::FRAC_1_SQRT_2;

use lisa_basis::{BeadLabel, Parity, Tau};
use quantum_core::{CVector, PureState, C64};

use crate::error::{BeadsError, Result};

fn ket(terms: &[(&str, C64)]) -> CVector {
    let mut v = CVector::zeros(8);
    for (bits, a) in terms {
        v[usize::from_str_radix(bits, 2).expect("binary literal")] += *a;
    }
    v
}

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn combine(a: CVector, b: CVector, theta: f64) -> Result<PureState> {
    Ok(PureState::new(a * re(theta.cos()) + b * re(theta.sin()))?)
}

/// Labels with a known bound-reaching state.
pub fn gub_labels() -> Vec<BeadLabel> {
    let mut out: Vec<BeadLabel> = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(k, l)| BeadLabel::pair(k, l, Parity::Odd))
        .collect();
    for (tau, parity) in [
        (Tau::T2, Parity::Odd),
        (Tau::T2, Parity::Even),
        (Tau::T3, Parity::Odd),
        (Tau::T3, Parity::Even),
        (Tau::T4, Parity::Even),
    ] {
        out.push(BeadLabel::triple(tau, parity).expect("valid trilinear label"));
    }
    out
}

/// `ψ±` for `label`; `positive` picks the sign of the bead value along +z.
pub fn gub_state(label: &BeadLabel, positive: bool, theta: f64) -> Result<PureState> {
    let s = if positive { -1.0 } else { 1.0 };
    let h = FRAC_1_SQRT_2;
    let i = C64::new(0.0, 1.0);
    let unsupported = || BeadsError::MissingLabel(label.to_string());
    let sub = label.subsystem();
    match (sub.len(), label.tau(), label.parity()) {
        (2, None, Parity::Odd) => {
            let bits = |k: usize, l: usize, rest: char| -> (String, String) {
                let mut a = ['0'; 3];
                let mut b = ['0'; 3];
                let other = (0..3).find(|q| *q != k && *q != l).expect("third qubit");
                a[other] = rest;
                b[other] = rest;
                a[l] = '1';
                b[k] = '1';
                (a.iter().collect(), b.iter().collect())
            };
            let (k, l) = (sub[0], sub[1]);
            let (a0, b0) = bits(k, l, '0');
            let (a1, b1) = bits(k, l, '1');
            combine(
                ket(&[(&a0, re(h)), (&b0, i * (s * h))]),
                ket(&[(&a1, re(h)), (&b1, i * (s * h))]),
                theta,
            )
        }
        (3, Some(Tau::T2), Parity::Odd) => {
            let a = 0.5 * (1.0 + 1.0 / 3f64.sqrt()).sqrt();
            let b = -h * (1.0 - 1.0 / 3f64.sqrt()).sqrt();
            let v = if positive {
                ket(&[("011", re(a)), ("101", re(a)), ("110", re(b))])
            } else {
                ket(&[("010", re(a)), ("100", re(a)), ("001", re(b))])
            };
            Ok(PureState::new(v)?)
        }
        (3, Some(Tau::T2), Parity::Even) => combine(
            ket(&[("100", re(0.5)), ("010", re(0.5)), ("001", i * (s * h))]),
            ket(&[("011", re(0.5)), ("101", re(0.5)), ("110", i * (s * h))]),
            theta,
        ),
        (3, Some(Tau::T3), Parity::Odd) => {
            let d = -s * 0.5;
            combine(
                ket(&[("010", re(d)), ("100", re(-d)), ("001", re(h))]),
                ket(&[("011", re(d)), ("101", re(-d)), ("110", re(h))]),
                theta,
            )
        }
        (3, Some(Tau::T3), Parity::Even) => {
            let r = 1.0 / 6f64.sqrt();
            let minus = re(r) + i * (s * 0.5);
            let plus = re(r) - i * (s * 0.5);
            combine(
                ket(&[("001", re(r)), ("010", minus), ("100", plus)]),
                ket(&[("110", re(r)), ("101", minus), ("011", plus)]),
                theta,
            )
        }
        (3, Some(Tau::T4), Parity::Even) => {
            let r = 1.0 / 3f64.sqrt();
            let w = C64::new(0.5, -s * 0.5 * 3f64.sqrt());
            combine(
                ket(&[("001", re(r)), ("010", -w * r), ("100", -w.conj() * r)]),
                ket(&[("110", re(r)), ("101", -w * r), ("011", -w.conj() * r)]),
                theta,
            )
        }
        _ => Err(unsupported()),
    }
}
