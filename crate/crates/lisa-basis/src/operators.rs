//! Closed-form Pauli expansions of the Hermitian LISA operators.
//!
//! Each operator is `(1/√2^N) · prefactor · Σ coef · P`, where `P` is a Pauli
//! string over the label's subsystem (characters in subsystem order k, l, m).

use quantum_core::pauli::{pauli_string, Pauli};
use quantum_core::CMatrix;

use crate::label::{BeadLabel, Parity, Tau};

/// Pauli expansion: overall prefactor and weighted strings.
pub struct Expansion {
    pub prefactor: f64,
    pub terms: &'static [(f64, &'static str)],
}

const fn ex(prefactor: f64, terms: &'static [(f64, &'static str)]) -> Expansion {
    Expansion { prefactor, terms }
}

const R2: f64 = std::f64::consts::FRAC_1_SQRT_2;
// 1/√3, 1/√6, 1/√10, 1/√12, 1/√15, 1/(2√15)
const R3: f64 = 0.577_350_269_189_625_8;
const R6: f64 = 0.408_248_290_463_863;
const R10: f64 = 0.316_227_766_016_837_94;
const R12: f64 = 0.288_675_134_594_812_9;
const R15: f64 = 0.258_198_889_747_161_1;
const R15H: f64 = 0.129_099_444_873_580_56;

/// Pauli expansion of `T_{j,m}` for `label`, or `None` if the pair is not allowed.
pub fn expansion(label: &BeadLabel, j: usize, m: i32) -> Option<Expansion> {
    use Parity::{Even, Odd};
    let e = match (label.linearity(), label.tau(), label.parity(), j, m) {
        (0, _, _, 0, 0) => ex(1.0, &[(1.0, "")]),

        (1, _, _, 1, -1) => ex(1.0, &[(1.0, "y")]),
        (1, _, _, 1, 0) => ex(1.0, &[(1.0, "z")]),
        (1, _, _, 1, 1) => ex(1.0, &[(1.0, "x")]),

        (2, _, Even, 0, 0) => ex(R3, &[(1.0, "xx"), (1.0, "yy"), (1.0, "zz")]),
        (2, _, Even, 2, -2) => ex(R2, &[(1.0, "xy"), (1.0, "yx")]),
        (2, _, Even, 2, -1) => ex(R2, &[(1.0, "yz"), (1.0, "zy")]),
        (2, _, Even, 2, 0) => ex(R6, &[(2.0, "zz"), (-1.0, "xx"), (-1.0, "yy")]),
        (2, _, Even, 2, 1) => ex(R2, &[(1.0, "zx"), (1.0, "xz")]),
        (2, _, Even, 2, 2) => ex(R2, &[(1.0, "xx"), (-1.0, "yy")]),
        (2, _, Odd, 1, -1) => ex(R2, &[(1.0, "zx"), (-1.0, "xz")]),
        (2, _, Odd, 1, 0) => ex(R2, &[(1.0, "xy"), (-1.0, "yx")]),
        (2, _, Odd, 1, 1) => ex(R2, &[(1.0, "yz"), (-1.0, "zy")]),

        (3, Some(Tau::T1), Odd, 1, -1) => ex(
            R15,
            &[(3.0, "yyy"), (1.0, "yxx"), (1.0, "xyx"), (1.0, "xxy"), (1.0, "yzz"), (1.0, "zyz"), (1.0, "zzy")],
        ),
        (3, Some(Tau::T1), Odd, 1, 0) => ex(
            R15,
            &[(3.0, "zzz"), (1.0, "zxx"), (1.0, "xzx"), (1.0, "xxz"), (1.0, "zyy"), (1.0, "yzy"), (1.0, "yyz")],
        ),
        (3, Some(Tau::T1), Odd, 1, 1) => ex(
            R15,
            &[(3.0, "xxx"), (1.0, "xyy"), (1.0, "yxy"), (1.0, "yyx"), (1.0, "xzz"), (1.0, "zxz"), (1.0, "zzx")],
        ),
        (3, Some(Tau::T1), Odd, 3, -3) => {
            ex(0.5, &[(-1.0, "yyy"), (1.0, "yxx"), (1.0, "xyx"), (1.0, "xxy")])
        }
        (3, Some(Tau::T1), Odd, 3, -2) => ex(
            R6,
            &[(1.0, "xyz"), (1.0, "yzx"), (1.0, "zxy"), (1.0, "xzy"), (1.0, "zyx"), (1.0, "yxz")],
        ),
        (3, Some(Tau::T1), Odd, 3, -1) => ex(
            R15H,
            &[(-3.0, "yyy"), (-1.0, "yxx"), (-1.0, "xyx"), (-1.0, "xxy"), (4.0, "yzz"), (4.0, "zyz"), (4.0, "zzy")],
        ),
        // The y-y group enters with a negative sign; this is the combination
        // orthogonal to T_{1,0} and T_{3,±2} and invariant under z-rotations.
        (3, Some(Tau::T1), Odd, 3, 0) => ex(
            R10,
            &[(2.0, "zzz"), (-1.0, "zxx"), (-1.0, "xzx"), (-1.0, "xxz"), (-1.0, "zyy"), (-1.0, "yzy"), (-1.0, "yyz")],
        ),
        (3, Some(Tau::T1), Odd, 3, 1) => ex(
            R15H,
            &[(-3.0, "xxx"), (-1.0, "xyy"), (-1.0, "yxy"), (-1.0, "yyx"), (4.0, "xzz"), (4.0, "zxz"), (4.0, "zzx")],
        ),
        (3, Some(Tau::T1), Odd, 3, 2) => ex(
            R6,
            &[(1.0, "zxx"), (1.0, "xzx"), (1.0, "xxz"), (-1.0, "zyy"), (-1.0, "yzy"), (-1.0, "yyz")],
        ),
        (3, Some(Tau::T1), Odd, 3, 3) => {
            ex(0.5, &[(1.0, "xxx"), (-1.0, "xyy"), (-1.0, "yxy"), (-1.0, "yyx")])
        }

        (3, Some(Tau::T2), Odd, 1, -1) => ex(
            R12,
            &[(-2.0, "xxy"), (1.0, "yxx"), (1.0, "xyx"), (-2.0, "zzy"), (1.0, "yzz"), (1.0, "zyz")],
        ),
        (3, Some(Tau::T2), Odd, 1, 0) => ex(
            R12,
            &[(-2.0, "xxz"), (1.0, "zxx"), (1.0, "xzx"), (-2.0, "yyz"), (1.0, "zyy"), (1.0, "yzy")],
        ),
        (3, Some(Tau::T2), Odd, 1, 1) => ex(
            R12,
            &[(-2.0, "yyx"), (1.0, "xyy"), (1.0, "yxy"), (-2.0, "zzx"), (1.0, "xzz"), (1.0, "zxz")],
        ),
        (3, Some(Tau::T2), Even, 2, -2) => ex(
            R12,
            &[(2.0, "xxz"), (-1.0, "zxx"), (-1.0, "xzx"), (-2.0, "yyz"), (1.0, "zyy"), (1.0, "yzy")],
        ),
        (3, Some(Tau::T2), Even, 2, -1) => ex(
            R12,
            &[(2.0, "yyx"), (-1.0, "xyy"), (-1.0, "yxy"), (-2.0, "zzx"), (1.0, "xzz"), (1.0, "zxz")],
        ),
        (3, Some(Tau::T2), Even, 2, 0) => {
            ex(0.5, &[(-1.0, "xzy"), (-1.0, "zxy"), (1.0, "yzx"), (1.0, "zyx")])
        }
        (3, Some(Tau::T2), Even, 2, 1) => ex(
            R12,
            &[(-2.0, "xxy"), (1.0, "yxx"), (1.0, "xyx"), (2.0, "zzy"), (-1.0, "yzz"), (-1.0, "zyz")],
        ),
        (3, Some(Tau::T2), Even, 2, 2) => ex(
            R12,
            &[(-2.0, "xyz"), (1.0, "yzx"), (1.0, "zxy"), (-2.0, "yxz"), (1.0, "xzy"), (1.0, "zyx")],
        ),

        (3, Some(Tau::T3), Odd, 1, -1) => {
            ex(0.5, &[(1.0, "yxx"), (-1.0, "xyx"), (1.0, "yzz"), (-1.0, "zyz")])
        }
        (3, Some(Tau::T3), Odd, 1, 0) => {
            ex(0.5, &[(1.0, "zxx"), (-1.0, "xzx"), (1.0, "zyy"), (-1.0, "yzy")])
        }
        (3, Some(Tau::T3), Odd, 1, 1) => {
            ex(0.5, &[(1.0, "xyy"), (-1.0, "yxy"), (1.0, "xzz"), (-1.0, "zxz")])
        }
        (3, Some(Tau::T3), Even, 2, -2) => {
            ex(0.5, &[(-1.0, "zxx"), (1.0, "xzx"), (1.0, "zyy"), (-1.0, "yzy")])
        }
        (3, Some(Tau::T3), Even, 2, -1) => {
            ex(0.5, &[(-1.0, "xyy"), (1.0, "yxy"), (1.0, "xzz"), (-1.0, "zxz")])
        }
        (3, Some(Tau::T3), Even, 2, 0) => ex(
            R12,
            &[(-2.0, "xyz"), (1.0, "yzx"), (1.0, "zxy"), (2.0, "yxz"), (-1.0, "xzy"), (-1.0, "zyx")],
        ),
        (3, Some(Tau::T3), Even, 2, 1) => {
            ex(0.5, &[(-1.0, "yzz"), (1.0, "zyz"), (1.0, "yxx"), (-1.0, "xyx")])
        }
        (3, Some(Tau::T3), Even, 2, 2) => {
            ex(0.5, &[(-1.0, "xzy"), (1.0, "zxy"), (1.0, "zyx"), (-1.0, "yzx")])
        }

        (3, Some(Tau::T4), Even, 0, 0) => ex(
            R6,
            &[(1.0, "xyz"), (1.0, "yzx"), (1.0, "zxy"), (-1.0, "xzy"), (-1.0, "yxz"), (-1.0, "zyx")],
        ),
        _ => return None,
    };
    Some(e)
}

/// Dense `2^n × 2^n` matrix of an expansion placed on `label`'s subsystem.
pub fn build_matrix(n: usize, label: &BeadLabel, e: &Expansion) -> CMatrix {
    let dim = 1usize << n;
    let norm = e.prefactor / (dim as f64).sqrt();
    let mut out = CMatrix::zeros(dim, dim);
    for &(coef, s) in e.terms {
        let mut factors = vec![Pauli::I; n];
        for (&q, c) in label.subsystem().iter().zip(s.chars()) {
            factors[q] = Pauli::from_char(c).expect("table uses x, y, z");
        }
        out += pauli_string(&factors).scale(coef * norm);
    }
    out
}
