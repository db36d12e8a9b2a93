//! XY dynamics in the two-qubit exciton subspace, basis `{|00⟩, |01⟩, |10⟩, |11⟩}`.
//!
//! Qubit 1 is dot I and is the left tensor factor. Rotations are
//! `R_σ(θ) = exp(−iθσ/2)` and evolution is `exp(−iHt/ħ)`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::constants::{HBAR, MEV};
use crate::numerics::{expm_hermitian, CMatrix, HermitianMatrix};
use crate::{Error, Result};

const UNITARY_TOL: f64 = 1e-12;
const NORM_TOL: f64 = 1e-12;
/// Phase-aligned fidelity a convention must reach to be accepted as CNOT.
pub const CNOT_TOLERANCE: f64 = 1e-8;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn pauli(axis: Axis) -> CMatrix {
    let z = c(0.0);
    let data = match axis {
        Axis::X => vec![z, c(1.0), c(1.0), z],
        Axis::Y => vec![z, -I, I, z],
        Axis::Z => vec![c(1.0), z, z, c(-1.0)],
    };
    CMatrix::from_rows(2, data).expect("2x2")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Qubit {
    One,
    Two,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Unitary4(CMatrix);

impl Unitary4 {
    pub fn new(m: CMatrix) -> Result<Self> {
        if m.dim() != 4 {
            return Err(Error::BadDimension(m.dim()));
        }
        let defect = m.unitarity_defect();
        if !(defect <= UNITARY_TOL) {
            return Err(Error::InvalidInput(format!(
                "matrix is not unitary (defect {defect:e})"
            )));
        }
        Ok(Unitary4(m))
    }

    pub fn identity() -> Self {
        Unitary4(CMatrix::identity(4))
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn adjoint(&self) -> Self {
        Unitary4(self.0.adjoint())
    }

    /// `self · other`, so `other` acts first.
    pub fn then_after(&self, other: &Unitary4) -> Self {
        Unitary4(&self.0 * &other.0)
    }

    pub fn apply(&self, state: &TwoQubitState) -> TwoQubitState {
        let out = self.0.apply(&state.0);
        TwoQubitState([out[0], out[1], out[2], out[3]])
    }

    /// `|tr(U†V)| / 4`, equal to 1 iff the gates agree up to global phase.
    pub fn fidelity(&self, other: &Unitary4) -> f64 {
        fidelity(self, other)
    }
}

impl std::ops::Mul for &Unitary4 {
    type Output = Unitary4;
    fn mul(self, rhs: &Unitary4) -> Unitary4 {
        Unitary4(&self.0 * &rhs.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState([Complex64; 4]);

impl TwoQubitState {
    pub fn new(amplitudes: [Complex64; 4]) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if !((norm - 1.0).abs() <= NORM_TOL) {
            return Err(Error::Unnormalized(norm));
        }
        Ok(TwoQubitState(amplitudes))
    }

    /// Computational basis state `|k⟩`, k = 2·q1 + q2.
    pub fn basis(k: usize) -> Self {
        let mut a = [c(0.0); 4];
        a[k] = c(1.0);
        TwoQubitState(a)
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.0
    }
}

pub fn fidelity(u: &Unitary4, v: &Unitary4) -> f64 {
    (&u.0.adjoint() * &v.0).trace().norm() / 4.0
}

/// `(V_F/2)(σx⊗σx + σy⊗σy)` in meV.
pub fn xy_hamiltonian(v_f: f64) -> HermitianMatrix {
    let (x, y) = (pauli(Axis::X), pauli(Axis::Y));
    let sum = &x.kron(&x) + &y.kron(&y);
    HermitianMatrix::new(sum.scale(c(v_f / 2.0))).expect("XY coupling is Hermitian")
}

/// `exp(−iH_F t/ħ)` for coupling `v_f_mev` and time `t` in seconds.
pub fn evolve(v_f_mev: f64, t: f64) -> Unitary4 {
    let omega = v_f_mev * MEV / HBAR;
    let h = xy_hamiltonian(omega);
    Unitary4(expm_hermitian(&h, t))
}

/// `πħ / (2|V_F|)` in seconds, the time at which [`evolve`] is an iSWAP.
pub fn iswap_time(v_f_mev: f64) -> Result<f64> {
    if !(v_f_mev.abs() > 0.0) {
        return Err(Error::NonpositiveInput("|V_F|"));
    }
    Ok(PI * HBAR / (2.0 * v_f_mev.abs() * MEV))
}

pub fn iswap() -> Unitary4 {
    let mut m = CMatrix::zeros(4);
    m[(0, 0)] = c(1.0);
    m[(1, 2)] = I;
    m[(2, 1)] = I;
    m[(3, 3)] = c(1.0);
    Unitary4(m)
}

/// Control on qubit 1.
pub fn cnot() -> Unitary4 {
    let mut m = CMatrix::zeros(4);
    m[(0, 0)] = c(1.0);
    m[(1, 1)] = c(1.0);
    m[(2, 3)] = c(1.0);
    m[(3, 2)] = c(1.0);
    Unitary4(m)
}

/// `exp(−i(angle/2)σ_axis)` on `qubit`, identity on the other.
pub fn rotation(axis: Axis, angle: f64, qubit: Qubit) -> Unitary4 {
    let half = angle / 2.0;
    let r = &CMatrix::identity(2).scale(c(half.cos())) - &pauli(axis).scale(I * half.sin());
    let id = CMatrix::identity(2);
    Unitary4(match qubit {
        Qubit::One => r.kron(&id),
        Qubit::Two => id.kron(&r),
    })
}

/// Sign conventions tried, in this order, when assembling CNOT.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    Literal,
    NegatedHamiltonian,
    NegatedAngles,
    NegatedBoth,
}

impl Convention {
    pub const ORDER: [Convention; 4] = [
        Convention::Literal,
        Convention::NegatedHamiltonian,
        Convention::NegatedAngles,
        Convention::NegatedBoth,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Convention::Literal => "literal",
            Convention::NegatedHamiltonian => "negated_hamiltonian",
            Convention::NegatedAngles => "negated_angles",
            Convention::NegatedBoth => "negated_both",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CnotSequence {
    pub unitary: Unitary4,
    pub convention: Convention,
    /// `|tr(CNOT† U)| / 4`.
    pub fidelity: f64,
}

fn sequence(v_f_mev: f64, t: f64, angle_sign: f64) -> Unitary4 {
    let q = PI / 2.0 * angle_sign;
    let sw = evolve(v_f_mev, t);
    // rightmost factor acts first
    let factors = [
        rotation(Axis::X, q, Qubit::Two),
        rotation(Axis::Z, q, Qubit::Two),
        rotation(Axis::Z, -q, Qubit::One),
        sw.clone(),
        rotation(Axis::X, q, Qubit::One),
        sw,
        rotation(Axis::Z, q, Qubit::Two),
    ];
    factors.iter().fold(Unitary4::identity(), |acc, f| &acc * f)
}

/// `(π/2)_x2 (π/2)_z2 (−π/2)_z1 · iSWAP · (π/2)_x1 · iSWAP · (π/2)_z2`
/// with each iSWAP realised by [`evolve`] for `πħ/(2|V_F|)`.
pub fn cnot_sequence(v_f_mev: f64) -> Result<CnotSequence> {
    let t = iswap_time(v_f_mev)?;
    let target = cnot();
    for convention in Convention::ORDER {
        let (h_sign, a_sign) = match convention {
            Convention::Literal => (1.0, 1.0),
            Convention::NegatedHamiltonian => (-1.0, 1.0),
            Convention::NegatedAngles => (1.0, -1.0),
            Convention::NegatedBoth => (-1.0, -1.0),
        };
        let u = sequence(h_sign * v_f_mev, t, a_sign);
        let f = fidelity(&target, &u);
        if f >= 1.0 - CNOT_TOLERANCE {
            return Ok(CnotSequence {
                unitary: u,
                convention,
                fidelity: f,
            });
        }
    }
    Err(Error::ConventionMismatch)
}

/// `|⟨ψ|σy⊗σy|ψ*⟩| = 2|a₀₀a₁₁ − a₀₁a₁₀|`.
pub fn concurrence(state: &TwoQubitState) -> f64 {
    let [a, b, cc, d] = state.0;
    (2.0 * (a * d - b * cc).norm()).min(1.0)
}

/// `(|10⟩ + i|01⟩)/√2`.
pub fn midpoint_state() -> TwoQubitState {
    TwoQubitState([c(0.0), I * FRAC_1_SQRT_2, c(FRAC_1_SQRT_2), c(0.0)])
}
