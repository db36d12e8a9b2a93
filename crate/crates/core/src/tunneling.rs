//! Electron and hole tunneling between the dots in the single-particle basis
//! `{|e_I h_I⟩, |e_I h_II⟩, |e_II h_I⟩, |e_II h_II⟩}`.

use crate::numerics::{eig_hermitian, HermitianMatrix};
use crate::{Error, Result};

/// `max|t| / |M_eh − M'_eh|` above which the effective two-level model is refused.
pub const PERTURBATIVE_LIMIT: f64 = 0.2;
/// Smallest `min(|D_h|, |D_e|) / max|t|` reported as safe.
pub const SAFETY_THRESHOLD: f64 = 5.0;

/// Inputs of the double-dot pair model. Single-particle energies in eV,
/// Coulomb elements and couplings in meV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TunnelParams {
    /// `[E_e(I), E_e(II)]`, eV.
    pub e_e: [f64; 2],
    /// `[E_h(I), E_h(II)]`, eV.
    pub e_h: [f64; 2],
    /// `m[n][k]` binds the electron on dot n to the hole on dot k, meV.
    pub m: [[f64; 2]; 2],
    pub t_e: f64,
    pub t_h: f64,
    pub v_f: f64,
}

impl TunnelParams {
    pub fn new(
        e_e: [f64; 2],
        e_h: [f64; 2],
        m: [[f64; 2]; 2],
        t_e: f64,
        t_h: f64,
        v_f: f64,
    ) -> Result<Self> {
        let all = e_e
            .iter()
            .chain(&e_h)
            .chain(m.iter().flatten())
            .chain([&t_e, &t_h, &v_f]);
        if all.into_iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidInput(
                "tunneling parameters must be finite".into(),
            ));
        }
        if m.iter().flatten().any(|&x| x <= 0.0) {
            return Err(Error::NonpositiveInput("M"));
        }
        Ok(TunnelParams {
            e_e,
            e_h,
            m,
            t_e,
            t_h,
            v_f,
        })
    }

    /// Two identical dots: direct binding `m_direct`, cross-dot binding `m_cross`.
    pub fn identical(
        e_e: f64,
        e_h: f64,
        m_direct: f64,
        m_cross: f64,
        t_e: f64,
        t_h: f64,
        v_f: f64,
    ) -> Result<Self> {
        Self::new(
            [e_e, e_e],
            [e_h, e_h],
            [[m_direct, m_cross], [m_cross, m_direct]],
            t_e,
            t_h,
            v_f,
        )
    }

    /// `E_{e_n h_k} = E_{e_n} + E_{h_k} − M_{e_n h_k}` in meV.
    pub fn pair_energy(&self, n: usize, k: usize) -> f64 {
        (self.e_e[n] + self.e_h[k]) * 1e3 - self.m[n][k]
    }

    pub fn is_identical(&self) -> bool {
        self.e_e[0] == self.e_e[1]
            && self.e_h[0] == self.e_h[1]
            && self.m[0][0] == self.m[1][1]
            && self.m[0][1] == self.m[1][0]
    }

    fn t_max(&self) -> f64 {
        self.t_e.abs().max(self.t_h.abs())
    }

    /// `D_h = ΔE_h + ΔM_h`, the offset of `|e_I h_II⟩` from `|e_I h_I⟩`, meV.
    pub fn d_h(&self) -> f64 {
        self.pair_energy(0, 1) - self.pair_energy(0, 0)
    }

    /// `D_e = ΔE_e + ΔM_e`, the offset of `|e_II h_I⟩` from `|e_I h_I⟩`, meV.
    pub fn d_e(&self) -> f64 {
        self.pair_energy(1, 0) - self.pair_energy(0, 0)
    }
}

/// The 4×4 pair Hamiltonian in meV.
pub fn pair_hamiltonian_sp(p: &TunnelParams) -> HermitianMatrix {
    let (te, th, v) = (p.t_e, p.t_h, p.v_f);
    #[rustfmt::skip]
    let rows = [
        p.pair_energy(0, 0), th, te, v,
        th, p.pair_energy(0, 1), 0.0, te,
        te, 0.0, p.pair_energy(1, 0), th,
        v, te, th, p.pair_energy(1, 1),
    ];
    HermitianMatrix::from_real(4, &rows).expect("finite symmetric matrix")
}

/// Second-order effective Hamiltonian (meV) on `{|e_I h_I⟩, |e_II h_II⟩}`
/// for identical dots, measured from `E_e + E_h − M_eh`:
/// diagonal `−(t_e² + t_h²)/Δ`, off-diagonal `V_F − 2t_e t_h/Δ`,
/// `Δ = M_eh − M'_eh`.
pub fn effective_subspace(p: &TunnelParams) -> Result<HermitianMatrix> {
    if !p.is_identical() {
        return Err(Error::NotIdenticalDots);
    }
    let delta = p.m[0][0] - p.m[0][1];
    if delta == 0.0 {
        return Err(Error::DegenerateDenominator);
    }
    let ratio = p.t_max() / delta.abs();
    if ratio > PERTURBATIVE_LIMIT {
        return Err(Error::ConditionViolated {
            ratio,
            limit: PERTURBATIVE_LIMIT,
        });
    }
    let diag = -(p.t_e * p.t_e + p.t_h * p.t_h) / delta;
    let off = p.v_f - 2.0 * p.t_e * p.t_h / delta;
    HermitianMatrix::from_real(2, &[diag, off, off, diag])
}

/// First-order admixture magnitudes of the charge-separated states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeakageWeights {
    pub t_e_over_d_h: f64,
    pub t_h_over_d_h: f64,
    pub t_e_over_d_e: f64,
    pub t_h_over_d_e: f64,
}

impl LeakageWeights {
    pub fn as_array(&self) -> [f64; 4] {
        [
            self.t_e_over_d_h,
            self.t_h_over_d_h,
            self.t_e_over_d_e,
            self.t_h_over_d_e,
        ]
    }

    /// Largest weight on `|e_I h_II⟩`.
    pub fn max_d_h(&self) -> f64 {
        self.t_e_over_d_h.max(self.t_h_over_d_h)
    }

    /// Largest weight on `|e_II h_I⟩`.
    pub fn max_d_e(&self) -> f64 {
        self.t_e_over_d_e.max(self.t_h_over_d_e)
    }
}

pub fn leakage_weights(p: &TunnelParams) -> Result<LeakageWeights> {
    let (dh, de) = (p.d_h().abs(), p.d_e().abs());
    if dh == 0.0 || de == 0.0 {
        return Err(Error::DegenerateDenominator);
    }
    let (te, th) = (p.t_e.abs(), p.t_h.abs());
    Ok(LeakageWeights {
        t_e_over_d_h: te / dh,
        t_h_over_d_h: th / dh,
        t_e_over_d_e: te / de,
        t_h_over_d_e: th / de,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SafetyReport {
    pub d_h: f64,
    pub d_e: f64,
    pub t_max: f64,
    /// `min(|D_h|, |D_e|) / max|t|`; infinite without tunneling.
    pub ratio: f64,
    pub threshold: f64,
    pub pass: bool,
}

pub fn tunneling_safety(p: &TunnelParams) -> SafetyReport {
    let (dh, de) = (p.d_h(), p.d_e());
    let t_max = p.t_max();
    let gap = dh.abs().min(de.abs());
    let ratio = if t_max == 0.0 {
        f64::INFINITY
    } else {
        gap / t_max
    };
    SafetyReport {
        d_h: dh,
        d_e: de,
        t_max,
        ratio,
        threshold: SAFETY_THRESHOLD,
        pass: ratio >= SAFETY_THRESHOLD,
    }
}

/// An exact eigenstate of [`pair_hamiltonian_sp`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairState {
    /// meV.
    pub energy: f64,
    /// Real amplitudes on the single-particle basis.
    pub amplitudes: [f64; 4],
}

impl PairState {
    /// Weight on `{|e_I h_I⟩, |e_II h_II⟩}`.
    pub fn subspace_weight(&self) -> f64 {
        self.amplitudes[0].powi(2) + self.amplitudes[3].powi(2)
    }
}

/// The two exact eigenstates with the largest weight on
/// `{|e_I h_I⟩, |e_II h_II⟩}`, in ascending energy.
pub fn exact_subspace_states(p: &TunnelParams) -> [PairState; 2] {
    let eig = eig_hermitian(&pair_hamiltonian_sp(p));
    let mut states: Vec<PairState> = (0..4)
        .map(|k| {
            let v = eig.vector(k);
            PairState {
                energy: eig.values[k],
                amplitudes: [v[0].re, v[1].re, v[2].re, v[3].re],
            }
        })
        .collect();
    states.sort_by(|a, b| b.subspace_weight().total_cmp(&a.subspace_weight()));
    let (mut a, mut b) = (states[0], states[1]);
    if a.energy > b.energy {
        std::mem::swap(&mut a, &mut b);
    }
    [a, b]
}

/// Splitting of the two subspace levels from exact diagonalisation, meV.
pub fn exact_subspace_splitting(p: &TunnelParams) -> f64 {
    let [a, b] = exact_subspace_states(p);
    b.energy - a.energy
}

/// Splitting predicted by [`effective_subspace`], meV.
pub fn effective_splitting(p: &TunnelParams) -> Result<f64> {
    let h = effective_subspace(p)?;
    Ok(2.0 * h[(0, 1)].re.abs())
}
