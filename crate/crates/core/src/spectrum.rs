//! The four-level two-dot Hamiltonian, its eigensystem, field sweeps and the
//! resonance field.

use rayon::prelude::*;

use crate::constants::{EV, E_CHARGE, MEV};
use crate::coupling::{forster_coupling, PairSpec};
use crate::numerics::{find_root, minimize_golden, HermitianMatrix};
use crate::optics::level_rates_from;
use crate::singledot::{
    confinement_lengths, coulomb_eh, exciton_energy, ground_energy, validity_parameter, DotSpec,
    Particle, FIELD_VALIDITY_LIMIT,
};
use crate::{Error, FieldConfig, Result, Vec3};

/// Default bracket for [`resonance_field_numeric`], V/m.
pub const DEFAULT_BRACKET: (f64, f64) = (0.0, 2e7);
/// Root tolerance for the resonance field, V/m.
pub const RESONANCE_TOLERANCE: f64 = 1.0;
/// Location tolerance of the gap minimisation, V/m.
pub const GAP_TOLERANCE: f64 = 100.0;

/// Which algebraic eigenstate lies lower in energy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `Δω ≥ 0`: `|Ψ−⟩` is the lower level.
    MinusLower,
    /// `Δω < 0`: `|Ψ+⟩` is the lower level.
    PlusLower,
}

/// Eigensystem of the four-level Hamiltonian.
///
/// `e_minus`/`e_plus` are ordered by energy (`e_plus >= e_minus`);
/// `branch` says which algebraic state each one is. Compositions are
/// `(c01, c10)` coefficients on `|01⟩` and `|10⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenResult {
    pub e00: f64,
    pub e_minus: f64,
    pub e_plus: f64,
    pub e11: f64,
    /// `√(1 + 4(V_F/Δω)²)`; infinite at `Δω = 0` with `V_F ≠ 0`.
    pub a: f64,
    pub a1: f64,
    pub a2: f64,
    pub omega1: f64,
    pub omega2: f64,
    pub delta_omega: f64,
    /// meV.
    pub v_f: f64,
    pub branch: Branch,
    /// `a1|10⟩ − a2|01⟩`.
    pub psi_minus: [f64; 2],
    /// `a1|01⟩ + a2|10⟩`.
    pub psi_plus: [f64; 2],
}

impl EigenResult {
    /// Composition of the level at `e_minus`.
    pub fn lower_state(&self) -> [f64; 2] {
        match self.branch {
            Branch::MinusLower => self.psi_minus,
            Branch::PlusLower => self.psi_plus,
        }
    }

    /// Composition of the level at `e_plus`.
    pub fn upper_state(&self) -> [f64; 2] {
        match self.branch {
            Branch::MinusLower => self.psi_plus,
            Branch::PlusLower => self.psi_minus,
        }
    }

    /// `E+ − E−` in meV.
    pub fn gap_mev(&self) -> f64 {
        (self.e_plus - self.e_minus) * 1e3
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    /// V/m.
    pub f: f64,
    pub omega1: f64,
    pub omega2: f64,
    /// meV.
    pub v_f: f64,
    pub e_minus: f64,
    pub e_plus: f64,
    pub a1: f64,
    pub a2: f64,
    /// 1/s.
    pub gamma_minus: f64,
    pub gamma_plus: f64,
}

/// Exciton energies `(ω1, ω2)` of dots I and II, eV.
pub fn dot_energies(pair: &PairSpec, field: &FieldConfig) -> Result<(f64, f64)> {
    let f = field.magnitude();
    Ok((
        exciton_energy(pair.dot_i(), f, pair.eps_r())?,
        exciton_energy(pair.dot_ii(), f, pair.eps_r())?,
    ))
}

/// `ω1(F) − ω2(F)` in eV.
pub fn detuning(pair: &PairSpec, field: f64) -> Result<f64> {
    Ok(exciton_energy(pair.dot_i(), field, pair.eps_r())?
        - exciton_energy(pair.dot_ii(), field, pair.eps_r())?)
}

/// The Hamiltonian in eV on `{|00⟩, |01⟩, |10⟩, |11⟩}` from its parts.
pub fn hamiltonian_from_parts(
    omega0: f64,
    omega1: f64,
    omega2: f64,
    v_f_mev: f64,
    v_xx_mev: f64,
) -> Result<HermitianMatrix> {
    let v = v_f_mev * 1e-3;
    #[rustfmt::skip]
    let rows = [
        omega0, 0.0, 0.0, 0.0,
        0.0, omega0 + omega2, v, 0.0,
        0.0, v, omega0 + omega1, 0.0,
        0.0, 0.0, 0.0, omega0 + omega1 + omega2 + v_xx_mev * 1e-3,
    ];
    HermitianMatrix::from_real(4, &rows)
}

pub fn hamiltonian(pair: &PairSpec, field: &FieldConfig) -> Result<HermitianMatrix> {
    let (w1, w2) = dot_energies(pair, field)?;
    let v = forster_coupling(pair, field)?;
    hamiltonian_from_parts(pair.omega0_ev(), w1, w2, v, pair.v_xx_mev())
}

fn sign(x: f64) -> f64 {
    if x >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// Closed-form eigensystem for given level energies (eV) and couplings (meV).
pub fn eigensystem_from_parts(
    omega0: f64,
    omega1: f64,
    omega2: f64,
    v_f_mev: f64,
    v_xx_mev: f64,
) -> EigenResult {
    let v = v_f_mev * 1e-3;
    let dw = omega1 - omega2;
    let g = dw.hypot(2.0 * v);
    let s_dw = sign(dw);
    let e_alg_minus = omega0 + omega1 - 0.5 * dw - 0.5 * s_dw * g;
    let e_alg_plus = omega0 + omega1 - 0.5 * dw + 0.5 * s_dw * g;
    let (a1, a2) = if g == 0.0 {
        (0.0, 1.0)
    } else {
        let s = if dw == 0.0 { sign(v) } else { sign(v) * s_dw };
        (
            v.abs() * (2.0 / (g * (g + dw.abs()))).sqrt(),
            s * ((g + dw.abs()) / (2.0 * g)).sqrt(),
        )
    };
    let a = if v == 0.0 {
        1.0
    } else if dw == 0.0 {
        f64::INFINITY
    } else {
        g / dw.abs()
    };
    let branch = if dw >= 0.0 {
        Branch::MinusLower
    } else {
        Branch::PlusLower
    };
    let (e_minus, e_plus) = match branch {
        Branch::MinusLower => (e_alg_minus, e_alg_plus),
        Branch::PlusLower => (e_alg_plus, e_alg_minus),
    };
    EigenResult {
        e00: omega0,
        e_minus,
        e_plus,
        e11: omega0 + omega1 + omega2 + v_xx_mev * 1e-3,
        a,
        a1,
        a2,
        omega1,
        omega2,
        delta_omega: dw,
        v_f: v_f_mev,
        branch,
        psi_minus: [-a2, a1],
        psi_plus: [a1, a2],
    }
}

pub fn eigensystem(pair: &PairSpec, field: &FieldConfig) -> Result<EigenResult> {
    let (w1, w2) = dot_energies(pair, field)?;
    let v = forster_coupling(pair, field)?;
    Ok(eigensystem_from_parts(
        pair.omega0_ev(),
        w1,
        w2,
        v,
        pair.v_xx_mev(),
    ))
}

/// One row of a sweep at field `field`.
pub fn sweep_row(pair: &PairSpec, field: &FieldConfig) -> Result<SweepRow> {
    let eig = eigensystem(pair, field)?;
    let (gamma_minus, gamma_plus) = level_rates_from(pair, field, &eig)?;
    Ok(SweepRow {
        f: field.magnitude(),
        omega1: eig.omega1,
        omega2: eig.omega2,
        v_f: eig.v_f,
        e_minus: eig.e_minus,
        e_plus: eig.e_plus,
        a1: eig.a1,
        a2: eig.a2,
        gamma_minus,
        gamma_plus,
    })
}

/// `points` uniformly spaced fields from `f_start` to `f_stop` inclusive.
pub fn field_grid(f_start: f64, f_stop: f64, points: usize) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(Error::InvalidInput(format!(
            "a sweep needs at least 2 points, got {points}"
        )));
    }
    if !(f_start.is_finite() && f_stop.is_finite() && f_start < f_stop) {
        return Err(Error::InvalidInput(format!(
            "sweep range must satisfy start < stop (got {f_start}, {f_stop})"
        )));
    }
    let n = (points - 1) as f64;
    Ok((0..points)
        .map(|i| {
            if i == points - 1 {
                f_stop
            } else {
                f_start + (f_stop - f_start) * (i as f64 / n)
            }
        })
        .collect())
}

/// Evaluates [`sweep_row`] on a uniform grid. Rows are computed in parallel
/// and returned in ascending field order.
pub fn sweep(
    pair: &PairSpec,
    direction: Vec3,
    f_start: f64,
    f_stop: f64,
    points: usize,
) -> Result<Vec<SweepRow>> {
    let grid = field_grid(f_start, f_stop, points)?;
    FieldConfig::new(0.0, direction)?;
    grid.par_iter()
        .map(|&f| sweep_row(pair, &FieldConfig::new(f, direction)?))
        .collect()
}

fn same_levels(a: &DotSpec, b: &DotSpec) -> bool {
    a.c(Particle::Electron) == b.c(Particle::Electron)
        && a.c(Particle::Hole) == b.c(Particle::Hole)
        && a.mass_rel(Particle::Electron) == b.mass_rel(Particle::Electron)
        && a.mass_rel(Particle::Hole) == b.mass_rel(Particle::Hole)
        && a.e_gap_ev() == b.e_gap_ev()
}

// Coefficient of −(eF)² in ω(F), m²/J.
fn field_curvature(dot: &DotSpec, eps_r: f64) -> Result<f64> {
    let ce = dot.isotropic_c(Particle::Electron)?;
    let ch = dot.isotropic_c(Particle::Hole)?;
    let l = confinement_lengths(dot);
    let s = l.d_e.x.powi(2) + l.d_h.x.powi(2);
    let m0 = coulomb_eh(dot, 0.0, eps_r)? * MEV;
    let q = 1.0 / ce + 1.0 / ch;
    Ok(0.5 / ce + 0.5 / ch - m0 * q * q / (3.0 * s))
}

/// Resonance field from the closed form `F² = Δω(0) / (e² β)`.
///
/// `Δω(0)` collects the band-gap, confinement and zero-field binding
/// differences; `β` is the difference of the dots' quadratic field
/// coefficients, including the field dependence of `M_eh`.
pub fn resonance_field_analytic(pair: &PairSpec) -> Result<f64> {
    let (d1, d2) = (pair.dot_i(), pair.dot_ii());
    if same_levels(d1, d2) {
        return Err(Error::DegenerateDots);
    }
    let eps = pair.eps_r();
    let m1 = coulomb_eh(d1, 0.0, eps)? * 1e-3;
    let m2 = coulomb_eh(d2, 0.0, eps)? * 1e-3;
    let conf1 = ground_energy(d1, Particle::Electron) + ground_energy(d1, Particle::Hole);
    let conf2 = ground_energy(d2, Particle::Electron) + ground_energy(d2, Particle::Hole);
    let dw0 = (d1.e_gap_ev() - d2.e_gap_ev()) + (conf1 - conf2) - (m1 - m2);
    let k1 = field_curvature(d1, eps)?;
    let k2 = field_curvature(d2, eps)?;
    let beta = k1 - k2;
    if beta.abs() <= 1e-12 * (k1.abs() + k2.abs()) {
        return Err(Error::NoResonance(
            "the two dots have the same Stark curvature".into(),
        ));
    }
    let f_sq = dw0 * EV / (E_CHARGE * E_CHARGE * beta);
    if f_sq < 0.0 {
        return Err(Error::NoResonance(format!(
            "the detuning grows with field (F² = {f_sq:e} V²/m²)"
        )));
    }
    let f = f_sq.sqrt();
    for dot in [d1, d2] {
        let alpha_de = validity_parameter(dot, f)?;
        if alpha_de > FIELD_VALIDITY_LIMIT {
            return Err(Error::FieldOutOfValidity {
                field: f,
                alpha_de,
                limit: FIELD_VALIDITY_LIMIT,
            });
        }
    }
    Ok(f)
}

/// Largest field magnitude accepted by [`coulomb_eh`] for both dots.
pub fn max_valid_field(pair: &PairSpec) -> Result<f64> {
    let a = validity_parameter(pair.dot_i(), 1.0)?;
    let b = validity_parameter(pair.dot_ii(), 1.0)?;
    Ok(FIELD_VALIDITY_LIMIT / a.max(b))
}

/// Root of `Δω(F)` on [`DEFAULT_BRACKET`].
pub fn resonance_field_numeric(pair: &PairSpec) -> Result<f64> {
    resonance_field_in(pair, DEFAULT_BRACKET.0, DEFAULT_BRACKET.1)
}

/// Root of `Δω(F)` on `[lo, hi]`, to [`RESONANCE_TOLERANCE`].
///
/// The upper end is clipped to [`max_valid_field`] so the bracket stays
/// inside the range where `M_eh(F)` is defined.
pub fn resonance_field_in(pair: &PairSpec, lo: f64, hi: f64) -> Result<f64> {
    let hi = hi.min(max_valid_field(pair)?);
    if !(lo < hi) {
        return Err(Error::NoSignChange { lo, hi });
    }
    let f = |x: f64| detuning(pair, x).unwrap_or(f64::NAN);
    find_root(f, lo, hi, RESONANCE_TOLERANCE)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Anticrossing {
    /// Minimum of `E+ − E−`, meV.
    pub gap_mev: f64,
    /// Field at the minimum, V/m.
    pub field: f64,
    /// Root of `Δω`, V/m.
    pub resonance_field: f64,
    /// `V_F` at the resonance field, meV.
    pub v_f_at_resonance_mev: f64,
}

/// Minimum of `E+ − E−` near resonance.
///
/// A 41-point scan of `F_res ± max(0.1 F_res, 10⁵ V/m)` is refined by
/// golden-section search to [`GAP_TOLERANCE`].
pub fn anticrossing_gap(pair: &PairSpec, direction: Vec3) -> Result<Anticrossing> {
    let f_res = match resonance_field_numeric(pair) {
        Ok(f) => f,
        Err(Error::NoSignChange { .. }) => {
            return Err(Error::NoResonance("detuning does not change sign".into()))
        }
        Err(e) => return Err(e),
    };
    let at = |f: f64| FieldConfig::new(f, direction);
    let gap = |f: f64| -> Result<f64> { Ok(eigensystem(pair, &at(f)?)?.gap_mev()) };
    let half_width = (0.1 * f_res).max(1e5);
    let lo = (f_res - half_width).max(0.0);
    let hi = (f_res + half_width).min(max_valid_field(pair)?);
    let grid = field_grid(lo, hi, 41)?;
    let values = grid.iter().map(|&f| gap(f)).collect::<Result<Vec<_>>>()?;
    let best = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let a = grid[best.saturating_sub(1)];
    let b = grid[(best + 1).min(grid.len() - 1)];
    let (mut field, mut gap_mev) =
        minimize_golden(|f| gap(f).unwrap_or(f64::INFINITY), a, b, GAP_TOLERANCE)?;
    for (f, g) in [(grid[best], values[best]), (f_res, gap(f_res)?)] {
        if g < gap_mev {
            field = f;
            gap_mev = g;
        }
    }
    Ok(Anticrossing {
        gap_mev,
        field,
        resonance_field: f_res,
        v_f_at_resonance_mev: forster_coupling(pair, &at(f_res)?)?,
    })
}
