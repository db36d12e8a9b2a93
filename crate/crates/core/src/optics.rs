//! Transition dipoles, spontaneous emission and Lorentzian absorption lines.

use std::f64::consts::PI;

use crate::constants::{C_LIGHT, EPS0, EV, E_ANGSTROM, HBAR};
use crate::coupling::{overlap, PairSpec};
use crate::spectrum::{eigensystem, EigenResult};
use crate::{Error, FieldConfig, Result, Vec3};

/// Refractive index used when none is configured.
pub const DEFAULT_ETA: f64 = 3.46;

/// Energy levels of the coupled pair; `Minus`/`Plus` are the lower/upper
/// single-exciton levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    Ground,
    Minus,
    Plus,
    Biexciton,
}

impl Level {
    pub fn label(&self) -> &'static str {
        match self {
            Level::Ground => "00",
            Level::Minus => "minus",
            Level::Plus => "plus",
            Level::Biexciton => "11",
        }
    }
}

/// `⟨to| e r |from⟩` in e·Å.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionDipole {
    pub vector: Vec3,
    pub from_state: Level,
    pub to_state: Level,
}

impl TransitionDipole {
    pub fn magnitude(&self) -> f64 {
        self.vector.norm()
    }
}

/// Effective dipoles `O_I d_I` and `O_II d_II` (e·Å) at this field.
pub fn effective_dipoles(pair: &PairSpec, field: &FieldConfig) -> Result<(Vec3, Vec3)> {
    Ok((
        pair.dot_i().dipole_ea() * overlap(pair.dot_i(), field)?,
        pair.dot_ii().dipole_ea() * overlap(pair.dot_ii(), field)?,
    ))
}

/// Matrix of `e r` (e·Å) on `{|00⟩, |01⟩, |10⟩, |11⟩}`.
///
/// Only single-exciton steps connect: `|00⟩↔|01⟩` and `|10⟩↔|11⟩` carry dot
/// II's dipole, `|00⟩↔|10⟩` and `|01⟩↔|11⟩` dot I's. `⟨00|r|11⟩` is zero.
pub fn dipole_operator(pair: &PairSpec, field: &FieldConfig) -> Result<[[Vec3; 4]; 4]> {
    let (p1, p2) = effective_dipoles(pair, field)?;
    let mut m = [[Vec3::ZERO; 4]; 4];
    for (i, j, p) in [(0, 1, p2), (0, 2, p1), (1, 3, p1), (2, 3, p2)] {
        m[i][j] = p;
        m[j][i] = p;
    }
    Ok(m)
}

fn dipole_for(eig: &EigenResult, p1: Vec3, p2: Vec3, level: Level) -> Vec3 {
    let [c01, c10] = match level {
        Level::Minus => eig.lower_state(),
        Level::Plus => eig.upper_state(),
        Level::Ground | Level::Biexciton => return Vec3::ZERO,
    };
    p2 * c01 + p1 * c10
}

/// Dipole for the decay of `level` to `|00⟩`.
pub fn transition_dipole(
    pair: &PairSpec,
    field: &FieldConfig,
    level: Level,
) -> Result<TransitionDipole> {
    let eig = eigensystem(pair, field)?;
    let (p1, p2) = effective_dipoles(pair, field)?;
    Ok(TransitionDipole {
        vector: dipole_for(&eig, p1, p2, level),
        from_state: level,
        to_state: Level::Ground,
    })
}

/// `Γ = √εr ω³ |p|² / (3π c³ ħ ε0)` in 1/s, for a transition energy in eV
/// and a dipole in e·Å.
pub fn spontaneous_rate(omega10_ev: f64, dipole_ea: f64, eps_r: f64) -> Result<f64> {
    if !(omega10_ev.is_finite() && omega10_ev > 0.0) {
        return Err(Error::NonpositiveInput("omega10"));
    }
    if !(eps_r.is_finite() && eps_r > 0.0) {
        return Err(Error::NonpositiveInput("eps_r"));
    }
    let w = omega10_ev * EV / HBAR;
    let p = dipole_ea * E_ANGSTROM;
    Ok(eps_r.sqrt() * w.powi(3) * p * p / (3.0 * PI * C_LIGHT.powi(3) * HBAR * EPS0))
}

/// Decay rates `(γ−, γ+)` of the lower and upper single-exciton levels.
pub fn level_rates(pair: &PairSpec, field: &FieldConfig) -> Result<(f64, f64)> {
    let eig = eigensystem(pair, field)?;
    level_rates_from(pair, field, &eig)
}

pub(crate) fn level_rates_from(
    pair: &PairSpec,
    field: &FieldConfig,
    eig: &EigenResult,
) -> Result<(f64, f64)> {
    let (p1, p2) = effective_dipoles(pair, field)?;
    let minus = dipole_for(eig, p1, p2, Level::Minus).norm();
    let plus = dipole_for(eig, p1, p2, Level::Plus).norm();
    Ok((
        spontaneous_rate(eig.e_minus - eig.e00, minus, pair.eps_r())?,
        spontaneous_rate(eig.e_plus - eig.e00, plus, pair.eps_r())?,
    ))
}

/// One absorption line sampled on a frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct LineSpectrum {
    pub level: Level,
    /// eV.
    pub omega_grid: Vec<f64>,
    /// Absorption cross-section, m².
    pub alpha: Vec<f64>,
    /// Line centre, eV.
    pub center: f64,
    /// Displayed full width at half maximum, eV.
    pub fwhm: f64,
    /// Unbroadened spontaneous rate, 1/s.
    pub rate: f64,
    /// Transition dipole magnitude, e·Å.
    pub dipole: f64,
}

impl LineSpectrum {
    /// Width at half maximum read off the sampled curve, linearly
    /// interpolating both crossings. `None` if either crossing is off-grid.
    pub fn measured_fwhm(&self) -> Option<f64> {
        let (peak_idx, &peak) = self
            .alpha
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))?;
        if peak <= 0.0 {
            return None;
        }
        let half = 0.5 * peak;
        let x = &self.omega_grid;
        let y = &self.alpha;
        let left = (1..=peak_idx).rev().find(|&i| y[i - 1] < half).map(|i| {
            let t = (half - y[i - 1]) / (y[i] - y[i - 1]);
            x[i - 1] + t * (x[i] - x[i - 1])
        })?;
        let right = (peak_idx..y.len() - 1)
            .find(|&i| y[i + 1] < half)
            .map(|i| {
                let t = (y[i] - half) / (y[i] - y[i + 1]);
                x[i] + t * (x[i + 1] - x[i])
            })?;
        Some(right - left)
    }
}

/// Lorentzian line of a transition at `center_ev` with rate `rate` and dipole
/// `dipole_ea`:
/// `α(ω) = [ω|p|²/(cηħε0)] · (Γ'/2) / ((ω10 − ω)² + (Γ'/2)²)`,
/// `Γ' = broadening_factor · Γ`.
pub fn lorentzian_line(
    level: Level,
    center_ev: f64,
    rate: f64,
    dipole_ea: f64,
    omega_grid: &[f64],
    eta: f64,
    broadening_factor: f64,
) -> Result<LineSpectrum> {
    validate_grid(omega_grid, eta, broadening_factor)?;
    let p = dipole_ea * E_ANGSTROM;
    let w10 = center_ev * EV / HBAR;
    let half = 0.5 * broadening_factor * rate;
    let alpha = omega_grid
        .iter()
        .map(|&e| {
            let w = e * EV / HBAR;
            let prefactor = w * p * p / (C_LIGHT * eta * HBAR * EPS0);
            let dw = w10 - w;
            prefactor * half / (dw * dw + half * half)
        })
        .collect();
    Ok(LineSpectrum {
        level,
        omega_grid: omega_grid.to_vec(),
        alpha,
        center: center_ev,
        fwhm: broadening_factor * (rate * HBAR / EV),
        rate,
        dipole: dipole_ea,
    })
}

fn validate_grid(grid: &[f64], eta: f64, broadening_factor: f64) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if grid.iter().any(|x| !x.is_finite()) || grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput(
            "frequency grid must be finite and ascending".into(),
        ));
    }
    if !(eta.is_finite() && eta > 0.0) {
        return Err(Error::NonpositiveInput("eta"));
    }
    if !(broadening_factor.is_finite() && broadening_factor >= 1.0) {
        return Err(Error::InvalidInput(format!(
            "broadening_factor must be at least 1, got {broadening_factor}"
        )));
    }
    Ok(())
}

/// Absorption lines `[E−, E+]` at this field on `omega_grid` (eV).
pub fn absorption_spectrum(
    pair: &PairSpec,
    field: &FieldConfig,
    omega_grid: &[f64],
    eta: f64,
    broadening_factor: f64,
) -> Result<Vec<LineSpectrum>> {
    validate_grid(omega_grid, eta, broadening_factor)?;
    let eig = eigensystem(pair, field)?;
    let (p1, p2) = effective_dipoles(pair, field)?;
    let (gamma_minus, gamma_plus) = level_rates_from(pair, field, &eig)?;
    [
        (Level::Minus, eig.e_minus - eig.e00, gamma_minus),
        (Level::Plus, eig.e_plus - eig.e00, gamma_plus),
    ]
    .into_iter()
    .map(|(level, center, rate)| {
        let dipole = dipole_for(&eig, p1, p2, level).norm();
        lorentzian_line(
            level,
            center,
            rate,
            dipole,
            omega_grid,
            eta,
            broadening_factor,
        )
    })
    .collect()
}
