//! Envelope overlaps, dipole orientation and the Förster element V_F.

use std::f64::consts::PI;

use crate::constants::{EPS0, EV, E_ANGSTROM, E_CHARGE, MEV, NM};
use crate::numerics::{integrate, QuadratureSpec};
use crate::singledot::{confinement_lengths, envelope_1d, stark_terms, DotSpec, Particle};
use crate::{Error, Result, Vec3};

pub use crate::field::FieldConfig;

/// Minimum separation in units of the largest transition-density length.
pub const DIPOLE_SEPARATION_FACTOR: f64 = 3.0;

const ORACLE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DotIndex {
    I,
    II,
}

/// Two dots in a common dielectric.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairSpec {
    dot_i: DotSpec,
    dot_ii: DotSpec,
    separation: Vec3,
    eps_r: f64,
    v_xx: f64,
    omega0: f64,
}

impl PairSpec {
    /// * `separation_nm` – vector from dot I to dot II, nm
    /// * `eps_r` – relative permittivity, at least 1
    /// * `v_xx_mev` – biexciton shift entering only `E11`, meV
    /// * `omega0_ev` – ground-state reference energy, eV
    pub fn new(
        dot_i: DotSpec,
        dot_ii: DotSpec,
        separation_nm: Vec3,
        eps_r: f64,
        v_xx_mev: f64,
        omega0_ev: f64,
    ) -> Result<Self> {
        let separation = separation_nm * NM;
        let r = separation.norm();
        if !(separation.is_finite() && r > 0.0) {
            return Err(Error::NonpositiveInput("separation"));
        }
        if !(eps_r.is_finite() && eps_r >= 1.0) {
            return Err(Error::InvalidInput(format!(
                "eps_r must be at least 1, got {eps_r}"
            )));
        }
        if !v_xx_mev.is_finite() || !omega0_ev.is_finite() {
            return Err(Error::InvalidInput("v_xx and omega0 must be finite".into()));
        }
        let pair = PairSpec {
            dot_i,
            dot_ii,
            separation,
            eps_r,
            v_xx: v_xx_mev * MEV,
            omega0: omega0_ev * EV,
        };
        pair.check_dipole_approximation()?;
        Ok(pair)
    }

    pub fn dot(&self, which: DotIndex) -> &DotSpec {
        match which {
            DotIndex::I => &self.dot_i,
            DotIndex::II => &self.dot_ii,
        }
    }

    pub fn dot_i(&self) -> &DotSpec {
        &self.dot_i
    }

    pub fn dot_ii(&self) -> &DotSpec {
        &self.dot_ii
    }

    pub fn separation_nm(&self) -> Vec3 {
        self.separation * (1.0 / NM)
    }

    pub fn eps_r(&self) -> f64 {
        self.eps_r
    }

    pub fn v_xx_mev(&self) -> f64 {
        self.v_xx / MEV
    }

    pub fn omega0_ev(&self) -> f64 {
        self.omega0 / EV
    }

    pub fn with_separation_nm(&self, separation_nm: Vec3) -> Result<Self> {
        Self::new(
            self.dot_i,
            self.dot_ii,
            separation_nm,
            self.eps_r,
            self.v_xx_mev(),
            self.omega0_ev(),
        )
    }

    pub fn with_dots(&self, dot_i: DotSpec, dot_ii: DotSpec) -> Result<Self> {
        Self::new(
            dot_i,
            dot_ii,
            self.separation_nm(),
            self.eps_r,
            self.v_xx_mev(),
            self.omega0_ev(),
        )
    }

    /// Smallest separation (nm) for which the dipole expansion is accepted.
    pub fn minimum_separation_nm(&self) -> f64 {
        DIPOLE_SEPARATION_FACTOR
            * transition_length(&self.dot_i).max(transition_length(&self.dot_ii))
            / NM
    }

    fn check_dipole_approximation(&self) -> Result<()> {
        let required_nm = self.minimum_separation_nm();
        let separation_nm = self.separation.norm() / NM;
        if separation_nm < required_nm {
            return Err(Error::DipoleApproxInvalid {
                separation_nm,
                required_nm,
            });
        }
        Ok(())
    }
}

/// Width of the electron–hole transition density `φ_e φ_h`, largest over the
/// axes: `d_e d_h / √(d_e² + d_h²)` in metres.
pub fn transition_length(dot: &DotSpec) -> f64 {
    let l = confinement_lengths(dot);
    let de = l.d_e.as_array();
    let dh = l.d_h.as_array();
    (0..3)
        .map(|j| de[j] * dh[j] / de[j].hypot(dh[j]))
        .fold(0.0, f64::max)
}

/// Electron–hole envelope overlap of a spherical dot in a field,
/// `(2d_ed_h/s)^{3/2} · exp(−δ²/(2s))` with `s = d_e² + d_h²` and
/// `δ = eF(1/c_e + 1/c_h)`.
pub fn overlap(dot: &DotSpec, field: &FieldConfig) -> Result<f64> {
    let ce = dot.isotropic_c(Particle::Electron)?;
    let ch = dot.isotropic_c(Particle::Hole)?;
    let l = confinement_lengths(dot);
    let (de, dh) = (l.d_e.x, l.d_h.x);
    let s = de * de + dh * dh;
    let delta = E_CHARGE * field.magnitude() * (1.0 / ce + 1.0 / ch);
    Ok((2.0 * de * dh / s).powf(1.5) * (-delta * delta / (2.0 * s)).exp())
}

/// Overlap `∫ φ_e φ_h d³r` by quadrature, for any per-axis lengths.
///
/// Both envelopes are products over axes, so the volume integral is
/// evaluated as the product of three one-dimensional integrals.
pub fn overlap_oracle(dot: &DotSpec, field: &FieldConfig) -> Result<f64> {
    let l = confinement_lengths(dot);
    let se = stark_terms(dot, field, Particle::Electron).displacement.0;
    let sh = stark_terms(dot, field, Particle::Hole).displacement.0;
    let de = l.d_e.as_array();
    let dh = l.d_h.as_array();
    let spec = QuadratureSpec::new(ORACLE_TOLERANCE, 1e-300, 2000)?;
    let mut product = 1.0;
    for j in 0..3 {
        let scale = de[j].max(dh[j]);
        let lo = se[j].min(sh[j]) / scale - 12.0;
        let hi = se[j].max(sh[j]) / scale + 12.0;
        let q = integrate(
            |u| {
                let x = u * scale;
                let fe = envelope_1d(0, x - se[j], de[j]).unwrap_or(f64::NAN);
                let fh = envelope_1d(0, x - sh[j], dh[j]).unwrap_or(f64::NAN);
                fe * fh * scale
            },
            lo,
            hi,
            &spec,
        )?;
        product *= q.value;
    }
    Ok(product)
}

/// `κ = d̂1·d̂2 − 3(d̂1·R̂)(d̂2·R̂)`.
pub fn orientation_factor(d1_dir: Vec3, d2_dir: Vec3, r_dir: Vec3) -> f64 {
    d1_dir.dot(&d2_dir) - 3.0 * d1_dir.dot(&r_dir) * d2_dir.dot(&r_dir)
}

/// Point-dipole interaction in meV,
/// `[p1·p2 − 3(p1·R̂)(p2·R̂)] / (4π ε0 εr R³)`,
/// for dipoles in e·Å and a separation in nm.
pub fn dipole_coupling(p1_ea: Vec3, p2_ea: Vec3, separation_nm: Vec3, eps_r: f64) -> Result<f64> {
    let r = separation_nm * NM;
    let rn = r.norm();
    if !(rn > 0.0 && rn.is_finite()) {
        return Err(Error::NonpositiveInput("separation"));
    }
    if !(eps_r.is_finite() && eps_r > 0.0) {
        return Err(Error::NonpositiveInput("eps_r"));
    }
    let r_hat = r * (1.0 / rn);
    let p1 = p1_ea * E_ANGSTROM;
    let p2 = p2_ea * E_ANGSTROM;
    let angular = p1.dot(&p2) - 3.0 * p1.dot(&r_hat) * p2.dot(&r_hat);
    Ok(angular / (4.0 * PI * EPS0 * eps_r * rn.powi(3)) / MEV)
}

/// Signed Förster element `V_F` in meV.
///
/// Each dot contributes its interband dipole scaled by its field-dependent
/// envelope overlap; the pair then interacts as two point dipoles. Dipoles
/// aligned head to tail along `R` give a negative `V_F`.
pub fn forster_coupling(pair: &PairSpec, field: &FieldConfig) -> Result<f64> {
    pair.check_dipole_approximation()?;
    let o1 = overlap(pair.dot_i(), field)?;
    let o2 = overlap(pair.dot_ii(), field)?;
    dipole_coupling(
        pair.dot_i().dipole_ea() * o1,
        pair.dot_ii().dipole_ea() * o2,
        pair.separation_nm(),
        pair.eps_r(),
    )
}
