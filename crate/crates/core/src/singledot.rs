//! One parabolic dot: confinement lengths, envelopes, Stark terms and the
//! electron–hole Coulomb binding.

use std::f64::consts::PI;

use crate::constants::{coulomb_constant, EV, E_ANGSTROM, E_CHARGE, HBAR, M0, MEV, NM};
use crate::numerics::{erf, integrate, QuadratureSpec};
use crate::{Axes, Error, FieldConfig, Result, Vec3};

/// Largest `α d_e` accepted by [`coulomb_eh`].
pub const FIELD_VALIDITY_LIMIT: f64 = 1.0;
/// Highest Hermite index supported by [`envelope_1d`].
pub const MAX_HERMITE: u32 = 12;

const ORACLE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Particle {
    Electron,
    Hole,
}

/// Parameters of a single dot. Stored in SI; constructors take interface units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DotSpec {
    c_e: Axes,
    c_h: Axes,
    m_e_rel: f64,
    m_h_rel: f64,
    e_gap: f64,
    d_cv: f64,
    d_cv_dir: Vec3,
}

impl DotSpec {
    /// * `c_e`, `c_h` – confinement constants per axis, J/m²
    /// * `m_e_rel`, `m_h_rel` – effective masses in units of m0
    /// * `e_gap_ev` – band gap, eV
    /// * `d_cv_ea` – interband dipole magnitude, e·Å
    /// * `d_cv_dir` – unit vector along the interband dipole
    pub fn new(
        c_e: Axes,
        c_h: Axes,
        m_e_rel: f64,
        m_h_rel: f64,
        e_gap_ev: f64,
        d_cv_ea: f64,
        d_cv_dir: Vec3,
    ) -> Result<Self> {
        if !c_e.all_positive() {
            return Err(Error::NonpositiveInput("c_e"));
        }
        if !c_h.all_positive() {
            return Err(Error::NonpositiveInput("c_h"));
        }
        positive(m_e_rel, "m_e_rel")?;
        positive(m_h_rel, "m_h_rel")?;
        positive(e_gap_ev, "e_gap")?;
        if !(d_cv_ea.is_finite() && d_cv_ea >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "d_cv must be finite and non-negative, got {d_cv_ea}"
            )));
        }
        if !d_cv_dir.is_unit() {
            return Err(Error::InvalidInput(format!(
                "d_cv direction {:?} is not a unit vector",
                d_cv_dir.0
            )));
        }
        Ok(DotSpec {
            c_e,
            c_h,
            m_e_rel,
            m_h_rel,
            e_gap: e_gap_ev * EV,
            d_cv: d_cv_ea * E_ANGSTROM,
            d_cv_dir,
        })
    }

    /// Spherical dot with the same constant `c` (J/m²) for electrons and holes.
    pub fn isotropic(
        c: f64,
        m_e_rel: f64,
        m_h_rel: f64,
        e_gap_ev: f64,
        d_cv_ea: f64,
        d_cv_dir: Vec3,
    ) -> Result<Self> {
        Self::new(
            Axes::isotropic(c),
            Axes::isotropic(c),
            m_e_rel,
            m_h_rel,
            e_gap_ev,
            d_cv_ea,
            d_cv_dir,
        )
    }

    pub fn c(&self, particle: Particle) -> Axes {
        match particle {
            Particle::Electron => self.c_e,
            Particle::Hole => self.c_h,
        }
    }

    pub fn mass_rel(&self, particle: Particle) -> f64 {
        match particle {
            Particle::Electron => self.m_e_rel,
            Particle::Hole => self.m_h_rel,
        }
    }

    /// Effective mass in kg.
    pub fn mass(&self, particle: Particle) -> f64 {
        self.mass_rel(particle) * M0
    }

    pub fn e_gap_ev(&self) -> f64 {
        self.e_gap / EV
    }

    pub fn d_cv_ea(&self) -> f64 {
        self.d_cv / E_ANGSTROM
    }

    /// Interband dipole magnitude in C·m.
    pub fn d_cv_si(&self) -> f64 {
        self.d_cv
    }

    pub fn d_cv_dir(&self) -> Vec3 {
        self.d_cv_dir
    }

    /// Interband dipole vector in e·Å.
    pub fn dipole_ea(&self) -> Vec3 {
        self.d_cv_dir * self.d_cv_ea()
    }

    /// Scalar `c` for a particle, or `ANISOTROPIC_DOT`.
    pub fn isotropic_c(&self, particle: Particle) -> Result<f64> {
        self.c(particle)
            .isotropic_value()
            .ok_or(Error::AnisotropicDot)
    }

    pub fn is_isotropic(&self) -> bool {
        self.c_e.isotropic_value().is_some() && self.c_h.isotropic_value().is_some()
    }
}

fn positive(v: f64, name: &'static str) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::NonpositiveInput(name))
    }
}

/// Confinement lengths in metres.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfinementLengths {
    pub d_e: Axes,
    pub d_h: Axes,
}

impl ConfinementLengths {
    pub fn get(&self, particle: Particle) -> Axes {
        match particle {
            Particle::Electron => self.d_e,
            Particle::Hole => self.d_h,
        }
    }

    /// Largest length over both particles and all axes.
    pub fn max(&self) -> f64 {
        self.d_e.max().max(self.d_h.max())
    }
}

/// `c = 2V/r²` (J/m²) for a well of `depth_mev` reached at `radius_nm`.
pub fn well_depth_to_c(depth_mev: f64, radius_nm: f64) -> Result<f64> {
    positive(depth_mev, "depth")?;
    positive(radius_nm, "radius")?;
    let r = radius_nm * NM;
    Ok(2.0 * depth_mev * MEV / (r * r))
}

/// `d = (ħ/√(m c))^{1/2}` in metres.
pub fn confinement_length(c: f64, mass: f64) -> f64 {
    (HBAR / (mass * c).sqrt()).sqrt()
}

pub fn confinement_lengths(dot: &DotSpec) -> ConfinementLengths {
    let me = dot.mass(Particle::Electron);
    let mh = dot.mass(Particle::Hole);
    ConfinementLengths {
        d_e: dot.c_e.map(|c| confinement_length(c, me)),
        d_h: dot.c_h.map(|c| confinement_length(c, mh)),
    }
}

/// Normalised 1D oscillator eigenfunction `ξ_n(x)` of width `d`, in m^(-1/2).
pub fn envelope_1d(n: u32, x: f64, d: f64) -> Result<f64> {
    if n > MAX_HERMITE {
        return Err(Error::NTooLarge(n));
    }
    positive(d, "d")?;
    let u = x / d;
    let (mut h_prev, mut h) = (0.0, 1.0);
    for k in 0..n {
        let next = 2.0 * u * h - 2.0 * k as f64 * h_prev;
        h_prev = h;
        h = next;
    }
    let factorial: f64 = (1..=n).map(f64::from).product();
    let norm = (2f64.powi(n as i32) * factorial * PI.sqrt() * d).sqrt();
    Ok(h * (-0.5 * u * u).exp() / norm)
}

/// Product of three ground-state Gaussians centred at `center_shift`, m^(-3/2).
pub fn ground_envelope(r: Vec3, lengths: Axes, center_shift: Vec3) -> f64 {
    let d = lengths.as_array();
    let mut value = 1.0;
    for j in 0..3 {
        let u = (r.0[j] - center_shift.0[j]) / d[j];
        value *= (PI * d[j] * d[j]).powf(-0.25) * (-0.5 * u * u).exp();
    }
    value
}

/// `E0 = ½ħ(ω_x + ω_y + ω_z)` in eV.
pub fn ground_energy(dot: &DotSpec, particle: Particle) -> f64 {
    let m = dot.mass(particle);
    let sum: f64 = dot
        .c(particle)
        .as_array()
        .iter()
        .map(|c| (c / m).sqrt())
        .sum();
    0.5 * HBAR * sum / EV
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StarkShift {
    /// Envelope centre displacement, m.
    pub displacement: Vec3,
    /// Change of the single-particle ground energy, eV.
    pub energy_shift: f64,
}

/// Field-induced displacement and energy change of one particle.
///
/// The electron centre moves by `+eF_j/c_j` along each axis, the hole by
/// `-eF_j/c_j`; either way the ground energy drops by `Σ (eF_j)²/(2c_j)`.
pub fn stark_terms(dot: &DotSpec, field: &FieldConfig, particle: Particle) -> StarkShift {
    let c = dot.c(particle).as_array();
    let f = field.vector().0;
    let sign = match particle {
        Particle::Electron => 1.0,
        Particle::Hole => -1.0,
    };
    let mut displacement = [0.0; 3];
    let mut shift = 0.0;
    for j in 0..3 {
        let force = E_CHARGE * f[j];
        displacement[j] = sign * force / c[j];
        shift -= force * force / (2.0 * c[j]);
    }
    StarkShift {
        displacement: Vec3(displacement),
        energy_shift: shift / EV,
    }
}

/// Electron–hole centre separation `eF(1/c_e + 1/c_h)` in metres.
pub fn charge_separation(dot: &DotSpec, field: f64) -> Result<f64> {
    let ce = dot.isotropic_c(Particle::Electron)?;
    let ch = dot.isotropic_c(Particle::Hole)?;
    Ok(E_CHARGE * field.abs() * (1.0 / ce + 1.0 / ch))
}

/// The expansion parameter `α d_e = 2δ/d_e` with `δ` the charge separation.
pub fn validity_parameter(dot: &DotSpec, field: f64) -> Result<f64> {
    let delta = charge_separation(dot, field)?;
    let de = confinement_lengths(dot).d_e.x;
    Ok(2.0 * delta / de)
}

/// Electron–hole Coulomb binding `M_eh(F)` in meV for a spherical dot.
///
/// `M_eh = e²/(2π^{3/2}ε0εr√s) · [1 − δ²/(3s)]`, `s = d_e² + d_h²`,
/// `δ = eF(1/c_e + 1/c_h)`. Fails with `FIELD_OUT_OF_VALIDITY` when
/// `α d_e` exceeds [`FIELD_VALIDITY_LIMIT`].
pub fn coulomb_eh(dot: &DotSpec, field: f64, eps_r: f64) -> Result<f64> {
    positive(eps_r, "eps_r")?;
    let delta = charge_separation(dot, field)?;
    let lengths = confinement_lengths(dot);
    let (de, dh) = (lengths.d_e.x, lengths.d_h.x);
    let alpha_de = 2.0 * delta / de;
    if alpha_de > FIELD_VALIDITY_LIMIT {
        return Err(Error::FieldOutOfValidity {
            field,
            alpha_de,
            limit: FIELD_VALIDITY_LIMIT,
        });
    }
    let s = de * de + dh * dh;
    let m0 = 2.0 * coulomb_constant(eps_r) / (PI.sqrt() * s.sqrt());
    Ok(m0 * (1.0 - delta * delta / (3.0 * s)) / MEV)
}

/// `M_eh(F)` in meV from the un-expanded radial integral
/// `(4k/(√π d_e³)) ∫₀^∞ r e^{-(r²+δ²)/d_e²} sinhc(2δr/d_e²) erf(r/d_h) dr`,
/// cut off at `r = δ + 8·max(d_e, d_h)`.
pub fn coulomb_eh_oracle(dot: &DotSpec, field: f64, eps_r: f64) -> Result<f64> {
    positive(eps_r, "eps_r")?;
    let delta = charge_separation(dot, field)?;
    let lengths = confinement_lengths(dot);
    let (de, dh) = (lengths.d_e.x, lengths.d_h.x);
    // dimensionless u = r/d_e
    let dd = delta / de;
    let ratio = de / dh;
    let integrand = |u: f64| {
        let x = 2.0 * dd * u;
        let g = if x < 1e-2 {
            let x2 = x * x;
            (-(u * u + dd * dd)).exp() * (1.0 + x2 / 6.0 + x2 * x2 / 120.0 + x2 * x2 * x2 / 5040.0)
        } else {
            ((-(u - dd) * (u - dd)).exp() - (-(u + dd) * (u + dd)).exp()) / (2.0 * x)
        };
        u * g * erf(u * ratio)
    };
    let upper = dd + 8.0 * (1.0f64).max(dh / de);
    let spec = QuadratureSpec::new(ORACLE_TOLERANCE, 1e-300, 2000)?;
    let q = integrate(integrand, 0.0, upper, &spec)?;
    Ok(4.0 * coulomb_constant(eps_r) / (PI.sqrt() * de) * q.value / MEV)
}

/// Exciton energy of one dot in eV:
/// `E_gap + (3ħ/2)(ω_e + ω_h) − (eF)²(1/(2c_e) + 1/(2c_h)) − M_eh(F)`.
pub fn exciton_energy(dot: &DotSpec, field: f64, eps_r: f64) -> Result<f64> {
    let ce = dot.isotropic_c(Particle::Electron)?;
    let ch = dot.isotropic_c(Particle::Hole)?;
    let confinement = ground_energy(dot, Particle::Electron) + ground_energy(dot, Particle::Hole);
    let ef = E_CHARGE * field;
    let stark = ef * ef * (0.5 / ce + 0.5 / ch) / EV;
    let m = coulomb_eh(dot, field, eps_r)? * 1e-3;
    Ok(dot.e_gap_ev() + confinement - stark - m)
}

#[cfg(test)]
mod tests {
    use super::*;

    const C_I: f64 = 0.00579;
    const C_II: f64 = 0.03414;

    fn dot(c: f64) -> DotSpec {
        DotSpec::isotropic(c, 0.04, 0.45, 1.1, 7.0, Vec3::Z).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn well_depth_examples() {
        assert!(rel(well_depth_to_c(162.5, 3.0).unwrap(), 0.00579) < 1e-3);
        assert!(rel(well_depth_to_c(515.7, 2.2).unwrap(), 0.03414) < 1e-3);
        let c = well_depth_to_c(80.0, 4.0).unwrap();
        let r = 4.0 * NM;
        assert!(rel(0.5 * c * r * r / MEV, 80.0) < 1e-14);
        assert_eq!(
            well_depth_to_c(0.0, 1.0).unwrap_err().code(),
            "NONPOSITIVE_INPUT"
        );
        assert!(well_depth_to_c(1.0, -2.0).is_err());
    }

    #[test]
    fn dot_spec_validation() {
        assert!(DotSpec::isotropic(-1.0, 0.04, 0.45, 1.1, 7.0, Vec3::Z).is_err());
        assert!(DotSpec::isotropic(C_I, 0.0, 0.45, 1.1, 7.0, Vec3::Z).is_err());
        assert!(DotSpec::isotropic(C_I, 0.04, 0.45, 0.0, 7.0, Vec3::Z).is_err());
        assert!(DotSpec::isotropic(C_I, 0.04, 0.45, 1.1, 7.0, Vec3::new(1.0, 1.0, 0.0)).is_err());
        let d = dot(C_I);
        assert!(rel(d.d_cv_ea(), 7.0) < 1e-15);
        assert!(rel(d.e_gap_ev(), 1.1) < 1e-15);
    }

    #[test]
    fn confinement_length_examples() {
        let l = confinement_lengths(&dot(C_I));
        assert!((l.d_e.x / NM - 2.695).abs() < 5e-4);
        assert!((l.d_h.x / NM - 1.471).abs() < 5e-4);
        let l4 = confinement_lengths(&dot(4.0 * C_I));
        assert!(rel(l4.d_e.x, l.d_e.x / 2f64.sqrt()) < 1e-14);
        let l16 = confinement_lengths(&dot(16.0 * C_I));
        assert!(rel(l16.d_h.x, 0.5 * l.d_h.x) < 1e-14);
    }

    #[test]
    fn envelope_peak_and_limits() {
        let d = 2.0 * NM;
        assert!(rel(envelope_1d(0, 0.0, d).unwrap(), (PI * d * d).powf(-0.25)) < 1e-14);
        assert_eq!(envelope_1d(13, 0.0, d).unwrap_err().code(), "N_TOO_LARGE");
        assert!(envelope_1d(12, 0.3 * d, d).is_ok());
        assert!(envelope_1d(0, 0.0, 0.0).is_err());
    }

    #[test]
    fn envelope_normalisation_and_orthogonality() {
        let d = 1.7;
        let spec = QuadratureSpec::new(1e-12, 1e-14, 500).unwrap();
        for n in 0..=2 {
            let q = integrate(
                |x| envelope_1d(n, x, d).unwrap().powi(2),
                f64::NEG_INFINITY,
                f64::INFINITY,
                &spec,
            )
            .unwrap();
            assert!((q.value - 1.0).abs() < 1e-10, "n={n}: {}", q.value);
        }
        let q = integrate(
            |x| envelope_1d(0, x, d).unwrap() * envelope_1d(1, x, d).unwrap(),
            -20.0,
            20.0,
            &spec,
        )
        .unwrap();
        assert!(q.value.abs() < 1e-12);
        let q = integrate(
            |x| envelope_1d(12, x, d).unwrap().powi(2),
            -15.0 * d,
            15.0 * d,
            &spec,
        )
        .unwrap();
        assert!((q.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn ground_envelope_peak_and_norm() {
        let lengths = Axes::new(1.0, 1.5, 0.7);
        let shift = Vec3::new(0.2, -0.4, 0.1);
        let peak = ground_envelope(shift, lengths, shift);
        assert!(rel(peak, (PI.powf(1.5) * 1.0 * 1.5 * 0.7).powf(-0.5)) < 1e-14);
        let spec = QuadratureSpec::new(1e-9, 1e-12, 200).unwrap();
        let q = integrate(
            |x| {
                integrate(
                    |y| {
                        integrate(
                            |z| ground_envelope(Vec3::new(x, y, z), lengths, shift).powi(2),
                            -8.0,
                            8.0,
                            &spec,
                        )
                        .unwrap()
                        .value
                    },
                    -10.0,
                    10.0,
                    &spec,
                )
                .unwrap()
                .value
            },
            -8.0,
            8.0,
            &spec,
        )
        .unwrap();
        assert!((q.value - 1.0).abs() < 1e-8, "{}", q.value);
    }

    #[test]
    fn ground_energy_examples() {
        let d = dot(C_I);
        assert!((ground_energy(&d, Particle::Electron) - 0.394).abs() < 5e-4);
        let aniso = DotSpec::new(
            Axes::new(C_I, 2.0 * C_I, 3.0 * C_I),
            Axes::isotropic(C_I),
            0.04,
            0.45,
            1.1,
            7.0,
            Vec3::Z,
        )
        .unwrap();
        let doubled = DotSpec::new(
            Axes::new(2.0 * C_I, 4.0 * C_I, 6.0 * C_I),
            Axes::isotropic(C_I),
            0.04,
            0.45,
            1.1,
            7.0,
            Vec3::Z,
        )
        .unwrap();
        let ratio =
            ground_energy(&doubled, Particle::Electron) / ground_energy(&aniso, Particle::Electron);
        assert!((ratio - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn stark_examples() {
        let d = dot(C_I);
        let zero = stark_terms(&d, &FieldConfig::zero(), Particle::Electron);
        assert_eq!(zero.displacement, Vec3::ZERO);
        assert_eq!(zero.energy_shift, 0.0);
        let f = FieldConfig::along_x(7.5e6).unwrap();
        let e = stark_terms(&d, &f, Particle::Electron);
        let h = stark_terms(&d, &f, Particle::Hole);
        assert!(e.displacement.0[0] > 0.0 && h.displacement.0[0] < 0.0);
        let combined_mev = (e.energy_shift + h.energy_shift) * 1e3;
        let expected = -(E_CHARGE * 7.5e6).powi(2) / C_I / MEV;
        assert!(rel(combined_mev, expected) < 1e-14);
        assert!((combined_mev + 1.5565).abs() < 1e-3);
        let minus = stark_terms(
            &d,
            &FieldConfig::along_x(-7.5e6).unwrap(),
            Particle::Electron,
        );
        assert_eq!(minus.energy_shift, e.energy_shift);
        assert_eq!(minus.displacement, -e.displacement);
    }

    #[test]
    fn coulomb_examples() {
        assert!((coulomb_eh(&dot(C_I), 0.0, 12.0).unwrap() - 44.1).abs() < 0.05);
        assert!((coulomb_eh(&dot(C_II), 0.0, 12.0).unwrap() - 68.7).abs() < 0.05);
        let m0 = coulomb_eh(&dot(C_I), 0.0, 12.0).unwrap();
        let m5 = coulomb_eh(&dot(C_I), 5e6, 12.0).unwrap();
        assert!((m5 - 43.98).abs() < 0.01);
        assert!(rel(m5 / m0, 1.0 - 0.00271) < 1e-4);
        let oracle = coulomb_eh_oracle(&dot(C_I), 5e6, 12.0).unwrap();
        assert!(rel(m5, oracle) < 0.01);
    }

    #[test]
    fn oracle_matches_closed_forms() {
        for &c in &[C_I, C_II] {
            let d = dot(c);
            let closed = coulomb_eh(&d, 0.0, 12.0).unwrap();
            let oracle = coulomb_eh_oracle(&d, 0.0, 12.0).unwrap();
            assert!(rel(oracle, closed) < 1e-9);
        }
        // d_e = d_h when c/m is the same for both particles
        let sym = DotSpec::new(
            Axes::isotropic(0.01),
            Axes::isotropic(0.01),
            0.1,
            0.1,
            1.0,
            1.0,
            Vec3::Z,
        )
        .unwrap();
        let d = confinement_lengths(&sym).d_e.x;
        let expected = E_CHARGE * E_CHARGE
            / (2.0 * PI.powf(1.5) * crate::constants::EPS0 * 12.0 * 2f64.sqrt() * d)
            / MEV;
        assert!(rel(coulomb_eh_oracle(&sym, 0.0, 12.0).unwrap(), expected) < 1e-9);
        // with field the un-expanded integral equals k·erf(δ/√s)/δ
        let d = dot(C_I);
        let l = confinement_lengths(&d);
        let s = l.d_e.x.powi(2) + l.d_h.x.powi(2);
        for &f in &[1e6, 5e6, 1.2e7] {
            let delta = charge_separation(&d, f).unwrap();
            let exact = coulomb_constant(12.0) * erf(delta / s.sqrt()) / delta / MEV;
            assert!(rel(coulomb_eh_oracle(&d, f, 12.0).unwrap(), exact) < 1e-9);
        }
    }

    #[test]
    fn coulomb_guards() {
        let d = dot(C_I);
        let limit_field = FIELD_VALIDITY_LIMIT / validity_parameter(&d, 1.0).unwrap();
        assert!(coulomb_eh(&d, 0.99 * limit_field, 12.0).is_ok());
        let err = coulomb_eh(&d, 1.01 * limit_field, 12.0).unwrap_err();
        assert_eq!(err.code(), "FIELD_OUT_OF_VALIDITY");
        let aniso = DotSpec::new(
            Axes::new(C_I, C_I, 2.0 * C_I),
            Axes::isotropic(C_I),
            0.04,
            0.45,
            1.1,
            7.0,
            Vec3::Z,
        )
        .unwrap();
        assert_eq!(
            coulomb_eh(&aniso, 0.0, 12.0).unwrap_err().code(),
            "ANISOTROPIC_DOT"
        );
        assert_eq!(
            exciton_energy(&aniso, 0.0, 12.0).unwrap_err().code(),
            "ANISOTROPIC_DOT"
        );
    }

    #[test]
    fn coulomb_scales_inversely_with_length() {
        // quartering c and the masses doubles every d
        let a = DotSpec::isotropic(0.02, 0.05, 0.3, 1.0, 5.0, Vec3::Z).unwrap();
        let b = DotSpec::isotropic(0.005, 0.0125, 0.075, 1.0, 5.0, Vec3::Z).unwrap();
        let la = confinement_lengths(&a);
        let lb = confinement_lengths(&b);
        assert!(rel(lb.d_e.x, 2.0 * la.d_e.x) < 1e-14);
        let ratio = coulomb_eh(&b, 0.0, 12.0).unwrap() / coulomb_eh(&a, 0.0, 12.0).unwrap();
        assert!((ratio - 0.5).abs() < 1e-12);
    }

    #[test]
    fn exciton_energy_examples() {
        let e1 = exciton_energy(&dot(C_I), 0.0, 12.0).unwrap();
        let d2 = DotSpec::isotropic(C_II, 0.04, 0.45, 0.394, 7.0, Vec3::Z).unwrap();
        let e2 = exciton_energy(&d2, 0.0, 12.0).unwrap();
        assert!((e1 - 1.567).abs() < 5e-4);
        assert!((e2 - 1.566).abs() < 5e-4);
        let d = dot(C_I);
        for &f in &[1e6, 4e6, 9e6] {
            let plus = exciton_energy(&d, f, 12.0).unwrap();
            let minus = exciton_energy(&d, -f, 12.0).unwrap();
            assert!((plus - minus).abs() <= 1e-15 * plus);
        }
    }
}
