//! CODATA-2018 constants and the unit conversions used at the public boundary.

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// Elementary charge, C.
pub const E_CHARGE: f64 = 1.602_176_634e-19;
/// Vacuum permittivity, F/m.
pub const EPS0: f64 = 8.854_187_812_8e-12;
/// Electron rest mass, kg.
pub const M0: f64 = 9.109_383_701_5e-31;
/// Speed of light, m/s.
pub const C_LIGHT: f64 = 2.997_924_58e8;

/// Joules per electronvolt.
pub const EV: f64 = E_CHARGE;
/// Joules per millielectronvolt.
pub const MEV: f64 = 1e-3 * E_CHARGE;
/// Metres per nanometre.
pub const NM: f64 = 1e-9;
/// Coulomb-metres per e·Å.
pub const E_ANGSTROM: f64 = E_CHARGE * 1e-10;
/// V/m per MV/m.
pub const MV_PER_M: f64 = 1e6;

/// Coulomb prefactor e²/(4π ε0 εr) in J·m.
pub fn coulomb_constant(eps_r: f64) -> f64 {
    E_CHARGE * E_CHARGE / (4.0 * std::f64::consts::PI * EPS0 * eps_r)
}
