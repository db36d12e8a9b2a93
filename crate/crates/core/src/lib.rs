//! Two Förster-coupled parabolic quantum dots under a static electric field.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`] – quadrature, `erf`, root finding and small Hermitian eigensolvers.
//! * [`singledot`] – confinement lengths, envelopes, Stark terms and the
//!   electron–hole Coulomb binding of one dot.
//! * [`coupling`] – envelope overlaps and the dipole–dipole (Förster) element.
//! * [`spectrum`] – the four-level Hamiltonian, its eigensystem, field sweeps
//!   and the resonance field.
//! * [`optics`] – transition dipoles, spontaneous emission and absorption lines.
//! * [`tunneling`] – the single-particle double-dot model and its effective
//!   two-level reduction.
//! * [`gates`] – XY-interaction dynamics, iSWAP and the CNOT sequence.
//!
//! Everything is computed in SI internally; public functions take and return
//! the unit named in their signature (eV, meV, nm, e·Å, V/m).

pub mod constants;
pub mod coupling;
pub mod error;
pub mod field;
pub mod gates;
pub mod numerics;
pub mod optics;
pub mod singledot;
pub mod spectrum;
pub mod tunneling;
pub mod vector;

pub use error::{Error, Result};
pub use field::FieldConfig;
pub use vector::{Axes, Vec3};
