use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("quadrature did not converge: estimate {estimate:e} with error {error:e} after {intervals} subintervals")]
    ToleranceNotMet {
        estimate: f64,
        error: f64,
        intervals: usize,
    },
    #[error("matrix is not Hermitian (largest asymmetry {0:e})")]
    NotHermitian(f64),
    #[error("unsupported matrix dimension {0} (expected 2 or 4)")]
    BadDimension(usize),
    #[error("no sign change on [{lo:e}, {hi:e}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("{0} must be positive and finite")]
    NonpositiveInput(&'static str),
    #[error("Hermite index {0} exceeds the supported maximum of 12")]
    NTooLarge(u32),
    #[error("operation requires an isotropic dot (c_x = c_y = c_z for each particle)")]
    AnisotropicDot,
    #[error("field {field:e} V/m is outside the expansion validity window (alpha*d_e = {alpha_de:.4} > {limit})")]
    FieldOutOfValidity {
        field: f64,
        alpha_de: f64,
        limit: f64,
    },
    #[error("separation {separation_nm:.3} nm is below the dipole-approximation minimum {required_nm:.3} nm")]
    DipoleApproxInvalid {
        separation_nm: f64,
        required_nm: f64,
    },
    #[error("no resonance: {0}")]
    NoResonance(String),
    #[error("dots are identical, the detuning vanishes at every field")]
    DegenerateDots,
    #[error("frequency grid is empty")]
    EmptyGrid,
    #[error("perturbative condition violated: max|t|/|M_eh - M'_eh| = {ratio:.4} > {limit}")]
    ConditionViolated { ratio: f64, limit: f64 },
    #[error("effective subspace requires identical dots")]
    NotIdenticalDots,
    #[error("leakage denominator vanishes")]
    DegenerateDenominator,
    #[error("state norm {0} differs from 1")]
    Unnormalized(f64),
    #[error("no documented sign convention reproduces CNOT")]
    ConventionMismatch,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable upper-case identifier, printed by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ToleranceNotMet { .. } => "TOLERANCE_NOT_MET",
            Error::NotHermitian(_) => "NOT_HERMITIAN",
            Error::BadDimension(_) => "BAD_DIMENSION",
            Error::NoSignChange { .. } => "NO_SIGN_CHANGE",
            Error::NonpositiveInput(_) => "NONPOSITIVE_INPUT",
            Error::NTooLarge(_) => "N_TOO_LARGE",
            Error::AnisotropicDot => "ANISOTROPIC_DOT",
            Error::FieldOutOfValidity { .. } => "FIELD_OUT_OF_VALIDITY",
            Error::DipoleApproxInvalid { .. } => "DIPOLE_APPROX_INVALID",
            Error::NoResonance(_) => "NO_RESONANCE",
            Error::DegenerateDots => "DEGENERATE_DOTS",
            Error::EmptyGrid => "EMPTY_GRID",
            Error::ConditionViolated { .. } => "CONDITION_VIOLATED",
            Error::NotIdenticalDots => "NOT_IDENTICAL_DOTS",
            Error::DegenerateDenominator => "DEGENERATE_DENOMINATOR",
            Error::Unnormalized(_) => "UNNORMALIZED",
            Error::ConventionMismatch => "CONVENTION_MISMATCH",
            Error::InvalidInput(_) => "INVALID_INPUT",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
