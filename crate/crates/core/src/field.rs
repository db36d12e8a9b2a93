use crate::{Error, Result, Vec3};

/// A static, uniform electric field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldConfig {
    magnitude: f64,
    direction: Vec3,
}

impl FieldConfig {
    /// `magnitude` in V/m (sign allowed, it flips the field); `direction`
    /// must be a unit vector to within 1e-12.
    pub fn new(magnitude: f64, direction: Vec3) -> Result<Self> {
        if !magnitude.is_finite() {
            return Err(Error::InvalidInput(format!(
                "field magnitude {magnitude} is not finite"
            )));
        }
        if !direction.is_unit() {
            return Err(Error::InvalidInput(format!(
                "field direction {:?} is not a unit vector",
                direction.0
            )));
        }
        Ok(FieldConfig {
            magnitude,
            direction,
        })
    }

    pub fn zero() -> Self {
        FieldConfig {
            magnitude: 0.0,
            direction: Vec3::X,
        }
    }

    pub fn along_x(magnitude: f64) -> Result<Self> {
        Self::new(magnitude, Vec3::X)
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn direction(&self) -> Vec3 {
        self.direction
    }

    pub fn with_magnitude(&self, magnitude: f64) -> Result<Self> {
        Self::new(magnitude, self.direction)
    }

    /// Field vector in V/m.
    pub fn vector(&self) -> Vec3 {
        self.direction * self.magnitude
    }
}
