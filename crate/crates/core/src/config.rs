use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard ceiling imposed by the 64-bit vertex masks.
pub const VERTEX_CEILING: usize = 64;

/// Resource caps shared by every module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest accepted graph.
    pub max_vertices: usize,
    /// Largest flag complex (simplex count, empty simplex included).
    pub max_simplices: usize,
    /// Largest weight for graded computations.
    pub max_weight: usize,
    /// Largest generator count for presentation-based (dense quotient) paths.
    pub max_generators: usize,
    /// Largest basis of a single graded piece any engine may materialize.
    pub max_basis: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 64,
            max_simplices: 2_000_000,
            max_weight: 8,
            max_generators: 8,
            max_basis: 2_000_000,
        }
    }
}

impl Limits {
    pub fn validate(&self) -> Result<()> {
        if self.max_vertices == 0 || self.max_vertices > VERTEX_CEILING {
            return Err(Error::Config(format!(
                "max_vertices must be in 1..={VERTEX_CEILING}, got {}",
                self.max_vertices
            )));
        }
        for (name, v) in [
            ("max_simplices", self.max_simplices),
            ("max_weight", self.max_weight),
            ("max_generators", self.max_generators),
            ("max_basis", self.max_basis),
        ] {
            if v == 0 {
                return Err(Error::Config(format!("{name} must be positive")));
            }
        }
        Ok(())
    }

    pub(crate) fn check_weight(&self, w: usize) -> Result<()> {
        if w > self.max_weight {
            return Err(Error::CapExceeded(format!(
                "weight {w} exceeds max_weight {}",
                self.max_weight
            )));
        }
        Ok(())
    }

    pub(crate) fn check_basis(&self, size: usize, what: &str) -> Result<()> {
        if size > self.max_basis {
            return Err(Error::CapExceeded(format!(
                "{what} has {size} basis elements, above max_basis {}",
                self.max_basis
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        Limits::default().validate().unwrap();
    }

    #[test]
    fn rejects_out_of_range() {
        let mut l = Limits::default();
        l.max_vertices = 65;
        assert!(l.validate().is_err());
        l.max_vertices = 0;
        assert!(l.validate().is_err());
        let l = Limits { max_weight: 0, ..Limits::default() };
        assert!(l.validate().is_err());
    }
}
