//! Run configuration shared by the command-line frontend and the
//! verification driver.

use crate::explore::ReportFormat;
use crate::module::DEFAULT_SEED;
use crate::scalar::{Field, Scalar};

/// Knobs for a verification or exploration run. The two horizons are
/// depths, not indices, and must be at least 1.
#[derive(Clone, Debug)]
pub struct Config {
    /// Depth for Ext profiles and semi-GP checks.
    pub horizon: usize,
    /// Step budget per direction when walking a cosyzygy component.
    pub walk_horizon: usize,
    /// Seed for the randomized isomorphism and splitting tests.
    pub seed: u64,
    pub field: Field,
    pub format: ReportFormat,
    /// Parameter bindings applied to builtin specs that omit them,
    /// e.g. ("q", "2").
    pub bindings: Vec<(String, String)>,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            horizon: 20,
            walk_horizon: 12,
            seed: DEFAULT_SEED,
            field: Field::Rational,
            format: ReportFormat::Text,
            bindings: Vec::new(),
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), String> {
        if self.horizon == 0 {
            return Err("horizon must be at least 1".into());
        }
        if self.walk_horizon == 0 {
            return Err("walk horizon must be at least 1".into());
        }
        Ok(())
    }

    /// The bound value for a parameter, if any.
    pub fn binding(&self, key: &str) -> Option<&str> {
        self.bindings.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Parses a scalar in the configured field.
    pub fn scalar(&self, s: &str) -> Result<Scalar, String> {
        Scalar::parse(self.field, s).ok_or_else(|| format!("cannot parse {s:?} in {}", self.field))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let c = Config::default();
        assert!(c.validate().is_ok());
        assert_eq!(c.horizon, 20);
        assert_eq!(c.walk_horizon, 12);
    }

    #[test]
    fn zero_horizon_rejected() {
        let c = Config { horizon: 0, ..Config::default() };
        assert!(c.validate().is_err());
    }
}
