//! Flat JSON configuration; command-line flags override file values.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

use su11::haar::{QuadratureSpec, Rule};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub order_theta: usize,
    pub order_t: usize,
    pub order_xi: usize,
    pub t_max: f64,
    pub xi_max: f64,
    /// Constructor tolerance for the group constraint.
    pub group_tolerance: f64,
    /// Threshold for the left-invariance audits.
    pub audit_threshold: f64,
    /// Fourier truncation order for the boundary representation.
    pub p_trunc: i64,
    pub hbar: f64,
    /// Scale prefactor carried by decompositions (kept opaque).
    pub zh: f64,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            order_theta: 64,
            order_t: 64,
            order_xi: 64,
            t_max: 8.0,
            xi_max: 40.0,
            group_tolerance: 1e-12,
            audit_threshold: 1e-4,
            p_trunc: 64,
            hbar: 1.0,
            zh: 1.0,
            seed: 42,
        }
    }
}

impl Config {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let config: Self = match path {
            None => Self::default(),
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .with_context(|| format!("cannot read config {}", p.display()))?;
                serde_json::from_str(&text)
                    .with_context(|| format!("invalid config {}", p.display()))?
            }
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.group_tolerance <= 0.0 || self.audit_threshold <= 0.0 {
            bail!("tolerances must be positive");
        }
        if self.hbar <= 0.0 || self.zh <= 0.0 {
            bail!("hbar and zh must be positive");
        }
        if self.p_trunc < 1 {
            bail!("p_trunc must be at least 1");
        }
        self.quadrature().validate().map_err(anyhow::Error::from)
    }

    pub fn quadrature(&self) -> QuadratureSpec {
        QuadratureSpec {
            order_theta: self.order_theta,
            order_t: self.order_t,
            order_xi: self.order_xi,
            t_max: self.t_max,
            xi_max: self.xi_max,
            rule: Rule::GaussLegendre,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        Config::default().validate().unwrap();
    }

    #[test]
    fn unknown_fields_rejected() {
        let bad: Result<Config, _> = serde_json::from_str(r#"{"order_theta": 8, "bogus": 1}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn nonpositive_tolerance_rejected() {
        let cfg: Config = serde_json::from_str(r#"{"audit_threshold": -1.0}"#).unwrap();
        assert!(cfg.validate().is_err());
    }
}
