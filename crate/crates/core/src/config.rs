//! Run configuration, read from TOML.
//!
//! ```toml
//! q0 = "1/2"
//! unit-policy = "rational-unit"   # or "fixed"
//! u0 = "1/2"                      # rational-unit: t0 is derived from u0
//! t0 = "1/4"                      # fixed: used as given
//! precision = 128
//! mode = "exact"
//! homology-model = "model.json"
//! seed = 20240611
//! samples = 200
//! max-length = 20
//!
//! [residues]                      # optional override of the computed table
//! centre = 0
//! ```

use std::path::{Path, PathBuf};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::{parse_rational, rational_pow};
use crate::error::{Error, Result};
use crate::model::ResidueTable;
use crate::rep::Mode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnitPolicy {
    /// Pick `t0 = u0^(g(g-1)/2) / q0^g` so the rescale unit is `u0` exactly.
    #[default]
    RationalUnit,
    /// Use `(q0, t0)` as given; the unit may be irrational.
    Fixed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields, rename_all = "kebab-case")]
pub struct RepConfig {
    pub q0: String,
    pub unit_policy: UnitPolicy,
    pub u0: String,
    pub t0: Option<String>,
    pub precision: u32,
    pub mode: Mode,
    pub homology_model: Option<PathBuf>,
    pub residues: Option<ResidueTable>,
    pub seed: u64,
    pub samples: usize,
    pub max_length: usize,
}

impl Default for RepConfig {
    fn default() -> Self {
        RepConfig {
            q0: "1/2".into(),
            unit_policy: UnitPolicy::RationalUnit,
            u0: "1/2".into(),
            t0: None,
            precision: 128,
            mode: Mode::Exact,
            homology_model: None,
            residues: None,
            seed: 20240611,
            samples: 200,
            max_length: 20,
        }
    }
}

impl RepConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Loads a config file. A relative `homology-model` path is resolved
    /// against the file's directory.
    pub fn load(path: &Path) -> Result<Self> {
        let mut cfg = Self::from_toml_str(&std::fs::read_to_string(path)?)?;
        if let (Some(model), Some(dir)) = (&cfg.homology_model, path.parent()) {
            if model.is_relative() {
                cfg.homology_model = Some(dir.join(model));
            }
        }
        Ok(cfg)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("config serialises")
    }

    /// The specialisation point `(q0, t0)` for genus `g`.
    pub fn point_for(&self, g: u32) -> Result<(BigRational, BigRational)> {
        let q0 = parse_rational(&self.q0)?;
        let t0 = match self.unit_policy {
            UnitPolicy::RationalUnit => {
                let u0 = parse_rational(&self.u0)?;
                let half_degree = (g as i64) * (g as i64 - 1) / 2;
                rational_pow(&u0, half_degree) / rational_pow(&q0, g as i64)
            }
            UnitPolicy::Fixed => {
                let t0 = self.t0.as_deref().ok_or_else(|| {
                    Error::Config("unit-policy \"fixed\" needs t0".into())
                })?;
                parse_rational(t0)?
            }
        };
        Ok((q0, t0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn default_point() {
        let cfg = RepConfig::default();
        assert_eq!(cfg.point_for(4).unwrap(), (r("1/2"), r("1/4")));
        // u0^10 / q0^5 = 2^5 / 2^10
        assert_eq!(cfg.point_for(5).unwrap(), (r("1/2"), r("1/32")));
    }

    #[test]
    fn parse_fixed() {
        let cfg = RepConfig::from_toml_str(
            "q0 = \"2/3\"\nunit-policy = \"fixed\"\nt0 = \"5/7\"\nmode = \"interval\"\n",
        )
        .unwrap();
        assert_eq!(cfg.mode, Mode::Interval);
        assert_eq!(cfg.point_for(6).unwrap(), (r("2/3"), r("5/7")));
        let missing = RepConfig {
            unit_policy: UnitPolicy::Fixed,
            ..RepConfig::default()
        };
        assert!(matches!(missing.point_for(4), Err(Error::Config(_))));
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(matches!(
            RepConfig::from_toml_str("q = 1"),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn round_trip() {
        let mut cfg = RepConfig::default();
        cfg.residues = Some([("centre".to_string(), 1u8)].into_iter().collect());
        let back = RepConfig::from_toml_str(&cfg.to_toml_string()).unwrap();
        assert_eq!(back, cfg);
    }
}
