//! Run configuration: master seed and tolerance table, merged from defaults,
//! the `TENSYM_SEED` environment variable, an optional JSON config file, and
//! explicit flags — in that order of increasing precedence.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::CliError;

pub const DEFAULT_SEED: u64 = 42;
pub const SEED_ENV_VAR: &str = "TENSYM_SEED";

/// Every threshold the verdict checks against, in one place.
#[derive(Clone, Debug, Serialize)]
pub struct Tolerances {
    /// relative residual for the curvature formula identities
    pub formula_rel: f64,
    /// max |τ_{[λ}τ_{μ;ν]}| below which a space-time counts as static
    pub staticity: f64,
    /// residual bound for fields that must vanish (Killing, D, F, A)
    pub field_zero: f64,
    /// relative residual of the ξ/τ alternation proportionality
    pub ratio: f64,
    /// θ symmetry identities
    pub theta_identity: f64,
    /// ζ₋₁ class membership of θ
    pub theta_class: f64,
    /// the F·θ wing against ½·y_t*(θ⊗F)
    pub theta_wing: f64,
    /// every residual on the flat baseline
    pub minkowski: f64,
    /// the synchronized-coordinates reduced identity
    pub sync_reduced: f64,
    /// the non-staticity witness must exceed this
    pub langevin_alternation_floor: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            formula_rel: 1e-7,
            staticity: 1e-10,
            field_zero: 1e-10,
            ratio: 1e-10,
            theta_identity: 1e-12,
            theta_class: 1e-10,
            theta_wing: 1e-9,
            minkowski: 1e-14,
            sync_reduced: 1e-7,
            langevin_alternation_floor: 1e-3,
        }
    }
}

impl Tolerances {
    pub fn set(&mut self, name: &str, value: f64) -> Result<(), CliError> {
        if !value.is_finite() || value <= 0.0 {
            return Err(CliError::Usage(format!(
                "tolerance {name} must be positive, got {value}"
            )));
        }
        match name {
            "formula_rel" => self.formula_rel = value,
            "staticity" => self.staticity = value,
            "field_zero" => self.field_zero = value,
            "ratio" => self.ratio = value,
            "theta_identity" => self.theta_identity = value,
            "theta_class" => self.theta_class = value,
            "theta_wing" => self.theta_wing = value,
            "minkowski" => self.minkowski = value,
            "sync_reduced" => self.sync_reduced = value,
            "langevin_alternation_floor" => self.langevin_alternation_floor = value,
            other => {
                return Err(CliError::Usage(format!("unknown tolerance '{other}'")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub tolerances: Tolerances,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: DEFAULT_SEED,
            tolerances: Tolerances::default(),
        }
    }
}

/// On-disk config shape; all fields optional.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub seed: Option<u64>,
    #[serde(default)]
    pub tolerances: BTreeMap<String, f64>,
    pub metric: Option<String>,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
    pub point: Option<[f64; 4]>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<ConfigFile, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))
    }
}

/// Builds the effective run configuration.
pub fn resolve_config(
    flag_seed: Option<u64>,
    file: &ConfigFile,
    tol_flags: &[(String, f64)],
) -> Result<RunConfig, CliError> {
    let env_seed = std::env::var(SEED_ENV_VAR)
        .ok()
        .and_then(|v| v.parse::<u64>().ok());
    let seed = flag_seed
        .or(file.seed)
        .or(env_seed)
        .unwrap_or(DEFAULT_SEED);
    let mut tolerances = Tolerances::default();
    for (name, value) in &file.tolerances {
        tolerances.set(name, *value)?;
    }
    for (name, value) in tol_flags {
        tolerances.set(name, *value)?;
    }
    Ok(RunConfig { seed, tolerances })
}
