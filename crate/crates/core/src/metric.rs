//! Metric catalog.
//!
//! A provider evaluates the covariant metric on four seeded jets, so g, ∂g
//! and ∂²g come out of one call. The built-ins cover the three regimes the
//! verification suite needs: static (Schwarzschild), stationary but not
//! static (the rotating Langevin frame, which is also Riemann-flat), and
//! synchronized (spatially flat FLRW with a(t) = t), plus Minkowski as the
//! everything-vanishes baseline.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::GeometryError;
use crate::jet::{Jet2, DIM};

pub trait MetricProvider {
    fn name(&self) -> &str;
    /// Covariant metric at a point given as seeded jets. Must be symmetric.
    fn eval(&self, x: &[Jet2; DIM]) -> [[Jet2; DIM]; DIM];
    /// Whether the components are independent of the time coordinate x⁰.
    fn is_stationary(&self) -> bool;
}

/// The built-in catalog, selectable by name and parameter map.
#[derive(Clone, Debug, PartialEq)]
pub enum BuiltinMetric {
    Minkowski,
    /// ds² = (1−2m/r)dt² − (1−2m/r)⁻¹dr² − r²dθ² − r²sin²θ dφ², coords (t,r,θ,φ).
    Schwarzschild { m: f64 },
    /// ds² = (1−ω²ρ²)dt² − 2ωρ²dφdt − dρ² − ρ²dφ² − dz², coords (t,ρ,φ,z).
    Langevin { omega: f64 },
    /// ds² = dt² − t²(dx²+dy²+dz²), coords (t,x,y,z).
    Flrw,
}

impl BuiltinMetric {
    pub fn from_name(name: &str, params: &BTreeMap<String, f64>) -> Result<Self, GeometryError> {
        let get = |key: &str, default: f64| params.get(key).copied().unwrap_or(default);
        match name {
            "minkowski" => Ok(BuiltinMetric::Minkowski),
            "schwarzschild" => {
                let m = get("m", 1.0);
                if m <= 0.0 {
                    return Err(GeometryError::BadParameter(format!(
                        "schwarzschild mass must be positive, got {m}"
                    )));
                }
                Ok(BuiltinMetric::Schwarzschild { m })
            }
            "langevin" => {
                let omega = get("omega", 0.1);
                Ok(BuiltinMetric::Langevin { omega })
            }
            "flrw" => Ok(BuiltinMetric::Flrw),
            other => Err(GeometryError::UnknownMetric(other.to_string())),
        }
    }

    pub fn all_names() -> &'static [&'static str] {
        &["minkowski", "schwarzschild", "langevin", "flrw"]
    }

    /// A default evaluation point away from coordinate degeneracies.
    pub fn default_point(&self) -> [f64; DIM] {
        match self {
            BuiltinMetric::Minkowski => [0.0, 1.0, 1.0, 1.0],
            BuiltinMetric::Schwarzschild { .. } => [0.0, 6.0, 1.0, 0.5],
            BuiltinMetric::Langevin { .. } => [0.0, 2.0, 0.3, 0.1],
            BuiltinMetric::Flrw => [2.0, 0.3, 0.4, 0.5],
        }
    }
}

impl fmt::Display for BuiltinMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuiltinMetric::Minkowski => write!(f, "minkowski"),
            BuiltinMetric::Schwarzschild { m } => write!(f, "schwarzschild(m={m})"),
            BuiltinMetric::Langevin { omega } => write!(f, "langevin(omega={omega})"),
            BuiltinMetric::Flrw => write!(f, "flrw"),
        }
    }
}

fn diag(tt: Jet2, xx: Jet2, yy: Jet2, zz: Jet2) -> [[Jet2; DIM]; DIM] {
    let mut g = [[Jet2::ZERO; DIM]; DIM];
    g[0][0] = tt;
    g[1][1] = xx;
    g[2][2] = yy;
    g[3][3] = zz;
    g
}

impl MetricProvider for BuiltinMetric {
    fn name(&self) -> &str {
        match self {
            BuiltinMetric::Minkowski => "minkowski",
            BuiltinMetric::Schwarzschild { .. } => "schwarzschild",
            BuiltinMetric::Langevin { .. } => "langevin",
            BuiltinMetric::Flrw => "flrw",
        }
    }

    fn eval(&self, x: &[Jet2; DIM]) -> [[Jet2; DIM]; DIM] {
        let one = Jet2::constant(1.0);
        match self {
            BuiltinMetric::Minkowski => diag(one, -one, -one, -one),
            BuiltinMetric::Schwarzschild { m } => {
                let r = x[1];
                let theta = x[2];
                let f = one - Jet2::constant(2.0 * m) / r;
                let r2 = r * r;
                let sin2 = theta.sin() * theta.sin();
                diag(f, -f.recip(), -r2, -(r2 * sin2))
            }
            BuiltinMetric::Langevin { omega } => {
                let rho = x[1];
                let rho2 = rho * rho;
                let w = *omega;
                let mut g = diag(
                    one - Jet2::constant(w * w) * rho2,
                    -one,
                    -rho2,
                    -one,
                );
                let g_tphi = -(Jet2::constant(w) * rho2);
                g[0][2] = g_tphi;
                g[2][0] = g_tphi;
                g
            }
            BuiltinMetric::Flrw => {
                let t = x[0];
                let a2 = t * t;
                diag(one, -a2, -a2, -a2)
            }
        }
    }

    fn is_stationary(&self) -> bool {
        !matches!(self, BuiltinMetric::Flrw)
    }
}
