//! Per-point geometric frames.
//!
//! `PointFrame::build` evaluates a metric on seeded jets and derives every
//! field the verification formulas touch: the inverse metric, Christoffel
//! symbols and their derivatives, the Riemann tensor, the unit observer field
//! τ proportional to ∂_t, the spatial projector h, the acceleration/rotation/
//! deformation split of ∇τ, the spatial connection and its curvature P, the
//! three spatial projections Z, Y, X of the Riemann tensor, and the θ part of
//! τ_λτ_{[μ;ν]}.
//!
//! Index conventions, fixed once here: mixed h stores `h_mixed[m][n] = h^m_n`;
//! `gamma[l][m][n] = Γ^l_{mn}`; `dgamma[s][l][m][n] = ∂_s Γ^l_{mn}`;
//! `r_mixed[m][n][a][l] = R_{mna}{}^l`; lowering always contracts the last
//! index with g. `dtau[m][n] = ∂_n τ_m` and `tau_cov[m][n] = τ_{m;n}`.

use serde::Serialize;

use crate::error::GeometryError;
use crate::jet::{Jet1, Jet2, DIM};
use crate::metric::MetricProvider;
use crate::tensor::Tensor;

pub type Vec4 = [f64; DIM];
pub type Mat4 = [[f64; DIM]; DIM];
pub type Ten3 = [[[f64; DIM]; DIM]; DIM];
pub type Ten4 = [[[[f64; DIM]; DIM]; DIM]; DIM];

const ZERO3: Ten3 = [[[0.0; DIM]; DIM]; DIM];
const ZERO4: Ten4 = [[[[0.0; DIM]; DIM]; DIM]; DIM];

#[derive(Clone, Debug)]
pub struct PointFrame {
    pub metric_name: String,
    pub stationary: bool,
    pub coords: Vec4,

    pub g_dn: Mat4,
    pub g_up: Mat4,
    /// dg[l][m][n] = ∂_l g_{mn}
    pub dg: Ten3,
    /// ddg[k][l][m][n] = ∂_k ∂_l g_{mn}
    pub ddg: Ten4,

    pub gamma: Ten3,
    pub dgamma: Ten4,
    pub r_mixed: Ten4,
    pub r_dn: Ten4,

    pub xi_up: Vec4,
    pub xi_dn: Vec4,
    /// ξ_{m;n}
    pub xi_cov: Mat4,
    pub phi: f64,
    pub tau_up: Vec4,
    pub tau_dn: Vec4,
    /// ∂_n τ_m
    pub dtau: Mat4,
    /// ∂_n τ^m
    pub dtau_up: Mat4,
    /// τ_{m;n}
    pub tau_cov: Mat4,
    /// τ_{[m;n]}
    pub tau_br: Mat4,

    pub h_dn: Mat4,
    /// h_mixed[m][n] = h^m_n
    pub h_mixed: Mat4,
    pub h_up: Mat4,
    /// ∂_b h^m_a, indexed [m][a][b]
    pub dh_mixed: Ten3,

    /// F_α, the acceleration covector of the observer field
    pub accel: Vec4,
    /// A_{αβ}, the rotation 2-form
    pub rotation: Mat4,
    /// D_{αβ}, the deformation tensor
    pub deformation: Mat4,

    /// L^m_{ab}, the connection of the spatial metric h
    pub l_spatial: Ten3,
    /// L̃^e_{sn} = L^e_{sn} + ∂_n h^e_s
    pub l_tilde: Ten3,
    /// P_{abr}{}^l, the curvature assigned to h
    pub p_mixed: Ten4,
    pub p_dn: Ten4,

    /// Z_{mnk}{}^l, spatial projection of the Riemann tensor
    pub z_mixed: Ten4,
    pub z_dn: Ten4,
    /// Y_{mnk}
    pub y_proj: Ten3,
    /// X_{nk}
    pub x_proj: Mat4,

    /// θ_{lmn}: the part of τ_l τ_{[m;n]} with pure (2 1) symmetry
    pub theta: Ten3,
    /// τ_{[l}τ_{m;n]}, the totally antisymmetric part
    pub alt_part: Ten3,
}

/// Gauss-Jordan inversion in jet arithmetic; derivatives of the inverse come
/// out by the chain rule.
fn invert_jets(g: &[[Jet2; DIM]; DIM]) -> Result<[[Jet2; DIM]; DIM], GeometryError> {
    let mut a = *g;
    let mut inv = [[Jet2::ZERO; DIM]; DIM];
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = Jet2::constant(1.0);
    }
    for col in 0..DIM {
        let pivot_row = (col..DIM)
            .max_by(|&i, &j| {
                a[i][col]
                    .value
                    .abs()
                    .partial_cmp(&a[j][col].value.abs())
                    .expect("metric values are finite")
            })
            .expect("nonempty range");
        let pivot = a[pivot_row][col].value;
        if pivot.abs() < 1e-12 {
            return Err(GeometryError::SingularMetric { pivot });
        }
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let d = a[col][col];
        for c in 0..DIM {
            a[col][c] = a[col][c] / d;
            inv[col][c] = inv[col][c] / d;
        }
        for r in 0..DIM {
            if r == col {
                continue;
            }
            let f = a[r][col];
            for c in 0..DIM {
                a[r][c] = a[r][c] - f * a[col][c];
                inv[r][c] = inv[r][c] - f * inv[col][c];
            }
        }
    }
    Ok(inv)
}

impl PointFrame {
    pub fn build(provider: &dyn MetricProvider, x: &Vec4) -> Result<PointFrame, GeometryError> {
        let jets = Jet2::seed_point(x);
        let g_jet = provider.eval(&jets);

        if g_jet[0][0].value <= 0.0 {
            return Err(GeometryError::NonTimelike {
                g00: g_jet[0][0].value,
            });
        }
        let g_up_jet = invert_jets(&g_jet)?;

        let mut g_dn = [[0.0; DIM]; DIM];
        let mut g_up = [[0.0; DIM]; DIM];
        let mut dg = ZERO3;
        let mut ddg = ZERO4;
        for m in 0..DIM {
            for n in 0..DIM {
                g_dn[m][n] = g_jet[m][n].value;
                g_up[m][n] = g_up_jet[m][n].value;
                for l in 0..DIM {
                    dg[l][m][n] = g_jet[m][n].grad[l];
                    for k in 0..DIM {
                        ddg[k][l][m][n] = g_jet[m][n].hess[k][l];
                    }
                }
            }
        }

        // Christoffel symbols with their first derivatives, in first-order
        // jet arithmetic over (value, gradient) pairs of the metric jets.
        let mut gamma_j = [[[Jet1::ZERO; DIM]; DIM]; DIM];
        for l in 0..DIM {
            for m in 0..DIM {
                for n in m..DIM {
                    let mut acc = Jet1::ZERO;
                    for c in 0..DIM {
                        let sum = g_jet[n][c].d(m) + g_jet[m][c].d(n) - g_jet[m][n].d(c);
                        acc = acc + g_up_jet[l][c].lower() * sum;
                    }
                    let acc = acc * 0.5;
                    gamma_j[l][m][n] = acc;
                    gamma_j[l][n][m] = acc;
                }
            }
        }
        let mut gamma = ZERO3;
        let mut dgamma = ZERO4;
        for l in 0..DIM {
            for m in 0..DIM {
                for n in 0..DIM {
                    gamma[l][m][n] = gamma_j[l][m][n].value;
                    for s in 0..DIM {
                        dgamma[s][l][m][n] = gamma_j[l][m][n].grad[s];
                    }
                }
            }
        }

        // Riemann tensor, then lower the last index.
        let mut r_mixed = ZERO4;
        let mut r_dn = ZERO4;
        for mu in 0..DIM {
            for nu in 0..DIM {
                for al in 0..DIM {
                    for la in 0..DIM {
                        let mut v = dgamma[mu][la][nu][al] - dgamma[nu][la][mu][al];
                        for e in 0..DIM {
                            v += gamma[e][nu][al] * gamma[la][mu][e]
                                - gamma[e][mu][al] * gamma[la][nu][e];
                        }
                        r_mixed[mu][nu][al][la] = v;
                    }
                }
            }
        }
        for mu in 0..DIM {
            for nu in 0..DIM {
                for al in 0..DIM {
                    for la in 0..DIM {
                        let mut v = 0.0;
                        for d in 0..DIM {
                            v += g_dn[la][d] * r_mixed[mu][nu][al][d];
                        }
                        r_dn[mu][nu][al][la] = v;
                    }
                }
            }
        }

        // Observer field τ = ξ/φ with ξ = ∂_t.
        let phi_jet = g_jet[0][0].sqrt();
        let mut tau_dn_jet = [Jet2::ZERO; DIM];
        let mut tau_up_jet = [Jet2::ZERO; DIM];
        for m in 0..DIM {
            tau_dn_jet[m] = g_jet[m][0] / phi_jet;
        }
        tau_up_jet[0] = phi_jet.recip();

        let phi = phi_jet.value;
        let mut tau_dn = [0.0; DIM];
        let mut tau_up = [0.0; DIM];
        let mut dtau = [[0.0; DIM]; DIM];
        let mut dtau_up = [[0.0; DIM]; DIM];
        let mut xi_dn = [0.0; DIM];
        for m in 0..DIM {
            tau_dn[m] = tau_dn_jet[m].value;
            tau_up[m] = tau_up_jet[m].value;
            xi_dn[m] = g_dn[m][0];
            for n in 0..DIM {
                dtau[m][n] = tau_dn_jet[m].grad[n];
                dtau_up[m][n] = tau_up_jet[m].grad[n];
            }
        }
        let xi_up = [1.0, 0.0, 0.0, 0.0];

        let mut tau_cov = [[0.0; DIM]; DIM];
        let mut xi_cov = [[0.0; DIM]; DIM];
        for m in 0..DIM {
            for n in 0..DIM {
                let mut t = dtau[m][n];
                let mut xv = dg[n][m][0]; // ∂_n ξ_m with ξ_m = g_{m0}
                for l in 0..DIM {
                    t -= gamma[l][m][n] * tau_dn[l];
                    xv -= gamma[l][m][n] * xi_dn[l];
                }
                tau_cov[m][n] = t;
                xi_cov[m][n] = xv;
            }
        }
        let mut tau_br = [[0.0; DIM]; DIM];
        for m in 0..DIM {
            for n in 0..DIM {
                tau_br[m][n] = 0.5 * (dtau[m][n] - dtau[n][m]);
            }
        }

        // Spatial projector h and its jet relatives.
        let mut h_dn_jet = [[Jet2::ZERO; DIM]; DIM];
        for m in 0..DIM {
            for n in 0..DIM {
                h_dn_jet[m][n] = tau_dn_jet[m] * tau_dn_jet[n] - g_jet[m][n];
            }
        }
        let mut h_mixed_jet = [[Jet2::ZERO; DIM]; DIM];
        let mut h_up_jet = [[Jet2::ZERO; DIM]; DIM];
        for m in 0..DIM {
            for n in 0..DIM {
                let mut acc = Jet2::ZERO;
                for a in 0..DIM {
                    acc = acc + g_up_jet[m][a] * h_dn_jet[a][n];
                }
                h_mixed_jet[m][n] = acc;
            }
        }
        for m in 0..DIM {
            for n in 0..DIM {
                let mut acc = Jet2::ZERO;
                for b in 0..DIM {
                    acc = acc + g_up_jet[n][b] * h_mixed_jet[m][b];
                }
                h_up_jet[m][n] = acc;
            }
        }

        let mut h_dn = [[0.0; DIM]; DIM];
        let mut h_mixed = [[0.0; DIM]; DIM];
        let mut h_up = [[0.0; DIM]; DIM];
        let mut dh_mixed = ZERO3;
        for m in 0..DIM {
            for n in 0..DIM {
                h_dn[m][n] = h_dn_jet[m][n].value;
                h_mixed[m][n] = h_mixed_jet[m][n].value;
                h_up[m][n] = h_up_jet[m][n].value;
                for b in 0..DIM {
                    dh_mixed[m][n][b] = h_mixed_jet[m][n].grad[b];
                }
            }
        }

        // F, A, D from the projected split of ∇τ.
        let mut antis = [[0.0; DIM]; DIM]; // τ_{m,n} − τ_{n,m}
        let mut syms = [[0.0; DIM]; DIM]; // τ_{m;n} + τ_{n;m}
        for m in 0..DIM {
            for n in 0..DIM {
                antis[m][n] = dtau[m][n] - dtau[n][m];
                syms[m][n] = tau_cov[m][n] + tau_cov[n][m];
            }
        }
        let mut accel = [0.0; DIM];
        for a in 0..DIM {
            let mut v = 0.0;
            for m in 0..DIM {
                for n in 0..DIM {
                    v -= antis[m][n] * tau_up[n] * h_mixed[m][a];
                }
            }
            accel[a] = v;
        }
        // fill a ≤ b and mirror, so A is antisymmetric and D symmetric to
        // the bit; the diagonal of A is identically zero
        let mut rotation = [[0.0; DIM]; DIM];
        let mut deformation = [[0.0; DIM]; DIM];
        for a in 0..DIM {
            for b in a..DIM {
                let mut rot = 0.0;
                let mut def = 0.0;
                for m in 0..DIM {
                    for n in 0..DIM {
                        let proj = h_mixed[m][a] * h_mixed[n][b];
                        rot += 0.5 * antis[m][n] * proj;
                        def -= 0.5 * syms[m][n] * proj;
                    }
                }
                if a == b {
                    rotation[a][a] = 0.0;
                } else {
                    rotation[a][b] = rot;
                    rotation[b][a] = -rot;
                }
                deformation[a][b] = def;
                deformation[b][a] = def;
            }
        }

        // Spatial connection L, its tilde variant, and the curvature P.
        let mut l_tilde_j = [[[Jet1::ZERO; DIM]; DIM]; DIM];
        let mut l_spatial = ZERO3;
        let mut l_tilde = ZERO3;
        for e in 0..DIM {
            for s in 0..DIM {
                for n in 0..DIM {
                    let mut acc = Jet1::ZERO;
                    for c in 0..DIM {
                        let sum = h_dn_jet[s][c].d(n) + h_dn_jet[n][c].d(s) - h_dn_jet[s][n].d(c);
                        acc = acc + h_up_jet[e][c].lower() * sum;
                    }
                    let l = acc * 0.5;
                    l_spatial[e][s][n] = l.value;
                    let lt = l + h_mixed_jet[e][s].d(n);
                    l_tilde_j[e][s][n] = lt;
                    l_tilde[e][s][n] = lt.value;
                }
            }
        }

        let mut p_mixed = ZERO4;
        let mut p_dn = ZERO4;
        {
            // inner curvature combination of L̃ before projection
            let mut k_inner = ZERO4; // [e][s][m][n]
            for e in 0..DIM {
                for s in 0..DIM {
                    for m in 0..DIM {
                        for n in 0..DIM {
                            let mut v =
                                l_tilde_j[e][s][n].grad[m] - l_tilde_j[e][s][m].grad[n];
                            for k in 0..DIM {
                                v += l_tilde[e][k][m] * l_tilde[k][s][n]
                                    - l_tilde[e][k][n] * l_tilde[k][s][m];
                            }
                            k_inner[e][s][m][n] = v;
                        }
                    }
                }
            }
            for a in 0..DIM {
                for b in 0..DIM {
                    for r in 0..DIM {
                        for l in 0..DIM {
                            let mut v = 0.0;
                            for m in 0..DIM {
                                for n in 0..DIM {
                                    for s in 0..DIM {
                                        for e in 0..DIM {
                                            v -= h_mixed[m][a]
                                                * h_mixed[n][b]
                                                * h_mixed[s][r]
                                                * h_mixed[l][e]
                                                * k_inner[e][s][m][n];
                                        }
                                    }
                                }
                            }
                            p_mixed[a][b][r][l] = v;
                        }
                    }
                }
            }
            for a in 0..DIM {
                for b in 0..DIM {
                    for r in 0..DIM {
                        for l in 0..DIM {
                            let mut v = 0.0;
                            for s in 0..DIM {
                                v += g_dn[l][s] * p_mixed[a][b][r][s];
                            }
                            p_dn[a][b][r][l] = v;
                        }
                    }
                }
            }
        }

        // Spatial projections of the Riemann tensor.
        let mut z_mixed = ZERO4;
        let mut z_dn = ZERO4;
        let mut y_proj = ZERO3;
        let mut x_proj = [[0.0; DIM]; DIM];
        for m in 0..DIM {
            for n in 0..DIM {
                for k in 0..DIM {
                    for l in 0..DIM {
                        let mut v = 0.0;
                        for a in 0..DIM {
                            for b in 0..DIM {
                                for g in 0..DIM {
                                    for d in 0..DIM {
                                        v += h_mixed[a][m]
                                            * h_mixed[b][n]
                                            * h_mixed[g][k]
                                            * h_mixed[l][d]
                                            * r_mixed[a][b][g][d];
                                    }
                                }
                            }
                        }
                        z_mixed[m][n][k][l] = v;
                    }
                    let mut y = 0.0;
                    for a in 0..DIM {
                        for b in 0..DIM {
                            for g in 0..DIM {
                                for d in 0..DIM {
                                    y += h_mixed[a][m]
                                        * h_mixed[b][n]
                                        * h_mixed[g][k]
                                        * tau_dn[d]
                                        * r_mixed[a][b][g][d];
                                }
                            }
                        }
                    }
                    y_proj[m][n][k] = y;
                }
            }
        }
        for m in 0..DIM {
            for n in 0..DIM {
                for k in 0..DIM {
                    for l in 0..DIM {
                        let mut v = 0.0;
                        for s in 0..DIM {
                            v += g_dn[l][s] * z_mixed[m][n][k][s];
                        }
                        z_dn[m][n][k][l] = v;
                    }
                }
            }
        }
        for n in 0..DIM {
            for k in 0..DIM {
                let mut v = 0.0;
                for a in 0..DIM {
                    for b in 0..DIM {
                        for g in 0..DIM {
                            for d in 0..DIM {
                                v -= h_mixed[b][n]
                                    * h_mixed[g][k]
                                    * tau_up[a]
                                    * tau_dn[d]
                                    * r_mixed[a][b][g][d];
                            }
                        }
                    }
                }
                x_proj[n][k] = v;
            }
        }

        // θ decomposition of τ_l τ_{[m;n]}.
        let mut product = ZERO3;
        for l in 0..DIM {
            for m in 0..DIM {
                for n in 0..DIM {
                    product[l][m][n] = tau_dn[l] * tau_br[m][n];
                }
            }
        }
        let alt_part = alternate3(&product);
        let mut theta = ZERO3;
        for l in 0..DIM {
            for m in 0..DIM {
                for n in 0..DIM {
                    theta[l][m][n] = product[l][m][n] - alt_part[l][m][n];
                }
            }
        }

        Ok(PointFrame {
            metric_name: provider.name().to_string(),
            stationary: provider.is_stationary(),
            coords: *x,
            g_dn,
            g_up,
            dg,
            ddg,
            gamma,
            dgamma,
            r_mixed,
            r_dn,
            xi_up,
            xi_dn,
            xi_cov,
            phi,
            tau_up,
            tau_dn,
            dtau,
            dtau_up,
            tau_cov,
            tau_br,
            h_dn,
            h_mixed,
            h_up,
            dh_mixed,
            accel,
            rotation,
            deformation,
            l_spatial,
            l_tilde,
            p_mixed,
            p_dn,
            z_mixed,
            z_dn,
            y_proj,
            x_proj,
            theta,
            alt_part,
        })
    }

    /// max |g_{ma} g^{an} − δ^n_m|
    pub fn metric_roundtrip_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for m in 0..DIM {
            for n in 0..DIM {
                let mut v = 0.0;
                for a in 0..DIM {
                    v += self.g_dn[m][a] * self.g_up[a][n];
                }
                let expect = if m == n { 1.0 } else { 0.0 };
                worst = worst.max((v - expect).abs());
            }
        }
        worst
    }

    /// |τ_μ τ^μ − 1|
    pub fn tau_norm_residual(&self) -> f64 {
        let dot: f64 = (0..DIM).map(|m| self.tau_dn[m] * self.tau_up[m]).sum();
        (dot - 1.0).abs()
    }

    /// max_n |τ_{m;n} τ^m|
    pub fn tau_cov_orthogonality_residual(&self) -> f64 {
        (0..DIM)
            .map(|n| {
                (0..DIM)
                    .map(|m| self.tau_cov[m][n] * self.tau_up[m])
                    .sum::<f64>()
                    .abs()
            })
            .fold(0.0, f64::max)
    }

    /// max |ξ_{m;n} + ξ_{n;m}|
    pub fn killing_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for m in 0..DIM {
            for n in 0..DIM {
                worst = worst.max((self.xi_cov[m][n] + self.xi_cov[n][m]).abs());
            }
        }
        worst
    }

    /// max |D_{ab}|
    pub fn deformation_magnitude(&self) -> f64 {
        max_abs2(&self.deformation)
    }

    /// Residuals of the five h-contraction identities.
    pub fn h_identities(&self) -> HIdentityReport {
        let mut hdn_tau: f64 = 0.0;
        let mut hmx_tau: f64 = 0.0;
        let mut hup_tau: f64 = 0.0;
        for m in 0..DIM {
            let mut a = 0.0;
            let mut b = 0.0;
            let mut c = 0.0;
            for n in 0..DIM {
                a += self.h_dn[m][n] * self.tau_up[n];
                b += self.h_mixed[m][n] * self.tau_up[n];
                c += self.h_up[m][n] * self.tau_dn[n];
            }
            hdn_tau = hdn_tau.max(a.abs());
            hmx_tau = hmx_tau.max(b.abs());
            hup_tau = hup_tau.max(c.abs());
        }
        let mut square: f64 = 0.0;
        for a in 0..DIM {
            for b in 0..DIM {
                let mut v = self.h_dn[a][b];
                for m in 0..DIM {
                    v += self.h_mixed[m][a] * self.h_dn[m][b];
                }
                square = square.max(v.abs());
            }
        }
        let mut trace = 0.0;
        for m in 0..DIM {
            for n in 0..DIM {
                trace += self.h_dn[m][n] * self.h_up[m][n];
            }
        }
        HIdentityReport {
            h_dn_tau: hdn_tau,
            h_mixed_tau: hmx_tau,
            h_up_tau: hup_tau,
            h_square: square,
            h_trace: (trace - 3.0).abs(),
        }
    }

    /// Residual of A_{ab} = ½(τ_{a,b} − τ_{b,a}) + ½(τ_a F_b − τ_b F_a).
    pub fn a_decomposition_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for a in 0..DIM {
            for b in 0..DIM {
                let rhs = 0.5 * (self.dtau[a][b] - self.dtau[b][a])
                    + 0.5 * (self.tau_dn[a] * self.accel[b] - self.tau_dn[b] * self.accel[a]);
                worst = worst.max((self.rotation[a][b] - rhs).abs());
            }
        }
        worst
    }

    /// Residual of the Christoffel expansion through τ, h, F, A, D.
    pub fn gamma_decomposition_residual(&self) -> f64 {
        let mut f_up = [0.0; DIM];
        let mut a_up = [[0.0; DIM]; DIM];
        for m in 0..DIM {
            for s in 0..DIM {
                f_up[m] += self.g_up[m][s] * self.accel[s];
                for b in 0..DIM {
                    a_up[m][b] += self.g_up[m][s] * self.rotation[s][b];
                }
            }
        }
        let mut worst: f64 = 0.0;
        for m in 0..DIM {
            for a in 0..DIM {
                for b in 0..DIM {
                    let rhs = (self.l_spatial[m][a][b] + self.dh_mixed[m][a][b])
                        - self.tau_up[m]
                            * (self.rotation[a][b] - self.deformation[a][b]
                                + self.accel[a] * self.tau_dn[b])
                        + f_up[m] * self.tau_dn[a] * self.tau_dn[b]
                        + (self.tau_dn[a] * a_up[m][b] + self.tau_dn[b] * a_up[m][a])
                        - self.tau_dn[a] * self.dtau_up[m][b];
                    worst = worst.max((self.gamma[m][a][b] - rhs).abs());
                }
            }
        }
        worst
    }

    /// Residual of the convention bridge R_{mna}{}^l = −R̆^l_{anm}, with R̆
    /// rebuilt from Γ independently.
    pub fn convention_bridge_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for la in 0..DIM {
            for al in 0..DIM {
                for nu in 0..DIM {
                    for mu in 0..DIM {
                        let mut breve = self.dgamma[nu][la][al][mu] - self.dgamma[mu][la][al][nu];
                        for e in 0..DIM {
                            breve += self.gamma[e][al][mu] * self.gamma[la][e][nu]
                                - self.gamma[e][al][nu] * self.gamma[la][e][mu];
                        }
                        worst = worst.max((self.r_mixed[mu][nu][al][la] + breve).abs());
                    }
                }
            }
        }
        worst
    }

    /// max contraction of any z_dn slot with τ (all four slots).
    pub fn z_orthogonality_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let mut c = [0.0; 4];
                    for s in 0..DIM {
                        c[0] += self.z_dn[s][i][j][k] * self.tau_up[s];
                        c[1] += self.z_dn[i][s][j][k] * self.tau_up[s];
                        c[2] += self.z_dn[i][j][s][k] * self.tau_up[s];
                        c[3] += self.z_dn[i][j][k][s] * self.tau_up[s];
                    }
                    for v in c {
                        worst = worst.max(v.abs());
                    }
                }
            }
        }
        worst
    }

    pub fn theta_tensor(&self) -> Tensor<f64> {
        ten3_to_tensor(&self.theta)
    }

    pub fn accel_tensor(&self) -> Tensor<f64> {
        Tensor::from_components(1, DIM, self.accel.to_vec()).expect("shape")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HIdentityReport {
    pub h_dn_tau: f64,
    pub h_mixed_tau: f64,
    pub h_up_tau: f64,
    pub h_square: f64,
    pub h_trace: f64,
}

impl HIdentityReport {
    pub fn max(&self) -> f64 {
        self.h_dn_tau
            .max(self.h_mixed_tau)
            .max(self.h_up_tau)
            .max(self.h_square)
            .max(self.h_trace)
    }
}

/// Staticity diagnosis per the hypersurface-orthogonality criterion.
#[derive(Clone, Debug, Serialize)]
pub struct StaticityReport {
    pub is_static: bool,
    /// max |ξ_{[λ}ξ_{μ;ν]}|
    pub xi_alternation: f64,
    /// max |τ_{[λ}τ_{μ;ν]}|
    pub tau_alternation: f64,
    /// relative residual of ξ_{[λ}ξ_{μ;ν]} = φ²·τ_{[λ}τ_{μ;ν]}
    pub ratio_residual: f64,
}

pub const STATICITY_TOL: f64 = 1e-10;

/// Tests whether a stationary metric is static at a point.
pub fn staticity_test(
    provider: &dyn MetricProvider,
    x: &Vec4,
) -> Result<StaticityReport, GeometryError> {
    if !provider.is_stationary() {
        return Err(GeometryError::NotStationary(provider.name().to_string()));
    }
    let frame = PointFrame::build(provider, x)?;
    Ok(staticity_from_frame(&frame))
}

pub fn staticity_from_frame(frame: &PointFrame) -> StaticityReport {
    let mut xi_product = ZERO3;
    let mut tau_product = ZERO3;
    for l in 0..DIM {
        for m in 0..DIM {
            for n in 0..DIM {
                xi_product[l][m][n] = frame.xi_dn[l] * frame.xi_cov[m][n];
                tau_product[l][m][n] = frame.tau_dn[l] * frame.tau_cov[m][n];
            }
        }
    }
    let xi_alt = alternate3(&xi_product);
    let tau_alt = alternate3(&tau_product);
    let xi_max = max_abs3(&xi_alt);
    let tau_max = max_abs3(&tau_alt);

    let phi2 = frame.phi * frame.phi;
    let mut ratio_abs: f64 = 0.0;
    for l in 0..DIM {
        for m in 0..DIM {
            for n in 0..DIM {
                ratio_abs = ratio_abs.max((xi_alt[l][m][n] - phi2 * tau_alt[l][m][n]).abs());
            }
        }
    }
    let scale = xi_max.max(phi2 * tau_max).max(1e-300);
    let ratio_residual = if xi_max == 0.0 && tau_max == 0.0 {
        0.0
    } else {
        ratio_abs / scale
    };

    StaticityReport {
        is_static: tau_max <= STATICITY_TOL,
        xi_alternation: xi_max,
        tau_alternation: tau_max,
        ratio_residual,
    }
}

/// Full antisymmetrization of an order-3 array.
pub fn alternate3(t: &Ten3) -> Ten3 {
    let mut out = ZERO3;
    for l in 0..DIM {
        for m in 0..DIM {
            for n in 0..DIM {
                out[l][m][n] = (t[l][m][n] - t[l][n][m] - t[m][l][n] + t[m][n][l] + t[n][l][m]
                    - t[n][m][l])
                    / 6.0;
            }
        }
    }
    out
}

pub fn max_abs2(t: &Mat4) -> f64 {
    t.iter()
        .flatten()
        .fold(0.0f64, |acc, v| acc.max(v.abs()))
}

pub fn max_abs3(t: &Ten3) -> f64 {
    t.iter()
        .flatten()
        .flatten()
        .fold(0.0f64, |acc, v| acc.max(v.abs()))
}

pub fn max_abs4(t: &Ten4) -> f64 {
    t.iter()
        .flatten()
        .flatten()
        .flatten()
        .fold(0.0f64, |acc, v| acc.max(v.abs()))
}

pub fn ten3_to_tensor(t: &Ten3) -> Tensor<f64> {
    Tensor::from_fn(3, DIM, |idx| t[idx[0]][idx[1]][idx[2]])
}

pub fn ten4_to_tensor(t: &Ten4) -> Tensor<f64> {
    Tensor::from_fn(4, DIM, |idx| t[idx[0]][idx[1]][idx[2]][idx[3]])
}

pub fn tensor_to_ten4(t: &Tensor<f64>) -> Ten4 {
    let mut out = ZERO4;
    for (i, row) in out.iter_mut().enumerate() {
        for (j, col) in row.iter_mut().enumerate() {
            for (k, line) in col.iter_mut().enumerate() {
                for (l, cell) in line.iter_mut().enumerate() {
                    *cell = *t.get(&[i, j, k, l]);
                }
            }
        }
    }
    out
}
