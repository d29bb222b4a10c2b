//! Numeric geometry checks against independent oracles: hand-coded closed
//! forms for the Schwarzschild and FLRW connections, a finite-difference
//! Riemann assembly from those closed forms, and the per-metric residual
//! bounds of the verification suite.

use tensym::formulas::{
    alternation_cross_check, cancellation_experiment, cancellation_sum, check_formula,
    pairwise_rhs_residual, rational_alternation, synchronized_reduction_check,
    theta_class_residual, theta_identity_residuals, theta_wing_residual, FormulaId, FORMULA_TOL,
};
use tensym::frame::{
    max_abs2, max_abs3, max_abs4, staticity_from_frame, staticity_test, PointFrame, Ten3, Ten4,
};
use tensym::metric::{BuiltinMetric, MetricProvider};
use tensym::rational::Rational;
use tensym::rng::SplitMix64;
use tensym::tensor::Tensor;
use tensym::GeometryError;

const SCHWARZSCHILD_POINT: [f64; 4] = [0.0, 6.0, 1.0, 0.5];
const LANGEVIN_POINT: [f64; 4] = [0.0, 2.0, 0.3, 0.1];
const FLRW_POINT: [f64; 4] = [2.0, 0.3, 0.4, 0.5];

fn schwarzschild() -> BuiltinMetric {
    BuiltinMetric::Schwarzschild { m: 1.0 }
}

fn langevin() -> BuiltinMetric {
    BuiltinMetric::Langevin { omega: 0.1 }
}

/// Closed-form Schwarzschild Christoffel symbols, [l][m][n] = Γ^l_{mn}.
fn schwarzschild_gamma_oracle(m: f64, x: &[f64; 4]) -> Ten3 {
    let (r, th) = (x[1], x[2]);
    let f = 1.0 - 2.0 * m / r;
    let mut g = [[[0.0; 4]; 4]; 4];
    g[0][0][1] = m / (r * r * f);
    g[0][1][0] = g[0][0][1];
    g[1][0][0] = m * f / (r * r);
    g[1][1][1] = -m / (r * r * f);
    g[1][2][2] = -(r - 2.0 * m);
    g[1][3][3] = -(r - 2.0 * m) * th.sin().powi(2);
    g[2][1][2] = 1.0 / r;
    g[2][2][1] = 1.0 / r;
    g[2][3][3] = -th.sin() * th.cos();
    g[3][1][3] = 1.0 / r;
    g[3][3][1] = 1.0 / r;
    g[3][2][3] = th.cos() / th.sin();
    g[3][3][2] = g[3][2][3];
    g
}

/// Closed-form FLRW (a(t) = t) Christoffel symbols.
fn flrw_gamma_oracle(x: &[f64; 4]) -> Ten3 {
    let t = x[0];
    let mut g = [[[0.0; 4]; 4]; 4];
    for i in 1..4 {
        g[0][i][i] = t; // Γ^t_{ii} = a·ȧ
        g[i][0][i] = 1.0 / t; // Γ^i_{ti} = ȧ/a
        g[i][i][0] = 1.0 / t;
    }
    g
}

/// Riemann tensor assembled from a Christoffel oracle with central-difference
/// derivatives: an AD-free route to R_{mna}{}^l.
fn riemann_from_gamma_oracle(gamma_at: impl Fn(&[f64; 4]) -> Ten3, x: &[f64; 4]) -> Ten4 {
    let h = 1e-5;
    let gamma = gamma_at(x);
    let mut dgamma = [[[[0.0; 4]; 4]; 4]; 4]; // [s][l][m][n] = ∂_s Γ^l_{mn}
    for s in 0..4 {
        let mut xp = *x;
        xp[s] += h;
        let mut xm = *x;
        xm[s] -= h;
        let gp = gamma_at(&xp);
        let gm = gamma_at(&xm);
        for l in 0..4 {
            for m in 0..4 {
                for n in 0..4 {
                    dgamma[s][l][m][n] = (gp[l][m][n] - gm[l][m][n]) / (2.0 * h);
                }
            }
        }
    }
    let mut r = [[[[0.0; 4]; 4]; 4]; 4];
    for mu in 0..4 {
        for nu in 0..4 {
            for al in 0..4 {
                for la in 0..4 {
                    let mut v = dgamma[mu][la][nu][al] - dgamma[nu][la][mu][al];
                    for e in 0..4 {
                        v += gamma[e][nu][al] * gamma[la][mu][e]
                            - gamma[e][mu][al] * gamma[la][nu][e];
                    }
                    r[mu][nu][al][la] = v;
                }
            }
        }
    }
    r
}

#[test]
fn schwarzschild_christoffel_matches_closed_form() {
    let frame = PointFrame::build(&schwarzschild(), &SCHWARZSCHILD_POINT).unwrap();
    let oracle = schwarzschild_gamma_oracle(1.0, &SCHWARZSCHILD_POINT);
    for l in 0..4 {
        for m in 0..4 {
            for n in 0..4 {
                assert!(
                    (frame.gamma[l][m][n] - oracle[l][m][n]).abs() < 1e-13,
                    "Γ^{l}_{m}{n}: {} vs oracle {}",
                    frame.gamma[l][m][n],
                    oracle[l][m][n]
                );
            }
        }
    }
    // the value quoted in the operation contract
    assert!((frame.gamma[1][0][0] - 4.0 / 216.0).abs() < 1e-15);
}

#[test]
fn flrw_christoffel_matches_closed_form() {
    let frame = PointFrame::build(&BuiltinMetric::Flrw, &FLRW_POINT).unwrap();
    let oracle = flrw_gamma_oracle(&FLRW_POINT);
    for l in 0..4 {
        for m in 0..4 {
            for n in 0..4 {
                assert!((frame.gamma[l][m][n] - oracle[l][m][n]).abs() < 1e-13);
            }
        }
    }
    assert!((frame.gamma[1][0][1] - 0.5).abs() < 1e-15);
}

#[test]
fn schwarzschild_riemann_matches_fd_oracle() {
    let frame = PointFrame::build(&schwarzschild(), &SCHWARZSCHILD_POINT).unwrap();
    let oracle = riemann_from_gamma_oracle(
        |x| schwarzschild_gamma_oracle(1.0, x),
        &SCHWARZSCHILD_POINT,
    );
    for mu in 0..4 {
        for nu in 0..4 {
            for al in 0..4 {
                for la in 0..4 {
                    assert!(
                        (frame.r_mixed[mu][nu][al][la] - oracle[mu][nu][al][la]).abs() < 1e-9,
                        "R_{mu}{nu}{al}^{la}"
                    );
                }
            }
        }
    }
    // frozen closed-form component: R_dn[t][r][r][t] = 2m/r³
    assert!((frame.r_dn[0][1][1][0] - 2.0 / 216.0).abs() < 1e-12);
    assert!((frame.r_dn[0][1][0][1] + 2.0 / 216.0).abs() < 1e-12);
}

#[test]
fn flrw_riemann_matches_fd_oracle() {
    let frame = PointFrame::build(&BuiltinMetric::Flrw, &FLRW_POINT).unwrap();
    let oracle = riemann_from_gamma_oracle(flrw_gamma_oracle, &FLRW_POINT);
    for mu in 0..4 {
        for nu in 0..4 {
            for al in 0..4 {
                for la in 0..4 {
                    assert!(
                        (frame.r_mixed[mu][nu][al][la] - oracle[mu][nu][al][la]).abs() < 1e-9
                    );
                }
            }
        }
    }
}

#[test]
fn riemann_antisymmetry_on_all_builtins() {
    for (metric, point) in builtin_cases() {
        let frame = PointFrame::build(&metric, &point).unwrap();
        for mu in 0..4 {
            for nu in 0..4 {
                for al in 0..4 {
                    for la in 0..4 {
                        let a = frame.r_dn[mu][nu][al][la];
                        assert!(
                            (a + frame.r_dn[nu][mu][al][la]).abs() < 1e-12,
                            "{metric}: antisymmetry in the derivative pair"
                        );
                        assert!(
                            (a + frame.r_dn[mu][nu][la][al]).abs() < 1e-12,
                            "{metric}: antisymmetry in the lowered pair"
                        );
                    }
                }
            }
        }
        assert!(frame.convention_bridge_residual() < 1e-12, "{metric}");
    }
}

fn builtin_cases() -> Vec<(BuiltinMetric, [f64; 4])> {
    vec![
        (BuiltinMetric::Minkowski, [0.0, 1.0, 1.0, 1.0]),
        (schwarzschild(), SCHWARZSCHILD_POINT),
        (langevin(), LANGEVIN_POINT),
        (BuiltinMetric::Flrw, FLRW_POINT),
    ]
}

#[test]
fn frame_invariants_on_all_builtins() {
    for (metric, point) in builtin_cases() {
        let frame = PointFrame::build(&metric, &point).unwrap();
        assert!(frame.metric_roundtrip_residual() < 1e-12, "{metric}");
        assert!(frame.tau_norm_residual() < 1e-12, "{metric}");
        assert!(frame.tau_cov_orthogonality_residual() < 1e-10, "{metric}");
        assert!(frame.h_identities().max() < 1e-12, "{metric}");
        assert!(frame.a_decomposition_residual() < 1e-10, "{metric}");
        assert!(frame.gamma_decomposition_residual() < 1e-8, "{metric}");
        assert!(frame.z_orthogonality_residual() < 1e-10, "{metric}");
        assert!(alternation_cross_check(&frame) < 1e-14, "{metric}");
        // A antisymmetric and D symmetric to the bit, by construction
        for a in 0..4 {
            assert_eq!(frame.rotation[a][a].to_bits(), 0.0f64.to_bits());
            for b in 0..4 {
                if a != b {
                    assert_eq!(
                        frame.rotation[a][b].to_bits(),
                        (-frame.rotation[b][a]).to_bits()
                    );
                }
                assert_eq!(
                    frame.deformation[a][b].to_bits(),
                    frame.deformation[b][a].to_bits()
                );
            }
        }
        if metric.is_stationary() {
            assert!(frame.killing_residual() < 1e-10, "{metric}");
            assert!(frame.deformation_magnitude() < 1e-10, "{metric}");
        }
        // θ is antisymmetric in its last two indices on every frame
        for l in 0..4 {
            for m in 0..4 {
                for n in 0..4 {
                    assert!((frame.theta[l][m][n] + frame.theta[l][n][m]).abs() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn minkowski_everything_vanishes() {
    let frame = PointFrame::build(&BuiltinMetric::Minkowski, &[0.0, 1.0, 1.0, 1.0]).unwrap();
    assert!(max_abs4(&frame.r_dn) <= 1e-14);
    assert!(max_abs4(&frame.z_dn) <= 1e-14);
    assert!(max_abs4(&frame.p_dn) <= 1e-14);
    assert!(frame.accel.iter().all(|v| v.abs() <= 1e-14));
    assert!(max_abs2(&frame.rotation) <= 1e-14);
    assert!(max_abs2(&frame.deformation) <= 1e-14);
    assert!(max_abs3(&frame.theta) <= 1e-14);
    assert!(max_abs3(&frame.y_proj) <= 1e-14);
    assert!(max_abs2(&frame.x_proj) <= 1e-14);
    for id in FormulaId::ALL {
        let check = check_formula(&frame, id, 1e-14);
        assert!(check.applicable && check.pass, "{}", check.formula);
    }
    let st = staticity_from_frame(&frame);
    assert!(st.is_static);
    assert!(st.ratio_residual <= 1e-14);
}

#[test]
fn schwarzschild_suite() {
    let frame = PointFrame::build(&schwarzschild(), &SCHWARZSCHILD_POINT).unwrap();
    assert!(frame.killing_residual() <= 1e-10);
    assert!(frame.deformation_magnitude() <= 1e-10);

    let st = staticity_test(&schwarzschild(), &SCHWARZSCHILD_POINT).unwrap();
    assert!(st.is_static);
    assert!(st.tau_alternation <= 1e-10);
    assert!(st.xi_alternation <= 1e-10);
    assert!(st.ratio_residual <= 1e-10);

    for id in FormulaId::ALL {
        let check = check_formula(&frame, id, FORMULA_TOL);
        assert!(check.applicable, "{} must apply", check.formula);
        assert!(
            check.pass,
            "{} residual {}",
            check.formula, check.residual_rel
        );
    }

    // components with an odd number of timelike slots vanish on a static
    // diagonal metric, so the Y projection is zero while X is not
    assert!(max_abs3(&frame.y_proj) <= 1e-12);
    assert!(max_abs2(&frame.x_proj) > 1e-2);

    // static case: the alternating part vanishes and θ is the whole product
    assert!(max_abs3(&frame.alt_part) <= 1e-12);
    for l in 0..4 {
        for m in 0..4 {
            for n in 0..4 {
                let product = frame.tau_dn[l] * frame.tau_br[m][n];
                assert!((frame.theta[l][m][n] - product).abs() <= 1e-12);
            }
        }
    }
}

#[test]
fn langevin_suite() {
    let metric = langevin();
    let frame = PointFrame::build(&metric, &LANGEVIN_POINT).unwrap();

    // the rotating frame of flat space: curvature vanishes identically,
    // and so do all three of its spatial projections
    assert!(max_abs4(&frame.r_dn) <= 1e-12);
    assert!(max_abs4(&frame.z_dn) <= 1e-12);
    assert!(max_abs3(&frame.y_proj) <= 1e-12);
    assert!(max_abs2(&frame.x_proj) <= 1e-12);
    // ... but the spatial geometry does not
    assert!(max_abs4(&frame.p_dn) > 1e-2);

    let st = staticity_test(&metric, &LANGEVIN_POINT).unwrap();
    assert!(!st.is_static);
    assert!(st.tau_alternation > 1e-3);
    // frozen regression values: max|τ alternation| = 5/72, max|ξ alternation| = 1/15
    assert!((st.tau_alternation - 5.0 / 72.0).abs() < 1e-12);
    assert!((st.xi_alternation - 1.0 / 15.0).abs() < 1e-12);
    assert!(st.ratio_residual <= 1e-10);

    for id in FormulaId::ALL {
        let check = check_formula(&frame, id, FORMULA_TOL);
        assert!(check.applicable && check.pass, "{}", check.formula);
    }
    // the three expansions agree pairwise even though the metric is not static
    for (a, b) in [
        (FormulaId::Expanded15, FormulaId::ThetaForm118),
        (FormulaId::Expanded15, FormulaId::Reduced120),
        (FormulaId::ThetaForm118, FormulaId::Reduced120),
    ] {
        assert!(pairwise_rhs_residual(&frame, a, b) <= FORMULA_TOL);
    }
}

#[test]
fn theta_suite_on_langevin() {
    let frame = PointFrame::build(&langevin(), &LANGEVIN_POINT).unwrap();
    let residuals = theta_identity_residuals(&frame.theta);
    for (i, r) in residuals.iter().enumerate() {
        assert!(*r <= 1e-12, "θ identity {i}: {r}");
    }
    assert!(theta_class_residual(&frame) <= 1e-10);
    assert!(theta_wing_residual(&frame) <= 1e-9);
}

#[test]
fn flrw_synchronized_suite() {
    let report = synchronized_reduction_check(&BuiltinMetric::Flrw, &FLRW_POINT).unwrap();
    assert!(report.accel_max <= 1e-10);
    assert!(report.rotation_max <= 1e-10);
    assert!(report.reduced_formula_residual <= 1e-7);

    // the unreduced projection identity holds for any observer field
    let frame = PointFrame::build(&BuiltinMetric::Flrw, &FLRW_POINT).unwrap();
    let check = check_formula(&frame, FormulaId::Projection230, FORMULA_TOL);
    assert!(check.applicable && check.pass);
    // while the Killing-observer reductions correctly report inapplicability
    let reduced = check_formula(&frame, FormulaId::KillingReduced35, FORMULA_TOL);
    assert!(!reduced.applicable);

    // Minkowski is synchronized too, with every residual zero
    let mink = synchronized_reduction_check(&BuiltinMetric::Minkowski, &[0.0, 1.0, 1.0, 1.0])
        .unwrap();
    assert!(mink.accel_max <= 1e-14);
    assert!(mink.rotation_max <= 1e-14);
    assert!(mink.reduced_formula_residual <= 1e-14);

    // standard Schwarzschild coordinates are rejected
    let rejected = synchronized_reduction_check(&schwarzschild(), &SCHWARZSCHILD_POINT);
    assert!(matches!(rejected, Err(GeometryError::NotSynchronized(_))));
}

#[test]
fn staticity_requires_stationary_provider() {
    let res = staticity_test(&BuiltinMetric::Flrw, &FLRW_POINT);
    assert!(matches!(res, Err(GeometryError::NotStationary(_))));
}

#[test]
fn frame_build_errors() {
    // inside the horizon ∂_t is not timelike
    let res = PointFrame::build(&schwarzschild(), &[0.0, 1.0, 1.0, 0.5]);
    assert!(matches!(res, Err(GeometryError::NonTimelike { .. })));
    // FLRW at t = 0 is singular
    let res = PointFrame::build(&BuiltinMetric::Flrw, &[0.0, 0.3, 0.4, 0.5]);
    assert!(matches!(res, Err(GeometryError::SingularMetric { .. })));
}

#[test]
fn cancellation_criterion() {
    for seed in 0..20u64 {
        let report = cancellation_experiment(seed);
        assert!(report.alternating_sum_is_zero, "seed {seed}");
        assert!(!report.generic_sum_is_zero, "seed {seed}");
        assert!(report.pass);
    }
    // degenerate input: a = 0 sums to zero trivially
    let f = std::array::from_fn(|_| Rational::from_integer(1.into()));
    let zero = Tensor::<Rational>::zeros(3, 4);
    assert!(cancellation_sum(&f, &zero).is_zero());
    // oracle for the alternation helper itself
    let mut g = SplitMix64::new(7);
    let raw = Tensor::from_fn(3, 4, |_| g.small_rational());
    let alt = rational_alternation(&raw);
    for l in 0..4usize {
        for m in 0..4usize {
            for n in 0..4usize {
                // antisymmetric under adjacent swaps
                let v = alt.get(&[l, m, n]).clone();
                let s1 = alt.get(&[m, l, n]).clone();
                let s2 = alt.get(&[l, n, m]).clone();
                use tensym::tensor::Scalar;
                assert!(v.add(&s1).is_zero());
                assert!(v.add(&s2).is_zero());
            }
        }
    }
}

#[test]
fn langevin_xi_tau_ratio_matches_phi_squared() {
    // the alternation ratio pins φ² = 0.96 at ωρ = 0.2
    let st = staticity_test(&langevin(), &LANGEVIN_POINT).unwrap();
    let ratio = st.xi_alternation / st.tau_alternation;
    assert!((ratio - 0.96).abs() < 1e-12);
}
