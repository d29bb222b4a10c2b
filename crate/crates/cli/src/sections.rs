//! Builders for the verdict sections. Each section runs one suite and
//! returns named checks with their residuals and thresholds; the report is
//! the concatenation of all sections.

use serde::Serialize;

use tensym::curvature::{
    acr_dimension, span_experiment, zeta_span_experiment, GeneratorKind, ProductOrder,
};
use tensym::formulas::{
    cancellation_experiment, check_formula, pairwise_rhs_residual, synchronized_reduction_check,
    theta_class_residual, theta_identity_residuals, theta_wing_residual, FormulaCheck, FormulaId,
};
use tensym::frame::{staticity_from_frame, PointFrame};
use tensym::group_ring::named;
use tensym::lr::{format_product, lr_product};
use tensym::metric::BuiltinMetric;
use tensym::rational::{rat, rat_int, rat_display};
use tensym::rng::sub_seed;
use tensym::young::{curvature_tableau, standard_tableaux, verify_ring_decomposition, Partition};

use crate::config::{RunConfig, Tolerances};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
    pub pass: bool,
}

impl Check {
    pub fn exact(name: impl Into<String>, pass: bool) -> Check {
        Check {
            name: name.into(),
            value: None,
            threshold: None,
            pass,
        }
    }

    /// Residual-style check: pass iff value ≤ threshold.
    pub fn below(name: impl Into<String>, value: f64, threshold: f64) -> Check {
        Check {
            name: name.into(),
            value: Some(value),
            threshold: Some(threshold),
            pass: value <= threshold,
        }
    }

    /// Witness-style check: pass iff value > threshold.
    pub fn above(name: impl Into<String>, value: f64, threshold: f64) -> Check {
        Check {
            name: name.into(),
            value: Some(value),
            threshold: Some(threshold),
            pass: value > threshold,
        }
    }

    pub fn count(name: impl Into<String>, got: usize, expect: usize) -> Check {
        Check {
            name: format!("{} = {expect} (got {got})", name.into()),
            value: None,
            threshold: None,
            pass: got == expect,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub name: &'static str,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Section {
    pub fn new(name: &'static str, checks: Vec<Check>) -> Section {
        let pass = checks.iter().all(|c| c.pass);
        Section { name, checks, pass }
    }
}

/// Exact relation table of the named degree-3 idempotents.
pub fn group_algebra_section() -> Section {
    let mut checks = Vec::new();
    let rho = named::rho();
    let eta = named::eta();
    let f0 = named::f0();
    checks.push(Check::exact(
        "rho·rho = rho",
        rho.ring_multiply(&rho).unwrap() == rho,
    ));
    checks.push(Check::exact(
        "eta·eta = eta",
        eta.ring_multiply(&eta).unwrap() == eta,
    ));
    checks.push(Check::exact(
        "f0·f0 = f0",
        f0.ring_multiply(&f0).unwrap() == f0,
    ));
    checks.push(Check::exact("star(f0) = f0", f0.star() == f0));
    for nu in [
        rat_int(-1),
        rat(-1, 2),
        rat_int(0),
        rat(1, 2),
        rat_int(1),
        rat_int(2),
    ] {
        let z = named::zeta(&nu);
        let nu_s = rat_display(&nu);
        checks.push(Check::exact(
            format!("zeta({nu_s}) idempotent"),
            z.ring_multiply(&z).unwrap() == z,
        ));
        let absorbs =
            z.ring_multiply(&rho).unwrap() == rho && rho.ring_multiply(&z).unwrap() == z;
        let expect = nu == rat_int(-1);
        checks.push(Check::exact(
            format!("zeta({nu_s})·rho = rho and rho·zeta({nu_s}) = zeta({nu_s}): expect {expect}"),
            absorbs == expect,
        ));
    }
    checks.push(Check::exact(
        "eta·rho ≠ rho",
        eta.ring_multiply(&rho).unwrap() != rho,
    ));
    checks.push(Check::exact(
        "rho·eta ≠ eta",
        rho.ring_multiply(&eta).unwrap() != eta,
    ));
    Section::new("group_algebra", checks)
}

/// Young symmetrizer structure and the two-sided decomposition counts.
pub fn young_section() -> Section {
    let mut checks = Vec::new();
    let y = curvature_tableau().symmetrizer();
    checks.push(Check::count("terms of y_t for the 1,3/2,4 tableau", y.num_terms(), 16));
    checks.push(Check::exact(
        "y_t·y_t = 12·y_t",
        y.ring_multiply(&y).unwrap() == y.scale(&rat_int(12)),
    ));
    let ys = y.star();
    checks.push(Check::exact(
        "y_t*·y_t* = 12·y_t*",
        ys.ring_multiply(&ys).unwrap() == ys.scale(&rat_int(12)),
    ));
    for r in [3usize, 4] {
        let report = verify_ring_decomposition(r);
        checks.push(Check::count(
            format!("translate span rank in Q[S_{r}]"),
            report.span_rank,
            report.factorial as usize,
        ));
    }
    for r in 1..=5usize {
        let factorial: u64 = (1..=r as u64).product();
        let sum: u64 = Partition::all(r)
            .iter()
            .map(|l| {
                let f = standard_tableaux(l).len() as u64;
                f * f
            })
            .sum();
        checks.push(Check::count(
            format!("sum of squared tableau counts at r = {r}"),
            sum as usize,
            factorial as usize,
        ));
    }
    Section::new("young", checks)
}

type LrCase = (&'static [usize], &'static [usize], &'static [&'static [usize]]);

/// The three product expansions and the uniqueness of the [2 2] part.
pub fn lr_section() -> Section {
    let part = |p: &[usize]| Partition::new(p).unwrap();
    let mut checks = Vec::new();

    let cases: [LrCase; 3] = [
        (&[1, 1], &[1], &[&[2, 1], &[1, 1, 1]]),
        (&[2, 1], &[1], &[&[3, 1], &[2, 2], &[2, 1, 1]]),
        (&[1, 1, 1], &[1], &[&[2, 1, 1], &[1, 1, 1, 1]]),
    ];
    for (left, right, expect) in cases {
        let l = part(left);
        let r = part(right);
        let product = lr_product(&l, &r);
        let ok = product.entries().count() == expect.len()
            && expect.iter().all(|nu| product.multiplicity(&part(nu)) == 1);
        checks.push(Check::exact(format_product(&l, &r, &product), ok));
    }
    let two_two = part(&[2, 2]);
    checks.push(Check::exact(
        "[2 2] appears in [2 1][1] only",
        lr_product(&part(&[2, 1]), &part(&[1])).multiplicity(&two_two) == 1
            && lr_product(&part(&[1, 1, 1]), &part(&[1])).multiplicity(&two_two) == 0,
    ));
    Section::new("lr", checks)
}

/// Exact projector ranks and the span experiments.
pub fn curvature_span_section(seed: u64) -> Section {
    let mut checks = Vec::new();
    for (n, expect) in [(2usize, 1usize), (3, 6), (4, 20)] {
        checks.push(Check::count(
            format!("projector rank at n = {n}"),
            acr_dimension(n),
            expect,
        ));
    }
    checks.push(Check::count(
        "gamma span rank (n = 4, 40 samples)",
        span_experiment(4, 40, GeneratorKind::Gamma, sub_seed(seed, "span-gamma")),
        20,
    ));
    checks.push(Check::count(
        "alpha span rank (n = 4, 40 samples)",
        span_experiment(4, 40, GeneratorKind::Alpha, sub_seed(seed, "span-alpha")),
        20,
    ));
    for (nu, expect) in [
        (rat_int(-1), 20usize),
        (rat_int(0), 20),
        (rat_int(2), 20),
        (rat(1, 2), 0),
    ] {
        for (order, tag) in [(ProductOrder::UTimesW, "UxW"), (ProductOrder::WTimesU, "WxU")] {
            let label = format!("thm13-{}-{tag}", rat_display(&nu));
            let rank = zeta_span_experiment(&nu, 60, order, sub_seed(seed, &label));
            checks.push(Check::count(
                format!("product span rank, zeta({}) {tag} (60 samples)", rat_display(&nu)),
                rank,
                expect,
            ));
        }
    }
    Section::new("curvature_span", checks)
}

/// The exact cancellation of the F·τ·τ' block under alternating substitution.
pub fn cancellation_section(seed: u64) -> Section {
    let mut checks = Vec::new();
    for i in 0..20u64 {
        let report = cancellation_experiment(sub_seed(seed, &format!("cancellation-{i}")));
        checks.push(Check::exact(
            format!("alternating substitution cancels exactly, generic does not (run {i})"),
            report.pass,
        ));
    }
    Section::new("cancellation", checks)
}

#[derive(Clone, Debug, Serialize)]
pub struct MetricSection {
    pub metric: String,
    pub point: [f64; 4],
    pub checks: Vec<Check>,
    pub formulas: Vec<FormulaCheck>,
    pub pass: bool,
}

fn push_common_frame_checks(checks: &mut Vec<Check>, frame: &PointFrame, tol: f64) {
    checks.push(Check::below(
        "metric inverse round trip",
        frame.metric_roundtrip_residual(),
        1e-12_f64.max(tol),
    ));
    checks.push(Check::below(
        "tau normalization",
        frame.tau_norm_residual(),
        1e-12_f64.max(tol),
    ));
    checks.push(Check::below(
        "tau_cov tau orthogonality",
        frame.tau_cov_orthogonality_residual(),
        tol,
    ));
    checks.push(Check::below("h identities", frame.h_identities().max(), 1e-12_f64.max(tol)));
    checks.push(Check::below(
        "A decomposition",
        frame.a_decomposition_residual(),
        tol,
    ));
    checks.push(Check::below(
        "Gamma decomposition",
        frame.gamma_decomposition_residual(),
        1e-8_f64.max(tol),
    ));
    checks.push(Check::below(
        "Z tau orthogonality",
        frame.z_orthogonality_residual(),
        tol,
    ));
}

/// The Minkowski baseline: every residual at the flat tolerance.
pub fn minkowski_section(tol: &Tolerances) -> MetricSection {
    let point = [0.0, 1.0, 1.0, 1.0];
    let frame = PointFrame::build(&BuiltinMetric::Minkowski, &point).expect("flat frame");
    let t = tol.minkowski;
    let mut checks = vec![
        Check::below("metric inverse round trip", frame.metric_roundtrip_residual(), t),
        Check::below("tau normalization", frame.tau_norm_residual(), t),
        Check::below("Killing residual", frame.killing_residual(), t),
        Check::below("deformation D", frame.deformation_magnitude(), t),
        Check::below("h identities", frame.h_identities().max(), t),
        Check::below("A decomposition", frame.a_decomposition_residual(), t),
        Check::below("Gamma decomposition", frame.gamma_decomposition_residual(), t),
    ];
    let st = staticity_from_frame(&frame);
    checks.push(Check::exact("is static", st.is_static));
    checks.push(Check::below("alternation", st.tau_alternation, t));
    let formulas: Vec<FormulaCheck> = FormulaId::ALL
        .iter()
        .map(|id| check_formula(&frame, *id, t))
        .collect();
    let pass = checks.iter().all(|c| c.pass) && formulas.iter().all(|f| f.pass);
    MetricSection {
        metric: "minkowski".into(),
        point,
        checks,
        formulas,
        pass,
    }
}

pub fn schwarzschild_section(tol: &Tolerances) -> MetricSection {
    let point = [0.0, 6.0, 1.0, 0.5];
    let metric = BuiltinMetric::Schwarzschild { m: 1.0 };
    let frame = PointFrame::build(&metric, &point).expect("exterior point");
    let mut checks = Vec::new();
    push_common_frame_checks(&mut checks, &frame, tol.field_zero);
    checks.push(Check::below("Killing residual", frame.killing_residual(), tol.field_zero));
    checks.push(Check::below(
        "deformation D",
        frame.deformation_magnitude(),
        tol.field_zero,
    ));
    let st = staticity_from_frame(&frame);
    checks.push(Check::exact("is static", st.is_static));
    checks.push(Check::below("staticity alternation", st.tau_alternation, tol.staticity));
    checks.push(Check::below("xi/tau alternation ratio", st.ratio_residual, tol.ratio));
    let formulas: Vec<FormulaCheck> = FormulaId::ALL
        .iter()
        .map(|id| check_formula(&frame, *id, tol.formula_rel))
        .collect();
    let pass = checks.iter().all(|c| c.pass)
        && formulas.iter().all(|f| f.pass && f.applicable);
    MetricSection {
        metric: "schwarzschild(m=1)".into(),
        point,
        checks,
        formulas,
        pass,
    }
}

pub fn langevin_section(tol: &Tolerances) -> MetricSection {
    let point = [0.0, 2.0, 0.3, 0.1];
    let metric = BuiltinMetric::Langevin { omega: 0.1 };
    let frame = PointFrame::build(&metric, &point).expect("inside the light cylinder");
    let mut checks = Vec::new();
    push_common_frame_checks(&mut checks, &frame, tol.field_zero);
    checks.push(Check::below("Killing residual", frame.killing_residual(), tol.field_zero));
    checks.push(Check::below(
        "deformation D",
        frame.deformation_magnitude(),
        tol.field_zero,
    ));
    checks.push(Check::below(
        "Riemann-flat",
        tensym::frame::max_abs4(&frame.r_dn),
        1e-12,
    ));
    let st = staticity_from_frame(&frame);
    checks.push(Check::exact("is static = false", !st.is_static));
    checks.push(Check::above(
        "non-staticity witness |alternation|",
        st.tau_alternation,
        tol.langevin_alternation_floor,
    ));
    // frozen regression value 5/72 for this point and omega
    checks.push(Check::below(
        "alternation matches frozen value 5/72",
        (st.tau_alternation - 5.0 / 72.0).abs(),
        1e-12,
    ));
    checks.push(Check::below("xi/tau alternation ratio", st.ratio_residual, tol.ratio));
    let formulas: Vec<FormulaCheck> = FormulaId::ALL
        .iter()
        .map(|id| check_formula(&frame, *id, tol.formula_rel))
        .collect();
    let mut checks_pairs = vec![
        (FormulaId::Expanded15, FormulaId::ThetaForm118),
        (FormulaId::Expanded15, FormulaId::Reduced120),
        (FormulaId::ThetaForm118, FormulaId::Reduced120),
    ];
    for (a, b) in checks_pairs.drain(..) {
        checks.push(Check::below(
            format!("rhs({}) agrees with rhs({})", a.name(), b.name()),
            pairwise_rhs_residual(&frame, a, b),
            tol.formula_rel,
        ));
    }
    let pass = checks.iter().all(|c| c.pass)
        && formulas.iter().all(|f| f.pass && f.applicable);
    MetricSection {
        metric: "langevin(omega=0.1)".into(),
        point,
        checks,
        formulas,
        pass,
    }
}

pub fn flrw_section(tol: &Tolerances) -> MetricSection {
    let point = [2.0, 0.3, 0.4, 0.5];
    let metric = BuiltinMetric::Flrw;
    let frame = PointFrame::build(&metric, &point).expect("t > 0");
    let mut checks = Vec::new();
    push_common_frame_checks(&mut checks, &frame, tol.field_zero);
    let sync = synchronized_reduction_check(&metric, &point).expect("synchronized chart");
    checks.push(Check::below("F vanishes", sync.accel_max, tol.field_zero));
    checks.push(Check::below("A vanishes", sync.rotation_max, tol.field_zero));
    checks.push(Check::below(
        "reduced projection identity",
        sync.reduced_formula_residual,
        tol.sync_reduced,
    ));
    let formulas = vec![check_formula(&frame, FormulaId::Projection230, tol.formula_rel)];
    let pass = checks.iter().all(|c| c.pass) && formulas.iter().all(|f| f.pass);
    MetricSection {
        metric: "flrw".into(),
        point,
        checks,
        formulas,
        pass,
    }
}

/// The θ suite on the stationary non-static example.
pub fn theta_section(tol: &Tolerances) -> Section {
    let frame = PointFrame::build(&BuiltinMetric::Langevin { omega: 0.1 }, &[0.0, 2.0, 0.3, 0.1])
        .expect("frame");
    let mut checks = Vec::new();
    let residuals = theta_identity_residuals(&frame.theta);
    for (i, r) in residuals.iter().enumerate() {
        checks.push(Check::below(
            format!("theta symmetry identity {}", i + 1),
            *r,
            tol.theta_identity,
        ));
    }
    checks.push(Check::below(
        "zeta(-1) class membership of theta",
        theta_class_residual(&frame),
        tol.theta_class,
    ));
    checks.push(Check::below(
        "F·theta wing equals half the starred-symmetrizer image of theta⊗F",
        theta_wing_residual(&frame),
        tol.theta_wing,
    ));
    Section::new("theta", checks)
}

/// The full verdict document.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDoc {
    pub seed: u64,
    pub tolerances: Tolerances,
    pub group_algebra: Section,
    pub young: Section,
    pub lr: Section,
    pub curvature_span: Section,
    pub cancellation: Section,
    pub geometry: Vec<MetricSection>,
    pub theta: Section,
    pub pass: bool,
}

pub fn build_report(config: &RunConfig) -> ReportDoc {
    let group_algebra = group_algebra_section();
    let young = young_section();
    let lr = lr_section();
    let curvature_span = curvature_span_section(config.seed);
    let cancellation = cancellation_section(config.seed);
    let geometry = vec![
        minkowski_section(&config.tolerances),
        schwarzschild_section(&config.tolerances),
        langevin_section(&config.tolerances),
        flrw_section(&config.tolerances),
    ];
    let theta = theta_section(&config.tolerances);
    let pass = group_algebra.pass
        && young.pass
        && lr.pass
        && curvature_span.pass
        && cancellation.pass
        && geometry.iter().all(|s| s.pass)
        && theta.pass;
    ReportDoc {
        seed: config.seed,
        tolerances: config.tolerances.clone(),
        group_algebra,
        young,
        lr,
        curvature_span,
        cancellation,
        geometry,
        theta,
        pass,
    }
}
