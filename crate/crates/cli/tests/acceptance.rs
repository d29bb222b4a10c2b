//! Acceptance suite: every verdict criterion as one test, each printing a
//! single pass/fail line (visible with `--nocapture`). The thresholds here
//! are the contract — they are pinned, not tunable.

use std::time::{Duration, Instant};

use tensym::curvature::{
    acr_dimension, span_experiment, zeta_span_experiment, GeneratorKind, ProductOrder,
};
use tensym::formulas::{
    cancellation_experiment, check_formula, pairwise_rhs_residual, synchronized_reduction_check,
    theta_class_residual, theta_identity_residuals, theta_wing_residual, FormulaId,
};
use tensym::frame::{staticity_from_frame, PointFrame};
use tensym::group_ring::named;
use tensym::lr::lr_product;
use tensym::metric::BuiltinMetric;
use tensym::rational::{rat, rat_int};
use tensym::rng::sub_seed;
use tensym::young::{curvature_tableau, standard_tableaux, verify_ring_decomposition, Partition};

use tensym_cli::{build_report, RunConfig};

struct Criterion {
    name: &'static str,
    budget: Duration,
    started: Instant,
    failures: Vec<String>,
}

impl Criterion {
    fn new(name: &'static str, budget_secs: u64) -> Criterion {
        Criterion {
            name,
            budget: Duration::from_secs(budget_secs),
            started: Instant::now(),
            failures: Vec::new(),
        }
    }

    fn check(&mut self, label: &str, ok: bool) {
        if !ok {
            self.failures.push(label.to_string());
        }
    }

    fn check_le(&mut self, label: &str, value: f64, bound: f64) {
        if value.is_nan() || value > bound {
            self.failures.push(format!("{label}: {value:.3e} > {bound:.1e}"));
        }
    }

    fn finish(self) {
        let elapsed = self.started.elapsed();
        let in_budget = elapsed <= self.budget;
        let verdict = if self.failures.is_empty() && in_budget {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "criterion {}: {verdict} ({} checks failed, {:.2?} of {:.0?} budget)",
            self.name,
            self.failures.len(),
            elapsed,
            self.budget
        );
        assert!(
            self.failures.is_empty(),
            "{} failed: {:?}",
            self.name,
            self.failures
        );
        assert!(
            in_budget,
            "{} exceeded its {:?} budget: {:?}",
            self.name, self.budget, elapsed
        );
    }
}

#[test]
fn criterion_1_group_algebra_exact_suite() {
    let mut c = Criterion::new("1 (group algebra exact suite)", 1);
    let rho = named::rho();
    let eta = named::eta();
    c.check("rho·rho = rho", rho.ring_multiply(&rho).unwrap() == rho);
    c.check("eta·eta = eta", eta.ring_multiply(&eta).unwrap() == eta);
    for nu in [rat_int(-1), rat(-1, 2), rat_int(0), rat(1, 2), rat_int(1), rat_int(2)] {
        let z = named::zeta(&nu);
        c.check(
            &format!("zeta({nu}) idempotent"),
            z.ring_multiply(&z).unwrap() == z,
        );
        let absorbs =
            z.ring_multiply(&rho).unwrap() == rho && rho.ring_multiply(&z).unwrap() == z;
        c.check(
            &format!("absorption iff nu = -1 (nu = {nu})"),
            absorbs == (nu == rat_int(-1)),
        );
    }
    c.check("eta·rho ≠ rho", eta.ring_multiply(&rho).unwrap() != rho);
    c.finish();
}

#[test]
fn criterion_2_young_symmetrizer_suite() {
    let mut c = Criterion::new("2 (Young symmetrizer suite)", 1);
    let y = curvature_tableau().symmetrizer();
    c.check("y_t has 16 terms", y.num_terms() == 16);
    c.check(
        "y_t·y_t = 12·y_t exactly",
        y.ring_multiply(&y).unwrap() == y.scale(&rat_int(12)),
    );
    for r in [3usize, 4] {
        let report = verify_ring_decomposition(r);
        c.check(
            &format!("translate span rank = {r}! "),
            report.span_rank_matches,
        );
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
        c.check(&format!("sum f^2 = {r}!"), sum == factorial);
    }
    c.finish();
}

#[test]
fn criterion_3_lr_suite() {
    let mut c = Criterion::new("3 (Littlewood-Richardson suite)", 1);
    let part = |p: &[usize]| Partition::new(p).unwrap();
    let p1 = lr_product(&part(&[1, 1]), &part(&[1]));
    c.check(
        "[1 1][1] = [2 1] + [1 1 1]",
        p1.entries().count() == 2
            && p1.multiplicity(&part(&[2, 1])) == 1
            && p1.multiplicity(&part(&[1, 1, 1])) == 1,
    );
    let p2 = lr_product(&part(&[2, 1]), &part(&[1]));
    c.check(
        "[2 1][1] = [3 1] + [2 2] + [2 1 1]",
        p2.entries().count() == 3
            && p2.multiplicity(&part(&[3, 1])) == 1
            && p2.multiplicity(&part(&[2, 2])) == 1
            && p2.multiplicity(&part(&[2, 1, 1])) == 1,
    );
    let p3 = lr_product(&part(&[1, 1, 1]), &part(&[1]));
    c.check(
        "[1 1 1][1] = [2 1 1] + [1 1 1 1]",
        p3.entries().count() == 2
            && p3.multiplicity(&part(&[2, 1, 1])) == 1
            && p3.multiplicity(&part(&[1, 1, 1, 1])) == 1,
    );
    c.check(
        "[2 2] appears only in [2 1][1]",
        p2.multiplicity(&part(&[2, 2])) == 1 && p3.multiplicity(&part(&[2, 2])) == 0,
    );
    c.finish();
}

#[test]
fn criterion_4_curvature_generator_suite() {
    let mut c = Criterion::new("4 (curvature generator suite)", 60);
    let seed = 42;
    for (n, expect) in [(2usize, 1usize), (3, 6), (4, 20)] {
        c.check(
            &format!("acr_dimension({n}) = {expect}"),
            acr_dimension(n) == expect,
        );
    }
    c.check(
        "gamma span rank = 20",
        span_experiment(4, 40, GeneratorKind::Gamma, sub_seed(seed, "span-gamma")) == 20,
    );
    c.check(
        "alpha span rank = 20",
        span_experiment(4, 40, GeneratorKind::Alpha, sub_seed(seed, "span-alpha")) == 20,
    );
    for nu in [rat_int(-1), rat_int(0), rat_int(2)] {
        for order in [ProductOrder::UTimesW, ProductOrder::WTimesU] {
            let rank = zeta_span_experiment(&nu, 60, order, sub_seed(seed, "thm13"));
            c.check(&format!("thm13 rank = 20 at nu = {nu} ({order:?})"), rank == 20);
        }
    }
    for order in [ProductOrder::UTimesW, ProductOrder::WTimesU] {
        let rank = zeta_span_experiment(&rat(1, 2), 60, order, sub_seed(seed, "thm13"));
        c.check(
            &format!("thm13 rank < 20 at nu = 1/2 ({order:?})"),
            rank < 20,
        );
        // regression: the excluded ideal annihilates outright
        c.check(&format!("frozen deficient rank = 0 ({order:?})"), rank == 0);
    }
    c.finish();
}

#[test]
fn criterion_5_cancellation() {
    let mut c = Criterion::new("5 (exact cancellation)", 1);
    for seed in 0..20u64 {
        let report = cancellation_experiment(seed);
        c.check(
            &format!("alternating input cancels exactly (seed {seed})"),
            report.alternating_sum_is_zero,
        );
        c.check(
            &format!("generic input does not cancel (seed {seed})"),
            !report.generic_sum_is_zero,
        );
    }
    c.finish();
}

#[test]
fn criterion_6_geometry_suite() {
    let mut c = Criterion::new("6 (geometry suite)", 10);

    // Schwarzschild, m = 1 at (t, r, θ, φ) = (0, 6, 1.0, 0.5)
    let schw = BuiltinMetric::Schwarzschild { m: 1.0 };
    let frame = PointFrame::build(&schw, &[0.0, 6.0, 1.0, 0.5]).unwrap();
    c.check_le("schwarzschild Killing residual", frame.killing_residual(), 1e-10);
    c.check_le("schwarzschild D residual", frame.deformation_magnitude(), 1e-10);
    let st = staticity_from_frame(&frame);
    c.check("schwarzschild is static", st.is_static);
    c.check_le("schwarzschild staticity residual", st.tau_alternation, 1e-10);
    for id in FormulaId::ALL {
        let f = check_formula(&frame, id, 1e-7);
        c.check(&format!("schwarzschild formula {} applicable", f.formula), f.applicable);
        if f.applicable {
            c.check_le(
                &format!("schwarzschild formula {} residual", f.formula),
                f.residual_rel,
                1e-7,
            );
        }
    }

    // Langevin, ω = 0.1 at ρ = 2
    let lang = BuiltinMetric::Langevin { omega: 0.1 };
    let lframe = PointFrame::build(&lang, &[0.0, 2.0, 0.3, 0.1]).unwrap();
    let lst = staticity_from_frame(&lframe);
    c.check("langevin is not static", !lst.is_static);
    c.check(
        "langevin alternation exceeds 1e-3",
        lst.tau_alternation > 1e-3,
    );
    c.check_le("langevin ratio check", lst.ratio_residual, 1e-10);
    for (a, b) in [
        (FormulaId::Expanded15, FormulaId::ThetaForm118),
        (FormulaId::Expanded15, FormulaId::Reduced120),
        (FormulaId::ThetaForm118, FormulaId::Reduced120),
    ] {
        c.check_le(
            &format!("langevin rhs({}) vs rhs({})", a.name(), b.name()),
            pairwise_rhs_residual(&lframe, a, b),
            1e-7,
        );
    }

    // FLRW synchronized chart
    let sync = synchronized_reduction_check(&BuiltinMetric::Flrw, &[2.0, 0.3, 0.4, 0.5]).unwrap();
    c.check_le("flrw F residual", sync.accel_max, 1e-10);
    c.check_le("flrw A residual", sync.rotation_max, 1e-10);
    c.check_le("flrw reduced identity residual", sync.reduced_formula_residual, 1e-7);

    // Minkowski: everything at 1e-14
    let mink = PointFrame::build(&BuiltinMetric::Minkowski, &[0.0, 1.0, 1.0, 1.0]).unwrap();
    c.check_le("minkowski metric round trip", mink.metric_roundtrip_residual(), 1e-14);
    c.check_le("minkowski Killing residual", mink.killing_residual(), 1e-14);
    c.check_le("minkowski D residual", mink.deformation_magnitude(), 1e-14);
    c.check_le("minkowski h identities", mink.h_identities().max(), 1e-14);
    for id in FormulaId::ALL {
        let f = check_formula(&mink, id, 1e-14);
        c.check(
            &format!("minkowski formula {} residual = 0", f.formula),
            f.applicable && f.pass,
        );
    }
    c.finish();
}

#[test]
fn criterion_7_theta_suite() {
    let mut c = Criterion::new("7 (theta suite)", 5);
    let frame =
        PointFrame::build(&BuiltinMetric::Langevin { omega: 0.1 }, &[0.0, 2.0, 0.3, 0.1]).unwrap();
    let residuals = theta_identity_residuals(&frame.theta);
    for (i, r) in residuals.iter().enumerate() {
        c.check_le(&format!("theta identity {}", i + 1), *r, 1e-12);
    }
    c.check_le("zeta(-1) membership of theta", theta_class_residual(&frame), 1e-10);
    c.check_le(
        "F·theta wing equals half the starred-symmetrizer image",
        theta_wing_residual(&frame),
        1e-9,
    );
    c.finish();
}

#[test]
fn criterion_8_report_determinism() {
    let mut c = Criterion::new("8 (report determinism)", 60);
    let config = RunConfig {
        seed: 42,
        ..RunConfig::default()
    };
    let first = serde_json::to_string_pretty(&build_report(&config)).unwrap();
    let second = serde_json::to_string_pretty(&build_report(&config)).unwrap();
    c.check("identical seed gives byte-identical JSON", first == second);
    c.check("the verdict passes", build_report(&config).pass);
    c.finish();
}
