//! Argument parsing and subcommand dispatch.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use tensym::curvature::{acr_dimension, span_experiment, zeta_span_experiment, GeneratorKind, ProductOrder};
use tensym::formulas::{check_formula, format_term, synchronized_reduction_check, term_magnitudes, FormulaId};
use tensym::frame::{staticity_from_frame, PointFrame};
use tensym::group_ring::named;
use tensym::lr::{format_product, lr_product};
use tensym::metric::{BuiltinMetric, MetricProvider};
use tensym::rational::{parse_rational, rat, rat_display, rat_int};
use tensym::rng::sub_seed;
use tensym::young::{standard_tableaux, verify_ring_decomposition, Partition, YoungTableau};

use crate::config::{resolve_config, ConfigFile, RunConfig, SEED_ENV_VAR};
use crate::sections::{self, build_report, Check};
use crate::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "tensym",
    version,
    about = "Exact symmetry-operator algebra and stationary space-time curvature verification",
    after_help = format!(
        "The master seed for randomized experiments resolves in order: --seed, the config \
         file, the {SEED_ENV_VAR} environment variable, then the default 42. Identical \
         configurations produce byte-identical output."
    )
)]
pub struct Cli {
    /// Master seed for randomized experiments
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// JSON config file merged underneath explicit flags
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Tolerance override, repeatable (e.g. --tol formula_rel=1e-6)
    #[arg(long = "tol", global = true, value_name = "NAME=VALUE")]
    pub tol: Vec<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Littlewood-Richardson product of two partitions
    Lr {
        /// Left partition, e.g. 2,1
        #[arg(long)]
        left: String,
        /// Right partition, e.g. 1
        #[arg(long)]
        right: String,
    },
    /// Young symmetrizer of a tableau given as rows "1,3;2,4"
    Symmetrizer {
        #[arg(long)]
        tableau: String,
    },
    /// Relation table of the named idempotents (optionally at a single ν)
    Idempotents {
        /// A rational ν like -1 or 1/2; omit to run the standard set
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
    },
    /// Span-rank experiments for curvature generators
    Span {
        #[arg(long, value_enum)]
        generator: GeneratorArg,
        /// ν for the thm13 generator family
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long, default_value_t = 4)]
        dim: usize,
        /// Sample count; defaults to 3× the target dimension
        #[arg(long)]
        samples: Option<usize>,
        /// Tensor factor order for thm13: uw = U⊗w, wu = w⊗U
        #[arg(long, value_enum, default_value = "uw")]
        order: OrderArg,
    },
    /// Curvature-formula verification on a metric at a point
    Verify {
        #[arg(long)]
        metric: Option<String>,
        /// Metric parameter, repeatable (e.g. --param m=1)
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
        /// Evaluation point t,x1,x2,x3
        #[arg(long)]
        point: Option<String>,
        /// Comma-separated formulas (default 2.30,3.5,1.5,1.18,1.20)
        #[arg(long)]
        formulas: Option<String>,
        /// Print per-term magnitudes of each formula's expansion
        #[arg(long)]
        terms: bool,
    },
    /// Group-ring decomposition check for S_r
    Decompose {
        #[arg(long)]
        degree: usize,
    },
    /// Run every suite and emit the JSON verdict document
    Report,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GeneratorArg {
    Gamma,
    Alpha,
    Thm13,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderArg {
    /// U ⊗ w
    Uw,
    /// w ⊗ U
    Wu,
}

pub struct Outcome {
    pub text: String,
    pub json: serde_json::Value,
    pub pass: bool,
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad integer '{p}' in '{s}'")))
        })
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    Partition::new(&parse_usize_list(s)?)
        .map_err(|e| CliError::Usage(format!("bad partition '{s}': {e}")))
}

fn parse_point(s: &str) -> Result<[f64; 4], CliError> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("bad coordinate '{p}' in '{s}'")))
        })
        .collect::<Result<_, _>>()?;
    let arr: [f64; 4] = parts
        .try_into()
        .map_err(|_| CliError::Usage(format!("point '{s}' must have 4 coordinates")))?;
    Ok(arr)
}

fn parse_kv_f64(items: &[String]) -> Result<BTreeMap<String, f64>, CliError> {
    let mut out = BTreeMap::new();
    for item in items {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected NAME=VALUE, got '{item}'")))?;
        let value: f64 = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad number in '{item}'")))?;
        out.insert(k.trim().to_string(), value);
    }
    Ok(out)
}

fn render_checks(label: &str, checks: &[Check]) -> String {
    let mut out = String::new();
    out.push_str(label);
    out.push('\n');
    for c in checks {
        let status = if c.pass { "pass" } else { "FAIL" };
        match (c.value, c.threshold) {
            (Some(v), Some(t)) => {
                out.push_str(&format!("  [{status}] {}: {v:.3e} (threshold {t:.1e})\n", c.name))
            }
            _ => out.push_str(&format!("  [{status}] {}\n", c.name)),
        }
    }
    out
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let file = match &cli.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let tol_flags: Vec<(String, f64)> = parse_kv_f64(&cli.tol)?
        .into_iter()
        .collect();
    let config = resolve_config(cli.seed, &file, &tol_flags)?;

    match &cli.command {
        Command::Lr { left, right } => cmd_lr(left, right),
        Command::Symmetrizer { tableau } => cmd_symmetrizer(tableau),
        Command::Idempotents { nu } => cmd_idempotents(nu.as_deref()),
        Command::Span {
            generator,
            nu,
            dim,
            samples,
            order,
        } => cmd_span(&config, *generator, nu.as_deref(), *dim, *samples, *order),
        Command::Verify {
            metric,
            params,
            point,
            formulas,
            terms,
        } => cmd_verify(&config, &file, metric.as_deref(), params, point.as_deref(), formulas.as_deref(), *terms),
        Command::Decompose { degree } => cmd_decompose(*degree),
        Command::Report => cmd_report(&config),
    }
}

fn cmd_lr(left: &str, right: &str) -> Result<Outcome, CliError> {
    let l = parse_partition(left)?;
    let r = parse_partition(right)?;
    let product = lr_product(&l, &r);
    let display = format_product(&l, &r, &product);
    Ok(Outcome {
        json: json!({
            "left": l,
            "right": r,
            "display": display,
            "product": product,
        }),
        text: display,
        pass: true,
    })
}

fn cmd_symmetrizer(tableau: &str) -> Result<Outcome, CliError> {
    let rows: Vec<Vec<usize>> = tableau
        .split(';')
        .map(parse_usize_list)
        .collect::<Result<_, _>>()?;
    let t = YoungTableau::new(rows)
        .map_err(|e| CliError::Usage(format!("bad tableau '{tableau}': {e}")))?;
    let y = t.symmetrizer();
    let r = t.degree();
    let factorial: u64 = (1..=r as u64).product();
    let f_count = standard_tableaux(t.frame()).len() as u64;
    let mu = rat(factorial as i64, f_count as i64);
    let essential = y.ring_multiply(&y).map_err(|e| CliError::Usage(e.to_string()))?
        == y.scale(&mu);
    let text = format!(
        "tableau ({t}), frame {}\ny_t = {y}\nterms: {}\ny_t·y_t = {}·y_t: {}",
        t.frame(),
        y.num_terms(),
        rat_display(&mu),
        if essential { "pass" } else { "FAIL" }
    );
    Ok(Outcome {
        json: json!({
            "tableau": t,
            "frame": t.frame(),
            "symmetrizer": y,
            "num_terms": y.num_terms(),
            "essential_idempotency_factor": rat_display(&mu),
            "pass": essential,
        }),
        text,
        pass: essential,
    })
}

fn cmd_idempotents(nu: Option<&str>) -> Result<Outcome, CliError> {
    let section = match nu {
        None => sections::group_algebra_section(),
        Some(nu_text) => {
            let nu = parse_rational(nu_text)
                .map_err(|e| CliError::Usage(format!("bad ν '{nu_text}': {e}")))?;
            let z = named::zeta(&nu);
            let rho = named::rho();
            let nu_s = rat_display(&nu);
            let mut checks = Vec::new();
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
            sections::Section::new("group_algebra", checks)
        }
    };
    let pass = section.pass;
    Ok(Outcome {
        text: render_checks("idempotent relations", &section.checks),
        json: serde_json::to_value(&section).expect("serializable"),
        pass,
    })
}

fn cmd_span(
    config: &RunConfig,
    generator: GeneratorArg,
    nu: Option<&str>,
    dim: usize,
    samples: Option<usize>,
    order: OrderArg,
) -> Result<Outcome, CliError> {
    #[derive(Serialize)]
    struct SpanOut {
        generator: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        nu: Option<String>,
        dim: usize,
        samples: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        order: Option<String>,
        seed: u64,
        rank: usize,
        target: usize,
        pass: bool,
    }

    let out = match generator {
        GeneratorArg::Gamma | GeneratorArg::Alpha => {
            if !(2..=4).contains(&dim) {
                return Err(CliError::Usage(format!(
                    "span experiments support 2 ≤ dim ≤ 4, got {dim}"
                )));
            }
            let target = acr_dimension(dim);
            let samples = samples.unwrap_or(3 * target);
            let (kind, label) = match generator {
                GeneratorArg::Gamma => (GeneratorKind::Gamma, "span-gamma"),
                GeneratorArg::Alpha => (GeneratorKind::Alpha, "span-alpha"),
                GeneratorArg::Thm13 => unreachable!(),
            };
            let rank = span_experiment(dim, samples, kind, sub_seed(config.seed, label));
            SpanOut {
                generator: format!("{kind:?}").to_lowercase(),
                nu: None,
                dim,
                samples,
                order: None,
                seed: config.seed,
                rank,
                target,
                pass: rank == target,
            }
        }
        GeneratorArg::Thm13 => {
            if dim != 4 {
                return Err(CliError::Usage(
                    "the thm13 experiment is defined over dim 4".into(),
                ));
            }
            let nu_text = nu.ok_or_else(|| {
                CliError::Usage("--nu is required for --generator thm13".into())
            })?;
            let nu = parse_rational(nu_text)
                .map_err(|e| CliError::Usage(format!("bad ν '{nu_text}': {e}")))?;
            // the ideal of ζ_{1/2} is the excluded one; its generators vanish
            let target = if nu == rat(1, 2) { 0 } else { 20 };
            let samples = samples.unwrap_or(60);
            let (order_enum, tag) = match order {
                OrderArg::Uw => (ProductOrder::UTimesW, "UxW"),
                OrderArg::Wu => (ProductOrder::WTimesU, "WxU"),
            };
            let label = format!("thm13-{}-{tag}", rat_display(&nu));
            let rank = zeta_span_experiment(&nu, samples, order_enum, sub_seed(config.seed, &label));
            SpanOut {
                generator: "thm13".into(),
                nu: Some(rat_display(&nu)),
                dim,
                samples,
                order: Some(tag.into()),
                seed: config.seed,
                rank,
                target,
                pass: rank == target,
            }
        }
    };
    let text = format!(
        "generator {}{} dim {} samples {}: rank {} (target {}) — {}",
        out.generator,
        out.nu.as_deref().map(|n| format!("(ν={n})")).unwrap_or_default(),
        out.dim,
        out.samples,
        out.rank,
        out.target,
        if out.pass { "pass" } else { "FAIL" }
    );
    let pass = out.pass;
    Ok(Outcome {
        json: serde_json::to_value(&out).expect("serializable"),
        text,
        pass,
    })
}

fn cmd_verify(
    config: &RunConfig,
    file: &ConfigFile,
    metric: Option<&str>,
    params: &[String],
    point: Option<&str>,
    formulas: Option<&str>,
    terms: bool,
) -> Result<Outcome, CliError> {
    let metric_name = metric
        .map(str::to_string)
        .or_else(|| file.metric.clone())
        .ok_or_else(|| CliError::Usage("--metric is required (or set it in the config file)".into()))?;
    let mut param_map = file.params.clone();
    param_map.extend(parse_kv_f64(params)?);
    let metric = BuiltinMetric::from_name(&metric_name, &param_map)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let point = match point {
        Some(s) => parse_point(s)?,
        None => file.point.unwrap_or_else(|| metric.default_point()),
    };
    let formula_ids: Vec<FormulaId> = match formulas {
        None => FormulaId::ALL.to_vec(),
        Some(list) => list
            .split(',')
            .map(|s| {
                FormulaId::parse(s.trim())
                    .ok_or_else(|| CliError::Usage(format!("unknown formula '{s}'")))
            })
            .collect::<Result<_, _>>()?,
    };

    let frame = PointFrame::build(&metric, &point).map_err(CliError::Geometry)?;
    let tol = &config.tolerances;

    let mut checks = Vec::new();
    checks.push(Check::below(
        "metric inverse round trip",
        frame.metric_roundtrip_residual(),
        1e-12,
    ));
    checks.push(Check::below("tau normalization", frame.tau_norm_residual(), 1e-12));
    checks.push(Check::below("h identities", frame.h_identities().max(), 1e-12));
    if metric.is_stationary() {
        checks.push(Check::below("Killing residual", frame.killing_residual(), tol.field_zero));
        checks.push(Check::below(
            "deformation D",
            frame.deformation_magnitude(),
            tol.field_zero,
        ));
    }
    let staticity = metric.is_stationary().then(|| staticity_from_frame(&frame));
    let sync = synchronized_reduction_check(&metric, &point).ok();

    let formula_checks: Vec<_> = formula_ids
        .iter()
        .map(|id| check_formula(&frame, *id, tol.formula_rel))
        .collect();

    let mut text = format!("{} at ({}, {}, {}, {})\n", metric, point[0], point[1], point[2], point[3]);
    text.push_str(&render_checks("invariants", &checks));
    if let Some(st) = &staticity {
        text.push_str(&format!(
            "staticity: is_static={} |tau alternation|={:.6e} ratio residual={:.3e}\n",
            st.is_static, st.tau_alternation, st.ratio_residual
        ));
    }
    if let Some(sy) = &sync {
        text.push_str(&format!(
            "synchronized chart: |F|={:.3e} |A|={:.3e} reduced identity residual={:.3e}\n",
            sy.accel_max, sy.rotation_max, sy.reduced_formula_residual
        ));
    }
    text.push_str("formulas\n");
    for f in &formula_checks {
        let status = if !f.applicable {
            "skip"
        } else if f.pass {
            "pass"
        } else {
            "FAIL"
        };
        if f.applicable {
            text.push_str(&format!(
                "  [{status}] {}: residual {:.3e} (tolerance {:.1e})\n",
                f.formula, f.residual_rel, f.tolerance
            ));
        } else {
            text.push_str(&format!(
                "  [{status}] {}: {}\n",
                f.formula,
                f.note.as_deref().unwrap_or("not applicable")
            ));
        }
    }
    if terms {
        for id in &formula_ids {
            text.push_str(&format!("terms of {}\n", id.name()));
            let mags = term_magnitudes(&frame, id.terms());
            for (term, mag) in id.terms().iter().zip(mags) {
                text.push_str(&format!("  {:<40} max |contribution| = {mag:.6e}\n", format_term(term)));
            }
        }
    }

    let pass = checks.iter().all(|c| c.pass) && formula_checks.iter().all(|f| f.pass);
    Ok(Outcome {
        json: json!({
            "metric": metric.to_string(),
            "point": point,
            "checks": checks,
            "staticity": staticity,
            "synchronized": sync,
            "formulas": formula_checks,
            "pass": pass,
        }),
        text,
        pass,
    })
}

fn cmd_decompose(degree: usize) -> Result<Outcome, CliError> {
    if !(1..=5).contains(&degree) {
        return Err(CliError::Usage(format!(
            "decomposition check supports 1 ≤ degree ≤ 5, got {degree}"
        )));
    }
    let report = verify_ring_decomposition(degree);
    let pass = report.square_sum_matches && report.span_rank_matches;
    let mut text = format!(
        "Q[S_{}]: sum of squared standard-tableau counts = {} (expect {}), translate span rank = {} — {}\n",
        report.degree,
        report.square_sum,
        report.factorial,
        report.span_rank,
        if pass { "pass" } else { "FAIL" }
    );
    for (lambda, count) in &report.tableau_counts {
        text.push_str(&format!("  {lambda}: {count} standard tableaux\n"));
    }
    Ok(Outcome {
        json: serde_json::to_value(&report).expect("serializable"),
        text,
        pass,
    })
}

fn cmd_report(config: &RunConfig) -> Result<Outcome, CliError> {
    let report = build_report(config);
    let pass = report.pass;
    let json = serde_json::to_value(&report).expect("serializable");
    // the verdict document *is* the output, in both modes
    let text = serde_json::to_string_pretty(&report).expect("serializable");
    Ok(Outcome { json, text, pass })
}
