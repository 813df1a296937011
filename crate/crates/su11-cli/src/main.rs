//! Command-line front door: decompositions, Haar audits, representation
//! checks, Hopf verification, spherical transforms, and the verification
//! suites.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

use su11::decomp::{cartan, iwasawa, recompose_cartan, recompose_iwasawa, Factors};
use su11::group::GroupElement;
use su11::rep::{
    apply_dv, apply_v, finite_difference_dv, sx_generator, sy_generator, Direction,
    FourierFunction, HalfSpin, RepParams,
};
use su11::spherical::{
    abel_transform, kangni_transform, verify_translation_property, RadialProfile, TransformParams,
    TypeChiFunction,
};

use su11_cli::config::Config;
use su11_cli::input::{self, parse_complex, parse_group_element, FourierFile};
use su11_cli::suites;

/// Exit codes: 0 = pass, 1 = check failure, 2 = input error,
/// 3 = numerical-residual error.
const EXIT_CHECK_FAILURE: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_RESIDUAL_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "su11",
    version,
    about = "Harmonic analysis on SU(1,1): decompositions, invariant integration, boundary representations, exact Hopf checks, spherical transforms",
    after_help = "Exit codes: 0 pass, 1 check-failure, 2 input error, 3 numerical-residual error."
)]
struct Cli {
    /// Flat JSON configuration file; flags override file values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Seed for every randomized check.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Emit machine-readable JSON (the default; present for symmetry).
    #[arg(long, global = true)]
    json: bool,

    /// Emit CSV for tabular outputs.
    #[arg(long, global = true)]
    csv: bool,

    /// Omit the timestamp field from reports (for byte-exact comparison).
    #[arg(long, global = true)]
    no_timestamp: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a group element into Iwasawa or Cartan coordinates.
    Decompose {
        /// 2, 4, or 8 comma-separated reals (see README for the formats).
        matrix: String,
        #[arg(long, value_enum, default_value = "iwasawa")]
        form: FormArg,
        /// Input-validation and residual tolerance.
        #[arg(long, default_value_t = 1e-3)]
        tolerance: f64,
    },
    /// Audit left-invariance of the Haar integration.
    HaarCheck {
        /// Optional translation element as "theta,t,xi" (k d n coordinates);
        /// the default runs the standard five-element set.
        #[arg(long, allow_hyphen_values = true)]
        g0: Option<String>,
    },
    /// Boundary-representation operations.
    Rep {
        #[command(subcommand)]
        command: RepCommand,
    },
    /// Exact Hopf-structure verification.
    Hopf {
        #[command(subcommand)]
        command: HopfCommand,
    },
    /// Spherical Fourier transforms of type chi_n.
    Transform {
        #[command(subcommand)]
        command: TransformCommand,
    },
    /// Run a verification suite and emit its report.
    Suite {
        #[arg(value_enum)]
        name: SuiteName,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Iwasawa,
    Cartan,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Haar,
    Rep,
    Hopf,
    Transform,
    All,
}

impl SuiteName {
    fn as_str(self) -> &'static str {
        match self {
            SuiteName::Haar => "haar",
            SuiteName::Rep => "rep",
            SuiteName::Hopf => "hopf",
            SuiteName::Transform => "transform",
            SuiteName::All => "all",
        }
    }
}

#[derive(Args)]
struct RepParamsArgs {
    /// Compact weight: 0 or half.
    #[arg(long, default_value = "half")]
    j: JArg,
    /// Representation parameter s as "re" or "re,im".
    #[arg(long, default_value = "0.5", allow_hyphen_values = true)]
    s: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum JArg {
    #[value(name = "0")]
    Zero,
    Half,
}

impl RepParamsArgs {
    fn build(&self) -> Result<RepParams> {
        let j = match self.j {
            JArg::Zero => HalfSpin::Zero,
            JArg::Half => HalfSpin::Half,
        };
        Ok(RepParams::new(j, parse_complex(&self.s)?))
    }
}

#[derive(Subcommand)]
enum RepCommand {
    /// Apply the boundary operator V_g to a coefficient vector.
    Apply {
        #[command(flatten)]
        params: RepParamsArgs,
        /// Group element (same formats as `decompose`).
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Input coefficients JSON file ("-" for stdin).
        #[arg(long)]
        input: String,
        /// Output truncation order (defaults to the input order).
        #[arg(long)]
        p_out: Option<i64>,
    },
    /// Tabulate the ladder coefficients s +- (p + j).
    LadderTable {
        #[command(flatten)]
        params: RepParamsArgs,
        #[arg(long, allow_hyphen_values = true, default_value_t = -8)]
        p_min: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 8)]
        p_max: i64,
    },
    /// Compare the derived representation against its finite-difference
    /// realization on a smooth seeded test vector.
    FdCheck {
        #[command(flatten)]
        params: RepParamsArgs,
        #[arg(long, default_value_t = 1e-4)]
        h: f64,
        /// Truncation order of the test vector.
        #[arg(long, default_value_t = 16)]
        p: i64,
    },
}

#[derive(Subcommand)]
enum HopfCommand {
    /// Verify the Hopf axioms exactly over Q(q).
    Verify {
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        #[arg(long, default_value_t = 40)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print the Casimir element; with --check, verify centrality and the
    /// equality of its two presentations (including the negative control).
    Casimir {
        #[arg(long)]
        check: bool,
    },
}

#[derive(Args)]
struct TransformParamsArgs {
    /// Character index n.
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    /// Radial profile JSON file.
    #[arg(long)]
    profile: PathBuf,
    /// Scale prefactor.
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
}

#[derive(Subcommand)]
enum TransformCommand {
    /// Horocyclic (Abel) transform at a single t, or a t-table with --csv.
    Abel {
        #[command(flatten)]
        params: TransformParamsArgs,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        t: f64,
        /// Number of table rows for --csv output.
        #[arg(long, default_value_t = 33)]
        steps: usize,
    },
    /// Spherical Fourier transform of type chi_n at the linear form mu.
    Kangni {
        #[command(flatten)]
        params: TransformParamsArgs,
        /// mu as "re" or "re,im".
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Measure the translation rule for omega = u_alpha d_s^{1/2} u_beta.
    TranslateCheck {
        #[command(flatten)]
        params: TransformParamsArgs,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        s: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        beta: f64,
    },
    /// Write a smooth compactly supported profile file.
    MakeProfile {
        #[arg(long, default_value_t = 2.5)]
        t_support: f64,
        #[arg(long, default_value_t = 129)]
        samples: usize,
        /// Output path ("-" for stdout).
        #[arg(long, default_value = "-")]
        out: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT_ERROR)
        }
    }
}

fn timestamp(no_timestamp: bool) -> Option<u64> {
    if no_timestamp {
        None
    } else {
        Some(
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        )
    }
}

fn emit(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn run(cli: Cli) -> Result<ExitCode> {
    let config = Config::load(cli.config.as_deref())?;
    let seed = cli.seed.unwrap_or(config.seed);
    let csv = cli.csv;
    let no_timestamp = cli.no_timestamp;

    match cli.command {
        Command::Decompose {
            matrix,
            form,
            tolerance,
        } => {
            let g = parse_group_element(&matrix, tolerance)?;
            // The configured scale prefactor rides along as metadata; it is
            // never multiplied into the matrix factors.
            let (factors, residual) = match form {
                FormArg::Iwasawa => {
                    let f = iwasawa(&g)?.with_scale(config.zh);
                    let back = recompose_iwasawa(&f);
                    (Factors::from(f), element_distance(&back, &g))
                }
                FormArg::Cartan => {
                    let f = cartan(&g).with_scale(config.zh);
                    let back = recompose_cartan(&f)?;
                    (Factors::from(f), element_distance(&back, &g))
                }
            };
            let mut value = serde_json::to_value(factors)?;
            value["residual"] = json!(residual);
            emit(&value);
            if residual > tolerance {
                return Ok(ExitCode::from(EXIT_RESIDUAL_ERROR));
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::HaarCheck { g0 } => {
            let quad = config.quadrature();
            let f = suites::haar_test_function();
            let set: Vec<(String, GroupElement)> = match g0 {
                Some(spec) => {
                    let v = input::parse_reals(&spec)?;
                    let [theta, t, xi] = v.as_slice() else {
                        bail!("--g0 expects theta,t,xi");
                    };
                    vec![(
                        format!("k_{theta} d_{t} n_{xi}"),
                        GroupElement::rotation(*theta)
                            * GroupElement::boost(*t)
                            * GroupElement::parabolic(*xi),
                    )]
                }
                None => suites::standard_translation_set(seed),
            };
            let mut audits = Vec::new();
            let mut pass = true;
            for (name, g0) in &set {
                let (err, warning) = su11::haar::audit_left_invariance(&f, g0, &quad)
                    .map_err(|e| anyhow!("audit failed: {e}"))?;
                let ok = err <= config.audit_threshold && warning.is_none();
                pass &= ok;
                audits.push(json!({
                    "g0": name,
                    "relative_error": err,
                    "threshold": config.audit_threshold,
                    "warning": warning.map(|w| w.to_string()),
                    "pass": ok,
                }));
            }
            let report = json!({
                "spec": config.quadrature(),
                "timestamp": timestamp(no_timestamp),
                "audits": audits,
                "pass": pass,
            });
            emit(&report);
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILURE)
            })
        }

        Command::Rep { command } => run_rep(command, csv, &config),

        Command::Hopf { command } => match command {
            HopfCommand::Verify {
                max_degree,
                trials,
                seed: hopf_seed,
            } => {
                let seed = hopf_seed.unwrap_or(seed);
                let report = uqsl2::verify_hopf_axioms(max_degree, trials, seed);
                let checks: Vec<_> = report
                    .checks
                    .iter()
                    .map(|c| {
                        json!({
                            "axiom": c.axiom,
                            "pass": c.passed,
                            "counterexample": c.counterexample,
                        })
                    })
                    .collect();
                emit(&json!({
                    "max_degree": max_degree,
                    "trials": trials,
                    "seed": seed,
                    "elements_tested": report.elements_tested,
                    "pairs_tested": report.pairs_tested,
                    "timestamp": timestamp(no_timestamp),
                    "checks": checks,
                    "pass": report.all_passed,
                }));
                Ok(if report.all_passed {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(EXIT_CHECK_FAILURE)
                })
            }
            HopfCommand::Casimir { check } => {
                let omega = uqsl2::casimir();
                if !check {
                    emit(&json!({ "casimir": omega.to_string() }));
                    return Ok(ExitCode::SUCCESS);
                }
                let forms_equal = omega == uqsl2::casimir_second_form();
                let central = uqsl2::is_central(&omega);
                let control_detected = !uqsl2::is_central(&uqsl2::casimir_linear_denominator());
                let pass = forms_equal && central && control_detected;
                emit(&json!({
                    "casimir": omega.to_string(),
                    "second_form": uqsl2::casimir_second_form().to_string(),
                    "forms_equal": forms_equal,
                    "central": central,
                    "linear_denominator_control_detected": control_detected,
                    "pass": pass,
                }));
                Ok(if pass {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(EXIT_CHECK_FAILURE)
                })
            }
        },

        Command::Transform { command } => run_transform(command, csv, &config),

        Command::Suite { name } => {
            let report = suites::run_suite(name.as_str(), &config, seed, timestamp(no_timestamp));
            emit(&serde_json::to_value(&report)?);
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILURE)
            })
        }
    }
}

fn element_distance(a: &GroupElement, b: &GroupElement) -> f64 {
    ((a.alpha() - b.alpha()).norm_sqr() + (a.beta() - b.beta()).norm_sqr()).sqrt()
}

fn read_to_string(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("cannot read {path}"))
    }
}

fn run_rep(command: RepCommand, csv: bool, config: &Config) -> Result<ExitCode> {
    match command {
        RepCommand::Apply {
            params,
            g,
            input,
            p_out,
        } => {
            let pars = params.build()?;
            let g = parse_group_element(&g, config.group_tolerance.max(1e-9))?;
            let file: FourierFile = serde_json::from_str(&read_to_string(&input)?)
                .context("invalid coefficient file")?;
            let phi = file.to_function()?;
            let p_out = p_out.unwrap_or(phi.p_max());
            if p_out < phi.p_max() {
                bail!("p_out must be at least the input truncation");
            }
            let out = apply_v(&pars, &g, &phi, p_out);
            emit(&json!({
                "p_max": out.fun.p_max(),
                "coeffs": FourierFile::from_function(&out.fun).coeffs,
                "spectral_tail_warning": out.warning.map(|w| json!({
                    "tail_norm": w.tail_norm,
                    "total_norm": w.total_norm,
                })),
            }));
            Ok(ExitCode::SUCCESS)
        }
        RepCommand::LadderTable {
            params,
            p_min,
            p_max,
        } => {
            let pars = params.build()?;
            if p_min > p_max {
                bail!("p_min must not exceed p_max");
            }
            let j = pars.j.value();
            if csv {
                println!("p,raise_re,raise_im,lower_re,lower_im");
                for p in p_min..=p_max {
                    let up = pars.s + (p as f64 + j);
                    let down = pars.s - (p as f64 + j);
                    println!("{p},{},{},{},{}", up.re, up.im, down.re, down.im);
                }
            } else {
                let rows: Vec<_> = (p_min..=p_max)
                    .map(|p| {
                        let up = pars.s + (p as f64 + j);
                        let down = pars.s - (p as f64 + j);
                        json!({"p": p, "raise": [up.re, up.im], "lower": [down.re, down.im]})
                    })
                    .collect();
                emit(&json!({ "j": j, "s": [pars.s.re, pars.s.im], "rows": rows }));
            }
            Ok(ExitCode::SUCCESS)
        }
        RepCommand::FdCheck { params, h, p } => {
            let pars = params.build()?;
            let mut rng = su11::rng::SplitMix64::new(config.seed);
            let mut phi = FourierFunction::zero(p);
            for k in -p..=p {
                let decay = 1.0 / (1.0 + (k * k) as f64);
                phi.set_coeff(
                    k,
                    Complex64::new(rng.range(-0.5, 0.5) * decay, rng.range(-0.5, 0.5) * decay),
                );
            }
            let sx = finite_difference_dv(&pars, &sx_generator(), &phi, h)
                .max_coeff_distance(&apply_dv(&pars, Direction::Sx, &phi));
            let sy = finite_difference_dv(&pars, &sy_generator(), &phi, h)
                .max_coeff_distance(&apply_dv(&pars, Direction::Sy, &phi));
            emit(&json!({
                "h": h,
                "p": p,
                "sx_max_deviation": sx,
                "sy_max_deviation": sy,
            }));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_profile(path: &PathBuf) -> Result<RadialProfile> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read profile {}", path.display()))?;
    serde_json::from_str(&text).context("invalid profile file")
}

fn run_transform(command: TransformCommand, csv: bool, config: &Config) -> Result<ExitCode> {
    match command {
        TransformCommand::Abel { params, t, steps } => {
            let profile = load_profile(&params.profile)?;
            let f = TypeChiFunction::new(params.n, profile);
            let tp = TransformParams::new(params.n, Complex64::new(0.0, 0.0))
                .with_hbar(params.hbar)
                .with_quad(config.quadrature());
            if csv {
                if steps < 2 {
                    bail!("--steps must be at least 2");
                }
                let support = f.profile.t_support();
                println!("t,re,im");
                for k in 0..steps {
                    let tk = -support + 2.0 * support * k as f64 / (steps - 1) as f64;
                    let out = abel_transform(&f, tk, &tp);
                    println!("{tk},{},{}", out.value.re, out.value.im);
                }
            } else {
                let out = abel_transform(&f, t, &tp);
                emit(&json!({
                    "n": params.n,
                    "t": t,
                    "hbar": params.hbar,
                    "value": [out.value.re, out.value.im],
                    "warning": out.warning.map(|w| w.to_string()),
                }));
            }
            Ok(ExitCode::SUCCESS)
        }
        TransformCommand::Kangni { params, mu } => {
            let profile = load_profile(&params.profile)?;
            let f = TypeChiFunction::new(params.n, profile);
            let mu = parse_complex(&mu)?;
            let tp = TransformParams::new(params.n, mu)
                .with_hbar(params.hbar)
                .with_quad(config.quadrature());
            let out = kangni_transform(&f, &tp);
            emit(&json!({
                "n": params.n,
                "mu": [mu.re, mu.im],
                "hbar": params.hbar,
                "value": [out.value.re, out.value.im],
                "warning": out.warning.map(|w| w.to_string()),
            }));
            Ok(ExitCode::SUCCESS)
        }
        TransformCommand::TranslateCheck {
            params,
            mu,
            alpha,
            s,
            beta,
        } => {
            let profile = load_profile(&params.profile)?;
            let f = TypeChiFunction::new(params.n, profile);
            let mu = parse_complex(&mu)?;
            let tp = TransformParams::new(params.n, mu)
                .with_hbar(params.hbar)
                .with_quad(config.quadrature());
            let omega = su11::decomp::CartanFactors::new(alpha, s, beta);
            let report = verify_translation_property(&f, &omega, &tp)?;
            emit(&json!({
                "omega": {"alpha": alpha, "s": s, "beta": beta},
                "n": params.n,
                "mu": [mu.re, mu.im],
                "lhs": [report.lhs.re, report.lhs.im],
                "base": [report.base.re, report.base.im],
                "measured_factor": [report.measured_factor.re, report.measured_factor.im],
                "predicted_factor": [report.predicted_factor.re, report.predicted_factor.im],
                "relative_discrepancy": report.relative_discrepancy,
                "warning": report.warning.map(|w| w.to_string()),
            }));
            Ok(ExitCode::SUCCESS)
        }
        TransformCommand::MakeProfile {
            t_support,
            samples,
            out,
        } => {
            let profile = RadialProfile::from_fn(t_support, samples, |t| {
                Complex64::new(suites::window(t / t_support), 0.0)
            })
            .map_err(|e| anyhow!("cannot build profile: {e}"))?;
            let text = serde_json::to_string_pretty(&profile)?;
            if out == "-" {
                println!("{text}");
            } else {
                std::fs::write(&out, text).with_context(|| format!("cannot write {out}"))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
