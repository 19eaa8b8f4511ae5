//! `fatpoints`: exact computations with ideals of fat point schemes and
//! with monomial ideals, reported as JSON (or CSV for tabular results).
//!
//! Exit codes: 0 success, 1 bad input, 2 internal failure, 3 success but
//! with uncertified (heuristic) ranks in the output.

mod io;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fatpoints_core::asymptotics::{
    chudnovsky_check, delta_t0, hh_points_check, semicontinuity_over_configs,
    seshadri_lower_bound, waldschmidt_report,
};
use fatpoints_core::interp::{alpha_symbolic, alpha_table, hilbert_function, is_generic_position, Mode};
use fatpoints_core::linalg::RankStrategy;
use fatpoints_core::monomial::{ass_primes, symbolic_power, verify_counterexample, AssMode};
use fatpoints_core::points::{quadric_witness, sample_config, star_configuration};

use io::InputError;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Exact,
    Modular,
    Multimodular,
    MultimodularCertify,
}

impl From<StrategyArg> for RankStrategy {
    fn from(s: StrategyArg) -> RankStrategy {
        match s {
            StrategyArg::Exact => RankStrategy::Exact,
            StrategyArg::Modular => RankStrategy::Modular,
            StrategyArg::Multimodular => RankStrategy::Multimodular,
            StrategyArg::MultimodularCertify => RankStrategy::MultimodularCertify,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Affine,
    Homogeneous,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Affine => Mode::Affine,
            ModeArg::Homogeneous => Mode::Homogeneous,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct Common {
    /// Rank computation strategy.
    #[arg(long, value_enum, default_value = "multimodular-certify")]
    strategy: StrategyArg,
    /// Evaluate derivative conditions in an affine chart or homogeneously.
    #[arg(long, value_enum, default_value = "affine")]
    mode: ModeArg,
    /// Output format (csv only for tabular commands).
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Parser)]
#[command(name = "fatpoints", version, about = "Exact initial degrees of symbolic powers of point ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Initial degree alpha_m of the m-th symbolic power, with certificate.
    Alpha {
        /// Point configuration file.
        points: PathBuf,
        /// Single multiplicity to compute.
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Compute the whole table for m = 1..=m_max instead.
        #[arg(long)]
        m_max: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Hilbert function of the point ideal in degrees 0..=d_max.
    Hilbert {
        points: PathBuf,
        #[arg(long, default_value_t = 6)]
        d_max: u32,
        /// Also report whether the points impose independent conditions
        /// in every degree (generic position).
        #[arg(long)]
        generic: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Waldschmidt-constant bracket: ratios, upper and lower bounds.
    Wald {
        points: PathBuf,
        #[arg(long, default_value_t = 3)]
        m_max: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Chudnovsky slack alpha_m/m - (alpha+N-1)/N for each m <= m_max.
    Chud {
        points: PathBuf,
        #[arg(long, default_value_t = 3)]
        m_max: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Star configuration cut out by a hyperplane arrangement.
    Star {
        /// Hyperplane file: same schema as a point file, one row of N+1
        /// coefficients per hyperplane.
        hyperplanes: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Sample a configuration of rational points of bounded height.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        height: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Quadric through the points, if one exists (dimension 2 only).
    Quadric {
        points: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Degreewise containment check I^(Nm) in M^{m(N-1)} I^m.
    Hh {
        points: PathBuf,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long)]
        d_max: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Seshadri-type lower bound ((alpha+N-1)/(nN))^(1/(N-1)).
    Seshadri {
        points: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Least s with s*alpha > alpha_s, and the threshold t0 = (N-1)*delta.
    Delta {
        points: PathBuf,
        #[arg(long, default_value_t = 5)]
        s_max: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Compare alpha_m across sampled and explicitly given configurations.
    Semicont {
        /// Points per sampled configuration.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Comma-separated sampling seeds.
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,3,4")]
        seeds: Vec<u64>,
        #[arg(long, default_value_t = 10)]
        height: u32,
        /// Extra explicit configurations to include, by file.
        #[arg(long)]
        points: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Verify the stock counterexample to taking symbolic powers of
    /// symbolic powers: a product ideal J with (J^(2))^(2) != J^(4).
    MonoVerify {
        #[command(flatten)]
        common: Common,
    },
    /// Operations on a monomial ideal read from a file.
    Mono {
        ideal: PathBuf,
        /// Ordinary power to compute.
        #[arg(long)]
        power: Option<u32>,
        /// Symbolic power to compute.
        #[arg(long)]
        symbolic: Option<u32>,
        /// List associated primes (bounded-witness search).
        #[arg(long)]
        ass: bool,
        #[command(flatten)]
        common: Common,
    },
}

/// Library failures become internal errors (exit 2) except the ones that
/// are really the caller's input (exit 1).
fn core_err(e: fatpoints_core::Error) -> CliError {
    use fatpoints_core::Error as E;
    match e {
        E::InvalidArgument(_)
        | E::InvalidPoint
        | E::InvalidConfig(_)
        | E::CannotSample { .. }
        | E::VariableMismatch
        | E::ZeroIdeal
        | E::ImproperConfiguration(_) => CliError::Input(e.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}

enum CliError {
    Input(String),
    Internal(String),
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> CliError {
        CliError::Input(e.0)
    }
}

struct Report {
    command: &'static str,
    input: Value,
    result: Value,
    warnings: Vec<String>,
}

fn run(cli: Cli) -> Result<(Report, Common), CliError> {
    match cli.command {
        Command::Alpha { points, m, m_max, common } => {
            let cfg = io::parse_points_file(&points)?;
            let (strategy, mode) = (common.strategy.into(), common.mode.into());
            let input = json!({
                "points": report::config_value(&cfg),
                "m": m, "m_max": m_max,
                "strategy": format!("{:?}", common.strategy),
                "mode": format!("{:?}", common.mode),
            });
            let (result, warnings) = if let Some(m_max) = m_max {
                let table = alpha_table(&cfg, m_max, strategy, mode).map_err(core_err)?;
                let w = table.warnings();
                (
                    json!({
                        "entries": table.entries.iter().map(report::alpha_entry_value).collect::<Vec<_>>(),
                    }),
                    w,
                )
            } else {
                let entry = alpha_symbolic(&cfg, m, strategy, mode).map_err(core_err)?;
                let w = entry.warnings.clone();
                (report::alpha_entry_value(&entry), w)
            };
            Ok((Report { command: "alpha", input, result, warnings }, common))
        }
        Command::Hilbert { points, d_max, generic, common } => {
            let cfg = io::parse_points_file(&points)?;
            let input = json!({"points": report::config_value(&cfg), "d_max": d_max});
            let mut values = Vec::new();
            for d in 0..=d_max {
                values.push(json!({
                    "d": d,
                    "value": hilbert_function(&cfg, d).map_err(core_err)?,
                }));
            }
            let mut result = json!({"values": values});
            if generic {
                result["generic_position"] =
                    json!(is_generic_position(&cfg).map_err(core_err)?);
            }
            Ok((Report { command: "hilbert", input, result, warnings: vec![] }, common))
        }
        Command::Wald { points, m_max, common } => {
            let cfg = io::parse_points_file(&points)?;
            let input = json!({"points": report::config_value(&cfg), "m_max": m_max});
            let r = waldschmidt_report(&cfg, m_max, common.strategy.into(), common.mode.into())
                .map_err(core_err)?;
            let warnings = r.warnings.clone();
            Ok((Report { command: "wald", input, result: report::waldschmidt_value(&r), warnings }, common))
        }
        Command::Chud { points, m_max, common } => {
            let cfg = io::parse_points_file(&points)?;
            let input = json!({"points": report::config_value(&cfg), "m_max": m_max});
            let verdicts = chudnovsky_check(&cfg, m_max, common.strategy.into(), common.mode.into())
                .map_err(core_err)?;
            Ok((Report {
                command: "chud",
                input,
                result: report::chudnovsky_value(&verdicts),
                warnings: vec![],
            }, common))
        }
        Command::Star { hyperplanes, common } => {
            let planes = io::parse_hyperplanes_file(&hyperplanes)?;
            let input = json!({
                "hyperplanes": planes.iter().map(|h| {
                    h.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()
                }).collect::<Vec<_>>(),
            });
            let cfg = star_configuration(&planes).map_err(core_err)?;
            Ok((Report {
                command: "star",
                input,
                result: report::config_value(&cfg),
                warnings: vec![],
            }, common))
        }
        Command::Sample { n, dim, seed, height, common } => {
            let input = json!({"n": n, "dim": dim, "seed": seed, "height": height});
            let cfg = sample_config(n, dim, seed, height).map_err(core_err)?;
            Ok((Report {
                command: "sample",
                input,
                result: report::config_value(&cfg),
                warnings: vec![],
            }, common))
        }
        Command::Quadric { points, common } => {
            let cfg = io::parse_points_file(&points)?;
            let input = json!({"points": report::config_value(&cfg)});
            let witness = quadric_witness(&cfg).map_err(core_err)?;
            let result = match witness {
                Some(coeffs) => json!({
                    "exists": true,
                    "coefficients": coeffs.iter().map(report::rat_str).collect::<Vec<_>>(),
                }),
                None => json!({"exists": false, "coefficients": Value::Null}),
            };
            Ok((Report { command: "quadric", input, result, warnings: vec![] }, common))
        }
        Command::Hh { points, m, d_max, common } => {
            let cfg = io::parse_points_file(&points)?;
            let input = json!({"points": report::config_value(&cfg), "m": m, "d_max": d_max});
            let r = hh_points_check(&cfg, m, d_max, common.strategy.into(), common.mode.into())
                .map_err(core_err)?;
            let warnings = r.warnings.clone();
            Ok((Report { command: "hh", input, result: report::hh_value(&r), warnings }, common))
        }
        Command::Seshadri { points, common } => {
            let cfg = io::parse_points_file(&points)?;
            let input = json!({"points": report::config_value(&cfg)});
            let b = seshadri_lower_bound(&cfg, common.strategy.into(), common.mode.into())
                .map_err(core_err)?;
            Ok((Report {
                command: "seshadri",
                input,
                result: report::seshadri_value(&b),
                warnings: vec![],
            }, common))
        }
        Command::Delta { points, s_max, common } => {
            let cfg = io::parse_points_file(&points)?;
            let input = json!({"points": report::config_value(&cfg), "s_max": s_max});
            let d = delta_t0(&cfg, s_max, common.strategy.into(), common.mode.into())
                .map_err(core_err)?;
            let warnings = d.warnings.clone();
            Ok((Report { command: "delta", input, result: report::delta_value(&d), warnings }, common))
        }
        Command::Semicont { n, dim, m, seeds, height, points, common } => {
            let input = json!({
                "n": n, "dim": dim, "m": m, "seeds": seeds, "height": height,
                "extra_configs": points.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
            });
            let mut configs = Vec::new();
            for &seed in &seeds {
                configs.push(sample_config(n, dim, seed, height).map_err(core_err)?);
            }
            for path in &points {
                configs.push(io::parse_points_file(path)?);
            }
            let r = semicontinuity_over_configs(&configs, m, common.strategy.into(), common.mode.into())
                .map_err(core_err)?;
            let warnings = r.warnings.clone();
            Ok((Report {
                command: "semicont",
                input,
                result: report::semicont_value(&r),
                warnings,
            }, common))
        }
        Command::MonoVerify { common } => {
            let r = verify_counterexample().map_err(core_err)?;
            Ok((Report {
                command: "mono-verify",
                input: json!({}),
                result: report::counterexample_value(&r),
                warnings: vec![],
            }, common))
        }
        Command::Mono { ideal, power, symbolic, ass, common } => {
            let i = io::parse_ideal_file(&ideal)?;
            let input = json!({
                "ideal": report::ideal_value(&i),
                "power": power, "symbolic": symbolic, "ass": ass,
            });
            let mut result = json!({
                "alpha": i.alpha().map_err(core_err)?,
            });
            if let Some(e) = power {
                result["power"] = report::ideal_value(&i.power(e));
            }
            if let Some(m) = symbolic {
                result["symbolic_power"] =
                    report::ideal_value(&symbolic_power(&i, m, None).map_err(core_err)?);
            }
            if ass {
                let a = ass_primes(&i, AssMode::BoundedWitness).map_err(core_err)?;
                result["ass_primes"] = json!({
                    "primes": a.primes.iter().map(|p| p.render(i.vars())).collect::<Vec<_>>(),
                    "complete_under_witness_bound": a.complete_under_witness_bound,
                    "witness_bound": a.witness_bound,
                });
            }
            Ok((Report { command: "mono", input, result, warnings: vec![] }, common))
        }
    }
}

fn emit(rep: &Report, common: &Common) -> Result<(), CliError> {
    let text = match common.format {
        FormatArg::Json => {
            let envelope =
                report::envelope(rep.command, rep.input.clone(), rep.result.clone(), &rep.warnings);
            let mut s = serde_json::to_string_pretty(&envelope)
                .map_err(|e| CliError::Internal(e.to_string()))?;
            s.push('\n');
            s
        }
        FormatArg::Csv => report::to_csv(rep.command, &rep.result).ok_or_else(|| {
            CliError::Input(format!("csv output is not available for `{}`", rep.command))
        })?,
    };
    match &common.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Internal(format!("{}: {}", path.display(), e))),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((rep, common)) => {
            let heuristic = !rep.warnings.is_empty();
            if let Err(e) = emit(&rep, &common) {
                return fail(e);
            }
            if heuristic {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => fail(e),
    }
}

fn fail(e: CliError) -> ExitCode {
    match e {
        CliError::Input(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
        CliError::Internal(msg) => {
            eprintln!("internal error: {}", msg);
            ExitCode::from(2)
        }
    }
}
