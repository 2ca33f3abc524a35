//! The five subcommands. Exit-code contract: 0 success, 1 verification
//! failure, 2 input error, 3 physics-policy error.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{
    build_adjoint_realization, build_affine_realization, casimir_p2, centrality_residual,
    jacobi_combo, jacobi_matrix_residual, little_algebra, verify_realization, FiveMomentum,
    GeneratorId, MatrixRealization,
};
use crate::cli::config::RunConfig;
use crate::cli::report::{
    CentralityEntry, ClassifyReport, EvolveReport, OffendingPair, RepTableRow, RepTableReport,
    SpectrumReport, TimePoint, VerifyReport,
};
use crate::error::{Error, Result};
use crate::evolution::{
    mass_spectrum, observables, propagate, save_state, subthreshold_filter, SubthresholdPolicy,
};
use crate::irreps::{
    build_class1_rep, classify, default_classify_tol, spin_isospin_eigen, HalfSpin, IrrepLabel,
    MomentumClass,
};

#[derive(Debug, Parser)]
#[command(
    name = "p14",
    version,
    about = "P(1,4) algebra checks, representation tables and variable-mass wavepacket runs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Directory for output artifacts (reports, CSV, state files).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Print the report as a single JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed override for randomized test packets.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Tolerance override (verify thresholds, classification null window).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a realization against the structure-constant table, the Jacobi
    /// identity and Casimir centrality.
    Verify {
        /// Which realization to check.
        #[arg(long, default_value = "affine", value_parser = ["affine", "adjoint"])]
        realization: String,
        /// Zero one generator first (fault-injection hook), e.g. M12.
        #[arg(long)]
        corrupt: Option<String>,
    },
    /// Classify a five-momentum into one of the four classes.
    Classify {
        /// Five comma-separated components p0,p1,p2,p3,p4.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
    },
    /// CSV table of spin-isospin representations.
    RepTable {
        #[arg(long = "max-2s", default_value_t = 2)]
        max_2s: u32,
        #[arg(long = "max-2I", default_value_t = 2)]
        max_2i: u32,
    },
    /// Propagate a packet through the times in the config, writing state
    /// files and a report.
    Evolve {
        #[arg(long)]
        config: PathBuf,
    },
    /// Mass spectrum of the configured packet, written as CSV.
    Spectrum {
        #[arg(long)]
        config: PathBuf,
    },
}

/// Entry point for the binary.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let code = match dispatch(&cli) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            exit_code_for(&error)
        }
    };
    // timing is diagnostic only; stdout and files stay byte-reproducible
    eprintln!("wall_time_ms={:.3}", started.elapsed().as_secs_f64() * 1e3);
    code
}

fn exit_code_for(error: &Error) -> ExitCode {
    match error {
        Error::EvanescentModes { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Verify { realization, corrupt } => {
            let report = cmd_verify(realization, corrupt.as_deref(), cli.tol)?;
            emit(&report, cli, "verify_report.json")?;
            Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Classify { p } => {
            let report = cmd_classify(p, cli.tol)?;
            emit(&report, cli, "classify_report.json")?;
            Ok(ExitCode::SUCCESS)
        }
        Command::RepTable { max_2s, max_2i } => {
            let report = cmd_rep_table(*max_2s, *max_2i)?;
            if cli.json {
                println!("{}", to_json(&report)?);
            } else {
                print!("{}", report.to_csv());
            }
            if let Some(dir) = &cli.out {
                fs::create_dir_all(dir)?;
                fs::write(dir.join("rep_table.csv"), report.to_csv())?;
                fs::write(dir.join("rep_table_report.json"), to_json(&report)? + "\n")?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Evolve { config } => {
            let config = RunConfig::load(config)?;
            let report = cmd_evolve(&config, cli.seed, out_dir(cli))?;
            emit(&report, cli, "evolve_report.json")?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { config } => {
            let config = RunConfig::load(config)?;
            let report = cmd_spectrum(&config, cli.seed, out_dir(cli))?;
            emit(&report, cli, "spectrum_report.json")?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn out_dir(cli: &Cli) -> &Path {
    cli.out.as_deref().unwrap_or(Path::new("."))
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Config(e.to_string()))
}

fn emit<T: Serialize + Display>(report: &T, cli: &Cli, filename: &str) -> Result<()> {
    if cli.json {
        println!("{}", to_json(report)?);
    } else {
        println!("{report}");
    }
    if let Some(dir) = &cli.out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join(filename), to_json(report)? + "\n")?;
    }
    Ok(())
}

/// The three standard frozen momenta with kappa = omega = eta = 1.
const STANDARD_MOMENTA: [[f64; 5]; 3] = [
    [1.0, 0.0, 0.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0, 1.0],
    [0.0, 0.0, 0.0, 0.0, 1.0],
];

pub fn cmd_verify(
    realization: &str,
    corrupt: Option<&str>,
    tol: Option<f64>,
) -> Result<VerifyReport> {
    let bracket_threshold = tol.unwrap_or(1e-12);
    let jacobi_threshold = 1e-10;
    let centrality_threshold = 1e-10;

    let mut r: MatrixRealization = match realization {
        "affine" => build_affine_realization(),
        "adjoint" => build_adjoint_realization(),
        other => return Err(Error::Config(format!("unknown realization `{other}`"))),
    };
    let corrupted = match corrupt {
        Some(name) => {
            let id: GeneratorId = name.parse()?;
            r = r.with_zeroed(id);
            Some(id.to_string())
        }
        None => None,
    };

    let bracket_report = verify_realization(&r);
    let worst = bracket_report.worst().expect("105 pairs");
    let offending_pairs = bracket_report
        .offenders(bracket_threshold)
        .into_iter()
        .map(|p| OffendingPair { a: p.a.to_string(), b: p.b.to_string(), residual: p.residual })
        .collect::<Vec<_>>();

    let all = GeneratorId::all();
    let mut jacobi_symbolic_exact = true;
    'outer: for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            for k in (j + 1)..all.len() {
                if !jacobi_combo(all[i], all[j], all[k]).is_zero() {
                    jacobi_symbolic_exact = false;
                    break 'outer;
                }
            }
        }
    }
    let jacobi_matrix_max_residual = jacobi_matrix_residual(&r);

    let mut centrality = Vec::new();
    let mut centrality_pass = true;
    for components in STANDARD_MOMENTA {
        let p = FiveMomentum::new(components)?;
        let residual = centrality_residual(&r, &p, 1e-12)?;
        centrality_pass &= residual < centrality_threshold;
        centrality.push(CentralityEntry {
            momentum: components,
            little_algebra: little_algebra(&p, 1e-12).iter().map(|g| g.to_string()).collect(),
            residual,
        });
    }

    let pass = bracket_report.max_residual < bracket_threshold
        && jacobi_symbolic_exact
        && jacobi_matrix_max_residual < jacobi_threshold
        && centrality_pass;

    Ok(VerifyReport {
        command: "verify",
        realization: realization.to_string(),
        corrupted,
        bracket_threshold,
        bracket_max_residual: bracket_report.max_residual,
        worst_pair: [worst.a.to_string(), worst.b.to_string()],
        offending_pairs,
        jacobi_symbolic_exact,
        jacobi_matrix_max_residual,
        centrality,
        pass,
    })
}

pub fn cmd_classify(p: &str, tol: Option<f64>) -> Result<ClassifyReport> {
    let parts: Vec<&str> = p.split(',').collect();
    if parts.len() != 5 {
        return Err(Error::Config(format!("expected five components, got {}", parts.len())));
    }
    let mut components = [0.0_f64; 5];
    for (slot, part) in components.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("cannot parse `{part}` as a number")))?;
    }
    let momentum = FiveMomentum::new(components)?;
    let p2 = casimir_p2(&momentum);
    let tol = tol.unwrap_or_else(|| default_classify_tol(&momentum));
    let class = classify(p2, &momentum, tol);
    Ok(ClassifyReport {
        command: "classify",
        p: components,
        tol,
        p2,
        class: class.to_string(),
        kappa: (class == MomentumClass::I).then(|| p2.sqrt()),
        eta: (class == MomentumClass::III).then(|| (-p2).sqrt()),
    })
}

pub fn cmd_rep_table(max_2s: u32, max_2i: u32) -> Result<RepTableReport> {
    let mut rows = Vec::new();
    for twice_s in 0..=max_2s {
        for twice_i in 0..=max_2i {
            let s = HalfSpin::from_twice(twice_s);
            let isospin = HalfSpin::from_twice(twice_i);
            let rep = build_class1_rep(s, isospin);
            // round trip: the recovered labels must match the requested ones
            let (s_back, i_back) = spin_isospin_eigen(&rep)?;
            if (s_back, i_back) != (s, isospin) {
                return Err(Error::ReducibleInput);
            }
            let residual = crate::irreps::class1::bracket_residual(rep.m(), rep.r())?;
            rows.push(RepTableRow {
                s: s.value(),
                isospin: isospin.value(),
                dim: rep.dim(),
                s2_eigenvalue: s.casimir(),
                i2_eigenvalue: isospin.casimir(),
                bracket_residual: residual,
            });
        }
    }
    Ok(RepTableReport { command: "rep-table", max_2s, max_2i, rows })
}

pub fn cmd_evolve(
    config: &RunConfig,
    seed_override: Option<u64>,
    out_dir: &Path,
) -> Result<EvolveReport> {
    let spec = config.propagator_spec()?;
    let label = *spec.label();
    let mut psi = config.initial_state(seed_override)?;

    // one-time filter for class III; reject refuses states with evanescent
    // amplitude, project-out records the removed probability
    let mut truncated_norm = 0.0;
    if let IrrepLabel::ClassIII { eta, .. } = label {
        let (filtered, removed) = subthreshold_filter(&psi, eta)?;
        if spec.policy() == SubthresholdPolicy::Reject && removed > 0.0 {
            return Err(Error::EvanescentModes { removed });
        }
        truncated_norm = removed;
        psi = filtered;
    }

    fs::create_dir_all(out_dir)?;
    let mut points = Vec::new();
    for (index, &time) in config.times.iter().enumerate() {
        let state = propagate(&psi, time, &spec)?;
        let obs = observables(&state, &spec)?;
        let file_name = format!("state_{index:03}.bin");
        save_state(&state, &label, &out_dir.join(&file_name))?;
        points.push(TimePoint::new(time, &obs, file_name));
    }

    Ok(EvolveReport {
        command: "evolve",
        config: config.clone(),
        seed: seed_override.unwrap_or(config.seed),
        truncated_norm,
        points,
    })
}

pub fn cmd_spectrum(
    config: &RunConfig,
    seed_override: Option<u64>,
    out_dir: &Path,
) -> Result<SpectrumReport> {
    let bins = config
        .bins
        .ok_or_else(|| Error::Config("spectrum requires a `bins` section".into()))?;
    let spec = config.propagator_spec()?;
    let psi = config.initial_state(seed_override)?;
    let spectrum = mass_spectrum(&psi, &spec, &bins)?;

    fs::create_dir_all(out_dir)?;
    let csv_file = "spectrum.csv".to_string();
    let mut buffer = Vec::new();
    spectrum.write_csv(&mut buffer, config.class == MomentumClass::III)?;
    fs::write(out_dir.join(&csv_file), &buffer)?;

    Ok(SpectrumReport {
        command: "spectrum",
        config: config.clone(),
        seed: seed_override.unwrap_or(config.seed),
        integral: spectrum.integral(),
        truncated_norm: spectrum.truncated_norm,
        csv_file,
    })
}
