//! Machine-readable run reports with deterministic field order. Timing is
//! deliberately absent: it goes to stderr so repeated runs stay
//! byte-identical.

use std::fmt;

use serde::Serialize;

use crate::evolution::Observables;

#[derive(Debug, Serialize)]
pub struct OffendingPair {
    pub a: String,
    pub b: String,
    pub residual: f64,
}

#[derive(Debug, Serialize)]
pub struct CentralityEntry {
    pub momentum: [f64; 5],
    pub little_algebra: Vec<String>,
    pub residual: f64,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub command: &'static str,
    pub realization: String,
    pub corrupted: Option<String>,
    pub bracket_threshold: f64,
    pub bracket_max_residual: f64,
    pub worst_pair: [String; 2],
    pub offending_pairs: Vec<OffendingPair>,
    pub jacobi_symbolic_exact: bool,
    pub jacobi_matrix_max_residual: f64,
    pub centrality: Vec<CentralityEntry>,
    pub pass: bool,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "realization: {}", self.realization)?;
        if let Some(corrupt) = &self.corrupted {
            writeln!(f, "corrupted generator: {corrupt}")?;
        }
        writeln!(
            f,
            "bracket table: max residual {:.3e} over 105 pairs (threshold {:.1e})",
            self.bracket_max_residual, self.bracket_threshold
        )?;
        writeln!(f, "worst pair: [{}, {}]", self.worst_pair[0], self.worst_pair[1])?;
        for pair in &self.offending_pairs {
            writeln!(f, "  offending: [{}, {}] residual {:.3e}", pair.a, pair.b, pair.residual)?;
        }
        writeln!(
            f,
            "jacobi: symbolic exact = {}, matrix max residual {:.3e}",
            self.jacobi_symbolic_exact, self.jacobi_matrix_max_residual
        )?;
        for entry in &self.centrality {
            writeln!(
                f,
                "centrality at {:?}: residual {:.3e} over {{{}}}",
                entry.momentum,
                entry.residual,
                entry.little_algebra.join(", ")
            )?;
        }
        write!(f, "pass: {}", self.pass)
    }
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub command: &'static str,
    pub p: [f64; 5],
    pub tol: f64,
    pub p2: f64,
    pub class: String,
    pub kappa: Option<f64>,
    pub eta: Option<f64>,
}

impl fmt::Display for ClassifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "class {}  p2 = {:.16e}", self.class, self.p2)?;
        if let Some(kappa) = self.kappa {
            write!(f, "  kappa = {kappa:.16e}")?;
        }
        if let Some(eta) = self.eta {
            write!(f, "  eta = {eta:.16e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Serialize)]
pub struct RepTableRow {
    pub s: f64,
    pub isospin: f64,
    pub dim: usize,
    pub s2_eigenvalue: f64,
    pub i2_eigenvalue: f64,
    pub bracket_residual: f64,
}

#[derive(Debug, Serialize)]
pub struct RepTableReport {
    pub command: &'static str,
    pub max_2s: u32,
    pub max_2i: u32,
    pub rows: Vec<RepTableRow>,
}

impl RepTableReport {
    /// The CSV the command prints; floats at 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,I,dim,s2_eigenvalue,i2_eigenvalue,bracket_residual\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{:.16e},{:.16e},{:.16e}\n",
                row.s, row.isospin, row.dim, row.s2_eigenvalue, row.i2_eigenvalue,
                row.bracket_residual
            ));
        }
        out
    }
}

impl fmt::Display for RepTableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_csv().trim_end())
    }
}

#[derive(Debug, Serialize)]
pub struct TimePoint {
    pub time: f64,
    pub norm: f64,
    pub mean_position: Vec<f64>,
    pub mean_energy: f64,
    pub mean_p4: f64,
    pub state_file: String,
}

impl TimePoint {
    pub fn new(time: f64, observables: &Observables, state_file: String) -> Self {
        TimePoint {
            time,
            norm: observables.norm,
            mean_position: observables.mean_position.clone(),
            mean_energy: observables.mean_energy,
            mean_p4: observables.mean_p4,
            state_file,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EvolveReport {
    pub command: &'static str,
    pub config: crate::cli::config::RunConfig,
    pub seed: u64,
    pub truncated_norm: f64,
    pub points: Vec<TimePoint>,
}

impl fmt::Display for EvolveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "truncated norm: {:.16e}", self.truncated_norm)?;
        for point in &self.points {
            writeln!(
                f,
                "t = {:.6}: norm {:.16e}, <x> = {:?}, <E> = {:.16e}, <p4> = {:.16e} -> {}",
                point.time,
                point.norm,
                point.mean_position,
                point.mean_energy,
                point.mean_p4,
                point.state_file
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumReport {
    pub command: &'static str,
    pub config: crate::cli::config::RunConfig,
    pub seed: u64,
    pub integral: f64,
    pub truncated_norm: f64,
    pub csv_file: String,
}

impl fmt::Display for SpectrumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "integral: {:.16e}", self.integral)?;
        writeln!(f, "truncated norm: {:.16e}", self.truncated_norm)?;
        write!(f, "csv: {}", self.csv_file)
    }
}
