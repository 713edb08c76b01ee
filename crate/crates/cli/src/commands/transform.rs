use std::path::{Path, PathBuf};

use clap::Args;
use num_complex::Complex;
use serde::{Deserialize, Serialize};
use whn_core::spectral::{wigner_transform_with_residue, DensityMatrix};
use whn_core::{Grid64, Wavefunction64, WignerField64};

use crate::error::{invalid, CliResult};
use crate::format::{create_dir, field_csv, read_file, to_json, write_file};

#[derive(Debug, Clone, Args)]
pub struct TransformArgs {
    /// JSON state: `{"q_min", "q_max", "psi": [[re, im], ...]}` or with
    /// `"rho": [[[re, im], ...], ...]` in place of `psi`.
    #[arg(long)]
    pub state: PathBuf,
    /// Momentum cells; defaults to the number of position samples.
    #[arg(long)]
    pub np: Option<usize>,
    /// Momentum half-range; defaults to `πħ/(2Δq)`, one period of the sum.
    #[arg(long)]
    pub p_max: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    /// Rescale `psi` to unit norm instead of rejecting it.
    #[arg(long)]
    pub normalize: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateDocument {
    q_min: f64,
    q_max: f64,
    psi: Option<Vec<[f64; 2]>>,
    rho: Option<Vec<Vec<[f64; 2]>>>,
}

#[derive(Serialize)]
struct TransformReport {
    n_q: usize,
    n_p: usize,
    q_min: f64,
    q_max: f64,
    p_min: f64,
    p_max: f64,
    total_mass: f64,
    min_value: f64,
    max_value: f64,
    /// Largest imaginary part dropped from the transform sum.
    imaginary_residue: f64,
    /// Max `|∫W dp − ρ(q,q)|` over position cells.
    position_marginal_error: f64,
}

fn complex(pair: &[f64; 2]) -> Complex<f64> {
    Complex::new(pair[0], pair[1])
}

fn grid_for(args: &TransformArgs, doc: &StateDocument, n_q: usize) -> CliResult<Grid64> {
    if n_q < 2 {
        return Err(invalid(format!(
            "state needs at least 2 position samples, got {n_q}"
        )));
    }
    let dq = (doc.q_max - doc.q_min) / n_q as f64;
    let p_max = args
        .p_max
        .unwrap_or(std::f64::consts::PI * args.hbar / (2.0 * dq));
    if !(p_max > 0.0 && p_max.is_finite()) {
        return Err(invalid(format!(
            "--p-max must be positive and finite, got {p_max}"
        )));
    }
    Ok(Grid64::new(
        n_q,
        args.np.unwrap_or(n_q),
        (doc.q_min, doc.q_max),
        (-p_max, p_max),
        args.mass,
        args.hbar,
    )?)
}

pub fn run(args: &TransformArgs, out: &Path) -> CliResult<String> {
    let doc: StateDocument = serde_json::from_str(&read_file(&args.state)?)
        .map_err(|e| invalid(format!("malformed state document: {e}")))?;
    let rho = match (&doc.psi, &doc.rho) {
        (Some(psi), None) => {
            let grid = grid_for(args, &doc, psi.len())?;
            let samples: Vec<_> = psi.iter().map(complex).collect();
            let psi = if args.normalize {
                Wavefunction64::normalized(&grid, samples)?
            } else {
                Wavefunction64::new(&grid, samples)?
            };
            (DensityMatrix::pure(&psi), grid)
        }
        (None, Some(rows)) => {
            let n = rows.len();
            if let Some(i) = rows.iter().position(|r| r.len() != n) {
                return Err(invalid(format!(
                    "rho[{i}]: expected {n} entries, got {}",
                    rows[i].len()
                )));
            }
            let grid = grid_for(args, &doc, n)?;
            let entries = rows.iter().flatten().map(complex).collect();
            (DensityMatrix::new(&grid, entries)?, grid)
        }
        _ => {
            return Err(invalid(
                "state document needs exactly one of 'psi' and 'rho'",
            ))
        }
    };
    let (rho, grid) = rho;
    let (w, residue): (WignerField64, f64) = wigner_transform_with_residue(&rho, &grid)?;

    let (position, _) = w.marginals();
    let position_marginal_error = position
        .iter()
        .zip(rho.diagonal())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let report = TransformReport {
        n_q: grid.n_q(),
        n_p: grid.n_p(),
        q_min: grid.q_axis().min,
        q_max: grid.q_axis().max,
        p_min: grid.p_axis().min,
        p_max: grid.p_axis().max,
        total_mass: w.total_mass(),
        min_value: w.min_value(),
        max_value: w.max_value(),
        imaginary_residue: residue,
        position_marginal_error,
    };
    create_dir(out)?;
    write_file(&out.join("wigner.csv"), &field_csv(&w))?;
    write_file(&out.join("wigner_report.json"), &to_json(&report))?;
    Ok(format!(
        "wrote {}\ntotal mass: {:e}\nminimum: {:e}\n",
        out.join("wigner.csv").display(),
        report.total_mass,
        report.min_value
    ))
}
