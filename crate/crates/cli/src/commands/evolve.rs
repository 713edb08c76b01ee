use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use num_complex::Complex;
use serde::Serialize;
use whn_core::phase_map::grid_from_boundary;
use whn_core::spectral::{evolve, wigner_transform_pure};
use whn_core::{Grid64, PhaseMap, Wavefunction64, WignerField64};

use crate::error::{invalid, CliResult};
use crate::format::{create_dir, field_csv, to_json, write_file};

use super::load_hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PhysicalState {
    /// Centred Gaussian `ψ(q) ∝ exp(−q²/2σ²)`.
    Gaussian,
}

#[derive(Debug, Clone, Args)]
pub struct EvolveArgs {
    /// Hypergraph document; not used with --physical.
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 64)]
    pub nq: usize,
    #[arg(long, default_value_t = 64)]
    pub np: usize,
    #[arg(long, default_value_t = 0.01)]
    pub dt: f64,
    /// Number of steps; with --physical it is derived from --t.
    #[arg(long, conflicts_with = "t")]
    pub steps: Option<usize>,
    /// Keep every J-th step (0 keeps only the final state).
    #[arg(long, default_value_t = 1)]
    pub snapshot_every: usize,
    /// Relative padding of the grid beyond the largest weight and degree.
    #[arg(long, default_value_t = 0.25)]
    pub margin: f64,
    /// Wavenumber of every hyperedge's plane wave.
    #[arg(long, default_value_t = 1.0)]
    pub k_default: f64,
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    /// Evolve a test state instead of a hypergraph field.
    #[arg(long, value_enum, requires = "t")]
    pub physical: Option<PhysicalState>,
    /// Gaussian width σ.
    #[arg(long, default_value_t = 1.0)]
    pub sigma: f64,
    /// Total time for --physical runs.
    #[arg(long, requires = "physical")]
    pub t: Option<f64>,
    /// Half-width L of the [−L, L]² grid for --physical runs.
    #[arg(long, default_value_t = 8.0)]
    pub extent: f64,
}

const DEFAULT_STEPS: usize = 10;

fn positive(name: &str, x: f64) -> CliResult<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!(
            "--{name} must be positive and finite, got {x}"
        )))
    }
}

impl EvolveArgs {
    /// Checks every numeric constraint before any work is done and returns
    /// the step count.
    fn validate(&self) -> CliResult<usize> {
        if self.nq < 2 || self.np < 2 {
            return Err(invalid(format!(
                "--nq and --np must be at least 2, got {} and {}",
                self.nq, self.np
            )));
        }
        if !(self.dt.is_finite() && self.dt != 0.0) {
            return Err(invalid(format!(
                "--dt must be finite and nonzero, got {}",
                self.dt
            )));
        }
        positive("mass", self.mass)?;
        positive("hbar", self.hbar)?;
        if !(self.margin >= 0.0 && self.margin.is_finite()) {
            return Err(invalid(format!(
                "--margin must be nonnegative, got {}",
                self.margin
            )));
        }
        if !self.k_default.is_finite() {
            return Err(invalid("--k-default must be finite"));
        }
        let steps = match (self.physical, self.t) {
            (Some(_), Some(t)) => {
                positive("t", t)?;
                positive("sigma", self.sigma)?;
                positive("extent", self.extent)?;
                let steps = (t / self.dt).round();
                if steps < 1.0 || (steps * self.dt - t).abs() > 1e-9 * t {
                    return Err(invalid(format!(
                        "--t {t} is not a whole number of --dt {} steps",
                        self.dt
                    )));
                }
                steps as usize
            }
            _ => self.steps.unwrap_or(DEFAULT_STEPS),
        };
        if steps == 0 {
            return Err(invalid("--steps must be at least 1"));
        }
        Ok(steps)
    }
}

#[derive(Serialize)]
struct GridInfo {
    n_q: usize,
    n_p: usize,
    q_min: f64,
    q_max: f64,
    p_min: f64,
    p_max: f64,
    dq: f64,
    dp: f64,
    mass: f64,
    hbar: f64,
}

impl From<&Grid64> for GridInfo {
    fn from(g: &Grid64) -> Self {
        Self {
            n_q: g.n_q(),
            n_p: g.n_p(),
            q_min: g.q_axis().min,
            q_max: g.q_axis().max,
            p_min: g.p_axis().min,
            p_max: g.p_axis().max,
            dq: g.dq(),
            dp: g.dp(),
            mass: g.mass(),
            hbar: g.hbar(),
        }
    }
}

#[derive(Serialize)]
struct SnapshotInfo {
    file: String,
    step: usize,
    time: f64,
    mass: f64,
}

#[derive(Serialize)]
struct HypergraphMapping {
    k_default: f64,
    momentum_rows: Vec<usize>,
    degree_source: &'static str,
    position_columns: Vec<usize>,
}

#[derive(Serialize)]
struct ShearCheck {
    sigma: f64,
    t: f64,
    error_file: String,
    max_error: f64,
}

#[derive(Serialize)]
struct Metadata {
    mode: &'static str,
    grid: GridInfo,
    dt: f64,
    steps: usize,
    snapshot_every: usize,
    initial_mass: f64,
    /// Largest `|mass(t) − mass(0)|` over snapshots, divided by
    /// `max(|mass(0)|, Σ|W₀| Δq Δp)` so signed carrier fields stay meaningful.
    mass_drift: f64,
    snapshots: Vec<SnapshotInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mapping: Option<HypergraphMapping>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shear: Option<ShearCheck>,
}

/// Closed-form Wigner function of the Gaussian above.
fn gaussian_wigner(q: f64, p: f64, sigma: f64, hbar: f64) -> f64 {
    (-(q * q) / (sigma * sigma) - (sigma * p / hbar).powi(2)).exp() / (std::f64::consts::PI * hbar)
}

/// Maps `x` into `[min, max)` by whole periods.
fn wrap(x: f64, min: f64, max: f64) -> f64 {
    min + (x - min).rem_euclid(max - min)
}

fn physical_initial(args: &EvolveArgs) -> CliResult<WignerField64> {
    let l = args.extent;
    let grid = Grid64::new(args.nq, args.np, (-l, l), (-l, l), args.mass, args.hbar)?;
    let sigma = args.sigma;
    let psi = Wavefunction64::normalized(
        &grid,
        (0..args.nq)
            .map(|i| {
                let q = grid.q(i);
                Complex::new((-(q * q) / (2.0 * sigma * sigma)).exp(), 0.0)
            })
            .collect(),
    )?;
    Ok(wigner_transform_pure(&psi, &grid)?)
}

pub fn run(args: &EvolveArgs, out: &Path) -> CliResult<String> {
    let steps = args.validate()?;
    let (initial, mapping, mode) = match args.physical {
        Some(PhysicalState::Gaussian) => (physical_initial(args)?, None, "physical-gaussian"),
        None => {
            let input = args.input.as_ref().ok_or_else(|| {
                invalid("a hypergraph document is required unless --physical is given")
            })?;
            let h = load_hypergraph(input)?;
            let grid = grid_from_boundary(&h, args.nq, args.np, args.margin, args.mass, args.hbar)?;
            let map = PhaseMap::new(&h, grid);
            let field = map.initial_field(args.k_default, None)?;
            let mapping = HypergraphMapping {
                k_default: args.k_default,
                momentum_rows: map.momentum_rows.clone(),
                degree_source: match map.degree_source() {
                    whn_core::DegreeSource::VertexDegree => "vertex_degree",
                    whn_core::DegreeSource::EdgeDegree => "edge_degree",
                },
                position_columns: map.position_cols.columns.clone(),
            };
            (field, Some(mapping), "hypergraph")
        }
    };

    let snapshots = evolve(&initial, args.dt, steps, args.snapshot_every)?;
    let grid = *initial.grid();
    let dir = out.join("snapshots");
    create_dir(&dir)?;

    let m0 = initial.total_mass();
    let l1: f64 = initial.values().iter().map(|x| x.abs()).sum::<f64>() * grid.cell_area();
    let scale = m0.abs().max(l1);
    let mut infos = Vec::with_capacity(snapshots.len());
    let mut drift = 0.0f64;
    for (k, snap) in snapshots.iter().enumerate() {
        let step = if args.snapshot_every > 0 && k + 1 < snapshots.len() {
            (k + 1) * args.snapshot_every
        } else {
            steps
        };
        let file = format!("snapshot_{step:06}.csv");
        write_file(&dir.join(&file), &field_csv(snap))?;
        let mass = snap.total_mass();
        if scale > 0.0 {
            drift = drift.max((mass - m0).abs() / scale);
        }
        infos.push(SnapshotInfo {
            file: format!("snapshots/{file}"),
            step,
            time: snap.time(),
            mass,
        });
    }

    let shear = match (args.physical, args.t) {
        (Some(PhysicalState::Gaussian), Some(t)) => {
            let last = snapshots.last().expect("at least one snapshot");
            let (q_min, q_max) = (grid.q_axis().min, grid.q_axis().max);
            let exact = WignerField64::from_fn(grid, last.kind(), |q: f64, p: f64| {
                gaussian_wigner(
                    wrap(q - p * last.time() / grid.mass(), q_min, q_max),
                    p,
                    args.sigma,
                    grid.hbar(),
                )
            });
            let error = last.combine(1.0, &exact, -1.0)?;
            write_file(&out.join("shear_error.csv"), &field_csv(&error))?;
            Some(ShearCheck {
                sigma: args.sigma,
                t,
                error_file: "shear_error.csv".into(),
                max_error: last.max_abs_diff(&exact),
            })
        }
        _ => None,
    };

    let metadata = Metadata {
        mode,
        grid: GridInfo::from(&grid),
        dt: args.dt,
        steps,
        snapshot_every: args.snapshot_every,
        initial_mass: m0,
        mass_drift: drift,
        snapshots: infos,
        mapping,
        shear,
    };
    write_file(&out.join("metadata.json"), &to_json(&metadata))?;

    let mut summary = format!(
        "{} steps of dt {}: {} snapshots in {}\nmass drift: {:e}\n",
        steps,
        args.dt,
        metadata.snapshots.len(),
        dir.display(),
        drift
    );
    if let Some(s) = &metadata.shear {
        summary.push_str(&format!("max error vs analytic shear: {:e}\n", s.max_error));
    }
    Ok(summary)
}
