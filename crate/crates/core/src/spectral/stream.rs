//! Split-step spectral advection of Wigner fields.
//!
//! Each slice is transformed along its own axis, every Fourier mode is
//! multiplied by a unit-modulus phase and the slice is transformed back.
//! Slices are independent and processed in parallel; the zero mode is never
//! touched, so slice sums are conserved.

use std::sync::Arc;

use num_complex::Complex;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::field::WignerField;

/// Plans a forward/inverse pair of length `n`.
struct SpectralShifter<R: Real> {
    forward: Arc<dyn Fft<R>>,
    inverse: Arc<dyn Fft<R>>,
    wavenumbers: Vec<R>,
}

impl<R: Real> SpectralShifter<R> {
    fn new(n: usize, wavenumbers: Vec<R>) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            forward: planner.plan_fft_forward(n),
            inverse: planner.plan_fft_inverse(n),
            wavenumbers,
        }
    }

    /// Replaces `slice` by its trigonometric interpolant evaluated at
    /// `x − shift`. A zero shift leaves the slice bit-identical.
    fn shift(&self, slice: &mut [R], shift: R) {
        if shift == R::zero() {
            return;
        }
        let n = slice.len();
        let mut buf: Vec<Complex<R>> = slice.iter().map(|&x| Complex::new(x, R::zero())).collect();
        self.forward.process(&mut buf);
        for (c, &k) in buf.iter_mut().zip(&self.wavenumbers) {
            *c = *c * Complex::from_polar(R::one(), -k * shift);
        }
        self.inverse.process(&mut buf);
        let norm = R::from_index(n).recip();
        for (x, c) in slice.iter_mut().zip(&buf) {
            *x = c.re * norm;
        }
    }
}

fn check_dt<R: Real>(dt: R) -> Result<()> {
    if dt.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFiniteStep)
    }
}

/// Advances `∂W/∂t = −(p/m) ∂W/∂q` by `dt`: every momentum row is shifted
/// along the periodic position axis by `p_j dt / m`. Negative `dt` runs
/// backwards.
pub fn free_stream_step<R: Real>(w: &WignerField<R>, dt: R) -> Result<WignerField<R>> {
    check_dt(dt)?;
    let grid = *w.grid();
    let n_q = grid.n_q();
    let shifter = SpectralShifter::new(n_q, grid.q_axis().wavenumbers());
    let mut values = w.values().to_vec();
    values
        .par_chunks_mut(n_q)
        .enumerate()
        .for_each(|(j, row)| shifter.shift(row, grid.p(j) * dt / grid.mass()));
    Ok(w.with_values(values, w.time() + dt))
}

/// Shifts every position column along the periodic momentum axis by
/// `force[i] · dt`, the momentum half of a split step. Under zero force
/// this is the identity.
pub fn vertical_step<R: Real>(w: &WignerField<R>, dt: R, force: &[R]) -> Result<WignerField<R>> {
    check_dt(dt)?;
    let grid = *w.grid();
    let (n_q, n_p) = (grid.n_q(), grid.n_p());
    if force.len() != n_q {
        return Err(Error::LengthMismatch {
            what: "force samples",
            expected: n_q,
            got: force.len(),
        });
    }
    let shifter = SpectralShifter::new(n_p, grid.p_axis().wavenumbers());
    let columns: Vec<Vec<R>> = (0..n_q)
        .into_par_iter()
        .map(|i| {
            let mut column = w.column(i);
            shifter.shift(&mut column, force[i] * dt);
            column
        })
        .collect();
    let mut values = vec![R::zero(); n_q * n_p];
    for (i, column) in columns.into_iter().enumerate() {
        for (j, v) in column.into_iter().enumerate() {
            values[j * n_q + i] = v;
        }
    }
    Ok(w.with_values(values, w.time()))
}

/// Runs `steps` split steps of size `dt` with zero force. Returns the state
/// after every `snapshot_every`-th step plus the final state (once). A
/// cadence of 0 keeps only the final state.
pub fn evolve<R: Real>(
    w: &WignerField<R>,
    dt: R,
    steps: usize,
    snapshot_every: usize,
) -> Result<Vec<WignerField<R>>> {
    check_dt(dt)?;
    if steps == 0 {
        return Err(Error::NoSteps);
    }
    let zero_force = vec![R::zero(); w.grid().n_q()];
    let mut current = w.clone();
    let mut snapshots = Vec::new();
    for step in 1..=steps {
        current = free_stream_step(&current, dt)?;
        current = vertical_step(&current, dt, &zero_force)?;
        if step == steps || (snapshot_every > 0 && step % snapshot_every == 0) {
            snapshots.push(current.clone());
        }
    }
    Ok(snapshots)
}

#[cfg(test)]
mod tests {
    use super::super::field::FieldKind;
    use super::super::grid::PhaseSpaceGrid;
    use super::*;

    fn grid() -> PhaseSpaceGrid<f64> {
        PhaseSpaceGrid::new(32, 16, (-4.0, 4.0), (-2.0, 2.0), 1.0, 1.0).unwrap()
    }

    fn bump() -> WignerField<f64> {
        WignerField::from_fn(grid(), FieldKind::Physical, |q, p| {
            (-(q - 0.5).powi(2) - p * p).exp()
        })
    }

    #[test]
    fn zero_dt_is_identity() {
        let w = bump();
        assert_eq!(free_stream_step(&w, 0.0).unwrap().values(), w.values());
        assert_eq!(
            vertical_step(&w, 0.0, &[3.0; 32]).unwrap().values(),
            w.values()
        );
        assert_eq!(
            vertical_step(&w, 0.7, &[0.0; 32]).unwrap().values(),
            w.values()
        );
    }

    #[test]
    fn time_advances() {
        let w = free_stream_step(&bump(), 0.25).unwrap();
        assert_eq!(w.time(), 0.25);
        let w = free_stream_step(&w, -0.5).unwrap();
        assert_eq!(w.time(), -0.25);
    }

    #[test]
    fn rejects_bad_arguments() {
        let w = bump();
        assert_eq!(free_stream_step(&w, f64::NAN), Err(Error::NonFiniteStep));
        assert!(matches!(
            vertical_step(&w, 0.1, &[0.0; 3]),
            Err(Error::LengthMismatch { .. })
        ));
        assert_eq!(evolve(&w, 0.1, 0, 1), Err(Error::NoSteps));
    }

    #[test]
    fn single_column_force_shift() {
        let g = grid();
        let w = bump();
        let mut force = vec![0.0; 32];
        force[7] = 2.0 * g.dp() / 0.5;
        let out = vertical_step(&w, 0.5, &force).unwrap();
        let before = w.column(7);
        let after = out.column(7);
        for j in 0..16 {
            assert!((after[(j + 2) % 16] - before[j]).abs() < 1e-12);
        }
        assert_eq!(out.column(6), w.column(6));
    }

    #[test]
    fn snapshot_cadence() {
        let w = bump();
        let snaps = evolve(&w, 0.1, 10, 3).unwrap();
        let times: Vec<f64> = snaps.iter().map(|s| (s.time() * 10.0).round()).collect();
        assert_eq!(times, vec![3.0, 6.0, 9.0, 10.0]);
        assert_eq!(evolve(&w, 0.1, 4, 0).unwrap().len(), 1);
        let one = evolve(&w, 0.1, 1, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0], free_stream_step(&w, 0.1).unwrap());
    }
}
