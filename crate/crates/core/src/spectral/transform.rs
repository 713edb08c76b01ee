//! Discrete Wigner transform.
//!
//! `W(q_i, p_j) = Δq/(πħ) Σ_s ρ(q_{i+s}, q_{i−s}) exp(−2i p_j s Δq / ħ)`
//! over every offset with both `i ± s` inside the grid. Indices are not
//! wrapped: on a periodic axis each pair of points has two midpoints, and
//! wrapping would paint a ghost copy of the state half a period away.
//!
//! The sum is periodic in `p` with period `πħ/Δq`; momentum grids wider
//! than that count the same content twice in the position marginal.

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{abs, Real};

use super::field::{FieldKind, WignerField};
use super::grid::PhaseSpaceGrid;
use super::state::{DensityMatrix, Wavefunction};

/// Transforms a density matrix. The imaginary residue of the sum is dropped.
pub fn wigner_transform<R: Real>(
    rho: &DensityMatrix<R>,
    grid: &PhaseSpaceGrid<R>,
) -> Result<WignerField<R>> {
    wigner_transform_with_residue(rho, grid).map(|(w, _)| w)
}

/// As [`wigner_transform`], also returning the largest discarded imaginary part.
pub fn wigner_transform_with_residue<R: Real>(
    rho: &DensityMatrix<R>,
    grid: &PhaseSpaceGrid<R>,
) -> Result<(WignerField<R>, R)> {
    check_axis(rho.axis(), grid)?;
    Ok(transform(grid, |a, b| rho.get(a, b)))
}

/// Pure-state path: builds `ψ(q_a) ψ*(q_b)` on the fly instead of storing `ρ`.
pub fn wigner_transform_pure<R: Real>(
    psi: &Wavefunction<R>,
    grid: &PhaseSpaceGrid<R>,
) -> Result<WignerField<R>> {
    check_axis(psi.axis(), grid)?;
    let s = psi.samples();
    Ok(transform(grid, |a, b| s[a] * s[b].conj()).0)
}

fn check_axis<R: Real>(axis: &super::grid::Axis<R>, grid: &PhaseSpaceGrid<R>) -> Result<()> {
    if axis.n != grid.n_q() {
        return Err(Error::LengthMismatch {
            what: "position samples",
            expected: grid.n_q(),
            got: axis.n,
        });
    }
    if !axis.matches(grid.q_axis()) {
        return Err(Error::InvalidGrid(
            "state position axis differs from the grid's position axis".into(),
        ));
    }
    Ok(())
}

fn transform<R: Real>(
    grid: &PhaseSpaceGrid<R>,
    rho: impl Fn(usize, usize) -> Complex<R> + Sync,
) -> (WignerField<R>, R) {
    let (n_q, n_p) = (grid.n_q(), grid.n_p());
    let max_reach = (n_q - 1) / 2;

    // phase[j][s] = exp(-2i p_j s Δq / ħ) for s = 0..=max_reach
    let two_dq_over_hbar = R::lit(2.0) * grid.dq() / grid.hbar();
    let phase: Vec<Vec<Complex<R>>> = (0..n_p)
        .map(|j| {
            let theta = grid.p(j) * two_dq_over_hbar;
            (0..=max_reach)
                .map(|s| Complex::from_polar(R::one(), -theta * R::from_index(s)))
                .collect()
        })
        .collect();
    let prefactor = grid.dq() / (R::PI() * grid.hbar());

    let columns: Vec<(Vec<R>, R)> = (0..n_q)
        .into_par_iter()
        .map(|i| {
            let reach = i.min(n_q - 1 - i);
            let plus: Vec<Complex<R>> = (0..=reach).map(|s| rho(i + s, i - s)).collect();
            let minus: Vec<Complex<R>> = (0..=reach).map(|s| rho(i - s, i + s)).collect();
            let mut column = Vec::with_capacity(n_p);
            let mut residue = R::zero();
            for row in &phase {
                let mut acc = plus[0];
                for s in 1..=reach {
                    acc = acc + plus[s] * row[s] + minus[s] * row[s].conj();
                }
                residue = residue.max(abs(acc.im * prefactor));
                column.push(acc.re * prefactor);
            }
            (column, residue)
        })
        .collect();

    let mut values = vec![R::zero(); n_q * n_p];
    let mut residue = R::zero();
    for (i, (column, r)) in columns.into_iter().enumerate() {
        residue = residue.max(r);
        for (j, v) in column.into_iter().enumerate() {
            values[j * n_q + i] = v;
        }
    }
    let field = WignerField::from_values(*grid, values, R::zero(), FieldKind::Physical)
        .expect("transform output has grid shape and finite samples");
    (field, residue)
}
