//! Position-basis quantum states feeding the Wigner transform.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{abs, Real};

use super::grid::{Axis, PhaseSpaceGrid};

fn tolerance<R: Real>(tol: f64) -> R {
    R::lit(tol).max(R::epsilon() * R::lit(256.0))
}

/// Samples `ψ(q_i)` at the cell centres of a position axis, with
/// `Σ|ψ|² Δq = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Wavefunction<R> {
    axis: Axis<R>,
    samples: Vec<Complex<R>>,
}

impl<R: Real> Wavefunction<R> {
    /// Rejects samples whose norm differs from 1 by more than `1e-10`.
    pub fn new(grid: &PhaseSpaceGrid<R>, samples: Vec<Complex<R>>) -> Result<Self> {
        let axis = *grid.q_axis();
        if samples.len() != axis.n {
            return Err(Error::LengthMismatch {
                what: "wavefunction samples",
                expected: axis.n,
                got: samples.len(),
            });
        }
        let norm = norm_sqr(&samples) * axis.spacing();
        if !(abs(norm - R::one()) <= tolerance(1e-10)) {
            return Err(Error::NotNormalized {
                norm: norm.to_f64_lossy(),
            });
        }
        Ok(Self { axis, samples })
    }

    /// Rescales arbitrary nonzero samples to unit norm.
    pub fn normalized(grid: &PhaseSpaceGrid<R>, mut samples: Vec<Complex<R>>) -> Result<Self> {
        let norm = norm_sqr(&samples) * grid.dq();
        if !(norm > R::zero() && norm.is_finite()) {
            return Err(Error::NotNormalized {
                norm: norm.to_f64_lossy(),
            });
        }
        let scale = norm.sqrt().recip();
        samples.iter_mut().for_each(|z| *z = z.scale(scale));
        Self::new(grid, samples)
    }

    /// Samples `f(q)` at the cell centres and normalizes.
    pub fn from_fn(grid: &PhaseSpaceGrid<R>, f: impl Fn(R) -> Complex<R>) -> Result<Self> {
        let samples = grid.q_axis().centers().into_iter().map(f).collect();
        Self::normalized(grid, samples)
    }

    pub fn axis(&self) -> &Axis<R> {
        &self.axis
    }

    pub fn samples(&self) -> &[Complex<R>] {
        &self.samples
    }

    /// `|ψ(q_i)|²`.
    pub fn density(&self) -> Vec<R> {
        self.samples.iter().map(Complex::norm_sqr).collect()
    }
}

fn norm_sqr<R: Real>(samples: &[Complex<R>]) -> R {
    samples.iter().fold(R::zero(), |acc, z| acc + z.norm_sqr())
}

/// `ρ(q_i, q_j)` on a position axis: Hermitian, `tr ρ · Δq = 1`, and
/// positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<R> {
    axis: Axis<R>,
    entries: Vec<Complex<R>>,
}

impl<R: Real> DensityMatrix<R> {
    /// `entries` is row-major `n_q × n_q`.
    pub fn new(grid: &PhaseSpaceGrid<R>, entries: Vec<Complex<R>>) -> Result<Self> {
        let axis = *grid.q_axis();
        let n = axis.n;
        if entries.len() != n * n {
            return Err(Error::LengthMismatch {
                what: "density matrix entries",
                expected: n * n,
                got: entries.len(),
            });
        }
        let rho = Self { axis, entries };

        let deviation = rho.hermiticity_defect();
        if !(deviation <= tolerance(1e-10)) {
            return Err(Error::NotHermitian {
                deviation: deviation.to_f64_lossy(),
            });
        }
        let trace = (0..n).fold(R::zero(), |acc, i| acc + rho.get(i, i).re) * axis.spacing();
        if !(abs(trace - R::one()) <= tolerance(1e-8)) {
            return Err(Error::BadTrace {
                trace: trace.to_f64_lossy(),
            });
        }
        if !rho.shifted_cholesky_succeeds(tolerance(1e-8)) {
            return Err(Error::NotPositive);
        }
        Ok(rho)
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn pure(psi: &Wavefunction<R>) -> Self {
        let s = psi.samples();
        let entries = s
            .iter()
            .flat_map(|a| s.iter().map(move |b| *a * b.conj()))
            .collect();
        Self {
            axis: psi.axis,
            entries,
        }
    }

    /// `Σ_k w_k |ψ_k⟩⟨ψ_k|` with nonnegative weights summing to one.
    pub fn mixture(grid: &PhaseSpaceGrid<R>, components: &[(R, &Wavefunction<R>)]) -> Result<Self> {
        let n = grid.n_q();
        let mut entries = vec![Complex::new(R::zero(), R::zero()); n * n];
        for (w, psi) in components {
            if *w < R::zero() {
                return Err(Error::NotPositive);
            }
            if !psi.axis.matches(grid.q_axis()) {
                return Err(Error::LengthMismatch {
                    what: "wavefunction samples",
                    expected: n,
                    got: psi.samples.len(),
                });
            }
            let pure = Self::pure(psi);
            for (e, x) in entries.iter_mut().zip(&pure.entries) {
                *e = *e + x.scale(*w);
            }
        }
        Self::new(grid, entries)
    }

    pub fn axis(&self) -> &Axis<R> {
        &self.axis
    }

    pub fn dim(&self) -> usize {
        self.axis.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<R> {
        self.entries[i * self.axis.n + j]
    }

    pub fn diagonal(&self) -> Vec<R> {
        (0..self.axis.n).map(|i| self.get(i, i).re).collect()
    }

    fn hermiticity_defect(&self) -> R {
        let n = self.axis.n;
        let mut worst = R::zero();
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// Cholesky factorisation of `ρ + shift·I`; succeeds exactly when the
    /// smallest eigenvalue exceeds `-shift`.
    fn shifted_cholesky_succeeds(&self, shift: R) -> bool {
        let n = self.axis.n;
        let mut l = vec![Complex::new(R::zero(), R::zero()); n * n];
        for j in 0..n {
            let mut diag = self.get(j, j).re + shift;
            for k in 0..j {
                diag = diag - l[j * n + k].norm_sqr();
            }
            if !(diag > R::zero()) {
                return false;
            }
            let d = diag.sqrt();
            l[j * n + j] = Complex::new(d, R::zero());
            for i in (j + 1)..n {
                let mut s = self.get(i, j);
                for k in 0..j {
                    s = s - l[i * n + k] * l[j * n + k].conj();
                }
                l[i * n + j] = s.unscale(d);
            }
        }
        true
    }
}
