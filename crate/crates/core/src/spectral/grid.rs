use crate::error::{Error, Result};
use crate::scalar::{abs, Real};

/// A uniform, periodic axis of `n` cells over `[min, max)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis<R> {
    pub n: usize,
    pub min: R,
    pub max: R,
}

impl<R: Real> Axis<R> {
    fn new(name: &str, n: usize, (min, max): (R, R)) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGrid(format!(
                "{name} needs at least 2 cells, got {n}"
            )));
        }
        if !(min.is_finite() && max.is_finite()) || !(max > min) {
            return Err(Error::InvalidGrid(format!(
                "{name} bounds must be finite and increasing, got [{min}, {max}]"
            )));
        }
        Ok(Self { n, min, max })
    }

    pub fn length(&self) -> R {
        self.max - self.min
    }

    pub fn spacing(&self) -> R {
        self.length() / R::from_index(self.n)
    }

    /// Centre of cell `i`: `min + (i + ½) Δ`.
    pub fn center(&self, i: usize) -> R {
        self.min + (R::from_index(i) + R::lit(0.5)) * self.spacing()
    }

    pub fn centers(&self) -> Vec<R> {
        (0..self.n).map(|i| self.center(i)).collect()
    }

    /// Angular wavenumbers of the DFT modes in FFT order.
    pub fn wavenumbers(&self) -> Vec<R> {
        let two_pi_over_len = R::TAU() / self.length();
        (0..self.n)
            .map(|f| {
                let signed = if f < self.n.div_ceil(2) {
                    R::from_index(f)
                } else {
                    -R::from_index(self.n - f)
                };
                signed * two_pi_over_len
            })
            .collect()
    }

    /// Index of the cell whose centre is nearest `x`, clamped to the axis.
    /// Exact midpoints go to the lower index.
    pub fn nearest(&self, x: R) -> usize {
        let pos = (x - self.min) / self.spacing() - R::lit(0.5);
        let idx = (pos - R::lit(0.5)).ceil();
        if idx <= R::zero() {
            0
        } else {
            idx.to_usize().unwrap_or(usize::MAX).min(self.n - 1)
        }
    }

    /// Same cell count and bounds within a relative tolerance.
    pub fn matches(&self, other: &Self) -> bool {
        let tol = R::lit(1e-12).max(R::epsilon() * R::lit(16.0)) * self.length();
        self.n == other.n && abs(self.min - other.min) <= tol && abs(self.max - other.max) <= tol
    }
}

/// Δq × Δp lattice with periodic position (and momentum) axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSpaceGrid<R> {
    q: Axis<R>,
    p: Axis<R>,
    mass: R,
    hbar: R,
}

impl<R: Real> PhaseSpaceGrid<R> {
    pub fn new(
        n_q: usize,
        n_p: usize,
        q_bounds: (R, R),
        p_bounds: (R, R),
        mass: R,
        hbar: R,
    ) -> Result<Self> {
        let q = Axis::new("position axis", n_q, q_bounds)?;
        let p = Axis::new("momentum axis", n_p, p_bounds)?;
        if !(mass > R::zero() && mass.is_finite()) {
            return Err(Error::InvalidGrid(format!(
                "mass must be positive, got {mass}"
            )));
        }
        if !(hbar > R::zero() && hbar.is_finite()) {
            return Err(Error::InvalidGrid(format!(
                "hbar must be positive, got {hbar}"
            )));
        }
        Ok(Self { q, p, mass, hbar })
    }

    pub fn q_axis(&self) -> &Axis<R> {
        &self.q
    }

    pub fn p_axis(&self) -> &Axis<R> {
        &self.p
    }

    pub fn n_q(&self) -> usize {
        self.q.n
    }

    pub fn n_p(&self) -> usize {
        self.p.n
    }

    pub fn dq(&self) -> R {
        self.q.spacing()
    }

    pub fn dp(&self) -> R {
        self.p.spacing()
    }

    pub fn q(&self, i: usize) -> R {
        self.q.center(i)
    }

    pub fn p(&self, j: usize) -> R {
        self.p.center(j)
    }

    pub fn mass(&self) -> R {
        self.mass
    }

    pub fn hbar(&self) -> R {
        self.hbar
    }

    pub fn cell_area(&self) -> R {
        self.dq() * self.dp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_cells() {
        let g = PhaseSpaceGrid::new(4, 4, (0.0, 4.0), (0.0, 4.0), 1.0, 1.0).unwrap();
        assert_eq!(g.dq(), 1.0);
        assert_eq!(g.dp(), 1.0);
        assert_eq!((g.q(0), g.p(0)), (0.5, 0.5));
        assert_eq!(g.q_axis().centers(), vec![0.5, 1.5, 2.5, 3.5]);
    }

    #[test]
    fn fine_grid() {
        let g = PhaseSpaceGrid::new(256, 256, (-8.0, 8.0), (-8.0, 8.0), 1.0, 1.0).unwrap();
        assert_eq!(g.dq(), 1.0 / 16.0);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = [
            PhaseSpaceGrid::new(1, 4, (0.0, 1.0), (0.0, 1.0), 1.0, 1.0),
            PhaseSpaceGrid::new(4, 0, (0.0, 1.0), (0.0, 1.0), 1.0, 1.0),
            PhaseSpaceGrid::new(4, 4, (1.0, 0.0), (0.0, 1.0), 1.0, 1.0),
            PhaseSpaceGrid::new(4, 4, (0.0, 1.0), (0.0, f64::NAN), 1.0, 1.0),
            PhaseSpaceGrid::new(4, 4, (0.0, 1.0), (0.0, 1.0), 0.0, 1.0),
            PhaseSpaceGrid::new(4, 4, (0.0, 1.0), (0.0, 1.0), 1.0, -1.0),
        ];
        assert!(bad.iter().all(|g| matches!(g, Err(Error::InvalidGrid(_)))));
    }

    #[test]
    fn wavenumbers_in_fft_order() {
        let a = Axis::new("q", 4, (0.0, std::f64::consts::TAU)).unwrap();
        assert_eq!(a.wavenumbers(), vec![0.0, 1.0, -2.0, -1.0]);
        let a = Axis::new("q", 5, (0.0, std::f64::consts::TAU)).unwrap();
        assert_eq!(a.wavenumbers(), vec![0.0, 1.0, 2.0, -2.0, -1.0]);
    }

    #[test]
    fn nearest_center_rounds_ties_down() {
        let a = Axis::new("p", 15, (0.0, 3.75)).unwrap();
        assert_eq!(a.nearest(1.0), 3);
        assert_eq!(a.nearest(2.0), 7);
        assert_eq!(a.nearest(3.0), 11);
        assert_eq!(a.nearest(1.1), 4);
        assert_eq!(a.nearest(-5.0), 0);
        assert_eq!(a.nearest(100.0), 14);
    }
}
