use crate::error::{Error, Result};
use crate::scalar::{abs, Real};

use super::grid::PhaseSpaceGrid;

/// Whether a field came from a quantum state or is a slice carrier built
/// from plane waves. Carrier fields are not held to unit mass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Physical,
    Carrier,
}

/// Real quasiprobability sampled on a [`PhaseSpaceGrid`].
///
/// Storage is row-major with one row per momentum cell (row 0 is `p_min`)
/// and one column per position cell.
#[derive(Debug, Clone, PartialEq)]
pub struct WignerField<R> {
    grid: PhaseSpaceGrid<R>,
    values: Vec<R>,
    time: R,
    kind: FieldKind,
}

impl<R: Real> WignerField<R> {
    pub fn zeros(grid: PhaseSpaceGrid<R>, kind: FieldKind) -> Self {
        Self {
            values: vec![R::zero(); grid.n_q() * grid.n_p()],
            grid,
            time: R::zero(),
            kind,
        }
    }

    pub fn from_values(
        grid: PhaseSpaceGrid<R>,
        values: Vec<R>,
        time: R,
        kind: FieldKind,
    ) -> Result<Self> {
        let expected = grid.n_q() * grid.n_p();
        if values.len() != expected {
            return Err(Error::LengthMismatch {
                what: "field samples",
                expected,
                got: values.len(),
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid(
                "field contains non-finite samples".into(),
            ));
        }
        Ok(Self {
            grid,
            values,
            time,
            kind,
        })
    }

    /// Samples `f(q, p)` at every cell centre.
    pub fn from_fn(grid: PhaseSpaceGrid<R>, kind: FieldKind, f: impl Fn(R, R) -> R) -> Self {
        let mut values = Vec::with_capacity(grid.n_q() * grid.n_p());
        for j in 0..grid.n_p() {
            let p = grid.p(j);
            for i in 0..grid.n_q() {
                values.push(f(grid.q(i), p));
            }
        }
        Self {
            grid,
            values,
            time: R::zero(),
            kind,
        }
    }

    pub(crate) fn with_values(&self, values: Vec<R>, time: R) -> Self {
        Self {
            grid: self.grid,
            values,
            time,
            kind: self.kind,
        }
    }

    pub fn grid(&self) -> &PhaseSpaceGrid<R> {
        &self.grid
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn time(&self) -> R {
        self.time
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn get(&self, row: usize, col: usize) -> R {
        self.values[row * self.grid.n_q() + col]
    }

    /// Fixed-momentum slice `j`.
    pub fn row(&self, j: usize) -> &[R] {
        let n_q = self.grid.n_q();
        &self.values[j * n_q..(j + 1) * n_q]
    }

    /// Fixed-position slice `i`, ordered by increasing momentum.
    pub fn column(&self, i: usize) -> Vec<R> {
        (0..self.grid.n_p()).map(|j| self.get(j, i)).collect()
    }

    /// `(position marginal, momentum marginal)`: column sums times Δp and
    /// row sums times Δq.
    pub fn marginals(&self) -> (Vec<R>, Vec<R>) {
        let (n_q, n_p) = (self.grid.n_q(), self.grid.n_p());
        let mut position = vec![R::zero(); n_q];
        let mut momentum = vec![R::zero(); n_p];
        for (j, total) in momentum.iter_mut().enumerate() {
            for (i, &v) in self.row(j).iter().enumerate() {
                position[i] = position[i] + v;
                *total = *total + v;
            }
        }
        let (dq, dp) = (self.grid.dq(), self.grid.dp());
        position.iter_mut().for_each(|x| *x = *x * dp);
        momentum.iter_mut().for_each(|x| *x = *x * dq);
        (position, momentum)
    }

    /// `ΣΣ W Δq Δp`.
    pub fn total_mass(&self) -> R {
        self.values.iter().fold(R::zero(), |acc, &v| acc + v) * self.grid.cell_area()
    }

    pub fn min_value(&self) -> R {
        self.values.iter().fold(R::infinity(), |acc, &v| acc.min(v))
    }

    pub fn max_value(&self) -> R {
        self.values
            .iter()
            .fold(R::neg_infinity(), |acc, &v| acc.max(v))
    }

    pub fn scaled(&self, c: R) -> Self {
        self.with_values(self.values.iter().map(|&v| c * v).collect(), self.time)
    }

    /// `a·self + b·other` on the same grid. Time and kind follow `self`.
    pub fn combine(&self, a: R, other: &Self, b: R) -> Result<Self> {
        if self.values.len() != other.values.len() {
            return Err(Error::LengthMismatch {
                what: "field samples",
                expected: self.values.len(),
                got: other.values.len(),
            });
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&x, &y)| a * x + b * y)
            .collect();
        Ok(self.with_values(values, self.time))
    }

    /// Largest absolute pointwise difference.
    pub fn max_abs_diff(&self, other: &Self) -> R {
        self.values
            .iter()
            .zip(&other.values)
            .fold(R::zero(), |acc, (&x, &y)| acc.max(abs(x - y)))
    }
}

/// Slice orientation: horizontal = fixed momentum row, vertical = fixed position column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// Plane wave carried by a single slice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SliceWave<R> {
    pub wavenumber: R,
    /// Angular frequency `ω = k p / m` on a horizontal slice, zero on a vertical one.
    pub angular_frequency: R,
    pub slice: usize,
    pub orientation: Orientation,
}

impl<R: Real> SliceWave<R> {
    /// Wave along `q` on momentum row `row`, with the free-streaming dispersion.
    pub fn horizontal(grid: &PhaseSpaceGrid<R>, row: usize, wavenumber: R) -> Result<Self> {
        if row >= grid.n_p() {
            return Err(Error::SliceIndex {
                index: row,
                len: grid.n_p(),
            });
        }
        Ok(Self {
            wavenumber,
            angular_frequency: wavenumber * grid.p(row) / grid.mass(),
            slice: row,
            orientation: Orientation::Horizontal,
        })
    }

    /// Wave along `p` on position column `col`. Stationary under zero force.
    pub fn vertical(grid: &PhaseSpaceGrid<R>, col: usize, wavenumber: R) -> Result<Self> {
        if col >= grid.n_q() {
            return Err(Error::SliceIndex {
                index: col,
                len: grid.n_q(),
            });
        }
        Ok(Self {
            wavenumber,
            angular_frequency: R::zero(),
            slice: col,
            orientation: Orientation::Vertical,
        })
    }
}

/// Carrier field that is zero except on the wave's slice, where it holds
/// `cos(k x − ω t)` with `x` the coordinate along the slice.
pub fn plane_wave_slice<R: Real>(
    grid: &PhaseSpaceGrid<R>,
    wave: &SliceWave<R>,
    t: R,
) -> Result<WignerField<R>> {
    let mut field = WignerField::zeros(*grid, FieldKind::Carrier);
    field.time = t;
    let phase = |x: R| (wave.wavenumber * x - wave.angular_frequency * t).cos();
    match wave.orientation {
        Orientation::Horizontal => {
            let row = wave.slice;
            if row >= grid.n_p() {
                return Err(Error::SliceIndex {
                    index: row,
                    len: grid.n_p(),
                });
            }
            let n_q = grid.n_q();
            for i in 0..n_q {
                field.values[row * n_q + i] = phase(grid.q(i));
            }
        }
        Orientation::Vertical => {
            let col = wave.slice;
            if col >= grid.n_q() {
                return Err(Error::SliceIndex {
                    index: col,
                    len: grid.n_q(),
                });
            }
            for j in 0..grid.n_p() {
                field.values[j * grid.n_q() + col] = phase(grid.p(j));
            }
        }
    }
    Ok(field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> PhaseSpaceGrid<f64> {
        PhaseSpaceGrid::new(8, 4, (0.0, 8.0), (-2.0, 2.0), 1.0, 1.0).unwrap()
    }

    #[test]
    fn zero_field() {
        let w = WignerField::zeros(grid(), FieldKind::Physical);
        let (pos, mom) = w.marginals();
        assert!(pos.iter().chain(&mom).all(|&x| x == 0.0));
        assert_eq!(w.total_mass(), 0.0);
    }

    #[test]
    fn mass_is_linear() {
        let w = WignerField::from_fn(grid(), FieldKind::Physical, |q, p| q + p * p);
        assert_eq!(w.scaled(2.0).total_mass(), 2.0 * w.total_mass());
        let (pos, mom) = w.marginals();
        let sum_pos: f64 = pos.iter().sum::<f64>() * grid().dq();
        let sum_mom: f64 = mom.iter().sum::<f64>() * grid().dp();
        assert!((sum_pos - w.total_mass()).abs() < 1e-12);
        assert!((sum_mom - w.total_mass()).abs() < 1e-12);
    }

    #[test]
    fn plane_wave_rows() {
        let g = grid();
        let w = SliceWave::horizontal(&g, 1, 0.75).unwrap();
        let f = plane_wave_slice(&g, &w, 0.0).unwrap();
        for i in 0..g.n_q() {
            assert_eq!(f.get(1, i), (0.75 * g.q(i)).cos());
            assert_eq!(f.get(0, i), 0.0);
        }
        let w = SliceWave::horizontal(&g, 3, 0.0).unwrap();
        let f = plane_wave_slice(&g, &w, 2.5).unwrap();
        assert!(f.row(3).iter().all(|&x| x == 1.0));
        assert_eq!(f.kind(), FieldKind::Carrier);
    }

    #[test]
    fn dispersion_and_bounds() {
        let g = grid();
        let w = SliceWave::horizontal(&g, 3, 2.0).unwrap();
        assert_eq!(w.angular_frequency, 2.0 * g.p(3));
        assert!(SliceWave::horizontal(&g, 4, 1.0).is_err());
        assert!(SliceWave::vertical(&g, 8, 1.0).is_err());
        let v = SliceWave::vertical(&g, 2, 1.5).unwrap();
        let f = plane_wave_slice(&g, &v, 3.0).unwrap();
        assert_eq!(
            f.column(2),
            (0..4).map(|j| (1.5 * g.p(j)).cos()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn rejects_bad_samples() {
        assert!(WignerField::from_values(grid(), vec![0.0; 3], 0.0, FieldKind::Physical).is_err());
        let mut v = vec![0.0; 32];
        v[5] = f64::INFINITY;
        assert!(WignerField::from_values(grid(), v, 0.0, FieldKind::Physical).is_err());
    }
}
