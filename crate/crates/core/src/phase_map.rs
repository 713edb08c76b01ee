//! Correspondence between hypergraph quantities and phase-space slices.
//!
//! Hyperedge weights select momentum rows (`p = ω(e)` in grid units), vertex
//! degrees select position columns (`q = d(v)`), and the largest of each sets
//! the grid extent. When some hyperedge is empty the position side falls
//! back to hyperedge degrees.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::Real;
use crate::spectral::{plane_wave_slice, FieldKind, PhaseSpaceGrid, SliceWave, WignerField};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeSource {
    VertexDegree,
    EdgeDegree,
}

impl DegreeSource {
    pub fn for_hypergraph<R: Real>(h: &Hypergraph<R>) -> Self {
        if h.has_empty_edge() {
            Self::EdgeDegree
        } else {
            Self::VertexDegree
        }
    }

    fn degrees<R: Real>(self, h: &Hypergraph<R>) -> Vec<R> {
        match self {
            Self::VertexDegree => h.vertex_degrees(),
            Self::EdgeDegree => h.edge_degrees(),
        }
    }
}

fn max_of<R: Real>(xs: &[R]) -> R {
    xs.iter().fold(R::zero(), |acc, &x| acc.max(x))
}

/// Grid spanning `p ∈ [0, (1+margin)·max ω(e)]` and
/// `q ∈ [0, (1+margin)·max degree]`.
pub fn grid_from_boundary<R: Real>(
    h: &Hypergraph<R>,
    n_q: usize,
    n_p: usize,
    margin: R,
    mass: R,
    hbar: R,
) -> Result<PhaseSpaceGrid<R>> {
    if h.n_edges() == 0 {
        return Err(Error::NoBoundary);
    }
    if !(margin >= R::zero() && margin.is_finite()) {
        return Err(Error::InvalidGrid(format!(
            "margin must be nonnegative, got {margin}"
        )));
    }
    let scale = R::one() + margin;
    let p_max = max_of(&h.edge_weights()) * scale;
    let q_max = max_of(&DegreeSource::for_hypergraph(h).degrees(h)) * scale;
    if q_max == R::zero() {
        return Err(Error::InvalidGrid(
            "every hyperedge is empty, so the position extent is zero".into(),
        ));
    }
    PhaseSpaceGrid::new(n_q, n_p, (R::zero(), q_max), (R::zero(), p_max), mass, hbar)
}

/// Row whose centre is nearest `ω(e)`, per hyperedge.
pub fn map_momentum_rows<R: Real>(h: &Hypergraph<R>, grid: &PhaseSpaceGrid<R>) -> Vec<usize> {
    h.edges()
        .iter()
        .map(|e| grid.p_axis().nearest(e.weight()))
        .collect()
}

/// Column assignment plus which degree matrix produced it. With
/// [`DegreeSource::VertexDegree`] the columns are indexed by vertex,
/// otherwise by hyperedge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionColumns {
    pub source: DegreeSource,
    pub columns: Vec<usize>,
}

pub fn map_position_columns<R: Real>(
    h: &Hypergraph<R>,
    grid: &PhaseSpaceGrid<R>,
) -> PositionColumns {
    let source = DegreeSource::for_hypergraph(h);
    let columns = source
        .degrees(h)
        .into_iter()
        .map(|d| grid.q_axis().nearest(d))
        .collect();
    PositionColumns { source, columns }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseMap<'a, R> {
    pub source: &'a Hypergraph<R>,
    pub grid: PhaseSpaceGrid<R>,
    pub momentum_rows: Vec<usize>,
    pub position_cols: PositionColumns,
}

impl<'a, R: Real> PhaseMap<'a, R> {
    pub fn new(source: &'a Hypergraph<R>, grid: PhaseSpaceGrid<R>) -> Self {
        Self {
            momentum_rows: map_momentum_rows(source, &grid),
            position_cols: map_position_columns(source, &grid),
            source,
            grid,
        }
    }

    pub fn degree_source(&self) -> DegreeSource {
        self.position_cols.source
    }

    /// Sum over hyperedges of a plane wave on the edge's row at `t = 0`.
    /// `wavenumbers` overrides the shared `k_default` per hyperedge.
    pub fn initial_field(&self, k_default: R, wavenumbers: Option<&[R]>) -> Result<WignerField<R>> {
        if let Some(ks) = wavenumbers {
            if ks.len() != self.source.n_edges() {
                return Err(Error::LengthMismatch {
                    what: "per-edge wavenumbers",
                    expected: self.source.n_edges(),
                    got: ks.len(),
                });
            }
        }
        let mut field = WignerField::zeros(self.grid, FieldKind::Carrier);
        for (e, &row) in self.momentum_rows.iter().enumerate() {
            let k = wavenumbers.map_or(k_default, |ks| ks[e]);
            let wave = SliceWave::horizontal(&self.grid, row, k)?;
            field = field.combine(
                R::one(),
                &plane_wave_slice(&self.grid, &wave, R::zero())?,
                R::one(),
            )?;
        }
        Ok(field)
    }
}

/// Carrier field for `h` on `grid` with one plane-wave row per hyperedge.
pub fn initial_field_from_hypergraph<R: Real>(
    h: &Hypergraph<R>,
    grid: &PhaseSpaceGrid<R>,
    k_default: R,
) -> Result<WignerField<R>> {
    if h.n_edges() == 0 {
        return Err(Error::NoBoundary);
    }
    PhaseMap::new(h, *grid).initial_field(k_default, None)
}
