//! Weighted hypergraphs as phase-space and qubit objects.
//!
//! * [`hypergraph`]: incidence, degree, adjacency and Laplacian matrices.
//! * [`partition`]: part weights, δ-balance and cut cost.
//! * [`spectral`]: Δq × Δp grids, the discrete Wigner transform and
//!   slice-wise spectral free streaming.
//! * [`phase_map`]: hyperedge weights to momentum rows, degrees to position
//!   columns.
//! * [`hyperstate`]: `C^kZ` gates and hypergraph-state encodings.
//!
//! Matrix and partition code is generic over [`Scalar`], so it runs on
//! integers and rationals as well as floats. Phase-space and qubit code is
//! generic over [`Real`] (`f32` or `f64`).

pub mod error;
pub mod hypergraph;
pub mod hyperstate;
pub mod matrix;
pub mod partition;
pub mod phase_map;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use hypergraph::{Hyperedge, Hypergraph};
pub use hyperstate::{BooleanFunctionTable, QubitStateVector};
pub use matrix::DenseMatrix;
pub use partition::{BalanceReport, PartitionEnsemble};
pub use phase_map::{DegreeSource, PhaseMap};
pub use scalar::{Real, Scalar};
pub use spectral::{DensityMatrix, PhaseSpaceGrid, Wavefunction, WignerField};

/// Exact rational scalar for balance arithmetic.
pub type Rational = num_rational::Ratio<i64>;

pub type Hypergraph64 = Hypergraph<f64>;
pub type RationalHypergraph = Hypergraph<Rational>;
pub type IntegerHypergraph = Hypergraph<i64>;
pub type Matrix64 = DenseMatrix<f64>;

pub type Grid64 = PhaseSpaceGrid<f64>;
pub type Grid32 = PhaseSpaceGrid<f32>;
pub type WignerField64 = WignerField<f64>;
pub type WignerField32 = WignerField<f32>;
pub type Wavefunction64 = Wavefunction<f64>;
pub type DensityMatrix64 = DensityMatrix<f64>;

pub type StateVector64 = QubitStateVector<f64>;
pub type StateVector32 = QubitStateVector<f32>;
