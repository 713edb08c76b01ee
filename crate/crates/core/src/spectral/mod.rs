//! Discretised phase space, the Wigner transform and slice-wise spectral
//! free streaming.

mod field;
mod grid;
mod state;
mod stream;
mod transform;

pub use field::{plane_wave_slice, FieldKind, Orientation, SliceWave, WignerField};
pub use grid::{Axis, PhaseSpaceGrid};
pub use state::{DensityMatrix, Wavefunction};
pub use stream::{evolve, free_stream_step, vertical_step};
pub use transform::{wigner_transform, wigner_transform_pure, wigner_transform_with_residue};
