//! Factorized Neel-type eigenstates of the spin-`s` XYZ Heisenberg model in
//! an arbitrary external field on a periodic `d`-dimensional cubic lattice.
//!
//! [`factor`] maps Hamiltonian parameters to the two sublattice polarization
//! directions and back; [`verifier`] checks the result against exact
//! matrix-free application of the lattice Hamiltonian.

pub mod error;
pub mod factor;
pub mod lattice;
pub mod spin;
pub mod stereo;
pub mod verifier;

pub use error::{Error, Result};
pub use factor::{
    angle_invariants, closed_form_params, condition_residual, energy_per_site, factorizing_field_scan,
    field_normalizing_scale, solve_angles, solve_angles_detailed, solve_params, system_matrix, AngleInvariants,
    ModelContext, NeelAngles, ParamRay, Params, StereoPair,
};
pub use lattice::{parity, Lattice, SiteIndex};
pub use spin::{coherent_state, expectation, spin_matrices, Direction, Spin, SpinMatrices};
pub use stereo::Stereo;
pub use verifier::{bond_residual, eigen_residual, spectrum_probe, HilbertSpace, StateVector};

pub use num_complex::Complex64;
