//! Braid-matrix families, Yang-Baxter checks, Wigner d-functions, and
//! row-wise ℓ1-norm extremization.
//!
//! The crate builds the two families of 4×4 braiding matrices (the
//! Bell-basis type I and the permutation-like type II), their
//! Temperley-Lieb generators and Yang-Baxterized spectral families, the
//! general Wigner d^J/D^J rotation matrices, and the machinery that derives
//! the canonical braid pairs from the extrema of the row-wise ℓ1-norm
//! f(θ) = Σ|d^J_{MM'}(θ)|. A 4-qubit realization of the topological basis
//! carries the 2×2 representations, the SU(2) ladder operators, and the
//! two-level BCS block.
//!
//! Every algebraic identity is verified numerically to machine precision;
//! see [`checks::all_checks`] for the full registry and the `braidnorm`
//! binary for the command-line front end.

pub mod brm_pipeline;
pub mod checks;
pub mod cxmat;
pub mod l1_extrema;
pub mod report;
pub mod tl_braid;
pub mod topo_su2;
pub mod wigner;
pub mod ybe;

pub use cxmat::{c64, phase, CMatrix, C64};
pub use report::{CheckResult, Report};
pub use wigner::HalfInt;
