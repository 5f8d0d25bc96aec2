//! Van der Waals and Casimir interactions of excited two-level atoms.
//!
//! Quantities are in natural units (ħ = c = k_B = 1). The crate computes
//! near-zone pair potentials and widths, the potential of an atom in front
//! of a dilute half-space, and the force between two dilute gas slabs, each
//! both from closed forms and by independent numerical quadrature.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod atom;
pub mod config;
pub mod error;
pub mod halfspace;
pub mod media;
pub mod oracle;
pub mod pair;
pub mod propagator;
pub mod response;
pub mod sweep;

pub use atom::{AtomParams, AtomState, MediumState, PairConfiguration, TwoLevelAtom};
pub use config::{parse_config, Axis, MediumSpec, OutputFormat, Problem, RunConfig, Scale, SweepAxis};
pub use error::{Error, Result};
pub use halfspace::{surface_potential_lifshitz, surface_potential_qed, surface_potential_spectral, SurfaceProblem};
pub use media::{
    boltzmann_populations, media_force, media_force_lifshitz_quadrature, media_force_thermal, ForcePair, SlabProblem,
};
pub use pair::{pair_closed_nearzone, pair_quadrature_nearzone, ShiftWidth};
pub use response::{permittivity, polarizability, ComplexResponse, ResponseKind};
pub use sweep::{figure_dataset, run_config, Figure, FigureOverrides, SweepOverrides, SweepResult};
