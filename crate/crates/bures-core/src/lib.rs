//! Closed-form Bures geometry of displaced thermal oscillator states.
//!
//! The manifold of displaced thermal states of a unit harmonic
//! oscillator, coordinatized by `(p, q, beta)`, carries the Bures
//! (statistical distance) metric induced by the Uhlmann fidelity. This
//! crate provides, in closed form:
//!
//! - the Uhlmann transition probability and Bures distance between any
//!   two states of the family, including the pure coherent-state limits
//!   ([`states`]);
//! - the metric tensor, line element, Jeffreys-prior volume element, and
//!   scalar curvature, plus an independent finite-difference curvature
//!   reconstruction ([`geometry`]);
//! - the damped-oscillator (Lindblad) trajectories through the family,
//!   their statistical speed, and the Bures path length ([`dynamics`]).
//!
//! Everything is pure scalar arithmetic with no allocation, so the crate
//! is `no_std`-compatible: disable default features and enable `libm`.
//!
//! The matrix-level verification oracle (truncated Fock-space density
//! matrices) and the command-line front end live in the companion `bures`
//! crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_docs)]

mod error;
mod numeric;
mod quad;

pub mod dynamics;
pub mod geometry;
pub mod states;

pub use error::{Error, Result};

pub use dynamics::{
    bures_path_length, evolve, speed, thermal_speed_component, trajectory, DampedOscillatorParams,
    TrajectorySample,
};
pub use geometry::{
    line_element, metric_at, scalar_curvature, scalar_curvature_numeric, volume_element,
    BuresMetric, NumericCurvature,
};
pub use states::{
    bures_distance, fg_pair, log_transition_probability, partition_function,
    transition_probability, DisplacedThermalState, FGPair, MIN_BETA,
};
