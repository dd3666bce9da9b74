//! Equilibrium thermodynamics of a free quantum particle coupled with
//! finite strength to a Drude heat bath.
//!
//! The crate evaluates every equilibrium quantity of the damped particle in
//! closed form: the kinetic-energy route to the specific heat, the reduced
//! partition function and the quantities derived from it (internal energy,
//! entropy, second specific heat), the low- and high-temperature expansions
//! of both routes, and the density of states obtained by numerically
//! inverting the reduced partition function. Independent Matsubara-sum and
//! infinite-product oracles cross-check all closed forms.
//!
//! Natural units are used throughout: `ℏ = k_B = 1` and particle mass
//! `M = 1`. Frequencies, temperatures and energies share one scale, so a
//! bath is fully described by the damping strength `γ` and the cutoff
//! frequency `ω_D` (see [`model::BathSpec`]).
//!
//! The crate is `no_std`-compatible (with `alloc`); disable the default
//! `std` feature for embedded use. All operations are pure and reentrant.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod dos;
pub mod laplace;
pub mod model;
pub mod specfun;
pub mod thermo;

pub use num_complex::Complex64;

use core::fmt;

/// Errors shared by all modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain an operation is defined on.
    Domain(&'static str),
    /// The operation has no strict-ohmic (`ω_D → ∞`) form and needs a
    /// finite cutoff frequency.
    CutoffRequired(&'static str),
    /// A fixed parameter (expansion order, table index, node count) is
    /// outside the supported range.
    Unsupported(&'static str),
    /// An energy grid violates the inversion preconditions.
    Grid(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::CutoffRequired(msg) => write!(f, "finite cutoff required: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported parameter: {msg}"),
            Error::Grid(msg) => write!(f, "invalid grid: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
