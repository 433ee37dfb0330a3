//! Density spectra of iterated sumsets.
//!
//! The crate works on two kinds of objects:
//!
//! * finite unions of closed intervals of the circle `R/Z` with rational
//!   endpoints ([`torus::TorusSet`]), on which Haar measure and Minkowski sums
//!   are computed exactly;
//! * truncations `A ∩ [0, N)` of sets of nonnegative integers
//!   ([`integer::FiniteIntegerSet`]), whose sumsets are exact below the horizon.
//!
//! On top of those sit witness builders that realize prescribed tuples
//! `(μ(A), μ(2A), …)` ([`constructions`]), the piecewise-polynomial engine for
//! the representation densities of pseudo k-th powers ([`piecewise`]) and
//! seeded samplers for the random constructions ([`random`]).

pub mod constructions;
pub mod error;
pub mod integer;
pub mod piecewise;
pub mod random;
pub mod rational;
pub mod torus;

pub use error::{Error, Result};
pub use rational::Rational;
