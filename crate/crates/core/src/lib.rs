//! Quantum thermodynamic functions of a harmonic oscillator coupled to a
//! linear heat bath.
//!
//! The free energy of the oscillator is an integral of the single-oscillator
//! free energy against `Im d log α(ω + i0⁺)/dω`. For the Ohmic,
//! single-relaxation-time and blackbody-radiation (QED) baths the
//! susceptibility has the common form
//!
//! ```text
//! α(z) = (z + iΩ) / (−m (z + iΩ′)(z² + iγz − ω₀²))
//! ```
//!
//! and the free energy reduces to four Stieltjes J-functions. This crate
//! evaluates J by several independent routes ([`stieltjes`]), maps the
//! physical bath models onto the canonical form ([`bath`]) and computes
//! F, S, U, C and the zero-point energy exactly and through the low- and
//! high-temperature expansions ([`thermo`]). [`quadrature`] is the
//! adaptive integrator used as the independent oracle.
//!
//! Everything works in reduced units: `ħ = k = 1`, frequencies in the units
//! of the bath parameters (normally `ω₀ = 1`) and the temperature as
//! `θ = kT/ħ` in the same units.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bath;
mod error;
pub mod quadrature;
pub mod stieltjes;
pub mod thermo;
pub mod units;

pub use bath::{BathSpec, CanonicalBath, Cutoff, Regime, RootPair};
pub use error::{Error, Result};
pub use quadrature::{Estimate, QuadratureError, QuadratureSpec, TailCut};
pub use stieltjes::{ComplexValue, JMethod, JValue, Route};
pub use thermo::{Method, ThermoPoint};

pub use num_complex::Complex64;
