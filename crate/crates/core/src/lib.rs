//! Frequency-shift decomposition for a weakly-anharmonic oscillator coupled to
//! a harmonic mode.
//!
//! The model is an oscillator with a small quartic potential (frequency
//! `omega_a`, anharmonicity `lambda`) bilinearly coupled with strength `g` to
//! a second, harmonic oscillator (frequency `omega_r`). The crate computes the
//! dressed transition frequencies and their decomposition into a normal-mode
//! splitting `delta_nm`, self-Kerr coefficients `chi_a`/`chi_r`, and the
//! cross-Kerr coefficient `chi_ar`, by three independent routes:
//!
//! - [`spectrum`]: brute-force diagonalization of the coupled Hamiltonian in a
//!   truncated Fock basis, with dressed states labeled by bare occupations;
//! - [`normalmodes`]: exact symplectic normal-mode transformation of the
//!   quadratic part, with the Kerr coefficients from the transformed quartic;
//! - [`analytic`]: closed-form dispersive and beyond-dispersive formulas, plus
//!   perturbation-theory and two-level-system baselines.
//!
//! All frequencies are angular. The conventional normalization is
//! `omega_a = 1` so the remaining inputs are the ratios `omega_r/omega_a`,
//! `lambda/omega_a` and `g/omega_a`.
//!
//! The crate is `no_std`-compatible (`alloc` is required); disable the default
//! `std` feature and enable `libm` instead.

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("dispersive-core requires either the `std` or the `libm` feature");

extern crate alloc;

pub mod analytic;
pub mod error;
pub mod hilbert;
pub mod linalg;
pub mod normalmodes;
pub mod params;
pub mod shifts;
pub mod spectrum;
pub mod validity;

pub use error::{Error, Result};
pub use params::{FockConfig, SystemParams};
pub use shifts::{Route, ShiftSet, ValidityFlags};

/// Float math that works in both std and no_std builds.
pub(crate) mod math {
    #[cfg(feature = "std")]
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        x.sqrt()
    }

    #[cfg(not(feature = "std"))]
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }

    #[cfg(feature = "std")]
    #[inline]
    pub fn abs(x: f64) -> f64 {
        x.abs()
    }

    #[cfg(not(feature = "std"))]
    #[inline]
    pub fn abs(x: f64) -> f64 {
        libm::fabs(x)
    }

    #[cfg(feature = "std")]
    #[inline]
    pub fn hypot(x: f64, y: f64) -> f64 {
        x.hypot(y)
    }

    #[cfg(not(feature = "std"))]
    #[inline]
    pub fn hypot(x: f64, y: f64) -> f64 {
        libm::hypot(x, y)
    }

    #[cfg(feature = "std")]
    #[inline]
    pub fn copysign(x: f64, y: f64) -> f64 {
        x.copysign(y)
    }

    #[cfg(not(feature = "std"))]
    #[inline]
    pub fn copysign(x: f64, y: f64) -> f64 {
        libm::copysign(x, y)
    }
}
