//! Discretization of the one-dimensional fractional Schrödinger operator with
//! Dirichlet boundary conditions as a truncated Toeplitz matrix, plus the
//! spectral and determinant-asymptotics machinery needed to study it.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! glweights  ->  toeplitz  ->  spectra
//!                   |             |
//!                specfun  ->   szego
//! ```
//!
//! - [`glweights`]: Grünwald-Letnikov weight sequences `w_n(α)` for the
//!   superdiffusive exponent range `α ∈ (1, 2]`, with the binomial/Gamma
//!   closed form as an independent cross-check.
//! - [`specfun`]: self-contained special functions (log-Gamma, digamma,
//!   Lobachevsky, Catalan and Euler constants) and adaptive Gauss-Kronrod
//!   quadrature with graded handling of logarithmic endpoint singularities.
//! - [`toeplitz`]: assembly of the dimensionless operator kernel, its
//!   generating function (symbol) in closed, series, and curve form, symbol
//!   periodicity for rational exponents, and Wiener/Besov coefficient checks.
//! - [`spectra`]: dense symmetric Jacobi eigensolver, pivoted-LU
//!   log-determinant, exact tridiagonal spectra, and structural reports
//!   (positivity, simplicity, centrosymmetric parity, interlacing).
//! - [`szego`]: Fourier coefficients of the log-symbol by quadrature and in
//!   closed form, the strong-limit constants `G(f)` and partial `E(f)`, and
//!   determinant asymptote studies.
//!
//! The crate is `no_std`-compatible (`alloc` required): disable default
//! features and enable `libm` for float math on targets without `std`.
#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("fractoeplitz requires either the `std` (default) or the `libm` feature");

extern crate alloc;

mod error;
mod float;
mod util;

pub mod glweights;
pub mod matrix;
pub mod specfun;
pub mod spectra;
pub mod szego;
pub mod toeplitz;

pub use error::{Error, Result};
pub use matrix::Matrix;
