//! Exact spectra and eigenfunctions of deformed-commutator harmonic
//! oscillators, with brute-force oracles for every closed form.
//!
//! Two problems are covered:
//!
//! * a 1-D oscillator in a uniform electric field E under
//!   [X, P] = i(1 + alpha X^2 + beta P^2), solved by a shape-invariant
//!   factorization hierarchy ([`deform1d`]) with eigenfunctions in a
//!   q-Bargmann representation ([`bargmann`]) and a truncated q-boson
//!   matrix oracle ([`fockoracle`]);
//! * a D-dimensional oscillator with isotropic minimal length
//!   ([X_i, P_j] deformation with parameters beta, beta'), whose radial
//!   equation factorizes into a Jacobi-polynomial problem ([`radial`])
//!   checked against a finite-difference Sturm-Liouville oracle.
//!
//! [`qcalc`] holds the q-calculus kernel, [`gammafn`] and [`linalg`]
//! the classical numerics, and [`harness`] the record/sweep plumbing
//! behind the `defosc` command-line tool.

pub mod bargmann;
pub mod deform1d;
pub mod error;
pub mod fockoracle;
pub mod gammafn;
pub mod harness;
pub mod linalg;
pub mod qcalc;
pub mod radial;

pub use error::{Error, Result};
