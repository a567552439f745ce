//! # entcont
//!
//! Entropy-difference bounds built on the Jordan-Hahn decomposition of a
//! difference of two density matrices.
//!
//! For states `rho1`, `rho2` at trace distance `eps`, write
//! `rho1 - rho2 = eps * (rho_plus - rho_minus)` with `rho_plus`, `rho_minus`
//! states of mutually orthogonal support. Then
//!
//! ```text
//! S(rho1) - S(rho2) <= eps * S(rho_plus) - eps * S(rho_minus) + h(eps)
//! ```
//!
//! which implies the Audenaert-Fannes bound and feeds continuity bounds for
//! the conditional entropy (equal marginals) and the Umegaki relative entropy.
//!
//! ## Layout
//!
//! - [`linalg`]: dense complex Hermitian matrices, a cyclic Jacobi eigensolver,
//!   Schatten norms, spectral functions, tensor products, partial traces, pinchings.
//! - [`states`]: validated density matrices and random/special state families.
//! - [`decomposition`]: the Jordan-Hahn triple `(eps, rho_plus, rho_minus)`.
//! - [`entropies`]: Shannon, von Neumann, conditional, relative and max-relative entropies (nats).
//! - [`majorization`]: majorization predicates and the spectral lemmas as executable checks.
//! - [`bounds`]: every bound as a `(lhs, rhs, slack)` evaluation, plus competitor bounds.
//! - [`experiments`]: seeded Monte-Carlo runner, property suites and CSV output.
//!
//! Everything is in natural-log units. All functions are pure; randomized
//! routines take an explicit generator.

#![forbid(unsafe_code)]
// `!(x >= t)` is used on purpose so that NaN fails the comparison.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod decomposition;
pub mod entropies;
mod error;
pub mod exec;
pub mod experiments;
pub mod linalg;
pub mod majorization;
pub mod states;

pub use error::{Error, Result};
pub use exec::Execution;
