//! Numerics for the reproducing kernel Hilbert spaces `D_d` on the unit disc,
//! whose kernel is the d-th power of the Dirichlet kernel, and for their
//! duals `HS_d` under the Dirichlet pairing.
//!
//! Modules:
//!
//! * [`weights`]: the coefficient weights `a_d(k)`, comparison weights and
//!   log-weighted radial moments.
//! * [`spaces`]: polynomials, the six equivalent norms, the Dirichlet pairing.
//! * [`kernels`]: kernel evaluation and Gram matrices.
//! * [`hankel`]: Hankel-type operators and their Hilbert–Schmidt norms.
//! * [`cnp`]: Nevanlinna–Pick coefficient sequences and Pick matrices.
//! * [`carleson`]: discrete measures, Carleson boxes, testing integrals.
//! * [`bands`]: frozen ranges of the comparison ratios.
//! * [`io`]: CSV files for coefficients, points and measures.
//! * [`cli`]: the `dspaces` command-line front end.

// NaN must fail every validity check, so checks are written as `!(x > 0.0)`.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bands;
pub mod carleson;
pub mod cli;
pub mod cnp;
pub mod error;
pub mod hankel;
pub mod io;
pub mod kernels;
pub mod matrix;
pub mod quad;
pub mod series;
pub mod spaces;
pub mod weights;

pub use error::{Error, Result};
pub use num_complex::Complex64;
