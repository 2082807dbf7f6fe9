//! Numerical integral transforms on the half-line, with an executable
//! catalog of Parseval-Goldstein type identities.
//!
//! The crate has four layers:
//!
//! - [`specfun`] — self-contained special functions (gamma, beta, Bessel
//!   J/I/K, modified Struve **L**₀, error function, Dawson integral,
//!   exponential integrals).
//! - [`quadrature`] — adaptive integration over `(0, ∞)` and finite
//!   intervals, with strategies selected by the integrand's declared decay
//!   class (double-exponential mappings, rational substitution, and
//!   zero-partitioned oscillatory summation with epsilon acceleration).
//! - [`transforms`] — the L₂, Laplace, Glasser, Fourier sine/cosine,
//!   Hankel, K, E₁, E₂,₁ and Widder transforms as numerical operators over
//!   [`quadrature::Function1D`], plus a registry of named corpus functions.
//! - [`identities`] — an executable catalog pairing each transform identity
//!   with its closed form, swept over parameter grids into verification
//!   reports (JSON/CSV).
//!
//! The `itrans` binary is a thin front end over [`cli`]; the runnable
//! examples under `examples/` are the guided tour.

pub mod cli;
pub mod identities;
pub mod quadrature;
pub mod specfun;
pub mod transforms;
