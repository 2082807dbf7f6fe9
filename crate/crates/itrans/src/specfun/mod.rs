//! Self-contained special-function kernel.
//!
//! Every public function returns a [`SpecialValue`]: the computed value plus
//! a machine-epsilon-scaled condition estimate of its absolute error. The
//! bound is an engineering estimate, not rigorous interval arithmetic; it is
//! what the quadrature layer folds into its own error accounting.
//!
//! All functions are pure and safe to call concurrently; the only shared
//! state is immutable coefficient tables.

mod bessel;
mod dd;
mod erf;
mod expint;
mod gamma;
mod struve;

pub use bessel::{
    bessel_i, bessel_i_scaled, bessel_ik_product, bessel_j, bessel_k, bessel_k_scaled,
};
pub use erf::{dawson, erf, erfc};
pub use expint::{expint_e1, expint_e1_scaled, schlomilch_en};
pub use gamma::{beta, gamma, ln_gamma};
pub use struve::struve_l0;

// Raw f64 paths for quadrature-hot integrands (same algorithms, no
// SpecialValue wrapper).
pub(crate) use bessel::{bessel_i_scaled_raw, bessel_j_raw, bessel_k_raw, bessel_k_scaled_raw};
pub(crate) use erf::{dawson_raw, erf_raw, erfc_raw};
pub(crate) use expint::{expint_e1_raw, expint_e1_scaled_raw};
pub(crate) use gamma::{beta_raw, gamma_raw};
pub(crate) use struve::struve_l0_raw;

/// A special-function value with an absolute error bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpecialValue {
    pub value: f64,
    /// Estimated bound on the absolute error (finite whenever `value` is).
    pub abs_err_bound: f64,
}

impl SpecialValue {
    /// Wrap a value whose relative error is about `ulps` units of machine
    /// epsilon.
    pub(crate) fn with_rel_ulps(value: f64, ulps: f64) -> Self {
        SpecialValue {
            value,
            abs_err_bound: value.abs() * f64::EPSILON * ulps,
        }
    }

    pub(crate) fn exact(value: f64) -> Self {
        SpecialValue {
            value,
            abs_err_bound: 0.0,
        }
    }
}

/// Domain violations for special-function arguments.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum SpecFunError {
    #[error("{func}: argument outside domain: {detail}")]
    Domain { func: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, SpecFunError>;

pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> SpecFunError {
    SpecFunError::Domain {
        func,
        detail: detail.into(),
    }
}
