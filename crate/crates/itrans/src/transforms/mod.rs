//! The integral-transform operators over [`Function1D`].
//!
//! Each operator folds its kernel into the input function, recomputing the
//! decay/singularity metadata so the quadrature layer picks the right
//! strategy. Folding table (f's class → integrand class):
//!
//! | transform    | kernel              | gaussian | exponential | algebraic p | oscillatory |
//! |--------------|---------------------|----------|-------------|-------------|-------------|
//! | l2           | x·e^{-x²y²}         | gaussian | gaussian    | gaussian    | gaussian*   |
//! | laplace      | e^{-xy}             | gaussian | exponential | exponential | exponential*|
//! | glasser      | 1/√(x²+y²)          | gaussian | exponential | p+1         | oscillatory |
//! | fourier sin  | sin(xy)             | —        | —           | —           | zero cells  |
//! | fourier cos  | cos(xy)             | —        | —           | —           | zero cells  |
//! | hankel ν     | √(xy)·J_ν(xy)       | —        | —           | —           | zero cells  |
//! | k-transform ν| √(xy)·K_ν(xy)       | gaussian | exponential | exponential | exponential*|
//! | e1           | e^{xy}E₁(xy)        | gaussian | exponential | p+1         | oscillatory |
//! | e21          | x·e^{x²y²}E₁(x²y²)  | gaussian | exponential | p+1         | oscillatory |
//! | widder       | x/(x²+y²)           | gaussian | exponential | p+1         | oscillatory |
//!
//! (*) a decaying kernel damps declared oscillation, so the integrand drops
//! its zero-partition route and integrates on double-exponential nodes.
//!
//! The parameter y is strictly positive everywhere; limits such as y → 0⁺
//! are the caller's business.

pub mod corpus;

use crate::quadrature::{
    integrate_oscillatory, integrate_semi_infinite, DecayClass, Function1D, IntegrationResult,
    OscKernel, OscillationParts, QuadError, Singularity, Tolerance,
};
use crate::specfun::{bessel_k_raw, expint_e1_scaled_raw};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TransformError {
    #[error("transform parameter must be positive and finite, got {0}")]
    NonPositiveParameter(f64),
    #[error("hankel order must be >= -1, got {0}")]
    InvalidOrder(f64),
    #[error("unknown corpus function '{0}'")]
    UnknownFunction(String),
    #[error("corpus function '{function}' needs parameter --{param}")]
    MissingParameter { function: String, param: &'static str },
    #[error(transparent)]
    Quad(#[from] QuadError),
}

pub type Result<T> = std::result::Result<T, TransformError>;

/// The transform family, with order slots where the family has one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TransformKind {
    L2,
    Laplace,
    Glasser,
    FourierSin,
    FourierCos,
    Hankel { nu: f64 },
    K { nu: f64 },
    E1,
    E21,
    Widder,
}

impl TransformKind {
    pub fn apply(&self, f: &Function1D, y: f64, tol: &Tolerance) -> Result<IntegrationResult> {
        match *self {
            TransformKind::L2 => l2(f, y, tol),
            TransformKind::Laplace => laplace(f, y, tol),
            TransformKind::Glasser => glasser(f, y, tol),
            TransformKind::FourierSin => fourier_sin(f, y, tol),
            TransformKind::FourierCos => fourier_cos(f, y, tol),
            TransformKind::Hankel { nu } => hankel(nu, f, y, tol),
            TransformKind::K { nu } => k_transform(nu, f, y, tol),
            TransformKind::E1 => e1_transform(f, y, tol),
            TransformKind::E21 => e21_transform(f, y, tol),
            TransformKind::Widder => widder(f, y, tol),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TransformKind::L2 => "l2",
            TransformKind::Laplace => "laplace",
            TransformKind::Glasser => "glasser",
            TransformKind::FourierSin => "fourier-sin",
            TransformKind::FourierCos => "fourier-cos",
            TransformKind::Hankel { .. } => "hankel",
            TransformKind::K { .. } => "k",
            TransformKind::E1 => "e1",
            TransformKind::E21 => "e21",
            TransformKind::Widder => "widder",
        }
    }
}

fn check_param(y: f64) -> Result<()> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(TransformError::NonPositiveParameter(y));
    }
    Ok(())
}

/// Damped-kernel folding: the new decay class when the transform kernel
/// decays at least exponentially (sweeps declared oscillation along).
fn damped_fold(kernel: DecayClass, f: DecayClass) -> DecayClass {
    match (kernel, f) {
        (DecayClass::Gaussian, _) | (_, DecayClass::Gaussian) => DecayClass::Gaussian,
        _ => DecayClass::Exponential,
    }
}

/// Algebraic-kernel folding: kernel behaves like x^{-dp} for large x.
fn algebraic_fold(f: DecayClass, dp: f64) -> DecayClass {
    match f {
        DecayClass::Gaussian => DecayClass::Gaussian,
        DecayClass::Exponential => DecayClass::Exponential,
        DecayClass::Algebraic { p } => DecayClass::Algebraic { p: p + dp },
        DecayClass::Oscillatory { period_hint } => DecayClass::Oscillatory { period_hint },
    }
}

/// Checks that the folded integrand is integrable at 0 before spending any
/// evaluations on it.
fn check_integrable(sing: Singularity) -> Result<()> {
    if sing.exponent() >= 1.0 {
        return Err(TransformError::Quad(QuadError::Divergent(format!(
            "integrand behaves like x^-{} at 0",
            sing.exponent()
        ))));
    }
    Ok(())
}

/// Build the folded integrand for an algebraic-kernel transform, keeping an
/// oscillatory factorization alive if the input carries one.
fn fold_with_kernel(
    f: &Function1D,
    kernel: impl Fn(f64) -> f64 + Send + Sync + 'static,
    decay: DecayClass,
    sing: Singularity,
) -> Function1D {
    let fe = f.eval_fn();
    let k = Arc::new(kernel);
    let ke = Arc::clone(&k);
    let g = Function1D::new(move |x| fe(x) * ke(x), decay, sing);
    if let (DecayClass::Oscillatory { .. }, Some(parts)) = (decay, f.oscillation()) {
        let env = Arc::clone(&parts.envelope);
        let kf = Arc::clone(&k);
        g.with_oscillation(OscillationParts {
            envelope: Arc::new(move |x| env(x) * kf(x)),
            kernel: parts.kernel,
            freq: parts.freq,
        })
    } else {
        g
    }
}

/// L₂-transform: ∫₀^∞ x e^{-x²y²} f(x) dx.
pub fn l2(f: &Function1D, y: f64, tol: &Tolerance) -> Result<IntegrationResult> {
    check_param(y)?;
    let sing = f.singularity().shifted(1.0);
    check_integrable(sing)?;
    let fe = f.eval_fn();
    let y2 = y * y;
    let g = Function1D::new(
        move |x| x * (-x * x * y2).exp() * fe(x),
        DecayClass::Gaussian,
        sing,
    )
    .with_scale(1.0 / y);
    Ok(integrate_semi_infinite(&g, tol)?)
}

/// Laplace transform: ∫₀^∞ e^{-xy} f(x) dx.
pub fn laplace(f: &Function1D, y: f64, tol: &Tolerance) -> Result<IntegrationResult> {
    check_param(y)?;
    check_integrable(f.singularity())?;
    let fe = f.eval_fn();
    let g = Function1D::new(
        move |x| (-x * y).exp() * fe(x),
        damped_fold(DecayClass::Exponential, f.decay()),
        f.singularity(),
    )
    .with_scale(1.0 / y);
    Ok(integrate_semi_infinite(&g, tol)?)
}

/// Glasser transform: ∫₀^∞ f(x)/√(x²+y²) dx.
pub fn glasser(f: &Function1D, y: f64, tol: &Tolerance) -> Result<IntegrationResult> {
    check_param(y)?;
    check_integrable(f.singularity())?;
    if let DecayClass::Algebraic { p } = f.decay() {
        if p <= 0.0 {
            return Err(TransformError::Quad(QuadError::Divergent(format!(
                "glasser needs some decay in f; algebraic p = {p} gives a x^-{} tail",
                p + 1.0
            ))));
        }
    }
    let decay = algebraic_fold(f.decay(), 1.0);
    let g = fold_with_kernel(
        f,
        move |x| 1.0 / (x * x + y * y).sqrt(),
        decay,
        f.singularity(),
    );
    Ok(integrate_semi_infinite(&g, tol)?)
}

/// Fourier sine transform: ∫₀^∞ sin(xy) f(x) dx.
pub fn fourier_sin(f: &Function1D, y: f64, tol: &Tolerance) -> Result<IntegrationResult> {
    check_param(y)?;
    // sin(xy) ~ xy at 0 softens the endpoint by one power
    check_integrable(f.singularity().shifted(1.0))?;
    Ok(integrate_oscillatory(f, OscKernel::Sin, y, tol)?)
}

/// Fourier cosine transform: ∫₀^∞ cos(xy) f(x) dx.
pub fn fourier_cos(f: &Function1D, y: f64, tol: &Tolerance) -> Result<IntegrationResult> {
    check_param(y)?;
    check_integrable(f.singularity())?;
    Ok(integrate_oscillatory(f, OscKernel::Cos, y, tol)?)
}

/// Hankel transform: ∫₀^∞ √(xy) J_ν(xy) f(x) dx.
pub fn hankel(nu: f64, f: &Function1D, y: f64, tol: &Tolerance) -> Result<IntegrationResult> {
    check_param(y)?;
    if !(nu >= -1.0) || !nu.is_finite() {
        return Err(TransformError::InvalidOrder(nu));
    }
    // √(xy) J_ν(xy) ~ x^{ν + 1/2} at 0
    check_integrable(f.singularity().shifted(nu + 0.5))?;
    let fe = f.eval_fn();
    let env = Function1D::new(
        move |x| (x * y).sqrt() * fe(x),
        f.decay(),
        f.singularity().shifted(0.5),
    );
    Ok(integrate_oscillatory(&env, OscKernel::BesselJ(nu), y, tol)?)
}

/// K-transform: ∫₀^∞ √(xy) K_ν(xy) f(x) dx.
pub fn k_transform(nu: f64, f: &Function1D, y: f64, tol: &Tolerance) -> Result<IntegrationResult> {
    check_param(y)?;
    if !nu.is_finite() {
        return Err(TransformError::InvalidOrder(nu));
    }
    // √(xy) K_ν(xy) ~ x^{1/2 - |ν|} at 0 (log for ν = 0, absorbed by DE nodes)
    let sing = f.singularity().shifted(0.5 - nu.abs());
    check_integrable(sing)?;
    let fe = f.eval_fn();
    let g = Function1D::new(
        move |x| (x * y).sqrt() * bessel_k_raw(nu, x * y) * fe(x),
        damped_fold(DecayClass::Exponential, f.decay()),
        sing,
    )
    .with_scale(1.0 / y);
    Ok(integrate_semi_infinite(&g, tol)?)
}

/// E₁-transform: ∫₀^∞ e^{xy} E₁(xy) f(x) dx.
///
/// The kernel is evaluated in its scaled form, so no overflow occurs even
/// though e^{xy} alone would leave f64 range.
pub fn e1_transform(f: &Function1D, y: f64, tol: &Tolerance) -> Result<IntegrationResult> {
    check_param(y)?;
    check_integrable(f.singularity())?; // kernel's log blowup at 0 is integrable on top
    let decay = algebraic_fold(f.decay(), 1.0);
    if let DecayClass::Algebraic { p } = decay {
        if p <= 1.0 {
            return Err(TransformError::Quad(QuadError::Divergent(format!(
                "e1 kernel decays like 1/(xy); folded tail x^-{p} is not integrable"
            ))));
        }
    }
    let g = fold_with_kernel(f, move |x| expint_e1_scaled_raw(x * y), decay, f.singularity());
    Ok(integrate_semi_infinite(&g.with_scale(1.0 / y), tol)?)
}

/// E₂,₁-transform: ∫₀^∞ x e^{x²y²} E₁(x²y²) f(x) dx.
pub fn e21_transform(f: &Function1D, y: f64, tol: &Tolerance) -> Result<IntegrationResult> {
    check_param(y)?;
    let sing = f.singularity().shifted(1.0);
    check_integrable(sing)?;
    // kernel x·e^{s}E₁(s), s = x²y², behaves like 1/(x y²) for large x
    let decay = algebraic_fold(f.decay(), 1.0);
    if let DecayClass::Algebraic { p } = decay {
        if p <= 1.0 {
            return Err(TransformError::Quad(QuadError::Divergent(format!(
                "e21 kernel decays like 1/(x y^2); folded tail x^-{p} is not integrable"
            ))));
        }
    }
    let y2 = y * y;
    let g = fold_with_kernel(
        f,
        move |x| x * expint_e1_scaled_raw(x * x * y2),
        decay,
        sing,
    );
    Ok(integrate_semi_infinite(&g.with_scale(1.0 / y), tol)?)
}

/// Widder potential transform: ∫₀^∞ x f(x)/(x²+y²) dx.
pub fn widder(f: &Function1D, y: f64, tol: &Tolerance) -> Result<IntegrationResult> {
    check_param(y)?;
    let sing = f.singularity().shifted(1.0);
    check_integrable(sing)?;
    let decay = algebraic_fold(f.decay(), 1.0);
    if let DecayClass::Algebraic { p } = decay {
        if p <= 1.0 {
            return Err(TransformError::Quad(QuadError::Divergent(format!(
                "widder kernel decays like 1/x; folded tail x^-{p} is not integrable"
            ))));
        }
    }
    let g = fold_with_kernel(f, move |x| x / (x * x + y * y), decay, sing);
    Ok(integrate_semi_infinite(&g, tol)?)
}

/// L₂ computed through the Laplace operator: L₂{f; y} = ½ L{f(√x); y²}.
pub fn l2_via_laplace(f: &Function1D, y: f64, tol: &Tolerance) -> Result<IntegrationResult> {
    check_param(y)?;
    let fe = f.eval_fn();
    let decay = match f.decay() {
        DecayClass::Gaussian => DecayClass::Exponential,
        DecayClass::Exponential => DecayClass::Exponential, // sub-exponential, same nodes
        DecayClass::Algebraic { p } => DecayClass::Algebraic { p: p / 2.0 },
        DecayClass::Oscillatory { period_hint } => DecayClass::Oscillatory {
            period_hint: period_hint * period_hint,
        },
    };
    let sing = match f.singularity() {
        Singularity::None => Singularity::None,
        Singularity::Integrable { exponent } => Singularity::Integrable {
            exponent: exponent / 2.0,
        },
    };
    let g = Function1D::new(move |x| fe(x.sqrt()), decay, sing);
    let mut r = laplace(&g, y * y, tol)?;
    r.value *= 0.5;
    r.abs_err *= 0.5;
    Ok(r)
}

/// Laplace computed through the L₂ operator: L{f; y} = 2 L₂{f(x²); √y}.
pub fn laplace_via_l2(f: &Function1D, y: f64, tol: &Tolerance) -> Result<IntegrationResult> {
    check_param(y)?;
    let fe = f.eval_fn();
    let decay = match f.decay() {
        DecayClass::Gaussian | DecayClass::Exponential => DecayClass::Gaussian,
        DecayClass::Algebraic { p } => DecayClass::Algebraic { p: 2.0 * p },
        DecayClass::Oscillatory { period_hint } => DecayClass::Oscillatory {
            period_hint: period_hint.sqrt(),
        },
    };
    let sing = match f.singularity() {
        Singularity::None => Singularity::None,
        Singularity::Integrable { exponent } => Singularity::Integrable {
            exponent: 2.0 * exponent,
        },
    };
    let g = Function1D::new(move |x| fe(x * x), decay, sing);
    let mut r = l2(&g, y.sqrt(), tol)?;
    r.value *= 2.0;
    r.abs_err *= 2.0;
    Ok(r)
}

#[cfg(test)]
mod tests;
