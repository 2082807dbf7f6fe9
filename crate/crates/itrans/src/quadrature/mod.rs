//! Adaptive numerical integration over `(0, ∞)` and finite intervals.
//!
//! The integrand carries its own tail/endpoint metadata ([`Function1D`]),
//! and the driver picks the strategy from it:
//!
//! - gaussian / exponential decay → double-exponential (exp-sinh) nodes;
//! - algebraic decay → rational substitution x = t/(1-t), then
//!   double-exponential refinement on the finite image (which also absorbs
//!   the endpoint singularities the substitution creates);
//! - oscillatory tails → partition at kernel zeros, integrate the cells,
//!   and accelerate the alternating partial sums with Wynn's epsilon
//!   algorithm (this also assigns the mean value to tails that converge
//!   only in the improper/Abel sense);
//! - finite intervals → tanh-sinh, which tolerates integrable endpoint
//!   singularities without being told where they are.
//!
//! Reported errors are deliberately conservative: the level-to-level
//! difference of the refinement plus an epsilon-scaled noise floor for the
//! accumulated weighted evaluations.

mod de;
mod gk;
mod oscillatory;

pub(crate) use gk::gk15;
pub use oscillatory::OscKernel;

use std::sync::Arc;

pub type EvalFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Tail behavior of an integrand on `(0, ∞)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DecayClass {
    /// e^{-c x^2}-like tails.
    Gaussian,
    /// e^{-c x}-like tails (also used for sub-exponential tails, which the
    /// same node mapping handles).
    Exponential,
    /// x^{-p} tails; absolute convergence needs p > 1.
    Algebraic { p: f64 },
    /// Sign-alternating tails with the given full period.
    Oscillatory { period_hint: f64 },
}

/// Power-law behavior at x → 0⁺.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Singularity {
    None,
    /// f ~ x^{-exponent}; integrable on its own only for exponent < 1.
    Integrable { exponent: f64 },
}

impl Singularity {
    pub fn exponent(&self) -> f64 {
        match self {
            Singularity::None => 0.0,
            Singularity::Integrable { exponent } => *exponent,
        }
    }

    /// Metadata after multiplying the integrand by x^k (k may be negative).
    pub fn shifted(&self, k: f64) -> Singularity {
        let e = self.exponent() - k;
        if e <= 0.0 {
            Singularity::None
        } else {
            Singularity::Integrable { exponent: e }
        }
    }
}

/// A declared oscillatory factorization f(x) = envelope(x) · kernel(freq·x),
/// which lets transform kernels fold extra envelope factors in while keeping
/// the zero lattice of the kernel.
#[derive(Clone)]
pub struct OscillationParts {
    pub envelope: EvalFn,
    pub kernel: OscKernel,
    pub freq: f64,
}

/// A real-valued integrand on `(0, ∞)` plus the metadata that guides
/// quadrature strategy.
#[derive(Clone)]
pub struct Function1D {
    eval: EvalFn,
    decay: DecayClass,
    singularity: Singularity,
    oscillation: Option<OscillationParts>,
    /// Rough location of the integrand's mass, used to center the
    /// double-exponential node map.
    scale_hint: f64,
}

impl Function1D {
    pub fn new(
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
        decay: DecayClass,
        singularity: Singularity,
    ) -> Self {
        Function1D {
            eval: Arc::new(eval),
            decay,
            singularity,
            oscillation: None,
            scale_hint: 1.0,
        }
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        if scale.is_finite() && scale > 0.0 {
            // clamp: an extreme hint only wastes nodes, the double
            // exponential map covers hundreds of decades either way
            self.scale_hint = scale.clamp(1e-8, 1e8);
        }
        self
    }

    pub fn with_oscillation(mut self, parts: OscillationParts) -> Self {
        self.oscillation = Some(parts);
        self
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        (self.eval)(x)
    }

    pub fn eval_fn(&self) -> EvalFn {
        Arc::clone(&self.eval)
    }

    pub fn decay(&self) -> DecayClass {
        self.decay
    }

    pub fn singularity(&self) -> Singularity {
        self.singularity
    }

    pub fn oscillation(&self) -> Option<&OscillationParts> {
        self.oscillation.as_ref()
    }

    pub fn scale_hint(&self) -> f64 {
        self.scale_hint
    }
}

/// Requested accuracy and evaluation budget. Convergence means the error
/// estimate fell below max(abs, rel·|value|).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
    pub max_evals: usize,
}

impl Tolerance {
    pub const MIN_REL: f64 = 1e-14;

    pub fn new(rel: f64, abs: f64, max_evals: usize) -> Result<Self> {
        if !(rel >= Self::MIN_REL) {
            return Err(QuadError::InvalidTolerance(format!(
                "rel must be >= {:.0e}, got {rel}",
                Self::MIN_REL
            )));
        }
        if !(abs > 0.0) {
            return Err(QuadError::InvalidTolerance(format!("abs must be > 0, got {abs}")));
        }
        Ok(Tolerance { rel, abs, max_evals })
    }

    /// Default for non-oscillatory integrands.
    pub fn default_smooth() -> Self {
        Tolerance {
            rel: 1e-10,
            abs: 1e-12,
            max_evals: 200_000,
        }
    }

    /// Oscillatory work tops out earlier; sequence acceleration limits how
    /// much the tail sum can be trusted.
    pub fn default_oscillatory() -> Self {
        Tolerance {
            rel: 1e-8,
            abs: 1e-12,
            max_evals: 200_000,
        }
    }

    /// Tightened tolerance for inner integrals of nested evaluations.
    pub fn tightened(&self, factor: f64) -> Self {
        Tolerance {
            rel: (self.rel / factor).max(Self::MIN_REL),
            abs: (self.abs / factor).max(1e-300),
            max_evals: self.max_evals,
        }
    }

    pub fn target(&self, value: f64) -> f64 {
        self.abs.max(self.rel * value.abs())
    }
}

/// Outcome of one integration. `converged` means the error estimate met the
/// tolerance within budget; the best estimate is returned either way.
#[derive(Clone, Copy, Debug)]
pub struct IntegrationResult {
    pub value: f64,
    pub abs_err: f64,
    pub n_evals: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuadError {
    #[error("integrand returned a non-finite value at x = {x}")]
    NonFiniteEvaluation { x: f64 },
    #[error("declared integrand does not converge absolutely: {0}")]
    Divergent(String),
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),
    #[error("invalid interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },
}

pub type Result<T> = std::result::Result<T, QuadError>;

/// Integrate a declared integrand over `(0, ∞)`.
pub fn integrate_semi_infinite(f: &Function1D, tol: &Tolerance) -> Result<IntegrationResult> {
    let s = f.singularity().exponent();
    if s >= 1.0 {
        return Err(QuadError::Divergent(format!(
            "endpoint behavior x^-{s} is not integrable at 0"
        )));
    }
    match f.decay() {
        DecayClass::Gaussian | DecayClass::Exponential => {
            let g = f.eval_fn();
            de::exp_sinh(&|x| g(x), f.scale_hint(), tol)
        }
        DecayClass::Algebraic { p } => {
            if p <= 1.0 {
                return Err(QuadError::Divergent(format!(
                    "algebraic tail x^-{p} is not absolutely integrable"
                )));
            }
            let g = f.eval_fn();
            // x = t/(1-t) maps (0,1) onto (0,∞); dx = dt/(1-t)^2
            let mapped = move |t: f64| {
                let omt = 1.0 - t;
                let x = t / omt;
                g(x) / (omt * omt)
            };
            de::tanh_sinh(&mapped, 0.0, 1.0, tol)
        }
        DecayClass::Oscillatory { period_hint } => {
            if let Some(parts) = f.oscillation() {
                oscillatory::integrate_zero_partitioned(
                    &parts.envelope,
                    parts.kernel,
                    parts.freq,
                    f.singularity(),
                    tol,
                )
            } else {
                oscillatory::integrate_blind_cells(&f.eval_fn(), period_hint, f.singularity(), tol)
            }
        }
    }
}

/// Integrate an oscillatory integrand envelope(x)·kernel(freq·x) over
/// `(0, ∞)` by partitioning at the kernel's zeros and accelerating the
/// partial sums.
pub fn integrate_oscillatory(
    envelope: &Function1D,
    kernel: OscKernel,
    freq: f64,
    tol: &Tolerance,
) -> Result<IntegrationResult> {
    if !(freq > 0.0) {
        return Err(QuadError::InvalidTolerance(format!(
            "oscillation frequency must be positive, got {freq}"
        )));
    }
    oscillatory::integrate_zero_partitioned(
        &envelope.eval_fn(),
        kernel,
        freq,
        envelope.singularity(),
        tol,
    )
}

/// Integrate over the finite interval [a, b]; declared-integrable endpoint
/// singularities are handled by the double-exponential clustering.
pub fn integrate_finite(
    f: &Function1D,
    a: f64,
    b: f64,
    tol: &Tolerance,
) -> Result<IntegrationResult> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(QuadError::InvalidInterval { a, b });
    }
    let g = f.eval_fn();
    de::tanh_sinh(&|x| g(x), a, b, tol)
}
