//! Semi-infinite oscillatory integration: partition at kernel zeros,
//! integrate the half-wave cells, and accelerate the alternating partial
//! sums with Wynn's epsilon algorithm.
//!
//! For envelopes that only make the integral conditionally (or mean-)
//! convergent, the epsilon limit of the cell sums is the improper/Abel
//! value, which is the value the transform identities need.

use std::sync::Arc;

use super::de::tanh_sinh;
use super::gk::adaptive_gk;
use super::{EvalFn, IntegrationResult, QuadError, Result, Singularity, Tolerance};
use crate::specfun::bessel_j_raw;

/// Oscillating kernel of a semi-infinite integral.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum OscKernel {
    Sin,
    Cos,
    /// Bessel J of the given order.
    BesselJ(f64),
}

impl OscKernel {
    #[inline]
    pub(crate) fn eval(&self, arg: f64) -> f64 {
        match self {
            OscKernel::Sin => arg.sin(),
            OscKernel::Cos => arg.cos(),
            OscKernel::BesselJ(nu) => bessel_j_raw(*nu, arg),
        }
    }

    /// k-th positive zero (k >= 1) of the kernel as a function of its raw
    /// argument. For Bessel J this is the McMahon expansion — the cells only
    /// need approximate zeros to alternate cleanly.
    fn zero(&self, k: usize) -> f64 {
        let kf = k as f64;
        match self {
            OscKernel::Sin => kf * std::f64::consts::PI,
            OscKernel::Cos => (kf - 0.5) * std::f64::consts::PI,
            OscKernel::BesselJ(nu) => {
                let mu = 4.0 * nu * nu;
                let beta = (kf + 0.5 * nu - 0.25) * std::f64::consts::PI;
                let b8 = 8.0 * beta;
                beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
            }
        }
    }
}

/// Moving-diagonal Wynn epsilon table over a sequence of partial sums.
///
/// Columns deeper than the roundoff floor are pure noise, so the estimate
/// is taken from the even column that is most stable from one diagonal to
/// the next, not from the deepest column built.
struct WynnEpsilon {
    prev: Vec<f64>,
    best_prev: f64,
}

const MAX_EPS_COLS: usize = 30;

impl WynnEpsilon {
    fn new() -> Self {
        WynnEpsilon {
            prev: Vec::new(),
            best_prev: f64::NAN,
        }
    }

    /// Feed the next partial sum; returns (accelerated value, error estimate).
    fn push(&mut self, s: f64) -> (f64, f64) {
        let mut cur = Vec::with_capacity((self.prev.len() + 1).min(MAX_EPS_COLS + 1));
        cur.push(s);
        let mut best = s;
        let mut err = f64::INFINITY;
        let mut picked = false;
        for k in 1..=self.prev.len().min(MAX_EPS_COLS) {
            let denom = cur[k - 1] - self.prev[k - 1];
            let scale = cur[k - 1].abs().max(self.prev[k - 1].abs());
            if denom.abs() <= 4.0 * f64::EPSILON * scale {
                // two successive diagonals agree to machine identity
                best = cur[k - 1];
                err = denom.abs().max(scale * f64::EPSILON);
                picked = true;
                break;
            }
            let carry = if k >= 2 { self.prev[k - 2] } else { 0.0 };
            let next = carry + 1.0 / denom;
            if !next.is_finite() {
                break;
            }
            cur.push(next);
        }
        if !picked {
            // most stable even column across the last two diagonals
            let mut best_d = f64::INFINITY;
            let mut best_k = 0usize;
            for k in (0..cur.len()).step_by(2) {
                if k < self.prev.len() {
                    let d = (cur[k] - self.prev[k]).abs();
                    if d <= best_d {
                        best_d = d;
                        best_k = k;
                    }
                }
            }
            best = cur[best_k];
            err = best_d;
            if best_k >= 2 {
                err = err.max((cur[best_k] - cur[best_k - 2]).abs() * 0.1);
            }
            if !err.is_finite() {
                err = f64::INFINITY;
            }
        }
        self.prev = cur;
        self.best_prev = best;
        (best, err)
    }
}

fn finish(
    value: f64,
    err: f64,
    n_evals: usize,
    tol: &Tolerance,
) -> IntegrationResult {
    IntegrationResult {
        value,
        abs_err: err,
        n_evals,
        converged: err <= tol.target(value),
    }
}

/// Shared cell-summation driver. `boundary(k)` gives the k-th partition
/// point (strictly increasing, boundary(0) = 0 excluded).
fn sum_cells(
    integrand: &(dyn Fn(f64) -> f64 + '_),
    boundary: &(dyn Fn(usize) -> f64 + '_),
    singular_first: bool,
    tol: &Tolerance,
) -> Result<IntegrationResult> {
    let cell_tol = Tolerance {
        rel: (tol.rel * 0.05).max(Tolerance::MIN_REL),
        abs: tol.abs * 0.05,
        max_evals: tol.max_evals,
    };

    let mut n_evals = 0usize;
    let first_end = boundary(1);
    let first = if singular_first {
        tanh_sinh(integrand, 0.0, first_end, &cell_tol)?
    } else {
        adaptive_gk(integrand, 0.0, first_end, &cell_tol)?
    };
    n_evals += first.n_evals;

    let mut partial = first.value;
    let mut cell_err_acc = first.abs_err;
    let mut accel = WynnEpsilon::new();
    let (mut best, mut best_err) = accel.push(partial);
    let mut ok_streak = 0usize;
    let mut prev_cell_mag = f64::INFINITY;

    let max_cells = 700usize;
    for k in 1..max_cells {
        let a = boundary(k);
        let b = boundary(k + 1);
        if !(b > a) {
            break;
        }
        let cell = adaptive_gk(integrand, a, b, &cell_tol)?;
        n_evals += cell.n_evals;
        partial += cell.value;
        cell_err_acc += cell.abs_err;

        // absolutely convergent envelopes die on their own: once two
        // consecutive cells are negligible, the plain sum is the answer
        let mag = cell.value.abs();
        if mag <= 0.02 * tol.target(partial) && prev_cell_mag <= 0.02 * tol.target(partial) {
            return Ok(finish(partial, cell_err_acc + mag, n_evals, tol));
        }
        prev_cell_mag = mag;

        let (b_est, e_est) = accel.push(partial);
        best = b_est;
        best_err = e_est + cell_err_acc * 0.1;
        if e_est <= tol.target(best) * 0.5 && k >= 6 {
            ok_streak += 1;
            if ok_streak >= 3 {
                return Ok(finish(best, best_err.max(cell_err_acc * 0.05), n_evals, tol));
            }
        } else {
            ok_streak = 0;
        }
        if n_evals >= tol.max_evals {
            break;
        }
    }
    Ok(IntegrationResult {
        value: best,
        abs_err: best_err,
        n_evals,
        converged: false,
    })
}

/// envelope(x) · kernel(freq·x) over (0, ∞), cells bounded by kernel zeros.
pub(crate) fn integrate_zero_partitioned(
    envelope: &EvalFn,
    kernel: OscKernel,
    freq: f64,
    singularity: Singularity,
    tol: &Tolerance,
) -> Result<IntegrationResult> {
    if !(freq > 0.0) || !freq.is_finite() {
        return Err(QuadError::Divergent(format!(
            "oscillation frequency must be positive and finite, got {freq}"
        )));
    }
    let env = Arc::clone(envelope);
    let integrand = move |x: f64| env(x) * kernel.eval(freq * x);
    let boundary = |k: usize| {
        if k == 0 {
            0.0
        } else {
            kernel.zero(k) / freq
        }
    };
    let singular_first = singularity.exponent() > 0.0 || matches!(kernel, OscKernel::BesselJ(n) if n < 0.0);
    sum_cells(&integrand, &boundary, singular_first, tol)
}

/// Raw oscillatory integrand without a declared factorization: cells of
/// half the declared period.
pub(crate) fn integrate_blind_cells(
    f: &EvalFn,
    period: f64,
    singularity: Singularity,
    tol: &Tolerance,
) -> Result<IntegrationResult> {
    if !(period > 0.0) || !period.is_finite() {
        return Err(QuadError::Divergent(format!(
            "oscillatory integrand needs a positive period hint, got {period}"
        )));
    }
    let g = Arc::clone(f);
    let integrand = move |x: f64| g(x);
    let half = 0.5 * period;
    let boundary = |k: usize| k as f64 * half;
    sum_cells(&integrand, &boundary, singularity.exponent() > 0.0, tol)
}
