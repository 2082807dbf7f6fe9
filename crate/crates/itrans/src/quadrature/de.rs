//! Double-exponential (tanh-sinh / exp-sinh) trapezoidal rules with level
//! refinement. The variable changes push the integrand's endpoint behavior
//! into double-exponentially decaying trapezoid terms, so halving the step
//! roughly doubles the correct digits for analytic integrands.
//!
//! tanh-sinh nodes are anchored to the nearer endpoint (x = a + δ or
//! b − δ with δ computed in its own floating-point scale). Nodes closer to
//! an endpoint than a crisp cutoff (2048 float spacings) are not evaluated:
//! x quantizes too coarsely there to sample a singular integrand honestly.
//! Instead the integrand is probed just outside the cutoff, fitted to
//! C·δ^{-s}, and the trapezoid lattice is continued over the dropped nodes
//! with the fitted model, inside the refinement loop, so power-law
//! endpoints converge to full declared accuracy instead of stalling at the
//! f64 representability wall.

use super::{IntegrationResult, QuadError, Result, Tolerance};

const H0: f64 = 0.5;
const MAX_LEVEL: usize = 12;
/// |t| beyond which the node maps under/overflow f64 no matter the integrand.
const T_MAX: f64 = 6.56;
const HALF_PI: f64 = std::f64::consts::FRAC_PI_2;
/// Endpoint cutoff in units of the local float spacing: wide enough that
/// every swept node sees a relative x-quantization below 2^-22.
const CUT_SPACINGS: f64 = 4_194_304.0;

struct Accum {
    sum: f64,
    abs_sum: f64,
    n_evals: usize,
}

impl Accum {
    fn new() -> Self {
        Accum {
            sum: 0.0,
            abs_sum: 0.0,
            n_evals: 0,
        }
    }
}

/// One trapezoid pass at step `h`, visiting t = sign·(t0 + k·dt)·h.
/// `node` maps t to (x, weight) or None once the map leaves its range.
fn sweep_side(
    acc: &mut Accum,
    h: f64,
    t0: f64,
    dt: f64,
    sign: f64,
    max_evals: usize,
    node: &impl Fn(f64) -> Option<(f64, f64)>,
    f: &(dyn Fn(f64) -> f64 + '_),
) -> Result<()> {
    let mut t = t0 * h;
    let mut negligible_run = 0;
    while t <= T_MAX {
        let Some((x, w)) = node(sign * t) else {
            break; // node map left its representable range: tail is done
        };
        let fx = f(x);
        if !fx.is_finite() {
            return Err(QuadError::NonFiniteEvaluation { x });
        }
        let term = w * fx;
        acc.sum += term;
        acc.abs_sum += term.abs();
        acc.n_evals += 1;
        if acc.n_evals > max_evals {
            break;
        }
        // the weights decay double-exponentially: once several successive
        // terms are negligible against the running sum, the tail is spent
        // (only after real mass has been seen; a badly-centered scale hint
        // must keep walking until it finds the integrand)
        if acc.abs_sum > 0.0 && term.abs() <= 1e-18 * acc.abs_sum {
            negligible_run += 1;
            if negligible_run >= 3 {
                break;
            }
        } else {
            negligible_run = 0;
        }
        t += dt * h;
    }
    Ok(())
}

/// Generic level refinement for a node map without endpoint correction.
fn refine(
    node: impl Fn(f64) -> Option<(f64, f64)>,
    f: &(dyn Fn(f64) -> f64 + '_),
    tol: &Tolerance,
) -> Result<IntegrationResult> {
    let mut acc = Accum::new();
    sweep_side(&mut acc, H0, 0.0, 1.0, 1.0, tol.max_evals, &node, f)?;
    sweep_side(&mut acc, H0, 1.0, 1.0, -1.0, tol.max_evals, &node, f)?;
    let mut h = H0;
    let mut value = acc.sum * h;
    let mut err = f64::INFINITY;

    for _level in 1..=MAX_LEVEL {
        h *= 0.5;
        sweep_side(&mut acc, h, 1.0, 2.0, 1.0, tol.max_evals, &node, f)?;
        sweep_side(&mut acc, h, 1.0, 2.0, -1.0, tol.max_evals, &node, f)?;
        let new_value = acc.sum * h;
        err = (new_value - value).abs();
        value = new_value;
        let noise = 4.0 * f64::EPSILON * acc.abs_sum * h;
        if err <= tol.target(value).max(noise) || acc.n_evals >= tol.max_evals {
            let converged = err <= tol.target(value).max(noise);
            return Ok(IntegrationResult {
                value,
                abs_err: err.max(noise),
                n_evals: acc.n_evals,
                converged,
            });
        }
    }
    Ok(IntegrationResult {
        value,
        abs_err: err,
        n_evals: acc.n_evals,
        converged: false,
    })
}

/// ∫₀^∞ f(x) dx for decaying f, nodes x = σ·exp((π/2)·sinh t).
pub(crate) fn exp_sinh(
    f: &(dyn Fn(f64) -> f64 + '_),
    scale: f64,
    tol: &Tolerance,
) -> Result<IntegrationResult> {
    let ln_scale = scale.ln();
    let node = move |t: f64| {
        let u = HALF_PI * t.sinh() + ln_scale;
        if !(-740.0..=705.0).contains(&u) {
            return None;
        }
        let x = u.exp();
        let w = x * HALF_PI * t.cosh();
        if !w.is_finite() {
            return None;
        }
        Some((x, w))
    };
    refine(node, f, tol)
}

/// Local float spacing just inside the interval at `endpoint`.
fn spacing_inward(endpoint: f64, toward_interior: f64) -> f64 {
    if endpoint == 0.0 {
        return 0.0;
    }
    let bits = endpoint.to_bits();
    let neighbor = if (endpoint > 0.0) == (toward_interior > 0.0) {
        f64::from_bits(bits + 1)
    } else {
        f64::from_bits(bits - 1)
    };
    (neighbor - endpoint).abs()
}

/// Distance from the endpoint at |t|: δ(t) = (b-a)/(1+e^{2u}), u = (π/2)sinh t.
fn endpoint_distance(d2: f64, t: f64) -> f64 {
    let u = HALF_PI * t.sinh();
    if u > 353.0 {
        return 0.0;
    }
    d2 / (1.0 + (2.0 * u).exp())
}

/// Power-law endpoint model f ≈ sign · e^{ln_c} · δ^{-s}.
struct TailFit {
    sign: f64,
    ln_c: f64,
    s: f64,
    /// Relative model mismatch measured at the cutoff (the far edge of the
    /// modeled zone, where the power-law approximation is weakest).
    rel_mismatch: f64,
}

/// Probe the integrand deep inside the cutoff zone (where x is exactly
/// representable relative to the endpoint) and fit the power law. None when
/// the integrand does not grow toward the endpoint; the dropped mass is
/// then bounded by |f|·cut and folded into the error instead.
fn tail_fit(
    f: &(dyn Fn(f64) -> f64 + '_),
    endpoint: f64,
    toward_interior: f64,
    d2: f64,
    cut: f64,
) -> (Option<TailFit>, f64) {
    if cut <= 0.0 || cut >= 0.001 * d2 || cut / 16384.0 < 4.0 * spacing_inward(endpoint, toward_interior)
    {
        return (None, 0.0);
    }
    let probes = [cut / 256.0, cut / 2048.0, cut / 16384.0];
    let mut fv = [0.0f64; 3];
    for (i, dp) in probes.iter().enumerate() {
        let v = f(endpoint + toward_interior * dp);
        if !v.is_finite() {
            return (None, 0.0);
        }
        fv[i] = v;
    }
    let f_edge = f(endpoint + toward_interior * cut);
    if !f_edge.is_finite() {
        return (None, fv[0].abs() * cut * 2.0);
    }

    let growing = fv.iter().all(|v| *v != 0.0)
        && fv[0].signum() == fv[1].signum()
        && fv[1].signum() == fv[2].signum()
        && fv[2].abs() > fv[1].abs()
        && fv[1].abs() > fv[0].abs();
    if growing {
        let ln8 = 8.0f64.ln();
        let s = (fv[2].abs() / fv[1].abs()).ln() / ln8;
        if (0.001..=0.999).contains(&s) && f_edge.signum() == fv[2].signum() {
            let ln_c = fv[2].abs().ln() + s * probes[2].ln();
            // validate at the cutoff itself: the model's worst point
            let model_edge = (ln_c - s * cut.ln()).exp();
            let rel_mismatch = (f_edge.abs() - model_edge).abs() / model_edge;
            return (
                Some(TailFit {
                    sign: fv[2].signum(),
                    ln_c,
                    s,
                    rel_mismatch,
                }),
                0.0,
            );
        }
    }

    // bounded endpoint: constant model C = f(cut), probes bound the wobble
    if f_edge == 0.0 {
        return (None, fv[0].abs() * cut * 2.0);
    }
    let rel_mismatch = fv
        .iter()
        .map(|v| (v - f_edge).abs())
        .fold(0.0f64, f64::max)
        / f_edge.abs();
    (
        Some(TailFit {
            sign: f_edge.signum(),
            ln_c: f_edge.abs().ln(),
            s: 0.0,
            rel_mismatch,
        }),
        0.0,
    )
}

/// Trapezoid continuation of the fitted model over the dropped lattice
/// nodes (those with δ(t_k) < cut, the exact complement of the sweep's
/// inclusion predicate). Returns (tail, model error estimate).
fn model_tail(fit: &Option<TailFit>, d2: f64, cut: f64, h: f64) -> (f64, f64) {
    let Some(fit) = fit else {
        return (0.0, 0.0);
    };
    // first dropped node is near δ(t*) = cut; walk back a little and apply
    // the same predicate the sweep used
    let u_star = 0.5 * ((d2 / cut - 1.0).max(1.0)).ln();
    let t_star = (u_star / HALF_PI).asinh();
    let k_lo = ((t_star / h).floor() as usize).saturating_sub(3);
    let mut tail = 0.0;
    let mut first = 0.0;
    let mut last = 0.0;
    for k in k_lo..k_lo + 200_000 {
        let t = k as f64 * h;
        if endpoint_distance(d2, t) >= cut {
            continue; // this node was evaluated by the sweep
        }
        let u = HALF_PI * t.sinh();
        let (ln_cosh2u, ln_delta) = if u > 20.0 {
            (2.0 * u - (4.0f64).ln(), d2.ln() - 2.0 * u)
        } else {
            (2.0 * u.cosh().ln(), (d2 / (1.0 + (2.0 * u).exp())).ln())
        };
        let ln_w = (0.5 * d2 * HALF_PI).ln() + t.cosh().ln() - ln_cosh2u;
        let ln_term = ln_w + fit.ln_c - fit.s * ln_delta + h.ln();
        if ln_term < -745.0 {
            break;
        }
        last = ln_term.exp();
        tail += last;
        if first == 0.0 {
            first = last;
        }
        if last < 1e-18 * tail {
            break;
        }
    }
    let err = tail * 2.0 * fit.rel_mismatch + first * 1e-10 + last;
    (fit.sign * tail, err)
}

/// ∫ₐᵇ f(x) dx with endpoint-anchored nodes and in-loop power-law tail
/// recovery at singular endpoints.
pub(crate) fn tanh_sinh(
    f: &(dyn Fn(f64) -> f64 + '_),
    a: f64,
    b: f64,
    tol: &Tolerance,
) -> Result<IntegrationResult> {
    let c = 0.5 * (a + b);
    let d = 0.5 * (b - a);
    let d2 = b - a;
    let cut_b = (CUT_SPACINGS * spacing_inward(b, -1.0)).min(1e-4 * d2);
    let cut_a = (CUT_SPACINGS * spacing_inward(a, 1.0)).min(1e-4 * d2);
    let node = move |t: f64| {
        if t == 0.0 {
            return Some((c, d * HALF_PI));
        }
        let delta = endpoint_distance(d2, t.abs());
        let (x, cut) = if t > 0.0 {
            (b - delta, cut_b)
        } else {
            (a + delta, cut_a)
        };
        if delta < cut || x <= a || x >= b {
            return None;
        }
        let u = HALF_PI * t.sinh();
        let cosh_u = u.cosh();
        let w = d * HALF_PI * t.cosh() / (cosh_u * cosh_u);
        if !w.is_finite() || w == 0.0 {
            return None;
        }
        Some((x, w))
    };

    let (fit_b, bound_b) = tail_fit(f, b, -1.0, d2, cut_b);
    let (fit_a, bound_a) = tail_fit(f, a, 1.0, d2, cut_a);

    let mut acc = Accum::new();
    sweep_side(&mut acc, H0, 0.0, 1.0, 1.0, tol.max_evals, &node, f)?;
    sweep_side(&mut acc, H0, 1.0, 1.0, -1.0, tol.max_evals, &node, f)?;
    acc.n_evals += 6; // probes
    let mut h = H0;
    let corrected = |acc: &Accum, h: f64| {
        let (ta, ea) = model_tail(&fit_a, d2, cut_a, h);
        let (tb, eb) = model_tail(&fit_b, d2, cut_b, h);
        (acc.sum * h + ta + tb, ea + eb)
    };
    let (mut value, mut tail_err) = corrected(&acc, h);
    let mut err = f64::INFINITY;

    for _level in 1..=MAX_LEVEL {
        h *= 0.5;
        sweep_side(&mut acc, h, 1.0, 2.0, 1.0, tol.max_evals, &node, f)?;
        sweep_side(&mut acc, h, 1.0, 2.0, -1.0, tol.max_evals, &node, f)?;
        let (new_value, new_tail_err) = corrected(&acc, h);
        err = (new_value - value).abs();
        value = new_value;
        tail_err = new_tail_err;
        let noise = 4.0 * f64::EPSILON * acc.abs_sum * h;
        let total_err = err.max(noise) + tail_err + bound_a + bound_b;
        if total_err <= tol.target(value) || acc.n_evals >= tol.max_evals {
            return Ok(IntegrationResult {
                value,
                abs_err: total_err,
                n_evals: acc.n_evals,
                converged: total_err <= tol.target(value),
            });
        }
    }
    Ok(IntegrationResult {
        value,
        abs_err: err + tail_err + bound_a + bound_b,
        n_evals: acc.n_evals,
        converged: false,
    })
}
