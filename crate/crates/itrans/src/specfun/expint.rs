//! Exponential integrals: E₁, its e^x-scaled form, and the Schlömilch
//! family Eₙ(x) = ∫₁^∞ e^{-xt} t^{-n} dt. E₁(x) = -Ei(-x).

use super::{domain, Result, SpecialValue};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Series branch for x <= 1 (returns E_n(x) itself).
fn expint_series(n: u32, x: f64) -> f64 {
    let nm1 = n as i64 - 1;
    let mut ans = if nm1 != 0 {
        1.0 / nm1 as f64
    } else {
        -x.ln() - EULER_GAMMA
    };
    let mut fact = 1.0;
    for i in 1..=400i64 {
        fact *= -x / i as f64;
        let del = if i != nm1 {
            -fact / (i - nm1) as f64
        } else {
            let psi = -EULER_GAMMA + (1..=nm1).map(|k| 1.0 / k as f64).sum::<f64>();
            fact * (-x.ln() + psi)
        };
        ans += del;
        if del.abs() < ans.abs() * 1e-16 {
            return ans;
        }
    }
    ans
}

/// Continued-fraction branch for x > 1 (modified Lentz). Returns the
/// e^x-scaled value e^x E_n(x).
fn expint_cf_scaled(n: u32, x: f64) -> f64 {
    let tiny = 1e-300;
    let nf = n as f64;
    let mut b = x + nf;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=400 {
        let a = -(i as f64) * (nf - 1.0 + i as f64);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h
}

pub(crate) fn expint_e1_raw(x: f64) -> f64 {
    if !(x > 0.0) {
        return f64::NAN;
    }
    if x <= 1.0 {
        expint_series(1, x)
    } else {
        expint_cf_scaled(1, x) * (-x).exp()
    }
}

/// e^x E₁(x); stays representable where e^x alone would overflow.
pub(crate) fn expint_e1_scaled_raw(x: f64) -> f64 {
    if !(x > 0.0) {
        return f64::NAN;
    }
    if x <= 1.0 {
        x.exp() * expint_series(1, x)
    } else {
        expint_cf_scaled(1, x)
    }
}

/// Exponential integral E₁(x), x > 0 (real branch).
pub fn expint_e1(x: f64) -> Result<SpecialValue> {
    if !(x > 0.0) {
        return Err(domain("expint_e1", format!("requires x > 0, got {x}")));
    }
    Ok(SpecialValue::with_rel_ulps(expint_e1_raw(x), 8.0))
}

/// Scaled exponential integral e^x E₁(x), x > 0.
pub fn expint_e1_scaled(x: f64) -> Result<SpecialValue> {
    if !(x > 0.0) {
        return Err(domain("expint_e1_scaled", format!("requires x > 0, got {x}")));
    }
    Ok(SpecialValue::with_rel_ulps(expint_e1_scaled_raw(x), 8.0))
}

/// Schlömilch function Eₙ(x), n >= 0, x > 0. E₀(x) = e^{-x}/x.
pub fn schlomilch_en(n: u32, x: f64) -> Result<SpecialValue> {
    if !(x > 0.0) {
        return Err(domain("schlomilch_en", format!("requires x > 0, got {x}")));
    }
    let v = if n == 0 {
        (-x).exp() / x
    } else if x <= 1.0 {
        expint_series(n, x)
    } else {
        expint_cf_scaled(n, x) * (-x).exp()
    };
    Ok(SpecialValue::with_rel_ulps(v, 8.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn e1_reference_values() {
        let refs = [
            (0.3, 0.90567665167584671243),
            (1.0, 0.21938393439552027368),
            (2.5, 0.024914917870269735496),
            (10.0, 4.1569689296853242774e-6),
        ];
        for (x, want) in refs {
            assert!(rel(expint_e1(x).unwrap().value, want) < 1e-13, "E1({x})");
        }
    }

    #[test]
    fn e1_scaled_matches_and_survives_large_x() {
        assert!(rel(expint_e1_scaled(700.0).unwrap().value, 0.0014265364183008866918) < 1e-13);
        for x in [0.5, 2.0, 30.0] {
            let s = expint_e1_scaled(x).unwrap().value;
            let d = expint_e1(x).unwrap().value * x.exp();
            assert!(rel(s, d) < 1e-13);
        }
    }

    #[test]
    fn e1_positive_decreasing_asymptotic() {
        let mut prev = f64::INFINITY;
        for x in [0.1, 0.5, 1.0, 3.0, 8.0, 20.0] {
            let v = expint_e1(x).unwrap().value;
            assert!(v > 0.0 && v < prev);
            prev = v;
        }
        // leading asymptotic term: x e^x E1(x) -> 1
        let t = 100.0 * expint_e1_scaled(100.0).unwrap().value;
        assert!((t - 1.0).abs() < 0.02);
    }

    #[test]
    fn en_reference_and_closed_form() {
        // E0(1) = e^{-1}
        assert!(rel(schlomilch_en(0, 1.0).unwrap().value, (-1.0f64).exp()) < 1e-15);
        assert!(rel(schlomilch_en(2, 1.5).unwrap().value, 0.07310078653848085108) < 1e-13);
        assert!(rel(schlomilch_en(3, 0.4).unwrap().value, 0.25728642331994478851) < 1e-13);
        // E1 via the n-parameterized entry agrees with the dedicated one
        assert!(rel(
            schlomilch_en(1, 0.8).unwrap().value,
            expint_e1(0.8).unwrap().value
        ) < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(expint_e1(0.0).is_err());
        assert!(expint_e1(-2.0).is_err());
        assert!(schlomilch_en(2, 0.0).is_err());
    }
}
