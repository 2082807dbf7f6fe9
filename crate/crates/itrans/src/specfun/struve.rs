//! Modified Struve function **L**₀.

use super::gamma::gamma_raw;
use super::{domain, Result, SpecialValue};

/// Ascending series: L₀(x) = Σ_k (x/2)^{2k+1} / Γ(k + 3/2)².
/// All terms positive, so the sum carries no cancellation; it needs O(x)
/// terms but stays inside f64 range for x <= 50 comfortably.
pub(crate) fn struve_l0_raw(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let q = x * x / 4.0;
    let g32 = gamma_raw(1.5);
    let mut term = (x / 2.0) / (g32 * g32);
    let mut sum = term;
    for k in 0..400 {
        let kf = k as f64;
        // Γ(k+5/2) = (k+3/2) Γ(k+3/2), applied to both gamma factors
        let r = kf + 1.5;
        term *= q / (r * r);
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
    }
    sum
}

/// Modified Struve function of order zero, x >= 0.
pub fn struve_l0(x: f64) -> Result<SpecialValue> {
    if !(x >= 0.0) {
        return Err(domain("struve_l0", format!("requires x >= 0, got {x}")));
    }
    Ok(SpecialValue::with_rel_ulps(struve_l0_raw(x), 8.0))
}
