//! Grid verification of the identity catalog.
//!
//! `verify_all` fans the independent (record, point) tasks across worker
//! threads and merges the results deterministically by catalog and grid
//! order, so the report bytes never depend on the worker count.

use rayon::prelude::*;

use crate::quadrature::Tolerance;

use super::catalog::{catalog, IdentityRecord, ParamPoint};
use super::report::{PointResult, VerificationReport};

/// Quadrature tolerances used by the record evaluators.
#[derive(Clone, Copy, Debug)]
pub struct QuadSettings {
    smooth: Tolerance,
    osc: Tolerance,
    /// Inner integrals of nested evaluations run this much tighter.
    inner_factor: f64,
}

impl QuadSettings {
    pub fn outer_smooth(&self) -> Tolerance {
        self.smooth
    }

    pub fn outer_osc(&self) -> Tolerance {
        self.osc
    }

    pub fn inner_smooth(&self) -> Tolerance {
        self.smooth.tightened(self.inner_factor)
    }
}

/// A named set of quadrature tolerances; reports record which one ran.
#[derive(Clone, Debug)]
pub struct ToleranceProfile {
    pub name: String,
    pub quad: QuadSettings,
}

impl ToleranceProfile {
    /// The profile the acceptance thresholds are pinned against.
    pub fn default_profile() -> Self {
        ToleranceProfile {
            name: "default".into(),
            quad: QuadSettings {
                smooth: Tolerance {
                    rel: 1e-10,
                    abs: 1e-12,
                    max_evals: 200_000,
                },
                osc: Tolerance {
                    rel: 1e-8,
                    abs: 1e-12,
                    max_evals: 200_000,
                },
                inner_factor: 100.0,
            },
        }
    }

    /// Looser, cheaper smoke profile. Residual thresholds stay the same,
    /// so marginal records may fail here; that is the point of a smoke run.
    pub fn quick() -> Self {
        ToleranceProfile {
            name: "quick".into(),
            quad: QuadSettings {
                smooth: Tolerance {
                    rel: 1e-8,
                    abs: 1e-10,
                    max_evals: 60_000,
                },
                osc: Tolerance {
                    rel: 1e-7,
                    abs: 1e-10,
                    max_evals: 60_000,
                },
                inner_factor: 100.0,
            },
        }
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "default" => Some(Self::default_profile()),
            "quick" => Some(Self::quick()),
            _ => None,
        }
    }
}

/// |rhs| floor below which the pass rule switches to the absolute residual.
const RESIDUAL_FLOOR: f64 = 1e-10;

fn point_result(
    record: &IdentityRecord,
    point: &ParamPoint,
    q: &QuadSettings,
    rel_tol: f64,
) -> PointResult {
    let mut out = PointResult {
        id: record.id.to_string(),
        family: record.family.to_string(),
        point: *point,
        lhs: f64::NAN,
        rhs: f64::NAN,
        abs_residual: f64::NAN,
        rel_residual: f64::NAN,
        pass: false,
        note: None,
    };
    let lhs = match (record.lhs)(point, q) {
        Ok(v) => v,
        Err(e) => {
            out.note = Some(format!("lhs failed: {e}"));
            return out;
        }
    };
    let rhs = match (record.rhs)(point, q) {
        Ok(v) => v,
        Err(e) => {
            out.lhs = lhs.value;
            out.note = Some(format!("rhs failed: {e}"));
            return out;
        }
    };
    out.lhs = lhs.value;
    out.rhs = rhs.value;
    out.abs_residual = (lhs.value - rhs.value).abs();
    out.rel_residual = out.abs_residual / rhs.value.abs().max(RESIDUAL_FLOOR);

    let scale = rhs.value.abs().max(RESIDUAL_FLOOR);
    if !lhs.converged && lhs.abs_err > 0.25 * rel_tol * scale {
        // an evaluation whose own error bar rivals the tolerance cannot
        // certify the identity
        out.note = Some(format!(
            "lhs did not converge (err ~ {:.2e})",
            lhs.abs_err
        ));
        return out;
    }
    if !rhs.converged && rhs.abs_err > 0.25 * rel_tol * scale {
        out.note = Some(format!(
            "rhs did not converge (err ~ {:.2e})",
            rhs.abs_err
        ));
        return out;
    }

    out.pass = if rhs.value.abs() < RESIDUAL_FLOOR {
        out.abs_residual <= rel_tol
    } else {
        out.rel_residual <= rel_tol
    };
    out
}

/// Verify one record over a grid (defaults to the record's own grid), with
/// an optional override of the pass tolerance.
pub fn verify(
    record: &IdentityRecord,
    grid: &[ParamPoint],
    profile: &ToleranceProfile,
    tol_override: Option<f64>,
) -> VerificationReport {
    let rel_tol = tol_override.unwrap_or_else(|| record.tol_class.rel_tol());
    let results: Vec<PointResult> = grid
        .par_iter()
        .map(|p| point_result(record, p, &profile.quad, rel_tol))
        .collect();
    VerificationReport::from_results(profile.name.clone(), results)
}

/// Run the full catalog on its default grids.
pub fn verify_all(profile: &ToleranceProfile) -> VerificationReport {
    let cat = catalog();
    let tasks: Vec<(usize, usize)> = cat
        .iter()
        .enumerate()
        .flat_map(|(ri, r)| (0..r.grid.len()).map(move |pi| (ri, pi)))
        .collect();
    let mut indexed: Vec<((usize, usize), PointResult)> = tasks
        .par_iter()
        .map(|&(ri, pi)| {
            let record = &cat[ri];
            let point = &record.grid[pi];
            let res = point_result(record, point, &profile.quad, record.tol_class.rel_tol());
            ((ri, pi), res)
        })
        .collect();
    indexed.sort_by_key(|(k, _)| *k);
    VerificationReport::from_results(
        profile.name.clone(),
        indexed.into_iter().map(|(_, r)| r).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles_resolve_by_name() {
        assert!(ToleranceProfile::by_name("default").is_some());
        assert!(ToleranceProfile::by_name("quick").is_some());
        assert!(ToleranceProfile::by_name("nope").is_none());
    }

    #[test]
    fn empty_grid_gives_empty_report() {
        let cat = catalog();
        let profile = ToleranceProfile::default_profile();
        let report = verify(&cat[0], &[], &profile, None);
        assert_eq!(report.summary.n_pass, 0);
        assert_eq!(report.summary.n_fail, 0);
        assert!(report.results.is_empty());
    }

    #[test]
    fn single_record_verification_gl_power() {
        let cat = catalog();
        let rec = cat.iter().find(|r| r.id == "GL-POWER").unwrap();
        let profile = ToleranceProfile::default_profile();
        let report = verify(rec, &rec.grid, &profile, None);
        assert_eq!(report.summary.n_fail, 0, "{}", report.render_text());
        assert!(report.summary.worst_rel < 1e-8);
    }

    #[test]
    fn ex1_c_reference_point() {
        // E21{(1/u) e^{-u^2}; 2} at y=1: sqrt(pi)(pi - 2 asin(1/2))/(2 sqrt(3))
        let cat = catalog();
        let rec = cat.iter().find(|r| r.id == "EX1-C").unwrap();
        let profile = ToleranceProfile::default_profile();
        let p = ParamPoint {
            y: Some(1.0),
            z: Some(2.0),
            ..Default::default()
        };
        let report = verify(rec, &[p], &profile, Some(1e-6));
        assert_eq!(report.summary.n_fail, 0, "{}", report.render_text());
        let r = &report.results[0];
        assert!((r.rhs - 1.0716252226356387085).abs() < 1e-12);
        assert!((r.lhs - r.rhs).abs() / r.rhs < 1e-6);
    }

    #[test]
    fn gl_jnu_reference_point() {
        // G{J_0(2x); 1} = I_0(1) K_0(1)
        let cat = catalog();
        let rec = cat.iter().find(|r| r.id == "GL-JNU").unwrap();
        let profile = ToleranceProfile::default_profile();
        let p = ParamPoint {
            nu: Some(0.0),
            y: Some(1.0),
            z: Some(2.0),
            ..Default::default()
        };
        let report = verify(rec, &[p], &profile, Some(1e-6));
        assert_eq!(report.summary.n_fail, 0, "{}", report.render_text());
        assert!((report.results[0].rhs - 0.53304467495626862019).abs() < 1e-12);
    }
}
