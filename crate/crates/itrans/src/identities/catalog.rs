//! The executable identity catalog: every record pairs a numerically
//! evaluated left-hand pipeline with a reference right-hand side (closed
//! form over the special-function kernel where one exists, an independent
//! transform pipeline otherwise), a parameter grid inside the identity's
//! validity strip, and a tolerance class.
//!
//! Nested transforms are evaluated as iterated one-dimensional quadrature
//! with the inner tolerance tightened 100× and inner results memoized per
//! outer node. Conditionally convergent oscillatory sides are summed in
//! the zero-partitioned, epsilon-accelerated (mean) sense, which is the
//! value the identities take.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::quadrature::{
    integrate_semi_infinite, DecayClass, Function1D, IntegrationResult, Singularity,
};
use crate::specfun;
use crate::specfun::{
    bessel_i_scaled_raw, bessel_k_scaled_raw, dawson_raw, erfc_raw, expint_e1_scaled_raw, gamma_raw,
};
use crate::transforms::{self, corpus, TransformError};

use super::verify::QuadSettings;

const SQRT_PI: f64 = 1.772_453_850_905_516;
const PI: f64 = std::f64::consts::PI;

/// One parameter point of an identity grid. `pair` indexes a corpus
/// function pair where the identity ranges over (f, g) rather than numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ParamPoint {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<u8>,
}

impl ParamPoint {
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        if let Some(v) = self.mu {
            parts.push(format!("mu={v}"));
        }
        if let Some(v) = self.nu {
            parts.push(format!("nu={v}"));
        }
        if let Some(v) = self.y {
            parts.push(format!("y={v}"));
        }
        if let Some(v) = self.z {
            parts.push(format!("z={v}"));
        }
        if let Some(v) = self.pair {
            parts.push(format!("pair={v}"));
        }
        parts.join(" ")
    }

    fn req(v: Option<f64>, what: &str) -> f64 {
        v.unwrap_or_else(|| panic!("grid point missing parameter {what}"))
    }

    pub fn mu_(&self) -> f64 {
        Self::req(self.mu, "mu")
    }
    pub fn nu_(&self) -> f64 {
        Self::req(self.nu, "nu")
    }
    pub fn y_(&self) -> f64 {
        Self::req(self.y, "y")
    }
    pub fn z_(&self) -> f64 {
        Self::req(self.z, "z")
    }
}

fn pt(mu: Option<f64>, nu: Option<f64>, y: Option<f64>, z: Option<f64>) -> ParamPoint {
    ParamPoint {
        mu,
        nu,
        y,
        z,
        pair: None,
    }
}

/// Tolerance tier of a record: the relative residual its verification must
/// stay under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TolClass {
    /// Direct quadrature against a closed form.
    Smooth,
    /// Oscillatory or nested-transform pipelines.
    Oscillatory,
    /// Grids that approach a singular edge of the validity strip.
    NearSingular,
}

impl TolClass {
    pub fn rel_tol(self) -> f64 {
        match self {
            TolClass::Smooth => 1e-8,
            TolClass::Oscillatory => 1e-6,
            TolClass::NearSingular => 1e-4,
        }
    }
}

/// Value and error bound of one side of an identity at one point.
#[derive(Clone, Copy, Debug)]
pub struct EvalOutcome {
    pub value: f64,
    pub abs_err: f64,
    pub converged: bool,
}

impl EvalOutcome {
    fn from_integration(r: IntegrationResult) -> Self {
        EvalOutcome {
            value: r.value,
            abs_err: r.abs_err,
            converged: r.converged,
        }
    }

    fn closed(v: specfun::SpecialValue) -> Self {
        EvalOutcome {
            value: v.value,
            abs_err: v.abs_err_bound,
            converged: true,
        }
    }

    fn exact(value: f64) -> Self {
        EvalOutcome {
            value,
            abs_err: value.abs() * f64::EPSILON * 16.0,
            converged: true,
        }
    }
}

pub type Eval =
    Arc<dyn Fn(&ParamPoint, &QuadSettings) -> Result<EvalOutcome, TransformError> + Send + Sync>;

/// One identity of the catalog.
pub struct IdentityRecord {
    pub id: &'static str,
    pub family: &'static str,
    /// The identity itself, in plain ASCII. `L2`, `L`, `G`, `FS`, `FC`,
    /// `H_nu`, `K_nu`, `E1t`, `E21`, `P` are the transform operators.
    pub anchor: &'static str,
    /// Caveats: corrected constants, strip-boundary summation, etc.
    pub note: Option<&'static str>,
    pub tol_class: TolClass,
    pub grid: Vec<ParamPoint>,
    pub lhs: Eval,
    pub rhs: Eval,
}

fn memo(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Arc<dyn Fn(f64) -> f64 + Send + Sync> {
    let cache: Mutex<HashMap<u64, f64>> = Mutex::new(HashMap::new());
    Arc::new(move |x: f64| {
        let key = x.to_bits();
        if let Some(v) = cache.lock().unwrap().get(&key) {
            return *v;
        }
        let v = f(x);
        cache.lock().unwrap().insert(key, v);
        v
    })
}

/// x · f(x) with folded metadata.
fn times_x(f: &Function1D) -> Function1D {
    let fe = f.eval_fn();
    let decay = match f.decay() {
        DecayClass::Algebraic { p } => DecayClass::Algebraic { p: p - 1.0 },
        other => other,
    };
    Function1D::new(move |x| x * fe(x), decay, f.singularity().shifted(1.0))
}

/// x^a e^{-x^2}.
fn gauss_xpow(a: f64) -> Function1D {
    Function1D::new(
        move |x: f64| x.powf(a) * (-x * x).exp(),
        DecayClass::Gaussian,
        if a < 0.0 {
            Singularity::Integrable { exponent: -a }
        } else {
            Singularity::None
        },
    )
}

/// G{x/(x²+z²); y} closed form, all three branches.
fn glasser_widder_kernel(z: f64, y: f64) -> f64 {
    if y < z {
        let c = (z * z - y * y).sqrt();
        (PI - 2.0 * (y / z).asin()) / (2.0 * c)
    } else if y == z {
        1.0 / y
    } else {
        let c = (y * y - z * z).sqrt();
        ((y + c) / (y - c)).ln() / (2.0 * c)
    }
}

/// L{x e^{-x²}; z} = 1/2 − (z√π/4) e^{z²/4} erfc(z/2).
fn laplace_x_gauss(z: f64) -> f64 {
    0.5 - z * SQRT_PI / 4.0 * (z * z / 4.0).exp() * erfc_raw(z / 2.0)
}

/// Memoized inner L2 transform of a corpus function: u ↦ L2{f; u}.
fn inner_l2(f: Function1D, q: &QuadSettings) -> Arc<dyn Fn(f64) -> f64 + Send + Sync> {
    let tol = q.inner_smooth();
    memo(move |u: f64| {
        transforms::l2(&f, u, &tol)
            .map(|r| r.value)
            .unwrap_or(f64::NAN)
    })
}

/// Memoized inner Glasser transform of x·f: u ↦ G{x f(x); u}.
fn inner_glasser_x(f: &Function1D, q: &QuadSettings) -> Arc<dyn Fn(f64) -> f64 + Send + Sync> {
    let xf = times_x(f);
    let tol = q.inner_smooth();
    memo(move |u: f64| {
        transforms::glasser(&xf, u, &tol)
            .map(|r| r.value)
            .unwrap_or(f64::NAN)
    })
}

/// Composite evaluations inherit the inner tolerance as extra error.
fn nested_outcome(r: IntegrationResult, q: &QuadSettings) -> EvalOutcome {
    EvalOutcome {
        value: r.value,
        abs_err: r.abs_err + r.value.abs() * q.inner_smooth().rel * 4.0,
        converged: r.converged,
    }
}

fn nested_scaled(r: IntegrationResult, c: f64, q: &QuadSettings) -> EvalOutcome {
    EvalOutcome {
        value: c * r.value,
        abs_err: c.abs() * (r.abs_err + r.value.abs() * q.inner_smooth().rel * 4.0),
        converged: r.converged,
    }
}

/// LHS of the iteration identity: L2{(1/u) L2{f; u}; y}, iterated numerically.
fn nested_l2_l2(
    f: Function1D,
    p: &ParamPoint,
    q: &QuadSettings,
) -> Result<EvalOutcome, TransformError> {
    let inner = inner_l2(f, q);
    let operand = Function1D::new(
        move |u| inner(u) / u,
        DecayClass::Algebraic { p: 3.0 },
        Singularity::Integrable { exponent: 1.0 },
    );
    let r = transforms::l2(&operand, p.y_(), &q.outer_smooth())?;
    Ok(nested_outcome(r, q))
}

/// The inverted-argument nested transform of the Hankel/K chain:
/// L2{y^{2ν-1} L2{f; 1/(2y)}; z}.
fn nested_l2_inverted(
    f: Function1D,
    nu: f64,
    z: f64,
    q: &QuadSettings,
) -> Result<EvalOutcome, TransformError> {
    let inner = inner_l2(f, q);
    let operand = Function1D::new(
        move |y: f64| y.powf(2.0 * nu - 1.0) * inner(1.0 / (2.0 * y)),
        DecayClass::Algebraic { p: 1.0 - 2.0 * nu },
        Singularity::None, // behaves like y^{2ν+1} at 0 for the corpus
    );
    let r = transforms::l2(&operand, z, &q.outer_smooth())?;
    Ok(nested_outcome(r, q))
}

/// Glasser image of x·f as an oscillatory envelope: u^pow · G{x f; u}.
/// G{x f; u} ~ (∫ x f)/u for large u, so the envelope decays like u^{pow-1}.
fn glasser_envelope(f: &Function1D, pow: f64, q: &QuadSettings) -> Function1D {
    let g = inner_glasser_x(f, q);
    Function1D::new(
        move |u: f64| u.powf(pow) * g(u),
        DecayClass::Algebraic { p: 1.0 - pow },
        if pow < 0.0 {
            Singularity::Integrable { exponent: -pow }
        } else {
            Singularity::None
        },
    )
}

/// EX1 closed form √π (π − 2 asin(y/z)) / (2 √(z²−y²)).
///
/// Half the constant the source states: the iteration identity and direct
/// quadrature both force the 2 in the denominator.
fn ex1_rhs(y: f64, z: f64) -> f64 {
    SQRT_PI * (PI - 2.0 * (y / z).asin()) / (2.0 * (z * z - y * y).sqrt())
}

/// EX1 square-root form √π (π − 2 asin(√(y/z))) / √(z−y).
fn ex1_sqrt_rhs(y: f64, z: f64) -> f64 {
    SQRT_PI * (PI - 2.0 * (y / z).sqrt().asin()) / (z - y).sqrt()
}

fn grid_y(ys: &[f64]) -> Vec<ParamPoint> {
    ys.iter().map(|&y| pt(None, None, Some(y), None)).collect()
}

fn grid_z(zs: &[f64]) -> Vec<ParamPoint> {
    zs.iter().map(|&z| pt(None, None, None, Some(z))).collect()
}

fn grid_yz(ys: &[f64], zs: &[f64]) -> Vec<ParamPoint> {
    let mut g = Vec::new();
    for &z in zs {
        for &y in ys {
            g.push(pt(None, None, Some(y), Some(z)));
        }
    }
    g
}

fn grid_nu_z(nus: &[f64], zs: &[f64]) -> Vec<ParamPoint> {
    let mut g = Vec::new();
    for &nu in nus {
        for &z in zs {
            g.push(pt(None, Some(nu), None, Some(z)));
        }
    }
    g
}

fn grid_nu_yz(nus: &[f64], ys: &[f64], zs: &[f64]) -> Vec<ParamPoint> {
    let mut g = Vec::new();
    for &nu in nus {
        for &z in zs {
            for &y in ys {
                g.push(pt(None, Some(nu), Some(y), Some(z)));
            }
        }
    }
    g
}

/// The full catalog. Records are grouped by family; every record's grid
/// lies strictly inside the identity's validity strip (margin ≥ 0.05 on
/// each boundary).
pub fn catalog() -> Vec<IdentityRecord> {
    let mut records = Vec::new();

    // ---- LEMMA1: L2{(1/u) L2{f; u}; y} = (√π/2) G{x f(x); y} ----
    records.push(IdentityRecord {
        id: "LEMMA1-GAUSS",
        family: "LEMMA1",
        anchor: "L2{(1/u) L2{e^(-x^2); u}; y} = (sqrt(pi)/2) G{x e^(-x^2); y} = (pi/4) e^(y^2) erfc(y)",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: grid_y(&[0.5, 1.0, 2.0]),
        lhs: Arc::new(|p, q| nested_l2_l2(corpus::gauss(), p, q)),
        rhs: Arc::new(|p, _| {
            let y = p.y_();
            Ok(EvalOutcome::exact(PI / 4.0 * (y * y).exp() * erfc_raw(y)))
        }),
    });
    records.push(IdentityRecord {
        id: "LEMMA1-CAUCHY",
        family: "LEMMA1",
        anchor: "L2{(1/u) L2{1/(x^2+4); u}; y} = (sqrt(pi)/2) G{x/(x^2+4); y}",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: grid_y(&[0.5, 1.0, 2.0]),
        lhs: Arc::new(|p, q| nested_l2_l2(corpus::cauchy(2.0), p, q)),
        rhs: Arc::new(|p, _| {
            Ok(EvalOutcome::exact(
                SQRT_PI / 2.0 * glasser_widder_kernel(2.0, p.y_()),
            ))
        }),
    });

    // ---- GL-POWER: G{x^(mu-1); y} = 2^-mu B(mu, 1/2-mu/2) y^(mu-1) ----
    records.push(IdentityRecord {
        id: "GL-POWER",
        family: "GL-POWER",
        anchor: "G{x^(mu-1); y} = 2^(-mu) B(mu, 1/2 - mu/2) y^(mu-1), 0 < mu < 1",
        note: None,
        tol_class: TolClass::Smooth,
        grid: {
            let mut g = Vec::new();
            for &mu in &[0.25, 0.5, 0.75] {
                for &y in &[0.5, 1.0, 2.0] {
                    g.push(pt(Some(mu), None, Some(y), None));
                }
            }
            g
        },
        lhs: Arc::new(|p, q| {
            // x^(mu-1) is the moment kernel shifted by one power
            let f = corpus::power(p.mu_() + 1.0);
            let r = transforms::glasser(&f, p.y_(), &q.outer_smooth())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, _| {
            let (mu, y) = (p.mu_(), p.y_());
            let b = specfun::beta(mu, 0.5 - mu / 2.0).map_err(spec_to_transform)?;
            Ok(EvalOutcome {
                value: 2f64.powf(-mu) * b.value * y.powf(mu - 1.0),
                abs_err: 2f64.powf(-mu) * b.abs_err_bound * y.powf(mu - 1.0),
                converged: true,
            })
        }),
    });

    // ---- GL-JNU1: G{x^(nu+1) J_nu(zx); y} ----
    records.push(IdentityRecord {
        id: "GL-JNU1",
        family: "GL-JNU1",
        anchor: "G{x^(nu+1) J_nu(z x); y} = sqrt(2/(pi z)) y^(nu+1/2) K_(nu+1/2)(z y), -1 < nu < 1/2",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: grid_nu_yz(&[-0.5, 0.0], &[0.5, 1.0, 2.0], &[1.0, 2.0]),
        lhs: Arc::new(|p, q| {
            let f = corpus::bessel_j_weighted(p.nu_(), p.z_());
            let r = transforms::glasser(&f, p.y_(), &q.outer_osc())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, _| {
            let (nu, y, z) = (p.nu_(), p.y_(), p.z_());
            let k = specfun::bessel_k(nu + 0.5, z * y).map_err(spec_to_transform)?;
            let c = (2.0 / (PI * z)).sqrt() * y.powf(nu + 0.5);
            Ok(EvalOutcome {
                value: c * k.value,
                abs_err: c * k.abs_err_bound,
                converged: true,
            })
        }),
    });

    // ---- GL-JNU: G{J_nu(zx); y} = I_(nu/2)(zy/2) K_(nu/2)(zy/2) ----
    records.push(IdentityRecord {
        id: "GL-JNU",
        family: "GL-JNU",
        anchor: "G{J_nu(z x); y} = I_(nu/2)(z y/2) K_(nu/2)(z y/2), nu > -1",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: grid_nu_yz(&[-0.5, 0.0, 0.5], &[0.5, 1.0, 2.0], &[1.0, 2.0]),
        lhs: Arc::new(|p, q| {
            let f = corpus::bessel_j_z(p.nu_(), p.z_());
            let r = transforms::glasser(&f, p.y_(), &q.outer_osc())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, _| {
            let (nu, y, z) = (p.nu_(), p.y_(), p.z_());
            let v = specfun::bessel_ik_product(nu / 2.0, z * y / 2.0).map_err(spec_to_transform)?;
            Ok(EvalOutcome::closed(v))
        }),
    });

    // ---- PG: the pairing of L2 against the Glasser transform ----
    // A = ∫ L2{f;y} L2{g;y} dy, B = ∫ x f G{u g; x} dx, C = ∫ u g G{x f; u} du
    let pg_grid: Vec<ParamPoint> = (1..=3)
        .map(|i| ParamPoint {
            pair: Some(i),
            ..Default::default()
        })
        .collect();
    records.push(IdentityRecord {
        id: "PG-1",
        family: "PG",
        anchor: "int L2{f;y} L2{g;y} dy = (sqrt(pi)/2) int x f(x) G{u g(u); x} dx",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: pg_grid.clone(),
        lhs: Arc::new(pg_a),
        rhs: Arc::new(|p, q| {
            let b = pg_pairing(pg_f(p), pg_g(p), q)?;
            Ok(EvalOutcome {
                value: SQRT_PI / 2.0 * b.value,
                abs_err: SQRT_PI / 2.0 * b.abs_err,
                converged: b.converged,
            })
        }),
    });
    records.push(IdentityRecord {
        id: "PG-2",
        family: "PG",
        anchor: "int L2{f;y} L2{g;y} dy = (sqrt(pi)/2) int u g(u) G{x f(x); u} du",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: pg_grid.clone(),
        lhs: Arc::new(pg_a),
        rhs: Arc::new(|p, q| {
            let c = pg_pairing(pg_g(p), pg_f(p), q)?;
            Ok(EvalOutcome {
                value: SQRT_PI / 2.0 * c.value,
                abs_err: SQRT_PI / 2.0 * c.abs_err,
                converged: c.converged,
            })
        }),
    });
    records.push(IdentityRecord {
        id: "PG-3",
        family: "PG",
        anchor: "int x f(x) G{u g(u); x} dx = int u g(u) G{x f(x); u} du",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: pg_grid,
        lhs: Arc::new(|p, q| pg_pairing(pg_f(p), pg_g(p), q)),
        rhs: Arc::new(|p, q| pg_pairing(pg_g(p), pg_f(p), q)),
    });

    // ---- MOMENT: weighted moments of L2 and of the Glasser image ----
    let mu_grid: Vec<ParamPoint> = [0.25, 0.5, 0.75]
        .iter()
        .map(|&mu| pt(Some(mu), None, None, None))
        .collect();
    records.push(IdentityRecord {
        id: "MOMENT-1",
        family: "MOMENT",
        anchor: "int y^(-mu) L2{f; y} dy = (1/2) Gamma(1/2 - mu/2) int x^mu f dx   [f = e^(-x^2)]",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: mu_grid.clone(),
        lhs: Arc::new(|p, q| moment_lhs(p.mu_(), q)),
        rhs: Arc::new(|p, _| {
            let mu = p.mu_();
            Ok(EvalOutcome::exact(
                0.25 * gamma_raw(0.5 - mu / 2.0) * gamma_raw((mu + 1.0) / 2.0),
            ))
        }),
    });
    records.push(IdentityRecord {
        id: "MOMENT-2",
        family: "MOMENT",
        anchor: "int y^(-mu) L2{f; y} dy = (sqrt(pi)/Gamma(mu/2)) int u^(mu-1) G{x f; u} du",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: mu_grid.clone(),
        lhs: Arc::new(|p, q| moment_lhs(p.mu_(), q)),
        rhs: Arc::new(|p, q| {
            let mu = p.mu_();
            let m = moment_glasser(mu, q)?;
            let c = SQRT_PI / gamma_raw(mu / 2.0);
            Ok(EvalOutcome {
                value: c * m.value,
                abs_err: c * m.abs_err,
                converged: m.converged,
            })
        }),
    });
    records.push(IdentityRecord {
        id: "MOMENT-3",
        family: "MOMENT",
        anchor: "int u^(mu-1) G{x f; u} du = (1/2) B(mu/2, 1/2 - mu/2) int x^mu f dx",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: mu_grid,
        lhs: Arc::new(|p, q| moment_glasser(p.mu_(), q)),
        rhs: Arc::new(|p, _| {
            let mu = p.mu_();
            let b = specfun::beta(mu / 2.0, 0.5 - mu / 2.0).map_err(spec_to_transform)?;
            Ok(EvalOutcome::exact(
                0.5 * b.value * 0.5 * gamma_raw((mu + 1.0) / 2.0),
            ))
        }),
    });

    // ---- KHG: the K-transform / Hankel∘Glasser chain, f = e^(-x^2) ----
    let khg_grid = grid_nu_z(&[-0.5, 0.0], &[1.0, 2.0]);
    records.push(IdentityRecord {
        id: "KHG-1",
        family: "KHG",
        anchor: "L2{y^(2nu-1) L2{f; 1/(2y)}; z} = 2^(-nu-1/2) z^(-nu-1) K_(nu+1/2){x^(nu+1) f; z}",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: khg_grid.clone(),
        lhs: Arc::new(|p, q| nested_l2_inverted(corpus::gauss(), p.nu_(), p.z_(), q)),
        rhs: Arc::new(|p, q| {
            let (nu, z) = (p.nu_(), p.z_());
            let r = transforms::k_transform(nu + 0.5, &gauss_xpow(nu + 1.0), z, &q.outer_smooth())?;
            let c = 2f64.powf(-nu - 0.5) * z.powf(-nu - 1.0);
            Ok(EvalOutcome {
                value: c * r.value,
                abs_err: c * r.abs_err,
                converged: r.converged,
            })
        }),
    });
    records.push(IdentityRecord {
        id: "KHG-2",
        family: "KHG",
        anchor: "L2{y^(2nu-1) L2{f; 1/(2y)}; z} = (sqrt(pi)/2^(nu+1)) z^(-nu-1/2) H_nu{u^(nu+1/2) G{x f; u}; z}",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: khg_grid.clone(),
        lhs: Arc::new(|p, q| nested_l2_inverted(corpus::gauss(), p.nu_(), p.z_(), q)),
        rhs: Arc::new(|p, q| {
            let (nu, z) = (p.nu_(), p.z_());
            let env = glasser_envelope(&corpus::gauss(), nu + 0.5, q);
            let r = transforms::hankel(nu, &env, z, &q.outer_osc())?;
            let c = SQRT_PI / 2f64.powf(nu + 1.0) * z.powf(-nu - 0.5);
            Ok(nested_scaled(r, c, q))
        }),
    });
    records.push(IdentityRecord {
        id: "KHG-3",
        family: "KHG",
        anchor: "K_(nu+1/2){x^(nu+1) f; z} = sqrt(pi z/2) H_nu{u^(nu+1/2) G{x f; u}; z}",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: khg_grid,
        lhs: Arc::new(|p, q| {
            let (nu, z) = (p.nu_(), p.z_());
            let r = transforms::k_transform(nu + 0.5, &gauss_xpow(nu + 1.0), z, &q.outer_smooth())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, q| {
            let (nu, z) = (p.nu_(), p.z_());
            let env = glasser_envelope(&corpus::gauss(), nu + 0.5, q);
            let r = transforms::hankel(nu, &env, z, &q.outer_osc())?;
            Ok(nested_scaled(r, (PI * z / 2.0).sqrt(), q))
        }),
    });

    // ---- REM-NU0 (order 0): Laplace and H_0 forms of the chain ----
    records.push(IdentityRecord {
        id: "REM-NU0-1",
        family: "REM-NU0",
        anchor: "L2{(1/y) L2{f; 1/(2y)}; z} = (sqrt(pi)/(2z)) L{x f(x); z}   [f = e^(-x^2)]",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: grid_z(&[0.5, 1.0, 2.0]),
        lhs: Arc::new(|p, q| nested_l2_inverted(corpus::gauss(), 0.0, p.z_(), q)),
        rhs: Arc::new(|p, _| {
            let z = p.z_();
            Ok(EvalOutcome::exact(SQRT_PI / (2.0 * z) * laplace_x_gauss(z)))
        }),
    });
    records.push(IdentityRecord {
        id: "REM-NU0-2",
        family: "REM-NU0",
        anchor: "L2{(1/y) L2{f; 1/(2y)}; z} = (1/2) sqrt(pi/z) H_0{sqrt(u) G{x f; u}; z}",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: grid_z(&[0.5, 1.0, 2.0]),
        lhs: Arc::new(|p, q| nested_l2_inverted(corpus::gauss(), 0.0, p.z_(), q)),
        rhs: Arc::new(|p, q| {
            let z = p.z_();
            let env = glasser_envelope(&corpus::gauss(), 0.5, q);
            let r = transforms::hankel(0.0, &env, z, &q.outer_osc())?;
            Ok(nested_scaled(r, 0.5 * (PI / z).sqrt(), q))
        }),
    });
    records.push(IdentityRecord {
        id: "REM-NU0-3",
        family: "REM-NU0",
        anchor: "L{x f(x); z} = sqrt(z) H_0{sqrt(u) G{x f; u}; z}",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: grid_z(&[0.5, 1.0, 2.0]),
        lhs: Arc::new(|p, q| {
            let r = transforms::laplace(&times_x(&corpus::gauss()), p.z_(), &q.outer_smooth())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, q| {
            let z = p.z_();
            let env = glasser_envelope(&corpus::gauss(), 0.5, q);
            let r = transforms::hankel(0.0, &env, z, &q.outer_osc())?;
            Ok(nested_scaled(r, z.sqrt(), q))
        }),
    });

    // ---- REM-NUMH (order -1/2): K_0 and Fourier-cosine forms ----
    records.push(IdentityRecord {
        id: "REM-NUMH-1",
        family: "REM-NUMH",
        anchor: "L2{y^(-2) L2{f; 1/(2y)}; z} = z^(-1/2) K_0{x^(1/2) f; z}   [f = e^(-x^2)]",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: grid_z(&[0.5, 1.0, 2.0]),
        lhs: Arc::new(|p, q| nested_l2_inverted(corpus::gauss(), -0.5, p.z_(), q)),
        rhs: Arc::new(|p, q| {
            let z = p.z_();
            let r = transforms::k_transform(0.0, &gauss_xpow(0.5), z, &q.outer_smooth())?;
            Ok(EvalOutcome {
                value: r.value / z.sqrt(),
                abs_err: r.abs_err / z.sqrt(),
                converged: r.converged,
            })
        }),
    });
    records.push(IdentityRecord {
        id: "REM-NUMH-2",
        family: "REM-NUMH",
        anchor: "L2{y^(-2) L2{f; 1/(2y)}; z} = FC{G{x f; u}; z}",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: grid_z(&[0.5, 1.0, 2.0]),
        lhs: Arc::new(|p, q| nested_l2_inverted(corpus::gauss(), -0.5, p.z_(), q)),
        rhs: Arc::new(|p, q| {
            let env = glasser_envelope(&corpus::gauss(), 0.0, q);
            let r = transforms::fourier_cos(&env, p.z_(), &q.outer_osc())?;
            Ok(nested_outcome(r, q))
        }),
    });
    records.push(IdentityRecord {
        id: "REM-NUMH-3",
        family: "REM-NUMH",
        anchor: "K_0{x^(1/2) f; z} = sqrt(z) FC{G{x f; u}; z}",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: grid_z(&[0.5, 1.0, 2.0]),
        lhs: Arc::new(|p, q| {
            let r = transforms::k_transform(0.0, &gauss_xpow(0.5), p.z_(), &q.outer_smooth())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, q| {
            let z = p.z_();
            let env = glasser_envelope(&corpus::gauss(), 0.0, q);
            let r = transforms::fourier_cos(&env, z, &q.outer_osc())?;
            Ok(nested_scaled(r, z.sqrt(), q))
        }),
    });

    // ---- REM-NUPH (order +1/2): K_1 and Fourier-sine forms ----
    // The order sits on the boundary of the -1 < ν < 1/2 strip: the sine
    // side's envelope tends to the constant ∫ x f dx, so its integral
    // converges only in the mean. The epsilon-accelerated cell sum assigns
    // exactly that value, and the identity holds against it.
    records.push(IdentityRecord {
        id: "REM-NUPH-1",
        family: "REM-NUPH",
        anchor: "L2{L2{f; 1/(2y)}; z} = (1/(2 z^(3/2))) K_1{x^(3/2) f; z}   [f = e^(-x^2)]",
        note: Some("order sits on the strip boundary nu = 1/2"),
        tol_class: TolClass::Oscillatory,
        grid: grid_z(&[0.5, 1.0, 2.0]),
        lhs: Arc::new(|p, q| nested_l2_inverted(corpus::gauss(), 0.5, p.z_(), q)),
        rhs: Arc::new(|p, q| {
            let z = p.z_();
            let r = transforms::k_transform(1.0, &gauss_xpow(1.5), z, &q.outer_smooth())?;
            let c = 0.5 * z.powf(-1.5);
            Ok(EvalOutcome {
                value: c * r.value,
                abs_err: c * r.abs_err,
                converged: r.converged,
            })
        }),
    });
    records.push(IdentityRecord {
        id: "REM-NUPH-2",
        family: "REM-NUPH",
        anchor: "L2{L2{f; 1/(2y)}; z} = (1/(2z)) FS{u G{x f; u}; z}",
        note: Some("sine side summed in the mean (epsilon-accelerated cells)"),
        tol_class: TolClass::Oscillatory,
        grid: grid_z(&[0.5, 1.0, 2.0]),
        lhs: Arc::new(|p, q| nested_l2_inverted(corpus::gauss(), 0.5, p.z_(), q)),
        rhs: Arc::new(|p, q| {
            let z = p.z_();
            let env = glasser_envelope(&corpus::gauss(), 1.0, q);
            let r = transforms::fourier_sin(&env, z, &q.outer_osc())?;
            Ok(nested_scaled(r, 0.5 / z, q))
        }),
    });
    records.push(IdentityRecord {
        id: "REM-NUPH-3",
        family: "REM-NUPH",
        anchor: "K_1{x^(3/2) f; z} = sqrt(z) FS{u G{x f; u}; z}",
        note: Some("sine side summed in the mean (epsilon-accelerated cells)"),
        tol_class: TolClass::Oscillatory,
        grid: grid_z(&[0.5, 1.0, 2.0]),
        lhs: Arc::new(|p, q| {
            let r = transforms::k_transform(1.0, &gauss_xpow(1.5), p.z_(), &q.outer_smooth())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, q| {
            let z = p.z_();
            let env = glasser_envelope(&corpus::gauss(), 1.0, q);
            let r = transforms::fourier_sin(&env, z, &q.outer_osc())?;
            Ok(nested_scaled(r, z.sqrt(), q))
        }),
    });

    // ---- IK-HANKEL: the I·K kernel pairing (positive-argument form) ----
    let ik_grid = grid_nu_z(&[-0.5, 0.0, 0.5], &[1.0, 2.0]);
    records.push(IdentityRecord {
        id: "IK-HANKEL-1",
        family: "IK-HANKEL",
        anchor: "int (1/y) e^(-s) I_(nu/2)(s) L2{f; y} dy |_(s = z^2/(8y^2)) = int x f(x) I_(nu/2)(zx/2) K_(nu/2)(zx/2) dx",
        note: Some("I takes the positive argument s, as the source formula for L2{J_nu(zx)/x; u} requires"),
        tol_class: TolClass::Oscillatory,
        grid: ik_grid.clone(),
        lhs: Arc::new(|p, q| ik_weighted_l2(p.nu_(), p.z_(), q)),
        rhs: Arc::new(|p, q| ik_pairing(p.nu_(), p.z_(), q)),
    });
    records.push(IdentityRecord {
        id: "IK-HANKEL-2",
        family: "IK-HANKEL",
        anchor: "int (1/y) e^(-s) I_(nu/2)(s) L2{f; y} dy = z^(-1/2) H_nu{u^(-1/2) G{x f; u}; z}",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: ik_grid.clone(),
        lhs: Arc::new(|p, q| ik_weighted_l2(p.nu_(), p.z_(), q)),
        rhs: Arc::new(|p, q| {
            let (nu, z) = (p.nu_(), p.z_());
            let env = glasser_envelope(&corpus::gauss(), -0.5, q);
            let r = transforms::hankel(nu, &env, z, &q.outer_osc())?;
            Ok(nested_scaled(r, z.powf(-0.5), q))
        }),
    });
    records.push(IdentityRecord {
        id: "IK-HANKEL-3",
        family: "IK-HANKEL",
        anchor: "int x f(x) I_(nu/2)(zx/2) K_(nu/2)(zx/2) dx = z^(-1/2) H_nu{u^(-1/2) G{x f; u}; z}",
        note: None,
        tol_class: TolClass::Oscillatory,
        grid: ik_grid,
        lhs: Arc::new(|p, q| ik_pairing(p.nu_(), p.z_(), q)),
        rhs: Arc::new(|p, q| {
            let (nu, z) = (p.nu_(), p.z_());
            let env = glasser_envelope(&corpus::gauss(), -0.5, q);
            let r = transforms::hankel(nu, &env, z, &q.outer_osc())?;
            Ok(nested_scaled(r, z.powf(-0.5), q))
        }),
    });

    // ---- E21-WIDDER: E21{(1/y) L2{f; y}; z} = sqrt(pi) P{G{x f; u}; z} ----
    for (id, gaussian) in [("E21-WIDDER-GAUSS", true), ("E21-WIDDER-EXP", false)] {
        let build = move || -> Function1D {
            if gaussian {
                corpus::gauss()
            } else {
                corpus::exp_decay()
            }
        };
        records.push(IdentityRecord {
            id,
            family: "E21-WIDDER",
            anchor: "E21{(1/y) L2{f; y}; z} = sqrt(pi) P{G{x f; u}; z}",
            note: None,
            tol_class: TolClass::Oscillatory,
            grid: grid_z(&[0.5, 1.0, 2.0]),
            lhs: Arc::new(move |p, q| {
                let inner = inner_l2(build(), q);
                let operand = Function1D::new(
                    move |y| inner(y) / y,
                    DecayClass::Algebraic { p: 3.0 },
                    Singularity::Integrable { exponent: 1.0 },
                );
                let r = transforms::e21_transform(&operand, p.z_(), &q.outer_smooth())?;
                Ok(nested_outcome(r, q))
            }),
            rhs: Arc::new(move |p, q| {
                let env = glasser_envelope(&build(), 0.0, q);
                let r = transforms::widder(&env, p.z_(), &q.outer_smooth())?;
                Ok(nested_scaled(r, SQRT_PI, q))
            }),
        });
    }

    // ---- EX1: the arcsine family (f = 1/(x^2+z^2)) ----
    let ex1_grid = vec![
        pt(None, None, Some(1.0), Some(2.0)),
        pt(None, None, Some(1.0), Some(4.0)),
        pt(None, None, Some(0.5), Some(1.0)),
        pt(None, None, Some(1.8), Some(2.0)), // y/z = 0.9, near the singular edge
    ];
    records.push(IdentityRecord {
        id: "EX1-A",
        family: "EX1",
        anchor: "L2{(1/u) e^(z^2 u^2) E1(z^2 u^2); y} = sqrt(pi) (pi - 2 asin(y/z)) / (2 sqrt(z^2-y^2))",
        note: Some("source prints twice this value; the iteration identity and direct quadrature force the extra 1/2"),
        tol_class: TolClass::NearSingular,
        grid: ex1_grid.clone(),
        lhs: Arc::new(|p, q| {
            let z = p.z_();
            let operand = Function1D::new(
                move |u| expint_e1_scaled_raw(z * z * u * u) / u,
                DecayClass::Algebraic { p: 3.0 },
                Singularity::Integrable { exponent: 1.0 },
            );
            let r = transforms::l2(&operand, p.y_(), &q.outer_smooth())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, _| Ok(EvalOutcome::exact(ex1_rhs(p.y_(), p.z_())))),
    });
    records.push(IdentityRecord {
        id: "EX1-B",
        family: "EX1",
        anchor: "L{u^(-1/2) e^(z u) E1(z u); y} = sqrt(pi) (pi - 2 asin(sqrt(y/z))) / sqrt(z-y)",
        note: None,
        tol_class: TolClass::NearSingular,
        grid: ex1_grid.clone(),
        lhs: Arc::new(|p, q| {
            let z = p.z_();
            let operand = Function1D::new(
                move |u: f64| expint_e1_scaled_raw(z * u) / u.sqrt(),
                DecayClass::Algebraic { p: 1.5 },
                Singularity::Integrable { exponent: 0.5 },
            );
            let r = transforms::laplace(&operand, p.y_(), &q.outer_smooth())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, _| Ok(EvalOutcome::exact(ex1_sqrt_rhs(p.y_(), p.z_())))),
    });
    records.push(IdentityRecord {
        id: "EX1-C",
        family: "EX1",
        anchor: "E21{(1/u) e^(-y^2 u^2); z} = sqrt(pi) (pi - 2 asin(y/z)) / (2 sqrt(z^2-y^2))",
        note: Some("source prints twice this value; the iteration identity and direct quadrature force the extra 1/2"),
        tol_class: TolClass::NearSingular,
        grid: ex1_grid.clone(),
        lhs: Arc::new(|p, q| {
            let y = p.y_();
            let operand = Function1D::new(
                move |u| (-y * y * u * u).exp() / u,
                DecayClass::Gaussian,
                Singularity::Integrable { exponent: 1.0 },
            );
            let r = transforms::e21_transform(&operand, p.z_(), &q.outer_smooth())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, _| Ok(EvalOutcome::exact(ex1_rhs(p.y_(), p.z_())))),
    });
    records.push(IdentityRecord {
        id: "EX1-D",
        family: "EX1",
        anchor: "E1t{u^(-1/2) e^(-y u); z} = sqrt(pi) (pi - 2 asin(sqrt(y/z))) / sqrt(z-y)",
        note: None,
        tol_class: TolClass::NearSingular,
        grid: ex1_grid,
        lhs: Arc::new(|p, q| {
            let y = p.y_();
            let operand = Function1D::new(
                move |u: f64| (-y * u).exp() / u.sqrt(),
                DecayClass::Exponential,
                Singularity::Integrable { exponent: 0.5 },
            );
            let r = transforms::e1_transform(&operand, p.z_(), &q.outer_smooth())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, _| Ok(EvalOutcome::exact(ex1_sqrt_rhs(p.y_(), p.z_())))),
    });

    // ---- EX2-DAW: the Dawson form of the Struve-difference image ----
    records.push(IdentityRecord {
        id: "EX2-DAW",
        family: "EX2-DAW",
        anchor: "L2{(1/u^2) daw(z/(2u)); y} = (pi^(3/2)/4) [I_0(zy) - L_0(zy)]",
        note: Some(
            "real form of the imaginary-argument error-function identity via daw(x) = (-i sqrt(pi)/2) e^(-x^2) Erf(ix)",
        ),
        tol_class: TolClass::Smooth,
        grid: grid_yz(&[0.5, 1.0], &[1.0, 2.0]),
        lhs: Arc::new(|p, q| {
            let z = p.z_();
            let operand = Function1D::new(
                move |u| dawson_raw(z / (2.0 * u)) / (u * u),
                DecayClass::Algebraic { p: 3.0 },
                Singularity::Integrable { exponent: 1.0 },
            );
            let r = transforms::l2(&operand, p.y_(), &q.outer_smooth())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, _| {
            let (y, z) = (p.y_(), p.z_());
            let i0 = specfun::bessel_i(0.0, z * y).map_err(spec_to_transform)?;
            let l0 = specfun::struve_l0(z * y).map_err(spec_to_transform)?;
            Ok(EvalOutcome {
                value: PI.powf(1.5) / 4.0 * (i0.value - l0.value),
                abs_err: PI.powf(1.5) / 4.0 * (i0.abs_err_bound + l0.abs_err_bound),
                converged: true,
            })
        }),
    });

    // ---- REM-E2: the Laplace restatement, a = z^2/4 ----
    records.push(IdentityRecord {
        id: "REM-E2",
        family: "REM-E2",
        anchor: "L{(1/u) daw(sqrt(a/u)); y} = (pi^(3/2)/2) [I_0(2 sqrt(a y)) - L_0(2 sqrt(a y))], a = z^2/4",
        note: Some(
            "source prints the constant pi; consistency with the equivalent Erf(i..) form and direct quadrature forces pi^(3/2)/2",
        ),
        tol_class: TolClass::Smooth,
        grid: grid_yz(&[0.5, 1.0], &[1.0, 2.0]),
        lhs: Arc::new(|p, q| {
            let a = p.z_() * p.z_() / 4.0;
            let operand = Function1D::new(
                move |u: f64| dawson_raw((a / u).sqrt()) / u,
                DecayClass::Algebraic { p: 1.5 },
                Singularity::Integrable { exponent: 0.5 },
            );
            let r = transforms::laplace(&operand, p.y_(), &q.outer_smooth())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, _| {
            let (y, z) = (p.y_(), p.z_());
            let arg = 2.0 * (z * z / 4.0 * y).sqrt();
            let i0 = specfun::bessel_i(0.0, arg).map_err(spec_to_transform)?;
            let l0 = specfun::struve_l0(arg).map_err(spec_to_transform)?;
            Ok(EvalOutcome {
                value: PI.powf(1.5) / 2.0 * (i0.value - l0.value),
                abs_err: PI.powf(1.5) / 2.0 * (i0.abs_err_bound + l0.abs_err_bound),
                converged: true,
            })
        }),
    });

    // ---- EX3: gamma-ratio moments of the scaled I and I·K kernels ----
    let ex3_grid = {
        let mut g = Vec::new();
        for &mu in &[0.25, 0.5] {
            for &nu in &[0.25, 0.5] {
                for &z in &[1.0, 2.0] {
                    g.push(pt(Some(mu), Some(nu), None, Some(z)));
                }
            }
        }
        g
    };
    records.push(IdentityRecord {
        id: "EX3-A",
        family: "EX3",
        anchor: "int y^(-mu-1) e^(-s) I_nu(s) dy |_(s = z^2/(2y^2)) = Gamma(1/2-mu/2) Gamma(nu+mu/2) / (2 sqrt(pi) z^mu Gamma(nu-mu/2+1))",
        note: None,
        tol_class: TolClass::Smooth,
        grid: ex3_grid.clone(),
        lhs: Arc::new(|p, q| {
            let (mu, nu, z) = (p.mu_(), p.nu_(), p.z_());
            let f = Function1D::new(
                move |y: f64| y.powf(-mu - 1.0) * bessel_i_scaled_raw(nu, z * z / (2.0 * y * y)),
                DecayClass::Algebraic { p: mu + 1.0 + 2.0 * nu },
                Singularity::Integrable { exponent: mu },
            );
            let r = integrate_semi_infinite(&f, &q.outer_smooth())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, _| {
            let (mu, nu, z) = (p.mu_(), p.nu_(), p.z_());
            Ok(EvalOutcome::exact(
                gamma_raw(0.5 - mu / 2.0) * gamma_raw(nu + mu / 2.0)
                    / (2.0 * SQRT_PI * z.powf(mu) * gamma_raw(nu - mu / 2.0 + 1.0)),
            ))
        }),
    });
    records.push(IdentityRecord {
        id: "EX3-B",
        family: "EX3",
        anchor: "int y^(mu-1) I_nu(zy) K_nu(zy) dy = Gamma(mu/2) Gamma(1/2-mu/2) Gamma(nu+mu/2) / (4 sqrt(pi) z^mu Gamma(nu-mu/2+1))",
        note: None,
        tol_class: TolClass::Smooth,
        grid: ex3_grid,
        lhs: Arc::new(|p, q| {
            let (mu, nu, z) = (p.mu_(), p.nu_(), p.z_());
            let f = Function1D::new(
                move |y: f64| {
                    y.powf(mu - 1.0)
                        * bessel_i_scaled_raw(nu, z * y)
                        * bessel_k_scaled_raw(nu, z * y)
                },
                DecayClass::Algebraic { p: 2.0 - mu },
                Singularity::Integrable { exponent: 1.0 - mu },
            );
            let r = integrate_semi_infinite(&f, &q.outer_smooth())?;
            Ok(EvalOutcome::from_integration(r))
        }),
        rhs: Arc::new(|p, _| {
            let (mu, nu, z) = (p.mu_(), p.nu_(), p.z_());
            Ok(EvalOutcome::exact(
                gamma_raw(mu / 2.0) * gamma_raw(0.5 - mu / 2.0) * gamma_raw(nu + mu / 2.0)
                    / (4.0 * SQRT_PI * z.powf(mu) * gamma_raw(nu - mu / 2.0 + 1.0)),
            ))
        }),
    });

    records
}

fn spec_to_transform(e: specfun::SpecFunError) -> TransformError {
    TransformError::Quad(crate::quadrature::QuadError::Divergent(e.to_string()))
}

// ---- PG helpers ----

fn pg_f(p: &ParamPoint) -> Function1D {
    match p.pair.unwrap_or(1) {
        1 | 2 => corpus::gauss(),
        _ => corpus::exp_decay(),
    }
}

fn pg_g(p: &ParamPoint) -> Function1D {
    match p.pair.unwrap_or(1) {
        1 => corpus::gauss(),
        2 => corpus::cauchy(2.0),
        _ => corpus::gauss(),
    }
}

/// A = ∫₀^∞ L2{f; y} L2{g; y} dy, both factors iterated numerically.
fn pg_a(p: &ParamPoint, q: &QuadSettings) -> Result<EvalOutcome, TransformError> {
    let lf = inner_l2(pg_f(p), q);
    let lg = inner_l2(pg_g(p), q);
    let integrand = Function1D::new(
        move |y| lf(y) * lg(y),
        DecayClass::Algebraic { p: 4.0 },
        Singularity::None,
    );
    let r = integrate_semi_infinite(&integrand, &q.outer_smooth())?;
    Ok(nested_outcome(r, q))
}

/// ∫₀^∞ x a(x) G{u b(u); x} dx.
fn pg_pairing(
    a: Function1D,
    b: Function1D,
    q: &QuadSettings,
) -> Result<EvalOutcome, TransformError> {
    let gb = inner_glasser_x(&b, q);
    let ax = a.eval_fn();
    let integrand = Function1D::new(
        move |x| x * ax(x) * gb(x),
        a.decay(),
        a.singularity().shifted(1.0),
    );
    let r = integrate_semi_infinite(&integrand, &q.outer_smooth())?;
    Ok(nested_outcome(r, q))
}

// ---- MOMENT helpers (f = e^{-x^2}) ----

/// ∫₀^∞ y^{-mu} L2{f; y} dy.
fn moment_lhs(mu: f64, q: &QuadSettings) -> Result<EvalOutcome, TransformError> {
    let inner = inner_l2(corpus::gauss(), q);
    let integrand = Function1D::new(
        move |y: f64| y.powf(-mu) * inner(y),
        DecayClass::Algebraic { p: mu + 2.0 },
        Singularity::Integrable { exponent: mu },
    );
    let r = integrate_semi_infinite(&integrand, &q.outer_smooth())?;
    Ok(nested_outcome(r, q))
}

/// ∫₀^∞ u^{mu-1} G{x f; u} du.
fn moment_glasser(mu: f64, q: &QuadSettings) -> Result<EvalOutcome, TransformError> {
    let g = inner_glasser_x(&corpus::gauss(), q);
    let integrand = Function1D::new(
        move |u: f64| u.powf(mu - 1.0) * g(u),
        DecayClass::Algebraic { p: 2.0 - mu },
        Singularity::Integrable { exponent: 1.0 - mu },
    );
    let r = integrate_semi_infinite(&integrand, &q.outer_smooth())?;
    Ok(nested_outcome(r, q))
}

// ---- IK-HANKEL helpers (f = e^{-x^2}) ----

/// ∫₀^∞ (1/y) e^{-s} I_{nu/2}(s) L2{f; y} dy with s = z²/(8y²).
fn ik_weighted_l2(nu: f64, z: f64, q: &QuadSettings) -> Result<EvalOutcome, TransformError> {
    let inner = inner_l2(corpus::gauss(), q);
    let integrand = Function1D::new(
        move |y: f64| bessel_i_scaled_raw(nu / 2.0, z * z / (8.0 * y * y)) / y * inner(y),
        DecayClass::Algebraic { p: 3.0 + nu },
        Singularity::None,
    );
    let r = integrate_semi_infinite(&integrand, &q.outer_smooth())?;
    Ok(nested_outcome(r, q))
}

/// ∫₀^∞ x f(x) I_{nu/2}(zx/2) K_{nu/2}(zx/2) dx.
fn ik_pairing(nu: f64, z: f64, q: &QuadSettings) -> Result<EvalOutcome, TransformError> {
    let integrand = Function1D::new(
        move |x: f64| {
            x * (-x * x).exp()
                * bessel_i_scaled_raw(nu / 2.0, z * x / 2.0)
                * bessel_k_scaled_raw(nu / 2.0, z * x / 2.0)
        },
        DecayClass::Gaussian,
        if nu < 0.0 {
            Singularity::Integrable { exponent: -nu / 2.0 }
        } else {
            Singularity::None
        },
    );
    let r = integrate_semi_infinite(&integrand, &q.outer_smooth())?;
    Ok(EvalOutcome::from_integration(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::verify::ToleranceProfile;

    #[test]
    fn catalog_shape() {
        let cat = catalog();
        assert!(cat.len() >= 24, "need >= 24 records, got {}", cat.len());
        let families: std::collections::BTreeSet<_> = cat.iter().map(|r| r.family).collect();
        assert_eq!(families.len(), 16, "families: {families:?}");
        let mut ids = std::collections::BTreeSet::new();
        for r in &cat {
            assert!(ids.insert(r.id), "duplicate id {}", r.id);
            assert!(!r.grid.is_empty());
        }
    }

    #[test]
    fn rhs_finite_on_all_grid_points() {
        let q = ToleranceProfile::default_profile().quad;
        for r in catalog() {
            for p in &r.grid {
                // pipeline right-hand sides are exercised by the verifier;
                // here only the cheap closed forms are probed
                if matches!(
                    r.id,
                    "GL-POWER" | "GL-JNU1" | "GL-JNU" | "MOMENT-1" | "MOMENT-3" | "REM-NU0-1"
                        | "LEMMA1-GAUSS" | "LEMMA1-CAUCHY" | "EX1-A" | "EX1-B" | "EX1-C" | "EX1-D"
                        | "EX2-DAW" | "REM-E2" | "EX3-A" | "EX3-B"
                ) {
                    let v = (r.rhs)(p, &q)
                        .unwrap_or_else(|e| panic!("{} rhs at {}: {e}", r.id, p.label()));
                    assert!(v.value.is_finite(), "{} rhs not finite at {}", r.id, p.label());
                }
            }
        }
    }

    #[test]
    fn gl_power_rhs_reference_point() {
        // 2^(-1/2) B(1/2, 1/4) at mu = 0.5, y = 1
        let q = ToleranceProfile::default_profile().quad;
        let cat = catalog();
        let rec = cat.iter().find(|r| r.id == "GL-POWER").unwrap();
        let p = pt(Some(0.5), None, Some(1.0), None);
        let v = (rec.rhs)(&p, &q).unwrap();
        assert!((v.value - 3.7081493546027438369).abs() < 1e-12);
    }

    #[test]
    fn ex3_rhs_reference_point() {
        // Gamma(1/4)^2 Gamma(3/4) / (4 sqrt(pi) Gamma(5/4)) = sqrt(2 pi)
        let q = ToleranceProfile::default_profile().quad;
        let cat = catalog();
        let rec = cat.iter().find(|r| r.id == "EX3-B").unwrap();
        let p = pt(Some(0.5), Some(0.5), None, Some(1.0));
        let v = (rec.rhs)(&p, &q).unwrap();
        assert!((v.value - 2.5066282746310005024).abs() < 1e-12);
    }

    #[test]
    fn ex1_rhs_approaches_glasser_limit_as_y_vanishes() {
        // rhs -> sqrt(pi)·pi/(2z), the sqrt(pi)-scaled Glasser image of
        // x/(x^2+z^2) at y -> 0+
        for z in [1.0, 2.0] {
            let y = 1e-3 * z;
            let want = SQRT_PI * PI / (2.0 * z);
            let got = ex1_rhs(y, z);
            assert!(((got - want) / want).abs() < 1e-3, "limit mismatch at z = {z}");
        }
    }

    #[test]
    fn moment_closed_forms_consistent_via_beta_gamma() {
        // MOMENT-3's constant equals MOMENT-1's combined with MOMENT-2's
        // through B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y), at the closed-form
        // level only (gamma arithmetic, no quadrature)
        for mu in [0.25, 0.5, 0.75] {
            let lhs = 0.5 * specfun::beta(mu / 2.0, 0.5 - mu / 2.0).unwrap().value;
            let rhs = gamma_raw(mu / 2.0) / SQRT_PI * 0.5 * gamma_raw(0.5 - mu / 2.0);
            assert!(((lhs - rhs) / rhs).abs() < 1e-12, "mu = {mu}");
        }
    }

    #[test]
    fn gl_power_rhs_scaling_covariance() {
        // rhs(y)/rhs(1) = y^(mu-1) exactly
        let q = ToleranceProfile::default_profile().quad;
        let cat = catalog();
        let rec = cat.iter().find(|r| r.id == "GL-POWER").unwrap();
        for mu in [0.25, 0.75] {
            let at = |y: f64| {
                (rec.rhs)(&pt(Some(mu), None, Some(y), None), &q)
                    .unwrap()
                    .value
            };
            for y in [0.5, 2.0] {
                let ratio = at(y) / at(1.0);
                assert!((ratio - y.powf(mu - 1.0)).abs() < 1e-14);
            }
        }
    }
}
