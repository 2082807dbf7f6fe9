//! The named test-function corpus: the f and g instances the identity
//! catalog sweeps, addressable by registry name from the CLI.

use crate::quadrature::{DecayClass, Function1D, OscKernel, OscillationParts, Singularity};
use crate::specfun::bessel_j_raw;
use crate::transforms::TransformError;
use std::sync::Arc;

/// Numeric parameters a corpus function may need.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CorpusParams {
    pub mu: Option<f64>,
    pub nu: Option<f64>,
    pub z: Option<f64>,
}

/// f(x) = 1.
pub fn one() -> Function1D {
    Function1D::new(|_| 1.0, DecayClass::Algebraic { p: 0.0 }, Singularity::None)
}

/// f(x) = x^{μ-2}, the moment kernel; 0 < μ < 1 in the catalog.
pub fn power(mu: f64) -> Function1D {
    Function1D::new(
        move |x| x.powf(mu - 2.0),
        DecayClass::Algebraic { p: 2.0 - mu },
        Singularity::Integrable { exponent: 2.0 - mu },
    )
}

/// f(x) = e^{-x}.
pub fn exp_decay() -> Function1D {
    Function1D::new(|x| (-x).exp(), DecayClass::Exponential, Singularity::None)
}

/// f(x) = e^{-x²}.
pub fn gauss() -> Function1D {
    Function1D::new(|x| (-x * x).exp(), DecayClass::Gaussian, Singularity::None)
}

/// f(x) = sin(zx).
pub fn sin_z(z: f64) -> Function1D {
    Function1D::new(
        move |x| (z * x).sin(),
        DecayClass::Oscillatory {
            period_hint: 2.0 * std::f64::consts::PI / z,
        },
        Singularity::None,
    )
    .with_oscillation(OscillationParts {
        envelope: Arc::new(|_| 1.0),
        kernel: OscKernel::Sin,
        freq: z,
    })
}

/// f(x) = sin(zx)/x.
pub fn sinc_z(z: f64) -> Function1D {
    Function1D::new(
        move |x| (z * x).sin() / x,
        DecayClass::Oscillatory {
            period_hint: 2.0 * std::f64::consts::PI / z,
        },
        Singularity::None, // sin(zx)/x → z at 0
    )
    .with_oscillation(OscillationParts {
        envelope: Arc::new(|x: f64| 1.0 / x),
        kernel: OscKernel::Sin,
        freq: z,
    })
}

/// f(x) = J_ν(zx).
pub fn bessel_j_z(nu: f64, z: f64) -> Function1D {
    Function1D::new(
        move |x| bessel_j_raw(nu, z * x),
        DecayClass::Oscillatory {
            period_hint: 2.0 * std::f64::consts::PI / z,
        },
        if nu < 0.0 {
            Singularity::Integrable { exponent: -nu }
        } else {
            Singularity::None
        },
    )
    .with_oscillation(OscillationParts {
        envelope: Arc::new(|_| 1.0),
        kernel: OscKernel::BesselJ(nu),
        freq: z,
    })
}

/// f(x) = x^{ν+1} J_ν(zx), the weighted Bessel input of the Glasser images.
pub fn bessel_j_weighted(nu: f64, z: f64) -> Function1D {
    Function1D::new(
        move |x| x.powf(nu + 1.0) * bessel_j_raw(nu, z * x),
        DecayClass::Oscillatory {
            period_hint: 2.0 * std::f64::consts::PI / z,
        },
        Singularity::None, // x^{ν+1} J_ν ~ x^{2ν+1}, integrable for ν > -1
    )
    .with_oscillation(OscillationParts {
        envelope: Arc::new(move |x: f64| x.powf(nu + 1.0)),
        kernel: OscKernel::BesselJ(nu),
        freq: z,
    })
}

/// f(x) = J_ν(zx)/x.
pub fn bessel_j_over_x(nu: f64, z: f64) -> Function1D {
    Function1D::new(
        move |x| bessel_j_raw(nu, z * x) / x,
        DecayClass::Oscillatory {
            period_hint: 2.0 * std::f64::consts::PI / z,
        },
        Singularity::Integrable {
            exponent: (1.0 - nu).max(0.0),
        },
    )
    .with_oscillation(OscillationParts {
        envelope: Arc::new(|x: f64| 1.0 / x),
        kernel: OscKernel::BesselJ(nu),
        freq: z,
    })
}

/// f(x) = 1/(x²+z²).
pub fn cauchy(z: f64) -> Function1D {
    Function1D::new(
        move |x| 1.0 / (x * x + z * z),
        DecayClass::Algebraic { p: 2.0 },
        Singularity::None,
    )
}

pub struct CorpusEntry {
    pub name: &'static str,
    pub needs: &'static [&'static str],
    pub describe: &'static str,
}

pub const REGISTRY: &[CorpusEntry] = &[
    CorpusEntry { name: "one", needs: &[], describe: "f(x) = 1" },
    CorpusEntry { name: "power", needs: &["mu"], describe: "f(x) = x^(mu-2)" },
    CorpusEntry { name: "exp", needs: &[], describe: "f(x) = exp(-x)" },
    CorpusEntry { name: "gauss", needs: &[], describe: "f(x) = exp(-x^2)" },
    CorpusEntry { name: "sin_z", needs: &["z"], describe: "f(x) = sin(z x)" },
    CorpusEntry { name: "sinc_z", needs: &["z"], describe: "f(x) = sin(z x)/x" },
    CorpusEntry { name: "jnu_z", needs: &["nu", "z"], describe: "f(x) = J_nu(z x)" },
    CorpusEntry {
        name: "jnu_weighted_z",
        needs: &["nu", "z"],
        describe: "f(x) = x^(nu+1) J_nu(z x)",
    },
    CorpusEntry {
        name: "jnu_over_x_z",
        needs: &["nu", "z"],
        describe: "f(x) = J_nu(z x)/x",
    },
    CorpusEntry { name: "cauchy_z", needs: &["z"], describe: "f(x) = 1/(x^2+z^2)" },
];

/// Build a corpus function by registry name.
pub fn build(name: &str, params: &CorpusParams) -> std::result::Result<Function1D, TransformError> {
    let need = |v: Option<f64>, what: &'static str| {
        v.ok_or_else(|| TransformError::MissingParameter {
            function: name.to_string(),
            param: what,
        })
    };
    match name {
        "one" => Ok(one()),
        "power" => Ok(power(need(params.mu, "mu")?)),
        "exp" => Ok(exp_decay()),
        "gauss" => Ok(gauss()),
        "sin_z" => Ok(sin_z(need(params.z, "z")?)),
        "sinc_z" => Ok(sinc_z(need(params.z, "z")?)),
        "jnu_z" => Ok(bessel_j_z(need(params.nu, "nu")?, need(params.z, "z")?)),
        "jnu_weighted_z" => Ok(bessel_j_weighted(
            need(params.nu, "nu")?,
            need(params.z, "z")?,
        )),
        "jnu_over_x_z" => Ok(bessel_j_over_x(
            need(params.nu, "nu")?,
            need(params.z, "z")?,
        )),
        "cauchy_z" => Ok(cauchy(need(params.z, "z")?)),
        _ => Err(TransformError::UnknownFunction(name.to_string())),
    }
}
