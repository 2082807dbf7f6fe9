use super::corpus;
use super::*;
use crate::specfun;

fn tol() -> Tolerance {
    Tolerance::default_smooth()
}

fn osc() -> Tolerance {
    Tolerance::default_oscillatory()
}

fn assert_close(got: f64, want: f64, rel: f64) {
    let denom = want.abs().max(1e-300);
    assert!(
        ((got - want) / denom).abs() < rel,
        "got {got}, want {want}, rel {:e}",
        ((got - want) / denom).abs()
    );
}

#[test]
fn l2_of_one_is_inverse_square() {
    for y in [0.5, 1.0, 2.0] {
        let r = l2(&corpus::one(), y, &tol()).unwrap();
        assert_close(r.value, 1.0 / (2.0 * y * y), 1e-11);
    }
}

#[test]
fn l2_of_moment_kernel_is_half_gamma() {
    // L2{x^{μ-2}; 1} = Γ(μ/2)/2 at μ = 1/2
    let r = l2(&corpus::power(0.5), 1.0, &tol()).unwrap();
    assert_close(r.value, 1.812804954110954156, 1e-10); // Γ(1/4)/2
}

#[test]
fn l2_of_bessel_over_x_closed_form() {
    // L2{J_0(2x)/x; 1} = (sqrt(pi)/2) e^{-1/2} I_0(1/2)
    let r = l2(&corpus::bessel_j_over_x(0.0, 2.0), 1.0, &tol()).unwrap();
    assert_close(r.value, 0.57164762453873852151, 1e-9);
}

#[test]
fn laplace_basics() {
    let r = laplace(&corpus::one(), 3.0, &tol()).unwrap();
    assert_close(r.value, 1.0 / 3.0, 1e-11);
    let xf = Function1D::new(
        |x| x,
        crate::quadrature::DecayClass::Algebraic { p: -1.0 },
        crate::quadrature::Singularity::None,
    );
    // declared non-decaying: the exponential kernel still dominates
    let r = laplace(&xf, 2.0, &tol()).unwrap();
    assert_close(r.value, 0.25, 1e-11);
}

#[test]
fn laplace_of_shifted_cauchy_is_scaled_e1() {
    // L{1/(x+z²); u²} = e^{z²u²} E1(z²u²) at z = u = 1
    let f = Function1D::new(
        |x| 1.0 / (x + 1.0),
        crate::quadrature::DecayClass::Algebraic { p: 1.0 },
        crate::quadrature::Singularity::None,
    );
    // tail 1/x is not absolutely integrable alone, but e^{-xy} damps it;
    // the damped_fold sends it down the exponential route
    let r = laplace(&f, 1.0, &tol()).unwrap();
    assert_close(r.value, 0.59634736232319407434, 1e-11); // e·E1(1)
}

#[test]
fn glasser_of_power_is_beta_form() {
    // G{x^{μ-1}; y} = 2^{-μ} B(μ, 1/2-μ/2) y^{μ-1}; feed x^{μ-1} as power(μ+1)
    for (mu, y) in [(0.5, 1.0), (0.25, 0.5), (0.75, 2.0)] {
        let f = corpus::power(mu + 1.0);
        let r = glasser(&f, y, &tol()).unwrap();
        let want = 2f64.powf(-mu)
            * specfun::beta(mu, 0.5 - mu / 2.0).unwrap().value
            * y.powf(mu - 1.0);
        assert_close(r.value, want, 1e-9);
    }
}

#[test]
fn glasser_of_widder_kernel_closed_form() {
    // G{x/(x²+z²); y} = (π - 2 asin(y/z))/(2 sqrt(z²-y²)) for y < z
    let f = Function1D::new(
        |x| x / (x * x + 4.0),
        crate::quadrature::DecayClass::Algebraic { p: 1.0 },
        crate::quadrature::Singularity::None,
    );
    let r = glasser(&f, 1.0, &tol()).unwrap();
    let want = (std::f64::consts::PI - 2.0 * (0.5f64).asin()) / (2.0 * 3f64.sqrt());
    assert_close(r.value, want, 1e-10);
}

#[test]
fn glasser_of_sine_is_struve_difference() {
    // G{sin(zx); y} = (π/2)[I0(zy) - L0(zy)]
    let r = glasser(&corpus::sin_z(1.0), 1.0, &osc()).unwrap();
    assert_close(r.value, 0.87308424265086753907, 1e-8);
}

#[test]
fn glasser_rejects_nondecaying_input() {
    assert!(matches!(
        glasser(&corpus::one(), 1.0, &tol()),
        Err(TransformError::Quad(QuadError::Divergent(_)))
    ));
}

#[test]
fn fourier_transforms_of_exponential() {
    let r = fourier_sin(&corpus::exp_decay(), 1.0, &osc()).unwrap();
    assert_close(r.value, 0.5, 1e-9);
    let r = fourier_cos(&corpus::exp_decay(), 1.0, &osc()).unwrap();
    assert_close(r.value, 0.5, 1e-9);
}

#[test]
fn hankel_half_orders_collapse_to_fourier() {
    // H_{1/2} = sqrt(2/π) F_S and H_{-1/2} = sqrt(2/π) F_C on the corpus
    let c = (2.0 / std::f64::consts::PI).sqrt();
    for f in [corpus::exp_decay(), corpus::gauss()] {
        for y in [0.5, 1.0, 2.0] {
        let h = hankel(0.5, &f, y, &osc()).unwrap();
            let fs = fourier_sin(&f, y, &osc()).unwrap();
            assert_close(h.value, c * fs.value, 1e-8);
            let h = hankel(-0.5, &f, y, &osc()).unwrap();
            let fc = fourier_cos(&f, y, &osc()).unwrap();
            assert_close(h.value, c * fc.value, 1e-8);
        }
    }
}

#[test]
fn k_transform_half_orders_collapse_to_laplace() {
    let c = (std::f64::consts::PI / 2.0).sqrt();
    for f in [corpus::exp_decay(), corpus::gauss()] {
        for y in [0.5, 1.0, 2.0] {
            let lap = laplace(&f, y, &tol()).unwrap();
            for nu in [0.5, -0.5] {
                let k = k_transform(nu, &f, y, &tol()).unwrap();
                assert_close(k.value, c * lap.value, 1e-9);
            }
        }
    }
}

#[test]
fn widder_of_gauss_reference() {
    // P{e^{-x²}; 1} = ∫ x e^{-x²}/(x²+1) dx = (e/2) E1(1)
    let r = widder(&corpus::gauss(), 1.0, &tol()).unwrap();
    let want = 0.5 * 0.59634736232319407434;
    assert_close(r.value, want, 1e-10);
}

#[test]
fn e1_transform_reference() {
    // E1-transform of u^{-1/2} e^{-yu} at y=1, z=4:
    // sqrt(pi) (π - 2 asin(sqrt(y/z)))/sqrt(z-y)
    let f = Function1D::new(
        |u| u.powf(-0.5) * (-u).exp(),
        crate::quadrature::DecayClass::Exponential,
        crate::quadrature::Singularity::Integrable { exponent: 0.5 },
    );
    let r = e1_transform(&f, 4.0, &tol()).unwrap();
    let want = std::f64::consts::PI.sqrt() * (std::f64::consts::PI - 2.0 * 0.5f64.asin())
        / 3f64.sqrt();
    assert_close(r.value, want, 1e-9);
}

#[test]
fn e21_transform_reference() {
    // E21 of (1/u) e^{-y²u²} at y=1, z=2: sqrt(pi)(π-2asin(1/2))/(2 sqrt(3))
    let f = Function1D::new(
        |u| (-u * u).exp() / u,
        crate::quadrature::DecayClass::Gaussian,
        crate::quadrature::Singularity::Integrable { exponent: 1.0 },
    );
    let r = e21_transform(&f, 2.0, &tol()).unwrap();
    assert_close(r.value, 1.0716252226356387085, 1e-9);
}

#[test]
fn l2_laplace_relation_square() {
    // |l2(f,y) - l2_via_laplace(f,y)| within combined error, and the
    // laplace route the other way round
    for y in [0.5, 1.0, 2.0] {
        for f in [corpus::gauss(), corpus::exp_decay()] {
            let direct = l2(&f, y, &tol()).unwrap();
            let via = l2_via_laplace(&f, y, &tol()).unwrap();
            assert!(
                (direct.value - via.value).abs()
                    <= 2.0 * (direct.abs_err + via.abs_err).max(1e-12),
                "l2 routes differ at y={y}: {} vs {}",
                direct.value,
                via.value
            );

            let direct = laplace(&f, y, &tol()).unwrap();
            let via = laplace_via_l2(&f, y, &tol()).unwrap();
            assert!(
                (direct.value - via.value).abs()
                    <= 2.0 * (direct.abs_err + via.abs_err).max(1e-12),
                "laplace routes differ at y={y}"
            );
        }
        // trivial closed forms for f = 1
        let via = l2_via_laplace(&corpus::one(), y, &tol()).unwrap();
        assert_close(via.value, 1.0 / (2.0 * y * y), 1e-10);
        let via = laplace_via_l2(&corpus::one(), y, &tol()).unwrap();
        assert_close(via.value, 1.0 / y, 1e-10);
    }
}

#[test]
fn l2_route_agreement_moment_kernel() {
    let f = corpus::power(0.5);
    let direct = l2(&f, 1.0, &tol()).unwrap();
    let via = l2_via_laplace(&f, 1.0, &tol()).unwrap();
    assert_close(via.value, direct.value, 1e-9);
}

#[test]
fn glasser_parseval_symmetry() {
    // ∫ f G{g} = ∫ g G{f} for corpus pairs
    let pairs = [
        (corpus::gauss(), corpus::exp_decay()),
        (corpus::gauss(), corpus::cauchy(2.0)),
        (corpus::exp_decay(), corpus::cauchy(1.0)),
    ];
    let inner_tol = tol().tightened(100.0);
    for (f, g) in pairs {
        let (fe, ge) = (f.clone(), g.clone());
        let lhs_integrand = Function1D::new(
            move |x| fe.eval(x) * glasser(&ge, x, &inner_tol).map(|r| r.value).unwrap_or(f64::NAN),
            f.decay(),
            f.singularity(),
        );
        let lhs = crate::quadrature::integrate_semi_infinite(&lhs_integrand, &osc()).unwrap();
        let (fe, ge) = (f.clone(), g.clone());
        let rhs_integrand = Function1D::new(
            move |x| ge.eval(x) * glasser(&fe, x, &inner_tol).map(|r| r.value).unwrap_or(f64::NAN),
            g.decay(),
            g.singularity(),
        );
        let rhs = crate::quadrature::integrate_semi_infinite(&rhs_integrand, &osc()).unwrap();
        assert_close(lhs.value, rhs.value, 1e-7);
    }
}

#[test]
fn operators_are_linear_in_f() {
    // spot-check: T{αf + βg} = α T{f} + β T{g}
    let f = corpus::gauss();
    let g = corpus::exp_decay();
    let (alpha, beta) = (0.7, -1.3);
    let (fe, ge) = (f.eval_fn(), g.eval_fn());
    let combo = Function1D::new(
        move |x| alpha * fe(x) + beta * ge(x),
        crate::quadrature::DecayClass::Exponential,
        crate::quadrature::Singularity::None,
    );
    for kind in [
        TransformKind::L2,
        TransformKind::Laplace,
        TransformKind::Glasser,
        TransformKind::K { nu: 0.25 },
        TransformKind::Widder,
    ] {
        let a = kind.apply(&f, 1.0, &tol()).unwrap();
        let b = kind.apply(&g, 1.0, &tol()).unwrap();
        let c = kind.apply(&combo, 1.0, &tol()).unwrap();
        assert_close(c.value, alpha * a.value + beta * b.value, 1e-8);
    }
}

#[test]
fn parameter_validation() {
    assert!(matches!(
        l2(&corpus::gauss(), 0.0, &tol()),
        Err(TransformError::NonPositiveParameter(_))
    ));
    assert!(matches!(
        laplace(&corpus::gauss(), -1.0, &tol()),
        Err(TransformError::NonPositiveParameter(_))
    ));
    assert!(matches!(
        hankel(-1.5, &corpus::gauss(), 1.0, &osc()),
        Err(TransformError::InvalidOrder(_))
    ));
}

#[test]
fn l2_rejects_divergent_moment_kernel() {
    // x·x^{μ-2} with μ = 0 is x^{-1} at the origin: not integrable
    assert!(matches!(
        l2(&corpus::power(0.0), 1.0, &tol()),
        Err(TransformError::Quad(QuadError::Divergent(_)))
    ));
}

#[test]
fn corpus_registry_round_trip() {
    let p = corpus::CorpusParams {
        mu: Some(0.5),
        nu: Some(0.5),
        z: Some(2.0),
    };
    for entry in corpus::REGISTRY {
        let f = corpus::build(entry.name, &p).unwrap();
        // evaluable at an interior point
        assert!(f.eval(1.3).is_finite(), "{} at 1.3", entry.name);
    }
    assert!(matches!(
        corpus::build("nope", &p),
        Err(TransformError::UnknownFunction(_))
    ));
    assert!(matches!(
        corpus::build("sin_z", &corpus::CorpusParams::default()),
        Err(TransformError::MissingParameter { .. })
    ));
}
