//! 15-point Gauss-Kronrod rule with adaptive bisection, used for the
//! smooth cells of oscillatory partitions and as a general finite-interval
//! workhorse.

use super::{IntegrationResult, QuadError, Result, Tolerance};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// One GK15 application on [a, b]: returns (kronrod, error_estimate, abs_integral).
pub(crate) fn gk15(
    f: &(dyn Fn(f64) -> f64 + '_),
    a: f64,
    b: f64,
) -> Result<(f64, f64, f64)> {
    let half = 0.5 * (b - a);
    let center = 0.5 * (a + b);

    let mut fv = [0.0f64; 15];
    for (j, &xi) in XGK.iter().enumerate() {
        let x1 = center - half * xi;
        let x2 = center + half * xi;
        let f1 = f(x1);
        if !f1.is_finite() {
            return Err(QuadError::NonFiniteEvaluation { x: x1 });
        }
        fv[j] = f1;
        if j < 7 {
            let f2 = f(x2);
            if !f2.is_finite() {
                return Err(QuadError::NonFiniteEvaluation { x: x2 });
            }
            fv[14 - j] = f2;
        }
    }

    let mut res_k = 0.0;
    let mut res_abs = 0.0;
    for j in 0..8 {
        let pair = if j < 7 { fv[j] + fv[14 - j] } else { fv[7] };
        let pair_abs = if j < 7 {
            fv[j].abs() + fv[14 - j].abs()
        } else {
            fv[7].abs()
        };
        res_k += WGK[j] * pair;
        res_abs += WGK[j] * pair_abs;
    }
    let mut res_g = 0.0;
    for j in 0..3 {
        let k = 2 * j + 1;
        res_g += WG[j] * (fv[k] + fv[14 - k]);
    }
    res_g += WG[3] * fv[7];

    let err = ((res_k - res_g) * half).abs();
    Ok((res_k * half, err, res_abs * half.abs()))
}

/// Adaptive bisection driven by a worst-segment-first queue.
pub(crate) fn adaptive_gk(
    f: &(dyn Fn(f64) -> f64 + '_),
    a: f64,
    b: f64,
    tol: &Tolerance,
) -> Result<IntegrationResult> {
    struct Seg {
        a: f64,
        b: f64,
        value: f64,
        err: f64,
    }

    let (v, e, _) = gk15(f, a, b)?;
    let mut segs = vec![Seg {
        a,
        b,
        value: v,
        err: e,
    }];
    let mut n_evals = 15usize;

    loop {
        let value: f64 = segs.iter().map(|s| s.value).sum();
        let err: f64 = segs.iter().map(|s| s.err).sum();
        if err <= tol.target(value) || n_evals + 30 > tol.max_evals || segs.len() > 2000 {
            return Ok(IntegrationResult {
                value,
                abs_err: err,
                n_evals,
                converged: err <= tol.target(value),
            });
        }
        // split the worst segment
        let (worst, _) = segs
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .expect("non-empty");
        let seg = segs.swap_remove(worst);
        let mid = 0.5 * (seg.a + seg.b);
        if mid <= seg.a || mid >= seg.b {
            // interval no longer splittable in f64; accept as is
            segs.push(seg);
            let value: f64 = segs.iter().map(|s| s.value).sum();
            let err: f64 = segs.iter().map(|s| s.err).sum();
            return Ok(IntegrationResult {
                value,
                abs_err: err,
                n_evals,
                converged: err <= tol.target(value),
            });
        }
        let (v1, e1, _) = gk15(f, seg.a, mid)?;
        let (v2, e2, _) = gk15(f, mid, seg.b)?;
        n_evals += 30;
        segs.push(Seg {
            a: seg.a,
            b: mid,
            value: v1,
            err: e1,
        });
        segs.push(Seg {
            a: mid,
            b: seg.b,
            value: v2,
            err: e2,
        });
    }
}
