//! Explicit formulas for the sharp constant in each covered regime.
//!
//! Two of the reference expressions carry exponents that disagree with the
//! independent numerical oracles (and with continuity across the branch
//! thresholds); those formulas ship in two variants:
//!
//! * the p = 1 interior-maximum branch: `AsPrinted` puts (β+2)/2 on
//!   α²/(1+β), `Corrected` puts (β+1)/2 — the latter is the actual value of
//!   the one-dimensional maximization and is continuous at the thresholds;
//! * the α = 0 constant for 1 < p < ∞: `AsPrinted` raises the bracket to
//!   p/(p-1), `Corrected` to (p-1)/p — the latter matches the sphere
//!   quadrature and agrees with the p = 2 formula at α = 0.
//!
//! Everywhere else the variants coincide. `Corrected` is the default
//! throughout the crate.

use crate::error::{Error, Result};
use crate::model::{
    validate, Branch, ConstantMethod, FormulaVariant, KernelParams, NormIndex, SharpConstant,
};
use crate::roots;
use crate::special::{ln_gamma_raw, omega};

use std::f64::consts::PI;

fn closed(value: f64, branch: Branch, variant: FormulaVariant) -> SharpConstant {
    SharpConstant {
        value,
        method: ConstantMethod::ClosedForm,
        branch,
        variant,
        est_error: 0.0,
    }
}

/// Sharp constant at p = 1.
///
/// Outside the threshold window the supremum sits at the pole of the
/// hemisphere and C = |k| β |1-α|; inside, the profile
/// (α² + (1-2α)t²)^{1/2} t^β has an interior maximum at
/// t₁² = α²β/((2α-1)(1+β)). Threshold-boundary inputs route to the outer
/// branch; the corrected variant is continuous there so the choice does not
/// affect the value.
pub fn constant_p1(params: &KernelParams, variant: FormulaVariant) -> Result<SharpConstant> {
    let p1 = NormIndex::Finite(1.0);
    validate(params, &p1)?;
    let (alpha, beta, k) = (params.alpha, params.beta, params.k.abs());
    let t = roots::p1_thresholds(beta)?;

    if alpha <= t.alpha1 || alpha >= t.alpha2 {
        return Ok(closed(
            k * beta * (1.0 - alpha).abs(),
            Branch::P1Outer,
            variant,
        ));
    }

    let base = k * beta * (beta / (2.0 * alpha - 1.0)).powf(beta / 2.0);
    let inner = alpha * alpha / (1.0 + beta);
    let value = match variant {
        FormulaVariant::AsPrinted => base * inner.powf((beta + 2.0) / 2.0),
        _ => base * inner.powf((beta + 1.0) / 2.0),
    };
    Ok(closed(value, Branch::P1Middle, variant))
}

/// Validity conditions attached to the α = 0 closed form.
fn alpha0_condition(n: u32, beta: f64, p: &NormIndex) -> Result<()> {
    let nf = n as f64;
    let ok = match p {
        NormIndex::Finite(_) if beta >= nf - 1.0 => true,
        NormIndex::Infinity => beta > nf - 1.0,
        NormIndex::Finite(pv) => beta < nf - 1.0 && *pv < (nf - 1.0) / (nf - 1.0 - beta),
        #[allow(unreachable_patterns)]
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::out_of_regime(format!(
            "alpha = 0 closed form does not cover n = {n}, beta = {beta}, p = {p}"
        )))
    }
}

/// Sharp constant at α = 0: C = |k| β at p = 1, and for p > 1 a Gamma-ratio
/// bracket B = π^{(n-1)/2} Γ(((β-n+3)p+n-1)/(2(p-1))) / Γ(((β+2)p)/(2(p-1)))
/// raised to (p-1)/p (corrected) or p/(p-1) (as printed). At p = ∞ both
/// exponents are 1 and the variants agree.
pub fn constant_alpha0(
    params: &KernelParams,
    p: &NormIndex,
    variant: FormulaVariant,
) -> Result<SharpConstant> {
    if params.alpha != 0.0 {
        return Err(Error::invalid(
            "alpha",
            format!(
                "the alpha = 0 formula needs alpha = 0, got {}",
                params.alpha
            ),
        ));
    }
    validate(params, p)?;
    alpha0_condition(params.n, params.beta, p)?;

    let (n, beta, k) = (params.n as f64, params.beta, params.k.abs());
    let value = match p {
        NormIndex::Finite(pv) if *pv == 1.0 => k * beta,
        NormIndex::Finite(pv) => {
            let ln_b = 0.5 * (n - 1.0) * PI.ln()
                + ln_gamma_raw(((beta - n + 3.0) * pv + n - 1.0) / (2.0 * (pv - 1.0)))
                - ln_gamma_raw(((beta + 2.0) * pv) / (2.0 * (pv - 1.0)));
            let outer = match variant {
                FormulaVariant::AsPrinted => pv / (pv - 1.0),
                _ => (pv - 1.0) / pv,
            };
            k * beta * (outer * ln_b).exp()
        }
        NormIndex::Infinity => {
            let ln_b = 0.5 * (n - 1.0) * PI.ln() + ln_gamma_raw((beta - n + 3.0) / 2.0)
                - ln_gamma_raw((beta + 2.0) / 2.0);
            k * beta * ln_b.exp()
        }
    };
    Ok(closed(value, Branch::Alpha0Closed, variant))
}

/// Sharp constant at p = 2, through the two competing integrals
///
///   I₁ = A · [2α²β(β+1)/(2β+1-n) - 2α(β+1) + (2β+3-n)/2],   I₂ = A/2,
///
/// with A = √π Γ((n-2)/2) Γ((2β+3-n)/2) / (2 Γ(β+2)); the constant is
/// |k| β √(ω_{n-2} · max(I₁, I₂)). Working through the max keeps the branch
/// decision self-validating.
pub fn constant_p2(params: &KernelParams) -> Result<SharpConstant> {
    validate(params, &NormIndex::Finite(2.0))?;
    let (n, alpha, beta, k) = (params.n as f64, params.alpha, params.beta, params.k.abs());

    let ln_a =
        0.5 * PI.ln() + ln_gamma_raw((n - 2.0) / 2.0) + ln_gamma_raw((2.0 * beta + 3.0 - n) / 2.0)
            - (2.0f64.ln() + ln_gamma_raw(beta + 2.0));
    let a = ln_a.exp();
    let bracket = 2.0 * alpha * alpha * beta * (beta + 1.0) / (2.0 * beta + 1.0 - n)
        - 2.0 * alpha * (beta + 1.0)
        + (2.0 * beta + 3.0 - n) / 2.0;
    let i1 = a * bracket.max(0.0);
    let i2 = a / 2.0;

    let (best, branch) = if i2 > i1 {
        (i2, Branch::P2Tangential)
    } else {
        (i1, Branch::P2Normal)
    };
    let value = k * beta * (omega(params.n - 2) * best).sqrt();
    Ok(closed(value, branch, FormulaVariant::NotApplicable))
}

/// Sharp constant at p = ∞ for α at or above the transcendental threshold:
/// C = |k| π^{(n-1)/2} Γ((β-n+1)/2)/Γ(β/2) ((α-1)β + n-1).
pub fn constant_pinf_large_alpha(params: &KernelParams) -> Result<SharpConstant> {
    validate(params, &NormIndex::Infinity)?;
    let root = roots::alpha_root(params.n, params.beta)?;
    if params.alpha < root.value {
        return Err(Error::out_of_regime(format!(
            "alpha = {} is below the threshold root {:.6} for n = {}, beta = {}",
            params.alpha, root.value, params.n, params.beta
        )));
    }
    let (n, alpha, beta, k) = (params.n as f64, params.alpha, params.beta, params.k.abs());
    let ln_c =
        0.5 * (n - 1.0) * PI.ln() + ln_gamma_raw((beta - n + 1.0) / 2.0) - ln_gamma_raw(beta / 2.0);
    let value = k * ln_c.exp() * ((alpha - 1.0) * beta + n - 1.0);
    Ok(closed(
        value,
        Branch::PinfLargeAlpha,
        FormulaVariant::NotApplicable,
    ))
}

/// Sharp constant at p = ∞ for α = 1, n-1 < β ≤ n:
/// C = |k| π^{(n-1)/2} (n-1) Γ((β-n+1)/2)/Γ(β/2).
pub fn constant_pinf_alpha_one(params: &KernelParams) -> Result<SharpConstant> {
    if params.alpha != 1.0 {
        return Err(Error::out_of_regime(format!(
            "the alpha = 1 formula needs alpha = 1, got {}",
            params.alpha
        )));
    }
    validate(params, &NormIndex::Infinity)?;
    let nf = params.n as f64;
    if params.beta > nf {
        return Err(Error::out_of_regime(format!(
            "the alpha = 1 formula needs beta in (n-1, n]; got beta = {} with n = {}",
            params.beta, params.n
        )));
    }
    let (beta, k) = (params.beta, params.k.abs());
    let ln_c = 0.5 * (nf - 1.0) * PI.ln() + ln_gamma_raw((beta - nf + 1.0) / 2.0)
        - ln_gamma_raw(beta / 2.0);
    let value = k * (nf - 1.0) * ln_c.exp();
    Ok(closed(
        value,
        Branch::PinfAlphaOne,
        FormulaVariant::NotApplicable,
    ))
}

/// The classical harmonic-Poisson reference constants for p ∈ {1, 2, ∞}:
/// C₁ = 2(n-1)/ω_n, C₂ = √((n-1)n/(2ⁿω_n)),
/// C_∞ = 4(n-1)^{(n-1)/2} ω_{n-1} / (n^{n/2} ω_n).
pub fn harmonic_reference(n: u32, p: &NormIndex) -> Result<f64> {
    if n < 3 {
        return Err(Error::domain(format!(
            "harmonic_reference requires n >= 3, got {n}"
        )));
    }
    let nf = n as f64;
    let w = omega(n);
    match p {
        NormIndex::Finite(pv) if *pv == 1.0 => Ok(2.0 * (nf - 1.0) / w),
        NormIndex::Finite(pv) if *pv == 2.0 => {
            Ok(((nf - 1.0) * nf / (2f64.powi(n as i32) * w)).sqrt())
        }
        NormIndex::Infinity => {
            Ok(4.0 * (nf - 1.0).powf((nf - 1.0) / 2.0) * omega(n - 1) / (nf.powf(nf / 2.0) * w))
        }
        other => Err(Error::domain(format!(
            "harmonic reference constants exist for p in {{1, 2, inf}}, got p = {other}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::KernelParams;
    use proptest::prelude::*;

    fn params(n: u32, alpha: f64, beta: f64, k: f64) -> KernelParams {
        KernelParams { n, alpha, beta, k }
    }

    fn relerr(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn p1_examples() {
        let c = constant_p1(&params(3, 0.0, 3.0, 1.0), FormulaVariant::Corrected).unwrap();
        assert_eq!(c.branch, Branch::P1Outer);
        assert!((c.value - 3.0).abs() < 1e-14);

        // harmonic embedding: alpha = 1/3, beta = 3, k = 1/(2 pi) gives 1/pi
        let k3 = 1.0 / (2.0 * PI);
        let c = constant_p1(&params(3, 1.0 / 3.0, 3.0, k3), FormulaVariant::Corrected).unwrap();
        assert!(relerr(c.value, 1.0 / PI) < 1e-14);

        // interior branch at alpha = 1, beta = 3: corrected 9 sqrt3/16, printed 9 sqrt3/32
        let corr = constant_p1(&params(3, 1.0, 3.0, 1.0), FormulaVariant::Corrected).unwrap();
        assert!(relerr(corr.value, 9.0 * 3f64.sqrt() / 16.0) < 1e-14);
        assert_eq!(corr.branch, Branch::P1Middle);
        let printed = constant_p1(&params(3, 1.0, 3.0, 1.0), FormulaVariant::AsPrinted).unwrap();
        assert!(relerr(printed.value, 9.0 * 3f64.sqrt() / 32.0) < 1e-14);
        // printed/corrected = alpha/sqrt(1+beta)
        assert!((printed.value / corr.value - 0.5).abs() < 1e-14);
    }

    #[test]
    fn p1_corrected_is_continuous_at_thresholds() {
        for beta in [0.5, 3.0, 7.0] {
            let t = roots::p1_thresholds(beta).unwrap();
            for a in [t.alpha1, t.alpha2] {
                let outer = constant_p1(&params(3, a, beta, 1.0), FormulaVariant::Corrected)
                    .unwrap()
                    .value;
                // evaluate the interior formula a hair inside the window
                let eps = 1e-9 * if a == t.alpha1 { 1.0 } else { -1.0 };
                let inner = constant_p1(&params(3, a + eps, beta, 1.0), FormulaVariant::Corrected)
                    .unwrap()
                    .value;
                assert!(
                    (outer - inner).abs() < 1e-6 * outer.max(1.0),
                    "discontinuity at alpha = {a}, beta = {beta}: {outer} vs {inner}"
                );
            }
        }
        // exact check at alpha2 = 2 for beta = 3: both branches give |k| beta
        let inner_form = 3.0 * (3.0f64 / 3.0).powf(1.5) * (4.0f64 / 4.0).powf(2.0);
        assert!((inner_form - 3.0).abs() < 1e-12);
    }

    #[test]
    fn p1_as_printed_discontinuity_is_documented() {
        // At the lower threshold the printed exponent breaks continuity: the
        // interior formula evaluated at alpha1 disagrees with |k| beta |1-alpha1|.
        let beta = 3.0;
        let t = roots::p1_thresholds(beta).unwrap();
        let a = t.alpha1;
        let printed_inner = beta
            * (beta / (2.0 * a - 1.0)).powf(beta / 2.0)
            * (a * a / (1.0 + beta)).powf((beta + 2.0) / 2.0);
        let outer = beta * (1.0 - a).abs();
        assert!((printed_inner - outer).abs() > 1e-2 * outer);
    }

    #[test]
    fn alpha0_examples() {
        // p = 2, n = 3, beta = 3: corrected 3 sqrt(pi)/2, printed 3 pi^2/16
        let corr = constant_alpha0(
            &params(3, 0.0, 3.0, 1.0),
            &NormIndex::Finite(2.0),
            FormulaVariant::Corrected,
        )
        .unwrap();
        assert!(relerr(corr.value, 3.0 * PI.sqrt() / 2.0) < 1e-14);
        let printed = constant_alpha0(
            &params(3, 0.0, 3.0, 1.0),
            &NormIndex::Finite(2.0),
            FormulaVariant::AsPrinted,
        )
        .unwrap();
        assert!(relerr(printed.value, 3.0 * PI * PI / 16.0) < 1e-14);

        // p = inf, n = 3, beta = 3 -> 2 pi; with k = 2/omega_3 it collapses to 1
        let c = constant_alpha0(
            &params(3, 0.0, 3.0, 1.0),
            &NormIndex::Infinity,
            FormulaVariant::Corrected,
        )
        .unwrap();
        assert!(relerr(c.value, 2.0 * PI) < 1e-14);
        let k3 = 2.0 / omega(3);
        let c = constant_alpha0(
            &params(3, 0.0, 3.0, k3),
            &NormIndex::Infinity,
            FormulaVariant::Corrected,
        )
        .unwrap();
        assert!(relerr(c.value, 1.0) < 1e-14);

        // p = 1 gives |k| beta in both variants
        for v in [FormulaVariant::Corrected, FormulaVariant::AsPrinted] {
            let c = constant_alpha0(&params(3, 0.0, 2.0, 0.5), &NormIndex::Finite(1.0), v).unwrap();
            assert!((c.value - 1.0).abs() < 1e-14);
        }

        // frozen sphere-quadrature values for q not in {1, 2}
        let c = constant_alpha0(
            &params(3, 0.0, 2.0, 1.0),
            &NormIndex::Finite(1.5),
            FormulaVariant::Corrected,
        )
        .unwrap();
        assert!(relerr(c.value, 1.712997063389) < 1e-11);
        let c = constant_alpha0(
            &params(4, 0.0, 3.0, 1.0),
            &NormIndex::Finite(1.5),
            FormulaVariant::Corrected,
        )
        .unwrap();
        assert!(relerr(c.value, 2.128362845258) < 1e-11);
        let c = constant_alpha0(
            &params(4, 0.0, 3.0, 1.0),
            &NormIndex::Finite(3.0),
            FormulaVariant::Corrected,
        )
        .unwrap();
        assert!(relerr(c.value, 3.801438693820) < 1e-11);

        // condition (iii): beta < n-1 restricts p
        assert!(constant_alpha0(
            &params(4, 0.0, 2.0, 1.0),
            &NormIndex::Finite(2.0),
            FormulaVariant::Corrected
        )
        .is_ok());
        assert!(matches!(
            constant_alpha0(
                &params(4, 0.0, 2.0, 1.0),
                &NormIndex::Finite(3.5),
                FormulaVariant::Corrected
            ),
            Err(Error::InvalidParams { .. }) // fails validate before the condition
        ));
        assert!(constant_alpha0(
            &params(3, 0.1, 3.0, 1.0),
            &NormIndex::Finite(2.0),
            FormulaVariant::Corrected
        )
        .is_err());
    }

    #[test]
    fn alpha0_pinf_limit() {
        // p -> infinity: the finite-p corrected value converges to the p = inf value
        for (n, beta) in [(3u32, 3.0), (4, 5.0), (5, 4.5)] {
            let pp = NormIndex::Finite(1e6);
            let big = constant_alpha0(&params(n, 0.0, beta, 1.0), &pp, FormulaVariant::Corrected)
                .unwrap()
                .value;
            let inf = constant_alpha0(
                &params(n, 0.0, beta, 1.0),
                &NormIndex::Infinity,
                FormulaVariant::Corrected,
            )
            .unwrap()
            .value;
            assert!(relerr(big, inf) < 1e-4, "n={n} beta={beta}: {big} vs {inf}");
        }
    }

    #[test]
    fn p2_examples() {
        let c = constant_p2(&params(3, 0.0, 3.0, 1.0)).unwrap();
        assert!(relerr(c.value, 3.0 * PI.sqrt() / 2.0) < 1e-14);
        assert_eq!(c.branch, Branch::P2Normal);

        let k3 = 1.0 / (2.0 * PI);
        let c = constant_p2(&params(3, 1.0 / 3.0, 3.0, k3)).unwrap();
        assert!(relerr(c.value, (6.0 / (32.0 * PI)).sqrt()) < 1e-14);

        let c = constant_p2(&params(3, 0.75, 4.0, 1.0)).unwrap();
        assert!(relerr(c.value, 4.0 * (PI / 40.0).sqrt()) < 1e-14);
        assert_eq!(c.branch, Branch::P2Tangential);

        // frozen cross-check (n = 4, normal branch)
        let c = constant_p2(&params(4, 0.3, 4.0, 1.0)).unwrap();
        assert!(relerr(c.value, 1.735001251392) < 1e-11);
    }

    #[test]
    fn p2_branch_agrees_with_classification() {
        for n in [3u32, 4, 5] {
            for alpha in [0.0, 0.3, 0.55, 0.8, 1.0, 2.0] {
                for beta in [n as f64 - 0.7, n as f64, n as f64 + 2.0] {
                    let pr = params(n, alpha, beta, 1.0);
                    let p2 = NormIndex::Finite(2.0);
                    if validate(&pr, &p2).is_err() {
                        continue;
                    }
                    let from_max = constant_p2(&pr).unwrap().branch;
                    let from_thresholds = crate::model::classify_regime(&pr, &p2).unwrap().branch;
                    assert_eq!(from_max, from_thresholds, "n={n} alpha={alpha} beta={beta}");
                }
            }
        }
    }

    #[test]
    fn pinf_large_alpha_examples() {
        let c = constant_pinf_large_alpha(&params(3, 1.5, 3.0, 1.0)).unwrap();
        assert!(relerr(c.value, 7.0 * PI) < 1e-14);
        let c = constant_pinf_large_alpha(&params(3, 2.0, 3.0, 1.0)).unwrap();
        assert!(relerr(c.value, 10.0 * PI) < 1e-14);
        assert!(matches!(
            constant_pinf_large_alpha(&params(3, 1.2, 3.0, 1.0)),
            Err(Error::OutOfRegime { .. })
        ));
    }

    #[test]
    fn pinf_alpha_one_examples() {
        let c = constant_pinf_alpha_one(&params(3, 1.0, 3.0, 1.0)).unwrap();
        assert!(relerr(c.value, 4.0 * PI) < 1e-14);
        let k3 = 1.0 / (2.0 * PI);
        let c = constant_pinf_alpha_one(&params(3, 1.0, 3.0, k3)).unwrap();
        assert!(relerr(c.value, 2.0) < 1e-14);
        let c = constant_pinf_alpha_one(&params(3, 1.0, 2.5, 1.0)).unwrap();
        assert!(relerr(c.value, 8.0 * PI) < 1e-14);
        assert!(constant_pinf_alpha_one(&params(3, 1.0, 3.5, 1.0)).is_err());
        assert!(constant_pinf_alpha_one(&params(3, 0.9, 3.0, 1.0)).is_err());
    }

    #[test]
    fn harmonic_reference_values() {
        assert!(
            relerr(
                harmonic_reference(3, &NormIndex::Finite(1.0)).unwrap(),
                1.0 / PI
            ) < 1e-14
        );
        assert!(
            relerr(
                harmonic_reference(3, &NormIndex::Finite(2.0)).unwrap(),
                (6.0 / (32.0 * PI)).sqrt()
            ) < 1e-14
        );
        assert!(
            relerr(
                harmonic_reference(3, &NormIndex::Infinity).unwrap(),
                4.0 / (3.0 * 3f64.sqrt())
            ) < 1e-14
        );
        assert!(harmonic_reference(3, &NormIndex::Finite(4.0)).is_err());
        assert!(harmonic_reference(2, &NormIndex::Infinity).is_err());
    }

    #[test]
    fn harmonic_embedding_p1_p2() {
        // (alpha, beta, k) = (1/n, n, 2/omega_n) reproduces the classical constants
        for n in 3u32..=6 {
            let nf = n as f64;
            let pr = params(n, 1.0 / nf, nf, 2.0 / omega(n));
            let c1 = constant_p1(&pr, FormulaVariant::Corrected).unwrap().value;
            let want1 = harmonic_reference(n, &NormIndex::Finite(1.0)).unwrap();
            assert!(relerr(c1, want1) < 1e-10, "n={n}: c1={c1} want={want1}");
            let c2 = constant_p2(&pr).unwrap().value;
            let want2 = harmonic_reference(n, &NormIndex::Finite(2.0)).unwrap();
            assert!(relerr(c2, want2) < 1e-10, "n={n}: c2={c2} want={want2}");
        }
    }

    #[test]
    fn alpha0_overlap_with_p2() {
        // at alpha = 0 and p = 2 the two formulas agree to rounding
        for n in [3u32, 4, 5] {
            let nf = n as f64;
            for beta in [nf - 0.5, nf, nf + 1.0, nf + 3.0] {
                let pr = params(n, 0.0, beta, 1.0);
                let a = constant_alpha0(&pr, &NormIndex::Finite(2.0), FormulaVariant::Corrected)
                    .unwrap()
                    .value;
                let b = constant_p2(&pr).unwrap().value;
                assert!(relerr(a, b) < 1e-12, "n={n} beta={beta}: {a} vs {b}");
            }
        }
    }

    proptest! {
        // every closed form scales linearly in |k|
        #[test]
        fn linear_in_k(alpha in 0.0f64..3.0, beta in 2.1f64..8.0, c in -4.0f64..4.0) {
            prop_assume!(c != 0.0);
            let base = params(3, alpha, beta, 1.0);
            let scaled = params(3, alpha, beta, c);
            let v1 = constant_p1(&base, FormulaVariant::Corrected).unwrap().value;
            let v2 = constant_p1(&scaled, FormulaVariant::Corrected).unwrap().value;
            prop_assert!((v2 - c.abs() * v1).abs() <= 1e-12 * v2.max(1.0));
            let w1 = constant_p2(&base).unwrap().value;
            let w2 = constant_p2(&scaled).unwrap().value;
            prop_assert!((w2 - c.abs() * w1).abs() <= 1e-12 * w2.max(1.0));
        }
    }
}
