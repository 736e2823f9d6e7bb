//! Threshold and root computations behind the regime classification: the
//! p = 1 and p = 2 threshold pairs and the transcendental root α_n(β) that
//! delimits the large-α closed form at p = ∞.

use crate::error::{Error, Result};
use crate::special::ln_gamma_raw;

/// A pair of α-thresholds with `alpha1 <= alpha2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdPair {
    pub alpha1: f64,
    pub alpha2: f64,
}

/// The root α_n(β) of the p = ∞ threshold equation, together with the
/// residual of the defining equation at the returned value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaRoot {
    pub n: u32,
    pub beta: f64,
    pub value: f64,
    pub residual: f64,
}

/// Thresholds α₁ = √(1+β)/(√(1+β)+1), α₂ = √(1+β)/(√(1+β)-1) bounding the
/// interior-maximum branch of the p = 1 constant.
pub fn p1_thresholds(beta: f64) -> Result<ThresholdPair> {
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(Error::domain(format!(
            "p1_thresholds requires beta > 0, got {beta}"
        )));
    }
    let s = (1.0 + beta).sqrt();
    Ok(ThresholdPair {
        alpha1: s / (s + 1.0),
        alpha2: s / (s - 1.0),
    })
}

/// Roots of the quadratic deciding which of the two p = 2 integrals wins:
/// α_{1,2} = [(β+1)(2β+1-n) ∓ √((β+1)(2β+1-n)(β+1-n))] / (2β(β+1)).
///
/// Real roots require β ≥ n-1; below that the discriminant is negative and
/// the p = 2 constant has a single branch.
pub fn p2_thresholds(n: u32, beta: f64) -> Result<ThresholdPair> {
    if n < 3 {
        return Err(Error::invalid(
            "n",
            format!("dimension must be >= 3, got {n}"),
        ));
    }
    let nf = n as f64;
    if beta < nf - 1.0 {
        return Err(Error::out_of_regime(format!(
            "p2 thresholds need beta >= n-1 = {} (got beta = {beta})",
            nf - 1.0
        )));
    }
    let a = (beta + 1.0) * (2.0 * beta + 1.0 - nf);
    let disc = (a * (beta + 1.0 - nf)).max(0.0).sqrt();
    let denom = 2.0 * beta * (beta + 1.0);
    Ok(ThresholdPair {
        alpha1: (a - disc) / denom,
        alpha2: (a + disc) / denom,
    })
}

/// Left side of the threshold equation: strictly decreasing in α on [1, ∞).
fn root_lhs(n: u32, beta: f64, alpha: f64) -> f64 {
    let nf = n as f64;
    let k = 2.0
        * (ln_gamma_raw((beta - nf) / 2.0 + 1.0) - ln_gamma_raw((beta - nf + 1.0) / 2.0)).exp()
        / std::f64::consts::PI.sqrt();
    k / (beta * (alpha - 1.0) + nf - 1.0)
}

/// Right side: (α-1)/(1+√(1+(α-1)²)), strictly increasing from 0 toward 1.
fn root_rhs(alpha: f64) -> f64 {
    let t = alpha - 1.0;
    t / (1.0 + (1.0 + t * t).sqrt())
}

/// Residual lhs - rhs of the defining equation.
pub(crate) fn root_residual(n: u32, beta: f64, alpha: f64) -> f64 {
    root_lhs(n, beta, alpha) - root_rhs(alpha)
}

/// The unique root α_n(β) ∈ (1, ∞) of the p = ∞ threshold equation.
///
/// The left side decreases to 0 and the right side increases to 1, so a
/// bracketing bisection is safe once a sign change is found; a secant polish
/// then drives the residual to 1e-12.
pub fn alpha_root(n: u32, beta: f64) -> Result<AlphaRoot> {
    if n < 3 {
        return Err(Error::invalid(
            "n",
            format!("dimension must be >= 3, got {n}"),
        ));
    }
    let nf = n as f64;
    if !(beta > nf - 1.0) {
        return Err(Error::out_of_regime(format!(
            "alpha_root needs beta > n-1 = {} (got beta = {beta})",
            nf - 1.0
        )));
    }

    let f = |a: f64| root_residual(n, beta, a);

    let mut lo = 1.0 + 1e-9;
    let mut hi = 4.0;
    while f(hi) > 0.0 {
        hi *= 2.0;
        if hi > 1e6 {
            return Err(Error::numeric(format!(
                "no sign change up to alpha = 1e6 for n = {n}, beta = {beta}"
            )));
        }
    }

    // Bisection down to an interval of width 1e-8.
    while hi - lo > 1e-8 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Secant polish; fall back to the bracket midpoint if an iterate escapes.
    let mut a0 = lo;
    let mut a1 = hi;
    let mut f0 = f(a0);
    let mut f1 = f(a1);
    let mut best = if f0.abs() < f1.abs() {
        (a0, f0)
    } else {
        (a1, f1)
    };
    for _ in 0..60 {
        if best.1.abs() <= 1e-12 {
            break;
        }
        let denom = f1 - f0;
        let mut next = if denom != 0.0 {
            a1 - f1 * (a1 - a0) / denom
        } else {
            0.5 * (a0 + a1)
        };
        if !(next > 1.0) || !next.is_finite() {
            next = 0.5 * (a0 + a1);
        }
        let fnext = f(next);
        a0 = a1;
        f0 = f1;
        a1 = next;
        f1 = fnext;
        if fnext.abs() < best.1.abs() {
            best = (next, fnext);
        }
    }

    Ok(AlphaRoot {
        n,
        beta,
        value: best.0,
        residual: best.1,
    })
}

/// The 24 (n, β) pairs of the published threshold-root table: for each
/// n = 3..6, β runs from n - 1/2 to n + 2 in steps of 1/2.
pub fn root_table_pairs() -> Vec<(u32, f64)> {
    let mut out = Vec::with_capacity(24);
    for n in 3u32..=6 {
        for i in 0..6 {
            out.push((n, n as f64 - 0.5 + 0.5 * i as f64));
        }
    }
    out
}
