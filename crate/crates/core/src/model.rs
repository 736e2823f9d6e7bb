//! Parameter domain, regime classification, and assembly of the pointwise
//! coefficient from a sharp constant and the x_n power law.
//!
//! The kernel under study is k (x_nᵅ / |y-x|)ᵝ acting on boundary data in
//! L^p(ℝ^{n-1}); every downstream module works with the types defined here.

use crate::error::{Error, Result};
use crate::roots;

/// The quadruple (n, α, β, k) defining the kernel k (x_nᵅ/|y-x|)ᵝ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    /// Space dimension, n ≥ 3.
    pub n: u32,
    /// Kernel exponent α ≥ 0 on x_n.
    pub alpha: f64,
    /// Kernel exponent β > 0 on 1/|y-x|.
    pub beta: f64,
    /// Kernel multiplier k ≠ 0.
    pub k: f64,
}

impl KernelParams {
    pub fn new(n: u32, alpha: f64, beta: f64, k: f64) -> Result<Self> {
        let p = KernelParams { n, alpha, beta, k };
        p.check_fields()?;
        Ok(p)
    }

    fn check_fields(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::invalid(
                "n",
                format!("dimension must be >= 3, got {}", self.n),
            ));
        }
        if !(self.alpha >= 0.0) || !self.alpha.is_finite() {
            return Err(Error::invalid(
                "alpha",
                format!("alpha must be >= 0, got {}", self.alpha),
            ));
        }
        if !(self.beta > 0.0) || !self.beta.is_finite() {
            return Err(Error::invalid(
                "beta",
                format!("beta must be > 0, got {}", self.beta),
            ));
        }
        if self.k == 0.0 || !self.k.is_finite() {
            return Err(Error::invalid(
                "k",
                format!("multiplier must be nonzero, got {}", self.k),
            ));
        }
        Ok(())
    }
}

/// The norm index p ∈ [1, ∞], with ∞ as a distinguished value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NormIndex {
    Finite(f64),
    Infinity,
}

impl NormIndex {
    /// A finite p; requires p ≥ 1.
    pub fn finite(p: f64) -> Result<Self> {
        if !(p >= 1.0) || !p.is_finite() {
            return Err(Error::invalid(
                "p",
                format!("norm index must satisfy p >= 1, got {p}"),
            ));
        }
        Ok(NormIndex::Finite(p))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, NormIndex::Infinity)
    }

    /// 1/p, read as 0 for p = ∞.
    pub fn one_over_p(&self) -> f64 {
        match self {
            NormIndex::Finite(p) => 1.0 / p,
            NormIndex::Infinity => 0.0,
        }
    }

    /// (p-1)/p, read as 1 for p = ∞.
    pub fn p_ratio(&self) -> f64 {
        match self {
            NormIndex::Finite(p) => (p - 1.0) / p,
            NormIndex::Infinity => 1.0,
        }
    }

    /// The Hölder conjugate q = p/(p-1); +∞ at p = 1 and 1 at p = ∞.
    /// The p = 1 code paths never use it (they work with suprema instead).
    pub fn conjugate(&self) -> f64 {
        match self {
            NormIndex::Finite(p) if *p == 1.0 => f64::INFINITY,
            NormIndex::Finite(p) => p / (p - 1.0),
            NormIndex::Infinity => 1.0,
        }
    }
}

impl std::fmt::Display for NormIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NormIndex::Finite(p) => write!(f, "{p}"),
            NormIndex::Infinity => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for NormIndex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "Inf" | "INF" | "infinity" => Ok(NormIndex::Infinity),
            other => {
                let p: f64 = other.parse().map_err(|_| {
                    Error::invalid("p", format!("cannot parse norm index `{other}`"))
                })?;
                NormIndex::finite(p)
            }
        }
    }
}

/// Which formula (or lack of one) governs a parameter combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// p = 1, α outside the interior-maximum window: C = |k| β |1-α|.
    P1Outer,
    /// p = 1, α inside the window: the profile maximum sits in (0, 1).
    P1Middle,
    /// α = 0 closed form (all p allowed by the validity conditions).
    Alpha0Closed,
    /// p = 2 with the normal-direction integral dominating (supremum at γ = 0).
    P2Normal,
    /// p = 2 with the tangential integral dominating (supremum as γ → ∞).
    P2Tangential,
    /// p = ∞ with α at or above the transcendental threshold α_n(β).
    PinfLargeAlpha,
    /// p = ∞ with α = 1 and n-1 < β ≤ n.
    PinfAlphaOne,
    /// No closed form applies; only the quadrature oracle can evaluate it.
    NumericOnly,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::P1Outer => "p1_outer",
            Branch::P1Middle => "p1_middle",
            Branch::Alpha0Closed => "alpha0_closed",
            Branch::P2Normal => "p2_normal",
            Branch::P2Tangential => "p2_tangential",
            Branch::PinfLargeAlpha => "pinf_large_alpha",
            Branch::PinfAlphaOne => "pinf_alpha1",
            Branch::NumericOnly => "numeric_only",
        }
    }
}

/// A named threshold used while classifying.
#[derive(Debug, Clone, PartialEq)]
pub struct Threshold {
    pub name: &'static str,
    pub value: f64,
}

/// Result of regime classification: the branch plus the thresholds that
/// decided it.
#[derive(Debug, Clone, PartialEq)]
pub struct Regime {
    pub branch: Branch,
    pub thresholds: Vec<Threshold>,
}

/// How a sharp constant was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantMethod {
    ClosedForm,
    Numeric,
}

impl ConstantMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConstantMethod::ClosedForm => "closed",
            ConstantMethod::Numeric => "numeric",
        }
    }
}

/// Which variant of a closed form was evaluated. `Corrected` is the default
/// and matches the independent oracles; `AsPrinted` reproduces the reference
/// expressions verbatim where the two differ (two documented exponents).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaVariant {
    AsPrinted,
    Corrected,
    NotApplicable,
}

impl FormulaVariant {
    pub fn as_str(&self) -> &'static str {
        match self {
            FormulaVariant::AsPrinted => "as-printed",
            FormulaVariant::Corrected => "corrected",
            FormulaVariant::NotApplicable => "none",
        }
    }
}

/// A computed sharp constant C_{α,β,p} with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct SharpConstant {
    pub value: f64,
    pub method: ConstantMethod,
    pub branch: Branch,
    pub variant: FormulaVariant,
    /// Heuristic absolute error estimate; exactly 0 for closed forms.
    pub est_error: f64,
}

/// A sharp constant combined with the x_n power law: the pointwise
/// coefficient at height x_n is `constant.value / x_n^{xn_exponent}`.
#[derive(Debug, Clone, PartialEq)]
pub struct GradientBound {
    pub constant: SharpConstant,
    pub xn_exponent: f64,
}

/// Checks the full parameter contract: field-level invariants plus the
/// integrability condition β > (n-1)(p-1)/p, strict (the boundary is
/// excluded; boundary requests are errors, not limit values).
pub fn validate(params: &KernelParams, p: &NormIndex) -> Result<()> {
    params.check_fields()?;
    if let NormIndex::Finite(pv) = p {
        if !(*pv >= 1.0) || !pv.is_finite() {
            return Err(Error::invalid(
                "p",
                format!("norm index must satisfy p >= 1, got {pv}"),
            ));
        }
    }
    let bound = (params.n as f64 - 1.0) * p.p_ratio();
    if !(params.beta > bound) {
        return Err(Error::invalid(
            "beta",
            format!(
                "beta must exceed (n-1)(p-1)/p = {bound} for n = {}, p = {p} (got beta = {})",
                params.n, params.beta
            ),
        ));
    }
    Ok(())
}

/// Assigns the unique branch whose closed-form hypotheses hold, or
/// `NumericOnly` when none do. Thresholds are recomputed on every call so
/// classification stays a pure function of its inputs.
pub fn classify_regime(params: &KernelParams, p: &NormIndex) -> Result<Regime> {
    validate(params, p)?;
    let n = params.n;
    let nf = n as f64;
    let alpha = params.alpha;
    let beta = params.beta;

    match p {
        NormIndex::Finite(pv) if *pv == 1.0 => {
            let t = roots::p1_thresholds(beta)?;
            let branch = if alpha <= t.alpha1 || alpha >= t.alpha2 {
                Branch::P1Outer
            } else {
                Branch::P1Middle
            };
            Ok(Regime {
                branch,
                thresholds: vec![
                    Threshold {
                        name: "alpha1",
                        value: t.alpha1,
                    },
                    Threshold {
                        name: "alpha2",
                        value: t.alpha2,
                    },
                ],
            })
        }
        NormIndex::Finite(pv) if *pv == 2.0 => {
            if beta >= nf - 1.0 {
                let t = roots::p2_thresholds(n, beta)?;
                let tangential = beta > nf - 1.0 && alpha > t.alpha1 && alpha < t.alpha2;
                Ok(Regime {
                    branch: if tangential {
                        Branch::P2Tangential
                    } else {
                        Branch::P2Normal
                    },
                    thresholds: vec![
                        Threshold {
                            name: "alpha1",
                            value: t.alpha1,
                        },
                        Threshold {
                            name: "alpha2",
                            value: t.alpha2,
                        },
                    ],
                })
            } else {
                Ok(Regime {
                    branch: Branch::P2Normal,
                    thresholds: Vec::new(),
                })
            }
        }
        NormIndex::Finite(_) => {
            if alpha == 0.0 {
                // Under the validity condition the α = 0 closed form covers
                // every finite p.
                Ok(Regime {
                    branch: Branch::Alpha0Closed,
                    thresholds: Vec::new(),
                })
            } else {
                Ok(Regime {
                    branch: Branch::NumericOnly,
                    thresholds: Vec::new(),
                })
            }
        }
        NormIndex::Infinity => {
            if alpha == 0.0 {
                return Ok(Regime {
                    branch: Branch::Alpha0Closed,
                    thresholds: Vec::new(),
                });
            }
            if alpha == 1.0 && beta <= nf {
                return Ok(Regime {
                    branch: Branch::PinfAlphaOne,
                    thresholds: vec![Threshold {
                        name: "beta_upper",
                        value: nf,
                    }],
                });
            }
            let root = roots::alpha_root(n, beta)?;
            if alpha >= root.value {
                Ok(Regime {
                    branch: Branch::PinfLargeAlpha,
                    thresholds: vec![Threshold {
                        name: "alpha_root",
                        value: root.value,
                    }],
                })
            } else {
                Ok(Regime {
                    branch: Branch::NumericOnly,
                    thresholds: vec![Threshold {
                        name: "alpha_root",
                        value: root.value,
                    }],
                })
            }
        }
    }
}

/// The x_n exponent of the pointwise coefficient:
/// 2 - n + β(1-α) + (n-1)/p, with (n-1)/p = 0 at p = ∞.
pub fn xn_exponent(params: &KernelParams, p: &NormIndex) -> Result<f64> {
    validate(params, p)?;
    let nf = params.n as f64;
    Ok(2.0 - nf + params.beta * (1.0 - params.alpha) + (nf - 1.0) * p.one_over_p())
}

impl GradientBound {
    /// The pointwise coefficient at height x_n > 0.
    pub fn coefficient_at(&self, x_n: f64) -> Result<f64> {
        coefficient_at(self, x_n)
    }
}

/// `bound.constant.value / x_n^{bound.xn_exponent}` for x_n > 0.
pub fn coefficient_at(bound: &GradientBound, x_n: f64) -> Result<f64> {
    if !(x_n > 0.0) || !x_n.is_finite() {
        return Err(Error::domain(format!(
            "coefficient_at requires x_n > 0, got {x_n}"
        )));
    }
    Ok(bound.constant.value / x_n.powf(bound.xn_exponent))
}
