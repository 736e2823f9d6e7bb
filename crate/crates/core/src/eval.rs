//! Dispatch between the closed forms and the quadrature oracle.

use crate::closed_form;
use crate::error::{Error, Result};
use crate::model::{
    classify_regime, xn_exponent, Branch, FormulaVariant, GradientBound, KernelParams, NormIndex,
    SharpConstant,
};
use crate::oracle::{self, QuadratureSpec};

/// How to obtain a constant: `Auto` uses the closed form whenever the
/// regime has one and the oracle otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Auto,
    Closed,
    Numeric,
}

fn closed_for_branch(
    branch: Branch,
    params: &KernelParams,
    p: &NormIndex,
    variant: FormulaVariant,
) -> Result<SharpConstant> {
    match branch {
        Branch::P1Outer | Branch::P1Middle => closed_form::constant_p1(params, variant),
        Branch::Alpha0Closed => closed_form::constant_alpha0(params, p, variant),
        Branch::P2Normal | Branch::P2Tangential => closed_form::constant_p2(params),
        Branch::PinfLargeAlpha => closed_form::constant_pinf_large_alpha(params),
        Branch::PinfAlphaOne => closed_form::constant_pinf_alpha_one(params),
        Branch::NumericOnly => Err(Error::out_of_regime(
            "no closed form covers these parameters; use the numeric method",
        )),
    }
}

fn numeric(params: &KernelParams, p: &NormIndex, spec: &QuadratureSpec) -> Result<SharpConstant> {
    match p {
        NormIndex::Finite(pv) if *pv == 1.0 => Ok(oracle::profile_p1(params)?.1),
        _ => Ok(oracle::supremum_over_gamma(params, p, spec)?.0),
    }
}

/// The sharp constant for (params, p) by the requested method.
pub fn sharp_constant(
    params: &KernelParams,
    p: &NormIndex,
    method: Method,
    variant: FormulaVariant,
    spec: &QuadratureSpec,
) -> Result<SharpConstant> {
    let regime = classify_regime(params, p)?;
    match method {
        Method::Closed => closed_for_branch(regime.branch, params, p, variant),
        Method::Numeric => numeric(params, p, spec),
        Method::Auto => {
            if regime.branch == Branch::NumericOnly {
                numeric(params, p, spec)
            } else {
                closed_for_branch(regime.branch, params, p, variant)
            }
        }
    }
}

/// The sharp constant combined with its x_n power law.
pub fn gradient_bound(
    params: &KernelParams,
    p: &NormIndex,
    method: Method,
    variant: FormulaVariant,
    spec: &QuadratureSpec,
) -> Result<GradientBound> {
    let constant = sharp_constant(params, p, method, variant, spec)?;
    let exponent = xn_exponent(params, p)?;
    Ok(GradientBound {
        constant,
        xn_exponent: exponent,
    })
}
