//! Sharp constants and pointwise coefficients for gradient estimates of
//! generalized Poisson integrals on the half-space.
//!
//! For u(x) = k ∫ (x_nᵅ/|y-x|)ᵝ f(y') dy' over the boundary hyperplane,
//! with f ∈ L^p, the gradient satisfies
//!
//!   |∇u(x)| ≤ C_{α,β,p} · x_n^{-(2-n+β(1-α)+(n-1)/p)} · ‖f‖_p
//!
//! with a best-possible constant C_{α,β,p}. This crate computes that
//! constant three independent ways and cross-validates them:
//!
//! * [`closed_form`] — the explicit formulas for p = 1, p = 2, α = 0, and
//!   the two covered p = ∞ regimes (large α, and α = 1 with β ≤ n);
//! * [`oracle`] — quadrature plus one-dimensional supremum search over the
//!   direction parameter γ, usable in every regime;
//! * [`harness`] — direct numerical evaluation of ∇u for concrete boundary
//!   data, checking the inequality itself and approaching equality with
//!   near-extremal data.
//!
//! [`roots`] supplies the regime thresholds (including the transcendental
//! threshold α_n(β) at p = ∞), [`model`] the parameter domain and regime
//! classification, and [`apps`] the harmonic/biharmonic specializations
//! (β = n, k = 2/ω_n).
//!
//! The classical harmonic case is the parameter point (α, β, k) =
//! (1/n, n, 2/ω_n); the crate reproduces its known sharp constants for
//! p ∈ {1, 2, ∞} as a standing consistency check.

// validators use `!(x > 0.0)` so that NaN fails the check too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod apps;
pub mod closed_form;
mod error;
pub mod eval;
pub mod harness;
pub mod model;
pub mod oracle;
mod quad;
pub mod roots;
pub mod special;

pub use error::{Error, Result};
pub use eval::{gradient_bound, sharp_constant, Method};
pub use harness::{
    kernel_gradient, near_extremal_boundary, numeric_gradient, verify_bound, BoundaryFunction,
    EvaluationPoint, TabulatedData, VerificationReport,
};
pub use model::{
    classify_regime, coefficient_at, validate, xn_exponent, Branch, ConstantMethod, FormulaVariant,
    GradientBound, KernelParams, NormIndex, Regime, SharpConstant, Threshold,
};
pub use oracle::{ObjectiveSample, QuadratureSpec};
pub use roots::{
    alpha_root, p1_thresholds, p2_thresholds, root_table_pairs, AlphaRoot, ThresholdPair,
};
pub use special::{gamma_ratio, log_gamma, sphere_area, SphereArea};
