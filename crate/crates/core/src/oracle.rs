//! Independent numerical evaluation of the sharp constant by quadrature and
//! one-dimensional supremum search.
//!
//! For p > 1 the constant is the supremum over γ ≥ 0 of
//!
//!   |k| β ω_{n-2}^{1/q} (1+γ²)^{-1/2} [ ∫₀^π dφ ∫₀^{π/2}
//!       |G|^q cos^λθ sin^{n-2}θ sin^{n-3}φ dθ ]^{1/q},
//!
//! with G = cos²θ - α + γ cosθ sinθ cosφ, q = p/(p-1) and
//! λ = ((β-n)p+n)/(p-1); p = ∞ is the q = 1, λ = β-n member of the family.
//! The γ axis is compactified as γ = tan ψ; the ψ = π/2 node is the exact
//! γ → ∞ limit (the tangential direction), evaluated in a scaled form that
//! never materializes γ.
//!
//! The θ-integrand changes sign across an analytically known curve; every
//! segment between sign changes is integrated with composite Gauss–Legendre
//! panels. When λ is negative (the cos^λ factor blows up integrably at
//! θ = π/2) or fractional (a Hölder endpoint), the last segment is remapped
//! by θ = π/2 - L u^m so the endpoint behaves like u^{m(λ+1)-1} with
//! exponent at least 3, keeping plain panels accurate without
//! Jacobi-weighted rules. Node placement is deterministic throughout and
//! accumulation is pairwise in index order.

use crate::error::{Error, Result};
use crate::model::{
    classify_regime, validate, ConstantMethod, FormulaVariant, KernelParams, NormIndex,
    SharpConstant,
};
use crate::quad::{gl_panels, golden_max, pairwise_sum};
use crate::special::omega;

use std::f64::consts::{FRAC_PI_2, PI};

/// Panel counts, tolerances, and γ-search configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSpec {
    /// Gauss–Legendre panels on the θ half-interval (8 nodes per panel).
    pub theta_panels: usize,
    /// Panels on φ ∈ [0, π].
    pub phi_panels: usize,
    /// Coarse grid size on the compactified γ axis.
    pub gamma_grid: usize,
    /// Golden-section stopping width on the ψ axis.
    pub refine_tol: f64,
    /// Requested absolute error of the constant.
    pub target_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            theta_panels: 64,
            phi_panels: 64,
            gamma_grid: 129,
            refine_tol: 1e-10,
            target_tol: 1e-8,
        }
    }
}

impl QuadratureSpec {
    /// Default spec for a given norm index; p = ∞ integrands carry a corner
    /// and get a looser absolute target.
    pub fn for_norm(p: &NormIndex) -> Self {
        let mut s = QuadratureSpec::default();
        if p.is_infinite() {
            s.target_tol = 1e-6;
        }
        s
    }

    pub fn validate(&self) -> Result<()> {
        if self.theta_panels < 8 {
            return Err(Error::invalid("theta_panels", "panel counts must be >= 8"));
        }
        if self.phi_panels < 8 {
            return Err(Error::invalid("phi_panels", "panel counts must be >= 8"));
        }
        if self.gamma_grid < 8 {
            return Err(Error::invalid("gamma_grid", "grid counts must be >= 8"));
        }
        if !(self.refine_tol > 0.0) || !(self.target_tol > 0.0) {
            return Err(Error::invalid("refine_tol", "tolerances must be positive"));
        }
        Ok(())
    }
}

/// One evaluation of the γ-parameterized objective.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectiveSample {
    pub gamma: f64,
    pub value: f64,
}

/// Conjugate-exponent data shared by the finite-p and p = ∞ objectives.
#[derive(Debug, Clone, Copy)]
struct ConjugateData {
    q: f64,
    lambda: f64,
}

fn conjugate_data(params: &KernelParams, p: &NormIndex) -> ConjugateData {
    let (n, beta) = (params.n as f64, params.beta);
    match p {
        NormIndex::Finite(pv) => ConjugateData {
            q: pv / (pv - 1.0),
            lambda: ((beta - n) * pv + n) / (pv - 1.0),
        },
        NormIndex::Infinity => ConjugateData {
            q: 1.0,
            lambda: beta - n,
        },
    }
}

/// |x|^q with fast paths for the exponents that occur at p ∈ {1.5, 2, 3, ∞}.
#[derive(Debug, Clone, Copy)]
enum PowQ {
    One,
    ThreeHalves,
    Two,
    Three,
    Real(f64),
}

impl PowQ {
    fn new(q: f64) -> Self {
        if q == 1.0 {
            PowQ::One
        } else if q == 1.5 {
            PowQ::ThreeHalves
        } else if q == 2.0 {
            PowQ::Two
        } else if q == 3.0 {
            PowQ::Three
        } else {
            PowQ::Real(q)
        }
    }

    #[inline]
    fn apply(&self, x: f64) -> f64 {
        let a = x.abs();
        match self {
            PowQ::One => a,
            PowQ::ThreeHalves => a * a.sqrt(),
            PowQ::Two => a * a,
            PowQ::Three => a * a * a,
            PowQ::Real(q) => a.powf(*q),
        }
    }
}

/// cos^λ with an integer fast path (β = n makes λ a small integer in the
/// common cases).
#[derive(Debug, Clone, Copy)]
enum PowL {
    Int(i32),
    Real(f64),
}

impl PowL {
    fn new(lambda: f64) -> Self {
        if lambda == lambda.round() && lambda.abs() <= 64.0 {
            PowL::Int(lambda as i32)
        } else {
            PowL::Real(lambda)
        }
    }

    #[inline]
    fn apply(&self, c: f64) -> f64 {
        match self {
            PowL::Int(e) => c.powi(*e),
            PowL::Real(l) => c.powf(*l),
        }
    }
}

/// θ values in (0, π/2) where cos²θ - α + b_q cosθ sinθ changes sign,
/// found from the quadratic -α T² + b_q T + (1-α) = 0 in T = tanθ.
fn sign_change_thetas(alpha: f64, bq: f64) -> Vec<f64> {
    let mut out = Vec::new();
    if alpha == 0.0 {
        if bq < 0.0 {
            out.push((-1.0 / bq).atan());
        }
    } else if alpha <= 1.0 {
        let d = (bq * bq + 4.0 * alpha * (1.0 - alpha)).sqrt();
        let t = (bq + d) / (2.0 * alpha);
        if t > 0.0 {
            out.push(t.atan());
        }
    } else {
        let disc = bq * bq - 4.0 * alpha * (alpha - 1.0);
        if disc > 0.0 && bq > 0.0 {
            let rd = disc.sqrt();
            out.push(((bq - rd) / (2.0 * alpha)).atan());
            out.push(((bq + rd) / (2.0 * alpha)).atan());
        }
    }
    out.retain(|&th| th > 1e-13 && th < FRAC_PI_2 - 1e-13);
    out.sort_by(|x, y| x.partial_cmp(y).unwrap());
    out
}

/// ∫₀^{π/2} |a (cos²θ - α) + bφ cosθ sinθ|^q cos^λθ sin^{n-2}θ dθ.
///
/// `bq_split` is the coefficient deciding the sign-change structure
/// (bφ/a when a > 0); `a == 0` means the tangential limit, whose integrand
/// has one sign on the whole interval.
#[allow(clippy::too_many_arguments)]
fn theta_integral(
    n: u32,
    alpha: f64,
    pq: PowQ,
    lambda: f64,
    pl: PowL,
    a: f64,
    bphi: f64,
    bq_split: f64,
    panels: usize,
) -> f64 {
    let splits = if a == 0.0 {
        Vec::new()
    } else {
        sign_change_thetas(alpha, bq_split)
    };
    let mut edges = Vec::with_capacity(splits.len() + 2);
    edges.push(0.0);
    edges.extend_from_slice(&splits);
    edges.push(FRAC_PI_2);

    let g = |c: f64, s: f64| a * (c * c - alpha) + bphi * c * s;
    let sin_pow = n as i32 - 2;
    let total = FRAC_PI_2;
    let mut parts = Vec::with_capacity(edges.len() - 1);
    for w in edges.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let len = hi - lo;
        if len <= 0.0 {
            continue;
        }
        let pan = ((panels as f64 * len / total).round() as usize).max(2);
        let touches_end = hi >= FRAC_PI_2 - 1e-13;
        let frac_lambda = lambda < 0.0 || (lambda - lambda.round()).abs() > 1e-9;
        if touches_end && frac_lambda {
            // The cos^λ factor is singular (λ < 0) or merely Hölder at
            // θ = π/2 (λ fractional); substitute θ = π/2 - L u^m with m
            // chosen so the endpoint behaves like u^{m(λ+1)-1}, exponent
            // at least 3. Evaluated in log form so extreme λ near -1
            // cannot overflow the intermediate powers.
            let l_len = FRAC_PI_2 - lo;
            let m = (4.0 / (lambda + 1.0)).ceil().clamp(1.0, 4000.0);
            let u_exp = m * (lambda + 1.0) - 1.0;
            parts.push(gl_panels(
                &|u: f64| {
                    let lnw = l_len.ln() + m * u.ln();
                    let w = if lnw < -700.0 { 0.0 } else { lnw.exp() };
                    let (c, s) = w.sin_cos(); // c = cosθ, s = sinθ
                    let sinc = if w > 1e-30 { c / w } else { 1.0 };
                    pq.apply(g(c, s))
                        * s.powi(sin_pow)
                        * sinc.powf(lambda)
                        * l_len.powf(lambda + 1.0)
                        * m
                        * (u_exp * u.ln()).exp()
                },
                0.0,
                1.0,
                pan,
            ));
        } else {
            parts.push(gl_panels(
                &|th: f64| {
                    let (s, c) = th.sin_cos();
                    pq.apply(g(c, s)) * pl.apply(c) * s.powi(sin_pow)
                },
                lo,
                hi,
                pan,
            ));
        }
    }
    pairwise_sum(&parts)
}

/// The double integral and prefactors for one γ (γ = ∞ allowed), at the
/// given panel resolution. Large γ is evaluated in a scaled form so nothing
/// overflows as ψ → π/2.
fn raw_objective(
    params: &KernelParams,
    cd: ConjugateData,
    gamma: f64,
    th_panels: usize,
    ph_panels: usize,
) -> f64 {
    assert!(
        cd.lambda > -1.0,
        "integrability violated: lambda = {}",
        cd.lambda
    );
    let n = params.n;
    let alpha = params.alpha;
    let pq = PowQ::new(cd.q);
    let pl = PowL::new(cd.lambda);

    // (a, b): integrand coefficients; pref: the γ-dependent outer factor.
    let (a, b, pref) = if gamma.is_infinite() {
        (0.0, 1.0, 1.0)
    } else if gamma > 1.0 {
        (1.0 / gamma, 1.0, gamma / (1.0 + gamma * gamma).sqrt())
    } else {
        (1.0, gamma, 1.0 / (1.0 + gamma * gamma).sqrt())
    };

    // φ splits: the cosφ sign change at π/2, plus (for α > 1) the angles
    // where the pair of θ sign changes appears or disappears.
    let mut edges = vec![0.0, FRAC_PI_2, PI];
    if alpha > 1.0 && gamma.is_finite() && gamma > 0.0 {
        let bstar = 2.0 * (alpha * (alpha - 1.0)).sqrt();
        if gamma > bstar {
            edges.push((bstar / gamma).acos());
        }
    }
    edges.sort_by(|x, y| x.partial_cmp(y).unwrap());

    let sin_phi_pow = n as i32 - 3;
    let mut parts = Vec::with_capacity(edges.len() - 1);
    for w in edges.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let len = hi - lo;
        if len <= 1e-15 {
            continue;
        }
        let pan = ((ph_panels as f64 * len / PI).round() as usize).max(2);
        parts.push(gl_panels(
            &|phi: f64| {
                let (sphi, cphi) = phi.sin_cos();
                let weight = sphi.powi(sin_phi_pow);
                let bphi = b * cphi;
                let bq_split = if a == 0.0 { 0.0 } else { gamma * cphi };
                weight * theta_integral(n, alpha, pq, cd.lambda, pl, a, bphi, bq_split, th_panels)
            },
            lo,
            hi,
            pan,
        ));
    }
    let inner = pairwise_sum(&parts);
    let i_total = omega(n - 2) * inner;
    let root = if cd.q == 1.0 {
        i_total
    } else {
        i_total.powf(1.0 / cd.q)
    };
    params.k.abs() * params.beta * root * pref
}

/// Doubling self-check: the value is accepted once doubling both panel
/// counts moves it by no more than the target tolerance; two further
/// refinements are allowed before giving up.
fn checked_objective(
    params: &KernelParams,
    cd: ConjugateData,
    gamma: f64,
    spec: &QuadratureSpec,
) -> Result<(f64, f64)> {
    let mut th = spec.theta_panels;
    let mut ph = spec.phi_panels;
    let mut prev = raw_objective(params, cd, gamma, th, ph);
    for _ in 0..3 {
        th *= 2;
        ph *= 2;
        let cur = raw_objective(params, cd, gamma, th, ph);
        let diff = (cur - prev).abs();
        if diff <= spec.target_tol {
            return Ok((cur, diff));
        }
        prev = cur;
    }
    Err(Error::numeric(format!(
        "quadrature did not converge to {} at gamma = {gamma} after two refinements",
        spec.target_tol
    )))
}

/// One-dimensional p = 1 oracle: |k| β max over t ∈ [0, 1] of
/// (α² + (1-2α)t²)^{1/2} tᵝ, located on a dense grid and polished by
/// golden-section search. Returns the maximizer and the constant.
pub fn profile_p1(params: &KernelParams) -> Result<(f64, SharpConstant)> {
    validate(params, &NormIndex::Finite(1.0))?;
    let (alpha, beta) = (params.alpha, params.beta);
    let f = |t: f64| {
        (alpha * alpha + (1.0 - 2.0 * alpha) * t * t)
            .max(0.0)
            .sqrt()
            * t.powf(beta)
    };

    const GRID: usize = 10_000;
    let mut best_i = 0usize;
    let mut best_v = f64::NEG_INFINITY;
    for i in 0..=GRID {
        let t = i as f64 / GRID as f64;
        let v = f(t);
        if v > best_v {
            best_v = v;
            best_i = i;
        }
    }
    let lo = (best_i.saturating_sub(1)) as f64 / GRID as f64;
    let hi = ((best_i + 1).min(GRID)) as f64 / GRID as f64;
    let (t_star, f_star, gap) = golden_max(&f, lo, hi, 1e-12, 300);

    let branch = classify_regime(params, &NormIndex::Finite(1.0))?.branch;
    let value = params.k.abs() * beta * f_star;
    let constant = SharpConstant {
        value,
        method: ConstantMethod::Numeric,
        branch,
        variant: FormulaVariant::NotApplicable,
        est_error: params.k.abs() * beta * gap + 1e-14 * value.abs(),
    };
    Ok((t_star, constant))
}

/// The finite-p objective at one γ, with the convergence self-check.
pub fn objective_finite_p(
    params: &KernelParams,
    p: f64,
    gamma: f64,
    spec: &QuadratureSpec,
) -> Result<ObjectiveSample> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::invalid(
            "p",
            format!("objective_finite_p needs 1 < p < inf, got {p}"),
        ));
    }
    let norm = NormIndex::Finite(p);
    validate(params, &norm)?;
    spec.validate()?;
    if !(gamma >= 0.0) {
        return Err(Error::invalid(
            "gamma",
            format!("gamma must be >= 0, got {gamma}"),
        ));
    }
    let cd = conjugate_data(params, &norm);
    let (value, _) = checked_objective(params, cd, gamma, spec)?;
    Ok(ObjectiveSample { gamma, value })
}

/// The p = ∞ objective at one γ, with the convergence self-check.
pub fn objective_pinf(
    params: &KernelParams,
    gamma: f64,
    spec: &QuadratureSpec,
) -> Result<ObjectiveSample> {
    validate(params, &NormIndex::Infinity)?;
    spec.validate()?;
    if !(gamma >= 0.0) {
        return Err(Error::invalid(
            "gamma",
            format!("gamma must be >= 0, got {gamma}"),
        ));
    }
    let cd = conjugate_data(params, &NormIndex::Infinity);
    let (value, _) = checked_objective(params, cd, gamma, spec)?;
    Ok(ObjectiveSample { gamma, value })
}

/// Internal hook for the verification harness: the objective value at the γ
/// of a concrete direction, i.e. the sharp constant of that direction.
pub(crate) fn directional_constant(
    params: &KernelParams,
    p: &NormIndex,
    gamma: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let cd = conjugate_data(params, p);
    Ok(checked_objective(params, cd, gamma, spec)?.0)
}

fn gamma_at(psi: f64) -> f64 {
    if psi >= FRAC_PI_2 - 1e-12 {
        f64::INFINITY
    } else {
        psi.tan().max(0.0)
    }
}

/// Supremum of the objective over γ ≥ 0 for p > 1 (p = 1 has the dedicated
/// `profile_p1`). The compactified axis ψ = atan γ is scanned on a coarse
/// grid (reduced panel counts), then the best bracket is refined by
/// golden-section search at full resolution, and the final value passes the
/// doubling self-check. Returns the constant and the maximizing γ (may be
/// `f64::INFINITY`: the tangential limit).
pub fn supremum_over_gamma(
    params: &KernelParams,
    p: &NormIndex,
    spec: &QuadratureSpec,
) -> Result<(SharpConstant, f64)> {
    if matches!(p, NormIndex::Finite(pv) if *pv == 1.0) {
        return Err(Error::invalid(
            "p",
            "p = 1 is handled by profile_p1, not the gamma supremum",
        ));
    }
    validate(params, p)?;
    spec.validate()?;
    let cd = conjugate_data(params, p);

    let k_grid = spec.gamma_grid;
    let coarse_th = (spec.theta_panels / 4).max(8);
    let coarse_ph = (spec.phi_panels / 4).max(8);
    let mut best_j = 0usize;
    let mut best_v = f64::NEG_INFINITY;
    for j in 0..k_grid {
        let psi = FRAC_PI_2 * j as f64 / (k_grid - 1) as f64;
        let v = raw_objective(params, cd, gamma_at(psi), coarse_th, coarse_ph);
        if v > best_v {
            best_v = v;
            best_j = j;
        }
    }

    let step = FRAC_PI_2 / (k_grid - 1) as f64;
    let lo = step * best_j.saturating_sub(1) as f64;
    let hi = (step * (best_j + 1) as f64).min(FRAC_PI_2);
    let full = |psi: f64| {
        raw_objective(
            params,
            cd,
            gamma_at(psi),
            spec.theta_panels,
            spec.phi_panels,
        )
    };
    let (psi_star, _, gap) = golden_max(&full, lo, hi, spec.refine_tol, 200);

    let gamma_star = gamma_at(psi_star);
    let (value, quad_err) = checked_objective(params, cd, gamma_star, spec)?;
    let branch = classify_regime(params, p)?.branch;
    // floor at rounding scale: a numeric result is never exact
    let est_error = (quad_err + gap).max(f64::EPSILON * value.abs());
    let constant = SharpConstant {
        value,
        method: ConstantMethod::Numeric,
        branch,
        variant: FormulaVariant::NotApplicable,
        est_error,
    };
    Ok((constant, gamma_star))
}

/// Location of the p = 1 directional supremum over the hemisphere for an
/// explicit direction z = (z_t · e₁, z_n): the azimuthal maximum of the
/// linear |·| factor sits at cosφ = ±1, so two 1-D searches in θ suffice.
/// Returns (profile maximum, θ*, w*) with w* ∈ {-1, +1}.
pub(crate) fn p1_direction_argmax(params: &KernelParams, z_t: f64, z_n: f64) -> (f64, f64, f64) {
    let (alpha, beta) = (params.alpha, params.beta);
    let mut best = (f64::NEG_INFINITY, 0.0, 1.0);
    for w in [1.0f64, -1.0] {
        let f = |th: f64| {
            let (s, c) = th.sin_cos();
            ((alpha - c * c) * z_n - c * s * w * z_t).abs() * c.powf(beta)
        };
        const GRID: usize = 2_000;
        let mut bi = 0usize;
        let mut bv = f64::NEG_INFINITY;
        for i in 0..=GRID {
            let th = FRAC_PI_2 * i as f64 / GRID as f64;
            let v = f(th);
            if v > bv {
                bv = v;
                bi = i;
            }
        }
        let lo = FRAC_PI_2 * bi.saturating_sub(1) as f64 / GRID as f64;
        let hi = FRAC_PI_2 * ((bi + 1).min(GRID)) as f64 / GRID as f64;
        let (th_star, v_star, _) = golden_max(&f, lo, hi, 1e-12, 300);
        if v_star > best.0 {
            best = (v_star, th_star, w);
        }
    }
    best
}

/// Per-direction surface integral of the directional constant for p > 1,
/// with an explicit direction vector (z_t along the first tangential axis, z_n up).
/// n = 3 integrates the full circle; higher n uses the reduced azimuthal
/// weight sin^{n-3}φ on [0, π].
fn direction_integral(
    params: &KernelParams,
    cd: ConjugateData,
    z_t: f64,
    z_n: f64,
    th_panels: usize,
    ph_panels: usize,
) -> f64 {
    assert!(
        cd.lambda > -1.0,
        "integrability violated: lambda = {}",
        cd.lambda
    );
    let n = params.n;
    let alpha = params.alpha;
    let pq = PowQ::new(cd.q);
    let pl = PowL::new(cd.lambda);

    // |G_z| = |z_n (cos²θ - α) + cosθ sinθ W|, W = (ω · z') per azimuth.
    let theta_part = |w_dot: f64, pan: usize| {
        let bq_split = if z_n > 0.0 { w_dot / z_n } else { 0.0 };
        theta_integral(n, alpha, pq, cd.lambda, pl, z_n, w_dot, bq_split, pan)
    };

    // azimuthal sign/structure changes for splitting
    let mut crit_cos = vec![0.0f64];
    if alpha > 1.0 && z_t > 0.0 && z_n > 0.0 {
        let wstar = 2.0 * (alpha * (alpha - 1.0)).sqrt() * z_n;
        if wstar < z_t {
            crit_cos.push(wstar / z_t);
            crit_cos.push(-wstar / z_t);
        }
    }

    if n == 3 {
        let mut edges = vec![0.0, 2.0 * PI];
        for c in &crit_cos {
            let a = c.acos();
            edges.push(a);
            edges.push(2.0 * PI - a);
        }
        edges.sort_by(|x, y| x.partial_cmp(y).unwrap());
        edges.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
        let mut parts = Vec::new();
        for w in edges.windows(2) {
            let len = w[1] - w[0];
            if len <= 1e-14 {
                continue;
            }
            let pan = ((ph_panels as f64 * len / (2.0 * PI)).round() as usize).max(2);
            parts.push(gl_panels(
                &|psi: f64| theta_part(psi.cos() * z_t, th_panels),
                w[0],
                w[1],
                pan,
            ));
        }
        pairwise_sum(&parts)
    } else {
        let mut edges = vec![0.0, PI];
        for c in &crit_cos {
            edges.push(c.acos());
        }
        edges.sort_by(|x, y| x.partial_cmp(y).unwrap());
        edges.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
        let sin_phi_pow = n as i32 - 3;
        let mut parts = Vec::new();
        for w in edges.windows(2) {
            let len = w[1] - w[0];
            if len <= 1e-14 {
                continue;
            }
            let pan = ((ph_panels as f64 * len / PI).round() as usize).max(2);
            parts.push(gl_panels(
                &|phi: f64| {
                    let (sphi, cphi) = phi.sin_cos();
                    sphi.powi(sin_phi_pow) * theta_part(cphi * z_t, th_panels)
                },
                w[0],
                w[1],
                pan,
            ));
        }
        omega(n - 2) * pairwise_sum(&parts)
    }
}

/// Independent cross-check path: scan a grid of unit directions z
/// parameterized by γ = |z'|/z_n, evaluate the directional constant of each
/// by an explicit hemisphere integral (p > 1) or hemisphere supremum
/// (p = 1), and return the largest together with its γ.
pub fn sphere_direct(
    params: &KernelParams,
    p: &NormIndex,
    direction_grid: usize,
    spec: &QuadratureSpec,
) -> Result<(SharpConstant, f64)> {
    validate(params, p)?;
    spec.validate()?;
    if direction_grid < 3 {
        return Err(Error::invalid(
            "direction_grid",
            "need at least 3 directions",
        ));
    }

    let kb = params.k.abs() * params.beta;
    let value_at = |chi: f64, th: usize, ph: usize| -> f64 {
        let (z_t, z_n) = chi.sin_cos();
        match p {
            NormIndex::Finite(pv) if *pv == 1.0 => kb * p1_direction_argmax(params, z_t, z_n).0,
            _ => {
                let cd = conjugate_data(params, p);
                let i = direction_integral(params, cd, z_t, z_n, th, ph);
                let root = if cd.q == 1.0 { i } else { i.powf(1.0 / cd.q) };
                kb * root
            }
        }
    };

    let coarse_th = (spec.theta_panels / 4).max(8);
    let coarse_ph = (spec.phi_panels / 4).max(8);
    let mut best_j = 0usize;
    let mut best_v = f64::NEG_INFINITY;
    for j in 0..direction_grid {
        let chi = FRAC_PI_2 * j as f64 / (direction_grid - 1) as f64;
        let v = value_at(chi, coarse_th, coarse_ph);
        if v > best_v {
            best_v = v;
            best_j = j;
        }
    }
    let step = FRAC_PI_2 / (direction_grid - 1) as f64;
    let lo = step * best_j.saturating_sub(1) as f64;
    let hi = (step * (best_j + 1) as f64).min(FRAC_PI_2);
    let (chi_star, v_full, _) = golden_max(
        &|chi| value_at(chi, spec.theta_panels, spec.phi_panels),
        lo,
        hi,
        spec.refine_tol,
        200,
    );

    // doubled-resolution error estimate at the winner
    let v_double = value_at(chi_star, spec.theta_panels * 2, spec.phi_panels * 2);
    let est = (v_double - v_full).abs().max(f64::EPSILON * v_double.abs());
    let best_gamma = if chi_star >= FRAC_PI_2 - 1e-12 {
        f64::INFINITY
    } else {
        chi_star.tan()
    };

    let branch = classify_regime(params, p)?.branch;
    Ok((
        SharpConstant {
            value: v_double,
            method: ConstantMethod::Numeric,
            branch,
            variant: FormulaVariant::NotApplicable,
            est_error: est,
        },
        best_gamma,
    ))
}
