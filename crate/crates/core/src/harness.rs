//! Empirical verification: evaluate the gradient of the integral for
//! concrete boundary data by truncated quadrature over the boundary plane
//! and compare it against the sharp bound, including near-extremal data
//! that drives the inequality toward equality.

use crate::error::{Error, Result};
use crate::eval::{self, Method};
use crate::model::{validate, xn_exponent, FormulaVariant, KernelParams, NormIndex};
use crate::oracle::{self, QuadratureSpec};
use crate::quad::{gl_panels, pairwise_sum};
use crate::special::omega;

use std::f64::consts::PI;

/// An interior evaluation point (x', x_n), x_n > 0.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationPoint {
    pub x_prime: Vec<f64>,
    pub x_n: f64,
}

impl EvaluationPoint {
    pub fn new(x_prime: Vec<f64>, x_n: f64) -> Result<Self> {
        if !(x_n > 0.0) || !x_n.is_finite() {
            return Err(Error::invalid(
                "x_n",
                format!("evaluation height must be > 0, got {x_n}"),
            ));
        }
        Ok(EvaluationPoint { x_prime, x_n })
    }

    fn check_dim(&self, n: u32) -> Result<()> {
        if self.x_prime.len() != (n - 1) as usize {
            return Err(Error::invalid(
                "x_prime",
                format!(
                    "expected {} tangential coordinates, got {}",
                    n - 1,
                    self.x_prime.len()
                ),
            ));
        }
        Ok(())
    }
}

/// Tabulated boundary data on a rectangular grid (two tangential axes, so
/// n = 3 only). Values are bilinearly interpolated inside the grid hull and
/// zero outside.
#[derive(Debug, Clone, PartialEq)]
pub struct TabulatedData {
    pub y1_axis: Vec<f64>,
    pub y2_axis: Vec<f64>,
    /// Row-major: values[i * y2_axis.len() + j] belongs to (y1_axis[i], y2_axis[j]).
    pub values: Vec<f64>,
}

impl TabulatedData {
    pub fn new(y1_axis: Vec<f64>, y2_axis: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if y1_axis.len() < 2 || y2_axis.len() < 2 {
            return Err(Error::invalid(
                "grid",
                "tabulated data needs at least a 2x2 grid",
            ));
        }
        if values.len() != y1_axis.len() * y2_axis.len() {
            return Err(Error::invalid(
                "values",
                format!(
                    "expected {} values, got {}",
                    y1_axis.len() * y2_axis.len(),
                    values.len()
                ),
            ));
        }
        if !y1_axis.windows(2).all(|w| w[1] > w[0]) || !y2_axis.windows(2).all(|w| w[1] > w[0]) {
            return Err(Error::invalid(
                "grid",
                "grid axes must be strictly increasing",
            ));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("values", "tabulated values must be finite"));
        }
        Ok(TabulatedData {
            y1_axis,
            y2_axis,
            values,
        })
    }

    fn interpolate(&self, y1: f64, y2: f64) -> f64 {
        let (a1, a2) = (&self.y1_axis, &self.y2_axis);
        if y1 < a1[0] || y1 > *a1.last().unwrap() || y2 < a2[0] || y2 > *a2.last().unwrap() {
            return 0.0;
        }
        let i = a1.partition_point(|v| *v <= y1).clamp(1, a1.len() - 1) - 1;
        let j = a2.partition_point(|v| *v <= y2).clamp(1, a2.len() - 1) - 1;
        let t = (y1 - a1[i]) / (a1[i + 1] - a1[i]);
        let u = (y2 - a2[j]) / (a2[j + 1] - a2[j]);
        let m = a2.len();
        let v00 = self.values[i * m + j];
        let v01 = self.values[i * m + j + 1];
        let v10 = self.values[(i + 1) * m + j];
        let v11 = self.values[(i + 1) * m + j + 1];
        (1.0 - t) * ((1.0 - u) * v00 + u * v01) + t * ((1.0 - u) * v10 + u * v11)
    }

    fn norm(&self, p: &NormIndex) -> f64 {
        // trapezoid-style cell weights on each axis
        let weights = |axis: &[f64]| -> Vec<f64> {
            let m = axis.len();
            (0..m)
                .map(|i| {
                    let lo = if i == 0 { axis[0] } else { axis[i - 1] };
                    let hi = if i == m - 1 { axis[m - 1] } else { axis[i + 1] };
                    0.5 * (hi - lo)
                })
                .collect()
        };
        let w1 = weights(&self.y1_axis);
        let w2 = weights(&self.y2_axis);
        match p {
            NormIndex::Infinity => self.values.iter().fold(0.0f64, |m, v| m.max(v.abs())),
            NormIndex::Finite(pv) => {
                let m = self.y2_axis.len();
                let mut acc = 0.0;
                for (i, wi) in w1.iter().enumerate() {
                    for (j, wj) in w2.iter().enumerate() {
                        acc += self.values[i * m + j].abs().powf(*pv) * wi * wj;
                    }
                }
                acc.powf(1.0 / pv)
            }
        }
    }
}

/// Boundary data families with closed-form (or constructively known) norms.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundaryFunction {
    /// f ≡ c. Only the L^∞ norm exists.
    Constant(f64),
    /// height · exp(-|y' - center|² / (2 width²)).
    GaussianBump {
        center: Vec<f64>,
        width: f64,
        height: f64,
    },
    /// The p = ∞ extremal sign pattern of the directional kernel; norm 1.
    KernelSign {
        params: KernelParams,
        x: EvaluationPoint,
        z: Vec<f64>,
    },
    /// The L^p-duality extremal scale · |g|^{1/(p-1)} sign(g), normalized to
    /// unit L^p norm at construction.
    KernelPower {
        params: KernelParams,
        x: EvaluationPoint,
        z: Vec<f64>,
        p: f64,
        scale: f64,
    },
    /// Sampled data on a rectangular grid (n = 3).
    Tabulated(TabulatedData),
}

/// The integrand vector of the gradient:
/// k β x_n^{αβ-1} (α e_n - (e_xy, e_n) e_xy) / |y-x|^β, y = (y', 0).
pub fn kernel_gradient(params: &KernelParams, x: &EvaluationPoint, y_prime: &[f64]) -> Vec<f64> {
    let n = params.n as usize;
    debug_assert_eq!(y_prime.len(), n - 1);
    let mut d = vec![0.0; n];
    let mut rho2 = x.x_n * x.x_n;
    for i in 0..n - 1 {
        d[i] = y_prime[i] - x.x_prime[i];
        rho2 += d[i] * d[i];
    }
    d[n - 1] = -x.x_n;
    let rho = rho2.sqrt();
    let c = -x.x_n / rho; // (e_xy, e_n)
    let scale = params.k * params.beta * x.x_n.powf(params.alpha * params.beta - 1.0)
        / rho.powf(params.beta);
    let mut v = vec![0.0; n];
    for i in 0..n {
        v[i] = -c * (d[i] / rho) * scale;
    }
    v[n - 1] += params.alpha * scale;
    v
}

fn check_bump(width: f64, height: f64) -> Result<()> {
    if !(width > 0.0) || !width.is_finite() {
        return Err(Error::invalid(
            "width",
            format!("bump width must be > 0, got {width}"),
        ));
    }
    if !height.is_finite() {
        return Err(Error::invalid(
            "height",
            format!("bump height must be finite, got {height}"),
        ));
    }
    Ok(())
}

/// The directional kernel g_z(y') = (kernel_gradient(y'), z).
fn directional_kernel(
    params: &KernelParams,
    x: &EvaluationPoint,
    z: &[f64],
    y_prime: &[f64],
) -> f64 {
    let kg = kernel_gradient(params, x, y_prime);
    kg.iter().zip(z).map(|(a, b)| a * b).sum()
}

impl BoundaryFunction {
    pub fn eval(&self, y_prime: &[f64]) -> f64 {
        match self {
            BoundaryFunction::Constant(c) => *c,
            BoundaryFunction::GaussianBump {
                center,
                width,
                height,
            } => {
                let d2: f64 = y_prime
                    .iter()
                    .zip(center)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum();
                height * (-d2 / (2.0 * width * width)).exp()
            }
            BoundaryFunction::KernelSign { params, x, z } => {
                let g = directional_kernel(params, x, z, y_prime);
                if g > 0.0 {
                    1.0
                } else if g < 0.0 {
                    -1.0
                } else {
                    0.0
                }
            }
            BoundaryFunction::KernelPower {
                params,
                x,
                z,
                p,
                scale,
            } => {
                let g = directional_kernel(params, x, z, y_prime);
                scale * g.abs().powf(1.0 / (p - 1.0)) * g.signum()
            }
            BoundaryFunction::Tabulated(t) => t.interpolate(y_prime[0], y_prime[1]),
        }
    }

    /// ‖f‖_p where it is finite and known.
    pub fn norm(&self, p: &NormIndex) -> Result<f64> {
        match (self, p) {
            (BoundaryFunction::Constant(c), NormIndex::Infinity) => Ok(c.abs()),
            (BoundaryFunction::Constant(_), _) => Err(Error::invalid(
                "family",
                "constant boundary data has a finite norm only for p = inf",
            )),
            (BoundaryFunction::GaussianBump { width, height, .. }, NormIndex::Infinity) => {
                check_bump(*width, *height)?;
                Ok(height.abs())
            }
            (
                BoundaryFunction::GaussianBump {
                    width,
                    height,
                    center,
                },
                NormIndex::Finite(pv),
            ) => {
                check_bump(*width, *height)?;
                let m = center.len() as f64;
                Ok(height.abs() * (2.0 * PI * width * width / pv).powf(m / (2.0 * pv)))
            }
            (BoundaryFunction::KernelSign { .. }, NormIndex::Infinity) => Ok(1.0),
            (BoundaryFunction::KernelSign { .. }, _) => Err(Error::invalid(
                "family",
                "the sign-pattern family is normalized in L^inf only",
            )),
            (BoundaryFunction::KernelPower { p: built, .. }, NormIndex::Finite(pv))
                if built == pv =>
            {
                Ok(1.0)
            }
            (BoundaryFunction::KernelPower { .. }, _) => Err(Error::invalid(
                "family",
                "the duality-power family is normalized for the p it was built with",
            )),
            (BoundaryFunction::Tabulated(t), _) => Ok(t.norm(p)),
        }
    }

    /// A tangential unit axis the family is rotationally symmetric about,
    /// relative to x'; None when no such axis exists (tabulated data).
    fn axial_axis(&self, x_prime: &[f64]) -> Option<Vec<f64>> {
        let dim = x_prime.len();
        let unit_or_e1 = |v: Vec<f64>| -> Vec<f64> {
            let norm: f64 = v.iter().map(|a| a * a).sum::<f64>().sqrt();
            if norm > 1e-300 {
                v.iter().map(|a| a / norm).collect()
            } else {
                let mut e = vec![0.0; dim];
                e[0] = 1.0;
                e
            }
        };
        match self {
            BoundaryFunction::Constant(_) => {
                let mut e = vec![0.0; dim];
                e[0] = 1.0;
                Some(e)
            }
            BoundaryFunction::GaussianBump { center, .. } => Some(unit_or_e1(
                center.iter().zip(x_prime).map(|(c, x)| c - x).collect(),
            )),
            BoundaryFunction::KernelSign { z, .. } | BoundaryFunction::KernelPower { z, .. } => {
                Some(unit_or_e1(z[..dim].to_vec()))
            }
            BoundaryFunction::Tabulated(_) => None,
        }
    }
}

/// Truncated gradient plus a conservative tail bound.
///
/// The disk |y' - x'| ≤ R is integrated in polar coordinates centered at
/// x' (radially substituted r = x_n tan ξ so nodes concentrate where the
/// kernel peaks). n = 3 integrates the full circle; n ≥ 4 uses the
/// rotational symmetry axis of the data. Fails when the tail estimate is
/// not small against the integrated mass (1% guard).
pub fn numeric_gradient(
    params: &KernelParams,
    f: &BoundaryFunction,
    x: &EvaluationPoint,
    truncation_radius: f64,
    spec: &QuadratureSpec,
) -> Result<(Vec<f64>, f64)> {
    params_check(params, f, x)?;
    spec.validate()?;
    if !(truncation_radius > 0.0) {
        return Err(Error::invalid(
            "radius",
            "truncation radius must be positive",
        ));
    }

    let n = params.n as usize;
    let (grad, abs_mass) = if n == 3 {
        polar_gradient_full_circle(params, f, x, truncation_radius, spec)
    } else {
        polar_gradient_axial(params, f, x, truncation_radius, spec)?
    };

    let tail = tail_estimate(params, f, x, truncation_radius)?;
    if tail > 0.01 * (abs_mass + tail) {
        return Err(Error::numeric(format!(
            "tail estimate {tail:.3e} exceeds 1% of the integrated mass {abs_mass:.3e}; \
             increase the truncation radius"
        )));
    }
    Ok((grad, tail))
}

fn params_check(params: &KernelParams, f: &BoundaryFunction, x: &EvaluationPoint) -> Result<()> {
    // the gradient integral itself only needs beta > 0 and decay; the
    // weakest norm condition (p = 1 never restricts beta) keeps families
    // with compact support usable for any valid kernel
    validate(params, &NormIndex::Finite(1.0))?;
    x.check_dim(params.n)?;
    if matches!(f, BoundaryFunction::Tabulated(_)) && params.n != 3 {
        return Err(Error::invalid(
            "family",
            "tabulated data is supported for n = 3 only",
        ));
    }
    Ok(())
}

fn polar_gradient_full_circle(
    params: &KernelParams,
    f: &BoundaryFunction,
    x: &EvaluationPoint,
    radius: f64,
    spec: &QuadratureSpec,
) -> (Vec<f64>, f64) {
    let xi_max = (radius / x.x_n).atan();
    let r_panels = spec.theta_panels;
    let psi_panels = spec.phi_panels;

    // per-panel vector sums, accumulated pairwise per component
    let mut comp0 = Vec::with_capacity(r_panels);
    let mut comp1 = Vec::with_capacity(r_panels);
    let mut comp2 = Vec::with_capacity(r_panels);
    let mut mass = Vec::with_capacity(r_panels);

    let nodes = crate::quad::gl_nodes(0.0, xi_max, r_panels);
    for (xi, wxi) in nodes {
        let r = x.x_n * xi.tan();
        let jac = x.x_n / (xi.cos() * xi.cos()) * r; // dr/dξ · r^{n-2}, n = 3
        let mut s0 = 0.0;
        let mut s1 = 0.0;
        let mut s2 = 0.0;
        let mut sm = 0.0;
        for (psi, wpsi) in crate::quad::gl_nodes(0.0, 2.0 * PI, psi_panels) {
            let (sp, cp) = psi.sin_cos();
            let y = [x.x_prime[0] + r * cp, x.x_prime[1] + r * sp];
            let kg = kernel_gradient(params, x, &y);
            let fv = f.eval(&y);
            let w = wpsi * fv;
            s0 += kg[0] * w;
            s1 += kg[1] * w;
            s2 += kg[2] * w;
            sm += (kg[0] * kg[0] + kg[1] * kg[1] + kg[2] * kg[2]).sqrt() * fv.abs() * wpsi;
        }
        comp0.push(s0 * wxi * jac);
        comp1.push(s1 * wxi * jac);
        comp2.push(s2 * wxi * jac);
        mass.push(sm * wxi * jac);
    }
    (
        vec![
            pairwise_sum(&comp0),
            pairwise_sum(&comp1),
            pairwise_sum(&comp2),
        ],
        pairwise_sum(&mass),
    )
}

fn polar_gradient_axial(
    params: &KernelParams,
    f: &BoundaryFunction,
    x: &EvaluationPoint,
    radius: f64,
    spec: &QuadratureSpec,
) -> Result<(Vec<f64>, f64)> {
    let n = params.n as usize;
    let dim = n - 1;
    let axis = f
        .axial_axis(&x.x_prime)
        .ok_or_else(|| Error::invalid("family", "this family needs the n = 3 path"))?;
    // an orthonormal companion to the axis, for sampling off-axis angles
    let mut perp = vec![0.0; dim];
    let j = (0..dim)
        .min_by(|a, b| axis[*a].abs().partial_cmp(&axis[*b].abs()).unwrap())
        .unwrap();
    perp[j] = 1.0;
    let dot: f64 = perp.iter().zip(&axis).map(|(a, b)| a * b).sum();
    for i in 0..dim {
        perp[i] -= dot * axis[i];
    }
    let pn: f64 = perp.iter().map(|a| a * a).sum::<f64>().sqrt();
    for v in &mut perp {
        *v /= pn;
    }

    let f_at = |r: f64, w: f64| -> f64 {
        let s = (1.0 - w * w).max(0.0).sqrt();
        let y: Vec<f64> = (0..dim)
            .map(|i| x.x_prime[i] + r * (w * axis[i] + s * perp[i]))
            .collect();
        f.eval(&y)
    };

    let xi_max = (radius / x.x_n).atan();
    let kb = params.k * params.beta * x.x_n.powf(params.alpha * params.beta - 1.0);
    let w_sphere = omega((n - 2) as u32);
    // zonal reduction over S^{n-2}: integral of F(omega, u) equals
    // omega_{n-2} int_0^pi F(cos phi) sin^{n-3} phi dphi
    let phi_pow = n as i32 - 3;

    let mut normal = Vec::with_capacity(spec.theta_panels);
    let mut tangential = Vec::with_capacity(spec.theta_panels);
    let mut mass = Vec::with_capacity(spec.theta_panels);
    for (xi, wxi) in crate::quad::gl_nodes(0.0, xi_max, spec.theta_panels) {
        let r = x.x_n * xi.tan();
        let jac = x.x_n / (xi.cos() * xi.cos()) * r.powi(n as i32 - 2);
        let rho2 = r * r + x.x_n * x.x_n;
        let rho = rho2.sqrt();
        let kr = kb / rho.powf(params.beta);
        let k_norm = kr * (params.alpha - x.x_n * x.x_n / rho2);
        let k_tan = kr * (x.x_n * r / rho2);

        let a0 = w_sphere
            * gl_panels(
                &|phi: f64| {
                    let (sp, cp) = phi.sin_cos();
                    f_at(r, cp) * sp.powi(phi_pow)
                },
                0.0,
                PI,
                spec.phi_panels,
            );
        let a1 = w_sphere
            * gl_panels(
                &|phi: f64| {
                    let (sp, cp) = phi.sin_cos();
                    f_at(r, cp) * cp * sp.powi(phi_pow)
                },
                0.0,
                PI,
                spec.phi_panels,
            );
        let a_abs = w_sphere
            * gl_panels(
                &|phi: f64| {
                    let (sp, cp) = phi.sin_cos();
                    f_at(r, cp).abs() * sp.powi(phi_pow)
                },
                0.0,
                PI,
                spec.phi_panels,
            );

        normal.push(wxi * jac * k_norm * a0);
        tangential.push(wxi * jac * k_tan * a1);
        mass.push(wxi * jac * (k_norm * k_norm + k_tan * k_tan).sqrt() * a_abs);
    }

    let t = pairwise_sum(&tangential);
    let mut grad = vec![0.0; n];
    for i in 0..dim {
        grad[i] = t * axis[i];
    }
    grad[n - 1] = pairwise_sum(&normal);
    Ok((grad, pairwise_sum(&mass)))
}

/// Envelope bound on the neglected part |y' - x'| > R of the gradient
/// integral, via the Hölder pairing of the kernel tail with ‖f‖_p.
fn tail_estimate(
    params: &KernelParams,
    f: &BoundaryFunction,
    x: &EvaluationPoint,
    radius: f64,
) -> Result<f64> {
    // compactly supported samples have no tail at all
    if let BoundaryFunction::Tabulated(t) = f {
        let corners = [
            (t.y1_axis[0], t.y2_axis[0]),
            (t.y1_axis[0], *t.y2_axis.last().unwrap()),
            (*t.y1_axis.last().unwrap(), t.y2_axis[0]),
            (*t.y1_axis.last().unwrap(), *t.y2_axis.last().unwrap()),
        ];
        let max_r = corners
            .iter()
            .map(|(a, b)| ((a - x.x_prime[0]).powi(2) + (b - x.x_prime[1]).powi(2)).sqrt())
            .fold(0.0f64, f64::max);
        if max_r <= radius {
            return Ok(0.0);
        }
    }

    // the norm the data is actually measured in
    let p = match f {
        BoundaryFunction::Constant(_) | BoundaryFunction::KernelSign { .. } => NormIndex::Infinity,
        BoundaryFunction::KernelPower { p, .. } => NormIndex::Finite(*p),
        BoundaryFunction::GaussianBump { .. } | BoundaryFunction::Tabulated(_) => {
            NormIndex::Infinity
        }
    };
    // for bounded families, use the supremum beyond the truncation radius
    let sup_beyond = match f {
        BoundaryFunction::GaussianBump {
            center,
            width,
            height,
        } => {
            let d: f64 = center
                .iter()
                .zip(&x.x_prime)
                .map(|(c, xp)| (c - xp) * (c - xp))
                .sum::<f64>()
                .sqrt();
            let gap = (radius - d).max(0.0);
            height.abs() * (-gap * gap / (2.0 * width * width)).exp()
        }
        other => other.norm(&p).unwrap_or(1.0),
    };

    let n = params.n as f64;
    let (alpha, beta) = (params.alpha, params.beta);
    let c_max = x.x_n / (radius * radius + x.x_n * x.x_n).sqrt();
    let dir = |c2: f64| (alpha * alpha + (1.0 - 2.0 * alpha) * c2).max(0.0).sqrt();
    let m_dir = dir(0.0).max(dir(c_max * c_max));
    let prefix = params.k.abs() * beta * x.x_n.powf(alpha * beta - 1.0) * m_dir;

    let tail = match p {
        NormIndex::Infinity => {
            // integrate the envelope directly against the sup of |f|
            prefix * sup_beyond * omega(params.n - 1) * radius.powf(n - 1.0 - beta)
                / (beta - (n - 1.0))
        }
        NormIndex::Finite(1.0) => prefix * sup_beyond * radius.powf(-beta),
        NormIndex::Finite(pv) => {
            let q = pv / (pv - 1.0);
            let bq = beta * q;
            prefix
                * sup_beyond
                * (omega(params.n - 1) * radius.powf(n - 1.0 - bq) / (bq - (n - 1.0))).powf(1.0 / q)
        }
    };
    if !tail.is_finite() {
        return Err(Error::numeric(
            "tail envelope is not integrable at this radius",
        ));
    }
    Ok(tail)
}

/// Builds boundary data that approaches equality in the bound for the
/// direction z (unit, z_n > 0): the sign pattern at p = ∞, the duality
/// power at finite p > 1, and a narrow normalized bump at the kernel
/// maximizer for p = 1.
pub fn near_extremal_boundary(
    params: &KernelParams,
    p: &NormIndex,
    x: &EvaluationPoint,
    z: &[f64],
    spec: &QuadratureSpec,
) -> Result<BoundaryFunction> {
    validate(params, p)?;
    x.check_dim(params.n)?;
    let n = params.n as usize;
    if z.len() != n {
        return Err(Error::invalid(
            "z",
            format!("direction must have {} components", n),
        ));
    }
    let zn: f64 = z.iter().map(|a| a * a).sum::<f64>().sqrt();
    if zn < 1e-300 {
        return Err(Error::invalid("z", "direction must be nonzero"));
    }
    let z: Vec<f64> = z.iter().map(|a| a / zn).collect();
    if !(z[n - 1] > 0.0) {
        return Err(Error::invalid(
            "z",
            "direction must point into the half-space (z_n > 0)",
        ));
    }

    match p {
        NormIndex::Infinity => Ok(BoundaryFunction::KernelSign {
            params: *params,
            x: x.clone(),
            z,
        }),
        NormIndex::Finite(pv) if *pv == 1.0 => {
            let z_t: f64 = z[..n - 1].iter().map(|a| a * a).sum::<f64>().sqrt();
            let (_, theta_star, w_star) = oracle::p1_direction_argmax(params, z_t, z[n - 1]);
            let u: Vec<f64> = if z_t > 1e-300 {
                z[..n - 1].iter().map(|a| a / z_t).collect()
            } else {
                let mut e = vec![0.0; n - 1];
                e[0] = 1.0;
                e
            };
            let r_star = x.x_n * theta_star.tan();
            let center: Vec<f64> = (0..n - 1)
                .map(|i| x.x_prime[i] + r_star * w_star * u[i])
                .collect();
            let width = x.x_n / 100.0;
            let sign = directional_kernel(params, x, &z, &center).signum();
            let height =
                sign / ((2.0 * PI).powf((n as f64 - 1.0) / 2.0) * width.powf(n as f64 - 1.0));
            Ok(BoundaryFunction::GaussianBump {
                center,
                width,
                height,
            })
        }
        NormIndex::Finite(pv) => {
            // normalization from the directional constant: the q-norm of the
            // directional kernel over the boundary is the pointwise
            // directional coefficient at x
            let z_t: f64 = z[..n - 1].iter().map(|a| a * a).sum::<f64>().sqrt();
            let gamma = z_t / z[n - 1];
            let c_dir = oracle::directional_constant(params, p, gamma, spec)?;
            let exponent = xn_exponent(params, p)?;
            let coeff = c_dir / x.x_n.powf(exponent);
            let q = pv / (pv - 1.0);
            let m = coeff.powf(q); // ∫ |g|^q
            let scale = m.powf(-1.0 / pv);
            Ok(BoundaryFunction::KernelPower {
                params: *params,
                x: x.clone(),
                z,
                p: *pv,
                scale,
            })
        }
    }
}

/// Outcome of checking |∇u(x)| against the sharp bound for concrete data.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    /// 𝒞(x) · ‖f‖_p.
    pub bound: f64,
    /// |∇u(x)| from the truncated quadrature.
    pub measured: f64,
    /// measured / bound.
    pub ratio: f64,
    pub truncation_radius: f64,
    pub tail_estimate: f64,
}

/// Evaluates bound and gradient and assembles the report. The constant
/// comes from the closed form when the regime has one, otherwise from the
/// γ-supremum oracle. Default truncation radius: 200 x_n.
pub fn verify_bound(
    params: &KernelParams,
    p: &NormIndex,
    f: &BoundaryFunction,
    x: &EvaluationPoint,
    radius: Option<f64>,
    spec: &QuadratureSpec,
) -> Result<VerificationReport> {
    validate(params, p)?;
    x.check_dim(params.n)?;
    let norm = f.norm(p)?;
    if norm == 0.0 {
        return Err(Error::invalid(
            "family",
            "boundary data with zero norm has no bound ratio",
        ));
    }
    let constant = eval::sharp_constant(params, p, Method::Auto, FormulaVariant::Corrected, spec)?;
    let exponent = xn_exponent(params, p)?;
    let bound = constant.value / x.x_n.powf(exponent) * norm;

    let r = radius.unwrap_or(200.0 * x.x_n);
    let (grad, tail) = numeric_gradient(params, f, x, r, spec)?;
    let measured = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
    Ok(VerificationReport {
        bound,
        measured,
        ratio: measured / bound,
        truncation_radius: r,
        tail_estimate: tail,
    })
}
