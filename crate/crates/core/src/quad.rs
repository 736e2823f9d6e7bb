//! Shared numerical kernels: composite Gauss–Legendre panels, pairwise
//! summation, and golden-section maximization.

#![allow(clippy::excessive_precision)]

/// 8-point Gauss–Legendre nodes and weights on [-1, 1].
const GL8_X: [f64; 8] = [
    -0.9602898564975363,
    -0.7966664774136267,
    -0.5255324099163290,
    -0.1834346424956498,
    0.1834346424956498,
    0.5255324099163290,
    0.7966664774136267,
    0.9602898564975363,
];
const GL8_W: [f64; 8] = [
    0.1012285362903763,
    0.2223810344533745,
    0.3137066458778873,
    0.3626837833783620,
    0.3626837833783620,
    0.3137066458778873,
    0.2223810344533745,
    0.1012285362903763,
];

/// Sums a slice pairwise (fixed index order) so the result does not depend
/// on how the work would be chunked.
pub(crate) fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
        }
    }
}

/// All (node, weight) pairs of the composite rule over [a, b], in order.
/// Weights include the panel half-width, so Σ w_i f(x_i) is the integral.
pub(crate) fn gl_nodes(a: f64, b: f64, panels: usize) -> Vec<(f64, f64)> {
    debug_assert!(panels >= 1);
    let mut out = Vec::with_capacity(panels * 8);
    if b <= a {
        return out;
    }
    let h = (b - a) / panels as f64;
    for i in 0..panels {
        let mid = a + (i as f64 + 0.5) * h;
        let half = 0.5 * h;
        for j in 0..8 {
            out.push((mid + half * GL8_X[j], half * GL8_W[j]));
        }
    }
    out
}

/// Composite 8-point Gauss–Legendre over [a, b] with `panels` equal panels.
pub(crate) fn gl_panels<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    debug_assert!(panels >= 1);
    if b <= a {
        return 0.0;
    }
    let h = (b - a) / panels as f64;
    let mut sums = Vec::with_capacity(panels);
    for i in 0..panels {
        let lo = a + i as f64 * h;
        let mid = lo + 0.5 * h;
        let half = 0.5 * h;
        let mut s = 0.0;
        for j in 0..8 {
            s += GL8_W[j] * f(mid + half * GL8_X[j]);
        }
        sums.push(s * half);
    }
    pairwise_sum(&sums)
}

/// Golden-section search for the maximum of `f` on [a, b].
///
/// Returns (x_best, f_best, probe_gap) where probe_gap is the absolute
/// difference of the two interior probes at exit, a cheap stagnation-width
/// estimate for error reporting.
pub(crate) fn golden_max<F: Fn(f64) -> f64>(
    f: &F,
    mut a: f64,
    mut b: f64,
    xtol: f64,
    max_iter: usize,
) -> (f64, f64, f64) {
    const INV_PHI: f64 = 0.6180339887498949;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    // track the best sample seen, including the original endpoints
    let (fa, fb) = (f(a), f(b));
    let mut best = if fa >= fb { (a, fa) } else { (b, fb) };
    for _ in 0..max_iter {
        if (b - a).abs() <= xtol {
            break;
        }
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    for (x, v) in [(x1, f1), (x2, f2)] {
        if v > best.1 {
            best = (x, v);
        }
    }
    (best.0, best.1, (f1 - f2).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_panels_polynomials_and_transcendentals() {
        let v = gl_panels(&|x| x * x * x * x, 0.0, 1.0, 4);
        assert!((v - 0.2).abs() < 1e-14);
        let v = gl_panels(&|x: f64| x.sin(), 0.0, std::f64::consts::PI, 8);
        assert!((v - 2.0).abs() < 1e-13);
    }

    #[test]
    fn golden_max_quadratic() {
        let (x, fx, _) = golden_max(&|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 1e-12, 200);
        assert!((x - 0.3).abs() < 1e-10);
        assert!(fx.abs() < 1e-18);
    }

    #[test]
    fn golden_max_boundary() {
        // monotone increasing: the maximum is the right endpoint
        let (x, _, _) = golden_max(&|x| x, 0.0, 1.0, 1e-12, 200);
        assert!((x - 1.0).abs() < 1e-9);
    }

    #[test]
    fn pairwise_matches_naive() {
        let xs: Vec<f64> = (0..1000).map(|i| (i as f64).sin()).collect();
        let naive: f64 = xs.iter().sum();
        assert!((pairwise_sum(&xs) - naive).abs() < 1e-9);
    }
}
