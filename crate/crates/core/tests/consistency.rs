//! Cross-module invariants that do not belong to any single module's unit
//! tests: classification totality, oracle scaling, and the lower-bound
//! sanity of the γ-supremum.

use poisson_sharp::*;
use proptest::prelude::*;

fn params(n: u32, alpha: f64, beta: f64, k: f64) -> KernelParams {
    KernelParams { n, alpha, beta, k }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // classify_regime is total and deterministic on validated inputs
    #[test]
    fn classification_total_on_valid(
        n in 3u32..7,
        alpha in 0.0f64..3.0,
        excess in 0.001f64..5.0,
        psel in 0usize..5,
    ) {
        let p = [
            NormIndex::Finite(1.0),
            NormIndex::Finite(1.7),
            NormIndex::Finite(2.0),
            NormIndex::Finite(4.0),
            NormIndex::Infinity,
        ][psel];
        let beta = (n as f64 - 1.0) * p.p_ratio() + excess;
        let pr = params(n, alpha, beta, 1.0);
        prop_assume!(validate(&pr, &p).is_ok());
        let a = classify_regime(&pr, &p).unwrap();
        let b = classify_regime(&pr, &p).unwrap();
        prop_assert_eq!(a.branch, b.branch);
    }
}

#[test]
fn oracle_scales_linearly_in_k() {
    // one case per oracle path; the closed forms have their own proptest
    let spec = QuadratureSpec::default();
    let c = 2.5;

    let (_, a) = oracle::profile_p1(&params(3, 0.7, 3.0, 1.0)).unwrap();
    let (_, b) = oracle::profile_p1(&params(3, 0.7, 3.0, -c)).unwrap();
    assert!((b.value - c * a.value).abs() < 1e-12 * b.value);

    let a = oracle::objective_finite_p(&params(3, 0.5, 3.0, 1.0), 2.0, 0.4, &spec).unwrap();
    let b = oracle::objective_finite_p(&params(3, 0.5, 3.0, c), 2.0, 0.4, &spec).unwrap();
    assert!((b.value - c * a.value).abs() < 1e-10 * b.value);

    let spec_inf = QuadratureSpec::for_norm(&NormIndex::Infinity);
    let a = oracle::objective_pinf(&params(3, 0.5, 3.0, 1.0), 0.4, &spec_inf).unwrap();
    let b = oracle::objective_pinf(&params(3, 0.5, 3.0, c), 0.4, &spec_inf).unwrap();
    assert!((b.value - c * a.value).abs() < 1e-10 * b.value);
}

#[test]
fn supremum_dominates_normal_direction() {
    // sup over gamma is at least the gamma = 0 sample, within est_error
    let cases = [
        (params(3, 0.5, 3.0, 1.0), NormIndex::Finite(2.0)),
        (params(4, 1.2, 4.5, 1.0), NormIndex::Infinity),
        (params(3, 0.9, 2.6, 1.0), NormIndex::Infinity),
    ];
    for (pr, p) in cases {
        let spec = QuadratureSpec::for_norm(&p);
        let (sup, _) = oracle::supremum_over_gamma(&pr, &p, &spec).unwrap();
        let at0 = match p {
            NormIndex::Finite(pv) => oracle::objective_finite_p(&pr, pv, 0.0, &spec).unwrap(),
            NormIndex::Infinity => oracle::objective_pinf(&pr, 0.0, &spec).unwrap(),
        };
        assert!(
            sup.value >= at0.value - sup.est_error - spec.target_tol,
            "{pr:?}: sup {} below gamma=0 value {}",
            sup.value,
            at0.value
        );
    }
}

#[test]
fn constant_scaling_through_eval() {
    // downstream constants scale by |c| when k is scaled by c, regardless
    // of which method served the request
    let spec = QuadratureSpec::for_norm(&NormIndex::Infinity);
    let pr1 = params(3, 1.2, 3.0, 1.0); // numeric-only regime
    let pr2 = params(3, 1.2, 3.0, -3.0);
    let a = sharp_constant(
        &pr1,
        &NormIndex::Infinity,
        Method::Auto,
        FormulaVariant::Corrected,
        &spec,
    )
    .unwrap();
    let b = sharp_constant(
        &pr2,
        &NormIndex::Infinity,
        Method::Auto,
        FormulaVariant::Corrected,
        &spec,
    )
    .unwrap();
    assert!((b.value - 3.0 * a.value).abs() < 1e-6 * b.value);
}
