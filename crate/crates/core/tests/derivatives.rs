//! Analytic parameter-shift derivatives against central differences of the
//! base evaluators: the disagreement must shrink at the stencils' formal
//! order 2 when the step halves.

use selfsim_core::hyperfun::{
    eval_kdf, eval_pfq, eval_psi2, kdf_partial, pfq_derivative, psi2_partial, EvalOptions,
    KdfSpec, PfqSpec, Psi2Spec,
};

fn opts() -> EvalOptions {
    EvalOptions::default()
}

const ORDER_BAND: (f64, f64) = (1.5, 2.5);

/// log₂ of the error ratio between steps h and h/2 of the symmetric
/// difference against the analytic derivative.
fn observed_order(f: impl Fn(f64) -> f64, analytic: f64, x: f64, h: f64) -> f64 {
    let fd = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    let e1 = (fd(h) - analytic).abs();
    let e2 = (fd(h / 2.0) - analytic).abs();
    (e1 / e2).log2()
}

fn assert_band(order: f64, what: &str) {
    assert!(
        (ORDER_BAND.0..=ORDER_BAND.1).contains(&order),
        "{what}: observed order {order}"
    );
}

#[test]
fn kummer_derivative_order() {
    let spec = PfqSpec::f11(0.5, 0.8).unwrap();
    for x in [-3.0, -1.2, -0.4, 0.6, 2.0] {
        let analytic = pfq_derivative(&spec, x, 1, &opts()).unwrap().value;
        let f = |v: f64| eval_pfq(&spec, v, &opts()).unwrap().value;
        assert_band(observed_order(f, analytic, x, 0.05), &format!("1F1 at {x}"));
    }
}

#[test]
fn clausen_derivative_order() {
    let spec = PfqSpec::f32([1.0, 4.0 / 3.0, 5.0 / 3.0], [0.8, 0.6]).unwrap();
    for x in [-0.8, -0.55, -0.3, 0.2, 0.45] {
        let analytic = pfq_derivative(&spec, x, 1, &opts()).unwrap().value;
        let f = |v: f64| eval_pfq(&spec, v, &opts()).unwrap().value;
        assert_band(observed_order(f, analytic, x, 0.02), &format!("3F2 at {x}"));
    }
}

#[test]
fn one_f_three_derivative_order() {
    let spec = PfqSpec::f13(1.0, [0.8, 0.6, 0.4]).unwrap();
    for x in [-4.0, -2.0, -1.0, 0.8, 2.5] {
        let analytic = pfq_derivative(&spec, x, 1, &opts()).unwrap().value;
        let f = |v: f64| eval_pfq(&spec, v, &opts()).unwrap().value;
        assert_band(observed_order(f, analytic, x, 0.05), &format!("1F3 at {x}"));
    }
}

#[test]
fn psi2_partial_order() {
    let spec = Psi2Spec::new(0.5, 0.8, 0.9).unwrap();
    for (x, y) in [
        (-1.5, -0.7),
        (-0.8, -0.3),
        (-0.4, -1.1),
        (0.5, 0.4),
        (-2.0, 0.6),
    ] {
        let analytic = psi2_partial(&spec, x, y, 1, 0, &opts()).unwrap().value;
        let f = |v: f64| eval_psi2(&spec, v, y, &opts()).unwrap().value;
        assert_band(
            observed_order(f, analytic, x, 0.05),
            &format!("Psi2 at ({x}, {y})"),
        );
        let analytic_y = psi2_partial(&spec, x, y, 0, 1, &opts()).unwrap().value;
        let g = |v: f64| eval_psi2(&spec, x, v, &opts()).unwrap().value;
        assert_band(
            observed_order(g, analytic_y, y, 0.05),
            &format!("Psi2 y at ({x}, {y})"),
        );
    }
}

#[test]
fn kdf_partial_order() {
    let spec = KdfSpec::new(
        vec![0.75],
        vec![],
        vec![],
        vec![],
        vec![0.9, 0.7],
        vec![1.1, 1.3],
    )
    .unwrap();
    for (x, y) in [
        (-1.5, -0.7),
        (-0.8, -0.3),
        (-0.4, -1.1),
        (0.5, 0.4),
        (-2.0, 0.6),
    ] {
        let analytic = kdf_partial(&spec, x, y, 1, 0, &opts()).unwrap().value;
        let f = |v: f64| eval_kdf(&spec, v, y, &opts()).unwrap().value;
        assert_band(
            observed_order(f, analytic, x, 0.05),
            &format!("KdF at ({x}, {y})"),
        );
    }
}

#[test]
fn kdf_third_partial_against_wide_stencil() {
    // ∂³/∂x³: analytic shift rule vs the 5-point central stencil of the
    // base evaluator, agreement improving at O(h²).
    let spec = KdfSpec::new(
        vec![0.75],
        vec![],
        vec![],
        vec![],
        vec![0.9, 0.7],
        vec![1.1, 1.3],
    )
    .unwrap();
    let (x, y) = (-0.6, -0.4);
    let analytic = kdf_partial(&spec, x, y, 3, 0, &opts()).unwrap().value;
    let f = |v: f64| eval_kdf(&spec, v, y, &opts()).unwrap().value;
    let third = |h: f64| {
        (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) / (2.0 * h.powi(3))
    };
    let e1 = (third(0.2) - analytic).abs();
    let e2 = (third(0.1) - analytic).abs();
    let order = (e1 / e2).log2();
    assert!(
        (1.5..=2.5).contains(&order),
        "third-partial order {order} (errors {e1:e}, {e2:e})"
    );
}
