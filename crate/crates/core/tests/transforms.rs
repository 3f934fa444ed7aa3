use std::f64::consts::PI;

use efimov_core::efimov_s0;
use efimov_core::oracle::{
    balance, check_coth_transform, check_exchange_transform, cosine_transform, exchange_kernel,
    factorization_check, log_coth_half, odd_extension_check, DEFAULT_TAIL_CUT,
};
use efimov_core::symbols::{certify_positivity, eval_g, eval_reg_symbol};
use proptest::prelude::*;

const SQRT_3: f64 = 1.732_050_807_568_877_2;

// the symbols are assembled from the two kernel transforms
#[test]
fn symbols_from_numerical_transforms() {
    for &s in &[0.1, 0.75, 1.5, 4.0] {
        let coth = cosine_transform(log_coth_half, s, DEFAULT_TAIL_CUT).unwrap();
        let exch = cosine_transform(exchange_kernel, s, DEFAULT_TAIL_CUT).unwrap();
        // even extension doubles the half-line transforms
        let g = 1.0 - 4.0 / (SQRT_3 * PI) * 2.0 * exch;
        assert!((g - eval_g(s)).abs() < 1e-10, "s = {s}");
        for &delta in &[0.5, 1.3] {
            let reg = g + 2.0 * delta / (SQRT_3 * PI) * 2.0 * coth;
            assert!((reg - eval_reg_symbol(s, delta)).abs() < 1e-10);
        }
    }
}

#[test]
fn transforms_on_the_acceptance_set() {
    for &s in &[0.25, 0.5, 1.0, 2.0, 5.0, 10.0] {
        assert!(check_coth_transform(s).unwrap().abs_err <= 1e-8);
        assert!(check_exchange_transform(s).unwrap().abs_err <= 1e-8);
    }
}

#[test]
fn balance_on_sinusoids() {
    for &s in &[0.4, 2.0] {
        for &x in &[0.5, 1.7] {
            let v = balance(|y| (s * y).sin(), x, 0.0, DEFAULT_TAIL_CUT).unwrap();
            assert!((v - eval_g(s) * (s * x).sin()).abs() < 1e-6);
            let v = balance(|y| (s * y).sin(), x, 1.0, DEFAULT_TAIL_CUT).unwrap();
            assert!((v - eval_reg_symbol(s, 1.0) * (s * x).sin()).abs() < 1e-6);
        }
    }
}

#[test]
fn efimov_sinusoid_balances() {
    let s0 = efimov_s0();
    for &x in &[0.3, 1.0, 4.0] {
        let v = balance(|y| (s0 * y).sin(), x, 0.0, DEFAULT_TAIL_CUT).unwrap();
        assert!(v.abs() < 1e-9, "x = {x}: {v}");
    }
}

#[test]
fn odd_extension_on_decaying_density() {
    let theta = |y: f64| y * (-y * y).exp();
    for &x in &[0.2, 1.0, 3.0] {
        let c = odd_extension_check(theta, x, 40.0).unwrap();
        assert!(c.defect() < 1e-10, "x = {x}: {c:?}");
        assert!(c.half_line_exchange.abs() > 1e-3);
    }
}

#[test]
fn one_sign_change_without_regularization() {
    let scan = certify_positivity(0.0, 50.0, 5000).unwrap();
    assert_eq!(scan.sign_changes.len(), 1);
    let [a, b] = scan.sign_changes[0];
    assert!(a < efimov_s0() && efimov_s0() <= b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn factorization_holds(x in -3.0f64..3.0, y in -3.0f64..3.0) {
        let scale = 4.0 * (x.sinh().powi(2) + y.sinh().powi(2)) + 3.0 + 4.0 * (x.sinh() * y.sinh()).abs();
        let (plus, minus) = factorization_check(x, y);
        prop_assert!(plus <= 1e-12 * scale && minus <= 1e-12 * scale);
    }
}
