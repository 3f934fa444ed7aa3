use efimov_core::thomas::{
    boundary_coefficient, boundary_coefficient_swapped, coincidence_coefficient, pde_residual,
    pde_residual_scaled, thomas_psi, ThomasPoint,
};
use efimov_core::Error;
use proptest::prelude::*;

fn point() -> ThomasPoint {
    ThomasPoint::new([0.7, -0.2, 0.4], [-0.3, 0.9, 0.5], 1.1).unwrap()
}

#[test]
fn scaled_family_solves_rescaled_equation() {
    let pt = point();
    let base = pde_residual(&pt, 1e-3).unwrap();
    let scaled = pde_residual_scaled(&pt, 2.0, 1e-3).unwrap();
    assert!(base < 1e-4 && scaled < 1e-4);
    assert!(scaled / base > 0.1 && scaled / base < 10.0);
}

#[test]
fn second_order_in_step() {
    let pt = point();
    let ratio = pde_residual(&pt, 2e-3).unwrap() / pde_residual(&pt, 1e-3).unwrap();
    assert!((3.2..=4.8).contains(&ratio), "{ratio}");
}

#[test]
fn step_must_resolve_coincidence_planes() {
    let pt = ThomasPoint::new([0.01, 0.0, 0.0], [1.0, 0.0, 0.0], 1.0).unwrap();
    assert!(matches!(
        pde_residual(&pt, 0.01),
        Err(Error::StepTooLarge { .. })
    ));
}

#[test]
fn coefficient_on_both_planes() {
    let s = [0.4, -0.8, 0.3];
    let c = coincidence_coefficient(s, 0.9).unwrap();
    for b in [
        boundary_coefficient(s, 0.9, 1e-4).unwrap(),
        boundary_coefficient_swapped(s, 0.9, 1e-4).unwrap(),
    ] {
        assert!((b / c - 1.0).abs() < 1e-3);
    }
}

#[test]
fn coefficient_decays() {
    let near = coincidence_coefficient([1.0, 0.0, 0.0], 1.0).unwrap();
    let far = coincidence_coefficient([20.0, 0.0, 0.0], 1.0).unwrap();
    assert!(far < 1e-8 * near);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn symmetric_under_exchange(a in prop::array::uniform3(-2.0f64..2.0), b in prop::array::uniform3(-2.0f64..2.0), eta in 0.3f64..3.0) {
        let (Ok(p), Ok(q)) = (ThomasPoint::new(a, b, eta), ThomasPoint::new(b, a, eta)) else {
            return Ok(());
        };
        let (Ok(u), Ok(v)) = (thomas_psi(&p), thomas_psi(&q)) else {
            return Ok(());
        };
        prop_assert!((u - v).abs() <= 1e-13 * u.abs());
    }

    #[test]
    fn positive_away_from_planes(a in prop::array::uniform3(-2.0f64..2.0), b in prop::array::uniform3(-2.0f64..2.0)) {
        if let Ok(pt) = ThomasPoint::new(a, b, 1.0) {
            if pt.coincidence_distance() > 1e-6 {
                prop_assert!(thomas_psi(&pt).unwrap() > 0.0);
            }
        }
    }
}
