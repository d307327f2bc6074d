mod common;

use common::{c, int, l, t, x, y};
use proptest::prelude::*;
use wallcross::blocks::{grassmann2, proj_space, pvir, sym2, Curve};
use wallcross::ring::LaurentPoly;
use wallcross::Error;

fn curve(g: i64) -> Curve {
    Curve::new(g).unwrap()
}

#[test]
fn genus_below_two_is_rejected() {
    assert!(matches!(Curve::new(1), Err(Error::InvalidGenus(1))));
}

#[test]
fn zeta_matches_naive_convolution() {
    for g in [2, 3, 4] {
        let z = curve(g).zeta_series(12).unwrap();
        let naive = common::zeta(g as u32, 12);
        for (n, coeff) in naive.iter().enumerate() {
            assert_eq!(&z.coeff(n), coeff, "g={g} n={n}");
            assert_eq!(&curve(g).sym_power(n as i64), coeff, "g={g} n={n}");
        }
    }
}

#[test]
fn zeta_low_coefficients() {
    let z = curve(2).zeta_series(3).unwrap();
    assert_eq!(z.coeff(0), c(1));
    assert_eq!(z.coeff(1), c(1) - x().scale(&int(2)) - y().scale(&int(2)) + l(1));
}

#[test]
fn high_symmetric_powers_are_projective_bundles() {
    for g in [2, 3] {
        let cv = curve(g);
        for n in 2 * g - 1..2 * g + 4 {
            assert_eq!(cv.sym_power(n), cv.jacobian() * proj_space(n - g));
        }
    }
}

#[test]
fn symmetric_power_edge_cases() {
    let cv = curve(2);
    assert!(cv.sym_power(-1).is_zero());
    assert_eq!(cv.sym_power(0), c(1));
    assert_eq!(cv.sym_power(2), sym2(&cv.curve_class()).unwrap());
}

#[test]
fn jacobian_examples() {
    let j = curve(2).jacobian();
    assert_eq!(j, (c(1) - x()).pow(2) * (c(1) - y()).pow(2));
    for g in [2, 3, 4] {
        assert_eq!(pvir(&curve(g).jacobian(), g).unwrap(), (c(1) + t(1)).pow(2 * g as u32));
    }
}

#[test]
fn projective_spaces() {
    assert!(proj_space(-1).is_zero());
    assert_eq!(proj_space(0), c(1));
    assert_eq!(proj_space(2), c(1) + l(1) + l(2));
}

#[test]
fn grassmannians_match_schubert_cells() {
    assert_eq!(grassmann2(2).unwrap(), c(1));
    assert_eq!(grassmann2(3).unwrap(), c(1) + l(1) + l(2));
    assert_eq!(grassmann2(4).unwrap(), c(1) + l(1) + l(2).scale(&int(2)) + l(3) + l(4));
    for n in 2..12 {
        assert_eq!(grassmann2(n).unwrap(), common::grassmann2_cells(n), "n={n}");
    }
}

#[test]
fn symmetric_squares() {
    assert_eq!(sym2(&c(1)).unwrap(), c(1));
    for n in 0..=8 {
        assert_eq!(sym2(&proj_space(n)).unwrap(), grassmann2(n + 2).unwrap());
    }
    for g in [2, 3] {
        let z = common::zeta(g as u32, 3);
        assert_eq!(sym2(&curve(g).curve_class()).unwrap(), z[2]);
    }
}

#[test]
fn symmetric_square_needs_integral_input() {
    let half = LaurentPoly::constant(int(1) / int(2));
    assert!(matches!(sym2(&half), Err(Error::NonIntegral(_))));
}

#[test]
fn virtual_poincare_examples() {
    assert_eq!(pvir(&proj_space(1), 1).unwrap(), c(1) + t(2));
    assert_eq!(pvir(&l(5), 5).unwrap(), c(1));
    assert_eq!(pvir(&curve(2).curve_class(), 1).unwrap(), c(1) + t(1).scale(&int(4)) + t(2));
    assert!(matches!(pvir(&l(3), 2), Err(Error::NegativeExponent(_))));
}

#[test]
fn macdonald_formula() {
    for g in [2, 3] {
        assert!(curve(g).macdonald_check(21).unwrap().passed);
    }
    assert!(curve(2).macdonald_check(1).unwrap().passed);
}

#[test]
fn serre_duality_for_every_index() {
    for g in [2, 3, 4] {
        for k in 0..=2 * g - 2 {
            assert!(curve(g).serre_symmetric_check(k).unwrap().passed, "g={g} k={k}");
        }
    }
}

#[test]
fn top_symmetric_power_by_duality() {
    let cv = curve(2);
    let rhs = l(1) + cv.jacobian();
    assert_eq!(cv.sym_power(2), rhs);
}

proptest! {
    #[test]
    fn pvir_agrees_with_direct_walk(g in 2i64..5, n in 0i64..7) {
        let e = curve(g).sym_power(n);
        prop_assert_eq!(pvir(&e, n).unwrap(), common::pvir_direct(&e, n));
    }
}
