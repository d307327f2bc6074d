mod common;

use common::{c, int, t};
use wallcross::blocks::Curve;
use wallcross::genfun::{
    char_variety_mixed_hodge, compare_f_g, fmot, fmot_gamma, fmot_theta, fvir, higgs_poincare, is_palindromic,
    ph_polynomial, qmot, qvir, v_polynomial, value_at_one, Mode,
};
use wallcross::ring::LaurentPoly;
use wallcross::triples::{triple_dimension, triple_motive_eps};
use wallcross::Error;

fn curve(g: i64) -> Curve {
    Curve::new(g).unwrap()
}

fn poly(coeffs: &[i64]) -> LaurentPoly {
    coeffs.iter().enumerate().map(|(k, &n)| t(k as i64).scale(&int(n))).sum()
}

#[test]
fn motivic_series_first_coefficient() {
    for g in [2, 3] {
        let cv = curve(g);
        let f = fmot(&cv, 6, Mode::Direct).unwrap();
        assert_eq!(f.coeff(1), triple_motive_eps(&cv, 3 - 2 * g).unwrap());
        for k in (0..6).step_by(2) {
            assert!(f.coeff(k).is_zero());
        }
    }
}

#[test]
fn motivic_series_closed_form() {
    for g in [2, 3] {
        let cv = curve(g);
        let order = 10 * g as usize;
        assert_eq!(fmot(&cv, order, Mode::Direct).unwrap(), fmot(&cv, order, Mode::Closed).unwrap(), "g={g}");
    }
}

#[test]
fn correction_terms() {
    let cv = curve(2);
    assert_eq!(fmot_gamma(&cv, 6).coeff(1), cv.curve_class());
    assert!(fmot_gamma(&cv, 6).coeff(3).is_zero());
    let theta = fmot_theta(&cv, 8);
    assert!(!theta.coeff(3).is_zero());
    assert!(!theta.coeff(5).is_zero());
    assert!(theta.coeff(7).is_zero());
}

#[test]
fn virtual_series_matches_termwise_poincare() {
    for g in [2, 3] {
        let cv = curve(g);
        let order = 8 * g as usize;
        let f = fvir(&cv, order, Mode::Direct).unwrap();
        for k in (1..order).step_by(2) {
            let d = k as i64 + 2 - 2 * g;
            let m = triple_motive_eps(&cv, d).unwrap();
            assert_eq!(f.coeff(k), common::pvir_direct(&m, triple_dimension(&cv, d)), "g={g} k={k}");
        }
        assert_eq!(f, fvir(&cv, order, Mode::Closed).unwrap(), "g={g}");
    }
    assert_eq!(fvir(&curve(2), 3, Mode::Direct).unwrap().coeff(1), c(1) + t(1).scale(&int(4)) + t(2));
}

#[test]
fn higgs_poincare_polynomial() {
    let invariant = poly(&[1, 0, 1, 4, 2, 4, 2]);
    assert_eq!(higgs_poincare(&curve(2)).unwrap(), (c(1) + t(1)).pow(4) * invariant);
    for g in [2, 3] {
        let ph = ph_polynomial(&curve(g)).unwrap();
        assert_eq!(ph.order(), (8 * g - 5) as usize);
        assert_eq!(ph.coeff(0), c(1));
        assert!(is_palindromic(&ph, (8 * g - 6) as usize));
        let h = char_variety_mixed_hodge(&curve(g), (8 * g) as usize).unwrap();
        assert!(h.coeffs().iter().all(|p| p.is_integral() && p.is_nonnegative()));
    }
}

#[test]
fn cleared_series_are_palindromic_polynomials() {
    for g in [2, 3] {
        let cv = curve(g);
        let n = (8 * g - 4) as usize;
        let order = n + 6;
        let q = qvir(&cv, order).unwrap();
        assert_eq!(q.order(), n);
        assert!(q.coeffs().iter().enumerate().all(|(k, p)| k % 2 == 1 || p.is_zero()));
        assert!(is_palindromic(&q, n));
        let p = higgs_poincare(&cv).unwrap();
        assert_eq!(value_at_one(&q), (c(1) + t(2)) * &p);
        let v = v_polynomial(&cv, order).unwrap();
        assert!(is_palindromic(&v, n));
        assert_eq!(value_at_one(&v), (c(1) + t(2)) * p);
        assert!(!value_at_one(&qmot(&cv, order).unwrap()).is_zero());
    }
}

#[test]
fn cleared_series_need_enough_terms() {
    let cv = curve(2);
    assert!(matches!(qvir(&cv, 13), Err(Error::InvalidArgument(_))));
    assert!(matches!(qmot(&cv, 5), Err(Error::InvalidArgument(_))));
    assert!(matches!(v_polynomial(&cv, 13), Err(Error::InvalidArgument(_))));
    assert!(qvir(&cv, 14).is_ok());
}

#[test]
fn virtual_series_agrees_with_comparison_series() {
    for g in [2, 3] {
        assert!(compare_f_g(&curve(g), 10 * g as usize).unwrap().passed, "g={g}");
    }
}
