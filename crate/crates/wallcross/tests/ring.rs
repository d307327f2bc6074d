mod common;

use common::{c, int, l, t, x, y};
use proptest::prelude::*;
use wallcross::ring::{one_minus, parse_rational, series_expand, series_poly, LaurentPoly, QSeries, SeriesVar, Var};
use wallcross::Error;

const Q: SeriesVar = SeriesVar::Q;

#[test]
fn monomial_product() {
    assert_eq!(l(1) * l(1), l(2));
}

#[test]
fn add_zero_keeps_polynomial() {
    let p = (c(1) - x()) * (c(1) - y());
    assert_eq!(&p + &LaurentPoly::zero(), c(1) - x() - y() + l(1));
}

#[test]
fn zero_is_absorbing() {
    let p = (c(1) - x()) * (c(3) + y());
    assert!((p * LaurentPoly::zero()).is_zero());
}

#[test]
fn exact_division_examples() {
    let den = l(1) - c(1);
    assert_eq!((l(2) - c(1)).exact_div(&den).unwrap(), l(1) + c(1));
    assert_eq!((l(3) - c(1)).exact_div(&den).unwrap(), l(2) + l(1) + c(1));
    assert!(matches!((l(1) - c(1)).exact_div(&(l(1) + c(1))), Err(Error::NonExactDivision(_))));
}

#[test]
fn exact_division_with_t_laurent_terms() {
    let a = (t(-3) + x()) * (c(1) - t(2));
    assert_eq!(a.exact_div(&(c(1) - t(2))).unwrap(), t(-3) + x());
}

#[test]
fn geometric_series() {
    let s = series_expand(&QSeries::one(Q, 3), &[one_minus(Q, 3, 1, c(1))], 3).unwrap();
    assert_eq!(s.coeffs(), &[c(1), c(1), c(1)]);
}

#[test]
fn two_factor_expansion() {
    let s = series_expand(&QSeries::one(Q, 2), &[one_minus(Q, 2, 1, c(1)), one_minus(Q, 2, 1, l(1))], 2).unwrap();
    assert_eq!(s.coeffs(), &[c(1), c(1) + l(1)]);
}

#[test]
fn macdonald_coefficient_matches_naive_expansion() {
    let num = series_poly(Q, 3, &[(0, c(1)), (1, t(1))]).pow(4);
    let s = series_expand(&num, &[one_minus(Q, 3, 1, c(1)), one_minus(Q, 3, 1, t(2))], 3).unwrap();
    let naive = common::convolve(
        &common::binomial_poly(&t(1), 1, 4, 3),
        &common::convolve(&common::geometric(&c(1), 1, 3), &common::geometric(&t(2), 1, 3), 3),
        3,
    );
    assert_eq!(s.coeff(2), naive[2]);
    assert_eq!(s.coeff(2), c(1) + t(1).scale(&int(4)) + t(2).scale(&int(7)) + t(3).scale(&int(4)) + t(4));
}

#[test]
fn denominator_must_start_with_one() {
    let bad = series_poly(Q, 3, &[(0, c(2)), (1, c(1))]);
    assert!(matches!(series_expand(&QSeries::one(Q, 3), &[bad], 3), Err(Error::BadDenominator(_))));
}

#[test]
fn series_variables_must_match() {
    let a = QSeries::one(Q, 3);
    let b = QSeries::one(SeriesVar::U, 3);
    assert!(matches!(a.checked_add(&b), Err(Error::SeriesVarMismatch(_, _))));
}

#[test]
fn result_order_is_the_minimum() {
    let a = QSeries::one(Q, 3);
    let b = QSeries::one(Q, 5);
    assert_eq!(a.checked_mul(&b).unwrap().order(), 3);
}

#[test]
fn curve_class_at_minus_inverse_t() {
    let e = c(1) - x().scale(&int(2)) - y().scale(&int(2)) + l(1);
    let minus_inv = t(-1).scale(&int(-1));
    let s = e.substitute(&[(Var::X, minus_inv.clone()), (Var::Y, minus_inv)]).unwrap();
    assert_eq!(s, c(1) + t(-1).scale(&int(4)) + t(-2));
}

#[test]
fn substitution_examples() {
    let s = l(1).substitute(&[(Var::X, x() * x()), (Var::Y, y() * y())]).unwrap();
    assert_eq!(s, l(2));
    assert_eq!(c(1).substitute(&[(Var::X, t(-1))]).unwrap(), c(1));
}

#[test]
fn parity_filter_examples() {
    let s = series_poly(Q, 4, &[(0, c(1)), (1, c(1)), (2, c(1)), (3, c(1))]);
    assert_eq!(s.parity_filter(2, 1), series_poly(Q, 4, &[(1, c(1)), (3, c(1))]));
    let s6 = series_poly(Q, 6, &(0..6).map(|k| (k, c(1))).collect::<Vec<_>>());
    assert_eq!(s6.parity_filter(3, 0), series_poly(Q, 6, &[(0, c(1)), (3, c(1))]));
}

#[test]
fn rationals_parse() {
    assert_eq!(parse_rational("3").unwrap(), int(3));
    assert_eq!(parse_rational("-3/4").unwrap(), int(-3) / int(4));
    assert_eq!(parse_rational("0.5").unwrap(), int(1) / int(2));
    assert!(parse_rational("abc").is_err());
}

#[test]
fn display_is_canonical() {
    let p = (c(1) - x()) * (c(1) - y());
    assert_eq!(p.to_string(), "1 - y - x + x*y");
    assert_eq!(LaurentPoly::zero().to_string(), "0");
}

#[test]
fn polynomial_json_round_trip() {
    let p = (c(1) - x()).pow(3) * t(-2) + l(2).scale(&(int(5) / int(7)));
    assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
}

#[test]
fn series_json_round_trip() {
    let s = series_poly(Q, 4, &[(1, x()), (3, t(-1))]);
    assert_eq!(QSeries::from_json(&s.to_json()).unwrap(), s);
}

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((0i32..3, 0i32..3, -2i32..3), -4i64..5), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|((a, b, k), n)| LaurentPoly::monomial([a, b, k, 0], int(n)))
            .sum()
    })
}

fn small_series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec(small_poly(), 1..6).prop_map(|cs| {
        let n = cs.len();
        QSeries::from_coeffs(Q, n, cs)
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), d in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &d, &a * &(&b * &d));
        prop_assert_eq!(&a * &(&b + &d), &(&a * &b) + &(&a * &d));
        prop_assert!((&a - &a).is_zero());
        prop_assert!(a.terms().all(|(_, c)| !common::is_zero(c)));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn expansion_inverts_factor(s in small_series(), k in 1usize..3, cf in small_poly()) {
        let n = s.order();
        let f = one_minus(Q, n, k, cf);
        let back = series_expand(&s, std::slice::from_ref(&f), n).unwrap().checked_mul(&f).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn parity_filter_is_idempotent_and_splits(s in small_series()) {
        let odd = s.parity_filter(2, 1);
        prop_assert_eq!(odd.parity_filter(2, 1), odd.clone());
        prop_assert_eq!(odd.checked_add(&s.parity_filter(2, 0)).unwrap(), s);
    }
}
