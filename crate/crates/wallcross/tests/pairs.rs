mod common;

use common::{c, int, t};
use wallcross::blocks::{proj_space, pvir, Curve};
use wallcross::pairs::{
    chamber_of_sigma, critical_values, pair_dimension, pair_flip, pair_genfun_motivic, pair_motive, pair_poincare,
    Sign,
};
use wallcross::Error;

fn curve(g: i64) -> Curve {
    Curve::new(g).unwrap()
}

#[test]
fn walls_follow_parity() {
    assert_eq!(critical_values(5), vec![1, 3, 5]);
    assert_eq!(critical_values(4), vec![2, 4]);
    assert!(critical_values(-3).is_empty());
}

#[test]
fn sigma_maps_to_chambers() {
    assert_eq!(chamber_of_sigma(5, &(int(1) / int(2))).unwrap(), 0);
    assert_eq!(chamber_of_sigma(5, &int(2)).unwrap(), 1);
    assert_eq!(chamber_of_sigma(5, &int(7)).unwrap(), 3);
    assert!(matches!(chamber_of_sigma(5, &int(3)), Err(Error::CriticalSigma)));
    assert!(chamber_of_sigma(5, &int(0)).is_err());
}

#[test]
fn flip_loci_examples() {
    let cv = curve(2);
    assert!(pair_flip(&cv, 3, 3, Sign::Minus).unwrap().is_zero());
    assert_eq!(pair_flip(&cv, 3, 3, Sign::Plus).unwrap(), cv.jacobian() * proj_space(3));
    assert_eq!(pair_flip(&cv, 3, 1, Sign::Minus).unwrap(), cv.curve_class() * cv.jacobian());
    assert!(matches!(pair_flip(&cv, 3, 2, Sign::Plus), Err(Error::NotAWall { .. })));
    assert!(matches!(pair_flip(&cv, 3, -1, Sign::Plus), Err(Error::NotAWall { .. })));
}

#[test]
fn motive_examples() {
    for g in [2, 3] {
        let cv = curve(g);
        for k in 0..3 {
            assert!(pair_motive(&cv, -3, k).unwrap().is_zero());
        }
        assert_eq!(pair_motive(&cv, 1, 0).unwrap(), cv.jacobian() * proj_space(g - 1));
        assert_eq!(pair_motive(&cv, 2, 0).unwrap(), cv.jacobian() * proj_space(g));
        assert!(pair_motive(&cv, 5, 3).unwrap().is_zero());
    }
}

#[test]
fn walk_matches_generating_function() {
    for g in [2, 3] {
        let cv = curve(g);
        let series = pair_genfun_motivic(&cv, 7).unwrap();
        assert_eq!(series.coeff(0), cv.jacobian() * proj_space(g - 1));
        for n in 0..7 {
            assert_eq!(series.coeff(n), pair_motive(&cv, 2 * n as i64 + 1, 0).unwrap(), "g={g} n={n}");
        }
    }
    assert_eq!(pair_genfun_motivic(&curve(2), 1).unwrap().order(), 1);
}

#[test]
fn poincare_polynomials() {
    let cv = curve(2);
    assert!(pair_poincare(&cv, 0).unwrap().is_zero());
    assert_eq!(pair_poincare(&cv, 1).unwrap(), (c(1) + t(1)).pow(4) * (c(1) + t(2)));
    for g in [2, 3] {
        let cv = curve(g);
        for d in 1..=13 {
            let dim = pair_dimension(&cv, d);
            let p = pair_poincare(&cv, d).unwrap();
            assert_eq!(p, pvir(&pair_motive(&cv, d, 0).unwrap(), dim).unwrap(), "g={g} d={d}");
            assert_eq!(p.max_degree(wallcross::ring::Var::T), Some(2 * dim as i32));
            assert!(p.is_nonnegative() && p.is_integral());
        }
    }
}

#[test]
fn every_chamber_is_effective() {
    for g in [2, 3] {
        let cv = curve(g);
        for d in 1..=9 {
            for k in 0..=critical_values(d).len() {
                let p = pvir(&pair_motive(&cv, d, k).unwrap(), pair_dimension(&cv, d)).unwrap();
                assert!(p.is_nonnegative() && p.is_integral(), "g={g} d={d} k={k}");
            }
        }
    }
}
