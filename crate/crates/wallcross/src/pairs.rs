//! Rank-2 Bradlow pairs: flip loci, the chamber walk and generating functions.

use num_rational::BigRational;

use crate::blocks::{proj_space, pvir, Curve};
use crate::error::{Error, Result};
use crate::ring::{one_minus, rat, series_expand, LaurentPoly, QSeries, SeriesVar, Var};

/// Side of a wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// Critical values for degree `d`: the positive integers `<= d` with the parity of `d`.
pub fn critical_values(d: i64) -> Vec<i64> {
    let start = if d.rem_euclid(2) == 0 { 2 } else { 1 };
    (start..=d.max(0)).step_by(2).collect()
}

/// Accepts a positive wall with the parity of `d`.
///
/// Walls above `d` are accepted as well; every flip locus there is empty.
pub(crate) fn check_wall(d: i64, wall: i64) -> Result<()> {
    if wall <= 0 || (d - wall).rem_euclid(2) != 0 {
        return Err(Error::NotAWall { d, wall });
    }
    Ok(())
}

/// Chamber index of a stability parameter `sigma > 0`.
///
/// Chamber `k` is the open interval between the `k`-th and `(k+1)`-th critical
/// value, chamber 0 being `(0, first wall)`. Fails with
/// [`Error::CriticalSigma`] when `sigma` lies on a wall.
pub fn chamber_of_sigma(d: i64, sigma: &BigRational) -> Result<usize> {
    if *sigma <= rat(0) {
        return Err(Error::InvalidArgument(format!("sigma must be positive, got {sigma}")));
    }
    let walls = critical_values(d);
    if walls.iter().any(|w| rat(*w) == *sigma) {
        return Err(Error::CriticalSigma);
    }
    Ok(walls.iter().filter(|w| rat(**w) < *sigma).count())
}

/// Flip locus `[PW^{d,+}]` or `[PW^{d,-}]` at a wall.
///
/// `PW+ = [S^m][J][CP^(wall+g-2)]` and `PW- = [S^m][J][CP^(m-1)]` with
/// `m = (d - wall) / 2`.
pub fn pair_flip(curve: &Curve, d: i64, wall: i64, sign: Sign) -> Result<LaurentPoly> {
    check_wall(d, wall)?;
    let g = curve.genus();
    let m = (d - wall) / 2;
    let base = curve.sym_power(m) * curve.jacobian();
    Ok(match sign {
        Sign::Plus => base * proj_space(wall + g - 2),
        Sign::Minus => base * proj_space(m - 1),
    })
}

/// Motive of the pair moduli space of degree `d` in the given chamber.
///
/// Walks down from the empty chamber above the last wall using
/// `[M_{sigma-}] = [M_{sigma+}] + [PW+] - [PW-]`.
pub fn pair_motive(curve: &Curve, d: i64, chamber: usize) -> Result<LaurentPoly> {
    let walls = critical_values(d);
    let mut motive = LaurentPoly::zero();
    for k in (chamber + 1..=walls.len()).rev() {
        let w = walls[k - 1];
        motive += pair_flip(curve, d, w, Sign::Plus)?;
        motive -= pair_flip(curve, d, w, Sign::Minus)?;
    }
    Ok(motive)
}

/// Closed form `sum_n [M_eps^{2,2n+1}] u^n` truncated at `order`.
///
/// Evaluates `(L^g [J] Z(C,u) / (1 - L^2 u) - [J] Z(C, Lu) / (1 - u)) / (L - 1)`
/// with the division by `L - 1` done exactly on each coefficient.
pub fn pair_genfun_motivic(curve: &Curve, order: usize) -> Result<QSeries> {
    let u = SeriesVar::U;
    let l = LaurentPoly::lefschetz();
    let j = curve.jacobian();
    let z = curve.zeta_series(order)?;
    let z_l = z.compose_monomial(u, 1, &l, order);
    let first = series_expand(
        &z.scale(&(j.mul_l(curve.genus()))),
        &[one_minus(u, order, 1, LaurentPoly::lpow(2))],
        order,
    )?;
    let second = series_expand(&z_l.scale(&j), &[one_minus(u, order, 1, LaurentPoly::one())], order)?;
    let den = &l - LaurentPoly::one();
    first.checked_sub(&second)?.try_map_coeffs(|_, c| c.exact_div(&den))
}

/// Poincare polynomial of the pair moduli space in chamber 0.
///
/// `P = (1+t)^(2g) / (1-t^2) * sum_{2i < d} (t^(2i) - t^(2g-2+2d-4i)) P(S^i)`,
/// with the `1 - t^2` cleared by exact division. Zero for `d <= 0`.
///
/// For even `d` the index `i = d/2` is not a wall and is left out of the sum.
pub fn pair_poincare(curve: &Curve, d: i64) -> Result<LaurentPoly> {
    if d <= 0 {
        return Ok(LaurentPoly::zero());
    }
    let g = curve.genus();
    let mut sum = LaurentPoly::zero();
    for i in (0..).take_while(|i| 2 * i < d) {
        let weight = LaurentPoly::tpow(2 * i) - LaurentPoly::tpow(2 * g - 2 + 2 * d - 4 * i);
        sum += weight * pvir(&curve.sym_power(i), i)?;
    }
    let one = LaurentPoly::one();
    let t = LaurentPoly::var(Var::T);
    let numerator = (&one + &t).pow(2 * g as u32) * sum;
    numerator.exact_div(&(&one - &t * &t))
}

/// Dimension of the pair moduli space of degree `d`: `d + 2(g - 1)`.
pub fn pair_dimension(curve: &Curve, d: i64) -> i64 {
    d + 2 * (curve.genus() - 1)
}
