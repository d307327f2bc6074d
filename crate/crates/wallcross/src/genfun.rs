//! Generating functions over odd degrees and their closed forms, the mixed
//! Hodge polynomial of the rank-2 character variety, and the comparison
//! series `G(q, t)`.

use num_rational::BigRational;

use crate::blocks::{pvir, Curve};
use crate::error::{Error, Result};
use crate::pairs::pair_genfun_motivic;
use crate::parallel;
use crate::report::Report;
use crate::ring::{one_minus, rat, series_expand, series_poly, LaurentPoly, QSeries, SeriesVar, Var};
use crate::triples::{triple_dimension, triple_motive_eps};

/// How a generating function is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Sum of the individual motives.
    Direct,
    /// Closed-form expression expanded as a series.
    Closed,
}

const Q: SeriesVar = SeriesVar::Q;

/// Odd degrees `d = 2n + 1` contributing below `order`, paired with their `q` exponent `2n + 2g - 1`.
fn odd_degrees(curve: &Curve, order: usize) -> Vec<(usize, i64)> {
    let g = curve.genus();
    (1 - g..)
        .map(|n| ((2 * n + 2 * g - 1) as usize, 2 * n + 1))
        .take_while(|(k, _)| *k < order)
        .collect()
}

/// `F^mot(q) = sum_{n >= 1-g} [M_eps^{2,2n+1}] q^(2n+2g-1)` truncated at `order`.
pub fn fmot(curve: &Curve, order: usize, mode: Mode) -> Result<QSeries> {
    match mode {
        Mode::Direct => {
            let terms = parallel::map(odd_degrees(curve, order), |(k, d)| {
                triple_motive_eps(curve, d).map(|m| (k, m))
            })
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
            Ok(series_poly(Q, order, &terms))
        }
        Mode::Closed => fmot_closed(curve, order),
    }
}

/// Closed form: the pair generating function, two zeta-times-`Gamma` terms and `Theta`.
fn fmot_closed(curve: &Curve, order: usize) -> Result<QSeries> {
    let g = curve.genus();
    let gi = g as usize;
    let zeta = curve.zeta_series(order)?;
    let pairs = pair_genfun_motivic(curve, order)?;
    let mut terms: Vec<(usize, LaurentPoly)> = Vec::new();

    // L^(4g-3) q^(2g-1) sum_n [M_eps^{2,2n+1}] q^(2n)
    for (n, c) in pairs.coeffs().iter().enumerate() {
        terms.push((2 * gi - 1 + 2 * n, c.mul_l(4 * g - 3)));
    }
    // L^(5g-4) q^(4g-4) Z(C, L q^2) Gamma(L^-1 q^-1) and L^(4g-3) Z(C, q^2) Gamma(q)
    for j in 0..=(g - 2) {
        let odd = curve.sym_power(2 * j + 1);
        for (i, s) in zeta.coeffs().iter().enumerate() {
            let prod = &odd * s;
            let i = i as i64;
            terms.push(((4 * g - 5 - 2 * j + 2 * i) as usize, prod.mul_l(5 * g - 5 - 2 * j + i)));
            terms.push(((2 * j + 1 + 2 * i) as usize, prod.mul_l(4 * g - 3)));
        }
    }
    series_poly(Q, order, &terms).checked_add(&fmot_theta(curve, order))
}

/// `F^vir(q, t) = sum_{n >= 1-g} P^vir(M_eps^{2,2n+1}, t) q^(2n+2g-1)` truncated at `order`.
///
/// The closed mode divides [`fvir_cleared_closed`] by `2(1 - t^2)` exactly.
pub fn fvir(curve: &Curve, order: usize, mode: Mode) -> Result<QSeries> {
    match mode {
        Mode::Direct => {
            let terms = parallel::map(odd_degrees(curve, order), |(k, d)| {
                let m = triple_motive_eps(curve, d)?;
                pvir(&m, triple_dimension(curve, d)).map(|p| (k, p))
            })
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
            Ok(series_poly(Q, order, &terms))
        }
        Mode::Closed => {
            let cleared = fvir_cleared_closed(curve, order)?;
            let factor = clearing_factor();
            cleared.try_map_coeffs(|_, c| c.exact_div(&factor))
        }
    }
}

/// The pure-`t` factor `2(1 - t^2)` cleared before closed-form comparisons.
pub fn clearing_factor() -> LaurentPoly {
    LaurentPoly::int(2) - LaurentPoly::tpow(2).scale(&rat(2))
}

fn t(k: i64) -> LaurentPoly {
    LaurentPoly::tpow(k)
}

/// `(1 + c q^k)^n` as a series.
fn binom_series(order: usize, k: usize, c: LaurentPoly, n: u32) -> QSeries {
    series_poly(Q, order, &[(0, LaurentPoly::one()), (k, c)]).pow(n)
}

/// `1 / prod (1 - c_i q^(k_i))` applied to `num`.
fn divide(num: &QSeries, factors: &[(usize, LaurentPoly)], order: usize) -> Result<QSeries> {
    let fs: Vec<QSeries> = factors.iter().map(|(k, c)| one_minus(Q, order, *k, c.clone())).collect();
    series_expand(num, &fs, order)
}

/// `(1+qt)^(2g) / ((1-qt^2)(1-q)) + sign * (1-qt)^(2g) / ((1+qt^2)(1+q))`.
fn odd_bracket(curve: &Curve, order: usize, sign: i64) -> Result<QSeries> {
    let n = 2 * curve.genus() as u32;
    let plus = divide(&binom_series(order, 1, t(1), n), &[(1, t(2)), (1, LaurentPoly::one())], order)?;
    let minus = divide(&binom_series(order, 1, -t(1), n), &[(1, -t(2)), (1, LaurentPoly::int(-1))], order)?;
    plus.checked_add(&minus.scale(&LaurentPoly::int(sign)))
}

/// Closed form of `2(1 - t^2) F^vir(q, t)`, which has no pure-`t` denominators.
pub fn fvir_cleared_closed(curve: &Curve, order: usize) -> Result<QSeries> {
    let g = curve.genus();
    let gi = g as usize;
    let n2g = 2 * g as u32;
    let one = LaurentPoly::one();
    let one_minus_t2 = &one - t(2);
    let p1t = (&one + t(1)).pow(n2g);
    let a = binom_series(order, 2, t(3), n2g);
    let b = binom_series(order, 2, t(1), n2g);
    let bracket = odd_bracket(curve, order, -1)?;

    let den3 = [(2, one.clone()), (2, t(2)), (2, t(4))];
    let t1 = divide(&a, &den3, order)?.scale(&p1t.scale(&rat(2))).shift(2 * gi - 1);
    let t2 = divide(&b, &den3, order)?
        .scale(&(&p1t * t(2 * g)).scale(&rat(-2)))
        .shift(2 * gi - 1);
    let b_part = divide(&b, &[(2, one.clone()), (2, t(2))], order)?;
    let t3 = b_part
        .checked_mul(&bracket)?
        .scale(&(&one_minus_t2 * t(4 * g - 4)))
        .shift(2 * gi - 2);
    let inner = divide(&QSeries::monomial(Q, order, 1, t(4 - 2 * g)), &[(2, t(4))], order)?
        .checked_sub(&divide(&QSeries::monomial(Q, order, 1, one.clone()), &[(2, one.clone())], order)?)?;
    let t4 = b_part
        .checked_mul(&inner)?
        .scale(&(&p1t * t(4 * g - 4)).scale(&rat(2)))
        .shift(2 * gi - 2);
    let a_part = divide(&a, &[(2, t(2)), (2, t(4))], order)?;
    let t5 = a_part.checked_mul(&bracket)?.scale(&one_minus_t2);
    let inner6 = divide(&QSeries::one(Q, order), &[(2, one.clone())], order)?
        .checked_sub(&divide(&QSeries::monomial(Q, order, 0, t(2 * g)), &[(2, t(4))], order)?)?;
    let t6 = a_part.checked_mul(&inner6)?.scale(&p1t.scale(&rat(-2))).shift(2 * gi - 1);
    let t7 = theta_virtual(curve, order)?.scale(&(one_minus_t2.scale(&rat(2)) * t(8 * g - 6)));

    let mut acc = t1;
    for s in [t2, t3, t4, t5, t6, t7] {
        acc = acc.checked_add(&s)?;
    }
    Ok(acc)
}

/// `E(Theta(u), -1/t, -1/t)` at `u = q t^2`.
fn theta_virtual(curve: &Curve, order: usize) -> Result<QSeries> {
    let theta = fmot_theta(curve, order);
    let minus_inv = LaurentPoly::tpow(-1).scale(&rat(-1));
    theta.try_map_coeffs(|k, c| {
        let e = c.substitute(&[(Var::X, minus_inv.clone()), (Var::Y, minus_inv.clone())])?;
        Ok(e * t(2 * k as i64))
    })
}

/// `Theta(q)` alone, as a series truncated at `order`.
pub fn fmot_theta(curve: &Curve, order: usize) -> QSeries {
    let g = curve.genus();
    let j = curve.jacobian();
    let mut terms = Vec::new();
    for n in 0..=(2 * g - 3) {
        let mut c = LaurentPoly::zero();
        for i in 0..=n {
            let si = curve.sym_power(i);
            let d2 = 2 * n + 1 - i;
            c += (&si * &curve.sym_power(d2)).mul_l(4 * g - 3) * (LaurentPoly::lefschetz() - LaurentPoly::one());
            c -= (&si * &j) * (LaurentPoly::lpow(3 * g - 2 + d2) - LaurentPoly::lpow(4 * g - 3));
        }
        terms.push(((2 * n + 2 * g - 1) as usize, c));
    }
    series_poly(Q, order, &terms)
}

/// `Gamma(q) = sum_{j=0}^{g-2} [S^(2j+1)] q^(2j+1)`.
pub fn fmot_gamma(curve: &Curve, order: usize) -> QSeries {
    let terms: Vec<_> = (0..=curve.genus() - 2)
        .map(|j| ((2 * j + 1) as usize, curve.sym_power(2 * j + 1)))
        .collect();
    series_poly(Q, order, &terms)
}

/// Multiplies by `(1 - q^2)(1 - c q^2)` and checks that nothing survives above `max_degree`.
fn clear_two_poles(series: &QSeries, c: LaurentPoly, max_degree: usize) -> Result<QSeries> {
    let order = series.order();
    let f = one_minus(Q, order, 2, LaurentPoly::one()).checked_mul(&one_minus(Q, order, 2, c))?;
    let product = series.checked_mul(&f)?;
    for k in max_degree + 1..order {
        if !product.coeff(k).is_zero() {
            return Err(Error::TruncationNotZero(k));
        }
    }
    Ok(product.truncate(max_degree + 1))
}

/// `Q^vir(q, t) = (1 - q^2)(1 - q^2 t^4) F^vir(q, t)`, a polynomial of `q`-degree at most `8g - 5`.
///
/// Requires `order > 8g - 3` so that the vanishing beyond `8g - 5` is actually tested.
pub fn qvir(curve: &Curve, order: usize) -> Result<QSeries> {
    let top = (8 * curve.genus() - 5) as usize;
    if order <= top + 2 {
        return Err(Error::InvalidArgument(format!("order must exceed {}", top + 2)));
    }
    clear_two_poles(&fvir(curve, order, Mode::Direct)?, t(4), top)
}

/// `Q^mot(q) = (1 - q^2)(1 - q^2 L^2) F^mot(q)`, a polynomial of `q`-degree at most `8g - 5`.
pub fn qmot(curve: &Curve, order: usize) -> Result<QSeries> {
    let top = (8 * curve.genus() - 5) as usize;
    if order <= top + 2 {
        return Err(Error::InvalidArgument(format!("order must exceed {}", top + 2)));
    }
    clear_two_poles(&fmot(curve, order, Mode::Direct)?, LaurentPoly::lpow(2), top)
}

/// Sum of all coefficients, the value of a polynomial series at `q = 1`.
pub fn value_at_one(series: &QSeries) -> LaurentPoly {
    series.coeffs().iter().cloned().sum()
}

/// Checks `a_k = t^(2k - n) a_(n-k)` for `0 <= k <= n`, the coefficient form of
/// `A(q, t) = (qt)^n A(q^-1 t^-2, t)`.
pub fn is_palindromic(series: &QSeries, n: usize) -> bool {
    (0..=n).all(|k| series.coeff(k) == series.coeff(n - k) * t(2 * k as i64 - n as i64))
}

/// `H(M_B^2, q, t)`, the mixed Hodge polynomial of the rank-2 twisted character variety.
///
/// Expanded to `order` and checked to have non-negative integer coefficients
/// vanishing above `q`-degree `8g - 6`.
pub fn char_variety_mixed_hodge(curve: &Curve, order: usize) -> Result<QSeries> {
    let g = curve.genus();
    let gi = g as usize;
    let n2g = 2 * g as u32;
    let one = LaurentPoly::one();
    let c = binom_series(order, 1, t(1), n2g);
    let a = binom_series(order, 2, t(3), n2g);
    let b = binom_series(order, 2, t(1), n2g);
    let first = divide(&a, &[(2, t(2)), (2, t(4))], order)?.checked_add(
        &divide(&b, &[(2, one.clone()), (2, t(2))], order)?
            .scale(&t(4 * g - 4))
            .shift(2 * gi - 2),
    )?;
    let second = c
        .checked_mul(&odd_bracket(curve, order, 1)?)?
        .scale(&t(4 * g - 4).scale(&BigRational::new((-1).into(), 2.into())))
        .shift(2 * gi - 2);
    let h = c.checked_mul(&first)?.checked_add(&second)?;
    let top = (8 * g - 6) as usize;
    for (k, coeff) in h.coeffs().iter().enumerate() {
        if !coeff.is_integral() {
            return Err(Error::NonIntegral(format!("q^{k}: {coeff}")));
        }
        if !coeff.is_nonnegative() {
            return Err(Error::NegativeCoefficient(format!("q^{k}: {coeff}")));
        }
        if k > top && !coeff.is_zero() {
            return Err(Error::TruncationNotZero(k));
        }
    }
    Ok(h)
}

/// `PH(M^{2,1}, q, t)` as the polynomial of `q`-degree `8g - 6`, verified against a longer expansion.
pub fn ph_polynomial(curve: &Curve) -> Result<QSeries> {
    let top = (8 * curve.genus() - 6) as usize;
    Ok(char_variety_mixed_hodge(curve, top + 6)?.truncate(top + 1))
}

/// `P(M^{2,1}, t) = PH(M^{2,1}, 1, t)`.
pub fn higgs_poincare(curve: &Curve) -> Result<LaurentPoly> {
    Ok(value_at_one(&ph_polynomial(curve)?))
}

/// `G(q, t) = odd_q(PH(M^{2,1}, q, t) / ((1 - q)(1 - q t^2)))` truncated at `order`.
pub fn g_series(curve: &Curve, order: usize) -> Result<QSeries> {
    let ph = QSeries::from_coeffs(Q, order, ph_polynomial(curve)?.into_coeffs());
    Ok(divide(&ph, &[(1, LaurentPoly::one()), (1, t(2))], order)?.parity_filter(2, 1))
}

/// `V(q, t) = (1 - q^2)(1 - q^2 t^4) G(q, t)`, a polynomial of `q`-degree at most `8g - 5`.
pub fn v_polynomial(curve: &Curve, order: usize) -> Result<QSeries> {
    let top = (8 * curve.genus() - 5) as usize;
    if order <= top + 2 {
        return Err(Error::InvalidArgument(format!("order must exceed {}", top + 2)));
    }
    clear_two_poles(&g_series(curve, order)?, t(4), top)
}

/// Compares `F^vir` with `G` on the ranges where they must agree.
///
/// Asserts equality at every odd `q`-degree `<= 2g - 3` and at every odd
/// degree in `[6g - 5, order)`. Differences in between are reported as
/// information only.
pub fn compare_f_g(curve: &Curve, order: usize) -> Result<Report> {
    let g = curve.genus() as usize;
    let name = format!("F^vir vs G g={g} order={order}");
    let f = fvir(curve, order, Mode::Direct)?;
    let gs = g_series(curve, order)?;
    let mut middle = Vec::new();
    for k in (1..order).step_by(2) {
        let diff = f.coeff(k) - gs.coeff(k);
        let asserted = k + 3 <= 2 * g || k + 5 >= 6 * g;
        if asserted && !diff.is_zero() {
            return Ok(Report::fail(
                name,
                format!("q^{k}: F^vir {} vs G {}", f.coeff(k), gs.coeff(k)),
            ));
        }
        if !asserted {
            middle.push(format!("q^{k}: {diff}"));
        }
    }
    Ok(Report::pass_with(name, format!("middle range F^vir - G: {}", middle.join("; "))))
}
