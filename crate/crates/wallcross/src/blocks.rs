//! E-polynomials of the curve-derived building blocks.
//!
//! Every class is realized by its E-polynomial in `x, y`, with the Lefschetz
//! class `L = xy`. Symmetric powers and projective spaces of negative index
//! are the zero polynomial, so formulas vanish exactly where the underlying
//! spaces are empty.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::report::Report;
use crate::ring::{one_minus, rat, series_expand, series_poly, LaurentPoly, QSeries, SeriesVar, Var};

/// A smooth projective curve of genus `g >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Curve {
    g: i64,
}

/// Binomial coefficient `C(n, k)` as a rational, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigRational {
    if k < 0 || n < 0 || k > n {
        return BigRational::zero();
    }
    let mut acc = BigRational::one();
    for i in 0..k {
        acc = acc * rat(n - i) / rat(i + 1);
    }
    acc
}

/// `[CP^n] = 1 + L + ... + L^n`, zero for `n < 0`.
pub fn proj_space(n: i64) -> LaurentPoly {
    (0..=n).map(LaurentPoly::lpow).sum()
}

/// `[Gr(2, n)]` as the Gaussian binomial `(L^n - 1)(L^(n-1) - 1) / ((L^2 - 1)(L - 1))`.
///
/// Returns zero for `n < 2`.
pub fn grassmann2(n: i64) -> Result<LaurentPoly> {
    if n < 2 {
        return Ok(LaurentPoly::zero());
    }
    let one = LaurentPoly::one();
    let num = (LaurentPoly::lpow(n) - &one) * (LaurentPoly::lpow(n - 1) - &one);
    let den = (LaurentPoly::lpow(2) - &one) * (LaurentPoly::lpow(1) - &one);
    num.exact_div(&den)
}

/// Class of the symmetric square of a space with E-polynomial `e`.
///
/// Uses `(e(x, y)^2 + e(x^2, y^2)) / 2`. Fails with [`Error::NonIntegral`] if
/// the result has a fractional coefficient.
pub fn sym2(e: &LaurentPoly) -> Result<LaurentPoly> {
    if !e.only_vars(&[Var::X, Var::Y]) {
        return Err(Error::InvalidArgument(format!("sym2 expects a polynomial in x, y: {e}")));
    }
    let squared = e.map_exponents(|k| [2 * k[0], 2 * k[1], k[2], k[3]]);
    let out = (e * e + squared).scale(&BigRational::new(1.into(), 2.into()));
    if !out.is_integral() {
        return Err(Error::NonIntegral(format!("sym2 of {e}")));
    }
    Ok(out)
}

/// Virtual Poincare polynomial `t^(2 dim) E(-1/t, -1/t)`.
///
/// Fails with [`Error::NegativeExponent`] if the result is not a polynomial,
/// which signals a wrong dimension.
pub fn pvir(e: &LaurentPoly, dim: i64) -> Result<LaurentPoly> {
    if !e.only_vars(&[Var::X, Var::Y]) {
        return Err(Error::InvalidArgument(format!("pvir expects a polynomial in x, y: {e}")));
    }
    let mut out = LaurentPoly::zero();
    for (k, c) in e.terms() {
        let deg = (k[0] + k[1]) as i64;
        let sign = if deg % 2 == 0 { c.clone() } else { -c.clone() };
        out += LaurentPoly::monomial([0, 0, (2 * dim - deg) as i32, 0], sign);
    }
    if let Some(m) = out.min_degree(Var::T) {
        if m < 0 {
            return Err(Error::NegativeExponent(format!(
                "pvir with dim {dim} leaves t^{m}"
            )));
        }
    }
    Ok(out)
}

impl Curve {
    /// A curve of genus `g`; fails unless `g >= 2`.
    pub fn new(g: i64) -> Result<Curve> {
        if g < 2 {
            return Err(Error::InvalidGenus(g));
        }
        Ok(Curve { g })
    }

    /// The genus.
    pub fn genus(&self) -> i64 {
        self.g
    }

    /// `E(C) = 1 - g x - g y + xy`.
    pub fn curve_class(&self) -> LaurentPoly {
        self.sym_power(1)
    }

    /// `E(J) = (1 - x)^g (1 - y)^g`.
    pub fn jacobian(&self) -> LaurentPoly {
        let one = LaurentPoly::one();
        let a = (&one - LaurentPoly::var(Var::X)).pow(self.g as u32);
        let b = (&one - LaurentPoly::var(Var::Y)).pow(self.g as u32);
        a * b
    }

    /// `E(S^n C)`, zero for `n < 0`.
    ///
    /// Equal to the `u^n` coefficient of `(1 - xu)^g (1 - yu)^g / ((1 - u)(1 - xyu))`,
    /// evaluated as `sum_{i,j} C(g,i) C(g,j) (-x)^i (-y)^j [CP^(n-i-j)]`.
    pub fn sym_power(&self, n: i64) -> LaurentPoly {
        if n < 0 {
            return LaurentPoly::zero();
        }
        let g = self.g;
        let mut out = LaurentPoly::zero();
        for i in 0..=g.min(n) {
            for j in 0..=g.min(n - i) {
                let mut c = binomial(g, i) * binomial(g, j);
                if (i + j) % 2 == 1 {
                    c = -c;
                }
                let mono = LaurentPoly::monomial([i as i32, j as i32, 0, 0], c);
                out += mono * proj_space(n - i - j);
            }
        }
        out
    }

    /// The motivic zeta function `Z(C, u)` realized as a series in `u`.
    pub fn zeta_series(&self, order: usize) -> Result<QSeries> {
        let u = SeriesVar::U;
        let one = LaurentPoly::one();
        let nx = series_poly(u, order, &[(0, one.clone()), (1, -LaurentPoly::var(Var::X))]);
        let ny = series_poly(u, order, &[(0, one.clone()), (1, -LaurentPoly::var(Var::Y))]);
        let num = nx.pow(self.g as u32).checked_mul(&ny.pow(self.g as u32))?;
        series_expand(
            &num,
            &[one_minus(u, order, 1, one), one_minus(u, order, 1, LaurentPoly::lefschetz())],
            order,
        )
    }

    /// Checks `sum_n P(S^n C, t) q^n = (1 + qt)^(2g) / ((1 - q)(1 - qt^2))` up to `order`.
    pub fn macdonald_check(&self, order: usize) -> Result<Report> {
        let name = format!("macdonald g={} order={order}", self.g);
        let q = SeriesVar::Q;
        let t = LaurentPoly::var(Var::T);
        let num = series_poly(q, order, &[(0, LaurentPoly::one()), (1, t.clone())]).pow(2 * self.g as u32);
        let closed = series_expand(
            &num,
            &[one_minus(q, order, 1, LaurentPoly::one()), one_minus(q, order, 1, &t * &t)],
            order,
        )?;
        for n in 0..order {
            let direct = pvir(&self.sym_power(n as i64), n as i64)?;
            let expected = closed.coeff(n);
            if direct != expected {
                return Ok(Report::fail(
                    name,
                    format!("q^{n}: sum side {direct}, closed form {expected}"),
                ));
            }
        }
        Ok(Report::pass(name))
    }

    /// Checks `[S^k] = L^(k-g+1) [S^(2g-2-k)] + [CP^(k-g)] [J]` for `0 <= k <= 2g-2`.
    ///
    /// For `k < g - 1` the identity is checked at `2g - 2 - k`, where the
    /// geometric factor is an honest polynomial.
    pub fn serre_symmetric_check(&self, k: i64) -> Result<Report> {
        let g = self.g;
        if !(0..=2 * g - 2).contains(&k) {
            return Err(Error::InvalidArgument(format!("k = {k} outside [0, {}]", 2 * g - 2)));
        }
        let name = format!("serre duality g={g} k={k}");
        let k = if k < g - 1 { 2 * g - 2 - k } else { k };
        let lhs = self.sym_power(k);
        let rhs = self.sym_power(2 * g - 2 - k).mul_l(k - g + 1) + proj_space(k - g) * self.jacobian();
        if lhs == rhs {
            Ok(Report::pass(name))
        } else {
            Ok(Report::fail(name, format!("lhs {lhs}, rhs {rhs}")))
        }
    }
}
