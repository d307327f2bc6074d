//! Exact arithmetic substrate.
//!
//! [`LaurentPoly`] is a multivariate polynomial over arbitrary-precision
//! rationals in the fixed variables `x, y, t, w`. Only `t` may carry negative
//! exponents. [`QSeries`] is a truncated power series in a single series
//! variable (`q` or `u`) whose coefficients are `LaurentPoly` values.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Exponent vector ordered as `(x, y, t, w)`.
pub type Exponent = [i32; 4];

/// Names of the four variables in canonical order.
pub const VAR_NAMES: [&str; 4] = ["x", "y", "t", "w"];

/// One of the four polynomial variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    T,
    W,
}

impl Var {
    /// Position of the variable inside an [`Exponent`].
    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::T => 2,
            Var::W => 3,
        }
    }

    /// All variables in canonical order.
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::T, Var::W];
}

/// Builds a rational from an integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"3"`, `"-7/2"` or a decimal such as `"0.25"` into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let all_digits = |p: &str| p.chars().all(|c| c.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    let value = BigRational::new(numer, denom);
    Ok(if neg { -value } else { value })
}

/// Exact multivariate Laurent polynomial in `x, y, t, w` over the rationals.
///
/// Terms are kept in a sorted map so iteration and serialization follow the
/// lexicographic order on `(x, y, t, w)` exponents. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigRational>,
}

fn check_exponent(e: &Exponent) {
    assert!(
        e[0] >= 0 && e[1] >= 0 && e[3] >= 0,
        "negative exponent outside t: {e:?}"
    );
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigRational) -> Self {
        Self::monomial([0; 4], c)
    }

    /// A constant polynomial with integer value.
    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    /// A single term `c * x^e0 y^e1 t^e2 w^e3`.
    ///
    /// # Panics
    /// Panics if `x`, `y` or `w` carries a negative exponent.
    pub fn monomial(e: Exponent, c: BigRational) -> Self {
        check_exponent(&e);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// The variable `v` itself.
    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Self::monomial(e, BigRational::one())
    }

    /// `v^k` for a single variable.
    pub fn var_pow(v: Var, k: i32) -> Self {
        let mut e = [0; 4];
        e[v.index()] = k;
        Self::monomial(e, BigRational::one())
    }

    /// The Lefschetz class `L = xy`.
    pub fn lefschetz() -> Self {
        Self::lpow(1)
    }

    /// `L^k = (xy)^k` for `k >= 0`.
    pub fn lpow(k: i64) -> Self {
        assert!(k >= 0, "negative power of L: {k}");
        let k = k as i32;
        Self::monomial([k, k, 0, 0], BigRational::one())
    }

    /// `t^k`, negative `k` allowed.
    pub fn tpow(k: i64) -> Self {
        Self::var_pow(Var::T, k as i32)
    }

    /// `true` when no term is stored.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Alias of [`LaurentPoly::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over `(exponent, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    /// Coefficient of a given monomial, zero when absent.
    pub fn coeff(&self, e: &Exponent) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> BigRational {
        self.coeff(&[0; 4])
    }

    /// Largest exponent of `v`, or `None` for the zero polynomial.
    pub fn max_degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    /// Smallest exponent of `v`, or `None` for the zero polynomial.
    pub fn min_degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|e| e[v.index()]).min()
    }

    /// `true` if every monomial only involves the listed variables.
    pub fn only_vars(&self, vars: &[Var]) -> bool {
        self.terms
            .keys()
            .all(|e| Var::ALL.iter().all(|v| vars.contains(v) || e[v.index()] == 0))
    }

    /// `true` if all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// `true` if all coefficients are non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn insert_add(map: &mut BTreeMap<Exponent, BigRational>, e: Exponent, c: BigRational) {
        use std::collections::btree_map::Entry;
        match map.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by the single term `c * m^e`.
    pub fn mul_term(&self, e: &Exponent, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| {
                let mut s = *k;
                for i in 0..4 {
                    s[i] += e[i];
                }
                check_exponent(&s);
                (s, v * c)
            })
            .collect();
        Self { terms }
    }

    /// Multiplies by `L^k`.
    pub fn mul_l(&self, k: i64) -> Self {
        assert!(k >= 0, "negative power of L: {k}");
        let k = k as i32;
        self.mul_term(&[k, k, 0, 0], &BigRational::one())
    }

    /// Raises to a non-negative integer power.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / b`.
    ///
    /// Runs multivariate division with respect to the lexicographic order on
    /// `(x, y, t, w)`. Every quotient term must lie in the exponent box forced
    /// by the degrees of `self` and `b`, which guarantees termination even with
    /// Laurent exponents in `t`. Fails with [`Error::NonExactDivision`] if the
    /// remainder is not zero.
    pub fn exact_div(&self, b: &LaurentPoly) -> Result<LaurentPoly> {
        if b.is_zero() {
            return Err(Error::NonExactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let fail = || Error::NonExactDivision(format!("({self}) / ({b})"));
        let mut lo = [0i32; 4];
        let mut hi = [0i32; 4];
        for v in Var::ALL {
            let i = v.index();
            lo[i] = self.min_degree(v).unwrap() - b.min_degree(v).unwrap();
            hi[i] = self.max_degree(v).unwrap() - b.max_degree(v).unwrap();
            if lo[i] > hi[i] {
                return Err(fail());
            }
        }
        let (lead_e, lead_c) = b.terms.iter().next_back().map(|(e, c)| (*e, c.clone())).unwrap();
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            let mut qe = [0i32; 4];
            for i in 0..4 {
                qe[i] = re[i] - lead_e[i];
                if qe[i] < lo[i] || qe[i] > hi[i] {
                    return Err(fail());
                }
            }
            let qc = rc / &lead_c;
            for (be, bc) in &b.terms {
                let mut s = *be;
                for i in 0..4 {
                    s[i] += qe[i];
                }
                Self::insert_add(&mut rem, s, -(bc * &qc));
            }
            quot.insert(qe, qc);
        }
        Ok(Self { terms: quot })
    }

    /// Applies a map to every exponent vector, merging collisions.
    pub fn map_exponents(&self, f: impl Fn(&Exponent) -> Exponent) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let ne = f(e);
            check_exponent(&ne);
            Self::insert_add(&mut terms, ne, c.clone());
        }
        Self { terms }
    }

    /// Substitutes polynomials for variables.
    ///
    /// Variables without a binding are left unchanged. A negative power of `t`
    /// can only be substituted when the binding for `t` is a single monomial
    /// that is invertible in the ring (a rational multiple of a power of `t`).
    pub fn substitute(&self, bindings: &[(Var, LaurentPoly)]) -> Result<LaurentPoly> {
        let mut table: [Option<&LaurentPoly>; 4] = [None; 4];
        for (v, p) in bindings {
            table[v.index()] = Some(p);
        }
        let mut powers: HashMap<(usize, i32), LaurentPoly> = HashMap::new();
        let mut power = |i: usize, k: i32| -> Result<LaurentPoly> {
            if let Some(p) = powers.get(&(i, k)) {
                return Ok(p.clone());
            }
            let base = table[i].expect("bound variable");
            let value = if k >= 0 {
                base.pow(k as u32)
            } else {
                let inv = base.monomial_inverse().ok_or_else(|| {
                    Error::Substitution(format!(
                        "cannot invert {base} for a negative power of {}",
                        VAR_NAMES[i]
                    ))
                })?;
                inv.pow((-k) as u32)
            };
            powers.insert((i, k), value.clone());
            Ok(value)
        };
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut free = [0i32; 4];
            let mut term = LaurentPoly::one();
            for i in 0..4 {
                if table[i].is_some() {
                    if e[i] != 0 {
                        term = &term * &power(i, e[i])?;
                    }
                } else {
                    free[i] = e[i];
                }
            }
            let term = term.mul_term(&free, c);
            for (k, v) in term.terms {
                Self::insert_add(&mut out.terms, k, v);
            }
        }
        Ok(out)
    }

    /// Inverse of a single monomial in the variable `t` only.
    fn monomial_inverse(&self) -> Option<LaurentPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if e[0] != 0 || e[1] != 0 || e[3] != 0 {
            return None;
        }
        Some(Self::monomial([0, 0, -e[2], 0], c.recip()))
    }

    /// JSON object `{"vars":[..],"terms":[{"e":[..],"num":"..","den":".."}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                json!({
                    "e": e,
                    "num": c.numer().to_string(),
                    "den": c.denom().to_string(),
                })
            })
            .collect();
        json!({ "vars": VAR_NAMES, "terms": terms })
    }

    /// Parses the representation produced by [`LaurentPoly::to_json`].
    pub fn from_json(v: &Value) -> Result<LaurentPoly> {
        let bad = |m: &str| Error::Parse(format!("polynomial JSON: {m}"));
        let vars = v.get("vars").and_then(Value::as_array).ok_or_else(|| bad("missing vars"))?;
        let names: Vec<&str> = vars.iter().filter_map(Value::as_str).collect();
        if names != VAR_NAMES {
            return Err(bad("vars must be [x, y, t, w]"));
        }
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
        let mut out = LaurentPoly::zero();
        for t in terms {
            let e = t.get("e").and_then(Value::as_array).ok_or_else(|| bad("missing e"))?;
            if e.len() != 4 {
                return Err(bad("exponent must have 4 entries"));
            }
            let mut ex = [0i32; 4];
            for (i, x) in e.iter().enumerate() {
                ex[i] = x.as_i64().ok_or_else(|| bad("exponent not an integer"))? as i32;
            }
            if ex[0] < 0 || ex[1] < 0 || ex[3] < 0 {
                return Err(bad("negative exponent outside t"));
            }
            let num: BigInt = t
                .get("num")
                .and_then(Value::as_str)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("bad num"))?;
            let den: BigInt = t
                .get("den")
                .and_then(Value::as_str)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("bad den"))?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            Self::insert_add(&mut out.terms, ex, BigRational::new(num, den));
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, name) in VAR_NAMES.iter().enumerate() {
                match e[i] {
                    0 => {}
                    1 => factors.push((*name).to_string()),
                    k => factors.push(format!("{name}^{k}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            Self::insert_add(&mut self.terms, *e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            Self::insert_add(&mut self.terms, *e, -c.clone());
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut acc: HashMap<Exponent, BigRational> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                let p = ca * cb;
                match acc.get_mut(&e) {
                    Some(c) => *c += p,
                    None => {
                        acc.insert(e, p);
                    }
                }
            }
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl SubAssign<LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

/// The distinguished series variable of a [`QSeries`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesVar {
    Q,
    U,
}

impl SeriesVar {
    /// Lower-case name used in serialization.
    pub fn name(self) -> &'static str {
        match self {
            SeriesVar::Q => "q",
            SeriesVar::U => "u",
        }
    }

    fn parse(s: &str) -> Result<Self> {
        match s {
            "q" => Ok(SeriesVar::Q),
            "u" => Ok(SeriesVar::U),
            other => Err(Error::Parse(format!("unknown series variable {other:?}"))),
        }
    }
}

/// Truncated power series `sum_{k < order} c_k s^k` with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries {
    var: SeriesVar,
    coeffs: Vec<LaurentPoly>,
}

impl QSeries {
    /// The zero series of the given order.
    pub fn zero(var: SeriesVar, order: usize) -> Self {
        Self { var, coeffs: vec![LaurentPoly::zero(); order] }
    }

    /// The series `1` truncated at `order`.
    pub fn one(var: SeriesVar, order: usize) -> Self {
        Self::monomial(var, order, 0, LaurentPoly::one())
    }

    /// The series `c * s^k` truncated at `order`.
    pub fn monomial(var: SeriesVar, order: usize, k: usize, c: LaurentPoly) -> Self {
        let mut s = Self::zero(var, order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from coefficients, padding with zeros or truncating to `order`.
    pub fn from_coeffs(var: SeriesVar, order: usize, mut coeffs: Vec<LaurentPoly>) -> Self {
        coeffs.resize(order, LaurentPoly::zero());
        Self { var, coeffs }
    }

    /// Builds a series from sparse `(degree, coefficient)` pairs; repeated degrees add up.
    pub fn from_terms(var: SeriesVar, order: usize, terms: &[(usize, LaurentPoly)]) -> Self {
        let mut s = Self::zero(var, order);
        for (k, c) in terms {
            if *k < order {
                s.coeffs[*k] += c;
            }
        }
        s
    }

    /// Series variable.
    pub fn var(&self) -> SeriesVar {
        self.var
    }

    /// Truncation order: terms of degree `>= order` are discarded.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `s^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Borrowed coefficient slice.
    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Consumes the series and returns its coefficients.
    pub fn into_coeffs(self) -> Vec<LaurentPoly> {
        self.coeffs
    }

    /// `true` if every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    /// Returns the same series with a smaller (or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self { var: self.var, coeffs: self.coeffs[..order].to_vec() }
    }

    fn same_var(&self, other: &QSeries) -> Result<()> {
        if self.var != other.var {
            return Err(Error::SeriesVarMismatch(
                self.var.name().into(),
                other.var.name().into(),
            ));
        }
        Ok(())
    }

    /// Sum; the order of the result is the smaller of the two orders.
    pub fn checked_add(&self, other: &QSeries) -> Result<QSeries> {
        self.same_var(other)?;
        let n = self.order().min(other.order());
        let coeffs = (0..n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        Ok(Self { var: self.var, coeffs })
    }

    /// Difference; the order of the result is the smaller of the two orders.
    pub fn checked_sub(&self, other: &QSeries) -> Result<QSeries> {
        self.same_var(other)?;
        let n = self.order().min(other.order());
        let coeffs = (0..n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect();
        Ok(Self { var: self.var, coeffs })
    }

    /// Truncated product; the order of the result is the smaller of the two orders.
    pub fn checked_mul(&self, other: &QSeries) -> Result<QSeries> {
        self.same_var(other)?;
        let n = self.order().min(other.order());
        let mut coeffs = vec![LaurentPoly::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        Ok(Self { var: self.var, coeffs })
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &LaurentPoly) -> QSeries {
        Self { var: self.var, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `s^k`, dropping what falls beyond the order.
    pub fn shift(&self, k: usize) -> QSeries {
        let n = self.order();
        let mut coeffs = vec![LaurentPoly::zero(); n];
        if k < n {
            coeffs[k..].clone_from_slice(&self.coeffs[..n - k]);
        }
        Self { var: self.var, coeffs }
    }

    /// Raises to a non-negative power with truncation.
    pub fn pow(&self, n: u32) -> QSeries {
        let mut out = QSeries::one(self.var, self.order());
        for _ in 0..n {
            out = out.checked_mul(self).expect("same variable");
        }
        out
    }

    /// Divides by a factor `1 - m` where `m` has zero constant term.
    ///
    /// The factor is passed as the full series `1 - m`. Its constant
    /// coefficient must be exactly 1, otherwise [`Error::BadDenominator`] is
    /// returned; this is what rejects factors such as `1 - t^2` that do not
    /// involve the series variable.
    pub fn div_factor(&self, factor: &QSeries) -> Result<QSeries> {
        self.same_var(factor)?;
        if factor.coeff(0) != LaurentPoly::one() {
            return Err(Error::BadDenominator(format!(
                "constant coefficient of the factor is {}, expected 1",
                factor.coeff(0)
            )));
        }
        let n = self.order().min(factor.order());
        let mut g: Vec<LaurentPoly> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                let m = &factor.coeffs[j];
                if !m.is_zero() && !g[k - j].is_zero() {
                    acc -= m * &g[k - j];
                }
            }
            g.push(acc);
        }
        Ok(Self { var: self.var, coeffs: g })
    }

    /// Keeps only the terms whose degree is congruent to `m` modulo `r`.
    pub fn parity_filter(&self, r: usize, m: usize) -> QSeries {
        assert!(r > 0 && m < r, "need 0 <= m < r");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % r == m { c.clone() } else { LaurentPoly::zero() })
            .collect();
        Self { var: self.var, coeffs }
    }

    /// Substitutes `s -> c * s'^k` where `s'` is the variable `var`.
    pub fn compose_monomial(&self, var: SeriesVar, k: usize, c: &LaurentPoly, order: usize) -> QSeries {
        assert!(k >= 1, "substitution must raise the series degree");
        let mut out = QSeries::zero(var, order);
        let mut cpow = LaurentPoly::one();
        for (n, a) in self.coeffs.iter().enumerate() {
            if n * k >= order {
                break;
            }
            if !a.is_zero() {
                out.coeffs[n * k] = a * &cpow;
            }
            cpow = &cpow * c;
        }
        out
    }

    /// Applies `f` to each coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> QSeries {
        Self { var: self.var, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Fallible variant of [`QSeries::map_coeffs`].
    pub fn try_map_coeffs(&self, f: impl Fn(usize, &LaurentPoly) -> Result<LaurentPoly>) -> Result<QSeries> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| f(k, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { var: self.var, coeffs })
    }

    /// JSON object `{"var":"q","order":N,"coeffs":[..]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "var": self.var.name(),
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(LaurentPoly::to_json).collect::<Vec<_>>(),
        })
    }

    /// Parses the representation produced by [`QSeries::to_json`].
    pub fn from_json(v: &Value) -> Result<QSeries> {
        let bad = |m: &str| Error::Parse(format!("series JSON: {m}"));
        let var = SeriesVar::parse(v.get("var").and_then(Value::as_str).ok_or_else(|| bad("missing var"))?)?;
        let order = v.get("order").and_then(Value::as_u64).ok_or_else(|| bad("missing order"))? as usize;
        let coeffs = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing coeffs"))?
            .iter()
            .map(LaurentPoly::from_json)
            .collect::<Result<Vec<_>>>()?;
        if coeffs.len() != order {
            return Err(bad("coefficient count differs from order"));
        }
        Ok(Self { var, coeffs })
    }
}

/// Expands `numerator / prod(factors)` as a truncated series.
///
/// Each factor is a full series `1 - m`; see [`QSeries::div_factor`].
pub fn series_expand(numerator: &QSeries, factors: &[QSeries], order: usize) -> Result<QSeries> {
    let mut acc = numerator.truncate(order);
    for f in factors {
        acc = acc.div_factor(f)?;
    }
    Ok(acc)
}

/// Builds the polynomial `sum c_k s^k` from dense coefficients as a series of the given order.
pub fn series_poly(var: SeriesVar, order: usize, terms: &[(usize, LaurentPoly)]) -> QSeries {
    QSeries::from_terms(var, order, terms)
}

/// The factor `1 - c s^k` as a series.
pub fn one_minus(var: SeriesVar, order: usize, k: usize, c: LaurentPoly) -> QSeries {
    series_poly(var, order, &[(0, LaurentPoly::one()), (k, -c)])
}
