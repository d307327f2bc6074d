//! Rank-2 Bradlow-Higgs triples: motives in every chamber, flip loci,
//! attracting sets, index sets and the variant with poles.

use std::fmt;

use crate::blocks::{proj_space, pvir, sym2, Curve};
use crate::error::{Error, Result};
use crate::pairs::{check_wall, pair_motive};
use crate::report::Report;
use crate::ring::{LaurentPoly, Var};

pub use crate::pairs::{critical_values, Sign};

/// Which index set of splittings `d = d1 + d2` to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexKind {
    /// Type 1 attracting sets, odd degree.
    OddType1,
    /// Type 2 split cells, odd degree.
    OddType2,
    /// Type 1 attracting sets, even degree.
    EvenType1,
    /// Type 2 split cells, even degree.
    EvenType2,
    /// Split cells of the last chamber.
    Infinity,
    /// Type 1 sets of the poles variant, small chamber.
    PolesType1 { gamma: i64 },
    /// Type 2 cells of the poles variant, small chamber.
    PolesType2 { gamma: i64 },
    /// Type 2 cells of the poles variant, last chamber.
    PolesInfinity { gamma: i64 },
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexKind::OddType1 => write!(f, "I1_odd"),
            IndexKind::OddType2 => write!(f, "I2_odd"),
            IndexKind::EvenType1 => write!(f, "I1_even"),
            IndexKind::EvenType2 => write!(f, "I2_even"),
            IndexKind::Infinity => write!(f, "I_inf"),
            IndexKind::PolesType1 { gamma } => write!(f, "I1_eps(gamma={gamma})"),
            IndexKind::PolesType2 { gamma } => write!(f, "I2_eps(gamma={gamma})"),
            IndexKind::PolesInfinity { gamma } => write!(f, "I2_inf(gamma={gamma})"),
        }
    }
}

/// A splitting `(d1, d2)` with `d1 + d2 = d`, tagged with its index set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexPair {
    pub d1: i64,
    pub d2: i64,
    pub kind: IndexKind,
}

/// Stability regime of the poles variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// The chamber just above zero.
    Eps,
    /// The chamber beyond the last wall.
    Infinity,
}

/// Dimension `d + 1 + 6(g - 1)` of the triple moduli space.
pub fn triple_dimension(curve: &Curve, d: i64) -> i64 {
    d + 1 + 6 * (curve.genus() - 1)
}

/// Dimension `d + 6g - 6 + 4 gamma` of the moduli space with poles.
pub fn poles_dimension(curve: &Curve, d: i64, gamma: i64) -> i64 {
    d + 6 * curve.genus() - 6 + 4 * gamma
}

/// Smoothness of the triple moduli space in a chamber.
///
/// Smooth for `d < 0` in every chamber and for odd `d > 4g - 4` in chamber 0.
pub fn triple_is_smooth(curve: &Curve, d: i64, chamber: usize) -> bool {
    d < 0 || (chamber == 0 && d % 2 != 0 && d > 4 * curve.genus() - 4)
}

fn parity_requirement(kind: IndexKind) -> Option<(i64, &'static str)> {
    match kind {
        IndexKind::OddType1 | IndexKind::OddType2 => Some((1, "odd")),
        IndexKind::EvenType1 | IndexKind::EvenType2 => Some((0, "even")),
        _ => None,
    }
}

/// Membership test using the inequality systems, doubled to stay in integers.
fn contains(g: i64, d: i64, d1: i64, kind: IndexKind) -> bool {
    let d2 = d - d1;
    match kind {
        IndexKind::OddType1 => d1 >= 0 && 2 * d1 >= d + 3 - 2 * g && 2 * d1 < d,
        IndexKind::OddType2 => 2 * d1 >= d + 3 - 2 * g && d1 <= d && 2 * d1 < d,
        IndexKind::EvenType1 => {
            d1 >= 0 && 2 * d1 >= d + 2 - 2 * g && 2 * d1 <= d - 2 && 2 * d2 <= d + 2 * g - 2
        }
        IndexKind::EvenType2 => {
            2 * d1 >= d + 2 - 2 * g && 2 * d1 <= d && d2 >= 0 && 2 * d2 <= d + 2 * g - 2
        }
        IndexKind::Infinity => {
            2 * d1 >= d + 2 - 2 * g && d1 <= d && d2 >= 0 && 2 * d2 <= d + 2 * g - 2
        }
        IndexKind::PolesType1 { gamma } => {
            d1 >= 0 && 2 * d1 >= d - gamma + 2 - 2 * g && 2 * d1 < d && 2 * d2 <= d + gamma + 2 * g - 2
        }
        IndexKind::PolesType2 { gamma } => {
            2 * d1 >= d - gamma + 2 - 2 * g
                && 2 * d1 < d + 1
                && d1 < d + 1
                && 2 * d2 <= d + gamma + 2 * g - 2
        }
        IndexKind::PolesInfinity { gamma } => {
            2 * d1 >= d - gamma + 2 - 2 * g && d1 <= d && d2 >= 0 && 2 * d2 <= d + gamma + 2 * g - 2
        }
    }
}

/// Enumerates an index set in increasing `d1`.
pub fn index_set(curve: &Curve, d: i64, kind: IndexKind) -> Result<Vec<IndexPair>> {
    if let Some((parity, expected)) = parity_requirement(kind) {
        if d.rem_euclid(2) != parity {
            return Err(Error::ParityMismatch { kind: kind.to_string(), expected, d });
        }
    }
    let g = curve.genus();
    let gamma = match kind {
        IndexKind::PolesType1 { gamma } | IndexKind::PolesType2 { gamma } | IndexKind::PolesInfinity { gamma } => {
            gamma
        }
        _ => 0,
    };
    let lo = (d - gamma - 2 * g).div_euclid(2) - 1;
    let hi = d.abs() + 1;
    Ok((lo..=hi)
        .filter(|&d1| contains(g, d, d1, kind))
        .map(|d1| IndexPair { d1, d2: d - d1, kind })
        .collect())
}

/// Flip loci `[W^{d,+}]` and `[W^{d,-}]` at a wall.
///
/// With `m = (d - wall) / 2`:
/// `W+ = L^(2g) [CP^(2g-3)] [S^m] [J] + L^(3g-2) [S^m] [S^wall]` and
/// `W- = L^(2g) [S^m] [J] [CP^((d+wall)/2 + g - 2)]`.
pub fn flip_w(curve: &Curve, d: i64, wall: i64, sign: Sign) -> Result<LaurentPoly> {
    check_wall(d, wall)?;
    let g = curve.genus();
    let m = (d - wall) / 2;
    let sm = curve.sym_power(m);
    if sm.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let j = curve.jacobian();
    Ok(match sign {
        Sign::Plus => {
            (proj_space(2 * g - 3) * &sm * &j).mul_l(2 * g) + (&sm * &curve.sym_power(wall)).mul_l(3 * g - 2)
        }
        Sign::Minus => (sm * j * proj_space((d + wall) / 2 + g - 2)).mul_l(2 * g),
    })
}

/// `(L^m - L) / (L - 1)`: `L + ... + L^(m-1)` for `m >= 1` and `-1` for `m = 0`.
fn shifted_geometric(m: i64) -> LaurentPoly {
    if m == 0 {
        LaurentPoly::int(-1)
    } else {
        proj_space(m - 2).mul_l(1)
    }
}

/// Flip locus `[B^{d,-}]` at a wall.
///
/// With `m = (d - wall) / 2`:
/// `B- = L^(4g-3) [S^m] ((L-1)[S^((d+wall)/2)] + [J])
///     + L^(4g-3) (L^m - L)/(L - 1) [S^m] ((L-1)[S^wall] + [J])`.
pub fn flip_b_minus(curve: &Curve, d: i64, wall: i64) -> Result<LaurentPoly> {
    check_wall(d, wall)?;
    let g = curve.genus();
    let m = (d - wall) / 2;
    let sm = curve.sym_power(m);
    if sm.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let j = curve.jacobian();
    let lm1 = LaurentPoly::lefschetz() - LaurentPoly::one();
    let first = &sm * &(&lm1 * &curve.sym_power((d + wall) / 2) + &j);
    let second = shifted_geometric(m) * &sm * (&lm1 * &curve.sym_power(wall) + &j);
    Ok((first + second).mul_l(4 * g - 3))
}

/// Type 1 attracting set `[F^{(d1,d2),1+}]`.
///
/// `L^(3g-2+d2) [S^d1][S^(d1-d2+2g-2)] + (L^(4g-2) - L^(4g-3)) [S^d1] ([S^d2] - [J] (L^(d2+1-g) - 1)/(L - 1))`.
/// The second summand is expanded as
/// `(L^(4g-2) - L^(4g-3)) [S^d1][S^d2] - (L^(3g-2+d2) - L^(4g-3)) [S^d1][J]`,
/// which is a polynomial for every `d2 >= 0`.
/// Splittings with `d1 < 0` give zero; other splittings must lie in a type 1 index set.
pub fn attract_type1(curve: &Curve, d1: i64, d2: i64) -> Result<LaurentPoly> {
    if d1 < 0 {
        return Ok(LaurentPoly::zero());
    }
    let d = d1 + d2;
    let kind = if d.rem_euclid(2) == 1 { IndexKind::OddType1 } else { IndexKind::EvenType1 };
    let g = curve.genus();
    if !contains(g, d, d1, kind) || (kind == IndexKind::EvenType1 && d < 2) {
        return Err(Error::IndexNotInSet { d1, d2, kind: kind.to_string() });
    }
    Ok(attract_type1_unchecked(curve, d1, d2))
}

fn attract_type1_unchecked(curve: &Curve, d1: i64, d2: i64) -> LaurentPoly {
    let g = curve.genus();
    let s1 = curve.sym_power(d1);
    let main = (&s1 * &curve.sym_power(d1 - d2 + 2 * g - 2)).mul_l(3 * g - 2 + d2);
    let correction = (&s1 * &curve.sym_power(d2)).mul_l(4 * g - 3) * (LaurentPoly::lefschetz() - LaurentPoly::one())
        - (&s1 * &curve.jacobian()) * (LaurentPoly::lpow(3 * g - 2 + d2) - LaurentPoly::lpow(4 * g - 3));
    main + correction
}

/// Split type 2 cell `L^(4g-3) [S^d2][S^(d1-d2+2g-2)]`.
pub fn split_cell(curve: &Curve, d1: i64, d2: i64) -> LaurentPoly {
    let g = curve.genus();
    (curve.sym_power(d2) * curve.sym_power(d1 - d2 + 2 * g - 2)).mul_l(4 * g - 3)
}

/// Motive of the triple moduli space in chamber 0 (`0 < sigma < 1` or `< 2`).
///
/// Odd `d`: `L^(4g-3) [M_pairs] + sum_{I1} [F^{1+}] + sum_{I2} L^(4g-3) [S^d2][S^(d1-d2+2g-2)]`.
/// Even `d >= 0` uses the same shape with `(d/2, d/2)` removed from `I2` and
/// the extra summands `(L-1) L^(4g-3) [Sym^2 S^(d/2)] + L^(4g-3) [S^(d/2)][J][CP^(g-2)]
/// + [S^(d/2)] L^(3g-2) (L^(d/2+g-1) + L^(2g-2) - 1)`.
/// For `d < 0` only the `I2` terms remain; the result is zero below `2 - 2g`.
pub fn triple_motive_eps(curve: &Curve, d: i64) -> Result<LaurentPoly> {
    let g = curve.genus();
    let odd = d.rem_euclid(2) == 1;
    let (k1, k2) = if odd {
        (IndexKind::OddType1, IndexKind::OddType2)
    } else {
        (IndexKind::EvenType1, IndexKind::EvenType2)
    };
    let mut motive = pair_motive(curve, d, 0)?.mul_l(4 * g - 3);
    if odd || d >= 2 {
        for p in index_set(curve, d, k1)? {
            motive += attract_type1_unchecked(curve, p.d1, p.d2);
        }
    }
    for p in index_set(curve, d, k2)? {
        if !odd && p.d1 == p.d2 {
            continue;
        }
        motive += split_cell(curve, p.d1, p.d2);
    }
    if !odd && d >= 0 {
        let s = curve.sym_power(d / 2);
        let lm1 = LaurentPoly::lefschetz() - LaurentPoly::one();
        motive += (lm1 * sym2(&s)?).mul_l(4 * g - 3);
        motive += (&s * &curve.jacobian() * proj_space(g - 2)).mul_l(4 * g - 3);
        let tail = LaurentPoly::lpow(d / 2 + g - 1) + LaurentPoly::lpow(2 * g - 2) - LaurentPoly::one();
        motive += (&s * &tail).mul_l(3 * g - 2);
    }
    Ok(motive)
}

/// Motive in an arbitrary chamber, walking up from chamber 0.
///
/// Crossing a wall applies `[M_{sigma+}] = [M_{sigma-}] - [W+] + [W-]`. Chambers
/// past the last wall all give the motive of the last chamber.
pub fn triple_motive_chamber(curve: &Curve, d: i64, chamber: usize) -> Result<LaurentPoly> {
    let mut motive = triple_motive_eps(curve, d)?;
    for &w in critical_values(d).iter().take(chamber) {
        motive -= flip_w(curve, d, w, Sign::Plus)?;
        motive += flip_w(curve, d, w, Sign::Minus)?;
    }
    Ok(motive)
}

/// Motive of the last chamber.
pub fn triple_motive_infinity(curve: &Curve, d: i64) -> Result<LaurentPoly> {
    triple_motive_chamber(curve, d, critical_values(d).len())
}

/// Stratum classes attached to one splitting in the last chamber.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InftyStrata {
    /// `L^(4g-3) [S^d2][S^(d1-d2+2g-2)]` when `d1 < d2`, zero otherwise.
    pub smooth_cell: LaurentPoly,
    /// `[W+]` at the wall `d1 - d2` when `d1 > d2`.
    pub w_plus: LaurentPoly,
    /// `[NSW+] = L^(2g) [S^d2][S^(2g-2-(d1-d2))]` when `d1 > d2`.
    pub nsw_plus: LaurentPoly,
    /// `[SW+] = [W+] - [NSW+]` when `d1 > d2`.
    pub sw_plus: LaurentPoly,
    /// `[SPF^{2+}] = L^(2g) [S^d2][CP^(d1-d2+g-2)] ((L-1)[S^(d2-d1+2g-2)] + [J])` when `d1 > d2`.
    pub spf2_plus: LaurentPoly,
}

/// Stratum classes of the last chamber for the splitting `(d1, d2)`.
pub fn infty_strata(curve: &Curve, d1: i64, d2: i64) -> Result<InftyStrata> {
    let g = curve.genus();
    let d = d1 + d2;
    let mut out = InftyStrata::default();
    if d1 < d2 {
        out.smooth_cell = split_cell(curve, d1, d2);
    } else if d1 > d2 {
        let wall = d1 - d2;
        let s2 = curve.sym_power(d2);
        out.w_plus = flip_w(curve, d, wall, Sign::Plus)?;
        out.nsw_plus = (&s2 * &curve.sym_power(2 * g - 2 - wall)).mul_l(2 * g);
        out.sw_plus = &out.w_plus - &out.nsw_plus;
        let lm1 = LaurentPoly::lefschetz() - LaurentPoly::one();
        out.spf2_plus = (s2 * proj_space(wall + g - 2) * (lm1 * curve.sym_power(2 * g - 2 - wall) + curve.jacobian()))
            .mul_l(2 * g);
    }
    Ok(out)
}

/// Checks the decomposition of the last-chamber motive into strata.
///
/// Uses `sum [B+] = sum [B-] + L^(4g-3) [M_pairs]` and asserts
/// `[M_inf] = sum_{d1<d2} cells + sum [B+] - sum [SW+] + sum [SPF^{2+}]`,
/// the last two sums running over the walls. Supports odd `d`; for `d < 0`
/// it checks that the split cells alone give the last-chamber motive.
pub fn b_sum_check(curve: &Curve, d: i64) -> Result<Report> {
    let name = format!("M_inf decomposition g={} d={d}", curve.genus());
    if d >= 0 && d.rem_euclid(2) == 0 {
        return Err(Error::ParityMismatch { kind: "b_sum_check".into(), expected: "odd or negative", d });
    }
    let lhs = triple_motive_infinity(curve, d)?;
    let mut rhs = LaurentPoly::zero();
    for p in index_set(curve, d, IndexKind::Infinity)? {
        if p.d1 < p.d2 {
            rhs += infty_strata(curve, p.d1, p.d2)?.smooth_cell;
        }
    }
    if d > 0 {
        let g = curve.genus();
        rhs += pair_motive(curve, d, 0)?.mul_l(4 * g - 3);
        for w in critical_values(d) {
            let d2 = (d - w) / 2;
            let strata = infty_strata(curve, d - d2, d2)?;
            rhs += flip_b_minus(curve, d, w)?;
            rhs -= &strata.sw_plus;
            rhs += &strata.spf2_plus;
        }
    }
    if lhs == rhs {
        Ok(Report::pass(name))
    } else {
        Ok(Report::fail(name, format!("chamber walk {lhs}, strata sum {rhs}")))
    }
}

/// Even-degree strata in their final combined forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenStrata {
    /// `[X_1]`, the part of the type 1 set over strictly semistable pairs.
    pub x1: LaurentPoly,
    /// `[X_2]`, the split cell of type `(d/2, d/2)`.
    pub x2: LaurentPoly,
    /// `[M_ss]`, pairs whose bundle is strictly semistable.
    pub m_ss: LaurentPoly,
}

/// Even-degree strata for `d >= 0` even, with `S = S^(d/2)`:
///
/// `X1 = L^(4g-2) [S] (L^(d/2-1) - 1) + L^(4g-3) [J][S][CP^(d/2-1)] - L^(4g-3) [S]^2 + L^(4g-2) [Sym^2 S]`,
/// `X2 = [S][J][CP^(g-2)] L^(4g-3) + [S] L^(3g-2) (L^(2g-2) + L^g - 1)`,
/// `M_ss = [J][S][CP^(d/2-1)] - [S]^2 + [Sym^2 S]`.
pub fn even_strata(curve: &Curve, d: i64) -> Result<EvenStrata> {
    if d < 0 || d.rem_euclid(2) != 0 {
        return Err(Error::ParityMismatch { kind: "even_strata".into(), expected: "non-negative even", d });
    }
    let g = curve.genus();
    let h = d / 2;
    let s = curve.sym_power(h);
    let j = curve.jacobian();
    let s_sq = &s * &s;
    let sym = sym2(&s)?;
    let j_s_cp = &j * &s * proj_space(h - 1);
    let x1 = &s * &(LaurentPoly::lpow(4 * g - 3 + h) - LaurentPoly::lpow(4 * g - 2))
        + (&j_s_cp - &s_sq).mul_l(4 * g - 3)
        + sym.mul_l(4 * g - 2);
    let tail = LaurentPoly::lpow(2 * g - 2) + LaurentPoly::lpow(g) - LaurentPoly::one();
    let x2 = (&s * &j * proj_space(g - 2)).mul_l(4 * g - 3) + (&s * &tail).mul_l(3 * g - 2);
    let m_ss = j_s_cp - s_sq + sym;
    Ok(EvenStrata { x1, x2, m_ss })
}

/// Motive of the moduli space with poles of order `gamma >= 1`.
///
/// Chamber 0: `L^(4g-4+4gamma) [M_pairs] + sum_{I1} L^(3g-3+3gamma+d2) [S^d1][S^(d1-d2+2g-2+gamma)]
/// + sum_{I2} L^(4g-4+3gamma) [S^d2][S^(d1-d2+2g-2+gamma)]`, the first two terms only for `d >= 0`.
/// Last chamber (requires `gamma > d`): the `I2` sum over the last-chamber index set.
pub fn poles_motive(curve: &Curve, d: i64, gamma: i64, regime: Regime) -> Result<LaurentPoly> {
    if gamma < 1 {
        return Err(Error::InvalidArgument(format!("pole order must be at least 1, got {gamma}")));
    }
    let g = curve.genus();
    let cell = |p: &IndexPair| {
        (curve.sym_power(p.d2) * curve.sym_power(p.d1 - p.d2 + 2 * g - 2 + gamma)).mul_l(4 * g - 4 + 3 * gamma)
    };
    match regime {
        Regime::Infinity => {
            if gamma <= d {
                return Err(Error::PoleOrderTooSmall { d, gamma });
            }
            Ok(index_set(curve, d, IndexKind::PolesInfinity { gamma })?.iter().map(cell).sum())
        }
        Regime::Eps => {
            let mut motive: LaurentPoly =
                index_set(curve, d, IndexKind::PolesType2 { gamma })?.iter().map(cell).sum();
            if d >= 0 {
                motive += pair_motive(curve, d, 0)?.mul_l(4 * g - 4 + 4 * gamma);
                for p in index_set(curve, d, IndexKind::PolesType1 { gamma })? {
                    motive += (curve.sym_power(p.d1) * curve.sym_power(p.d1 - p.d2 + 2 * g - 2 + gamma))
                        .mul_l(3 * g - 3 + 3 * gamma + p.d2);
                }
            }
            Ok(motive)
        }
    }
}

/// Truncated expansion of `(1+t^3)^(2g) (1+t)^(2g) / ((1-t^2)^2 (1-t^4))` up to `t^bound`.
pub fn poles_limit_series(curve: &Curve, bound: i64) -> LaurentPoly {
    let g = curve.genus() as u32;
    let one = LaurentPoly::one();
    let t = LaurentPoly::var(Var::T);
    let truncate = |p: LaurentPoly| -> LaurentPoly {
        p.terms()
            .filter(|(e, _)| (e[2] as i64) <= bound)
            .map(|(e, c)| LaurentPoly::monomial(*e, c.clone()))
            .sum()
    };
    let geometric = |step: i64| -> LaurentPoly { (0..=bound / step).map(|k| LaurentPoly::tpow(step * k)).sum() };
    let mut acc = truncate((&one + LaurentPoly::tpow(3)).pow(2 * g) * (&one + &t).pow(2 * g));
    for step in [2, 2, 4] {
        acc = truncate(acc * geometric(step));
    }
    acc
}

/// Checks that low-degree Poincare coefficients of the poles variant match the limit series.
///
/// For the two largest pole orders `gamma_max - 1` and `gamma_max`, and for both
/// regimes, the coefficients of `t^k` with `k <= degree_bound` must agree with
/// [`poles_limit_series`].
pub fn poles_limit_check(curve: &Curve, d: i64, degree_bound: i64, gamma_max: i64) -> Result<Report> {
    let name = format!("poles limit g={} d={d} bound={degree_bound} gamma<={gamma_max}", curve.genus());
    let limit = poles_limit_series(curve, degree_bound);
    for gamma in [gamma_max - 1, gamma_max] {
        for regime in [Regime::Eps, Regime::Infinity] {
            if regime == Regime::Infinity && gamma <= d {
                continue;
            }
            let motive = poles_motive(curve, d, gamma, regime)?;
            let p = pvir(&motive, poles_dimension(curve, d, gamma))?;
            for k in 0..=degree_bound {
                let e = [0, 0, k as i32, 0];
                if p.coeff(&e) != limit.coeff(&e) {
                    return Ok(Report::fail(
                        name,
                        format!(
                            "gamma={gamma} {regime:?}: t^{k} coefficient {} vs limit {}",
                            p.coeff(&e),
                            limit.coeff(&e)
                        ),
                    ));
                }
            }
        }
    }
    Ok(Report::pass(name))
}

/// Extracts `[M^{2,1}]` from the Serre duality identity
/// `[M_eps^{2,2n+1}] - L^(2n-2g+3) [M_eps^{2,4g-5-2n}] = [M^{2,1}] [CP^(2n-2g+2)]`.
///
/// The class is read off at `n = g - 1` and the identity is then checked for
/// `n = g, g + 1, g + 2` by exact division.
pub fn higgs_motive_extract(curve: &Curve) -> Result<(LaurentPoly, Report)> {
    let g = curve.genus();
    let lhs = |n: i64| -> Result<LaurentPoly> {
        Ok(triple_motive_eps(curve, 2 * n + 1)? - triple_motive_eps(curve, 4 * g - 5 - 2 * n)?.mul_l(2 * n - 2 * g + 3))
    };
    let higgs = lhs(g - 1)?;
    let name = format!("higgs motive extraction g={g}");
    for n in g..=g + 2 {
        let candidate = lhs(n)?.exact_div(&proj_space(2 * n - 2 * g + 2))?;
        if candidate != higgs {
            return Ok((higgs.clone(), Report::fail(name, format!("n={n} gives {candidate}"))));
        }
    }
    Ok((higgs, Report::pass(name)))
}
