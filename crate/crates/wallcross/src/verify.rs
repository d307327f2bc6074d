//! Named verification suites combining the cross-checks of every module.

use std::fmt;
use std::str::FromStr;

use crate::blocks::{grassmann2, proj_space, pvir, sym2, Curve};
use crate::cks::{cks_weight, ratcurve_check, u_series, Multigraph};
use crate::error::{Error, Result};
use crate::genfun::{
    char_variety_mixed_hodge, clearing_factor, compare_f_g, fmot, fvir, fvir_cleared_closed, higgs_poincare,
    is_palindromic, ph_polynomial, qmot, qvir, v_polynomial, value_at_one, Mode,
};
use crate::pairs::{pair_dimension, pair_genfun_motivic, pair_motive, pair_poincare};
use crate::parallel;
use crate::report::Report;
use crate::ring::{LaurentPoly, Var};
use crate::triples::{
    attract_type1, b_sum_check, even_strata, higgs_motive_extract, index_set, poles_dimension,
    poles_limit_check, poles_motive, split_cell, triple_dimension, triple_motive_chamber, triple_motive_eps,
    triple_motive_infinity, IndexKind, Regime,
};

/// The verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Macdonald,
    Pairs,
    Fmot,
    Fvir,
    Qvir,
    Compare,
    Cks,
    Poles,
    Minfty,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const CONCRETE: [Suite; 9] = [
        Suite::Macdonald,
        Suite::Pairs,
        Suite::Fmot,
        Suite::Fvir,
        Suite::Qvir,
        Suite::Compare,
        Suite::Cks,
        Suite::Poles,
        Suite::Minfty,
    ];

    /// Lower-case name accepted on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Macdonald => "macdonald",
            Suite::Pairs => "pairs",
            Suite::Fmot => "fmot",
            Suite::Fvir => "fvir",
            Suite::Qvir => "qvir",
            Suite::Compare => "compare",
            Suite::Cks => "cks",
            Suite::Poles => "poles",
            Suite::Minfty => "minfty",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::CONCRETE
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Default truncation order `10 g`.
pub fn default_order(curve: &Curve) -> usize {
    10 * curve.genus() as usize
}

fn equal(name: String, lhs: &LaurentPoly, rhs: &LaurentPoly) -> Report {
    if lhs == rhs {
        Report::pass(name)
    } else {
        Report::fail(name, format!("{lhs} vs {rhs}"))
    }
}

fn check(name: String, ok: bool, detail: impl FnOnce() -> String) -> Report {
    if ok {
        Report::pass(name)
    } else {
        Report::fail(name, detail())
    }
}

/// Coefficient of `(xy)^dim` is 1 and no term has total degree above `2 dim`.
pub fn top_is_monic(e: &LaurentPoly, dim: i64) -> bool {
    let d = dim as i32;
    let top_ok = e.coeff(&[d, d, 0, 0]) == LaurentPoly::one().constant_term();
    top_ok && e.terms().all(|(k, _)| k[0] + k[1] <= 2 * d)
}

/// Virtual Poincare polynomial exists and has non-negative integer coefficients.
pub fn pvir_is_effective(e: &LaurentPoly, dim: i64) -> bool {
    match pvir(e, dim) {
        Ok(p) => p.is_integral() && p.is_nonnegative(),
        Err(_) => false,
    }
}

/// Macdonald formula, symmetric-square oracles and Serre duality.
pub fn macdonald_suite(curve: &Curve) -> Result<Vec<Report>> {
    let g = curve.genus();
    let mut out = vec![curve.macdonald_check(21)?];
    let zeta = curve.zeta_series(3)?;
    out.push(equal(format!("sym2(C) = S^2 C g={g}"), &sym2(&curve.curve_class())?, &zeta.coeff(2)));
    for n in 0..=8 {
        out.push(equal(format!("sym2(CP^{n}) = Gr(2,{})", n + 2), &sym2(&proj_space(n))?, &grassmann2(n + 2)?));
    }
    for k in 0..=2 * g - 2 {
        out.push(curve.serre_symmetric_check(k)?);
    }
    Ok(out)
}

/// Chamber walk against the closed-form pair generating function and the pair Poincare formula.
pub fn pairs_suite(curve: &Curve) -> Result<Vec<Report>> {
    let g = curve.genus();
    let closed = pair_genfun_motivic(curve, 7)?;
    let mut out = Vec::new();
    for n in 0..7 {
        let d = 2 * n as i64 + 1;
        out.push(equal(format!("pair walk = closed form g={g} d={d}"), &pair_motive(curve, d, 0)?, &closed.coeff(n)));
    }
    for d in 1..=13 {
        let p = pvir(&pair_motive(curve, d, 0)?, pair_dimension(curve, d))?;
        out.push(equal(format!("pair Poincare g={g} d={d}"), &p, &pair_poincare(curve, d)?));
    }
    Ok(out)
}

/// `F^mot` direct sum against its closed form.
pub fn fmot_suite(curve: &Curve, order: usize) -> Result<Vec<Report>> {
    let g = curve.genus();
    let direct = fmot(curve, order, Mode::Direct)?;
    let closed = fmot(curve, order, Mode::Closed)?;
    Ok(vec![series_equal(format!("F^mot direct = closed g={g} order={order}"), &direct, &closed)])
}

fn series_equal(name: String, a: &crate::ring::QSeries, b: &crate::ring::QSeries) -> Report {
    for k in 0..a.order().max(b.order()) {
        if a.coeff(k) != b.coeff(k) {
            return Report::fail(name, format!("q^{k}: {} vs {}", a.coeff(k), b.coeff(k)));
        }
    }
    Report::pass(name)
}

/// `2(1 - t^2) F^vir` direct against the cleared closed form.
pub fn fvir_suite(curve: &Curve, order: usize) -> Result<Vec<Report>> {
    let g = curve.genus();
    let direct = fvir(curve, order, Mode::Direct)?.scale(&clearing_factor());
    let closed = fvir_cleared_closed(curve, order)?;
    Ok(vec![series_equal(format!("2(1-t^2) F^vir direct = closed g={g} order={order}"), &direct, &closed)])
}

/// Polynomiality, palindromy and the values at `q = 1` of `Q^vir`, `Q^mot` and `V`.
pub fn qvir_suite(curve: &Curve, order: usize) -> Result<Vec<Report>> {
    let g = curve.genus();
    let n = (8 * g - 4) as usize;
    let one_plus_t2 = LaurentPoly::one() + LaurentPoly::tpow(2);
    let p_higgs = higgs_poincare(curve)?;
    let q = qvir(curve, order)?;
    let odd_only = q.coeffs().iter().enumerate().all(|(k, c)| k % 2 == 1 || c.is_zero());
    let mut out = vec![
        Report::pass(format!("Q^vir vanishes above q^{} g={g}", n - 1)),
        check(format!("Q^vir has only odd q-degrees g={g}"), odd_only, || "even coefficient".into()),
        check(format!("Q^vir palindromic g={g}"), is_palindromic(&q, n), || "palindrome fails".into()),
        equal(format!("Q^vir(1,t) = (1+t^2) P(M^(2,1)) g={g}"), &value_at_one(&q), &(&one_plus_t2 * &p_higgs)),
    ];
    let (higgs, _) = higgs_motive_extract(curve)?;
    let qm = qmot(curve, order)?;
    let one_plus_l = LaurentPoly::one() + LaurentPoly::lefschetz();
    out.push(equal(format!("Q^mot(1) = (1+L)[M^(2,1)] g={g}"), &value_at_one(&qm), &(one_plus_l * higgs)));
    let v = v_polynomial(curve, order)?;
    out.push(equal(format!("V(1,t) = (1+t^2) P(M^(2,1)) g={g}"), &value_at_one(&v), &(&one_plus_t2 * &p_higgs)));
    out.push(check(format!("V palindromic g={g}"), is_palindromic(&v, n), || "palindrome fails".into()));
    let ph = ph_polynomial(curve)?;
    out.push(check(format!("PH functional equation g={g}"), is_palindromic(&ph, n - 2), || {
        "palindrome fails".into()
    }));
    Ok(out)
}

/// Range agreement of `F^vir` and `G`, and the extraction of `[M^{2,1}]`.
pub fn compare_suite(curve: &Curve, order: usize) -> Result<Vec<Report>> {
    let g = curve.genus();
    let (higgs, report) = higgs_motive_extract(curve)?;
    let p = pvir(&higgs, 8 * g - 6)?;
    let h = value_at_one(&char_variety_mixed_hodge(curve, (8 * g - 5) as usize)?);
    Ok(vec![
        compare_f_g(curve, order)?,
        report,
        equal(format!("P^vir([M^(2,1)]) = H(M_B,1,t) g={g}"), &p, &h),
    ])
}

/// CKS weight examples and the banana/rose congruences.
pub fn cks_suite(curve: &Curve) -> Result<Vec<Report>> {
    let g = curve.genus();
    let w = LaurentPoly::var(Var::W);
    let one = LaurentPoly::one();
    let mut out = vec![
        equal("cks banana(2) n=1".into(), &cks_weight(&Multigraph::banana(2), 1), &(&one - &w)),
        equal("cks rose(2) n=1".into(), &cks_weight(&Multigraph::rose(2), 1), &w.scale(&crate::ring::rat(-2))),
        check("U constant term".into(), u_series(&Multigraph::banana(3), 2).coeff(0) == one, || "not 1".into()),
    ];
    let pairs: Vec<(i64, i64)> = [(g, 2), (g, 3)]
        .into_iter()
        .filter(|&(g, r)| (r - 1) * (2 * g - 2) <= 12)
        .collect();
    for (gg, r) in pairs {
        out.push(ratcurve_check(gg, r)?);
    }
    Ok(out)
}

/// Low-degree limit of the poles variant and the top-class invariant.
pub fn poles_suite(curve: &Curve) -> Result<Vec<Report>> {
    let g = curve.genus();
    let mut out = Vec::new();
    for d in [0, 1] {
        out.push(poles_limit_check(curve, d, 6, 12)?);
    }
    for gamma in 1..=3 {
        for d in -2 * g..=3 {
            let m = poles_motive(curve, d, gamma, Regime::Eps)?;
            let dim = poles_dimension(curve, d, gamma);
            let name = format!("poles eps smooth invariants g={g} d={d} gamma={gamma}");
            if d < 2 - 2 * g - gamma {
                out.push(check(name, m.is_zero(), || format!("expected empty, got {m}")));
            } else {
                out.push(check(name, top_is_monic(&m, dim) && pvir_is_effective(&m, dim), || m.to_string()));
            }
        }
    }
    Ok(out)
}

/// Last-chamber decomposition, structural invariants and even-degree validation.
pub fn minfty_suite(curve: &Curve) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for d in [-3, -1, 1, 3, 5] {
        out.push(b_sum_check(curve, d)?);
    }
    out.extend(structural_reports(curve)?);
    out.extend(even_degree_reports(curve)?);
    Ok(out)
}

/// Top class and effectivity of smooth motives; chamber independence for `d < 0`.
pub fn structural_reports(curve: &Curve) -> Result<Vec<Report>> {
    let g = curve.genus();
    let mut out = Vec::new();
    for d in 2 - 2 * g..0 {
        let eps = triple_motive_eps(curve, d)?;
        let dim = triple_dimension(curve, d);
        out.push(check(format!("smooth invariants g={g} d={d}"), top_is_monic(&eps, dim) && pvir_is_effective(&eps, dim), || {
            eps.to_string()
        }));
        let inf = triple_motive_chamber(curve, d, 5)?;
        out.push(equal(format!("chamber independence g={g} d={d}"), &eps, &inf));
    }
    let mut d = 4 * g - 3;
    while d <= 4 * g + 1 {
        let eps = triple_motive_eps(curve, d)?;
        let dim = triple_dimension(curve, d);
        out.push(check(format!("smooth invariants g={g} d={d}"), top_is_monic(&eps, dim) && pvir_is_effective(&eps, dim), || {
            eps.to_string()
        }));
        d += 2;
    }
    out.push(check(format!("empty below 2-2g g={g}"), triple_motive_eps(curve, 1 - 2 * g)?.is_zero(), || {
        "nonzero".into()
    }));
    Ok(out)
}

/// Even-degree assembly: top class, integrality in the last chamber and the stratified form.
pub fn even_degree_reports(curve: &Curve) -> Result<Vec<Report>> {
    let g = curve.genus();
    let mut out = Vec::new();
    for d in [0, 2, 4] {
        let eps = triple_motive_eps(curve, d)?;
        let dim = triple_dimension(curve, d);
        let inf = triple_motive_infinity(curve, d)?;
        out.push(check(format!("even degree top class g={g} d={d}"), top_is_monic(&eps, dim), || eps.to_string()));
        let p_inf = pvir(&inf, dim)?;
        out.push(check(
            format!("even degree last chamber integral g={g} d={d}"),
            top_is_monic(&inf, dim) && p_inf.is_integral(),
            || p_inf.to_string(),
        ));
        out.push(equal(format!("even degree stratified form g={g} d={d}"), &eps, &even_preliminary(curve, d)?));
    }
    Ok(out)
}

/// `L^(4g-3)([M_pairs] - [M_ss]) + sum_{I1} [F^{1+}] + sum_{I2 minus (d/2,d/2)} cells + [X1] + [X2]`.
pub fn even_preliminary(curve: &Curve, d: i64) -> Result<LaurentPoly> {
    let g = curve.genus();
    let strata = even_strata(curve, d)?;
    let mut m = (pair_motive(curve, d, 0)? - &strata.m_ss).mul_l(4 * g - 3) + strata.x1 + strata.x2;
    if d >= 2 {
        for p in index_set(curve, d, IndexKind::EvenType1)? {
            m += attract_type1(curve, p.d1, p.d2)?;
        }
    }
    for p in index_set(curve, d, IndexKind::EvenType2)? {
        if p.d1 != p.d2 {
            m += split_cell(curve, p.d1, p.d2);
        }
    }
    Ok(m)
}

/// Runs one suite for genus `g` at the given truncation order.
pub fn run_suite(suite: Suite, curve: &Curve, order: usize) -> Result<Vec<Report>> {
    match suite {
        Suite::Macdonald => macdonald_suite(curve),
        Suite::Pairs => pairs_suite(curve),
        Suite::Fmot => fmot_suite(curve, order),
        Suite::Fvir => fvir_suite(curve, order),
        Suite::Qvir => qvir_suite(curve, order),
        Suite::Compare => compare_suite(curve, order),
        Suite::Cks => cks_suite(curve),
        Suite::Poles => poles_suite(curve),
        Suite::Minfty => minfty_suite(curve),
        Suite::All => {
            let results = parallel::map(Suite::CONCRETE.to_vec(), |s| run_suite(s, curve, order));
            let mut out = Vec::new();
            for r in results {
                out.extend(r?);
            }
            Ok(out)
        }
    }
}

/// Number of acceptance criteria.
pub const CRITERIA: usize = 13;

/// Short title of acceptance criterion `n` (1-based).
pub fn criterion_title(n: usize) -> &'static str {
    match n {
        1 => "Macdonald formula",
        2 => "symmetric square oracles",
        3 => "Bradlow pairs walk and Poincare formula",
        4 => "F^mot direct equals closed form",
        5 => "F^vir direct equals closed form",
        6 => "Q^vir polynomiality, palindromy and value at q=1",
        7 => "Higgs motive extraction",
        8 => "F^vir and G agree on the outer ranges",
        9 => "CKS congruence",
        10 => "poles limit",
        11 => "last-chamber decomposition",
        12 => "structural invariants",
        13 => "even-degree validation",
        _ => "unknown",
    }
}

fn per_genus(f: impl Fn(&Curve) -> Result<Vec<Report>> + Sync) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for g in [2, 3] {
        out.extend(f(&Curve::new(g)?)?);
    }
    Ok(out)
}

/// Runs acceptance criterion `n` (1-based) and returns its individual checks.
pub fn criterion(n: usize) -> Result<Vec<Report>> {
    match n {
        1 => per_genus(|c| Ok(vec![c.macdonald_check(21)?])),
        2 => per_genus(|c| {
            let mut r = macdonald_suite(c)?;
            r.retain(|x| x.name.starts_with("sym2"));
            Ok(r)
        }),
        3 => per_genus(pairs_suite),
        4 => per_genus(|c| fmot_suite(c, default_order(c))),
        5 => per_genus(|c| fvir_suite(c, default_order(c))),
        6 => per_genus(|c| {
            let mut r = qvir_suite(c, default_order(c))?;
            r.retain(|x| x.name.starts_with("Q^vir"));
            Ok(r)
        }),
        7 => per_genus(|c| {
            let mut r = compare_suite(c, default_order(c))?;
            r.remove(0);
            Ok(r)
        }),
        8 => per_genus(|c| Ok(vec![compare_f_g(c, default_order(c))?])),
        9 => [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3)]
            .into_iter()
            .map(|(r, g)| ratcurve_check(g, r))
            .collect(),
        10 => {
            let c = Curve::new(2)?;
            [0, 1].into_iter().map(|d| poles_limit_check(&c, d, 6, 12)).collect()
        }
        11 => {
            let c = Curve::new(2)?;
            [1, 3, 5].into_iter().map(|d| b_sum_check(&c, d)).collect()
        }
        12 => per_genus(|c| {
            let mut r = structural_reports(c)?;
            r.extend(poles_suite(c)?.into_iter().filter(|x| x.name.starts_with("poles eps")));
            Ok(r)
        }),
        13 => even_degree_reports(&Curve::new(2)?),
        _ => Err(Error::InvalidArgument(format!("criteria are numbered 1 to {CRITERIA}, got {n}"))),
    }
}

/// Collapses the checks of criterion `n` into a single report.
pub fn criterion_report(n: usize) -> Report {
    let name = format!("criterion {n:>2} {}", criterion_title(n));
    match criterion(n) {
        Ok(reports) => match reports.iter().find(|r| !r.passed) {
            None => Report::pass_with(name, format!("{} checks", reports.len())),
            Some(bad) => Report::fail(name, format!("{}: {}", bad.name, bad.detail.clone().unwrap_or_default())),
        },
        Err(e) => Report::fail(name, e.to_string()),
    }
}
