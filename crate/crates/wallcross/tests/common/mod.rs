//! Brute-force reference computations used as oracles by the integration tests.
//!
//! Every helper here avoids the library routine it is compared against: series
//! are multiplied by naive convolution, Grassmannians are counted by Schubert
//! cells and graph Betti numbers come from a depth-first search.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};
use wallcross::ring::{LaurentPoly, Var};

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn x() -> LaurentPoly {
    LaurentPoly::var(Var::X)
}

pub fn y() -> LaurentPoly {
    LaurentPoly::var(Var::Y)
}

pub fn t(k: i64) -> LaurentPoly {
    LaurentPoly::tpow(k)
}

pub fn w() -> LaurentPoly {
    LaurentPoly::var(Var::W)
}

pub fn l(k: i64) -> LaurentPoly {
    LaurentPoly::lpow(k)
}

pub fn c(n: i64) -> LaurentPoly {
    LaurentPoly::int(n)
}

/// Product of two truncated coefficient lists.
pub fn convolve(a: &[LaurentPoly], b: &[LaurentPoly], order: usize) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); order];
    for (i, ai) in a.iter().enumerate().take(order) {
        for (j, bj) in b.iter().enumerate().take(order - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Coefficients of `1 / (1 - c u^k)` up to `order`.
pub fn geometric(c: &LaurentPoly, k: usize, order: usize) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); order];
    let mut power = LaurentPoly::one();
    let mut i = 0;
    while i < order {
        out[i] = power.clone();
        power = &power * c;
        i += k;
    }
    out
}

/// Coefficients of `(1 + c u^k)^n` up to `order`.
pub fn binomial_poly(c: &LaurentPoly, k: usize, n: u32, order: usize) -> Vec<LaurentPoly> {
    let mut base = vec![LaurentPoly::zero(); order];
    base[0] = LaurentPoly::one();
    if k < order {
        base[k] = c.clone();
    }
    let mut out = vec![LaurentPoly::zero(); order];
    out[0] = LaurentPoly::one();
    for _ in 0..n {
        out = convolve(&out, &base, order);
    }
    out
}

/// `Z(C, u) = (1 - xu)^g (1 - yu)^g / ((1 - u)(1 - xy u))` by naive convolution.
pub fn zeta(g: u32, order: usize) -> Vec<LaurentPoly> {
    let num = convolve(
        &binomial_poly(&-x(), 1, g, order),
        &binomial_poly(&-y(), 1, g, order),
        order,
    );
    let den = convolve(&geometric(&LaurentPoly::one(), 1, order), &geometric(&l(1), 1, order), order);
    convolve(&num, &den, order)
}

/// `E(Gr(2, n))` as a sum over Schubert cells `{i < j}` of dimension `i + j - 1`.
pub fn grassmann2_cells(n: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for j in 0..n {
        for i in 0..j {
            out += l(i + j - 1);
        }
    }
    out
}

/// `t^(2 dim) E(-1/t, -1/t)` by walking the terms directly.
pub fn pvir_direct(e: &LaurentPoly, dim: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (exp, coeff) in e.terms() {
        let (a, b) = (exp[0] as i64, exp[1] as i64);
        let sign = if (a + b) % 2 == 0 { int(1) } else { int(-1) };
        out += t(2 * dim - a - b).scale(&(sign * coeff)) * t(exp[2] as i64);
    }
    out
}

/// Number of connected components of a multigraph after deleting `removed`, by depth-first search.
pub fn components_dfs(vertices: usize, edges: &[(usize, usize)], removed: u64) -> usize {
    let mut adj = vec![Vec::new(); vertices];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if removed >> i & 1 == 0 {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut seen = vec![false; vertices];
    let mut count = 0;
    for s in 0..vertices {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    count
}

/// `[CKS^n[-n]]` by enumerating every edge subset of size at most `n` and
/// reading `wedge^k(Q^b + L^b)` off the product `(1 + z)^b (1 + wz)^b`.
pub fn cks_brute(vertices: usize, edges: &[(usize, usize)], n: usize) -> LaurentPoly {
    let e = edges.len();
    let mut out = LaurentPoly::zero();
    for mask in 0u64..(1u64 << e) {
        let i = mask.count_ones() as usize;
        if i > n {
            continue;
        }
        let b = e - i + components_dfs(vertices, edges, mask) - vertices;
        let k = n - i;
        let wedge = convolve(
            &binomial_poly(&LaurentPoly::one(), 1, b as u32, k + 1),
            &binomial_poly(&w(), 1, b as u32, k + 1),
            k + 1,
        )[k]
            .clone();
        if (n + i) % 2 == 1 {
            out -= wedge;
        } else {
            out += wedge;
        }
    }
    out
}

/// `true` when the coefficient is exactly one.
pub fn is_one(c: &BigRational) -> bool {
    c.is_one()
}

/// `true` when the coefficient is exactly zero.
pub fn is_zero(c: &BigRational) -> bool {
    c.is_zero()
}
