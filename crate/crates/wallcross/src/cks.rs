//! Weight polynomials of CKS complexes attached to dual graphs of nodal curves.
//!
//! The weight variable `w` stands for the Tate class `L`; the unit class maps to 1.

use std::str::FromStr;

use serde_json::{json, Value};

use crate::blocks::binomial;
use crate::error::{Error, Result};
use crate::parallel;
use crate::report::Report;
use crate::ring::{series_poly, LaurentPoly, QSeries, SeriesVar, Var};

/// A finite multigraph; loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    /// Builds a graph, checking that every endpoint is a vertex.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Multigraph> {
        if vertex_count == 0 {
            return Err(Error::InvalidArgument("a graph needs at least one vertex".into()));
        }
        if let Some(e) = edges.iter().find(|(u, v)| *u >= vertex_count || *v >= vertex_count) {
            return Err(Error::InvalidArgument(format!("edge {e:?} has an endpoint outside 0..{vertex_count}")));
        }
        if edges.len() > 63 {
            return Err(Error::InvalidArgument("at most 63 edges are supported".into()));
        }
        Ok(Multigraph { vertex_count, edges })
    }

    /// Two vertices joined by `k` parallel edges.
    pub fn banana(k: usize) -> Multigraph {
        Multigraph { vertex_count: 2, edges: vec![(0, 1); k] }
    }

    /// One vertex with `k` loops.
    pub fn rose(k: usize) -> Multigraph {
        Multigraph { vertex_count: 1, edges: vec![(0, 0); k] }
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of connected components after deleting the edges in the bit mask `removed`.
    pub fn components(&self, removed: u64) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut count = self.vertex_count;
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if removed >> i & 1 == 1 {
                continue;
            }
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
        count
    }

    /// First Betti number `E' - V + c` of the graph with the edges in `removed` deleted.
    pub fn betti1(&self, removed: u64) -> usize {
        let kept = self.edges.len() - (removed & self.full_mask()).count_ones() as usize;
        kept + self.components(removed) - self.vertex_count
    }

    fn full_mask(&self) -> u64 {
        if self.edges.is_empty() {
            0
        } else {
            u64::MAX >> (64 - self.edges.len())
        }
    }

    /// JSON object `{"vertices":k,"edges":[[u,v],...]}`.
    pub fn to_json(&self) -> Value {
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(u, v)| [u, v]).collect();
        json!({ "vertices": self.vertex_count, "edges": edges })
    }

    /// Parses the representation produced by [`Multigraph::to_json`].
    pub fn from_json(v: &Value) -> Result<Multigraph> {
        let bad = |m: &str| Error::Parse(format!("graph JSON: {m}"));
        let n = v.get("vertices").and_then(Value::as_u64).ok_or_else(|| bad("missing vertices"))? as usize;
        let edges = v
            .get("edges")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing edges"))?
            .iter()
            .map(|e| {
                let pair = e.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("edge must be [u, v]"))?;
                let u = pair[0].as_u64().ok_or_else(|| bad("endpoint not an integer"))? as usize;
                let w = pair[1].as_u64().ok_or_else(|| bad("endpoint not an integer"))? as usize;
                Ok((u, w))
            })
            .collect::<Result<Vec<_>>>()?;
        Multigraph::new(n, edges)
    }
}

impl FromStr for Multigraph {
    type Err = Error;

    /// Accepts `banana:k`, `rose:k` or an inline JSON document.
    fn from_str(s: &str) -> Result<Multigraph> {
        let s = s.trim();
        let count = |rest: &str| -> Result<usize> {
            rest.parse().map_err(|_| Error::Parse(format!("bad edge count in {s:?}")))
        };
        if let Some(rest) = s.strip_prefix("banana:") {
            return Ok(Multigraph::banana(count(rest)?));
        }
        if let Some(rest) = s.strip_prefix("rose:") {
            return Ok(Multigraph::rose(count(rest)?));
        }
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(format!("graph: {e}")))?;
        Multigraph::from_json(&v)
    }
}

/// Calls `f` on every `i`-element subset of `0..n`, encoded as a bit mask.
fn for_each_subset(n: usize, i: usize, f: &mut impl FnMut(u64)) {
    fn rec(start: usize, n: usize, left: usize, mask: u64, f: &mut impl FnMut(u64)) {
        if left == 0 {
            f(mask);
            return;
        }
        for e in start..=n - left {
            rec(e + 1, n, left - 1, mask | 1 << e, f);
        }
    }
    if i <= n {
        rec(0, n, i, 0, f);
    }
}

/// `[wedge^k (Q^b + L^b)] = sum_j C(b, j) C(b, k - j) w^(k - j)`.
fn wedge_class(b: usize, k: usize) -> LaurentPoly {
    let (b, k) = (b as i64, k as i64);
    (0..=k)
        .map(|j| LaurentPoly::monomial([0, 0, 0, (k - j) as i32], binomial(b, j) * binomial(b, k - j)))
        .sum()
}

/// `[CKS^n[-n]] = (-1)^n sum_i (-1)^i sum_{|I| = i} [wedge^(n-i)(H^1(G - I) + H_1(G - I) L)]`.
pub fn cks_weight(graph: &Multigraph, n: usize) -> LaurentPoly {
    let edges = graph.edges.len();
    let mut out = LaurentPoly::zero();
    for i in 0..=n.min(edges) {
        let mut part = LaurentPoly::zero();
        for_each_subset(edges, i, &mut |mask| part += wedge_class(graph.betti1(mask), n - i));
        if (n + i) % 2 == 1 {
            part = -part;
        }
        out += part;
    }
    out
}

/// `true` when deleting any set of at most `n` edges keeps the graph connected.
pub fn never_disconnects(graph: &Multigraph, n: usize) -> bool {
    let base = graph.components(0);
    (0..=n.min(graph.edges.len())).all(|i| {
        let mut ok = true;
        for_each_subset(graph.edges.len(), i, &mut |mask| ok &= graph.components(mask) == base);
        ok
    })
}

/// `U(G) = sum_{n < max_n} [CKS^n[-n]] q^n`.
pub fn u_series(graph: &Multigraph, max_n: usize) -> QSeries {
    let terms: Vec<(usize, LaurentPoly)> =
        parallel::map((0..max_n).collect(), |n| (n, cks_weight(graph, n)));
    series_poly(SeriesVar::Q, max_n, &terms)
}

/// Checks `U(rose(k)) = (1 - q)(1 - qw) U(banana(k)) mod q^k` for `k = (r - 1)(2g - 2)`.
pub fn ratcurve_check(g: i64, r: i64) -> Result<Report> {
    if g < 2 || r < 2 {
        return Err(Error::InvalidArgument(format!("need g >= 2 and r >= 2, got g={g}, r={r}")));
    }
    let k = ((r - 1) * (2 * g - 2)) as usize;
    let name = format!("cks congruence g={g} r={r} edges={k}");
    let rose = u_series(&Multigraph::rose(k), k);
    let banana = u_series(&Multigraph::banana(k), k);
    let q = SeriesVar::Q;
    let one = LaurentPoly::one();
    let w = LaurentPoly::var(Var::W);
    let factor = series_poly(q, k, &[(0, one.clone()), (1, -one)])
        .checked_mul(&series_poly(q, k, &[(0, LaurentPoly::one()), (1, -w)]))?;
    let rhs = factor.checked_mul(&banana)?;
    for n in 0..k {
        if rose.coeff(n) != rhs.coeff(n) {
            return Ok(Report::fail(
                name,
                format!("q^{n}: rose {} vs banana side {}", rose.coeff(n), rhs.coeff(n)),
            ));
        }
    }
    Ok(Report::pass(name))
}
