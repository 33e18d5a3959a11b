//! Generalized q-Kneser graphs `K_q(n,k,t)`: construction, independence
//! number, duality, the counting inequalities of the lower-bound argument,
//! and the verdict on which known result determines the treewidth.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::gf::{is_prime_power, FieldElement, FieldSpec};
use crate::graph::{BitSet, Graph, VertexLabel};
use crate::qbinom::{epsilon, gauss_binom, gauss_or_zero, CountingParabola};
use crate::report::{rat_string, ser_nat, ser_nats, ser_rat, CaseRecord};
use crate::subspace::{enumerate_k_subspaces_capped, PackedBasis, Subspace};

/// Default cap on the number of vertices of a materialized graph
/// (dense adjacency needs `n^2 / 8` bytes).
pub const DEFAULT_GRAPH_CAP: u64 = 40_000;

/// Parameters of `K_q(n,k,t)`: `k > t >= 1`, `n > 2k - t`, `q` a prime power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KneserParams {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub t: usize,
}

impl fmt::Display for KneserParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{}({},{},{})", self.q, self.n, self.k, self.t)
    }
}

impl KneserParams {
    pub fn new(q: u64, n: usize, k: usize, t: usize) -> Result<Self> {
        if !is_prime_power(q) {
            return Err(Error::NotAPrimePower(q));
        }
        if t == 0 || t >= k {
            return Err(Error::InvalidParams(format!("need k > t >= 1, got k = {k}, t = {t}")));
        }
        if n + t <= 2 * k {
            return Err(Error::InvalidParams(format!("need n > 2k - t, got n = {n}, k = {k}, t = {t}")));
        }
        Ok(KneserParams { q, n, k, t })
    }

    pub fn field(&self) -> Result<Arc<FieldSpec>> {
        Ok(Arc::new(FieldSpec::new(self.q)?))
    }

    pub fn vertex_count(&self) -> BigUint {
        gauss_or_zero(self.n as i64, self.k as i64, self.q)
    }

    /// `K_q(n, n-k, n-2k+t)`, isomorphic via orthogonal complements.
    pub fn dual(&self) -> Result<KneserParams> {
        let t = self.n as i64 - 2 * self.k as i64 + self.t as i64;
        if t < 1 {
            return Err(Error::InvalidDualParams(t));
        }
        KneserParams::new(self.q, self.n, self.n - self.k, t as usize)
    }

    /// The parameters with `n >= 2k`: `self`, or its dual when `n < 2k`.
    pub fn reduced(&self) -> KneserParams {
        if self.n >= 2 * self.k {
            *self
        } else {
            self.dual().expect("n > 2k - t makes the dual valid")
        }
    }
}

/// Builds `K_q(n,k,t)` with vertices in the order of
/// [`crate::subspace::enumerate_k_subspaces`].
pub fn build_kneser_graph(p: &KneserParams) -> Result<Graph> {
    build_kneser_graph_capped(p, DEFAULT_GRAPH_CAP)
}

pub fn build_kneser_graph_capped(p: &KneserParams, cap: u64) -> Result<Graph> {
    let field = p.field()?;
    let vertices = enumerate_k_subspaces_capped(p.n, p.k, &field, cap)?;
    Ok(graph_on_subspaces(&field, vertices, p.t))
}

/// Graph on `vertices` with `U ~ V` iff `dim(U ∩ V) < t`.
pub(crate) fn graph_on_subspaces(field: &FieldSpec, vertices: Vec<Subspace>, t: usize) -> Graph {
    let packed: Vec<PackedBasis> = vertices.iter().map(Subspace::packed).collect();
    let n = vertices.len();
    let rows: Vec<BitSet> = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut row = BitSet::new(n);
            for v in 0..n {
                if u != v && packed[u].intersect_dim(&packed[v], field) < t {
                    row.insert(v);
                }
            }
            row
        })
        .collect();
    let labels = vertices.into_iter().map(VertexLabel::Subspace).collect();
    Graph::from_rows(rows, labels)
}

/// `α(K_q(n,k,t)) = max{[n-t, k-t], [2k-t, k-t]}`.
pub fn alpha_value(p: &KneserParams) -> BigUint {
    let (n, k, t) = (p.n as i64, p.k as i64, p.t as i64);
    gauss_or_zero(n - t, k - t, p.q).max(gauss_or_zero(2 * k - t, k - t, p.q))
}

/// A maximum independent set: the `k`-spaces through `span{e_1..e_t}` when
/// `n >= 2k`, otherwise the `k`-spaces inside `span{e_1..e_{2k-t}}`.
pub fn star_independent_set(p: &KneserParams) -> Result<Vec<Subspace>> {
    let field = p.field()?;
    let (n, k, t) = (p.n, p.k, p.t);
    let mut out: Vec<Subspace> = if n >= 2 * k {
        // K ⊇ T = span{e_1..e_t} is T ⊕ (K ∩ span{e_{t+1}..e_n})
        let tails = enumerate_k_subspaces_capped(n - t, k - t, &field, u64::MAX)?;
        tails
            .iter()
            .map(|w| {
                let mut rows: Vec<Vec<FieldElement>> = (0..t)
                    .map(|i| (0..n).map(|j| if i == j { FieldElement::ONE } else { FieldElement::ZERO }).collect())
                    .collect();
                for r in w.rows() {
                    let mut row = vec![FieldElement::ZERO; t];
                    row.extend_from_slice(r);
                    rows.push(row);
                }
                Subspace::span(&field, n, &rows)
            })
            .collect::<Result<_>>()?
    } else {
        let m = 2 * k - t;
        let inner = enumerate_k_subspaces_capped(m, k, &field, u64::MAX)?;
        inner
            .iter()
            .map(|w| {
                let rows: Vec<Vec<FieldElement>> = w
                    .rows()
                    .map(|r| {
                        let mut row = r.to_vec();
                        row.resize(n, FieldElement::ZERO);
                        row
                    })
                    .collect();
                Subspace::span(&field, n, &rows)
            })
            .collect::<Result<_>>()?
    };
    out.sort_unstable();
    Ok(out)
}

/// Vertex indices of [`star_independent_set`] in a graph built by
/// [`build_kneser_graph`], ascending.
pub fn star_independent_vertices(g: &Graph, p: &KneserParams) -> Result<Vec<usize>> {
    let index = g.label_index();
    let mut out = star_independent_set(p)?
        .into_iter()
        .map(|s| {
            index
                .get(&VertexLabel::Subspace(s.clone()))
                .copied()
                .ok_or_else(|| Error::InvalidArgs(format!("subspace {s} is not a vertex of the graph")))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    Ok(out)
}

/// Number of `k`-subspaces meeting a fixed `k`-subspace in each dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntersectionProfile {
    pub params: KneserParams,
    /// `counts[j] = [k,j] [n-k,k-j] q^((k-j)^2)`.
    #[serde(serialize_with = "ser_nats")]
    pub counts: Vec<BigUint>,
    #[serde(serialize_with = "ser_nat")]
    pub total: BigUint,
    /// `Σ_{j<t} counts[j]`, the common degree.
    #[serde(serialize_with = "ser_nat")]
    pub degree: BigUint,
    #[serde(serialize_with = "ser_nat")]
    pub alpha: BigUint,
    /// `degree <= [n,k] - α - 1`.
    pub degree_bound_holds: bool,
}

pub fn intersection_profile(p: &KneserParams) -> IntersectionProfile {
    let (n, k, q) = (p.n as i64, p.k as i64, p.q);
    let counts: Vec<BigUint> = (0..=k)
        .map(|j| gauss_or_zero(k, j, q) * gauss_or_zero(n - k, k - j, q) * BigUint::from(q).pow(((k - j) * (k - j)) as u32))
        .collect();
    let total: BigUint = counts.iter().sum();
    let degree: BigUint = counts[..p.t].iter().sum();
    let alpha = alpha_value(p);
    let degree_bound_holds = &degree + &alpha < total;
    IntersectionProfile { params: *p, counts, total, degree, alpha, degree_bound_holds }
}

/// Ordered pairs `(U, V)` of `vertices` (including `U = V`) counted by `dim(U ∩ V)`.
pub fn intersection_census(vertices: &[Subspace]) -> Result<Vec<u64>> {
    let Some(first) = vertices.first() else {
        return Ok(Vec::new());
    };
    let field = first.field().clone();
    let k = vertices.iter().map(Subspace::dim).max().unwrap_or(0);
    let packed: Vec<PackedBasis> = vertices.iter().map(Subspace::packed).collect();
    for v in vertices {
        if v.n() != first.n() || v.field().q() != field.q() {
            return Err(Error::AmbientMismatch);
        }
    }
    Ok(packed
        .par_iter()
        .map(|u| {
            let mut row = vec![0u64; k + 1];
            for v in &packed {
                row[u.intersect_dim(v, &field)] += 1;
            }
            row
        })
        .reduce(|| vec![0u64; k + 1], |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect()))
}

/// Outcome of checking `U ↦ U⊥` as an isomorphism `K_q(n,k,t) → K_q(n,n-k,n-2k+t)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualityReport {
    pub params: KneserParams,
    pub dual: KneserParams,
    pub vertices: usize,
    pub bijective: bool,
    pub pairs_checked: u64,
    pub mismatches: u64,
    pub pass: bool,
    /// `map[i]` is the dual-graph index of the complement of vertex `i`.
    #[serde(skip)]
    pub map: Vec<usize>,
}

pub fn duality_isomorphism(p: &KneserParams) -> Result<DualityReport> {
    let dual = p.dual()?;
    let g = build_kneser_graph(p)?;
    let h = build_kneser_graph(&dual)?;
    let index = h.label_index();
    let mut map = Vec::with_capacity(g.vertex_count());
    let mut hit = vec![false; h.vertex_count()];
    let mut bijective = g.vertex_count() == h.vertex_count();
    for label in g.labels() {
        let VertexLabel::Subspace(u) = label else { unreachable!("Kneser vertices are subspaces") };
        match index.get(&VertexLabel::Subspace(u.orthogonal_complement())) {
            Some(&j) => {
                bijective &= !hit[j];
                hit[j] = true;
                map.push(j);
            }
            None => {
                bijective = false;
                map.push(usize::MAX);
            }
        }
    }
    let n = g.vertex_count();
    let (mut pairs, mut mismatches) = (0u64, 0u64);
    if bijective {
        for u in 0..n {
            for v in u + 1..n {
                pairs += 1;
                if g.has_edge(u, v) != h.has_edge(map[u], map[v]) {
                    mismatches += 1;
                }
            }
        }
    }
    let pass = bijective && mismatches == 0;
    Ok(DualityReport { params: *p, dual, vertices: n, bijective, pairs_checked: pairs, mismatches, pass, map })
}

/// Counts pairs `(T1, T2)` of `t`-subspaces `T1 ⊆ K1`, `T2 ⊆ K2` by `dim(T1 ∩ T2)`.
pub fn pair_census(k1: &Subspace, k2: &Subspace, t: usize) -> Result<Vec<u64>> {
    let ones = k1.subspaces_of_dim(t)?;
    let twos = k2.subspaces_of_dim(t)?;
    Ok(pair_census_of(&ones, &twos, t))
}

fn pair_census_of(ones: &[Subspace], twos: &[Subspace], t: usize) -> Vec<u64> {
    let mut counts = vec![0u64; t + 1];
    if let Some(first) = ones.first() {
        let field = first.field().clone();
        let b: Vec<PackedBasis> = twos.iter().map(Subspace::packed).collect();
        for u in ones.iter().map(Subspace::packed) {
            for v in &b {
                counts[u.intersect_dim(v, &field)] += 1;
            }
        }
    }
    counts
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairCountReport {
    pub k: usize,
    pub s: usize,
    pub t: usize,
    pub i: usize,
    pub count: u64,
    /// `[s,i] [k-i,t-i]^2`.
    #[serde(serialize_with = "ser_nat")]
    pub bound: BigUint,
    pub holds: bool,
}

impl PairCountReport {
    pub fn case(&self) -> CaseRecord {
        CaseRecord::new(
            "pair-count",
            json!({"k": self.k, "s": self.s, "t": self.t, "i": self.i}),
            self.count,
            &self.bound,
            self.holds,
        )
    }
}

fn pair_bound(k: usize, s: usize, t: usize, i: usize, q: u64) -> BigUint {
    let (k, s, t, i) = (k as i64, s as i64, t as i64, i as i64);
    let g = gauss_or_zero(k - i, t - i, q);
    gauss_or_zero(s, i, q) * &g * &g
}

/// Brute-force count of `t`-subspace pairs of `K1 × K2` meeting in dimension
/// `i`, against the bound `[s,i] [k-i,t-i]^2` where `s = dim(K1 ∩ K2)`.
pub fn pair_count_check(k1: &Subspace, k2: &Subspace, t: usize, i: usize) -> Result<PairCountReport> {
    let k = k1.dim();
    if k2.dim() != k {
        return Err(Error::InvalidDims(format!("dim K1 = {k} but dim K2 = {}", k2.dim())));
    }
    let s = k1.intersect_dim(k2)?;
    if i > s {
        return Err(Error::InvalidDims(format!("i = {i} exceeds s = {s}")));
    }
    if t > k {
        return Err(Error::InvalidDims(format!("t = {t} exceeds k = {k}")));
    }
    let census = pair_census(k1, k2, t)?;
    let count = census.get(i).copied().unwrap_or(0);
    let bound = pair_bound(k, s, t, i, k1.field().q() as u64);
    let holds = BigUint::from(count) <= bound;
    Ok(PairCountReport { k, s, t, i, count, bound, holds })
}

/// Every `(K1, K2, t, i)` case over all pairs of `k`-subspaces of `F_q^n`.
pub fn pair_count_sweep(q: u64, n: usize, k: usize) -> Result<Vec<PairCountReport>> {
    let field = Arc::new(FieldSpec::new(q)?);
    let spaces = crate::subspace::enumerate_k_subspaces(n, k, &field)?;
    let mut out = Vec::new();
    for t in 0..=k {
        let subs: Vec<Vec<Subspace>> = spaces.iter().map(|s| s.subspaces_of_dim(t)).collect::<Result<_>>()?;
        let packed: Vec<PackedBasis> = spaces.iter().map(Subspace::packed).collect();
        let rows: Vec<Vec<PairCountReport>> = (0..spaces.len())
            .into_par_iter()
            .map(|a| {
                let mut rows = Vec::new();
                for b in 0..spaces.len() {
                    let s = packed[a].intersect_dim(&packed[b], &field);
                    let census = pair_census_of(&subs[a], &subs[b], t);
                    for i in 0..=s {
                        let count = census.get(i).copied().unwrap_or(0);
                        let bound = pair_bound(k, s, t, i, q);
                        let holds = BigUint::from(count) <= bound;
                        rows.push(PairCountReport { k, s, t, i, count, bound, holds });
                    }
                }
                rows
            })
            .collect();
        out.extend(rows.into_iter().flatten());
    }
    Ok(out)
}

/// Known results that can pin the treewidth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ResultTag {
    /// `t <= ε(q)` and `n > 3k - 2t + ε(q)`.
    Main1Case1,
    /// `t > ε(q)` and `n > 3k - t + 1 - 2 sqrt(t - ε(q))`.
    Main1Case2,
    /// `n >= 3k - t + 9`.
    Cor1,
    /// `q >= 9` and `t > k + 3 - 2 sqrt(k + 2)`.
    Cor2,
    /// `n >= 2t(k - t + 1) + k + 1`.
    CaoLiuLuLv,
    /// `(n,k,t) = (4,2,1)`, treewidth `|V| - (q^2 + q + 2)`.
    K421Theorem,
    /// No result applies; the formula is only an upper bound.
    UpperBoundOnly,
}

impl ResultTag {
    pub fn name(self) -> &'static str {
        match self {
            ResultTag::Main1Case1 => "MAIN1_CASE1",
            ResultTag::Main1Case2 => "MAIN1_CASE2",
            ResultTag::Cor1 => "COR1",
            ResultTag::Cor2 => "COR2",
            ResultTag::CaoLiuLuLv => "CAO_LIU_LU_LV",
            ResultTag::K421Theorem => "K421_THEOREM",
            ResultTag::UpperBoundOnly => "UPPER_BOUND_ONLY",
        }
    }
}

/// `n > a - 2 sqrt(x)` for `x >= 0`, decided in integers: with `d = a - n`,
/// true when `d < 0`, else iff `d^2 < 4x`.
pub fn exceeds_minus_two_sqrt(n: i64, a: i64, x: i64) -> bool {
    let d = a - n;
    d < 0 || d * d < 4 * x
}

/// Which results determine `tw(K_q(n,k,t))`, and the value they give.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub params: KneserParams,
    /// Parameters after reflecting `n < 2k` instances through duality.
    pub reflected_params: Option<KneserParams>,
    /// `[n,k]_q - [n-t,k-t]_q - 1` in the (reflected) coordinates with `n >= 2k`.
    #[serde(serialize_with = "ser_nat")]
    pub formula_value: BigUint,
    pub applicable: BTreeSet<ResultTag>,
    #[serde(serialize_with = "ser_nat")]
    pub alpha: BigUint,
    /// `|V| - α - 1`, valid for every instance.
    #[serde(serialize_with = "ser_nat")]
    pub upper_bound: BigUint,
    pub notes: Vec<String>,
}

impl TheoremVerdict {
    pub fn has(&self, tag: ResultTag) -> bool {
        self.applicable.contains(&tag)
    }

    /// Whether the main theorem applies (either case).
    pub fn in_main_range(&self) -> bool {
        self.has(ResultTag::Main1Case1) || self.has(ResultTag::Main1Case2)
    }

    /// Whether some result pins the treewidth to `formula_value`.
    pub fn determines_treewidth(&self) -> bool {
        !self.has(ResultTag::UpperBoundOnly)
    }

    /// Effective parameters (`n >= 2k`).
    pub fn effective(&self) -> KneserParams {
        self.reflected_params.unwrap_or(self.params)
    }
}

pub fn theorem_verdict(p: &KneserParams) -> TheoremVerdict {
    let e = p.reduced();
    let reflected_params = (e != *p).then_some(e);
    let (q, n, k, t) = (e.q, e.n as i64, e.k as i64, e.t as i64);
    let eps = epsilon(q) as i64;
    let total = gauss_or_zero(n, k, q);
    let alpha = alpha_value(&e);
    let formula_value = &total - &alpha - BigUint::one();

    let mut applicable = BTreeSet::new();
    if t <= eps && n > 3 * k - 2 * t + eps {
        applicable.insert(ResultTag::Main1Case1);
    }
    if t > eps && exceeds_minus_two_sqrt(n, 3 * k - t + 1, t - eps) {
        applicable.insert(ResultTag::Main1Case2);
    }
    if n >= 3 * k - t + 9 {
        applicable.insert(ResultTag::Cor1);
    }
    // t > k + 3 - 2 sqrt(k + 2), the same shape with n := t
    if q >= 9 && exceeds_minus_two_sqrt(t, k + 3, k + 2) {
        applicable.insert(ResultTag::Cor2);
    }
    if n >= 2 * t * (k - t + 1) + k + 1 {
        applicable.insert(ResultTag::CaoLiuLuLv);
    }
    if (e.n, e.k, e.t) == (4, 2, 1) {
        applicable.insert(ResultTag::K421Theorem);
    }
    let mut notes = Vec::new();
    if let Some(r) = reflected_params {
        notes.push(format!("n < 2k: reflected {p} to {r} through duality"));
    }
    if applicable.is_empty() {
        applicable.insert(ResultTag::UpperBoundOnly);
        notes.push("no known result applies; formula_value is an upper bound only".into());
    } else {
        notes.push("treewidth equals formula_value".into());
    }
    let upper_bound = formula_value.clone();
    TheoremVerdict { params: *p, reflected_params, formula_value, applicable, alpha, upper_bound, notes }
}

/// One value of `s = dim(S1 ∩ S2)` in the counting argument.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountingRow {
    pub s: usize,
    /// `Σ_{i=max(0,2t-k)}^{s} [s,i] [k-i,t-i]^2 [n-2t+i,k-2t+i]`.
    #[serde(serialize_with = "ser_nat")]
    pub lhs: BigUint,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountingReport {
    pub params: KneserParams,
    pub effective: KneserParams,
    /// `[n-t,k-t] / 2`.
    #[serde(serialize_with = "ser_rat")]
    pub rhs: BigRational,
    pub rows: Vec<CountingRow>,
    pub pass: bool,
}

impl CountingReport {
    pub fn cases(&self) -> Vec<CaseRecord> {
        let e = &self.effective;
        self.rows
            .iter()
            .map(|r| {
                CaseRecord::new(
                    "counting",
                    json!({"q": e.q, "n": e.n, "k": e.k, "t": e.t, "s": r.s}),
                    format!("{}/1", r.lhs),
                    rat_string(&self.rhs),
                    r.holds,
                )
            })
            .collect()
    }
}

/// In the main theorem's range, the number of incidences available to a
/// separator component is at most half the independence number; checks
/// this for each `s` in `max(0, 2k-n) ..= t-1`.
pub fn counting_inequality_check(p: &KneserParams) -> Result<CountingReport> {
    let verdict = theorem_verdict(p);
    if !verdict.in_main_range() {
        return Err(Error::OutOfTheoremRange);
    }
    let e = verdict.effective();
    let (q, n, k, t) = (e.q, e.n as i64, e.k as i64, e.t as i64);
    let rhs = BigRational::new(BigInt::from(gauss_binom(n - t, k - t, q)?), BigInt::from(2));
    let i_low = CountingParabola::new(n, k, t).i_max();
    let s_low = (2 * k - n).max(0);
    let rows: Vec<CountingRow> = (s_low..t)
        .map(|s| {
            let lhs: BigUint = (i_low..=s)
                .map(|i| {
                    let g = gauss_or_zero(k - i, t - i, q);
                    gauss_or_zero(s, i, q) * &g * &g * gauss_or_zero(n - 2 * t + i, k - 2 * t + i, q)
                })
                .sum();
            let holds = BigRational::from_integer(BigInt::from(lhs.clone())) <= rhs;
            CountingRow { s: s as usize, lhs, holds }
        })
        .collect();
    let pass = rows.iter().all(|r| r.holds);
    Ok(CountingReport { params: *p, effective: e, rhs, rows, pass })
}

/// Parameters in the main theorem's range, ascending by `(q, k, t, n)`, from
/// `q` in `qs`, `2 <= k <= max_k`, `1 <= t < k`, `2k <= n <= 4k`.
pub fn main_range_sweep(qs: &[u64], max_k: usize) -> Vec<KneserParams> {
    let mut out = Vec::new();
    for &q in qs {
        for k in 2..=max_k {
            for t in 1..k {
                for n in 2 * k..=4 * k {
                    let Ok(p) = KneserParams::new(q, n, k, t) else { continue };
                    if theorem_verdict(&p).in_main_range() {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Every parameter tuple (including `n < 2k`) in the main theorem's range
/// with at most `max_vertices` vertices, ascending by `(q, k, t, n)`.
///
/// The enumeration is complete: `n >= k + 2` forces
/// `[n,k]_q >= [k+2,2]_q > q^(2k)`, which bounds `q` and `k`, and `[n,k]_q`
/// grows with `n`.
pub fn bounded_main_range_tuples(max_vertices: u64) -> Vec<KneserParams> {
    let cap = BigUint::from(max_vertices);
    let mut out = Vec::new();
    let mut q = 2u64;
    while BigUint::from(q).pow(4) <= cap {
        if is_prime_power(q) {
            let mut k = 2usize;
            while BigUint::from(q).pow(2 * k as u32) <= cap {
                for t in 1..k {
                    let mut n = 2 * k - t + 1;
                    while gauss_or_zero(n as i64, k as i64, q) <= cap {
                        let p = KneserParams::new(q, n, k, t).expect("n > 2k - t");
                        if theorem_verdict(&p).in_main_range() {
                            out.push(p);
                        }
                        n += 1;
                    }
                }
                k += 1;
            }
        }
        q += 1;
    }
    out
}
