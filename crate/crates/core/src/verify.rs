//! Named verification suites: each runs one family of checks over a fixed
//! parameter sweep and returns a [`SuiteReport`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::json;

use crate::error::{Error, Result};
use crate::gf::prime_powers_upto;
use crate::kneser::{counting_inequality_check, main_range_sweep, pair_count_sweep, KneserParams};
use crate::qbinom::{bridge_inequality_check, check_gauss_bounds, parabola_tail_check, ParabolaMode, Quadratic};
use crate::quadric::{grid_lemma_search, perp_section_census, verify_klein_isomorphism};
use crate::report::{CaseRecord, SuiteReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    GaussBounds,
    Parabola,
    Bridge,
    PairCount,
    Counting,
    Grid,
    Klein,
    PerpCensus,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::GaussBounds,
        Suite::Parabola,
        Suite::Bridge,
        Suite::PairCount,
        Suite::Counting,
        Suite::Grid,
        Suite::Klein,
        Suite::PerpCensus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GaussBounds => "gauss-bounds",
            Suite::Parabola => "parabola",
            Suite::Bridge => "bridge",
            Suite::PairCount => "pair-count",
            Suite::Counting => "counting",
            Suite::Grid => "grid",
            Suite::Klein => "klein",
            Suite::PerpCensus => "perp-census",
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

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgs(format!("unknown suite '{s}'")))
    }
}

/// Field orders for the Gaussian-binomial bound sweep.
pub const GAUSS_QS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

/// Runs `suite` over its default sweep, or only at field order `q` if given.
pub fn run_suite(suite: Suite, q: Option<u64>) -> Result<SuiteReport> {
    let cases = match suite {
        Suite::GaussBounds => gauss_bounds_cases(&q.map_or(GAUSS_QS.to_vec(), |q| vec![q]), 8)?,
        Suite::Parabola => parabola_cases(&q.map_or(vec![2, 3, 4, 5, 7], |q| vec![q]))?,
        Suite::Bridge => {
            let qs = q.map_or_else(|| prime_powers_upto(64), |q| vec![q]);
            qs.into_iter().map(|q| Ok(bridge_inequality_check(q)?.case())).collect::<Result<_>>()?
        }
        Suite::PairCount => match q {
            None | Some(2) => pair_count_cases(2, 5, 3)?,
            Some(q) => pair_count_cases(q, 4, 2)?,
        },
        Suite::Counting => {
            let qs = q.map_or_else(|| prime_powers_upto(16), |q| vec![q]);
            counting_cases(&main_range_sweep(&qs, 6))?
        }
        Suite::Grid => q
            .map_or(vec![2, 3, 4], |q| vec![q])
            .into_iter()
            .map(|q| Ok(grid_lemma_search(q)?.case()))
            .collect::<Result<_>>()?,
        Suite::Klein => q
            .map_or(vec![2, 3], |q| vec![q])
            .into_iter()
            .map(|q| Ok(verify_klein_isomorphism(q)?.case()))
            .collect::<Result<_>>()?,
        Suite::PerpCensus => {
            let mut cases = Vec::new();
            for q in q.map_or(vec![2, 3], |q| vec![q]) {
                cases.extend(perp_section_census(q)?.cases());
            }
            cases
        }
    };
    Ok(SuiteReport::new(suite.name(), cases))
}

/// Every suite with its default sweep.
pub fn verify_all() -> Result<Vec<SuiteReport>> {
    Suite::ALL.into_iter().map(|s| run_suite(s, None)).collect()
}

/// Lower and upper bounds on `[n,k]_q` for `0 <= k <= n <= max_n`.
pub fn gauss_bounds_cases(qs: &[u64], max_n: i64) -> Result<Vec<CaseRecord>> {
    let mut cases = Vec::new();
    for &q in qs {
        for n in 0..=max_n {
            for k in 0..=n {
                cases.extend(check_gauss_bounds(n, k, q)?.cases());
            }
        }
    }
    Ok(cases)
}

/// Eight checks per `(q, b)` with `b` in `-2..=2`: three anchors at or
/// beyond the vertex on each side, and the full series for two constants.
pub fn parabola_cases(qs: &[u64]) -> Result<Vec<CaseRecord>> {
    let mut cases = Vec::new();
    for &q in qs {
        for b in -2i64..=2 {
            let f = Quadratic::new(b, BigRational::zero());
            let up = b.div_euclid(2) + b.rem_euclid(2);
            let down = b.div_euclid(2);
            for a in [up, up + 1, up + 3] {
                cases.push(parabola_tail_check(&f, a, q, ParabolaMode::Above)?.case(&f));
            }
            for a in [down, down - 1, down - 3] {
                cases.push(parabola_tail_check(&f, a, q, ParabolaMode::Below)?.case(&f));
            }
            for c in [BigRational::zero(), BigRational::new(1.into(), 3.into())] {
                let f = Quadratic::new(b, c);
                cases.push(parabola_tail_check(&f, 0, q, ParabolaMode::Full)?.case(&f));
            }
        }
    }
    Ok(cases)
}

/// Pair counts over all pairs of `k`-subspaces of `F_q^n` for every
/// `n <= max_n`, `1 <= k <= min(n, max_k)`, and every `t`, `i`. Pairs sharing
/// Largest count, bound, whether all hold, and pairs seen, per `(s, t, i)`.
type PairGroup = (u64, BigUint, bool, u64);

/// `(n, k, s, t, i)` are grouped: `lhs` is the largest count in the group.
pub fn pair_count_cases(q: u64, max_n: usize, max_k: usize) -> Result<Vec<CaseRecord>> {
    let mut cases = Vec::new();
    for n in 1..=max_n {
        for k in 1..=max_k.min(n) {
            let mut groups: BTreeMap<(usize, usize, usize), PairGroup> = BTreeMap::new();
            for r in pair_count_sweep(q, n, k)? {
                let e = groups.entry((r.s, r.t, r.i)).or_insert((0, r.bound.clone(), true, 0));
                e.0 = e.0.max(r.count);
                e.2 &= r.holds;
                e.3 += 1;
            }
            for ((s, t, i), (max, bound, holds, pairs)) in groups {
                cases.push(
                    CaseRecord::new("pair-count", json!({"q": q, "n": n, "k": k, "s": s, "t": t, "i": i}), max, bound, holds)
                        .with_witness(json!({"pairs": pairs})),
                );
            }
        }
    }
    Ok(cases)
}

pub fn counting_cases(params: &[KneserParams]) -> Result<Vec<CaseRecord>> {
    let mut cases = Vec::new();
    for p in params {
        cases.extend(counting_inequality_check(p)?.cases());
    }
    Ok(cases)
}
