//! Gaussian binomial coefficients and exact checkers for the analytic
//! estimates of the lower-bound argument.
//!
//! Everything here is exact: integers are [`BigUint`]/[`BigInt`], fractions
//! are [`BigRational`]. Inequalities with a `q^(1/4)` factor are decided by
//! comparing fourth powers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::gf::is_prime_power;
use crate::report::{ser_nat, ser_rat, CaseRecord};

/// Terms summed explicitly before the geometric tail majorant takes over.
pub const DEFAULT_WINDOW: i64 = 40;

/// `[n, k]_q`, the number of `k`-subspaces of `F_q^n`.
///
/// Computed as the running product of `(q^(n-i) - 1) / (q^(i+1) - 1)`; after
/// `i + 1` factors the product equals `[n, i+1]_q`, so every division is exact.
/// `q` need not be a prime power.
pub fn gauss_binom(n: i64, k: i64, q: u64) -> Result<BigUint> {
    if k < 0 || n < 0 || k > n {
        return Err(Error::InvalidArgs(format!("need n >= k >= 0, got n = {n}, k = {k}")));
    }
    if q < 2 {
        return Err(Error::InvalidArgs(format!("need q >= 2, got {q}")));
    }
    let q = BigUint::from(q);
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        let num = q.pow((n - i) as u32) - 1u32;
        let den = q.pow((i + 1) as u32) - 1u32;
        let (quot, rem) = (acc * num).div_rem(&den);
        debug_assert!(rem.is_zero());
        acc = quot;
    }
    Ok(acc)
}

/// `[n, k]_q`, or 0 outside `0 <= k <= n`.
pub fn gauss_or_zero(n: i64, k: i64, q: u64) -> BigUint {
    gauss_binom(n, k, q).unwrap_or_default()
}

/// The slack `ε(q)` in the main theorem's range conditions.
pub fn epsilon(q: u64) -> u32 {
    match q {
        2 => 9,
        3 => 3,
        4 => 2,
        5..=8 => 1,
        _ => 0,
    }
}

/// The constant in the upper estimate `[n,k]_q <= (q + β) q^(k(n-k)-1)`.
pub fn beta(q: u64) -> u32 {
    match q {
        2 => 5,
        3 => 3,
        _ => 2,
    }
}

/// The per-field constants `ε(q)` and `β(q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FieldConstants {
    pub q: u64,
    pub epsilon: u32,
    pub beta: u32,
}

pub fn constants(q: u64) -> Result<FieldConstants> {
    if !is_prime_power(q) {
        return Err(Error::NotAPrimePower(q));
    }
    Ok(FieldConstants { q, epsilon: epsilon(q), beta: beta(q) })
}

/// `q^e` as an exact rational, `e` of either sign.
pub fn qpow(q: u64, e: i64) -> BigRational {
    let base = BigInt::from(q).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(base)
    } else {
        BigRational::new(BigInt::one(), base)
    }
}

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An inequality `lhs <= rhs` with both sides.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    #[serde(serialize_with = "ser_rat")]
    pub lhs: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub rhs: BigRational,
    pub holds: bool,
}

impl Comparison {
    fn le(lhs: BigRational, rhs: BigRational) -> Self {
        let holds = lhs <= rhs;
        Comparison { lhs, rhs, holds }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaussBoundsReport {
    pub n: i64,
    pub k: i64,
    pub q: u64,
    pub beta: u32,
    #[serde(serialize_with = "ser_nat")]
    pub value: BigUint,
    /// `(q+1) q^(k(n-k)-1) <= [n,k]_q`; only for `0 < k < n`.
    pub lower: Option<Comparison>,
    /// `[n,k]_q <= (q+β) q^(k(n-k)-1)`.
    pub upper: Comparison,
}

impl GaussBoundsReport {
    pub fn lower_holds(&self) -> bool {
        self.lower.as_ref().is_none_or(|c| c.holds)
    }

    pub fn upper_holds(&self) -> bool {
        self.upper.holds
    }

    pub fn pass(&self) -> bool {
        self.lower_holds() && self.upper_holds()
    }

    pub fn cases(&self) -> Vec<CaseRecord> {
        let params = json!({"n": self.n, "k": self.k, "q": self.q, "beta": self.beta});
        let mut out = Vec::new();
        if let Some(lower) = &self.lower {
            out.push(CaseRecord::new(
                "gauss-lower",
                params.clone(),
                crate::report::rat_string(&lower.lhs),
                crate::report::rat_string(&lower.rhs),
                lower.holds,
            ));
        }
        out.push(CaseRecord::new(
            "gauss-upper",
            params,
            crate::report::rat_string(&self.upper.lhs),
            crate::report::rat_string(&self.upper.rhs),
            self.upper.holds,
        ));
        out
    }
}

/// Checks both estimates `(q+1) q^(k(n-k)-1) <= [n,k]_q <= (q+β) q^(k(n-k)-1)`,
/// the lower one only when `0 < k < n`.
pub fn check_gauss_bounds(n: i64, k: i64, q: u64) -> Result<GaussBoundsReport> {
    let value = gauss_binom(n, k, q)?;
    let b = beta(q);
    let e = k * (n - k) - 1;
    let exact = rat(BigInt::from(value.clone()));
    let lower = (0 < k && k < n).then(|| Comparison::le(rat(q + 1) * qpow(q, e), exact.clone()));
    let upper = Comparison::le(exact, rat(q + b as u64) * qpow(q, e));
    Ok(GaussBoundsReport { n, k, q, beta: b, value, lower, upper })
}

/// `f(x) = -x^2 + b x + c` with integer `b` and rational `c`.
///
/// The integer linear coefficient keeps `f(i) - f(j)` integral at integer
/// points, and puts the vertex `b/2` on the half-integer lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadratic {
    pub b: BigInt,
    pub c: BigRational,
}

impl Quadratic {
    pub fn new(b: impl Into<BigInt>, c: BigRational) -> Self {
        Quadratic { b: b.into(), c }
    }

    /// `-(x - h)^2 + c` with `2h` integral.
    pub fn with_vertex(twice_vertex: i64, c: BigRational) -> Self {
        // -(x - h)^2 + c = -x^2 + 2h x - h^2 + c
        let h = frac(twice_vertex, 2);
        Quadratic { b: BigInt::from(twice_vertex), c: c - &h * &h }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        -(x * x) + rat(self.b.clone()) * x + &self.c
    }

    pub fn eval_int(&self, i: i64) -> BigRational {
        self.eval(&rat(i))
    }

    pub fn vertex(&self) -> BigRational {
        BigRational::new(self.b.clone(), BigInt::from(2))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParabolaMode {
    /// `Σ_{i >= a} q^f(i) < q^f(a) (1 + 1/q + 1/q^3)`, vertex `<= a`.
    Above,
    /// `Σ_{i <= a} q^f(i) < q^f(a) (1 + 1/q + 1/q^3)`, vertex `>= a`.
    Below,
    /// `Σ_{i ∈ Z} q^f(i) < q^f(x0) (1 + 2/q + 2/q^3)`.
    Full,
}

/// Outcome of [`parabola_tail_check`].
///
/// Both sides are divided by `q^f(anchor)`; `lhs` is a certified majorant of
/// the normalized series (window sum plus geometric tail). When `power` is 4
/// both sides have been raised to the fourth power to clear a `q^(-1/4)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParabolaReport {
    pub mode: ParabolaMode,
    pub q: u64,
    #[serde(serialize_with = "ser_rat")]
    pub anchor: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub anchor_exponent: BigRational,
    pub window: i64,
    pub power: u32,
    #[serde(serialize_with = "ser_rat")]
    pub lhs: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub rhs: BigRational,
    pub pass: bool,
}

impl ParabolaReport {
    pub fn case(&self, f: &Quadratic) -> CaseRecord {
        CaseRecord::new(
            "parabola",
            json!({
                "mode": self.mode,
                "q": self.q,
                "b": f.b.to_string(),
                "c": crate::report::rat_string(&f.c),
                "anchor": crate::report::rat_string(&self.anchor),
                "power": self.power,
            }),
            crate::report::rat_string(&self.lhs),
            crate::report::rat_string(&self.rhs),
            self.pass,
        )
    }
}

/// Sum of `q^h(m)` over `lo..=hi` plus geometric majorants of the tails
/// beyond either end. `h` must drop by at least 1 per step outside the window.
fn windowed_sum(q: u64, h: impl Fn(i64) -> i64, lo: Option<i64>, hi: i64) -> BigRational {
    let geometric = frac(q as i64, q as i64 - 1);
    let start = lo.unwrap_or(0);
    let mut sum: BigRational = (start..=hi).map(|m| qpow(q, h(m))).sum();
    sum += qpow(q, h(hi + 1)) * &geometric;
    if let Some(lo) = lo {
        sum += qpow(q, h(lo - 1)) * &geometric;
    }
    sum
}

/// Certifies one of the three series estimates for a downward parabola.
///
/// `anchor` is the cut-off `a` for [`ParabolaMode::Above`]/[`ParabolaMode::Below`]
/// and is ignored for [`ParabolaMode::Full`], which anchors at the vertex.
pub fn parabola_tail_check(f: &Quadratic, anchor: i64, q: u64, mode: ParabolaMode) -> Result<ParabolaReport> {
    parabola_tail_check_window(f, anchor, q, mode, DEFAULT_WINDOW)
}

pub fn parabola_tail_check_window(
    f: &Quadratic,
    anchor: i64,
    q: u64,
    mode: ParabolaMode,
    window: i64,
) -> Result<ParabolaReport> {
    if q < 2 {
        return Err(Error::InvalidArgs(format!("need q >= 2, got {q}")));
    }
    if window < 1 {
        return Err(Error::InvalidArgs("window must be positive".into()));
    }
    let b: i64 = (&f.b)
        .try_into()
        .map_err(|_| Error::InvalidArgs("linear coefficient out of range".into()))?;
    let one_sided_rhs = rat(1) + frac(1, q as i64) + frac(1, (q * q * q) as i64);
    let full_rhs = rat(1) + frac(2, q as i64) + frac(2, (q * q * q) as i64);
    let report = |anchor: BigRational, anchor_exponent, power, lhs: BigRational, rhs: BigRational| {
        let pass = lhs < rhs;
        ParabolaReport { mode, q, anchor, anchor_exponent, window, power, lhs, rhs, pass }
    };
    match mode {
        ParabolaMode::Above => {
            // vertex b/2 <= a
            if b > 2 * anchor {
                return Err(Error::PreconditionViolated(format!("vertex {b}/2 lies above a = {anchor}")));
            }
            // f(a + j) - f(a) = j (b - 2a - j)
            let lhs = windowed_sum(q, |j| j * (b - 2 * anchor - j), None, window);
            Ok(report(rat(anchor), f.eval_int(anchor), 1, lhs, one_sided_rhs))
        }
        ParabolaMode::Below => {
            if b < 2 * anchor {
                return Err(Error::PreconditionViolated(format!("vertex {b}/2 lies below a = {anchor}")));
            }
            // f(a - j) - f(a) = -j (j + b - 2a)
            let lhs = windowed_sum(q, |j| -j * (j + b - 2 * anchor), None, window);
            Ok(report(rat(anchor), f.eval_int(anchor), 1, lhs, one_sided_rhs))
        }
        ParabolaMode::Full => {
            let x0 = f.vertex();
            let top = f.eval(&x0);
            if b % 2 == 0 {
                // f(x0 + m) - f(x0) = -m^2
                let lhs = windowed_sum(q, |m| -m * m, Some(-window), window);
                Ok(report(x0, top, 1, lhs, full_rhs))
            } else {
                // with i = x0 + 1/2 + m: f(i) - f(x0) = -(m + 1/2)^2 = -1/4 - m(m+1)
                // so the series is q^(-1/4) S; compare S^4 / q against rhs^4
                let s = windowed_sum(q, |m| -m * (m + 1), Some(-window - 1), window);
                let lhs4 = pow4(&s) / rat(q);
                Ok(report(x0, top, 4, lhs4, pow4(&full_rhs)))
            }
        }
    }
}

fn pow4(x: &BigRational) -> BigRational {
    let sq = x * x;
    &sq * &sq
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BridgeReport {
    pub q: u64,
    pub epsilon: u32,
    pub beta: u32,
    /// `(q^(-ε-3/4) (1 + 2/q + 2/q^3))^4`.
    #[serde(serialize_with = "ser_rat")]
    pub lhs_pow4: BigRational,
    /// `((q+1) q^3 / (2 (q+β)^4))^4`.
    #[serde(serialize_with = "ser_rat")]
    pub rhs_pow4: BigRational,
    pub pass: bool,
}

impl BridgeReport {
    pub fn case(&self) -> CaseRecord {
        CaseRecord::new(
            "bridge",
            json!({"q": self.q, "epsilon": self.epsilon, "beta": self.beta, "power": 4}),
            crate::report::rat_string(&self.lhs_pow4),
            crate::report::rat_string(&self.rhs_pow4),
            self.pass,
        )
    }
}

/// `q^(-ε(q)-3/4) (1 + 2/q + 2/q^3) < (q+1) q^3 / (2 (q+β)^4)`, decided on fourth powers.
pub fn bridge_inequality_check(q: u64) -> Result<BridgeReport> {
    let c = constants(q)?;
    let qi = q as i64;
    let lead = qpow(q, -(c.epsilon as i64)) * (rat(1) + frac(2, qi) + frac(2, qi * qi * qi));
    // (q^(-3/4))^4 = q^(-3)
    let lhs_pow4 = pow4(&lead) * qpow(q, -3);
    let rhs = rat((q + 1) * q * q * q) / (rat(2) * qpow(q + c.beta as u64, 4));
    let rhs_pow4 = pow4(&rhs);
    let pass = lhs_pow4 < rhs_pow4;
    Ok(BridgeReport { q, epsilon: c.epsilon, beta: c.beta, lhs_pow4, rhs_pow4, pass })
}

/// The parabola `f(i) = (t - i)(i + 3k - 2t - n) - i` from the counting argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountingParabola {
    pub t: i64,
    pub k: i64,
    pub n: i64,
}

impl CountingParabola {
    pub fn new(n: i64, k: i64, t: i64) -> Self {
        CountingParabola { t, k, n }
    }

    pub fn f(&self, i: i64) -> i64 {
        (self.t - i) * (i + 3 * self.k - 2 * self.t - self.n) - i
    }

    /// `max{0, 2t - k}`, the smallest possible `dim(T_1 ∩ T_2)`.
    pub fn i_max(&self) -> i64 {
        (2 * self.t - self.k).max(0)
    }

    /// The vertex `(n - 3k + 3t - 1) / 2`.
    pub fn i0(&self) -> BigRational {
        frac(self.n - 3 * self.k + 3 * self.t - 1, 2)
    }

    /// `f(i0) = (3k + 1 - t - n)^2 / 4 - t`.
    pub fn f_at_i0(&self) -> BigRational {
        let d = 3 * self.k + 1 - self.t - self.n;
        frac(d * d, 4) - rat(self.t)
    }

    /// The same polynomial as a [`Quadratic`].
    pub fn as_quadratic(&self) -> Quadratic {
        // -(i^2) + (t - (3k - 2t - n) - 1) i + t (3k - 2t - n)
        let d = 3 * self.k - 2 * self.t - self.n;
        Quadratic::new(self.t - d - 1, rat(self.t * d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::prime_powers_upto;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn gauss_binom_examples() {
        assert_eq!(gauss_binom(4, 2, 2).unwrap(), big(35));
        assert_eq!(gauss_binom(5, 2, 2).unwrap(), big(155));
        assert_eq!(gauss_binom(7, 0, 3).unwrap(), big(1));
        assert_eq!(gauss_binom(6, 3, 3).unwrap(), big(33880));
        assert!(matches!(gauss_binom(2, 3, 2), Err(Error::InvalidArgs(_))));
        assert!(matches!(gauss_binom(2, -1, 2), Err(Error::InvalidArgs(_))));
        assert!(matches!(gauss_binom(2, 1, 1), Err(Error::InvalidArgs(_))));
        // q need not be a prime power
        assert_eq!(gauss_binom(2, 1, 6).unwrap(), big(7));
    }

    #[test]
    fn twenty_choose_ten_over_f2_has_31_digits() {
        assert_eq!(gauss_binom(20, 10, 2).unwrap().to_string().len(), 31);
    }

    /// Coefficients of the Gaussian polynomial by the q-Pascal recursion on
    /// polynomials, then evaluated at q: an oracle independent of the product.
    fn gauss_poly_oracle(n: usize, k: usize, q: u64) -> BigUint {
        // table[n][k] = coefficient vector
        let mut table: Vec<Vec<Vec<u64>>> = vec![vec![Vec::new(); n + 1]; n + 1];
        for m in 0..=n {
            for j in 0..=m {
                table[m][j] = if j == 0 || j == m {
                    vec![1]
                } else {
                    // [m,j] = [m-1,j-1] + x^j [m-1,j]
                    let a = &table[m - 1][j - 1];
                    let b = &table[m - 1][j];
                    let mut c = vec![0u64; (a.len()).max(b.len() + j)];
                    for (i, &x) in a.iter().enumerate() {
                        c[i] += x;
                    }
                    for (i, &x) in b.iter().enumerate() {
                        c[i + j] += x;
                    }
                    c
                };
            }
        }
        table[n][k].iter().rev().fold(BigUint::zero(), |acc, &c| acc * q + c)
    }

    #[test]
    fn product_agrees_with_polynomial_oracle() {
        for q in [2, 3, 4, 5, 7, 9] {
            for n in 0..=12 {
                for k in 0..=n {
                    assert_eq!(gauss_binom(n as i64, k as i64, q).unwrap(), gauss_poly_oracle(n, k, q), "[{n},{k}]_{q}");
                }
            }
        }
    }

    #[test]
    fn symmetry_and_q_pascal() {
        for q in [2, 3, 4, 5] {
            for n in 1..=12i64 {
                for k in 0..=n {
                    let v = gauss_binom(n, k, q).unwrap();
                    assert_eq!(v, gauss_binom(n, n - k, q).unwrap());
                    if k >= 1 {
                        let pascal = gauss_or_zero(n - 1, k - 1, q) + BigUint::from(q).pow(k as u32) * gauss_or_zero(n - 1, k, q);
                        assert_eq!(v, pascal);
                    }
                }
            }
        }
    }

    #[test]
    fn constants_examples() {
        assert_eq!(constants(2).unwrap(), FieldConstants { q: 2, epsilon: 9, beta: 5 });
        assert_eq!(constants(3).unwrap(), FieldConstants { q: 3, epsilon: 3, beta: 3 });
        assert_eq!(constants(4).unwrap(), FieldConstants { q: 4, epsilon: 2, beta: 2 });
        assert_eq!(constants(7).unwrap(), FieldConstants { q: 7, epsilon: 1, beta: 2 });
        assert_eq!(constants(8).unwrap().epsilon, 1);
        assert_eq!(constants(9).unwrap().epsilon, 0);
        assert_eq!(constants(11).unwrap(), FieldConstants { q: 11, epsilon: 0, beta: 2 });
        assert_eq!(constants(6), Err(Error::NotAPrimePower(6)));
    }

    #[test]
    fn gauss_bounds_examples() {
        let r = check_gauss_bounds(4, 2, 2).unwrap();
        assert_eq!(r.lower.as_ref().unwrap().lhs, rat(24));
        assert_eq!(r.upper.rhs, rat(56));
        assert!(r.pass());

        let r = check_gauss_bounds(5, 0, 3).unwrap();
        assert!(r.lower.is_none());
        assert_eq!(r.upper.lhs, rat(1));
        assert_eq!(r.upper.rhs, frac(6, 3));
        assert!(r.upper_holds());

        let r = check_gauss_bounds(6, 3, 3).unwrap();
        assert_eq!(r.value, big(33880));
        assert_eq!(r.lower.as_ref().unwrap().lhs, rat(26244));
        assert_eq!(r.upper.rhs, rat(39366));
        assert!(r.pass());
    }

    #[test]
    fn gauss_bounds_hold_on_the_grid() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            for n in 0..=8 {
                for k in 0..=n {
                    assert!(check_gauss_bounds(n, k, q).unwrap().pass(), "n={n} k={k} q={q}");
                }
            }
        }
    }

    #[test]
    fn product_bound_for_q2_stays_below_seven_halves() {
        // prod_{i=1}^k 2^i/(2^i - 1) <= 7/2 for every k; checked up to k = 60
        let mut prod = rat(1);
        for i in 1..=60 {
            prod *= qpow(2, i) / (qpow(2, i) - rat(1));
            assert!(prod <= frac(7, 2), "k={i}");
        }
    }

    /// Partial sum of q^(-i^2) for i = 0..=5 plus the 2^(-25) * 2 tail bound.
    #[test]
    fn parabola_above_example_matches_hand_oracle() {
        let mut partial = rat(0);
        for i in 0..=5i64 {
            partial += qpow(2, -i * i);
        }
        let oracle_upper = partial + qpow(2, -25) * rat(2);
        assert!(oracle_upper < frac(13, 8));

        let f = Quadratic::new(0, rat(0));
        let r = parabola_tail_check(&f, 0, 2, ParabolaMode::Above).unwrap();
        assert!(r.pass);
        assert_eq!(r.rhs, frac(13, 8));
        assert!(r.lhs <= oracle_upper);
        // 1 + 1/2 + 1/16 + 1/512 + 1/65536 + ... = 1.56446...
        assert!(r.lhs > frac(15644, 10000) && r.lhs < frac(15645, 10000));
    }

    #[test]
    fn parabola_below_mirror_and_full_half_vertex() {
        let f = Quadratic::with_vertex(6, rat(0));
        let r = parabola_tail_check(&f, 3, 3, ParabolaMode::Below).unwrap();
        assert!(r.pass);
        let mirrored = parabola_tail_check(&Quadratic::with_vertex(-6, rat(0)), -3, 3, ParabolaMode::Above).unwrap();
        assert_eq!(r.lhs, mirrored.lhs);

        let half = Quadratic::with_vertex(1, frac(3, 4));
        let r = parabola_tail_check(&half, 0, 2, ParabolaMode::Full).unwrap();
        assert_eq!(r.power, 4);
        assert_eq!(r.anchor, frac(1, 2));
        assert_eq!(r.anchor_exponent, frac(3, 4));
        assert!(r.pass);
        // 2 * 2^(-1/4) * (1 + 1/4 + 1/64 + ...) ≈ 2.1287 < 2.25
        let approx = 2.0 * 2f64.powf(-0.25) * (1.0 + 0.25 + 1.0 / 64.0 + 2f64.powi(-12));
        assert!((approx - 2.1287).abs() < 1e-3);
    }

    #[test]
    fn parabola_preconditions() {
        let f = Quadratic::with_vertex(4, rat(0));
        assert!(matches!(parabola_tail_check(&f, 1, 2, ParabolaMode::Above), Err(Error::PreconditionViolated(_))));
        assert!(matches!(parabola_tail_check(&f, 3, 2, ParabolaMode::Below), Err(Error::PreconditionViolated(_))));
        assert!(parabola_tail_check(&f, 2, 2, ParabolaMode::Above).unwrap().pass);
        assert!(parabola_tail_check(&f, 2, 2, ParabolaMode::Below).unwrap().pass);
    }

    #[test]
    fn parabola_window_does_not_change_the_verdict() {
        let f = Quadratic::with_vertex(3, rat(0));
        for w in [1, 3, 10, 40] {
            let r = parabola_tail_check_window(&f, 2, 2, ParabolaMode::Above, w).unwrap();
            assert!(r.pass, "window {w}");
        }
    }

    #[test]
    fn bridge_examples_and_sweep() {
        for q in [2, 9, 64] {
            assert!(bridge_inequality_check(q).unwrap().pass, "q={q}");
        }
        for q in prime_powers_upto(64) {
            let r = bridge_inequality_check(q).unwrap();
            assert!(r.pass, "q={q}");
            // float cross-check of the margin direction
            let lhs = (q as f64).powf(-(r.epsilon as f64) - 0.75) * (1.0 + 2.0 / q as f64 + 2.0 / (q as f64).powi(3));
            let rhs = (q as f64 + 1.0) * (q as f64).powi(3) / (2.0 * (q as f64 + r.beta as f64).powi(4));
            assert!(lhs < rhs);
        }
        assert_eq!(bridge_inequality_check(10), Err(Error::NotAPrimePower(10)));
    }

    #[test]
    fn counting_parabola_vertex_identity() {
        for n in 0..30 {
            for k in 1..10 {
                for t in 1..k {
                    let p = CountingParabola::new(n, k, t);
                    let at_vertex = p.as_quadratic().eval(&p.i0());
                    assert_eq!(at_vertex, p.f_at_i0());
                    assert_eq!(p.as_quadratic().vertex(), p.i0());
                    for i in -3..8 {
                        assert_eq!(p.as_quadratic().eval_int(i), rat(p.f(i)));
                    }
                    let d = 3 * k + 1 - t - n;
                    assert_eq!(p.f_at_i0() * rat(4), rat(d * d - 4 * t));
                }
            }
        }
        assert_eq!(CountingParabola::new(10, 3, 2).i_max(), 1);
        assert_eq!(CountingParabola::new(10, 5, 2).i_max(), 0);
    }
}
