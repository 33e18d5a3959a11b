//! Arithmetic in finite fields `F_q`.
//!
//! Elements are packed into a single integer: for `q = p^e` the element
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` is stored as `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`.
//! Integer order on the packed value gives the total order used by canonical
//! subspace forms.
//!
//! Fields with `q <= 64` carry full addition, multiplication and inverse tables.
//! Larger prime fields fall back to modular arithmetic.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order for which tables are built and non-prime orders are accepted.
pub const TABLE_LIMIT: u64 = 64;

/// One fixed monic irreducible modulus per non-prime order up to 64, lowest
/// coefficient first (the leading 1 included).
const MODULI: &[(u64, &[u32])] = &[
    (4, &[1, 1, 1]),
    (8, &[1, 1, 0, 1]),
    (9, &[2, 2, 1]),
    (16, &[1, 1, 0, 0, 1]),
    (25, &[2, 4, 1]),
    (27, &[1, 2, 0, 1]),
    (32, &[1, 0, 1, 0, 0, 1]),
    (49, &[3, 6, 1]),
    (64, &[1, 1, 0, 1, 1, 0, 1]),
];

/// An element of some `F_q`, stored as its packed integer representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn rep(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone)]
struct Tables {
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// The field `F_q`, `q = p^e`.
#[derive(Clone)]
pub struct FieldSpec {
    q: u32,
    p: u32,
    e: u32,
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("q", &self.q)
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        // one modulus per order, so the order determines the field
        self.q == other.q
    }
}

impl Eq for FieldSpec {}

/// Builds `F_q`. Fails with [`Error::NotAPrimePower`] when `q` has two
/// distinct prime divisors.
pub fn make_field(q: u64) -> Result<FieldSpec> {
    FieldSpec::new(q)
}

/// Returns `(p, e)` with `q = p^e` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

pub fn is_prime_power(q: u64) -> bool {
    prime_power(q).is_some()
}

/// All prime powers in `2..=limit`, ascending.
pub fn prime_powers_upto(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&q| is_prime_power(q)).collect()
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// Trial division by every monic polynomial of degree `1..=deg/2` over `F_p`.
/// `coeffs` is lowest-degree first and must be monic.
pub fn is_irreducible(coeffs: &[u32], p: u32) -> bool {
    let deg = match coeffs.len().checked_sub(1) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if coeffs[deg] != 1 {
        return false;
    }
    for d in 1..=deg / 2 {
        // monic divisors of degree d: p^d choices of lower coefficients
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                divisor.push((c % p as u64) as u32);
                c /= p as u64;
            }
            divisor.push(1);
            if poly_rem(coeffs, &divisor, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `m` over `F_p`.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r: Vec<u64> = a.iter().map(|&x| x as u64).collect();
    let p = p as u64;
    while r.len() > dm {
        let lead = r.pop().unwrap() % p;
        if lead != 0 {
            let off = r.len() - dm;
            for (i, &mi) in m[..dm].iter().enumerate() {
                r[off + i] = (r[off + i] + p - (lead * mi as u64) % p) % p;
            }
        }
    }
    r.into_iter().map(|x| (x % p) as u32).collect()
}

impl FieldSpec {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidArgs(format!("field order must be at least 2, got {q}")));
        }
        let (p, e) = prime_power(q).ok_or(Error::NotAPrimePower(q))?;
        if e > 1 && q > TABLE_LIMIT {
            return Err(Error::UnsupportedField(q));
        }
        if q > u32::MAX as u64 {
            return Err(Error::UnsupportedField(q));
        }
        let modulus = if e == 1 {
            Vec::new()
        } else {
            MODULI.iter().find(|(o, _)| *o == q).map(|(_, m)| m.to_vec()).expect("modulus table covers every prime power <= 64")
        };
        let mut field = FieldSpec { q: q as u32, p: p as u32, e, modulus, tables: None };
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = self.slow_add(a as u32, b as u32) as u8;
                mul[a * q + b] = self.slow_mul(a as u32, b as u32) as u8;
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            for b in 0..q {
                if add[a * q + b] == 0 {
                    neg[a] = b as u8;
                }
                if mul[a * q + b] == 1 {
                    inv[a] = b as u8;
                }
            }
        }
        Tables { add, mul, neg, inv }
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = Vec::with_capacity(self.e as usize);
        for _ in 0..self.e {
            d.push(a % self.p);
            a /= self.p;
        }
        d
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn slow_add(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return ((a as u64 + b as u64) % self.q as u64) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&sum)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return ((a as u64 * b as u64) % self.q as u64) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; da.len() + db.len() - 1];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let r = poly_rem(&prod, &self.modulus, self.p);
        self.pack(&r)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The characteristic.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// The extension degree over the prime field.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// Modulus coefficients, lowest degree first; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The element with packed representation `rep`.
    pub fn element(&self, rep: u32) -> Result<FieldElement> {
        if rep < self.q {
            Ok(FieldElement(rep))
        } else {
            Err(Error::InvalidArgs(format!("{rep} is not an element of F_{}", self.q)))
        }
    }

    /// All elements in increasing packed order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    /// All nonzero elements.
    pub fn units(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.add[(a.0 * self.q + b.0) as usize] as u32),
            None => FieldElement(self.slow_add(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.neg[a.0 as usize] as u32),
            None if a.0 == 0 => a,
            None => FieldElement(self.q - a.0),
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.mul[(a.0 * self.q + b.0) as usize] as u32),
            None => FieldElement(self.slow_mul(a.0, b.0)),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.tables {
            Some(t) => FieldElement(t.inv[a.0 as usize] as u32),
            // prime field: a^(q-2)
            None => self.pow(a, self.q as u64 - 2),
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut exp: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Embeds an integer through the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let r = n.rem_euclid(self.p as i64) as u32;
        FieldElement(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(f: &FieldSpec, r: u32) -> FieldElement {
        f.element(r).unwrap()
    }

    #[test]
    fn make_field_examples() {
        let f2 = make_field(2).unwrap();
        assert_eq!((f2.p(), f2.e()), (2, 1));
        assert!(f2.modulus().is_empty());

        let f4 = make_field(4).unwrap();
        assert_eq!((f4.p(), f4.e()), (2, 2));
        assert_eq!(f4.modulus(), &[1, 1, 1]);

        assert_eq!(make_field(6).unwrap_err(), Error::NotAPrimePower(6));
        assert_eq!(make_field(12).unwrap_err(), Error::NotAPrimePower(12));
        assert!(matches!(make_field(1), Err(Error::InvalidArgs(_))));
        assert_eq!(make_field(81).unwrap_err(), Error::UnsupportedField(81));
        assert_eq!(make_field(101).unwrap().q(), 101);
    }

    #[test]
    fn x2_plus_x_plus_1_is_the_only_irreducible_quadratic_over_f2() {
        let irreducible: Vec<[u32; 3]> =
            [[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]].into_iter().filter(|c| is_irreducible(c, 2)).collect();
        assert_eq!(irreducible, vec![[1, 1, 1]]);
    }

    #[test]
    fn built_in_moduli_are_irreducible() {
        for (q, m) in MODULI {
            let (p, e) = prime_power(*q).unwrap();
            assert_eq!(m.len() as u32, e + 1, "degree of modulus for {q}");
            assert!(is_irreducible(m, p as u32), "modulus for {q}");
        }
    }

    #[test]
    fn mul_examples() {
        let f4 = make_field(4).unwrap();
        // x * x = x + 1
        assert_eq!(f4.mul(el(&f4, 2), el(&f4, 2)), el(&f4, 3));
        let f3 = make_field(3).unwrap();
        assert_eq!(f3.mul(el(&f3, 2), el(&f3, 2)), el(&f3, 1));
        for q in [2, 5, 9, 64, 101] {
            let f = make_field(q).unwrap();
            for a in f.elements().take(40) {
                assert_eq!(f.mul(a, f.one()), a);
            }
        }
    }

    #[test]
    fn inv_examples() {
        let f3 = make_field(3).unwrap();
        assert_eq!(f3.inv(el(&f3, 2)).unwrap(), el(&f3, 2));
        let f5 = make_field(5).unwrap();
        assert_eq!(f5.inv(el(&f5, 3)).unwrap(), el(&f5, 2));
        let f4 = make_field(4).unwrap();
        assert_eq!(f4.inv(el(&f4, 2)).unwrap(), el(&f4, 3));
        assert_eq!(f4.inv(f4.zero()), Err(Error::DivisionByZero));
        let f101 = make_field(101).unwrap();
        assert_eq!(f101.inv(f101.zero()), Err(Error::DivisionByZero));
        for a in f101.units() {
            assert_eq!(f101.mul(a, f101.inv(a).unwrap()), f101.one());
        }
    }

    #[test]
    fn field_axioms_exhaustive_up_to_16() {
        for q in prime_powers_upto(16) {
            let f = make_field(q).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.zero()), a);
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one(), "q={q} a={a}");
                }
                // Frobenius
                assert_eq!(f.pow(a, q), a, "q={q} a={a}");
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_order_q_minus_1() {
        for q in prime_powers_upto(64) {
            let f = make_field(q).unwrap();
            let has_generator = f.units().any(|g| {
                let mut x = g;
                let mut order = 1;
                while x != f.one() {
                    x = f.mul(x, g);
                    order += 1;
                }
                order == q - 1
            });
            assert!(has_generator, "q={q}");
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_powers_upto(16), vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16]);
        assert_eq!(prime_power(64), Some((2, 6)));
        assert_eq!(prime_power(1), None);
    }
}
