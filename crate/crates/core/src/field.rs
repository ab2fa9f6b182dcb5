//! Exact arithmetic in GF(p^m).
//!
//! Elements are plain `u32` codes: the little-endian base-p integer formed by
//! the polynomial-basis coefficients, `code = c_0 + c_1 p + ... + c_{m-1} p^{m-1}`.
//! Codes `0..p` are therefore the prime subfield. Multiplication goes through
//! exp/log tables built from the least-encoding primitive element, so every
//! field (up to 2^20 elements) is table-driven.
//!
//! A quadratic extension GF(q^2) is always built directly as GF(p^{2m}); its
//! subfield GF(q) is the fixed set of the conjugation `a -> a^q`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// Fields up to this order carry a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

/// Built-in moduli, little-endian with the leading 1. Degree-one fields use `x`.
const MODULUS_TABLE: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
    (17, 2, &[3, 16, 1]),
    (19, 2, &[2, 18, 1]),
    (23, 2, &[5, 21, 1]),
    (29, 2, &[2, 24, 1]),
    (31, 2, &[3, 29, 1]),
];

/// Returns the shipped modulus for GF(p^m), if the table has one.
pub fn builtin_modulus(p: u32, m: u32) -> Option<Vec<u32>> {
    if m == 1 {
        return Some(vec![0, 1]);
    }
    MODULUS_TABLE
        .iter()
        .find(|(tp, tm, _)| *tp == p && *tm == m)
        .map(|(_, _, c)| c.to_vec())
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a prime power `q` into `(p, m)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let (mut m, mut r) = (0, q);
    while r > 1 {
        r /= p;
        m += 1;
    }
    Some((p as u32, m))
}

// Dense polynomial helpers over the prime field, little-endian.
mod gfp {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn inv(a: u32, p: u32) -> u32 {
        let mut r = 1u64;
        let (mut b, mut e) = (a as u64, p as u64 - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        r as u32
    }

    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = inv(b[db], p) as u64;
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let f = r[r.len() - 1] as u64 * lead_inv % p as u64;
            for (i, &bc) in b.iter().enumerate() {
                let t = (f * bc as u64) % p as u64;
                let cell = &mut r[i + shift];
                *cell = ((*cell as u64 + p as u64 - t) % p as u64) as u32;
            }
            trim(&mut r);
        }
        r
    }
}

/// Irreducibility over GF(p) by trial division against every monic
/// polynomial of degree at most half the degree.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len().saturating_sub(1);
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    for e in 1..=deg / 2 {
        let count = (p as u64).pow(e as u32);
        for lower in 0..count {
            let mut div = vec![0u32; e + 1];
            let mut x = lower;
            for c in div.iter_mut().take(e) {
                *c = (x % p as u64) as u32;
                x /= p as u64;
            }
            div[e] = 1;
            if gfp::rem(poly, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible of degree `m` whose lower coefficients, read as a
/// little-endian base-p integer, are least.
pub fn least_irreducible(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    for lower in 0..count {
        let mut poly = vec![0u32; m as usize + 1];
        let mut x = lower;
        for c in poly.iter_mut().take(m as usize) {
            *c = (x % p as u64) as u32;
            x /= p as u64;
        }
        poly[m as usize] = 1;
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

struct Inner {
    p: u32,
    m: u32,
    order: u32,
    modulus: Vec<u32>,
    primitive: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// A concrete finite field GF(p^m) with a fixed modulus. Cheap to clone.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.m == other.inner.m
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {:?})", self.inner.p, self.inner.m, self.inner.modulus)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.inner.order)
    }
}

impl Field {
    /// Builds GF(p^m). Without a modulus the built-in table is used, falling
    /// back to the least irreducible polynomial.
    pub fn new(p: u32, m: u32, modulus: Option<Vec<u32>>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if m == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let order = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER);
        let Some(order) = order else {
            return Err(Error::FieldTooLarge { p, m });
        };
        let modulus = match modulus {
            Some(md) => {
                if md.len() != m as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients, got {}",
                        m + 1,
                        md.len()
                    )));
                }
                if md[m as usize] != 1 {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if md.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus(format!("coefficient not below p = {p}")));
                }
                if !is_irreducible(&md, p) {
                    return Err(Error::ReducibleModulus(md));
                }
                md
            }
            None => builtin_modulus(p, m).unwrap_or_else(|| least_irreducible(p, m)),
        };
        Ok(Self::build(p, m, order as u32, modulus))
    }

    /// GF(p) for a prime p.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// The default field of order `q`.
    pub fn with_order(q: u32) -> Result<Field> {
        let (p, m) = prime_power(q as u64).ok_or(Error::NonPrimeCharacteristic(q))?;
        Field::new(p, m, None)
    }

    fn build(p: u32, m: u32, order: u32, modulus: Vec<u32>) -> Field {
        let digits = |mut c: u32| {
            let mut d = vec![0u32; m as usize];
            for x in d.iter_mut() {
                *x = c % p;
                c /= p;
            }
            d
        };
        let undigits = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &x| acc * p + x);
        let slow_mul = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits(a), digits(b));
            let mut prod = vec![0u64; 2 * m as usize - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] += x as u64 * y as u64;
                }
            }
            let mut prod: Vec<u32> = prod.iter().map(|&v| (v % p as u64) as u32).collect();
            for top in (m as usize..prod.len()).rev() {
                let f = prod[top];
                if f == 0 {
                    continue;
                }
                for (i, &mc) in modulus.iter().enumerate() {
                    let idx = top - m as usize + i;
                    let t = (f as u64 * mc as u64 % p as u64) as u32;
                    prod[idx] = (prod[idx] + p - t) % p;
                }
            }
            undigits(&prod[..m as usize])
        };
        let slow_pow = |a: u32, mut e: u64| {
            let (mut r, mut b) = (1u32, a);
            while e > 0 {
                if e & 1 == 1 {
                    r = slow_mul(r, b);
                }
                b = slow_mul(b, b);
                e >>= 1;
            }
            r
        };
        let units = order as u64 - 1;
        let factors = prime_factors(units);
        let primitive = (1..order)
            .find(|&c| factors.iter().all(|&f| slow_pow(c, units / f) != 1))
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; 2 * units as usize];
        let mut log = vec![0u32; order as usize];
        let mut x = 1u32;
        for i in 0..units as usize {
            exp[i] = x;
            exp[i + units as usize] = x;
            log[x as usize] = i as u32;
            x = slow_mul(x, primitive);
        }
        let neg: Vec<u32> = (0..order)
            .map(|c| undigits(&digits(c).iter().map(|&d| (p - d) % p).collect::<Vec<_>>()))
            .collect();
        let add = (order <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; (order * order) as usize];
            for a in 0..order {
                let da = digits(a);
                for b in 0..order {
                    let s: Vec<u32> = da.iter().zip(digits(b)).map(|(&x, y)| (x + y) % p).collect();
                    t[(a * order + b) as usize] = undigits(&s);
                }
            }
            t
        });
        Field {
            inner: Arc::new(Inner { p, m, order, modulus, primitive, exp, log, neg, add }),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.m
    }

    pub fn order(&self) -> u32 {
        self.inner.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// Least-encoding element of multiplicative order q - 1.
    pub fn primitive_element(&self) -> u32 {
        self.inner.primitive
    }

    /// Discrete log with respect to [`Field::primitive_element`].
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.inner.log[a as usize])
    }

    /// `primitive_element()^e`.
    pub fn exp(&self, e: u64) -> u32 {
        let units = self.inner.order as u64 - 1;
        self.inner.exp[(e % units) as usize]
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.inner.p as i64) as u32
    }

    pub fn contains(&self, code: u64) -> bool {
        code < self.inner.order as u64
    }

    pub fn check(&self, code: u64) -> Result<u32> {
        if self.contains(code) {
            Ok(code as u32)
        } else {
            Err(Error::ElementOutOfRange { code, order: self.inner.order })
        }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if let Some(t) = &self.inner.add {
            return t[(a * self.inner.order + b) as usize];
        }
        let p = self.inner.p;
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut r, mut pw) = (0u32, 1u32);
        while a > 0 || b > 0 {
            r += ((a % p + b % p) % p) * pw;
            a /= p;
            b /= p;
            pw = pw.wrapping_mul(p);
        }
        r
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.inner.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let l = self.inner.log[a as usize] + self.inner.log[b as usize];
        self.inner.exp[l as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let units = self.inner.order - 1;
        let l = self.inner.log[a as usize];
        Some(self.inner.exp[((units - l) % units) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let units = self.inner.order as u64 - 1;
        let l = self.inner.log[a as usize] as u64 * (e % units) % units;
        self.inner.exp[l as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u32) -> Option<u64> {
        let l = self.log(a)? as u64;
        let units = self.inner.order as u64 - 1;
        Some(units / num_integer::gcd(l, units))
    }

    /// q when this field has order q^2.
    pub fn sub_order(&self) -> Option<u32> {
        self.inner.m.is_multiple_of(2).then(|| self.inner.p.pow(self.inner.m / 2))
    }

    /// q for a quadratic extension, or `NotQuadraticExtension`.
    pub fn hermitian_base(&self) -> Result<u32> {
        self.sub_order().ok_or(Error::NotQuadraticExtension(self.inner.order))
    }

    /// `a^q` in GF(q^2).
    pub fn conjugate(&self, a: u32) -> Result<u32> {
        Ok(self.pow(a, self.hermitian_base()? as u64))
    }

    /// `a^q` after checking that `base_order^2` is the field order.
    pub fn conjugate_over(&self, a: u32, base_order: u32) -> Result<u32> {
        if base_order as u64 * base_order as u64 != self.inner.order as u64 {
            return Err(Error::NotQuadraticExtension(self.inner.order));
        }
        Ok(self.pow(a, base_order as u64))
    }

    /// Sum of `a^i` over all nonzero `a`.
    pub fn power_sum(&self, i: u64) -> u32 {
        (1..self.inner.order).fold(0, |acc, a| self.add(acc, self.pow(a, i)))
    }

    pub fn elem(&self, code: u64) -> Result<FieldElem> {
        Ok(FieldElem { field: self.clone(), code: self.check(code)? })
    }
}

/// A field element tagged with its owning field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElem {
    field: Field,
    code: u32,
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.code, self.field)
    }
}

impl FieldElem {
    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    fn same(&self, other: &FieldElem) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn wrap(&self, code: u32) -> FieldElem {
        FieldElem { field: self.field.clone(), code }
    }

    pub fn add(&self, o: &FieldElem) -> Result<FieldElem> {
        self.same(o)?;
        Ok(self.wrap(self.field.add(self.code, o.code)))
    }

    pub fn sub(&self, o: &FieldElem) -> Result<FieldElem> {
        self.same(o)?;
        Ok(self.wrap(self.field.sub(self.code, o.code)))
    }

    pub fn mul(&self, o: &FieldElem) -> Result<FieldElem> {
        self.same(o)?;
        Ok(self.wrap(self.field.mul(self.code, o.code)))
    }

    pub fn div(&self, o: &FieldElem) -> Result<FieldElem> {
        self.same(o)?;
        let c = self.field.div(self.code, o.code).ok_or(Error::DivisionByZero)?;
        Ok(self.wrap(c))
    }

    pub fn inv(&self) -> Result<FieldElem> {
        let c = self.field.inv(self.code).ok_or(Error::DivisionByZero)?;
        Ok(self.wrap(c))
    }

    pub fn neg(&self) -> FieldElem {
        self.wrap(self.field.neg(self.code))
    }

    pub fn pow(&self, e: u64) -> FieldElem {
        self.wrap(self.field.pow(self.code, e))
    }

    pub fn conjugate(&self, base_order: u32) -> Result<FieldElem> {
        Ok(self.wrap(self.field.conjugate_over(self.code, base_order)?))
    }
}

/// Multiplicative order of `q` modulo `n` (requires gcd(q, n) = 1).
pub fn multiplicative_order(q: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let (mut x, mut t) = (q % n, 1);
    while x != 1 {
        x = x * q % n;
        t += 1;
    }
    t
}

/// q-cyclotomic cosets modulo n, each sorted, ordered by least element.
pub fn cyclotomic_cosets(n: usize, q: u32) -> Result<Vec<Vec<usize>>> {
    if n == 0 || num_integer::gcd(n as u64, q as u64) != 1 {
        return Err(Error::NonCoprimeLength { n, q });
    }
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let mut coset = Vec::new();
        let mut x = a;
        while !seen[x] {
            seen[x] = true;
            coset.push(x);
            x = (x as u64 * q as u64 % n as u64) as usize;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    Ok(cosets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Field {
        Field::new(2, 2, Some(vec![1, 1, 1])).unwrap()
    }

    #[test]
    fn gf4_from_standard_modulus() {
        let f = gf4();
        assert_eq!(f.order(), 4);
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.inv(2), Some(3));
        assert_eq!(f.pow(2, 3), 1);
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert_eq!(
            Field::new(2, 2, Some(vec![1, 0, 1])).unwrap_err(),
            Error::ReducibleModulus(vec![1, 0, 1])
        );
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NonPrimeCharacteristic(4));
        assert!(matches!(Field::new(2, 21, None), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn default_gf9() {
        let f = Field::new(3, 2, None).unwrap();
        assert_eq!(f.order(), 9);
        assert_eq!(f.sub_order(), Some(3));
    }

    #[test]
    fn builtin_table_is_irreducible() {
        for &(p, m, c) in MODULUS_TABLE {
            assert!(is_irreducible(c, p), "GF({p}^{m}) entry {c:?}");
            assert_eq!(c.len(), m as usize + 1);
        }
    }

    #[test]
    fn least_irreducible_outside_table() {
        let f = Field::new(37, 2, None).unwrap();
        assert_eq!(f.order(), 1369);
        assert!(is_irreducible(f.modulus(), 37));
        assert_eq!(least_irreducible(2, 2), vec![1, 1, 1]);
    }

    #[test]
    fn elem_arith_errors() {
        let f = gf4();
        let g = Field::prime(2).unwrap();
        let a = f.elem(2).unwrap();
        assert_eq!(a.mul(&g.elem(1).unwrap()), Err(Error::MixedFields));
        assert_eq!(a.div(&f.elem(0).unwrap()), Err(Error::DivisionByZero));
        assert_eq!(f.elem(0).unwrap().inv(), Err(Error::DivisionByZero));
        assert!(f.elem(4).is_err());
        assert_eq!(a.inv().unwrap().code(), 3);
    }

    #[test]
    fn conjugation() {
        let f = gf4();
        assert_eq!(f.conjugate_over(2, 2).unwrap(), 3);
        assert_eq!(f.conjugate_over(1, 2).unwrap(), 1);
        let g9 = Field::new(3, 2, None).unwrap();
        for a in 0..9 {
            let c = g9.conjugate_over(a, 3).unwrap();
            assert_eq!(g9.conjugate_over(c, 3).unwrap(), a);
        }
        let g5 = Field::prime(5).unwrap();
        assert_eq!(g5.conjugate(1), Err(Error::NotQuadraticExtension(5)));
        assert_eq!(f.conjugate_over(1, 3), Err(Error::NotQuadraticExtension(4)));
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(Field::prime(2).unwrap().primitive_element(), 1);
        assert_eq!(Field::prime(5).unwrap().primitive_element(), 2);
        assert_eq!(gf4().primitive_element(), 2);
    }

    #[test]
    fn power_sums() {
        let f = gf4();
        assert_eq!(f.power_sum(1), 0);
        assert_eq!(f.power_sum(3), 1);
        assert_eq!(Field::prime(2).unwrap().power_sum(0), 1);
    }

    #[test]
    fn cosets() {
        assert_eq!(cyclotomic_cosets(7, 2).unwrap(), vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]);
        assert_eq!(cyclotomic_cosets(5, 4).unwrap(), vec![vec![0], vec![1, 4], vec![2, 3]]);
        assert_eq!(cyclotomic_cosets(3, 4).unwrap(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(cyclotomic_cosets(6, 3), Err(Error::NonCoprimeLength { n: 6, q: 3 }));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(multiplicative_order(4, 5), 2);
        assert_eq!(multiplicative_order(2, 7), 3);
    }
}
