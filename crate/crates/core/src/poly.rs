//! Univariate polynomials over a [`Field`].

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Little-endian coefficients with no trailing zeros. The zero polynomial has
/// an empty coefficient list and degree -1.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?} over {}", self.coeffs, self.field)
    }
}

impl Poly {
    pub fn new(field: &Field, coeffs: Vec<u32>) -> Result<Poly> {
        for &c in &coeffs {
            field.check(c as u64)?;
        }
        Ok(Self::raw(field, coeffs))
    }

    pub(crate) fn raw(field: &Field, mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![] }
    }

    pub fn one(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![1] }
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(field: &Field, n: usize) -> Poly {
        let mut c = vec![0; n + 1];
        c[0] = field.neg(1);
        c[n] = 1;
        Self::raw(field, c)
    }

    /// Monic product of `(x - r)` over the given roots.
    pub fn from_roots(field: &Field, roots: &[u32]) -> Poly {
        let mut p = Poly::one(field);
        for &r in roots {
            let lin = Self::raw(field, vec![field.neg(r), 1]);
            p = p.mul(&lin);
        }
        p
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    fn same(&self, o: &Poly) -> Result<()> {
        if self.field == o.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let f = &self.field;
        let len = self.coeffs.len().max(o.coeffs.len());
        Self::raw(f, (0..len).map(|i| f.add(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let f = &self.field;
        let len = self.coeffs.len().max(o.coeffs.len());
        Self::raw(f, (0..len).map(|i| f.sub(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn scale(&self, s: u32) -> Poly {
        Self::raw(&self.field, self.coeffs.iter().map(|&c| self.field.mul(c, s)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0u32; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::raw(f, out)
    }

    pub fn checked_mul(&self, o: &Poly) -> Result<Poly> {
        self.same(o)?;
        Ok(self.mul(o))
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.same(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        let lead = f.inv(d.coeffs[dd]).expect("nonzero leading coefficient");
        if r.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut q = vec![0u32; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let t = f.mul(r[top], lead);
            if t == 0 {
                continue;
            }
            q[top - dd] = t;
            for (i, &c) in d.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                r[idx] = f.sub(r[idx], f.mul(t, c));
            }
        }
        Ok((Self::raw(f, q), Self::raw(f, r)))
    }

    pub fn divides(&self, o: &Poly) -> Result<bool> {
        Ok(o.div_rem(self)?.1.is_zero())
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&l) => self.scale(self.field.inv(l).unwrap()),
        }
    }

    /// `g(0)^{-1} x^{deg g} g(1/x)`.
    pub fn normalized_reciprocal(&self) -> Result<Poly> {
        let c0 = self.coeff(0);
        let inv = self.field.inv(c0).ok_or(Error::ZeroConstantTerm)?;
        let rev: Vec<u32> = self.coeffs.iter().rev().copied().collect();
        Ok(Self::raw(&self.field, rev).scale(inv))
    }

    /// True iff the monic form of `g` equals its normalized reciprocal (which
    /// is always monic), so the test ignores scalar multiples.
    pub fn is_self_reciprocal(&self) -> Result<bool> {
        let r = self.normalized_reciprocal()?;
        Ok(r == self.monic())
    }
}
