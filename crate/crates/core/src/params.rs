//! EAQECC parameters derived from classical codes.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::linalg::Form;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Singleton {
    Ok,
    Mds,
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub singleton: Singleton,
    pub maximal: bool,
    pub degenerate: bool,
    pub positive_net_rate: bool,
    pub rate_above_half: bool,
}

/// `[[n, k, d; c]]_q`. `d` is `None` when the underlying classical code is zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EaqeccParams {
    pub q: u32,
    pub n: usize,
    pub k: i64,
    pub d: Option<usize>,
    pub c: usize,
    pub rate: [i64; 2],
    pub net_rate: [i64; 2],
    pub flags: Flags,
}

fn ratio(num: i64, den: i64) -> [i64; 2] {
    let g = num.gcd(&den).max(1);
    [num / g, den / g]
}

impl EaqeccParams {
    pub fn new(q: u32, n: usize, k: i64, d: Option<usize>, c: usize) -> EaqeccParams {
        let ni = n as i64;
        let den = ni.max(1);
        let mut p = EaqeccParams {
            q,
            n,
            k,
            d,
            c,
            rate: ratio(k, den),
            net_rate: ratio(k - c as i64, den),
            flags: Flags {
                singleton: Singleton::Ok,
                maximal: ni - k == c as i64,
                degenerate: k <= 0,
                positive_net_rate: k > c as i64,
                rate_above_half: 2 * k > ni,
            },
        };
        p.flags.singleton = p.check_singleton();
        p
    }

    /// `n + c - k` against `2(d - 1)`.
    pub fn check_singleton(&self) -> Singleton {
        let Some(d) = self.d else {
            return Singleton::Ok;
        };
        let lhs = self.n as i64 + self.c as i64 - self.k;
        let rhs = 2 * (d as i64 - 1);
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Equal => Singleton::Mds,
            std::cmp::Ordering::Greater => Singleton::Ok,
            std::cmp::Ordering::Less => Singleton::Violated,
        }
    }

    pub fn is_mds(&self) -> bool {
        self.flags.singleton == Singleton::Mds
    }

    /// `(n, k, d, c)` with `d = 0` standing for unknown.
    pub fn tuple(&self) -> (usize, i64, usize, usize) {
        (self.n, self.k, self.d.unwrap_or(0), self.c)
    }
}

impl fmt::Display for EaqeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[[{},{},{};{}]]_{}", self.n, self.k, d, self.c, self.q),
            None => write!(f, "[[{},{},-;{}]]_{}", self.n, self.k, self.c, self.q),
        }
    }
}

fn alphabet(code: &LinearCode, form: Form) -> Result<u32> {
    match form {
        Form::Euclidean => Ok(code.field().order()),
        Form::Hermitian => code.field().hermitian_base(),
    }
}

/// `[[n, k1 + k2 - n + c, min(d1, d2); c]]` with `c = rank(H1 H2^t)`.
pub fn eaqecc_from_two_codes(c1: &LinearCode, c2: &LinearCode, budget: u64) -> Result<EaqeccParams> {
    if c1.field() != c2.field() {
        return Err(Error::MixedFields);
    }
    if c1.n() != c2.n() {
        return Err(Error::LengthMismatch(c1.n(), c2.n()));
    }
    let n = c1.n();
    let cross = c1.parity().mul(&c2.parity().transpose())?;
    let c = cross.rank();
    let k = c1.k() as i64 + c2.k() as i64 - n as i64 + c as i64;
    let d = match (c1.min_distance(budget)?, c2.min_distance(budget)?) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    Ok(EaqeccParams::new(c1.field().order(), n, k, d, c))
}

/// `[[n, 2k - n + c, d; c]]_q` for a code over GF(q^2) with `c = rank(H H^dagger)`.
pub fn eaqecc_hermitian(code: &LinearCode, budget: u64) -> Result<EaqeccParams> {
    let q = code.field().hermitian_base()?;
    let c = code.parity().gram_rank(Form::Hermitian, Some(q))?;
    let n = code.n();
    let k = 2 * code.k() as i64 - n as i64 + c as i64;
    Ok(EaqeccParams::new(q, n, k, code.min_distance(budget)?, c))
}

/// The pair `[[n, k - h, d; n - k - h]]` and `[[n, n - k - h, d_dual; k - h]]`
/// where `h` is the hull dimension.
pub fn eaqecc_from_hull(
    code: &LinearCode,
    form: Form,
    budget: u64,
) -> Result<(EaqeccParams, EaqeccParams)> {
    let q = alphabet(code, form)?;
    let (n, k) = (code.n(), code.k());
    let h = code.hull_dim(form)?;
    let c_primary = n - k - h;
    let c_dual = k - h;
    if code.parity().gram_rank(form, None)? != c_primary
        || code.generator().gram_rank(form, None)? != c_dual
    {
        return Err(Error::OracleDisagreement("ebit count vs Gram rank".into()));
    }
    let dual = code.dual_for(form)?;
    let primary = EaqeccParams::new(q, n, (k - h) as i64, code.min_distance(budget)?, c_primary);
    let second = EaqeccParams::new(q, n, (n - k - h) as i64, dual.min_distance(budget)?, c_dual);
    Ok((primary, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::testutil::*;
    use crate::code::DEFAULT_BUDGET;
    use crate::field::Field;
    use crate::linalg::Matrix;

    const B: u64 = DEFAULT_BUDGET;

    #[test]
    fn steane_parameters() {
        let h = hamming();
        let (p, d) = eaqecc_from_hull(&h, Form::Euclidean, B).unwrap();
        assert_eq!(p.tuple(), (7, 1, 3, 0));
        assert_eq!(d.tuple(), (7, 0, 4, 1));
        assert!(d.flags.degenerate);
        assert_eq!(eaqecc_from_two_codes(&h, &h, B).unwrap(), p);
    }

    #[test]
    fn repetition_pair() {
        let r = repetition();
        let (p, d) = eaqecc_from_hull(&r, Form::Euclidean, B).unwrap();
        assert_eq!(p.tuple(), (3, 1, 3, 2));
        assert_eq!(d.tuple(), (3, 2, 2, 1));
        assert!(p.is_mds() && d.is_mds());
        assert!(p.flags.maximal);
        assert_eq!(eaqecc_from_two_codes(&r, &r, B).unwrap().tuple(), (3, 1, 3, 2));
    }

    #[test]
    fn full_space_partner() {
        let f = Field::prime(2).unwrap();
        let full = LinearCode::from_generator(&Matrix::identity(&f, 7)).unwrap();
        let p = eaqecc_from_two_codes(&full, &hamming(), B).unwrap();
        // min{d1, d2} with d1 = 1 for the full space
        assert_eq!(p.tuple(), (7, 4, 1, 0));
    }

    #[test]
    fn hermitian_examples() {
        let f4 = Field::with_order(4).unwrap();
        let c = LinearCode::from_parity(&mat(&f4, &[&[1, 0]]));
        assert_eq!(eaqecc_hermitian(&c, B).unwrap().tuple(), (2, 1, 1, 1));
        let sd = LinearCode::from_generator(&mat(&f4, &[&[1, 2]])).unwrap();
        let p = eaqecc_hermitian(&sd, B).unwrap();
        assert_eq!((p.k, p.c), (0, 0));
        assert!(p.flags.degenerate);
        let (a, b) = eaqecc_from_hull(&sd, Form::Hermitian, B).unwrap();
        assert_eq!((a.k, a.c, b.k, b.c), (0, 0, 0, 0));
        let f9 = Field::with_order(9).unwrap();
        let c = LinearCode::from_parity(&mat(&f9, &[&[1, 1, 1]]));
        assert_eq!(eaqecc_hermitian(&c, B).unwrap().tuple(), (3, 1, 2, 0));
        assert_eq!(eaqecc_hermitian(&hamming(), B).unwrap_err(), Error::NotQuadraticExtension(2));
    }

    #[test]
    fn singleton_and_rates() {
        assert_eq!(EaqeccParams::new(2, 3, 1, Some(3), 2).check_singleton(), Singleton::Mds);
        assert_eq!(EaqeccParams::new(2, 7, 1, Some(3), 0).check_singleton(), Singleton::Ok);
        assert_eq!(EaqeccParams::new(2, 3, 2, Some(3), 0).check_singleton(), Singleton::Violated);
        let p = EaqeccParams::new(4, 5, 2, Some(4), 3);
        assert_eq!((p.rate, p.net_rate, p.flags.maximal), ([2, 5], [-1, 5], true));
        let p = EaqeccParams::new(2, 7, 1, Some(3), 0);
        assert!(p.flags.positive_net_rate && !p.flags.maximal);
        assert_eq!(EaqeccParams::new(2, 6, 6, Some(1), 0).rate, [1, 1]);
        assert_eq!(EaqeccParams::new(2, 6, 0, None, 0).rate, [0, 1]);
    }

    #[test]
    fn length_mismatch() {
        let f = Field::prime(2).unwrap();
        let c = LinearCode::from_generator(&Matrix::identity(&f, 3)).unwrap();
        assert_eq!(eaqecc_from_two_codes(&c, &hamming(), B).unwrap_err(), Error::LengthMismatch(3, 7));
    }
}
