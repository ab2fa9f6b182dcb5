//! Exact minimum distance.
//!
//! Small dimensions enumerate every codeword with a p-ary Gray walk over the
//! message space viewed as GF(p)^{km}, so each step adds one scaled generator
//! row. Otherwise the smallest linearly dependent set of parity columns is
//! found by iterative deepening with an incremental echelon basis.

use super::LinearCode;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

pub const DEFAULT_BUDGET: u64 = 1 << 22;

pub(crate) fn min_distance(code: &LinearCode, budget: u64) -> Result<usize> {
    let q = code.field().order() as u64;
    let k = code.k() as u32;
    let enum_cost = q.checked_pow(k).unwrap_or(u64::MAX);
    if enum_cost <= budget {
        Ok(enumerate(code.generator()))
    } else {
        column_search(code.parity(), budget, upper_bound(code.generator()))
    }
}

fn upper_bound(gen: &Matrix) -> usize {
    (0..gen.rows())
        .map(|r| gen.row(r).iter().filter(|&&x| x != 0).count())
        .min()
        .unwrap_or(gen.cols())
}

/// Minimum nonzero weight over the row space of `gen` (rows assumed independent).
pub fn enumerate(gen: &Matrix) -> usize {
    let f = gen.field();
    let (p, m) = (f.characteristic() as u64, f.degree());
    let n = gen.cols();
    // basis over GF(p): x^t * row_r
    let mut basis: Vec<Vec<(usize, u32)>> = Vec::new();
    for r in 0..gen.rows() {
        for t in 0..m {
            let s = p.pow(t) as u32;
            basis.push(
                gen.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(i, &x)| (i, f.mul(x, s)))
                    .collect(),
            );
        }
    }
    let total = p.pow(basis.len() as u32);
    let mut word = vec![0u32; n];
    let mut weight = 0usize;
    let mut best = n;
    for i in 1..total {
        let (mut x, mut j) = (i, 0);
        while x % p == 0 {
            x /= p;
            j += 1;
        }
        for &(pos, v) in &basis[j] {
            let old = word[pos];
            let new = f.add(old, v);
            word[pos] = new;
            weight = weight + (new != 0) as usize - (old != 0) as usize;
        }
        if weight != 0 && weight < best {
            best = weight;
            if best == 1 {
                break;
            }
        }
    }
    best
}

struct Echelon<'a> {
    field: &'a Field,
    rows: Vec<(usize, Vec<u32>)>,
}

impl Echelon<'_> {
    /// Reduces `v` against the basis; returns the pivot-normalised residue
    /// or `None` if `v` is in the span.
    fn reduce(&self, v: &[u32]) -> Option<(usize, Vec<u32>)> {
        let f = self.field;
        let mut v = v.to_vec();
        for (piv, b) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        let piv = v.iter().position(|&x| x != 0)?;
        let inv = f.inv(v[piv]).unwrap();
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        Some((piv, v))
    }
}

fn column_search(par: &Matrix, budget: u64, upper: usize) -> Result<usize> {
    let n = par.cols();
    let cols: Vec<Vec<u32>> = (0..n).map(|c| (0..par.rows()).map(|r| par.get(r, c)).collect()).collect();
    let mut spent = 0u64;
    for t in 1..=par.rows() + 1 {
        let mut ech = Echelon { field: par.field(), rows: Vec::new() };
        match dfs(&cols, 0, t, &mut ech, &mut spent, budget) {
            Some(true) => return Ok(t),
            Some(false) => {}
            None => return Err(Error::BudgetExceeded { lower: t, upper }),
        }
    }
    unreachable!("any rows+1 columns are dependent")
}

/// `Some(true)` if a dependent set of exactly `t` columns extends the current
/// independent prefix, `None` when the budget runs out.
fn dfs(
    cols: &[Vec<u32>],
    start: usize,
    t: usize,
    ech: &mut Echelon,
    spent: &mut u64,
    budget: u64,
) -> Option<bool> {
    let depth = ech.rows.len();
    for c in start..cols.len() {
        if cols.len() - c < t - depth {
            break;
        }
        *spent += 1;
        if *spent > budget {
            return None;
        }
        match ech.reduce(&cols[c]) {
            None if depth + 1 == t => return Some(true),
            None => {}
            Some(row) if depth + 1 < t => {
                ech.rows.push(row);
                let r = dfs(cols, c + 1, t, ech, spent, budget);
                ech.rows.pop();
                match r {
                    Some(false) => {}
                    other => return other,
                }
            }
            Some(_) => {}
        }
    }
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::super::testutil::*;
    use super::*;
    use crate::code::{GrsSpec, LinearCode};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Plain mixed-radix enumeration of all messages.
    fn naive(gen: &Matrix) -> usize {
        let f = gen.field();
        let (q, k, n) = (f.order() as u64, gen.rows(), gen.cols());
        let mut best = n;
        for idx in 1..q.pow(k as u32) {
            let mut x = idx;
            let mut w = vec![0u32; n];
            for r in 0..k {
                let a = (x % q) as u32;
                x /= q;
                for (i, wi) in w.iter_mut().enumerate() {
                    *wi = f.add(*wi, f.mul(a, gen.get(r, i)));
                }
            }
            best = best.min(w.iter().filter(|&&v| v != 0).count());
        }
        best
    }

    #[test]
    fn known_distances() {
        assert_eq!(hamming().min_distance(DEFAULT_BUDGET).unwrap(), Some(3));
        assert_eq!(repetition().min_distance(DEFAULT_BUDGET).unwrap(), Some(3));
        let f5 = Field::prime(5).unwrap();
        let grs = GrsSpec::new(&f5, 2, vec![1, 1, 1, 1], vec![0, 1, 2, 3]).unwrap().code();
        assert_eq!(grs.min_distance(DEFAULT_BUDGET).unwrap(), Some(3));
    }

    #[test]
    fn both_paths_match_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for q in [2, 3, 4, 5, 8, 9] {
            let f = Field::with_order(q).unwrap();
            for _ in 0..25 {
                let n = rng.gen_range(2..9);
                let k = rng.gen_range(1..n.min(5));
                let data = (0..k * n).map(|_| rng.gen_range(0..q)).collect();
                let g = Matrix::new(&f, k, n, data).unwrap();
                if g.is_zero() {
                    continue;
                }
                let c = LinearCode::from_generator(&g).unwrap();
                let expect = naive(c.generator());
                assert_eq!(enumerate(c.generator()), expect);
                assert_eq!(column_search(c.parity(), u64::MAX, n).unwrap(), expect);
            }
        }
    }

    #[test]
    fn budget_reports_bounds() {
        let c = hamming();
        match column_search(c.parity(), 3, 3) {
            Err(Error::BudgetExceeded { lower, upper }) => assert!(lower <= 3 && upper >= 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_code_has_no_distance() {
        let f = Field::prime(2).unwrap();
        let z = LinearCode::from_span(&Matrix::zeros(&f, 1, 4));
        assert_eq!(z.min_distance(DEFAULT_BUDGET).unwrap(), None);
        let full = LinearCode::from_generator(&Matrix::identity(&f, 4)).unwrap();
        assert_eq!(column_search(full.parity(), 100, 1).unwrap(), 1);
    }
}
