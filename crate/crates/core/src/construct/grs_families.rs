//! Concrete Hermitian dual-containing GRS codes for four known length families.
//!
//! For a point set `w` in GF(q^2) and self-orthogonal dimension `k'`, the
//! multipliers are found from `v in (GF(q)*)^n` with
//! `sum v_i w_i^(a + q b) = 0` for all `a, b <= k'` except `a = b = k'`, and
//! `gamma_i^(q+1) = v_i`. The extra equations make the next moment row
//! orthogonal to the code, which the one-ebit extension needs. When they have
//! no solution only the `a, b < k'` equations are imposed.

use serde::{Deserialize, Serialize};

use crate::code::GrsSpec;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// Search cap on subfield combinations of the null-space basis.
const COMBINATION_CAP: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrsCandidate {
    pub row: u8,
    pub q: u32,
    pub n: usize,
    /// Dimension of the dual-containing code.
    pub k: usize,
    pub a: usize,
    pub m: usize,
    pub r: usize,
}

impl GrsCandidate {
    pub fn self_orthogonal_dim(&self) -> usize {
        self.n - self.k
    }
}

fn divisors(x: usize) -> Vec<usize> {
    (1..=x).filter(|d| x.is_multiple_of(*d)).collect()
}

/// Every `(row, n, k)` admitted by the four families at this `q`.
pub fn grs_candidates(q: u32) -> Vec<GrsCandidate> {
    let qq = q as usize;
    let units = qq * qq - 1;
    let mut out = Vec::new();
    let mut push = |row, n: usize, kp: usize, a, m, r| {
        if n >= 2 && kp >= 1 && 2 * kp <= n {
            out.push(GrsCandidate { row, q, n, k: n - kp, a, m, r });
        }
    };
    for m in divisors(units) {
        let kmax = (m - 1) / (qq + 1);
        for r in 1..=units / m {
            for n in [r * m, r * m + 1] {
                for kp in 1..=kmax {
                    push(1, n, kp, 0, m, r);
                }
            }
        }
    }
    for m in 1..=qq {
        for n in (m * qq + 1).saturating_sub(qq)..=m * qq {
            let r = m * qq - n;
            let top = (qq - 1).saturating_sub(r / m) / 2;
            for kp in 2..=top {
                push(2, n, kp, 0, m, r);
            }
        }
    }
    if (qq - 1).is_multiple_of(2) {
        for a in divisors((qq - 1) / 2) {
            let m = (qq - 1) / (2 * a);
            let n = units / a;
            for kp in 1..=(a + 1) * m {
                push(3, n, kp, a, m, 0);
            }
        }
    }
    if (qq + 1).is_multiple_of(2) {
        for a in divisors(qq.div_ceil(2)) {
            let m = (qq + 1) / (2 * a);
            let n = (units / (2 * a) + 1).saturating_sub(qq);
            for kp in 1..=((a + 1) * m).saturating_sub(3) {
                push(4, n, kp, a, m, 0);
            }
        }
    }
    out
}

/// Evaluation points for a candidate, inside GF(q^2).
pub fn candidate_points(f: &Field, c: &GrsCandidate) -> Vec<u32> {
    let q = c.q as u64;
    let units = q * q - 1;
    let w2 = f.primitive_element();
    let root = |order: u64, j: u64| f.pow(w2, j * (units / order));
    match c.row {
        1 => {
            let mut pts = Vec::new();
            if c.n == c.r * c.m + 1 {
                pts.push(0);
            }
            for t in 0..c.r as u64 {
                for j in 0..c.m as u64 {
                    pts.push(f.mul(f.pow(w2, t), root(c.m as u64, j)));
                }
            }
            pts
        }
        2 => {
            let sub: Vec<u32> = (0..f.order()).filter(|&a| f.pow(a, q) == a).collect();
            let mut pts = Vec::new();
            for &l in sub.iter().take(c.m) {
                for &b in &sub {
                    pts.push(f.add(f.mul(l, w2), b));
                }
            }
            pts.truncate(c.n);
            pts
        }
        3 => (0..c.n as u64).map(|j| root(c.n as u64, j)).collect(),
        _ => {
            let big = units / (2 * c.a as u64);
            (0..big).map(|j| root(big, j)).filter(|&x| f.pow(x, q - 1) != 1).collect()
        }
    }
}

/// Writes `c = c0 + c1 theta` with `c0, c1` in GF(q).
fn split(f: &Field, q: u64, theta: u32, c: u32) -> (u32, u32) {
    let denom = f.sub(theta, f.pow(theta, q));
    let c1 = f.div(f.sub(c, f.pow(c, q)), denom).unwrap();
    (f.sub(c, f.mul(c1, theta)), c1)
}

fn solve_multipliers(f: &Field, q: u64, w: &[u32], kp: usize, extended: bool) -> Option<Vec<u32>> {
    let n = w.len();
    let theta = f.primitive_element();
    let top = if extended { kp + 1 } else { kp };
    let mut rows = Vec::new();
    for a in 0..top {
        for b in 0..top {
            if extended && a == kp && b == kp {
                continue;
            }
            let e = a as u64 + q * b as u64;
            let (r0, r1): (Vec<u32>, Vec<u32>) =
                w.iter().map(|&x| split(f, q, theta, f.pow(x, e))).unzip();
            rows.push(r0);
            rows.push(r1);
        }
    }
    let basis = Matrix::from_rows(f, n, &rows).ok()?.null_space();
    let dim = basis.rows() as u32;
    let sub: Vec<u32> = (0..f.order()).filter(|&a| f.pow(a, q) == a).collect();
    let total = q.checked_pow(dim).unwrap_or(u64::MAX).min(COMBINATION_CAP);
    for idx in 1..total {
        let mut x = idx;
        let mut v = vec![0u32; n];
        for r in 0..dim as usize {
            let coef = sub[(x % q) as usize];
            x /= q;
            if coef == 0 {
                continue;
            }
            for (i, vi) in v.iter_mut().enumerate() {
                *vi = f.add(*vi, f.mul(coef, basis.get(r, i)));
            }
        }
        if v.iter().all(|&x| x != 0) {
            return Some(v);
        }
    }
    None
}

/// A Hermitian dual-containing `[n, k]` GRS code for the candidate, and
/// whether the extended orthogonality equations were met.
pub fn realize_candidate(c: &GrsCandidate) -> Result<(GrsSpec, bool)> {
    let f = Field::with_order(c.q * c.q)?;
    let q = c.q as u64;
    let w = candidate_points(&f, c);
    if w.len() != c.n {
        return Err(Error::Precondition(format!("point set has {} elements", w.len())));
    }
    let kp = c.self_orthogonal_dim();
    let (v, extended) = match solve_multipliers(&f, q, &w, kp, true) {
        Some(v) => (v, true),
        None => {
            let v = solve_multipliers(&f, q, &w, kp, false).ok_or_else(|| {
                Error::WitnessSearchFailed(format!("no multipliers for row {} n={} k={}", c.row, c.n, c.k))
            })?;
            (v, false)
        }
    };
    let gamma: Vec<u32> = v
        .iter()
        .map(|&t| (1..f.order()).find(|&g| f.pow(g, q + 1) == t).expect("norm is onto"))
        .collect();
    let self_orth = GrsSpec::new(&f, kp, gamma, w)?;
    Ok((self_orth.hermitian_dual_spec()?, extended))
}
