//! Hermitian hull dimensions of a GRS family on cosets of GF(q)* in GF(q^2)*.

use super::least_alpha;
use crate::code::GrsSpec;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{intersect_rowspaces, Form};
use crate::params::eaqecc_from_hull;
use crate::params::Singleton;
use crate::report::{Claim, ConstructionReport, FieldFile, HullRow};

/// Points `beta_t omega^j` for `t < r`, `j < q - 1`, where `beta_t = w2^t`
/// and `omega = w2^(q+1)`. With `extra_point` a leading 0 is added whose
/// multiplier is the least `alpha` with `alpha^(q+1) != -(n - 1)`.
pub fn grs_hull_points(f: &Field, r: usize, extra_point: bool) -> Result<(Vec<u32>, Vec<u32>)> {
    let q = f.hermitian_base()? as u64;
    let w2 = f.primitive_element();
    let omega = f.pow(w2, q + 1);
    let mut w = Vec::new();
    for t in 0..r as u64 {
        let beta = f.pow(w2, t);
        for j in 0..q - 1 {
            w.push(f.mul(beta, f.pow(omega, j)));
        }
    }
    let mut gamma = vec![1u32; w.len()];
    if extra_point {
        // gamma gamma^dagger = number of ones
        let ones = f.from_int(w.len() as i64);
        let alpha = least_alpha(f, q + 1, ones)
            .ok_or_else(|| Error::WitnessSearchFailed("no admissible alpha".into()))?;
        w.insert(0, 0);
        gamma.insert(0, alpha);
    }
    Ok((gamma, w))
}

/// Case and hull change predicted by the coset recursion at `k >= 1`.
pub fn predicted_step(q: usize, k: usize) -> (u8, i64) {
    let i = k.div_ceil(q - 1);
    if k == (i - 1) * (q - 1) + 1 {
        (1, 0)
    } else if k <= q * (i - 1) + i + 1 {
        (2, -1)
    } else {
        (3, 1)
    }
}

/// Hull dimension stated by the explicit corollaries, when they apply.
pub fn closed_form_hull(q: usize, n: usize, k: usize) -> Option<usize> {
    if num_integer::gcd(n, q) != 1 || k == 0 {
        return None;
    }
    if k < q - 1 {
        Some(k - 1)
    } else if k < 2 * (q - 1) {
        k.checked_sub(2)
    } else if k == 2 * (q - 1) {
        k.checked_sub(3)
    } else {
        None
    }
}

pub fn grs_hull_family(q: u32, r: usize, extra_point: bool, budget: u64) -> Result<ConstructionReport> {
    if q <= 2 {
        return Err(Error::Precondition(format!("q > 2 required, got q = {q}")));
    }
    if r == 0 || r > q as usize + 1 || num_integer::gcd(r, q as usize) != 1 {
        return Err(Error::InvalidR(r));
    }
    let f = Field::with_order(q * q)?;
    let qq = q as usize;
    let (gamma, w) = grs_hull_points(&f, r, extra_point)?;
    let n = w.len();
    let base = GrsSpec::new(&f, 0, gamma.clone(), w.clone())?;

    let mut rows: Vec<HullRow> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let code = base.with_k(k).code();
        let gen = code.generator();
        let hull = intersect_rowspaces(gen, &code.dual_generator(Form::Hermitian)?)?.rows();
        let hull_by_rank = k - gen.gram_rank(Form::Hermitian, None)?;
        let (eaqecc, eaqecc_dual) = eaqecc_from_hull(&code, Form::Hermitian, budget)?;
        let (delta, predicted_case, predicted_delta) = match rows.last() {
            Some(prev) => {
                let (case, pd) = predicted_step(qq, k);
                (Some(hull as i64 - prev.hull as i64), Some(case), Some(pd))
            }
            None => (None, None, None),
        };
        rows.push(HullRow { k, hull, hull_by_rank, delta, predicted_case, predicted_delta, eaqecc, eaqecc_dual });
    }

    let mut rep = ConstructionReport::new("grs-hull");
    rep.param("q", q).param("r", r).param("extra_point", extra_point);
    rep.witness("field", FieldFile::of(&f)).witness("gamma", &gamma).witness("w", &w);

    let hulls: Vec<usize> = rows.iter().map(|h| h.hull).collect();
    let by_rank: Vec<usize> = rows.iter().map(|h| h.hull_by_rank).collect();
    let bounded = rows.iter().all(|h| h.hull <= h.k.min(n - h.k))
        && rows.iter().all(|h| h.delta.is_none_or(|d| d.abs() <= 1));
    let singleton = rows.iter().all(|h| {
        h.eaqecc.flags.singleton != Singleton::Violated
            && h.eaqecc_dual.flags.singleton != Singleton::Violated
    });
    let mut predicted = vec![0i64];
    for h in &rows[1..] {
        predicted.push(predicted.last().unwrap() + h.predicted_delta.unwrap());
    }
    rep.claim(Claim::new("hull_by_rank", &hulls, &by_rank))
        .claim(Claim::new("hull_at_zero", 0, hulls[0]))
        .claim(Claim::new("hull_bounds", true, bounded))
        .claim(Claim::new("singleton", true, singleton))
        .claim(Claim::new("predicted_hull", &predicted, &hulls));
    let cor: Vec<(usize, usize, usize)> = (0..=n)
        .filter_map(|k| closed_form_hull(qq, n, k).map(|h| (k, h, hulls[k])))
        .collect();
    if !cor.is_empty() {
        let claimed: Vec<usize> = cor.iter().map(|c| c.1).collect();
        let computed: Vec<usize> = cor.iter().map(|c| c.2).collect();
        rep.claim(Claim::new("closed_form_hull", claimed, computed));
    }
    rep.table = Some(rows);
    Ok(rep)
}
