//! One-ebit MDS extension of a Hermitian dual-containing GRS code.

use super::{attach_output, code_with_dual, inner, least_alpha, norm_exponent};
use crate::code::GrsSpec;
use crate::error::{Error, Result};
use crate::linalg::{Form, Matrix};
use crate::report::{Claim, ConstructionReport, GrsFile};

/// Borders the Hermitian dual's moment matrix with the next moment row.
/// For `C = [n, k]` the result is `[[n + 1, 2k - n, n - k + 2; 1]]_q`.
pub fn grs_mds_extend(spec: &GrsSpec, budget: u64) -> Result<ConstructionReport> {
    let f = &spec.field;
    let q = f.hermitian_base()?;
    if q <= 2 {
        return Err(Error::Precondition(format!("q > 2 required, got q = {q}")));
    }
    let code = spec.code();
    let (n, k) = (spec.n(), code.k());
    if !code.is_dual_containing(Form::Hermitian)? {
        return Err(Error::NotDualContaining);
    }
    let hd = spec.hermitian_dual_spec()?;
    if hd.code() != code.hermitian_dual()? {
        return Err(Error::NotMomentForm);
    }
    let h = hd.generator();
    let x = hd.moment_row(n - k);
    let xx = inner(f, Form::Hermitian, &x, &x);
    let alpha = least_alpha(f, norm_exponent(f, Form::Hermitian)?, xx)
        .ok_or_else(|| Error::WitnessSearchFailed("no admissible alpha".into()))?;

    let mut hp = Matrix::zeros(f, n - k + 1, n + 1);
    for r in 0..n - k {
        for j in 0..n {
            hp.set(r, 1 + j, h.get(r, j));
        }
    }
    hp.set(n - k, 0, alpha);
    for (j, &v) in x.iter().enumerate() {
        hp.set(n - k, 1 + j, v);
    }
    let out = code_with_dual(&hp, Form::Hermitian)?;
    let rank = hp.gram_rank(Form::Hermitian, None)?;

    let mut rep = ConstructionReport::new("grs-mds");
    rep.param("form", Form::Hermitian);
    rep.input = Some(serde_json::to_value(GrsFile::of(spec)).unwrap());
    rep.witness("x", &x)
        .witness("x_norm", xx)
        .witness("alpha", alpha)
        .witness("parity", hp.to_rows());
    attach_output(&mut rep, &out, Form::Hermitian, budget)?;
    let ea = rep.eaqecc.clone().unwrap();
    let dual = rep.eaqecc_dual.clone().unwrap();
    let dp = out.min_distance(budget)?;
    let (ni, ki) = (n as i64, k as i64);
    rep.claim(Claim::new("ebits", 1, rank))
        .claim(Claim::new("classical_distance", n - k + 2, dp))
        .claim(Claim::new(
            "eaqecc",
            (n + 1, 2 * ki - ni, n - k + 2, 1),
            ea.tuple(),
        ))
        .claim(Claim::new("mds", true, ea.is_mds()))
        .claim(Claim::new("dual_logical", 1, dual.k))
        .claim(Claim::new("dual_distance", k + 1, dual.d))
        .claim(Claim::new("dual_ebits_formula", 2 * ki - ni - 1, dual.c as i64))
        .claim(Claim::new("dual_mds", true, dual.is_mds()));
    Ok(rep)
}
