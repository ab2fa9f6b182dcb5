//! Bordered parity-check extensions of dual-containing codes.

use super::{attach_output, code_with_dual, inner, least_alpha, norm_exponent};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Form, Matrix};
use crate::report::{Claim, CodeFile, ConstructionReport};

fn check_dual_containing(code: &LinearCode, form: Form) -> Result<()> {
    if code.is_dual_containing(form)? {
        Ok(())
    } else {
        Err(Error::NotDualContaining)
    }
}

fn alphabet(field: &Field, form: Form) -> Result<u32> {
    match form {
        Form::Euclidean => Ok(field.order()),
        Form::Hermitian => field.hermitian_base(),
    }
}

/// Complement `D` of the dual inside the code, from the code's RREF rows.
fn complement(dual: &Matrix, gen: &Matrix) -> Result<Matrix> {
    let mut acc = dual.clone();
    let mut rank = acc.rank();
    let mut picked = Vec::new();
    for r in 0..gen.rows() {
        let row = gen.select_rows(&[r]);
        let next = acc.vstack(&row)?;
        let rk = next.rank();
        if rk > rank {
            acc = next;
            rank = rk;
            picked.push(r);
        }
    }
    Ok(gen.select_rows(&picked))
}

/// Finds `c` pairwise orthogonal vectors of nonzero norm in the span of `d`.
fn orthogonal_witnesses(d: &Matrix, c: usize, form: Form) -> Result<Vec<Vec<u32>>> {
    let f = d.field();
    let mut space: Vec<Vec<u32>> = d.to_rows();
    let mut out = Vec::new();
    for i in 0..c {
        let x = pick_anisotropic(f, &space, form).ok_or_else(|| {
            Error::WitnessSearchFailed(format!("no vector of nonzero norm for x_{}", i + 1))
        })?;
        let nx = f.inv(inner(f, form, &x, &x)).unwrap();
        let projected: Vec<Vec<u32>> = space
            .iter()
            .map(|v| {
                let t = f.mul(inner(f, form, v, &x), nx);
                v.iter().zip(&x).map(|(&a, &b)| f.sub(a, f.mul(t, b))).collect()
            })
            .collect();
        space = Matrix::from_rows(f, d.cols(), &projected)?.row_basis().to_rows();
        out.push(x);
    }
    Ok(out)
}

/// Basis vectors first, then `b_i + l b_j` in index order.
fn pick_anisotropic(f: &Field, space: &[Vec<u32>], form: Form) -> Option<Vec<u32>> {
    let norm = |v: &[u32]| inner(f, form, v, v);
    if let Some(v) = space.iter().find(|v| norm(v) != 0) {
        return Some(v.clone());
    }
    for i in 0..space.len() {
        for j in i + 1..space.len() {
            for l in 1..f.order() {
                let v: Vec<u32> =
                    space[i].iter().zip(&space[j]).map(|(&a, &b)| f.add(a, f.mul(l, b))).collect();
                if norm(&v) != 0 {
                    return Some(v);
                }
            }
        }
    }
    None
}

/// `[[n + c, 2k - n, d'; c]]` with `d <= d' <= d + c`.
pub fn extend_multi(code: &LinearCode, c: usize, form: Form, budget: u64) -> Result<ConstructionReport> {
    let f = code.field();
    let q = alphabet(f, form)?;
    match form {
        Form::Euclidean if q <= 3 => {
            return Err(Error::Precondition(format!("q > 3 required, got q = {q}")))
        }
        Form::Hermitian if q <= 2 => {
            return Err(Error::Precondition(format!("q > 2 required, got q = {q}")))
        }
        _ => {}
    }
    check_dual_containing(code, form)?;
    let (n, k) = (code.n(), code.k());
    let ell = 2 * k - n;
    if c > ell {
        return Err(Error::TooManyEbitsRequested { requested: c, max: ell });
    }
    let h = code.dual_generator(form)?;
    let d_basis = complement(&h, code.generator())?;
    let xs = orthogonal_witnesses(&d_basis, c, form)?;
    let e = norm_exponent(f, form)?;
    let alphas = xs
        .iter()
        .map(|x| least_alpha(f, e, inner(f, form, x, x)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::WitnessSearchFailed("no admissible alpha".into()))?;

    let mut hp = Matrix::zeros(f, n - k + c, n + c);
    for r in 0..n - k {
        for j in 0..n {
            hp.set(r, c + j, h.get(r, j));
        }
    }
    for (i, (x, &a)) in xs.iter().zip(&alphas).enumerate() {
        hp.set(n - k + i, i, a);
        for (j, &v) in x.iter().enumerate() {
            hp.set(n - k + i, c + j, v);
        }
    }
    let out = code_with_dual(&hp, form)?;
    let rank = hp.gram_rank(form, None)?;

    let name = match form {
        Form::Euclidean => "extend-e-multi",
        Form::Hermitian => "extend-h-multi",
    };
    let mut rep = ConstructionReport::new(name);
    rep.param("c", c).param("form", form);
    rep.input = Some(serde_json::to_value(CodeFile::of(code)).unwrap());
    rep.witness("complement_basis", d_basis.to_rows())
        .witness("x", &xs)
        .witness("alpha", &alphas)
        .witness("parity", hp.to_rows());
    attach_output(&mut rep, &out, form, budget)?;
    let d = code.min_distance(budget)?;
    let dp = out.min_distance(budget)?;
    let ea = rep.eaqecc.clone().unwrap();
    rep.claim(Claim::new("ebits", c, rank))
        .claim(Claim::new("length", n + c, ea.n))
        .claim(Claim::new("logical", ell as i64, ea.k))
        .claim(Claim::window("distance_window", d.unwrap_or(0), d.unwrap_or(0) + c, dp));
    Ok(rep)
}

/// `[[n + 1, 2k - n - 1 + c, d'; c]]` with `d' in {d, d + 1}`.
pub fn extend_single(code: &LinearCode, c: usize, form: Form, budget: u64) -> Result<ConstructionReport> {
    let f = code.field();
    let q = alphabet(f, form)?;
    match form {
        Form::Euclidean => {
            let ok = match q {
                2 => c % 2 == 1,
                3 => !c.is_multiple_of(3),
                _ => true,
            };
            if !ok {
                return Err(Error::ConditionViolated(format!("q = {q} does not admit c = {c}")));
            }
        }
        Form::Hermitian if q <= 2 => {
            return Err(Error::Precondition(format!("q > 2 required, got q = {q}")))
        }
        Form::Hermitian => {}
    }
    let (n, k) = (code.n(), code.k());
    if c == 0 || c > n - k + 1 {
        return Err(Error::Precondition(format!("c must lie in 1..={}", n - k + 1)));
    }
    check_dual_containing(code, form)?;
    // rows of h are already (I | A) on the pivot columns
    let h = code.dual_generator(form)?;
    let pivots = h.rref().pivots;
    let mut x = vec![0u32; n];
    for &p in pivots.iter().take(c - 1) {
        x[p] = 1;
    }
    let e = norm_exponent(f, form)?;
    let xx = inner(f, form, &x, &x);
    let recipe = if num_integer::gcd(q as u64, c as u64) == 1 { 1 } else { f.primitive_element() };
    let (alpha, source) = if f.add(f.pow(recipe, e), xx) != 0 {
        (recipe, "recipe")
    } else {
        let a = least_alpha(f, e, xx)
            .ok_or_else(|| Error::WitnessSearchFailed("no admissible alpha".into()))?;
        (a, "search")
    };

    let mut hp = Matrix::zeros(f, n - k + 1, n + 1);
    hp.set(0, 0, alpha);
    for (j, &v) in x.iter().enumerate() {
        hp.set(0, 1 + j, v);
    }
    for r in 0..n - k {
        for j in 0..n {
            hp.set(1 + r, 1 + j, h.get(r, j));
        }
    }
    let out = code_with_dual(&hp, form)?;
    let rank = hp.gram_rank(form, None)?;

    let name = match form {
        Form::Euclidean => "extend-e-single",
        Form::Hermitian => "extend-h-single",
    };
    let mut rep = ConstructionReport::new(name);
    rep.param("c", c).param("form", form);
    rep.input = Some(serde_json::to_value(CodeFile::of(code)).unwrap());
    rep.witness("x", &x)
        .witness("alpha", alpha)
        .witness("alpha_source", source)
        .witness("pivots", &pivots)
        .witness("parity", hp.to_rows());
    attach_output(&mut rep, &out, form, budget)?;
    let d = code.min_distance(budget)?.unwrap_or(0);
    let dp = out.min_distance(budget)?;
    let ea = rep.eaqecc.clone().unwrap();
    rep.claim(Claim::new("ebits", c, rank))
        .claim(Claim::new("length", n + 1, ea.n))
        .claim(Claim::new("logical", 2 * k as i64 - n as i64 - 1 + c as i64, ea.k))
        .claim(Claim::window("distance_window", d, d + 1, dp));
    Ok(rep)
}

pub fn extend_euclidean_multi(code: &LinearCode, c: usize, budget: u64) -> Result<ConstructionReport> {
    extend_multi(code, c, Form::Euclidean, budget)
}

pub fn extend_hermitian_multi(code: &LinearCode, c: usize, budget: u64) -> Result<ConstructionReport> {
    extend_multi(code, c, Form::Hermitian, budget)
}

pub fn extend_euclidean_single(code: &LinearCode, c: usize, budget: u64) -> Result<ConstructionReport> {
    extend_single(code, c, Form::Euclidean, budget)
}

pub fn extend_hermitian_single(code: &LinearCode, c: usize, budget: u64) -> Result<ConstructionReport> {
    extend_single(code, c, Form::Hermitian, budget)
}
