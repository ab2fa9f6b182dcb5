//! Maximal-entanglement EAQECCs from LCD codes.

use serde::{Deserialize, Serialize};

use super::attach_output;
use crate::code::cyclic::splitting_field;
use crate::code::{cyclic_code, CyclicInput, LinearCode};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Form, Matrix};
use crate::report::{Claim, CodeFile, ConstructionReport};

/// `[[n, k, d; n - k]]` and `[[n, n - k, d_dual; k]]` from a Euclidean LCD code.
pub fn lcd_maximal(code: &LinearCode, budget: u64) -> Result<ConstructionReport> {
    if !code.is_lcd(Form::Euclidean)? {
        return Err(Error::NotLcd);
    }
    let (n, k) = (code.n(), code.k());
    let mut rep = ConstructionReport::new("lcd-maximal");
    rep.param("form", Form::Euclidean);
    rep.input = Some(serde_json::to_value(CodeFile::of(code)).unwrap());
    attach_output(&mut rep, code, Form::Euclidean, budget)?;
    let ea = rep.eaqecc.clone().unwrap();
    let dual = rep.eaqecc_dual.clone().unwrap();
    rep.claim(Claim::new("ebits", n - k, ea.c))
        .claim(Claim::new("dual_ebits", k, dual.c))
        .claim(Claim::new("maximal", true, ea.flags.maximal && dual.flags.maximal));
    Ok(rep)
}

/// Cyclic `[q + 1, k, q - k + 2]_q` MDS LCD code from a coset-symmetric
/// defining set around `0` (when `q + 1 - k` is odd) or around `q/2`.
pub fn cyclic_mds_lcd(q: u32, k: usize, budget: u64) -> Result<ConstructionReport> {
    let f = Field::with_order(q)?;
    let n = q as usize + 1;
    if k == 0 || k > n {
        return Err(Error::Precondition(format!("k must lie in 1..={n}")));
    }
    let (which, set): (&str, Vec<usize>) = if (n - k) % 2 == 1 {
        let mu = (q as usize - k) / 2;
        ("g1", (0..=2 * mu).map(|i| (i + n - mu) % n).collect())
    } else if q.is_multiple_of(2) {
        // k odd; k = q + 1 leaves the set empty
        let width = n - k;
        let start = (q as usize / 2 + 1).saturating_sub(width / 2);
        ("g2", (start..start + width).collect())
    } else {
        return Err(Error::ParityNotSupported(format!("q = {q} odd with k = {k} even")));
    };
    let (_, _, alpha) = splitting_field(&f, n)?;
    let (spec, code) = cyclic_code(&f, n, CyclicInput::DefiningSet(set))?;

    let mut rep = ConstructionReport::new("cyclic-mds-lcd");
    rep.param("q", q).param("k", k);
    rep.witness("generator", which)
        .witness("defining_set", &spec.defining_set)
        .witness("g", spec.g.coeffs())
        .witness("alpha", alpha);
    attach_output(&mut rep, &code, Form::Euclidean, budget)?;
    let d = code.min_distance(budget)?;
    let ea = rep.eaqecc.clone().unwrap();
    rep.claim(Claim::new("code", (n, k, n + 1 - k), (code.n(), code.k(), d)))
        .claim(Claim::new("self_reciprocal", true, spec.g.is_self_reciprocal()?))
        .claim(Claim::new("lcd", true, code.is_lcd(Form::Euclidean)?))
        .claim(Claim::new("eaqecc", (n, k as i64, n + 1 - k, n - k), ea.tuple()))
        .claim(Claim::new("mds", true, ea.is_mds()));
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SquareKind {
    /// `a^2 = -1`
    NegOneSquare,
    /// `a^2 + b^2 + 1 = 0`
    TwoSquare,
    /// `1 + a^2 + b^2 + c^2 + d^2 = 0`
    FourSquare,
}

/// Least tuple in lexicographic encoding order.
pub fn find_square_witnesses(f: &Field, kind: SquareKind) -> Result<Vec<u32>> {
    let len = match kind {
        SquareKind::NegOneSquare => 1,
        SquareKind::TwoSquare => 2,
        SquareKind::FourSquare => 4,
    };
    let target = f.neg(1);
    let sq: Vec<u32> = (0..f.order()).map(|a| f.mul(a, a)).collect();
    let q = f.order() as u64;
    let total = q.saturating_pow(len as u32);
    for idx in 0..total {
        let mut t = Vec::with_capacity(len);
        let mut x = idx;
        for _ in 0..len {
            t.push((x % q) as u32);
            x /= q;
        }
        t.reverse();
        let s = t.iter().fold(0, |acc, &a| f.add(acc, sq[a as usize]));
        if s == target {
            return Ok(t);
        }
    }
    Err(Error::NoWitness(format!("{kind:?} over GF({})", f.order())))
}

/// `G' = (I | l_1 A | ... | l_s A)` with `1 + sum l_i^2 = 0`, so `G' G'^t = I`.
pub fn lcd_s_expand(code: &LinearCode, s: usize, budget: u64) -> Result<ConstructionReport> {
    let f = code.field();
    let q = f.order();
    let lambdas: Vec<u32> = match s {
        2 if q.is_multiple_of(2) => vec![1, 1],
        3 if q % 4 == 1 => {
            let a = find_square_witnesses(f, SquareKind::NegOneSquare)?;
            vec![1, a[0], 0]
        }
        4 if q % 4 == 3 => {
            let w = find_square_witnesses(f, SquareKind::TwoSquare)?;
            vec![1, w[0], w[1], 0]
        }
        5 => {
            let w = find_square_witnesses(f, SquareKind::FourSquare)?;
            vec![1, w[0], w[1], w[2], w[3]]
        }
        2..=4 => {
            let need = ["q even", "q = 1 mod 4", "q = 3 mod 4"][s - 2];
            return Err(Error::CongruenceMismatch(format!("s = {s} needs {need}, got q = {q}")));
        }
        _ => return Err(Error::Precondition(format!("s must lie in 2..=5, got {s}"))),
    };
    let (n, k) = (code.n(), code.k());
    let (perm, a) = code.systematic();
    let mut gp = Matrix::identity(f, k);
    for &l in &lambdas {
        gp = gp.hstack(&a.scale(l))?;
    }
    let out = LinearCode::from_generator(&gp)?;
    let big_n = s * n - (s - 1) * k;
    let gram = gp.gram(Form::Euclidean, None)?;

    let mut rep = ConstructionReport::new("lcd-expand");
    rep.param("s", s);
    rep.input = Some(serde_json::to_value(CodeFile::of(code)).unwrap());
    rep.witness("permutation", &perm)
        .witness("lambda", &lambdas)
        .witness("generator", gp.to_rows());
    attach_output(&mut rep, &out, Form::Euclidean, budget)?;
    let d = code.min_distance(budget)?.unwrap_or(0);
    let dp = out.min_distance(budget)?;
    let ea = rep.eaqecc.clone().unwrap();
    rep.claim(Claim::new("length_ebits", (big_n, big_n - k), (ea.n, ea.c)))
        .claim(Claim::new("gram_nonsingular", true, gram.is_nonsingular()?))
        .claim(Claim::window("distance_window", d, (s * d).saturating_sub(1), dp));
    if s <= 3 {
        rep.claim(Claim::new("gram_identity", true, gram == Matrix::identity(f, k)));
    }
    Ok(rep)
}
