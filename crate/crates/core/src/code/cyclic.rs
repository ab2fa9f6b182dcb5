//! Cyclic codes of length n coprime to q, and Reed-Solomon codes.

use super::LinearCode;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::field::{multiplicative_order, Field};
use crate::linalg::Matrix;
use crate::poly::Poly;

#[derive(Clone, Debug)]
pub enum CyclicInput {
    DefiningSet(Vec<usize>),
    Generator(Poly),
}

#[derive(Clone, Debug)]
pub struct CyclicSpec {
    pub field: Field,
    pub n: usize,
    /// Exponents `a` with `g(alpha^a) = 0`, sorted.
    pub defining_set: Vec<usize>,
    pub g: Poly,
    /// `t` with the splitting field GF(q^t).
    pub splitting_degree: u32,
}

/// The splitting field of `x^n - 1` over `field`, its embedding, and the
/// canonical primitive n-th root `omega^((q^t - 1)/n)`.
pub fn splitting_field(field: &Field, n: usize) -> Result<(Embedding, u32, u32)> {
    let q = field.order();
    if n == 0 || num_integer::gcd(n as u64, q as u64) != 1 {
        return Err(Error::NonCoprimeLength { n, q });
    }
    let t = multiplicative_order(q as u64, n as u64) as u32;
    let big = if t == 1 {
        field.clone()
    } else {
        Field::new(field.characteristic(), field.degree() * t, None)?
    };
    let emb = Embedding::new(field, &big)?;
    let alpha = big.exp((big.order() as u64 - 1) / n as u64);
    Ok((emb, t, alpha))
}

/// Builds the cyclic code from a defining set or a generator polynomial.
pub fn cyclic_code(field: &Field, n: usize, input: CyclicInput) -> Result<(CyclicSpec, LinearCode)> {
    let (emb, t, alpha) = splitting_field(field, n)?;
    let big = emb.big();
    let q = field.order() as u64;
    let (g, defining_set) = match input {
        CyclicInput::DefiningSet(set) => {
            let mut set: Vec<usize> = set.into_iter().map(|a| a % n).collect();
            set.sort_unstable();
            set.dedup();
            for &a in &set {
                let b = (a as u64 * q % n as u64) as usize;
                if set.binary_search(&b).is_err() {
                    return Err(Error::NotCosetClosed(b));
                }
            }
            let roots: Vec<u32> = set.iter().map(|&a| big.pow(alpha, a as u64)).collect();
            let big_g = Poly::from_roots(big, &roots);
            let coeffs = big_g
                .coeffs()
                .iter()
                .map(|&c| emb.down(c).ok_or(Error::NotCosetClosed(n)))
                .collect::<Result<Vec<_>>>()?;
            (Poly::raw(field, coeffs), set)
        }
        CyclicInput::Generator(g) => {
            if g.field() != field {
                return Err(Error::MixedFields);
            }
            if g.is_zero() || !g.divides(&Poly::x_n_minus_one(field, n))? {
                return Err(Error::NotDivisor);
            }
            let g = g.monic();
            let up = Poly::raw(big, g.coeffs().iter().map(|&c| emb.up(c)).collect());
            let set = (0..n).filter(|&a| up.eval(big.pow(alpha, a as u64)) == 0).collect();
            (g, set)
        }
    };
    let deg = g.degree() as usize;
    let k = n - deg;
    let mut gm = Matrix::zeros(field, k.max(1), n);
    for r in 0..k {
        for (i, &c) in g.coeffs().iter().enumerate() {
            gm.set(r, r + i, c);
        }
    }
    let code = LinearCode::from_span(&gm);
    let spec = CyclicSpec { field: field.clone(), n, defining_set, g, splitting_degree: t };
    Ok((spec, code))
}

/// Reed-Solomon code of length q-1 with generator `(x - a)...(x - a^{r-1})`.
pub fn rs_code(field: &Field, r: usize) -> Result<(CyclicSpec, LinearCode)> {
    let n = field.order() as usize - 1;
    if r < 1 || r > n {
        return Err(Error::RedundancyOutOfRange { r, max: n });
    }
    cyclic_code(field, n, CyclicInput::DefiningSet((1..r).collect()))
}
