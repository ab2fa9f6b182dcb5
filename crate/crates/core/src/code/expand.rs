//! Subfield expansion of a code over GF(q^m) to GF(q).

use super::LinearCode;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// Coordinates of every big-field element in a basis over the small field.
pub struct Decomposition {
    coords: Vec<Vec<u32>>,
}

impl Decomposition {
    pub fn new(emb: &Embedding, basis: &[u32]) -> Result<Decomposition> {
        let (small, big) = (emb.small(), emb.big());
        let m = (big.degree() / small.degree()) as usize;
        if basis.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "basis has {} elements, degree is {m}",
                basis.len()
            )));
        }
        let qs = small.order() as u64;
        let mut coords: Vec<Option<Vec<u32>>> = vec![None; big.order() as usize];
        for idx in 0..qs.pow(m as u32) {
            let mut x = idx;
            let mut c = Vec::with_capacity(m);
            let mut acc = 0;
            for &b in basis {
                let a = (x % qs) as u32;
                x /= qs;
                acc = big.add(acc, big.mul(emb.up(a), b));
                c.push(a);
            }
            if coords[acc as usize].replace(c).is_some() {
                return Err(Error::DependentBasis);
            }
        }
        Ok(Decomposition { coords: coords.into_iter().map(Option::unwrap).collect() })
    }

    pub fn coords(&self, a: u32) -> &[u32] {
        &self.coords[a as usize]
    }
}

/// The `[nm, km]` expansion of `code` with respect to `basis`.
pub fn expand_code(code: &LinearCode, small: &Field, basis: &[u32]) -> Result<LinearCode> {
    let big = code.field();
    let emb = Embedding::new(small, big)?;
    let dec = Decomposition::new(&emb, basis)?;
    let g = code.generator();
    let mut rows = Vec::with_capacity(g.rows() * basis.len());
    for r in 0..g.rows() {
        for &b in basis {
            rows.push(g.row(r).iter().flat_map(|&x| dec.coords(big.mul(b, x)).to_vec()).collect());
        }
    }
    let m = basis.len();
    let out = Matrix::from_rows(small, code.n() * m, &rows)?;
    Ok(LinearCode::from_span(&out))
}
