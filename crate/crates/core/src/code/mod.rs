//! Linear codes, duals and hulls.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{intersect_rowspaces, Form, Matrix};

pub mod cyclic;
pub mod distance;
pub mod expand;
pub mod grs;

pub use cyclic::{cyclic_code, rs_code, CyclicInput, CyclicSpec};
pub use distance::DEFAULT_BUDGET;
pub use expand::expand_code;
pub use grs::GrsSpec;

/// An `[n, k]` code stored as canonical (RREF) generator and parity matrices.
///
/// `par` is always the Euclidean parity matrix, `gen * par^t = 0`. The
/// Hermitian dual is generated by `conj(par)`.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Field,
    n: usize,
    gen: Matrix,
    par: Matrix,
    distance: OnceLock<usize>,
    hull_e: OnceLock<usize>,
    hull_h: OnceLock<usize>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.gen == other.gen
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    /// Code spanned by the rows of `g`. Redundant rows are dropped.
    pub fn from_generator(g: &Matrix) -> Result<LinearCode> {
        if g.is_zero() {
            return Err(Error::ZeroMatrix);
        }
        Ok(Self::from_span(g))
    }

    /// Code with parity-check matrix `h`; a zero `h` gives the full space.
    pub fn from_parity(h: &Matrix) -> LinearCode {
        Self::from_span(&h.null_space())
    }

    /// Like [`LinearCode::from_generator`] but the zero code is allowed.
    pub fn from_span(g: &Matrix) -> LinearCode {
        let gen = g.row_basis();
        let par = gen.null_space();
        LinearCode {
            field: g.field().clone(),
            n: g.cols(),
            gen,
            par,
            distance: OnceLock::new(),
            hull_e: OnceLock::new(),
            hull_h: OnceLock::new(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn parity(&self) -> &Matrix {
        &self.par
    }

    pub fn dual(&self) -> LinearCode {
        Self::from_span(&self.par)
    }

    pub fn hermitian_dual(&self) -> Result<LinearCode> {
        let q = self.field.hermitian_base()?;
        Ok(Self::from_span(&self.par.conjugate(q)?))
    }

    /// Generator of the dual with respect to `form`.
    pub fn dual_for(&self, form: Form) -> Result<LinearCode> {
        match form {
            Form::Euclidean => Ok(self.dual()),
            Form::Hermitian => self.hermitian_dual(),
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let f = &self.field;
        (0..self.par.rows()).all(|r| {
            self.par.row(r).iter().zip(v).fold(0, |acc, (&h, &x)| f.add(acc, f.mul(h, x))) == 0
        })
    }

    /// Parity-check matrix whose rows generate the `form`-dual.
    pub fn dual_generator(&self, form: Form) -> Result<Matrix> {
        match form {
            Form::Euclidean => Ok(self.par.clone()),
            Form::Hermitian => self.par.conjugate(self.field.hermitian_base()?),
        }
    }

    /// Hull dimension by subspace intersection, checked against the rank
    /// identity `rank(H H^*) = n - k - hull`.
    pub fn hull_dim(&self, form: Form) -> Result<usize> {
        let cell = match form {
            Form::Euclidean => &self.hull_e,
            Form::Hermitian => &self.hull_h,
        };
        if let Some(&h) = cell.get() {
            return Ok(h);
        }
        let h = intersect_rowspaces(&self.gen, &self.dual_generator(form)?)?.rows();
        let by_rank = self.n - self.k() - self.par.gram_rank(form, None)?;
        if h != by_rank {
            return Err(Error::OracleDisagreement(format!(
                "{form} hull: intersection {h}, rank identity {by_rank}"
            )));
        }
        Ok(*cell.get_or_init(|| h))
    }

    pub fn is_lcd(&self, form: Form) -> Result<bool> {
        let lcd = self.hull_dim(form)? == 0;
        let gram = self.par.gram(form, None)?;
        if gram.is_nonsingular()? != lcd {
            return Err(Error::OracleDisagreement("LCD test vs Gram nonsingularity".into()));
        }
        Ok(lcd)
    }

    pub fn is_dual_containing(&self, form: Form) -> Result<bool> {
        Ok(self.hull_dim(form)? == self.n - self.k())
    }

    /// Minimum distance, `None` for the zero code.
    pub fn min_distance(&self, budget: u64) -> Result<Option<usize>> {
        if self.k() == 0 {
            return Ok(None);
        }
        if let Some(&d) = self.distance.get() {
            return Ok(Some(d));
        }
        let d = distance::min_distance(self, budget)?;
        Ok(Some(*self.distance.get_or_init(|| d)))
    }

    /// Distance already computed, if any.
    pub fn cached_distance(&self) -> Option<usize> {
        self.distance.get().copied()
    }

    /// Generator `(I_k | A)` after a column permutation. Returns the
    /// permutation (column `j` of the systematic code is column `perm[j]`
    /// of this one) and `A`.
    pub fn systematic(&self) -> (Vec<usize>, Matrix) {
        let k = self.k();
        let rr = self.gen.rref();
        let mut perm = rr.pivots.clone();
        perm.extend((0..self.n).filter(|c| !rr.pivots.contains(c)));
        let g = self.gen.permute_cols(&perm);
        let rest: Vec<usize> = (k..self.n).collect();
        (perm, g.select_cols(&rest))
    }

    /// The code with coordinates permuted as in [`LinearCode::systematic`].
    pub fn permuted(&self, perm: &[usize]) -> LinearCode {
        let out = Self::from_span(&self.gen.permute_cols(perm));
        if let Some(&d) = self.distance.get() {
            let _ = out.distance.set(d);
        }
        out
    }
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::*;

    pub fn mat(f: &Field, rows: &[&[u32]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(f, cols, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    pub fn hamming() -> LinearCode {
        let f = Field::prime(2).unwrap();
        LinearCode::from_parity(&mat(
            &f,
            &[&[1, 0, 0, 1, 0, 1, 1], &[0, 1, 0, 1, 1, 1, 0], &[0, 0, 1, 0, 1, 1, 1]],
        ))
    }

    pub fn repetition() -> LinearCode {
        let f = Field::prime(2).unwrap();
        LinearCode::from_generator(&mat(&f, &[&[1, 1, 1]])).unwrap()
    }
}
