//! Generalized Reed-Solomon codes.

use super::LinearCode;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// `GRS_k(gamma, w)`: rows `gamma_i w_i^j` for `j < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrsSpec {
    pub field: Field,
    pub k: usize,
    pub gamma: Vec<u32>,
    pub w: Vec<u32>,
}

impl GrsSpec {
    pub fn new(field: &Field, k: usize, gamma: Vec<u32>, w: Vec<u32>) -> Result<GrsSpec> {
        if gamma.len() != w.len() {
            return Err(Error::LengthMismatch(gamma.len(), w.len()));
        }
        if k > w.len() {
            return Err(Error::DimensionMismatch(format!("k = {k} exceeds n = {}", w.len())));
        }
        for &x in gamma.iter().chain(&w) {
            field.check(x as u64)?;
        }
        if let Some(i) = gamma.iter().position(|&g| g == 0) {
            return Err(Error::ZeroMultiplier(i));
        }
        let mut seen = vec![false; field.order() as usize];
        for &x in &w {
            if std::mem::replace(&mut seen[x as usize], true) {
                return Err(Error::RepeatedEvaluationPoint(x));
            }
        }
        Ok(GrsSpec { field: field.clone(), k, gamma, w })
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    /// Moment row `j`: `(gamma_i w_i^j)_i`.
    pub fn moment_row(&self, j: usize) -> Vec<u32> {
        let f = &self.field;
        self.gamma.iter().zip(&self.w).map(|(&g, &w)| f.mul(g, f.pow(w, j as u64))).collect()
    }

    /// The `k x n` moment matrix.
    pub fn generator(&self) -> Matrix {
        let rows: Vec<Vec<u32>> = (0..self.k).map(|j| self.moment_row(j)).collect();
        let data = rows.concat();
        Matrix::from_raw(&self.field, self.k, self.n(), data)
    }

    pub fn code(&self) -> LinearCode {
        LinearCode::from_span(&self.generator())
    }

    /// `gamma'_i = 1 / (gamma_i prod_{j != i} (w_i - w_j))`.
    pub fn dual_multipliers(&self) -> Vec<u32> {
        let f = &self.field;
        (0..self.n())
            .map(|i| {
                let prod = (0..self.n())
                    .filter(|&j| j != i)
                    .fold(self.gamma[i], |acc, j| f.mul(acc, f.sub(self.w[i], self.w[j])));
                f.inv(prod).expect("distinct points and nonzero multipliers")
            })
            .collect()
    }

    /// The Euclidean dual as a GRS code of dimension n - k.
    pub fn euclidean_dual_spec(&self) -> GrsSpec {
        GrsSpec {
            field: self.field.clone(),
            k: self.n() - self.k,
            gamma: self.dual_multipliers(),
            w: self.w.clone(),
        }
    }

    /// The Hermitian dual as a GRS code: the conjugate of the Euclidean dual.
    pub fn hermitian_dual_spec(&self) -> Result<GrsSpec> {
        let q = self.field.hermitian_base()?;
        let e = self.euclidean_dual_spec();
        let conj = |v: &[u32]| v.iter().map(|&a| self.field.pow(a, q as u64)).collect();
        Ok(GrsSpec { field: e.field.clone(), k: e.k, gamma: conj(&e.gamma), w: conj(&e.w) })
    }

    /// Same points and multipliers, another dimension.
    pub fn with_k(&self, k: usize) -> GrsSpec {
        GrsSpec { k, ..self.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_BUDGET;

    #[test]
    fn moment_matrix() {
        let f3 = Field::prime(3).unwrap();
        let s = GrsSpec::new(&f3, 2, vec![1, 1, 1], vec![0, 1, 2]).unwrap();
        assert_eq!(s.generator().to_rows(), vec![vec![1, 1, 1], vec![0, 1, 2]]);
    }

    #[test]
    fn validation() {
        let f4 = Field::with_order(4).unwrap();
        assert_eq!(
            GrsSpec::new(&f4, 1, vec![1, 0], vec![0, 1]).unwrap_err(),
            Error::ZeroMultiplier(1)
        );
        assert_eq!(
            GrsSpec::new(&f4, 1, vec![1, 1], vec![2, 2]).unwrap_err(),
            Error::RepeatedEvaluationPoint(2)
        );
    }

    #[test]
    fn always_mds() {
        let f4 = Field::with_order(4).unwrap();
        let s = GrsSpec::new(&f4, 1, vec![1; 4], vec![0, 1, 2, 3]).unwrap();
        assert_eq!(s.code().min_distance(DEFAULT_BUDGET).unwrap(), Some(4));
        let f9 = Field::with_order(9).unwrap();
        let w: Vec<u32> = (0..8).collect();
        let gamma: Vec<u32> = (1..9).collect();
        for k in 1..8 {
            let c = GrsSpec::new(&f9, k, gamma.clone(), w.clone()).unwrap().code();
            assert_eq!(c.min_distance(DEFAULT_BUDGET).unwrap(), Some(8 - k + 1));
        }
    }

    #[test]
    fn dual_specs() {
        let f9 = Field::with_order(9).unwrap();
        let s = GrsSpec::new(&f9, 3, vec![1, 2, 3, 4, 5, 6], vec![0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(s.euclidean_dual_spec().code(), s.code().dual());
        assert_eq!(s.hermitian_dual_spec().unwrap().code(), s.code().hermitian_dual().unwrap());
    }
}
