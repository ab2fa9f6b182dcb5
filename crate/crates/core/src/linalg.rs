//! Dense matrices over a finite field.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;

/// Bilinear or sesquilinear inner product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Euclidean,
    Hermitian,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Euclidean => "euclidean",
            Form::Hermitian => "hermitian",
        })
    }
}

impl std::str::FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Form> {
        match s {
            "euclidean" | "e" => Ok(Form::Euclidean),
            "hermitian" | "h" => Ok(Form::Hermitian),
            other => Err(Error::Parse(format!("unknown form `{other}`"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of row reduction.
#[derive(Clone, Debug)]
pub struct Rref {
    /// Row-equivalent matrix in reduced echelon form, zero rows kept at the bottom.
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<u32>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        for &c in &data {
            field.check(c as u64)?;
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    /// Builds a matrix from row vectors. An empty list gives a `0 x cols` matrix.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<u32>]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    pub(crate) fn from_raw(field: &Field, rows: usize, cols: usize, data: Vec<u32>) -> Matrix {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    fn same_field(&self, o: &Matrix) -> Result<()> {
        if self.field == o.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// Entrywise `a -> a^q`.
    pub fn conjugate(&self, q: u32) -> Result<Matrix> {
        let f = &self.field;
        let data = self
            .data
            .iter()
            .map(|&a| f.conjugate_over(a, q))
            .collect::<Result<Vec<_>>>()?;
        // an empty matrix still needs the field check
        if self.data.is_empty() {
            f.conjugate_over(0, q)?;
        }
        Ok(Matrix::from_raw(f, self.rows, self.cols, data))
    }

    /// Conjugate transpose.
    pub fn dagger(&self, q: u32) -> Result<Matrix> {
        Ok(self.conjugate(q)?.transpose())
    }

    pub fn mul(&self, o: &Matrix) -> Result<Matrix> {
        self.same_field(o)?;
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, o.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    let idx = i * o.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, o.get(t, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let f = &self.field;
        Matrix::from_raw(f, self.rows, self.cols, self.data.iter().map(|&a| f.mul(a, s)).collect())
    }

    pub fn add(&self, o: &Matrix) -> Result<Matrix> {
        self.same_field(o)?;
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::DimensionMismatch("matrix sum shapes differ".into()));
        }
        let f = &self.field;
        let data = self.data.iter().zip(&o.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Matrix::from_raw(f, self.rows, self.cols, data))
    }

    pub fn vstack(&self, o: &Matrix) -> Result<Matrix> {
        self.same_field(o)?;
        if self.cols != o.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} and {} columns",
                self.cols, o.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&o.data);
        Ok(Matrix::from_raw(&self.field, self.rows + o.rows, self.cols, data))
    }

    pub fn hstack(&self, o: &Matrix) -> Result<Matrix> {
        self.same_field(o)?;
        if self.rows != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot join {} and {} rows",
                self.rows, o.rows
            )));
        }
        let mut data = Vec::with_capacity(self.rows * (self.cols + o.cols));
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(o.row(r));
        }
        Ok(Matrix::from_raw(&self.field, self.rows, self.cols + o.cols, data))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix::from_raw(&self.field, idx.len(), self.cols, data)
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for r in 0..self.rows {
            data.extend(idx.iter().map(|&c| self.get(r, c)));
        }
        Matrix::from_raw(&self.field, self.rows, idx.len(), data)
    }

    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let t = m.get(i, c);
                if i == r || t == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(t, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical basis of the row space: the nonzero rows of the RREF.
    pub fn row_basis(&self) -> Matrix {
        let rr = self.rref();
        rr.matrix.select_rows(&(0..rr.rank).collect::<Vec<_>>())
    }

    /// Basis of `{v : M v^t = 0}` in RREF.
    pub fn null_space(&self) -> Matrix {
        let f = &self.field;
        let rr = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !rr.pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, 1);
            for (r, &pc) in rr.pivots.iter().enumerate() {
                out.set(i, pc, f.neg(rr.matrix.get(r, fc)));
            }
        }
        out.row_basis()
    }

    /// `M M^t` or `M M^dagger`.
    pub fn gram(&self, form: Form, q: Option<u32>) -> Result<Matrix> {
        match form {
            Form::Euclidean => self.mul(&self.transpose()),
            Form::Hermitian => {
                let q = match q {
                    Some(q) => q,
                    None => self.field.hermitian_base()?,
                };
                self.mul(&self.dagger(q)?)
            }
        }
    }

    pub fn gram_rank(&self, form: Form, q: Option<u32>) -> Result<usize> {
        Ok(self.gram(form, q)?.rank())
    }

    pub fn is_nonsingular(&self) -> Result<bool> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rank() == self.rows)
    }

    /// Applies a column permutation: column `j` of the result is column `perm[j]`.
    pub fn permute_cols(&self, perm: &[usize]) -> Matrix {
        self.select_cols(perm)
    }
}

/// Basis (RREF) of the intersection of two row spaces.
pub fn intersect_rowspaces(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.same_field(b)?;
    if a.cols != b.cols {
        return Err(Error::DimensionMismatch(format!(
            "row spaces in dimensions {} and {}",
            a.cols, b.cols
        )));
    }
    // rowspace(A) is the kernel of its null-space matrix
    let constraints = a.null_space().vstack(&b.null_space())?;
    let out = constraints.null_space();
    debug_assert_eq!(
        out.rows,
        a.rank() + b.rank() - a.vstack(b).unwrap().rank(),
        "intersection dimension"
    );
    Ok(out)
}

/// Independent intersection via the Zassenhaus sum-intersection method.
pub fn zassenhaus_intersection(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.same_field(b)?;
    if a.cols != b.cols {
        return Err(Error::DimensionMismatch("column counts differ".into()));
    }
    let n = a.cols;
    let top = a.hstack(a)?;
    let bot = b.hstack(&Matrix::zeros(&a.field, b.rows, n))?;
    let rr = top.vstack(&bot)?.rref();
    let rows: Vec<Vec<u32>> = (0..rr.rank)
        .filter(|&r| rr.matrix.row(r)[..n].iter().all(|&x| x == 0))
        .map(|r| rr.matrix.row(r)[n..].to_vec())
        .collect();
    Ok(Matrix::from_rows(&a.field, n, &rows)?.row_basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(f: &Field, rows: &[&[u32]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(f, cols, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn hamming_par(f: &Field) -> Matrix {
        m(f, &[&[1, 0, 0, 1, 0, 1, 1], &[0, 1, 0, 1, 1, 1, 0], &[0, 0, 1, 0, 1, 1, 1]])
    }

    fn random(f: &Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
        let q = f.order();
        Matrix::new(f, rows, cols, (0..rows * cols).map(|_| rng.gen_range(0..q)).collect()).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f2 = Field::prime(2).unwrap();
        let r = m(&f2, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!((r.rank, r.pivots), (1, vec![0]));
        let f5 = Field::prime(5).unwrap();
        assert_eq!(Matrix::identity(&f5, 3).rank(), 3);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(m(&f3, &[&[1, 2], &[2, 1]]).rank(), 1);
    }

    #[test]
    fn null_space_examples() {
        let f2 = Field::prime(2).unwrap();
        let ns = m(&f2, &[&[1, 1, 1]]).null_space();
        assert_eq!(ns.to_rows(), vec![vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(Matrix::identity(&f2, 4).null_space().rows(), 0);
        let h = hamming_par(&f2);
        let c = h.null_space();
        assert_eq!(c.rows(), 4);
        assert!(h.mul(&c.transpose()).unwrap().is_zero());
    }

    #[test]
    fn intersections() {
        let f2 = Field::prime(2).unwrap();
        let i = intersect_rowspaces(&Matrix::identity(&f2, 2), &m(&f2, &[&[1, 1]])).unwrap();
        assert_eq!(i.to_rows(), vec![vec![1, 1]]);
        let h = hamming_par(&f2);
        let c = h.null_space();
        let hull = intersect_rowspaces(&c, &h).unwrap();
        assert_eq!(hull.rows(), 3);
        assert_eq!(hull, h.row_basis());
    }

    #[test]
    fn intersection_methods_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for q in [2, 3, 4, 5, 9] {
            let f = Field::with_order(q).unwrap();
            for _ in 0..40 {
                let n = rng.gen_range(1..9);
                let a = random(&f, rng.gen_range(0..n + 1), n, &mut rng);
                let b = random(&f, rng.gen_range(0..n + 1), n, &mut rng);
                let x = intersect_rowspaces(&a, &b).unwrap();
                assert_eq!(x, zassenhaus_intersection(&a, &b).unwrap());
                assert_eq!(x, intersect_rowspaces(&b, &a).unwrap());
                assert_eq!(intersect_rowspaces(&a, &a).unwrap(), a.row_basis());
            }
        }
    }

    #[test]
    fn dagger_and_gram() {
        let f4 = Field::with_order(4).unwrap();
        let a = m(&f4, &[&[2]]);
        assert_eq!(a.dagger(2).unwrap().to_rows(), vec![vec![3]]);
        let b = m(&f4, &[&[1, 2, 3], &[0, 3, 1]]);
        let d = b.dagger(2).unwrap();
        assert_eq!((d.rows(), d.cols()), (3, 2));
        assert_eq!(d.dagger(2).unwrap(), b);
        assert_eq!(m(&f4, &[&[1, 0]]).gram_rank(Form::Hermitian, Some(2)).unwrap(), 1);

        let f2 = Field::prime(2).unwrap();
        assert_eq!(hamming_par(&f2).gram_rank(Form::Euclidean, None).unwrap(), 0);
        assert_eq!(m(&f2, &[&[1, 1, 1]]).gram_rank(Form::Euclidean, None).unwrap(), 1);
        assert_eq!(
            m(&f2, &[&[1]]).dagger(1).unwrap_err(),
            Error::NotQuadraticExtension(2)
        );
    }

    #[test]
    fn nonsingular() {
        let f3 = Field::prime(3).unwrap();
        assert!(Matrix::identity(&f3, 4).is_nonsingular().unwrap());
        assert!(!Matrix::zeros(&f3, 2, 2).is_nonsingular().unwrap());
        let f2 = Field::prime(2).unwrap();
        assert!(!m(&f2, &[&[1, 1], &[1, 1]]).is_nonsingular().unwrap());
        assert_eq!(
            Matrix::zeros(&f2, 1, 2).is_nonsingular(),
            Err(Error::NotSquare { rows: 1, cols: 2 })
        );
    }

    #[test]
    fn rank_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for q in [2, 3, 4, 9] {
            let f = Field::with_order(q).unwrap();
            for _ in 0..30 {
                let (r, c) = (rng.gen_range(0..7), rng.gen_range(0..9));
                let a = random(&f, r, c, &mut rng);
                let rk = a.rank();
                assert_eq!(rk, a.transpose().rank());
                assert_eq!(a.null_space().rows() + rk, c);
                if let Some(sq) = f.sub_order() {
                    assert_eq!(rk, a.dagger(sq).unwrap().rank());
                }
            }
        }
    }

    #[test]
    fn shape_errors() {
        let f2 = Field::prime(2).unwrap();
        let f3 = Field::prime(3).unwrap();
        assert!(matches!(
            intersect_rowspaces(&Matrix::zeros(&f2, 1, 2), &Matrix::zeros(&f2, 1, 3)),
            Err(Error::DimensionMismatch(_))
        ));
        assert_eq!(
            Matrix::zeros(&f2, 1, 2).mul(&Matrix::zeros(&f3, 2, 1)),
            Err(Error::MixedFields)
        );
        assert!(Matrix::from_rows(&f2, 2, &[vec![1, 0], vec![1]]).is_err());
    }
}
