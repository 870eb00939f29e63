//! Dense matrices and Gaussian elimination over a [`Field`].
//!
//! A [`Matrix`] only stores symbols; every algorithm takes the field it should
//! compute in. Sum-rank blocks are matrices over the ground field `F_q`.

use super::field::Field;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<u64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidLength { expected: rows * cols, got: data.len() });
        }
        for &x in &data {
            field.check(x)?;
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(field: &Field, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::InvalidLength { expected: cols, got: r.len() });
        }
        Self::new(field, rows.len(), cols, rows.concat())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Entries in row-major order.
    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn add(&self, field: &Field, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| field.add(a, b)).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, field: &Field, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| field.sub(a, b)).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, field: &Field, c: u64) -> Self {
        let data = self.data.iter().map(|&a| field.mul(a, c)).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// `M v` for a column vector `v`.
    pub fn mul_vec(&self, field: &Field, v: &[u64]) -> Result<Vec<u64>> {
        if v.len() != self.cols {
            return Err(Error::InvalidLength { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
            })
            .collect())
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn row_reduce(&self, field: &Field) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref_in_place(field, &mut m.data, m.rows, m.cols);
        (m, pivots)
    }

    pub fn rank(&self, field: &Field) -> usize {
        let mut data = self.data.clone();
        echelon_rank(field, &mut data, self.rows, self.cols)
    }

    /// Basis of the right kernel `{v : M v = 0}`, one vector per free column.
    pub fn kernel_basis(&self, field: &Field) -> Vec<Vec<u64>> {
        let (r, pivots) = self.row_reduce(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u64; self.cols];
                v[fc] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = field.neg(r.get(i, fc));
                }
                v
            })
            .collect()
    }
}

fn rref_in_place(field: &Field, data: &mut [u64], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..cols {
        if pr == rows {
            break;
        }
        let Some(sel) = (pr..rows).find(|&r| data[r * cols + c] != 0) else {
            continue;
        };
        if sel != pr {
            for k in 0..cols {
                data.swap(sel * cols + k, pr * cols + k);
            }
        }
        let inv = field.inv(data[pr * cols + c]).expect("pivot is nonzero");
        for k in 0..cols {
            data[pr * cols + k] = field.mul(data[pr * cols + k], inv);
        }
        for r in 0..rows {
            if r == pr {
                continue;
            }
            let f = data[r * cols + c];
            if f == 0 {
                continue;
            }
            for k in 0..cols {
                let t = field.mul(f, data[pr * cols + k]);
                data[r * cols + k] = field.sub(data[r * cols + k], t);
            }
        }
        pivots.push(c);
        pr += 1;
    }
    pivots
}

/// Rank by forward elimination only; clobbers `data`.
pub(crate) fn echelon_rank(field: &Field, data: &mut [u64], rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(sel) = (rank..rows).find(|&r| data[r * cols + c] != 0) else {
            continue;
        };
        if sel != rank {
            for k in c..cols {
                data.swap(sel * cols + k, rank * cols + k);
            }
        }
        let inv = field.inv(data[rank * cols + c]).expect("pivot is nonzero");
        for r in rank + 1..rows {
            let f = data[r * cols + c];
            if f == 0 {
                continue;
            }
            let f = field.mul(f, inv);
            for k in c..cols {
                let t = field.mul(f, data[rank * cols + k]);
                data[r * cols + k] = field.sub(data[r * cols + k], t);
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of a list of equal-length vectors.
pub fn rank_of_rows(field: &Field, rows: &[Vec<u64>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut data = rows.concat();
    echelon_rank(field, &mut data, rows.len(), cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn f(p: u64, k: u32) -> std::sync::Arc<Field> {
        Field::prime(p).unwrap().extend(k).unwrap()
    }

    #[test]
    fn identity_and_zero() {
        let f2 = f(2, 1);
        let id = Matrix::identity(3);
        assert_eq!(id.rank(&f2), 3);
        assert!(id.kernel_basis(&f2).is_empty());
        assert_eq!(Matrix::zeros(2, 2).rank(&f2), 0);
    }

    #[test]
    fn all_ones_has_rank_one() {
        let f2 = f(2, 1);
        let m = Matrix::from_rows(&f2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.rank(&f2), 1);
        // brute force: the row space {00, 11} has 2 = 2^1 vectors
        let span: std::collections::HashSet<Vec<u64>> = (0..4u64)
            .map(|x| {
                let (a, b) = (x & 1, x >> 1);
                (0..2).map(|c| f2.add(f2.mul(a, m.get(0, c)), f2.mul(b, m.get(1, c)))).collect()
            })
            .collect();
        assert_eq!(span.len(), 2);
        assert_eq!(m.kernel_basis(&f2), vec![vec![1, 1]]);
    }

    #[test]
    fn rank_nullity_and_transpose() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let fld = f(p, k);
            for _ in 0..200 {
                let rows = rng.gen_range(1..6);
                let cols = rng.gen_range(1..6);
                let data = (0..rows * cols).map(|_| rng.gen_range(0..fld.size())).collect();
                let m = Matrix::new(&fld, rows, cols, data).unwrap();
                let rank = m.rank(&fld);
                let ker = m.kernel_basis(&fld);
                assert_eq!(rank + ker.len(), cols);
                assert_eq!(rank, m.transpose().rank(&fld));
                for v in &ker {
                    assert!(m.mul_vec(&fld, v).unwrap().iter().all(|&x| x == 0));
                }
                let (r1, p1) = m.row_reduce(&fld);
                let (r2, p2) = r1.row_reduce(&fld);
                assert_eq!((r1, p1), (r2, p2));
            }
        }
    }

    #[test]
    fn rejects_out_of_field_entries() {
        let f2 = f(2, 1);
        assert!(Matrix::new(&f2, 1, 2, vec![0, 2]).is_err());
        assert!(Matrix::new(&f2, 1, 2, vec![0]).is_err());
    }
}
