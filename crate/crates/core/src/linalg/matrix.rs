use std::fmt;

use crate::arith::Prime;
use crate::error::{Error, Result};

use super::echelon::EchelonBuilder;
use super::vector::GFpVector;

/// A dense row-major matrix over GF(p), one residue per byte.
#[derive(Clone, PartialEq, Eq)]
pub struct GFpMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl GFpMatrix {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        GFpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = GFpMatrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds from integer rows, reducing mod p.
    pub fn from_rows_i64(p: Prime, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut m = GFpMatrix::zeros(p, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::ShapeMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn from_vectors(p: Prime, cols: usize, rows: &[GFpVector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            if r.prime() != p {
                return Err(Error::FieldMismatch(p.get(), r.prime().get()));
            }
            data.extend_from_slice(r.coords());
        }
        Ok(GFpMatrix {
            p,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.cols + j] = x.rem_euclid(self.p.get() as i64) as u8;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> GFpVector {
        GFpVector::from_reduced(self.p, self.row(i).to_vec())
    }

    pub fn mul_vec(&self, v: &GFpVector) -> Result<GFpVector> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let m = self.p.get() as u64;
        let out = (0..self.rows)
            .map(|i| {
                let s: u64 = self
                    .row(i)
                    .iter()
                    .zip(v.coords())
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                (s % m) as u8
            })
            .collect();
        Ok(GFpVector::from_reduced(self.p, out))
    }

    pub fn mul(&self, other: &GFpMatrix) -> Result<GFpMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let m = self.p.get() as u64;
        let mut out = GFpMatrix::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![0u64; other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a != 0 {
                    for (s, &b) in acc.iter_mut().zip(other.row(k)) {
                        *s += a * b as u64;
                    }
                }
            }
            for (j, s) in acc.into_iter().enumerate() {
                out.data[i * other.cols + j] = (s % m) as u8;
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> GFpMatrix {
        let mut t = GFpMatrix::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn to_sparse(&self) -> SparseRows {
        let mut s = SparseRows::new(self.p, self.cols);
        let mut buf = Vec::new();
        for i in 0..self.rows {
            buf.clear();
            buf.extend(
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(j, &x)| (j as u32, x)),
            );
            s.push_row(&buf);
        }
        s
    }
}

impl fmt::Debug for GFpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GF({}) {}x{}", self.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Compressed sparse rows over GF(p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseRows {
    p: Prime,
    cols: usize,
    indptr: Vec<usize>,
    indices: Vec<u32>,
    values: Vec<u8>,
}

impl SparseRows {
    pub fn new(p: Prime, cols: usize) -> Self {
        SparseRows {
            p,
            cols,
            indptr: vec![0],
            indices: Vec::new(),
            values: Vec::new(),
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.indptr.len() - 1
    }

    pub fn nnz(&self) -> usize {
        self.indices.len()
    }

    pub fn push_row(&mut self, entries: &[(u32, u8)]) {
        for &(c, x) in entries {
            debug_assert!((c as usize) < self.cols);
            if x != 0 {
                self.indices.push(c);
                self.values.push(x);
            }
        }
        self.indptr.push(self.indices.len());
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (u32, u8)> + '_ {
        let (a, b) = (self.indptr[i], self.indptr[i + 1]);
        self.indices[a..b].iter().copied().zip(self.values[a..b].iter().copied())
    }

    pub fn to_dense(&self) -> GFpMatrix {
        let mut m = GFpMatrix::zeros(self.p, self.rows(), self.cols);
        for i in 0..self.rows() {
            for (c, x) in self.row(i) {
                let cell = &mut m.data[i * self.cols + c as usize];
                *cell = ((*cell as u32 + x as u32) % self.p.get()) as u8;
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &GFpVector) -> Result<GFpVector> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let m = self.p.get() as u64;
        let out = (0..self.rows())
            .map(|i| {
                let s: u64 = self.row(i).map(|(c, x)| x as u64 * v.get(c as usize) as u64).sum();
                (s % m) as u8
            })
            .collect();
        Ok(GFpVector::from_reduced(self.p, out))
    }
}

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug)]
pub struct Rref {
    /// Same shape as the input; the first `rank` rows are the nonzero rows.
    pub matrix: GFpMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Leftmost-pivot reduced row echelon form. The result depends only on the
/// row space, so any elimination order gives the same bytes.
pub fn rref(m: &GFpMatrix) -> Result<Rref> {
    let mut b = EchelonBuilder::new(m.p, m.cols)?;
    for i in 0..m.rows {
        b.push_dense(m.row(i));
    }
    let e = b.finish();
    let mut out = GFpMatrix::zeros(m.p, m.rows, m.cols);
    for (i, r) in e.rref_rows().into_iter().enumerate() {
        out.data[i * m.cols..(i + 1) * m.cols].copy_from_slice(&r);
    }
    Ok(Rref {
        matrix: out,
        pivots: e.pivots().to_vec(),
        rank: e.rank(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Prime {
        Prime::new(3).unwrap()
    }

    #[test]
    fn identity_and_zero() {
        let r = rref(&GFpMatrix::identity(p3(), 4)).unwrap();
        assert_eq!(r.rank, 4);
        assert_eq!(r.matrix, GFpMatrix::identity(p3(), 4));
        let z = rref(&GFpMatrix::zeros(p3(), 3, 5)).unwrap();
        assert_eq!(z.rank, 0);
        assert!(z.matrix.is_zero());
    }

    #[test]
    fn rank_two_by_hand() {
        // Over GF(3): R2 - 2 R1 = (0, 0, 1) and R3 = 2 (0, 0, 1).
        let m = GFpMatrix::from_rows_i64(p3(), 3, &[vec![1, 2, 0], vec![2, 1, 1], vec![0, 0, 2]])
            .unwrap();
        let r = rref(&m).unwrap();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 2]);
        assert_eq!(r.matrix.row(0), &[1, 2, 0]);
        assert_eq!(r.matrix.row(1), &[0, 0, 1]);
        assert_eq!(r.matrix.row(2), &[0, 0, 0]);
    }

    #[test]
    fn sparse_dense_agree() {
        let m = GFpMatrix::from_rows_i64(p3(), 3, &[vec![1, 0, 2], vec![0, 0, 0]]).unwrap();
        let s = m.to_sparse();
        assert_eq!(s.nnz(), 2);
        assert_eq!(s.to_dense(), m);
        let v = GFpVector::from_i64(p3(), &[1, 1, 1]);
        assert_eq!(s.mul_vec(&v).unwrap(), m.mul_vec(&v).unwrap());
        assert_eq!(m.transpose().transpose(), m);
    }
}
