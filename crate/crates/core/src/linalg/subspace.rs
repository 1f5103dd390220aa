use crate::arith::Prime;
use crate::error::{Error, Result};

use super::echelon::{Echelon, EchelonBuilder};
use super::field::{Accumulator, Field};
use super::matrix::GFpMatrix;
use super::vector::GFpVector;

/// A subspace of GF(p)^n held as its reduced row echelon basis. Two
/// subspaces are equal iff their bases are byte-identical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GFpSubspace {
    p: Prime,
    n: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<u8>>,
}

impl GFpSubspace {
    pub fn zero(p: Prime, n: usize) -> Self {
        GFpSubspace {
            p,
            n,
            pivots: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn full(p: Prime, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        GFpSubspace {
            p,
            n,
            pivots: (0..n).collect(),
            rows,
        }
    }

    pub fn from_echelon(e: &Echelon) -> Self {
        GFpSubspace {
            p: e.prime(),
            n: e.ambient_dim(),
            pivots: e.pivots().to_vec(),
            rows: e.rref_rows(),
        }
    }

    /// The span of residue rows of length `n`.
    pub fn span_rows<'a, I>(p: Prime, n: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a [u8]>,
    {
        let mut b = EchelonBuilder::new(p, n)?;
        for r in rows {
            if r.len() != n {
                return Err(Error::ShapeMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
            b.push_dense(r);
        }
        Ok(GFpSubspace::from_echelon(&b.finish()))
    }

    pub fn span(p: Prime, n: usize, vectors: &[GFpVector]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.prime() != p) {
            return Err(Error::FieldMismatch(p.get(), v.prime().get()));
        }
        GFpSubspace::span_rows(p, n, vectors.iter().map(|v| v.coords()))
    }

    /// The null space of an echelon form.
    pub fn kernel_of(e: &Echelon) -> Result<Self> {
        let basis = e.kernel_basis();
        GFpSubspace::span_rows(e.prime(), e.ambient_dim(), basis.iter().map(Vec::as_slice))
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis rows in echelon order.
    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn basis_vectors(&self) -> Vec<GFpVector> {
        self.rows
            .iter()
            .map(|r| GFpVector::from_reduced(self.p, r.clone()))
            .collect()
    }

    pub fn basis_matrix(&self) -> GFpMatrix {
        GFpMatrix::from_vectors(self.p, self.n, &self.basis_vectors()).expect("consistent rows")
    }

    fn check(&self, v: &GFpVector) -> Result<()> {
        if v.prime() != self.p {
            return Err(Error::FieldMismatch(self.p.get(), v.prime().get()));
        }
        if v.len() != self.n {
            return Err(Error::ShapeMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// `v` minus its projection along the basis, read off at the pivots.
    fn residual(&self, v: &[u8]) -> Vec<u8> {
        let field = Field::new(self.p).expect("prime already validated");
        let mut acc = Accumulator::new(&field);
        acc.load(v);
        for (&pivot, row) in self.pivots.iter().zip(&self.rows) {
            acc.sub_scaled(v[pivot], row);
        }
        let mut out = Vec::new();
        field.reduce_into(&acc.acc, &mut out);
        out
    }

    pub fn contains(&self, v: &GFpVector) -> Result<bool> {
        self.check(v)?;
        Ok(self.residual(v.coords()).iter().all(|&x| x == 0))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &GFpVector) -> Result<Option<Vec<u8>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&c| v.get(c)).collect()))
    }

    fn same_space(&self, other: &GFpSubspace) -> Result<()> {
        if self.p != other.p {
            return Err(Error::FieldMismatch(self.p.get(), other.p.get()));
        }
        if self.n != other.n {
            return Err(Error::ShapeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &GFpSubspace) -> Result<GFpSubspace> {
        self.same_space(other)?;
        GFpSubspace::span_rows(
            self.p,
            self.n,
            self.rows.iter().chain(&other.rows).map(Vec::as_slice),
        )
    }

    /// The subspace spanned by `self` and one more vector.
    pub fn extend(&self, v: &GFpVector) -> Result<GFpSubspace> {
        self.check(v)?;
        GFpSubspace::span_rows(
            self.p,
            self.n,
            self.rows.iter().map(Vec::as_slice).chain(std::iter::once(v.coords())),
        )
    }

    /// Zassenhaus: the echelon form of `[a | a ; b | 0]` has the
    /// intersection in the right half of the rows whose left half vanishes.
    pub fn intersect(&self, other: &GFpSubspace) -> Result<GFpSubspace> {
        self.same_space(other)?;
        let n = self.n;
        let mut b = EchelonBuilder::new(self.p, 2 * n)?;
        let mut row = vec![0u8; 2 * n];
        for r in &self.rows {
            row[..n].copy_from_slice(r);
            row[n..].copy_from_slice(r);
            b.push_dense(&row);
        }
        for r in &other.rows {
            row[..n].copy_from_slice(r);
            row[n..].fill(0);
            b.push_dense(&row);
        }
        let e = b.finish();
        let tail: Vec<Vec<u8>> = e
            .pivots()
            .iter()
            .zip(e.rref_rows())
            .filter(|(&pivot, _)| pivot >= n)
            .map(|(_, r)| r[n..].to_vec())
            .collect();
        GFpSubspace::span_rows(self.p, n, tail.iter().map(Vec::as_slice))
    }

    /// `dim(self + other) - dim(other)`.
    pub fn member_quotient(&self, other: &GFpSubspace) -> Result<usize> {
        Ok(self.sum(other)?.dim() - other.dim())
    }

    pub fn is_subspace_of(&self, other: &GFpSubspace) -> Result<bool> {
        self.same_space(other)?;
        Ok(self
            .rows
            .iter()
            .all(|r| other.residual(r).iter().all(|&x| x == 0)))
    }
}

/// Null space of a dense matrix.
pub fn kernel(m: &GFpMatrix) -> Result<GFpSubspace> {
    let mut b = EchelonBuilder::new(m.prime(), m.cols())?;
    for i in 0..m.rows() {
        b.push_dense(m.row(i));
    }
    GFpSubspace::kernel_of(&b.finish())
}
