use std::fmt;

use crate::arith::Prime;
use crate::error::{Error, Result};

/// A vector over GF(p) in a fixed coordinate basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GFpVector {
    p: Prime,
    coords: Vec<u8>,
}

impl GFpVector {
    pub fn zeros(p: Prime, n: usize) -> Self {
        GFpVector {
            p,
            coords: vec![0; n],
        }
    }

    /// The all-ones vector.
    pub fn ones(p: Prime, n: usize) -> Self {
        GFpVector {
            p,
            coords: vec![1; n],
        }
    }

    pub fn unit(p: Prime, n: usize, i: usize) -> Self {
        let mut v = GFpVector::zeros(p, n);
        v.coords[i] = 1;
        v
    }

    /// Builds from integer coordinates, reducing mod p.
    pub fn from_i64(p: Prime, coords: &[i64]) -> Self {
        let m = p.get() as i64;
        GFpVector {
            p,
            coords: coords.iter().map(|&x| x.rem_euclid(m) as u8).collect(),
        }
    }

    /// Builds from `(index, coefficient)` pairs; repeated indices add up.
    pub fn from_sparse(p: Prime, n: usize, entries: &[(usize, i64)]) -> Result<Self> {
        let m = p.get() as i64;
        let mut acc = vec![0i64; n];
        for &(i, c) in entries {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, len: n });
            }
            acc[i] += c;
        }
        Ok(GFpVector {
            p,
            coords: acc.into_iter().map(|x| x.rem_euclid(m) as u8).collect(),
        })
    }

    /// Wraps residues that are already reduced.
    pub fn from_residues(p: Prime, coords: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = coords.iter().find(|&&c| c as u32 >= p.get()) {
            return Err(Error::InvalidParameters(format!(
                "coordinate {bad} is not reduced mod {p}"
            )));
        }
        Ok(GFpVector { p, coords })
    }

    pub(crate) fn from_reduced(p: Prime, coords: Vec<u8>) -> Self {
        debug_assert!(coords.iter().all(|&c| (c as u32) < p.get()));
        GFpVector { p, coords }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u8> {
        self.coords
    }

    pub fn get(&self, i: usize) -> u8 {
        self.coords[i]
    }

    pub fn set(&mut self, i: usize, c: i64) {
        self.coords[i] = c.rem_euclid(self.p.get() as i64) as u8;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Nonzero `(index, coefficient)` pairs in index order.
    pub fn support(&self) -> Vec<(usize, u8)> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }

    /// `Some(c)` when every coordinate equals `c`.
    pub fn constant_value(&self) -> Option<u8> {
        let first = *self.coords.first()?;
        self.coords.iter().all(|&c| c == first).then_some(first)
    }

    fn check(&self, other: &GFpVector) -> Result<()> {
        if self.p != other.p {
            return Err(Error::FieldMismatch(self.p.get(), other.p.get()));
        }
        if self.len() != other.len() {
            return Err(Error::ShapeMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// `self + c · other`.
    pub fn add_scaled(&self, c: i64, other: &GFpVector) -> Result<GFpVector> {
        self.check(other)?;
        let m = self.p.get();
        let c = c.rem_euclid(m as i64) as u32;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| ((a as u32 + c * b as u32) % m) as u8)
            .collect();
        Ok(GFpVector { p: self.p, coords })
    }

    pub fn add(&self, other: &GFpVector) -> Result<GFpVector> {
        self.add_scaled(1, other)
    }

    pub fn sub(&self, other: &GFpVector) -> Result<GFpVector> {
        self.add_scaled(-1, other)
    }

    pub fn scale(&self, c: i64) -> GFpVector {
        let m = self.p.get();
        let c = c.rem_euclid(m as i64) as u32;
        GFpVector {
            p: self.p,
            coords: self.coords.iter().map(|&a| (a as u32 * c % m) as u8).collect(),
        }
    }
}

impl fmt::Debug for GFpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[", self.p)?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}
