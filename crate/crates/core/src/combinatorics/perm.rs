use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, …, d}`, stored 0-based: `images[e]` is the image of
/// `e + 1`, minus one. Composition is right to left: `(σ·τ)(e) = σ(τ(e))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d as u32).collect(),
        }
    }

    /// From 1-based images, e.g. `[2, 1, 3]` for the transposition (1 2).
    pub fn from_images(one_based: &[usize]) -> Result<Self> {
        let d = one_based.len();
        let mut seen = vec![false; d];
        for &x in one_based {
            if x == 0 || x > d || seen[x - 1] {
                return Err(Error::InvalidPermutation(one_based.to_vec()));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            images: one_based.iter().map(|&x| x as u32 - 1).collect(),
        })
    }

    /// The transposition `(a b)` on `{1, …, d}`.
    pub fn transposition(d: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > d || b > d {
            return Err(Error::InvalidPermutation(vec![a, b]));
        }
        let mut p = Permutation::identity(d);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn image(&self, e: usize) -> usize {
        self.images[e] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&e| self.images[e as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (e, &img) in self.images.iter().enumerate() {
            inv[img as usize] = e as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(e, &x)| e as u32 == x)
    }

    /// +1 or -1.
    pub fn sign(&self) -> i8 {
        let mut seen = vec![false; self.images.len()];
        let mut parity = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut e = start;
            while !seen[e] {
                seen[e] = true;
                e = self.images[e] as usize;
                len += 1;
            }
            parity += len - 1;
        }
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut any = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut e = start;
            let mut first = true;
            while !seen[e] {
                seen[e] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", e + 1)?;
                first = false;
                e = self.images[e] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// The adjacent transpositions `s_1, …, s_{d-1}`, `s_i = (i i+1)`.
pub fn coxeter_generators(d: usize) -> Vec<Permutation> {
    (1..d)
        .map(|i| Permutation::transposition(d, i, i + 1).expect("in range"))
        .collect()
}
