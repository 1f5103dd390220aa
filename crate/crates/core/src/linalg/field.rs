use crate::arith::Prime;
use crate::error::{Error, Result};

// Fast reduction keeps accumulators below this bound.
const FAST_BOUND: u32 = 4096;
const MAGIC_SHIFT: u32 = 20;

/// Arithmetic in GF(p) for `p < 256`, plus the bookkeeping for delayed
/// reduction of `u16` accumulators.
#[derive(Clone, Debug)]
pub struct Field {
    prime: Prime,
    p: u8,
    inv: [u8; 256],
    magic: u32,
    fast: bool,
    flush_every: usize,
}

impl Field {
    pub fn new(prime: Prime) -> Result<Self> {
        let pv = prime.get();
        if pv >= 256 {
            return Err(Error::UnsupportedCharacteristic(pv));
        }
        let p = pv as u8;
        let mut inv = [0u8; 256];
        for a in 1..pv {
            inv[a as usize] = crate::arith::inverse_mod(a as u64, pv as u64) as u8;
        }
        let sq = (pv - 1).max(1) * (pv - 1).max(1);
        let fast = pv < 64;
        let bound = if fast { FAST_BOUND - 1 } else { u16::MAX as u32 };
        let flush_every = ((bound - (pv - 1)) / sq).max(1) as usize;
        Ok(Field {
            prime,
            p,
            inv,
            magic: (1u32 << MAGIC_SHIFT).div_ceil(pv),
            fast,
            flush_every,
        })
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    #[inline]
    pub fn p(&self) -> u8 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.p as u16 - b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    /// Inverse of a nonzero residue.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    pub fn from_i64(&self, x: i64) -> u8 {
        x.rem_euclid(self.p as i64) as u8
    }

    /// Number of `c·x` terms (with `c, x < p`) that fit in an accumulator
    /// holding a reduced value before it must be reduced.
    #[cfg(test)]
    pub(crate) fn flush_every(&self) -> usize {
        self.flush_every
    }

    #[inline]
    fn reduce_one(&self, a: u16) -> u8 {
        if self.fast {
            let q = (a as u32 * self.magic) >> MAGIC_SHIFT;
            (a as u32 - q * self.p as u32) as u8
        } else {
            (a % self.p as u16) as u8
        }
    }

    pub(crate) fn reduce_in_place(&self, acc: &mut [u16]) {
        if self.fast {
            let (m, p) = (self.magic, self.p as u32);
            for a in acc.iter_mut() {
                let x = *a as u32;
                *a = (x - ((x * m) >> MAGIC_SHIFT) * p) as u16;
            }
        } else {
            let p = self.p as u16;
            for a in acc.iter_mut() {
                *a %= p;
            }
        }
    }

    pub(crate) fn reduce_into(&self, acc: &[u16], out: &mut Vec<u8>) {
        out.clear();
        out.extend(acc.iter().map(|&a| self.reduce_one(a)));
    }

    /// Reduces `acc` and keeps only positions where `keep` is true.
    pub(crate) fn reduce_compact(&self, acc: &[u16], keep: &[bool], out: &mut Vec<u8>) {
        out.clear();
        out.extend(
            acc.iter()
                .zip(keep)
                .filter(|(_, &k)| k)
                .map(|(&a, _)| self.reduce_one(a)),
        );
    }
}

/// `acc += c · row`, lane by lane.
#[inline]
pub(crate) fn axpy(acc: &mut [u16], c: u8, row: &[u8]) {
    let c = c as u16;
    for (a, &x) in acc.iter_mut().zip(row) {
        *a += c * x as u16;
    }
}

/// Accumulates `Σ c_j · row_j` into `acc`, reducing whenever the bound is hit.
pub(crate) struct Accumulator<'f> {
    field: &'f Field,
    pub(crate) acc: Vec<u16>,
    terms: usize,
}

impl<'f> Accumulator<'f> {
    pub(crate) fn new(field: &'f Field) -> Self {
        Accumulator {
            field,
            acc: Vec::new(),
            terms: 0,
        }
    }

    /// Resets to the given reduced values.
    pub(crate) fn load(&mut self, values: &[u8]) {
        self.acc.clear();
        self.acc.extend(values.iter().map(|&x| x as u16));
        self.terms = 0;
    }

    pub(crate) fn load_zero(&mut self, n: usize) {
        self.acc.clear();
        self.acc.resize(n, 0);
        self.terms = 0;
    }

    /// `acc -= c · row`.
    #[inline]
    pub(crate) fn sub_scaled(&mut self, c: u8, row: &[u8]) {
        if c == 0 {
            return;
        }
        if self.terms == self.field.flush_every {
            self.field.reduce_in_place(&mut self.acc);
            self.terms = 0;
        }
        axpy(&mut self.acc, self.field.neg(c), row);
        self.terms += 1;
    }

    /// `acc[pos] += c` for a single reduced value.
    #[inline]
    pub(crate) fn add_at(&mut self, pos: usize, c: u8) {
        if self.terms == self.field.flush_every {
            self.field.reduce_in_place(&mut self.acc);
            self.terms = 0;
        }
        self.acc[pos] += c as u16;
        self.terms += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_reduction_is_exact() {
        for p in [2u32, 3, 5, 7, 11, 13, 31, 61] {
            let f = Field::new(Prime::new(p).unwrap()).unwrap();
            let mut acc: Vec<u16> = (0..FAST_BOUND as u16).collect();
            f.reduce_in_place(&mut acc);
            for (a, r) in acc.iter().enumerate() {
                assert_eq!(*r as u32, a as u32 % p);
            }
        }
    }

    #[test]
    fn flush_bound_respected() {
        for p in [2u32, 3, 5, 7, 61, 67, 251] {
            let f = Field::new(Prime::new(p).unwrap()).unwrap();
            let worst = (p - 1) + f.flush_every() as u32 * (p - 1) * (p - 1);
            let bound = if p < 64 { FAST_BOUND } else { 1 << 16 };
            assert!(worst < bound, "p = {p}");
        }
        assert!(Field::new(Prime::new(257).unwrap()).is_err());
    }

    #[test]
    fn inverses() {
        let f = Field::new(Prime::new(7).unwrap()).unwrap();
        for a in 1..7u8 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.sub(2, 5), 4);
    }
}
