use std::fmt;

use crate::error::{Error, Result};

use super::{Composition, Permutation};

// Rank computations keep the remaining row counts on the stack.
const MAX_ROWS: usize = 64;

/// A tabloid of shape `shape`, stored as its row-assignment word:
/// `word[e]` is the 0-based row holding entry `e + 1`. The word is the
/// canonical form of the row-equivalence class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    shape: Composition,
    word: Vec<u8>,
}

impl Tabloid {
    /// Builds a tabloid from a 0-based row word, checking the row counts.
    pub fn from_word(shape: &Composition, word: Vec<u8>) -> Result<Self> {
        if word.len() != shape.d() || !word_matches(shape, &word) {
            return Err(Error::TabloidShape(shape.parts().to_vec()));
        }
        Ok(Tabloid {
            shape: shape.clone(),
            word,
        })
    }

    /// Builds a tabloid from its rows given as sets of 1-based entries.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let shape = Composition::new(rows.iter().map(Vec::len).collect());
        let d = shape.d();
        let mut word = vec![u8::MAX; d];
        for (r, row) in rows.iter().enumerate() {
            for &e in row {
                if e == 0 || e > d || word[e - 1] != u8::MAX {
                    return Err(Error::TabloidShape(shape.parts().to_vec()));
                }
                word[e - 1] = r as u8;
            }
        }
        Tabloid::from_word(&shape, word)
    }

    /// A two-row tabloid given by its second row (the bar notation).
    pub fn two_row(shape: &Composition, second_row: &[usize]) -> Result<Self> {
        let mut word = vec![0u8; shape.d()];
        for &e in second_row {
            if e == 0 || e > word.len() {
                return Err(Error::TabloidShape(shape.parts().to_vec()));
            }
            word[e - 1] = 1;
        }
        Tabloid::from_word(shape, word)
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// 1-based row containing the 1-based entry `e`.
    pub fn row_of(&self, e: usize) -> usize {
        self.word[e - 1] as usize + 1
    }

    /// 1-based entries of the 1-based row `r`, increasing.
    pub fn row(&self, r: usize) -> Vec<usize> {
        self.word
            .iter()
            .enumerate()
            .filter(|(_, &w)| w as usize + 1 == r)
            .map(|(e, _)| e + 1)
            .collect()
    }

    /// Display in bar notation for two-row shapes: the second row's entries,
    /// concatenated (comma-separated once any entry has two digits).
    pub fn bar_notation(&self) -> String {
        let row = self.row(2);
        if row.is_empty() {
            return "∅".to_string();
        }
        let sep = if row.iter().any(|&e| e >= 10) { "," } else { "" };
        row.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(sep)
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shape.rows() == 2 {
            return write!(f, "{}", self.bar_notation());
        }
        write!(f, "{{")?;
        for r in 1..=self.shape.rows() {
            if r > 1 {
                write!(f, " | ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "}}")
    }
}

fn word_matches(shape: &Composition, word: &[u8]) -> bool {
    let mut counts = vec![0usize; shape.rows()];
    for &w in word {
        match counts.get_mut(w as usize) {
            Some(c) => *c += 1,
            None => return false,
        }
    }
    counts == shape.parts()
}

/// `d! / ∏ parts!`, or `None` if it overflows `u128`.
pub fn tabloid_count(shape: &Composition) -> Option<u128> {
    let mut total: u128 = 1;
    let mut placed: u128 = 0;
    for &part in shape.parts() {
        // Multiply by C(placed + part, part) one factor at a time; every
        // prefix product is itself a binomial, so the division is exact.
        for j in 1..=part as u128 {
            placed += 1;
            total = total.checked_mul(placed)? / j;
        }
    }
    Some(total)
}

/// The tabloid basis of `M^shape` in lexicographic order of row words, with
/// O(d·r) rank and unrank.
#[derive(Clone, Debug)]
pub struct TabloidSpace {
    shape: Composition,
    d: usize,
    len: usize,
    words: Vec<u8>,
}

impl TabloidSpace {
    pub fn new(shape: &Composition, cap: usize) -> Result<Self> {
        let len = checked_len(shape, cap)?;
        let d = shape.d();
        let mut words = Vec::with_capacity(len * d);
        let mut w: Vec<u8> = shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &n)| std::iter::repeat_n(r as u8, n))
            .collect();
        loop {
            words.extend_from_slice(&w);
            if !next_permutation(&mut w) {
                break;
            }
        }
        debug_assert_eq!(words.len(), len * d);
        Ok(TabloidSpace {
            shape: shape.clone(),
            d,
            len,
            words,
        })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn word(&self, index: usize) -> &[u8] {
        &self.words[index * self.d..(index + 1) * self.d]
    }

    pub fn tabloid(&self, index: usize) -> Result<Tabloid> {
        if index >= self.len {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.len,
            });
        }
        Ok(Tabloid {
            shape: self.shape.clone(),
            word: self.word(index).to_vec(),
        })
    }

    pub fn words(&self) -> impl Iterator<Item = &[u8]> {
        self.words.chunks_exact(self.d.max(1)).take(self.len)
    }

    /// Rank of a word already known to have this shape.
    #[inline]
    pub fn rank_word(&self, word: &[u8]) -> usize {
        rank_word(&self.shape, self.len as u64, word)
    }

    pub fn rank(&self, t: &Tabloid) -> Result<usize> {
        if t.shape != self.shape {
            return Err(Error::TabloidShape(t.shape.parts().to_vec()));
        }
        Ok(self.rank_word(&t.word))
    }

    /// Index of `σ·t` for the tabloid with index `index`.
    pub fn act_index(&self, sigma: &Permutation, index: usize, scratch: &mut Vec<u8>) -> usize {
        let w = self.word(index);
        scratch.clear();
        scratch.resize(self.d, 0);
        for (e, &row) in w.iter().enumerate() {
            scratch[sigma.image(e)] = row;
        }
        self.rank_word(scratch)
    }
}

fn checked_len(shape: &Composition, cap: usize) -> Result<usize> {
    if shape.rows() > MAX_ROWS {
        return Err(Error::ResourceCap {
            what: "number of rows",
            required: shape.rows() as u128,
            cap: MAX_ROWS as u128,
        });
    }
    let required = tabloid_count(shape).unwrap_or(u128::MAX);
    if required > cap as u128 {
        return Err(Error::ResourceCap {
            what: "tabloid basis",
            required,
            cap: cap as u128,
        });
    }
    Ok(required as usize)
}

#[inline]
fn rank_word(shape: &Composition, len: u64, word: &[u8]) -> usize {
    let rows = shape.rows();
    let mut rem = [0u64; MAX_ROWS];
    for (r, &n) in shape.parts().iter().enumerate() {
        rem[r] = n as u64;
    }
    let mut total = word.len() as u64;
    let mut block = len;
    let mut index = 0u64;
    for &w in word {
        let w = w as usize;
        debug_assert!(w < rows);
        for &r in &rem[..w] {
            if r > 0 {
                index += block * r / total;
            }
        }
        block = block * rem[w] / total;
        rem[w] -= 1;
        total -= 1;
    }
    index as usize
}

fn next_permutation(w: &mut [u8]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// All tabloids of the shape in lexicographic order of their words.
pub fn enumerate_tabloids(shape: &Composition, cap: usize) -> Result<Vec<Tabloid>> {
    let space = TabloidSpace::new(shape, cap)?;
    (0..space.len()).map(|i| space.tabloid(i)).collect()
}

/// Position of `t` in [`enumerate_tabloids`] order.
pub fn rank(t: &Tabloid) -> usize {
    let len = tabloid_count(&t.shape).expect("tabloid exists so the count fits") as u64;
    rank_word(&t.shape, len, &t.word)
}

/// Inverse of [`rank`].
pub fn unrank(shape: &Composition, index: usize) -> Result<Tabloid> {
    let len = tabloid_count(shape).unwrap_or(u128::MAX);
    if index as u128 >= len || len > u64::MAX as u128 {
        return Err(Error::IndexOutOfRange {
            index,
            len: len.min(usize::MAX as u128) as usize,
        });
    }
    let mut rem: Vec<u64> = shape.parts().iter().map(|&n| n as u64).collect();
    let mut total = shape.d() as u64;
    let mut block = len as u64;
    let mut rest = index as u64;
    let mut word = Vec::with_capacity(shape.d());
    for _ in 0..shape.d() {
        for (r, count) in rem.iter_mut().enumerate() {
            if *count == 0 {
                continue;
            }
            let sub = block * *count / total;
            if rest < sub {
                word.push(r as u8);
                block = sub;
                *count -= 1;
                break;
            }
            rest -= sub;
        }
        total -= 1;
    }
    Ok(Tabloid {
        shape: shape.clone(),
        word,
    })
}

/// The left action: the row containing `σ(e)` in `σ·t` is the row containing
/// `e` in `t`.
pub fn act(sigma: &Permutation, t: &Tabloid) -> Tabloid {
    let mut word = vec![0u8; t.word.len()];
    for (e, &row) in t.word.iter().enumerate() {
        word[sigma.image(e)] = row;
    }
    Tabloid {
        shape: t.shape.clone(),
        word,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_tabloids(&comp(&[3, 3]), 1000).unwrap().len(), 20);
        assert_eq!(enumerate_tabloids(&comp(&[5]), 1000).unwrap().len(), 1);
        assert_eq!(enumerate_tabloids(&comp(&[8, 3]), 1000).unwrap().len(), 165);
        assert_eq!(enumerate_tabloids(&comp(&[4, 0, 2]), 1000).unwrap().len(), 15);
        assert!(matches!(
            TabloidSpace::new(&comp(&[9, 9]), 1000),
            Err(Error::ResourceCap { required: 48620, .. })
        ));
    }

    #[test]
    fn orbit_stabilizer() {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        for d in 1..=8 {
            for lam in partitions_of(d) {
                let c = lam.as_composition();
                let stab: u128 = c.parts().iter().map(|&x| fact(x)).product();
                assert_eq!(tabloid_count(&c).unwrap() * stab, fact(d));
            }
        }
    }

    #[test]
    fn rank_unrank_roundtrip_and_order() {
        for shape in [comp(&[3, 3]), comp(&[2, 1, 2]), comp(&[3, 0, 1, 1]), comp(&[4])] {
            let space = TabloidSpace::new(&shape, 10_000).unwrap();
            let mut prev: Option<Vec<u8>> = None;
            for k in 0..space.len() {
                let t = unrank(&shape, k).unwrap();
                assert_eq!(t.word(), space.word(k));
                assert_eq!(rank(&t), k);
                assert_eq!(space.rank(&t).unwrap(), k);
                if let Some(p) = &prev {
                    assert!(p.as_slice() < t.word());
                }
                prev = Some(t.word().to_vec());
            }
            assert!(unrank(&shape, space.len()).is_err());
        }
        let first = unrank(&comp(&[3, 3]), 0).unwrap();
        assert_eq!(first.word(), &[0, 0, 0, 1, 1, 1]);
    }

    #[test]
    fn transposition_example() {
        let t = unrank(&comp(&[3, 3]), 0).unwrap();
        let s = Permutation::transposition(6, 3, 4).unwrap();
        assert_eq!(act(&s, &t).word(), &[0, 0, 1, 0, 1, 1]);
        assert_eq!(act(&Permutation::identity(6), &t), t);
    }

    #[test]
    fn bar_notation() {
        let t = Tabloid::from_rows(&[vec![1, 5, 2], vec![3, 4]]).unwrap();
        assert_eq!(t.bar_notation(), "34");
        assert_eq!(t.to_string(), "34");
        let big = Tabloid::two_row(&comp(&[9, 2]), &[10, 11]).unwrap();
        assert_eq!(big.bar_notation(), "10,11");
        let one = Tabloid::from_rows(&[vec![1, 2, 3]]).unwrap();
        assert_eq!(one.bar_notation(), "∅");
        assert!(Tabloid::from_rows(&[vec![1, 1]]).is_err());
    }
}
