//! Incremental reduced row echelon form.
//!
//! Basis rows are kept fully reduced and stored only on the columns that
//! are not yet pivots: a pivot row is `e_pivot + Σ_free row[k] e_free[k]`.
//! Incoming rows are reduced against the basis in one pass (in an RREF the
//! coefficient of a basis row is the incoming entry at its pivot), buffered,
//! and merged in chunks; each merge eliminates the new pivots from the old
//! rows and drops those columns from every stored row. Rows therefore get
//! shorter as the rank grows.

use crate::arith::Prime;
use crate::error::Result;

use super::field::{Accumulator, Field};

const FREE: u32 = 1 << 31;
const CHUNK: usize = 64;

struct BasisRow {
    pivot: u32,
    free_part: Vec<u8>,
}

pub struct EchelonBuilder {
    field: Field,
    n: usize,
    // Per column: FREE | position in `free`, or the index of its pivot row.
    slot: Vec<u32>,
    free: Vec<u32>,
    rows: Vec<BasisRow>,
    pending: Vec<Vec<u8>>,
    scratch: Vec<u8>,
}

impl EchelonBuilder {
    pub fn new(p: Prime, n: usize) -> Result<Self> {
        Ok(EchelonBuilder {
            field: Field::new(p)?,
            n,
            slot: (0..n as u32).map(|c| FREE | c).collect(),
            free: (0..n as u32).collect(),
            rows: Vec::new(),
            pending: Vec::new(),
            scratch: Vec::new(),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Rank of the rows merged so far (buffered rows not included).
    pub fn merged_rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a row given as `(column, residue)` pairs. Repeated columns add.
    pub fn push_sparse(&mut self, entries: &[(u32, u8)]) {
        let mut acc = Accumulator::new(&self.field);
        acc.load_zero(self.free.len());
        for &(c, val) in entries {
            if val == 0 {
                continue;
            }
            let s = self.slot[c as usize];
            if s & FREE != 0 {
                acc.add_at((s & !FREE) as usize, val);
            } else {
                acc.sub_scaled(val, &self.rows[s as usize].free_part);
            }
        }
        let out = reduced(&self.field, &acc);
        self.push_reduced(out);
    }

    /// Adds a dense row of reduced residues.
    pub fn push_dense(&mut self, row: &[u8]) {
        assert_eq!(row.len(), self.n);
        let mut acc = Accumulator::new(&self.field);
        self.scratch.clear();
        self.scratch.extend(self.free.iter().map(|&c| row[c as usize]));
        acc.load(&self.scratch);
        for r in &self.rows {
            acc.sub_scaled(row[r.pivot as usize], &r.free_part);
        }
        let out = reduced(&self.field, &acc);
        self.push_reduced(out);
    }

    fn push_reduced(&mut self, out: Vec<u8>) {
        if out.iter().any(|&x| x != 0) {
            self.pending.push(out);
            if self.pending.len() >= CHUNK {
                self.merge();
            }
        }
    }

    fn merge(&mut self) {
        if self.pending.is_empty() {
            return;
        }
        let field = &self.field;
        let width = self.free.len();
        // RREF of the buffered rows among themselves, in free coordinates.
        let mut fresh: Vec<(usize, Vec<u8>)> = Vec::new();
        let mut acc = Accumulator::new(field);
        let mut buf = Vec::with_capacity(width);
        for row in std::mem::take(&mut self.pending) {
            acc.load(&row);
            for (q, nr) in &fresh {
                acc.sub_scaled(row[*q], nr);
            }
            field.reduce_into(&acc.acc, &mut buf);
            let Some(q) = buf.iter().position(|&x| x != 0) else {
                continue;
            };
            let inv = field.inv(buf[q]);
            if inv != 1 {
                for x in buf.iter_mut() {
                    *x = field.mul(*x, inv);
                }
            }
            for (_, nr) in fresh.iter_mut() {
                let c = nr[q];
                if c != 0 {
                    acc.load(nr);
                    acc.sub_scaled(c, &buf);
                    field.reduce_into(&acc.acc, nr);
                }
            }
            fresh.push((q, buf.clone()));
        }
        if fresh.is_empty() {
            return;
        }

        let mut keep = vec![true; width];
        for (q, _) in &fresh {
            keep[*q] = false;
        }
        // Clear the new pivot columns from the old rows and compact.
        for r in self.rows.iter_mut() {
            acc.load(&r.free_part);
            for (q, nr) in &fresh {
                acc.sub_scaled(r.free_part[*q], nr);
            }
            field.reduce_compact(&acc.acc, &keep, &mut buf);
            std::mem::swap(&mut r.free_part, &mut buf);
        }
        for (q, nr) in fresh {
            let mut compact = Vec::with_capacity(width);
            compact.extend(nr.iter().zip(&keep).filter(|(_, &k)| k).map(|(&x, _)| x));
            let pivot = self.free[q];
            self.slot[pivot as usize] = self.rows.len() as u32;
            self.rows.push(BasisRow {
                pivot,
                free_part: compact,
            });
        }
        let old_free = std::mem::take(&mut self.free);
        self.free = old_free
            .into_iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(c, _)| c)
            .collect();
        for (pos, &c) in self.free.iter().enumerate() {
            self.slot[c as usize] = FREE | pos as u32;
        }
    }

    pub fn finish(mut self) -> Echelon {
        self.merge();
        let mut rows = self.rows;
        rows.sort_by_key(|r| r.pivot);
        Echelon {
            field: self.field,
            n: self.n,
            pivots: rows.iter().map(|r| r.pivot as usize).collect(),
            free: self.free.iter().map(|&c| c as usize).collect(),
            rows: rows.into_iter().map(|r| r.free_part).collect(),
        }
    }
}

fn reduced(field: &Field, acc: &Accumulator<'_>) -> Vec<u8> {
    let mut out = Vec::with_capacity(acc.acc.len());
    field.reduce_into(&acc.acc, &mut out);
    out
}

/// A finished reduced row echelon form in compressed storage.
pub struct Echelon {
    field: Field,
    n: usize,
    pivots: Vec<usize>,
    free: Vec<usize>,
    rows: Vec<Vec<u8>>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn prime(&self) -> Prime {
        self.field.prime()
    }

    /// Pivot columns, increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Non-pivot columns, increasing.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    /// Rows of the reduced row echelon form, in pivot order.
    pub fn rref_rows(&self) -> Vec<Vec<u8>> {
        self.pivots
            .iter()
            .zip(&self.rows)
            .map(|(&pivot, part)| {
                let mut full = vec![0u8; self.n];
                full[pivot] = 1;
                for (&c, &x) in self.free.iter().zip(part) {
                    full[c] = x;
                }
                full
            })
            .collect()
    }

    /// One kernel vector per free column `c`: `e_c - Σ row[c] e_pivot`.
    pub fn kernel_basis(&self) -> Vec<Vec<u8>> {
        (0..self.free.len())
            .map(|k| {
                let mut x = vec![0u8; self.n];
                x[self.free[k]] = 1;
                for (&pivot, part) in self.pivots.iter().zip(&self.rows) {
                    x[pivot] = self.field.neg(part[k]);
                }
                x
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    // Schoolbook RREF used as the reference.
    fn naive_rref(p: u32, rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
        let f = Field::new(prime(p)).unwrap();
        let mut m: Vec<Vec<u8>> = rows.to_vec();
        let n = m.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..n {
            let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, piv);
            let inv = f.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = f.mul(*x, inv);
            }
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let k = m[i][c];
                    let pivot = m[r].clone();
                    for (x, &y) in m[i].iter_mut().zip(&pivot) {
                        *x = f.sub(*x, f.mul(k, y));
                    }
                }
            }
            r += 1;
        }
        m.truncate(r);
        m
    }

    #[test]
    fn matches_schoolbook_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for &p in &[2u32, 3, 5, 7, 67] {
            for trial in 0..20 {
                let rows = rng.gen_range(1..200);
                let cols = rng.gen_range(1..60);
                let density = if trial % 2 == 0 { 0.1 } else { 0.8 };
                let m: Vec<Vec<u8>> = (0..rows)
                    .map(|_| {
                        (0..cols)
                            .map(|_| {
                                if rng.gen_bool(density) {
                                    rng.gen_range(0..p) as u8
                                } else {
                                    0
                                }
                            })
                            .collect()
                    })
                    .collect();
                let mut b = EchelonBuilder::new(prime(p), cols).unwrap();
                for (i, r) in m.iter().enumerate() {
                    if i % 2 == 0 {
                        b.push_dense(r);
                    } else {
                        let sparse: Vec<(u32, u8)> = r
                            .iter()
                            .enumerate()
                            .filter(|(_, &x)| x != 0)
                            .map(|(j, &x)| (j as u32, x))
                            .collect();
                        b.push_sparse(&sparse);
                    }
                }
                let e = b.finish();
                assert_eq!(e.rref_rows(), naive_rref(p, &m), "p={p} trial={trial}");
                let f = Field::new(prime(p)).unwrap();
                for k in e.kernel_basis() {
                    for r in &m {
                        let dot = r
                            .iter()
                            .zip(&k)
                            .fold(0u8, |s, (&a, &b)| f.add(s, f.mul(a, b)));
                        assert_eq!(dot, 0);
                    }
                }
                assert_eq!(e.rank() + e.kernel_basis().len(), cols);
            }
        }
    }
}
