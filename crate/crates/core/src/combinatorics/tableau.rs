use num_bigint::BigUint;

use crate::error::{Error, Result};

use super::{Composition, Partition, Tabloid};

/// A standard Young tableau: rows increase left to right and columns top to
/// bottom. Entries are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let d = shape.d();
        let mut seen = vec![false; d];
        for &e in rows.iter().flatten() {
            if e == 0 || e > d || seen[e - 1] {
                return Err(Error::InvalidParameters(format!("{rows:?} is not a filling")));
            }
            seen[e - 1] = true;
        }
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        if !(rows_ok && cols_ok) {
            return Err(Error::InvalidParameters(format!("{rows:?} is not standard")));
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Column `j` (0-based), top to bottom.
    pub fn column(&self, j: usize) -> Vec<usize> {
        self.rows.iter().filter_map(|r| r.get(j).copied()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.shape.part(0)).map(|j| self.column(j)).collect()
    }

    /// The tabloid `{t}`.
    pub fn tabloid(&self) -> Tabloid {
        Tabloid::from_rows(&self.rows).expect("a tableau fills its diagram")
    }

    pub fn composition(&self) -> Composition {
        self.shape.as_composition()
    }
}

/// All standard tableaux of shape `lambda`, ordered lexicographically by the
/// sequence of rows receiving `1, 2, …, d`.
pub fn standard_tableaux(lambda: &Partition, cap: usize) -> Result<Vec<StandardTableau>> {
    let count = hook_length_dimension(lambda);
    if count > BigUint::from(cap) {
        return Err(Error::ResourceCap {
            what: "standard tableaux",
            required: u128::try_from(&count).unwrap_or(u128::MAX),
            cap: cap as u128,
        });
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); lambda.rows()];
    fill(lambda, 1, &mut rows, &mut out);
    Ok(out)
}

fn fill(lambda: &Partition, next: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
    if next > lambda.d() {
        out.push(StandardTableau {
            shape: lambda.clone(),
            rows: rows.clone(),
        });
        return;
    }
    for r in 0..rows.len() {
        let len = rows[r].len();
        let fits = len < lambda.part(r) && (r == 0 || len < rows[r - 1].len());
        if fits {
            rows[r].push(next);
            fill(lambda, next + 1, rows, out);
            rows[r].pop();
        }
    }
}

/// `d! / ∏ hook lengths`, exactly.
pub fn hook_length_dimension(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut num = BigUint::from(1u32);
    for k in 2..=lambda.d() {
        num *= k;
    }
    let mut den = BigUint::from(1u32);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j - 1) + (conj.part(j) - i - 1) + 1;
            den *= hook;
        }
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    fn lam(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(standard_tableaux(&lam(&[3, 3]), 100).unwrap().len(), 5);
        assert_eq!(standard_tableaux(&lam(&[2, 1]), 100).unwrap().len(), 2);
        assert_eq!(standard_tableaux(&lam(&[6]), 100).unwrap().len(), 1);
        assert_eq!(hook_length_dimension(&lam(&[3, 3])), BigUint::from(5u32));
        assert_eq!(hook_length_dimension(&lam(&[1, 1, 1, 1])), BigUint::from(1u32));
        assert_eq!(hook_length_dimension(&lam(&[9, 9])), BigUint::from(4862u32));
    }

    #[test]
    fn eight_three_by_enumeration() {
        let n = standard_tableaux(&lam(&[8, 3]), 1000).unwrap().len();
        assert_eq!(n, 110);
        assert_eq!(hook_length_dimension(&lam(&[8, 3])), BigUint::from(n));
    }

    #[test]
    fn enumeration_matches_hook_formula() {
        for d in 1..=8 {
            for l in partitions_of(d) {
                let tabs = standard_tableaux(&l, 10_000).unwrap();
                assert_eq!(BigUint::from(tabs.len()), hook_length_dimension(&l), "{l}");
                for t in &tabs {
                    assert!(StandardTableau::new(t.rows().to_vec()).is_ok());
                }
            }
        }
    }

    #[test]
    fn standardness_is_checked() {
        assert!(StandardTableau::new(vec![vec![1, 2], vec![3]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(StandardTableau::new(vec![vec![2, 1], vec![3]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(StandardTableau::new(vec![vec![3, 4], vec![1, 2]]).is_err());
    }
}
