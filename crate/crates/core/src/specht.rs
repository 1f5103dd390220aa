//! Semistandard maps `ψ_{i,v}`, the fixed vector `f_λ`, and the Specht module
//! as a kernel intersection and as the span of standard polytabloids.
//!
//! Row convention: `ψ_{i,v}` acts on rows `i` and `i+1` (1-based) and the
//! Specht module is the intersection of `ker ψ_{i,v}` over `1 ≤ i < r` and
//! `0 ≤ v < λ_{i+1}`.

use std::sync::Arc;

use num_bigint::BigUint;

use crate::arith::{binom_mod_p, Prime};
use crate::combinatorics::{
    hook_length_dimension, standard_tableaux, Composition, Partition, StandardTableau, TabloidSpace,
};
use crate::error::{Error, Result};
use crate::linalg::{solve_affine, Constraint, GFpMatrix, GFpSubspace, GFpVector, SparseRows};
use crate::Limits;

/// `ψ_{i,v}: M^λ → M^ν` with `ν = (…, λ_i + λ_{i+1} - v, v, …)`.
///
/// The image of `{t}` is the sum of the ν-tabloids obtained by keeping a
/// `v`-subset of row `i+1` in place and moving the rest of that row up to
/// row `i`. Every column therefore has exactly `C(λ_{i+1}, v)` ones.
#[derive(Clone, Debug)]
pub struct PsiMap {
    source: Partition,
    i: usize,
    v: usize,
    p: Prime,
    source_space: Arc<TabloidSpace>,
    target_space: Arc<TabloidSpace>,
}

/// The `(i, v, ν)` of a ψ map, without its matrix.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PsiDescriptor {
    pub i: usize,
    pub v: usize,
    pub target: Vec<usize>,
}

/// The target composition of `ψ_{i,v}` (1-based `i`).
pub fn psi_target(lambda: &Partition, i: usize, v: usize) -> Result<Composition> {
    let invalid = || Error::InvalidPsi {
        lambda: lambda.parts().to_vec(),
        i,
        v,
    };
    if i == 0 || i >= lambda.rows() || v > lambda.part(i) {
        return Err(invalid());
    }
    let mut parts = lambda.parts().to_vec();
    parts[i - 1] = lambda.part(i - 1) + lambda.part(i) - v;
    parts[i] = v;
    Ok(Composition::new(parts))
}

impl PsiMap {
    pub fn new(lambda: &Partition, i: usize, v: usize, p: Prime, cap: usize) -> Result<Self> {
        let space = Arc::new(TabloidSpace::new(&lambda.as_composition(), cap)?);
        PsiMap::with_source(lambda, space, i, v, p, cap)
    }

    /// Like [`PsiMap::new`] but sharing an existing tabloid space for `M^λ`.
    pub fn with_source(
        lambda: &Partition,
        source_space: Arc<TabloidSpace>,
        i: usize,
        v: usize,
        p: Prime,
        cap: usize,
    ) -> Result<Self> {
        let target = psi_target(lambda, i, v)?;
        let target_space = Arc::new(TabloidSpace::new(&target, cap)?);
        Ok(PsiMap {
            source: lambda.clone(),
            i,
            v,
            p,
            source_space,
            target_space,
        })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn source(&self) -> &Partition {
        &self.source
    }

    pub fn target(&self) -> &Composition {
        self.target_space.shape()
    }

    pub fn source_space(&self) -> &TabloidSpace {
        &self.source_space
    }

    pub fn target_space(&self) -> &TabloidSpace {
        &self.target_space
    }

    pub fn descriptor(&self) -> PsiDescriptor {
        PsiDescriptor {
            i: self.i,
            v: self.v,
            target: self.target().parts().to_vec(),
        }
    }

    /// `C(λ_{i+1}, v)`: the number of ones in each column.
    pub fn column_weight(&self) -> usize {
        let n = self.source.part(self.i) as u128;
        let k = self.v as u128;
        let mut c: u128 = 1;
        for j in 0..k {
            c = c * (n - j) / (j + 1);
        }
        c as usize
    }

    /// The scalar `C(λ_i + λ_{i+1} - v, λ_{i+1} - v) mod p` with
    /// `ψ_{i,v}(f_λ) = scalar · f_ν`.
    pub fn scalar_on_fixed_vector(&self) -> u32 {
        let upper = self.source.part(self.i - 1) as u64;
        let lower = self.source.part(self.i) as u64;
        let v = self.v as u64;
        binom_mod_p(upper + lower - v, lower - v, self.p)
    }

    /// Calls `f` with the target index of every ν-tabloid in `ψ({t})`.
    fn for_each_image(&self, word: &[u8], buf: &mut ImageScratch, mut f: impl FnMut(usize)) {
        let lower = self.i as u8;
        let upper = lower - 1;
        buf.word.clear();
        buf.word.extend_from_slice(word);
        buf.lower.clear();
        for (e, w) in buf.word.iter_mut().enumerate() {
            if *w == lower {
                buf.lower.push(e);
                *w = upper;
            }
        }
        let m = buf.lower.len();
        let v = self.v;
        buf.comb.clear();
        buf.comb.extend(0..v);
        loop {
            for &k in &buf.comb {
                buf.word[buf.lower[k]] = lower;
            }
            f(self.target_space.rank_word(&buf.word));
            for &k in &buf.comb {
                buf.word[buf.lower[k]] = upper;
            }
            // Next v-subset of 0..m in lexicographic order.
            let mut j = v;
            loop {
                if j == 0 {
                    return;
                }
                j -= 1;
                if buf.comb[j] < m - v + j {
                    break;
                }
                if j == 0 {
                    return;
                }
            }
            buf.comb[j] += 1;
            for k in j + 1..v {
                buf.comb[k] = buf.comb[k - 1] + 1;
            }
        }
    }

    /// Target indices in column `t`, in subset order.
    pub fn column(&self, t: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.column_weight());
        let mut buf = ImageScratch::default();
        self.for_each_image(self.source_space.word(t), &mut buf, |k| out.push(k));
        out
    }

    /// `ψ(u)` computed by streaming over the support of `u`.
    pub fn apply(&self, u: &GFpVector) -> Result<GFpVector> {
        if u.len() != self.source_space.len() {
            return Err(Error::ShapeMismatch {
                expected: self.source_space.len(),
                found: u.len(),
            });
        }
        if u.prime() != self.p {
            return Err(Error::FieldMismatch(self.p.get(), u.prime().get()));
        }
        let mut acc = vec![0u32; self.target_space.len()];
        let mut buf = ImageScratch::default();
        for (t, &c) in u.coords().iter().enumerate() {
            if c != 0 {
                self.for_each_image(self.source_space.word(t), &mut buf, |k| acc[k] += c as u32);
            }
        }
        let m = self.p.get();
        let out = acc.into_iter().map(|x| (x % m) as u8).collect();
        Ok(GFpVector::from_residues(self.p, out).expect("reduced"))
    }

    /// The matrix as compressed rows indexed by target tabloids.
    pub fn sparse_rows(&self) -> SparseRows {
        let (n_src, n_dst) = (self.source_space.len(), self.target_space.len());
        let w = self.column_weight();
        let mut cols: Vec<u32> = Vec::with_capacity(n_src * w);
        let mut buf = ImageScratch::default();
        for t in 0..n_src {
            self.for_each_image(self.source_space.word(t), &mut buf, |k| cols.push(k as u32));
        }
        let mut counts = vec![0usize; n_dst + 1];
        for &k in &cols {
            counts[k as usize + 1] += 1;
        }
        for k in 0..n_dst {
            counts[k + 1] += counts[k];
        }
        let mut fill = counts.clone();
        let mut sources = vec![0u32; cols.len()];
        for (idx, &k) in cols.iter().enumerate() {
            let slot = &mut fill[k as usize];
            sources[*slot] = (idx / w) as u32;
            *slot += 1;
        }
        let mut rows = SparseRows::new(self.p, n_src);
        let mut entries = Vec::new();
        for k in 0..n_dst {
            entries.clear();
            entries.extend(sources[counts[k]..counts[k + 1]].iter().map(|&s| (s, 1u8)));
            rows.push_row(&entries);
        }
        rows
    }

    /// The dense `dim M^ν × dim M^λ` matrix.
    pub fn matrix(&self) -> GFpMatrix {
        self.sparse_rows().to_dense()
    }
}

#[derive(Default)]
struct ImageScratch {
    word: Vec<u8>,
    lower: Vec<usize>,
    comb: Vec<usize>,
}

/// Every `ψ_{i,v}` in the kernel intersection family, ordered by `i` then `v`.
pub fn psi_family(lambda: &Partition, p: Prime, cap: usize) -> Result<Vec<PsiMap>> {
    let space = Arc::new(TabloidSpace::new(&lambda.as_composition(), cap)?);
    psi_family_on(lambda, space, p, cap)
}

pub fn psi_family_on(
    lambda: &Partition,
    space: Arc<TabloidSpace>,
    p: Prime,
    cap: usize,
) -> Result<Vec<PsiMap>> {
    let mut out = Vec::new();
    for i in 1..lambda.rows() {
        for v in 0..lambda.part(i) {
            out.push(PsiMap::with_source(lambda, space.clone(), i, v, p, cap)?);
        }
    }
    Ok(out)
}

/// `ψ_{i,v}` for `λ`; `v = λ_{i+1}` is accepted although it is not part of
/// the kernel intersection family.
pub fn psi_matrix(lambda: &Partition, i: usize, v: usize, p: Prime, limits: &Limits) -> Result<PsiMap> {
    PsiMap::new(lambda, i, v, p, limits.dimension_cap)
}

/// The sum of all λ-tabloids.
pub fn f_lambda(lambda: &Partition, p: Prime, limits: &Limits) -> Result<GFpVector> {
    let n = crate::combinatorics::tabloid_count(&lambda.as_composition()).unwrap_or(u128::MAX);
    if n > limits.dimension_cap as u128 {
        return Err(Error::ResourceCap {
            what: "tabloid basis",
            required: n,
            cap: limits.dimension_cap as u128,
        });
    }
    Ok(GFpVector::ones(p, n as usize))
}

/// `S^λ` inside `M^λ` as the joint kernel of the ψ family.
#[derive(Clone, Debug)]
pub struct SpechtSpace {
    pub lambda: Partition,
    pub p: Prime,
    pub subspace: GFpSubspace,
    pub psi_family: Vec<PsiDescriptor>,
}

pub(crate) fn check_elimination(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.elimination_cap {
        return Err(Error::ResourceCap {
            what: "elimination over M^λ",
            required: n as u128,
            cap: limits.elimination_cap as u128,
        });
    }
    Ok(())
}

/// The Kernel Intersection Theorem, computed: stack every ψ matrix and take
/// the null space. For one-row λ the family is empty and the result is all
/// of `M^λ`.
pub fn specht_by_kernels(lambda: &Partition, p: Prime, limits: &Limits) -> Result<SpechtSpace> {
    let space = Arc::new(TabloidSpace::new(&lambda.as_composition(), limits.dimension_cap)?);
    check_elimination(space.len(), limits)?;
    let family = psi_family_on(lambda, space.clone(), p, limits.dimension_cap)?;
    let rows: Vec<SparseRows> = family.iter().map(PsiMap::sparse_rows).collect();
    let constraints: Vec<Constraint<'_>> = rows.iter().map(Constraint::Kernel).collect();
    let solved = solve_affine(p, space.len(), &constraints)?;
    Ok(SpechtSpace {
        lambda: lambda.clone(),
        p,
        subspace: solved.solutions,
        psi_family: family.iter().map(PsiMap::descriptor).collect(),
    })
}

/// `e_t = Σ_{π ∈ C_t} sgn(π) {πt}` over the column stabilizer of `t`.
pub fn polytabloid(t: &StandardTableau, space: &TabloidSpace, p: Prime) -> Result<GFpVector> {
    if space.shape() != &t.composition() {
        return Err(Error::TabloidShape(space.shape().parts().to_vec()));
    }
    let base = t.tabloid();
    let columns = t.columns();
    let perms: Vec<Vec<(Vec<usize>, i8)>> = columns.iter().map(|c| signed_perms(c.len())).collect();
    let m = p.get() as i64;
    let mut coeffs = vec![0i64; space.len()];
    let mut word = base.word().to_vec();
    signed_sum(&columns, &perms, base.word(), 0, 1, &mut word, space, &mut coeffs);
    let coords: Vec<i64> = coeffs.into_iter().map(|c| c.rem_euclid(m)).collect();
    Ok(GFpVector::from_i64(p, &coords))
}

#[allow(clippy::too_many_arguments)]
fn signed_sum(
    columns: &[Vec<usize>],
    perms: &[Vec<(Vec<usize>, i8)>],
    base: &[u8],
    col: usize,
    sign: i64,
    word: &mut Vec<u8>,
    space: &TabloidSpace,
    coeffs: &mut [i64],
) {
    if col == columns.len() {
        coeffs[space.rank_word(word)] += sign;
        return;
    }
    let entries = &columns[col];
    for (perm, s) in &perms[col] {
        // π sends entries[j] to entries[perm[j]].
        for (j, &x) in entries.iter().enumerate() {
            word[entries[perm[j]] - 1] = base[x - 1];
        }
        signed_sum(columns, perms, base, col + 1, sign * *s as i64, word, space, coeffs);
    }
    for &x in entries {
        word[x - 1] = base[x - 1];
    }
}

// All permutations of 0..k with their signs.
fn signed_perms(k: usize) -> Vec<(Vec<usize>, i8)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i8)>) {
        let k = used.len();
        if prefix.len() == k {
            let inversions = (0..k)
                .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
                .filter(|&(a, b)| prefix[a] > prefix[b])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            out.push((prefix.clone(), sign));
            return;
        }
        for x in 0..k {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// The span of the standard polytabloids.
pub fn specht_standard_basis(lambda: &Partition, p: Prime, limits: &Limits) -> Result<GFpSubspace> {
    let space = TabloidSpace::new(&lambda.as_composition(), limits.dimension_cap)?;
    check_elimination(space.len(), limits)?;
    let tableaux = standard_tableaux(lambda, limits.dimension_cap)?;
    let vectors = tableaux
        .iter()
        .map(|t| polytabloid(t, &space, p))
        .collect::<Result<Vec<_>>>()?;
    GFpSubspace::span(p, space.len(), &vectors)
}

/// `f^λ` as a machine integer.
pub fn specht_dimension(lambda: &Partition) -> usize {
    let f: BigUint = hook_length_dimension(lambda);
    usize::try_from(&f).unwrap_or(usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{act, partitions_of, Permutation, Tabloid};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn lam(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn prime(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn targets_keep_zero_parts() {
        assert_eq!(psi_target(&lam(&[3, 3]), 1, 0).unwrap().parts(), &[6]);
        assert_eq!(psi_target(&lam(&[2, 2, 2, 2]), 1, 0).unwrap().parts(), &[4, 0, 2, 2]);
        assert_eq!(psi_target(&lam(&[3, 2, 1]), 2, 1).unwrap().parts(), &[3, 2, 1]);
        assert!(psi_target(&lam(&[3, 3]), 2, 0).is_err());
        assert!(psi_target(&lam(&[3, 3]), 1, 4).is_err());
        assert!(psi_target(&lam(&[3, 3]), 0, 0).is_err());
    }

    #[test]
    fn column_weights() {
        for l in [lam(&[3, 3]), lam(&[3, 2, 1]), lam(&[4, 2])] {
            for psi in psi_family(&l, prime(3), 10_000).unwrap() {
                let w = psi.column_weight();
                let m = psi.matrix();
                for t in 0..m.cols() {
                    let ones = (0..m.rows()).filter(|&r| m.get(r, t) == 1).count();
                    let nonzero = (0..m.rows()).filter(|&r| m.get(r, t) != 0).count();
                    assert_eq!(ones, w);
                    assert_eq!(nonzero, w);
                }
            }
        }
    }

    #[test]
    fn fixed_vector_image_is_binomial_multiple() {
        for d in 1..=7 {
            for l in partitions_of(d) {
                for p in [3, 5] {
                    let f = f_lambda(&l, prime(p), &Limits::default()).unwrap();
                    for psi in psi_family(&l, prime(p), 100_000).unwrap() {
                        let img = psi.apply(&f).unwrap();
                        assert_eq!(
                            img.constant_value().map(u32::from),
                            Some(psi.scalar_on_fixed_vector()),
                            "{l} ψ_({},{})",
                            psi.i(),
                            psi.v()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn equivariance() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for l in [lam(&[3, 3]), lam(&[3, 2, 1]), lam(&[2, 2, 1, 1])] {
            let d = l.d();
            for psi in psi_family(&l, prime(3), 10_000).unwrap() {
                for _ in 0..20 {
                    let mut img: Vec<usize> = (1..=d).collect();
                    img.shuffle(&mut rng);
                    let sigma = Permutation::from_images(&img).unwrap();
                    let t = rand::Rng::gen_range(&mut rng, 0..psi.source_space().len());
                    let st = act(&sigma, &psi.source_space().tabloid(t).unwrap());
                    let st_idx = psi.source_space().rank(&st).unwrap();
                    // ψ(σ t) as a sorted multiset of targets vs σ ψ(t).
                    let mut lhs = psi.column(st_idx);
                    let mut rhs: Vec<usize> = psi
                        .column(t)
                        .into_iter()
                        .map(|k| {
                            let tau: Tabloid = psi.target_space().tabloid(k).unwrap();
                            psi.target_space().rank(&act(&sigma, &tau)).unwrap()
                        })
                        .collect();
                    lhs.sort_unstable();
                    rhs.sort_unstable();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn small_specht_dimensions() {
        let limits = Limits::default();
        assert_eq!(specht_by_kernels(&lam(&[3, 3]), prime(3), &limits).unwrap().subspace.dim(), 5);
        assert_eq!(specht_by_kernels(&lam(&[2, 1]), prime(3), &limits).unwrap().subspace.dim(), 2);
        let one = specht_by_kernels(&lam(&[4]), prime(3), &limits).unwrap();
        assert_eq!(one.subspace, GFpSubspace::full(prime(3), 1));
        assert!(one.psi_family.is_empty());
    }

    #[test]
    fn polytabloid_examples() {
        let t = StandardTableau::new(vec![vec![1], vec![2]]).unwrap();
        let space = TabloidSpace::new(&t.composition(), 10).unwrap();
        let e = polytabloid(&t, &space, prime(3)).unwrap();
        // {t} = word (0,1) has index 0, {(1 2)t} = word (1,0) has index 1.
        assert_eq!(e.coords(), &[1, 2]);
        let row = StandardTableau::new(vec![vec![1, 2, 3]]).unwrap();
        let space = TabloidSpace::new(&row.composition(), 10).unwrap();
        assert_eq!(polytabloid(&row, &space, prime(5)).unwrap().coords(), &[1]);
    }

    #[test]
    fn polytabloids_lie_in_kernel_intersection() {
        let limits = Limits::default();
        for d in 1..=6 {
            for l in partitions_of(d) {
                for p in [3, 5] {
                    let s = specht_by_kernels(&l, prime(p), &limits).unwrap();
                    let space = TabloidSpace::new(&l.as_composition(), 10_000).unwrap();
                    for t in standard_tableaux(&l, 10_000).unwrap() {
                        let e = polytabloid(&t, &space, prime(p)).unwrap();
                        assert!(s.subspace.contains(&e).unwrap(), "{l} p={p}");
                    }
                    let span = specht_standard_basis(&l, prime(p), &limits).unwrap();
                    assert_eq!(span, s.subspace, "{l} p={p}");
                    assert_eq!(span.dim(), specht_dimension(&l));
                }
            }
        }
    }
}
