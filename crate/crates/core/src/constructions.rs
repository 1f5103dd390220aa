//! Closed-form certificate vectors and their coefficient sums.
//!
//! Every vector is expressed in the lexicographic tabloid order of
//! [`TabloidSpace`], so it can be handed straight to the verifier.

use serde::{Deserialize, Serialize};

use crate::arith::{binom_mod_p, Prime};
use crate::cohomology::Provenance;
use crate::combinatorics::{Composition, Partition, Tabloid, TabloidSpace};
use crate::error::{Error, Result};
use crate::linalg::GFpVector;
use crate::Limits;

/// `λ = (p^a, p^a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PapaParams {
    pub p: Prime,
    pub a: u32,
}

impl PapaParams {
    pub fn new(p: Prime, a: u32) -> Result<Self> {
        let p = p.require_odd()?;
        if a == 0 {
            return Err(Error::InvalidParameters("a must be at least 1".into()));
        }
        p.checked_pow(a)
            .filter(|&q| q <= u32::MAX as u64 / 2)
            .ok_or_else(|| Error::InvalidParameters(format!("{p}^{a} is too large")))?;
        Ok(PapaParams { p, a })
    }

    /// `q = p^a`.
    pub fn q(&self) -> usize {
        self.p.checked_pow(self.a).expect("checked at construction") as usize
    }

    pub fn d(&self) -> usize {
        2 * self.q()
    }

    pub fn lambda(&self) -> Partition {
        Partition::new(vec![self.q(), self.q()]).expect("two equal parts")
    }
}

/// `λ = (p^b - 1, p^a)` with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoPowerParams {
    pub p: Prime,
    pub a: u32,
    pub b: u32,
}

impl TwoPowerParams {
    pub fn new(p: Prime, a: u32, b: u32) -> Result<Self> {
        let p = p.require_odd()?;
        if a == 0 || a >= b {
            return Err(Error::InvalidParameters(format!("need 1 ≤ a < b, got a = {a}, b = {b}")));
        }
        p.checked_pow(b)
            .filter(|&x| x <= u32::MAX as u64)
            .ok_or_else(|| Error::InvalidParameters(format!("{p}^{b} is too large")))?;
        Ok(TwoPowerParams { p, a, b })
    }

    pub fn lambda(&self) -> Partition {
        let big = self.p.checked_pow(self.b).expect("checked") as usize - 1;
        let small = self.p.checked_pow(self.a).expect("checked") as usize;
        Partition::new(vec![big, small]).expect("p^b - 1 ≥ p^a")
    }
}

fn space_for(lambda: &Partition, limits: &Limits) -> Result<TabloidSpace> {
    TabloidSpace::new(&lambda.as_composition(), limits.dimension_cap)
}

/// The sixteen-term vector in `M^{(3,3)}` over GF(3), listed by second rows.
pub fn u_33() -> GFpVector {
    const PLUS: [[usize; 3]; 12] = [
        [1, 3, 4], [1, 3, 5], [1, 3, 6], [1, 4, 5], [1, 4, 6], [1, 5, 6],
        [2, 3, 4], [2, 3, 5], [2, 3, 6], [2, 4, 5], [2, 4, 6], [2, 5, 6],
    ];
    const MINUS: [[usize; 3]; 4] = [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 2, 6]];
    let p = Prime::new(3).expect("prime");
    let shape = Composition::new(vec![3, 3]);
    let space = TabloidSpace::new(&shape, 20).expect("twenty tabloids");
    let mut u = GFpVector::zeros(p, space.len());
    let terms = PLUS.iter().map(|r| (r, 1)).chain(MINUS.iter().map(|r| (r, -1)));
    for (row, c) in terms {
        let t = Tabloid::two_row(&shape, row).expect("valid second row");
        u.set(space.rank(&t).expect("same shape"), c);
    }
    u
}

/// Indicator of the tabloids with `1, …, p^a` all in the first row.
pub fn u_first_row(params: &TwoPowerParams, limits: &Limits) -> Result<GFpVector> {
    let lambda = params.lambda();
    let space = space_for(&lambda, limits)?;
    let k = lambda.part(1);
    let coords = space
        .words()
        .map(|w| w[..k].iter().all(|&r| r == 0) as u8)
        .collect();
    GFpVector::from_residues(params.p, coords)
}

/// Number of `1, …, p^a - 1` in the second row of a `(p^a, p^a)` word.
fn low_count(word: &[u8], q: usize) -> usize {
    word[..q - 1].iter().filter(|&&r| r == 1).count()
}

/// Indicator of the tabloids with exactly `i` of `1, …, p^a - 1` in row two.
pub fn v_i(params: &PapaParams, i: usize, limits: &Limits) -> Result<GFpVector> {
    let q = params.q();
    if i >= q {
        return Err(Error::InvalidParameters(format!("need i < {q}, got {i}")));
    }
    let space = space_for(&params.lambda(), limits)?;
    let coords = space.words().map(|w| (low_count(w, q) == i) as u8).collect();
    GFpVector::from_residues(params.p, coords)
}

/// `Σ_{m=0}^{p^a-1} (m+1)·v_m`.
pub fn u_papa(params: &PapaParams, limits: &Limits) -> Result<GFpVector> {
    let q = params.q();
    let p = params.p.get() as usize;
    let space = space_for(&params.lambda(), limits)?;
    let coords = space
        .words()
        .map(|w| ((low_count(w, q) + 1) % p) as u8)
        .collect();
    GFpVector::from_residues(params.p, coords)
}

/// The `(2p^a - s, s)`-tabloid with second row `{1, …, t} ∪ {p^a, …, p^a + s - t - 1}`.
pub fn canonical_tabloid(params: &PapaParams, s: usize, t: usize) -> Result<Tabloid> {
    let q = params.q();
    if t > s || s >= q {
        return Err(Error::InvalidParameters(format!("need t ≤ s < {q}, got s = {s}, t = {t}")));
    }
    let second: Vec<usize> = (1..=t).chain(q..q + s - t).collect();
    Tabloid::two_row(&Composition::new(vec![2 * q - s, s]), &second)
}

/// `A_{s,t} = Σ_{m=t}^{p^a-1} (m+1)·C(p^a-1-t, m-t)·C(p^a-s+t+1, m+1)` mod p,
/// the coefficient of the canonical tabloid in `ψ_{1,s}(u_papa)`.
///
/// Accepts `0 ≤ t ≤ s < p^a`; `t = 0` is the left end of the telescoping
/// difference `A_{s,t} - A_{s,t-1}`.
pub fn a_st(params: &PapaParams, s: usize, t: usize) -> Result<u32> {
    let q = params.q() as u64;
    let (s, t) = (s as u64, t as u64);
    if t > s || s >= q {
        return Err(Error::InvalidParameters(format!("need t ≤ s < {q}, got s = {s}, t = {t}")));
    }
    let p = params.p;
    let m_p = p.get() as u64;
    let mut acc = 0u64;
    for m in t..q {
        let lead = (m + 1) % m_p;
        if lead == 0 {
            continue;
        }
        let c1 = binom_mod_p(q - 1 - t, m - t, p) as u64;
        let c2 = binom_mod_p(q - s + t + 1, m + 1, p) as u64;
        acc = (acc + lead * c1 % m_p * c2) % m_p;
    }
    Ok(acc as u32)
}

/// `C(p^a - 1 - t, i - t)·C(p^a - s + t + 1, p^a - s + t - i)` mod p: the
/// coefficient of the canonical tabloid in `ψ_{1,s}(v_i)`.
pub fn v_i_coefficient(params: &PapaParams, i: usize, s: usize, t: usize) -> u32 {
    let q = params.q() as u64;
    let (i, s, t) = (i as u64, s as u64, t as u64);
    if i < t || q + t < s + i {
        return 0;
    }
    let p = params.p;
    binom_mod_p(q - 1 - t, i - t, p) * binom_mod_p(q - s + t + 1, q - s + t - i, p) % p.get()
}

/// A named family, as accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    ThreeThree,
    FirstRow(TwoPowerParams),
    Papa(PapaParams),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::ThreeThree => "eq-4.1",
            Family::FirstRow(_) => "thm-5.11",
            Family::Papa(_) => "papa",
        }
    }

    pub fn lambda(&self) -> Partition {
        match self {
            Family::ThreeThree => Partition::new(vec![3, 3]).expect("partition"),
            Family::FirstRow(params) => params.lambda(),
            Family::Papa(params) => params.lambda(),
        }
    }

    pub fn prime(&self) -> Prime {
        match self {
            Family::ThreeThree => Prime::new(3).expect("prime"),
            Family::FirstRow(params) => params.p,
            Family::Papa(params) => params.p,
        }
    }

    pub fn provenance(&self) -> Provenance {
        match self {
            Family::ThreeThree => Provenance::ThreeThree,
            Family::FirstRow(TwoPowerParams { p, a: 1, b: 2 }) if p.get() == 3 => Provenance::EightThree,
            Family::FirstRow(_) => Provenance::FirstRow,
            Family::Papa(_) => Provenance::Papa,
        }
    }

    pub fn vector(&self, limits: &Limits) -> Result<GFpVector> {
        match self {
            Family::ThreeThree => Ok(u_33()),
            Family::FirstRow(params) => u_first_row(params, limits),
            Family::Papa(params) => u_papa(params, limits),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::verify_certificate;
    use crate::linalg::GFpSubspace;
    use crate::specht::{psi_matrix, specht_by_kernels};

    fn choose(n: usize, k: usize) -> usize {
        (0..k).fold(1, |c, j| c * (n - j) / (j + 1))
    }

    fn papa(p: u32, a: u32) -> PapaParams {
        PapaParams::new(Prime::new(p).unwrap(), a).unwrap()
    }

    #[test]
    fn u_33_transcription() {
        let u = u_33();
        let shape = Composition::new(vec![3, 3]);
        let space = TabloidSpace::new(&shape, 20).unwrap();
        let at = |row: &[usize]| u.get(space.rank(&Tabloid::two_row(&shape, row).unwrap()).unwrap());
        assert_eq!(at(&[1, 3, 4]), 1);
        assert_eq!(at(&[1, 2, 3]), 2);
        assert_eq!(at(&[3, 4, 5]), 0);
        assert_eq!(u.support().len(), 16);
    }

    #[test]
    fn first_row_support() {
        let params = TwoPowerParams::new(Prime::new(3).unwrap(), 1, 2).unwrap();
        let u = u_first_row(&params, &Limits::default()).unwrap();
        assert_eq!(u.len(), 165);
        assert_eq!(u.support().len(), 56);
    }

    #[test]
    fn parameter_validation() {
        let three = Prime::new(3).unwrap();
        assert!(TwoPowerParams::new(three, 2, 2).is_err());
        assert!(TwoPowerParams::new(three, 0, 2).is_err());
        assert!(PapaParams::new(three, 0).is_err());
        assert!(PapaParams::new(Prime::new(2).unwrap(), 1).is_err());
        assert!(canonical_tabloid(&papa(3, 1), 3, 1).is_err());
        assert!(a_st(&papa(3, 1), 1, 2).is_err());
    }

    #[test]
    fn v_i_partition_the_basis() {
        for params in [papa(3, 1), papa(5, 1)] {
            let q = params.q();
            let limits = Limits::default();
            let mut count = 0;
            let n = v_i(&params, 0, &limits).unwrap().len();
            let mut covered = vec![0u8; n];
            for i in 0..q {
                let v = v_i(&params, i, &limits).unwrap();
                let support = v.support();
                let expected = choose(q - 1, i) * choose(q + 1, q - i);
                assert_eq!(support.len(), expected);
                for (k, _) in support {
                    covered[k] += 1;
                }
                count += 1;
            }
            assert_eq!(count, q);
            assert!(covered.iter().all(|&c| c == 1));
        }
    }

    #[test]
    fn papa_images() {
        let limits = Limits::default();
        for params in [papa(3, 1), papa(5, 1)] {
            let u = u_papa(&params, &limits).unwrap();
            let lambda = params.lambda();
            for s in 0..params.q() {
                let psi = psi_matrix(&lambda, 1, s, params.p, &limits).unwrap();
                let image = psi.apply(&u).unwrap();
                if s == 0 {
                    assert_eq!(image.coords(), &[1]);
                } else {
                    assert!(image.is_zero(), "s = {s}");
                }
            }
        }
    }

    #[test]
    fn a_st_matches_extracted_coefficient() {
        let limits = Limits::default();
        for params in [papa(3, 1), papa(5, 1)] {
            let u = u_papa(&params, &limits).unwrap();
            let lambda = params.lambda();
            for s in 1..params.q() {
                let psi = psi_matrix(&lambda, 1, s, params.p, &limits).unwrap();
                let image = psi.apply(&u).unwrap();
                for t in 0..=s {
                    let k = psi.target_space().rank(&canonical_tabloid(&params, s, t).unwrap()).unwrap();
                    assert_eq!(image.get(k) as u32, a_st(&params, s, t).unwrap());
                }
            }
        }
    }

    #[test]
    fn v_i_coefficients_match_images() {
        let limits = Limits::default();
        let params = papa(5, 1);
        let lambda = params.lambda();
        for i in 0..params.q() {
            let v = v_i(&params, i, &limits).unwrap();
            for s in 1..params.q() {
                let psi = psi_matrix(&lambda, 1, s, params.p, &limits).unwrap();
                let image = psi.apply(&v).unwrap();
                for t in 1..=s {
                    let k = psi.target_space().rank(&canonical_tabloid(&params, s, t).unwrap()).unwrap();
                    assert_eq!(image.get(k) as u32, v_i_coefficient(&params, i, s, t));
                }
            }
        }
    }

    #[test]
    fn two_certificates_for_three_three_agree_modulo_fixed_vector() {
        let limits = Limits::default();
        let params = papa(3, 1);
        let a = u_33();
        let b = u_papa(&params, &limits).unwrap();
        assert_ne!(a, b);
        let s: GFpSubspace = specht_by_kernels(&params.lambda(), params.p, &limits).unwrap().subspace;
        let diff = a.sub(&b).unwrap();
        // Multiples (2,2,2) against (1,0,0), with ψ(f) = (2,1,1): the
        // difference is -f modulo the Specht module, not zero.
        assert!(!s.contains(&diff).unwrap());
        let f = GFpVector::ones(params.p, diff.len());
        assert!(s.contains(&diff.add(&f).unwrap()).unwrap());
    }

    #[test]
    fn families_verify() {
        let limits = Limits::default();
        let three = Prime::new(3).unwrap();
        let families = [
            Family::ThreeThree,
            Family::FirstRow(TwoPowerParams::new(three, 1, 2).unwrap()),
            Family::Papa(papa(3, 1)),
            Family::Papa(papa(5, 1)),
        ];
        for fam in families {
            let u = fam.vector(&limits).unwrap();
            let cert = verify_certificate(&fam.lambda(), fam.prime(), &u, fam.provenance(), &limits).unwrap();
            assert!(cert.verified(), "{}", fam.name());
        }
    }
}
