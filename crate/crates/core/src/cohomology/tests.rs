use super::*;
use crate::arith::h0_criterion;
use crate::combinatorics::{partitions_of, Composition, Tabloid, TabloidSpace};
use crate::linalg::GFpVector;
use crate::specht::specht_by_kernels;
use crate::{Error, Limits, Partition, Prime};

fn lam(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn prime(p: u32) -> Prime {
    Prime::new(p).unwrap()
}

fn two_row_vector(shape: &[usize], p: Prime, terms: &[(&[usize], i64)]) -> GFpVector {
    let comp = Composition::new(shape.to_vec());
    let space = TabloidSpace::new(&comp, 100_000).unwrap();
    let entries: Vec<(usize, i64)> = terms
        .iter()
        .map(|(row, c)| (space.rank(&Tabloid::two_row(&comp, row).unwrap()).unwrap(), *c))
        .collect();
    GFpVector::from_sparse(p, space.len(), &entries).unwrap()
}

fn three_three() -> GFpVector {
    let plus: [&[usize]; 12] = [
        &[1, 3, 4], &[1, 3, 5], &[1, 3, 6], &[1, 4, 5], &[1, 4, 6], &[1, 5, 6],
        &[2, 3, 4], &[2, 3, 5], &[2, 3, 6], &[2, 4, 5], &[2, 4, 6], &[2, 5, 6],
    ];
    let minus: [&[usize]; 4] = [&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 2, 6]];
    let terms: Vec<(&[usize], i64)> = plus
        .iter()
        .map(|r| (*r, 1))
        .chain(minus.iter().map(|r| (*r, -1)))
        .collect();
    two_row_vector(&[3, 3], prime(3), &terms)
}

#[test]
fn h0_examples() {
    let l = Limits::default();
    assert!(h0_direct(&lam(&[8, 3]), prime(3), &l).unwrap());
    assert!(!h0_direct(&lam(&[3, 3]), prime(3), &l).unwrap());
    assert!(h0_direct(&lam(&[7]), prime(5), &l).unwrap());
}

#[test]
fn h0_direct_matches_criterion_small() {
    let l = Limits::default();
    for d in 1..=6 {
        for lambda in partitions_of(d) {
            for p in [3, 5, 7] {
                assert_eq!(
                    h0_direct(&lambda, prime(p), &l).unwrap(),
                    h0_criterion(&lambda, prime(p)),
                    "{lambda} p={p}"
                );
            }
        }
    }
}

#[test]
fn three_three_certificate() {
    let cert = verify_certificate(
        &lam(&[3, 3]),
        prime(3),
        &three_three(),
        Provenance::UserSupplied,
        &Limits::default(),
    )
    .unwrap();
    assert!(cert.condition1_ok && cert.condition2_ok && !cert.condition2_skipped);
    for v in 0..3 {
        assert_eq!(cert.multiple(1, v).unwrap().c, Some(2));
    }
    let ext = extension_module(&cert, &Limits::default()).unwrap();
    assert_eq!((ext.dim, ext.ambient_dim, ext.dim_s), (6, 20, 5));
    assert_eq!(ext.nonsplit_witness, Some(true));
    assert_eq!(ext.closure, ClosureCheck::Basis);
}

#[test]
fn kernel_vectors_fail_condition_one() {
    let l = Limits::default();
    let s = specht_by_kernels(&lam(&[3, 3]), prime(3), &l).unwrap().subspace;
    let u = s.basis_vectors()[2].clone();
    let cert = verify_certificate(&lam(&[3, 3]), prime(3), &u, Provenance::UserSupplied, &l).unwrap();
    assert!(!cert.condition1_ok);
    assert_eq!(cert.first_violation, Some(Violation::AllMultiplesZero));
    assert!(extension_module(&cert, &l).is_err());
}

#[test]
fn fixed_vector_fails_condition_two() {
    let l = Limits::default();
    let f = GFpVector::ones(prime(3), 20);
    let cert = verify_certificate(&lam(&[3, 3]), prime(3), &f, Provenance::UserSupplied, &l).unwrap();
    assert!(cert.condition1_ok);
    assert!(!cert.condition2_ok);
    assert_eq!(cert.witness_a, Some(1));
    let twice = verify_certificate(&lam(&[3, 3]), prime(3), &f.scale(2), Provenance::UserSupplied, &l).unwrap();
    assert_eq!(twice.witness_a, Some(2));
}

#[test]
fn tampering_names_a_map() {
    let l = Limits::default();
    let mut u = three_three();
    let c = u.get(0) as i64;
    u.set(0, c + 1);
    let cert = verify_certificate(&lam(&[3, 3]), prime(3), &u, Provenance::UserSupplied, &l).unwrap();
    assert!(!cert.verified());
    assert!(matches!(cert.first_violation, Some(Violation::NotMultiple { i: 1, .. })));
}

#[test]
fn even_characteristic_is_refused() {
    let l = Limits::default();
    let two = prime(2);
    assert!(matches!(h1_nonvanishing(&lam(&[2]), two, &l), Err(Error::EvenCharacteristic)));
    let u = GFpVector::ones(two, 1);
    assert!(matches!(
        verify_certificate(&lam(&[2]), two, &u, Provenance::UserSupplied, &l),
        Err(Error::EvenCharacteristic)
    ));
    // The oracle still runs: Hom(Σ_2, k) ≠ 0 in characteristic two.
    assert_eq!(cocycle_h1_dimension(&lam(&[2]), two, &l).unwrap(), 1);
}

#[test]
fn h1_examples() {
    let l = Limits::default();
    let d = h1_nonvanishing(&lam(&[3, 3]), prime(3), &l).unwrap();
    assert!(d.nonvanishing && !d.h0);
    assert_eq!((d.dim_m, d.dim_s), (20, 5));
    assert!(d.certificate.as_ref().unwrap().verified());
    for one_row in [lam(&[4]), lam(&[1])] {
        let d = h1_nonvanishing(&one_row, prime(3), &l).unwrap();
        assert!(!d.nonvanishing && d.certificate.is_none());
        assert_eq!(d.diagnostic_dim, 0);
    }
    let d = h1_nonvanishing(&lam(&[8, 3]), prime(3), &l).unwrap();
    assert!(d.nonvanishing && d.h0);
    assert_eq!(d.dim_s, 110);
}

#[test]
fn decision_matches_oracle_small() {
    let l = Limits::default();
    for d in 1..=5 {
        for lambda in partitions_of(d) {
            for p in [3, 5] {
                let w = h1_nonvanishing(&lambda, prime(p), &l).unwrap();
                let z = cocycle_h1_dimension(&lambda, prime(p), &l).unwrap();
                assert_eq!(w.nonvanishing, z > 0, "{lambda} p={p}");
            }
        }
    }
}

#[test]
fn adding_kernel_vectors_preserves_verification() {
    let l = Limits::default();
    let lambda = lam(&[3, 3]);
    let s = specht_by_kernels(&lambda, prime(3), &l).unwrap().subspace;
    let u = three_three();
    for (k, b) in s.basis_vectors().iter().enumerate() {
        let moved = u.add_scaled(k as i64 + 1, b).unwrap();
        let cert = verify_certificate(&lambda, prime(3), &moved, Provenance::UserSupplied, &l).unwrap();
        assert!(cert.verified());
    }
}

#[test]
fn fixed_space_is_one_dimensional() {
    let l = Limits::default();
    for d in 1..=5 {
        for lambda in partitions_of(d) {
            assert_eq!(fixed_space_dimension(&lambda, prime(3), &l).unwrap(), 1, "{lambda}");
        }
    }
}

#[test]
fn relator_count() {
    // d - 1 squares, d - 2 braid relators, C(d-2, 2) commutations.
    assert_eq!(coxeter_relators(4).len(), 4 + 3 + 3);
    assert!(coxeter_relators(0).is_empty());
}

#[test]
fn record_round_trip() {
    let l = Limits::default();
    let cert = verify_certificate(&lam(&[3, 3]), prime(3), &three_three(), Provenance::ThreeThree, &l).unwrap();
    let json = serde_json::to_string(&cert.to_record()).unwrap();
    assert!(json.contains("\"provenance\":\"eq-4.1\""));
    let back: CertificateRecord = serde_json::from_str(&json).unwrap();
    let again = back.verify(&l).unwrap();
    assert_eq!(again.u, cert.u);
    assert_eq!(again.multiples, cert.multiples);
    assert_eq!(again.to_record(), cert.to_record());
}
