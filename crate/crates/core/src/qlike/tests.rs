use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;

fn conj_matrix_j() -> Matrix {
    Matrix::from_ints(&[&[0, -1], &[1, 0]])
}

#[test]
fn quaternionic_line() {
    let s = build_quaternionic(1);
    let v = validate(&s).unwrap();
    assert!(v.is_valid(), "{v:?}");
    assert!(v.warnings.is_empty());
    let r = analyze(&s).unwrap();
    assert_eq!(r.splitting_minus.entries(), &[-1, -1]);
    assert_eq!(r.splitting_plus.entries(), &[1, 1]);
    assert_eq!(r.label, "quaternionic");
    assert_eq!((r.heaven.u_plus, r.heaven.e_plus, r.minus.u_minus), (4, 4, 4));
    assert_eq!(r.heaven.psi_plus.rank, 4);
    assert!(r.passed(), "{r:?}");
}

#[test]
fn conic_structure() {
    let s = conic_r3();
    let r = analyze(&s).unwrap();
    assert!(r.validation.check("reality").unwrap().passed);
    assert_eq!(r.splitting_minus.entries(), &[-2]);
    assert_eq!(r.splitting_plus.entries(), &[1, 1]);
    assert_eq!(r.label, "rho-star-quaternionic");
    assert_eq!(r.flags, vec!["CR".to_string()]);
    assert_eq!((r.heaven.u_plus, r.heaven.psi_plus.kernel, r.heaven.psi_plus.cokernel), (4, 0, 1));
    assert_eq!(r.heaven.e_plus, 4);
    assert_eq!((r.minus.u_minus, r.minus.psi_minus.rank), (3, 3));
    assert_eq!((r.correspondence.coker_rho_minus_star, r.correspondence.coker_psi_plus), (1, 1));
    assert!(r.passed(), "{r:?}");

    let d = dualize(&s).unwrap();
    let rd = analyze(&d).unwrap();
    assert_eq!(rd.splitting_minus.entries(), &[-1, -1]);
    assert_eq!(rd.splitting_plus.entries(), &[2]);
    assert_eq!(rd.label, "rho-quaternionic");
    assert_eq!(rd.flags, vec!["co-CR".to_string()]);
    assert!(rd.passed(), "{rd:?}");

    let dd = dualize(&d).unwrap();
    assert!(bundles(&dd).unwrap().minus.same_family(&bundles(&s).unwrap().minus).unwrap());
}

#[test]
fn complex_conic_in_four_space() {
    let r = analyze(&complex_c4()).unwrap();
    assert_eq!(r.splitting_minus.entries(), &[-2]);
    assert_eq!(r.splitting_plus.entries(), &[1, 1, 0]);
    assert_eq!(r.label, "general");
    assert_eq!((r.heaven.u_plus, r.heaven.psi_plus.kernel, r.heaven.psi_plus.cokernel, r.heaven.e_plus), (5, 0, 1, 4));
    assert_eq!((r.minus.u_minus, r.minus.psi_minus.kernel), (3, 0));
    assert!(r.passed(), "{r:?}");
}

#[test]
fn constant_family_is_not_immersed() {
    let col = vec![BinaryForm::constant(Scalar::one()), BinaryForm::zero(0), BinaryForm::zero(0)];
    let s = QLikeStructure::new(Mode::Complex, PolyMatrix::from_columns(3, vec![col]), 1, None);
    let v = validate(&s).unwrap();
    let c = v.check("immersion").unwrap();
    assert!(!c.passed);
    assert_eq!(c.detail, "constant map, not an embedding");
}

#[test]
fn degenerate_dimensions_are_rejected() {
    let s = QLikeStructure::new(Mode::Complex, PolyMatrix::identity(2), 2, None);
    assert!(!validate(&s).unwrap().rank_ok());
    assert!(analyze(&s).is_err());
}

#[test]
fn twisted_cubic_in_the_plane_is_not_injective() {
    // A nodal plane cubic.
    let col = vec!["z0^3", "z0*z1^2 - z0^3", "z1^3 - z0^2*z1"].into_iter().map(|s| s.parse().unwrap()).collect();
    let s = QLikeStructure::new(Mode::Complex, PolyMatrix::from_columns(3, vec![col]), 1, None);
    let v = validate(&s).unwrap();
    let c = v.check("injectivity").unwrap();
    assert!(!(c.passed && c.detail.is_empty()), "{v:?}");
}

#[test]
fn morphisms() {
    let s = build_quaternionic(1);
    assert!(check_morphism(&s, &s, &Matrix::identity(4), &Matrix::identity(2)).unwrap());
    let [_, lj, _, rj] = quaternion_units();
    assert!(check_morphism(&s, &s, &rj, &Matrix::identity(2)).unwrap());
    assert!(check_morphism(&s, &s, &lj, &conj_matrix_j()).unwrap());
    assert!(!check_morphism(&s, &s, &lj, &Matrix::identity(2)).unwrap());
    let bad = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
    assert!(check_morphism(&s, &s, &Matrix::identity(4), &bad).is_err());
}

#[test]
fn heaven_morphism() {
    for s in [conic_r3(), complex_c4(), build_quaternionic(1)] {
        let b = bundles(&s).unwrap();
        let h = heaven_data(&s, &b).unwrap();
        let target = heaven_structure(&s).unwrap();
        assert!(check_morphism(&s, &target, &h.psi_plus, &Matrix::identity(2)).unwrap());
    }
}

#[test]
fn random_structures_satisfy_the_correspondence() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3 {
        let s = random_structure(&mut rng, 6, 3).unwrap();
        let r = analyze(&s).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}

#[test]
fn json_round_trip() {
    let s = conic_r3();
    let text = serde_json::to_string(&s.to_json()).unwrap();
    assert_eq!(QLikeStructure::parse(&text).unwrap(), s);
}
