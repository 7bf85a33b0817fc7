use proptest::prelude::*;
use qlike::bundles::{saturate, splitting_from_h0, SplittingType};
use qlike::qlike::{bundles, dualize, random_structure};
use qlike::scalar::make_primitive;
use qlike::{BinaryForm, Matrix, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| Scalar::from_parts((a, b), (c, d)))
}

fn form(max_degree: usize) -> impl Strategy<Value = BinaryForm> {
    (0..=max_degree).prop_flat_map(|d| prop::collection::vec(scalar(), d + 1).prop_map(BinaryForm::from_coeffs))
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| {
        // A doubled row forces a rank drop in about half the cases.
        (prop::collection::vec(prop::collection::vec(scalar(), c), r), any::<bool>()).prop_map(move |(rows, dup)| {
            let mut rows = rows;
            if dup && r > 1 {
                rows[r - 1] = rows[0].iter().map(|x| x * &Scalar::from_int(2)).collect();
            }
            Matrix::from_rows(rows)
        })
    })
}

fn splitting() -> impl Strategy<Value = SplittingType> {
    prop::collection::vec(-4i64..=4, 0..6).prop_map(SplittingType::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn antipodal_map_squares_to_sign(f in form(5)) {
        let sign = if f.degree() % 2 == 0 { Scalar::one() } else { Scalar::from_int(-1) };
        prop_assert_eq!(f.antipodal_transform().antipodal_transform(), f.scale(&sign));
    }

    #[test]
    fn evaluation_is_multiplicative(f in form(3), g in form(3), z0 in scalar(), z1 in scalar()) {
        prop_assert_eq!(f.mul(&g).eval(&z0, &z1), &f.eval(&z0, &z1) * &g.eval(&z0, &z1));
    }

    #[test]
    fn euler_relation(f in form(4), z0 in scalar(), z1 in scalar()) {
        let lhs = &(&z0 * &f.d0().eval(&z0, &z1)) + &(&z1 * &f.d1().eval(&z0, &z1));
        prop_assert_eq!(lhs, &Scalar::from_int(f.degree() as i64) * &f.eval(&z0, &z1));
    }

    #[test]
    fn kernel_is_a_complement_of_the_row_space(m in matrix()) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.len(), m.cols());
        prop_assert_eq!(m.rank(), m.rref().pivots.len());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
        if !k.is_empty() {
            prop_assert_eq!(Matrix::from_cols(&k, m.cols()).rank(), k.len());
        }
    }

    #[test]
    fn primitive_vectors_are_integral_multiples(v in prop::collection::vec(scalar(), 1..6)) {
        let mut w = v.clone();
        make_primitive(&mut w);
        prop_assert!(w.iter().all(|x| x.re().is_integer() && x.im().is_integer()));
        let pivot = v.iter().position(|x| !x.is_zero());
        match pivot {
            None => prop_assert!(w.iter().all(Scalar::is_zero)),
            Some(p) => {
                let ratio = &w[p] / &v[p];
                for (a, b) in v.iter().zip(&w) {
                    prop_assert_eq!(&(a * &ratio), b);
                }
            }
        }
    }

    #[test]
    fn splitting_is_recovered_from_sections(s in splitting()) {
        let lo = -s.entries().iter().copied().max().unwrap_or(0);
        let hi = -s.entries().iter().copied().min().unwrap_or(0);
        let back = splitting_from_h0(|m| Ok(s.h0(m)), lo, hi).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn splitting_invariants(s in splitting(), t in -3i64..=3) {
        let twisted = s.twist(t);
        prop_assert_eq!(twisted.degree(), s.degree() + t * s.rank() as i64);
        prop_assert_eq!(s.negate().negate(), s.clone());
        // Serre duality on the projective line: h1(E(m)) = h0(E*(−m−2)).
        for m in -4i64..=4 {
            prop_assert_eq!(s.h1(m), s.negate().h0(-m - 2));
            prop_assert_eq!(s.h0(m) as i64 - s.h1(m) as i64, s.degree() + s.rank() as i64 * (m + 1));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn saturation_is_idempotent(seed in any::<u64>()) {
        let s = random_structure(&mut ChaCha8Rng::seed_from_u64(seed), 6, 2).unwrap();
        let a = saturate(&s.spanning).unwrap();
        let b = saturate(a.basis()).unwrap();
        prop_assert!(a.same_family(&b).unwrap());
        prop_assert_eq!(a.degrees(), b.degrees());
    }

    #[test]
    fn dual_bundles_swap_splittings(seed in any::<u64>()) {
        let s = random_structure(&mut ChaCha8Rng::seed_from_u64(seed), 6, 2).unwrap();
        let b = bundles(&s).unwrap();
        let d = bundles(&dualize(&s).unwrap()).unwrap();
        prop_assert_eq!(d.minus.splitting(), b.plus.splitting().negate());
        prop_assert_eq!(d.plus.splitting(), b.minus.splitting().negate());
    }
}
