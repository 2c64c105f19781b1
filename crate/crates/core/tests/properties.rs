use proptest::prelude::*;
use qhakit_core::catalog::builtin;
use qhakit_core::random::random_twist;
use qhakit_core::scalar::{parse_rational, rat, rational_to_string};
use qhakit_core::structures::QuasiTriangular;
use qhakit_core::twist::{twist_qt, Twist};
use qhakit_core::{Field, Rational, Scalar, Tensor};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ORDERS: [u32; 6] = [1, 3, 4, 5, 8, 12];

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn field_and_scalars(n: usize) -> impl Strategy<Value = (Field, Vec<Scalar>)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(move |order| {
        let f = if order == 1 { Field::rational() } else { Field::cyclotomic(order).unwrap() };
        let d = f.degree();
        prop::collection::vec(prop::collection::vec(small_rational(), d), n)
            .prop_map(move |vs| (f.clone(), vs.into_iter().map(|c| Scalar::from_coeffs(c, &f).unwrap()).collect()))
    })
}

fn qt(name: &str) -> QuasiTriangular {
    builtin(name).unwrap().structure.triangular().unwrap().clone()
}

fn element(t: &QuasiTriangular, coeffs: &[Rational]) -> Tensor {
    let f = t.qba().field();
    let cs: Vec<Scalar> = coeffs.iter().map(|c| Scalar::from_rational(c.clone(), f)).collect();
    t.qba().algebra().element(&cs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((f, s) in field_and_scalars(3)) {
        let (a, b, c) = (&s[0], &s[1], &s[2]);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(&(a - a), &f.zero());
        prop_assert_eq!(a * &f.one(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(a * &a.inverse().unwrap(), f.one());
        } else {
            prop_assert!(a.inverse().is_err());
        }
    }

    #[test]
    fn monomial_squares_have_exact_roots(order in prop::sample::select(ORDERS.to_vec()), j in 0u32..24, r in small_rational()) {
        let f = if order == 1 { Field::rational() } else { Field::cyclotomic(order).unwrap() };
        let mut x = Scalar::from_rational(r, &f);
        for _ in 0..j {
            x = &x * &Scalar::zeta(&f);
        }
        let sq = &x * &x;
        let r = sq.sqrt_exact();
        prop_assert!(r.is_some());
        let r = r.unwrap();
        prop_assert_eq!(&r * &r, sq);
    }

    #[test]
    fn rational_text_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let x = rat(p, q);
        prop_assert_eq!(parse_rational(&rational_to_string(&x)), Some(x));
    }

    #[test]
    fn leg_permutations_compose(perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
                                 seed in any::<u64>()) {
        let t = qt("sweedler_h4");
        let q = t.qba();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_twist(q, &mut rng).f().outer(&q.algebra().basis(seed as usize % 4));
        let y = x.permute_legs(&perm).unwrap();
        let mut inv = vec![0; 3];
        for (j, &p) in perm.iter().enumerate() {
            inv[p] = j;
        }
        prop_assert_eq!(y.permute_legs(&inv).unwrap(), x.clone());
        let one_based: Vec<usize> = perm.iter().map(|p| p + 1).collect();
        prop_assert_eq!(x.relabel(&one_based), y);
    }

    #[test]
    fn dense_round_trip(coeffs in prop::collection::vec(small_rational(), 16)) {
        let f = Field::rational();
        let dense: Vec<Scalar> = coeffs.iter().map(|c| Scalar::from_rational(c.clone(), &f)).collect();
        let t = Tensor::from_dense(&f, 4, 2, &dense);
        prop_assert_eq!(t.to_dense(), dense);
        prop_assert_eq!(t.transpose().transpose(), t.clone());
        for (idx, c) in t.iter() {
            prop_assert_eq!(&t.get(&idx), c);
            prop_assert_eq!(t.decode(t.encode(&idx).unwrap()), idx);
        }
    }

    #[test]
    fn structure_maps_on_random_elements(a in prop::collection::vec(small_rational(), 4),
                                         b in prop::collection::vec(small_rational(), 4)) {
        let t = qt("sweedler_h4");
        let q = t.qba();
        let alg = q.algebra();
        let h = t.qha();
        let (x, y) = (element(&t, &a), element(&t, &b));
        let xy = alg.mul(&x, &y);
        prop_assert_eq!(q.delta(&xy), q.mul(&q.delta(&x), &q.delta(&y)));
        prop_assert_eq!(q.eps(&xy), &q.eps(&x) * &q.eps(&y));
        prop_assert_eq!(h.s(&xy), alg.mul(&h.s(&y), &h.s(&x)));
        prop_assert_eq!(h.s_inv(&h.s(&x)), x.clone());
        // R intertwines the coproduct with its opposite
        prop_assert_eq!(q.mul(t.r(), &q.delta(&x)), q.mul(&q.delta(&x).transpose(), t.r()));
        if let Ok(xi) = alg.invert(&x) {
            prop_assert_eq!(alg.mul(&x, &xi), alg.one());
        }
    }

    #[test]
    fn quasi_coassociativity_on_random_elements(a in prop::collection::vec(small_rational(), 2)) {
        let t = qt("semion");
        let q = t.qba();
        let x = element(&t, &a);
        let dx = q.delta(&x);
        let left = q.mul(q.phi(), &q.delta_at(&dx, 1));
        let right = q.mul(&q.delta_at(&dx, 0), q.phi());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn twisting_preserves_verification(seed in any::<u64>()) {
        for name in ["semion", "sweedler_h4"] {
            let t = qt(name);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_twist(t.qba(), &mut rng);
            let g = random_twist(t.qba(), &mut rng);
            let tw = twist_qt(&t, &f);
            prop_assert!(tw.verify().passed(), "{} {:?}", name, tw.verify().failed_ids());
            let fg: Twist = f.compose(&g, t.qba().algebra());
            prop_assert_eq!(twist_qt(&twist_qt(&t, &g), &f), twist_qt(&t, &fg));
        }
    }
}
