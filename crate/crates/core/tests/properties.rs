use std::sync::Arc;

use proptest::prelude::*;
use singer_core::gf::poly;
use singer_core::linalg::{self, companion, lift_to_block_companion, recognize_block_companion, GfMatrix};
use singer_core::report::{self, Command, Format, RunConfig, VerificationReport};
use singer_core::{numtheory, Elem, Field, FieldTower, GfPoly};

fn field_strategy() -> impl Strategy<Value = Arc<Field>> {
    prop::sample::select(vec![(2u64, 1u32), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)])
        .prop_map(|(p, e)| Arc::new(Field::canonical(p, e).unwrap()))
}

fn coeffs(k: &Field, len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Elem>> {
    prop::collection::vec(0..k.order(), len)
}

fn field_and_poly(len: std::ops::Range<usize>) -> impl Strategy<Value = (Arc<Field>, Vec<Elem>)> {
    field_strategy().prop_flat_map(move |k| {
        let c = coeffs(&k, len.clone());
        (Just(k), c)
    })
}

fn monic(mut c: Vec<Elem>) -> Vec<Elem> {
    c.push(1);
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn char_poly_of_companion_is_the_polynomial((k, c) in field_and_poly(1..7)) {
        let f = GfPoly::new(k, monic(c)).unwrap();
        prop_assert_eq!(linalg::char_poly(&companion(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn divrem_law((k, a, b) in field_and_poly(0..9).prop_flat_map(|(k, a)| {
        let b = coeffs(&k, 1..6);
        (Just(k), Just(a), b)
    })) {
        let b = poly::trimmed(b);
        prop_assume!(!b.is_empty());
        let (quo, r) = poly::divrem(&k, &a, &b);
        prop_assert!(poly::degree(&r).is_none_or(|d| d < poly::degree(&b).unwrap()));
        let back = poly::add(&k, &poly::mul(&k, &quo, &b), &r);
        prop_assert_eq!(back, poly::trimmed(a));
    }

    #[test]
    fn gcd_divides_both((k, a, b) in field_and_poly(0..8).prop_flat_map(|(k, a)| {
        let b = coeffs(&k, 0..8);
        (Just(k), Just(a), b)
    })) {
        let g = poly::gcd(&k, &a, &b);
        if g.is_empty() {
            prop_assert!(poly::trimmed(a).is_empty() && poly::trimmed(b).is_empty());
        } else {
            prop_assert_eq!(*g.last().unwrap(), 1);
            prop_assert!(poly::rem(&k, &a, &g).is_empty());
            prop_assert!(poly::rem(&k, &b, &g).is_empty());
        }
    }

    #[test]
    fn matrix_order_is_minimal((k, data) in field_strategy().prop_flat_map(|k| {
        let d = if k.order() <= 3 { 3 } else { 2 };
        let c = coeffs(&k, d * d..d * d + 1);
        (Just(k), c)
    })) {
        let d = (data.len() as f64).sqrt() as usize;
        let t = GfMatrix::from_vec(k, d, d, data).unwrap();
        prop_assume!(t.det().unwrap() != 0);
        let ord = linalg::matrix_order(&t).unwrap();
        prop_assert!(t.pow(ord).unwrap().is_identity());
        let mut x = t.clone();
        for _ in 1..ord {
            prop_assert!(!x.is_identity());
            x = x.mul(&t).unwrap();
        }
    }

    #[test]
    fn factorization_multiplies_back(n in 1u64..1 << 40) {
        let f = numtheory::factorize(n).unwrap();
        let mut product = 1u64;
        for &(p, e) in f.factors() {
            prop_assert!(numtheory::is_prime(p));
            prop_assert!(e > 0);
            product *= p.pow(e);
        }
        prop_assert_eq!(product, n);
        prop_assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn lift_round_trip(
        (q, m, n) in prop::sample::select(vec![(2u64, 2u32, 2u32), (2, 2, 3), (3, 2, 2), (2, 3, 2), (2, 1, 4), (4, 2, 1)]),
        index in any::<u64>(),
    ) {
        let t = FieldTower::for_q(q, m, n).unwrap();
        let k = t.base();
        let d = (m * n) as usize;
        let total = q.pow(d as u32);
        // walk forward from a random start to the next irreducible
        let f = (0..total)
            .map(|i| poly::monic_from_index(k, d, (index % total + i) % total))
            .find(|f| poly::is_irreducible(k, f))
            .unwrap();
        let f = GfPoly::new(k.clone(), f).unwrap();
        let lifted = lift_to_block_companion(&t, &f).unwrap();
        let spec = recognize_block_companion(&lifted, m as usize, n as usize).unwrap().unwrap();
        prop_assert_eq!(linalg::assemble_block_companion(&spec).unwrap(), lifted.clone());
        prop_assert_eq!(linalg::char_poly(&lifted).unwrap(), f);
    }

    #[test]
    fn report_json_round_trip(q in prop::sample::select(vec![2u64, 3, 4, 5]), n in 1u32..4, seed in any::<u64>()) {
        let mut cfg = RunConfig::new(Command::Toeplitz);
        (cfg.q, cfg.n, cfg.seed) = (Some(q), Some(n), seed);
        let rep = report::run(&cfg).unwrap();
        let json = rep.serialize(Format::Json).unwrap();
        let back = VerificationReport::from_json(&json).unwrap();
        prop_assert_eq!(&back, &rep);
        prop_assert_eq!(back.serialize(Format::Json).unwrap(), json);
    }
}
