use galois_moebius::{Field, FieldTower, FrobeniusField};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn towers() -> impl Strategy<Value = FieldTower> {
    prop::sample::select(vec![
        (2u64, 1u32, 2u32),
        (3, 1, 2),
        (2, 1, 3),
        (2, 2, 2),
        (5, 1, 2),
        (3, 2, 1),
        (2, 3, 2),
    ])
    .prop_map(|(p, e, n)| FieldTower::new(p, e, n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(t in towers(), seed in any::<u64>()) {
        let f = t.top();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
        if !f.is_zero(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        }
    }

    #[test]
    fn fermat_at_the_top(t in towers(), seed in any::<u64>()) {
        let f = t.top();
        let a = f.random(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(f.pow(&a, f.size()), a);
    }

    #[test]
    fn inverse_of_product(t in towers(), seed in any::<u64>()) {
        let f = t.top();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (f.random(&mut rng), f.random(&mut rng));
        prop_assume!(!f.is_zero(&a) && !f.is_zero(&b));
        prop_assert_eq!(
            f.inv(&f.mul(&a, &b)).unwrap(),
            f.mul(&f.inv(&a).unwrap(), &f.inv(&b).unwrap())
        );
    }

    #[test]
    fn frobenius_is_a_field_automorphism(t in towers(), seed in any::<u64>(), i in -6i64..6, j in -6i64..6) {
        let f = t.top();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (f.random(&mut rng), f.random(&mut rng));
        prop_assert_eq!(f.frobenius(&f.mul(&a, &b), i), f.mul(&f.frobenius(&a, i), &f.frobenius(&b, i)));
        prop_assert_eq!(f.frobenius(&f.add(&a, &b), i), f.add(&f.frobenius(&a, i), &f.frobenius(&b, i)));
        prop_assert_eq!(f.frobenius(&f.frobenius(&a, i), j), f.frobenius(&a, i + j));
        prop_assert_eq!(f.frobenius(&a, t.n() as i64), a);
        prop_assert_eq!(f.frobenius(&a, 1), f.pow(&a, t.q() as u128));
    }

    #[test]
    fn base_field_is_fixed(t in towers(), seed in any::<u64>(), i in 0i64..8) {
        let c = t.base().random(&mut ChaCha8Rng::seed_from_u64(seed));
        let a = t.embed_base(&c);
        prop_assert_eq!(t.frobenius(&a, i), a);
        prop_assert_eq!(t.subfield_degree(&a), 1);
        prop_assert_eq!(t.to_base(&a), Some(c));
    }

    #[test]
    fn text_round_trip(t in towers(), seed in any::<u64>()) {
        let f = t.top();
        let a = f.random(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(f.parse_elem(&f.format_elem(&a)).unwrap(), a);
    }
}

#[test]
fn f4_examples() {
    let t = FieldTower::new(2, 1, 2).unwrap();
    let f = t.top();
    let u = f.parse_elem("[0,1]").unwrap();
    let u1 = f.parse_elem("[1,1]").unwrap();
    assert_eq!(f.mul(&u, &u), u1);
    assert_eq!(f.inv(&u).unwrap(), u1);
    assert_eq!(t.frobenius(&u, 1), u1);
    assert_eq!(t.subfield_degree(&u), 2);
    assert_eq!(t.subfield_degree(&f.one()), 1);
    assert_eq!(t.subfield_degree(&f.zero()), 1);
    assert!(f.is_zero(&f.add(&u, &u)));
    assert_eq!(f.format_elem(&u), "[0,1]");
    assert_eq!(f.format_elem(&f.one()), "1");
}

#[test]
fn division_by_zero_is_an_error() {
    let t = FieldTower::new(3, 1, 2).unwrap();
    assert_eq!(
        t.top().inv(&t.top().zero()),
        Err(galois_moebius::Error::DivisionByZero)
    );
}
