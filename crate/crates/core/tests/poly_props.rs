use galois_moebius::arith;
use galois_moebius::{Field, FieldTower, PolyRing, TopPoly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rings() -> impl Strategy<Value = (FieldTower, PolyRing<galois_moebius::Fqn>)> {
    prop::sample::select(vec![
        (2u64, 1u32, 1u32),
        (3, 1, 1),
        (2, 1, 2),
        (3, 1, 2),
        (2, 1, 3),
        (5, 1, 1),
        (2, 2, 2),
    ])
    .prop_map(|(p, e, n)| {
        let t = FieldTower::new(p, e, n).unwrap();
        let r = PolyRing::new(t.top().clone());
        (t, r)
    })
}

fn random_poly(r: &PolyRing<galois_moebius::Fqn>, deg: usize, rng: &mut ChaCha8Rng) -> TopPoly {
    let f = r.field();
    let mut v: Vec<_> = (0..deg).map(|_| f.random(rng)).collect();
    let mut lead = f.random(rng);
    while f.is_zero(&lead) {
        lead = f.random(rng);
    }
    v.push(lead);
    r.from_coeffs(v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn division_contract((_, r) in rings(), seed in any::<u64>(), df in 0usize..12, dg in 1usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(&r, df, &mut rng);
        let g = random_poly(&r, dg, &mut rng);
        let (q, rem) = r.divmod(&f, &g).unwrap();
        prop_assert_eq!(r.add(&r.mul(&q, &g), &rem), f.clone());
        prop_assert!(rem.degree().is_none_or(|d| d < dg));
        prop_assert_eq!(r.mul(&f, &r.one()), f);
    }

    #[test]
    fn gcd_is_monic_common_divisor((_, r) in rings(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_poly(&r, rng.gen_range(1..4), &mut rng);
        let f = r.mul(&h, &random_poly(&r, rng.gen_range(0..5), &mut rng));
        let g = r.mul(&h, &random_poly(&r, rng.gen_range(0..5), &mut rng));
        let d = r.gcd(&f, &g);
        prop_assert!(r.is_monic(&d));
        prop_assert!(r.rem(&f, &d).unwrap().is_zero());
        prop_assert!(r.rem(&g, &d).unwrap().is_zero());
        prop_assert!(r.rem(&d, &r.monic(&h).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn factor_reassembles((_, r) in rings(), seed in any::<u64>(), deg in 1usize..40) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(&r, deg, &mut rng);
        let parts = r.factor(&f, seed);
        let lead = *f.leading().unwrap();
        prop_assert_eq!(r.scale(&r.reassemble(&parts), &lead), f);
        for (g, _) in &parts {
            prop_assert!(r.is_monic(g) && r.is_irreducible(g));
        }
    }

    #[test]
    fn irreducibility_agrees_with_factor((_, r) in rings(), seed in any::<u64>(), deg in 1usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = r.random_monic(deg, &mut rng);
        let parts = r.factor(&f, seed ^ 1);
        prop_assert_eq!(r.is_irreducible(&f), parts.len() == 1 && parts[0].1 == 1);
    }

    #[test]
    fn sigma_preserves_irreducibility((t, r) in rings(), seed in any::<u64>(), deg in 1usize..8, i in -4i64..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = r.random_monic_irreducible(deg, &mut rng);
        let g = r.sigma(&f, i);
        prop_assert_eq!(g.degree(), Some(deg));
        prop_assert!(r.is_monic(&g) && r.is_irreducible(&g));
        let h = random_poly(&r, 3, &mut rng);
        prop_assert_eq!(r.sigma(&r.mul(&f, &h), i), r.mul(&g, &r.sigma(&h, i)));
        let t_min = r.min_subfield_degree(&f);
        prop_assert_eq!(t.n() % t_min, 0);
        prop_assert_eq!(r.sigma(&f, t_min as i64), f);
    }

    #[test]
    fn reciprocal_involution_and_irreducibility((_, r) in rings(), seed in any::<u64>(), deg in 2usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = r.random_monic_irreducible(deg, &mut rng);
        let g = r.reciprocal(&f).unwrap();
        prop_assert!(r.is_irreducible(&g));
        prop_assert_eq!(r.reciprocal(&g).unwrap(), f);
    }

    #[test]
    fn text_and_json_round_trip((_, r) in rings(), seed in any::<u64>(), deg in 0usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(&r, deg, &mut rng);
        prop_assert_eq!(r.parse(&r.format(&f)).unwrap(), f.clone());
        prop_assert_eq!(r.from_json(&r.to_json(&f)).unwrap(), f);
    }
}

#[test]
fn factor_large_degree() {
    let t = FieldTower::new(2, 1, 1).unwrap();
    let r = PolyRing::new(t.top().clone());
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    for deg in [120, 200] {
        let f = r.random_monic(deg, &mut rng);
        assert_eq!(r.reassemble(&r.factor(&f, 3)), f);
    }
    let t = FieldTower::new(3, 1, 1).unwrap();
    let r = PolyRing::new(t.top().clone());
    let f = r.random_monic(200, &mut rng);
    assert_eq!(r.reassemble(&r.factor(&f, 3)), f);
}

/// Every stream with `Q^k ≤ 2^16` over a handful of small fields.
#[test]
fn irreducible_streams_match_necklace_counts() {
    for (p, e, n) in [
        (2, 1, 1),
        (3, 1, 1),
        (2, 1, 2),
        (5, 1, 1),
        (3, 1, 2),
        (2, 2, 2),
        (7, 1, 1),
    ] {
        let t = FieldTower::new(p, e, n).unwrap();
        let r = PolyRing::new(t.top().clone());
        let q = t.top().size();
        let mut k = 1;
        while q.pow(k as u32) <= 1 << 16 {
            assert_eq!(
                r.iter_monic_irreducibles(k).count() as u128,
                arith::count_irreducibles(q as u64, k as u64),
                "Q = {q}, k = {k}"
            );
            k += 1;
        }
    }
}

#[test]
fn spec_examples() {
    let t = FieldTower::new(2, 1, 1).unwrap();
    let r = PolyRing::new(t.top().clone());
    let p = |s: &str| r.parse(s).unwrap();
    assert_eq!(r.gcd(&p("1,0,1"), &p("1,1")), p("1,1"));
    let fmt = |v: Vec<(TopPoly, usize)>| {
        v.iter()
            .map(|(f, m)| format!("{}^{m}", r.format(f)))
            .collect::<Vec<_>>()
    };
    assert_eq!(fmt(r.factor(&p("0,1,0,1"), 0)), vec!["0,1^1", "1,1^2"]);
    assert_eq!(
        fmt(r.factor(&p("0,1,0,0,1"), 0)),
        vec!["0,1^1", "1,1^1", "1,1,1^1"]
    );
    let cubics: Vec<String> = r.iter_monic_irreducibles(3).map(|f| r.format(&f)).collect();
    assert_eq!(cubics, vec!["1,1,0,1", "1,0,1,1"]);
    assert_eq!(r.reciprocal(&p("1,1,0,1")).unwrap(), p("1,0,1,1"));
    assert_eq!(
        r.reciprocal(&p("0,1")),
        Err(galois_moebius::Error::ZeroConstantTerm)
    );
    let t4 = FieldTower::new(2, 1, 2).unwrap();
    let r4 = PolyRing::new(t4.top().clone());
    assert_eq!(r4.iter_monic_irreducibles(2).count(), 6);
    let f = r4.parse("[0,1],1").unwrap();
    assert_eq!(r4.format(&r4.sigma(&f, 1)), "[1,1],1");
    assert_eq!(r4.min_subfield_degree(&f), 2);
}
