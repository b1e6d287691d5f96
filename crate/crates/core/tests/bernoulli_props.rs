//! Symbolic-dynamics invariants of affine Bernoulli models.

use nadyn::bernoulli::{build_model, cylinder_masses, periodic_points, Itinerary, Word};
use nadyn::rat::qi;
use nadyn::Q;
use proptest::prelude::*;

fn dilations() -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(2u64..7, 2..4).prop_filter("sum of 1/d_j at most 1", |d| {
        d.iter()
            .map(|&x| Q::new(1.into(), (x as i64).into()))
            .sum::<Q>()
            <= qi(1)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cylinder_masses_sum_to_one(dil in dilations(), n in 1usize..4) {
        let m = build_model(&dil, None).unwrap();
        let k = m.k();
        let (mut rho, mut mu) = (Q::from(qi(0)), qi(0));
        for i in 0..k.pow(n as u32) {
            let mut w = vec![0; n];
            let mut r = i;
            for s in w.iter_mut().rev() {
                *s = r % k + 1;
                r /= k;
            }
            let (a, b) = cylinder_masses(&m, &Word(w)).unwrap();
            rho += a;
            mu += b;
        }
        prop_assert_eq!(rho, qi(1));
        prop_assert_eq!(mu, qi(1));
    }

    /// `R(decode(w)) = decode(shift w)` and the code of `decode(w)` is `w`
    /// away from boundary points.
    #[test]
    fn decode_conjugates_the_shift(dil in dilations(), word in proptest::collection::vec(0usize..3, 1..5)) {
        let m = build_model(&dil, None).unwrap();
        let cycle: Vec<usize> = word.iter().map(|&j| j % m.k() + 1).collect();
        let it = Itinerary::periodic(Word(cycle.clone()));
        let x = m.decode(&it).unwrap();
        let mut rotated = cycle.clone();
        rotated.rotate_left(1);
        let y = m.decode(&Itinerary::periodic(Word(rotated))).unwrap();
        prop_assert_eq!(m.apply(&x).unwrap(), y);
        let code = m.itinerary(&x, cycle.len()).unwrap();
        let boundary = m.branches.iter().any(|b| b.start == x || b.end == x);
        if !boundary {
            prop_assert_eq!(code, Word(cycle));
        }
    }

    #[test]
    fn periodic_weights_total_d_to_the_n(dil in dilations(), n in 1usize..5) {
        let m = build_model(&dil, None).unwrap();
        let pts = periodic_points(&m, n).unwrap();
        prop_assert_eq!(pts.len(), m.k().pow(n as u32));
        let total: num_bigint::BigInt = pts.iter().map(|p| p.weight.clone()).sum();
        prop_assert_eq!(total, num_bigint::BigInt::from(m.d).pow(n as u32));
        for p in &pts {
            let mut y = p.point.clone();
            for _ in 0..n {
                y = m.apply(&y).unwrap();
            }
            prop_assert_eq!(&y, &p.point);
        }
    }

    #[test]
    fn itinerary_round_trips_through_decode(dil in dilations(), num in 0i64..1000) {
        let m = build_model(&dil, None).unwrap();
        let x = Q::new(num.into(), 999.into());
        if let Ok(it) = m.full_itinerary(&x) {
            prop_assert_eq!(m.decode(&it).unwrap(), x);
        }
    }
}
