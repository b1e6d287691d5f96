//! Valuation invariants across the three fields, with an independent
//! norm-based oracle for radical extensions.

mod common;

use common::{rand_poly, rand_scalar};
use nadyn::exactval::{FieldDesc, Valuation};
use nadyn::polynewt::{resultant, root_valuations, Poly};
use nadyn::rat::{q, qi, vp_rat};
use nadyn::Q;
use num_traits::Zero;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn fields() -> Vec<FieldDesc> {
    vec![
        FieldDesc::padic(3).unwrap(),
        FieldDesc::radical(2, q(1, 2), 3).unwrap(),
        FieldDesc::radical(5, qi(5), 2).unwrap(),
        FieldDesc::laurent(),
    ]
}

fn min_val(a: &Valuation, b: &Valuation) -> Valuation {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ultrametric_and_multiplicative(seed in any::<u64>(), which in 0usize..4) {
        let k = &fields()[which];
        let mut rng = StdRng::seed_from_u64(seed);
        let x = rand_scalar(&mut rng, k) + rand_scalar(&mut rng, k) * k.generator().unwrap_or_else(|| k.int(3));
        let y = rand_scalar(&mut rng, k);
        let (vx, vy) = (x.val(), y.val());
        let vs = (&x + &y).val();
        prop_assert!(vs >= min_val(&vx, &vy));
        if vx != vy {
            prop_assert_eq!(vs, min_val(&vx, &vy));
        }
        prop_assert_eq!((&x * &y).val(), vx.plus(&vy));
        if !y.is_zero() {
            prop_assert_eq!(&(&x / &y) * &y, x.clone());
        }
    }

    /// For `L = K(u)`, `u^m = b` totally ramified, `v(x) = v_p(N(x)) / m` with
    /// `N(x) = Res(z^m - b, X(z))`, computed over the base field.
    #[test]
    fn radical_valuation_matches_norm(
        coeffs in proptest::collection::vec((-30i64..30, 1i64..20), 1..5),
        pick in 0usize..3,
    ) {
        let (p, b, m) = [(2u64, q(1, 2), 3usize), (3, qi(3), 4), (5, q(1, 5), 2)][pick].clone();
        let cs: Vec<Q> = coeffs.iter().map(|&(n, d)| q(n, d)).take(m).collect();
        let k = FieldDesc::radical(p, b.clone(), m).unwrap();
        let x = k.radical_elem(cs.clone());
        let base = FieldDesc::padic(p).unwrap();
        let mut modulus = vec![Q::zero(); m + 1];
        modulus[0] = -b;
        modulus[m] = qi(1);
        let xz = Poly::from_rationals(&base, &cs);
        prop_assume!(!xz.is_zero());
        let norm = resultant(&Poly::from_rationals(&base, &modulus), &xz).as_rational().unwrap();
        let expect = qi(vp_rat(&norm, p).unwrap()) / qi(m as i64);
        prop_assert_eq!(x.val(), Valuation::Finite(expect));
    }

    /// Root valuations account for every root, and their sum is `v(c_0 / c_d)`.
    #[test]
    fn root_valuations_sum(seed in any::<u64>(), which in 0usize..4) {
        let k = &fields()[which];
        let mut rng = StdRng::seed_from_u64(seed);
        let p = rand_poly(&mut rng, k, 6);
        let classes = root_valuations(&p).unwrap();
        prop_assert_eq!(classes.iter().map(|c| c.multiplicity).sum::<usize>(), p.deg());
        if !p.coeff(0).is_zero() {
            let total: Q = classes
                .iter()
                .map(|c| c.valuation.finite().unwrap() * qi(c.multiplicity as i64))
                .sum();
            let expect = p.coeff(0).val_finite().unwrap() - p.lead().val_finite().unwrap();
            prop_assert_eq!(total, expect);
        }
    }

    #[test]
    fn poly_display_round_trips(seed in any::<u64>(), which in 0usize..4) {
        let k = &fields()[which];
        let mut rng = StdRng::seed_from_u64(seed);
        let p = rand_poly(&mut rng, k, 5);
        let back = nadyn::parse::parse_poly(k, &p.to_string()).unwrap();
        prop_assert_eq!(back, p);
    }
}
