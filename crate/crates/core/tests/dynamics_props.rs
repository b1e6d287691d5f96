//! Invariants of the ball dynamics, the profiles and the Green function.

mod common;

use common::{rand_point, rand_poly, rand_scalar};
use nadyn::berkpoly::{
    image_point, insep_degree, local_degree, segment_profile, wf_value, wild_bound,
};
use nadyn::exactval::FieldDesc;
use nadyn::greenlyap::{green_value, GreenResult, DEFAULT_MAX_STEPS};
use nadyn::polynewt::ball_degree;
use nadyn::rat::qi;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn fields() -> Vec<FieldDesc> {
    vec![
        FieldDesc::padic(2).unwrap(),
        FieldDesc::padic(3).unwrap(),
        FieldDesc::laurent(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn local_degree_is_multiplicative(seed in any::<u64>(), which in 0usize..3) {
        let k = &fields()[which];
        let mut rng = StdRng::seed_from_u64(seed);
        let (p, q) = (rand_poly(&mut rng, k, 3), rand_poly(&mut rng, k, 3));
        let x = rand_point(&mut rng, k);
        let qx = image_point(&q, &x).unwrap();
        prop_assert_eq!(
            local_degree(&p.compose(&q), &x).unwrap(),
            local_degree(&p, &qx).unwrap() * local_degree(&q, &x).unwrap()
        );
        prop_assert_eq!(local_degree(&p, &x).unwrap(), ball_degree(&p, &x.center, &x.rho).unwrap());
    }

    /// `0 <= wf <= -log|wdeg|`, and `wf > 0` only at inseparable points.
    #[test]
    fn wf_is_bounded_by_inseparability(seed in any::<u64>(), which in 0usize..3) {
        let k = &fields()[which];
        let mut rng = StdRng::seed_from_u64(seed);
        let p = rand_poly(&mut rng, k, 4);
        let x = rand_point(&mut rng, k);
        let wf = wf_value(&p, &x).unwrap();
        let wdeg = insep_degree(&p, &x).unwrap();
        prop_assert!(!wf.is_negative());
        prop_assert!(wf <= wild_bound(k, wdeg));
        if wdeg == 1 {
            prop_assert!(wf.is_zero());
        }
    }

    /// Adjacent pieces agree at their shared breakpoint.
    #[test]
    fn profiles_are_continuous(seed in any::<u64>(), which in 0usize..3) {
        let k = &fields()[which];
        let mut rng = StdRng::seed_from_u64(seed);
        let p = rand_poly(&mut rng, k, 5);
        let a = rand_scalar(&mut rng, k);
        let prof = segment_profile(&p, &a, &qi(-4), &qi(5)).unwrap();
        prop_assert_eq!(prof.pieces.first().unwrap().from.clone(), qi(-4));
        prop_assert_eq!(prof.pieces.last().unwrap().to.clone(), qi(5));
        for w in prof.pieces.windows(2) {
            let b = &w[0].to;
            prop_assert_eq!(b, &w[1].from);
            prop_assert_eq!(w[0].logsd.at(b), w[1].logsd.at(b));
            prop_assert_eq!(w[0].logdiam_img.at(b), w[1].logdiam_img.at(b));
            prop_assert_eq!(w[0].wf.at(b), w[1].wf.at(b));
        }
    }

    #[test]
    fn green_functional_equation(seed in any::<u64>(), which in 0usize..3) {
        let k = &fields()[which];
        let mut rng = StdRng::seed_from_u64(seed);
        let p = rand_poly(&mut rng, k, 3);
        prop_assume!(p.deg() >= 2);
        let z = rand_scalar(&mut rng, k);
        let g = green_value(&p, &z, DEFAULT_MAX_STEPS).unwrap();
        let gp = green_value(&p, &p.eval(&z), DEFAULT_MAX_STEPS).unwrap();
        match (g.value(), gp.value()) {
            (Some(g), Some(gp)) => {
                prop_assert!(!g.is_negative());
                prop_assert_eq!(gp, qi(p.deg() as i64) * g);
            }
            _ => {
                let undetermined = |r: &GreenResult| matches!(r, GreenResult::Undetermined { .. });
                prop_assert!(undetermined(&g) || undetermined(&gp));
            }
        }
    }
}

#[test]
fn tame_fields_have_no_wild_points() {
    let mut rng = StdRng::seed_from_u64(11);
    for k in [FieldDesc::padic(7).unwrap(), FieldDesc::laurent()] {
        for _ in 0..50 {
            let p = rand_poly(&mut rng, &k, 5);
            let x = rand_point(&mut rng, &k);
            assert!(wf_value(&p, &x).unwrap().is_zero(), "{p} at {x}");
        }
    }
}
