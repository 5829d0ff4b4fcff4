use gyrofid::boost::{boost, star};
use gyrofid::fidelity::{fidelity_boost_closed, fidelity_mobius_closed, fidelity_spectral, NormalizedBoost};
use gyrofid::gyrogroup::{double, einstein_add, BallVector};
use gyrofid::mobius::{mobius, mobius_from_double_boost};
use proptest::prelude::*;

fn ball(n: usize) -> impl Strategy<Value = BallVector> {
    prop::collection::vec(-1.0f64..1.0, n).prop_map(|c| {
        let r = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        let c = if r > 0.9 { c.iter().map(|x| x * 0.9 / r).collect() } else { c };
        BallVector::new(c).unwrap()
    })
}

proptest! {
    #[test]
    fn star_product_composes_velocities(u in ball(4), v in ball(4)) {
        let lhs = star(&boost(&u), &boost(&v)).unwrap();
        let rhs = boost(&einstein_add(&u, &v).unwrap());
        prop_assert!(lhs.max_abs_diff(rhs.matrix()) <= 1e-9);
    }

    #[test]
    fn mobius_fidelity_matches_spectral(u in ball(5), v in ball(5)) {
        let f = fidelity_spectral(mobius(5, &u).unwrap().matrix(), mobius(5, &v).unwrap().matrix()).unwrap();
        prop_assert!((fidelity_mobius_closed(&u, &v, 5).unwrap() - f).abs() <= 1e-9);
    }

    #[test]
    fn mobius_is_normalized_double_boost(v in ball(3)) {
        let a = mobius(3, &v).unwrap();
        let b = mobius_from_double_boost(3, &v).unwrap();
        prop_assert!(a.matrix().max_abs_diff(b.matrix()) <= 1e-10);
    }

    #[test]
    fn boost_fidelity_of_doubles_is_mobius_fidelity(u in ball(3), v in ball(3)) {
        let du = double(&u).unwrap();
        let dv = double(&v).unwrap();
        let spectral = fidelity_spectral(NormalizedBoost::new(&du).matrix(), NormalizedBoost::new(&dv).matrix()).unwrap();
        prop_assert!((fidelity_boost_closed(&du, &dv, 3).unwrap() - spectral).abs() <= 1e-9);
        prop_assert!((fidelity_mobius_closed(&u, &v, 3).unwrap() - spectral).abs() <= 1e-9);
    }
}
