//! Randomized invariants over the exact-arithmetic kernels.

use num::BigInt;
use proptest::prelude::*;

use bsato::fracpoly::FracPoly;
use bsato::matrix::QMatrix;
use bsato::monomial::{lct, newton_exponents_dim2, roots_dim2};
use bsato::newton::{Expo, MonomialIdeal};
use bsato::{rat, Rat};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn arb_poly() -> impl Strategy<Value = FracPoly> {
    prop::collection::vec(((-6i64..=6, 1i64..=4), -5i64..=5), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .fold(FracPoly::zero(), |acc, ((p, q), c)| {
                acc.add(&FracPoly::term(rat(p, q), BigInt::from(c)))
            })
    })
}

fn arb_planar_ideal() -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec((0i64..=6, 0i64..=6), 1..5).prop_filter_map("proper ideal", |gens| {
        let gens: Vec<Expo> = gens
            .into_iter()
            .map(|(x, y)| vec![BigInt::from(x), BigInt::from(y)])
            .collect();
        MonomialIdeal::new(2, gens).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_laws(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.recip().unwrap(), Rat::one());
        }
    }

    #[test]
    fn rank_is_transpose_invariant(entries in prop::collection::vec(arb_rat(), 12)) {
        let m = QMatrix::new(3, 4, entries);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn fracpoly_ring_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.add(&q).sub(&q), p);
    }

    #[test]
    fn planar_roots_live_in_the_window(a in arb_planar_ideal()) {
        let roots = roots_dim2(&a).unwrap();
        let two = Rat::int(2);
        prop_assert!(roots.iter().all(|r| r > &Rat::zero() && r <= &two));
        prop_assert_eq!(roots.min().unwrap(), &lct(&a).unwrap());
    }

    #[test]
    fn lct_is_monotone_under_ideal_growth(a in arb_planar_ideal(), x in 0i64..=6, y in 0i64..=6) {
        // Adding a generator grows the ideal and weakens the singularity,
        // which can only raise the threshold.
        prop_assume!(x + y > 0);
        let mut gens = a.generators().to_vec();
        gens.push(vec![BigInt::from(x), BigInt::from(y)]);
        let bigger = MonomialIdeal::new(2, gens).unwrap();
        prop_assert!(lct(&bigger).unwrap() >= lct(&a).unwrap());
    }

    #[test]
    fn exponent_sets_are_symmetric(pts in prop::collection::vec((1i64..=6, 1i64..=6), 2..5)) {
        let support: Vec<Expo> = pts
            .into_iter()
            .map(|(x, y)| vec![BigInt::from(x), BigInt::from(y)])
            .collect();
        if let Ok(exps) = newton_exponents_dim2(&support) {
            let two = Rat::int(2);
            for e in exps.iter() {
                prop_assert!(exps.contains(&(two.clone() - e)), "mirror of {} missing", e);
            }
        }
    }
}
