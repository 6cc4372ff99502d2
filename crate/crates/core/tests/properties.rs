use gschur::gmodule::{schur_d, schur_u, BasisElement, FormalVector};
use gschur::instances::InstanceName;
use gschur::polyring::{rat, Monomial, MultiPoly, Rational};
use proptest::prelude::*;

const NVARS: usize = 3;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, NVARS), rational()), 0..5).prop_map(|terms| {
        let mut p = MultiPoly::zero(NVARS);
        for (e, c) in terms {
            p.add_term(Monomial::new(e), c);
        }
        p
    })
}

fn young_vector() -> impl Strategy<Value = FormalVector> {
    let young = InstanceName::Young.build();
    let basis: Vec<BasisElement> = (0..=3).flat_map(|k| young.level(k)).collect();
    prop::collection::vec((prop::sample::select(basis), rational()), 1..4).prop_map(FormalVector::scalar)
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &MultiPoly::one(NVARS), p.clone());
        prop_assert_eq!(&-&p + &p, MultiPoly::zero(NVARS));
    }

    #[test]
    fn symmetric_times_symmetric(p in poly()) {
        let mut sym = MultiPoly::zero(NVARS);
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            sym.add_assign_ref(&p.embed(NVARS, &perm));
        }
        prop_assert!(sym.is_symmetric());
        prop_assert!((&sym * &sym).is_symmetric());
    }

    #[test]
    fn scaling_is_linear(p in poly(), c in rational(), d in rational()) {
        let lhs = p.scale(&(c.clone() + d.clone()));
        prop_assert_eq!(lhs, &p.scale(&c) + &p.scale(&d));
    }

    #[test]
    fn schur_d_is_linear(v in young_vector(), w in young_vector(), c in rational()) {
        let young = InstanceName::Young.build();
        let empty = BasisElement::partition(&[]);
        let combo = v.add(&w.scale(&c));
        let lhs = schur_d(young.as_ref(), &combo, &empty, 2);
        let rhs = &schur_d(young.as_ref(), &v, &empty, 2) + &schur_d(young.as_ref(), &w, &empty, 2).scale(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn schur_u_is_linear(v in young_vector(), w in young_vector(), c in rational()) {
        let young = InstanceName::Young.build();
        let mu = BasisElement::partition(&[2, 1]);
        let combo = v.add(&w.scale(&c));
        let lhs = schur_u(young.as_ref(), &mu, &combo, 2);
        let rhs = &schur_u(young.as_ref(), &mu, &v, 2) + &schur_u(young.as_ref(), &mu, &w, 2).scale(&c);
        prop_assert_eq!(lhs, rhs);
    }
}
