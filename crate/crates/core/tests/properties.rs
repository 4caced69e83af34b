//! Randomized invariants across the crate.

use proptest::prelude::*;
use soergel_core::groebner::{GradedSeries, GroebnerBasis, LaurentPoly};
use soergel_core::partitions::{enumerate_box, Partition};
use soergel_core::polycore::{
    det_sum_expansion, det_sum_summands, Monomial, PolyMatrix, PolyRing, Polynomial, Rational, VariableId,
};
use soergel_core::qhomology as qh;
use soergel_core::schur;
use soergel_core::polycore::Family;

fn vars() -> Vec<VariableId> {
    vec![VariableId::x(1), VariableId::x(2), VariableId::y(1), VariableId::yp(1)]
}

prop_compose! {
    fn poly(max_terms: usize)(terms in prop::collection::vec(
        (prop::collection::vec(0u32..3, 4), -5i64..=5), 0..=max_terms)) -> Polynomial {
        let v = vars();
        Polynomial::from_terms(terms.into_iter().map(|(e, c)| {
            let m = Monomial::from_factors(v.iter().copied().zip(e).filter(|&(_, e)| e > 0));
            (m, Rational::from_integer(c.into()))
        }))
    }
}

fn matrix(n: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(poly(2), n * n).prop_map(move |entries| {
        let mut it = entries.into_iter();
        PolyMatrix::from_fn(n, n, |_, _| it.next().unwrap())
    })
}

fn partition_in_box(k: usize, l: usize) -> impl Strategy<Value = Partition> {
    let all = enumerate_box(k, l);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

prop_compose! {
    fn series()(num in prop::collection::vec((-3i64..6, -2i64..=2, -4i64..=4), 0..5),
                den in prop::collection::vec(1u32..5, 0..3)) -> GradedSeries {
        let mut p = LaurentPoly::zero();
        for (a, b, c) in num {
            p = &p + &LaurentPoly::monomial(c, 2 * a, b);
        }
        GradedSeries::new(p, den.into_iter().map(|d| 2 * d).collect())
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(4), b in poly(4), c in poly(4)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Polynomial::zero(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn serialization_round_trips(p in poly(6)) {
        prop_assert_eq!(Polynomial::from_json(&p.to_json()).unwrap(), p.clone());
        let text = p.to_string();
        let back: Polynomial = text.parse().unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn determinant_methods_agree(m in (1usize..=4).prop_flat_map(matrix)) {
        prop_assert_eq!(m.determinant().unwrap(), m.determinant_cofactor().unwrap());
    }

    #[test]
    fn determinant_of_sum((a, b) in (1usize..=3).prop_flat_map(|n| (matrix(n), matrix(n)))) {
        let n = a.rows() as u64;
        let count = det_sum_summands(&a, &b).unwrap().len() as u64;
        let central = (1..=n).fold(1u64, |acc, i| acc * (n + i) / i);
        prop_assert_eq!(count, central);
        prop_assert_eq!(det_sum_expansion(&a, &b).unwrap(), a.add(&b).unwrap().determinant().unwrap());
    }

    #[test]
    fn box_involutions((k, l, alpha) in (0usize..=5, 0usize..=5)
        .prop_flat_map(|(k, l)| (Just(k), Just(l), partition_in_box(k, l)))) {
        let c = alpha.complement(k, l).unwrap();
        prop_assert_eq!(c.complement(k, l).unwrap(), alpha.clone());
        prop_assert_eq!(alpha.conjugate().conjugate(), alpha.clone());
        prop_assert_eq!(alpha.weight() + c.weight(), (k * l) as u32);
        prop_assert!(c.conjugate().fits_box(l, k));
    }

    #[test]
    fn giambelli_forms_agree((n, alpha) in (1usize..=4)
        .prop_flat_map(|n| (Just(n), partition_in_box(n, 4)))) {
        let idx = alpha.to_multiindex();
        prop_assert_eq!(
            schur::schur_giambelli(&idx, n, Family::X),
            schur::schur_dual_giambelli(&idx, n, Family::X)
        );
    }

    #[test]
    fn series_field_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(a.normalized(), a.clone());
        prop_assert_eq!(GradedSeries::from_json(&a.to_json()).unwrap(), a.clone());
        // the text form is a function of the rational function
        prop_assert_eq!((&a * &GradedSeries::free(vec![2])).to_string(),
                        GradedSeries::new(a.numerator().clone(), [a.denominator(), &[2]].concat()).to_string());
    }

    #[test]
    fn quantum_binomial_symmetry(n in 0i64..10, m in 0i64..10) {
        prop_assume!(m <= n);
        prop_assert_eq!(qh::quantum_binomial(n, m), qh::quantum_binomial(n, n - m));
        prop_assert!(qh::q_pascal_check(n.max(1), m));
    }

    #[test]
    fn normal_forms_are_canonical(gens in prop::collection::vec(poly(3), 1..3), p in poly(5), q in poly(3)) {
        let ring = PolyRing::new(vars());
        let gb = GroebnerBasis::new(&ring, &gens, &Default::default()).unwrap();
        prop_assert!(gb.s_pairs_reduce_to_zero());
        for g in &gens {
            prop_assert!(gb.ideal_member(g).unwrap());
        }
        let nf = gb.normal_form(&p).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(gb.ideal_member(&(&p - &nf)).unwrap());
        // adding an ideal element does not change the normal form
        let shifted = &p + &(&q * &gens[0]);
        prop_assert_eq!(gb.normal_form(&shifted).unwrap(), nf);
    }
}
