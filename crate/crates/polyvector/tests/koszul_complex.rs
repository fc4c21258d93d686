use exact_algebra::{qi, Monomial, Polynomial};
use polyvector::{graded_basis, koszul_solve, superpotential, Polyvector, PolyvectorError};
use proptest::prelude::*;

#[test]
fn graded_closed_bivectors_are_exact() {
    let (g, order) = (3, 20);
    let w = superpotential(g);
    // exact bivectors from graded trivectors, filtration ≥ 2g
    for (k, x) in
        graded_basis(0, 3, g, order).into_iter().filter(|x| x.filtration_order() >= Some(2 * g - 2)).enumerate()
    {
        let target = x.scale(&qi(k as i64 + 1)).contract_df(&w).truncate(order);
        if target.is_zero() {
            continue;
        }
        assert!(target.filtration_order().unwrap() >= 2 * g);
        assert!(target.check_grading(1, g).is_ok());
        let gamma = koszul_solve(&w, &target, order).unwrap();
        assert!(gamma.check_grading(0, g).is_ok());
        assert_eq!(gamma.contract_df(&w).truncate(order), target.neg());
    }
}

#[test]
fn every_closed_graded_bivector_is_hit() {
    // the space of closed graded bivectors mod F_order equals the image
    let (g, order) = (3, 16);
    let w = superpotential(g);
    for b in graded_basis(1, 2, g, order) {
        let closed = b.contract_df(&w).truncate(order + 2).is_zero();
        let res = koszul_solve(&w, &b, order);
        if closed {
            assert!(res.is_ok(), "{}", b.render());
        } else {
            assert!(matches!(res, Err(PolyvectorError::NotClosed { .. })));
        }
    }
}

#[test]
fn non_isolated_potential_reports_a_degree() {
    // W = z1² is singular along a plane; ξ2∧ξ3 is closed but not exact
    let w = Polynomial::from_terms(3, [(qi(1), vec![2, 0, 0])]);
    let t = Polyvector::term(Monomial(vec![0, 0, 0]), 0b110, qi(1));
    assert!(t.contract_df(&w).is_zero());
    assert!(matches!(koszul_solve(&w, &t, 6), Err(PolyvectorError::Unsolvable { degree: 0 })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn round_trip(terms in prop::collection::vec((prop::collection::vec(0u32..4, 3), -3i64..4), 1..4)) {
        let (g, order) = (2, 10);
        let w = superpotential(g);
        let x = terms.into_iter().fold(Polyvector::zero(3), |acc, (e, c)| acc.add(&Polyvector::term(Monomial(e), 0b111, qi(c))));
        let target = x.contract_df(&w).truncate(order);
        let gamma = koszul_solve(&w, &target, order).unwrap();
        prop_assert_eq!(gamma.contract_df(&w).truncate(order), target.neg());
    }
}
