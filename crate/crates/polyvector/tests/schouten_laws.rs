use exact_algebra::{qi, Monomial};
use polyvector::{schouten, Polyvector};
use proptest::prelude::*;

fn homogeneous(j: u32) -> impl Strategy<Value = Polyvector> {
    let masks: Vec<u16> = (0u16..8).filter(|s| s.count_ones() == j).collect();
    prop::collection::vec((prop::collection::vec(0u32..3, 3), prop::sample::select(masks), -3i64..4), 1..4).prop_map(
        |ts| {
            ts.into_iter().fold(Polyvector::zero(3), |acc, (e, s, c)| acc.add(&Polyvector::term(Monomial(e), s, qi(c))))
        },
    )
}

fn any_homogeneous() -> impl Strategy<Value = (Polyvector, i64)> {
    (0u32..4).prop_flat_map(|j| homogeneous(j).prop_map(move |p| (p, j as i64 - 1)))
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn antisymmetry((a, p) in any_homogeneous(), (b, q) in any_homogeneous()) {
        let lhs = schouten(&a, &b);
        let rhs = schouten(&b, &a).scale(&qi(-sign(p * q)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi((a, p) in any_homogeneous(), (b, q) in any_homogeneous(), (c, _) in any_homogeneous()) {
        let lhs = schouten(&a, &schouten(&b, &c));
        let rhs = schouten(&schouten(&a, &b), &c).add(&schouten(&b, &schouten(&a, &c)).scale(&qi(sign(p * q))));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_degree_adds((a, p) in any_homogeneous(), (b, q) in any_homogeneous()) {
        let r = schouten(&a, &b);
        if !r.is_zero() {
            prop_assert_eq!(r.shifted_degree(), Some((p + q) as i32));
        }
    }
}
