use exact_algebra::{ExtElement, Side, Q};
use hochschild::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const N: usize = 2;

fn random_cochain(rng: &mut ChaCha8Rng, arity: usize, parity: u32) -> Cochain {
    let mut c = Cochain::zero(N);
    for t in all_tuples(N, arity) {
        for m in 0..(1u16 << N) {
            if Cochain::entry_parity(&t, m) == parity && rng.gen_bool(0.3) {
                let v: i64 = rng.gen_range(-3..=3);
                c.add_entry(t.clone(), &ExtElement::term(Side::V, N, m, Q::from_integer(v.into())));
            }
        }
    }
    c
}

fn sign(p: u32) -> Q {
    if p % 2 == 0 {
        Q::from_integer(1.into())
    } else {
        Q::from_integer((-1).into())
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn differential_squares_to_zero(seed: u64, arity in 0usize..3, p in 0u32..2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_cochain(&mut rng, arity, p);
        let d = hoch_diff(&phi, arity + 1).unwrap();
        prop_assert!(hoch_diff(&d, arity + 2).unwrap().is_zero());
    }

    #[test]
    fn differential_is_inner(seed: u64, arity in 1usize..3, p in 0u32..2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_cochain(&mut rng, arity, p);
        let d = hoch_diff(&phi, arity + 1).unwrap();
        prop_assert_eq!(d, gerstenhaber(&product_cochain(N), &phi, arity + 1).unwrap());
    }

    #[test]
    fn bracket_is_graded_antisymmetric(seed: u64, ia in 1usize..3, ib in 1usize..3, pa in 0u32..2, pb in 0u32..2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_cochain(&mut rng, ia, pa);
        let b = random_cochain(&mut rng, ib, pb);
        let ab = gerstenhaber(&a, &b, 4).unwrap();
        let ba = gerstenhaber(&b, &a, 4).unwrap();
        prop_assert!(ab.add(&ba.scale(&sign(pa * pb))).is_zero());
    }

    #[test]
    fn bracket_satisfies_jacobi(seed: u64, pa in 0u32..2, pb in 0u32..2, pc in 0u32..2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_cochain(&mut rng, 1, pa);
        let b = random_cochain(&mut rng, 2, pb);
        let c = random_cochain(&mut rng, 1, pc);
        let cap = 4;
        let br = |x: &Cochain, y: &Cochain| gerstenhaber(x, y, cap).unwrap();
        let lhs = br(&a, &br(&b, &c));
        let rhs = br(&br(&a, &b), &c).add(&br(&b, &br(&a, &c)).scale(&sign(pa * pb)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn differential_is_a_derivation_of_the_bracket(seed: u64, pa in 0u32..2, pb in 0u32..2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_cochain(&mut rng, 1, pa);
        let b = random_cochain(&mut rng, 2, pb);
        let lhs = hoch_diff(&gerstenhaber(&a, &b, 2).unwrap(), 3).unwrap();
        let da = hoch_diff(&a, 2).unwrap();
        let db = hoch_diff(&b, 3).unwrap();
        let rhs = gerstenhaber(&da, &b, 3).unwrap().add(&gerstenhaber(&a, &db, 3).unwrap().scale(&sign(pa)));
        prop_assert_eq!(lhs, rhs);
    }
}
