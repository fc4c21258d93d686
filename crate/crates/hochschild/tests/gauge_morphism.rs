use exact_algebra::{q, ExtElement, Side, Q};
use hochschild::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const N: usize = 2;
const CAP: usize = 4;

/// Random element of shifted degree 0 with entries in arities 2 and 3.
fn random_gamma(rng: &mut ChaCha8Rng) -> Cochain {
    let mut c = Cochain::zero(N);
    for arity in 2..=3 {
        for t in all_tuples(N, arity) {
            for m in 0..(1u16 << N) {
                if Cochain::entry_parity(&t, m) == 0 && rng.gen_bool(0.25) {
                    let v: i64 = rng.gen_range(-2..=2);
                    c.add_entry(t.clone(), &ExtElement::term(Side::V, N, m, Q::from_integer(v.into())));
                }
            }
        }
    }
    c
}

fn assert_mc(alpha: &Cochain) {
    let mu = ainf_from_mc(alpha).unwrap();
    for d in 3..=CAP {
        for t in all_tuples(N, d) {
            assert!(ainf_residual(&mu, &t).is_zero(), "residual at {t:?}");
            assert!(stasheff_residual_standard(&mu, &t).is_zero(), "standard residual at {t:?}");
        }
    }
}

fn assert_morphism(gamma: &Cochain, source: &dyn AInfStructure, target: &dyn AInfStructure) {
    let phi = gauge_phi(gamma, CAP).unwrap();
    let f = |x: &[u16]| phi.phi(x).unwrap();
    for d in 2..=CAP {
        for t in all_tuples(N, d) {
            assert!(morphism_residual(&f, source, target, &t).is_zero(), "morphism equation at {t:?}");
        }
    }
}

#[test]
fn gauge_image_of_the_strict_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let gamma = random_gamma(&mut rng);
    let alpha = gauge_action(&gamma, &Cochain::zero(N), CAP).unwrap();
    assert!(!alpha.is_zero());
    assert_mc(&alpha);
    let target = ainf_from_mc(&alpha).unwrap();
    assert_morphism(&gamma, &Strict { n: N }, &target);
}

#[test]
fn gauge_image_of_a_deformed_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let start = gauge_action(&random_gamma(&mut rng), &Cochain::zero(N), CAP).unwrap();
    let gamma = random_gamma(&mut rng);
    let image = gauge_action(&gamma, &start, CAP).unwrap();
    assert_mc(&image);
    let source = ainf_from_mc(&start).unwrap();
    let target = ainf_from_mc(&image).unwrap();
    assert_morphism(&gamma, &source, &target);
}

#[test]
fn mc_elements_satisfy_the_bracket_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let alpha = gauge_action(&random_gamma(&mut rng), &Cochain::zero(N), CAP).unwrap();
    let d = hoch_diff(&alpha, CAP + 1).unwrap();
    let half = gerstenhaber(&alpha, &alpha, 2 * CAP - 1).unwrap().scale(&q(-1, 2));
    for t in all_tuples(N, 3).into_iter().chain(all_tuples(N, 4)) {
        assert_eq!(d.eval(&t), half.eval(&t));
    }
}
