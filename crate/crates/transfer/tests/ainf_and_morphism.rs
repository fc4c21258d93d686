use exact_algebra::{BKey, Side};
use hochschild::{ainf_residual, stasheff_residual_standard, AInfStructure};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use transfer::*;

fn tuples(seed: u64, d: usize, count: usize) -> Vec<Vec<u16>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (0..d).map(|_| rng.gen_range(0..8u16)).collect()).collect()
}

#[test]
fn transferred_structure_is_ainf() {
    for g in [2, 3] {
        let mu = Transferred::for_genus(g);
        for d in 3..=(2 * g as usize + 2).min(7) {
            for t in tuples(d as u64, d, 25) {
                assert!(ainf_residual(&mu, &t).is_zero(), "g={g} {t:?}");
                assert!(stasheff_residual_standard(&mu, &t).is_zero(), "g={g} {t:?}");
            }
        }
    }
}

#[test]
fn low_arities() {
    let mu = Transferred::for_genus(3);
    assert!(mu.mu(&[3]).is_zero());
    assert_eq!(mu.mu(&[1, 2]), hochschild::Strict { n: 3 }.mu(&[1, 2]));
    assert_eq!(mu.provenance(), hochschild::Provenance::Transferred);
}

#[test]
fn morphism_equations() {
    let t = Transferred::for_genus(2);
    for d in 1..=5 {
        for args in tuples(100 + d as u64, d, 12) {
            assert!(morphism_residual(&t, &args).is_zero(), "{args:?}");
        }
    }
}

#[test]
fn first_component_is_i_plus_lower_filtration() {
    let t = Transferred::for_genus(3);
    for theta in 0..8u16 {
        let f1 = t.f(&[theta]);
        let r = theta.count_ones();
        for (k, c) in f1.terms() {
            let k: &BKey = k;
            assert!(k.xi.count_ones() <= r);
            if k.xi.count_ones() == r {
                assert_eq!((k.mono.degree(), k.dz, k.xi), (0, 0, theta));
                assert_eq!(*c, exact_algebra::qi(1));
            }
        }
        assert_eq!(matrix_factorization::retract_p(&f1), exact_algebra::ExtElement::basis(Side::V, 3, theta));
    }
}

#[test]
fn cap_is_enforced() {
    let t = Transferred::for_genus(3).with_cap(4);
    assert!(t.try_mu(&[1, 2, 4, 1]).is_ok());
    assert_eq!(t.try_mu(&[1; 5]), Err(TransferError::CapExceeded { arity: 5, cap: 4 }));
    assert!(t.try_f(&[1; 5]).is_err());
}
