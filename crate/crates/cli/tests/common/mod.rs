use std::path::PathBuf;

use exact_algebra::{qi, Monomial, Polynomial};
use polyvector::{pushforward_diffeo, superpotential, FormalDiffeo, Polyvector};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

/// `z ↦ z + O(z⁶)` at genus three, built from two exponentials.
pub fn scramble() -> FormalDiffeo {
    let v1 = Polyvector::term(Monomial(vec![0, 6, 0]), 0b001, qi(2)).add(&Polyvector::term(
        Monomial(vec![3, 0, 4]),
        0b010,
        qi(-1),
    ));
    let v2 = Polyvector::term(Monomial(vec![1, 2, 5]), 0b100, qi(3));
    FormalDiffeo::from_logs(3, vec![v1, v2]).unwrap()
}

/// `W` moved by [`scramble`], mod `F_12`.
pub fn perturbed_w() -> Polynomial {
    let w = Polyvector::function(&superpotential(3));
    pushforward_diffeo(&scramble(), &w, 12).unwrap().function_part()
}
