use exact_algebra::{Monomial, Q};
use num_traits::One;

use crate::Polyvector;

/// Monomial basis of `(Symⁱ V∨ ⊗ Λʲ V)^G` for the three-variable diagonal
/// action at genus `g`, in monomial order then ascending `ξ`-mask.
pub fn invariant_basis(i: u32, j: u32, g: u32) -> Vec<Polyvector> {
    let masks: Vec<u16> = (0u16..8).filter(|s| s.count_ones() == j).collect();
    let mut out = Vec::new();
    for m in Monomial::all_of_degree(3, i) {
        for &s in &masks {
            if Polyvector::term_weight(&m, s, g) == [0, 0] {
                out.push(Polyvector::term(m.clone(), s, Q::one()));
            }
        }
    }
    out
}

/// Invariant `Λʲ` monomials of polynomial degree below `order` that satisfy
/// the degree `d` grading `2i + j − 3d − 3 ∈ (4g − 4)ℕ`.
pub fn graded_basis(d: i64, j: u32, g: u32, order: u32) -> Vec<Polyvector> {
    (0..order)
        .filter(|&i| {
            let v = 2 * i as i64 + j as i64 - 3 * d - 3;
            v >= 0 && v % (4 * g as i64 - 4) == 0
        })
        .flat_map(|i| invariant_basis(i, j, g))
        .collect()
}
