//! Signs of permutations acting on graded symbols.
//!
//! `sigma[p]` is the index of the symbol placed at position `p`, so the
//! permuted word is `x_{σ(0)} … x_{σ(n−1)}`.

use exact_algebra::{qi, Q};

fn check(sigma: &[usize], degrees: &[i32]) {
    assert_eq!(sigma.len(), degrees.len(), "permutation and degree list differ in length");
    let mut seen = vec![false; sigma.len()];
    for &s in sigma {
        assert!(s < sigma.len() && !seen[s], "not a permutation: {sigma:?}");
        seen[s] = true;
    }
}

/// `ε(σ)` as ±1, defined by `x_0 ∧ … ∧ x_{n−1} = ε(σ) x_{σ(0)} ∧ … ∧ x_{σ(n−1)}`
/// in the free graded-commutative algebra.
pub fn koszul_sign_i(sigma: &[usize], degrees: &[i32]) -> i32 {
    check(sigma, degrees);
    let mut s = 1;
    for a in 0..sigma.len() {
        for b in a + 1..sigma.len() {
            if sigma[a] > sigma[b] && (degrees[sigma[a]] * degrees[sigma[b]]).rem_euclid(2) == 1 {
                s = -s;
            }
        }
    }
    s
}

pub fn sgn_i(sigma: &[usize]) -> i32 {
    let mut s = 1;
    for a in 0..sigma.len() {
        for b in a + 1..sigma.len() {
            if sigma[a] > sigma[b] {
                s = -s;
            }
        }
    }
    s
}

/// `χ(σ) = sgn(σ)·ε(σ)` as ±1.
pub fn chi_sign_i(sigma: &[usize], degrees: &[i32]) -> i32 {
    sgn_i(sigma) * koszul_sign_i(sigma, degrees)
}

pub fn koszul_sign(sigma: &[usize], degrees: &[i32]) -> Q {
    qi(koszul_sign_i(sigma, degrees) as i64)
}

pub fn chi_sign(sigma: &[usize], degrees: &[i32]) -> Q {
    qi(chi_sign_i(sigma, degrees) as i64)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn swaps() {
        assert_eq!(koszul_sign_i(&[0, 1], &[1, 1]), 1);
        assert_eq!(chi_sign_i(&[0, 1], &[1, 1]), 1);
        assert_eq!(koszul_sign_i(&[1, 0], &[1, 1]), -1);
        assert_eq!(chi_sign_i(&[1, 0], &[1, 1]), 1);
        assert_eq!(chi_sign_i(&[1, 0], &[0, 2]), -1);
        assert_eq!(chi_sign_i(&[1, 0], &[1, 2]), -1);
        // x y z ↦ z x y with x, z odd: z passes x (odd·odd) and y (even)
        assert_eq!(koszul_sign_i(&[2, 0, 1], &[1, 0, 1]), -1);
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(3)[5], vec![2, 1, 0]);
    }

    /// Sorting a word of graded symbols one transposition at a time.
    fn bubble(sigma: &[usize], degrees: &[i32]) -> i32 {
        let mut w: Vec<usize> = sigma.to_vec();
        let mut s = 1;
        for i in 0..w.len() {
            for j in 0..w.len() - 1 - i {
                if w[j] > w[j + 1] {
                    if (degrees[w[j]] * degrees[w[j + 1]]).rem_euclid(2) == 1 {
                        s = -s;
                    }
                    w.swap(j, j + 1);
                }
            }
        }
        s
    }

    proptest! {
        #[test]
        fn koszul_matches_bubble_sort(perm in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle(), degs in prop::collection::vec(-2i32..4, 5)) {
            prop_assert_eq!(koszul_sign_i(&perm, &degs), bubble(&perm, &degs));
        }

        #[test]
        fn chi_is_multiplicative(p in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(), q in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(), degs in prop::collection::vec(0i32..3, 4)) {
            // apply p then q to the permuted word
            let pq: Vec<usize> = q.iter().map(|&i| p[i]).collect();
            let permuted: Vec<i32> = p.iter().map(|&i| degs[i]).collect();
            prop_assert_eq!(chi_sign_i(&pq, &degs), chi_sign_i(&p, &degs) * chi_sign_i(&q, &permuted));
        }
    }
}
