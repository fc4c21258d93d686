use exact_algebra::{add_weights, mask_weight, ExtElement, Side};
use hochschild::AInfStructure;
use matrix_factorization::MFData;
use proptest::prelude::*;
use transfer::*;

/// Totals `b₀ + b₁` of bivalent vertices with `b₀ + (2g − 1)b₁ = d − 2`:
/// `b₀` vertices use the quadratic part of `γ`, `b₁` the degree-`2g` part.
fn totals(g: usize, d: usize) -> Vec<usize> {
    (0..=(d - 2) / (2 * g - 1)).map(|b1| d - 2 - (2 * g - 1) * b1 + b1).collect()
}

fn tree_sum(mf: &MFData, args: &[u16]) -> ExtElement {
    let d = args.len();
    let g = mf.genus.unwrap() as usize;
    let mut acc = ExtElement::zero(Side::V, 3);
    for t in enumerate_trees(d, &totals(g, d), 3) {
        acc = acc.add(&tree_evaluate(&t, args, mf).unwrap());
    }
    acc
}

#[test]
fn one_tree_carries_the_cubic_term() {
    let mf = MFData::for_genus(3);
    let contributing: Vec<String> = enumerate_trees(3, &totals(3, 3), 3)
        .iter()
        .filter(|t| !tree_evaluate(t, &[1, 2, 4], &mf).unwrap().is_zero())
        .map(|t| t.render())
        .collect();
    assert_eq!(contributing, vec!["(x (x x*))"]);
    let total = tree_sum(&mf, &[1, 2, 4]);
    assert_eq!(total, Transferred::new(mf).mu(&[1, 2, 4]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn trees_agree_with_the_interval_recursion(args in proptest::collection::vec(0u16..8, 2..6)) {
        let mf = MFData::for_genus(2);
        let mu = Transferred::new(mf.clone());
        prop_assert_eq!(tree_sum(&mf, &args), mu.mu(&args));
    }

    #[test]
    fn outputs_are_weight_additive(args in proptest::collection::vec(0u16..8, 2..7)) {
        let g = 3;
        let mu = Transferred::for_genus(g);
        let w = args.iter().fold([0, 0], |acc, &a| add_weights(acc, mask_weight(Side::V, a, g), g));
        for (m, _) in mu.mu(&args).terms() {
            prop_assert_eq!(mask_weight(Side::V, m, g), w);
        }
    }

    #[test]
    fn evaluation_order_does_not_matter(args in proptest::collection::vec(0u16..8, 3..6)) {
        let a = Transferred::for_genus(3);
        let b = Transferred::for_genus(3);
        // warm one cache with a sub-tuple first
        let _ = b.mu(&args[1..]);
        prop_assert_eq!(a.mu(&args), b.mu(&args));
    }
}
