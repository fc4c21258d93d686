use exact_algebra::{ExtElement, Monomial};
use hochschild::Cochain;

use crate::Polyvector;

fn generator_index(mask: u16) -> Option<usize> {
    (mask.count_ones() == 1).then(|| mask.trailing_zeros() as usize)
}

/// `Σ_{j≥1} β^j(ξ, …, ξ)` on the generic element `ξ = Σ z_k ξ_k`, mod
/// `F_order`: only entries on single generators contribute, each with the
/// monomial recording which generators were fed in.
pub fn hkr(beta: &Cochain, order: u32) -> Polyvector {
    let n = beta.n();
    let mut out = Polyvector::zero(n);
    for (args, value) in beta.entries() {
        if args.is_empty() || args.len() as u32 >= order {
            continue;
        }
        add_diagonal(&mut out, n, args, value);
    }
    out
}

/// The same map for a structure given by its evaluation, over arities
/// `1..=max_arity` below `order`.
pub fn hkr_eval<F: FnMut(&[u16]) -> ExtElement>(n: usize, max_arity: usize, order: u32, mut f: F) -> Polyvector {
    let mut out = Polyvector::zero(n);
    for d in 1..=max_arity.min(order.saturating_sub(1) as usize) {
        for idx in hochschild::all_tuples(n, d) {
            if idx.iter().any(|&k| k as usize >= n) {
                continue;
            }
            let args: Vec<u16> = idx.iter().map(|&k| 1u16 << k).collect();
            let v = f(&args);
            add_diagonal(&mut out, n, &args, &v);
        }
    }
    out
}

fn add_diagonal(out: &mut Polyvector, n: usize, args: &[u16], value: &ExtElement) {
    let mut e = vec![0u32; n];
    for &a in args {
        match generator_index(a) {
            Some(k) => e[k] += 1,
            None => return,
        }
    }
    let m = Monomial(e);
    for (mask, c) in value.terms() {
        out.add_term(m.clone(), mask, c.clone());
    }
}
