use std::collections::{BTreeMap, HashMap};

use exact_algebra::{BElement, ExtElement, Monomial, Side, Q};
use matrix_factorization::{correction, retract_h, retract_i, retract_p, MFData};
use num_traits::Zero;

/// `b ↦ (−1)^{|b|−1} h(b)`.
pub(crate) fn edge_h(b: &BElement) -> BElement {
    retract_h(&b.signed_by(|k| k.parity() == 0))
}

/// `b ↦ (−1)^{|b|} (∂̃ − ∂)(b)`.
pub(crate) fn bivalent(b: &BElement, mf: &MFData) -> BElement {
    correction(&b.signed_by(|k| k.parity() == 1), mf)
}

/// `(b₂, b₁) ↦ (−1)^{|b₁|} b₂ b₁`.
pub(crate) fn trivalent(b2: &BElement, b1: &BElement) -> BElement {
    b2.compose(&b1.signed_by(|k| k.parity() == 1))
}

fn prune(b: BElement, budget: i64) -> BElement {
    b.filter(|k| (k.mono.degree() as i64) <= budget)
}

/// Sum over all ribbon trees, organised by sub-interval of the arguments.
///
/// A term whose polynomial degree exceeds the number of plain finite edges
/// left above it can never reach `p` with degree zero, since each bivalent
/// vertex adds at least as much degree as the finite edge after it removes.
/// Those terms are dropped as soon as they appear.
pub struct Transfer {
    mf: MFData,
    cache: HashMap<(usize, Vec<u16>), BElement>,
    f_cache: HashMap<Vec<u16>, BElement>,
}

impl Transfer {
    pub fn new(mf: MFData) -> Self {
        assert!(mf.gamma.iter().all(|g| g.filtration_order().map_or(true, |o| o >= 1)), "γ must vanish at the origin");
        Transfer { mf, cache: HashMap::new(), f_cache: HashMap::new() }
    }

    pub fn mf(&self) -> &MFData {
        &self.mf
    }

    pub fn n(&self) -> usize {
        self.mf.n()
    }

    /// Value at the top of the edge leaving `args`, inside a tree of arity
    /// `d`: leaf edges carry `(E_h V)^m i(a)`, internal ones
    /// `(E_h V)^m E_h x`.
    fn edge_value(&mut self, d: usize, args: &[u16]) -> BElement {
        let key = (d, args.to_vec());
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let budget = d as i64 - args.len() as i64 - 1;
        let n = self.n();
        let start = if args.len() == 1 {
            retract_i(&ExtElement::basis(Side::V, n, args[0]))
        } else {
            prune(edge_h(&self.node_value(d, args)), budget)
        };
        let mut total = start.clone();
        let mut cur = start;
        loop {
            cur = prune(edge_h(&bivalent(&cur, &self.mf)), budget);
            if cur.is_zero() {
                break;
            }
            total.add_assign(&cur);
        }
        self.cache.insert(key, total.clone());
        total
    }

    /// Sum of trivalent products over the root splits of `args`.
    fn node_value(&mut self, d: usize, args: &[u16]) -> BElement {
        let budget = d as i64 - args.len() as i64;
        let mut total = BElement::zero(self.n());
        for s in 1..args.len() {
            let left = self.edge_value(d, &args[..s]);
            if left.is_zero() {
                continue;
            }
            let right = self.edge_value(d, &args[s..]);
            if right.is_zero() {
                continue;
            }
            total.add_assign(&prune(trivalent(&left, &right), budget));
        }
        total
    }

    /// `μ^d(a_d, …, a₁)` on basis masks, `args[0] = a_d`.
    pub fn mu(&mut self, args: &[u16]) -> ExtElement {
        let n = self.n();
        match args.len() {
            0 => ExtElement::zero(Side::V, n),
            1 => ExtElement::zero(Side::V, n),
            d => retract_p(&self.node_value(d, args)),
        }
    }

    /// `f_d(a_d, …, a₁)`: the same tree sum as `μ^d` with the outgoing edge
    /// read like a finite edge, `b ↦ (−1)^{|b|−1} h(b)`. For `d = 1` the bare
    /// edge contributes `i`, so `f₁ = Σ_m (hD)^m i`.
    pub fn f(&mut self, args: &[u16]) -> BElement {
        if args.is_empty() {
            return BElement::zero(self.n());
        }
        self.f_edge(args)
    }

    /// Node value without degree pruning, for the morphism components whose
    /// output is not projected.
    fn node_value_unpruned(&mut self, args: &[u16]) -> BElement {
        let mut total = BElement::zero(self.n());
        for s in 1..args.len() {
            let left = self.f_edge(&args[..s]);
            let right = self.f_edge(&args[s..]);
            total.add_assign(&trivalent(&left, &right));
        }
        total
    }

    fn f_edge(&mut self, args: &[u16]) -> BElement {
        if let Some(v) = self.f_cache.get(args) {
            return v.clone();
        }
        let n = self.n();
        let start = if args.len() == 1 {
            retract_i(&ExtElement::basis(Side::V, n, args[0]))
        } else {
            edge_h(&self.node_value_unpruned(args))
        };
        let mut total = start.clone();
        let mut cur = start;
        loop {
            cur = edge_h(&bivalent(&cur, &self.mf));
            if cur.is_zero() {
                break;
            }
            total.add_assign(&cur);
        }
        self.f_cache.insert(args.to_vec(), total.clone());
        total
    }

    pub fn clear_cache(&mut self) {
        self.cache.clear();
        self.f_cache.clear();
    }
}

/// `Σ z_{i_d} ⋯ z_{i_1} μ^d(ξ_{i_d}, …, ξ_{i_1})`: the value of `μ^d` on the
/// generic element `ξ = Σ z_k ξ_k`, as a map from (monomial, `Λ(V)` mask) to
/// coefficient.
pub fn hkr_diagonal_terms<F: FnMut(&[u16]) -> ExtElement>(
    n: usize,
    d: usize,
    mut mu: F,
) -> BTreeMap<(Monomial, u16), Q> {
    let mut out: BTreeMap<(Monomial, u16), Q> = BTreeMap::new();
    let mut idx = vec![0usize; d];
    loop {
        let args: Vec<u16> = idx.iter().map(|&k| 1u16 << k).collect();
        let v = mu(&args);
        if !v.is_zero() {
            let mut e = vec![0u32; n];
            for &k in &idx {
                e[k] += 1;
            }
            let m = Monomial(e);
            for (mask, c) in v.terms() {
                let slot = out.entry((m.clone(), mask)).or_insert_with(Q::zero);
                *slot += c;
            }
        }
        let mut pos = 0;
        loop {
            if pos == d {
                out.retain(|_, c| !c.is_zero());
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
