use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::fmt_coeff;
use crate::{AlgebraError, Q};

/// Which exterior algebra: `Λ(V)` with generators `ξ_k`, or `Λ(V∨)` with
/// generators `dz_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    V,
    VDual,
}

/// Indices of set bits, ascending.
pub fn mask_iter(mask: u16) -> impl Iterator<Item = usize> {
    (0..16).filter(move |i| mask & (1 << i) != 0)
}

/// `e_a ∧ e_b = sign · e_{a|b}`; `None` when the masks overlap.
pub fn mask_sign_merge(a: u16, b: u16) -> Option<i32> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0u32;
    for j in mask_iter(b) {
        swaps += (a >> (j + 1)).count_ones();
    }
    Some(if swaps % 2 == 0 { 1 } else { -1 })
}

/// Left contraction of the `j`-th generator from `e_mask`.
pub(crate) fn contract_one(j: usize, mask: u16) -> Option<(i32, u16)> {
    if mask & (1 << j) == 0 {
        return None;
    }
    let before = (mask & ((1u16 << j) - 1)).count_ones();
    Some((if before % 2 == 0 { 1 } else { -1 }, mask & !(1 << j)))
}

/// `ι_{ξ_T}(dz_U)` with `ι_{θ∧θ'} = ι_θ ∘ ι_θ'`: the highest generator of `T`
/// is contracted first.
pub(crate) fn contract_mask(t: u16, u: u16) -> Option<(i32, u16)> {
    let mut sign = 1;
    let mut cur = u;
    for j in (0..16).rev().filter(|j| t & (1 << j) != 0) {
        let (s, rest) = contract_one(j, cur)?;
        sign *= s;
        cur = rest;
    }
    Some((sign, cur))
}

/// Element of an exterior algebra on `n` generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtElement {
    side: Side,
    n: usize,
    terms: BTreeMap<u16, Q>,
}

impl ExtElement {
    pub fn zero(side: Side, n: usize) -> Self {
        ExtElement { side, n, terms: BTreeMap::new() }
    }

    pub fn basis(side: Side, n: usize, mask: u16) -> Self {
        Self::term(side, n, mask, Q::one())
    }

    pub fn term(side: Side, n: usize, mask: u16, c: Q) -> Self {
        let mut e = Self::zero(side, n);
        e.add_term(mask, c);
        e
    }

    /// Generator `ξ_{i+1}` or `dz_{i+1}`.
    pub fn generator(side: Side, n: usize, i: usize) -> Self {
        Self::basis(side, n, 1 << i)
    }

    pub fn scalar(side: Side, n: usize, c: Q) -> Self {
        Self::term(side, n, 0, c)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u16, &Q)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mask: u16) -> Q {
        self.terms.get(&mask).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, mask: u16, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mask).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add(&self, other: &ExtElement) -> ExtElement {
        assert_eq!((self.side, self.n), (other.side, other.n));
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    pub fn sub(&self, other: &ExtElement) -> ExtElement {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> ExtElement {
        if c.is_zero() {
            return Self::zero(self.side, self.n);
        }
        ExtElement { side: self.side, n: self.n, terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    /// Exterior degree if homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.count_ones());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Parity if homogeneous mod 2.
    pub fn parity(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.count_ones() % 2);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn part_of_degree(&self, d: u32) -> ExtElement {
        ExtElement {
            side: self.side,
            n: self.n,
            terms: self.terms.iter().filter(|(m, _)| m.count_ones() == d).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    pub fn wedge(&self, other: &ExtElement) -> Result<ExtElement, AlgebraError> {
        if self.side != other.side {
            return Err(AlgebraError::MixedSides);
        }
        if self.n != other.n {
            return Err(AlgebraError::Mismatch(self.n, other.n));
        }
        let mut r = Self::zero(self.side, self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some(s) = mask_sign_merge(*a, *b) {
                    let c = x * y;
                    r.add_term(a | b, if s > 0 { c } else { -c });
                }
            }
        }
        Ok(r)
    }

    /// `ι_θ(target)` for `θ ∈ Λ(V)` and `target ∈ Λ(V∨)`, with
    /// `ι_{θ∧θ'} = ι_θ ∘ ι_θ'` and `ι_{ξ_i}(dz_j) = δ_ij`.
    pub fn contract(theta: &ExtElement, target: &ExtElement) -> Result<ExtElement, AlgebraError> {
        if theta.side != Side::V || target.side != Side::VDual {
            return Err(AlgebraError::MixedSides);
        }
        let mut r = Self::zero(Side::VDual, target.n);
        for (t, x) in &theta.terms {
            for (u, y) in &target.terms {
                if let Some((s, rest)) = contract_mask(*t, *u) {
                    let c = x * y;
                    r.add_term(rest, if s > 0 { c } else { -c });
                }
            }
        }
        Ok(r)
    }

    /// Left contraction by the dual generator of index `k`, acting as a
    /// graded derivation: `ι_k(e_{s1}∧…) = Σ (−1)^{l−1} δ_{k,s_l} e_{…ŝ_l…}`.
    pub fn contract_generator(&self, k: usize) -> ExtElement {
        let mut r = Self::zero(self.side, self.n);
        for (m, c) in &self.terms {
            if let Some((s, rest)) = contract_one(k, *m) {
                r.add_term(rest, if s > 0 { c.clone() } else { -c.clone() });
            }
        }
        r
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let name = match self.side {
            Side::V => "xi",
            Side::VDual => "dz",
        };
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            s.push_str(&fmt_coeff(c, i == 0, *m != 0));
            if *m != 0 {
                let gens: Vec<String> = mask_iter(*m).map(|k| format!("{name}{}", k + 1)).collect();
                if !num_traits::Signed::abs(c).is_one() {
                    s.push('*');
                }
                s.push_str(&gens.join("^"));
            }
        }
        s
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qi;

    fn xi(i: usize) -> ExtElement {
        ExtElement::generator(Side::V, 3, i)
    }

    fn dz(i: usize) -> ExtElement {
        ExtElement::generator(Side::VDual, 3, i)
    }

    #[test]
    fn wedge_rules() {
        assert_eq!(xi(0).wedge(&xi(1)).unwrap(), ExtElement::basis(Side::V, 3, 0b011));
        assert!(xi(0).wedge(&xi(0)).unwrap().is_zero());
        assert_eq!(xi(1).wedge(&xi(0)).unwrap(), ExtElement::term(Side::V, 3, 0b011, qi(-1)));
        assert_eq!(xi(0).wedge(&dz(0)), Err(AlgebraError::MixedSides));
    }

    #[test]
    fn contraction_pairing() {
        let one = ExtElement::scalar(Side::VDual, 3, qi(1));
        assert_eq!(ExtElement::contract(&xi(0), &dz(0)).unwrap(), one);
        assert!(ExtElement::contract(&xi(0), &dz(1)).unwrap().is_zero());
        // ι_{ξ1∧ξ2}(dz1∧dz2) = ι_{ξ1}(ι_{ξ2}(dz1∧dz2)) = ι_{ξ1}(−dz1) = −1
        let t = xi(0).wedge(&xi(1)).unwrap();
        let u = dz(0).wedge(&dz(1)).unwrap();
        assert_eq!(ExtElement::contract(&t, &u).unwrap(), one.scale(&qi(-1)));
    }

    #[test]
    fn generator_contraction_is_derivation() {
        let e = ExtElement::basis(Side::V, 3, 0b111);
        assert_eq!(e.contract_generator(1), ExtElement::term(Side::V, 3, 0b101, qi(-1)));
        assert_eq!(e.contract_generator(2), ExtElement::basis(Side::V, 3, 0b011));
    }

    #[test]
    fn merge_sign_counts_transpositions() {
        assert_eq!(mask_sign_merge(0b010, 0b001), Some(-1));
        assert_eq!(mask_sign_merge(0b001, 0b110), Some(1));
        assert_eq!(mask_sign_merge(0b110, 0b001), Some(1));
        assert_eq!(mask_sign_merge(0b101, 0b010), Some(-1));
        assert_eq!(mask_sign_merge(0b1, 0b1), None);
    }
}
