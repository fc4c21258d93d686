use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rational::fmt_coeff;
use crate::{AlgebraError, Monomial, Q};

/// Sparse polynomial in `n` commuting variables `z1..zn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Q>,
}

/// A result together with whether terms above the cap were dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncated<T> {
    pub value: T,
    pub truncated: bool,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Q) -> Self {
        Self::monomial(n, Monomial::one(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Q::one())
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(n, Monomial::var(n, i), Q::one())
    }

    pub fn monomial(n: usize, m: Monomial, c: Q) -> Self {
        debug_assert_eq!(m.n(), n);
        let mut p = Self::zero(n);
        p.add_term(m, c);
        p
    }

    /// Build from `(coefficient, exponents)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (Q, Vec<u32>)>>(n: usize, it: I) -> Self {
        let mut p = Self::zero(n);
        for (c, e) in it {
            assert_eq!(e.len(), n, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Minimum total degree of a stored term; `None` stands for infinity.
    pub fn filtration_order(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Constant term.
    pub fn constant_term(&self) -> Q {
        self.coeff(&Monomial::one(self.n))
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        self.filter(|m| m.degree() == d)
    }

    pub fn filter<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Drop terms of total degree above `order`.
    pub fn truncate(&self, order: u32) -> Truncated<Polynomial> {
        let value = self.filter(|m| m.degree() <= order);
        let truncated = value.len() != self.len();
        Truncated { value, truncated }
    }

    fn check(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if self.n != other.n {
            Err(AlgebraError::Mismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.n, other.n, "variable count");
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Untruncated product.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.n, other.n, "variable count");
        let mut r = Self::zero(self.n);
        for (m, a) in &self.terms {
            for (k, b) in &other.terms {
                r.add_term(m.mul(k), a * b);
            }
        }
        r
    }

    /// Product with every term above `order` dropped.
    pub fn mul_trunc(&self, other: &Polynomial, order: u32) -> Result<Truncated<Polynomial>, AlgebraError> {
        self.check(other)?;
        let mut r = Self::zero(self.n);
        let mut truncated = false;
        for (m, a) in &self.terms {
            for (k, b) in &other.terms {
                let mk = m.mul(k);
                if mk.degree() > order {
                    truncated = true;
                } else {
                    r.add_term(mk, a * b);
                }
            }
        }
        Ok(Truncated { value: r, truncated })
    }

    pub fn pow_trunc(&self, e: u32, order: u32) -> Truncated<Polynomial> {
        let mut acc = Truncated { value: Self::one(self.n).truncate(order).value, truncated: false };
        for _ in 0..e {
            let t = acc.value.mul_trunc(self, order).expect("same ring");
            acc = Truncated { value: t.value, truncated: acc.truncated || t.truncated };
        }
        acc
    }

    /// Formal partial derivative with respect to `z_{i+1}` (0-based `i`).
    pub fn partial(&self, i: usize) -> Result<Polynomial, AlgebraError> {
        if i >= self.n {
            return Err(AlgebraError::IndexOutOfRange { index: i, n: self.n });
        }
        let mut r = Self::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut k = m.clone();
            k.0[i] -= 1;
            r.add_term(k, c * Q::from_integer(e.into()));
        }
        Ok(r)
    }

    /// Substitute `z_i ↦ images[i]`, keeping degrees up to `order`.
    pub fn compose(&self, images: &[Polynomial], order: u32) -> Truncated<Polynomial> {
        assert_eq!(images.len(), self.n);
        let m = images[0].n;
        let mut r = Polynomial::zero(m);
        let mut truncated = false;
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|_| vec![Polynomial::one(m)]).collect::<Vec<_>>();
        for (mono, c) in &self.terms {
            let mut term = Polynomial::constant(m, c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let last = powers[i].last().unwrap().clone();
                    let t = last.mul_trunc(&images[i], order).expect("same ring");
                    truncated |= t.truncated;
                    powers[i].push(t.value);
                }
                let t = term.mul_trunc(&powers[i][e as usize], order).expect("same ring");
                truncated |= t.truncated;
                term = t.value;
            }
            r = r.add(&term);
        }
        Truncated { value: r, truncated }
    }

    /// Render with variable names `z1, z2, ...`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let bare = m.degree() > 0;
            s.push_str(&fmt_coeff(c, i == 0, bare));
            let mut factors = Vec::new();
            for (k, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("z{}", k + 1)),
                    _ => factors.push(format!("z{}^{}", k + 1, e)),
                }
            }
            if !factors.is_empty() {
                let c_abs_one = num_traits::Signed::abs(c).is_one();
                if !c_abs_one {
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qi};

    fn z(i: usize) -> Polynomial {
        Polynomial::var(3, i)
    }

    #[test]
    fn monomial_products() {
        assert_eq!(z(0).mul(&z(1)), Polynomial::from_terms(3, [(qi(1), vec![1, 1, 0])]));
        assert!(z(0).mul(&Polynomial::zero(3)).is_zero());
        let s = z(0).add(&z(1));
        let sq = s.mul(&s);
        let want = Polynomial::from_terms(3, [(qi(1), vec![2, 0, 0]), (qi(2), vec![1, 1, 0]), (qi(1), vec![0, 2, 0])]);
        assert_eq!(sq, want);
    }

    #[test]
    fn partial_of_w_genus_three() {
        let w = Polynomial::from_terms(
            3,
            [(qi(-1), vec![1, 1, 1]), (qi(1), vec![7, 0, 0]), (qi(1), vec![0, 7, 0]), (qi(1), vec![0, 0, 7])],
        );
        let d3 = w.partial(2).unwrap();
        let want = Polynomial::from_terms(3, [(qi(-1), vec![1, 1, 0]), (qi(7), vec![0, 0, 6])]);
        assert_eq!(d3, want);
        assert!(z(1).partial(0).unwrap().is_zero());
        let p = Polynomial::from_terms(3, [(qi(1), vec![5, 0, 0])]);
        assert_eq!(p.partial(0).unwrap(), Polynomial::from_terms(3, [(qi(5), vec![4, 0, 0])]));
        assert!(matches!(p.partial(3), Err(AlgebraError::IndexOutOfRange { .. })));
    }

    #[test]
    fn truncation_is_flagged() {
        let p = z(0).add(&z(1));
        let t = p.mul_trunc(&p, 1).unwrap();
        assert!(t.truncated);
        assert!(t.value.is_zero());
        let t = p.mul_trunc(&p, 2).unwrap();
        assert!(!t.truncated);
        assert!(Polynomial::zero(2).mul_trunc(&p, 2).is_err());
    }

    #[test]
    fn canonical_order_and_render() {
        let p = Polynomial::from_terms(3, [(qi(1), vec![0, 0, 7]), (q(-1, 3), vec![0, 1, 1]), (qi(2), vec![0, 0, 0])]);
        assert_eq!(p.render(), "2 - 1/3*z2*z3 + z3^7");
        assert_eq!(p.filtration_order(), Some(0));
        assert_eq!(Polynomial::zero(3).filtration_order(), None);
    }

    #[test]
    fn compose_substitutes() {
        // z1 -> z1 + z2^2 applied to z1^2
        let p = z(0).mul(&z(0));
        let imgs = vec![z(0).add(&z(1).mul(&z(1))), z(1), z(2)];
        let r = p.compose(&imgs, 3);
        assert!(r.truncated);
        assert_eq!(r.value, Polynomial::from_terms(3, [(qi(1), vec![2, 0, 0]), (qi(2), vec![1, 2, 0])]));
    }
}
