use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::ext::{contract_mask, mask_iter, mask_sign_merge};
use crate::{AlgebraError, ExtElement, Monomial, Polynomial, Side, Q};

/// Index of a basis operator `z^mono dz_S ∧ ι_{ξ_T}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BKey {
    pub mono: Monomial,
    pub dz: u16,
    pub xi: u16,
}

impl BKey {
    /// `(|β| + |θ|) mod 2`.
    pub fn parity(&self) -> u32 {
        (self.dz.count_ones() + self.xi.count_ones()) % 2
    }

    /// The `2i − j + k` grading.
    pub fn aux_degree(&self) -> i64 {
        2 * self.mono.degree() as i64 - self.dz.count_ones() as i64 + self.xi.count_ones() as i64
    }
}

/// Square matrix over polynomials; entry `[r][c]` is the coefficient of
/// `dz_r` in the image of `dz_c`.
pub type PolyMatrix = Vec<Vec<Polynomial>>;

/// Element of `Ω(V) ⊗ Λ(V)` read as the operator `f β ∧ ι_θ(·)` on `Ω(V)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BElement {
    n: usize,
    terms: BTreeMap<BKey, Q>,
}

type Ordered = Vec<(i32, u16, u16)>;

/// `a_T c_S = Σ sign · c_X a_Y` where `a_j = ι_{ξ_j}`, `c_j = dz_j ∧ ·`, and
/// products over a mask run in ascending index order.
fn normal_order_raw(t: u16, s: u16) -> Ordered {
    if t == 0 {
        return vec![(1, s, 0)];
    }
    let top = 15 - t.leading_zeros() as usize;
    let rest = t & !(1 << top);
    let mut out = Vec::new();
    if s & (1 << top) != 0 {
        let before = (s & ((1u16 << top) - 1)).count_ones();
        let sign = if before % 2 == 0 { 1 } else { -1 };
        for (sg, x, y) in normal_order_raw(rest, s & !(1 << top)) {
            out.push((sign * sg, x, y));
        }
    }
    let pass = if s.count_ones() % 2 == 0 { 1 } else { -1 };
    for (sg, x, y) in normal_order_raw(rest, s) {
        out.push((pass * sg, x, y | (1 << top)));
    }
    out
}

const TABLE_MAX_N: usize = 5;

fn normal_order(n: usize, t: u16, s: u16) -> std::borrow::Cow<'static, [(i32, u16, u16)]> {
    static TABLES: OnceLock<Vec<OnceLock<Vec<Ordered>>>> = OnceLock::new();
    if n > TABLE_MAX_N {
        return std::borrow::Cow::Owned(normal_order_raw(t, s));
    }
    let tables = TABLES.get_or_init(|| (0..=TABLE_MAX_N).map(|_| OnceLock::new()).collect());
    let table = tables[n].get_or_init(|| {
        let dim = 1usize << n;
        let mut v = Vec::with_capacity(dim * dim);
        for t in 0..dim {
            for s in 0..dim {
                v.push(normal_order_raw(t as u16, s as u16));
            }
        }
        v
    });
    std::borrow::Cow::Borrowed(&table[((t as usize) << n) | s as usize])
}

impl BElement {
    pub fn zero(n: usize) -> Self {
        BElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(n, Monomial::one(n), 0, 0, Q::one())
    }

    pub fn basis(n: usize, mono: Monomial, dz: u16, xi: u16, c: Q) -> Self {
        let mut b = Self::zero(n);
        b.add_term(BKey { mono, dz, xi }, c);
        b
    }

    /// `f β ⊗ θ`.
    pub fn tensor(f: &Polynomial, beta: &ExtElement, theta: &ExtElement) -> Self {
        assert_eq!(beta.side(), Side::VDual);
        assert_eq!(theta.side(), Side::V);
        let n = f.n();
        let mut b = Self::zero(n);
        for (m, a) in f.terms() {
            for (s, x) in beta.terms() {
                for (t, y) in theta.terms() {
                    b.add_term(BKey { mono: m.clone(), dz: s, xi: t }, a * x * y);
                }
            }
        }
        b
    }

    /// `1 ⊗ θ`.
    pub fn from_theta(theta: &ExtElement) -> Self {
        let n = theta.n();
        Self::tensor(&Polynomial::one(n), &ExtElement::scalar(Side::VDual, n, Q::one()), theta)
    }

    /// The operator `β ∧ ·` for a polynomial one-form written as
    /// `Σ coeffs[k] dz_k`.
    pub fn wedge_one_form(coeffs: &[Polynomial]) -> Self {
        let n = coeffs.len();
        let mut b = Self::zero(n);
        for (k, g) in coeffs.iter().enumerate() {
            for (m, c) in g.terms() {
                b.add_term(BKey { mono: m.clone(), dz: 1 << k, xi: 0 }, c.clone());
            }
        }
        b
    }

    /// The operator `ι_v` for a vector field `Σ coeffs[k] ξ_k`.
    pub fn contraction_by_field(coeffs: &[Polynomial]) -> Self {
        let n = coeffs.len();
        let mut b = Self::zero(n);
        for (k, g) in coeffs.iter().enumerate() {
            for (m, c) in g.terms() {
                b.add_term(BKey { mono: m.clone(), dz: 0, xi: 1 << k }, c.clone());
            }
        }
        b
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

    pub fn terms(&self) -> impl Iterator<Item = (&BKey, &Q)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (BKey, Q)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, k: &BKey) -> Q {
        self.terms.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, k: BKey, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
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

    pub fn add_assign(&mut self, other: &BElement) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &BElement) -> BElement {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn sub(&self, other: &BElement) -> BElement {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> BElement {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        BElement { n: self.n, terms: self.terms.iter().map(|(k, a)| (k.clone(), a * c)).collect() }
    }

    /// Multiply every term by `(−1)^{f(key)}`.
    pub fn signed_by<F: Fn(&BKey) -> bool>(&self, negate: F) -> BElement {
        BElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), if negate(k) { -c.clone() } else { c.clone() }))
                .collect(),
        }
    }

    pub fn filter<F: Fn(&BKey) -> bool>(&self, keep: F) -> BElement {
        BElement {
            n: self.n,
            terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> BElement {
        let mut r = Self::zero(self.n);
        for (k, c) in &self.terms {
            for (m, a) in f.terms() {
                r.add_term(BKey { mono: k.mono.mul(m), dz: k.dz, xi: k.xi }, c * a);
            }
        }
        r
    }

    /// Operator composition `self ∘ other`.
    pub fn compose(&self, other: &BElement) -> BElement {
        assert_eq!(self.n, other.n, "variable count");
        let mut r = Self::zero(self.n);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let ordered = normal_order(self.n, k1.xi, k2.dz);
                if ordered.is_empty() {
                    continue;
                }
                let mono = k1.mono.mul(&k2.mono);
                let c = c1 * c2;
                for &(sg, x, y) in ordered.iter() {
                    let Some(s1) = mask_sign_merge(k1.dz, x) else { continue };
                    let Some(s2) = mask_sign_merge(y, k2.xi) else { continue };
                    let sign = sg * s1 * s2;
                    let key = BKey { mono: mono.clone(), dz: k1.dz | x, xi: y | k2.xi };
                    r.add_term(key, if sign > 0 { c.clone() } else { -c.clone() });
                }
            }
        }
        r
    }

    /// Apply the operator to a form `Σ f_U dz_U`, given as polynomial
    /// coefficients indexed by mask.
    pub fn apply(&self, form: &[Polynomial]) -> Vec<Polynomial> {
        let dim = 1usize << self.n;
        assert_eq!(form.len(), dim);
        let mut out = vec![Polynomial::zero(self.n); dim];
        for (k, c) in &self.terms {
            for (u, f) in form.iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                let Some((s1, rest)) = contract_mask(k.xi, u as u16) else { continue };
                let Some(s2) = mask_sign_merge(k.dz, rest) else { continue };
                let coeff = if s1 * s2 > 0 { c.clone() } else { -c.clone() };
                let term = Polynomial::monomial(self.n, k.mono.clone(), coeff).mul(f);
                let row = (k.dz | rest) as usize;
                out[row] = out[row].add(&term);
            }
        }
        out
    }

    /// Matrix in the `dz_U` basis of `Λ(V∨)`.
    pub fn to_matrix(&self) -> PolyMatrix {
        let dim = 1usize << self.n;
        let mut m = vec![vec![Polynomial::zero(self.n); dim]; dim];
        for col in 0..dim {
            let mut e = vec![Polynomial::zero(self.n); dim];
            e[col] = Polynomial::one(self.n);
            for (row, p) in self.apply(&e).into_iter().enumerate() {
                m[row][col] = p;
            }
        }
        m
    }

    /// Inverse of [`BElement::to_matrix`]. Columns are processed by
    /// increasing exterior degree; the operator `dz_S ∧ ι_{ξ_U}` is the only
    /// new basis operator that is nonzero on `dz_U`.
    pub fn from_matrix(n: usize, m: &PolyMatrix) -> Result<BElement, AlgebraError> {
        let dim = 1usize << n;
        if m.len() != dim || m.iter().any(|r| r.len() != dim) {
            return Err(AlgebraError::MatrixShape {
                rows: m.len(),
                cols: m.first().map_or(0, |r| r.len()),
                expected: dim,
            });
        }
        let mut cols: Vec<u16> = (0..dim as u16).collect();
        cols.sort_by_key(|u| (u.count_ones(), *u));
        let mut b = BElement::zero(n);
        for u in cols {
            let mut e = vec![Polynomial::zero(n); dim];
            e[u as usize] = Polynomial::one(n);
            let current = b.apply(&e);
            let (sg, _) = contract_mask(u, u).expect("self contraction");
            for s in 0..dim {
                let resid = m[s][u as usize].sub(&current[s]);
                for (mono, c) in resid.terms() {
                    let c = if sg > 0 { c.clone() } else { -c.clone() };
                    b.add_term(BKey { mono: mono.clone(), dz: s as u16, xi: u }, c);
                }
            }
        }
        Ok(b)
    }

    /// Highest polynomial degree among the terms.
    pub fn max_poly_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.mono.degree()).max()
    }

    /// The `Λ(V)` value of the constant, `β = 1` part: the projection `p`.
    pub fn scalar_part(&self) -> ExtElement {
        let one = Monomial::one(self.n);
        let mut e = ExtElement::zero(Side::V, self.n);
        for (k, c) in &self.terms {
            if k.dz == 0 && k.mono == one {
                e.add_term(k.xi, c.clone());
            }
        }
        e
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let f = Polynomial::monomial(self.n, k.mono.clone(), c.clone()).render();
                let beta: Vec<String> = mask_iter(k.dz).map(|i| format!("dz{}", i + 1)).collect();
                let theta: Vec<String> = mask_iter(k.xi).map(|i| format!("xi{}", i + 1)).collect();
                let beta = if beta.is_empty() { "1".into() } else { beta.join("^") };
                let theta = if theta.is_empty() { "1".into() } else { theta.join("^") };
                format!("({f})*{beta} (x) {theta}")
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for BElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Product of polynomial matrices.
pub fn matmul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let dim = a.len();
    let n = a[0][0].n();
    let mut out = vec![vec![Polynomial::zero(n); dim]; dim];
    for i in 0..dim {
        for k in 0..dim {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..dim {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
            }
        }
    }
    out
}
