use std::collections::BTreeMap;

use exact_algebra::json::{var_names, PolynomialJson, TermJson};
use exact_algebra::{
    add_weights, mask_iter, mask_sign_merge, mask_weight, mono_weight, parse_rational, rational_string, Monomial,
    Polynomial, Side, Weight, MAX_VARS, Q,
};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::PolyvectorError;

/// Element of `ℂ[[V∨]] ⊗ Λ(V)`: sparse map from (monomial in `z`, subset of
/// the `ξ_k`) to a coefficient. The `Λʲ` part has shifted degree `j − 1`.
///
/// Truncation is always "mod `F_order`": terms of polynomial degree
/// `≥ order` are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polyvector {
    n: usize,
    terms: BTreeMap<(Monomial, u16), Q>,
}

fn sign_q(s: i32) -> Q {
    if s < 0 {
        -Q::one()
    } else {
        Q::one()
    }
}

/// `∂_i z^m` as (coefficient, monomial).
fn mono_partial(m: &Monomial, i: usize) -> Option<(u32, Monomial)> {
    let e = m.0[i];
    if e == 0 {
        return None;
    }
    let mut out = m.clone();
    out.0[i] -= 1;
    Some((e, out))
}

impl Polyvector {
    pub fn zero(n: usize) -> Self {
        Polyvector { n, terms: BTreeMap::new() }
    }

    pub fn term(m: Monomial, mask: u16, c: Q) -> Self {
        let mut p = Polyvector::zero(m.n());
        p.add_term(m, mask, c);
        p
    }

    /// `ξ_i` with constant coefficient.
    pub fn xi(n: usize, i: usize) -> Self {
        Polyvector::term(Monomial::one(n), 1 << i, Q::one())
    }

    /// `f ⊗ ξ_S`.
    pub fn from_poly(f: &Polynomial, mask: u16) -> Self {
        let mut p = Polyvector::zero(f.n());
        for (m, c) in f.terms() {
            p.add_term(m.clone(), mask, c.clone());
        }
        p
    }

    pub fn function(f: &Polynomial) -> Self {
        Polyvector::from_poly(f, 0)
    }

    /// `Σ_i f_i ξ_i`.
    pub fn vector_field(coeffs: &[Polynomial]) -> Self {
        let n = coeffs.len();
        let mut p = Polyvector::zero(n);
        for (i, f) in coeffs.iter().enumerate() {
            p = p.add(&Polyvector::from_poly(f, 1 << i));
        }
        p
    }

    /// The Euler field `Σ z_k ξ_k`.
    pub fn euler(n: usize) -> Self {
        Polyvector::vector_field(&(0..n).map(|k| Polynomial::var(n, k)).collect::<Vec<_>>())
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u16, &Q)> {
        self.terms.iter().map(|((m, s), c)| (m, *s, c))
    }

    pub fn coeff(&self, m: &Monomial, mask: u16) -> Q {
        self.terms.get(&(m.clone(), mask)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, mask: u16, c: Q) {
        assert_eq!(m.n(), self.n, "variable count");
        assert!(mask >> self.n == 0, "ξ index out of range");
        if c.is_zero() {
            return;
        }
        let key = (m, mask);
        let slot = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Polyvector) -> Polyvector {
        assert_eq!(self.n, other.n, "variable count");
        let mut out = self.clone();
        for (m, s, c) in other.terms() {
            out.add_term(m.clone(), s, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polyvector) -> Polyvector {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polyvector {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> Polyvector {
        if c.is_zero() {
            return Polyvector::zero(self.n);
        }
        Polyvector { n: self.n, terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn filter<F: Fn(&Monomial, u16) -> bool>(&self, keep: F) -> Polyvector {
        Polyvector {
            n: self.n,
            terms: self.terms.iter().filter(|((m, s), _)| keep(m, *s)).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    /// Reduction mod `F_order`.
    pub fn truncate(&self, order: u32) -> Polyvector {
        self.filter(|m, _| m.degree() < order)
    }

    /// The `Λʲ(V)` part.
    pub fn lambda_part(&self, j: u32) -> Polyvector {
        self.filter(|_, s| s.count_ones() == j)
    }

    /// The `Symⁱ(V∨)` part.
    pub fn sym_part(&self, i: u32) -> Polyvector {
        self.filter(|m, _| m.degree() == i)
    }

    /// Coefficient of `ξ_S` as a polynomial.
    pub fn component(&self, mask: u16) -> Polynomial {
        let mut p = Polynomial::zero(self.n);
        for (m, s, c) in self.terms() {
            if s == mask {
                p.add_term(m.clone(), c.clone());
            }
        }
        p
    }

    /// The `Λ⁰` part as a polynomial.
    pub fn function_part(&self) -> Polynomial {
        self.component(0)
    }

    /// Coefficients `f_i` of the `Λ¹` part.
    pub fn field_coeffs(&self) -> Vec<Polynomial> {
        (0..self.n).map(|i| self.component(1 << i)).collect()
    }

    /// The common `j` when only `Λʲ` terms occur.
    pub fn lambda_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|(_, s)| s.count_ones());
        let first = it.next()?;
        it.all(|j| j == first).then_some(first)
    }

    /// Shifted degree `j − 1` of a `Λʲ`-homogeneous element.
    pub fn shifted_degree(&self) -> Option<i32> {
        self.lambda_degree().map(|j| j as i32 - 1)
    }

    /// Lowest polynomial degree present.
    pub fn filtration_order(&self) -> Option<u32> {
        self.terms.keys().map(|(m, _)| m.degree()).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(m, _)| m.degree()).max()
    }

    /// `∂/∂z_i` applied to the coefficients.
    pub fn partial(&self, i: usize) -> Polyvector {
        let mut out = Polyvector::zero(self.n);
        for (m, s, c) in self.terms() {
            if let Some((e, dm)) = mono_partial(m, i) {
                out.add_term(dm, s, c * Q::from_integer(e.into()));
            }
        }
        out
    }

    /// Product in `ℂ[[V∨]] ⊗ Λ(V)`.
    pub fn wedge(&self, other: &Polyvector) -> Polyvector {
        assert_eq!(self.n, other.n, "variable count");
        let mut out = Polyvector::zero(self.n);
        for (m1, s1, c1) in self.terms() {
            for (m2, s2, c2) in other.terms() {
                if let Some(sg) = mask_sign_merge(s1, s2) {
                    out.add_term(m1.mul(m2), s1 | s2, c1 * c2 * sign_q(sg));
                }
            }
        }
        out
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Polyvector {
        self.wedge(&Polyvector::function(f))
    }

    /// `ι_{df} = Σ_k ∂_k f · ι_{ξ_k}` with each `ι_{ξ_k}` contracting from
    /// the left.
    pub fn contract_df(&self, f: &Polynomial) -> Polyvector {
        assert_eq!(self.n, f.n(), "variable count");
        let mut out = Polyvector::zero(self.n);
        for k in 0..self.n {
            let dk = f.partial(k).expect("index in range");
            if dk.is_zero() {
                continue;
            }
            let mut contracted = Polyvector::zero(self.n);
            for (m, s, c) in self.terms() {
                if s & (1 << k) == 0 {
                    continue;
                }
                let before = (s & ((1u16 << k) - 1)).count_ones();
                let c = if before % 2 == 0 { c.clone() } else { -c.clone() };
                contracted.add_term(m.clone(), s & !(1 << k), c);
            }
            out = out.add(&contracted.mul_poly(&dk));
        }
        out
    }

    /// Weight of one term under the diagonal action of `G`.
    pub fn term_weight(m: &Monomial, mask: u16, g: u32) -> Weight {
        add_weights(mono_weight(m, g), mask_weight(Side::V, mask, g), g)
    }

    /// Whether every term is `G`-invariant.
    pub fn is_invariant(&self, g: u32) -> bool {
        self.n == 3 && self.terms().all(|(m, s, _)| Polyvector::term_weight(m, s, g) == [0, 0])
    }

    /// `2i + j − 3d − 3 ≥ 0` and `≡ 0 mod 4g − 4` on every term, where `i` is
    /// the polynomial degree and `j` the number of `ξ`s.
    pub fn check_grading(&self, d: i64, g: u32) -> Result<(), PolyvectorError> {
        let modulus = 4 * g as i64 - 4;
        for (m, s, _) in self.terms() {
            let v = 2 * m.degree() as i64 + s.count_ones() as i64 - 3 * d - 3;
            if v < 0 || (modulus > 0 && v % modulus != 0) {
                return Err(PolyvectorError::Grading { exps: m.0.clone(), xi: s, d, genus: g });
            }
        }
        Ok(())
    }

    /// `α⁰ ∈ F₃` and `α² ∈ F_{2g}` for an element of degree one.
    pub fn check_degree_one_shape(&self, g: u32) -> Result<(), PolyvectorError> {
        for (m, s, _) in self.terms() {
            let ok = match s.count_ones() {
                0 => m.degree() >= 3,
                2 => m.degree() >= 2 * g,
                _ => false,
            };
            if !ok {
                return Err(PolyvectorError::Shape { exps: m.0.clone(), xi: s });
            }
        }
        Ok(())
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, s, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            let mut factors = Vec::new();
            let abs = c.abs();
            if !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (k, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("z{}", k + 1)),
                    _ => factors.push(format!("z{}^{}", k + 1, e)),
                }
            }
            let xi: Vec<String> = mask_iter(s).map(|k| format!("ξ{}", k + 1)).collect();
            if !xi.is_empty() {
                factors.push(xi.join("∧"));
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            vars: var_names(self.n),
            terms: self
                .terms()
                .map(|(m, s, c)| TermJson { coeff: rational_string(c), exps: m.0.clone(), xi: Some(s) })
                .collect(),
        }
    }

    pub fn from_json(j: &PolynomialJson) -> Result<Polyvector, PolyvectorError> {
        let n = j.vars.len();
        if n == 0 || n > MAX_VARS {
            return Err(PolyvectorError::Parse(format!("variable count {n}")));
        }
        let mut p = Polyvector::zero(n);
        for (i, t) in j.terms.iter().enumerate() {
            if t.exps.len() != n {
                return Err(PolyvectorError::Parse(format!(
                    "terms[{i}].exps has length {}, expected {n}",
                    t.exps.len()
                )));
            }
            let xi = t.xi.unwrap_or(0);
            if xi >> n != 0 {
                return Err(PolyvectorError::Parse(format!("terms[{i}].xi = {xi} exceeds {n} generators")));
            }
            let c = parse_rational(&t.coeff).map_err(|e| PolyvectorError::Parse(format!("terms[{i}].coeff: {e}")))?;
            p.add_term(Monomial(t.exps.clone()), xi, c);
        }
        Ok(p)
    }
}

/// Serialized form of a [`Polyvector`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolyvectorJson(pub PolynomialJson);

/// The Schouten bracket. For `a = f ξ_I`, `b = g ξ_J` with
/// `I = {i_1 < … < i_k}`, `J = {j_1 < … < j_l}`:
///
/// `Σ_q (−1)^{k−q} f ∂_{i_q}g ξ_{I∖i_q} ∧ ξ_J
///  + Σ_p (−1)^{l−p−1+(k−1)(l−1)} g ∂_{j_p}f ξ_{J∖j_p} ∧ ξ_I`.
pub fn schouten(a: &Polyvector, b: &Polyvector) -> Polyvector {
    assert_eq!(a.n, b.n, "variable count");
    let mut out = Polyvector::zero(a.n);
    for (fm, fi, fc) in a.terms() {
        let k = fi.count_ones() as i64;
        for (gm, gj, gc) in b.terms() {
            let l = gj.count_ones() as i64;
            let c = fc * gc;
            for (q, iq) in mask_iter(fi).enumerate() {
                let Some((e, dg)) = mono_partial(gm, iq) else {
                    continue;
                };
                let rest = fi & !(1 << iq);
                let Some(sg) = mask_sign_merge(rest, gj) else {
                    continue;
                };
                let sign = if (k - (q as i64 + 1)).rem_euclid(2) == 0 { sg } else { -sg };
                out.add_term(fm.mul(&dg), rest | gj, &c * Q::from_integer(e.into()) * sign_q(sign));
            }
            for (p, jp) in mask_iter(gj).enumerate() {
                let Some((e, df)) = mono_partial(fm, jp) else {
                    continue;
                };
                let rest = gj & !(1 << jp);
                let Some(sg) = mask_sign_merge(rest, fi) else {
                    continue;
                };
                let exp = l - (p as i64 + 1) - 1 + (k - 1) * (l - 1);
                let sign = if exp.rem_euclid(2) == 0 { sg } else { -sg };
                out.add_term(gm.mul(&df), rest | fi, &c * Q::from_integer(e.into()) * sign_q(sign));
            }
        }
    }
    out
}

/// `[v, ·]` iterated through the exponential: `Σ_m ad_v^m(p) / m!` mod
/// `F_order`. Needs `v` of filtration order at least two on its `Λ¹` part
/// so that every application raises the degree.
pub fn exp_ad(v: &Polyvector, p: &Polyvector, order: u32) -> Polyvector {
    let mut total = p.truncate(order);
    let mut cur = total.clone();
    let mut m = 1i64;
    while !cur.is_zero() {
        cur = schouten(v, &cur).truncate(order).scale(&Q::new(1.into(), m.into()));
        total = total.add(&cur);
        m += 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::qi;

    fn z(n: usize, e: &[u32]) -> Monomial {
        assert_eq!(e.len(), n);
        Monomial(e.to_vec())
    }

    #[test]
    fn hand_bracket() {
        let a = Polyvector::xi(3, 0);
        let b = Polyvector::term(z(3, &[1, 0, 0]), 0b010, qi(1));
        assert_eq!(schouten(&a, &b), Polyvector::xi(3, 1));
        // opposite order, shifted degrees 0 and 0
        assert_eq!(schouten(&b, &a), Polyvector::xi(3, 1).neg());
    }

    #[test]
    fn functions_commute() {
        let w = Polyvector::function(&Polynomial::from_terms(3, [(qi(-1), vec![1, 1, 1]), (qi(1), vec![7, 0, 0])]));
        let f = Polyvector::function(&Polynomial::var(3, 2));
        assert!(schouten(&w, &w).is_zero());
        assert!(schouten(&w, &f).is_zero());
    }

    #[test]
    fn field_on_function_is_directional_derivative() {
        let w = Polynomial::from_terms(3, [(qi(-1), vec![1, 1, 1]), (qi(1), vec![0, 5, 0])]);
        let f = Polynomial::from_terms(3, [(qi(2), vec![2, 0, 1])]);
        let v = Polyvector::from_poly(&f, 0b010);
        let want = f.mul(&w.partial(1).unwrap());
        assert_eq!(schouten(&v, &Polyvector::function(&w)), Polyvector::function(&want));
        assert_eq!(schouten(&Polyvector::function(&w), &v), Polyvector::function(&want).neg());
    }

    #[test]
    fn function_with_bivector_is_minus_contraction() {
        let w = Polynomial::from_terms(3, [(qi(-1), vec![1, 1, 1]), (qi(1), vec![0, 0, 7])]);
        let a2 =
            Polyvector::term(z(3, &[0, 2, 1]), 0b011, qi(3)).add(&Polyvector::term(z(3, &[1, 0, 0]), 0b110, qi(-1)));
        assert_eq!(schouten(&Polyvector::function(&w), &a2), a2.contract_df(&w).neg());
    }

    #[test]
    fn euler_counts_degree() {
        // [E, f] = deg(f) f on homogeneous functions
        let f = Polynomial::from_terms(3, [(qi(1), vec![1, 2, 0]), (qi(-4), vec![0, 0, 3])]);
        let e = Polyvector::euler(3);
        assert_eq!(schouten(&e, &Polyvector::function(&f)), Polyvector::function(&f.scale(&qi(3))));
    }

    #[test]
    fn exp_of_field_is_substitution() {
        // exp(z1² ξ1) pulls z1 back to z1/(1 − z1)
        let v = Polyvector::term(z(1, &[2]), 1, qi(1));
        let p = Polyvector::function(&Polynomial::var(1, 0));
        let out = exp_ad(&v, &p, 6);
        let want: Polynomial = Polynomial::from_terms(1, (1..6).map(|e| (qi(1), vec![e])));
        assert_eq!(out, Polyvector::function(&want));
    }

    #[test]
    fn grading_and_shape() {
        let w = Polyvector::function(&Polynomial::from_terms(3, [(qi(-1), vec![1, 1, 1]), (qi(1), vec![7, 0, 0])]));
        assert!(w.check_grading(1, 3).is_ok());
        assert!(w.check_degree_one_shape(3).is_ok());
        let bad = Polyvector::term(z(3, &[1, 1, 0]), 0, qi(1));
        assert!(bad.check_grading(1, 3).is_err());
        assert!(bad.check_degree_one_shape(3).is_err());
        let a2 = Polyvector::term(z(3, &[6, 0, 0]), 0b110, qi(1));
        assert!(a2.check_grading(1, 3).is_ok());
        assert!(a2.check_degree_one_shape(3).is_ok());
        assert!(Polyvector::term(z(3, &[5, 0, 0]), 0b110, qi(1)).check_degree_one_shape(3).is_err());
        assert!(a2.is_invariant(3));
        assert!(!bad.is_invariant(3));
    }

    #[test]
    fn json_round_trip() {
        let p = Polyvector::term(z(3, &[0, 2, 1]), 0b011, qi(3)).add(&Polyvector::term(
            z(3, &[1, 0, 0]),
            0,
            Q::new(1.into(), 2.into()),
        ));
        let s = serde_json::to_string(&PolyvectorJson(p.to_json())).unwrap();
        let back: PolyvectorJson = serde_json::from_str(&s).unwrap();
        assert_eq!(Polyvector::from_json(&back.0).unwrap(), p);
        assert!(s.contains("\"xi\":3"));
    }

    #[test]
    fn render_form() {
        let p = Polyvector::term(z(3, &[0, 2, 1]), 0b011, qi(-3)).add(&Polyvector::xi(3, 2));
        assert_eq!(p.render(), "ξ3 - 3*z2^2*z3*ξ1∧ξ2");
    }
}
