use std::collections::BTreeMap;

use exact_algebra::{add_weights, mask_weight, Monomial, Polynomial, Side, Weight, Q};
use hochschild::AInfStructure;
use matrix_factorization::MFData;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{hkr_diagonal_terms, Transferred};

/// Degree `|out| − Σ|a_i|` of one output term.
pub fn term_degree(args: &[u16], out_mask: u16) -> i64 {
    out_mask.count_ones() as i64 - args.iter().map(|a| a.count_ones() as i64).sum::<i64>()
}

/// The `ħ`-power `k` with `degree = 6 − 3d + (4g − 4)k`, if there is one.
pub fn hbar_power(g: u32, d: usize, degree: i64) -> Option<u32> {
    let step = 4 * g as i64 - 4;
    let rest = degree - 6 + 3 * d as i64;
    (rest >= 0 && rest % step == 0).then(|| (rest / step) as u32)
}

/// `μ_k^d(args)`: the output terms of `μ^d(args)` of `ħ`-power `k`.
pub fn mu_component(mu: &dyn AInfStructure, g: u32, args: &[u16], k: u32) -> exact_algebra::ExtElement {
    let v = mu.mu(args);
    let mut out = exact_algebra::ExtElement::zero(Side::V, mu.n());
    for (m, c) in v.terms() {
        if hbar_power(g, args.len(), term_degree(args, m)) == Some(k) {
            out = out.add(&exact_algebra::ExtElement::term(Side::V, mu.n(), m, c.clone()));
        }
    }
    out
}

/// `μ_k^d(z, …, z)` for `z = Σ z_k ξ_k`, keyed by (monomial, output mask).
pub fn diagonal_component(mu: &dyn AInfStructure, g: u32, d: usize, k: u32) -> BTreeMap<(Monomial, u16), Q> {
    let mut all = hkr_diagonal_terms(mu.n(), d, |a| mu.mu(a));
    // on the diagonal every input has degree 1
    all.retain(|(_, m), _| hbar_power(g, d, m.count_ones() as i64 - d as i64) == Some(k));
    all
}

/// The scalar part of a diagonal as a polynomial, `None` if some output
/// has positive degree.
pub fn diagonal_polynomial(n: usize, diag: &BTreeMap<(Monomial, u16), Q>) -> Option<Polynomial> {
    let mut p = Polynomial::zero(n);
    for ((m, mask), c) in diag {
        if *mask != 0 {
            return None;
        }
        p.add_term(m.clone(), c.clone());
    }
    Some(p)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AuxAudit {
    pub checked: usize,
    /// Number of nonzero output terms per `(d, k)`.
    pub per_component: BTreeMap<String, usize>,
    pub failures: Vec<String>,
}

impl AuxAudit {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check that every output term of every sample has degree
/// `6 − 3d + (4g − 4)k` for some `k ≥ 0`. `μ²` is the wedge product and is
/// audited with `k = 0`.
pub fn aux_degree_audit(g: u32, samples: &[(Vec<u16>, exact_algebra::ExtElement)]) -> AuxAudit {
    let mut rep = AuxAudit::default();
    for (args, v) in samples {
        rep.checked += 1;
        let d = args.len();
        for (m, _) in v.terms() {
            let deg = term_degree(args, m);
            let k = if d == 2 { (deg == 0).then_some(0) } else { hbar_power(g, d, deg) };
            match k {
                Some(k) => *rep.per_component.entry(format!("d={d},k={k}")).or_insert(0) += 1,
                None => rep.failures.push(format!("{args:?} -> mask {m}: degree {deg} matches no power of hbar")),
            }
        }
    }
    rep
}

#[derive(Clone, Debug, Serialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct HypothesisReport {
    pub genus: u32,
    pub clauses: Vec<Clause>,
    /// Coefficient of `(z₁z₂z₃)^{(2g+1)/3}` in the `μ₁^{2g+1}` diagonal when
    /// `g ≡ 1 (mod 3)`.
    pub lambda: Option<String>,
}

impl HypothesisReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

fn fermat(g: u32) -> Polynomial {
    let e = 2 * g + 1;
    Polynomial::from_terms(
        3,
        [
            (Q::from_integer(1.into()), vec![e, 0, 0]),
            (Q::from_integer(1.into()), vec![0, e, 0]),
            (Q::from_integer(1.into()), vec![0, 0, e]),
        ],
    )
}

fn random_tuple(rng: &mut ChaCha8Rng, d: usize) -> Vec<u16> {
    (0..d).map(|_| rng.gen_range(0..8u16)).collect()
}

pub const CUBIC: &str = "cubic diagonal";
pub const TOP: &str = "top diagonal";
pub const VANISHING: &str = "vanishing range";
pub const EQUIVARIANCE: &str = "equivariance";
pub const AUX_DEGREE: &str = "aux-degree law";

/// The two diagonal clauses: `μ₀³(z, z, z) = −z₁z₂z₃` and
/// `μ₁^{2g+1}(z, …, z)` equal to the Fermat sum, up to a `λ` multiple of
/// `(z₁z₂z₃)^{(2g+1)/3}` when `g ≡ 1 (mod 3)`. Returns the clauses and `λ`.
pub fn diagonal_clauses(mu: &dyn AInfStructure, g: u32) -> (Vec<Clause>, Option<String>) {
    let mut clauses = Vec::new();

    let cubic = diagonal_polynomial(3, &diagonal_component(mu, g, 3, 0));
    let want = Polynomial::from_terms(3, [(Q::from_integer((-1).into()), vec![1, 1, 1])]);
    clauses.push(Clause {
        name: CUBIC.into(),
        passed: cubic.as_ref() == Some(&want),
        detail: cubic.map_or("non-scalar output".into(), |p| p.render()),
    });

    let e = 2 * g + 1;
    let top = diagonal_polynomial(3, &diagonal_component(mu, g, e as usize, 1));
    let mut lambda = None;
    let (passed, detail) = match top {
        None => (false, "non-scalar output".to_string()),
        Some(p) => {
            let mut rest = p.sub(&fermat(g));
            if g % 3 == 1 {
                let m = Monomial(vec![e / 3; 3]);
                let l = rest.coeff(&m);
                rest = rest.sub(&Polynomial::monomial(3, m, l.clone()));
                lambda = Some(exact_algebra::rational_string(&l));
            }
            (rest.is_zero(), p.render())
        }
    };
    clauses.push(Clause { name: TOP.into(), passed, detail });
    (clauses, lambda)
}

/// Check the hypotheses that pin down the structure up to equivalence:
/// `μ₀³(z, z, z) = −z₁z₂z₃`, the shape of `μ₁^{2g+1}(z, …, z)`, the
/// vanishing of `μ₁ⁱ` for `3 ≤ i < (4g−1)/3`, weight additivity and the
/// aux-degree law on `samples` seeded random tuples per arity up to
/// `max_sample_arity`.
pub fn hypothesis_check(mf: MFData, seed: u64, samples: usize, max_sample_arity: usize) -> HypothesisReport {
    let g = mf.genus.expect("genus-tagged matrix factorization");
    let mu = Transferred::new(mf);
    let (mut clauses, lambda) = diagonal_clauses(&mu, g);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let upper = (4 * g as usize - 1).div_ceil(3);
    let mut bad = Vec::new();
    let mut count = 0;
    for i in 3..upper {
        for _ in 0..samples {
            let t = random_tuple(&mut rng, i);
            count += 1;
            if !mu_component(&mu, g, &t, 1).is_zero() {
                bad.push(format!("{t:?}"));
            }
        }
    }
    clauses.push(Clause {
        name: VANISHING.into(),
        passed: bad.is_empty(),
        detail: format!("arities 3..{upper}, {count} tuples, {} nonzero", bad.len()),
    });

    let mut values = Vec::new();
    for d in 2..=max_sample_arity {
        for _ in 0..samples {
            let t = random_tuple(&mut rng, d);
            let v = mu.mu(&t);
            values.push((t, v));
        }
    }
    let mut weight_bad = 0;
    for (t, v) in &values {
        let w_in: Weight = t.iter().fold([0, 0], |acc, &a| add_weights(acc, mask_weight(Side::V, a, g), g));
        if v.terms().any(|(m, _)| mask_weight(Side::V, m, g) != w_in) {
            weight_bad += 1;
        }
    }
    clauses.push(Clause {
        name: EQUIVARIANCE.into(),
        passed: weight_bad == 0,
        detail: format!("{} tuples, {weight_bad} violate weight additivity", values.len()),
    });

    let audit = aux_degree_audit(g, &values);
    clauses.push(Clause {
        name: AUX_DEGREE.into(),
        passed: audit.passed(),
        detail: format!("{} tuples, {} failures", audit.checked, audit.failures.len()),
    });

    HypothesisReport { genus: g, clauses, lambda }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::ExtElement;

    #[test]
    fn hbar_powers() {
        // μ₀³ on three generators lands in Λ⁰
        assert_eq!(hbar_power(3, 3, -3), Some(0));
        // μ₁⁷ at g = 3
        assert_eq!(hbar_power(3, 7, -7), Some(1));
        assert_eq!(hbar_power(3, 7, -15), Some(0));
        assert_eq!(hbar_power(3, 7, -11), None);
        assert_eq!(hbar_power(4, 9, -9), Some(1));
        assert_eq!(term_degree(&[1, 2, 4], 0), -3);
    }

    #[test]
    fn audit_flags_bad_degrees() {
        let n = 3;
        let good = vec![
            (vec![1, 2, 4], ExtElement::scalar(Side::V, n, Q::from_integer(1.into()))),
            (vec![1, 2], ExtElement::basis(Side::V, n, 3)),
        ];
        let rep = aux_degree_audit(3, &good);
        assert!(rep.passed());
        assert_eq!(rep.per_component.get("d=3,k=0"), Some(&1));
        assert_eq!(rep.per_component.get("d=2,k=0"), Some(&1));
        let bad = vec![(vec![1, 2, 4], ExtElement::basis(Side::V, n, 1))];
        assert!(!aux_degree_audit(3, &bad).passed());
    }
}
