use exact_algebra::json::PolynomialJson;
use exact_algebra::{Monomial, Polynomial, Q};
use serde::{Deserialize, Serialize};

use crate::{exp_ad, reduce_in_degrees, Polyvector, PolyvectorError};

/// A composite of exponentials of formal vector fields, applied in list
/// order. Each logarithm has filtration order at least two, so the
/// coordinate change has the shape `z_i ↦ z_i + O(z²)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalDiffeo {
    n: usize,
    logs: Vec<Polyvector>,
}

fn check_log(v: &Polyvector) -> Result<(), PolyvectorError> {
    if !v.is_zero() && v.lambda_degree() != Some(1) {
        return Err(PolyvectorError::WrongDegree { expected: 1 });
    }
    match v.filtration_order() {
        Some(d) if d < 2 => Err(PolyvectorError::LowOrderField { degree: d }),
        _ => Ok(()),
    }
}

impl FormalDiffeo {
    pub fn identity(n: usize) -> Self {
        FormalDiffeo { n, logs: Vec::new() }
    }

    pub fn from_logs(n: usize, logs: Vec<Polyvector>) -> Result<Self, PolyvectorError> {
        let mut d = FormalDiffeo::identity(n);
        for v in logs {
            d.push(v)?;
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn logs(&self) -> &[Polyvector] {
        &self.logs
    }

    pub fn is_identity(&self) -> bool {
        self.logs.is_empty()
    }

    /// Appends `exp(v)`, applied after the current ones.
    pub fn push(&mut self, v: Polyvector) -> Result<(), PolyvectorError> {
        assert_eq!(v.n(), self.n, "variable count");
        check_log(&v)?;
        if !v.is_zero() {
            self.logs.push(v);
        }
        Ok(())
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &FormalDiffeo) -> FormalDiffeo {
        let mut logs = self.logs.clone();
        logs.extend(other.logs.iter().cloned());
        FormalDiffeo { n: self.n, logs }
    }

    /// Images of the coordinates mod `F_order`.
    pub fn coordinates(&self, order: u32) -> Vec<Polynomial> {
        (0..self.n)
            .map(|i| {
                pushforward_diffeo(self, &Polyvector::function(&Polynomial::var(self.n, i)), order)
                    .expect("valid logs")
                    .function_part()
            })
            .collect()
    }

    pub fn to_json(&self) -> Vec<PolynomialJson> {
        self.logs.iter().map(|v| v.to_json()).collect()
    }

    pub fn from_json(n: usize, logs: &[PolynomialJson]) -> Result<Self, PolyvectorError> {
        let mut out = FormalDiffeo::identity(n);
        for j in logs {
            let v = Polyvector::from_json(j)?;
            if v.n() != n {
                return Err(PolyvectorError::Parse(format!("log over {} variables, expected {n}", v.n())));
            }
            out.push(v)?;
        }
        Ok(out)
    }
}

/// Action of the composite on `p` mod `F_order`: each exponential of the
/// Schouten Lie derivative in turn.
pub fn pushforward_diffeo(d: &FormalDiffeo, p: &Polyvector, order: u32) -> Result<Polyvector, PolyvectorError> {
    let mut cur = p.truncate(order);
    for v in &d.logs {
        check_log(v)?;
        cur = exp_ad(v, &cur, order);
    }
    Ok(cur)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    /// Removes the `λ (z₁z₂z₃)^{(2g+1)/3}` term.
    Lambda,
    /// Coefficients of degree `m − 2g` and `m − 2` only, `m` the current
    /// agreement order.
    Graded,
    /// All coefficient degrees from `max(2, m − 2g)` to `m − 2`.
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub kind: StepKind,
    /// `α ≡ W mod F_from` before the step.
    pub from: u32,
    /// `α ≡ W mod F_to` after it.
    pub to: u32,
    pub field_degrees: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub genus: u32,
    pub order: u32,
    pub graded: bool,
    pub lambda: Option<String>,
    pub steps: Vec<Step>,
    /// Independent re-application of the whole composite to the input.
    pub verified: bool,
}

/// `−z₁z₂z₃ + z₁^{2g+1} + z₂^{2g+1} + z₃^{2g+1}`.
pub fn superpotential(g: u32) -> Polynomial {
    let e = 2 * g + 1;
    Polynomial::from_terms(
        3,
        [
            (-Q::from_integer(1.into()), vec![1, 1, 1]),
            (Q::from_integer(1.into()), vec![e, 0, 0]),
            (Q::from_integer(1.into()), vec![0, e, 0]),
            (Q::from_integer(1.into()), vec![0, 0, e]),
        ],
    )
}

fn lambda_monomial(g: u32) -> Option<Monomial> {
    (g % 3 == 1).then(|| {
        let t = (2 * g + 1) / 3;
        Monomial(vec![t, t, t])
    })
}

/// Whether `α⁰` is `G`-invariant with every degree `≡ 3 mod 2g − 2`.
fn is_graded(alpha0: &Polynomial, g: u32) -> bool {
    let p = Polyvector::function(alpha0);
    p.is_invariant(g) && p.check_grading(1, g).is_ok()
}

/// A composite of exponentials carrying `α⁰` to `W mod F_order`.
///
/// Requires `α⁰ ≡ W mod F_{2g+2}` apart from a `λ (z₁z₂z₃)^{(2g+1)/3}` term
/// when `g ≡ 1 mod 3`; that term goes first. Each later step solves
/// `Σ f_i ∂α/∂z_i ≡ W − α` for the least-norm `f`. When `α⁰` is invariant
/// and graded the agreement order climbs through `3 + (2g − 2)k`.
pub fn normalize(alpha0: &Polynomial, g: u32, order: u32) -> Result<(FormalDiffeo, Certificate), PolyvectorError> {
    assert!(g >= 2, "genus at least two");
    let w = superpotential(g);
    let n = 3;
    if alpha0.n() != n {
        return Err(PolyvectorError::Parse(format!("α⁰ over {} variables, expected 3", alpha0.n())));
    }
    let alpha0 = alpha0.filter(|m| m.degree() < order);
    let lam_mono = lambda_monomial(g);
    let lambda = lam_mono.as_ref().map(|m| alpha0.coeff(m));
    let mut low = alpha0.sub(&w).filter(|m| m.degree() < (2 * g + 2).min(order));
    if let Some(m) = &lam_mono {
        low = low.filter(|x| x != m);
    }
    if let Some((m, _)) = low.terms().next() {
        return Err(PolyvectorError::Hypothesis { exps: m.0.clone(), order: 2 * g + 2 });
    }
    let graded = is_graded(&alpha0, g);
    let mut diffeo = FormalDiffeo::identity(n);
    let mut steps = Vec::new();
    let mut cur = Polyvector::function(&alpha0);
    let agreement =
        |cur: &Polyvector| cur.sub(&Polyvector::function(&w)).truncate(order).filtration_order().unwrap_or(order);

    if let (Some(m), Some(l)) = (&lam_mono, &lambda) {
        if !num_traits::Zero::is_zero(l) && m.degree() < order {
            let t = (2 * g - 2) / 3;
            let v = Polyvector::term(Monomial(vec![(2 * g + 1) / 3, t, t]), 1, l.clone());
            let from = agreement(&cur);
            cur = exp_ad(&v, &cur, order);
            diffeo.push(v)?;
            steps.push(Step { kind: StepKind::Lambda, from, to: agreement(&cur), field_degrees: vec![2 * g - 1] });
        }
    }

    loop {
        let m = agreement(&cur);
        if m >= order {
            break;
        }
        let (kind, degrees, target) = if graded {
            let next = (m + 2 * g - 2).min(order);
            let degrees: Vec<u32> = [m.saturating_sub(2 * g), m - 2].into_iter().filter(|&d| d >= 2).collect();
            (StepKind::Graded, degrees, next)
        } else {
            (StepKind::Full, (m.saturating_sub(2 * g).max(2)..=m - 2).collect(), m + 1)
        };
        let diff = w.sub(&cur.function_part()).filter(|x| x.degree() < order);
        let red = reduce_in_degrees(&diff, &cur.function_part(), &degrees, target)
            .map_err(|_| PolyvectorError::Unsolvable { degree: m })?;
        let v = red.field();
        let next = exp_ad(&v, &cur, order);
        let reached = agreement(&next);
        if reached <= m {
            return Err(PolyvectorError::Unsolvable { degree: m });
        }
        diffeo.push(v)?;
        cur = next;
        steps.push(Step { kind, from: m, to: reached, field_degrees: degrees });
    }

    let check = pushforward_diffeo(&diffeo, &Polyvector::function(&alpha0), order)?;
    let verified = check.sub(&Polyvector::function(&w)).truncate(order).is_zero();
    let certificate = Certificate {
        genus: g,
        order,
        graded,
        lambda: lambda.map(|l| exact_algebra::rational_string(&l)),
        steps,
        verified,
    };
    Ok((diffeo, certificate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::qi;

    #[test]
    fn identity_on_w() {
        let (d, cert) = normalize(&superpotential(3), 3, 15).unwrap();
        assert!(d.is_identity());
        assert!(cert.steps.is_empty());
        assert!(cert.verified);
    }

    #[test]
    fn lambda_step_first() {
        let g = 4;
        let lam = Polynomial::from_terms(3, [(qi(5), vec![3, 3, 3])]);
        let alpha = superpotential(g).add(&lam);
        let (d, cert) = normalize(&alpha, g, 16).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.lambda.as_deref(), Some("5"));
        assert_eq!(cert.steps[0].kind, StepKind::Lambda);
        assert_eq!(cert.steps[0].from, 9);
        assert!(cert.steps[0].to >= 2 * g + 2);
        let out = pushforward_diffeo(&d, &Polyvector::function(&alpha), 16).unwrap();
        assert_eq!(out, Polyvector::function(&superpotential(g)));
    }

    #[test]
    fn hypothesis_violation() {
        let alpha = superpotential(3).add(&Polynomial::from_terms(3, [(qi(1), vec![2, 1, 0])]));
        assert!(matches!(normalize(&alpha, 3, 12), Err(PolyvectorError::Hypothesis { .. })));
    }

    #[test]
    fn graded_gains() {
        let g = 3;
        // the lowest invariant correction sits in degree 15
        let alpha = superpotential(g).add(&Polynomial::from_terms(3, [(qi(2), vec![5, 5, 5])]));
        let (_, cert) = normalize(&alpha, g, 23).unwrap();
        assert!(cert.graded && cert.verified);
        let froms: Vec<u32> = cert.steps.iter().map(|s| s.from).collect();
        assert!(froms.iter().all(|m| (m - 3) % (2 * g - 2) == 0), "{froms:?}");
        assert!(cert.steps.iter().all(|s| s.to >= s.from + 2 * g - 2 || s.to == 23));
    }

    #[test]
    fn trivector_exponential_shifts_bivector() {
        let g = 3;
        let a0 = Polyvector::function(&superpotential(g));
        let a2 = Polyvector::term(Monomial(vec![6, 0, 0]), 0b110, qi(2));
        let gamma = Polyvector::term(Monomial(vec![4, 0, 0]), 0b111, qi(-1));
        let out = exp_ad(&gamma, &a0.add(&a2), 30);
        assert_eq!(out, a0.add(&a2).add(&gamma.contract_df(&superpotential(g))));
    }

    #[test]
    fn field_exponential_leading_order() {
        let g = 3;
        let w = superpotential(g);
        let f = Polynomial::from_terms(3, [(qi(3), vec![5, 4, 4])]);
        let d = FormalDiffeo::from_logs(3, vec![Polyvector::from_poly(&f, 0b001)]).unwrap();
        // the second-order term starts in degree 13 + 12 + 2
        let out = pushforward_diffeo(&d, &Polyvector::function(&w), 27).unwrap();
        assert_eq!(out.function_part(), w.add(&f.mul(&w.partial(0).unwrap())).filter(|m| m.degree() < 27));
    }

    #[test]
    fn identity_diffeo_fixes_everything() {
        let p = Polyvector::term(Monomial(vec![1, 2, 0]), 0b101, qi(4));
        assert_eq!(pushforward_diffeo(&FormalDiffeo::identity(3), &p, 10).unwrap(), p);
    }

    #[test]
    fn low_order_log_rejected() {
        let v = Polyvector::term(Monomial(vec![1, 0, 0]), 0b010, qi(1));
        assert!(matches!(FormalDiffeo::from_logs(3, vec![v]), Err(PolyvectorError::LowOrderField { degree: 1 })));
        assert!(FormalDiffeo::from_logs(3, vec![Polyvector::term(Monomial(vec![2, 0, 0]), 0b011, qi(1))]).is_err());
    }

    #[test]
    fn coordinates_have_shape() {
        let v = Polyvector::term(Monomial(vec![0, 2, 1]), 0b001, qi(3));
        let d = FormalDiffeo::from_logs(3, vec![v]).unwrap();
        let zs = d.coordinates(8);
        for (i, z) in zs.iter().enumerate() {
            assert_eq!(z.homogeneous_part(1), Polynomial::var(3, i));
            assert!(z.homogeneous_part(0).is_zero());
        }
        assert_eq!(zs[0], Polynomial::from_terms(3, [(qi(1), vec![1, 0, 0]), (qi(3), vec![0, 2, 1])]));
    }

    #[test]
    fn json_round_trip() {
        let v = Polyvector::term(Monomial(vec![0, 2, 1]), 0b001, qi(3));
        let d = FormalDiffeo::from_logs(3, vec![v.clone(), v.scale(&qi(2))]).unwrap();
        let s = serde_json::to_string(&d.to_json()).unwrap();
        let back: Vec<PolynomialJson> = serde_json::from_str(&s).unwrap();
        assert_eq!(FormalDiffeo::from_json(3, &back).unwrap(), d);
    }
}
