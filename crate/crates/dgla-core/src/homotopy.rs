//! Degree-one elements of `g ⊗ Ω₁` with polynomial coefficients, where `Ω₁`
//! is the algebra of polynomial forms on the line.
//!
//! Signs follow `d(x ⊗ f) = ∂x ⊗ f + (−1)^{|x|} x ⊗ f′dt` and
//! `[a ⊗ ω, b ⊗ η] = (−1)^{|ω||b|} [a, b] ⊗ ωη`. For `A = P(t) + Q(t)dt`
//! this gives `F(A) = ∂P + ½[P, P] + (∂Q + [P, Q] − P′) dt`, so the gauge
//! path `exp(tX)(α)` pairs with `−X dt`.

use exact_algebra::{q, qi, Q};
use num_traits::{One, Zero};

use crate::dgla::{add, is_zero, scale, sub, Dgla, Vector};
use crate::mc::mc_residual;
use crate::obstruction::{CentralIdeal, CohomologyClass};
use crate::DglaError;

/// `P(t) + Q(t)dt`; `p[i]` and `q[i]` are the coefficients of `tⁱ`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyLineForm {
    pub p: Vec<Vector>,
    pub q: Vec<Vector>,
}

fn poly_eval(coeffs: &[Vector], t0: &Q, dim: usize) -> Vector {
    let mut out = vec![Q::zero(); dim];
    for c in coeffs.iter().rev() {
        out = add(&scale(&out, t0), c);
    }
    out
}

fn poly_add(a: &[Vector], b: &[Vector], dim: usize) -> Vec<Vector> {
    let n = a.len().max(b.len());
    let zero = vec![Q::zero(); dim];
    (0..n).map(|i| add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero))).collect()
}

fn poly_bracket(g: &Dgla, a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![g.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = add(&out[i + j], &g.bracket(x, y));
        }
    }
    out
}

fn trim(mut v: Vec<Vector>) -> Vec<Vector> {
    while v.last().is_some_and(|c| is_zero(c)) {
        v.pop();
    }
    v
}

impl PolyLineForm {
    pub fn constant(alpha: Vector) -> PolyLineForm {
        PolyLineForm { p: trim(vec![alpha]), q: Vec::new() }
    }

    /// Evaluation at `t = t0`; `dt` restricts to zero.
    pub fn ev(&self, g: &Dgla, t0: &Q) -> Vector {
        poly_eval(&self.p, t0, g.dim())
    }

    pub fn ev0(&self, g: &Dgla) -> Vector {
        self.ev(g, &Q::zero())
    }

    pub fn ev1(&self, g: &Dgla) -> Vector {
        self.ev(g, &Q::one())
    }

    pub fn t_degree(&self) -> usize {
        self.p.len().max(self.q.len()).saturating_sub(1)
    }

    /// `F(A)` as a degree-two form `R₀(t) + R₁(t)dt`.
    pub fn mc_residual(&self, g: &Dgla) -> Result<PolyLineForm, DglaError> {
        for c in &self.p {
            g.check_degree(c, 1)?;
        }
        for c in &self.q {
            g.check_degree(c, 0)?;
        }
        let dim = g.dim();
        let dp: Vec<Vector> = self.p.iter().map(|c| g.diff(c)).collect();
        let half: Vec<Vector> = poly_bracket(g, &self.p, &self.p).iter().map(|c| scale(c, &q(1, 2))).collect();
        let r0 = poly_add(&dp, &half, dim);
        let dq: Vec<Vector> = self.q.iter().map(|c| g.diff(c)).collect();
        let pq = poly_bracket(g, &self.p, &self.q);
        let deriv: Vec<Vector> = self.p.iter().enumerate().skip(1).map(|(i, c)| scale(c, &-qi(i as i64))).collect();
        let r1 = poly_add(&poly_add(&dq, &pq, dim), &deriv, dim);
        Ok(PolyLineForm { p: trim(r0), q: trim(r1) })
    }

    pub fn is_zero(&self) -> bool {
        self.p.iter().all(|c| is_zero(c)) && self.q.iter().all(|c| is_zero(c))
    }
}

/// The projection `L¹ → k`, `Σ aᵢ tⁱ dt ↦ Σ aᵢ/(i+1)`, applied coefficientwise.
pub fn integrate_dt(coeffs: &[Vector], dim: usize) -> Vector {
    let mut out = vec![Q::zero(); dim];
    for (i, c) in coeffs.iter().enumerate() {
        out = add(&out, &scale(c, &q(1, i as i64 + 1)));
    }
    out
}

/// The MC path `exp(tX)(α) − X dt` from `α` to `exp(X)(α)`.
pub fn line_homotopy(g: &Dgla, alpha: &[Q], x: &[Q]) -> Result<PolyLineForm, DglaError> {
    let class = g.nilpotency_class().ok_or(DglaError::NotNilpotent)?;
    g.check_degree(alpha, 1)?;
    g.check_degree(x, 0)?;
    // tᵏ coefficient: ad_Xᵏ(α)/k! − ad_X^{k−1}(∂X)/k!
    let cap = class + 1;
    let mut p = vec![alpha.to_vec()];
    let mut a = alpha.to_vec();
    let mut b = g.diff(x);
    let mut fact = Q::one();
    for k in 1..=cap {
        fact *= qi(k as i64);
        let coeff = scale(&sub(&g.bracket(x, &a), &b), &(Q::one() / &fact));
        a = g.bracket(x, &a);
        b = g.bracket(x, &b);
        p.push(coeff);
    }
    debug_assert!(is_zero(&a) && is_zero(&b), "exp(tX) must terminate within the class");
    Ok(PolyLineForm { p: trim(p), q: trim(vec![scale(x, &-Q::one())]) })
}

/// The class attached to a homotopy `A` in the quotient between the images
/// of two MC elements: lift `A` with the given endpoints and integrate the
/// `dt` part of `F(Ã)`, negated.
pub fn homotopy_o1a(
    g: &Dgla,
    h: &CentralIdeal,
    alpha_lift: &[Q],
    beta_lift: &[Q],
    a: &PolyLineForm,
) -> Result<CohomologyClass, DglaError> {
    for v in [alpha_lift, beta_lift] {
        if !is_zero(&mc_residual(g, v)?) {
            return Err(DglaError::Precondition(format!("{} is not Maurer-Cartan", g.render(v))));
        }
    }
    let dim = g.dim();
    let pa =
        PolyLineForm { p: a.p.iter().map(|c| h.section(c)).collect(), q: a.q.iter().map(|c| h.section(c)).collect() };
    if pa.ev0(g) != h.section(alpha_lift) || pa.ev1(g) != h.section(beta_lift) {
        return Err(DglaError::Precondition("homotopy endpoints do not match the lifts".into()));
    }
    // (1 − t)α_h + tβ_h fixes the endpoints
    let (ah, bh) = (h.h_part(alpha_lift), h.h_part(beta_lift));
    let lift = PolyLineForm { p: poly_add(&pa.p, &[ah.clone(), sub(&bh, &ah)], dim), q: pa.q.clone() };
    let f = lift.mc_residual(g)?;
    if !f.p.iter().chain(&f.q).all(|c| h.contains(c)) {
        return Err(DglaError::Precondition("A is not Maurer-Cartan in the quotient".into()));
    }
    // sign chosen so that the line homotopy reproduces o₁^X
    h.class_of(g, scale(&integrate_dt(&f.q, dim), &-Q::one()), 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dgla::Generator;

    fn gen(name: &str, degree: i32, level: u32) -> Generator {
        Generator { name: name.into(), degree, level }
    }

    #[test]
    fn projection_of_t_dt() {
        let c = vec![vec![qi(0)], vec![qi(1)]];
        assert_eq!(integrate_dt(&c, 1), vec![q(1, 2)]);
        let c = vec![vec![qi(3)], vec![qi(0)], vec![qi(6)]];
        assert_eq!(integrate_dt(&c, 1), vec![qi(5)]);
    }

    #[test]
    fn abelian_path() {
        // a → b, abelian; α = b (degree one), X = a
        let g = Dgla::new(vec![gen("a", 0, 1), gen("b", 1, 1), gen("c", 1, 1)], &[(0, 1, qi(1))], &[]).unwrap();
        let alpha = g.unit(2);
        let x = g.unit(0);
        let a = line_homotopy(&g, &alpha, &x).unwrap();
        // (α − t∂X) − X dt
        assert_eq!(a.p, vec![alpha.clone(), scale(&g.unit(1), &-qi(1))]);
        assert_eq!(a.q, vec![scale(&x, &-qi(1))]);
        assert!(a.mc_residual(&g).unwrap().is_zero());
        assert_eq!(a.ev0(&g), alpha);
        assert_eq!(a.ev1(&g), sub(&alpha, &g.unit(1)));
        // +X dt is not MC here
        let plus = PolyLineForm { p: a.p.clone(), q: vec![x] };
        assert!(!plus.mc_residual(&g).unwrap().is_zero());
    }

    #[test]
    fn constant_path() {
        let g = Dgla::new(vec![gen("a", 1, 1)], &[], &[]).unwrap();
        let a = line_homotopy(&g, &g.unit(0), &g.zero()).unwrap();
        assert_eq!(a, PolyLineForm::constant(g.unit(0)));
        assert_eq!(a.t_degree(), 0);
    }
}
