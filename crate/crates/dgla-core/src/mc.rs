use exact_algebra::{q, Q};
use num_traits::One;

use crate::dgla::{add, is_zero, scale, sub, Dgla, Vector};
use crate::DglaError;

/// `∂α + ½[α, α]`.
pub fn mc_residual(g: &Dgla, alpha: &[Q]) -> Result<Vector, DglaError> {
    g.check_degree(alpha, 1)?;
    Ok(add(&g.diff(alpha), &scale(&g.bracket(alpha, alpha), &q(1, 2))))
}

pub fn is_mc(g: &Dgla, alpha: &[Q]) -> Result<bool, DglaError> {
    Ok(is_zero(&mc_residual(g, alpha)?))
}

/// A degree-one element together with the claim that it is Maurer-Cartan.
#[derive(Clone, Debug, PartialEq)]
pub struct McElement(Vector);

impl McElement {
    pub fn new(g: &Dgla, alpha: Vector) -> Result<McElement, DglaError> {
        if !is_mc(g, &alpha)? {
            return Err(DglaError::Precondition(format!("{} is not Maurer-Cartan", g.render(&alpha))));
        }
        Ok(McElement(alpha))
    }

    pub fn element(&self) -> &Vector {
        &self.0
    }

    pub fn into_inner(self) -> Vector {
        self.0
    }
}

/// `Σ_k ad_γ^k(v) c_k` until the powers vanish.
fn ad_series(g: &Dgla, gamma: &[Q], v: &[Q], coeff: impl Fn(usize) -> Q) -> Result<Vector, DglaError> {
    let mut out = g.zero();
    let mut term = v.to_vec();
    for k in 0..=g.dim() + 1 {
        if is_zero(&term) {
            return Ok(out);
        }
        out = add(&out, &scale(&term, &coeff(k)));
        term = g.bracket(gamma, &term);
    }
    Err(DglaError::NotNilpotent)
}

fn factorial(k: usize) -> Q {
    (1..=k).fold(Q::one(), |acc, i| acc * Q::from_integer(i.into()))
}

/// `exp(ad_γ)(v)`.
pub fn exp_ad(g: &Dgla, gamma: &[Q], v: &[Q]) -> Result<Vector, DglaError> {
    if !g.is_nilpotent() {
        return Err(DglaError::NotNilpotent);
    }
    ad_series(g, gamma, v, |k| Q::one() / factorial(k))
}

/// Time-one flow of `α ↦ −∂γ + [γ, α]`:
/// `Σ ad_γ^k(α)/k! − Σ ad_γ^k(∂γ)/(k+1)!`.
pub fn gauge_flow(g: &Dgla, gamma: &[Q], alpha: &[Q]) -> Result<Vector, DglaError> {
    if !g.is_nilpotent() {
        return Err(DglaError::NotNilpotent);
    }
    g.check_degree(gamma, 0)?;
    g.check_degree(alpha, 1)?;
    let a = ad_series(g, gamma, alpha, |k| Q::one() / factorial(k))?;
    let b = ad_series(g, gamma, &g.diff(gamma), |k| Q::one() / factorial(k + 1))?;
    Ok(sub(&a, &b))
}

/// Gauge action on a certified MC element.
pub fn gauge_act(g: &Dgla, gamma: &[Q], alpha: &McElement) -> Result<McElement, DglaError> {
    Ok(McElement(gauge_flow(g, gamma, alpha.element())?))
}

/// Compositions `(r_1, s_1, …, r_n, s_n)` with every pair nonzero and total
/// length at most `max`.
fn dynkin_words(n: usize, max: usize, prefix: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
    let used: usize = prefix.iter().map(|(r, s)| r + s).sum();
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for r in 0..=max - used {
        for s in 0..=max - used - r {
            if r + s == 0 {
                continue;
            }
            prefix.push((r, s));
            dynkin_words(n, max, prefix, out);
            prefix.pop();
        }
    }
}

/// `log(exp(X) exp(Y))` by Dynkin's formula, truncated at the nilpotency
/// class. Both arguments must have degree zero.
pub fn bch(g: &Dgla, x: &[Q], y: &[Q]) -> Result<Vector, DglaError> {
    let class = g.nilpotency_class().ok_or(DglaError::NotNilpotent)?;
    g.check_degree(x, 0)?;
    g.check_degree(y, 0)?;
    // words of length ≥ class are brackets of ≥ class elements
    let max = class.saturating_sub(1).max(1);
    let mut out = g.zero();
    for n in 1..=max {
        let mut words = Vec::new();
        dynkin_words(n, max, &mut Vec::new(), &mut words);
        let sign = if n % 2 == 1 { Q::one() } else { -Q::one() };
        for w in words {
            let letters: Vec<&[Q]> =
                w.iter().flat_map(|&(r, s)| std::iter::repeat(x).take(r).chain(std::iter::repeat(y).take(s))).collect();
            let total = letters.len();
            // right-nested bracket [l_1, [l_2, … [l_{m−1}, l_m]]]
            let mut v = letters[total - 1].to_vec();
            for l in letters[..total - 1].iter().rev() {
                if is_zero(&v) {
                    break;
                }
                v = g.bracket(l, &v);
            }
            if is_zero(&v) {
                continue;
            }
            let denom = w.iter().fold(Q::from_integer(total.into()) * Q::from_integer(n.into()), |acc, &(r, s)| {
                acc * factorial(r) * factorial(s)
            });
            out = add(&out, &scale(&v, &(&sign / denom)));
        }
    }
    Ok(out)
}
