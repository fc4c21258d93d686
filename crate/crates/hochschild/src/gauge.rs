use std::collections::HashMap;

use exact_algebra::{ExtElement, Side, Q};
use num_traits::One;

use crate::ainf::AInfStructure;
use crate::ops::{bracket_eval, eval_multilinear};
use crate::{deg, Cochain, HochError};

/// The components `φʲ` generated by a degree-0 cochain `γ` (arities `≥ 2`).
///
/// `φ¹ = id`; `φʲ` sums every way of nesting components of `γ` into a
/// `j`-linear map. A nesting with `r` components has coefficient `s/r!`,
/// `s` the number of orderings of the components in which each one comes
/// after all components plugged into it. For a rooted tree that count is
/// `r!/Π_v size(v)`, so the coefficient is `1/Π_v size(v)` over subtree
/// sizes, which the recursion below accumulates one level at a time.
pub struct GaugeMorphism {
    gamma: Cochain,
    cap: usize,
}

pub fn gauge_phi(gamma: &Cochain, cap: usize) -> Result<GaugeMorphism, HochError> {
    if !gamma.has_profile(0, 2) {
        return Err(HochError::DegreeProfile {
            arity: gamma.max_arity(),
            expected: "arity >= 2 and Hom-degree 1 - arity",
        });
    }
    Ok(GaugeMorphism { gamma: gamma.clone(), cap })
}

impl GaugeMorphism {
    pub fn n(&self) -> usize {
        self.gamma.n()
    }

    /// `φʲ(a_j, …, a₁)` on basis arguments.
    pub fn phi(&self, args: &[u16]) -> Result<ExtElement, HochError> {
        if args.len() > self.cap {
            return Err(HochError::CapExceeded { needed: args.len(), cap: self.cap });
        }
        let n = self.n();
        if args.len() == 1 {
            return Ok(ExtElement::basis(Side::V, n, args[0]));
        }
        let mut memo = HashMap::new();
        let mut total = ExtElement::zero(Side::V, n);
        for c in 1..args.len() {
            total = total.add(&self.trees(args, 0, args.len(), c, &mut memo));
        }
        Ok(total)
    }

    /// Weighted sum over nestings on `args[lo..hi]` using exactly `c`
    /// components.
    fn trees(
        &self,
        args: &[u16],
        lo: usize,
        hi: usize,
        c: usize,
        memo: &mut HashMap<(usize, usize, usize), ExtElement>,
    ) -> ExtElement {
        let n = self.n();
        if let Some(v) = memo.get(&(lo, hi, c)) {
            return v.clone();
        }
        let mut total = ExtElement::zero(Side::V, n);
        if c == 0 {
            if hi - lo == 1 {
                total = ExtElement::basis(Side::V, n, args[lo]);
            }
        } else {
            let inv = Q::from_integer((c as i64).into()).recip();
            for m in self.gamma.arities() {
                if m > hi - lo {
                    continue;
                }
                let mut slots = Vec::new();
                self.fill(args, lo, hi, m, c - 1, &mut slots, &mut total, memo);
            }
            total = total.scale(&inv);
        }
        memo.insert((lo, hi, c), total.clone());
        total
    }

    /// Split `args[lo..hi]` into `m` consecutive slots, each either a single
    /// argument or a nested tree, using `c` components in total.
    #[allow(clippy::too_many_arguments)]
    fn fill(
        &self,
        args: &[u16],
        lo: usize,
        hi: usize,
        m: usize,
        c: usize,
        slots: &mut Vec<ExtElement>,
        total: &mut ExtElement,
        memo: &mut HashMap<(usize, usize, usize), ExtElement>,
    ) {
        let n = self.n();
        if m == 0 {
            if lo == hi && c == 0 {
                let g = |t: &[u16]| self.gamma.eval(t);
                *total = total.add(&eval_multilinear(n, &g, slots));
            }
            return;
        }
        if hi - lo < m {
            return;
        }
        for end in lo + 1..=hi - (m - 1) {
            for used in 0..=c {
                let v = self.trees(args, lo, end, used, memo);
                if v.is_zero() {
                    continue;
                }
                slots.push(v);
                self.fill(args, end, hi, m - 1, c - used, slots, total, memo);
                slots.pop();
            }
        }
    }
}

/// `exp(γ)(α)` in the Hochschild DGLA, truncated at arity `cap`: the time-one
/// flow of `α ↦ −∂γ + [γ, α]`, `Σ_k (ad_γ)^k(α)/k! − Σ_k (ad_γ)^k(∂γ)/(k+1)!`.
pub fn gauge_action(gamma: &Cochain, alpha: &Cochain, cap: usize) -> Result<Cochain, HochError> {
    let dg = crate::ops::hoch_diff(gamma, cap + 1)?;
    let dg = trim(&dg, cap);
    let mut out = alpha.clone();
    let mut cur_a = alpha.clone();
    let mut cur_d = dg.clone();
    out = out.sub(&dg);
    let mut fact = Q::one();
    for k in 1.. {
        cur_a = trim(&bracket_capped(gamma, &cur_a, cap)?, cap);
        cur_d = trim(&bracket_capped(gamma, &cur_d, cap)?, cap);
        if cur_a.is_zero() && cur_d.is_zero() {
            break;
        }
        fact *= Q::from_integer((k as i64).into());
        let next_fact = &fact * Q::from_integer((k as i64 + 1).into());
        out = out.add(&cur_a.scale(&fact.recip())).sub(&cur_d.scale(&next_fact.recip()));
    }
    Ok(out)
}

fn trim(c: &Cochain, cap: usize) -> Cochain {
    let mut r = Cochain::zero(c.n());
    for (t, v) in c.entries() {
        if t.len() <= cap {
            r.set(t.clone(), v.clone());
        }
    }
    r
}

fn bracket_capped(a: &Cochain, b: &Cochain, cap: usize) -> Result<Cochain, HochError> {
    let n = a.n();
    if a.is_zero() || b.is_zero() {
        return Ok(Cochain::zero(n));
    }
    let pa = a.parity().ok_or(HochError::Inhomogeneous)?;
    let pb = b.parity().ok_or(HochError::Inhomogeneous)?;
    let mut out = Cochain::zero(n);
    let mut arities: Vec<usize> = Vec::new();
    for x in a.arities() {
        for y in b.arities() {
            if x + y - 1 <= cap {
                arities.push(x + y - 1);
            }
        }
    }
    arities.sort();
    arities.dedup();
    let f = |t: &[u16]| a.eval(t);
    let g = |t: &[u16]| b.eval(t);
    for j in arities {
        for t in crate::all_tuples(n, j) {
            let v = bracket_eval(n, &f, pa, &g, pb, &t);
            if !v.is_zero() {
                out.add_entry(t, &v);
            }
        }
    }
    Ok(out)
}

/// Native-convention A∞-morphism equation for `φ : (A, μ) → (A, ν)`:
/// `Σ ν^r(φ^{s_r}(…), …, φ^{s_1}(…)) − Σ (−1)^{✠_k} φ(…, μ^l(…), …)` with
/// `✠_k = |a₁| + ⋯ + |a_k| − k`. Components of `φ` have shifted degree 0,
/// so no further signs appear.
pub fn morphism_residual(
    phi: &dyn Fn(&[u16]) -> ExtElement,
    mu: &dyn AInfStructure,
    nu: &dyn AInfStructure,
    args: &[u16],
) -> ExtElement {
    let n = mu.n();
    let d = args.len();
    let mut lhs = ExtElement::zero(Side::V, n);
    // compositions of d into r ordered blocks, left to right
    fn blocks(d: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let used: usize = prefix.iter().sum();
        if used == d {
            out.push(prefix.clone());
            return;
        }
        for s in 1..=(d - used) {
            prefix.push(s);
            blocks(d, prefix, out);
            prefix.pop();
        }
    }
    let mut all = Vec::new();
    blocks(d, &mut Vec::new(), &mut all);
    for split in all {
        if split.len() < 2 {
            continue;
        }
        let mut xs = Vec::new();
        let mut pos = 0;
        for s in &split {
            xs.push(phi(&args[pos..pos + s]));
            pos += s;
        }
        let nu_f = |t: &[u16]| nu.mu(t);
        lhs = lhs.add(&eval_multilinear(n, &nu_f, &xs));
    }
    let mut rhs = ExtElement::zero(Side::V, n);
    for l in 2..=d {
        let mut partial: i64 = 0;
        for k in 0..=(d - l) {
            if k > 0 {
                partial += deg(args[d - k]) as i64 - 1;
            }
            let inner = mu.mu(&args[d - k - l..d - k]);
            if inner.is_zero() {
                continue;
            }
            let mut xs: Vec<ExtElement> = args[..d - k - l].iter().map(|&m| ExtElement::basis(Side::V, n, m)).collect();
            xs.push(inner);
            xs.extend(args[d - k..].iter().map(|&m| ExtElement::basis(Side::V, n, m)));
            let v = eval_multilinear(n, phi, &xs);
            rhs = if partial.rem_euclid(2) == 0 { rhs.add(&v) } else { rhs.sub(&v) };
        }
    }
    lhs.sub(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::{q, qi};

    fn xi(n: usize, m: u16) -> ExtElement {
        ExtElement::basis(Side::V, n, m)
    }

    fn sample_gamma2(n: usize) -> Cochain {
        let mut g = Cochain::zero(n);
        // Hom-degree −1 entries
        g.set(vec![1, 2], xi(n, 1).scale(&qi(2)));
        g.set(vec![3, 1], xi(n, 3));
        g.set(vec![2, 3], xi(n, 3).scale(&qi(-1)).add(&xi(n, 0)));
        g.set(vec![1, 1], xi(n, 2).scale(&qi(3)));
        g
    }

    #[test]
    fn zero_gamma_is_identity() {
        let phi = gauge_phi(&Cochain::zero(2), 4).unwrap();
        assert_eq!(phi.phi(&[3]).unwrap(), xi(2, 3));
        for t in crate::all_tuples(2, 3) {
            assert!(phi.phi(&t).unwrap().is_zero());
        }
    }

    #[test]
    fn arity_three_and_four_coefficients() {
        let n = 2;
        let g = sample_gamma2(n);
        assert!(g.has_profile(0, 2));
        let phi = gauge_phi(&g, 4).unwrap();
        let ev = |xs: &[ExtElement]| eval_multilinear(n, &|t: &[u16]| g.eval(t), xs);
        let e = |m: u16| xi(n, m);
        for t in crate::all_tuples(n, 3) {
            let (a, b, c) = (t[0], t[1], t[2]);
            let left = ev(&[ev(&[e(a), e(b)]), e(c)]);
            let right = ev(&[e(a), ev(&[e(b), e(c)])]);
            let expected = left.add(&right).scale(&q(1, 2));
            assert_eq!(phi.phi(&t).unwrap(), expected);
        }
        for t in crate::all_tuples(n, 4) {
            let x: Vec<ExtElement> = t.iter().map(|&m| e(m)).collect();
            let balanced = ev(&[ev(&[x[0].clone(), x[1].clone()]), ev(&[x[2].clone(), x[3].clone()])]);
            let chains = [
                ev(&[ev(&[ev(&[x[0].clone(), x[1].clone()]), x[2].clone()]), x[3].clone()]),
                ev(&[ev(&[x[0].clone(), ev(&[x[1].clone(), x[2].clone()])]), x[3].clone()]),
                ev(&[x[0].clone(), ev(&[ev(&[x[1].clone(), x[2].clone()]), x[3].clone()])]),
                ev(&[x[0].clone(), ev(&[x[1].clone(), ev(&[x[2].clone(), x[3].clone()])])]),
            ];
            let mut expected = balanced.scale(&q(1, 3));
            for ch in &chains {
                expected = expected.add(&ch.scale(&q(1, 6)));
            }
            assert_eq!(phi.phi(&t).unwrap(), expected);
        }
    }

    #[test]
    fn higher_components_enter_linearly() {
        let n = 2;
        let mut g = Cochain::zero(n);
        g.set(vec![1, 2, 3], xi(n, 0).scale(&qi(5)));
        let phi = gauge_phi(&g, 3).unwrap();
        assert_eq!(phi.phi(&[1, 2, 3]).unwrap(), xi(n, 0).scale(&qi(5)));
        assert!(matches!(phi.phi(&[1, 2, 3, 0]), Err(HochError::CapExceeded { needed: 4, cap: 3 })));
    }

    #[test]
    fn wrong_profile_is_rejected() {
        let mut g = Cochain::zero(2);
        g.set(vec![1, 2], xi(2, 3));
        assert!(gauge_phi(&g, 3).is_err());
    }
}
