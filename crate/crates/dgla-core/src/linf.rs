//! L∞-morphisms between presentations, stored as graded-antisymmetric
//! multilinear maps on the generator basis.
//!
//! The structure relation checked at arity `n` is
//!
//! ```text
//! ∂Φⁿ(ξ) + (−1)ⁿ/(n−1)! Σ_σ χ(σ) Φⁿ(∂ξ_σ1, ξ_σ2, …)
//!        + 1/(2!(n−2)!) Σ_σ χ(σ) Φⁿ⁻¹([ξ_σ1, ξ_σ2], ξ_σ3, …)
//!        − ½ Σ_{s+t=n} 1/(s!t!) Σ_τ χ(τ) (−1)^{s−1} (−1)^{(t−1)(|ξ_τ1|+…+|ξ_τs|)} [Φˢ(ξ_τ1…), Φᵗ(…ξ_τn)] = 0,
//! ```
//!
//! normalized so that strict DGLA maps satisfy it and the pushforward
//! `Σ (−1)^{k(k−1)/2} Φᵏ(α,…,α)/k!` carries `∂α + ½[α,α] = 0` to itself.

use std::collections::BTreeMap;

use exact_algebra::{qi, Q};
use num_traits::{One, Zero};

use crate::dgla::{add, is_zero, scale, Dgla, Vector};
use crate::signs::{chi_sign_i, permutations};
use crate::DglaError;

fn factorial(k: usize) -> Q {
    (1..=k).fold(Q::one(), |acc, i| acc * Q::from_integer(i.into()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct LInfMorphism {
    source: Dgla,
    target: Dgla,
    cap: usize,
    /// `comps[k−1]` maps nondecreasing index tuples to `Φᵏ` of those generators.
    comps: Vec<BTreeMap<Vec<usize>, Vector>>,
}

impl LInfMorphism {
    /// The zero morphism with components known up to arity `cap`.
    pub fn zero(source: Dgla, target: Dgla, cap: usize) -> Self {
        LInfMorphism { source, target, cap, comps: vec![BTreeMap::new(); cap] }
    }

    /// A strict morphism: `images[j] = Φ¹(e_j)`, all higher components zero
    /// up to the target's top filtration level.
    pub fn strict(source: Dgla, target: Dgla, images: &[Vector]) -> Result<Self, DglaError> {
        if images.len() != source.dim() {
            return Err(DglaError::Length { got: images.len(), dim: source.dim() });
        }
        let cap = (target.max_level() as usize).max(1);
        let mut phi = LInfMorphism::zero(source, target, cap);
        for (j, v) in images.iter().enumerate() {
            phi.set(&[j], v.clone())?;
        }
        Ok(phi)
    }

    pub fn source(&self) -> &Dgla {
        &self.source
    }

    pub fn target(&self) -> &Dgla {
        &self.target
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Set `Φᵏ(e_{args[0]}, …)`; the other orderings follow by χ-antisymmetry.
    pub fn set(&mut self, args: &[usize], value: Vector) -> Result<(), DglaError> {
        let k = args.len();
        if k == 0 || k > self.cap {
            return Err(DglaError::ArityCap { needed: k, cap: self.cap });
        }
        self.target.check_len(&value)?;
        if let Some(&bad) = args.iter().find(|&&a| a >= self.source.dim()) {
            return Err(DglaError::Invalid(format!("generator index {bad} out of range")));
        }
        let deg: i32 = args.iter().map(|&a| self.source.degree(a)).sum::<i32>() + 1 - k as i32;
        self.target.check_degree(&value, deg)?;
        let (sorted, sign) = self.canonical(args);
        if sign == 0 {
            if !is_zero(&value) {
                return Err(DglaError::Invalid("χ-antisymmetry forces this value to vanish".into()));
            }
            return Ok(());
        }
        let v = scale(&value, &qi(sign as i64));
        if is_zero(&v) {
            self.comps[k - 1].remove(&sorted);
        } else {
            self.comps[k - 1].insert(sorted, v);
        }
        Ok(())
    }

    /// Sorted tuple and the χ sign with `Φ(sorted) = sign·Φ(args)`; sign 0
    /// when an even generator repeats.
    fn canonical(&self, args: &[usize]) -> (Vec<usize>, i32) {
        let degs: Vec<i32> = args.iter().map(|&a| self.source.degree(a)).collect();
        let mut sigma: Vec<usize> = (0..args.len()).collect();
        sigma.sort_by_key(|&i| args[i]);
        let sorted: Vec<usize> = sigma.iter().map(|&i| args[i]).collect();
        if sorted.windows(2).any(|w| w[0] == w[1] && self.source.degree(w[0]) % 2 == 0) {
            return (sorted, 0);
        }
        (sorted, chi_sign_i(&sigma, &degs))
    }

    /// `Φᵏ` on generators.
    pub fn component(&self, args: &[usize]) -> Vector {
        let k = args.len();
        if k == 0 || k > self.cap {
            return self.target.zero();
        }
        let (sorted, sign) = self.canonical(args);
        match (sign, self.comps[k - 1].get(&sorted)) {
            (0, _) | (_, None) => self.target.zero(),
            (s, Some(v)) => scale(v, &qi(s as i64)),
        }
    }

    /// `Φᵏ(xs)` by multilinear expansion.
    pub fn apply(&self, xs: &[&[Q]]) -> Result<Vector, DglaError> {
        let k = xs.len();
        if k > self.cap {
            return Err(DglaError::ArityCap { needed: k, cap: self.cap });
        }
        for x in xs {
            self.source.check_len(x)?;
        }
        let supports: Vec<Vec<(usize, &Q)>> =
            xs.iter().map(|x| x.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()).collect();
        let mut out = self.target.zero();
        if k == 0 || supports.iter().any(|s| s.is_empty()) {
            return Ok(out);
        }
        let mut idx = vec![0usize; k];
        loop {
            let args: Vec<usize> = (0..k).map(|p| supports[p][idx[p]].0).collect();
            let c = (0..k).fold(Q::one(), |acc, p| acc * supports[p][idx[p]].1);
            let v = self.component(&args);
            if !is_zero(&v) {
                out = add(&out, &scale(&v, &c));
            }
            let mut p = 0;
            loop {
                if p == k {
                    return Ok(out);
                }
                idx[p] += 1;
                if idx[p] < supports[p].len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
        }
    }

    /// Left-hand side of the arity-`n` structure relation on `xs`.
    pub fn relation_residual(&self, xs: &[Vector]) -> Result<Vector, DglaError> {
        let n = xs.len();
        if n == 0 || n > self.cap {
            return Err(DglaError::ArityCap { needed: n, cap: self.cap });
        }
        let mut degs = Vec::with_capacity(n);
        for x in xs {
            degs.push(self.source.homogeneous_degree(x)?.unwrap_or(0));
        }
        let g = &self.source;
        let h = &self.target;
        let refs: Vec<&[Q]> = xs.iter().map(|x| x.as_slice()).collect();
        let mut out = h.diff(&self.apply(&refs)?);
        let perms = permutations(n);

        let c2 = if n % 2 == 0 { Q::one() } else { -Q::one() } / factorial(n - 1);
        let c3 = if n >= 2 { Q::one() / (qi(2) * factorial(n - 2)) } else { Q::zero() };
        let mut g2 = h.zero();
        let mut g3 = h.zero();
        for sigma in &perms {
            let chi = qi(chi_sign_i(sigma, &degs) as i64);
            let d = g.diff(&xs[sigma[0]]);
            let mut args: Vec<&[Q]> = vec![&d];
            args.extend(sigma[1..].iter().map(|&i| xs[i].as_slice()));
            g2 = add(&g2, &scale(&self.apply(&args)?, &chi));
            if n >= 2 {
                let b = g.bracket(&xs[sigma[0]], &xs[sigma[1]]);
                let mut args: Vec<&[Q]> = vec![&b];
                args.extend(sigma[2..].iter().map(|&i| xs[i].as_slice()));
                g3 = add(&g3, &scale(&self.apply(&args)?, &chi));
            }
        }
        out = add(&out, &scale(&g2, &c2));
        out = add(&out, &scale(&g3, &c3));

        let mut g4 = h.zero();
        for s in 1..n {
            let t = n - s;
            let c = Q::one() / (factorial(s) * factorial(t));
            for tau in &perms {
                let first: i32 = tau[..s].iter().map(|&i| degs[i]).sum();
                let e = (s as i32 - 1) + (t as i32 - 1) * first;
                let sign = chi_sign_i(tau, &degs) * if e.rem_euclid(2) == 0 { 1 } else { -1 };
                let left: Vec<&[Q]> = tau[..s].iter().map(|&i| xs[i].as_slice()).collect();
                let right: Vec<&[Q]> = tau[s..].iter().map(|&i| xs[i].as_slice()).collect();
                let a = self.apply(&left)?;
                if is_zero(&a) {
                    continue;
                }
                let b = self.apply(&right)?;
                g4 = add(&g4, &scale(&h.bracket(&a, &b), &(&c * qi(sign as i64))));
            }
        }
        Ok(add(&out, &scale(&g4, &Q::new((-1).into(), 2.into()))))
    }

    /// The relation on every tuple of generators up to arity `n`, stopping at
    /// the first failure.
    pub fn check_relations(&self, n: usize) -> Result<Option<Vec<usize>>, DglaError> {
        let dim = self.source.dim();
        for k in 1..=n {
            let mut tuple = vec![0usize; k];
            loop {
                let xs: Vec<Vector> = tuple.iter().map(|&i| self.source.unit(i)).collect();
                if !is_zero(&self.relation_residual(&xs)?) {
                    return Ok(Some(tuple));
                }
                // nondecreasing tuples suffice by χ-symmetry of the relation
                let Some(p) = (0..k).rev().find(|&p| tuple[p] + 1 < dim) else { break };
                tuple[p] += 1;
                for q in p + 1..k {
                    tuple[q] = tuple[p];
                }
            }
        }
        Ok(None)
    }

    /// `Σ_{k≥1} (−1)^{k(k−1)/2} Φᵏ(α,…,α)/k!`. Terms past the target's top
    /// filtration level vanish, so the cap must reach it.
    pub fn pushforward(&self, alpha: &[Q]) -> Result<Vector, DglaError> {
        self.source.check_degree(alpha, 1)?;
        let needed = self.target.max_level() as usize;
        if self.cap < needed {
            return Err(DglaError::ArityCap { needed, cap: self.cap });
        }
        let mut out = self.target.zero();
        for k in 1..=self.cap {
            let args: Vec<&[Q]> = vec![alpha; k];
            let v = self.apply(&args)?;
            let sign = if (k * (k - 1) / 2) % 2 == 0 { Q::one() } else { -Q::one() };
            out = add(&out, &scale(&v, &(sign / factorial(k))));
        }
        Ok(out)
    }
}
