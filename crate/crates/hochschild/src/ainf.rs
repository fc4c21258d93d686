use exact_algebra::{ExtElement, Side, Q};
use num_traits::One;

use crate::cochain::all_tuples;
use crate::ops::{bracket_eval, diff_eval, eval_multilinear};
use crate::{deg, Cochain, HochError};

/// Where a structure came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Transferred,
    FromMc,
    StaticTable,
    Strict,
}

/// A family of operations `μ^d(a_d, …, a₁)` on `Λ(V)` in the native sign
/// convention, evaluated on basis tuples.
pub trait AInfStructure {
    fn n(&self) -> usize;
    fn mu(&self, args: &[u16]) -> ExtElement;
    fn provenance(&self) -> Provenance;
}

fn wedge_mu2(n: usize, a2: u16, a1: u16) -> ExtElement {
    let v = ExtElement::basis(Side::V, n, a2).wedge(&ExtElement::basis(Side::V, n, a1)).expect("same side");
    if deg(a1) == 1 {
        v.scale(&-Q::one())
    } else {
        v
    }
}

/// The exterior algebra with `μ² = (−1)^{|a₁|} a₂ a₁` and nothing else.
#[derive(Clone, Debug)]
pub struct Strict {
    pub n: usize,
}

impl AInfStructure for Strict {
    fn n(&self) -> usize {
        self.n
    }

    fn mu(&self, args: &[u16]) -> ExtElement {
        if args.len() == 2 {
            wedge_mu2(self.n, args[0], args[1])
        } else {
            ExtElement::zero(Side::V, self.n)
        }
    }

    fn provenance(&self) -> Provenance {
        Provenance::Strict
    }
}

/// The structure attached to a Maurer-Cartan cochain: `μ^j = α^j` for
/// `j ≥ 3`, `μ²` the signed wedge, `μ¹ = 0`.
#[derive(Clone, Debug)]
pub struct FromMc {
    pub alpha: Cochain,
}

impl AInfStructure for FromMc {
    fn n(&self) -> usize {
        self.alpha.n()
    }

    fn mu(&self, args: &[u16]) -> ExtElement {
        match args.len() {
            0 | 1 => ExtElement::zero(Side::V, self.n()),
            2 => wedge_mu2(self.n(), args[0], args[1]),
            _ => self.alpha.eval(args),
        }
    }

    fn provenance(&self) -> Provenance {
        Provenance::FromMc
    }
}

/// Check the degree profile (arities `≥ 3`, shifted degree 1) and wrap.
pub fn ainf_from_mc(alpha: &Cochain) -> Result<FromMc, HochError> {
    if !alpha.has_profile(1, 3) {
        let arity = alpha.arities().find(|&a| a < 3).unwrap_or(alpha.max_arity());
        return Err(HochError::DegreeProfile { arity, expected: "arity >= 3 and Hom-degree 2 - arity" });
    }
    Ok(FromMc { alpha: alpha.clone() })
}

/// Tabulate `α^j = μ^j` for `3 ≤ j ≤ max_arity` on all basis tuples.
pub fn mc_from_ainf(mu: &dyn AInfStructure, max_arity: usize) -> Cochain {
    let n = mu.n();
    let mut c = Cochain::zero(n);
    for j in 3..=max_arity {
        for t in all_tuples(n, j) {
            let v = mu.mu(&t);
            if !v.is_zero() {
                c.set(t, v);
            }
        }
    }
    c
}

/// Arity-`d` component of `∂α + ½[α, α]` at `args`, where `α` is the part
/// of `μ` of arity at least 3. Zero for every tuple exactly when the
/// operations satisfy the A∞ relations (with the signed wedge as `μ²`).
pub fn ainf_residual(mu: &dyn AInfStructure, args: &[u16]) -> ExtElement {
    let n = mu.n();
    let alpha = |t: &[u16]| if t.len() >= 3 { mu.mu(t) } else { ExtElement::zero(Side::V, n) };
    let d = diff_eval(n, &alpha, 1, args);
    let b = bracket_eval(n, &alpha, 1, &alpha, 1, args);
    d.add(&b.scale(&exact_algebra::q(1, 2)))
}

/// Standard-convention operations `m_j = (−1)^{|a₁| + 2|a₂| + ⋯ + j|a_j|} μ^j`.
pub struct StandardForm<'a> {
    pub base: &'a dyn AInfStructure,
}

/// Wrap a structure in the standard sign convention.
pub fn sign_convert(mu: &dyn AInfStructure) -> StandardForm<'_> {
    StandardForm { base: mu }
}

impl StandardForm<'_> {
    pub fn sign(args: &[u16]) -> bool {
        let j = args.len();
        let e: u32 = args.iter().enumerate().map(|(pos, &a)| (j - pos) as u32 * deg(a)).sum();
        e % 2 == 1
    }

    pub fn m(&self, args: &[u16]) -> ExtElement {
        let v = self.base.mu(args);
        if Self::sign(args) {
            v.scale(&-Q::one())
        } else {
            v
        }
    }
}

/// Classical Stasheff relation for the standard-convention operations,
/// reading `m_d(x₁, …, x_d)` with `x₁ = a_d`:
/// `Σ (−1)^{r + st} m_{r+1+t}(x₁, …, x_r, m_s(x_{r+1}, …), …)`, where the
/// inner operation also picks up `(−1)^{s·(|x₁| + ⋯ + |x_r|)}` from passing
/// the first `r` arguments.
pub fn stasheff_residual_standard(mu: &dyn AInfStructure, args: &[u16]) -> ExtElement {
    let n = mu.n();
    let std = sign_convert(mu);
    let m = |t: &[u16]| std.m(t);
    let d = args.len();
    let mut out = ExtElement::zero(Side::V, n);
    for s in 1..=d {
        for r in 0..=(d - s) {
            let t = d - r - s;
            let inner = m(&args[r..r + s]);
            if inner.is_zero() {
                continue;
            }
            let passed: u32 = args[..r].iter().map(|&a| deg(a)).sum();
            let e = r as u32 + (s as u32) * (t as u32) + (s as u32) * passed;
            let mut xs: Vec<ExtElement> = args[..r].iter().map(|&a| ExtElement::basis(Side::V, n, a)).collect();
            xs.push(inner);
            xs.extend(args[r + s..].iter().map(|&a| ExtElement::basis(Side::V, n, a)));
            let v = eval_multilinear(n, &m, &xs);
            out = if e % 2 == 0 { out.add(&v) } else { out.sub(&v) };
        }
    }
    out
}

/// A structure with one output value changed.
pub struct Corrupted<'a> {
    pub base: &'a dyn AInfStructure,
    pub tuple: Vec<u16>,
    pub delta: ExtElement,
}

pub fn corrupted<'a>(base: &'a dyn AInfStructure, tuple: Vec<u16>, delta: ExtElement) -> Corrupted<'a> {
    Corrupted { base, tuple, delta }
}

impl AInfStructure for Corrupted<'_> {
    fn n(&self) -> usize {
        self.base.n()
    }

    fn mu(&self, args: &[u16]) -> ExtElement {
        let v = self.base.mu(args);
        if args == self.tuple.as_slice() {
            v.add(&self.delta)
        } else {
            v
        }
    }

    fn provenance(&self) -> Provenance {
        self.base.provenance()
    }
}
