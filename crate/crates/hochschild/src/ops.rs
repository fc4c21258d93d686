use exact_algebra::linalg::{solve, Matrix};
use exact_algebra::{ExtElement, Side, Q};
use num_traits::{One, Zero};

use crate::cochain::all_tuples;
use crate::{deg, Cochain, HochError};

fn sign(e: u32) -> Q {
    if e % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Extend a map on basis tuples multilinearly to arbitrary arguments.
pub fn eval_multilinear<F: Fn(&[u16]) -> ExtElement + ?Sized>(n: usize, f: &F, args: &[ExtElement]) -> ExtElement {
    fn rec<F: Fn(&[u16]) -> ExtElement + ?Sized>(
        f: &F,
        args: &[ExtElement],
        prefix: &mut Vec<u16>,
        coeff: Q,
        acc: &mut ExtElement,
    ) {
        if prefix.len() == args.len() {
            let v = f(prefix);
            if !v.is_zero() {
                *acc = acc.add(&v.scale(&coeff));
            }
            return;
        }
        let i = prefix.len();
        for (m, c) in args[i].terms() {
            prefix.push(m);
            rec(f, args, prefix, &coeff * c, acc);
            prefix.pop();
        }
    }
    let mut acc = ExtElement::zero(Side::V, n);
    if args.iter().any(|a| a.is_zero()) {
        return acc;
    }
    rec(f, args, &mut Vec::with_capacity(args.len()), Q::one(), &mut acc);
    acc
}

fn basis(n: usize, m: u16) -> ExtElement {
    ExtElement::basis(Side::V, n, m)
}

/// `(∂φ)^j(a_j, …, a₁)` for `φ` of shifted parity `p`, evaluated on basis
/// arguments.
pub fn diff_eval<F: Fn(&[u16]) -> ExtElement + ?Sized>(n: usize, phi: &F, p: u32, args: &[u16]) -> ExtElement {
    let j = args.len();
    let mut out = ExtElement::zero(Side::V, n);
    if j == 0 {
        return out;
    }
    // a_i for 1-based i counted from the right
    let a = |i: usize| args[j - i];
    let mut partial = 0u32;
    for k in 1..j {
        partial += deg(a(k));
        let prod = basis(n, a(k + 1)).wedge(&basis(n, a(k))).expect("same side");
        if prod.is_zero() {
            continue;
        }
        let mut xs: Vec<ExtElement> = args[..j - k - 1].iter().map(|&m| basis(n, m)).collect();
        xs.push(prod);
        xs.extend(args[j - k + 1..].iter().map(|&m| basis(n, m)));
        let v = eval_multilinear(n, phi, &xs);
        out = out.add(&v.scale(&sign(p + partial + k as u32)));
    }
    let below: u32 = (1..j).map(|i| deg(a(i))).sum();
    let left = basis(n, a(j)).wedge(&phi(&args[1..])).expect("same side");
    out = out.add(&left.scale(&sign(p + below + j as u32)));
    let right = phi(&args[..j - 1]).wedge(&basis(n, a(1))).expect("same side");
    let e = (p + 1) * (deg(a(1)) + 1) + 1;
    out.add(&right.scale(&sign(e)))
}

/// `[φ, ψ]^j(a_j, …, a₁)` for parities `p = |φ|`, `q = |ψ|`.
pub fn bracket_eval<F, G>(n: usize, phi: &F, p: u32, psi: &G, q: u32, args: &[u16]) -> ExtElement
where
    F: Fn(&[u16]) -> ExtElement + ?Sized,
    G: Fn(&[u16]) -> ExtElement + ?Sized,
{
    let half = insertions(n, phi, psi, q, args, 0);
    let other = insertions(n, psi, phi, p, args, p * q);
    half.sub(&other)
}

/// `Σ_{k,l} (−1)^{base + inner·(|a₁|+⋯+|a_k| − k)} outer(…, inner(…), …)`.
fn insertions<F, G>(n: usize, outer: &F, inner: &G, inner_parity: u32, args: &[u16], base: u32) -> ExtElement
where
    F: Fn(&[u16]) -> ExtElement + ?Sized,
    G: Fn(&[u16]) -> ExtElement + ?Sized,
{
    let j = args.len();
    let mut out = ExtElement::zero(Side::V, n);
    for l in 0..=j {
        let mut partial: i64 = 0;
        for k in 0..=(j - l) {
            if k > 0 {
                partial += deg(args[j - k]) as i64 - 1;
            }
            // inner acts on a_{k+l}, …, a_{k+1}: slice [j-k-l, j-k)
            let v = inner(&args[j - k - l..j - k]);
            if v.is_zero() {
                continue;
            }
            let mut xs: Vec<ExtElement> = args[..j - k - l].iter().map(|&m| basis(n, m)).collect();
            xs.push(v);
            xs.extend(args[j - k..].iter().map(|&m| basis(n, m)));
            let w = eval_multilinear(n, outer, &xs);
            let e = (base as i64 + inner_parity as i64 * partial).rem_euclid(2) as u32;
            out = out.add(&w.scale(&sign(e)));
        }
    }
    out
}

/// Hochschild differential on a parity-homogeneous cochain, up to output
/// arity `cap`.
pub fn hoch_diff(phi: &Cochain, cap: usize) -> Result<Cochain, HochError> {
    let n = phi.n();
    let needed = phi.max_arity() + 1;
    if !phi.is_zero() && needed > cap {
        return Err(HochError::CapExceeded { needed, cap });
    }
    let (even, odd) = phi.split_parity();
    let mut out = Cochain::zero(n);
    for (part, p) in [(even, 0), (odd, 1)] {
        if part.is_zero() {
            continue;
        }
        let arities: Vec<usize> = part.arities().map(|a| a + 1).collect();
        let f = |a: &[u16]| part.eval(a);
        for j in arities {
            for t in all_tuples(n, j) {
                let v = diff_eval(n, &f, p, &t);
                if !v.is_zero() {
                    out.add_entry(t, &v);
                }
            }
        }
    }
    Ok(out)
}

/// Gerstenhaber bracket of two cochains, bilinear in their homogeneous
/// parts, up to output arity `cap`.
pub fn gerstenhaber(phi: &Cochain, psi: &Cochain, cap: usize) -> Result<Cochain, HochError> {
    let n = phi.n();
    if phi.is_zero() || psi.is_zero() {
        return Ok(Cochain::zero(n));
    }
    let needed = phi.max_arity() + psi.max_arity() - 1;
    if needed > cap {
        return Err(HochError::CapExceeded { needed, cap });
    }
    let (pe, po) = phi.split_parity();
    let (qe, qo) = psi.split_parity();
    let mut out = Cochain::zero(n);
    for (a, p) in [(&pe, 0), (&po, 1)] {
        for (b, q) in [(&qe, 0), (&qo, 1)] {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let mut arities: Vec<usize> = Vec::new();
            for x in a.arities() {
                for y in b.arities() {
                    arities.push(x + y - 1);
                    arities.push(y + x - 1);
                }
            }
            arities.sort();
            arities.dedup();
            let f = |t: &[u16]| a.eval(t);
            let g = |t: &[u16]| b.eval(t);
            for j in arities {
                for t in all_tuples(n, j) {
                    let v = bracket_eval(n, &f, p, &g, q, &t);
                    if !v.is_zero() {
                        out.add_entry(t, &v);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `μ²(a₂, a₁) = (−1)^{|a₁|} a₂ a₁` as an arity-2 cochain.
pub fn product_cochain(n: usize) -> Cochain {
    let mut c = Cochain::zero(n);
    for t in all_tuples(n, 2) {
        let v = basis(n, t[0]).wedge(&basis(n, t[1])).expect("same side").scale(&sign(deg(t[1])));
        c.set(t, v);
    }
    c
}

/// A cochain `φ` concentrated in arity `arity − 1` with `(∂φ)^{arity}` equal
/// to the arity-`arity` part of `target`, by exact linear solve over the
/// tuple basis. `parity` is the shifted parity of `φ`.
pub fn solve_primitive(target: &Cochain, arity: usize, parity: u32) -> Option<Cochain> {
    let n = target.n();
    let dim = 1u16 << n;
    let src = all_tuples(n, arity - 1);
    // unknowns: (tuple, out mask) with the requested parity
    let unknowns: Vec<(Vec<u16>, u16)> = src
        .iter()
        .flat_map(|t| (0..dim).map(move |m| (t.clone(), m)))
        .filter(|(t, m)| Cochain::entry_parity(t, *m) == parity)
        .collect();
    let rows_t = all_tuples(n, arity);
    let row_index = |t: &[u16], m: u16| -> usize {
        let mut idx = 0usize;
        for &a in t {
            idx = idx * dim as usize + a as usize;
        }
        idx * dim as usize + m as usize
    };
    let nrows = rows_t.len() * dim as usize;
    let mut a: Matrix = vec![vec![Q::zero(); unknowns.len()]; nrows];
    for (col, (t, m)) in unknowns.iter().enumerate() {
        let mut phi = Cochain::zero(n);
        phi.set(t.clone(), basis(n, *m));
        let f = |x: &[u16]| phi.eval(x);
        for r in &rows_t {
            let v = diff_eval(n, &f, parity, r);
            for (mm, c) in v.terms() {
                a[row_index(r, mm)][col] = c.clone();
            }
        }
    }
    let mut b = vec![Q::zero(); nrows];
    for r in &rows_t {
        for (mm, c) in target.eval(r).terms() {
            b[row_index(r, mm)] = c.clone();
        }
    }
    let x = solve(&a, &b)?;
    let mut phi = Cochain::zero(n);
    for ((t, m), c) in unknowns.into_iter().zip(x) {
        if !c.is_zero() {
            phi.add_entry(t, &ExtElement::term(Side::V, n, m, c));
        }
    }
    Some(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::qi;

    fn xi(n: usize, m: u16) -> ExtElement {
        basis(n, m)
    }

    /// Even derivation of `Λ(V)` extending `ξ_i ↦ Σ_j m[i][j] ξ_j`.
    fn derivation(n: usize, m: &[Vec<i64>]) -> Cochain {
        let mut c = Cochain::zero(n);
        for mask in 0..(1u16 << n) {
            let mut v = ExtElement::zero(Side::V, n);
            let gens: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
            for (pos, &i) in gens.iter().enumerate() {
                let mut image = ExtElement::zero(Side::V, n);
                for (j, &c) in m[i].iter().enumerate() {
                    image = image.add(&xi(n, 1 << j).scale(&qi(c)));
                }
                let mut prod = ExtElement::scalar(Side::V, n, Q::one());
                for (q, &k) in gens.iter().enumerate() {
                    let f = if q == pos { image.clone() } else { xi(n, 1 << k) };
                    prod = prod.wedge(&f).unwrap();
                }
                v = v.add(&prod);
            }
            c.set(vec![mask], v);
        }
        c
    }

    #[test]
    fn derivations_are_cocycles() {
        let d = derivation(3, &[vec![1, 2, 0], vec![0, -1, 3], vec![5, 0, 1]]);
        assert_eq!(d.parity(), Some(0));
        assert!(hoch_diff(&d, 2).unwrap().is_zero());
    }

    #[test]
    fn arity_two_differential_is_the_derivation_defect() {
        let n = 2;
        // keep only the degree-2 part of the argument
        let mut phi = Cochain::zero(n);
        phi.set(vec![3], xi(n, 3));
        let d = hoch_diff(&phi, 2).unwrap();
        let f = |a: u16| phi.eval(&[a]);
        for a2 in 0..4u16 {
            for a1 in 0..4u16 {
                let prod = xi(n, a2).wedge(&xi(n, a1)).unwrap();
                let f_prod = eval_multilinear(n, &|t: &[u16]| phi.eval(t), &[prod]);
                let defect = xi(n, a2).wedge(&f(a1)).unwrap().add(&f(a2).wedge(&xi(n, a1)).unwrap()).sub(&f_prod);
                let expected = if deg(a1) == 1 { defect.scale(&qi(-1)) } else { defect };
                assert_eq!(d.eval(&[a2, a1]), expected, "at ({a2}, {a1})");
            }
        }
    }

    #[test]
    fn product_is_associative() {
        let m = product_cochain(3);
        assert_eq!(m.parity(), Some(1));
        assert!(gerstenhaber(&m, &m, 3).unwrap().is_zero());
    }

    #[test]
    fn differential_is_bracket_with_product() {
        let n = 2;
        let mut phi = Cochain::zero(n);
        phi.set(vec![1, 2], xi(n, 0).scale(&qi(3)));
        phi.set(vec![3, 1], xi(n, 1));
        phi.set(vec![0, 2], xi(n, 2).scale(&qi(-2)));
        let d = hoch_diff(&phi, 3).unwrap();
        let b = gerstenhaber(&product_cochain(n), &phi, 3).unwrap();
        assert!(!d.is_zero());
        assert_eq!(d, b);
    }

    #[test]
    fn cap_is_enforced() {
        let mut phi = Cochain::zero(2);
        phi.set(vec![1, 1], xi(2, 0));
        assert_eq!(hoch_diff(&phi, 2), Err(HochError::CapExceeded { needed: 3, cap: 2 }));
        assert!(gerstenhaber(&phi, &phi, 2).is_err());
    }

    #[test]
    fn primitive_of_a_coboundary() {
        let n = 2;
        let mut phi = Cochain::zero(n);
        phi.set(vec![1, 2], xi(n, 0));
        phi.set(vec![2, 2], xi(n, 3).scale(&qi(2)));
        let target = hoch_diff(&phi, 3).unwrap();
        let p = phi.parity().unwrap();
        let sol = solve_primitive(&target, 3, p).unwrap();
        assert_eq!(hoch_diff(&sol, 3).unwrap(), target);
        // a non-closed target has no primitive
        let mut bad = Cochain::zero(n);
        bad.set(vec![1, 1, 1], xi(n, 0));
        assert!(!hoch_diff(&bad, 4).unwrap().is_zero());
        assert!(solve_primitive(&bad, 3, 0).is_none());
    }
}
