use std::collections::BTreeMap;

use exact_algebra::{linalg, Monomial, Polynomial, Q};
use num_traits::Zero;

use crate::{schouten, Polyvector, PolyvectorError};

/// Both components of the Maurer-Cartan residual of `α⁰ + α²` split by
/// exterior degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McSplit {
    /// `½[α², α²]`.
    pub poisson: Polyvector,
    /// `[α⁰, α²]`.
    pub compat: Polyvector,
    /// `ι_{dα⁰} α²`; equals `−[α⁰, α²]`.
    pub koszul: Polyvector,
}

impl McSplit {
    pub fn is_solution(&self) -> bool {
        self.poisson.is_zero() && self.compat.is_zero()
    }
}

pub fn mc_split_residual(alpha0: &Polynomial, alpha2: &Polyvector, order: u32) -> Result<McSplit, PolyvectorError> {
    if !alpha2.is_zero() && alpha2.lambda_degree() != Some(2) {
        return Err(PolyvectorError::WrongDegree { expected: 2 });
    }
    let a0 = Polyvector::function(alpha0);
    let half = Q::new(1.into(), 2.into());
    Ok(McSplit {
        poisson: schouten(alpha2, alpha2).scale(&half).truncate(order),
        compat: schouten(&a0, alpha2).truncate(order),
        koszul: alpha2.contract_df(alpha0).truncate(order),
    })
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Least-norm coefficients `x` with `Σ x_c images[c] = target`. The
/// columns split into connected components of the row-column incidence
/// graph and each component is solved on its own, which gives the same
/// least-norm solution as one dense solve. On failure returns the lowest
/// degree of the target inside a failing component.
fn block_solve(images: &[Polyvector], target: &Polyvector) -> Result<Vec<Q>, u32> {
    let mut rows: BTreeMap<(Monomial, u16), usize> = BTreeMap::new();
    for (m, s, _) in images.iter().flat_map(|i| i.terms()).chain(target.terms()) {
        let next = rows.len();
        rows.entry((m.clone(), s)).or_insert(next);
    }
    let mut parent: Vec<usize> = (0..rows.len()).collect();
    for img in images {
        let mut it = img.terms().map(|(m, s, _)| rows[&(m.clone(), s)]);
        if let Some(first) = it.next() {
            for r in it {
                let (a, b) = (find(&mut parent, first), find(&mut parent, r));
                parent[a] = b;
            }
        }
    }
    let mut cols_of: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (c, img) in images.iter().enumerate() {
        if let Some((m, s, _)) = img.terms().next() {
            let root = find(&mut parent, rows[&(m.clone(), s)]);
            cols_of.entry(root).or_default().push(c);
        }
    }
    let mut target_of: BTreeMap<usize, Vec<(usize, Q, u32)>> = BTreeMap::new();
    for (m, s, v) in target.terms() {
        let r = rows[&(m.clone(), s)];
        let root = find(&mut parent, r);
        target_of.entry(root).or_default().push((r, v.clone(), m.degree()));
    }
    let mut x = vec![Q::zero(); images.len()];
    for (root, t) in &target_of {
        let lowest = t.iter().map(|(_, _, d)| *d).min().unwrap_or(0);
        let Some(cols) = cols_of.get(root) else {
            return Err(lowest);
        };
        let mut local: BTreeMap<usize, usize> = BTreeMap::new();
        for &c in cols {
            for (m, s, _) in images[c].terms() {
                let next = local.len();
                local.entry(rows[&(m.clone(), s)]).or_insert(next);
            }
        }
        let mut a = linalg::zeros(local.len(), cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for (m, s, v) in images[c].terms() {
                a[local[&rows[&(m.clone(), s)]]][j] = v.clone();
            }
        }
        let mut b = vec![Q::zero(); local.len()];
        for (r, v, _) in t {
            b[local[r]] = v.clone();
        }
        let sol = linalg::solve_min_norm(&a, &b).ok_or(lowest)?;
        for (j, &c) in cols.iter().enumerate() {
            x[c] = sol[j].clone();
        }
    }
    Ok(x)
}

fn combine(basis: &[Polyvector], x: &[Q], n: usize) -> Polyvector {
    basis.iter().zip(x).filter(|(_, c)| !c.is_zero()).fold(Polyvector::zero(n), |acc, (b, c)| acc.add(&b.scale(c)))
}

/// A `Λ^{j+1}` element `γ` with `ι_{dW} γ ≡ −target mod F_order` for a
/// `Λʲ` target.
pub fn koszul_solve(w: &Polynomial, target: &Polyvector, order: u32) -> Result<Polyvector, PolyvectorError> {
    let n = w.n();
    let target = target.truncate(order);
    if target.is_zero() {
        return Ok(Polyvector::zero(n));
    }
    let j = target.lambda_degree().ok_or(PolyvectorError::WrongDegree { expected: 2 })?;
    if j as usize >= n {
        return Err(PolyvectorError::WrongDegree { expected: n as u32 - 1 });
    }
    let lift = w.filtration_order().unwrap_or(order).saturating_sub(1);
    let defect = target.contract_df(w).truncate(order + lift);
    if let Some(degree) = defect.filtration_order() {
        return Err(PolyvectorError::NotClosed { degree });
    }
    let masks: Vec<u16> = (0u16..1 << n).filter(|s| s.count_ones() == j + 1).collect();
    let mut basis = Vec::new();
    for d in 0..order.saturating_sub(lift) {
        for m in Monomial::all_of_degree(n, d) {
            for &s in &masks {
                basis.push(Polyvector::term(m.clone(), s, Q::from_integer(1.into())));
            }
        }
    }
    let images: Vec<Polyvector> = basis.iter().map(|b| b.contract_df(w).truncate(order)).collect();
    let x = block_solve(&images, &target.neg()).map_err(|degree| PolyvectorError::Unsolvable { degree })?;
    let gamma = combine(&basis, &x, n);
    debug_assert!(gamma.contract_df(w).add(&target).truncate(order).is_zero());
    Ok(gamma)
}

/// `p = Σ f_i ∂W/∂z_i + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealReduction {
    pub f: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl IdealReduction {
    /// `Σ f_i ξ_i`.
    pub fn field(&self) -> Polyvector {
        Polyvector::vector_field(&self.f)
    }
}

/// Writes `p ≡ Σ f_i ∂W/∂z_i mod F_order` with every `f_i` built from
/// monomials whose degree lies in `degrees`, taking the least-norm
/// coefficients. The remainder is exact: `p − Σ f_i ∂W/∂z_i`.
pub fn reduce_in_degrees(
    p: &Polynomial,
    w: &Polynomial,
    degrees: &[u32],
    order: u32,
) -> Result<IdealReduction, PolyvectorError> {
    let n = w.n();
    let dw: Vec<Polynomial> = (0..n).map(|i| w.partial(i).expect("index in range")).collect();
    let mut basis = Vec::new();
    let mut images = Vec::new();
    for &d in degrees {
        for m in Monomial::all_of_degree(n, d) {
            for (i, dwi) in dw.iter().enumerate() {
                let f = Polynomial::monomial(n, m.clone(), Q::from_integer(1.into()));
                let img = Polyvector::function(&f.mul(dwi)).truncate(order);
                if img.is_zero() {
                    continue;
                }
                basis.push((i, f));
                images.push(img);
            }
        }
    }
    let target = Polyvector::function(p).truncate(order);
    let x = block_solve(&images, &target).map_err(|_| PolyvectorError::NoDecomposition { order })?;
    let mut f = vec![Polynomial::zero(n); n];
    for ((i, m), c) in basis.iter().zip(&x) {
        if !c.is_zero() {
            f[*i] = f[*i].add(&m.scale(c));
        }
    }
    let mut remainder = p.clone();
    for (fi, dwi) in f.iter().zip(&dw) {
        remainder = remainder.sub(&fi.mul(dwi));
    }
    Ok(IdealReduction { f, remainder })
}

/// [`reduce_in_degrees`] for a homogeneous `p` of degree `e`, over all
/// coefficient degrees that can reach below `order`: from `e` minus the
/// top degree of `∂W` up to `order` minus its lowest degree.
pub fn ideal_reduce(p: &Polynomial, w: &Polynomial, order: u32) -> Result<IdealReduction, PolyvectorError> {
    let n = w.n();
    let Some(e) = p.filtration_order() else {
        return Ok(IdealReduction { f: vec![Polynomial::zero(n); n], remainder: Polynomial::zero(n) });
    };
    let lo = w.filtration_order().unwrap_or(1).saturating_sub(1);
    let hi = w.max_degree().unwrap_or(1).saturating_sub(1);
    let degrees: Vec<u32> = (e.saturating_sub(hi)..order.saturating_sub(lo)).collect();
    let r = reduce_in_degrees(p, w, &degrees, order)?;
    if r.remainder.filtration_order().is_some_and(|d| d < order) {
        return Err(PolyvectorError::NoDecomposition { order });
    }
    Ok(r)
}
