//! The Koszul matrix factorization `(Ω(V), ι_η + γ∧)` of a superpotential
//! and the retract `(i, p, h)` between `Λ(V)` and its endomorphism algebra.
//!
//! Elements of the endomorphism algebra are [`BElement`]s. Two differentials
//! act on them: the Koszul one `∂(fβ⊗θ) = −ι_η(fβ)⊗θ`, and the curved one
//! `∂̃ = ∂ + D` with `D(fβ⊗θ) = (−1)^{|β|−1} Σ g_k fβ ⊗ ι_{dz_k}θ`.

use exact_algebra::json::{polynomial_to_json, PolynomialJson};
use exact_algebra::{qi, BElement, BKey, ExtElement, Monomial, Polynomial, Q};
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MfError {
    #[error("superpotential has a term of degree {0} < 2")]
    LowDegree(u32),
    #[error("superpotential is zero")]
    ZeroPotential,
}

/// A superpotential `W` with its one-form `γ = Σ g_k dz_k`, `ι_η γ = W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MFData {
    pub w: Polynomial,
    pub gamma: Vec<Polynomial>,
    pub genus: Option<u32>,
}

/// `−z1 z2 z3 + z1^{2g+1} + z2^{2g+1} + z3^{2g+1}`.
pub fn superpotential(g: u32) -> Polynomial {
    let e = 2 * g + 1;
    Polynomial::from_terms(
        3,
        [(qi(-1), vec![1, 1, 1]), (qi(1), vec![e, 0, 0]), (qi(1), vec![0, e, 0]), (qi(1), vec![0, 0, e])],
    )
}

/// `γ = Σ_i dW_i / i` over the graded pieces `W_i` of `W`.
pub fn gamma_from_w(w: &Polynomial) -> Result<MFData, MfError> {
    if w.is_zero() {
        return Err(MfError::ZeroPotential);
    }
    if let Some(d) = w.filtration_order().filter(|&d| d < 2) {
        return Err(MfError::LowDegree(d));
    }
    let n = w.n();
    let mut gamma = vec![Polynomial::zero(n); n];
    for (m, c) in w.terms() {
        let part = Polynomial::monomial(n, m.clone(), c / Q::from_integer(m.degree().into()));
        for (k, g) in gamma.iter_mut().enumerate() {
            *g = g.add(&part.partial(k).expect("index in range"));
        }
    }
    Ok(MFData { w: w.clone(), gamma, genus: None })
}

impl MFData {
    pub fn for_genus(g: u32) -> MFData {
        let mut mf = gamma_from_w(&superpotential(g)).expect("valid superpotential");
        mf.genus = Some(g);
        mf
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    /// `Σ z_k g_k`, which equals `W` by construction.
    pub fn euler_contraction(&self) -> Polynomial {
        let n = self.n();
        (0..n).fold(Polynomial::zero(n), |acc, k| acc.add(&Polynomial::var(n, k).mul(&self.gamma[k])))
    }

    /// Keep only the parts of `γ` of polynomial degree `deg`.
    pub fn gamma_part(&self, deg: u32) -> MFData {
        MFData {
            w: self.w.homogeneous_part(deg + 1),
            gamma: self.gamma.iter().map(|g| g.homogeneous_part(deg)).collect(),
            genus: self.genus,
        }
    }

    pub fn to_json(&self) -> MfJson {
        MfJson {
            w: PolynomialJson::from(&self.w),
            gamma: self.gamma.iter().map(PolynomialJson::from).collect(),
            genus: self.genus,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MfJson {
    pub w: PolynomialJson,
    pub gamma: Vec<PolynomialJson>,
    pub genus: Option<u32>,
}

/// One-line JSON of `W`.
pub fn w_json(mf: &MFData) -> String {
    polynomial_to_json(&mf.w)
}

/// `∂(fβ⊗θ) = −ι_η(fβ)⊗θ`, i.e. `∂ = −[ι_η, ·]`. With this sign
/// `∂̃ = ∂ + D = −[δ_E, ·]` is the differential of `End(E)` and
/// `ip − id = ∂h + h∂`.
pub fn koszul_diff(b: &BElement) -> BElement {
    let n = b.n();
    let mut out = BElement::zero(n);
    for (k, c) in b.terms() {
        for j in exact_algebra::mask_iter(k.dz) {
            let before = (k.dz & ((1u16 << j) - 1)).count_ones();
            let mut mono = k.mono.clone();
            mono.0[j] += 1;
            let c = if before % 2 == 0 { -c.clone() } else { c.clone() };
            out.add_term(BKey { mono, dz: k.dz & !(1 << j), xi: k.xi }, c);
        }
    }
    out
}

/// `(∂̃ − ∂)(fβ⊗θ) = (−1)^{|β|−1} Σ_k g_k fβ ⊗ ι_{dz_k}θ`.
pub fn correction(b: &BElement, mf: &MFData) -> BElement {
    let n = b.n();
    let mut out = BElement::zero(n);
    for (k, c) in b.terms() {
        let sign = if k.dz.count_ones() % 2 == 1 { Q::one() } else { -Q::one() };
        for j in exact_algebra::mask_iter(k.xi) {
            let before = (k.xi & ((1u16 << j) - 1)).count_ones();
            let s = if before % 2 == 0 { sign.clone() } else { -sign.clone() };
            for (m, g) in mf.gamma[j].terms() {
                out.add_term(BKey { mono: k.mono.mul(m), dz: k.dz, xi: k.xi & !(1 << j) }, c * g * &s);
            }
        }
    }
    out
}

/// `∂̃ = ∂ + (∂̃ − ∂)`.
pub fn tilde_diff(b: &BElement, mf: &MFData) -> BElement {
    koszul_diff(b).add(&correction(b, mf))
}

/// `i(θ) = 1 ⊗ θ`.
pub fn retract_i(theta: &ExtElement) -> BElement {
    BElement::from_theta(theta)
}

/// `p(1⊗θ) = θ`, zero on every term with `r + s > 0`.
pub fn retract_p(b: &BElement) -> ExtElement {
    b.scalar_part()
}

/// `h(fβ⊗θ) = (1/w)(df∧β)⊗θ` with `w = r + s`; zero on scalars.
pub fn retract_h(b: &BElement) -> BElement {
    let n = b.n();
    let mut out = BElement::zero(n);
    for (k, c) in b.terms() {
        let w = k.mono.degree() + k.dz.count_ones();
        if w == 0 {
            continue;
        }
        let inv = Q::from_integer(w.into()).recip();
        for j in 0..n {
            let e = k.mono.0[j];
            if e == 0 || k.dz & (1 << j) != 0 {
                continue;
            }
            let mut mono = k.mono.clone();
            mono.0[j] -= 1;
            // dz_j ∧ dz_S
            let before = (k.dz & ((1u16 << j) - 1)).count_ones();
            let sign = if before % 2 == 0 { Q::one() } else { -Q::one() };
            out.add_term(BKey { mono, dz: k.dz | (1 << j), xi: k.xi }, c * Q::from_integer(e.into()) * &inv * sign);
        }
    }
    out
}

/// `δ_E = ι_η + γ∧` as an operator on `Ω(V)`.
pub fn delta_e(mf: &MFData) -> BElement {
    let n = mf.n();
    let euler: Vec<Polynomial> = (0..n).map(|k| Polynomial::var(n, k)).collect();
    BElement::contraction_by_field(&euler).add(&BElement::wedge_one_form(&mf.gamma))
}

/// `δ_E ∘ δ_E − W·id`, which vanishes.
pub fn delta_squared_defect(mf: &MFData) -> BElement {
    let d = delta_e(mf);
    let wid = BElement::identity(mf.n()).mul_poly(&mf.w);
    d.compose(&d).sub(&wid)
}

/// Graded commutator `[x, b] = x∘b − (−1)^{|x||b|} b∘x` for odd `x`.
pub fn odd_commutator(x: &BElement, b: &BElement) -> BElement {
    let mut out = x.compose(b);
    for (k, c) in b.terms() {
        let single = BElement::basis(b.n(), k.mono.clone(), k.dz, k.xi, c.clone());
        let t = single.compose(x);
        let t = if k.parity() == 1 { t } else { t.scale(&-Q::one()) };
        out.add_assign(&t);
    }
    out
}

/// All basis operators `z^m dz_S ⊗ ξ_T` with `|m| ≤ max_degree`.
pub fn tensor_basis(n: usize, max_degree: u32) -> Vec<BKey> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        for mono in Monomial::all_of_degree(n, d) {
            for dz in 0..(1u16 << n) {
                for xi in 0..(1u16 << n) {
                    out.push(BKey { mono: mono.clone(), dz, xi });
                }
            }
        }
    }
    out
}

/// Failures of the retract identities on one basis element.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RetractReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RetractReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check `pi = id`, `ip − id = ∂h + h∂`, `h² = 0`, `ph = 0`, `hi = 0`,
/// `∂² = 0`, `∂̃² = 0` and that `D` keeps the `Λ(V∨)` degree, over every
/// basis operator of polynomial degree at most `max_degree`.
pub fn check_retract(mf: &MFData, max_degree: u32) -> RetractReport {
    let n = mf.n();
    let mut rep = RetractReport::default();
    for theta in 0..(1u16 << n) {
        let t = ExtElement::basis(exact_algebra::Side::V, n, theta);
        rep.checked += 1;
        if retract_p(&retract_i(&t)) != t {
            rep.failures.push(format!("pi != id on mask {theta}"));
        }
        if !retract_h(&retract_i(&t)).is_zero() {
            rep.failures.push(format!("hi != 0 on mask {theta}"));
        }
    }
    for key in tensor_basis(n, max_degree) {
        rep.checked += 1;
        let b = BElement::basis(n, key.mono.clone(), key.dz, key.xi, Q::one());
        let h = retract_h(&b);
        let d = koszul_diff(&b);
        let ip = retract_i(&retract_p(&b));
        let lhs = ip.sub(&b);
        let rhs = koszul_diff(&h).add(&retract_h(&d));
        let label = format!("z^{:?} dz{} xi{}", key.mono.0, key.dz, key.xi);
        if lhs != rhs {
            rep.failures.push(format!("ip - id != dh + hd on {label}"));
        }
        if !retract_h(&h).is_zero() {
            rep.failures.push(format!("h^2 != 0 on {label}"));
        }
        if !retract_p(&h).is_zero() {
            rep.failures.push(format!("ph != 0 on {label}"));
        }
        if !koszul_diff(&d).is_zero() {
            rep.failures.push(format!("d^2 != 0 on {label}"));
        }
        if !tilde_diff(&tilde_diff(&b, mf), mf).is_zero() {
            rep.failures.push(format!("tilde d^2 != 0 on {label}"));
        }
        if correction(&b, mf).terms().any(|(k, _)| k.dz != key.dz) {
            rep.failures.push(format!("correction moves the dz degree on {label}"));
        }
    }
    rep
}
