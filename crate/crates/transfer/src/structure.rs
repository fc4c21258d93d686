use std::cell::RefCell;

use exact_algebra::{BElement, ExtElement};
use hochschild::{AInfStructure, Provenance};
use matrix_factorization::{tilde_diff, MFData};

use crate::{Transfer, TransferError};

/// The transferred operations behind the shared `AInfStructure` interface.
pub struct Transferred {
    inner: RefCell<Transfer>,
    n: usize,
    cap: usize,
}

impl Transferred {
    pub fn new(mf: MFData) -> Self {
        let n = mf.n();
        Transferred { inner: RefCell::new(Transfer::new(mf)), n, cap: usize::MAX }
    }

    /// Refuse queries above arity `cap` in the checked accessors.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn try_mu(&self, args: &[u16]) -> Result<ExtElement, TransferError> {
        self.check(args.len())?;
        Ok(self.mu(args))
    }

    pub fn try_f(&self, args: &[u16]) -> Result<BElement, TransferError> {
        self.check(args.len())?;
        Ok(self.f(args))
    }

    fn check(&self, arity: usize) -> Result<(), TransferError> {
        if arity > self.cap {
            return Err(TransferError::CapExceeded { arity, cap: self.cap });
        }
        Ok(())
    }

    pub fn for_genus(g: u32) -> Self {
        Self::new(MFData::for_genus(g))
    }

    pub fn f(&self, args: &[u16]) -> BElement {
        self.inner.borrow_mut().f(args)
    }

    pub fn mf(&self) -> MFData {
        self.inner.borrow().mf().clone()
    }
}

impl AInfStructure for Transferred {
    fn n(&self) -> usize {
        self.n
    }

    fn mu(&self, args: &[u16]) -> ExtElement {
        self.inner.borrow_mut().mu(args)
    }

    fn provenance(&self) -> Provenance {
        Provenance::Transferred
    }
}

/// Native-convention A∞-morphism equation for `f : Λ(V) → B_W` at `args`:
/// `Σ μ_B^r(f(…), …, f(…)) − Σ (−1)^{✠_k} f(…, μ(…), …)`, where
/// `μ_B¹(b) = (−1)^{|b|} ∂̃b`, `μ_B²(b₂, b₁) = (−1)^{|b₁|} b₂b₁` and
/// `✠_k = |a₁| + ⋯ + |a_k| − k`.
pub fn morphism_residual(t: &Transferred, args: &[u16]) -> BElement {
    let n = t.n;
    let mf = t.mf();
    let d = args.len();
    let fd = t.f(args);
    let mut lhs = tilde_diff(&fd.signed_by(|k| k.parity() == 1), &mf);
    for s in 1..d {
        let b2 = t.f(&args[..s]);
        let b1 = t.f(&args[s..]);
        lhs.add_assign(&b2.compose(&b1.signed_by(|k| k.parity() == 1)));
    }
    let mut rhs = BElement::zero(n);
    for l in 2..=d {
        let mut partial: i64 = 0;
        for k in 0..=(d - l) {
            if k > 0 {
                partial += hochschild::deg(args[d - k]) as i64 - 1;
            }
            let inner = t.mu(&args[d - k - l..d - k]);
            for (m, c) in inner.terms() {
                let mut tuple = args[..d - k - l].to_vec();
                tuple.push(m);
                tuple.extend_from_slice(&args[d - k..]);
                let v = t.f(&tuple).scale(c);
                if partial.rem_euclid(2) == 0 {
                    rhs.add_assign(&v);
                } else {
                    rhs = rhs.sub(&v);
                }
            }
        }
    }
    lhs.sub(&rhs)
}
