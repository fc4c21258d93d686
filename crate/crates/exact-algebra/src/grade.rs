use serde::{Deserialize, Serialize};

use crate::ext::mask_iter;
use crate::{AlgebraError, BKey, ExtElement, Monomial, Polynomial, Side};

/// Character of the diagonal group `(ℤ/(2g+1))² ⊂ SL(3)`, as residues.
pub type Weight = [u32; 2];

/// Parity, `2i − j + k` degree and group weight of a homogeneous term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriGrade {
    pub parity: u32,
    pub aux_degree: i64,
    pub weight: Weight,
}

impl TriGrade {
    pub fn combine(&self, other: &TriGrade, g: u32) -> TriGrade {
        TriGrade {
            parity: (self.parity + other.parity) % 2,
            aux_degree: self.aux_degree + other.aux_degree,
            weight: add_weights(self.weight, other.weight, g),
        }
    }

    pub fn of_key(k: &BKey, g: u32) -> TriGrade {
        let w = add_weights(mono_weight(&k.mono, g), mask_weight(Side::VDual, k.dz, g), g);
        TriGrade {
            parity: k.parity(),
            aux_degree: k.aux_degree(),
            weight: add_weights(w, mask_weight(Side::V, k.xi, g), g),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeightResult {
    Zero,
    Homogeneous(Weight),
    Inhomogeneous,
}

fn z_weight(k: usize, g: u32) -> Weight {
    let m = 2 * g + 1;
    match k {
        0 => [1, 0],
        1 => [0, 1],
        _ => [m - 1, m - 1],
    }
}

pub fn add_weights(a: Weight, b: Weight, g: u32) -> Weight {
    let m = 2 * g + 1;
    [(a[0] + b[0]) % m, (a[1] + b[1]) % m]
}

fn scale_weight(a: Weight, e: u32, g: u32) -> Weight {
    let m = (2 * g + 1) as u64;
    [((a[0] as u64 * e as u64) % m) as u32, ((a[1] as u64 * e as u64) % m) as u32]
}

pub fn negate_weight(a: Weight, g: u32) -> Weight {
    let m = 2 * g + 1;
    [(m - a[0] % m) % m, (m - a[1] % m) % m]
}

pub fn mono_weight(m: &Monomial, g: u32) -> Weight {
    let mut w = [0, 0];
    for (k, &e) in m.0.iter().enumerate() {
        w = add_weights(w, scale_weight(z_weight(k, g), e, g), g);
    }
    w
}

/// `dz_k` carries the weight of `z_k`; `ξ_k` the opposite one.
pub fn mask_weight(side: Side, mask: u16, g: u32) -> Weight {
    let mut w = [0, 0];
    for k in mask_iter(mask) {
        let zk = z_weight(k, g);
        w = add_weights(w, if side == Side::V { negate_weight(zk, g) } else { zk }, g);
    }
    w
}

fn collect<I: Iterator<Item = Weight>>(it: I) -> WeightResult {
    let mut out = WeightResult::Zero;
    for w in it {
        out = match out {
            WeightResult::Zero => WeightResult::Homogeneous(w),
            WeightResult::Homogeneous(v) if v == w => out,
            _ => return WeightResult::Inhomogeneous,
        };
    }
    out
}

/// Anything with a group weight under the diagonal action.
pub trait Weighted {
    fn g_weight(&self, g: u32) -> Result<WeightResult, AlgebraError>;
}

impl Weighted for Polynomial {
    fn g_weight(&self, g: u32) -> Result<WeightResult, AlgebraError> {
        if self.n() != 3 {
            return Err(AlgebraError::NoWeights);
        }
        Ok(collect(self.terms().map(|(m, _)| mono_weight(m, g))))
    }
}

impl Weighted for ExtElement {
    fn g_weight(&self, g: u32) -> Result<WeightResult, AlgebraError> {
        if self.n() != 3 {
            return Err(AlgebraError::NoWeights);
        }
        Ok(collect(self.terms().map(|(m, _)| mask_weight(self.side(), m, g))))
    }
}

/// Group weight of `x`, or `Inhomogeneous` when terms disagree.
pub fn g_weight<T: Weighted>(x: &T, g: u32) -> Result<WeightResult, AlgebraError> {
    x.g_weight(g)
}
