//! Sampled comparison of the obstruction classes with brute-force lift
//! searches on one central extension.

use exact_algebra::{linalg, qi};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dgla::{add, scale, Dgla, Vector};
use crate::homotopy::{homotopy_o1a, line_homotopy, PolyLineForm};
use crate::mc::{gauge_flow, mc_residual};
use crate::obstruction::{find_gauge_lift, find_mc_lift, obstruction_o1, obstruction_o2, CentralIdeal};
use crate::DglaError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaugeCase {
    pub x: String,
    pub shift: String,
    pub o1_zero: bool,
    pub o1a_zero: bool,
    pub gauge_lift_found: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftCase {
    pub alpha: String,
    pub o2_zero: bool,
    pub lift_found: bool,
    pub gauge: Option<GaugeCase>,
}

impl LiftCase {
    pub fn agrees(&self) -> bool {
        self.o2_zero == self.lift_found
            && self.gauge.as_ref().is_none_or(|c| c.o1_zero == c.gauge_lift_found && c.o1a_zero == c.o1_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub cases: Vec<LiftCase>,
}

impl SuiteReport {
    pub fn agrees(&self) -> bool {
        self.cases.iter().all(LiftCase::agrees)
    }

    pub fn count(&self, f: impl Fn(&LiftCase) -> bool) -> usize {
        self.cases.iter().filter(|c| f(c)).count()
    }
}

fn random_on(rng: &mut ChaCha8Rng, dim: usize, support: &[usize], range: i64) -> Vector {
    let mut v = vec![qi(0); dim];
    for &i in support {
        v[i] = qi(rng.gen_range(-range..=range));
    }
    v
}

/// Up to `samples` quotient MC elements with small integer coordinates. For
/// each, `o₂` is compared with an exhaustive lift search; when a lift exists
/// a random gauge pair is built with a random `Z¹(h)` shift and `o₁^X`,
/// `o₁^A` are compared with an exhaustive search for a compatible `X̃`.
pub fn obstruction_suite(g: &Dgla, h: &CentralIdeal, samples: usize, seed: u64) -> Result<SuiteReport, DglaError> {
    if !g.is_nilpotent() {
        return Err(DglaError::NotNilpotent);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hset = h.indices();
    let quotient = |d: i32| g.basis_of_degree(d).into_iter().filter(|i| !hset.contains(i)).collect::<Vec<_>>();
    let (q0, q1) = (quotient(0), quotient(1));
    let h1: Vec<usize> = hset.iter().copied().filter(|&i| g.degree(i) == 1).collect();
    // Z¹(h): kernel of ∂ on h¹
    let rows: Vec<Vector> = if h1.is_empty() {
        Vec::new()
    } else {
        linalg::transpose(&h1.iter().map(|&j| g.diff(&g.unit(j))).collect::<Vec<_>>())
    };
    let cocycles: Vec<Vector> = linalg::nullspace(&rows, h1.len())
        .into_iter()
        .map(|c| h1.iter().zip(&c).fold(g.zero(), |acc, (&j, cj)| add(&acc, &scale(&g.unit(j), cj))))
        .collect();
    let mut cases = Vec::new();
    for _ in 0..samples * 20 {
        if cases.len() == samples {
            break;
        }
        let alpha = random_on(&mut rng, g.dim(), &q1, 2);
        if !h.contains(&mc_residual(g, &alpha)?) {
            continue;
        }
        let o2 = obstruction_o2(g, h, &alpha)?;
        let lift = find_mc_lift(g, h, &alpha)?;
        let gauge = match &lift {
            None => None,
            Some(at) => {
                let x = random_on(&mut rng, g.dim(), &q0, 1);
                let mut shift = g.zero();
                for z in &cocycles {
                    shift = add(&shift, &scale(z, &qi(rng.gen_range(-1..=1))));
                }
                let bt = add(&gauge_flow(g, &x, at)?, &shift);
                let o1 = obstruction_o1(g, h, at, &bt, &x)?;
                let path = line_homotopy(g, &h.section(at), &x)?;
                let path = PolyLineForm {
                    p: path.p.iter().map(|c| h.section(c)).collect(),
                    q: path.q.iter().map(|c| h.section(c)).collect(),
                };
                let o1a = homotopy_o1a(g, h, at, &bt, &path)?;
                let found = find_gauge_lift(g, h, at, &bt, &x)?;
                Some(GaugeCase {
                    x: g.render(&x),
                    shift: g.render(&shift),
                    o1_zero: o1.is_zero,
                    o1a_zero: o1a.is_zero,
                    gauge_lift_found: found.is_some(),
                })
            }
        };
        cases.push(LiftCase { alpha: g.render(&alpha), o2_zero: o2.is_zero, lift_found: lift.is_some(), gauge });
    }
    Ok(SuiteReport { cases })
}
