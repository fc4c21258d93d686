//! Seeded random central extensions `0 → h → g → L ⊗ k[ε]/ε² → 0` with
//! `L` abelian or Heisenberg and `|ε| = 1`.

use exact_algebra::{linalg, qi, Q};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dgla::{Dgla, Generator};
use crate::obstruction::CentralIdeal;

#[derive(Clone, Debug, PartialEq)]
pub struct RandomInstance {
    pub seed: u64,
    pub g: Dgla,
    pub h: CentralIdeal,
}

fn gen(name: String, degree: i32, level: u32) -> Generator {
    Generator { name, degree, level }
}

/// Total dimension is at most 8. The extension cocycle is a random integer
/// combination of a basis of all cocycles, so `h` is central by
/// construction and every axiom is re-checked by `Dgla::new`.
pub fn random_central_extension(seed: u64) -> RandomInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let heis = rng.gen_bool(0.5);
    // L: (levels, brackets)
    let (lev, lbr): (Vec<u32>, Vec<(usize, usize, usize)>) =
        if heis { (vec![1, 1, 2], vec![(0, 1, 2)]) } else { (vec![1, 1], vec![]) };
    let nl = lev.len();
    let mut gens = Vec::new();
    for (i, &l) in lev.iter().enumerate() {
        gens.push(gen(format!("a{i}"), 0, l));
    }
    for (i, &l) in lev.iter().enumerate() {
        gens.push(gen(format!("b{i}"), 1, l));
    }
    let mut bracket: Vec<(usize, usize, usize, Q)> = Vec::new();
    for &(i, j, k) in &lbr {
        bracket.push((i, j, k, qi(1)));
        bracket.push((i, nl + j, nl + k, qi(1)));
        bracket.push((nl + i, j, nl + k, qi(1)));
    }
    let nq = gens.len();
    let top = 2 * lev.iter().max().copied().unwrap_or(1);
    let patterns: &[[usize; 3]] = if heis {
        &[[0, 1, 1], [1, 1, 0], [0, 0, 2], [0, 2, 0], [1, 0, 1]]
    } else {
        &[[0, 1, 1], [1, 1, 1], [0, 2, 1], [1, 2, 0], [0, 1, 2], [1, 1, 2]]
    };
    let dims = patterns[rng.gen_range(0..patterns.len())];
    for (d, &count) in dims.iter().enumerate() {
        for i in 0..count {
            gens.push(gen(format!("h{d}_{i}"), d as i32, top));
        }
    }
    let n = gens.len();
    let hidx: Vec<usize> = (nq..n).collect();
    let of_deg = |d: i32| hidx.iter().copied().filter(|&k| gens[k].degree == d).collect::<Vec<_>>();
    // ∂ on h: at most one of h⁰ → h¹, h¹ → h² is nonzero
    let mut diff: Vec<(usize, usize, Q)> = Vec::new();
    let which = rng.gen_range(0..3);
    if which > 0 {
        let (src, dst) = if which == 1 { (of_deg(0), of_deg(1)) } else { (of_deg(1), of_deg(2)) };
        for &s in &src {
            for &t in &dst {
                let c: i64 = rng.gen_range(-1..=1);
                if c != 0 {
                    diff.push((s, t, qi(c)));
                }
            }
        }
    }
    // unknowns: θ(q_j) on h, ω(q_i, q_j) on h
    enum Unknown {
        Theta(usize, usize),
        Omega(usize, usize, usize),
    }
    let mut unknowns = Vec::new();
    for j in 0..nq {
        for &k in &hidx {
            if gens[k].degree == gens[j].degree + 1 {
                unknowns.push(Unknown::Theta(j, k));
            }
        }
    }
    for i in 0..nq {
        for j in i..nq {
            if i == j && gens[i].degree % 2 == 0 {
                continue;
            }
            for &k in &hidx {
                if gens[k].degree == gens[i].degree + gens[j].degree {
                    unknowns.push(Unknown::Omega(i, j, k));
                }
            }
        }
    }
    let build = |vals: &[Q], checked: bool| {
        let mut d = diff.clone();
        let mut b = bracket.clone();
        for (u, v) in unknowns.iter().zip(vals) {
            if v.is_zero() {
                continue;
            }
            match *u {
                Unknown::Theta(j, k) => d.push((j, k, v.clone())),
                Unknown::Omega(i, j, k) => b.push((i, j, k, v.clone())),
            }
        }
        // one orientation per pair so that contributions add up
        let b: Vec<_> = b
            .into_iter()
            .map(|(l, r, o, c)| {
                if l <= r {
                    (l, r, o, c)
                } else if (gens[l].degree * gens[r].degree) % 2 == 0 {
                    (r, l, o, -c)
                } else {
                    (r, l, o, c)
                }
            })
            .collect();
        if checked {
            Dgla::new(gens.clone(), &d, &b)
        } else {
            Dgla::unchecked(gens.clone(), &d, &b)
        }
    };
    // the axiom residuals are linear in the unknowns since h is central
    let cols: Vec<Vec<Q>> = (0..unknowns.len())
        .map(|u| {
            let g = build(&linalg::unit(unknowns.len(), u), false).expect("indices in range");
            g.axiom_residuals().into_iter().flat_map(|(_, v)| v).collect()
        })
        .collect();
    let rows: Vec<Vec<Q>> = if cols.is_empty() {
        Vec::new()
    } else {
        linalg::transpose(&cols).into_iter().filter(|r| r.iter().any(|c| !c.is_zero())).collect()
    };
    let kernel = linalg::nullspace(&rows, unknowns.len());
    let mut vals = vec![Q::zero(); unknowns.len()];
    for v in &kernel {
        let c = qi(rng.gen_range(-2..=2));
        for (x, y) in vals.iter_mut().zip(v) {
            *x += &c * y;
        }
    }
    let g = build(&vals, true).expect("cocycle combinations satisfy every axiom");
    let h = CentralIdeal::new(&g, &hidx).expect("h is central by construction");
    RandomInstance { seed, g, h }
}
