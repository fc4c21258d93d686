#![allow(dead_code)]

use dgla_core::{Dgla, Generator};
use exact_algebra::{qi, Q};

fn gen(name: String, degree: i32, level: u32) -> Generator {
    Generator { name, degree, level }
}

/// Filiform `L` (`[e1,e2]=e3`, `[e1,e3]=e4`) tensored with the CDGA
/// `span{1, u, du}`, `u² = u·du = 0`, `d u = du`. Generators are ordered
/// `eᵢ⊗1`, `eᵢ⊗u`, `eᵢ⊗du`.
pub fn filiform_forms() -> Dgla {
    let levels = [1u32, 1, 2, 3];
    let lie = [(0usize, 1usize, 2usize), (0, 2, 3)];
    let mut gens = Vec::new();
    for (part, deg) in [("1", 0), ("u", 0), ("du", 1)] {
        for (i, &l) in levels.iter().enumerate() {
            gens.push(gen(format!("e{}{part}", i + 1), deg, l));
        }
    }
    let at = |part: usize, i: usize| 4 * part + i;
    let mut diff = Vec::new();
    for i in 0..4 {
        diff.push((at(1, i), at(2, i), qi(1)));
    }
    // products of the CDGA: 1·a = a, everything else vanishes
    let mut bracket = Vec::new();
    for &(i, j, k) in &lie {
        for (pa, pb, pc) in [(0, 0, 0), (0, 1, 1), (1, 0, 1), (0, 2, 2), (2, 0, 2)] {
            bracket.push((at(pa, i), at(pb, j), at(pc, k), qi(1)));
        }
    }
    Dgla::new(gens, &diff, &bracket).unwrap()
}

/// `p, r` in degree 0 with `∂p = x`, `∂r = y`, `[x, y] = w`,
/// `[p, y] = [r, x] = s` and `∂s = w`.
pub fn odd_square() -> Dgla {
    let gens = vec![
        gen("p".into(), 0, 1),
        gen("r".into(), 0, 1),
        gen("x".into(), 1, 1),
        gen("y".into(), 1, 1),
        gen("s".into(), 1, 2),
        gen("w".into(), 2, 2),
    ];
    let diff = [(0, 2, qi(1)), (1, 3, qi(1)), (4, 5, qi(1))];
    let bracket = [(2, 3, 5, qi(1)), (0, 3, 4, qi(1)), (1, 2, 4, qi(1))];
    Dgla::new(gens, &diff, &bracket).unwrap()
}

/// Strictly upper triangular 4×4 matrices with the commutator bracket.
pub fn upper_triangular() -> (Dgla, Vec<(usize, usize)>) {
    let pos: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
    let gens = pos.iter().map(|&(i, j)| gen(format!("E{}{}", i + 1, j + 1), 0, (j - i) as u32)).collect();
    let mut bracket = Vec::new();
    for (a, &(i, j)) in pos.iter().enumerate() {
        for (b, &(k, l)) in pos.iter().enumerate() {
            if j == k {
                bracket.push((a, b, pos.iter().position(|&p| p == (i, l)).unwrap(), qi(1)));
            }
            if l == i {
                bracket.push((a, b, pos.iter().position(|&p| p == (k, j)).unwrap(), qi(-1)));
            }
        }
    }
    // supply one orientation per pair; the constructor mirrors it
    let bracket: Vec<_> = bracket.into_iter().filter(|&(a, b, _, _)| a < b).collect();
    (Dgla::new(gens, &[], &bracket).unwrap(), pos)
}

pub type Matrix = Vec<Vec<Q>>;

pub fn to_matrix(v: &[Q], pos: &[(usize, usize)]) -> Matrix {
    let mut m = vec![vec![qi(0); 4]; 4];
    for (c, &(i, j)) in v.iter().zip(pos) {
        m[i][j] = c.clone();
    }
    m
}
