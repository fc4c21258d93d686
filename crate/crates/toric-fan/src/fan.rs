use std::collections::BTreeMap;

use serde::Serialize;

use crate::lattice::{det3, IVec, QuotientLattice};
use crate::ToricError;

/// A ray with its generator scaled by `2g+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ray {
    pub label: String,
    pub scaled: IVec,
}

/// Simplicial fan: maximal cones as ray index triples, faces derived.
#[derive(Clone, Debug, Serialize)]
pub struct Fan {
    pub genus: u32,
    pub lattice: QuotientLattice,
    pub rays: Vec<Ray>,
    pub cones: Vec<[usize; 3]>,
}

/// Rays `v_k = (k, k, 2g+1−2k)/(2g+1)` for `0 ≤ k ≤ g` (so `v_0 = e_3`),
/// then `e_1`, `e_2`; cones `(v_k, v_{k+1}, e_1)`, `(v_k, v_{k+1}, e_2)` for
/// `0 ≤ k ≤ g−1` and `(v_g, e_1, e_2)`.
pub fn build_fan(g: u32) -> Result<Fan, ToricError> {
    let lattice = QuotientLattice::new(g)?;
    let s = lattice.scale;
    let gi = g as usize;
    let mut rays: Vec<Ray> =
        (0..=g as i64).map(|k| Ray { label: format!("v{k}"), scaled: [k, k, s - 2 * k] }).collect();
    rays.push(Ray { label: "e1".into(), scaled: [s, 0, 0] });
    rays.push(Ray { label: "e2".into(), scaled: [0, s, 0] });
    let (e1, e2) = (gi + 1, gi + 2);
    let mut cones = Vec::new();
    for k in 0..gi {
        cones.push([k, k + 1, e1]);
        cones.push([k, k + 1, e2]);
    }
    cones.push([gi, e1, e2]);
    Ok(Fan { genus: g, lattice, rays, cones })
}

impl Fan {
    pub fn ray_index(&self, label: &str) -> Option<usize> {
        self.rays.iter().position(|r| r.label == label)
    }

    fn gens(&self, c: &[usize; 3]) -> [IVec; 3] {
        [self.rays[c[0]].scaled, self.rays[c[1]].scaled, self.rays[c[2]].scaled]
    }

    pub fn cone_det(&self, c: &[usize; 3]) -> i64 {
        let [a, b, d] = self.gens(c);
        det3(&a, &b, &d)
    }

    /// Two-dimensional faces with the maximal cones containing them.
    pub fn walls(&self) -> BTreeMap<[usize; 2], Vec<usize>> {
        let mut out: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
        for (ci, c) in self.cones.iter().enumerate() {
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let (a, b) = (c[i].min(c[j]), c[i].max(c[j]));
                out.entry([a, b]).or_default().push(ci);
            }
        }
        out
    }

    /// Whether `w` lies in the cone, by Cramer's rule.
    pub fn cone_contains(&self, c: &[usize; 3], w: &IVec) -> bool {
        let [a, b, d] = self.gens(c);
        let total = det3(&a, &b, &d);
        let parts = [det3(w, &b, &d), det3(&a, w, &d), det3(&a, &b, w)];
        total != 0 && parts.iter().all(|&p| p * total.signum() >= 0)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeCheck {
    pub cone: Vec<String>,
    pub det: i64,
    pub unimodular: bool,
}

/// Each maximal cone against the lattice: its generators must be primitive
/// and form a basis of `N`.
pub fn smoothness_check(f: &Fan) -> Vec<ConeCheck> {
    f.cones
        .iter()
        .map(|c| {
            let gens = f.gens(c);
            ConeCheck {
                cone: c.iter().map(|&i| f.rays[i].label.clone()).collect(),
                det: f.cone_det(c),
                unimodular: gens.iter().all(|w| f.lattice.is_primitive(w)) && f.lattice.is_basis(&gens),
            }
        })
        .collect()
}

/// A primitive ray generator in `N` with coordinate sum one.
pub fn ray_is_crepant(lattice: &QuotientLattice, scaled: &IVec) -> bool {
    lattice.is_primitive(scaled) && scaled.iter().sum::<i64>() == lattice.scale
}

pub fn crepancy_check(f: &Fan) -> Vec<(String, bool)> {
    f.rays.iter().map(|r| (r.label.clone(), ray_is_crepant(&f.lattice, &r.scaled))).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SupportCheck {
    /// `Σ |det|` over maximal cones against the octant's `(2g+1)³`.
    pub volume_sum: i64,
    pub octant_volume: i64,
    pub in_octant: bool,
    /// Walls in two cones whose third rays lie on one side.
    pub folded_walls: Vec<[usize; 2]>,
    /// Walls in one cone that are not on a coordinate plane, or in more than two.
    pub bad_walls: Vec<[usize; 2]>,
    pub grid_points: usize,
    pub uncovered: Vec<IVec>,
}

impl SupportCheck {
    /// The cones triangulate the octant: local sheet count one everywhere.
    pub fn passed(&self) -> bool {
        self.in_octant
            && self.volume_sum == self.octant_volume
            && self.folded_walls.is_empty()
            && self.bad_walls.is_empty()
            && self.uncovered.is_empty()
    }
}

/// Support equals the positive octant and the cones meet along common faces.
///
/// All cones sit in the octant, interior walls separate their two cones,
/// boundary walls lie on coordinate planes, and the volumes add up to the
/// octant, so the cones cover it exactly once. Every lattice point of the
/// octant with coordinates at most `grid` is also located in some cone.
pub fn support_check(f: &Fan, grid: i64) -> SupportCheck {
    let s = f.lattice.scale;
    let in_octant = f.rays.iter().all(|r| r.scaled.iter().all(|&x| x >= 0));
    let volume_sum = f.cones.iter().map(|c| f.cone_det(c).abs()).sum();
    let mut folded_walls = Vec::new();
    let mut bad_walls = Vec::new();
    for (w, cs) in f.walls() {
        let third = |ci: usize| *f.cones[ci].iter().find(|&&r| r != w[0] && r != w[1]).unwrap();
        let side = |r: usize| det3(&f.rays[w[0]].scaled, &f.rays[w[1]].scaled, &f.rays[r].scaled).signum();
        match cs.len() {
            1 => {
                let (a, b) = (&f.rays[w[0]].scaled, &f.rays[w[1]].scaled);
                if !(0..3).any(|k| a[k] == 0 && b[k] == 0) {
                    bad_walls.push(w);
                }
            }
            2 => {
                if side(third(cs[0])) * side(third(cs[1])) != -1 {
                    folded_walls.push(w);
                }
            }
            _ => bad_walls.push(w),
        }
    }
    let mut uncovered = Vec::new();
    let mut grid_points = 0;
    for a in 0..=grid {
        for b in 0..=grid {
            for c in 0..=grid {
                let p = [a, b, c];
                if p == [0, 0, 0] {
                    continue;
                }
                grid_points += 1;
                if !f.cones.iter().any(|cone| f.cone_contains(cone, &p)) {
                    uncovered.push(p);
                }
            }
        }
    }
    SupportCheck { volume_sum, octant_volume: s.pow(3), in_octant, folded_walls, bad_walls, grid_points, uncovered }
}
